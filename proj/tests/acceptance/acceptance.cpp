// Acceptance suite: one PASS/FAIL line per criterion, with its runtime and
// the pinned limit. Exits non-zero when any criterion fails.

#include <sys/wait.h>

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "random_objects.hpp"
#include "tambara/adjunction.hpp"
#include "tambara/axioms.hpp"
#include "tambara/bispan.hpp"
#include "tambara/burnside.hpp"
#include "tambara/evaluate.hpp"
#include "tambara/expression.hpp"
#include "tambara/finite_functor.hpp"
#include "tambara/free_functors.hpp"
#include "tambara/free_maps.hpp"
#include "tambara/right_adjoint.hpp"

namespace {

using namespace tambara;

// Collects failed checks; only the first few are kept for printing.
class Checks {
 public:
  void expect(bool ok, const std::function<std::string()>& what) {
    ++checked_;
    if (!ok) {
      ++failed_;
      if (notes_.size() < 8) {
        notes_.push_back(what());
      }
    }
  }
  void expect_report(const Report& report, const std::string& label) {
    expect(report.passed(), [&] { return label + ":\n" + report.to_string(); });
  }
  bool passed() const { return failed_ == 0; }
  std::size_t checked() const { return checked_; }
  std::size_t failed() const { return failed_; }
  const std::vector<std::string>& notes() const { return notes_; }

 private:
  std::size_t checked_ = 0;
  std::size_t failed_ = 0;
  std::vector<std::string> notes_;
};

struct Criterion {
  int id;
  std::string title;
  double limit_seconds;
  std::function<void(Checks&)> body;
};

std::string indent(const std::string& text) {
  std::string out = "    ";
  for (const char c : text) {
    out += c;
    if (c == '\n') {
      out += "    ";
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// 1. Burnside.

void burnside_suite(Checks& c) {
  const Burnside b;
  const auto& r = b.fixed();
  const auto t = Burnside::t();
  c.expect_report(check_tambara_axioms(b, CheckOptions::sampled(0, 1000)), "sampled axioms");
  c.expect(r.mul(t, t) == BurnsideElement{0, 2}, [] { return "t^2 != 2t"; });
  c.expect(b.tr(1) == t, [] { return "tr(1) != t"; });
  c.expect(b.norm(2) == BurnsideElement{2, 1}, [] { return "N(2) != 2 + t"; });
  c.expect(b.norm(-1) == BurnsideElement{-1, 1}, [] { return "N(-1) != t - 1"; });
  c.expect(format_burnside(b.norm(-1)) == "-1 + t", [] { return "N(-1) prints wrongly"; });
  // Coinduction: maps C2 -> {1..m}, the constant ones fixed, the rest paired.
  for (int m = 0; m <= 6; ++m) {
    long fixed = 0;
    long moved = 0;
    for (int i = 0; i < m; ++i) {
      for (int j = 0; j < m; ++j) {
        (i == j ? fixed : moved) += 1;
      }
    }
    c.expect(b.norm(m) == BurnsideElement{fixed, moved / 2},
             [&] { return "coinduction count differs at m = " + std::to_string(m); });
  }
}

// ---------------------------------------------------------------------------
// 2. Free functors.

template <class F>
void sampled_laws(Checks& c, const F& f, std::uint64_t seed, const std::string& name) {
  const auto options = CheckOptions::sampled(seed, 500);
  if constexpr (TambaraFunctor<F>) {
    c.expect_report(check_tambara_axioms(f, options), name);
  } else {
    c.expect_report(check_green_axioms(f, options), name);
  }
}

void free_suite(Checks& c) {
  sampled_laws(c, FreeGreenFixed{}, 100, "free Green, fixed generator");
  sampled_laws(c, FreeGreenUnderlying{}, 101, "free Green, underlying generator");
  sampled_laws(c, FreeTambaraFixed{}, 102, "free Tambara, fixed generator");
  sampled_laws(c, FreeTambaraUnderlying{}, 103, "free Tambara, underlying generator");

  const FreeTambaraUnderlying ft;
  const auto& rf = ft.fixed();
  const auto& fu = ft.underlying();
  const auto n = ft.norm_generator();
  for (unsigned i = 0; i <= 6; ++i) {
    for (unsigned j = 0; j <= 6; ++j) {
      const auto stored = rf.mul(ft.t_i(i), ft.t_i(j));
      const auto closed =
          rf.add(ft.t_i(i + j), rf.mul(power(rf, n, std::min(i, j)), ft.t_i(i > j ? i - j : j - i)));
      // Frobenius: tr(x^i)·tr(x^j) = tr(x^i·res tr(x^j)).
      const auto frobenius = ft.tr(fu.mul(fu.monomial({i, 0}), ft.res(ft.tr(fu.monomial({j, 0})))));
      const auto where = [i, j] { return std::to_string(i) + ", " + std::to_string(j); };
      c.expect(stored == closed, [&] { return "t_i t_j closed form at " + where(); });
      c.expect(stored == frobenius, [&] { return "t_i t_j Frobenius at " + where(); });
    }
  }

  const FreeGreenUnderlying fg;
  const auto& gu = fg.underlying();
  for (unsigned i = 0; i <= 6; ++i) {
    for (unsigned j = 0; j <= 6; ++j) {
      const auto where = [i, j] { return std::to_string(i) + ", " + std::to_string(j); };
      c.expect(fg.res(FreeGreenUnderlying::t_ij(i, j)) ==
                   gu.add(gu.monomial({i, j}), gu.monomial({j, i})),
               [&] { return "res(t_{i,j}) at " + where(); });
      c.expect(fg.tr(gu.monomial({i, j})) == FreeGreenUnderlying::t_ij(i, j),
               [&] { return "tr(x^i conj(x)^j) at " + where(); });
      c.expect(ft.tr(fu.monomial({i, j})) ==
                   rf.mul(power(rf, n, std::min(i, j)), ft.t_i(i > j ? i - j : j - i)),
               [&] { return "Tambara tr(x^i conj(x)^j) at " + where(); });
    }
  }
}

// ---------------------------------------------------------------------------
// 3. Norm of a sum.

template <class F>
void norm_of_sum(Checks& c, const F& f, std::uint64_t seed, const std::string& name) {
  std::mt19937_64 rng(seed);
  const SampleBounds bounds{4, 2, 4};
  const auto& rf = f.fixed();
  const auto& ru = f.underlying();
  for (int i = 0; i < 300; ++i) {
    const auto u = f.sample_underlying(rng, bounds);
    const auto v = f.sample_underlying(rng, bounds);
    const auto expected = rf.add(rf.add(f.norm(u), f.norm(v)), f.tr(ru.mul(u, f.conj(v))));
    c.expect(rf.equal(f.norm(ru.add(u, v)), expected),
             [&] { return name + ": u = " + ru.format(u) + ", v = " + ru.format(v); });
  }
}

void norm_suite(Checks& c) {
  norm_of_sum(c, FreeTambaraFixed{}, 300, "fixed generator");
  norm_of_sum(c, FreeTambaraUnderlying{}, 301, "underlying generator");

  // N(a·x^k + p) = N(a)·n^k + N(p) + tr(a·x^k·p) for deg p < k.
  const FreeTambaraFixed ff;
  const auto& rf = ff.fixed();
  const auto& ru = ff.underlying();
  std::mt19937_64 rng(302);
  for (int trial = 0; trial < 300; ++trial) {
    const unsigned k = 1 + static_cast<unsigned>(rng() % 4);
    const Integer a = sample_coefficient(rng, 2);
    const auto p = ff.sample_underlying(rng, {k - 1, 2, 4});
    const auto lead = ru.monomial({k}, a);
    const auto expected =
        rf.add(rf.add(rf.mul(ff.integer_norm(a), power(rf, ff.norm_generator(), k)), ff.norm(p)),
               ff.tr(ru.mul(lead, p)));
    c.expect(rf.equal(ff.norm(ru.add(lead, p)), expected),
             [&] { return "leading-term recursion at " + ru.format(ru.add(lead, p)); });
  }

  const FreeTambaraUnderlying fu;
  const auto x = fu.generator();
  const auto sum = fu.norm(fu.underlying().add(x, fu.conj(x)));
  const auto expected = fu.fixed().add(fu.fixed().add(fu.norm_generator(), fu.norm_generator()),
                                       fu.tr(fu.underlying().mul(x, x)));
  c.expect(sum == expected, [&] { return "N(x + conj(x)) = " + fu.fixed().format(sum); });
  c.expect(fu.fixed().format(sum) == "2n + t_2", [&] { return "printed " + fu.fixed().format(sum); });
}

// ---------------------------------------------------------------------------
// 4. Bispans.

ElementTuple<Burnside> random_tuple(std::mt19937_64& rng, const GSet& s) {
  const Burnside b;
  ElementTuple<Burnside> out;
  for (std::size_t i = 0; i < s.fixed_count(); ++i) {
    out.fixed.push_back(b.sample_fixed(rng));
  }
  for (std::size_t j = 0; j < s.free_orbit_count(); ++j) {
    out.free.push_back(b.sample_underlying(rng));
  }
  return out;
}

void bispan_suite(Checks& c) {
  using tambara::testing::all_gsets;
  using tambara::testing::all_maps;
  using tambara::testing::random_bispan;
  using tambara::testing::random_gset;
  const Burnside burnside;
  std::mt19937_64 rng(400);
  for (int trial = 0; trial < 200; ++trial) {
    const auto indexing = trial % 4 == 0 ? IndexingSystem::trivial : IndexingSystem::complete;
    const GSet a = random_gset(rng, 4);
    const GSet b = random_gset(rng, 4);
    const GSet cc = random_gset(rng, 4);
    const GSet d = random_gset(rng, 4);
    const Bispan p = random_bispan(rng, a, b, indexing);
    const Bispan q = random_bispan(rng, b, cc, indexing);
    const Bispan r = random_bispan(rng, cc, d, indexing);
    c.expect(compose(r, compose(q, p)) == compose(compose(r, q), p),
             [&] { return "associativity: p = " + p.to_string(); });
    c.expect(compose(identity_bispan(b, indexing), p) == p &&
                 compose(p, identity_bispan(a, indexing)) == p,
             [&] { return "identity: p = " + p.to_string(); });
    const auto x = random_tuple(rng, a);
    const auto composite = evaluate(compose(r, compose(q, p)), burnside, x);
    const auto stepwise =
        evaluate(r, burnside, evaluate(q, burnside, evaluate(p, burnside, x)));
    c.expect(tuples_equal(burnside, composite, stepwise), [&] {
      return "functoriality: " + format_tuple(burnside, composite) + " vs " +
             format_tuple(burnside, stepwise);
    });
  }

  const auto sources = all_gsets(4);
  const auto targets = all_gsets(4);
  for (const auto& s : sources) {
    for (const auto& t : targets) {
      for (const auto& g : all_maps(s, t)) {
        for (const auto& a : sources) {
          for (const auto& h : all_maps(a, s)) {
            const ExponentialDiagram d = exponential_diagram(g, h);
            const auto x = random_tuple(rng, a);
            const auto left = evaluate(make_N(g, IndexingSystem::complete), burnside,
                                       evaluate(make_T(h), burnside, x));
            auto right = evaluate(make_R(d.evaluation), burnside, x);
            right = evaluate(make_N(d.projection, IndexingSystem::complete), burnside, right);
            right = evaluate(make_T(d.structure), burnside, right);
            c.expect(tuples_equal(burnside, left, right), [&] {
              return "exponential diagram: " + format_tuple(burnside, left) + " vs " +
                     format_tuple(burnside, right);
            });
          }
        }
      }
    }
  }
}

// ---------------------------------------------------------------------------
// 5. Right adjoint.

FiniteFunctor swap_square() {
  const TableRing z2 = integers_mod(2);
  const TableRing ring = product_ring(z2, z2);
  std::vector<TableElement> sigma;
  for (const auto e : ring.elements()) {
    const std::string& name = ring.name(e);
    const auto comma = name.find(',');
    const std::string a = name.substr(1, comma - 1);
    const std::string b = name.substr(comma + 1, name.size() - comma - 2);
    sigma.push_back(*ring.find("(" + b + "," + a + ")"));
  }
  return fixed_point_functor(ring, sigma);
}

FiniteFunctor fixed_point_z2() {
  const TableRing z2 = integers_mod(2);
  return fixed_point_functor(z2, z2.elements());
}

void right_adjoint_suite(Checks& c) {
  const std::vector<std::pair<std::string, FiniteFunctor>> fixtures{
      {"burnside_mod(2)", burnside_mod(2)},
      {"burnside_mod(3)", burnside_mod(3)},
      {"fixed_point(Z/2, id)", fixed_point_z2()},
      {"fixed_point(Z/2 x Z/2, swap)", swap_square()}};
  for (const auto& [name, r] : fixtures) {
    const RightAdjoint<FiniteFunctor> f(r);
    c.expect_report(check_tambara_axioms(f), "F(" + name + ")");
    const auto& ff = f.fixed();
    const auto& fu = f.underlying();
    const auto fixed = f.fixed_elements();
    const auto under = f.underlying_elements();
    for (const auto& a : fixed) {
      for (const auto& b : fixed) {
        c.expect(ff.contains(ff.add(a, b)) && ff.contains(ff.mul(a, b)),
                 [&] { return name + ": fixed closure at " + ff.format(a) + ", " + ff.format(b); });
      }
      c.expect(ff.contains(ff.neg(a)) && fu.contains(f.res(a)),
               [&] { return name + ": fixed closure at " + ff.format(a); });
    }
    for (const auto& u : under) {
      for (const auto& v : under) {
        c.expect(fu.contains(fu.add(u, v)) && fu.contains(fu.mul(u, v)),
                 [&] { return name + ": underlying closure at " + fu.format(u) + ", " + fu.format(v); });
        if (u.n == v.n) {
          c.expect(ff.equal(f.norm(u), f.norm(v)),
                   [&] { return name + ": norm sees x at " + fu.format(u) + ", " + fu.format(v); });
        }
      }
      c.expect(fu.contains(fu.neg(u)) && fu.contains(f.conj(u)) && ff.contains(f.tr(u)) &&
                   ff.contains(f.norm(u)),
               [&] { return name + ": underlying closure at " + fu.format(u); });
    }
  }

  const FiniteFunctor bm2 = burnside_mod(2);
  const RightAdjoint<FiniteFunctor> f(bm2);
  const std::size_t fixed = f.fixed_elements().size();
  const std::size_t under = f.underlying_elements().size();
  c.expect(fixed == 8, [&] { return "|F(burnside_mod(2))(C2/C2)| = " + std::to_string(fixed) + ", want 8"; });
  c.expect(under == 8, [&] { return "|F(burnside_mod(2))(C2/e)| = " + std::to_string(under) + ", want 8"; });
}

// ---------------------------------------------------------------------------
// 6. Adjunction.

void adjunction_suite(Checks& c) {
  const FiniteFunctor bm2 = burnside_mod(2);
  const std::vector<std::tuple<std::string, FiniteFunctor, FiniteFunctor>> pairs{
      {"fixed_point(Z/2, id) / burnside_mod(2)", fixed_point_z2(), bm2},
      {"burnside_mod(3) / burnside_mod(3)", burnside_mod(3), burnside_mod(3)},
      {"F(burnside_mod(2)) / burnside_mod(2)", tabulate_right_adjoint(bm2), bm2},
      {"zero / zero", zero_functor(), zero_functor()}};
  for (const auto& [name, s, r] : pairs) {
    const AdjunctionResult result = verify_adjunction(s, r);
    c.expect_report(result.report, name);
    c.expect(result.green_hom_count == result.tambara_hom_count, [&] {
      return name + ": " + std::to_string(result.green_hom_count) + " vs " +
             std::to_string(result.tambara_hom_count) + " homs";
    });
  }
}

// ---------------------------------------------------------------------------
// 7. Yoneda.

void yoneda_suite(Checks& c) {
  for (const unsigned n : {2u, 3u}) {
    const FiniteFunctor f = burnside_mod(n);
    const std::string name = "burnside_mod(" + std::to_string(n) + ")";
    for (const auto a : f.fixed_elements()) {
      c.expect_report(yoneda_check_fixed(f, a, 3), name + " fixed " + f.fixed().name(a));
    }
    for (const auto u : f.underlying_elements()) {
      c.expect_report(yoneda_check_underlying(f, u, 3), name + " underlying " + f.underlying().name(u));
    }
  }
}

// ---------------------------------------------------------------------------
// 8. CLI.

#ifdef TAMBARA_CLI
struct Outcome {
  int status = -1;
  std::string out;
};

Outcome run_cli(const std::string& args) {
  const std::string command = std::string(TAMBARA_CLI) + " " + args + " 2>/dev/null";
  Outcome r;
  FILE* pipe = popen(command.c_str(), "r");
  if (pipe == nullptr) {
    return r;
  }
  std::array<char, 4096> buffer{};
  std::size_t n = 0;
  while ((n = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) {
    r.out.append(buffer.data(), n);
  }
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

std::string data(const std::string& name) {
  return std::string("'") + TAMBARA_TEST_DATA + "/" + name + "'";
}
#endif

void cli_suite(Checks& c) {
#ifdef TAMBARA_CLI
  const std::vector<std::pair<std::string, std::string>> golden{
      {"eval --functor builtin:free-tambara-underlying --level fixed 'N(x+conj(x))'", "2n + t_2\n"},
      {"eval --functor builtin:burnside --level fixed 't*t - 2*t'", "0\n"},
      {"eval --functor builtin:free-tambara-fixed --level fixed 'tr(x^3)'", "t*x*n\n"}};
  for (const auto& [args, want] : golden) {
    const Outcome r = run_cli(args);
    c.expect(r.status == 0 && r.out == want, [&] {
      return args + " gave exit " + std::to_string(r.status) + " and '" + r.out + "'";
    });
  }
  const Outcome malformed = run_cli("axioms " + data("malformed.json"));
  c.expect(malformed.status == 2,
           [&] { return "malformed JSON exit " + std::to_string(malformed.status); });
  const Outcome level = run_cli("eval --functor builtin:free-tambara-underlying --level fixed 'x'");
  c.expect(level.status == 2, [&] { return "level error exit " + std::to_string(level.status); });
  const Outcome broken = run_cli("axioms --exhaustive " + data("broken_transfer.json"));
  c.expect(broken.status == 1 && broken.out.find("FAIL res_tr") != std::string::npos &&
               broken.out.find("u = ") != std::string::npos,
           [&] { return "broken table exit " + std::to_string(broken.status) + ":\n" + broken.out; });
#else
  c.expect(false, [] { return "the command-line tool was not built"; });
#endif
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "Burnside suite", 1.0, burnside_suite},
      {2, "free-functor identity suite", 5.0, free_suite},
      {3, "norm-of-sum reproduction", 5.0, norm_suite},
      {4, "bispan category suite", 30.0, bispan_suite},
      {5, "right-adjoint suite", 10.0, right_adjoint_suite},
      {6, "adjunction suite", 60.0, adjunction_suite},
      {7, "Yoneda suite", 10.0, yoneda_suite},
      {8, "CLI golden tests", 10.0, cli_suite},
  };
  int failures = 0;
  for (const auto& criterion : criteria) {
    Checks checks;
    std::string error;
    const auto start = std::chrono::steady_clock::now();
    try {
      criterion.body(checks);
    } catch (const std::exception& e) {
      error = e.what();
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = seconds < criterion.limit_seconds;
    const bool ok = checks.passed() && error.empty() && in_time;
    failures += !ok;
    std::cout << (ok ? "PASS" : "FAIL") << " " << criterion.id << " " << criterion.title << " ("
              << checks.checked() - checks.failed() << "/" << checks.checked() << " checks, "
              << std::fixed << std::setprecision(2) << seconds << " s, limit "
              << std::setprecision(0) << criterion.limit_seconds << " s)\n";
    if (!error.empty()) {
      std::cout << indent("exception: " + error) << "\n";
    }
    if (!in_time) {
      std::cout << indent("over the time limit") << "\n";
    }
    for (const auto& note : checks.notes()) {
      std::cout << indent(note) << "\n";
    }
  }
  std::cout << (criteria.size() - failures) << " of " << criteria.size() << " criteria pass\n";
  return failures == 0 ? 0 : 1;
}
