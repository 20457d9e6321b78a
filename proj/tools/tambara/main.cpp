// tambara: command-line front end.
//
// Exit codes: 0 success, 1 an axiom or adjunction check failed, 2 bad input.

#include <unistd.h>

#include <CLI11.hpp>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "functor_source.hpp"
#include "tambara/adjunction.hpp"
#include "tambara/axioms.hpp"
#include "tambara/bispan.hpp"
#include "tambara/evaluate.hpp"
#include "tambara/json_io.hpp"
#include "tambara/right_adjoint.hpp"

namespace tambara::cli {
namespace {

constexpr int exit_ok = 0;
constexpr int exit_violation = 1;
constexpr int exit_input = 2;

bool use_color() { return std::getenv("NO_COLOR") == nullptr && isatty(fileno(stdout)) != 0; }

// Colors the leading PASS/FAIL of report lines on terminals.
std::string paint(const std::string& report) {
  if (!use_color()) {
    return report;
  }
  std::istringstream lines(report);
  std::string out;
  for (std::string line; std::getline(lines, line);) {
    if (line.rfind("PASS", 0) == 0) {
      line = "\033[32mPASS\033[0m" + line.substr(4);
    } else if (line.rfind("FAIL", 0) == 0) {
      line = "\033[31mFAIL\033[0m" + line.substr(4);
    }
    out += line + "\n";
  }
  return out;
}

int print_report(const Report& report) {
  std::cout << paint(report.to_string());
  std::cout << (report.passed() ? "all identities hold" : "identities violated") << "\n";
  return report.passed() ? exit_ok : exit_violation;
}

// --- axioms ---------------------------------------------------------------

struct AxiomsArgs {
  std::string functor;
  bool tambara = false;
  bool exhaustive = false;
  std::optional<std::size_t> samples;
  std::uint64_t seed = 0;
};

int run_axioms(const AxiomsArgs& args) {
  const AnyFunctor functor = load_functor(args.functor);
  return std::visit(
      [&](const auto& f) {
        using F = std::decay_t<decltype(f)>;
        CheckOptions options = CheckOptions::exhaustive();
        const bool enumerable = EnumerableFunctor<F>;
        if (args.samples || (!args.exhaustive && !enumerable)) {
          options = CheckOptions::sampled(args.seed, args.samples.value_or(1000));
        }
        const Report report =
            args.tambara ? check_tambara_axioms(f, options) : check_green_axioms(f, options);
        return print_report(report);
      },
      functor);
}

// --- eval and free normalize ----------------------------------------------

struct EvalArgs {
  std::string functor;
  std::string level = "fixed";
  std::string generator = "fixed";
  std::vector<std::string> bindings;
  std::string expression;
};

int evaluate_in(const AnyFunctor& functor, GeneratorLevel generator, Level level,
                const std::vector<std::string>& bindings, const std::string& expression) {
  const std::string out = std::visit(
      [&](const auto& f) {
        auto x = initial_binding(f, generator);
        for (const auto& b : bindings) {
          apply_binding(f, x, b);
        }
        return evaluate_expression(expression, f, x, level);
      },
      functor);
  std::cout << out << "\n";
  return exit_ok;
}

int run_eval(const EvalArgs& args) {
  return evaluate_in(load_functor(args.functor), parse_generator_level(args.generator),
                     parse_level(args.level), args.bindings, args.expression);
}

struct NormalizeArgs {
  std::string generator = "fixed";
  std::string system = "complete";
  std::string level = "fixed";
  std::string expression;
};

int run_normalize(const NormalizeArgs& args) {
  const GeneratorLevel generator = parse_generator_level(args.generator);
  return evaluate_in(free_functor(generator, parse_indexing_system(args.system)), generator,
                     parse_level(args.level), {}, args.expression);
}

// --- bispan ---------------------------------------------------------------

int run_compose(const std::string& a, const std::string& b) {
  const Bispan outer = bispan_from_json(read_json_file(a));
  const Bispan inner = bispan_from_json(read_json_file(b));
  std::cout << to_json(compose(outer, inner)).dump(2) << "\n";
  return exit_ok;
}

struct BispanEvalArgs {
  std::string functor;
  std::string input;
  std::string bispan;
  std::string generator = "fixed";
  std::vector<std::string> bindings;
};

int run_bispan_eval(const BispanEvalArgs& args) {
  const Bispan p = bispan_from_json(read_json_file(args.bispan));
  const Json input = read_json_file(args.input);
  const AnyFunctor functor = load_functor(args.functor);
  const Json out = std::visit(
      [&](const auto& f) {
        using F = std::decay_t<decltype(f)>;
        auto x = initial_binding(f, parse_generator_level(args.generator));
        for (const auto& b : args.bindings) {
          apply_binding(f, x, b);
        }
        ElementTuple<F> tuple;
        auto strings = [&](const char* key) {
          if (!input.is_object() || !input.contains(key) || !input.at(key).is_array()) {
            throw InputError(std::string("input tuple needs an array \"") + key + "\"");
          }
          std::vector<std::string> values;
          for (const auto& v : input.at(key)) {
            if (!v.is_string()) {
              throw InputError(std::string("input tuple: \"") + key + "\" holds strings");
            }
            values.push_back(v.template get<std::string>());
          }
          return values;
        };
        for (const auto& s : strings("fixed")) {
          tuple.fixed.push_back(parse_fixed(f, x, s));
        }
        for (const auto& s : strings("free")) {
          tuple.free.push_back(parse_underlying(f, x, s));
        }
        const ElementTuple<F> result = evaluate(p, f, tuple);
        Json fixed = Json::array();
        Json free = Json::array();
        for (const auto& a : result.fixed) {
          fixed.push_back(f.fixed().format(a));
        }
        for (const auto& u : result.free) {
          free.push_back(f.underlying().format(u));
        }
        return Json{{"fixed", fixed}, {"free", free}};
      },
      functor);
  std::cout << out.dump() << "\n";
  return exit_ok;
}

// --- radjoint and adjunction ----------------------------------------------

FiniteFunctor load_table(const std::string& source) {
  AnyFunctor functor = load_functor(source);
  if (auto* table = std::get_if<FiniteFunctor>(&functor)) {
    return std::move(*table);
  }
  throw InputError(source + " is not a finite table functor");
}

void print_ring_tables(const char* level, const TableRing& r) {
  for (const auto& [name, table] : {std::pair{"add", &r.add_table()}, {"mul", &r.mul_table()}}) {
    std::cout << level << " " << name << ":\n";
    for (std::size_t i = 0; i < r.size(); ++i) {
      std::cout << "  " << r.names()[i] << ":";
      for (const auto e : (*table)[i]) {
        std::cout << "  " << r.name(e);
      }
      std::cout << "\n";
    }
  }
}

void print_map(const char* name, const FiniteFunctor::Map& m, const TableRing& from,
               const TableRing& to) {
  std::cout << name << ":\n";
  for (std::size_t i = 0; i < m.size(); ++i) {
    std::cout << "  " << from.names()[i] << " -> " << to.name(m[i]) << "\n";
  }
}

struct RadjointArgs {
  std::string functor;
  bool print_table = false;
  bool check_axioms = false;
  bool json = false;
};

int run_radjoint(const RadjointArgs& args) {
  const FiniteFunctor r = load_table(args.functor);
  const FiniteFunctor f = tabulate_right_adjoint(r);
  if (args.json) {
    std::cout << to_json(f).dump(2) << "\n";
  } else {
    auto carrier = [](const char* level, const TableRing& ring) {
      std::cout << level << " (" << ring.size() << "):";
      for (const auto& name : ring.names()) {
        std::cout << " " << name;
      }
      std::cout << "\n";
    };
    carrier("fixed", f.fixed());
    carrier("underlying", f.underlying());
    if (args.print_table) {
      print_ring_tables("fixed", f.fixed());
      print_ring_tables("underlying", f.underlying());
      print_map("conj", f.conj_map(), f.underlying(), f.underlying());
      print_map("res", f.res_map(), f.fixed(), f.underlying());
      print_map("tr", f.tr_map(), f.underlying(), f.fixed());
      print_map("norm", *f.norm_map(), f.underlying(), f.fixed());
    }
  }
  if (args.check_axioms) {
    const Report report = check_tambara_axioms(f, CheckOptions::exhaustive());
    if (args.json) {
      std::cerr << report.to_string();
      return report.passed() ? exit_ok : exit_violation;
    }
    return print_report(report);
  }
  return exit_ok;
}

int run_adjunction(const std::string& green, const std::string& tambara) {
  const FiniteFunctor r = load_table(green);
  const FiniteFunctor s = load_table(tambara);
  const AdjunctionResult result = verify_adjunction(s, r);
  std::cout << "|Green(iS, R)| = " << result.green_hom_count << "\n";
  std::cout << "|Tambara(S, F(R))| = " << result.tambara_hom_count << "\n";
  return print_report(result.report);
}

int run(int argc, char** argv) {
  CLI::App app{"Exact C2-equivariant commutative algebra: Burnside and free Tambara functors, "
               "bispans and the right adjoint to forgetting norms."};
  app.name("tambara");
  app.require_subcommand(1);
  int code = exit_ok;

  AxiomsArgs axioms;
  auto* axioms_cmd = app.add_subcommand("axioms", "Check Green (or Tambara) functor axioms");
  axioms_cmd->add_option("functor", axioms.functor, "JSON table file or builtin:<name>")
      ->required();
  axioms_cmd->add_flag("--tambara", axioms.tambara, "Also check the norm laws");
  auto* exhaustive = axioms_cmd->add_flag("--exhaustive", axioms.exhaustive,
                                          "Check every element (default for tables)");
  auto* samples = axioms_cmd->add_option("--samples", axioms.samples, "Number of random draws");
  axioms_cmd->add_option("--seed", axioms.seed, "Seed for sampled checks")->needs(samples);
  exhaustive->excludes(samples);
  axioms_cmd->callback([&] { code = run_axioms(axioms); });

  EvalArgs eval;
  auto* eval_cmd = app.add_subcommand("eval", "Evaluate an expression in a functor");
  eval_cmd->add_option("--functor", eval.functor, "JSON table file or builtin:<name>")
      ->required();
  eval_cmd->add_option("--level", eval.level, "Level of the result")
      ->check(CLI::IsMember({"fixed", "underlying"}));
  eval_cmd->add_option("--generator", eval.generator, "Level of x for non-free functors")
      ->check(CLI::IsMember({"fixed", "underlying"}));
  eval_cmd->add_option("--bind", eval.bindings, "x=<element> for non-free functors");
  eval_cmd->add_option("expression", eval.expression, "Expression to evaluate")->required();
  eval_cmd->callback([&] { code = run_eval(eval); });

  NormalizeArgs normalize;
  auto* free_cmd = app.add_subcommand("free", "Free Green and Tambara functors");
  free_cmd->require_subcommand(1);
  auto* normalize_cmd = free_cmd->add_subcommand("normalize", "Print a normal form");
  normalize_cmd->add_option("--generator", normalize.generator, "Level of the generator x")
      ->check(CLI::IsMember({"fixed", "underlying"}));
  normalize_cmd->add_option("--system", normalize.system, "trivial (Green) or complete (Tambara)")
      ->check(CLI::IsMember({"trivial", "complete"}));
  normalize_cmd->add_option("--level", normalize.level, "Level of the result")
      ->check(CLI::IsMember({"fixed", "underlying"}));
  normalize_cmd->add_option("expression", normalize.expression, "Expression to normalize")
      ->required();
  normalize_cmd->callback([&] { code = run_normalize(normalize); });

  auto* bispan_cmd = app.add_subcommand("bispan", "Bispan composition and evaluation");
  bispan_cmd->require_subcommand(1);
  std::string compose_a;
  std::string compose_b;
  auto* compose_cmd = bispan_cmd->add_subcommand("compose", "Print the composite A∘B");
  compose_cmd->add_option("A", compose_a, "Outer bispan (applied second)")->required();
  compose_cmd->add_option("B", compose_b, "Inner bispan (applied first)")->required();
  compose_cmd->callback([&] { code = run_compose(compose_a, compose_b); });

  BispanEvalArgs bispan_eval;
  auto* bispan_eval_cmd = bispan_cmd->add_subcommand("eval", "Evaluate a bispan on a tuple");
  bispan_eval_cmd->add_option("--functor", bispan_eval.functor, "JSON table file or builtin:<name>")
      ->required();
  bispan_eval_cmd->add_option("--input", bispan_eval.input, "Tuple JSON {\"fixed\": [..], \"free\": [..]}")
      ->required();
  bispan_eval_cmd->add_option("--generator", bispan_eval.generator, "Level of x for non-free functors")
      ->check(CLI::IsMember({"fixed", "underlying"}));
  bispan_eval_cmd->add_option("--bind", bispan_eval.bindings, "x=<element> for non-free functors");
  bispan_eval_cmd->add_option("bispan", bispan_eval.bispan, "Bispan JSON")->required();
  bispan_eval_cmd->callback([&] { code = run_bispan_eval(bispan_eval); });

  RadjointArgs radjoint;
  auto* radjoint_cmd = app.add_subcommand("radjoint", "Tabulate F(R) for a finite Green functor R");
  radjoint_cmd->add_option("functor", radjoint.functor, "JSON table file or builtin:burnside-mod:<n>")
      ->required();
  radjoint_cmd->add_flag("--print-table", radjoint.print_table, "Print all operation tables");
  radjoint_cmd->add_flag("--check-axioms", radjoint.check_axioms, "Check the Tambara axioms");
  radjoint_cmd->add_flag("--json", radjoint.json, "Print F(R) as a functor JSON file");
  radjoint_cmd->callback([&] { code = run_radjoint(radjoint); });

  std::string green;
  std::string tambara;
  auto* adjunction_cmd = app.add_subcommand("adjunction", "Verify Green(iS, R) = Tambara(S, F(R))");
  adjunction_cmd->add_option("--green", green, "Green functor R")->required();
  adjunction_cmd->add_option("--tambara", tambara, "Tambara functor S")->required();
  adjunction_cmd->callback([&] { code = run_adjunction(green, tambara); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return exit_input;
  }
  return code;
}

}  // namespace
}  // namespace tambara::cli

int main(int argc, char** argv) {
  try {
    return tambara::cli::run(argc, argv);
  } catch (const tambara::SyntaxError& e) {
    std::cerr << "syntax error: " << e.what() << "\n";
  } catch (const tambara::LevelError& e) {
    std::cerr << "level error: " << e.what() << "\n";
  } catch (const tambara::CapabilityError& e) {
    std::cerr << "capability error: " << e.what() << "\n";
  } catch (const tambara::IndexingError& e) {
    std::cerr << "indexing error: " << e.what() << "\n";
  } catch (const tambara::MembershipError& e) {
    std::cerr << "membership error: " << e.what() << "\n";
  } catch (const tambara::ResourceLimitError& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
  } catch (const tambara::InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "input error: " << e.what() << "\n";
  }
  return 2;
}
