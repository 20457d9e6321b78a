#include "tambara/burnside.hpp"

namespace tambara {

namespace {

Integer small_coefficient(std::mt19937_64& rng) {
  return Integer(static_cast<long long>(rng() % 19)) - 9;
}

}  // namespace

std::string format_burnside(const BurnsideElement& a) {
  std::string out;
  if (a.units != 0) {
    out = a.units.str();
  }
  if (a.orbits != 0) {
    std::string term;
    if (a.orbits == 1) {
      term = "t";
    } else if (a.orbits == -1) {
      term = "-t";
    } else {
      term = a.orbits.str() + "t";
    }
    if (out.empty()) {
      out = term;
    } else if (term.front() == '-') {
      out += " - " + term.substr(1);
    } else {
      out += " + " + term;
    }
  }
  return out.empty() ? "0" : out;
}

BurnsideElement Burnside::sample_fixed(std::mt19937_64& rng) const {
  Integer units = small_coefficient(rng);
  Integer orbits = small_coefficient(rng);
  return {std::move(units), std::move(orbits)};
}

Integer Burnside::sample_underlying(std::mt19937_64& rng) const {
  return small_coefficient(rng);
}

BurnsideElement Burnside::sample_res_preimage(std::mt19937_64& rng, const Integer& m) const {
  Integer orbits = small_coefficient(rng);
  Integer units = m - 2 * orbits;
  return {std::move(units), std::move(orbits)};
}

}  // namespace tambara
