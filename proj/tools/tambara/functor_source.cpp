#include "functor_source.hpp"

#include <charconv>

#include "tambara/errors.hpp"
#include "tambara/json_io.hpp"

namespace tambara::cli {

AnyFunctor load_functor(std::string_view source) {
  constexpr std::string_view prefix = "builtin:";
  if (source.substr(0, prefix.size()) != prefix) {
    return functor_from_json(read_json_file(std::string(source)));
  }
  const std::string_view name = source.substr(prefix.size());
  if (name == "burnside") {
    return Burnside{};
  }
  if (name == "free-green-fixed") {
    return FreeGreenFixed{};
  }
  if (name == "free-green-underlying") {
    return FreeGreenUnderlying{};
  }
  if (name == "free-tambara-fixed") {
    return FreeTambaraFixed{};
  }
  if (name == "free-tambara-underlying") {
    return FreeTambaraUnderlying{};
  }
  constexpr std::string_view mod = "burnside-mod:";
  if (name.substr(0, mod.size()) == mod) {
    const std::string_view digits = name.substr(mod.size());
    unsigned n = 0;
    const auto [end, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), n);
    if (ec != std::errc{} || end != digits.data() + digits.size() || n < 2) {
      throw InputError("burnside-mod needs an integer n >= 2");
    }
    return burnside_mod(n);
  }
  throw InputError("unknown functor '" + std::string(source) + "'");
}

AnyFunctor free_functor(GeneratorLevel generator, IndexingSystem system) {
  if (system == IndexingSystem::trivial) {
    if (generator == GeneratorLevel::fixed) {
      return FreeGreenFixed{};
    }
    return FreeGreenUnderlying{};
  }
  if (generator == GeneratorLevel::fixed) {
    return FreeTambaraFixed{};
  }
  return FreeTambaraUnderlying{};
}

}  // namespace tambara::cli
