#pragma once

// JSON encodings.
//
//   GSet     {"fixed": a, "free": b}
//   GMap     {"source": GSet, "target": GSet, "map": {"f0": "f1", "o0.0": "o1.1", ...}}
//            Only f<i> and o<j>.0 need images; a given o<j>.1 is cross-checked.
//   Bispan   {"S", "U", "V", "T": GSet, "f", "g", "h": GMap, "indexing": "trivial"|"complete"}
//            Inside a bispan the maps may omit "source" and "target".
//   Functor  {"fixed": {"elements": [..], "add": [[..]], "mul": [[..]], "zero": .., "one": ..},
//             "underlying": {..}, "conj": {..}, "res": {..}, "tr": {..}, "norm": {..}?}
//
// Every loader throws InputError on malformed or inconsistent input.

#include <filesystem>
#include <optional>

#include <nlohmann/json.hpp>

#include "tambara/bispan.hpp"
#include "tambara/finite_functor.hpp"
#include "tambara/gset.hpp"

namespace tambara {

using Json = nlohmann::json;

// Reads and parses a file; syntax errors become InputError.
Json read_json_file(const std::filesystem::path& path);
Json parse_json(std::string_view text);

GSet gset_from_json(const Json& j);
Json to_json(const GSet& s);

// `source` and `target` fill in missing keys and must match present ones.
GMap gmap_from_json(const Json& j, const std::optional<GSet>& source = std::nullopt,
                    const std::optional<GSet>& target = std::nullopt);
Json to_json(const GMap& m);

Bispan bispan_from_json(const Json& j);
Json to_json(const Bispan& p);

FiniteFunctor functor_from_json(const Json& j);
Json to_json(const FiniteFunctor& f);

}  // namespace tambara
