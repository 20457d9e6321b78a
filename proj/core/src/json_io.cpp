#include "tambara/json_io.hpp"

#include <fstream>
#include <sstream>

#include "tambara/errors.hpp"

namespace tambara {

namespace {

const Json& field(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object()) {
    throw InputError(where + ": expected an object");
  }
  const auto it = j.find(key);
  if (it == j.end()) {
    throw InputError(where + ": missing \"" + key + "\"");
  }
  return *it;
}

std::size_t count(const Json& j, const char* key, const std::string& where) {
  const Json& value = field(j, key, where);
  if (!value.is_number_unsigned() && !(value.is_number_integer() && value.get<long long>() >= 0)) {
    throw InputError(where + ": \"" + key + "\" must be a non-negative integer");
  }
  return value.get<std::size_t>();
}

std::string text(const Json& j, const std::string& where) {
  if (!j.is_string()) {
    throw InputError(where + ": expected a string");
  }
  return j.get<std::string>();
}

TableElement element(const TableRing& ring, const Json& j, const std::string& where) {
  const std::string name = text(j, where);
  const auto e = ring.find(name);
  if (!e) {
    throw InputError(where + ": unknown element '" + name + "'");
  }
  return *e;
}

TableRing ring_from_json(const Json& j, const std::string& where) {
  const Json& elements = field(j, "elements", where);
  if (!elements.is_array() || elements.empty()) {
    throw InputError(where + ".elements: expected a non-empty array");
  }
  std::vector<std::string> names;
  for (const auto& e : elements) {
    names.push_back(text(e, where + ".elements"));
  }
  // Resolve names against a shell ring so lookups share TableRing::find.
  const std::size_t n = names.size();
  const TableRing::Table square(n, std::vector<TableElement>(n));
  const TableRing shell(names, square, square, TableElement{}, TableElement{});
  auto table = [&](const char* key) {
    const std::string at = where + "." + key;
    const Json& rows = field(j, key, where);
    if (!rows.is_array() || rows.size() != n) {
      throw InputError(at + ": expected " + std::to_string(n) + " rows");
    }
    TableRing::Table out;
    for (const auto& row : rows) {
      if (!row.is_array() || row.size() != n) {
        throw InputError(at + ": expected rows of length " + std::to_string(n));
      }
      std::vector<TableElement> entries;
      for (const auto& entry : row) {
        entries.push_back(element(shell, entry, at));
      }
      out.push_back(std::move(entries));
    }
    return out;
  };
  auto add = table("add");
  auto mul = table("mul");
  const TableElement zero = element(shell, field(j, "zero", where), where + ".zero");
  const TableElement one = element(shell, field(j, "one", where), where + ".one");
  return {std::move(names), std::move(add), std::move(mul), zero, one};
}

FiniteFunctor::Map map_from_json(const Json& j, const TableRing& from, const TableRing& to,
                                 const std::string& where) {
  if (!j.is_object()) {
    throw InputError(where + ": expected an object");
  }
  FiniteFunctor::Map out(from.size());
  std::vector<bool> seen(from.size(), false);
  for (const auto& [key, value] : j.items()) {
    const auto source = from.find(key);
    if (!source) {
      throw InputError(where + ": unknown element '" + key + "'");
    }
    out[source->index] = element(to, value, where + "." + key);
    seen[source->index] = true;
  }
  for (std::size_t i = 0; i < seen.size(); ++i) {
    if (!seen[i]) {
      throw InputError(where + ": no image for '" + from.names()[i] + "'");
    }
  }
  return out;
}

Json ring_to_json(const TableRing& r) {
  auto table = [&](const TableRing::Table& t) {
    Json rows = Json::array();
    for (const auto& row : t) {
      Json names = Json::array();
      for (const auto e : row) {
        names.push_back(r.name(e));
      }
      rows.push_back(std::move(names));
    }
    return rows;
  };
  return {{"elements", r.names()},
          {"add", table(r.add_table())},
          {"mul", table(r.mul_table())},
          {"zero", r.name(r.zero())},
          {"one", r.name(r.one())}};
}

Json map_to_json(const FiniteFunctor::Map& m, const TableRing& from, const TableRing& to) {
  Json out = Json::object();
  for (std::size_t i = 0; i < m.size(); ++i) {
    out[from.names()[i]] = to.name(m[i]);
  }
  return out;
}

}  // namespace

Json parse_json(std::string_view source) {
  try {
    return Json::parse(source);
  } catch (const Json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw InputError("cannot read " + path.string());
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  try {
    return Json::parse(buffer.str());
  } catch (const Json::parse_error& e) {
    throw InputError(path.string() + ": malformed JSON: " + e.what());
  }
}

GSet gset_from_json(const Json& j) {
  return {count(j, "fixed", "G-set"), count(j, "free", "G-set")};
}

Json to_json(const GSet& s) { return {{"fixed", s.fixed_count()}, {"free", s.free_orbit_count()}}; }

GMap gmap_from_json(const Json& j, const std::optional<GSet>& source,
                    const std::optional<GSet>& target) {
  auto set = [&](const char* key, const std::optional<GSet>& given) {
    if (j.is_object() && j.contains(key)) {
      const GSet s = gset_from_json(j.at(key));
      if (given && *given != s) {
        throw InputError(std::string("map: \"") + key + "\" disagrees with the enclosing object");
      }
      return s;
    }
    if (!given) {
      throw InputError(std::string("map: missing \"") + key + "\"");
    }
    return *given;
  };
  const GSet s = set("source", source);
  const GSet t = set("target", target);
  const Json& assignments = field(j, "map", "map");
  if (!assignments.is_object()) {
    throw InputError("map: \"map\" must be an object");
  }
  std::vector<std::optional<Point>> given(s.size());
  for (const auto& [key, value] : assignments.items()) {
    const Point p = s.parse_point(key);
    given[p] = t.parse_point(text(value, "map." + key));
  }
  std::vector<Point> images(s.size());
  for (Point p = 0; p < s.size(); ++p) {
    if (s.is_fixed(p)) {
      if (!given[p]) {
        throw InputError("map: no image for " + s.point_name(p));
      }
      if (!t.is_fixed(*given[p])) {
        throw InputError("map is not equivariant at " + s.point_name(p));
      }
      images[p] = *given[p];
    } else if (s.sheet(p) == 0) {
      if (!given[p]) {
        throw InputError("map: no image for " + s.point_name(p));
      }
      images[p] = *given[p];
      images[s.act(p)] = t.act(*given[p]);
      if (given[s.act(p)] && *given[s.act(p)] != images[s.act(p)]) {
        throw InputError("map is not equivariant at " + s.point_name(s.act(p)));
      }
    }
  }
  return {s, t, std::move(images)};
}

Json to_json(const GMap& m) {
  Json map = Json::object();
  for (Point p = 0; p < m.source().size(); ++p) {
    if (m.source().is_fixed(p) || m.source().sheet(p) == 0) {
      map[m.source().point_name(p)] = m.target().point_name(m(p));
    }
  }
  return {{"source", to_json(m.source())}, {"target", to_json(m.target())}, {"map", map}};
}

Bispan bispan_from_json(const Json& j) {
  const GSet s = gset_from_json(field(j, "S", "bispan"));
  const GSet u = gset_from_json(field(j, "U", "bispan"));
  const GSet v = gset_from_json(field(j, "V", "bispan"));
  const GSet t = gset_from_json(field(j, "T", "bispan"));
  const IndexingSystem indexing =
      parse_indexing_system(text(field(j, "indexing", "bispan"), "bispan.indexing"));
  return {gmap_from_json(field(j, "f", "bispan"), u, s),
          gmap_from_json(field(j, "g", "bispan"), u, v),
          gmap_from_json(field(j, "h", "bispan"), v, t), indexing};
}

Json to_json(const Bispan& p) {
  auto bare = [](const GMap& m) { return Json{{"map", to_json(m).at("map")}}; };
  return {{"S", to_json(p.source())},
          {"U", to_json(p.upper())},
          {"V", to_json(p.lower())},
          {"T", to_json(p.target())},
          {"f", bare(p.restriction())},
          {"g", bare(p.exponent())},
          {"h", bare(p.transfer())},
          {"indexing", std::string(to_string(p.indexing()))}};
}

FiniteFunctor functor_from_json(const Json& j) {
  TableRing fixed = ring_from_json(field(j, "fixed", "functor"), "fixed");
  TableRing underlying = ring_from_json(field(j, "underlying", "functor"), "underlying");
  auto conj = map_from_json(field(j, "conj", "functor"), underlying, underlying, "conj");
  auto res = map_from_json(field(j, "res", "functor"), fixed, underlying, "res");
  auto tr = map_from_json(field(j, "tr", "functor"), underlying, fixed, "tr");
  std::optional<FiniteFunctor::Map> norm;
  if (j.contains("norm")) {
    norm = map_from_json(j.at("norm"), underlying, fixed, "norm");
  }
  return {std::move(fixed), std::move(underlying), std::move(conj), std::move(res),
          std::move(tr), std::move(norm)};
}

Json to_json(const FiniteFunctor& f) {
  Json out = {{"fixed", ring_to_json(f.fixed())},
              {"underlying", ring_to_json(f.underlying())},
              {"conj", map_to_json(f.conj_map(), f.underlying(), f.underlying())},
              {"res", map_to_json(f.res_map(), f.fixed(), f.underlying())},
              {"tr", map_to_json(f.tr_map(), f.underlying(), f.fixed())}};
  if (f.norm_map()) {
    out["norm"] = map_to_json(*f.norm_map(), f.underlying(), f.fixed());
  }
  return out;
}

}  // namespace tambara
