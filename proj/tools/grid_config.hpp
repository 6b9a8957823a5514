#pragma once

// Reads the verification grids from config/grids.json. Keys left out keep the
// defaults from verify.hpp.

#include "linkage_lab/verify.hpp"

#include <json.hpp>

#include <fstream>
#include <string>

namespace linkage_lab::cli {

using nlohmann::json;

namespace detail {

template <class T>
void maybe(const json& j, const char* key, T& out) {
  if (j.contains(key)) out = j.at(key).get<T>();
}

inline std::vector<TypeEll> type_ells(const json& j) {
  std::vector<TypeEll> out;
  for (const auto& e : j) out.push_back({e.at("type").get<std::string>(), e.at("ell").get<Int>()});
  return out;
}

}  // namespace detail

inline GridConfig grid_config_from_json(const json& j) {
  GridConfig c;
  if (j.contains("prop_aff")) {
    const auto& p = j.at("prop_aff");
    detail::maybe(p, "types", c.prop_aff.types);
    if (p.contains("ell_range")) {
      c.prop_aff.ell_min = p.at("ell_range").at(0).get<Int>();
      c.prop_aff.ell_max = p.at("ell_range").at(1).get<Int>();
    }
  }
  if (j.contains("strong_linkage")) {
    const auto& p = j.at("strong_linkage");
    detail::maybe(p, "types", c.strong_linkage.types);
    detail::maybe(p, "ells", c.strong_linkage.ells);
    detail::maybe(p, "box_factor", c.strong_linkage.box_factor);
  }
  if (j.contains("bwb")) {
    const auto& p = j.at("bwb");
    detail::maybe(p, "type", c.bwb.type);
    detail::maybe(p, "ell", c.bwb.ell);
    detail::maybe(p, "box", c.bwb.box);
  }
  if (j.contains("characters")) {
    const auto& p = j.at("characters");
    detail::maybe(p, "types", c.characters.types);
    detail::maybe(p, "max_coord_sum", c.characters.max_coord_sum);
  }
  if (j.contains("stabilization")) {
    c.stabilization.cases.clear();
    for (const auto& e : j.at("stabilization").at("cases")) {
      StabilizationCase sc{e.at("type").get<std::string>(), e.at("mu").get<std::string>(),
                           e.at("tau").get<std::string>(), std::nullopt, std::nullopt};
      if (e.contains("expected_n")) sc.expected_n = e.at("expected_n").get<Int>();
      if (e.contains("expected_mult")) sc.expected_mult = e.at("expected_mult").get<Int>();
      c.stabilization.cases.push_back(std::move(sc));
    }
  }
  if (j.contains("triangle")) {
    c.triangle.clear();
    for (const auto& [name, p] : j.at("triangle").items()) {
      TriangleGrid g;
      g.instances = detail::type_ells(p.at("instances"));
      detail::maybe(p, "max_length", g.max_length);
      c.triangle[name] = std::move(g);
    }
  }
  if (j.contains("quantum")) {
    const auto& p = j.at("quantum");
    detail::maybe(p, "max_abs_n", c.quantum.max_abs_n);
    detail::maybe(p, "max_t", c.quantum.max_t);
    detail::maybe(p, "max_d", c.quantum.max_d);
    detail::maybe(p, "pascal_max_n", c.quantum.pascal_max_n);
    detail::maybe(p, "vanishing_ells", c.quantum.vanishing_ells);
  }
  if (j.contains("alcove")) {
    const auto& p = j.at("alcove");
    detail::maybe(p, "wall_types", c.alcove.wall_types);
    detail::maybe(p, "wall_ells", c.alcove.wall_ells);
    detail::maybe(p, "length_types", c.alcove.length_types);
    detail::maybe(p, "length_ell", c.alcove.length_ell);
    detail::maybe(p, "max_length", c.alcove.max_length);
    if (p.contains("translations")) c.alcove.translation_instances = detail::type_ells(p.at("translations"));
    detail::maybe(p, "max_height", c.alcove.max_height);
  }
  return c;
}

inline GridConfig load_grid_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open grid configuration " + path);
  json j;
  try {
    j = json::parse(in);
    return grid_config_from_json(j);
  } catch (const json::exception& e) {
    throw InvalidInput("bad grid configuration " + path + ": " + e.what());
  }
}

}  // namespace linkage_lab::cli
