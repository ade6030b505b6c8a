#include "schubert/report.hpp"

namespace schubert {

using nlohmann::json;

json word_json(const Word& w) {
  json out = json::array();
  for (std::size_t letter : w) out.push_back(letter + 1);
  return out;
}

json character_json(const RootSystem& rs, const Character& c) {
  json out = json::array();
  for (const auto& [w, m] : c.sorted_terms(rs)) {
    json coords = json::array();
    for (int x : w.coords()) coords.push_back(x);
    out.push_back({{"weight", std::move(coords)}, {"mult", m}});
  }
  return out;
}

json labeling_json(const RootSystem& rs) {
  json matrix = json::array();
  for (std::size_t i = 0; i < rs.rank(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < rs.rank(); ++j) row.push_back(rs.cartan(i, j));
    matrix.push_back(std::move(row));
  }
  json simple = json::array();
  for (std::size_t i = 0; i < rs.rank(); ++i) {
    const bool is_long = rs.roots()[*rs.find_root(rs.simple_root(i))].is_long;
    simple.push_back({{"index", i + 1}, {"length", is_long ? "long" : "short"}});
  }
  return {{"convention", "Bourbaki; cartan[i][j] = <alpha_j, alpha_i^vee>; weights in fundamental coordinates"},
          {"cartan_matrix", std::move(matrix)},
          {"simple_roots", std::move(simple)}};
}

json to_json(const Report& r, const RootSystem& rs) {
  json cx = json::array();
  for (const auto& c : r.counterexamples) {
    json item = {{"element", word_json(c.element)},
                 {"inverse", word_json(c.inverse)},
                 {"expected", c.expected},
                 {"actual", c.actual}};
    if (!c.note.empty()) item["note"] = c.note;
    cx.push_back(std::move(item));
  }
  return {{"check", r.check_id},
          {"type", r.cartan_type},
          {"universe", r.universe_size},
          {"passed", r.passed()},
          {"counterexamples", std::move(cx)},
          {"elapsed_ms", static_cast<std::int64_t>(r.elapsed.count())},
          {"engine_version", kEngineVersion},
          {"labeling", labeling_json(rs)},
          {"details", r.details}};
}

}  // namespace schubert
