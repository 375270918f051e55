#pragma once

#include <string>
#include <tuple>
#include <vector>

#include "json.hpp"

#include "cliques/clique.hpp"
#include "cliques/error.hpp"
#include "cliques/harness.hpp"
#include "cliques/lincomb.hpp"
#include "cliques/magma.hpp"
#include "cliques/noncrossing.hpp"

namespace cliques {

using Json = nlohmann::ordered_json;

inline Json labels_json(const Clique& p) {
  Json labels = Json::array();
  for (const auto& la : p.solid()) labels.push_back(Json::array({la.arc.x, la.arc.y, p.magma().label(la.label)}));
  return labels;
}

/// {"magma": name, "size": n, "labels": [[x, y, label], ...]}, unit arcs omitted.
inline Json clique_json(const Clique& p) {
  Json j;
  j["magma"] = p.magma().name();
  j["size"] = p.arity();
  j["labels"] = labels_json(p);
  return j;
}

inline Json parse_json_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::parse, std::string("malformed JSON: ") + e.what());
  }
}

namespace detail {

inline Clique clique_from_labels(const MagmaPtr& magma, int arity, const Json& labels) {
  require(labels.is_array(), ErrorKind::parse, "\"labels\" must be an array");
  std::vector<std::tuple<int, int, std::string>> entries;
  for (const auto& e : labels) {
    require(e.is_array() && e.size() == 3 && e[0].is_number_integer() && e[1].is_number_integer(), ErrorKind::parse,
            "each label must be [x, y, label]");
    std::string text = e[2].is_string() ? e[2].get<std::string>() : e[2].dump();
    entries.emplace_back(e[0].get<int>(), e[1].get<int>(), std::move(text));
  }
  return Clique::make(magma, arity, entries);
}

inline MagmaPtr magma_field(const Json& j, const MagmaPtr& magma) {
  if (magma) {
    if (j.contains("magma")) {
      require(j["magma"].is_string() && j["magma"].get<std::string>() == magma->name(), ErrorKind::parse,
              "JSON magma does not match " + magma->name());
    }
    return magma;
  }
  require(j.contains("magma") && j["magma"].is_string(), ErrorKind::parse, "missing \"magma\"");
  return builtin_magma(j["magma"].get<std::string>());
}

}  // namespace detail

/// Reads a clique; `magma` may be null, in which case the JSON names it.
inline Clique clique_from_json(const Json& j, const MagmaPtr& magma = nullptr) {
  require(j.is_object(), ErrorKind::parse, "clique JSON must be an object");
  require(j.contains("size") && j["size"].is_number_integer(), ErrorKind::parse, "missing integer \"size\"");
  const MagmaPtr mg = detail::magma_field(j, magma);
  return detail::clique_from_labels(mg, j["size"].get<int>(), j.value("labels", Json::array()));
}

/// {"magma", "size", "basis", "terms": [{"coeff": "p/q", "labels": [...]}, ...]}
inline Json lincomb_json(const LinComb& f) {
  Json j;
  j["magma"] = f.magma().name();
  j["size"] = f.arity();
  j["basis"] = std::string(basis_name(f.basis()));
  j["terms"] = Json::array();
  for (const auto& [p, c] : f.terms()) {
    Json t;
    t["coeff"] = c.get_str();
    t["labels"] = labels_json(p);
    j["terms"].push_back(t);
  }
  return j;
}

/// Accepts a lincomb object, or a bare clique (coefficient 1, fundamental basis).
inline LinComb lincomb_from_json(const Json& j, const MagmaPtr& magma = nullptr) {
  require(j.is_object(), ErrorKind::parse, "combination JSON must be an object");
  if (!j.contains("terms")) return LinComb::of(clique_from_json(j, magma));
  require(j.contains("size") && j["size"].is_number_integer(), ErrorKind::parse, "missing integer \"size\"");
  const MagmaPtr mg = detail::magma_field(j, magma);
  const int n = j["size"].get<int>();
  const Basis b = j.contains("basis") ? parse_basis(j["basis"].get<std::string>()) : Basis::fundamental;
  LinComb out(mg, n, b);
  for (const auto& t : j["terms"]) {
    Rational c;
    const std::string text = t.value("coeff", std::string("1"));
    if (c.set_str(text, 10) != 0) fail(ErrorKind::parse, "bad coefficient '" + text + "'");
    c.canonicalize();
    out.add(detail::clique_from_labels(mg, n, t.value("labels", Json::array())), c);
  }
  return out;
}

inline Json tree_node_json(const TreeNode& t, const Magma& magma) {
  Json j;
  j["label"] = magma.label(t.label);
  if (!t.is_leaf()) {
    j["children"] = Json::array();
    for (const auto& c : t.children) j["children"].push_back(tree_node_json(c, magma));
  }
  return j;
}

inline Json tree_json(const DualTree& t) { return tree_node_json(t.root(), t.magma()); }

inline TreeNode tree_node_from_json(const Json& j, const Magma& magma) {
  require(j.is_object() && j.contains("label"), ErrorKind::parse, "tree node needs a \"label\"");
  const std::string text = j["label"].is_string() ? j["label"].get<std::string>() : j["label"].dump();
  TreeNode node{magma.parse(text), {}};
  if (j.contains("children")) {
    require(j["children"].is_array() && !j["children"].empty(), ErrorKind::parse, "\"children\" must be a non-empty array");
    for (const auto& c : j["children"]) node.children.push_back(tree_node_from_json(c, magma));
  }
  return node;
}

inline DualTree tree_from_json(const Json& j, const MagmaPtr& magma) {
  return DualTree(magma, tree_node_from_json(j, *magma));
}

inline Json table_json(const DimensionTable& t) {
  Json j;
  j["family"] = t.family;
  j["magma"] = t.magma;
  j["citation"] = t.citation;
  j["rows"] = Json::array();
  for (const auto& r : t.rows) {
    Json row;
    row["arity"] = r.arity;
    row["computed"] = r.computed.get_str();
    row["expected"] = r.expected ? Json(r.expected->get_str()) : Json(nullptr);
    row["match"] = r.match();
    j["rows"].push_back(row);
  }
  j["match"] = t.verdict();
  return j;
}

}  // namespace cliques
