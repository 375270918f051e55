#pragma once

#include <algorithm>
#include <compare>
#include <numeric>
#include <span>
#include <sstream>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "cliques/error.hpp"
#include "cliques/magma.hpp"

namespace cliques {

/// A pair of polygon vertices (x, y) with 1 <= x < y <= n + 1.
struct Arc {
  int x = 0;
  int y = 0;
  friend constexpr auto operator<=>(const Arc&, const Arc&) = default;
};

struct LabeledArc {
  Arc arc;
  Element label;
  friend constexpr auto operator<=>(const LabeledArc&, const LabeledArc&) = default;
};

inline constexpr bool is_base(Arc a, int arity) { return a.x == 1 && a.y == arity + 1; }
inline constexpr bool is_edge(Arc a, int arity) { return a.y == a.x + 1 && !is_base(a, arity); }
inline constexpr bool is_diagonal(Arc a, int arity) { return a.y != a.x + 1 && !is_base(a, arity); }
inline constexpr bool is_boundary(Arc a, int arity) { return !is_diagonal(a, arity); }

/// (x,y) and (x',y') cross iff x < x' < y < y' or x' < x < y' < y.
inline constexpr bool crosses(Arc a, Arc b) {
  return (a.x < b.x && b.x < a.y && a.y < b.y) || (b.x < a.x && a.x < b.y && b.y < a.y);
}

/// (x',y') is nested in (x,y) iff x <= x' < y' <= y.
inline constexpr bool nested_in(Arc inner, Arc outer) { return outer.x <= inner.x && inner.y <= outer.y; }

inline constexpr int arc_count(int arity) { return arity * (arity + 1) / 2; }

/// Every arc of an arity-n clique, in lexicographic order.
inline std::vector<Arc> all_arcs(int arity) {
  std::vector<Arc> arcs;
  arcs.reserve(static_cast<std::size_t>(arc_count(arity)));
  for (int x = 1; x <= arity + 1; ++x)
    for (int y = x + 1; y <= arity + 1; ++y) arcs.push_back({x, y});
  return arcs;
}

/// Arc addressed by a boundary position: 0 is the base, i in [1, arity] the i-th edge.
inline Arc boundary_arc(int arity, int position) {
  require(position >= 0 && position <= arity, ErrorKind::invalid_argument,
          "boundary position " + std::to_string(position) + " out of range for arity " + std::to_string(arity));
  return position == 0 ? Arc{1, arity + 1} : Arc{position, position + 1};
}

/// An M-decorated clique in sparse canonical form: only solid (non-unit) arcs are
/// stored, sorted lexicographically. Equality is structural.
class Clique {
 public:
  /// Validated construction. Unit labels are dropped.
  static Clique make(MagmaPtr magma, int arity, std::vector<LabeledArc> labels) {
    require(arity >= 1, ErrorKind::invalid_argument, "clique arity must be >= 1");
    std::vector<LabeledArc> solid;
    for (const auto& la : labels) {
      require(la.arc.x >= 1 && la.arc.x < la.arc.y && la.arc.y <= arity + 1, ErrorKind::invalid_argument,
              "arc (" + std::to_string(la.arc.x) + "," + std::to_string(la.arc.y) + ") out of range");
      require(magma->contains(la.label), ErrorKind::invalid_argument, "label not in magma " + magma->name());
      if (!magma->is_unit(la.label)) solid.push_back(la);
    }
    std::vector<Arc> seen;
    for (const auto& la : labels) seen.push_back(la.arc);
    std::sort(seen.begin(), seen.end());
    require(std::adjacent_find(seen.begin(), seen.end()) == seen.end(), ErrorKind::invalid_argument,
            "duplicate arc in clique labels");
    require(arity > 1 || solid.empty(), ErrorKind::invalid_argument, "the arity-1 clique must have an unlabeled base");
    std::sort(solid.begin(), solid.end());
    return Clique(std::move(magma), arity, std::move(solid));
  }

  /// Label-string form: each entry is (x, y, label).
  static Clique make(MagmaPtr magma, int arity, const std::vector<std::tuple<int, int, std::string>>& labels) {
    std::vector<LabeledArc> parsed;
    parsed.reserve(labels.size());
    for (const auto& [x, y, text] : labels) parsed.push_back({{x, y}, magma->parse(text)});
    return make(std::move(magma), arity, std::move(parsed));
  }

  static Clique unit(MagmaPtr magma) { return Clique(std::move(magma), 1, {}); }

  /// Trusted construction from an already canonical (sorted, unit-free, in-range) label list.
  static Clique assume_canonical(MagmaPtr magma, int arity, std::vector<LabeledArc> solid) {
    return Clique(std::move(magma), arity, std::move(solid));
  }

  [[nodiscard]] int arity() const noexcept { return arity_; }
  [[nodiscard]] const Magma& magma() const noexcept { return *magma_; }
  [[nodiscard]] const MagmaPtr& magma_ptr() const noexcept { return magma_; }
  [[nodiscard]] const std::vector<LabeledArc>& solid() const noexcept { return solid_; }
  [[nodiscard]] bool is_unit_clique() const noexcept { return arity_ == 1; }

  [[nodiscard]] Element label(Arc arc) const {
    auto it = std::lower_bound(solid_.begin(), solid_.end(), arc,
                               [](const LabeledArc& la, const Arc& a) { return la.arc < a; });
    if (it != solid_.end() && it->arc == arc) return it->label;
    return magma_->unit();
  }
  [[nodiscard]] Element label(int x, int y) const { return label(Arc{x, y}); }

  [[nodiscard]] Element boundary_label(int position) const { return label(boundary_arc(arity_, position)); }
  [[nodiscard]] Element base_label() const { return boundary_label(0); }
  [[nodiscard]] Element edge_label(int i) const { return boundary_label(i); }

  friend bool operator==(const Clique& a, const Clique& b) {
    return a.arity_ == b.arity_ && a.solid_ == b.solid_ && same_magma(*a.magma_, *b.magma_);
  }
  friend std::strong_ordering operator<=>(const Clique& a, const Clique& b) {
    if (auto c = a.arity_ <=> b.arity_; c != 0) return c;
    if (auto c = a.solid_ <=> b.solid_; c != 0) return c;
    return a.magma_->name() <=> b.magma_->name();
  }

 private:
  Clique(MagmaPtr magma, int arity, std::vector<LabeledArc> solid)
      : magma_(std::move(magma)), arity_(arity), solid_(std::move(solid)) {}

  MagmaPtr magma_;
  int arity_;
  std::vector<LabeledArc> solid_;
};

inline std::string to_string(const Clique& p) {
  std::ostringstream os;
  os << p.magma().name() << "[" << p.arity() << "]{";
  bool first = true;
  for (const auto& la : p.solid()) {
    if (!first) os << ",";
    first = false;
    os << "(" << la.arc.x << "," << la.arc.y << ")=" << p.magma().label(la.label);
  }
  os << "}";
  return os.str();
}

/// Partial composition p ∘ᵢ q: glue the base of q onto the i-th edge of p; the
/// glued arc carries p(i,i+1) ⋆ q(1,m+1).
inline Clique compose(const Clique& p, int i, const Clique& q) {
  const int n = p.arity();
  const int m = q.arity();
  if (i < 1 || i > n)
    fail(ErrorKind::invalid_argument,
         "composition index " + std::to_string(i) + " out of range for arity " + std::to_string(n));
  if (!same_magma(p.magma(), q.magma())) fail(ErrorKind::invalid_argument, "magma mismatch in composition");
  const Magma& magma = p.magma();
  const Element glued = magma.op(p.edge_label(i), q.base_label());
  const Arc p_edge{i, i + 1};
  const Arc q_base{1, m + 1};

  std::vector<LabeledArc> out;
  out.reserve(p.solid().size() + q.solid().size() + 1);
  auto shift_p = [&](int v) { return v <= i ? v : v + m - 1; };
  for (const auto& la : p.solid()) {
    if (la.arc == p_edge) continue;
    out.push_back({{shift_p(la.arc.x), shift_p(la.arc.y)}, la.label});
  }
  for (const auto& la : q.solid()) {
    if (la.arc == q_base) continue;
    out.push_back({{la.arc.x + i - 1, la.arc.y + i - 1}, la.label});
  }
  if (!magma.is_unit(glued)) out.push_back({{i, i + m}, glued});
  std::sort(out.begin(), out.end());
  return Clique::assume_canonical(p.magma_ptr(), n + m - 1, std::move(out));
}

/// One counterclockwise step: vertex x goes to x-1 for x >= 2 and 1 goes to n+1.
inline Clique rotate(const Clique& p) {
  const int n = p.arity();
  std::vector<LabeledArc> out;
  out.reserve(p.solid().size());
  for (const auto& la : p.solid()) {
    const Arc a = la.arc;
    out.push_back({a.x >= 2 ? Arc{a.x - 1, a.y - 1} : Arc{a.y - 1, n + 1}, la.label});
  }
  std::sort(out.begin(), out.end());
  return Clique::assume_canonical(p.magma_ptr(), n, std::move(out));
}

/// Inverse of rotate: vertex x goes to x+1 for x <= n and n+1 goes to 1.
inline Clique rotate_inverse(const Clique& p) {
  const int n = p.arity();
  std::vector<LabeledArc> out;
  out.reserve(p.solid().size());
  for (const auto& la : p.solid()) {
    const Arc a = la.arc;
    out.push_back({a.y <= n ? Arc{a.x + 1, a.y + 1} : Arc{1, a.x + 1}, la.label});
  }
  std::sort(out.begin(), out.end());
  return Clique::assume_canonical(p.magma_ptr(), n, std::move(out));
}

/// d₀ / dᵢ: the clique with the given boundary arc relabeled by the unit.
inline Clique erase(const Clique& p, int position) {
  const Arc target = boundary_arc(p.arity(), position);
  std::vector<LabeledArc> out;
  out.reserve(p.solid().size());
  for (const auto& la : p.solid())
    if (la.arc != target) out.push_back(la);
  return Clique::assume_canonical(p.magma_ptr(), p.arity(), std::move(out));
}

inline Element boundary_label(const Clique& p, int position) { return p.boundary_label(position); }

struct CliqueStats {
  int crossing = 0;
  int max_degree = 0;
  bool acyclic = true;
  bool nesting_free = true;
  bool white = true;
  bool bubble = true;
  int max_nesting = 0;

  friend bool operator==(const CliqueStats&, const CliqueStats&) = default;
};

/// Statistics depend only on which arcs are solid, never on the labels themselves.
inline CliqueStats support_stats(int arity, std::span<const Arc> solid) {
  CliqueStats s;
  std::vector<int> degree(static_cast<std::size_t>(arity) + 2, 0);
  std::vector<int> parent(static_cast<std::size_t>(arity) + 2);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int v) {
    while (parent[static_cast<std::size_t>(v)] != v) {
      parent[static_cast<std::size_t>(v)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])];
      v = parent[static_cast<std::size_t>(v)];
    }
    return v;
  };
  for (std::size_t a = 0; a < solid.size(); ++a) {
    const Arc arc = solid[a];
    ++degree[static_cast<std::size_t>(arc.x)];
    ++degree[static_cast<std::size_t>(arc.y)];
    const int rx = find(arc.x);
    const int ry = find(arc.y);
    if (rx == ry) s.acyclic = false;
    else parent[static_cast<std::size_t>(rx)] = ry;

    if (is_diagonal(arc, arity)) s.bubble = false;
    else s.white = false;

    int crossing = 0;
    int nesting = 0;
    for (std::size_t b = 0; b < solid.size(); ++b) {
      if (a == b) continue;
      if (nested_in(solid[b], arc)) ++nesting;
      if (is_diagonal(arc, arity) && is_diagonal(solid[b], arity) && crosses(arc, solid[b])) ++crossing;
    }
    s.crossing = std::max(s.crossing, crossing);
    s.max_nesting = std::max(s.max_nesting, nesting);
  }
  s.max_degree = *std::max_element(degree.begin(), degree.end());
  s.nesting_free = s.max_nesting == 0;
  return s;
}

inline CliqueStats stats(const Clique& p) {
  std::vector<Arc> arcs;
  arcs.reserve(p.solid().size());
  for (const auto& la : p.solid()) arcs.push_back(la.arc);
  return support_stats(p.arity(), arcs);
}

}  // namespace cliques
