#pragma once

#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "cliques/clique.hpp"
#include "cliques/enumerate.hpp"
#include "cliques/error.hpp"
#include "cliques/magma.hpp"
#include "cliques/report.hpp"

namespace cliques {

/// A node of an edge-labeled Schröder tree. `label` is the label of the edge
/// above the node (the base label at the root). Leaves have no children.
struct TreeNode {
  Element label;
  std::vector<TreeNode> children;

  [[nodiscard]] bool is_leaf() const noexcept { return children.empty(); }
  friend bool operator==(const TreeNode&, const TreeNode&) = default;
};

class DualTree {
 public:
  DualTree(MagmaPtr magma, TreeNode root) : magma_(std::move(magma)), root_(std::move(root)) { validate(); }

  [[nodiscard]] const TreeNode& root() const noexcept { return root_; }
  [[nodiscard]] const Magma& magma() const noexcept { return *magma_; }
  [[nodiscard]] const MagmaPtr& magma_ptr() const noexcept { return magma_; }
  [[nodiscard]] int leaf_count() const { return count_leaves(root_); }

  friend bool operator==(const DualTree& a, const DualTree& b) {
    return same_magma(*a.magma_, *b.magma_) && a.root_ == b.root_;
  }

  static int count_leaves(const TreeNode& t) {
    if (t.is_leaf()) return 1;
    int n = 0;
    for (const auto& c : t.children) n += count_leaves(c);
    return n;
  }

 private:
  void validate() const {
    if (root_.is_leaf()) {
      require(magma_->is_unit(root_.label), ErrorKind::invalid_argument,
              "the one-leaf tree encodes the unit clique and must carry the unit label");
    }
    check(root_, true);
  }

  void check(const TreeNode& t, bool is_root) const {
    require(magma_->contains(t.label), ErrorKind::invalid_argument, "tree label outside magma " + magma_->name());
    if (t.is_leaf()) return;
    require(t.children.size() >= 2, ErrorKind::invalid_argument, "internal node with fewer than two children");
    require(is_root || !magma_->is_unit(t.label), ErrorKind::invalid_argument,
            "edge between internal nodes labeled by the unit");
    for (const auto& c : t.children) check(c, false);
  }

  MagmaPtr magma_;
  TreeNode root_;
};

namespace detail {

/// Region (x, y) of a noncrossing clique: walk the vertices from x, jumping along
/// the longest solid diagonal available inside the region.
inline TreeNode region_node(const Clique& p, int x, int y, Element label) {
  TreeNode node{label, {}};
  const int n = p.arity();
  int v = x;
  while (v < y) {
    int w = 0;
    for (const auto& la : p.solid()) {
      const Arc a = la.arc;
      if (a.x == v && a.y <= y && is_diagonal(a, n) && !(a.x == x && a.y == y)) w = std::max(w, a.y);
    }
    if (w > 0) {
      node.children.push_back(region_node(p, v, w, p.label(v, w)));
      v = w;
    } else {
      node.children.push_back(TreeNode{p.label(v, v + 1), {}});
      ++v;
    }
  }
  return node;
}

inline int fill_region(const TreeNode& t, int first, std::vector<LabeledArc>& out, const Magma& magma) {
  if (t.is_leaf()) {
    if (!magma.is_unit(t.label)) out.push_back({{first, first + 1}, t.label});
    return first + 1;
  }
  int v = first;
  for (const auto& c : t.children) v = fill_region(c, v, out, magma);
  if (!magma.is_unit(t.label)) out.push_back({{first, v}, t.label});
  return v;
}

}  // namespace detail

inline DualTree to_dual_tree(const Clique& p) {
  require(stats(p).crossing == 0, ErrorKind::invalid_argument,
          "clique " + to_string(p) + " has crossing diagonals and no dual tree");
  if (p.arity() == 1) return DualTree(p.magma_ptr(), TreeNode{p.magma().unit(), {}});
  return DualTree(p.magma_ptr(), detail::region_node(p, 1, p.arity() + 1, p.base_label()));
}

inline Clique from_dual_tree(const DualTree& t) {
  const int n = t.leaf_count();
  if (n == 1) return Clique::unit(t.magma_ptr());
  std::vector<LabeledArc> out;
  detail::fill_region(t.root(), 1, out, t.magma());
  std::sort(out.begin(), out.end());
  return Clique::assume_canonical(t.magma_ptr(), n, std::move(out));
}

namespace detail {

/// Replaces the leaf with index `target` (1-based, counted by `seen`). When the
/// glued edge contracts, t's children take the leaf's place in its parent.
inline bool graft(TreeNode& node, int target, int& seen, const TreeNode& t, const Magma& magma) {
  for (std::size_t k = 0; k < node.children.size(); ++k) {
    TreeNode& c = node.children[k];
    if (c.is_leaf()) {
      if (++seen != target) continue;
      const Element glued = magma.op(c.label, t.label);
      if (t.is_leaf()) {
        c.label = glued;
      } else if (!magma.is_unit(glued)) {
        c = t;
        c.label = glued;
      } else {
        std::vector<TreeNode> kids = t.children;
        node.children.erase(node.children.begin() + static_cast<std::ptrdiff_t>(k));
        node.children.insert(node.children.begin() + static_cast<std::ptrdiff_t>(k), kids.begin(), kids.end());
      }
      return true;
    }
    if (graft(c, target, seen, t, magma)) return true;
  }
  return false;
}

}  // namespace detail

/// Graft the root of t on the i-th leaf of s; the new edge carries a⋆b and is
/// contracted when that product is the unit.
inline DualTree tree_compose(const DualTree& s, int i, const DualTree& t) {
  const int n = s.leaf_count();
  require(i >= 1 && i <= n, ErrorKind::invalid_argument,
          "graft index " + std::to_string(i) + " out of range for " + std::to_string(n) + " leaves");
  require(same_magma(s.magma(), t.magma()), ErrorKind::invalid_argument, "magma mismatch in tree composition");
  if (s.root().is_leaf()) {
    TreeNode r = t.root();
    r.label = s.magma().op(s.root().label, t.root().label);
    return DualTree(s.magma_ptr(), std::move(r));
  }
  TreeNode r = s.root();
  int seen = 0;
  detail::graft(r, i, seen, t.root(), s.magma());
  return DualTree(s.magma_ptr(), std::move(r));
}

inline std::string to_string(const TreeNode& t, const Magma& magma) {
  std::ostringstream os;
  os << magma.label(t.label);
  if (!t.is_leaf()) {
    os << "(";
    for (std::size_t k = 0; k < t.children.size(); ++k) {
      if (k) os << " ";
      os << to_string(t.children[k], magma);
    }
    os << ")";
  }
  return os.str();
}

inline std::string to_string(const DualTree& t) { return to_string(t.root(), t.magma()); }

/// The triangles 𝒯_M: every arity-2 clique.
inline std::vector<Clique> nc_generators(const MagmaPtr& magma) { return all_cliques(magma, 2); }

/// Round trip clique -> tree -> clique on every noncrossing clique of arity
/// 2..round_trip_max, and tree composition against clique composition on all
/// noncrossing pairs of arity <= naturality_max.
inline Report verify_bijection(const MagmaPtr& magma, int round_trip_max, int naturality_max, unsigned workers = 1) {
  Report rep;
  rep.name = "bijection";
  std::uint64_t configurations = 0;
  for (int n = 2; n <= round_trip_max; ++n) {
    for_each_clique(magma, n, [&](const Clique& p) {
      if (stats(p).crossing != 0) return;
      ++configurations;
      const DualTree t = to_dual_tree(p);
      const Clique back = from_dual_tree(t);
      if (!rep.check(back == p && t.leaf_count() == n))
        rep.fail("round trip p=" + to_string(p), to_string(p), to_string(back) + " via " + to_string(t));
    });
  }
  rep.note("round trip: " + std::to_string(configurations) + " configurations, arities 2.." +
           std::to_string(round_trip_max));
  std::vector<Clique> nc;
  for (auto& p : all_cliques_up_to(magma, naturality_max))
    if (stats(p).crossing == 0) nc.push_back(std::move(p));
  Report nat = partitioned("naturality", nc.size(), workers, [&](std::size_t a, Report& out) {
    const Clique& p = nc[a];
    const DualTree s = to_dual_tree(p);
    for (const auto& q : nc) {
      const DualTree t = to_dual_tree(q);
      for (int i = 1; i <= p.arity(); ++i) {
        const Clique want = compose(p, i, q);
        const Clique got = from_dual_tree(tree_compose(s, i, t));
        if (!out.check(got == want))
          out.fail("p=" + to_string(p) + " o" + std::to_string(i) + " q=" + to_string(q), to_string(want),
                   to_string(got));
      }
    }
  });
  rep.merge(nat);
  rep.note("naturality: " + std::to_string(nc.size()) + " noncrossing operands, arities <= " +
           std::to_string(naturality_max));
  rep.note("leaves numbered left to right, depth first");
  return rep;
}

}  // namespace cliques
