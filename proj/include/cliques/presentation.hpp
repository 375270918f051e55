#pragma once

#include <array>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cliques/clique.hpp"
#include "cliques/error.hpp"
#include "cliques/linalg.hpp"
#include "cliques/lincomb.hpp"
#include "cliques/magma.hpp"
#include "cliques/report.hpp"
#include "cliques/series.hpp"

namespace cliques {

/// A triangle as its word (base, first edge, second edge).
using Triangle = std::array<Element, 3>;

inline Clique triangle_clique(const MagmaPtr& magma, const Triangle& w) {
  return Clique::make(magma, 2, std::vector<LabeledArc>{{{1, 3}, w[0]}, {{1, 2}, w[1]}, {{2, 3}, w[2]}});
}

/// Weight-2 syntax tree top ∘_shape bottom, shape 1 or 2.
struct Monomial {
  int shape = 1;
  Triangle top{};
  Triangle bottom{};
  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

/// Indexing of the 2m⁶ weight-2 monomials: (shape-1)·m⁶ + top·m³ + bottom.
class MonomialIndex {
 public:
  explicit MonomialIndex(const Magma& magma) : m_(magma.size()) {}

  [[nodiscard]] std::size_t m() const noexcept { return m_; }
  [[nodiscard]] std::size_t triangles() const noexcept { return m_ * m_ * m_; }
  [[nodiscard]] std::size_t dimension() const noexcept { return 2 * triangles() * triangles(); }

  [[nodiscard]] std::size_t triangle(const Triangle& t) const {
    return (static_cast<std::size_t>(t[0].id) * m_ + static_cast<std::size_t>(t[1].id)) * m_ +
           static_cast<std::size_t>(t[2].id);
  }
  [[nodiscard]] Triangle triangle(std::size_t k) const {
    return {Element{static_cast<std::int64_t>(k / (m_ * m_))}, Element{static_cast<std::int64_t>(k / m_ % m_)},
            Element{static_cast<std::int64_t>(k % m_)}};
  }
  [[nodiscard]] std::size_t index(const Monomial& x) const {
    return static_cast<std::size_t>(x.shape - 1) * triangles() * triangles() + triangle(x.top) * triangles() +
           triangle(x.bottom);
  }
  [[nodiscard]] Monomial monomial(std::size_t k) const {
    const std::size_t t2 = triangles() * triangles();
    return {static_cast<int>(k / t2) + 1, triangle(k % t2 / triangles()), triangle(k % triangles())};
  }

 private:
  std::size_t m_;
};

inline Clique evaluate(const MagmaPtr& magma, const Monomial& x) {
  return compose(triangle_clique(magma, x.top), x.shape, triangle_clique(magma, x.bottom));
}

inline std::string to_string(const Magma& magma, const Monomial& x) {
  auto word = [&](const Triangle& t) { return magma.label(t[0]) + magma.label(t[1]) + magma.label(t[2]); };
  return word(x.top) + " o" + std::to_string(x.shape) + " " + word(x.bottom);
}

struct RelationSpace {
  std::size_t ambient = 0;
  std::vector<SparseRow> generators;
  Echelon echelon;

  [[nodiscard]] std::size_t rank() const noexcept { return echelon.rank(); }

  void add(SparseRow row) {
    if (row.empty()) return;
    echelon.insert(row);
    generators.push_back(std::move(row));
  }
};

namespace detail {

inline std::vector<std::pair<Element, Element>> pairs_with_product(const Magma& magma, Element v) {
  std::vector<std::pair<Element, Element>> out;
  for (auto a : magma.elements())
    for (auto b : magma.elements())
      if (magma.op(a, b) == v) out.emplace_back(a, b);
  return out;
}

inline SparseRow binomial_row(std::size_t plus, std::size_t minus) {
  if (plus == minus) return {};
  std::map<std::size_t, Rational> e{{plus, Rational(1)}};
  e[minus] -= 1;
  return make_row(std::move(e));
}

/// Every (first, second) monomial pair of the three relation families. The
/// order inside a pair is what `forward` and `backward` orient by.
inline std::vector<std::pair<Monomial, Monomial>> relation_pairs(const Magma& magma) {
  std::vector<std::pair<Monomial, Monomial>> out;
  const auto E = magma.elements();
  const Element u = magma.unit();
  for (auto v : E) {
    if (v == u) continue;
    const auto cls = pairs_with_product(magma, v);
    for (auto p1 : E)
      for (auto p3 : E)
        for (auto q2 : E)
          for (auto q3 : E)
            for (auto [p2, q1] : cls)
              for (auto [r2, r1] : cls) {
                if (p2 == r2 && q1 == r1) continue;
                out.push_back({{1, {p1, p2, p3}, {q1, q2, q3}}, {1, {p1, r2, p3}, {r1, q2, q3}}});
              }
  }
  const auto units = pairs_with_product(magma, u);
  for (auto p1 : E)
    for (auto p3 : E)
      for (auto q2 : E)
        for (auto q3 : E)
          for (auto [p2, q1] : units)
            for (auto [r3, r1] : units)
              out.push_back({{1, {p1, p2, p3}, {q1, q2, q3}}, {2, {p1, q2, r3}, {r1, q3, p3}}});
  for (auto v : E) {
    if (v == u) continue;
    const auto cls = pairs_with_product(magma, v);
    for (auto p1 : E)
      for (auto p2 : E)
        for (auto q2 : E)
          for (auto q3 : E)
            for (auto [p3, q1] : cls)
              for (auto [r3, r1] : cls) {
                if (p3 == r3 && q1 == r1) continue;
                out.push_back({{2, {p1, p2, p3}, {q1, q2, q3}}, {2, {p1, p2, r3}, {r1, q2, q3}}});
              }
  }
  return out;
}

}  // namespace detail

/// ℜ: the three binomial families.
inline RelationSpace build_R(const MagmaPtr& magma) {
  const MonomialIndex idx(*magma);
  RelationSpace out;
  out.ambient = idx.dimension();
  for (const auto& [a, b] : detail::relation_pairs(*magma)) out.add(detail::binomial_row(idx.index(a), idx.index(b)));
  return out;
}

/// ℜ^⊥: the three summed families.
inline RelationSpace build_Rperp(const MagmaPtr& magma) {
  const MonomialIndex idx(*magma);
  RelationSpace out;
  out.ambient = idx.dimension();
  const auto E = magma->elements();
  const Element u = magma->unit();
  for (auto delta : E) {
    const auto cls = detail::pairs_with_product(*magma, delta);
    for (auto p1 : E)
      for (auto p3 : E)
        for (auto q2 : E)
          for (auto q3 : E) {
            std::map<std::size_t, Rational> e;
            for (auto [p2, q1] : cls) {
              e[idx.index({1, {p1, p2, p3}, {q1, q2, q3}})] += 1;
              if (delta == u) e[idx.index({2, {p1, q2, p2}, {q1, q3, p3}})] -= 1;
            }
            out.add(make_row(std::move(e)));
          }
  }
  for (auto delta : E) {
    if (delta == u) continue;
    const auto cls = detail::pairs_with_product(*magma, delta);
    for (auto p1 : E)
      for (auto p2 : E)
        for (auto q2 : E)
          for (auto q3 : E) {
            std::map<std::size_t, Rational> e;
            for (auto [p3, q1] : cls) e[idx.index({2, {p1, p2, p3}, {q1, q2, q3}})] += 1;
            out.add(make_row(std::move(e)));
          }
  }
  return out;
}

/// Signed diagonal pairing: +1 on ∘₁ monomials, -1 on ∘₂ monomials.
inline Rational pairing(const SparseRow& a, const SparseRow& b, std::size_t half) {
  Rational out = 0;
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i].first < b[j].first) {
      ++i;
    } else if (b[j].first < a[i].first) {
      ++j;
    } else {
      const Rational t = a[i].second * b[j].second;
      if (a[i].first < half) out += t;
      else out -= t;
      ++i;
      ++j;
    }
  }
  return out;
}

enum class Orientation { forward, backward, representative };

inline std::string_view orientation_name(Orientation o) {
  switch (o) {
    case Orientation::forward: return "forward";
    case Orientation::backward: return "backward";
    case Orientation::representative: return "representative";
  }
  return "?";
}

/// Weight-2 monomials that are left-hand sides of the oriented rewrite system.
/// `forward`/`backward` make the first/second monomial of every binomial a
/// redex. `representative` rewrites every monomial to a fixed member of its
/// class under ℜ: the smallest ∘₂ monomial when there is one, else the smallest.
inline std::vector<bool> redexes(const MagmaPtr& magma, Orientation o) {
  const MonomialIndex idx(*magma);
  std::vector<bool> out(idx.dimension(), false);
  const auto rel = detail::relation_pairs(*magma);
  if (o != Orientation::representative) {
    for (const auto& [a, b] : rel) out[idx.index(o == Orientation::forward ? a : b)] = true;
    return out;
  }
  std::vector<std::size_t> parent(idx.dimension());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (const auto& [a, b] : rel) {
    const auto ra = find(idx.index(a));
    const auto rb = find(idx.index(b));
    if (ra != rb) parent[std::max(ra, rb)] = std::min(ra, rb);
  }
  const std::size_t half = idx.dimension() / 2;
  std::vector<std::optional<std::size_t>> keep(idx.dimension());
  for (std::size_t k = 0; k < idx.dimension(); ++k) {
    auto& kp = keep[find(k)];
    if (!kp || (*kp < half && k >= half)) kp = k;  // first ∘₂ member beats any ∘₁ member
  }
  for (std::size_t k = 0; k < idx.dimension(); ++k) out[k] = keep[find(k)] != k;
  return out;
}

/// Planar binary syntax trees with n leaves over the triangles, avoiding every
/// redex at each parent/child pair. Dynamic programming over (leaves, root).
inline Integer count_normal_forms(const MagmaPtr& magma, int n, Orientation o = Orientation::representative) {
  require(n >= 1, ErrorKind::invalid_argument, "arity must be >= 1");
  if (n == 1) return 1;
  const MonomialIndex idx(*magma);
  const auto redex = redexes(magma, o);
  const std::size_t T = idx.triangles();
  // allowed[slot][x] = children y with x ∘_slot y normal
  std::array<std::vector<std::vector<std::size_t>>, 2> allowed;
  for (int slot = 0; slot < 2; ++slot) {
    allowed[static_cast<std::size_t>(slot)].resize(T);
    for (std::size_t x = 0; x < T; ++x)
      for (std::size_t y = 0; y < T; ++y)
        if (!redex[static_cast<std::size_t>(slot) * T * T + x * T + y])
          allowed[static_cast<std::size_t>(slot)][x].push_back(y);
  }
  std::vector<std::vector<Integer>> f(static_cast<std::size_t>(n) + 1, std::vector<Integer>(T, 0));
  auto side = [&](int k, int slot, std::size_t x) {
    if (k == 1) return Integer(1);
    Integer s = 0;
    for (auto y : allowed[static_cast<std::size_t>(slot)][x]) s += f[static_cast<std::size_t>(k)][y];
    return s;
  };
  for (int size = 2; size <= n; ++size) {
    for (std::size_t x = 0; x < T; ++x) {
      Integer total = 0;
      for (int k = 1; k < size; ++k) total += side(k, 0, x) * side(size - k, 1, x);
      f[static_cast<std::size_t>(size)][x] = total;
    }
  }
  Integer out = 0;
  for (const auto& v : f[static_cast<std::size_t>(n)]) out += v;
  return out;
}

inline Report verify_koszul_duality(const MagmaPtr& magma) {
  require(magma->is_finite() && magma->size() <= 3, ErrorKind::guard, "Koszul duality check is limited to m <= 3");
  const auto m = static_cast<std::int64_t>(magma->size());
  const MonomialIndex idx(*magma);
  const RelationSpace R = build_R(magma);
  const RelationSpace P = build_Rperp(magma);
  Report rep;
  rep.name = "koszul";
  const std::size_t half = idx.dimension() / 2;
  for (const auto& a : R.generators) {
    for (const auto& b : P.generators) {
      const Rational v = pairing(a, b, half);
      if (!rep.check(v == 0)) rep.fail("pairing of a relation with a dual relation", "0", v.get_str());
    }
  }
  const std::string ranks = "rank R=" + std::to_string(R.rank()) + " rank Rperp=" + std::to_string(P.rank());
  rep.expect(R.rank() + P.rank() == idx.dimension(), "rank sum", std::to_string(idx.dimension()),
             std::to_string(R.rank() + P.rank()));
  const Integer nc3 = nc_dim(m, 3);
  rep.expect(Integer(static_cast<unsigned long>(idx.dimension() - R.rank())) == nc3, "2m^6 - rank R = dim NC(3)",
             nc3.get_str(), std::to_string(idx.dimension() - R.rank()));
  const Rational dual3 = nc_dual_hilbert(m, 3)[3];
  rep.expect(Rational(static_cast<unsigned long>(idx.dimension() - P.rank())) == dual3,
             "2m^6 - rank Rperp = dual coefficient 3", dual3.get_str(), std::to_string(idx.dimension() - P.rank()));
  rep.note("magma=" + magma->name() + " ambient=" + std::to_string(idx.dimension()) + " " + ranks);
  rep.note("pairing: +1 on o1 monomials, -1 on o2 monomials, 0 across shapes");
  return rep;
}

struct PresentationResult {
  std::optional<Orientation> orientation;
  Report report;
};

inline PresentationResult verify_presentation(const MagmaPtr& magma, int n_max) {
  const auto m = static_cast<std::int64_t>(magma->size());
  const MonomialIndex idx(*magma);
  const RelationSpace R = build_R(magma);
  PresentationResult res;
  Report& rep = res.report;
  rep.name = "presentation";

  std::vector<Clique> image(idx.dimension(), Clique::unit(magma));
  for (std::size_t k = 0; k < idx.dimension(); ++k) image[k] = evaluate(magma, idx.monomial(k));
  for (const auto& row : R.generators) {
    LinComb v(magma, 3);
    for (const auto& [c, x] : row) v.add(image[c], x);
    if (!rep.check(v.empty())) {
      rep.fail("evaluation of " + to_string(*magma, idx.monomial(row.front().first)) + " relation", "0", to_string(v));
    }
  }
  auto distinct = image;
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  const std::size_t kernel = idx.dimension() - distinct.size();
  rep.expect(kernel == R.rank(), "arity-3 evaluation kernel dimension", std::to_string(R.rank()),
             std::to_string(kernel));
  rep.note("magma=" + magma->name() + " rank R=" + std::to_string(R.rank()) + " kernel=" + std::to_string(kernel));

  for (auto o : {Orientation::forward, Orientation::backward, Orientation::representative}) {
    bool ok = true;
    std::string counts;
    for (int n = 2; n <= n_max; ++n) {
      const Integer got = count_normal_forms(magma, n, o);
      const Integer want = nc_dim(m, n);
      counts += (counts.empty() ? "" : ",") + got.get_str();
      if (got != want) ok = false;
    }
    rep.note("orientation " + std::string(orientation_name(o)) + ": normal forms n=2.." + std::to_string(n_max) +
             " -> " + counts + (ok ? " (match)" : " (mismatch)"));
    if (ok && !res.orientation) res.orientation = o;
  }
  std::string want;
  for (int n = 2; n <= n_max; ++n) want += (want.empty() ? "" : ",") + nc_dim(m, n).get_str();
  ++rep.checked;
  if (!res.orientation) rep.fail("normal-form counts for every orientation", want, "no orientation matches");
  else rep.note("orientation used: " + std::string(orientation_name(*res.orientation)));
  return res;
}

}  // namespace cliques
