#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "cliques/clique.hpp"
#include "cliques/enumerate.hpp"
#include "cliques/error.hpp"
#include "cliques/lincomb.hpp"
#include "cliques/operad.hpp"
#include "cliques/report.hpp"

namespace cliques {

enum class OrderMode { be, d };

/// Everything below `top`: erase any subset of its solid boundary arcs (be) or of
/// its solid diagonals (d). Each member comes with its Hamming distance to `top`.
inline std::vector<std::pair<Clique, int>> order_ideal(const Clique& top, OrderMode mode) {
  std::vector<std::size_t> movable;
  for (std::size_t k = 0; k < top.solid().size(); ++k) {
    const bool boundary = is_boundary(top.solid()[k].arc, top.arity());
    if (boundary == (mode == OrderMode::be)) movable.push_back(k);
  }
  require(movable.size() < 31, ErrorKind::guard, "order ideal too large");
  std::vector<std::pair<Clique, int>> out;
  const std::uint32_t limit = std::uint32_t{1} << movable.size();
  for (std::uint32_t mask = 0; mask < limit; ++mask) {
    std::vector<bool> drop(top.solid().size(), false);
    int ham = 0;
    for (std::size_t b = 0; b < movable.size(); ++b) {
      if (mask & (std::uint32_t{1} << b)) {
        drop[movable[b]] = true;
        ++ham;
      }
    }
    std::vector<LabeledArc> kept;
    for (std::size_t k = 0; k < top.solid().size(); ++k)
      if (!drop[k]) kept.push_back(top.solid()[k]);
    out.emplace_back(Clique::assume_canonical(top.magma_ptr(), top.arity(), std::move(kept)), ham);
  }
  return out;
}

namespace detail {

inline LinComb change_basis(const LinComb& f, Basis from, Basis to, OrderMode mode, bool signed_sum) {
  require(f.basis() == from, ErrorKind::basis_mismatch,
          "expected a " + std::string(basis_name(from)) + " combination, got " + std::string(basis_name(f.basis())));
  LinComb out(f.magma_ptr(), f.arity(), to);
  for (const auto& [p, c] : f.terms()) {
    for (const auto& [q, ham] : order_ideal(p, mode)) out.add(q, signed_sum && (ham % 2) ? Rational(-c) : c);
  }
  return out;
}

}  // namespace detail

/// H_p = Σ_{p' ≼be p} p'.
inline LinComb from_H(const LinComb& h) {
  return detail::change_basis(h, Basis::H, Basis::fundamental, OrderMode::be, false);
}
/// Möbius inverse of from_H: p = Σ_{p' ≼be p} (-1)^ham H_p'.
inline LinComb to_H(const LinComb& f) { return detail::change_basis(f, Basis::fundamental, Basis::H, OrderMode::be, true); }

/// K_p = Σ_{p' ≼d p} (-1)^ham p'.
inline LinComb from_K(const LinComb& k) {
  return detail::change_basis(k, Basis::K, Basis::fundamental, OrderMode::d, true);
}
/// p = Σ_{p' ≼d p} K_p'.
inline LinComb to_K(const LinComb& f) { return detail::change_basis(f, Basis::fundamental, Basis::K, OrderMode::d, false); }

inline LinComb to_basis(const LinComb& f, Basis target) {
  LinComb fund = f.basis() == Basis::H ? from_H(f) : f.basis() == Basis::K ? from_K(f) : f;
  if (target == Basis::H) return to_H(fund);
  if (target == Basis::K) return to_K(fund);
  return fund;
}

namespace detail {

inline void require_non_unit_operands(const Clique& p, const Clique& q) {
  require(p.arity() > 1 && q.arity() > 1, ErrorKind::invalid_argument,
          "H/K composition is defined only for operands other than the unit clique");
}

}  // namespace detail

/// H_p ∘ᵢ H_q by the four-case formula.
inline LinComb h_compose(const Clique& p, int i, const Clique& q) {
  detail::require_non_unit_operands(p, q);
  const Magma& magma = p.magma();
  const bool pi = !magma.is_unit(p.edge_label(i));
  const bool q0 = !magma.is_unit(q.base_label());
  LinComb out(p.magma_ptr(), p.arity() + q.arity() - 1, Basis::H);
  out.add(compose(p, i, q), 1);
  if (pi) out.add(compose(erase(p, i), i, q), 1);
  if (q0) out.add(compose(p, i, erase(q, 0)), 1);
  if (pi && q0) out.add(compose(erase(p, i), i, erase(q, 0)), 1);
  return out;
}

/// K_p ∘ᵢ K_q by the two-case formula.
inline LinComb k_compose(const Clique& p, int i, const Clique& q) {
  detail::require_non_unit_operands(p, q);
  const Magma& magma = p.magma();
  LinComb out(p.magma_ptr(), p.arity() + q.arity() - 1, Basis::K);
  out.add(compose(p, i, q), 1);
  if (!magma.is_unit(magma.op(p.edge_label(i), q.base_label()))) out.add(compose(erase(p, i), i, erase(q, 0)), 1);
  return out;
}

/// Bilinear extension of h_compose / k_compose to tagged combinations.
inline LinComb basis_compose(const LinComb& f, int i, const LinComb& g) {
  require(f.basis() == g.basis(), ErrorKind::basis_mismatch, "operands are in different bases");
  if (f.basis() == Basis::fundamental) return lin_compose(f, i, g);
  LinComb out(f.magma_ptr(), f.arity() + g.arity() - 1, f.basis());
  for (const auto& [p, a] : f.terms()) {
    for (const auto& [q, b] : g.terms()) {
      LinComb t = f.basis() == Basis::H ? h_compose(p, i, q) : k_compose(p, i, q);
      out += (a * b) * t;
    }
  }
  return out;
}

/// A random same-arity combination with 1..4 terms and small rational coefficients.
template <typename Rng>
LinComb random_lincomb(const MagmaPtr& magma, int arity, Basis basis, Rng& rng) {
  std::uniform_int_distribution<int> terms(1, 4);
  std::uniform_int_distribution<int> num(-5, 5);
  std::uniform_int_distribution<int> den(1, 4);
  LinComb out(magma, arity, basis);
  const int k = terms(rng);
  for (int t = 0; t < k; ++t) {
    Rational c(num(rng), den(rng));
    c.canonicalize();
    out.add(random_clique(magma, arity, rng), c);
  }
  return out;
}

struct BasesOptions {
  int max_arity = 2;
  std::size_t samples = 500;
  std::uint64_t seed = 20160512;
};

/// Round trips on random combinations, then h_compose / k_compose against
/// fundamental composition on every pair of non-unit cliques (finite magmas).
inline Report verify_bases(const MagmaPtr& magma, const BasesOptions& opt = {}) {
  Report rep;
  rep.name = "bases";
  std::mt19937_64 rng(opt.seed);
  std::uniform_int_distribution<int> arity(1, 4);
  for (std::size_t s = 0; s < opt.samples; ++s) {
    const LinComb f = random_lincomb(magma, arity(rng), Basis::fundamental, rng);
    const LinComb h = random_lincomb(magma, f.arity(), Basis::H, rng);
    const LinComb k = random_lincomb(magma, f.arity(), Basis::K, rng);
    if (!rep.check(from_H(to_H(f)) == f)) rep.fail("from_H(to_H f) f=" + to_string(f), to_string(f), to_string(from_H(to_H(f))));
    if (!rep.check(from_K(to_K(f)) == f)) rep.fail("from_K(to_K f) f=" + to_string(f), to_string(f), to_string(from_K(to_K(f))));
    if (!rep.check(to_H(from_H(h)) == h)) rep.fail("to_H(from_H h) h=" + to_string(h), to_string(h), to_string(to_H(from_H(h))));
    if (!rep.check(to_K(from_K(k)) == k)) rep.fail("to_K(from_K k) k=" + to_string(k), to_string(k), to_string(to_K(from_K(k))));
  }
  rep.note("round trips: samples=" + std::to_string(opt.samples) + " seed=" + std::to_string(opt.seed));
  if (!magma->is_finite()) return rep;
  std::vector<Clique> ops;
  for (int n = 2; n <= opt.max_arity; ++n) {
    auto layer = all_cliques(magma, n);
    ops.insert(ops.end(), layer.begin(), layer.end());
  }
  for (const auto& p : ops) {
    const LinComb hp = from_H(LinComb::of(p, Basis::H));
    const LinComb kp = from_K(LinComb::of(p, Basis::K));
    for (const auto& q : ops) {
      const LinComb hq = from_H(LinComb::of(q, Basis::H));
      const LinComb kq = from_K(LinComb::of(q, Basis::K));
      for (int i = 1; i <= p.arity(); ++i) {
        const LinComb h_got = from_H(h_compose(p, i, q));
        const LinComb h_want = lin_compose(hp, i, hq);
        if (!rep.check(h_got == h_want))
          rep.fail("H p=" + to_string(p) + " o" + std::to_string(i) + " q=" + to_string(q), to_string(h_want),
                   to_string(h_got));
        const LinComb k_got = from_K(k_compose(p, i, q));
        const LinComb k_want = lin_compose(kp, i, kq);
        if (!rep.check(k_got == k_want))
          rep.fail("K p=" + to_string(p) + " o" + std::to_string(i) + " q=" + to_string(q), to_string(k_want),
                   to_string(k_got));
      }
    }
  }
  rep.note("formula checks: magma=" + magma->name() + " operand arities 2.." + std::to_string(opt.max_arity));
  return rep;
}

}  // namespace cliques
