#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "cliques/clique.hpp"
#include "cliques/error.hpp"
#include "cliques/lincomb.hpp"

namespace cliques {

inline constexpr std::uint64_t kDefaultEnumerationGuard = 10'000'000;

/// Number of arity-n cliques over a magma of cardinality m: m^C(n+1,2) for n >= 2, 1 for n = 1.
inline Integer space_size(std::size_t m, int arity) {
  if (arity == 1) return 1;
  Integer out;
  mpz_ui_pow_ui(out.get_mpz_t(), m, static_cast<unsigned long>(arc_count(arity)));
  return out;
}

inline void check_guard(const Integer& size, std::uint64_t guard, const std::string& what) {
  if (size > Integer(std::to_string(guard))) {
    fail(ErrorKind::guard, what + " has " + size.get_str() + " elements, above the guard of " + std::to_string(guard));
  }
}

/// Streams every arity-n clique over a finite magma in canonical order: a mixed-radix
/// counter over arcs in lexicographic order, last arc fastest. Returns the count visited.
template <typename Fn>
std::uint64_t for_each_clique(const MagmaPtr& magma, int arity, Fn&& fn,
                              std::uint64_t guard = kDefaultEnumerationGuard) {
  require(magma->is_finite(), ErrorKind::invalid_argument, "cannot enumerate cliques over an infinite magma");
  require(arity >= 1, ErrorKind::invalid_argument, "arity must be >= 1");
  if (arity == 1) {
    fn(Clique::unit(magma));
    return 1;
  }
  const std::size_t m = magma->size();
  check_guard(space_size(m, arity), guard, "clique space " + magma->name() + "(" + std::to_string(arity) + ")");
  const auto arcs = all_arcs(arity);
  const auto elems = magma->elements();
  std::vector<std::size_t> digit(arcs.size(), 0);
  std::uint64_t visited = 0;
  while (true) {
    std::vector<LabeledArc> solid;
    for (std::size_t k = 0; k < arcs.size(); ++k) {
      const Element e = elems[digit[k]];
      if (!magma->is_unit(e)) solid.push_back({arcs[k], e});
    }
    fn(Clique::assume_canonical(magma, arity, std::move(solid)));
    ++visited;
    std::size_t k = arcs.size();
    while (k > 0) {
      --k;
      if (++digit[k] < m) break;
      digit[k] = 0;
      if (k == 0) return visited;
    }
  }
}

inline std::vector<Clique> all_cliques(const MagmaPtr& magma, int arity,
                                       std::uint64_t guard = kDefaultEnumerationGuard) {
  std::vector<Clique> out;
  for_each_clique(magma, arity, [&](const Clique& p) { out.push_back(p); }, guard);
  return out;
}

/// All cliques of arities 1..max_arity, arity-major.
inline std::vector<Clique> all_cliques_up_to(const MagmaPtr& magma, int max_arity) {
  std::vector<Clique> out;
  for (int n = 1; n <= max_arity; ++n) {
    auto layer = all_cliques(magma, n);
    out.insert(out.end(), layer.begin(), layer.end());
  }
  return out;
}

/// Streaming count of arity-n cliques satisfying `pred`.
template <typename Pred>
std::uint64_t count_cliques(const MagmaPtr& magma, int arity, Pred&& pred,
                            std::uint64_t guard = kDefaultEnumerationGuard) {
  std::uint64_t count = 0;
  for_each_clique(magma, arity, [&](const Clique& p) { count += pred(p) ? 1 : 0; }, guard);
  return count;
}

/// Counts arity-n cliques whose statistics satisfy `pred`, by summing (m-1)^|S|
/// over solid-arc supports S. Valid because every statistic depends only on the support.
inline Integer count_by_support(std::size_t m, int arity, const std::function<bool(const CliqueStats&)>& pred,
                                std::uint64_t guard = kDefaultEnumerationGuard) {
  if (arity == 1) return pred(CliqueStats{}) ? 1 : 0;
  const auto arcs = all_arcs(arity);
  require(arcs.size() < 40, ErrorKind::guard, "support space too large");
  check_guard(Integer(1) << static_cast<mp_bitcnt_t>(arcs.size()), guard,
              "support space of arity " + std::to_string(arity));
  std::vector<Integer> weight(arcs.size() + 1);
  weight[0] = 1;
  for (std::size_t k = 1; k < weight.size(); ++k) weight[k] = weight[k - 1] * static_cast<unsigned long>(m - 1);
  Integer total = 0;
  std::vector<Arc> support;
  const std::uint64_t limit = std::uint64_t{1} << arcs.size();
  for (std::uint64_t mask = 0; mask < limit; ++mask) {
    support.clear();
    for (std::size_t k = 0; k < arcs.size(); ++k)
      if (mask & (std::uint64_t{1} << k)) support.push_back(arcs[k]);
    if (m == 1 && !support.empty()) continue;
    if (pred(support_stats(arity, support))) total += weight[support.size()];
  }
  return total;
}

/// Uniform random clique. Finite magmas draw labels uniformly from the element list;
/// ℤ draws each arc label uniformly from [lo, hi].
template <typename Rng>
Clique random_clique(const MagmaPtr& magma, int arity, Rng& rng, std::int64_t lo = -3, std::int64_t hi = 3) {
  if (arity == 1) return Clique::unit(magma);
  std::vector<LabeledArc> solid;
  for (const auto& arc : all_arcs(arity)) {
    Element e;
    if (magma->is_finite()) {
      std::uniform_int_distribution<std::size_t> pick(0, magma->size() - 1);
      e = Element{static_cast<std::int64_t>(pick(rng))};
    } else {
      std::uniform_int_distribution<std::int64_t> pick(lo, hi);
      e = Element{pick(rng)};
    }
    if (!magma->is_unit(e)) solid.push_back({arc, e});
  }
  return Clique::assume_canonical(magma, arity, std::move(solid));
}

}  // namespace cliques
