#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "cliques/clique.hpp"
#include "cliques/enumerate.hpp"
#include "cliques/error.hpp"
#include "cliques/lincomb.hpp"
#include "cliques/magma.hpp"
#include "cliques/report.hpp"

namespace cliques {

inline LinComb lin_compose(const LinComb& f, int i, const LinComb& g) {
  require(f.basis() == Basis::fundamental && g.basis() == Basis::fundamental, ErrorKind::basis_mismatch,
          "lin_compose needs fundamental-basis operands; convert H/K first");
  require(i >= 1 && i <= f.arity(), ErrorKind::invalid_argument,
          "composition index " + std::to_string(i) + " out of range for arity " + std::to_string(f.arity()));
  require(same_magma(f.magma(), g.magma()), ErrorKind::invalid_argument, "magma mismatch in composition");
  LinComb out(f.magma_ptr(), f.arity() + g.arity() - 1);
  for (const auto& [p, a] : f.terms())
    for (const auto& [q, b] : g.terms()) out.add(compose(p, i, q), a * b);
  return out;
}

/// f(g₁, ..., gₙ), folded from the last slot down so earlier indices stay valid.
inline LinComb full_compose(const LinComb& f, const std::vector<LinComb>& gs) {
  require(static_cast<int>(gs.size()) == f.arity(), ErrorKind::invalid_argument,
          "full composition needs " + std::to_string(f.arity()) + " operands, got " + std::to_string(gs.size()));
  LinComb out = f;
  for (int k = f.arity(); k >= 1; --k) out = lin_compose(out, k, gs[static_cast<std::size_t>(k - 1)]);
  return out;
}

inline Clique map_clique(const MagmaMorphism& phi, const Clique& p) {
  require(same_magma(p.magma(), *phi.source()), ErrorKind::invalid_argument,
          "clique over " + p.magma().name() + " is not over the morphism source " + phi.source()->name());
  std::vector<LabeledArc> out;
  for (const auto& la : p.solid()) {
    const Element e = phi.apply(la.label);
    if (!phi.target()->is_unit(e)) out.push_back({la.arc, e});
  }
  return Clique::assume_canonical(phi.target(), p.arity(), std::move(out));
}

/// Cφ extended linearly.
inline LinComb map_functor(const MagmaMorphism& phi, const LinComb& f) {
  require(phi.validate(), ErrorKind::invalid_argument, "not a unitary magma morphism");
  require(f.basis() == Basis::fundamental, ErrorKind::basis_mismatch, "map_functor needs a fundamental-basis input");
  LinComb out(phi.target(), f.arity());
  for (const auto& [p, c] : f.terms()) out.add(map_clique(phi, p), c);
  return out;
}

struct AxiomOptions {
  int max_arity = 3;
  std::size_t samples = 1000;
  std::uint64_t seed = 20160512;
  std::int64_t lo = -3;
  std::int64_t hi = 3;
  unsigned workers = 1;
};

namespace detail {

inline void check_triple(const Clique& p, const Clique& q, const Clique& r, int i, int j, Report& rep) {
  if (j >= 1 && j <= q.arity()) {
    const Clique lhs = compose(compose(p, i, q), i + j - 1, r);
    const Clique rhs = compose(p, i, compose(q, j, r));
    if (!rep.check(lhs == rhs)) rep.fail("sequential p=" + to_string(p) + " i=" + std::to_string(i) + " q=" + to_string(q) +
                   " j=" + std::to_string(j) + " r=" + to_string(r),
               to_string(rhs), to_string(lhs));
  }
}

inline void check_parallel(const Clique& p, const Clique& q, const Clique& r, int i, int j, Report& rep) {
  const int m = q.arity();
  const Clique lhs = compose(compose(p, i, q), j + m - 1, r);
  const Clique rhs = compose(compose(p, j, r), i, q);
  if (!rep.check(lhs == rhs)) rep.fail("parallel p=" + to_string(p) + " i=" + std::to_string(i) + " q=" + to_string(q) +
                 " j=" + std::to_string(j) + " r=" + to_string(r),
             to_string(rhs), to_string(lhs));
}

inline void check_unit(const Clique& p, Report& rep) {
  const Clique u = Clique::unit(p.magma_ptr());
  const Clique left = compose(u, 1, p);
  if (!rep.check(left == p)) rep.fail("unit-left p=" + to_string(p), to_string(p), to_string(left));
  for (int i = 1; i <= p.arity(); ++i) {
    const Clique got = compose(p, i, u);
    if (!rep.check(got == p)) rep.fail("unit-right p=" + to_string(p) + " i=" + std::to_string(i), to_string(p), to_string(got));
  }
}

}  // namespace detail

/// Sequential, parallel and unit laws. Exhaustive over all cliques of arity
/// <= max_arity for finite magmas; seeded samples otherwise.
inline Report verify_operad_axioms(const MagmaPtr& magma, const AxiomOptions& opt = {}) {
  if (magma->is_finite()) {
    const auto all = all_cliques_up_to(magma, opt.max_arity);
    Report rep = partitioned("axioms", all.size(), opt.workers, [&](std::size_t a, Report& out) {
      const Clique& p = all[a];
      detail::check_unit(p, out);
      for (const auto& q : all) {
        for (int i = 1; i <= p.arity(); ++i) {
          for (const auto& r : all) {
            for (int j = 1; j <= q.arity(); ++j) detail::check_triple(p, q, r, i, j, out);
            for (int j = i + 1; j <= p.arity(); ++j) detail::check_parallel(p, q, r, i, j, out);
          }
        }
      }
    });
    rep.note("mode=exhaustive magma=" + magma->name() + " max_arity=" + std::to_string(opt.max_arity) +
             " cliques=" + std::to_string(all.size()));
    return rep;
  }

  struct Sample {
    Clique p, q, r;
    int i, j, k;
  };
  std::mt19937_64 rng(opt.seed);
  std::uniform_int_distribution<int> arity(1, opt.max_arity);
  std::vector<Sample> samples;
  samples.reserve(opt.samples);
  for (std::size_t s = 0; s < opt.samples; ++s) {
    Clique p = random_clique(magma, arity(rng), rng, opt.lo, opt.hi);
    Clique q = random_clique(magma, arity(rng), rng, opt.lo, opt.hi);
    Clique r = random_clique(magma, arity(rng), rng, opt.lo, opt.hi);
    const int i = std::uniform_int_distribution<int>(1, p.arity())(rng);
    const int j = std::uniform_int_distribution<int>(1, q.arity())(rng);
    const int k = std::uniform_int_distribution<int>(1, p.arity())(rng);
    samples.push_back({std::move(p), std::move(q), std::move(r), i, j, k});
  }
  Report rep = partitioned("axioms", samples.size(), opt.workers, [&](std::size_t a, Report& out) {
    const Sample& s = samples[a];
    detail::check_unit(s.p, out);
    detail::check_triple(s.p, s.q, s.r, s.i, s.j, out);
    if (s.i != s.k) detail::check_parallel(s.p, s.q, s.r, std::min(s.i, s.k), std::max(s.i, s.k), out);
  });
  rep.note("mode=sampled magma=" + magma->name() + " max_arity=" + std::to_string(opt.max_arity) +
           " samples=" + std::to_string(opt.samples) + " seed=" + std::to_string(opt.seed) + " window=[" +
           std::to_string(opt.lo) + "," + std::to_string(opt.hi) + "]");
  return rep;
}

struct BasicResult {
  bool injective = true;
  bool right_cancellable = true;
  std::optional<std::string> witness;
  Report report;
};

/// Injectivity of x ↦ x ∘ᵢ y for every y and i, with x and y ranging over
/// arities <= max_arity; compared against right cancellability.
inline BasicResult check_basic(const MagmaPtr& magma, int max_arity, unsigned workers = 1) {
  BasicResult res;
  res.right_cancellable = check_properties(*magma).right_cancellable;
  const auto all = all_cliques_up_to(magma, max_arity);
  std::vector<std::optional<std::string>> witness(all.size());
  Report scan = partitioned("basic-scan", all.size(), workers, [&](std::size_t b, Report& out) {
    const Clique& y = all[b];
    for (int i = 1; i <= max_arity; ++i) {
      std::map<Clique, const Clique*> seen;
      for (const auto& x : all) {
        if (x.arity() < i) continue;
        ++out.checked;
        auto [it, fresh] = seen.try_emplace(compose(x, i, y), &x);
        if (!fresh && !witness[b]) {
          witness[b] = to_string(*it->second) + " and " + to_string(x) + " both give " + to_string(it->first) +
                       " under o" + std::to_string(i) + " " + to_string(y);
        }
      }
    }
  });
  for (auto& w : witness) {
    if (w) {
      res.injective = false;
      res.witness = w;
      break;
    }
  }
  res.report.name = "basic";
  res.report.checked = scan.checked;
  res.report.note("magma=" + magma->name() + " max_arity=" + std::to_string(max_arity) +
                  " injective=" + (res.injective ? "true" : "false") +
                  " right_cancellable=" + (res.right_cancellable ? "true" : "false"));
  if (res.witness) res.report.note("witness: " + *res.witness);
  if (res.injective != res.right_cancellable) {
    res.report.fail("magma=" + magma->name(), std::string("injective=") + (res.right_cancellable ? "true" : "false"),
                    std::string("injective=") + (res.injective ? "true" : "false"));
  }
  return res;
}

/// A candidate compatibility law between a rotation and partial composition.
struct CyclicLaw {
  std::string name;
  std::string statement;
  bool inverse;  // uses rotate_inverse instead of rotate
  bool mirror;   // law B instead of law A
};

inline std::vector<CyclicLaw> cyclic_candidates() {
  return {
      {"A(rho)", "rho(p o_i q) = rho(p) o_{i-1} q for i >= 2; rho(p o_1 q) = rho(q) o_m rho(p)", false, false},
      {"B(rho)", "rho(p o_i q) = rho(p) o_{i+1} q for i < n; rho(p o_n q) = rho(q) o_1 rho(p)", false, true},
      {"A(rho^-1)", "rho'(p o_i q) = rho'(p) o_{i-1} q for i >= 2; rho'(p o_1 q) = rho'(q) o_m rho'(p)", true, false},
      {"B(rho^-1)", "rho'(p o_i q) = rho'(p) o_{i+1} q for i < n; rho'(p o_n q) = rho'(q) o_1 rho'(p)", true, true},
  };
}

/// Both sides of a candidate law at (p, i, q).
inline std::pair<Clique, Clique> cyclic_sides(const CyclicLaw& law, const Clique& p, int i, const Clique& q) {
  auto rot = [&](const Clique& c) { return law.inverse ? rotate_inverse(c) : rotate(c); };
  const int n = p.arity();
  const int m = q.arity();
  Clique lhs = rot(compose(p, i, q));
  if (!law.mirror) {
    if (i >= 2) return {lhs, compose(rot(p), i - 1, q)};
    return {lhs, compose(rot(q), m, rot(p))};
  }
  if (i < n) return {lhs, compose(rot(p), i + 1, q)};
  return {lhs, compose(rot(q), 1, rot(p))};
}

struct CyclicResult {
  std::optional<CyclicLaw> law;
  Report report;
};

/// ρ^{n+1} = id up to order_max_arity, then the first candidate law holding on
/// every pair of arity <= max_arity. Each candidate's failure count is noted.
inline CyclicResult check_cyclic(const MagmaPtr& magma, int max_arity, int order_max_arity = 0, unsigned workers = 1) {
  if (order_max_arity <= 0) order_max_arity = max_arity;
  CyclicResult res;
  const auto orbit_space = all_cliques_up_to(magma, order_max_arity);
  Report rep = partitioned("cyclic", orbit_space.size(), workers, [&](std::size_t a, Report& out) {
    const Clique& p = orbit_space[a];
    Clique c = p;
    for (int k = 0; k <= p.arity(); ++k) c = rotate(c);
    if (!out.check(c == p)) out.fail("rho^(n+1) p=" + to_string(p), to_string(p), to_string(c));
    const Clique back = rotate_inverse(rotate(p));
    if (!out.check(back == p)) out.fail("rho^-1 rho p=" + to_string(p), to_string(p), to_string(back));
  });

  const auto pairs = all_cliques_up_to(magma, max_arity);
  for (const auto& law : cyclic_candidates()) {
    Report lr = partitioned("law", pairs.size(), workers, [&](std::size_t a, Report& out) {
      const Clique& p = pairs[a];
      for (const auto& q : pairs) {
        for (int i = 1; i <= p.arity(); ++i) {
          auto [lhs, rhs] = cyclic_sides(law, p, i, q);
          if (!out.check(lhs == rhs)) out.fail("p=" + to_string(p) + " i=" + std::to_string(i) + " q=" + to_string(q),
                     to_string(rhs), to_string(lhs));
        }
      }
    });
    rep.note("law " + law.name + ": checked=" + std::to_string(lr.checked) +
             " failures=" + std::to_string(lr.failures.size()));
    if (!res.law && lr.verdict()) {
      res.law = law;
      rep.checked += lr.checked;
    }
  }
  if (res.law) {
    rep.note("rotation: x -> x-1 for x >= 2, 1 -> n+1");
    rep.note("law holding: " + res.law->name + ": " + res.law->statement);
  } else {
    rep.fail("magma=" + magma->name(), "some candidate law holds", "no candidate law holds");
  }
  rep.note("magma=" + magma->name() + " order_max_arity=" + std::to_string(order_max_arity) +
           " law_max_arity=" + std::to_string(max_arity));
  res.report = std::move(rep);
  return res;
}

/// Cφ(p ∘ᵢ q) = Cφ(p) ∘ᵢ Cφ(q) on all pairs of arity <= max_arity, plus image
/// counting against injectivity/surjectivity of φ.
inline Report verify_functor(const MagmaMorphism& phi, int max_arity, unsigned workers = 1) {
  require(phi.validate(), ErrorKind::invalid_argument, "not a unitary magma morphism");
  const auto all = all_cliques_up_to(phi.source(), max_arity);
  std::vector<Clique> mapped;
  mapped.reserve(all.size());
  for (const auto& p : all) mapped.push_back(map_clique(phi, p));
  Report rep = partitioned("functor", all.size(), workers, [&](std::size_t a, Report& out) {
    const Clique& p = all[a];
    for (std::size_t b = 0; b < all.size(); ++b) {
      const Clique& q = all[b];
      for (int i = 1; i <= p.arity(); ++i) {
        const Clique lhs = map_clique(phi, compose(p, i, q));
        const Clique rhs = compose(mapped[a], i, mapped[b]);
        if (!out.check(lhs == rhs)) out.fail("p=" + to_string(p) + " i=" + std::to_string(i) + " q=" + to_string(q),
                   to_string(rhs), to_string(lhs));
      }
    }
  });
  for (int n = 1; n <= max_arity; ++n) {
    std::vector<Clique> image;
    const auto layer = all_cliques(phi.source(), n);
    for (const auto& p : layer) image.push_back(map_clique(phi, p));
    std::sort(image.begin(), image.end());
    image.erase(std::unique(image.begin(), image.end()), image.end());
    const auto target_size = space_size(phi.target()->size(), n);
    const std::string where = "arity=" + std::to_string(n);
    if (phi.injective()) {
      rep.expect(image.size() == layer.size(), "injective image count " + where, std::to_string(layer.size()),
                 std::to_string(image.size()));
    }
    if (phi.surjective()) {
      rep.expect(Integer(static_cast<unsigned long>(image.size())) == target_size, "surjective image count " + where,
                 target_size.get_str(), std::to_string(image.size()));
    }
  }
  rep.note("morphism " + phi.source()->name() + " -> " + phi.target()->name() +
           " injective=" + (phi.injective() ? "true" : "false") +
           " surjective=" + (phi.surjective() ? "true" : "false"));
  return rep;
}

}  // namespace cliques
