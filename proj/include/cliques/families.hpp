#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cliques/clique.hpp"
#include "cliques/enumerate.hpp"
#include "cliques/error.hpp"
#include "cliques/lincomb.hpp"
#include "cliques/magma.hpp"
#include "cliques/operad.hpp"
#include "cliques/report.hpp"

namespace cliques {

enum class FamilyKind { quotient, suboperad, quotient_of_suboperad };
enum class CroMode { quotient, suboperad };

inline std::string_view kind_name(FamilyKind k) {
  switch (k) {
    case FamilyKind::quotient: return "quotient";
    case FamilyKind::suboperad: return "suboperad";
    case FamilyKind::quotient_of_suboperad: return "quotient-of-suboperad";
  }
  return "?";
}

/// A quotient or suboperad of C M given by a predicate on basis cliques. For
/// quotients the complement of `member` spans a monomial ideal; `ambient` is the
/// suboperad the family lives in (everything for plain quotients).
struct OperadFamily {
  std::string name;
  FamilyKind kind = FamilyKind::quotient;
  std::optional<int> k;
  std::function<bool(const CliqueStats&)> member;
  std::function<bool(const CliqueStats&)> ambient = [](const CliqueStats&) { return true; };
  bool needs_no_unit_divisors = false;

  [[nodiscard]] bool contains(const Clique& p) const { return member(stats(p)); }
  [[nodiscard]] bool in_ambient(const Clique& p) const { return ambient(stats(p)); }
  [[nodiscard]] bool admissible(const MagmaProperties& props) const {
    return !needs_no_unit_divisors || !props.has_nontrivial_unit_divisors;
  }
  [[nodiscard]] std::string label() const { return k ? name + ":" + std::to_string(*k) : name; }
};

inline const std::vector<std::string>& family_names() {
  static const std::vector<std::string> names = {"Bub", "Whi", "Cro", "Nes", "NesK", "Deg", "Acy", "NC",
                                                 "Inv", "Sch", "Pat", "For", "Mot", "Dis", "Luc"};
  return names;
}

inline OperadFamily family(std::string_view name, std::optional<int> k = std::nullopt,
                           CroMode mode = CroMode::quotient) {
  auto need_k = [&] {
    require(k.has_value(), ErrorKind::invalid_argument, "family " + std::string(name) + " needs a parameter k");
    require(*k >= 0, ErrorKind::invalid_argument, "family parameter k must be >= 0");
    return *k;
  };
  auto white = [](const CliqueStats& s) { return s.white; };
  OperadFamily f;
  f.name = std::string(name);
  if (name == "Bub") {
    f.member = [](const CliqueStats& s) { return s.bubble; };
  } else if (name == "Whi") {
    f.kind = FamilyKind::suboperad;
    f.member = white;
  } else if (name == "Cro" || name == "NC") {
    const int kk = name == "NC" ? 0 : need_k();
    if (name == "Cro") f.k = kk;
    if (mode == CroMode::suboperad) f.kind = FamilyKind::suboperad;
    f.member = [kk](const CliqueStats& s) { return s.crossing <= kk; };
  } else if (name == "Acy") {
    f.member = [](const CliqueStats& s) { return s.acyclic; };
    f.needs_no_unit_divisors = true;
  } else if (name == "Nes") {
    f.member = [](const CliqueStats& s) { return s.nesting_free; };
    f.needs_no_unit_divisors = true;
  } else if (name == "NesK") {
    const int kk = need_k();
    f.k = kk;
    f.member = [kk](const CliqueStats& s) { return s.max_nesting <= kk; };
    f.needs_no_unit_divisors = true;
  } else if (name == "Deg" || name == "Inv") {
    const int kk = name == "Inv" ? 1 : need_k();
    if (name == "Deg") f.k = kk;
    f.member = [kk](const CliqueStats& s) { return s.max_degree <= kk; };
    f.needs_no_unit_divisors = true;
  } else if (name == "Sch") {
    f.kind = FamilyKind::quotient_of_suboperad;
    f.ambient = white;
    f.member = [](const CliqueStats& s) { return s.white && s.crossing == 0; };
  } else if (name == "Pat") {
    f.member = [](const CliqueStats& s) { return s.acyclic && s.max_degree <= 2; };
    f.needs_no_unit_divisors = true;
  } else if (name == "For") {
    f.member = [](const CliqueStats& s) { return s.acyclic && s.crossing == 0; };
    f.needs_no_unit_divisors = true;
  } else if (name == "Mot") {
    f.member = [](const CliqueStats& s) { return s.crossing == 0 && s.max_degree <= 1; };
    f.needs_no_unit_divisors = true;
  } else if (name == "Dis") {
    f.kind = FamilyKind::quotient_of_suboperad;
    f.ambient = white;
    f.member = [](const CliqueStats& s) { return s.white && s.crossing == 0 && s.max_degree <= 1; };
    f.needs_no_unit_divisors = true;
  } else if (name == "Luc") {
    f.member = [](const CliqueStats& s) { return s.bubble && s.max_degree <= 1; };
    f.needs_no_unit_divisors = true;
  } else {
    fail(ErrorKind::unknown_name, "unknown family '" + std::string(name) + "'");
  }
  return f;
}

/// "Cro:2", "Deg:1", "NC". An optional ":sub" suffix selects suboperad mode for Cro.
inline OperadFamily parse_family(std::string_view spec) {
  std::string_view name = spec;
  std::optional<int> k;
  CroMode mode = CroMode::quotient;
  if (auto colon = spec.find(':'); colon != std::string_view::npos) {
    name = spec.substr(0, colon);
    std::string_view rest = spec.substr(colon + 1);
    if (auto sub = rest.find(":sub"); sub != std::string_view::npos && sub + 4 == rest.size()) {
      mode = CroMode::suboperad;
      rest = rest.substr(0, sub);
    }
    auto v = detail::parse_suffix_int(rest);
    require(v.has_value(), ErrorKind::invalid_argument, "bad family parameter in '" + std::string(spec) + "'");
    k = *v;
  }
  return family(name, k, mode);
}

/// Throws an admissibility error naming the violated condition.
inline void require_admissible(const OperadFamily& f, const Magma& magma) {
  if (!f.admissible(check_properties(magma))) {
    fail(ErrorKind::admissibility, "family " + f.label() + " needs a magma without nontrivial unit divisors; " +
                                       magma.name() + " has one");
  }
}

/// Quotient map: drops every term outside the family.
inline LinComb project(const LinComb& f, const OperadFamily& fam) {
  require(fam.kind != FamilyKind::suboperad, ErrorKind::invalid_argument,
          "family " + fam.label() + " is a suboperad; projection is undefined");
  require(f.basis() == Basis::fundamental, ErrorKind::basis_mismatch, "projection needs a fundamental-basis input");
  LinComb out(f.magma_ptr(), f.arity());
  for (const auto& [p, c] : f.terms())
    if (fam.contains(p)) out.add(p, c);
  return out;
}

/// Composition inside the family: compose then project for quotients; for
/// suboperads the result must already lie in the family.
inline LinComb q_compose(const LinComb& f, int i, const LinComb& g, const OperadFamily& fam) {
  for (const auto* x : {&f, &g}) {
    for (const auto& [p, c] : x->terms()) {
      if (!fam.contains(p))
        fail(ErrorKind::invalid_argument, "operand term " + to_string(p) + " is not in family " + fam.label());
    }
  }
  LinComb out = lin_compose(f, i, g);
  if (fam.kind == FamilyKind::quotient) return project(out, fam);
  for (const auto& [p, c] : out.terms()) {
    const bool closed = fam.kind == FamilyKind::suboperad ? fam.contains(p) : fam.in_ambient(p);
    if (!closed) fail(ErrorKind::closure, "composition left family " + fam.label() + ": " + to_string(p));
  }
  return fam.kind == FamilyKind::suboperad ? out : project(out, fam);
}

/// Monomial-ideal check: a clique outside the family (but inside its ambient
/// suboperad) stays outside after composing with anything on either side.
inline Report verify_ideal(const OperadFamily& fam, const MagmaPtr& magma, int max_arity, unsigned workers = 1) {
  require_admissible(fam, *magma);
  require(fam.kind != FamilyKind::suboperad, ErrorKind::invalid_argument,
          "family " + fam.label() + " is a suboperad; use verify_suboperad");
  std::vector<Clique> all;
  for (auto& p : all_cliques_up_to(magma, max_arity))
    if (fam.in_ambient(p)) all.push_back(std::move(p));
  Report rep = partitioned("ideal", all.size(), workers, [&](std::size_t a, Report& out) {
    const Clique& p = all[a];
    if (fam.contains(p)) return;
    for (const auto& q : all) {
      for (int i = 1; i <= p.arity(); ++i) {
        const Clique r = compose(p, i, q);
        if (!out.check(!fam.contains(r)))
          out.fail("p=" + to_string(p) + " o" + std::to_string(i) + " q=" + to_string(q), "outside family",
                   to_string(r));
      }
      for (int j = 1; j <= q.arity(); ++j) {
        const Clique r = compose(q, j, p);
        if (!out.check(!fam.contains(r)))
          out.fail("q=" + to_string(q) + " o" + std::to_string(j) + " p=" + to_string(p), "outside family",
                   to_string(r));
      }
    }
  });
  rep.note("family=" + fam.label() + " kind=" + std::string(kind_name(fam.kind)) + " magma=" + magma->name() +
           " max_arity=" + std::to_string(max_arity));
  return rep;
}

/// Closure of the family under composition (suboperad claim), or of the
/// ambient suboperad for quotients of suboperads.
inline Report verify_suboperad(const OperadFamily& fam, const MagmaPtr& magma, int max_arity, unsigned workers = 1) {
  auto inside = [&](const Clique& p) {
    return fam.kind == FamilyKind::quotient_of_suboperad ? fam.in_ambient(p) : fam.contains(p);
  };
  std::vector<Clique> members;
  for (auto& p : all_cliques_up_to(magma, max_arity))
    if (inside(p)) members.push_back(std::move(p));
  Report rep = partitioned("suboperad", members.size(), workers, [&](std::size_t a, Report& out) {
    const Clique& p = members[a];
    for (const auto& q : members) {
      for (int i = 1; i <= p.arity(); ++i) {
        const Clique r = compose(p, i, q);
        if (!out.check(inside(r)))
          out.fail("p=" + to_string(p) + " o" + std::to_string(i) + " q=" + to_string(q), "inside family",
                   to_string(r));
      }
    }
  });
  rep.note("family=" + fam.label() + " magma=" + magma->name() + " members=" + std::to_string(members.size()) +
           " max_arity=" + std::to_string(max_arity));
  return rep;
}

/// project(f ∘ᵢ g) = project(f) ∘ᵢ project(g) over all basis pairs of arity <= max_arity.
inline Report verify_projection_compatibility(const OperadFamily& fam, const MagmaPtr& magma, int max_arity,
                                              unsigned workers = 1) {
  require_admissible(fam, *magma);
  std::vector<Clique> all;
  for (auto& p : all_cliques_up_to(magma, max_arity))
    if (fam.in_ambient(p)) all.push_back(std::move(p));
  Report rep = partitioned("projection", all.size(), workers, [&](std::size_t a, Report& out) {
    const LinComb f = LinComb::of(all[a]);
    const LinComb pf = project(f, fam);
    for (const auto& q : all) {
      const LinComb g = LinComb::of(q);
      const LinComb pg = project(g, fam);
      for (int i = 1; i <= f.arity(); ++i) {
        const LinComb lhs = project(lin_compose(f, i, g), fam);
        const LinComb rhs = pf.empty() || pg.empty() ? LinComb(magma, f.arity() + g.arity() - 1)
                                                     : q_compose(pf, i, pg, fam);
        if (!out.check(lhs == rhs))
          out.fail("p=" + to_string(all[a]) + " o" + std::to_string(i) + " q=" + to_string(q), to_string(rhs),
                   to_string(lhs));
      }
    }
  });
  rep.note("family=" + fam.label() + " magma=" + magma->name() + " max_arity=" + std::to_string(max_arity));
  return rep;
}

}  // namespace cliques
