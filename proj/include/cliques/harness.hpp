#pragma once

#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "cliques/clique.hpp"
#include "cliques/enumerate.hpp"
#include "cliques/families.hpp"
#include "cliques/linalg.hpp"
#include "cliques/magma.hpp"
#include "cliques/noncrossing.hpp"
#include "cliques/report.hpp"
#include "cliques/series.hpp"

namespace cliques {

struct SequenceEntry {
  std::string family;  // family label, e.g. "Deg:2"
  std::string magma;
  std::vector<Integer> values;  // from arity 1
  std::string citation;
};

inline const std::vector<SequenceEntry>& sequence_registry() {
  static const std::vector<SequenceEntry> entries = [] {
    auto seq = [](std::initializer_list<long> v) {
      std::vector<Integer> out;
      for (long x : v) out.emplace_back(x);
      return out;
    };
    return std::vector<SequenceEntry>{
        {"Acy", "D0", seq({1, 7, 38, 291, 2932}), "OEIS A001858"},
        {"Nes", "D0", seq({1, 5, 14, 42, 132}), "OEIS A000108 (Catalan)"},
        {"Inv", "D0", seq({1, 4, 10, 26, 76}), "OEIS A000085"},
        {"Deg:1", "D0", seq({1, 4, 10, 26, 76}), "OEIS A000085"},
        {"Inv", "D1", seq({1, 7, 25, 81, 331}), "OEIS A047974"},
        {"Deg:1", "D1", seq({1, 7, 25, 81, 331}), "OEIS A047974"},
        {"Deg:2", "D0", seq({1, 8, 41, 253, 1858}), "OEIS A136281"},
        {"Sch", "D0", seq({1, 1, 3, 11, 45}), "OEIS A001003"},
        {"Pat", "D0", seq({1, 7, 34, 206, 1486}), "OEIS A011800"},
        {"For", "D0", seq({1, 7, 33, 181, 1083}), "OEIS A054727"},
        {"Mot", "D0", seq({1, 4, 9, 21, 51}), "OEIS A001006"},
        {"Dis", "D0", seq({1, 1, 3, 6, 13}), "OEIS A093128"},
        {"Luc", "D0", seq({1, 4, 7, 11, 18}), "OEIS A000032 (Lucas)"},
        {"NC", "D0", seq({1, 8, 48, 352, 2880}), "OEIS A054726"},
        {"NC", "N2", seq({1, 8, 48, 352, 2880}), "OEIS A054726"},
        {"Cro:0", "D0", seq({1, 8, 48, 352, 2880}), "OEIS A054726"},
    };
  }();
  return entries;
}

/// Expected values for arities 1..n_max: the registry when it has the pair,
/// otherwise a closed form when one is known for the family.
inline std::optional<std::pair<std::vector<Integer>, std::string>> expected_sequence(const OperadFamily& fam,
                                                                                     const Magma& magma, int n_max) {
  for (const auto& e : sequence_registry()) {
    if (e.family == fam.label() && e.magma == magma.name() && static_cast<int>(e.values.size()) >= n_max) {
      return std::make_pair(std::vector<Integer>(e.values.begin(), e.values.begin() + n_max), e.citation);
    }
  }
  const auto m = magma.size();
  std::vector<Integer> out{1};
  std::string why;
  if (fam.label() == "Deg:0") {
    for (int n = 2; n <= n_max; ++n) out.emplace_back(1);
    why = "associative operad";
  } else if (fam.name == "Bub") {
    for (int n = 2; n <= n_max; ++n) out.push_back(ipow(Integer(static_cast<unsigned long>(m)), static_cast<unsigned long>(n + 1)));
    why = "m^(n+1)";
  } else if (fam.name == "Whi") {
    for (int n = 2; n <= n_max; ++n)
      out.push_back(ipow(Integer(static_cast<unsigned long>(m)), static_cast<unsigned long>((n + 1) * (n - 2) / 2)));
    why = "m^((n+1)(n-2)/2)";
  } else if (fam.label() == "NC" || fam.label() == "Cro:0") {
    for (int n = 2; n <= n_max; ++n) out.push_back(nc_dim(static_cast<std::int64_t>(m), n));
    why = "Narayana-sum closed form";
  } else {
    return std::nullopt;
  }
  return std::make_pair(out, why);
}

struct DimensionRow {
  int arity = 0;
  Integer computed;
  std::optional<Integer> expected;
  [[nodiscard]] bool match() const { return !expected || *expected == computed; }
};

struct DimensionTable {
  std::string family;
  std::string magma;
  std::string citation;
  std::vector<DimensionRow> rows;
  [[nodiscard]] bool verdict() const {
    for (const auto& r : rows)
      if (!r.match()) return false;
    return true;
  }
  [[nodiscard]] bool has_expected() const {
    for (const auto& r : rows)
      if (r.expected) return true;
    return false;
  }
};

/// Streaming enumeration count of arity-n cliques in a family.
inline std::uint64_t enumerate_count(const MagmaPtr& magma, int n, const OperadFamily* fam = nullptr,
                                     std::uint64_t guard = kDefaultEnumerationGuard) {
  if (!fam) return count_cliques(magma, n, [](const Clique&) { return true; }, guard);
  return count_cliques(magma, n, [&](const Clique& p) { return fam->contains(p); }, guard);
}

/// Family dimensions for arities 1..n_max, counted over solid-arc supports.
inline DimensionTable dimension_table(const OperadFamily& fam, const MagmaPtr& magma, int n_max,
                                      std::uint64_t guard = kDefaultEnumerationGuard) {
  require(magma->is_finite(), ErrorKind::invalid_argument, "dimension tables need a finite magma");
  require(n_max >= 1, ErrorKind::invalid_argument, "n_max must be >= 1");
  require_admissible(fam, *magma);
  DimensionTable t;
  t.family = fam.label();
  t.magma = magma->name();
  auto expected = expected_sequence(fam, *magma, n_max);
  if (expected) t.citation = expected->second;
  for (int n = 1; n <= n_max; ++n) {
    DimensionRow row;
    row.arity = n;
    row.computed = count_by_support(magma->size(), n, fam.member, guard);
    if (expected) row.expected = expected->first[static_cast<std::size_t>(n - 1)];
    t.rows.push_back(std::move(row));
  }
  return t;
}

inline std::string table_csv(const DimensionTable& t) {
  std::ostringstream os;
  os << "arity,computed,expected,match\n";
  for (const auto& r : t.rows) {
    os << r.arity << "," << r.computed.get_str() << "," << (r.expected ? r.expected->get_str() : "") << ","
       << (r.match() ? "true" : "false") << "\n";
  }
  return os.str();
}

struct SpanResult {
  int arity = 0;
  std::size_t span_dim = 0;
  std::size_t generator_count = 0;
  std::size_t total = 0;
  bool minimal = true;
  bool verdict = false;
};

/// Every diagonal is crossed by some solid diagonal.
inline bool in_minimal_generating_set(const Clique& p) {
  const int n = p.arity();
  for (const auto& a : all_arcs(n)) {
    if (!is_diagonal(a, n)) continue;
    bool crossed = false;
    for (const auto& la : p.solid())
      if (is_diagonal(la.arc, n) && crosses(a, la.arc)) crossed = true;
    if (!crossed) return false;
  }
  return true;
}

/// Span of all p ∘ᵢ q with arity(p), arity(q) >= 2 landing in arity n, against
/// the cliques of the minimal generating set.
inline SpanResult generating_span(const MagmaPtr& magma, int n, std::uint64_t guard = kDefaultEnumerationGuard) {
  require(n >= 2, ErrorKind::invalid_argument, "generating_span needs n >= 2");
  const auto space = all_cliques(magma, n, guard);
  std::map<Clique, std::size_t> index;
  for (std::size_t k = 0; k < space.size(); ++k) index.emplace(space[k], k);
  Echelon span;
  for (int a = 2; a <= n - 1; ++a) {
    const auto ps = all_cliques(magma, a, guard);
    const auto qs = all_cliques(magma, n + 1 - a, guard);
    for (const auto& p : ps)
      for (const auto& q : qs)
        for (int i = 1; i <= a; ++i) span.insert({{index.at(compose(p, i, q)), Rational(1)}});
  }
  SpanResult res;
  res.arity = n;
  res.span_dim = span.rank();
  res.total = space.size();
  for (std::size_t k = 0; k < space.size(); ++k) {
    if (!in_minimal_generating_set(space[k])) continue;
    ++res.generator_count;
    if (span.contains({{k, Rational(1)}})) res.minimal = false;
  }
  res.verdict = res.minimal && res.span_dim + res.generator_count == res.total;
  return res;
}

/// Boundary arcs (edges and base) all solid, no crossing.
inline bool bnc_member(const Clique& p) {
  const int n = p.arity();
  if (n == 1) return true;
  if (stats(p).crossing != 0) return false;
  for (int pos = 0; pos <= n; ++pos)
    if (p.magma().is_unit(p.boundary_label(pos))) return false;
  return true;
}

inline Report reconstruction_checks(unsigned workers = 1) {
  Report rep;
  rep.name = "reconstruction";
  const auto bnc = builtin::bnc();
  const Series dual = nc_dual_hilbert(2, 4);
  std::vector<Clique> small;
  for (int n = 2; n <= 4; ++n) {
    std::uint64_t count = 0;
    for_each_clique(bnc, n, [&](const Clique& p) {
      if (!bnc_member(p)) return;
      ++count;
      if (n <= 3) small.push_back(p);
    });
    const Rational want = dual[n];
    rep.expect(Rational(static_cast<unsigned long>(count)) == want, "BNC boundary-solid count n=" + std::to_string(n),
               want.get_str(), std::to_string(count));
    rep.note("BNC n=" + std::to_string(n) + " count=" + std::to_string(count));
  }
  Report closure = partitioned("closure", small.size(), workers, [&](std::size_t a, Report& out) {
    const Clique& p = small[a];
    for (const auto& q : small) {
      for (int i = 1; i <= p.arity(); ++i) {
        const Clique r = compose(p, i, q);
        if (!out.check(bnc_member(r)))
          out.fail("BNC closure p=" + to_string(p) + " o" + std::to_string(i) + " q=" + to_string(q),
                   "boundary-solid noncrossing", to_string(r));
      }
    }
  });
  rep.merge(closure);
  rep.note("BNC reading: boundary = edges and base");

  const auto dmt = builtin::dmt();
  const auto mt = builtin::mt();
  bool closed = true;
  std::vector<Element> carrier{dmt->parse("(e|e)"), dmt->parse("(0|e)")};
  for (auto a : carrier)
    for (auto b : carrier)
      if (std::find(carrier.begin(), carrier.end(), dmt->op(a, b)) == carrier.end()) closed = false;
  rep.expect(closed, "MT carrier closed in DMT", "true", closed ? "true" : "false");
  for (const auto& [magma, m] : {std::pair{mt, 2UL}, std::pair{dmt, 4UL}}) {
    for (int n = 2; n <= 4; ++n) {
      const std::uint64_t got = enumerate_count(magma, n);
      const Integer want = ipow(Integer(m), static_cast<unsigned long>(arc_count(n)));
      rep.expect(Integer(static_cast<unsigned long>(got)) == want, magma->name() + " dim n=" + std::to_string(n),
                 want.get_str(), std::to_string(got));
      rep.note(magma->name() + " n=" + std::to_string(n) + " dim=" + std::to_string(got));
    }
  }
  return rep;
}

}  // namespace cliques
