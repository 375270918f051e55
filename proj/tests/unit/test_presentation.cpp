#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>

#include "cliques/presentation.hpp"
#include "oracle.hpp"

using namespace cliques;

namespace {

std::vector<std::vector<mpq_class>> densify(const std::vector<SparseRow>& rows, std::size_t cols) {
  std::vector<std::vector<mpq_class>> out;
  for (const auto& r : rows) {
    std::vector<mpq_class> d(cols, 0);
    for (const auto& [c, v] : r) d[c] = v;
    out.push_back(std::move(d));
  }
  return out;
}

oracle::Dense triangle(const Triangle& t) {
  oracle::Dense d;
  d.n = 2;
  d.lab[{1, 3}] = t[0].id;
  d.lab[{1, 2}] = t[1].id;
  d.lab[{2, 3}] = t[2].id;
  return d;
}

// Evaluations of all weight-2 monomials, glued by the oracle.
std::vector<std::map<std::pair<int, int>, std::int64_t>> oracle_images(const MagmaPtr& M) {
  const MonomialIndex idx(*M);
  std::vector<std::map<std::pair<int, int>, std::int64_t>> out;
  for (std::size_t k = 0; k < idx.dimension(); ++k) {
    const Monomial x = idx.monomial(k);
    out.push_back(oracle::compose(M, triangle(x.top), x.shape, triangle(x.bottom)).lab);
  }
  return out;
}

}  // namespace

TEST_CASE("relation ranks", "[presentation]") {
  struct Want {
    const char* magma;
    std::size_t r, rperp;
  };
  for (auto w : {Want{"D0", 80, 48}, Want{"N2", 80, 48}, Want{"N1", 1, 1}}) {
    auto M = builtin_magma(w.magma);
    CAPTURE(w.magma);
    const RelationSpace R = build_R(M);
    const RelationSpace P = build_Rperp(M);
    CHECK(R.rank() == w.r);
    CHECK(P.rank() == w.rperp);
    CHECK(oracle::rank(densify(R.generators, R.ambient)) == w.r);
    CHECK(oracle::rank(densify(P.generators, P.ambient)) == w.rperp);
  }
}

TEST_CASE("relations span the evaluation kernel", "[presentation]") {
  for (const char* name : {"D0", "N2", "N1", "D1"}) {
    auto M = builtin_magma(name);
    CAPTURE(name);
    const auto images = oracle_images(M);
    const RelationSpace R = build_R(M);
    for (const auto& row : R.generators) {
      REQUIRE(row.size() == 2);
      CHECK(row[0].second + row[1].second == 0);
      CHECK(images[row[0].first] == images[row[1].first]);
    }
    const std::set<std::map<std::pair<int, int>, std::int64_t>> distinct(images.begin(), images.end());
    CHECK(R.rank() == images.size() - distinct.size());
  }
}

TEST_CASE("dual relations are orthogonal", "[presentation]") {
  for (const char* name : {"D0", "N2", "N1", "D1", "N3"}) {
    auto M = builtin_magma(name);
    CAPTURE(name);
    const Report r = verify_koszul_duality(M);
    INFO(format_report(r));
    CHECK(r.verdict());
  }
  // the pairing by hand on dense vectors
  auto M = builtin_magma("D0");
  const RelationSpace R = build_R(M), P = build_Rperp(M);
  const auto dr = densify(R.generators, R.ambient), dp = densify(P.generators, P.ambient);
  const std::size_t half = R.ambient / 2;
  for (const auto& a : dr)
    for (const auto& b : dp) {
      mpq_class s = 0;
      for (std::size_t c = 0; c < a.size(); ++c) s += (c < half ? 1 : -1) * a[c] * b[c];
      REQUIRE(s == 0);
    }
  CHECK_THROWS_AS(verify_koszul_duality(builtin_magma("D2")), Error);
}

TEST_CASE("normal forms", "[presentation]") {
  auto d0 = builtin_magma("D0");
  const std::vector<long> nc = {8, 48, 352, 2880};
  const std::vector<long> flat = {8, 16, 32, 64};
  for (int n = 2; n <= 5; ++n) {
    CHECK(count_normal_forms(d0, n, Orientation::representative) == nc[static_cast<std::size_t>(n - 2)]);
    CHECK(count_normal_forms(d0, n, Orientation::forward) == flat[static_cast<std::size_t>(n - 2)]);
    CHECK(count_normal_forms(d0, n, Orientation::backward) == flat[static_cast<std::size_t>(n - 2)]);
  }
  CHECK(count_normal_forms(d0, 1) == 1);
  for (const char* name : {"N1", "N2", "D1"}) {
    auto M = builtin_magma(name);
    for (int n = 2; n <= 5; ++n) CHECK(count_normal_forms(M, n) == nc_dim(static_cast<std::int64_t>(M->size()), n));
  }
}

TEST_CASE("presentation verifier", "[presentation]") {
  const PresentationResult r = verify_presentation(builtin_magma("D0"), 5);
  INFO(format_report(r.report));
  CHECK(r.report.verdict());
  REQUIRE(r.orientation);
  CHECK(*r.orientation == Orientation::representative);
}

TEST_CASE("echelon rank against dense elimination", "[presentation]") {
  std::mt19937_64 rng(9);
  std::uniform_int_distribution<int> v(-2, 2);
  for (int t = 0; t < 50; ++t) {
    const std::size_t rows = 1 + t % 7, cols = 1 + (t * 3) % 6;
    std::vector<SparseRow> sparse;
    Echelon e;
    for (std::size_t r = 0; r < rows; ++r) {
      std::map<std::size_t, Rational> entries;
      for (std::size_t c = 0; c < cols; ++c) entries[c] = v(rng);
      sparse.push_back(make_row(entries));
      e.insert(sparse.back());
    }
    REQUIRE(e.rank() == oracle::rank(densify(sparse, cols)));
  }
}
