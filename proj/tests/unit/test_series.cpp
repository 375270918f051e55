#include <catch2/catch_amalgamated.hpp>

#include "cliques/series.hpp"
#include "oracle.hpp"

using namespace cliques;

namespace {

std::vector<Integer> coefficients(const Series& s) {
  std::vector<Integer> out;
  for (int k = 1; k <= s.order(); ++k) {
    REQUIRE(s[k].get_den() == 1);
    out.push_back(s[k].get_num());
  }
  return out;
}

std::vector<Integer> ints(std::initializer_list<long> v) { return {v.begin(), v.end()}; }

}  // namespace

TEST_CASE("Hilbert series values", "[series]") {
  CHECK(coefficients(nc_hilbert(2, 5)) == ints({1, 8, 48, 352, 2880}));
  CHECK(coefficients(nc_dual_hilbert(2, 5)) == ints({1, 8, 80, 992, 13760}));
  CHECK(coefficients(nc_hilbert(1, 6)) == ints({1, 1, 1, 1, 1, 1}));
  CHECK(nc_hilbert(2, 5)[0] == 0);
}

TEST_CASE("series solve their equations", "[series]") {
  for (std::int64_t m = 1; m <= 6; ++m) {
    CAPTURE(m);
    CHECK(residual(nc_equation(m), nc_hilbert(m, 10)).is_zero());
    CHECK(residual(nc_dual_equation(m), nc_dual_hilbert(m, 10)).is_zero());
    // a perturbed series must not
    Series h = nc_hilbert(m, 10);
    h[4] += 1;
    CHECK_FALSE(residual(nc_equation(m), h).is_zero());
  }
}

TEST_CASE("closed form matches the series", "[series]") {
  for (std::int64_t m = 1; m <= 4; ++m) {
    const Series h = nc_hilbert(m, 8);
    for (int n = 1; n <= 8; ++n) {
      CAPTURE(m, n);
      CHECK(Rational(nc_dim(m, n)) == h[n]);
    }
  }
}

TEST_CASE("dual coefficients count weighted dissections", "[series]") {
  for (std::int64_t m = 1; m <= 3; ++m) {
    const Series h = nc_dual_hilbert(m, 6);
    for (int n = 2; n <= 6; ++n) {
      CAPTURE(m, n);
      CHECK(Rational(count_dual_configurations(m, n)) == h[n]);
    }
  }
}

TEST_CASE("noncrossing dimensions by brute force", "[series]") {
  auto count = [](const MagmaPtr& M, int n) {
    long c = 0;
    oracle::each(M, n, [&](const oracle::Dense& d) { c += oracle::noncrossing(d, M->unit().id); });
    return c;
  };
  auto d0 = builtin_magma("D0"), d1 = builtin_magma("D1"), n1 = builtin_magma("N1");
  for (int n = 1; n <= 4; ++n) CHECK(nc_dim(2, n) == count(d0, n));
  for (int n = 1; n <= 3; ++n) CHECK(nc_dim(3, n) == count(d1, n));
  CHECK(count(d1, 3) == 405);
  for (int n = 1; n <= 5; ++n) CHECK(nc_dim(1, n) == count(n1, n));
}

TEST_CASE("integer helpers", "[series]") {
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(0, 0) == 1);
  CHECK(ipow(Integer(3), 4) == 81);
  CHECK(ipow(Integer(7), 0) == 1);
  CHECK_THROWS_AS(nc_dim(0, 3), Error);
  CHECK_THROWS_AS(nc_hilbert(2, 0), Error);
}
