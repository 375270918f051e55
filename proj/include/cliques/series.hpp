#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cliques/clique.hpp"
#include "cliques/error.hpp"
#include "cliques/lincomb.hpp"

namespace cliques {

/// Truncated power series c₀ + c₁t + ... + c_N t^N with exact coefficients.
class Series {
 public:
  explicit Series(int order = 0) : c_(static_cast<std::size_t>(order) + 1, Rational(0)) {}
  Series(int order, std::vector<Rational> coefficients) : Series(order) {
    for (std::size_t k = 0; k < coefficients.size() && k < c_.size(); ++k) c_[k] = coefficients[k];
  }

  [[nodiscard]] int order() const noexcept { return static_cast<int>(c_.size()) - 1; }
  [[nodiscard]] const Rational& operator[](int k) const { return c_[static_cast<std::size_t>(k)]; }
  Rational& operator[](int k) { return c_[static_cast<std::size_t>(k)]; }

  friend Series operator+(const Series& a, const Series& b) {
    Series out(std::min(a.order(), b.order()));
    for (int k = 0; k <= out.order(); ++k) out[k] = a[k] + b[k];
    return out;
  }
  friend Series operator*(const Series& a, const Series& b) {
    Series out(std::min(a.order(), b.order()));
    for (int k = 0; k <= out.order(); ++k)
      for (int j = 0; j <= k; ++j) out[k] += a[j] * b[k - j];
    return out;
  }
  friend bool operator==(const Series& a, const Series& b) { return a.c_ == b.c_; }

  [[nodiscard]] bool is_zero() const {
    for (const auto& x : c_)
      if (x != 0) return false;
    return true;
  }

 private:
  std::vector<Rational> c_;
};

/// Coefficients P0 + P1 H + P2 H² = 0 of a quadratic functional equation.
struct QuadraticEquation {
  Series p0, p1, p2;
};

/// The solution with zero constant term. Requires P1(0) = -1 and P0(0) = 0, so
/// the coefficient of t^n isolates H_n: H_n = [t^n](P0 + (P1 + 1)H + P2 H²).
inline Series solve_quadratic(const QuadraticEquation& eq, int order) {
  require(eq.p1[0] == -1 && eq.p0[0] == 0, ErrorKind::invalid_argument, "equation is not in solvable form");
  Series h(order);
  auto coeff = [](const Series& s, int k) { return k <= s.order() ? s[k] : Rational(0); };
  for (int n = 1; n <= order; ++n) {
    Rational v = coeff(eq.p0, n);
    for (int j = 1; j <= n; ++j) v += coeff(eq.p1, j) * h[n - j];
    for (int j = 0; j <= n; ++j) {
      const Rational a = coeff(eq.p2, j);
      if (a == 0) continue;
      Rational sq = 0;
      for (int u = 1; u < n - j; ++u) sq += h[u] * h[n - j - u];
      v += a * sq;
    }
    h[n] = v;
  }
  return h;
}

/// P0 + P1 H + P2 H², evaluated with plain truncated series arithmetic.
inline Series residual(const QuadraticEquation& eq, const Series& h) {
  auto lift = [&](const Series& s) {
    Series out(h.order());
    for (int k = 0; k <= std::min(s.order(), h.order()); ++k) out[k] = s[k];
    return out;
  };
  return lift(eq.p0) + lift(eq.p1) * h + lift(eq.p2) * (h * h);
}

namespace detail {

inline Rational rat(std::int64_t v) { return Rational(Integer(std::to_string(v))); }

}  // namespace detail

/// t + (m³-2m²+2m-1)t² + ((2m²-3m+2)t - 1)H + (m-1)H² = 0.
inline QuadraticEquation nc_equation(std::int64_t m) {
  const auto a = detail::rat(m * m * m - 2 * m * m + 2 * m - 1);
  const auto b = detail::rat(2 * m * m - 3 * m + 2);
  return {Series(2, {0, 1, a}), Series(1, {-1, b}), Series(0, {detail::rat(m - 1)})};
}

/// t + (m-1)t² + ((2m²-3m+2)t - 1)H + (m³-2m²+2m-1)H² = 0.
inline QuadraticEquation nc_dual_equation(std::int64_t m) {
  const auto a = detail::rat(m * m * m - 2 * m * m + 2 * m - 1);
  const auto b = detail::rat(2 * m * m - 3 * m + 2);
  return {Series(2, {0, 1, detail::rat(m - 1)}), Series(1, {-1, b}), Series(0, {a})};
}

inline Series nc_hilbert(std::int64_t m, int order) {
  require(m >= 1 && order >= 1, ErrorKind::invalid_argument, "nc_hilbert needs m >= 1 and N >= 1");
  return solve_quadratic(nc_equation(m), order);
}

inline Series nc_dual_hilbert(std::int64_t m, int order) {
  require(m >= 1 && order >= 1, ErrorKind::invalid_argument, "nc_dual_hilbert needs m >= 1 and N >= 1");
  return solve_quadratic(nc_dual_equation(m), order);
}

inline Integer binomial(unsigned long n, unsigned long k) {
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

inline Integer ipow(const Integer& base, unsigned long e) {
  Integer out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), e);
  return out;
}

/// Narayana-sum closed form for dim NC M(n).
inline Integer nc_dim(std::int64_t m, int n) {
  require(m >= 1 && n >= 1, ErrorKind::invalid_argument, "nc_dim needs m >= 1 and n >= 1");
  if (n == 1) return 1;
  const Integer mm(std::to_string(m));
  Rational total = 0;
  for (int k = 0; k <= n - 2; ++k) {
    const auto uk = static_cast<unsigned long>(k);
    const auto un = static_cast<unsigned long>(n);
    Rational term(ipow(mm, un + uk + 1) * ipow(mm - 1, un - uk - 2) * binomial(un - 2, uk) * binomial(un - 1, uk));
    term /= Rational(static_cast<unsigned long>(k + 1));
    total += term;
  }
  total.canonicalize();
  require(total.get_den() == 1, ErrorKind::arithmetic, "closed form did not reduce to an integer");
  return total.get_num();
}

/// Noncrossing diagonal sets of the (n+1)-gon with boundary arcs weighted m and
/// each diagonal weighted m²-m, counted by brute force over diagonal subsets.
inline Integer count_dual_configurations(std::int64_t m, int n) {
  require(m >= 1 && n >= 2, ErrorKind::invalid_argument, "count_dual_configurations needs m >= 1 and n >= 2");
  std::vector<Arc> diagonals;
  for (const auto& a : all_arcs(n))
    if (is_diagonal(a, n)) diagonals.push_back(a);
  require(diagonals.size() < 31, ErrorKind::guard, "too many diagonals");
  const Integer mm(std::to_string(m));
  const Integer boundary = ipow(mm, static_cast<unsigned long>(n + 1));
  const Integer w = mm * mm - mm;
  std::vector<Integer> by_size(diagonals.size() + 1, 0);
  const std::uint32_t limit = std::uint32_t{1} << diagonals.size();
  for (std::uint32_t mask = 0; mask < limit; ++mask) {
    bool ok = true;
    int size = 0;
    for (std::size_t a = 0; a < diagonals.size() && ok; ++a) {
      if (!(mask & (std::uint32_t{1} << a))) continue;
      ++size;
      for (std::size_t b = a + 1; b < diagonals.size(); ++b)
        if ((mask & (std::uint32_t{1} << b)) && crosses(diagonals[a], diagonals[b])) ok = false;
    }
    if (ok) by_size[static_cast<std::size_t>(size)] += 1;
  }
  Integer total = 0;
  for (std::size_t s = 0; s < by_size.size(); ++s) total += by_size[s] * ipow(w, s);
  return boundary * total;
}

}  // namespace cliques
