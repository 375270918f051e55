#pragma once

#include <gmpxx.h>

#include <map>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>

#include "cliques/clique.hpp"
#include "cliques/error.hpp"

namespace cliques {

using Rational = mpq_class;
using Integer = mpz_class;

enum class Basis { fundamental, H, K };

inline std::string_view basis_name(Basis b) {
  switch (b) {
    case Basis::fundamental: return "fund";
    case Basis::H: return "H";
    case Basis::K: return "K";
  }
  return "?";
}

inline Basis parse_basis(std::string_view name) {
  if (name == "fund") return Basis::fundamental;
  if (name == "H") return Basis::H;
  if (name == "K") return Basis::K;
  fail(ErrorKind::unknown_name, "unknown basis '" + std::string(name) + "' (expected fund, H or K)");
}

/// Exact formal linear combination of same-arity cliques, tagged by the basis
/// its cliques index. Zero coefficients are never stored.
class LinComb {
 public:
  LinComb(MagmaPtr magma, int arity, Basis basis = Basis::fundamental)
      : magma_(std::move(magma)), arity_(arity), basis_(basis) {}

  static LinComb of(const Clique& p, Basis basis = Basis::fundamental, const Rational& coefficient = 1) {
    LinComb out(p.magma_ptr(), p.arity(), basis);
    out.add(p, coefficient);
    return out;
  }

  [[nodiscard]] const MagmaPtr& magma_ptr() const noexcept { return magma_; }
  [[nodiscard]] const Magma& magma() const noexcept { return *magma_; }
  [[nodiscard]] int arity() const noexcept { return arity_; }
  [[nodiscard]] Basis basis() const noexcept { return basis_; }
  [[nodiscard]] const std::map<Clique, Rational>& terms() const noexcept { return terms_; }
  [[nodiscard]] bool empty() const noexcept { return terms_.empty(); }
  [[nodiscard]] std::size_t size() const noexcept { return terms_.size(); }

  [[nodiscard]] Rational coefficient(const Clique& p) const {
    auto it = terms_.find(p);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  LinComb& add(const Clique& p, const Rational& coefficient) {
    if (p.arity() != arity_)
      fail(ErrorKind::invalid_argument, "arity mismatch: term of arity " + std::to_string(p.arity()) +
                                            " in a combination of arity " + std::to_string(arity_));
    if (!same_magma(p.magma(), *magma_)) fail(ErrorKind::invalid_argument, "magma mismatch in linear combination");
    if (coefficient == 0) return *this;
    auto [it, inserted] = terms_.try_emplace(p, coefficient);
    if (!inserted) {
      it->second += coefficient;
      if (it->second == 0) terms_.erase(it);
    }
    return *this;
  }

  LinComb& operator+=(const LinComb& other) { return accumulate(other, 1); }
  LinComb& operator-=(const LinComb& other) { return accumulate(other, -1); }

  LinComb& operator*=(const Rational& scalar) {
    if (scalar == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [p, c] : terms_) c *= scalar;
    return *this;
  }

  friend LinComb operator+(LinComb a, const LinComb& b) { return a += b; }
  friend LinComb operator-(LinComb a, const LinComb& b) { return a -= b; }
  friend LinComb operator*(const Rational& s, LinComb a) { return a *= s; }

  friend bool operator==(const LinComb& a, const LinComb& b) {
    return a.basis_ == b.basis_ && a.arity_ == b.arity_ && a.terms_ == b.terms_;
  }

 private:
  LinComb& accumulate(const LinComb& other, int sign) {
    require(other.basis_ == basis_, ErrorKind::basis_mismatch,
            "cannot mix bases " + std::string(basis_name(basis_)) + " and " + std::string(basis_name(other.basis_)));
    require(other.arity_ == arity_, ErrorKind::invalid_argument, "arity mismatch in linear combination");
    for (const auto& [p, c] : other.terms_) add(p, sign * c);
    return *this;
  }

  MagmaPtr magma_;
  int arity_;
  Basis basis_;
  std::map<Clique, Rational> terms_;
};

inline std::string to_string(const LinComb& f) {
  std::ostringstream os;
  if (f.empty()) return "0";
  bool first = true;
  for (const auto& [p, c] : f.terms()) {
    if (!first) os << " + ";
    first = false;
    os << c.get_str() << "*" << basis_name(f.basis()) << to_string(p);
  }
  return os.str();
}

}  // namespace cliques
