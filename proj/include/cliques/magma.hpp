#pragma once

#include <algorithm>
#include <charconv>
#include <compare>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cliques/error.hpp"

namespace cliques {

/// An element of a unitary magma. For finite magmas `id` indexes the element list;
/// for the integers it is the integer itself.
struct Element {
  std::int64_t id = 0;
  friend constexpr auto operator<=>(Element, Element) = default;
};

class Magma;
using MagmaPtr = std::shared_ptr<const Magma>;

/// A set with a binary operation admitting a two-sided unit. Immutable once built.
///
/// Finite magmas are table-backed and carry an ordered list of string labels; that
/// order is the canonical element order used everywhere downstream. The additive
/// integers are the one rule-backed instance.
class Magma {
 public:
  [[nodiscard]] const std::string& name() const noexcept { return name_; }
  [[nodiscard]] bool is_finite() const noexcept { return !integers_; }

  [[nodiscard]] std::size_t size() const {
    require(is_finite(), ErrorKind::invalid_argument, "magma " + name_ + " is infinite");
    return labels_.size();
  }

  [[nodiscard]] std::vector<Element> elements() const {
    std::vector<Element> out(size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = Element{static_cast<std::int64_t>(i)};
    return out;
  }

  [[nodiscard]] Element unit() const noexcept { return unit_; }
  [[nodiscard]] bool is_unit(Element a) const noexcept { return a == unit_; }

  [[nodiscard]] bool contains(Element a) const noexcept {
    return integers_ || (a.id >= 0 && static_cast<std::size_t>(a.id) < labels_.size());
  }

  [[nodiscard]] Element op(Element a, Element b) const {
    if (integers_) {
      std::int64_t sum = 0;
      if (__builtin_add_overflow(a.id, b.id, &sum)) fail(ErrorKind::arithmetic, "integer label overflow");
      return Element{sum};
    }
    return table_[static_cast<std::size_t>(a.id) * labels_.size() + static_cast<std::size_t>(b.id)];
  }

  [[nodiscard]] std::string label(Element a) const {
    if (integers_) return std::to_string(a.id);
    require(contains(a), ErrorKind::invalid_argument, "element outside magma " + name_);
    return labels_[static_cast<std::size_t>(a.id)];
  }

  [[nodiscard]] std::optional<Element> find(std::string_view text) const {
    if (integers_) {
      std::int64_t v = 0;
      auto first = text.data();
      auto last = text.data() + text.size();
      if (!text.empty() && text.front() == '+') ++first;
      auto [ptr, ec] = std::from_chars(first, last, v);
      if (ec != std::errc{} || ptr != last || first == last) return std::nullopt;
      return Element{v};
    }
    auto it = std::find(labels_.begin(), labels_.end(), text);
    if (it == labels_.end()) return std::nullopt;
    return Element{static_cast<std::int64_t>(it - labels_.begin())};
  }

  [[nodiscard]] Element parse(std::string_view text) const {
    auto e = find(text);
    if (!e) fail(ErrorKind::invalid_argument, "label '" + std::string(text) + "' is not an element of " + name_);
    return *e;
  }

  [[nodiscard]] std::vector<Element> non_units() const {
    auto all = elements();
    std::erase(all, unit_);
    return all;
  }

  /// Table-backed magma; the caller guarantees closure and the unit axiom
  /// (use make_table_magma for validated construction).
  static MagmaPtr finite(std::string name, std::vector<std::string> labels, Element unit,
                         std::vector<Element> table) {
    return MagmaPtr(new Magma(std::move(name), std::move(labels), unit, std::move(table), false));
  }

  static MagmaPtr integers() { return MagmaPtr(new Magma("Z", {}, Element{0}, {}, true)); }

 private:
  Magma(std::string name, std::vector<std::string> labels, Element unit, std::vector<Element> table,
        bool integers)
      : name_(std::move(name)),
        labels_(std::move(labels)),
        unit_(unit),
        table_(std::move(table)),
        integers_(integers) {}

  std::string name_;
  std::vector<std::string> labels_;
  Element unit_;
  std::vector<Element> table_;
  bool integers_;
};

inline bool same_magma(const Magma& a, const Magma& b) { return &a == &b || a.name() == b.name(); }

/// Validated construction from a multiplication table given by labels:
/// `table[i][j]` is the label of `elements[i] ⋆ elements[j]`.
inline MagmaPtr make_table_magma(const std::vector<std::string>& elements, const std::string& unit,
                                 const std::vector<std::vector<std::string>>& table,
                                 std::string name = "custom") {
  const std::size_t m = elements.size();
  require(m > 0, ErrorKind::invalid_argument, "a magma needs at least one element");
  auto index_of = [&](const std::string& label) -> std::optional<std::size_t> {
    auto it = std::find(elements.begin(), elements.end(), label);
    if (it == elements.end()) return std::nullopt;
    return static_cast<std::size_t>(it - elements.begin());
  };
  for (std::size_t i = 0; i < m; ++i) {
    require(std::count(elements.begin(), elements.end(), elements[i]) == 1, ErrorKind::invalid_argument,
            "duplicate element label '" + elements[i] + "'");
  }
  auto u = index_of(unit);
  require(u.has_value(), ErrorKind::invalid_argument, "unit '" + unit + "' is not an element");
  require(table.size() == m, ErrorKind::invalid_argument, "table is not total");
  std::vector<Element> flat(m * m);
  for (std::size_t i = 0; i < m; ++i) {
    require(table[i].size() == m, ErrorKind::invalid_argument, "table is not total");
    for (std::size_t j = 0; j < m; ++j) {
      auto k = index_of(table[i][j]);
      require(k.has_value(), ErrorKind::invalid_argument,
              "table is not closed: " + elements[i] + "*" + elements[j] + " = " + table[i][j]);
      flat[i * m + j] = Element{static_cast<std::int64_t>(*k)};
    }
  }
  for (std::size_t a = 0; a < m; ++a) {
    require(flat[*u * m + a].id == static_cast<std::int64_t>(a) && flat[a * m + *u].id == static_cast<std::int64_t>(a),
            ErrorKind::invalid_argument, "unit axiom violated at element '" + elements[a] + "'");
  }
  return Magma::finite(std::move(name), elements, Element{static_cast<std::int64_t>(*u)}, std::move(flat));
}

namespace builtin {

inline MagmaPtr integers() { return Magma::integers(); }

/// ℤ/ℓℤ under addition, labels "0".."ℓ-1".
inline MagmaPtr cyclic(int ell) {
  require(ell >= 1, ErrorKind::invalid_argument, "N(l) requires l >= 1");
  std::vector<std::string> labels;
  std::vector<Element> table;
  for (int i = 0; i < ell; ++i) labels.push_back(std::to_string(i));
  for (int i = 0; i < ell; ++i)
    for (int j = 0; j < ell; ++j) table.push_back(Element{(i + j) % ell});
  return Magma::finite("N" + std::to_string(ell), std::move(labels), Element{0}, std::move(table));
}

/// {e, 0, a1..aℓ}: e is the unit, 0 is absorbing and every aᵢ⋆aⱼ is 0.
inline MagmaPtr absorbing(int ell) {
  require(ell >= 0, ErrorKind::invalid_argument, "D(l) requires l >= 0");
  const auto m = static_cast<std::size_t>(ell + 2);
  std::vector<std::string> labels{"e", "0"};
  for (int i = 1; i <= ell; ++i) labels.push_back("a" + std::to_string(i));
  std::vector<Element> table(m * m, Element{1});
  for (std::size_t a = 0; a < m; ++a) {
    table[a] = Element{static_cast<std::int64_t>(a)};
    table[a * m] = Element{static_cast<std::int64_t>(a)};
  }
  return Magma::finite("D" + std::to_string(ell), std::move(labels), Element{0}, std::move(table));
}

/// {e, a, b}: a and b idempotent, a⋆b = e = b⋆a.
inline MagmaPtr bnc() {
  return make_table_magma({"e", "a", "b"}, "e", {{"e", "a", "b"}, {"a", "a", "e"}, {"b", "e", "b"}}, "BNC");
}

/// Componentwise product; labels are "(x|y)" in lexicographic order.
inline MagmaPtr product(const MagmaPtr& left, const MagmaPtr& right, std::string name = {}) {
  const std::size_t ml = left->size();
  const std::size_t mr = right->size();
  std::vector<std::string> labels;
  for (auto x : left->elements())
    for (auto y : right->elements()) labels.push_back("(" + left->label(x) + "|" + right->label(y) + ")");
  std::vector<Element> table(ml * mr * ml * mr);
  const std::size_t m = ml * mr;
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      auto x = left->op(Element{static_cast<std::int64_t>(a / mr)}, Element{static_cast<std::int64_t>(b / mr)});
      auto y = right->op(Element{static_cast<std::int64_t>(a % mr)}, Element{static_cast<std::int64_t>(b % mr)});
      table[a * m + b] = Element{static_cast<std::int64_t>(static_cast<std::size_t>(x.id) * mr + static_cast<std::size_t>(y.id))};
    }
  }
  const auto unit = Element{left->unit().id * static_cast<std::int64_t>(mr) + right->unit().id};
  if (name.empty()) name = "prod(" + left->name() + "," + right->name() + ")";
  return Magma::finite(std::move(name), std::move(labels), unit, std::move(table));
}

inline MagmaPtr dmt() { return product(absorbing(0), absorbing(0), "DMT"); }

/// The sub-magma of DMT carried by {(e|e), (0|e)}.
inline MagmaPtr mt() {
  return make_table_magma({"(e|e)", "(0|e)"}, "(e|e)", {{"(e|e)", "(0|e)"}, {"(0|e)", "(0|e)"}}, "MT");
}

}  // namespace builtin

namespace detail {

inline std::optional<int> parse_suffix_int(std::string_view text) {
  if (text.empty()) return std::nullopt;
  int v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc{} || ptr != text.data() + text.size()) return std::nullopt;
  return v;
}

}  // namespace detail

/// Resolve a magma by its CLI/JSON name: "Z", "N<k>", "D<k>", "BNC", "MT", "DMT", "prod(A,B)".
inline MagmaPtr builtin_magma(std::string_view name) {
  if (name == "Z") return builtin::integers();
  if (name == "BNC") return builtin::bnc();
  if (name == "MT") return builtin::mt();
  if (name == "DMT") return builtin::dmt();
  if (name.starts_with("prod(") && name.ends_with(")")) {
    auto inner = name.substr(5, name.size() - 6);
    int depth = 0;
    for (std::size_t i = 0; i < inner.size(); ++i) {
      if (inner[i] == '(') ++depth;
      if (inner[i] == ')') --depth;
      if (inner[i] == ',' && depth == 0) {
        return builtin::product(builtin_magma(inner.substr(0, i)), builtin_magma(inner.substr(i + 1)));
      }
    }
    fail(ErrorKind::unknown_name, "malformed product magma '" + std::string(name) + "'");
  }
  if (name.size() >= 2 && (name[0] == 'N' || name[0] == 'D')) {
    auto rest = name.substr(1);
    if (rest.starts_with("-")) fail(ErrorKind::invalid_argument, "negative parameter in magma '" + std::string(name) + "'");
    if (auto ell = detail::parse_suffix_int(rest)) {
      return name[0] == 'N' ? builtin::cyclic(*ell) : builtin::absorbing(*ell);
    }
  }
  fail(ErrorKind::unknown_name, "unknown magma '" + std::string(name) + "'");
}

struct MagmaProperties {
  bool right_cancellable = false;
  bool has_nontrivial_unit_divisors = false;
  bool commutative = false;
  bool associative = false;
};

inline MagmaProperties check_properties(const Magma& magma) {
  if (!magma.is_finite()) {
    // (ℤ,+) is a group: cancellable, commutative, associative, and 1 + (-1) = 0.
    return {.right_cancellable = true, .has_nontrivial_unit_divisors = true, .commutative = true, .associative = true};
  }
  MagmaProperties props{true, false, true, true};
  const auto all = magma.elements();
  for (auto a : all) {
    for (auto b : all) {
      const auto ab = magma.op(a, b);
      if (ab != magma.op(b, a)) props.commutative = false;
      if (magma.is_unit(ab) && !(magma.is_unit(a) && magma.is_unit(b))) props.has_nontrivial_unit_divisors = true;
      for (auto c : all) {
        if (magma.op(ab, c) != magma.op(a, magma.op(b, c))) props.associative = false;
        if (a != b && magma.op(a, c) == magma.op(b, c)) props.right_cancellable = false;
      }
    }
  }
  return props;
}

/// A map between unitary magmas; tabulated when the source is finite.
class MagmaMorphism {
 public:
  MagmaMorphism(MagmaPtr source, MagmaPtr target, std::function<Element(Element)> map)
      : source_(std::move(source)), target_(std::move(target)), map_(std::move(map)) {
    if (source_->is_finite()) {
      for (auto a : source_->elements()) table_.push_back(map_(a));
    }
  }

  static MagmaMorphism from_labels(MagmaPtr source, MagmaPtr target,
                                   const std::vector<std::pair<std::string, std::string>>& pairs) {
    std::vector<Element> table(source->size(), target->unit());
    std::vector<bool> seen(source->size(), false);
    for (const auto& [from, to] : pairs) {
      auto a = source->parse(from);
      table[static_cast<std::size_t>(a.id)] = target->parse(to);
      seen[static_cast<std::size_t>(a.id)] = true;
    }
    require(std::all_of(seen.begin(), seen.end(), [](bool b) { return b; }), ErrorKind::invalid_argument,
            "morphism table does not cover the source");
    return MagmaMorphism(source, target, [table](Element a) { return table[static_cast<std::size_t>(a.id)]; });
  }

  static MagmaMorphism identity(const MagmaPtr& magma) {
    return MagmaMorphism(magma, magma, [](Element a) { return a; });
  }

  [[nodiscard]] const MagmaPtr& source() const noexcept { return source_; }
  [[nodiscard]] const MagmaPtr& target() const noexcept { return target_; }

  [[nodiscard]] Element apply(Element a) const {
    require(source_->contains(a), ErrorKind::invalid_argument, "element outside the morphism source");
    if (!table_.empty()) return table_[static_cast<std::size_t>(a.id)];
    return map_(a);
  }

  /// Exhaustive on finite sources; on ℤ, checks the window [-8, 8].
  [[nodiscard]] bool validate() const {
    std::vector<Element> domain;
    if (source_->is_finite()) {
      domain = source_->elements();
    } else {
      for (std::int64_t v = -8; v <= 8; ++v) domain.push_back(Element{v});
    }
    for (auto a : domain) {
      if (!target_->contains(apply(a))) return false;
    }
    if (apply(source_->unit()) != target_->unit()) return false;
    for (auto a : domain) {
      for (auto b : domain) {
        if (apply(source_->op(a, b)) != target_->op(apply(a), apply(b))) return false;
      }
    }
    return true;
  }

  [[nodiscard]] bool injective() const {
    auto img = table_;
    std::sort(img.begin(), img.end());
    return std::adjacent_find(img.begin(), img.end()) == img.end();
  }

  [[nodiscard]] bool surjective() const {
    auto img = table_;
    std::sort(img.begin(), img.end());
    img.erase(std::unique(img.begin(), img.end()), img.end());
    return img.size() == target_->size();
  }

 private:
  MagmaPtr source_;
  MagmaPtr target_;
  std::function<Element(Element)> map_;
  std::vector<Element> table_;
};

}  // namespace cliques
