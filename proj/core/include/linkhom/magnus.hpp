#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <compare>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "linkhom/errors.hpp"

namespace linkhom {

using Int = boost::multiprecision::cpp_int;

// A colored generator X_{i,j}: color i, index j within the color.
struct Variable {
  int color = 0;
  int index = 0;
  auto operator<=>(const Variable&) const = default;
};

std::string to_string(const Variable& v);

// Fixed set of variables a series may mention. Variable ids are dense and
// ordered by (color, index), so monomial strings compare lexicographically
// in generator order.
class VariableUniverse {
 public:
  explicit VariableUniverse(std::vector<Variable> vars);

  int size() const { return static_cast<int>(vars_.size()); }
  int color_count() const { return static_cast<int>(colors_.size()); }
  const std::vector<int>& colors() const { return colors_; }
  const std::vector<Variable>& variables() const { return vars_; }

  int id_of(const Variable& v) const;  // throws UnknownGenerator
  bool contains(const Variable& v) const { return ids_.count(v) != 0; }
  const Variable& var(int id) const { return vars_.at(static_cast<size_t>(id)); }
  int color_of(int id) const { return vars_[static_cast<size_t>(id)].color; }
  // Bit position of a variable's color within colors().
  int color_bit(int id) const { return color_bit_[static_cast<size_t>(id)]; }

 private:
  std::vector<Variable> vars_;
  std::map<Variable, int> ids_;
  std::vector<int> colors_;
  std::vector<int> color_bit_;
};

using UniversePtr = std::shared_ptr<const VariableUniverse>;

UniversePtr make_universe(std::vector<Variable> vars);

// Freely reduced word in the generators, exponents +/-1 per letter.
class GroupWord {
 public:
  GroupWord() = default;

  void push(const Variable& v, int exponent);  // exponent in {+1,-1}
  void append(const GroupWord& w);

  GroupWord inverse() const;
  static GroupWord commutator(const GroupWord& a, const GroupWord& b);
  static GroupWord conjugate(const GroupWord& a, const GroupWord& g);  // g^-1 a g

  bool empty() const { return letters_.empty(); }
  size_t size() const { return letters_.size(); }
  const std::vector<std::pair<Variable, int>>& letters() const { return letters_; }

  std::string str() const;

 private:
  std::vector<std::pair<Variable, int>> letters_;
};

// Truncated non-commutative integer polynomial in the universe variables.
// Any monomial repeating a color is zero, so degree never exceeds the number
// of colors and the ring is exact for link-homotopy computations. max_degree
// may be lowered (CLI --max-degree) for experiments.
class MagnusSeries {
 public:
  MagnusSeries() = default;

  static MagnusSeries zero(UniversePtr u, int max_degree = -1);
  static MagnusSeries one(UniversePtr u, int max_degree = -1);
  // 1 + X_v. Its inverse in this ring is exactly 1 - X_v (X_v^2 repeats a
  // color and vanishes).
  static MagnusSeries generator(UniversePtr u, const Variable& v, int max_degree = -1);

  const UniversePtr& universe() const { return uni_; }
  int max_degree() const { return max_degree_; }
  const std::map<std::string, Int>& terms() const { return terms_; }

  Int constant_term() const;
  // Coefficient of the monomial given as an ordered variable sequence.
  Int coefficient(const std::vector<Variable>& monomial) const;

  bool is_one() const;
  bool operator==(const MagnusSeries& o) const { return terms_ == o.terms_; }

  MagnusSeries operator*(const MagnusSeries& o) const;
  MagnusSeries operator+(const MagnusSeries& o) const;
  MagnusSeries operator-(const MagnusSeries& o) const;

  // Truncated inverse via the Neumann series; requires constant term 1.
  MagnusSeries inverse() const;

  // Drop every monomial whose color set includes `color`.
  MagnusSeries without_color(int color) const;

  std::optional<int> min_degree_nonconstant() const;

  // Rendered as "1 + 2*X{1,1}X{2,1} - X{2,1}X{1,1}", terms sorted by
  // (degree, lexicographic monomial).
  std::string str() const;

  void add_term(const std::string& monomial, const Int& coeff);
  size_t term_count() const { return terms_.size(); }

 private:
  friend MagnusSeries expand(const GroupWord&, UniversePtr, int);
  bool monomial_ok(const std::string& m) const;

  UniversePtr uni_;
  int max_degree_ = 0;
  std::map<std::string, Int> terms_;  // monomial (variable-id bytes) -> coeff
};

// Magnus expansion: generator -> 1 + X, inverse -> truncated series inverse,
// with same-color annihilation applied throughout.
MagnusSeries expand(const GroupWord& w, UniversePtr u, int max_degree = -1);

MagnusSeries commutator_series(const MagnusSeries& a, const MagnusSeries& b);
MagnusSeries conjugate_series(const MagnusSeries& a, const MagnusSeries& g);

// Minimum total degree among monomials of s containing a color-`color`
// variable; nullopt if no such monomial.
std::optional<int> lowest_degree_with_color(const MagnusSeries& s, int color);

}  // namespace linkhom
