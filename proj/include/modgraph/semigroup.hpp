#pragma once

// Marking semigroups: free commutative monoids N^k, their homomorphisms
// (non-negative integer matrices) and integer linear forms on them.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace modgraph {

using Coord = std::int64_t;

// An element of N^k. The rank k is part of the value; elements of
// different rank never compare equal and cannot be added.
class MonoidElement {
 public:
  MonoidElement() = default;
  explicit MonoidElement(std::vector<Coord> coords);

  static MonoidElement zero(std::size_t rank);

  std::size_t rank() const noexcept { return coords_.size(); }
  std::span<const Coord> coords() const noexcept { return coords_; }
  Coord operator[](std::size_t i) const { return coords_.at(i); }
  bool is_zero() const noexcept;

  MonoidElement& operator+=(const MonoidElement& other);
  friend MonoidElement operator+(MonoidElement a, const MonoidElement& b) {
    a += b;
    return a;
  }

  // Lexicographic on coordinates.
  auto operator<=>(const MonoidElement&) const = default;
  bool operator==(const MonoidElement&) const = default;

 private:
  std::vector<Coord> coords_;
};

MonoidElement add(const MonoidElement& a, const MonoidElement& b);

// Coordinatewise a <= b.
bool divides(const MonoidElement& a, const MonoidElement& b);

// "(1,2)"; the rank-0 element prints as "()".
std::string to_string(const MonoidElement& a);

// A homomorphism N^k -> N^m given by an m x k matrix.
class MonoidHom {
 public:
  MonoidHom() = default;
  MonoidHom(std::size_t source_rank, std::vector<std::vector<Coord>> rows);

  static MonoidHom identity(std::size_t rank);
  static MonoidHom zero(std::size_t source_rank, std::size_t target_rank);

  std::size_t source_rank() const noexcept { return source_rank_; }
  std::size_t target_rank() const noexcept { return rows_.size(); }
  const std::vector<std::vector<Coord>>& rows() const noexcept {
    return rows_;
  }
  bool is_identity() const noexcept;

  MonoidElement operator()(const MonoidElement& a) const;

  bool operator==(const MonoidHom&) const = default;

 private:
  std::size_t source_rank_ = 0;
  std::vector<std::vector<Coord>> rows_;
};

MonoidElement apply_hom(const MonoidHom& h, const MonoidElement& a);

// outer ∘ inner
MonoidHom compose(const MonoidHom& outer, const MonoidHom& inner);

// An integer-valued additive function on N^k (coefficients may be negative).
class LinearForm {
 public:
  LinearForm() = default;
  explicit LinearForm(std::vector<Coord> coeffs) : coeffs_(std::move(coeffs)) {}

  std::size_t rank() const noexcept { return coeffs_.size(); }
  std::span<const Coord> coeffs() const noexcept { return coeffs_; }
  Coord operator()(const MonoidElement& a) const;
  bool is_positive() const noexcept;

  bool operator==(const LinearForm&) const = default;

 private:
  std::vector<Coord> coeffs_;
};

Coord eval_form(const LinearForm& f, const MonoidElement& a);

using ElementPair = std::pair<MonoidElement, MonoidElement>;

// All (b1, b2) with b1 + b2 = b, ordered lexicographically on b1.
// Its length is the product of (b_j + 1).
std::vector<ElementPair> enumerate_pair_decompositions(const MonoidElement& b);

// All x with x <= bound coordinatewise, in lexicographic order.
std::vector<MonoidElement> elements_below(const MonoidElement& bound);

// All x of the given rank with form(x) <= max_value. The form must have
// strictly positive coefficients.
std::vector<MonoidElement> elements_of_degree_at_most(const LinearForm& form,
                                                      Coord max_value);

}  // namespace modgraph
