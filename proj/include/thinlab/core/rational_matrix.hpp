#pragma once

#include <cstddef>
#include <vector>

#include "thinlab/core/int_matrix.hpp"

namespace thinlab {

// Dense rows x cols matrix over Q.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols) : r_(rows), c_(cols), a_(rows * cols) {}
  explicit RationalMatrix(const IntMatrix& m);

  static RationalMatrix identity(std::size_t n);

  std::size_t rows() const { return r_; }
  std::size_t cols() const { return c_; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return a_[i * c_ + j]; }
  Rational& operator()(std::size_t i, std::size_t j) { return a_[i * c_ + j]; }

  RationalMatrix transpose() const;
  bool is_zero() const;
  bool is_symmetric() const;

  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

 private:
  std::size_t r_ = 0;
  std::size_t c_ = 0;
  std::vector<Rational> a_;
};

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
RationalMatrix operator+(const RationalMatrix& a, const RationalMatrix& b);
RationalMatrix operator-(const RationalMatrix& a, const RationalMatrix& b);
RationalMatrix operator*(const Rational& s, const RationalMatrix& a);

using RationalVector = std::vector<Rational>;

struct RowEchelon {
  RationalMatrix reduced;             // reduced row echelon form
  std::vector<std::size_t> pivots;    // pivot column per nonzero row
};

RowEchelon rref(RationalMatrix m);
std::size_t rank(const RationalMatrix& m);

// Basis of {x : m x = 0}, one vector per free column, free variable set to 1.
std::vector<RationalVector> kernel(const RationalMatrix& m);

Rational det(const RationalMatrix& m);

// Scales a rational vector to a primitive integer vector with its first nonzero entry positive.
std::vector<Integer> primitive_integer(const RationalVector& v);

// Inertia (positives, negatives, zeros) of a symmetric rational matrix via exact congruence
// diagonalization.
struct Inertia {
  std::size_t positive = 0;
  std::size_t negative = 0;
  std::size_t zero = 0;
  friend bool operator==(const Inertia&, const Inertia&) = default;
};

// Congruence diagonalization: finds invertible P with P^T q P = diag(d). Pivots are taken
// in order of the leading nonzero diagonal entry; a zero diagonal with a nonzero off-diagonal
// entry is first repaired by adding the partner row and column.
struct Diagonalization {
  RationalMatrix basis;       // columns are the new basis vectors (P)
  std::vector<Rational> diagonal;
};

Diagonalization congruence_diagonalize(const RationalMatrix& q);
Inertia inertia(const RationalMatrix& q);

// Squarefree part of a nonzero integer, keeping the sign.
Integer squarefree_part(const Integer& x);

}  // namespace thinlab
