#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace thinlab {

using Integer = mpz_class;
using Rational = mpq_class;

inline constexpr std::size_t kMaxDimension = 8;

class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class NotUnimodularError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Square matrix of arbitrary-precision integers, row-major.
class IntMatrix {
 public:
  IntMatrix() = default;
  explicit IntMatrix(std::size_t n);

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<std::vector<Integer>>& rows);
  static IntMatrix from_rows(std::initializer_list<std::initializer_list<long>> rows);

  std::size_t dim() const { return n_; }
  const Integer& operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }
  Integer& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
  std::span<const Integer> entries() const { return a_; }

  bool is_identity() const;
  IntMatrix transpose() const;
  IntMatrix operator-() const;

  friend bool operator==(const IntMatrix& x, const IntMatrix& y) {
    return x.n_ == y.n_ && x.a_ == y.a_;
  }

  std::string to_string() const;

 private:
  std::size_t n_ = 0;
  std::vector<Integer> a_;
};

IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b);
inline IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) { return mat_mul(a, b); }
IntMatrix mat_add(const IntMatrix& a, const IntMatrix& b);
IntMatrix mat_sub(const IntMatrix& a, const IntMatrix& b);
IntMatrix mat_pow(const IntMatrix& m, long exponent);

// Exact determinant by Bareiss fraction-free elimination.
Integer det(const IntMatrix& m);

// Exact inverse of a matrix with determinant +1 or -1.
IntMatrix mat_inv(const IntMatrix& m);

Integer trace(const IntMatrix& m);

// Coefficients c_0..c_n of det(xI - m), with c_n = 1.
std::vector<Integer> char_poly(const IntMatrix& m);

}  // namespace thinlab
