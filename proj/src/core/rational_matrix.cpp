#include "thinlab/core/rational_matrix.hpp"

#include <stdexcept>
#include <utility>

namespace thinlab {

RationalMatrix::RationalMatrix(const IntMatrix& m) : RationalMatrix(m.dim(), m.dim()) {
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t j = 0; j < m.dim(); ++j) (*this)(i, j) = m(i, j);
}

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix t(c_, r_);
  for (std::size_t i = 0; i < r_; ++i)
    for (std::size_t j = 0; j < c_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

bool RationalMatrix::is_zero() const {
  for (const auto& x : a_)
    if (x != 0) return false;
  return true;
}

bool RationalMatrix::is_symmetric() const {
  if (r_ != c_) return false;
  for (std::size_t i = 0; i < r_; ++i)
    for (std::size_t j = i + 1; j < c_; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols() != b.rows()) throw DimensionError("incompatible shapes for product");
  RationalMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

RationalMatrix operator+(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionError("shape mismatch");
  RationalMatrix c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j) + b(i, j);
  return c;
}

RationalMatrix operator-(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionError("shape mismatch");
  RationalMatrix c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j) - b(i, j);
  return c;
}

RationalMatrix operator*(const Rational& s, const RationalMatrix& a) {
  RationalMatrix c = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) *= s;
  return c;
}

RowEchelon rref(RationalMatrix m) {
  RowEchelon out;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t piv = row;
    while (piv < m.rows() && m(piv, col) == 0) ++piv;
    if (piv == m.rows()) continue;
    if (piv != row)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(piv, j), m(row, j));
    const Rational inv = 1 / m(row, col);
    for (std::size_t j = col; j < m.cols(); ++j) m(row, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row || m(i, col) == 0) continue;
      const Rational f = m(i, col);
      for (std::size_t j = col; j < m.cols(); ++j) m(i, j) -= f * m(row, j);
    }
    out.pivots.push_back(col);
    ++row;
  }
  out.reduced = std::move(m);
  return out;
}

std::size_t rank(const RationalMatrix& m) { return rref(m).pivots.size(); }

std::vector<RationalVector> kernel(const RationalMatrix& m) {
  const RowEchelon e = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<RationalVector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    RationalVector v(m.cols());
    v[free] = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.reduced(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

Rational det(const RationalMatrix& m) {
  if (m.rows() != m.cols()) throw DimensionError("determinant of a non-square matrix");
  RationalMatrix a = m;
  Rational d = 1;
  const std::size_t n = m.rows();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a(piv, col) == 0) ++piv;
    if (piv == n) return 0;
    if (piv != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(piv, j), a(col, j));
      d = -d;
    }
    d *= a(col, col);
    for (std::size_t i = col + 1; i < n; ++i) {
      if (a(i, col) == 0) continue;
      const Rational f = a(i, col) / a(col, col);
      for (std::size_t j = col; j < n; ++j) a(i, j) -= f * a(col, j);
    }
  }
  return d;
}

std::vector<Integer> primitive_integer(const RationalVector& v) {
  Integer lcm_den = 1;
  for (const auto& x : v) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), x.get_den_mpz_t());
  std::vector<Integer> out(v.size());
  Integer g = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    Rational s = v[i] * lcm_den;
    out[i] = s.get_num();
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), out[i].get_mpz_t());
  }
  if (g == 0) return out;
  int sign = 1;
  for (const auto& x : out)
    if (x != 0) {
      sign = sgn(x);
      break;
    }
  for (auto& x : out) {
    mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
    if (sign < 0) x = -x;
  }
  return out;
}

Diagonalization congruence_diagonalize(const RationalMatrix& q) {
  if (!q.is_symmetric()) throw std::invalid_argument("congruence diagonalization needs a symmetric matrix");
  const std::size_t n = q.rows();
  RationalMatrix a = q;
  RationalMatrix p = RationalMatrix::identity(n);
  // Applies the column operation col_dst += f * col_src to p and the congruence to a.
  auto add_multiple = [&](std::size_t dst, std::size_t src, const Rational& f) {
    for (std::size_t i = 0; i < n; ++i) p(i, dst) += f * p(i, src);
    for (std::size_t i = 0; i < n; ++i) a(i, dst) += f * a(i, src);
    for (std::size_t j = 0; j < n; ++j) a(dst, j) += f * a(src, j);
  };
  for (std::size_t k = 0; k < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t partner = n;
      for (std::size_t j = k + 1; j < n; ++j) {
        if (a(j, j) != 0) {
          partner = j;
          break;
        }
      }
      if (partner != n) {
        for (std::size_t i = 0; i < n; ++i) std::swap(p(i, k), p(i, partner));
        for (std::size_t i = 0; i < n; ++i) std::swap(a(i, k), a(i, partner));
        for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(partner, j));
      } else {
        for (std::size_t j = k + 1; j < n; ++j) {
          if (a(k, j) != 0) {
            partner = j;
            break;
          }
        }
        if (partner == n) continue;  // row k is already zero
        // a(k,k) becomes 2 a(k,partner) + a(partner,partner) = 2 a(k,partner) != 0.
        add_multiple(k, partner, 1);
      }
    }
    for (std::size_t j = k + 1; j < n; ++j) {
      if (a(k, j) == 0) continue;
      add_multiple(j, k, -a(k, j) / a(k, k));
    }
  }
  Diagonalization out;
  out.basis = std::move(p);
  for (std::size_t i = 0; i < n; ++i) out.diagonal.push_back(a(i, i));
  return out;
}

Inertia inertia(const RationalMatrix& q) {
  Inertia s;
  for (const auto& d : congruence_diagonalize(q).diagonal) {
    if (d > 0) ++s.positive;
    else if (d < 0) ++s.negative;
    else ++s.zero;
  }
  return s;
}

Integer squarefree_part(const Integer& x) {
  if (x == 0) throw std::invalid_argument("squarefree part of zero");
  Integer r = abs(x);
  Integer out = 1;
  Integer p = 2;
  constexpr unsigned long kTrialBound = 1000000;
  while (p <= kTrialBound && p * p <= r) {
    unsigned exponent = 0;
    while (mpz_divisible_p(r.get_mpz_t(), p.get_mpz_t())) {
      mpz_divexact(r.get_mpz_t(), r.get_mpz_t(), p.get_mpz_t());
      ++exponent;
    }
    if (exponent % 2) out *= p;
    p += (p == 2) ? 1 : 2;
  }
  if (r > 1 && !mpz_perfect_square_p(r.get_mpz_t())) out *= r;
  return sgn(x) < 0 ? Integer(-out) : out;
}

}  // namespace thinlab
