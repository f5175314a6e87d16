#include "thinlab/core/int_matrix.hpp"

#include <sstream>
#include <utility>

namespace thinlab {

namespace {

void check_dim(std::size_t n) {
  if (n < 1 || n > kMaxDimension) {
    throw DimensionError("matrix dimension " + std::to_string(n) + " outside [1, " +
                         std::to_string(kMaxDimension) + "]");
  }
}

void check_same(const IntMatrix& a, const IntMatrix& b) {
  if (a.dim() != b.dim()) {
    throw DimensionError("dimension mismatch: " + std::to_string(a.dim()) + " vs " +
                         std::to_string(b.dim()));
  }
}

}  // namespace

IntMatrix::IntMatrix(std::size_t n) : n_(n), a_(n * n) { check_dim(n); }

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<Integer>>& rows) {
  IntMatrix m(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows.size()) throw DimensionError("matrix rows must form a square");
    for (std::size_t j = 0; j < rows.size(); ++j) m(i, j) = rows[i][j];
  }
  return m;
}

IntMatrix IntMatrix::from_rows(std::initializer_list<std::initializer_list<long>> rows) {
  std::vector<std::vector<Integer>> r;
  for (const auto& row : rows) {
    auto& out = r.emplace_back();
    for (long v : row) out.emplace_back(v);
  }
  return from_rows(r);
}

bool IntMatrix::is_identity() const {
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j)
      if ((*this)(i, j) != (i == j ? 1 : 0)) return false;
  return true;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

IntMatrix IntMatrix::operator-() const {
  IntMatrix r = *this;
  for (auto& x : r.a_) x = -x;
  return r;
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < n_; ++i) {
    os << (i ? ",[" : "[");
    for (std::size_t j = 0; j < n_; ++j) os << (j ? "," : "") << (*this)(i, j).get_str();
    os << ']';
  }
  os << ']';
  return os.str();
}

IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b) {
  check_same(a, b);
  const std::size_t n = a.dim();
  IntMatrix c(n);
  Integer acc;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      acc = 0;
      for (std::size_t k = 0; k < n; ++k) mpz_addmul(acc.get_mpz_t(), a(i, k).get_mpz_t(), b(k, j).get_mpz_t());
      c(i, j) = acc;
    }
  }
  return c;
}

IntMatrix mat_add(const IntMatrix& a, const IntMatrix& b) {
  check_same(a, b);
  IntMatrix c(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) c(i, j) = a(i, j) + b(i, j);
  return c;
}

IntMatrix mat_sub(const IntMatrix& a, const IntMatrix& b) {
  check_same(a, b);
  IntMatrix c(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) c(i, j) = a(i, j) - b(i, j);
  return c;
}

IntMatrix mat_pow(const IntMatrix& m, long exponent) {
  IntMatrix base = exponent < 0 ? mat_inv(m) : m;
  unsigned long e = exponent < 0 ? static_cast<unsigned long>(-exponent) : static_cast<unsigned long>(exponent);
  IntMatrix result = IntMatrix::identity(m.dim());
  while (e) {
    if (e & 1u) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

Integer det(const IntMatrix& m) {
  const std::size_t n = m.dim();
  std::vector<Integer> a(m.entries().begin(), m.entries().end());
  auto at = [&](std::size_t i, std::size_t j) -> Integer& { return a[i * n + j]; };
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (at(k, k) == 0) {
      std::size_t swap = k + 1;
      while (swap < n && at(swap, k) == 0) ++swap;
      if (swap == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(at(k, j), at(swap, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        at(i, j) = at(i, j) * at(k, k) - at(i, k) * at(k, j);
        mpz_divexact(at(i, j).get_mpz_t(), at(i, j).get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = at(k, k);
  }
  Integer d = at(n - 1, n - 1);
  return sign > 0 ? d : Integer(-d);
}

IntMatrix mat_inv(const IntMatrix& m) {
  const Integer d = det(m);
  if (d != 1 && d != -1) {
    throw NotUnimodularError("matrix is not invertible over the integers (det = " + d.get_str() + ")");
  }
  // Gauss-Jordan over Z: every pivot step divides by a unit once the column is reduced
  // to a single +-1 entry by Euclidean row operations.
  const std::size_t n = m.dim();
  IntMatrix a = m;
  IntMatrix inv = IntMatrix::identity(n);
  auto row_axpy = [&](IntMatrix& x, std::size_t dst, std::size_t src, const Integer& q) {
    for (std::size_t j = 0; j < n; ++j) x(dst, j) -= q * x(src, j);
  };
  auto row_swap = [&](IntMatrix& x, std::size_t r1, std::size_t r2) {
    for (std::size_t j = 0; j < n; ++j) std::swap(x(r1, j), x(r2, j));
  };
  for (std::size_t col = 0; col < n; ++col) {
    // Euclid down the column until only the pivot row is nonzero below the diagonal.
    for (;;) {
      std::size_t best = n;
      for (std::size_t i = col; i < n; ++i)
        if (a(i, col) != 0 && (best == n || abs(a(i, col)) < abs(a(best, col)))) best = i;
      if (best != col) {
        row_swap(a, best, col);
        row_swap(inv, best, col);
      }
      bool done = true;
      for (std::size_t i = col + 1; i < n; ++i) {
        if (a(i, col) == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), a(i, col).get_mpz_t(), a(col, col).get_mpz_t());
        row_axpy(a, i, col, q);
        row_axpy(inv, i, col, q);
        if (a(i, col) != 0) done = false;
      }
      if (done) break;
    }
    if (a(col, col) == -1) {
      for (std::size_t j = 0; j < n; ++j) {
        a(col, j) = -a(col, j);
        inv(col, j) = -inv(col, j);
      }
    }
  }
  for (std::size_t col = n; col-- > 0;) {
    for (std::size_t i = 0; i < col; ++i) {
      if (a(i, col) == 0) continue;
      Integer q = a(i, col);
      row_axpy(a, i, col, q);
      row_axpy(inv, i, col, q);
    }
  }
  return inv;
}

Integer trace(const IntMatrix& m) {
  Integer t = 0;
  for (std::size_t i = 0; i < m.dim(); ++i) t += m(i, i);
  return t;
}

std::vector<Integer> char_poly(const IntMatrix& m) {
  // Faddeev-LeVerrier; the divisions by k are exact for integer matrices.
  const std::size_t n = m.dim();
  std::vector<Integer> c(n + 1);
  c[n] = 1;
  IntMatrix mk(n);  // M_0 = 0
  for (std::size_t k = 1; k <= n; ++k) {
    IntMatrix next = m * mk;
    for (std::size_t i = 0; i < n; ++i) next(i, i) += c[n - k + 1];
    mk = std::move(next);
    Integer t = trace(m * mk);
    Integer kk = static_cast<unsigned long>(k);
    mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), kk.get_mpz_t());
    c[n - k] = -t;
  }
  return c;
}

}  // namespace thinlab
