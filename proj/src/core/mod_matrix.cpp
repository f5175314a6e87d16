#include "thinlab/core/mod_matrix.hpp"

#include <sstream>
#include <stdexcept>

namespace thinlab {

namespace {

void check_modulus(std::uint64_t m) {
  if (m < 2) throw std::invalid_argument("modulus must be at least 2");
  if (m > kMaxModulus) throw std::invalid_argument("modulus exceeds supported range");
}

}  // namespace

ModMatrix::ModMatrix(std::size_t n, std::uint64_t modulus) : n_(n), m_(modulus), a_(n * n, 0) {
  check_modulus(modulus);
  if (n < 1 || n > kMaxDimension) throw DimensionError("matrix dimension outside supported range");
}

ModMatrix::ModMatrix(std::size_t n, std::uint64_t modulus, std::vector<Residue> entries)
    : ModMatrix(n, modulus) {
  if (entries.size() != n * n) throw DimensionError("entry count does not match dimension");
  for (auto& e : entries) e = static_cast<Residue>(e % modulus);
  a_ = std::move(entries);
}

ModMatrix ModMatrix::identity(std::size_t n, std::uint64_t modulus) {
  ModMatrix m(n, modulus);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

ModMatrix ModMatrix::from_rows(std::uint64_t modulus,
                               std::initializer_list<std::initializer_list<long>> rows) {
  ModMatrix m(rows.size(), modulus);
  std::size_t i = 0;
  for (const auto& row : rows) {
    if (row.size() != rows.size()) throw DimensionError("matrix rows must form a square");
    std::size_t j = 0;
    for (long v : row) {
      long r = v % static_cast<long>(modulus);
      if (r < 0) r += static_cast<long>(modulus);
      m(i, j++) = static_cast<Residue>(r);
    }
    ++i;
  }
  return m;
}

bool ModMatrix::is_identity() const {
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j)
      if ((*this)(i, j) != (i == j ? 1u : 0u)) return false;
  return true;
}

ModMatrix ModMatrix::negated() const {
  ModMatrix r = *this;
  for (auto& e : r.a_) e = e == 0 ? 0 : static_cast<Residue>(m_ - e);
  return r;
}

Residue ModMatrix::det() const {
  // Cofactor-free: exact integer determinant of the residue lift, then reduce.
  IntMatrix lift(n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) lift(i, j) = static_cast<unsigned long>((*this)(i, j));
  Integer d = thinlab::det(lift);
  Integer r;
  Integer mm = static_cast<unsigned long>(m_);
  mpz_fdiv_r(r.get_mpz_t(), d.get_mpz_t(), mm.get_mpz_t());
  return static_cast<Residue>(r.get_ui());
}

std::string ModMatrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < n_; ++i) {
    os << (i ? ",[" : "[");
    for (std::size_t j = 0; j < n_; ++j) os << (j ? "," : "") << (*this)(i, j);
    os << ']';
  }
  os << "] mod " << m_;
  return os.str();
}

void mod_mul_into(std::span<const Residue> a, std::span<const Residue> b, std::size_t n,
                  std::uint64_t m, std::span<Residue> out) {
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      std::uint64_t acc = 0;
      for (std::size_t k = 0; k < n; ++k) {
        acc += static_cast<std::uint64_t>(a[i * n + k]) * b[k * n + j];
        if (acc >= (std::uint64_t{1} << 62)) acc %= m;
      }
      out[i * n + j] = static_cast<Residue>(acc % m);
    }
  }
}

ModMatrix mod_mul(const ModMatrix& a, const ModMatrix& b) {
  if (a.dim() != b.dim()) throw DimensionError("dimension mismatch");
  if (a.modulus() != b.modulus()) throw std::invalid_argument("modulus mismatch");
  std::vector<Residue> out(a.dim() * a.dim());
  mod_mul_into(a.entries(), b.entries(), a.dim(), a.modulus(), out);
  return ModMatrix(a.dim(), a.modulus(), std::move(out));
}

ModMatrix reduce_mod(const IntMatrix& m, std::uint64_t modulus) {
  check_modulus(modulus);
  const std::size_t n = m.dim();
  std::vector<Residue> out(n * n);
  Integer mm = static_cast<unsigned long>(modulus);
  Integer r;
  for (std::size_t i = 0; i < n * n; ++i) {
    mpz_fdiv_r(r.get_mpz_t(), m.entries()[i].get_mpz_t(), mm.get_mpz_t());
    out[i] = static_cast<Residue>(r.get_ui());
  }
  return ModMatrix(n, modulus, std::move(out));
}

}  // namespace thinlab
