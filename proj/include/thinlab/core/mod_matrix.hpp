#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "thinlab/core/int_matrix.hpp"

namespace thinlab {

using Residue = std::uint32_t;

// Largest supported modulus; products of two residues must fit in 64 bits.
inline constexpr std::uint64_t kMaxModulus = (std::uint64_t{1} << 31) - 1;

// Square matrix over Z/mZ with entries stored as least nonnegative residues.
class ModMatrix {
 public:
  ModMatrix() = default;
  ModMatrix(std::size_t n, std::uint64_t modulus);
  ModMatrix(std::size_t n, std::uint64_t modulus, std::vector<Residue> entries);

  static ModMatrix identity(std::size_t n, std::uint64_t modulus);
  // Reduces arbitrary signed entries.
  static ModMatrix from_rows(std::uint64_t modulus,
                             std::initializer_list<std::initializer_list<long>> rows);

  std::size_t dim() const { return n_; }
  std::uint64_t modulus() const { return m_; }
  Residue operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }
  Residue& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
  std::span<const Residue> entries() const { return a_; }

  bool is_identity() const;
  ModMatrix negated() const;
  Residue det() const;

  friend bool operator==(const ModMatrix&, const ModMatrix&) = default;

  std::string to_string() const;

 private:
  std::size_t n_ = 0;
  std::uint64_t m_ = 0;
  std::vector<Residue> a_;
};

ModMatrix mod_mul(const ModMatrix& a, const ModMatrix& b);
inline ModMatrix operator*(const ModMatrix& a, const ModMatrix& b) { return mod_mul(a, b); }

// Raw kernel used by the enumerator: out = a * b over Z/mZ, all n x n row-major.
void mod_mul_into(std::span<const Residue> a, std::span<const Residue> b, std::size_t n,
                  std::uint64_t m, std::span<Residue> out);

ModMatrix reduce_mod(const IntMatrix& m, std::uint64_t modulus);

}  // namespace thinlab
