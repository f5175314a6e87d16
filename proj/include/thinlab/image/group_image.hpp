#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "thinlab/core/mod_matrix.hpp"
#include "thinlab/core/word.hpp"

namespace thinlab {

inline constexpr std::size_t kDefaultElementCap = std::size_t{1} << 24;

class CapExceededError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

// Insertion-ordered set of keys with an open-addressing index of 32-bit slots.
template <typename Key>
class KeyTable {
 public:
  std::size_t size() const { return keys_.size(); }
  const Key& key(std::size_t i) const { return keys_[i]; }
  std::optional<std::size_t> find(const Key& k) const;
  // Returns the index of k, inserting it if absent; `inserted` reports which happened.
  std::size_t insert(const Key& k, bool& inserted);

 private:
  void grow();
  std::size_t slot_for(const Key& k) const;

  std::vector<Key> keys_;
  std::vector<std::uint32_t> slots_;
  std::size_t mask_ = 0;
};

}  // namespace detail

// The image of a finitely generated matrix group in GL_n(Z/mZ), enumerated breadth-first
// from the identity under right multiplication by g_i^{+-1}. Elements are stored as packed
// base-m keys when m^(n^2) fits in 64 bits and as byte strings otherwise. Each element
// records its BFS parent, so witness words are shortest with ties broken by symbol order
// (g0, g0^-1, g1, g1^-1, ...).
class GroupImage {
 public:
  static GroupImage enumerate(const GeneratorSet& gens, std::uint64_t modulus,
                              std::size_t cap = kDefaultElementCap);

  std::uint64_t modulus() const { return modulus_; }
  std::size_t dim() const { return n_; }
  std::size_t order() const;
  bool complete() const { return complete_; }
  bool packed() const { return std::holds_alternative<detail::KeyTable<std::uint64_t>>(table_); }
  const GeneratorSet& generators() const { return gens_; }

  ModMatrix element(std::size_t index) const;
  void element_into(std::size_t index, std::span<Residue> out) const;
  std::optional<std::size_t> index_of(const ModMatrix& m) const;
  std::optional<std::size_t> index_of(std::span<const Residue> residues) const;

  // BFS-shortest word evaluating to element `index` (modulo m).
  Word witness(std::size_t index) const;
  std::size_t depth(std::size_t index) const;

  // Reduced symbol matrices, in GeneratorSet::symbols() order.
  const std::vector<ModMatrix>& symbol_matrices() const { return symbols_; }

 private:
  GroupImage() = default;

  std::uint64_t encode(std::span<const Residue> residues) const;
  std::string encode_bytes(std::span<const Residue> residues) const;

  GeneratorSet gens_;
  std::uint64_t modulus_ = 0;
  std::size_t n_ = 0;
  bool complete_ = false;
  std::variant<detail::KeyTable<std::uint64_t>, detail::KeyTable<std::string>> table_;
  std::vector<std::uint32_t> parent_;
  std::vector<std::uint8_t> via_;  // symbol index used to reach the element
  std::vector<ModMatrix> symbols_;
  std::vector<Letter> letters_;
};

inline GroupImage enumerate_image(const GeneratorSet& gens, std::uint64_t modulus,
                                  std::size_t cap = kDefaultElementCap) {
  return GroupImage::enumerate(gens, modulus, cap);
}

bool is_prime(std::uint64_t p);

// |SL_n(Z/pZ)| = p^{n(n-1)/2} * prod_{k=2..n} (p^k - 1); rejects composite p.
Integer sl_order(std::size_t n, std::uint64_t p);
// |GL_n(Z/pZ)| = (p - 1) * |SL_n(Z/pZ)|.
Integer gl_order(std::size_t n, std::uint64_t p);

enum class Surjectivity { Yes, No, Capped };

struct ImageVerdict {
  Surjectivity surjective = Surjectivity::No;
  std::uint64_t prime = 0;
  std::size_t image_order = 0;
  Integer target_order;
  std::string reason;  // empty when surjective
};

ImageVerdict is_surjective(const GeneratorSet& gens, std::uint64_t p,
                           std::size_t cap = kDefaultElementCap);
// Same verdict from an already enumerated image mod p.
ImageVerdict surjectivity_of(const GroupImage& image);

enum class Membership { Yes, No, Capped };

struct MembershipResult {
  Membership status = Membership::No;
  std::string reason;
  std::optional<std::size_t> index;
};

MembershipResult contains_mod(const GeneratorSet& gens, std::uint64_t modulus,
                              const ModMatrix& target, std::size_t cap = kDefaultElementCap);
MembershipResult contains(const GroupImage& image, const ModMatrix& target);

struct Lift {
  IntMatrix matrix;
  Word word;
};

// Integer matrix in the group reducing to `target`, built from the BFS witness and verified
// by reduction before returning. Throws std::domain_error when target is not in the image
// and CapExceededError when the enumeration is incomplete and did not reach it.
Lift lift_to_integers(const GeneratorSet& gens, std::uint64_t p, const ModMatrix& target,
                      std::size_t cap = kDefaultElementCap);

std::string to_string(Surjectivity s);
std::string to_string(Membership m);

}  // namespace thinlab
