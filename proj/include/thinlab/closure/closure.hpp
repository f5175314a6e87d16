#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "thinlab/closure/forms.hpp"
#include "thinlab/image/group_image.hpp"

namespace thinlab {

enum class ClosureClass {
  Full,
  Unipotent,
  Torus,
  ReducibleBlock,
  Symplectic,
  OrthogonalLike,
  Undetermined,
};

std::string to_string(ClosureClass c);

struct DensityCertificate {
  std::uint64_t prime = 0;
  std::size_t image_order = 0;
};

struct ClosureEvidence {
  std::optional<DensityCertificate> density;
  std::vector<std::uint64_t> density_primes_tried;
  std::optional<std::size_t> spanning_dimension;
  std::size_t spanning_word_length = 0;
  std::optional<FormSpace> symmetric_forms;
  std::optional<FormSpace> antisymmetric_forms;
  std::optional<RationalMatrix> form;  // nondegenerate representative backing a form class
  std::optional<Inertia> signature;
  std::optional<bool> commutative;
  std::optional<bool> unipotent;
  std::vector<std::vector<Integer>> char_polys;  // per generator, constant term first
  std::vector<Integer> discriminants;            // per generator (n = 2 only)
  std::optional<Integer> field_discriminant;     // squarefree kernel shared by a torus
  std::optional<std::vector<Integer>> common_eigenvector;
  std::vector<std::string> notes;
};

struct ClosureCertificate {
  ClosureClass closure = ClosureClass::Undetermined;
  std::size_t dimension = 0;
  ClosureEvidence evidence;
};

struct ClosureOptions {
  std::size_t word_length = 6;
  std::vector<std::uint64_t> density_primes{5, 7, 11, 13};
  std::size_t element_cap = kDefaultElementCap;
};

// Dimension of the Q-span of all words of length <= max_word_len, grown level by level
// (span_L = span_{L-1} + span_{L-1} * {g^{+-1}}).
std::size_t spanning_dimension(const GeneratorSet& gens, std::size_t max_word_len);

bool is_unipotent(const IntMatrix& m);
// Every generator and every word of length <= 3 has characteristic polynomial (x - 1)^n.
bool classify_unipotent(const GeneratorSet& gens);
// Generators commute pairwise and all words of length <= 2 commute with each other.
bool is_commutative(const GeneratorSet& gens);

// Full-closure certificate from a single prime p >= 5 with surjective reduction.
std::optional<DensityCertificate> density_certificate(const GeneratorSet& gens, std::uint64_t p,
                                                      std::size_t cap = kDefaultElementCap);

ClosureCertificate classify_sl2(const GeneratorSet& gens, const ClosureOptions& opts = {});

// Dispatcher for any dimension: SL2 decision tree for n = 2, form and span tests otherwise.
ClosureCertificate closure_certificate(const GeneratorSet& gens, const ClosureOptions& opts = {});

}  // namespace thinlab
