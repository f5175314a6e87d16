#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "thinlab/closure/closure.hpp"
#include "thinlab/image/group_image.hpp"
#include "thinlab/probes/coset_enum.hpp"

namespace thinlab {

struct MinusIdentityCheck {
  std::uint64_t modulus = 0;
  Membership status = Membership::Capped;
};

struct ObstructionResult {
  bool excluded = false;
  std::optional<std::uint64_t> modulus;  // first modulus whose image misses -I
  std::vector<MinusIdentityCheck> checks;
  std::string reason;
};

// -I is excluded from the group when some reduction misses -I. Sound, never complete.
ObstructionResult minus_I_obstruction(const GeneratorSet& gens, const std::vector<std::uint64_t>& moduli,
                                      std::size_t cap = kDefaultElementCap);

// Shortest word (up to max_len, with a work budget) evaluating exactly to -I, if one is found.
std::optional<Word> find_minus_identity(const GeneratorSet& gens, std::size_t max_len = 10);

enum class VerdictClass { ProvenNotThin, ProvenThinByCatalog, ThinEvidence, Unknown };

struct Verdict {
  VerdictClass classification = VerdictClass::Unknown;
  std::optional<Integer> index;          // index in the integer points of the closure
  std::optional<std::size_t> psl_index;  // from a closed coset table
  std::string reason;
  std::optional<std::string> catalog_id;
  std::string citation;
  std::string anchor;
  ClosureCertificate closure;
  std::optional<CosetTable> coset;
  std::optional<TableCheck> coset_check;
  std::optional<ObstructionResult> minus_identity;
  std::optional<Word> minus_identity_word;  // over the input generators
};

struct ProbeConfig {
  std::size_t coset_cap = kDefaultCosetCap;
  ClosureOptions closure;
  std::vector<std::uint64_t> obstruction_moduli{4, 3, 8};
  std::size_t element_cap = kDefaultElementCap;
  bool use_catalog = true;
};

Verdict thinness_verdict(const GeneratorSet& gens, const ProbeConfig& config = {});

std::string to_string(VerdictClass v);

}  // namespace thinlab
