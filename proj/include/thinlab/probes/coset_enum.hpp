#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "thinlab/core/word.hpp"

namespace thinlab {

// Letters of the PSL2(Z) presentation <s, t | s^2 = t^3 = 1>, with s = S and t = ST.
enum class PslLetter : std::uint8_t { s = 0, t = 1, t_inv = 2 };
using PslWord = std::vector<PslLetter>;

inline constexpr std::size_t kDefaultCosetCap = 100000;

// Image in PSL2(Z) of a word over standard_st(): S^{+-1} -> s, T -> s t, T^-1 -> t^-1 s.
PslWord to_psl_word(const Word& st_word);
std::string to_string(const PslWord& w);

enum class CosetStatus { Closed, CapExceeded };

struct CosetTable {
  CosetStatus status = CosetStatus::CapExceeded;
  std::size_t index = 0;          // number of cosets when closed
  std::size_t live_at_stop = 0;   // live cosets when the cap stopped the run
  std::size_t cosets_defined = 0; // total definitions made, a measure of work
  std::size_t lookaheads = 0;
  // Rows are cosets 0..index-1 (coset 0 is the subgroup), columns indexed by PslLetter.
  std::vector<std::array<std::uint32_t, 3>> rows;
  std::vector<PslWord> subgroup_words;
};

// HLT Todd-Coxeter over <s, t | s^2, t^3> with lookahead and compaction when the table
// reaches `cap` cosets. Exceeding the cap is reported in the result, never thrown.
CosetTable coset_enumerate(const std::vector<PslWord>& subgroup_words, std::size_t cap = kDefaultCosetCap);
// Convenience: rewrite 2x2 determinant-1 generators over S, T and enumerate.
CosetTable coset_enumerate(const GeneratorSet& gens, std::size_t cap = kDefaultCosetCap);

struct TableCheck {
  bool ok = false;
  std::string message;
};

// Independent check of a closed table: every column is a permutation, s is an involution,
// t^-1 inverts t, t^3 fixes every coset, each subgroup word fixes coset 0, and the action
// is transitive.
TableCheck verify_coset_table(const CosetTable& table);

std::string to_string(CosetStatus s);

}  // namespace thinlab
