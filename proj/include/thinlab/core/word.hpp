#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "thinlab/core/int_matrix.hpp"

namespace thinlab {

struct Letter {
  std::uint16_t gen = 0;
  bool inverse = false;

  Letter inverted() const { return {gen, !inverse}; }
  friend bool operator==(const Letter&, const Letter&) = default;
};

// Freely reduced word over generator indices. Reduction happens on every construction path.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Letter> letters);

  static Word gen(std::uint16_t index, int power = 1);

  std::size_t length() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  const std::vector<Letter>& letters() const { return letters_; }

  Word inverse() const;
  Word operator*(const Word& rhs) const;

  friend bool operator==(const Word&, const Word&) = default;

  // Run-length rendering, e.g. "T^4 S^-1"; the empty word renders as "1".
  std::string to_string(const std::vector<std::string>& names) const;
  static Word parse(std::string_view text, const std::vector<std::string>& names);

 private:
  std::vector<Letter> letters_;
};

// Named list of invertible integer generators of a common dimension.
class GeneratorSet {
 public:
  GeneratorSet() = default;
  GeneratorSet(std::string name, std::vector<IntMatrix> generators,
               std::vector<std::string> names = {});

  const std::string& name() const { return name_; }
  std::size_t dim() const { return n_; }
  std::size_t size() const { return gens_.size(); }
  const IntMatrix& generator(std::size_t i) const { return gens_.at(i); }
  const IntMatrix& inverse(std::size_t i) const { return inverses_.at(i); }
  const std::vector<IntMatrix>& generators() const { return gens_; }
  const std::vector<std::string>& names() const { return names_; }

  // Matrix for a single letter.
  const IntMatrix& letter(Letter l) const { return l.inverse ? inverses_.at(l.gen) : gens_.at(l.gen); }

  // Generators followed by their inverses interleaved: g0, g0^-1, g1, g1^-1, ...
  std::vector<Letter> symbols() const;

  bool all_special() const;  // every generator has determinant +1

 private:
  std::string name_;
  std::size_t n_ = 0;
  std::vector<IntMatrix> gens_;
  std::vector<IntMatrix> inverses_;
  std::vector<std::string> names_;
};

IntMatrix eval_word(const GeneratorSet& gens, const Word& w);

// Every freely reduced word of length <= max_len, in shortlex order over symbols().
std::vector<Word> enumerate_words(const GeneratorSet& gens, std::size_t max_len);

}  // namespace thinlab
