#include "thinlab/core/word.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace thinlab {

namespace {

std::vector<Letter> freely_reduce(const std::vector<Letter>& in) {
  std::vector<Letter> out;
  out.reserve(in.size());
  for (const Letter& l : in) {
    if (!out.empty() && out.back() == l.inverted()) {
      out.pop_back();
    } else {
      out.push_back(l);
    }
  }
  return out;
}

}  // namespace

Word::Word(std::vector<Letter> letters) : letters_(freely_reduce(letters)) {}

Word Word::gen(std::uint16_t index, int power) {
  std::vector<Letter> l(static_cast<std::size_t>(power < 0 ? -power : power),
                        Letter{index, power < 0});
  return Word(std::move(l));
}

Word Word::inverse() const {
  std::vector<Letter> l;
  l.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) l.push_back(it->inverted());
  return Word(std::move(l));
}

Word Word::operator*(const Word& rhs) const {
  std::vector<Letter> l = letters_;
  l.insert(l.end(), rhs.letters_.begin(), rhs.letters_.end());
  return Word(std::move(l));
}

std::string Word::to_string(const std::vector<std::string>& names) const {
  if (letters_.empty()) return "1";
  std::ostringstream os;
  std::size_t i = 0;
  bool first = true;
  while (i < letters_.size()) {
    std::size_t j = i;
    while (j < letters_.size() && letters_[j] == letters_[i]) ++j;
    const long run = static_cast<long>(j - i);
    const long power = letters_[i].inverse ? -run : run;
    if (!first) os << ' ';
    first = false;
    const auto g = letters_[i].gen;
    os << (g < names.size() ? names[g] : "g" + std::to_string(g));
    if (power != 1) os << '^' << power;
    i = j;
  }
  return os.str();
}

Word Word::parse(std::string_view text, const std::vector<std::string>& names) {
  std::vector<Letter> letters;
  std::istringstream is{std::string(text)};
  std::string token;
  while (is >> token) {
    if (token == "1") continue;
    long power = 1;
    std::string base = token;
    if (auto caret = token.find('^'); caret != std::string::npos) {
      base = token.substr(0, caret);
      try {
        power = std::stol(token.substr(caret + 1));
      } catch (const std::exception&) {
        throw std::invalid_argument("bad exponent in word token '" + token + "'");
      }
    }
    auto it = std::find(names.begin(), names.end(), base);
    if (it == names.end()) throw std::invalid_argument("unknown generator '" + base + "'");
    const auto g = static_cast<std::uint16_t>(it - names.begin());
    for (long k = 0; k < (power < 0 ? -power : power); ++k) letters.push_back({g, power < 0});
  }
  return Word(std::move(letters));
}

GeneratorSet::GeneratorSet(std::string name, std::vector<IntMatrix> generators,
                           std::vector<std::string> names)
    : name_(std::move(name)), gens_(std::move(generators)), names_(std::move(names)) {
  if (gens_.empty()) throw std::invalid_argument("generator set must be nonempty");
  n_ = gens_.front().dim();
  for (const auto& g : gens_) {
    if (g.dim() != n_) throw DimensionError("generators of " + name_ + " differ in dimension");
    inverses_.push_back(mat_inv(g));  // throws if not unimodular
  }
  if (names_.empty()) {
    for (std::size_t i = 0; i < gens_.size(); ++i) {
      names_.push_back(i < 26 ? std::string(1, static_cast<char>('A' + i)) : "g" + std::to_string(i));
    }
  }
  if (names_.size() != gens_.size()) throw std::invalid_argument("generator name count mismatch");
}

std::vector<Letter> GeneratorSet::symbols() const {
  std::vector<Letter> s;
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    s.push_back({static_cast<std::uint16_t>(i), false});
    s.push_back({static_cast<std::uint16_t>(i), true});
  }
  return s;
}

bool GeneratorSet::all_special() const {
  return std::all_of(gens_.begin(), gens_.end(), [](const IntMatrix& g) { return det(g) == 1; });
}

IntMatrix eval_word(const GeneratorSet& gens, const Word& w) {
  IntMatrix result = IntMatrix::identity(gens.dim());
  const auto& letters = w.letters();
  // Runs of one letter are evaluated by repeated squaring; long shear runs are common.
  for (std::size_t i = 0; i < letters.size();) {
    const Letter l = letters[i];
    if (l.gen >= gens.size()) throw std::out_of_range("word references generator index " + std::to_string(l.gen));
    std::size_t j = i;
    while (j < letters.size() && letters[j] == l) ++j;
    result = j - i == 1 ? result * gens.letter(l) : result * mat_pow(gens.letter(l), static_cast<long>(j - i));
    i = j;
  }
  return result;
}

std::vector<Word> enumerate_words(const GeneratorSet& gens, std::size_t max_len) {
  const auto symbols = gens.symbols();
  std::vector<std::vector<Letter>> layer{{}};
  std::vector<Word> out{Word{}};
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::vector<std::vector<Letter>> next;
    for (const auto& w : layer) {
      for (const Letter& s : symbols) {
        if (!w.empty() && w.back() == s.inverted()) continue;
        auto extended = w;
        extended.push_back(s);
        out.emplace_back(extended);
        next.push_back(std::move(extended));
      }
    }
    layer = std::move(next);
  }
  return out;
}

}  // namespace thinlab
