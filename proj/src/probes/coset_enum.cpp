#include "thinlab/probes/coset_enum.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "thinlab/probes/st_rewrite.hpp"

namespace thinlab {

namespace {

constexpr std::uint32_t kNone = std::numeric_limits<std::uint32_t>::max();
constexpr std::size_t kLetters = 3;
constexpr std::array<std::uint8_t, kLetters> kInverse{0, 2, 1};

std::uint8_t idx(PslLetter l) { return static_cast<std::uint8_t>(l); }

const std::vector<PslWord>& relators() {
  static const std::vector<PslWord> r{{PslLetter::s, PslLetter::s},
                                      {PslLetter::t, PslLetter::t, PslLetter::t}};
  return r;
}

class Enumerator {
 public:
  Enumerator(std::vector<PslWord> subgroup, std::size_t cap) : cap_(cap) {
    result_.subgroup_words = std::move(subgroup);
    new_coset();
  }

  CosetTable run() {
    for (const auto& w : result_.subgroup_words) scan_and_fill(0, w);
    // Enough headroom for one coset's relator scans plus filling its row.
    constexpr std::size_t kHeadroom = 6;
    for (std::size_t c = 0; c < table_.size(); ++c) {
      if (table_.size() + kHeadroom > cap_) {
        c = lookahead_and_compact(c);
        if (table_.size() + kHeadroom > cap_) {
          result_.status = CosetStatus::CapExceeded;
          result_.live_at_stop = live_;
          result_.cosets_defined = defined_;
          return std::move(result_);
        }
      }
      if (!alive(c)) continue;
      for (const auto& r : relators()) {
        scan_and_fill(static_cast<std::uint32_t>(c), r);
        if (!alive(c)) break;
      }
      if (!alive(c)) continue;
      for (std::uint8_t x = 0; x < kLetters; ++x)
        if (table_[c][x] == kNone) define(static_cast<std::uint32_t>(c), x);
    }
    compact(0);
    result_.status = CosetStatus::Closed;
    result_.index = table_.size();
    result_.cosets_defined = defined_;
    result_.rows = std::move(table_);
    return std::move(result_);
  }

 private:
  bool alive(std::size_t c) const { return parent_[c] == c; }

  std::uint32_t new_coset() {
    const auto c = static_cast<std::uint32_t>(table_.size());
    table_.push_back({kNone, kNone, kNone});
    parent_.push_back(c);
    ++live_;
    ++defined_;
    return c;
  }

  void define(std::uint32_t c, std::uint8_t x) {
    const std::uint32_t d = new_coset();
    table_[c][x] = d;
    table_[d][kInverse[x]] = c;
  }

  std::uint32_t rep(std::uint32_t c) {
    std::uint32_t root = c;
    while (parent_[root] != root) root = parent_[root];
    while (parent_[c] != root) {
      const std::uint32_t next = parent_[c];
      parent_[c] = root;
      c = next;
    }
    return root;
  }

  void merge(std::uint32_t k, std::uint32_t l) {
    const std::uint32_t a = rep(k), b = rep(l);
    if (a == b) return;
    const std::uint32_t lo = std::min(a, b), hi = std::max(a, b);
    parent_[hi] = lo;
    queue_.push_back(hi);
    --live_;
  }

  void coincidence(std::uint32_t a, std::uint32_t b) {
    queue_.clear();
    merge(a, b);
    for (std::size_t i = 0; i < queue_.size(); ++i) {
      const std::uint32_t g = queue_[i];
      for (std::uint8_t x = 0; x < kLetters; ++x) {
        const std::uint32_t d = table_[g][x];
        if (d == kNone) continue;
        table_[d][kInverse[x]] = kNone;
        const std::uint32_t mu = rep(g), nu = rep(d);
        if (table_[mu][x] != kNone) {
          merge(nu, table_[mu][x]);
        } else if (table_[nu][kInverse[x]] != kNone) {
          merge(mu, table_[nu][kInverse[x]]);
        } else {
          table_[mu][x] = nu;
          table_[nu][kInverse[x]] = mu;
        }
      }
    }
  }

  // One pass of HLT scanning; with `fill` false it only records deductions and coincidences.
  void scan(std::uint32_t c, const PslWord& w, bool fill) {
    if (w.empty()) return;
    std::uint32_t f = c, b = c;
    std::ptrdiff_t i = 0, j = static_cast<std::ptrdiff_t>(w.size()) - 1;
    auto letter = [&w](std::ptrdiff_t k) { return idx(w[static_cast<std::size_t>(k)]); };
    for (;;) {
      while (i <= j && table_[f][letter(i)] != kNone) f = table_[f][letter(i++)];
      if (i > j) {
        if (f != b) coincidence(f, b);
        return;
      }
      while (j >= i && table_[b][kInverse[letter(j)]] != kNone) b = table_[b][kInverse[letter(j--)]];
      if (j < i) {
        coincidence(f, b);
        return;
      }
      if (i == j) {
        table_[f][letter(i)] = b;
        table_[b][kInverse[letter(i)]] = f;
        return;
      }
      if (!fill) return;
      define(f, letter(i));
    }
  }

  void scan_and_fill(std::uint32_t c, const PslWord& w) { scan(c, w, true); }

  // Returns the new position of coset `c` after compaction.
  std::size_t lookahead_and_compact(std::size_t c) {
    ++result_.lookaheads;
    for (std::size_t k = 0; k < table_.size(); ++k) {
      for (const auto& r : relators()) {
        if (!alive(k)) break;
        scan(static_cast<std::uint32_t>(k), r, false);
      }
    }
    return compact(c);
  }

  std::size_t compact(std::size_t c) {
    std::vector<std::uint32_t> fresh(table_.size(), kNone);
    std::uint32_t next = 0;
    std::size_t new_c = 0;
    for (std::size_t k = 0; k < table_.size(); ++k) {
      if (k == c) new_c = next;
      if (alive(k)) fresh[k] = next++;
    }
    if (c >= table_.size()) new_c = next;
    std::vector<std::array<std::uint32_t, 3>> rows;
    rows.reserve(next);
    for (std::size_t k = 0; k < table_.size(); ++k) {
      if (!alive(k)) continue;
      std::array<std::uint32_t, 3> row{};
      for (std::uint8_t x = 0; x < kLetters; ++x)
        row[x] = table_[k][x] == kNone ? kNone : fresh[rep(table_[k][x])];
      rows.push_back(row);
    }
    table_ = std::move(rows);
    parent_.resize(next);
    for (std::uint32_t k = 0; k < next; ++k) parent_[k] = k;
    return new_c;
  }

  std::size_t cap_;
  std::vector<std::array<std::uint32_t, 3>> table_;
  std::vector<std::uint32_t> parent_;
  std::vector<std::uint32_t> queue_;
  std::size_t live_ = 0;
  std::size_t defined_ = 0;
  CosetTable result_;
};

}  // namespace

PslWord to_psl_word(const Word& st_word) {
  PslWord out;
  auto push = [&out](PslLetter l) {
    // Cancel s s and t t^-1 pairs as they appear.
    if (!out.empty()) {
      const PslLetter last = out.back();
      const bool cancels = (l == PslLetter::s && last == PslLetter::s) ||
                           (l == PslLetter::t && last == PslLetter::t_inv) ||
                           (l == PslLetter::t_inv && last == PslLetter::t);
      if (cancels) {
        out.pop_back();
        return;
      }
    }
    out.push_back(l);
  };
  for (const Letter& l : st_word.letters()) {
    if (l.gen == 0) {
      push(PslLetter::s);
    } else if (l.gen == 1) {
      if (l.inverse) {
        push(PslLetter::t_inv);
        push(PslLetter::s);
      } else {
        push(PslLetter::s);
        push(PslLetter::t);
      }
    } else {
      throw std::invalid_argument("word is not over the generators S, T");
    }
  }
  return out;
}

std::string to_string(const PslWord& w) {
  if (w.empty()) return "1";
  std::string out;
  for (PslLetter l : w) {
    if (!out.empty()) out += ' ';
    out += l == PslLetter::s ? "s" : l == PslLetter::t ? "t" : "t^-1";
  }
  return out;
}

CosetTable coset_enumerate(const std::vector<PslWord>& subgroup_words, std::size_t cap) {
  if (cap < 8) throw std::invalid_argument("coset cap must be at least 8");
  if (cap > std::numeric_limits<std::uint32_t>::max() / 2) throw std::invalid_argument("coset cap too large");
  return Enumerator(subgroup_words, cap).run();
}

CosetTable coset_enumerate(const GeneratorSet& gens, std::size_t cap) {
  std::vector<PslWord> words;
  for (const auto& g : gens.generators()) words.push_back(to_psl_word(rewrite_in_ST(g)));
  return coset_enumerate(words, cap);
}

TableCheck verify_coset_table(const CosetTable& table) {
  if (table.status != CosetStatus::Closed) return {false, "table is not closed"};
  const std::size_t n = table.rows.size();
  if (n == 0 || n != table.index) return {false, "row count does not match the index"};
  for (std::size_t c = 0; c < n; ++c)
    for (std::uint32_t e : table.rows[c])
      if (e >= n) return {false, "entry out of range at coset " + std::to_string(c)};
  auto act = [&](std::uint32_t c, PslLetter l) { return table.rows[c][static_cast<std::size_t>(l)]; };
  for (std::uint32_t c = 0; c < n; ++c) {
    if (act(act(c, PslLetter::s), PslLetter::s) != c) return {false, "s is not an involution"};
    if (act(act(c, PslLetter::t), PslLetter::t_inv) != c || act(act(c, PslLetter::t_inv), PslLetter::t) != c)
      return {false, "t^-1 column does not invert t"};
    if (act(act(act(c, PslLetter::t), PslLetter::t), PslLetter::t) != c) return {false, "t^3 moves a coset"};
  }
  for (const auto& w : table.subgroup_words) {
    std::uint32_t c = 0;
    for (PslLetter l : w) c = act(c, l);
    if (c != 0) return {false, "subgroup word " + to_string(w) + " moves coset 0"};
  }
  std::vector<bool> seen(n, false);
  std::vector<std::uint32_t> stack{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const std::uint32_t c = stack.back();
    stack.pop_back();
    for (std::uint32_t e : table.rows[c]) {
      if (!seen[e]) {
        seen[e] = true;
        ++reached;
        stack.push_back(e);
      }
    }
  }
  if (reached != n) return {false, "action is not transitive"};
  return {true, "transitive permutation representation of degree " + std::to_string(n)};
}

std::string to_string(CosetStatus s) { return s == CosetStatus::Closed ? "closed" : "cap_exceeded"; }

}  // namespace thinlab
