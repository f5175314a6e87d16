#include "thinlab/probes/st_rewrite.hpp"

#include <stdexcept>

namespace thinlab {

namespace {
constexpr std::uint16_t kS = 0;
constexpr std::uint16_t kT = 1;
}  // namespace

const GeneratorSet& standard_st() {
  static const GeneratorSet st("SL2(Z)",
                               {IntMatrix::from_rows({{0, 1}, {-1, 0}}), IntMatrix::from_rows({{1, 1}, {0, 1}})},
                               {"S", "T"});
  return st;
}

Word rewrite_in_ST(const IntMatrix& m) {
  if (m.dim() != 2) throw DimensionError("rewrite_in_ST needs a 2x2 matrix");
  if (det(m) != 1) throw std::invalid_argument("rewrite_in_ST needs determinant 1");

  Integer a = m(0, 0), b = m(0, 1), c = m(1, 0), d = m(1, 1);
  // `applied` is the product L of the left multiplications so far, as a word; L m = current.
  Word applied;
  while (c != 0) {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), c.get_mpz_t());
    if (q != 0) {
      // T^{-q} from the left: row0 -= q * row1.
      a -= q * c;
      b -= q * d;
      if (!q.fits_slong_p()) throw std::overflow_error("shear exponent out of range");
      applied = Word::gen(kT, static_cast<int>(-q.get_si())) * applied;
    }
    // S from the left: (row0, row1) -> (row1, -row0).
    Integer na = c, nb = d;
    c = -a;
    d = -b;
    a = std::move(na);
    b = std::move(nb);
    applied = Word::gen(kS) * applied;
  }
  if (!b.fits_slong_p()) throw std::overflow_error("final shear exponent out of range");
  const int power = static_cast<int>(b.get_si());
  // Remainder is T^b when a = 1 and -T^{-b} = S^2 T^{-b} when a = -1.
  const Word rest = a == 1 ? Word::gen(kT, power) : Word::gen(kS, 2) * Word::gen(kT, -power);
  return applied.inverse() * rest;
}

}  // namespace thinlab
