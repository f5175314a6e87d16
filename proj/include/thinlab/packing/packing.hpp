#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "thinlab/core/rational_matrix.hpp"
#include "thinlab/core/word.hpp"

namespace thinlab {

// coef * sqrt(radicand), radicand a positive squarefree integer.
struct Surd {
  Rational coef;
  Integer radicand = 1;

  static Surd from_rational(const Rational& r) { return {r, 1}; }
  bool is_zero() const { return coef == 0; }
  bool is_rational() const { return coef == 0 || radicand == 1; }
  double value() const;
  Surd operator-() const { return {-coef, radicand}; }
  std::string to_string() const;
  friend bool operator==(const Surd&, const Surd&) = default;
};

// sqrt(q) and 1/sqrt(q) for rational q > 0.
Surd surd_sqrt(const Rational& q);
Surd surd_inv_sqrt(const Rational& q);
// a * b, which must be rational (equal radicands or a zero factor).
Rational rational_product(const Surd& a, const Surd& b);

// Circle in inversive coordinates: curvature b, co-curvature b_hat = b|c|^2 - 1/b, and
// curvature times center (bx1, bx2); b b_hat - bx1^2 - bx2^2 = -1. Lines have b = 0.
struct InversiveCircle {
  Surd b, b_hat, bx1, bx2;

  bool is_line() const { return b.is_zero(); }
  Rational norm() const;  // exact b b_hat - bx1^2 - bx2^2
  double radius() const;
  double center_x() const;
  double center_y() const;
  InversiveCircle negated() const { return {-b, -b_hat, -bx1, -bx2}; }
};

// Isometry data from (Q^n, q) to inversive coordinates. w and w_prime are isotropic with
// B(w, w_prime) = h, e1 and e2 are an orthogonal basis of their complement.
// b = kappa B(x, w) / h, b_hat = -2 B(x, w_prime) / kappa, bx_i = B(x, e_i) / sqrt(q(e_i)),
// all divided by sqrt(q(x)).
struct InversiveChart {
  RationalMatrix form;
  RationalVector w, w_prime, e1, e2;
  Rational h;
  Rational kappa = 1;

  // The chart on coordinates (b, b_hat, bx1, bx2) with form bx1^2 + bx2^2 - b b_hat.
  static InversiveChart standard();
};

Rational bilinear(const RationalMatrix& q, const RationalVector& x, const RationalVector& y);

// Chart for a signature (3,1) form on Q^4: the first isotropic integer vector (by max-norm,
// then lexicographic) pairing nonzero with every vector in `avoid`.
InversiveChart make_chart(const RationalMatrix& q, const std::vector<RationalVector>& avoid);

// Oriented so that b >= 0. Throws std::domain_error when q(v) <= 0.
InversiveCircle to_inversive(const RationalVector& v, const InversiveChart& chart);

// Mirror normal v of an involution g preserving q, with g = I - 2 v v^T q / (v^T q v)
// checked exactly. Throws std::invalid_argument otherwise.
RationalVector reflection_vector(const IntMatrix& g, const RationalMatrix& q);

// Nondegenerate invariant symmetric form of signature (3,1), integral. Throws when none.
RationalMatrix signature_31_form(const GeneratorSet& gens);

// Positive-norm vectors orthogonal to all but one mirror normal (primitive integer, deduplicated).
std::vector<std::vector<Integer>> packing_seeds(const std::vector<RationalVector>& normals,
                                                const RationalMatrix& q);

struct OrbitCircle {
  std::vector<Integer> vector;  // primitive integer, first nonzero entry positive
  InversiveCircle circle;
  std::size_t depth = 0;
  Word word;  // over the generators; the circle is word applied to a seed
  bool bounding = false;
};

enum class SeedChoice { Packing, Mirrors };

struct PackingOptions {
  std::size_t depth = 6;
  SeedChoice seeds = SeedChoice::Packing;
};

struct PackingOrbit {
  GeneratorSet generators;
  RationalMatrix form;
  InversiveChart chart;
  std::vector<RationalVector> mirror_normals;
  std::vector<InversiveCircle> mirrors;
  std::vector<std::vector<Integer>> seeds;
  std::vector<OrbitCircle> circles;
  std::vector<std::size_t> size_by_depth;  // cumulative orbit size at each depth
  Rational scale = 1;                      // global curvature rescale, fixed at depth 0
  bool integral = false;                   // every |b| is an integer after rescaling
};

PackingOrbit orbit_circles(const GeneratorSet& gens, const RationalMatrix& q, const PackingOptions& opts = {});
PackingOrbit orbit_circles(const GeneratorSet& gens, const PackingOptions& opts = {});

std::string to_string(SeedChoice s);

}  // namespace thinlab
