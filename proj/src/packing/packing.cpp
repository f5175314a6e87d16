#include "thinlab/packing/packing.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <stdexcept>

#include "thinlab/closure/forms.hpp"

namespace thinlab {

namespace {

// Largest s with s^2 | n and the squarefree rest, for n > 0.
std::pair<Integer, Integer> split_square(const Integer& n) {
  const Integer r = squarefree_part(n);
  const Integer s2 = n / r;
  Integer s = sqrt(s2);
  if (s * s != s2) throw std::logic_error("squarefree decomposition failed");
  return {s, r};
}

RationalVector to_rational(const std::vector<Integer>& v) { return {v.begin(), v.end()}; }

std::vector<Integer> apply_int(const IntMatrix& g, const std::vector<Integer>& x) {
  const std::size_t n = g.dim();
  std::vector<Integer> y(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) y[i] += g(i, j) * x[j];
  return y;
}

std::vector<Integer> primitive_key(const std::vector<Integer>& v) { return primitive_integer(to_rational(v)); }

// Integral copy of a rational symmetric form, for the isotropic vector search.
std::vector<long long> small_integral_form(const RationalMatrix& q) {
  Integer den = 1;
  for (std::size_t i = 0; i < q.rows(); ++i)
    for (std::size_t j = 0; j < q.cols(); ++j) den = lcm(den, Integer(q(i, j).get_den()));
  std::vector<long long> out;
  for (std::size_t i = 0; i < q.rows(); ++i)
    for (std::size_t j = 0; j < q.cols(); ++j) {
      const Integer x = q(i, j).get_num() * (den / q(i, j).get_den());
      if (!x.fits_slong_p()) throw std::overflow_error("form entries too large for the isotropic search");
      out.push_back(x.get_si());
    }
  return out;
}

constexpr long kIsotropicSearchBound = 40;

}  // namespace

double Surd::value() const { return coef.get_d() * std::sqrt(radicand.get_d()); }

std::string Surd::to_string() const {
  if (radicand == 1 || coef == 0) return coef.get_str();
  return coef.get_str() + "*sqrt(" + radicand.get_str() + ")";
}

Surd surd_sqrt(const Rational& q) {
  if (q <= 0) throw std::domain_error("square root of a non-positive rational");
  // sqrt(a/b) = sqrt(a b) / b.
  const Integer ab = q.get_num() * q.get_den();
  const auto [s, r] = split_square(ab);
  Rational coef(s, q.get_den());
  coef.canonicalize();
  return {coef, r};
}

Surd surd_inv_sqrt(const Rational& q) {
  const Surd root = surd_sqrt(q);
  // 1 / (c sqrt r) = sqrt r / (c r).
  Rational coef = 1 / (root.coef * root.radicand);
  return {coef, root.radicand};
}

Rational rational_product(const Surd& a, const Surd& b) {
  if (a.is_zero() || b.is_zero()) return 0;
  if (a.radicand != b.radicand) throw std::domain_error("product of surds with different radicands");
  return a.coef * b.coef * a.radicand;
}

Rational InversiveCircle::norm() const {
  return rational_product(b, b_hat) - rational_product(bx1, bx1) - rational_product(bx2, bx2);
}

double InversiveCircle::radius() const {
  return is_line() ? std::numeric_limits<double>::infinity() : 1.0 / std::abs(b.value());
}
double InversiveCircle::center_x() const { return bx1.value() / b.value(); }
double InversiveCircle::center_y() const { return bx2.value() / b.value(); }

Rational bilinear(const RationalMatrix& q, const RationalVector& x, const RationalVector& y) {
  Rational s = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < y.size(); ++j)
      if (q(i, j) != 0 && y[j] != 0) s += x[i] * q(i, j) * y[j];
  }
  return s;
}

InversiveChart InversiveChart::standard() {
  InversiveChart c;
  c.form = RationalMatrix(4, 4);
  c.form(0, 1) = c.form(1, 0) = Rational(-1, 2);
  c.form(2, 2) = c.form(3, 3) = 1;
  c.w = {0, -2, 0, 0};
  c.w_prime = {-2, 0, 0, 0};
  c.e1 = {0, 0, 1, 0};
  c.e2 = {0, 0, 0, 1};
  c.h = bilinear(c.form, c.w, c.w_prime);
  c.kappa = -2;
  return c;
}

InversiveChart make_chart(const RationalMatrix& q, const std::vector<RationalVector>& avoid) {
  const std::size_t n = q.rows();
  if (n != 4 || !q.is_symmetric()) throw std::invalid_argument("chart needs a symmetric 4x4 form");
  if (inertia(q) != Inertia{3, 1, 0}) throw std::invalid_argument("chart needs a form of signature (3,1)");
  const auto qi = small_integral_form(q);

  InversiveChart c;
  c.form = q;
  bool found = false;
  std::vector<long> x(n);
  for (long r = 1; r <= kIsotropicSearchBound && !found; ++r) {
    const long side = 2 * r + 1;
    long total = 1;
    for (std::size_t k = 0; k < n; ++k) total *= side;
    for (long code = 0; code < total && !found; ++code) {
      long rest = code, maxabs = 0;
      for (std::size_t k = n; k-- > 0;) {
        x[k] = rest % side - r;
        rest /= side;
        maxabs = std::max(maxabs, std::abs(x[k]));
      }
      if (maxabs != r) continue;
      std::size_t lead = 0;
      while (x[lead] == 0) ++lead;
      if (x[lead] < 0) continue;
      long long value = 0;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) value += x[i] * qi[i * n + j] * x[j];
      if (value != 0) continue;
      RationalVector cand(x.begin(), x.end());
      bool ok = true;
      for (const auto& a : avoid)
        if (bilinear(q, cand, a) == 0) ok = false;
      if (ok) {
        c.w = cand;
        found = true;
      }
    }
  }
  if (!found) throw std::domain_error("no rational isotropic vector found within the search bound");

  RationalVector z;
  for (std::size_t i = 0; i < n && z.empty(); ++i) {
    RationalVector e(n);
    e[i] = 1;
    if (bilinear(q, e, c.w) != 0) z = e;
  }
  const Rational shift = bilinear(q, z, z) / (2 * bilinear(q, z, c.w));
  c.w_prime = z;
  for (std::size_t i = 0; i < n; ++i) c.w_prime[i] -= shift * c.w[i];
  c.h = bilinear(q, c.w, c.w_prime);

  RationalMatrix pair(2, n);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) {
      pair(0, j) += c.w[i] * q(i, j);
      pair(1, j) += c.w_prime[i] * q(i, j);
    }
  }
  const auto comp = kernel(pair);
  if (comp.size() != 2) throw std::logic_error("complement of a hyperbolic pair must be 2-dimensional");
  RationalMatrix gram(2, 2);
  for (std::size_t a = 0; a < 2; ++a)
    for (std::size_t b = 0; b < 2; ++b) gram(a, b) = bilinear(q, comp[a], comp[b]);
  const Diagonalization d = congruence_diagonalize(gram);
  RationalVector e[2] = {RationalVector(n), RationalVector(n)};
  for (std::size_t k = 0; k < 2; ++k)
    for (std::size_t a = 0; a < 2; ++a)
      for (std::size_t i = 0; i < n; ++i) e[k][i] += d.basis(a, k) * comp[a][i];
  c.e1 = to_rational(primitive_integer(e[0]));
  c.e2 = to_rational(primitive_integer(e[1]));
  if (bilinear(q, c.e1, c.e1) <= 0 || bilinear(q, c.e2, c.e2) <= 0 || bilinear(q, c.e1, c.e2) != 0)
    throw std::logic_error("complement basis is not positive orthogonal");
  return c;
}

InversiveCircle to_inversive(const RationalVector& v, const InversiveChart& chart) {
  const Rational qv = bilinear(chart.form, v, v);
  if (qv <= 0) throw std::domain_error("vector of non-positive norm is not a circle");
  const Surd inv = surd_inv_sqrt(qv);
  auto scaled = [&](const Rational& x) { return Surd{x * inv.coef, inv.radicand}; };
  InversiveCircle c;
  c.b = scaled(chart.kappa * bilinear(chart.form, v, chart.w) / chart.h);
  c.b_hat = scaled(-2 * bilinear(chart.form, v, chart.w_prime) / chart.kappa);
  const Rational q1 = bilinear(chart.form, chart.e1, chart.e1);
  const Rational q2 = bilinear(chart.form, chart.e2, chart.e2);
  const Surd s1 = surd_inv_sqrt(q1 * qv);
  const Surd s2 = surd_inv_sqrt(q2 * qv);
  c.bx1 = {bilinear(chart.form, v, chart.e1) * s1.coef, s1.radicand};
  c.bx2 = {bilinear(chart.form, v, chart.e2) * s2.coef, s2.radicand};
  for (Surd* s : {&c.b, &c.b_hat, &c.bx1, &c.bx2})
    if (s->coef == 0) s->radicand = 1;
  if (c.b.coef < 0) c = c.negated();
  return c;
}

RationalVector reflection_vector(const IntMatrix& g, const RationalMatrix& q) {
  const std::size_t n = g.dim();
  if (q.rows() != n) throw std::invalid_argument("form and matrix dimensions differ");
  if (g.is_identity()) throw std::invalid_argument("the identity is not a reflection");
  if (!(g * g).is_identity()) throw std::invalid_argument("matrix is not an involution");
  if (!preserves(g, q)) throw std::invalid_argument("matrix does not preserve the form");
  RationalMatrix plus(g);
  for (std::size_t i = 0; i < n; ++i) plus(i, i) += 1;
  const auto ker = kernel(plus);
  if (ker.size() != 1) {
    throw std::invalid_argument("(-1)-eigenspace has dimension " + std::to_string(ker.size()) + ", not 1");
  }
  const RationalVector v = to_rational(primitive_integer(ker.front()));
  const Rational qv = bilinear(q, v, v);
  if (qv == 0) throw std::invalid_argument("mirror normal is isotropic");
  // Reconstruct I - 2 v (q v)^T / q(v).
  RationalVector qvec(n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) qvec[j] += v[i] * q(i, j);
  RationalMatrix rebuilt = RationalMatrix::identity(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) rebuilt(i, j) -= 2 * v[i] * qvec[j] / qv;
  if (!(rebuilt == RationalMatrix(g))) throw std::invalid_argument("matrix is not the reflection in its mirror");
  return v;
}

RationalMatrix signature_31_form(const GeneratorSet& gens) {
  if (gens.dim() != 4) throw DimensionError("a signature (3,1) form needs 4x4 generators");
  const FormSpace space = invariant_forms(gens, Symmetry::Symmetric);
  for (const auto& q : space.basis) {
    const Inertia in = inertia(q);
    if (in == Inertia{3, 1, 0}) return q;
    if (in == Inertia{1, 3, 0}) return Rational(-1) * q;
  }
  if (auto q = nondegenerate_member(space)) {
    const Inertia in = inertia(*q);
    if (in == Inertia{3, 1, 0}) return *q;
    if (in == Inertia{1, 3, 0}) return Rational(-1) * *q;
  }
  throw std::domain_error("no invariant symmetric form of signature (3,1)");
}

std::vector<std::vector<Integer>> packing_seeds(const std::vector<RationalVector>& normals,
                                                const RationalMatrix& q) {
  const std::size_t n = q.rows();
  const std::size_t k = normals.size();
  std::vector<std::vector<Integer>> seeds;
  if (k < n - 1) return seeds;
  // Subsets of size n - 1 in lexicographic order.
  std::vector<bool> pick(k, false);
  std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(n - 1), true);
  do {
    RationalMatrix rows(n - 1, n);
    std::size_t r = 0;
    for (std::size_t m = 0; m < k; ++m) {
      if (!pick[m]) continue;
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i) rows(r, j) += normals[m][i] * q(i, j);
      ++r;
    }
    const auto ker = kernel(rows);
    if (ker.size() == 1) {
      auto u = primitive_integer(ker.front());
      if (bilinear(q, to_rational(u), to_rational(u)) > 0 &&
          std::find(seeds.begin(), seeds.end(), u) == seeds.end())
        seeds.push_back(std::move(u));
    }
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return seeds;
}

PackingOrbit orbit_circles(const GeneratorSet& gens, const RationalMatrix& q, const PackingOptions& opts) {
  PackingOrbit orbit;
  orbit.generators = gens;
  orbit.form = q;
  for (const auto& g : gens.generators()) orbit.mirror_normals.push_back(reflection_vector(g, q));

  if (opts.seeds == SeedChoice::Packing) orbit.seeds = packing_seeds(orbit.mirror_normals, q);
  if (orbit.seeds.empty()) {
    for (const auto& v : orbit.mirror_normals) orbit.seeds.push_back(primitive_integer(v));
  }
  std::vector<RationalVector> seed_vectors;
  for (const auto& s : orbit.seeds) seed_vectors.push_back(to_rational(s));
  orbit.chart = make_chart(q, seed_vectors);

  // Global scale: depth-0 curvatures become coprime integers when they are all rational.
  Integer den = 1, num = 0;
  bool rational_seeds = true;
  for (const auto& s : seed_vectors) {
    const Surd b = to_inversive(s, orbit.chart).b;
    if (!b.is_rational()) rational_seeds = false;
    den = lcm(den, Integer(b.coef.get_den()));
  }
  if (rational_seeds) {
    for (const auto& s : seed_vectors) {
      const Rational b = to_inversive(s, orbit.chart).b.coef;
      num = gcd(num, Integer(b.get_num() * (den / b.get_den())));
    }
  }
  if (rational_seeds && num != 0) {
    orbit.scale = Rational(den, num);
    orbit.scale.canonicalize();
    orbit.chart.kappa *= orbit.scale;
  }
  for (const auto& v : orbit.mirror_normals) orbit.mirrors.push_back(to_inversive(v, orbit.chart));

  std::map<std::vector<Integer>, std::size_t> seen;
  std::vector<std::size_t> frontier;
  auto add = [&](const std::vector<Integer>& vec, std::size_t depth, Word word) {
    auto key = primitive_key(vec);
    if (seen.count(key)) return;
    seen.emplace(key, orbit.circles.size());
    frontier.push_back(orbit.circles.size());
    OrbitCircle c;
    c.circle = to_inversive(to_rational(key), orbit.chart);
    c.vector = std::move(key);
    c.depth = depth;
    c.word = std::move(word);
    orbit.circles.push_back(std::move(c));
  };
  for (const auto& s : orbit.seeds) add(s, 0, Word{});
  orbit.size_by_depth.push_back(orbit.circles.size());
  for (std::size_t d = 1; d <= opts.depth; ++d) {
    std::vector<std::size_t> current;
    current.swap(frontier);
    for (std::size_t idx : current) {
      for (std::size_t gi = 0; gi < gens.size(); ++gi) {
        const auto image = apply_int(gens.generator(gi), orbit.circles[idx].vector);
        add(image, d, Word::gen(static_cast<std::uint16_t>(gi)) * orbit.circles[idx].word);
      }
    }
    orbit.size_by_depth.push_back(orbit.circles.size());
  }

  // A circle enclosing every other circle is the bounding circle and gets negative curvature.
  for (auto& c : orbit.circles) {
    if (c.circle.is_line()) continue;
    const double r = c.circle.radius(), x = c.circle.center_x(), y = c.circle.center_y();
    bool encloses = true;
    for (const auto& o : orbit.circles) {
      if (&o == &c) continue;
      if (o.circle.is_line() ||
          std::hypot(o.circle.center_x() - x, o.circle.center_y() - y) + o.circle.radius() > r * (1 + 1e-9)) {
        encloses = false;
        break;
      }
    }
    if (encloses && orbit.circles.size() > 1) {
      c.bounding = true;
      c.circle = c.circle.negated();
      break;
    }
  }

  orbit.integral = rational_seeds;
  for (const auto& c : orbit.circles) {
    if (!c.circle.b.is_rational() || c.circle.b.coef.get_den() != 1) orbit.integral = false;
  }
  return orbit;
}

PackingOrbit orbit_circles(const GeneratorSet& gens, const PackingOptions& opts) {
  return orbit_circles(gens, signature_31_form(gens), opts);
}

std::string to_string(SeedChoice s) { return s == SeedChoice::Packing ? "packing" : "mirrors"; }

}  // namespace thinlab
