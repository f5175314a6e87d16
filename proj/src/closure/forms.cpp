#include "thinlab/closure/forms.hpp"

#include <functional>

namespace thinlab {

namespace {

std::vector<RationalMatrix> form_unknowns(std::size_t n, Symmetry symmetry) {
  std::vector<RationalMatrix> basis;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      if (symmetry == Symmetry::Antisymmetric && i == j) continue;
      RationalMatrix e(n, n);
      e(i, j) = 1;
      if (i != j) e(j, i) = symmetry == Symmetry::Symmetric ? 1 : -1;
      basis.push_back(std::move(e));
    }
  }
  return basis;
}

}  // namespace

bool preserves(const IntMatrix& g, const RationalMatrix& q) {
  const RationalMatrix gr(g);
  return gr.transpose() * q * gr == q;
}

FormSpace invariant_forms(const GeneratorSet& gens, Symmetry symmetry) {
  const std::size_t n = gens.dim();
  const auto unknowns = form_unknowns(n, symmetry);
  FormSpace space;
  space.symmetry = symmetry;
  if (unknowns.empty()) return space;

  // Column k holds the entries of g^T E_k g - E_k for every generator g.
  RationalMatrix system(gens.size() * n * n, unknowns.size());
  for (std::size_t gi = 0; gi < gens.size(); ++gi) {
    const RationalMatrix g(gens.generator(gi));
    const RationalMatrix gt = g.transpose();
    for (std::size_t k = 0; k < unknowns.size(); ++k) {
      const RationalMatrix image = gt * unknowns[k] * g - unknowns[k];
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) system(gi * n * n + r * n + c, k) = image(r, c);
    }
  }
  for (const auto& coeffs : kernel(system)) {
    RationalMatrix q(n, n);
    for (std::size_t k = 0; k < unknowns.size(); ++k) {
      if (coeffs[k] != 0) q = q + coeffs[k] * unknowns[k];
    }
    space.basis.emplace_back(integral_form(q));
  }
  return space;
}

IntMatrix integral_form(const RationalMatrix& q) {
  const std::size_t n = q.rows();
  RationalVector flat;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) flat.push_back(q(i, j));
  const auto ints = primitive_integer(flat);
  IntMatrix out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out(i, j) = ints[i * n + j];
  return out;
}

std::optional<RationalMatrix> nondegenerate_member(const FormSpace& space) {
  for (const auto& b : space.basis)
    if (det(b) != 0) return b;
  const std::size_t d = space.dimension();
  if (d < 2 || d > 6) return std::nullopt;
  // Small integer combinations with coefficients in [-2, 2].
  std::vector<int> c(d, -2);
  for (;;) {
    RationalMatrix q(space.basis[0].rows(), space.basis[0].cols());
    for (std::size_t i = 0; i < d; ++i) q = q + Rational(c[i]) * space.basis[i];
    if (det(q) != 0) return q;
    std::size_t i = 0;
    while (i < d && c[i] == 2) c[i++] = -2;
    if (i == d) return std::nullopt;
    ++c[i];
  }
}

Inertia form_signature(const RationalMatrix& q) { return inertia(q); }

std::string to_string(Symmetry s) {
  return s == Symmetry::Symmetric ? "symmetric" : "antisymmetric";
}

}  // namespace thinlab
