#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "thinlab/core/rational_matrix.hpp"
#include "thinlab/core/word.hpp"

namespace thinlab {

enum class Symmetry { Symmetric, Antisymmetric };

// Space of bilinear forms Q with g^T Q g = Q for every generator g.
struct FormSpace {
  Symmetry symmetry = Symmetry::Symmetric;
  std::vector<RationalMatrix> basis;
  std::size_t dimension() const { return basis.size(); }
};

FormSpace invariant_forms(const GeneratorSet& gens, Symmetry symmetry);

// Integer representative of a rational form: denominators cleared, content removed.
IntMatrix integral_form(const RationalMatrix& q);

// A form in the space that is nondegenerate, trying basis elements first and then small
// integer combinations; none when every tried combination is singular.
std::optional<RationalMatrix> nondegenerate_member(const FormSpace& space);

// Inertia of a symmetric form via exact Lagrange reduction.
Inertia form_signature(const RationalMatrix& q);

bool preserves(const IntMatrix& g, const RationalMatrix& q);

std::string to_string(Symmetry s);

}  // namespace thinlab
