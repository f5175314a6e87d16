#include <doctest.h>

#include "thinlab/cli/catalog.hpp"
#include "thinlab/closure/closure.hpp"
#include "thinlab/closure/forms.hpp"

using namespace thinlab;

namespace {

const GeneratorSet& gens(const char* id) { return catalog_entry(id).generators; }

// Rank of the flattened words of length <= len, with every word evaluated from scratch.
std::size_t rank_oracle(const GeneratorSet& g, std::size_t len) {
  const auto words = enumerate_words(g, len);
  const std::size_t n = g.dim();
  RationalMatrix m(words.size(), n * n);
  for (std::size_t r = 0; r < words.size(); ++r) {
    const IntMatrix x = eval_word(g, words[r]);
    for (std::size_t i = 0; i < n * n; ++i) m(r, i) = x(i / n, i % n);
  }
  return rank(m);
}

IntMatrix conjugate(const IntMatrix& g, const IntMatrix& c) { return mat_inv(c) * g * c; }

}  // namespace

TEST_CASE("invariant_forms") {
  const FormSpace sp = invariant_forms(gens("ex9"), Symmetry::Antisymmetric);
  REQUIRE(sp.dimension() == 1);
  CHECK(det(sp.basis[0]) != 0);
  for (const auto& g : gens("ex9").generators()) CHECK(preserves(g, sp.basis[0]));

  const FormSpace q = invariant_forms(gens("ex10"), Symmetry::Symmetric);
  REQUIRE(q.dimension() >= 1);
  bool found = false;
  for (const auto& b : q.basis) {
    const Inertia s = form_signature(b);
    found = found || s == Inertia{3, 1, 0} || s == Inertia{1, 3, 0};
  }
  CHECK(found);

  CHECK(invariant_forms(gens("ex1"), Symmetry::Symmetric).dimension() == 0);
  CHECK(invariant_forms(gens("ex8"), Symmetry::Symmetric).dimension() == 0);
  CHECK(invariant_forms(gens("ex8"), Symmetry::Antisymmetric).dimension() == 0);
}

TEST_CASE("form_signature") {
  CHECK(form_signature(RationalMatrix::identity(4)) == Inertia{4, 0, 0});
  RationalMatrix d = RationalMatrix::identity(4);
  d(3, 3) = -1;
  CHECK(form_signature(d) == Inertia{3, 1, 0});
  // Zero diagonal, hyperbolic plane.
  RationalMatrix h(2, 2);
  h(0, 1) = h(1, 0) = 1;
  CHECK(form_signature(h) == Inertia{1, 1, 0});
  RationalMatrix z(3, 3);
  z(0, 0) = 2;
  CHECK(form_signature(z) == Inertia{1, 0, 2});
}

TEST_CASE("spanning_dimension") {
  CHECK(spanning_dimension(gens("ex8"), 6) == 9);
  CHECK(spanning_dimension(gens("ex7"), 6) == 5);
  CHECK(spanning_dimension(gens("ex3"), 6) == 2);
  CHECK(spanning_dimension(gens("ex8"), 3) == rank_oracle(gens("ex8"), 3));
  CHECK(spanning_dimension(gens("ex7"), 3) == rank_oracle(gens("ex7"), 3));
  CHECK(spanning_dimension(gens("ex9"), 3) == rank_oracle(gens("ex9"), 3));
  for (const auto& e : catalog()) {
    CAPTURE(e.id);
    CHECK(spanning_dimension(e.generators, 8) == spanning_dimension(e.generators, 6));
  }
}

TEST_CASE("classify_unipotent") {
  CHECK(classify_unipotent(gens("ex3")));
  CHECK_FALSE(classify_unipotent(gens("ex4")));
  CHECK(classify_unipotent(GeneratorSet("I", {IntMatrix::identity(3)})));
  // Each generator unipotent, product not.
  CHECK_FALSE(classify_unipotent(gens("ex2")));
}

TEST_CASE("density_certificate") {
  const auto c = density_certificate(gens("ex5"), 5);
  REQUIRE(c);
  CHECK(c->prime == 5);
  CHECK(c->image_order == 120);
  CHECK_FALSE(density_certificate(gens("ex3"), 7));
  CHECK_THROWS(density_certificate(gens("ex5"), 3));
  CHECK_THROWS(density_certificate(gens("ex5"), 9));
  CHECK_THROWS(density_certificate(gens("ex10"), 5));
}

TEST_CASE("density agrees with span and forms") {
  // In rank 2 every determinant-1 matrix preserves the determinant form, so exactly one
  // antisymmetric form survives; from rank 3 on there is none.
  for (const char* id : {"ex1", "ex2", "ex5", "ex8", "ex11"}) {
    CAPTURE(id);
    const GeneratorSet& g = gens(id);
    bool fired = false;
    for (std::uint64_t p : {5, 7}) fired = fired || density_certificate(g, p).has_value();
    REQUIRE(fired);
    CHECK(spanning_dimension(g, 6) == g.dim() * g.dim());
    CHECK(invariant_forms(g, Symmetry::Symmetric).dimension() == 0);
    CHECK(invariant_forms(g, Symmetry::Antisymmetric).dimension() == (g.dim() == 2 ? 1u : 0u));
  }
}

TEST_CASE("classify_sl2") {
  CHECK(classify_sl2(gens("ex3")).closure == ClosureClass::Unipotent);
  const ClosureCertificate t = classify_sl2(gens("ex4"));
  CHECK(t.closure == ClosureClass::Torus);
  REQUIRE(t.evidence.field_discriminant);
  CHECK(*t.evidence.field_discriminant == 5);
  const ClosureCertificate f = classify_sl2(gens("ex5"));
  CHECK(f.closure == ClosureClass::Full);
  REQUIRE(f.evidence.density);
  CHECK(f.evidence.density->prime == 5);

  // Borel: upper triangular, not unipotent.
  const GeneratorSet borel("borel", {IntMatrix::from_rows({{-1, 1}, {0, -1}}), IntMatrix::from_rows({{1, 3}, {0, 1}})});
  CHECK(classify_sl2(borel).closure == ClosureClass::ReducibleBlock);
  CHECK_THROWS(classify_sl2(gens("ex7")));
}

TEST_CASE("classify_sl2 is conjugation invariant") {
  const std::vector<IntMatrix> conjugators{IntMatrix::from_rows({{2, 1}, {1, 1}}),
                                           IntMatrix::from_rows({{3, 5}, {1, 2}}),
                                           IntMatrix::from_rows({{0, 1}, {-1, 7}})};
  for (const auto& c : conjugators) {
    std::vector<IntMatrix> g;
    for (const auto& x : gens("ex3").generators()) g.push_back(conjugate(x, c));
    CHECK(classify_sl2(GeneratorSet("conj", g)).closure == ClosureClass::Unipotent);
  }
}

TEST_CASE("closure_certificate for higher rank") {
  const ClosureCertificate sp = closure_certificate(gens("ex9"));
  CHECK(sp.closure == ClosureClass::Symplectic);
  const ClosureCertificate o = closure_certificate(gens("ex10"));
  CHECK(o.closure == ClosureClass::OrthogonalLike);
  REQUIRE(o.evidence.signature);
  CHECK(o.evidence.signature->zero == 0);
  CHECK(closure_certificate(gens("ex7")).closure == ClosureClass::ReducibleBlock);
  const ClosureCertificate full = closure_certificate(gens("ex8"));
  CHECK(full.closure == ClosureClass::Full);
  CHECK(full.evidence.spanning_dimension == 9u);
}
