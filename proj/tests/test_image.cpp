#include <doctest.h>

#include "thinlab/cli/catalog.hpp"
#include "thinlab/image/group_image.hpp"

using namespace thinlab;

namespace {

const GeneratorSet& gens(const char* id) { return catalog_entry(id).generators; }

// All 2x2 matrices over F_p with determinant 1, counted directly.
std::size_t brute_sl2_count(std::uint64_t p) {
  std::size_t count = 0;
  for (std::uint64_t a = 0; a < p; ++a)
    for (std::uint64_t b = 0; b < p; ++b)
      for (std::uint64_t c = 0; c < p; ++c)
        for (std::uint64_t d = 0; d < p; ++d)
          if ((a * d + p * p - b * c) % p == 1) ++count;
  return count;
}

}  // namespace

TEST_CASE("sl_order") {
  CHECK(sl_order(2, 3) == 24);
  CHECK(sl_order(2, 3) == brute_sl2_count(3));
  CHECK(sl_order(2, 5) == brute_sl2_count(5));
  CHECK(sl_order(2, 23) == 12144);
  CHECK(sl_order(3, 7) == 5630688);
  CHECK(gl_order(2, 3) == 48);
  CHECK_THROWS(sl_order(2, 9));
}

TEST_CASE("enumerate_image") {
  const GroupImage mod2 = GroupImage::enumerate(gens("ex5"), 2);
  CHECK(mod2.complete());
  CHECK(mod2.order() == 2);
  const GroupImage mod3 = GroupImage::enumerate(gens("ex5"), 3);
  CHECK(mod3.order() == 24);
  CHECK(mod3.witness(*mod3.index_of(ModMatrix::identity(2, 3))).empty());

  const GroupImage capped = GroupImage::enumerate(gens("ex5"), 7, 10);
  CHECK_FALSE(capped.complete());
  CHECK(capped.order() <= 10);
}

TEST_CASE("witnesses are breadth-first shortest") {
  const GroupImage img = GroupImage::enumerate(gens("ex1"), 5);
  CHECK(img.order() == 120);
  for (std::size_t i = 0; i < img.order(); ++i) {
    const Word w = img.witness(i);
    CHECK(w.length() == img.depth(i));
    CHECK(reduce_mod(eval_word(gens("ex1"), w), 5) == img.element(i));
  }
  // T = A: one letter away from the identity.
  CHECK(img.depth(*img.index_of(ModMatrix::from_rows(5, {{1, 1}, {0, 1}}))) == 1);
}

TEST_CASE("composite moduli use byte keys when packing overflows") {
  const GroupImage img = GroupImage::enumerate(gens("ex1"), 4);
  CHECK(img.order() == 48);
  CHECK(img.packed());
  const GroupImage wide = GroupImage::enumerate(gens("ex7"), 70000, 50);
  CHECK_FALSE(wide.packed());
}

TEST_CASE("is_surjective") {
  CHECK(is_surjective(gens("ex5"), 5).surjective == Surjectivity::Yes);
  const ImageVerdict two = is_surjective(gens("ex5"), 2);
  CHECK(two.surjective == Surjectivity::No);
  CHECK(two.reason.find("collapsed generator") != std::string::npos);
  CHECK(is_surjective(gens("ex1"), 7).surjective == Surjectivity::Yes);
  CHECK(is_surjective(gens("ex2"), 2).surjective == Surjectivity::No);
  CHECK(is_surjective(gens("ex5"), 7, 100).surjective == Surjectivity::Capped);
  CHECK_THROWS(is_surjective(gens("ex5"), 9));
}

TEST_CASE("contains_mod") {
  const MembershipResult gl = contains_mod(gens("gl2-demo"), 5, ModMatrix::from_rows(5, {{1, 2}, {3, 4}}));
  CHECK(gl.status == Membership::No);
  CHECK(gl.reason.find("determinant") != std::string::npos);
  CHECK(contains_mod(gens("ex2"), 4, ModMatrix::from_rows(4, {{-1, 0}, {0, -1}})).status == Membership::No);
  CHECK(contains_mod(gens("ex9"), 3, ModMatrix::identity(4, 3)).status == Membership::Yes);
}

TEST_CASE("lift_to_integers") {
  const GeneratorSet& ex1 = gens("ex1");
  const Lift a = lift_to_integers(ex1, 7, reduce_mod(ex1.generator(0), 7));
  CHECK(a.matrix == ex1.generator(0));
  CHECK(a.word.to_string(ex1.names()) == "A");

  const Lift id = lift_to_integers(ex1, 7, ModMatrix::identity(2, 7));
  CHECK(id.matrix.is_identity());
  CHECK(id.word.empty());

  const ModMatrix target = ModMatrix::from_rows(5, {{2, 0}, {1, 3}});
  const Lift g = lift_to_integers(ex1, 5, target);
  CHECK(det(g.matrix) == 1);
  CHECK(reduce_mod(g.matrix, 5) == target);
  CHECK(eval_word(ex1, g.word) == g.matrix);

  CHECK_THROWS_AS(lift_to_integers(gens("ex3"), 5, target), std::domain_error);
}
