#include <doctest.h>

#include "thinlab/cli/catalog.hpp"
#include "thinlab/probes/coset_enum.hpp"
#include "thinlab/probes/st_rewrite.hpp"
#include "thinlab/probes/verdict.hpp"

using namespace thinlab;

namespace {

const GeneratorSet& gens(const char* id) { return catalog_entry(id).generators; }

// Index of a subgroup of SL2(Z) containing Gamma(N), by counting the orbit of its
// image mod N acting on SL2(Z/N) by left cosets. Independent of the enumerator.
std::size_t congruence_index(const GeneratorSet& g, std::uint64_t n) {
  const GroupImage sub = GroupImage::enumerate(g, n);
  const GroupImage all = GroupImage::enumerate(standard_st(), n);
  return all.order() / sub.order();
}

}  // namespace

TEST_CASE("rewrite_in_ST") {
  const GeneratorSet& st = standard_st();
  CHECK(rewrite_in_ST(st.generator(1)).to_string(st.names()) == "T");
  CHECK(rewrite_in_ST(IntMatrix::from_rows({{1, 4}, {0, 1}})).to_string(st.names()) == "T^4");
  const IntMatrix a = IntMatrix::from_rows({{2, 1}, {1, 1}});
  const Word w = rewrite_in_ST(a);
  CHECK(w.length() <= 10);
  CHECK(eval_word(st, w) == a);
  const IntMatrix minus = IntMatrix::from_rows({{-1, 5}, {0, -1}});
  CHECK(eval_word(st, rewrite_in_ST(minus)) == minus);
  CHECK(rewrite_in_ST(IntMatrix::identity(2)).empty());
  CHECK_THROWS(rewrite_in_ST(IntMatrix::from_rows({{1, 2}, {3, 4}})));
  CHECK_THROWS(rewrite_in_ST(IntMatrix::identity(3)));
}

TEST_CASE("coset_enumerate") {
  const CosetTable whole = coset_enumerate(standard_st());
  CHECK(whole.status == CosetStatus::Closed);
  CHECK(whole.index == 1);

  const CosetTable ex2 = coset_enumerate(gens("ex2"));
  REQUIRE(ex2.status == CosetStatus::Closed);
  CHECK(ex2.index == 6);
  CHECK(verify_coset_table(ex2).ok);

  const CosetTable ex5 = coset_enumerate(gens("ex5"), 100000);
  CHECK(ex5.status == CosetStatus::CapExceeded);
  CHECK(ex5.live_at_stop > 0);

  CHECK_THROWS(coset_enumerate(gens("ex5"), 4));
}

TEST_CASE("coset indices match congruence oracles") {
  // Gamma_0(5), generated by T, [[1,0],[5,1]] and [[2,-1],[5,-2]] (with -I).
  const GeneratorSet g0("Gamma0(5)", {IntMatrix::from_rows({{1, 1}, {0, 1}}), IntMatrix::from_rows({{1, 0}, {5, 1}}),
                                      IntMatrix::from_rows({{2, -1}, {5, -2}}), IntMatrix::from_rows({{-1, 0}, {0, -1}})});
  const CosetTable t0 = coset_enumerate(g0);
  REQUIRE(t0.status == CosetStatus::Closed);
  CHECK(t0.index == congruence_index(g0, 5));
  CHECK(verify_coset_table(t0).ok);

  // Example 2 contains Gamma(4); the PSL index is half the SL index since -I is missing.
  CHECK(congruence_index(gens("ex2"), 4) == 12);
}

TEST_CASE("verify_coset_table rejects a corrupted table") {
  CosetTable t = coset_enumerate(gens("ex2"));
  REQUIRE(t.status == CosetStatus::Closed);
  std::swap(t.rows[0][1], t.rows[1][1]);
  CHECK_FALSE(verify_coset_table(t).ok);
  CosetTable open;
  CHECK_FALSE(verify_coset_table(open).ok);
}

TEST_CASE("minus_I_obstruction") {
  const ObstructionResult ex2 = minus_I_obstruction(gens("ex2"), {4});
  CHECK(ex2.excluded);
  CHECK(ex2.modulus == 4u);
  CHECK_FALSE(minus_I_obstruction(gens("ex1"), {3, 4, 5}).excluded);
  CHECK_FALSE(minus_I_obstruction(gens("ex5"), {4}).excluded);
  CHECK(find_minus_identity(gens("ex5")).has_value());
}

TEST_CASE("thinness_verdict") {
  const Verdict ex1 = thinness_verdict(gens("ex1"));
  CHECK(ex1.classification == VerdictClass::ProvenNotThin);
  CHECK(ex1.index == 1);
  CHECK(ex1.psl_index == 1u);

  const Verdict ex2 = thinness_verdict(gens("ex2"));
  CHECK(ex2.classification == VerdictClass::ProvenNotThin);
  CHECK(ex2.psl_index == 6u);
  CHECK(ex2.index == 12);
  REQUIRE(ex2.coset_check);
  CHECK(ex2.coset_check->ok);

  CHECK(thinness_verdict(gens("ex3")).classification == VerdictClass::ProvenNotThin);
  CHECK(thinness_verdict(gens("ex4")).classification == VerdictClass::ProvenNotThin);

  const Verdict ex5 = thinness_verdict(gens("ex5"));
  CHECK(ex5.classification == VerdictClass::ProvenThinByCatalog);
  ProbeConfig bare;
  bare.use_catalog = false;
  CHECK(thinness_verdict(gens("ex5"), bare).classification == VerdictClass::ThinEvidence);

  const Verdict ex8 = thinness_verdict(gens("ex8"));
  CHECK(ex8.classification == VerdictClass::ProvenThinByCatalog);
  CHECK(ex8.anchor.find("necessarily of infinite index") != std::string::npos);

  // An input the catalog does not know and no procedure decides.
  const GeneratorSet odd("odd", {IntMatrix::from_rows({{1, 0, 1}, {0, 1, 0}, {0, 0, 1}}),
                                 IntMatrix::from_rows({{1, 1, 0}, {0, 1, 0}, {0, 0, 1}})});
  CHECK(thinness_verdict(odd).classification != VerdictClass::ProvenThinByCatalog);
}
