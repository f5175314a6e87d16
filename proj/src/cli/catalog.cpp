#include "thinlab/cli/catalog.hpp"

#include <fstream>
#include <stdexcept>

#include "thinlab/core/json_io.hpp"

namespace thinlab {

namespace {

using Rows = std::initializer_list<std::initializer_list<long>>;

IntMatrix m(Rows rows) { return IntMatrix::from_rows(rows); }

std::vector<CatalogEntry> build_catalog() {
  std::vector<CatalogEntry> c;
  c.push_back({"ex1", "the standard generators of SL2(Z)",
               GeneratorSet("ex1", {m({{1, 1}, {0, 1}}), m({{0, 1}, {-1, 0}})}, {"A", "B"}), "SL2",
               ThinStatus::NotThin, 1, "A = T and B = S generate SL2(Z)", ""});
  c.push_back({"ex2", "level-4 congruence subgroup",
               GeneratorSet("ex2", {m({{1, 2}, {0, 1}}), m({{1, 0}, {2, 1}})}, {"A", "B"}), "SL2",
               ThinStatus::NotThin, 12,
               "congruence subgroup: diagonal entries 1 mod 4, even off-diagonal entries", ""});
  c.push_back({"ex3", "upper unipotent with even shear",
               GeneratorSet("ex3", {m({{1, 4}, {0, 1}}), m({{1, 6}, {0, 1}})}, {"A", "B"}), "U",
               ThinStatus::NotThin, 2, "generates the shears with even upper-right entry", ""});
  c.push_back({"ex4", "cyclic group in a split-over-Q(sqrt5) torus",
               GeneratorSet("ex4", {m({{2, 1}, {1, 1}}), m({{5, 3}, {3, 2}})}, {"A", "B"}), "torus over Q(sqrt5)",
               ThinStatus::NotThin, 1, "B = A^2 and the group is all integer points of its torus", ""});
  c.push_back({"ex5", "the shear T^4 with S",
               GeneratorSet("ex5", {m({{1, 4}, {0, 1}}), m({{0, 1}, {-1, 0}})}, {"A", "B"}), "SL2",
               ThinStatus::Thin, std::nullopt,
               "infinite index in SL2(Z) and not virtually abelian, hence Zariski dense", ""});
  c.push_back({"ex7", "SL2(Z) in the upper-left block of SL3",
               GeneratorSet("ex7", {m({{1, 1, 0}, {0, 1, 0}, {0, 0, 1}}), m({{0, 1, 0}, {-1, 0, 0}, {0, 0, 1}})},
                            {"A", "B"}),
               "SL2 block", ThinStatus::NotThin, 1, "a copy of SL2(Z) in its own closure", ""});
  c.push_back({"ex8", "(3,3,4) triangle group in SL3(Z)",
               GeneratorSet("ex8", {m({{0, 0, 1}, {1, 0, 0}, {0, 1, 0}}), m({{1, 2, 4}, {0, -1, -1}, {0, 1, 0}})},
                            {"A", "B"}),
               "SL3", ThinStatus::Thin, std::nullopt,
               "faithful image of the (3,3,4) hyperbolic triangle group with full closure",
               "necessarily of infinite index"});
  c.push_back({"ex9", "Dwork hypergeometric monodromy in Sp(4)",
               GeneratorSet("ex9",
                            {m({{0, 0, 0, -1}, {1, 0, 0, -1}, {0, 1, 0, -1}, {0, 0, 1, -1}}),
                             m({{1, 0, 0, 5}, {0, 1, 0, -5}, {0, 0, 1, 5}, {0, 0, 0, 1}})},
                            {"A", "B"}),
               "Sp4", ThinStatus::Thin, std::nullopt, "Brav and Thomas (2014)", "this group is thin"});
  c.push_back({"ex10", "reflection group of a signature (3,1) form",
               GeneratorSet("ex10",
                            {m({{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, -1, 0}, {0, 0, 0, 1}}),
                             m({{1, 0, 0, 0}, {1, 1, 1, 0}, {-2, 0, -1, 0}, {0, 0, 0, 1}}),
                             m({{0, 1, 0, 0}, {1, 0, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}),
                             m({{3, 2, 0, 1}, {2, 3, 0, 1}, {0, 0, 1, 0}, {-12, -12, 0, -5}})},
                            {"A", "B", "C", "D"}),
               "O(Q), Q of signature (3,1)", ThinStatus::Thin, std::nullopt,
               "limit set is a fractal crystallographic circle packing", ""});
  c.push_back({"ex11", "open case in SL3(Z)",
               GeneratorSet("ex11",
                            {m({{1, 1, 2}, {0, 1, 1}, {0, -3, -2}}), m({{-2, 0, -1}, {-5, 1, -1}, {3, 0, 1}})},
                            {"A", "B"}),
               "SL3", ThinStatus::Open, std::nullopt, "thinness is an open problem", ""});
  c.push_back({"gl2-demo", "GL2(Z) via S, T and a reflection",
               GeneratorSet("gl2-demo", {m({{0, 1}, {-1, 0}}), m({{1, 1}, {0, 1}}), m({{1, 0}, {0, -1}})},
                            {"S", "T", "R"}),
               "GL2", ThinStatus::NotThin, 1, "S, T generate SL2(Z) and R has determinant -1", ""});
  return c;
}

}  // namespace

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = build_catalog();
  return entries;
}

const CatalogEntry& catalog_entry(std::string_view id) {
  for (const auto& e : catalog())
    if (e.id == id) return e;
  throw std::out_of_range("unknown catalog id '" + std::string(id) + "'");
}

const CatalogEntry* find_catalog_entry(const GeneratorSet& gens) {
  for (const auto& e : catalog()) {
    if (e.generators.generators() == gens.generators()) return &e;
  }
  return nullptr;
}

GeneratorSet resolve_generators(const std::string& spec) {
  for (const auto& e : catalog())
    if (e.id == spec) return e.generators;
  std::ifstream in(spec);
  if (!in) throw std::invalid_argument("'" + spec + "' is neither a catalog id nor a readable file");
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw std::invalid_argument(spec + ": " + e.what());
  }
  return generator_set_from_json(j);
}

std::string to_string(ThinStatus s) {
  switch (s) {
    case ThinStatus::Thin: return "thin";
    case ThinStatus::NotThin: return "not thin";
    case ThinStatus::Open: return "open";
  }
  return "?";
}

}  // namespace thinlab
