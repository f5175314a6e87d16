#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "thinlab/core/word.hpp"

namespace thinlab {

enum class ThinStatus { Thin, NotThin, Open };

struct CatalogEntry {
  std::string id;
  std::string summary;
  GeneratorSet generators;
  std::string closure;               // expected Zariski closure, informal
  ThinStatus thin = ThinStatus::Open;
  std::optional<long> index;         // index in the integer points of the closure, when finite and known
  std::string citation;              // where the thinness fact comes from
  std::string anchor;                // short phrase backing the fact, empty when none is needed
};

const std::vector<CatalogEntry>& catalog();
// Throws std::out_of_range for an unknown id.
const CatalogEntry& catalog_entry(std::string_view id);
// Entry whose generator list equals gens exactly (same matrices, same order), if any.
const CatalogEntry* find_catalog_entry(const GeneratorSet& gens);

// A catalog id, or a path to a JSON generator file ({"name", "names", "generators"}).
GeneratorSet resolve_generators(const std::string& spec);

std::string to_string(ThinStatus s);

}  // namespace thinlab
