#include "thinlab/probes/verdict.hpp"

#include <numeric>

#include "thinlab/cli/catalog.hpp"

namespace thinlab {

namespace {

constexpr std::size_t kWordBudget = 200000;

// For commuting unipotent 2x2 generators I + k_i N0 with N0 primitive, the integer points of
// the closure are I + Z N0 and the index is gcd(k_i).
Integer unipotent_index_2x2(const GeneratorSet& gens) {
  std::optional<IntMatrix> n0;
  Integer g = 0;
  for (const auto& m : gens.generators()) {
    const IntMatrix nil = mat_sub(m, IntMatrix::identity(2));
    std::size_t pos = 4;
    for (std::size_t k = 0; k < 4; ++k)
      if (nil.entries()[k] != 0) {
        pos = k;
        break;
      }
    if (pos == 4) continue;
    if (!n0) {
      Integer content = 0;
      for (const auto& x : nil.entries()) content = gcd(content, x);
      IntMatrix prim(2);
      for (std::size_t k = 0; k < 4; ++k) prim(k / 2, k % 2) = nil.entries()[k] / content;
      n0 = prim;
    }
    const Integer& ref = n0->entries()[pos];
    if (ref == 0) throw std::logic_error("commuting unipotent generators are not proportional");
    g = gcd(g, Integer(nil.entries()[pos] / ref));
  }
  return g == 0 ? Integer(1) : g;
}

void route_catalog(Verdict& v, const CatalogEntry* entry) {
  if (!entry) return;
  v.catalog_id = entry->id;
  if (entry->thin == ThinStatus::Thin) {
    v.classification = VerdictClass::ProvenThinByCatalog;
    v.reason = "catalog assertion: " + entry->citation;
    v.citation = entry->citation;
    v.anchor = entry->anchor;
  } else if (entry->thin == ThinStatus::NotThin) {
    v.classification = VerdictClass::ProvenNotThin;
    if (entry->index) v.index = Integer(*entry->index);
    v.reason = "catalog identity: " + entry->citation;
    v.citation = entry->citation;
    v.anchor = entry->anchor;
  }
}

void probe_sl2(const GeneratorSet& gens, const ProbeConfig& cfg, const CatalogEntry* entry, Verdict& v) {
  CosetTable table = coset_enumerate(gens, cfg.coset_cap);
  if (table.status == CosetStatus::Closed) {
    v.coset_check = verify_coset_table(table);
    if (!v.coset_check->ok) throw std::logic_error("coset table failed verification: " + v.coset_check->message);
    v.psl_index = table.index;
    v.classification = VerdictClass::ProvenNotThin;
    v.minus_identity = minus_I_obstruction(gens, cfg.obstruction_moduli, cfg.element_cap);
    if (v.minus_identity->excluded) {
      v.index = Integer(static_cast<unsigned long>(table.index)) * 2;
      v.reason = "finite index in SL2(Z): PSL2 index " + std::to_string(table.index) +
                 ", doubled because -I is not in the group";
    } else if ((v.minus_identity_word = find_minus_identity(gens))) {
      v.index = Integer(static_cast<unsigned long>(table.index));
      v.reason = "finite index in SL2(Z): PSL2 index " + std::to_string(table.index) + ", -I is in the group";
    } else {
      v.reason = "finite index in SL2(Z): PSL2 index " + std::to_string(table.index) +
                 "; SL2 index is this or twice this (-I membership undecided)";
    }
    if (entry) v.catalog_id = entry->id;
    v.coset = std::move(table);
    return;
  }
  const std::size_t live = table.live_at_stop;
  v.coset = std::move(table);
  if (v.closure.evidence.density) {
    v.classification = VerdictClass::ThinEvidence;
    v.reason = "Zariski dense (surjective mod " + std::to_string(v.closure.evidence.density->prime) +
               ") and coset enumeration did not close within " + std::to_string(cfg.coset_cap) +
               " cosets (" + std::to_string(live) + " live at stop)";
    if (entry && entry->thin == ThinStatus::Thin) route_catalog(v, entry);
  } else {
    v.reason = "coset enumeration did not close and no density certificate";
  }
}

}  // namespace

ObstructionResult minus_I_obstruction(const GeneratorSet& gens, const std::vector<std::uint64_t>& moduli,
                                      std::size_t cap) {
  if (gens.dim() != 2) throw DimensionError("the -I obstruction is implemented for n = 2");
  ObstructionResult r;
  for (std::uint64_t m : moduli) {
    const ModMatrix minus_i = ModMatrix::from_rows(m, {{-1, 0}, {0, -1}});
    const MembershipResult res = contains_mod(gens, m, minus_i, cap);
    r.checks.push_back({m, res.status});
    if (res.status == Membership::No && !r.excluded) {
      r.excluded = true;
      r.modulus = m;
      r.reason = "-I mod " + std::to_string(m) + " is not in the image";
    }
  }
  if (!r.excluded) r.reason = "inconclusive: -I lies in every image tested";
  return r;
}

std::optional<Word> find_minus_identity(const GeneratorSet& gens, std::size_t max_len) {
  const IntMatrix target = -IntMatrix::identity(gens.dim());
  struct Node {
    std::vector<Letter> letters;
    IntMatrix value;
  };
  std::vector<Node> layer{{{}, IntMatrix::identity(gens.dim())}};
  std::size_t work = 0;
  const auto symbols = gens.symbols();
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::vector<Node> next;
    for (const auto& node : layer) {
      for (const Letter& s : symbols) {
        if (!node.letters.empty() && node.letters.back() == s.inverted()) continue;
        if (++work > kWordBudget) return std::nullopt;
        Node child{node.letters, node.value * gens.letter(s)};
        child.letters.push_back(s);
        if (child.value == target) return Word(child.letters);
        next.push_back(std::move(child));
      }
    }
    layer = std::move(next);
  }
  return std::nullopt;
}

Verdict thinness_verdict(const GeneratorSet& gens, const ProbeConfig& cfg) {
  Verdict v;
  v.closure = closure_certificate(gens, cfg.closure);
  const CatalogEntry* entry = cfg.use_catalog ? find_catalog_entry(gens) : nullptr;
  const std::size_t n = gens.dim();

  switch (v.closure.closure) {
    case ClosureClass::Unipotent:
      v.classification = VerdictClass::ProvenNotThin;
      v.reason = "commuting unipotent group, a lattice in its unipotent closure";
      if (n == 2) v.index = unipotent_index_2x2(gens);
      if (entry) v.catalog_id = entry->id;
      return v;
    case ClosureClass::Torus:
      v.classification = VerdictClass::ProvenNotThin;
      v.reason = "subgroup of a rank-one torus whose integer points are virtually cyclic";
      if (entry) {
        v.catalog_id = entry->id;
        if (entry->index) v.index = Integer(*entry->index);
      }
      return v;
    case ClosureClass::ReducibleBlock:
      if (n == 2) {
        v.classification = VerdictClass::ProvenNotThin;
        v.reason = "common rational eigenvector: the group is virtually unipotent, so of finite index in its closure";
        if (entry) v.catalog_id = entry->id;
        return v;
      }
      break;
    case ClosureClass::Full:
    case ClosureClass::Undetermined:
      if (n == 2 && gens.all_special()) {
        probe_sl2(gens, cfg, entry, v);
        return v;
      }
      break;
    case ClosureClass::Symplectic:
    case ClosureClass::OrthogonalLike:
      break;
  }
  v.reason = "no procedure decides this case";
  route_catalog(v, entry);
  return v;
}

std::string to_string(VerdictClass v) {
  switch (v) {
    case VerdictClass::ProvenNotThin: return "ProvenNotThin";
    case VerdictClass::ProvenThinByCatalog: return "ProvenThinByCatalog";
    case VerdictClass::ThinEvidence: return "ThinEvidence";
    case VerdictClass::Unknown: return "Unknown";
  }
  return "?";
}

}  // namespace thinlab
