#include "thinlab/closure/closure.hpp"

#include <algorithm>

namespace thinlab {

std::string to_string(ClosureClass c) {
  switch (c) {
    case ClosureClass::Full: return "Full";
    case ClosureClass::Unipotent: return "Unipotent";
    case ClosureClass::Torus: return "Torus";
    case ClosureClass::ReducibleBlock: return "ReducibleBlock";
    case ClosureClass::Symplectic: return "Symplectic";
    case ClosureClass::OrthogonalLike: return "OrthogonalLike";
    case ClosureClass::Undetermined: return "Undetermined";
  }
  return "?";
}

namespace {

// Incremental row echelon basis of a subspace of Q^d.
class SpanTracker {
 public:
  explicit SpanTracker(std::size_t d) : d_(d) {}

  // Adds v if it is independent of the current span; returns whether it was added.
  bool add(RationalVector v) {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const Rational& coef = v[pivots_[r]];
      if (coef == 0) continue;
      const Rational f = coef;
      for (std::size_t j = 0; j < d_; ++j) v[j] -= f * rows_[r][j];
    }
    std::size_t piv = 0;
    while (piv < d_ && v[piv] == 0) ++piv;
    if (piv == d_) return false;
    const Rational inv = 1 / v[piv];
    for (auto& x : v) x *= inv;
    // Keep rows fully reduced at their pivots.
    for (auto& row : rows_) {
      if (row[piv] == 0) continue;
      const Rational f = row[piv];
      for (std::size_t j = 0; j < d_; ++j) row[j] -= f * v[j];
    }
    rows_.push_back(std::move(v));
    pivots_.push_back(piv);
    return true;
  }

  std::size_t dimension() const { return rows_.size(); }

 private:
  std::size_t d_;
  std::vector<RationalVector> rows_;
  std::vector<std::size_t> pivots_;
};

RationalVector flatten(const IntMatrix& m) {
  RationalVector v;
  for (const auto& x : m.entries()) v.emplace_back(x);
  return v;
}

bool is_scalar(const IntMatrix& m) {
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t j = 0; j < m.dim(); ++j)
      if (i != j ? m(i, j) != 0 : m(i, i) != m(0, 0)) return false;
  return true;
}

// Rational eigenvectors of a 2x2 integer matrix (primitive, one per rational eigenvalue).
std::vector<std::vector<Integer>> rational_eigenvectors_2x2(const IntMatrix& g) {
  std::vector<std::vector<Integer>> out;
  const Integer t = trace(g);
  const Integer d = det(g);
  const Integer disc = t * t - 4 * d;
  if (disc < 0 || !mpz_perfect_square_p(disc.get_mpz_t())) return out;
  const Integer root = sqrt(disc);
  for (const Integer& s : {root, Integer(-root)}) {
    Rational lambda(t + s, 2);
    lambda.canonicalize();
    RationalMatrix shifted(g);
    shifted(0, 0) -= lambda;
    shifted(1, 1) -= lambda;
    for (const auto& v : kernel(shifted)) {
      auto prim = primitive_integer(v);
      if (std::find(out.begin(), out.end(), prim) == out.end()) out.push_back(std::move(prim));
    }
  }
  return out;
}

bool is_eigenvector(const IntMatrix& g, const std::vector<Integer>& v) {
  // g v parallel to v in dimension 2: cross product vanishes.
  const Integer x = g(0, 0) * v[0] + g(0, 1) * v[1];
  const Integer y = g(1, 0) * v[0] + g(1, 1) * v[1];
  return x * v[1] - y * v[0] == 0;
}

void collect_polynomial_evidence(const GeneratorSet& gens, ClosureEvidence& ev) {
  ev.char_polys.clear();
  ev.discriminants.clear();
  for (const auto& g : gens.generators()) {
    ev.char_polys.push_back(char_poly(g));
    if (g.dim() == 2) {
      const Integer t = trace(g);
      ev.discriminants.push_back(t * t - 4 * det(g));
    }
  }
  ev.commutative = is_commutative(gens);
  ev.unipotent = classify_unipotent(gens);
}

void try_density(const GeneratorSet& gens, const ClosureOptions& opts, ClosureEvidence& ev) {
  if (!gens.all_special()) {
    ev.notes.push_back("density test skipped: a generator has determinant != 1");
    return;
  }
  for (std::uint64_t p : opts.density_primes) {
    if (p < 5 || !is_prime(p)) continue;
    if (sl_order(gens.dim(), p) > Integer(static_cast<unsigned long>(opts.element_cap))) continue;
    ev.density_primes_tried.push_back(p);
    if (auto cert = density_certificate(gens, p, opts.element_cap)) {
      ev.density = cert;
      return;
    }
  }
}

void collect_form_evidence(const GeneratorSet& gens, const ClosureOptions& opts, ClosureEvidence& ev) {
  ev.symmetric_forms = invariant_forms(gens, Symmetry::Symmetric);
  ev.antisymmetric_forms = invariant_forms(gens, Symmetry::Antisymmetric);
  ev.spanning_word_length = opts.word_length;
  ev.spanning_dimension = spanning_dimension(gens, opts.word_length);
}

}  // namespace

std::size_t spanning_dimension(const GeneratorSet& gens, std::size_t max_word_len) {
  if (max_word_len < 1) throw std::invalid_argument("word length must be at least 1");
  const std::size_t n = gens.dim();
  SpanTracker span(n * n);
  std::vector<IntMatrix> basis{IntMatrix::identity(n)};
  span.add(flatten(basis.front()));
  std::size_t level_start = 0;
  for (std::size_t len = 1; len <= max_word_len; ++len) {
    const std::size_t level_end = basis.size();
    // Only the vectors added at the previous level can contribute anything new.
    for (std::size_t i = level_start; i < level_end; ++i) {
      for (const Letter& s : gens.symbols()) {
        IntMatrix prod = basis[i] * gens.letter(s);
        if (span.add(flatten(prod))) basis.push_back(std::move(prod));
      }
    }
    if (basis.size() == level_end) break;  // stable from here on
    level_start = level_end;
  }
  return span.dimension();
}

bool is_unipotent(const IntMatrix& m) {
  const auto cp = char_poly(m);
  const std::size_t n = m.dim();
  // (x - 1)^n has coefficient C(n, k) (-1)^(n-k) on x^k.
  Integer binom = 1;
  for (std::size_t k = 0; k <= n; ++k) {
    if (k > 0) binom = binom * static_cast<unsigned long>(n - k + 1) / static_cast<unsigned long>(k);
    const Integer expected = ((n - k) % 2) ? Integer(-binom) : binom;
    if (cp[k] != expected) return false;
  }
  return true;
}

bool classify_unipotent(const GeneratorSet& gens) {
  for (const auto& w : enumerate_words(gens, 3))
    if (!is_unipotent(eval_word(gens, w))) return false;
  return true;
}

bool is_commutative(const GeneratorSet& gens) {
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (!(gens.generator(i) * gens.generator(j) == gens.generator(j) * gens.generator(i))) return false;
  std::vector<IntMatrix> words;
  for (const auto& w : enumerate_words(gens, 2)) words.push_back(eval_word(gens, w));
  for (std::size_t i = 0; i < words.size(); ++i)
    for (std::size_t j = i + 1; j < words.size(); ++j)
      if (!(words[i] * words[j] == words[j] * words[i])) return false;
  return true;
}

std::optional<DensityCertificate> density_certificate(const GeneratorSet& gens, std::uint64_t p,
                                                      std::size_t cap) {
  if (p < 5) throw std::invalid_argument("the one-prime density criterion needs p >= 5");
  if (!is_prime(p)) throw std::invalid_argument("density certificate needs a prime");
  if (!gens.all_special()) throw std::invalid_argument("density certificate needs determinant-1 generators");
  const ImageVerdict v = is_surjective(gens, p, cap);
  if (v.surjective != Surjectivity::Yes) return std::nullopt;
  return DensityCertificate{p, v.image_order};
}

ClosureCertificate classify_sl2(const GeneratorSet& gens, const ClosureOptions& opts) {
  if (gens.dim() != 2) throw DimensionError("classify_sl2 needs 2x2 generators");
  ClosureCertificate cert;
  cert.dimension = 2;
  ClosureEvidence& ev = cert.evidence;
  collect_polynomial_evidence(gens, ev);

  std::vector<const IntMatrix*> nonscalar;
  for (const auto& g : gens.generators())
    if (!is_scalar(g)) nonscalar.push_back(&g);

  if (*ev.commutative && *ev.unipotent) {
    cert.closure = ClosureClass::Unipotent;
    return cert;
  }

  if (*ev.commutative && !nonscalar.empty()) {
    // Torus: every non-scalar generator has an irreducible characteristic polynomial and
    // all of them split over the same quadratic field.
    std::optional<Integer> kernel_disc;
    bool torus = true;
    for (std::size_t i = 0; i < gens.size() && torus; ++i) {
      if (is_scalar(gens.generator(i))) continue;
      const Integer& d = ev.discriminants[i];
      if (d >= 0 && mpz_perfect_square_p(d.get_mpz_t())) {
        torus = false;
        break;
      }
      const Integer k = squarefree_part(d);
      if (kernel_disc && *kernel_disc != k) torus = false;
      kernel_disc = k;
    }
    if (torus && kernel_disc) {
      cert.closure = ClosureClass::Torus;
      ev.field_discriminant = kernel_disc;
      return cert;
    }
  }

  if (!nonscalar.empty()) {
    for (const auto& v : rational_eigenvectors_2x2(*nonscalar.front())) {
      const bool shared = std::all_of(nonscalar.begin(), nonscalar.end(),
                                      [&](const IntMatrix* g) { return is_eigenvector(*g, v); });
      if (shared) {
        cert.closure = ClosureClass::ReducibleBlock;
        ev.common_eigenvector = v;
        return cert;
      }
    }
  }

  try_density(gens, opts, ev);
  cert.closure = ev.density ? ClosureClass::Full : ClosureClass::Undetermined;
  if (!ev.density) ev.notes.push_back("no density prime found among those tried");
  return cert;
}

ClosureCertificate closure_certificate(const GeneratorSet& gens, const ClosureOptions& opts) {
  if (gens.dim() == 2) {
    ClosureCertificate cert = classify_sl2(gens, opts);
    collect_form_evidence(gens, opts, cert.evidence);
    return cert;
  }
  ClosureCertificate cert;
  cert.dimension = gens.dim();
  ClosureEvidence& ev = cert.evidence;
  collect_polynomial_evidence(gens, ev);
  collect_form_evidence(gens, opts, ev);
  const std::size_t full_span = gens.dim() * gens.dim();

  if (ev.antisymmetric_forms->dimension() > 0) {
    if (auto q = nondegenerate_member(*ev.antisymmetric_forms)) {
      cert.closure = ClosureClass::Symplectic;
      ev.form = *q;
      return cert;
    }
  }
  if (ev.symmetric_forms->dimension() > 0) {
    if (auto q = nondegenerate_member(*ev.symmetric_forms)) {
      cert.closure = ClosureClass::OrthogonalLike;
      ev.form = *q;
      ev.signature = form_signature(*q);
      return cert;
    }
  }
  if (*ev.commutative && *ev.unipotent) {
    cert.closure = ClosureClass::Unipotent;
    return cert;
  }
  if (*ev.spanning_dimension < full_span) {
    cert.closure = ClosureClass::ReducibleBlock;
    ev.notes.push_back("words span a proper subalgebra, so the group is not absolutely irreducible");
    return cert;
  }
  try_density(gens, opts, ev);
  if (ev.density) {
    cert.closure = ClosureClass::Full;
  } else {
    cert.closure = ClosureClass::Undetermined;
    ev.notes.push_back("absolutely irreducible with no invariant bilinear form, but no density prime certified");
  }
  return cert;
}

}  // namespace thinlab
