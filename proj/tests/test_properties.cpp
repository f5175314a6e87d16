// Randomized invariants, 500 cases each unless a suite is exhaustive over a small family.
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "thinlab/cli/catalog.hpp"
#include "thinlab/closure/forms.hpp"
#include "thinlab/packing/packing.hpp"
#include "thinlab/probes/coset_enum.hpp"
#include "thinlab/probes/st_rewrite.hpp"
#include "thinlab/probes/verdict.hpp"
#include "thinlab/spectral/cayley_graph.hpp"
#include "thinlab/spectral/spectrum.hpp"

using namespace thinlab;

namespace {

constexpr int kCases = 500;

std::mt19937_64& rng() {
  static std::mt19937_64 r(20240601);
  return r;
}

long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng()); }

Word random_word(const GeneratorSet& g, std::size_t max_len) {
  std::vector<Letter> letters;
  const std::size_t len = static_cast<std::size_t>(uniform(0, static_cast<long>(max_len)));
  for (std::size_t i = 0; i < len; ++i)
    letters.push_back({static_cast<std::uint16_t>(uniform(0, static_cast<long>(g.size()) - 1)), uniform(0, 1) == 1});
  return Word(letters);
}

IntMatrix random_matrix(std::size_t n, long bound) {
  IntMatrix m(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = uniform(-bound, bound);
  return m;
}

// Random element of SL2(Z) with left column entries up to `bound`.
IntMatrix random_sl2(long bound) {
  for (;;) {
    const long a = uniform(-bound, bound), c = uniform(-bound, bound);
    if (std::gcd(a, c) != 1) continue;
    Integer g, s, t;
    mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), Integer(a).get_mpz_t(), Integer(c).get_mpz_t());
    // a s + c t = 1, so [[a, -t], [c, s]] has determinant 1; shift by a random multiple of column 1.
    const long k = uniform(-bound, bound);
    IntMatrix m = IntMatrix::from_rows({{a, 0}, {c, 0}});
    m(0, 1) = -t + k * a;
    m(1, 1) = s + k * c;
    return m;
  }
}

IntMatrix random_unimodular(std::size_t n) {
  IntMatrix m = IntMatrix::identity(n);
  for (int step = 0; step < 6; ++step) {
    IntMatrix e = IntMatrix::identity(n);
    const std::size_t i = static_cast<std::size_t>(uniform(0, static_cast<long>(n) - 1));
    std::size_t j = static_cast<std::size_t>(uniform(0, static_cast<long>(n) - 2));
    if (j >= i) ++j;
    e(i, j) = uniform(-3, 3);
    m = m * e;
  }
  return m;
}

// Random transitive action of <s, t | s^2, t^3> on d points, or none when not transitive.
struct PermAction {
  std::vector<std::uint32_t> s, t;
};

std::optional<PermAction> random_action(std::size_t d) {
  std::vector<std::uint32_t> pts(d);
  std::iota(pts.begin(), pts.end(), 0u);
  PermAction a{std::vector<std::uint32_t>(d), std::vector<std::uint32_t>(d)};
  std::shuffle(pts.begin(), pts.end(), rng());
  const std::size_t twos = static_cast<std::size_t>(uniform(0, static_cast<long>(d / 2)));
  std::iota(a.s.begin(), a.s.end(), 0u);
  for (std::size_t i = 0; i < twos; ++i) std::swap(a.s[pts[2 * i]], a.s[pts[2 * i + 1]]);
  std::shuffle(pts.begin(), pts.end(), rng());
  const std::size_t threes = static_cast<std::size_t>(uniform(0, static_cast<long>(d / 3)));
  std::iota(a.t.begin(), a.t.end(), 0u);
  for (std::size_t i = 0; i < threes; ++i) {
    a.t[pts[3 * i]] = pts[3 * i + 1];
    a.t[pts[3 * i + 1]] = pts[3 * i + 2];
    a.t[pts[3 * i + 2]] = pts[3 * i];
  }
  std::vector<bool> seen(d);
  std::vector<std::uint32_t> queue{0};
  seen[0] = true;
  for (std::size_t q = 0; q < queue.size(); ++q)
    for (auto nxt : {a.s[queue[q]], a.t[queue[q]]})
      if (!seen[nxt]) {
        seen[nxt] = true;
        queue.push_back(nxt);
      }
  if (queue.size() != d) return std::nullopt;
  return a;
}

// Schreier generators of the stabilizer of point 0.
std::vector<PslWord> stabilizer_words(const PermAction& a) {
  const std::size_t d = a.s.size();
  std::vector<std::optional<PslWord>> rep(d);
  rep[0] = PslWord{};
  std::vector<std::uint32_t> queue{0};
  auto image = [&](std::uint32_t p, PslLetter l) {
    if (l == PslLetter::s) return a.s[p];
    if (l == PslLetter::t) return a.t[p];
    return a.t[a.t[p]];
  };
  for (std::size_t q = 0; q < queue.size(); ++q)
    for (PslLetter l : {PslLetter::s, PslLetter::t, PslLetter::t_inv}) {
      const auto nxt = image(queue[q], l);
      if (!rep[nxt]) {
        rep[nxt] = *rep[queue[q]];
        rep[nxt]->push_back(l);
        queue.push_back(nxt);
      }
    }
  auto inverse = [](const PslWord& w) {
    PslWord out;
    for (auto it = w.rbegin(); it != w.rend(); ++it)
      out.push_back(*it == PslLetter::s ? PslLetter::s : *it == PslLetter::t ? PslLetter::t_inv : PslLetter::t);
    return out;
  };
  std::vector<PslWord> gens;
  for (std::uint32_t p = 0; p < d; ++p)
    for (PslLetter l : {PslLetter::s, PslLetter::t}) {
      PslWord w = *rep[p];
      w.push_back(l);
      const PslWord back = inverse(*rep[image(p, l)]);
      w.insert(w.end(), back.begin(), back.end());
      gens.push_back(w);
    }
  return gens;
}

}  // namespace

TEST_CASE("eval_word is a homomorphism on concatenation") {
  for (const char* id : {"ex1", "ex8", "ex9", "ex10"}) {
    const GeneratorSet& g = catalog_entry(id).generators;
    for (int i = 0; i < kCases; ++i) {
      const Word u = random_word(g, 12), v = random_word(g, 12);
      REQUIRE(eval_word(g, u * v) == eval_word(g, u) * eval_word(g, v));
    }
  }
}

TEST_CASE("reduce_mod is a homomorphism; det is multiplicative") {
  for (int i = 0; i < kCases; ++i) {
    const std::size_t n = static_cast<std::size_t>(uniform(1, 4));
    const IntMatrix a = random_matrix(n, 1000), b = random_matrix(n, 1000);
    const std::uint64_t m = static_cast<std::uint64_t>(uniform(2, 100000));
    REQUIRE(reduce_mod(a * b, m) == reduce_mod(a, m) * reduce_mod(b, m));
    REQUIRE(det(a * b) == det(a) * det(b));
    const IntMatrix u = random_unimodular(n + 1);
    const Integer d = det(u);
    REQUIRE(abs(d) == 1);
    REQUIRE(det(mat_inv(u)) == d);
    REQUIRE((u * mat_inv(u)).is_identity());
  }
}

TEST_CASE("Fibonacci law for powers of the torus generator") {
  const IntMatrix a = catalog_entry("ex4").generators.generator(0);
  // A^n = [[f_{2n+1}, f_{2n}], [f_{2n}, f_{2n-1}]] with f_0 = 0, f_1 = 1.
  std::vector<Integer> f{0, 1};
  IntMatrix p = IntMatrix::identity(2);
  for (int n = 1; n <= 30; ++n) {
    p = p * a;
    CHECK(p(0, 1) == p(1, 0));
    CHECK(p(1, 1) == f[2 * n - 1]);
    CHECK(p(0, 1) == f[2 * n - 1] + f[2 * n - 2]);
    CHECK(p(0, 0) == p(0, 1) + p(1, 1));
    f.push_back(p(0, 1));  // f_{2n}
    f.push_back(p(0, 0));  // f_{2n+1}
  }
  CHECK(mat_pow(a, 30)(0, 0) == Integer("2504730781961"));
  CHECK(mat_pow(a, 30)(0, 1) == Integer("1548008755920"));
}

TEST_CASE("complete images are closed, satisfy Lagrange, and carry sound witnesses") {
  struct Case {
    const char* id;
    std::uint64_t p;
  };
  for (const Case c : {Case{"ex1", 5}, Case{"ex2", 5}, Case{"ex3", 7}, Case{"ex5", 7}, Case{"ex8", 3},
                       Case{"ex9", 3}, Case{"ex4", 11}, Case{"ex7", 5}}) {
    CAPTURE(c.id);
    const GeneratorSet& g = catalog_entry(c.id).generators;
    const GroupImage img = GroupImage::enumerate(g, c.p);
    REQUIRE(img.complete());
    for (std::size_t i = 0; i < img.order(); ++i)
      for (const auto& s : img.symbol_matrices()) REQUIRE(img.index_of(img.element(i) * s));
    Integer order(static_cast<unsigned long>(img.order()));
    CHECK(Integer(sl_order(g.dim(), c.p) % order) == 0);
    for (int k = 0; k < 100; ++k) {
      const std::size_t i = static_cast<std::size_t>(uniform(0, static_cast<long>(img.order()) - 1));
      REQUIRE(reduce_mod(eval_word(g, img.witness(i)), c.p) == img.element(i));
    }
  }
}

TEST_CASE("images mod m1 m2 project onto images mod m1 and m2") {
  for (const char* id : {"ex1", "ex2", "ex5"}) {
    const GeneratorSet& g = catalog_entry(id).generators;
    const GroupImage big = GroupImage::enumerate(g, 15);
    for (std::uint64_t m : {3, 5}) {
      const GroupImage small = GroupImage::enumerate(g, m);
      std::set<std::vector<Residue>> projected;
      for (std::size_t i = 0; i < big.order(); ++i) {
        const ModMatrix x = big.element(i);
        std::vector<Residue> r;
        for (Residue v : x.entries()) r.push_back(static_cast<Residue>(v % m));
        projected.insert(r);
      }
      CHECK(projected.size() == small.order());
    }
  }
}

TEST_CASE("random regular multigraphs: handshake, bounds, components, dense vs iterative") {
  int connected = 0;
  for (int i = 0; i < kCases; ++i) {
    const std::size_t v = static_cast<std::size_t>(uniform(3, 60));
    // Union of random perfect matchings in both directions: 2 permutations and their inverses.
    std::vector<std::uint32_t> nb(v * 4);
    for (int r = 0; r < 2; ++r) {
      std::vector<std::uint32_t> perm(v);
      std::iota(perm.begin(), perm.end(), 0u);
      std::shuffle(perm.begin(), perm.end(), rng());
      for (std::uint32_t x = 0; x < v; ++x) {
        nb[x * 4 + 2 * r] = perm[x];
        nb[perm[x] * 4 + 2 * r + 1] = x;
      }
    }
    const CayleyGraph g = CayleyGraph::from_neighbors(v, 4, nb);
    std::size_t degree_sum = 0;
    for (std::size_t x = 0; x < v; ++x) degree_sum += g.neighbors(x).size();
    REQUIRE(degree_sum == 4 * v);
    const SpectralReport d = laplacian_spectrum_dense(g);
    std::size_t zeros = 0;
    for (double l : d.eigenvalues) {
      REQUIRE(l >= -1e-9);
      REQUIRE(l <= 2 + 1e-9);
      zeros += std::abs(l) < 1e-8;
    }
    REQUIRE(zeros == g.component_count());
    if (g.component_count() == 1) {
      ++connected;
      REQUIRE(lambda1_iterative(g).lambda1 == doctest::Approx(d.lambda1).epsilon(1e-6));
    }
  }
  CHECK(connected > kCases / 2);
}

TEST_CASE("dense and iterative agree on every Cayley graph with V <= 2000") {
  for (const char* id : {"ex1", "ex2", "ex5"}) {
    for (std::uint64_t p : {3, 5, 7, 11, 13}) {
      auto img = std::make_shared<const GroupImage>(GroupImage::enumerate(catalog_entry(id).generators, p));
      for (bool psl : {false, true}) {
        const CayleyGraph g = CayleyGraph::build(img, psl);
        if (g.vertices() > 2000 || g.component_count() != 1) continue;
        CAPTURE(id);
        CAPTURE(p);
        CAPTURE(psl);
        const SpectralReport d = laplacian_spectrum_dense(g);
        CHECK(std::abs(d.eigenvalues.front()) < 1e-9);
        CHECK(lambda1_iterative(g).lambda1 == doctest::Approx(d.lambda1).epsilon(1e-6));
      }
    }
  }
}

TEST_CASE("form signature is a congruence invariant") {
  for (int i = 0; i < kCases; ++i) {
    const std::size_t n = static_cast<std::size_t>(uniform(2, 5));
    RationalMatrix q(n, n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a; b < n; ++b) {
        Rational x(uniform(-9, 9), uniform(1, 4));
        x.canonicalize();
        q(a, b) = q(b, a) = x;
      }
    const RationalMatrix s(random_unimodular(n));
    REQUIRE(form_signature(s.transpose() * q * s) == form_signature(q));
  }
}

TEST_CASE("invariant form bases are exactly invariant") {
  for (const auto& e : catalog()) {
    for (Symmetry sym : {Symmetry::Symmetric, Symmetry::Antisymmetric}) {
      for (const auto& q : invariant_forms(e.generators, sym).basis)
        for (const auto& g : e.generators.generators()) {
          const RationalMatrix rg(g);
          CHECK((rg.transpose() * q * rg - q).is_zero());
        }
    }
  }
}

TEST_CASE("rewrite_in_ST round trip") {
  for (int i = 0; i < kCases; ++i) {
    const IntMatrix m = random_sl2(1000000);
    REQUIRE(det(m) == 1);
    const Word w = rewrite_in_ST(m);
    REQUIRE(eval_word(standard_st(), w) == m);
  }
}

TEST_CASE("coset enumeration recovers the degree of random permutation actions") {
  int done = 0;
  while (done < kCases) {
    const std::size_t d = static_cast<std::size_t>(uniform(1, 40));
    const auto action = random_action(d);
    if (!action) continue;
    ++done;
    const CosetTable t = coset_enumerate(stabilizer_words(*action), 10000);
    REQUIRE(t.status == CosetStatus::Closed);
    REQUIRE(t.index == d);
    const TableCheck check = verify_coset_table(t);
    REQUIRE_MESSAGE(check.ok, check.message);
  }
}

TEST_CASE("verdict soundness on the catalog") {
  for (const auto& e : catalog()) {
    if (e.generators.dim() != 2) continue;
    CAPTURE(e.id);
    const Verdict v = thinness_verdict(e.generators);
    if (v.psl_index) {
      REQUIRE(v.coset);
      CHECK(v.coset->status == CosetStatus::Closed);
      CHECK(v.coset->index == *v.psl_index);
      CHECK(verify_coset_table(*v.coset).ok);
    }
    if (v.classification == VerdictClass::ProvenNotThin && !v.psl_index) CHECK(v.index.has_value());
  }
  // Index doubling.
  CHECK(*thinness_verdict(catalog_entry("ex1").generators).index == 1);
  CHECK(*thinness_verdict(catalog_entry("ex2").generators).index == 12);
}

TEST_CASE("reflection words preserve the invariant form and circle norms stay -1") {
  const GeneratorSet& g = catalog_entry("ex10").generators;
  const RationalMatrix q = signature_31_form(g);
  const InversiveChart chart = make_chart(q, {});
  for (int i = 0; i < kCases; ++i) {
    const RationalMatrix m(eval_word(g, random_word(g, 10)));
    REQUIRE(m.transpose() * q * m == q);
    RationalVector v(4);
    for (auto& x : v) x = uniform(-20, 20);
    if (bilinear(q, v, v) <= 0) continue;
    const InversiveCircle c = to_inversive(v, chart);
    REQUIRE(c.norm() == -1);
    RationalVector scaled = v;
    const long t = uniform(1, 9);
    for (auto& x : scaled) x *= t;
    const InversiveCircle s = to_inversive(scaled, chart);
    REQUIRE(s.b == c.b);
    REQUIRE(s.bx1 == c.bx1);
  }
}
