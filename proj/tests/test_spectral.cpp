#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>

#include "thinlab/cli/catalog.hpp"
#include "thinlab/spectral/cayley_graph.hpp"
#include "thinlab/spectral/spectrum.hpp"

using namespace thinlab;

namespace {

std::shared_ptr<const GroupImage> image_of(const char* id, std::uint64_t p) {
  return std::make_shared<const GroupImage>(GroupImage::enumerate(catalog_entry(id).generators, p));
}

CayleyGraph cycle(std::size_t n) {
  std::vector<std::uint32_t> nb;
  for (std::size_t v = 0; v < n; ++v) {
    nb.push_back(static_cast<std::uint32_t>((v + n - 1) % n));
    nb.push_back(static_cast<std::uint32_t>((v + 1) % n));
  }
  return CayleyGraph::from_neighbors(n, 2, nb);
}

CayleyGraph complete(std::size_t n) {
  std::vector<std::uint32_t> nb;
  for (std::size_t v = 0; v < n; ++v)
    for (std::size_t w = 0; w < n; ++w)
      if (w != v) nb.push_back(static_cast<std::uint32_t>(w));
  return CayleyGraph::from_neighbors(n, n - 1, nb);
}

std::size_t count_near(const std::vector<double>& ev, double x, double eps = 1e-9) {
  std::size_t c = 0;
  for (double e : ev) c += std::abs(e - x) < eps;
  return c;
}

}  // namespace

TEST_CASE("build_cayley") {
  const CayleyGraph g = CayleyGraph::build(image_of("ex5", 3), false);
  CHECK(g.vertices() == 24);
  CHECK(g.degree() == 4);
  CHECK(g.is_symmetric());
  // Simple: four distinct neighbors, none equal to the vertex.
  for (std::size_t v = 0; v < g.vertices(); ++v) {
    auto nb = g.neighbors(v);
    std::set<std::uint32_t> distinct(nb.begin(), nb.end());
    CHECK(distinct.size() == 4);
    CHECK(distinct.count(static_cast<std::uint32_t>(v)) == 0);
  }
  const CayleyGraph h = CayleyGraph::build(image_of("ex5", 3), true);
  CHECK(h.vertices() == 12);
  CHECK(h.degree() == 4);

  const GeneratorSet t("T", {IntMatrix::from_rows({{1, 1}, {0, 1}})});
  const CayleyGraph c = CayleyGraph::build(std::make_shared<const GroupImage>(GroupImage::enumerate(t, 5)), false);
  CHECK(c.vertices() == 5);
  CHECK(c.degree() == 2);

  auto partial = std::make_shared<const GroupImage>(GroupImage::enumerate(catalog_entry("ex5").generators, 7, 10));
  CHECK_THROWS(CayleyGraph::build(partial, false));
}

TEST_CASE("dense spectrum against trace moments of a brute-force adjacency") {
  const GeneratorSet& ex5 = catalog_entry("ex5").generators;
  const GroupImage img = GroupImage::enumerate(ex5, 3);
  const std::size_t n = img.order();
  // Adjacency by direct multiplication, independent of CayleyGraph.
  std::vector<std::vector<double>> a(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i)
    for (const auto& s : img.symbol_matrices()) a[i][*img.index_of(img.element(i) * s)] += 1.0;
  double tr_a2 = 0.0, tr_a3 = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      tr_a2 += a[i][j] * a[j][i];
      for (std::size_t k = 0; k < n; ++k) tr_a3 += a[i][j] * a[j][k] * a[k][i];
    }
  // Moments of the adjacency spectrum mu = 4(1 - lambda).
  const SpectralReport r = laplacian_spectrum_dense(CayleyGraph::build(image_of("ex5", 3), false));
  double m1 = 0, m2 = 0, m3 = 0;
  for (double l : r.eigenvalues) {
    const double mu = 4.0 * (1.0 - l);
    m1 += mu;
    m2 += mu * mu;
    m3 += mu * mu * mu;
  }
  CHECK(m1 == doctest::Approx(0.0).epsilon(1e-9));
  CHECK(m2 == doctest::Approx(tr_a2));
  CHECK(m3 == doctest::Approx(tr_a3));

  CHECK(r.eigenvalues.size() == 24);
  CHECK(count_near(r.eigenvalues, 0.0) == 1);
  CHECK(count_near(r.eigenvalues, 0.5) == 4);
  CHECK(count_near(r.eigenvalues, 0.75) == 2);
  CHECK(count_near(r.eigenvalues, (7 + std::sqrt(17.0)) / 8) >= 1);
  for (double l : r.eigenvalues) {
    CHECK(l >= -1e-12);
    CHECK(l <= 2 + 1e-12);
  }
}

TEST_CASE("closed forms") {
  const SpectralReport k5 = laplacian_spectrum_dense(complete(5));
  CHECK(count_near(k5.eigenvalues, 0.0) == 1);
  CHECK(count_near(k5.eigenvalues, 1.25) == 4);

  const SpectralReport c100 = lambda1_iterative(cycle(100));
  CHECK(c100.lambda1 == doctest::Approx(1 - std::cos(2 * std::numbers::pi / 100)).epsilon(1e-9));
  CHECK(laplacian_spectrum_dense(cycle(100)).lambda1 == doctest::Approx(c100.lambda1).epsilon(1e-9));
}

TEST_CASE("zero multiplicity counts components") {
  // Two disjoint 4-cycles.
  std::vector<std::uint32_t> nb;
  for (std::uint32_t base : {0u, 4u})
    for (std::uint32_t v = 0; v < 4; ++v) {
      nb.push_back(base + (v + 3) % 4);
      nb.push_back(base + (v + 1) % 4);
    }
  const CayleyGraph g = CayleyGraph::from_neighbors(8, 2, nb);
  CHECK(g.component_count() == 2);
  CHECK(count_near(laplacian_spectrum_dense(g).eigenvalues, 0.0) == 2);
}

TEST_CASE("iterative path matches dense and reports failure") {
  const CayleyGraph g = CayleyGraph::build(image_of("ex5", 7), false);
  const SpectralReport d = laplacian_spectrum_dense(g);
  const SpectralReport it = lambda1_iterative(g);
  CHECK(it.lambda1 == doctest::Approx(d.lambda1).epsilon(1e-6));
  CHECK(it.residual <= 1e-8);
  const CayleyGraph small = CayleyGraph::build(image_of("ex5", 3), false);
  CHECK(lambda1_iterative(small).lambda1 == doctest::Approx(laplacian_spectrum_dense(small).lambda1).epsilon(1e-6));

  LanczosOptions tight;
  tight.max_iterations = 3;
  tight.basis_size = 3;
  tight.keep = 1;
  CHECK_THROWS_AS(lambda1_iterative(CayleyGraph::build(image_of("ex5", 13), false), tight), ConvergenceError);
}

TEST_CASE("spectral_scan") {
  const auto rows = spectral_scan(catalog_entry("ex5").generators, {3, 5, 7, 11, 13});
  REQUIRE(rows.size() == 5);
  for (const auto& r : rows) {
    REQUIRE(r.report);
    CHECK(r.report->lambda1 > 0);
  }
  CHECK(rows[0].report->vertices == 24);
  CHECK(spectral_scan(catalog_entry("ex5").generators, {}).empty());

  const std::string csv = scan_to_csv(rows);
  CHECK(csv.rfind("p,V,lambda1,method,seconds\n", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 6);
}
