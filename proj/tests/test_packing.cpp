#include <doctest.h>

#include <fstream>
#include <map>
#include <regex>
#include <set>
#include <sstream>

#include "thinlab/cli/catalog.hpp"
#include "thinlab/cli/report.hpp"
#include "thinlab/closure/forms.hpp"
#include "thinlab/packing/packing.hpp"
#include "thinlab/packing/svg.hpp"

using namespace thinlab;

namespace {

const GeneratorSet& ex10() { return catalog_entry("ex10").generators; }

RationalVector to_rational(const std::vector<Integer>& v) { return {v.begin(), v.end()}; }

std::size_t count(const std::string& text, const std::string& pattern) {
  const std::regex re(pattern);
  return static_cast<std::size_t>(std::distance(std::sregex_iterator(text.begin(), text.end(), re), {}));
}

RationalVector act(const IntMatrix& g, const RationalVector& v) {
  RationalVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) out[i] += Rational(g(i, j)) * v[j];
  return out;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("generators are involutions preserving a (3,1) form") {
  const RationalMatrix q = signature_31_form(ex10());
  const Inertia s = form_signature(q);
  CHECK(s == Inertia{3, 1, 0});
  for (const auto& g : ex10().generators()) {
    CHECK(mat_mul(g, g).is_identity());
    CHECK(preserves(g, q));
  }
}

TEST_CASE("reflection_vector") {
  RationalMatrix diag = RationalMatrix::identity(4);
  diag(3, 3) = -1;
  const RationalVector e3 = reflection_vector(ex10().generator(0), diag);
  CHECK(primitive_integer(e3) == std::vector<Integer>{0, 0, 1, 0});

  const RationalMatrix q = signature_31_form(ex10());
  for (const auto& g : ex10().generators()) {
    const RationalVector v = reflection_vector(g, q);
    // g = I - 2 v v^T q / (v^T q v), reassembled here.
    const Rational n = bilinear(q, v, v);
    const RationalMatrix rq = RationalMatrix(IntMatrix::identity(4));
    RationalMatrix vvq(4, 4);
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) {
        Rational s = 0;
        for (std::size_t k = 0; k < 4; ++k) s += v[k] * q(k, j);
        vvq(i, j) = v[i] * s;
      }
    CHECK(rq - Rational(2) / n * vvq == RationalMatrix(g));
  }
  CHECK_THROWS(reflection_vector(IntMatrix::identity(4), q));
  CHECK_THROWS(reflection_vector(IntMatrix::from_rows({{0, 1, 0, 0}, {-1, 0, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}), q));
}

TEST_CASE("to_inversive") {
  const InversiveChart std_chart = InversiveChart::standard();
  // (b, b_hat, bx1, bx2) = (1, -1, 0, 0): the unit circle at the origin.
  const InversiveCircle unit = to_inversive(RationalVector{1, -1, 0, 0}, std_chart);
  CHECK(unit.b == Surd::from_rational(1));
  CHECK(unit.radius() == doctest::Approx(1.0));
  CHECK(unit.center_x() == doctest::Approx(0.0));
  CHECK(unit.norm() == -1);
  const InversiveCircle twice = to_inversive(RationalVector{2, -2, 0, 0}, std_chart);
  CHECK(twice.b == unit.b);
  CHECK(twice.b_hat == unit.b_hat);
  CHECK_THROWS_AS(to_inversive(RationalVector{1, 1, 0, 0}, std_chart), std::domain_error);
  CHECK_THROWS_AS(to_inversive(RationalVector{0, 0, 0, 0}, std_chart), std::domain_error);
}

TEST_CASE("mirror golden values") {
  PackingOptions opts;
  opts.depth = 0;
  const PackingOrbit o = orbit_circles(ex10(), opts);
  REQUIRE(o.mirrors.size() == 4);
  // First generator: the mirror is a line through the origin with normal along x.
  CHECK(o.mirrors[0].is_line());
  CHECK(o.mirrors[0].bx1 == Surd::from_rational(1));
  CHECK(o.mirrors[0].b_hat.is_zero());
  CHECK(primitive_integer(o.mirror_normals[1]) == std::vector<Integer>{0, 1, -2, 0});
  CHECK(o.mirrors[2].radius() == doctest::Approx(0.4898979485566357));
  for (const auto& m : o.mirrors) CHECK(m.norm() == -1);
}

TEST_CASE("orbit sizes against the reference enumeration") {
  // Independent floating-point enumeration of the same action.
  const std::vector<std::size_t> expected{2, 4, 6, 11, 18, 31, 55};
  const PackingOrbit o = orbit_circles(ex10());
  CHECK(o.size_by_depth == expected);
  CHECK(o.circles.size() == 55);
  CHECK(o.integral);

  PackingOptions mirrors;
  mirrors.depth = 0;
  mirrors.seeds = SeedChoice::Mirrors;
  CHECK(orbit_circles(ex10(), mirrors).circles.size() == 4);
}

TEST_CASE("orbit invariants") {
  const PackingOrbit o = orbit_circles(ex10());
  const RationalMatrix& q = o.form;
  std::set<std::vector<Integer>> keys;
  for (const auto& c : o.circles) {
    CHECK(c.circle.norm() == -1);
    CHECK(keys.insert(c.vector).second);
    CHECK(c.circle.b.is_rational());
    CHECK(c.circle.b.coef.get_den() == 1);
    CHECK(bilinear(q, to_rational(c.vector), to_rational(c.vector)) > 0);
  }
  for (std::size_t d = 1; d < o.size_by_depth.size(); ++d) CHECK(o.size_by_depth[d] >= o.size_by_depth[d - 1]);
  // One step more stays inside the next depth.
  PackingOptions shallow;
  shallow.depth = 4;
  const PackingOrbit s = orbit_circles(ex10(), shallow);
  std::set<std::vector<Integer>> deeper;
  for (const auto& c : o.circles)
    if (c.depth <= 5) deeper.insert(c.vector);
  for (const auto& c : s.circles) {
    CHECK(deeper.count(c.vector) == 1);
    for (const auto& g : ex10().generators()) CHECK(deeper.count(primitive_integer(act(g, to_rational(c.vector)))) == 1);
  }
}

TEST_CASE("golden orbit at depth 2") {
  PackingOptions opts;
  opts.depth = 2;
  const Json got = to_json(orbit_circles(ex10(), opts));
  const Json want = Json::parse(slurp(std::string(THINLAB_TEST_DATA) + "/ex10_depth2.json"));
  CHECK(got["circles"] == want["circles"]);
  CHECK(got["chart"] == want["chart"]);
}

TEST_CASE("render_svg") {
  PackingOrbit empty;
  const std::string e = render_svg(empty);
  CHECK(e.find("<svg") != std::string::npos);
  CHECK(e.find("</svg>") != std::string::npos);
  CHECK(count(e, "class=\"orbit\"") == 0);

  PackingOptions opts;
  opts.depth = 4;
  const PackingOrbit o = orbit_circles(ex10(), opts);
  SvgOptions so;
  so.labels = true;
  const std::string svg = render_svg(o, so);
  CHECK(count(svg, "class=\"orbit\"") == o.circles.size());
  CHECK(count(svg, "class=\"mirror\"") == 4);
  std::size_t big = 0;
  for (const auto& c : o.circles) big += !c.circle.is_line() && std::abs(c.circle.b.value()) >= 1;
  CHECK(count(svg, "class=\"label\"") == big);
  CHECK(count(svg, "class=\"label\"[^>]*>-?[0-9]+</text>") == big);
  CHECK(svg.find("generated") == std::string::npos);
  so.timestamp = true;
  CHECK(render_svg(o, so).find("<!-- generated ") != std::string::npos);
}
