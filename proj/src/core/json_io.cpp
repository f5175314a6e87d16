#include "thinlab/core/json_io.hpp"

#include <stdexcept>

namespace thinlab {

namespace {

const Integer& two_pow_53() {
  static const Integer v = Integer(1) << 53;
  return v;
}

}  // namespace

Json integer_to_json(const Integer& x) {
  if (abs(x) <= two_pow_53()) return Json(x.get_si());
  return Json(x.get_str());
}

Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) return Integer(static_cast<long>(j.get<std::int64_t>()));
  if (j.is_string()) {
    Integer x;
    if (x.set_str(j.get<std::string>(), 10) != 0) throw std::invalid_argument("bad integer string");
    return x;
  }
  throw std::invalid_argument("expected an integer (number or decimal string)");
}

Json rational_to_json(const Rational& x) {
  if (x.get_den() == 1) return integer_to_json(x.get_num());
  return Json(x.get_str());
}

Json matrix_to_json(const IntMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.dim(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.dim(); ++j) row.push_back(integer_to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return Json{{"n", m.dim()}, {"rows", std::move(rows)}};
}

IntMatrix matrix_from_json(const Json& j) {
  const Json& rows = j.is_array() ? j : j.at("rows");
  std::vector<std::vector<Integer>> r;
  for (const auto& row : rows) {
    auto& out = r.emplace_back();
    for (const auto& x : row) out.push_back(integer_from_json(x));
  }
  IntMatrix m = IntMatrix::from_rows(r);
  if (j.is_object() && j.contains("n") && j.at("n").get<std::size_t>() != m.dim()) {
    throw DimensionError("declared n does not match the rows");
  }
  return m;
}

Json mod_matrix_to_json(const ModMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.dim(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.dim(); ++j) row.push_back(m(i, j));
    rows.push_back(std::move(row));
  }
  return Json{{"n", m.dim()}, {"modulus", m.modulus()}, {"rows", std::move(rows)}};
}

ModMatrix mod_matrix_from_json(const Json& j, std::uint64_t modulus) {
  if (j.is_object() && j.contains("modulus")) modulus = j.at("modulus").get<std::uint64_t>();
  return reduce_mod(matrix_from_json(j), modulus);
}

Json generator_set_to_json(const GeneratorSet& g) {
  Json gens = Json::array();
  for (const auto& m : g.generators()) gens.push_back(matrix_to_json(m));
  return Json{{"name", g.name()}, {"names", g.names()}, {"generators", std::move(gens)}};
}

GeneratorSet generator_set_from_json(const Json& j) {
  std::vector<IntMatrix> gens;
  for (const auto& m : j.at("generators")) gens.push_back(matrix_from_json(m));
  std::vector<std::string> names;
  if (j.contains("names")) names = j.at("names").get<std::vector<std::string>>();
  return GeneratorSet(j.value("name", std::string("custom")), std::move(gens), std::move(names));
}

}  // namespace thinlab
