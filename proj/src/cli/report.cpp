#include "thinlab/cli/report.hpp"

namespace thinlab {

namespace {

constexpr std::size_t kMaxTableRowsInReport = 1000;

Json word_json(const Word& w, const std::vector<std::string>& names) { return w.to_string(names); }

Json vector_json(const std::vector<Integer>& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(integer_to_json(x));
  return a;
}

Json rational_vector_json(const RationalVector& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(rational_to_json(x));
  return a;
}

}  // namespace

Json to_json(const ImageVerdict& v) {
  Json j;
  j["prime"] = v.prime;
  j["surjective"] = to_string(v.surjective);
  j["image_order"] = v.image_order;
  j["target_order"] = integer_to_json(v.target_order);
  j["reason"] = v.reason;
  return j;
}

Json to_json(const SpectralReport& r, const ReportOptions& opts) {
  Json j;
  j["prime"] = r.prime;
  j["vertices"] = r.vertices;
  j["degree"] = r.degree;
  j["psl"] = r.psl;
  j["method"] = r.method;
  j["lambda1"] = r.lambda1;
  j["lambda_max"] = r.method == "dense" && !r.eigenvalues.empty() ? Json(r.eigenvalues.back()) : Json(nullptr);
  j["eigenvalues"] = r.eigenvalues;
  j["residual"] = r.residual;
  j["iterations"] = r.iterations;
  j["seconds"] = opts.timings ? r.seconds : 0.0;
  return j;
}

Json to_json(const ScanRow& row, const ReportOptions& opts) {
  Json j;
  j["prime"] = row.prime;
  j["image_complete"] = row.image_complete;
  if (row.report) {
    SpectralReport brief = *row.report;
    if (brief.eigenvalues.size() > 8) brief.eigenvalues.resize(8);
    j["spectrum"] = to_json(brief, opts);
  } else {
    j["spectrum"] = nullptr;
  }
  j["error"] = row.error;
  return j;
}

Json to_json(const FormSpace& space) {
  Json j;
  j["symmetry"] = to_string(space.symmetry);
  j["dimension"] = space.dimension();
  Json basis = Json::array();
  for (const auto& q : space.basis) basis.push_back(matrix_to_json(integral_form(q)));
  j["basis"] = std::move(basis);
  return j;
}

Json to_json(const ClosureCertificate& c) {
  const ClosureEvidence& ev = c.evidence;
  Json j;
  j["class"] = to_string(c.closure);
  j["dimension"] = c.dimension;
  Json e;
  if (ev.density) {
    e["density"] = {{"prime", ev.density->prime}, {"image_order", ev.density->image_order}};
  } else {
    e["density"] = nullptr;
  }
  e["density_primes_tried"] = ev.density_primes_tried;
  e["spanning_dimension"] = ev.spanning_dimension ? Json(*ev.spanning_dimension) : Json(nullptr);
  e["spanning_word_length"] = ev.spanning_word_length;
  e["symmetric_forms"] = ev.symmetric_forms ? to_json(*ev.symmetric_forms) : Json(nullptr);
  e["antisymmetric_forms"] = ev.antisymmetric_forms ? to_json(*ev.antisymmetric_forms) : Json(nullptr);
  e["form"] = ev.form ? matrix_to_json(integral_form(*ev.form)) : Json(nullptr);
  if (ev.signature) {
    e["signature"] = {{"positive", ev.signature->positive},
                      {"negative", ev.signature->negative},
                      {"zero", ev.signature->zero}};
  } else {
    e["signature"] = nullptr;
  }
  e["commutative"] = ev.commutative ? Json(*ev.commutative) : Json(nullptr);
  e["unipotent"] = ev.unipotent ? Json(*ev.unipotent) : Json(nullptr);
  Json polys = Json::array();
  for (const auto& p : ev.char_polys) polys.push_back(vector_json(p));
  e["char_polys"] = std::move(polys);
  e["discriminants"] = vector_json(ev.discriminants);
  e["field_discriminant"] = ev.field_discriminant ? integer_to_json(*ev.field_discriminant) : Json(nullptr);
  e["common_eigenvector"] = ev.common_eigenvector ? vector_json(*ev.common_eigenvector) : Json(nullptr);
  e["notes"] = ev.notes;
  j["evidence"] = std::move(e);
  return j;
}

Json to_json(const CosetTable& t) {
  Json j;
  j["status"] = to_string(t.status);
  j["index"] = t.status == CosetStatus::Closed ? Json(t.index) : Json(nullptr);
  j["live_at_stop"] = t.status == CosetStatus::CapExceeded ? Json(t.live_at_stop) : Json(nullptr);
  j["cosets_defined"] = t.cosets_defined;
  j["lookaheads"] = t.lookaheads;
  Json words = Json::array();
  for (const auto& w : t.subgroup_words) words.push_back(to_string(w));
  j["subgroup_words"] = std::move(words);
  if (t.status == CosetStatus::Closed && t.rows.size() <= kMaxTableRowsInReport) {
    Json rows = Json::array();
    for (const auto& r : t.rows) rows.push_back({{"s", r[0]}, {"t", r[1]}, {"t^-1", r[2]}});
    j["rows"] = std::move(rows);
  }
  return j;
}

Json to_json(const ObstructionResult& r) {
  Json j;
  j["excluded"] = r.excluded;
  j["modulus"] = r.modulus ? Json(*r.modulus) : Json(nullptr);
  Json checks = Json::array();
  for (const auto& c : r.checks) checks.push_back({{"modulus", c.modulus}, {"minus_identity_in_image", to_string(c.status)}});
  j["checks"] = std::move(checks);
  j["reason"] = r.reason;
  return j;
}

Json to_json(const Verdict& v) {
  Json j;
  j["classification"] = to_string(v.classification);
  j["index"] = v.index ? integer_to_json(*v.index) : Json(nullptr);
  j["psl_index"] = v.psl_index ? Json(*v.psl_index) : Json(nullptr);
  j["reason"] = v.reason;
  j["catalog_id"] = v.catalog_id ? Json(*v.catalog_id) : Json(nullptr);
  j["citation"] = v.citation;
  j["anchor"] = v.anchor;
  Json ev;
  ev["closure"] = to_json(v.closure);
  ev["coset_enumeration"] = v.coset ? to_json(*v.coset) : Json(nullptr);
  ev["coset_check"] = v.coset_check ? Json{{"ok", v.coset_check->ok}, {"message", v.coset_check->message}}
                                    : Json(nullptr);
  ev["minus_identity"] = v.minus_identity ? to_json(*v.minus_identity) : Json(nullptr);
  j["evidence"] = std::move(ev);
  return j;
}

Json to_json(const Surd& s) {
  if (s.is_rational()) return rational_to_json(s.coef);
  return {{"coef", rational_to_json(s.coef)}, {"sqrt", integer_to_json(s.radicand)}};
}

Json to_json(const InversiveCircle& c) {
  Json j;
  j["b"] = to_json(c.b);
  j["b_hat"] = to_json(c.b_hat);
  j["bx1"] = to_json(c.bx1);
  j["bx2"] = to_json(c.bx2);
  j["line"] = c.is_line();
  if (!c.is_line()) {
    j["render"] = {{"cx", c.center_x()}, {"cy", c.center_y()}, {"r", c.radius()}};
  }
  return j;
}

Json to_json(const PackingOrbit& orbit) {
  Json j;
  j["generators"] = generator_set_to_json(orbit.generators);
  j["form"] = matrix_to_json(integral_form(orbit.form));
  Json chart;
  chart["w"] = rational_vector_json(orbit.chart.w);
  chart["w_prime"] = rational_vector_json(orbit.chart.w_prime);
  chart["e1"] = rational_vector_json(orbit.chart.e1);
  chart["e2"] = rational_vector_json(orbit.chart.e2);
  chart["kappa"] = rational_to_json(orbit.chart.kappa);
  j["chart"] = std::move(chart);
  j["scale"] = rational_to_json(orbit.scale);
  j["integral"] = orbit.integral;
  j["size_by_depth"] = orbit.size_by_depth;
  Json mirrors = Json::array();
  for (std::size_t i = 0; i < orbit.mirrors.size(); ++i) {
    Json m = to_json(orbit.mirrors[i]);
    m["normal"] = rational_vector_json(orbit.mirror_normals[i]);
    mirrors.push_back(std::move(m));
  }
  j["mirrors"] = std::move(mirrors);
  Json seeds = Json::array();
  for (const auto& s : orbit.seeds) seeds.push_back(vector_json(s));
  j["seeds"] = std::move(seeds);
  Json circles = Json::array();
  for (const auto& c : orbit.circles) {
    Json e = to_json(c.circle);
    e["vector"] = vector_json(c.vector);
    e["depth"] = c.depth;
    e["word"] = word_json(c.word, orbit.generators.names());
    e["bounding"] = c.bounding;
    circles.push_back(std::move(e));
  }
  j["circles"] = std::move(circles);
  return j;
}

Json to_json(const CatalogEntry& e) {
  Json j;
  j["id"] = e.id;
  j["summary"] = e.summary;
  j["dimension"] = e.generators.dim();
  j["generator_count"] = e.generators.size();
  j["closure"] = e.closure;
  j["thin"] = to_string(e.thin);
  j["index"] = e.index ? Json(*e.index) : Json(nullptr);
  j["citation"] = e.citation;
  j["anchor"] = e.anchor;
  j["generators"] = generator_set_to_json(e.generators);
  return j;
}

Json emit_report(const std::string& command, Json input, Json results) {
  Json j;
  j["schema"] = kReportSchema;
  j["version"] = kReportVersion;
  j["command"] = command;
  j["input"] = std::move(input);
  j["results"] = results.is_null() ? Json::object() : std::move(results);
  return j;
}

}  // namespace thinlab
