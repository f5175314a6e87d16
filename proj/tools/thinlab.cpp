// thinlab command-line front end.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include "thinlab/cli/catalog.hpp"
#include "thinlab/cli/config.hpp"
#include "thinlab/cli/report.hpp"
#include "thinlab/packing/svg.hpp"
#include "thinlab/probes/st_rewrite.hpp"
#include "thinlab/spectral/cayley_graph.hpp"

namespace fs = std::filesystem;
using namespace thinlab;

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Common {
  RunConfig cfg;
  std::string output;
};

GeneratorSet load_gens(const std::string& spec) {
  try {
    return resolve_generators(spec);
  } catch (const std::exception& e) {
    throw UsageError(e.what());
  }
}

// "2 0; 1 3" or "2,0;1,3".
IntMatrix parse_matrix(const std::string& text) {
  std::vector<std::vector<Integer>> rows;
  std::stringstream all(text);
  std::string row;
  while (std::getline(all, row, ';')) {
    for (char& ch : row)
      if (ch == ',') ch = ' ';
    std::stringstream rs(row);
    std::vector<Integer> r;
    std::string tok;
    while (rs >> tok) {
      try {
        r.emplace_back(tok);
      } catch (const std::exception&) {
        throw UsageError("bad matrix entry '" + tok + "'");
      }
    }
    if (!r.empty()) rows.push_back(std::move(r));
  }
  try {
    return IntMatrix::from_rows(rows);
  } catch (const std::exception& e) {
    throw UsageError(std::string("bad matrix: ") + e.what());
  }
}

std::vector<std::uint64_t> parse_primes(const std::string& text) {
  std::vector<std::uint64_t> out;
  if (auto dots = text.find(".."); dots != std::string::npos) {
    try {
      return primes_between(std::stoull(text.substr(0, dots)), std::stoull(text.substr(dots + 2)));
    } catch (const std::logic_error&) {
      throw UsageError("bad prime range '" + text + "'");
    }
  }
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      out.push_back(std::stoull(tok));
    } catch (const std::logic_error&) {
      throw UsageError("bad prime '" + tok + "'");
    }
  }
  return out;
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

void write_json(const std::string& path, const Json& j) { write_text(path, j.dump(2) + "\n"); }

Json input_json(const std::string& spec, const GeneratorSet& gens) {
  Json in;
  in["gens"] = spec;
  in["generators"] = generator_set_to_json(gens);
  return in;
}

ProbeConfig probe_config(const RunConfig& cfg) {
  ProbeConfig p;
  p.coset_cap = cfg.coset_cap;
  p.element_cap = cfg.element_cap;
  p.closure.element_cap = cfg.element_cap;
  return p;
}

SpectralReport spectrum_for(const GeneratorSet& gens, std::uint64_t p, bool psl, const std::string& method,
                            const RunConfig& cfg) {
  auto image = std::make_shared<const GroupImage>(GroupImage::enumerate(gens, p, cfg.element_cap));
  if (!image->complete()) throw CapExceededError("element cap reached before the image closed");
  const CayleyGraph graph = CayleyGraph::build(image, psl);
  const bool dense = method == "dense" || (method == "auto" && graph.vertices() <= 1024);
  SpectralReport r;
  if (dense) {
    r = laplacian_spectrum_dense(graph);
  } else {
    LanczosOptions lo;
    lo.tol = cfg.tol;
    lo.max_iterations = cfg.max_iterations;
    r = lambda1_iterative(graph, lo);
  }
  r.prime = p;
  return r;
}

ScanOptions scan_options(const RunConfig& cfg) {
  ScanOptions so;
  so.psl = cfg.psl;
  so.tol = cfg.tol;
  so.max_iterations = cfg.max_iterations;
  so.element_cap = cfg.element_cap;
  so.threads = cfg.threads;
  return so;
}

void strip_timings(std::vector<ScanRow>& rows, const RunConfig& cfg) {
  if (cfg.timings) return;
  for (auto& r : rows)
    if (r.report) r.report->seconds = 0.0;
}

// lambda1 against p; failed rows are skipped.
std::string scan_plot_svg(const std::vector<ScanRow>& rows) {
  constexpr double W = 640, H = 400, L = 60, R = 20, T = 20, B = 50;
  double pmax = 1, lmax = 0;
  for (const auto& r : rows) {
    pmax = std::max(pmax, static_cast<double>(r.prime));
    if (r.report) lmax = std::max(lmax, r.report->lambda1);
  }
  if (lmax <= 0) lmax = 1;
  auto x = [&](double p) { return L + (W - L - R) * p / pmax; };
  auto y = [&](double l) { return H - B - (H - T - B) * l / lmax; };
  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << H << "\">\n"
     << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
     << "<line x1=\"" << L << "\" y1=\"" << H - B << "\" x2=\"" << W - R << "\" y2=\"" << H - B
     << "\" stroke=\"black\"/>\n"
     << "<line x1=\"" << L << "\" y1=\"" << T << "\" x2=\"" << L << "\" y2=\"" << H - B << "\" stroke=\"black\"/>\n"
     << "<text x=\"" << W / 2 << "\" y=\"" << H - 10 << "\" text-anchor=\"middle\">p</text>\n"
     << "<text x=\"15\" y=\"" << H / 2 << "\" text-anchor=\"middle\">lambda1</text>\n"
     << "<text x=\"" << L - 5 << "\" y=\"" << T + 5 << "\" text-anchor=\"end\" font-size=\"10\">" << lmax
     << "</text>\n";
  for (const auto& r : rows) {
    if (!r.report) continue;
    os << "<circle class=\"point\" cx=\"" << x(static_cast<double>(r.prime)) << "\" cy=\"" << y(r.report->lambda1)
       << "\" r=\"3\" fill=\"steelblue\"><title>p=" << r.prime << " lambda1=" << r.report->lambda1
       << "</title></circle>\n";
  }
  os << "</svg>\n";
  return os.str();
}

Json packing_summary(const PackingOrbit& orbit) {
  Json j;
  j["depth"] = orbit.size_by_depth.empty() ? 0 : orbit.size_by_depth.size() - 1;
  j["orbit_size"] = orbit.circles.size();
  j["size_by_depth"] = orbit.size_by_depth;
  j["scale"] = rational_to_json(orbit.scale);
  j["integral"] = orbit.integral;
  j["form"] = matrix_to_json(integral_form(orbit.form));
  j["signature"] = "(3,1)";
  return j;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"thinlab: experiments with thin matrix groups"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_config("--config", "", "flat key = value file with option defaults");

  Common common;
  RunConfig& cfg = common.cfg;
  cfg.threads = default_threads();
  app.add_option("--element-cap", cfg.element_cap, "maximum group elements to enumerate")->capture_default_str();
  app.add_option("--coset-cap", cfg.coset_cap, "maximum live cosets")->capture_default_str();
  app.add_option("--max-iter", cfg.max_iterations, "Lanczos operator applications")->capture_default_str();
  app.add_option("--tol", cfg.tol, "eigenvalue residual tolerance")->capture_default_str();
  app.add_option("--threads", cfg.threads, "worker threads")->envname("THINLAB_THREADS");
  app.add_flag("--timings", cfg.timings, "record wall-clock seconds (breaks byte-identical output)");
  app.add_option("-o,--output", common.output, "output file (default stdout)");

  std::string gens_spec;
  auto add_gens = [&](CLI::App* sub, bool required = true) {
    auto* opt = sub->add_option("-g,--gens", gens_spec, "catalog id or JSON generator file");
    if (required) opt->required();
  };

  // image
  auto* image_cmd = app.add_subcommand("image", "enumerate the image mod m; membership and lifting");
  add_gens(image_cmd);
  std::uint64_t modulus = 0;
  std::string target_text;
  bool lift = false;
  image_cmd->add_option("-m,--mod,--modulus", modulus, "modulus")->required()->check(CLI::Range(2ull, 2147483647ull));
  image_cmd->add_option("--target", target_text, "matrix to test, rows separated by ';'");
  image_cmd->add_flag("--lift", lift, "also produce an integer lift of the target");
  image_cmd->add_option("--cap", cfg.element_cap, "same as --element-cap");

  // spectrum
  auto* spectrum_cmd = app.add_subcommand("spectrum", "Laplacian spectrum of the Cayley graph mod p");
  add_gens(spectrum_cmd);
  std::uint64_t prime = 0;
  std::string method = "auto";
  std::string psl_mode = "off";
  bool psl = false;
  spectrum_cmd->add_option("-p,--prime", prime, "prime")->required();
  spectrum_cmd->add_option("--method", method, "auto, dense or lanczos")
      ->check(CLI::IsMember({"auto", "dense", "lanczos"}))
      ->capture_default_str();
  spectrum_cmd->add_option("--psl", psl_mode, "on, off, or auto (report both)")
      ->check(CLI::IsMember({"on", "off", "auto"}))
      ->capture_default_str();

  // scan
  auto* scan_cmd = app.add_subcommand("scan", "surjectivity and spectral gap over a prime range");
  add_gens(scan_cmd);
  std::string primes_text = "3..50";
  std::string format = "csv";
  std::string csv_path, plot_path;
  scan_cmd->add_option("--primes", primes_text, "range lo..hi or list p1,p2,...")->capture_default_str();
  scan_cmd->add_flag("--psl", psl, "identify g with -g");
  scan_cmd->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
  scan_cmd->add_option("--out,--csv", csv_path, "also write the CSV table here");
  scan_cmd->add_option("--svg", plot_path, "scatter plot of lambda1 against p");

  // closure
  auto* closure_cmd = app.add_subcommand("closure", "Zariski closure certificate");
  add_gens(closure_cmd);
  std::string report_path;
  std::size_t word_length = 6;
  closure_cmd->add_option("--report", report_path, "write the JSON here instead of stdout");
  closure_cmd->add_option("--word-length", word_length, "word length for the spanning test")->capture_default_str();

  // probe
  auto* probe_cmd = app.add_subcommand("probe", "thinness verdict with its evidence");
  add_gens(probe_cmd);

  // pack
  auto* pack_cmd = app.add_subcommand("pack", "circle packing from a reflection group");
  add_gens(pack_cmd, false);
  std::size_t depth = 6;
  std::string svg_path, circles_path, seeds = "packing";
  bool labels = false, timestamp = false;
  pack_cmd->add_option("--depth", depth, "orbit word length")->capture_default_str();
  pack_cmd->add_option("--svg", svg_path, "SVG output path");
  pack_cmd->add_option("--circles", circles_path, "circle list JSON (default circles.json beside the SVG)");
  pack_cmd->add_flag("--labels", labels, "label circles with their curvature");
  pack_cmd->add_flag("--timestamp", timestamp, "put the generation time in the SVG header");
  pack_cmd->add_option("--seeds", seeds, "packing or mirrors")->check(CLI::IsMember({"packing", "mirrors"}));

  // catalog
  auto* catalog_cmd = app.add_subcommand("catalog", "list the built-in generator sets");
  bool catalog_json = false;
  catalog_cmd->add_flag("--json", catalog_json, "full JSON instead of a table");

  // report
  auto* report_cmd = app.add_subcommand("report", "full pipeline in one JSON document");
  add_gens(report_cmd);
  std::string report_primes = "3..13";
  report_cmd->add_option("--primes", report_primes, "primes for the image and spectrum sections (n = 2)")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    cfg.validate();
  } catch (const std::exception& e) {
    std::cerr << "thinlab: " << e.what() << "\n";
    return 2;
  }

  try {
    const ReportOptions ropts{cfg.timings};

    if (*image_cmd) {
      const GeneratorSet gens = load_gens(gens_spec);
      const GroupImage img = GroupImage::enumerate(gens, modulus, cfg.element_cap);
      Json res;
      res["modulus"] = modulus;
      res["order"] = img.order();
      res["complete"] = img.complete();
      if (is_prime(modulus)) res["surjectivity"] = to_json(surjectivity_of(img));
      if (!target_text.empty()) {
        const IntMatrix t = parse_matrix(target_text);
        if (t.dim() != gens.dim()) throw UsageError("target dimension does not match the generators");
        std::vector<Residue> res_entries;
        ModMatrix target(t.dim(), modulus);
        for (std::size_t i = 0; i < t.dim(); ++i)
          for (std::size_t j = 0; j < t.dim(); ++j) {
            Integer r;
            mpz_fdiv_r_ui(r.get_mpz_t(), t(i, j).get_mpz_t(), modulus);
            target(i, j) = static_cast<Residue>(r.get_ui());
          }
        const MembershipResult m = contains(img, target);
        Json mj;
        mj["target"] = mod_matrix_to_json(target);
        mj["status"] = to_string(m.status);
        mj["reason"] = m.reason;
        if (m.index) mj["witness"] = img.witness(*m.index).to_string(gens.names());
        if (lift && m.status == Membership::Yes) {
          const Lift l = lift_to_integers(gens, modulus, target, cfg.element_cap);
          mj["lift"] = {{"matrix", matrix_to_json(l.matrix)},
                        {"word", l.word.to_string(gens.names())},
                        {"det", integer_to_json(det(l.matrix))}};
        }
        res["membership"] = std::move(mj);
      }
      write_json(common.output, emit_report("image", input_json(gens_spec, gens), std::move(res)));
      return 0;
    }

    if (*spectrum_cmd) {
      const GeneratorSet gens = load_gens(gens_spec);
      if (!is_prime(prime)) throw UsageError("--prime must be prime");
      Json res;
      if (psl_mode == "auto") {
        res["psl_off"] = to_json(spectrum_for(gens, prime, false, method, cfg), ropts);
        res["psl_on"] = to_json(spectrum_for(gens, prime, true, method, cfg), ropts);
      } else {
        res = to_json(spectrum_for(gens, prime, psl_mode == "on", method, cfg), ropts);
      }
      write_json(common.output, emit_report("spectrum", input_json(gens_spec, gens), std::move(res)));
      return 0;
    }

    if (*scan_cmd) {
      const GeneratorSet gens = load_gens(gens_spec);
      const auto primes = parse_primes(primes_text);
      for (auto p : primes)
        if (!is_prime(p)) throw UsageError(std::to_string(p) + " is not prime");
      cfg.psl = psl;
      auto rows = spectral_scan(gens, primes, scan_options(cfg));
      strip_timings(rows, cfg);
      const std::string csv = scan_to_csv(rows);
      if (!csv_path.empty()) write_text(csv_path, csv);
      if (!plot_path.empty()) write_text(plot_path, scan_plot_svg(rows));
      if (format == "csv") {
        write_text(common.output, csv);
      } else {
        Json res;
        Json arr = Json::array();
        for (std::size_t i = 0; i < rows.size(); ++i) {
          Json row = to_json(rows[i], ropts);
          row["surjectivity"] = to_json(is_surjective(gens, rows[i].prime, cfg.element_cap));
          arr.push_back(std::move(row));
        }
        res["psl"] = psl;
        res["rows"] = std::move(arr);
        write_json(common.output, emit_report("scan", input_json(gens_spec, gens), std::move(res)));
      }
      bool failed = false;
      for (const auto& r : rows) failed = failed || !r.report;
      return failed ? 1 : 0;
    }

    if (*closure_cmd) {
      const GeneratorSet gens = load_gens(gens_spec);
      ClosureOptions co;
      co.word_length = word_length;
      co.element_cap = cfg.element_cap;
      const Json doc = emit_report("closure", input_json(gens_spec, gens), to_json(closure_certificate(gens, co)));
      write_json(report_path.empty() ? common.output : report_path, doc);
      return 0;
    }

    if (*probe_cmd) {
      const GeneratorSet gens = load_gens(gens_spec);
      const Verdict v = thinness_verdict(gens, probe_config(cfg));
      write_json(common.output, emit_report("probe", input_json(gens_spec, gens), to_json(v)));
      return 0;
    }

    if (*pack_cmd) {
      if (gens_spec.empty()) gens_spec = "ex10";
      const GeneratorSet gens = load_gens(gens_spec);
      PackingOptions po;
      po.depth = depth;
      po.seeds = seeds == "mirrors" ? SeedChoice::Mirrors : SeedChoice::Packing;
      const PackingOrbit orbit = orbit_circles(gens, po);
      if (circles_path.empty() && !svg_path.empty()) {
        circles_path = (fs::path(svg_path).parent_path() / "circles.json").string();
      }
      Json res = packing_summary(orbit);
      res["seeds"] = to_string(po.seeds);
      if (!svg_path.empty()) {
        SvgOptions so;
        so.labels = labels;
        so.timestamp = timestamp;
        write_text(svg_path, render_svg(orbit, so));
      }
      if (!circles_path.empty()) write_json(circles_path, to_json(orbit));
      res["svg"] = svg_path.empty() ? Json(nullptr) : Json(svg_path);
      res["circles"] = circles_path.empty() ? Json(nullptr) : Json(circles_path);
      if (circles_path.empty()) res["orbit"] = to_json(orbit);
      write_json(common.output, emit_report("pack", input_json(gens_spec, gens), std::move(res)));
      return 0;
    }

    if (*catalog_cmd) {
      if (catalog_json) {
        Json arr = Json::array();
        for (const auto& e : catalog()) arr.push_back(to_json(e));
        write_json(common.output, emit_report("catalog", Json::object(), Json{{"entries", std::move(arr)}}));
      } else {
        std::ostringstream os;
        for (const auto& e : catalog()) {
          os << e.id << "\tn=" << e.generators.dim() << "\tgens=" << e.generators.size() << "\t" << e.summary
             << "\t[" << to_string(e.thin) << "] " << e.citation << "\n";
        }
        write_text(common.output, os.str());
      }
      return 0;
    }

    if (*report_cmd) {
      const GeneratorSet gens = load_gens(gens_spec);
      Json res;
      const CatalogEntry* entry = find_catalog_entry(gens);
      res["catalog"] = entry ? to_json(*entry) : Json(nullptr);
      const Verdict v = thinness_verdict(gens, probe_config(cfg));
      res["verdict"] = to_json(v);
      if (gens.dim() == 2) {
        const auto primes = parse_primes(report_primes);
        Json approx = Json::array();
        for (auto p : primes) {
          if (is_prime(p)) approx.push_back(to_json(is_surjective(gens, p, cfg.element_cap)));
        }
        res["strong_approximation"] = std::move(approx);
        if (gens.all_special()) {
          auto rows = spectral_scan(gens, primes, scan_options(cfg));
          strip_timings(rows, cfg);
          Json spectra = Json::array();
          for (const auto& r : rows) spectra.push_back(to_json(r, ropts));
          res["spectra"] = std::move(spectra);
        }
      }
      if (gens.dim() == 4) {
        try {
          PackingOptions po;
          res["packing"] = packing_summary(orbit_circles(gens, po));
        } catch (const std::exception&) {
          res["packing"] = nullptr;  // not a signature (3,1) reflection group
        }
      }
      write_json(common.output, emit_report("report", input_json(gens_spec, gens), std::move(res)));
      return 0;
    }
  } catch (const UsageError& e) {
    std::cerr << "thinlab: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "thinlab: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
