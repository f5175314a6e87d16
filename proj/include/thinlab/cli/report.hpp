#pragma once

#include <string>
#include <vector>

#include "thinlab/cli/catalog.hpp"
#include "thinlab/closure/closure.hpp"
#include "thinlab/core/json_io.hpp"
#include "thinlab/image/group_image.hpp"
#include "thinlab/packing/packing.hpp"
#include "thinlab/probes/verdict.hpp"
#include "thinlab/spectral/spectrum.hpp"

namespace thinlab {

inline constexpr const char* kReportSchema = "thinlab.report";
inline constexpr int kReportVersion = 1;

struct ReportOptions {
  bool timings = false;  // when off, every seconds field is written as 0
};

Json to_json(const ImageVerdict& v);
Json to_json(const SpectralReport& r, const ReportOptions& opts = {});
Json to_json(const ScanRow& row, const ReportOptions& opts = {});
Json to_json(const FormSpace& space);
Json to_json(const ClosureCertificate& c);
Json to_json(const CosetTable& t);
Json to_json(const ObstructionResult& r);
Json to_json(const Verdict& v);
Json to_json(const Surd& s);
Json to_json(const InversiveCircle& c);
Json to_json(const PackingOrbit& orbit);  // full circle list with exact coordinates
Json to_json(const CatalogEntry& e);

// {"schema", "version", "command", "input", "results"} with fields in that order.
Json emit_report(const std::string& command, Json input, Json results);

}  // namespace thinlab
