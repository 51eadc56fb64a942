#pragma once

#include "json.hpp"

#include "diffelim/pipeline.hpp"

namespace diffelim {

using Json = nlohmann::json;

// Orders: kNegInf becomes null.
Json order_json(int k);
Json poly_json(const MultiPoly& p);
Json factored_json(const FactoredPoly& p);
std::string factored_str(const FactoredPoly& p);

Json analysis_json(const DiffSystem& sys);
Json ps_json(const DiffSystem& sys, const ProlongedSystem& ps);
Json ags_json(const AgsSystem& ags, const SpecializationTable& xi, const std::vector<MixedVolume>* mvs);
Json det_json(const Elimination& e, const std::vector<MixedVolume>* mvs);
Json elimination_json(const Elimination& e);
Json bounds_json(const DiffSystem& sys, const BoundsReport& r);
Json factor_report_json(const FactorReport& r);

// Top-level report: {"schema": 1, "command": ..., "system": ..., <payload>}.
Json report_header(const std::string& command, Pipeline& p);

}  // namespace diffelim
