#pragma once
#include <json.hpp>

#include <string>

#include "umlab/presentation.hpp"
#include "umlab/rows.hpp"
#include "umlab/series.hpp"

namespace umlab {

// Insertion-ordered JSON: combined with the ordered containers underneath
// (std::map keyed coefficients, fixed field order here), identical values
// always serialize to identical bytes.
using Json = nlohmann::ordered_json;

Json base_to_json(const LocalBase& b);
LocalBase base_from_json(const Json& j);

// {"<exp>": "<n>" | "<n/d>", ...} with exponents ascending.
Json lp_to_json(const LaurentPoly& a);
LaurentPoly lp_from_json(const Json& j, const LocalBase& base);

Json series_to_json(const TruncSeries& s);
TruncSeries series_from_json(const Json& j);

Json mat_to_json(const LaurentMat& m);
LaurentMat mat_from_json(const Json& j, const LocalBase& base);

Json bundle_to_json(const RowBundle& b);
RowBundle bundle_from_json(const Json& j);

Json certificate_to_json(const BezoutCertificate& c);
BezoutCertificate certificate_from_json(const Json& j, const LocalBase& base);

Json witness_to_json(const GLWitness& w);
GLWitness witness_from_json(const Json& j, const LocalBase& base);

Json reduction_result_to_json(const ReductionResult& r);
ReductionResult reduction_result_from_json(const Json& j);

Json mv_to_json(const MvPoly& p);
MvPoly mv_from_json(const Json& j, const LocalBase& base);

Json presentation_to_json(const RingPresentation& p);

// Canonical text form: two-space indent plus trailing newline. All artifact
// files and digests go through this one function.
std::string dump_canonical(const Json& j);

Json load_json_file(const std::string& path); // BadInput on missing/malformed
void write_json_file(const std::string& path, const Json& j);

} // namespace umlab
