#pragma once
// Curve files, JSON analysis reports and per-instance catalog verification.
#include <string>
#include <vector>

#include <json.hpp>

#include "annuli/catalog.hpp"
#include "annuli/certify.hpp"

namespace annuli {

using Json = nlohmann::ordered_json;

// {"field":{"d":D},"x":[[exp,"a","b"],...],"y":[...]} where each coefficient
// is a + b*sqrt(D); ParseError (with line:column for syntax errors and the
// entry path otherwise), FieldMismatch, ZeroCoefficient
Curve parse_curve_file(const std::string& text);
// canonical form: increasing exponents, no zero coefficients, one entry per line
std::string emit_curve_file(const Curve& c);

// polynomial in t with coefficients in Q(sqrt d), e.g. "t^2 - t + 1/2" or "2/3"
// (a bare number a stands for t - a)
QPoly parse_factor(const std::string& text, long d = 1);

Json scalar_json(const Scalar& s);
Json verdict_report(const Curve& c, const Verdict& v);
// full pipeline on one curve; throws on failures other than a negative verdict
Json analysis_report(const Curve& c, Verdict* out = nullptr);

struct InstanceCheck {
  SeriesId id;
  bool skipped = false;
  std::string skipReason;
  bool embedding = false;
  bool pass = false;
  bool error = false;                 // an exception escaped the checks
  std::vector<std::string> failures;  // named reasons when pass is false
  std::string ledger;                 // summary line
  std::vector<std::string> labels;    // finite singularity labels, normal-form order
  long twoDeltaMax = 0;
  std::vector<PointAnalysis> found;   // singularities of the generated curve
  double seconds = 0;                 // not part of any report
  Json report() const;
};

// generation, verdict, balance, audits, regularity, diagonal check and the
// expected singularities; ExcludedParams becomes a skip
InstanceCheck check_instance(const SeriesId& id);

// runs check_instance over ids with at most jobs workers; results keep the
// order of ids
std::vector<InstanceCheck> check_all(const std::vector<SeriesId>& ids, int jobs);

}  // namespace annuli
