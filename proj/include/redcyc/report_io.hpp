#ifndef REDCYC_REPORT_IO_HPP
#define REDCYC_REPORT_IO_HPP

#include <string>

#include <nlohmann/json.hpp>

#include "redcyc/census.hpp"
#include "redcyc/cyclictest.hpp"

// JSON and CSV renderings of reports.  Rationals travel as
// {"exact": "num/den", "decimal": <12 significant digits>}; the exact string
// is authoritative and parsing reads only it.

namespace redcyc {

using Json = nlohmann::ordered_json;

Json rational_json(const Rational& x);
Rational rational_from_json(const Json& j);

Json field_json(const Field& f);
FieldPtr field_from_json(const Json& j);

Json to_json(const BoundsReport& b);
BoundsReport bounds_from_json(const Json& j);

Json to_json(const Verdicts& v);
Verdicts verdicts_from_json(const Json& j);

Json to_json(const DensityReport& r);
DensityReport report_from_json(const Json& j);

Json to_json(const SweepPoint& p);
Json to_json(const ProbeReport& p);

/// n,r,q,mode,method,pi,pi1,pi2,pi3,lower,upper,verdicts,seed,trials
std::string csv_header();
std::string csv_row(const DensityReport& r);
/// Failed points keep n, r, q and put the error in the verdicts column.
std::string csv_row(const SweepPoint& p);

}  // namespace redcyc

#endif
