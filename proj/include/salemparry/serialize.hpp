#ifndef SALEMPARRY_SERIALIZE_HPP
#define SALEMPARRY_SERIALIZE_HPP

#include <json.hpp>
#include <string>
#include <vector>

#include "salemparry/boundary.hpp"
#include "salemparry/measure.hpp"
#include "salemparry/salem.hpp"
#include "salemparry/survey.hpp"
#include "salemparry/verify.hpp"

namespace salem {

using Json = nlohmann::json;  // object keys are kept sorted

/// Rationals as "p/q" (or "p") strings.
Json to_json(const Rational& q);
Rational rational_from_json(const Json& j);

/// Integers as JSON numbers when they fit in 64 bits, else decimal strings.
Json to_json(const Integer& z);
Integer integer_from_json(const Json& j);

/// Coefficient lists, constant term first.
Json to_json(const IntPolynomial& p);
IntPolynomial polynomial_from_json(const Json& j);

/// {poly, lo, hi}
Json to_json(const RealAlgebraic& a);
RealAlgebraic algebraic_from_json(const Json& j);

Json to_json(const PeriodicWord& w);
Json to_json(const ExpansionRecord& r);
Json to_json(const SalemVerdict& v);
Json to_json(const OrbitRecord& r);
Json to_json(const LinearForm& f);
Json to_json(const AlphaPiece& p);
Json to_json(const PeriodCell& c);
Json to_json(const MeasureResult& m, bool with_seconds);
Json to_json(const VerificationReport& r);

/// Rebuilds the cell from R and checks the stored forms and polygon
/// against the derivation; throws ParseError on any mismatch.
PeriodCell cell_from_json(const Json& j);

Json catalog_to_json(const std::vector<PeriodCell>& cells);
std::vector<PeriodCell> catalog_from_json(const Json& j);
std::vector<PeriodCell> read_catalog(const std::string& path);
void write_catalog(const std::string& path, const std::vector<PeriodCell>& cells);

}  // namespace salem

#endif
