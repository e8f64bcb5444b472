#ifndef BRANGES_SERIALIZE_HPP
#define BRANGES_SERIALIZE_HPP

#include <json.hpp>

#include <branges/bipoly.hpp>
#include <branges/fact1.hpp>
#include <branges/fact2.hpp>
#include <branges/holonomic.hpp>
#include <branges/positivity.hpp>

namespace branges {

using Json = nlohmann::json;

/// [numerator, denominator] as decimal strings.
Json rat_json(const Rat& r);
Rat rat_from_json(const Json& j);

/// Ascending coefficient list of rational pairs.
Json poly_json(const Poly& p);
Poly poly_from_json(const Json& j);

/// {"content": [num, den], "coeffs": integer-string matrix [deg_n][deg_c]}.
Json bipoly_json(const BiPoly& p);
BiPoly bipoly_from_json(const Json& j);

Json ratfunc2_json(const RatFunc2& f);
Json recop_json(const RecOp& op);

/// {"kind", "maxN", "convention", "rows": rows[n][k]}.
Json table_json(const CoeffTable& t);
CoeffTable table_from_json(const Json& j);

Json square_cert_json(const SquareCert& c);
Json fact2_report_json(const Fact2Report& r);
Json sym_square_json(const SymSquareCert& c);
Json fact1_json(const Fact1Result& r, bool flowConsistent);

} // namespace branges

#endif
