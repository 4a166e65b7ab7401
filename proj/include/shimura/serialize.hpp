#pragma once

#include "shimura/partitions.hpp"
#include "shimura/scalar.hpp"
#include "shimura/sparse_poly.hpp"
#include "shimura/symmfunc.hpp"

#include <json.hpp>

namespace shimura {

using Json = nlohmann::ordered_json;

// Rationals serialize as {"num": "a", "den": "b"}; rational functions add
// the θ-coefficient lists {"num_theta": [...], "den_theta": [...]},
// constant term first.
Json scalar_to_json(const Scalar& s);
Scalar scalar_from_json(const Json& j);

Json rational_to_json(const Rational& r);
Rational rational_from_json(const Json& j);

/// {"variables": [...], "terms": [{"exponents": [...], "coefficient": {...}}]}
Json poly_to_json(const QPoly& f);
Json poly_to_json(const ThetaPoly& f);
QPoly qpoly_from_json(const Json& j);
ThetaPoly theta_poly_from_json(const Json& j);

/// {"basis": "p"|"m", "terms": [{"partition": "2,1", "coefficient": {...}}]}
Json coeffs_to_json(const CoeffMap& f, Basis basis);
CoeffMap coeffs_from_json(const Json& j, Basis* basis = nullptr);

} // namespace shimura
