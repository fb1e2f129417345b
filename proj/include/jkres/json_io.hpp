#pragma once

#include <json.hpp>

#include "jkres/arrangement.hpp"
#include "jkres/mpoly.hpp"
#include "jkres/partition.hpp"

namespace jkres {

using Json = nlohmann::json;

// Wire format: {"betas": [[int,...],...]}; optional "xi" handled separately.
LinearSystem system_from_json(const Json& j);
Json system_to_json(const LinearSystem& s);

// "xi": array of integers or rational strings ("p" / "p/q").
RatVec rat_vec_from_json(const Json& j, int expected_len);
IntVec int_vec_from_json(const Json& j, int expected_len);

Json rat_vec_to_json(const RatVec& v);
Json int_vec_to_json(const IntVec& v);

// {"representative": ["p/q",...], "feasible_bases": [[i,...],...]}
Json chamber_to_json(const Chamber& c);

// Term list [{"coeff":"p/q","exponents":[..]}...], exponents padded to nvars,
// terms sorted by exponent vector.
Json poly_to_json(const MPoly<Rational>& p, int nvars);
MPoly<Rational> poly_from_json(const Json& j);

// High-to-low coefficient strings.
Json ehrhart_to_json(const EhrhartPolynomial& e);

} // namespace jkres
