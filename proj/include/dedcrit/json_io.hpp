#pragma once

// JSON encodings of certificates and verdicts. Every integer is written as a
// decimal string; polynomials are coefficient arrays, constant term first.

#include "dedcrit/criterion.hpp"
#include "dedcrit/eisenstein.hpp"
#include "dedcrit/fppoly.hpp"
#include "dedcrit/purepower.hpp"
#include "dedcrit/quadratic.hpp"

#include "json.hpp"

namespace dedcrit {

using Json = nlohmann::ordered_json;

Json to_json(const IntPoly& f);
Json to_json(const FpPoly& f);
Json to_json(const PrimeFactorization& fac);
Json to_json(const FactorizationModP& fac);
Json to_json(const LocalReport& report);
Json to_json(const Certificate& cert);
Json to_json(const PurePowerVerdict& v);
Json to_json(const QuadInt& u);
Json to_json(const QuadPrime& P);
Json to_json(const QuadPurePowerVerdict& v);
Json to_json(const ThetaDescriptor& theta);

}  // namespace dedcrit
