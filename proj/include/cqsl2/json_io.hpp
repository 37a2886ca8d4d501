#pragma once

#include <json.hpp>

#include "cqsl2/maxwell.hpp"

namespace cqsl2 {

using Json = nlohmann::ordered_json;

Json scalar_json(const CycScalar& x);
CycScalar scalar_from_json(const CycField& F, const Json& j);

/// {"rows":N,"cols":M,"field":{"r":r},"entries":[[i,j,[coeffs]],...]},
/// entries sorted by (i, j).
Json matrix_json(const LinOp& m);

/// {"op":name,"deg":[i,j],"entries":[[in1,in2,out,[coeff]],...]}
Json wedge_table_json(const ExteriorAlgebra& ext, int deg_left, int deg_right);
Json star_table_json(const HodgeStructure& hodge, int degree);

Json algelem_json(const QuantumAlgebra& alg, const AlgElem& x);
AlgElem algelem_from_json(const QuantumAlgebra& alg, const Json& j);

Json form_json(const DeRhamComplex& cx, const Form& x);
Form form_from_json(const DeRhamComplex& cx, const Json& j);

Json dims_report_json(const DimsReport& rep);
Json gauge_report_json(const GaugeReport& rep);
Json spin0_report_json(const Spin0Report& rep);

Monomial monomial_from_string(const QuantumAlgebra& alg, const std::string& s);

}  // namespace cqsl2
