#pragma once

#include "cqsl2/linalg.hpp"

namespace cqsl2 {

/// Dense polynomial over Q(zeta_r), coefficients ascending in degree.
using Poly = std::vector<CycScalar>;

void poly_trim(Poly& p);
int poly_degree(const Poly& p);  // -1 for the zero polynomial
Poly poly_derivative(const CycField& F, const Poly& p);
CycScalar poly_eval(const CycField& F, const Poly& p, const CycScalar& x);
/// (quotient, remainder) with deg(rem) < deg(divisor).
std::pair<Poly, Poly> poly_divmod(const CycField& F, Poly a, const Poly& b);
/// Monic gcd.
Poly poly_gcd(const CycField& F, Poly a, Poly b);
/// p / gcd(p, p'), monic: same roots, multiplicity one.
Poly poly_squarefree_part(const CycField& F, const Poly& p);

/// Characteristic polynomial of a square operator (Faddeev-LeVerrier).
Poly characteristic_polynomial(const LinOp& m);

/// All roots of p lying in Q(zeta_3), found by a rational-root-style
/// search: the square-free part is made integral over Z[zeta_3] (a
/// Euclidean domain) and candidate roots are unit multiples of divisor
/// quotients of the trailing and leading coefficients.  Only valid for
/// fields with r = 3.
std::vector<CycScalar> roots_in_field_r3(const CycField& F, const Poly& p);

}  // namespace cqsl2
