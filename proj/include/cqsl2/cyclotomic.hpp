#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <string>
#include <vector>

#include "cqsl2/common.hpp"

namespace cqsl2 {

using Rational = boost::multiprecision::mpq_rational;
using BigInt = boost::multiprecision::mpz_int;

class CycField;

/// Element of the cyclotomic field Q(zeta_r), stored as coordinates in the
/// power basis 1, z, ..., z^{phi(r)-1} of Q[z]/(Phi_r), always fully reduced.
/// A default-constructed scalar is the zero of every field and combines
/// freely with field-attached values.
class CycScalar {
public:
    CycScalar() = default;
    CycScalar(const CycField* field, std::vector<Rational> coeffs);

    const CycField* field() const { return field_; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    bool is_zero() const;
    bool is_rational() const;
    /// The degree-0 coordinate (only meaningful when is_rational()).
    Rational rational_part() const;

    CycScalar inv() const;

    CycScalar& operator+=(const CycScalar& o);
    CycScalar& operator-=(const CycScalar& o);
    CycScalar& operator*=(const CycScalar& o);
    CycScalar& operator/=(const CycScalar& o);

    friend CycScalar operator+(CycScalar a, const CycScalar& b) { return a += b; }
    friend CycScalar operator-(CycScalar a, const CycScalar& b) { return a -= b; }
    friend CycScalar operator*(const CycScalar& a, const CycScalar& b);
    friend CycScalar operator/(CycScalar a, const CycScalar& b) { return a /= b; }
    friend CycScalar operator-(const CycScalar& a);
    friend bool operator==(const CycScalar& a, const CycScalar& b);
    friend bool operator!=(const CycScalar& a, const CycScalar& b) { return !(a == b); }

    /// Coefficients as "num/den" strings ordered by power-basis degree.
    std::vector<std::string> to_strings() const;
    std::string str() const;

private:
    friend class CycField;
    const CycField* field_ = nullptr;   // null <=> zero with no field attached
    std::vector<Rational> coeffs_;      // size phi(r) when field_ != null
};

/// The ground field Q(zeta_r) for odd r >= 3, with q fixed as the canonical
/// generator zeta.  Owns the reduction tables; all scalar arithmetic routes
/// through here.  Immutable after construction.
class CycField {
public:
    explicit CycField(int r);

    int r() const { return r_; }
    int degree() const { return phi_; }
    const std::vector<Rational>& cyclotomic_polynomial() const { return modulus_; }

    CycScalar zero() const;
    CycScalar one() const;
    CycScalar from_rational(const Rational& x) const;
    CycScalar rat(long num, long den = 1) const;
    CycScalar from_coeffs(std::vector<Rational> coeffs) const;

    /// q^k with k any integer, reduced mod Phi_r.
    CycScalar q_power(long k) const;
    /// [n]_{q^base} = (1 - q^{base*n}) / (1 - q^{base}), base in {1, 2}.
    CycScalar q_int(long n, int base = 1) const;
    /// Balanced q-integer (q^n - q^{-n}) / (q - q^{-1}).
    CycScalar q_bracket_sym(long n) const;
    /// mu = 1 - q^{-2}.
    CycScalar mu() const;

    /// Evaluate Phi_r at x (used by field sanity tests).
    CycScalar eval_cyclotomic(const CycScalar& x) const;

    CycScalar parse(const std::vector<std::string>& coeff_strings) const;

    // Arithmetic backend used by CycScalar.
    std::vector<Rational> mul_reduced(const std::vector<Rational>& a,
                                      const std::vector<Rational>& b) const;
    std::vector<Rational> inv_reduced(const std::vector<Rational>& a) const;

private:
    int r_ = 0;
    int phi_ = 0;
    std::vector<Rational> modulus_;              // Phi_r, monic, length phi_+1
    std::vector<std::vector<Rational>> powers_;  // z^j reduced, j = 0 .. 2*phi_-2
    std::vector<CycScalar> qpow_;                // q^k, k = 0 .. r-1
};

Rational parse_rational(const std::string& s);
std::string rational_string(const Rational& x);

}  // namespace cqsl2
