#pragma once

#include <array>
#include <string>

#include "cqsl2/linalg.hpp"

namespace cqsl2 {

/// Normal-form basis monomial a^m b^n c^k of the reduced algebra,
/// exponents in [0, r-1].
struct Monomial {
    int m = 0, n = 0, k = 0;
    friend bool operator==(const Monomial&, const Monomial&) = default;
};

class QuantumAlgebra;

/// Element of the r^3-dimensional reduced algebra: sparse coefficient
/// vector over the monomial basis.  Carries its algebra for operator
/// ergonomics; a default value is the zero element.
class AlgElem {
public:
    AlgElem() = default;
    AlgElem(const QuantumAlgebra* alg, SparseVec v) : alg_(alg), v_(std::move(v)) {}

    const QuantumAlgebra* algebra() const { return alg_; }
    const SparseVec& vec() const { return v_; }
    bool is_zero() const { return v_.empty(); }

    AlgElem& operator+=(const AlgElem& o);
    AlgElem& operator-=(const AlgElem& o);
    friend AlgElem operator+(AlgElem a, const AlgElem& b) { return a += b; }
    friend AlgElem operator-(AlgElem a, const AlgElem& b) { return a -= b; }
    friend AlgElem operator*(const AlgElem& a, const AlgElem& b);
    friend AlgElem operator*(const CycScalar& c, AlgElem x);
    friend AlgElem operator-(const AlgElem& x);
    friend bool operator==(const AlgElem& a, const AlgElem& b);
    friend bool operator!=(const AlgElem& a, const AlgElem& b) { return !(a == b); }

private:
    const QuantumAlgebra* alg_ = nullptr;
    SparseVec v_;
};

/// The reduced quantum group C_q[SL_2] at q^r = 1: relations ba = q ab,
/// ca = q ac, cb = bc together with b^r = c^r = 0 and a^r = 1, with the
/// redundant generator d eliminated as d = a^{r-1}(1 + q^{-1} b c).
class QuantumAlgebra {
public:
    explicit QuantumAlgebra(const CycField& F);

    const CycField& field() const { return *F_; }
    int r() const { return r_; }
    int dim() const { return dim_; }

    int index_of(const Monomial& w) const { return (w.m * r_ + w.n) * r_ + w.k; }
    Monomial monomial_at(int idx) const;

    AlgElem zero() const { return AlgElem(this, SparseVec()); }
    AlgElem one() const { return monomial(0, 0, 0); }
    AlgElem monomial(int m, int n, int k, CycScalar coeff = CycScalar()) const;
    AlgElem a() const { return monomial(1, 0, 0); }
    AlgElem b() const { return monomial(0, 1, 0); }
    AlgElem c() const { return monomial(0, 0, 1); }
    /// d = a^{r-1}(1 + q^{-1} b c), eliminated at construction time.
    AlgElem d() const;
    AlgElem scalar(const CycScalar& s) const;

    AlgElem mul(const AlgElem& x, const AlgElem& y) const;
    AlgElem pow(const AlgElem& x, int e) const;

    /// Matrix of y -> y*x in the monomial basis (r^3 x r^3).
    LinOp right_mult_matrix(const AlgElem& x) const;

    /// d(a^m b^n c^k): coefficients of e_a, e_b, e_c, e_d with the algebra
    /// part written on the right.  Index shifts on a wrap modulo r; shifts
    /// that would push b or c out of range only occur with a vanishing
    /// q-integer prefactor or die against b^r = c^r = 0.
    std::array<AlgElem, 4> d_monomial(const Monomial& w) const;
    std::array<AlgElem, 4> d_elem(const AlgElem& x) const;

    std::string monomial_string(const Monomial& w) const;
    std::string to_string(const AlgElem& x) const;

private:
    const CycField* F_;
    int r_;
    int dim_;
};

}  // namespace cqsl2
