#pragma once

#include <functional>
#include <optional>
#include <string>

#include "cqsl2/exterior.hpp"

namespace cqsl2 {

class DeRhamComplex;

/// Element of Omega^k ≅ Lambda^k ⊗ A: coefficient vector of length
/// dim(Lambda^k)·r^3 indexed by (invariant basis element, monomial), the
/// algebra coefficients written to the right of the invariant forms.
class Form {
public:
    Form() = default;
    Form(const DeRhamComplex* cx, int degree, SparseVec v)
        : cx_(cx), degree_(degree), v_(std::move(v)) {}

    const DeRhamComplex* complex() const { return cx_; }
    int degree() const { return degree_; }
    const SparseVec& vec() const { return v_; }
    bool is_zero() const { return v_.empty(); }

    Form& operator+=(const Form& o);
    Form& operator-=(const Form& o);
    friend Form operator+(Form a, const Form& b) { return a += b; }
    friend Form operator-(Form a, const Form& b) { return a -= b; }
    friend Form operator*(const CycScalar& s, Form x);
    friend Form operator-(const Form& x);
    friend bool operator==(const Form& a, const Form& b);
    friend bool operator!=(const Form& a, const Form& b) { return !(a == b); }

private:
    const DeRhamComplex* cx_ = nullptr;
    int degree_ = 0;
    SparseVec v_;
};

/// A catalogued cohomology representative, generalized over r through
/// the exponents of its coefficients.
struct NamedCocycle {
    std::string name;
    int degree = 0;
    Form form;
};

struct NamedCocycleCertificate {
    std::string name;
    int degree = 0;
    bool closed = false;
    bool exact = false;
};

struct ThetaSequenceReport {
    bool well_defined = false;           // theta∧ preserves closed and exact
    std::vector<int> ranks;              // rank of theta_k, k = 0..3
    bool exact_sequence = false;         // im theta_k = ker theta_{k+1}, ends exact
    bool printed_images_match = false;   // theta∧h1 = m2 - m1 etc. (r = 3 forms)
};

struct DimsReport {
    int r = 0;
    std::array<int, 5> all{};
    std::array<int, 5> closed{};
    std::array<int, 5> exact{};
    std::array<int, 5> cohomology{};
};

/// Assembles Omega^k ≅ Lambda^k ⊗ A with the exact matrices d_k, computes
/// cohomology with canonical echelon-residue representatives, and certifies
/// the named cocycles and the theta∧ sequence.  Kernel and cohomology
/// accessors memoize on first use; share across threads only after warming
/// them from a single thread.
class DeRhamComplex {
public:
    using MatrixLoader = std::function<std::array<LinOp, 4>(const CycField&)>;

    explicit DeRhamComplex(int r);
    /// Construct from cached d matrices produced by `loader` against this
    /// complex's own field (shapes are validated; content integrity is the
    /// caller's responsibility, e.g. via a cache checksum).
    DeRhamComplex(int r, const MatrixLoader& loader);

    const CycField& field() const { return field_; }
    const QuantumAlgebra& algebra() const { return alg_; }
    const ExteriorAlgebra& exterior() const { return ext_; }
    int r() const { return field_.r(); }
    int dim_omega(int k) const { return ExteriorAlgebra::kDim[k] * alg_.dim(); }
    int flat_index(int inv_idx, int mono_idx) const {
        return inv_idx * alg_.dim() + mono_idx;
    }

    // Form construction and arithmetic.
    Form zero_form(int degree) const { return Form(this, degree, SparseVec()); }
    Form form(const InvForm& w, const AlgElem& f) const;
    Form form_basis(int degree, int inv_idx, const AlgElem& f) const;
    Form from_vec(int degree, SparseVec v) const { return Form(this, degree, std::move(v)); }
    Form theta_form() const { return form(ext_.theta(), alg_.one()); }
    /// Coefficient of the invariant basis element inv_idx.
    AlgElem coefficient(const Form& x, int inv_idx) const;

    /// d_k as a dim(Omega^{k+1}) x dim(Omega^k) matrix, k = 0..3.
    const LinOp& d_matrix(int k) const;
    Form d(const Form& x) const;
    Form wedge(const Form& x, const Form& y) const;
    /// x·e rewritten with all algebra coefficients on the right.
    Form push_left(const AlgElem& x, const InvForm& e) const;

    const Subspace& closed(int k) const;
    const Subspace& exact(int k) const;
    const QuotientSpace& cohomology(int k) const;
    bool is_closed(const Form& x) const;
    bool is_exact(const Form& x) const;

    std::vector<NamedCocycle> named_cocycles() const;
    NamedCocycle named_cocycle(const std::string& name) const;
    std::vector<NamedCocycleCertificate> verify_named() const;
    /// True iff the named representatives of each degree are independent
    /// modulo exact forms and span the cohomology.
    bool named_span_cohomology(int degree) const;

    /// Induced map H^k -> H^{k+1} of theta∧ in quotient coordinates.
    LinOp theta_map(int k) const;
    ThetaSequenceReport theta_complex_check() const;

    DimsReport dims_report() const;

private:
    CycField field_;
    QuantumAlgebra alg_;
    ExteriorAlgebra ext_;
    std::array<LinOp, 4> d_;
    mutable std::array<std::optional<Subspace>, 5> closed_;
    mutable std::array<std::optional<Subspace>, 5> exact_;
    mutable std::array<std::optional<QuotientSpace>, 5> cohom_;
};

}  // namespace cqsl2
