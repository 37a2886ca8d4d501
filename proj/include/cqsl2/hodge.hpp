#pragma once

#include "cqsl2/derham.hpp"
#include "cqsl2/numberfield.hpp"

namespace cqsl2 {

/// The Killing-form metric eta = eta^{ij} e_i ⊗ e_j at a chosen lambda.
struct Metric {
    CycScalar lambda;
    std::array<std::array<CycScalar, 4>, 4> eta;
};

/// epsilon_{ijkl} defined by e_i∧e_j∧e_k∧e_l = epsilon_{ijkl} Top.
class EpsTensor {
public:
    CycScalar& at(int i, int j, int k, int l) { return v_[((i * 4 + j) * 4 + k) * 4 + l]; }
    const CycScalar& at(int i, int j, int k, int l) const {
        return v_[((i * 4 + j) * 4 + k) * 4 + l];
    }

private:
    std::array<CycScalar, 256> v_;
};

struct Spin0Report {
    bool zero_modes_span = false;    // the 13 listed monomials span ker box_0
    bool massive_modes_ok = false;   // the 9 listed elements, eigenvalue 6(q+1)
    int kernel_dim = 0;
    std::vector<CycScalar> field_eigenvalues;
    bool witness_found = false;      // ker(box - w)^2 strictly larger
    CycScalar witness_eigenvalue;
    int witness_kernel_dim = 0;
    int witness_kernel_sq_dim = 0;
};

/// Named harmonic representative with its expected Hodge-star behavior.
struct HarmonicRep {
    std::string name;
    Form form;
    int star_sign = 0;  // +1 / -1 for star eigenvector claims, 0 for none
};

/// Hodge star from the explicit closed-form table, codifferential, Laplacian,
/// harmonic spaces, and the spin-0 spectrum certificates.
class HodgeStructure {
public:
    explicit HodgeStructure(const DeRhamComplex& cx);

    const DeRhamComplex& complex() const { return *cx_; }
    const CycField& field() const { return cx_->field(); }

    static Metric metric_with_lambda(const ExteriorAlgebra& ext, const CycScalar& lambda);
    const Metric& metric() const { return metric_; }
    /// The lambda making the eta coefficient matrix singular.
    CycScalar degenerate_lambda() const;
    static bool metric_nondegenerate(const Metric& m);
    /// wedge(eta) as an invariant 2-form (zero iff quantum-symmetric).
    InvForm metric_wedge(const Metric& m) const;

    const EpsTensor& eps() const { return eps_; }

    /// Lambda-level star: Lambda^k -> Lambda^{4-k}.
    const LinOp& star_inv(int k) const { return star_inv_[k]; }
    /// Star on Omega^k (right-module extension of the table).
    const LinOp& star(int k) const { return star_[k]; }
    /// Star scale on degree 0: star(1) = Top * c0.
    const CycScalar& star0_scale() const { return c0_; }

    /// Star on Lambda^k derived from eps and eta with the stated
    /// normalizations d_1, d_2, d_3 (k = 1 requires [3]_q != 0); evaluated on
    /// all tensor words so agreement with the table also certifies
    /// well-definedness on the quotient.
    bool derived_star_matches(int k) const;

    /// delta_k: Omega^k -> Omega^{k-1} (zero map for k = 0).
    const LinOp& delta(int k) const { return delta_[k]; }
    const LinOp& laplacian(int k) const { return box_[k]; }

    const Subspace& harmonic(int k) const;
    std::array<int, 5> harmonic_dims() const;
    std::array<int, 5> kernel_box_dims() const;

    /// ±1 eigenspaces of star on Lambda^2.
    std::pair<Subspace, Subspace> selfdual_split_inv() const;
    /// ±1 eigenspaces of star on Omega^2.
    const Subspace& selfdual_omega(bool plus) const;

    bool theta_coexact() const;
    bool star_Theta_not_closed() const;
    /// Harmonic representatives h3, h1±, h2±, h3± (r = 3 exponents
    /// generalized through r where monomials allow).
    std::vector<HarmonicRep> harmonic_reps() const;
    bool is_harmonic(const Form& x) const;
    /// Classes of H^3 with harmonic representatives equal ker(theta∧|H^3).
    bool harmonic_h3_is_theta_kernel() const;

    Spin0Report spin0_spectrum_report() const;

private:
    void build_stars();
    void calibrate_scale();

    const DeRhamComplex* cx_;
    Metric metric_;
    EpsTensor eps_;
    CycScalar c0_, c4_;
    std::array<LinOp, 5> star_inv_;  // Lambda-level
    std::array<LinOp, 5> star_;      // Omega-level
    std::array<LinOp, 5> delta_;     // delta_0 = zero map
    std::array<LinOp, 5> box_;
    mutable std::array<std::optional<Subspace>, 5> harmonic_;
    mutable std::optional<Subspace> sd_plus_, sd_minus_;
};

}  // namespace cqsl2
