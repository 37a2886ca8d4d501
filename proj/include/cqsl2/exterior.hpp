#pragma once

#include <array>
#include <map>
#include <vector>

#include "cqsl2/algebra.hpp"

namespace cqsl2 {

class ExteriorAlgebra;

/// Element of Lambda^k (right-invariant forms) over the fixed ordered bases
/// {1}, {e_a..e_d}, {e_ab,e_ac,e_ad,e_bc,e_bd,e_cd}, {e_abc,..}, {e_abcd}.
class InvForm {
public:
    InvForm() = default;
    InvForm(const ExteriorAlgebra* ext, int degree);

    const ExteriorAlgebra* exterior() const { return ext_; }
    int degree() const { return degree_; }
    bool is_zero() const;
    const std::vector<CycScalar>& coeffs() const { return c_; }
    const CycScalar& coeff(int i) const { return c_[i]; }
    void set_coeff(int i, CycScalar v) { c_[i] = std::move(v); }
    void add_coeff(int i, const CycScalar& v) { c_[i] += v; }

    InvForm& operator+=(const InvForm& o);
    InvForm& operator-=(const InvForm& o);
    friend InvForm operator+(InvForm a, const InvForm& b) { return a += b; }
    friend InvForm operator-(InvForm a, const InvForm& b) { return a -= b; }
    friend InvForm operator*(const CycScalar& s, InvForm x);
    friend InvForm operator-(const InvForm& x);
    friend bool operator==(const InvForm& a, const InvForm& b);
    friend bool operator!=(const InvForm& a, const InvForm& b) { return !(a == b); }

private:
    const ExteriorAlgebra* ext_ = nullptr;
    int degree_ = 0;
    std::vector<CycScalar> c_;
};

/// The 16-dimensional braiding on Lambda^1 ⊗ Lambda^1, the braided
/// antisymmetrizers cutting out Lambda, the wedge product by confluent
/// rewriting of words to ordered monomials, d on invariant forms, and the
/// bimodule commutation pushing algebra coefficients to the right.
/// All tables are computed once per r and shared immutably.
class ExteriorAlgebra {
public:
    static constexpr std::array<int, 5> kDim = {1, 4, 6, 4, 1};
    enum Letter { A = 0, B = 1, C = 2, D = 3 };

    explicit ExteriorAlgebra(const QuantumAlgebra& alg);

    const QuantumAlgebra& algebra() const { return *alg_; }
    const CycField& field() const { return alg_->field(); }
    static int dim(int degree) { return kDim[degree]; }

    const std::vector<std::vector<int>>& basis_words(int degree) const;
    int basis_index(int degree, const std::vector<int>& word) const;
    std::string basis_name(int degree, int idx) const;

    InvForm zero(int degree) const { return InvForm(this, degree); }
    InvForm basis_form(int degree, int idx) const;
    InvForm e(int letter) const { return basis_form(1, letter); }
    InvForm theta() const;               // e_a + e_d
    InvForm e_z() const;                 // q e_a - q^{-1} e_d
    InvForm top() const { return basis_form(4, 0); }
    InvForm scalar_form(const CycScalar& s) const;

    InvForm wedge(const InvForm& x, const InvForm& y) const;
    /// Wedge of letters as a word, rewritten to the ordered basis.
    InvForm wedge_word(const std::vector<int>& word) const;
    /// d = -[theta, .} (commutator on even degree, anticommutator on odd).
    InvForm d(const InvForm& x) const;

    /// The 16x16 braiding on the ordered basis e_i ⊗ e_j, (i,j) -> 4i+j.
    const LinOp& braiding() const { return psi_; }
    /// Psi acting at tensor positions (pos, pos+1) of (Lambda^1)^{⊗n}.
    LinOp braiding_at(int n, int pos) const;
    /// [n, -Psi] = id - Psi_12 + Psi_12 Psi_23 - ...
    LinOp braided_integer(int n) const;
    /// A_n = (id ⊗ A_{n-1}) [n, -Psi]
    LinOp braided_factorial(int n) const;
    /// (Lambda^1)^{⊗n} -> Lambda^n, tensor word to wedge of its letters.
    LinOp wedge_projector(int n) const;

    /// x . e_letter rewritten as sum_j e_j . (result[j]).
    std::array<AlgElem, 4> push_left(const AlgElem& x, int letter) const;
    /// x . e_J for a basis word J: coefficients over the Lambda^|J| basis.
    std::vector<AlgElem> push_past_word(const AlgElem& x,
                                        const std::vector<int>& word) const;

private:
    struct PushMat {
        // w . e_i = sum_j e_j . m[j][i]
        std::array<std::array<AlgElem, 4>, 4> m;
    };
    const PushMat& push_matrix(int mono_idx) const;
    static PushMat mat_mul(const PushMat& x, const PushMat& y);

    const QuantumAlgebra* alg_;
    std::vector<std::vector<std::vector<int>>> words_;  // basis words per degree
    // Wedge structure constants: tab_[di][dj][bi * dim(dj) + bj] is the
    // coefficient vector of (basis bi of deg di) ∧ (basis bj of deg dj).
    std::array<std::array<std::vector<std::vector<CycScalar>>, 5>, 5> tab_;
    LinOp psi_;
    std::array<PushMat, 4> push_gen_;
    mutable std::map<int, PushMat> push_cache_;
};

}  // namespace cqsl2
