#include "cqsl2/hodge.hpp"

#include <algorithm>

namespace cqsl2 {

namespace {

// kron(S, Id_{r^3}) in the (invariant index, monomial) flat layout.
LinOp extend_right_module(const LinOp& s, int r3) {
    LinOp out(s.field(), s.rows() * r3, s.cols() * r3);
    for (int i = 0; i < s.rows(); ++i)
        for (const auto& e : s.row(i).entries())
            for (int w = 0; w < r3; ++w)
                out.set(i * r3 + w, e.idx * r3 + w, e.val);
    return out;
}

}  // namespace

HodgeStructure::HodgeStructure(const DeRhamComplex& cx) : cx_(&cx) {
    const CycField& F = cx.field();
    const ExteriorAlgebra& ext = cx.exterior();

    // Metric at the star-compatible lambda = q(1-q-q^2)/[2]_q.
    CycScalar lambda = F.q_power(1) * (F.one() - F.q_power(1) - F.q_power(2)) /
                       F.q_int(2);
    metric_ = metric_with_lambda(ext, lambda);
    CQSL2_CHECK(metric_nondegenerate(metric_), "metric degenerate at chosen lambda");
    CQSL2_CHECK(metric_wedge(metric_).is_zero(), "metric not quantum-symmetric");

    // Antisymmetrization tensor from quadruple wedges.
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            for (int k = 0; k < 4; ++k)
                for (int l = 0; l < 4; ++l) {
                    InvForm w = ext.wedge_word({i, j, k, l});
                    eps_.at(i, j, k, l) = w.coeff(0);
                }

    build_stars();
    calibrate_scale();

    const int r3 = cx.algebra().dim();
    star_[0] = LinOp(F, r3, r3);
    for (int w = 0; w < r3; ++w) star_[0].set(w, w, c0_);
    star_[4] = LinOp(F, r3, r3);
    for (int w = 0; w < r3; ++w) star_[4].set(w, w, c4_);
    star_inv_[0] = LinOp(F, 1, 1);
    star_inv_[0].set(0, 0, c0_);
    star_inv_[4] = LinOp(F, 1, 1);
    star_inv_[4].set(0, 0, c4_);

    // delta_k = star d star; delta_0 is the zero map (kernel = everything).
    delta_[0] = LinOp(F, 1, cx.dim_omega(0));
    for (int k = 1; k <= 4; ++k)
        delta_[k] = star_[4 - (k - 1)]
                        .compose(cx.d_matrix(4 - k))
                        .compose(star_[k]);

    for (int k = 0; k <= 4; ++k) {
        if (k == 0) {
            box_[0] = delta_[1].compose(cx.d_matrix(0));
        } else if (k == 4) {
            box_[4] = cx.d_matrix(3).compose(delta_[4]);
        } else {
            box_[k] = delta_[k + 1].compose(cx.d_matrix(k)) +
                      cx.d_matrix(k - 1).compose(delta_[k]);
        }
    }
}

Metric HodgeStructure::metric_with_lambda(const ExteriorAlgebra& ext,
                                          const CycScalar& lambda) {
    const CycField& F = ext.field();
    Metric m;
    m.lambda = lambda;
    for (auto& row : m.eta)
        for (auto& v : row) v = F.zero();
    using L = ExteriorAlgebra;
    CycScalar q = F.q_power(1), one = F.one();
    m.eta[L::B][L::C] += one;
    m.eta[L::C][L::B] += F.q_power(2);
    // (q e_a - e_d) ⊗ (q e_a - e_d) / [2]_q
    CycScalar inv2 = F.q_int(2).inv();
    m.eta[L::A][L::A] += q * q * inv2;
    m.eta[L::A][L::D] -= q * inv2;
    m.eta[L::D][L::A] -= q * inv2;
    m.eta[L::D][L::D] += inv2;
    m.eta[L::A][L::A] += q * (q - one);
    // lambda theta ⊗ theta
    m.eta[L::A][L::A] += lambda;
    m.eta[L::A][L::D] += lambda;
    m.eta[L::D][L::A] += lambda;
    m.eta[L::D][L::D] += lambda;
    return m;
}

CycScalar HodgeStructure::degenerate_lambda() const {
    const CycField& F = field();
    return F.q_power(1) * (F.one() - F.q_power(1)) / F.q_int(4);
}

bool HodgeStructure::metric_nondegenerate(const Metric& m) {
    const CycField& F = *m.lambda.field();
    LinOp g(F, 4, 4);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) g.set(i, j, m.eta[i][j]);
    return rref(g).rank == 4;
}

InvForm HodgeStructure::metric_wedge(const Metric& m) const {
    const ExteriorAlgebra& ext = cx_->exterior();
    InvForm acc = ext.zero(2);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            if (!m.eta[i][j].is_zero())
                acc += m.eta[i][j] * ext.wedge_word({i, j});
    return acc;
}

void HodgeStructure::build_stars() {
    const CycField& F = field();
    const ExteriorAlgebra& ext = cx_->exterior();
    const int r3 = cx_->algebra().dim();
    CycScalar one = F.one(), mu = F.mu();
    CycScalar q2 = F.q_power(2), qm2 = F.q_power(-2);
    CycScalar inv22 = F.q_int(2, 2).inv();  // 1/[2]_{q^2}
    using L = ExteriorAlgebra;

    auto idx3 = [&](const char* w) {
        std::vector<int> word;
        for (const char* p = w; *p; ++p) word.push_back(*p - 'a');
        return ext.basis_index(3, word);
    };
    auto idx2 = [&](const char* w) {
        std::vector<int> word;
        for (const char* p = w; *p; ++p) word.push_back(*p - 'a');
        return ext.basis_index(2, word);
    };

    LinOp s1(F, 4, 4);
    s1.set(idx3("abc"), L::A, -one);
    s1.set(idx3("bcd"), L::A, -mu);
    s1.set(idx3("abd"), L::B, -one);
    s1.set(idx3("acd"), L::C, q2);
    s1.set(idx3("bcd"), L::D, one);
    star_inv_[1] = s1;

    LinOp s2(F, 6, 6);
    s2.set(idx2("ab"), idx2("ab"), -one);
    s2.set(idx2("bd"), idx2("ab"), F.rat(2) * mu);
    s2.set(idx2("ac"), idx2("ac"), one);
    s2.set(idx2("bc"), idx2("ad"), F.rat(2) * inv22);
    s2.set(idx2("ad"), idx2("ad"), -q2 * mu * inv22);
    s2.set(idx2("ad"), idx2("bc"), F.rat(2) * q2 * inv22);
    s2.set(idx2("bc"), idx2("bc"), q2 * mu * inv22);
    s2.set(idx2("bd"), idx2("bd"), one);
    s2.set(idx2("cd"), idx2("cd"), -one);
    star_inv_[2] = s2;

    LinOp s3(F, 4, 4);
    s3.set(L::A, idx3("abc"), -one);
    s3.set(L::D, idx3("abc"), -mu);
    s3.set(L::B, idx3("abd"), -one);
    s3.set(L::C, idx3("acd"), qm2);
    s3.set(L::D, idx3("bcd"), one);
    star_inv_[3] = s3;

    star_[1] = extend_right_module(star_inv_[1], r3);
    star_[2] = extend_right_module(star_inv_[2], r3);
    star_[3] = extend_right_module(star_inv_[3], r3);
}

void HodgeStructure::calibrate_scale() {
    const CycField& F = field();
    // Base operator for box_0 with the degree-4 star scale left out.
    LinOp base = cx_->d_matrix(3).compose(star_[1]).compose(cx_->d_matrix(0));
    // star_4 with c4 = 1 is the identity in the flat layout, so base already
    // maps Omega^0 to Omega^0 via Omega^4 ≅ A.
    if (F.r() == 3) {
        const QuantumAlgebra& alg = cx_->algebra();
        int ia2 = alg.index_of({2, 0, 0});
        SparseVec u = base.apply(SparseVec::unit(ia2, F.one()));
        CQSL2_CHECK(u.nnz() == 1 && u.leading_index() == ia2,
                    "a^2 is not an eigenvector of the uncalibrated Laplacian");
        CycScalar s = u.entries().front().val;
        CycScalar target = F.rat(6) * (F.q_power(1) + F.one());
        c4_ = target / s;
    } else {
        // The r = 3 calibration lands on 1, so star(1) = Top and
        // star(Top) = 1 for every r.  Kernel dimensions are scale
        // independent either way.
        c4_ = F.one();
    }
    c0_ = c4_.inv();
}

const Subspace& HodgeStructure::harmonic(int k) const {
    if (!harmonic_[k]) {
        if (k == 0)
            harmonic_[k] = cx_->closed(0);
        else
            harmonic_[k] = Subspace::intersect(cx_->closed(k), kernel(delta_[k]));
    }
    return *harmonic_[k];
}

std::array<int, 5> HodgeStructure::harmonic_dims() const {
    std::array<int, 5> out;
    for (int k = 0; k <= 4; ++k) out[k] = harmonic(k).dim();
    return out;
}

std::array<int, 5> HodgeStructure::kernel_box_dims() const {
    std::array<int, 5> out;
    for (int k = 0; k <= 4; ++k) out[k] = kernel(box_[k]).dim();
    return out;
}

std::pair<Subspace, Subspace> HodgeStructure::selfdual_split_inv() const {
    const CycField& F = field();
    LinOp id = LinOp::identity(F, 6);
    return {kernel(star_inv_[2] - id), kernel(star_inv_[2] + id)};
}

const Subspace& HodgeStructure::selfdual_omega(bool plus) const {
    auto& cache = plus ? sd_plus_ : sd_minus_;
    if (!cache) {
        const CycField& F = field();
        LinOp id = LinOp::identity(F, cx_->dim_omega(2));
        cache = kernel(plus ? star_[2] - id : star_[2] + id);
    }
    return *cache;
}

bool HodgeStructure::derived_star_matches(int k) const {
    const CycField& F = field();
    const ExteriorAlgebra& ext = cx_->exterior();
    CycScalar norm;
    if (k == 1) {
        CycScalar q3 = F.q_int(3);
        CQSL2_CHECK(!q3.is_zero(), "derived star on degree 1 needs [3]_q != 0");
        norm = F.rat(2) * F.q_power(2) *
               (F.one() - F.q_power(1) + F.q_power(2)) * q3;
    } else if (k == 2) {
        norm = F.q_power(2) * F.q_int(2, 2);
    } else {
        norm = F.q_power(2);
    }
    CycScalar ninv = norm.inv();
    const auto& eta = metric_.eta;

    if (k == 1) {
        for (int i = 0; i < 4; ++i) {
            InvForm acc = ext.zero(3);
            for (int j = 0; j < 4; ++j)
                for (int kk = 0; kk < 4; ++kk)
                    for (int l = 0; l < 4; ++l) {
                        const CycScalar& e = eps_.at(i, j, kk, l);
                        if (e.is_zero()) continue;
                        for (int m = 0; m < 4; ++m)
                            for (int n = 0; n < 4; ++n)
                                for (int p = 0; p < 4; ++p) {
                                    CycScalar coeff = e * eta[j][m] * eta[kk][n] * eta[l][p];
                                    if (coeff.is_zero()) continue;
                                    acc += (ninv * coeff) * ext.wedge_word({p, n, m});
                                }
                    }
            InvForm table = ext.zero(3);
            for (int o = 0; o < 4; ++o)
                table.add_coeff(o, star_inv_[1].at(o, i));
            if (!(acc == table)) return false;
        }
        return true;
    }
    if (k == 2) {
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) {
                InvForm acc = ext.zero(2);
                for (int kk = 0; kk < 4; ++kk)
                    for (int l = 0; l < 4; ++l) {
                        const CycScalar& e = eps_.at(i, j, kk, l);
                        if (e.is_zero()) continue;
                        for (int m = 0; m < 4; ++m)
                            for (int n = 0; n < 4; ++n) {
                                CycScalar coeff = e * eta[kk][m] * eta[l][n];
                                if (coeff.is_zero()) continue;
                                acc += (ninv * coeff) * ext.wedge_word({n, m});
                            }
                    }
                // compare against star applied to the class of e_i ∧ e_j
                InvForm w = ext.wedge_word({i, j});
                InvForm expect = ext.zero(2);
                for (int o = 0; o < 6; ++o) {
                    if (w.coeff(o).is_zero()) continue;
                    for (int t = 0; t < 6; ++t)
                        expect.add_coeff(t, star_inv_[2].at(t, o) * w.coeff(o));
                }
                if (!(acc == expect)) return false;
            }
        return true;
    }
    // k == 3
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            for (int kk = 0; kk < 4; ++kk) {
                InvForm acc = ext.zero(1);
                for (int l = 0; l < 4; ++l) {
                    const CycScalar& e = eps_.at(i, j, kk, l);
                    if (e.is_zero()) continue;
                    for (int m = 0; m < 4; ++m) {
                        CycScalar coeff = e * eta[l][m];
                        if (!coeff.is_zero()) acc.add_coeff(m, ninv * coeff);
                    }
                }
                InvForm w = ext.wedge_word({i, j, kk});
                InvForm expect = ext.zero(1);
                for (int o = 0; o < 4; ++o) {
                    if (w.coeff(o).is_zero()) continue;
                    for (int t = 0; t < 4; ++t)
                        expect.add_coeff(t, star_inv_[3].at(t, o) * w.coeff(o));
                }
                if (!(acc == expect)) return false;
            }
    return true;
}

bool HodgeStructure::theta_coexact() const {
    return image(delta_[2]).contains(cx_->theta_form().vec());
}

bool HodgeStructure::star_Theta_not_closed() const {
    Form Theta = cx_->named_cocycle("Theta").form;
    SparseVec st = star_[3].apply(Theta.vec());
    return !cx_->d_matrix(1).apply(st).empty();
}

std::vector<HarmonicRep> HodgeStructure::harmonic_reps() const {
    const CycField& F = field();
    const QuantumAlgebra& alg = cx_->algebra();
    const ExteriorAlgebra& ext = cx_->exterior();
    const int r = F.r();
    AlgElem d = alg.d();
    AlgElem d2b = d * d * alg.b();
    AlgElem a2c = alg.monomial(2 % r, 0, 1);
    AlgElem acr1 = alg.monomial(1, 0, r - 1);
    AlgElem ar1br1 = alg.monomial(r - 1, r - 1, 0);
    auto b2 = [&](const char* w) {
        std::vector<int> word;
        for (const char* p = w; *p; ++p) word.push_back(*p - 'a');
        return ext.basis_form(2, ext.basis_index(2, word));
    };
    CycScalar q = F.q_power(1), q2 = F.q_power(2), mu = F.mu();

    std::vector<HarmonicRep> out;
    out.push_back({"h3", cx_->form(q * ext.e_z(), alg.one()) -
                             cx_->form(q2 * ext.e(ExteriorAlgebra::B), d2b) +
                             cx_->form(ext.e(ExteriorAlgebra::C), a2c),
                   0});
    out.push_back({"h1+", cx_->form(b2("bd"), acr1), +1});
    out.push_back({"h1-", cx_->form(b2("ab") - mu * b2("bd"), acr1), -1});
    out.push_back({"h2+", cx_->form(b2("ac"), ar1br1), +1});
    out.push_back({"h2-", cx_->form(b2("cd"), ar1br1), -1});
    out.push_back({"h3+", cx_->form(b2("bd"), d2b) + cx_->form(b2("ac"), a2c) -
                              cx_->form(b2("ad") + b2("bc"), alg.one()),
                   +1});
    out.push_back({"h3-", cx_->form(q * b2("cd"), a2c) +
                              cx_->form(b2("ab") - mu * b2("bd"), d2b) +
                              cx_->form(b2("ad") - F.q_power(-2) * b2("bc"), alg.one()),
                   -1});
    return out;
}

bool HodgeStructure::is_harmonic(const Form& x) const {
    if (!cx_->is_closed(x)) return false;
    return delta_[x.degree()].apply(x.vec()).empty();
}

bool HodgeStructure::harmonic_h3_is_theta_kernel() const {
    const QuotientSpace& H3 = cx_->cohomology(3);
    Subspace harm_classes = H3.span_of_classes(harmonic(3).basis());
    Subspace theta_ker = kernel(cx_->theta_map(3));
    return harm_classes == theta_ker && harm_classes.dim() == 3;
}

Spin0Report HodgeStructure::spin0_spectrum_report() const {
    const CycField& F = field();
    CQSL2_CHECK(F.r() == 3, "spin-0 spectrum certificate is pinned at r = 3");
    const QuantumAlgebra& alg = cx_->algebra();
    Spin0Report rep;

    const LinOp& box0 = box_[0];
    Subspace ker = kernel(box0);
    rep.kernel_dim = ker.dim();

    AlgElem a = alg.a(), b = alg.b(), c = alg.c(), d = alg.d();
    std::vector<AlgElem> zero_modes = {
        alg.one(), a, b, c, d,
        a * b * b, a * a * b, d * b * b, d * d * b,
        a * c * c, a * a * c, d * c * c, d * d * c};
    EchelonBasis span(alg.dim());
    bool all_in = true;
    for (const auto& f : zero_modes) {
        if (!ker.contains(f.vec())) all_in = false;
        span.insert(f.vec());
    }
    rep.zero_modes_span = all_in && span.dim() == 13 && ker.dim() == 13;

    CycScalar ev = F.rat(6) * (F.q_power(1) + F.one());
    std::vector<AlgElem> massive = {a * a, b * b, c * c, d * d,
                                    a * b, a * c, d * b, d * c,
                                    b * c - alg.one()};
    rep.massive_modes_ok = true;
    for (const auto& f : massive) {
        SparseVec lhs = box0.apply(f.vec());
        if (!(lhs == (ev * f.vec()))) rep.massive_modes_ok = false;
    }

    Poly p = characteristic_polynomial(box0);
    rep.field_eigenvalues = roots_in_field_r3(F, p);
    std::sort(rep.field_eigenvalues.begin(), rep.field_eigenvalues.end(),
              [](const CycScalar& x, const CycScalar& y) {
                  return x.str() < y.str();
              });
    LinOp id = LinOp::identity(F, box0.rows());
    for (const auto& lam : rep.field_eigenvalues) {
        LinOp shifted = box0 - id.scaled(lam);
        int k1 = kernel(shifted).dim();
        if (k1 == 0) continue;
        int k2 = kernel(shifted.compose(shifted)).dim();
        if (k2 > k1) {
            rep.witness_found = true;
            rep.witness_eigenvalue = lam;
            rep.witness_kernel_dim = k1;
            rep.witness_kernel_sq_dim = k2;
            break;
        }
    }
    return rep;
}

}  // namespace cqsl2
