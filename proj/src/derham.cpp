#include "cqsl2/derham.hpp"

namespace cqsl2 {

Form& Form::operator+=(const Form& o) {
    if (o.cx_ == nullptr) return *this;
    if (cx_ == nullptr) { *this = o; return *this; }
    CQSL2_CHECK(cx_ == o.cx_ && degree_ == o.degree_, "form degree mismatch");
    if (!o.v_.empty())
        v_.add_scaled(o.v_, o.cx_->field().one());
    return *this;
}

Form& Form::operator-=(const Form& o) {
    if (o.cx_ == nullptr) return *this;
    if (cx_ == nullptr) { *this = -o; return *this; }
    CQSL2_CHECK(cx_ == o.cx_ && degree_ == o.degree_, "form degree mismatch");
    if (!o.v_.empty())
        v_.add_scaled(o.v_, -o.cx_->field().one());
    return *this;
}

Form operator*(const CycScalar& s, Form x) {
    x.v_.scale(s);
    return x;
}

Form operator-(const Form& x) { return Form(x.cx_, x.degree_, -x.v_); }

bool operator==(const Form& a, const Form& b) {
    if (a.cx_ == nullptr || b.cx_ == nullptr)
        return a.v_.empty() && b.v_.empty();
    return a.cx_ == b.cx_ && a.degree_ == b.degree_ && a.v_ == b.v_;
}

DeRhamComplex::DeRhamComplex(int r, const MatrixLoader& loader)
    : field_(r), alg_(field_), ext_(alg_) {
    std::array<LinOp, 4> cached = loader(field_);
    for (int k = 0; k < 4; ++k) {
        CQSL2_CHECK(cached[k].rows() == dim_omega(k + 1) &&
                        cached[k].cols() == dim_omega(k),
                    "cached d matrix has wrong shape");
        d_[k] = std::move(cached[k]);
    }
}

DeRhamComplex::DeRhamComplex(int r) : field_(r), alg_(field_), ext_(alg_) {
    const int r3 = alg_.dim();
    for (int k = 0; k < 4; ++k) {
        LinOp m(field_, dim_omega(k + 1), dim_omega(k));
        std::vector<std::vector<SparseVec::Entry>> rows(dim_omega(k + 1));
        const bool even = (k % 2 == 0);
        for (int inv = 0; inv < ExteriorAlgebra::kDim[k]; ++inv) {
            InvForm dInv = ext_.d(ext_.basis_form(k, inv));
            for (int w = 0; w < r3; ++w) {
                int col = flat_index(inv, w);
                // d(e_I)·w
                for (int J = 0; J < ExteriorAlgebra::kDim[k + 1]; ++J)
                    if (!dInv.coeff(J).is_zero())
                        rows[flat_index(J, w)].push_back({col, dInv.coeff(J)});
                // (-1)^k e_I ∧ d(w)
                auto dm = alg_.d_monomial(alg_.monomial_at(w));
                for (int i = 0; i < 4; ++i) {
                    if (dm[i].is_zero()) continue;
                    InvForm wi = ext_.wedge(ext_.basis_form(k, inv), ext_.e(i));
                    for (int J = 0; J < ExteriorAlgebra::kDim[k + 1]; ++J) {
                        CycScalar cJ = wi.coeff(J);
                        if (cJ.is_zero()) continue;
                        if (!even) cJ = -cJ;
                        for (const auto& e : dm[i].vec().entries())
                            rows[flat_index(J, e.idx)].push_back({col, cJ * e.val});
                    }
                }
            }
        }
        for (int i = 0; i < dim_omega(k + 1); ++i)
            m.row(i) = SparseVec::from_entries(std::move(rows[i]));
        d_[k] = std::move(m);
    }
}

Form DeRhamComplex::form(const InvForm& w, const AlgElem& f) const {
    Form out = zero_form(w.degree());
    for (int i = 0; i < ExteriorAlgebra::kDim[w.degree()]; ++i)
        if (!w.coeff(i).is_zero())
            out += form_basis(w.degree(), i, w.coeff(i) * f);
    return out;
}

Form DeRhamComplex::form_basis(int degree, int inv_idx, const AlgElem& f) const {
    return Form(this, degree, f.vec().shifted(inv_idx * alg_.dim()));
}

AlgElem DeRhamComplex::coefficient(const Form& x, int inv_idx) const {
    const int lo = inv_idx * alg_.dim(), hi = lo + alg_.dim();
    std::vector<SparseVec::Entry> ents;
    for (const auto& e : x.vec().entries())
        if (e.idx >= lo && e.idx < hi) ents.push_back({e.idx - lo, e.val});
    return AlgElem(&alg_, SparseVec::from_entries(std::move(ents)));
}

const LinOp& DeRhamComplex::d_matrix(int k) const {
    CQSL2_CHECK(k >= 0 && k <= 3, "d_k defined for k = 0..3");
    return d_[k];
}

Form DeRhamComplex::d(const Form& x) const {
    if (x.degree() == 4) return zero_form(4);  // top degree: nothing above
    return Form(this, x.degree() + 1, d_[x.degree()].apply(x.vec()));
}

Form DeRhamComplex::wedge(const Form& x, const Form& y) const {
    int p = x.degree(), s = y.degree();
    CQSL2_CHECK(p + s <= 4, "wedge degree exceeds 4");
    Form out = zero_form(p + s);
    for (int I = 0; I < ExteriorAlgebra::kDim[p]; ++I) {
        AlgElem f = coefficient(x, I);
        if (f.is_zero()) continue;
        for (int J = 0; J < ExteriorAlgebra::kDim[s]; ++J) {
            AlgElem g = coefficient(y, J);
            if (g.is_zero()) continue;
            auto pushed = ext_.push_past_word(f, ext_.basis_words(s)[J]);
            for (int K = 0; K < ExteriorAlgebra::kDim[s]; ++K) {
                if (pushed[K].is_zero()) continue;
                InvForm eIK = ext_.wedge(ext_.basis_form(p, I), ext_.basis_form(s, K));
                AlgElem hg = pushed[K] * g;
                for (int M = 0; M < ExteriorAlgebra::kDim[p + s]; ++M)
                    if (!eIK.coeff(M).is_zero())
                        out += form_basis(p + s, M, eIK.coeff(M) * hg);
            }
        }
    }
    return out;
}

Form DeRhamComplex::push_left(const AlgElem& x, const InvForm& e) const {
    CQSL2_CHECK(e.degree() == 1, "push_left expects a 1-form");
    Form out = zero_form(1);
    for (int i = 0; i < 4; ++i) {
        if (e.coeff(i).is_zero()) continue;
        auto pushed = ext_.push_left(x, i);
        for (int j = 0; j < 4; ++j)
            if (!pushed[j].is_zero())
                out += form_basis(1, j, e.coeff(i) * pushed[j]);
    }
    return out;
}

const Subspace& DeRhamComplex::closed(int k) const {
    if (!closed_[k]) {
        if (k == 4) {
            EchelonBasis eb(dim_omega(4));
            for (int i = 0; i < dim_omega(4); ++i)
                eb.insert(SparseVec::unit(i, field_.one()));
            closed_[k] = Subspace(std::move(eb));
        } else {
            closed_[k] = kernel(d_[k]);
        }
    }
    return *closed_[k];
}

const Subspace& DeRhamComplex::exact(int k) const {
    if (!exact_[k]) {
        if (k == 0)
            exact_[k] = Subspace::zero(dim_omega(0));
        else
            exact_[k] = image(d_[k - 1]);
    }
    return *exact_[k];
}

const QuotientSpace& DeRhamComplex::cohomology(int k) const {
    if (!cohom_[k]) cohom_[k] = QuotientSpace(closed(k), exact(k));
    return *cohom_[k];
}

bool DeRhamComplex::is_closed(const Form& x) const {
    if (x.degree() == 4) return true;
    return d(x).is_zero();
}

bool DeRhamComplex::is_exact(const Form& x) const {
    return exact(x.degree()).contains(x.vec());
}

std::vector<NamedCocycle> DeRhamComplex::named_cocycles() const {
    const int r = field_.r();
    const CycField& F = field_;
    const QuantumAlgebra& Q = alg_;
    auto mono = [&](int m, int n, int k) { return Q.monomial(m, n, k); };
    auto basis2 = [&](const std::string& w) {
        std::vector<int> word;
        for (char ch : w) word.push_back(ch - 'a');
        return ext_.basis_form(static_cast<int>(w.size()),
                               ext_.basis_index(static_cast<int>(w.size()), word));
    };

    std::vector<NamedCocycle> out;
    out.push_back({"one", 0, form(ext_.scalar_form(F.one()), Q.one())});
    // H^1
    out.push_back({"theta", 1, theta_form()});
    out.push_back({"h1", 1, form(ext_.e(ExteriorAlgebra::B), mono(1, 0, r - 1))});
    out.push_back({"h2", 1, form(ext_.e(ExteriorAlgebra::C), mono(r - 1, r - 1, 0))});
    out.push_back({"n", 1, form(ext_.e(ExteriorAlgebra::A), Q.one()) +
                           form(ext_.e(ExteriorAlgebra::C), mono(r - 1, 0, 1))});
    // H^2
    out.push_back({"m1", 2, form(basis2("bd"), mono(1, 0, r - 1))});
    out.push_back({"m2", 2, form(basis2("ab"), mono(1, 0, r - 1))});
    out.push_back({"m3", 2, form(basis2("ac"), mono(r - 1, r - 1, 0))});
    out.push_back({"m4", 2, form(basis2("cd"), mono(r - 1, r - 1, 0))});
    out.push_back({"m5", 2, form(basis2("ac") - basis2("cd"), mono(r - 1, 0, 1)) -
                            form(basis2("ad"), Q.one())});
    // m6 keeps the literal q^4 coefficient; the field reduces it.
    out.push_back({"m6", 2, form(basis2("bd"), mono(1, r - 1, r - 2)) +
                            form(basis2("cd"), F.q_power(4) * mono(r - 1, r - 2, r - 1))});
    // H^3
    out.push_back({"Theta", 3, form(basis2("bcd"), mono(0, r - 1, r - 1))});
    out.push_back({"h1s", 3, form(basis2("abd"), mono(1, 0, r - 1))});
    out.push_back({"h2s", 3, form(basis2("acd"), mono(r - 1, r - 1, 0))});
    out.push_back({"s", 3, form(basis2("abd"), mono(1, r - 1, r - 2)) +
                           form(basis2("acd"), F.q_power(4) * mono(r - 1, r - 2, r - 1))});
    // H^4
    out.push_back({"h4", 4, form(basis2("abcd"), mono(0, r - 1, r - 1))});
    return out;
}

NamedCocycle DeRhamComplex::named_cocycle(const std::string& name) const {
    for (auto& nc : named_cocycles())
        if (nc.name == name) return nc;
    CQSL2_CHECK(false, "unknown named cocycle: " + name);
    return {};
}

std::vector<NamedCocycleCertificate> DeRhamComplex::verify_named() const {
    std::vector<NamedCocycleCertificate> out;
    for (const auto& nc : named_cocycles()) {
        NamedCocycleCertificate cert;
        cert.name = nc.name;
        cert.degree = nc.degree;
        cert.closed = is_closed(nc.form);
        cert.exact = is_exact(nc.form);
        out.push_back(cert);
    }
    return out;
}

bool DeRhamComplex::named_span_cohomology(int degree) const {
    const QuotientSpace& H = cohomology(degree);
    std::vector<SparseVec> vecs;
    for (const auto& nc : named_cocycles())
        if (nc.degree == degree) vecs.push_back(nc.form.vec());
    Subspace classes = H.span_of_classes(vecs);
    return classes.dim() == static_cast<int>(vecs.size()) &&
           classes.dim() == H.dim();
}

LinOp DeRhamComplex::theta_map(int k) const {
    Form th = theta_form();
    const QuotientSpace& Hk = cohomology(k);
    const QuotientSpace& Hk1 = cohomology(k + 1);
    LinOp M(field_, Hk1.dim(), Hk.dim());
    for (int j = 0; j < Hk.dim(); ++j) {
        Form img = wedge(th, from_vec(k, Hk.representatives()[j]));
        auto coords = Hk1.coords(img.vec());
        for (int i = 0; i < Hk1.dim(); ++i)
            if (!coords[i].is_zero()) M.set(i, j, coords[i]);
    }
    return M;
}

ThetaSequenceReport DeRhamComplex::theta_complex_check() const {
    ThetaSequenceReport rep;
    Form th = theta_form();

    // Well-definedness: theta∧ maps closed to closed and exact to exact.
    rep.well_defined = true;
    for (int k = 0; k < 4; ++k) {
        for (const auto& v : closed(k).basis()) {
            Form w = wedge(th, from_vec(k, v));
            if (!is_closed(w)) rep.well_defined = false;
        }
        for (const auto& v : exact(k).basis()) {
            Form w = wedge(th, from_vec(k, v));
            if (!is_exact(w)) rep.well_defined = false;
        }
    }

    // Induced maps in quotient coordinates.
    std::array<LinOp, 4> maps;
    for (int k = 0; k < 4; ++k) {
        maps[k] = theta_map(k);
        rep.ranks.push_back(rref(maps[k]).rank);
    }

    // Exactness of 0 -> H0 -> H1 -> H2 -> H3 -> H4 -> 0.
    rep.exact_sequence = true;
    if (kernel(maps[0]).dim() != 0) rep.exact_sequence = false;  // injective start
    for (int k = 1; k < 4; ++k)
        if (!(image(maps[k - 1]) == kernel(maps[k]))) rep.exact_sequence = false;
    if (rep.ranks[3] != cohomology(4).dim()) rep.exact_sequence = false;  // onto

    // Printed images: theta∧h1 = m2 - m1, theta∧h2 = m3 - m4, theta∧n = m5,
    // which hold at the level of forms.
    Form th_h1 = wedge(th, named_cocycle("h1").form);
    Form th_h2 = wedge(th, named_cocycle("h2").form);
    Form th_n = wedge(th, named_cocycle("n").form);
    rep.printed_images_match =
        th_h1 == named_cocycle("m2").form - named_cocycle("m1").form &&
        th_h2 == named_cocycle("m3").form - named_cocycle("m4").form &&
        th_n == named_cocycle("m5").form;
    return rep;
}

DimsReport DeRhamComplex::dims_report() const {
    DimsReport rep;
    rep.r = field_.r();
    for (int k = 0; k <= 4; ++k) {
        rep.all[k] = dim_omega(k);
        rep.closed[k] = closed(k).dim();
        rep.exact[k] = exact(k).dim();
        rep.cohomology[k] = rep.closed[k] - rep.exact[k];
    }
    return rep;
}

}  // namespace cqsl2
