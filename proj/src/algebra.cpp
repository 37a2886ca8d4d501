#include "cqsl2/algebra.hpp"

namespace cqsl2 {

AlgElem& AlgElem::operator+=(const AlgElem& o) {
    if (o.alg_ == nullptr) return *this;
    if (alg_ == nullptr) { *this = o; return *this; }
    CQSL2_CHECK(alg_ == o.alg_, "mixed algebras");
    if (!o.v_.empty())
        v_.add_scaled(o.v_, o.alg_->field().one());
    return *this;
}

AlgElem& AlgElem::operator-=(const AlgElem& o) {
    if (o.alg_ == nullptr) return *this;
    if (alg_ == nullptr) { *this = -o; return *this; }
    CQSL2_CHECK(alg_ == o.alg_, "mixed algebras");
    if (!o.v_.empty())
        v_.add_scaled(o.v_, -o.alg_->field().one());
    return *this;
}

AlgElem operator*(const AlgElem& a, const AlgElem& b) {
    if (a.alg_ == nullptr || b.alg_ == nullptr) return AlgElem();
    CQSL2_CHECK(a.alg_ == b.alg_, "mixed algebras");
    return a.alg_->mul(a, b);
}

AlgElem operator*(const CycScalar& c, AlgElem x) {
    SparseVec v = x.v_;
    v.scale(c);
    return AlgElem(x.alg_, std::move(v));
}

AlgElem operator-(const AlgElem& x) {
    return AlgElem(x.alg_, -x.v_);
}

bool operator==(const AlgElem& a, const AlgElem& b) {
    if (a.alg_ == nullptr || b.alg_ == nullptr)
        return a.v_.empty() && b.v_.empty();
    return a.alg_ == b.alg_ && a.v_ == b.v_;
}

QuantumAlgebra::QuantumAlgebra(const CycField& F)
    : F_(&F), r_(F.r()), dim_(F.r() * F.r() * F.r()) {}

Monomial QuantumAlgebra::monomial_at(int idx) const {
    Monomial w;
    w.k = idx % r_;
    idx /= r_;
    w.n = idx % r_;
    w.m = idx / r_;
    return w;
}

AlgElem QuantumAlgebra::monomial(int m, int n, int k, CycScalar coeff) const {
    if (coeff.field() == nullptr) coeff = F_->one();
    CQSL2_CHECK(m >= 0 && m < r_ && n >= 0 && n < r_ && k >= 0 && k < r_,
                "monomial exponent out of range");
    return AlgElem(this, SparseVec::unit(index_of({m, n, k}), std::move(coeff)));
}

AlgElem QuantumAlgebra::d() const {
    // d = a^{r-1} + q^{-1} a^{r-1} b c
    return monomial(r_ - 1, 0, 0) + monomial(r_ - 1, 1, 1, F_->q_power(-1));
}

AlgElem QuantumAlgebra::scalar(const CycScalar& s) const {
    return AlgElem(this, SparseVec::unit(0, s));
}

AlgElem QuantumAlgebra::mul(const AlgElem& x, const AlgElem& y) const {
    // Normal-ordered monomials multiply to a single normal-ordered monomial:
    // (b^n c^k) a^m2 = q^{m2(n+k)} a^m2 b^n c^k, a^r = 1, b^r = c^r = 0.
    std::vector<SparseVec::Entry> ents;
    for (const auto& ex : x.vec().entries()) {
        Monomial wx = monomial_at(ex.idx);
        for (const auto& ey : y.vec().entries()) {
            Monomial wy = monomial_at(ey.idx);
            int n = wx.n + wy.n;
            int k = wx.k + wy.k;
            if (n >= r_ || k >= r_) continue;
            int m = (wx.m + wy.m) % r_;
            CycScalar coeff =
                ex.val * ey.val * F_->q_power(static_cast<long>(wy.m) * (wx.n + wx.k));
            if (!coeff.is_zero())
                ents.push_back({index_of({m, n, k}), std::move(coeff)});
        }
    }
    return AlgElem(this, SparseVec::from_entries(std::move(ents)));
}

AlgElem QuantumAlgebra::pow(const AlgElem& x, int e) const {
    AlgElem acc = one();
    for (int i = 0; i < e; ++i) acc = mul(acc, x);
    return acc;
}

LinOp QuantumAlgebra::right_mult_matrix(const AlgElem& x) const {
    LinOp m(*F_, dim_, dim_);
    std::vector<std::vector<SparseVec::Entry>> rows(dim_);
    for (int j = 0; j < dim_; ++j) {
        Monomial w = monomial_at(j);
        AlgElem prod = mul(monomial(w.m, w.n, w.k), x);
        for (const auto& e : prod.vec().entries())
            rows[e.idx].push_back({j, e.val});
    }
    for (int i = 0; i < dim_; ++i)
        m.row(i) = SparseVec::from_entries(std::move(rows[i]));
    return m;
}

std::array<AlgElem, 4> QuantumAlgebra::d_monomial(const Monomial& w) const {
    const CycField& F = *F_;
    const int m = w.m, n = w.n, k = w.k;
    CycScalar mu = F.mu();
    std::array<AlgElem, 4> out;

    auto mono = [&](int mm, int nn, int kk, const CycScalar& coeff) -> AlgElem {
        if (coeff.is_zero()) return AlgElem();
        CQSL2_CHECK(nn >= 0 && kk >= 0,
                    "negative b/c exponent with nonvanishing coefficient");
        if (nn >= r_ || kk >= r_) return AlgElem();  // b^r = c^r = 0
        int ma = ((mm % r_) + r_) % r_;              // a^r = 1
        return monomial(ma, nn, kk, coeff);
    };

    // e_a . (q^{m+n-k} - 1) a^m b^n c^k
    out[0] = mono(m, n, k, F.q_power(m + n - k) - F.one());

    // mu e_b . q^{n-k+1} [k]_{q^2} a^{m+1} b^n c^{k-1}
    if (k > 0)
        out[1] = mono(m + 1, n, k - 1, mu * F.q_power(n - k + 1) * F.q_int(k, 2));

    // mu e_c . q^{-k-n} ( [m+n]_{q^2} a^{m-1} b^n c^{k+1}
    //                     + q [n]_{q^2} a^{m-1} b^{n-1} c^k )
    {
        CycScalar pref = mu * F.q_power(-k - n);
        AlgElem t = mono(m - 1, n, k + 1, pref * F.q_int(m + n, 2));
        if (n > 0)
            t += mono(m - 1, n - 1, k, pref * F.q_power(1) * F.q_int(n, 2));
        out[2] = t;
    }

    // mu^2 e_d . q^{-k-m-n+2} ( [k+1]_{q^2} [m+n]_{q^2} a^m b^n c^k
    //                           + q [n]_{q^2} [k]_{q^2} a^m b^{n-1} c^{k-1} )
    //   + e_d . (q^{-m-n+k} - 1) a^m b^n c^k
    {
        CycScalar pref = mu * mu * F.q_power(-k - m - n + 2);
        AlgElem t = mono(m, n, k, pref * F.q_int(k + 1, 2) * F.q_int(m + n, 2));
        if (n > 0 && k > 0)
            t += mono(m, n - 1, k - 1,
                      pref * F.q_power(1) * F.q_int(n, 2) * F.q_int(k, 2));
        t += mono(m, n, k, F.q_power(-m - n + k) - F.one());
        out[3] = t;
    }
    return out;
}

std::array<AlgElem, 4> QuantumAlgebra::d_elem(const AlgElem& x) const {
    std::array<AlgElem, 4> out;
    for (const auto& e : x.vec().entries()) {
        auto dm = d_monomial(monomial_at(e.idx));
        for (int i = 0; i < 4; ++i) out[i] += e.val * dm[i];
    }
    return out;
}

std::string QuantumAlgebra::monomial_string(const Monomial& w) const {
    if (w.m == 0 && w.n == 0 && w.k == 0) return "1";
    std::string s;
    auto app = [&](char g, int e) {
        if (e == 0) return;
        if (!s.empty()) s += ' ';
        s += g;
        if (e > 1) s += "^" + std::to_string(e);
    };
    app('a', w.m);
    app('b', w.n);
    app('c', w.k);
    return s;
}

std::string QuantumAlgebra::to_string(const AlgElem& x) const {
    if (x.is_zero()) return "0";
    std::string s;
    for (const auto& e : x.vec().entries()) {
        if (!s.empty()) s += "  +  ";
        s += "(" + e.val.str() + ") " + monomial_string(monomial_at(e.idx));
    }
    return s;
}

}  // namespace cqsl2
