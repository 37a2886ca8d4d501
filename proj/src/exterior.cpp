#include "cqsl2/exterior.hpp"

#include <algorithm>

namespace cqsl2 {

InvForm::InvForm(const ExteriorAlgebra* ext, int degree)
    : ext_(ext), degree_(degree), c_(ExteriorAlgebra::dim(degree)) {
    CQSL2_CHECK(degree >= 0 && degree <= 4, "degree out of range");
}

bool InvForm::is_zero() const {
    for (const auto& c : c_)
        if (!c.is_zero()) return false;
    return true;
}

InvForm& InvForm::operator+=(const InvForm& o) {
    if (o.ext_ == nullptr) return *this;
    if (ext_ == nullptr) { *this = o; return *this; }
    CQSL2_CHECK(ext_ == o.ext_ && degree_ == o.degree_, "degree mismatch");
    for (size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
}

InvForm& InvForm::operator-=(const InvForm& o) {
    if (o.ext_ == nullptr) return *this;
    if (ext_ == nullptr) { *this = -o; return *this; }
    CQSL2_CHECK(ext_ == o.ext_ && degree_ == o.degree_, "degree mismatch");
    for (size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
}

InvForm operator*(const CycScalar& s, InvForm x) {
    for (auto& c : x.c_) c *= s;
    return x;
}

InvForm operator-(const InvForm& x) {
    InvForm out = x;
    for (auto& c : out.c_) c = -c;
    return out;
}

bool operator==(const InvForm& a, const InvForm& b) {
    if (a.ext_ == nullptr || b.ext_ == nullptr)
        return a.is_zero() && b.is_zero();
    if (a.ext_ != b.ext_ || a.degree_ != b.degree_) return false;
    return a.c_ == b.c_;
}

namespace {

// One rewriting step on the adjacent pair (x, y), x = word[i], y = word[i+1],
// applicable when x >= y.  Returns the replacement pairs with coefficients.
struct RuleTerm {
    CycScalar coeff;
    std::vector<int> pair;  // empty, or two letters
};

std::vector<RuleTerm> rewrite_pair(const CycField& F, int x, int y) {
    using L = ExteriorAlgebra;
    CycScalar one = F.one(), mu = F.mu();
    if (x == L::A && y == L::A)
        return {{mu, {L::B, L::C}}};
    if (x == y)
        return {};  // Grassmann square among b, c, d
    if (x == L::B && y == L::A)
        return {{-F.q_power(-2), {L::A, L::B}}, {F.q_power(-2) * mu, {L::B, L::D}}};
    if (x == L::C && y == L::A)
        return {{-F.q_power(2), {L::A, L::C}}, {-mu, {L::C, L::D}}};
    if (x == L::D && y == L::A)
        return {{-one, {L::A, L::D}}, {-mu, {L::B, L::C}}};
    // remaining: out-of-order Grassmann pair among b, c, d
    return {{-one, {y, x}}};
}

}  // namespace

ExteriorAlgebra::ExteriorAlgebra(const QuantumAlgebra& alg) : alg_(&alg) {
    const CycField& F = alg.field();

    // Basis words: strictly increasing words over {a, b, c, d}.
    words_.resize(5);
    for (int mask = 0; mask < 16; ++mask) {
        std::vector<int> w;
        for (int l = 0; l < 4; ++l)
            if (mask & (1 << l)) w.push_back(l);
        words_[w.size()].push_back(w);
    }
    for (int d = 0; d <= 4; ++d) {
        std::sort(words_[d].begin(), words_[d].end());
        CQSL2_CHECK(static_cast<int>(words_[d].size()) == kDim[d],
                    "basis enumeration mismatch");
    }

    // Wedge structure constants from rewriting concatenated basis words.
    for (int di = 0; di <= 4; ++di)
        for (int dj = 0; dj + di <= 4; ++dj) {
            auto& t = tab_[di][dj];
            t.resize(kDim[di] * kDim[dj]);
            for (int bi = 0; bi < kDim[di]; ++bi)
                for (int bj = 0; bj < kDim[dj]; ++bj) {
                    std::vector<int> w = words_[di][bi];
                    w.insert(w.end(), words_[dj][bj].begin(), words_[dj][bj].end());
                    InvForm res = wedge_word(w);
                    t[bi * kDim[dj] + bj] = res.coeffs();
                }
        }

    // Braiding table.
    psi_ = LinOp(F, 16, 16);
    CycScalar one = F.one(), mu = F.mu(), q = F.q_power(1);
    CycScalar q2 = F.q_power(2), qm1 = F.q_power(-1), qm2 = F.q_power(-2);
    CycScalar mu2 = mu * mu;
    auto put = [&](int i, int j, int k, int l, const CycScalar& v) {
        psi_.set(4 * k + l, 4 * i + j, psi_.at(4 * k + l, 4 * i + j) + v);
    };
    // Psi(e_a ⊗ e_a) = e_a⊗e_a - mu(e_b⊗e_c - e_c⊗e_b) + q mu^2 e_d⊗(q e_a - q^{-1} e_d)
    put(A, A, A, A, one);
    put(A, A, B, C, -mu);
    put(A, A, C, B, mu);
    put(A, A, D, A, q * mu2 * q);
    put(A, A, D, D, -q * mu2 * qm1);
    put(B, B, B, B, one);
    put(C, C, C, C, one);
    put(D, D, D, D, one);
    put(A, D, D, A, one);
    // Psi(e_d ⊗ e_a) = e_a⊗e_d + mu(e_b⊗e_c - e_c⊗e_b) - q mu^2 e_d⊗(q e_a - q^{-1} e_d)
    put(D, A, A, D, one);
    put(D, A, B, C, mu);
    put(D, A, C, B, -mu);
    put(D, A, D, A, -q * mu2 * q);
    put(D, A, D, D, q * mu2 * qm1);
    // Psi(e_b ⊗ e_c) = e_c⊗e_b + q mu e_d⊗(q e_a - q^{-1} e_d)
    put(B, C, C, B, one);
    put(B, C, D, A, q * mu * q);
    put(B, C, D, D, -q * mu * qm1);
    // Psi(e_c ⊗ e_b) = e_b⊗e_c - q mu e_d⊗(q e_a - q^{-1} e_d)
    put(C, B, B, C, one);
    put(C, B, D, A, -q * mu * q);
    put(C, B, D, D, q * mu * qm1);
    // Psi(e_a ⊗ e_b) = e_b⊗e_a + q^2 mu e_d⊗e_b
    put(A, B, B, A, one);
    put(A, B, D, B, q2 * mu);
    // Psi(e_b ⊗ e_a) = q^{-2} e_a⊗e_b + mu q^{-1} e_b⊗(q e_a - q^{-1} e_d)
    put(B, A, A, B, qm2);
    put(B, A, B, A, mu * qm1 * q);
    put(B, A, B, D, -mu * qm1 * qm1);
    // Psi(e_a ⊗ e_c) = e_c⊗e_a - mu e_d⊗e_c
    put(A, C, C, A, one);
    put(A, C, D, C, -mu);
    // Psi(e_c ⊗ e_a) = q^2 e_a⊗e_c - mu q e_c⊗(q e_a - q^{-1} e_d) + [2]_{q^2} mu^2 e_d⊗e_c
    put(C, A, A, C, q2);
    put(C, A, C, A, -mu * q * q);
    put(C, A, C, D, mu * q * qm1);
    put(C, A, D, C, F.q_int(2, 2) * mu2);
    put(B, D, D, B, q2);
    // Psi(e_d ⊗ e_b) = e_b⊗e_d - q^2 mu e_d⊗e_b
    put(D, B, B, D, one);
    put(D, B, D, B, -q2 * mu);
    put(C, D, D, C, qm2);
    // Psi(e_d ⊗ e_c) = e_c⊗e_d + mu e_d⊗e_c
    put(D, C, C, D, one);
    put(D, C, D, C, mu);

    // Bimodule push rules for the generators.
    AlgElem a = alg.a(), b = alg.b(), c = alg.c(), d = alg.d();
    auto& Pa = push_gen_[0].m;
    Pa[A][A] = F.q_power(1) * a;
    Pa[C][A] = mu * c;
    Pa[D][A] = (q * mu2) * a;
    Pa[B][B] = a;
    Pa[D][B] = (q * mu) * c;
    Pa[C][C] = a;
    Pa[D][D] = qm1 * a;
    auto& Pb = push_gen_[1].m;
    Pb[A][A] = q * b;
    Pb[C][A] = mu * d;
    Pb[D][A] = (q * mu2) * b;
    Pb[B][B] = b;
    Pb[D][B] = (q * mu) * d;
    Pb[C][C] = b;
    Pb[D][D] = qm1 * b;
    auto& Pc = push_gen_[2].m;
    Pc[A][A] = qm1 * c;
    Pc[B][A] = mu * a;
    Pc[B][B] = c;
    Pc[C][C] = c;
    Pc[D][C] = (q * mu) * a;
    Pc[D][D] = q * c;
    auto& Pd = push_gen_[3].m;
    Pd[A][A] = qm1 * d;
    Pd[B][A] = mu * b;
    Pd[B][B] = d;
    Pd[C][C] = d;
    Pd[D][C] = (q * mu) * b;
    Pd[D][D] = q * d;
}

const std::vector<std::vector<int>>& ExteriorAlgebra::basis_words(int degree) const {
    return words_[degree];
}

int ExteriorAlgebra::basis_index(int degree, const std::vector<int>& word) const {
    const auto& ws = words_[degree];
    for (size_t i = 0; i < ws.size(); ++i)
        if (ws[i] == word) return static_cast<int>(i);
    CQSL2_CHECK(false, "not a basis word");
    return -1;
}

std::string ExteriorAlgebra::basis_name(int degree, int idx) const {
    if (degree == 0) return "1";
    static const char* letters = "abcd";
    std::string s = "e_";
    for (int l : words_[degree][idx]) s += letters[l];
    return s;
}

InvForm ExteriorAlgebra::basis_form(int degree, int idx) const {
    InvForm f(this, degree);
    f.set_coeff(idx, field().one());
    return f;
}

InvForm ExteriorAlgebra::theta() const {
    InvForm f(this, 1);
    f.set_coeff(A, field().one());
    f.set_coeff(D, field().one());
    return f;
}

InvForm ExteriorAlgebra::e_z() const {
    InvForm f(this, 1);
    f.set_coeff(A, field().q_power(1));
    f.set_coeff(D, -field().q_power(-1));
    return f;
}

InvForm ExteriorAlgebra::scalar_form(const CycScalar& s) const {
    InvForm f(this, 0);
    f.set_coeff(0, s);
    return f;
}

InvForm ExteriorAlgebra::wedge_word(const std::vector<int>& word) const {
    const CycField& F = field();
    int deg = static_cast<int>(word.size());
    CQSL2_CHECK(deg <= 4, "word too long");
    InvForm out(this, deg);
    struct Item {
        CycScalar coeff;
        std::vector<int> w;
    };
    std::vector<Item> work{{F.one(), word}};
    while (!work.empty()) {
        Item it = std::move(work.back());
        work.pop_back();
        // leftmost reducible adjacent pair
        size_t pos = 0;
        for (; pos + 1 < it.w.size(); ++pos)
            if (it.w[pos] >= it.w[pos + 1]) break;
        if (pos + 1 >= it.w.size()) {
            out.add_coeff(basis_index(deg, it.w), it.coeff);
            continue;
        }
        for (const auto& term : rewrite_pair(F, it.w[pos], it.w[pos + 1])) {
            Item next;
            next.coeff = it.coeff * term.coeff;
            next.w.assign(it.w.begin(), it.w.begin() + pos);
            next.w.insert(next.w.end(), term.pair.begin(), term.pair.end());
            next.w.insert(next.w.end(), it.w.begin() + pos + 2, it.w.end());
            work.push_back(std::move(next));
        }
    }
    return out;
}

InvForm ExteriorAlgebra::wedge(const InvForm& x, const InvForm& y) const {
    int di = x.degree(), dj = y.degree();
    CQSL2_CHECK(di + dj <= 4, "wedge degree exceeds 4");
    InvForm out(this, di + dj);
    const auto& t = tab_[di][dj];
    for (int bi = 0; bi < kDim[di]; ++bi) {
        if (x.coeff(bi).is_zero()) continue;
        for (int bj = 0; bj < kDim[dj]; ++bj) {
            if (y.coeff(bj).is_zero()) continue;
            CycScalar s = x.coeff(bi) * y.coeff(bj);
            const auto& coeffs = t[bi * kDim[dj] + bj];
            for (int o = 0; o < kDim[di + dj]; ++o)
                if (!coeffs[o].is_zero()) out.add_coeff(o, s * coeffs[o]);
        }
    }
    return out;
}

InvForm ExteriorAlgebra::d(const InvForm& x) const {
    // d = -[theta, .}: for even x, x∧theta - theta∧x; for odd x,
    // -(theta∧x + x∧theta).
    CQSL2_CHECK(x.degree() <= 3, "d on invariant forms raises degree");
    InvForm th = theta();
    if (x.degree() % 2 == 0)
        return wedge(x, th) - wedge(th, x);
    return -(wedge(th, x) + wedge(x, th));
}

LinOp ExteriorAlgebra::braiding_at(int n, int pos) const {
    CQSL2_CHECK(pos >= 0 && pos + 1 < n, "braid position out of range");
    int total = 1;
    for (int i = 0; i < n; ++i) total *= 4;
    LinOp out(field(), total, total);
    // Column for tensor word t; letters little-endian from the right:
    // index = sum letter_i * 4^{n-1-i}.
    int right = 1;
    for (int i = 0; i < n - pos - 2; ++i) right *= 4;
    for (int col = 0; col < total; ++col) {
        int li = (col / (right * 4)) % 4;  // letter at position pos
        int lj = (col / right) % 4;        // letter at position pos+1
        int base = col - (li * 4 + lj) * right;
        for (int k = 0; k < 4; ++k)
            for (int l = 0; l < 4; ++l) {
                CycScalar v = psi_.at(4 * k + l, 4 * li + lj);
                if (v.is_zero()) continue;
                int row = base + (k * 4 + l) * right;
                out.set(row, col, out.at(row, col) + v);
            }
    }
    return out;
}

LinOp ExteriorAlgebra::braided_integer(int n) const {
    int total = 1;
    for (int i = 0; i < n; ++i) total *= 4;
    LinOp acc = LinOp::identity(field(), total);
    LinOp prod = LinOp::identity(field(), total);
    CycScalar sign = field().one();
    for (int i = 0; i + 1 < n; ++i) {
        prod = prod.compose(braiding_at(n, i));
        sign = -sign;
        acc = acc + prod.scaled(sign);
    }
    return acc;
}

LinOp ExteriorAlgebra::braided_factorial(int n) const {
    CQSL2_CHECK(n >= 2 && n <= 4, "braided factorial for n = 2..4");
    if (n == 2) return braided_integer(2);
    LinOp lower = braided_factorial(n - 1);
    int total = 1;
    for (int i = 0; i < n; ++i) total *= 4;
    // id ⊗ A_{n-1} acting on the last n-1 tensor factors.
    LinOp idlower(field(), total, total);
    int sub = total / 4;
    for (int blk = 0; blk < 4; ++blk)
        for (int i = 0; i < sub; ++i) {
            const SparseVec& r = lower.row(i);
            for (const auto& e : r.entries())
                idlower.set(blk * sub + i, blk * sub + e.idx, e.val);
        }
    return idlower.compose(braided_integer(n));
}

LinOp ExteriorAlgebra::wedge_projector(int n) const {
    int total = 1;
    for (int i = 0; i < n; ++i) total *= 4;
    LinOp out(field(), kDim[n], total);
    for (int col = 0; col < total; ++col) {
        std::vector<int> w(n);
        int c = col;
        for (int i = n - 1; i >= 0; --i) {
            w[i] = c % 4;
            c /= 4;
        }
        InvForm f = wedge_word(w);
        for (int o = 0; o < kDim[n]; ++o)
            if (!f.coeff(o).is_zero()) out.set(o, col, f.coeff(o));
    }
    return out;
}

const ExteriorAlgebra::PushMat& ExteriorAlgebra::push_matrix(int mono_idx) const {
    auto it = push_cache_.find(mono_idx);
    if (it != push_cache_.end()) return it->second;
    const QuantumAlgebra& alg = *alg_;
    Monomial w = alg.monomial_at(mono_idx);
    PushMat pm;
    if (w.m == 0 && w.n == 0 && w.k == 0) {
        for (int i = 0; i < 4; ++i) pm.m[i][i] = alg.one();
    } else if (w.k > 0) {
        pm = mat_mul(push_matrix(alg.index_of({w.m, w.n, w.k - 1})), push_gen_[2]);
    } else if (w.n > 0) {
        pm = mat_mul(push_matrix(alg.index_of({w.m, w.n - 1, 0})), push_gen_[1]);
    } else {
        pm = mat_mul(push_matrix(alg.index_of({w.m - 1, 0, 0})), push_gen_[0]);
    }
    return push_cache_.emplace(mono_idx, std::move(pm)).first->second;
}

ExteriorAlgebra::PushMat ExteriorAlgebra::mat_mul(const PushMat& x, const PushMat& y) {
    PushMat out;
    for (int i = 0; i < 4; ++i)
        for (int k = 0; k < 4; ++k) {
            AlgElem acc;
            for (int j = 0; j < 4; ++j) acc += x.m[i][j] * y.m[j][k];
            out.m[i][k] = acc;
        }
    return out;
}

std::array<AlgElem, 4> ExteriorAlgebra::push_left(const AlgElem& x, int letter) const {
    std::array<AlgElem, 4> out;
    for (const auto& e : x.vec().entries()) {
        const PushMat& pm = push_matrix(e.idx);
        for (int j = 0; j < 4; ++j) out[j] += e.val * pm.m[j][letter];
    }
    return out;
}

std::vector<AlgElem> ExteriorAlgebra::push_past_word(
    const AlgElem& x, const std::vector<int>& word) const {
    int deg = static_cast<int>(word.size());
    if (deg == 0) return {x};
    auto first = push_left(x, word[0]);
    std::vector<int> rest(word.begin() + 1, word.end());
    std::vector<AlgElem> out(kDim[deg]);
    for (int l = 0; l < 4; ++l) {
        if (first[l].is_zero()) continue;
        std::vector<AlgElem> sub = push_past_word(first[l], rest);
        for (int kk = 0; kk < kDim[deg - 1]; ++kk) {
            if (sub[kk].is_zero()) continue;
            // e_l ∧ e_K with coefficients on the right
            const auto& coeffs = tab_[1][deg - 1][l * kDim[deg - 1] + kk];
            for (int o = 0; o < kDim[deg]; ++o)
                if (!coeffs[o].is_zero()) out[o] += coeffs[o] * sub[kk];
        }
    }
    return out;
}

}  // namespace cqsl2
