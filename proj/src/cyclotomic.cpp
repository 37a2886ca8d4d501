#include "cqsl2/cyclotomic.hpp"

#include <algorithm>

namespace cqsl2 {

namespace {

// Quotient of polynomial division a / b over Q, requiring exact divisibility.
std::vector<Rational> poly_div_exact(std::vector<Rational> a,
                                     const std::vector<Rational>& b) {
    CQSL2_CHECK(!b.empty() && b.back() != 0, "division by zero polynomial");
    CQSL2_CHECK(a.size() >= b.size(), "degree mismatch in exact division");
    std::vector<Rational> quot(a.size() - b.size() + 1);
    for (int i = static_cast<int>(quot.size()) - 1; i >= 0; --i) {
        Rational c = a[i + b.size() - 1] / b.back();
        quot[i] = c;
        if (c != 0)
            for (size_t j = 0; j < b.size(); ++j)
                a[i + j] -= c * b[j];
    }
    for (const auto& c : a)
        CQSL2_CHECK(c == 0, "polynomial division was not exact");
    return quot;
}

std::vector<Rational> cyclotomic_poly(int n) {
    if (n == 1) return {-1, 1};
    // x^n - 1 divided by the product of Phi_d over proper divisors d of n.
    std::vector<Rational> num(n + 1);
    num[0] = -1;
    num[n] = 1;
    for (int d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        num = poly_div_exact(std::move(num), cyclotomic_poly(d));
    }
    return num;
}

void trim(std::vector<Rational>& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

}  // namespace

CycScalar::CycScalar(const CycField* field, std::vector<Rational> coeffs)
    : field_(field), coeffs_(std::move(coeffs)) {
    CQSL2_CHECK(field_ != nullptr, "scalar needs a field");
    CQSL2_CHECK(static_cast<int>(coeffs_.size()) == field_->degree(),
                "coefficient vector has wrong length");
}

bool CycScalar::is_zero() const {
    for (const auto& c : coeffs_)
        if (c != 0) return false;
    return true;
}

bool CycScalar::is_rational() const {
    for (size_t i = 1; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) return false;
    return true;
}

Rational CycScalar::rational_part() const {
    return coeffs_.empty() ? Rational(0) : coeffs_[0];
}

CycScalar CycScalar::inv() const {
    CQSL2_CHECK(field_ != nullptr && !is_zero(), "inverse of zero");
    return CycScalar(field_, field_->inv_reduced(coeffs_));
}

CycScalar& CycScalar::operator+=(const CycScalar& o) {
    if (o.field_ == nullptr) return *this;
    if (field_ == nullptr) { *this = o; return *this; }
    CQSL2_CHECK(field_ == o.field_, "mixed fields");
    for (size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    return *this;
}

CycScalar& CycScalar::operator-=(const CycScalar& o) {
    if (o.field_ == nullptr) return *this;
    if (field_ == nullptr) { *this = -o; return *this; }
    CQSL2_CHECK(field_ == o.field_, "mixed fields");
    for (size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    return *this;
}

CycScalar& CycScalar::operator*=(const CycScalar& o) {
    *this = *this * o;
    return *this;
}

CycScalar& CycScalar::operator/=(const CycScalar& o) {
    *this = *this * o.inv();
    return *this;
}

CycScalar operator*(const CycScalar& a, const CycScalar& b) {
    if (a.field_ == nullptr || b.field_ == nullptr) return CycScalar();
    CQSL2_CHECK(a.field_ == b.field_, "mixed fields");
    return CycScalar(a.field_, a.field_->mul_reduced(a.coeffs_, b.coeffs_));
}

CycScalar operator-(const CycScalar& a) {
    if (a.field_ == nullptr) return a;
    std::vector<Rational> c(a.coeffs_.size());
    for (size_t i = 0; i < c.size(); ++i) c[i] = -a.coeffs_[i];
    return CycScalar(a.field_, std::move(c));
}

bool operator==(const CycScalar& a, const CycScalar& b) {
    if (a.field_ == nullptr || b.field_ == nullptr)
        return (a.field_ == nullptr ? true : a.is_zero()) &&
               (b.field_ == nullptr ? true : b.is_zero());
    if (a.field_ != b.field_) return false;
    return a.coeffs_ == b.coeffs_;
}

std::vector<std::string> CycScalar::to_strings() const {
    std::vector<std::string> out;
    out.reserve(coeffs_.size());
    for (const auto& c : coeffs_) out.push_back(rational_string(c));
    return out;
}

std::string CycScalar::str() const {
    if (field_ == nullptr || is_zero()) return "0";
    std::string s;
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        if (!s.empty()) s += " + ";
        s += rational_string(coeffs_[i]);
        if (i == 1) s += "*q";
        else if (i > 1) s += "*q^" + std::to_string(i);
    }
    return s;
}

CycField::CycField(int r) : r_(r) {
    CQSL2_CHECK(r >= 3 && r % 2 == 1, "r must be odd and >= 3");
    modulus_ = cyclotomic_poly(r);
    phi_ = static_cast<int>(modulus_.size()) - 1;

    // z^j reduced mod Phi_r for j up to 2*phi-2 (what a product can reach).
    powers_.resize(2 * phi_ - 1);
    for (int j = 0; j < phi_; ++j) {
        powers_[j].assign(phi_, Rational(0));
        powers_[j][j] = 1;
    }
    for (int j = phi_; j <= 2 * phi_ - 2; ++j) {
        // z^j = z * z^{j-1}, then fold the top coordinate through Phi_r.
        std::vector<Rational> v(phi_ + 1);
        for (int i = 0; i < phi_; ++i) v[i + 1] = powers_[j - 1][i];
        Rational top = v[phi_];
        if (top != 0)
            for (int i = 0; i < phi_; ++i) v[i] -= top * modulus_[i];
        v.resize(phi_);
        powers_[j] = std::move(v);
    }

    qpow_.resize(r_);
    qpow_[0] = one();
    for (int k = 1; k < r_; ++k) {
        if (k < phi_) {
            std::vector<Rational> c(phi_, Rational(0));
            c[k] = 1;
            qpow_[k] = CycScalar(this, std::move(c));
        } else {
            std::vector<Rational> c(phi_, Rational(0));
            c[1] = 1;
            qpow_[k] = CycScalar(this, mul_reduced(c, qpow_[k - 1].coeffs()));
        }
    }
}

CycScalar CycField::zero() const {
    return CycScalar(this, std::vector<Rational>(phi_, Rational(0)));
}

CycScalar CycField::one() const { return from_rational(Rational(1)); }

CycScalar CycField::from_rational(const Rational& x) const {
    std::vector<Rational> c(phi_, Rational(0));
    c[0] = x;
    return CycScalar(this, std::move(c));
}

CycScalar CycField::rat(long num, long den) const {
    return from_rational(Rational(num, den));
}

CycScalar CycField::from_coeffs(std::vector<Rational> coeffs) const {
    CQSL2_CHECK(static_cast<int>(coeffs.size()) == phi_, "wrong length");
    return CycScalar(this, std::move(coeffs));
}

CycScalar CycField::q_power(long k) const {
    long m = k % r_;
    if (m < 0) m += r_;
    return qpow_[m];
}

CycScalar CycField::q_int(long n, int base) const {
    CQSL2_CHECK(base == 1 || base == 2, "q_int base must be q or q^2");
    // (1 - q^{base*n}) / (1 - q^{base}); the geometric-sum form avoids the
    // division and is valid for all n once extended by q-power periodicity.
    CycScalar s = zero();
    if (n >= 0) {
        for (long j = 0; j < n; ++j) s += q_power(base * j);
    } else {
        // [n] = -q^{base*n} [-n]
        for (long j = 0; j < -n; ++j) s += q_power(base * (n + j));
        s = -s;
    }
    return s;
}

CycScalar CycField::q_bracket_sym(long n) const {
    CycScalar den = q_power(1) - q_power(-1);
    return (q_power(n) - q_power(-n)) / den;
}

CycScalar CycField::mu() const { return one() - q_power(-2); }

CycScalar CycField::eval_cyclotomic(const CycScalar& x) const {
    CycScalar acc = zero();
    for (int i = phi_; i >= 0; --i)
        acc = acc * x + from_rational(modulus_[i]);
    return acc;
}

CycScalar CycField::parse(const std::vector<std::string>& coeff_strings) const {
    CQSL2_CHECK(static_cast<int>(coeff_strings.size()) == phi_,
                "wrong number of coefficients");
    std::vector<Rational> c;
    c.reserve(phi_);
    for (const auto& s : coeff_strings) c.push_back(parse_rational(s));
    return CycScalar(this, std::move(c));
}

std::vector<Rational> CycField::mul_reduced(const std::vector<Rational>& a,
                                            const std::vector<Rational>& b) const {
    std::vector<Rational> conv(2 * phi_ - 1, Rational(0));
    for (int i = 0; i < phi_; ++i) {
        if (a[i] == 0) continue;
        for (int j = 0; j < phi_; ++j) {
            if (b[j] == 0) continue;
            conv[i + j] += a[i] * b[j];
        }
    }
    std::vector<Rational> out(conv.begin(), conv.begin() + phi_);
    for (int j = phi_; j <= 2 * phi_ - 2; ++j) {
        if (conv[j] == 0) continue;
        for (int i = 0; i < phi_; ++i)
            if (powers_[j][i] != 0) out[i] += conv[j] * powers_[j][i];
    }
    return out;
}

std::vector<Rational> CycField::inv_reduced(const std::vector<Rational>& a) const {
    // Extended Euclid in Q[z] for gcd(a, Phi_r) = 1.
    std::vector<Rational> r0 = modulus_, r1 = a;
    trim(r1);
    CQSL2_CHECK(!r1.empty(), "inverse of zero");
    std::vector<Rational> s0 = {}, s1 = {Rational(1)};  // coefficients of a
    while (true) {
        // r0 = q*r1 + r2
        std::vector<Rational> rem = r0;
        std::vector<Rational> quot(std::max<size_t>(1, rem.size() - r1.size() + 1));
        while (rem.size() >= r1.size()) {
            Rational c = rem.back() / r1.back();
            size_t shift = rem.size() - r1.size();
            quot[shift] += c;
            for (size_t j = 0; j < r1.size(); ++j)
                rem[shift + j] -= c * r1[j];
            trim(rem);
            if (rem.empty()) break;
        }
        // s2 = s0 - q*s1
        std::vector<Rational> s2 = s0;
        s2.resize(std::max(s0.size(), quot.size() + s1.size()), Rational(0));
        for (size_t i = 0; i < quot.size(); ++i) {
            if (quot[i] == 0) continue;
            for (size_t j = 0; j < s1.size(); ++j)
                s2[i + j] -= quot[i] * s1[j];
        }
        trim(s2);
        if (rem.empty()) {
            // r1 is the gcd (a nonzero constant since Phi_r is irreducible).
            CQSL2_CHECK(r1.size() == 1, "cyclotomic modulus not coprime to element");
            std::vector<Rational> out(phi_, Rational(0));
            for (size_t i = 0; i < s1.size(); ++i) out[i] = s1[i] / r1[0];
            return out;
        }
        r0 = std::move(r1);
        r1 = std::move(rem);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
}

Rational parse_rational(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(BigInt(s));
    return Rational(BigInt(s.substr(0, slash)), BigInt(s.substr(slash + 1)));
}

std::string rational_string(const Rational& x) {
    return numerator(x).str() + "/" + denominator(x).str();
}

}  // namespace cqsl2
