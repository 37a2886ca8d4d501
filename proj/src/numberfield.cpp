#include "cqsl2/numberfield.hpp"

#include <boost/multiprecision/miller_rabin.hpp>
#include <algorithm>
#include <map>
#include <set>

namespace cqsl2 {

void poly_trim(Poly& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

int poly_degree(const Poly& p) {
    int d = static_cast<int>(p.size()) - 1;
    while (d >= 0 && p[d].is_zero()) --d;
    return d;
}

Poly poly_derivative(const CycField& F, const Poly& p) {
    Poly out;
    for (size_t i = 1; i < p.size(); ++i)
        out.push_back(F.rat(static_cast<long>(i)) * p[i]);
    poly_trim(out);
    return out;
}

CycScalar poly_eval(const CycField& F, const Poly& p, const CycScalar& x) {
    CycScalar acc = F.zero();
    for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i)
        acc = acc * x + p[i];
    return acc;
}

std::pair<Poly, Poly> poly_divmod(const CycField& F, Poly a, const Poly& b) {
    int db = poly_degree(b);
    CQSL2_CHECK(db >= 0, "division by zero polynomial");
    Poly quot;
    poly_trim(a);
    while (poly_degree(a) >= db) {
        int da = poly_degree(a);
        CycScalar c = a[da] / b[db];
        if (static_cast<int>(quot.size()) < da - db + 1)
            quot.resize(da - db + 1, F.zero());
        quot[da - db] += c;
        for (int j = 0; j <= db; ++j) a[da - db + j] -= c * b[j];
        poly_trim(a);
    }
    return {quot, a};
}

Poly poly_gcd(const CycField& F, Poly a, Poly b) {
    poly_trim(a);
    poly_trim(b);
    while (!b.empty()) {
        Poly r = poly_divmod(F, a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        CycScalar inv = a.back().inv();
        for (auto& c : a) c *= inv;
    }
    return a;
}

Poly poly_squarefree_part(const CycField& F, const Poly& p) {
    Poly d = poly_derivative(F, p);
    if (d.empty()) return p;
    Poly g = poly_gcd(F, p, d);
    if (poly_degree(g) == 0) {
        Poly out = p;
        CycScalar inv = out.back().inv();
        for (auto& c : out) c *= inv;
        return out;
    }
    Poly q = poly_divmod(F, p, g).first;
    CycScalar inv = q.back().inv();
    for (auto& c : q) c *= inv;
    return q;
}

Poly characteristic_polynomial(const LinOp& m) {
    CQSL2_CHECK(m.rows() == m.cols(), "characteristic polynomial of square operator");
    const CycField& F = m.field();
    const int n = m.rows();
    // dense copy
    std::vector<std::vector<CycScalar>> A(n, std::vector<CycScalar>(n, F.zero()));
    for (int i = 0; i < n; ++i)
        for (const auto& e : m.row(i).entries()) A[i][e.idx] = e.val;

    std::vector<CycScalar> c(n + 1, F.zero());
    c[n] = F.one();
    std::vector<std::vector<CycScalar>> M(n, std::vector<CycScalar>(n, F.zero()));
    for (int i = 0; i < n; ++i) M[i][i] = F.one();
    for (int k = 1; k <= n; ++k) {
        // N = A*M
        std::vector<std::vector<CycScalar>> N(n, std::vector<CycScalar>(n, F.zero()));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                if (A[i][j].is_zero()) continue;
                for (int l = 0; l < n; ++l)
                    if (!M[j][l].is_zero()) N[i][l] += A[i][j] * M[j][l];
            }
        CycScalar tr = F.zero();
        for (int i = 0; i < n; ++i) tr += N[i][i];
        c[n - k] = -(tr / F.rat(k));
        M = std::move(N);
        for (int i = 0; i < n; ++i) M[i][i] += c[n - k];
    }
    Poly p(c.begin(), c.end());
    return p;
}

namespace {

// Eisenstein integers x + y*zeta, zeta^2 = -1 - zeta.
struct Eis {
    BigInt x, y;
    friend bool operator<(const Eis& a, const Eis& b) {
        if (a.x != b.x) return a.x < b.x;
        return a.y < b.y;
    }
    friend bool operator==(const Eis& a, const Eis& b) = default;
};

Eis eis_mul(const Eis& a, const Eis& b) {
    // (a.x + a.y z)(b.x + b.y z) = a.x b.x - a.y b.y + (a.x b.y + a.y b.x - a.y b.y) z
    return {a.x * b.x - a.y * b.y, a.x * b.y + a.y * b.x - a.y * b.y};
}

BigInt eis_norm(const Eis& a) { return a.x * a.x - a.x * a.y + a.y * a.y; }

bool eis_div_exact(const Eis& a, const Eis& d, Eis& out) {
    BigInt nd = eis_norm(d);
    if (nd == 0) return false;
    // a * conj(d), conj(x + y z) = (x - y) - y z
    Eis conj{d.x - d.y, -d.y};
    Eis num = eis_mul(a, conj);
    if (num.x % nd != 0 || num.y % nd != 0) return false;
    out = {num.x / nd, num.y / nd};
    return true;
}

void factor_integer(BigInt n, std::map<BigInt, int>& out) {
    if (n < 0) n = -n;
    if (n <= 1) return;
    for (BigInt p = 2; p * p <= n && p < 100000; ++p) {
        while (n % p == 0) {
            ++out[p];
            n /= p;
        }
    }
    if (n == 1) return;
    if (boost::multiprecision::miller_rabin_test(n, 32)) {
        ++out[n];
        return;
    }
    // Pollard rho for the rare large composite leftover.
    BigInt d = n;
    for (BigInt c = 1; c < 32; ++c) {
        BigInt x = 2, y = 2;
        d = 1;
        while (d == 1) {
            x = (x * x + c) % n;
            y = (y * y + c) % n;
            y = (y * y + c) % n;
            d = gcd(x >= y ? x - y : y - x, n);
        }
        if (d != n) break;
    }
    CQSL2_CHECK(d != n && d != 1, "factorization failed");
    factor_integer(d, out);
    factor_integer(n / d, out);
}

// Eisenstein primes above a rational prime.
std::vector<Eis> primes_above(const BigInt& p) {
    if (p == 3) return {{1, -1}};  // ramified: (1 - zeta)^2 ~ 3
    if (p % 3 == 2) return {{p, 0}};  // inert
    // split: solve x^2 - x y + y^2 = p
    for (BigInt y = 1; y * y <= p; ++y)
        for (BigInt x = 0; x * x <= 4 * p; ++x) {
            if (x * x - x * y + y * y == p) {
                Eis pi{x, y};
                Eis conj{x - y, -y};
                return {pi, conj};
            }
        }
    CQSL2_CHECK(false, "failed to split prime in Z[zeta_3]");
    return {};
}

// All divisors of a nonzero Eisenstein integer, up to units.
std::vector<Eis> eis_divisors(const Eis& a) {
    std::map<BigInt, int> nf;
    factor_integer(eis_norm(a), nf);
    // collect prime powers dividing a with multiplicity
    std::vector<std::pair<Eis, int>> primes;
    Eis rest = a;
    for (const auto& [p, _] : nf) {
        for (const Eis& pi : primes_above(p)) {
            int mult = 0;
            Eis q;
            while (eis_div_exact(rest, pi, q)) {
                rest = q;
                ++mult;
            }
            if (mult > 0) primes.push_back({pi, mult});
        }
    }
    std::vector<Eis> divs{{1, 0}};
    for (const auto& [pi, mult] : primes) {
        std::vector<Eis> next;
        for (const Eis& d : divs) {
            Eis acc = d;
            next.push_back(acc);
            for (int e = 1; e <= mult; ++e) {
                acc = eis_mul(acc, pi);
                next.push_back(acc);
            }
        }
        divs = std::move(next);
    }
    return divs;
}

}  // namespace

std::vector<CycScalar> roots_in_field_r3(const CycField& F, const Poly& p) {
    CQSL2_CHECK(F.r() == 3, "root search implemented over Q(zeta_3)");
    Poly g = poly_squarefree_part(F, p);
    std::vector<CycScalar> roots;

    // Strip the root at zero.
    size_t shift = 0;
    while (shift < g.size() && g[shift].is_zero()) ++shift;
    if (shift > 0) {
        roots.push_back(F.zero());
        g.erase(g.begin(), g.begin() + shift);
    }
    if (poly_degree(g) <= 0) return roots;

    // Make coefficients integral over Z[zeta_3].
    BigInt den = 1;
    for (const auto& c : g)
        for (const auto& co : c.coeffs())
            den = lcm(den, denominator(co));
    std::vector<Eis> ic;
    for (const auto& c : g) {
        Rational c0 = c.coeffs()[0] * den, c1 = c.coeffs()[1] * den;
        ic.push_back({numerator(c0), numerator(c1)});
    }

    const Eis trailing = ic.front();
    const Eis leading = ic.back();
    std::vector<Eis> tdivs = eis_divisors(trailing);
    std::vector<Eis> ldivs = eis_divisors(leading);
    // Units of Z[zeta_3]: ±1, ±zeta, ±zeta^2 = ±(−1−zeta).
    const std::vector<Eis> units = {{1, 0},  {-1, 0}, {0, 1},
                                    {0, -1}, {-1, -1}, {1, 1}};
    std::set<std::pair<std::pair<BigInt, BigInt>, std::pair<BigInt, BigInt>>> seen;
    for (const Eis& num0 : tdivs)
        for (const Eis& u : units) {
            Eis num = eis_mul(num0, u);
            for (const Eis& denE : ldivs) {
                BigInt nd = eis_norm(denE);
                if (nd == 0) continue;
                auto key = std::make_pair(std::make_pair(num.x, num.y),
                                          std::make_pair(denE.x, denE.y));
                if (!seen.insert(key).second) continue;
                CycScalar cand =
                    F.from_coeffs({Rational(num.x), Rational(num.y)}) /
                    F.from_coeffs({Rational(denE.x), Rational(denE.y)});
                if (poly_eval(F, g, cand).is_zero()) {
                    bool known = false;
                    for (const auto& r : roots)
                        if (r == cand) known = true;
                    if (!known) roots.push_back(cand);
                }
            }
        }
    return roots;
}

}  // namespace cqsl2
