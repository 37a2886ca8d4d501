#include <catch2/catch_amalgamated.hpp>

#include "cqsl2/exterior.hpp"

using namespace cqsl2;
using L = ExteriorAlgebra;

namespace {

struct Setup {
    CycField F;
    QuantumAlgebra A;
    ExteriorAlgebra E;
    explicit Setup(int r) : F(r), A(F), E(A) {}
};

}  // namespace

TEST_CASE("braiding table entries") {
    Setup s(3);
    const LinOp& psi = s.E.braiding();
    const CycField& F = s.F;
    auto at = [&](int k, int l, int i, int j) { return psi.at(4 * k + l, 4 * i + j); };

    // Psi(e_b ⊗ e_b) = e_b ⊗ e_b
    REQUIRE(at(L::B, L::B, L::B, L::B) == F.one());
    // Psi(e_a ⊗ e_d) = e_d ⊗ e_a
    REQUIRE(at(L::D, L::A, L::A, L::D) == F.one());
    REQUIRE(at(L::A, L::D, L::A, L::D).is_zero());
    // Psi(e_b ⊗ e_d) = q^2 e_d ⊗ e_b
    REQUIRE(at(L::D, L::B, L::B, L::D) == F.q_power(2));
    // Psi(e_c ⊗ e_d) = q^{-2} e_d ⊗ e_c
    REQUIRE(at(L::D, L::C, L::C, L::D) == F.q_power(-2));
}

TEST_CASE("braid relation") {
    for (int r : {3, 5}) {
        Setup s(r);
        LinOp p12 = s.E.braiding_at(3, 0), p23 = s.E.braiding_at(3, 1);
        REQUIRE(p12.compose(p23).compose(p12) == p23.compose(p12).compose(p23));
    }
}

TEST_CASE("braiding is invertible") {
    Setup s(5);
    REQUIRE(rref(s.E.braiding()).rank == 16);
}

TEST_CASE("braided factorial kernels cut out the exterior algebra") {
    for (int r : {3, 5}) {
        Setup s(r);
        REQUIRE(kernel(s.E.braided_factorial(2)).dim() == 10);   // 16 - 6
        REQUIRE(kernel(s.E.braided_factorial(3)).dim() == 60);   // 64 - 4
        REQUIRE(kernel(s.E.braided_factorial(4)).dim() == 255);  // 256 - 1
    }
}

TEST_CASE("rewriting presentation agrees with the braided factorials") {
    Setup s(3);
    for (int n = 2; n <= 4; ++n)
        REQUIRE(kernel(s.E.wedge_projector(n)) ==
                kernel(s.E.braided_factorial(n)));
}

TEST_CASE("degree-2 wedge relations") {
    Setup s(3);
    const CycField& F = s.F;
    const ExteriorAlgebra& E = s.E;
    CycScalar mu = F.mu(), q2 = F.q_power(2);
    auto w = [&](int x, int y) { return E.wedge(E.e(x), E.e(y)); };
    InvForm e_bc = E.wedge_word({L::B, L::C});
    InvForm e_ad = E.wedge_word({L::A, L::D});
    InvForm e_bd = E.wedge_word({L::B, L::D});
    InvForm e_cd = E.wedge_word({L::C, L::D});

    REQUIRE(w(L::A, L::A) == mu * e_bc);
    REQUIRE(w(L::D, L::A) == -(E.wedge_word({L::A, L::D})) - mu * e_bc);
    REQUIRE((w(L::A, L::D) + w(L::D, L::A) + mu * e_bc).is_zero());
    REQUIRE((w(L::A, L::B) + q2 * w(L::B, L::A) - mu * e_bd).is_zero());
    REQUIRE((w(L::C, L::A) + q2 * w(L::A, L::C) + mu * e_cd).is_zero());
    // Grassmann among b, c, d
    for (int x : {L::B, L::C, L::D}) REQUIRE(w(x, x).is_zero());
    REQUIRE(w(L::C, L::B) == -(E.wedge_word({L::B, L::C})));
    // theta ∧ theta = 0
    REQUIRE(E.wedge(E.theta(), E.theta()).is_zero());
}

TEST_CASE("invariant derivative") {
    for (int r : {3, 5}) {
        Setup s(r);
        const CycField& F = s.F;
        const ExteriorAlgebra& E = s.E;
        CycScalar mu = F.mu();

        REQUIRE(E.d(E.e(L::A)) == -(mu * E.wedge_word({L::B, L::C})));
        REQUIRE(E.d(E.e(L::D)) == mu * E.wedge_word({L::B, L::C}));
        REQUIRE(E.d(E.e(L::B)) ==
                -(mu * (E.wedge_word({L::A, L::B}) +
                        F.q_power(-2) * E.wedge_word({L::B, L::D}))));
        REQUIRE(E.d(E.e(L::C)) ==
                mu * (F.q_power(2) * E.wedge_word({L::A, L::C}) +
                      E.wedge_word({L::C, L::D})));
        REQUIRE(E.d(E.theta()).is_zero());

        // d^2 = 0 on Lambda
        for (int deg = 0; deg <= 2; ++deg)
            for (int i = 0; i < ExteriorAlgebra::dim(deg); ++i)
                REQUIRE(E.d(E.d(E.basis_form(deg, i))).is_zero());

        // graded Leibniz on all basis pairs
        for (int p = 0; p <= 3; ++p)
            for (int sdeg = 0; p + sdeg <= 3; ++sdeg)
                for (int i = 0; i < ExteriorAlgebra::dim(p); ++i)
                    for (int j = 0; j < ExteriorAlgebra::dim(sdeg); ++j) {
                        InvForm x = E.basis_form(p, i), y = E.basis_form(sdeg, j);
                        InvForm lhs = E.d(E.wedge(x, y));
                        InvForm rhs = E.wedge(E.d(x), y);
                        InvForm xdy = E.wedge(x, E.d(y));
                        if (p % 2 == 1) rhs -= xdy;
                        else rhs += xdy;
                        REQUIRE(lhs == rhs);
                    }
    }
}

TEST_CASE("bimodule push rules") {
    Setup s(3);
    const CycField& F = s.F;
    const QuantumAlgebra& A = s.A;
    const ExteriorAlgebra& E = s.E;
    CycScalar q = F.q_power(1), mu = F.mu();

    // c . e_b = e_b . c
    auto cb = E.push_left(A.c(), L::B);
    REQUIRE(cb[L::B] == A.c());
    REQUIRE(cb[L::A].is_zero());
    REQUIRE(cb[L::C].is_zero());
    REQUIRE(cb[L::D].is_zero());

    // a . e_d = q^{-1} e_d . a
    auto ad = E.push_left(A.a(), L::D);
    REQUIRE(ad[L::D] == F.q_power(-1) * A.a());
    REQUIRE(ad[L::A].is_zero());

    // a . e_a = q e_a . a + mu e_c . c + q mu^2 e_d . a
    auto aa = E.push_left(A.a(), L::A);
    REQUIRE(aa[L::A] == q * A.a());
    REQUIRE(aa[L::C] == mu * A.c());
    REQUIRE(aa[L::D] == (q * mu * mu) * A.a());
    REQUIRE(aa[L::B].is_zero());

    // multiplicativity on generator pairs
    std::vector<AlgElem> gens = {A.a(), A.b(), A.c(), A.d()};
    for (const auto& x : gens)
        for (const auto& y : gens)
            for (int l = 0; l < 4; ++l) {
                auto direct = E.push_left(x * y, l);
                auto stage1 = E.push_left(y, l);
                std::array<AlgElem, 4> composed;
                for (int j = 0; j < 4; ++j) {
                    if (stage1[j].is_zero()) continue;
                    auto stage2 = E.push_left(x, j);
                    for (int k = 0; k < 4; ++k)
                        composed[k] += stage2[k] * stage1[j];
                }
                for (int j = 0; j < 4; ++j) REQUIRE(direct[j] == composed[j]);
            }
}

TEST_CASE("push past longer words") {
    Setup s(3);
    const QuantumAlgebra& A = s.A;
    const ExteriorAlgebra& E = s.E;
    // pushing past a degree-2 word equals iterating letters and wedging
    AlgElem x = A.a() * A.b();
    std::vector<int> word = {L::A, L::D};
    auto past = E.push_past_word(x, word);
    // reconstruct x . (e_a ∧ e_d) by pushing past e_a, then e_d, then wedging
    auto first = E.push_left(x, L::A);
    std::vector<AlgElem> manual(6);
    for (int l = 0; l < 4; ++l) {
        if (first[l].is_zero()) continue;
        auto second = E.push_left(first[l], L::D);
        for (int m = 0; m < 4; ++m) {
            if (second[m].is_zero()) continue;
            InvForm w = E.wedge_word({l, m});
            for (int o = 0; o < 6; ++o)
                if (!w.coeff(o).is_zero()) manual[o] += w.coeff(o) * second[m];
        }
    }
    for (int o = 0; o < 6; ++o) REQUIRE(past[o] == manual[o]);
}
