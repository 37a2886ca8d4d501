#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "cqsl2/linalg.hpp"

using namespace cqsl2;

namespace {

LinOp random_matrix(const CycField& F, std::mt19937& rng, int rows, int cols) {
    LinOp m(F, rows, cols);
    std::uniform_int_distribution<int> coin(0, 2), num(-5, 5), den(1, 5);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j)
            if (coin(rng) == 0) {
                std::vector<Rational> c(F.degree());
                for (auto& v : c) v = Rational(num(rng), den(rng));
                m.set(i, j, F.from_coeffs(std::move(c)));
            }
    return m;
}

}  // namespace

TEST_CASE("rref basics") {
    CycField F(3);
    LinOp id = LinOp::identity(F, 4);
    RrefResult rr = rref(id);
    REQUIRE(rr.rank == 4);
    REQUIRE(rr.pivots == std::vector<int>{0, 1, 2, 3});

    LinOp zero(F, 3, 5);
    REQUIRE(rref(zero).rank == 0);
    REQUIRE(kernel(zero).dim() == 5);
    REQUIRE(image(zero).dim() == 0);
}

TEST_CASE("rref is idempotent and deterministic") {
    CycField F(5);
    std::mt19937 rng(23);
    for (int i = 0; i < 30; ++i) {
        LinOp m = random_matrix(F, rng, 6, 8);
        RrefResult rr = rref(m);
        RrefResult again = rref(rr.R);
        REQUIRE(again.R == rr.R);
        REQUIRE(again.pivots == rr.pivots);
        // an independent recomputation is bit-identical
        REQUIRE(rref(m).R == rr.R);
    }
}

TEST_CASE("rank-nullity on random matrices") {
    CycField F(3);
    std::mt19937 rng(29);
    for (int i = 0; i < 40; ++i) {
        std::uniform_int_distribution<int> dim(1, 9);
        LinOp m = random_matrix(F, rng, dim(rng), dim(rng));
        Subspace ker = kernel(m);
        REQUIRE(ker.dim() + rref(m).rank == m.cols());
        for (const auto& v : ker.basis()) REQUIRE(m.apply(v).empty());
        REQUIRE(image(m).dim() == rref(m).rank);
    }
}

TEST_CASE("solve") {
    CycField F(3);
    LinOp id = LinOp::identity(F, 5);
    SparseVec b;
    b.set(2, F.rat(7));
    b.set(4, F.q_power(1));
    auto x = solve(id, b);
    REQUIRE(x.has_value());
    REQUIRE(*x == b);

    // inconsistent system
    LinOp m(F, 2, 1);
    m.set(0, 0, F.one());
    SparseVec bad;
    bad.set(1, F.one());
    REQUIRE(!solve(m, bad).has_value());

    std::mt19937 rng(31);
    for (int i = 0; i < 30; ++i) {
        std::uniform_int_distribution<int> dim(1, 8);
        LinOp a = random_matrix(F, rng, dim(rng), dim(rng));
        SparseVec x0;
        for (int j = 0; j < a.cols(); ++j)
            if (rng() % 2) x0.set(j, F.rat(static_cast<long>(rng() % 7) - 3));
        SparseVec rhs = a.apply(x0);
        auto sol = solve(a, rhs);
        REQUIRE(sol.has_value());
        REQUIRE(a.apply(*sol) == rhs);
    }
}

TEST_CASE("subspace calculus") {
    CycField F(3);
    std::mt19937 rng(37);
    for (int i = 0; i < 25; ++i) {
        LinOp mu_ = random_matrix(F, rng, 6, 10);
        LinOp mv = random_matrix(F, rng, 4, 10);
        Subspace U = image(mu_.transpose());
        Subspace V = image(mv.transpose());
        Subspace sum = Subspace::sum(U, V);
        Subspace inter = Subspace::intersect(U, V);
        REQUIRE(sum.dim() == U.dim() + V.dim() - inter.dim());
        for (const auto& v : inter.basis()) {
            REQUIRE(U.contains(v));
            REQUIRE(V.contains(v));
        }
        // complement inside the sum
        Subspace C = U.complement_in(sum);
        REQUIRE(C.dim() + U.dim() == sum.dim());
        REQUIRE(Subspace::intersect(C, U).dim() == 0);
        REQUIRE(Subspace::sum(C, U) == sum);
        REQUIRE(U.quotient_dim_in(sum) == sum.dim() - U.dim());
    }

    Subspace W = Subspace::span(3, {SparseVec::unit(0, F.one())});
    REQUIRE(W == W);
    REQUIRE(Subspace::intersect(W, W) == W);
    REQUIRE(W.quotient_dim_in(W) == 0);
    Subspace big = Subspace::span(
        3, {SparseVec::unit(1, F.one()), SparseVec::unit(2, F.one())});
    REQUIRE_THROWS(W.complement_in(big));  // W not inside big
}

TEST_CASE("canonical residues and quotients") {
    CycField F(3);
    Subspace W = Subspace::span(4, {SparseVec::unit(0, F.one()),
                                    SparseVec::unit(1, F.one())});
    SparseVec v;
    v.set(0, F.rat(5));
    v.set(2, F.rat(1));
    SparseVec red = W.reduce(v);
    REQUIRE(red.get(0).is_zero());
    REQUIRE(red.get(2) == F.one());
    for (const auto& b : W.basis()) REQUIRE(W.reduce(b).empty());

    EchelonBasis full(4);
    for (int i = 0; i < 4; ++i) full.insert(SparseVec::unit(i, F.one()));
    QuotientSpace Q(Subspace(full), W);
    REQUIRE(Q.dim() == 2);
    auto coords = Q.coords(v);
    REQUIRE(coords.size() == 2);
    REQUIRE(coords[0] == F.one());  // the residue's coefficient on index 2
}
