#include <catch2/catch_amalgamated.hpp>

#include "cqsl2/maxwell.hpp"

using namespace cqsl2;
using L = ExteriorAlgebra;

namespace {

struct Stack {
    DeRhamComplex cx;
    HodgeStructure h;
    MaxwellTheory mx;
    explicit Stack(int r) : cx(r), h(cx), mx(h) {}
};

}  // namespace

TEST_CASE("Maxwell operator and gauge invariance") {
    Stack s(3);
    REQUIRE(s.mx.max_op().rows() == s.cx.dim_omega(1));
    REQUIRE(s.mx.ker_max().dim() == 54);
    REQUIRE(s.mx.image_max().dim() == 54);
    REQUIRE(s.mx.ker_max().contains(s.cx.exact(1)));
    REQUIRE(s.mx.mod_exact_dim(s.mx.ker_max()) == 28);
}

TEST_CASE("electromagnetic summary table at r = 3") {
    Stack s(3);
    GaugeReport g = s.mx.gauge_report();
    auto row = [](const TableRow& t, int me, int raw) {
        return t.mod_exact == me && t.raw == raw;
    };
    REQUIRE(row(g.all_zero_modes, 28, 54));
    REQUIRE(row(g.coclosed, 20, 32));
    REQUIRE(row(g.temporal, 20, 32));
    REQUIRE(row(g.cocl_and_temp, 7, 19));
    REQUIRE(row(g.self_dual, 16, 42));
    REQUIRE(row(g.zero_curvature, 4, 30));
    REQUIRE(row(g.cocl_and_sd, 8, 20));
    REQUIRE(row(g.temp_and_sd, 8, 20));
    REQUIRE(row(g.theta_f, 13, 13));
    REQUIRE(g.all_sources == 54);
    REQUIRE(g.spatial_sources == 40);
    REQUIRE(g.theta_f_sources == 5);
}

TEST_CASE("patching certificates at r = 3") {
    Stack s(3);
    PatchingReport p = s.mx.patching_report();
    REQUIRE(p.exact_inside_kernel);
    REQUIRE(p.lorentz_plus_temporal_covers);
    // raw version of the same sum: Lorentz + temporal + exact = ker Max
    Subspace raw = Subspace::sum(
        Subspace::sum(s.mx.lorentz_solutions(), s.mx.temporal_solutions()),
        s.cx.exact(1));
    REQUIRE(raw == s.mx.ker_max());
    REQUIRE(raw.dim() == 54);
    REQUIRE(p.both_gauges_dim == 12);
    REQUIRE(p.simultaneous_gauge_dim == 7);
    REQUIRE(p.sd_asd_raw_decomposition);
    REQUIRE(p.sd_asd_quotient_decomposition);
    REQUIRE(p.theta_f_plus_sd_covers);
    REQUIRE(p.temporal_plus_sd_covers);
    REQUIRE(p.temporal_sd_overlap_dim == 8);
}

TEST_CASE("named mode lists at r = 3") {
    Stack s(3);
    ModeListReport t = s.mx.temporal_mode_list();
    REQUIRE(t.all_ok());
    REQUIRE(t.checks.size() == 12);
    ModeListReport sd = s.mx.selfdual_mode_list();
    REQUIRE(sd.all_ok());
    ModeListReport csd = s.mx.coclosed_selfdual_mode_list();
    REQUIRE(csd.all_ok());
}

TEST_CASE("theta f modes") {
    Stack s(3);
    const Subspace& tf = s.mx.theta_f_modes();
    REQUIRE(tf.dim() == 13);
    REQUIRE(s.mx.ker_max().contains(tf));
    // theta itself is one of them
    REQUIRE(tf.contains(s.cx.theta_form().vec()));
}

TEST_CASE("source analysis at r = 3") {
    Stack s(3);
    SourceReport src = s.mx.source_report();
    REQUIRE(src.image_dim == 54);
    REQUIRE(src.theta_dim == 5);
    REQUIRE(src.spatial_dim == 40);
    REQUIRE(src.ez_dim == 1);
    REQUIRE(src.eb_dim == 6);
    REQUIRE(src.ec_dim == 6);
    REQUIRE(src.theta_basis_ok);
    REQUIRE(src.ez_basis_ok);
    REQUIRE(src.eb_basis_ok);
    REQUIRE(src.ec_basis_ok);
}

TEST_CASE("explicit sourced solutions at r = 3") {
    Stack s(3);
    ModeListReport ex = s.mx.explicit_solution_checks();
    REQUIRE(ex.checks.size() == 4);
    for (const auto& c : ex.checks) {
        INFO(c.name);
        REQUIRE(c.zero_mode);      // Max(A) = J
        REQUIRE(c.gauge_ok);       // Lorentz gauge where claimed
        REQUIRE(c.curvature_ok);   // F = dA matches
    }
    ModeListReport em = s.mx.em_direction_checks();
    for (const auto& c : em.checks) {
        INFO(c.name);
        REQUIRE((c.zero_mode && c.gauge_ok && c.curvature_ok && c.extra_ok));
    }
}

TEST_CASE("solver statuses") {
    Stack s(3);
    const DeRhamComplex& cx = s.cx;
    // theta is a valid source with a Lorentz-gauge solution
    SolveResult sol = s.mx.solve_source(cx.theta_form(), Gauge::Lorentz);
    REQUIRE(sol.status == SolveResult::Status::Solved);
    REQUIRE(s.mx.max_op().apply(sol.A.vec()) == cx.theta_form().vec());
    REQUIRE(s.h.delta(1).apply(sol.A.vec()).empty());
    REQUIRE(sol.F == cx.d(sol.A));

    // e_b . b is not a source
    Form bad = cx.form(cx.exterior().e(L::B), cx.algebra().b());
    REQUIRE(s.mx.solve_source(bad).status == SolveResult::Status::NoSolution);

    // some valid source admits no Lorentz-gauge solution: the image of Max
    // restricted to coclosed 1-forms is strictly smaller than its image
    LinOp stacked = s.mx.max_op().stacked(s.h.delta(1));
    Subspace reachable = Subspace::zero(cx.dim_omega(1));
    {
        // image of Max over the coclosed subspace
        Subspace cocl = kernel(s.h.delta(1));
        std::vector<SparseVec> imgs;
        for (const auto& v : cocl.basis())
            imgs.push_back(s.mx.max_op().apply(v));
        reachable = Subspace::span(cx.dim_omega(1), imgs);
    }
    REQUIRE(reachable.dim() < s.mx.image_max().dim());
    Form stuck;
    for (const auto& v : s.mx.image_max().basis())
        if (!reachable.contains(v)) {
            stuck = cx.from_vec(1, v);
            break;
        }
    REQUIRE(!stuck.is_zero());
    REQUIRE(s.mx.solve_source(stuck).status == SolveResult::Status::Solved);
    REQUIRE(s.mx.solve_source(stuck, Gauge::Lorentz).status ==
            SolveResult::Status::GaugeInfeasible);
}

TEST_CASE("named sources") {
    Stack s(3);
    for (const char* name : {"theta", "ez", "eb", "ec", "ecb2"}) {
        Form J = s.mx.named_source(name);
        REQUIRE(s.mx.solve_source(J).status == SolveResult::Status::Solved);
    }
    REQUIRE_THROWS(s.mx.named_source("nope"));
}

TEST_CASE("observed isomorphism between harmonic 1-forms and self-dual modes") {
    Stack s(3);
    REQUIRE(s.h.harmonic(1).dim() ==
            s.mx.mod_exact_dim(s.mx.selfdual_solutions(true)));
}

TEST_CASE("substitute mode A6' shares the curvature direction of A6") {
    Stack s(3);
    const DeRhamComplex& cx = s.cx;
    const QuantumAlgebra& A = cx.algebra();
    Form A6 = cx.form(cx.exterior().e(L::C), A.d() * A.d() * A.b());
    Form A6p = cx.form(cx.exterior().e_z(), A.d() * A.b() * A.b());
    Form f1 = cx.d(A6), f2 = cx.d(A6p);
    REQUIRE(!f1.is_zero());
    // proportional curvatures
    CycScalar ratio = f2.vec().entries().front().val /
                      f1.vec().entries().front().val;
    REQUIRE(f2.vec() == ratio * f1.vec());
}
