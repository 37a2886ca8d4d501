#include <catch2/catch_amalgamated.hpp>

#include "cqsl2/json_io.hpp"

using namespace cqsl2;

TEST_CASE("scalar json uses num/den strings by power-basis degree") {
    CycField F(3);
    CycScalar x = F.from_coeffs({Rational(1, 3), Rational(-2)});
    Json j = scalar_json(x);
    REQUIRE(j.dump() == R"(["1/3","-2/1"])");
    REQUIRE(scalar_from_json(F, j) == x);
}

TEST_CASE("matrix export schema") {
    CycField F(3);
    LinOp m(F, 2, 3);
    m.set(0, 1, F.q_power(1));
    m.set(1, 0, F.rat(2));
    Json j = matrix_json(m);
    REQUIRE(j["rows"] == 2);
    REQUIRE(j["cols"] == 3);
    REQUIRE(j["field"]["r"] == 3);
    REQUIRE(j["entries"].size() == 2);
    // sorted by (i, j)
    REQUIRE(j["entries"][0][0] == 0);
    REQUIRE(j["entries"][0][1] == 1);
    REQUIRE(j["entries"][1][0] == 1);
}

TEST_CASE("algebra elements and forms round trip") {
    DeRhamComplex cx(3);
    const QuantumAlgebra& A = cx.algebra();
    AlgElem x = A.monomial(1, 0, 2, cx.field().q_power(1)) +
                A.monomial(0, 1, 0, cx.field().rat(-3, 7));
    Json ja = algelem_json(A, x);
    REQUIRE(algelem_from_json(A, ja) == x);

    Form f = cx.form_basis(2, 3, x) + cx.form_basis(2, 0, A.one());
    Json jf = form_json(cx, f);
    REQUIRE(jf["degree"] == 2);
    REQUIRE(form_from_json(cx, jf) == f);
}

TEST_CASE("monomial strings parse") {
    CycField F(5);
    QuantumAlgebra A(F);
    Monomial w = monomial_from_string(A, "a^2 b c^3");
    REQUIRE(w == Monomial{2, 1, 3});
    REQUIRE(monomial_from_string(A, "1") == Monomial{0, 0, 0});
    REQUIRE_THROWS(monomial_from_string(A, "z^2"));
}

TEST_CASE("report schemas") {
    DimsReport rep;
    rep.r = 3;
    rep.all = {27, 108, 162, 108, 27};
    Json j = dims_report_json(rep);
    REQUIRE(j["r"] == 3);
    REQUIRE(j["all"][2] == 162);
    REQUIRE(!j.contains("cohomology"));

    GaugeReport g;
    g.r = 3;
    g.all_zero_modes = {28, 54};
    Json jg = gauge_report_json(g);
    REQUIRE(jg["all_zero_modes"]["mod_exact"] == 28);
    REQUIRE(jg["all_zero_modes"]["raw"] == 54);
}

TEST_CASE("wedge structure constant export") {
    DeRhamComplex cx(3);
    Json j = wedge_table_json(cx.exterior(), 1, 1);
    REQUIRE(j["op"] == "wedge");
    REQUIRE(j["deg"][0] == 1);
    // e_a ∧ e_a = mu e_bc appears as an entry (0, 0, index of bc, [mu])
    bool found = false;
    for (const auto& e : j["entries"])
        if (e[0] == 0 && e[1] == 0 && e[2] == 3) found = true;
    REQUIRE(found);
}
