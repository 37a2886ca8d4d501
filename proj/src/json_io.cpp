#include "cqsl2/json_io.hpp"

#include <sstream>

namespace cqsl2 {

Json scalar_json(const CycScalar& x) {
    Json out = Json::array();
    for (const auto& s : x.to_strings()) out.push_back(s);
    return out;
}

CycScalar scalar_from_json(const CycField& F, const Json& j) {
    std::vector<std::string> strs;
    for (const auto& v : j) strs.push_back(v.get<std::string>());
    return F.parse(strs);
}

Json matrix_json(const LinOp& m) {
    Json out;
    out["rows"] = m.rows();
    out["cols"] = m.cols();
    out["field"] = Json{{"r", m.field().r()}};
    Json entries = Json::array();
    for (int i = 0; i < m.rows(); ++i)
        for (const auto& e : m.row(i).entries())
            entries.push_back(Json::array({i, e.idx, scalar_json(e.val)}));
    out["entries"] = std::move(entries);
    return out;
}

Json wedge_table_json(const ExteriorAlgebra& ext, int dl, int dr) {
    Json out;
    out["op"] = "wedge";
    out["deg"] = Json::array({dl, dr});
    Json entries = Json::array();
    for (int i = 0; i < ExteriorAlgebra::dim(dl); ++i)
        for (int j = 0; j < ExteriorAlgebra::dim(dr); ++j) {
            InvForm w = ext.wedge(ext.basis_form(dl, i), ext.basis_form(dr, j));
            for (int o = 0; o < ExteriorAlgebra::dim(dl + dr); ++o)
                if (!w.coeff(o).is_zero())
                    entries.push_back(Json::array({i, j, o, scalar_json(w.coeff(o))}));
        }
    out["entries"] = std::move(entries);
    return out;
}

Json star_table_json(const HodgeStructure& hodge, int degree) {
    Json out;
    out["op"] = "star";
    out["deg"] = Json::array({degree});
    Json entries = Json::array();
    const LinOp& s = hodge.star_inv(degree);
    for (int i = 0; i < s.rows(); ++i)
        for (const auto& e : s.row(i).entries())
            entries.push_back(Json::array({e.idx, 0, i, scalar_json(e.val)}));
    out["entries"] = std::move(entries);
    return out;
}

Json algelem_json(const QuantumAlgebra& alg, const AlgElem& x) {
    Json out = Json::array();
    for (const auto& e : x.vec().entries())
        out.push_back(Json::array(
            {alg.monomial_string(alg.monomial_at(e.idx)), scalar_json(e.val)}));
    return out;
}

Monomial monomial_from_string(const QuantumAlgebra& alg, const std::string& s) {
    Monomial w;
    std::istringstream in(s);
    std::string tok;
    while (in >> tok) {
        if (tok == "1") continue;
        char g = tok[0];
        int e = 1;
        auto caret = tok.find('^');
        if (caret != std::string::npos) e = std::stoi(tok.substr(caret + 1));
        if (g == 'a') w.m = e;
        else if (g == 'b') w.n = e;
        else if (g == 'c') w.k = e;
        else CQSL2_CHECK(false, "bad monomial token: " + tok);
    }
    CQSL2_CHECK(w.m < alg.r() && w.n < alg.r() && w.k < alg.r(),
                "monomial exponent out of range");
    return w;
}

AlgElem algelem_from_json(const QuantumAlgebra& alg, const Json& j) {
    AlgElem out = alg.zero();
    for (const auto& term : j) {
        Monomial w = monomial_from_string(alg, term.at(0).get<std::string>());
        CycScalar c = scalar_from_json(alg.field(), term.at(1));
        out += alg.monomial(w.m, w.n, w.k, c);
    }
    return out;
}

Json form_json(const DeRhamComplex& cx, const Form& x) {
    Json out;
    out["degree"] = x.degree();
    Json terms = Json::array();
    for (int I = 0; I < ExteriorAlgebra::dim(x.degree()); ++I) {
        AlgElem f = cx.coefficient(x, I);
        if (f.is_zero()) continue;
        terms.push_back(Json::array({cx.exterior().basis_name(x.degree(), I),
                                     algelem_json(cx.algebra(), f)}));
    }
    out["terms"] = std::move(terms);
    return out;
}

Form form_from_json(const DeRhamComplex& cx, const Json& j) {
    int degree = j.at("degree").get<int>();
    Form out = cx.zero_form(degree);
    for (const auto& term : j.at("terms")) {
        std::string name = term.at(0).get<std::string>();
        int idx = -1;
        for (int I = 0; I < ExteriorAlgebra::dim(degree); ++I)
            if (cx.exterior().basis_name(degree, I) == name) idx = I;
        CQSL2_CHECK(idx >= 0, "unknown invariant basis name: " + name);
        AlgElem f = algelem_from_json(cx.algebra(), term.at(1));
        out += cx.form_basis(degree, idx, f);
    }
    return out;
}

Json dims_report_json(const DimsReport& rep) {
    Json out;
    out["r"] = rep.r;
    out["all"] = rep.all;
    out["closed"] = rep.closed;
    out["exact"] = rep.exact;
    return out;
}

namespace {
Json row_json(const TableRow& t) {
    return Json{{"mod_exact", t.mod_exact}, {"raw", t.raw}};
}
}  // namespace

Json gauge_report_json(const GaugeReport& rep) {
    Json out;
    out["r"] = rep.r;
    out["all_zero_modes"] = row_json(rep.all_zero_modes);
    out["coclosed"] = row_json(rep.coclosed);
    out["temporal"] = row_json(rep.temporal);
    out["coclosed_and_temporal"] = row_json(rep.cocl_and_temp);
    out["self_dual"] = row_json(rep.self_dual);
    out["zero_curvature"] = row_json(rep.zero_curvature);
    out["coclosed_and_self_dual"] = row_json(rep.cocl_and_sd);
    out["temporal_and_self_dual"] = row_json(rep.temp_and_sd);
    out["theta_f_modes"] = row_json(rep.theta_f);
    out["all_sources"] = rep.all_sources;
    out["spatial_sources"] = rep.spatial_sources;
    out["theta_f_sources"] = rep.theta_f_sources;
    return out;
}

Json spin0_report_json(const Spin0Report& rep) {
    Json out;
    out["zero_modes_span"] = rep.zero_modes_span;
    out["massive_modes_eigenvalue_ok"] = rep.massive_modes_ok;
    out["kernel_dim"] = rep.kernel_dim;
    Json evs = Json::array();
    for (const auto& e : rep.field_eigenvalues) evs.push_back(scalar_json(e));
    out["field_eigenvalues"] = std::move(evs);
    out["not_diagonalisable_witness"] = Json{
        {"found", rep.witness_found},
        {"eigenvalue", scalar_json(rep.witness_eigenvalue)},
        {"kernel_dim", rep.witness_kernel_dim},
        {"kernel_sq_dim", rep.witness_kernel_sq_dim}};
    return out;
}

}  // namespace cqsl2
