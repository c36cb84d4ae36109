#include "sgr/report.hpp"

#include "sgr/version.hpp"

namespace sgr {

Json tool_header(const std::string& command, const std::string& ring_name, int D) {
    Json j;
    j["tool"] = Json{{"name", kToolName}, {"version", kToolVersion}};
    j["command"] = command;
    if (!ring_name.empty()) j["ring"] = ring_name;
    j["D"] = D;
    return j;
}

Json to_json(const RingPresentation& ring, const ConfluenceReport& report) {
    Json j;
    j["ring"] = ring.name;
    j["max_degree"] = report.max_degree;
    j["pass"] = report.pass;
    Json overlaps = Json::array();
    for (const auto& o : report.overlaps) {
        Json e;
        e["overlap"] = ring.generators[static_cast<size_t>(o.k)].name + "*" +
                       ring.generators[static_cast<size_t>(o.j)].name + "*" +
                       ring.generators[static_cast<size_t>(o.i)].name;
        e["reduce_left"] = poly_to_string(ring, o.reduce_left);
        e["reduce_right"] = poly_to_string(ring, o.reduce_right);
        e["residual"] = poly_to_string(ring, o.residual);
        e["pass"] = o.residual.is_zero();
        overlaps.push_back(std::move(e));
    }
    j["overlaps"] = std::move(overlaps);
    return j;
}

Json to_json(const RingPresentation& ring, const SgAxiomReport& report) {
    Json j;
    j["ring"] = ring.name;
    j["max_degree"] = report.max_degree;
    j["unit_in_degree_zero"] = report.unit_in_degree_zero;
    j["pass"] = report.pass();
    Json v = Json::array();
    for (const auto& w : report.violations) {
        v.push_back(Json{{"u", mono_to_string(ring, w.u)},
                         {"v", mono_to_string(ring, w.v)},
                         {"product", poly_to_string(ring, w.product)},
                         {"bound", w.bound}});
    }
    j["violations"] = std::move(v);
    return j;
}

Json to_json(const ComplexReport& report) {
    Json j;
    j["pass"] = report.pass;
    Json checks = Json::array();
    for (const auto& c : report.checks) {
        Json e;
        e["position"] = c.position;
        if (c.degree >= 0) e["degree"] = c.degree;
        e["kind"] = c.kind;
        e["status"] = to_string(c.status);
        if (!c.witness.empty()) e["witness"] = c.witness;
        checks.push_back(std::move(e));
    }
    j["checks"] = std::move(checks);
    return j;
}

Json to_json(const RingPresentation& ring, const MembershipCertificate& cert) {
    Json j;
    j["target"] = poly_to_string(ring, cert.target);
    Json coeffs = Json::array();
    for (size_t i = 0; i < cert.gens.size(); ++i) {
        coeffs.push_back(Json{{"generator", poly_to_string(ring, cert.gens[i])},
                              {"coefficient", poly_to_string(ring, cert.coefficients[i])}});
    }
    j["coefficients"] = std::move(coeffs);
    j["verified"] = verify_certificate(ring, cert);
    return j;
}

Json to_json(const PdReport& report) {
    Json j;
    j["zero_module"] = report.zero_module;
    j["length"] = report.length;
    j["certified"] = report.certified;
    j["D"] = report.D;
    j["summary"] = report.summary;
    if (report.paper_claim) j["paper_claim"] = *report.paper_claim;
    if (report.agreement) j["agreement"] = *report.agreement;
    return j;
}

Json to_json(const RingPresentation& ring, const LinearityReport& report) {
    Json j;
    j["max_degree"] = report.max_degree;
    j["pairs_checked"] = report.pairs_checked;
    j["pass"] = report.pass();
    Json v = Json::array();
    for (const auto& w : report.violations) {
        v.push_back(Json{{"r_a", mono_to_string(ring, w.ra)},
                         {"r_k", mono_to_string(ring, w.rk)},
                         {"phi(ra*rk)", element_to_string(ring, w.lhs)},
                         {"ra*phi(rk)", element_to_string(ring, w.rhs)},
                         {"residual", element_to_string(ring, w.residual)}});
    }
    j["violations"] = std::move(v);
    return j;
}

Json resolution_report(const RingPresentation& ring, const Resolution& res) {
    Json j;
    j["ring"] = ring.name;
    j["D"] = res.D;
    j["zero_module"] = res.zero_module;

    Json positions = Json::array();
    Json shifts = Json::array();
    for (const auto& pos : res.complex.positions) {
        positions.push_back(shift_sum_to_string(pos));
        shifts.push_back(pos.shifts);
    }
    j["positions"] = std::move(positions);
    j["shifts"] = std::move(shifts);

    Json diffs = Json::array();
    for (size_t i = 0; i < res.complex.diffs.size(); ++i) {
        Json d;
        d["name"] = "d" + std::to_string(i + 1);
        d["source"] = shift_sum_to_string(res.complex.diffs[i].source);
        d["target"] = shift_sum_to_string(res.complex.diffs[i].target);
        Json entries = Json::array();
        for (const auto& row : res.complex.diffs[i].entries) {
            Json r = Json::array();
            for (const auto& e : row) r.push_back(poly_to_string(ring, e));
            entries.push_back(std::move(r));
        }
        d["entries"] = std::move(entries);
        d["certificate"] = to_string(res.diff_semantics[i]);
        diffs.push_back(std::move(d));
    }
    j["differentials"] = std::move(diffs);

    Json checks = Json::array();
    if (!res.zero_module) {
        const ComplexReport complex_report = verify_complex(ring, res.complex, res.D);
        const ComplexReport exact_report = verify_exactness(ring, res.complex, res.D);
        auto add = [&](const ComplexReport& r) {
            for (const auto& c : r.checks) {
                Json e;
                e["position"] = c.position;
                if (c.degree >= 0) e["degree"] = c.degree;
                e["kind"] = c.kind;
                e["status"] = to_string(c.status);
                if (!c.witness.empty()) e["witness"] = c.witness;
                checks.push_back(std::move(e));
            }
        };
        add(complex_report);
        add(exact_report);
        j["complex_pass"] = complex_report.pass;
        j["exactness_pass"] = exact_report.pass;
    }
    j["checks"] = std::move(checks);

    Json certificates = Json::array();
    if (res.unit_certificate) certificates.push_back(to_json(ring, *res.unit_certificate));
    j["certificates"] = std::move(certificates);

    const PdReport pd = pd_estimate(res);
    j["pd"] = to_json(pd);
    if (pd.paper_claim) j["paper_claim"] = *pd.paper_claim;
    if (pd.agreement) j["agreement"] = *pd.agreement;
    return j;
}

Json baer_report(const RingPresentation& ring, const FiniteSGModule& E, const BaerResult& result) {
    (void)ring;
    Json j;
    j["solvable"] = result.solvable;
    j["unknowns"] = result.unknowns;
    j["equations"] = result.equations;
    if (result.solvable) {
        Json x = Json::array();
        for (Index i = 0; i < result.x.size(); ++i) x.push_back(to_string(result.x(i)));
        j["x"] = std::move(x);
        j["x_description"] = E.describe_vector(E.embed(0, result.x));
        Json verification = Json::array();
        bool all_ok = true;
        for (const auto& check : result.transcript) {
            verification.push_back(Json{{"element", check.element}, {"ok", check.ok}});
            all_ok = all_ok && check.ok;
        }
        j["verification"] = std::move(verification);
        j["verification_pass"] = all_ok;
    } else if (result.infeasibility) {
        Json lambda = Json::array();
        for (Index i = 0; i < result.infeasibility->size(); ++i) lambda.push_back(to_string((*result.infeasibility)(i)));
        j["infeasibility_certificate"] = std::move(lambda);
    }
    return j;
}

std::string dump_report(const Json& j) {
    return j.dump(2) + "\n";
}

}  // namespace sgr
