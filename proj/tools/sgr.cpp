// sgr — exact-arithmetic workbench for semi-graded rings presented by
// generators and degree-compatible rewriting rules.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "sgr/suite.hpp"
#include "sgr/version.hpp"

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw sgr::Error("cannot open '" + path + "'");
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

int default_degree() {
    if (const char* env = std::getenv("SGR_MAX_DEGREE")) {
        try {
            return std::max(0, std::stoi(env));
        } catch (...) {
            throw sgr::Error("SGR_MAX_DEGREE is not an integer");
        }
    }
    return 6;
}

sgr::RingPresentation load_ring(const std::string& example, const std::string& ring_file, bool force) {
    sgr::RingPresentation ring;
    if (!example.empty()) {
        ring = sgr::load_example(example);
    } else if (!ring_file.empty()) {
        ring = sgr::parse_presentation(read_file(ring_file));
    } else {
        throw sgr::Error("pass --example NAME or --ring FILE");
    }
    ring.force_nonconfluent = force;
    return ring;
}

std::vector<sgr::Polynomial> parse_ideal(const sgr::RingPresentation& ring, const std::string& ideal) {
    std::vector<sgr::Polynomial> gens;
    size_t start = 0;
    while (start <= ideal.size()) {
        size_t comma = ideal.find(',', start);
        const std::string part = ideal.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        if (part.find_first_not_of(" \t") != std::string::npos) gens.push_back(sgr::parse_polynomial(ring, part));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return gens;
}

void emit(const sgr::Json& report, const std::string& json_path) {
    if (!json_path.empty()) {
        std::ofstream out(json_path);
        if (!out) throw sgr::Error("cannot write '" + json_path + "'");
        out << sgr::dump_report(report);
    }
}

void print_checks_summary(const sgr::Json& result) {
    if (!result.contains("checks")) return;
    long pass = 0, fail = 0;
    for (const auto& c : result["checks"]) {
        if (c["status"] == "pass")
            ++pass;
        else
            ++fail;
    }
    std::cout << "checks: " << pass << " pass, " << fail << " fail\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact workbench for semi-graded rings, shift modules and bounded-degree resolutions"};
    app.set_version_flag("--version", std::string(sgr::kToolVersion));
    app.require_subcommand(1);

    std::string example, ring_file, expr, ideal, json_path, problem_file, cert_file, target;
    int degree = default_degree();
    int max_length = 6;
    bool force = false;

    auto add_ring_opts = [&](CLI::App* cmd) {
        cmd->add_option("--example", example, "built-in ring: weyl, qweyl(q), usl2, jordan_def, poly2");
        cmd->add_option("--ring", ring_file, "presentation file");
        cmd->add_option("--degree", degree, "truncation degree D");
        cmd->add_option("--json", json_path, "write the JSON report to this path");
        cmd->add_flag("--force", force, "run even when the confluence check fails");
    };

    CLI::App* nf = app.add_subcommand("nf", "PBW normal form of an expression");
    add_ring_opts(nf);
    nf->add_option("--expr", expr, "polynomial expression")->required();

    CLI::App* confluence = app.add_subcommand("confluence", "diamond-lemma overlap check");
    add_ring_opts(confluence);

    CLI::App* resolve = app.add_subcommand("resolve", "build and verify a bounded projective resolution of R/J");
    add_ring_opts(resolve);
    resolve->add_option("--ideal", ideal, "comma-separated homogeneous ideal generators")->required();
    resolve->add_option("--max-length", max_length, "maximum resolution length");

    CLI::App* verify = app.add_subcommand("verify", "verify a resolution certificate file");
    verify->add_option("file", cert_file, "certificate file")->required();
    verify->add_option("--degree", degree, "truncation degree D");
    verify->add_option("--json", json_path, "write the JSON report to this path");
    verify->add_flag("--force", force, "run even when the confluence check fails");

    CLI::App* member = app.add_subcommand("member", "bounded ideal membership with certificate");
    add_ring_opts(member);
    member->add_option("--target", target, "target expression")->required();
    member->add_option("--ideal", ideal, "comma-separated ideal generators")->required();

    CLI::App* baer = app.add_subcommand("baer", "solve g(r) = r x over E_0 for a Baer problem file");
    baer->add_option("--problem", problem_file, "problem file")->required();
    baer->add_option("--degree", degree, "degree bound for the checks");
    baer->add_option("--json", json_path, "write the JSON report to this path");
    baer->add_flag("--force", force, "run even when the confluence check fails");

    CLI::App* paper = app.add_subcommand("paper-suite", "corpus regression over every worked example");
    paper->add_option("--degree", degree, "truncation degree D");
    paper->add_option("--json", json_path, "write the JSON report to this path");

    CLI11_PARSE(app, argc, argv);

    try {
        if (nf->parsed()) {
            const sgr::RingPresentation ring = load_ring(example, ring_file, force);
            const sgr::Polynomial p = sgr::parse_polynomial(ring, expr);
            std::cout << sgr::poly_to_string(ring, p) << "\n";
            return 0;
        }
        if (confluence->parsed()) {
            const sgr::RingPresentation ring = load_ring(example, ring_file, force);
            const sgr::CommandResult result = sgr::run_confluence(ring, std::max(degree, 3));
            emit(result.report, json_path);
            std::cout << "ring " << ring.name << ": confluence "
                      << (result.report["result"]["pass"].get<bool>() ? "pass" : "FAIL") << " (degree "
                      << std::max(degree, 3) << ", " << result.report["result"]["overlaps"].size() << " overlaps)\n";
            for (const auto& o : result.report["result"]["overlaps"]) {
                std::cout << "  " << o["overlap"].get<std::string>() << ": "
                          << (o["pass"].get<bool>() ? "resolves" : "residual " + o["residual"].get<std::string>())
                          << "\n";
            }
            return result.exit_code;
        }
        if (resolve->parsed()) {
            const sgr::RingPresentation ring = load_ring(example, ring_file, force);
            ring.require_confluent();
            const auto gens = parse_ideal(ring, ideal);
            const sgr::CommandResult result = sgr::run_resolve(ring, gens, max_length, degree);
            emit(result.report, json_path);
            const auto& res = result.report["result"];
            if (res["zero_module"].get<bool>()) {
                std::cout << "R/J is the zero module: 1 lies in the ideal (certificate in report)\n";
            } else {
                std::cout << "resolution:";
                for (const auto& p : res["positions"]) std::cout << " " << p.get<std::string>();
                std::cout << "\n" << res["pd"]["summary"].get<std::string>() << "\n";
                print_checks_summary(res);
            }
            if (result.report["result"].contains("agreement"))
                std::cout << "paper claim: " << result.report["result"]["agreement"].get<std::string>() << "\n";
            return result.exit_code;
        }
        if (verify->parsed()) {
            sgr::CertificateFile cert = sgr::parse_certificate_file(read_file(cert_file));
            cert.ring.force_nonconfluent = force;
            cert.ring.require_confluent();
            const sgr::CommandResult result = sgr::run_verify(cert, degree);
            emit(result.report, json_path);
            if (result.exit_code == 0) {
                std::cout << "certificate " << (result.report["pass"].get<bool>() ? "verified" : "FAILED")
                          << " up to degree " << degree << "\n";
            } else {
                std::cout << result.report["error"].get<std::string>() << "\n";
            }
            return result.exit_code;
        }
        if (member->parsed()) {
            const sgr::RingPresentation ring = load_ring(example, ring_file, force);
            ring.require_confluent();
            const auto gens = parse_ideal(ring, ideal);
            const sgr::Polynomial t = sgr::parse_polynomial(ring, target);
            const sgr::CommandResult result = sgr::run_member(ring, t, gens, degree);
            emit(result.report, json_path);
            std::cout << (result.report["member"].get<bool>() ? "member (certificate in report)"
                                                              : "not a member up to the bound")
                      << "\n";
            return result.exit_code;
        }
        if (baer->parsed()) {
            sgr::BaerProblemFile problem = sgr::parse_baer_problem(read_file(problem_file));
            problem.ring.force_nonconfluent = force;
            problem.ring.require_confluent();
            const sgr::CommandResult result = sgr::run_baer(problem, degree);
            emit(result.report, json_path);
            if (result.exit_code == 0) {
                std::cout << (result.report["result"]["solvable"].get<bool>() ? "solvable" : "unsolvable") << "\n";
            } else {
                std::cout << result.report["error"].get<std::string>() << "\n";
            }
            return result.exit_code;
        }
        if (paper->parsed()) {
            const sgr::Json report = sgr::run_paper_suite(degree);
            emit(report, json_path);
            for (const auto& claim : report["paper_claims"]) {
                std::cout << claim["status"].get<std::string>() << ": " << claim["claim"].get<std::string>() << "\n";
            }
            return 0;
        }
    } catch (const sgr::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const sgr::ValidationError& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return 2;
    } catch (const sgr::NotConfluentError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const sgr::Error& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }
    return 0;
}
