#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>

#include "sgr/errors.hpp"

namespace {

struct CliRun {
    int exit_code = -1;
    std::string output;
};

CliRun run_cli(const std::string& args) {
    const std::string cmd = std::string(SGR_CLI_PATH) + " " + args + " 2>&1";
    std::array<char, 4096> buf{};
    CliRun result;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    while (fgets(buf.data(), buf.size(), pipe)) result.output += buf.data();
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    REQUIRE(in.good());
    return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

const std::string kSamples = SGR_SAMPLES_DIR;

}  // namespace

TEST_CASE("nf prints normal forms and uses exit code 2 on bad input") {
    CHECK(run_cli("nf --example weyl --expr \"y*x\"").output == "x*y + 1\n");
    CHECK(run_cli("nf --example weyl --expr \"x\"").output == "x\n");
    CHECK(run_cli("nf --example usl2 --expr \"h*f\"").output == "f*h - 2*f\n");
    CHECK(run_cli("nf --example \"qweyl(2)\" --expr \"y*x\"").output == "2*x*y + 1\n");

    const CliRun bad = run_cli("nf --example weyl --expr \"y*(\"");
    CHECK(bad.exit_code == 2);
    CHECK(bad.output.find("parse error") != std::string::npos);

    CHECK(run_cli("nf --example nosuch --expr x").exit_code == 2);
}

TEST_CASE("nf accepts presentation files") {
    const CliRun r = run_cli("nf --ring " + kSamples + "/weyl.ring --expr \"y*x*x\"");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "x^2*y + 2*x\n");
}

TEST_CASE("confluence subcommand reports pass/fail") {
    const CliRun ok = run_cli("confluence --example usl2");
    CHECK(ok.exit_code == 0);
    CHECK(ok.output.find("pass") != std::string::npos);

    SUBCASE("SGR_MAX_DEGREE overrides the default bound") {
        const CliRun r = run_cli("confluence --example weyl");
        CHECK(r.output.find("degree 6") != std::string::npos);
        FILE* pipe = popen(("SGR_MAX_DEGREE=4 " + std::string(SGR_CLI_PATH) + " confluence --example weyl 2>&1").c_str(), "r");
        REQUIRE(pipe != nullptr);
        std::string out;
        std::array<char, 4096> buf{};
        while (fgets(buf.data(), buf.size(), pipe)) out += buf.data();
        pclose(pipe);
        CHECK(out.find("degree 4") != std::string::npos);
    }
}

TEST_CASE("resolve exits 3 on the zero-module outcome and 0 otherwise") {
    const CliRun usl2 = run_cli("resolve --example usl2 --ideal \"e,f,h\" --degree 5");
    CHECK(usl2.exit_code == 0);
    CHECK(usl2.output.find("R(0) R(-1)^3 R(-2)^3 R(-3)") != std::string::npos);
    CHECK(usl2.output.find("agree") != std::string::npos);

    const CliRun weyl = run_cli("resolve --example weyl --ideal \"x,y\" --degree 4 --json /tmp/sgr_weyl_resolve.json");
    CHECK(weyl.exit_code == 3);
    CHECK(weyl.output.find("zero module") != std::string::npos);
    const std::string json = slurp("/tmp/sgr_weyl_resolve.json");
    CHECK(json.find("\"zero_module\": true") != std::string::npos);
    CHECK(json.find("\"agreement\": \"disagree\"") != std::string::npos);

    SUBCASE("the JSON report carries the published schema keys") {
        run_cli("resolve --example usl2 --ideal \"e,f,h\" --degree 4 --json /tmp/sgr_usl2_resolve.json");
        const std::string r = slurp("/tmp/sgr_usl2_resolve.json");
        for (const char* key : {"\"ring\"", "\"D\"", "\"positions\"", "\"shifts\"", "\"checks\"",
                                "\"certificates\"", "\"paper_claim\"", "\"agreement\""}) {
            CHECK(r.find(key) != std::string::npos);
        }
    }

    CHECK(run_cli("resolve --example weyl --ideal \"x+1\" --degree 4").exit_code == 2);
}

TEST_CASE("verify consumes certificate files") {
    const CliRun ok = run_cli("verify " + kSamples + "/poly2_koszul.cert --degree 6");
    CHECK(ok.exit_code == 0);
    CHECK(ok.output.find("verified") != std::string::npos);

    const CliRun usl2 = run_cli("verify " + kSamples + "/usl2_trivial.cert --degree 5");
    CHECK(usl2.exit_code == 0);
    CHECK(usl2.output.find("verified") != std::string::npos);

    // tamper with the syzygy: d2 = (y, x) is not a complex
    const std::string broken = "ring poly2\ngen x degree 1\ngen y degree 1\nrule y*x -> x*y\n"
                               "map d1 : R(-1)^2 -> R(0) = [ x, y ]\n"
                               "map d2 : R(-2) -> R(-1)^2 = [ y, x ]\n"
                               "augment x, y\n";
    std::ofstream("/tmp/sgr_broken.cert") << broken;
    const CliRun bad = run_cli("verify /tmp/sgr_broken.cert --degree 5");
    CHECK(bad.exit_code == 0);  // findings are report content, not failures
    CHECK(bad.output.find("FAILED") != std::string::npos);
}

TEST_CASE("member reports bounded ideal membership") {
    const CliRun yes = run_cli("member --example weyl --target \"1\" --ideal \"x,y\" --degree 6");
    CHECK(yes.exit_code == 0);
    CHECK(yes.output.find("member") != std::string::npos);
    const CliRun no = run_cli("member --example poly2 --target \"1\" --ideal \"x,y\" --degree 6");
    CHECK(no.output.find("not a member") != std::string::npos);
}

TEST_CASE("baer consumes problem files with both outcomes and the consistency rejection") {
    const CliRun inc = run_cli("baer --problem " + kSamples + "/weyl_inclusion.baer --degree 5 --json /tmp/sgr_baer.json");
    CHECK(inc.exit_code == 0);
    CHECK(inc.output == "solvable\n");
    const std::string json = slurp("/tmp/sgr_baer.json");
    CHECK(json.find("\"solvable\": true") != std::string::npos);
    CHECK(json.find("\"verification_pass\": true") != std::string::npos);

    const CliRun unsolvable = run_cli("baer --problem " + kSamples + "/weyl_gy_equals_x.baer --degree 5");
    CHECK(unsolvable.exit_code == 0);
    CHECK(unsolvable.output == "unsolvable\n");

    const CliRun bad = run_cli("baer --problem " + kSamples + "/usl2_inconsistent.baer --degree 4");
    CHECK(bad.exit_code == 2);
    CHECK(bad.output.find("syzygy") != std::string::npos);

    const CliRun explicit_mod = run_cli("baer --problem " + kSamples + "/explicit_module.baer --degree 1");
    CHECK(explicit_mod.exit_code == 0);
    CHECK(explicit_mod.output == "unsolvable\n");
}

TEST_CASE("non-confluent rings are refused unless forced") {
    const std::string nonpbw = "ring nonpbw\ngen x degree 1\ngen y degree 1\ngen z degree 1\n"
                               "rule y*x -> x*y + z\nrule z*x -> x*z + x\nrule z*y -> y*z\n";
    std::ofstream("/tmp/sgr_nonpbw.ring") << nonpbw;
    const CliRun refused = run_cli("resolve --ring /tmp/sgr_nonpbw.ring --ideal \"x\" --degree 4");
    CHECK(refused.exit_code == 2);
    CHECK(refused.output.find("confluence") != std::string::npos);
    // confluence itself still reports the failure as content
    const CliRun report = run_cli("confluence --ring /tmp/sgr_nonpbw.ring");
    CHECK(report.exit_code == 0);
    CHECK(report.output.find("FAIL") != std::string::npos);
}

TEST_CASE("paper-suite emits byte-identical reports across runs") {
    CHECK(run_cli("paper-suite --degree 5 --json /tmp/sgr_suite_a.json").exit_code == 0);
    CHECK(run_cli("paper-suite --degree 5 --json /tmp/sgr_suite_b.json").exit_code == 0);
    CHECK(slurp("/tmp/sgr_suite_a.json") == slurp("/tmp/sgr_suite_b.json"));
}
