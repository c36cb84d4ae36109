#pragma once

// Command cores shared by the CLI and the test suites. Each returns the
// structured report plus the process exit code (0 success, 2 input error,
// 3 distinguished zero-module outcome).

#include "sgr/parser.hpp"
#include "sgr/report.hpp"

namespace sgr {

struct CommandResult {
    Json report;
    int exit_code = 0;
};

CommandResult run_confluence(const RingPresentation& ring, int max_degree);
CommandResult run_resolve(const RingPresentation& ring, const std::vector<Polynomial>& ideal_gens, int max_length,
                          int D);
CommandResult run_member(const RingPresentation& ring, const Polynomial& target, const std::vector<Polynomial>& gens,
                         int D);
CommandResult run_baer(const BaerProblemFile& problem, int D);
CommandResult run_verify(const CertificateFile& cert, int D);

// Full corpus regression reproducing every worked example with
// agree/disagree annotations. Deterministic: byte-identical across runs.
Json run_paper_suite(int D);

// The synthetic non-confluent three-generator system used by tests and the
// paper suite.
RingPresentation load_nonpbw();

}  // namespace sgr
