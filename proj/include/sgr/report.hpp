#pragma once

// JSON report builders. Reports are deterministic: ordered keys, canonical
// "p/q" rationals, no timestamps or machine state — two identical runs must
// produce byte-identical output.

#include <json.hpp>

#include "sgr/baer.hpp"
#include "sgr/homology.hpp"

namespace sgr {

using Json = nlohmann::ordered_json;

Json to_json(const RingPresentation& ring, const ConfluenceReport& report);
Json to_json(const RingPresentation& ring, const SgAxiomReport& report);
Json to_json(const ComplexReport& report);
Json to_json(const RingPresentation& ring, const MembershipCertificate& cert);
Json to_json(const PdReport& report);
Json to_json(const RingPresentation& ring, const LinearityReport& report);

// The resolution report schema: {ring, D, positions, shifts, checks,
// certificates, paper_claim?, agreement?}.
Json resolution_report(const RingPresentation& ring, const Resolution& res);

Json baer_report(const RingPresentation& ring, const FiniteSGModule& E, const BaerResult& result);

// Canonical serialization used everywhere (2-space indent, trailing newline).
std::string dump_report(const Json& j);

Json tool_header(const std::string& command, const std::string& ring_name, int D);

}  // namespace sgr
