#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace casa {

struct SuiteOptions {
    long long trials = -1;  // -1: suite default (acceptance scale)
    std::uint64_t seed = 20260808;
};

struct SuiteOutcome {
    std::string suite;
    bool pass = false;
    std::string summary;
    nlohmann::json report;
};

// Named verification suites, each an executable acceptance check:
//   revenue-bound       seeded scenario sweep of the revenue guarantee
//   robustness          the same bound with non-strategic and collusive play
//   worst-case          two-tier family mean vs its closed form
//   distribution-bound  per-distribution inequality and the 1/N gap decay
//   vcg                 fixture identities and the substitutes revenue floor
//   sufficiency         preference classes vs their simple menus
//   solver-oracle       solvers vs brute-force enumeration
//   determinism         transcript replay and byte-identical reports
SuiteOutcome run_suite(const std::string& name, const SuiteOptions& opts = {});

const std::vector<std::string>& suite_names();

std::string library_version();

}  // namespace casa
