#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "picdisc/fq_poly.hpp"

namespace picdisc {

struct CellResult {
    std::string cell;
    std::uint64_t cases = 0;
    std::uint64_t failures = 0;
    std::string first_failure; // empty when the cell is clean
};

struct SuiteResult {
    std::string suite;
    std::uint64_t seed = 0;
    std::vector<CellResult> cells;

    std::uint64_t total_cases() const;
    std::uint64_t total_failures() const;
    bool ok() const { return total_failures() == 0; }
    // cell and message of the first recorded failure, empty when clean
    std::string first_failure() const;
};

std::vector<std::string> check_suite_names();

/*
 * Seeded property suite. cases = 0 runs each suite's default volume;
 * otherwise cases is the per-cell case count for the randomized suites
 * (deterministic suites ignore it). Unknown names throw invalid_argument.
 */
SuiteResult run_check_suite(const std::string& name, std::uint64_t seed,
                            std::uint64_t cases = 0);

// Trial-division irreducibility test. Independent of the production
// factorization path; intended as an oracle for small degrees.
bool brute_irreducible(const FqPoly& g);

} // namespace picdisc
