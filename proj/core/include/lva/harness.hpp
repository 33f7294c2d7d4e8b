#ifndef LVA_HARNESS_HPP
#define LVA_HARNESS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "lva/fock.hpp"
#include "lva/lattice.hpp"

namespace lva {

/// Seeded campaign configuration. A fixed config yields a byte-identical
/// report.
struct SuiteConfig {
    std::vector<std::vector<std::vector<Integer>>> grams;  // lattices to exercise
    int max_degree = 4;
    int max_r = 3;
    int mode_lo = -4;
    int mode_hi = 4;
    bool include_cosets = true;  // repeat the divided-power/Garland suites on V_{L+gamma}
    std::uint64_t seed = 7;
    int case_count = 10;         // per divided-power campaign
    std::vector<int> primes = {2, 3, 5};

    static SuiteConfig preset_default(std::uint64_t seed);
};

struct SuiteSummary {
    std::string suite;
    int passed = 0;
    int failed = 0;
};

struct Report {
    bool all_passed = false;
    std::vector<SuiteSummary> summaries;
    std::string json_text;  // canonical report document
};

/// Integer combination of at most 5 h-basis keys of degree <= max_degree in
/// the coset; always integral. Deterministic in the seed.
FockElement random_element(const LatticePtr& lattice, const LatticeVector& coset,
                           int max_degree, std::uint64_t seed);

/// Runs every theorem suite and assembles the machine-readable report.
Report run_suite(const SuiteConfig& config);

} // namespace lva

#endif
