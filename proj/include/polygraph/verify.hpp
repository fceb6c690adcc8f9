#ifndef POLYGRAPH_VERIFY_HPP
#define POLYGRAPH_VERIFY_HPP

#include <string>
#include <string_view>
#include <vector>

#include "polygraph/census.hpp"
#include "polygraph/lemmas.hpp"

namespace polygraph {

// Parameter grid shared by all suites; each suite reads the fields it needs.
struct SuiteGrid {
    std::vector<u64> degrees{2};
    std::vector<u64> primes{5, 7, 13};
    u64 max_k = 4;       // congruence: k range
    u64 max_h = 4;       // congruence: h range
    u64 max_iterate = 6; // gcd: k, m range
    u64 max_index = 5;   // notsquare: subset universe {1..M}
    u64 max_j = 3;       // notethpower: twist levels 2..J
    u64 samples = 50;    // notethpower: random collections
    u64 seed = 1;
    u64 eta_depth = 3;   // bounds-sandwich: eta vector length
};

struct VerificationReport {
    std::string suite;
    std::string grid;  // rendered parameters
    u64 checks = 0;
    u64 skipped_points = 0;  // grid points whose preconditions do not apply
    std::vector<std::string> failures;  // minimal reproducers
    double wall_seconds = 0;

    bool pass() const { return failures.empty(); }
    // timing is left out by default so equal runs serialize byte-identically
    std::string to_json(bool with_timing = false) const;
};

// name: congruence | gcd | notsquare | notethpower | bounds-sandwich
VerificationReport run_suite(std::string_view name, const SuiteGrid& grid);

}  // namespace polygraph

#endif
