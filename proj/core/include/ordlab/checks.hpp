#pragma once

#include "ordlab/cones.hpp"
#include "ordlab/equivalence.hpp"
#include "ordlab/realization.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace ordlab {

struct CheckResult {
    std::string name;
    bool pass = true;
    std::string detail;
};

/// The descriptor sample used by the batch checks: the four bi-orderings,
/// P+/P- at sqrt(2) and sqrt(3), and the four Q tags at 0, 1/3 and 5/6.
std::vector<ConeDescriptor> sampled_cones(int n);

/// One descriptor per type: bi-orderings, P+/P- at sqrt(2), Q tags at 1/3.
std::vector<ConeDescriptor> representative_cones(int n);

CheckResult check_cone_axioms(int n, int L);
CheckResult check_distinctness(int n, int L);
CheckResult check_conjugation_transport(int n, int pair_radius, int fixed_radius);
CheckResult check_stabilizer_lemma(int n, int radius);
CheckResult check_reduction(int n, int count, std::uint64_t seed);
CheckResult check_realization(int n, std::size_t stage);
CheckResult check_identification(int n, int radius, int precision);
CheckResult check_digit_coherence(int n, int max_digits);

struct CheckConfig {
    int n = 2;
    int radius = 5;
    std::size_t stage = 64;
    int samples = 200;
    std::uint64_t seed = 0;
};

std::vector<CheckResult> run_all_checks(const CheckConfig& cfg);

} // namespace ordlab
