// Acceptance suite: one line per criterion, exit code 0 only if every
// criterion holds. Runs the library at the documented desk-scale
// parameters; everything is exact arithmetic, no tolerances anywhere.

#include "ordlab/checks.hpp"

#include <cstdio>
#include <string>
#include <vector>

using namespace ordlab;

namespace {

int failures = 0;

void report(int criterion, const std::string& title, const std::vector<CheckResult>& parts) {
    bool pass = true;
    std::string detail;
    for (const auto& p : parts) {
        pass = pass && p.pass;
        if (!p.pass) {
            if (!detail.empty()) detail += "; ";
            detail += p.name + ": " + p.detail;
        }
    }
    if (pass) {
        std::printf("[PASS] criterion %d: %s\n", criterion, title.c_str());
    } else {
        std::printf("[FAIL] criterion %d: %s - %s\n", criterion, title.c_str(), detail.c_str());
        ++failures;
    }
    std::fflush(stdout);
}

} // namespace

int main() {
    const std::vector<int> ns = {2, 3, 10};

    {
        std::vector<CheckResult> parts;
        for (int n : ns) parts.push_back(check_cone_axioms(n, 5));
        report(1, "cone axioms on ball(5), n in {2,3,10}, all ten types", parts);
    }
    {
        std::vector<CheckResult> parts;
        for (int n : ns) parts.push_back(check_distinctness(n, 8));
        report(2, "pairwise distinctness of the sampled cones within ball(8)", parts);
    }
    {
        std::vector<CheckResult> parts;
        for (int n : ns) parts.push_back(check_conjugation_transport(n, 4, 6));
        report(3, "conjugation transport on ball(4)^2; bi-orderings fixed on ball(6)", parts);
    }
    {
        std::vector<CheckResult> parts;
        for (int n : {2, 10}) parts.push_back(check_stabilizer_lemma(n, 6));
        report(4, "stabilizer generators fix their points; ball(6) fixers are powers", parts);
    }
    {
        std::vector<CheckResult> parts;
        for (int n : ns) parts.push_back(check_reduction(n, 200, 20240601));
        report(5, "digit reduction roundtrip and decider agreement, 200 seeded pairs", parts);
    }
    {
        std::vector<CheckResult> parts;
        for (int n : ns) parts.push_back(check_realization(n, 64));
        report(6, "realization stage 64: order embedding, free orbit, cone recovery", parts);
    }
    {
        std::vector<CheckResult> parts;
        parts.push_back(check_identification(2, 8, 4));
        report(7, "identification: P+@sqrt2 bracketed within 2^-4, Q++@1/3 pinned", parts);
    }
    {
        std::vector<CheckResult> parts;
        for (int n : ns) parts.push_back(check_digit_coherence(n, 64));
        report(8, "digit/real coherence to 64 digits; periods divide the order bound", parts);
    }

    if (failures > 0) {
        std::printf("%d criterion(s) failed\n", failures);
        return 1;
    }
    std::printf("all criteria passed\n");
    return 0;
}
