// Acceptance suite: one line per criterion, exit 0 only if all pass.
// Every identity is exact integer equality; no tolerances anywhere.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "lnflag/lnflag.hpp"

using namespace lnflag;

namespace {

struct Criterion {
    std::string label;
    std::function<VerifyReport()> run;
};

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

int main() {
    std::vector<Criterion> criteria = {
        {"1  hopf axiom suite, grading <= 16", [] { return verify_hopf_axioms(16); }},
        {"2  reversion/antipode consistency, degree <= 10", [] { return verify_series(10); }},
        {"3  lambda matrix involution/triangularity/goldens, grading <= 12",
         [] { return verify_lambda(12); }},
        {"4  three-path action agreement, n <= 5", [] { return verify_three_path(5); }},
        {"5  coproduct/antipode realization, Q in [5] (antipode [6])",
         [] { return verify_realization(5, 6); }},
        {"6  twisted single-interval classes + right-action vanishing, n <= 8",
         [] { return verify_twisted_classes(8); }},
        {"7  closed-form left action on eps(m), Q in [6], m <= 6",
         [] { return verify_left_closed_form(6, 6); }},
        {"8  kronecker duality Q,R in [5]; pushforward of 1 over B_n, n <= 8",
         [] { return verify_duality(5, 8); }},
        {"9  projective projection coefficient lists agree, n <= 8",
         [] { return verify_projection(8); }},
        {"10 rewrite confluence (1000 randomized) + 2^n basis, n <= 10",
         [] { return verify_ring(1000, 5, 10); }},
        {"11 pinned regression goldens across all modules", [] { return verify_goldens(); }},
    };

    int failed = 0;
    for (const Criterion& c : criteria) {
        auto start = std::chrono::steady_clock::now();
        VerifyReport rep = c.run();
        double elapsed = seconds_since(start);
        bool ok = rep.all_passed();
        if (!ok)
            ++failed;
        std::printf("[%s] criterion %s: %d checks, %d failures (%.2fs)\n",
                    ok ? "PASS" : "FAIL", c.label.c_str(), rep.checked(), rep.failures(),
                    elapsed);
        if (!ok) {
            int shown = 0;
            for (const VerifyRecord& r : rep.records) {
                if (r.pass)
                    continue;
                std::printf("       %s @ %s : %s\n", r.operation.c_str(), r.input.c_str(),
                            r.detail.c_str());
                if (++shown == 10) {
                    std::printf("       ... further failures suppressed\n");
                    break;
                }
            }
        }
        std::fflush(stdout);
    }

    if (failed == 0)
        std::printf("all %zu criteria passed\n", criteria.size());
    else
        std::printf("%d of %zu criteria FAILED\n", failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
