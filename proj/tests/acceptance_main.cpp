// Acceptance suite: runs every criterion at full sweep size and prints one
// pass/fail line per criterion. Exits nonzero if any criterion fails.

#include <cstdio>
#include <string>

#include "appell/selftest.hpp"

int main() {
    const auto results = appell::selftest::run_all({});
    bool all_pass = true;
    long long total_ms = 0;
    for (const auto& r : results) {
        const long long ms = r.micros / 1000;
        total_ms += ms;
        all_pass = all_pass && r.pass;
        std::printf("%s  criterion %2d  %-52s  %5lld ms (budget %lld ms)%s%s\n",
                    r.pass ? "PASS" : "FAIL", r.id, r.name.c_str(), ms,
                    static_cast<long long>(r.budget_ms),
                    r.detail.empty() ? "" : "  -- ", r.detail.c_str());
        if (ms > r.budget_ms)
            std::printf("      note: criterion %d exceeded its runtime budget\n", r.id);
    }
    std::printf("%s: %zu criteria, %lld ms total (budget 60000 ms)\n",
                all_pass ? "ACCEPTANCE PASS" : "ACCEPTANCE FAIL", results.size(), total_ms);
    return all_pass ? 0 : 1;
}
