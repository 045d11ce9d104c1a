#include "degcone/verify.hpp"

#include <chrono>
#include <cstdio>

int main() {
    degcone::verify::Suite suite;
    bool all_pass = true;
    for (int id = 1; id <= 12; ++id) {
        auto t0 = std::chrono::steady_clock::now();
        auto c = suite.criterion(id);
        auto secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        all_pass = all_pass && c.pass;
        std::printf("criterion %2d: %s - %s (%.1fs)\n", c.id, c.pass ? "PASS" : "FAIL",
                    c.title.c_str(), secs);
        for (auto& chk : c.checks)
            if (!chk.pass)
                std::printf("    failed: %s%s%s\n", chk.name.c_str(),
                            chk.detail.empty() ? "" : " — ", chk.detail.c_str());
        std::fflush(stdout);
    }
    std::printf("acceptance: %s\n", all_pass ? "PASS" : "FAIL");
    return all_pass ? 0 : 1;
}
