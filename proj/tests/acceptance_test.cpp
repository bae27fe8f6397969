// Acceptance suite: runs every verification criterion and prints one
// pass/fail line per criterion. Exit code 0 only when all pass.
#include <algorithm>
#include <cstdio>

#include "flagpoly/verify.hpp"

int main() {
    auto results = flagpoly::run_verification("all");
    bool all = true;
    for (auto& r : results) {
        std::printf("%s  [%2d] %s (%.2fs)%s%s\n", r.pass ? "PASS" : "FAIL", r.id, r.name.c_str(),
                    r.seconds, r.detail.empty() ? "" : " -- ", r.detail.c_str());
        all = all && r.pass;
    }
    std::printf("%s: %zu/%zu criteria passed\n", all ? "OK" : "FAILURE",
                static_cast<size_t>(std::count_if(results.begin(), results.end(),
                                                  [](auto& r) { return r.pass; })),
                results.size());
    return all ? 0 : 1;
}
