// Acceptance run: one line per criterion, exact integer checks only.
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "sl2ext/verify.hpp"

using namespace sl2ext;
using verify::Outcome;

namespace {

struct Criterion {
    int number;
    const char* title;
    std::function<std::vector<Outcome>()> run;
};

Outcome merge(const std::string& name, const std::vector<Outcome>& parts)
{
    Outcome all(name);
    for (const auto& p : parts) {
        all.checks += p.checks;
        all.failures += p.failures;
        if (all.first_failure.empty() && !p.first_failure.empty())
            all.first_failure = p.name + ": " + p.first_failure;
    }
    return all;
}

}  // namespace

int main()
{
    constexpr std::uint64_t seed = 7;
    verify::CutoffTally tally;

    const std::vector<Criterion> criteria{
        {1, "Euler characteristic of Weyl pairs", [&] { return std::vector{verify::euler_weyl({2, 3, 5, 7}, 200, &tally)}; }},
        {2, "Euler characteristic against simples", [&] { return std::vector{verify::euler_simple({2, 3, 5}, 150, &tally)}; }},
        {3, "top-degree law", [&] { return std::vector{verify::top_degree({2, 3, 5}, 40, &tally)}; }},
        {4, "closed form vs degree-shift recursion", [] { return std::vector{verify::route_consistency({2, 3, 5}, 40)}; }},
        {5, "vanishing cutoffs", [&] { return std::vector{tally.outcome()}; }},
        {6, "restricted simples and twisted closed form", [] { return std::vector{verify::restricted_simples({3, 5, 7})}; }},
        {7, "G1 layer", [] { return std::vector{verify::g1_layer({2, 3, 5, 7}, 30, 20, 40)}; }},
        {8, "spectral collapse", [] { return std::vector{verify::collapse(1000, seed), verify::witness_control()}; }},
        {9, "filtration pages vs exact couples", [] { return std::vector{verify::dual_route(200, seed, 6)}; }},
        {10, "quantum layer", [] { return std::vector{verify::quantum_layer({2, 3, 5}, 60)}; }},
        {11, "determinism and cache", [] {
             std::vector<Outcome> parts;
             for (unsigned p : {2u, 3u, 5u, 7u})
                 parts.push_back(verify::determinism_and_cache(p, 40));
             return parts;
         }},
    };

    int failed = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        const Outcome o = merge(c.title, c.run());
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("[%s] %2d %-45s %10llu checks %7.2fs\n", o.passed() ? "PASS" : "FAIL", c.number, c.title,
                    static_cast<unsigned long long>(o.checks), secs);
        if (!o.passed()) {
            ++failed;
            std::printf("       first failure: %s\n", o.first_failure.empty() ? "no checks ran" : o.first_failure.c_str());
        }
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed ? 1 : 0;
}
