#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sl2ext/ext_engine.hpp"

namespace sl2ext::verify {

struct Outcome {
    Outcome() = default;
    explicit Outcome(std::string n) : name(std::move(n)) {}

    std::string name;
    std::uint64_t checks = 0;
    std::uint64_t failures = 0;
    std::string first_failure;
    std::vector<std::string> notes;

    bool passed() const { return failures == 0 && checks > 0; }
    void check(bool ok, const std::string& what);
    /// "PASS name (n checks)" or "FAIL name (k/n failed): first failure".
    std::string summary() const;
};

/// Collects cutoff violations across suites.
struct CutoffTally {
    std::uint64_t vectors = 0;
    std::uint64_t violations = 0;
    std::string first;

    void observe(const ExtVector& v, const std::string& label);
    Outcome outcome() const;
};

Outcome euler_weyl(const std::vector<unsigned>& primes, Weight max_weight, CutoffTally* tally = nullptr);
Outcome euler_simple(const std::vector<unsigned>& primes, Weight max_weight, CutoffTally* tally = nullptr);
/// Linked lambda = pb+j <= mu = pa+i, residues below p-1, a <= a_max.
Outcome top_degree(const std::vector<unsigned>& primes, Weight a_max, CutoffTally* tally = nullptr);
Outcome route_consistency(const std::vector<unsigned>& primes, Weight a_max);
Outcome duality(const std::vector<unsigned>& primes, Weight max_weight, CutoffTally* tally = nullptr);
Outcome restricted_simples(const std::vector<unsigned>& primes);
Outcome g1_layer(const std::vector<unsigned>& primes, Weight ab_max, Weight resolution_a_max, unsigned m_max);

/// Seeded all-d0-zero and all-d0-injective trials, grids up to 6 x 6.
Outcome collapse(std::uint64_t trials, std::uint64_t seed);
/// The witness as expected-negative control.
Outcome witness_control();
Outcome dual_route(std::uint64_t trials, std::uint64_t seed, int r_max);

Outcome quantum_layer(const std::vector<unsigned>& orders, std::int64_t max_entry);
Outcome determinism_and_cache(unsigned p, Weight max_weight);

struct SuiteOptions {
    std::optional<unsigned> p;
    std::optional<Weight> max_weight;
    std::uint64_t trials = 1000;
    std::uint64_t seed = 7;
};

/// suite is one of euler, duality, collapse, resolution, all.
std::vector<Outcome> run_suite(const std::string& suite, const SuiteOptions& options);

}  // namespace sl2ext::verify
