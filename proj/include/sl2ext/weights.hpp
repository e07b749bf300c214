#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace sl2ext {

/// Dominant weights of SL2 are naturals.  All arithmetic on them goes through
/// the checked helpers below, which throw instead of wrapping.
using Weight = std::uint64_t;

class WeightOverflow : public std::overflow_error {
public:
    using std::overflow_error::overflow_error;
};

Weight checked_add(Weight x, Weight y);
Weight checked_mul(Weight x, Weight y);

bool is_prime(std::uint64_t n);

/// The characteristic (or quantum order) all block arithmetic is done in.
///
/// `characteristic(p)` requires a prime.  `quantum(l)` accepts any order
/// l >= 2 and is only used for the quantum tower, where l plays the role of p.
/// `semisimple()` is the p = 0 sentinel; it has no block structure and every
/// SL2 block operation rejects it.
class WeightContext {
public:
    static WeightContext characteristic(unsigned p);
    static WeightContext quantum(unsigned l);
    static WeightContext semisimple();

    unsigned p() const { return p_; }
    bool is_semisimple() const { return p_ == 0; }
    bool is_quantum() const { return quantum_; }

    /// Throws std::domain_error for the p = 0 sentinel.
    void require_modular() const;

    friend bool operator==(const WeightContext&, const WeightContext&) = default;

private:
    WeightContext(unsigned p, bool quantum) : p_(p), quantum_(quantum) {}
    unsigned p_;
    bool quantum_;
};

/// lambda = p * a + i with 0 <= i <= p - 1.
struct PDecomp {
    Weight lambda;
    Weight a;
    unsigned i;

    friend bool operator==(const PDecomp&, const PDecomp&) = default;
};

struct BarredResidue {
    unsigned i;
    unsigned bar;
};

PDecomp decompose(Weight lambda, const WeightContext& ctx);

/// p - 2 - i.  The Steinberg residue p - 1 has no bar.
unsigned bar(unsigned i, const WeightContext& ctx);
BarredResidue barred(unsigned i, const WeightContext& ctx);

bool is_steinberg_residue(unsigned i, const WeightContext& ctx);
bool is_steinberg_weight(Weight lambda, const WeightContext& ctx);
bool is_restricted(Weight lambda, const WeightContext& ctx);

/// Same-block test for SL2.  Regular weights pa+i, pb+j are linked iff
/// (a - b even and i = j) or (a - b odd and j = p - 2 - i); Steinberg weights
/// pa+p-1, pb+p-1 are linked iff a and b are; mixed pairs never are.
bool linked(Weight lambda, Weight mu, const WeightContext& ctx);

inline Weight weyl_dimension(Weight lambda) { return checked_add(lambda, 1); }

/// p * a + i with overflow checking.
Weight compose(Weight a, unsigned i, const WeightContext& ctx);

}  // namespace sl2ext
