#include "sl2ext/weights.hpp"

#include <limits>

namespace sl2ext {

Weight checked_add(Weight x, Weight y)
{
    if (x > std::numeric_limits<Weight>::max() - y)
        throw WeightOverflow("weight addition overflows");
    return x + y;
}

Weight checked_mul(Weight x, Weight y)
{
    if (x != 0 && y > std::numeric_limits<Weight>::max() / x)
        throw WeightOverflow("weight multiplication overflows");
    return x * y;
}

bool is_prime(std::uint64_t n)
{
    if (n < 2)
        return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

WeightContext WeightContext::characteristic(unsigned p)
{
    if (!is_prime(p))
        throw std::invalid_argument("characteristic must be prime, got " + std::to_string(p));
    return WeightContext(p, false);
}

WeightContext WeightContext::quantum(unsigned l)
{
    if (l < 2)
        throw std::invalid_argument("quantum order must be >= 2, got " + std::to_string(l));
    return WeightContext(l, true);
}

WeightContext WeightContext::semisimple() { return WeightContext(0, false); }

void WeightContext::require_modular() const
{
    if (p_ == 0)
        throw std::domain_error("block arithmetic is undefined in characteristic 0");
}

PDecomp decompose(Weight lambda, const WeightContext& ctx)
{
    ctx.require_modular();
    return PDecomp{lambda, lambda / ctx.p(), static_cast<unsigned>(lambda % ctx.p())};
}

Weight compose(Weight a, unsigned i, const WeightContext& ctx)
{
    ctx.require_modular();
    return checked_add(checked_mul(a, ctx.p()), i);
}

unsigned bar(unsigned i, const WeightContext& ctx)
{
    ctx.require_modular();
    if (i + 2 > ctx.p())
        throw std::invalid_argument("residue " + std::to_string(i) + " has no bar (Steinberg or out of range)");
    return ctx.p() - 2 - i;
}

BarredResidue barred(unsigned i, const WeightContext& ctx) { return {i, bar(i, ctx)}; }

bool is_steinberg_residue(unsigned i, const WeightContext& ctx)
{
    ctx.require_modular();
    return i == ctx.p() - 1;
}

bool is_steinberg_weight(Weight lambda, const WeightContext& ctx)
{
    return is_steinberg_residue(decompose(lambda, ctx).i, ctx);
}

bool is_restricted(Weight lambda, const WeightContext& ctx)
{
    ctx.require_modular();
    return lambda < ctx.p();
}

bool linked(Weight lambda, Weight mu, const WeightContext& ctx)
{
    ctx.require_modular();
    for (;;) {
        const auto x = decompose(lambda, ctx);
        const auto y = decompose(mu, ctx);
        const bool xs = is_steinberg_residue(x.i, ctx);
        const bool ys = is_steinberg_residue(y.i, ctx);
        if (xs != ys)
            return false;
        if (!xs) {
            const bool even = (x.a % 2) == (y.a % 2);
            return even ? x.i == y.i : y.i == bar(x.i, ctx);
        }
        lambda = x.a;
        mu = y.a;
    }
}

}  // namespace sl2ext
