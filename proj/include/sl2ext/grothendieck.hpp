#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <utility>
#include <vector>

#include "sl2ext/weights.hpp"

namespace sl2ext::grothendieck {

/// (weight, multiplicity) pairs, weights strictly decreasing.
using FactorList = std::vector<std::pair<Weight, std::uint64_t>>;

/// A row of a (signed) multiplicity table; entries never hold zeros.
struct DecompRow {
    Weight lambda = 0;
    std::map<Weight, std::int64_t> entries;

    std::int64_t at(Weight mu) const
    {
        auto it = entries.find(mu);
        return it == entries.end() ? 0 : it->second;
    }
};

/// Nabla-sections of Delta(a) (x) Nabla(b), top first.  Requires b >= a - 1.
FactorList good_filtration_factors(Weight a, Weight b);

/// Character-level tables for one characteristic.  Simple characters come
/// from the Steinberg tensor product theorem, L(pc+j) = L(c)^[1] (x) L(j),
/// which is taken as an external input here.  Memo tables are guarded, so one
/// instance can be shared between threads.
class CharacterTables {
public:
    explicit CharacterTables(WeightContext ctx);
    ~CharacterTables();
    CharacterTables(CharacterTables&&) noexcept;
    CharacterTables& operator=(CharacterTables&&) noexcept;

    const WeightContext& context() const { return ctx_; }

    Weight simple_dimension(Weight lambda) const;

    /// [Delta(lambda)] = sum [L(mu)], built from the G1 socle series
    /// [Delta(pa+i)] = [Delta(a)^[1] (x) L(i)] + [Delta(a-1)^[1] (x) L(ibar)].
    DecompRow weyl_in_simples(Weight lambda) const;

    /// [L(lambda)] = sum c_mu [Delta(mu)], by unitriangular inversion.
    DecompRow simple_in_weyls(Weight lambda) const;

    /// Delta-filtration multiplicities of T(lambda), highest weight first.
    FactorList tilting_weyl_multiplicities(Weight lambda) const;

    /// dim T(lambda) from the recursive character, independent of the
    /// multiplicity list: dim T(pa+i) = 2p dim T(a-1), dim T(pa+p-1) = p dim T(a).
    Weight tilting_dimension(Weight lambda) const;

    std::int64_t euler_weyl_simple(Weight lambda, Weight mu) const;

private:
    struct Memo;
    WeightContext ctx_;
    std::unique_ptr<Memo> memo_;
};

inline std::int64_t euler_weyl_weyl(Weight lambda, Weight mu) { return lambda == mu ? 1 : 0; }

}  // namespace sl2ext::grothendieck
