#include "sl2ext/grothendieck.hpp"

#include <mutex>
#include <shared_mutex>
#include <unordered_map>

namespace sl2ext::grothendieck {

FactorList good_filtration_factors(Weight a, Weight b)
{
    if (checked_add(b, 1) < a)
        throw std::invalid_argument("Delta(a) (x) Nabla(b) has no good filtration for b < a - 1");
    FactorList out;
    const Weight top = checked_add(a, b);
    for (Weight k = 0; k <= a; ++k) {
        const Weight w = top - 2 * k;
        // b - a = -1 contributes the zero module at the bottom
        if (2 * k > top)
            break;
        out.emplace_back(w, 1);
    }
    return out;
}

struct CharacterTables::Memo {
    std::shared_mutex mutex;
    std::unordered_map<Weight, Weight> simple_dim;
    std::unordered_map<Weight, DecompRow> weyl_rows;
    std::unordered_map<Weight, DecompRow> simple_rows;

    template <class Map, class F>
    auto lookup(Map& map, Weight key, F&& compute) -> typename Map::mapped_type
    {
        {
            std::shared_lock lock(mutex);
            auto it = map.find(key);
            if (it != map.end())
                return it->second;
        }
        auto value = compute();
        std::unique_lock lock(mutex);
        return map.try_emplace(key, std::move(value)).first->second;
    }
};

CharacterTables::CharacterTables(WeightContext ctx) : ctx_(ctx), memo_(std::make_unique<Memo>())
{
    ctx_.require_modular();
}

CharacterTables::~CharacterTables() = default;
CharacterTables::CharacterTables(CharacterTables&&) noexcept = default;
CharacterTables& CharacterTables::operator=(CharacterTables&&) noexcept = default;

Weight CharacterTables::simple_dimension(Weight lambda) const
{
    return memo_->lookup(memo_->simple_dim, lambda, [&] {
        Weight dim = 1;
        for (Weight rest = lambda; rest != 0; rest /= ctx_.p())
            dim = checked_mul(dim, rest % ctx_.p() + 1);
        return dim;
    });
}

DecompRow CharacterTables::weyl_in_simples(Weight lambda) const
{
    return memo_->lookup(memo_->weyl_rows, lambda, [&] {
        DecompRow row{lambda, {}};
        const auto d = decompose(lambda, ctx_);
        if (d.a == 0) {
            row.entries[lambda] = 1;
            return row;
        }
        auto twist_into = [&](Weight inner, unsigned r) {
            for (const auto& [mu, c] : weyl_in_simples(inner).entries)
                row.entries[compose(mu, r, ctx_)] += c;
        };
        twist_into(d.a, d.i);
        if (!is_steinberg_residue(d.i, ctx_))
            twist_into(d.a - 1, bar(d.i, ctx_));
        return row;
    });
}

DecompRow CharacterTables::simple_in_weyls(Weight lambda) const
{
    return memo_->lookup(memo_->simple_rows, lambda, [&] {
        DecompRow row{lambda, {}};
        row.entries[lambda] = 1;
        for (const auto& [mu, c] : weyl_in_simples(lambda).entries) {
            if (mu == lambda)
                continue;
            for (const auto& [nu, e] : simple_in_weyls(mu).entries)
                row.entries[nu] -= c * e;
        }
        std::erase_if(row.entries, [](const auto& kv) { return kv.second == 0; });
        return row;
    });
}

FactorList CharacterTables::tilting_weyl_multiplicities(Weight lambda) const
{
    std::map<Weight, std::uint64_t, std::greater<>> acc;
    const auto d = decompose(lambda, ctx_);
    if (d.a == 0) {
        acc[lambda] = 1;
    } else if (is_steinberg_residue(d.i, ctx_)) {
        for (const auto& [c, m] : tilting_weyl_multiplicities(d.a))
            acc[compose(c, d.i, ctx_)] += m;
    } else {
        // Delta(c)^[1] (x) T(p+i) has Delta-sections Delta(p(c+1)+i), Delta(pc+ibar)
        const unsigned ib = bar(d.i, ctx_);
        for (const auto& [c, m] : tilting_weyl_multiplicities(d.a - 1)) {
            acc[compose(c + 1, d.i, ctx_)] += m;
            acc[compose(c, ib, ctx_)] += m;
        }
    }
    return FactorList(acc.begin(), acc.end());
}

Weight CharacterTables::tilting_dimension(Weight lambda) const
{
    const auto d = decompose(lambda, ctx_);
    if (d.a == 0)
        return lambda + 1;
    if (is_steinberg_residue(d.i, ctx_))
        return checked_mul(ctx_.p(), tilting_dimension(d.a));
    return checked_mul(2 * Weight{ctx_.p()}, tilting_dimension(d.a - 1));
}

std::int64_t CharacterTables::euler_weyl_simple(Weight lambda, Weight mu) const
{
    return simple_in_weyls(mu).at(lambda);
}

}  // namespace sl2ext::grothendieck
