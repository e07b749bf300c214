#include "sl2ext/quantum.hpp"

#include <map>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>

namespace sl2ext::quantum {

std::string GL2Weight::to_string() const { return "(" + std::to_string(w1) + "," + std::to_string(w2) + ")"; }

GL2Weight GL2Weight::parse(const std::string& text)
{
    const auto comma = text.find(',');
    if (comma == std::string::npos)
        throw std::invalid_argument("GL2 weight must be written w1,w2: " + text);
    auto integer = [&](const std::string& s) -> std::int64_t {
        std::size_t used = 0;
        std::int64_t v = 0;
        try {
            v = std::stoll(s, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (s.empty() || used != s.size())
            throw std::invalid_argument("GL2 weight must be written w1,w2: " + text);
        return v;
    };
    GL2Weight w{integer(text.substr(0, comma)), integer(text.substr(comma + 1))};
    if (w.w1 < w.w2)
        throw std::invalid_argument("GL2 weight " + w.to_string() + " is not dominant");
    return w;
}

struct QuantumEngine::Memo {
    std::shared_mutex mutex;
    std::map<std::pair<Weight, Weight>, std::vector<std::uint64_t>> weyl_weyl;
};

namespace {

using Dims = std::vector<std::uint64_t>;
using F = FormalModule;

void add_shifted(Dims& acc, const Dims& v, std::size_t shift)
{
    for (std::size_t q = 0; q < v.size(); ++q) {
        if (v[q] == 0)
            continue;
        if (acc.size() <= q + shift)
            acc.resize(q + shift + 1, 0);
        acc[q + shift] = checked_add(acc[q + shift], v[q]);
    }
}

ExtVector vec(Dims d)
{
    while (!d.empty() && d.back() == 0)
        d.pop_back();
    return ExtVector{std::move(d), 0};
}

std::unique_ptr<ExtOracle> make_classical(unsigned p)
{
    if (p == 0)
        return std::make_unique<SemisimpleOracle>();
    return std::make_unique<ExtEngine>(WeightContext::characteristic(p));
}

}  // namespace

QuantumEngine::QuantumEngine(QuantumContext qctx)
    : qctx_(qctx),
      lctx_(WeightContext::quantum(qctx.l)),
      classical_(make_classical(qctx.p)),
      tower_(std::make_unique<ExtEngine>(lctx_, EngineOptions{}, classical_.get())),
      memo_(std::make_unique<Memo>())
{
}

QuantumEngine::~QuantumEngine() = default;

const ExtOracle& QuantumEngine::classical() const { return *classical_; }
const ExtEngine& QuantumEngine::tower() const { return *tower_; }

ExtVector QuantumEngine::classical_gl2_ext(const GL2Weight& lhs, const GL2Weight& rhs) const
{
    if (lhs.w1 < lhs.w2 || rhs.w1 < rhs.w2)
        throw std::invalid_argument("GL2 weights must be dominant");
    if (lhs.degree() != rhs.degree())
        return {};
    return classical_->ext(F::weyl(lhs.sl2()), F::weyl(rhs.sl2()));
}

ExtVector QuantumEngine::qext_weyl_weyl(const GL2Weight& lhs, const GL2Weight& rhs) const
{
    if (lhs.w1 < lhs.w2 || rhs.w1 < rhs.w2)
        throw std::invalid_argument("GL2 weights must be dominant");
    ExtVector v = lhs.degree() == rhs.degree() ? weyl_weyl(lhs.sl2(), rhs.sl2()) : ExtVector{};
    v.cutoff = checked_add(tower_->vanishing_bound(F::weyl(lhs.sl2()), F::weyl(rhs.sl2())), 1);
    return v;
}

// Source Delta(lb+j+d, d), target Delta(la+i, 0) after the determinant twist.
ExtVector QuantumEngine::weyl_weyl(Weight lambda, Weight mu) const
{
    if (lambda == mu)
        return ExtVector{{1}, 0};
    if (lambda > mu)
        return {};
    {
        std::shared_lock lock(memo_->mutex);
        auto it = memo_->weyl_weyl.find({lambda, mu});
        if (it != memo_->weyl_weyl.end())
            return ExtVector{it->second, 0};
    }

    const auto x = decompose(lambda, lctx_);
    const auto y = decompose(mu, lctx_);
    const bool xs = is_steinberg_residue(x.i, lctx_);
    const bool ys = is_steinberg_residue(y.i, lctx_);
    Dims dims;
    if (xs || ys) {
        if (xs && ys)
            dims = classical_->ext(F::weyl(x.a), F::weyl(y.a)).dims;
    } else {
        const Weight a = y.a;
        const Weight b = x.a;
        const bool even = (a - b) % 2 == 0;
        if (even && x.i == y.i) {
            // translate to b = 0; Hom vanishes as a > b, then shift to Delta(l(a-b)-1, i+1)
            add_shifted(dims, weyl_weyl(y.i, compose(a - b - 1, bar(y.i, lctx_), lctx_)).dims, 1);
        } else if (!even && x.i == bar(y.i, lctx_)) {
            const Weight f = (a - b - 1) / 2;
            add_shifted(dims, weyl_weyl(lambda, compose(a - 1, x.i, lctx_)).dims, 1);
            const GL2Weight lhs{static_cast<std::int64_t>(b + f), static_cast<std::int64_t>(f)};
            const GL2Weight rhs{static_cast<std::int64_t>(a - 1), 0};
            add_shifted(dims, classical_gl2_ext(lhs, rhs).dims, 0);
        }
    }
    ExtVector v = vec(std::move(dims));
    std::unique_lock lock(memo_->mutex);
    memo_->weyl_weyl.try_emplace({lambda, mu}, v.dims);
    return v;
}

ExtVector QuantumEngine::qext_twist_vs_weyl(const FormalModule& n, unsigned r, Weight mu) const
{
    if (n.kind() == FormalModule::Kind::Induced || n.kind() == FormalModule::Kind::TwistProd)
        throw UnsupportedFamily("twisted source " + n.to_string() + " is outside the supported shapes");
    if (r >= qctx_.l)
        throw std::invalid_argument("twist residue must be below l");
    const auto y = decompose(mu, lctx_);
    const bool rs = is_steinberg_residue(r, lctx_);
    const bool ys = is_steinberg_residue(y.i, lctx_);
    if (rs || ys)
        return rs && ys ? vec(classical_->ext(n, F::weyl(y.a)).dims) : ExtVector{};
    const bool same = r == y.i;
    const bool barred = r == bar(y.i, lctx_);
    if (!same && !barred)
        return {};
    // self-barred residue (always for l = 2): merged statement
    const bool merged = same && barred;

    Dims dims;
    const Weight a = y.a;
    if (a == 0) {
        for (Weight k = 0; k <= n.weight(); ++k) {
            const bool odd = k % 2 == 1;
            if (merged || (same && !odd) || (barred && odd))
                add_shifted(dims, classical_->ext(n, F::induced(k)).dims, k);
        }
        return vec(std::move(dims));
    }
    if (same && !merged) {
        add_shifted(dims, qext_twist_vs_weyl(n, r, compose(a - 1, bar(y.i, lctx_), lctx_)).dims, 1);
    } else {
        add_shifted(dims, qext_twist_vs_weyl(n, r, compose(a - 1, r, lctx_)).dims, 1);
        add_shifted(dims, classical_->ext(n, F::weyl(a - 1)).dims, 0);
    }
    return vec(std::move(dims));
}

ExtVector QuantumEngine::qext_weyl_vs_twist(Weight lambda, const FormalModule& m, unsigned r) const
{
    if (m.kind() == FormalModule::Kind::TwistProd)
        throw UnsupportedFamily("twisted target " + m.to_string() + " is outside the supported shapes");
    if (r >= qctx_.l)
        throw std::invalid_argument("twist residue must be below l");
    const auto x = decompose(lambda, lctx_);
    const bool rs = is_steinberg_residue(r, lctx_);
    const bool xs = is_steinberg_residue(x.i, lctx_);
    if (rs || xs)
        return rs && xs ? vec(classical_->ext(F::weyl(x.a), m).dims) : ExtVector{};
    if (lambda > compose(m.weight(), r, lctx_))
        return {};
    const bool same = r == x.i;
    const bool barred = r == bar(x.i, lctx_);
    if (!same && !barred)
        return {};

    Dims dims;
    add_shifted(dims, qext_weyl_vs_twist(compose(x.a + 1, bar(x.i, lctx_), lctx_), m, r).dims, 1);
    if (same)
        add_shifted(dims, classical_->ext(F::weyl(x.a), m).dims, 0);
    return vec(std::move(dims));
}

}  // namespace sl2ext::quantum
