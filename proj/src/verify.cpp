#include "sl2ext/verify.hpp"

#include <sstream>
#include <stdexcept>

#include "sl2ext/cache.hpp"
#include "sl2ext/frobenius.hpp"
#include "sl2ext/quantum.hpp"
#include "sl2ext/specseq.hpp"

namespace sl2ext::verify {

using F = FormalModule;

void Outcome::check(bool ok, const std::string& what)
{
    ++checks;
    if (ok)
        return;
    if (failures++ == 0)
        first_failure = what;
}

std::string Outcome::summary() const
{
    std::ostringstream os;
    if (passed())
        os << "PASS " << name << " (" << checks << " checks)";
    else
        os << "FAIL " << name << " (" << failures << "/" << checks << " failed)"
           << (first_failure.empty() ? "" : ": " + first_failure);
    return os.str();
}

void CutoffTally::observe(const ExtVector& v, const std::string& label)
{
    ++vectors;
    if (v.dims.size() <= v.cutoff)
        return;
    if (violations++ == 0)
        first = label + " = " + v.to_string() + " beyond cutoff " + std::to_string(v.cutoff);
}

Outcome CutoffTally::outcome() const
{
    Outcome o;
    o.name = "vanishing-cutoffs";
    o.checks = vectors;
    o.failures = violations;
    o.first_failure = first;
    return o;
}

namespace {

std::string pair_label(const char* what, unsigned p, Weight x, Weight y)
{
    return std::string(what) + "(" + std::to_string(x) + "," + std::to_string(y) + ") p=" + std::to_string(p);
}

std::string dims_text(const std::vector<std::uint64_t>& d)
{
    std::string s = "[";
    for (std::size_t i = 0; i < d.size(); ++i)
        s += (i ? "," : "") + std::to_string(d[i]);
    return s + "]";
}

}  // namespace

Outcome euler_weyl(const std::vector<unsigned>& primes, Weight max_weight, CutoffTally* tally)
{
    Outcome o{"euler-weyl"};
    for (unsigned p : primes) {
        const ExtEngine engine(WeightContext::characteristic(p));
        for (Weight l = 0; l <= max_weight; ++l)
            for (Weight m = 0; m <= max_weight; ++m) {
                const auto v = engine.query(F::weyl(l), F::weyl(m));
                const auto label = pair_label("Ext(D,D)", p, l, m);
                if (tally)
                    tally->observe(v, label);
                o.check(v.euler() == grothendieck::euler_weyl_weyl(l, m), label + " euler " + std::to_string(v.euler()));
            }
    }
    return o;
}

Outcome euler_simple(const std::vector<unsigned>& primes, Weight max_weight, CutoffTally* tally)
{
    Outcome o{"euler-simple"};
    for (unsigned p : primes) {
        const ExtEngine engine(WeightContext::characteristic(p));
        for (Weight l = 0; l <= max_weight; ++l)
            for (Weight m = 0; m <= max_weight; ++m) {
                const auto v = engine.query(F::weyl(l), F::simple(m));
                const auto label = pair_label("Ext(D,L)", p, l, m);
                if (tally)
                    tally->observe(v, label);
                const auto want = engine.tables().euler_weyl_simple(l, m);
                o.check(v.euler() == want,
                        label + " euler " + std::to_string(v.euler()) + ", expected " + std::to_string(want));
            }
    }
    return o;
}

namespace {

/// Linked pairs (pb+j, pa+i) with b <= a <= a_max and residues <= p-2.
template <class Fn>
void for_linked_pairs(unsigned p, Weight a_max, Fn&& fn)
{
    const auto ctx = WeightContext::characteristic(p);
    for (Weight a = 0; a <= a_max; ++a)
        for (Weight b = 0; b <= a; ++b)
            for (unsigned i = 0; i + 2 <= p; ++i)
                for (unsigned j = 0; j + 2 <= p; ++j) {
                    const Weight lambda = compose(b, j, ctx);
                    const Weight mu = compose(a, i, ctx);
                    if (lambda <= mu && linked(lambda, mu, ctx))
                        fn(a, b, lambda, mu);
                }
}

}  // namespace

Outcome top_degree(const std::vector<unsigned>& primes, Weight a_max, CutoffTally* tally)
{
    Outcome o{"top-degree"};
    for (unsigned p : primes) {
        const ExtEngine engine(WeightContext::characteristic(p));
        for_linked_pairs(p, a_max, [&](Weight a, Weight b, Weight lambda, Weight mu) {
            const auto v = engine.query(F::weyl(lambda), F::weyl(mu));
            const auto label = pair_label("Ext(D,D)", p, lambda, mu);
            if (tally)
                tally->observe(v, label);
            const std::size_t top = a - b;
            o.check(v.at(top) == 1 && v.dims.size() == top + 1,
                    label + " = " + v.to_string() + ", expected top degree " + std::to_string(top));
        });
    }
    return o;
}

Outcome route_consistency(const std::vector<unsigned>& primes, Weight a_max)
{
    Outcome o{"route-consistency"};
    for (unsigned p : primes) {
        const ExtEngine engine(WeightContext::characteristic(p));
        for_linked_pairs(p, a_max, [&](Weight, Weight, Weight lambda, Weight mu) {
            const auto closed = engine.ext_weyl_weyl(lambda, mu);
            const auto shifted = engine.ext_weyl_weyl_shift(lambda, mu);
            o.check(closed.dims == shifted.dims, pair_label("Ext(D,D)", p, lambda, mu) + " closed " +
                                                     dims_text(closed.dims) + " vs recursion " +
                                                     dims_text(shifted.dims));
        });
    }
    return o;
}

Outcome duality(const std::vector<unsigned>& primes, Weight max_weight, CutoffTally* tally)
{
    Outcome o{"duality"};
    for (unsigned p : primes) {
        const ExtEngine engine(WeightContext::characteristic(p));
        for (Weight l = 0; l <= max_weight; ++l)
            for (Weight m = 0; m <= max_weight; ++m) {
                const auto ww = engine.query(F::weyl(l), F::weyl(m));
                const auto ii = engine.query(F::induced(m), F::induced(l));
                const auto ws = engine.query(F::weyl(l), F::simple(m));
                const auto si = engine.query(F::simple(m), F::induced(l));
                if (tally) {
                    tally->observe(ii, pair_label("Ext(N,N)", p, m, l));
                    tally->observe(si, pair_label("Ext(L,N)", p, m, l));
                }
                o.check(ww.dims == ii.dims, pair_label("Ext(D,D) vs Ext(N,N)", p, l, m));
                o.check(ws.dims == si.dims, pair_label("Ext(D,L) vs Ext(L,N)", p, l, m));
            }
    }
    return o;
}

Outcome restricted_simples(const std::vector<unsigned>& primes)
{
    Outcome o{"restricted-simples"};
    for (unsigned p : primes) {
        const auto ctx = WeightContext::characteristic(p);
        const ExtEngine engine(ctx);
        for (Weight i = 0; i + 2 <= p; ++i)
            for (Weight j = 0; j + 2 <= p; ++j) {
                const auto v = engine.query(F::simple(i), F::simple(j));
                const std::vector<std::uint64_t> want = i == j ? std::vector<std::uint64_t>{1} : std::vector<std::uint64_t>{};
                o.check(v.dims == want, pair_label("Ext(L,L)", p, i, j) + " = " + v.to_string());
            }
        // Ext(Delta(a)^[1] (x) L(i), Nabla(b)^[1] (x) L(j)) against the closed form
        for (Weight a = 0; a < p; ++a)
            for (Weight b = 0; b < p; ++b)
                for (unsigned i = 0; i + 2 <= p; ++i)
                    for (unsigned j = 0; j + 2 <= p; ++j) {
                        const auto v = engine.ext_twist_vs_twist(a, i, b, j);
                        const Weight q_max = a + b + 1;
                        for (Weight q = 0; q <= q_max; ++q) {
                            // q+b >= a >= max(q-b, b-q)
                            const bool in_range = q + b >= a && a + b >= q && a + q >= b;
                            const bool parity = (q % 2) == ((a + b) % 2);
                            const bool residue = q % 2 == 0 ? i == j : i == bar(j, ctx);
                            const std::uint64_t want = in_range && parity && residue ? 1 : 0;
                            o.check(v.at(q) == want, "closed form p=" + std::to_string(p) + " a=" + std::to_string(a) +
                                                         " b=" + std::to_string(b) + " i=" + std::to_string(i) +
                                                         " j=" + std::to_string(j) + " q=" + std::to_string(q));
                        }
                        o.check(v.dims.size() <= q_max, "closed form beyond a+b");
                    }
    }
    return o;
}

Outcome g1_layer(const std::vector<unsigned>& primes, Weight ab_max, Weight resolution_a_max, unsigned m_max)
{
    using namespace frobenius;
    Outcome o{"g1-layer"};
    for (unsigned p : primes) {
        const auto ctx = WeightContext::characteristic(p);
        for (Weight a = 0; a <= ab_max; ++a)
            for (Weight b = 0; b <= ab_max; ++b)
                for (unsigned i = 0; i + 2 <= p; ++i)
                    for (unsigned j = 0; j + 2 <= p; ++j) {
                        const auto higher = g1_ext_higher_weyl_weyl(1, b, j, a, i, ctx);
                        const auto table = g1_ext1_weyl_weyl(b, j, a, i, ctx);
                        o.check(higher == table, "Ext^1_G1 p=" + std::to_string(p) + " b=" + std::to_string(b) +
                                                     " j=" + std::to_string(j) + " a=" + std::to_string(a) +
                                                     " i=" + std::to_string(i) + ": " + higher.to_string() +
                                                     " vs " + table.to_string());
                    }
        for (auto variant : {ResolutionVariant::Weyl, ResolutionVariant::Induced})
            for (Weight a = 0; a <= resolution_a_max; ++a)
                for (unsigned i = 0; i + 2 <= p; ++i)
                    for (unsigned m = 0; m <= m_max; ++m) {
                        const auto here = resolution_term(a, i, m, variant, ctx);
                        const auto next = resolution_term(a, i, m + 1, variant, ctx);
                        o.check(here.kernel_dimension() + next.kernel_dimension() == here.injective_dimension(ctx),
                                "resolution p=" + std::to_string(p) + " a=" + std::to_string(a) + " i=" +
                                    std::to_string(i) + " m=" + std::to_string(m) + ": " + here.to_string());
                    }
    }
    return o;
}

Outcome collapse(std::uint64_t trials, std::uint64_t seed)
{
    using namespace specseq;
    Outcome o{"spectral-collapse"};
    for (Mode mode : {Mode::AllD0Zero, Mode::AllD0Injective})
        for (std::uint64_t t = 0; t < trials; ++t) {
            const std::uint64_t s = seed * 1000003ULL + t;
            const Shape shape{1 + s % 6, 1 + (s / 6) % 6, 5};
            const Bicomplex b = random_bicomplex(s, shape, mode);
            const std::string label = to_string(mode) + " seed " + std::to_string(s);
            const auto valid = validate(b);
            o.check(valid.ok(), label + ": " + (valid.first ? valid.first->message : ""));
            const auto report = check_collapse(b);
            o.check(report.hypothesis != CollapseReport::Hypothesis::None, label + ": generator broke the hypothesis");
            o.check(report.passed(), label + ": " + report.first_discrepancy);
        }
    return o;
}

Outcome witness_control()
{
    using namespace specseq;
    Outcome o{"witness-control"};
    const Bicomplex w = witness();
    o.check(validate(w).ok(), "witness fails validation");
    const Page e2 = page(w, 2, true);
    const std::vector<std::vector<std::size_t>> golden{{0, 1}, {0, 0}, {1, 0}};
    o.check(e2.dims == golden, "witness E2 dims differ from the golden grid");
    const auto d2 = e2.differentials.find(Spot{0, 1});
    o.check(d2 != e2.differentials.end() && !d2->second.is_zero(), "witness d2 from (0,1) is zero");
    const auto c2 = derive(exact_couple(w));
    o.check(!k2_is_zero(c2, 0, 1), "witness k2 at (0,1) is zero");
    const Page e3 = page(w, 3);
    const Page einf = e_infinity(w);
    bool e3_zero = true;
    bool einf_zero = true;
    for (std::size_t m = 0; m < w.width(); ++m)
        for (std::size_t n = 0; n < w.height(); ++n) {
            e3_zero = e3_zero && e3.dims[m][n] == 0;
            einf_zero = einf_zero && einf.dims[m][n] == 0;
        }
    o.check(e3_zero && einf_zero, "witness E3 or Einf nonzero");
    const auto report = check_collapse(w);
    o.check(report.hypothesis == CollapseReport::Hypothesis::None, "witness satisfies the collapse hypothesis");
    o.check(!report.e2_equals_einf, "witness E2 equals Einf");
    o.check(report.converges, "witness convergence fails");
    o.notes.push_back("witness: " + report.first_discrepancy + " (expected)");
    return o;
}

Outcome dual_route(std::uint64_t trials, std::uint64_t seed, int r_max)
{
    using namespace specseq;
    Outcome o{"dual-route-pages"};
    for (std::uint64_t t = 0; t < trials; ++t) {
        const std::uint64_t s = seed * 1000003ULL + t;
        const Shape shape{2 + s % 5, 2 + (s / 5) % 5, 5};
        const Bicomplex b = random_bicomplex(s, shape, Mode::Generic);
        const std::string label = "generic seed " + std::to_string(s);
        o.check(validate(b).ok(), label + ": invalid bicomplex");
        ExactCouple c = exact_couple(b);
        for (int r = 1; r <= r_max; ++r) {
            o.check(is_exact(c), label + ": couple not exact at level " + std::to_string(r));
            o.check(couple_page(c) == page(b, r), label + ": pages differ at r=" + std::to_string(r));
            if (r < r_max)
                c = derive(c);
        }
    }
    return o;
}

Outcome quantum_layer(const std::vector<unsigned>& orders, std::int64_t max_entry)
{
    using namespace quantum;
    Outcome o{"quantum-layer"};
    for (unsigned l : orders) {
        const QuantumEngine q({l, 0});
        const std::string tag = " l=" + std::to_string(l);
        // restricted pairs
        for (std::int64_t lam = 0; lam < l; ++lam)
            for (std::int64_t mu = 0; mu < l; ++mu)
                for (std::int64_t d = 0; d <= static_cast<std::int64_t>(l); ++d) {
                    const auto v = q.qext_weyl_weyl({lam + d, d}, {mu, 0});
                    const bool diagonal = lam == mu && d == 0;
                    o.check(diagonal ? v.dims == std::vector<std::uint64_t>{1} : v.dims.empty(),
                            "restricted (" + std::to_string(lam + d) + "," + std::to_string(d) + ") vs (" +
                                std::to_string(mu) + ",0)" + tag + " = " + v.to_string());
                }
        // Euler characteristic
        for (std::int64_t w1 = 0; w1 <= max_entry; ++w1)
            for (std::int64_t w2 = 0; w2 <= w1; ++w2)
                for (std::int64_t v1 = 0; v1 <= max_entry; ++v1)
                    for (std::int64_t v2 = 0; v2 <= std::min<std::int64_t>(1, v1); ++v2) {
                        const GL2Weight x{w1, w2};
                        const GL2Weight y{v1, v2};
                        const auto v = q.qext_weyl_weyl(x, y);
                        o.check(v.euler() == (x == y ? 1 : 0),
                                "euler " + x.to_string() + " vs " + y.to_string() + tag + " = " + v.to_string());
                    }
        // even case: translation, then the degree shift for m >= 1
        const auto& tower = q.tower();
        const auto lctx = WeightContext::quantum(l);
        for (unsigned i = 0; i + 2 <= l; ++i)
            for (Weight a = 0; a * l <= static_cast<Weight>(max_entry); ++a)
                for (Weight b = 0; b <= a; b += 1) {
                    if ((a - b) % 2)
                        continue;
                    const std::int64_t d = static_cast<std::int64_t>(l * (a - b) / 2);
                    const std::int64_t ii = i;
                    const std::int64_t la = static_cast<std::int64_t>(l * a);
                    const std::int64_t lb = static_cast<std::int64_t>(l * b);
                    const std::int64_t lab = static_cast<std::int64_t>(l * (a - b));
                    const auto full = q.qext_weyl_weyl({lb + ii + d, d}, {la + ii, 0});
                    const auto translated = q.qext_weyl_weyl({ii + d, d}, {lab + ii, 0});
                    const std::string label = tag + " a=" + std::to_string(a) + " b=" + std::to_string(b) +
                                              " i=" + std::to_string(i);
                    o.check(full.dims == translated.dims, "translation" + label);
                    if (a == b)
                        continue;
                    const auto shifted = q.qext_weyl_weyl({ii + d, d}, {lab - 1, ii + 1});
                    const auto t_here = tower.ext(F::weyl(i), F::weyl(compose(a - b, i, lctx)));
                    const auto t_shift = tower.ext(F::weyl(i), F::weyl(compose(a - b - 1, bar(i, lctx), lctx)));
                    const std::size_t top = std::max({translated.dims.size(), shifted.dims.size() + 1,
                                                      t_here.dims.size(), t_shift.dims.size() + 1});
                    for (std::size_t m = 1; m < top; ++m) {
                        o.check(translated.at(m) == shifted.at(m - 1),
                                "degree shift m=" + std::to_string(m) + label);
                        o.check(t_here.at(m) == t_shift.at(m - 1), "tower degree shift m=" + std::to_string(m) + label);
                        o.check(translated.at(m) == t_here.at(m), "recursion vs tower m=" + std::to_string(m) + label);
                    }
                    o.check(translated.at(0) == 0, "Hom nonzero" + label);
                }
    }
    return o;
}

namespace {

std::string render_grid(const ExtEngine& engine, Weight max_weight)
{
    std::ostringstream os;
    for (Weight l = 0; l <= max_weight; ++l)
        for (Weight m = 0; m <= max_weight; ++m) {
            os << l << ' ' << m << ' ' << engine.query(F::weyl(l), F::weyl(m)).to_string() << '\n';
            os << l << ' ' << m << ' ' << engine.query(F::weyl(l), F::simple(m)).to_string() << '\n';
        }
    return os.str();
}

}  // namespace

Outcome determinism_and_cache(unsigned p, Weight max_weight)
{
    Outcome o{"determinism-cache"};
    const auto ctx = WeightContext::characteristic(p);
    const ExtEngine warm(ctx);
    const ExtEngine cold(ctx, EngineOptions{false});
    const std::string first = render_grid(warm, max_weight);
    o.check(first == render_grid(warm, max_weight), "memoized rerun differs");
    o.check(first == render_grid(cold, max_weight), "memoized and cold outputs differ");
    o.check(cold.memo_size() == 0, "cold engine kept a memo");

    std::stringstream file;
    const auto written = cache::export_records(file, warm);
    o.check(written == warm.memo_size() && written > 0, "export wrote " + std::to_string(written) + " records");
    const std::string exported = file.str();

    const ExtEngine fresh(ctx);
    std::istringstream in(exported);
    const auto report = cache::import_records(in, fresh, true);
    o.check(report.imported == written && report.warning_count() == 0,
            "import took " + std::to_string(report.imported) + " of " + std::to_string(written) + " records");
    o.check(fresh.memo_entries() == warm.memo_entries(), "imported memo differs from the exported one");
    o.check(render_grid(fresh, max_weight) == first, "outputs differ after the cache round trip");

    std::ostringstream again;
    cache::export_records(again, fresh);
    o.check(again.str() == exported, "re-export is not byte-identical");

    // a tampered record must be caught by the paranoid re-derivation
    const auto entries = warm.memo_entries();
    auto tampered = entries.front();
    tampered.second.push_back(7);
    std::istringstream bad(cache::record_line({tampered.first, tampered.second}) + "\n");
    const ExtEngine target(ctx);
    const auto rejected = cache::import_records(bad, target, true);
    o.check(rejected.rejected == 1 && rejected.imported == 0, "tampered record was not rejected");
    return o;
}

std::vector<Outcome> run_suite(const std::string& suite, const SuiteOptions& options)
{
    auto primes = [&](std::vector<unsigned> fallback) {
        return options.p ? std::vector<unsigned>{*options.p} : fallback;
    };
    auto weight = [&](Weight fallback) { return options.max_weight.value_or(fallback); };
    const bool all = suite == "all";
    std::vector<Outcome> out;
    CutoffTally tally;
    bool tallied = false;

    if (all || suite == "euler") {
        out.push_back(euler_weyl(primes({2, 3, 5, 7}), weight(200), &tally));
        out.push_back(euler_simple(primes({2, 3, 5}), weight(150), &tally));
        tallied = true;
    }
    if (all || suite == "duality") {
        out.push_back(duality(primes({2, 3, 5, 7}), weight(60), &tally));
        out.push_back(top_degree(primes({2, 3, 5}), 40, &tally));
        out.push_back(route_consistency(primes({2, 3, 5}), 40));
        out.push_back(restricted_simples(primes({3, 5, 7})));
        tallied = true;
    }
    if (tallied)
        out.push_back(tally.outcome());
    if (all || suite == "resolution")
        out.push_back(g1_layer(primes({2, 3, 5, 7}), 30, 20, 40));
    if (all || suite == "collapse") {
        out.push_back(collapse(options.trials, options.seed));
        out.push_back(witness_control());
        out.push_back(dual_route(std::min<std::uint64_t>(options.trials, 200), options.seed, 6));
    }
    if (all) {
        out.push_back(quantum_layer({2, 3, 5}, 60));
        out.push_back(determinism_and_cache(options.p.value_or(3), 40));
    }
    if (out.empty())
        throw std::invalid_argument("unknown suite: " + suite);
    return out;
}

}  // namespace sl2ext::verify
