#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "sl2ext/grothendieck.hpp"
#include "sl2ext/weights.hpp"

namespace sl2ext {

/// Raised when a query falls outside every family the engine can reduce to.
/// Unsupported is never reported as a zero vector.
class UnsupportedFamily : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Symbolic module: k, Delta, Nabla, L, T, or N^[1] (x) L(r).
class FormalModule {
public:
    enum class Kind { Trivial, Weyl, Induced, Simple, Tilting, TwistProd };

    static FormalModule trivial();
    static FormalModule weyl(Weight lambda);
    static FormalModule induced(Weight lambda);
    static FormalModule simple(Weight lambda);
    static FormalModule tilting(Weight lambda);
    static FormalModule twist(FormalModule inner, unsigned residue);

    Kind kind() const { return kind_; }
    /// Highest weight for the untwisted kinds; unused for TwistProd.
    Weight weight() const { return weight_; }
    unsigned residue() const { return residue_; }
    const FormalModule& inner() const;

    /// Highest weight; p * hw(N) + r for N^[1] (x) L(r).
    Weight highest_weight(const WeightContext& ctx) const;

    /// Contravariant dual: Delta <-> Nabla, L and T fixed.
    FormalModule dual() const;

    /// Compact text form, e.g. "W(7)", "P(S(2),1)".  Round-trips through parse().
    std::string to_string() const;
    static FormalModule parse(const std::string& text);

    friend bool operator==(const FormalModule& x, const FormalModule& y);

private:
    FormalModule(Kind kind, Weight weight) : kind_(kind), weight_(weight) {}

    Kind kind_;
    Weight weight_ = 0;
    unsigned residue_ = 0;
    std::shared_ptr<const FormalModule> inner_;
};

/// dims[q] = dim Ext^q; trailing zeros are trimmed.  Every q >= cutoff is zero.
struct ExtVector {
    std::vector<std::uint64_t> dims;
    Weight cutoff = 0;

    std::uint64_t at(std::size_t q) const { return q < dims.size() ? dims[q] : 0; }
    bool is_zero() const { return dims.empty(); }
    std::int64_t euler() const;
    std::string to_string() const;

    friend bool operator==(const ExtVector&, const ExtVector&) = default;
};

/// Canonical form of a query.  Queries related by duality or Steinberg
/// stripping share a key.  `family` is "zero" for unlinked pairs.
struct QueryKey {
    std::string family;
    FormalModule source = FormalModule::trivial();
    FormalModule target = FormalModule::trivial();
    unsigned p = 0;
    bool quantum = false;

    /// family|source|target|p<p> (l<l> for a quantum order), parseable by from_string().
    std::string to_string() const;
    static QueryKey from_string(const std::string& text);
};

/// Anything that answers Ext queries between formal modules.  The quantum
/// tower plugs a classical engine (or the semisimple oracle) in here.
class ExtOracle {
public:
    virtual ~ExtOracle() = default;
    /// Full vector; dims beyond the vanishing range are never produced.
    virtual ExtVector ext(const FormalModule& source, const FormalModule& target) const = 0;
};

/// Characteristic zero: everything is semisimple, Ext^q = delta_{q,0} on equal weights.
class SemisimpleOracle : public ExtOracle {
public:
    ExtVector ext(const FormalModule& source, const FormalModule& target) const override;
};

struct EngineOptions {
    bool memoize = true;
};

/// Ext calculator for SL2 in characteristic p (or at quantum order l, in
/// which case `untwisted` supplies the classical layer).
class ExtEngine : public ExtOracle {
public:
    explicit ExtEngine(WeightContext ctx, EngineOptions options = {}, const ExtOracle* untwisted = nullptr);
    ~ExtEngine() override;
    ExtEngine(const ExtEngine&) = delete;
    ExtEngine& operator=(const ExtEngine&) = delete;

    const WeightContext& context() const { return ctx_; }
    const grothendieck::CharacterTables& tables() const { return tables_; }

    QueryKey normalize(const FormalModule& source, const FormalModule& target) const;

    /// Ext^q vanishes for q > bound.
    Weight vanishing_bound(const FormalModule& source, const FormalModule& target) const;

    /// Top-level entry: normalize, dispatch, memoize.  The vector is cut at
    /// max_degree when given; cutoff is vanishing_bound + 1.
    ExtVector query(const FormalModule& source, const FormalModule& target,
                    std::optional<Weight> max_degree = std::nullopt) const;

    ExtVector ext(const FormalModule& source, const FormalModule& target) const override;

    // Family A: Ext(Delta(lambda), Delta(mu)).
    ExtVector ext_weyl_weyl(Weight lambda, Weight mu) const;
    /// Same groups through the one-step degree-shift recursions instead of the
    /// closed sum; kept independent of the memo for cross-checking.
    ExtVector ext_weyl_weyl_shift(Weight lambda, Weight mu) const;
    // Family B: Ext(N^[1] (x) L(r), Delta(mu)).
    ExtVector ext_twist_vs_weyl(const FormalModule& n, unsigned r, Weight mu) const;
    // Family C: Ext(L(mu), Delta(lambda)).
    ExtVector ext_simple_vs_weyl(Weight mu, Weight lambda) const;
    // Family D: Ext(Delta(lambda), M^[1] (x) L(r)).
    ExtVector ext_weyl_vs_twist(Weight lambda, const FormalModule& m, unsigned r) const;
    // Family E: Ext(Delta(a)^[1] (x) L(r1), Nabla(b)^[1] (x) L(r2)).
    ExtVector ext_twist_vs_twist(Weight a, unsigned r1, Weight b, unsigned r2) const;
    // Family F: Ext(T(lambda), Delta(mu)).
    ExtVector ext_tilting_vs_weyl(Weight lambda, Weight mu) const;

    /// Memo contents as (key string, dims) pairs in key order.
    std::vector<std::pair<std::string, std::vector<std::uint64_t>>> memo_entries() const;
    /// Idempotent insert of a precomputed entry.
    void memo_insert(const std::string& key, std::vector<std::uint64_t> dims) const;
    std::size_t memo_size() const;

private:
    struct Memo;

    ExtVector dispatch(const QueryKey& key) const;
    ExtVector compute(const FormalModule& source, const FormalModule& target) const;
    const ExtOracle& untwisted() const { return untwisted_ ? *untwisted_ : *this; }

    WeightContext ctx_;
    EngineOptions options_;
    const ExtOracle* untwisted_;
    grothendieck::CharacterTables tables_;
    std::unique_ptr<Memo> memo_;
};

}  // namespace sl2ext
