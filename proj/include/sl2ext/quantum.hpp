#pragma once

#include <cstdint>
#include <memory>
#include <string>

#include "sl2ext/ext_engine.hpp"

namespace sl2ext::quantum {

/// Dominant GL2 weight (w1, w2), w1 >= w2.
struct GL2Weight {
    std::int64_t w1 = 0;
    std::int64_t w2 = 0;

    std::int64_t degree() const { return w1 + w2; }
    Weight sl2() const { return static_cast<Weight>(w1 - w2); }
    std::string to_string() const;

    /// Parses "w1,w2"; throws std::invalid_argument on anything else.
    static GL2Weight parse(const std::string& text);

    friend bool operator==(const GL2Weight&, const GL2Weight&) = default;
};

/// q-GL2 at a primitive l-th root of unity over a field of characteristic p
/// (p = 0 or prime).
struct QuantumContext {
    unsigned l = 2;
    unsigned p = 0;
};

/// The quantum layer.  Classical (untwisted) terms go to a GL2 oracle that is
/// either a characteristic-p SL2 engine or the semisimple oracle; GL2 Ext is
/// read off SL2 Ext after matching degrees.
///
/// Two routes are kept: the tower engine (the classical engine instantiated
/// at order l over the classical oracle) and the one-step degree-shift
/// recursions for q-GL2, implemented directly here.
class QuantumEngine {
public:
    explicit QuantumEngine(QuantumContext qctx);
    ~QuantumEngine();
    QuantumEngine(const QuantumEngine&) = delete;
    QuantumEngine& operator=(const QuantumEngine&) = delete;

    const QuantumContext& context() const { return qctx_; }
    const ExtOracle& classical() const;
    const ExtEngine& tower() const;

    /// Classical GL2 Ext(Delta(lhs), Delta(rhs)); zero across degrees.
    ExtVector classical_gl2_ext(const GL2Weight& lhs, const GL2Weight& rhs) const;

    /// Quantum Ext(Delta(lhs), Delta(rhs)) through the degree-shift recursion.
    ExtVector qext_weyl_weyl(const GL2Weight& lhs, const GL2Weight& rhs) const;

    /// Quantum Ext(N^[1] (x) L(r), Delta(mu)) with N classical; determinant
    /// twists are fixed by the block, so weights are SL2 weights.
    ExtVector qext_twist_vs_weyl(const FormalModule& n, unsigned r, Weight mu) const;

    /// Quantum Ext(Delta(lambda), M^[1] (x) L(r)) with M classical.
    ExtVector qext_weyl_vs_twist(Weight lambda, const FormalModule& m, unsigned r) const;

private:
    struct Memo;

    ExtVector weyl_weyl(Weight lambda, Weight mu) const;

    QuantumContext qctx_;
    WeightContext lctx_;
    std::unique_ptr<ExtOracle> classical_;
    std::unique_ptr<ExtEngine> tower_;
    std::unique_ptr<Memo> memo_;
};

}  // namespace sl2ext::quantum
