#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sl2ext/weights.hpp"

namespace sl2ext::frobenius {

/// One summand of a formal G/G1-module.  Only Frobenius-twisted shapes occur.
struct TwistTerm {
    enum class Shape {
        Nabla,        ///< Nabla(c)^[1]
        Delta,        ///< Delta(c)^[1]
        DeltaNabla,   ///< Delta(c)^[1] (x) Nabla(d)^[1]
        NablaNabla,   ///< Nabla(c)^[1] (x) Nabla(d)^[1]
    };
    Shape shape;
    Weight c;
    Weight d = 0;

    Weight dimension() const;
    std::string to_string() const;

    friend bool operator==(const TwistTerm&, const TwistTerm&) = default;
};

/// Formal direct sum of twisted terms; the empty sum is Zero.  Terms built
/// from a negative argument are dropped on construction.
class FormalGModule {
public:
    FormalGModule() = default;

    static FormalGModule zero() { return {}; }
    static FormalGModule nabla(std::int64_t c);
    static FormalGModule delta(std::int64_t c);
    static FormalGModule delta_nabla(std::int64_t c, std::int64_t d);
    static FormalGModule nabla_nabla(std::int64_t c, std::int64_t d);

    FormalGModule& operator+=(const FormalGModule& other);
    friend FormalGModule operator+(FormalGModule x, const FormalGModule& y) { return x += y; }

    bool is_zero() const { return terms_.empty(); }
    const std::vector<TwistTerm>& terms() const { return terms_; }
    Weight dimension() const;
    std::string to_string() const;

    friend bool operator==(const FormalGModule&, const FormalGModule&) = default;

private:
    std::vector<TwistTerm> terms_;
};

// G1-level Hom/Ext groups between Weyl and induced modules, as G/G1-modules.
// Arguments follow the module labels: source Delta(pb+j), target Delta(pa+i)
// etc.; all residues must be <= p - 2.

/// Hom_{G1}(Delta(pb+j), M^[1] (x) Q(i)) with the M^[1] factor left implicit.
FormalGModule g1_hom_weyl_Q(Weight b, unsigned j, unsigned i, const WeightContext& ctx);

/// Ext^1_{G1}(Delta(pb+j), Delta(pa+i)).
FormalGModule g1_ext1_weyl_weyl(Weight b, unsigned j, Weight a, unsigned i, const WeightContext& ctx);

/// Ext^1_{G1}(Delta(pb+i), Nabla(pa+j)).
FormalGModule g1_ext1_weyl_ind(Weight b, unsigned i, Weight a, unsigned j, const WeightContext& ctx);

/// Hom_{G1}(Delta(pb+j), Delta(pa+i)).
FormalGModule g1_hom_weyl_weyl(Weight b, unsigned j, Weight a, unsigned i, const WeightContext& ctx);

/// Hom_{G1}(Delta(pb+i), Nabla(pa+j)).
FormalGModule g1_hom_weyl_ind(Weight b, unsigned i, Weight a, unsigned j, const WeightContext& ctx);

/// Ext^m_{G1}(Delta(pb+j), Delta(pa+i)) for m >= 1.
FormalGModule g1_ext_higher_weyl_weyl(unsigned m, Weight b, unsigned j, Weight a, unsigned i,
                                      const WeightContext& ctx);

enum class ResolutionVariant { Weyl, Induced };

/// One step of the explicit G1-injective resolution of Delta(pa+i)
/// (variant Weyl) or Nabla(pa+i) (variant Induced):
///   injective I_m = X(c)^[1] (x) Q(r), kernel M_m = Y(p c' + r').
struct ResolutionTerm {
    unsigned m;
    bool injective_is_delta;
    Weight injective_twist;
    unsigned injective_residue;
    bool kernel_is_delta;
    Weight kernel_weight;

    Weight injective_dimension(const WeightContext& ctx) const;
    Weight kernel_dimension() const { return kernel_weight + 1; }
    std::string to_string() const;
};

ResolutionTerm resolution_term(Weight a, unsigned i, unsigned m, ResolutionVariant variant,
                               const WeightContext& ctx);

}  // namespace sl2ext::frobenius
