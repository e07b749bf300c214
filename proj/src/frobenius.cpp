#include "sl2ext/frobenius.hpp"

#include <sstream>

namespace sl2ext::frobenius {

namespace {

using I64 = std::int64_t;

I64 s(Weight w) { return static_cast<I64>(w); }

void require_regular(unsigned r, const WeightContext& ctx)
{
    ctx.require_modular();
    if (r + 2 > ctx.p())
        throw std::invalid_argument("G1 formulas need residues <= p - 2");
}

}  // namespace

Weight TwistTerm::dimension() const
{
    switch (shape) {
    case Shape::Nabla:
    case Shape::Delta:
        return c + 1;
    case Shape::DeltaNabla:
    case Shape::NablaNabla:
        return checked_mul(c + 1, d + 1);
    }
    return 0;
}

std::string TwistTerm::to_string() const
{
    std::ostringstream os;
    switch (shape) {
    case Shape::Nabla: os << "N(" << c << ")^[1]"; break;
    case Shape::Delta: os << "D(" << c << ")^[1]"; break;
    case Shape::DeltaNabla: os << "D(" << c << ")^[1] x N(" << d << ")^[1]"; break;
    case Shape::NablaNabla: os << "N(" << c << ")^[1] x N(" << d << ")^[1]"; break;
    }
    return os.str();
}

FormalGModule FormalGModule::nabla(I64 c)
{
    FormalGModule m;
    if (c >= 0)
        m.terms_.push_back({TwistTerm::Shape::Nabla, Weight(c)});
    return m;
}

FormalGModule FormalGModule::delta(I64 c)
{
    FormalGModule m;
    if (c >= 0)
        m.terms_.push_back({TwistTerm::Shape::Delta, Weight(c)});
    return m;
}

FormalGModule FormalGModule::delta_nabla(I64 c, I64 d)
{
    FormalGModule m;
    if (c >= 0 && d >= 0)
        m.terms_.push_back({TwistTerm::Shape::DeltaNabla, Weight(c), Weight(d)});
    return m;
}

FormalGModule FormalGModule::nabla_nabla(I64 c, I64 d)
{
    FormalGModule m;
    if (c >= 0 && d >= 0)
        m.terms_.push_back({TwistTerm::Shape::NablaNabla, Weight(c), Weight(d)});
    return m;
}

FormalGModule& FormalGModule::operator+=(const FormalGModule& other)
{
    terms_.insert(terms_.end(), other.terms_.begin(), other.terms_.end());
    return *this;
}

Weight FormalGModule::dimension() const
{
    Weight dim = 0;
    for (const auto& t : terms_)
        dim = checked_add(dim, t.dimension());
    return dim;
}

std::string FormalGModule::to_string() const
{
    if (terms_.empty())
        return "0";
    std::string out;
    for (const auto& t : terms_) {
        if (!out.empty())
            out += " + ";
        out += t.to_string();
    }
    return out;
}

FormalGModule g1_hom_weyl_Q(Weight b, unsigned j, unsigned i, const WeightContext& ctx)
{
    require_regular(i, ctx);
    require_regular(j, ctx);
    FormalGModule out;
    if (i == j)
        out += FormalGModule::nabla(s(b));
    if (i == bar(j, ctx))
        out += FormalGModule::nabla(s(b) - 1);
    return out;
}

// Oriented as in the proof: source Delta(pb+j), target Delta(pa+i).
FormalGModule g1_ext1_weyl_weyl(Weight b, unsigned j, Weight a, unsigned i, const WeightContext& ctx)
{
    require_regular(i, ctx);
    require_regular(j, ctx);
    const I64 diff = s(a) - s(b);
    FormalGModule out;
    if (diff >= 2 && i == j)
        out += FormalGModule::delta(diff - 2);
    if (diff <= 1 && i == bar(j, ctx))
        out += FormalGModule::nabla(1 - diff);
    return out;
}

FormalGModule g1_ext1_weyl_ind(Weight b, unsigned i, Weight a, unsigned j, const WeightContext& ctx)
{
    require_regular(i, ctx);
    require_regular(j, ctx);
    if (i != bar(j, ctx))
        return {};
    return FormalGModule::nabla(s(a) + s(b) + 1);
}

FormalGModule g1_hom_weyl_weyl(Weight b, unsigned j, Weight a, unsigned i, const WeightContext& ctx)
{
    require_regular(i, ctx);
    require_regular(j, ctx);
    FormalGModule out;
    if (j == bar(i, ctx))
        out += FormalGModule::delta_nabla(s(a) - 1, s(b));
    if (j == i && b >= a)
        out += FormalGModule::nabla(s(b) - s(a));
    return out;
}

FormalGModule g1_hom_weyl_ind(Weight b, unsigned i, Weight a, unsigned j, const WeightContext& ctx)
{
    require_regular(i, ctx);
    require_regular(j, ctx);
    if (i != j)
        return {};
    return FormalGModule::nabla_nabla(s(b), s(a));
}

FormalGModule g1_ext_higher_weyl_weyl(unsigned m, Weight b, unsigned j, Weight a, unsigned i,
                                      const WeightContext& ctx)
{
    require_regular(i, ctx);
    require_regular(j, ctx);
    if (m == 0)
        throw std::invalid_argument("g1_ext_higher_weyl_weyl needs m >= 1");
    const I64 diff = s(a) - s(b);
    const I64 mm = m;
    const bool odd = m % 2 == 1;
    FormalGModule out;
    auto clause = [&](bool delta_parity) {
        if (odd == delta_parity && mm <= diff - 1)
            out += FormalGModule::delta(diff - mm - 1);
        if (odd != delta_parity && mm >= diff)
            out += FormalGModule::nabla(mm - diff);
    };
    if (j == i)
        clause(true);
    if (j == bar(i, ctx))
        clause(false);
    return out;
}

Weight ResolutionTerm::injective_dimension(const WeightContext& ctx) const
{
    return checked_mul(injective_twist + 1, 2 * Weight{ctx.p()});
}

std::string ResolutionTerm::to_string() const
{
    std::ostringstream os;
    os << "I_" << m << " = " << (injective_is_delta ? "D(" : "N(") << injective_twist << ")^[1] x Q("
       << injective_residue << "), M_" << m << " = " << (kernel_is_delta ? "D(" : "N(") << kernel_weight << ")";
    return os.str();
}

ResolutionTerm resolution_term(Weight a, unsigned i, unsigned m, ResolutionVariant variant, const WeightContext& ctx)
{
    require_regular(i, ctx);
    const unsigned ib = bar(i, ctx);
    const bool odd = m % 2 == 1;
    ResolutionTerm t{};
    t.m = m;
    if (variant == ResolutionVariant::Induced) {
        const Weight c = checked_add(a, m);
        t.injective_is_delta = false;
        t.injective_twist = c;
        t.injective_residue = odd ? ib : i;
        t.kernel_is_delta = false;
        t.kernel_weight = compose(c, odd ? ib : i, ctx);
        return t;
    }
    if (Weight(m) + 1 <= a) {
        t.injective_is_delta = true;
        t.injective_twist = a - m - 1;
        t.injective_residue = odd ? i : ib;
        t.kernel_is_delta = true;
        t.kernel_weight = compose(a - m, odd ? ib : i, ctx);
    } else {
        t.injective_is_delta = false;
        t.injective_twist = m - a;
        t.injective_residue = odd ? ib : i;
        t.kernel_is_delta = false;
        t.kernel_weight = compose(m - a, odd ? ib : i, ctx);
    }
    return t;
}

}  // namespace sl2ext::frobenius
