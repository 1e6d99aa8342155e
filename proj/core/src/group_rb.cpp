#include "rblie/group_rb.hpp"

#include <array>
#include <stdexcept>

namespace rblie {

BCHGroup::BCHGroup(const LieAlgebra& g, std::optional<int> truncation)
    : ctx_(g, truncation) {
    if (!g.is_nilpotent())
        throw std::invalid_argument("BCH group requires a nilpotent algebra");
    if (ctx_.truncation() < *g.nilpotency_class())
        throw std::invalid_argument("truncation below nilpotency class");
}

Vec BCHGroup::mul(const Vec& x, const Vec& y) const {
    return ctx_.log(ctx_.product(ctx_.exp(x), ctx_.exp(y)));
}

Vec BCHGroup::commutator(const Vec& x, const Vec& y) const {
    return mul(mul(x, y), mul(inverse(x), inverse(y)));
}

RBGroupOperator::RBGroupOperator(const RBLieAlgebra& src, std::optional<int> truncation)
    : src_(&src), group_(src.algebra(), truncation), ctx_(src, truncation) {}

Vec RBGroupOperator::via_hopf(const Vec& x) const {
    return ctx_.log(ctx_.lift_rb(ctx_.exp(x)));
}

Vec RBGroupOperator::via_magnus(const Vec& x) const {
    return src_->rb().apply(magnus(x));
}

Vec RBGroupOperator::via(IntegrationRoute route, const Vec& x) const {
    switch (route) {
        case IntegrationRoute::Hopf: return via_hopf(x);
        case IntegrationRoute::Magnus: return via_magnus(x);
        case IntegrationRoute::Closed: {
            auto cls = src_->algebra().nilpotency_class();
            return closed_formula(x, cls && *cls <= 2 ? 3 : 4);
        }
    }
    throw std::logic_error("unknown integration route");
}

std::vector<Vec> RBGroupOperator::magnus_components(const Vec& x) const {
    int n = ctx_.truncation();
    // Omega_n = x^n/n! - sum_{k=2}^{n} sum_{i_1+...+i_k=n, i_j >= 1}
    //           (1/k!) Omega_{i_1} (star) ... (star) Omega_{i_k}
    std::vector<UEAElement> omega;  // omega[i] holds Omega_{i+1} as a UEA element
    omega.push_back(ctx_.embed(x));
    UEAElement xe = ctx_.embed(x);
    UEAElement xpow = ctx_.embed(x);
    Scalar fact(1);
    for (int deg = 2; deg <= n; ++deg) {
        xpow = ctx_.product(xpow, xe);
        fact *= deg;
        UEAElement acc = xpow * (Scalar(1) / fact);
        // ordered compositions of deg into k >= 2 parts, built left to right
        struct Frame {
            UEAElement chain;
            int remaining;
            int parts;
        };
        std::vector<Frame> stack{{ctx_.one(), deg, 0}};
        Scalar kfact;
        while (!stack.empty()) {
            Frame f = std::move(stack.back());
            stack.pop_back();
            if (f.remaining == 0) {
                if (f.parts >= 2) {
                    kfact = 1;
                    for (int t = 2; t <= f.parts; ++t) kfact *= t;
                    acc = acc - f.chain * (Scalar(1) / kfact);
                }
                continue;
            }
            for (int part = 1; part <= f.remaining && part < deg; ++part)
                stack.push_back({ctx_.star_product(f.chain, omega[part - 1]),
                                 f.remaining - part, f.parts + 1});
        }
        omega.push_back(acc);
    }
    std::vector<Vec> out;
    const LieAlgebra& g = src_->algebra();
    for (int i = 0; i < static_cast<int>(omega.size()); ++i) {
        auto prim = omega[i].primitive_part();
        if (!prim) throw std::logic_error("Magnus component is not primitive");
        if (!is_zero(*prim) && g.filtration_degree(*prim) < i + 1)
            throw std::logic_error("Magnus component below its filtration degree");
        out.push_back(std::move(*prim));
    }
    return out;
}

Vec RBGroupOperator::magnus(const Vec& x) const {
    Vec sum = zero_vec(src_->algebra().dim());
    for (const auto& comp : magnus_components(x)) add_assign(sum, comp);
    return sum;
}

Vec RBGroupOperator::closed_formula(const Vec& x, int order) const {
    const LieAlgebra& g = src_->algebra();
    const LinearOperator& rb = src_->rb();
    auto cls = g.nilpotency_class();
    if (order == 3) {
        if (!cls || *cls > 2)
            throw std::invalid_argument("order-3 closed formula needs g^3 = 0");
        // R(x) - 1/2 R([R(x), x])
        Vec rx = rb.apply(x);
        Vec out = rx;
        sub_assign(out, scaled(rb.apply(g.bracket(rx, x)), Scalar(1, 2)));
        return out;
    }
    if (order == 4) {
        if (!cls || *cls > 3)
            throw std::invalid_argument("order-4 closed formula needs g^4 = 0");
        auto series = g.lower_central_series();
        for (std::size_t i = 1; i < series.size(); ++i)
            for (const auto& r : series[i].rows())
                if (!series[i].contains(rb.apply(r)))
                    throw std::invalid_argument(
                        "order-4 closed formula needs R(g^i) in g^i for i = 2, 3");
        Vec rx = rb.apply(x);
        Vec rxx = g.bracket(rx, x);  // [R(x), x]
        Vec out = rx;
        sub_assign(out, scaled(rb.apply(rxx), Scalar(1, 2)));
        // R applied to every degree-3 component of the expansion:
        // 1/12 [[R(x),x],x] + 1/12 [R(x),[R(x),x]] + 1/4 [R([R(x),x]),x]
        Vec inner = g.bracket(rxx, x);
        add_assign(inner, g.bracket(rx, rxx));
        inner = scaled(inner, Scalar(1, 12));
        add_assign(inner, scaled(g.bracket(rb.apply(rxx), x), Scalar(1, 4)));
        add_assign(out, rb.apply(inner));
        return out;
    }
    throw std::invalid_argument("closed formula order must be 3 or 4");
}

Brace::Brace(const LieAlgebra& g) : group_(g) {
    auto cls = g.nilpotency_class();
    if (!cls || *cls > 2)
        throw std::invalid_argument(
            "brace construction needs g^3 = 0; the compatibility law fails otherwise");
}

Vec Brace::add(const Vec& x, const Vec& y) const {
    Vec out = x;
    add_assign(out, y);
    return out;
}

BraceReport Brace::verify(const std::vector<std::array<Vec, 3>>& triples) const {
    return check_brace_law(group_, triples);
}

BraceReport check_brace_law(const BCHGroup& group,
                            const std::vector<std::array<Vec, 3>>& triples) {
    BraceReport rep;
    for (const auto& [x, y, z] : triples) {
        Vec yz = y;
        add_assign(yz, z);
        Vec lhs = group.mul(x, yz);
        Vec rhs = group.mul(x, y);
        sub_assign(rhs, x);
        add_assign(rhs, group.mul(x, z));
        if (lhs != rhs) {
            rep.ok = false;
            rep.witness = {x, y, z};
            break;
        }
    }
    return rep;
}

SpecialCaseReport special_cases(const RBGroupOperator& op, const Vec& x) {
    SpecialCaseReport rep;
    const LieAlgebra& g = op.source().algebra();
    const LinearOperator& rb = op.source().rb();
    Vec rx = rb.apply(x);
    Vec frx = op.apply(x);
    if (is_zero(g.bracket(rx, x))) {
        rep.commuting_case_applicable = true;
        rep.commuting_case_ok = (frx == rx);
    }
    if (is_zero(rx)) {
        rep.kernel_case_applicable = true;
        rep.kernel_case_ok = is_zero(frx);
    }
    RBLieAlgebra src(g, rb);
    Subspace closure = minimal_invariant_subalgebra(src, x);
    rep.invariant_closure_ok = closure.contains(frx);
    return rep;
}

}  // namespace rblie
