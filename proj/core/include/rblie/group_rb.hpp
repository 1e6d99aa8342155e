#pragma once

#include "rblie/uea.hpp"

#include <functional>
#include <string>
#include <vector>

namespace rblie {

// The formal integration (g, *) of a nilpotent filtered Lie algebra:
// x * y = BCH(x, y) = log(exp(x) exp(y)) in the truncated enveloping algebra.
class BCHGroup {
public:
    explicit BCHGroup(const LieAlgebra& g, std::optional<int> truncation = std::nullopt);

    const LieAlgebra& algebra() const { return ctx_.algebra(); }
    const UEAContext& uea() const { return ctx_; }

    Vec mul(const Vec& x, const Vec& y) const;
    Vec inverse(const Vec& x) const { return scaled(x, Scalar(-1)); }
    // (x, y) = x y x^{-1} y^{-1} under the group law.
    Vec commutator(const Vec& x, const Vec& y) const;

private:
    UEAContext ctx_;
};

enum class IntegrationRoute { Hopf, Magnus, Closed };

// The integrated Rota-Baxter group operator rR on (g, *), computable by
// the Hopf-lift route log(R(exp x)) and by R applied to the post-Lie Magnus
// expansion; the two agree and are cross-checked in tests.
class RBGroupOperator {
public:
    explicit RBGroupOperator(const RBLieAlgebra& src,
                             std::optional<int> truncation = std::nullopt);

    const RBLieAlgebra& source() const { return *src_; }
    const BCHGroup& group() const { return group_; }
    const UEAContext& uea() const { return ctx_; }

    Vec apply(const Vec& x) const { return via_hopf(x); }
    Vec via_hopf(const Vec& x) const;
    Vec via_magnus(const Vec& x) const;
    Vec via(IntegrationRoute route, const Vec& x) const;

    // Per-degree components Omega_1(x), ..., Omega_N(x) of the post-Lie
    // Magnus expansion; their sum is log_star(exp(x)).
    std::vector<Vec> magnus_components(const Vec& x) const;
    Vec magnus(const Vec& x) const;

    // Closed formulas for low nilpotency class. order 3 needs g^3 = 0;
    // order 4 needs g^4 = 0 and R(g^i) in g^i for i = 2, 3.
    Vec closed_formula(const Vec& x, int order) const;

private:
    const RBLieAlgebra* src_;
    BCHGroup group_;
    UEAContext ctx_;
};

struct BraceReport {
    bool ok = true;
    // failing triple for the compatibility law x*(y+z) = (x*y) - x + (x*z)
    std::optional<std::array<Vec, 3>> witness;
};

// The brace (g, +, *) on a nilpotent algebra with g^3 = 0; + is vector
// addition and * the BCH law. Construction rejects class > 2, where the
// brace law genuinely fails.
class Brace {
public:
    explicit Brace(const LieAlgebra& g);

    const BCHGroup& group() const { return group_; }
    Vec add(const Vec& x, const Vec& y) const;
    Vec mul(const Vec& x, const Vec& y) const { return group_.mul(x, y); }

    BraceReport verify(const std::vector<std::array<Vec, 3>>& triples) const;

private:
    BCHGroup group_;
};

// Checks the brace law on explicit triples without any class restriction;
// used to exhibit violations for class >= 3 algebras.
BraceReport check_brace_law(const BCHGroup& group,
                            const std::vector<std::array<Vec, 3>>& triples);

struct SpecialCaseReport {
    bool commuting_case_applicable = false;  // [R(x), x] = 0
    bool commuting_case_ok = true;           // then rR(x) = R(x)
    bool kernel_case_applicable = false;     // R(x) = 0
    bool kernel_case_ok = true;              // then rR(x) = 0
    bool invariant_closure_ok = true;        // rR(x) stays in L_R(x)
    bool ok() const { return commuting_case_ok && kernel_case_ok && invariant_closure_ok; }
};

SpecialCaseReport special_cases(const RBGroupOperator& op, const Vec& x);

}  // namespace rblie
