#pragma once

#include "rblie/rota_baxter.hpp"

#include <map>
#include <optional>
#include <vector>

namespace rblie {

// PBW monomial: weakly increasing sequence of basis indices (empty = unit).
using PBWMonomial = std::vector<int>;

// Canonical order: length first, then lexicographic.
struct MonomialLess {
    bool operator()(const PBWMonomial& a, const PBWMonomial& b) const {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    }
};

class UEAContext;

// Sparse element of the truncated enveloping algebra U(g)/F_{N+1}U(g).
// Zero coefficients are never stored.
class UEAElement {
public:
    explicit UEAElement(const UEAContext& ctx) : ctx_(&ctx) {}

    const UEAContext& ctx() const { return *ctx_; }
    const std::map<PBWMonomial, Scalar, MonomialLess>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    Scalar coeff(const PBWMonomial& m) const;
    Scalar counit() const { return coeff({}); }

    void add_term(const PBWMonomial& m, const Scalar& c);

    UEAElement operator+(const UEAElement& o) const;
    UEAElement operator-(const UEAElement& o) const;
    UEAElement operator*(const Scalar& c) const;
    bool operator==(const UEAElement& o) const;

    // nullopt if any monomial of length != 1 has a nonzero coefficient.
    std::optional<Vec> primitive_part() const;

private:
    const UEAContext* ctx_;
    std::map<PBWMonomial, Scalar, MonomialLess> terms_;
};

// Element of the truncated U(g) (x) U(g), for coproduct values.
class TensorElement {
public:
    explicit TensorElement(const UEAContext& ctx) : ctx_(&ctx) {}

    using Key = std::pair<PBWMonomial, PBWMonomial>;
    struct KeyLess {
        bool operator()(const Key& a, const Key& b) const {
            MonomialLess less;
            if (less(a.first, b.first)) return true;
            if (less(b.first, a.first)) return false;
            return less(a.second, b.second);
        }
    };

    const std::map<Key, Scalar, KeyLess>& terms() const { return terms_; }
    void add_term(const PBWMonomial& a, const PBWMonomial& b, const Scalar& c);
    bool operator==(const TensorElement& o) const { return terms_ == o.terms_; }

private:
    const UEAContext* ctx_;
    std::map<Key, Scalar, KeyLess> terms_;
};

// Truncated filtered enveloping algebra of a nilpotent filtered Lie algebra,
// working modulo F_{N+1}U(g). N defaults to the nilpotency class. Requires
// the basis to be adapted to the filtration: every component of [e_i, e_j]
// must have degree >= deg(e_i) + deg(e_j), so that degree truncation is an
// algebra ideal.
class UEAContext {
public:
    explicit UEAContext(const LieAlgebra& g, std::optional<int> truncation = std::nullopt);
    UEAContext(const RBLieAlgebra& src, std::optional<int> truncation = std::nullopt);

    const LieAlgebra& algebra() const { return *g_; }
    int truncation() const { return n_; }
    int basis_degree(int i) const { return degrees_[i]; }
    int monomial_degree(const PBWMonomial& m) const;
    const LinearOperator* rb() const { return rb_ ? &*rb_ : nullptr; }

    UEAElement one() const;
    UEAElement generator(int i) const;
    UEAElement embed(const Vec& x) const;           // g -> U(g)
    UEAElement embed(const LieElement& x) const;

    // PBW straightening of an arbitrary word, truncated at degree N.
    UEAElement straighten(const std::vector<int>& word, const Scalar& coeff) const;

    UEAElement product(const UEAElement& a, const UEAElement& b) const;

    TensorElement coproduct(const UEAElement& a) const;
    TensorElement outer(const UEAElement& a, const UEAElement& b) const;  // a (x) b
    bool is_group_like(const UEAElement& u) const;

    UEAElement exp(const Vec& x) const;
    // Throws if u is not group-like or log has non-primitive residue.
    Vec log(const UEAElement& u) const;

    // Hopf lift of the attached Rota-Baxter operator (coalgebra map).
    UEAElement lift_rb(const UEAElement& a) const;

    // Product of U(g_R) transported to U(g): x (star) h = xh + [R(x), h].
    UEAElement star_product(const UEAElement& a, const UEAElement& b) const;
    UEAElement exp_star(const Vec& x) const;
    Vec log_star(const UEAElement& u) const;

    // Derivation action of ad(y) on a, for y in g.
    UEAElement adjoint(const Vec& y, const UEAElement& a) const;

private:
    void init();
    UEAElement lift_rb_monomial(const PBWMonomial& m) const;
    UEAElement star_monomial(const PBWMonomial& m, const UEAElement& b) const;

    const LieAlgebra* g_;
    int n_;
    std::vector<int> degrees_;
    std::optional<LinearOperator> rb_;
    // lift values per monomial are fixed for the lifetime of the context
    mutable std::map<PBWMonomial, UEAElement, MonomialLess> lift_memo_;
};

}  // namespace rblie
