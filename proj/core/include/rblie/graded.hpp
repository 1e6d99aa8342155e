#pragma once

#include "rblie/group_rb.hpp"

#include <functional>
#include <optional>
#include <vector>

namespace rblie {

class GradedLieRing;

namespace detail {
GradedLieRing build_graded(const std::vector<Subspace>& chain,
                           const std::function<Vec(const Vec&, const Vec&)>& commutator,
                           const std::function<Vec(const Vec&)>* op);
}

// BCH group of a nilpotent filtered algebra together with its filtration
// chain and, optionally, the integrated Rota-Baxter operator.
class FilteredGroup {
public:
    explicit FilteredGroup(const LieAlgebra& g);
    explicit FilteredGroup(const RBLieAlgebra& src);

    const BCHGroup& group() const { return rb_ ? rb_->group() : *plain_; }
    const LieAlgebra& algebra() const { return group().algebra(); }
    const std::vector<Subspace>& chain() const { return algebra().filtration(); }
    const RBGroupOperator* rb() const { return rb_ ? &*rb_ : nullptr; }

    Vec commutator(const Vec& x, const Vec& y) const { return group().commutator(x, y); }

private:
    std::optional<BCHGroup> plain_;
    std::optional<RBGroupOperator> rb_;
};

// gr_n = F_n / F_{n+1}, realized by an echelon-reduced complement basis of
// F_{n+1} inside F_n; brackets are stored as structure constants between
// component bases, the operator as one matrix per component.
struct GradedComponent {
    int degree = 0;
    Mat basis;  // representatives in the ambient coordinates
};

class GradedLieRing {
public:
    const std::vector<GradedComponent>& components() const { return components_; }

    // coordinates of [b_i^(n), b_j^(m)] in gr_{n+m} (empty component -> zero)
    const Vec& bracket(int n, int i, int m, int j) const;
    // operator matrix on gr_n: column j = image of b_j^(n)
    const Mat* op(int n) const;
    bool has_op() const { return !op_.empty(); }

    // degree and gr_n-coordinates of a homogeneous representative x in F_n
    Vec reduce(const Vec& x, int degree) const;

    ValidationReport validate() const;  // Jacobi + antisymmetry on components
    bool rb_identity_holds() const;     // Lie-ring Rota-Baxter law on basis pairs

private:
    friend GradedLieRing detail::build_graded(
        const std::vector<Subspace>&, const std::function<Vec(const Vec&, const Vec&)>&,
        const std::function<Vec(const Vec&)>*);

    Vec bracket_raw(int n, const Vec& a, int m, const Vec& b) const;

    std::vector<GradedComponent> components_;
    std::vector<Subspace> chain_;  // F_1 .. F_{L}
    std::map<std::tuple<int, int, int, int>, Vec> brackets_;
    std::vector<Mat> op_;  // per component, empty when no operator
    Vec zero_;
};

// Graded Lie ring of a filtered group, bracket induced by group commutators.
GradedLieRing graded_ring(const FilteredGroup& G);

// Same, with the induced graded Rota-Baxter operator; requires G.rb().
GradedLieRing graded_rb(const FilteredGroup& G);

// The Lie-algebra side of the comparison: same complement bases, bracket from
// the Lie bracket, operator from R itself.
GradedLieRing graded_algebra(const LieAlgebra& g, const LinearOperator* R);

struct IsoReport {
    bool bracket_ok = true;
    bool operator_ok = true;
    std::optional<std::string> witness;
    bool ok() const { return bracket_ok && operator_ok; }
};

// Checks that the identity on representatives intertwines the graded
// structures built from (g, *) and from (g, [.,.]), including the operators.
IsoReport verify_iso(const RBLieAlgebra& src);

}  // namespace rblie
