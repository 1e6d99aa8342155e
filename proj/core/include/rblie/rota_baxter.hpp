#pragma once

#include "rblie/lie_algebra.hpp"

#include <optional>
#include <variant>

namespace rblie {

// Linear map on the coordinates of a fixed Lie algebra; coeffs[i][j] is the
// e_i-coefficient of the image of e_j.
class LinearOperator {
public:
    LinearOperator(const LieAlgebra& home, Mat coeffs);

    static LinearOperator zero(const LieAlgebra& home);
    static LinearOperator identity(const LieAlgebra& home);
    static LinearOperator scalar(const LieAlgebra& home, const Scalar& c);

    const LieAlgebra& home() const { return *home_; }
    const Mat& coeffs() const { return coeffs_; }

    Vec apply(const Vec& x) const { return mat_apply(coeffs_, x); }
    LieElement apply(const LieElement& x) const;

    LinearOperator compose(const LinearOperator& inner) const;
    std::optional<LinearOperator> inverse() const;

    bool preserves_filtration() const;
    bool is_automorphism() const;  // invertible, bracket- and chain-preserving

private:
    const LieAlgebra* home_;
    Mat coeffs_;
};

struct RBWitness {
    int i = 0, j = 0;  // 1-based failing basis pair
};

// pass -> nullopt; fail -> witness pair.
std::optional<RBWitness> verify_rb_weight1(const LieAlgebra& g, const LinearOperator& R);

// A filtered Lie algebra together with a weight-1 Rota-Baxter operator that
// preserves the filtration chain. Both conditions are checked on construction.
class RBLieAlgebra {
public:
    RBLieAlgebra(const LieAlgebra& algebra, LinearOperator rb);

    const LieAlgebra& algebra() const { return *algebra_; }
    const LinearOperator& rb() const { return rb_; }

private:
    const LieAlgebra* algebra_;
    LinearOperator rb_;
};

// Descendant algebra g_R: same space and filtration, bracket
// [x,y]_R = [R(x),y] + [x,R(y)] + [x,y].
LieAlgebra descendant(const RBLieAlgebra& src);

// Q = phi^{-1} R phi for a filtered automorphism phi.
LinearOperator conjugate(const LinearOperator& R, const LinearOperator& phi);

// Smallest subspace containing x that is closed under bracket and under R.
Subspace minimal_invariant_subalgebra(const RBLieAlgebra& src, const Vec& x);

// R(a + b) = -b for a direct sum decomposition g = A (+) B into subalgebras.
LinearOperator splitting_rb(const LieAlgebra& g, const Subspace& a, const Subspace& b);

bool is_subalgebra(const LieAlgebra& g, const Subspace& s);

}  // namespace rblie
