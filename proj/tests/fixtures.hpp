#pragma once

#include "rblie/free_lie.hpp"
#include "rblie/rota_baxter.hpp"

#include <map>
#include <string>
#include <vector>

namespace fx {

using namespace rblie;

// [e1, e2] = e3, everything else zero; class 2.
inline LieAlgebra heisenberg() {
    std::map<std::pair<int, int>, Vec> br;
    br[{0, 1}] = Vec{Scalar(0), Scalar(0), Scalar(1)};
    return LieAlgebra(3, {"e1", "e2", "e3"}, std::move(br));
}

// R(e1) = e2, R(e2) = e1, R(e3) = -e3: a weight-1 Rota-Baxter operator on
// the Heisenberg algebra.
inline LinearOperator heisenberg_r(const LieAlgebra& g) {
    Mat m = {{Scalar(0), Scalar(1), Scalar(0)},
             {Scalar(1), Scalar(0), Scalar(0)},
             {Scalar(0), Scalar(0), Scalar(-1)}};
    return LinearOperator(g, std::move(m));
}

// The golden closed form of the integrated operator for heisenberg_r.
inline Vec heisenberg_golden(const Vec& x) {
    const Scalar &a = x[0], &b = x[1], &c = x[2];
    return Vec{b, a, (b * b - a * a - 2 * c) / 2};
}

// Filiform algebra of class `cls` on cls+1 basis vectors: [e1, e_i] = e_{i+1}
// for 2 <= i <= cls.
inline LieAlgebra filiform(int cls) {
    int dim = cls + 1;
    std::map<std::pair<int, int>, Vec> br;
    std::vector<std::string> labels;
    for (int i = 0; i < dim; ++i) labels.push_back("e" + std::to_string(i + 1));
    for (int i = 1; i < dim - 1; ++i) br[{0, i}] = unit_vec(dim, i + 1);
    return LieAlgebra(dim, std::move(labels), std::move(br));
}

inline LieAlgebra abelian(int dim) {
    std::vector<std::string> labels;
    for (int i = 0; i < dim; ++i) labels.push_back("e" + std::to_string(i + 1));
    return LieAlgebra(dim, std::move(labels), {});
}

// Splitting operator for g = span{e1} (+) span{e2, ..., e_dim}; both summands
// are subalgebras in every fixture above and in the free nilpotent algebras.
inline LinearOperator split_first(const LieAlgebra& g) {
    Mat a = {unit_vec(g.dim(), 0)};
    Mat b;
    for (int i = 1; i < g.dim(); ++i) b.push_back(unit_vec(g.dim(), i));
    return splitting_rb(g, Subspace::span(g.dim(), a), Subspace::span(g.dim(), b));
}

}  // namespace fx
