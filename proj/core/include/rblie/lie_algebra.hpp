#pragma once

#include "rblie/linalg.hpp"
#include "rblie/rational.hpp"

#include <limits>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace rblie {

class LieAlgebra;

// Element of a fixed Lie algebra, given by coordinates in its basis.
class LieElement {
public:
    LieElement(const LieAlgebra& home, Vec coords);

    const LieAlgebra& home() const { return *home_; }
    const Vec& coords() const { return coords_; }
    bool is_zero() const { return rblie::is_zero(coords_); }

    LieElement operator+(const LieElement& o) const;
    LieElement operator-(const LieElement& o) const;
    LieElement operator-() const;
    LieElement operator*(const Scalar& c) const;
    bool operator==(const LieElement& o) const;

private:
    const LieAlgebra* home_;
    Vec coords_;
};

struct ValidationReport {
    bool jacobi_ok = true;
    bool filtration_ok = true;
    // first failing basis triple / chain level pair, 1-based
    std::optional<std::array<int, 3>> jacobi_witness;
    std::optional<std::pair<int, int>> filtration_witness;
    bool ok() const { return jacobi_ok && filtration_ok; }
};

inline constexpr int kInfDegree = std::numeric_limits<int>::max();

// A finite-dimensional Lie algebra over Q given by structure constants,
// together with a descending filtration chain F_1 = g >= F_2 >= ...
// Immutable after construction.
class LieAlgebra {
public:
    // brackets: (i, j) with i < j (0-based) -> coordinates of [e_i, e_j].
    // The filtration defaults to the standard (lower central series) one.
    LieAlgebra(int dim, std::vector<std::string> labels,
               std::map<std::pair<int, int>, Vec> brackets);
    LieAlgebra(int dim, std::vector<std::string> labels,
               std::map<std::pair<int, int>, Vec> brackets,
               std::vector<Subspace> filtration);

    int dim() const { return dim_; }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::map<std::pair<int, int>, Vec>& structure_constants() const { return brackets_; }

    // F_1, F_2, ...; the last stored level of a nilpotent chain is {0}.
    const std::vector<Subspace>& filtration() const { return filtration_; }
    // Nilpotency class c (g^{c+1} = 0), or nullopt for non-nilpotent algebras.
    std::optional<int> nilpotency_class() const { return class_; }
    bool is_nilpotent() const { return class_.has_value(); }

    LieElement zero() const { return LieElement(*this, zero_vec(dim_)); }
    LieElement basis(int i) const { return LieElement(*this, unit_vec(dim_, i)); }
    LieElement element(Vec coords) const { return LieElement(*this, std::move(coords)); }

    Vec bracket_basis(int i, int j) const;  // any i, j
    Vec bracket(const Vec& x, const Vec& y) const;

    ValidationReport validate() const;

    // g = g^1 >= g^2 >= ... down to the first repeated (or zero) term.
    std::vector<Subspace> lower_central_series() const;

    // Largest n with x in F_n; kInfDegree exactly for x = 0.
    int filtration_degree(const Vec& x) const;

    bool operator==(const LieAlgebra& o) const {
        return dim_ == o.dim_ && brackets_ == o.brackets_;
    }

private:
    void init_filtration(std::vector<Subspace> filtration);

    int dim_;
    std::vector<std::string> labels_;
    std::map<std::pair<int, int>, Vec> brackets_;
    std::vector<Subspace> filtration_;
    std::optional<int> class_;
};

LieElement bracket(const LieElement& x, const LieElement& y);

// g tensor k[h]h / (h^{N+1}): basis e_i h^k for 1 <= k <= N, bracket
// [x h^i, y h^j] = [x,y] h^{i+j}. Nilpotent of class <= N for any input g.
LieAlgebra extend_by_polynomial_filtration(const LieAlgebra& g, int levels);

}  // namespace rblie
