#pragma once

#include "rblie/rational.hpp"

#include <optional>

namespace rblie {

// A subspace of Q^dim given by a basis in reduced row echelon form.
// Pivot selection is first nonzero column; output is deterministic.
class Subspace {
public:
    Subspace() = default;
    explicit Subspace(std::size_t ambient_dim) : dim_(ambient_dim) {}

    // Echelon-reduces the spanning set; drops dependent rows.
    static Subspace span(std::size_t ambient_dim, const Mat& spanning_rows);

    static Subspace full(std::size_t ambient_dim);

    std::size_t ambient_dim() const { return dim_; }
    std::size_t rank() const { return rows_.size(); }
    bool is_zero() const { return rows_.empty(); }
    const Mat& rows() const { return rows_; }

    bool contains(const Vec& v) const;
    bool contains(const Subspace& other) const;
    bool operator==(const Subspace& other) const { return rows_ == other.rows_; }

    // Residual of v after subtracting the pivot rows; zero iff v is a member.
    Vec reduce(const Vec& v) const;

    // Adds v to the basis if independent; returns true if the rank grew.
    bool extend(const Vec& v);

private:
    std::size_t dim_ = 0;
    Mat rows_;                      // reduced echelon basis
    std::vector<std::size_t> pivots_;  // pivot column of each row
};

// Coefficients c with sum c_i rows[i] = target, if target lies in the span.
std::optional<Vec> solve_in_span(const Mat& rows, const Vec& target);

// Matrix utilities over Scalar (square matrices as row-major Mat).
Vec mat_apply(const Mat& m, const Vec& v);
Mat mat_mul(const Mat& a, const Mat& b);
std::optional<Mat> mat_inverse(const Mat& m);
Mat mat_identity(std::size_t n);

}  // namespace rblie
