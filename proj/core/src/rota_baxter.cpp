#include "rblie/rota_baxter.hpp"

#include <stdexcept>

namespace rblie {

LinearOperator::LinearOperator(const LieAlgebra& home, Mat coeffs)
    : home_(&home), coeffs_(std::move(coeffs)) {
    std::size_t d = home.dim();
    if (coeffs_.size() != d)
        throw std::invalid_argument("operator shape does not match algebra");
    for (const auto& row : coeffs_)
        if (row.size() != d)
            throw std::invalid_argument("operator shape does not match algebra");
}

LinearOperator LinearOperator::zero(const LieAlgebra& home) {
    return LinearOperator(home, Mat(home.dim(), zero_vec(home.dim())));
}

LinearOperator LinearOperator::identity(const LieAlgebra& home) {
    return LinearOperator(home, mat_identity(home.dim()));
}

LinearOperator LinearOperator::scalar(const LieAlgebra& home, const Scalar& c) {
    Mat m = mat_identity(home.dim());
    for (std::size_t i = 0; i < m.size(); ++i) m[i][i] = c;
    return LinearOperator(home, std::move(m));
}

LieElement LinearOperator::apply(const LieElement& x) const {
    if (!(x.home() == *home_))
        throw std::invalid_argument("element from a different algebra");
    return home_->element(apply(x.coords()));
}

LinearOperator LinearOperator::compose(const LinearOperator& inner) const {
    return LinearOperator(*home_, mat_mul(coeffs_, inner.coeffs_));
}

std::optional<LinearOperator> LinearOperator::inverse() const {
    auto inv = mat_inverse(coeffs_);
    if (!inv) return std::nullopt;
    return LinearOperator(*home_, std::move(*inv));
}

bool LinearOperator::preserves_filtration() const {
    for (const auto& level : home_->filtration())
        for (const auto& r : level.rows())
            if (!level.contains(apply(r))) return false;
    return true;
}

bool LinearOperator::is_automorphism() const {
    if (!inverse()) return false;
    if (!preserves_filtration()) return false;
    int d = home_->dim();
    for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < d; ++j) {
            Vec lhs = home_->bracket(apply(unit_vec(d, i)), apply(unit_vec(d, j)));
            Vec rhs = apply(home_->bracket_basis(i, j));
            if (lhs != rhs) return false;
        }
    return true;
}

std::optional<RBWitness> verify_rb_weight1(const LieAlgebra& g, const LinearOperator& R) {
    int d = g.dim();
    for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < d; ++j) {
            Vec x = unit_vec(d, i), y = unit_vec(d, j);
            Vec rx = R.apply(x), ry = R.apply(y);
            Vec lhs = g.bracket(rx, ry);
            Vec inner = g.bracket(rx, y);
            add_assign(inner, g.bracket(x, ry));
            add_assign(inner, g.bracket_basis(i, j));
            Vec rhs = R.apply(inner);
            if (lhs != rhs) return RBWitness{i + 1, j + 1};
        }
    return std::nullopt;
}

RBLieAlgebra::RBLieAlgebra(const LieAlgebra& algebra, LinearOperator rb)
    : algebra_(&algebra), rb_(std::move(rb)) {
    if (!(rb_.home() == algebra))
        throw std::invalid_argument("operator acts on a different algebra");
    if (auto w = verify_rb_weight1(algebra, rb_))
        throw std::invalid_argument("not a Rota-Baxter operator; failing basis pair (" +
                                    std::to_string(w->i) + "," + std::to_string(w->j) + ")");
    if (!rb_.preserves_filtration())
        throw std::invalid_argument("operator does not preserve the filtration chain");
}

LieAlgebra descendant(const RBLieAlgebra& src) {
    const LieAlgebra& g = src.algebra();
    int d = g.dim();
    std::map<std::pair<int, int>, Vec> brackets;
    for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < d; ++j) {
            Vec x = unit_vec(d, i), y = unit_vec(d, j);
            Vec v = g.bracket(src.rb().apply(x), y);
            add_assign(v, g.bracket(x, src.rb().apply(y)));
            add_assign(v, g.bracket_basis(i, j));
            if (!is_zero(v)) brackets[{i, j}] = std::move(v);
        }
    std::vector<std::string> labels = g.labels();
    return LieAlgebra(d, std::move(labels), std::move(brackets), g.filtration());
}

LinearOperator conjugate(const LinearOperator& R, const LinearOperator& phi) {
    if (!(R.home() == phi.home()))
        throw std::invalid_argument("operators on different algebras");
    if (!phi.is_automorphism())
        throw std::invalid_argument("phi is not a filtered Lie algebra automorphism");
    auto phi_inv = phi.inverse();
    return phi_inv->compose(R.compose(phi));
}

Subspace minimal_invariant_subalgebra(const RBLieAlgebra& src, const Vec& x) {
    const LieAlgebra& g = src.algebra();
    Subspace s(g.dim());
    s.extend(x);
    // each round either grows the dimension or reaches the fixed point
    for (int round = 0; round <= g.dim(); ++round) {
        Mat rows = s.rows();
        bool grew = false;
        for (const auto& r : rows) grew |= s.extend(src.rb().apply(r));
        for (std::size_t i = 0; i < rows.size(); ++i)
            for (std::size_t j = i + 1; j < rows.size(); ++j)
                grew |= s.extend(g.bracket(rows[i], rows[j]));
        if (!grew) break;
    }
    return s;
}

bool is_subalgebra(const LieAlgebra& g, const Subspace& s) {
    const Mat& rows = s.rows();
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = i + 1; j < rows.size(); ++j)
            if (!s.contains(g.bracket(rows[i], rows[j]))) return false;
    return true;
}

LinearOperator splitting_rb(const LieAlgebra& g, const Subspace& a, const Subspace& b) {
    if (a.rank() + b.rank() != static_cast<std::size_t>(g.dim()))
        throw std::invalid_argument("A and B do not form a direct sum");
    if (!is_subalgebra(g, a) || !is_subalgebra(g, b))
        throw std::invalid_argument("A or B is not a subalgebra");
    Mat rows = a.rows();
    for (const auto& r : b.rows()) rows.push_back(r);
    int d = g.dim();
    Mat cols(d, zero_vec(d));  // images of basis vectors, column-wise in cols[j]
    for (int j = 0; j < d; ++j) {
        auto coeffs = solve_in_span(rows, unit_vec(d, j));
        if (!coeffs) throw std::invalid_argument("A and B do not span the algebra");
        // R(a + b) = -b
        Vec img = zero_vec(d);
        for (std::size_t k = a.rank(); k < rows.size(); ++k)
            if ((*coeffs)[k] != 0) add_assign(img, scaled(rows[k], -(*coeffs)[k]));
        cols[j] = std::move(img);
    }
    Mat m(d, zero_vec(d));
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) m[i][j] = cols[j][i];
    return LinearOperator(g, std::move(m));
}

}  // namespace rblie
