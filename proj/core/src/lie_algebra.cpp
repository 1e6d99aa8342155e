#include "rblie/lie_algebra.hpp"

#include <stdexcept>

namespace rblie {

LieElement::LieElement(const LieAlgebra& home, Vec coords)
    : home_(&home), coords_(std::move(coords)) {
    if (coords_.size() != static_cast<std::size_t>(home.dim()))
        throw std::invalid_argument("coordinate vector has wrong length");
}

static void check_same_home(const LieElement& a, const LieElement& b) {
    if (!(a.home() == b.home()))
        throw std::invalid_argument("elements of different Lie algebras");
}

LieElement LieElement::operator+(const LieElement& o) const {
    check_same_home(*this, o);
    Vec c = coords_;
    add_assign(c, o.coords_);
    return LieElement(*home_, std::move(c));
}

LieElement LieElement::operator-(const LieElement& o) const {
    check_same_home(*this, o);
    Vec c = coords_;
    sub_assign(c, o.coords_);
    return LieElement(*home_, std::move(c));
}

LieElement LieElement::operator-() const {
    return LieElement(*home_, scaled(coords_, Scalar(-1)));
}

LieElement LieElement::operator*(const Scalar& c) const {
    return LieElement(*home_, scaled(coords_, c));
}

bool LieElement::operator==(const LieElement& o) const {
    return home_ == o.home_ && coords_ == o.coords_;
}

LieAlgebra::LieAlgebra(int dim, std::vector<std::string> labels,
                       std::map<std::pair<int, int>, Vec> brackets)
    : LieAlgebra(dim, std::move(labels), std::move(brackets), {}) {}

LieAlgebra::LieAlgebra(int dim, std::vector<std::string> labels,
                       std::map<std::pair<int, int>, Vec> brackets,
                       std::vector<Subspace> filtration)
    : dim_(dim), labels_(std::move(labels)), brackets_(std::move(brackets)) {
    if (dim <= 0) throw std::invalid_argument("dimension must be positive");
    if (labels_.empty())
        for (int i = 0; i < dim; ++i) labels_.push_back("e" + std::to_string(i + 1));
    if (labels_.size() != static_cast<std::size_t>(dim))
        throw std::invalid_argument("label count does not match dimension");
    for (const auto& [ij, v] : brackets_) {
        auto [i, j] = ij;
        if (i < 0 || j <= i || j >= dim)
            throw std::invalid_argument("bracket key must satisfy 0 <= i < j < dim");
        if (v.size() != static_cast<std::size_t>(dim))
            throw std::invalid_argument("bracket value has wrong length");
    }
    init_filtration(std::move(filtration));
}

void LieAlgebra::init_filtration(std::vector<Subspace> filtration) {
    auto series = lower_central_series();
    if (series.back().is_zero()) class_ = static_cast<int>(series.size()) - 1;
    if (filtration.empty()) {
        filtration_ = std::move(series);
    } else {
        if (!(filtration.front() == Subspace::full(dim_)))
            throw std::invalid_argument("F_1 must be the whole algebra");
        filtration_ = std::move(filtration);
    }
}

Vec LieAlgebra::bracket_basis(int i, int j) const {
    if (i == j) return zero_vec(dim_);
    if (i > j) return scaled(bracket_basis(j, i), Scalar(-1));
    auto it = brackets_.find({i, j});
    if (it == brackets_.end()) return zero_vec(dim_);
    return it->second;
}

Vec LieAlgebra::bracket(const Vec& x, const Vec& y) const {
    Vec out = zero_vec(dim_);
    for (const auto& [ij, v] : brackets_) {
        auto [i, j] = ij;
        Scalar c = x[i] * y[j] - x[j] * y[i];
        if (c != 0) add_assign(out, scaled(v, c));
    }
    return out;
}

LieElement bracket(const LieElement& x, const LieElement& y) {
    if (!(x.home() == y.home()))
        throw std::invalid_argument("elements of different Lie algebras");
    return x.home().element(x.home().bracket(x.coords(), y.coords()));
}

ValidationReport LieAlgebra::validate() const {
    ValidationReport rep;
    for (int i = 0; i < dim_ && rep.jacobi_ok; ++i)
        for (int j = i + 1; j < dim_ && rep.jacobi_ok; ++j)
            for (int k = j + 1; k < dim_; ++k) {
                Vec s = bracket(unit_vec(dim_, i), bracket_basis(j, k));
                add_assign(s, bracket(unit_vec(dim_, j), bracket_basis(k, i)));
                add_assign(s, bracket(unit_vec(dim_, k), bracket_basis(i, j)));
                if (!is_zero(s)) {
                    rep.jacobi_ok = false;
                    rep.jacobi_witness = {i + 1, j + 1, k + 1};
                    break;
                }
            }
    std::size_t levels = filtration_.size();
    for (std::size_t n = 0; n + 1 <= levels && rep.filtration_ok; ++n) {
        if (n + 1 < levels && !filtration_[n].contains(filtration_[n + 1])) {
            rep.filtration_ok = false;
            rep.filtration_witness = {static_cast<int>(n + 1), static_cast<int>(n + 2)};
            break;
        }
        for (std::size_t m = n; m < levels; ++m) {
            // [F_{n+1}, F_{m+1}] must lie in F_{n+m+2} ({0} past the chain end)
            std::size_t target = n + m + 1;
            const Subspace* tgt = target < levels ? &filtration_[target] : nullptr;
            bool past_end_zero = filtration_.back().is_zero();
            for (const auto& a : filtration_[n].rows())
                for (const auto& b : filtration_[m].rows()) {
                    Vec br = bracket(a, b);
                    bool ok = tgt ? tgt->contains(br)
                                  : (past_end_zero ? is_zero(br)
                                                   : filtration_.back().contains(br));
                    if (!ok) {
                        rep.filtration_ok = false;
                        rep.filtration_witness = {static_cast<int>(n + 1),
                                                  static_cast<int>(m + 1)};
                        break;
                    }
                }
            if (!rep.filtration_ok) break;
        }
    }
    return rep;
}

std::vector<Subspace> LieAlgebra::lower_central_series() const {
    std::vector<Subspace> series{Subspace::full(dim_)};
    while (true) {
        const Subspace& prev = series.back();
        Subspace next(dim_);
        for (int i = 0; i < dim_; ++i)
            for (const auto& r : prev.rows()) next.extend(bracket(unit_vec(dim_, i), r));
        if (next == prev) break;  // stable, not nilpotent below this level
        bool zero = next.is_zero();
        series.push_back(std::move(next));
        if (zero) break;
    }
    return series;
}

int LieAlgebra::filtration_degree(const Vec& x) const {
    if (is_zero(x)) return kInfDegree;
    int deg = 0;
    for (std::size_t n = 0; n < filtration_.size(); ++n) {
        if (filtration_[n].contains(x))
            deg = static_cast<int>(n) + 1;
        else
            break;
    }
    return deg;
}

LieAlgebra extend_by_polynomial_filtration(const LieAlgebra& g, int levels) {
    if (levels < 1) throw std::invalid_argument("levels must be >= 1");
    int d = g.dim();
    int dim = d * levels;
    auto idx = [d](int i, int k) { return (k - 1) * d + i; };  // e_i h^k, k = 1..levels
    std::vector<std::string> labels;
    for (int k = 1; k <= levels; ++k)
        for (int i = 0; i < d; ++i) labels.push_back(g.labels()[i] + "*h^" + std::to_string(k));
    std::map<std::pair<int, int>, Vec> brackets;
    for (int k = 1; k <= levels; ++k)
        for (int l = k; l <= levels; ++l) {
            if (k + l > levels) continue;
            for (int i = 0; i < d; ++i)
                for (int j = (k == l ? i + 1 : 0); j < d; ++j) {
                    Vec br = g.bracket_basis(i, j);
                    if (is_zero(br)) continue;
                    Vec v = zero_vec(dim);
                    for (int t = 0; t < d; ++t) v[idx(t, k + l)] = br[t];
                    int a = idx(i, k), b = idx(j, l);
                    if (a < b)
                        brackets[{a, b}] = std::move(v);
                    else
                        brackets[{b, a}] = scaled(v, Scalar(-1));
                }
        }
    // h-degree filtration F_k = g h^k + ... + g h^levels
    std::vector<Subspace> chain;
    for (int k = 1; k <= levels + 1; ++k) {
        Mat rows;
        for (int l = k; l <= levels; ++l)
            for (int i = 0; i < d; ++i) rows.push_back(unit_vec(dim, idx(i, l)));
        chain.push_back(Subspace::span(dim, rows));
    }
    return LieAlgebra(dim, std::move(labels), std::move(brackets), std::move(chain));
}

}  // namespace rblie
