#include "rblie/graded.hpp"

#include <stdexcept>
#include <tuple>

namespace rblie {

FilteredGroup::FilteredGroup(const LieAlgebra& g) : plain_(BCHGroup(g)) {}
FilteredGroup::FilteredGroup(const RBLieAlgebra& src) : rb_(RBGroupOperator(src)) {}

namespace {

// Complement bases of F_{n+1} inside F_n for the whole chain.
std::vector<GradedComponent> complement_bases(const std::vector<Subspace>& chain) {
    std::vector<GradedComponent> comps;
    for (std::size_t n = 0; n < chain.size(); ++n) {
        Subspace below =
            n + 1 < chain.size() ? chain[n + 1] : Subspace(chain[n].ambient_dim());
        GradedComponent comp;
        comp.degree = static_cast<int>(n) + 1;
        Subspace extended = below;
        for (const auto& r : chain[n].rows()) {
            Vec residual = extended.reduce(r);
            if (!is_zero(residual) && extended.extend(residual))
                comp.basis.push_back(residual);
        }
        comps.push_back(std::move(comp));
    }
    while (!comps.empty() && comps.back().basis.empty()) comps.pop_back();
    return comps;
}

}  // namespace

const Vec& GradedLieRing::bracket(int n, int i, int m, int j) const {
    auto it = brackets_.find({n, i, m, j});
    return it == brackets_.end() ? zero_ : it->second;
}

const Mat* GradedLieRing::op(int n) const {
    if (op_.empty()) return nullptr;
    return &op_[n - 1];
}

Vec GradedLieRing::reduce(const Vec& x, int degree) const {
    std::size_t n = static_cast<std::size_t>(degree);
    if (n < 1 || n > components_.size()) {
        if (is_zero(x) || (n <= chain_.size() && chain_[n - 1].contains(x)))
            return {};
        throw std::invalid_argument("element outside the graded range");
    }
    const GradedComponent& comp = components_[n - 1];
    Mat rows = comp.basis;
    std::size_t k = rows.size();
    if (n < chain_.size())
        for (const auto& r : chain_[n].rows()) rows.push_back(r);
    auto coeffs = solve_in_span(rows, x);
    if (!coeffs) throw std::invalid_argument("element not in F_n");
    Vec out(k, Scalar(0));
    for (std::size_t i = 0; i < k; ++i) out[i] = (*coeffs)[i];
    return out;
}

Vec GradedLieRing::bracket_raw(int n, const Vec& a, int m, const Vec& b) const {
    Vec out = zero_vec(components_[n + m - 1].basis.size());
    const GradedComponent& cn = components_[n - 1];
    const GradedComponent& cm = components_[m - 1];
    for (std::size_t i = 0; i < cn.basis.size(); ++i)
        if (a[i] != 0)
            for (std::size_t j = 0; j < cm.basis.size(); ++j)
                if (b[j] != 0) {
                    const Vec& sc = bracket(n, static_cast<int>(i), m, static_cast<int>(j));
                    if (!sc.empty()) add_assign(out, scaled(sc, a[i] * b[j]));
                }
    return out;
}

ValidationReport GradedLieRing::validate() const {
    ValidationReport rep;
    int top = static_cast<int>(components_.size());
    // antisymmetry
    for (int n = 1; n <= top; ++n)
        for (int m = n; m <= top && n + m <= top; ++m)
            for (std::size_t i = 0; i < components_[n - 1].basis.size(); ++i)
                for (std::size_t j = 0; j < components_[m - 1].basis.size(); ++j) {
                    Vec a = bracket(n, static_cast<int>(i), m, static_cast<int>(j));
                    Vec b = bracket(m, static_cast<int>(j), n, static_cast<int>(i));
                    if (a.empty() && b.empty()) continue;
                    if (a.empty()) a = zero_vec(b.size());
                    if (b.empty()) b = zero_vec(a.size());
                    add_assign(a, b);
                    if (!is_zero(a)) {
                        rep.jacobi_ok = false;
                        rep.jacobi_witness = {n, m, 0};
                        return rep;
                    }
                }
    // Jacobi on component basis triples
    for (int n = 1; n <= top; ++n)
        for (int m = 1; m <= top; ++m)
            for (int l = 1; l <= top; ++l) {
                if (n + m + l > top) continue;
                for (std::size_t i = 0; i < components_[n - 1].basis.size(); ++i)
                    for (std::size_t j = 0; j < components_[m - 1].basis.size(); ++j)
                        for (std::size_t k = 0; k < components_[l - 1].basis.size(); ++k) {
                            Vec ei = unit_vec(components_[n - 1].basis.size(), i);
                            Vec ej = unit_vec(components_[m - 1].basis.size(), j);
                            Vec ek = unit_vec(components_[l - 1].basis.size(), k);
                            Vec s = bracket_raw(n, ei, m + l, bracket_raw(m, ej, l, ek));
                            add_assign(s, bracket_raw(m, ej, l + n, bracket_raw(l, ek, n, ei)));
                            add_assign(s, bracket_raw(l, ek, n + m, bracket_raw(n, ei, m, ej)));
                            if (!is_zero(s)) {
                                rep.jacobi_ok = false;
                                rep.jacobi_witness = {n, m, l};
                                return rep;
                            }
                        }
            }
    return rep;
}

bool GradedLieRing::rb_identity_holds() const {
    if (op_.empty()) return false;
    int top = static_cast<int>(components_.size());
    for (int n = 1; n <= top; ++n)
        for (int m = 1; m <= top; ++m) {
            std::size_t dn = components_[n - 1].basis.size();
            std::size_t dm = components_[m - 1].basis.size();
            for (std::size_t i = 0; i < dn; ++i)
                for (std::size_t j = 0; j < dm; ++j) {
                    Vec a = unit_vec(dn, i), b = unit_vec(dm, j);
                    Vec ra = mat_apply(op_[n - 1], a), rb = mat_apply(op_[m - 1], b);
                    if (n + m > top) continue;  // both sides land in zero
                    Vec lhs = bracket_raw(n, ra, m, rb);
                    Vec inner = bracket_raw(n, ra, m, b);
                    add_assign(inner, bracket_raw(n, a, m, rb));
                    add_assign(inner, bracket_raw(n, a, m, b));
                    Vec rhs = mat_apply(op_[n + m - 1], inner);
                    if (lhs != rhs) return false;
                }
        }
    return true;
}

namespace detail {

GradedLieRing build_graded(const std::vector<Subspace>& chain,
                           const std::function<Vec(const Vec&, const Vec&)>& commutator,
                           const std::function<Vec(const Vec&)>* op) {
    GradedLieRing ring;
    ring.chain_ = chain;
    ring.components_ = complement_bases(chain);
    int top = static_cast<int>(ring.components_.size());
    for (int n = 1; n <= top; ++n)
        for (int m = 1; m <= top; ++m) {
            if (n + m > top) continue;
            const auto& bn = ring.components_[n - 1].basis;
            const auto& bm = ring.components_[m - 1].basis;
            for (std::size_t i = 0; i < bn.size(); ++i)
                for (std::size_t j = 0; j < bm.size(); ++j) {
                    Vec c = commutator(bn[i], bm[j]);
                    Vec coords = ring.reduce(c, n + m);
                    if (!is_zero(coords))
                        ring.brackets_[{n, static_cast<int>(i), m, static_cast<int>(j)}] =
                            std::move(coords);
                }
        }
    if (op) {
        for (int n = 1; n <= top; ++n) {
            const auto& bn = ring.components_[n - 1].basis;
            Mat m(bn.size(), zero_vec(bn.size()));
            for (std::size_t j = 0; j < bn.size(); ++j) {
                Vec img = (*op)(bn[j]);
                Vec coords = ring.reduce(img, n);
                for (std::size_t i = 0; i < bn.size(); ++i) m[i][j] = coords[i];
            }
            ring.op_.push_back(std::move(m));
        }
    }
    return ring;
}

}  // namespace detail

using detail::build_graded;

GradedLieRing graded_ring(const FilteredGroup& G) {
    auto rep = G.algebra().validate();
    if (!rep.ok()) throw std::invalid_argument("filtration chain is invalid");
    return build_graded(
        G.chain(), [&G](const Vec& x, const Vec& y) { return G.commutator(x, y); },
        nullptr);
}

GradedLieRing graded_rb(const FilteredGroup& G) {
    if (!G.rb()) throw std::invalid_argument("filtered group carries no Rota-Baxter operator");
    std::function<Vec(const Vec&)> op = [&G](const Vec& x) { return G.rb()->apply(x); };
    return build_graded(
        G.chain(), [&G](const Vec& x, const Vec& y) { return G.commutator(x, y); }, &op);
}

GradedLieRing graded_algebra(const LieAlgebra& g, const LinearOperator* R) {
    std::function<Vec(const Vec&)> op;
    if (R) op = [R](const Vec& x) { return R->apply(x); };
    return build_graded(
        g.filtration(), [&g](const Vec& x, const Vec& y) { return g.bracket(x, y); },
        R ? &op : nullptr);
}

IsoReport verify_iso(const RBLieAlgebra& src) {
    IsoReport rep;
    FilteredGroup G(src);
    GradedLieRing group_side = graded_rb(G);
    GradedLieRing algebra_side = graded_algebra(src.algebra(), &src.rb());
    int top = static_cast<int>(group_side.components().size());
    if (top != static_cast<int>(algebra_side.components().size())) {
        rep.bracket_ok = false;
        rep.witness = "different number of graded components";
        return rep;
    }
    // Identical complement bases on both sides, so phi_n is the identity on
    // coordinates; intertwining means equal structure constants and matrices.
    for (int n = 1; n <= top; ++n)
        for (int m = 1; m <= top && n + m <= top; ++m)
            for (std::size_t i = 0; i < group_side.components()[n - 1].basis.size(); ++i)
                for (std::size_t j = 0; j < group_side.components()[m - 1].basis.size(); ++j) {
                    Vec a = group_side.bracket(n, static_cast<int>(i), m, static_cast<int>(j));
                    Vec b = algebra_side.bracket(n, static_cast<int>(i), m, static_cast<int>(j));
                    if (a.empty() && b.empty()) continue;
                    if (a.empty()) a = zero_vec(b.size());
                    if (b.empty()) b = zero_vec(a.size());
                    if (a != b) {
                        rep.bracket_ok = false;
                        rep.witness = "bracket mismatch at degrees (" + std::to_string(n) +
                                      "," + std::to_string(m) + ") basis (" +
                                      std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
                        return rep;
                    }
                }
    for (int n = 1; n <= top; ++n) {
        const Mat* a = group_side.op(n);
        const Mat* b = algebra_side.op(n);
        if (*a != *b) {
            rep.operator_ok = false;
            rep.witness = "operator mismatch on gr_" + std::to_string(n);
            return rep;
        }
    }
    return rep;
}

}  // namespace rblie
