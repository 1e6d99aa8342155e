#include "rblie/uea.hpp"

#include <stdexcept>

namespace rblie {

Scalar UEAElement::coeff(const PBWMonomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Scalar(0) : it->second;
}

void UEAElement::add_term(const PBWMonomial& m, const Scalar& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

static void check_same_ctx(const UEAElement& a, const UEAElement& b) {
    if (&a.ctx() != &b.ctx())
        throw std::invalid_argument("elements of different enveloping algebra contexts");
}

UEAElement UEAElement::operator+(const UEAElement& o) const {
    check_same_ctx(*this, o);
    UEAElement out = *this;
    for (const auto& [m, c] : o.terms_) out.add_term(m, c);
    return out;
}

UEAElement UEAElement::operator-(const UEAElement& o) const {
    check_same_ctx(*this, o);
    UEAElement out = *this;
    for (const auto& [m, c] : o.terms_) out.add_term(m, -c);
    return out;
}

UEAElement UEAElement::operator*(const Scalar& c) const {
    UEAElement out(*ctx_);
    if (c == 0) return out;
    for (const auto& [m, v] : terms_) out.add_term(m, v * c);
    return out;
}

bool UEAElement::operator==(const UEAElement& o) const { return terms_ == o.terms_; }

std::optional<Vec> UEAElement::primitive_part() const {
    Vec out = zero_vec(ctx_->algebra().dim());
    for (const auto& [m, c] : terms_) {
        if (m.size() != 1) return std::nullopt;
        out[m[0]] = c;
    }
    return out;
}

void TensorElement::add_term(const PBWMonomial& a, const PBWMonomial& b, const Scalar& c) {
    if (c == 0) return;
    Key k{a, b};
    auto [it, inserted] = terms_.emplace(std::move(k), c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

UEAContext::UEAContext(const LieAlgebra& g, std::optional<int> truncation) : g_(&g) {
    if (!g.is_nilpotent())
        throw std::invalid_argument("enveloping-algebra truncation requires a nilpotent algebra");
    n_ = truncation.value_or(*g.nilpotency_class());
    init();
}

UEAContext::UEAContext(const RBLieAlgebra& src, std::optional<int> truncation)
    : UEAContext(src.algebra(), truncation) {
    rb_ = src.rb();
}

void UEAContext::init() {
    if (n_ < 1) throw std::invalid_argument("truncation level must be >= 1");
    int d = g_->dim();
    for (int i = 0; i < d; ++i) {
        int deg = g_->filtration_degree(unit_vec(d, i));
        if (deg == kInfDegree)
            throw std::invalid_argument("zero basis vector");
        degrees_.push_back(deg);
    }
    // adapted-basis check: degree truncation must be an ideal
    for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < d; ++j) {
            Vec br = g_->bracket_basis(i, j);
            for (int k = 0; k < d; ++k)
                if (br[k] != 0 && degrees_[k] < degrees_[i] + degrees_[j])
                    throw std::invalid_argument(
                        "basis is not adapted to the filtration; bracket [" +
                        std::to_string(i + 1) + "," + std::to_string(j + 1) +
                        "] drops in degree");
        }
}

int UEAContext::monomial_degree(const PBWMonomial& m) const {
    int deg = 0;
    for (int i : m) deg += degrees_[i];
    return deg;
}

UEAElement UEAContext::one() const {
    UEAElement e(*this);
    e.add_term({}, Scalar(1));
    return e;
}

UEAElement UEAContext::generator(int i) const {
    UEAElement e(*this);
    if (degrees_[i] <= n_) e.add_term({i}, Scalar(1));
    return e;
}

UEAElement UEAContext::embed(const Vec& x) const {
    UEAElement e(*this);
    for (int i = 0; i < g_->dim(); ++i)
        if (x[i] != 0 && degrees_[i] <= n_) e.add_term({i}, x[i]);
    return e;
}

UEAElement UEAContext::embed(const LieElement& x) const { return embed(x.coords()); }

UEAElement UEAContext::straighten(const std::vector<int>& word, const Scalar& coeff) const {
    UEAElement out(*this);
    if (coeff == 0) return out;
    // worklist of (word, coefficient); each swap either sorts the word or
    // shortens it via the bracket
    std::vector<std::pair<std::vector<int>, Scalar>> work{{word, coeff}};
    while (!work.empty()) {
        auto [w, c] = std::move(work.back());
        work.pop_back();
        if (monomial_degree(w) > n_) continue;
        std::size_t pos = 0;
        while (pos + 1 < w.size() && w[pos] <= w[pos + 1]) ++pos;
        if (pos + 1 >= w.size()) {
            out.add_term(w, c);
            continue;
        }
        // x_j x_i -> x_i x_j + [x_j, x_i]
        std::vector<int> swapped = w;
        std::swap(swapped[pos], swapped[pos + 1]);
        Vec br = g_->bracket_basis(w[pos], w[pos + 1]);
        work.emplace_back(std::move(swapped), c);
        for (int k = 0; k < g_->dim(); ++k)
            if (br[k] != 0) {
                std::vector<int> shorter;
                shorter.reserve(w.size() - 1);
                shorter.insert(shorter.end(), w.begin(), w.begin() + pos);
                shorter.push_back(k);
                shorter.insert(shorter.end(), w.begin() + pos + 2, w.end());
                work.emplace_back(std::move(shorter), c * br[k]);
            }
    }
    return out;
}

UEAElement UEAContext::product(const UEAElement& a, const UEAElement& b) const {
    check_same_ctx(a, b);
    if (&a.ctx() != this) throw std::invalid_argument("context mismatch");
    UEAElement out(*this);
    for (const auto& [ma, ca] : a.terms())
        for (const auto& [mb, cb] : b.terms()) {
            if (monomial_degree(ma) + monomial_degree(mb) > n_) continue;
            std::vector<int> w = ma;
            w.insert(w.end(), mb.begin(), mb.end());
            out = out + straighten(w, ca * cb);
        }
    return out;
}

TensorElement UEAContext::coproduct(const UEAElement& a) const {
    TensorElement out(*this);
    for (const auto& [m, c] : a.terms()) {
        // Delta is multiplicative and each generator is primitive; since m is
        // weakly increasing, both tensor legs stay weakly increasing.
        std::map<TensorElement::Key, Scalar, TensorElement::KeyLess> acc{{{{}, {}}, c}};
        for (int letter : m) {
            std::map<TensorElement::Key, Scalar, TensorElement::KeyLess> next;
            for (const auto& [key, kc] : acc) {
                PBWMonomial left = key.first, right = key.second;
                left.push_back(letter);
                if (monomial_degree(left) + monomial_degree(key.second) <= n_)
                    next[{left, key.second}] += kc;
                right.push_back(letter);
                if (monomial_degree(key.first) + monomial_degree(right) <= n_)
                    next[{key.first, right}] += kc;
            }
            acc = std::move(next);
        }
        for (const auto& [key, kc] : acc) out.add_term(key.first, key.second, kc);
    }
    return out;
}

TensorElement UEAContext::outer(const UEAElement& a, const UEAElement& b) const {
    TensorElement out(*this);
    for (const auto& [ma, ca] : a.terms())
        for (const auto& [mb, cb] : b.terms())
            if (monomial_degree(ma) + monomial_degree(mb) <= n_)
                out.add_term(ma, mb, ca * cb);
    return out;
}

bool UEAContext::is_group_like(const UEAElement& u) const {
    if (u.counit() != 1) return false;
    return coproduct(u) == outer(u, u);
}

UEAElement UEAContext::exp(const Vec& x) const {
    UEAElement acc = one();
    UEAElement term = one();
    UEAElement xe = embed(x);
    for (int k = 1; k <= n_ && !term.is_zero(); ++k) {
        term = product(term, xe) * (Scalar(1) / k);
        acc = acc + term;
    }
    return acc;
}

Vec UEAContext::log(const UEAElement& u) const {
    if (!is_group_like(u))
        throw std::invalid_argument("log requires a group-like element");
    UEAElement z = u - one();
    UEAElement acc(*this);
    UEAElement pw = one();
    for (int k = 1; k <= n_ && !(pw = product(pw, z)).is_zero(); ++k)
        acc = acc + pw * (Scalar(k % 2 == 1 ? 1 : -1) / k);
    auto prim = acc.primitive_part();
    if (!prim)
        throw std::invalid_argument(
            "log has non-primitive residue; truncation level too small");
    return *prim;
}

UEAElement UEAContext::adjoint(const Vec& y, const UEAElement& a) const {
    UEAElement out(*this);
    for (const auto& [m, c] : a.terms())
        for (std::size_t j = 0; j < m.size(); ++j) {
            Vec br = g_->bracket(y, unit_vec(g_->dim(), m[j]));
            for (int k = 0; k < g_->dim(); ++k)
                if (br[k] != 0) {
                    std::vector<int> w = m;
                    w[j] = k;
                    out = out + straighten(w, c * br[k]);
                }
        }
    return out;
}

UEAElement UEAContext::lift_rb(const UEAElement& a) const {
    if (!rb_) throw std::invalid_argument("no Rota-Baxter operator attached");
    UEAElement out(*this);
    for (const auto& [m, c] : a.terms()) out = out + lift_rb_monomial(m) * c;
    return out;
}

UEAElement UEAContext::lift_rb_monomial(const PBWMonomial& m) const {
    auto it = lift_memo_.find(m);
    if (it != lift_memo_.end()) return it->second;
    UEAElement out(*this);
    if (m.empty()) {
        out = one();
    } else if (m.size() == 1) {
        out = embed(rb_->apply(unit_vec(g_->dim(), m[0])));
    } else {
        // R(x h) = R(x) R(h) - R([R(x), h]), x the leading generator; the
        // adjoint action preserves word length, so the recursion descends
        PBWMonomial h(m.begin() + 1, m.end());
        Vec rx = rb_->apply(unit_vec(g_->dim(), m[0]));
        UEAElement he(*this);
        he.add_term(h, Scalar(1));
        out = product(embed(rx), lift_rb_monomial(h));
        UEAElement ad = adjoint(rx, he);
        for (const auto& [mm, cc] : ad.terms())
            out = out - lift_rb_monomial(mm) * cc;
    }
    lift_memo_.emplace(m, out);
    return out;
}

UEAElement UEAContext::star_product(const UEAElement& a, const UEAElement& b) const {
    if (!rb_) throw std::invalid_argument("no Rota-Baxter operator attached");
    check_same_ctx(a, b);
    UEAElement out(*this);
    for (const auto& [m, c] : a.terms()) out = out + star_monomial(m, b) * c;
    return out;
}

UEAElement UEAContext::star_monomial(const PBWMonomial& m, const UEAElement& b) const {
    if (m.empty()) return b;
    // (x h) (star) b = x (star) (h (star) b) - [R(x), h] (star) b
    PBWMonomial h(m.begin() + 1, m.end());
    Vec rx = rb_->apply(unit_vec(g_->dim(), m[0]));
    UEAElement hb = star_monomial(h, b);
    // x (star) c = x c + [R(x), c]
    UEAElement out = product(generator(m[0]), hb) + adjoint(rx, hb);
    if (!h.empty()) {
        UEAElement he(*this);
        he.add_term(h, Scalar(1));
        UEAElement ad = adjoint(rx, he);
        for (const auto& [mm, cc] : ad.terms()) out = out - star_monomial(mm, b) * cc;
    }
    return out;
}

UEAElement UEAContext::exp_star(const Vec& x) const {
    UEAElement acc = one();
    UEAElement term = one();
    UEAElement xe = embed(x);
    for (int k = 1; k <= n_ && !term.is_zero(); ++k) {
        term = star_product(term, xe) * (Scalar(1) / k);
        acc = acc + term;
    }
    return acc;
}

Vec UEAContext::log_star(const UEAElement& u) const {
    if (!is_group_like(u))
        throw std::invalid_argument("log_star requires a group-like element");
    UEAElement z = u - one();
    UEAElement acc(*this);
    UEAElement pw = one();
    for (int k = 1; k <= n_ && !(pw = star_product(pw, z)).is_zero(); ++k)
        acc = acc + pw * (Scalar(k % 2 == 1 ? 1 : -1) / k);
    auto prim = acc.primitive_part();
    if (!prim)
        throw std::invalid_argument(
            "log_star has non-primitive residue; truncation level too small");
    return *prim;
}

}  // namespace rblie
