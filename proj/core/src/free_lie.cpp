#include "rblie/free_lie.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace rblie {

namespace {

struct HallTree {
    int left = -1;   // index into arena, -1 for generators
    int right = -1;
    int gen = -1;    // generator number for leaves
    int degree = 1;
    std::string repr;
};

// Hall trees ordered by degree, then lexicographically on the canonical
// string; arena indices are assigned in that order, so index order is the
// Hall order. A compound (u, v) is Hall iff u < v and v is a generator or
// v.left <= u.
class HallBasis {
public:
    HallBasis(int generators, int nil_class, int dim_cap) : nil_class_(nil_class) {
        std::vector<std::vector<int>> by_degree(nil_class + 1);
        for (int g = 0; g < generators; ++g) {
            HallTree t;
            t.gen = g;
            t.repr = "x" + std::to_string(g + 1);
            by_degree[1].push_back(add(t));
        }
        for (int n = 2; n <= nil_class; ++n) {
            std::vector<std::pair<std::string, HallTree>> candidates;
            for (int dl = 1; dl < n; ++dl) {
                for (int u : by_degree[dl])
                    for (int v : by_degree[n - dl]) {
                        if (!(u < v)) continue;
                        if (arena_[v].left != -1 && arena_[v].left > u) continue;
                        HallTree t;
                        t.left = u;
                        t.right = v;
                        t.degree = n;
                        t.repr = "[" + arena_[u].repr + "," + arena_[v].repr + "]";
                        candidates.emplace_back(t.repr, std::move(t));
                    }
            }
            std::sort(candidates.begin(), candidates.end(),
                      [](const auto& a, const auto& b) { return a.first < b.first; });
            for (auto& [_, t] : candidates) by_degree[n].push_back(add(t));
            if (static_cast<int>(arena_.size()) > dim_cap)
                throw std::invalid_argument("free nilpotent dimension exceeds cap");
        }
    }

    int size() const { return static_cast<int>(arena_.size()); }
    const HallTree& tree(int i) const { return arena_[i]; }

    // [t_i, t_j] expressed in the Hall basis (degree > class truncated to 0).
    Vec rewrite(int i, int j) {
        Vec out = zero_vec(arena_.size());
        rewrite_into(i, j, Scalar(1), out);
        return out;
    }

private:
    int add(const HallTree& t) {
        arena_.push_back(t);
        return static_cast<int>(arena_.size()) - 1;
    }

    bool is_hall_pair(int u, int v) const {
        return u < v && (arena_[v].left == -1 || arena_[v].left <= u);
    }

    void rewrite_into(int i, int j, const Scalar& coeff, Vec& out) {
        if (i == j) return;
        if (arena_[i].degree + arena_[j].degree > nil_class_) return;
        if (j < i) {
            rewrite_into(j, i, -coeff, out);
            return;
        }
        const Vec& r = rewrite_pair(i, j);
        for (std::size_t k = 0; k < r.size(); ++k)
            if (r[k] != 0) out[k] += coeff * r[k];
    }

    const Vec& rewrite_pair(int i, int j) {
        auto key = std::make_pair(i, j);
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;
        Vec out = zero_vec(arena_.size());
        if (is_hall_pair(i, j)) {
            int id = lookup(i, j);
            out[id] = 1;
        } else {
            // i < j, j = (a, b) with a > i: [i,[a,b]] = [[i,a],b] + [a,[i,b]]
            int a = arena_[j].left, b = arena_[j].right;
            Vec ia = zero_vec(arena_.size());
            rewrite_into(i, a, Scalar(1), ia);
            for (std::size_t k = 0; k < ia.size(); ++k)
                if (ia[k] != 0) rewrite_into(static_cast<int>(k), b, ia[k], out);
            Vec ib = zero_vec(arena_.size());
            rewrite_into(i, b, Scalar(1), ib);
            for (std::size_t k = 0; k < ib.size(); ++k)
                if (ib[k] != 0) rewrite_into(a, static_cast<int>(k), ib[k], out);
        }
        return memo_.emplace(key, std::move(out)).first->second;
    }

    int lookup(int u, int v) {
        auto it = pair_index_.find({u, v});
        if (it != pair_index_.end()) return it->second;
        for (int t = 0; t < size(); ++t)
            if (arena_[t].left == u && arena_[t].right == v) {
                pair_index_[{u, v}] = t;
                return t;
            }
        throw std::logic_error("Hall pair not found in basis");
    }

    int nil_class_;
    std::vector<HallTree> arena_;
    std::map<std::pair<int, int>, Vec> memo_;
    std::map<std::pair<int, int>, int> pair_index_;
};

}  // namespace

LieAlgebra build_free_nilpotent(int generators, int nil_class, int dim_cap) {
    if (generators < 1 || nil_class < 1)
        throw std::invalid_argument("generators and class must be >= 1");
    HallBasis basis(generators, nil_class, dim_cap);
    int dim = basis.size();
    std::vector<std::string> labels;
    for (int i = 0; i < dim; ++i) labels.push_back(basis.tree(i).repr);
    std::map<std::pair<int, int>, Vec> brackets;
    for (int i = 0; i < dim; ++i)
        for (int j = i + 1; j < dim; ++j) {
            Vec v = basis.rewrite(i, j);
            if (!is_zero(v)) brackets[{i, j}] = std::move(v);
        }
    return LieAlgebra(dim, std::move(labels), std::move(brackets));
}

long long witt_dimension(int generators, int degree) {
    auto moebius = [](int n) {
        int m = 1;
        for (int p = 2; p * p <= n; ++p)
            if (n % p == 0) {
                n /= p;
                if (n % p == 0) return 0;
                m = -m;
            }
        if (n > 1) m = -m;
        return m;
    };
    long long sum = 0;
    for (int d = 1; d <= degree; ++d)
        if (degree % d == 0) {
            long long pw = 1;
            for (int t = 0; t < degree / d; ++t) pw *= generators;
            sum += moebius(d) * pw;
        }
    return sum / degree;
}

}  // namespace rblie
