#include "fixtures.hpp"
#include "rblie/free_lie.hpp"
#include "rblie/linalg.hpp"
#include "rblie/sampling.hpp"

#include <doctest.h>

using namespace rblie;

namespace {
Scalar q(long long n, long long d = 1) { return Scalar(n, d); }
}  // namespace

TEST_CASE("rationals parse and print exactly") {
    CHECK(to_string(q(3, 6)) == "1/2");
    CHECK(to_string(q(-4, 2)) == "-2");
    CHECK(to_string(q(0, 7)) == "0");
    CHECK(parse_rational("7/3") == q(7, 3));
    CHECK(parse_rational("-5") == q(-5));
    CHECK(parse_rational(" 2/4 ") == q(1, 2));
    CHECK_THROWS(parse_rational("1/0"));
    CHECK_THROWS(parse_rational("abc"));
}

TEST_CASE("subspaces are deterministic reduced echelon bases") {
    Mat rows = {{q(2), q(4), q(0)}, {q(1), q(2), q(1)}, {q(3), q(6), q(1)}};
    Subspace s = Subspace::span(3, rows);
    CHECK(s.rank() == 2);
    CHECK(s.rows()[0] == Vec{q(1), q(2), q(0)});
    CHECK(s.rows()[1] == Vec{q(0), q(0), q(1)});
    CHECK(s.contains(Vec{q(5), q(10), q(-3)}));
    CHECK_FALSE(s.contains(Vec{q(0), q(1), q(0)}));

    Subspace t = s;
    CHECK_FALSE(t.extend(Vec{q(1), q(2), q(7)}));
    CHECK(t.extend(Vec{q(0), q(1), q(0)}));
    CHECK(t == Subspace::full(3));
    CHECK(Subspace::full(3).contains(s));
    CHECK_FALSE(s.contains(Subspace::full(3)));
}

TEST_CASE("solve_in_span recovers coefficients, dependent rows allowed") {
    Mat rows = {{q(1), q(0)}, {q(0), q(1)}, {q(1), q(1)}};
    auto c = solve_in_span(rows, Vec{q(3), q(5)});
    REQUIRE(c.has_value());
    Vec back = zero_vec(2);
    for (std::size_t i = 0; i < rows.size(); ++i) add_assign(back, scaled(rows[i], (*c)[i]));
    CHECK(back == Vec{q(3), q(5)});
    CHECK_FALSE(solve_in_span({{q(1), q(0)}}, Vec{q(0), q(1)}).has_value());
}

TEST_CASE("matrix inverse over Q") {
    Mat m = {{q(1), q(2)}, {q(3), q(5)}};
    auto inv = mat_inverse(m);
    REQUIRE(inv.has_value());
    CHECK(mat_mul(m, *inv) == mat_identity(2));
    CHECK_FALSE(mat_inverse(Mat{{q(1), q(2)}, {q(2), q(4)}}).has_value());
}

TEST_CASE("heisenberg validates; brackets are bilinear and antisymmetric") {
    LieAlgebra g = fx::heisenberg();
    CHECK(g.validate().ok());
    CHECK(g.nilpotency_class() == 2);
    CHECK(g.bracket_basis(1, 0) == Vec{q(0), q(0), q(-1)});
    Vec x = {q(1), q(2), q(3)}, y = {q(4), q(5), q(6)};
    // [x, y] = (1*5 - 2*4) e3
    CHECK(g.bracket(x, y) == Vec{q(0), q(0), q(-3)});
    CHECK(g.bracket(y, x) == Vec{q(0), q(0), q(3)});
    CHECK(bracket(g.element(x), g.element(x)).is_zero());
}

TEST_CASE("jacobi violations are reported with a witness") {
    std::map<std::pair<int, int>, Vec> br;
    br[{0, 1}] = unit_vec(3, 0);  // [e1,e2] = e1
    br[{0, 2}] = unit_vec(3, 1);  // [e1,e3] = e2
    LieAlgebra g(3, {"e1", "e2", "e3"}, std::move(br));
    auto rep = g.validate();
    CHECK_FALSE(rep.jacobi_ok);
    REQUIRE(rep.jacobi_witness.has_value());
    CHECK(*rep.jacobi_witness == std::array<int, 3>{1, 2, 3});
}

TEST_CASE("invalid explicit filtrations are rejected") {
    std::map<std::pair<int, int>, Vec> br;
    br[{0, 1}] = unit_vec(3, 2);
    std::vector<Subspace> chain = {Subspace::full(3),
                                   Subspace::span(3, {{q(1), q(0), q(0)}}), Subspace(3)};
    LieAlgebra g(3, {"e1", "e2", "e3"}, std::move(br), std::move(chain));
    auto rep = g.validate();
    CHECK(rep.jacobi_ok);
    CHECK_FALSE(rep.filtration_ok);
    CHECK(rep.filtration_witness.has_value());
}

TEST_CASE("lower central series and filtration degrees") {
    LieAlgebra g = build_free_nilpotent(2, 3);
    auto lcs = g.lower_central_series();
    std::vector<std::size_t> dims;
    for (const auto& s : lcs) dims.push_back(s.rank());
    CHECK(dims == std::vector<std::size_t>{5, 3, 2, 0});
    CHECK(g.filtration_degree(unit_vec(5, 0)) == 1);
    CHECK(g.filtration_degree(unit_vec(5, 2)) == 2);
    CHECK(g.filtration_degree(unit_vec(5, 4)) == 3);
    CHECK(g.filtration_degree(zero_vec(5)) == kInfDegree);
}

TEST_CASE("non-nilpotent algebras have no class") {
    std::map<std::pair<int, int>, Vec> br;
    br[{0, 1}] = unit_vec(2, 0);  // [e1,e2] = e1
    LieAlgebra g(2, {"e1", "e2"}, std::move(br));
    CHECK(g.validate().ok());
    CHECK_FALSE(g.is_nilpotent());
}

TEST_CASE("polynomial truncation extension") {
    LieAlgebra g = fx::heisenberg();
    LieAlgebra ext = extend_by_polynomial_filtration(g, 3);
    CHECK(ext.dim() == 9);
    CHECK(ext.validate().ok());
    CHECK(ext.nilpotency_class() <= 3);
    // [e1 h, e2 h] = e3 h^2 : indices e1 h = 0, e2 h = 1, e3 h^2 = 5
    CHECK(ext.bracket_basis(0, 1) == unit_vec(9, 5));
    // [e1 h^2, e2 h^2] = e3 h^4 = 0 after truncation
    CHECK(is_zero(ext.bracket_basis(3, 4)));
    // even an abelian input gains class from the h-grading bound
    LieAlgebra ab = extend_by_polynomial_filtration(fx::abelian(2), 4);
    CHECK(ab.validate().ok());
    CHECK(ab.is_nilpotent());
}

TEST_CASE("witt dimensions count hall trees") {
    CHECK(witt_dimension(2, 1) == 2);
    CHECK(witt_dimension(2, 2) == 1);
    CHECK(witt_dimension(2, 3) == 2);
    CHECK(witt_dimension(2, 4) == 3);
    CHECK(witt_dimension(2, 5) == 6);
    CHECK(witt_dimension(3, 2) == 3);
    CHECK(witt_dimension(3, 3) == 8);
}

TEST_CASE("free nilpotent algebras match witt dimensions and satisfy jacobi") {
    for (auto [gens, cls, dim] : {std::tuple{2, 2, 3}, {2, 3, 5}, {2, 4, 8}, {3, 3, 14}}) {
        LieAlgebra g = build_free_nilpotent(gens, cls);
        CHECK(g.dim() == dim);
        CHECK(g.validate().ok());
        CHECK(g.nilpotency_class() == cls);
    }
    CHECK_THROWS(build_free_nilpotent(2, 4, 5));  // exceeds the dimension cap
}

TEST_CASE("hall basis labels spell the bracketing") {
    LieAlgebra g = build_free_nilpotent(2, 3);
    CHECK(g.labels()[0] == "x1");
    CHECK(g.labels()[1] == "x2");
    CHECK(g.labels()[2] == "[x1,x2]");
    // degree-3 labels, in basis order
    CHECK(g.labels()[3] == "[x1,[x1,x2]]");
    CHECK(g.labels()[4] == "[x2,[x1,x2]]");
    // [x2, [x1,x2]] is itself a Hall tree: the structure constant is a unit
    CHECK(g.bracket_basis(1, 2) == unit_vec(5, 4));
}

TEST_CASE("weight-1 rota-baxter verification") {
    LieAlgebra g = fx::heisenberg();
    CHECK_FALSE(verify_rb_weight1(g, fx::heisenberg_r(g)).has_value());
    CHECK_FALSE(verify_rb_weight1(g, LinearOperator::zero(g)).has_value());
    CHECK_FALSE(verify_rb_weight1(g, LinearOperator::scalar(g, q(-1))).has_value());

    // projection onto span{e1,e2} along e3 fails: [e1,e2] = e3 but R(3 e3) = 0
    Mat proj = {{q(1), q(0), q(0)}, {q(0), q(1), q(0)}, {q(0), q(0), q(0)}};
    auto witness = verify_rb_weight1(g, LinearOperator(g, proj));
    REQUIRE(witness.has_value());
    CHECK(witness->i == 1);
    CHECK(witness->j == 2);
}

TEST_CASE("diagonal operator search pins the failing projection") {
    // brute force over diagonal operators with entries in {-1, 0, 1}: only the
    // pair (e1, e2) constrains them, requiring d1 d2 = d3 (d1 + d2 + 1);
    // diag(1,1,0) is among the failures.
    LieAlgebra g = fx::heisenberg();
    int fails = 0;
    for (int d1 = -1; d1 <= 1; ++d1)
        for (int d2 = -1; d2 <= 1; ++d2)
            for (int d3 = -1; d3 <= 1; ++d3) {
                Mat m = {{q(d1), q(0), q(0)}, {q(0), q(d2), q(0)}, {q(0), q(0), q(d3)}};
                bool expected_fail = d1 * d2 != d3 * (d1 + d2 + 1);
                auto w = verify_rb_weight1(g, LinearOperator(g, m));
                CHECK(w.has_value() == expected_fail);
                if (w) ++fails;
            }
    CHECK(fails > 0);
}

TEST_CASE("rb construction rejects bad operators") {
    LieAlgebra g = fx::heisenberg();
    Mat proj = {{q(1), q(0), q(0)}, {q(0), q(1), q(0)}, {q(0), q(0), q(0)}};
    CHECK_THROWS(RBLieAlgebra(g, LinearOperator(g, proj)));
    // -id on e3, identity-swap on e1/e2 is RB and filtration preserving
    RBLieAlgebra ok(g, fx::heisenberg_r(g));
    CHECK(ok.rb().preserves_filtration());
}

TEST_CASE("descendant bracket is a lie bracket") {
    LieAlgebra g = fx::heisenberg();
    RBLieAlgebra src(g, fx::heisenberg_r(g));
    LieAlgebra des = descendant(src);
    CHECK(des.validate().jacobi_ok);
    // [e1,e2]_R = [e2,e2] + [e1,e1] + [e1,e2] = e3
    CHECK(des.bracket_basis(0, 1) == Vec{q(0), q(0), q(1)});
    // [e1,e3]_R = [e2,e3] + [e1,-e3] + [e1,e3] = 0
    CHECK(is_zero(des.bracket_basis(0, 2)));

    LieAlgebra f = fx::filiform(3);
    RBLieAlgebra sf(f, fx::split_first(f));
    CHECK(descendant(sf).validate().jacobi_ok);
}

TEST_CASE("conjugation by a filtered automorphism preserves the rb property") {
    LieAlgebra g = fx::heisenberg();
    // phi: e1 -> 2 e1, e2 -> e2, e3 -> 2 e3 is a filtered automorphism
    Mat pm = {{q(2), q(0), q(0)}, {q(0), q(1), q(0)}, {q(0), q(0), q(2)}};
    LinearOperator phi(g, pm);
    CHECK(phi.is_automorphism());
    LinearOperator qop = conjugate(fx::heisenberg_r(g), phi);
    CHECK_FALSE(verify_rb_weight1(g, qop).has_value());
    // a non-automorphism is rejected
    Mat bad = {{q(1), q(0), q(0)}, {q(0), q(1), q(0)}, {q(0), q(0), q(0)}};
    CHECK_THROWS(conjugate(fx::heisenberg_r(g), LinearOperator(g, bad)));
}

TEST_CASE("splitting operators from direct sum decompositions") {
    LieAlgebra g = fx::heisenberg();
    LinearOperator r = fx::split_first(g);
    CHECK(is_zero(r.apply(unit_vec(3, 0))));
    CHECK(r.apply(unit_vec(3, 1)) == scaled(unit_vec(3, 1), q(-1)));
    CHECK_FALSE(verify_rb_weight1(g, r).has_value());

    Subspace a = Subspace::span(3, {{q(1), q(0), q(0)}});
    Subspace b = Subspace::span(3, {{q(0), q(1), q(0)}, {q(0), q(0), q(1)}});
    CHECK(is_subalgebra(g, a));
    CHECK(is_subalgebra(g, b));
    // span{e1, e2} is not a subalgebra; overlapping sums are rejected
    CHECK_FALSE(is_subalgebra(g, Subspace::span(3, {{q(1), q(0), q(0)}, {q(0), q(1), q(0)}})));
    CHECK_THROWS(splitting_rb(g, a, a));
}

TEST_CASE("minimal invariant subalgebra closes under bracket and operator") {
    LieAlgebra g = fx::heisenberg();
    RBLieAlgebra src(g, fx::heisenberg_r(g));
    // e1 generates everything: R(e1) = e2, then [e1, e2] = e3
    CHECK(minimal_invariant_subalgebra(src, unit_vec(3, 0)).rank() == 3);
    // e3 spans an invariant line
    CHECK(minimal_invariant_subalgebra(src, unit_vec(3, 2)).rank() == 1);

    LieAlgebra f = fx::filiform(3);
    RBLieAlgebra sf(f, fx::split_first(f));
    Subspace l = minimal_invariant_subalgebra(sf, unit_vec(4, 1));
    CHECK(l.rank() == 1);  // e2 alone: R(e2) = -e2, [e2,e2] = 0
}
