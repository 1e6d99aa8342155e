#include "fixtures.hpp"
#include "rblie/free_lie.hpp"
#include "rblie/graded.hpp"
#include "rblie/group_rb.hpp"
#include "rblie/sampling.hpp"

#include <doctest.h>

using namespace rblie;

namespace {
Scalar q(long long n, long long d = 1) { return Scalar(n, d); }
}  // namespace

TEST_CASE("bch on the heisenberg algebra is x + y + [x,y]/2") {
    LieAlgebra g = fx::heisenberg();
    BCHGroup grp(g);
    RationalSampler s(41);
    for (int t = 0; t < 20; ++t) {
        Vec x = s.vec(3), y = s.vec(3);
        Vec expect = x;
        add_assign(expect, y);
        add_assign(expect, scaled(g.bracket(x, y), q(1, 2)));
        CHECK(grp.mul(x, y) == expect);
        // class 2: the group commutator is exactly the bracket
        CHECK(grp.commutator(x, y) == g.bracket(x, y));
    }
}

TEST_CASE("bch matches the classical degree-3 expansion") {
    LieAlgebra g = build_free_nilpotent(2, 3);
    BCHGroup grp(g);
    Vec z = grp.mul(unit_vec(5, 0), unit_vec(5, 1));
    // x1 + x2 + 1/2 [x1,x2] + 1/12 [x1,[x1,x2]] - 1/12 [x2,[x1,x2]]
    CHECK(z == Vec{q(1), q(1), q(1, 2), q(1, 12), q(-1, 12)});
}

TEST_CASE("group axioms hold exactly") {
    for (LieAlgebra g : {fx::filiform(4), build_free_nilpotent(2, 3)}) {
        BCHGroup grp(g);
        RationalSampler s(43);
        Vec zero = zero_vec(g.dim());
        for (int t = 0; t < 10; ++t) {
            Vec x = s.vec(g.dim()), y = s.vec(g.dim()), z = s.vec(g.dim());
            CHECK(grp.mul(grp.mul(x, y), z) == grp.mul(x, grp.mul(y, z)));
            CHECK(grp.mul(x, zero) == x);
            CHECK(grp.mul(zero, x) == x);
            CHECK(grp.mul(x, grp.inverse(x)) == zero);
        }
    }
}

TEST_CASE("bch truncation must reach the nilpotency class") {
    LieAlgebra g = build_free_nilpotent(2, 3);
    CHECK_THROWS(BCHGroup(g, 2));
    BCHGroup ok(g, 4);  // a larger cutoff changes nothing
    BCHGroup def(g);
    Vec x = unit_vec(5, 0), y = unit_vec(5, 1);
    CHECK(ok.mul(x, y) == def.mul(x, y));
}

TEST_CASE("integrated operator on heisenberg matches the golden closed form") {
    LieAlgebra g = fx::heisenberg();
    RBLieAlgebra src(g, fx::heisenberg_r(g));
    RBGroupOperator op(src);
    RationalSampler s(47);
    for (int t = 0; t < 20; ++t) {
        Vec x = s.vec(3);
        Vec golden = fx::heisenberg_golden(x);
        CHECK(op.via_hopf(x) == golden);
        CHECK(op.via_magnus(x) == golden);
        CHECK(op.closed_formula(x, 3) == golden);
        CHECK(op.via(IntegrationRoute::Closed, x) == golden);
    }
}

TEST_CASE("magnus components reproduce the closed low-degree terms") {
    LieAlgebra g = fx::filiform(3);
    RBLieAlgebra src(g, fx::split_first(g));
    RBGroupOperator op(src);
    const LinearOperator& r = src.rb();
    RationalSampler s(53);
    for (int t = 0; t < 20; ++t) {
        Vec x = s.vec(4);
        auto omega = op.magnus_components(x);
        REQUIRE(omega.size() >= 3);
        CHECK(omega[0] == x);
        Vec rx = r.apply(x);
        Vec rxx = g.bracket(rx, x);
        CHECK(omega[1] == scaled(rxx, q(-1, 2)));
        Vec o3 = scaled(g.bracket(rxx, x), q(1, 12));
        add_assign(o3, scaled(g.bracket(rx, rxx), q(1, 12)));
        add_assign(o3, scaled(g.bracket(r.apply(rxx), x), q(1, 4)));
        CHECK(omega[2] == o3);
        // the sum of the components is the full expansion
        Vec sum = zero_vec(4);
        for (const auto& c : omega) add_assign(sum, c);
        CHECK(sum == op.magnus(x));
        CHECK(op.via_magnus(x) == r.apply(sum));
    }
}

TEST_CASE("closed formulas enforce their hypotheses") {
    LieAlgebra g3 = fx::filiform(3);
    RBLieAlgebra s3(g3, fx::split_first(g3));
    RBGroupOperator op3(s3);
    Vec x = unit_vec(4, 0);
    CHECK_THROWS(op3.closed_formula(x, 3));  // class 3 > 2
    CHECK(op3.closed_formula(x, 4) == op3.via_hopf(x));

    LieAlgebra g4 = fx::filiform(4);
    RBLieAlgebra s4(g4, fx::split_first(g4));
    RBGroupOperator op4(s4);
    CHECK_THROWS(op4.closed_formula(unit_vec(5, 0), 4));  // class 4 > 3
}

TEST_CASE("dual-path agreement on a free nilpotent fixture") {
    LieAlgebra g = build_free_nilpotent(2, 3);
    RBLieAlgebra src(g, fx::split_first(g));
    RBGroupOperator op(src);
    RationalSampler s(59);
    for (int t = 0; t < 5; ++t) {
        Vec x = s.vec(5);
        CHECK(op.via_hopf(x) == op.via_magnus(x));
    }
}

TEST_CASE("group rota-baxter identity and derived group law") {
    LieAlgebra g = fx::heisenberg();
    RBLieAlgebra src(g, fx::heisenberg_r(g));
    RBGroupOperator op(src);
    const BCHGroup& grp = op.group();
    RationalSampler s(61);
    auto star = [&](const Vec& a, const Vec& b) {
        Vec ra = op.via_hopf(a);
        return grp.mul(grp.mul(a, grp.mul(ra, b)), grp.inverse(ra));
    };
    for (int t = 0; t < 20; ++t) {
        Vec x = s.vec(3), y = s.vec(3);
        CHECK(grp.mul(op.via_hopf(x), op.via_hopf(y)) == op.via_hopf(star(x, y)));
    }
}

TEST_CASE("braces exist exactly up to class 2") {
    LieAlgebra h = fx::heisenberg();
    Brace brace(h);
    RationalSampler s(67);
    std::vector<std::array<Vec, 3>> triples;
    for (int t = 0; t < 50; ++t) triples.push_back({s.vec(3), s.vec(3), s.vec(3)});
    CHECK(brace.verify(triples).ok);
    CHECK(brace.add(unit_vec(3, 0), unit_vec(3, 1)) == Vec{q(1), q(1), q(0)});

    LieAlgebra f = build_free_nilpotent(2, 3);
    CHECK_THROWS(Brace(f));
    BCHGroup grp(f);
    std::vector<std::array<Vec, 3>> bad;
    RationalSampler s2(71);
    for (int t = 0; t < 20; ++t) bad.push_back({s2.vec(5), s2.vec(5), s2.vec(5)});
    BraceReport rep = check_brace_law(grp, bad);
    CHECK_FALSE(rep.ok);
    CHECK(rep.witness.has_value());
}

TEST_CASE("special cases of the integrated operator") {
    LieAlgebra g = fx::heisenberg();
    RBLieAlgebra src(g, fx::heisenberg_r(g));
    RBGroupOperator op(src);
    // [R(e3), e3] = [-e3, e3] = 0: the commuting case applies
    auto rep = special_cases(op, unit_vec(3, 2));
    CHECK(rep.commuting_case_applicable);
    CHECK(rep.ok());

    LieAlgebra f = fx::filiform(3);
    RBLieAlgebra sf(f, fx::split_first(f));
    RBGroupOperator opf(sf);
    // R(e1) = 0: the kernel case applies
    auto repk = special_cases(opf, unit_vec(4, 0));
    CHECK(repk.kernel_case_applicable);
    CHECK(repk.ok());
}

TEST_CASE("graded ring of the heisenberg group") {
    LieAlgebra g = fx::heisenberg();
    FilteredGroup fg(g);
    GradedLieRing ring = graded_ring(fg);
    REQUIRE(ring.components().size() == 2);
    CHECK(ring.components()[0].basis.size() == 2);
    CHECK(ring.components()[1].basis.size() == 1);
    // [gr e1, gr e2] = gr e3 via the group commutator
    CHECK(ring.bracket(1, 0, 1, 1) == Vec{q(1)});
    CHECK(ring.validate().ok());
    CHECK_FALSE(ring.has_op());
}

TEST_CASE("graded rota-baxter ring satisfies the lie-ring identity") {
    for (int cls : {3, 4}) {
        LieAlgebra g = fx::filiform(cls);
        RBLieAlgebra src(g, fx::split_first(g));
        FilteredGroup fg(src);
        GradedLieRing ring = graded_rb(fg);
        CHECK(ring.validate().ok());
        CHECK(ring.has_op());
        CHECK(ring.rb_identity_holds());
    }
}

TEST_CASE("the graded group ring is isomorphic to the graded algebra") {
    LieAlgebra h = fx::heisenberg();
    RBLieAlgebra hs(h, fx::heisenberg_r(h));
    CHECK(verify_iso(hs).ok());

    LieAlgebra f = build_free_nilpotent(2, 4);
    RBLieAlgebra fs(f, fx::split_first(f));
    CHECK(verify_iso(fs).ok());
}

TEST_CASE("graded reduction is independent of the representative") {
    LieAlgebra g = fx::filiform(3);
    FilteredGroup fg(g);
    GradedLieRing ring = graded_ring(fg);
    const auto& chain = g.filtration();
    RationalSampler s(73);
    for (int t = 0; t < 20; ++t) {
        // random element of F_2 perturbed inside F_3
        Vec x = zero_vec(4);
        for (const auto& r : chain[1].rows()) add_assign(x, scaled(r, s.rational()));
        Vec z = x;
        for (const auto& r : chain[2].rows()) add_assign(z, scaled(r, s.rational()));
        CHECK(ring.reduce(x, 2) == ring.reduce(z, 2));
    }
    CHECK_THROWS(ring.reduce(unit_vec(4, 0), 2));  // e1 is not in F_2
}
