#include <doctest.h>

#include "test_support.hpp"

using namespace nullag;
using namespace nullag::testing;

namespace {

struct Matrix {
    long a, b, c, d;
};

Expr act(const Expr& e, const Matrix& m) {
    return mobius_substitute(e, rat(m.a), rat(m.b), rat(m.c), rat(m.d));
}

Matrix product(const Matrix& x, const Matrix& y) {
    return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c,
            x.c * y.b + x.d * y.d};
}

std::vector<Expr> corpus() {
    return {krivonos(3), krivonos(4), krivonos(5), krivonos(6),   schippers(3),
            schippers(4), schippers(5), pre_schwarzian(), lagrangian_l2()};
}

}  // namespace

TEST_CASE("infinitesimal residues") {
    InvarianceReport s = sl2_residues(schwarzian());
    CHECK(s.residue_translation.is_zero());
    CHECK(s.residue_scaling.is_zero());
    CHECK(s.residue_special.is_zero());
    CHECK(s.invariant);

    InvarianceReport pre = sl2_residues(q(2) / q(1));
    CHECK(pre.residue_translation.is_zero());
    CHECK(pre.residue_scaling.is_zero());
    CHECK(pre.residue_special == rat(2) * q(1));
    CHECK(!pre.invariant);

    for (int n = 3; n <= 6; ++n) {
        CHECK(sl2_residues(krivonos(n)).invariant);
    }
    CHECK(!sl2_residues(schippers(4)).invariant);
    CHECK(!prolong({q(0).pow(2)}, schippers(4)).is_zero());
}

TEST_CASE("finite substitution") {
    CHECK(mobius_substitute(schwarzian(), rat(1), rat(0), rat(0), rat(1)) == schwarzian());
    CHECK(mobius_substitute(schwarzian(), p("a"), p("b"), p("c"), p("d")) == schwarzian());
    CHECK(mobius_substitute(q(2) / q(1), rat(1), rat(0), rat(1), rat(1)) != q(2) / q(1));
    CHECK(sl2_finite_check(schwarzian()));
    CHECK(!sl2_finite_check(schippers(4)));
    CHECK(sl2_finite_check(krivonos(6)));
    CHECK_THROWS_AS(mobius_substitute(schwarzian(), rat(1), rat(2), rat(2), rat(4)), Error);
    CHECK_THROWS_AS(mobius_substitute(schwarzian(), q(0), rat(0), rat(0), rat(1)), Error);
    CHECK_THROWS_AS(sl2_finite_check(p("a") * q(1)), Error);
}

TEST_CASE("the two methods agree on the built-in corpus") {
    for (const Expr& e : corpus()) {
        CAPTURE(render(e));
        CHECK(sl2_finite_check(e) == sl2_residues(e).invariant);
    }
}

TEST_CASE("composition matches the matrix product") {
    const Matrix m1{2, 1, 1, 1};
    const Matrix m2{1, 0, 2, 1};
    for (const Expr& e : {schwarzian(), q(2) / q(1)}) {
        CHECK(act(act(e, m1), m2) == act(e, product(m1, m2)));
    }
}

TEST_CASE("invariance is closed under products and combinations") {
    Expr s3 = krivonos(3);
    Expr s4 = krivonos(4);
    CHECK(sl2_residues(s3 * s4).invariant);
    CHECK(sl2_residues(s3.pow(2)).invariant);
    CHECK(sl2_residues(rat(3, 7) * s3 - rat(2) * s4).invariant);
    CHECK(sl2_finite_check(s3 * s4));
}
