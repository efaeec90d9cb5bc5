#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixtures_util.hpp"
#include "graycat/gray.hpp"

using namespace graycat;

namespace {
const char* kPositive[] = {"trivial", "z2-triv", "z2-id", "z3-id", "z4-id",
                           "s3-z3", "s3-comm", "z3-z3-z2-inv"};
}

TEST_CASE("cell structure: orders, boundaries, sections") {
    TwoCrossedModule x = load_module("s3-z3");
    GrayGroupoid g = theta(x);
    CHECK(g.C1->order == 6);
    CHECK(g.C2->order == 18);
    CHECK(g.C3->order == 18);
    for (int i = 0; i < g.C2->order; ++i) {
        Cell2 c = g.decode2(i);
        CHECK(g.s2(g.e2(g.s2(c))) == g.s2(c));
        CHECK(g.t2(g.e2(g.t2(c))) == g.t2(c));
    }
}

TEST_CASE("full verification passes on every positive fixture") {
    for (const char* name : kPositive) {
        CAPTURE(name);
        GrayGroupoid g = theta(load_module(name));
        for (const StageReport& r :
             {verify_gray(g), cat2_kernel_check(g), delta_roundtrip_check(g)})
            for (const auto& c : r.checks) {
                CAPTURE(c.id);
                CAPTURE(c.witness);
                if (!c.informational) CHECK(c.pass);
            }
    }
}

TEST_CASE("vertical composition of 2-cells multiplies the middle components") {
    GrayGroupoid g = theta(load_module("s3-comm"));
    const auto& x = g.X();
    for (int m = 0; m < x.M->order; ++m)
        for (int m2 = 0; m2 < x.M->order; ++m2) {
            Cell2 bottom{m, 0};
            Cell2 top{m2, x.N->times(x.d1(m), 0)};
            Cell2 c = vcomp2(g, top, bottom);
            CHECK(c.m == x.M->times(m2, m));
            CHECK(c.n == 0);
        }
    // non-composable pair throws
    GrayGroupoid h = theta(load_module("s3-z3"));
    CHECK_THROWS_AS(vcomp2(h, {0, 1}, {1, 0}), std::invalid_argument);
}

TEST_CASE("the two horizontal composites differ on a nonabelian middle level") {
    GrayGroupoid g = theta(load_module("s3-comm"));
    bool witness = false;
    for (int i = 0; i < g.C2->order && !witness; ++i)
        for (int j = 0; j < g.C2->order && !witness; ++j)
            if (hcomp2_lower(g, g.decode2(i), g.decode2(j)) !=
                hcomp2_upper(g, g.decode2(i), g.decode2(j)))
                witness = true;
    CHECK(witness);
}

TEST_CASE("the horizontal composites agree when the middle level is abelian "
          "with inner-trivial action") {
    GrayGroupoid g = theta(load_module("s3-z3"));
    for (int i = 0; i < g.C2->order; ++i)
        for (int j = 0; j < g.C2->order; ++j)
            CHECK(hcomp2_lower(g, g.decode2(i), g.decode2(j)) ==
                  hcomp2_upper(g, g.decode2(i), g.decode2(j)));
}

TEST_CASE("interchange cell connects the two horizontal composites") {
    GrayGroupoid g = theta(load_module("s3-comm"));
    const auto& x = g.X();
    for (int i = 0; i < g.C2->order; ++i)
        for (int j = 0; j < g.C2->order; ++j) {
            Cell2 a = g.decode2(i), b = g.decode2(j);
            Cell3 ic = interchange_cell(g, a, b);
            CHECK(g.s3(ic) == hcomp2_lower(g, a, b));
            CHECK(g.t3(ic) == hcomp2_upper(g, a, b));
            CHECK(ic.l == x.lift(a.m, x.actNM.act(a.n, b.m)));
        }
}

TEST_CASE("budget guard") {
    GrayGroupoid g = theta(load_module("s3-comm"));
    VerifyOptions opt;
    opt.tuple_budget = 10;
    CHECK_THROWS_AS(verify_gray(g, opt), BudgetExceeded);
}

TEST_CASE("reconstruction returns an isomorphic module with the computed lifting") {
    for (const char* name : {"z2-triv", "s3-comm", "z3-z3-z2-inv"}) {
        CAPTURE(name);
        GrayGroupoid g = theta(load_module(name));
        TwoCrossedModule d = delta_functor(g);
        CHECK(verify_2xm(d).passed());
        CHECK(d.L->order == g.X().L->order);
        CHECK(d.M->order == g.X().M->order);
        CHECK(d.N->order == g.X().N->order);
    }
}
