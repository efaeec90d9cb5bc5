#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "graycat/chain.hpp"

using namespace graycat;

namespace {

const Field F0{0};

// column-major integer matrix -> LinMap
LinMap lm(int dst_dim, const std::vector<std::vector<long long>>& cols) {
    LinMap m;
    m.src_dim = static_cast<int>(cols.size());
    m.dst_dim = dst_dim;
    for (const auto& col : cols) {
        SparseVector v(dst_dim);
        for (int i = 0; i < dst_dim; ++i)
            v.add(i, F0.from_int(col[static_cast<size_t>(i)]));
        m.cols.push_back(std::move(v));
    }
    return m;
}

LinMap random_lm(int src, int dst, std::mt19937_64& rng) {
    LinMap m;
    m.src_dim = src;
    m.dst_dim = dst;
    std::uniform_int_distribution<int> d(-3, 3);
    for (int j = 0; j < src; ++j) {
        SparseVector v(dst);
        for (int i = 0; i < dst; ++i) v.add(i, F0.from_int(d(rng)));
        m.cols.push_back(std::move(v));
    }
    return m;
}

// C2 = Q^1 -> C1 = Q^2 -> C0 = Q^1 with delta1 delta2 = 0
ChainComplex2 small_complex() {
    ChainComplex2 c;
    c.delta2 = lm(2, {{1, -1}});
    c.delta1 = lm(1, {{1}, {1}});
    return c;
}

Homotopy1 random_h1(const ChainComplex2& c, const ChainComplex2& d,
                    const ChainMap2& f, std::mt19937_64& rng) {
    Homotopy1 h;
    h.F = f;
    h.H1 = random_lm(c.dim0(), d.dim1(), rng);
    h.H2 = random_lm(c.dim1(), d.dim2(), rng);
    return h;
}

}  // namespace

TEST_CASE("LinMap helpers") {
    LinMap id = lm_identity(3, F0);
    LinMap z = lm_zero(3, 3);
    CHECK(lm_is_zero(z));
    CHECK(!lm_is_zero(id));
    CHECK(lm_add(id, z) == id);
    CHECK(lm_is_zero(lm_sub(id, id)));

    LinMap a = lm(2, {{1, 0}, {1, 1}});  // upper triangular, invertible
    auto inv = lm_inverse(a, F0);
    REQUIRE(inv.has_value());
    CHECK(compose(*inv, a) == lm_identity(2, F0));
    CHECK(compose(a, *inv) == lm_identity(2, F0));

    LinMap s = lm(2, {{1, 1}, {1, 1}});  // singular
    CHECK(!lm_inverse(s, F0).has_value());
}

TEST_CASE("complex validation") {
    ChainComplex2 c = small_complex();
    CHECK_NOTHROW(c.validate(F0));

    ChainComplex2 bad = c;
    bad.delta1 = lm(1, {{1}, {2}});  // delta1 delta2 = -1 != 0
    CHECK_THROWS_AS(bad.validate(F0), std::invalid_argument);

    ChainComplex2 shape = c;
    shape.delta2 = lm(3, {{1, -1, 0}});
    CHECK_THROWS_AS(shape.validate(F0), std::invalid_argument);
}

TEST_CASE("chain maps: identity, recognition, composition") {
    ChainComplex2 c = small_complex();
    ChainMap2 id = chain_identity(c, F0);
    CHECK(is_chain_map(c, c, id));
    CHECK(compose0(id, id) == id);

    ChainMap2 scaled{lm(1, {{2}}), lm(2, {{2, 0}, {0, 2}}), lm(1, {{2}})};
    CHECK(is_chain_map(c, c, scaled));
    ChainMap2 broken = scaled;
    broken.f0 = lm(1, {{3}});
    CHECK(!is_chain_map(c, c, broken));
}

TEST_CASE("1-homotopies: derived target satisfies the conditions and is a "
          "chain map") {
    ChainComplex2 c = small_complex();
    ChainMap2 id = chain_identity(c, F0);
    std::mt19937_64 rng(1);
    for (int t = 0; t < 30; ++t) {
        Homotopy1 h = random_h1(c, c, id, rng);
        ChainMap2 g = homotopy1_target(c, c, h);
        CHECK(is_chain_map(c, c, g));
        CHECK(check_homotopy1(c, c, h, g));
        // wrong target is rejected
        ChainMap2 wrong = g;
        wrong.f0 = lm_add(g.f0, lm_identity(c.dim0(), F0));
        CHECK(!check_homotopy1(c, c, h, wrong));
    }
    Homotopy1 triv = homotopy1_identity(c, c, id);
    CHECK(homotopy1_target(c, c, triv) == id);
}

TEST_CASE("2-homotopies: derived target is a valid 1-homotopy with the same "
          "2-cell boundary") {
    ChainComplex2 c = small_complex();
    ChainMap2 id = chain_identity(c, F0);
    std::mt19937_64 rng(2);
    for (int t = 0; t < 30; ++t) {
        Homotopy2 a;
        a.H = random_h1(c, c, id, rng);
        a.alpha = random_lm(c.dim0(), c.dim2(), rng);
        Homotopy1 k = homotopy2_target(c, c, a);
        CHECK(check_homotopy2(c, c, a, k));
        CHECK(k.F == a.H.F);
        // the end maps at levels 0 and 2 are unchanged (delta2 alpha and
        // alpha delta1 cancel against delta1 delta2 = 0 there)
        ChainMap2 gk = homotopy1_target(c, c, k);
        ChainMap2 gh = homotopy1_target(c, c, a.H);
        CHECK(gk.f0 == gh.f0);
        CHECK(gk.f2 == gh.f2);
    }
}

TEST_CASE("vertical composition of 1-homotopies") {
    ChainComplex2 c = small_complex();
    ChainMap2 id = chain_identity(c, F0);
    std::mt19937_64 rng(3);
    Homotopy1 h = random_h1(c, c, id, rng);
    Homotopy1 k = random_h1(c, c, homotopy1_target(c, c, h), rng);
    Homotopy1 kh = vcomp_h1(c, c, k, h);
    CHECK(kh.F == h.F);
    CHECK(homotopy1_target(c, c, kh) == homotopy1_target(c, c, k));
    CHECK(check_homotopy1(c, c, kh, homotopy1_target(c, c, kh)));
    // non-composable pair throws
    Homotopy1 moved;
    moved.F = id;
    moved.H1 = lm(2, {{1, 0}});  // nonzero H1 moves the target away from id
    moved.H2 = lm_zero(c.dim1(), c.dim2());
    REQUIRE(homotopy1_target(c, c, moved) != id);
    CHECK_THROWS_AS(vcomp_h1(c, c, moved, moved), std::invalid_argument);
}

TEST_CASE("whiskering and horizontal composition produce valid homotopies") {
    ChainComplex2 c = small_complex();
    ChainMap2 id = chain_identity(c, F0);
    std::mt19937_64 rng(4);
    for (int t = 0; t < 20; ++t) {
        Homotopy1 h = random_h1(c, c, id, rng);       // inner 2-cell
        Homotopy1 k = random_h1(c, c, id, rng);       // outer 2-cell
        ChainMap2 g{lm(1, {{2}}), lm(2, {{2, 0}, {0, 2}}), lm(1, {{2}})};

        Homotopy1 wl = whisker_h1_left(g, h);
        CHECK(check_homotopy1(c, c, wl, homotopy1_target(c, c, wl)));
        Homotopy1 wr = whisker_h1_right(k, g);
        CHECK(check_homotopy1(c, c, wr, homotopy1_target(c, c, wr)));

        Homotopy1 lo = hcomp_h1_lower(c, c, c, k, h);
        Homotopy1 up = hcomp_h1_upper(c, c, c, k, h);
        for (const Homotopy1& x : {lo, up}) {
            ChainMap2 tgt = homotopy1_target(c, c, x);
            CHECK(is_chain_map(c, c, tgt));
            CHECK(check_homotopy1(c, c, x, tgt));
        }
        // both composites start at the composite of the sources
        CHECK(lo.F == compose0(k.F, h.F));
        CHECK(up.F == compose0(k.F, h.F));
        // and end at the composite of the targets
        ChainMap2 expected = compose0(homotopy1_target(c, c, k),
                                      homotopy1_target(c, c, h));
        CHECK(homotopy1_target(c, c, lo) == expected);
        CHECK(homotopy1_target(c, c, up) == expected);
    }
}

TEST_CASE("vertical and horizontal composition of 2-homotopies") {
    ChainComplex2 c = small_complex();
    ChainMap2 id = chain_identity(c, F0);
    std::mt19937_64 rng(5);
    for (int t = 0; t < 20; ++t) {
        Homotopy2 a;
        a.H = random_h1(c, c, id, rng);
        a.alpha = random_lm(c.dim0(), c.dim2(), rng);
        Homotopy2 b;
        b.H = homotopy2_target(c, c, a);
        b.alpha = random_lm(c.dim0(), c.dim2(), rng);

        Homotopy2 ba = vcomp_h2(c, c, b, a);
        CHECK(ba.H == a.H);
        CHECK(homotopy2_target(c, c, ba) == homotopy2_target(c, c, b));

        Homotopy2 j;
        j.H = random_h1(c, c, id, rng);
        j.alpha = random_lm(c.dim0(), c.dim2(), rng);
        Homotopy2 hc = hcomp_h2(c, c, c, j, a);
        Homotopy1 tgt = homotopy2_target(c, c, hc);
        CHECK(check_homotopy2(c, c, hc, tgt));
        CHECK(check_homotopy1(c, c, hc.H, homotopy1_target(c, c, hc.H)));
    }
}

TEST_CASE("prod2 is a monoid with the trivial homotopy as unit") {
    ChainComplex2 c = small_complex();
    ChainMap2 id = chain_identity(c, F0);
    Homotopy1 e = homotopy1_identity(c, c, id);
    std::mt19937_64 rng(6);
    for (int t = 0; t < 20; ++t) {
        Homotopy1 h = random_h1(c, c, id, rng);
        Homotopy1 k = random_h1(c, c, id, rng);
        Homotopy1 l = random_h1(c, c, id, rng);
        CHECK(prod2(c, h, e) == h);
        CHECK(prod2(c, e, h) == h);
        CHECK(prod2(c, prod2(c, l, k), h) == prod2(c, l, prod2(c, k, h)));
    }
}

TEST_CASE("prod3 is a monoid with the trivial 2-homotopy as unit") {
    ChainComplex2 c = small_complex();
    ChainMap2 id = chain_identity(c, F0);
    Homotopy2 e;
    e.H = homotopy1_identity(c, c, id);
    e.alpha = lm_zero(c.dim0(), c.dim2());
    std::mt19937_64 rng(7);
    auto rand_h2 = [&]() {
        Homotopy2 a;
        a.H = random_h1(c, c, id, rng);
        a.alpha = random_lm(c.dim0(), c.dim2(), rng);
        return a;
    };
    for (int t = 0; t < 20; ++t) {
        Homotopy2 a = rand_h2(), b = rand_h2(), d = rand_h2();
        CHECK(prod3(c, a, e) == a);
        CHECK(prod3(c, e, a) == a);
        CHECK(prod3(c, prod3(c, d, b), a) == prod3(c, d, prod3(c, b, a)));
    }
}

TEST_CASE("chain automorphism recognition") {
    ChainComplex2 c = small_complex();
    CHECK(is_chain_automorphism(c, chain_identity(c, F0), F0));
    ChainMap2 scaled{lm(1, {{2}}), lm(2, {{2, 0}, {0, 2}}), lm(1, {{2}})};
    CHECK(is_chain_automorphism(c, scaled, F0));
    ChainMap2 zero{lm_zero(1, 1), lm_zero(2, 2), lm_zero(1, 1)};
    CHECK(!is_chain_automorphism(c, zero, F0));
}
