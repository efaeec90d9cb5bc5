#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "graycat/linalg.hpp"

using namespace graycat;

namespace {

SparseVector vec(int dim, const Field& f, std::initializer_list<long long> vals) {
    SparseVector v(dim);
    int i = 0;
    for (long long x : vals) v.set(i++, f.from_int(x));
    return v;
}

}  // namespace

TEST_CASE("scalar arithmetic: rationals and prime fields") {
    Field q{0}, f5{5};
    CHECK((q.from_int(1) / q.from_int(3) + q.from_int(2) / q.from_int(3)) == q.one());
    CHECK(q.from_int(2) * q.from_int(3) == q.from_int(6));
    CHECK((-q.one()).is_zero() == false);
    CHECK(f5.from_int(7) == f5.from_int(2));
    CHECK(f5.from_int(3).inverse() * f5.from_int(3) == f5.one());
    CHECK(f5.from_int(4) + f5.one() == f5.zero());
    CHECK_THROWS(q.one() + f5.one());  // mixed characteristics
}

TEST_CASE("sparse vector arithmetic") {
    Field f{0};
    SparseVector a = vec(4, f, {1, 0, 2, 0});
    SparseVector b = vec(4, f, {0, 1, -2, 0});
    CHECK((a + b) == vec(4, f, {1, 1, 0, 0}));
    CHECK((a - a).is_zero());
    CHECK((-a).scaled(f.from_int(-1)) == a);
    a.axpy(f.from_int(3), b);
    CHECK(a == vec(4, f, {1, 3, -4, 0}));
    CHECK(a.leading_index() == 0);
}

TEST_CASE("subspace: insertion, reduction, membership") {
    Field f{0};
    Subspace s(3, f);
    CHECK(s.insert(vec(3, f, {1, 1, 0})));
    CHECK(s.insert(vec(3, f, {0, 1, 1})));
    CHECK(!s.insert(vec(3, f, {1, 2, 1})));  // dependent
    CHECK(s.rank() == 2);
    CHECK(s.contains(vec(3, f, {2, 3, 1})));
    CHECK(!s.contains(vec(3, f, {0, 0, 1})));
    CHECK(s.non_pivot_columns().size() == 1);
}

TEST_CASE("subspace: combination tracking expresses members in inserted vectors") {
    Field f{0};
    Subspace s(3, f, /*track=*/true);
    SparseVector x0 = vec(3, f, {1, 1, 0});
    SparseVector x1 = vec(3, f, {0, 2, 0});
    s.insert(x0);
    s.insert(x1);
    SparseVector target = vec(3, f, {2, 5, 0});
    auto combo = s.coordinates_in_inserted(target);
    REQUIRE(combo.has_value());
    SparseVector rebuilt(3);
    for (const auto& [i, c] : combo->entries()) rebuilt.axpy(c, i == 0 ? x0 : x1);
    CHECK(rebuilt == target);
    CHECK(!s.coordinates_in_inserted(vec(3, f, {0, 0, 1})).has_value());
}

TEST_CASE("kernel and image of a linear map") {
    Field f{0};
    // map (x,y,z) -> (x+y, y+z) has kernel spanned by (1,-1,1)
    LinMap m;
    m.src_dim = 3;
    m.dst_dim = 2;
    m.cols = {vec(2, f, {1, 0}), vec(2, f, {1, 1}), vec(2, f, {0, 1})};
    Subspace ker = kernel(m, f);
    CHECK(ker.rank() == 1);
    CHECK(ker.contains(vec(3, f, {1, -1, 1})));
    CHECK(image(m, f).rank() == 2);
    for (const auto& r : ker.rows()) CHECK(m.apply(r).is_zero());
}

TEST_CASE("quotient space round trip") {
    Field f{0};
    Subspace j(3, f);
    j.insert(vec(3, f, {1, -1, 0}));
    QuotientSpace q = quotient_basis(3, j);
    CHECK(q.dim() == 2);
    SparseVector v = vec(3, f, {5, 2, 1});
    SparseVector r = q.reduce(v);
    CHECK(q.reduce(q.lift(r)) == r);
    // e_0 and e_1 are identified
    CHECK(q.reduce(vec(3, f, {1, 0, 0})) == q.reduce(vec(3, f, {0, 1, 0})));
}

TEST_CASE("randomized exact-linear-algebra contracts: 10^4 seeded cases") {
    const int kCases = 10'000;
    int failures = 0;
    std::string first;

    for (int t = 0; t < kCases && failures == 0; ++t) {
        std::mt19937_64 rng(900'000 + t);
        uint32_t ps[] = {0, 2, 5, 13};
        Field f{ps[t % 4]};
        int src = 1 + static_cast<int>(rng() % 6);
        int dst = 1 + static_cast<int>(rng() % 6);
        auto rnd = [&] { return f.from_int(static_cast<long long>(rng() % 7) - 3); };

        LinMap m;
        m.src_dim = src;
        m.dst_dim = dst;
        for (int i = 0; i < src; ++i) {
            SparseVector c(dst);
            for (int j = 0; j < dst; ++j) c.set(j, rnd());
            m.cols.push_back(std::move(c));
        }

        auto fail = [&](const std::string& what) {
            ++failures;
            if (first.empty()) first = "case " + std::to_string(t) + ": " + what;
        };

        // rank-nullity
        Subspace ker = kernel(m, f);
        Subspace im = image(m, f);
        if (ker.rank() + im.rank() != src) fail("rank-nullity");
        // kernel membership
        for (const auto& r : ker.rows())
            if (!m.apply(r).is_zero()) fail("kernel row not annihilated");
        // rref idempotence: re-reducing basis rows changes nothing
        Subspace s(dst, f);
        for (const auto& c : m.cols) s.insert(c);
        int rank_before = s.rank();
        for (const auto& r : s.rows())
            if (s.insert(r)) fail("rref not idempotent");
        if (s.rank() != rank_before || s.rank() != im.rank()) fail("rank drift");
        // reduction contract: residue reduces to zero residue
        SparseVector v(dst);
        for (int j = 0; j < dst; ++j) v.set(j, rnd());
        SparseVector res = s.reduce(v).residue;
        if (s.reduce(res).residue != res) fail("reduction not stable");
        // membership: any combination of basis rows is contained
        SparseVector comb(dst);
        for (const auto& r : s.rows()) comb.axpy(rnd(), r);
        if (!s.contains(comb)) fail("span membership");
        // quotient round trip
        QuotientSpace q = quotient_basis(dst, s);
        if (q.dim() != dst - s.rank()) fail("quotient dimension");
        SparseVector qr = q.reduce(v);
        if (q.reduce(q.lift(qr)) != qr) fail("quotient round trip");
        if (!s.contains(v - q.lift(qr))) fail("quotient representative");
    }
    CHECK_MESSAGE(failures == 0, first);
}
