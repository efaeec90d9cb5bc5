#include "graycat/chain.hpp"

#include <stdexcept>

namespace graycat {

namespace {
void require(bool cond, const char* what) {
    if (!cond) throw std::invalid_argument(what);
}
}  // namespace

LinMap lm_zero(int src_dim, int dst_dim) {
    LinMap m;
    m.src_dim = src_dim;
    m.dst_dim = dst_dim;
    m.cols.assign(src_dim, SparseVector(dst_dim));
    return m;
}

LinMap lm_identity(int dim, const Field& f) {
    LinMap m;
    m.src_dim = m.dst_dim = dim;
    m.cols.reserve(dim);
    for (int i = 0; i < dim; ++i) m.cols.push_back(SparseVector::unit(dim, i, f));
    return m;
}

LinMap lm_add(const LinMap& a, const LinMap& b) {
    require(a.src_dim == b.src_dim && a.dst_dim == b.dst_dim,
            "lm_add: shape mismatch");
    LinMap r = a;
    for (int i = 0; i < r.src_dim; ++i) r.cols[i] = r.cols[i] + b.cols[i];
    return r;
}

LinMap lm_sub(const LinMap& a, const LinMap& b) {
    require(a.src_dim == b.src_dim && a.dst_dim == b.dst_dim,
            "lm_sub: shape mismatch");
    LinMap r = a;
    for (int i = 0; i < r.src_dim; ++i) r.cols[i] = r.cols[i] - b.cols[i];
    return r;
}

bool lm_is_zero(const LinMap& a) {
    for (const auto& c : a.cols)
        if (!c.is_zero()) return false;
    return true;
}

std::optional<LinMap> lm_inverse(const LinMap& a, const Field& f) {
    if (a.src_dim != a.dst_dim) return std::nullopt;
    Subspace span(a.dst_dim, f, /*track=*/true);
    for (const auto& c : a.cols)
        if (!span.insert(c)) return std::nullopt;
    LinMap inv;
    inv.src_dim = inv.dst_dim = a.src_dim;
    inv.cols.reserve(a.src_dim);
    for (int i = 0; i < a.src_dim; ++i) {
        auto combo = span.coordinates_in_inserted(SparseVector::unit(a.dst_dim, i, f));
        if (!combo) return std::nullopt;
        SparseVector col(a.src_dim);
        for (const auto& [j, c] : combo->entries()) col.set(j, c);
        inv.cols.push_back(std::move(col));
    }
    return inv;
}

void ChainComplex2::validate(const Field& f) const {
    (void)f;
    require(delta2.dst_dim == delta1.src_dim, "ChainComplex2: shape mismatch");
    if (!lm_is_zero(compose(delta1, delta2)))
        throw std::invalid_argument("ChainComplex2: delta1 delta2 != 0");
}

ChainMap2 chain_identity(const ChainComplex2& c, const Field& f) {
    return {lm_identity(c.dim2(), f), lm_identity(c.dim1(), f),
            lm_identity(c.dim0(), f)};
}

bool is_chain_map(const ChainComplex2& c, const ChainComplex2& d, const ChainMap2& f) {
    if (f.f2.src_dim != c.dim2() || f.f2.dst_dim != d.dim2() ||
        f.f1.src_dim != c.dim1() || f.f1.dst_dim != d.dim1() ||
        f.f0.src_dim != c.dim0() || f.f0.dst_dim != d.dim0())
        return false;
    return compose(d.delta2, f.f2) == compose(f.f1, c.delta2) &&
           compose(d.delta1, f.f1) == compose(f.f0, c.delta1);
}

ChainMap2 compose0(const ChainMap2& g, const ChainMap2& f) {
    return {compose(g.f2, f.f2), compose(g.f1, f.f1), compose(g.f0, f.f0)};
}

ChainMap2 homotopy1_target(const ChainComplex2& c, const ChainComplex2& d,
                           const Homotopy1& h) {
    return {lm_add(h.F.f2, compose(h.H2, c.delta2)),
            lm_add(h.F.f1, lm_add(compose(h.H1, c.delta1), compose(d.delta2, h.H2))),
            lm_add(h.F.f0, compose(d.delta1, h.H1))};
}

bool check_homotopy1(const ChainComplex2& c, const ChainComplex2& d,
                     const Homotopy1& h, const ChainMap2& g) {
    return compose(d.delta1, h.H1) == lm_sub(g.f0, h.F.f0) &&
           lm_add(compose(h.H1, c.delta1), compose(d.delta2, h.H2)) ==
               lm_sub(g.f1, h.F.f1) &&
           compose(h.H2, c.delta2) == lm_sub(g.f2, h.F.f2);
}

Homotopy1 homotopy1_identity(const ChainComplex2& c, const ChainComplex2& d,
                             const ChainMap2& f) {
    return {lm_zero(c.dim0(), d.dim1()), lm_zero(c.dim1(), d.dim2()), f};
}

Homotopy1 homotopy2_target(const ChainComplex2& c, const ChainComplex2& d,
                           const Homotopy2& a) {
    return {lm_add(a.H.H1, compose(d.delta2, a.alpha)),
            lm_add(a.H.H2, compose(a.alpha, c.delta1)), a.H.F};
}

bool check_homotopy2(const ChainComplex2& c, const ChainComplex2& d,
                     const Homotopy2& a, const Homotopy1& k) {
    return compose(d.delta2, a.alpha) == lm_sub(k.H1, a.H.H1) &&
           compose(a.alpha, c.delta1) == lm_sub(k.H2, a.H.H2) && a.H.F == k.F;
}

Homotopy1 vcomp_h1(const ChainComplex2& c, const ChainComplex2& d,
                   const Homotopy1& k, const Homotopy1& h) {
    require(k.F == homotopy1_target(c, d, h),
            "vcomp_h1: source of the upper 2-cell is not the target of the lower");
    return {lm_add(k.H1, h.H1), lm_add(k.H2, h.H2), h.F};
}

Homotopy1 whisker_h1_left(const ChainMap2& g, const Homotopy1& h) {
    return {compose(g.f1, h.H1), compose(g.f2, h.H2), compose0(g, h.F)};
}

Homotopy1 whisker_h1_right(const Homotopy1& k, const ChainMap2& fp) {
    return {compose(k.H1, fp.f0), compose(k.H2, fp.f1), compose0(k.F, fp)};
}

Homotopy1 hcomp_h1_lower(const ChainComplex2& c, const ChainComplex2& d,
                         const ChainComplex2& e, const Homotopy1& gamma,
                         const Homotopy1& gamma_prime) {
    ChainMap2 fp = homotopy1_target(c, d, gamma_prime);  // F'
    const ChainMap2& g = gamma.F;
    require(gamma.H1.src_dim == d.dim0() && gamma_prime.H1.src_dim == c.dim0(),
            "hcomp_h1_lower: shape mismatch");
    return {lm_add(compose(gamma.H1, fp.f0), compose(g.f1, gamma_prime.H1)),
            lm_add(compose(gamma.H2, fp.f1), compose(g.f2, gamma_prime.H2)),
            compose0(g, gamma_prime.F)};
}

Homotopy1 hcomp_h1_upper(const ChainComplex2& c, const ChainComplex2& d,
                         const ChainComplex2& e, const Homotopy1& gamma,
                         const Homotopy1& gamma_prime) {
    ChainMap2 gp = homotopy1_target(d, e, gamma);  // G'
    const ChainMap2& f = gamma_prime.F;
    require(gamma.H1.src_dim == d.dim0() && gamma_prime.H1.src_dim == c.dim0(),
            "hcomp_h1_upper: shape mismatch");
    return {lm_add(compose(gamma.H1, f.f0), compose(gp.f1, gamma_prime.H1)),
            lm_add(compose(gamma.H2, f.f1), compose(gp.f2, gamma_prime.H2)),
            compose0(gamma.F, f)};
}

Homotopy2 vcomp_h2(const ChainComplex2& c, const ChainComplex2& d,
                   const Homotopy2& beta, const Homotopy2& alpha) {
    require(beta.H == homotopy2_target(c, d, alpha),
            "vcomp_h2: source of the upper 3-cell is not the target of the lower");
    return {lm_add(beta.alpha, alpha.alpha), alpha.H};
}

Homotopy2 hcomp_h2(const ChainComplex2& c, const ChainComplex2& d,
                   const ChainComplex2& e, const Homotopy2& j,
                   const Homotopy2& j_prime) {
    ChainMap2 fp = homotopy1_target(c, d, j_prime.H);  // F'
    const ChainMap2& g = j.H.F;
    LinMap comp = lm_add(compose(g.f2, j_prime.alpha), compose(j.alpha, fp.f0));
    Homotopy1 base = hcomp_h1_lower(c, d, e, j.H, j_prime.H);
    return {std::move(comp), std::move(base)};
}

Homotopy1 prod2(const ChainComplex2& delta, const Homotopy1& kg,
                const Homotopy1& hf) {
    ChainMap2 gp = homotopy1_target(delta, delta, kg);  // G'
    const ChainMap2& f = hf.F;
    return {lm_add(compose(kg.H1, f.f0), compose(gp.f1, hf.H1)),
            lm_add(compose(kg.H2, f.f1), compose(gp.f2, hf.H2)),
            compose0(kg.F, f)};
}

Homotopy2 prod3(const ChainComplex2& delta, const Homotopy2& j,
                const Homotopy2& jp) {
    ChainMap2 gp = homotopy1_target(delta, delta, j.H);  // G'
    const ChainMap2& f = jp.H.F;
    LinMap comp = lm_add(compose(gp.f2, jp.alpha), compose(j.alpha, f.f0));
    Homotopy1 base = prod2(delta, j.H, jp.H);
    return {std::move(comp), std::move(base)};
}

bool is_chain_automorphism(const ChainComplex2& delta, const ChainMap2& f,
                           const Field& fld) {
    return is_chain_map(delta, delta, f) && lm_inverse(f.f2, fld).has_value() &&
           lm_inverse(f.f1, fld).has_value() && lm_inverse(f.f0, fld).has_value();
}

}  // namespace graycat
