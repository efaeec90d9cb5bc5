#pragma once

#include <optional>

#include "graycat/linalg.hpp"

namespace graycat {

// --- small LinMap helpers ----------------------------------------------------

LinMap lm_zero(int src_dim, int dst_dim);
LinMap lm_identity(int dim, const Field& f);
LinMap lm_add(const LinMap& a, const LinMap& b);
LinMap lm_sub(const LinMap& a, const LinMap& b);
bool lm_is_zero(const LinMap& a);
// Inverse of a linear map, or nullopt if not invertible.
std::optional<LinMap> lm_inverse(const LinMap& a, const Field& f);

// --- length-2 chain complexes and their Gray category -----------------------

// C2 --delta2--> C1 --delta1--> C0 with delta1 o delta2 = 0.
struct ChainComplex2 {
    LinMap delta2, delta1;

    int dim2() const { return delta2.src_dim; }
    int dim1() const { return delta1.src_dim; }
    int dim0() const { return delta1.dst_dim; }

    // throws std::invalid_argument on shape mismatch or delta1 delta2 != 0
    void validate(const Field& f) const;
};

// Chain map F = (f2, f1, f0): C -> D, commuting with the differentials.
struct ChainMap2 {
    LinMap f2, f1, f0;
    bool operator==(const ChainMap2&) const = default;
};

ChainMap2 chain_identity(const ChainComplex2& c, const Field& f);
bool is_chain_map(const ChainComplex2& c, const ChainComplex2& d, const ChainMap2& f);
// (g #0 f)_i = g_i f_i
ChainMap2 compose0(const ChainMap2& g, const ChainMap2& f);

// 1-homotopy (H, F): F => G with components H1: C0 -> D1, H2: C1 -> D2.
// The target is derived: G0 = F0 + delta1 H1, G1 = F1 + H1 delta1 + delta2 H2,
// G2 = F2 + H2 delta2.
struct Homotopy1 {
    LinMap H1, H2;
    ChainMap2 F;
    bool operator==(const Homotopy1&) const = default;
};

ChainMap2 homotopy1_target(const ChainComplex2& c, const ChainComplex2& d,
                           const Homotopy1& h);
// checks the three homotopy conditions of (H, F): F => G
bool check_homotopy1(const ChainComplex2& c, const ChainComplex2& d,
                     const Homotopy1& h, const ChainMap2& g);
Homotopy1 homotopy1_identity(const ChainComplex2& c, const ChainComplex2& d,
                             const ChainMap2& f);

// 2-homotopy (alpha, H, F): (H, F) => (K, F) with component alpha: C0 -> D2;
// the target homotopy is derived: K1 = H1 + delta2 alpha, K2 = H2 + alpha delta1.
struct Homotopy2 {
    LinMap alpha;
    Homotopy1 H;
    bool operator==(const Homotopy2&) const = default;
};

Homotopy1 homotopy2_target(const ChainComplex2& c, const ChainComplex2& d,
                           const Homotopy2& a);
// checks the two homotopy conditions of alpha against an asserted target
bool check_homotopy2(const ChainComplex2& c, const ChainComplex2& d,
                     const Homotopy2& a, const Homotopy1& k);

// --- compositions (composability mismatches throw std::invalid_argument) ----

// (K, G) #2 (H, F) with G = target(H, F): components add, source is F.
Homotopy1 vcomp_h1(const ChainComplex2& c, const ChainComplex2& d,
                   const Homotopy1& k, const Homotopy1& h);
// G natural_1 (H, F) = (G1 H1, G2 H2, G #0 F)
Homotopy1 whisker_h1_left(const ChainMap2& g, const Homotopy1& h);
// (K, G) natural_1 F' = (K1 F'0, K2 F'1, G #0 F')
Homotopy1 whisker_h1_right(const Homotopy1& k, const ChainMap2& fp);

// horizontal composites of 2-cells Gamma = (K, G): D -> E over
// Gamma' = (H, F): C -> D; lower uses the target of Gamma' and the source of
// Gamma, upper the source of Gamma' and the target of Gamma
Homotopy1 hcomp_h1_lower(const ChainComplex2& c, const ChainComplex2& d,
                         const ChainComplex2& e, const Homotopy1& gamma,
                         const Homotopy1& gamma_prime);
Homotopy1 hcomp_h1_upper(const ChainComplex2& c, const ChainComplex2& d,
                         const ChainComplex2& e, const Homotopy1& gamma,
                         const Homotopy1& gamma_prime);

// beta #3 alpha = (beta' + alpha', H, F) with target(alpha) = source(beta)
Homotopy2 vcomp_h2(const ChainComplex2& c, const ChainComplex2& d,
                   const Homotopy2& beta, const Homotopy2& alpha);

// horizontal composite of 3-cells J = (beta', K, G): D -> E over
// J' = (alpha', H, F): C -> D:
//   (G2 alpha' + beta' F'0, (K1 F'0 + G1 H1, K2 F'1 + G2 H2), G #0 F)
Homotopy2 hcomp_h2(const ChainComplex2& c, const ChainComplex2& d,
                   const ChainComplex2& e, const Homotopy2& j,
                   const Homotopy2& j_prime);

// --- the automorphism structure of a single complex --------------------------

// group product on 1-homotopies over a fixed complex (primes denote derived
// targets): (K, G) * (H, F) = ((K1 F0 + G'1 H1, K2 F1 + G'2 H2), G #0 F)
Homotopy1 prod2(const ChainComplex2& delta, const Homotopy1& kg,
                const Homotopy1& hf);
// group product on 2-homotopies:
//   (b', K, G) * (a', H, F)
//     = (G'2 a' + b' F0, (K1 F0 + G'1 H1, K2 F1 + G'2 H2), G #0 F)
Homotopy2 prod3(const ChainComplex2& delta, const Homotopy2& j,
                const Homotopy2& jp);

bool is_chain_automorphism(const ChainComplex2& delta, const ChainMap2& f,
                           const Field& fld);

}  // namespace graycat
