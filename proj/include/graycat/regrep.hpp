#pragma once

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "graycat/algebra.hpp"
#include "graycat/chain.hpp"

namespace graycat {

// Defines a linear map by its values on a spanning set: pairs (x_i, y_i) with
// L(x_i) = y_i. Solves on an extracted basis, then verifies every pair maps
// consistently; an inconsistency (or a non-spanning set) is a hard error
// naming the violated relation via `name(i)`.
LinMap define_on_spanning(int src_dim, int dst_dim,
                          const std::vector<std::pair<SparseVector, SparseVector>>& pairs,
                          const Field& f,
                          const std::function<std::string(int)>& name);

// The right regular representation of the quotient cat2-group algebra on the
// induced length-2 chain complex K3 -> K2 -> K1 (kernel-basis coordinates):
//   1-cells n          -> chain automorphisms lambda_n
//   2-cells (m, n)     -> 1-homotopies lambda_n => lambda_{d1(m) n}
//   3-cells (l, m, n)  -> 2-homotopies lambda_{m,n} => lambda_{d2(l)m,n}
struct RegularRepresentation {
    std::shared_ptr<const Cat2AlgebraBundle> bundle;
    ChainComplex2 delta;  // tau-bar maps restricted to the kernels

    std::vector<ChainMap2> l1;   // indexed by n
    std::vector<Homotopy1> l2;   // indexed by encode2(m, n)
    std::vector<Homotopy2> l3;   // indexed by encode3(l, m, n)

    const ChainMap2& lambda1(Elem n) const { return l1[n]; }
    const Homotopy1& lambda2(Elem m, Elem n) const {
        return l2[bundle->gray->codec2.encode(m, n)];
    }
    const Homotopy2& lambda3(Elem l, Elem m, Elem n) const {
        return l3[bundle->gray->codec3.encode(l, m, n)];
    }
};

// Builds all cell images; throws on structural failure (a spanning-set
// inconsistency or a non-chain boundary).
RegularRepresentation build_representation(
    std::shared_ptr<const Cat2AlgebraBundle> bundle);

// Exhaustive verification: automorphism/homotopy membership, contravariance,
// and preservation of every composition (vertical, both horizontal brackets,
// whiskers, the three 3-cell compositions, and the group operations).
StageReport verify_representation(const RegularRepresentation& rep);

// --- the degenerate (length-1) construction ----------------------------------

// Independent construction of the right regular representation of the
// cat1-group of a crossed module: quotient of K(M x| N) by the cocycle ideal,
// kernel of the barred source map, and the lambda matrices.
struct BarkerRep {
    Field field;
    std::shared_ptr<FiniteGroup> MN;
    PairCodec codec;
    std::shared_ptr<Subspace> J;
    QuotientSpace q;
    Subspace K;  // ker sigma_bar, in quotient coordinates
    LinMap delta;             // tau_bar restricted to K:  K -> K(N)
    std::vector<LinMap> l0;   // per n, on K(N)
    std::vector<LinMap> l1;   // per n, on the K basis
    std::vector<LinMap> lp;   // per encode(m, n): K(N) -> K
};

BarkerRep barker_cat1_rep(const CrossedModule& x, const Field& f);

// For a representation built from an embedded crossed module (trivial L):
// compares it matrix-for-matrix with the independent length-1 construction.
StageReport barker_degeneration_check(const RegularRepresentation& rep,
                                      const CrossedModule& x);

// --- ablation ----------------------------------------------------------------

// Rebuilds the bundle and representation with one cocycle generator family
// disabled and records what breaks (construction errors or failing checks).
struct AblationResult {
    std::string family;
    bool build_failed = false;
    std::string error;                        // if construction threw
    std::vector<std::string> failing_checks;  // ids from the verification stages
};

std::vector<AblationResult> ablation_study(std::shared_ptr<const GrayGroupoid> g,
                                           const Field& f);

}  // namespace graycat
