#pragma once

#include <memory>
#include <vector>

#include "graycat/group.hpp"
#include "graycat/report.hpp"

namespace graycat {

// ∂: M → N with an N-action on M.
struct CrossedModule {
    std::shared_ptr<FiniteGroup> M, N;
    GroupHom boundary;   // M -> N
    GroupAction action;  // N on M
};

// Complex L → M → N with N-actions and a Peiffer lifting {-,-}: M×M → L.
struct TwoCrossedModule {
    std::shared_ptr<FiniteGroup> L, M, N;
    GroupHom d2;  // L -> M
    GroupHom d1;  // M -> N
    GroupAction actNM, actNL;
    std::vector<std::vector<Elem>> lifting;  // lifting[m][m'] = {m, m'}

    Elem lift(Elem m, Elem m2) const { return lifting[m][m2]; }
    // induced action of M on L: m·l = {d2(l), m} * l
    Elem act_ml(Elem m, Elem l) const { return m_act_l(*L, d2, lifting, m, l); }
};

std::vector<std::vector<Elem>> trivial_lifting(const FiniteGroup& L,
                                               const FiniteGroup& M);

// Axiom verification: one CheckRecord per axiom, first counterexample as
// witness. Structural problems (sizes, non-homomorphisms) throw.
StageReport verify_crossed_module(const CrossedModule& x);
StageReport verify_2xm(const TwoCrossedModule& x);

// Degenerate embedding with trivial L and trivial lifting.
TwoCrossedModule from_crossed_module(const CrossedModule& x);

// Enumerate Peiffer lifting tables completing the given data to a 2-crossed
// module; backtracking with local pruning, up to `limit` results.
std::vector<TwoCrossedModule> search_peiffer_liftings(
    std::shared_ptr<FiniteGroup> L, std::shared_ptr<FiniteGroup> M,
    std::shared_ptr<FiniteGroup> N, const GroupHom& d2, const GroupHom& d1,
    const GroupAction& actNM, const GroupAction& actNL, int limit,
    long long node_budget = 10'000'000);

// A levelwise automorphism of the 2-crossed module (a Gray endofunctor on
// the associated groupoid).
struct ModuleAutomorphism {
    std::vector<Elem> fL, fM, fN;
    bool is_identity() const;
};

// Brute-force search for module automorphisms (small groups only).
std::vector<ModuleAutomorphism> module_automorphisms(const TwoCrossedModule& x,
                                                     int max_results = 16);

}  // namespace graycat
