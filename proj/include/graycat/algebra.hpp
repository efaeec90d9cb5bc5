#pragma once

#include <memory>
#include <set>
#include <string>
#include <vector>

#include "graycat/gray.hpp"
#include "graycat/linalg.hpp"
#include "graycat/report.hpp"

namespace graycat {

// Group algebra K(G): basis e_g, products e_g e_h = e_{gh}.
struct GroupAlgebra {
    const FiniteGroup* group = nullptr;
    Field field;

    int dim() const { return group->order; }
    SparseVector basis(Elem g) const { return SparseVector::unit(dim(), g, field); }
    SparseVector unit() const { return basis(group->identity); }

    SparseVector mul(const SparseVector& a, const SparseVector& b) const {
        SparseVector r(dim());
        for (const auto& [g, x] : a.entries())
            for (const auto& [h, y] : b.entries()) r.add(group->times(g, h), x * y);
        return r;
    }
    SparseVector mul_basis_left(Elem g, const SparseVector& v) const {
        SparseVector r(dim());
        for (const auto& [h, y] : v.entries()) r.add(group->times(g, h), y);
        return r;
    }
    SparseVector mul_basis_right(const SparseVector& v, Elem g) const {
        SparseVector r(dim());
        for (const auto& [h, y] : v.entries()) r.add(group->times(h, g), y);
        return r;
    }
};

GroupAlgebra group_algebra(const FiniteGroup& g, const Field& f);

// LinMap induced by a map of group elements (extends e_g -> e_{phi(g)}).
LinMap algebra_map_from_element_map(const GroupAlgebra& src, const GroupAlgebra& dst,
                                    const std::vector<Elem>& phi);

// Two-sided ideal closure of the generators: fixed point of span under left
// and right multiplication by all basis elements. The sweep is the OpenMP
// kernel; `parallel=false` selects the serial reference implementation.
Subspace ideal_closure(const GroupAlgebra& a, const std::vector<SparseVector>& gens,
                       bool parallel = true);

// Verifies e_g J = J = J e_g containment on all basis elements.
bool is_two_sided_ideal(const GroupAlgebra& a, const Subspace& j);

// --- the cat2-algebra bundle -------------------------------------------------

// Which cocycle generator families to include when building J2 (ablation
// support; `all` is the default production configuration).
struct GeneratorFamilies {
    bool u1 = true;    // vertical 3-cell composition relation
    bool v1 = true;    // 1-composition relation
    bool u3 = true;    // 1-cell whiskering relation (first appendix pair)
    bool u4 = true;    // horizontal 3-cell composition relation
    bool u5 = true;    // second appendix whiskering relation
    bool app1 = true;  // 2-cell vertical composition relation for the top map

    static GeneratorFamilies all() { return {}; }
    std::string str() const;
};

// Expressions generating J2 in K(C3); gens_J1 are their images under sigma3
// and tau3 in K(C2).
struct IdealGenerators {
    std::vector<SparseVector> j2;
    std::vector<SparseVector> j1;
};
IdealGenerators ideal_generators(const GrayGroupoid& g, const Field& f,
                                 const GeneratorFamilies& fam = {});

struct Cat2AlgebraBundle {
    std::shared_ptr<const GrayGroupoid> gray;
    Field field;
    GeneratorFamilies families;

    GroupAlgebra A3, A2, A1;          // K(C3), K(C2), K(C1)
    LinMap sigma3, tau3, i3;          // pre-quotient structure maps
    LinMap sigma2, tau2, i2;

    std::shared_ptr<Subspace> J2, J1;  // cocycle ideals (stable addresses)
    QuotientSpace q3, q2;              // quotients of A3 by J2 and A2 by J1

    LinMap sigma3_bar, tau3_bar, i3_bar;  // q3 <-> q2 coordinates
    LinMap sigma2_bar, tau2_bar, i2_bar;  // q2 <-> A1 coordinates

    Subspace K3, K2;                  // ker sigma3_bar (q3 coords), ker sigma2_bar
    // tracked spans of the kernel bases, for expressing vectors in them
    std::shared_ptr<Subspace> K3_coords, K2_coords;

    // e_{l,m,n} in quotient coordinates
    SparseVector ebar3(Elem l, Elem m, Elem n) const;
    SparseVector ebar2(Elem m, Elem n) const;

    // spanning vectors of the kernels, in quotient coordinates
    SparseVector v22_bar(Elem l, Elem m, Elem n) const;  // ebar3(l,m,n)-ebar3(1,m,n)
    SparseVector v11_bar(Elem m, Elem n) const;          // ebar2(m,n)-ebar2(1,n)

    // coordinates of a q3-vector in the K3 basis (throws if outside)
    SparseVector k3_coords(const SparseVector& v_q3) const;
    SparseVector k2_coords(const SparseVector& v_q2) const;
    // kernel-basis coordinates -> quotient coordinates
    SparseVector k3_lift(const SparseVector& v_k3) const;
    SparseVector k2_lift(const SparseVector& v_k2) const;

    int dimK3() const { return K3.rank(); }
    int dimK2() const { return K2.rank(); }
    int dimK1() const { return A1.dim(); }
};

// Builds algebras, ideals, quotients, barred maps and kernels; throws on
// structural failure (e.g. a structure map not well defined on the quotient).
Cat2AlgebraBundle quotient_cat2(std::shared_ptr<const GrayGroupoid> g,
                                const Field& f,
                                const GeneratorFamilies& fam = {},
                                bool parallel = true);

// Pre-quotient facts: kernel bases v22/w22, their dimensions, the *2
// involution identity, and a nonzero kernel product when |L| > 1.
StageReport kernel_basis_lemma_check(const Cat2AlgebraBundle& b);

// Post-quotient facts: well-definedness, both kernel-condition directions,
// quotient relation instances, two-sidedness of the ideals.
StageReport quotient_checks(const Cat2AlgebraBundle& b);

// Functoriality: the induced morphism on quotient algebras for a levelwise
// module automorphism, plus the composition law.
struct BundleMorphism {
    LinMap on_q3, on_q2, on_a1;
};
BundleMorphism kbar_on_morphism(const Cat2AlgebraBundle& b,
                                const ModuleAutomorphism& phi);
StageReport functoriality_check(const Cat2AlgebraBundle& b);

}  // namespace graycat
