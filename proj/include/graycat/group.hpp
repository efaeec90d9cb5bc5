#pragma once

#include <optional>
#include <string>
#include <vector>

namespace graycat {

using Elem = int;

// Finite group as a dense multiplication table over 0-based element indices.
struct FiniteGroup {
    int order = 0;
    std::vector<std::vector<Elem>> mul;  // mul[a][b] = a*b
    Elem identity = 0;
    std::vector<Elem> inv;
    std::vector<std::string> names;  // optional display labels

    Elem times(Elem a, Elem b) const { return mul[a][b]; }
    Elem inverse(Elem a) const { return inv[a]; }
    std::string name(Elem a) const {
        return names.empty() ? std::to_string(a) : names[a];
    }
    bool is_trivial() const { return order == 1; }
};

struct GroupHom {
    const FiniteGroup* source = nullptr;
    const FiniteGroup* target = nullptr;
    std::vector<Elem> map;  // source index -> target index

    Elem operator()(Elem a) const { return map[a]; }
};

// Left action of `actor` on `acted` by automorphisms: map[n][m] = "n·m".
struct GroupAction {
    const FiniteGroup* actor = nullptr;
    const FiniteGroup* acted = nullptr;
    std::vector<std::vector<Elem>> map;

    Elem act(Elem n, Elem m) const { return map[n][m]; }
};

// Element order cap guarding table memory (configurable).
inline constexpr int kDefaultGroupOrderCap = 512;

// --- construction -----------------------------------------------------------

FiniteGroup group_from_table(std::vector<std::vector<Elem>> table,
                             std::vector<std::string> names = {},
                             int order_cap = kDefaultGroupOrderCap);

FiniteGroup trivial_group();
FiniteGroup cyclic_group(int n);

// Permutations given as one-line images on {0..degree-1}; the group is the
// closure of the generators, elements ordered lexicographically by image.
FiniteGroup group_from_permutations(const std::vector<std::vector<int>>& gens,
                                    int degree,
                                    int order_cap = kDefaultGroupOrderCap);

// Parse cycle notation like "(1 2)(3 4)" over points 1..degree (1-based).
std::vector<int> parse_permutation(const std::string& text, int degree);

// --- validation -------------------------------------------------------------

// Throws std::invalid_argument with a witness description on violation.
void validate_group(const FiniteGroup& g);
void validate_hom(const GroupHom& h);
void validate_action(const GroupAction& a);

GroupHom trivial_hom(const FiniteGroup& src, const FiniteGroup& dst);
GroupHom identity_hom(const FiniteGroup& g);
GroupAction trivial_action(const FiniteGroup& actor, const FiniteGroup& acted);

// --- plain operations -------------------------------------------------------

Elem multiply(const FiniteGroup& g, Elem a, Elem b);

// Commutator [a,b] = a b a^-1 b^-1.
inline Elem commutator(const FiniteGroup& g, Elem a, Elem b) {
    return g.times(g.times(a, b), g.times(g.inverse(a), g.inverse(b)));
}

// --- semidirect products ----------------------------------------------------

// Pair/triple codecs: index = m + |M|*n, resp. l + |L|*(m + |M|*n).
struct PairCodec {
    int size_m = 0, size_n = 0;
    int encode(Elem m, Elem n) const { return m + size_m * n; }
    Elem m_of(int i) const { return i % size_m; }
    Elem n_of(int i) const { return i / size_m; }
};
struct TripleCodec {
    int size_l = 0, size_m = 0, size_n = 0;
    int encode(Elem l, Elem m, Elem n) const { return l + size_l * (m + size_m * n); }
    Elem l_of(int i) const { return i % size_l; }
    Elem m_of(int i) const { return (i / size_l) % size_m; }
    Elem n_of(int i) const { return i / (size_l * size_m); }
};

// (m,n)(m',n') = (m * n·m', n n')
FiniteGroup semidirect2(const FiniteGroup& M, const FiniteGroup& N,
                        const GroupAction& act, PairCodec* codec_out = nullptr);

// The action of M on L induced by a Peiffer lifting: m·l := {d2(l), m} * l.
Elem m_act_l(const FiniteGroup& L, const GroupHom& d2,
             const std::vector<std::vector<Elem>>& lifting, Elem m, Elem l);

// (l,m,n)(l',m',n') = (l * m·(n·l'), m * n·m', n n'); associativity is
// verified constructively and failure is a hard error.
FiniteGroup semidirect3(const FiniteGroup& L, const FiniteGroup& M,
                        const FiniteGroup& N, const GroupAction& actNM,
                        const GroupAction& actNL,
                        const std::vector<std::vector<Elem>>& lifting,
                        const GroupHom& d2, TripleCodec* codec_out = nullptr);

// All automorphisms of g (brute force; intended for small groups).
std::vector<std::vector<Elem>> automorphisms(const FiniteGroup& g);

// Search for an isomorphism between two groups (brute force backtracking).
std::optional<std::vector<Elem>> find_isomorphism(const FiniteGroup& a,
                                                  const FiniteGroup& b);

}  // namespace graycat
