#include "graycat/group.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <queue>
#include <set>
#include <sstream>
#include <stdexcept>

namespace graycat {

namespace {

[[noreturn]] void fail(const std::string& msg) { throw std::invalid_argument(msg); }

}  // namespace

void validate_group(const FiniteGroup& g) {
    const int n = g.order;
    if (n <= 0) fail("group: nonpositive order");
    if (static_cast<int>(g.mul.size()) != n) fail("group: table row count != order");
    for (int a = 0; a < n; ++a) {
        if (static_cast<int>(g.mul[a].size()) != n) fail("group: ragged table row");
        for (int b = 0; b < n; ++b) {
            Elem c = g.mul[a][b];
            if (c < 0 || c >= n) fail("group: table entry out of range");
        }
    }
    for (int a = 0; a < n; ++a)
        if (g.mul[g.identity][a] != a || g.mul[a][g.identity] != a)
            fail("group: identity law fails at element " + std::to_string(a));
    if (static_cast<int>(g.inv.size()) != n) fail("group: inverse table size");
    for (int a = 0; a < n; ++a)
        if (g.mul[a][g.inv[a]] != g.identity || g.mul[g.inv[a]][a] != g.identity)
            fail("group: inverse law fails at element " + std::to_string(a));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (g.mul[g.mul[a][b]][c] != g.mul[a][g.mul[b][c]]) {
                    std::ostringstream os;
                    os << "group: associativity fails at (" << a << "," << b << "," << c
                       << ")";
                    fail(os.str());
                }
}

FiniteGroup group_from_table(std::vector<std::vector<Elem>> table,
                             std::vector<std::string> names, int order_cap) {
    FiniteGroup g;
    g.order = static_cast<int>(table.size());
    if (g.order > order_cap) fail("group: order exceeds cap");
    if (g.order == 0) fail("group: empty table");
    for (const auto& row : table) {
        if (row.size() != table.size()) fail("group: table is not square");
        for (Elem e : row)
            if (e < 0 || e >= g.order) fail("group: table entry out of range");
    }
    g.mul = std::move(table);
    // find the identity
    int id = -1;
    for (int e = 0; e < g.order; ++e) {
        bool ok = true;
        for (int a = 0; a < g.order && ok; ++a)
            ok = (g.mul[e].size() == static_cast<size_t>(g.order)) &&
                 g.mul[e][a] == a && g.mul[a][e] == a;
        if (ok) {
            id = e;
            break;
        }
    }
    if (id < 0) fail("group: no identity element in table");
    g.identity = id;
    g.inv.assign(g.order, -1);
    for (int a = 0; a < g.order; ++a)
        for (int b = 0; b < g.order; ++b)
            if (g.mul[a][b] == id) g.inv[a] = b;
    for (int a = 0; a < g.order; ++a)
        if (g.inv[a] < 0) fail("group: element without inverse in table");
    g.names = std::move(names);
    validate_group(g);
    return g;
}

FiniteGroup trivial_group() {
    return group_from_table({{0}}, {"1"});
}

FiniteGroup cyclic_group(int n) {
    std::vector<std::vector<Elem>> t(n, std::vector<Elem>(n));
    std::vector<std::string> names(n);
    for (int a = 0; a < n; ++a) {
        names[a] = "g^" + std::to_string(a);
        for (int b = 0; b < n; ++b) t[a][b] = (a + b) % n;
    }
    names[0] = "1";
    return group_from_table(std::move(t), std::move(names));
}

std::vector<int> parse_permutation(const std::string& text, int degree) {
    std::vector<int> img(degree);
    for (int i = 0; i < degree; ++i) img[i] = i;
    size_t pos = 0;
    while (pos < text.size()) {
        while (pos < text.size() && (text[pos] == ' ' || text[pos] == ',')) ++pos;
        if (pos >= text.size()) break;
        if (text[pos] != '(') fail("permutation: expected '(' in \"" + text + "\"");
        ++pos;
        std::vector<int> cycle;
        std::string num;
        while (pos < text.size() && text[pos] != ')') {
            char c = text[pos];
            if (c >= '0' && c <= '9') {
                num += c;
            } else if (c == ' ' || c == ',') {
                if (!num.empty()) {
                    cycle.push_back(std::stoi(num) - 1);
                    num.clear();
                }
            } else {
                fail("permutation: bad character in \"" + text + "\"");
            }
            ++pos;
        }
        if (pos >= text.size()) fail("permutation: unbalanced '(' in \"" + text + "\"");
        ++pos;  // skip ')'
        if (!num.empty()) cycle.push_back(std::stoi(num) - 1);
        for (int p : cycle)
            if (p < 0 || p >= degree) fail("permutation: point out of range");
        for (size_t k = 0; k < cycle.size(); ++k)
            img[cycle[k]] = cycle[(k + 1) % cycle.size()];
    }
    return img;
}

FiniteGroup group_from_permutations(const std::vector<std::vector<int>>& gens,
                                    int degree, int order_cap) {
    auto compose = [degree](const std::vector<int>& a, const std::vector<int>& b) {
        // (a*b)(x) = a(b(x))
        std::vector<int> r(degree);
        for (int x = 0; x < degree; ++x) r[x] = a[b[x]];
        return r;
    };
    std::vector<int> identity(degree);
    for (int i = 0; i < degree; ++i) identity[i] = i;

    std::set<std::vector<int>> seen;
    std::queue<std::vector<int>> todo;
    seen.insert(identity);
    todo.push(identity);
    for (const auto& g : gens) {
        if (static_cast<int>(g.size()) != degree) fail("permutation: wrong degree");
        if (seen.insert(g).second) todo.push(g);
    }
    while (!todo.empty()) {
        auto cur = todo.front();
        todo.pop();
        for (const auto& gen : gens) {
            for (auto prod : {compose(cur, gen), compose(gen, cur)}) {
                if (seen.insert(prod).second) {
                    if (static_cast<int>(seen.size()) > order_cap)
                        fail("group: permutation closure exceeds order cap");
                    todo.push(prod);
                }
            }
        }
    }
    std::vector<std::vector<int>> elems(seen.begin(), seen.end());  // sorted
    std::map<std::vector<int>, int> index;
    for (size_t i = 0; i < elems.size(); ++i) index[elems[i]] = static_cast<int>(i);
    int n = static_cast<int>(elems.size());
    std::vector<std::vector<Elem>> table(n, std::vector<Elem>(n));
    std::vector<std::string> names(n);
    for (int a = 0; a < n; ++a) {
        std::string nm = "[";
        for (int x = 0; x < degree; ++x) nm += std::to_string(elems[a][x] + 1) + (x + 1 < degree ? " " : "");
        names[a] = nm + "]";
        for (int b = 0; b < n; ++b) table[a][b] = index[compose(elems[a], elems[b])];
    }
    return group_from_table(std::move(table), std::move(names), order_cap);
}

void validate_hom(const GroupHom& h) {
    const FiniteGroup& s = *h.source;
    const FiniteGroup& t = *h.target;
    if (static_cast<int>(h.map.size()) != s.order) fail("hom: map size != source order");
    for (Elem a : h.map)
        if (a < 0 || a >= t.order) fail("hom: image out of range");
    if (h.map[s.identity] != t.identity) fail("hom: identity not preserved");
    for (int a = 0; a < s.order; ++a)
        for (int b = 0; b < s.order; ++b)
            if (h.map[s.times(a, b)] != t.times(h.map[a], h.map[b])) {
                std::ostringstream os;
                os << "hom: multiplicativity fails at (" << a << "," << b << ")";
                fail(os.str());
            }
}

void validate_action(const GroupAction& a) {
    const FiniteGroup& n = *a.actor;
    const FiniteGroup& m = *a.acted;
    if (static_cast<int>(a.map.size()) != n.order) fail("action: actor dimension");
    for (const auto& row : a.map) {
        if (static_cast<int>(row.size()) != m.order) fail("action: acted dimension");
        for (Elem x : row)
            if (x < 0 || x >= m.order) fail("action: image out of range");
    }
    for (int x = 0; x < m.order; ++x)
        if (a.map[n.identity][x] != x) fail("action: identity acts nontrivially");
    for (int p = 0; p < n.order; ++p)
        for (int q = 0; q < n.order; ++q)
            for (int x = 0; x < m.order; ++x)
                if (a.map[n.times(p, q)][x] != a.map[p][a.map[q][x]])
                    fail("action: not a left action at (" + std::to_string(p) + "," +
                         std::to_string(q) + "," + std::to_string(x) + ")");
    for (int p = 0; p < n.order; ++p)
        for (int x = 0; x < m.order; ++x)
            for (int y = 0; y < m.order; ++y)
                if (a.map[p][m.times(x, y)] != m.times(a.map[p][x], a.map[p][y]))
                    fail("action: not by automorphisms at actor " + std::to_string(p));
}

GroupHom trivial_hom(const FiniteGroup& src, const FiniteGroup& dst) {
    GroupHom h;
    h.source = &src;
    h.target = &dst;
    h.map.assign(src.order, dst.identity);
    return h;
}

GroupHom identity_hom(const FiniteGroup& g) {
    GroupHom h;
    h.source = &g;
    h.target = &g;
    h.map.resize(g.order);
    for (int i = 0; i < g.order; ++i) h.map[i] = i;
    return h;
}

GroupAction trivial_action(const FiniteGroup& actor, const FiniteGroup& acted) {
    GroupAction a;
    a.actor = &actor;
    a.acted = &acted;
    a.map.assign(actor.order, std::vector<Elem>(acted.order));
    for (auto& row : a.map)
        for (int i = 0; i < acted.order; ++i) row[i] = i;
    return a;
}

Elem multiply(const FiniteGroup& g, Elem a, Elem b) {
    if (a < 0 || a >= g.order || b < 0 || b >= g.order)
        throw std::out_of_range("multiply: element index out of range");
    return g.mul[a][b];
}

FiniteGroup semidirect2(const FiniteGroup& M, const FiniteGroup& N,
                        const GroupAction& act, PairCodec* codec_out) {
    validate_action(act);
    if (act.actor != &N || act.acted != &M) fail("semidirect2: action groups mismatch");
    PairCodec c{M.order, N.order};
    int n = M.order * N.order;
    std::vector<std::vector<Elem>> table(n, std::vector<Elem>(n));
    std::vector<std::string> names(n);
    for (int i = 0; i < n; ++i) {
        Elem m = c.m_of(i), nn = c.n_of(i);
        names[i] = "(" + M.name(m) + "," + N.name(nn) + ")";
        for (int j = 0; j < n; ++j) {
            Elem m2 = c.m_of(j), n2 = c.n_of(j);
            table[i][j] = c.encode(M.times(m, act.act(nn, m2)), N.times(nn, n2));
        }
    }
    if (codec_out) *codec_out = c;
    return group_from_table(std::move(table), std::move(names),
                            std::max(n, kDefaultGroupOrderCap));
}

Elem m_act_l(const FiniteGroup& L, const GroupHom& d2,
             const std::vector<std::vector<Elem>>& lifting, Elem m, Elem l) {
    return L.times(lifting[d2(l)][m], l);
}

FiniteGroup semidirect3(const FiniteGroup& L, const FiniteGroup& M,
                        const FiniteGroup& N, const GroupAction& actNM,
                        const GroupAction& actNL,
                        const std::vector<std::vector<Elem>>& lifting,
                        const GroupHom& d2, TripleCodec* codec_out) {
    TripleCodec c{L.order, M.order, N.order};
    int n = L.order * M.order * N.order;
    std::vector<std::vector<Elem>> table(n, std::vector<Elem>(n));
    std::vector<std::string> names(n);
    for (int i = 0; i < n; ++i) {
        Elem l = c.l_of(i), m = c.m_of(i), nn = c.n_of(i);
        names[i] = "(" + L.name(l) + "," + M.name(m) + "," + N.name(nn) + ")";
        for (int j = 0; j < n; ++j) {
            Elem l2 = c.l_of(j), m2 = c.m_of(j), n2 = c.n_of(j);
            Elem nl2 = actNL.act(nn, l2);
            table[i][j] = c.encode(L.times(l, m_act_l(L, d2, lifting, m, nl2)),
                                   M.times(m, actNM.act(nn, m2)), N.times(nn, n2));
        }
    }
    if (codec_out) *codec_out = c;
    // group_from_table exhaustively checks associativity; a failure here signals
    // an inconsistent action convention for this input.
    return group_from_table(std::move(table), std::move(names),
                            std::max(n, kDefaultGroupOrderCap));
}

std::vector<std::vector<Elem>> automorphisms(const FiniteGroup& g) {
    // backtracking over images of all elements in index order, pruning with the
    // partial multiplication constraint
    std::vector<std::vector<Elem>> out;
    std::vector<Elem> img(g.order, -1);
    std::vector<bool> used(g.order, false);
    img[g.identity] = g.identity;
    used[g.identity] = true;

    // order of assignment: all non-identity elements
    std::vector<int> slots;
    for (int i = 0; i < g.order; ++i)
        if (i != g.identity) slots.push_back(i);

    auto consistent = [&](int just_set) {
        for (int a = 0; a < g.order; ++a) {
            if (img[a] < 0) continue;
            for (int b : {just_set}) {
                if (img[b] < 0) continue;
                Elem ab = g.times(a, b);
                if (img[ab] >= 0 && img[ab] != g.times(img[a], img[b])) return false;
                Elem ba = g.times(b, a);
                if (img[ba] >= 0 && img[ba] != g.times(img[b], img[a])) return false;
            }
        }
        return true;
    };

    std::function<void(size_t)> rec = [&](size_t k) {
        if (k == slots.size()) {
            // full bijective multiplicative map
            out.push_back(img);
            return;
        }
        int a = slots[k];
        for (int v = 0; v < g.order; ++v) {
            if (used[v]) continue;
            img[a] = v;
            used[v] = true;
            if (consistent(a)) rec(k + 1);
            used[v] = false;
            img[a] = -1;
        }
    };
    rec(0);
    // final filter: full homomorphism check
    std::vector<std::vector<Elem>> verified;
    for (auto& f : out) {
        bool ok = true;
        for (int a = 0; a < g.order && ok; ++a)
            for (int b = 0; b < g.order && ok; ++b)
                ok = f[g.times(a, b)] == g.times(f[a], f[b]);
        if (ok) verified.push_back(f);
    }
    return verified;
}

std::optional<std::vector<Elem>> find_isomorphism(const FiniteGroup& a,
                                                  const FiniteGroup& b) {
    if (a.order != b.order) return std::nullopt;
    std::vector<Elem> img(a.order, -1);
    std::vector<bool> used(b.order, false);
    img[a.identity] = b.identity;
    used[b.identity] = true;
    std::vector<int> slots;
    for (int i = 0; i < a.order; ++i)
        if (i != a.identity) slots.push_back(i);

    std::function<bool(size_t)> rec = [&](size_t k) -> bool {
        if (k == slots.size()) {
            for (int x = 0; x < a.order; ++x)
                for (int y = 0; y < a.order; ++y)
                    if (img[a.times(x, y)] != b.times(img[x], img[y])) return false;
            return true;
        }
        int x = slots[k];
        for (int v = 0; v < b.order; ++v) {
            if (used[v]) continue;
            img[x] = v;
            used[v] = true;
            bool ok = true;
            for (int y = 0; y < a.order && ok; ++y) {
                if (img[y] < 0) continue;
                Elem xy = a.times(x, y), yx = a.times(y, x);
                if (img[xy] >= 0 && img[xy] != b.times(img[x], img[y])) ok = false;
                if (ok && img[yx] >= 0 && img[yx] != b.times(img[y], img[x])) ok = false;
            }
            if (ok && rec(k + 1)) return true;
            used[v] = false;
            img[x] = -1;
        }
        return false;
    };
    if (rec(0)) return img;
    return std::nullopt;
}

}  // namespace graycat
