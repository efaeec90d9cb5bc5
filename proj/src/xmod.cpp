#include "graycat/xmod.hpp"

#include <functional>
#include <sstream>
#include <stdexcept>

namespace graycat {

namespace {

std::string w2(const FiniteGroup& a, Elem x, const FiniteGroup& b, Elem y) {
    return "(" + a.name(x) + ", " + b.name(y) + ")";
}
std::string w3(const FiniteGroup& a, Elem x, const FiniteGroup& b, Elem y,
               const FiniteGroup& c, Elem z) {
    return "(" + a.name(x) + ", " + b.name(y) + ", " + c.name(z) + ")";
}

}  // namespace

std::vector<std::vector<Elem>> trivial_lifting(const FiniteGroup& L,
                                               const FiniteGroup& M) {
    return std::vector<std::vector<Elem>>(M.order,
                                          std::vector<Elem>(M.order, L.identity));
}

StageReport verify_crossed_module(const CrossedModule& x) {
    validate_group(*x.M);
    validate_group(*x.N);
    validate_hom(x.boundary);
    validate_action(x.action);
    const FiniteGroup& M = *x.M;
    const FiniteGroup& N = *x.N;

    StageReport rep;
    rep.stage = "axioms";

    CheckRecord cm1{"axiom-cm1", "boundary equivariance: d(n.m) = n d(m) n^-1"};
    cm1.pass = true;
    for (int n = 0; n < N.order && cm1.pass; ++n)
        for (int m = 0; m < M.order && cm1.pass; ++m) {
            Elem lhs = x.boundary(x.action.act(n, m));
            Elem rhs = N.times(N.times(n, x.boundary(m)), N.inverse(n));
            if (lhs != rhs) {
                cm1.pass = false;
                cm1.witness = w2(N, n, M, m);
            }
        }
    rep.add(cm1);

    CheckRecord cm2{"axiom-cm2", "Peiffer identity: d(m).m' = m m' m^-1"};
    cm2.pass = true;
    for (int m = 0; m < M.order && cm2.pass; ++m)
        for (int m2 = 0; m2 < M.order && cm2.pass; ++m2) {
            Elem lhs = x.action.act(x.boundary(m), m2);
            Elem rhs = M.times(M.times(m, m2), M.inverse(m));
            if (lhs != rhs) {
                cm2.pass = false;
                cm2.witness = w2(M, m, M, m2);
            }
        }
    rep.add(cm2);
    return rep;
}

StageReport verify_2xm(const TwoCrossedModule& x) {
    validate_group(*x.L);
    validate_group(*x.M);
    validate_group(*x.N);
    validate_hom(x.d2);
    validate_hom(x.d1);
    validate_action(x.actNM);
    validate_action(x.actNL);
    const FiniteGroup& L = *x.L;
    const FiniteGroup& M = *x.M;
    const FiniteGroup& N = *x.N;
    if (static_cast<int>(x.lifting.size()) != M.order)
        throw std::invalid_argument("lifting: row count != |M|");
    for (const auto& row : x.lifting) {
        if (static_cast<int>(row.size()) != M.order)
            throw std::invalid_argument("lifting: ragged row");
        for (Elem l : row)
            if (l < 0 || l >= L.order)
                throw std::invalid_argument("lifting: value out of range");
    }

    StageReport rep;
    rep.stage = "axioms";

    CheckRecord comp{"axiom-d1d2", "composite d1 o d2 is trivial"};
    comp.pass = true;
    for (int l = 0; l < L.order && comp.pass; ++l)
        if (x.d1(x.d2(l)) != N.identity) {
            comp.pass = false;
            comp.witness = L.name(l);
        }
    rep.add(comp);

    CheckRecord eq2{"axiom-d2-equivariant", "d2(n.l) = n.(d2 l)"};
    eq2.pass = true;
    for (int n = 0; n < N.order && eq2.pass; ++n)
        for (int l = 0; l < L.order && eq2.pass; ++l)
            if (x.d2(x.actNL.act(n, l)) != x.actNM.act(n, x.d2(l))) {
                eq2.pass = false;
                eq2.witness = w2(N, n, L, l);
            }
    rep.add(eq2);

    CheckRecord eq1{"axiom-d1-equivariant", "d1(n.m) = n d1(m) n^-1"};
    eq1.pass = true;
    for (int n = 0; n < N.order && eq1.pass; ++n)
        for (int m = 0; m < M.order && eq1.pass; ++m)
            if (x.d1(x.actNM.act(n, m)) !=
                N.times(N.times(n, x.d1(m)), N.inverse(n))) {
                eq1.pass = false;
                eq1.witness = w2(N, n, M, m);
            }
    rep.add(eq1);

    CheckRecord a1{"axiom-2cm1", "d2{m,m'} = (d1(m).m') m m'^-1 m^-1"};
    a1.pass = true;
    for (int m = 0; m < M.order && a1.pass; ++m)
        for (int m2 = 0; m2 < M.order && a1.pass; ++m2) {
            Elem lhs = x.d2(x.lift(m, m2));
            Elem rhs = M.times(M.times(x.actNM.act(x.d1(m), m2), m),
                               M.times(M.inverse(m2), M.inverse(m)));
            if (lhs != rhs) {
                a1.pass = false;
                a1.witness = w2(M, m, M, m2);
            }
        }
    rep.add(a1);

    CheckRecord a2{"axiom-2cm2", "{d2 l, d2 l'} = [l', l]"};
    a2.pass = true;
    for (int l = 0; l < L.order && a2.pass; ++l)
        for (int l2 = 0; l2 < L.order && a2.pass; ++l2)
            if (x.lift(x.d2(l), x.d2(l2)) != commutator(L, l2, l)) {
                a2.pass = false;
                a2.witness = w2(L, l, L, l2);
            }
    rep.add(a2);

    CheckRecord a3i{"axiom-2cm3i", "{m m', m''} = d1(m).{m', m''} * {m, m' m'' m'^-1}"};
    a3i.pass = true;
    for (int m = 0; m < M.order && a3i.pass; ++m)
        for (int m2 = 0; m2 < M.order && a3i.pass; ++m2)
            for (int m3 = 0; m3 < M.order && a3i.pass; ++m3) {
                Elem lhs = x.lift(M.times(m, m2), m3);
                Elem conj = M.times(M.times(m2, m3), M.inverse(m2));
                Elem rhs = L.times(x.actNL.act(x.d1(m), x.lift(m2, m3)),
                                   x.lift(m, conj));
                if (lhs != rhs) {
                    a3i.pass = false;
                    a3i.witness = w3(M, m, M, m2, M, m3);
                }
            }
    rep.add(a3i);

    CheckRecord a3ii{"axiom-2cm3ii", "{m, m' m''} = {m, m'} * (m m' m^-1).{m, m''}"};
    a3ii.pass = true;
    for (int m = 0; m < M.order && a3ii.pass; ++m)
        for (int m2 = 0; m2 < M.order && a3ii.pass; ++m2)
            for (int m3 = 0; m3 < M.order && a3ii.pass; ++m3) {
                Elem lhs = x.lift(m, M.times(m2, m3));
                Elem conj = M.times(M.times(m, m2), M.inverse(m));
                Elem rhs = L.times(x.lift(m, m2), x.act_ml(conj, x.lift(m, m3)));
                if (lhs != rhs) {
                    a3ii.pass = false;
                    a3ii.witness = w3(M, m, M, m2, M, m3);
                }
            }
    rep.add(a3ii);

    CheckRecord a4{"axiom-2cm4", "{m, d2 l} * {d2 l, m} = (d1(m).l) l^-1"};
    a4.pass = true;
    for (int m = 0; m < M.order && a4.pass; ++m)
        for (int l = 0; l < L.order && a4.pass; ++l) {
            Elem lhs = L.times(x.lift(m, x.d2(l)), x.lift(x.d2(l), m));
            Elem rhs = L.times(x.actNL.act(x.d1(m), l), L.inverse(l));
            if (lhs != rhs) {
                a4.pass = false;
                a4.witness = w2(M, m, L, l);
            }
        }
    rep.add(a4);

    CheckRecord a5{"axiom-2cm5", "n.{m, m'} = {n.m, n.m'}"};
    a5.pass = true;
    for (int n = 0; n < N.order && a5.pass; ++n)
        for (int m = 0; m < M.order && a5.pass; ++m)
            for (int m2 = 0; m2 < M.order && a5.pass; ++m2)
                if (x.actNL.act(n, x.lift(m, m2)) !=
                    x.lift(x.actNM.act(n, m), x.actNM.act(n, m2))) {
                    a5.pass = false;
                    a5.witness = w3(N, n, M, m, M, m2);
                }
    rep.add(a5);

    return rep;
}

TwoCrossedModule from_crossed_module(const CrossedModule& x) {
    auto axioms = verify_crossed_module(x);
    if (!axioms.passed()) {
        const CheckRecord* f = nullptr;
        for (const auto& c : axioms.checks)
            if (!c.pass) {
                f = &c;
                break;
            }
        throw std::invalid_argument("from_crossed_module: input fails " +
                                    (f ? f->id + " at " + f->witness : std::string()));
    }
    TwoCrossedModule t;
    t.L = std::make_shared<FiniteGroup>(trivial_group());
    t.M = x.M;
    t.N = x.N;
    t.d2 = trivial_hom(*t.L, *t.M);
    t.d1 = x.boundary;
    t.actNM = x.action;
    t.actNL = trivial_action(*t.N, *t.L);
    t.lifting = trivial_lifting(*t.L, *t.M);
    return t;
}

std::vector<TwoCrossedModule> search_peiffer_liftings(
    std::shared_ptr<FiniteGroup> L, std::shared_ptr<FiniteGroup> M,
    std::shared_ptr<FiniteGroup> N, const GroupHom& d2, const GroupHom& d1,
    const GroupAction& actNM, const GroupAction& actNL, int limit,
    long long node_budget) {
    const int mo = M->order;
    std::vector<std::vector<Elem>> table(mo, std::vector<Elem>(mo, -1));
    std::vector<TwoCrossedModule> results;
    long long nodes = 0;

    // candidate values for entry (m, m') must satisfy the boundary axiom
    auto boundary_target = [&](Elem m, Elem m2) {
        return M->times(M->times(actNM.act(d1(m), m2), m),
                        M->times(M->inverse(m2), M->inverse(m)));
    };

    // local 2CM2 constraint at the already-filled corner of im(d2) x im(d2)
    auto cm2_ok = [&](Elem m, Elem m2, Elem v) {
        for (int l = 0; l < L->order; ++l)
            for (int l2 = 0; l2 < L->order; ++l2)
                if (d2(l) == m && d2(l2) == m2 && v != commutator(*L, l2, l))
                    return false;
        return true;
    };

    std::function<bool(int)> rec = [&](int pos) -> bool {
        if (static_cast<int>(results.size()) >= limit) return true;
        if (++nodes > node_budget)
            throw std::runtime_error("search_peiffer_liftings: node budget exceeded");
        if (pos == mo * mo) {
            TwoCrossedModule cand;
            cand.L = L;
            cand.M = M;
            cand.N = N;
            cand.d2 = d2;
            cand.d1 = d1;
            cand.actNM = actNM;
            cand.actNL = actNL;
            cand.lifting = table;
            if (verify_2xm(cand).passed()) results.push_back(std::move(cand));
            return static_cast<int>(results.size()) >= limit;
        }
        Elem m = pos / mo, m2 = pos % mo;
        if (table[m][m2] >= 0) return rec(pos + 1);  // fixed by equivariance
        for (int v = 0; v < L->order; ++v) {
            if (d2(v) != boundary_target(m, m2)) continue;
            if (!cm2_ok(m, m2, v)) continue;
            // propagate 2CM5: the N-orbit of (m, m') is determined
            std::vector<std::pair<int, int>> assigned;
            bool consistent = true;
            for (int n = 0; n < N->order && consistent; ++n) {
                Elem am = actNM.act(n, m), am2 = actNM.act(n, m2);
                Elem av = actNL.act(n, v);
                if (table[am][am2] < 0) {
                    table[am][am2] = av;
                    assigned.emplace_back(am, am2);
                } else if (table[am][am2] != av) {
                    consistent = false;
                }
            }
            if (consistent && rec(pos + 1)) {
                // keep going to collect up to `limit`, unless full
                if (static_cast<int>(results.size()) >= limit) {
                    for (auto [a, b] : assigned) table[a][b] = -1;
                    return true;
                }
            }
            for (auto [a, b] : assigned) table[a][b] = -1;
        }
        return false;
    };
    rec(0);
    return results;
}

bool ModuleAutomorphism::is_identity() const {
    for (size_t i = 0; i < fL.size(); ++i)
        if (fL[i] != static_cast<Elem>(i)) return false;
    for (size_t i = 0; i < fM.size(); ++i)
        if (fM[i] != static_cast<Elem>(i)) return false;
    for (size_t i = 0; i < fN.size(); ++i)
        if (fN[i] != static_cast<Elem>(i)) return false;
    return true;
}

std::vector<ModuleAutomorphism> module_automorphisms(const TwoCrossedModule& x,
                                                     int max_results) {
    auto autL = automorphisms(*x.L);
    auto autM = automorphisms(*x.M);
    auto autN = automorphisms(*x.N);
    std::vector<ModuleAutomorphism> out;
    for (const auto& fL : autL)
        for (const auto& fM : autM)
            for (const auto& fN : autN) {
                bool ok = true;
                for (int l = 0; l < x.L->order && ok; ++l)
                    ok = fM[x.d2(l)] == x.d2(fL[l]);
                for (int m = 0; m < x.M->order && ok; ++m)
                    ok = fN[x.d1(m)] == x.d1(fM[m]);
                for (int n = 0; n < x.N->order && ok; ++n) {
                    for (int m = 0; m < x.M->order && ok; ++m)
                        ok = fM[x.actNM.act(n, m)] == x.actNM.act(fN[n], fM[m]);
                    for (int l = 0; l < x.L->order && ok; ++l)
                        ok = fL[x.actNL.act(n, l)] == x.actNL.act(fN[n], fL[l]);
                }
                for (int m = 0; m < x.M->order && ok; ++m)
                    for (int m2 = 0; m2 < x.M->order && ok; ++m2)
                        ok = fL[x.lift(m, m2)] == x.lift(fM[m], fM[m2]);
                if (ok) {
                    out.push_back({fL, fM, fN});
                    if (static_cast<int>(out.size()) >= max_results) return out;
                }
            }
    return out;
}

}  // namespace graycat
