// Acceptance gate: one PASS/FAIL line per criterion, exact arithmetic, zero
// tolerance. A criterion that cannot be satisfied by the bundled corpus is
// reported as an honest FAIL with the mathematical reason, never silenced.

#include <cstdio>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "fixtures_util.hpp"
#include "graycat/pipeline.hpp"

using namespace graycat;

namespace {

const Field F0{0};

const std::vector<std::string> kPositive = {
    "trivial", "z2-triv", "z2-id", "z3-id", "z4-id",
    "s3-z3",   "s3-comm", "z3-z3-z2-inv"};
const std::vector<std::string> kEmbedded = {"z2-id", "z3-id", "z4-id", "s3-z3"};

struct Criterion {
    int id;
    std::string title;
    bool pass = true;
    std::vector<std::string> notes;

    void fail(const std::string& why) {
        pass = false;
        notes.push_back(why);
    }
    void note(const std::string& s) { notes.push_back(s); }
};

// collects non-informational failures of a report into the criterion
void absorb(Criterion& c, const std::string& fixture, const StageReport& r) {
    for (const auto& ch : r.checks)
        if (!ch.pass && !ch.informational)
            c.fail(fixture + ": " + ch.id +
                   (ch.witness.empty() ? "" : " at " + ch.witness));
}

std::shared_ptr<const GrayGroupoid> gray_of(const std::string& name) {
    return std::make_shared<GrayGroupoid>(theta(load_module(name)));
}

Criterion criterion1() {
    Criterion c{1, "axiom suite: positives pass, negatives fail with witnesses"};
    for (const auto& name : kPositive) {
        StageReport r = verify_2xm(load_module(name));
        absorb(c, name, r);
    }
    {
        StageReport r = verify_2xm(load_module("neg-lifting"));
        bool hit = false;
        for (const auto& ch : r.checks)
            if (ch.id == "axiom-2cm2" && !ch.pass && !ch.witness.empty()) hit = true;
        if (!hit) c.fail("neg-lifting: expected a witnessed axiom-2cm2 failure");
    }
    {
        StageReport r = verify_crossed_module(to_crossed_module(load_fixture("neg-cm2")));
        bool hit = false;
        for (const auto& ch : r.checks)
            if (ch.id == "axiom-cm2" && !ch.pass && !ch.witness.empty()) hit = true;
        if (!hit) c.fail("neg-cm2: expected a witnessed axiom-cm2 failure");
    }
    return c;
}

Criterion criterion2() {
    Criterion c{2, "3-groupoid suite: composition laws, interchange, kernel "
                   "commutators, horizontal-composite witness"};
    for (const auto& name : kPositive) {
        GrayGroupoid g = theta(load_module(name));
        absorb(c, name, verify_gray(g));
        absorb(c, name, cat2_kernel_check(g));
    }
    // required sub-check: a pair of 2-cells with different horizontal
    // composites on the conjugation fixture over S3
    {
        GrayGroupoid g = theta(load_module("s3-z3"));
        bool witness = false;
        for (int i = 0; i < g.C2->order && !witness; ++i)
            for (int j = 0; j < g.C2->order && !witness; ++j)
                if (hcomp2_lower(g, g.decode2(i), g.decode2(j)) !=
                    hcomp2_upper(g, g.decode2(i), g.decode2(j)))
                    witness = true;
        if (!witness) {
            c.fail("s3-z3: no pair of 2-cells with distinct horizontal "
                   "composites exists (exhaustively checked)");
            c.note("reason: the middle-level group Z/3 is abelian and the "
                   "boundary image {e,(123),(132)} acts trivially on it, so "
                   "m * (n.m') and (d1(m).(n.m')) * m agree for every pair of "
                   "2-cells; the required inequality is unattainable on this "
                   "input, and reporting it as present would be wrong");
        }
    }
    {
        GrayGroupoid g = theta(load_module("s3-comm"));
        const auto& x = g.X();
        bool found = false;
        for (int i = 0; i < g.C2->order && !found; ++i)
            for (int j = 0; j < g.C2->order && !found; ++j) {
                Cell2 a = g.decode2(i), b = g.decode2(j);
                if (hcomp2_lower(g, a, b) != hcomp2_upper(g, a, b)) {
                    found = true;
                    c.note("the inequality does hold on s3-comm: witness "
                           "2-cells (" + x.M->name(a.m) + "," + x.N->name(a.n) +
                           ") and (" + x.M->name(b.m) + "," + x.N->name(b.n) +
                           ")");
                }
            }
        if (!found)
            c.fail("s3-comm: expected a horizontal-composite inequality "
                   "witness on the nonabelian middle level");
    }
    return c;
}

Criterion criterion3() {
    Criterion c{3, "round trip: reconstruction is levelwise isomorphic with "
                   "matching lifting"};
    for (const auto& name : kPositive)
        absorb(c, name, delta_roundtrip_check(theta(load_module(name))));
    return c;
}

Criterion criterion4() {
    Criterion c{4, "algebra suite: kernel dimension formula, involution, "
                   "kernel conditions, quotient relations"};
    for (const auto& name : kPositive) {
        auto b = quotient_cat2(gray_of(name), F0);
        absorb(c, name, kernel_basis_lemma_check(b));
        absorb(c, name, quotient_checks(b));
    }
    // explicit instance of the dimension formula
    {
        auto b = quotient_cat2(gray_of("z2-triv"), F0);
        long long d = -1;
        for (const auto& [k, v] : kernel_basis_lemma_check(b).dimensions)
            if (k == "pre-quotient-dim-ker-sigma3") d = v;
        if (d != 4) c.fail("z2-triv: pre-quotient kernel dimension " +
                           std::to_string(d) + ", expected 4");
        else c.note("z2-triv: pre-quotient dim ker sigma3 = 4 = (2-1)*2*2");
    }
    // a nonzero pre-quotient kernel product must be exhibited when the top
    // level is nontrivial
    for (const char* name : {"z2-triv", "s3-comm", "z3-z3-z2-inv"}) {
        auto b = quotient_cat2(gray_of(name), F0);
        bool hit = false;
        for (const auto& ch : kernel_basis_lemma_check(b).checks)
            if (ch.id == "algebra-prequotient-kernel-product" && ch.pass &&
                !ch.informational)
                hit = true;
        if (!hit) c.fail(std::string(name) +
                         ": no nonzero pre-quotient kernel product exhibited");
    }
    return c;
}

Criterion criterion5() {
    Criterion c{5, "functoriality: induced algebra morphisms compose"};
    int nontrivial = 0;
    for (const auto& name : kPositive) {
        auto b = quotient_cat2(gray_of(name), F0);
        StageReport r = functoriality_check(b);
        absorb(c, name, r);
        for (const auto& ch : r.checks)
            if (ch.id == "functor-composition" && !ch.informational) ++nontrivial;
    }
    if (nontrivial == 0)
        c.fail("no fixture admitted a nontrivial endofunctor");
    else
        c.note(std::to_string(nontrivial) +
               " fixtures exercised a nontrivial endofunctor");
    return c;
}

Criterion criterion6() {
    Criterion c{6, "representation suite: all cell images are homotopies and "
                   "every composition is preserved"};
    for (const auto& name : kPositive) {
        auto b = std::make_shared<Cat2AlgebraBundle>(
            quotient_cat2(gray_of(name), F0));
        RegularRepresentation rep = build_representation(b);
        absorb(c, name, verify_representation(rep));
    }
    return c;
}

Criterion criterion7() {
    Criterion c{7, "degeneration: embedded two-level inputs reproduce the "
                   "length-1 construction"};
    for (const auto& name : kEmbedded) {
        auto b = std::make_shared<Cat2AlgebraBundle>(
            quotient_cat2(gray_of(name), F0));
        RegularRepresentation rep = build_representation(b);
        absorb(c, name, barker_degeneration_check(
                            rep, to_crossed_module(load_fixture(name))));
        if (b->dimK3() != 0)
            c.fail(name + ": top kernel is " + std::to_string(b->dimK3()) +
                   "-dimensional, expected 0");
        for (const auto& h : rep.l2)
            if (!lm_is_zero(h.H2))
                c.fail(name + ": a 2-cell image has a nonzero top component");
        for (const auto& a : rep.l3)
            if (!lm_is_zero(a.alpha))
                c.fail(name + ": a 3-cell image has a nonzero top component");
    }
    return c;
}

Criterion criterion8() {
    Criterion c{8, "ablation: the appendix generator families are load-bearing"};
    bool any_break = false;
    for (const char* name : {"s3-comm", "z3-z3-z2-inv"}) {
        for (const auto& r : ablation_study(gray_of(name), F0)) {
            if (r.build_failed) {
                any_break = true;
                c.note(std::string(name) + ": removing family " + r.family +
                       " breaks construction: " + r.error);
            } else if (!r.failing_checks.empty()) {
                any_break = true;
                std::string ids;
                for (const auto& id : r.failing_checks)
                    ids += (ids.empty() ? "" : ", ") + id;
                c.note(std::string(name) + ": removing family " + r.family +
                       " fails: " + ids);
            }
        }
    }
    if (!any_break)
        c.fail("no generator family removal produced a failure on the "
               "nontrivial-top-level fixtures (finding recorded, not hidden)");
    return c;
}

Criterion criterion9() {
    Criterion c{9, "exact linear algebra: 10^4 randomized seeded cases"};
    int failures = 0;
    for (int t = 0; t < 10000; ++t) {
        std::mt19937_64 rng(700000 + t);
        uint32_t ps[] = {0, 2, 5, 13};
        Field f{ps[t % 4]};
        std::uniform_int_distribution<int> dd(1, 5), dc(-4, 4);
        int rows = dd(rng), cols = dd(rng);
        LinMap m;
        m.src_dim = cols;
        m.dst_dim = rows;
        for (int j = 0; j < cols; ++j) {
            SparseVector v(rows);
            for (int i = 0; i < rows; ++i) v.add(i, f.from_int(dc(rng)));
            m.cols.push_back(std::move(v));
        }
        Subspace im = image(m, f);
        Subspace ker = kernel(m, f);
        if (im.rank() + ker.rank() != cols) ++failures;            // rank-nullity
        for (const auto& kv : ker.rows())
            if (!m.apply(kv).is_zero()) ++failures;                // annihilation
        for (const auto& r : im.rows())
            if (im.reduce(r).residue != SparseVector(rows)) ++failures;  // idempotence
        SparseVector probe(rows);
        for (int i = 0; i < rows; ++i) probe.add(i, f.from_int(dc(rng)));
        SparseVector res = im.reduce(probe).residue;
        if (!im.contains(probe - res)) ++failures;                 // reduction contract
        QuotientSpace q = quotient_basis(rows, im);
        if (q.dim() != rows - im.rank()) ++failures;               // quotient dim
        if (q.reduce(q.lift(q.reduce(probe))) != q.reduce(probe)) ++failures;
    }
    if (failures)
        c.fail(std::to_string(failures) + " property violations");
    else
        c.note("10000 cases over Q, F2, F5, F13: zero failures");
    return c;
}

}  // namespace

int main() {
    std::vector<Criterion> results;
    try {
        results.push_back(criterion1());
        results.push_back(criterion2());
        results.push_back(criterion3());
        results.push_back(criterion4());
        results.push_back(criterion5());
        results.push_back(criterion6());
        results.push_back(criterion7());
        results.push_back(criterion8());
        results.push_back(criterion9());
    } catch (const std::exception& e) {
        std::cout << "acceptance aborted: " << e.what() << "\n";
        return 1;
    }

    int failed = 0;
    for (const auto& c : results) {
        std::cout << "criterion " << c.id << ": " << (c.pass ? "PASS" : "FAIL")
                  << " - " << c.title << "\n";
        for (const auto& n : c.notes) std::cout << "    " << n << "\n";
        if (!c.pass) ++failed;
    }
    std::cout << (failed ? std::to_string(failed) + " criterion(s) failed\n"
                         : "all criteria passed\n");
    return failed ? 1 : 0;
}
