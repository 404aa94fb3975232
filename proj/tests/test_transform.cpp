#include <doctest.h>

#include "support.hpp"
#include "indukt/pipeline.hpp"

#include <functional>

using namespace indukt;
using namespace testutil;

namespace {

bool reduced_only(const Formula& f) {
    switch (f.op()) {
    case Op::Prime: return true;
    case Op::Not:
    case Op::All: return reduced_only(f.a());
    case Op::Imp: return reduced_only(f.a()) && reduced_only(f.b());
    default: return false;
    }
}

// a valid proof in m (which has `name` adjoined), built forward at random
Proof random_proof(const MathSystem& m, const std::string& name, Gen& g, int n) {
    Proof p;
    auto push = [&](Formula f, Just j) {
        p.steps.push_back(Step{p.steps.size() + 1, std::move(f), std::move(j)});
        return p.steps.size();
    };
    auto adj = [&] {
        Just j;
        j.kind = Just::Adjoined;
        j.name = name;
        push(*m.adjoined_named(name), j);
    };
    adj();
    for (int i = 0; i < n; ++i) {
        const Formula& some = p.steps[g.pick(p.steps.size())].f;
        switch (g.pick(7)) {
        case 0: adj(); break;
        case 1: {
            Just j;
            j.kind = Just::Basis;
            j.ref = 1 + g.pick(m.basis.size());
            push(m.basis[j.ref - 1], j);
            break;
        }
        case 2: {
            Formula a = some;
            std::size_t ia = p.steps.size();
            for (std::size_t k = 0; k < p.steps.size(); ++k)
                if (p.steps[k].f == a) ia = k + 1;
            std::size_t t = push(imp(a, imp(g.formula(2), a)), Just{});
            Just j;
            j.kind = Just::MP;
            j.ref = ia;
            j.ref2 = t;
            push(p.steps[t - 1].f.b(), j);
            break;
        }
        case 3: {
            Just j;
            j.kind = Just::Gen;
            j.x = g.vars[g.pick(g.vars.size())];
            j.ref = 1 + g.pick(p.steps.size());
            push(all(j.x, p.steps[j.ref - 1].f), j);
            break;
        }
        case 4: {
            std::size_t r = 1 + g.pick(p.steps.size());
            Formula f = p.steps[r - 1].f;
            auto fv = free_list(f);
            if (fv.empty()) break;
            Tok x = fv[g.pick(fv.size())];
            List mu = g.list();
            if (!cf(f, mu, x)) break;
            Just j;
            j.kind = Just::Subst;
            j.ref = r;
            j.x = x;
            j.lambda = mu;
            push(sbf(f, mu, x), j);
            break;
        }
        case 5: {
            Just j;
            j.kind = Just::Quant;
            j.quant = 'a';
            Tok x = g.vars[g.pick(g.vars.size())];
            push(imp(all(x, some), some), j);
            break;
        }
        default: {
            // modus ponens with whatever matches
            for (std::size_t a = p.steps.size(); a-- > 0;) {
                const Formula& maj = p.steps[a].f;
                if (maj.op() != Op::Imp) continue;
                for (std::size_t b = 0; b < p.steps.size(); ++b)
                    if (p.steps[b].f == maj.a()) {
                        Just j;
                        j.kind = Just::MP;
                        j.ref = b + 1;
                        j.ref2 = a + 1;
                        push(maj.b(), j);
                        a = 0;
                        break;
                    }
            }
        }
        }
    }
    return p;
}

}  // namespace

TEST_CASE("theta keeps every corpus proof a proof") {
    std::size_t n = 0;
    for (auto& e : load_corpus(corpus_path("corpus.sexp"))) {
        if (e.kind != "check" || !e.expect_accept) continue;
        MathSystem m = entry_system(e);
        Proof p = entry_proof(e, m);
        Proof t = theta_proof(m, p);
        CheckReport a = check_proof(m, p);
        CheckReport b = check_proof(theta_system(m), t);
        CHECK_MESSAGE(b.accepted, e.id << ": " << b.reason << " at " << b.failed_label);
        CHECK(t.steps.size() == p.steps.size());
        for (auto& st : t.steps) CHECK(reduced_only(st.f));
        // quantifier (c) images become tautologies; everything else keeps its rule
        auto ra = a.rule_counts, rb = b.rule_counts;
        std::size_t qc = 0;
        for (auto& st : p.steps) qc += st.just.kind == Just::Quant && st.just.quant == 'c';
        ra["ax-taut"] += qc;
        ra["ax-quant-c"] -= qc;
        for (auto* r : {&ra, &rb})
            for (auto it = r->begin(); it != r->end();) it = it->second == 0 ? r->erase(it) : std::next(it);
        CHECK(ra == rb);
        ++n;
    }
    CHECK(n >= 12);
}

TEST_CASE("theta on formulas") {
    const MathSystem& m = dual_sys();
    Gen g(m, 2, {V("?x"), V("?y")});
    for (int i = 0; i < 1000; ++i) {
        Formula f = g.formula(4);
        Formula t = theta(f);
        CHECK(reduced_only(t));
        CHECK(free_of(t) == free_of(f));
        CHECK(theta(t) == t);
    }
}

TEST_CASE("eliminating a predicate that only comes from rule (e)") {
    const MathSystem& m = sys("celim.msys");
    Proof p = load_proof(corpus_path("celim.mproof"), m);
    REQUIRE(check_proof(m, p).accepted);
    Tok Q = intern_symbol("Q");
    bool had_q = false;
    for (auto& st : p.steps) {
        std::set<std::pair<Tok, std::size_t>> ps;
        collect_preds(st.f, ps);
        had_q = had_q || ps.count({Q, 1});
    }
    CHECK(had_q);
    Proof c = c_eliminate(m, Q, 1, p);
    CheckReport r = check_proof(m, c);
    CHECK_MESSAGE(r.accepted, r.reason << " at " << r.failed_label);
    CHECK(c.steps.size() == p.steps.size());
    for (auto& st : c.steps) {
        std::set<std::pair<Tok, std::size_t>> ps;
        collect_preds(st.f, ps);
        if (st.just.kind == Just::Induct) collect_preds(st.just.G, ps);
        CHECK_FALSE(ps.count({Q, 1}));
        CHECK(ps.count({Q, 0}) + ps.count({Q, 2}) == 0);
    }
    // D keeps its occurrences
    std::set<std::pair<Tok, std::size_t>> ps;
    for (auto& st : c.steps) collect_preds(st.f, ps);
    CHECK(ps.count({intern_symbol("D"), 1}));
    // refused when q has basis occurrences
    CHECK_THROWS_AS(c_eliminate(m, intern_symbol("D"), 1, p), TransformError);
}

TEST_CASE("C commutes with substitution") {
    const MathSystem& m = sys("celim.msys");
    Gen g(m, 1001, {V("?x"), V("?y"), V("?u")});
    Tok Q = intern_symbol("Q");
    Contradiction c = contradiction_for(m, {V("?x"), V("?y"), V("?u")});
    std::size_t cases = 0, fails = 0;
    while (cases < 1000) {
        Formula f = g.formula(4);
        Tok x = g.vars[g.pick(3)];
        List mu = g.list();
        if (!cf(f, mu, x)) continue;
        ++cases;
        Formula lhs = c_formula(sbf(f, mu, x), Q, 1, c);
        Formula rhs = sbf(c_formula(f, Q, 1, c), mu, x);
        if (lhs != rhs) ++fails;
    }
    CHECK(fails == 0);
}

TEST_CASE("deduction on random proofs") {
    const MathSystem& base = reverse_sys();
    Gen g(base, 404, {V("?x"), V("?s"), V("?t")});
    g.list_depth = 2;
    int done = 0;
    for (int i = 0; i < 150; ++i) {
        Formula phi = g.statement(2);
        MathSystem m = adjoin(base, "phi", phi);
        Proof p = random_proof(m, "phi", g, 12);
        REQUIRE(check_proof(m, p).accepted);
        Proof d = deduction(m, "phi", p);
        MathSystem without = without_adjoined(m, "phi");
        CheckReport r = check_proof(without, d);
        REQUIRE_MESSAGE(r.accepted, r.reason << " at " << r.failed_label);
        CHECK(conclusion(d) == imp(*m.adjoined_named("phi"), conclusion(p)));
        ++done;
    }
    CHECK(done == 150);
}

TEST_CASE("deduction needs the named statement") {
    const MathSystem& m = reverse_sys();
    Proof p = load_proof(corpus_path("ex1.mproof"), m);
    CHECK_THROWS_WITH_AS(deduction(m, "phi2", p), doctest::Contains("phi2"), TransformError);
}

TEST_CASE("constants become variables") {
    const MathSystem& m = reverse_sys();
    MathSystem e = extend_alphabet(m, {intern_symbol("c")});
    Proof p = proof_from_text(R"((proof
        (step 1 (imp (pred W (l c)) (pred W (l f ( c )))) (ax-taut))))",
                              e);
    CHECK_FALSE(check_proof(e, p).accepted);  // not a tautology: different atoms
    p = proof_from_text(R"((proof
        (step 1 (imp (pred W (l c)) (pred W (l c))) (ax-taut))
        (step 2 (all ?x (imp (pred W (l c)) (pred W (l c)))) (gen ?x 1))))",
                        e);
    REQUIRE(check_proof(e, p).accepted);
    Proof q = generalize_constants(m, {{intern_symbol("c"), V("?k")}}, p);
    CHECK(check_proof(m, q).accepted);
    CHECK(conclusion(q) == F(m, "(all ?x (imp (pred W (l ?k)) (pred W (l ?k))))"));
}

TEST_CASE("word reversal pipeline") {
    ReverseResult r = pipeline_reverse();
    const MathSystem& m = reverse_sys();
    CHECK(check_proof(m, r.step).accepted);
    CHECK(check_proof(m, r.induct).accepted);
    CHECK(check_proof(m, r.closure).accepted);
    CHECK(check_proof(m, r.reverse).accepted);
    CHECK(conclusion(r.reverse) == F(m, "(imp (pred W (l ?x)) (eq (l f ( f ( ?x ) )) (l ?x)))"));
    CHECK(conclusion(r.closure) == F(m, "(imp (pred W (l ?x)) (pred W (l f ( ?x ))))"));

    ReverseOptions bad;
    bad.omit_phi2 = true;
    CHECK_THROWS_AS(pipeline_reverse(bad), StageError);
}

TEST_CASE("relativization round trips on the PA basis") {
    const MathSystem& m = pa_sys();
    Tok n0 = intern_symbol("N0");
    REQUIRE(m.basis.size() == 6);
    for (const Formula& ax : m.basis) {
        // closed axiom, and its open matrix
        Formula open = ax;
        while (open.op() == Op::All) open = open.a();
        for (const Formula& f : {ax, open}) {
            Formula psi = relativize_psi(f, n0);
            CHECK(free_of(psi) == free_of(f));
            CHECK(unrelativize_psi(psi, n0) == f);
            Formula full = relativize_gamma(f, psi, n0);
            std::size_t n = first_occurrence_free(f).size();
            CHECK(strip_gamma(full, n, n0) == psi);
            CHECK(free_of(gen(full)).empty());
            CHECK(free_of(full) == free_of(f));
        }
    }
    CHECK_THROWS_AS(unrelativize_psi(m.basis[0], n0), TransformError);
}

TEST_CASE("induction principle pipeline") {
    const MathSystem& m = spa_sys();
    Tok x = V("?x"), n0 = intern_symbol("N0");
    for (const char* h : {"(eq (l + ( ?x 0 )) (l ?x))", "(imp (pred N0 (l ?y)) (eq (l + ( ?x ?y )) (l + ( ?y ?x ))))",
                          "(ex ?w (eq (l + ( ?x ?w )) (l ?y)))"}) {
        Formula H = F(m, h);
        PrincipleResult r = pipeline_induction_principle(m, H, x);
        CHECK(check_proof(m, r.proof).accepted);
        CHECK(conclusion(r.proof) == induction_principle(H, x, n0));
    }
}
