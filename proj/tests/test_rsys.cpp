#include <doctest.h>

#include "support.hpp"

#include <algorithm>
#include <set>

using namespace indukt;
using namespace testutil;

namespace {

RDerivation golden() {
    const MathSystem& m = dual_sys();
    return load_rderivation(corpus_path("dual-101.rproof"), m);
}

void check_all_reconstruct(const MathSystem& m, const FactSet& fs) {
    std::size_t bad = 0;
    for (auto& f : fs.facts) {
        RDerivation d = reconstruct(m.S, fs, f);
        RReport r = check_rderivation(m.S, m.lang, d);
        bool ok = r.accepted && !d.steps.empty() && d.steps.back().f.prem.empty() && d.steps.back().f.concl == f;
        if (!ok) {
            ++bad;
            MESSAGE(print_prime(f) << ": " << r.reason << " at " << r.failed_label);
        }
    }
    CHECK(bad == 0);
}

// brute-force replacement: some occurrence of sig in one side of e, replaced by tau, gives c
bool oracle_replacement(const RFormula& r) {
    if (r.prem.size() != 2 || !r.concl.eq || !r.prem[0].eq || !r.prem[1].eq) return false;
    const Prime &e = r.prem[0], &c = r.concl;
    const List &sig = r.prem[1].args[0], &tau = r.prem[1].args[1];
    if (sig.empty()) return false;
    for (int k = 0; k < 2; ++k) {
        if (e.args[1 - k] != c.args[1 - k]) continue;
        const List& from = e.args[k];
        for (std::size_t p = 0; p < from.size(); ++p) {
            if (p + sig.size() > from.size() || !std::equal(sig.begin(), sig.end(), from.begin() + p)) continue;
            List out(from.begin(), from.begin() + p);
            out.insert(out.end(), tau.begin(), tau.end());
            out.insert(out.end(), from.begin() + p + sig.size(), from.end());
            if (out == c.args[k]) return true;
        }
    }
    return false;
}

bool oracle_eq_axiom(const RFormula& r) {
    if (r.prem.empty()) return r.concl.eq && r.concl.args[0] == r.concl.args[1];
    if (oracle_replacement(r)) return true;
    // congruence: one equation per argument, then the predicate, then the predicate again
    const Prime& last = r.prem.back();
    if (last.eq || r.concl.eq || last.pred != r.concl.pred) return false;
    std::size_t n = last.arity();
    if (n == 0 || r.concl.arity() != n || r.prem.size() != n + 1) return false;
    for (std::size_t k = 0; k < n; ++k) {
        const Prime& e = r.prem[k];
        if (!e.eq || e.args[0] != last.args[k] || e.args[1] != r.concl.args[k]) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("golden derivation in the dual system") {
    const MathSystem& m = dual_sys();
    RDerivation d = golden();
    RReport r = check_rderivation(m.S, m.lang, d);
    CHECK(r.accepted);
    CHECK(d.steps.size() == 9);
    CHECK(print_prime(d.steps.back().f.concl) == "(pred D (l 1 0 1) (l a a a a a))");
    CHECK(print_rderivation(d) == print_rderivation(rderivation_from_sexp(read_sexp(print_rderivation(d)), &m.alphabet)));
}

TEST_CASE("broken derivations are rejected at the broken step") {
    const MathSystem& m = dual_sys();
    SUBCASE("wrong axiom text") {
        RDerivation d = golden();
        d.steps[1].just.ref = 6;
        auto r = check_rderivation(m.S, m.lang, d);
        CHECK_FALSE(r.accepted);
        CHECK(r.failed_label == 2);
    }
    SUBCASE("substitution result differs") {
        RDerivation d = golden();
        d.steps[3].just.lambda = L(m, "(l 0)");
        auto r = check_rderivation(m.S, m.lang, d);
        CHECK(r.failed_label == 4);
        CHECK(r.reason.find("substitution") != std::string::npos);
    }
    SUBCASE("minor premise mismatch") {
        RDerivation d = golden();
        d.steps[5].just.ref = 2;
        auto r = check_rderivation(m.S, m.lang, d);
        CHECK(r.failed_label == 6);
    }
    SUBCASE("forward citation") {
        RDerivation d = golden();
        d.steps[5].just.ref2 = 8;
        auto r = check_rderivation(m.S, m.lang, d);
        CHECK(r.failed_label == 6);
    }
    SUBCASE("list outside L") {
        RDerivation d = golden();
        d.steps[3].just.lambda = L(m, "(l a 1 a)");
        d.steps[3].f = subst_rform(d.steps[1].f, V("?x"), d.steps[3].just.lambda);
        CHECK_FALSE(check_rderivation(m.S, m.lang, d).accepted);
    }
}

TEST_CASE("saturation reaches the golden fact quickly") {
    const MathSystem& m = dual_sys();
    FactSet fs = saturate(m.S, m.lang, 12, 2'000'000);
    CHECK_FALSE(fs.truncated);
    CHECK(fs.contains(parse_formula("(pred D (l 1 0 1) (l a a a a a))", &m.alphabet).atom()));
    CHECK_FALSE(fs.contains(parse_formula("(pred D (l 1 0 1) (l a a a a))", &m.alphabet).atom()));
}

TEST_CASE("every saturated fact has a checkable derivation") {
    SUBCASE("dual") {
        const MathSystem& m = dual_sys();
        check_all_reconstruct(m, saturate(m.S, m.lang, 8, 200000));
    }
    SUBCASE("reverse, with equations") {
        const MathSystem& m = reverse_sys();
        check_all_reconstruct(m, saturate(m.S, m.lang, 6, 200000));
    }
    SUBCASE("numerals") {
        const MathSystem& m = spa_sys();
        check_all_reconstruct(m, saturate(m.S, m.lang, 10, 200000));
    }
}

TEST_CASE("larger bounds only add facts") {
    for (const char* file : {"dual.msys", "reverse.msys", "spa.msys"}) {
        const MathSystem& m = sys(file);
        std::size_t top = std::string(file) == "dual.msys" ? 10 : 7;
        std::set<std::string> prev;
        for (std::size_t n = 3; n <= top; ++n) {
            auto d = saturate(m.S, m.lang, n, 500000).dump();
            std::set<std::string> cur(d.begin(), d.end());
            CHECK(std::includes(cur.begin(), cur.end(), prev.begin(), prev.end()));
            prev = std::move(cur);
        }
    }
}

TEST_CASE("serial and parallel saturation agree") {
    for (const char* file : {"dual.msys", "reverse.msys", "spa.msys"}) {
        const MathSystem& m = sys(file);
        std::size_t n = std::string(file) == "reverse.msys" ? 6 : 10;
        FactSet a = saturate(m.S, m.lang, n, 500000, Exec::Serial);
        FactSet b = saturate(m.S, m.lang, n, 500000, Exec::Parallel);
        CHECK(a.dump() == b.dump());
        CHECK(a.rounds == b.rounds);
    }
}

TEST_CASE("budget truncation is reported") {
    const MathSystem& m = dual_sys();
    FactSet fs = saturate(m.S, m.lang, 12, 50);
    CHECK(fs.truncated);
    CHECK(fs.facts.size() <= 50);
    CHECK(r_derivable_in(m.S, fs, parse_formula("(pred D (l 1 1 1 1 1 1))", &m.alphabet).atom()) != Tri::False);
}

TEST_CASE("reflexive equations satisfy equation premises") {
    MathSystem m = system_from_text(R"(
        (alphabet a b)
        (predicates (P 1) (Q 2))
        (vars ?x ?y)
        (rbasis
          (horn ((eq (l ?x) (l ?x))) (pred P (l ?x)))
          (horn ((pred P (l ?x)) (eq (l ?x) (l ?y))) (pred Q (l ?x) (l ?y))))
        (lang (alt VAR) (alt a) (alt b) (alt S S)))");
    FactSet fs = saturate(m.S, m.lang, 3, 100000);
    CHECK(fs.contains(parse_formula("(pred P (l a b a))", &m.alphabet).atom()));
    CHECK(fs.contains(parse_formula("(pred Q (l b) (l b))", &m.alphabet).atom()));
    CHECK_FALSE(fs.contains(parse_formula("(pred Q (l a) (l b))", &m.alphabet).atom()));
    check_all_reconstruct(m, fs);
}

TEST_CASE("equality schema matcher against positional replacement") {
    const MathSystem& m = reverse_sys();
    MathSystem m2 = extend_alphabet(m, {intern_symbol("c"), intern_symbol("d")});
    std::vector<RFormula> instances;
    for (const char* f : {"reverse-1-53.mproof", "reverse-54-120.mproof"}) {
        Proof p = load_proof(corpus_path(f), m2);
        for (auto& st : p.steps) {
            if (st.just.kind != Just::Eq) continue;
            RFormula r;
            REQUIRE(formula_to_rform(st.f, r));
            instances.push_back(r);
        }
    }
    CHECK(instances.size() >= 7);
    std::mt19937_64 rng(8);
    std::size_t matched = 0, mutants = 0;
    for (auto& r : instances) {
        CHECK(oracle_eq_axiom(r));
        CHECK(match_eq_schema(r).has_value());
        ++matched;
        // perturb one token of one list and compare verdicts
        for (int i = 0; i < 50; ++i) {
            RFormula q = r;
            std::vector<List*> lists;
            for (auto& p : q.prem)
                for (auto& a : p.args) lists.push_back(&a);
            for (auto& a : q.concl.args) lists.push_back(&a);
            List& l = *lists[rng() % lists.size()];
            if (l.empty()) continue;
            static const Tok pool[] = {intern_symbol("a"), intern_symbol("b"), intern_symbol("f"), intern_var("?x")};
            l[rng() % l.size()] = pool[rng() % 4];
            CHECK(match_eq_schema(q).has_value() == oracle_eq_axiom(q));
            ++mutants;
        }
    }
    CHECK(matched == instances.size());
    CHECK(mutants > 0);
}

TEST_CASE("derivability verdicts") {
    const MathSystem& m = dual_sys();
    auto P = [&](const char* t) { return parse_formula(t, &m.alphabet).atom(); };
    CHECK(monotone_certificate(m.S));
    CHECK_FALSE(monotone_certificate(reverse_sys().S));
    CHECK_FALSE(monotone_certificate(spa_sys().S));
    CHECK(r_derivable(m.S, m.lang, P("(pred D (l 1 1) (l a a a))"), 10) == Tri::True);
    CHECK(r_derivable(m.S, m.lang, P("(pred D (l 1 1) (l a a))"), 10) == Tri::False);
    // beyond the bound nothing is claimed
    CHECK(r_derivable(m.S, m.lang, P("(pred D (l 1 1 1 1) (l a a a a a a a a a a a a a a a))"), 8) == Tri::Unknown);
    // non-ground arguments are never decided
    CHECK(r_derivable(m.S, m.lang, P("(pred D (l ?x))"), 8) == Tri::Unknown);
}

TEST_CASE("certificate looks at constants and equations") {
    auto cert = [](const char* rb) {
        MathSystem m = system_from_text(std::string("(alphabet a 0) (predicates (P 1)) (vars ?x) (rbasis ") + rb +
                                        ") (lang (alt VAR) (alt a) (alt 0) (alt S S))");
        return monotone_certificate(m.S);
    };
    CHECK(cert("(horn ((pred P (l ?x))) (pred P (l ?x 0)))"));
    CHECK_FALSE(cert("(horn ((pred P (l ?x 0))) (pred P (l ?x)))"));
    CHECK_FALSE(cert("(horn ((pred P (l ?x ?x))) (pred P (l ?x a)))"));
    CHECK_FALSE(cert("(horn () (eq (l a) (l 0)))"));
}
