#include <doctest.h>

#include "support.hpp"

#include <algorithm>

using namespace indukt;
using namespace testutil;

namespace {

// straight-line restatements, kept independent of the library code
bool oracle_free(const Formula& f, Tok x) {
    switch (f.op()) {
    case Op::Prime:
        for (auto& a : f.atom().args)
            if (std::find(a.begin(), a.end(), x) != a.end()) return true;
        return false;
    case Op::Not: return oracle_free(f.a(), x);
    case Op::All:
    case Op::Ex: return f.var() != x && oracle_free(f.a(), x);
    default: return oracle_free(f.a(), x) || oracle_free(f.b(), x);
    }
}

bool oracle_cf(const Formula& f, const List& mu, Tok x) {
    switch (f.op()) {
    case Op::Prime: return true;
    case Op::Not: return oracle_cf(f.a(), mu, x);
    case Op::All:
    case Op::Ex:
        if (!oracle_free(f, x)) return true;
        return std::find(mu.begin(), mu.end(), f.var()) == mu.end() && oracle_cf(f.a(), mu, x);
    default: return oracle_cf(f.a(), mu, x) && oracle_cf(f.b(), mu, x);
    }
}

bool same_class(const Formula& f, const Formula& g) {
    if (f.op() != g.op()) return false;
    switch (f.op()) {
    case Op::Prime: return true;
    case Op::Not:
    case Op::All: return same_class(f.a(), g.a());
    default: return same_class(f.a(), g.a()) && same_class(f.b(), g.b());
    }
}

}  // namespace

TEST_CASE("renaming to a fresh variable and back is the identity") {
    std::size_t fails = 0;
    for (const char* file : {"reverse.msys", "dual.msys", "pa.msys"}) {
        const MathSystem& m = sys(file);
        Gen g(m, 1603, {V("?x"), V("?y"), V("?u"), V("?v")});
        for (int i = 0; i < 10000 / 3 + 1; ++i) {
            Formula f = g.formula(5);
            Tok x = g.vars[g.pick(g.vars.size())];
            Tok z = fresh_var("?z", vars_of(f));
            bool ok = cf(f, {z}, x);
            if (ok) {
                Formula fz = sbf(f, {z}, x);
                ok = cf(fz, {x}, z) && sbf(fz, {x}, z) == f;
            }
            if (!ok) {
                ++fails;
                MESSAGE("fails on " << print_formula(f) << " x=" << tok_name(x));
            }
        }
    }
    CHECK(fails == 0);
}

TEST_CASE("substituting for a variable that is not free changes nothing") {
    std::size_t fails = 0, cases = 0;
    const MathSystem& m = dual_sys();
    Gen g(m, 77, {V("?x"), V("?y"), V("?u"), V("?v")});
    while (cases < 10000) {
        Formula f = g.formula(5);
        Tok x = g.vars[g.pick(g.vars.size())];
        if (occurs_free(f, x)) x = fresh_var("?w", vars_of(f));
        List mu = g.list();
        ++cases;
        if (!cf(f, mu, x) || sbf(f, mu, x) != f) ++fails;
    }
    CHECK(fails == 0);
}

TEST_CASE("cf and sbf agree with the recursive definitions") {
    const MathSystem& m = reverse_sys();
    Gen g(m, 5, {V("?x"), V("?y"), V("?s")});
    int collisions = 0;
    for (int i = 0; i < 5000; ++i) {
        Formula f = g.formula(4);
        Tok x = g.vars[g.pick(3)];
        List mu = g.list();
        bool c = oracle_cf(f, mu, x);
        REQUIRE(cf(f, mu, x) == c);
        CHECK(occurs_free(f, x) == oracle_free(f, x));
        if (c) CHECK(sbf(f, mu, x) == oracle_sbf(f, mu, x));
        else {
            ++collisions;
            CHECK_THROWS_AS(sbf(f, mu, x), CollisionError);
        }
    }
    CHECK(collisions > 0);
}

TEST_CASE("free variables after substitution") {
    const MathSystem& m = dual_sys();
    Gen g(m, 99, {V("?x"), V("?y"), V("?u")});
    for (int i = 0; i < 5000; ++i) {
        Formula f = g.formula(4);
        Tok x = g.vars[g.pick(3)];
        List mu = g.list();
        if (!cf(f, mu, x)) continue;
        VarSet allowed = free_of(f);
        allowed.erase(x);
        vars_of_list(mu, allowed);
        for (Tok v : free_of(sbf(f, mu, x))) CHECK(allowed.count(v));
    }
}

TEST_CASE("concrete capture") {
    const MathSystem& m = reverse_sys();
    Formula f = F(m, "(all ?y (eq (l ?x) (l ?y)))");
    CHECK_FALSE(cf(f, L(m, "(l f ( ?y ))"), V("?x")));
    CHECK(cf(f, L(m, "(l f ( ?s ))"), V("?x")));
    CHECK(sbf(f, L(m, "(l f ( ?s ))"), V("?x")) == F(m, "(all ?y (eq (l f ( ?s )) (l ?y)))"));
    // x bound: nothing to do, whatever mu is
    CHECK(cf(F(m, "(all ?x (pred W (l ?x)))"), L(m, "(l ?x)"), V("?x")));
    // every occurrence in every argument list
    CHECK(sbf(F(m, "(eq (l ?x ?x) (l f ( ?x )))"), L(m, "(l a b)"), V("?x")) ==
          F(m, "(eq (l a b a b) (l f ( a b )))"));
}

TEST_CASE("gen closes over free variables in index order") {
    const MathSystem& m = reverse_sys();
    Gen g(m, 4, {V("?x"), V("?y"), V("?u"), V("?v")});
    for (int i = 0; i < 2000; ++i) {
        Formula f = g.formula(4);
        auto xs = free_list(f);
        CHECK(std::is_sorted(xs.begin(), xs.end()));
        Formula c = gen(f);
        CHECK(free_of(c).empty());
        Formula cur = c;
        for (Tok x : xs) {
            REQUIRE(cur.op() == Op::All);
            CHECK(cur.var() == x);
            cur = cur.a();
        }
        CHECK(cur == f);
    }
}

TEST_CASE("class descriptors match the recursive partition") {
    const MathSystem& m = dual_sys();
    Gen g(m, 21, {V("?x"), V("?y")});
    g.reduced = true;
    std::vector<Formula> fs;
    for (int i = 0; i < 400; ++i) fs.push_back(g.formula(i % 5));
    std::size_t equal = 0;
    for (std::size_t i = 0; i < fs.size(); ++i)
        for (std::size_t j = i; j < fs.size(); ++j) {
            bool same = same_class(fs[i], fs[j]);
            REQUIRE((classify(fs[i]) == classify(fs[j])) == same);
            equal += same && i != j;
        }
    CHECK(equal > 0);
    CHECK(classify(F(m, "(all ?x (imp (pred D (l ?x)) (not (eq (l 1) (l 0)))))")) == "AIPNP");
    CHECK_THROWS(classify(F(m, "(and (pred D (l 1)) (pred D (l 0)))")));
}

TEST_CASE("degree counts connectives along the deepest path") {
    const MathSystem& m = dual_sys();
    CHECK(deg(F(m, "(pred D (l 1))")) == 0);
    CHECK(deg(F(m, "(imp (not (pred D (l 1))) (all ?x (pred D (l ?x))))")) == 2);
}

TEST_CASE("fresh variables avoid the given set") {
    VarSet avoid{intern_var("?w_1"), intern_var("?w_2")};
    Tok t = fresh_var("?w", avoid);
    CHECK(!avoid.count(t));
    CHECK(t == fresh_var("w", avoid));
    CHECK(tok_name(t) == "?w_3");
}
