#pragma once

#include "indukt/binding.hpp"
#include "indukt/frontend.hpp"
#include "indukt/kernel.hpp"
#include "indukt/transform.hpp"

#include <map>
#include <random>
#include <vector>

namespace testutil {

using namespace indukt;

inline const MathSystem& sys(const std::string& file) {
    static std::map<std::string, MathSystem> cache;
    auto it = cache.find(file);
    if (it == cache.end()) it = cache.emplace(file, load_system(corpus_path(file))).first;
    return it->second;
}
inline const MathSystem& reverse_sys() { return sys("reverse.msys"); }
inline const MathSystem& dual_sys() { return sys("dual.msys"); }
inline const MathSystem& spa_sys() { return sys("spa.msys"); }
inline const MathSystem& pa_sys() { return sys("pa.msys"); }

inline Tok V(const char* name) { return intern_var(name); }
inline Formula F(const MathSystem& m, const std::string& text) { return parse_formula(text, &m.alphabet); }
inline List L(const MathSystem& m, const std::string& text) { return parse_list(text, &m.alphabet); }

// substitution restated without the library, for cross-checks
inline List oracle_subst(const List& l, Tok x, const List& mu) {
    List out;
    for (Tok t : l) {
        if (t == x) out.insert(out.end(), mu.begin(), mu.end());
        else out.push_back(t);
    }
    return out;
}

inline Formula oracle_sbf(const Formula& f, const List& mu, Tok x) {
    switch (f.op()) {
    case Op::Prime: {
        Prime p = f.atom();
        for (auto& a : p.args) a = oracle_subst(a, x, mu);
        return Formula::prime(p);
    }
    case Op::Not: return neg(oracle_sbf(f.a(), mu, x));
    case Op::All:
    case Op::Ex:
        if (f.var() == x) return f;
        return Formula::quant(f.op(), f.var(), oracle_sbf(f.a(), mu, x));
    default: return Formula::bin(f.op(), oracle_sbf(f.a(), mu, x), oracle_sbf(f.b(), mu, x));
    }
}

// Random formulas over a system's predicates and language.
struct Gen {
    const MathSystem& m;
    std::mt19937_64 rng;
    std::vector<Tok> vars;
    std::vector<PredKey> preds;
    bool reduced = false;  // only not / imp / all
    int list_depth = 3;

    Gen(const MathSystem& m_, std::uint64_t seed, std::vector<Tok> vs)
        : m(m_), rng(seed), vars(std::move(vs)), preds(m_.preds.begin(), m_.preds.end()) {}

    std::size_t pick(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); }
    bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(rng); }

    List list() { return random_member(m.lang, rng, vars, list_depth); }
    std::vector<List> ground_pool;
    List ground_list() {
        if (ground_pool.empty()) ground_pool = enumerate_ground(m.lang, 6, 5000);
        return ground_pool[pick(ground_pool.size())];
    }

    Prime prime() {
        if (preds.empty() || coin(0.3)) return make_eq(list(), list());
        auto [p, n] = preds[pick(preds.size())];
        std::vector<List> args;
        for (std::size_t i = 0; i < n; ++i) args.push_back(list());
        return make_pred(p, std::move(args));
    }

    Formula formula(int depth) {
        if (depth <= 0 || coin(0.25)) return Formula::prime(prime());
        if (reduced) {
            switch (pick(3)) {
            case 0: return neg(formula(depth - 1));
            case 1: return imp(formula(depth - 1), formula(depth - 1));
            default: return all(vars[pick(vars.size())], formula(depth - 1));
            }
        }
        switch (pick(8)) {
        case 0: return neg(formula(depth - 1));
        case 1: return imp(formula(depth - 1), formula(depth - 1));
        case 2: return iff(formula(depth - 1), formula(depth - 1));
        case 3: return conj(formula(depth - 1), formula(depth - 1));
        case 4: return disj(formula(depth - 1), formula(depth - 1));
        case 5: return ex(vars[pick(vars.size())], formula(depth - 1));
        default: return all(vars[pick(vars.size())], formula(depth - 1));
        }
    }

    // closes every free variable
    Formula statement(int depth) {
        Formula f = formula(depth);
        for (Tok v : free_list(f)) f = coin() ? all(v, f) : ex(v, f);
        return f;
    }
};

}  // namespace testutil
