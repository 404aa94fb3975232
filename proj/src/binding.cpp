#include "indukt/binding.hpp"

#include <algorithm>

namespace indukt {

void vars_of_list(const List& l, VarSet& out) {
    for (Tok t : l)
        if (is_var(t)) out.insert(t);
}

void vars_of_prime(const Prime& p, VarSet& out) {
    for (auto& a : p.args) vars_of_list(a, out);
}

namespace {
void vars_into(const Formula& f, VarSet& out) {
    switch (f.op()) {
    case Op::Prime: vars_of_prime(f.atom(), out); return;
    case Op::Not: vars_into(f.a(), out); return;
    case Op::All:
    case Op::Ex:
        out.insert(f.var());
        vars_into(f.a(), out);
        return;
    default:
        vars_into(f.a(), out);
        vars_into(f.b(), out);
    }
}

void free_into(const Formula& f, VarSet& bound, VarSet& out) {
    switch (f.op()) {
    case Op::Prime:
        for (auto& a : f.atom().args)
            for (Tok t : a)
                if (is_var(t) && !bound.count(t)) out.insert(t);
        return;
    case Op::Not: free_into(f.a(), bound, out); return;
    case Op::All:
    case Op::Ex: {
        bool fresh = bound.insert(f.var()).second;
        free_into(f.a(), bound, out);
        if (fresh) bound.erase(f.var());
        return;
    }
    default:
        free_into(f.a(), bound, out);
        free_into(f.b(), bound, out);
    }
}
}  // namespace

VarSet vars_of(const Formula& f) {
    VarSet out;
    vars_into(f, out);
    return out;
}

VarSet vars_of(const RFormula& r) {
    VarSet out;
    for (auto& p : r.prem) vars_of_prime(p, out);
    vars_of_prime(r.concl, out);
    return out;
}

VarSet free_of(const Formula& f) {
    VarSet bound, out;
    free_into(f, bound, out);
    return out;
}

bool list_has(const List& l, Tok x) { return std::find(l.begin(), l.end(), x) != l.end(); }

bool occurs_free(const Formula& f, Tok x) {
    switch (f.op()) {
    case Op::Prime:
        for (auto& a : f.atom().args)
            if (list_has(a, x)) return true;
        return false;
    case Op::Not: return occurs_free(f.a(), x);
    case Op::All:
    case Op::Ex: return f.var() != x && occurs_free(f.a(), x);
    default: return occurs_free(f.a(), x) || occurs_free(f.b(), x);
    }
}

List subst_list(const List& l, Tok x, const List& mu) {
    if (!list_has(l, x)) return l;
    List out;
    out.reserve(l.size() + mu.size());
    for (Tok t : l) {
        if (t == x) out.insert(out.end(), mu.begin(), mu.end());
        else out.push_back(t);
    }
    return out;
}

Prime subst_prime(const Prime& p, Tok x, const List& mu) {
    Prime out = p;
    for (auto& a : out.args) a = subst_list(a, x, mu);
    return out;
}

RFormula subst_rform(const RFormula& r, Tok x, const List& mu) {
    RFormula out;
    for (auto& p : r.prem) out.prem.push_back(subst_prime(p, x, mu));
    out.concl = subst_prime(r.concl, x, mu);
    return out;
}

bool cf(const Formula& f, const List& mu, Tok x) {
    switch (f.op()) {
    case Op::Prime: return true;
    case Op::Not: return cf(f.a(), mu, x);
    case Op::All:
    case Op::Ex:
        if (!occurs_free(f, x)) return true;
        return f.var() != x && !list_has(mu, f.var()) && cf(f.a(), mu, x);
    default: return cf(f.a(), mu, x) && cf(f.b(), mu, x);
    }
}

namespace {
Formula sbf_raw(const Formula& f, const List& mu, Tok x) {
    switch (f.op()) {
    case Op::Prime: {
        const Prime& p = f.atom();
        bool hit = false;
        for (auto& a : p.args) hit = hit || list_has(a, x);
        return hit ? Formula::prime(subst_prime(p, x, mu)) : f;
    }
    case Op::Not: return neg(sbf_raw(f.a(), mu, x));
    case Op::All:
    case Op::Ex:
        if (!occurs_free(f, x)) return f;
        return Formula::quant(f.op(), f.var(), sbf_raw(f.a(), mu, x));
    default: return Formula::bin(f.op(), sbf_raw(f.a(), mu, x), sbf_raw(f.b(), mu, x));
    }
}
}  // namespace

Formula sbf(const Formula& f, const List& mu, Tok x) {
    if (!cf(f, mu, x))
        throw CollisionError("substitution of " + print_list(mu) + " for " + tok_name(x) + " is not collision-free");
    return sbf_raw(f, mu, x);
}

Formula rename_fresh(const Formula& f, Tok x, Tok z) {
    if (vars_of(f).count(z)) throw std::invalid_argument("rename target " + tok_name(z) + " occurs in formula");
    return sbf(f, List{z}, x);
}

std::vector<Tok> free_list(const Formula& f) {
    auto s = free_of(f);
    return {s.begin(), s.end()};
}

Formula gen(const Formula& f) {
    auto xs = free_list(f);
    Formula out = f;
    for (auto it = xs.rbegin(); it != xs.rend(); ++it) out = all(*it, out);
    return out;
}

std::size_t deg(const Formula& f) {
    switch (f.op()) {
    case Op::Prime: return 0;
    case Op::Not:
    case Op::All:
    case Op::Ex: return 1 + deg(f.a());
    default: return 1 + std::max(deg(f.a()), deg(f.b()));
    }
}

namespace {
void classify_into(const Formula& f, std::string& out) {
    switch (f.op()) {
    case Op::Prime: out += 'P'; return;
    case Op::Not:
        out += 'N';
        classify_into(f.a(), out);
        return;
    case Op::All:
        out += 'A';
        classify_into(f.a(), out);
        return;
    case Op::Imp:
        out += 'I';
        classify_into(f.a(), out);
        classify_into(f.b(), out);
        return;
    default: throw std::invalid_argument("classify: formula outside the reduced fragment");
    }
}
}  // namespace

std::string classify(const Formula& f) {
    std::string out;
    classify_into(f, out);
    return out;
}

Tok fresh_var(const std::string& base, const VarSet& avoid) {
    std::string stem = base;
    if (stem.empty() || stem[0] != '?') stem = "?" + stem;
    for (int k = 1;; ++k) {
        Tok t = intern_var(stem + "_" + std::to_string(k));
        if (!avoid.count(t)) return t;
    }
}

}  // namespace indukt
