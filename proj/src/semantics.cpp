#include "indukt/semantics.hpp"

#include "indukt/binding.hpp"

#include <algorithm>

namespace indukt {

using V5 = Evaluator::V5;

namespace {

V5 vneg(V5 v) { return static_cast<V5>(4 - static_cast<int>(v)); }
V5 vmin(V5 a, V5 b) { return std::min(a, b); }
V5 vmax(V5 a, V5 b) { return std::max(a, b); }

bool recursive_grammar(const LGrammar& g) {
    for (auto& alt : g.alts)
        for (auto& s : alt)
            if (s.kind == GSym::S) return true;
    return false;
}

}  // namespace

TV3 report(V5 v) {
    switch (v) {
    case V5::True:
    case V5::BTrue: return Tri::True;
    case V5::False: return Tri::False;
    default: return Tri::Unknown;
    }
}

Evaluator::Evaluator(const MathSystem& m, EvalBounds b) : m_(m), b_(b) {
    fs_ = saturate(m.S, m.lang, b.sat_bound, b.fact_budget);
    certified_ = monotone_certificate(m.S);
    bool cut = false;
    domain_ = enumerate_ground(m.lang, b.list_size, 0, &cut);
    complete_ = !cut && !recursive_grammar(m.lang);
    if (domain_.empty()) throw std::invalid_argument("L has no ground lists within the bound");
}

V5 Evaluator::prime5(const Prime& p) {
    for (auto& a : p.args)
        if (!is_ground(a)) throw std::invalid_argument("prime is not ground: " + print_prime(p));
    if (fs_.contains(p)) return V5::True;
    for (auto& a : p.args)
        if (!member(m_.lang, a)) return V5::Unknown;
    if (!fs_.truncated && certified_ && fs_.bound >= total_size(p) + kFalseSlack) return V5::False;
    return V5::Unknown;
}

V5 Evaluator::eval5(const Formula& f) {
    switch (f.op()) {
    case Op::Prime: return prime5(f.atom());
    case Op::Not: return vneg(eval5(f.a()));
    case Op::Imp: {
        V5 a = eval5(f.a());
        if (a == V5::False) return V5::True;
        return vmax(vneg(a), eval5(f.b()));
    }
    case Op::And: {
        V5 a = eval5(f.a());
        if (a == V5::False) return V5::False;
        return vmin(a, eval5(f.b()));
    }
    case Op::Or: {
        V5 a = eval5(f.a());
        if (a == V5::True) return V5::True;
        return vmax(a, eval5(f.b()));
    }
    case Op::Iff: {
        V5 a = eval5(f.a()), b = eval5(f.b());
        return vmin(vmax(vneg(a), b), vmax(vneg(b), a));
    }
    case Op::All:
    case Op::Ex: {
        bool forall = f.op() == Op::All;
        V5 acc = forall ? V5::True : V5::False;
        bool cut = !complete_;
        for (auto& lam : domain_) {
            if (++spent_ > b_.depth_budget) {
                cut = true;
                acc = forall ? vmin(acc, V5::Unknown) : vmax(acc, V5::Unknown);
                break;
            }
            V5 v = eval5(sbf(f.a(), lam, f.var()));
            acc = forall ? vmin(acc, v) : vmax(acc, v);
            if (acc == (forall ? V5::False : V5::True)) return acc;
        }
        if (cut) acc = forall ? vmin(acc, V5::BTrue) : vmax(acc, V5::BFalse);
        return acc;
    }
    }
    return V5::Unknown;
}

TV3 Evaluator::prime(const Prime& p) { return report(prime5(p)); }

TV3 Evaluator::statement(const Formula& f) {
    if (!free_of(f).empty()) throw std::invalid_argument("not a statement: " + print_formula(f));
    spent_ = 0;
    return report(eval5(f));
}

TV3 Evaluator::gen(const Formula& f) { return statement(indukt::gen(f)); }

TV3 eval_prime(const MathSystem& m, const Prime& p, const EvalBounds& b) { return Evaluator(m, b).prime(p); }
TV3 eval_statement(const MathSystem& m, const Formula& f, const EvalBounds& b) {
    return Evaluator(m, b).statement(f);
}
TV3 eval_gen(const MathSystem& m, const Formula& f, const EvalBounds& b) { return Evaluator(m, b).gen(f); }

}  // namespace indukt
