#include "indukt/transform.hpp"

#include <algorithm>
#include <functional>
#include <unordered_map>

namespace indukt {

// ---------------------------------------------------------------- theta

Formula theta(const Formula& f) {
    switch (f.op()) {
    case Op::Prime: return f;
    case Op::Not: return neg(theta(f.a()));
    case Op::Imp: return imp(theta(f.a()), theta(f.b()));
    case Op::Or: return imp(neg(theta(f.a())), theta(f.b()));
    case Op::And: return neg(imp(theta(f.a()), neg(theta(f.b()))));
    case Op::Iff: {
        Formula a = theta(f.a()), b = theta(f.b());
        return neg(imp(imp(a, b), neg(imp(b, a))));
    }
    case Op::All: return all(f.var(), theta(f.a()));
    case Op::Ex: return neg(all(f.var(), neg(theta(f.a()))));
    }
    return f;
}

MathSystem theta_system(const MathSystem& m) {
    MathSystem out = m;
    for (auto& b : out.basis) b = theta(b);
    for (auto& [n, f] : out.adjoined) f = theta(f);
    out.theta_form = true;
    return out;
}

namespace {

void require_accepted(const MathSystem& m, const Proof& p, const std::string& what) {
    CheckReport r = check_proof(m, p);
    if (!r.accepted)
        throw TransformError(what + ": input proof rejected at step " + std::to_string(r.failed_label) + ": " +
                             r.reason);
}

}  // namespace

Proof theta_proof(const MathSystem& m, const Proof& p) {
    require_accepted(m, p, "theta");
    Proof out = p;
    for (auto& st : out.steps) {
        st.f = theta(st.f);
        if (st.just.kind == Just::Quant && st.just.quant == 'c') {
            st.just.kind = Just::Taut;
            st.just.quant = 0;
        }
        if (st.just.kind == Just::Induct) st.just.G = theta(st.just.G);
    }
    return out;
}

// ---------------------------------------------------------------- C-elimination

Contradiction make_contradiction(Tok z) {
    Formula az = all(z, Formula::prime(make_eq({z}, {z})));
    return {z, conj(az, neg(az))};
}

Contradiction contradiction_for(const MathSystem& m, const VarSet& avoid) {
    VarSet av = m.rbasis_vars();
    av.insert(avoid.begin(), avoid.end());
    return make_contradiction(fresh_var("z", av));
}

Formula c_formula(const Formula& f, Tok q, std::size_t j, const Contradiction& c) {
    switch (f.op()) {
    case Op::Prime: {
        const Prime& p = f.atom();
        return (!p.eq && p.pred == q && p.arity() == j) ? c.f : f;
    }
    case Op::Not: return neg(c_formula(f.a(), q, j, c));
    case Op::All:
    case Op::Ex: return Formula::quant(f.op(), f.var(), c_formula(f.a(), q, j, c));
    default: return Formula::bin(f.op(), c_formula(f.a(), q, j, c), c_formula(f.b(), q, j, c));
    }
}

namespace {

bool mentions(const Formula& f, Tok q, std::size_t j) {
    std::set<PredKey> used;
    collect_preds(f, used);
    return used.count({q, j}) > 0;
}

VarSet proof_vars(const Proof& p) {
    VarSet out;
    for (auto& st : p.steps) {
        VarSet v = vars_of(st.f);
        out.insert(v.begin(), v.end());
    }
    return out;
}

}  // namespace

Proof c_eliminate(const MathSystem& m, Tok q, std::size_t j, const Proof& p) {
    for (std::size_t i = 0; i < m.basis.size(); ++i)
        if (mentions(m.basis[i], q, j))
            throw TransformError("celim: " + tok_name(q) + " occurs " + std::to_string(j) + "-ary in basis axiom " +
                                 std::to_string(i + 1));
    for (auto& [n, f] : m.adjoined)
        if (mentions(f, q, j))
            throw TransformError("celim: " + tok_name(q) + " occurs " + std::to_string(j) + "-ary in " + n);
    require_accepted(m, p, "celim");
    Contradiction c = contradiction_for(m, proof_vars(p));
    Proof out = p;
    for (auto& st : out.steps) {
        Just& jt = st.just;
        if (jt.kind == Just::Eq) {
            RFormula r;
            formula_to_rform(st.f, r);
            auto em = match_eq_schema(r);
            if (em && em->schema == 'c' && !r.concl.eq && r.concl.pred == q && r.concl.arity() == j)
                jt.kind = Just::Taut;
        } else if (jt.kind == Just::Induct) {
            if (jt.pred == q && jt.arity == j) {
                jt = Just{};
                jt.kind = Just::Taut;
            } else {
                jt.G = c_formula(jt.G, q, j, c);
            }
        }
        st.f = c_formula(st.f, q, j, c);
    }
    return out;
}

// ---------------------------------------------------------------- deduction

MathSystem without_adjoined(const MathSystem& m, const std::string& name) {
    MathSystem out = m;
    auto it = std::find_if(out.adjoined.begin(), out.adjoined.end(), [&](auto& e) { return e.first == name; });
    if (it == out.adjoined.end()) throw TransformError("no adjoined statement named " + name);
    out.adjoined.erase(it);
    return out;
}

namespace {

struct Emitter {
    Proof out;
    std::size_t push(Formula f, Just j) {
        Step s;
        s.label = out.steps.size() + 1;
        s.f = std::move(f);
        s.just = std::move(j);
        out.steps.push_back(std::move(s));
        return out.steps.back().label;
    }
    std::size_t taut(Formula f) {
        Just j;
        j.kind = Just::Taut;
        return push(std::move(f), j);
    }
    std::size_t mp(std::size_t minor, std::size_t major) {
        const Formula& maj = out.steps[major - 1].f;
        Just j;
        j.kind = Just::MP;
        j.ref = minor;
        j.ref2 = major;
        return push(maj.b(), j);
    }
    const Formula& at(std::size_t label) const { return out.steps[label - 1].f; }
};

}  // namespace

Proof deduction(const MathSystem& m, const std::string& name, const Proof& p) {
    const Formula* phip = m.adjoined_named(name);
    if (!phip) throw TransformError("deduction: no adjoined statement named " + name);
    const Formula phi = *phip;
    if (!free_of(phi).empty()) throw TransformError("deduction: adjoined formula is not a statement");
    VarSet bvars = m.rbasis_vars();
    for (Tok v : vars_of(phi))
        if (bvars.count(v)) throw TransformError("deduction: " + tok_name(v) + " is shared with the basis R-axioms");
    require_accepted(m, p, "deduction");

    Emitter e;
    std::unordered_map<std::size_t, std::size_t> img;  // input label -> label of -> phi F
    std::unordered_map<std::size_t, const Step*> src;
    for (auto& st : p.steps) {
        const Formula& F = st.f;
        const Just& j = st.just;
        std::size_t lab = 0;
        switch (j.kind) {
        case Just::Adjoined:
            if (j.name == name) {
                lab = e.taut(imp(phi, phi));
                break;
            }
            [[fallthrough]];
        case Just::Taut:
        case Just::Eq:
        case Just::Quant:
        case Just::Basis:
        case Just::Schema: {
            std::size_t a = e.push(F, j);
            std::size_t w = e.taut(imp(F, imp(phi, F)));
            lab = e.mp(a, w);
            break;
        }
        case Just::MP: {
            const Step* s1 = src.at(j.ref);
            const Step* s2 = src.at(j.ref2);
            // work out which citation is the major premise
            bool first_minor = s2->f.op() == Op::Imp && s2->f.a() == s1->f && s2->f.b() == F;
            const Step* minor = first_minor ? s1 : s2;
            const Step* major = first_minor ? s2 : s1;
            const Formula& A = minor->f;
            Formula chain = imp(imp(phi, A), imp(imp(phi, imp(A, F)), imp(phi, F)));
            std::size_t t = e.taut(chain);
            std::size_t x = e.mp(img.at(minor->label), t);
            lab = e.mp(img.at(major->label), x);
            break;
        }
        case Just::Subst: {
            Just js = j;
            js.ref = img.at(j.ref);
            lab = e.push(imp(phi, F), js);
            break;
        }
        case Just::Gen: {
            const Formula& prev = src.at(j.ref)->f;
            Just jg = j;
            jg.ref = img.at(j.ref);
            std::size_t g = e.push(all(j.x, imp(phi, prev)), jg);
            Just jq;
            jq.kind = Just::Quant;
            jq.quant = 'b';
            std::size_t qb = e.push(imp(all(j.x, imp(phi, prev)), imp(phi, all(j.x, prev))), jq);
            lab = e.mp(g, qb);
            break;
        }
        case Just::Induct: {
            Formula G2 = imp(phi, j.G);
            auto old_obl = build_e_obligations(m.S, j.pred, j.arity, j.xs, j.G);
            auto new_obl = build_e_obligations(m.S, j.pred, j.arity, j.xs, G2);
            Just ji = j;
            ji.G = G2;
            ji.oblig.clear();
            for (std::size_t k = 0; k < old_obl.size(); ++k) {
                // find the input step proving the old obligation
                std::size_t from = 0;
                for (auto [a, s] : j.oblig)
                    if (a == old_obl[k].first) from = s;
                if (!from)
                    for (auto& [lab2, s] : src)
                        if (s->f == old_obl[k].second) {
                            from = lab2;
                            break;
                        }
                std::size_t t = e.taut(imp(imp(phi, old_obl[k].second), new_obl[k].second));
                std::size_t o = e.mp(img.at(from), t);
                ji.oblig.emplace_back(new_obl[k].first, o);
            }
            std::size_t r = e.push(induct_conclusion(j.pred, j.xs, G2), ji);
            const Formula& P = e.at(r).a();
            std::size_t t = e.taut(imp(imp(P, imp(phi, j.G)), imp(phi, imp(P, j.G))));
            lab = e.mp(r, t);
            break;
        }
        }
        img[st.label] = lab;
        src[st.label] = &st;
    }
    return e.out;
}

// ---------------------------------------------------------------- constants

namespace {

List replace_in_list(const List& l, Tok from, Tok to) {
    List out = l;
    std::replace(out.begin(), out.end(), from, to);
    return out;
}

}  // namespace

Formula replace_symbol(const Formula& f, Tok from, Tok to) {
    switch (f.op()) {
    case Op::Prime: {
        Prime p = f.atom();
        for (auto& a : p.args) a = replace_in_list(a, from, to);
        return Formula::prime(std::move(p));
    }
    case Op::Not: return neg(replace_symbol(f.a(), from, to));
    case Op::All:
    case Op::Ex: return Formula::quant(f.op(), f.var(), replace_symbol(f.a(), from, to));
    default: return Formula::bin(f.op(), replace_symbol(f.a(), from, to), replace_symbol(f.b(), from, to));
    }
}

Proof generalize_constants(const MathSystem& base, const std::map<Tok, Tok>& const_to_var, const Proof& p) {
    VarSet used = proof_vars(p);
    for (auto& [c, z] : const_to_var) {
        if (base.alphabet.count(c)) throw TransformError("genconst: " + tok_name(c) + " belongs to the base alphabet");
        for (auto& b : base.basis) {
            std::vector<const List*> ls;
            collect_lists(b, ls);
            for (auto* l : ls)
                if (list_has(*l, c)) throw TransformError("genconst: " + tok_name(c) + " occurs in a basis axiom");
        }
        if (!is_var(z)) throw TransformError("genconst: target is not a variable");
        if (used.count(z)) throw TransformError("genconst: " + tok_name(z) + " already occurs in the proof");
    }
    Proof out = p;
    for (auto& st : out.steps)
        for (auto& [c, z] : const_to_var) {
            st.f = replace_symbol(st.f, c, z);
            if (st.just.kind == Just::Subst) st.just.lambda = replace_in_list(st.just.lambda, c, z);
            if (st.just.kind == Just::Induct) st.just.G = replace_symbol(st.just.G, c, z);
        }
    return out;
}

// ---------------------------------------------------------------- N0 relativization

std::vector<Tok> first_occurrence_free(const Formula& f) {
    std::vector<Tok> out;
    std::function<void(const Formula&, VarSet&)> walk = [&](const Formula& g, VarSet& bound) {
        switch (g.op()) {
        case Op::Prime:
            for (auto& a : g.atom().args)
                for (Tok t : a)
                    if (is_var(t) && !bound.count(t) && std::find(out.begin(), out.end(), t) == out.end())
                        out.push_back(t);
            return;
        case Op::Not: walk(g.a(), bound); return;
        case Op::All:
        case Op::Ex: {
            bool fresh = bound.insert(g.var()).second;
            walk(g.a(), bound);
            if (fresh) bound.erase(g.var());
            return;
        }
        default:
            walk(g.a(), bound);
            walk(g.b(), bound);
        }
    };
    VarSet bound;
    walk(f, bound);
    return out;
}

Formula relativize_gamma(const Formula& f, const Formula& inner, Tok n0) {
    std::vector<Tok> vs = first_occurrence_free(f);
    Formula out = inner;
    for (auto it = vs.rbegin(); it != vs.rend(); ++it) out = imp(Formula::prime(make_pred(n0, {{*it}})), out);
    return out;
}

Formula relativize_psi(const Formula& f, Tok n0) {
    switch (f.op()) {
    case Op::Prime: return f;
    case Op::Not: return neg(relativize_psi(f.a(), n0));
    case Op::All: return all(f.var(), imp(Formula::prime(make_pred(n0, {{f.var()}})), relativize_psi(f.a(), n0)));
    case Op::Ex: return ex(f.var(), conj(Formula::prime(make_pred(n0, {{f.var()}})), relativize_psi(f.a(), n0)));
    default: return Formula::bin(f.op(), relativize_psi(f.a(), n0), relativize_psi(f.b(), n0));
    }
}

Formula strip_gamma(const Formula& f, std::size_t n, Tok n0) {
    Formula cur = f;
    for (std::size_t k = 0; k < n; ++k) {
        if (cur.op() != Op::Imp || cur.a().op() != Op::Prime || cur.a().atom().eq || cur.a().atom().pred != n0)
            throw TransformError("strip_gamma: missing N0 premise");
        cur = cur.b();
    }
    return cur;
}

Formula unrelativize_psi(const Formula& f, Tok n0) {
    auto guard = [&](const Formula& g, Tok v) {
        return g.op() == Op::Prime && !g.atom().eq && g.atom().pred == n0 && g.atom().args.size() == 1 &&
               g.atom().args[0] == List{v};
    };
    switch (f.op()) {
    case Op::Prime: return f;
    case Op::Not: return neg(unrelativize_psi(f.a(), n0));
    case Op::All:
        if (f.a().op() != Op::Imp || !guard(f.a().a(), f.var())) throw TransformError("unrelativize: unguarded forall");
        return all(f.var(), unrelativize_psi(f.a().b(), n0));
    case Op::Ex:
        if (f.a().op() != Op::And || !guard(f.a().a(), f.var())) throw TransformError("unrelativize: unguarded exists");
        return ex(f.var(), unrelativize_psi(f.a().b(), n0));
    default: return Formula::bin(f.op(), unrelativize_psi(f.a(), n0), unrelativize_psi(f.b(), n0));
    }
}

}  // namespace indukt

namespace indukt {

Proof rderivation_to_proof(const RDerivation& d) {
    Proof p;
    for (auto& rs : d.steps) {
        Step st;
        st.label = rs.label;
        st.f = rform_to_formula(rs.f);
        switch (rs.just.kind) {
        case RJust::Axiom:
            st.just.kind = Just::Basis;
            st.just.ref = rs.just.ref;
            break;
        case RJust::AxiomEq: st.just.kind = Just::Eq; break;
        case RJust::MP:
            st.just.kind = Just::MP;
            st.just.ref = rs.just.ref;
            st.just.ref2 = rs.just.ref2;
            break;
        case RJust::Subst:
            st.just.kind = Just::Subst;
            st.just.ref = rs.just.ref;
            st.just.x = rs.just.x;
            st.just.lambda = rs.just.lambda;
            break;
        }
        p.steps.push_back(std::move(st));
    }
    return p;
}

}  // namespace indukt
