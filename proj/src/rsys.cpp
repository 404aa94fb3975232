#include "indukt/rsys.hpp"

#include "indukt/binding.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <unordered_set>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace indukt {

// ---------------------------------------------------------------- equality schemas

std::optional<EqMatch> match_eq_schema(const RFormula& r) {
    const Prime& c = r.concl;
    if (r.prem.empty()) {
        if (c.eq && c.args[0] == c.args[1]) return EqMatch{'a', 0, 0};
        return std::nullopt;
    }
    if (r.prem.size() == 2 && c.eq && r.prem[0].eq && r.prem[1].eq) {
        const Prime& e = r.prem[0];
        const List& sig = r.prem[1].args[0];
        const List& tau = r.prem[1].args[1];
        if (!sig.empty()) {
            for (std::size_t k = 0; k < 2; ++k) {
                if (e.args[1 - k] != c.args[1 - k]) continue;
                const List& from = e.args[k];
                const List& to = c.args[k];
                if (from.size() < sig.size() || from.size() - sig.size() + tau.size() != to.size()) continue;
                for (std::size_t p = 0; p + sig.size() <= from.size(); ++p) {
                    if (!std::equal(sig.begin(), sig.end(), from.begin() + p)) continue;
                    if (!std::equal(from.begin(), from.begin() + p, to.begin())) continue;
                    if (!std::equal(tau.begin(), tau.end(), to.begin() + p)) continue;
                    if (std::equal(from.begin() + p + sig.size(), from.end(), to.begin() + p + tau.size()))
                        return EqMatch{'b', k, p};
                }
            }
        }
    }
    const std::size_t n = r.prem.size() - 1;
    const Prime& pp = r.prem[n];
    if (n >= 1 && !c.eq && !pp.eq && pp.pred == c.pred && pp.arity() == n && c.arity() == n) {
        bool ok = true;
        for (std::size_t k = 0; k < n && ok; ++k)
            ok = r.prem[k].eq && r.prem[k].args[0] == pp.args[k] && r.prem[k].args[1] == c.args[k];
        if (ok) return EqMatch{'c', 0, 0};
    }
    return std::nullopt;
}

bool is_eq_raxiom(const RecursiveSystem&, const RFormula& r) { return match_eq_schema(r).has_value(); }

// ---------------------------------------------------------------- derivation files

RDerivation rderivation_from_sexp(const Sexp& s, const SymbolSet* alphabet) {
    if (!s.head_is("rproof")) throw ParseError("expected (rproof (step ...)*)", s.line);
    RDerivation d;
    for (std::size_t i = 1; i < s.items.size(); ++i) {
        const Sexp& st = s.items[i];
        if (!st.head_is("step") || st.items.size() != 4) throw ParseError("expected (step N RFORMULA JUST)", st.line);
        RStep step;
        step.label = std::stoul(st.items[1].atom);
        step.f = rformula_from_sexp(st.items[2], alphabet);
        const Sexp& j = st.items[3];
        auto num = [&](std::size_t k) {
            if (k >= j.items.size() || j.items[k].is_list) throw ParseError("bad justification", j.line);
            return std::stoul(j.items[k].atom);
        };
        if (j.head_is("axiom") && j.items.size() == 2) {
            step.just.kind = RJust::Axiom;
            step.just.ref = num(1);
        } else if (j.head_is("axiom-eq") && j.items.size() == 1) {
            step.just.kind = RJust::AxiomEq;
        } else if (j.head_is("mp") && j.items.size() == 3) {
            step.just.kind = RJust::MP;
            step.just.ref = num(1);
            step.just.ref2 = num(2);
        } else if (j.head_is("subst") && j.items.size() == 4) {
            step.just.kind = RJust::Subst;
            step.just.ref = num(1);
            step.just.x = intern_var(j.items[2].atom);
            step.just.lambda = list_from_sexp(j.items[3], alphabet);
        } else {
            throw ParseError("unknown justification " + print_sexp(j), j.line);
        }
        d.steps.push_back(std::move(step));
    }
    return d;
}

std::string print_rderivation(const RDerivation& d) {
    std::string out = "(rproof";
    for (auto& st : d.steps) {
        out += "\n  (step " + std::to_string(st.label) + " " + print_rformula(st.f) + " ";
        switch (st.just.kind) {
        case RJust::Axiom: out += "(axiom " + std::to_string(st.just.ref) + ")"; break;
        case RJust::AxiomEq: out += "(axiom-eq)"; break;
        case RJust::MP: out += "(mp " + std::to_string(st.just.ref) + " " + std::to_string(st.just.ref2) + ")"; break;
        case RJust::Subst:
            out += "(subst " + std::to_string(st.just.ref) + " " + tok_name(st.just.x) + " " +
                   print_list(st.just.lambda) + ")";
            break;
        }
        out += ")";
    }
    return out + ")\n";
}

Sexp rderivation_to_sexp(const RDerivation& d) { return read_sexp(print_rderivation(d)); }

namespace {
bool lists_in(const LGrammar& g, const Prime& p) {
    for (auto& a : p.args)
        if (!member(g, a)) return false;
    return true;
}
}  // namespace

RReport check_rderivation(const RecursiveSystem& s, const LGrammar& lang, const RDerivation& d) {
    RReport rep;
    std::unordered_map<std::size_t, std::size_t> at;  // label -> position
    auto fail = [&](const RStep& st, std::string why) {
        rep.accepted = false;
        rep.failed_label = st.label;
        rep.reason = std::move(why);
        return rep;
    };
    for (std::size_t i = 0; i < d.steps.size(); ++i) {
        const RStep& st = d.steps[i];
        if (at.count(st.label)) return fail(st, "duplicate step label");
        for (auto& p : st.f.prem)
            if (!lists_in(lang, p)) return fail(st, "argument list outside L");
        if (!lists_in(lang, st.f.concl)) return fail(st, "argument list outside L");
        auto cite = [&](std::size_t label) -> const RFormula* {
            auto it = at.find(label);
            return it == at.end() ? nullptr : &d.steps[it->second].f;
        };
        switch (st.just.kind) {
        case RJust::Axiom:
            if (st.just.ref < 1 || st.just.ref > s.basis.size()) return fail(st, "no such basis R-axiom");
            if (!(s.basis[st.just.ref - 1] == st.f)) return fail(st, "formula differs from basis R-axiom");
            break;
        case RJust::AxiomEq:
            if (!match_eq_schema(st.f)) return fail(st, "not an equality R-axiom");
            break;
        case RJust::MP: {
            const RFormula* a = cite(st.just.ref);
            const RFormula* b = cite(st.just.ref2);
            if (!a || !b) return fail(st, "cites a missing or later step");
            auto mp = [&](const RFormula* minor, const RFormula* major) {
                if (!minor->prem.empty() || major->prem.empty() || !(major->prem[0] == minor->concl)) return false;
                RFormula r;
                r.prem.assign(major->prem.begin() + 1, major->prem.end());
                r.concl = major->concl;
                return r == st.f;
            };
            if (!mp(a, b) && !mp(b, a)) return fail(st, "modus ponens: minor premise does not match");
            break;
        }
        case RJust::Subst: {
            const RFormula* a = cite(st.just.ref);
            if (!a) return fail(st, "cites a missing or later step");
            if (!member(lang, st.just.lambda)) return fail(st, "substituted list outside L");
            if (!(subst_rform(*a, st.just.x, st.just.lambda) == st.f)) return fail(st, "substitution result differs");
            break;
        }
        }
        at[st.label] = i;
        ++rep.steps;
    }
    return rep;
}

// ---------------------------------------------------------------- saturation

std::size_t list_size_measure(const Prime& p) {
    std::size_t m = 0;
    for (auto& a : p.args) m = std::max(m, a.size());
    return m;
}

std::size_t total_size(const Prime& p) {
    std::size_t m = 0;
    for (auto& a : p.args) m += a.size();
    return m;
}

bool FactSet::contains(const Prime& p) const {
    if (index.count(p)) return true;
    if (p.eq && p.args[0] == p.args[1] && p.args[0].size() <= bound && is_ground(p.args[0]))
        return member(lang, p.args[0]);
    return false;
}

std::optional<std::uint32_t> FactSet::id_of(const Prime& p) const {
    auto it = index.find(p);
    if (it == index.end()) return std::nullopt;
    return it->second;
}

std::vector<std::string> FactSet::dump() const {
    std::vector<std::string> out;
    out.reserve(facts.size());
    for (auto& f : facts) out.push_back(print_prime(f));
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

struct MemberCache {
    const LGrammar* g;
    std::unordered_map<List, bool, ListHash> memo;
    bool in(const List& l) {
        auto it = memo.find(l);
        if (it != memo.end()) return it->second;
        bool r = member(*g, l);
        memo.emplace(l, r);
        return r;
    }
};

using Bind = std::vector<std::pair<Tok, List>>;

const List* lookup(const Bind& b, Tok v) {
    for (auto& [k, val] : b)
        if (k == v) return &val;
    return nullptr;
}

// enumerate bindings of pattern lists pats[k..] against ground lists gs[k..]
void match_lists(const std::vector<List>& pats, const std::vector<List>& gs, std::size_t k, std::size_t pi,
                 std::size_t gi, Bind& b, MemberCache& mc, const std::function<void()>& done) {
    if (k == pats.size()) {
        done();
        return;
    }
    const List& pat = pats[k];
    const List& g = gs[k];
    if (pi == pat.size()) {
        if (gi == g.size()) match_lists(pats, gs, k + 1, 0, 0, b, mc, done);
        return;
    }
    Tok t = pat[pi];
    if (!is_var(t)) {
        if (gi < g.size() && g[gi] == t) match_lists(pats, gs, k, pi + 1, gi + 1, b, mc, done);
        return;
    }
    if (const List* v = lookup(b, t)) {
        if (g.size() - gi >= v->size() && std::equal(v->begin(), v->end(), g.begin() + gi))
            match_lists(pats, gs, k, pi + 1, gi + v->size(), b, mc, done);
        return;
    }
    // remaining pattern symbols need at least one token each
    std::size_t rest = pat.size() - pi - 1;
    if (g.size() - gi < rest) return;
    for (std::size_t len = 1; gi + len + rest <= g.size(); ++len) {
        List val(g.begin() + gi, g.begin() + gi + len);
        if (!mc.in(val)) continue;
        b.emplace_back(t, std::move(val));
        match_lists(pats, gs, k, pi + 1, gi + len, b, mc, done);
        b.pop_back();
    }
}

bool same_shape(const Prime& pat, const Prime& g) {
    return pat.eq == g.eq && (pat.eq || pat.pred == g.pred) && pat.arity() == g.arity();
}

struct Cand {
    Prime fact;
    FactProv prov;
};

struct AxiomInfo {
    std::vector<Tok> vars;        // all variables, sorted
    std::vector<Tok> free_concl;  // conclusion variables absent from the premises
};

struct Saturator {
    const RecursiveSystem& s;
    FactSet& fs;
    std::size_t bound, budget;
    std::vector<AxiomInfo> info;

    // indices, rebuilt incrementally after each merge
    std::map<std::tuple<bool, Tok, std::size_t>, std::vector<std::uint32_t>> by_key;
    std::unordered_map<List, std::vector<std::uint32_t>, ListHash> eq_by_lhs;  // eq facts by lhs
    std::unordered_map<List, std::vector<std::uint32_t>, ListHash> eq_by_rhs;
    std::unordered_map<List, std::vector<std::uint32_t>, ListHash> eq_by_sub;  // eq facts by substring
    std::unordered_map<List, std::vector<std::uint32_t>, ListHash> pred_by_arg;

    bool have_universe = false;
    std::vector<List> universe;
    std::unordered_map<List, std::vector<std::pair<std::uint32_t, std::uint32_t>>, ListHash> uni_by_sub;

    Saturator(const RecursiveSystem& s_, FactSet& fs_, std::size_t bound_, std::size_t budget_)
        : s(s_), fs(fs_), bound(bound_), budget(budget_) {
        for (auto& r : s.basis) {
            AxiomInfo ai;
            VarSet all = vars_of(r), prem;
            for (auto& p : r.prem) vars_of_prime(p, prem);
            ai.vars.assign(all.begin(), all.end());
            for (Tok v : all)
                if (!prem.count(v)) ai.free_concl.push_back(v);
            info.push_back(std::move(ai));
        }
    }

    void need_universe() {
        if (have_universe) return;
        have_universe = true;
        bool cut = false;
        universe = enumerate_ground(fs.lang, bound, budget, &cut);
        if (cut) fs.truncated = true;
        for (std::uint32_t u = 0; u < universe.size(); ++u) {
            const List& l = universe[u];
            for (std::uint32_t p = 0; p < l.size(); ++p)
                for (std::size_t len = 1; p + len <= l.size(); ++len)
                    uni_by_sub[List(l.begin() + p, l.begin() + p + len)].emplace_back(u, p);
        }
    }

    static std::tuple<bool, Tok, std::size_t> key(const Prime& p) {
        return {p.eq, p.eq ? 0 : p.pred, p.arity()};
    }

    bool fits(const Prime& p, MemberCache& mc) const {
        for (auto& a : p.args)
            if (a.size() > bound || !mc.in(a)) return false;
        return true;
    }

    bool is_new(const Prime& p) const {
        if (p.eq && p.args[0] == p.args[1]) return false;  // implicit
        return !fs.index.count(p);
    }

    void emit(std::vector<Cand>& out, Prime p, FactProv pv, MemberCache& mc) const {
        if (!is_new(p) || !fits(p, mc)) return;
        out.push_back({std::move(p), std::move(pv)});
    }

    // finish a basis-rule match: instantiate conclusion-only variables from the universe
    void conclude(std::uint32_t ax, Bind& b, const std::vector<std::uint32_t>& prem_ids, std::vector<Cand>& out,
                  MemberCache& mc, std::size_t k = 0) const {
        const AxiomInfo& ai = info[ax];
        if (k < ai.free_concl.size()) {
            for (auto& u : universe) {
                b.emplace_back(ai.free_concl[k], u);
                conclude(ax, b, prem_ids, out, mc, k + 1);
                b.pop_back();
            }
            return;
        }
        Prime c = s.basis[ax].concl;
        FactProv pv;
        pv.kind = FactProv::Basis;
        pv.axiom = ax;
        pv.prem = prem_ids;
        for (Tok v : ai.vars) {
            const List* val = lookup(b, v);
            pv.binding.emplace_back(v, *val);
            c = subst_prime(c, v, *val);
        }
        emit(out, std::move(c), std::move(pv), mc);
    }

    static constexpr std::size_t kNoDelta = static_cast<std::size_t>(-1);

    // fully bound instance of a pattern list, if every variable has a value
    static std::optional<List> ground(const List& pat, const Bind& b) {
        List out;
        for (Tok t : pat) {
            if (!is_var(t)) {
                out.push_back(t);
                continue;
            }
            const List* v = lookup(b, t);
            if (!v) return std::nullopt;
            out.insert(out.end(), v->begin(), v->end());
        }
        return out;
    }

    // join premises of axiom `ax`; premise j is the delta fact, earlier ones old, later ones any.
    // The delta premise goes first so the rest can be found through the indices.
    void join(std::uint32_t ax, std::size_t j, std::size_t step, std::uint32_t d0, std::uint32_t d1,
              std::uint32_t delta_fact, Bind& b, std::vector<std::uint32_t>& ids, std::vector<Cand>& out,
              MemberCache& mc) const {
        const RFormula& r = s.basis[ax];
        const bool no_delta = j == kNoDelta;
        if (step == r.prem.size()) {
            // provenance wants premise order
            std::vector<std::uint32_t> ordered(ids.size());
            if (no_delta) ordered = ids;
            else {
                ordered[j] = ids[0];
                for (std::size_t i = 1; i < ids.size(); ++i) ordered[i - 1 < j ? i - 1 : i] = ids[i];
            }
            conclude(ax, b, ordered, out, mc);
            return;
        }
        const std::size_t k = no_delta ? step : step == 0 ? j : (step - 1 < j ? step - 1 : step);
        const Prime& pat = r.prem[k];
        const std::uint32_t hi = no_delta ? 0 : k == j ? d1 : (k < j ? d0 : d1);
        auto try_fact = [&](std::uint32_t id) {
            if (id >= hi) return;
            const Prime& g = fs.facts[id];
            if (!same_shape(pat, g)) return;
            std::size_t mark = b.size();
            ids.push_back(id);
            match_lists(pat.args, g.args, 0, 0, 0, b, mc,
                        [&] { join(ax, j, step + 1, d0, d1, delta_fact, b, ids, out, mc); });
            ids.pop_back();
            b.resize(mark);
        };
        if (k == j) {
            try_fact(delta_fact);
            return;
        }
        std::vector<std::optional<List>> inst;
        bool all_bound = true;
        for (auto& a : pat.args) {
            inst.push_back(ground(a, b));
            all_bound = all_bound && inst.back().has_value();
        }
        // reflexive equations are never stored; they count as facts from the start
        if (pat.eq) {
            auto refl = [&](const List& l) {
                if (l.size() > bound || !mc.in(l)) return;
                std::size_t mark = b.size();
                ids.push_back(kNoFact);
                const std::vector<List> gs{l, l};
                match_lists(pat.args, gs, 0, 0, 0, b, mc,
                            [&] { join(ax, j, step + 1, d0, d1, delta_fact, b, ids, out, mc); });
                ids.pop_back();
                b.resize(mark);
            };
            if (inst[0]) refl(*inst[0]);
            else if (inst[1]) refl(*inst[1]);
            else
                for (auto& u : universe) refl(u);
        }
        if (all_bound) {
            Prime q = pat;
            for (std::size_t i = 0; i < inst.size(); ++i) q.args[i] = std::move(*inst[i]);
            auto it = fs.index.find(q);
            if (it != fs.index.end()) try_fact(it->second);
            return;
        }
        const std::vector<std::uint32_t>* cands = nullptr;
        if (pat.eq) {
            const auto& idx = inst[0] ? eq_by_lhs : eq_by_rhs;
            const auto& key_list = inst[0] ? inst[0] : inst[1];
            if (key_list) {
                auto it = idx.find(*key_list);
                if (it == idx.end()) return;
                cands = &it->second;
            }
        } else {
            for (auto& a : inst)
                if (a) {
                    auto it = pred_by_arg.find(*a);
                    if (it == pred_by_arg.end()) return;
                    cands = &it->second;
                    break;
                }
        }
        if (!cands) {
            auto it = by_key.find(key(pat));
            if (it == by_key.end()) return;
            cands = &it->second;
        }
        for (std::uint32_t id : *cands) {
            if (id >= hi) break;
            try_fact(id);
        }
    }

    void derive_from(std::uint32_t f, std::uint32_t d0, std::uint32_t d1, std::vector<Cand>& out,
                     MemberCache& mc) const {
        const Prime& fact = fs.facts[f];
        // basis rules with this fact at premise j
        for (std::uint32_t ax = 0; ax < s.basis.size(); ++ax) {
            const RFormula& r = s.basis[ax];
            for (std::size_t j = 0; j < r.prem.size(); ++j) {
                if (!same_shape(r.prem[j], fact)) continue;
                Bind b;
                std::vector<std::uint32_t> ids;
                join(ax, j, 0, d0, d1, f, b, ids, out, mc);
            }
        }
        if (fact.eq) {
            const List& sig = fact.args[0];
            const List& tau = fact.args[1];
            // as E: replace an occurrence of some known lhs
            for (std::uint32_t k = 0; k < 2; ++k) {
                const List& a = fact.args[k];
                for (std::uint32_t p = 0; p < a.size(); ++p) {
                    for (std::size_t len = 1; p + len <= a.size(); ++len) {
                        auto it = eq_by_lhs.find(List(a.begin() + p, a.begin() + p + len));
                        if (it == eq_by_lhs.end()) continue;
                        for (std::uint32_t e : it->second) {
                            if (e >= d1) break;
                            replace(fact, f, k, p, len, fs.facts[e].args[1], e, out, mc);
                        }
                    }
                }
            }
            // as the equation: rewrite older E facts containing sig
            auto it = eq_by_sub.find(sig);
            if (it != eq_by_sub.end()) {
                for (std::uint32_t e : it->second) {
                    if (e >= d0) break;
                    const Prime& E = fs.facts[e];
                    for (std::uint32_t k = 0; k < 2; ++k) {
                        const List& a = E.args[k];
                        for (std::uint32_t p = 0; p + sig.size() <= a.size(); ++p)
                            if (std::equal(sig.begin(), sig.end(), a.begin() + p))
                                replace(E, e, k, p, sig.size(), tau, f, out, mc);
                    }
                }
            }
            // ... and the implicit reflexive E = ~ l,l
            auto ut = uni_by_sub.find(sig);
            if (ut != uni_by_sub.end()) {
                for (auto [u, p] : ut->second) {
                    const List& l = universe[u];
                    Prime E = make_eq(l, l);
                    for (std::uint32_t k = 0; k < 2; ++k) {
                        FactProv pv;
                        pv.kind = FactProv::Replace;
                        pv.prem = {kNoFact, f};
                        pv.refl = l;
                        pv.arg = k;
                        pv.pos = p;
                        Prime c = E;
                        c.args[k] = splice(l, p, sig.size(), tau);
                        emit(out, std::move(c), std::move(pv), mc);
                    }
                }
            }
            // congruence on older predicate facts with an argument equal to sig
            auto pt = pred_by_arg.find(sig);
            if (pt != pred_by_arg.end()) {
                for (std::uint32_t q : pt->second) {
                    if (q >= d0) break;
                    congr(q, f, out, mc);
                }
            }
        } else {
            for (std::uint32_t k = 0; k < fact.arity(); ++k) {
                auto it = eq_by_lhs.find(fact.args[k]);
                if (it == eq_by_lhs.end()) continue;
                for (std::uint32_t e : it->second) {
                    if (e >= d1) break;
                    congr(f, e, out, mc);
                }
            }
        }
    }

    static List splice(const List& a, std::size_t p, std::size_t len, const List& tau) {
        List out(a.begin(), a.begin() + p);
        out.insert(out.end(), tau.begin(), tau.end());
        out.insert(out.end(), a.begin() + p + len, a.end());
        return out;
    }

    void replace(const Prime& E, std::uint32_t e_id, std::uint32_t k, std::uint32_t p, std::size_t len,
                 const List& tau, std::uint32_t eq_id, std::vector<Cand>& out, MemberCache& mc) const {
        Prime c = E;
        c.args[k] = splice(E.args[k], p, len, tau);
        FactProv pv;
        pv.kind = FactProv::Replace;
        pv.prem = {e_id, eq_id};
        pv.arg = k;
        pv.pos = p;
        emit(out, std::move(c), std::move(pv), mc);
    }

    void congr(std::uint32_t q, std::uint32_t e, std::vector<Cand>& out, MemberCache& mc) const {
        const Prime& P = fs.facts[q];
        const Prime& E = fs.facts[e];
        for (std::uint32_t k = 0; k < P.arity(); ++k) {
            if (P.args[k] != E.args[0]) continue;
            Prime c = P;
            c.args[k] = E.args[1];
            FactProv pv;
            pv.kind = FactProv::Congr;
            pv.prem = {q, e};
            pv.arg = k;
            emit(out, std::move(c), std::move(pv), mc);
        }
    }

    // returns false when the budget stopped the merge
    bool merge(std::vector<Cand>& cands) {
        std::sort(cands.begin(), cands.end(), [](const Cand& a, const Cand& b) {
            if (a.fact != b.fact) return a.fact < b.fact;
            return a.prov < b.prov;
        });
        for (std::size_t i = 0; i < cands.size(); ++i) {
            if (i > 0 && cands[i].fact == cands[i - 1].fact) continue;
            if (fs.index.count(cands[i].fact)) continue;
            if (fs.facts.size() >= budget) {
                fs.truncated = true;
                return false;
            }
            add(std::move(cands[i].fact), std::move(cands[i].prov));
        }
        return true;
    }

    void add(Prime p, FactProv pv) {
        auto id = static_cast<std::uint32_t>(fs.facts.size());
        by_key[key(p)].push_back(id);
        if (p.eq) {
            eq_by_lhs[p.args[0]].push_back(id);
            eq_by_rhs[p.args[1]].push_back(id);
            std::unordered_set<List, ListHash> subs;
            for (auto& a : p.args)
                for (std::size_t i = 0; i < a.size(); ++i)
                    for (std::size_t len = 1; i + len <= a.size(); ++len) subs.emplace(a.begin() + i, a.begin() + i + len);
            for (auto& sub : subs) eq_by_sub[sub].push_back(id);
        } else {
            std::unordered_set<List, ListHash> seen;
            for (auto& a : p.args)
                if (seen.insert(a).second) pred_by_arg[a].push_back(id);
        }
        fs.index.emplace(p, id);
        fs.facts.push_back(std::move(p));
        fs.prov.push_back(std::move(pv));
    }

    void run(Exec exec) {
        bool needs_universe = false;
        for (auto& ai : info) needs_universe = needs_universe || !ai.free_concl.empty();
        for (auto& r : s.basis)
            for (auto& p : r.prem) needs_universe = needs_universe || p.eq;
        if (needs_universe) need_universe();

        std::vector<Cand> cands;
        {
            MemberCache mc{&fs.lang, {}};
            for (std::uint32_t ax = 0; ax < s.basis.size(); ++ax) {
                Bind b;
                if (s.basis[ax].prem.empty()) {
                    conclude(ax, b, {}, cands, mc);
                    continue;
                }
                // premises met by reflexive equations alone
                bool all_eq = true;
                for (auto& p : s.basis[ax].prem) all_eq = all_eq && p.eq;
                if (!all_eq) continue;
                std::vector<std::uint32_t> ids;
                join(ax, kNoDelta, 0, 0, 0, 0, b, ids, cands, mc);
            }
        }
        std::uint32_t d0 = 0;
        if (!merge(cands)) return;
        fs.rounds = 1;
        for (;;) {
            auto d1 = static_cast<std::uint32_t>(fs.facts.size());
            if (d0 == d1) break;
            for (std::uint32_t f = d0; f < d1 && !have_universe; ++f)
                if (fs.facts[f].eq) need_universe();
            if (fs.truncated) break;

            std::size_t n = d1 - d0;
            std::vector<std::vector<Cand>> per(n);
            if (exec == Exec::Parallel) {
#pragma omp parallel
                {
                    MemberCache mc{&fs.lang, {}};
#pragma omp for schedule(dynamic, 4)
                    for (std::size_t i = 0; i < n; ++i) derive_from(d0 + static_cast<std::uint32_t>(i), d0, d1, per[i], mc);
                }
            } else {
                MemberCache mc{&fs.lang, {}};
                for (std::size_t i = 0; i < n; ++i) derive_from(d0 + static_cast<std::uint32_t>(i), d0, d1, per[i], mc);
            }
            cands.clear();
            for (auto& v : per)
                for (auto& c : v) cands.push_back(std::move(c));
            ++fs.rounds;
            d0 = d1;
            if (!merge(cands)) return;
        }
    }
};

}  // namespace

FactSet saturate(const RecursiveSystem& s, const LGrammar& lang, std::size_t size_bound, std::size_t step_budget,
                 Exec exec) {
    FactSet fs;
    fs.lang = lang;
    fs.bound = size_bound;
    Saturator sat(s, fs, size_bound, step_budget);
    sat.run(exec);
    return fs;
}

// ---------------------------------------------------------------- reconstruction

namespace {

RJust mkj(RJust::Kind k) {
    RJust j;
    j.kind = k;
    return j;
}

struct Rebuilder {
    const RecursiveSystem& s;
    const FactSet& fs;
    RDerivation d;
    std::unordered_map<Prime, std::size_t, PrimeHash> done;  // fact -> label

    std::size_t push(RFormula f, RJust j) {
        RStep st;
        st.label = d.steps.size() + 1;
        st.f = std::move(f);
        st.just = std::move(j);
        d.steps.push_back(std::move(st));
        return d.steps.back().label;
    }

    std::size_t refl(const List& l) {
        Prime p = make_eq(l, l);
        auto it = done.find(p);
        if (it != done.end()) return it->second;
        std::size_t lab = push(RFormula{{}, p}, mkj(RJust::AxiomEq));
        done.emplace(p, lab);
        return lab;
    }

    // detach the premises of step `lab` one at a time
    std::size_t detach(std::size_t lab, const std::vector<std::size_t>& minors) {
        for (std::size_t m : minors) {
            const RFormula& major = d.steps[lab - 1].f;
            RFormula r;
            r.prem.assign(major.prem.begin() + 1, major.prem.end());
            r.concl = major.concl;
            RJust j = mkj(RJust::MP);
            j.ref = m;
            j.ref2 = lab;
            lab = push(std::move(r), j);
        }
        return lab;
    }

    std::size_t fact(std::uint32_t id) {
        const Prime& p = fs.facts[id];
        auto it = done.find(p);
        if (it != done.end()) return it->second;
        const FactProv& pv = fs.prov[id];
        std::size_t lab = 0;
        switch (pv.kind) {
        case FactProv::Basis: {
            std::vector<std::size_t> minors;
            for (std::size_t k = 0; k < pv.prem.size(); ++k) {
                if (pv.prem[k] != kNoFact) {
                    minors.push_back(fact(pv.prem[k]));
                    continue;
                }
                Prime e = s.basis[pv.axiom].prem[k];
                for (auto& [v, val] : pv.binding) e = subst_prime(e, v, val);
                minors.push_back(refl(e.args[0]));
            }
            RJust ax = mkj(RJust::Axiom);
            ax.ref = pv.axiom + 1;
            lab = push(s.basis[pv.axiom], ax);
            RFormula cur = s.basis[pv.axiom];
            for (auto& [v, val] : pv.binding) {
                cur = subst_rform(cur, v, val);
                RJust j = mkj(RJust::Subst);
                j.ref = lab;
                j.x = v;
                j.lambda = val;
                lab = push(cur, j);
            }
            lab = detach(lab, minors);
            break;
        }
        case FactProv::Replace: {
            const Prime& eq = fs.facts[pv.prem[1]];
            std::size_t e_lab = pv.prem[0] == kNoFact ? refl(pv.refl) : fact(pv.prem[0]);
            std::size_t q_lab = fact(pv.prem[1]);
            Prime E = pv.prem[0] == kNoFact ? make_eq(pv.refl, pv.refl) : fs.facts[pv.prem[0]];
            lab = push(RFormula{{E, eq}, p}, mkj(RJust::AxiomEq));
            lab = detach(lab, {e_lab, q_lab});
            break;
        }
        case FactProv::Congr: {
            const Prime& P = fs.facts[pv.prem[0]];
            const Prime& eq = fs.facts[pv.prem[1]];
            std::size_t p_lab = fact(pv.prem[0]);
            std::size_t q_lab = fact(pv.prem[1]);
            RFormula ax;
            std::vector<std::size_t> minors;
            for (std::size_t k = 0; k < P.arity(); ++k) {
                if (k == pv.arg) {
                    ax.prem.push_back(eq);
                    minors.push_back(q_lab);
                } else {
                    ax.prem.push_back(make_eq(P.args[k], P.args[k]));
                    minors.push_back(refl(P.args[k]));
                }
            }
            ax.prem.push_back(P);
            minors.push_back(p_lab);
            ax.concl = p;
            lab = push(std::move(ax), mkj(RJust::AxiomEq));
            lab = detach(lab, minors);
            break;
        }
        }
        done.emplace(p, lab);
        return lab;
    }
};

}  // namespace

RDerivation reconstruct(const RecursiveSystem& s, const FactSet& fs, const Prime& p) {
    Rebuilder rb{s, fs, {}, {}};
    if (auto id = fs.id_of(p)) rb.fact(*id);
    else if (fs.contains(p)) rb.refl(p.args[0]);
    else throw std::invalid_argument("fact not in saturation: " + print_prime(p));
    return rb.d;
}

// ---------------------------------------------------------------- verdicts

const char* tri_name(Tri t) {
    switch (t) {
    case Tri::True: return "True";
    case Tri::False: return "False";
    default: return "Unknown";
    }
}

bool monotone_certificate(const RecursiveSystem& s) {
    auto occ = [](const Prime& p, Tok v) {
        std::size_t n = 0;
        for (auto& a : p.args) n += std::count(a.begin(), a.end(), v);
        return n;
    };
    auto consts = [](const Prime& p) {
        std::size_t n = 0;
        for (auto& a : p.args) n += std::count_if(a.begin(), a.end(), [](Tok t) { return !is_var(t); });
        return n;
    };
    // every premise instance is at most as large as the conclusion instance, and
    // no equations are derived (replacement can shrink lists)
    for (auto& r : s.basis) {
        if (r.concl.eq) return false;
        for (auto& p : r.prem) {
            if (consts(p) > consts(r.concl)) return false;
            VarSet vs;
            vars_of_prime(p, vs);
            for (Tok v : vs)
                if (occ(r.concl, v) < occ(p, v)) return false;
        }
    }
    return true;
}

Tri r_derivable_in(const RecursiveSystem& s, const FactSet& fs, const Prime& p) {
    if (fs.contains(p)) return Tri::True;
    if (!fs.truncated && monotone_certificate(s) && fs.bound >= total_size(p) + kFalseSlack) return Tri::False;
    return Tri::Unknown;
}

Tri r_derivable(const RecursiveSystem& s, const LGrammar& lang, const Prime& p, std::size_t size_bound,
                std::size_t step_budget) {
    for (auto& a : p.args)
        if (!is_ground(a) || !member(lang, a)) return Tri::Unknown;
    FactSet fs = saturate(s, lang, size_bound, step_budget);
    return r_derivable_in(s, fs, p);
}

}  // namespace indukt
