#include "indukt/kernel.hpp"

#include "indukt/transform.hpp"

#include <algorithm>
#include <functional>
#include <unordered_map>

namespace indukt {

const Formula* MathSystem::adjoined_named(const std::string& name) const {
    for (auto& [n, f] : adjoined)
        if (n == name) return &f;
    return nullptr;
}

VarSet MathSystem::rbasis_vars() const {
    VarSet out;
    for (auto& r : S.basis) {
        VarSet v = vars_of(r);
        out.insert(v.begin(), v.end());
    }
    return out;
}

// ---------------------------------------------------------------- proof files

namespace {

std::size_t to_num(const Sexp& s) {
    if (s.is_list || s.atom.empty() || !std::all_of(s.atom.begin(), s.atom.end(), ::isdigit))
        throw ParseError("expected a number, got " + print_sexp(s), s.line);
    return std::stoul(s.atom);
}

Just just_from_sexp(const Sexp& j, const SymbolSet* alphabet) {
    Just out;
    auto want = [&](std::size_t n) {
        if (j.items.size() != n) throw ParseError("malformed justification " + print_sexp(j), j.line);
    };
    if (!j.is_list || j.items.empty()) throw ParseError("expected a justification", j.line);
    const std::string& h = j.items[0].atom;
    if (h == "ax-taut") {
        want(1);
        out.kind = Just::Taut;
    } else if (h == "ax-eq") {
        want(1);
        out.kind = Just::Eq;
    } else if (h == "ax-quant") {
        want(2);
        out.kind = Just::Quant;
        const std::string& q = j.items[1].atom;
        if (q != "a" && q != "b" && q != "c") throw ParseError("ax-quant takes a, b or c", j.line);
        out.quant = q[0];
    } else if (h == "ax-basis") {
        want(2);
        out.kind = Just::Basis;
        out.ref = to_num(j.items[1]);
    } else if (h == "ax-adjoined") {
        want(2);
        out.kind = Just::Adjoined;
        out.name = j.items[1].atom;
    } else if (h == "ax-schema") {
        want(2);
        out.kind = Just::Schema;
        out.name = j.items[1].atom;
    } else if (h == "mp") {
        want(3);
        out.kind = Just::MP;
        out.ref = to_num(j.items[1]);
        out.ref2 = to_num(j.items[2]);
    } else if (h == "subst") {
        want(4);
        out.kind = Just::Subst;
        out.ref = to_num(j.items[1]);
        out.x = intern_var(j.items[2].atom);
        if (!is_var(out.x) || j.items[2].atom.empty() || j.items[2].atom[0] != '?')
            throw ParseError("subst expects a variable", j.line);
        out.lambda = list_from_sexp(j.items[3], alphabet);
    } else if (h == "gen") {
        want(3);
        out.kind = Just::Gen;
        if (j.items[1].is_list || j.items[1].atom.empty() || j.items[1].atom[0] != '?')
            throw ParseError("gen expects a variable", j.line);
        out.x = intern_var(j.items[1].atom);
        out.ref = to_num(j.items[2]);
    } else if (h == "induct") {
        want(6);
        out.kind = Just::Induct;
        out.pred = intern_symbol(j.items[1].atom);
        out.arity = to_num(j.items[2]);
        if (!j.items[3].is_list) throw ParseError("induct: expected (?x*)", j.line);
        for (auto& v : j.items[3].items) {
            if (v.is_list || v.atom.empty() || v.atom[0] != '?') throw ParseError("induct: expected variables", v.line);
            out.xs.push_back(intern_var(v.atom));
        }
        out.G = formula_from_sexp(j.items[4], alphabet);
        if (!j.items[5].head_is("oblig")) throw ParseError("induct: expected (oblig ...)", j.line);
        for (std::size_t k = 1; k < j.items[5].items.size(); ++k) {
            const Sexp& pr = j.items[5].items[k];
            if (!pr.is_list || pr.items.size() != 2) throw ParseError("oblig entries are (axiom step)", pr.line);
            out.oblig.emplace_back(to_num(pr.items[0]), to_num(pr.items[1]));
        }
    } else {
        throw ParseError("unknown justification '" + h + "'", j.line);
    }
    return out;
}

std::string print_just(const Just& j) {
    switch (j.kind) {
    case Just::Taut: return "(ax-taut)";
    case Just::Eq: return "(ax-eq)";
    case Just::Quant: return std::string("(ax-quant ") + j.quant + ")";
    case Just::Basis: return "(ax-basis " + std::to_string(j.ref) + ")";
    case Just::Adjoined: return "(ax-adjoined " + j.name + ")";
    case Just::Schema: return "(ax-schema " + j.name + ")";
    case Just::MP: return "(mp " + std::to_string(j.ref) + " " + std::to_string(j.ref2) + ")";
    case Just::Subst:
        return "(subst " + std::to_string(j.ref) + " " + tok_name(j.x) + " " + print_list(j.lambda) + ")";
    case Just::Gen: return "(gen " + tok_name(j.x) + " " + std::to_string(j.ref) + ")";
    case Just::Induct: {
        std::string out = "(induct " + tok_name(j.pred) + " " + std::to_string(j.arity) + " (";
        for (std::size_t k = 0; k < j.xs.size(); ++k) out += (k ? " " : "") + tok_name(j.xs[k]);
        out += ") " + print_formula(j.G) + " (oblig";
        for (auto [a, s] : j.oblig) out += " (" + std::to_string(a) + " " + std::to_string(s) + ")";
        return out + "))";
    }
    }
    return "";
}

}  // namespace

std::string just_tag(const Just& j) {
    switch (j.kind) {
    case Just::Taut: return "ax-taut";
    case Just::Eq: return "ax-eq";
    case Just::Quant: return std::string("ax-quant-") + j.quant;
    case Just::Basis: return "ax-basis";
    case Just::Adjoined: return "ax-adjoined";
    case Just::Schema: return "ax-schema";
    case Just::MP: return "mp";
    case Just::Subst: return "subst";
    case Just::Gen: return "gen";
    case Just::Induct: return "induct";
    }
    return "?";
}

Proof proof_from_sexp(const Sexp& s, const SymbolSet* alphabet) {
    if (!s.head_is("proof")) throw ParseError("expected (proof (step ...)*)", s.line);
    Proof p;
    for (std::size_t i = 1; i < s.items.size(); ++i) {
        const Sexp& st = s.items[i];
        if (!st.head_is("step") || st.items.size() != 4) throw ParseError("expected (step N FORMULA JUST)", st.line);
        Step step;
        step.label = to_num(st.items[1]);
        step.f = formula_from_sexp(st.items[2], alphabet);
        step.just = just_from_sexp(st.items[3], alphabet);
        p.steps.push_back(std::move(step));
    }
    return p;
}

std::string print_proof(const Proof& p) {
    std::string out = "(proof";
    for (auto& st : p.steps)
        out += "\n  (step " + std::to_string(st.label) + " " + print_formula(st.f) + " " + print_just(st.just) + ")";
    return out + ")\n";
}

Proof renumber(const Proof& p, std::size_t first) {
    std::unordered_map<std::size_t, std::size_t> map;
    Proof out;
    for (auto& st : p.steps) {
        Step s = st;
        s.label = first + out.steps.size();
        auto re = [&](std::size_t& r) {
            auto it = map.find(r);
            // dangling citations are left dangling; the checker reports them
            r = it == map.end() ? 0 : it->second;
        };
        switch (s.just.kind) {
        case Just::MP: re(s.just.ref); re(s.just.ref2); break;
        case Just::Subst:
        case Just::Gen: re(s.just.ref); break;
        case Just::Induct:
            for (auto& o : s.just.oblig) re(o.second);
            break;
        default: break;
        }
        map[st.label] = s.label;
        out.steps.push_back(std::move(s));
    }
    return out;
}

Proof concat(const Proof& p, const Proof& q) {
    Proof a = renumber(p, 1);
    Proof b = renumber(q, a.steps.size() + 1);
    a.steps.insert(a.steps.end(), b.steps.begin(), b.steps.end());
    return a;
}

std::size_t label_of_last(const Proof& p) { return p.steps.empty() ? 0 : p.steps.back().label; }

const Formula& conclusion(const Proof& p) {
    if (p.steps.empty()) throw std::invalid_argument("empty proof has no conclusion");
    return p.steps.back().f;
}

// ---------------------------------------------------------------- tautologies

namespace {

struct Skeleton {
    std::unordered_map<Formula, std::size_t, FormulaHash> atoms;
    std::size_t cap;
    bool over = false;

    void collect(const Formula& f) {
        if (over) return;
        switch (f.op()) {
        case Op::Prime:
        case Op::All:
        case Op::Ex:
            if (!atoms.count(f)) {
                if (atoms.size() >= cap) {
                    over = true;
                    return;
                }
                atoms.emplace(f, atoms.size());
            }
            return;
        case Op::Not: collect(f.a()); return;
        default:
            collect(f.a());
            collect(f.b());
        }
    }
};

using Bits = std::vector<std::uint64_t>;

// column k of the truth table as a bit-vector over all 2^n rows
Bits atom_column(std::size_t k, std::size_t n) {
    std::size_t rows = std::size_t{1} << n;
    Bits b((rows + 63) / 64, 0);
    for (std::size_t r = 0; r < rows; ++r)
        if ((r >> k) & 1) b[r / 64] |= std::uint64_t{1} << (r % 64);
    return b;
}

Bits eval_bits(const Formula& f, const Skeleton& sk, std::size_t n,
               std::unordered_map<Formula, Bits, FormulaHash>& memo) {
    auto it = memo.find(f);
    if (it != memo.end()) return it->second;
    Bits out;
    switch (f.op()) {
    case Op::Prime:
    case Op::All:
    case Op::Ex: out = atom_column(sk.atoms.at(f), n); break;
    case Op::Not:
        out = eval_bits(f.a(), sk, n, memo);
        for (auto& w : out) w = ~w;
        break;
    default: {
        Bits a = eval_bits(f.a(), sk, n, memo);
        Bits b = eval_bits(f.b(), sk, n, memo);
        out.resize(a.size());
        for (std::size_t i = 0; i < a.size(); ++i) {
            switch (f.op()) {
            case Op::Imp: out[i] = ~a[i] | b[i]; break;
            case Op::And: out[i] = a[i] & b[i]; break;
            case Op::Or: out[i] = a[i] | b[i]; break;
            default: out[i] = ~(a[i] ^ b[i]); break;
            }
        }
    }
    }
    memo.emplace(f, out);
    return out;
}

}  // namespace

TautVerdict taut_verdict(const Formula& f, std::size_t atom_cap) {
    Skeleton sk;
    sk.cap = atom_cap;
    sk.collect(f);
    if (sk.over) return TautVerdict::CapExceeded;
    std::size_t n = sk.atoms.size();
    std::unordered_map<Formula, Bits, FormulaHash> memo;
    Bits top = eval_bits(f, sk, n, memo);
    std::size_t rows = std::size_t{1} << n;
    for (std::size_t r = 0; r < rows; ++r)
        if (!((top[r / 64] >> (r % 64)) & 1)) return TautVerdict::No;
    return TautVerdict::Yes;
}

bool is_taut_instance(const Formula& f, std::size_t atom_cap) {
    TautVerdict v = taut_verdict(f, atom_cap);
    if (v == TautVerdict::CapExceeded)
        throw std::runtime_error("tautology check exceeds atom cap " + std::to_string(atom_cap));
    return v == TautVerdict::Yes;
}

// ---------------------------------------------------------------- other axioms

bool is_eq_axiom(const Formula& f) {
    RFormula r;
    if (!formula_to_rform(f, r)) return false;
    return match_eq_schema(r).has_value();
}

std::optional<char> is_quant_axiom(const Formula& f, std::string* why) {
    // (a)  -> Ax G  G
    if (f.op() == Op::Imp && f.a().op() == Op::All && f.a().a() == f.b()) return 'a';
    // (b)  -> Ax -> G H  -> G Ax H,  x not free in G
    if (f.op() == Op::Imp && f.a().op() == Op::All && f.a().a().op() == Op::Imp && f.b().op() == Op::Imp &&
        f.b().b().op() == Op::All) {
        Tok x = f.a().var();
        const Formula& G = f.a().a().a();
        const Formula& H = f.a().a().b();
        if (f.b().a() == G && f.b().b().var() == x && f.b().b().a() == H) {
            if (occurs_free(G, x)) {
                if (why) *why = "quantifier axiom (3.11)(b): x free in antecedent";
                return std::nullopt;
            }
            return 'b';
        }
    }
    // (c)  <-> ~Ax~G  Ex G
    if (f.op() == Op::Iff && f.a().op() == Op::Not && f.a().a().op() == Op::All &&
        f.a().a().a().op() == Op::Not && f.b().op() == Op::Ex && f.b().var() == f.a().a().var() &&
        f.b().a() == f.a().a().a().a())
        return 'c';
    return std::nullopt;
}

namespace {
List succ_of(Tok x) { return {intern_symbol("s"), lparen(), x, rparen()}; }
}  // namespace

Formula pa_is_instance(const Formula& F, Tok x) {
    Formula zero = sbf(F, {intern_symbol("0")}, x);
    Formula step = sbf(F, succ_of(x), x);
    return imp(all(x, conj(zero, imp(F, step))), all(x, F));
}

bool is_pa_is_instance(const Formula& f) {
    if (f.op() != Op::Imp || f.b().op() != Op::All || f.a().op() != Op::All) return false;
    Tok x = f.b().var();
    if (f.a().var() != x) return false;
    const Formula& F = f.b().a();
    try {
        return pa_is_instance(F, x) == f;
    } catch (const CollisionError&) {
        return false;
    }
}

namespace {
bool scheme_instance(const MathSystem& m, const Formula& f) {
    if (!m.hooks.count("pa-is")) return false;
    if (!m.theta_form) return is_pa_is_instance(f);
    // theta image: -> Ax ~-> F0 ~-> F Fs  Ax F
    if (f.op() != Op::Imp || f.b().op() != Op::All) return false;
    try {
        return theta(pa_is_instance(f.b().a(), f.b().var())) == f;
    } catch (const CollisionError&) {
        return false;
    }
}
}  // namespace

bool is_basis_axiom(const MathSystem& m, const Formula& f) {
    if (std::find(m.basis.begin(), m.basis.end(), f) != m.basis.end()) return true;
    for (auto& [n, g] : m.adjoined)
        if (g == f) return true;
    return scheme_instance(m, f);
}

// ---------------------------------------------------------------- Rule (e)

namespace {

Formula replace_pred(const Formula& f, Tok pred, std::size_t arity, const std::vector<Tok>& xs, const Formula& G) {
    switch (f.op()) {
    case Op::Prime: {
        const Prime& p = f.atom();
        if (p.eq || p.pred != pred || p.arity() != arity) return f;
        Formula g = G;
        for (std::size_t k = 0; k < arity; ++k) g = sbf(g, p.args[k], xs[k]);
        return g;
    }
    case Op::Not: return neg(replace_pred(f.a(), pred, arity, xs, G));
    case Op::All:
    case Op::Ex: return Formula::quant(f.op(), f.var(), replace_pred(f.a(), pred, arity, xs, G));
    default:
        return Formula::bin(f.op(), replace_pred(f.a(), pred, arity, xs, G), replace_pred(f.b(), pred, arity, xs, G));
    }
}

}  // namespace

std::vector<std::pair<std::size_t, Formula>> build_e_obligations(const RecursiveSystem& s, Tok pred,
                                                                  std::size_t arity, const std::vector<Tok>& xs,
                                                                  const Formula& G) {
    if (xs.size() != arity) throw ObligationError("Rule (e): expected " + std::to_string(arity) + " variables");
    VarSet seen;
    for (Tok x : xs)
        if (!seen.insert(x).second) throw ObligationError("Rule (e): induction variables must be distinct");
    VarSet bvars;
    for (auto& r : s.basis) {
        VarSet v = vars_of(r);
        bvars.insert(v.begin(), v.end());
    }
    VarSet gv = vars_of(G);
    gv.insert(xs.begin(), xs.end());
    for (Tok v : gv)
        if (bvars.count(v))
            throw ObligationError("Rule (e): variable " + tok_name(v) + " also occurs in the basis R-axioms");
    std::vector<std::pair<std::size_t, Formula>> out;
    for (std::size_t k = 0; k < s.basis.size(); ++k) {
        const Prime& c = s.basis[k].concl;
        if (c.eq || c.pred != pred || c.arity() != arity) continue;
        out.emplace_back(k + 1, replace_pred(rform_to_formula(s.basis[k]), pred, arity, xs, G));
    }
    return out;
}

Formula induct_conclusion(Tok pred, const std::vector<Tok>& xs, const Formula& G) {
    std::vector<List> args;
    for (Tok x : xs) args.push_back({x});
    return imp(Formula::prime(make_pred(pred, std::move(args))), G);
}

std::string check_induction(const MathSystem& m, const Proof& p, std::size_t pos,
                            const std::unordered_map<std::size_t, std::size_t>& at) {
    const Step& st = p.steps[pos];
    const Just& j = st.just;
    std::vector<std::pair<std::size_t, Formula>> obl;
    try {
        obl = build_e_obligations(m.S, j.pred, j.arity, j.xs, j.G);
    } catch (const ObligationError& e) {
        return e.what();
    } catch (const CollisionError& e) {
        return std::string("Rule (e): ") + e.what();
    }
    if (!(st.f == induct_conclusion(j.pred, j.xs, j.G))) return "Rule (e): conclusion is not -> p x1..xi G";
    for (auto& [ax, f] : obl) {
        std::optional<std::size_t> cited;
        for (auto [a, s] : j.oblig)
            if (a == ax) cited = s;
        bool ok = false;
        if (cited) {
            auto it = at.find(*cited);
            ok = it != at.end() && p.steps[it->second].f == f;
        } else {
            for (auto& [lab, idx] : at)
                if (p.steps[idx].f == f) {
                    ok = true;
                    break;
                }
        }
        if (!ok)
            return "Rule (e): obligation for basis R-axiom " + std::to_string(ax) + " not proved: " + print_formula(f);
    }
    for (auto [a, s] : j.oblig) {
        bool known = std::any_of(obl.begin(), obl.end(), [&](auto& o) { return o.first == a; });
        if (!known) return "Rule (e): basis R-axiom " + std::to_string(a) + " yields no obligation";
    }
    return "";
}

namespace {

bool lists_in_lang(const LGrammar& g, const Formula& f, std::string& bad) {
    std::vector<const List*> ls;
    collect_lists(f, ls);
    for (auto* l : ls)
        if (!member(g, *l)) {
            bad = print_list(*l);
            return false;
        }
    return true;
}

}  // namespace

CheckReport check_proof(const MathSystem& m, const Proof& p) {
    CheckReport rep;
    std::unordered_map<std::size_t, std::size_t> at;
    for (std::size_t i = 0; i < p.steps.size(); ++i) {
        const Step& st = p.steps[i];
        const Just& j = st.just;
        auto fail = [&](std::string why) {
            rep.accepted = false;
            rep.failed_label = st.label;
            rep.reason = std::move(why);
        };
        auto cite = [&](std::size_t lab) -> const Formula* {
            auto it = at.find(lab);
            return it == at.end() ? nullptr : &p.steps[it->second].f;
        };
        if (at.count(st.label)) {
            fail("duplicate step label");
            return rep;
        }
        std::string bad;
        if (!lists_in_lang(m.lang, st.f, bad)) {
            fail("argument list " + bad + " is not in L");
            return rep;
        }
        std::string why;
        switch (j.kind) {
        case Just::Taut:
            switch (taut_verdict(st.f)) {
            case TautVerdict::Yes: break;
            case TautVerdict::No: why = "not an instance of a propositional tautology"; break;
            case TautVerdict::CapExceeded: why = "tautology check exceeds the atom cap"; break;
            }
            break;
        case Just::Eq:
            if (!is_eq_axiom(st.f)) why = "not an axiom of equality";
            break;
        case Just::Quant: {
            std::string near;
            auto q = is_quant_axiom(st.f, &near);
            if (!q) why = near.empty() ? std::string("not a quantifier axiom (") + j.quant + ")" : near;
            else if (*q != j.quant) why = std::string("quantifier axiom (") + *q + "), tagged (" + j.quant + ")";
            break;
        }
        case Just::Basis:
            if (j.ref < 1 || j.ref > m.basis.size()) why = "no basis axiom " + std::to_string(j.ref);
            else if (!(m.basis[j.ref - 1] == st.f)) why = "formula differs from basis axiom " + std::to_string(j.ref);
            break;
        case Just::Adjoined: {
            const Formula* phi = m.adjoined_named(j.name);
            if (!phi) why = "no adjoined statement named " + j.name;
            else if (!(*phi == st.f)) why = "formula differs from adjoined statement " + j.name;
            break;
        }
        case Just::Schema:
            if (!m.hooks.count(j.name)) why = "schema hook " + j.name + " not enabled";
            else if (j.name != "pa-is") why = "unknown schema hook " + j.name;
            else if (!scheme_instance(m, st.f)) why = "not an instance of the induction scheme";
            break;
        case Just::MP: {
            const Formula* a = cite(j.ref);
            const Formula* b = cite(j.ref2);
            if (!a || !b) {
                why = "cites a missing or later step";
                break;
            }
            auto mp = [&](const Formula* minor, const Formula* major) {
                return major->op() == Op::Imp && major->a() == *minor && major->b() == st.f;
            };
            if (!mp(a, b) && !mp(b, a)) why = "modus ponens does not apply";
            break;
        }
        case Just::Subst: {
            const Formula* a = cite(j.ref);
            if (!a) {
                why = "cites a missing or later step";
                break;
            }
            if (!member(m.lang, j.lambda)) {
                why = "substituted list " + print_list(j.lambda) + " is not in L";
                break;
            }
            if (!cf(*a, j.lambda, j.x)) {
                why = "substitution is not collision-free";
                break;
            }
            if (!(sbf(*a, j.lambda, j.x) == st.f)) why = "substitution result differs";
            break;
        }
        case Just::Gen: {
            const Formula* a = cite(j.ref);
            if (!a) why = "cites a missing or later step";
            else if (!(all(j.x, *a) == st.f)) why = "generalization result differs";
            break;
        }
        case Just::Induct: why = check_induction(m, p, i, at); break;
        }
        if (!why.empty()) {
            fail(why);
            return rep;
        }
        at[st.label] = i;
        ++rep.steps;
        ++rep.rule_counts[just_tag(j)];
    }
    return rep;
}

// ---------------------------------------------------------------- extension

MathSystem adjoin(const MathSystem& m, const std::string& name, const Formula& phi) {
    if (!free_of(phi).empty()) throw std::invalid_argument("adjoined formula is not a statement: " + print_formula(phi));
    if (m.adjoined_named(name)) throw std::invalid_argument("adjoined name already used: " + name);
    std::string bad;
    if (!lists_in_lang(m.lang, phi, bad)) throw std::invalid_argument("argument list " + bad + " is not in L");
    // bound variables shared with the basis R-axioms are renamed away
    VarSet bvars = m.rbasis_vars();
    std::function<Formula(const Formula&)> rn = [&](const Formula& f) -> Formula {
        switch (f.op()) {
        case Op::Prime: return f;
        case Op::Not: return neg(rn(f.a()));
        case Op::All:
        case Op::Ex: {
            Formula body = rn(f.a());
            Tok x = f.var();
            if (!bvars.count(x)) return Formula::quant(f.op(), x, body);
            VarSet avoid = vars_of(body);
            avoid.insert(bvars.begin(), bvars.end());
            for (auto& [n, g] : m.adjoined) {
                VarSet v = vars_of(g);
                avoid.insert(v.begin(), v.end());
            }
            Tok z = fresh_var(tok_name(x), avoid);
            return Formula::quant(f.op(), z, rename_fresh(body, x, z));
        }
        default: return Formula::bin(f.op(), rn(f.a()), rn(f.b()));
        }
    };
    MathSystem out = m;
    out.adjoined.emplace_back(name, rn(phi));
    return out;
}

MathSystem extend_alphabet(const MathSystem& m, const SymbolSet& consts) {
    for (Tok c : consts)
        if (m.alphabet.count(c)) throw std::invalid_argument("symbol '" + tok_name(c) + "' already in the alphabet");
    MathSystem out = m;
    out.alphabet.insert(consts.begin(), consts.end());
    out.lang = extend_constants(m.lang, consts);
    return out;
}

}  // namespace indukt
