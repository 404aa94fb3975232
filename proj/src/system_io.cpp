#include "indukt/frontend.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

namespace indukt {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw LoadError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw LoadError("cannot write " + path);
    out << text;
}

bool has_ground_lists(const LGrammar& g) { return !enumerate_ground(g, 8, 1).empty(); }

namespace {

void check_preds(const Formula& f, const std::set<PredKey>& preds, const std::string& where) {
    std::set<PredKey> used;
    collect_preds(f, used);
    for (auto& pk : used)
        if (!preds.count(pk))
            throw LoadError(where + ": predicate " + tok_name(pk.first) + " not declared with arity " +
                            std::to_string(pk.second));
}

}  // namespace

MathSystem system_from_text(std::string_view text, const std::string& origin) {
    MathSystem m;
    std::vector<Sexp> secs;
    try {
        secs = read_sexps(text);
    } catch (const ParseError& e) {
        throw LoadError(origin + ": " + e.what());
    }
    auto find = [&](std::string_view head) -> const Sexp* {
        const Sexp* hit = nullptr;
        for (auto& s : secs) {
            if (!s.is_list || s.items.empty()) throw LoadError(origin + ": stray atom at top level");
            if (s.head_is(head)) {
                if (hit) throw LoadError(origin + ": duplicate section " + std::string(head));
                hit = &s;
            }
        }
        return hit;
    };
    static const std::set<std::string> known = {"alphabet", "predicates", "vars",     "rbasis",
                                                 "lang",     "basis",      "adjoined", "hooks"};
    for (auto& s : secs)
        if (!s.is_list || s.items.empty() || !known.count(s.items[0].atom))
            throw LoadError(origin + ": line " + std::to_string(s.line) + ": unknown section");
    try {
        if (auto* a = find("alphabet")) {
            for (std::size_t i = 1; i < a->items.size(); ++i) {
                const Sexp& t = a->items[i];
                if (t.is_list || t.paren || t.atom.empty() || t.atom[0] == '?')
                    throw ParseError("bad alphabet symbol", t.line);
                Tok tk = intern_symbol(t.atom);
                if (!m.alphabet.insert(tk).second) throw ParseError("duplicate symbol " + t.atom, t.line);
            }
        }
        m.S.alphabet = m.alphabet;
        if (auto* v = find("vars"))
            for (std::size_t i = 1; i < v->items.size(); ++i) {
                const std::string& n = v->items[i].atom;
                if (n.empty() || n[0] != '?') throw ParseError("variables start with ?", v->items[i].line);
                intern_var(n);
            }
        if (auto* p = find("predicates")) {
            for (std::size_t i = 1; i < p->items.size(); ++i) {
                const Sexp& d = p->items[i];
                if (!d.is_list || d.items.size() != 2) throw ParseError("expected (NAME ARITY)", d.line);
                m.preds.insert({intern_symbol(d.items[0].atom), std::stoul(d.items[1].atom)});
            }
        }
        m.S.preds = m.preds;
        if (auto* r = find("rbasis"))
            for (std::size_t i = 1; i < r->items.size(); ++i) {
                RFormula rf = rformula_from_sexp(r->items[i], &m.alphabet);
                m.S.basis.push_back(rf);
                Formula f = rform_to_formula(rf);
                check_preds(f, m.preds, origin + ": line " + std::to_string(r->items[i].line));
                m.basis.push_back(f);
            }
        const Sexp* l = find("lang");
        if (!l) throw LoadError(origin + ": missing (lang ...) section");
        m.lang = grammar_from_sexp(*l, &m.alphabet);
        if (auto* b = find("basis"))
            for (std::size_t i = 1; i < b->items.size(); ++i) {
                Formula f = formula_from_sexp(b->items[i], &m.alphabet);
                check_preds(f, m.preds, origin + ": line " + std::to_string(b->items[i].line));
                m.basis.push_back(f);
            }
        if (auto* h = find("hooks"))
            for (std::size_t i = 1; i < h->items.size(); ++i) {
                const std::string& n = h->items[i].atom;
                if (n != "pa-is") throw ParseError("unknown hook " + n, h->items[i].line);
                m.hooks.insert(n);
            }
        if (auto* a = find("adjoined"))
            for (std::size_t i = 1; i < a->items.size(); ++i) {
                const Sexp& d = a->items[i];
                if (!d.is_list || d.items.size() != 2) throw ParseError("expected (NAME FORMULA)", d.line);
                Formula f = formula_from_sexp(d.items[1], &m.alphabet);
                check_preds(f, m.preds, origin);
                m = adjoin(m, d.items[0].atom, f);
            }
    } catch (const ParseError& e) {
        throw LoadError(origin + ": " + e.what());
    } catch (const std::invalid_argument& e) {
        throw LoadError(origin + ": " + e.what());
    }
    ClosureReport cr = validate_closure(m.lang, 200);
    if (!cr.ok) throw LoadError(origin + ": L is not closed under substitution: " + cr.violations.front());
    for (std::size_t i = 0; i < m.basis.size(); ++i) {
        std::vector<const List*> ls;
        collect_lists(m.basis[i], ls);
        for (auto* x : ls)
            if (!member(m.lang, *x))
                throw LoadError(origin + ": basis axiom " + std::to_string(i + 1) + " uses " + print_list(*x) +
                                " outside L");
    }
    return m;
}

MathSystem load_system(const std::string& path) { return system_from_text(read_file(path), path); }

std::string print_system(const MathSystem& m) {
    std::string out = "(alphabet";
    for (Tok t : m.alphabet) out += " " + tok_name(t);
    out += ")\n(predicates";
    for (auto& [p, n] : m.preds) out += " (" + tok_name(p) + " " + std::to_string(n) + ")";
    out += ")\n(rbasis";
    for (auto& r : m.S.basis) out += "\n  " + print_rformula(r);
    out += ")\n" + print_grammar(m.lang) + "\n(basis";
    for (std::size_t i = m.S.basis.size(); i < m.basis.size(); ++i) out += "\n  " + print_formula(m.basis[i]);
    out += ")\n(adjoined";
    for (auto& [n, f] : m.adjoined) out += "\n  (" + n + " " + print_formula(f) + ")";
    out += ")\n(hooks";
    for (auto& h : m.hooks) out += " " + h;
    return out + ")\n";
}

Proof proof_from_text(std::string_view text, const MathSystem& m) {
    return proof_from_sexp(read_sexp(text), &m.alphabet);
}

Proof load_proof(const std::string& path, const MathSystem& m) {
    try {
        return proof_from_text(read_file(path), m);
    } catch (const ParseError& e) {
        throw LoadError(path + ": " + e.what());
    }
}

RDerivation load_rderivation(const std::string& path, const MathSystem& m) {
    try {
        return rderivation_from_sexp(read_sexp(read_file(path)), &m.alphabet);
    } catch (const ParseError& e) {
        throw LoadError(path + ": " + e.what());
    }
}

std::string corpus_dir() {
    if (const char* env = std::getenv("INDUKT_CORPUS"); env && *env) return env;
    return INDUKT_CORPUS_DIR;
}

std::string corpus_path(const std::string& file) {
    if (!file.empty() && file[0] == '/') return file;
    return corpus_dir() + "/" + file;
}

}  // namespace indukt
