#include "indukt/syntax.hpp"

#include <deque>
#include <functional>
#include <mutex>
#include <shared_mutex>
#include <unordered_map>

namespace indukt {

namespace {

struct Interner {
    std::shared_mutex mu;
    std::deque<std::string> syms, vars;
    std::unordered_map<std::string, Tok> sym_ids, var_ids;

    Interner() {
        get(syms, sym_ids, "(", 0);
        get(syms, sym_ids, ")", 0);
    }

    Tok get(std::deque<std::string>& names, std::unordered_map<std::string, Tok>& ids,
            std::string_view name, Tok bit) {
        std::string key(name);
        auto it = ids.find(key);
        if (it != ids.end()) return it->second;
        Tok t = static_cast<Tok>(names.size()) | bit;
        names.push_back(key);
        ids.emplace(std::move(key), t);
        return t;
    }

    Tok lookup(bool var, std::string_view name) {
        auto& ids = var ? var_ids : sym_ids;
        {
            std::shared_lock lk(mu);
            auto it = ids.find(std::string(name));
            if (it != ids.end()) return it->second;
        }
        std::unique_lock lk(mu);
        return var ? get(vars, var_ids, name, kVarBit) : get(syms, sym_ids, name, 0);
    }
};

Interner& interner() {
    static Interner in;
    return in;
}

inline std::size_t mix(std::size_t h, std::size_t v) {
    return h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
}

}  // namespace

Tok intern_symbol(std::string_view name) {
    if (name.empty() || name[0] == '?') throw ParseError("bad symbol name '" + std::string(name) + "'");
    return interner().lookup(false, name);
}

Tok intern_var(std::string_view name) {
    if (name.size() < 2 || name[0] != '?') throw ParseError("bad variable name '" + std::string(name) + "'");
    return interner().lookup(true, name);
}

Tok intern(std::string_view name) {
    return !name.empty() && name[0] == '?' ? intern_var(name) : intern_symbol(name);
}

bool var_known(std::string_view name) {
    auto& in = interner();
    std::shared_lock lk(in.mu);
    return in.var_ids.count(std::string(name)) > 0;
}

const std::string& tok_name(Tok t) {
    auto& in = interner();
    std::shared_lock lk(in.mu);
    return is_var(t) ? in.vars.at(var_index(t)) : in.syms.at(t);
}

Tok lparen() { return 0; }
Tok rparen() { return 1; }

Prime make_eq(List lhs, List rhs) {
    Prime p;
    p.eq = true;
    p.args.push_back(std::move(lhs));
    p.args.push_back(std::move(rhs));
    return p;
}

Prime make_pred(Tok pred, std::vector<List> args) {
    Prime p;
    p.pred = pred;
    p.args = std::move(args);
    return p;
}

std::size_t hash_list(const List& l) {
    std::size_t h = l.size();
    for (Tok t : l) h = mix(h, t);
    return h;
}

std::size_t hash_prime(const Prime& p) {
    std::size_t h = p.eq ? 0x51ed27 : mix(0x1234, p.pred);
    for (auto& a : p.args) h = mix(h, hash_list(a));
    return mix(h, p.args.size());
}

bool is_binary(Op op) { return op == Op::Imp || op == Op::Iff || op == Op::And || op == Op::Or; }
bool is_quant(Op op) { return op == Op::All || op == Op::Ex; }

Formula Formula::prime(Prime p) {
    auto n = std::make_shared<Node>();
    n->op = Op::Prime;
    n->hash = mix(0x77, hash_prime(p));
    n->prime = std::move(p);
    Formula f;
    f.n_ = std::move(n);
    return f;
}

Formula Formula::neg(Formula a) {
    auto n = std::make_shared<Node>();
    n->op = Op::Not;
    n->hash = mix(0x99, a.hash());
    n->size = 1 + a.size();
    n->a = std::move(a);
    Formula f;
    f.n_ = std::move(n);
    return f;
}

Formula Formula::bin(Op op, Formula a, Formula b) {
    if (!is_binary(op)) throw std::logic_error("not a binary connective");
    auto n = std::make_shared<Node>();
    n->op = op;
    n->hash = mix(mix(static_cast<std::size_t>(op) * 31, a.hash()), b.hash());
    n->size = 1 + a.size() + b.size();
    n->a = std::move(a);
    n->b = std::move(b);
    Formula f;
    f.n_ = std::move(n);
    return f;
}

Formula Formula::quant(Op op, Tok var, Formula body) {
    if (!is_quant(op) || !is_var(var)) throw std::logic_error("bad quantifier");
    auto n = std::make_shared<Node>();
    n->op = op;
    n->var = var;
    n->hash = mix(mix(static_cast<std::size_t>(op) * 131, var), body.hash());
    n->size = 1 + body.size();
    n->a = std::move(body);
    Formula f;
    f.n_ = std::move(n);
    return f;
}

Op Formula::op() const { return n_->op; }
const Prime& Formula::atom() const { return n_->prime; }
const Formula& Formula::a() const { return n_->a; }
const Formula& Formula::b() const { return n_->b; }
Tok Formula::var() const { return n_->var; }
std::size_t Formula::hash() const { return n_ ? n_->hash : 0; }
std::size_t Formula::size() const { return n_ ? n_->size : 0; }

bool operator==(const Formula& x, const Formula& y) {
    if (x.n_ == y.n_) return true;
    if (!x.n_ || !y.n_) return false;
    if (x.n_->hash != y.n_->hash || x.n_->op != y.n_->op || x.n_->size != y.n_->size) return false;
    switch (x.n_->op) {
    case Op::Prime: return x.n_->prime == y.n_->prime;
    case Op::Not: return x.n_->a == y.n_->a;
    case Op::All:
    case Op::Ex: return x.n_->var == y.n_->var && x.n_->a == y.n_->a;
    default: return x.n_->a == y.n_->a && x.n_->b == y.n_->b;
    }
}

bool operator<(const Formula& x, const Formula& y) {
    if (x.n_ == y.n_) return false;
    if (!x.n_ || !y.n_) return !x.n_;
    if (x.n_->op != y.n_->op) return x.n_->op < y.n_->op;
    switch (x.n_->op) {
    case Op::Prime: return x.n_->prime < y.n_->prime;
    case Op::Not: return x.n_->a < y.n_->a;
    case Op::All:
    case Op::Ex:
        if (x.n_->var != y.n_->var) return x.n_->var < y.n_->var;
        return x.n_->a < y.n_->a;
    default:
        if (x.n_->a != y.n_->a) return x.n_->a < y.n_->a;
        return x.n_->b < y.n_->b;
    }
}

// ---------------------------------------------------------------- reader

namespace {

struct Lexer {
    std::string_view s;
    std::size_t i = 0;
    int line = 1;

    void skip() {
        while (i < s.size()) {
            char c = s[i];
            if (c == '\n') {
                ++line;
                ++i;
            } else if (c == ' ' || c == '\t' || c == '\r') {
                ++i;
            } else if (c == ';') {
                while (i < s.size() && s[i] != '\n') ++i;
            } else {
                break;
            }
        }
    }

    bool done() {
        skip();
        return i >= s.size();
    }

    std::string_view next() {
        skip();
        if (i >= s.size()) throw ParseError("unexpected end of input", line);
        char c = s[i];
        if (c == '(' || c == ')') return s.substr(i++, 1);
        std::size_t j = i;
        if (c == '"') {  // quoted atom, kept with its quotes; no escapes
            j = s.find('"', i + 1);
            if (j == std::string_view::npos) throw ParseError("unterminated string", line);
            auto tok = s.substr(i, j + 1 - i);
            i = j + 1;
            return tok;
        }
        while (j < s.size() && s[j] != '(' && s[j] != ')' && s[j] != ';' && s[j] != ' ' &&
               s[j] != '\t' && s[j] != '\n' && s[j] != '\r')
            ++j;
        auto tok = s.substr(i, j - i);
        i = j;
        return tok;
    }
};

Sexp read_one(Lexer& lx) {
    int line = (lx.skip(), lx.line);
    auto t = lx.next();
    if (t == ")") throw ParseError("unbalanced ')'", line);
    Sexp out;
    out.line = line;
    if (t != "(") {
        out.atom = std::string(t);
        return out;
    }
    out.is_list = true;
    // (l ...) and (alt ...) bodies are token sequences: parentheses are content, balanced
    if (!lx.done()) {
        std::size_t save = lx.i;
        int save_line = lx.line;
        auto head = lx.next();
        if (head == "l" || head == "alt") {
            Sexp h;
            h.atom = std::string(head);
            h.line = lx.line;
            out.items.push_back(h);
            int depth = 0;
            for (;;) {
                if (lx.done()) throw ParseError("unterminated list form", line);
                int tl = lx.line;
                auto tok = lx.next();
                Sexp a;
                a.line = tl;
                if (tok == "(") {
                    ++depth;
                    a.paren = true;
                    a.atom = "(";
                } else if (tok == ")") {
                    if (depth == 0) break;
                    --depth;
                    a.paren = true;
                    a.atom = ")";
                } else {
                    a.atom = std::string(tok);
                }
                out.items.push_back(std::move(a));
            }
            return out;
        }
        lx.i = save;
        lx.line = save_line;
    }
    for (;;) {
        if (lx.done()) throw ParseError("unbalanced '('", line);
        lx.skip();
        if (lx.s[lx.i] == ')') {
            ++lx.i;
            break;
        }
        out.items.push_back(read_one(lx));
    }
    return out;
}

[[noreturn]] void fail(const Sexp& s, const std::string& msg) { throw ParseError(msg, s.line); }

Tok check_token(const Sexp& a, const SymbolSet* alphabet) {
    if (a.is_list) fail(a, "expected token");
    if (a.paren) return a.atom == "(" ? lparen() : rparen();
    if (a.atom.empty()) fail(a, "empty token");
    if (a.atom[0] == '?') {
        if (a.atom.size() < 2) fail(a, "bad variable '?'");
        return intern_var(a.atom);
    }
    Tok t = intern_symbol(a.atom);
    if (alphabet && !alphabet->count(t)) fail(a, "undeclared symbol '" + a.atom + "'");
    return t;
}

}  // namespace

std::vector<Sexp> read_sexps(std::string_view text) {
    Lexer lx{text};
    std::vector<Sexp> out;
    while (!lx.done()) out.push_back(read_one(lx));
    return out;
}

Sexp read_sexp(std::string_view text) {
    auto v = read_sexps(text);
    if (v.size() != 1) throw ParseError("expected exactly one expression, got " + std::to_string(v.size()));
    return std::move(v[0]);
}

std::string print_sexp(const Sexp& s) {
    if (!s.is_list) return s.atom;
    std::string out = "(";
    for (std::size_t i = 0; i < s.items.size(); ++i) {
        if (i) out += ' ';
        out += print_sexp(s.items[i]);
    }
    return out + ")";
}

List list_from_sexp(const Sexp& s, const SymbolSet* alphabet) {
    if (!s.head_is("l")) fail(s, "expected (l ...)");
    List out;
    out.reserve(s.items.size() - 1);
    for (std::size_t i = 1; i < s.items.size(); ++i) out.push_back(check_token(s.items[i], alphabet));
    return out;
}

Prime prime_from_sexp(const Sexp& s, const SymbolSet* alphabet) {
    if (s.head_is("eq")) {
        if (s.items.size() != 3) fail(s, "eq takes two lists");
        return make_eq(list_from_sexp(s.items[1], alphabet), list_from_sexp(s.items[2], alphabet));
    }
    if (s.head_is("pred")) {
        if (s.items.size() < 2 || s.items[1].is_list || s.items[1].paren) fail(s, "pred needs a name");
        const auto& name = s.items[1].atom;
        if (name.empty() || name[0] == '?') fail(s, "bad predicate name '" + name + "'");
        std::vector<List> args;
        for (std::size_t i = 2; i < s.items.size(); ++i) args.push_back(list_from_sexp(s.items[i], alphabet));
        return make_pred(intern_symbol(name), std::move(args));
    }
    fail(s, "expected prime formula");
}

Formula formula_from_sexp(const Sexp& s, const SymbolSet* alphabet) {
    if (!s.is_list || s.items.empty() || s.items[0].is_list) fail(s, "expected formula");
    const auto& h = s.items[0].atom;
    auto want = [&](std::size_t n) {
        if (s.items.size() != n + 1) fail(s, "'" + h + "' takes " + std::to_string(n) + " operands");
    };
    if (h == "eq" || h == "pred") return Formula::prime(prime_from_sexp(s, alphabet));
    if (h == "not") {
        want(1);
        return neg(formula_from_sexp(s.items[1], alphabet));
    }
    Op op;
    if (h == "imp") op = Op::Imp;
    else if (h == "iff") op = Op::Iff;
    else if (h == "and") op = Op::And;
    else if (h == "or") op = Op::Or;
    else if (h == "all") op = Op::All;
    else if (h == "ex") op = Op::Ex;
    else fail(s, "unknown connective '" + h + "'");
    want(2);
    if (is_quant(op)) {
        const auto& v = s.items[1];
        if (v.is_list || v.paren || v.atom.size() < 2 || v.atom[0] != '?') fail(s, "quantifier needs a variable");
        return Formula::quant(op, intern_var(v.atom), formula_from_sexp(s.items[2], alphabet));
    }
    return Formula::bin(op, formula_from_sexp(s.items[1], alphabet), formula_from_sexp(s.items[2], alphabet));
}

RFormula rformula_from_sexp(const Sexp& s, const SymbolSet* alphabet) {
    if (!s.head_is("horn") || s.items.size() != 3 || !s.items[1].is_list) fail(s, "expected (horn (P*) P)");
    RFormula r;
    for (auto& p : s.items[1].items) r.prem.push_back(prime_from_sexp(p, alphabet));
    r.concl = prime_from_sexp(s.items[2], alphabet);
    return r;
}

List parse_list(std::string_view text, const SymbolSet* alphabet) {
    return list_from_sexp(read_sexp(text), alphabet);
}

Formula parse_formula(std::string_view text, const SymbolSet* alphabet) {
    return formula_from_sexp(read_sexp(text), alphabet);
}

RFormula parse_rformula(std::string_view text, const SymbolSet* alphabet) {
    return rformula_from_sexp(read_sexp(text), alphabet);
}

// ---------------------------------------------------------------- printer

std::string print_list(const List& l) {
    std::string out = "(l";
    for (Tok t : l) {
        out += ' ';
        out += tok_name(t);
    }
    return out + ")";
}

std::string print_prime(const Prime& p) {
    std::string out = p.eq ? "(eq" : "(pred " + tok_name(p.pred);
    for (auto& a : p.args) {
        out += ' ';
        out += print_list(a);
    }
    return out + ")";
}

namespace {
void print_into(const Formula& f, std::string& out) {
    switch (f.op()) {
    case Op::Prime: out += print_prime(f.atom()); return;
    case Op::Not:
        out += "(not ";
        print_into(f.a(), out);
        out += ')';
        return;
    case Op::All:
    case Op::Ex:
        out += f.op() == Op::All ? "(all " : "(ex ";
        out += tok_name(f.var());
        out += ' ';
        print_into(f.a(), out);
        out += ')';
        return;
    default: break;
    }
    static const char* names[] = {"", "", "(imp ", "(iff ", "(and ", "(or "};
    out += names[static_cast<int>(f.op())];
    print_into(f.a(), out);
    out += ' ';
    print_into(f.b(), out);
    out += ')';
}
}  // namespace

std::string print_formula(const Formula& f) {
    std::string out;
    print_into(f, out);
    return out;
}

std::string print_rformula(const RFormula& r) {
    std::string out = "(horn (";
    for (std::size_t i = 0; i < r.prem.size(); ++i) {
        if (i) out += ' ';
        out += print_prime(r.prem[i]);
    }
    out += ") ";
    out += print_prime(r.concl);
    return out + ")";
}

Formula rform_to_formula(const RFormula& r) {
    Formula f = Formula::prime(r.concl);
    for (auto it = r.prem.rbegin(); it != r.prem.rend(); ++it) f = imp(Formula::prime(*it), f);
    return f;
}

bool formula_to_rform(const Formula& f, RFormula& out) {
    out.prem.clear();
    const Formula* cur = &f;
    while (cur->op() == Op::Imp) {
        if (cur->a().op() != Op::Prime) return false;
        out.prem.push_back(cur->a().atom());
        cur = &cur->b();
    }
    if (cur->op() != Op::Prime) return false;
    out.concl = cur->atom();
    return true;
}

void collect_preds(const Formula& f, std::set<std::pair<Tok, std::size_t>>& out) {
    switch (f.op()) {
    case Op::Prime:
        if (!f.atom().eq) out.emplace(f.atom().pred, f.atom().arity());
        return;
    case Op::Not:
    case Op::All:
    case Op::Ex: collect_preds(f.a(), out); return;
    default:
        collect_preds(f.a(), out);
        collect_preds(f.b(), out);
    }
}

void collect_lists(const Formula& f, std::vector<const List*>& out) {
    switch (f.op()) {
    case Op::Prime:
        for (auto& a : f.atom().args) out.push_back(&a);
        return;
    case Op::Not:
    case Op::All:
    case Op::Ex: collect_lists(f.a(), out); return;
    default:
        collect_lists(f.a(), out);
        collect_lists(f.b(), out);
    }
}

}  // namespace indukt
