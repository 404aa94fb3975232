#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace indukt {

// Tokens are interned process-wide.  Variables carry the high bit; the rest
// of a variable token is its index, so ordering variable tokens orders them
// by index (first interned = smallest).
using Tok = std::uint32_t;
constexpr Tok kVarBit = 0x80000000u;

inline bool is_var(Tok t) { return (t & kVarBit) != 0; }
inline std::uint32_t var_index(Tok t) { return t & ~kVarBit; }

Tok intern_symbol(std::string_view name);
Tok intern_var(std::string_view name);  // name includes the leading '?'
Tok intern(std::string_view name);      // dispatches on the sigil
const std::string& tok_name(Tok t);
bool var_known(std::string_view name);

Tok lparen();
Tok rparen();
inline bool is_paren(Tok t) { return t == lparen() || t == rparen(); }

using List = std::vector<Tok>;
using SymbolSet = std::set<Tok>;

struct ParseError : std::runtime_error {
    int line;
    ParseError(const std::string& msg, int line_ = 0)
        : std::runtime_error(line_ > 0 ? "line " + std::to_string(line_) + ": " + msg : msg),
          line(line_) {}
};

struct Prime {
    bool eq = false;
    Tok pred = 0;
    std::vector<List> args;

    std::size_t arity() const { return args.size(); }
    auto operator<=>(const Prime&) const = default;
    bool operator==(const Prime&) const = default;
};

Prime make_eq(List lhs, List rhs);
Prime make_pred(Tok pred, std::vector<List> args);
std::size_t hash_list(const List& l);
std::size_t hash_prime(const Prime& p);

struct PrimeHash {
    std::size_t operator()(const Prime& p) const { return hash_prime(p); }
};
struct ListHash {
    std::size_t operator()(const List& l) const { return hash_list(l); }
};

enum class Op : std::uint8_t { Prime, Not, Imp, Iff, And, Or, All, Ex };

bool is_binary(Op op);
bool is_quant(Op op);

struct Node;

class Formula {
public:
    Formula() = default;
    static Formula prime(Prime p);
    static Formula neg(Formula f);
    static Formula bin(Op op, Formula a, Formula b);
    static Formula quant(Op op, Tok var, Formula body);

    bool valid() const { return n_ != nullptr; }
    Op op() const;
    const Prime& atom() const;
    const Formula& a() const;  // operand of not, left of binary, body of quantifier
    const Formula& b() const;  // right of binary
    Tok var() const;
    std::size_t hash() const;
    std::size_t size() const;  // node count

    friend bool operator==(const Formula& x, const Formula& y);
    friend bool operator!=(const Formula& x, const Formula& y) { return !(x == y); }
    // total order, used only for deterministic containers
    friend bool operator<(const Formula& x, const Formula& y);

private:
    std::shared_ptr<const Node> n_;
};

struct Node {
    Op op;
    Tok var = 0;
    Formula a, b;
    Prime prime;
    std::size_t hash = 0;
    std::size_t size = 1;
};

struct FormulaHash {
    std::size_t operator()(const Formula& f) const { return f.hash(); }
};

inline Formula imp(Formula a, Formula b) { return Formula::bin(Op::Imp, std::move(a), std::move(b)); }
inline Formula iff(Formula a, Formula b) { return Formula::bin(Op::Iff, std::move(a), std::move(b)); }
inline Formula conj(Formula a, Formula b) { return Formula::bin(Op::And, std::move(a), std::move(b)); }
inline Formula disj(Formula a, Formula b) { return Formula::bin(Op::Or, std::move(a), std::move(b)); }
inline Formula neg(Formula a) { return Formula::neg(std::move(a)); }
inline Formula all(Tok v, Formula a) { return Formula::quant(Op::All, v, std::move(a)); }
inline Formula ex(Tok v, Formula a) { return Formula::quant(Op::Ex, v, std::move(a)); }

struct RFormula {
    std::vector<Prime> prem;
    Prime concl;
    bool operator==(const RFormula&) const = default;
    auto operator<=>(const RFormula&) const = default;
};

// Generic s-expression tree.  Inside an (l ...) form the parenthesis tokens
// are kept as atoms with `paren` set.
struct Sexp {
    bool is_list = false;
    bool paren = false;
    std::string atom;
    std::vector<Sexp> items;
    int line = 0;

    bool is_atom(std::string_view s) const { return !is_list && !paren && atom == s; }
    bool head_is(std::string_view s) const {
        return is_list && !items.empty() && items[0].is_atom(s);
    }
};

std::vector<Sexp> read_sexps(std::string_view text);
Sexp read_sexp(std::string_view text);
std::string print_sexp(const Sexp& s);

List list_from_sexp(const Sexp& s, const SymbolSet* alphabet = nullptr);
Prime prime_from_sexp(const Sexp& s, const SymbolSet* alphabet = nullptr);
Formula formula_from_sexp(const Sexp& s, const SymbolSet* alphabet = nullptr);
RFormula rformula_from_sexp(const Sexp& s, const SymbolSet* alphabet = nullptr);

List parse_list(std::string_view text, const SymbolSet* alphabet = nullptr);
Formula parse_formula(std::string_view text, const SymbolSet* alphabet = nullptr);
RFormula parse_rformula(std::string_view text, const SymbolSet* alphabet = nullptr);

std::string print_list(const List& l);
std::string print_prime(const Prime& p);
std::string print_formula(const Formula& f);
std::string print_rformula(const RFormula& r);

Formula rform_to_formula(const RFormula& r);
// inverse of rform_to_formula on implication chains of primes
bool formula_to_rform(const Formula& f, RFormula& out);

// every (name, arity) pair used by predicate applications in f
void collect_preds(const Formula& f, std::set<std::pair<Tok, std::size_t>>& out);
void collect_lists(const Formula& f, std::vector<const List*>& out);

}  // namespace indukt
