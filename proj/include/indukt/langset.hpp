#pragma once

#include "indukt/syntax.hpp"

#include <random>
#include <string>
#include <vector>

namespace indukt {

struct GSym {
    enum Kind : std::uint8_t { Term, S, Var } kind = Term;
    Tok tok = 0;
    bool operator==(const GSym&) const = default;
};

// Single-nonterminal grammar: S -> alt_1 | ... | alt_n
struct LGrammar {
    std::vector<std::vector<GSym>> alts;
    bool operator==(const LGrammar&) const = default;
};

LGrammar grammar_from_sexp(const Sexp& s, const SymbolSet* alphabet = nullptr);
LGrammar parse_grammar(std::string_view text, const SymbolSet* alphabet = nullptr);
Sexp grammar_to_sexp(const LGrammar& g);
std::string print_grammar(const LGrammar& g);

bool member(const LGrammar& g, const List& l);
bool is_ground(const List& l);

// variable-free members with at most max_len tokens, ordered by length then
// token names; `limit` caps the number produced (0 = no cap), `truncated` is
// set when the cap was hit
std::vector<List> enumerate_ground(const LGrammar& g, std::size_t max_len, std::size_t limit = 0,
                                   bool* truncated = nullptr);

LGrammar extend_constants(const LGrammar& g, const SymbolSet& consts);

struct ClosureReport {
    bool ok = true;
    std::vector<std::string> violations;
};
ClosureReport validate_closure(const LGrammar& g, std::size_t samples = 1000, std::uint64_t seed = 1);

// random member of L, possibly containing variables drawn from `vars`
List random_member(const LGrammar& g, std::mt19937_64& rng, const std::vector<Tok>& vars, int depth = 4);

// token-name lexicographic order used for deterministic output
bool list_name_less(const List& a, const List& b);
bool list_shortlex_less(const List& a, const List& b);

}  // namespace indukt
