#include "indukt/langset.hpp"

#include "indukt/binding.hpp"

#include <algorithm>
#include <functional>
#include <unordered_set>

namespace indukt {

LGrammar grammar_from_sexp(const Sexp& s, const SymbolSet* alphabet) {
    if (!s.head_is("lang")) throw ParseError("expected (lang (alt ...)*)", s.line);
    LGrammar g;
    for (std::size_t i = 1; i < s.items.size(); ++i) {
        const Sexp& a = s.items[i];
        if (!a.head_is("alt")) throw ParseError("expected (alt tok*)", a.line);
        std::vector<GSym> alt;
        for (std::size_t j = 1; j < a.items.size(); ++j) {
            const Sexp& t = a.items[j];
            if (t.paren) alt.push_back({GSym::Term, t.atom == "(" ? lparen() : rparen()});
            else if (t.atom == "S") alt.push_back({GSym::S, 0});
            else if (t.atom == "VAR") alt.push_back({GSym::Var, 0});
            else {
                Tok tk = intern_symbol(t.atom);
                if (alphabet && !alphabet->count(tk))
                    throw ParseError("grammar uses undeclared symbol '" + t.atom + "'", t.line);
                alt.push_back({GSym::Term, tk});
            }
        }
        g.alts.push_back(std::move(alt));
    }
    return g;
}

LGrammar parse_grammar(std::string_view text, const SymbolSet* alphabet) {
    return grammar_from_sexp(read_sexp(text), alphabet);
}

Sexp grammar_to_sexp(const LGrammar& g) {
    Sexp out;
    out.is_list = true;
    out.items.push_back(Sexp{false, false, "lang", {}, 0});
    for (auto& alt : g.alts) {
        Sexp a;
        a.is_list = true;
        a.items.push_back(Sexp{false, false, "alt", {}, 0});
        for (auto& gs : alt) {
            std::string name;
            if (gs.kind == GSym::S) name = "S";
            else if (gs.kind == GSym::Var) name = "VAR";
            else name = tok_name(gs.tok);
            a.items.push_back(Sexp{false, gs.kind == GSym::Term && is_paren(gs.tok), name, {}, 0});
        }
        out.items.push_back(std::move(a));
    }
    return out;
}

std::string print_grammar(const LGrammar& g) { return print_sexp(grammar_to_sexp(g)); }

bool is_ground(const List& l) {
    return std::none_of(l.begin(), l.end(), [](Tok t) { return is_var(t); });
}

bool member(const LGrammar& g, const List& l) {
    const std::size_t n = l.size();
    // ok[i * (n + 1) + j]: S derives l[i, j)
    std::vector<char> ok((n + 1) * (n + 1), 0);
    auto at = [&](std::size_t i, std::size_t j) -> char& { return ok[i * (n + 1) + j]; };

    std::function<bool(const std::vector<GSym>&, std::size_t, std::size_t, std::size_t)> match =
        [&](const std::vector<GSym>& alt, std::size_t k, std::size_t i, std::size_t j) -> bool {
        if (k == alt.size()) return i == j;
        const GSym& s = alt[k];
        if (s.kind == GSym::S) {
            for (std::size_t m = i; m <= j; ++m)
                if (at(i, m) && match(alt, k + 1, m, j)) return true;
            return false;
        }
        if (i >= j) return false;
        bool hit = s.kind == GSym::Var ? is_var(l[i]) : l[i] == s.tok;
        return hit && match(alt, k + 1, i + 1, j);
    };

    for (std::size_t len = 0; len <= n; ++len) {
        // spans of one length can depend on each other through S -> S or empty S
        bool changed = true;
        while (changed) {
            changed = false;
            for (std::size_t i = 0; i + len <= n; ++i) {
                std::size_t j = i + len;
                if (at(i, j)) continue;
                for (auto& alt : g.alts) {
                    if (match(alt, 0, i, j)) {
                        at(i, j) = 1;
                        changed = true;
                        break;
                    }
                }
            }
        }
    }
    return at(0, n);
}

bool list_name_less(const List& a, const List& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), [](Tok x, Tok y) {
        if (x == y) return false;
        return tok_name(x) < tok_name(y);
    });
}

bool list_shortlex_less(const List& a, const List& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return list_name_less(a, b);
}

std::vector<List> enumerate_ground(const LGrammar& g, std::size_t max_len, std::size_t limit, bool* truncated) {
    if (truncated) *truncated = false;
    std::vector<std::vector<List>> by_len(max_len + 1);
    std::vector<std::unordered_set<List, ListHash>> seen(max_len + 1);
    std::size_t total = 0;
    bool cut = false;

    for (std::size_t len = 0; len <= max_len && !cut; ++len) {
        bool changed = true;
        while (changed && !cut) {
            changed = false;
            for (auto& alt : g.alts) {
                // a VAR alternative has no ground instances
                bool has_var = std::any_of(alt.begin(), alt.end(), [](const GSym& s) { return s.kind == GSym::Var; });
                if (has_var) continue;
                std::size_t terms = 0;
                for (auto& s : alt) terms += s.kind == GSym::Term;
                if (terms > len) continue;
                List cur;
                std::function<void(std::size_t, std::size_t)> build = [&](std::size_t k, std::size_t left) {
                    if (cut) return;
                    if (k == alt.size()) {
                        if (left == 0 && !seen[len].count(cur)) {
                            seen[len].insert(cur);
                            by_len[len].push_back(cur);
                            changed = true;
                            if (limit && ++total >= limit) cut = true;
                        }
                        return;
                    }
                    const GSym& s = alt[k];
                    if (s.kind == GSym::Term) {
                        if (left == 0) return;
                        cur.push_back(s.tok);
                        build(k + 1, left - 1);
                        cur.pop_back();
                        return;
                    }
                    std::size_t rest_terms = 0;
                    for (std::size_t r = k + 1; r < alt.size(); ++r) rest_terms += alt[r].kind == GSym::Term;
                    if (rest_terms > left) return;
                    for (std::size_t sub = 0; sub + rest_terms <= left; ++sub) {
                        // snapshot: by_len[len] grows while we iterate it
                        std::size_t cnt = by_len[sub].size();
                        for (std::size_t q = 0; q < cnt; ++q) {
                            List piece = by_len[sub][q];
                            std::size_t mark = cur.size();
                            cur.insert(cur.end(), piece.begin(), piece.end());
                            build(k + 1, left - sub);
                            cur.resize(mark);
                            if (cut) return;
                        }
                    }
                };
                build(0, len);
                if (cut) break;
            }
        }
    }
    if (truncated) *truncated = cut;
    std::vector<List> out;
    for (auto& v : by_len) {
        std::sort(v.begin(), v.end(), list_name_less);
        out.insert(out.end(), v.begin(), v.end());
    }
    return out;
}

LGrammar extend_constants(const LGrammar& g, const SymbolSet& consts) {
    LGrammar out = g;
    for (Tok c : consts) {
        for (auto& alt : g.alts)
            for (auto& s : alt)
                if (s.kind == GSym::Term && s.tok == c)
                    throw std::invalid_argument("constant '" + tok_name(c) + "' already used by the grammar");
        out.alts.push_back({GSym{GSym::Term, c}});
    }
    return out;
}

List random_member(const LGrammar& g, std::mt19937_64& rng, const std::vector<Tok>& vars, int depth) {
    std::vector<std::size_t> leaves, all;
    for (std::size_t i = 0; i < g.alts.size(); ++i) {
        all.push_back(i);
        bool rec = std::any_of(g.alts[i].begin(), g.alts[i].end(), [](const GSym& s) { return s.kind == GSym::S; });
        if (!rec) leaves.push_back(i);
    }
    List out;
    std::function<void(int)> go = [&](int d) {
        const auto& pool = (d <= 0 && !leaves.empty()) ? leaves : all;
        std::size_t pick = pool[std::uniform_int_distribution<std::size_t>(0, pool.size() - 1)(rng)];
        for (auto& s : g.alts[pick]) {
            if (s.kind == GSym::Term) out.push_back(s.tok);
            else if (s.kind == GSym::Var) {
                if (vars.empty()) out.push_back(intern_var("?v"));
                else out.push_back(vars[std::uniform_int_distribution<std::size_t>(0, vars.size() - 1)(rng)]);
            } else go(d - 1);
        }
    };
    go(depth);
    return out;
}

ClosureReport validate_closure(const LGrammar& g, std::size_t samples, std::uint64_t seed) {
    ClosureReport rep;
    bool var_alt = false;
    for (auto& alt : g.alts) {
        for (std::size_t k = 0; k < alt.size(); ++k) {
            if (alt[k].kind != GSym::Var) continue;
            if (alt.size() == 1) var_alt = true;
            else {
                rep.ok = false;
                rep.violations.push_back("VAR used inside a longer alternative: " +
                                         print_sexp(grammar_to_sexp(LGrammar{{alt}})));
            }
        }
    }
    if (!var_alt) {
        rep.ok = false;
        rep.violations.push_back("variables are not members: no bare VAR alternative");
    }
    std::mt19937_64 rng(seed);
    std::vector<Tok> vars = {intern_var("?x"), intern_var("?y"), intern_var("?z")};
    for (std::size_t i = 0; i < samples && rep.violations.size() < 10; ++i) {
        List lam = random_member(g, rng, vars, 3);
        List mu = random_member(g, rng, vars, 2);
        Tok x = vars[i % vars.size()];
        if (!member(g, lam) || !member(g, mu)) continue;
        List r = subst_list(lam, x, mu);
        if (!member(g, r)) {
            rep.ok = false;
            rep.violations.push_back("substituting " + print_list(mu) + " for " + tok_name(x) + " in " +
                                     print_list(lam) + " leaves the language");
        }
    }
    return rep;
}

}  // namespace indukt
