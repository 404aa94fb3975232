#pragma once

#include "indukt/langset.hpp"
#include "indukt/syntax.hpp"

#include <map>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

namespace indukt {

using PredKey = std::pair<Tok, std::size_t>;

struct RecursiveSystem {
    SymbolSet alphabet;
    std::set<PredKey> preds;
    std::vector<RFormula> basis;
};

// ---------------------------------------------------------------- equality schemas

struct EqMatch {
    char schema = 0;  // 'a' reflexivity, 'b' replacement, 'c' congruence
    std::size_t arg = 0;
    std::size_t pos = 0;
};

std::optional<EqMatch> match_eq_schema(const RFormula& r);
bool is_eq_raxiom(const RecursiveSystem& s, const RFormula& r);

// ---------------------------------------------------------------- derivations

struct RJust {
    enum Kind { Axiom, AxiomEq, MP, Subst } kind = Axiom;
    std::size_t ref = 0;  // basis index (1-based) for Axiom, first cited step otherwise
    std::size_t ref2 = 0;
    Tok x = 0;
    List lambda;
};

struct RStep {
    std::size_t label = 0;
    RFormula f;
    RJust just;
};

struct RDerivation {
    std::vector<RStep> steps;
};

struct RReport {
    bool accepted = true;
    std::size_t failed_label = 0;
    std::string reason;
    std::size_t steps = 0;
};

RDerivation rderivation_from_sexp(const Sexp& s, const SymbolSet* alphabet = nullptr);
Sexp rderivation_to_sexp(const RDerivation& d);
std::string print_rderivation(const RDerivation& d);

RReport check_rderivation(const RecursiveSystem& s, const LGrammar& lang, const RDerivation& d);

// ---------------------------------------------------------------- saturation

struct FactProv {
    enum Kind : std::uint8_t { Basis, Replace, Congr } kind = Basis;
    std::uint32_t axiom = 0;              // Basis: 0-based basis index
    std::vector<std::uint32_t> prem;      // fact ids; Replace: {E or kNoFact, eq}; Congr: {p, eq}
    std::vector<std::pair<Tok, List>> binding;  // Basis: variable values, by variable order
    List refl;                            // Replace with implicit reflexive E: its list
    std::uint32_t arg = 0, pos = 0;       // Replace/Congr witness
    auto operator<=>(const FactProv&) const = default;
    bool operator==(const FactProv&) const = default;
};

constexpr std::uint32_t kNoFact = 0xffffffffu;

enum class Exec { Serial, Parallel };

struct FactSet {
    std::vector<Prime> facts;
    std::vector<FactProv> prov;
    std::unordered_map<Prime, std::uint32_t, PrimeHash> index;
    LGrammar lang;
    std::size_t bound = 0;
    std::size_t rounds = 0;
    bool truncated = false;

    // reflexive equations over L within the bound are implicit members
    bool contains(const Prime& p) const;
    std::optional<std::uint32_t> id_of(const Prime& p) const;
    std::vector<std::string> dump() const;  // sorted canonical lines, implicit facts excluded
};

std::size_t list_size_measure(const Prime& p);  // largest argument list
std::size_t total_size(const Prime& p);         // all argument tokens

FactSet saturate(const RecursiveSystem& s, const LGrammar& lang, std::size_t size_bound, std::size_t step_budget,
                 Exec exec = Exec::Parallel);

// An R-derivation of a saturated fact, built from its provenance.
RDerivation reconstruct(const RecursiveSystem& s, const FactSet& fs, const Prime& fact);

enum class Tri { True, False, Unknown };
const char* tri_name(Tri t);

bool monotone_certificate(const RecursiveSystem& s);

constexpr std::size_t kFalseSlack = 2;
Tri r_derivable(const RecursiveSystem& s, const LGrammar& lang, const Prime& p, std::size_t size_bound,
                std::size_t step_budget = 2'000'000);
// verdict against an existing saturation
Tri r_derivable_in(const RecursiveSystem& s, const FactSet& fs, const Prime& p);

}  // namespace indukt
