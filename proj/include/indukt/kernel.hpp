#pragma once

#include "indukt/binding.hpp"
#include "indukt/langset.hpp"
#include "indukt/rsys.hpp"
#include "indukt/syntax.hpp"

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace indukt {

struct MathSystem {
    RecursiveSystem S;            // underlying recursive system
    SymbolSet alphabet;           // A_M
    std::set<PredKey> preds;      // P_M
    std::vector<Formula> basis;   // B_M; rbasis formulas come first
    std::vector<std::pair<std::string, Formula>> adjoined;
    LGrammar lang;
    std::set<std::string> hooks;  // "pa-is"
    bool theta_form = false;      // scheme instances are recognized as theta images

    const Formula* adjoined_named(const std::string& name) const;
    VarSet rbasis_vars() const;
};

// ---------------------------------------------------------------- proofs

struct Just {
    enum Kind { Taut, Eq, Quant, Basis, Adjoined, Schema, MP, Subst, Gen, Induct } kind = Taut;
    char quant = 0;            // 'a' | 'b' | 'c'
    std::size_t ref = 0;       // basis index (1-based) or first cited step
    std::size_t ref2 = 0;
    std::string name;          // adjoined name or schema hook
    Tok x = 0;
    List lambda;
    // Rule (e)
    Tok pred = 0;
    std::size_t arity = 0;
    std::vector<Tok> xs;
    Formula G;
    std::vector<std::pair<std::size_t, std::size_t>> oblig;  // (basis R-axiom index, step label)
};

struct Step {
    std::size_t label = 0;
    Formula f;
    Just just;
};

struct Proof {
    std::vector<Step> steps;
};

struct CheckReport {
    bool accepted = true;
    std::size_t failed_label = 0;
    std::string reason;
    std::size_t steps = 0;
    std::map<std::string, std::size_t> rule_counts;
};

Proof proof_from_sexp(const Sexp& s, const SymbolSet* alphabet = nullptr);
std::string print_proof(const Proof& p);
std::string just_tag(const Just& j);  // "ax-taut", "mp", ...

// relabel steps 1..n in order, rewriting citations
Proof renumber(const Proof& p, std::size_t first = 1);
// p followed by q; q's labels shifted past p's
Proof concat(const Proof& p, const Proof& q);
std::size_t label_of_last(const Proof& p);
const Formula& conclusion(const Proof& p);

// ---------------------------------------------------------------- recognizers

enum class TautVerdict { Yes, No, CapExceeded };
TautVerdict taut_verdict(const Formula& f, std::size_t atom_cap = 16);
bool is_taut_instance(const Formula& f, std::size_t atom_cap = 16);  // throws on cap

bool is_eq_axiom(const Formula& f);

// 'a' | 'b' | 'c', or nullopt; `why` explains a near miss
std::optional<char> is_quant_axiom(const Formula& f, std::string* why = nullptr);

bool is_basis_axiom(const MathSystem& m, const Formula& f);
bool is_pa_is_instance(const Formula& f);
// the induction-scheme formula for body F over x
Formula pa_is_instance(const Formula& F, Tok x);

// ---------------------------------------------------------------- checking

struct ObligationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// (basis R-axiom index, obligation formula); index is 1-based into S.basis
std::vector<std::pair<std::size_t, Formula>> build_e_obligations(const RecursiveSystem& s, Tok pred,
                                                                  std::size_t arity, const std::vector<Tok>& xs,
                                                                  const Formula& G);
Formula induct_conclusion(Tok pred, const std::vector<Tok>& xs, const Formula& G);

CheckReport check_proof(const MathSystem& m, const Proof& p);

// empty string when fine, else the failure reason
std::string check_induction(const MathSystem& m, const Proof& p, std::size_t pos,
                            const std::unordered_map<std::size_t, std::size_t>& at);

MathSystem adjoin(const MathSystem& m, const std::string& name, const Formula& phi);
MathSystem extend_alphabet(const MathSystem& m, const SymbolSet& consts);

}  // namespace indukt
