#pragma once

#include "indukt/kernel.hpp"

#include <map>
#include <string>

namespace indukt {

struct TransformError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------- theta

Formula theta(const Formula& f);
// basis and adjoined statements mapped by theta; the pa-is hook then
// recognizes theta images of scheme instances
MathSystem theta_system(const MathSystem& m);
// the image proof checks in theta_system(m)
Proof theta_proof(const MathSystem& m, const Proof& p);

// ---------------------------------------------------------------- C-elimination

struct Contradiction {
    Tok z = 0;
    Formula f;  // & Az ~z,z  ~Az ~z,z
};
Contradiction make_contradiction(Tok z);
// z not among the variables of the basis R-axioms (nor of `avoid`)
Contradiction contradiction_for(const MathSystem& m, const VarSet& avoid = {});

Formula c_formula(const Formula& f, Tok q, std::size_t j, const Contradiction& c);
Proof c_eliminate(const MathSystem& m, Tok q, std::size_t j, const Proof& p);

// ---------------------------------------------------------------- deduction

MathSystem without_adjoined(const MathSystem& m, const std::string& name);
// p proves G in m (which has `name` adjoined); the result proves -> phi G in m without it
Proof deduction(const MathSystem& m, const std::string& name, const Proof& p);

// ---------------------------------------------------------------- constants

Formula replace_symbol(const Formula& f, Tok from, Tok to);
// `base` is the system without the constants; the result checks in `base`
Proof generalize_constants(const MathSystem& base, const std::map<Tok, Tok>& const_to_var, const Proof& p);

// ---------------------------------------------------------------- R-derivations

// the same derivation as a kernel proof: axioms become basis or equality
// axioms, mp and subst carry over one for one
Proof rderivation_to_proof(const RDerivation& d);

// ---------------------------------------------------------------- N0 relativization

// free variables in first-occurrence order
std::vector<Tok> first_occurrence_free(const Formula& f);
// Gamma(f) wrapped around `inner`: -> N0 x1 ... -> N0 xn inner
Formula relativize_gamma(const Formula& f, const Formula& inner, Tok n0);
Formula relativize_psi(const Formula& f, Tok n0);
// inverses, used for round-trip checks
Formula strip_gamma(const Formula& f, std::size_t n, Tok n0);
Formula unrelativize_psi(const Formula& f, Tok n0);

}  // namespace indukt
