#pragma once

#include "indukt/syntax.hpp"

#include <set>
#include <string>
#include <vector>

namespace indukt {

using VarSet = std::set<Tok>;  // variable tokens iterate in index order

struct CollisionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void vars_of_list(const List& l, VarSet& out);
void vars_of_prime(const Prime& p, VarSet& out);
VarSet vars_of(const Formula& f);
VarSet vars_of(const RFormula& r);
VarSet free_of(const Formula& f);
bool occurs_free(const Formula& f, Tok x);
bool list_has(const List& l, Tok x);

List subst_list(const List& l, Tok x, const List& mu);
Prime subst_prime(const Prime& p, Tok x, const List& mu);
RFormula subst_rform(const RFormula& r, Tok x, const List& mu);

bool cf(const Formula& f, const List& mu, Tok x);
Formula sbf(const Formula& f, const List& mu, Tok x);
Formula rename_fresh(const Formula& f, Tok x, Tok z);

std::vector<Tok> free_list(const Formula& f);
Formula gen(const Formula& f);
std::size_t deg(const Formula& f);
std::string classify(const Formula& f);

// a variable named after `base` that is not in `avoid`; deterministic given avoid
Tok fresh_var(const std::string& base, const VarSet& avoid);

}  // namespace indukt
