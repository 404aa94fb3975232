#pragma once

#include "indukt/kernel.hpp"
#include "indukt/rsys.hpp"

#include <memory>

namespace indukt {

using TV3 = Tri;

struct EvalBounds {
    std::size_t list_size = 6;          // quantifiers range over ground lists up to this length
    std::size_t depth_budget = 200000;  // instance evaluations before giving up
    std::size_t sat_bound = 14;         // list bound of the backing saturation
    std::size_t fact_budget = 400000;
};

// Bounded valuation.  Internally five levels
//   False < BFalse < Unknown < BTrue < True
// where the B-levels mark verdicts that only hold on the enumerated part of
// L_*.  BTrue is reported as True ("no counterexample up to the bound"),
// BFalse as Unknown; False is only reported when the monotone certificate
// covers every prime involved.
class Evaluator {
public:
    Evaluator(const MathSystem& m, EvalBounds b);

    TV3 prime(const Prime& p);
    TV3 statement(const Formula& f);  // throws on open formulas
    TV3 gen(const Formula& f);

    const FactSet& facts() const { return fs_; }
    const std::vector<List>& domain() const { return domain_; }
    bool domain_complete() const { return complete_; }

    enum class V5 : std::uint8_t { False, BFalse, Unknown, BTrue, True };
    V5 eval5(const Formula& f);

private:
    V5 prime5(const Prime& p);

    const MathSystem& m_;
    EvalBounds b_;
    FactSet fs_;
    bool certified_;
    std::vector<List> domain_;
    bool complete_ = false;
    std::size_t spent_ = 0;
};

TV3 report(Evaluator::V5 v);

TV3 eval_prime(const MathSystem& m, const Prime& p, const EvalBounds& b = {});
TV3 eval_statement(const MathSystem& m, const Formula& f, const EvalBounds& b = {});
TV3 eval_gen(const MathSystem& m, const Formula& f, const EvalBounds& b = {});

}  // namespace indukt
