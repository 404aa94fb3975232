#pragma once

#include "indukt/kernel.hpp"

#include <string>
#include <vector>

namespace indukt {

struct StageError : std::runtime_error {
    std::string stage;
    StageError(std::string stage_, const std::string& msg)
        : std::runtime_error(stage_ + ": " + msg), stage(std::move(stage_)) {}
};

struct Stage {
    std::string name;
    Proof proof;            // empty for stages that only build systems
    std::string conclusion; // printed, when there is a proof
    double ms = 0;
};

// ---------------------------------------------------------------- word reversal

// & & W l  W f(l)  ~ f(f(l)),l
Formula reverse_G(const List& l);

struct ReverseOptions {
    bool omit_phi2 = false;  // mutation: adjoin only G(c)
    std::string out_dir;     // when set, every stage proof is written there
};

struct ReverseResult {
    std::vector<Stage> stages;
    Proof step;     // -> G(x) -> G(y) G(xy)
    Proof induct;   // -> W u G(u)
    Proof closure;  // -> W x W f(x)
    Proof reverse;  // -> W x ~ f(f(x)),x
};

// throws StageError naming the failing stage
ReverseResult pipeline_reverse(const ReverseOptions& opt = {});

// ---------------------------------------------------------------- induction principle

// -> Ax -> N0 x & H(0/x) -> H H(s(x)/x)   Ax -> N0 x H
Formula induction_principle(const Formula& H, Tok x, Tok n0);

struct PrincipleResult {
    std::vector<Stage> stages;
    Proof proof;  // checks in the N0 system
};

// m: the N0 system (underlying recursive system with N0 0 and -> N0 x N0 s(x)).
// Free variables of H other than x are frozen to fresh constants and
// generalized back at the end.
PrincipleResult pipeline_induction_principle(const MathSystem& m, const Formula& H, Tok x,
                                             const std::string& out_dir = "");

}  // namespace indukt
