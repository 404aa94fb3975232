#pragma once

#include "indukt/kernel.hpp"
#include "indukt/rsys.hpp"

#include <string>
#include <vector>

namespace indukt {

struct LoadError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

// sections: (alphabet ..) (predicates (NAME ARITY)*) (vars ?v*) (rbasis (horn ..)*)
//           (lang (alt ..)*) (basis F*) (adjoined (NAME F)*) (hooks NAME*)
MathSystem system_from_text(std::string_view text, const std::string& origin = "<text>");
MathSystem load_system(const std::string& path);
std::string print_system(const MathSystem& m);

Proof proof_from_text(std::string_view text, const MathSystem& m);
Proof load_proof(const std::string& path, const MathSystem& m);
RDerivation load_rderivation(const std::string& path, const MathSystem& m);

// false when L has no ground member of length <= 8
bool has_ground_lists(const LGrammar& g);

// INDUKT_CORPUS, else the directory compiled in
std::string corpus_dir();
std::string corpus_path(const std::string& file);

// ---------------------------------------------------------------- corpus

struct CorpusEntry {
    std::string id;
    std::string kind;     // "rcheck" | "check"
    std::string system;
    std::vector<std::string> files;  // concatenated in order (check) or one derivation (rcheck)
    std::vector<std::pair<std::string, std::string>> extend;  // (constants) / adjoined (name, formula)
    std::vector<std::string> constants;
    bool expect_accept = true;
    std::size_t expect_failed_label = 0;
    std::string expect_reason;  // substring
    std::string expect_conclusion;  // printed formula, optional
};

std::vector<CorpusEntry> load_corpus(const std::string& manifest_path);

struct CorpusResult {
    std::string id;
    bool ok = false;  // matches the expectation
    std::string detail;
    double ms = 0;
};

// the system an entry is checked in, after constants and adjoined statements
MathSystem entry_system(const CorpusEntry& e);
Proof entry_proof(const CorpusEntry& e, const MathSystem& m);
CorpusResult run_entry(const CorpusEntry& e);
std::vector<CorpusResult> run_corpus(const std::vector<CorpusEntry>& entries, int jobs);

}  // namespace indukt
