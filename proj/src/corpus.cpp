#include "indukt/frontend.hpp"

#include <chrono>
#include <set>

namespace indukt {

namespace {

std::string atom_of(const Sexp& s, const std::string& what) {
    if (s.is_list) throw LoadError("corpus: expected " + what + " at line " + std::to_string(s.line));
    return s.atom;
}

// string literals come back from the reader with their quotes
std::string unquote(const std::string& s) {
    if (s.size() >= 2 && s.front() == '"' && s.back() == '"') return s.substr(1, s.size() - 2);
    return s;
}

CorpusEntry entry_from_sexp(const Sexp& e) {
    if (!e.head_is("entry") || e.items.size() < 3) throw LoadError("corpus: expected (entry ID ...)");
    CorpusEntry out;
    out.id = atom_of(e.items[1], "an entry id");
    for (std::size_t i = 2; i < e.items.size(); ++i) {
        const Sexp& c = e.items[i];
        if (!c.is_list || c.items.empty()) throw LoadError("corpus " + out.id + ": malformed clause");
        const std::string& h = c.items[0].atom;
        if (h == "check" || h == "rcheck") {
            if (c.items.size() < 3) throw LoadError("corpus " + out.id + ": (" + h + " SYSTEM FILE...)");
            out.kind = h;
            out.system = atom_of(c.items[1], "a system file");
            for (std::size_t k = 2; k < c.items.size(); ++k) out.files.push_back(atom_of(c.items[k], "a file"));
        } else if (h == "constants") {
            for (std::size_t k = 1; k < c.items.size(); ++k) out.constants.push_back(atom_of(c.items[k], "a symbol"));
        } else if (h == "adjoin") {
            if (c.items.size() != 3) throw LoadError("corpus " + out.id + ": (adjoin NAME FORMULA)");
            out.extend.emplace_back(atom_of(c.items[1], "a name"), print_sexp(c.items[2]));
        } else if (h == "expect") {
            if (c.items.size() < 2) throw LoadError("corpus " + out.id + ": (expect accept|reject ...)");
            std::string v = atom_of(c.items[1], "accept or reject");
            if (v != "accept" && v != "reject") throw LoadError("corpus " + out.id + ": bad verdict " + v);
            out.expect_accept = v == "accept";
            if (c.items.size() > 2) out.expect_failed_label = std::stoul(atom_of(c.items[2], "a step label"));
            if (c.items.size() > 3) out.expect_reason = unquote(atom_of(c.items[3], "a reason"));
        } else if (h == "conclusion") {
            if (c.items.size() != 2) throw LoadError("corpus " + out.id + ": (conclusion FORMULA)");
            out.expect_conclusion = print_sexp(c.items[1]);
        } else {
            throw LoadError("corpus " + out.id + ": unknown clause " + h);
        }
    }
    if (out.kind.empty()) throw LoadError("corpus " + out.id + ": no check or rcheck clause");
    return out;
}

}  // namespace

std::vector<CorpusEntry> load_corpus(const std::string& manifest_path) {
    std::vector<Sexp> top;
    try {
        top = read_sexps(read_file(manifest_path));
    } catch (const ParseError& e) {
        throw LoadError(manifest_path + ": " + e.what());
    }
    if (top.size() != 1 || !top[0].head_is("corpus")) throw LoadError(manifest_path + ": expected one (corpus ...)");
    std::vector<CorpusEntry> out;
    std::set<std::string> ids;
    for (std::size_t i = 1; i < top[0].items.size(); ++i) {
        out.push_back(entry_from_sexp(top[0].items[i]));
        if (!ids.insert(out.back().id).second) throw LoadError(manifest_path + ": duplicate entry " + out.back().id);
    }
    return out;
}

MathSystem entry_system(const CorpusEntry& e) {
    MathSystem m = load_system(corpus_path(e.system));
    if (!e.constants.empty()) {
        SymbolSet cs;
        for (auto& c : e.constants) cs.insert(intern_symbol(c));
        m = extend_alphabet(m, cs);
    }
    for (auto& [name, text] : e.extend) m = adjoin(m, name, parse_formula(text, &m.alphabet));
    return m;
}

// files are pieces of one proof; labels run on across them
Proof entry_proof(const CorpusEntry& e, const MathSystem& m) {
    Proof out;
    std::set<std::size_t> seen;
    for (auto& f : e.files) {
        Proof part = load_proof(corpus_path(f), m);
        for (auto& st : part.steps) {
            if (!seen.insert(st.label).second)
                throw LoadError(f + ": step label " + std::to_string(st.label) + " repeats an earlier one");
            out.steps.push_back(st);
        }
    }
    return out;
}

CorpusResult run_entry(const CorpusEntry& e) {
    CorpusResult r;
    r.id = e.id;
    auto t0 = std::chrono::steady_clock::now();
    try {
        MathSystem m = entry_system(e);
        bool accepted;
        std::size_t label;
        std::string reason;
        std::string concl;
        if (e.kind == "rcheck") {
            if (e.files.size() != 1) throw LoadError("rcheck takes one derivation");
            RDerivation d = load_rderivation(corpus_path(e.files[0]), m);
            RReport rep = check_rderivation(m.S, m.lang, d);
            accepted = rep.accepted;
            label = rep.failed_label;
            reason = rep.reason;
            if (!d.steps.empty()) concl = print_formula(rform_to_formula(d.steps.back().f));
        } else {
            Proof p = entry_proof(e, m);
            CheckReport rep = check_proof(m, p);
            accepted = rep.accepted;
            label = rep.failed_label;
            reason = rep.reason;
            if (!p.steps.empty()) concl = print_formula(conclusion(p));
        }
        if (accepted != e.expect_accept) {
            r.detail = accepted ? "accepted, expected rejection"
                                : "rejected at step " + std::to_string(label) + ": " + reason;
        } else if (!accepted && e.expect_failed_label && label != e.expect_failed_label) {
            r.detail = "rejected at step " + std::to_string(label) + ", expected " +
                       std::to_string(e.expect_failed_label);
        } else if (!accepted && !e.expect_reason.empty() && reason.find(e.expect_reason) == std::string::npos) {
            r.detail = "reason differs: " + reason;
        } else if (!e.expect_conclusion.empty() &&
                   print_formula(parse_formula(e.expect_conclusion, &m.alphabet)) != concl) {
            r.detail = "conclusion differs: " + concl;
        } else {
            r.ok = true;
            r.detail = accepted ? "accepted" : "rejected at step " + std::to_string(label) + ": " + reason;
        }
    } catch (const std::exception& ex) {
        r.detail = std::string("error: ") + ex.what();
    }
    r.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

std::vector<CorpusResult> run_corpus(const std::vector<CorpusEntry>& entries, int jobs) {
    std::vector<CorpusResult> out(entries.size());
    const long n = static_cast<long>(entries.size());
#pragma omp parallel for schedule(dynamic, 1) num_threads(jobs > 0 ? jobs : 1)
    for (long i = 0; i < n; ++i) out[i] = run_entry(entries[i]);
    return out;
}

}  // namespace indukt
