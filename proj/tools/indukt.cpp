// indukt: command-line front end.  Exit codes: 0 accept, 1 reject, 2 usage or I/O.
#include "indukt/frontend.hpp"
#include "indukt/pipeline.hpp"
#include "indukt/semantics.hpp"
#include "indukt/transform.hpp"

#include <CLI11.hpp>

#include <iostream>

using namespace indukt;

namespace {

struct SysArgs {
    std::string system;
    std::vector<std::string> constants;
    std::vector<std::string> adjoins;  // NAME=FORMULA

    void add_to(CLI::App* app) {
        app->add_option("system", system, "system file (.msys)")->required();
        app->add_option("--constants", constants, "extend the alphabet by these constant symbols");
        app->add_option("--adjoin", adjoins, "adjoin a statement, NAME=FORMULA");
    }
    MathSystem load() const {
        MathSystem m = load_system(system);
        if (!constants.empty()) {
            SymbolSet cs;
            for (auto& c : constants) cs.insert(intern_symbol(c));
            m = extend_alphabet(m, cs);
        }
        for (auto& a : adjoins) {
            auto eq = a.find('=');
            if (eq == std::string::npos) throw LoadError("--adjoin expects NAME=FORMULA");
            m = adjoin(m, a.substr(0, eq), parse_formula(a.substr(eq + 1), &m.alphabet));
        }
        return m;
    }
};

Proof load_proofs(const std::vector<std::string>& files, const MathSystem& m) {
    Proof out;
    for (auto& f : files) {
        Proof p = load_proof(f, m);
        out.steps.insert(out.steps.end(), p.steps.begin(), p.steps.end());
    }
    return out;
}

void emit(const std::string& out_path, const std::string& text) {
    if (out_path.empty()) std::cout << text;
    else write_file(out_path, text);
}

int report(const CheckReport& r) {
    if (r.accepted) {
        std::cout << "accepted: " << r.steps << " steps\n";
        for (auto& [tag, n] : r.rule_counts) std::cout << "  " << tag << " " << n << "\n";
        return 0;
    }
    std::cout << "rejected at step " << r.failed_label << ": " << r.reason << "\n";
    return 1;
}

std::size_t g_jobs = 1;

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"indukt: proof kernel for mathematical systems with structural induction"};
    app.require_subcommand(1);
    app.add_option("--jobs", g_jobs, "worker threads for corpus runs")->check(CLI::PositiveNumber);

    int rc = 0;

    // check
    SysArgs chk;
    std::vector<std::string> chk_files;
    auto* c_check = app.add_subcommand("check", "check a proof; several files are read as one proof");
    chk.add_to(c_check);
    c_check->add_option("proof", chk_files, "proof files (.mproof)")->required();
    c_check->callback([&] {
        MathSystem m = chk.load();
        rc = report(check_proof(m, load_proofs(chk_files, m)));
    });

    // rcheck
    SysArgs rchk;
    std::string rfile;
    auto* c_rcheck = app.add_subcommand("rcheck", "check an R-derivation");
    rchk.add_to(c_rcheck);
    c_rcheck->add_option("derivation", rfile, "derivation file (.rproof)")->required();
    c_rcheck->callback([&] {
        MathSystem m = rchk.load();
        RReport r = check_rderivation(m.S, m.lang, load_rderivation(rfile, m));
        if (r.accepted) {
            std::cout << "accepted: " << r.steps << " steps\n";
        } else {
            std::cout << "rejected at step " << r.failed_label << ": " << r.reason << "\n";
            rc = 1;
        }
    });

    // saturate
    SysArgs sat;
    std::size_t sat_bound = 12, sat_budget = 2'000'000;
    bool sat_serial = false;
    auto* c_sat = app.add_subcommand("saturate", "derive all facts within a list-size bound");
    sat.add_to(c_sat);
    c_sat->add_option("--bound", sat_bound, "largest argument list, in tokens");
    c_sat->add_option("--budget", sat_budget, "stop after this many facts");
    c_sat->add_flag("--serial", sat_serial, "single-threaded reference run");
    c_sat->callback([&] {
        MathSystem m = sat.load();
        FactSet fs = saturate(m.S, m.lang, sat_bound, sat_budget, sat_serial ? Exec::Serial : Exec::Parallel);
        for (auto& line : fs.dump()) std::cout << line << "\n";
        std::cerr << fs.facts.size() << " facts, " << fs.rounds << " rounds" << (fs.truncated ? ", truncated" : "")
                  << "\n";
    });

    // derivable
    SysArgs der;
    std::string der_prime;
    std::size_t der_bound = 12, der_budget = 2'000'000;
    auto* c_der = app.add_subcommand("derivable", "three-valued R-derivability of a prime formula");
    der.add_to(c_der);
    c_der->add_option("prime", der_prime, "prime formula, e.g. (pred D (l 1 0))")->required();
    c_der->add_option("--bound", der_bound);
    c_der->add_option("--budget", der_budget);
    c_der->callback([&] {
        MathSystem m = der.load();
        Formula f = parse_formula(der_prime, &m.alphabet);
        if (f.op() != Op::Prime) throw LoadError("expected a prime formula");
        std::cout << tri_name(r_derivable(m.S, m.lang, f.atom(), der_bound, der_budget)) << "\n";
    });

    // enumerate-lists
    SysArgs en;
    std::size_t en_len = 4, en_limit = 0;
    auto* c_en = app.add_subcommand("enumerate-lists", "ground members of L up to a length");
    en.add_to(c_en);
    c_en->add_option("--max-len", en_len);
    c_en->add_option("--limit", en_limit);
    c_en->callback([&] {
        MathSystem m = en.load();
        for (auto& l : enumerate_ground(m.lang, en_len, en_limit)) std::cout << print_list(l) << "\n";
    });

    // eval
    SysArgs ev;
    std::string ev_formula;
    EvalBounds ev_bounds;
    bool ev_gen = false;
    auto* c_ev = app.add_subcommand("eval", "bounded valuation of a statement");
    ev.add_to(c_ev);
    c_ev->add_option("formula", ev_formula)->required();
    c_ev->add_option("--list-size", ev_bounds.list_size, "quantifier domain: ground lists up to this length");
    c_ev->add_option("--budget", ev_bounds.depth_budget, "instance evaluations before giving up");
    c_ev->add_option("--sat-bound", ev_bounds.sat_bound);
    c_ev->add_flag("--gen", ev_gen, "evaluate the universal closure");
    c_ev->callback([&] {
        MathSystem m = ev.load();
        Formula f = parse_formula(ev_formula, &m.alphabet);
        Evaluator e(m, ev_bounds);
        std::cout << tri_name(ev_gen ? e.gen(f) : e.statement(f)) << "\n";
    });

    // theta
    SysArgs th;
    std::vector<std::string> th_files;
    std::string th_out;
    auto* c_th = app.add_subcommand("theta", "eliminate Ex, Or, And, Iff from a proof");
    th.add_to(c_th);
    c_th->add_option("proof", th_files)->required();
    c_th->add_option("-o,--output", th_out);
    c_th->callback([&] {
        MathSystem m = th.load();
        emit(th_out, print_proof(theta_proof(m, load_proofs(th_files, m))));
    });

    // celim
    SysArgs ce;
    std::vector<std::string> ce_files;
    std::string ce_out, ce_pred;
    std::size_t ce_arity = 1;
    auto* c_ce = app.add_subcommand("celim", "replace a predicate absent from the basis by a contradiction");
    ce.add_to(c_ce);
    c_ce->add_option("proof", ce_files)->required();
    c_ce->add_option("--pred", ce_pred)->required();
    c_ce->add_option("--arity", ce_arity);
    c_ce->add_option("-o,--output", ce_out);
    c_ce->callback([&] {
        MathSystem m = ce.load();
        emit(ce_out, print_proof(c_eliminate(m, intern_symbol(ce_pred), ce_arity, load_proofs(ce_files, m))));
    });

    // deduce
    SysArgs de;
    std::vector<std::string> de_files;
    std::string de_out, de_name;
    auto* c_de = app.add_subcommand("deduce", "discharge an adjoined statement");
    de.add_to(c_de);
    c_de->add_option("proof", de_files)->required();
    c_de->add_option("--name", de_name, "adjoined statement to discharge")->required();
    c_de->add_option("-o,--output", de_out);
    c_de->callback([&] {
        MathSystem m = de.load();
        emit(de_out, print_proof(deduction(m, de_name, load_proofs(de_files, m))));
    });

    // genconst
    SysArgs gc;
    std::vector<std::string> gc_files, gc_map;
    std::string gc_out;
    auto* c_gc = app.add_subcommand("genconst", "replace new constants by fresh variables");
    gc.add_to(c_gc);
    c_gc->add_option("proof", gc_files)->required();
    c_gc->add_option("--map", gc_map, "CONST=?VAR")->required();
    c_gc->add_option("-o,--output", gc_out);
    c_gc->callback([&] {
        MathSystem base = gc.load();
        std::map<Tok, Tok> to_var;
        SymbolSet cs;
        for (auto& e : gc_map) {
            auto eq = e.find('=');
            if (eq == std::string::npos || eq + 1 >= e.size() || e[eq + 1] != '?')
                throw LoadError("--map expects CONST=?VAR");
            Tok c = intern_symbol(e.substr(0, eq));
            to_var[c] = intern_var(e.substr(eq + 1));
            cs.insert(c);
        }
        MathSystem ext = extend_alphabet(base, cs);
        emit(gc_out, print_proof(generalize_constants(base, to_var, load_proofs(gc_files, ext))));
    });

    // relativize
    std::string rel_formula, rel_n0 = "N0";
    bool rel_psi_only = false;
    auto* c_rel = app.add_subcommand("relativize", "print Gamma(F) Psi(F) for a formula");
    c_rel->add_option("formula", rel_formula)->required();
    c_rel->add_option("--n0", rel_n0, "guard predicate");
    c_rel->add_flag("--psi", rel_psi_only, "print Psi(F) alone");
    c_rel->callback([&] {
        Formula f = parse_formula(rel_formula);
        Tok n0 = intern_symbol(rel_n0);
        Formula psi = relativize_psi(f, n0);
        std::cout << print_formula(rel_psi_only ? psi : relativize_gamma(f, psi, n0)) << "\n";
    });

    // pipeline-reverse
    ReverseOptions ro;
    auto* c_pipe = app.add_subcommand("pipeline-reverse", "word-reversal pipeline from the corpus");
    c_pipe->alias("pipeline-3-3");
    c_pipe->add_option("--out", ro.out_dir, "directory for the stage proofs");
    c_pipe->add_flag("--omit-phi2", ro.omit_phi2, "mutation: adjoin G(c) only");
    c_pipe->callback([&] {
        try {
            ReverseResult r = pipeline_reverse(ro);
            for (auto& s : r.stages)
                std::cout << s.name << ": " << s.proof.steps.size() << " steps"
                          << (s.conclusion.empty() ? "" : ", concludes " + s.conclusion) << "\n";
        } catch (const StageError& e) {
            std::cout << "failed in stage " << e.stage << ": " << e.what() << "\n";
            rc = 1;
        }
    });

    // pipeline-induction
    SysArgs pi;
    std::string pi_formula, pi_var = "?x", pi_dir, pi_out;
    auto* c_pi = app.add_subcommand("pipeline-induction", "prove the N0 induction principle for a formula H");
    pi.add_to(c_pi);
    c_pi->add_option("formula", pi_formula, "H")->required();
    c_pi->add_option("--var", pi_var, "induction variable");
    c_pi->add_option("--out", pi_dir, "directory for the stage proofs");
    c_pi->add_option("-o,--output", pi_out, "file for the final proof");
    c_pi->callback([&] {
        MathSystem m = pi.load();
        try {
            PrincipleResult r = pipeline_induction_principle(m, parse_formula(pi_formula, &m.alphabet),
                                                             intern_var(pi_var), pi_dir);
            for (auto& s : r.stages)
                std::cerr << s.name << ": " << s.proof.steps.size() << " steps\n";
            emit(pi_out, print_proof(r.proof));
        } catch (const StageError& e) {
            std::cout << "failed in stage " << e.stage << ": " << e.what() << "\n";
            rc = 1;
        }
    });

    // corpus run
    auto* c_corpus = app.add_subcommand("corpus", "golden corpus");
    c_corpus->require_subcommand(1);
    std::string manifest;
    bool timing = false;
    auto* c_run = c_corpus->add_subcommand("run", "check every corpus entry against its expectation");
    c_run->add_option("--manifest", manifest, "default: corpus.sexp in the corpus directory");
    c_run->add_flag("--timing", timing, "append wall-clock milliseconds");
    c_run->callback([&] {
        auto entries = load_corpus(manifest.empty() ? corpus_path("corpus.sexp") : manifest);
        auto results = run_corpus(entries, static_cast<int>(g_jobs));
        std::size_t bad = 0;
        for (auto& r : results) {
            std::cout << (r.ok ? "ok   " : "FAIL ") << r.id << ": " << r.detail;
            if (timing) std::cout << " (" << static_cast<long>(r.ms) << " ms)";
            std::cout << "\n";
            bad += !r.ok;
        }
        std::cout << results.size() - bad << "/" << results.size() << " entries as expected\n";
        rc = bad ? 1 : 0;
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    } catch (const LoadError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return rc;
}
