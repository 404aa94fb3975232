#include "indukt/pipeline.hpp"

#include "indukt/frontend.hpp"
#include "indukt/transform.hpp"

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>

namespace indukt {

namespace {

Just mk(Just::Kind k) {
    Just j;
    j.kind = k;
    return j;
}

struct Builder {
    Proof out;

    std::size_t push(Formula f, Just j) {
        Step s;
        s.label = out.steps.size() + 1;
        s.f = std::move(f);
        s.just = std::move(j);
        out.steps.push_back(std::move(s));
        return out.steps.size();
    }
    // appends a self-contained proof; returns the label of its last step
    std::size_t append(const Proof& p) {
        Proof r = renumber(p, out.steps.size() + 1);
        out.steps.insert(out.steps.end(), r.steps.begin(), r.steps.end());
        return out.steps.size();
    }
    const Formula& at(std::size_t label) const { return out.steps.at(label - 1).f; }

    std::size_t taut(Formula f) { return push(std::move(f), mk(Just::Taut)); }
    std::size_t basis(std::size_t k, const MathSystem& m) {
        Just j = mk(Just::Basis);
        j.ref = k;
        return push(m.basis.at(k - 1), j);
    }
    std::size_t quant(char q, Formula f) {
        Just j = mk(Just::Quant);
        j.quant = q;
        return push(std::move(f), j);
    }
    std::size_t mp(std::size_t minor, std::size_t major) {
        Just j = mk(Just::MP);
        j.ref = minor;
        j.ref2 = major;
        return push(at(major).b(), j);
    }
    std::size_t subst(std::size_t ref, Tok x, const List& lam) {
        Just j = mk(Just::Subst);
        j.ref = ref;
        j.x = x;
        j.lambda = lam;
        return push(sbf(at(ref), lam, x), j);
    }
    std::size_t gen(Tok x, std::size_t ref) {
        Just j = mk(Just::Gen);
        j.x = x;
        j.ref = ref;
        return push(all(x, at(ref)), j);
    }
};

struct Stages {
    std::vector<Stage>& list;
    std::string out_dir;
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();

    void begin() { t0 = std::chrono::steady_clock::now(); }
    void done(const std::string& name, const Proof* p = nullptr) {
        Stage s;
        s.name = name;
        if (p) {
            s.proof = *p;
            if (!p->steps.empty()) s.conclusion = print_formula(conclusion(*p));
        }
        s.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
        if (p && !out_dir.empty()) {
            std::filesystem::create_directories(out_dir);
            char num[8];
            std::snprintf(num, sizeof num, "%02zu", list.size() + 1);
            write_file(out_dir + "/" + num + "-" + name + ".mproof", print_proof(*p));
        }
        list.push_back(std::move(s));
        begin();
    }
};

void must_check(const std::string& stage, const MathSystem& m, const Proof& p) {
    CheckReport r = check_proof(m, p);
    if (!r.accepted)
        throw StageError(stage, "rejected at step " + std::to_string(r.failed_label) + ": " + r.reason);
}

void must_conclude(const std::string& stage, const Proof& p, const Formula& want) {
    if (p.steps.empty() || !(conclusion(p) == want))
        throw StageError(stage, "concludes " + (p.steps.empty() ? std::string("nothing") : print_formula(conclusion(p))) +
                                    ", expected " + print_formula(want));
}

template <class Fn>
auto in_stage(const std::string& stage, Fn&& fn) -> decltype(fn()) {
    try {
        return fn();
    } catch (const StageError&) {
        throw;
    } catch (const std::exception& e) {
        throw StageError(stage, e.what());
    }
}

VarSet vars_in(const Proof& p) {
    VarSet out;
    for (auto& st : p.steps) {
        VarSet v = vars_of(st.f);
        out.insert(v.begin(), v.end());
    }
    return out;
}

Formula n0_of(Tok n0, const List& l) { return Formula::prime(make_pred(n0, {l})); }
List succ(const List& l) {
    List out{intern_symbol("s"), lparen()};
    out.insert(out.end(), l.begin(), l.end());
    out.push_back(rparen());
    return out;
}

}  // namespace

// ---------------------------------------------------------------- word reversal

Formula reverse_G(const List& l) {
    Tok W = intern_symbol("W");
    Tok f = intern_symbol("f");
    auto fof = [&](const List& x) {
        List out{f, lparen()};
        out.insert(out.end(), x.begin(), x.end());
        out.push_back(rparen());
        return out;
    };
    Formula w = Formula::prime(make_pred(W, {l}));
    Formula wf = Formula::prime(make_pred(W, {fof(l)}));
    Formula e = Formula::prime(make_eq(fof(fof(l)), l));
    return conj(conj(w, wf), e);
}

ReverseResult pipeline_reverse(const ReverseOptions& opt) {
    ReverseResult res;
    Stages st{res.stages, opt.out_dir};
    const Tok c = intern_symbol("c"), d = intern_symbol("d");
    const Tok vx = intern_var("?x"), vy = intern_var("?y"), vu = intern_var("?u");
    const Tok W = intern_symbol("W");

    MathSystem M = in_stage("load", [] { return load_system(corpus_path("reverse.msys")); });
    Proof p153 = in_stage("load", [&] { return load_proof(corpus_path("reverse-1-53.mproof"), M); });
    must_check("check-1-53", M, p153);
    if (p153.steps.size() != 53) throw StageError("check-1-53", "expected 53 steps");
    st.done("check-1-53", &p153);

    MathSystem MA = in_stage("extend", [&] { return extend_alphabet(M, {c, d}); });
    MathSystem Mp = in_stage("extend", [&] {
        MathSystem out = adjoin(MA, "phi1", reverse_G({c}));
        if (!opt.omit_phi2) out = adjoin(out, "phi2", reverse_G({d}));
        return out;
    });
    st.done("extend");

    Proof full = in_stage("check-54-120", [&] {
        Proof rest = load_proof(corpus_path("reverse-54-120.mproof"), Mp);
        Proof out = p153;
        out.steps.insert(out.steps.end(), rest.steps.begin(), rest.steps.end());
        return out;
    });
    must_check("check-54-120", Mp, full);
    must_conclude("check-54-120", full, reverse_G({c, d}));
    st.done("check-54-120", &full);

    Proof d2 = in_stage("deduction-phi2", [&] { return deduction(Mp, "phi2", full); });
    MathSystem M1 = without_adjoined(Mp, "phi2");
    must_check("deduction-phi2", M1, d2);
    must_conclude("deduction-phi2", d2, imp(reverse_G({d}), reverse_G({c, d})));
    st.done("deduction-phi2", &d2);

    Proof d1 = in_stage("deduction-phi1", [&] { return deduction(M1, "phi1", d2); });
    must_check("deduction-phi1", MA, d1);
    st.done("deduction-phi1", &d1);

    Proof step = in_stage("genconst", [&] {
        VarSet avoid = vars_in(d1);
        VarSet bv = M.rbasis_vars();
        avoid.insert(bv.begin(), bv.end());
        Tok zc = fresh_var("?x", avoid);
        avoid.insert(zc);
        Tok zd = fresh_var("?y", avoid);
        Builder b;
        b.append(generalize_constants(M, {{c, zc}, {d, zd}}, d1));
        std::size_t s1 = b.subst(b.out.steps.size(), zc, {vx});
        b.subst(s1, zd, {vy});
        return b.out;
    });
    must_check("genconst", M, step);
    must_conclude("genconst", step, imp(reverse_G({vx}), imp(reverse_G({vy}), reverse_G({vx, vy}))));
    st.done("genconst", &step);
    res.step = step;

    Proof ind = in_stage("rule-e", [&] {
        Builder b;
        b.append(p153);
        std::size_t ga = 49, gb = 53;
        std::size_t gxy = b.append(step);
        Just j = mk(Just::Induct);
        j.pred = W;
        j.arity = 1;
        j.xs = {vu};
        j.G = reverse_G({vu});
        j.oblig = {{1, ga}, {2, gb}, {3, gxy}};
        b.push(induct_conclusion(W, j.xs, j.G), j);
        return b.out;
    });
    must_check("rule-e", M, ind);
    st.done("rule-e", &ind);
    res.induct = ind;

    // -> W x G(x), then the two projections
    auto project = [&](const std::string& name, auto pick) {
        Proof out = in_stage(name, [&] {
            Builder b;
            std::size_t r = b.append(ind);
            std::size_t wx = b.subst(r, vu, {vx});
            const Formula whole = b.at(wx);
            Formula target = imp(whole.a(), pick(whole.b()));
            std::size_t t = b.taut(imp(whole, target));
            b.mp(wx, t);
            return b.out;
        });
        must_check(name, M, out);
        st.done(name, &out);
        return out;
    };
    res.closure = project("closure", [](const Formula& G) { return G.a().b(); });
    res.reverse = project("reverse", [](const Formula& G) { return G.b(); });

    Formula want = imp(Formula::prime(make_pred(W, {{vx}})),
                       Formula::prime(make_eq(parse_list("(l f ( f ( ?x ) ))"), {vx})));
    must_conclude("reverse", res.reverse, want);
    return res;
}

// ---------------------------------------------------------------- induction principle

Formula induction_principle(const Formula& H, Tok x, Tok n0) {
    Formula zero = sbf(H, {intern_symbol("0")}, x);
    Formula next = sbf(H, succ({x}), x);
    Formula Nx = n0_of(n0, {x});
    return imp(all(x, imp(Nx, conj(zero, imp(H, next)))), all(x, imp(Nx, H)));
}

PrincipleResult pipeline_induction_principle(const MathSystem& m, const Formula& H, Tok x,
                                             const std::string& out_dir) {
    PrincipleResult res;
    Stages st{res.stages, out_dir};
    const Tok n0 = intern_symbol("N0");
    const Tok zero = intern_symbol("0");

    // the successor axiom fixes the variable the obligations are phrased in
    std::size_t ax0 = 0, ax1 = 0;
    for (std::size_t k = 0; k < m.S.basis.size(); ++k) {
        const RFormula& r = m.S.basis[k];
        if (r.concl.eq || r.concl.pred != n0 || r.concl.arity() != 1) continue;
        if (r.prem.empty() && r.concl.args[0] == List{zero}) ax0 = k + 1;
        else if (r.prem.size() == 1 && !r.prem[0].eq && r.prem[0].pred == n0 && r.prem[0].args[0].size() == 1 &&
                 r.concl.args[0] == succ(r.prem[0].args[0]) && r.prem[0].args[0][0] == x)
            ax1 = k + 1;
        else throw StageError("setup", "unexpected N0 axiom " + print_rformula(r));
    }
    if (!ax0 || !ax1)
        throw StageError("setup", "need N0 0 and -> N0 " + tok_name(x) + " N0 s(" + tok_name(x) + ") among the basis");

    // adjoining renames clashing bound variables; only the outer one is undone below
    {
        VarSet bv = m.rbasis_vars();
        std::function<void(const Formula&)> walk = [&](const Formula& f) {
            switch (f.op()) {
            case Op::Prime: return;
            case Op::Not: walk(f.a()); return;
            case Op::All:
            case Op::Ex:
                if (bv.count(f.var()))
                    throw StageError("setup", "bound variable " + tok_name(f.var()) +
                                                  " of H also occurs in the basis; rename it");
                walk(f.a());
                return;
            default: walk(f.a()); walk(f.b());
            }
        };
        walk(H);
    }

    // freeze the parameters of H
    std::vector<std::pair<Tok, Tok>> frozen;  // (variable, constant)
    Formula Ht = H;
    MathSystem MA = in_stage("freeze", [&] {
        SymbolSet cs;
        int k = 1;
        for (Tok v : free_list(H)) {
            if (v == x) continue;
            Tok cst;
            do cst = intern_symbol("c" + std::to_string(k++));
            while (m.alphabet.count(cst));
            cs.insert(cst);
            frozen.emplace_back(v, cst);
            Ht = sbf(Ht, {cst}, v);
        }
        return cs.empty() ? m : extend_alphabet(m, cs);
    });
    const Formula phi = induction_principle(Ht, x, n0).a();
    MathSystem MP = in_stage("freeze", [&] { return adjoin(MA, "phi", phi); });
    const Formula phi2 = *MP.adjoined_named("phi");  // bound variable possibly renamed
    st.done("freeze");

    const Tok z = phi2.var();
    const Formula Nx = n0_of(n0, {x});
    const Formula H0 = sbf(Ht, {zero}, x);
    const Formula Hs = sbf(Ht, succ({x}), x);
    VarSet avoid = vars_of(Ht);
    VarSet bv = m.rbasis_vars();
    avoid.insert(bv.begin(), bv.end());
    avoid.insert(z);
    const Tok u = fresh_var("?u", avoid);
    const Formula Gt = conj(n0_of(n0, {u}), sbf(Ht, {u}, x));

    Proof P = in_stage("induction", [&] {
        Builder b;
        Just ja = mk(Just::Adjoined);
        ja.name = "phi";
        std::size_t s1 = b.push(phi2, ja);
        std::size_t s2 = b.quant('a', imp(phi2, phi2.a()));
        std::size_t psi = b.mp(s1, s2);
        if (z != x) psi = b.subst(psi, z, {x});
        const Formula PSI = b.at(psi);
        std::size_t t1 = b.taut(imp(PSI, imp(Nx, H0)));
        std::size_t nh = b.mp(psi, t1);
        std::size_t nh0 = b.subst(nh, x, {zero});
        std::size_t n00 = b.basis(ax0, MA);
        std::size_t h0 = b.mp(n00, nh0);
        Formula N00 = b.at(n00);
        std::size_t t2 = b.taut(imp(N00, imp(H0, conj(N00, H0))));
        std::size_t t3 = b.mp(n00, t2);
        std::size_t ob1 = b.mp(h0, t3);
        std::size_t sa = b.basis(ax1, MA);
        const Formula Nsx = n0_of(n0, succ({x}));
        std::size_t t4 = b.taut(imp(PSI, imp(imp(Nx, Nsx), imp(conj(Nx, Ht), conj(Nsx, Hs)))));
        std::size_t t5 = b.mp(psi, t4);
        std::size_t ob2 = b.mp(sa, t5);
        Just ji = mk(Just::Induct);
        ji.pred = n0;
        ji.arity = 1;
        ji.xs = {u};
        ji.G = Gt;
        ji.oblig = {{ax0, ob1}, {ax1, ob2}};
        std::size_t r = b.push(induct_conclusion(n0, ji.xs, Gt), ji);
        std::size_t rx = b.subst(r, u, {x});
        std::size_t t6 = b.taut(imp(b.at(rx), imp(Nx, Ht)));
        std::size_t nx = b.mp(rx, t6);
        b.gen(x, nx);
        return b.out;
    });
    must_check("induction", MP, P);
    st.done("induction", &P);

    Proof D = in_stage("deduction", [&] { return deduction(MP, "phi", P); });
    must_check("deduction", MA, D);
    st.done("deduction", &D);

    // -> phi phi2 when adjoining renamed the bound variable, then chain
    Proof R = in_stage("rebind", [&] {
        Builder b;
        std::size_t dl = b.append(D);
        if (phi2 == phi) return b.out;
        const Formula T = b.at(dl).b();
        std::size_t q = b.quant('a', imp(phi, phi.a()));
        std::size_t qs = b.subst(q, x, {z});
        std::size_t g = b.gen(z, qs);
        std::size_t qb = b.quant('b', imp(b.at(g), imp(phi, phi2)));
        std::size_t pp = b.mp(g, qb);
        std::size_t t = b.taut(imp(imp(phi, phi2), imp(imp(phi2, T), imp(phi, T))));
        std::size_t c1 = b.mp(pp, t);
        b.mp(dl, c1);
        return b.out;
    });
    must_check("rebind", MA, R);
    st.done("rebind", &R);

    Proof out = R;
    if (!frozen.empty()) {
        out = in_stage("genconst", [&] {
            VarSet av = vars_in(R);
            av.insert(bv.begin(), bv.end());
            for (auto& [v, c] : frozen) av.insert(v);
            std::map<Tok, Tok> to_var;
            std::vector<std::pair<Tok, Tok>> back;  // (fresh, original)
            for (auto& [v, c] : frozen) {
                Tok w = fresh_var(tok_name(v), av);
                av.insert(w);
                to_var[c] = w;
                back.emplace_back(w, v);
            }
            Builder b;
            std::size_t last = b.append(generalize_constants(m, to_var, R));
            for (auto& [w, v] : back) last = b.subst(last, w, {v});
            return b.out;
        });
        must_check("genconst", m, out);
        st.done("genconst", &out);
    }
    must_conclude(frozen.empty() ? "rebind" : "genconst", out, induction_principle(H, x, n0));
    res.proof = out;
    return res;
}

}  // namespace indukt
