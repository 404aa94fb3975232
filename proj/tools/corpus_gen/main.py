# usage: python3 tools/corpus_gen/main.py corpus
# Writes the hand-built corpus. reverse-final, spa-induction and spa-induction-zero
# come from `indukt pipeline-reverse --out` and `indukt pipeline-induction`.
import os, sys
sys.path.insert(0, os.path.dirname(__file__))
from dsl import *
import reverse, dual, pa

OUT = sys.argv[1]
def w(name, text):
    with open(os.path.join(OUT, name), 'w') as f:
        f.write(text)

R = reverse.R
w('reverse.msys', reverse.MSYS)
w('reverse-1-53.mproof', reverse.first_part().text(";; word reversal, steps 1-53 in [M;L]\n"))
w('reverse-54-120.mproof', reverse.second_part().text(
    ";; steps 54-120; cites 1-53, needs constants c d and the adjoined G(c), G(d)\n"))
FW = R.P('W', 'x')
w('ex1.mproof', reverse.ex1(FW, 'x', 'reverse').text(";; -> F  Ex F  with F = W x\n"))
w('ex2.mproof', reverse.ex2(FW, R.P('W', 'f(x)'), 'x').text(";; -> Ax -> F G  -> Ax F  Ax G\n"))
w('ex3-invalid.mproof', reverse.ex3().text(";; step 1 ignores the side condition x not free in the antecedent\n"))

w('dual.msys', dual.MSYS)
w('dual-101.rproof', ";; D 101,aaaaa: five is 101 in binary\n" + dual.rproof())
w('dual-induct-a.mproof', dual.proof_a().text(";; first Rule (e) application: -> Ey D x,y  D x\n"))
w('dual-induct-b.mproof', dual.proof_b().text(";; second Rule (e) application: -> D x  Ey D x,y\n"))
w('dual-equiv.mproof', dual.proof_equiv().text(";; both directions, closed: Ax <-> D x  Ey D x,y\n"))
w('celim.msys', dual.CELIM_MSYS)
w('celim.mproof', dual.celim_proof().text(";; Q 1-ary only through Rule (e) with no obligations\n"))

w('pa.msys', pa.PA_MSYS)
w('spa.msys', pa.SPA_MSYS)
w('spa-2plus.rproof', ";; 1 + 1 = 2 among the numerals\n" + pa.two_rproof())
w('pa-is.mproof', pa.pa_is_proof(True).text(";; scheme instance for F = ~ +(x 0),x\n"))
w('pa-is-mismatch.mproof', pa.pa_is_proof(False).text(";; successor case substitutes the wrong list\n"))

def entry(id, kind, system, files, expect="accept", extra=""):
    return f"  (entry {id} ({kind} {system} {' '.join(files)}) {extra}(expect {expect}))\n"

G = reverse.G
man = "(corpus\n"
man += entry("dual-101", "rcheck", "dual.msys", ["dual-101.rproof"], extra=f"(conclusion {dual.D('101','aaaaa')}) ")
man += entry("spa-2plus", "rcheck", "spa.msys", ["spa-2plus.rproof"], extra=f"(conclusion {pa.E('+(s(0)s(0))','s(s(0))')}) ")
man += entry("ex1", "check", "reverse.msys", ["ex1.mproof"], extra=f"(conclusion {imp(FW, ex('x', FW))}) ")
man += entry("ex2", "check", "reverse.msys", ["ex2.mproof"])
man += entry("ex3-invalid", "check", "reverse.msys", ["ex3-invalid.mproof"],
             expect='reject 1 "quantifier axiom (3.11)(b): x free in antecedent"')
man += entry("reverse-1-53", "check", "reverse.msys", ["reverse-1-53.mproof"], extra=f"(conclusion {G('b')}) ")
man += entry("reverse-54-120", "check", "reverse.msys", ["reverse-1-53.mproof", "reverse-54-120.mproof"],
             extra=f"(constants c d) (adjoin phi1 {G('c')}) (adjoin phi2 {G('d')}) (conclusion {G('cd')}) ")
man += entry("reverse-final", "check", "reverse.msys", ["reverse-final.mproof"],
             extra=f"(conclusion {imp(R.P('W','x'), R.E('f(f(x))','x'))}) ")
man += entry("dual-induct-a", "check", "dual.msys", ["dual-induct-a.mproof"],
             extra=f"(conclusion {imp(ex('y', dual.D('x','y')), dual.D('x'))}) ")
man += entry("dual-induct-b", "check", "dual.msys", ["dual-induct-b.mproof"],
             extra=f"(conclusion {imp(dual.D('x'), ex('y', dual.D('x','y')))}) ")
man += entry("dual-equiv", "check", "dual.msys", ["dual-equiv.mproof"],
             extra=f"(conclusion {all_('x', iff(dual.D('x'), ex('y', dual.D('x','y'))))}) ")
man += entry("celim", "check", "celim.msys", ["celim.mproof"])
man += entry("pa-is", "check", "pa.msys", ["pa-is.mproof"])
man += entry("pa-is-mismatch", "check", "pa.msys", ["pa-is-mismatch.mproof"],
             expect='reject 1 "not an instance of the induction scheme"')
H = pa.H
N0x = pa.N0('x')
# H(x) = -> N0 y ~ +(x y),+(y x), y a parameter; generated by `indukt pipeline-induction`
H = imp(pa.N0('y'), pa.E('+(xy)', '+(yx)'))
H0 = imp(pa.N0('y'), pa.E('+(0y)', '+(y0)'))
Hs = imp(pa.N0('y'), pa.E('+(s(x)y)', '+(ys(x))'))
ip = imp(all_('x', imp(N0x, conj(H0, imp(H, Hs)))), all_('x', imp(N0x, H)))
man += entry("spa-induction", "check", "spa.msys", ["spa-induction.mproof"], extra=f"(conclusion {ip}) ")
Hz = pa.H
ipz = imp(all_('x', imp(N0x, conj(pa.E('+(00)','0'), imp(Hz, pa.E('+(s(x)0)','s(x)'))))), all_('x', imp(N0x, Hz)))
man += entry("spa-induction-zero", "check", "spa.msys", ["spa-induction-zero.mproof"], extra=f"(conclusion {ipz}) ")
man += ")\n"
w('corpus.sexp', ";; golden corpus: one entry per proof, with the verdict each must get\n" + man)
print("written")
