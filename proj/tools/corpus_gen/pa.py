from dsl import *
N = Sys("xyuvz")
L, E = N.L, N.E
def N0(a): return N.P("N0", a)

LANG = "(lang (alt VAR) (alt 0) (alt s ( S )) (alt + ( S S )) (alt * ( S S )))"

PA_MSYS = f""";; Peano arithmetic over numeral terms; no predicates, induction through the scheme hook
(alphabet 0 s + *)
(vars ?x ?y)
{LANG}
(basis
  {all_('x', E('+(0x)', 'x'))}
  {all_('x', all_('y', E('+(s(x)y)', 's(+(xy))')))}
  {all_('x', E('*(0x)', '0'))}
  {all_('x', all_('y', E('*(s(x)y)', '+(*(xy)y)')))}
  {all_('x', all_('y', imp(E('s(x)', 's(y)'), E('x', 'y'))))}
  {all_('x', neg(E('s(x)', '0')))})
(hooks pa-is)
"""

def horn(prem, concl):
    return f"(horn ({' '.join(prem)}) {concl})"

SPA_MSYS = f""";; the recursive system behind PA: N0 marks numerals, equations as R-axioms
(alphabet 0 s + *)
(predicates (N0 1))
(vars ?x ?y)
(rbasis
  {horn([], N0('0'))}
  {horn([N0('x')], N0('s(x)'))}
  {horn([N0('x')], E('+(0x)', 'x'))}
  {horn([N0('x'), N0('y')], E('+(s(x)y)', 's(+(xy))'))}
  {horn([N0('x')], E('*(0x)', '0'))}
  {horn([N0('x'), N0('y')], E('*(s(x)y)', '+(*(xy)y)'))}
  {horn([N0('x'), N0('y'), E('s(x)', 's(y)')], E('x', 'y'))})
{LANG}
"""

def two_rproof():
    steps = [
        (horn([N0('x'), N0('y')], E('+(s(x)y)', 's(+(xy))')), "(axiom 4)"),
        (horn([N0('0'), N0('y')], E('+(s(0)y)', 's(+(0y))')), f"(subst 1 ?x {L('0')})"),
        (horn([N0('0'), N0('s(0)')], E('+(s(0)s(0))', 's(+(0s(0)))')), f"(subst 2 ?y {L('s(0)')})"),
        (horn([], N0('0')), "(axiom 1)"),
        (horn([N0('s(0)')], E('+(s(0)s(0))', 's(+(0s(0)))')), "(mp 4 3)"),
        (horn([N0('x')], N0('s(x)')), "(axiom 2)"),
        (horn([N0('0')], N0('s(0)')), f"(subst 6 ?x {L('0')})"),
        (horn([], N0('s(0)')), "(mp 4 7)"),
        (horn([], E('+(s(0)s(0))', 's(+(0s(0)))')), "(mp 8 5)"),
        (horn([N0('x')], E('+(0x)', 'x')), "(axiom 3)"),
        (horn([N0('s(0)')], E('+(0s(0))', 's(0)')), f"(subst 10 ?x {L('s(0)')})"),
        (horn([], E('+(0s(0))', 's(0)')), "(mp 8 11)"),
        (horn([E('+(s(0)s(0))', 's(+(0s(0)))'), E('+(0s(0))', 's(0)')], E('+(s(0)s(0))', 's(s(0))')), "(axiom-eq)"),
        (horn([E('+(0s(0))', 's(0)')], E('+(s(0)s(0))', 's(s(0))')), "(mp 9 13)"),
        (horn([], E('+(s(0)s(0))', 's(s(0))')), "(mp 12 14)"),
    ]
    out = "(rproof"
    for i, (f, j) in enumerate(steps, 1):
        out += f"\n  (step {i} {f} {j})"
    return out + ")\n"

H = E('+(x0)', 'x')
def is_instance(F0, F, Fs):
    return imp(all_('x', conj(F0, imp(F, Fs))), all_('x', F))

def pa_is_proof(good=True):
    p = Proof()
    Fs = E('+(s(x)0)', 's(x)') if good else E('+(s(x)0)', 'x')
    p.add(is_instance(E('+(00)', '0'), H, Fs), "(ax-schema pa-is)")
    return p
