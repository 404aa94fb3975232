from dsl import *
Dsys = Sys("xyuv")
L, E = Dsys.L, Dsys.E
def D(*a): return Dsys.P("D", *a)

MSYS = f""";; dual representation of natural numbers: D x (binary numeral), D x,y (x is y in binary)
(alphabet a 0 1)
(predicates (D 1) (D 2))
(vars ?x ?y ?u ?v)
(rbasis
  (horn () {D('1')})
  (horn ({D('x')}) {D('x0')})
  (horn ({D('x')}) {D('x1')})
  (horn () {D('1', 'a')})
  (horn ({D('x', 'y')}) {D('x0', 'yy')})
  (horn ({D('x', 'y')}) {D('x1', 'yya')}))
(lang (alt VAR) (alt 0) (alt 1) (alt a) (alt S S))
"""

def horn(prem, concl):
    return f"(horn ({' '.join(prem)}) {concl})"

def rproof():
    steps = [
        (1, horn([], D('1', 'a')), "(axiom 4)"),
        (2, horn([D('x', 'y')], D('x0', 'yy')), "(axiom 5)"),
        (3, horn([D('x', 'y')], D('x1', 'yya')), "(axiom 6)"),
        (4, horn([D('1', 'y')], D('10', 'yy')), f"(subst 2 ?x {L('1')})"),
        (5, horn([D('1', 'a')], D('10', 'aa')), f"(subst 4 ?y {L('a')})"),
        (6, horn([], D('10', 'aa')), "(mp 1 5)"),
        (7, horn([D('10', 'y')], D('101', 'yya')), f"(subst 3 ?x {L('10')})"),
        (8, horn([D('10', 'aa')], D('101', 'aaaaa')), f"(subst 7 ?y {L('aa')})"),
        (9, horn([], D('101', 'aaaaa')), "(mp 6 8)"),
    ]
    out = "(rproof"
    for lab, f, j in steps:
        out += f"\n  (step {lab} {f} {j})"
    return out + ")\n"

def basis(p):
    p.basis(1, D('1'))
    p.basis(2, imp(D('x'), D('x0')))
    p.basis(3, imp(D('x'), D('x1')))
    p.basis(4, D('1', 'a'))
    p.basis(5, imp(D('x', 'y'), D('x0', 'yy')))
    p.basis(6, imp(D('x', 'y'), D('x1', 'yya')))

def ex1_inline(p, F, x):
    nF = neg(F)
    A = all_(x, nF)
    s1 = p.quant('a', imp(A, nF))
    s2 = p.taut(imp(imp(A, nF), imp(F, neg(A))))
    s3 = p.mp(s1, s2)
    s4 = p.quant('c', iff(neg(A), ex(x, F)))
    s5 = p.taut(imps(imp(F, neg(A)), iff(neg(A), ex(x, F)), imp(F, ex(x, F))))
    s6 = p.mp(s3, s5)
    return p.mp(s4, s6)

def chain(p, s_ab, s_bc):
    # -> A B, -> B C  gives  -> A C
    A, B = major_lhs(p.f[s_ab]), major_rhs(p.f[s_ab])
    C = major_rhs(p.f[s_bc])
    t = p.taut(imps(imp(A, B), imp(B, C), imp(A, C)))
    return p.mp(s_bc, p.mp(s_ab, t))

def contra_gen(p, s, y):
    # from -> P Q(y) with y not free in P... (used as: -> A(y) B) gives -> ~B ~A, generalizes y,
    # then pulls the quantifier:  -> ~B Ay ~A
    A, B = major_lhs(p.f[s]), major_rhs(p.f[s])
    c = p.mp(s, p.taut(imp(imp(A, B), imp(neg(B), neg(A)))))
    g = p.gen(y, c)
    q = p.quant('b', imp(p.f[g], imp(neg(B), all_(y, neg(A)))))
    return p.mp(g, q)

def ex_intro(p, s, y):
    # from -> A(y) B (y not free in B) derive -> Ey A(y) B
    A, B = major_lhs(p.f[s]), major_rhs(p.f[s])
    r = contra_gen(p, s, y)                       # -> ~B  Ay ~A
    AyA = all_(y, neg(A))
    k = p.mp(r, p.taut(imp(imp(neg(B), AyA), imp(neg(AyA), B))))   # -> ~Ay~A  B
    qc = p.quant('c', iff(neg(AyA), ex(y, A)))
    t = p.taut(imps(iff(neg(AyA), ex(y, A)), imp(neg(AyA), B), imp(ex(y, A), B)))
    return p.mp(k, p.mp(qc, t))

def rename(p, lam, frm, to):
    # -> E frm D lam,frm   E to D lam,to   (lam over x only)
    s = ex1_inline(p, D('x', to), to)             # -> D x,to  E to D x,to
    s = p.subst(s, to, L(frm), imp(D('x', frm), ex(to, D('x', to))))
    s = ex_intro(p, s, frm)                       # -> E frm D x,frm  E to D x,to
    if lam != 'x':
        s = p.subst(s, 'x', L(lam), imp(ex(frm, D(lam, frm)), ex(to, D(lam, to))))
    return s

def part_a(p):
    # first Rule (e): p = D, i = 2, G = D u
    r = p.induct(imp(D('u', 'v'), D('u')), 'D', 2, ['u', 'v'], D('u'), [(4, 1), (5, 2), (6, 3)])
    s = p.subst(r, 'u', L('x'), imp(D('x', 'v'), D('x')))
    s = p.subst(s, 'v', L('y'), imp(D('x', 'y'), D('x')))
    return ex_intro(p, s, 'y')                    # -> Ey D x,y  D x

def part_b(p):
    e13 = ex1_inline(p, D('x', 'y'), 'y')         # 13: -> D x,y  Ey D x,y
    s = p.subst(e13, 'x', L('1'), imp(D('1', 'y'), ex('y', D('1', 'y'))))
    s = p.subst(s, 'y', L('a'), imp(D('1', 'a'), ex('y', D('1', 'y'))))
    e15 = p.mp(4, s)                              # 15: Ey D 1,y
    res = {}
    for digit, ax, tail in (('0', 5, 'yy'), ('1', 6, 'yya')):
        xd = 'x' + digit
        s = p.subst(e13, 'x', L(xd), imp(D(xd, 'y'), ex('y', D(xd, 'y'))))          # 16 / 24
        s = p.subst(s, 'y', L(tail), imp(D(xd, tail), ex('y', D(xd, 'y'))))        # 17 / 25
        s = chain(p, ax, s)                                                          # 18 / 26
        res[digit] = ex_intro(p, s, 'y')                                             # 23 / 31
    # renaming the bound variable y to v
    r1 = rename(p, '1', 'y', 'v')
    e32 = p.mp(e15, r1)                                                              # 32
    back = rename(p, 'x', 'v', 'y')
    out = {}
    for digit in ('0', '1'):
        fwd = rename(p, 'x' + digit, 'y', 'v')
        out[digit] = chain(p, chain(p, back, res[digit]), fwd)                       # 33 / 34
    G = ex('v', D('u', 'v'))
    r = p.induct(imp(D('u'), G), 'D', 1, ['u'], G, [(1, e32), (2, out['0']), (3, out['1'])])
    s = p.subst(r, 'u', L('x'), imp(D('x'), ex('v', D('x', 'v'))))
    return chain(p, s, back)                       # -> D x  Ey D x,y

def proof_a():
    p = Proof(); basis(p); part_a(p); return p

def proof_b():
    p = Proof(); basis(p); part_b(p); return p

def proof_equiv():
    p = Proof(); basis(p)
    a = part_a(p)
    b = part_b(p)
    A, B = D('x'), ex('y', D('x', 'y'))
    t = p.taut(imps(imp(A, B), imp(B, A), iff(A, B)))
    s = p.mp(a, p.mp(b, t))
    p.gen('x', s)
    return p

# synthetic proof for C-elimination: Q is declared but absent from the basis
CELIM_MSYS = MSYS.replace("(predicates (D 1) (D 2))", "(predicates (D 1) (D 2) (Q 1))").replace(
    ";; dual representation", ";; dual system plus a predicate Q that no basis axiom mentions;\n;; dual representation")

def celim_proof():
    p = Proof(); basis(p)
    Q = lambda a: Dsys.P("Q", a)
    r = p.induct(imp(Q('u'), D('u')), 'Q', 1, ['u'], D('u'), [])          # 7, no obligations
    o1 = p.subst(r, 'u', L('1'), imp(Q('1'), D('1')))
    obl = {}
    for digit in '01':
        xd = 'x' + digit
        s = p.subst(r, 'u', L(xd), imp(Q(xd), D(xd)))
        t = p.taut(imp(p.f[s], imp(imp(Q('x'), D('x')), imp(Q(xd), D(xd)))))
        obl[digit] = p.mp(s, t)
    G = imp(Q('u'), D('u'))
    r2 = p.induct(imp(D('u'), G), 'D', 1, ['u'], G, [(1, o1), (2, obl['0']), (3, obl['1'])])
    e = p.eq(imps(E('x', 'y'), Q('x'), Q('y')))
    s = p.subst(e, 'y', L('x0'), imps(E('x', 'x0'), Q('x'), Q('x0')))
    s2 = p.subst(r2, 'u', L('1'), imps(D('1'), Q('1'), D('1')))
    p.mp(1, s2)
    return p
