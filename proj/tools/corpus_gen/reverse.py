from dsl import *
R = Sys("xystuv")
L, E = R.L, R.E
def W(a): return R.P("W", a)

def G(l):
    return conj(conj(W(l), W(f"f({l})")), E(f"f(f({l}))", l))

MSYS = f""";; word reversal: W marks words over a, b; f reverses them
(alphabet a b f)
(predicates (W 1))
(vars ?x ?y ?s ?t ?u ?v)
(rbasis
  (horn () {W('a')})
  (horn () {W('b')})
  (horn ({W('x')} {W('y')}) {W('xy')})
  (horn () {E('f(a)', 'a')})
  (horn () {E('f(b)', 'b')})
  (horn ({W('x')} {W('y')}) {E('f(xy)', 'f(y)f(x)')}))
(lang (alt VAR) (alt a) (alt b) (alt S S) (alt f ( S )))
"""

def first_part():
    p = Proof()
    p.basis(1, W('a')); p.basis(2, W('b'))
    p.basis(3, imps(W('x'), W('y'), W('xy')))
    p.basis(4, E('f(a)', 'a')); p.basis(5, E('f(b)', 'b'))
    p.basis(6, imps(W('x'), W('y'), E('f(xy)', 'f(y)f(x)')))
    p.eq(E('x', 'x'))                                                   # 7
    p.subst(7, 'x', L('f(s)'), E('f(s)', 'f(s)'))                       # 8
    p.eq(imps(E('f(s)', 'f(s)'), E('s', 't'), E('f(s)', 'f(t)')))       # 9
    p.mp(8, 9)                                                          # 10
    p.subst(10, 's', L('f(a)'), imp(E('f(a)', 't'), E('f(f(a))', 'f(t)')))   # 11
    p.subst(11, 't', L('a'), imp(E('f(a)', 'a'), E('f(f(a))', 'f(a)')))      # 12
    p.mp(4, 12)                                                         # 13
    p.eq(imps(E('s', 't'), E('t', 'u'), E('s', 'u')))                   # 14
    p.subst(14, 's', L('f(f(a))'), imps(E('f(f(a))', 't'), E('t', 'u'), E('f(f(a))', 'u')))          # 15
    p.subst(15, 't', L('f(a)'), imps(E('f(f(a))', 'f(a)'), E('f(a)', 'u'), E('f(f(a))', 'u')))       # 16
    p.subst(16, 'u', L('a'), imps(E('f(f(a))', 'f(a)'), E('f(a)', 'a'), E('f(f(a))', 'a')))          # 17
    p.mp(13, 17)                                                        # 18
    p.mp(4, 18)                                                         # 19
    p.subst(10, 's', L('f(b)'), imp(E('f(b)', 't'), E('f(f(b))', 'f(t)')))   # 20
    p.subst(20, 't', L('b'), imp(E('f(b)', 'b'), E('f(f(b))', 'f(b)')))      # 21
    p.mp(5, 21)                                                         # 22
    p.subst(14, 's', L('f(f(b))'), imps(E('f(f(b))', 't'), E('t', 'u'), E('f(f(b))', 'u')))          # 23
    p.subst(23, 't', L('f(b)'), imps(E('f(f(b))', 'f(b)'), E('f(b)', 'u'), E('f(f(b))', 'u')))       # 24
    p.subst(24, 'u', L('b'), imps(E('f(f(b))', 'f(b)'), E('f(b)', 'b'), E('f(f(b))', 'b')))          # 25
    p.mp(22, 25)                                                        # 26
    p.mp(5, 26)                                                         # 27
    p.eq(imps(E('s', 's'), E('s', 't'), E('t', 's')))                   # 28
    p.eq(E('s', 's'))                                                   # 29
    p.mp(29, 28)                                                        # 30, cited minor first
    p.subst(30, 's', L('f(a)'), imp(E('f(a)', 't'), E('t', 'f(a)')))  # 31
    p.subst(31, 't', L('a'), imp(E('f(a)', 'a'), E('a', 'f(a)')))      # 32
    p.mp(4, 32)                                                         # 33
    p.subst(30, 's', L('f(b)'), imp(E('f(b)', 't'), E('t', 'f(b)')))  # 34
    p.subst(34, 't', L('b'), imp(E('f(b)', 'b'), E('b', 'f(b)')))      # 35
    p.mp(5, 35)                                                         # 36
    p.eq(imps(E('s', 't'), W('s'), W('t')))                             # 37
    p.subst(37, 's', L('a'), imps(E('a', 't'), W('a'), W('t')))         # 38
    p.subst(38, 't', L('f(a)'), imps(E('a', 'f(a)'), W('a'), W('f(a)')))  # 39
    p.mp(33, 39)                                                        # 40
    p.mp(1, 40)                                                         # 41
    p.subst(37, 's', L('b'), imps(E('b', 't'), W('b'), W('t')))         # 42
    p.subst(42, 't', L('f(b)'), imps(E('b', 'f(b)'), W('b'), W('f(b)')))  # 43
    p.mp(36, 43)                                                        # 44
    p.mp(2, 44)                                                         # 45
    p.taut(imps(W('a'), W('f(a)'), E('f(f(a))', 'a'), G('a')))         # 46
    p.mp(1, 46); p.mp(41, 47); p.mp(19, 48)                             # 47-49
    p.taut(imps(W('b'), W('f(b)'), E('f(f(b))', 'b'), G('b')))         # 50
    p.mp(2, 50); p.mp(45, 51); p.mp(27, 52)                             # 51-53
    assert p.next == 54
    return p

def second_part():
    p = Proof(54)
    p.adj('phi1', G('c')); p.adj('phi2', G('d'))                        # 54, 55
    p.taut(imp(G('c'), W('c')))                                         # 56
    p.taut(imp(G('c'), W('f(c)')))                                      # 57
    p.taut(imp(G('c'), E('f(f(c))', 'c')))                              # 58
    p.taut(imp(G('d'), W('d')))                                         # 59
    p.taut(imp(G('d'), W('f(d)')))                                      # 60
    p.taut(imp(G('d'), E('f(f(d))', 'd')))                              # 61
    p.mp(54, 56); p.mp(55, 59); p.mp(54, 57); p.mp(55, 60); p.mp(54, 58); p.mp(55, 61)  # 62-67
    p.subst(3, 'x', L('c'), imps(W('c'), W('y'), W('cy')))             # 68
    p.subst(68, 'y', L('d'), imps(W('c'), W('d'), W('cd')))            # 69
    p.mp(62, 69); p.mp(63, 70)                                          # 70, 71
    p.subst(3, 'x', L('f(d)'), imps(W('f(d)'), W('y'), W('f(d)y')))    # 72
    p.subst(72, 'y', L('f(c)'), imps(W('f(d)'), W('f(c)'), W('f(d)f(c)')))  # 73
    p.mp(65, 73); p.mp(64, 74)                                          # 74, 75
    p.subst(6, 'x', L('c'), imps(W('c'), W('y'), E('f(cy)', 'f(y)f(c)')))   # 76
    p.subst(76, 'y', L('d'), imps(W('c'), W('d'), E('f(cd)', 'f(d)f(c)')))  # 77
    p.mp(62, 77); p.mp(63, 78)                                          # 78, 79
    p.subst(30, 's', L('f(cd)'), imp(E('f(cd)', 't'), E('t', 'f(cd)')))     # 80
    p.subst(80, 't', L('f(d)f(c)'), imp(E('f(cd)', 'f(d)f(c)'), E('f(d)f(c)', 'f(cd)')))  # 81
    p.mp(79, 81)                                                        # 82
    p.subst(37, 's', L('f(d)f(c)'), imps(E('f(d)f(c)', 't'), W('f(d)f(c)'), W('t')))          # 83
    p.subst(83, 't', L('f(cd)'), imps(E('f(d)f(c)', 'f(cd)'), W('f(d)f(c)'), W('f(cd)')))     # 84
    p.mp(82, 84); p.mp(75, 85)                                          # 85, 86
    p.eq(imps(E('st', 'st'), E('t', 'v'), E('st', 'sv')))               # 87
    p.subst(7, 'x', L('st'), E('st', 'st'))                             # 88
    p.mp(88, 87)                                                        # 89, cited minor first
    p.eq(imps(E('st', 'sv'), E('s', 'u'), E('st', 'uv')))               # 90
    x1, x2, x3, x4 = E('t', 'v'), E('st', 'sv'), E('s', 'u'), E('st', 'uv')
    p.taut(imps(imp(x1, x2), imps(x2, x3, x4), imps(x3, x1, x4)))       # 91
    p.mp(89, 91); p.mp(90, 92)                                          # 92, 93
    p.subst(6, 'x', L('f(d)'), imps(W('f(d)'), W('y'), E('f(f(d)y)', 'f(y)f(f(d))')))           # 94
    p.subst(94, 'y', L('f(c)'), imps(W('f(d)'), W('f(c)'), E('f(f(d)f(c))', 'f(f(c))f(f(d))')))  # 95
    p.mp(65, 95); p.mp(64, 96)                                          # 96, 97
    p.subst(93, 's', L('f(f(c))'), imps(E('f(f(c))', 'u'), E('t', 'v'), E('f(f(c))t', 'uv')))   # 98
    p.subst(98, 'u', L('c'), imps(E('f(f(c))', 'c'), E('t', 'v'), E('f(f(c))t', 'cv')))         # 99
    p.subst(99, 't', L('f(f(d))'), imps(E('f(f(c))', 'c'), E('f(f(d))', 'v'), E('f(f(c))f(f(d))', 'cv')))  # 100
    p.subst(100, 'v', L('d'), imps(E('f(f(c))', 'c'), E('f(f(d))', 'd'), E('f(f(c))f(f(d))', 'cd')))      # 101
    p.mp(66, 101); p.mp(67, 102)                                        # 102, 103
    p.subst(14, 's', L('f(f(d)f(c))'), imps(E('f(f(d)f(c))', 't'), E('t', 'u'), E('f(f(d)f(c))', 'u')))   # 104
    p.subst(104, 't', L('f(f(c))f(f(d))'),
            imps(E('f(f(d)f(c))', 'f(f(c))f(f(d))'), E('f(f(c))f(f(d))', 'u'), E('f(f(d)f(c))', 'u')))       # 105
    p.subst(105, 'u', L('cd'),
            imps(E('f(f(d)f(c))', 'f(f(c))f(f(d))'), E('f(f(c))f(f(d))', 'cd'), E('f(f(d)f(c))', 'cd')))     # 106
    p.mp(97, 106); p.mp(103, 107)                                       # 107, 108
    p.subst(10, 's', L('f(cd)'), imp(E('f(cd)', 't'), E('f(f(cd))', 'f(t)')))                  # 109
    p.subst(109, 't', L('f(d)f(c)'), imp(E('f(cd)', 'f(d)f(c)'), E('f(f(cd))', 'f(f(d)f(c))')))  # 110
    p.mp(79, 110)                                                       # 111
    p.subst(14, 's', L('f(f(cd))'), imps(E('f(f(cd))', 't'), E('t', 'u'), E('f(f(cd))', 'u')))  # 112
    p.subst(112, 't', L('f(f(d)f(c))'),
            imps(E('f(f(cd))', 'f(f(d)f(c))'), E('f(f(d)f(c))', 'u'), E('f(f(cd))', 'u')))      # 113
    p.subst(113, 'u', L('cd'),
            imps(E('f(f(cd))', 'f(f(d)f(c))'), E('f(f(d)f(c))', 'cd'), E('f(f(cd))', 'cd')))    # 114
    p.mp(111, 114); p.mp(108, 115)                                      # 115, 116
    p.taut(imps(W('cd'), W('f(cd)'), E('f(f(cd))', 'cd'), G('cd')))    # 117
    p.mp(71, 117); p.mp(86, 118); p.mp(116, 119)                        # 118-120
    assert p.next == 121
    return p

def ex1(F, x, sysname):
    p = Proof()
    nF = neg(F)
    A = all_(x, nF)
    p.quant('a', imp(A, nF))
    p.taut(imp(imp(A, nF), imp(F, neg(A))))
    p.mp(1, 2)
    p.quant('c', iff(neg(A), ex(x, F)))
    p.taut(imps(imp(F, neg(A)), iff(neg(A), ex(x, F)), imp(F, ex(x, F))))
    p.mp(3, 5)
    p.mp(4, 6)
    return p

def ex2(F, Gf, x):
    p = Proof()
    AF, AFG, AG = all_(x, F), all_(x, imp(F, Gf)), all_(x, Gf)
    p.quant('a', imp(AF, F))                                              # 1
    p.quant('a', imp(AFG, imp(F, Gf)))                                    # 2
    p.taut(imps(imp(AF, F), imp(AFG, imp(F, Gf)), imp(AFG, imp(AF, Gf))))  # 3
    p.mp(1, 3)                                                            # 4
    p.mp(2, 4)                                                            # 5
    p.gen(x, 5)                                                           # 6
    s7 = imp(all_(x, imp(AFG, imp(AF, Gf))), imp(AFG, all_(x, imp(AF, Gf))))
    p.quant('b', s7)                                                      # 7
    p.mp(6, 7)                                                            # 8
    s9 = imp(all_(x, imp(AF, Gf)), imp(AF, AG))
    p.quant('b', s9)                                                      # 9
    x1, x2 = AFG, all_(x, imp(AF, Gf))
    p.taut(imps(imp(x1, x2), imp(x2, imp(AF, AG)), imp(x1, imp(AF, AG))))  # 10
    p.mp(8, 10)                                                           # 11
    p.mp(9, 11)                                                           # 12
    return p

def ex3():
    p = Proof()
    F = E('x', 'a')
    p.quant('b', imp(all_('x', imp(F, F)), imp(F, all_('x', F))))         # 1 (invalid)
    p.taut(imp(F, F))                                                     # 2
    p.gen('x', 2)                                                         # 3
    p.mp(3, 1)                                                            # 4
    p.subst(4, 'x', L('a'), imp(E('a', 'a'), all_('x', F)))               # 5
    p.eq(E('x', 'x'))                                                     # 6
    p.subst(6, 'x', L('a'), E('a', 'a'))                                  # 7
    p.mp(7, 5)                                                            # 8
    return p
