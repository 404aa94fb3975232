# tiny s-expression DSL for the corpus files
VARS = set("xyzstuvw")

def toks(text, vars=VARS, symbols_multi=()):
    out = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch == ' ':
            i += 1; continue
        if ch in '()':
            out.append(ch); i += 1; continue
        if ch == '?':  # explicit variable ?name terminated by space
            j = i + 1
            while j < len(text) and (text[j].isalnum() or text[j] == '_'):
                j += 1
            out.append(text[i:j]); i = j; continue
        if ch in vars:
            out.append('?' + ch)
        else:
            out.append(ch)
        i += 1
    return out

class Sys:
    def __init__(self, vars):
        self.vars = set(vars)
    def L(self, text):
        return "(l " + " ".join(toks(text, self.vars)) + ")"
    def E(self, a, b):
        return f"(eq {self.L(a)} {self.L(b)})"
    def P(self, name, *args):
        return f"(pred {name} " + " ".join(self.L(a) for a in args) + ")"

def imp(a, b): return f"(imp {a} {b})"
def iff(a, b): return f"(iff {a} {b})"
def conj(a, b): return f"(and {a} {b})"
def disj(a, b): return f"(or {a} {b})"
def neg(a): return f"(not {a})"
def all_(v, a): return f"(all ?{v} {a})"
def ex(v, a): return f"(ex ?{v} {a})"
def imps(*xs):
    r = xs[-1]
    for x in reversed(xs[:-1]):
        r = imp(x, r)
    return r

class Proof:
    def __init__(self, first=1):
        self.steps = []
        self.next = first
        self.f = {}
    def add(self, f, just, label=None):
        lab = self.next if label is None else label
        assert lab >= self.next, (lab, self.next)
        self.steps.append((lab, f, just))
        self.f[lab] = f
        self.next = lab + 1
        return lab
    # justification helpers
    def taut(self, f): return self.add(f, "(ax-taut)")
    def eq(self, f): return self.add(f, "(ax-eq)")
    def quant(self, q, f): return self.add(f, f"(ax-quant {q})")
    def basis(self, k, f): return self.add(f, f"(ax-basis {k})")
    def adj(self, name, f): return self.add(f, f"(ax-adjoined {name})")
    def mp(self, a, b, f=None, label=None):
        if f is None:
            fb = self.f[b]
            f = major_rhs(fb)
        return self.add(f, f"(mp {a} {b})", label)
    def subst(self, r, x, lam, f, label=None):
        return self.add(f, f"(subst {r} ?{x} {lam})", label)
    def gen(self, x, r, f=None):
        if f is None:
            f = f"(all ?{x} {self.f[r]})"
        return self.add(f, f"(gen ?{x} {r})")
    def induct(self, f, pred, ar, xs, G, oblig):
        ob = " ".join(f"({a} {s})" for a, s in oblig)
        xv = " ".join("?" + x for x in xs)
        return self.add(f, f"(induct {pred} {ar} ({xv}) {G} (oblig{' ' + ob if ob else ''}))")
    def text(self, header=""):
        out = header + "(proof"
        for lab, f, j in self.steps:
            out += f"\n  (step {lab} {f} {j})"
        return out + ")\n"

def split_top(s):
    # s = "(head a b ...)" -> [head, a, b, ...] at depth 1
    assert s[0] == '(' and s[-1] == ')'
    items, depth, cur = [], 0, ''
    for ch in s[1:-1]:
        if ch == '(':
            depth += 1
        elif ch == ')':
            depth -= 1
        if ch == ' ' and depth == 0:
            if cur: items.append(cur)
            cur = ''
        else:
            cur += ch
    if cur: items.append(cur)
    return items

def major_rhs(f):
    it = split_top(f)
    assert it[0] == 'imp', f
    return it[2]

def major_lhs(f):
    it = split_top(f)
    assert it[0] == 'imp', f
    return it[1]
