"""Cluster seeds (x-, y- and xy-flavours), mutation words, the cluster
R-matrix mutation sequence and its closed forms."""
import re

import flint

from .core import Laurent, LaurentRing, RatFunc, TropicalPoint, laurent_exact_divide
from .quiver import cyc, format_label, frozen_label, parse_label


def cyclic_range(a, b, n):
    """Indices a, a+1, ..., b read cyclically mod n; (b - a + 1) mod n terms,
    so the range is empty when b is a - 1."""
    return [cyc(a + t, n) for t in range((b - a + 1) % n)]


# ---------------------------------------------------------------- words

_TOKEN = re.compile(r"\s*(mu|swap)\(([^()]*)\)\s*")


def parse_word(text):
    """``mu(1.2), swap(1.2,1.3), ...`` -> list of tokens."""
    out = []
    pos = 0
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise ValueError("bad mutation word near %r" % text[pos:pos + 20])
        args = _split_args(m.group(2))
        if m.group(1) == "mu":
            if len(args) != 1:
                raise ValueError("mu takes one vertex")
            out.append(("mu", parse_label(args[0])))
        else:
            if len(args) != 2:
                raise ValueError("swap takes two vertices")
            out.append(("swap", parse_label(args[0]), parse_label(args[1])))
        pos = m.end()
        if pos < len(text):
            if text[pos] != ",":
                raise ValueError("expected ',' at %d" % pos)
            pos += 1
    return out


def _split_args(s):
    # commas inside v[...] belong to the label
    out, depth, cur = [], 0, ""
    for ch in s:
        if ch == "[":
            depth += 1
        elif ch == "]":
            depth -= 1
        if ch == "," and depth == 0:
            out.append(cur)
            cur = ""
        else:
            cur += ch
    out.append(cur)
    return [a.strip() for a in out if a.strip()]


def format_word(tokens):
    parts = []
    for t in tokens:
        if t[0] == "mu":
            parts.append("mu(%s)" % format_label(t[1]))
        else:
            parts.append("swap(%s,%s)" % (format_label(t[1]), format_label(t[2])))
    return ", ".join(parts)


def inverse_word(tokens):
    return list(reversed(tokens))


def r_word(n, c, j, quiver=None):
    """Mutation word of the cluster R-matrix on cycle c, started at j.

    Application order: mutate at j, j+1, ..., j-1 (all n vertices), then at
    j-3, j-4, ..., j (n-2 vertices), then swap positions j-2 and j-1.  When
    ``quiver`` carries frozen vertices, the frozen swaps of the enriched
    version are appended for every pair present (they are disjoint, so
    their order is irrelevant).
    """
    v = lambda i: (c, cyc(i, n))
    word = [("mu", v(j + t)) for t in range(n)]
    word += [("mu", v(j - 3 - t)) for t in range(n - 2)]
    word.append(("swap", v(j - 2), v(j - 1)))
    if quiver is not None and quiver.frozen:
        present = set(quiver.labels)
        for i in range(1, n + 1):
            pairs = [
                (frozen_label((c + 1, i), (c, i)),
                 frozen_label((c, cyc(i + 1, n)), (c - 1, cyc(i + 1, n)))),
                (frozen_label((c, i), (c + 1, cyc(i - 1, n))),
                 frozen_label((c - 1, i), (c, cyc(i - 1, n)))),
            ]
            for a, b in pairs:
                if a in present and b in present:
                    word.append(("swap", a, b))
    return word


def apply_word(seed, tokens):
    for t in tokens:
        if t[0] == "mu":
            seed = seed.mutate(t[1])
        else:
            seed = seed.swap(t[1], t[2])
    return seed


# ---------------------------------------------------------------- seeds

class _Seed:
    def __init__(self, quiver, values):
        self.quiver = quiver
        self.values = dict(values)

    def __getitem__(self, v):
        return self.values[v]

    def swap(self, u, v):
        vals = dict(self.values)
        vals[u], vals[v] = self.values[v], self.values[u]
        return type(self)._make(self, self.quiver.swap(u, v), vals)

    def permuted(self, sigma):
        """Seed with label a moved to sigma(a)."""
        if not sigma:
            return self
        vals = {sigma.get(a, a): x for a, x in self.values.items()}
        return type(self)._make(self, self.quiver.relabel(sigma), vals)

    @classmethod
    def _make(cls, proto, quiver, values):
        return cls(quiver, values)


class XSeed(_Seed):
    """Cluster variables as Laurent polynomials in the initial cluster."""

    @classmethod
    def initial(cls, quiver, ring=None):
        ring = ring or LaurentRing(quiver.labels)
        return cls(quiver, {v: ring.gen(v) for v in quiver.labels})

    def mutate(self, k):
        new = dict(self.values)
        new[k] = mutate_x(self.quiver, self.values, k)
        return XSeed(self.quiver.mutate(k), new)


def _exchange_monomials(quiver, values, k, one):
    plus, minus = one, one
    for v in quiver.labels:
        b = quiver.b(v, k)
        if b > 0:
            plus = plus * values[v] ** b
        elif b < 0:
            minus = minus * values[v] ** (-b)
    return plus, minus


def mutate_x(quiver, values, k):
    """New cluster variable at k: (prod_{b_jk>0} x_j^b + prod_{b_jk<0} x_j^-b) / x_k."""
    one = values[k].ring.one()
    plus, minus = _exchange_monomials(quiver, values, k, one)
    return laurent_exact_divide(plus + minus, values[k])


class YSeedTropical(_Seed):
    """y-variables in the tropical semifield on the initial y's."""

    @classmethod
    def initial(cls, quiver):
        n = len(quiver.labels)
        return cls(quiver, {v: TropicalPoint.unit(n, k) for k, v in enumerate(quiver.labels)})

    def mutate(self, k):
        return YSeedTropical(self.quiver.mutate(k), mutate_y_tropical(self.quiver, self.values, k))


def mutate_y_tropical(quiver, values, k):
    yk = values[k]
    one = TropicalPoint.one(len(yk.exps))
    out = {}
    for v, y in values.items():
        if v == k:
            out[v] = yk.inverse()
            continue
        b = quiver.b(k, v)
        if b > 0:
            out[v] = y * one.oplus(yk.inverse()) ** (-b)
        elif b < 0:
            out[v] = y * one.oplus(yk) ** (-b)
        else:
            out[v] = y
    return out


_CTX = {}


def irreducible_factors(poly):
    """Split a polynomial (nonnegative exponents, integer coefficients) into
    a monomial exponent vector and {irreducible factor: multiplicity}.
    The factorization itself is python-flint's."""
    ring = poly.ring
    nv = len(ring.names)
    if nv not in _CTX:
        _CTX[nv] = flint.fmpz_mpoly_ctx.get(tuple("v%d" % i for i in range(nv)), "lex")
    const, facs = _CTX[nv].from_dict({e: int(c) for e, c in poly.terms.items()}).factor()
    mono, out = [0] * nv, {}
    if const != 1:
        out[ring.const(int(const))] = 1
    for g, e in facs:
        d = g.to_dict()
        (exps, c), = d.items() if len(d) == 1 else ((None, None),)
        if exps is not None and c == 1:
            mono = [a + e * b for a, b in zip(mono, exps)]
        else:
            out[Laurent(ring, {tuple(k): int(v) for k, v in d.items()})] = e
    return mono, out


class Factored:
    """Subtraction-free element of the universal semifield, kept as a
    Laurent monomial times a product of irreducible polynomial factors with
    integer exponents.  Every new factor 1 + y is factored on creation, so
    equal factors merge by identity and cancel."""
    __slots__ = ("ring", "mono", "factors")

    def __init__(self, ring, mono, factors=None):
        self.ring = ring
        self.mono = tuple(mono)
        self.factors = {f: e for f, e in (factors or {}).items() if e}

    @classmethod
    def gen(cls, ring, name):
        return cls(ring, ring.gen(name).leading()[0])

    def __mul__(self, other):
        fac = dict(self.factors)
        for f, e in other.factors.items():
            fac[f] = fac.get(f, 0) + e
        return Factored(self.ring, [a + b for a, b in zip(self.mono, other.mono)], fac)

    def inverse(self):
        return Factored(self.ring, [-a for a in self.mono],
                        {f: -e for f, e in self.factors.items()})

    def __pow__(self, k):
        if k < 0:
            return self.inverse() ** (-k)
        return Factored(self.ring, [k * a for a in self.mono],
                        {f: k * e for f, e in self.factors.items()})

    def num_den(self):
        num = self.ring.monomial({}).shift([max(a, 0) for a in self.mono])
        den = self.ring.monomial({}).shift([max(-a, 0) for a in self.mono])
        for f, e in self.factors.items():
            if e > 0:
                num = num * f ** e
            else:
                den = den * f ** (-e)
        return num, den

    def one_plus(self):
        """1 + self, as a new Factored (one fresh factor)."""
        num, den = self.num_den()
        mono, factors = irreducible_factors(num + den)
        return Factored(self.ring, mono, factors) * _den_only(self)

    def as_ratfunc(self):
        return RatFunc(*self.num_den())

    def principal(self):
        """Tropical image; a homomorphism of semifields."""
        out = list(self.mono)
        for f, e in self.factors.items():
            out = [a + e * b for a, b in zip(out, f.min_exponents())]
        return TropicalPoint(out)

    def __eq__(self, other):
        if isinstance(other, RatFunc):
            return self.as_ratfunc() == other
        if self.mono == other.mono and self.factors == other.factors:
            return True
        return self.as_ratfunc() == other.as_ratfunc()

    __hash__ = None

    def __repr__(self):
        return "Factored(%r)" % (self.as_ratfunc(),)


def _den_only(x):
    """1 / (denominator part of x)."""
    mono = [min(a, 0) for a in x.mono]
    return Factored(x.ring, mono, {f: e for f, e in x.factors.items() if e < 0})


class YSeedUniversal(_Seed):
    """y-variables in the universal semifield, subtraction-free."""

    @classmethod
    def initial(cls, quiver, ring=None):
        ring = ring or LaurentRing([("y", v) for v in quiver.labels])
        return cls(quiver, {v: Factored.gen(ring, ("y", v)) for v in quiver.labels})

    def mutate(self, k):
        return YSeedUniversal(self.quiver.mutate(k), mutate_y_universal(self.quiver, self.values, k))

    def tropicalize(self):
        return YSeedTropical(self.quiver, {v: y.principal() for v, y in self.values.items()})


def mutate_y_universal(quiver, values, k):
    yk = values[k]
    onep = yk.one_plus()            # 1 + y_k
    up = yk * onep.inverse()        # y_k / (1 + y_k)
    out = {}
    for v, y in values.items():
        if v == k:
            out[v] = yk.inverse()
            continue
        b = quiver.b(k, v)
        if b > 0:
            out[v] = y * up ** b
        elif b < 0:
            out[v] = y * onep ** (-b)
        else:
            out[v] = y
    return out


class XYSeed(_Seed):
    """Cluster variables with principal-style coefficients: x's are Laurent
    in the initial x's and the tropical y generators; y's are tropical."""

    def __init__(self, quiver, values, yvals, ynames):
        super().__init__(quiver, values)
        self.y = dict(yvals)
        self.ynames = ynames

    @classmethod
    def initial(cls, quiver):
        ynames = [("y", v) for v in quiver.labels]
        ring = LaurentRing(list(quiver.labels) + ynames)
        n = len(quiver.labels)
        return cls(quiver, {v: ring.gen(v) for v in quiver.labels},
                   {v: TropicalPoint.unit(n, k) for k, v in enumerate(quiver.labels)}, ynames)

    @classmethod
    def _make(cls, proto, quiver, values):
        raise NotImplementedError

    def swap(self, u, v):
        vals = dict(self.values)
        vals[u], vals[v] = self.values[v], self.values[u]
        ys = dict(self.y)
        ys[u], ys[v] = self.y[v], self.y[u]
        return XYSeed(self.quiver.swap(u, v), vals, ys, self.ynames)

    def permuted(self, sigma):
        if not sigma:
            return self
        return XYSeed(self.quiver.relabel(sigma),
                      {sigma.get(a, a): x for a, x in self.values.items()},
                      {sigma.get(a, a): x for a, x in self.y.items()}, self.ynames)

    def mutate(self, k):
        return XYSeed(self.quiver.mutate(k), mutate_xy(self.quiver, self.values, self.y, k, self.ynames),
                      mutate_y_tropical(self.quiver, self.y, k), self.ynames)


def mutate_xy(quiver, values, yvals, k, ynames):
    ring = values[k].ring
    one = ring.one()
    plus, minus = _exchange_monomials(quiver, values, k, one)
    yk = yvals[k].exps
    up = ring.monomial({nm: max(a, 0) for nm, a in zip(ynames, yk)})
    dn = ring.monomial({nm: max(-a, 0) for nm, a in zip(ynames, yk)})
    out = dict(values)
    out[k] = laurent_exact_divide(up * plus + dn * minus, values[k])
    return out


def check_period(seed, word, sigma=None):
    """True when applying ``word`` to ``seed`` gives ``seed`` relabelled by sigma.

    Tropical seeds compare exactly, universal ones by cross-multiplication,
    x-seeds as Laurent polynomials, xy-seeds on both halves.
    """
    sigma = sigma or {}
    end = apply_word(seed, word)
    target = seed.permuted(sigma)
    if end.quiver != target.quiver:
        return False
    for v in target.values:
        if not end.values[v] == target.values[v]:
            return False
    if isinstance(seed, XYSeed):
        return all(end.y[v] == target.y[v] for v in target.y)
    return True


def run_R_sequence(seed, n, c, j, enriched=None):
    """Apply the R-matrix word on cycle c started at j.  Frozen swaps are
    included when the seed's quiver has frozen vertices (or enriched=True)."""
    use = seed.quiver if (enriched or (enriched is None and seed.quiver.frozen)) else None
    return apply_word(seed, r_word(n, c, j, use))


# ---------------------------------------------------------------- closed forms

def cycle_names(n, c):
    """Label helpers for the three cycles around cycle c."""
    lo = lambda i: (c - 1, cyc(i, n))
    mid = lambda i: (c, cyc(i, n))
    hi = lambda i: (c + 1, cyc(i, n))
    return lo, mid, hi


def frozen_names(n, c):
    """Frozen labels around cycle c, keyed by the role of the arrow."""
    lo, mid, hi = cycle_names(n, c)
    return {
        "cyc": lambda i: frozen_label(mid(i), mid(i + 1)),       # i -> i+1
        "hi_in": lambda i: frozen_label(hi(i), mid(i)),          # i^+ -> i
        "lo_in": lambda i: frozen_label(lo(i + 1), mid(i)),      # (i+1)^- -> i
        "lo_out": lambda i: frozen_label(mid(i), lo(i)),         # i -> i^-
        "hi_out": lambda i: frozen_label(mid(i), hi(i - 1)),     # i -> (i-1)^+
    }


def _sum_terms(n, c, ring, i, frozen):
    lo, mid, hi = cycle_names(n, c)
    fz = frozen_names(n, c) if frozen else None
    total = ring.zero()
    for j in range(1, n + 1):
        t = ring.gen(lo(j + 1)) * ring.gen(hi(j))
        for l in cyclic_range(j + 2, j - 1, n):
            t = t * ring.gen(mid(l))
        if frozen:
            t = t * ring.gen(fz["cyc"](j))
            for l in cyclic_range(j + 1, i - 1, n):
                t = t * ring.gen(fz["hi_in"](l)) * ring.gen(fz["lo_in"](l))
            for l in cyclic_range(i + 1, j, n):
                t = t * ring.gen(fz["lo_out"](l)) * ring.gen(fz["hi_out"](l))
        total = total + t
    return total


def closed_R_x(n, c, ring, i):
    """Image of the cluster variable at position i of cycle c."""
    _, mid, _ = cycle_names(n, c)
    den = ring.monomial({mid(j): 1 for j in range(1, n + 1) if j != i})
    return laurent_exact_divide(_sum_terms(n, c, ring, i, False), den)


def closed_tilde_R(n, c, ring, i):
    """Image of x_i under the enriched R-matrix (frozen weights included)."""
    _, mid, _ = cycle_names(n, c)
    den = ring.monomial({mid(j): 1 for j in range(1, n + 1) if j != i})
    return laurent_exact_divide(_sum_terms(n, c, ring, i, True), den)


def closed_tilde_R_frozen(n, c):
    """The frozen relabelling of the enriched R-matrix, as old -> new variable."""
    fz = frozen_names(n, c)
    out = {}
    for i in range(1, n + 1):
        a, b = fz["hi_in"](i), fz["lo_out"](i + 1)
        out[a], out[b] = b, a
        a, b = fz["hi_out"](i), fz["lo_in"](i - 1)
        out[a], out[b] = b, a
    return out


def S_factor(n, c, ring):
    """The common factor S with R(x_i) = S x_i."""
    _, mid, _ = cycle_names(n, c)
    num = _sum_terms(n, c, ring, 1, False)
    return laurent_exact_divide(num, ring.monomial({mid(j): 1 for j in range(1, n + 1)}))


def intermediate_half(n, c, ring, i):
    """Cluster variable at position i after mutating 1, ..., i (i <= n-2)."""
    if not 1 <= i <= n - 2:
        raise ValueError("need 1 <= i <= n-2")
    lo, mid, hi = cycle_names(n, c)
    g = ring.gen
    total = g(lo(1)) * g(mid(i + 1)) * g(hi(n)) * g(mid(1)) ** -1
    for k in range(3, i + 3):
        total = total + g(lo(k - 1)) * g(mid(i + 1)) * g(mid(n)) * g(hi(k - 2)) * \
            (g(mid(k - 1)) * g(mid(k - 2))) ** -1
    return total


def y_alpha(n, c, ring, i):
    """1 + y_i + y_i y_{i+1} + ... (n terms) on cycle c, commutative."""
    _, mid, _ = cycle_names(n, c)
    total, t = ring.one(), ring.one()
    for k in range(n - 1):
        t = t * ring.gen(("y", mid(i + k)))
        total = total + t
    return total


def closed_R_y_classical(n, c, m, ring):
    """Closed form of the R-matrix on y-variables of cycle c of Q_{n,m}.
    Returns label -> RatFunc for every vertex it moves."""
    lo, mid, hi = cycle_names(n, c)
    y = lambda v: ring.gen(("y", v))
    al = lambda i: y_alpha(n, c, ring, i)
    out = {}
    for i in range(1, n + 1):
        out[mid(i)] = RatFunc(al(i), al(i + 2) * y(mid(i + 1)))
        if c > 0:
            out[lo(i)] = RatFunc(y(mid(i)) * y(lo(i)) * al(i + 1), al(i))
        if c < m:
            out[hi(i)] = RatFunc(y(mid(i + 1)) * y(hi(i)) * al(i + 2), al(i + 1))
    return out


def closed_R_y_tropical(n, c, m, labels):
    """Tropical version: y_i -> 1/y_{i+1}, y_i^- -> y_i y_i^-, y_i^+ -> y_{i+1} y_i^+."""
    lo, mid, hi = cycle_names(n, c)
    N = len(labels)
    idx = {v: k for k, v in enumerate(labels)}
    unit = lambda v: TropicalPoint.unit(N, idx[v])
    out = {}
    for i in range(1, n + 1):
        out[mid(i)] = unit(mid(i + 1)).inverse()
        if c > 0:
            out[lo(i)] = unit(mid(i)) * unit(lo(i))
        if c < m:
            out[hi(i)] = unit(mid(i + 1)) * unit(hi(i))
    return out
