"""Quantum tori: generators g_a with g_a g_b = eps^{lam[a][b]} g_b g_a.

Elements are dicts from exponent tuples (normal order = generator order of
the torus) to ``EpsScalar`` coefficients.  Multiplying normal-ordered
monomials x^a * x^b picks up eps^{sum_{s>t} a_s lam[s][t] b_t}.
"""
from .core import EpsScalar
from .quiver import cyc


class QuantumTorus:
    def __init__(self, labels, lam):
        self.labels = list(labels)
        self.index = {v: k for k, v in enumerate(self.labels)}
        N = len(self.labels)
        self.lam = [[int(lam[a][b]) for b in range(N)] for a in range(N)]
        for a in range(N):
            for b in range(N):
                if self.lam[a][b] != -self.lam[b][a]:
                    raise ValueError("commutation matrix must be antisymmetric")
        # lower[s] = list of (t, lam[s][t]) with t < s and nonzero entry
        self._lower = [[(t, self.lam[s][t]) for t in range(s) if self.lam[s][t]] for s in range(N)]
        self.zero_exp = (0,) * N

    def __len__(self):
        return len(self.labels)

    def __repr__(self):
        return "QuantumTorus(%d generators)" % len(self.labels)

    def commutation(self, a, b):
        return self.lam[self.index[a]][self.index[b]]

    def shift(self, ea, eb):
        """eps exponent produced by normal-ordering x^ea x^eb."""
        total = 0
        for s, a in enumerate(ea):
            if a:
                for t, l in self._lower[s]:
                    if eb[t]:
                        total += a * l * eb[t]
        return total

    def gen(self, label, power=1):
        e = [0] * len(self.labels)
        e[self.index[label]] = power
        return NCLaurent(self, {tuple(e): EpsScalar(1)})

    def one(self):
        return NCLaurent(self, {self.zero_exp: EpsScalar(1)})

    def zero(self):
        return NCLaurent(self, {})

    def eps(self, k, coeff=1):
        return NCLaurent(self, {self.zero_exp: EpsScalar.power(k, coeff)})

    def word(self, letters):
        """Product of generators in the given order; letters are labels or
        (label, power) pairs."""
        out = self.one()
        for x in letters:
            if isinstance(x, tuple) and len(x) == 2 and isinstance(x[1], int) and x[0] in self.index:
                out = out * self.gen(x[0], x[1])
            else:
                out = out * self.gen(x)
        return out

    def restrict(self, labels):
        labels = [v for v in self.labels if v in set(labels)]
        idx = [self.index[v] for v in labels]
        return QuantumTorus(labels, [[self.lam[a][b] for b in idx] for a in idx])


def alpha_exponent(torus, ea, eb):
    """alpha with x^ea x^eb = eps^alpha x^eb x^ea."""
    total = 0
    for s, a in enumerate(ea):
        if a:
            row = torus.lam[s]
            for t, b in enumerate(eb):
                if b and row[t]:
                    total += a * row[t] * b
    return total


class NCLaurent:
    __slots__ = ("torus", "terms")

    def __init__(self, torus, terms):
        self.torus = torus
        self.terms = {e: c for e, c in terms.items() if c}

    def _coerce(self, other):
        if isinstance(other, NCLaurent):
            return other
        if isinstance(other, int):
            return NCLaurent(self.torus, {self.torus.zero_exp: EpsScalar(other)})
        if isinstance(other, EpsScalar):
            return NCLaurent(self.torus, {self.torus.zero_exp: other})
        return NotImplemented

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return False
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return nc_add(self, other)

    __radd__ = __add__

    def __neg__(self):
        return NCLaurent(self.torus, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, EpsScalar)):
            return NCLaurent(self.torus, {e: c * other for e, c in self.terms.items()})
        if not isinstance(other, NCLaurent):
            return NotImplemented
        return nc_mul(self, other)

    def __rmul__(self, other):
        if isinstance(other, (int, EpsScalar)):
            return self * other
        return NotImplemented

    def scale_eps(self, k):
        return NCLaurent(self.torus, {e: c.shift(k) for e, c in self.terms.items()})

    def is_monomial(self):
        """Single term whose coefficient is +-eps^k (an invertible element)."""
        if len(self.terms) != 1:
            return False
        (c,) = self.terms.values()
        return c.is_monomial() and list(c.terms.values())[0] in (1, -1)

    def inverse(self):
        if not self.is_monomial():
            raise ArithmeticError("only monomials are invertible in the torus")
        (e, c), = self.terms.items()
        (k, s), = c.terms.items()
        neg = tuple(-a for a in e)
        # x^e x^-e = eps^shift; so (c x^e)^-1 = c^-1 eps^-shift x^-e
        sh = self.torus.shift(e, neg)
        return NCLaurent(self.torus, {neg: EpsScalar.power(-k - sh, s)})

    def __pow__(self, k):
        base = self if k >= 0 else self.inverse()
        k = abs(k)
        out = self.torus.one()
        while k:
            if k & 1:
                out = out * base
            k >>= 1
            if k:
                base = base * base
        return out

    def support(self):
        used = set()
        for e in self.terms:
            used.update(k for k, a in enumerate(e) if a)
        return {self.torus.labels[k] for k in used}

    def at_eps_one(self):
        """Commutative shadow: dict exps -> integer coefficient at eps = 1."""
        out = {}
        for e, c in self.terms.items():
            v = sum(c.terms.values())
            if v:
                out[e] = v
        return out

    def __repr__(self):
        return "NCLaurent(%s)" % self.to_text()

    def to_text(self, fmt=None):
        fmt = fmt or format_gen
        if not self.terms:
            return "0"
        parts = []
        for e in sorted(self.terms, reverse=True):
            c = self.terms[e]
            mono = " ".join(fmt(self.torus.labels[k]) + ("" if a == 1 else "^%d" % a)
                            for k, a in enumerate(e) if a)
            cs = c.to_text()
            if not mono:
                parts.append(cs)
            elif cs == "1":
                parts.append(mono)
            else:
                parts.append("(%s) %s" % (cs, mono))
        return " + ".join(parts)


def format_gen(label):
    if isinstance(label, tuple):
        if len(label) == 3 and label[0] == "q":
            return "q%d_%d" % (label[1], label[2])
        if len(label) == 2 and isinstance(label[0], str):
            return "%s%d" % label
        if len(label) == 2:
            return "y%d.%d" % label
    return str(label)


def nc_add(a, b):
    out = dict(a.terms)
    for e, c in b.terms.items():
        out[e] = out[e] + c if e in out else c
    return NCLaurent(a.torus, out)


def nc_mul(a, b):
    T = a.torus
    out = {}
    for ea, ca in a.terms.items():
        for eb, cb in b.terms.items():
            e = tuple(x + y for x, y in zip(ea, eb))
            c = (ca * cb).shift(T.shift(ea, eb))
            out[e] = out[e] + c if e in out else c
    return NCLaurent(T, out)


def conjugate_by_monomial(poly, mono):
    """mono * poly * mono^-1 for an invertible monomial."""
    (em, _), = mono.terms.items()
    T = poly.torus
    return NCLaurent(T, {e: c.shift(alpha_exponent(T, em, e)) for e, c in poly.terms.items()})


# ----------------------------------------------------------- standard tori

def lambda_pq(n):
    """Torus on p_1..p_n, q_1..q_n with the two-column relations."""
    if n < 3:
        raise ValueError("need n >= 3")
    labels = [("p", i) for i in range(1, n + 1)] + [("q", i) for i in range(1, n + 1)]
    idx = {v: k for k, v in enumerate(labels)}
    lam = [[0] * (2 * n) for _ in range(2 * n)]

    def put(a, b, v):
        lam[idx[a]][idx[b]] = v
        lam[idx[b]][idx[a]] = -v

    for i in range(1, n + 1):
        put(("p", i), ("q", i), 1)
        put(("p", i), ("q", cyc(i - 2, n)), 1)
        put(("p", i), ("q", cyc(i - 1, n)), -2)
        for r in "pq":
            put((r, i), (r, cyc(i - 1, n)), 1)
    return QuantumTorus(labels, lam)


def snake_index(n, j, i):
    return (i + j - 1) % n


def lambda_snake(n, m):
    """Network torus on q_{j,i}, columns 1..m, rows 1..n, with snake-path
    relations.  Labels ('q', j, i) in (column, row) order."""
    if n < 3:
        raise ValueError("need n >= 3")
    labels = [("q", j, i) for j in range(1, m + 1) for i in range(1, n + 1)]
    N = len(labels)
    lam = [[0] * N for _ in range(N)]
    for a, (_, j, i) in enumerate(labels):
        for b, (_, j2, i2) in enumerate(labels):
            d = (snake_index(n, j, i) - snake_index(n, j2, i2)) % n
            if d == 1:
                lam[a][b] = 1 if j <= j2 else -1
            elif d == n - 1:
                lam[a][b] = -1 if j2 <= j else 1
            elif d == 0 and a != b:
                lam[a][b] = -2 if j < j2 else 2 if j > j2 else 0
    return QuantumTorus(labels, lam)


def lambda_y(quiver, labels=None):
    """y-torus of an exchange matrix: y_a y_b = eps^{2 b_ba} y_b y_a."""
    labels = list(labels or quiver.labels)
    lam = [[2 * quiver.b(b, a) for b in labels] for a in labels]
    return QuantumTorus(labels, lam)


def kappa_eps(P, Q, n, i):
    """sum_j p_{i-1} ... p_{i-j} q_{i-j-2} ... q_{i-n}, factors in that order.
    P, Q map 1..n to torus elements."""
    total = None
    for j in range(n):
        t = None
        for l in range(1, j + 1):
            t = P[cyc(i - l, n)] if t is None else t * P[cyc(i - l, n)]
        for l in range(j + 2, n + 1):
            t = Q[cyc(i - l, n)] if t is None else t * Q[cyc(i - l, n)]
        total = t if total is None else total + t
    return total


def alpha_eps(Y, n, i, torus):
    """1 + sum_{k=1}^{n-1} eps^k y_i y_{i+1} ... y_{i+k-1}."""
    total = torus.one()
    t = torus.one()
    for k in range(1, n):
        t = t * Y[cyc(i + k - 1, n)]
        total = total + t.scale_eps(k)
    return total


def pq_gens(torus, n):
    """P, Q dicts for a torus built by ``lambda_pq``."""
    return ({i: torus.gen(("p", i)) for i in range(1, n + 1)},
            {i: torus.gen(("q", i)) for i in range(1, n + 1)})


def column_gens(torus, n, j):
    """Column j of a network torus as a dict row -> generator."""
    return {i: torus.gen(("q", j, i)) for i in range(1, n + 1)}
