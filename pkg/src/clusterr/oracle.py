"""Randomized equality oracle for the skew field of a quantum torus.

Expressions are DAGs (``SkewExpr``).  To compare two of them we restrict to
the generators they use, put the commutation form in block normal form,
and send each generator to a scaled tensor product of clock/shift matrices
over F_p with eps a primitive L-th root of unity.  Every such assignment
respects the relations, so differing values prove inequality; agreement
over several trials and root orders is reported as "probably equal".
"""
import itertools
import json
import math
import random
from dataclasses import dataclass, field

import flint

from .core import EpsScalar
from .qtorus import NCLaurent


class SingularInversion(ArithmeticError):
    pass


class InvalidAssignment(AssertionError):
    """Generated operators do not realize the commutation matrix."""


class ExhaustedRetries(RuntimeError):
    pass


# ---------------------------------------------------------------- DAG

class SkewExpr:
    """Node of an expression DAG.  kind is one of
    gen, const, poly, add, mul, inv.  ``mul`` keeps factor order."""
    __slots__ = ("kind", "args", "data", "__weakref__")

    def __init__(self, kind, args=(), data=None):
        self.kind = kind
        self.args = tuple(args)
        self.data = data

    def __add__(self, other):
        return add(self, lift(other))

    def __radd__(self, other):
        return add(lift(other), self)

    def __sub__(self, other):
        return add(self, neg(lift(other)))

    def __rsub__(self, other):
        return add(lift(other), neg(self))

    def __mul__(self, other):
        return mul(self, lift(other))

    def __rmul__(self, other):
        return mul(lift(other), self)

    def __neg__(self):
        return neg(self)

    def __pow__(self, k):
        if k < 0:
            return inv(self) ** (-k)
        if k == 0:
            return const(1)
        return mul(*([self] * k))

    def __repr__(self):
        return "SkewExpr(%s)" % to_text(self)

    def support(self):
        return expr_support(self)


def gen(label):
    return SkewExpr("gen", data=label)


def const(c):
    if isinstance(c, int):
        c = EpsScalar(c)
    return SkewExpr("const", data=c)


def eps(k):
    return const(EpsScalar.power(k))


def poly(p):
    return SkewExpr("poly", data=p)


def lift(x):
    if isinstance(x, SkewExpr):
        return x
    if isinstance(x, NCLaurent):
        return poly(x)
    if isinstance(x, (int, EpsScalar)):
        return const(x)
    raise TypeError("cannot lift %r" % (x,))


def add(*xs):
    return SkewExpr("add", [lift(x) for x in xs])


def mul(*xs):
    xs = [lift(x) for x in xs]
    return xs[0] if len(xs) == 1 else SkewExpr("mul", xs)


def inv(x):
    return SkewExpr("inv", [lift(x)])


def neg(x):
    return mul(const(-1), x)


def _walk(root):
    """Nodes in post-order, each once."""
    seen, order, stack = set(), [], [(root, False)]
    while stack:
        node, done = stack.pop()
        if done:
            order.append(node)
            continue
        if id(node) in seen:
            continue
        seen.add(id(node))
        stack.append((node, True))
        for a in reversed(node.args):
            if id(a) not in seen:
                stack.append((a, False))
    return order


def expr_support(*roots):
    out = set()
    for root in roots:
        for node in _walk(root):
            if node.kind == "gen":
                out.add(node.data)
            elif node.kind == "poly":
                out |= node.data.support()
    return out


def dag_size(root):
    return len(_walk(root))


def substitute(expr, mapping, memo=None):
    """Replace generators by expressions (composition of maps)."""
    memo = {} if memo is None else memo
    for node in _walk(expr):
        if id(node) in memo:
            continue
        if node.kind == "gen":
            out = mapping.get(node.data, node)
        elif node.kind == "const":
            out = node
        elif node.kind == "poly":
            P = node.data
            if not (P.support() & set(mapping)):
                out = node
            else:
                out = _expand_poly(P, mapping)
        else:
            args = [memo[id(a)] for a in node.args]
            if all(a is b for a, b in zip(args, node.args)):
                out = node
            else:
                out = SkewExpr(node.kind, args, node.data)
        memo[id(node)] = out
    return memo[id(expr)]


def _expand_poly(P, mapping):
    labels = P.torus.labels
    terms = []
    for e, c in P.terms.items():
        factors = [const(c)]
        for k, a in enumerate(e):
            if a:
                g = mapping.get(labels[k]) or gen(labels[k])
                factors.extend([g if a > 0 else inv(g)] * abs(a))
        terms.append(mul(*factors))
    return terms[0] if len(terms) == 1 else add(*terms)


def compose(outer, inner):
    """Map g -> substitute(inner[g], outer): apply ``inner`` then read its
    output through ``outer``.  Generators missing from ``inner`` go to outer[g]."""
    memo = {}
    out = {g: substitute(x, outer, memo) for g, x in inner.items()}
    for g, x in outer.items():
        out.setdefault(g, x)
    return out


def to_text(expr, fmt=None):
    from .qtorus import format_gen
    fmt = fmt or format_gen
    cache = {}
    for node in _walk(expr):
        if node.kind == "gen":
            s = fmt(node.data)
        elif node.kind == "const":
            s = node.data.to_text()
        elif node.kind == "poly":
            s = "(" + node.data.to_text(fmt) + ")"
        elif node.kind == "add":
            s = "(" + " + ".join(cache[id(a)] for a in node.args) + ")"
        elif node.kind == "mul":
            s = " * ".join(cache[id(a)] for a in node.args)
        else:
            s = "inv(" + cache[id(node.args[0])] + ")"
        cache[id(node)] = s
    return cache[id(expr)]


# ---------------------------------------------------------------- rewriting

def rewrite_normal(expr, torus):
    """Structural normal form used for exact comparison of printed formulas.

    Polynomial pieces are multiplied out in ``torus``, monomial inverses are
    absorbed, inverses of products are reversed and nested products are
    flattened; sums are sorted.  Equal normal forms imply equal elements;
    the converse is not claimed.
    """
    memo = {}

    def key(x):
        if isinstance(x, NCLaurent):
            return ("P", tuple(sorted((e, tuple(sorted(c.terms.items()))) for e, c in x.terms.items())))
        return x

    def as_factors(x):
        return list(x[1]) if isinstance(x, tuple) and x[0] == "M" else [x]

    def make_mul(factors):
        out = []
        for f in factors:
            if isinstance(f, NCLaurent) and out and isinstance(out[-1], NCLaurent):
                out[-1] = out[-1] * f
            else:
                out.append(f)
        out = [f for f in out if not (isinstance(f, NCLaurent) and f == torus.one())] or [torus.one()]
        return out[0] if len(out) == 1 else ("M", tuple(out))

    def make_inv(x):
        if isinstance(x, NCLaurent):
            if x.is_monomial():
                return x.inverse()
            return ("I", key(x), x)
        if x[0] == "I":
            return x[2]
        if x[0] == "M":
            return make_mul([make_inv(f) for f in reversed(x[1])])
        return ("I", x, x)

    for node in _walk(expr):
        k = node.kind
        if k == "gen":
            r = torus.gen(node.data)
        elif k == "const":
            r = torus.one() * node.data
        elif k == "poly":
            r = node.data
        elif k == "mul":
            fs = []
            for a in node.args:
                fs.extend(as_factors(memo[id(a)]))
            r = make_mul(fs)
        elif k == "inv":
            r = make_inv(memo[id(node.args[0])])
        else:
            parts = [memo[id(a)] for a in node.args]
            polys = [x for x in parts if isinstance(x, NCLaurent)]
            rest = [x for x in parts if not isinstance(x, NCLaurent)]
            total = torus.zero()
            for x in polys:
                total = total + x
            if not rest:
                r = total
            else:
                items = rest + ([total] if total else [])
                r = ("A", tuple(sorted((_freeze(x, key) for x in items), key=repr)))
        memo[id(node)] = r
    return _freeze(memo[id(expr)], key)


def _freeze(x, key):
    if isinstance(x, NCLaurent):
        return key(x)
    if x[0] == "I":
        return ("I", _freeze(x[1], key) if isinstance(x[1], tuple) and x[1][0] in "MIA" else x[1])
    if x[0] == "M":
        return ("M", tuple(_freeze(f, key) for f in x[1]))
    return x


def structurally_equal(a, b, torus):
    return rewrite_normal(a, torus) == rewrite_normal(b, torus)


# ---------------------------------------------------------------- normal form

def skew_normal_form(lam):
    """Unimodular C and multipliers d with C^T J(d) C = lam.

    J(d) is block diagonal with blocks [[0, d_t], [-d_t, 0]] followed by
    zeros.  Integer congruence reduction, Euclid-style on the pivot.
    """
    N = len(lam)
    M = [list(map(int, row)) for row in lam]
    P = [[int(r == c) for c in range(N)] for r in range(N)]
    Pinv = [[int(r == c) for c in range(N)] for r in range(N)]

    def addrow(r, s, c):
        # e_r <- e_r + c e_s  (congruence on M, row op on P)
        if not c:
            return
        for k in range(N):
            M[r][k] += c * M[s][k]
        for k in range(N):
            M[k][r] += c * M[k][s]
        for k in range(N):
            P[r][k] += c * P[s][k]
        for k in range(N):
            Pinv[k][s] -= c * Pinv[k][r]

    def swap(r, s):
        if r == s:
            return
        M[r], M[s] = M[s], M[r]
        for row in M:
            row[r], row[s] = row[s], row[r]
        P[r], P[s] = P[s], P[r]
        for row in Pinv:
            row[r], row[s] = row[s], row[r]

    d = []
    s = 0
    while s + 1 < N:
        best = None
        for r in range(s, N):
            for c in range(r + 1, N):
                if M[r][c] and (best is None or abs(M[r][c]) < abs(M[best[0]][best[1]])):
                    best = (r, c)
        if best is None:
            break
        swap(s, best[0])
        c = best[1] if best[1] != s else best[0]
        swap(s + 1, c)
        if M[s][s + 1] < 0:
            swap(s, s + 1)
        while True:
            piv = M[s][s + 1]
            changed = False
            for r in range(s + 2, N):
                # clear M[s][r] with e_{s+1}, M[s+1][r] with e_s
                if M[s][r]:
                    addrow(r, s + 1, -(M[s][r] // piv))
                if M[s + 1][r]:
                    addrow(r, s, M[s + 1][r] // piv)
                if M[s][r] or M[s + 1][r]:
                    # remainder smaller than pivot: move it into the pivot slot
                    if M[s][r]:
                        swap(s + 1, r)
                    else:
                        swap(s, r)
                        swap(s, s + 1)
                    if M[s][s + 1] < 0:
                        swap(s, s + 1)
                    changed = True
                    break
            if not changed:
                break
        d.append(M[s][s + 1])
        s += 2
    # C^T = P^{-1}  (since P lam P^T = J)
    C = [[Pinv[c][r] for c in range(N)] for r in range(N)]
    return C, d


def _J(d, N):
    J = [[0] * N for _ in range(N)]
    for t, x in enumerate(d):
        J[2 * t][2 * t + 1] = x
        J[2 * t + 1][2 * t] = -x
    return J


def check_normal_form(lam, C, d):
    N = len(lam)
    J = _J(d, N)
    for a in range(N):
        for b in range(N):
            v = sum(C[s][a] * J[s][t] * C[t][b] for s in range(N) for t in range(N) if J[s][t])
            if v != lam[a][b]:
                return False
    return True


# ---------------------------------------------------------------- primes

def is_probable_prime(n):
    if n < 2:
        return False
    small = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
    for q in small:
        if n % q == 0:
            return n == q
    dd, s = n - 1, 0
    while dd % 2 == 0:
        dd //= 2
        s += 1
    for a in small:
        x = pow(a, dd, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def pick_prime(bits, order, rng):
    """Random prime of the given bit length with order | p - 1."""
    lo, hi = 1 << (bits - 1), (1 << bits) - 1
    while True:
        k = rng.randrange(lo // order, hi // order)
        p = k * order + 1
        if lo <= p <= hi and is_probable_prime(p):
            return p


def _prime_factors(n):
    out, q = set(), 2
    while q * q <= n:
        while n % q == 0:
            out.add(q)
            n //= q
        q += 1
    if n > 1:
        out.add(n)
    return out


def primitive_root_of_unity(order, p, rng):
    for _ in range(1000):
        g = rng.randrange(2, p - 1)
        z = pow(g, (p - 1) // order, p)
        if all(pow(z, order // q, p) != 1 for q in _prime_factors(order)):
            return z
    raise RuntimeError("no primitive root found")


# ---------------------------------------------------------------- config

FALLBACK_ORDERS = (3, 4, 13, 6, 8, 9)


@dataclass
class SpecConfig:
    prime_bits: int = 61
    root_orders: tuple = (5, 7, 11)
    trials: int = 6
    seed: int = 0
    max_dim: int = 343
    retries: int = 5

    def to_dict(self):
        return {"prime_bits": self.prime_bits, "root_orders": list(self.root_orders),
                "trials": self.trials, "seed": self.seed, "max_dim": self.max_dim,
                "retries": self.retries}

    @classmethod
    def from_dict(cls, d):
        d = dict(d)
        if "root_orders" in d:
            d["root_orders"] = tuple(d["root_orders"])
        return cls(**d)


def admissible_orders(config, d):
    """Root orders usable for a torus with block multipliers d: the matrix
    size L^k must fit under max_dim and L must be coprime to each d_t.
    Configured orders come first; small fallbacks top the list up to three."""
    k = len(d)

    def ok(L):
        return L >= 2 and L ** k <= config.max_dim and all(math.gcd(L, x) == 1 for x in d)

    orders = [L for L in config.root_orders if ok(L)]
    for L in FALLBACK_ORDERS:
        if len(orders) >= 3:
            break
        if ok(L) and L not in orders:
            orders.append(L)
    if not orders:
        raise ValueError("no admissible root order for %d Weyl pairs under max_dim=%d"
                         % (k, config.max_dim))
    return orders


# ---------------------------------------------------------------- F_p operators

class FpOp:
    """Operator on F_p^N: a scalar, a monomial matrix (perm, scales) with
    e_x -> scale[x] e_{perm[x]}, or a dense flint matrix."""
    __slots__ = ("kind", "p", "N", "c", "perm", "scale", "mat")

    def __init__(self, kind, p, N, c=None, perm=None, scale=None, mat=None):
        self.kind, self.p, self.N = kind, p, N
        self.c, self.perm, self.scale, self.mat = c, perm, scale, mat

    @classmethod
    def scalar(cls, c, p, N):
        return cls("scalar", p, N, c=c % p)

    def dense(self):
        if self.kind == "dense":
            return self.mat
        M = flint.nmod_mat(self.N, self.N, self.p)
        if self.kind == "scalar":
            if self.c:
                for x in range(self.N):
                    M[x, x] = self.c
        else:
            for x in range(self.N):
                if self.scale[x]:
                    M[self.perm[x], x] = self.scale[x]
        return M

    def __mul__(self, other):
        p = self.p
        if self.kind == "scalar":
            return other.scaled(self.c)
        if other.kind == "scalar":
            return self.scaled(other.c)
        if self.kind == "mono" and other.kind == "mono":
            perm = [self.perm[y] for y in other.perm]
            scale = [other.scale[x] * self.scale[other.perm[x]] % p for x in range(self.N)]
            return FpOp("mono", p, self.N, perm=perm, scale=scale)
        return FpOp("dense", p, self.N, mat=self.dense() * other.dense())

    def scaled(self, c):
        p = self.p
        c %= p
        if self.kind == "scalar":
            return FpOp.scalar(self.c * c, p, self.N)
        if self.kind == "mono":
            return FpOp("mono", p, self.N, perm=self.perm, scale=[s * c % p for s in self.scale])
        return FpOp("dense", p, self.N, mat=self.mat * c)

    def __add__(self, other):
        p = self.p
        if self.kind == "scalar" and other.kind == "scalar":
            return FpOp.scalar(self.c + other.c, p, self.N)
        if self.kind == "mono" and other.kind == "mono" and self.perm == other.perm:
            return FpOp("mono", p, self.N, perm=self.perm,
                        scale=[(a + b) % p for a, b in zip(self.scale, other.scale)])
        return FpOp("dense", p, self.N, mat=self.dense() + other.dense())

    def inverse(self):
        p = self.p
        if self.kind == "scalar":
            if not self.c:
                raise SingularInversion("zero scalar")
            return FpOp.scalar(pow(self.c, -1, p), p, self.N)
        if self.kind == "mono":
            if any(s == 0 for s in self.scale):
                raise SingularInversion("singular monomial matrix")
            perm = [0] * self.N
            scale = [0] * self.N
            for x in range(self.N):
                perm[self.perm[x]] = x
                scale[self.perm[x]] = pow(self.scale[x], -1, p)
            return FpOp("mono", p, self.N, perm=perm, scale=scale)
        try:
            return FpOp("dense", p, self.N, mat=self.mat.inv())
        except ZeroDivisionError:
            raise SingularInversion("singular matrix") from None

    def __eq__(self, other):
        if self.kind == "scalar" and other.kind == "scalar":
            return self.c == other.c
        if self.kind == "mono" and other.kind == "mono":
            return all((self.scale[x] == 0 and other.scale[x] == 0) or
                       (self.perm[x] == other.perm[x] and self.scale[x] == other.scale[x])
                       for x in range(self.N))
        return self.dense() == other.dense()

    __hash__ = None

    def fingerprint(self):
        """A few entries, for witness records."""
        M = self.dense()
        return [int(M[0, c]) for c in range(min(4, self.N))]


class WeylAssignment:
    """Generators -> scaled clock/shift tensor products over F_p."""

    def __init__(self, labels, C, d, L, p, zeta, scalars):
        self.labels = list(labels)
        self.C, self.d = C, list(d)
        self.L, self.p, self.zeta = L, p, zeta
        self.scalars = dict(scalars)
        k = len(self.d)
        self.k = k
        self.N = L ** k
        self.ops = {}
        xs = list(itertools.product(range(L), repeat=k)) if k else [()]
        pos = {x: n for n, x in enumerate(xs)}
        zp = [pow(zeta, e, p) for e in range(L)]
        for a, lab in enumerate(self.labels):
            u = [self.d[t] * C[2 * t][a] for t in range(k)]
            v = [C[2 * t + 1][a] for t in range(k)]
            perm, scale = [0] * self.N, [0] * self.N
            s = self.scalars[lab] % p
            for x in xs:
                y = tuple((x[t] + v[t]) % L for t in range(k))
                e = sum(u[t] * y[t] for t in range(k)) % L
                perm[pos[x]] = pos[y]
                scale[pos[x]] = s * zp[e] % p
            self.ops[lab] = FpOp("mono", p, self.N, perm=perm, scale=scale)

    def eps_power(self, e):
        return pow(self.zeta, e % self.L, self.p)

    def scalar_of(self, c):
        """Value of an EpsScalar."""
        return sum(x * self.eps_power(e) for e, x in c.terms.items()) % self.p

    def to_record(self):
        return {"labels": [repr(v) for v in self.labels], "C": self.C, "d": self.d,
                "L": self.L, "p": self.p, "zeta": self.zeta,
                "scalars": [self.scalars[v] for v in self.labels]}

    @classmethod
    def from_record(cls, rec, labels):
        by_repr = {repr(v): v for v in labels}
        labs = [by_repr[r] for r in rec["labels"]]
        return cls(labs, rec["C"], rec["d"], rec["L"], rec["p"], rec["zeta"],
                   dict(zip(labs, rec["scalars"])))


def weyl_assignment(torus, labels, L, p, rng, normal_form=None):
    labels = [v for v in torus.labels if v in set(labels)]
    sub = torus.restrict(labels)
    C, d = normal_form or skew_normal_form(sub.lam)
    zeta = primitive_root_of_unity(L, p, rng)
    scalars = {v: rng.randrange(1, p) for v in labels}
    W = WeylAssignment(labels, C, d, L, p, zeta, scalars)
    return W


def verify_assignment(W, torus, sample=None, rng=None):
    """The assigned matrices satisfy g_a g_b = eps^lam g_b g_a.  With
    ``sample`` only that many random pairs are checked."""
    pairs = [(a, b) for a in W.labels for b in W.labels]
    if sample is not None and sample < len(pairs):
        pairs = (rng or random.Random(0)).sample(pairs, sample)
    for a, b in pairs:
        lhs = W.ops[a] * W.ops[b]
        rhs = (W.ops[b] * W.ops[a]).scaled(W.eps_power(torus.commutation(a, b)))
        if not lhs == rhs:
            return False
    return True


# ---------------------------------------------------------------- evaluation

def eval_expr(expr, W, memo=None):
    """Evaluate under a Weyl assignment; SingularInversion on a singular Inv."""
    memo = {} if memo is None else memo
    p, N = W.p, W.N
    powcache = {}
    for node in _walk(expr):
        if id(node) in memo:
            continue
        k = node.kind
        if k == "gen":
            r = W.ops[node.data]
        elif k == "const":
            r = FpOp.scalar(W.scalar_of(node.data), p, N)
        elif k == "poly":
            r = _eval_poly(node.data, W, powcache)
        elif k == "add":
            r = memo[id(node.args[0])]
            for a in node.args[1:]:
                r = r + memo[id(a)]
        elif k == "mul":
            r = memo[id(node.args[0])]
            for a in node.args[1:]:
                r = r * memo[id(a)]
        else:
            r = memo[id(node.args[0])].inverse()
        memo[id(node)] = r
    return memo[id(expr)]


def _eval_poly(P, W, powcache):
    labels = P.torus.labels
    total = None
    for e, c in P.terms.items():
        t = FpOp.scalar(W.scalar_of(c), W.p, W.N)
        for k, a in enumerate(e):
            if a:
                key = (labels[k], a)
                if key not in powcache:
                    g = W.ops[labels[k]]
                    base = g if a > 0 else g.inverse()
                    x = base
                    for _ in range(abs(a) - 1):
                        x = x * base
                    powcache[key] = x
                t = t * powcache[key]
        total = t if total is None else total + t
    return total if total is not None else FpOp.scalar(0, W.p, W.N)


def eval_classical(expr, point, p, memo=None):
    """Evaluate at eps = 1 with commuting scalar values mod p."""
    memo = {} if memo is None else memo
    for node in _walk(expr):
        if id(node) in memo:
            continue
        k = node.kind
        if k == "gen":
            r = point[node.data] % p
        elif k == "const":
            r = sum(node.data.terms.values()) % p
        elif k == "poly":
            r = 0
            labels = node.data.torus.labels
            for e, c in node.data.terms.items():
                t = sum(c.terms.values()) % p
                for j, a in enumerate(e):
                    if a:
                        v = point[labels[j]] % p
                        if a < 0:
                            if not v:
                                raise SingularInversion("zero generator value")
                            v = pow(v, -1, p)
                        t = t * pow(v, abs(a), p) % p
                r += t
            r %= p
        elif k == "add":
            r = sum(memo[id(a)] for a in node.args) % p
        elif k == "mul":
            r = 1
            for a in node.args:
                r = r * memo[id(a)] % p
        else:
            v = memo[id(node.args[0])]
            if not v:
                raise SingularInversion("zero denominator")
            r = pow(v, -1, p)
        memo[id(node)] = r
    return memo[id(expr)]


# ---------------------------------------------------------------- verdicts

@dataclass
class ProbablyEqual:
    trials: int
    orders: list

    verdict = "ProbablyEqual"


@dataclass
class NotEqual:
    witness: dict = field(default_factory=dict)

    verdict = "NotEqual"


def equal_skew(pairs, torus, config, rng=None, group=True):
    """Compare each (lhs, rhs) pair under ``config.trials`` random Weyl
    assignments cycling through the admissible root orders.

    Pairs are grouped by the generators they involve (``group=False`` puts
    them all in one group); each group gets its own, smaller, representation.
    Returns ProbablyEqual, or NotEqual with a replayable witness for the
    first discrepancy.  Raises ExhaustedRetries if every redraw of the
    scalars hits a singular inversion.
    """
    if isinstance(pairs, tuple) and len(pairs) == 2 and isinstance(pairs[0], SkewExpr):
        pairs = [pairs]
    pairs = [(lift(a), lift(b)) for a, b in pairs]
    rng = rng or random.Random(config.seed)
    groups = {}
    for idx, (a, b) in enumerate(pairs):
        key = frozenset(expr_support(a, b)) if group else frozenset()
        groups.setdefault(key, []).append(idx)
    if not group:
        groups = {frozenset(expr_support(*[x for pr in pairs for x in pr])): list(range(len(pairs)))}
    used_orders = []
    for labels, members in groups.items():
        res = _equal_group(pairs, members, labels, torus, config, rng)
        if isinstance(res, NotEqual):
            return res
        used_orders.extend(L for L in res if L not in used_orders)
    return ProbablyEqual(config.trials, used_orders)


def _equal_group(pairs, members, labels, torus, config, rng):
    if not labels:
        labels = set(torus.labels[:1])
    sub = torus.restrict(labels)
    nf = skew_normal_form(sub.lam)
    orders = admissible_orders(config, nf[1])
    primes = {}
    for trial in range(config.trials):
        L = orders[trial % len(orders)]
        if L not in primes:
            primes[L] = pick_prime(config.prime_bits, L, rng)
        p = primes[L]
        for attempt in range(config.retries):
            W = weyl_assignment(torus, sub.labels, L, p, rng, nf)
            # spot check on a separate stream, so verdicts and witnesses do not move
            if not verify_assignment(W, sub, 20, random.Random("%d:%d" % (p, W.zeta))):
                raise InvalidAssignment("Weyl assignment violates the commutation matrix")
            try:
                memo = {}
                for idx in members:
                    a, b = pairs[idx]
                    va = eval_expr(a, W, memo)
                    vb = eval_expr(b, W, memo)
                    if not va == vb:
                        return NotEqual({"pair": idx, "trial": trial, "attempt": attempt,
                                         "assignment": W.to_record(),
                                         "lhs": va.fingerprint(), "rhs": vb.fingerprint()})
                break
            except SingularInversion:
                continue
        else:
            raise ExhaustedRetries("singular inversion in %d redraws (L=%d)" % (config.retries, L))
    return orders


def replay_witness(pairs, torus, witness):
    """Re-evaluate the recorded assignment; True when the discrepancy reproduces."""
    pairs = [(lift(a), lift(b)) for a, b in pairs]
    a, b = pairs[witness["pair"]]
    labels = torus.labels
    W = WeylAssignment.from_record(witness["assignment"], labels)
    return not eval_expr(a, W) == eval_expr(b, W)


def witness_to_text(witness):
    return json.dumps(witness, sort_keys=True)


def witness_from_text(text):
    return json.loads(text)


def equal_classical(pairs, labels, trials, p, rng):
    """Commutative shadow: compare at eps = 1 on random F_p points."""
    for t in range(trials):
        point = {v: rng.randrange(1, p) for v in labels}
        memo = {}
        try:
            for idx, (a, b) in enumerate(pairs):
                if eval_classical(lift(a), point, p, memo) != eval_classical(lift(b), point, p, memo):
                    return NotEqual({"pair": idx, "point": {repr(k): v for k, v in point.items()},
                                     "p": p})
        except SingularInversion:
            continue
    return ProbablyEqual(trials, [1])
