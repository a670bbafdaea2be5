"""Geometric and cluster R-matrices, classical and quantum, and the maps
that tie the network variables to the quiver variables.

Two-column conventions: the left column is p_1..p_n, the right column
q_1..q_n.  On a network with m columns the pair (p, q) is column j and
column j+1, labels ('q', j, i).
"""
import random

from .core import LaurentRing, RatFunc
from .oracle import const, eps, gen, inv, mul, poly, substitute
from .qtorus import alpha_eps, alpha_exponent, kappa_eps, lambda_pq, lambda_snake, lambda_y
from .quiver import (build_Q, build_Q_tilde, build_Q_tilde_prime, cyc,
                     frozen_label)
from .seeds import _Seed, closed_tilde_R, closed_tilde_R_frozen, cycle_names


def pq_labels(n, j=None):
    """(left, right) label lists; j=None gives the bare two-column torus."""
    if j is None:
        return [("p", i) for i in range(1, n + 1)], [("q", i) for i in range(1, n + 1)]
    return ([("q", j, i) for i in range(1, n + 1)],
            [("q", j + 1, i) for i in range(1, n + 1)])


# ---------------------------------------------------------------- classical

def substitute_ratfunc(f, values, ring):
    """Evaluate a RatFunc (or Laurent) with generators replaced by RatFuncs."""
    one = RatFunc(ring.one())
    full = {v: RatFunc(ring.gen(v)) for v in ring.names}
    full.update(values)
    values = full
    if isinstance(f, RatFunc):
        return f.num.substitute(values, one) / f.den.substitute(values, one)
    return f.substitute(values, one)


class GeometricR:
    """p_i -> q_i k_{i+1}/k_i,  q_i -> p_i k_i/k_{i+1}  (commuting variables)."""

    def __init__(self, n, j=None, ring=None, m=None):
        if n < 2:
            raise ValueError("need n >= 2")
        self.n = n
        left, right = pq_labels(n, j)
        if ring is None:
            names = left + right if j is None else \
                [("q", c, i) for c in range(1, (m or j + 1) + 1) for i in range(1, n + 1)]
            ring = LaurentRing(names)
        self.ring = ring
        self.left, self.right = left, right
        P = {i: ring.gen(left[i - 1]) for i in range(1, n + 1)}
        Q = {i: ring.gen(right[i - 1]) for i in range(1, n + 1)}
        k = {i: kappa_eps(P, Q, n, i) for i in range(1, n + 1)}
        self.kappa = k
        self.images = {}
        for i in range(1, n + 1):
            nxt = k[cyc(i + 1, n)]
            self.images[left[i - 1]] = RatFunc(Q[i] * nxt, k[i])
            self.images[right[i - 1]] = RatFunc(P[i] * k[i], nxt)

    def __call__(self, f):
        return substitute_ratfunc(f, self.images, self.ring)

    def square_is_identity(self):
        return all(self(self.images[v]) == RatFunc(self.ring.gen(v)) for v in self.images)


def geometric_R_apply(n, j, f, ring):
    """Apply R_j (columns j, j+1 of a network ring) to a ring element."""
    return GeometricR(n, j, ring)(f)


# ---------------------------------------------------------------- quantum geometric

class QuantumGeometricR:
    """p_i -> k_i^-1 q_i k_{i+1},  q_i -> k_{i+1}^-1 p_i k_i  on a quantum torus."""

    def __init__(self, n, j=None, torus=None):
        if n < 3:
            raise ValueError("need n >= 3")
        self.n, self.j = n, j
        if torus is None:
            torus = lambda_pq(n) if j is None else lambda_snake(n, j + 1)
        self.torus = torus
        self.left, self.right = pq_labels(n, j)
        self.P = {i: torus.gen(self.left[i - 1]) for i in range(1, n + 1)}
        self.Q = {i: torus.gen(self.right[i - 1]) for i in range(1, n + 1)}
        self.kappa = {i: kappa_eps(self.P, self.Q, n, i) for i in range(1, n + 1)}
        kn = {i: poly(self.kappa[i]) for i in self.kappa}
        ki = {i: inv(kn[i]) for i in kn}
        self.images = {}
        for i in range(1, n + 1):
            nxt = cyc(i + 1, n)
            self.images[self.left[i - 1]] = mul(ki[i], gen(self.right[i - 1]), kn[nxt])
            self.images[self.right[i - 1]] = mul(ki[nxt], gen(self.left[i - 1]), kn[i])

    def __call__(self, expr, memo=None):
        return substitute(expr, self.images, memo)

    def classical(self):
        return GeometricR(self.n, self.j)


def quantum_geometric_R(n, j=None, torus=None):
    return QuantumGeometricR(n, j, torus)


def lax_cleared_identities(n, torus=None):
    """Pairs of torus elements whose equality amounts to preservation of the
    product of the two Lax matrices, after multiplying through by kappa:
      k_i p_i q_i = q_i p_i k_i
      k_{i+1} (p_{i+1} + q_i) = q_{i+1} k_{i+2} + p_i k_i
    """
    R = QuantumGeometricR(n, torus=torus)
    P, Q, k = R.P, R.Q, R.kappa
    out = []
    for i in range(1, n + 1):
        a, b = cyc(i + 1, n), cyc(i + 2, n)
        out.append((k[i] * P[i] * Q[i], Q[i] * P[i] * k[i]))
        out.append((k[a] * (P[a] + Q[i]), Q[a] * k[b] + P[i] * k[i]))
    return out


def commutation_pairs(n, m, j):
    """Generator pairs of the network torus within columns j-1 .. j+2."""
    cols = [c for c in range(j - 1, j + 3) if 1 <= c <= m]
    labels = [("q", c, i) for c in cols for i in range(1, n + 1)]
    return [(a, b) for x, a in enumerate(labels) for b in labels[x + 1:]]


def commutation_checks(R, pairs):
    """(lhs, rhs) with lhs = R(a) R(b) and rhs = eps^lam R(b) R(a)."""
    T = R.torus
    out = []
    for a, b in pairs:
        ra, rb = R.images.get(a, gen(a)), R.images.get(b, gen(b))
        out.append((mul(ra, rb), mul(eps(T.commutation(a, b)), rb, ra)))
    return out


# ---------------------------------------------------------------- quantum y-seeds

def quantum_y_mutation(quiver, values, k):
    """Quantum y-mutation of SkewExpr values at k (matrix taken before mutation)."""
    if k in quiver.frozen:
        raise ValueError("cannot mutate at frozen vertex %r" % (k,))
    yk = values[k]
    yk_inv = inv(yk)
    out = {}
    for i, yi in values.items():
        if i == k:
            out[i] = yk_inv
            continue
        b = quiver.b(k, i)
        if b == 0:
            out[i] = yi
        elif b > 0:
            fs = [inv(add1(mul(eps(2 * s - 1), yk_inv))) for s in range(1, b + 1)]
            out[i] = mul(yi, *fs)
        else:
            fs = [add1(mul(eps(2 * s - 1), yk)) for s in range(1, -b + 1)]
            out[i] = mul(yi, *fs)
    return out


def add1(x):
    return const(1) + x


class QYSeed(_Seed):
    """Quantum y-seed: values are SkewExpr in the initial y generators; the
    torus is the y-torus of the initial exchange matrix."""

    def __init__(self, quiver, values, torus=None):
        super().__init__(quiver, values)
        self.torus = torus

    @classmethod
    def initial(cls, quiver):
        return cls(quiver, {v: gen(v) for v in quiver.labels}, lambda_y(quiver))

    @classmethod
    def _make(cls, proto, quiver, values):
        return cls(quiver, values, proto.torus)

    def mutate(self, k):
        return QYSeed(self.quiver.mutate(k), quantum_y_mutation(self.quiver, self.values, k),
                      self.torus)


def quantum_cluster_R_y(n, c, m, torus=None):
    """Closed form of the quantum cluster R-matrix on cycle c of Q_{n,m}:
        y_i   -> a_{i+2}^-1 y_{i+1}^-1 a_i
        y_i^- -> a_i^-1 (eps y_i y_i^-) a_{i+1}
        y_i^+ -> a_{i+1}^-1 (eps y_{i+1} y_i^+) a_{i+2}
    with a_i = 1 + eps y_i + eps^2 y_i y_{i+1} + ...  The outer cycles only
    carry the rule for the side that exists.  Returns label -> SkewExpr."""
    if torus is None:
        torus = lambda_y(build_Q(n, m))
    lo, mid, hi = cycle_names(n, c)
    Y = {i: torus.gen(mid(i)) for i in range(1, n + 1)}
    al = {i: poly(alpha_eps(Y, n, i, torus)) for i in range(1, n + 1)}
    al_inv = {i: inv(al[i]) for i in al}
    A = lambda i: al[cyc(i, n)]
    Ai = lambda i: al_inv[cyc(i, n)]
    out = {}
    for i in range(1, n + 1):
        out[mid(i)] = mul(Ai(i + 2), poly(Y[cyc(i + 1, n)].inverse()), A(i))
        if c > 0:
            out[lo(i)] = mul(Ai(i), poly((Y[i] * torus.gen(lo(i))).scale_eps(1)), A(i + 1))
        if c < m:
            out[hi(i)] = mul(Ai(i + 1), poly((Y[cyc(i + 1, n)] * torus.gen(hi(i))).scale_eps(1)),
                             A(i + 2))
    return out


# ---------------------------------------------------------------- embeddings

def iota_m(n, m, ring=None):
    """q_{j,i} -> x_{j-1,i} x_{j,i+1} / (x_{j-1,i+1} x_{j,i}) * X[(j-1,i+1) -> (j,i)]
    as Laurent monomials over the quiver with diagonal frozen vertices."""
    if ring is None:
        ring = LaurentRing(build_Q_tilde_prime(n, m).labels)
    out = {}
    for j in range(1, m + 1):
        for i in range(1, n + 1):
            ip = cyc(i + 1, n)
            out[("q", j, i)] = ring.monomial({
                (j - 1, i): 1, (j, ip): 1, (j - 1, ip): -1, (j, i): -1,
                frozen_label((j - 1, ip), (j, i)): 1})
    return out


def iota(n, ring=None):
    """Two-column version: p = column 1, q = column 2."""
    if ring is None:
        ring = LaurentRing(build_Q_tilde_prime(n, 2).labels)
    full = iota_m(n, 2, ring)
    out = {}
    for i in range(1, n + 1):
        out[("p", i)] = full[("q", 1, i)]
        out[("q", i)] = full[("q", 2, i)]
    return out


def iota_kappa_closed(n, i, ring):
    """Closed expression for the image of kappa_i under iota:
    x_i^2/(x_i^- x_i^+) * sum_j x^-_{i-j} x^+_{i-j-1}/(x_{i-j} x_{i-j-1})
    times the diagonal frozen weights."""
    lo, mid, hi = cycle_names(n, 1)
    g = ring.gen
    Xlo = lambda l: g(frozen_label(lo(l + 1), mid(l)))      # (l+1)^- -> l
    Xhi = lambda l: g(frozen_label(mid(l + 1), hi(l)))      # l+1 -> l^+
    total = ring.zero()
    for j in range(n):
        t = g(lo(i - j)) * g(hi(i - j - 1)) * (g(mid(i - j)) * g(mid(i - j - 1))) ** -1
        for l in range(1, j + 1):
            t = t * Xlo(i - l)
        for l in range(j + 2, n + 1):
            t = t * Xhi(i - l)
        total = total + t
    return total * g(mid(i)) ** 2 * (g(lo(i)) * g(hi(i))) ** -1


def tilde_R_x_on_prime(n, ring):
    """Enriched cluster R-matrix on the middle cycle of Q~'_{n,2}: the images
    of every generator of ``ring``, with the frozen vertices absent from the
    primed quiver specialised to 1."""
    full_ring = LaurentRing(build_Q_tilde(n, 2).labels)
    present = set(ring.names)
    proj = {v: (ring.gen(v) if v in present else ring.one()) for v in full_ring.names}
    out = {v: ring.gen(v) for v in ring.names}
    for i in range(1, n + 1):
        out[(1, i)] = closed_tilde_R(n, 1, full_ring, i).substitute(proj, ring.one())
    for a, b in closed_tilde_R_frozen(n, 1).items():
        if a in present:
            out[a] = ring.gen(b) if b in present else ring.one()
    return out


def iota_intertwines(n, points=20, p=2**31 - 1, seed=0):
    """iota o R and R~_x o iota agree at random F_p points on every p_i, q_i.
    Returns (ok, first failing label or None)."""
    ring = LaurentRing(build_Q_tilde_prime(n, 2).labels)
    io = iota(n, ring)
    R = GeometricR(n)
    Rt = tilde_R_x_on_prime(n, ring)
    io_rf = {v: RatFunc(x) for v, x in io.items()}
    rt_rf = {v: RatFunc(x) for v, x in Rt.items()}
    lhs = {v: substitute_ratfunc(R.images[v], io_rf, ring) for v in R.images}
    rhs = {v: substitute_ratfunc(io[v], rt_rf, ring) for v in R.images}
    rng = random.Random(seed)
    for _ in range(points):
        pt = {v: rng.randrange(1, p) for v in ring.names}
        for v in R.images:
            try:
                if lhs[v].eval_mod(pt, p) != rhs[v].eval_mod(pt, p):
                    return False, v
            except ZeroDivisionError:
                continue
    return True, None


def y_prime_labels(n, m):
    return [(j, i) for j in range(1, m) for i in range(1, n + 1)]


def phi_eps(n, m, torus=None):
    """y_{j,i} -> eps^-1 q_{j,i}^-1 q_{j+1,i-1} for 1 <= j <= m-1, as torus
    monomials in the network torus."""
    if torus is None:
        torus = lambda_snake(n, m)
    out = {}
    for j, i in y_prime_labels(n, m):
        out[(j, i)] = (torus.gen(("q", j, i), -1) * torus.gen(("q", j + 1, cyc(i - 1, n)))).scale_eps(-1)
    return out


def phi_homomorphism_defects(n, m):
    """Pairs (a, b) of Y' where the commutation exponent of the images
    differs from the y-torus exponent.  Empty when phi is a homomorphism."""
    T = lambda_snake(n, m)
    ph = phi_eps(n, m, T)
    Yt = lambda_y(build_Q(n, m))
    bad = []
    labels = y_prime_labels(n, m)
    for a in labels:
        (ea,) = ph[a].terms
        for b in labels:
            (eb,) = ph[b].terms
            if alpha_exponent(T, ea, eb) != Yt.commutation(a, b):
                bad.append((a, b))
    return bad


def phi_alpha_identity(n, m, j, i):
    """phi(a_{i+1}) on cycle j and (q^-_{i-1} ... q^-_{i-n+1})^-1 k_i, where
    q^- is column j and q column j+1; returns both sides as torus elements."""
    T = lambda_snake(n, m)
    ph = phi_eps(n, m, T)
    Ymap = {v: ph[v] for v in ph}

    def img(lab):
        return Ymap[lab]

    # alpha on cycle j written in phi images
    total = T.one()
    t = T.one()
    for k in range(1, n):
        t = t * img((j, cyc(i + 1 + k - 1, n)))
        total = total + t.scale_eps(k)
    P = {r: T.gen(("q", j, r)) for r in range(1, n + 1)}
    Q = {r: T.gen(("q", j + 1, r)) for r in range(1, n + 1)}
    mono = T.one()
    for l in range(1, n):
        mono = mono * P[cyc(i - l, n)]
    return total, mono.inverse() * kappa_eps(P, Q, n, i)


def iota_phi_classical(n, m, ring=None):
    """Composite y -> network -> (x, X) at eps = 1: Laurent monomials."""
    if ring is None:
        ring = LaurentRing(build_Q_tilde_prime(n, m).labels)
    io = iota_m(n, m, ring)
    return {(j, i): io[("q", j, i)] ** -1 * io[("q", j + 1, cyc(i - 1, n))]
            for j, i in y_prime_labels(n, m)}


def xhat_monomials(n, m, ring=None):
    """prod_u x_u^{b_uv} for every mutable v of Q~'_{n,m} in Y'."""
    Qp = build_Q_tilde_prime(n, m)
    if ring is None:
        ring = LaurentRing(Qp.labels)
    return {v: ring.monomial({u: Qp.b(u, v) for u in Qp.labels if Qp.b(u, v)})
            for v in y_prime_labels(n, m)}


def psi_RR_pairs(n, m, j, ytorus=None, qtorus=None):
    """Pairs (R_j(phi(y_v)), phi(R_{M_j}(y_v))) for every v of Y' on the
    cycles j-1, j, j+1."""
    qtorus = qtorus or lambda_snake(n, m)
    ytorus = ytorus or lambda_y(build_Q(n, m))
    Rq = QuantumGeometricR(n, j, qtorus)
    ph = {v: poly(x) for v, x in phi_eps(n, m, qtorus).items()}
    Ry = quantum_cluster_R_y(n, j, m, ytorus)
    out = []
    for v, rhs_y in sorted(Ry.items()):
        if v not in ph:
            continue
        lhs = Rq(ph[v])
        rhs = substitute(rhs_y, ph)
        out.append((v, lhs, rhs))
    return out
