"""Highway paths on the cylindric network and the loop symmetric functions
they measure.

Coordinates: vertical wires are columns 1..m (left to right), horizontal
wires are rows (integers on the universal cover, rows decrease going up).
A highway path enters column j along a row and either goes straight
through, picking up the weight q_j^(row), or turns up one row and back
right, picking up nothing.  So a path is its entry row and one up/straight
choice per column; two paths share an edge exactly when they enter some
column boundary on the same row (same row mod n on the cylinder itself).
"""
import itertools
from dataclasses import dataclass

from .oracle import gen, inv, mul, poly
from .qtorus import alpha_exponent, lambda_snake


def chi(z, n):
    """1 if z = 0 mod n, else 0."""
    return 1 if z % n == 0 else 0


class CylNetwork:
    def __init__(self, n, m, torus=None):
        if n < 2 or m < 1:
            raise ValueError("need n >= 2 and m >= 1")
        self.n, self.m = n, m
        self.torus = torus or lambda_snake(n, m)

    def label(self, j, row):
        return ("q", j, (row - 1) % self.n + 1)

    def monomial(self, cells):
        """Ordered product of the weights at (column, row) cells."""
        out = self.torus.one()
        for j, row in cells:
            out = out * self.torus.gen(self.label(j, row))
        return out

    def __repr__(self):
        return "CylNetwork(n=%d, m=%d)" % (self.n, self.m)


@dataclass(frozen=True)
class HighwayPath:
    """Entry row at column ``start`` and one flag per column start..m:
    True = turn up one row, False = go straight and pick up the weight."""
    source: int
    ups: tuple
    start: int = 1

    @property
    def sink(self):
        return self.source - sum(self.ups)

    def rows(self):
        """Row entering each column boundary start, ..., m+1."""
        out, r = [self.source], self.source
        for u in self.ups:
            r -= u
            out.append(r)
        return out

    def cells(self):
        """(column, row) of every weight picked up, in visiting order."""
        out, r = [], self.source
        for k, u in enumerate(self.ups):
            if u:
                r -= 1
            else:
                out.append((self.start + k, r))
        return out

    def snake_indices(self):
        return [row + j - 1 for j, row in self.cells()]

    def s_interval(self):
        """[a, b] of snake indices picked up; None for an empty path."""
        s = self.snake_indices()
        if not s:
            return None
        if s != list(range(s[0], s[0] + len(s))):
            raise AssertionError("snake indices of a highway path are consecutive")
        return (s[0], s[-1])

    def weight(self, net):
        return net.monomial(self.cells())

    def split(self, after):
        """Cut after ``after`` columns: the two pieces as paths."""
        head = HighwayPath(self.source, self.ups[:after], self.start)
        tail = HighwayPath(self.rows()[after], self.ups[after:], self.start + after)
        return head, tail


def enumerate_highway_paths(net, source, sink, start=1):
    """All highway paths entering column ``start`` at ``source`` and leaving
    column m at ``sink`` (rows on the cover; the displacement source - sink
    fixes the homology class)."""
    width = net.m - start + 1
    k = source - sink
    if not 0 <= k <= width:
        return []
    out = []
    for up_cols in itertools.combinations(range(width), k):
        ups = tuple(c in up_cols for c in range(width))
        out.append(HighwayPath(source, ups, start))
    return out


def intersect(P, Q, n=None):
    """Shared edge: same entry row at some common column boundary (mod n
    when n is given, i.e. on the cylinder)."""
    rp = dict(zip(range(P.start, P.start + len(P.rows())), P.rows()))
    rq = dict(zip(range(Q.start, Q.start + len(Q.rows())), Q.rows()))
    for j in set(rp) & set(rq):
        a, b = rp[j], rq[j]
        if (a - b) % n == 0 if n else a == b:
            return True
    return False


def path_families(net, sources, sinks, cover=True):
    """Non-intersecting families (P_1, ..., P_r), P_i from sources[i] to sinks[i]."""
    if len(sources) != len(sinks):
        raise ValueError("sources and sinks must have equal length")
    choices = [enumerate_highway_paths(net, s, t) for s, t in zip(sources, sinks)]
    mod = None if cover else net.n
    for fam in itertools.product(*choices):
        if all(not intersect(fam[a], fam[b], mod)
               for a in range(len(fam)) for b in range(a + 1, len(fam))):
            yield fam


def measurement(net, sources, sinks, cover=True):
    """Sum over non-intersecting families of wt(P_1) ... wt(P_r)."""
    total = net.torus.zero()
    for fam in path_families(net, sources, sinks, cover):
        w = net.torus.one()
        for P in fam:
            w = w * P.weight(net)
        total = total + w
    return total


# ---------------------------------------------------------------- loop e

def loop_e(net, k, r):
    """sum_{j_1 < ... < j_k} q_{j_1}^(r+1-j_1) ... q_{j_k}^(r+k-j_k)."""
    if k == 0:
        return net.torus.one()
    if k < 0 or k > net.m:
        return net.torus.zero()
    total = net.torus.zero()
    for js in itertools.combinations(range(1, net.m + 1), k):
        total = total + net.monomial([(j, r + t + 1 - j) for t, j in enumerate(js)])
    return total


def e_interval(net, a, b):
    """Generating function of highway paths with snake interval [a, b]."""
    return loop_e(net, b - a + 1, a)


def e_as_measurement(net, k, r):
    return measurement(net, [r], [r - (net.m - k)])


def lax_matrix(net, j):
    """M(q_j; t): q_j^(i) on the diagonal, 1 below it, t in the corner.
    Entries are dicts t-degree -> NCLaurent."""
    n, T = net.n, net.torus
    M = [[{} for _ in range(n)] for _ in range(n)]
    for i in range(n):
        M[i][i] = {0: T.gen(net.label(j, i + 1))}
        if i + 1 < n:
            M[i + 1][i] = {0: T.one()}
    M[0][n - 1] = {1: T.one()}
    return M


def _tmul(a, b):
    out = {}
    for s, x in a.items():
        for u, y in b.items():
            z = x * y
            out[s + u] = out[s + u] + z if s + u in out else z
    return {s: x for s, x in out.items() if x}


def transfer_product(net):
    """M(q_1; t) M(q_2; t) ... M(q_m; t) with factor order kept."""
    n = net.n
    acc = lax_matrix(net, 1)
    for j in range(2, net.m + 1):
        B = lax_matrix(net, j)
        new = [[{} for _ in range(n)] for _ in range(n)]
        for i in range(n):
            for k in range(n):
                cell = {}
                for l in range(n):
                    for s, x in _tmul(acc[i][l], B[l][k]).items():
                        cell[s] = cell[s] + x if s in cell else x
                new[i][k] = {s: x for s, x in cell.items() if x}
        acc = new
    return acc


# ---------------------------------------------------------------- tableaux

class SkewShape:
    """lambda / mu with column ranges: column c holds rows mu'_c+1 .. lambda'_c."""

    def __init__(self, lam, mu=()):
        lam, mu = list(lam), list(mu)
        mu = mu + [0] * (len(lam) - len(mu))
        if any(a < b for a, b in zip(lam, mu)) or len(mu) > len(lam):
            raise ValueError("mu must be contained in lambda")
        if any(lam[i] < lam[i + 1] for i in range(len(lam) - 1)) or \
                any(mu[i] < mu[i + 1] for i in range(len(mu) - 1)):
            raise ValueError("not a partition")
        self.lam, self.mu = lam, mu
        ncols = lam[0] if lam else 0
        self.columns = []
        for c in range(1, ncols + 1):
            top = sum(1 for x in mu if x >= c) + 1
            bottom = sum(1 for x in lam if x >= c)
            self.columns.append((top, bottom))

    @classmethod
    def parse(cls, text):
        """'2,1' or '3,2/1'."""
        if "/" in text:
            a, b = text.split("/")
        else:
            a, b = text, ""
        nums = lambda s: [int(x) for x in s.replace(" ", "").split(",") if x]
        return cls(nums(a), nums(b))

    def cells(self):
        return [(c, i) for c, (t, b) in enumerate(self.columns, start=1) for i in range(t, b + 1)]

    def __len__(self):
        return len(self.cells())

    def __repr__(self):
        return "SkewShape(%s/%s)" % (self.lam, self.mu)


def _fill(cells, cond_pairs, m):
    """Backtracking fill of cells with 1..m under (u, v, strict) constraints
    T(u) <= T(v) (or < when strict).  Cells must be listed so that every
    constraint's u precedes v or v precedes u."""
    pos = {c: k for k, c in enumerate(cells)}
    before = {c: [] for c in cells}
    for u, v, strict in cond_pairs:
        if pos[u] < pos[v]:
            before[v].append((u, "lo", strict))
        else:
            before[u].append((v, "hi", strict))
    out = []
    T = {}

    def rec(k):
        if k == len(cells):
            out.append(dict(T))
            return
        c = cells[k]
        lo, hi = 1, m
        for other, kind, strict in before[c]:
            x = T[other]
            if kind == "lo":
                lo = max(lo, x + 1 if strict else x)
            else:
                hi = min(hi, x - 1 if strict else x)
        for val in range(lo, hi + 1):
            T[c] = val
            rec(k + 1)
        T.pop(c, None)

    rec(0)
    return out


def tableaux(shape, m):
    """Semistandard fillings of a skew shape with 1..m, as dicts
    (column, row) -> entry."""
    cells = shape.cells()
    cs = set(cells)
    conds = []
    for c, i in cells:
        if (c + 1, i) in cs:
            conds.append(((c, i), (c + 1, i), False))
        if (c, i + 1) in cs:
            conds.append(((c, i), (c, i + 1), True))
    return _fill(cells, conds, m)


def reading_word(T, r, n, columns=None):
    """(column of network, row) factors: boxes read column by column left to
    right, each column top to bottom; box in row i, column c with entry t
    contributes q_t^(i - c - t + r + 1)."""
    cols = sorted({c for c, _ in T}) if columns is None else columns
    out = []
    for c in cols:
        for i in sorted(i for cc, i in T if cc == c):
            t = T[(c, i)]
            out.append((t, (i - c - t + r + 1 - 1) % n + 1))
    return out


def word_monomial(net, word):
    out = net.torus.one()
    for t, row in word:
        out = out * net.torus.gen(("q", t, row))
    return out


def loop_schur(net, shape, r):
    total = net.torus.zero()
    for T in tableaux(shape, net.m):
        total = total + word_monomial(net, reading_word(T, r, net.n))
    return total


def shape_paths(shape, r, m):
    """Sources and sinks (cover rows) of the paths dual to the columns."""
    src = [t - c + r for c, (t, b) in enumerate(shape.columns, start=1)]
    snk = [b - c + r - m + 1 for c, (t, b) in enumerate(shape.columns, start=1)]
    return src, snk


def loop_schur_measurement(net, shape, r):
    src, snk = shape_paths(shape, r, net.m)
    return measurement(net, src, snk, cover=True)


# ---------------------------------------------------------------- cylindric

class CylindricShape:
    """Periodic skew shape: the plane modulo (x, y) -> (x + n - s, y + s).

    ``columns`` gives (top, bottom) rows for the n - s columns of one
    fundamental domain, starting at column ``first``; column c + (n - s)
    holds the rows of column c moved up by s.
    """

    def __init__(self, n, s, columns, first=1):
        if n <= 2:
            raise ValueError("cylindric shapes need n > 2")
        if not 0 < n - s:
            raise ValueError("need s < n")
        if len(columns) != n - s:
            raise ValueError("need one (top, bottom) pair per column of the domain")
        self.n, self.s, self.first = n, s, first
        self.base = [tuple(c) for c in columns]
        for c in range(first, first + 2 * (n - s)):
            (t0, b0), (t1, b1) = self.column(c), self.column(c + 1)
            if t1 > t0 or b1 > b0:
                raise ValueError("not a convex cylindric shape")
            if b0 < t0 - 1:
                raise ValueError("column with negative height")

    @property
    def width(self):
        return self.n - self.s

    def column(self, c):
        """(top, bottom) of column c of the periodic shape."""
        k, off = divmod(c - self.first, self.width)
        t, b = self.base[off]
        return t - k * self.s, b - k * self.s

    def rebased(self, first):
        """Same shape, fundamental domain starting at column ``first``."""
        cols = [self.column(c) for c in range(first, first + self.width)]
        return CylindricShape(self.n, self.s, cols, first)

    def domain_columns(self):
        return list(range(self.first, self.first + self.width))

    def cells(self):
        return [(c, i) for c in self.domain_columns()
                for i in range(self.column(c)[0], self.column(c)[1] + 1)]

    def normalize(self, cell):
        """The representative of a cell inside the fundamental domain."""
        c, i = cell
        k = (c - self.first) // self.width
        return c - k * self.width, i + k * self.s

    def __repr__(self):
        return "CylindricShape(n=%d, s=%d, %s)" % (self.n, self.s, self.base)


def cylindric_tableaux(D, m):
    """Semistandard fillings of a cylindric shape with 1..m (on one domain)."""
    cells = D.cells()
    cs = set(cells)
    conds = set()
    for c, i in cells:
        for nb, strict in (((c + 1, i), False), ((c, i + 1), True)):
            lo, hi = D.column(nb[0])
            if lo <= nb[1] <= hi:
                v = D.normalize(nb)
                if v == (c, i):
                    raise ValueError("degenerate cylindric shape")
                conds.add(((c, i), v, strict))
        if not cs:
            break
    return _fill(cells, sorted(conds), m)


def cylindric_reading_word(T, D, r):
    return reading_word(T, r, D.n, D.domain_columns())


def cylindric_loop_schur(net, D, r):
    if D.n != net.n:
        raise ValueError("shape and network disagree on n")
    total = net.torus.zero()
    for T in cylindric_tableaux(D, net.m):
        total = total + word_monomial(net, cylindric_reading_word(T, D, r))
    return total


def cylindric_paths(D, r, m):
    src, snk = [], []
    for c in D.domain_columns():
        t, b = D.column(c)
        src.append(t - c + r)
        snk.append(b - c + r - m + 1)
    return src, snk


def cylindric_measurement(net, D, r):
    src, snk = cylindric_paths(D, r, net.m)
    return measurement(net, src, snk, cover=False)


# ---------------------------------------------------------------- alpha / beta

def alpha_PP(a, b, c, n):
    """Commutation exponent of the two pieces of a highway path cut between
    snake indices b and b+1, pieces covering [a, b] and [b+1, c]."""
    if not a <= b < c:
        raise ValueError("need a <= b < c")
    return 1 - chi(a - b - 1, n) - chi(b - c, n) + chi(a - c - 1, n)


def alpha_PQ(a, b, c, d, n):
    """Commutation exponent alpha(P, Q) for non-crossing highway paths with
    s(P) = [a, b], s(Q) = [c, d], c < a."""
    if not (a <= b and c <= d and c < a):
        raise ValueError("need a <= b, c <= d and c < a")
    return -chi(c - b - 1, n) + chi(c - a, n) + chi(d - a + 1, n)


def beta(intervals, n):
    """sum over i < j with b_i < b_j of (-1 - chi(a_j - b_j - 1) + chi(a_j - b_i - 1))."""
    total = 0
    for i in range(len(intervals)):
        for j in range(i + 1, len(intervals)):
            bi, (aj, bj) = intervals[i][1], intervals[j]
            if bi < bj:
                total += -1 - chi(aj - bj - 1, n) + chi(aj - bi - 1, n)
    return total


def monomial_alpha(net, x, y):
    """alpha with x y = eps^alpha y x for torus monomials."""
    (ex,), (ey,) = x.terms, y.terms
    return alpha_exponent(net.torus, ex, ey)


def apply_m_k(P, k):
    """Move the weight on snake k one column left when the path turns up in
    the column before it: straight at column j-1, up at column j."""
    s = P.s_interval()
    if s is None or not s[0] <= k <= s[1]:
        return P
    rows = P.rows()
    for idx, (j, row) in enumerate(P.cells()):
        if row + j - 1 != k:
            continue
        pos = j - P.start
        if j <= 1 or pos == 0:
            return P
        prev = pos - 1
        if P.ups[prev] and rows[prev] == row + 1:
            ups = list(P.ups)
            ups[prev], ups[pos] = False, True
            return HighwayPath(P.source, tuple(ups), P.start)
        return P
    return P


def _sign(perm):
    s, seen = 1, set()
    for i in range(len(perm)):
        if i in seen:
            continue
        j, length = i, 0
        while j not in seen:
            seen.add(j)
            j = perm[j]
            length += 1
        if length % 2 == 0:
            s = -s
    return s


def e_expansion_terms(a, b, n, m):
    """Terms (sign, eps power, b') of the expansion of a measurement with
    snake starts a and ends b into products of e(a_i, b'_i)."""
    if len({x % n for x in b}) != len(b):
        raise ValueError("path ends must be distinct mod n")
    r = len(a)
    base = beta(list(zip(a, b)), n)
    seen = {}
    target = sum(b)
    for perm in itertools.permutations(range(r)):
        options = []
        for i in range(r):
            res = b[perm[i]] % n
            lo, hi = a[i] - 1, a[i] - 1 + m
            options.append([x for x in range(lo, hi + 1) if x % n == res])
        for bp in itertools.product(*options):
            if sum(bp) != target or bp in seen:
                continue
            seen[bp] = (_sign(perm), beta(list(zip(a, bp)), n) - base, bp)
    return [seen[k] for k in sorted(seen)]


def expand_measurement_in_e(net, a, b):
    """sum over b' of sign * eps^(beta(a,b') - beta(a,b)) e(a_1,b'_1) ... e(a_r,b'_r)."""
    total = net.torus.zero()
    for sgn, power, bp in e_expansion_terms(a, b, net.n, net.m):
        t = net.torus.one()
        for ai, bi in zip(a, bp):
            t = t * e_interval(net, ai, bi)
        total = total + t.scale_eps(power) * sgn
    return total


def measurement_from_intervals(net, a, b, cover=False):
    """Direct measurement for paths with s(P_i) = [a_i, b_i]."""
    src = list(a)
    snk = [bi - net.m + 1 for bi in b]
    return measurement(net, src, snk, cover)


# ---------------------------------------------------------------- lens moves

def yb_move(p, q, r):
    """(p, q, r) -> ((p+r)^-1 r q, p + r, (p+r)^-1 p q)."""
    s = p + r
    si = inv(s)
    return mul(si, r, q), s, mul(si, p, q)


def yb_local_relations(p, q, r):
    """The five measurements that must agree before and after the move, as
    (lhs, rhs) pairs: qr = p'q', p+r = q', q = p'+r', qp = r'q', pq = q'r'."""
    p2, q2, r2 = yb_move(p, q, r)
    return [(mul(q, r), mul(p2, q2)), (p + r, q2), (q, p2 + r2),
            (mul(q, p), mul(r2, q2)), (mul(p, q), mul(q2, r2))]


def r_parameter(R, i):
    """r_i = k_i^-1 (p_n ... p_1 - q_n ... q_1) for a QuantumGeometricR."""
    n, T = R.n, R.torus
    top_p, top_q = T.one(), T.one()
    for k in range(n, 0, -1):
        top_p = top_p * R.P[k]
        top_q = top_q * R.Q[k]
    return mul(inv(poly(R.kappa[(i - 1) % n + 1])), poly(top_p - top_q))


def push_lens_around(R):
    """Create the lens with parameter r_{n+1}, push it down through rows
    n, ..., 1 by Yang-Baxter moves.  Returns (new p_i, q_i images, list of
    lens parameters r_{n+1}, r_n, ..., r_1)."""
    n = R.n
    r = r_parameter(R, n + 1)
    images, trail = {}, [r]
    for i in range(n, 0, -1):
        p_new, q_new, r = yb_move(r, gen(R.left[i - 1]), gen(R.right[i - 1]))
        images[R.left[i - 1]] = p_new
        images[R.right[i - 1]] = q_new
        trail.append(r)
    return images, trail


def lens_checks(R):
    """(name, lhs, rhs) triples: pushed images equal the closed form, each
    lens parameter matches its formula, r p q = q p r before each move, and
    the lens parameter comes back to its starting value."""
    n = R.n
    images, trail = push_lens_around(R)
    out = []
    for v in images:
        out.append(("image %s" % (v,), images[v], R.images[v]))
    for step, i in enumerate(range(n, 0, -1)):
        r = trail[step]
        p, q = gen(R.left[i - 1]), gen(R.right[i - 1])
        out.append(("relation row %d" % i, mul(r, p, q), mul(q, p, r)))
        out.append(("parameter row %d" % i, trail[step + 1], r_parameter(R, i)))
    out.append(("closes", trail[-1], trail[0]))
    return out
