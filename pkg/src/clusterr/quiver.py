"""Exchange matrices with labelled vertices, matrix mutation, and the
cylindric quivers built from stacked n-cycles.

Vertex labels:
  * mutable vertex on cycle j at position i: the tuple ``(j, i)``, i in 1..n
  * frozen vertex attached to the arrow a -> b: ``('v', a, b)``
  * anything else hashable (ints for small hand-made quivers)
"""
import re

import numpy as np


def cyc(i, n):
    """Reduce an index into 1..n."""
    return (i - 1) % n + 1


def frozen_label(a, b):
    return ("v", a, b)


def is_frozen_label(v):
    return isinstance(v, tuple) and len(v) == 3 and v[0] == "v"


def format_label(v):
    if is_frozen_label(v):
        return "v[%s>%s]" % (format_label(v[1]), format_label(v[2]))
    if isinstance(v, tuple) and len(v) == 2:
        return "%d.%d" % v
    return str(v)


_FROZEN_RE = re.compile(r"^v\[(.+)>(.+)\]$")


def parse_label(text):
    text = text.strip()
    m = _FROZEN_RE.match(text)
    if m:
        return frozen_label(parse_label(m.group(1)), parse_label(m.group(2)))
    if "." in text:
        j, i = text.split(".")
        return (int(j), int(i))
    try:
        return int(text)
    except ValueError:
        raise ValueError("cannot parse vertex label %r" % text) from None


class ExchangeMatrix:
    """Skew-symmetric integer matrix on labelled vertices; b[u, v] > 0 means
    b[u, v] arrows u -> v.  Frozen-to-frozen entries are kept at zero."""

    def __init__(self, labels, B, frozen=()):
        self.labels = list(labels)
        self.index = {v: k for k, v in enumerate(self.labels)}
        if len(self.index) != len(self.labels):
            raise ValueError("duplicate labels")
        self.frozen = frozenset(frozen)
        if not self.frozen <= set(self.labels):
            raise ValueError("frozen vertex not among labels")
        B = np.array(B, dtype=np.int64).reshape(len(self.labels), len(self.labels))
        if not (B == -B.T).all():
            raise ValueError("exchange matrix must be skew-symmetric")
        self.B = B
        self._zero_frozen_block()

    @classmethod
    def from_arrows(cls, labels, arrows, frozen=()):
        """Arrows are (u, v) pairs or (u, v, multiplicity); opposite arrows cancel."""
        labels = list(labels)
        idx = {v: k for k, v in enumerate(labels)}
        B = np.zeros((len(labels), len(labels)), dtype=np.int64)
        for arr in arrows:
            u, v = arr[0], arr[1]
            w = arr[2] if len(arr) > 2 else 1
            B[idx[u], idx[v]] += w
            B[idx[v], idx[u]] -= w
        return cls(labels, B, frozen)

    def _zero_frozen_block(self):
        fz = [self.index[v] for v in self.frozen]
        if fz:
            self.B[np.ix_(fz, fz)] = 0

    def copy(self):
        return ExchangeMatrix(self.labels, self.B.copy(), self.frozen)

    @property
    def mutable(self):
        return [v for v in self.labels if v not in self.frozen]

    def b(self, u, v):
        return int(self.B[self.index[u], self.index[v]])

    def arrows(self):
        """List of (u, v, multiplicity) with positive multiplicity."""
        out = []
        for a, u in enumerate(self.labels):
            for c, v in enumerate(self.labels):
                if self.B[a, c] > 0:
                    out.append((u, v, int(self.B[a, c])))
        return out

    def mutate(self, k):
        return mutate_matrix(self, k)

    def relabel(self, mapping):
        """Rename vertices; ``mapping`` sends old label -> new label."""
        labels = [mapping.get(v, v) for v in self.labels]
        frozen = [mapping.get(v, v) for v in self.frozen]
        return ExchangeMatrix(labels, self.B.copy(), frozen)

    def swap(self, u, v):
        """The vertex permutation exchanging u and v."""
        return self.relabel({u: v, v: u})

    def restrict(self, keep):
        keep = [v for v in self.labels if v in set(keep)]
        idx = [self.index[v] for v in keep]
        return ExchangeMatrix(keep, self.B[np.ix_(idx, idx)],
                              [v for v in self.frozen if v in set(keep)])

    def aligned(self, labels):
        idx = [self.index[v] for v in labels]
        return self.B[np.ix_(idx, idx)]

    def __eq__(self, other):
        if not isinstance(other, ExchangeMatrix):
            return False
        if set(self.labels) != set(other.labels) or self.frozen != other.frozen:
            return False
        return bool((self.B == other.aligned(self.labels)).all())

    __hash__ = None

    def __repr__(self):
        return "ExchangeMatrix(%d vertices, %d frozen)" % (len(self.labels), len(self.frozen))

    def to_text(self):
        """One ``u -> v`` per arrow (repeated for multiple arrows), sorted."""
        lines = []
        for u, v, w in self.arrows():
            lines.extend(["%s -> %s" % (format_label(u), format_label(v))] * w)
        lines.sort()
        head = ["# vertices: " + " ".join(format_label(v) for v in self.labels)]
        if self.frozen:
            head.append("# frozen: " + " ".join(sorted(format_label(v) for v in self.frozen)))
        return "\n".join(head + lines) + "\n"

    @classmethod
    def from_text(cls, text):
        labels, frozen, arrows = None, [], []
        for line in text.splitlines():
            line = line.strip()
            if not line:
                continue
            if line.startswith("# vertices:"):
                labels = [parse_label(t) for t in line.split(":", 1)[1].split()]
            elif line.startswith("# frozen:"):
                frozen = [parse_label(t) for t in line.split(":", 1)[1].split()]
            elif line.startswith("#"):
                continue
            else:
                u, v = line.split("->")
                arrows.append((parse_label(u), parse_label(v)))
        if labels is None:
            seen = []
            for u, v in arrows:
                for w in (u, v):
                    if w not in seen:
                        seen.append(w)
            labels = seen
        return cls.from_arrows(labels, arrows, frozen)


def mutate_matrix(Bm, k):
    """Matrix mutation at a mutable vertex k."""
    if k in Bm.frozen:
        raise ValueError("cannot mutate at frozen vertex %r" % (k,))
    if k not in Bm.index:
        raise KeyError(k)
    B = Bm.B
    c = Bm.index[k]
    col = B[:, c]
    row = B[c, :]
    new = B + (np.outer(np.abs(col), row) + np.outer(col, np.abs(row))) // 2
    new[c, :] = -row
    new[:, c] = -col
    return ExchangeMatrix(Bm.labels, new, Bm.frozen)


class VertexPermutation:
    """Bijection of labels, applied as new-label-at-position."""

    def __init__(self, mapping):
        self.mapping = dict(mapping)
        if sorted(map(repr, self.mapping)) != sorted(map(repr, self.mapping.values())):
            raise ValueError("not a permutation")

    @classmethod
    def transposition(cls, u, v):
        return cls({u: v, v: u})

    def __call__(self, v):
        return self.mapping.get(v, v)

    def inverse(self):
        return VertexPermutation({b: a for a, b in self.mapping.items()})


def cycle_arrows(n, m):
    """Arrows of the stacked-cycle quiver as a list with multiplicity +-1.

    Each vertex (j, i) points to (j, i+1), to (j-1, i) and to (j+1, i-1)
    when those cycles exist; 2-cycles cancel when summed.
    """
    arrows = []
    for j in range(m + 1):
        for i in range(1, n + 1):
            arrows.append(((j, i), (j, cyc(i + 1, n))))
            if j >= 1:
                arrows.append(((j, i), (j - 1, i)))
            if j < m:
                arrows.append(((j, i), (j + 1, cyc(i - 1, n))))
    return arrows


def q_labels(n, m):
    return [(j, i) for j in range(m + 1) for i in range(1, n + 1)]


def build_Q(n, m):
    """Stack of m+1 oriented n-cycles (columns 0..m) with the connecting
    triangles; all vertices mutable."""
    if n < 2 or m < 1:
        raise ValueError("need n >= 2 and m >= 1")
    return ExchangeMatrix.from_arrows(q_labels(n, m), cycle_arrows(n, m))


def _with_frozen(Q, arrows):
    """Attach a frozen vertex v to each arrow a -> a': arrows a' -> v -> a."""
    labels = list(Q.labels)
    extra = []
    for a, b in arrows:
        f = frozen_label(a, b)
        labels.append(f)
        extra.append((b, f))
        extra.append((f, a))
    base = [(u, v, w) for u, v, w in Q.arrows()]
    return ExchangeMatrix.from_arrows(labels, base + extra, [frozen_label(a, b) for a, b in arrows])


def build_Q_tilde(n, m):
    """Q with one frozen vertex per arrow."""
    Q = build_Q(n, m)
    return _with_frozen(Q, [(u, v) for u, v, w in Q.arrows() for _ in range(w)])


def diagonal_arrows(n, m):
    """The arrows (j-1, i+1) -> (j, i) joining consecutive cycles."""
    return [((j - 1, cyc(i + 1, n)), (j, i)) for j in range(1, m + 1) for i in range(1, n + 1)]


def build_Q_tilde_prime(n, m):
    """Q with frozen vertices only on the diagonal arrows (j-1, i+1) -> (j, i)."""
    return _with_frozen(build_Q(n, m), diagonal_arrows(n, m))


def mutable_on_cycle(j, n):
    return [(j, i) for i in range(1, n + 1)]


def structural_oracle_Ai(n, i, literal=False):
    """Arrows of Q_{n,2} after mutating the middle cycle at 1, 2, ..., i,
    assembled block by block from the closed description (middle cycle,
    middle to each outer cycle, within the outer cycles, outer to outer).

    Labels: the middle cycle is column 1, the outer cycles columns 0 and 2.
    Valid for 0 <= i <= n-2.  By default two index slips in the printed
    enumeration are corrected: the lower block includes (i+2)^- -> i+1, and
    the last upper arrow is n -> (n-1)^+.  ``literal=True`` keeps the lists
    exactly as printed (these disagree with direct mutation).
    """
    if not 0 <= i <= n - 2:
        raise ValueError("need 0 <= i <= n-2")
    if i == 0:
        return sorted(build_Q(n, 2).arrows())
    lo = lambda k: (0, cyc(k, n))
    mid = lambda k: (1, cyc(k, n))
    hi = lambda k: (2, cyc(k, n))
    arrows = set()
    # middle cycle
    if i < n - 2:
        arrows |= {(mid(k), mid(k + 1)) for k in range(1, i)}
        arrows |= {(mid(i), mid(n)), (mid(n), mid(i + 1)), (mid(i + 1), mid(i))}
        arrows |= {(mid(k), mid(k + 1)) for k in range(i + 1, n)}
    else:
        arrows |= {(mid(k), mid(k + 1)) for k in range(1, n - 2)}
        arrows |= {(mid(n - 2), mid(n)), (mid(n - 1), mid(n - 2))}
    # middle and lower cycle
    arrows.add((lo(1), mid(1)))
    arrows |= {(mid(k), lo(k + 1)) for k in range(1, i + 1)}
    arrows |= {(lo(k + 2), mid(k)) for k in range(1, i)}
    arrows |= {(mid(k), lo(k)) for k in range(i + 2, n + 1)}
    arrows |= {(lo(k + 1), mid(k)) for k in range(i + 2 if literal else i + 1, n)}
    # middle and upper cycle
    arrows.add((hi(n), mid(1)))
    arrows |= {(mid(k), hi(k)) for k in range(1, i + 1)}
    arrows |= {(hi(k + 1), mid(k)) for k in range(1, i)}
    tail = [(mid(k + 1), hi(k)) for k in range(i + 1, n)]
    if literal and tail:
        tail[-1] = (hi(n), mid(n - 1))
    arrows |= set(tail)
    arrows |= {(hi(k), mid(k)) for k in range(i + 1, n)}
    # within the outer cycles, and between them
    arrows |= {(lo(k), lo(k + 1)) for k in range(2, n + 1)}
    arrows |= {(hi(k), hi(k + 1)) for k in range(1, n)}
    arrows |= {(hi(1), lo(1)), (lo(2), hi(n))}
    Q = ExchangeMatrix.from_arrows(q_labels(n, 2), sorted(arrows))
    return sorted(Q.arrows())
