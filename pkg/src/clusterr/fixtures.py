"""Hand-transcribed published values used as fixed test data.

Each builder returns objects in this package's own types so the checks can
compare them with computed results.  Nothing here is derived by running the
code under test.
"""
from .core import RatFunc
from .oracle import const, eps, gen, inv, mul
from .quiver import frozen_label
from .seeds import parse_word


# --------------------------------------------------------- quantum y example
# n = 3, middle cycle c = 1 of Q_{3,2}; rows i = 1, 2, 3, columns
# (lower cycle, middle cycle, upper cycle).

WORKED_WORD = "mu(1.1), mu(1.2), mu(1.3), swap(1.2,1.3), mu(1.1)"
WORKED_STAGES = ["y[1]", "y[2]", "y[3]", "y[1bar]", "y'"]


def _plus(Y):
    return const(1) + mul(eps(1), Y)           # (1 + eps Y)


def _frac(Y):
    return inv(const(1) + mul(eps(1), inv(Y)))  # 1 / (1 + eps Y^-1)


def worked_tables():
    """Stage name -> {label: SkewExpr} for the five printed matrices."""
    lo = lambda i: gen((0, i))
    y = lambda i: gen((1, i))
    hi = lambda i: gen((2, i))
    P, F = _plus, _frac
    y2_1 = mul(y(2), F(y(1)))
    y3_2 = mul(y(3), P(y(1)))
    y1_3 = mul(inv(y(1)), F(y2_1), P(y3_2))

    def table(rows):
        out = {}
        for i, (a, b, c) in enumerate(rows, start=1):
            out[(0, i)], out[(1, i)], out[(2, i)] = a, b, c
        return out

    t1 = table([
        (mul(lo(1), F(y(1))), inv(y(1)), mul(hi(1), P(y(1)))),
        (mul(lo(2), P(y(1))), y2_1, hi(2)),
        (lo(3), y3_2, mul(hi(3), F(y(1)))),
    ])
    t2 = table([
        (mul(lo(1), F(y(1))), mul(inv(y(1)), F(y2_1)), mul(hi(1), P(y(1)))),
        (mul(lo(2), P(y(1))), inv(y2_1), mul(hi(2), P(y2_1))),
        (mul(lo(3), P(y2_1)), y3_2, mul(hi(3), F(y(1)))),
    ])
    t3 = table([
        (mul(lo(1), F(y(1))), y1_3, mul(hi(1), P(y(1)))),
        (mul(lo(2), P(y(1))), inv(y2_1), mul(hi(2), P(y2_1), F(y3_2))),
        (mul(lo(3), P(y2_1), F(y3_2)), inv(y3_2), mul(hi(3), F(y(1)))),
    ])
    t1bar = table([
        (mul(lo(1), F(y(1))), y1_3, mul(hi(1), P(y(1)))),
        (mul(lo(2), P(y(1))), inv(y3_2), mul(hi(2), P(y2_1), F(y3_2))),
        (mul(lo(3), P(y2_1), F(y3_2)), inv(y2_1), mul(hi(3), F(y(1)))),
    ])
    tend = table([
        (mul(lo(1), F(y(1)), P(y1_3)), inv(y1_3), mul(hi(1), P(y(1)), F(y1_3))),
        (mul(lo(2), P(y(1)), F(y1_3)), mul(inv(y3_2), P(y1_3)), mul(hi(2), P(y2_1), F(y3_2))),
        (mul(lo(3), P(y2_1), F(y3_2)), mul(inv(y2_1), F(y1_3)), mul(hi(3), F(y(1)), P(y1_3))),
    ])
    return dict(zip(WORKED_STAGES, [t1, t2, t3, t1bar, tend]))


def worked_word():
    return parse_word(WORKED_WORD)


def worked_final():
    """The three arranged closed forms at the end of the example."""
    y = lambda i: gen((1, i))
    lo1, hi1 = gen((0, 1)), gen((2, 1))

    def a(i, j, k):
        return const(1) + mul(eps(1), y(i)) + mul(eps(2), y(i), y(j))

    return {
        (1, 1): mul(inv(a(3, 1, 2)), inv(y(2)), a(1, 2, 3)),
        (0, 1): mul(inv(a(1, 2, 3)), eps(1), y(1), lo1, a(2, 3, 1)),
        (2, 1): mul(inv(a(2, 3, 1)), eps(1), y(2), hi1, a(3, 1, 2)),
    }


def classical_final(ring):
    """eps = 1 shadow, as RatFunc over a ring with names ('y', (c, i))."""
    y = lambda c, i: ring.gen(("y", (c, i)))
    a = lambda i, j: 1 + y(1, i) + y(1, i) * y(1, j)
    return {
        (1, 1): RatFunc(a(1, 2), a(3, 1) * y(1, 2)),
        (0, 1): RatFunc(y(1, 1) * y(0, 1) * a(2, 3), a(1, 2)),
        (2, 1): RatFunc(y(1, 2) * y(2, 1) * a(3, 1), a(2, 3)),
    }


# --------------------------------------------------------- geometric R, n = 4

def geometric_R_q1_n4(ring):
    """Printed image of q_1 for n = 4 over a ring with ('p', i), ('q', i)."""
    p = lambda i: ring.gen(("p", i))
    q = lambda i: ring.gen(("q", i))
    num = p(1) * (q(1) * q(2) * q(3) + p(4) * q(1) * q(2) + p(3) * p(4) * q(1) + p(2) * p(3) * p(4))
    den = q(2) * q(3) * q(4) + p(1) * q(2) * q(3) + p(4) * p(1) * q(2) + p(3) * p(4) * p(1)
    return RatFunc(num, den)


# --------------------------------------------------------- simple and enriched R_x, n = 4
# Cycles M^-, M, M^+ are columns 0, 1, 2: x_i^- = (0, i), x_i = (1, i), x_i^+ = (2, i).

def _x(tag, i):
    return ({"-": 0, "": 1, "+": 2}[tag], i)


def simple_R_x1_n4(ring):
    """Printed R_x(x_1) for n = 4 (RatFunc)."""
    g = lambda tag, i: ring.gen(_x(tag, i))
    num = (g("-", 2) * g("", 3) * g("", 4) * g("+", 1) + g("-", 3) * g("", 4) * g("", 1) * g("+", 2)
           + g("-", 4) * g("", 1) * g("", 2) * g("+", 3) + g("-", 1) * g("", 2) * g("", 3) * g("+", 4))
    return RatFunc(num, g("", 2) * g("", 3) * g("", 4))


# frozen X_{a,b} written as ((tag, i), (tag, i)) pairs, one row per printed term
TILDE_R_X1_N4 = [
    ([("-", 2), ("", 3), ("", 4), ("+", 1)],
     [(("", 1), ("", 2)), (("+", 2), ("", 2)), (("-", 3), ("", 2)), (("+", 3), ("", 3)),
      (("-", 4), ("", 3)), (("+", 4), ("", 4)), (("-", 1), ("", 4))]),
    ([("-", 3), ("", 4), ("", 1), ("+", 2)],
     [(("", 2), ("", 3)), (("+", 3), ("", 3)), (("-", 4), ("", 3)), (("+", 4), ("", 4)),
      (("-", 1), ("", 4)), (("", 2), ("-", 2)), (("", 2), ("+", 1))]),
    ([("-", 4), ("", 1), ("", 2), ("+", 3)],
     [(("", 3), ("", 4)), (("+", 4), ("", 4)), (("-", 1), ("", 4)), (("", 2), ("-", 2)),
      (("", 2), ("+", 1)), (("", 3), ("-", 3)), (("", 3), ("+", 2))]),
    ([("-", 1), ("", 2), ("", 3), ("+", 4)],
     [(("", 4), ("", 1)), (("", 2), ("-", 2)), (("", 2), ("+", 1)), (("", 3), ("-", 3)),
      (("", 3), ("+", 2)), (("", 4), ("-", 4)), (("", 4), ("+", 3))]),
]


def tilde_R_x1_n4(ring):
    """Printed x_2 x_3 x_4 R~_x(x_1) for n = 4 as a Laurent polynomial."""
    total = ring.zero()
    for xs, Xs in TILDE_R_X1_N4:
        t = ring.one()
        for tag, i in xs:
            t = t * ring.gen(_x(tag, i))
        for a, b in Xs:
            t = t * ring.gen(frozen_label(_x(*a), _x(*b)))
        total = total + t
    return total


# --------------------------------------------------------- loop Schur, n = m = 3

def loop_schur_21(torus):
    """s_(2,1)^(1) for n = m = 3 as printed; q_a^(r) is column a, row r,
    i.e. label ('q', a, r).  Returns an NCLaurent in ``torus``."""
    q = lambda a, r: torus.gen(("q", a, r))
    s = q(1, 3) + q(2, 2) + q(3, 1)
    s2 = q(2, 2) + q(3, 1)
    return q(1, 1) * q(2, 1) * s + q(1, 1) * q(3, 3) * s + q(2, 3) * q(3, 3) * s2


LOOP_SCHUR_21_TABLEAUX = [
    ((1, 1), (2,)), ((1, 2), (2,)), ((1, 3), (2,)), ((1, 1), (3,)),
    ((1, 2), (3,)), ((1, 3), (3,)), ((2, 2), (3,)), ((2, 3), (3,)),
]


def reading_word_example():
    """The printed 1-reading word of the tableau rows [1,1,2,4],[2,3,3],[4]
    with n = 3: list of (column, row) in product order."""
    return [(1, 1), (2, 1), (4, 3), (1, 3), (3, 2), (2, 1), (3, 1), (4, 1)]


def reading_word_tableau():
    return [[1, 1, 2, 4], [2, 3, 3], [4]]


# --------------------------------------------------------- loop e, n = 3, m = 4

def loop_e_list_n3_m4(torus):
    """e_1^(1) .. e_4^(1) as printed, q_a^(r) = ('q', a, r)."""
    q = lambda a, r: torus.gen(("q", a, r))
    return {
        1: q(1, 1) + q(2, 3) + q(3, 2) + q(4, 1),
        2: q(1, 1) * q(2, 1) + q(1, 1) * q(3, 3) + q(1, 1) * q(4, 2) + q(2, 3) * q(3, 3)
        + q(2, 3) * q(4, 2) + q(3, 2) * q(4, 2),
        3: q(1, 1) * q(2, 1) * q(3, 1) + q(1, 1) * q(2, 1) * q(4, 3) + q(1, 1) * q(3, 3) * q(4, 3)
        + q(2, 3) * q(3, 3) * q(4, 3),
        4: q(1, 1) * q(2, 1) * q(3, 1) * q(4, 1),
    }


# --------------------------------------------------------- cylindric, n = m = 3, s = 1

CYLINDRIC_EXAMPLE = {"n": 3, "s": 1, "columns": [(1, 2), (1, 1)]}
CYLINDRIC_N4_EXAMPLE = {"n": 4, "s": 2, "columns": [(1, 3), (1, 1)]}
CYLINDRIC_N4_TABLEAU = {(1, 1): 1, (1, 2): 2, (1, 3): 4, (2, 1): 4}
CYLINDRIC_N4_WORD = [(1, 1), (2, 1), (4, 4), (4, 1)]
CYLINDRIC_N4_REJECTED = {(1, 1): 1, (1, 2): 2, (1, 3): 3, (2, 1): 4}


def cylindric_schur_example(torus):
    """s_D^(1) for the n = m = 3, s = 1 shape as printed (seven tableaux)."""
    q = lambda a, r: torus.gen(("q", a, r))
    return (q(1, 1) * q(2, 1) * (q(1, 3) + q(2, 2))
            + q(1, 1) * q(3, 3) * (q(1, 3) + q(2, 2) + q(3, 1))
            + q(2, 3) * q(3, 3) * (q(2, 2) + q(3, 1)))


# the expansion of M((4,3),(5,3)): (sign, eps power, b')
E_EXPANSION_EXAMPLE = {"a": (4, 3), "b": (5, 3),
                       "terms": [(1, 0, (5, 3)), (-1, -2, (3, 5)), (-1, 0, (6, 2))]}


def e_interval_examples(torus):
    """e(4,5), e(3,3) and e(a, a+2) for n = m = 3 as printed."""
    q = lambda a, r: torus.gen(("q", a, r))
    out = {(4, 5): q(1, 1) * q(2, 1) + q(2, 3) * q(3, 3) + q(1, 1) * q(3, 3),
           (3, 3): q(1, 3) + q(2, 2) + q(3, 1)}
    for a in range(1, 4):
        out[(a, a + 2)] = q(1, a) * q(2, a) * q(3, a)
    return out
