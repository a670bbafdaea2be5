import random

import pytest

from clusterr.core import LaurentRing, RatFunc, TropicalPoint
from clusterr.fixtures import classical_final, simple_R_x1_n4, tilde_R_x1_n4
from clusterr.quiver import build_Q, build_Q_tilde, cyc
from clusterr.seeds import (S_factor, XSeed, XYSeed, YSeedTropical, YSeedUniversal, apply_word,
                            check_period, closed_R_x, closed_R_y_classical, closed_R_y_tropical,
                            closed_tilde_R, closed_tilde_R_frozen, cyclic_range, format_word,
                            intermediate_half, parse_word, r_word, run_R_sequence)


def positive(values):
    return all(x.is_positive() for x in values)


def test_cyclic_range_convention():
    assert cyclic_range(2, 4, 4) == [2, 3, 4]
    assert cyclic_range(3, 1, 4) == [3, 4, 1]
    assert cyclic_range(2, 1, 4) == []
    assert cyclic_range(1, 1, 4) == [1]


def test_word_text_roundtrip():
    w = r_word(3, 1, 2, build_Q_tilde(3, 2))
    assert parse_word(format_word(w)) == w
    with pytest.raises(ValueError):
        parse_word("mu(1.1) swap(1.1)")


def test_x_mutation_twice():
    s = XSeed.initial(build_Q(3, 2))
    t = s.mutate((1, 2)).mutate((1, 2))
    assert t.quiver == s.quiver and t.values == s.values


def test_half_variables_n4():
    s = XSeed.initial(build_Q(4, 2))
    ring = s[(1, 1)].ring
    for i in (1, 2):
        s = s.mutate((1, i))
        for k in range(1, i + 1):
            assert s[(1, k)] == intermediate_half(4, 1, ring, k)


def test_positivity_along_random_words():
    rng = random.Random(11)
    Q = build_Q(3, 2)
    s = XSeed.initial(Q)
    for _ in range(7):
        s = s.mutate(rng.choice(Q.labels))
        assert positive(s.values.values())


def test_tropical_mutation_negates_at_k():
    Q = build_Q(3, 2)
    s = YSeedTropical.initial(Q)
    t = s.mutate((1, 1))
    assert t[(1, 1)] == s[(1, 1)].inverse()


def test_universal_negative_b():
    Q = build_Q(3, 2)
    s = YSeedUniversal.initial(Q)
    k = (1, 1)
    t = s.mutate(k)
    ring = s[k].ring
    y = lambda v: ring.gen(("y", v))
    for v in Q.labels:
        b = Q.b(k, v)
        if b < 0:
            want = RatFunc(y(v) * (1 + y(k)) ** (-b))
            assert t[v].as_ratfunc() == want
        elif b > 0:
            assert t[v].as_ratfunc() == RatFunc(y(v) * y(k) ** b, (1 + y(k)) ** b)


def test_pi_commutes_with_mutation_random_words():
    rng = random.Random(5)
    Q = build_Q(3, 2)
    for _ in range(5):
        u, t = YSeedUniversal.initial(Q), YSeedTropical.initial(Q)
        for _ in range(6):
            k = rng.choice(Q.labels)
            u, t = u.mutate(k), t.mutate(k)
            assert u.tropicalize().values == t.values


def test_pi_after_R_sequence():
    Q = build_Q(3, 2)
    u = run_R_sequence(YSeedUniversal.initial(Q), 3, 1, 1)
    t = run_R_sequence(YSeedTropical.initial(Q), 3, 1, 1)
    assert u.tropicalize().values == t.values


def test_printed_simple_R_x1_n4():
    Q = build_Q(4, 2)
    ring = LaurentRing(Q.labels)
    assert RatFunc(closed_R_x(4, 1, ring, 1)) == simple_R_x1_n4(ring)


def test_R_x_fixes_neighbour_cycles():
    Q = build_Q(3, 2)
    s = XSeed.initial(Q)
    end = run_R_sequence(s, 3, 1, 1)
    for i in range(1, 4):
        assert end[(0, i)] == s[(0, i)]
        assert end[(2, i)] == s[(2, i)]


@pytest.mark.parametrize("n", [3, 4])
def test_R_x_squared_is_identity(n):
    s = XSeed.initial(build_Q(n, 2))
    assert check_period(s, r_word(n, 1, 1) + r_word(n, 1, 1))


def test_printed_tilde_R_x1_n4():
    Qt = build_Q_tilde(4, 2)
    ring = LaurentRing(Qt.labels)
    den = ring.monomial({(1, j): 1 for j in (2, 3, 4)})
    assert closed_tilde_R(4, 1, ring, 1) * den == tilde_R_x1_n4(ring)


@pytest.mark.parametrize("n", [3, 4, 5])
def test_tilde_with_unit_weights_is_simple(n):
    Qt = build_Q_tilde(n, 2)
    ring = LaurentRing(Qt.labels)
    ones = {v: ring.one() if v in Qt.frozen else ring.gen(v) for v in Qt.labels}
    for i in range(1, n + 1):
        assert closed_tilde_R(n, 1, ring, i).substitute(ones, ring.one()) == closed_R_x(n, 1, ring, i)


def test_cycle_frozen_weights_fixed():
    n = 4
    fz = closed_tilde_R_frozen(n, 1)
    from clusterr.quiver import frozen_label
    for i in range(1, n + 1):
        X = frozen_label((1, i), (1, cyc(i + 1, n)))
        assert fz.get(X, X) == X


@pytest.mark.parametrize("n", [3, 4, 5])
def test_R_sequence_matches_closed_form(n):
    Q = build_Q(n, 2)
    s = XSeed.initial(Q)
    ring = s[(1, 1)].ring
    for j in range(1, n + 1):
        end = run_R_sequence(s, n, 1, j)
        assert end.quiver == Q
        assert positive(end.values.values())
        for i in range(1, n + 1):
            assert end[(1, i)] == closed_R_x(n, 1, ring, i)


@pytest.mark.parametrize("n", [3, 4, 5])
def test_tilde_R_sequence_matches_closed_form(n):
    Qt = build_Q_tilde(n, 2)
    s = XSeed.initial(Qt)
    ring = s[(1, 1)].ring
    fz = closed_tilde_R_frozen(n, 1)
    for j in range(1, n + 1):
        end = run_R_sequence(s, n, 1, j)
        assert end.quiver == Qt
        for i in range(1, n + 1):
            assert end[(1, i)] == closed_tilde_R(n, 1, ring, i)
        for v in Qt.frozen:
            assert end[v] == ring.gen(fz.get(v, v))


def test_tropical_R_sequence_matches_closed_form():
    n, m = 4, 3
    Q = build_Q(n, m)
    for c in range(m + 1):
        want = closed_R_y_tropical(n, c, m, Q.labels)
        s = YSeedTropical.initial(Q)
        end = run_R_sequence(s, n, c, 2)
        for v in Q.labels:
            assert end[v] == want.get(v, s[v])


def test_braid_word_is_tropical_period():
    n, m = 3, 3
    Q = build_Q(n, m)
    R = lambda c: r_word(n, c, 1)
    word = R(1) + R(2) + R(1) + R(2) + R(1) + R(2)  # (R1 R2 R1)(R2 R1 R2)^-1, each R an involution
    assert check_period(YSeedTropical.initial(Q), word)


def test_trivial_periods():
    Q = build_Q(3, 2)
    for s in (YSeedTropical.initial(Q), XSeed.initial(Q), XYSeed.initial(Q)):
        assert check_period(s, [])
        assert check_period(s, [("mu", (1, 2)), ("mu", (1, 2))])
        assert not check_period(s, [("mu", (1, 2))])


def test_printed_classical_y_n3():
    Q = build_Q(3, 2)
    ring = LaurentRing([("y", v) for v in Q.labels])
    got = closed_R_y_classical(3, 1, 2, ring)
    for v, f in classical_final(ring).items():
        assert got[v] == f


@pytest.mark.parametrize("n", [3, 4, 5])
def test_S_factor(n):
    ring = LaurentRing(build_Q(n, 2).labels)
    S = S_factor(n, 1, ring)
    for i in range(1, n + 1):
        assert closed_R_x(n, 1, ring, i) == S * ring.gen((1, i))


def test_xy_seed_tropical_half_matches():
    Q = build_Q(3, 2)
    s = XYSeed.initial(Q)
    t = YSeedTropical.initial(Q)
    for tok in r_word(3, 1, 1):
        s = apply_word(s, [tok])
        t = apply_word(t, [tok])
    assert s.y == t.values
    assert all(isinstance(v, TropicalPoint) for v in s.y.values())
