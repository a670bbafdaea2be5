import random

import pytest

from clusterr.core import RatFunc
from clusterr.fixtures import (WORKED_STAGES, geometric_R_q1_n4, worked_final, worked_tables,
                               worked_word)
from clusterr.oracle import (ProbablyEqual, SpecConfig, equal_classical, equal_skew,
                             eval_classical, gen, structurally_equal)
from clusterr.qtorus import lambda_snake
from clusterr.quiver import build_Q, build_Q_tilde
from clusterr.rmatrices import (GeometricR, QYSeed, QuantumGeometricR, commutation_checks,
                                commutation_pairs, iota_intertwines, lax_cleared_identities,
                                phi_alpha_identity, phi_homomorphism_defects, psi_RR_pairs,
                                quantum_cluster_R_y, quantum_y_mutation)
from clusterr.seeds import apply_word, r_word

FAST = SpecConfig(trials=3)


def test_printed_R_q1_n4():
    R = GeometricR(4)
    assert R.images[("q", 1)] == geometric_R_q1_n4(R.ring)


@pytest.mark.parametrize("n", [3, 4])
def test_geometric_R_involution(n):
    assert GeometricR(n).square_is_identity()


def test_geometric_R_preserves_products():
    # R(p_i) R(q_i) = q_i p_i for commuting variables, and the total products survive
    n = 4
    R = GeometricR(n)
    g = R.ring.gen
    for i in range(1, n + 1):
        assert R.images[("p", i)] * R.images[("q", i)] == RatFunc(g(("p", i)) * g(("q", i)))


def test_geometric_R_rejects_small_n():
    with pytest.raises(ValueError):
        GeometricR(1)
    with pytest.raises(ValueError):
        QuantumGeometricR(2)


def test_quantum_R_classical_shadow():
    n = 3
    Rq = QuantumGeometricR(n)
    Rc = Rq.classical()
    labels = Rq.torus.labels
    rng = random.Random(0)
    p = 2**61 - 1
    # evaluating the quantum images at eps = 1 agrees with the commuting R
    for _ in range(5):
        pt = {v: rng.randrange(1, p) for v in labels}
        for v in labels:
            assert eval_classical(Rq.images[v], pt, p) == Rc.images[v].eval_mod(pt, p)
    pairs = [(Rq(Rq.images[v]), gen(v)) for v in labels]
    assert isinstance(equal_classical(pairs, labels, 4, p, rng), ProbablyEqual)


def test_quantum_R_involution_n3():
    R = QuantumGeometricR(3)
    pairs = [(R(R.images[v]), gen(v)) for v in R.images]
    assert isinstance(equal_skew(pairs, R.torus, FAST), ProbablyEqual)


def test_quantum_R_preserves_commutation_n3():
    n, m, j = 3, 3, 1
    R = QuantumGeometricR(n, j, lambda_snake(n, m))
    pairs = commutation_checks(R, commutation_pairs(n, m, j))
    assert isinstance(equal_skew(pairs, R.torus, FAST), ProbablyEqual)


@pytest.mark.parametrize("n", [3, 4])
def test_lax_cleared_identities(n):
    for a, b in lax_cleared_identities(n):
        assert a == b


def _stages():
    s = QYSeed.initial(build_Q(3, 2))
    out = {}
    for name, tok in zip(WORKED_STAGES, worked_word()):
        s = s.mutate(tok[1]) if tok[0] == "mu" else s.swap(tok[1], tok[2])
        out[name] = s
    return out


@pytest.mark.parametrize("stage", WORKED_STAGES)
def test_printed_quantum_y_stage(stage):
    s = _stages()[stage]
    for v, x in worked_tables()[stage].items():
        assert structurally_equal(s.values[v], x, s.torus), v


def test_printed_quantum_y_final_forms():
    T = QYSeed.initial(build_Q(3, 2)).torus
    cl = quantum_cluster_R_y(3, 1, 2, T)
    for v, x in worked_final().items():
        assert structurally_equal(cl[v], x, T)


def test_worked_sequence_reaches_final_forms():
    s = _stages()[WORKED_STAGES[-1]]
    pairs = [(s.values[v], x) for v, x in worked_final().items()]
    assert isinstance(equal_skew(pairs, s.torus, FAST), ProbablyEqual)


@pytest.mark.parametrize("n,c", [(3, 1), (3, 0), (4, 1)])
def test_quantum_cluster_R_matches_mutations(n, c):
    m = 2
    Q = build_Q(n, m)
    s = QYSeed.initial(Q)
    end = apply_word(s, r_word(n, c, 1))
    cl = quantum_cluster_R_y(n, c, m, s.torus)
    pairs = [(end.values[v], cl.get(v, gen(v))) for v in Q.labels]
    assert isinstance(equal_skew(pairs, s.torus, FAST), ProbablyEqual)


def test_quantum_y_mutation_twice():
    Q = build_Q(3, 2)
    s = QYSeed.initial(Q)
    t = s.mutate((1, 2)).mutate((1, 2))
    pairs = [(t.values[v], gen(v)) for v in Q.labels]
    assert isinstance(equal_skew(pairs, s.torus, FAST), ProbablyEqual)


def test_quantum_y_mutation_frozen_refused():
    Qt = build_Q_tilde(3, 2)
    with pytest.raises(ValueError):
        quantum_y_mutation(Qt, {v: gen(v) for v in Qt.labels}, next(iter(Qt.frozen)))


@pytest.mark.parametrize("n", [3, 4])
def test_iota_intertwines(n):
    ok, bad = iota_intertwines(n, points=20)
    assert ok, bad


@pytest.mark.parametrize("n,m", [(3, 3), (4, 3), (3, 4)])
def test_phi_is_homomorphism(n, m):
    assert phi_homomorphism_defects(n, m) == []


@pytest.mark.parametrize("n", [3, 4])
def test_phi_alpha_identity(n):
    m = 3
    for j in (1, 2):
        for i in range(1, n + 1):
            a, b = phi_alpha_identity(n, m, j, i)
            assert a == b


def test_psi_intertwines_R_n3():
    n, m, j = 3, 3, 1
    T = lambda_snake(n, m)
    pairs = [(a, b) for _, a, b in psi_RR_pairs(n, m, j, qtorus=T)]
    assert pairs
    assert isinstance(equal_skew(pairs, T, FAST), ProbablyEqual)
