import itertools
import json
import random
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from hermcoh.hermitian import (
    GR,
    GPoly,
    HermitianMatrix,
    Inertia,
    NotHermitianError,
    as_matrix,
    characteristic_polynomial,
    clifford_family,
    conj_transpose,
    congruent,
    family_identities,
    family_matrix,
    identity,
    inertia,
    m_value,
    matmul,
    rank_exact,
    two_adic,
    verify_family,
    verify_invertible_span,
)

fractions = st.fractions(min_value=-5, max_value=5, max_denominator=5)
gaussians = st.builds(GR, fractions, fractions)


def leibniz_det(A):
    n = len(A)
    total = GR(0)
    for perm in itertools.permutations(range(n)):
        sign = 1
        for i in range(n):
            for j in range(i + 1, n):
                if perm[i] > perm[j]:
                    sign = -sign
        term = GR(sign)
        for i in range(n):
            term = term * A[i][perm[i]]
        total = total + term
    return total


def brute_rank(A):
    """Largest nonvanishing minor, by exhaustive search."""
    n, m = len(A), len(A[0])
    for k in range(min(n, m), 0, -1):
        for rows in itertools.combinations(range(n), k):
            for cols in itertools.combinations(range(m), k):
                if leibniz_det([[A[i][j] for j in cols] for i in rows]):
                    return k
    return 0


@st.composite
def hermitian(draw, max_size=4, low_rank=False):
    q = draw(st.integers(1, max_size))
    if low_rank:
        k = draw(st.integers(0, q))
        vecs = [[draw(gaussians) for _ in range(q)] for _ in range(k)]
        signs = [draw(st.sampled_from([1, -1])) for _ in range(k)]
        rows = [[GR(0)] * q for _ in range(q)]
        for v, s in zip(vecs, signs):
            for i in range(q):
                for j in range(q):
                    rows[i][j] = rows[i][j] + v[i] * v[j].conjugate() * s
        return HermitianMatrix(rows)
    rows = [[GR(0)] * q for _ in range(q)]
    for i in range(q):
        rows[i][i] = GR(draw(fractions))
        for j in range(i + 1, q):
            x = draw(gaussians)
            rows[i][j], rows[j][i] = x, x.conjugate()
    return HermitianMatrix(rows)


@given(gaussians, gaussians, gaussians)
def test_gaussian_field_axioms(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a.conjugate().conjugate() == a
    assert (a * b).conjugate() == a.conjugate() * b.conjugate()
    if b:
        assert (a / b) * b == a


def test_json_round_trip():
    A = family_matrix(Fraction(1, 2), GR(1, -3), GR(0, 2), GR(5))
    data = json.loads(json.dumps(A.to_json()))
    assert HermitianMatrix.from_json(data) == A
    assert data[0][1] == {"re_num": 1, "re_den": 1, "im_num": -3, "im_den": 1}


def test_rejects_non_hermitian():
    with pytest.raises(NotHermitianError):
        HermitianMatrix([[1, 2], [3, 1]])
    with pytest.raises(NotHermitianError):
        HermitianMatrix([[GR(0, 1)]])


def test_rank_examples():
    assert rank_exact(HermitianMatrix([[0, 0], [0, 0]])) == 0
    assert rank_exact(family_matrix(1, 0, 0, 0)) == 4


@given(hermitian(low_rank=True))
def test_rank_matches_brute_force(A):
    assert rank_exact(A) == brute_rank(A.rows())


@given(hermitian(max_size=3), st.integers(0, 10 ** 6))
def test_rank_and_inertia_invariant_under_congruence(A, seed):
    rng = random.Random(seed)
    q = A.size
    while True:
        P = [[GR(rng.randint(-3, 3), rng.randint(-3, 3)) for _ in range(q)] for _ in range(q)]
        if leibniz_det(P):
            break
    B = congruent(A, P)
    assert rank_exact(B) == rank_exact(A)
    assert inertia(B) == inertia(A)


@given(hermitian(low_rank=True))
def test_rank_is_positive_plus_negative(A):
    i = inertia(A)
    assert i.positive + i.negative == rank_exact(A)
    assert i.positive + i.negative + i.zero == A.size


def test_charpoly_of_diagonal():
    assert characteristic_polynomial(HermitianMatrix([[1, 0], [0, -2]])) == [-2, 1, 1]


def test_inertia_examples():
    assert inertia(HermitianMatrix([[1, 0, 0], [0, 1, 0], [0, 0, -1]])) == Inertia(2, 1, 0)
    fam = inertia(family_matrix(1, 0, 0, 0))
    assert fam.as_tuple() == (2, 2, 1) and fam.m == 2
    assert m_value(HermitianMatrix([[1, 0, 0], [0, -1, 0], [0, 0, 0]])) == 1
    assert m_value(HermitianMatrix([[1, 0], [0, 3]])) == 0


@given(st.lists(fractions, min_size=3, max_size=3).filter(any))
def test_pauli_combination_inertia_and_determinant(a):
    mats = clifford_family(2).matrices
    M = sum((A.scale(c) for A, c in zip(mats, a)), HermitianMatrix([[0, 0], [0, 0]]))
    assert inertia(M) == Inertia(1, 1, 0)
    assert leibniz_det(M.rows()) == -sum(c * c for c in a)


def test_two_adic():
    assert two_adic(12) == (1, 2)
    assert two_adic(1) == (0, 0)
    for q in [1, 2, 3, 4, 5, 6, 8, 96, 10 ** 6]:
        b, c = two_adic(q)
        assert q == 2 ** c * (2 * b + 1)


@pytest.mark.parametrize("q", [1, 2, 3, 4, 6, 8])
def test_clifford_relations(q):
    fam = clifford_family(q)
    assert fam.dimension == 2 * fam.c + 1
    mats = [A.rows() for A in fam.matrices]
    for i, A in enumerate(mats):
        assert matmul(A, A) == identity(q)
        assert conj_transpose(A) == A
        for B in mats[i + 1:]:
            anti = [[x + y for x, y in zip(r1, r2)] for r1, r2 in zip(matmul(A, B), matmul(B, A))]
            assert not any(x for row in anti for x in row)


def test_clifford_q1():
    assert clifford_family(1).matrices == (HermitianMatrix([[1]]),)


def test_invertible_span_passes():
    for q in (2, 8):
        rec = verify_invertible_span(clifford_family(q), trials=100, seed=5)
        assert rec.passed and rec.witness is None and rec.seed == 5


def test_identity_appended_fails_with_witness():
    mats = list(clifford_family(2).matrices) + [HermitianMatrix(identity(2))]
    rec = verify_invertible_span(mats, trials=20, seed=1)
    assert not rec.passed
    w = rec.witness["singular_combination"]
    assert w["rank"] < 2 and w["pair"] == [0, 3]


def test_family_is_hermitian_and_rank_regimes():
    assert rank_exact(family_matrix(1, 0, 0, 0)) == 4
    assert rank_exact(family_matrix(2, GR(1), 0, 0)) == 5
    assert rank_exact(family_matrix(1, GR(1, 1), GR(0, 1), 2)) == 4  # leading 3x3 block is singular here
    assert rank_exact(family_matrix(1, GR(1), 0, 0)) == 4  # |alpha| = |z|


def test_family_identities():
    ids = family_identities()
    assert all(v["passed"] for v in ids.values())
    assert ids["det_A3_vanishing_locus"]["powers"] == {"abs_z_sq": 1, "alpha_sq_minus_abs_z_sq": 1}
    assert ids["A5_square_at_z0"]["scalar"] == "alpha^2 + u_re^2 + u_im^2 + w_re^2 + w_im^2"


def test_verify_family_small_and_parallel_agree():
    a = verify_family(300, seed=3)
    b = verify_family(300, seed=3, workers=2)
    assert a.passed and a.to_json() == b.to_json()
    assert set(a.stats["rank_counts"]) <= {"4", "5"}


def test_fast_trial_matrix_agrees_with_public_constructor():
    from hermcoh.hermitian import _family_int_matrix, bareiss_rank
    rng = random.Random(0)
    for _ in range(50):
        a, zr, zi, ur, ui, wr, wi = (rng.randint(-3, 3) for _ in range(7))
        slow = family_matrix(a, GR(zr, zi), GR(ur, ui), GR(wr, wi))
        fast = _family_int_matrix(a, (zr, zi), (ur, ui), (wr, wi))
        assert [[GR(*e) for e in row] for row in fast] == slow.rows()
        assert bareiss_rank(fast) == rank_exact(slow)


def test_gpoly_division():
    x = GPoly.var(2, 0)
    y = GPoly.var(2, 1)
    p = (x * x - y) * (x + y)
    assert p.divide_exact(x * x - y) == x + y
    assert p.divide_exact(x - y - y) is None


def test_trials_must_be_positive():
    with pytest.raises(ValueError):
        verify_family(0)
