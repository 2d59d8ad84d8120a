import itertools
from functools import lru_cache

import pytest
from hypothesis import given
from hypothesis import strategies as st

from hermcoh.schubert import (
    Grassmannian,
    chern_of_quotient,
    chern_of_tautological,
    integrate,
    jacobi_trudi,
    multiply,
    normalize_partition,
    partitions_in_box,
    pieri_multiply,
    to_text,
)

G = Grassmannian(3, 5)
BOX = G.partitions()


@lru_cache(maxsize=None)
def syt_count(la):
    """Standard Young tableaux by removing corners."""
    if not la:
        return 1
    total = 0
    for i in range(len(la)):
        if i == len(la) - 1 or la[i] > la[i + 1]:
            total += syt_count(normalize_partition(la[:i] + (la[i] - 1,) + la[i + 1:]))
    return total


def schur_poly(la, nvars=3):
    """Schur polynomial as {exponents: coeff} from semistandard tableaux."""
    la = tuple(la) + (0,) * (nvars - len(la))
    cells = [(r, c) for r in range(nvars) for c in range(la[r])]
    out = {}

    def fill(i, tab):
        if i == len(cells):
            exps = [0] * nvars
            for v in tab.values():
                exps[v] += 1
            out[tuple(exps)] = out.get(tuple(exps), 0) + 1
            return
        r, c = cells[i]
        lo = 0
        if c > 0:
            lo = tab[(r, c - 1)]
        if r > 0:
            lo = max(lo, tab[(r - 1, c)] + 1)
        for v in range(lo, nvars):
            tab[(r, c)] = v
            fill(i + 1, tab)
            del tab[(r, c)]

    fill(0, {})
    return out


def poly_product(a, b):
    out = {}
    for m1, c1 in a.items():
        for m2, c2 in b.items():
            m = tuple(x + y for x, y in zip(m1, m2))
            out[m] = out.get(m, 0) + c1 * c2
    return {m: c for m, c in out.items() if c}


def schur_expand(f, nvars=3):
    """Coefficients of s_nu in a symmetric f via the alternant a_delta * f."""
    delta = tuple(range(nvars - 1, -1, -1))
    alt = {}
    for perm in itertools.permutations(range(nvars)):
        sign = 1
        for i in range(nvars):
            for j in range(i + 1, nvars):
                if perm[i] > perm[j]:
                    sign = -sign
        alt[tuple(delta[perm[i]] for i in range(nvars))] = sign
    prod = poly_product(alt, f)
    out = {}
    for m, c in prod.items():
        if all(m[i] > m[i + 1] for i in range(nvars - 1)):
            out[normalize_partition(tuple(m[i] - delta[i] for i in range(nvars)))] = c
    return out


def test_box_and_duality():
    assert G.dim == 6 and G.top == (2, 2, 2)
    assert G.dual((2, 1)) == (2, 1)
    assert G.dual((1,)) == (2, 2, 1)
    assert G.dual(()) == (2, 2, 2)


def test_betti_numbers_are_gaussian_binomial():
    # [5 choose 3]_t by the q-Pascal recursion
    @lru_cache(maxsize=None)
    def gbin(n, k):
        if k == 0 or k == n:
            return (1,)
        a, b = gbin(n - 1, k - 1), gbin(n - 1, k)
        out = [0] * (k * (n - k) + 1)
        for i, x in enumerate(a):
            out[i] += x
        for i, x in enumerate(b):
            out[i + k] += x
        return tuple(out)

    assert tuple(G.betti()) == gbin(5, 3) == (1, 1, 2, 2, 2, 1, 1)
    assert Grassmannian(2, 4).betti() == list(gbin(4, 2))


def test_pieri_examples():
    s1 = G.schubert(1)
    assert s1 * s1 == G.schubert(1, 1) + G.schubert(2)
    assert (G.schubert(2, 2, 2) * s1).is_zero()
    # (2,2,2)/(2,1,1) is a vertical strip, so no horizontal 2-strip fits
    assert pieri_multiply(G.schubert(2, 1, 1), 2).is_zero()
    assert pieri_multiply(G.schubert(2, 1, 1), 1) == G.schubert(2, 2, 1)


def test_products():
    assert G.schubert(2) * G.schubert(1, 1) == G.schubert(2, 1, 1)
    assert G.schubert(2) * G.schubert(2) == G.schubert(2, 2)
    assert integrate(G.schubert(2, 1) * G.schubert(2, 1)) == 1


@pytest.mark.parametrize("la", BOX)
def test_powers_of_s1_count_tableaux(la):
    got = (G.schubert(1) ** sum(la)).coefficient(la)
    assert got == syt_count(la)


def test_degree_of_grassmannian():
    assert integrate(G.schubert(1) ** 6) == syt_count((2, 2, 2)) == 5


@pytest.mark.parametrize("la", BOX)
def test_poincare_duality(la):
    for mu in G.partitions(G.dim - sum(la)):
        assert integrate(G.schubert(la) * G.schubert(mu)) == (1 if mu == G.dual(la) else 0)


box = st.sampled_from(BOX)


@given(box, box)
def test_products_match_schur_polynomial_oracle(la, mu):
    oracle = schur_expand(poly_product(schur_poly(la), schur_poly(mu)))
    oracle = {nu: c for nu, c in oracle.items() if G.contains(nu)}
    assert multiply(G.schubert(la), G.schubert(mu)).terms == oracle


@given(box, box, box)
def test_product_associative_commutative(a, b, c):
    A, B, C = G.schubert(a), G.schubert(b), G.schubert(c)
    assert A * B == B * A
    assert (A * B) * C == A * (B * C)


def test_jacobi_trudi_small():
    assert dict(jacobi_trudi((1, 1))) == {(1, 1): 1, (2,): -1}


def test_chern_classes():
    assert chern_of_tautological(G, 1) == -G.schubert(1)
    assert chern_of_tautological(G, 3) == -G.schubert(1, 1, 1)
    assert chern_of_quotient(G, 2) == G.schubert(2)
    # c(S) c(Q) = 1
    cS = sum((chern_of_tautological(G, i) for i in range(4)), G.zero())
    cQ = sum((chern_of_quotient(G, i) for i in range(3)), G.zero())
    assert cS * cQ == G.one()


def test_mod_2_and_text():
    x = G.schubert(1, modulus=2) ** 6
    assert x.is_zero() is False and to_text(x) == "s[2,2,2]"
    assert to_text(G.schubert(1) ** 2 * 2 - G.schubert(2)) == "2*s[1,1] + s[2]"
    assert to_text(G.one()) == "1"


def test_partition_validation():
    with pytest.raises(ValueError):
        normalize_partition((1, 2))
    with pytest.raises(ValueError):
        G.zero() + Grassmannian(2, 4).one()
    assert list(partitions_in_box(1, 1)) == [(), (1,)]
