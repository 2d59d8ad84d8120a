"""Exact Hermitian linear algebra over the Gaussian rationals.

Rank uses fraction-free (Bareiss) elimination over the Gaussian integers
after clearing denominators.  Inertia comes from the exact characteristic
polynomial and Descartes' rule of signs, which is exact because Hermitian
characteristic polynomials are real-rooted.
"""

from __future__ import annotations

import math
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from functools import reduce
from typing import Sequence


class NotHermitianError(ValueError):
    pass


class GaussianRational:
    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        if isinstance(re, GaussianRational):
            re, im = re.re, re.im
        elif isinstance(re, complex):
            re, im = re.real, re.imag
        self.re = Fraction(re)
        self.im = Fraction(im)

    @classmethod
    def coerce(cls, x) -> GaussianRational:
        return x if isinstance(x, GaussianRational) else cls(x)

    def conjugate(self):
        return GaussianRational(self.re, -self.im)

    def norm(self) -> Fraction:
        return self.re * self.re + self.im * self.im

    def __add__(self, o):
        o = GaussianRational.coerce(o)
        return GaussianRational(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __sub__(self, o):
        o = GaussianRational.coerce(o)
        return GaussianRational(self.re - o.re, self.im - o.im)

    def __rsub__(self, o):
        return GaussianRational.coerce(o) - self

    def __mul__(self, o):
        o = GaussianRational.coerce(o)
        return GaussianRational(self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def __truediv__(self, o):
        o = GaussianRational.coerce(o)
        n = o.norm()
        if n == 0:
            raise ZeroDivisionError("Gaussian rational division by zero")
        num = self * o.conjugate()
        return GaussianRational(num.re / n, num.im / n)

    def __eq__(self, o):
        if isinstance(o, (int, Fraction, complex, GaussianRational)):
            o = GaussianRational.coerce(o)
            return self.re == o.re and self.im == o.im
        return NotImplemented

    def __hash__(self):
        return hash((self.re, self.im))

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def is_real(self) -> bool:
        return self.im == 0

    def __repr__(self):
        if not self.im:
            return f"GR({self.re})"
        return f"GR({self.re}, {self.im})"

    def to_json(self) -> dict:
        return {"re_num": self.re.numerator, "re_den": self.re.denominator,
                "im_num": self.im.numerator, "im_den": self.im.denominator}

    @classmethod
    def from_json(cls, d) -> GaussianRational:
        return cls(Fraction(d["re_num"], d["re_den"]), Fraction(d["im_num"], d["im_den"]))


GR = GaussianRational
I_UNIT = GR(0, 1)

Matrix = list[list[GaussianRational]]


def as_matrix(rows) -> Matrix:
    return [[GR.coerce(x) for x in row] for row in rows]


def identity(n: int) -> Matrix:
    return [[GR(1) if i == j else GR(0) for j in range(n)] for i in range(n)]


def zeros(n: int, m: int | None = None) -> Matrix:
    return [[GR(0) for _ in range(n if m is None else m)] for _ in range(n)]


def matmul(A: Matrix, B: Matrix) -> Matrix:
    m = len(B)
    p = len(B[0]) if B else 0
    out = []
    for row in A:
        new = []
        for j in range(p):
            acc = GR(0)
            for k in range(m):
                if row[k] and B[k][j]:
                    acc = acc + row[k] * B[k][j]
            new.append(acc)
        out.append(new)
    return out


def mat_add(A: Matrix, B: Matrix) -> Matrix:
    return [[a + b for a, b in zip(ra, rb)] for ra, rb in zip(A, B)]


def mat_scale(A: Matrix, c) -> Matrix:
    c = GR.coerce(c)
    return [[c * a for a in row] for row in A]


def conj_transpose(A: Matrix) -> Matrix:
    return [[A[i][j].conjugate() for i in range(len(A))] for j in range(len(A[0]))]


def kron(A: Matrix, B: Matrix) -> Matrix:
    return [[a * b for a in ra for b in rb] for ra in A for rb in B]


def block_diagonal(blocks: Sequence[Matrix]) -> Matrix:
    n = sum(len(b) for b in blocks)
    out = zeros(n)
    off = 0
    for b in blocks:
        for i, row in enumerate(b):
            for j, x in enumerate(row):
                out[off + i][off + j] = x
        off += len(b)
    return out


class HermitianMatrix:
    """Square matrix over the Gaussian rationals equal to its conjugate transpose."""

    __slots__ = ("entries",)

    def __init__(self, rows):
        entries = as_matrix(rows)
        q = len(entries)
        if any(len(r) != q for r in entries):
            raise NotHermitianError("matrix is not square")
        for i in range(q):
            for j in range(i, q):
                if entries[i][j] != entries[j][i].conjugate():
                    raise NotHermitianError(f"entry ({i},{j}) is not the conjugate of ({j},{i})")
        self.entries = tuple(tuple(r) for r in entries)

    @property
    def size(self) -> int:
        return len(self.entries)

    def rows(self) -> Matrix:
        return [list(r) for r in self.entries]

    def __eq__(self, other):
        return isinstance(other, HermitianMatrix) and self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def __add__(self, other):
        return HermitianMatrix(mat_add(self.rows(), other.rows()))

    def scale(self, c) -> HermitianMatrix:
        c = Fraction(c)
        return HermitianMatrix(mat_scale(self.rows(), c))

    def __repr__(self):
        return f"HermitianMatrix({self.size}x{self.size})"

    def to_json(self) -> list[list[dict]]:
        return [[x.to_json() for x in row] for row in self.entries]

    @classmethod
    def from_json(cls, data) -> HermitianMatrix:
        return cls([[GR.from_json(x) for x in row] for row in data])


# rank

def _to_gaussian_integers(A) -> list[list[list[int]]]:
    dens = [x.re.denominator for row in A for x in row] + [x.im.denominator for row in A for x in row]
    L = reduce(math.lcm, dens, 1)
    return [[[int(x.re * L), int(x.im * L)] for x in row] for row in A]


def _gi_div_exact(a, b):
    n = b[0] * b[0] + b[1] * b[1]
    re = a[0] * b[0] + a[1] * b[1]
    im = a[1] * b[0] - a[0] * b[1]
    qr, rr = divmod(re, n)
    qi, ri = divmod(im, n)
    if rr or ri:
        raise ArithmeticError("inexact division in fraction-free elimination")
    return [qr, qi]


def bareiss_rank(M: list[list[list[int]]]) -> int:
    """Rank of a Gaussian-integer matrix (entries ``[re, im]``); mutates ``M``."""
    rows = len(M)
    cols = len(M[0]) if rows else 0
    prev = [1, 0]
    rank = 0
    for k in range(min(rows, cols)):
        piv = None
        for i in range(k, rows):
            Mi = M[i]
            for j in range(k, cols):
                if Mi[j][0] or Mi[j][1]:
                    piv = (i, j)
                    break
            if piv:
                break
        if piv is None:
            break
        i, j = piv
        if i != k:
            M[i], M[k] = M[k], M[i]
        if j != k:
            for row in M:
                row[j], row[k] = row[k], row[j]
        pr, pi = M[k][k]
        Mk = M[k]
        for i in range(k + 1, rows):
            Mi = M[i]
            ar, ai = Mi[k]
            for j in range(k + 1, cols):
                xr, xi = Mi[j]
                br, bi = Mk[j]
                # p*x - a*b
                nr = pr * xr - pi * xi - (ar * br - ai * bi)
                ni = pr * xi + pi * xr - (ar * bi + ai * br)
                Mi[j] = _gi_div_exact([nr, ni], prev) if prev != [1, 0] else [nr, ni]
            Mi[k] = [0, 0]
        prev = [pr, pi]
        rank += 1
    return rank


def rank_exact(A) -> int:
    """Exact rank of a matrix over the Gaussian rationals."""
    rows = A.rows() if isinstance(A, HermitianMatrix) else as_matrix(A)
    if not rows or not rows[0]:
        return 0
    return bareiss_rank(_to_gaussian_integers(rows))


# inertia

@dataclass(frozen=True)
class Inertia:
    positive: int
    negative: int
    zero: int

    @property
    def rank(self) -> int:
        return self.positive + self.negative

    @property
    def m(self) -> int:
        return min(self.positive, self.negative)

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.positive, self.negative, self.zero)


def characteristic_polynomial(A) -> list[Fraction]:
    """Coefficients ``[p_0, ..., p_q]`` of ``det(x I - A)`` (Faddeev-LeVerrier).

    For Hermitian input every coefficient must be rational; a non-real
    coefficient raises ``AssertionError``.
    """
    M = A.rows() if isinstance(A, HermitianMatrix) else as_matrix(A)
    n = len(M)
    coeffs = [GR(0)] * (n + 1)
    coeffs[n] = GR(1)
    Mk = zeros(n)
    for k in range(1, n + 1):
        Mk = matmul(M, Mk)
        for i in range(n):
            Mk[i][i] = Mk[i][i] + coeffs[n - k + 1]
        AM = matmul(M, Mk)
        tr = reduce(lambda a, b: a + b, (AM[i][i] for i in range(n)), GR(0))
        coeffs[n - k] = GR(-tr.re / k, -tr.im / k)
    for c in coeffs:
        assert c.is_real(), f"characteristic coefficient {c} is not real"
    return [c.re for c in coeffs]


def _sign_variations(seq) -> int:
    signs = [1 if x > 0 else -1 for x in seq if x != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def inertia(A) -> Inertia:
    if not isinstance(A, HermitianMatrix):
        A = HermitianMatrix(A)
    p = characteristic_polynomial(A)
    n = A.size
    z = 0
    while z < n and p[z] == 0:
        z += 1
    q = p[z:]
    pos = _sign_variations(q)
    neg_check = _sign_variations([c if (i % 2 == 0) else -c for i, c in enumerate(q)])
    neg = n - z - pos
    assert neg == neg_check, "characteristic polynomial is not real-rooted"
    return Inertia(pos, neg, z)


def m_value(A) -> int:
    return inertia(A).m


def congruent(A: HermitianMatrix, P) -> HermitianMatrix:
    """``P* A P``."""
    P = as_matrix(P)
    return HermitianMatrix(matmul(conj_transpose(P), matmul(A.rows(), P)))


# symbolic polynomials with Gaussian-rational coefficients

class GPoly:
    """Sparse polynomial in real variables with Gaussian-rational coefficients."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms=None):
        self.nvars = nvars
        self.terms = {m: GR.coerce(c) for m, c in (terms or {}).items() if GR.coerce(c)}

    @classmethod
    def const(cls, nvars, c):
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def var(cls, nvars, i, c=1):
        m = [0] * nvars
        m[i] = 1
        return cls(nvars, {tuple(m): c})

    def __add__(self, o):
        if not isinstance(o, GPoly):
            o = GPoly.const(self.nvars, o)
        out = dict(self.terms)
        for m, c in o.terms.items():
            out[m] = out.get(m, GR(0)) + c
        return GPoly(self.nvars, out)

    __radd__ = __add__

    def __neg__(self):
        return GPoly(self.nvars, {m: -c for m, c in self.terms.items()})

    def __sub__(self, o):
        return self + (-o if isinstance(o, GPoly) else GPoly.const(self.nvars, -GR.coerce(o)))

    def __mul__(self, o):
        if not isinstance(o, GPoly):
            o = GR.coerce(o)
            return GPoly(self.nvars, {m: c * o for m, c in self.terms.items()})
        out: dict = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in o.terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                out[m] = out.get(m, GR(0)) + c1 * c2
        return GPoly(self.nvars, out)

    __rmul__ = __mul__

    def conjugate(self):
        return GPoly(self.nvars, {m: c.conjugate() for m, c in self.terms.items()})

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, o):
        if not isinstance(o, GPoly):
            o = GPoly.const(self.nvars, o)
        return self.terms == o.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def is_real(self) -> bool:
        return all(c.is_real() for c in self.terms.values())

    def evaluate(self, values: Sequence) -> GaussianRational:
        acc = GR(0)
        for m, c in self.terms.items():
            t = c
            for v, e in zip(values, m):
                if e:
                    t = t * _gpow(GR.coerce(v), e)
            acc = acc + t
        return acc

    def leading(self):
        m = max(self.terms)
        return m, self.terms[m]

    def divide_exact(self, d: GPoly) -> GPoly | None:
        """Quotient if ``d`` divides ``self`` exactly (lex division), else ``None``."""
        if d.is_zero():
            raise ZeroDivisionError
        dm, dc = d.leading()
        q = GPoly(self.nvars)
        rest = self
        while not rest.is_zero():
            rm, rc = rest.leading()
            if any(a < b for a, b in zip(rm, dm)):
                return None
            mono = tuple(a - b for a, b in zip(rm, dm))
            t = GPoly(self.nvars, {mono: rc / dc})
            q = q + t
            rest = rest - t * d
        return q

    def reduce_square(self, i: int, value: GPoly) -> GPoly:
        """Remainder modulo ``x_i^2 - value`` where ``value`` is free of ``x_i``."""
        out = GPoly(self.nvars)
        cache = {0: GPoly.const(self.nvars, 1)}
        for m, c in self.terms.items():
            k, odd = divmod(m[i], 2)
            if k not in cache:
                cache[k] = reduce(lambda a, b: a * b, [value] * k)
            base = list(m)
            base[i] = odd
            out = out + GPoly(self.nvars, {tuple(base): c}) * cache[k]
        return out

    def to_text(self, names: Sequence[str]) -> str:
        if not self.terms:
            return "0"
        parts = []
        for m in sorted(self.terms, reverse=True):
            c = self.terms[m]
            mono = "*".join(n if e == 1 else f"{n}^{e}" for n, e in zip(names, m) if e)
            if c.is_real():
                cs = str(c.re)
            else:
                cs = f"({c.re}+{c.im}i)"
            if mono:
                parts.append(mono if cs == "1" else (f"-{mono}" if cs == "-1" else f"{cs}*{mono}"))
            else:
                parts.append(cs)
        return " + ".join(parts).replace("+ -", "- ")


def _gpow(x, e):
    out = GR(1)
    for _ in range(e):
        out = out * x
    return out


def poly_matmul(A, B):
    n, m, p = len(A), len(B), len(B[0])
    zero = A[0][0] * 0
    out = []
    for i in range(n):
        row = []
        for j in range(p):
            acc = zero
            for k in range(m):
                if not A[i][k].is_zero() and not B[k][j].is_zero():
                    acc = acc + A[i][k] * B[k][j]
            row.append(acc)
        out.append(row)
    return out


def poly_det(M):
    """Determinant by cofactor expansion along the first row."""
    n = len(M)
    if n == 1:
        return M[0][0]
    if n == 2:
        return M[0][0] * M[1][1] - M[0][1] * M[1][0]
    acc = M[0][0] * 0
    for j in range(n):
        if M[0][j].is_zero():
            continue
        minor = [row[:j] + row[j + 1:] for row in M[1:]]
        term = M[0][j] * poly_det(minor)
        acc = acc + term if j % 2 == 0 else acc - term
    return acc


def delete_index(M, k: int):
    return [[x for j, x in enumerate(row) if j != k] for i, row in enumerate(M) if i != k]


# verification records

@dataclass
class VerificationRecord:
    name: str
    passed: bool
    checks: dict = field(default_factory=dict)
    trials: int = 0
    seed: int | None = None
    witness: dict | None = None
    stats: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        out = {"name": self.name, "passed": self.passed, "checks": self.checks,
               "trials": self.trials, "seed": self.seed, "stats": self.stats}
        if self.witness is not None:
            out["witness"] = self.witness
        return out


def _trial_rng(seed: int, i: int) -> random.Random:
    return random.Random(f"{seed}:{i}")


def _random_fraction(rng: random.Random, height: int = 9) -> Fraction:
    return Fraction(rng.randint(-height, height), rng.randint(1, height))


def _random_gaussian(rng: random.Random, height: int = 9) -> GaussianRational:
    return GR(_random_fraction(rng, height), _random_fraction(rng, height))


def _run_trials(fn, args_list, workers: int):
    if workers <= 1:
        return [fn(*a) for a in args_list]
    with ProcessPoolExecutor(max_workers=workers) as ex:
        return list(ex.map(fn, *zip(*args_list), chunksize=max(1, len(args_list) // (4 * workers))))


# Clifford families

def two_adic(q: int) -> tuple[int, int]:
    """``(b, c)`` with ``q = 2^c (2b+1)``."""
    if q < 1:
        raise ValueError("q must be positive")
    c = (q & -q).bit_length() - 1
    return ((q >> c) - 1) // 2, c


PAULI = (
    as_matrix([[0, 1], [1, 0]]),
    as_matrix([[0, GR(0, -1)], [GR(0, 1), 0]]),
    as_matrix([[1, 0], [0, -1]]),
)


@dataclass(frozen=True)
class CliffordFamily:
    q: int
    b: int
    c: int
    matrices: tuple[HermitianMatrix, ...]

    @property
    def dimension(self) -> int:
        return len(self.matrices)

    def combination(self, coeffs: Sequence) -> Matrix:
        out = zeros(self.q)
        for a, A in zip(coeffs, self.matrices):
            out = mat_add(out, mat_scale(A.rows(), a))
        return out


def clifford_family(q: int) -> CliffordFamily:
    """``2c+1`` anticommuting Hermitian involutions of size ``q = 2^c (2b+1)``.

    Size ``2^c`` by induction: ``G_i (x) s1`` together with ``I (x) s2`` and
    ``I (x) s3``; then ``2b+1`` diagonal copies.
    """
    b, c = two_adic(q)
    gens = [as_matrix([[1]])]
    for step in range(c):
        n = len(gens[0])
        gens = [kron(G, PAULI[0]) for G in gens] + [kron(identity(n), PAULI[1]), kron(identity(n), PAULI[2])]
    copies = 2 * b + 1
    mats = tuple(HermitianMatrix(block_diagonal([G] * copies)) for G in gens)
    return CliffordFamily(q, b, c, mats)


def _symbolic_square_check(mats: Sequence[HermitianMatrix]):
    """Check ``(sum a_i A_i)^2 == (sum a_i^2) I`` with the ``a_i`` as indeterminates."""
    k = len(mats)
    q = mats[0].size
    M = [[GPoly(k) for _ in range(q)] for _ in range(q)]
    for i, A in enumerate(mats):
        for r in range(q):
            for s in range(q):
                if A.entries[r][s]:
                    M[r][s] = M[r][s] + GPoly.var(k, i, A.entries[r][s])
    sq = poly_matmul(M, M)
    norm = GPoly(k)
    for i in range(k):
        norm = norm + GPoly.var(k, i) * GPoly.var(k, i)
    for r in range(q):
        for s in range(q):
            expected = norm if r == s else GPoly(k)
            if sq[r][s] != expected:
                return False, {"entry": [r, s], "got": sq[r][s].to_text([f"a{i+1}" for i in range(k)])}
    return True, None


def _anticommutator_witness(mats: Sequence[HermitianMatrix]):
    q = mats[0].size
    for i in range(len(mats)):
        for j in range(i + 1, len(mats)):
            A, B = mats[i].rows(), mats[j].rows()
            anti = mat_add(matmul(A, B), matmul(B, A))
            if any(x for row in anti for x in row):
                for sign in (1, -1):
                    comb = mat_add(A, mat_scale(B, sign))
                    r = rank_exact(comb)
                    if r < q:
                        coeffs = [0] * len(mats)
                        coeffs[i], coeffs[j] = 1, sign
                        return {"pair": [i, j], "combination": coeffs, "rank": r}
                return {"pair": [i, j], "combination": None, "rank": None}
        sq = matmul(mats[i].rows(), mats[i].rows())
        if sq != identity(q):
            return {"square_not_identity": i}
    return None


def _clifford_trial(entries, q, seed, i):
    rng = _trial_rng(seed, i)
    k = len(entries)
    while True:
        coeffs = [_random_fraction(rng) for _ in range(k)]
        if any(coeffs):
            break
    L = reduce(math.lcm, (c.denominator for c in coeffs), 1)
    ints = [int(c * L) for c in coeffs]
    M = [[[0, 0] for _ in range(q)] for _ in range(q)]
    for a, E in zip(ints, entries):
        for r, s, re, im in E:
            M[r][s][0] += a * re
            M[r][s][1] += a * im
    rank = bareiss_rank(M)
    return rank, [str(c) for c in coeffs]


def _int_entries(A: HermitianMatrix):
    out = []
    for r, row in enumerate(A.entries):
        for s, x in enumerate(row):
            if x:
                assert x.re.denominator == 1 and x.im.denominator == 1
                out.append((r, s, int(x.re), int(x.im)))
    return out


def verify_invertible_span(family: CliffordFamily | Sequence[HermitianMatrix], trials: int = 1000,
                           seed: int = 20070101, workers: int = 1) -> VerificationRecord:
    """Certify that every nonzero real combination of the family is invertible.

    Two independent checks: the square identity with indeterminate
    coefficients, and exact ranks of random nonzero rational combinations.
    """
    if trials < 1:
        raise ValueError("trials must be >= 1")
    mats = family.matrices if isinstance(family, CliffordFamily) else tuple(family)
    q = mats[0].size
    ok_sym, detail = _symbolic_square_check(mats)
    entries = [_int_entries(A) for A in mats]
    results = _run_trials(_clifford_trial, [(entries, q, seed, i) for i in range(trials)], workers)
    failures = [(i, coeffs, r) for i, (r, coeffs) in enumerate(results) if r != q]
    witness = None
    if not ok_sym:
        witness = {"symbolic": detail, "singular_combination": _anticommutator_witness(mats)}
    elif failures:
        i, coeffs, r = failures[0]
        witness = {"trial": i, "coefficients": coeffs, "rank": r}
    return VerificationRecord(
        name="invertible-span",
        passed=ok_sym and not failures,
        checks={"square_identity_symbolic": ok_sym, "random_combinations_invertible": not failures},
        trials=trials, seed=seed, witness=witness,
        stats={"q": q, "dimension": len(mats), "failures": len(failures)},
    )


# the 7-parameter family of rank >= 4

FAMILY_VARIABLES = ("alpha", "z_re", "z_im", "u_re", "u_im", "w_re", "w_im")


def family_matrix(alpha, z, u, w) -> HermitianMatrix:
    """The 5x5 Hermitian matrix ``A(alpha, z, u, w)``; ``alpha`` real."""
    a = Fraction(alpha)
    z, u, w = GR.coerce(z), GR.coerce(u), GR.coerce(w)
    zc, uc, wc = z.conjugate(), u.conjugate(), w.conjugate()
    return HermitianMatrix([
        [a, z, u, w, 0],
        [zc, a, wc, -uc, 0],
        [uc, w, -a, z, 0],
        [wc, -u, zc, -a, z],
        [0, 0, 0, zc, 0],
    ])


def symbolic_family():
    """``A`` with polynomial entries in ``alpha, z_re, z_im, u_re, u_im, w_re, w_im``."""
    n = len(FAMILY_VARIABLES)
    v = [GPoly.var(n, i) for i in range(n)]
    alpha = v[0]
    z = v[1] + v[2] * I_UNIT
    u = v[3] + v[4] * I_UNIT
    w = v[5] + v[6] * I_UNIT
    O = GPoly(n)
    zc, uc, wc = z.conjugate(), u.conjugate(), w.conjugate()
    return [
        [alpha, z, u, w, O],
        [zc, alpha, wc, -uc, O],
        [uc, w, -alpha, z, O],
        [wc, -u, zc, -alpha, z],
        [O, O, O, zc, O],
    ]


def _family_int_matrix(a, z, u, w):
    """``A`` over the Gaussian integers; ``a`` an int, the others ``(re, im)`` int pairs."""
    zr, zi = z
    ur, ui = u
    wr, wi = w
    O = [0, 0]
    return [
        [[a, 0], [zr, zi], [ur, ui], [wr, wi], O[:]],
        [[zr, -zi], [a, 0], [wr, -wi], [-ur, ui], O[:]],
        [[ur, -ui], [wr, wi], [-a, 0], [zr, zi], O[:]],
        [[wr, -wi], [-ur, -ui], [zr, -zi], [-a, 0], [zr, zi]],
        [O[:], O[:], O[:], [zr, -zi], O[:]],
    ]


def _family_trial(seed, i):
    rng = _trial_rng(seed, i)
    while True:
        nums = [rng.randint(-4, 4) for _ in range(7)]
        if any(nums):
            break
    dens = [rng.randint(1, 4) for _ in range(7)]
    L = reduce(math.lcm, dens, 1)
    a, zr, zi, ur, ui, wr, wi = (n * (L // d) for n, d in zip(nums, dens))
    M = _family_int_matrix(a, (zr, zi), (ur, ui), (wr, wi))
    zsq = zr * zr + zi * zi
    regime = "z=0" if not zsq else ("|alpha|=|z|" if a * a == zsq else "generic")
    params = [str(Fraction(n, d)) for n, d in zip(nums, dens)]
    return bareiss_rank(M), regime, params


def family_identities() -> dict:
    """The three polynomial identities behind ``rank A >= 4``."""
    n = len(FAMILY_VARIABLES)
    v = [GPoly.var(n, i) for i in range(n)]
    names = FAMILY_VARIABLES
    A = symbolic_family()
    zero = GPoly(n)
    zsq = v[1] * v[1] + v[2] * v[2]
    usq = v[3] * v[3] + v[4] * v[4]
    wsq = v[5] * v[5] + v[6] * v[6]
    out = {}

    # deleting row/column 5 at z = 0
    A5 = [[x for x in row] for row in delete_index(A, 4)]
    sub = lambda p: GPoly(n, {m: c for m, c in p.terms.items() if m[1] == 0 and m[2] == 0})
    A5z = [[sub(x) for x in row] for row in A5]
    sq = poly_matmul(A5z, A5z)
    scal = v[0] * v[0] + usq + wsq
    a5_ok = all(sq[i][j] == (scal if i == j else zero) for i in range(4) for j in range(4))
    out["A5_square_at_z0"] = {"passed": a5_ok, "scalar": scal.to_text(names)}

    # deleting row/column 1, on |alpha| = |z|
    d1 = poly_det(delete_index(A, 0))
    residue = (d1 - zsq * (zsq + wsq)).reduce_square(0, zsq)
    out["det_A1_on_alpha_eq_abs_z"] = {"passed": residue.is_zero() and d1.is_real(),
                                       "det": d1.to_text(names), "residue": residue.to_text(names)}

    # deleting row/column 3: factor det into powers of |z|^2 and alpha^2 - |z|^2
    d3 = poly_det(delete_index(A, 2))
    rest, powers = d3, {"abs_z_sq": 0, "alpha_sq_minus_abs_z_sq": 0}
    for key, factor in (("abs_z_sq", zsq), ("alpha_sq_minus_abs_z_sq", v[0] * v[0] - zsq)):
        while True:
            q = rest.divide_exact(factor)
            if q is None:
                break
            rest = q
            powers[key] += 1
    unit = None
    if len(rest.terms) == 1 and (0,) * n in rest.terms:
        unit = rest.terms[(0,) * n]
    contained = unit is not None and unit.is_real()
    out["det_A3_vanishing_locus"] = {
        "passed": contained and d3.is_real(),
        "det": d3.to_text(names),
        "unit": str(unit.re) if unit is not None else None,
        "powers": powers,
    }
    return out


def verify_family(trials: int = 10000, seed: int = 20070101, workers: int = 1) -> VerificationRecord:
    """Randomized ranks plus the symbolic identities for ``A(alpha, z, u, w)``."""
    if trials < 1:
        raise ValueError("trials must be >= 1")
    ids = family_identities()
    results = _run_trials(_family_trial, [(seed, i) for i in range(trials)], workers)
    ranks: dict[int, int] = {}
    regimes: dict[str, int] = {}
    witness = None
    for i, (r, regime, params) in enumerate(results):
        ranks[r] = ranks.get(r, 0) + 1
        regimes[regime] = regimes.get(regime, 0) + 1
        if r < 4 and witness is None:
            witness = {"trial": i, "parameters": params, "rank": r}
    random_ok = witness is None
    sym_ok = all(v["passed"] for v in ids.values())
    if not sym_ok and witness is None:
        witness = {"failed_identities": [k for k, v in ids.items() if not v["passed"]]}
    checks = {"random_rank_at_least_4": random_ok}
    checks.update({k: v["passed"] for k, v in ids.items()})
    return VerificationRecord(
        name="rank-4-family",
        passed=random_ok and sym_ok,
        checks=checks, trials=trials, seed=seed, witness=witness,
        stats={"rank_counts": {str(k): ranks[k] for k in sorted(ranks)},
               "regimes": {k: regimes[k] for k in sorted(regimes)},
               "identities": ids, "dimension": 7},
    )
