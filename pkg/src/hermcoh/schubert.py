"""Integral cohomology of Grassmannians in the Schubert basis.

``Grassmannian(k, n)`` is Gr(k, C^n); Schubert classes are indexed by
partitions in a ``k x (n-k)`` box (at most ``k`` parts, each at most ``n-k``).
Products use the Pieri rule for special classes ``s[p] = c_p(Q)`` and the
Jacobi-Trudi (Giambelli) determinant for general classes.  The dual of ``la``
is the box complement read backwards, ``(n-k-la_k, ..., n-k-la_1)``.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Mapping

from .polyring import GF2, ConfigurationError, GradedPolynomial

Partition = tuple[int, ...]


def normalize_partition(parts) -> Partition:
    parts = tuple(int(p) for p in parts)
    if any(p < 0 for p in parts):
        raise ValueError(f"negative part in {parts}")
    if any(a < b for a, b in zip(parts, parts[1:])):
        raise ValueError(f"{parts} is not weakly decreasing")
    while parts and parts[-1] == 0:
        parts = parts[:-1]
    return parts


def partitions_in_box(rows: int, cols: int, size: int | None = None) -> Iterator[Partition]:
    """Partitions with at most ``rows`` parts, each at most ``cols``; lex ascending."""
    def rec(left_rows, bound):
        if left_rows == 0:
            yield ()
            return
        for first in range(bound + 1):
            for rest in rec(left_rows - 1, first):
                yield (first,) + rest
    found = sorted({normalize_partition(p) for p in rec(rows, cols)})
    for p in found:
        if size is None or sum(p) == size:
            yield p


def _sign_of(perm) -> int:
    sign = 1
    seen = [False] * len(perm)
    for i in range(len(perm)):
        if not seen[i]:
            j, length = i, 0
            while not seen[j]:
                seen[j] = True
                j = perm[j]
                length += 1
            if length % 2 == 0:
                sign = -sign
    return sign


@lru_cache(maxsize=None)
def jacobi_trudi(la: Partition) -> tuple[tuple[tuple[int, ...], int], ...]:
    """``s_la = det(h_{la_i - i + j})`` as a sum of products of ``h``'s.

    Returns ``((row sizes, coefficient), ...)`` with zero-size factors dropped.
    """
    ell = len(la)
    acc: dict[tuple[int, ...], int] = {}
    for perm in itertools.permutations(range(ell)):
        rows = []
        for i in range(ell):
            m = la[i] - i + perm[i]
            if m < 0:
                break
            if m:
                rows.append(m)
        else:
            key = tuple(sorted(rows, reverse=True))
            acc[key] = acc.get(key, 0) + _sign_of(perm)
    return tuple(sorted((k, v) for k, v in acc.items() if v))


@dataclass(frozen=True)
class Grassmannian:
    k: int
    n: int

    def __post_init__(self):
        if not 0 <= self.k <= self.n:
            raise ValueError(f"need 0 <= k <= n, got k={self.k}, n={self.n}")

    @property
    def rows(self) -> int:
        return self.k

    @property
    def cols(self) -> int:
        return self.n - self.k

    @property
    def dim(self) -> int:
        return self.k * (self.n - self.k)

    @property
    def top(self) -> Partition:
        return normalize_partition((self.cols,) * self.rows)

    def partitions(self, size: int | None = None) -> list[Partition]:
        return list(partitions_in_box(self.rows, self.cols, size))

    def betti(self) -> list[int]:
        return [len(self.partitions(d)) for d in range(self.dim + 1)]

    def contains(self, la: Partition) -> bool:
        return len(la) <= self.rows and (not la or la[0] <= self.cols)

    def dual(self, la: Partition) -> Partition:
        la = tuple(la) + (0,) * (self.rows - len(la))
        return normalize_partition(tuple(self.cols - p for p in reversed(la)))

    def schubert(self, *parts, modulus: int | None = None) -> SchubertElement:
        la = normalize_partition(parts[0] if len(parts) == 1 and not isinstance(parts[0], int) else parts)
        if not self.contains(la):
            return SchubertElement(self, {}, modulus)
        return SchubertElement(self, {la: 1}, modulus)

    def one(self, modulus: int | None = None) -> SchubertElement:
        return SchubertElement(self, {(): 1}, modulus)

    def zero(self, modulus: int | None = None) -> SchubertElement:
        return SchubertElement(self, {}, modulus)


class SchubertElement:
    """Integer (or mod ``modulus``) combination of Schubert classes."""

    __slots__ = ("grass", "terms", "modulus")

    def __init__(self, grass: Grassmannian, terms: Mapping[Partition, int], modulus: int | None = None):
        self.grass = grass
        self.modulus = modulus
        clean = {}
        for la, c in terms.items():
            c = int(c)
            if modulus:
                c %= modulus
            if c:
                la = normalize_partition(la)
                if not grass.contains(la):
                    raise ValueError(f"{la} does not fit in the {grass.rows}x{grass.cols} box")
                clean[la] = c
        self.terms: dict[Partition, int] = clean

    def _new(self, terms):
        return SchubertElement(self.grass, terms, self.modulus)

    def _check(self, other):
        if isinstance(other, int):
            return self.grass.one(self.modulus) * other
        if not isinstance(other, SchubertElement) or other.grass != self.grass:
            raise ConfigurationError("Schubert elements from different Grassmannians")
        if other.modulus != self.modulus:
            raise ConfigurationError("Schubert elements with different coefficient moduli")
        return other

    def __add__(self, other):
        other = self._check(other)
        out = dict(self.terms)
        for la, c in other.terms.items():
            out[la] = out.get(la, 0) + c
        return self._new(out)

    __radd__ = __add__

    def __neg__(self):
        return self._new({la: -c for la, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._check(other))

    def __rsub__(self, other):
        return self._check(other) - self

    def __mul__(self, other):
        if isinstance(other, int):
            return self._new({la: c * other for la, c in self.terms.items()})
        return multiply(self, self._check(other))

    def __rmul__(self, other):
        return self * other

    def __pow__(self, n: int):
        out = self.grass.one(self.modulus)
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, int):
            other = self.grass.one(self.modulus) * other
        if not isinstance(other, SchubertElement):
            return NotImplemented
        return self.grass == other.grass and self.terms == other.terms

    def __hash__(self):
        return hash((self.grass, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def homogeneous_part(self, d: int) -> SchubertElement:
        return self._new({la: c for la, c in self.terms.items() if sum(la) == d})

    def reduce(self, modulus: int) -> SchubertElement:
        return SchubertElement(self.grass, self.terms, modulus)

    def coefficient(self, la) -> int:
        return self.terms.get(normalize_partition(la), 0)

    def __repr__(self):
        return f"SchubertElement({to_text(self)!r})"

    def __str__(self):
        return to_text(self)


def pieri_multiply(a: SchubertElement, p: int) -> SchubertElement:
    """``a * s[p]``: add a horizontal ``p``-strip to each partition, inside the box."""
    if p < 0:
        raise ValueError("strip size must be nonnegative")
    if p == 0:
        return a
    out: dict[Partition, int] = {}
    g = a.grass
    for la, c in a.terms.items():
        for mu in _horizontal_strips(la, p, g.rows, g.cols):
            out[mu] = out.get(mu, 0) + c
    return SchubertElement(g, out, a.modulus)


@lru_cache(maxsize=None)
def _horizontal_strips(la: Partition, p: int, rows: int, cols: int) -> tuple[Partition, ...]:
    la = tuple(la) + (0,) * (rows - len(la))
    found = []

    def rec(i, left, acc):
        if i == rows:
            if left == 0:
                found.append(normalize_partition(acc))
            return
        upper = cols if i == 0 else la[i - 1]
        for mu_i in range(la[i], min(upper, la[i] + left) + 1):
            acc.append(mu_i)
            rec(i + 1, left - (mu_i - la[i]), acc)
            acc.pop()

    rec(0, p, [])
    return tuple(found)


def multiply(a: SchubertElement, b: SchubertElement) -> SchubertElement:
    """Cup product: expand ``b`` by Jacobi-Trudi and apply Pieri to ``a``."""
    if a.grass != b.grass:
        raise ConfigurationError("context mismatch")
    if a.modulus != b.modulus:
        raise ConfigurationError("Schubert elements with different coefficient moduli")
    out = SchubertElement(a.grass, {}, a.modulus)
    for mu, cmu in b.terms.items():
        for rows, sign in jacobi_trudi(mu):
            if rows and rows[0] > a.grass.cols:
                continue
            term = a
            for r in rows:
                term = pieri_multiply(term, r)
                if not term.terms:
                    break
            if term.terms:
                out = out + term * (sign * cmu)
    return out


def integrate(a: SchubertElement) -> int:
    """Coefficient of the fundamental point class (the full box)."""
    return a.terms.get(a.grass.top, 0)


def chern_of_tautological(g: Grassmannian, i: int, modulus: int | None = None) -> SchubertElement:
    """``c_i(S) = (-1)^i s[1^i]`` for the tautological subbundle."""
    if not 0 <= i <= g.k:
        raise ValueError(f"c_{i}(S) out of range for rank {g.k}")
    return g.schubert((1,) * i, modulus=modulus) * ((-1) ** i)


def chern_of_quotient(g: Grassmannian, i: int, modulus: int | None = None) -> SchubertElement:
    """``c_i(Q) = s[i]`` for the universal quotient bundle."""
    if not 0 <= i <= g.n - g.k:
        raise ValueError(f"c_{i}(Q) out of range for rank {g.n - g.k}")
    return g.schubert((i,), modulus=modulus)


_CHERN_NAME = re.compile(r"^c(\d+)$")


def evaluate_chern(p: GradedPolynomial, g: Grassmannian, modulus: int | None = None) -> SchubertElement:
    """Image of a polynomial in ``c1, c2, ...`` under ``c_i -> c_i(S)``.

    Coefficients of a GF2 polynomial force ``modulus=2``.
    """
    if p.ring.coefficients is GF2:
        modulus = 2
    gens = []
    for name, w in zip(p.ring.names, p.ring.weights):
        m = _CHERN_NAME.match(name)
        if not m or int(m.group(1)) != w:
            raise ConfigurationError(f"variable {name!r} is not a Chern class c_i of degree i")
        i = int(m.group(1))
        gens.append(chern_of_tautological(g, i, modulus) if i <= g.k else g.zero(modulus))
    cache: dict[tuple[int, int], SchubertElement] = {}

    def power(i, e):
        if (i, e) not in cache:
            cache[(i, e)] = gens[i] if e == 1 else power(i, e - 1) * gens[i]
        return cache[(i, e)]

    out = g.zero(modulus)
    for mono, c in p.items():
        if p.ring.monomial_degree(mono) > g.dim:
            continue
        term = g.one(modulus) * int(c)
        for i, e in enumerate(mono):
            if e:
                term = term * power(i, e)
                if not term:
                    break
        out = out + term
    return out


def to_text(a: SchubertElement) -> str:
    """Canonical text ``s[2,1] + 2*s[1,1,1]``; ``1`` stands for ``s[]``."""
    if not a.terms:
        return "0"
    out = []
    for la in sorted(a.terms, key=lambda la: (sum(la), la)):
        c = a.terms[la]
        neg = c < 0
        mag = -c if neg else c
        cls = "s[" + ",".join(map(str, la)) + "]" if la else ""
        if not cls:
            body = str(mag)
        elif mag == 1:
            body = cls
        else:
            body = f"{mag}*{cls}"
        sep = ("-" if neg else "") if not out else (" - " if neg else " + ")
        out.append(sep + body)
    return "".join(out)
