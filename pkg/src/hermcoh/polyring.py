"""Sparse graded polynomials over Z, Q and F2, and graded quotient rings.

Polynomials are stored as ``{exponent tuple: coefficient}`` with the exponent
tuple indexed by the ring's variable list.  Every variable carries a positive
degree, so a polynomial splits into homogeneous parts; a formal series in a
variable ``t`` whose power equals the cohomological degree is represented by
the polynomial itself (the coefficient of ``t^k`` is the degree-``k`` part).

Quotient rings are handled degree by degree: the ideal slice in degree ``d``
is spanned by ``relation * monomial`` products, row reduced over the
coefficient field, and the non-pivot monomials form the quotient basis.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Callable, Iterable, Mapping, Sequence

Monomial = tuple[int, ...]


class ConfigurationError(ValueError):
    """Operands live in incompatible rings."""


class DomainError(ArithmeticError):
    """Operation undefined for the given input (e.g. inverting a non-unit)."""


class OutOfRangeError(ValueError):
    """Degree above a quotient ring's truncation degree."""


class Coefficients:
    """A coefficient ring.  Elements are plain Python ints or Fractions."""

    name: str
    is_field: bool
    characteristic: int

    def __call__(self, x):
        raise NotImplementedError

    def inverse(self, x):
        raise NotImplementedError

    def __repr__(self):
        return self.name


class _Integers(Coefficients):
    name, is_field, characteristic = "ZZ", False, 0

    def __call__(self, x):
        if isinstance(x, Fraction):
            if x.denominator != 1:
                raise DomainError(f"{x} is not an integer")
            return x.numerator
        return int(x)

    def inverse(self, x):
        if x in (1, -1):
            return x
        raise DomainError(f"{x} is not a unit in ZZ")


class _Rationals(Coefficients):
    name, is_field, characteristic = "QQ", True, 0

    def __call__(self, x):
        return Fraction(x)

    def inverse(self, x):
        if x == 0:
            raise DomainError("division by zero")
        return 1 / Fraction(x)


class _GF2(Coefficients):
    name, is_field, characteristic = "GF2", True, 2

    def __call__(self, x):
        if isinstance(x, Fraction):
            if x.denominator % 2 == 0:
                raise DomainError(f"{x} has no image mod 2")
            x = x.numerator * x.denominator
        return int(x) & 1

    def inverse(self, x):
        if x & 1:
            return 1
        raise DomainError("division by zero in GF2")


ZZ = _Integers()
QQ = _Rationals()
GF2 = _GF2()

COEFFICIENTS = {"ZZ": ZZ, "QQ": QQ, "GF2": GF2, "z": ZZ, "q": QQ, "z2": GF2}


@dataclass(frozen=True)
class GradedVariable:
    name: str
    degree: int = 1

    def __post_init__(self):
        if self.degree < 1:
            raise ValueError(f"variable {self.name!r} must have positive degree")


class PolyRing:
    """Graded polynomial ring ``K[x_1, ..., x_n]`` with weighted variables.

    ``truncation`` (optional) is applied by the ``*`` and ``**`` operators of
    elements; the module-level :func:`poly_mul` takes an explicit truncation.
    """

    def __init__(self, variables: Sequence[GradedVariable | tuple[str, int] | str],
                 coefficients: Coefficients = ZZ, truncation: int | None = None):
        vs = []
        for v in variables:
            if isinstance(v, str):
                v = GradedVariable(v, 1)
            elif not isinstance(v, GradedVariable):
                v = GradedVariable(*v)
            vs.append(v)
        names = [v.name for v in vs]
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate variable names in {names}")
        self.variables: tuple[GradedVariable, ...] = tuple(vs)
        self.names: tuple[str, ...] = tuple(names)
        self.weights: tuple[int, ...] = tuple(v.degree for v in vs)
        self.coefficients = coefficients
        self.truncation = truncation
        self._index = {n: i for i, n in enumerate(names)}
        self._monomial_cache: dict[int, list[Monomial]] = {}

    def __repr__(self):
        vs = ", ".join(f"{v.name}:{v.degree}" for v in self.variables)
        return f"PolyRing([{vs}], {self.coefficients})"

    def same_as(self, other: PolyRing) -> bool:
        return (self is other or (self.variables == other.variables
                                  and self.coefficients is other.coefficients))

    @property
    def nvars(self) -> int:
        return len(self.variables)

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise KeyError(f"no variable {name!r} in {self!r}") from None

    def monomial_degree(self, m: Monomial) -> int:
        return sum(e * w for e, w in zip(m, self.weights))

    def monomials_of_degree(self, d: int) -> list[Monomial]:
        """All monomials of weighted degree ``d``, in ascending print order."""
        if d < 0:
            return []
        if d not in self._monomial_cache:
            out: list[Monomial] = []

            def rec(i, left, acc):
                if i == self.nvars:
                    if left == 0:
                        out.append(tuple(acc))
                    return
                w = self.weights[i]
                for e in range(left // w + 1):
                    acc.append(e)
                    rec(i + 1, left - e * w, acc)
                    acc.pop()

            rec(0, d, [])
            out.sort(key=monomial_order_key)
            self._monomial_cache[d] = out
        return list(self._monomial_cache[d])

    # element constructors

    def __call__(self, x) -> GradedPolynomial:
        if isinstance(x, GradedPolynomial):
            return change_ring(x, self)
        if isinstance(x, str):
            return self.gen(x)
        return self.constant(x)

    def constant(self, c) -> GradedPolynomial:
        return GradedPolynomial(self, {(0,) * self.nvars: c})

    @cached_property
    def zero(self) -> GradedPolynomial:
        return GradedPolynomial(self, {})

    @cached_property
    def one(self) -> GradedPolynomial:
        return self.constant(1)

    def gen(self, name: str) -> GradedPolynomial:
        m = [0] * self.nvars
        m[self.index(name)] = 1
        return GradedPolynomial(self, {tuple(m): 1})

    def gens(self) -> tuple[GradedPolynomial, ...]:
        return tuple(self.gen(n) for n in self.names)

    def monomial(self, exponents: Mapping[str, int] | Monomial, coeff=1) -> GradedPolynomial:
        if isinstance(exponents, Mapping):
            m = [0] * self.nvars
            for name, e in exponents.items():
                m[self.index(name)] = e
            exponents = tuple(m)
        return GradedPolynomial(self, {tuple(exponents): coeff})

    def from_terms(self, terms: Mapping[Monomial, object]) -> GradedPolynomial:
        return GradedPolynomial(self, terms)


def monomial_order_key(m: Monomial):
    """Lexicographic key with the last variable most significant.

    Within one degree this is the graded-lex order for the variable order
    ``x_1 < x_2 < ... < x_n``.
    """
    return tuple(reversed(m))


class GradedPolynomial:
    """Immutable sparse polynomial; zero coefficients are never stored."""

    __slots__ = ("ring", "_terms")

    def __init__(self, ring: PolyRing, terms: Mapping[Monomial, object] | None = None):
        self.ring = ring
        K = ring.coefficients
        clean = {}
        for m, c in (terms or {}).items():
            c = K(c)
            if c:
                if len(m) != ring.nvars:
                    raise ConfigurationError(f"monomial {m} has wrong arity for {ring!r}")
                clean[m] = c
        self._terms = clean

    @classmethod
    def _raw(cls, ring, terms):
        p = cls.__new__(cls)
        p.ring = ring
        p._terms = terms
        return p

    # inspection

    @property
    def terms(self) -> dict[Monomial, object]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def __iter__(self):
        return iter(self._terms)

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def coefficient(self, m: Monomial | Mapping[str, int]):
        if isinstance(m, Mapping):
            m = self.ring.monomial(m).leading_monomial()
        return self._terms.get(tuple(m), self.ring.coefficients(0))

    def constant_term(self):
        return self._terms.get((0,) * self.ring.nvars, self.ring.coefficients(0))

    def degrees(self) -> set[int]:
        return {self.ring.monomial_degree(m) for m in self._terms}

    def degree(self) -> int:
        """Top degree; -1 for the zero polynomial."""
        return max(self.degrees(), default=-1)

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    def homogeneous_part(self, d: int) -> GradedPolynomial:
        deg = self.ring.monomial_degree
        return GradedPolynomial._raw(self.ring, {m: c for m, c in self._terms.items() if deg(m) == d})

    part = homogeneous_part

    def graded_parts(self) -> dict[int, GradedPolynomial]:
        return {d: self.homogeneous_part(d) for d in sorted(self.degrees())}

    def truncate(self, d: int | None) -> GradedPolynomial:
        if d is None:
            return self
        deg = self.ring.monomial_degree
        return GradedPolynomial._raw(self.ring, {m: c for m, c in self._terms.items() if deg(m) <= d})

    def leading_monomial(self) -> Monomial:
        if not self._terms:
            raise ValueError("zero polynomial has no leading monomial")
        deg = self.ring.monomial_degree
        return max(self._terms, key=lambda m: (deg(m), monomial_order_key(m)))

    def variables_used(self) -> set[str]:
        return {self.ring.names[i] for m in self._terms for i, e in enumerate(m) if e}

    # arithmetic

    def _check(self, other) -> GradedPolynomial:
        if not isinstance(other, GradedPolynomial):
            return self.ring.constant(other)
        if not self.ring.same_as(other.ring):
            raise ConfigurationError(f"ring mismatch: {self.ring!r} vs {other.ring!r}")
        return other

    def __add__(self, other):
        other = self._check(other)
        K = self.ring.coefficients
        out = dict(self._terms)
        for m, c in other._terms.items():
            s = K(out.get(m, 0) + c)
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        return GradedPolynomial._raw(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        K = self.ring.coefficients
        return GradedPolynomial._raw(self.ring, {m: K(-c) for m, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-self._check(other))

    def __rsub__(self, other):
        return self._check(other) - self

    def __mul__(self, other):
        if not isinstance(other, GradedPolynomial):
            K = self.ring.coefficients
            k = K(other)
            out = {m: K(c * k) for m, c in self._terms.items()}
            return GradedPolynomial._raw(self.ring, {m: c for m, c in out.items() if c})
        return poly_mul(self, other, self.ring.truncation)

    def __rmul__(self, other):
        return self * other

    def __pow__(self, n: int):
        return poly_pow(self, n, self.ring.truncation)

    def __eq__(self, other):
        if isinstance(other, GradedPolynomial):
            return self.ring.same_as(other.ring) and self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self == self.ring.constant(other)
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __repr__(self):
        return f"GradedPolynomial({to_text(self)!r})"

    def __str__(self):
        return to_text(self)


def poly_mul(a: GradedPolynomial, b: GradedPolynomial, truncation: int | None = None) -> GradedPolynomial:
    """Product of ``a`` and ``b`` with all parts of degree above ``truncation`` dropped."""
    if not a.ring.same_as(b.ring):
        raise ConfigurationError(f"ring mismatch: {a.ring!r} vs {b.ring!r}")
    if truncation is not None and truncation < 0:
        raise ValueError("truncation must be nonnegative")
    ring = a.ring
    K = ring.coefficients
    out: dict[Monomial, object] = {}
    if truncation is None:
        for ma, ca in a._terms.items():
            for mb, cb in b._terms.items():
                m = tuple(x + y for x, y in zip(ma, mb))
                out[m] = out.get(m, 0) + ca * cb
    else:
        deg = ring.monomial_degree
        bl = [(mb, cb, deg(mb)) for mb, cb in b._terms.items()]
        for ma, ca in a._terms.items():
            da = deg(ma)
            if da > truncation:
                continue
            for mb, cb, db in bl:
                if da + db <= truncation:
                    m = tuple(x + y for x, y in zip(ma, mb))
                    out[m] = out.get(m, 0) + ca * cb
    return GradedPolynomial._raw(ring, {m: K(c) for m, c in out.items() if K(c)})


def poly_pow(p: GradedPolynomial, n: int, truncation: int | None = None) -> GradedPolynomial:
    if n < 0:
        return poly_pow(poly_inverse_graded(p, _require_truncation(truncation)), -n, truncation)
    result = p.ring.one.truncate(truncation)
    base = p.truncate(truncation)
    while n:
        if n & 1:
            result = poly_mul(result, base, truncation)
        n >>= 1
        if n:
            base = poly_mul(base, base, truncation)
    return result


def _require_truncation(t):
    if t is None:
        raise ValueError("a truncation degree is required for series inversion")
    return t


def poly_inverse_graded(u: GradedPolynomial, truncation: int) -> GradedPolynomial:
    """Inverse of ``u`` as a graded series, up to degree ``truncation``.

    The degree-``k`` part of the inverse is ``-c0^{-1} * sum_{j=1..k} u_j v_{k-j}``.
    """
    ring = u.ring
    K = ring.coefficients
    c0 = u.constant_term()
    if len(u.homogeneous_part(0)) and not u.homogeneous_part(0) == ring.constant(c0):
        raise DomainError("degree-0 part is not a constant")
    try:
        inv0 = K.inverse(c0)
    except DomainError:
        raise DomainError(f"constant term {c0} is not a unit in {K}") from None
    parts = {d: u.homogeneous_part(d) for d in range(1, truncation + 1)}
    v = [ring.constant(inv0)]
    for k in range(1, truncation + 1):
        acc = ring.zero
        for j in range(1, k + 1):
            if parts[j] and v[k - j]:
                acc = acc + poly_mul(parts[j], v[k - j])
        v.append(acc * K(-inv0))
    out: dict[Monomial, object] = {}
    for part in v:
        out.update(part._terms)
    return GradedPolynomial._raw(ring, out)


def change_ring(p: GradedPolynomial, target: PolyRing) -> GradedPolynomial:
    """Re-express ``p`` in ``target``, matching variables by name.

    Coefficients are converted by the target ring (so ZZ -> GF2 reduces mod 2).
    """
    idx = []
    for n in p.ring.names:
        if n in target._index:
            idx.append(target._index[n])
        else:
            idx.append(None)
    out: dict[Monomial, object] = {}
    K = target.coefficients
    for m, c in p._terms.items():
        t = [0] * target.nvars
        for i, e in enumerate(m):
            if e:
                if idx[i] is None:
                    raise ConfigurationError(f"variable {p.ring.names[i]!r} missing from {target!r}")
                if target.weights[idx[i]] != p.ring.weights[i]:
                    raise ConfigurationError(f"variable {p.ring.names[i]!r} has different degree in target")
                t[idx[i]] = e
        t = tuple(t)
        out[t] = out.get(t, 0) + c
    return GradedPolynomial(target, {m: K(c) for m, c in out.items()})


def substitute(p: GradedPolynomial, values: Mapping[str, GradedPolynomial], target: PolyRing,
               truncation: int | None = None) -> GradedPolynomial:
    """Evaluate ``p`` with each variable replaced by a polynomial of ``target``."""
    K = target.coefficients
    vals = []
    for n in p.ring.names:
        if n not in values:
            vals.append(None)
        else:
            v = values[n]
            if not v.ring.same_as(target):
                raise ConfigurationError(f"value for {n!r} is not in the target ring")
            vals.append(v)
    powers: dict[tuple[int, int], GradedPolynomial] = {}

    def power(i, e):
        if (i, e) not in powers:
            powers[(i, e)] = poly_pow(vals[i], e, truncation)
        return powers[(i, e)]

    result = target.zero
    for m, c in p._terms.items():
        term = target.constant(K(c))
        for i, e in enumerate(m):
            if e:
                if vals[i] is None:
                    raise ConfigurationError(f"no value supplied for {p.ring.names[i]!r}")
                term = poly_mul(term, power(i, e), truncation)
                if not term:
                    break
        result = result + term
    return result


# text form

def monomial_text(ring: PolyRing, m: Monomial) -> str:
    parts = []
    for name, e in zip(ring.names, m):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts)


def print_key(ring: PolyRing, m: Monomial):
    """Ascending degree, then descending graded-lex within a degree."""
    return (ring.monomial_degree(m), tuple(-e for e in monomial_order_key(m)))


def to_text(p: GradedPolynomial) -> str:
    """Canonical text ``coeff*var^e*... + ...``; coefficient 1 is omitted."""
    if not p._terms:
        return "0"
    ring = p.ring
    out = []
    for m in sorted(p._terms, key=lambda m: print_key(ring, m)):
        c = p._terms[m]
        mono = monomial_text(ring, m)
        neg = c < 0
        a = -c if neg else c
        if not mono:
            body = str(a)
        elif a == 1:
            body = mono
        else:
            body = f"{a}*{mono}"
        if not out:
            out.append(("-" if neg else "") + body)
        else:
            out.append((" - " if neg else " + ") + body)
    return "".join(out)


# quotient rings

class _Echelon:
    """Reduced row echelon data for one degree slice.

    Columns are indexed so that column 0 is the *most* preferred basis
    monomial; pivots are taken at the highest column index present, so pivot
    monomials are the least preferred ones.
    """

    def __init__(self, field: Coefficients, ncols: int):
        self.field = field
        self.ncols = ncols
        self.rows: dict[int, object] = {}  # pivot column -> row
        self.gf2 = field is GF2

    def add(self, vec):
        """Insert a vector (int bitmask for GF2, dict col->coeff otherwise)."""
        if self.gf2:
            v = vec
            while v:
                p = v.bit_length() - 1
                r = self.rows.get(p)
                if r is None:
                    self.rows[p] = v
                    return True
                v ^= r
            return False
        K = self.field
        v = dict(vec)
        while v:
            p = max(v)
            r = self.rows.get(p)
            if r is None:
                inv = K.inverse(v[p])
                self.rows[p] = {c: K(x * inv) for c, x in v.items()}
                return True
            f = v[p]
            for c, x in r.items():
                y = K(v.get(c, 0) - f * x)
                if y:
                    v[c] = y
                else:
                    v.pop(c, None)
        return False

    def finish(self):
        """Back-substitute so every pivot column appears in exactly one row."""
        pivots = sorted(self.rows)
        if self.gf2:
            for p in pivots:
                r = self.rows[p]
                for q in pivots:
                    if q < p and (r >> q) & 1:
                        r ^= self.rows[q]
                self.rows[p] = r
            return
        K = self.field
        for p in pivots:
            r = self.rows[p]
            for q in pivots:
                if q < p and r.get(q):
                    f = r[q]
                    for c, x in self.rows[q].items():
                        y = K(r.get(c, 0) - f * x)
                        if y:
                            r[c] = y
                        else:
                            r.pop(c, None)
            self.rows[p] = r

    def reduce(self, vec):
        if self.gf2:
            v = vec
            for p, r in self.rows.items():
                if (v >> p) & 1:
                    v ^= r
            return v
        K = self.field
        v = dict(vec)
        for p, r in self.rows.items():
            f = v.get(p)
            if f:
                for c, x in r.items():
                    y = K(v.get(c, 0) - f * x)
                    if y:
                        v[c] = y
                    else:
                        v.pop(c, None)
        return v

    @property
    def rank(self):
        return len(self.rows)


class QuotientRing:
    """Graded quotient ``K[x]/(relations)`` with per-degree normal forms.

    ``preference`` maps a monomial to a sort key; among monomials of the same
    degree, those with smaller keys are preferred as quotient basis elements.
    The default prefers lex-smaller monomials with the last variable most
    significant, i.e. the pivots are the graded-lex leading terms.
    All per-degree data up to ``truncation_degree`` is computed eagerly.
    """

    def __init__(self, ring: PolyRing, relations: Iterable[GradedPolynomial],
                 truncation_degree: int = 20,
                 preference: Callable[[Monomial], object] | None = None):
        if not ring.coefficients.is_field:
            raise ConfigurationError(
                f"quotient normal forms need field coefficients, got {ring.coefficients}")
        rels = []
        for r in relations:
            if not r.ring.same_as(ring):
                raise ConfigurationError("relation is not in the quotient's ring")
            if not r.is_homogeneous():
                raise ValueError(f"relation {r} is not homogeneous")
            if r:
                rels.append(r)
        self.ring = ring
        self.relations: tuple[GradedPolynomial, ...] = tuple(rels)
        self.truncation_degree = truncation_degree
        self.preference = preference or monomial_order_key
        self._columns: list[list[Monomial]] = []
        self._colindex: list[dict[Monomial, int]] = []
        self._echelon: list[_Echelon] = []
        self._basis: list[list[Monomial]] = []
        for d in range(truncation_degree + 1):
            self._build_degree(d)

    def __repr__(self):
        rel = ", ".join(to_text(r) for r in self.relations)
        return f"QuotientRing({self.ring!r} / ({rel}), trunc={self.truncation_degree})"

    @property
    def coefficients(self):
        return self.ring.coefficients

    def _build_degree(self, d):
        ring = self.ring
        monos = ring.monomials_of_degree(d)
        cols = sorted(monos, key=lambda m: (self.preference(m), monomial_order_key(m)))
        index = {m: i for i, m in enumerate(cols)}
        ech = _Echelon(ring.coefficients, len(cols))
        for r in self.relations:
            e = r.degree()
            if e > d:
                continue
            for mono in ring.monomials_of_degree(d - e):
                vec = self._vector({tuple(x + y for x, y in zip(m, mono)): c for m, c in r.items()},
                                   index)
                ech.add(vec)
        ech.finish()
        pivots = set(ech.rows)
        basis = [cols[i] for i in range(len(cols)) if i not in pivots]
        self._columns.append(cols)
        self._colindex.append(index)
        self._echelon.append(ech)
        self._basis.append(basis)

    def _vector(self, terms, index):
        if self.ring.coefficients is GF2:
            v = 0
            for m, c in terms.items():
                if c & 1:
                    v ^= 1 << index[m]
            return v
        K = self.ring.coefficients
        out = {}
        for m, c in terms.items():
            i = index[m]
            y = K(out.get(i, 0) + c)
            if y:
                out[i] = y
            else:
                out.pop(i, None)
        return out

    def _check_degree(self, d):
        if d > self.truncation_degree or d < 0:
            raise OutOfRangeError(f"degree {d} outside 0..{self.truncation_degree}")

    def dimension(self, d: int) -> int:
        self._check_degree(d)
        return len(self._basis[d])

    def dimensions(self) -> list[int]:
        return [len(b) for b in self._basis]

    def ideal_rank(self, d: int) -> int:
        self._check_degree(d)
        return self._echelon[d].rank

    def basis_of_degree(self, d: int) -> list[Monomial]:
        """Quotient basis monomials of degree ``d``, most preferred first."""
        self._check_degree(d)
        return list(self._basis[d])

    def normal_form(self, p: GradedPolynomial) -> GradedPolynomial:
        """The unique representative of ``p`` supported on basis monomials."""
        if not p.ring.same_as(self.ring):
            raise ConfigurationError("polynomial is not in the quotient's ring")
        deg = self.ring.monomial_degree
        byd: dict[int, dict] = {}
        for m, c in p.items():
            byd.setdefault(deg(m), {})[m] = c
        out = {}
        for d, terms in byd.items():
            self._check_degree(d)
            cols = self._columns[d]
            v = self._echelon[d].reduce(self._vector(terms, self._colindex[d]))
            if self.ring.coefficients is GF2:
                while v:
                    i = v.bit_length() - 1
                    out[cols[i]] = 1
                    v ^= 1 << i
            else:
                for i, c in v.items():
                    out[cols[i]] = c
        return GradedPolynomial._raw(self.ring, out)

    def reduce(self, p: GradedPolynomial) -> GradedPolynomial:
        """Normal form after discarding parts above the truncation degree."""
        return self.normal_form(p.truncate(self.truncation_degree))

    def mul(self, a: GradedPolynomial, b: GradedPolynomial) -> GradedPolynomial:
        return self.normal_form(poly_mul(a, b, self.truncation_degree))

    def pow(self, a: GradedPolynomial, n: int) -> GradedPolynomial:
        return self.normal_form(poly_pow(a, n, self.truncation_degree))

    def equal(self, a: GradedPolynomial, b: GradedPolynomial) -> bool:
        return self.normal_form(a - b).is_zero()

    def coordinates(self, p: GradedPolynomial, d: int) -> list:
        """Coordinates of the degree-``d`` part of ``p`` on ``basis_of_degree(d)``."""
        nf = self.normal_form(p.homogeneous_part(d))
        return [nf.coefficient(m) for m in self._basis[d]]

    def contains(self, p: GradedPolynomial) -> bool:
        return self.normal_form(p).is_zero()


def monomials_up_to(ring: PolyRing, d: int) -> Iterable[Monomial]:
    return itertools.chain.from_iterable(ring.monomials_of_degree(k) for k in range(d + 1))
