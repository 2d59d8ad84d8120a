"""Characteristic classes of formal bundles.

A bundle is a rank plus a total Chern class living in a :class:`PolyRing`
whose variables are Chern classes (``c1, c2, ...``) and possibly a
hyperplane class ``h``.  Tensor products go through the splitting principle:
the product over Chern roots is expanded once per pair of ranks and rewritten
in elementary symmetric polynomials, then the Chern classes are substituted.

Projective bundles parametrize lines: with ``h = c1(O(1))`` the defining
relation is ``h^r + c1(E) h^(r-1) + ... + cr(E) = 0`` and the pushforward
sends ``h^(r-1+j)`` to the degree-``j`` part of ``c(E)^(-1)``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import lru_cache

from .polyring import (
    GF2,
    ZZ,
    Coefficients,
    ConfigurationError,
    GradedPolynomial,
    GradedVariable,
    PolyRing,
    QuotientRing,
    change_ring,
    monomial_order_key,
    poly_inverse_graded,
    poly_mul,
    poly_pow,
    substitute,
)
from .schubert import Grassmannian, SchubertElement, chern_of_tautological, evaluate_chern


@dataclass(frozen=True)
class BundleClass:
    rank: int
    total: GradedPolynomial
    name: str = ""

    def __post_init__(self):
        if self.rank < 0:
            raise ValueError("rank must be nonnegative")
        if self.total.constant_term() != 1:
            raise ValueError(f"total Chern class of {self.name or 'bundle'} must have constant term 1")

    @property
    def ring(self) -> PolyRing:
        return self.total.ring

    def c(self, i: int) -> GradedPolynomial:
        return self.total.homogeneous_part(i)

    def lift(self, ring: PolyRing) -> BundleClass:
        return BundleClass(self.rank, change_ring(self.total, ring), self.name)


def _truncation(ring: PolyRing, truncation):
    t = ring.truncation if truncation is None else truncation
    if t is None:
        raise ValueError("no truncation degree given and the ring has none")
    return t


def trivial_bundle(ring: PolyRing, rank: int, name: str = "") -> BundleClass:
    return BundleClass(rank, ring.one, name or f"O^{rank}")


def line_bundle(c1: GradedPolynomial, name: str = "") -> BundleClass:
    return BundleClass(1, c1.ring.one + c1, name)


def whitney_sum(E: BundleClass, F: BundleClass, truncation: int | None = None) -> BundleClass:
    if not E.ring.same_as(F.ring):
        raise ConfigurationError("bundles live in different rings")
    t = E.ring.truncation if truncation is None else truncation
    return BundleClass(E.rank + F.rank, poly_mul(E.total, F.total, t), f"{E.name}+{F.name}")


def direct_sum_power(E: BundleClass, copies: int, truncation: int | None = None) -> BundleClass:
    t = E.ring.truncation if truncation is None else truncation
    return BundleClass(E.rank * copies, poly_pow(E.total, copies, t), f"{E.name}^{copies}")


def dual(E: BundleClass) -> BundleClass:
    """``c_i -> (-1)^i c_i``; the identity over GF2."""
    ring = E.ring
    deg = ring.monomial_degree
    flipped = {m: (-c if deg(m) % 2 else c) for m, c in E.total.items()}
    return BundleClass(E.rank, ring.from_terms(flipped), f"{E.name}*")


def segre(E: BundleClass, truncation: int | None = None) -> GradedPolynomial:
    """Total Segre class ``c(E)^(-1)``."""
    return poly_inverse_graded(E.total, _truncation(E.ring, truncation))


def quotient_by(E: BundleClass, rank: int, total_ambient: GradedPolynomial | None = None,
                truncation: int | None = None, name: str = "") -> BundleClass:
    """``V/E`` for a trivial ambient ``V`` (or one with total class ``total_ambient``)."""
    t = _truncation(E.ring, truncation)
    s = segre(E, t)
    if total_ambient is not None:
        s = poly_mul(total_ambient, s, t)
    return BundleClass(rank, s, name or f"quotient by {E.name}")


# splitting principle

def elementary_symmetric(ring: PolyRing, idx: list[int], k: int) -> GradedPolynomial:
    from itertools import combinations
    terms = {}
    for combo in combinations(idx, k):
        m = [0] * ring.nvars
        for i in combo:
            m[i] = 1
        terms[tuple(m)] = 1
    return ring.from_terms(terms)


def symmetric_rewrite(p: GradedPolynomial, groups: list[list[int]]) -> dict[tuple[tuple[int, ...], ...], int]:
    """Write ``p`` (symmetric in each group of root variables) in elementary symmetric polynomials.

    Leading-term subtraction under lex order: if the lex-largest monomial has
    exponents ``al`` on a group, subtract ``prod_k e_k^(al_k - al_{k+1})``.
    Returns ``{(exponents of e_1..e_r for each group): coefficient}``.
    Raises ``ValueError`` if ``p`` is not symmetric.
    """
    ring = p.ring
    t = ring.truncation
    elem = [[elementary_symmetric(ring, g, k + 1) for k in range(len(g))] for g in groups]
    cache: dict[tuple, GradedPolynomial] = {}

    def e_product(key):
        if key not in cache:
            out = ring.one
            for gi, exps in enumerate(key):
                for k, e in enumerate(exps):
                    if e:
                        out = poly_mul(out, poly_pow(elem[gi][k], e, t), t)
            cache[key] = out
        return cache[key]

    result: dict[tuple, int] = {}
    rest = p
    while rest:
        lead = max(rest, key=lambda m: m)
        coeff = rest.coefficient(lead)
        key = []
        for g in groups:
            al = [lead[i] for i in g]
            if any(a < b for a, b in zip(al, al[1:])):
                raise ValueError("polynomial is not symmetric in the given root variables")
            al.append(0)
            key.append(tuple(al[k] - al[k + 1] for k in range(len(g))))
        key = tuple(key)
        result[key] = result.get(key, 0) + coeff
        rest = rest - e_product(key) * coeff
    return {k: v for k, v in result.items() if v}


def expand_elementary(rewritten: dict, ring: PolyRing, groups: list[list[int]]) -> GradedPolynomial:
    """Inverse of :func:`symmetric_rewrite`: expand back into root variables."""
    t = ring.truncation
    out = ring.zero
    for key, c in rewritten.items():
        term = ring.constant(c)
        for gi, exps in enumerate(key):
            for k, e in enumerate(exps):
                if e:
                    term = poly_mul(term, poly_pow(elementary_symmetric(ring, groups[gi], k + 1), e, t), t)
        out = out + term
    return out


def root_ring(r: int, s: int, truncation: int) -> PolyRing:
    names = [f"x{i}" for i in range(1, r + 1)] + [f"y{j}" for j in range(1, s + 1)]
    return PolyRing(names, ZZ, truncation)


@lru_cache(maxsize=None)
def universal_tensor(r: int, s: int, truncation: int) -> GradedPolynomial:
    """``c(E x F)`` as an integer polynomial in ``a_i = c_i(E)``, ``b_j = c_j(F)``."""
    R = root_ring(r, s, truncation)
    x = R.gens()[:r]
    y = R.gens()[r:]
    prod = R.one
    for xi in x:
        for yj in y:
            prod = poly_mul(prod, R.one + xi + yj, truncation)
    groups = [list(range(r)), list(range(r, r + s))]
    rewritten = symmetric_rewrite(prod, groups)
    target = PolyRing([GradedVariable(f"a{i}", i) for i in range(1, r + 1)]
                      + [GradedVariable(f"b{j}", j) for j in range(1, s + 1)], ZZ, truncation)
    terms = {}
    for (ea, eb), c in rewritten.items():
        terms[tuple(ea) + tuple(eb)] = c
    return target.from_terms(terms)


def tensor(E: BundleClass, F: BundleClass, truncation: int | None = None) -> BundleClass:
    """``c(E x F)`` by the splitting principle, truncated at the base dimension."""
    if not E.ring.same_as(F.ring):
        raise ConfigurationError("bundles live in different rings")
    t = _truncation(E.ring, truncation)
    r, s = E.rank, F.rank
    name = f"{E.name}(x){F.name}"
    if r == 0 or s == 0:
        return trivial_bundle(E.ring, 0, name)
    U = universal_tensor(r, s, t)
    values = {f"a{i}": E.c(i) for i in range(1, r + 1)}
    values.update({f"b{j}": F.c(j) for j in range(1, s + 1)})
    total = substitute(U, values, E.ring, t)
    return BundleClass(r * s, total, name)


# rings of Chern classes

def chern_ring(k: int, coefficients: Coefficients = GF2, with_h: bool = False,
               truncation: int | None = None) -> PolyRing:
    vs = [GradedVariable(f"c{i}", i) for i in range(1, k + 1)]
    if with_h:
        vs.append(GradedVariable("h", 1))
    return PolyRing(vs, coefficients, truncation)


def chern_preference(ring: PolyRing, late: tuple[str, ...] | None = None):
    """Quotient basis preference for Chern-class presentations.

    Monomials are ranked by the exponents of the ``late`` variables first
    (``h``, then ``c_k`` down to ``c3``; these are the classes rewritten in
    terms of the others), then monomials with more distinct factors come
    first, then graded-lex order.  For Gr(3,5) this keeps ``c1^3``, ``c1*c2``
    in degree 3, ``c1^4`` in degree 4 and ``c1^4*c2`` in degree 6.
    """
    if late is None:
        cs = sorted((n for n in ring.names if re.fullmatch(r"c\d+", n) and int(n[1:]) >= 3),
                    key=lambda n: -int(n[1:]))
        late = (("h",) if "h" in ring.names else ()) + tuple(cs)
    pos = [ring.index(n) for n in late if n in ring.names]

    def key(m):
        return (tuple(m[i] for i in pos), -sum(1 for e in m if e), monomial_order_key(m))

    return key


@dataclass
class GrassmannianPresentation:
    """``K[c1..ck] / (s_{n-k+1}, ..., s_n)`` with the tautological bundles."""

    k: int
    n: int
    raw_ring: PolyRing
    quotient: QuotientRing | None
    S: BundleClass
    Q: BundleClass
    relations: list[GradedPolynomial] = field(default_factory=list)

    @property
    def dim(self) -> int:
        return self.k * (self.n - self.k)

    def reduce(self, p: GradedPolynomial) -> GradedPolynomial:
        if self.quotient is None:
            raise ConfigurationError("no quotient normal forms over ZZ; use the Schubert oracle")
        return self.quotient.reduce(p)

    def schubert(self, p: GradedPolynomial, modulus: int | None = None) -> SchubertElement:
        return evaluate_chern(p, Grassmannian(self.k, self.n), modulus)


def grassmannian_presentation(k: int, n: int, coefficients: Coefficients = GF2) -> GrassmannianPresentation:
    dim = k * (n - k)
    R = chern_ring(k, coefficients, truncation=dim)
    S = BundleClass(k, R.one + sum(R.gens(), R.zero), "S")
    s = segre(S, dim)
    relations = [s.homogeneous_part(j) for j in range(n - k + 1, n + 1)]
    quotient = None
    if coefficients.is_field:
        quotient = QuotientRing(R, relations, dim, preference=chern_preference(R))
    Q = BundleClass(n - k, s, "Q")
    return GrassmannianPresentation(k, n, R, quotient, S, Q, relations)


# projective bundles

@dataclass
class ProjectiveBundleContext:
    base_ring: PolyRing
    base_quotient: QuotientRing | None
    base_dim: int
    bundle: BundleClass
    ring: PolyRing
    quotient: QuotientRing | None
    relation: GradedPolynomial
    h: str = "h"

    @property
    def rank(self) -> int:
        return self.bundle.rank

    @property
    def fiber_dim(self) -> int:
        return self.bundle.rank - 1

    @property
    def dim(self) -> int:
        return self.base_dim + self.fiber_dim

    def gen(self) -> GradedPolynomial:
        return self.ring.gen(self.h)

    def reduce(self, p: GradedPolynomial) -> GradedPolynomial:
        if self.quotient is None:
            raise ConfigurationError("no quotient normal forms over ZZ")
        return self.quotient.reduce(p)

    def lift(self, p: GradedPolynomial) -> GradedPolynomial:
        return change_ring(p, self.ring)


def projective_bundle_ring(E: BundleClass, base: QuotientRing | PolyRing, base_dim: int,
                           h: str = "h", truncation: int | None = None) -> ProjectiveBundleContext:
    """``H*(P(E)) = H*(B)[h] / (h^r + c1(E) h^(r-1) + ... + cr(E))``."""
    if E.rank < 1:
        raise ValueError("projective bundle needs rank >= 1")
    if isinstance(base, QuotientRing):
        base_ring, base_quotient, base_rel = base.ring, base, list(base.relations)
    else:
        base_ring, base_quotient, base_rel = base, None, []
    if not E.ring.same_as(base_ring):
        raise ConfigurationError("bundle does not live on the given base")
    r = E.rank
    top = base_dim + r - 1 if truncation is None else truncation
    ring = PolyRing(list(base_ring.variables) + [GradedVariable(h, 1)], base_ring.coefficients, top)
    hh = ring.gen(h)
    c = change_ring(E.total, ring)
    relation = ring.zero
    for i in range(r + 1):
        relation = relation + poly_mul(c.homogeneous_part(i), poly_pow(hh, r - i))
    quotient = None
    if base_ring.coefficients.is_field:
        rels = [change_ring(x, ring) for x in base_rel] + [relation]
        quotient = QuotientRing(ring, rels, top, preference=chern_preference(ring))
    return ProjectiveBundleContext(base_ring, base_quotient, base_dim, E, ring, quotient, relation, h)


def pushforward(ctx: ProjectiveBundleContext, cls: GradedPolynomial) -> GradedPolynomial:
    """Integrate over the fibres: ``alpha * h^(r-1+j) -> alpha * s_j(E)``."""
    if not cls.ring.same_as(ctx.ring):
        raise ConfigurationError("class is not in the projective bundle ring")
    base = ctx.base_ring
    hi = ctx.ring.index(ctx.h)
    r = ctx.rank
    s = segre(ctx.bundle, ctx.base_dim)
    sparts = {j: s.homogeneous_part(j) for j in range(ctx.base_dim + 1)}
    out = base.zero
    keep = [i for i in range(ctx.ring.nvars) if i != hi]
    for m, coeff in cls.items():
        j = m[hi] - (r - 1)
        if j < 0 or j > ctx.base_dim:
            continue
        alpha = base.monomial(tuple(m[i] for i in keep), coeff)
        out = out + poly_mul(alpha, sparts[j], ctx.base_dim)
    if ctx.base_quotient is not None:
        out = ctx.base_quotient.reduce(out)
    return out


class BundleOverGrassmannian:
    """Independent oracle for ``H*(P(E))`` over a Grassmannian.

    Elements are ``{j: SchubertElement}`` meaning ``sum_j a_j h^j`` with
    ``j < rank(E)``; higher powers of ``h`` are eliminated with the
    projective bundle relation, all arithmetic in the Schubert basis.
    """

    def __init__(self, grass: Grassmannian, bundle_chern: list[SchubertElement], modulus: int | None = None):
        self.grass = grass
        self.modulus = modulus
        self.rank = len(bundle_chern) - 1
        self.c = [x.reduce(modulus) if modulus else x for x in bundle_chern]
        self._hpow: dict[int, dict[int, SchubertElement]] = {}

    @classmethod
    def from_bundle(cls, E: BundleClass, grass: Grassmannian, modulus: int | None = None):
        if E.ring.coefficients is GF2:
            modulus = 2
        cs = [evaluate_chern(E.c(i), grass, modulus) for i in range(E.rank + 1)]
        return cls(grass, cs, modulus)

    def zero(self):
        return {}

    def _clean(self, elem):
        return {j: a for j, a in elem.items() if a}

    def h_power(self, e: int) -> dict[int, SchubertElement]:
        r = self.rank
        if e < r:
            return {e: self.grass.one(self.modulus)}
        if e not in self._hpow:
            prev = self.h_power(e - 1)
            out: dict[int, SchubertElement] = {}
            for j, a in prev.items():
                if j + 1 < r:
                    out[j + 1] = out.get(j + 1, self.grass.zero(self.modulus)) + a
                else:
                    for i in range(1, r + 1):
                        term = -(a * self.c[i])
                        if term:
                            out[r - i] = out.get(r - i, self.grass.zero(self.modulus)) + term
            self._hpow[e] = self._clean(out)
        return self._hpow[e]

    def evaluate(self, p: GradedPolynomial, h: str = "h") -> dict[int, SchubertElement]:
        """Image of a polynomial in ``c1..ck, h`` with ``c_i -> c_i(S)``."""
        ring = p.ring
        hi = ring.index(h)
        base_ring = PolyRing([v for v in ring.variables if v.name != h], ring.coefficients)
        keep = [i for i in range(ring.nvars) if i != hi]
        out: dict[int, SchubertElement] = {}
        for m, c in p.items():
            alpha = evaluate_chern(base_ring.monomial(tuple(m[i] for i in keep), c), self.grass, self.modulus)
            if not alpha:
                continue
            for j, a in self.h_power(m[hi]).items():
                prod = alpha * a
                if prod:
                    out[j] = out.get(j, self.grass.zero(self.modulus)) + prod
        return self._clean(out)

    def integrate(self, elem: dict[int, SchubertElement]) -> int:
        a = elem.get(self.rank - 1)
        if a is None:
            return 0
        return a.coefficient(self.grass.top)

    def to_text(self, elem: dict[int, SchubertElement]) -> str:
        if not elem:
            return "0"
        pieces = []
        for j in sorted(elem):
            a = elem[j]
            for la in sorted(a.terms, key=lambda la: (sum(la), la)):
                c = a.terms[la]
                factors = []
                if la:
                    factors.append("s[" + ",".join(map(str, la)) + "]")
                if j == 1:
                    factors.append("h")
                elif j > 1:
                    factors.append(f"h^{j}")
                mag = abs(c)
                body = "*".join(factors) or "1"
                if mag != 1:
                    body = f"{mag}*{body}" if factors else str(mag)
                pieces.append((c < 0, body))
        out = ""
        for i, (neg, body) in enumerate(pieces):
            if i == 0:
                out = ("-" if neg else "") + body
            else:
                out += (" - " if neg else " + ") + body
        return out


def schubert_chern_classes(grass: Grassmannian, copies: int = 1, modulus: int | None = None) -> list[SchubertElement]:
    """Chern classes of ``S^(+copies)`` on ``grass`` in the Schubert basis."""
    cS = grass.zero(modulus)
    for i in range(grass.k + 1):
        cS = cS + chern_of_tautological(grass, i, modulus)
    total = grass.one(modulus)
    for _ in range(copies):
        total = total * cS
    return [total.homogeneous_part(i) for i in range(grass.k * copies + 1)]
