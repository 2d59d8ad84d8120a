"""Numeric consequences of the cup-product kernel bounds.

``d_{q,m}`` is the largest dimension of a real space of ``q x q`` Hermitian
matrices whose nonzero members all have rank at least ``m``.  Everything
here is integer arithmetic; each number carries where it came from, and
facts that depend on a computation are marked verified only when that
computation was run and passed.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass, field
from enum import Enum

from .hermitian import two_adic

__all__ = [
    "Provenance", "DEntry", "KernelBoundReport", "Pi1Report", "SurfaceReport",
    "d_bound", "kernel_bound", "pi1_bound", "noether_window", "two_adic", "wedge2",
]


class Provenance(str, Enum):
    TRIVIAL_ZERO = "trivial-zero"
    ADAMS_FORMULA = "adams-formula"
    SECTION3_PARITY = "section3-parity"
    EXPLICIT_FAMILY = "explicit-family"
    UNKNOWN = "unknown"


def _status(passed: bool | None) -> str:
    return "verified" if passed else "cited"


@dataclass(frozen=True)
class DEntry:
    q: int
    m: int
    lower: int | None
    upper: int | None
    provenance: tuple[Provenance, ...]
    status: dict[str, str] = field(default_factory=dict)

    def __post_init__(self):
        if self.lower is not None and self.upper is not None and self.lower > self.upper:
            raise ValueError(f"lower {self.lower} exceeds upper {self.upper}")

    @property
    def exact(self) -> int | None:
        return self.lower if self.lower is not None and self.lower == self.upper else None

    def to_json(self) -> dict:
        return {"q": self.q, "m": self.m, "lower": self.lower, "upper": self.upper,
                "provenance": [p.value for p in self.provenance], "status": dict(self.status)}


def d_bound(q: int, m: int, verifications: dict[str, bool] | None = None) -> DEntry:
    """Known values of ``d_{q,m}``.

    ``verifications`` may hold ``section3`` and ``family`` flags from this
    run; without them the (5, 4) entry is reported as cited.
    """
    if q < 1 or m < 1:
        raise ValueError("q and m must be positive")
    v = verifications or {}
    if q <= m - 1:
        return DEntry(q, m, 0, 0, (Provenance.TRIVIAL_ZERO,), {"value": "derived"})
    if q == m:
        _, c = two_adic(q)
        return DEntry(q, m, 2 * c + 1, 2 * c + 1, (Provenance.ADAMS_FORMULA,),
                      {"value": "cited", "lower": _status(v.get("clifford"))})
    if (q, m) == (5, 4):
        return DEntry(q, m, 7, 8, (Provenance.EXPLICIT_FAMILY, Provenance.SECTION3_PARITY),
                      {"lower": _status(v.get("family")), "upper": _status(v.get("section3"))})
    return DEntry(q, m, None, None, (Provenance.UNKNOWN,), {})


def wedge2(k: int) -> int:
    return k * (k - 1) // 2


@dataclass(frozen=True)
class KernelBoundReport:
    n: int
    q: int
    b: int | None
    c: int | None
    kappa_bound: int | None
    ker20_bound: int | None
    total_bound: int | None
    im_phi_lower: int | None
    b2_lower: int | None
    applicable_case: str
    provenance: list[str] = field(default_factory=list)

    def to_json(self) -> dict:
        return asdict(self)


def kernel_bound(n: int, q: int, verifications: dict[str, bool] | None = None) -> KernelBoundReport:
    """Bounds on ``ker(phi: wedge^2 H^1 -> H^2)`` for an ``n``-fold of irregularity ``q``."""
    if n < 1 or q < 0:
        raise ValueError("need n >= 1 and q >= 0")
    wedge = wedge2(2 * q)  # complex dimension of wedge^2 H^1, which is q(2q - 1)
    b = c = None
    if q >= 1:
        b, c = two_adic(q)
    if q <= 2 * n - 1:
        case, kappa, k20, total = "injective", 0, 0, 0
        prov = ["phi injective for q <= 2n - 1"]
    elif q == 2 * n:
        case, kappa, k20 = "q-equals-2n", 2 * c + 1, 1
        total = kappa + 2 * k20
        prov = [f"kappa <= d_(q,q) = 2c+1 ({Provenance.ADAMS_FORMULA.value})", "dim ker phi^(2,0) <= 1"]
    elif (n, q) == (2, 5):
        d54 = d_bound(5, 4, verifications)
        case, kappa = "q5n2", d54.upper
        k20 = wedge2(q) - (2 * q - 3)
        total = kappa + 2 * k20
        prov = [f"kappa <= d_(5,4) <= 8 ({Provenance.SECTION3_PARITY.value}, {d54.status['upper']})",
                "dim Im phi^(2,0) >= 2q - 3"]
    else:
        d = d_bound(q, 2 * n, verifications)
        case, kappa, k20, total = "out-of-table", d.upper, None, None
        prov = [f"kappa <= d_(q,2n) = {d.upper}" if d.upper is not None else "no bound known"]
    im = wedge - total if total is not None else None
    return KernelBoundReport(n, q, b, c, kappa, k20, total, im, im, case, prov)


@dataclass(frozen=True)
class Pi1Report:
    n: int
    q: int
    im_phi_lower: int | None
    rho_minus_gamma_lower: int | None
    b2_lower: int | None
    c2_lower: int | None
    general_position_bound: int
    stated_rho_minus_gamma: int | None = None
    discrepancy: bool = False

    def to_json(self) -> dict:
        return asdict(self)


# values printed alongside the formula where the two differ
_STATED_RHO_MINUS_GAMMA = {(2, 5): 31}


def pi1_bound(n: int, q: int, verifications: dict[str, bool] | None = None) -> Pi1Report:
    """``rho - gamma >= dim Im(phi) - 2q``; for surfaces ``c2 = 2 - 4q + b2``."""
    kb = kernel_bound(n, q, verifications)
    im = kb.im_phi_lower
    rg = im - 2 * q if im is not None else None
    c2 = 2 - 4 * q + kb.b2_lower if n == 2 and kb.b2_lower is not None else None
    stated = _STATED_RHO_MINUS_GAMMA.get((n, q))
    return Pi1Report(n, q, im, rg, kb.b2_lower, c2, 4 * q - 7, stated,
                     stated is not None and stated != rg)


@dataclass(frozen=True)
class SurfaceReport:
    q: int
    p_g: int
    chi_hol: int
    noether_sum: int
    K2_prior_lower: int
    c2_lower: int
    K2_window: tuple[int, int]
    miyaoka_bound: int
    rho_minus_gamma_lower: int | None
    consistent: bool
    provenance: list[str] = field(default_factory=list)

    def to_json(self) -> dict:
        d = asdict(self)
        d["K2_window"] = list(self.K2_window)
        return d


def noether_window(q: int, p_g: int, K2_prior_lower: int = 0, c2_lower: int | None = None,
                   verifications: dict[str, bool] | None = None) -> SurfaceReport:
    """Window for ``K^2`` from ``K^2 + c2 = 12 (p_g - q + 1)``.

    Without ``c2_lower`` the surface bound from :func:`pi1_bound` is used
    (zero if there is none).
    """
    prov = []
    pi = pi1_bound(2, q, verifications) if q >= 0 else None
    if c2_lower is None:
        c2_lower = pi.c2_lower if pi and pi.c2_lower is not None else 0
        prov.append("c2 lower bound derived from the kernel bound" if pi and pi.c2_lower is not None
                    else "no c2 lower bound")
    else:
        prov.append("c2 lower bound supplied")
    if K2_prior_lower:
        prov.append("K^2 lower bound supplied (cited, not verified here)")
    chi = p_g - q + 1
    total = 12 * chi
    lo, hi = K2_prior_lower, total - c2_lower
    return SurfaceReport(q, p_g, chi, total, K2_prior_lower, c2_lower, (lo, hi), 9 * chi,
                         pi.rho_minus_gamma_lower if pi else None, lo <= hi, prov)
