"""Exact cohomology of Grassmannians and projective bundles, with Hermitian-matrix checks.

Submodules: ``polyring`` (graded polynomials and quotient rings), ``schubert``
(Schubert calculus), ``chern`` (characteristic classes), ``pipeline`` (the
parity computation), ``hermitian`` (exact Hermitian linear algebra), ``bounds``
(numeric consequences) and ``cli``.
"""

__version__ = "0.1.0"
