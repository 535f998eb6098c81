"""Eigenvalue computation and exact two-eigenvalue certificates.

Two independent routes to a spectrum live here. The floating-point route is
a cyclic Jacobi eigensolver for arbitrary symmetric matrices. The exact
route applies only to signed graphs whose adjacency satisfies a quadratic
A^2 + aA + bI = 0 with integer a, b: such a certificate is verified entry by
entry in integer arithmetic, so it is a proof that the spectrum is exactly
{lambda, mu} with the stated multiplicities, not a numerical estimate.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .core import (
    Graph,
    OrthogonalityCertificate,
    SignedGraph,
    SignedMatrix,
    _trit_product,
    ground,
    is_orthogonal,
)

__all__ = [
    "Spectrum",
    "TwoEigCertificate",
    "eigenvalues_symmetric",
    "certify_two_eigenvalues",
    "degree_from_certificate",
    "bipartite_two_eig_check",
    "spectrum_union",
]

JACOBI_REL_THRESH = 1e-12
JACOBI_MAX_SWEEPS = 100
TRACE_CHECK_TOL = 1e-9
DEFAULT_GROUP_TOL = 1e-6


@dataclass(frozen=True)
class Spectrum:
    """Eigenvalues as (value, multiplicity) pairs, descending by value."""

    pairs: tuple[tuple[float, int], ...]

    def __post_init__(self):
        if not self.pairs:
            raise ValueError("spectrum must contain at least one eigenvalue")
        for v, m in self.pairs:
            if m < 1:
                raise ValueError(f"multiplicity of {v} must be positive, got {m}")
        vals = [v for v, _ in self.pairs]
        if any(x <= y for x, y in zip(vals, vals[1:])):
            raise ValueError("pair values must be strictly descending")

    @property
    def order(self) -> int:
        return sum(m for _, m in self.pairs)

    @classmethod
    def from_values(cls, values, tol: float = DEFAULT_GROUP_TOL) -> "Spectrum":
        """Group raw eigenvalues that lie within tol of their neighbor."""
        return cls.from_pairs(((float(v), 1) for v in values), tol)

    @classmethod
    def from_pairs(cls, pairs, tol: float = DEFAULT_GROUP_TOL) -> "Spectrum":
        """Merge (value, multiplicity) pairs, regrouping at tol."""
        if tol <= 0:
            raise ValueError(f"grouping tolerance must be positive, got {tol}")
        items = sorted((float(v), int(m)) for v, m in pairs)
        if not items:
            raise ValueError("spectrum must contain at least one eigenvalue")
        groups: list[tuple[float, int]] = []
        acc_sum, acc_m, last = 0.0, 0, None
        for v, m in items:
            if m < 1:
                raise ValueError(f"multiplicity of {v} must be positive, got {m}")
            if last is not None and v - last > tol:
                groups.append((acc_sum / acc_m, acc_m))
                acc_sum, acc_m = 0.0, 0
            acc_sum += v * m
            acc_m += m
            last = v
        groups.append((acc_sum / acc_m, acc_m))
        return cls(tuple(reversed(groups)))

    def expand(self) -> list[float]:
        """All eigenvalues with multiplicity, descending."""
        out: list[float] = []
        for v, m in self.pairs:
            out.extend([v] * m)
        return out

    def close_to(self, expected, tol: float = DEFAULT_GROUP_TOL) -> bool:
        """True if pairs match the expected (value, multiplicity) list within tol."""
        want = sorted((float(v), int(m)) for v, m in expected)
        got = sorted(self.pairs)
        return len(want) == len(got) and all(
            abs(v - w) <= tol and m == k for (v, m), (w, k) in zip(got, want)
        )

    def records(self) -> list[dict]:
        return [{"value": round(v, 12), "multiplicity": m} for v, m in self.pairs]

    def __str__(self):
        return "{" + ", ".join(f"{v:.6f}: {m}" for v, m in self.pairs) + "}"


@dataclass(frozen=True)
class TwoEigCertificate:
    """Exact witness that a signed adjacency matrix has spectrum {lam, mu}.

    The defining identity A^2 + a A + b I = 0 is checked over the integers
    before this object is built; lam > mu are the real roots of x^2 + ax + b
    and the multiplicities solve the zero-trace linear system.
    """

    a: int
    b: int
    lam: float
    mu: float
    mult_lam: int
    mult_mu: int

    def __post_init__(self):
        if self.lam <= self.mu:
            raise ValueError("lam must exceed mu")
        if self.mult_lam < 1 or self.mult_mu < 1:
            raise ValueError("multiplicities must be positive")

    def spectrum(self) -> Spectrum:
        return Spectrum(((self.lam, self.mult_lam), (self.mu, self.mult_mu)))


def _to_symmetric_float(m) -> np.ndarray:
    if isinstance(m, SignedGraph):
        a = m.matrix.data
    elif isinstance(m, SignedMatrix):
        a = m.data
    elif isinstance(m, Graph):
        a = m.adjacency()
    else:
        a = np.asarray(m)
    out = np.array(a, dtype=np.float64)
    if out.ndim != 2 or out.shape[0] != out.shape[1]:
        raise ValueError(f"matrix must be square, got shape {out.shape}")
    if out.shape[0] < 1:
        raise ValueError("matrix must have positive order")
    if not np.array_equal(out, out.T):
        raise ValueError("matrix is not symmetric")
    return out


def _jacobi_diagonal(a: np.ndarray) -> np.ndarray:
    """Diagonalize a symmetric matrix in place with cyclic Jacobi sweeps."""
    n = a.shape[0]
    if n == 1:
        return a.diagonal().copy()
    scale = float(np.abs(a).max())
    if scale == 0.0:
        return np.zeros(n)
    thresh = JACOBI_REL_THRESH * scale
    iu = np.triu_indices(n, 1)
    for _ in range(JACOBI_MAX_SWEEPS):
        if float(np.abs(a[iu]).max()) <= thresh:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if abs(apq) <= thresh:
                    continue
                theta = (a[q, q] - a[p, p]) / (2.0 * apq)
                t = 1.0 / (abs(theta) + math.sqrt(theta * theta + 1.0))
                if theta < 0.0:
                    t = -t
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c
                colp = a[:, p].copy()
                colq = a[:, q].copy()
                a[:, p] = c * colp - s * colq
                a[:, q] = s * colp + c * colq
                rowp = a[p, :].copy()
                rowq = a[q, :].copy()
                a[p, :] = c * rowp - s * rowq
                a[q, :] = s * rowp + c * rowq
                a[p, q] = a[q, p] = 0.0
    if float(np.abs(a[iu]).max()) > thresh:
        raise RuntimeError(f"Jacobi iteration did not converge in {JACOBI_MAX_SWEEPS} sweeps")
    return a.diagonal().copy()


def eigenvalues_symmetric(m, tol: float = DEFAULT_GROUP_TOL) -> Spectrum:
    """All eigenvalues of a symmetric matrix, grouped into multiplicities at tol.

    Uses cyclic Jacobi rotations until every off-diagonal magnitude falls
    below 1e-12 times the max-norm of the input. The eigenvalue sum is
    checked against the trace to 1e-9 before returning.
    """
    if tol <= 0:
        raise ValueError(f"grouping tolerance must be positive, got {tol}")
    a = _to_symmetric_float(m)
    trace = float(a.trace())
    eigs = _jacobi_diagonal(a)
    drift = abs(float(eigs.sum()) - trace)
    if drift > TRACE_CHECK_TOL * max(1.0, abs(trace)):
        raise RuntimeError(f"eigenvalue sum drifted {drift:.3e} from the trace")
    return Spectrum.from_values(eigs, tol)


def certify_two_eigenvalues(sg: SignedGraph) -> TwoEigCertificate | None:
    """Exact certificate that sg has exactly two distinct eigenvalues.

    Squares the adjacency in 64-bit integers, reads off the only possible
    integer pair (a, b) for A^2 + aA + bI = 0, and verifies the identity at
    every entry. Returns None when no such quadratic annihilates A.
    """
    a_mat = sg.matrix.wide()
    n = sg.n
    rows, cols = np.nonzero(a_mat)
    if rows.size == 0:
        raise ValueError("signed graph has no edges")
    sq = _trit_product(sg.matrix.data, sg.matrix.data)
    i, j = int(rows[0]), int(cols[0])
    a = int(-sq[i, j] * a_mat[i, j])
    b = int(-sq[0, 0])
    if np.any(sq + a * a_mat + b * np.eye(n, dtype=np.int64)):
        return None
    disc = a * a - 4 * b
    if disc <= 0:
        return None
    r = math.isqrt(disc)
    if r * r == disc:
        lam = (-a + r) / 2
        mu = (-a - r) / 2
        num = n * (a + r)
        if num % (2 * r):
            return None
        mult_lam = num // (2 * r)
    else:
        # Irrational roots come in a conjugate pair, forcing equal
        # multiplicities, which with zero trace forces a = 0.
        if a != 0 or n % 2:
            return None
        root = math.sqrt(-b)
        lam, mu = root, -root
        mult_lam = n // 2
    mult_mu = n - mult_lam
    if mult_lam < 1 or mult_mu < 1:
        return None
    return TwoEigCertificate(a, b, float(lam), float(mu), mult_lam, mult_mu)


def degree_from_certificate(cert: TwoEigCertificate) -> int:
    """Common degree of the ground graph: -lam*mu, which is -b."""
    return -cert.b


def bipartite_two_eig_check(sg: SignedGraph) -> OrthogonalityCertificate | None:
    """Orthogonality certificate for the off-diagonal block of a bipartite sg.

    The block C over a balanced bipartition satisfies CC^t = C^tC = alpha I
    exactly when sg has two distinct eigenvalues, so this is an exact
    integer-arithmetic route to the same verdict as certify_two_eigenvalues.
    """
    parts = ground(sg).bipartition()
    if parts is None:
        raise ValueError("ground graph is not bipartite")
    x, y = parts
    if len(x) != len(y):
        raise ValueError(f"bipartition is unbalanced: parts of size {len(x)} and {len(y)}")
    block = SignedMatrix(sg.matrix.data[np.ix_(x, y)])
    return is_orthogonal(block)


def spectrum_union(a: Spectrum, b: Spectrum, tol: float = DEFAULT_GROUP_TOL) -> Spectrum:
    """Multiset union of two spectra, regrouped at tol."""
    return Spectrum.from_pairs(list(a.pairs) + list(b.pairs), tol)
