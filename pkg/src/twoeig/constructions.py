"""Generators for orthogonal signed matrices.

Every construction here outputs a matrix whose orthogonality identity
C C^t = C^t C = alpha I is re-verified in exact integer arithmetic before
the result is handed back, so a returned certificate is never inherited on
faith from the inputs.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .core import OrthogonalityCertificate, SignedMatrix, is_orthogonal

__all__ = [
    "WilliamsonQuadruple",
    "kronecker",
    "kronecker_orthogonal",
    "sylvester_hadamard",
    "paley_conference",
    "double",
    "shift_antisymmetric",
    "williamson",
    "williamson_preset",
    "conference_block",
]

MAX_HADAMARD_EXPONENT = 12

WILLIAMSON_PRESETS = ("all-c", "two-shifted", "four-shifted", "nonsymmetric-all-c")


def kronecker(a: SignedMatrix, b: SignedMatrix) -> SignedMatrix:
    """Kronecker product; sign entries are closed under it."""
    return SignedMatrix(np.kron(a.wide(), b.wide()))


def _require_orthogonal(c: SignedMatrix, name: str) -> int:
    cert = is_orthogonal(c)
    if cert is None:
        raise ValueError(f"{name} is not an orthogonal signed matrix")
    return cert.alpha


def _verified(m: SignedMatrix, alpha: int, what: str) -> tuple[SignedMatrix, OrthogonalityCertificate]:
    cert = is_orthogonal(m)
    if cert is None or cert.alpha != alpha:
        raise AssertionError(f"{what} failed exact verification with alpha = {alpha}")
    return m, cert


def kronecker_orthogonal(
    a: SignedMatrix, b: SignedMatrix
) -> tuple[SignedMatrix, OrthogonalityCertificate]:
    """Kronecker product of two orthogonal matrices; alphas multiply."""
    alpha_a = _require_orthogonal(a, "left factor")
    alpha_b = _require_orthogonal(b, "right factor")
    return _verified(kronecker(a, b), alpha_a * alpha_b, "Kronecker product")


def sylvester_hadamard(k: int) -> SignedMatrix:
    """Hadamard matrix of order 2^k built by iterated doubling from [[1,1],[1,-1]]."""
    if k < 0:
        raise ValueError(f"exponent must be non-negative, got {k}")
    if k > MAX_HADAMARD_EXPONENT:
        raise ValueError(f"order 2^{k} exceeds the supported maximum 2^{MAX_HADAMARD_EXPONENT}")
    h = np.array([[1]], dtype=np.int8)
    h2 = np.array([[1, 1], [1, -1]], dtype=np.int8)
    for _ in range(k):
        h = np.kron(h2, h)
    out = SignedMatrix(h)
    _verified(out, 2**k, f"Hadamard matrix of order 2^{k}")
    return out


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    for d in range(3, math.isqrt(n) + 1, 2):
        if n % d == 0:
            return False
    return True


def paley_conference(q: int) -> SignedMatrix:
    """Symmetric conference matrix of order q + 1 from quadratic residues mod q.

    The core block holds the residue character of the index difference; a
    border of +1 entries (with a zero corner) completes the matrix. Symmetry
    needs -1 to be a residue, hence q = 1 (mod 4).
    """
    if q % 2 == 0:
        raise ValueError(f"q must be odd, got {q}")
    if not _is_prime(q):
        raise ValueError(f"q must be prime, got {q}")
    if q % 4 != 1:
        raise ValueError(f"q must be congruent to 1 mod 4, got {q}")
    residues = {(x * x) % q for x in range(1, q)}
    chi = np.array([0] + [1 if x in residues else -1 for x in range(1, q)], dtype=np.int8)
    c = np.ones((q + 1, q + 1), dtype=np.int8)
    c[0, 0] = 0
    diff = (np.arange(q)[:, None] - np.arange(q)[None, :]) % q
    c[1:, 1:] = chi[diff]
    out = SignedMatrix(c)
    if not np.array_equal(out.data, out.data.T):
        raise AssertionError(f"conference matrix for q = {q} failed the symmetry check")
    _verified(out, q, f"conference matrix of order {q + 1}")
    return out


def double(c: SignedMatrix) -> tuple[SignedMatrix, OrthogonalityCertificate]:
    """[[C+I, C-I], [C-I, -C-I]] for symmetric zero-diagonal orthogonal C.

    The result B is symmetric of twice the order with B^2 = (2*alpha+2)I:
    the diagonal blocks expand to (C+I)^2 + (C-I)^2 = 2C^2 + 2I, and when C
    is a conference matrix every entry of B is +-1, so the certificate of
    the order-2n output can only be 2n = 2*alpha + 2.
    """
    if not c.is_square or not np.array_equal(c.data, c.data.T):
        raise ValueError("input must be a symmetric square matrix")
    if np.any(np.diagonal(c.data) != 0):
        raise ValueError("input must have a zero diagonal")
    alpha = _require_orthogonal(c, "input")
    w = c.wide()
    eye = np.eye(c.rows, dtype=np.int64)
    b = np.block([[w + eye, w - eye], [w - eye, -w - eye]])
    return _verified(SignedMatrix(b), 2 * alpha + 2, "doubled matrix")


def shift_antisymmetric(c: SignedMatrix) -> tuple[SignedMatrix, OrthogonalityCertificate]:
    """C + I for antisymmetric orthogonal C; the certificate grows by one."""
    if not c.is_square or not np.array_equal(c.data, -c.data.T):
        raise ValueError("input must be an antisymmetric square matrix")
    alpha = _require_orthogonal(c, "input")
    shifted = c.wide() + np.eye(c.rows, dtype=np.int64)
    return _verified(SignedMatrix(shifted), alpha + 1, "shifted matrix")


def _row_count(m: SignedMatrix, name: str) -> int:
    counts = np.count_nonzero(m.data, axis=1)
    k = int(counts[0])
    if np.any(counts != k):
        raise ValueError(f"{name} does not have a constant number of nonzero entries per row")
    return k


@dataclass(frozen=True)
class WilliamsonQuadruple:
    """Four same-order blocks with row-constant supports, pairwise commuting.

    k1..k4 hold the per-row support size of each block; they are computed
    and the commuting invariant is verified exactly at construction.
    """

    a1: SignedMatrix
    a2: SignedMatrix
    a3: SignedMatrix
    a4: SignedMatrix
    k1: int = 0
    k2: int = 0
    k3: int = 0
    k4: int = 0

    def __post_init__(self):
        mats = self.blocks()
        n = mats[0].rows
        for idx, m in enumerate(mats, start=1):
            if not m.is_square or m.rows != n:
                raise ValueError(f"block {idx} is {m.rows}x{m.cols}, expected {n}x{n}")
        for name, m in zip(("k1", "k2", "k3", "k4"), mats):
            object.__setattr__(self, name, _row_count(m, f"block {name[1]}"))
        wides = [m.wide() for m in mats]
        for i in range(4):
            for j in range(i + 1, 4):
                if not np.array_equal(wides[i] @ wides[j], wides[j] @ wides[i]):
                    raise ValueError(f"blocks {i + 1} and {j + 1} do not commute")

    def blocks(self) -> tuple[SignedMatrix, SignedMatrix, SignedMatrix, SignedMatrix]:
        return self.a1, self.a2, self.a3, self.a4

    @property
    def order(self) -> int:
        return self.a1.rows

    def row_counts(self) -> tuple[int, int, int, int]:
        return self.k1, self.k2, self.k3, self.k4


def _williamson_assemble(a1, a2, a3, a4) -> SignedMatrix:
    return SignedMatrix(
        np.block(
            [
                [a1, a2, a3, a4],
                [-a2, a1, -a4, a3],
                [-a3, a4, a1, -a2],
                [-a4, -a3, a2, a1],
            ]
        )
    )


def williamson(quad: WilliamsonQuadruple) -> SignedMatrix | None:
    """4n-order block matrix over a quadruple, when the square-sum test passes.

    Returns the assembled matrix exactly when sum(A_i^2) equals the sum of
    the per-row support sizes times the identity; otherwise None. A returned
    matrix is re-verified orthogonal with alpha = k1 + k2 + k3 + k4.
    """
    ks = quad.row_counts()
    wides = [m.wide() for m in quad.blocks()]
    total = sum(w @ w for w in wides)
    if not np.array_equal(total, sum(ks) * np.eye(quad.order, dtype=np.int64)):
        return None
    h = _williamson_assemble(*wides)
    m, _ = _verified(h, sum(ks), "Williamson block matrix")
    return m


def williamson_preset(c: SignedMatrix, preset: str) -> SignedMatrix:
    """Fill the Williamson quadruple from one matrix.

    Presets: "all-c" uses four copies of a symmetric orthogonal C;
    "two-shifted" uses (C, C, C-I, C+I) and "four-shifted" uses
    (C+I, C+I, C-I, C-I), both needing a zero diagonal on top of symmetry;
    "nonsymmetric-all-c" accepts any orthogonal C, checking only that the
    cross products A_i A_j^t are symmetric before assembling directly.
    """
    if preset not in WILLIAMSON_PRESETS:
        raise ValueError(f"unknown preset {preset!r}, expected one of {WILLIAMSON_PRESETS}")
    alpha = _require_orthogonal(c, "input")
    w = c.wide()
    if preset == "nonsymmetric-all-c":
        if not np.array_equal(w @ w.T, (w @ w.T).T):
            raise AssertionError("cross product C C^t is not symmetric")
        m, _ = _verified(_williamson_assemble(w, w, w, w), 4 * alpha, "Williamson block matrix")
        return m
    if not np.array_equal(c.data, c.data.T):
        raise ValueError(f"preset {preset!r} requires a symmetric matrix")
    if preset == "all-c":
        quad = WilliamsonQuadruple(c, c, c, c)
    else:
        if np.any(np.diagonal(c.data) != 0):
            raise ValueError(f"preset {preset!r} requires a zero diagonal")
        eye = np.eye(c.rows, dtype=np.int64)
        minus = SignedMatrix(w - eye)
        plus = SignedMatrix(w + eye)
        if preset == "two-shifted":
            quad = WilliamsonQuadruple(c, c, minus, plus)
        else:
            quad = WilliamsonQuadruple(plus, plus, minus, minus)
    out = williamson(quad)
    if out is None:
        raise AssertionError(f"preset {preset!r} failed the square-sum condition")
    return out


def conference_block(c: SignedMatrix) -> SignedMatrix:
    """[[C, C], [-C, C]] for a conference matrix C; alpha doubles to 2(n-1)."""
    if not c.is_square:
        raise ValueError("input must be square")
    if np.any(np.diagonal(c.data) != 0):
        raise ValueError("input has a nonzero diagonal entry, so it is not a conference matrix")
    off = c.data[~np.eye(c.rows, dtype=bool)]
    if np.any(off == 0):
        raise ValueError("input has a zero off the diagonal, so it is not a conference matrix")
    alpha = _require_orthogonal(c, "input")
    w = c.wide()
    m = np.block([[w, w], [-w, w]])
    out, _ = _verified(SignedMatrix(m), 2 * alpha, "conference block matrix")
    return out
