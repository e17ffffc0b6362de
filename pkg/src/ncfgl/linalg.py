"""Exact dense linear algebra used by the centralizer and certificate solvers.

Matrices are lists of rows; a row is a list of scalar values of the ambient
:class:`~ncfgl.scalars.ScalarRing`.  Everything is deterministic: reduced row
echelon form is unique, kernels are presented in reduced echelon form with
respect to the given column order, and integer-mode kernels are primitive
integer vectors with positive leading entry.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

from .scalars import ScalarRing

# Rational view used to run integer-mode kernels over Q before primitivizing.
_QQ_VIEW = ScalarRing("rational")


def _rref_fp(rows, ncols, p):
    rows = [list(r) for r in rows]
    pivots = []
    r = 0
    for c in range(ncols):
        pivot_row = None
        for i in range(r, len(rows)):
            if rows[i][c]:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        rows[r], rows[pivot_row] = rows[pivot_row], rows[r]
        inv = pow(rows[r][c], p - 2, p)
        if inv != 1:
            rows[r] = [x * inv % p for x in rows[r]]
        lead = rows[r]
        for i in range(len(rows)):
            if i == r:
                continue
            f = rows[i][c]
            if f:
                row = rows[i]
                for j in range(c, ncols):
                    if lead[j]:
                        row[j] = (row[j] - f * lead[j]) % p
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows[:r], pivots


def _rref_frac(rows, ncols):
    rows = [[Fraction(x) for x in r] for r in rows]
    pivots = []
    r = 0
    for c in range(ncols):
        pivot_row = None
        for i in range(r, len(rows)):
            if rows[i][c]:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        rows[r], rows[pivot_row] = rows[pivot_row], rows[r]
        inv = 1 / rows[r][c]
        if inv != 1:
            rows[r] = [x * inv for x in rows[r]]
        lead = rows[r]
        for i in range(len(rows)):
            if i == r:
                continue
            f = rows[i][c]
            if f:
                row = rows[i]
                for j in range(c, ncols):
                    if lead[j]:
                        row[j] = row[j] - f * lead[j]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows[:r], pivots


def rref(rows, ncols: int, ring: ScalarRing):
    """Reduced row echelon form; returns (nonzero rows, pivot column list)."""
    if ring.mode == "fp":
        return _rref_fp(rows, ncols, ring.prime)
    return _rref_frac(rows, ncols)


def _primitive(vec):
    """Scale a rational vector to a primitive integer vector, leading entry > 0."""
    denom = 1
    for x in vec:
        denom = denom * x.denominator // gcd(denom, x.denominator)
    ints = [int(x * denom) for x in vec]
    g = 0
    for x in ints:
        g = gcd(g, x)
    if g > 1:
        ints = [x // g for x in ints]
    for x in ints:
        if x:
            if x < 0:
                ints = [-y for y in ints]
            break
    return ints


def _kernel_from_rref(reduced, pivots, ncols, ring):
    free_cols = [c for c in range(ncols) if c not in set(pivots)]
    basis = []
    for f in free_cols:
        vec = [ring.zero] * ncols
        vec[f] = ring.one
        for r, c in enumerate(pivots):
            vec[c] = ring.neg(reduced[r][f])
        basis.append(vec)
    return basis


def nullspace(rows, ncols: int, ring: ScalarRing):
    """Kernel basis of the linear map given by ``rows`` acting on column vectors.

    The basis is returned in reduced echelon form with respect to the column
    order (so it is canonical).  In integer mode the kernel is computed over Q
    and each vector is returned primitive.
    """
    if not rows:
        reduced, pivots = [], []
    else:
        reduced, pivots = rref(rows, ncols, ring)
    work_ring = _QQ_VIEW if ring.mode == "integer" else ring
    raw = _kernel_from_rref(reduced, pivots, ncols, work_ring)
    return reduced_basis(raw, ncols, ring)


def reduced_basis(vectors, ncols: int, ring: ScalarRing):
    """Canonical presentation of a span: RREF rows (primitive ints over Z)."""
    if not vectors:
        return []
    if ring.mode == "fp":
        reduced, _ = _rref_fp(vectors, ncols, ring.prime)
        return reduced
    reduced, _ = _rref_frac(vectors, ncols)
    if ring.mode == "integer":
        return [_primitive(v) for v in reduced]
    return reduced


def affine_solve(rows, rhs, ncols: int, ring: ScalarRing):
    """Solve ``rows * x = rhs`` over a field.

    Returns ``(particular, kernel_basis, rank)`` where ``particular`` is None
    when the system is inconsistent.  The particular solution sets every free
    variable to zero.
    """
    augmented = [list(r) + [b] for r, b in zip(rows, rhs)]
    reduced, pivots = rref(augmented, ncols + 1, ring)
    if pivots and pivots[-1] == ncols:
        rank = len(pivots) - 1
        coeff_pivots = pivots[:-1]
        kernel = _kernel_from_rref([r[:ncols] for r in reduced], coeff_pivots, ncols, ring)
        return None, reduced_basis(kernel, ncols, ring), rank
    particular = [ring.zero] * ncols
    for r, c in enumerate(pivots):
        particular[c] = reduced[r][ncols]
    kernel = _kernel_from_rref([r[:ncols] for r in reduced], pivots, ncols, ring)
    return particular, reduced_basis(kernel, ncols, ring), len(pivots)
