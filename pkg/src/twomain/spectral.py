"""Exact main-eigenvalue counting and the integer (a, b) certificate.

The authoritative count is the rank of the walk matrix [j, Aj, ..., A^(n-1)j]
over the rationals, computed by fraction-free elimination on arbitrary-
precision integers. A floating-point eigenprojection route cross-checks it
and is never allowed to override it.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import OrderTooSmall
from .graphs import Multigraph, PairTable, degree_profile


@dataclass(frozen=True)
class WalkMatrix:
    """Columns j, Aj, A^2 j, ... as exact integer vectors."""

    order: int
    columns: tuple[tuple[int, ...], ...]


def walk_matrix_from_rows(rows: list[list[int]]) -> WalkMatrix:
    """Walk matrix of an arbitrary symmetric integer matrix."""
    n = len(rows)
    col = [1] * n
    columns = [tuple(col)]
    for _ in range(n - 1):
        col = [sum(rows[i][k] * col[k] for k in range(n)) for i in range(n)]
        columns.append(tuple(col))
    return WalkMatrix(n, tuple(columns))


def walk_matrix(g: PairTable) -> WalkMatrix:
    """Walk matrix of a multigraph or signed graph adjacency."""
    return walk_matrix_from_rows(g.adjacency_rows())


def integer_rank(rows: list[list[int]]) -> int:
    """Rank over the rationals by fraction-free (Bareiss) elimination
    with full pivoting. Entries stay exact Python integers throughout."""
    m = [list(r) for r in rows]
    n_rows = len(m)
    n_cols = len(m[0]) if n_rows else 0
    prev = 1
    rank = 0
    for step in range(min(n_rows, n_cols)):
        pr = pc = -1
        for i in range(step, n_rows):
            for j in range(step, n_cols):
                if m[i][j] != 0:
                    pr, pc = i, j
                    break
            if pr >= 0:
                break
        if pr < 0:
            break
        if pr != step:
            m[step], m[pr] = m[pr], m[step]
        if pc != step:
            for row in m:
                row[step], row[pc] = row[pc], row[step]
        piv = m[step][step]
        # full one-step update keeps every entry a minor, so // stays exact
        for i in range(step + 1, n_rows):
            head = m[i][step]
            row_i = m[i]
            row_p = m[step]
            for j in range(step + 1, n_cols):
                row_i[j] = (piv * row_i[j] - head * row_p[j]) // prev
            row_i[step] = 0
        prev = piv
        rank += 1
    return rank


def walk_rank(w: WalkMatrix) -> int:
    """Number of distinct main eigenvalues: the walk matrix rank."""
    n = w.order
    rows = [[w.columns[k][i] for k in range(n)] for i in range(n)]
    return integer_rank(rows)


def main_count_exact(g: PairTable) -> int:
    return walk_rank(walk_matrix(g))


@dataclass(frozen=True)
class ABCertificate:
    """Integers (a, b) with a*d(v) + b = s(v) at every vertex.

    status is "valid" for an integral zero-residual solution and
    "nonintegral" when the solution is rational but consistent (a finding
    worth surfacing, never silently accepted as valid).
    """

    a: int | Fraction
    b: int | Fraction
    residuals: tuple
    j_is_eigenvector: bool
    status: str

    @property
    def valid(self) -> bool:
        return (
            self.status == "valid"
            and not self.j_is_eigenvector
            and all(r == 0 for r in self.residuals)
        )


@dataclass(frozen=True)
class NoCertificate:
    """Marker result: no (a, b) pair exists; reason says why."""

    reason: str  # "j-eigenvector" or "inconsistent"

    @property
    def valid(self) -> bool:
        return False


def solve_ab(m: Multigraph) -> ABCertificate | NoCertificate:
    """Solve a*d(v) + b = s(v) for integers (a, b), or report why none exist.

    Uses the lexicographically first vertex pair with distinct degrees;
    the solution is pair-independent whenever the system is consistent.
    """
    if m.n < 2:
        raise OrderTooSmall("certificate needs order >= 2")
    prof = degree_profile(m)
    d, s = prof.degrees, prof.s_values
    if len(set(d)) == 1:
        return NoCertificate("j-eigenvector")
    pair = None
    for u in range(m.n):
        for v in range(u + 1, m.n):
            if d[u] != d[v]:
                pair = (u, v)
                break
        if pair:
            break
    u, v = pair
    a = Fraction(s[u] - s[v], d[u] - d[v])
    b = Fraction(s[u]) - a * d[u]
    residuals = tuple(a * d[w] + b - s[w] for w in range(m.n))
    if any(r != 0 for r in residuals):
        return NoCertificate("inconsistent")
    if a.denominator == 1 and b.denominator == 1:
        return ABCertificate(
            a=int(a), b=int(b), residuals=tuple(int(r) for r in residuals),
            j_is_eigenvector=False, status="valid",
        )
    return ABCertificate(
        a=a, b=b, residuals=residuals, j_is_eigenvector=False, status="nonintegral",
    )


@dataclass(frozen=True)
class SpectralReport:
    """Floating-point cross-check of the exact main-eigenvalue count.

    eigenvalues holds one representative per merged eigenvalue cluster;
    disagree is set when the two routes differ (diagnostic only, the
    exact count stays authoritative).
    """

    eigenvalues: tuple[float, ...]
    main_flags: tuple[bool, ...]
    main_count_float: int | None
    main_count_exact: int
    disagree: bool
    failure: str | None = None


def main_eigenvalues_float(m: Multigraph, tol: float = 1e-9) -> SpectralReport:
    """Eigendecomposition route: flag an eigenvalue as main when the squared
    projection of the all-ones vector on its eigenspace exceeds tol*n."""
    if not (0 < tol < 1):
        raise ValueError("tol must lie in (0, 1)")
    exact = main_count_exact(m)
    n = m.n
    a = np.array(m.adjacency_rows(), dtype=float)
    try:
        vals, vecs = np.linalg.eigh(a)
    except np.linalg.LinAlgError as exc:
        return SpectralReport((), (), None, exact, disagree=False, failure=str(exc))
    max_entry = float(np.max(np.abs(a))) if n else 0.0
    cluster_tol = tol * max_entry * n
    j = np.ones(n)
    coeffs = vecs.T @ j  # projection coefficients per eigenvector

    reps = []
    flags = []
    i = 0
    while i < n:
        k = i
        while k + 1 < n and vals[k + 1] - vals[k] <= cluster_tol:
            k += 1
        proj_sq = float(np.sum(coeffs[i:k + 1] ** 2))
        reps.append(float(np.mean(vals[i:k + 1])))
        flags.append(proj_sq > tol * n)
        i = k + 1
    count = sum(flags)
    return SpectralReport(
        eigenvalues=tuple(reps),
        main_flags=tuple(flags),
        main_count_float=count,
        main_count_exact=exact,
        disagree=(count != exact),
    )


@dataclass(frozen=True)
class TwoMainEvidence:
    """Outcome of the two-main decision with its certificate cross-check."""

    two_main: bool
    walk_rank: int
    certificate: ABCertificate | NoCertificate
    equivalence_ok: bool
    note: str | None = None


def two_main_check(m: Multigraph) -> TwoMainEvidence:
    """Decide "exactly two distinct main eigenvalues" by walk rank, and
    cross-check the certificate equivalence (rank 2 <=> valid (a, b) with
    j not an eigenvector). A violation is recorded, never raised."""
    if m.n < 2:
        raise OrderTooSmall("two-main check needs order >= 2")
    rank = main_count_exact(m)
    cert = solve_ab(m)
    two_main = rank == 2
    ok = two_main == cert.valid
    note = None
    if not ok:
        note = (
            f"DISAGREE: walk rank {rank} but certificate "
            f"{'valid' if cert.valid else 'absent/invalid'}"
        )
    return TwoMainEvidence(two_main, rank, cert, ok, note)
