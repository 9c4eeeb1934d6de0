"""Exact and certified-modular linear algebra helpers.

Two regimes share one contract:

* small systems are solved directly over Fraction (frac_rref and friends);
* large systems run Gaussian elimination mod a word-sized prime in numpy,
  and every consumer converts the mod-p output back into an exact statement
  through one of two rigorous one-sided certificates: the rank of an integer
  matrix over F_p never exceeds its rank over Q, so (a) exhibited exact
  vectors that are independent mod p are independent over Q, and (b) the
  F_p nullity of an exact constraint matrix bounds the Q nullity from above.
  When the two bounds meet, the dimension is pinned exactly.

Candidate vectors lifted from mod-p solutions (CRT across several primes
plus rational reconstruction) are always verified exactly by the caller
before use, so wrong lifts cannot corrupt results, only delay them.

Traces of a permutation action restricted to an invariant subspace are
computed by SubspaceTracer: with an exact integer basis B, any left inverse
P of B gives the action matrix P sigma(B); choosing P from a k x k row
submatrix invertible mod p makes the matrix p-integral, and the trace is an
ordinary integer of absolute value at most dim (eigenvalues of a
finite-order operator are roots of unity), so its symmetric residue mod the
prime is exact.

The heaviest eliminations use SMALL_PRIMES just under 2**22 through
blocked_rref, which batches eliminations into float64 matrix products; with
p < 2**22 a dot product of up to 257 terms, each below p**2, stays under
2**53, so the floating-point arithmetic is exact integer arithmetic at BLAS
speed.  PRIMES near 2**31 remain for the int64 per-pivot routines.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, isqrt

import numpy as np

PRIMES = (2147483647, 2147483629, 2147483587, 2147483579, 2147483563, 2147483549, 2147483543, 2147483497)


# ---------------------------------------------------------------- Fraction


def frac_rref(rows: list[list[Fraction]]) -> tuple[int, list[int], list[list[Fraction]]]:
    """Reduced row echelon form over Q; returns (rank, pivot columns, rref)."""
    mat = [row[:] for row in rows]
    nrows = len(mat)
    ncols = len(mat[0]) if mat else 0
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pr = next((i for i in range(r, nrows) if mat[i][c]), None)
        if pr is None:
            continue
        mat[r], mat[pr] = mat[pr], mat[r]
        inv = Fraction(1) / mat[r][c]
        mat[r] = [x * inv for x in mat[r]]
        for i in range(nrows):
            if i != r and mat[i][c]:
                f = mat[i][c]
                mat[i] = [a - f * b for a, b in zip(mat[i], mat[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return r, pivots, mat


def frac_nullspace(rows: list[list[Fraction]], ncols: int) -> list[list[Fraction]]:
    """Canonical nullspace basis (one vector per free column, unit there)."""
    if not rows:
        rows = [[Fraction(0)] * ncols]
    rank, pivots, rref = frac_rref(rows)
    pivot_set = set(pivots)
    free = [c for c in range(ncols) if c not in pivot_set]
    out = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for k, c in enumerate(pivots):
            v[c] = -rref[k][f]
        out.append(v)
    return out


def frac_solve_columns(columns: list[list[Fraction]], target: list[Fraction]) -> list[Fraction] | None:
    """Coefficients x with sum_j x_j columns[j] = target, or None."""
    k = len(columns)
    aug = [[col[i] for col in columns] + [target[i]] for i in range(len(target))]
    rank, pivots, rref = frac_rref(aug)
    if k in pivots:
        return None
    x = [Fraction(0)] * k
    for row, c in zip(rref, pivots):
        x[c] = row[k]
    return x


# ------------------------------------------------------------------ mod p


def modp_forward_rank(A: np.ndarray, p: int) -> int:
    """Rank of A mod p by forward elimination (A is consumed)."""
    A = np.ascontiguousarray(A % p, dtype=np.int64)
    nrows, ncols = A.shape
    r = 0
    for c in range(ncols):
        col = A[r:, c]
        nz = np.nonzero(col)[0]
        if nz.size == 0:
            continue
        pr = r + int(nz[0])
        if pr != r:
            A[[r, pr]] = A[[pr, r]]
        inv = pow(int(A[r, c]), p - 2, p)
        A[r, c:] = (A[r, c:] * inv) % p
        below = A[r + 1:, c]
        mask = below != 0
        if mask.any():
            block = A[r + 1:][mask]
            block = (block - np.outer(below[mask], A[r])) % p
            A[r + 1:][mask] = block
        r += 1
        if r == nrows:
            break
    return r


def modp_rref(A: np.ndarray, p: int) -> tuple[int, list[int], np.ndarray]:
    """Full reduced row echelon form mod p; returns (rank, pivots, rref)."""
    A = np.ascontiguousarray(A % p, dtype=np.int64)
    nrows, ncols = A.shape
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        col = A[r:, c]
        nz = np.nonzero(col)[0]
        if nz.size == 0:
            continue
        pr = r + int(nz[0])
        if pr != r:
            A[[r, pr]] = A[[pr, r]]
        inv = pow(int(A[r, c]), p - 2, p)
        A[r, c:] = (A[r, c:] * inv) % p
        col_all = A[:, c].copy()
        col_all[r] = 0
        mask = col_all != 0
        if mask.any():
            A[mask] = (A[mask] - np.outer(col_all[mask], A[r])) % p
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return r, pivots, A


def modp_nullspace(A: np.ndarray, p: int) -> tuple[list[int], list[int], np.ndarray]:
    """Canonical mod-p nullspace; returns (pivots, free columns, basis matrix).

    Basis columns are indexed by free columns: unit at the free column and
    -rref entry at each pivot column, matching frac_nullspace.
    """
    ncols = A.shape[1]
    rank, pivots, rref = modp_rref(A, p)
    pivot_set = set(pivots)
    free = [c for c in range(ncols) if c not in pivot_set]
    basis = np.zeros((ncols, len(free)), dtype=np.int64)
    for j, f in enumerate(free):
        basis[f, j] = 1
        for k, c in enumerate(pivots):
            basis[c, j] = (-rref[k, f]) % p
    return pivots, free, basis


def modp_inverse(S: np.ndarray, p: int) -> np.ndarray:
    """Inverse of a square matrix mod p; raises ArithmeticError if singular."""
    k = S.shape[0]
    aug = np.concatenate([S % p, np.eye(k, dtype=np.int64)], axis=1)
    rank, pivots, rref = modp_rref(aug, p)
    if pivots != list(range(k)):
        raise ArithmeticError("matrix is singular mod p")
    return rref[:k, k:]


# ----------------------------------------------------- CRT and lifting


def crt_pair(r1: int, m1: int, r2: int, m2: int) -> tuple[int, int]:
    """Combine residues; moduli must be coprime."""
    inv = pow(m1 % m2, m2 - 2, m2)  # PRIMES are prime, m1 not divisible by m2
    t = ((r2 - r1) * inv) % m2
    return (r1 + m1 * t) % (m1 * m2), m1 * m2


def rational_reconstruct(r: int, m: int) -> Fraction | None:
    """num/den = r mod m with |num|, den <= sqrt(m/2), or None."""
    r %= m
    if r == 0:
        return Fraction(0)
    bound = isqrt(m // 2)
    a, b = m, r
    sa, sb = 0, 1
    while b > bound:
        q = a // b
        a, b = b, a - q * b
        sa, sb = sb, sa - q * sb
    if b == 0 or abs(sb) > bound or gcd(b, abs(sb)) != 1:
        return None
    num, den = (b, sb) if sb > 0 else (-b, -sb)
    if (num - den * r) % m != 0:
        return None
    return Fraction(num, den)


def lift_vector(residues: list[np.ndarray], moduli: list[int]) -> list[Fraction] | None:
    """CRT-combine per-prime residue vectors and rationally reconstruct each entry."""
    n = len(residues[0])
    out: list[Fraction] = []
    for i in range(n):
        r, m = int(residues[0][i]), moduli[0]
        for vec, p in zip(residues[1:], moduli[1:]):
            r, m = crt_pair(r, m, int(vec[i]), p)
        f = rational_reconstruct(r, m)
        if f is None:
            return None
        out.append(f)
    return out


def integerize(vec: list[Fraction]) -> list[int]:
    """Scale a rational vector to coprime integers (positive leading sign kept)."""
    lcm = 1
    for f in vec:
        d = f.denominator
        lcm = lcm // gcd(lcm, d) * d
    ints = [int(f * lcm) for f in vec]
    g = 0
    for v in ints:
        g = gcd(g, abs(v))
    if g > 1:
        ints = [v // g for v in ints]
    return ints


# ------------------------------------------------- blocked small-prime GE


SMALL_PRIMES = (4194301, 4194287, 4194277, 4194271, 4194247, 4194217, 4194199, 4194191, 4194187, 4194181)

_PANEL = 256  # (_PANEL + 1) * (SMALL_PRIMES[0] - 1) ** 2 < 2 ** 53


def _fmod(a: np.ndarray, p: int) -> np.ndarray:
    """Exact mod for integer-valued float64 arrays (int64 mod is ~30x faster
    than float64 fmod); valid while every entry has magnitude below 2**53."""
    return (a.astype(np.int64) % p).astype(np.float64)


def blocked_rref(A: np.ndarray, p: int, full: bool = True) -> tuple[int, list[int], np.ndarray]:
    """Gaussian elimination mod a sub-2**22 prime, grouped into BLAS-3 panels.

    Entries live as integer-valued float64.  Every product is below p**2 <
    2**44 and at most _PANEL + 1 products are ever accumulated into one
    value, so all intermediates stay below 2**53 and the floating-point
    arithmetic is exact integer arithmetic.  Reduction mod p is lazy: only
    values about to be read (pivot column, pivot row, finished blocks) are
    reduced, everything else accumulates until its panel completes.  Within
    a panel of columns, pivots are processed one at a time, recording
    full-height multiplier columns and row swaps; the columns right of the
    panel then receive all of the panel's eliminations as one replay over
    the pivot rows plus a single matrix product.  Returns (rank, pivots,
    matrix): the reduced row echelon form when full is True, the forward
    elimination otherwise.
    """
    if (_PANEL + 1) * (p - 1) ** 2 >= 2 ** 53:
        raise ValueError("prime too large for exact float64 panels")
    A = np.ascontiguousarray(np.asarray(A) % p, dtype=np.float64)
    nrows, ncols = A.shape
    pivots: list[int] = []
    r = 0
    c0 = 0
    while c0 < ncols and r < nrows:
        c1 = min(c0 + _PANEL, ncols)
        lcols: list[np.ndarray] = []
        invs: list[int] = []
        p0 = r
        for c in range(c0, c1):
            A[r:, c] = _fmod(A[r:, c], p)
            nz = np.nonzero(A[r:, c])[0]
            if nz.size == 0:
                continue
            pr = r + int(nz[0])
            if pr != r:
                A[[r, pr]] = A[[pr, r]]
                for lcol in lcols:
                    lcol[[r, pr]] = lcol[[pr, r]]
            inv = pow(int(A[r, c]), p - 2, p)
            A[r, c:c1] = _fmod(_fmod(A[r, c:c1], p) * inv, p)
            mult = np.zeros(nrows)
            mult[r + 1:] = A[r + 1:, c]
            if mult.any():
                A[r + 1:, c:c1] -= np.outer(mult[r + 1:], A[r, c:c1])
            lcols.append(mult)
            invs.append(inv)
            pivots.append(c)
            r += 1
            if r == nrows:
                break
        A[:, c0:c1] = _fmod(A[:, c0:c1], p)
        if lcols and c1 < ncols:
            # Replay the panel's eliminations on the trailing columns: first
            # bring the pivot rows to final form in order, then clear every
            # other row with one exact GEMM.
            T = A[:, c1:]
            k = len(lcols)
            L = np.stack(lcols, axis=1)
            for j in range(k):
                rj = p0 + j
                if j:
                    T[rj] = _fmod(T[rj] - L[rj, :j] @ T[p0:rj], p)
                T[rj] = _fmod(T[rj] * invs[j], p)
            L[p0:p0 + k, :] = 0.0
            T -= L @ T[p0:p0 + k]
            T[...] = _fmod(T, p)
        c0 = c1
    rank = r
    if full and rank:
        b = rank
        while b > 0:
            a = max(0, b - _PANEL)
            for j in range(b - 1, a, -1):
                A[j, :] = _fmod(A[j, :], p)
                coef = _fmod(A[a:j, pivots[j]], p)
                if coef.any():
                    A[a:j, :] -= np.outer(coef, A[j, :])
            A[a:b, :] = _fmod(A[a:b, :], p)
            if a > 0:
                C = A[:a, pivots[a:b]]
                if C.any():
                    A[:a, :] -= C @ A[a:b, :]
                    A[:a, :] = _fmod(A[:a, :], p)
            b = a
    return rank, pivots, A


def nullspace_small(A: np.ndarray, p: int) -> tuple[list[int], list[int], np.ndarray]:
    """Canonical mod-p nullspace via the blocked engine; mirrors modp_nullspace."""
    ncols = A.shape[1]
    rank, pivots, rref = blocked_rref(A, p)
    pivot_set = set(pivots)
    free = [c for c in range(ncols) if c not in pivot_set]
    basis = np.zeros((ncols, len(free)), dtype=np.int64)
    for j, f in enumerate(free):
        basis[f, j] = 1
    if pivots and free:
        basis[pivots, :] = ((-rref[:rank][:, free]) % p).astype(np.int64)
    return pivots, free, basis


def inverse_small(S: np.ndarray, p: int) -> np.ndarray:
    """Inverse of a square matrix mod a small prime via the blocked engine."""
    k = S.shape[0]
    aug = np.concatenate([np.asarray(S, dtype=np.float64) % p, np.eye(k)], axis=1)
    rank, pivots, rref = blocked_rref(aug, p)
    if pivots != list(range(k)):
        raise ArithmeticError("matrix is singular mod p")
    return rref[:k, k:].astype(np.int64)


def certified_integer_nullspace(A: np.ndarray) -> np.ndarray:
    """Exact rational nullspace of an integer matrix, certified on both sides.

    Returns a (ncols x nullity) integer column matrix.  The mod-p nullity is
    an upper bound for the rational nullity (rank can only drop modulo p);
    the returned columns are exactly verified nullspace vectors that are
    independent over Q because each canonical column is nonzero at its own
    free coordinate and zero at the others.  The bounds therefore meet and
    the dimension is pinned.  Entries are CRT-combined across SMALL_PRIMES
    until rational reconstruction succeeds; a reconstruction or verification
    failure restarts from the next prime (an unlucky prime dropped the rank).
    """
    A = np.asarray(A)
    ncols = A.shape[1]
    if A.shape[0] == 0 or ncols == 0:
        return np.eye(ncols, dtype=np.int64)
    for start in range(len(SMALL_PRIMES) - 1):
        residues: list[np.ndarray] = []
        moduli: list[int] = []
        ref_pivots: list[int] | None = None
        nullity = -1
        for p in SMALL_PRIMES[start:]:
            pivots, free, basis = nullspace_small(A, p)
            if ref_pivots is None:
                ref_pivots, nullity = pivots, len(free)
                if nullity == 0:
                    # rank_p = ncols forces rank_Q = ncols: the nullspace is 0
                    return np.zeros((ncols, 0), dtype=np.int64)
            elif pivots != ref_pivots:
                continue
            residues.append(basis)
            moduli.append(p)
            if len(moduli) < 2:
                continue
            cols: list[list[int]] = []
            for j in range(nullity):
                vec = lift_vector([r[:, j] for r in residues], moduli)
                if vec is None:
                    break
                cols.append(integerize(vec))
            else:
                V = np.array(cols, dtype=object).T
                peak = max(max(abs(x) for x in col) for col in cols)
                row_l1 = int(np.abs(A).sum(axis=1).max())
                if peak * row_l1 * 1 < 2**62 and peak < 2**62:
                    V = V.astype(np.int64)
                    ok = not np.any(A @ V)
                else:
                    ok = not np.any(A.astype(object) @ V)
                if ok:
                    return V
                break  # a vector failed exact verification: unlucky reference prime
    raise ArithmeticError("nullspace reconstruction failed at every prime")


# --------------------------------------------------------------- tracing


class SubspaceTracer:
    """Exact traces of coordinate-permutation actions on an invariant span.

    columns: exact integer basis of the subspace (each a list of ints over
    the ambient coordinates).  The constructor certifies independence mod p
    (hence over Q) and prepares a p-integral left inverse from an invertible
    row submatrix.  trace(src) returns the exact integer trace of the action
    f -> f o src on the span, valid whenever the span is invariant under
    that action; src is the ambient index array with (sigma f)[c] = f[src[c]].
    """

    def __init__(self, columns, p: int = SMALL_PRIMES[0]):
        if len(columns) == 0:
            self.k = 0
            self.p = p
            return
        self.k = len(columns)
        self.p = p
        if isinstance(columns, np.ndarray) and columns.dtype != object:
            B = columns.T
        else:
            B = np.array(columns, dtype=object).T
        self.Bp = np.ascontiguousarray((B % p).astype(np.float64))
        rank, pivots, _ = blocked_rref(self.Bp.T, p, full=False)
        if rank < self.k:
            raise ArithmeticError("basis columns are not independent mod p")
        self.rows = np.array(pivots, dtype=np.intp)
        self.Sinv = inverse_small(self.Bp[self.rows, :], p).astype(np.float64)

    def trace(self, src: np.ndarray) -> int:
        if self.k == 0:
            return 0
        C = self.Bp[np.asarray(src)[self.rows], :]
        t = int(((self.Sinv.T * C) % self.p).sum() % self.p)
        if t > self.p // 2:
            t -= self.p
        if abs(t) > self.k:
            raise ArithmeticError("trace bound violated; retry with another prime")
        return t
