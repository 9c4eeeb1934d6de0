"""Symmetric functions of a fixed homogeneous degree with exact coefficients.

A SymFunc stores a degree n, a basis name among m, e, h, p, s, and a sparse
mapping from partitions of n to QRat coefficients.  The power sum basis is
the internal pivot: every conversion goes through p using transition tables
built once per degree.  The Schur-to-p table is the character table of S_n,
computed here by the Murnaghan-Nakayama border strip recursion; e and h are
expanded in p through the Newton recurrences, and the p-to-m table comes
from expanding power sum products in n variables.

Tables exist for degrees up to 8; building them is idempotent and guarded by
a lock so concurrent callers see a single shared copy.
"""

from __future__ import annotations

import itertools
import threading
from fractions import Fraction
from functools import lru_cache

from .combinat import (
    Partition,
    partitions_of,
    sort_to_partition,
    z_mu,
)
from .errors import BudgetExceededError
from .qrat import QPoly, QRat

TABLE_BUDGET = 8

BASES = ("m", "e", "h", "p", "s")

# p-basis expansions with Fraction coefficients, used while building tables
PDict = dict[Partition, Fraction]


def _pdict_mul(a: PDict, b: PDict) -> PDict:
    out: PDict = {}
    for pa, ca in a.items():
        for pb, cb in b.items():
            key = sort_to_partition(pa + pb)
            out[key] = out.get(key, Fraction(0)) + ca * cb
    return {k: v for k, v in out.items() if v}


@lru_cache(maxsize=None)
def _e_in_p(k: int) -> tuple[tuple[Partition, Fraction], ...]:
    """e_k in the p basis via k*e_k = sum_i (-1)^(i-1) p_i e_(k-i)."""
    if k == 0:
        return (((), Fraction(1)),)
    out: PDict = {}
    for i in range(1, k + 1):
        sign = Fraction(-1 if i % 2 == 0 else 1, k)
        for part, c in _e_in_p(k - i):
            key = sort_to_partition(part + (i,))
            out[key] = out.get(key, Fraction(0)) + sign * c
    return tuple(sorted(out.items()))


@lru_cache(maxsize=None)
def _h_in_p(k: int) -> tuple[tuple[Partition, Fraction], ...]:
    """h_k in the p basis via k*h_k = sum_i p_i h_(k-i)."""
    if k == 0:
        return (((), Fraction(1)),)
    out: PDict = {}
    for i in range(1, k + 1):
        for part, c in _h_in_p(k - i):
            key = sort_to_partition(part + (i,))
            out[key] = out.get(key, Fraction(0)) + c / k
    return tuple(sorted(out.items()))


def _beta_set(lam: Partition, rows: int) -> tuple[int, ...]:
    return tuple((lam[i] if i < len(lam) else 0) + rows - 1 - i for i in range(rows))


def _partition_from_beta(beta: frozenset[int]) -> Partition:
    desc = sorted(beta, reverse=True)
    lam = tuple(b - (len(desc) - 1 - i) for i, b in enumerate(desc))
    return tuple(p for p in lam if p > 0)


@lru_cache(maxsize=None)
def murnaghan_nakayama(lam: Partition, mu: Partition) -> int:
    """Irreducible character value chi^lam on the class mu, |lam| = |mu|."""
    if not mu:
        return 1 if not lam else 0
    k, rest = mu[0], mu[1:]
    rows = max(len(lam), 1)
    beta = frozenset(_beta_set(lam, rows))
    total = 0
    for b in beta:
        if b >= k and (b - k) not in beta:
            height = sum(1 for c in beta if b - k < c < b)
            lam2 = _partition_from_beta(beta - {b} | {b - k})
            term = murnaghan_nakayama(lam2, rest)
            total += -term if height % 2 else term
    return total


def _expand_p_monomials(lam: Partition, n: int) -> dict[tuple[int, ...], int]:
    """Monomial expansion of p_lam in n variables, exponent tuple -> coeff."""
    poly: dict[tuple[int, ...], int] = {(0,) * n: 1}
    for k in lam:
        nxt: dict[tuple[int, ...], int] = {}
        for exp, c in poly.items():
            for i in range(n):
                e2 = exp[:i] + (exp[i] + k,) + exp[i + 1:]
                nxt[e2] = nxt.get(e2, 0) + c
        poly = nxt
    return poly


class _Tables:
    """Per-degree transition matrices with the p basis as pivot."""

    def __init__(self, n: int):
        self.n = n
        self.parts = partitions_of(n)
        self.index = {p: i for i, p in enumerate(self.parts)}
        size = len(self.parts)

        # columns of to_p[b] express b_lam in p coordinates
        self.to_p: dict[str, list[list[Fraction]]] = {}
        for name, expand in (("e", _e_in_p), ("h", _h_in_p)):
            mat = [[Fraction(0)] * size for _ in range(size)]
            for j, lam in enumerate(self.parts):
                acc: PDict = {(): Fraction(1)}
                for part in lam:
                    acc = _pdict_mul(acc, dict(expand(part)))
                for key, c in acc.items():
                    mat[self.index[key]][j] = c
            self.to_p[name] = mat

        smat = [[Fraction(0)] * size for _ in range(size)]
        for j, lam in enumerate(self.parts):
            for i, mu in enumerate(self.parts):
                smat[i][j] = Fraction(murnaghan_nakayama(lam, mu), z_mu(mu))
        self.to_p["s"] = smat

        # p_lam in the m basis from explicit monomial expansions
        mmat = [[Fraction(0)] * size for _ in range(size)]
        for j, lam in enumerate(self.parts):
            poly = _expand_p_monomials(lam, max(n, 1))
            for i, mu in enumerate(self.parts):
                exp = mu + (0,) * (max(n, 1) - len(mu))
                mmat[i][j] = Fraction(poly.get(exp, 0))
        self.p_to_m = mmat
        self.to_p["m"] = _invert(mmat)

        self.from_p: dict[str, list[list[Fraction]]] = {"m": mmat}
        for name in ("e", "h", "s"):
            self.from_p[name] = _invert(self.to_p[name])


def _invert(mat: list[list[Fraction]]) -> list[list[Fraction]]:
    """Exact inverse by Gauss-Jordan elimination."""
    size = len(mat)
    work = [row[:] + [Fraction(1) if i == j else Fraction(0) for j in range(size)]
            for i, row in enumerate(mat)]
    for col in range(size):
        pivot = next(r for r in range(col, size) if work[r][col] != 0)
        work[col], work[pivot] = work[pivot], work[col]
        inv = Fraction(1) / work[col][col]
        work[col] = [c * inv for c in work[col]]
        for r in range(size):
            if r != col and work[r][col]:
                f = work[r][col]
                work[r] = [a - f * b for a, b in zip(work[r], work[col])]
    return [row[size:] for row in work]


_TABLE_CACHE: dict[int, _Tables] = {}
_TABLE_LOCK = threading.Lock()


def tables(n: int) -> _Tables:
    if not 0 <= n <= TABLE_BUDGET:
        raise BudgetExceededError(f"basis tables support degrees up to {TABLE_BUDGET}, got {n}")
    tab = _TABLE_CACHE.get(n)
    if tab is None:
        with _TABLE_LOCK:
            tab = _TABLE_CACHE.get(n)
            if tab is None:
                tab = _Tables(n)
                _TABLE_CACHE[n] = tab
    return tab


def _apply(mat: list[list[Fraction]], vec: list[QRat]) -> list[QRat]:
    out = []
    for row in mat:
        acc = QRat.zero()
        for c, v in zip(row, vec):
            if c and not v.is_zero():
                acc = acc + v * c
        out.append(acc)
    return out


class SymFunc:
    """Homogeneous symmetric function of degree n in one of the bases m,e,h,p,s."""

    __slots__ = ("basis", "n", "coeffs")

    def __init__(self, basis: str, n: int, coeffs: dict[Partition, QRat]):
        if basis not in BASES:
            raise ValueError(f"unknown basis {basis!r}")
        for part in coeffs:
            if sum(part) != n:
                raise ValueError(f"partition {part} has size != {n}")
        self.basis = basis
        self.n = n
        self.coeffs = {p: c for p, c in coeffs.items() if not c.is_zero()}

    @staticmethod
    def zero(n: int, basis: str = "m") -> SymFunc:
        return SymFunc(basis, n, {})

    @staticmethod
    def basis_element(basis: str, lam: Partition) -> SymFunc:
        lam = tuple(lam)
        return SymFunc(basis, sum(lam), {lam: QRat.one()})

    @staticmethod
    def from_q_table(basis: str, n: int, table: dict[Partition, QPoly]) -> SymFunc:
        return SymFunc(basis, n, {p: QRat(c) for p, c in table.items()})

    def _vector(self) -> list[QRat]:
        parts = partitions_of(self.n)
        return [self.coeffs.get(p, QRat.zero()) for p in parts]

    def in_basis(self, basis: str) -> SymFunc:
        if basis not in BASES:
            raise ValueError(f"unknown basis {basis!r}")
        if basis == self.basis:
            return self
        tab = tables(self.n)
        vec = self._vector()
        if self.basis != "p":
            vec = _apply(tab.to_p[self.basis], vec)
        if basis != "p":
            vec = _apply(tab.from_p[basis], vec)
        return SymFunc(basis, self.n, dict(zip(tab.parts, vec)))

    def coeff(self, lam: Partition) -> QRat:
        return self.coeffs.get(tuple(lam), QRat.zero())

    def __add__(self, other: SymFunc) -> SymFunc:
        if self.n != other.n:
            raise ValueError("cannot add symmetric functions of different degree")
        o = other.in_basis(self.basis)
        out = dict(self.coeffs)
        for p, c in o.coeffs.items():
            out[p] = out.get(p, QRat.zero()) + c
        return SymFunc(self.basis, self.n, out)

    def __neg__(self) -> SymFunc:
        return SymFunc(self.basis, self.n, {p: -c for p, c in self.coeffs.items()})

    def __sub__(self, other: SymFunc) -> SymFunc:
        return self + (-other)

    def scale(self, c) -> SymFunc:
        c = QRat.of(c)
        return SymFunc(self.basis, self.n, {p: v * c for p, v in self.coeffs.items()})

    def __mul__(self, other: SymFunc) -> SymFunc:
        """Product, computed in the p basis where p_lam p_mu = p_(lam union mu)."""
        n = self.n + other.n
        if n > TABLE_BUDGET:
            raise BudgetExceededError(f"product degree {n} exceeds the table budget {TABLE_BUDGET}")
        a, b = self.in_basis("p"), other.in_basis("p")
        out: dict[Partition, QRat] = {}
        for pa, ca in a.coeffs.items():
            for pb, cb in b.coeffs.items():
                key = sort_to_partition(pa + pb)
                out[key] = out.get(key, QRat.zero()) + ca * cb
        return SymFunc("p", n, out)

    def omega(self) -> SymFunc:
        """The involution fixing p_k up to sign: p_lam -> (-1)^(n-l(lam)) p_lam."""
        f = self.in_basis("p")
        out = {}
        for p, c in f.coeffs.items():
            out[p] = c if (self.n - len(p)) % 2 == 0 else -c
        return SymFunc("p", self.n, out).in_basis(self.basis)

    def plethysm_scale(self, a: QRat) -> SymFunc:
        """Substitute Z -> a(q) Z, acting on p_k by the factor a(q^k)."""
        f = self.in_basis("p")
        out = {}
        for lam, c in f.coeffs.items():
            factor = QRat.one()
            for k in lam:
                factor = factor * a.subs_q_power(k)
            out[lam] = c * factor
        return SymFunc("p", self.n, out)

    def subs_coeffs(self, fn) -> SymFunc:
        """Apply a QRat -> QRat map to every coefficient."""
        return SymFunc(self.basis, self.n, {p: fn(c) for p, c in self.coeffs.items()})

    def dimension_series(self) -> QRat:
        """Coefficient of m_(1^n): the graded dimension of the realizing module."""
        target = (1,) * self.n if self.n else ()
        return self.in_basis("m").coeff(target)

    def is_e_positive_shifted(self) -> tuple[bool, dict[Partition, QPoly]]:
        """Shift q -> q+1 in the e expansion and test coefficient nonnegativity.

        Returns (verdict, shifted e expansion); raises if some e coefficient
        is not a polynomial in q.
        """
        f = self.in_basis("e")
        shifted: dict[Partition, QPoly] = {}
        ok = True
        for lam, c in f.coeffs.items():
            poly = c.as_poly().compose_shift(1)
            shifted[lam] = poly
            if any(a < 0 for a in poly.coeffs):
                ok = False
        return ok, shifted

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SymFunc):
            return NotImplemented
        if self.n != other.n:
            return False
        return self.in_basis("p").coeffs == other.in_basis("p").coeffs

    def __hash__(self) -> int:
        f = self.in_basis("p")
        return hash((self.n, tuple(sorted(f.coeffs.items()))))

    def __repr__(self) -> str:
        if not self.coeffs:
            return f"SymFunc<{self.basis},{self.n}> 0"
        body = " + ".join(
            f"({c}){self.basis}_{''.join(map(str, p)) or '0'}"
            for p, c in sorted(self.coeffs.items(), reverse=True)
        )
        return f"SymFunc<{self.basis},{self.n}> {body}"

    def to_json_obj(self) -> dict:
        parts = [p for p in partitions_of(self.n) if p in self.coeffs]
        return {
            "basis": self.basis,
            "n": self.n,
            "terms": [
                {"partition": list(p), "coeff": self.coeffs[p].to_string()}
                for p in parts
            ],
        }

    def to_latex(self) -> str:
        """LaTeX fragment like '(q + 1) e_{2} + e_{11}'."""
        if not self.coeffs:
            return "0"
        parts = [p for p in partitions_of(self.n) if p in self.coeffs]
        chunks = []
        for p in parts:
            sub = ",".join(map(str, p)) if any(x >= 10 for x in p) else "".join(map(str, p))
            c = self.coeffs[p]
            if c == QRat.one():
                coeff = ""
            else:
                body = c.to_string()
                num, den = body[1:-1].split(")/(")
                coeff = f"({num})" if den == "1" else f"\\frac{{{num}}}{{{den}}}"
            chunks.append(f"{coeff}{self.basis}_{{{sub or '0'}}}")
        return " + ".join(chunks)


def elementary(lam: Partition) -> SymFunc:
    return SymFunc.basis_element("e", lam)


def complete_homogeneous(lam: Partition) -> SymFunc:
    return SymFunc.basis_element("h", lam)


def power_sum(lam: Partition) -> SymFunc:
    return SymFunc.basis_element("p", lam)


def schur(lam: Partition) -> SymFunc:
    return SymFunc.basis_element("s", lam)
