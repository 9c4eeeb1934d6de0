"""Sparse multivariate polynomials over Fraction in variables t_1..t_n.

A polynomial is a dict mapping exponent tuples of fixed length to nonzero
Fraction coefficients; the empty dict is zero.  Homogeneous degree pieces
index their monomials by the order of monomials(nvars, d), which is fixed
(descending lexicographic) so coordinate vectors are reproducible.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

MPoly = dict[tuple[int, ...], Fraction]


def mp_zero() -> MPoly:
    return {}

def mp_const(nvars: int, c) -> MPoly:
    c = Fraction(c)
    return {(0,) * nvars: c} if c else {}

def mp_var(nvars: int, i: int) -> MPoly:
    """t_i, 1-based."""
    exp = [0] * nvars
    exp[i - 1] = 1
    return {tuple(exp): Fraction(1)}

def mp_monomial(exp: tuple[int, ...], c=1) -> MPoly:
    c = Fraction(c)
    return {tuple(exp): c} if c else {}

def mp_add(a: MPoly, b: MPoly) -> MPoly:
    out = dict(a)
    for e, c in b.items():
        s = out.get(e, Fraction(0)) + c
        if s:
            out[e] = s
        else:
            out.pop(e, None)
    return out

def mp_neg(a: MPoly) -> MPoly:
    return {e: -c for e, c in a.items()}

def mp_sub(a: MPoly, b: MPoly) -> MPoly:
    return mp_add(a, mp_neg(b))

def mp_scale(a: MPoly, c) -> MPoly:
    c = Fraction(c)
    if not c:
        return {}
    return {e: v * c for e, v in a.items()}

def mp_mul(a: MPoly, b: MPoly) -> MPoly:
    out: MPoly = {}
    for ea, ca in a.items():
        for eb, cb in b.items():
            key = tuple(x + y for x, y in zip(ea, eb))
            s = out.get(key, Fraction(0)) + ca * cb
            if s:
                out[key] = s
            else:
                out.pop(key, None)
    return out

def mp_linear(nvars: int, i: int, j: int) -> MPoly:
    """t_i - t_j."""
    return mp_add(mp_var(nvars, i), mp_neg(mp_var(nvars, j)))

def mp_degree(a: MPoly) -> int | None:
    return max((sum(e) for e in a), default=None)

def mp_is_zero(a: MPoly) -> bool:
    return not a

def mp_subst_var(a: MPoly, i: int, j: int) -> MPoly:
    """Substitute t_i := t_j (both 1-based)."""
    out: MPoly = {}
    for e, c in a.items():
        e2 = list(e)
        e2[j - 1] += e2[i - 1]
        e2[i - 1] = 0
        key = tuple(e2)
        s = out.get(key, Fraction(0)) + c
        if s:
            out[key] = s
        else:
            out.pop(key, None)
    return out

def mp_permute(a: MPoly, sigma: tuple[int, ...]) -> MPoly:
    """Relabel variables t_i -> t_sigma(i)."""
    out: MPoly = {}
    for e, c in a.items():
        e2 = [0] * len(e)
        for i, x in enumerate(e):
            e2[sigma[i] - 1] = x
        out[tuple(e2)] = c
    return out

def mp_divide_linear(a: MPoly, i: int, j: int) -> MPoly:
    """Exact quotient a / (t_i - t_j); raises if the division is not exact.

    Standard monomial division, eliminating the highest power of t_i first;
    every reduction step strictly lowers that power, so the loop terminates
    with remainder free of t_i, which must then be zero.
    """
    quot: MPoly = {}
    rem = dict(a)
    while rem:
        e = max(rem, key=lambda exp: (exp[i - 1], exp))
        if e[i - 1] == 0:
            raise ValueError("polynomial is not divisible by the linear form")
        c = rem[e]
        e2 = list(e)
        e2[i - 1] -= 1
        lead = tuple(e2)
        quot[lead] = quot.get(lead, Fraction(0)) + c
        # subtract c * t^lead * (t_i - t_j) from the remainder
        rem.pop(e)
        e3 = list(lead)
        e3[j - 1] += 1
        key = tuple(e3)
        s = rem.get(key, Fraction(0)) + c
        if s:
            rem[key] = s
        else:
            rem.pop(key, None)
    return {e: c for e, c in quot.items() if c}


@lru_cache(maxsize=None)
def monomials(nvars: int, degree: int) -> tuple[tuple[int, ...], ...]:
    """Exponent tuples of total degree `degree`, descending lexicographic."""
    if nvars == 0:
        return ((),) if degree == 0 else ()
    if nvars == 1:
        return ((degree,),)
    out = []
    for first in range(degree, -1, -1):
        out.extend((first,) + rest for rest in monomials(nvars - 1, degree - first))
    return tuple(out)


@lru_cache(maxsize=None)
def monomial_index(nvars: int, degree: int) -> dict[tuple[int, ...], int]:
    return {e: k for k, e in enumerate(monomials(nvars, degree))}


def mp_coords(a: MPoly, nvars: int, degree: int) -> list[Fraction]:
    """Coordinate vector of a homogeneous polynomial in the fixed monomial order."""
    idx = monomial_index(nvars, degree)
    out = [Fraction(0)] * len(idx)
    for e, c in a.items():
        if sum(e) != degree:
            raise ValueError("polynomial is not homogeneous of the requested degree")
        out[idx[e]] = c
    return out


def mp_from_coords(coords, nvars: int, degree: int) -> MPoly:
    mons = monomials(nvars, degree)
    return {e: Fraction(c) for e, c in zip(mons, coords) if c}
