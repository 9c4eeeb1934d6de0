"""Unit interval graphs of Hessenberg functions and their coloring polynomials.

A Hessenberg function h on [n] is weakly increasing with h(j) >= j; its unit
interval graph G_h has an edge {j, i} whenever j < i <= h(j).  Two q-graded
sums over colorings kappa: [n] -> colors live here:

* csf(h): the chromatic quasisymmetric function, summing z_kappa q^asc(kappa)
  over proper colorings (adjacent vertices differ);
* llt(h): the unicellular LLT polynomial, the same sum over all colorings.

Both are symmetric, which is asserted on the raw exponent-vector weights
before any monomial coefficient is read off.  Colorings are enumerated with
n colors, which is enough in degree n, using exact integer numpy counting;
a pure Python path is kept as an independent oracle for small n.

Orientations of G_h carry the ascent statistic asc(theta) (number of edges
directed from the smaller to the larger endpoint) and the highest reachable
vertex hrv(theta, v), the largest vertex reachable from v along ascending
directed edges only; grouping vertices by hrv gives the partition
lambda(theta), and sum_theta q^asc(theta) e_lambda(theta) equals the LLT
polynomial with q shifted to q+1.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .combinat import Partition, sort_to_partition
from .errors import BudgetExceededError
from .qrat import QPoly, QRat
from .symfunc import SymFunc

COLORING_BUDGET = 7
ORIENTATION_BUDGET = 20  # 2^|h| orientations at most
HESSENBERG_ALL_BUDGET = 7


class HessenbergFunction:
    """Weakly increasing h: [n] -> [n] with h(j) >= j, stored 1-based."""

    __slots__ = ("values",)

    def __init__(self, values):
        values = tuple(int(v) for v in values)
        n = len(values)
        for j, v in enumerate(values, start=1):
            if not j <= v <= n:
                raise ValueError(f"h({j}) = {v} violates j <= h(j) <= {n}")
        if any(a > b for a, b in zip(values, values[1:])):
            raise ValueError(f"not weakly increasing: {values}")
        self.values = values

    @staticmethod
    def parse(text: str) -> HessenbergFunction:
        return HessenbergFunction(int(p) for p in text.split(","))

    @property
    def n(self) -> int:
        return len(self.values)

    def __call__(self, j: int) -> int:
        return self.values[j - 1]

    def size(self) -> int:
        """|h| = sum_j (h(j) - j), the number of edges of G_h."""
        return sum(v - j for j, v in enumerate(self.values, start=1))

    def edge_pairs(self) -> tuple[tuple[int, int], ...]:
        """Edges as (j, i) with j < i <= h(j)."""
        return tuple(
            (j, i)
            for j in range(1, self.n + 1)
            for i in range(j + 1, self.values[j - 1] + 1)
        )

    def graph(self) -> UnitIntervalGraph:
        return UnitIntervalGraph(self.n, self.edge_pairs())

    def is_full(self) -> bool:
        return all(v == self.n for v in self.values)

    def __eq__(self, other) -> bool:
        return isinstance(other, HessenbergFunction) and self.values == other.values

    def __hash__(self) -> int:
        return hash(self.values)

    def __repr__(self) -> str:
        return f"HessenbergFunction({','.join(map(str, self.values))})"


@dataclass(frozen=True)
class UnitIntervalGraph:
    n: int
    edges: tuple[tuple[int, int], ...]  # (a, b) with a < b

    def to_json_obj(self) -> dict:
        return {"n": self.n, "edges": [list(e) for e in self.edges]}


@lru_cache(maxsize=None)
def hessenberg_all(n: int) -> tuple[HessenbergFunction, ...]:
    """All Hessenberg functions on [n] (Catalan many), lexicographic order."""
    if not 1 <= n <= HESSENBERG_ALL_BUDGET:
        raise BudgetExceededError(f"hessenberg_all supports 1 <= n <= {HESSENBERG_ALL_BUDGET}, got {n}")

    def gen(prefix: tuple[int, ...]) -> list[tuple[int, ...]]:
        j = len(prefix) + 1
        if j > n:
            return [prefix]
        lo = max(j, prefix[-1] if prefix else 1)
        return [out for v in range(lo, n + 1) for out in gen(prefix + (v,))]

    return tuple(HessenbergFunction(v) for v in gen(()))


def asc_coloring(kappa: tuple[int, ...], graph: UnitIntervalGraph) -> int:
    """Edges {a, b} with a < b and kappa(a) < kappa(b)."""
    return sum(1 for a, b in graph.edges if kappa[a - 1] < kappa[b - 1])


def is_proper(kappa: tuple[int, ...], graph: UnitIntervalGraph) -> bool:
    return all(kappa[a - 1] != kappa[b - 1] for a, b in graph.edges)


def _coloring_weights(h: HessenbergFunction):
    """Exact q-weight tables over all n^n colorings with n colors.

    Returns (weights_all, weights_proper), each mapping an exponent vector
    (color multiplicity tuple of length n) to {asc: count}.
    """
    n = h.n
    if n > COLORING_BUDGET:
        raise BudgetExceededError(f"coloring enumeration supports n <= {COLORING_BUDGET}, got {n}")
    total = n ** n
    idx = np.arange(total, dtype=np.int64)
    arr = np.empty((total, n), dtype=np.int8)
    for pos in range(n - 1, -1, -1):
        arr[:, pos] = (idx % n).astype(np.int8)
        idx //= n
    asc = np.zeros(total, dtype=np.int32)
    proper = np.ones(total, dtype=bool)
    for a, b in h.edge_pairs():
        ca, cb = arr[:, a - 1], arr[:, b - 1]
        asc += ca < cb
        proper &= ca != cb
    counts = np.zeros((total, n), dtype=np.int8)
    rows = np.arange(total)
    for pos in range(n):
        counts[rows, arr[:, pos]] += 1

    def group(mask):
        keyed = np.column_stack([counts[mask].astype(np.int32), asc[mask][:, None]])
        uniq, mult = np.unique(keyed, axis=0, return_counts=True)
        out: dict[tuple[int, ...], dict[int, int]] = {}
        for row, m in zip(uniq, mult):
            exp = tuple(int(x) for x in row[:-1])
            out.setdefault(exp, {})[int(row[-1])] = int(m)
        return out

    return group(slice(None)), group(proper)


def _assert_symmetric(weights: dict[tuple[int, ...], dict[int, int]], n: int) -> None:
    """Every exponent vector in the same sorted orbit must carry equal weights."""
    by_shape: dict[tuple[int, ...], list[tuple[int, ...]]] = {}
    for exp in weights:
        by_shape.setdefault(tuple(sorted(exp, reverse=True)), []).append(exp)
    for shape, members in by_shape.items():
        orbit = set(itertools.permutations(shape))
        reference = weights[members[0]]
        for exp in orbit:
            if weights.get(exp, {}) != reference:
                raise AssertionError(f"coloring sum is not symmetric at shape {shape}")


def _weights_to_symfunc(weights, n: int) -> SymFunc:
    table: dict[Partition, QPoly] = {}
    for exp, by_asc in weights.items():
        if list(exp) != sorted(exp, reverse=True):
            continue
        lam = tuple(x for x in exp if x > 0)
        size = max(by_asc) + 1 if by_asc else 0
        coeffs = [0] * size
        for a, m in by_asc.items():
            coeffs[a] = m
        table[lam] = QPoly(coeffs)
    return SymFunc.from_q_table("m", n, table)


@lru_cache(maxsize=None)
def _coloring_symfuncs(h: HessenbergFunction) -> tuple[SymFunc, SymFunc]:
    weights_all, weights_proper = _coloring_weights(h)
    _assert_symmetric(weights_all, h.n)
    _assert_symmetric(weights_proper, h.n)
    return (
        _weights_to_symfunc(weights_all, h.n),
        _weights_to_symfunc(weights_proper, h.n),
    )


def llt(h: HessenbergFunction) -> SymFunc:
    """Unicellular LLT polynomial LLT_h(z; q) in the m basis."""
    return _coloring_symfuncs(h)[0]


def csf(h: HessenbergFunction) -> SymFunc:
    """Chromatic quasisymmetric function X_h(z; q) in the m basis."""
    return _coloring_symfuncs(h)[1]


def coloring_expansion_bruteforce(h: HessenbergFunction, proper_only: bool) -> SymFunc:
    """Pure Python oracle for csf and llt, practical for n <= 4."""
    n = h.n
    graph = h.graph()
    table: dict[Partition, dict[int, int]] = {}
    for kappa in itertools.product(range(n), repeat=n):
        if proper_only and not is_proper(kappa, graph):
            continue
        exp = tuple(sorted((kappa.count(c) for c in range(n)), reverse=True))
        lam = tuple(x for x in exp if x > 0)
        a = asc_coloring(kappa, graph)
        table.setdefault(lam, {})
        table[lam][a] = table[lam].get(a, 0) + 1
    multiplicity = {}
    for lam in table:
        # each monomial orbit member was counted; divide by the orbit size
        exp = lam + (0,) * (n - len(lam))
        orbit = len(set(itertools.permutations(exp)))
        multiplicity[lam] = orbit
    qtable = {}
    for lam, by_asc in table.items():
        size = max(by_asc) + 1
        coeffs = [0] * size
        for a, m in by_asc.items():
            assert m % multiplicity[lam] == 0
            coeffs[a] = m // multiplicity[lam]
        qtable[lam] = QPoly(coeffs)
    return SymFunc.from_q_table("m", n, qtable)


class Orientation:
    """A direction for every edge of a unit interval graph.

    directions[k] is True when edge (a, b) with a < b is directed a -> b,
    which makes it an ascending edge.
    """

    __slots__ = ("graph", "directions")

    def __init__(self, graph: UnitIntervalGraph, directions: tuple[bool, ...]):
        if len(directions) != len(graph.edges):
            raise ValueError("one direction per edge required")
        self.graph = graph
        self.directions = tuple(bool(d) for d in directions)

    def asc(self) -> int:
        return sum(self.directions)

    def ascending_arcs(self) -> list[tuple[int, int]]:
        return [e for e, d in zip(self.graph.edges, self.directions) if d]


def orientations(h: HessenbergFunction):
    """All 2^|h| orientations of G_h."""
    m = h.size()
    if m > ORIENTATION_BUDGET:
        raise BudgetExceededError(
            f"orientation enumeration supports 2^|h| <= 2^{ORIENTATION_BUDGET}, got |h| = {m}"
        )
    graph = h.graph()
    for bits in itertools.product((False, True), repeat=m):
        yield Orientation(graph, bits)


def hrv(theta: Orientation, v: int) -> int:
    """Highest vertex reachable from v along ascending directed edges."""
    n = theta.graph.n
    out: dict[int, list[int]] = {i: [] for i in range(1, n + 1)}
    for a, b in theta.ascending_arcs():
        out[a].append(b)
    best = {}
    for i in range(n, 0, -1):  # ascending arcs go upward, so this is a DAG order
        best[i] = max([i] + [best[j] for j in out[i]])
    return best[v]


def hrv_blocks(theta: Orientation) -> list[tuple[int, list[int]]]:
    """Blocks of the hrv partition as (hrv value, sorted vertices), ascending."""
    n = theta.graph.n
    out: dict[int, list[int]] = {i: [] for i in range(1, n + 1)}
    for a, b in theta.ascending_arcs():
        out[a].append(b)
    best: dict[int, int] = {}
    for i in range(n, 0, -1):
        best[i] = max([i] + [best[j] for j in out[i]])
    blocks: dict[int, list[int]] = {}
    for i in range(1, n + 1):
        blocks.setdefault(best[i], []).append(i)
    return sorted((k, sorted(v)) for k, v in blocks.items())


def lambda_of(theta: Orientation) -> Partition:
    """Sorted block sizes of the hrv partition."""
    return sort_to_partition(tuple(len(b) for _, b in hrv_blocks(theta)))


def composition_of(theta: Orientation) -> tuple[int, ...]:
    """Block sizes ordered by increasing hrv value."""
    return tuple(len(b) for _, b in hrv_blocks(theta))


def orientation_e_expansion(h: HessenbergFunction) -> SymFunc:
    """sum over orientations of q^asc(theta) e_lambda(theta), in the e basis."""
    table: dict[Partition, dict[int, int]] = {}
    for theta in orientations(h):
        lam = lambda_of(theta)
        a = theta.asc()
        table.setdefault(lam, {})
        table[lam][a] = table[lam].get(a, 0) + 1
    qtable = {}
    for lam, by_asc in table.items():
        coeffs = [0] * (max(by_asc) + 1)
        for a, m in by_asc.items():
            coeffs[a] = m
        qtable[lam] = QPoly(coeffs)
    return SymFunc.from_q_table("e", h.n, qtable)


@dataclass(frozen=True)
class IdentityCheck:
    name: str
    passed: bool
    detail: str = ""


def verify_identities(h: HessenbergFunction) -> list[IdentityCheck]:
    """The finite identities tying csf, llt, omega, and plethysm together.

    Exact checks, in order: palindromicity of X_h and of LLT_h, the
    Carlson-Mellit relation, both plethystic inversions between the omega
    twists, the regular representation at q = 1, and the orientation model
    of the shifted e expansion.
    """
    n, size = h.n, h.size()
    x = csf(h)
    y = llt(h)
    q = QRat.q()
    qsize = q ** size
    checks = []

    checks.append(IdentityCheck(
        "csf palindromicity",
        x.subs_coeffs(lambda c: qsize * c.subs_q_inverse()) == x,
        "q^|h| X(1/q) = X(q)",
    ))
    checks.append(IdentityCheck(
        "llt palindromicity",
        y.subs_coeffs(lambda c: qsize * c.subs_q_inverse()) == y.omega(),
        "q^|h| LLT(1/q) = omega LLT(q)",
    ))
    qm1 = q - QRat.one()
    checks.append(IdentityCheck(
        "carlson-mellit relation",
        x == y.plethysm_scale(qm1).scale(qm1 ** (-n)),
        "X = (q-1)^-n LLT[(q-1)Z; q]",
    ))
    xt = x.omega()
    yt = y
    one_minus_q = QRat.one() - q
    checks.append(IdentityCheck(
        "plethystic inversion, contracted",
        yt == xt.plethysm_scale(QRat.one() / one_minus_q).scale(one_minus_q ** n),
        "omega-twisted LLT = (1-q)^n (omega X)[Z/(1-q); q]",
    ))
    checks.append(IdentityCheck(
        "plethystic inversion, expanded",
        xt == yt.plethysm_scale(one_minus_q).scale(one_minus_q ** (-n)),
        "omega X = (1-q)^-n (omega-twisted LLT)[(1-q)Z; q]",
    ))
    regular = SymFunc.basis_element("p", (1,) * n)
    checks.append(IdentityCheck(
        "llt at q=1 is the regular representation",
        y.subs_coeffs(lambda c: QRat.of(c.evaluate(1))) == regular,
        "LLT(z; 1) = p_1^n",
    ))
    checks.append(IdentityCheck(
        "orientation model of the shifted e expansion",
        orientation_e_expansion(h) == y.subs_coeffs(lambda c: c.subs_q_plus_one()),
        "sum_theta q^asc e_lambda(theta) = LLT(z; q+1)",
    ))
    return checks
