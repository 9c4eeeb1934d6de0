"""Permutohedron faces, their symmetric-group modules, and the coinvariant
algebra, as exact graded characters.

The permutohedron on n letters has one face of codimension d for every
strict chain of nonempty proper subsets A_1 < ... < A_d of [n]; the
symmetric group permutes faces, and the module spanned by the
dimension-i faces has character computable two ways: the orbit formula
(one induced trivial representation per composition with n - 1 - i cuts)
and literal fixed-face counting.  Both are implemented and any mismatch
raises.

The coinvariant algebra is the quotient of the polynomial ring in
t_1..t_n by the elementary symmetric polynomials.  Its graded character
is computed by exact trace differences: the trace on the degree-d
quotient equals the trace on the orthogonal complement of the ideal's
degree-d piece, whose basis is a certified integer nullspace.  Closed
forms (alternating sums of induced characters), the q = 1 regular
degeneration, palindromicity, Gaussian-binomial sums, and an
orientation-counting agreement on complete graphs tie the same objects
together along independent routes.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations
from math import factorial

import numpy as np

from .characters import (
    ClassFunction,
    frobenius_char,
    frobenius_inverse,
    graded_dimension,
    induced_young,
    palindromicity_check,
    polynomial_algebra_series,
    regular_character,
)
from .combinat import (
    all_permutations,
    class_representative,
    inverse,
    partition_from_subset,
    partitions_of,
    second_representative,
    subsets_of_interval,
    young_subgroup_order,
)
from .errors import BudgetExceededError
from .gkm import GkmModel, perm_monomial_map, quotient_graded_character
from .hessgraph import HessenbergFunction, lambda_of, llt, orientations
from .linalg import SMALL_PRIMES, SubspaceTracer, blocked_rref, certified_integer_nullspace
from .multipoly import monomial_index, monomials
from .qrat import QPoly, QRat, format_poly
from .symfunc import SymFunc

FACES_BUDGET = 7
FACE_MODULE_BUDGET = 6
COINVARIANT_BUDGET = 5
COMPLETE_GRAPH_BUDGET = 5
Q_BINOMIAL_BUDGET = 10


class PermutohedronFace:
    """A face of the permutohedron on [n]: a strict chain of nonempty proper
    subsets A_1 < ... < A_d; d is the codimension, n - 1 - d the dimension.
    The empty chain is the whole polytope."""

    __slots__ = ("n", "chain")

    def __init__(self, n: int, chain=()):
        sets = tuple(frozenset(a) for a in chain)
        ground = frozenset(range(1, n + 1))
        prev: frozenset = frozenset()
        for a in sets:
            if not a or a == ground or not a <= ground:
                raise ValueError("chain entries must be nonempty proper subsets of [n]")
            if not (prev < a):
                raise ValueError("chain must be strictly nested")
            prev = a
        self.n = n
        self.chain = sets

    @property
    def codimension(self) -> int:
        return len(self.chain)

    @property
    def dimension(self) -> int:
        return self.n - 1 - len(self.chain)

    @staticmethod
    def from_ordered_set_partition(n: int, blocks) -> PermutohedronFace:
        """The face of the ordered set partition (B_1, ..., B_k): the chain of
        its proper initial unions."""
        blocks = [frozenset(b) for b in blocks]
        union: frozenset = frozenset()
        chain = []
        for b in blocks[:-1]:
            union = union | b
            chain.append(union)
        total = union | blocks[-1] if blocks else frozenset()
        if total != frozenset(range(1, n + 1)) or sum(len(b) for b in blocks) != n:
            raise ValueError("blocks must partition [n]")
        return PermutohedronFace(n, chain)

    def to_ordered_set_partition(self) -> tuple[frozenset, ...]:
        ground = frozenset(range(1, self.n + 1))
        prev: frozenset = frozenset()
        blocks = []
        for a in self.chain:
            blocks.append(a - prev)
            prev = a
        blocks.append(ground - prev)
        return tuple(blocks)

    def apply(self, sigma: tuple[int, ...]) -> PermutohedronFace:
        """The face obtained by relabeling every chain entry through sigma."""
        return PermutohedronFace(
            self.n, [frozenset(sigma[i - 1] for i in a) for a in self.chain]
        )

    def is_fixed_by(self, sigma: tuple[int, ...]) -> bool:
        return all(frozenset(sigma[i - 1] for i in a) == a for a in self.chain)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, PermutohedronFace)
            and self.n == other.n
            and self.chain == other.chain
        )

    def __hash__(self) -> int:
        return hash((self.n, self.chain))

    def __repr__(self) -> str:
        parts = ["{" + ",".join(map(str, sorted(a))) + "}" for a in self.chain]
        return f"PermutohedronFace(n={self.n}, chain=[{' < '.join(parts)}])"


@lru_cache(maxsize=None)
def faces(n: int) -> tuple[tuple[PermutohedronFace, ...], ...]:
    """All faces grouped by dimension: entry i holds the dimension-i faces."""
    if not 1 <= n <= FACES_BUDGET:
        raise BudgetExceededError(f"faces supports 1 <= n <= {FACES_BUDGET}, got n = {n}")
    full = (1 << n) - 1
    masks = list(range(1, full))
    by_dim: list[list[PermutohedronFace]] = [[] for _ in range(n)]

    def to_set(mask: int) -> frozenset:
        return frozenset(i + 1 for i in range(n) if mask >> i & 1)

    def rec(chain: tuple[int, ...], top: int) -> None:
        by_dim[n - 1 - len(chain)].append(
            PermutohedronFace(n, [to_set(m) for m in chain])
        )
        for m in masks:
            if m != top and m & top == top:
                rec(chain + (m,), m)

    rec((), 0)
    return tuple(tuple(group) for group in by_dim)


def f_vector(n: int) -> tuple[int, ...]:
    """Face counts by dimension, (f_0, ..., f_{n-1})."""
    return tuple(len(group) for group in faces(n))


def face_module_character(n: int, i: int) -> ClassFunction:
    """Character of the permutation module on the dimension-i faces.

    Computed by the orbit formula — one induced trivial character per subset
    I of [n-1] with n - 1 - i elements — and cross-checked against literal
    fixed-face counting on every class (two representatives where the class
    has them); a mismatch raises."""
    if not 1 <= n <= FACE_MODULE_BUDGET:
        raise BudgetExceededError(
            f"face modules support 1 <= n <= {FACE_MODULE_BUDGET}, got n = {n}"
        )
    if not 0 <= i <= n - 1:
        raise ValueError(f"face dimension must satisfy 0 <= i <= n - 1, got {i}")
    orbit = ClassFunction.constant(n, QRat.zero())
    for I in subsets_of_interval(n):
        if len(I) == n - 1 - i:
            orbit = orbit + induced_young(I, n, "trivial")
    group = faces(n)[i]
    for mu in partitions_of(n):
        reps = [class_representative(mu)]
        second = second_representative(mu)
        if second is not None:
            reps.append(second)
        for sigma in reps:
            count = sum(1 for face in group if face.is_fixed_by(sigma))
            if QRat.of(count) != orbit(mu):
                raise ArithmeticError(
                    f"fixed-face count {count} disagrees with the orbit formula "
                    f"{orbit(mu)} on class {mu} (dimension {i})"
                )
    return orbit


def face_and_h_series(n: int) -> tuple[ClassFunction, ClassFunction]:
    """The graded face character F(q) = sum_i F_i q^i and its shift
    H(q) = F(q - 1); every graded coefficient of H is verified to be a
    genuine character (nonnegative integer multiplicities in the irreducible
    decomposition)."""
    per_dim = [face_module_character(n, i) for i in range(n)]
    values = {
        mu: QRat(QPoly([chi(mu).as_poly().coeff(0) for chi in per_dim]))
        for mu in partitions_of(n)
    }
    F = ClassFunction(n, values)
    H = F.subs_values(lambda v: v.subs_q_shift(-1))
    top = n - 1
    for k in range(top + 1):
        coeff_char = ClassFunction(
            n, {mu: QRat.of(H(mu).as_poly().coeff(k)) for mu in partitions_of(n)}
        )
        sf = frobenius_char(coeff_char).in_basis("s")
        for lam in partitions_of(n):
            c = sf.coeff(lam)
            value = c.as_poly().coeff(0) if c.is_polynomial() else None
            if value is None or value.denominator != 1 or value < 0:
                raise ArithmeticError(
                    f"degree-{k} coefficient of the shifted face series is not a "
                    f"genuine character (multiplicity {c} at {lam})"
                )
    return F, H


def eulerian_polynomial(n: int) -> QPoly:
    """Descent-counting polynomial of S_n (independent oracle route)."""
    counts = [0] * n
    for w in all_permutations(n):
        counts[sum(1 for a in range(n - 1) if w[a] > w[a + 1])] += 1
    return QPoly(counts)


def _first_discrepancy(a: ClassFunction, b: ClassFunction) -> str | None:
    for mu in partitions_of(a.n):
        if a(mu) != b(mu):
            va, vb = a(mu), b(mu)
            d = 0
            if va.is_polynomial() and vb.is_polynomial():
                pa, pb = va.as_poly(), vb.as_poly()
                top = max(pa.degree or 0, pb.degree or 0)
                d = next(k for k in range(top + 1) if pa.coeff(k) != pb.coeff(k))
            return f"class {mu}: {va} != {vb} (first difference at degree {d})"
    return None


def face_module_twin_check(n: int) -> dict:
    """The shifted face series against its closed form and against the twin
    cohomology characters.

    Checks, classwise and exactly: H(q) equals the alternating closed form
    sum_I Ind(1) (q-1)^{n-1-|I|}; the closed form tensored with sign equals
    the character whose Frobenius image is the unicellular LLT function for
    h = (2, 3, ..., n, n); for n <= 4 the same character recomputed from the
    flavor-Y moment-graph quotient; and the q -> q+1 shift identity
    ch(F tensor sign) = sum_I q^{n-1-|I|} e_{P(I)} = LLT(q+1)."""
    if not 1 <= n <= FACE_MODULE_BUDGET:
        raise BudgetExceededError(
            f"the face-module/twin check supports n <= {FACE_MODULE_BUDGET}, got n = {n}"
        )
    F, H = face_and_h_series(n)
    qm1 = QRat.q() - QRat.one()
    closed = ClassFunction.constant(n, QRat.zero())
    for I in subsets_of_interval(n):
        closed = closed + induced_young(I, n, "trivial").scale(qm1 ** (n - 1 - len(I)))
    h = HessenbergFunction(tuple(range(2, n + 1)) + (n,) if n >= 2 else (1,))
    llt_h = llt(h)
    twin_char = frobenius_inverse(llt_h)

    report: dict = {"n": n, "h": list(h.values), "checks": {}}

    def record(name: str, a: ClassFunction, b: ClassFunction) -> None:
        diff = _first_discrepancy(a, b)
        report["checks"][name] = {"passed": diff is None, "detail": diff or ""}

    record("h_series_equals_closed_form", H, closed)
    record("closed_form_sign_twist_is_twin_character", closed.tensor_sign(), twin_char)
    if n <= 4:
        q_y = quotient_graded_character(GkmModel(h, "Y"), "dagger", "t_vars")
        record("moment_graph_route_matches_twin_character", q_y, twin_char)
    shifted = SymFunc.zero(n)
    for I in subsets_of_interval(n):
        shifted = shifted + SymFunc.basis_element(
            "e", partition_from_subset(I, n)
        ).scale(QRat.q() ** (n - 1 - len(I)))
    llt_shifted = llt_h.subs_coeffs(lambda c: c.subs_q_plus_one())
    face_side = frobenius_char(F.tensor_sign())
    ok_shift = (
        shifted.in_basis("e") == llt_shifted.in_basis("e")
        and face_side.in_basis("e") == shifted.in_basis("e")
    )
    report["checks"]["shifted_face_series_is_llt_at_q_plus_one"] = {
        "passed": ok_shift,
        "detail": "",
    }
    report["all_passed"] = all(c["passed"] for c in report["checks"].values())
    return report


# ------------------------------------------------------------ coinvariants


@lru_cache(maxsize=None)
def _elementary_exponents(n: int, k: int) -> tuple[tuple[int, ...], ...]:
    out = []
    for S in combinations(range(n), k):
        e = [0] * n
        for s in S:
            e[s] = 1
        out.append(tuple(e))
    return tuple(out)


def _ideal_span_columns(n: int, d: int) -> np.ndarray:
    """Spanning columns of the degree-d piece of the ideal (e_1, ..., e_n):
    one column e_k * m per 1 <= k <= min(n, d) and monomial m of degree
    d - k.  All coefficients are 0 or 1."""
    M = len(monomials(n, d))
    idx = monomial_index(n, d)
    cols = []
    for k in range(1, min(n, d) + 1):
        for m in monomials(n, d - k):
            col = np.zeros(M, dtype=np.int64)
            for e in _elementary_exponents(n, k):
                col[idx[tuple(a + b for a, b in zip(m, e))]] = 1
            cols.append(col)
    if not cols:
        return np.zeros((M, 0), dtype=np.int64)
    return np.stack(cols, axis=1)


def _complement_traces(V: np.ndarray, srcs: list[np.ndarray]) -> list[int]:
    """Exact traces of coordinate permutations on the span of V's columns,
    with prime retry."""
    err: Exception | None = None
    for p in SMALL_PRIMES[:4]:
        try:
            tracer = SubspaceTracer(V.T, p)
            return [tracer.trace(src) for src in srcs]
        except ArithmeticError as exc:
            err = exc
    raise ArithmeticError(f"subspace traces failed at every prime: {err}")


def coinvariant_graded_character(n: int) -> ClassFunction:
    """Graded character of the coinvariant algebra, by exact trace
    differences.

    The degree-d trace equals the trace on the orthogonal complement of the
    ideal piece inside the degree-d polynomials (the complement is invariant
    because permutations act by orthogonal coordinate permutations on the
    monomial basis); the complement is a certified integer nullspace of the
    transposed span matrix.  Each class is evaluated at two representatives
    where available, and the piece one degree above the top is certified to
    vanish."""
    if not 1 <= n <= COINVARIANT_BUDGET:
        raise BudgetExceededError(
            f"coinvariant characters support 1 <= n <= {COINVARIANT_BUDGET}, got n = {n}"
        )
    top = n * (n - 1) // 2
    class_reps: dict[tuple[int, ...], list[tuple[int, ...]]] = {}
    for mu in partitions_of(n):
        reps = [class_representative(mu)]
        second = second_representative(mu)
        if second is not None:
            reps.append(second)
        class_reps[mu] = reps
    per_class: dict[tuple[int, ...], list[list[int]]] = {
        mu: [[] for _ in reps] for mu, reps in class_reps.items()
    }
    for d in range(top + 1):
        A = _ideal_span_columns(n, d)
        M = A.shape[0]
        srcs = {
            mu: [perm_monomial_map(inverse(sigma), d) for sigma in reps]
            for mu, reps in class_reps.items()
        }
        if A.shape[1] == 0:
            for mu, reps in class_reps.items():
                for r, src in enumerate(srcs[mu]):
                    per_class[mu][r].append(int((src == np.arange(M)).sum()))
            continue
        V = certified_integer_nullspace(A.T)
        for mu in class_reps:
            traces = _complement_traces(V, srcs[mu])
            for r, t in enumerate(traces):
                per_class[mu][r].append(t)
    above = _ideal_span_columns(n, top + 1)
    rank, _, _ = blocked_rref(above.T, SMALL_PRIMES[0], full=False)
    if rank != above.shape[0]:
        raise ArithmeticError("the coinvariant quotient does not vanish above the top degree")
    values: dict[tuple[int, ...], QRat] = {}
    for mu, rows in per_class.items():
        if len(rows) == 2 and rows[0] != rows[1]:
            raise ArithmeticError(
                f"class representatives of cycle type {mu} disagree: {rows[0]} vs {rows[1]}"
            )
        values[mu] = QRat(QPoly(rows[0]))
    return ClassFunction(n, values)


def q_factorial(n: int) -> QPoly:
    out = QPoly.one()
    for k in range(1, n + 1):
        out = out * QPoly([1] * k)
    return out


def coinvariant_closed_form_check(n: int) -> dict:
    """The brute-force coinvariant character against its closed forms and
    degenerations.

    Classwise exact checks: the alternating closed form over subsets with
    induced trivial characters; the dual closed form with induced sign
    characters; the q = 1 specialization equals the regular character; the
    identity value is the q-factorial; palindromicity (top-degree shift with
    sign twist); and the polynomial-ring factorization through the invariant
    subalgebra, together with its own palindromicity."""
    if not 1 <= n <= COINVARIANT_BUDGET:
        raise BudgetExceededError(
            f"the closed-form check supports n <= {COINVARIANT_BUDGET}, got n = {n}"
        )
    R = coinvariant_graded_character(n)
    form_trivial = ClassFunction.constant(n, QRat.zero())
    form_sign = ClassFunction.constant(n, QRat.zero())
    q = QRat.q()
    for I in subsets_of_interval(n):
        others = [j for j in range(1, n) if j not in I]
        coef_t = QRat.one()
        for i in I:
            coef_t = coef_t * q**i
        for j in others:
            coef_t = coef_t * (QRat.one() - q**j)
        coef_s = QRat.one()
        for j in others:
            coef_s = coef_s * (q**j - QRat.one())
        form_trivial = form_trivial + induced_young(I, n, "trivial").scale(coef_t)
        form_sign = form_sign + induced_young(I, n, "sign").scale(coef_s)

    report: dict = {"n": n, "checks": {}}

    def record(name: str, passed: bool, detail: str = "") -> None:
        report["checks"][name] = {"passed": bool(passed), "detail": detail}

    diff = _first_discrepancy(R, form_trivial)
    record("closed_form_with_induced_trivial", diff is None, diff or "")
    diff = _first_discrepancy(R, form_sign)
    record("closed_form_with_induced_sign", diff is None, diff or "")
    reg = regular_character(n)
    record(
        "q_equals_one_is_regular",
        all(R(mu).evaluate(1) == reg(mu).evaluate(1) for mu in partitions_of(n)),
    )
    record("identity_value_is_q_factorial", R((1,) * n).as_poly() == q_factorial(n))
    record(
        "palindromicity_with_sign_twist",
        palindromicity_check(R, QRat.q() ** (n * (n - 1) // 2), True, QRat.one()),
    )
    series = polynomial_algebra_series(n)
    invariant_factor = QRat.one()
    for k in range(1, n + 1):
        invariant_factor = invariant_factor / (QRat.one() - QRat.q() ** k)
    diff = _first_discrepancy(series, R.scale(invariant_factor))
    record("polynomial_ring_factors_through_invariants", diff is None, diff or "")
    record(
        "polynomial_ring_palindromicity",
        palindromicity_check(series, QRat.one(), True, QRat.q() ** n * ((-1) ** n)),
    )
    report["all_passed"] = all(c["passed"] for c in report["checks"].values())
    return report


def coinvariant_flag_cross_check(n: int) -> bool:
    """The coinvariant character equals the dagger character of the flavor-Y
    moment-graph quotient for h = (n, ..., n), classwise."""
    if not 1 <= n <= 4:
        raise BudgetExceededError("the moment-graph cross-check supports n <= 4")
    model = GkmModel(HessenbergFunction((n,) * n), "Y")
    return quotient_graded_character(model, "dagger", "t_vars") == coinvariant_graded_character(n)


def q_binomial_sum_check(n: int, i: int) -> bool:
    """Whether sum over 1 <= a_1 < ... < a_i < n of x^(sum a_j - j) equals
    the Gaussian binomial prod_{j=1}^i (x^{n-j} - 1)/(x^j - 1), exactly."""
    if not 1 <= i < n <= Q_BINOMIAL_BUDGET:
        raise BudgetExceededError(
            f"the Gaussian-binomial check supports 1 <= i < n <= {Q_BINOMIAL_BUDGET}"
        )
    lhs = QPoly.zero()
    for a in combinations(range(1, n), i):
        lhs = lhs + QPoly.monomial(sum(a_j - j for j, a_j in enumerate(a, start=1)))
    rhs = QRat.one()
    for j in range(1, i + 1):
        rhs = rhs * QRat(QPoly.monomial(n - j) - QPoly.one(), QPoly.monomial(j) - QPoly.one())
    return rhs.is_polynomial() and rhs.as_poly() == lhs


def complete_graph_agreement(n: int) -> dict:
    """Orientation counting on the complete graph against the product
    formula, partition by partition.

    For each partition P of n: the sum of q^(ascent count) over orientations
    of K_n whose sink-component partition is P must equal the sum over
    subsets I of [n-1] with sorted composition P of
    prod_{j not in I} ((q+1)^j - 1).  The two sides are aggregated by
    partition because distinct subsets can sort to the same partition; both
    totals are also checked against (1+q)^(number of edges)."""
    if not 1 <= n <= COMPLETE_GRAPH_BUDGET:
        raise BudgetExceededError(
            f"the complete-graph check supports n <= {COMPLETE_GRAPH_BUDGET}, got n = {n}"
        )
    h = HessenbergFunction((n,) * n)
    orient_side: dict[tuple[int, ...], QPoly] = {mu: QPoly.zero() for mu in partitions_of(n)}
    for theta in orientations(h):
        orient_side[lambda_of(theta)] = orient_side[lambda_of(theta)] + QPoly.monomial(theta.asc())
    formula_side: dict[tuple[int, ...], QPoly] = {mu: QPoly.zero() for mu in partitions_of(n)}
    qp1 = QPoly.q() + QPoly.one()
    for I in subsets_of_interval(n):
        term = QPoly.one()
        for j in range(1, n):
            if j not in I:
                term = term * (qp1**j - QPoly.one())
        P = partition_from_subset(I, n)
        formula_side[P] = formula_side[P] + term
    report: dict = {"n": n, "partitions": {}, "all_passed": True}
    for mu in partitions_of(n):
        ok = orient_side[mu] == formula_side[mu]
        report["partitions"][".".join(map(str, mu))] = {
            "passed": ok,
            "orientation_side": format_poly(orient_side[mu]),
            "formula_side": format_poly(formula_side[mu]),
        }
        report["all_passed"] = report["all_passed"] and ok
    total = QPoly.one()
    for _ in range(n * (n - 1) // 2):
        total = total * qp1
    sums_match = (
        sum(orient_side.values(), QPoly.zero()) == total
        and sum(formula_side.values(), QPoly.zero()) == total
    )
    report["totals_match_binomial_expansion"] = sums_match
    report["all_passed"] = report["all_passed"] and sums_match
    return report


def permco_report(n: int) -> dict:
    """Machine-checkable report: f-vector plus every face-module and
    coinvariant law available at this n."""
    if not 1 <= n <= FACE_MODULE_BUDGET:
        raise BudgetExceededError(
            f"reports support 1 <= n <= {FACE_MODULE_BUDGET}, got n = {n}"
        )
    checks: list[dict] = []

    def record(name: str, passed: bool, detail: str = "") -> None:
        checks.append({"name": name, "passed": bool(passed), "detail": detail})

    fv = f_vector(n)
    chains = sum(factorial(n) // young_subgroup_order(I, n) for I in subsets_of_interval(n))
    record("face-count-identity", sum(fv) == chains, f"{sum(fv)} faces")
    per_dim = [face_module_character(n, i) for i in range(n)]
    record(
        "face-module-dimensions-match-f-vector",
        all(graded_dimension(per_dim[i]) == QRat.of(fv[i]) for i in range(n)),
    )
    F, H = face_and_h_series(n)
    h_fn = HessenbergFunction(tuple(range(2, n + 1)) + (n,) if n >= 2 else (1,))
    eulerian = QRat(eulerian_polynomial(n))
    record(
        "h-series-dimensions-are-eulerian",
        graded_dimension(H) == eulerian and llt(h_fn).dimension_series() == eulerian,
        format_poly(eulerian_polynomial(n)),
    )
    twin = face_module_twin_check(n)
    record(
        "face-module-twin-law",
        twin["all_passed"],
        "; ".join(k for k, v in twin["checks"].items() if not v["passed"]),
    )
    if n <= COINVARIANT_BUDGET:
        closed = coinvariant_closed_form_check(n)
        record(
            "coinvariant-closed-forms",
            closed["all_passed"],
            "; ".join(k for k, v in closed["checks"].items() if not v["passed"]),
        )
    if n <= 4:
        record("coinvariant-moment-graph-cross-check", coinvariant_flag_cross_check(n))
    if n >= 2:
        record(
            "gaussian-binomial-sums",
            all(q_binomial_sum_check(n, i) for i in range(1, n)),
        )
    if n <= COMPLETE_GRAPH_BUDGET:
        record("complete-graph-agreement", complete_graph_agreement(n)["all_passed"])
    return {
        "n": n,
        "f_vector": list(fv),
        "checks": checks,
        "all_passed": all(c["passed"] for c in checks),
    }
