"""Moment-graph (GKM) models of two equivariant cohomology rings built from a
unit interval graph, as exact linear algebra.

Both models live on the vertex set S_n with one edge {w, w(i,j)} for every
arc (j, i) of the graph.  A degree-d class assigns to each vertex a
homogeneous degree-d polynomial in t_1..t_n, subject to one congruence per
edge: the two endpoint values must agree modulo the edge label, which is
t_{w(i)} - t_{w(j)} in flavor X and the constant form t_i - t_j in flavor Y.

The module computes exact bases of these congruence spaces, the symmetric
group actions they carry (dot on X, dagger on Y, star on the full flag),
graded characters of the quotients by the ideals generated by the constant
classes t_i or the tautological classes x_i, the vertexwise change of
variables xi that identifies the two flavors, and the localization
pushforward to a polynomial in t.

Exactness strategy: small ranks are solved directly over Fraction; large
ranks (n = 4) combine exhibited exact solution columns with a mod-p nullity
bound so that dimensions are pinned by two one-sided certificates, and
traces are extracted with SubspaceTracer.  Every basis column is verified
against every edge congruence in exact integer arithmetic before use.
"""

from __future__ import annotations

import threading
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial

import numpy as np

from .characters import ClassFunction, frobenius_char, palindromicity_check
from .combinat import (
    all_permutations,
    class_representative,
    compose,
    cycle_type,
    inverse,
    partitions_of,
    second_representative,
    transposition,
)
from .errors import BudgetExceededError
from .hessgraph import HessenbergFunction, csf, llt
from .linalg import (
    SMALL_PRIMES,
    SubspaceTracer,
    blocked_rref,
    frac_nullspace,
    frac_rref,
    integerize,
    lift_vector,
    nullspace_small,
)
from .multipoly import (
    MPoly,
    monomial_index,
    monomials,
    mp_add,
    mp_coords,
    mp_divide_linear,
    mp_from_coords,
    mp_is_zero,
    mp_mul,
    mp_permute,
    mp_scale,
    mp_sub,
    mp_subst_var,
    mp_var,
    mp_zero,
)
from .qrat import QPoly, QRat

GKM_N_BUDGET = 4
GKM_DEGREE_SLACK = 3  # degree pieces available up to |h| + slack

_EXACT_ENTRY_BOUND = 1 << 40  # basis entries are checked against this before int64 work

_VALID_QUOTIENTS = {("X", "dot", "t_vars"), ("X", "dot", "x_classes"), ("Y", "dagger", "t_vars")}


class GkmModel:
    """Moment graph of one flavor: vertices S_n, one edge per arc and coset.

    Edges are stored once as (iu, iv, a, b): endpoint vertex indices with
    iu < iv, and the label t_a - t_b (for flavor X computed at the iu
    endpoint; the flip at the other endpoint only changes the sign of the
    label, which spans the same line).
    """

    def __init__(self, h: HessenbergFunction, flavor: str):
        if flavor not in ("X", "Y"):
            raise ValueError(f"flavor must be 'X' or 'Y', got {flavor!r}")
        n = h.n
        if n > GKM_N_BUDGET:
            raise BudgetExceededError(f"GKM models support n <= {GKM_N_BUDGET}, got n = {n}")
        self.h = h
        self.flavor = flavor
        self.n = n
        self.vertices = all_permutations(n)
        self.vertex_index = {w: i for i, w in enumerate(self.vertices)}
        edges = []
        for iu, w in enumerate(self.vertices):
            for j, i in h.edge_pairs():
                v = compose(w, transposition(n, i, j))
                iv = self.vertex_index[v]
                if iu < iv:
                    if flavor == "X":
                        a, b = w[i - 1], w[j - 1]
                    else:
                        a, b = i, j
                    edges.append((iu, iv, a, b))
        self.edges = tuple(edges)

    def twin(self) -> GkmModel:
        return GkmModel(self.h, "Y" if self.flavor == "X" else "X")

    def __repr__(self) -> str:
        return f"GkmModel({self.h!r}, {self.flavor!r})"


# ------------------------------------------------------------ index maps


@lru_cache(maxsize=None)
def perm_monomial_map(tau: tuple[int, ...], d: int) -> np.ndarray:
    """Index form of the variable relabeling t_i -> t_tau(i) on degree-d
    monomials: out[src] is the index of the relabeled monomial."""
    n = len(tau)
    monos = monomials(n, d)
    idx = monomial_index(n, d)
    out = np.empty(len(monos), dtype=np.intp)
    for s, e in enumerate(monos):
        e2 = [0] * n
        for i, x in enumerate(e):
            e2[tau[i] - 1] = x
        out[s] = idx[tuple(e2)]
    return out


@lru_cache(maxsize=None)
def _mono_shift_map(n: int, d: int, i: int) -> np.ndarray:
    """Index form of multiplication by t_i: degree d-1 monomials into degree d."""
    monos = monomials(n, d - 1)
    idx = monomial_index(n, d)
    out = np.empty(len(monos), dtype=np.intp)
    for s, e in enumerate(monos):
        e2 = list(e)
        e2[i - 1] += 1
        out[s] = idx[tuple(e2)]
    return out


@lru_cache(maxsize=None)
def _subst_map(n: int, d: int, a: int, b: int) -> tuple[np.ndarray, int]:
    """Index form of the substitution t_a := t_b on degree-d monomials.

    Returns (tmap, m) where tmap[src] is a dense index in [0, m) over the
    distinct image monomials; m = #(degree-d monomials in n-1 variables).
    """
    monos = monomials(n, d)
    local: dict[tuple[int, ...], int] = {}
    out = np.empty(len(monos), dtype=np.intp)
    for s, e in enumerate(monos):
        e2 = list(e)
        e2[b - 1] += e2[a - 1]
        e2[a - 1] = 0
        key = tuple(e2)
        if key not in local:
            local[key] = len(local)
        out[s] = local[key]
    return out, len(local)


def _constraint_matrix(model: GkmModel, d: int) -> np.ndarray:
    """All edge congruences at degree d as one +-1 integer matrix.

    Column (iv, e) is the coefficient of monomial e at vertex iv; each edge
    contributes one row per image monomial of the substitution t_a := t_b,
    stating that the substituted difference of endpoint values vanishes.
    """
    n = model.n
    M = len(monomials(n, d))
    mprime = comb(d + n - 2, n - 2) if n >= 2 else (1 if d == 0 else 0)
    A = np.zeros((len(model.edges) * mprime, len(model.vertices) * M), dtype=np.int64)
    src = np.arange(M)
    for k, (iu, iv, a, b) in enumerate(model.edges):
        tmap, m = _subst_map(n, d, a, b)
        rows = k * mprime + tmap
        A[rows, iu * M + src] = 1
        A[rows, iv * M + src] = -1
    return A


def _verify_columns(model: GkmModel, d: int, mat: np.ndarray) -> None:
    """Exact check that every column satisfies every edge congruence.

    Works per edge on the difference of the two vertex blocks, bucketing
    coefficients by image monomial of the substitution; all buckets must
    vanish.  int64 is exact here because |entries| stays far below 2**62."""
    n = model.n
    M = len(monomials(n, d))
    if mat.dtype != object and mat.size:
        peak = int(np.abs(mat).max())
        if peak > _EXACT_ENTRY_BOUND:
            raise ArithmeticError("basis entries too large for int64 verification")
    for iu, iv, a, b in model.edges:
        diff = mat[iu * M:(iu + 1) * M, :] - mat[iv * M:(iv + 1) * M, :]
        tmap, m = _subst_map(n, d, a, b)
        buckets = np.zeros((m, mat.shape[1]), dtype=mat.dtype)
        np.add.at(buckets, tmap, diff)
        if np.any(buckets != 0):
            raise ArithmeticError(
                f"column violates the degree-{d} congruence on edge "
                f"({model.vertices[iu]}, {model.vertices[iv]}) with label t_{a} - t_{b}"
            )


# ------------------------------------------------------------ degree pieces


class GkmSpace:
    """Exact basis of one degree piece of a model; immutable once built.

    matrix holds the basis columns over the coordinates (vertex, monomial)
    -> vertex_index * #monomials + monomial_index.  certificate records how
    the dimension was pinned.
    """

    def __init__(self, model: GkmModel, degree: int, matrix: np.ndarray, certificate: dict):
        self.model = model
        self.degree = degree
        self.matrix = matrix
        self.dim = matrix.shape[1]
        self.certificate = certificate
        self._tracers: dict[int, SubspaceTracer] = {}
        self._lock = threading.Lock()

    @property
    def basis(self) -> list[list[int]]:
        """Basis columns as exact integer vectors."""
        return [list(map(int, self.matrix[:, j])) for j in range(self.dim)]

    def _tracer(self, p: int) -> SubspaceTracer:
        with self._lock:
            if p not in self._tracers:
                self._tracers[p] = SubspaceTracer(self.matrix.T, p)
            return self._tracers[p]

    def trace(self, sigma: tuple[int, ...], action: str) -> int:
        """Exact trace of the action of sigma on this piece."""
        _check_action(self.model, action)
        src = _ambient_src(self.model, self.degree, sigma, action)
        err: Exception | None = None
        for p in SMALL_PRIMES[:4]:
            try:
                return self._tracer(p).trace(src)
            except ArithmeticError as exc:  # unlucky prime; certify with the next
                err = exc
        raise ArithmeticError(f"trace failed at every prime: {err}")

    def __repr__(self) -> str:
        return (
            f"GkmSpace({self.model.h!r}, {self.model.flavor}, "
            f"degree={self.degree}, dim={self.dim})"
        )


_space_cache: dict[tuple, GkmSpace] = {}
_space_lock = threading.Lock()


def _check_degree_budget(model: GkmModel, d: int) -> None:
    if d < 0:
        raise ValueError("degree must be nonnegative")
    top = model.h.size() + GKM_DEGREE_SLACK
    if d > top:
        raise BudgetExceededError(
            f"degree pieces are available for d <= |h| + {GKM_DEGREE_SLACK} = {top}, got d = {d}"
        )


def _components(model: GkmModel) -> list[list[int]]:
    """Connected components of the moment graph, as vertex index lists."""
    parent = list(range(len(model.vertices)))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for iu, iv, _, _ in model.edges:
        parent[find(iu)] = find(iv)
    groups: dict[int, list[int]] = {}
    for v in range(len(parent)):
        groups.setdefault(find(v), []).append(v)
    return list(groups.values())


def _staircase_columns(model: GkmModel, d: int) -> np.ndarray:
    """Columns of the classes x^a = x_1^{a_1}..x_n^{a_n} with a_i <= n - i
    and |a| = d; each takes the value t^{w(a)} at vertex w, so the column is
    the 0/1 indicator of one monomial per vertex.  Valid for flavor X."""
    n = model.n
    M = len(monomials(n, d))
    idx = monomial_index(n, d)
    exps = [e for e in monomials(n, d) if all(e[i] <= n - 1 - i for i in range(n))]
    out = np.zeros((len(model.vertices) * M, len(exps)), dtype=np.int64)
    for j, a in enumerate(exps):
        src = idx[a]
        for iw, w in enumerate(model.vertices):
            out[iw * M + int(perm_monomial_map(w, d)[src]), j] = 1
    return out


def _t_product_columns(model: GkmModel, prev: GkmSpace) -> np.ndarray:
    """Columns t_i * f for every basis column f of the previous degree."""
    n = model.n
    d = prev.degree + 1
    M = len(monomials(n, d))
    nverts = len(model.vertices)
    B = prev.matrix
    K = B.shape[1]
    out = np.zeros((nverts * M, n * K), dtype=B.dtype)
    for i in range(1, n + 1):
        shift = _mono_shift_map(n, d, i)
        rows = (np.arange(nverts)[:, None] * M + shift[None, :]).ravel()
        out[rows, (i - 1) * K:i * K] = B
    return out


def _x_product_columns(model: GkmModel, prev: GkmSpace) -> np.ndarray:
    """Columns x_i * f, where x_i multiplies the value at vertex w by t_{w(i)}."""
    n = model.n
    d = prev.degree + 1
    M = len(monomials(n, d))
    M1 = len(monomials(n, d - 1))
    nverts = len(model.vertices)
    B = prev.matrix
    K = B.shape[1]
    out = np.zeros((nverts * M, n * K), dtype=B.dtype)
    for i in range(1, n + 1):
        for iw, w in enumerate(model.vertices):
            shift = _mono_shift_map(n, d, w[i - 1])
            out[iw * M + shift, (i - 1) * K:i * K] = B[iw * M1:(iw + 1) * M1, :]
    return out


def _nullity_bound(model: GkmModel, d: int, p: int) -> int:
    """Mod-p nullity of the constraint matrix: an upper bound for the exact
    dimension, since the mod-p rank of an integer matrix never exceeds its
    rank over Q."""
    C = _constraint_matrix(model, d)
    if C.shape[0] == 0:
        return C.shape[1]
    rank, _, _ = blocked_rref(C, p, full=False)
    return C.shape[1] - rank


def _lifted_nullspace(model: GkmModel, d: int, k_target: int) -> np.ndarray:
    """Exact nullspace columns recovered from canonical mod-p nullspaces by
    CRT and rational reconstruction.

    The canonical form is unit at its own free coordinate and zero at every
    other free coordinate, so the lifted set is independent over Q by
    construction; exact congruence verification happens in the caller."""
    residues: list[np.ndarray] = []
    moduli: list[int] = []
    ref_pivots: list[int] | None = None
    columns: list[list[int]] | None = None
    C = _constraint_matrix(model, d)
    for p in SMALL_PRIMES:
        pivots, free, basis = nullspace_small(C, p)
        if len(free) != k_target:
            continue  # unlucky prime: rank dropped mod p
        if ref_pivots is None:
            ref_pivots = pivots
        elif pivots != ref_pivots:
            continue  # pivot structure must match for CRT to combine residues
        residues.append(basis)
        moduli.append(p)
        if len(moduli) < 2:
            continue
        cols = []
        for j in range(k_target):
            vec = lift_vector([r[:, j] for r in residues], moduli)
            if vec is None:
                break
            cols.append(integerize(vec))
        else:
            columns = cols
            break
    if columns is None:
        raise ArithmeticError("rational reconstruction of the congruence space failed")
    mat = np.array(columns, dtype=object).T
    peak = max((max(map(abs, col)) for col in columns), default=0)
    if peak <= _EXACT_ENTRY_BOUND:
        mat = mat.astype(np.int64)
    return mat


def _exact_space(model: GkmModel, d: int) -> GkmSpace:
    """Direct Fraction nullspace of the congruences (small ranks)."""
    C = _constraint_matrix(model, d)
    ncols = C.shape[1]
    rows = [[Fraction(int(x)) for x in row] for row in C] if C.shape[0] else []
    basis = frac_nullspace(rows, ncols)
    cols = [integerize(v) for v in basis]
    mat = (
        np.array(cols, dtype=np.int64).T
        if cols
        else np.zeros((ncols, 0), dtype=np.int64)
    )
    _verify_columns(model, d, mat)
    return GkmSpace(model, d, mat, {"route": "exact-nullspace"})


def _certified_space(model: GkmModel, d: int) -> GkmSpace:
    """Certified construction for flavor X at n = 4.

    Upper bound: mod-p nullity of the constraint matrix.  Lower bound:
    exhibited columns (products of the previous degree by t_i, staircase
    classes x^a, or CRT-lifted nullspace vectors), verified exactly and
    independent (mod p, or by canonical unit structure).  The two bounds
    must meet, which pins the dimension."""
    p = SMALL_PRIMES[0]
    k_target = _nullity_bound(model, d, p)
    route = "products"
    if d == 0:
        comps = _components(model)
        M = len(monomials(model.n, 0))
        mat = np.zeros((len(model.vertices) * M, len(comps)), dtype=np.int64)
        for j, comp in enumerate(comps):
            mat[np.array(comp), j] = 1
        if mat.shape[1] != k_target:
            raise ArithmeticError("component count disagrees with the congruence nullity")
        route = "components"
    else:
        prev = degree_piece(model, d - 1)
        cand = _t_product_columns(model, prev)
        stair = _staircase_columns(model, d)
        if stair.shape[1]:
            cand = np.concatenate([cand, stair], axis=1)
        rank, pivots, _ = blocked_rref(cand, p, full=False)
        if rank > k_target:
            raise ArithmeticError("independent solutions exceed the congruence nullity")
        if rank == k_target:
            mat = np.ascontiguousarray(cand[:, pivots])
        else:
            mat = _lifted_nullspace(model, d, k_target)
            route = "crt-lift"
    _verify_columns(model, d, mat)
    return GkmSpace(
        model,
        d,
        mat,
        {"route": route, "prime": p, "nullity_bound": k_target, "exhibited": int(mat.shape[1])},
    )


def _transported_space(model: GkmModel, d: int) -> GkmSpace:
    """Flavor-Y piece obtained from the flavor-X piece by the vertexwise
    change of variables xi^{-1}: the Y value at w is w^{-1} applied to the X
    value at w.  This is a coordinate permutation, so independence and
    dimension carry over; the Y congruences are then verified exactly and
    the dimension re-certified with the Y-side nullity bound."""
    xspace = degree_piece(GkmModel(model.h, "X"), d)
    n = model.n
    M = len(monomials(n, d))
    gather = np.empty(len(model.vertices) * M, dtype=np.intp)
    base = np.arange(M)
    for iw, w in enumerate(model.vertices):
        gather[iw * M + base] = iw * M + perm_monomial_map(w, d)
    mat = xspace.matrix[gather, :]
    _verify_columns(model, d, mat)
    k_target = _nullity_bound(model, d, SMALL_PRIMES[0])
    if mat.shape[1] != k_target:
        raise ArithmeticError("transported basis does not match the Y-side nullity bound")
    return GkmSpace(model, d, mat, {"route": "xi-transport", "nullity_bound": k_target})


def degree_piece(model: GkmModel, d: int) -> GkmSpace:
    """Exact basis of the degree-d piece of the model's congruence space."""
    _check_degree_budget(model, d)
    key = (model.h.values, model.flavor, d)
    with _space_lock:
        if key in _space_cache:
            return _space_cache[key]
    if model.n <= 3:
        space = _exact_space(model, d)
    elif model.flavor == "X":
        space = _certified_space(model, d)
    else:
        space = _transported_space(model, d)
    with _space_lock:
        _space_cache.setdefault(key, space)
        return _space_cache[key]


# ------------------------------------------------------------ classes


class EquivariantClass:
    """A vertexwise assignment of homogeneous degree-d polynomials that
    satisfies the model's edge congruences."""

    def __init__(self, model: GkmModel, degree: int, values, verify: bool = True):
        values = tuple(dict(v) for v in values)
        if len(values) != len(model.vertices):
            raise ValueError("need one polynomial per vertex")
        self.model = model
        self.degree = degree
        self.values = values
        if verify:
            self.verify()

    def verify(self) -> None:
        """Raise unless every edge congruence holds exactly."""
        for iu, iv, a, b in self.model.edges:
            diff = mp_sub(self.values[iu], self.values[iv])
            if not mp_is_zero(mp_subst_var(diff, a, b)):
                raise ValueError(
                    f"assignment violates the congruence on edge "
                    f"({self.model.vertices[iu]}, {self.model.vertices[iv]}) "
                    f"with label t_{a} - t_{b}"
                )

    @staticmethod
    def from_column(model: GkmModel, degree: int, column, verify: bool = True) -> EquivariantClass:
        M = len(monomials(model.n, degree))
        vals = [
            mp_from_coords([Fraction(int(x)) if not isinstance(x, Fraction) else x
                            for x in column[iv * M:(iv + 1) * M]], model.n, degree)
            for iv in range(len(model.vertices))
        ]
        return EquivariantClass(model, degree, vals, verify=verify)

    def to_column(self) -> list[Fraction]:
        out: list[Fraction] = []
        for v in self.values:
            out.extend(mp_coords(v, self.model.n, self.degree))
        return out

    @staticmethod
    def one(model: GkmModel) -> EquivariantClass:
        n = model.n
        return EquivariantClass(model, 0, [{(0,) * n: Fraction(1)} for _ in model.vertices], verify=False)

    @staticmethod
    def t_class(model: GkmModel, i: int) -> EquivariantClass:
        """The constant assignment w -> t_i (a class of either flavor)."""
        return EquivariantClass(model, 1, [mp_var(model.n, i) for _ in model.vertices], verify=False)

    @staticmethod
    def x_class(model: GkmModel, i: int) -> EquivariantClass:
        """The tautological class w -> t_{w(i)} (flavor X only)."""
        if model.flavor != "X":
            raise ValueError("x classes satisfy the flavor-X congruences only")
        return EquivariantClass(
            model, 1, [mp_var(model.n, w[i - 1]) for w in model.vertices], verify=False
        )

    def act(self, sigma: tuple[int, ...], action: str) -> EquivariantClass:
        """Apply sigma via the named action; the result is re-verified."""
        _check_action(self.model, action)
        verts = self.model.vertices
        vidx = self.model.vertex_index
        sinv = inverse(sigma)
        if action == "dot":
            vals = [mp_permute(self.values[vidx[compose(sinv, w)]], sigma) for w in verts]
        elif action == "dagger":
            vals = [self.values[vidx[compose(sinv, w)]] for w in verts]
        else:  # star
            vals = [self.values[vidx[compose(w, sigma)]] for w in verts]
        return EquivariantClass(self.model, self.degree, vals, verify=True)

    def __mul__(self, other: EquivariantClass) -> EquivariantClass:
        if self.model is not other.model and (
            self.model.flavor != other.model.flavor or self.model.h != other.model.h
        ):
            raise ValueError("classes live on different models")
        vals = [mp_mul(a, b) for a, b in zip(self.values, other.values)]
        return EquivariantClass(self.model, self.degree + other.degree, vals, verify=False)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, EquivariantClass)
            and self.model.flavor == other.model.flavor
            and self.model.h == other.model.h
            and self.degree == other.degree
            and self.values == other.values
        )

    def __repr__(self) -> str:
        return f"EquivariantClass({self.model!r}, degree={self.degree})"


def _check_action(model: GkmModel, action: str) -> None:
    if action == "dot":
        if model.flavor != "X":
            raise ValueError("the dot action preserves the flavor-X congruences only")
    elif action == "dagger":
        if model.flavor != "Y":
            raise ValueError("the dagger action preserves the flavor-Y congruences only")
    elif action == "star":
        if model.flavor != "X" or not model.h.is_full():
            raise ValueError(
                "the star action preserves the congruences only for flavor X "
                "with h = (n, ..., n)"
            )
    else:
        raise ValueError(f"action must be 'dot', 'dagger' or 'star', got {action!r}")


def _ambient_src(model: GkmModel, d: int, sigma: tuple[int, ...], action: str) -> np.ndarray:
    """Coordinate-permutation form of the action: (A f)[c] = f[src[c]]."""
    n = model.n
    M = len(monomials(n, d))
    verts = model.vertices
    vidx = model.vertex_index
    sinv = inverse(sigma)
    if action == "dot":
        vmap = np.array([vidx[compose(sinv, w)] for w in verts], dtype=np.intp)
        mmap = perm_monomial_map(sinv, d)
    elif action == "dagger":
        vmap = np.array([vidx[compose(sinv, w)] for w in verts], dtype=np.intp)
        mmap = np.arange(M, dtype=np.intp)
    else:  # star
        vmap = np.array([vidx[compose(w, sigma)] for w in verts], dtype=np.intp)
        mmap = np.arange(M, dtype=np.intp)
    return (vmap[:, None] * M + mmap[None, :]).ravel()


def action_matrix(space: GkmSpace, sigma: tuple[int, ...], action: str) -> list[list[Fraction]]:
    """Exact matrix of the action on the space's basis: column j holds the
    coefficients of the image of basis column j.

    Solved on an invertible row submatrix of the basis; the solution is then
    checked against all coordinates (exactly when small, mod two primes
    otherwise), so a congruence-violating action cannot slip through."""
    model = space.model
    _check_action(model, action)
    k = space.dim
    if k == 0:
        return []
    if k > 256:
        raise BudgetExceededError("action matrices are materialized for dim <= 256; use traces instead")
    src = _ambient_src(model, space.degree, sigma, action)
    B = space.matrix
    AB = B[src, :]
    p = SMALL_PRIMES[0]
    tracer = space._tracer(p)
    rows = tracer.rows
    S = [[Fraction(int(B[r, j])) for j in range(k)] for r in rows]
    T = [[Fraction(int(AB[r, j])) for j in range(k)] for r in rows]
    aug = [S[i] + T[i] for i in range(k)]
    rank, pivots, rref = frac_rref(aug)
    if pivots[:k] != list(range(k)):
        raise ArithmeticError("pivot row submatrix became singular over Q")
    out = [[rref[i][k + j] for j in range(k)] for i in range(k)]
    if B.shape[0] * k * k <= 4_000_000:
        for j in range(k):
            for c in range(B.shape[0]):
                acc = sum(Fraction(int(B[c, i])) * out[i][j] for i in range(k))
                if acc != Fraction(int(AB[c, j])):
                    raise ValueError("action does not preserve the congruence space")
    else:
        checked = 0
        for q in SMALL_PRIMES[:3]:
            if any(f.denominator % q == 0 for row in out for f in row):
                continue  # q divides a solution denominator; use the next prime
            Mq = np.array(
                [[(f.numerator % q) * pow(f.denominator % q, q - 2, q) % q for f in row]
                 for row in out],
                dtype=np.int64,
            )
            if np.any((B % q) @ Mq % q != AB % q):
                raise ValueError("action does not preserve the congruence space")
            checked += 1
            if checked == 2:
                break
        if checked == 0:
            raise ArithmeticError("no usable verification prime for the action matrix")
    return out


def ideal_piece(space_d: GkmSpace, space_dminus1: GkmSpace | None, generators: str) -> list[list[int]]:
    """Exact spanning columns of sum_g g * (degree d-1 piece) inside the
    degree-d coordinate space, for g over t_1..t_n or x_1..x_n."""
    if generators not in ("t_vars", "x_classes"):
        raise ValueError(f"generators must be 't_vars' or 'x_classes', got {generators!r}")
    model = space_d.model
    if space_d.degree == 0:
        return []
    if space_dminus1 is None or space_dminus1.degree != space_d.degree - 1:
        raise ValueError("need the piece one degree below")
    if space_dminus1.model.flavor != model.flavor or space_dminus1.model.h != model.h:
        raise ValueError("pieces belong to different models")
    if generators == "x_classes" and model.flavor != "X":
        raise ValueError("x classes generate an ideal of flavor X only")
    build = _t_product_columns if generators == "t_vars" else _x_product_columns
    prod = build(model, space_dminus1)
    return [list(map(int, prod[:, j])) for j in range(prod.shape[1])]


# ---------------------------------------------------- quotient characters


def _exterior_generator_traces(sigma: tuple[int, ...], permuted: bool) -> list[int]:
    """Traces of sigma on the exterior powers of the generator span: the
    coefficients of det(1 + y P_sigma) when sigma permutes the generators,
    and plain binomials when it fixes them."""
    n = len(sigma)
    if not permuted:
        return [comb(n, k) for k in range(n + 1)]
    coeffs = [1]
    for ell in cycle_type(sigma):
        factor = [0] * (ell + 1)
        factor[0] = 1
        factor[ell] = -((-1) ** ell)
        new = [0] * (len(coeffs) + ell)
        for i, c in enumerate(coeffs):
            if c:
                new[i] += c
                new[i + ell] += c * factor[ell]
        coeffs = new
    return coeffs[: n + 1] + [0] * (n + 1 - len(coeffs))


def quotient_graded_character(
    model: GkmModel, action: str, generators: str, max_d: int | None = None
) -> ClassFunction:
    """Graded character of the quotient of the model's congruence ring by the
    ideal generated by the constant classes t_i or the tautological classes
    x_i, one q-polynomial value per cycle type.

    The trace on the degree-d quotient is the alternating sum over k of
    (trace on exterior power k of the generator span) times (trace on the
    degree d-k piece); this is the Euler characteristic of the generator
    ideal's resolution, valid because the congruence ring is a free module
    over the polynomial subalgebra its generators span.  Traces are computed
    on one representative per cycle type and checked against a second
    representative whenever the class has one."""
    combo = (model.flavor, action, generators)
    if combo not in _VALID_QUOTIENTS:
        raise ValueError(
            f"quotients support (X, dot, t_vars), (X, dot, x_classes) and "
            f"(Y, dagger, t_vars); got {combo}"
        )
    n = model.n
    size = model.h.size()
    if max_d is None:
        max_d = size
    if max_d < size:
        raise ValueError(f"max_d must be at least |h| = {size}")
    _check_degree_budget(model, max_d)
    spaces = [degree_piece(model, d) for d in range(max_d + 1)]
    permuted = generators == "t_vars" and action == "dot"
    values: dict[tuple[int, ...], QRat] = {}
    for mu in partitions_of(n):
        reps = [class_representative(mu)]
        second = second_representative(mu)
        if second is not None:
            reps.append(second)
        per_rep: list[list[int]] = []
        for sigma in reps:
            ext = _exterior_generator_traces(sigma, permuted)
            space_tr = [spaces[d].trace(sigma, action) for d in range(max_d + 1)]
            qtr = [
                sum(
                    (-1) ** k * ext[k] * space_tr[d - k]
                    for k in range(min(n, d) + 1)
                )
                for d in range(max_d + 1)
            ]
            per_rep.append(qtr)
        if len(per_rep) == 2 and per_rep[0] != per_rep[1]:
            raise ArithmeticError(
                f"class representatives of cycle type {mu} disagree: "
                f"{per_rep[0]} vs {per_rep[1]} (action convention bug)"
            )
        for d in range(size + 1, max_d + 1):
            if per_rep[0][d] != 0:
                raise ArithmeticError(
                    f"quotient does not vanish at degree {d} > |h| = {size}"
                )
        values[mu] = QRat(QPoly(per_rep[0]))
    return ClassFunction(n, values)


def quotient_character_bruteforce(
    model: GkmModel, action: str, generators: str, max_d: int | None = None
) -> ClassFunction:
    """Independent route to the quotient character for n <= 3: the trace on
    the quotient is the trace on the piece minus the trace on the ideal
    subspace, both evaluated exactly over Fraction on echelon bases."""
    combo = (model.flavor, action, generators)
    if combo not in _VALID_QUOTIENTS:
        raise ValueError(f"unsupported quotient combination {combo}")
    n = model.n
    if n > 3:
        raise BudgetExceededError("the bruteforce route is for n <= 3")
    size = model.h.size()
    if max_d is None:
        max_d = size
    _check_degree_budget(model, max_d)
    spaces = [degree_piece(model, d) for d in range(max_d + 1)]

    def echelon_basis(columns: list[list[Fraction]]) -> tuple[list[list[Fraction]], list[int]]:
        if not columns:
            return [], []
        rank, pivots, rref = frac_rref(columns)
        return [row for row in rref[:rank]], pivots

    def subspace_trace(basis_rows, pivots, src) -> Fraction:
        # Echelon rows have a unit at their pivot coordinate and zeros at
        # the other pivots, so the trace is the sum of pivot coordinates of
        # the transported rows.
        total = Fraction(0)
        for row, pc in zip(basis_rows, pivots):
            total += row[src[pc]]
        return total

    values: dict[tuple[int, ...], QRat] = {}
    for mu in partitions_of(n):
        reps = [class_representative(mu)]
        second = second_representative(mu)
        if second is not None:
            reps.append(second)
        per_rep: list[list[Fraction]] = []
        for sigma in reps:
            coeffs: list[Fraction] = []
            for d in range(max_d + 1):
                src = _ambient_src(model, d, sigma, action)
                rows_d = [
                    [Fraction(int(x)) for x in spaces[d].matrix[:, j]]
                    for j in range(spaces[d].dim)
                ]
                basis_d, piv_d = echelon_basis(rows_d)
                tr_space = subspace_trace(basis_d, piv_d, src)
                prev = spaces[d - 1] if d >= 1 else None
                ideal_cols = ideal_piece(spaces[d], prev, generators) if d >= 1 else []
                rows_i = [[Fraction(x) for x in col] for col in ideal_cols]
                basis_i, piv_i = echelon_basis(rows_i)
                tr_ideal = subspace_trace(basis_i, piv_i, src)
                coeffs.append(tr_space - tr_ideal)
            per_rep.append(coeffs)
        if len(per_rep) == 2 and per_rep[0] != per_rep[1]:
            raise ArithmeticError(f"class representatives of cycle type {mu} disagree")
        values[mu] = QRat(QPoly(per_rep[0]))
    return ClassFunction(n, values)


# ------------------------------------------------------------ xi transport


def xi_transport(f: EquivariantClass, direction: str) -> EquivariantClass:
    """The vertexwise change of variables between the flavors: from Y to X it
    applies w to the value at w (sending the constant class t_i to x_i), from
    X to Y it applies w^{-1}.  The result is verified against the target
    congruences."""
    if direction not in ("Y_to_X", "X_to_Y"):
        raise ValueError(f"direction must be 'Y_to_X' or 'X_to_Y', got {direction!r}")
    model = f.model
    if direction == "Y_to_X":
        if model.flavor != "Y":
            raise ValueError("Y_to_X transport needs a flavor-Y class")
        target = GkmModel(model.h, "X")
        vals = [mp_permute(v, w) for v, w in zip(f.values, model.vertices)]
    else:
        if model.flavor != "X":
            raise ValueError("X_to_Y transport needs a flavor-X class")
        target = GkmModel(model.h, "Y")
        vals = [mp_permute(v, inverse(w)) for v, w in zip(f.values, model.vertices)]
    return EquivariantClass(target, f.degree, vals, verify=True)


# ------------------------------------------------------------ localization


@lru_cache(maxsize=None)
def _complement_factors(h_values: tuple[int, ...]) -> tuple[tuple[MPoly, ...], tuple[int, ...]]:
    """Per vertex: the product over non-arcs (j, i) of (t_{w(i)} - t_{w(j)}),
    and the inversion parity of the vertex."""
    h = HessenbergFunction(h_values)
    n = h.n
    arcs = set(h.edge_pairs())
    non_arcs = [(j, i) for j in range(1, n + 1) for i in range(j + 1, n + 1) if (j, i) not in arcs]
    verts = all_permutations(n)
    factors = []
    signs = []
    for w in verts:
        poly: MPoly = {(0,) * n: Fraction(1)}
        for j, i in non_arcs:
            lin = mp_sub(mp_var(n, w[i - 1]), mp_var(n, w[j - 1]))
            poly = mp_mul(poly, lin)
        factors.append(poly)
        inv = sum(1 for a in range(n) for b in range(a + 1, n) if w[a] > w[b])
        signs.append(-1 if inv % 2 else 1)
    return tuple(factors), tuple(signs)


def localization_pushforward(model: GkmModel, f: EquivariantClass) -> MPoly:
    """Exact pushforward of a flavor-X class to a polynomial in t.

    Summing f(w) over vertices with weight 1 / prod over arcs (j, i) of
    (t_{w(i)} - t_{w(j)}) and clearing the common denominator gives
    sum_w sgn(w) f(w) C_w over prod_{j<i} (t_i - t_j), where C_w is the
    product over non-arcs; the numerator must be exactly divisible, and the
    quotient is the result (degree deg f - |h|, or zero)."""
    if model.flavor != "X":
        raise ValueError("the pushforward is defined on flavor-X classes")
    if f.model.h != model.h or f.model.flavor != "X":
        raise ValueError("class does not belong to the model")
    n = model.n
    factors, signs = _complement_factors(model.h.values)
    num: MPoly = mp_zero()
    for val, cw, sign in zip(f.values, factors, signs):
        term = mp_mul(val, cw)
        num = mp_add(num, term if sign > 0 else mp_scale(term, -1))
    if mp_is_zero(num):
        return mp_zero()
    try:
        for j in range(1, n + 1):
            for i in range(j + 1, n + 1):
                num = mp_divide_linear(num, i, j)
    except ValueError as exc:
        raise ValueError(
            "localization sum is not a polynomial; the assignment violates the congruences"
        ) from exc
    return num


def localization_equivariance_check(model: GkmModel, f: EquivariantClass, sigma: tuple[int, ...]) -> bool:
    """Pushing forward sigma . f must match relabeling the pushforward of f."""
    lhs = localization_pushforward(model, f.act(sigma, "dot"))
    rhs = mp_permute(localization_pushforward(model, f), sigma)
    return lhs == rhs


# ------------------------------------------------------------ reports


def betti_numbers(h: HessenbergFunction) -> list[int]:
    """Even Betti numbers, read off the graded dimension of the omega-dual
    chromatic series of the graph."""
    series = csf(h).omega().dimension_series()
    poly = series.as_poly()
    top = poly.degree if poly.degree is not None else 0
    out = []
    for k in range(top + 1):
        c = poly.coeff(k)
        if c.denominator != 1:
            raise ArithmeticError("graded dimension series is not integral")
        out.append(int(c))
    return out


def equivariant_palindromicity_check(h: HessenbergFunction) -> bool:
    """Palindromicity of the equivariant graded character: with R(q) the
    dagger character of the full flavor-Y congruence ring (quotient series
    divided by (1-q)^n), q^{|h|} R(1/q) must equal (-q)^n R(q) tensor sign,
    classwise."""
    model = GkmModel(h, "Y")
    quotient = quotient_graded_character(model, "dagger", "t_vars")
    n = h.n
    denom = (QRat.one() - QRat.q()) ** n
    ring_char = quotient.subs_values(lambda v: v / denom)
    shift = QRat.q() ** h.size()
    scale = QRat.q() ** n * ((-1) ** n)
    return palindromicity_check(ring_char, shift, True, scale)


def gkm_report(h: HessenbergFunction) -> dict:
    """Machine-checkable report for one Hessenberg function: Betti numbers,
    the three quotient graded characters, and pass/fail for every law."""
    n = h.n
    size = h.size()
    max_d = size + 1  # one degree above the top, to witness vanishing
    betti = betti_numbers(h)
    model_x = GkmModel(h, "X")
    model_y = GkmModel(h, "Y")
    checks: list[dict] = []

    def record(name: str, passed: bool, detail: str = "") -> None:
        checks.append({"name": name, "passed": bool(passed), "detail": detail})

    dims_x = [degree_piece(model_x, d).dim for d in range(max_d + 1)]
    dims_y = [degree_piece(model_y, d).dim for d in range(max_d + 1)]
    law = [
        sum(betti[k] * comb(d - k + n - 1, n - 1) for k in range(min(d, len(betti) - 1) + 1))
        for d in range(max_d + 1)
    ]
    record(
        "free-module-dimension-law",
        dims_x == law and dims_y == law,
        f"dims {dims_x} vs law {law}",
    )

    q_t = quotient_graded_character(model_x, "dot", "t_vars", max_d)
    q_x = quotient_graded_character(model_x, "dot", "x_classes", max_d)
    q_y = quotient_graded_character(model_y, "dagger", "t_vars", max_d)

    target_csf = csf(h).omega().in_basis("p")
    record(
        "t-quotient-character-is-omega-chromatic",
        frobenius_char(q_t).in_basis("p") == target_csf,
    )
    target_llt = llt(h).in_basis("p")
    record(
        "x-quotient-character-is-llt",
        frobenius_char(q_x).in_basis("p") == target_llt,
    )
    record("twin-quotient-equals-x-quotient", q_y == q_x)
    record(
        "total-quotient-dimension-is-n-factorial",
        all(
            ch.values[(1,) * n].evaluate(1) == factorial(n)
            for ch in (q_t, q_x, q_y)
        ),
    )
    record("equivariant-palindromicity", equivariant_palindromicity_check(h))

    gens = [transposition(n, 1, 2), tuple(range(2, n + 1)) + (1,)] if n >= 2 else []
    loc_ok = True
    loc_classes = 0
    equiv_classes = 0
    for d in range(size + 1):
        space = degree_piece(model_x, d)
        for j in range(space.dim):
            f = EquivariantClass.from_column(model_x, d, space.matrix[:, j], verify=False)
            try:
                result = localization_pushforward(model_x, f)
            except ValueError:
                loc_ok = False
                break
            deg = None if mp_is_zero(result) else max(sum(e) for e in result)
            if deg not in (None, d - size):
                loc_ok = False
                break
            loc_classes += 1
            if d <= 2:  # equivariance sampled on the low-degree pieces
                if all(localization_equivariance_check(model_x, f, s) for s in gens):
                    equiv_classes += 1
                else:
                    loc_ok = False
                    break
        if not loc_ok:
            break
    record(
        "localization-integrality-and-equivariance",
        loc_ok,
        f"integral on {loc_classes} basis classes, equivariant on {equiv_classes}",
    )

    return {
        "h": list(h.values),
        "n": n,
        "edge_count": size,
        "betti_numbers": betti,
        "max_degree": max_d,
        "degree_dimensions": dims_x,
        "quotient_characters": {
            "dot_t_quotient": q_t.to_json_obj(),
            "dot_x_quotient": q_x.to_json_obj(),
            "dagger_t_quotient": q_y.to_json_obj(),
        },
        "checks": checks,
        "all_passed": all(c["passed"] for c in checks),
    }
