"""Tanner graph codes and their realization as first twisted homology.

Given a graph G and a parity-check matrix A_u for a local code at every vertex,
the graph code is the set of edge labelings whose restriction to the edges at
each vertex u lies in ker A_u.  Column j of A_u is indexed by the j-th
neighbor of u in ascending order; call it w_uv.

The companion local system puts F_2 on every edge and the column space L_u of
A_u on every vertex, with the edge-to-vertex restriction sending 1 to w_uv.
Its first homology, computed as the kernel of the twisted boundary matrix, is
compared against the graph code under the same edge coordinates.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Sequence

import numpy as np

from . import codes as _codes
from . import graphs as _graphs
from .codes import DEFAULT_DIM_CAP, LinearCode, min_distance_bruteforce
from .errors import ParseError, ValidationError
from .gf2 import (
    BitMatrix,
    BitVector,
    IncrementalSpan,
    column_space_basis,
    coordinates,
    format_matrix,
    kernel_basis,
    mat_vec,
    read_matrix,
    row_reduce,
    vstack,
)
from .graphs import Graph
from .homology import LocalSystem, SimplicialComplex, boundary_matrix, graph_complex, homology

EIGEN_TOL = 1e-9
_EXACT_EIGEN_MAX_N = 200


@dataclass(frozen=True)
class LocalCodeAssignment:
    """Parity-check matrix A_u for every vertex u of ``graph``.

    ``parity_checks[u]`` has deg(u) columns, column j belonging to the j-th
    smallest neighbor of u.
    """

    graph: Graph
    parity_checks: tuple[BitMatrix, ...]

    def __post_init__(self):
        G = self.graph
        if len(self.parity_checks) != G.n:
            raise ValidationError(f"assignment covers {len(self.parity_checks)} vertices, graph has {G.n}")
        for u, A in enumerate(self.parity_checks):
            if A.cols != G.degree(u):
                raise ValidationError(f"vertex {u}: local parity check has {A.cols} columns but degree is {G.degree(u)}")

    def code(self, u: int) -> LinearCode:
        return LinearCode.from_parity_check(self.parity_checks[u])

    def column(self, u: int, v: int) -> BitVector:
        """w_uv: the column of A_u belonging to neighbor v."""
        j = self.graph.neighbors(u).index(v)
        return self.parity_checks[u].column(j)


def _local_parity(kind: str, deg: int, u: int, seed: int) -> BitMatrix:
    if kind == "parity":
        return BitMatrix.ones(1, deg)
    if kind == "full":
        return BitMatrix(0, deg)
    if kind == "zero":
        return BitMatrix.identity(deg)
    if kind in ("hamming74", "hamming_7_4"):
        if deg != 7:
            raise ValidationError(f"vertex {u}: Hamming(7,4) needs degree 7, got {deg}")
        return _codes.hamming_7_4().parity_check
    if kind.startswith("random:"):
        try:
            k = int(kind.split(":", 1)[1])
        except ValueError:
            raise ValidationError(f"bad local code spec {kind!r}") from None
        if not 0 <= k <= deg:
            raise ValidationError(f"vertex {u}: random:{k} needs 0 <= k <= degree {deg}")
        return _codes.random_code(deg, k, seed=[seed, u]).parity_check
    raise ValidationError(f"unknown local code {kind!r}; use parity, full, zero, hamming74 or random:<k>")


def uniform_assignment(G: Graph, kind: str, seed: int = 0) -> LocalCodeAssignment:
    """Same kind of local code at every vertex: parity, full, zero, hamming74, random:<k>.

    ``random:<k>`` draws an independent k-dimensional code per vertex from ``seed``.
    """
    return LocalCodeAssignment(G, tuple(_local_parity(kind, G.degree(u), u, seed) for u in range(G.n)))


def with_redundant_rows(assignment: LocalCodeAssignment, seed: int) -> LocalCodeAssignment:
    """Append random combinations of existing rows to every A_u; the codes are unchanged."""
    rng = np.random.default_rng(seed)
    out = []
    for A in assignment.parity_checks:
        if A.rows == 0:
            out.append(A)
            continue
        extra = BitMatrix.random(int(rng.integers(1, 3)), A.rows, rng) @ A
        out.append(vstack([A, extra]))
    return LocalCodeAssignment(assignment.graph, tuple(out))


# -- the graph code ------------------------------------------------------------


def stacked_parity_check(assignment: LocalCodeAssignment) -> BitMatrix:
    """Global check matrix: block row u places column w_uv at edge coordinate uv."""
    G = assignment.graph
    blocks = []
    for u in range(G.n):
        A = assignment.parity_checks[u].to_array()
        block = np.zeros((A.shape[0], G.m), dtype=np.uint8)
        for j, v in enumerate(G.neighbors(u)):
            block[:, G.edge_index(u, v)] = A[:, j]
        blocks.append(BitMatrix.from_array(block, cols=G.m) if A.shape[0] else BitMatrix(0, G.m))
    return vstack(blocks, cols=G.m)


@dataclass
class GraphCodeInstance:
    graph: Graph
    assignment: LocalCodeAssignment
    parity_check: BitMatrix
    code: LinearCode

    @property
    def edges(self) -> tuple[tuple[int, int], ...]:
        return self.graph.edges

    def restriction(self, x: BitVector, u: int) -> BitVector:
        """(x_uv : v a neighbor of u), in ascending neighbor order."""
        G = self.graph
        return BitVector.from_bits([x[G.edge_index(u, v)] for v in G.neighbors(u)])

    def satisfies_local_codes(self, x: BitVector) -> bool:
        """Membership straight from the definition: every restriction is a local codeword."""
        return all(
            mat_vec(self.assignment.parity_checks[u], self.restriction(x, u)).is_zero() for u in range(self.graph.n)
        )

    @cached_property
    def vertex_bases(self) -> tuple[tuple[BitVector, ...], ...]:
        """Fixed basis of L_u (the pivot columns of A_u) for each vertex."""
        return tuple(tuple(column_space_basis(A)) for A in self.assignment.parity_checks)

    @cached_property
    def local_system(self) -> LocalSystem:
        return build_local_system(self.graph, self.assignment)

    @cached_property
    def complex(self) -> SimplicialComplex:
        return self.local_system.complex


def build_graph_code(G: Graph, assignment: LocalCodeAssignment) -> GraphCodeInstance:
    if assignment.graph != G:
        raise ValidationError("assignment was built for a different graph")
    H = stacked_parity_check(assignment)
    return GraphCodeInstance(G, assignment, H, LinearCode.from_parity_check(H))


def build_local_system(G: Graph, assignment: LocalCodeAssignment) -> LocalSystem:
    """F(u) = L_u, F(uv) = F_2, and restriction from uv to u sending 1 to w_uv.

    L_u is coordinatized by the pivot columns of A_u.  In that basis the
    coordinates of column j of A_u are column j of the nonzero rows of
    RREF(A_u), which gives every restriction map at u in one elimination.
    """
    X = graph_complex(G)
    dims: dict[tuple[int, ...], int] = {}
    coords = []
    for u in range(G.n):
        R, pivots = row_reduce(assignment.parity_checks[u])
        dims[(u,)] = len(pivots)
        coords.append(R.to_array()[: len(pivots)])
    maps = {}
    for u, v in G.edges:
        dims[(u, v)] = 1
        for a, b in ((u, v), (v, u)):
            j = G.neighbors(a).index(b)
            maps[((a,), (u, v))] = BitMatrix.from_array(coords[a][:, j : j + 1], cols=1) if dims[(a,)] else BitMatrix(0, 1)
    return LocalSystem(X, dims, maps)


def boundary_evaluate(instance: GraphCodeInstance, x: BitVector) -> list[BitVector]:
    """Per-vertex sums of x_uv w_uv over neighbors v, in the basis of L_u.

    All blocks vanish exactly when x is in the graph code.
    """
    G = instance.graph
    if x.length != G.m:
        raise ValidationError(f"edge vector has length {x.length}, graph has {G.m} edges")
    out = []
    for u in range(G.n):
        syndrome = mat_vec(instance.assignment.parity_checks[u], instance.restriction(x, u))
        c = coordinates(instance.vertex_bases[u], syndrome)
        if c is None:
            raise AssertionError(f"syndrome at vertex {u} left the column space")
        out.append(c)
    return out


def twisted_boundary(instance: GraphCodeInstance) -> BitMatrix:
    """Boundary matrix C_1 -> C_0 of the instance's local system."""
    return boundary_matrix(instance.complex, instance.local_system, 1)


@dataclass(frozen=True)
class PropositionVerdict:
    holds: bool
    code_dimension: int
    homology_dimension: int
    witness: BitVector | None = None
    reason: str | None = None

    def __bool__(self) -> bool:
        return self.holds


def verify_proposition(instance: GraphCodeInstance) -> PropositionVerdict:
    """Compare the graph code with H_1 of the local system as subspaces of F_2^E.

    Holds iff the dimensions agree and each basis lies in the span of the other.
    A vector from one side missing from the other is returned as witness.
    """
    m = instance.graph.m
    code_basis = kernel_basis(instance.parity_check)
    h1 = homology(instance.complex, instance.local_system, 1)
    cd, hd = len(code_basis), h1.dimension
    h_span = IncrementalSpan(m, h1.basis)
    for z in code_basis:
        if z not in h_span:
            return PropositionVerdict(False, cd, hd, z, "graph codeword is not a twisted cycle")
    code_span = IncrementalSpan(m, code_basis)
    for z in h1.basis:
        if z not in code_span:
            return PropositionVerdict(False, cd, hd, z, "twisted cycle is not a graph codeword")
    if cd != hd:
        return PropositionVerdict(False, cd, hd, None, "dimensions differ")
    return PropositionVerdict(True, cd, hd)


# -- Sipser-Spielman bounds ------------------------------------------------------


def rate_bound(r: Fraction) -> Fraction:
    """Lower bound 2r - 1 on the rate of the graph code."""
    return 2 * Fraction(r) - 1


def distance_bound(delta, lam, d: int):
    """((delta - lam/d) / (1 - lam/d))^2, the relative-distance lower bound.

    Exact ``Fraction`` when ``delta`` and ``lam`` are rational (ints or
    Fractions); otherwise a float.
    """
    if d < 1:
        raise ValueError("degree must be at least 1")
    if lam >= d:
        raise ValueError(f"need lambda < d, got lambda={lam}, d={d}")
    if isinstance(lam, (int, Fraction)) and isinstance(delta, (int, Fraction)):
        ratio = Fraction(lam) / d
        return ((Fraction(delta) - ratio) / (1 - ratio)) ** 2
    ratio = float(lam) / d
    return ((float(delta) - ratio) / (1.0 - ratio)) ** 2


def _exact_rank_deficient(M: list[list[int]]) -> bool:
    """True iff the integer matrix is singular (fraction-free elimination)."""
    A = [row[:] for row in M]
    n = len(A)
    prev = 1
    for k in range(n):
        p = next((i for i in range(k, n) if A[i][k] != 0), None)
        if p is None:
            return True
        A[k], A[p] = A[p], A[k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                A[i][j] = (A[i][j] * A[k][k] - A[i][k] * A[k][j]) // prev
            A[i][k] = 0
        prev = A[k][k]
    return False


def exact_second_eigenvalue(G: Graph, value: float, tol: float = EIGEN_TOL) -> int | None:
    """``value`` as an exact integer when it is one.

    An eigenvalue of an integer symmetric matrix is rational only if it is an
    integer; the candidate is accepted when it is within ``tol`` of ``value``
    and A - t I is exactly singular.
    """
    t = round(value)
    if abs(value - t) > tol or G.n > _EXACT_EIGEN_MAX_N:
        return None
    A = [[int(x) for x in row] for row in G.adjacency_matrix()]
    for i in range(G.n):
        A[i][i] -= t
    return int(t) if _exact_rank_deficient(A) else None


# -- reporting ----------------------------------------------------------------------


def _rat(q: Fraction | None) -> str | None:
    return None if q is None else f"{q.numerator}/{q.denominator}"


def _num(x):
    if x is None:
        return None
    if isinstance(x, Fraction):
        return _rat(x)
    if isinstance(x, float):
        return round(x, 12) + 0.0
    return x


def _local_parameters(assignment: LocalCodeAssignment, dim_cap: int) -> tuple[Fraction, Fraction | None]:
    """Minimum local rate and minimum local relative distance (None if some local code is zero)."""
    cache: dict[BitMatrix, tuple[Fraction, Fraction | None]] = {}
    rates, deltas = [], []
    for A in assignment.parity_checks:
        if A not in cache:
            C = LinearCode.from_parity_check(A)
            r = _codes.rate(C) if C.length else Fraction(0)
            delta = _codes.relative_distance(C, dim_cap) if C.dimension and C.dimension <= dim_cap else None
            cache[A] = (r, delta)
        r, delta = cache[A]
        rates.append(r)
        deltas.append(delta)
    min_delta = None if any(x is None for x in deltas) else min(deltas, default=None)
    return min(rates, default=Fraction(0)), min_delta


def report(instance: GraphCodeInstance, max_bruteforce_dim: int = DEFAULT_DIM_CAP) -> dict:
    """Parameter report; keys are in a fixed order and rationals are "p/q" strings."""
    G = instance.graph
    N = G.m
    k = instance.code.dimension
    d = _graphs.is_regular(G)
    notes = []
    out: dict = {
        "vertices": G.n,
        "N": N,
        "dimension": k,
        "rate": _rat(Fraction(k, N)) if N else None,
        "degree": d,
    }
    r, delta = _local_parameters(instance.assignment, max_bruteforce_dim)
    out["min_local_rate"] = _rat(r)
    out["min_local_relative_distance"] = _rat(delta)
    if delta is None:
        notes.append("some local code is zero or too large to brute-force; local distance undefined")

    lam = lam_abs = exact_lam = None
    if G.n >= 2:
        lam = _graphs.second_eigenvalue(G)
        lam_abs = _graphs.second_eigenvalue_abs(G)
        exact_lam = exact_second_eigenvalue(G, lam)
    out["lambda2"] = _num(lam)
    out["lambda2_exact"] = exact_lam
    out["lambda2_abs"] = _num(lam_abs)

    rb = db = None
    rb_holds = db_holds = None
    hyp = {"regular": d is not None, "rate_above_half": r > Fraction(1, 2), "delta_at_least_lambda_ratio": None}
    if d is None:
        out["bounds_omitted_reason"] = "graph is not regular"
    elif lam is None or d == 0:
        out["bounds_omitted_reason"] = "graph too small for a spectral bound"
    else:
        rb = rate_bound(r)
        rb_holds = k >= math.ceil(N * rb)
        lam_used = Fraction(exact_lam) if exact_lam is not None else lam
        if lam_used >= d - EIGEN_TOL:
            out["bounds_omitted_reason"] = "lambda2 equals the degree (graph is disconnected)"
        elif delta is None:
            out["bounds_omitted_reason"] = "local relative distance undefined"
        else:
            db = distance_bound(delta, lam_used, d)
            hyp["delta_at_least_lambda_ratio"] = bool(delta >= lam_used / d)
    out["rate_bound"] = _rat(rb)
    out["rate_bound_holds"] = rb_holds
    out["distance_bound"] = _num(db)

    dist = None
    if 0 < k <= max_bruteforce_dim:
        dist = min_distance_bruteforce(instance.code, max_bruteforce_dim)
    elif k > max_bruteforce_dim:
        notes.append(f"code dimension {k} exceeds brute-force cap {max_bruteforce_dim}; distance not computed")
    else:
        notes.append("graph code is zero; distance undefined")
    out["distance"] = dist
    out["relative_distance"] = _rat(Fraction(dist, N)) if dist is not None else None
    if dist is not None and db is not None:
        rel = Fraction(dist, N)
        db_holds = rel >= db if isinstance(db, Fraction) else float(rel) >= db - EIGEN_TOL
    out["distance_bound_holds"] = db_holds
    out["hypotheses"] = hyp

    verdict = verify_proposition(instance)
    out["proposition"] = {
        "holds": verdict.holds,
        "code_dimension": verdict.code_dimension,
        "homology_dimension": verdict.homology_dimension,
    }
    out["notes"] = notes
    return out


def report_json(instance: GraphCodeInstance, max_bruteforce_dim: int = DEFAULT_DIM_CAP) -> str:
    return json.dumps(report(instance, max_bruteforce_dim), indent=2) + "\n"


# -- instance generators -------------------------------------------------------------


def random_instance(seed: int, degrees: Sequence[int] = (3, 4, 5, 6, 7), sizes: Sequence[int] = range(8, 17)) -> GraphCodeInstance:
    """Random d-regular graph with mixed local codes at its vertices.

    Each vertex gets, uniformly: the parity code, a random code of dimension
    above deg/2, or (for degree 7) the Hamming code.
    """
    rng = np.random.default_rng(seed)
    d = int(rng.choice(list(degrees)))
    options = [n for n in sizes if n > d and (n * d) % 2 == 0]
    n = int(rng.choice(options))
    G = _graphs.random_regular(n, d, int(rng.integers(2**32)))
    kinds = ["parity", "random"] + (["hamming74"] if d == 7 else [])
    checks = []
    for u in range(n):
        kind = kinds[int(rng.integers(len(kinds)))]
        if kind == "random":
            k = int(rng.integers(d // 2 + 1, d + 1))
            kind = f"random:{k}"
        checks.append(_local_parity(kind, d, u, int(rng.integers(2**32))))
    assignment = LocalCodeAssignment(G, tuple(checks))
    return build_graph_code(G, assignment)


# -- assignment files ------------------------------------------------------------------


def format_assignment(assignment: LocalCodeAssignment) -> str:
    lines = []
    for u, A in enumerate(assignment.parity_checks):
        body = format_matrix(A).splitlines()
        lines.append(f"v {u} {body[0]}")
        lines.extend(body[1:])
    return "\n".join(lines) + "\n"


def parse_assignment(text: str, G: Graph) -> LocalCodeAssignment:
    """Read ``v <u> <rows> <cols>`` records, each followed by its matrix rows."""
    lines = text.splitlines()
    checks: dict[int, BitMatrix] = {}
    i = 0
    while i < len(lines):
        ln = lines[i].strip()
        if not ln:
            i += 1
            continue
        parts = ln.split()
        if len(parts) != 4 or parts[0] != "v" or not all(p.isdigit() for p in parts[1:]):
            raise ParseError(f"expected 'v <u> <rows> <cols>', got {ln!r}", i + 1)
        u = int(parts[1])
        if u in checks:
            raise ParseError(f"vertex {u} given twice", i + 1)
        header = [f"{parts[2]} {parts[3]}"] + lines[i + 1 :]
        A, end = read_matrix(header, 0, first_line_no=i + 1)
        checks[u] = A
        i = i + end
    missing = [u for u in range(G.n) if u not in checks]
    if missing:
        raise ValidationError(f"no local code for vertex {missing[0]}")
    extra = [u for u in checks if u >= G.n]
    if extra:
        raise ValidationError(f"local code for vertex {extra[0]}, graph has {G.n} vertices")
    return LocalCodeAssignment(G, tuple(checks[u] for u in range(G.n)))
