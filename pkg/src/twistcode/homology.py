"""Simplicial complexes, local systems of F_2 vector spaces, and twisted homology.

A simplex is a strictly increasing vertex tuple.  Its i-th face drops the i-th
vertex.  Within each dimension simplices are kept in lexicographic order, and
a k-chain is the concatenation of the coefficient blocks of the k-simplices in
that order.

Over F_2 the sign (-1)^i of the i-th face is 1, so boundary matrices carry no
signs: the block at (face, simplex) is simply the restriction map.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb
from typing import Iterable, Mapping, Sequence

import numpy as np

from .codes import LinearCode
from .errors import LocalSystemShapeError, ParseError, ValidationError
from .gf2 import (
    BitMatrix,
    BitVector,
    IncrementalSpan,
    column_space_basis,
    format_matrix,
    inverse,
    kernel_basis,
    rank,
    read_matrix,
)

Simplex = tuple[int, ...]

SKELETON_CAP = 10**6


def faces(sigma: Simplex) -> list[Simplex]:
    """Codimension-1 faces, the i-th one omitting sigma[i]."""
    return [sigma[:i] + sigma[i + 1 :] for i in range(len(sigma))]


class SimplicialComplex:
    """Downward-closed family of simplices on vertices 0..vertex_count-1.

    Every vertex is a 0-simplex, isolated or not.  The constructor takes any
    generating family and adds all faces.
    """

    def __init__(self, vertex_count: int, simplices: Iterable[Iterable[int]] = ()):
        closed: set[Simplex] = {(v,) for v in range(vertex_count)}
        for s in simplices:
            s = tuple(sorted(int(v) for v in s))
            if not s:
                continue
            if len(set(s)) != len(s):
                raise ValidationError(f"repeated vertex in simplex {s}")
            if s[0] < 0 or s[-1] >= vertex_count:
                raise ValidationError(f"simplex {s} uses a vertex outside 0..{vertex_count - 1}")
            if s in closed:
                continue
            for k in range(1, len(s) + 1):
                closed.update(combinations(s, k))
        by_dim: dict[int, list[Simplex]] = {}
        for s in closed:
            by_dim.setdefault(len(s) - 1, []).append(s)
        self.vertex_count = vertex_count
        self._by_dim = {k: tuple(sorted(v)) for k, v in by_dim.items()}
        self._index = {k: {s: i for i, s in enumerate(v)} for k, v in self._by_dim.items()}

    @property
    def dimension(self) -> int:
        return max(self._by_dim, default=-1)

    def simplices(self, k: int) -> tuple[Simplex, ...]:
        return self._by_dim.get(k, ())

    def f(self, k: int) -> int:
        return len(self.simplices(k))

    def f_vector(self) -> list[int]:
        return [self.f(k) for k in range(self.dimension + 1)]

    def index(self, sigma: Simplex) -> int:
        return self._index[len(sigma) - 1][sigma]

    def __contains__(self, sigma) -> bool:
        sigma = tuple(sigma)
        return sigma in self._index.get(len(sigma) - 1, {})

    def all_simplices(self) -> list[Simplex]:
        return [s for k in range(self.dimension + 1) for s in self.simplices(k)]

    def incidences(self) -> list[tuple[Simplex, Simplex]]:
        """All codimension-1 pairs (face, simplex)."""
        return [(face, s) for k in range(1, self.dimension + 1) for s in self.simplices(k) for face in faces(s)]

    def euler_characteristic(self) -> int:
        return sum((-1) ** k * self.f(k) for k in range(self.dimension + 1))

    def __eq__(self, other) -> bool:
        if not isinstance(other, SimplicialComplex):
            return NotImplemented
        return self.vertex_count == other.vertex_count and self._by_dim == other._by_dim

    def __repr__(self) -> str:
        return f"SimplicialComplex(f={self.f_vector()})"


def graph_complex(G) -> SimplicialComplex:
    """A graph as a 1-dimensional complex."""
    return SimplicialComplex(G.n, G.edges)


def skeleton_complex(N: int, n: int) -> SimplicialComplex:
    """All subsets of {0..N-1} with at most n+1 elements."""
    if not 0 <= n < N:
        raise ValidationError(f"need 0 <= n < N, got N={N}, n={n}")
    total = sum(comb(N, k + 1) for k in range(n + 1))
    if total > SKELETON_CAP:
        raise ValidationError(f"skeleton would have {total} simplices (cap {SKELETON_CAP})")
    return SimplicialComplex(N, combinations(range(N), n + 1))


def random_complex(vertex_count: int, n_triangles: int, n_edges: int, seed: int) -> SimplicialComplex:
    """Closure of random triangles plus random extra edges (test-instance generator)."""
    rng = np.random.default_rng(seed)
    gens = []
    for _ in range(n_triangles):
        gens.append(tuple(rng.choice(vertex_count, size=3, replace=False).tolist()))
    for _ in range(n_edges):
        gens.append(tuple(rng.choice(vertex_count, size=2, replace=False).tolist()))
    return SimplicialComplex(vertex_count, gens)


# -- local systems -----------------------------------------------------------


class LocalSystem:
    """F_2 vector spaces on simplices with codimension-1 restriction maps.

    ``dims[sigma]`` is dim F(sigma); ``maps[(face, sigma)]`` is the restriction
    F(sigma) -> F(face) as a dim F(face) x dim F(sigma) matrix.  Longer
    restrictions are composites along any chain of faces.
    """

    def __init__(self, complex: SimplicialComplex, dims: Mapping[Simplex, int], maps: Mapping[tuple[Simplex, Simplex], BitMatrix]):
        self.complex = complex
        self.dims = dict(dims)
        self.maps = dict(maps)

    def dim(self, sigma: Simplex) -> int:
        return self.dims[sigma]

    def restriction(self, face: Simplex, sigma: Simplex) -> BitMatrix:
        if face == sigma:
            return BitMatrix.identity(self.dims[sigma])
        if len(face) == len(sigma) - 1:
            return self.maps[(face, sigma)]
        drop = next(v for v in sigma if v not in face)
        mid = tuple(v for v in sigma if v != drop)
        return self.restriction(face, mid) @ self.maps[(mid, sigma)]

    def chain_dimension(self, k: int) -> int:
        return sum(self.dims[s] for s in self.complex.simplices(k))

    def offsets(self, k: int) -> dict[Simplex, int]:
        out, pos = {}, 0
        for s in self.complex.simplices(k):
            out[s] = pos
            pos += self.dims[s]
        return out


@dataclass(frozen=True)
class TwistedChain:
    """A k-chain: per-simplex coefficients concatenated in canonical order."""

    k: int
    vector: BitVector

    @classmethod
    def from_blocks(cls, F: LocalSystem, k: int, blocks: Mapping[Simplex, BitVector]) -> TwistedChain:
        bits = np.zeros(F.chain_dimension(k), dtype=np.uint8)
        offsets = F.offsets(k)
        for s, a in blocks.items():
            if a.length != F.dims[s]:
                raise ValidationError(f"coefficient on {s} has length {a.length}, F has dim {F.dims[s]}")
            bits[offsets[s] : offsets[s] + a.length] = a.bits()
        return cls(k, BitVector.from_bits(bits))

    def blocks(self, F: LocalSystem) -> dict[Simplex, BitVector]:
        if self.vector.length != F.chain_dimension(self.k):
            raise ValidationError("chain length does not match the local system")
        bits = self.vector.bits()
        return {s: BitVector.from_bits(bits[o : o + F.dims[s]]) for s, o in F.offsets(self.k).items()}


def constant_local_system(X: SimplicialComplex, m: int = 1) -> LocalSystem:
    I = BitMatrix.identity(m)
    return LocalSystem(X, {s: m for s in X.all_simplices()}, {inc: I for inc in X.incidences()})


def _random_invertible(m: int, rng: np.random.Generator) -> BitMatrix:
    while True:
        g = BitMatrix.random(m, m, rng)
        if rank(g) == m:
            return g


def gauge_local_system(X: SimplicialComplex, m: int, seed: int) -> LocalSystem:
    """Constant F_2^m system twisted by a random basis change g_sigma per simplex.

    Restrictions are g_face^-1 g_sigma, so every composite from sigma down to
    eta equals g_eta^-1 g_sigma and compatibility holds automatically.
    """
    if m < 1:
        raise ValidationError("gauge fibre dimension must be at least 1")
    rng = np.random.default_rng(seed)
    g = {s: _random_invertible(m, rng) for s in X.all_simplices()}
    ginv = {s: inverse(M) for s, M in g.items()}
    maps = {(face, s): ginv[face] @ g[s] for face, s in X.incidences()}
    return LocalSystem(X, {s: m for s in g}, maps)


@dataclass(frozen=True)
class SystemCheck:
    valid: bool
    violation: str | None = None

    def __bool__(self) -> bool:
        return self.valid


def check_shapes(X: SimplicialComplex, F: LocalSystem) -> None:
    """Raise LocalSystemShapeError unless every dim and incidence map is present and well-shaped."""
    for s in X.all_simplices():
        d = F.dims.get(s)
        if d is None or d < 0:
            raise LocalSystemShapeError(f"no fibre dimension for simplex {s}")
    for face, s in X.incidences():
        M = F.maps.get((face, s))
        if M is None:
            raise LocalSystemShapeError(f"missing restriction map {face} <- {s}")
        if M.shape != (F.dims[face], F.dims[s]):
            raise LocalSystemShapeError(
                f"restriction {face} <- {s} has shape {M.shape}, expected {(F.dims[face], F.dims[s])}"
            )


def validate_local_system(X: SimplicialComplex, F: LocalSystem) -> SystemCheck:
    """Check that the two routes tau -> sigma_a -> eta and tau -> sigma_b -> eta agree.

    Shape problems raise LocalSystemShapeError; a failed commuting square is
    reported in the returned SystemCheck.
    """
    check_shapes(X, F)
    for k in range(2, X.dimension + 1):
        for tau in X.simplices(k):
            for a, b in combinations(range(len(tau)), 2):
                s1 = tau[:a] + tau[a + 1 :]
                s2 = tau[:b] + tau[b + 1 :]
                eta = tuple(v for i, v in enumerate(tau) if i not in (a, b))
                via1 = F.maps[(eta, s1)] @ F.maps[(s1, tau)]
                via2 = F.maps[(eta, s2)] @ F.maps[(s2, tau)]
                if via1 != via2:
                    return SystemCheck(False, f"restrictions {tau} -> {eta} via {s1} and via {s2} differ")
    return SystemCheck(True)


def boundary_matrix(X: SimplicialComplex, F: LocalSystem, k: int) -> BitMatrix:
    """Matrix of the twisted boundary C_k -> C_{k-1}, shape (dim C_{k-1}, dim C_k)."""
    if not 1 <= k <= X.dimension + 1:
        raise ValidationError(f"boundary degree {k} out of range 1..{X.dimension + 1}")
    rows = F.chain_dimension(k - 1)
    cols = F.chain_dimension(k)
    if rows == 0 or cols == 0:
        return BitMatrix(rows, cols)
    row_off = F.offsets(k - 1)
    col_off = F.offsets(k)
    out = np.zeros((rows, cols), dtype=np.uint8)
    for s in X.simplices(k):
        c0, dc = col_off[s], F.dims[s]
        for face in faces(s):
            r0, dr = row_off[face], F.dims[face]
            if dr and dc:
                out[r0 : r0 + dr, c0 : c0 + dc] ^= F.maps[(face, s)].to_array()
    return BitMatrix.from_array(out)


@dataclass(frozen=True)
class Homology:
    k: int
    dimension: int
    basis: tuple[BitVector, ...]
    cycles_dim: int
    boundaries_dim: int


def homology(X: SimplicialComplex, F: LocalSystem, k: int, check: bool = True) -> Homology:
    """dim H_k and representative cycles, one per class of a basis.

    Kernel vectors of the k-th boundary are kept greedily when they are not in
    the span of the image of the (k+1)-th boundary plus those already kept.
    """
    if k < 0:
        raise ValidationError("homology degree must be nonnegative")
    if check:
        verdict = validate_local_system(X, F)
        if not verdict:
            raise ValidationError(f"invalid local system: {verdict.violation}")
    n_k = F.chain_dimension(k)
    if k == 0:
        cycles = [BitVector.unit(n_k, i) for i in range(n_k)]
    else:
        cycles = kernel_basis(boundary_matrix(X, F, k)) if k <= X.dimension else []
    if k + 1 <= X.dimension:
        boundaries = column_space_basis(boundary_matrix(X, F, k + 1))
    else:
        boundaries = []
    span = IncrementalSpan(n_k, boundaries)
    reps = [z for z in cycles if span.add(z)]
    return Homology(k, len(cycles) - len(boundaries), tuple(reps), len(cycles), len(boundaries))


def betti_numbers(X: SimplicialComplex, F: LocalSystem | None = None) -> list[int]:
    F = F or constant_local_system(X)
    return [homology(X, F, k).dimension for k in range(X.dimension + 1)]


def homology_code(X: SimplicialComplex, n: int) -> LinearCode:
    """H_n(X; F_2) of an n-dimensional complex, as a code in F_2^{f_n(X)}.

    In the top dimension there are no boundaries, so the code is the kernel of
    the n-th boundary matrix, which serves directly as its parity check.
    """
    if n > X.dimension:
        raise ValidationError(f"degree {n} exceeds complex dimension {X.dimension}")
    if n != X.dimension:
        raise ValidationError(f"degree {n} is below the top dimension {X.dimension}; only H_top embeds in the chains")
    F = constant_local_system(X)
    if n == 0:
        return LinearCode.from_parity_check(BitMatrix(0, X.f(0)))
    return LinearCode.from_parity_check(boundary_matrix(X, F, n))


# -- text formats --------------------------------------------------------


def format_complex(X: SimplicialComplex) -> str:
    lines = [f"dim {X.dimension}"]
    lines.extend("s " + " ".join(map(str, s)) for s in X.all_simplices())
    return "\n".join(lines) + "\n"


def parse_complex(text: str, vertex_count: int | None = None) -> SimplicialComplex:
    """Read ``dim <k>`` then ``s v0 ... vk`` lines; faces are added automatically."""
    lines = [(i + 1, ln.strip()) for i, ln in enumerate(text.splitlines()) if ln.strip()]
    if not lines or not lines[0][1].startswith("dim"):
        raise ParseError("expected 'dim <k>' header", lines[0][0] if lines else 1)
    no, head = lines[0]
    parts = head.split()
    if len(parts) != 2 or not parts[1].lstrip("-").isdigit():
        raise ParseError(f"bad header {head!r}", no)
    kmax = int(parts[1])
    simplices: list[Simplex] = []
    for no, ln in lines[1:]:
        parts = ln.split()
        if parts[0] != "s" or len(parts) < 2 or not all(p.isdigit() for p in parts[1:]):
            raise ParseError(f"expected 's v0 v1 ...', got {ln!r}", no)
        s = tuple(int(p) for p in parts[1:])
        if len(s) - 1 > kmax:
            raise ParseError(f"simplex {s} exceeds declared dimension {kmax}", no)
        simplices.append(s)
    nv = vertex_count if vertex_count is not None else max((max(s) for s in simplices), default=-1) + 1
    return SimplicialComplex(nv, simplices)


def _simplex_str(s: Simplex) -> str:
    return " ".join(map(str, s))


def format_local_system(F: LocalSystem) -> str:
    """Per-simplex dims as ``d <dim> | <vertices>``, then each map as
    ``r <face vertices> | <simplex vertices>`` followed by a matrix block."""
    X = F.complex
    lines = []
    for s in X.all_simplices():
        lines.append(f"d {F.dims[s]} | {_simplex_str(s)}")
    for face, s in X.incidences():
        lines.append(f"r {_simplex_str(face)} | {_simplex_str(s)}")
        lines.extend(format_matrix(F.maps[(face, s)]).splitlines())
    return "\n".join(lines) + "\n"


def _parse_simplex(text: str, no: int) -> Simplex:
    parts = text.split()
    if not parts or not all(p.isdigit() for p in parts):
        raise ParseError(f"bad simplex {text!r}", no)
    return tuple(int(p) for p in parts)


def parse_local_system(text: str, X: SimplicialComplex) -> LocalSystem:
    lines = text.splitlines()
    dims: dict[Simplex, int] = {}
    maps: dict[tuple[Simplex, Simplex], BitMatrix] = {}
    i = 0
    while i < len(lines):
        ln = lines[i].strip()
        no = i + 1
        if not ln:
            i += 1
            continue
        tag, _, rest = ln.partition(" ")
        if tag == "d":
            left, bar, right = rest.partition("|")
            if not bar or not left.strip().isdigit():
                raise ParseError(f"expected 'd <dim> | <vertices>', got {ln!r}", no)
            dims[_parse_simplex(right, no)] = int(left)
            i += 1
        elif tag == "r":
            left, bar, right = rest.partition("|")
            if not bar:
                raise ParseError(f"expected 'r <face> | <simplex>', got {ln!r}", no)
            key = (_parse_simplex(left, no), _parse_simplex(right, no))
            maps[key], i = read_matrix(lines, i + 1)
        else:
            raise ParseError(f"unknown record {tag!r}", no)
    F = LocalSystem(X, dims, maps)
    check_shapes(X, F)
    return F
