"""Binary linear codes: construction, parameters and exhaustive distance."""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction
from functools import cached_property

import numpy as np

from .errors import ParseError, ValidationError
from .gf2 import (
    BitMatrix,
    BitVector,
    format_matrix,
    kernel_matrix,
    mat_vec,
    rank,
    read_matrix,
    row_space_basis,
    spans_equal,
)

DEFAULT_DIM_CAP = 26
RANDOM_CODE_RETRIES = 1000
# message bits enumerated as one vectorized table; the rest are walked
_TABLE_BITS = 16


class LinearCode:
    """A subspace of F_2^length given by a parity-check and/or generator matrix.

    Whichever matrix was not supplied is derived on first use.  A parity-check
    matrix is kept exactly as given (redundant rows allowed); a generator is
    always reduced to a basis.
    """

    def __init__(self, length: int, parity_check: BitMatrix | None = None, generator: BitMatrix | None = None):
        if parity_check is None and generator is None:
            raise ValueError("need a parity-check or a generator matrix")
        if parity_check is not None and parity_check.cols != length:
            raise ValidationError(f"parity-check has {parity_check.cols} columns, code length is {length}")
        if generator is not None and generator.cols != length:
            raise ValidationError(f"generator has {generator.cols} columns, code length is {length}")
        self.length = length
        self._H = parity_check
        self._G = generator

    @classmethod
    def from_parity_check(cls, H: BitMatrix) -> LinearCode:
        return cls(H.cols, parity_check=H)

    @classmethod
    def from_generator(cls, G: BitMatrix) -> LinearCode:
        basis = row_space_basis(G)
        return cls(G.cols, generator=BitMatrix.from_rows(basis, G.cols))

    @cached_property
    def parity_check(self) -> BitMatrix:
        if self._H is not None:
            return self._H
        return kernel_matrix(self._G)

    @cached_property
    def generator(self) -> BitMatrix:
        if self._G is not None:
            return self._G
        return kernel_matrix(self._H)

    @cached_property
    def dimension(self) -> int:
        if self._G is not None:
            return self._G.rows
        return self.length - rank(self._H)

    def __len__(self) -> int:
        return self.length

    def __eq__(self, other) -> bool:
        if not isinstance(other, LinearCode):
            return NotImplemented
        return self.length == other.length and spans_equal(
            self.generator.row_vectors(), other.generator.row_vectors(), self.length
        )

    __hash__ = None

    def __repr__(self) -> str:
        return f"LinearCode(N={self.length}, k={self.dimension})"

    def is_codeword(self, v: BitVector) -> bool:
        return mat_vec(self.parity_check, v).is_zero()

    def codewords(self):
        """Yield every codeword (2^dim of them) in Gray-code order."""
        G = self.generator
        word = BitVector(self.length)
        yield word
        for i in range(1, 1 << G.rows):
            word = word ^ G.row((i & -i).bit_length() - 1)
            yield word


def from_parity_check(H: BitMatrix) -> LinearCode:
    return LinearCode.from_parity_check(H)


def from_generator(G: BitMatrix) -> LinearCode:
    return LinearCode.from_generator(G)


def rate(C: LinearCode) -> Fraction:
    if C.length == 0:
        raise ValueError("rate undefined for a length-0 code")
    return Fraction(C.dimension, C.length)


def is_codeword(C: LinearCode, v: BitVector) -> bool:
    return C.is_codeword(v)


# -- minimum distance ----------------------------------------------------


def _gray_table(gens: np.ndarray) -> np.ndarray:
    """All combinations of ``gens`` rows, in reflected Gray-code order."""
    table = np.zeros((1, gens.shape[1]), dtype=np.uint64)
    for g in gens:
        table = np.concatenate([table, table[::-1] ^ g])
    return table


def _gray(i: int) -> int:
    return i ^ (i >> 1)


def _walk_chunk(table: np.ndarray, high: np.ndarray, start: int, stop: int) -> int:
    """Min weight over high-message Gray indices [start, stop), zero word excluded."""
    g = _gray(start)
    current = np.zeros(table.shape[1], dtype=np.uint64)
    for j in range(high.shape[0]):
        if (g >> j) & 1:
            current ^= high[j]
    best = table.shape[1] * 64 + 1
    for i in range(start, stop):
        if i > start:
            current = current ^ high[(i & -i).bit_length() - 1]
        weights = np.bitwise_count(table ^ current).sum(axis=1, dtype=np.int64)
        if i == 0:
            weights = weights[1:]
        if weights.size:
            best = min(best, int(weights.min()))
    return best


def min_distance_bruteforce(C: LinearCode, dim_cap: int = DEFAULT_DIM_CAP, workers: int = 1) -> int:
    """Exact minimum weight of a nonzero codeword by exhaustive enumeration.

    The message space is walked in Gray-code order so each step costs one XOR.
    Low message bits are expanded into a table and scanned in bulk; with
    ``workers > 1`` the high-bit range is split by prefix across threads.
    The result does not depend on ``workers``.
    """
    k = C.dimension
    if k == 0:
        raise ValueError("minimum distance of the zero code is undefined")
    if k > dim_cap:
        raise ValueError(f"code dimension {k} exceeds brute-force cap {dim_cap}")
    gens = C.generator.words
    lo = min(k, _TABLE_BITS)
    table = _gray_table(gens[:lo])
    high = gens[lo:]
    n_high = 1 << high.shape[0]
    workers = max(1, min(workers, n_high))
    bounds = [n_high * w // workers for w in range(workers + 1)]
    chunks = [(bounds[w], bounds[w + 1]) for w in range(workers) if bounds[w] < bounds[w + 1]]
    if len(chunks) == 1:
        return _walk_chunk(table, high, *chunks[0])
    with ThreadPoolExecutor(max_workers=len(chunks)) as pool:
        return min(pool.map(lambda c: _walk_chunk(table, high, *c), chunks))


def min_distance(C: LinearCode, dim_cap: int = DEFAULT_DIM_CAP) -> int:
    return min_distance_bruteforce(C, dim_cap)


def relative_distance(C: LinearCode, dim_cap: int = DEFAULT_DIM_CAP) -> Fraction:
    return Fraction(min_distance_bruteforce(C, dim_cap), C.length)


# -- named codes -----------------------------------------------------------


def full(n: int) -> LinearCode:
    return LinearCode.from_parity_check(BitMatrix(0, n))


def zero(n: int) -> LinearCode:
    return LinearCode.from_parity_check(BitMatrix.identity(n))


def parity(n: int) -> LinearCode:
    """Even-weight code: a single all-ones check."""
    return LinearCode.from_parity_check(BitMatrix.ones(1, n))


def repetition(n: int) -> LinearCode:
    return LinearCode.from_generator(BitMatrix.ones(1, n))


def hamming_7_4() -> LinearCode:
    """[7,4,3] Hamming code; column j of the check matrix is j+1 in binary."""
    H = [[((j + 1) >> b) & 1 for j in range(7)] for b in range(3)]
    return LinearCode.from_parity_check(BitMatrix.from_array(H))


def random_code(n: int, k: int, seed: int) -> LinearCode:
    """Code spanned by k uniformly random rows, redrawn until they are independent."""
    if not 0 <= k <= n:
        raise ValueError(f"need 0 <= k <= n, got k={k}, n={n}")
    if k == 0:
        return zero(n)
    rng = np.random.default_rng(seed)
    for _ in range(RANDOM_CODE_RETRIES):
        G = BitMatrix.random(k, n, rng)
        if rank(G) == k:
            return LinearCode(n, generator=G)
    raise RuntimeError(f"no full-rank {k}x{n} generator after {RANDOM_CODE_RETRIES} draws")


_NAMED = {
    "full": full,
    "zero": zero,
    "parity": parity,
    "repetition": repetition,
    "hamming_7_4": hamming_7_4,
    "random": random_code,
}


def named_code(name: str, *params: int, **kwargs) -> LinearCode:
    """Look up a constructor by name: full, zero, parity, repetition, hamming_7_4, random."""
    try:
        factory = _NAMED[name]
    except KeyError:
        raise ValueError(f"unknown code {name!r}; choose from {sorted(_NAMED)}") from None
    return factory(*params, **kwargs)


# -- serialization ---------------------------------------------------------


def format_code(C: LinearCode, kind: str = "parity") -> str:
    if kind == "parity":
        return "parity\n" + format_matrix(C.parity_check)
    if kind == "generator":
        return "generator\n" + format_matrix(C.generator)
    raise ValueError(f"kind must be 'parity' or 'generator', got {kind!r}")


def parse_code(text: str) -> LinearCode:
    lines = text.splitlines()
    while lines and not lines[-1].strip():
        lines.pop()
    if not lines:
        raise ParseError("empty code file", 1)
    kind = lines[0].strip()
    if kind not in ("parity", "generator"):
        raise ParseError(f"expected 'parity' or 'generator', got {kind!r}", 1)
    M, end = read_matrix(lines, 1)
    if end != len(lines):
        raise ParseError("trailing content after matrix", end + 1)
    return LinearCode.from_parity_check(M) if kind == "parity" else LinearCode.from_generator(M)
