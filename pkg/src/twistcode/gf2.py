"""Dense bit-packed linear algebra over GF(2).

Rows are packed little-endian into 64-bit words: coordinate ``j`` of a row is
bit ``j % 64`` of word ``j // 64``.  Padding bits beyond the logical length are
always zero, so word-level comparisons and popcounts are exact.

Matrices with zero rows or zero columns are legal and represent maps from or
to the zero space.
"""

from __future__ import annotations

from typing import Iterable, Sequence

import numpy as np

from .errors import DimensionMismatch, ParseError

WORD_BITS = 64


def _nwords(n: int) -> int:
    return (n + WORD_BITS - 1) // WORD_BITS


def _pack(bits: np.ndarray, n: int) -> np.ndarray:
    """Pack a (r, n) 0/1 array into a (r, nwords) uint64 array."""
    r = bits.shape[0]
    nw = _nwords(n)
    padded = np.zeros((r, nw * WORD_BITS), dtype=np.uint8)
    padded[:, :n] = bits
    packed = np.packbits(padded, axis=1, bitorder="little")
    return np.ascontiguousarray(packed).view("<u8").astype(np.uint64).reshape(r, nw)


def _unpack(words: np.ndarray, n: int) -> np.ndarray:
    r = words.shape[0]
    if r == 0 or n == 0:
        return np.zeros((r, n), dtype=np.uint8)
    as_bytes = np.ascontiguousarray(words.astype("<u8")).view(np.uint8)
    return np.unpackbits(as_bytes, axis=1, bitorder="little")[:, :n]


def _frozen(a: np.ndarray) -> np.ndarray:
    a.setflags(write=False)
    return a


def _as_bits(data, ndim: int) -> np.ndarray:
    arr = np.asarray(data)
    if arr.dtype == bool:
        arr = arr.astype(np.uint8)
    if arr.ndim != ndim:
        raise DimensionMismatch(f"expected a {ndim}-d array of bits, got shape {arr.shape}")
    if arr.size and ((arr != 0) & (arr != 1)).any():
        raise ValueError("entries must be 0 or 1")
    return arr.astype(np.uint8)


class BitVector:
    """Immutable vector in F_2^length."""

    __slots__ = ("length", "_words")

    def __init__(self, length: int, words: np.ndarray | None = None):
        if length < 0:
            raise ValueError("length must be nonnegative")
        self.length = int(length)
        if words is None:
            words = np.zeros(_nwords(length), dtype=np.uint64)
        elif words.shape != (_nwords(length),):
            raise DimensionMismatch("word array does not match length")
        self._words = _frozen(np.array(words, dtype=np.uint64))

    @classmethod
    def from_bits(cls, bits: Iterable[int]) -> BitVector:
        arr = _as_bits(list(bits) if not isinstance(bits, np.ndarray) else bits, 1)
        return cls(arr.shape[0], _pack(arr[None, :], arr.shape[0])[0])

    @classmethod
    def zeros(cls, length: int) -> BitVector:
        return cls(length)

    @classmethod
    def ones(cls, length: int) -> BitVector:
        return cls.from_bits(np.ones(length, dtype=np.uint8))

    @classmethod
    def unit(cls, length: int, index: int) -> BitVector:
        bits = np.zeros(length, dtype=np.uint8)
        bits[index] = 1
        return cls.from_bits(bits)

    @classmethod
    def from_support(cls, length: int, support: Iterable[int]) -> BitVector:
        bits = np.zeros(length, dtype=np.uint8)
        for i in support:
            bits[i] = 1
        return cls.from_bits(bits)

    @property
    def words(self) -> np.ndarray:
        return self._words

    def bits(self) -> np.ndarray:
        return _unpack(self._words[None, :], self.length)[0]

    def tolist(self) -> list[int]:
        return [int(b) for b in self.bits()]

    def weight(self) -> int:
        return int(np.bitwise_count(self._words).sum())

    def support(self) -> list[int]:
        return [int(i) for i in np.flatnonzero(self.bits())]

    def is_zero(self) -> bool:
        return not self._words.any()

    def __len__(self) -> int:
        return self.length

    def __getitem__(self, i: int) -> int:
        if not 0 <= i < self.length:
            raise IndexError(i)
        return int((self._words[i // WORD_BITS] >> np.uint64(i % WORD_BITS)) & np.uint64(1))

    def __iter__(self):
        return iter(self.tolist())

    def __xor__(self, other: BitVector) -> BitVector:
        if self.length != other.length:
            raise DimensionMismatch(f"lengths {self.length} and {other.length}")
        return BitVector(self.length, self._words ^ other._words)

    __add__ = __xor__

    def dot(self, other: BitVector) -> int:
        if self.length != other.length:
            raise DimensionMismatch(f"lengths {self.length} and {other.length}")
        return int(np.bitwise_count(self._words & other._words).sum()) & 1

    def concat(self, other: BitVector) -> BitVector:
        return BitVector.from_bits(np.concatenate([self.bits(), other.bits()]))

    def __eq__(self, other) -> bool:
        if not isinstance(other, BitVector):
            return NotImplemented
        return self.length == other.length and np.array_equal(self._words, other._words)

    def __hash__(self) -> int:
        return hash((self.length, self._words.tobytes()))

    def __str__(self) -> str:
        return "".join(map(str, self.tolist()))

    def __repr__(self) -> str:
        return f"BitVector({str(self)!r})"


def weight(v: BitVector) -> int:
    """Hamming weight: number of nonzero coordinates."""
    return v.weight()


class BitMatrix:
    """Immutable rows x cols matrix over GF(2), row-major packed."""

    __slots__ = ("rows", "cols", "_words")

    def __init__(self, rows: int, cols: int, words: np.ndarray | None = None):
        if rows < 0 or cols < 0:
            raise ValueError("shape must be nonnegative")
        self.rows = int(rows)
        self.cols = int(cols)
        if words is None:
            words = np.zeros((rows, _nwords(cols)), dtype=np.uint64)
        elif words.shape != (rows, _nwords(cols)):
            raise DimensionMismatch("word array does not match shape")
        self._words = _frozen(np.array(words, dtype=np.uint64))

    @classmethod
    def from_array(cls, data, cols: int | None = None) -> BitMatrix:
        """Build from a 2-d 0/1 array or nested sequence.

        ``cols`` is only needed for an empty row list, where it cannot be inferred.
        """
        arr = np.asarray(data)
        if arr.size == 0 and arr.ndim < 2:
            return cls(0, cols or 0)
        arr = _as_bits(arr, 2)
        if cols is not None and arr.shape[1] != cols:
            raise DimensionMismatch(f"expected {cols} columns, got {arr.shape[1]}")
        return cls(arr.shape[0], arr.shape[1], _pack(arr, arr.shape[1]))

    @classmethod
    def from_rows(cls, rows: Sequence[BitVector], cols: int) -> BitMatrix:
        for r in rows:
            if r.length != cols:
                raise DimensionMismatch(f"row of length {r.length}, expected {cols}")
        if not rows:
            return cls(0, cols)
        return cls(len(rows), cols, np.stack([r.words for r in rows]))

    @classmethod
    def from_columns(cls, columns: Sequence[BitVector], rows: int) -> BitMatrix:
        return cls.from_rows(columns, rows).T

    @classmethod
    def zeros(cls, rows: int, cols: int) -> BitMatrix:
        return cls(rows, cols)

    @classmethod
    def ones(cls, rows: int, cols: int) -> BitMatrix:
        return cls.from_array(np.ones((rows, cols), dtype=np.uint8))

    @classmethod
    def identity(cls, n: int) -> BitMatrix:
        return cls.from_array(np.eye(n, dtype=np.uint8)) if n else cls(0, 0)

    @classmethod
    def random(cls, rows: int, cols: int, rng: np.random.Generator) -> BitMatrix:
        return cls.from_array(rng.integers(0, 2, size=(rows, cols), dtype=np.uint8)) if rows else cls(0, cols)

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    @property
    def words(self) -> np.ndarray:
        return self._words

    def to_array(self) -> np.ndarray:
        return _unpack(self._words, self.cols)

    def tolist(self) -> list[list[int]]:
        return self.to_array().tolist()

    def row(self, i: int) -> BitVector:
        return BitVector(self.cols, self._words[i])

    def column(self, j: int) -> BitVector:
        if not 0 <= j < self.cols:
            raise IndexError(j)
        return BitVector.from_bits(self.to_array()[:, j])

    def row_vectors(self) -> list[BitVector]:
        return [self.row(i) for i in range(self.rows)]

    def column_vectors(self) -> list[BitVector]:
        return self.T.row_vectors()

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(ij)
        return int((self._words[i, j // WORD_BITS] >> np.uint64(j % WORD_BITS)) & np.uint64(1))

    @property
    def T(self) -> BitMatrix:
        if self.rows == 0 or self.cols == 0:
            return BitMatrix(self.cols, self.rows)
        return BitMatrix.from_array(self.to_array().T)

    def is_zero(self) -> bool:
        return not self._words.any()

    def __matmul__(self, other):
        if isinstance(other, BitVector):
            return mat_vec(self, other)
        if self.cols != other.rows:
            raise DimensionMismatch(f"cannot multiply {self.shape} by {other.shape}")
        if self.rows == 0 or other.cols == 0:
            return BitMatrix(self.rows, other.cols)
        # rows of self select rows of other to XOR together
        a = self.to_array().astype(bool)
        out = np.zeros((self.rows, other._words.shape[1]), dtype=np.uint64)
        for i in range(self.rows):
            sel = other._words[a[i]]
            if sel.shape[0]:
                out[i] = np.bitwise_xor.reduce(sel, axis=0)
        return BitMatrix(self.rows, other.cols, out)

    def __add__(self, other: BitMatrix) -> BitMatrix:
        if self.shape != other.shape:
            raise DimensionMismatch(f"shapes {self.shape} and {other.shape}")
        return BitMatrix(self.rows, self.cols, self._words ^ other._words)

    __xor__ = __add__

    def __eq__(self, other) -> bool:
        if not isinstance(other, BitMatrix):
            return NotImplemented
        return self.shape == other.shape and np.array_equal(self._words, other._words)

    def __hash__(self) -> int:
        return hash((self.rows, self.cols, self._words.tobytes()))

    def __repr__(self) -> str:
        return f"BitMatrix({self.rows}x{self.cols})"

    def __str__(self) -> str:
        return format_matrix(self)


def hstack(blocks: Sequence[BitMatrix], rows: int | None = None) -> BitMatrix:
    if not blocks:
        return BitMatrix(rows or 0, 0)
    r = blocks[0].rows
    if any(b.rows != r for b in blocks):
        raise DimensionMismatch("hstack blocks disagree on row count")
    cols = sum(b.cols for b in blocks)
    if r == 0:
        return BitMatrix(0, cols)
    return BitMatrix.from_array(np.hstack([b.to_array() for b in blocks]))


def vstack(blocks: Sequence[BitMatrix], cols: int | None = None) -> BitMatrix:
    if not blocks:
        return BitMatrix(0, cols or 0)
    c = blocks[0].cols
    if any(b.cols != c for b in blocks):
        raise DimensionMismatch("vstack blocks disagree on column count")
    return BitMatrix(sum(b.rows for b in blocks), c, np.vstack([b.words for b in blocks]))


def mat_vec(M: BitMatrix, v: BitVector) -> BitVector:
    """Return M v over GF(2)."""
    if v.length != M.cols:
        raise DimensionMismatch(f"matrix has {M.cols} columns, vector has length {v.length}")
    if M.rows == 0:
        return BitVector(0)
    parity = np.bitwise_count(M.words & v.words[None, :]).sum(axis=1) & 1
    return BitVector.from_bits(parity.astype(np.uint8))


def _rref_words(words: np.ndarray, cols: int) -> tuple[np.ndarray, list[int]]:
    W = words.copy()
    nrows = W.shape[0]
    pivots: list[int] = []
    r = 0
    one = np.uint64(1)
    for c in range(cols):
        if r == nrows:
            break
        w, b = divmod(c, WORD_BITS)
        shift = np.uint64(b)
        hits = np.flatnonzero((W[r:, w] >> shift) & one)
        if hits.size == 0:
            continue
        p = r + int(hits[0])
        if p != r:
            W[[r, p]] = W[[p, r]]
        mask = ((W[:, w] >> shift) & one).astype(bool)
        mask[r] = False
        W[mask] ^= W[r]
        pivots.append(c)
        r += 1
    return W, pivots


def row_reduce(M: BitMatrix) -> tuple[BitMatrix, list[int]]:
    """Reduced row echelon form and its pivot columns.

    Pivots are chosen deterministically: columns are scanned left to right and
    the first unused row carrying a 1 becomes the pivot row.
    """
    W, pivots = _rref_words(M.words, M.cols)
    return BitMatrix(M.rows, M.cols, W), pivots


def rank(M: BitMatrix) -> int:
    return len(_rref_words(M.words, M.cols)[1])


def kernel_basis(M: BitMatrix) -> list[BitVector]:
    """Basis of {x : M x = 0}, one vector per free column of the RREF."""
    R, pivots = row_reduce(M)
    n = M.cols
    if n == 0:
        return []
    arr = R.to_array()
    pivot_set = set(pivots)
    basis = []
    for f in range(n):
        if f in pivot_set:
            continue
        bits = np.zeros(n, dtype=np.uint8)
        bits[f] = 1
        for i, p in enumerate(pivots):
            bits[p] = arr[i, f]
        basis.append(BitVector.from_bits(bits))
    return basis


def kernel_matrix(M: BitMatrix) -> BitMatrix:
    """Kernel basis as the rows of a matrix."""
    return BitMatrix.from_rows(kernel_basis(M), M.cols)


def column_space_basis(M: BitMatrix) -> list[BitVector]:
    """Linearly independent columns of M spanning {M z}: the pivot columns."""
    _, pivots = row_reduce(M)
    if not pivots:
        return []
    arr = M.to_array()
    return [BitVector.from_bits(arr[:, p]) for p in pivots]


def row_space_basis(M: BitMatrix) -> list[BitVector]:
    R, pivots = row_reduce(M)
    return [R.row(i) for i in range(len(pivots))]


class IncrementalSpan:
    """Growing subspace of F_2^length with cheap membership tests.

    Vectors are held as Python ints keyed by their lowest set bit; reducing a
    vector clears its lowest bit with the matching row until it vanishes or
    hits an unused bit.
    """

    def __init__(self, length: int, vectors: Iterable[BitVector] = ()):
        self.length = length
        self._rows: dict[int, int] = {}
        for v in vectors:
            self.add(v)

    @staticmethod
    def _as_int(v: BitVector) -> int:
        return int.from_bytes(v.words.astype("<u8").tobytes(), "little")

    def _reduce(self, x: int) -> int:
        rows = self._rows
        while x:
            low = (x & -x).bit_length() - 1
            row = rows.get(low)
            if row is None:
                return x
            x ^= row
        return 0

    def add(self, v: BitVector) -> bool:
        """Insert v; True iff it was independent of what was already there."""
        if v.length != self.length:
            raise DimensionMismatch(f"vector of length {v.length}, span lives in F_2^{self.length}")
        x = self._reduce(self._as_int(v))
        if not x:
            return False
        self._rows[(x & -x).bit_length() - 1] = x
        return True

    def __contains__(self, v: BitVector) -> bool:
        if v.length != self.length:
            raise DimensionMismatch(f"vector of length {v.length}, span lives in F_2^{self.length}")
        return self._reduce(self._as_int(v)) == 0

    @property
    def dimension(self) -> int:
        return len(self._rows)


def in_span(basis: Sequence[BitVector], v: BitVector) -> bool:
    """Exact membership of v in the span of ``basis``."""
    return v in IncrementalSpan(v.length, basis)


def coordinates(basis: Sequence[BitVector], v: BitVector) -> BitVector | None:
    """Coefficients c with sum c_i basis[i] == v, or None if v is outside the span.

    When ``basis`` is dependent, coefficients of non-pivot members are zero.
    """
    k = len(basis)
    if k == 0:
        return BitVector(0) if v.is_zero() else None
    A = BitMatrix.from_columns(list(basis) + [v], v.length)
    R, pivots = row_reduce(A)
    if k in pivots:
        return None
    coeffs = np.zeros(k, dtype=np.uint8)
    for i, p in enumerate(pivots):
        coeffs[p] = R[i, k]
    return BitVector.from_bits(coeffs)


def inverse(M: BitMatrix) -> BitMatrix:
    """Inverse of a square invertible matrix; ValueError if singular."""
    n = M.rows
    if M.cols != n:
        raise DimensionMismatch(f"inverse needs a square matrix, got {M.shape}")
    if n == 0:
        return BitMatrix(0, 0)
    R, pivots = row_reduce(hstack([M, BitMatrix.identity(n)]))
    if pivots[:n] != list(range(n)):
        raise ValueError("matrix is singular over GF(2)")
    return BitMatrix.from_array(R.to_array()[:, n:])


def spans_equal(a: Sequence[BitVector], b: Sequence[BitVector], length: int) -> bool:
    """True iff the two families span the same subspace of F_2^length."""
    A = BitMatrix.from_rows(list(a), length)
    B = BitMatrix.from_rows(list(b), length)
    ra, rb = rank(A), rank(B)
    return ra == rb == rank(vstack([A, B]))


# -- text format ---------------------------------------------------------


def format_matrix(M: BitMatrix) -> str:
    """``<rows> <cols>`` header followed by one 0/1 string per row."""
    lines = [f"{M.rows} {M.cols}"]
    for row in M.to_array():
        lines.append("".join("1" if b else "0" for b in row))
    return "\n".join(lines) + "\n"


def read_matrix(lines: Sequence[str], start: int = 0, first_line_no: int = 1) -> tuple[BitMatrix, int]:
    """Read one matrix from ``lines[start:]``; return it and the index after it.

    Line numbers in errors are ``first_line_no + index``.
    """
    if start >= len(lines):
        raise ParseError("expected matrix header '<rows> <cols>'", first_line_no + start)
    parts = lines[start].split()
    if len(parts) != 2 or not all(p.isdigit() for p in parts):
        raise ParseError(f"bad matrix header {lines[start]!r}", first_line_no + start)
    rows, cols = int(parts[0]), int(parts[1])
    data = np.zeros((rows, cols), dtype=np.uint8)
    for i in range(rows):
        idx = start + 1 + i
        if idx >= len(lines):
            raise ParseError(f"expected {rows} matrix rows, found {i}", first_line_no + idx)
        text = lines[idx].strip()
        if len(text) != cols or any(ch not in "01" for ch in text):
            raise ParseError(f"matrix row must be {cols} characters of 0/1, got {text!r}", first_line_no + idx)
        data[i] = [ch == "1" for ch in text]
    return BitMatrix.from_array(data, cols=cols) if rows else BitMatrix(0, cols), start + 1 + rows


def parse_matrix(text: str) -> BitMatrix:
    lines = [ln for ln in text.splitlines()]
    while lines and not lines[-1].strip():
        lines.pop()
    M, end = read_matrix(lines)
    if end != len(lines):
        raise ParseError("trailing content after matrix", end + 1)
    return M
