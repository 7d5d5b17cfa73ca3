"""Exact dense linear algebra over arbitrary-precision rationals.

All arithmetic in this module uses :class:`fractions.Fraction`, so ranks,
determinants, nullspaces and solutions are exact, never approximate.
Matrices carry row and column labels so results can be read back in terms
of the objects they were built from (vertices, hyperedges, states).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence, Union

from .errors import NotSquareError, SingularError

__all__ = [
    "Rational",
    "rat",
    "RationalMatrix",
    "RrefResult",
    "NullspaceBasis",
    "rref",
    "rank",
    "nullspace",
    "determinant",
    "solve",
    "vector_support",
]

#: Exact scalar type used throughout the library.
Rational = Fraction

RationalLike = Union[int, str, Fraction]


def rat(value: RationalLike) -> Fraction:
    """Coerce an int, a 'p/q' string, or a Fraction to an exact Fraction.

    Floats are rejected on purpose: admitting them would silently launder
    rounding error into "exact" results.
    """
    if isinstance(value, bool):
        raise TypeError("booleans are not rational scalars")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value)
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"not a rational literal: {value!r}") from exc
    raise TypeError(f"not an exact rational: {value!r}")


def _unique(labels: Sequence[str], axis: str) -> tuple[str, ...]:
    out = tuple(str(l) for l in labels)
    if len(set(out)) != len(out):
        raise ValueError(f"duplicate {axis} labels")
    return out


@dataclass(frozen=True)
class RationalMatrix:
    """A dense labeled matrix of exact rationals.

    Entries are stored row major as nested tuples, so instances are
    immutable and safe to share. Labels are unique per axis.
    """

    row_labels: tuple[str, ...]
    col_labels: tuple[str, ...]
    entries: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "row_labels", _unique(self.row_labels, "row"))
        object.__setattr__(self, "col_labels", _unique(self.col_labels, "column"))
        rows = tuple(tuple(rat(x) for x in row) for row in self.entries)
        if len(rows) != len(self.row_labels):
            raise ValueError("entry rows do not match row labels")
        for row in rows:
            if len(row) != len(self.col_labels):
                raise ValueError("entry row length does not match column labels")
        object.__setattr__(self, "entries", rows)

    # -- construction ---------------------------------------------------

    @classmethod
    def from_rows(
        cls,
        row_labels: Sequence[str],
        col_labels: Sequence[str],
        rows: Iterable[Iterable[RationalLike]],
    ) -> "RationalMatrix":
        return cls(tuple(row_labels), tuple(col_labels), tuple(tuple(r) for r in rows))

    @classmethod
    def identity(cls, labels: Sequence[str]) -> "RationalMatrix":
        n = len(labels)
        return cls.from_rows(
            labels, labels,
            [[Fraction(int(i == j)) for j in range(n)] for i in range(n)],
        )

    @classmethod
    def zeros(cls, row_labels: Sequence[str], col_labels: Sequence[str]) -> "RationalMatrix":
        return cls.from_rows(
            row_labels, col_labels,
            [[Fraction(0)] * len(col_labels) for _ in row_labels],
        )

    @classmethod
    def diagonal(cls, labels: Sequence[str], values: Mapping[str, RationalLike]) -> "RationalMatrix":
        n = len(labels)
        rows = [[Fraction(0)] * n for _ in range(n)]
        for i, lab in enumerate(labels):
            rows[i][i] = rat(values[lab])
        return cls.from_rows(labels, labels, rows)

    # -- shape and access -----------------------------------------------

    @property
    def rows(self) -> int:
        return len(self.row_labels)

    @property
    def cols(self) -> int:
        return len(self.col_labels)

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def row_index(self, label: str) -> int:
        try:
            return self.row_labels.index(label)
        except ValueError:
            raise KeyError(f"no row labeled {label!r}") from None

    def col_index(self, label: str) -> int:
        try:
            return self.col_labels.index(label)
        except ValueError:
            raise KeyError(f"no column labeled {label!r}") from None

    def entry(self, row_label: str, col_label: str) -> Fraction:
        return self.entries[self.row_index(row_label)][self.col_index(col_label)]

    def __getitem__(self, idx: tuple[int, int]) -> Fraction:
        i, j = idx
        return self.entries[i][j]

    def row(self, label: str) -> dict[str, Fraction]:
        i = self.row_index(label)
        return dict(zip(self.col_labels, self.entries[i]))

    def column(self, label: str) -> dict[str, Fraction]:
        j = self.col_index(label)
        return {lab: self.entries[i][j] for i, lab in enumerate(self.row_labels)}

    # -- algebra ---------------------------------------------------------

    def transpose(self) -> "RationalMatrix":
        return RationalMatrix(
            self.col_labels,
            self.row_labels,
            tuple(zip(*self.entries)) if self.entries else tuple(() for _ in self.col_labels),
        )

    def __add__(self, other: "RationalMatrix") -> "RationalMatrix":
        self._check_same_shape(other)
        return RationalMatrix(
            self.row_labels,
            self.col_labels,
            tuple(
                tuple(a + b for a, b in zip(ra, rb))
                for ra, rb in zip(self.entries, other.entries)
            ),
        )

    def __sub__(self, other: "RationalMatrix") -> "RationalMatrix":
        self._check_same_shape(other)
        return RationalMatrix(
            self.row_labels,
            self.col_labels,
            tuple(
                tuple(a - b for a, b in zip(ra, rb))
                for ra, rb in zip(self.entries, other.entries)
            ),
        )

    def scaled(self, k: RationalLike) -> "RationalMatrix":
        kk = rat(k)
        return RationalMatrix(
            self.row_labels,
            self.col_labels,
            tuple(tuple(kk * x for x in row) for row in self.entries),
        )

    def __matmul__(self, other: "RationalMatrix") -> "RationalMatrix":
        if self.cols != other.rows:
            raise ValueError("inner dimensions do not match")
        bt = list(zip(*other.entries)) if other.entries else []
        out = tuple(
            tuple(sum((a * b for a, b in zip(row, col)), Fraction(0)) for col in bt)
            for row in self.entries
        )
        return RationalMatrix(self.row_labels, other.col_labels, out)

    def apply(self, x: Mapping[str, RationalLike]) -> dict[str, Fraction]:
        """Matrix-vector product M x with x indexed by column labels.

        Missing keys count as zero, so sparse vectors are fine.
        """
        vec = [rat(x.get(lab, 0)) for lab in self.col_labels]
        return {
            lab: sum((a * b for a, b in zip(row, vec)), Fraction(0))
            for lab, row in zip(self.row_labels, self.entries)
        }

    def apply_left(self, x: Mapping[str, RationalLike]) -> dict[str, Fraction]:
        """Vector-matrix product x M with x indexed by row labels."""
        vec = [rat(x.get(lab, 0)) for lab in self.row_labels]
        out: dict[str, Fraction] = {}
        for j, lab in enumerate(self.col_labels):
            out[lab] = sum((vec[i] * self.entries[i][j] for i in range(self.rows)), Fraction(0))
        return out

    def is_symmetric(self) -> bool:
        if not self.is_square:
            return False
        n = self.rows
        return all(
            self.entries[i][j] == self.entries[j][i]
            for i in range(n)
            for j in range(i + 1, n)
        )

    def submatrix(self, row_labels: Sequence[str], col_labels: Sequence[str]) -> "RationalMatrix":
        ri = [self.row_index(l) for l in row_labels]
        ci = [self.col_index(l) for l in col_labels]
        return RationalMatrix.from_rows(
            row_labels, col_labels,
            [[self.entries[i][j] for j in ci] for i in ri],
        )

    def _check_same_shape(self, other: "RationalMatrix") -> None:
        if self.row_labels != other.row_labels or self.col_labels != other.col_labels:
            raise ValueError("matrices are not aligned by labels")

    # -- serialization ----------------------------------------------------

    def to_json_dict(self) -> dict:
        """Serialize as a flat row-major list of 'p/q' strings."""
        return {
            "rows": self.rows,
            "cols": self.cols,
            "row_labels": list(self.row_labels),
            "col_labels": list(self.col_labels),
            "entries": [str(x) for row in self.entries for x in row],
        }

    @classmethod
    def from_json_dict(cls, data: Mapping) -> "RationalMatrix":
        rows = int(data["rows"])
        cols = int(data["cols"])
        flat = [rat(x) for x in data["entries"]]
        if len(flat) != rows * cols:
            raise ValueError("entry count does not match the declared shape")
        return cls.from_rows(
            data["row_labels"],
            data["col_labels"],
            [flat[i * cols : (i + 1) * cols] for i in range(rows)],
        )


@dataclass(frozen=True)
class RrefResult:
    """Reduced row echelon form together with rank and pivot columns."""

    matrix: RationalMatrix
    rank: int
    pivot_cols: tuple[int, ...]

    @property
    def pivot_labels(self) -> tuple[str, ...]:
        return tuple(self.matrix.col_labels[j] for j in self.pivot_cols)


@dataclass(frozen=True)
class NullspaceBasis:
    """A canonical basis for the right nullspace of a labeled matrix.

    Each vector is a full mapping from ambient label to coefficient. The
    basis follows the reduced-echelon free-variable pattern: vector k is
    supported on its own free column plus pivot columns, and is scaled so
    its first nonzero coordinate (in ambient order) equals +1.
    """

    ambient_labels: tuple[str, ...]
    vectors: tuple[dict, ...]

    @property
    def dimension(self) -> int:
        return len(self.vectors)


def rref(m: RationalMatrix) -> RrefResult:
    """Reduced row echelon form by exact Gauss-Jordan elimination.

    Returns
    -------
    RrefResult
        The echelon matrix (same labels), its rank, and pivot column
        indices in increasing order.
    """
    a = [list(row) for row in m.entries]
    nrows, ncols = m.rows, m.cols
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        pivot_row = next((i for i in range(r, nrows) if a[i][c] != 0), None)
        if pivot_row is None:
            continue
        a[r], a[pivot_row] = a[pivot_row], a[r]
        inv = a[r][c]
        a[r] = [x / inv for x in a[r]]
        for i in range(nrows):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
    reduced = RationalMatrix.from_rows(m.row_labels, m.col_labels, a)
    return RrefResult(matrix=reduced, rank=len(pivots), pivot_cols=tuple(pivots))


def rank(m: RationalMatrix) -> int:
    """Exact rank."""
    return rref(m).rank


def nullspace(m: RationalMatrix) -> NullspaceBasis:
    """Canonical basis of the right nullspace of ``m``.

    One basis vector per free column, constructed from the reduced echelon
    form and sign-normalized so the leading nonzero coordinate is +1.
    """
    res = rref(m)
    a = res.matrix.entries
    pivot_set = set(res.pivot_cols)
    free_cols = [c for c in range(m.cols) if c not in pivot_set]
    vectors: list[dict] = []
    for f in free_cols:
        coeffs = [Fraction(0)] * m.cols
        coeffs[f] = Fraction(1)
        for r, p in enumerate(res.pivot_cols):
            coeffs[p] = -a[r][f]
        lead = next((x for x in coeffs if x != 0), None)
        if lead is not None and lead < 0:
            coeffs = [-x for x in coeffs]
        vectors.append(dict(zip(m.col_labels, coeffs)))
    return NullspaceBasis(ambient_labels=m.col_labels, vectors=tuple(vectors))


def determinant(m: RationalMatrix) -> Fraction:
    """Exact determinant by Bareiss elimination.

    Bareiss keeps intermediate values as ratios of minors, which bounds
    entry growth compared with plain fraction-free expansion. Division is
    exact at every step.

    Raises
    ------
    NotSquareError
        If the matrix is not square.
    """
    if not m.is_square:
        raise NotSquareError(f"determinant needs a square matrix, got {m.rows}x{m.cols}")
    n = m.rows
    if n == 0:
        return Fraction(1)
    a = [list(row) for row in m.entries]
    sign = 1
    prev = Fraction(1)
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if swap is None:
                return Fraction(0)
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        pivot = a[k][k]
        for i in range(k + 1, n):
            row_i = a[i]
            row_k = a[k]
            lead = row_i[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * pivot - lead * row_k[j]) / prev
            row_i[k] = Fraction(0)
        prev = pivot
    return sign * a[n - 1][n - 1]


def solve(m: RationalMatrix, b: Mapping[str, RationalLike] | Sequence[RationalLike]) -> dict[str, Fraction]:
    """Solve M x = b exactly for square nonsingular M.

    Parameters
    ----------
    m : RationalMatrix
        Square coefficient matrix.
    b : mapping or sequence
        Right hand side, either keyed by row label (missing keys are zero)
        or a sequence aligned with the row order.

    Returns
    -------
    dict
        Solution keyed by column label.

    Raises
    ------
    NotSquareError, SingularError
    """
    if not m.is_square:
        raise NotSquareError(f"solve needs a square matrix, got {m.rows}x{m.cols}")
    n = m.rows
    if isinstance(b, Mapping):
        rhs = [rat(b.get(lab, 0)) for lab in m.row_labels]
    else:
        rhs = [rat(x) for x in b]
        if len(rhs) != n:
            raise ValueError("right hand side length does not match")
    a = [list(row) + [rhs[i]] for i, row in enumerate(m.entries)]
    for c in range(n):
        pivot_row = next((i for i in range(c, n) if a[i][c] != 0), None)
        if pivot_row is None:
            raise SingularError("matrix is singular")
        a[c], a[pivot_row] = a[pivot_row], a[c]
        inv = a[c][c]
        a[c] = [x / inv for x in a[c]]
        for i in range(n):
            if i != c and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[c])]
    return {lab: a[i][n] for i, lab in enumerate(m.col_labels)}


def vector_support(x: Mapping[str, Fraction]) -> frozenset:
    """Labels carrying a nonzero coefficient."""
    return frozenset(lab for lab, v in x.items() if v != 0)
