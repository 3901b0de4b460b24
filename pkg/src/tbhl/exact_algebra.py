"""Exact scalar, matrix, and truncated-polynomial arithmetic.

Scalars are Gaussian rationals (complex numbers with rational real and
imaginary parts) built on :class:`fractions.Fraction`.  Matrices are sparse
dicts keyed by ``(row, col)``.  Polynomials are truncated multivariate
polynomials with integer coefficients, used for monomial expansions of
quasisymmetric functions; they record whether any term was discarded by the
degree cap so that equality checks can insist that no truncation occurred.

>>> i = GaussianRational.sqrt_minus_one()
>>> i * i == GaussianRational.integer(-1)
True
>>> (i + GaussianRational.integer(1)).to_json()
{'re': '1', 'im': '1'}
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping

__all__ = [
    "GaussianRational",
    "SparseMatrix",
    "TruncatedPolynomial",
]


def _fraction_from_text(text: str) -> Fraction:
    """Parse a rational from a ``p/q`` (or plain integer) string.

    >>> _fraction_from_text("-3/4")
    Fraction(-3, 4)
    >>> _fraction_from_text("7")
    Fraction(7, 1)
    """
    return Fraction(text)


def _fraction_to_text(value: Fraction) -> str:
    """Render a rational as a ``p/q`` string, omitting the unit denominator.

    >>> _fraction_to_text(Fraction(-3, 4))
    '-3/4'
    >>> _fraction_to_text(Fraction(7))
    '7'
    """
    return str(value)


@dataclass(frozen=True)
class GaussianRational:
    """A complex number with exact rational real and imaginary parts."""

    re: Fraction = Fraction(0)
    im: Fraction = Fraction(0)

    @staticmethod
    def integer(value: int) -> "GaussianRational":
        return GaussianRational(Fraction(value), Fraction(0))

    @staticmethod
    def sqrt_minus_one() -> "GaussianRational":
        """The imaginary unit.

        >>> GaussianRational.sqrt_minus_one() ** 2
        GaussianRational(re=Fraction(-1, 1), im=Fraction(0, 1))
        """
        return GaussianRational(Fraction(0), Fraction(1))

    @staticmethod
    def coerce(value: "GaussianRational | Fraction | int") -> "GaussianRational":
        if isinstance(value, GaussianRational):
            return value
        if isinstance(value, (int, Fraction)):
            return GaussianRational(Fraction(value), Fraction(0))
        raise TypeError(f"cannot interpret {value!r} as a Gaussian rational")

    def __add__(self, other: "GaussianRational | Fraction | int") -> "GaussianRational":
        other = GaussianRational.coerce(other)
        return GaussianRational(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __neg__(self) -> "GaussianRational":
        return GaussianRational(-self.re, -self.im)

    def __sub__(self, other: "GaussianRational | Fraction | int") -> "GaussianRational":
        return self + (-GaussianRational.coerce(other))

    def __rsub__(self, other: "GaussianRational | Fraction | int") -> "GaussianRational":
        return GaussianRational.coerce(other) + (-self)

    def __mul__(self, other: "GaussianRational | Fraction | int") -> "GaussianRational":
        other = GaussianRational.coerce(other)
        return GaussianRational(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def inverse(self) -> "GaussianRational":
        """Multiplicative inverse.

        >>> x = GaussianRational(Fraction(1, 2), Fraction(-1, 3))
        >>> x * x.inverse() == GaussianRational.integer(1)
        True
        """
        norm = self.re * self.re + self.im * self.im
        if norm == 0:
            raise ZeroDivisionError("inverse of zero Gaussian rational")
        return GaussianRational(self.re / norm, -self.im / norm)

    def __truediv__(self, other: "GaussianRational | Fraction | int") -> "GaussianRational":
        return self * GaussianRational.coerce(other).inverse()

    def __pow__(self, exponent: int) -> "GaussianRational":
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = GaussianRational.integer(1)
        for _ in range(exponent):
            result = result * self
        return result

    def conjugate(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    def is_zero(self) -> bool:
        return self.re == 0 and self.im == 0

    def to_json(self) -> dict:
        """Serialize as ``{"re": "p/q", "im": "p/q"}``."""
        return {"re": _fraction_to_text(self.re), "im": _fraction_to_text(self.im)}

    @staticmethod
    def from_json(data: Mapping[str, str]) -> "GaussianRational":
        """Inverse of :meth:`to_json`.

        >>> GaussianRational.from_json({"re": "1/2", "im": "-2"})
        GaussianRational(re=Fraction(1, 2), im=Fraction(-2, 1))
        """
        return GaussianRational(
            _fraction_from_text(data["re"]), _fraction_from_text(data["im"])
        )

    def __str__(self) -> str:
        if self.im == 0:
            return _fraction_to_text(self.re)
        if self.re == 0:
            return f"{_fraction_to_text(self.im)}*i"
        sign = "+" if self.im > 0 else "-"
        return f"{_fraction_to_text(self.re)}{sign}{_fraction_to_text(abs(self.im))}*i"


_ZERO = GaussianRational.integer(0)
_ONE = GaussianRational.integer(1)


class SparseMatrix:
    """An exact sparse matrix over the Gaussian rationals.

    Entries are stored in a dict keyed by ``(row, col)``; zero entries are
    never stored.  Instances are immutable in intent: all operations return
    new matrices.

    >>> a = SparseMatrix.from_entries(2, 2, {(0, 1): 1, (1, 0): 1})
    >>> (a @ a) == SparseMatrix.identity(2)
    True
    """

    __slots__ = ("nrows", "ncols", "entries")

    def __init__(
        self,
        nrows: int,
        ncols: int,
        entries: Mapping[tuple[int, int], GaussianRational] | None = None,
    ) -> None:
        self.nrows = nrows
        self.ncols = ncols
        stored: dict[tuple[int, int], GaussianRational] = {}
        if entries:
            for (r, c), value in entries.items():
                if not (0 <= r < nrows and 0 <= c < ncols):
                    raise IndexError(f"entry {(r, c)} outside {nrows}x{ncols} matrix")
                value = GaussianRational.coerce(value)
                if not value.is_zero():
                    stored[(r, c)] = value
        self.entries = stored

    @staticmethod
    def from_entries(
        nrows: int,
        ncols: int,
        entries: Mapping[tuple[int, int], "GaussianRational | Fraction | int"],
    ) -> "SparseMatrix":
        return SparseMatrix(
            nrows,
            ncols,
            {pos: GaussianRational.coerce(v) for pos, v in entries.items()},
        )

    @staticmethod
    def zero(nrows: int, ncols: int) -> "SparseMatrix":
        return SparseMatrix(nrows, ncols, {})

    @staticmethod
    def identity(n: int) -> "SparseMatrix":
        return SparseMatrix(n, n, {(k, k): _ONE for k in range(n)})

    def get(self, row: int, col: int) -> GaussianRational:
        return self.entries.get((row, col), _ZERO)

    def _require_same_shape(self, other: "SparseMatrix") -> None:
        if (self.nrows, self.ncols) != (other.nrows, other.ncols):
            raise ValueError("matrix shapes differ")

    def __add__(self, other: "SparseMatrix") -> "SparseMatrix":
        self._require_same_shape(other)
        merged = dict(self.entries)
        for pos, value in other.entries.items():
            merged[pos] = merged.get(pos, _ZERO) + value
        return SparseMatrix(self.nrows, self.ncols, merged)

    def __sub__(self, other: "SparseMatrix") -> "SparseMatrix":
        return self + other.scale(GaussianRational.integer(-1))

    def scale(self, scalar: "GaussianRational | Fraction | int") -> "SparseMatrix":
        scalar = GaussianRational.coerce(scalar)
        return SparseMatrix(
            self.nrows,
            self.ncols,
            {pos: scalar * value for pos, value in self.entries.items()},
        )

    def __matmul__(self, other: "SparseMatrix") -> "SparseMatrix":
        if self.ncols != other.nrows:
            raise ValueError("inner dimensions differ")
        by_row: dict[int, list[tuple[int, GaussianRational]]] = {}
        for (k, c), value in other.entries.items():
            by_row.setdefault(k, []).append((c, value))
        product: dict[tuple[int, int], GaussianRational] = {}
        for (r, k), left in self.entries.items():
            for c, right in by_row.get(k, ()):
                pos = (r, c)
                product[pos] = product.get(pos, _ZERO) + left * right
        return SparseMatrix(self.nrows, other.ncols, product)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SparseMatrix):
            return NotImplemented
        return (
            (self.nrows, self.ncols) == (other.nrows, other.ncols)
            and self.entries == other.entries
        )

    def __hash__(self) -> int:
        return hash((self.nrows, self.ncols, frozenset(self.entries.items())))

    def is_zero(self) -> bool:
        return not self.entries

    def transpose(self) -> "SparseMatrix":
        return SparseMatrix(
            self.ncols,
            self.nrows,
            {(c, r): value for (r, c), value in self.entries.items()},
        )

    def column(self, col: int) -> dict[int, GaussianRational]:
        return {r: v for (r, c), v in self.entries.items() if c == col}

    def is_invertible(self) -> bool:
        """Exact invertibility test by Gaussian elimination.

        >>> SparseMatrix.from_entries(2, 2, {(0, 0): 1, (1, 1): 2}).is_invertible()
        True
        >>> SparseMatrix.from_entries(2, 2, {(0, 0): 1}).is_invertible()
        False
        """
        if self.nrows != self.ncols:
            return False
        n = self.nrows
        rows: list[dict[int, GaussianRational]] = [dict() for _ in range(n)]
        for (r, c), value in self.entries.items():
            rows[r][c] = value
        rank = 0
        for col in range(n):
            pivot_index = None
            for r in range(rank, n):
                if col in rows[r] and not rows[r][col].is_zero():
                    pivot_index = r
                    break
            if pivot_index is None:
                return False
            rows[rank], rows[pivot_index] = rows[pivot_index], rows[rank]
            pivot = rows[rank][col]
            inv = pivot.inverse()
            rows[rank] = {c: inv * v for c, v in rows[rank].items()}
            for r in range(rank + 1, n):
                factor = rows[r].get(col)
                if factor is None or factor.is_zero():
                    continue
                updated = dict(rows[r])
                for c, v in rows[rank].items():
                    delta = factor * v
                    new_value = updated.get(c, _ZERO) - delta
                    if new_value.is_zero():
                        updated.pop(c, None)
                    else:
                        updated[c] = new_value
                rows[r] = updated
            rank += 1
        return rank == n

    def to_json(self) -> dict:
        ordered = sorted(self.entries.items())
        return {
            "nrows": self.nrows,
            "ncols": self.ncols,
            "entries": [[r, c, value.to_json()] for (r, c), value in ordered],
        }

    @staticmethod
    def from_json(data: Mapping) -> "SparseMatrix":
        return SparseMatrix(
            data["nrows"],
            data["ncols"],
            {
                (r, c): GaussianRational.from_json(value)
                for r, c, value in data["entries"]
            },
        )

    def __repr__(self) -> str:
        return f"SparseMatrix({self.nrows}x{self.ncols}, {len(self.entries)} entries)"


@dataclass(frozen=True)
class TruncatedPolynomial:
    """A multivariate polynomial with integer coefficients, capped by degree.

    ``terms`` maps exponent vectors (tuples of length ``nvars``) to nonzero
    integer coefficients.  Any operation that would create a term of total
    degree above ``degree_cap`` drops the term and sets ``truncated``; the
    flag is sticky under addition and multiplication, so ``truncated=False``
    certifies that the stored terms are the complete polynomial.

    >>> x0 = TruncatedPolynomial.variable(0, nvars=2, degree_cap=2)
    >>> x1 = TruncatedPolynomial.variable(1, nvars=2, degree_cap=2)
    >>> p = (x0 + x1) * x1
    >>> sorted(p.as_dict().items())
    [((0, 2), 1), ((1, 1), 1)]
    >>> p.truncated
    False
    >>> (p * x0).truncated
    True
    """

    nvars: int
    degree_cap: int
    terms: tuple[tuple[tuple[int, ...], int], ...] = field(default=())
    truncated: bool = False

    @staticmethod
    def make(
        nvars: int,
        degree_cap: int,
        terms: Mapping[tuple[int, ...], int] | Iterable[tuple[tuple[int, ...], int]] = (),
        truncated: bool = False,
    ) -> "TruncatedPolynomial":
        collected: dict[tuple[int, ...], int] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        clipped = truncated
        for exponents, coefficient in items:
            exponents = tuple(exponents)
            if len(exponents) != nvars:
                raise ValueError(f"exponent vector {exponents} is not length {nvars}")
            if any(e < 0 for e in exponents):
                raise ValueError(f"negative exponent in {exponents}")
            if sum(exponents) > degree_cap:
                clipped = True
                continue
            total = collected.get(exponents, 0) + int(coefficient)
            if total:
                collected[exponents] = total
            else:
                collected.pop(exponents, None)
        ordered = tuple(sorted(collected.items()))
        return TruncatedPolynomial(nvars, degree_cap, ordered, clipped)

    @staticmethod
    def zero(nvars: int, degree_cap: int) -> "TruncatedPolynomial":
        return TruncatedPolynomial.make(nvars, degree_cap, {})

    @staticmethod
    def constant(value: int, nvars: int, degree_cap: int) -> "TruncatedPolynomial":
        return TruncatedPolynomial.make(nvars, degree_cap, {(0,) * nvars: value})

    @staticmethod
    def variable(index: int, nvars: int, degree_cap: int) -> "TruncatedPolynomial":
        if not 0 <= index < nvars:
            raise IndexError(f"variable x_{index} outside range of {nvars} variables")
        exponents = tuple(1 if k == index else 0 for k in range(nvars))
        return TruncatedPolynomial.make(nvars, degree_cap, {exponents: 1})

    @staticmethod
    def monomial(
        exponents: Iterable[int], coefficient: int, degree_cap: int
    ) -> "TruncatedPolynomial":
        exponents = tuple(exponents)
        return TruncatedPolynomial.make(
            len(exponents), degree_cap, {exponents: coefficient}
        )

    def _require_compatible(self, other: "TruncatedPolynomial") -> None:
        if self.nvars != other.nvars or self.degree_cap != other.degree_cap:
            raise ValueError("polynomials have different variable counts or caps")

    def as_dict(self) -> dict[tuple[int, ...], int]:
        return dict(self.terms)

    def __add__(self, other: "TruncatedPolynomial") -> "TruncatedPolynomial":
        self._require_compatible(other)
        merged = self.as_dict()
        for exponents, coefficient in other.terms:
            total = merged.get(exponents, 0) + coefficient
            if total:
                merged[exponents] = total
            else:
                merged.pop(exponents, None)
        return TruncatedPolynomial.make(
            self.nvars, self.degree_cap, merged, self.truncated or other.truncated
        )

    def __neg__(self) -> "TruncatedPolynomial":
        return self.scale(-1)

    def __sub__(self, other: "TruncatedPolynomial") -> "TruncatedPolynomial":
        return self + (-other)

    def scale(self, scalar: int) -> "TruncatedPolynomial":
        return TruncatedPolynomial.make(
            self.nvars,
            self.degree_cap,
            {exponents: scalar * c for exponents, c in self.terms},
            self.truncated,
        )

    def __mul__(self, other: "TruncatedPolynomial") -> "TruncatedPolynomial":
        self._require_compatible(other)
        product: dict[tuple[int, ...], int] = {}
        clipped = self.truncated or other.truncated
        for left_exp, left_c in self.terms:
            for right_exp, right_c in other.terms:
                exponents = tuple(a + b for a, b in zip(left_exp, right_exp))
                if sum(exponents) > self.degree_cap:
                    clipped = True
                    continue
                total = product.get(exponents, 0) + left_c * right_c
                if total:
                    product[exponents] = total
                else:
                    product.pop(exponents, None)
        return TruncatedPolynomial.make(self.nvars, self.degree_cap, product, clipped)

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other: object) -> bool:
        """Structural equality of stored terms (shape must agree).

        The truncation flags do not participate; use :meth:`exact_eq` to
        additionally demand that neither side lost terms.
        """
        if not isinstance(other, TruncatedPolynomial):
            return NotImplemented
        return (
            self.nvars == other.nvars
            and self.degree_cap == other.degree_cap
            and self.terms == other.terms
        )

    def __hash__(self) -> int:
        return hash((self.nvars, self.degree_cap, self.terms))

    def exact_eq(self, other: "TruncatedPolynomial") -> bool:
        """Equality that also certifies no truncation occurred on either side."""
        return (not self.truncated) and (not other.truncated) and self == other

    def to_json(self) -> list:
        """Serialize as ``[[exponent_vector, coefficient], ...]`` in lex order."""
        return [[list(exponents), coefficient] for exponents, coefficient in self.terms]

    @staticmethod
    def from_json(
        data: Iterable, nvars: int, degree_cap: int
    ) -> "TruncatedPolynomial":
        return TruncatedPolynomial.make(
            nvars, degree_cap, {tuple(exponents): c for exponents, c in data}
        )

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        pieces = []
        for exponents, coefficient in reversed(self.terms):
            factors = [
                f"x{k}" if e == 1 else f"x{k}^{e}"
                for k, e in enumerate(exponents)
                if e
            ]
            body = "*".join(factors) if factors else "1"
            pieces.append(f"{coefficient}*{body}")
        return " + ".join(pieces)


def all_exponent_vectors(nvars: int, total: int) -> list[tuple[int, ...]]:
    """All exponent vectors of the given total degree, in lex order.

    >>> all_exponent_vectors(2, 2)
    [(0, 2), (1, 1), (2, 0)]
    """
    if nvars == 0:
        return [()] if total == 0 else []
    result = []
    for first in range(total + 1):
        for rest in all_exponent_vectors(nvars - 1, total - first):
            result.append((first, *rest))
    return sorted(result)


if __name__ == "__main__":
    import doctest

    doctest.testmod()
