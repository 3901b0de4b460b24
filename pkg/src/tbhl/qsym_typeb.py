"""Type-B quasisymmetric functions: fundamental basis, peaks, peak functions.

Degree-n type-B quasisymmetric functions are stored as integer combinations
of the fundamental elements indexed by subsets of ``{0, ..., n-1}`` (basis
string ``"FB"``).  The fundamental element for a subset I expands into
monomials indexed by chains ``0 = i_0 <= i_1 <= ... <= i_n`` where the step
at position j is strict exactly when ``j in I``; the variables are
``x_0, x_1, ...``.  Subsets of ``{0, ..., n-1}`` correspond to type-B
compositions of n, whose first part may be zero.

The type-A analogues (basis string ``"F"``, subsets of ``{1, ..., n-1}``,
chains starting at ``i_1 >= 1`` so that ``x_0`` is unused) are provided for
completeness.

A subset I has peak set ``{p >= 1 : p in I, p-1 not in I}``, valley set
``{v in [n] : v not in I, v-1 in I}``, and zeta-bit ``[0 in I]``; the number
of valleys always equals the number of peaks plus the zeta-bit.  The peak
function for a bit b and peak set P sums ``2^(|P|+b) * F_J`` over subsets J
whose symmetric-difference condition ``P subseteq J (triangle) (J+1)``
holds, with a side condition on ``0 in J`` when b = 1 that admits two
published conventions; both are implemented (``variant`` in ``{"literal",
"complemented"}``) because they genuinely differ and downstream theorems are
sensitive to the choice.

>>> str(fb_monomials(frozenset(), 1, nvars=2))
'1*x0 + 1*x1'
>>> str(fb_monomials(frozenset({0}), 1, nvars=2))
'1*x1'
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping

from .exact_algebra import TruncatedPolynomial
from .signed_permutations import format_index_set, parse_index_set

__all__ = [
    "QSymElement",
    "PeakDataB",
    "descent_set_of_composition",
    "composition_of_descent_set",
    "fb_monomials",
    "fundamental_monomials_type_a",
    "peak_data",
    "peak_function_type_b",
    "peak_function_type_a",
    "peak_characteristic",
    "fb_truncations_linearly_independent",
    "PEAK_VARIANTS",
]

PEAK_VARIANTS = ("literal", "complemented")


def _subset_key(indices: frozenset[int]) -> tuple[int, ...]:
    return tuple(sorted(indices))


@dataclass(frozen=True)
class QSymElement:
    """An integer combination of fundamental elements of one degree.

    ``family`` is ``"B"`` (subsets of ``{0..n-1}``) or ``"A"`` (subsets of
    ``{1..n-1}``).  ``coeffs`` is stored sorted by subset for canonical
    hashing and serialization.
    """

    n: int
    family: str
    coeffs: tuple[tuple[tuple[int, ...], int], ...]

    @staticmethod
    def make(
        n: int,
        family: str = "B",
        coeffs: Mapping[frozenset[int], int] | Iterable[tuple[frozenset[int], int]] = (),
    ) -> "QSymElement":
        if family not in ("A", "B"):
            raise ValueError(f"unknown family {family!r}")
        valid_range = range(0, n) if family == "B" else range(1, n)
        collected: dict[tuple[int, ...], int] = {}
        items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
        for subset, coefficient in items:
            subset = frozenset(subset)
            if not subset <= set(valid_range):
                raise ValueError(
                    f"subset {sorted(subset)} outside degree-{n} family {family}"
                )
            key = _subset_key(subset)
            total = collected.get(key, 0) + int(coefficient)
            if total:
                collected[key] = total
            else:
                collected.pop(key, None)
        return QSymElement(n, family, tuple(sorted(collected.items())))

    @staticmethod
    def zero(n: int, family: str = "B") -> "QSymElement":
        return QSymElement.make(n, family, {})

    @staticmethod
    def fundamental(subset: Iterable[int], n: int, family: str = "B") -> "QSymElement":
        return QSymElement.make(n, family, {frozenset(subset): 1})

    @staticmethod
    def from_descent_sets(
        descent_sets: Iterable[Iterable[int]], n: int, family: str = "B"
    ) -> "QSymElement":
        collected: dict[frozenset[int], int] = {}
        for subset in descent_sets:
            key = frozenset(subset)
            collected[key] = collected.get(key, 0) + 1
        return QSymElement.make(n, family, collected)

    def coefficient(self, subset: Iterable[int]) -> int:
        key = _subset_key(frozenset(subset))
        for stored, coefficient in self.coeffs:
            if stored == key:
                return coefficient
        return 0

    def support(self) -> tuple[frozenset[int], ...]:
        return tuple(frozenset(key) for key, _ in self.coeffs)

    def _require_compatible(self, other: "QSymElement") -> None:
        if (self.n, self.family) != (other.n, other.family):
            raise ValueError("degree or family mismatch")

    def __add__(self, other: "QSymElement") -> "QSymElement":
        self._require_compatible(other)
        merged = {frozenset(key): c for key, c in self.coeffs}
        for key, coefficient in other.coeffs:
            subset = frozenset(key)
            merged[subset] = merged.get(subset, 0) + coefficient
        return QSymElement.make(self.n, self.family, merged)

    def __neg__(self) -> "QSymElement":
        return self.scale(-1)

    def __sub__(self, other: "QSymElement") -> "QSymElement":
        return self + (-other)

    def scale(self, scalar: int) -> "QSymElement":
        return QSymElement.make(
            self.n,
            self.family,
            {frozenset(key): scalar * c for key, c in self.coeffs},
        )

    def is_zero(self) -> bool:
        return not self.coeffs

    def to_monomials(self, nvars: int) -> TruncatedPolynomial:
        """Expand into monomials in ``x_0 .. x_{nvars-1}``."""
        expand = fb_monomials if self.family == "B" else fundamental_monomials_type_a
        total = TruncatedPolynomial.zero(nvars, self.n)
        for key, coefficient in self.coeffs:
            total = total + expand(frozenset(key), self.n, nvars).scale(coefficient)
        return total

    def to_json(self) -> dict:
        basis = "FB" if self.family == "B" else "F"
        return {
            "n": self.n,
            "basis": basis,
            "coeffs": [
                [format_index_set(key), coefficient] for key, coefficient in self.coeffs
            ],
        }

    @staticmethod
    def from_json(data: Mapping) -> "QSymElement":
        family = {"FB": "B", "F": "A"}[data["basis"]]
        return QSymElement.make(
            data["n"],
            family,
            {parse_index_set(text): coefficient for text, coefficient in data["coeffs"]},
        )

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        basis = "FB" if self.family == "B" else "F"
        return " + ".join(
            f"{coefficient}*{basis}{format_index_set(key)}"
            for key, coefficient in self.coeffs
        )


def descent_set_of_composition(parts: Iterable[int], family: str = "B") -> frozenset[int]:
    """Partial sums of a composition, excluding the total.

    Type-B compositions may have first part 0 (making 0 a descent); all
    other parts must be positive.

    >>> sorted(descent_set_of_composition((2, 1, 1), family="A"))
    [2, 3]
    >>> sorted(descent_set_of_composition((0, 3, 1)))
    [0, 3]
    """
    parts = tuple(parts)
    if not parts:
        raise ValueError("empty composition")
    for position, part in enumerate(parts):
        minimum = 0 if (family == "B" and position == 0) else 1
        if part < minimum:
            raise ValueError(f"invalid part {part} at position {position}")
    if family == "A" and parts[0] == 0:
        raise ValueError("type-A compositions have positive parts")
    partial = 0
    descents = []
    for part in parts[:-1]:
        partial += part
        descents.append(partial)
    return frozenset(descents)


def composition_of_descent_set(
    subset: Iterable[int], n: int, family: str = "B"
) -> tuple[int, ...]:
    """Inverse of :func:`descent_set_of_composition` for fixed total n.

    >>> composition_of_descent_set({0, 3}, 4)
    (0, 3, 1)
    >>> composition_of_descent_set(set(), 4)
    (4,)
    """
    subset = sorted(set(subset))
    low = 0 if family == "B" else 1
    if any(not low <= i <= n - 1 for i in subset):
        raise ValueError(f"descent set {subset} outside [{low}, {n - 1}]")
    boundaries = subset + [n]
    parts = []
    previous = 0
    for boundary in boundaries:
        parts.append(boundary - previous)
        previous = boundary
    return tuple(parts)


@lru_cache(maxsize=None)
def _chain_polynomial(
    strict_steps: frozenset[int], n: int, nvars: int, start_floor: int
) -> TruncatedPolynomial:
    """Sum of x_{i_1} ... x_{i_n} over chains with prescribed strictness.

    Chains satisfy ``start_floor <= i_1 <= ... <= i_n <= nvars - 1`` with
    ``i_j < i_{j+1}`` whenever ``j`` is a strict step (and ``i_1 >
    start_floor - 1 + 1`` handled by the caller via strict step 0, whose
    meaning is ``i_1 > 0`` relative to the fixed ``i_0 = 0``).
    """
    terms: dict[tuple[int, ...], int] = {}
    exponents = [0] * nvars
    first_minimum = start_floor + (1 if 0 in strict_steps else 0)

    # j indexes i_1 .. i_n; the step between i_j and i_{j+1} is strict
    # exactly when j lies in the strict-step set.
    def walk(j: int, minimum: int) -> None:
        if j > n:
            key = tuple(exponents)
            terms[key] = terms.get(key, 0) + 1
            return
        for value in range(minimum, nvars):
            exponents[value] += 1
            walk(j + 1, value + 1 if j in strict_steps else value)
            exponents[value] -= 1

    walk(1, first_minimum)
    return TruncatedPolynomial.make(nvars, n, terms)


def fb_monomials(subset: Iterable[int], n: int, nvars: int) -> TruncatedPolynomial:
    """Monomial expansion of the degree-n type-B fundamental element.

    Sums ``x_{i_1} ... x_{i_n}`` over ``0 <= i_1 <= ... <= i_n <= nvars-1``
    with strict steps at positions in the subset (position 0 compares
    against the fixed ``i_0 = 0``, so ``0 in subset`` forces ``i_1 >= 1``).

    >>> fb_monomials({0}, 1, 2).as_dict()
    {(0, 1): 1}
    >>> fb_monomials(set(), 2, 2).as_dict()
    {(0, 2): 1, (1, 1): 1, (2, 0): 1}
    """
    subset = frozenset(subset)
    if not subset <= set(range(n)):
        raise ValueError(f"subset {sorted(subset)} outside [0, {n - 1}]")
    return _chain_polynomial(subset, n, nvars, start_floor=0)


def fundamental_monomials_type_a(
    subset: Iterable[int], n: int, nvars: int
) -> TruncatedPolynomial:
    """Monomial expansion of the type-A fundamental element (x_0 unused).

    >>> fundamental_monomials_type_a(set(), 1, 2).as_dict()
    {(0, 1): 1}
    """
    subset = frozenset(subset)
    if not subset <= set(range(1, n)):
        raise ValueError(f"subset {sorted(subset)} outside [1, {n - 1}]")
    return _chain_polynomial(subset, n, nvars, start_floor=1)


@dataclass(frozen=True)
class PeakDataB:
    """Peak set, valley set, and zeta-bit of a subset of ``{0..n-1}``."""

    peak: frozenset[int]
    valley: frozenset[int]
    zeta: int


def peak_data(subset: Iterable[int], n: int) -> PeakDataB:
    """Peaks ``{p >= 1 in I, p-1 not in I}``, valleys ``{v in [n] not in I,
    v-1 in I}``, and the zeta-bit ``[0 in I]``.

    >>> data = peak_data({0, 3, 4, 6}, 7)
    >>> (sorted(data.peak), sorted(data.valley), data.zeta)
    ([3, 6], [1, 5, 7], 1)
    """
    subset = frozenset(subset)
    if not subset <= set(range(n)):
        raise ValueError(f"subset {sorted(subset)} outside [0, {n - 1}]")
    peaks = frozenset(
        p for p in range(1, n) if p in subset and (p - 1) not in subset
    )
    valleys = frozenset(
        v for v in range(1, n + 1) if v not in subset and (v - 1) in subset
    )
    return PeakDataB(peaks, valleys, 1 if 0 in subset else 0)


def _validate_peak_set(peaks: frozenset[int], n: int, bit: int) -> None:
    if bit not in (0, 1):
        raise ValueError(f"bit must be 0 or 1, got {bit}")
    if not peaks <= set(range(1, n)):
        raise ValueError(f"peak set {sorted(peaks)} outside [1, {n - 1}]")
    ordered = sorted(peaks)
    for a, b in zip(ordered, ordered[1:]):
        if b - a == 1:
            raise ValueError(f"peak set {ordered} has adjacent elements")
    if bit == 1 and 1 in peaks:
        raise ValueError("bit 1 requires 1 outside the peak set")


def symmetric_difference_condition(peaks: frozenset[int], subset: frozenset[int]) -> bool:
    """Whether every peak p satisfies ``(p in J) xor (p-1 in J)``."""
    return all((p in subset) != ((p - 1) in subset) for p in peaks)


def peak_function_type_b(
    bit: int,
    peaks: Iterable[int],
    n: int,
    variant: str = "literal",
) -> QSymElement:
    """The type-B peak function for a zeta-bit and peak set.

    Sums ``2^(|P|+bit) * F_J`` over subsets J of ``{0..n-1}`` satisfying the
    symmetric-difference condition.  For bit = 1 the side condition on J is
    convention-dependent: ``variant="literal"`` keeps subsets with ``0 in
    J``; ``variant="complemented"`` keeps ``0 not in J``.

    >>> str(peak_function_type_b(0, set(), 1))
    '1*FB{} + 1*FB{0}'
    >>> str(peak_function_type_b(1, set(), 1, variant="literal"))
    '2*FB{0}'
    >>> str(peak_function_type_b(1, set(), 1, variant="complemented"))
    '2*FB{}'
    """
    if variant not in PEAK_VARIANTS:
        raise ValueError(f"variant must be one of {PEAK_VARIANTS}")
    peaks = frozenset(peaks)
    _validate_peak_set(peaks, n, bit)
    coefficient = 2 ** (len(peaks) + bit)
    collected: dict[frozenset[int], int] = {}
    for size in range(n + 1):
        for subset in itertools.combinations(range(n), size):
            candidate = frozenset(subset)
            if not symmetric_difference_condition(peaks, candidate):
                continue
            if bit == 1:
                zero_in = 0 in candidate
                if variant == "literal" and not zero_in:
                    continue
                if variant == "complemented" and zero_in:
                    continue
            collected[candidate] = coefficient
    return QSymElement.make(n, "B", collected)


def peak_function_type_a(peaks: Iterable[int], n: int) -> QSymElement:
    """The type-A peak function, in the type-A fundamental basis.

    >>> str(peak_function_type_a(set(), 2))
    '2*F{} + 2*F{1}'
    """
    peaks = frozenset(peaks)
    if not peaks <= set(range(1, n)):
        raise ValueError(f"peak set {sorted(peaks)} outside [1, {n - 1}]")
    ordered = sorted(peaks)
    for a, b in zip(ordered, ordered[1:]):
        if b - a == 1:
            raise ValueError(f"peak set {ordered} has adjacent elements")
    coefficient = 2 ** (len(peaks) + 1)
    collected: dict[frozenset[int], int] = {}
    for size in range(n):
        for subset in itertools.combinations(range(1, n), size):
            candidate = frozenset(subset)
            if symmetric_difference_condition(peaks, candidate):
                collected[candidate] = coefficient
    return QSymElement.make(n, "A", collected)


def peak_characteristic(
    subset: Iterable[int], n: int, variant: str = "literal"
) -> QSymElement:
    """The peak function attached to a subset: bit = zeta, peaks as computed.

    >>> str(peak_characteristic({1}, 2))
    '2*FB{0} + 2*FB{1}'
    >>> str(peak_characteristic({0}, 1, variant="literal"))
    '2*FB{0}'
    >>> str(peak_characteristic({0}, 1, variant="complemented"))
    '2*FB{}'
    """
    data = peak_data(subset, n)
    return peak_function_type_b(data.zeta, data.peak, n, variant)


def fb_truncations_linearly_independent(n: int, nvars: int | None = None) -> bool:
    """Whether the degree-n fundamental truncations to ``nvars`` variables
    (default n+1) are linearly independent over the rationals.

    >>> fb_truncations_linearly_independent(2)
    True
    """
    if nvars is None:
        nvars = n + 1
    subsets = [
        frozenset(c)
        for size in range(n + 1)
        for c in itertools.combinations(range(n), size)
    ]
    columns: dict[tuple[int, ...], int] = {}
    rows = []
    for subset in subsets:
        expansion = fb_monomials(subset, n, nvars)
        row = {}
        for exponents, coefficient in expansion.terms:
            if exponents not in columns:
                columns[exponents] = len(columns)
            row[columns[exponents]] = Fraction(coefficient)
        rows.append(row)
    # exact row reduction; every row must contribute a fresh pivot
    pivots: dict[int, dict[int, Fraction]] = {}
    for row in rows:
        current = dict(row)
        while current:
            pivot_col = min(current)
            if pivot_col in pivots:
                pivot_row = pivots[pivot_col]
                factor = current[pivot_col] / pivot_row[pivot_col]
                for col, value in pivot_row.items():
                    updated = current.get(col, Fraction(0)) - factor * value
                    if updated:
                        current[col] = updated
                    else:
                        current.pop(col, None)
            else:
                pivots[pivot_col] = current
                break
        else:
            return False
    return len(pivots) == len(subsets)


if __name__ == "__main__":
    import doctest

    doctest.testmod()
