"""Exact characteristic polynomials and integer spectra of adjacency matrices.

Everything here runs on arbitrary-precision integers; no floating point is
involved anywhere, so an "integral" verdict is a certificate rather than an
estimate.  The characteristic polynomial is computed blockwise over the
connected components with the Faddeev-LeVerrier recurrence (whose divisions
by the step index are exact over the integers) and each block is
spot-checked against a fraction-free Bareiss determinant.
"""

from __future__ import annotations

from dataclasses import dataclass
from operator import index as _exact_int
from typing import Iterable, Sequence

from .errors import (
    EmptyInputError,
    IncompleteSpectrumError,
    NonzeroDiagonalError,
    NotMonicError,
    NotSymmetricError,
    ParameterOutOfRange,
)
from .graphs import CommutingGraph


@dataclass(frozen=True)
class CharPoly:
    """Monic integer polynomial det(xI - A), constant coefficient first."""

    coeffs: tuple[int, ...]

    def __post_init__(self):
        if not self.coeffs:
            raise NotMonicError("a polynomial needs at least one coefficient")
        if self.coeffs[-1] != 1:
            raise NotMonicError(f"leading coefficient is {self.coeffs[-1]}, not 1")

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def evaluate(self, t: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * t + c
        return acc

    def coefficient(self, power: int) -> int:
        return self.coeffs[power] if 0 <= power < len(self.coeffs) else 0

    def __mul__(self, other: "CharPoly") -> "CharPoly":
        return CharPoly(tuple(_poly_mul(self.coeffs, other.coeffs)))


def monic_linear(root: int) -> CharPoly:
    """The polynomial x - root."""
    return CharPoly((-root, 1))


@dataclass(frozen=True)
class Spectrum:
    """Eigenvalue/multiplicity pairs, eigenvalues strictly decreasing.

    ``complete`` is True when the multiplicities account for the whole
    polynomial degree.  Use :func:`spectrum_from_pairs` to canonicalize.
    """

    pairs: tuple[tuple[int, int], ...]
    complete: bool

    def multiplicity_sum(self) -> int:
        return sum(k for _, k in self.pairs)

    def moment(self, power: int) -> int:
        return sum(k * v**power for v, k in self.pairs)


def spectrum_from_pairs(
    pairs: Iterable[tuple[int, int]], complete: bool = True
) -> Spectrum:
    """Merge duplicate eigenvalues, drop empty entries, sort descending."""
    acc: dict[int, int] = {}
    for value, mult in pairs:
        if mult <= 0:
            continue
        acc[value] = acc.get(value, 0) + mult
    ordered = tuple(sorted(acc.items(), key=lambda p: -p[0]))
    return Spectrum(ordered, complete)


def spectrum_json(spectrum: Spectrum) -> list[dict]:
    return [{"value": v, "multiplicity": k} for v, k in spectrum.pairs]


def char_poly_json(poly: CharPoly) -> list[int]:
    """Coefficient array, constant term first."""
    return list(poly.coeffs)


@dataclass(frozen=True)
class SpectralAnalysis:
    """Outcome of the exact integrality decision for one graph."""

    integral: bool
    spectrum: Spectrum
    char_poly: CharPoly
    remainder: CharPoly
    max_degree: int


def char_poly(matrix: Sequence[Sequence[int]]) -> CharPoly:
    """Exact characteristic polynomial det(xI - A) of a symmetric matrix.

    The matrix is split into connected blocks by reachability; each block
    goes through the Faddeev-LeVerrier recurrence and is verified at
    t in {0, 1, -1} against an independent Bareiss determinant before the
    block polynomials are multiplied together.
    """
    # operator.index rejects floats, keeping the arithmetic exact
    a = [[_exact_int(v) for v in row] for row in matrix]
    n = len(a)
    for i, row in enumerate(a):
        if len(row) != n:
            raise NotSymmetricError(f"row {i} has {len(row)} entries, expected {n}")
    for i in range(n):
        if a[i][i] != 0:
            raise NonzeroDiagonalError(f"diagonal entry ({i},{i}) = {a[i][i]}")
        for j in range(i + 1, n):
            if a[i][j] != a[j][i]:
                raise NotSymmetricError(f"entries ({i},{j}) and ({j},{i}) differ")

    product = [1]
    for block in _support_blocks(a):
        sub = [[a[i][j] for j in block] for i in block]
        coeffs = _faddeev_leverrier(sub)
        _spot_check(coeffs, sub)
        product = _poly_mul(product, coeffs)
    return CharPoly(tuple(product))


def _support_blocks(a: list[list[int]]) -> list[list[int]]:
    n = len(a)
    seen = [False] * n
    blocks = []
    for start in range(n):
        if seen[start]:
            continue
        comp = [start]
        seen[start] = True
        stack = [start]
        while stack:
            u = stack.pop()
            for v in range(n):
                if not seen[v] and a[u][v] != 0:
                    seen[v] = True
                    comp.append(v)
                    stack.append(v)
        comp.sort()
        blocks.append(comp)
    return blocks


def _faddeev_leverrier(a: list[list[int]]) -> list[int]:
    """Coefficients of det(xI - A), ascending; divisions are exact."""
    n = len(a)
    coeffs = [0] * (n + 1)
    coeffs[n] = 1
    m = [[int(i == j) for j in range(n)] for i in range(n)]
    for step in range(1, n + 1):
        am = _mat_mul(a, m)
        trace = sum(am[i][i] for i in range(n))
        q, r = divmod(-trace, step)
        if r:
            raise ArithmeticError("trace division was not exact")
        coeffs[n - step] = q
        if step < n:
            for i in range(n):
                am[i][i] += q
            m = am
    return coeffs


def _mat_mul(a: list[list[int]], b: list[list[int]]) -> list[list[int]]:
    cols = list(zip(*b))
    return [[sum(x * y for x, y in zip(row, col)) for col in cols] for row in a]


def _spot_check(coeffs: list[int], a: list[list[int]]) -> None:
    n = len(a)
    for t in (0, 1, -1):
        shifted = [
            [(t if i == j else 0) - a[i][j] for j in range(n)] for i in range(n)
        ]
        expected = exact_determinant(shifted)
        acc = 0
        for c in reversed(coeffs):
            acc = acc * t + c
        if acc != expected:
            raise ArithmeticError(
                f"characteristic polynomial failed determinant check at t={t}"
            )


def exact_determinant(matrix: Sequence[Sequence[int]]) -> int:
    """Fraction-free Bareiss determinant over the integers."""
    a = [[_exact_int(v) for v in row] for row in matrix]
    n = len(a)
    for i, row in enumerate(a):
        if len(row) != n:
            raise NotSymmetricError(f"row {i} has {len(row)} entries, expected {n}")
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = a[k][k]
        row_k = a[k]
        for i in range(k + 1, n):
            row_i = a[i]
            factor = row_i[k]
            a[i] = row_i[: k + 1] + [
                (x * pivot - factor * y) // prev
                for x, y in zip(row_i[k + 1 :], row_k[k + 1 :])
            ]
        prev = pivot
    return sign * a[n - 1][n - 1]


def integer_spectrum(
    poly: CharPoly, max_abs_root: int
) -> tuple[Spectrum, CharPoly]:
    """Extract all integer roots with |root| <= max_abs_root.

    Roots at zero are peeled off by stripping trailing zero coefficients;
    the remaining candidates are scanned from +bound down to -bound and
    divided out by exact synthetic division to full multiplicity.  The
    returned remainder has no integer roots within the bound, and the
    spectrum is complete exactly when the remainder is constant.
    """
    if poly.coeffs[-1] != 1:
        raise NotMonicError("integer root extraction needs a monic polynomial")
    desc = list(reversed(poly.coeffs))
    found: list[tuple[int, int]] = []

    zeros = 0
    while len(desc) > 1 and desc[-1] == 0:
        desc.pop()
        zeros += 1
    if zeros:
        found.append((0, zeros))

    for r in range(max_abs_root, -max_abs_root - 1, -1):
        if r == 0:
            continue
        mult = 0
        while len(desc) > 1:
            quotient, rem = _divide_linear(desc, r)
            if rem != 0:
                break
            desc = quotient
            mult += 1
        if mult:
            found.append((r, mult))

    remainder = CharPoly(tuple(reversed(desc)))
    spectrum = spectrum_from_pairs(found, complete=remainder.degree == 0)
    return spectrum, remainder


def _divide_linear(desc: list[int], r: int) -> tuple[list[int], int]:
    # synthetic division of a descending-coefficient polynomial by (x - r)
    out = [desc[0]]
    for c in desc[1:-1]:
        out.append(out[-1] * r + c)
    rem = out[-1] * r + desc[-1]
    return out, rem


def is_integral(graph: CommutingGraph) -> SpectralAnalysis:
    """Decide integrality of the graph's adjacency spectrum, exactly."""
    cp = char_poly(graph.to_matrix())
    bound = max(
        (graph.degree(i) for i in range(graph.vertex_count)), default=0
    )
    spectrum, remainder = integer_spectrum(cp, bound)
    return SpectralAnalysis(
        integral=spectrum.complete,
        spectrum=spectrum,
        char_poly=cp,
        remainder=remainder,
        max_degree=bound,
    )


def clique_union_spectrum(sizes: Iterable[int]) -> Spectrum:
    """Closed-form spectrum of a disjoint union of complete graphs.

    Each K_m contributes (m-1) once; the eigenvalue -1 is pooled with
    multiplicity sum(m_i) - l over the l cliques.
    """
    size_list = list(sizes)
    if not size_list:
        raise EmptyInputError("need at least one clique size")
    for m in size_list:
        if m < 1:
            raise ParameterOutOfRange(f"clique sizes must be positive, got {m}")
    pairs = [(m - 1, 1) for m in size_list]
    pairs.append((-1, sum(size_list) - len(size_list)))
    return spectrum_from_pairs(pairs)


def spectra_agree(a: Spectrum, b: Spectrum) -> bool:
    """Exact multiset equality of two complete spectra."""
    if not a.complete or not b.complete:
        raise IncompleteSpectrumError("can only compare complete spectra")
    return a.pairs == b.pairs


def _poly_mul(a: Sequence[int], b: Sequence[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out
