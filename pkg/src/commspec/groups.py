"""Finite groups as validated Cayley tables with 0-based element indices.

Element 0 is always the identity; the constructor relabels elements when the
identity sits elsewhere.  Every value here is immutable after construction
and all operations are pure functions, so groups and derived data can be
shared freely between workers.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import isqrt
from typing import Iterable, Sequence

from .errors import (
    AbelianGroupError,
    AxiomViolation,
    IndexOutOfRange,
    ParseError,
)


@dataclass(frozen=True)
class FiniteGroup:
    """A finite group given by its full multiplication table.

    ``table[i][j]`` is the index of the product of elements i and j.
    Use :func:`from_cayley_table` to build one; it enforces the axioms.
    """

    table: tuple[tuple[int, ...], ...]
    names: tuple[str, ...]

    @property
    def order(self) -> int:
        return len(self.table)

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def inverse(self, a: int) -> int:
        return self.table[a].index(0)

    def power(self, a: int, k: int) -> int:
        if k < 0:
            return self.power(self.inverse(a), -k)
        acc = 0
        for _ in range(k):
            acc = self.table[acc][a]
        return acc

    def element_order(self, a: int) -> int:
        acc = a
        k = 1
        while acc != 0:
            acc = self.table[acc][a]
            k += 1
        return k

    def is_abelian(self) -> bool:
        table = self.table
        return all(
            table[i][j] == table[j][i]
            for i in range(len(table))
            for j in range(i + 1, len(table))
        )

    def commutes(self, a: int, b: int) -> bool:
        return self.table[a][b] == self.table[b][a]


@dataclass(frozen=True)
class Center:
    """Sorted indices of the elements commuting with everything."""

    members: tuple[int, ...]

    @property
    def size(self) -> int:
        return len(self.members)


@dataclass(frozen=True)
class Centralizer:
    """Sorted indices of the elements commuting with element ``of``."""

    of: int
    members: tuple[int, ...]

    @property
    def size(self) -> int:
        return len(self.members)


@dataclass(frozen=True)
class QuotientGroup:
    """The quotient by the center, plus the element-to-coset map."""

    group: FiniteGroup
    coset_of: tuple[int, ...]
    cosets: tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class Recognition:
    """Result of small-catalog shape recognition.

    ``kind`` is ``"zpzp"`` (elementary abelian p x p, ``param`` = p),
    ``"dihedral"`` (order 2*param), or ``"other"``.
    """

    kind: str
    param: int = 0


def from_cayley_table(
    table: Sequence[Sequence[int]], names: Sequence[str] | None = None
) -> FiniteGroup:
    """Validate a multiplication table exhaustively and wrap it.

    All three group axioms are checked on every element (triple, for
    associativity).  If the two-sided identity is not element 0, the table
    is relabelled so that it is.
    """
    rows = [list(row) for row in table]
    n = len(rows)
    if n == 0:
        raise IndexOutOfRange("table is empty")
    for i, row in enumerate(rows):
        if len(row) != n:
            raise IndexOutOfRange(f"row {i} has {len(row)} entries, expected {n}")
        for j, v in enumerate(row):
            if not isinstance(v, int) or isinstance(v, bool) or not 0 <= v < n:
                raise IndexOutOfRange(f"entry ({i},{j}) = {v!r} not in 0..{n - 1}")

    if names is not None:
        name_list = [str(s) for s in names]
        if len(name_list) != n:
            raise IndexOutOfRange(f"{len(name_list)} names for {n} elements")
    else:
        name_list = [f"g{i}" for i in range(n)]

    ident = _find_identity(rows)
    if ident is None:
        raise AxiomViolation("identity", "no two-sided identity element")
    if ident != 0:
        rows, name_list = _swap_to_front(rows, name_list, ident)

    for i in range(n):
        hits = rows[i].count(0)
        if hits != 1:
            raise AxiomViolation(
                "inverse", f"element {i} has {hits} right inverses, expected 1"
            )

    for i in range(n):
        row_i = rows[i]
        for j in range(n):
            left = rows[row_i[j]]
            right = [row_i[x] for x in rows[j]]
            if left != right:
                k = next(k for k in range(n) if left[k] != right[k])
                raise AxiomViolation(
                    "associativity", f"({i}*{j})*{k} != {i}*({j}*{k})"
                )

    return FiniteGroup(tuple(tuple(r) for r in rows), tuple(name_list))


def _find_identity(rows: list[list[int]]) -> int | None:
    n = len(rows)
    straight = list(range(n))
    for e in range(n):
        if rows[e] == straight and all(rows[i][e] == i for i in range(n)):
            return e
    return None


def _swap_to_front(
    rows: list[list[int]], names: list[str], e: int
) -> tuple[list[list[int]], list[str]]:
    n = len(rows)
    perm = list(range(n))
    perm[0], perm[e] = e, 0
    new_rows = [[perm[rows[perm[i]][perm[j]]] for j in range(n)] for i in range(n)]
    new_names = [names[perm[i]] for i in range(n)]
    return new_rows, new_names


def center(group: FiniteGroup) -> Center:
    """Exact center by exhaustive commutation check."""
    table = group.table
    n = group.order
    members = tuple(
        z for z in range(n) if all(table[z][g] == table[g][z] for g in range(n))
    )
    return Center(members)


def centralizer(group: FiniteGroup, x: int) -> Centralizer:
    """All elements commuting with ``x``, found by brute force."""
    if not 0 <= x < group.order:
        raise IndexOutOfRange(f"element {x} not in 0..{group.order - 1}")
    table = group.table
    row_x = table[x]
    members = tuple(y for y in range(group.order) if row_x[y] == table[y][x])
    return Centralizer(x, members)


def centralizer_count(group: FiniteGroup) -> int:
    """Number of distinct centralizer subgroups (member sets)."""
    distinct = {centralizer(group, x).members for x in range(group.order)}
    return len(distinct)


def quotient_by_center(group: FiniteGroup) -> QuotientGroup:
    """Quotient by the center, with well-definedness checked per coset pair.

    The coset of the identity is index 0; the remaining cosets are ordered
    by their smallest element, so construction is deterministic.
    """
    z = center(group).members
    n = group.order
    coset_of = [-1] * n
    cosets: list[tuple[int, ...]] = []
    for x in range(n):
        if coset_of[x] >= 0:
            continue
        members = tuple(sorted(group.mul(x, zi) for zi in z))
        idx = len(cosets)
        cosets.append(members)
        for m in members:
            coset_of[m] = idx

    q = len(cosets)
    q_table = [[0] * q for _ in range(q)]
    for i, ci in enumerate(cosets):
        for j, cj in enumerate(cosets):
            expected = coset_of[group.mul(ci[0], cj[0])]
            for a in ci:
                for b in cj:
                    if coset_of[group.mul(a, b)] != expected:
                        raise RuntimeError(
                            "coset product depends on representatives; "
                            "the designated subgroup is not the center"
                        )
            q_table[i][j] = expected

    q_names = tuple(
        "Z" if i == 0 else f"{group.names[c[0]]}Z" for i, c in enumerate(cosets)
    )
    quotient = from_cayley_table(q_table, q_names)
    return QuotientGroup(quotient, tuple(coset_of), tuple(cosets))


def recognize_small(group: FiniteGroup) -> Recognition:
    """Recognize elementary abelian p x p and dihedral groups.

    Order-4 groups of exponent 2 satisfy both shapes; they are reported as
    ``zpzp`` with p = 2.  Everything else is ``other``.
    """
    n = group.order
    p = isqrt(n)
    if p * p == n and is_prime(p) and group.is_abelian():
        if all(group.element_order(x) == p for x in range(1, n)):
            return Recognition("zpzp", p)
    if n >= 4 and n % 2 == 0:
        m = n // 2
        rotations = [r for r in range(1, n) if group.element_order(r) == m]
        involutions = [s for s in range(1, n) if group.element_order(s) == 2]
        for r in rotations:
            r_inv = group.inverse(r)
            for s in involutions:
                if group.mul(group.mul(s, r), s) != r_inv:
                    continue
                if _generates(group, (r, s)):
                    return Recognition("dihedral", m)
    return Recognition("other")


def _generates(group: FiniteGroup, gens: Iterable[int]) -> bool:
    span = {0}
    frontier = [0]
    gen_list = list(gens)
    while frontier:
        x = frontier.pop()
        for g in gen_list:
            y = group.mul(x, g)
            if y not in span:
                span.add(y)
                frontier.append(y)
    return len(span) == group.order


def max_noncommuting_set(group: FiniteGroup) -> list[int]:
    """A maximum set of pairwise non-commuting elements.

    Exact branch-and-bound maximum clique in the non-commuting graph on the
    non-central elements, with a greedy-coloring bound.  Returns one witness
    as sorted element indices.
    """
    if group.is_abelian():
        raise AbelianGroupError("every pair of elements commutes")
    z = set(center(group).members)
    verts = [x for x in range(group.order) if x not in z]
    k = len(verts)
    adj = [0] * k
    for i in range(k):
        for j in range(i + 1, k):
            if not group.commutes(verts[i], verts[j]):
                adj[i] |= 1 << j
                adj[j] |= 1 << i
    best = _max_clique(adj)
    return sorted(verts[i] for i in best)


def _max_clique(adj: list[int]) -> list[int]:
    n = len(adj)
    best: list[int] = []

    def color_order(cand: int) -> tuple[list[int], list[int]]:
        order: list[int] = []
        bounds: list[int] = []
        color = 0
        rest = cand
        while rest:
            color += 1
            avail = rest
            while avail:
                v = (avail & -avail).bit_length() - 1
                bit = 1 << v
                avail &= ~(adj[v] | bit)
                rest &= ~bit
                order.append(v)
                bounds.append(color)
        return order, bounds

    def expand(clique: list[int], cand: int) -> None:
        nonlocal best
        order, bounds = color_order(cand)
        for i in range(len(order) - 1, -1, -1):
            if len(clique) + bounds[i] <= len(best):
                return
            v = order[i]
            clique.append(v)
            nxt = cand & adj[v]
            if nxt:
                expand(clique, nxt)
            elif len(clique) > len(best):
                best = clique[:]
            clique.pop()
            cand &= ~(1 << v)

    if n:
        expand([], (1 << n) - 1)
    return best


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def prime_power(n: int) -> tuple[int, int] | None:
    """Return (p, k) with n = p**k and p prime, or None."""
    if n < 2:
        return None
    p = 2
    while p * p <= n:
        if n % p == 0:
            k = 0
            m = n
            while m % p == 0:
                m //= p
                k += 1
            return (p, k) if m == 1 else None
        p += 1
    return (n, 1)


# Cayley-table text format: line 1 holds n, the next n lines hold n
# space-separated 0-based indices, and an optional trailing "names:" section
# holds n whitespace-separated labels.  Element 0 must be the identity.


def parse_cayley_text(text: str) -> tuple[list[list[int]], list[str] | None]:
    lines = [line.strip() for line in text.splitlines()]
    lines = [line for line in lines if line]
    if not lines:
        raise ParseError("empty Cayley-table text")
    try:
        n = int(lines[0])
    except ValueError:
        raise ParseError(f"first line must be the order, got {lines[0]!r}") from None
    if n <= 0:
        raise ParseError(f"order must be positive, got {n}")
    if len(lines) < n + 1:
        raise ParseError(f"expected {n} table rows, found {len(lines) - 1}")
    table: list[list[int]] = []
    for i in range(1, n + 1):
        parts = lines[i].split()
        try:
            row = [int(tok) for tok in parts]
        except ValueError:
            raise ParseError(f"row {i - 1} contains a non-integer token") from None
        if len(row) != n:
            raise ParseError(f"row {i - 1} has {len(row)} entries, expected {n}")
        table.append(row)
    rest = lines[n + 1 :]
    if not rest:
        return table, None
    if not rest[0].startswith("names:"):
        raise ParseError(f"unexpected trailing line {rest[0]!r}")
    tokens = rest[0][len("names:") :].split()
    for line in rest[1:]:
        tokens.extend(line.split())
    if len(tokens) != n:
        raise ParseError(f"names section has {len(tokens)} labels, expected {n}")
    return table, tokens


def from_cayley_text(text: str) -> FiniteGroup:
    table, names = parse_cayley_text(text)
    return from_cayley_table(table, names)


def load_cayley_file(path: str) -> FiniteGroup:
    with open(path, "r", encoding="utf-8") as handle:
        try:
            text = handle.read()
        except UnicodeDecodeError as exc:
            raise ParseError(f"{path} is not UTF-8 text: {exc}") from None
    return from_cayley_text(text)


def format_cayley_text(group: FiniteGroup) -> str:
    lines = [str(group.order)]
    for row in group.table:
        lines.append(" ".join(str(v) for v in row))
    lines.append("names: " + " ".join(group.names))
    return "\n".join(lines) + "\n"
