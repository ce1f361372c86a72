"""Curve-neighborhood lattices: build, check lattice/distributivity, classify.

For a base label w the distinct values of the closed-form neighborhood over
the representative degrees (0,0), (1,0), (0,1), (1,1), (1,2) exhaust all
neighborhood values; ordered by containment they form a small poset with
at most five elements.  ``is_distributive`` evaluates the distributive law
over all triples and, independently, hunts for five-element sublattices
shaped like the diamond M3 or the pentagon N5, and insists the two verdicts
agree.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Sequence

from .errors import DomainError, VerificationError
from .moment import Degree
from .neighborhoods import SchubertUnion, gamma_closed_form, union_leq
from .weyl import FlagLabel, bar_value, top_label

__all__ = [
    "REPRESENTATIVE_DEGREES",
    "CNLattice",
    "FinitePoset",
    "poset_from_covers",
    "build_cn_lattice",
    "is_lattice",
    "is_distributive",
    "classify_shape",
    "figure_shape_predicate",
    "SHAPE_TAGS",
    "m3_poset",
    "n5_poset",
    "hasse_edges",
    "to_dot",
    "to_json_dict",
]

REPRESENTATIVE_DEGREES: tuple[Degree, ...] = (
    Degree(0, 0),
    Degree(1, 0),
    Degree(0, 1),
    Degree(1, 1),
    Degree(1, 2),
)

SHAPE_TAGS = (
    "trivial",
    "2-chain",
    "3-chain-via-(0,1)",
    "3-chain-via-(1,0)",
    "4-chain",
    "diamond",
    "diamond-plus-top",
)

OrderMatrix = tuple[tuple[bool, ...], ...]


@dataclass(frozen=True)
class FinitePoset:
    """A finite poset given by its full order matrix; order[i][j] iff i <= j."""

    order: OrderMatrix

    def __post_init__(self) -> None:
        m = self.order
        size = len(m)
        if any(len(row) != size for row in m):
            raise DomainError("order matrix must be square")
        for i in range(size):
            if not m[i][i]:
                raise DomainError("order must be reflexive")
            for j in range(size):
                if i != j and m[i][j] and m[j][i]:
                    raise DomainError(f"order not antisymmetric at ({i},{j})")
                for k in range(size):
                    if m[i][j] and m[j][k] and not m[i][k]:
                        raise DomainError(f"order not transitive at ({i},{j},{k})")

    @property
    def size(self) -> int:
        return len(self.order)


def poset_from_covers(size: int, cover_pairs: Sequence[tuple[int, int]]) -> FinitePoset:
    """Reflexive-transitive closure of a cover relation (i covered by j)."""
    leq = [[i == j for j in range(size)] for i in range(size)]
    for i, j in cover_pairs:
        leq[i][j] = True
    for k in range(size):
        for i in range(size):
            if leq[i][k]:
                row_k = leq[k]
                row_i = leq[i]
                for j in range(size):
                    if row_k[j]:
                        row_i[j] = True
    return FinitePoset(tuple(tuple(row) for row in leq))


def m3_poset() -> FinitePoset:
    """Bottom, three pairwise incomparable atoms, top."""
    return poset_from_covers(5, [(0, 1), (0, 2), (0, 3), (1, 4), (2, 4), (3, 4)])


def n5_poset() -> FinitePoset:
    """The pentagon: 0 < c < a < 1 and 0 < b < 1 with b off the chain."""
    return poset_from_covers(5, [(0, 2), (2, 3), (3, 4), (0, 1), (1, 4)])


@dataclass(frozen=True)
class CNLattice:
    """The poset of curve neighborhoods of one base label.

    ``elements[i]`` is witnessed by ``witnesses[i]``, the first
    representative degree producing it; ``order[i][j]`` holds iff
    elements[i] is contained in elements[j].
    """

    base: FlagLabel
    elements: tuple[SchubertUnion, ...]
    order: OrderMatrix
    witnesses: tuple[Degree, ...]

    def __post_init__(self) -> None:
        FinitePoset(self.order)  # partial-order axioms
        bottom = SchubertUnion((self.base,))
        top = SchubertUnion((top_label(self.base.n),))
        if bottom not in self.elements or top not in self.elements:
            raise VerificationError("lattice must contain its base and the top")
        i0 = self.elements.index(bottom)
        i1 = self.elements.index(top)
        if not all(self.order[i0][j] and self.order[j][i1] for j in range(len(self.elements))):
            raise VerificationError("base must be the minimum and the top the maximum")

    @property
    def size(self) -> int:
        return len(self.elements)


def build_cn_lattice(w: FlagLabel) -> CNLattice:
    """Collect the distinct neighborhood values of w and order them."""
    elements: list[SchubertUnion] = []
    witnesses: list[Degree] = []
    for d in REPRESENTATIVE_DEGREES:
        value = gamma_closed_form(w, d)
        if value not in elements:
            elements.append(value)
            witnesses.append(d)
    order = tuple(
        tuple(union_leq(x, y) for y in elements) for x in elements
    )
    return CNLattice(w, tuple(elements), order, tuple(witnesses))


def _bound_tables(order: OrderMatrix) -> tuple[list[list[int | None]], list[list[int | None]]]:
    """Least-upper-bound and greatest-lower-bound tables, None where missing."""
    size = len(order)
    join: list[list[int | None]] = [[None] * size for _ in range(size)]
    meet: list[list[int | None]] = [[None] * size for _ in range(size)]
    for a in range(size):
        for b in range(size):
            ubs = [k for k in range(size) if order[a][k] and order[b][k]]
            least = [k for k in ubs if all(order[k][m] for m in ubs)]
            if len(least) == 1:
                join[a][b] = least[0]
            lbs = [k for k in range(size) if order[k][a] and order[k][b]]
            greatest = [k for k in lbs if all(order[m][k] for m in lbs)]
            if len(greatest) == 1:
                meet[a][b] = greatest[0]
    return join, meet


def is_lattice(lat: CNLattice | FinitePoset) -> bool:
    """Every pair has a unique least upper and greatest lower bound."""
    join, meet = _bound_tables(lat.order)
    return all(
        join[a][b] is not None and meet[a][b] is not None
        for a in range(len(lat.order))
        for b in range(len(lat.order))
    )


def _violates_triple_law(order: OrderMatrix) -> bool:
    join, meet = _bound_tables(order)
    size = len(order)
    for a, b, c in itertools.product(range(size), repeat=3):
        if join[a][meet[b][c]] != meet[join[a][b]][join[a][c]]:  # type: ignore[index]
            return True
    return False


def _sublattice_shapes(order: OrderMatrix) -> bool:
    """True iff some 5-element subset closed under join/meet is M3 or N5."""
    join, meet = _bound_tables(order)
    size = len(order)
    for sub in itertools.combinations(range(size), 5):
        inside = set(sub)
        if any(
            join[a][b] not in inside or meet[a][b] not in inside
            for a, b in itertools.combinations(sub, 2)
        ):
            continue
        bottoms = [a for a in sub if all(order[a][b] for b in sub)]
        tops = [a for a in sub if all(order[b][a] for b in sub)]
        if len(bottoms) != 1 or len(tops) != 1:
            continue
        middles = [a for a in sub if a not in (bottoms[0], tops[0])]
        comparable = sum(
            1
            for a, b in itertools.combinations(middles, 2)
            if order[a][b] or order[b][a]
        )
        if comparable in (0, 1):  # 0 middle relations: M3; exactly 1: N5
            return True
    return False


def is_distributive(lat: CNLattice | FinitePoset) -> bool:
    """Distributivity, decided twice: triple law and forbidden sublattices.

    The two routes must agree; disagreement indicates a bug in one of
    them, not a property of the input.
    """
    if not is_lattice(lat):
        raise DomainError("distributivity is only defined for lattices")
    by_law = not _violates_triple_law(lat.order)
    by_shape = not _sublattice_shapes(lat.order)
    if by_law != by_shape:
        raise VerificationError(
            f"distributivity verdicts disagree: triple law {by_law}, "
            f"sublattice hunt {by_shape}"
        )
    return by_law


def figure_shape_predicate(w: FlagLabel) -> str:
    """Shape expected from the base label alone.

    The seven predicates partition the label set: the top label is
    trivial; a = -2 or (a|b) = (-3|-2) give a 2-chain; a = -3 a 3-chain
    through the (0,1) value; b = -2 a 3-chain through the (1,0) value;
    b = -3 a diamond; the remaining labels give a 4-chain when a > b and
    a diamond plus a new top when a < b.
    """
    a, b = w.a, w.b
    btwo, bthree = bar_value(-2), bar_value(-3)
    if w == top_label(w.n):
        return "trivial"
    if a == btwo or (a, b) == (bthree, btwo):
        return "2-chain"
    if a == bthree:
        return "3-chain-via-(0,1)"
    if b == btwo:
        return "3-chain-via-(1,0)"
    if b == bthree:
        return "diamond"
    return "4-chain" if a > b else "diamond-plus-top"


def _structural_shape(lat: CNLattice) -> str:
    order = lat.order
    size = lat.size
    n_rel = sum(
        1
        for i, j in itertools.combinations(range(size), 2)
        if order[i][j] or order[j][i]
    )
    chain = n_rel == size * (size - 1) // 2
    if size == 1:
        return "trivial"
    if size == 2:
        return "2-chain"
    if size == 3 and chain:
        middle = next(
            i
            for i in range(size)
            if not all(order[i][j] for j in range(size))
            and not all(order[j][i] for j in range(size))
        )
        wit = lat.witnesses[middle]
        if wit == Degree(0, 1):
            return "3-chain-via-(0,1)"
        if wit == Degree(1, 0):
            return "3-chain-via-(1,0)"
        raise VerificationError(f"3-chain middle witnessed by unexpected degree {wit}")
    if size == 4 and chain:
        return "4-chain"
    if size == 4:
        return "diamond"
    if size == 5 and not chain:
        # bottom < {m1, m2} incomparable, their join, then the top
        middles = [
            i
            for i in range(size)
            if not all(order[i][j] for j in range(size))
            and not all(order[j][i] for j in range(size))
        ]
        comparable = [
            (i, j)
            for i, j in itertools.combinations(middles, 2)
            if order[i][j] or order[j][i]
        ]
        if len(comparable) == 2:
            return "diamond-plus-top"
    raise VerificationError(f"unrecognized lattice shape of size {size}")


def classify_shape(lat: CNLattice) -> str:
    """Structural shape tag, checked against the base-label predicate."""
    shape = _structural_shape(lat)
    expected = figure_shape_predicate(lat.base)
    if shape != expected:
        raise VerificationError(
            f"lattice of {lat.base} is a {shape} but its label predicts {expected}"
        )
    return shape


def hasse_edges(lat: CNLattice | FinitePoset) -> tuple[tuple[int, int], ...]:
    """Cover pairs (i, j) with element i covered by element j."""
    order = lat.order
    size = len(order)
    out = []
    for i, j in itertools.permutations(range(size), 2):
        if not order[i][j]:
            continue
        if any(k not in (i, j) and order[i][k] and order[k][j] for k in range(size)):
            continue
        out.append((i, j))
    return tuple(sorted(out))


def to_dot(lat: CNLattice) -> str:
    """Hasse diagram drawn bottom-up, one node per neighborhood value."""
    names = [str(e) for e in lat.elements]
    lines = [f'digraph lattice {{', '  rankdir=BT;', '  node [shape=box];']
    lines.extend(f'  v{i} [label="{name}"];' for i, name in enumerate(names))
    lines.extend(
        f"  v{i} -> v{j} [arrowhead=none];" for i, j in hasse_edges(lat)
    )
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_json_dict(lat: CNLattice) -> dict:
    return {
        "schema": "oddflag.lattice/1",
        "base": str(lat.base),
        "elements": [[str(w) for w in e] for e in lat.elements],
        "hasse": [list(p) for p in hasse_edges(lat)],
        "shape": classify_shape(lat),
    }
