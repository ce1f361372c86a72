"""Curve neighborhoods of Schubert varieties, computed two independent ways.

``gamma_bfs`` searches the moment graph with a componentwise degree budget,
starting from the full lower set of the base label, and returns the Bruhat
maxima of everything reached.  ``gamma_closed_form`` evaluates the closed
expressions directly.  ``cross_check`` asserts the two agree cell by cell;
they are deliberately kept independent of each other.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass
from typing import Iterable

from .errors import DomainError
from .moment import Degree, MomentGraph, build_moment_graph
from .weyl import FlagLabel, bar_value, bruhat_leq, down_set, top_label

__all__ = [
    "SchubertUnion",
    "maximal_union",
    "union_leq",
    "gamma_bfs",
    "gamma_closed_form",
    "CrossCheckReport",
    "cross_check",
    "degree_grid",
]


@dataclass(frozen=True)
class SchubertUnion:
    """A finite union of Schubert varieties, recorded by its maximal labels.

    Components must form a nonempty Bruhat antichain of a single rank;
    they are stored in canonical (length, rank a, rank b) order.
    """

    components: tuple[FlagLabel, ...]

    def __post_init__(self) -> None:
        comps = tuple(sorted(set(self.components), key=lambda w: w.sort_key))
        if not comps:
            raise DomainError("a Schubert union has at least one component")
        if len({w.n for w in comps}) != 1:
            raise DomainError("components must share one rank")
        for x, y in itertools.combinations(comps, 2):
            if bruhat_leq(x, y) or bruhat_leq(y, x):
                raise DomainError(f"components {x} and {y} are comparable")
        object.__setattr__(self, "components", comps)

    @property
    def n(self) -> int:
        return self.components[0].n

    def __str__(self) -> str:
        return ", ".join(str(w) for w in self.components)

    def __iter__(self):
        return iter(self.components)


def maximal_union(labels: Iterable[FlagLabel]) -> SchubertUnion:
    """The union spanned by the Bruhat-maximal elements of ``labels``."""
    labs = set(labels)
    maxima = [
        x for x in labs if not any(x != y and bruhat_leq(x, y) for y in labs)
    ]
    return SchubertUnion(tuple(maxima))


def union_leq(lhs: SchubertUnion, rhs: SchubertUnion) -> bool:
    """Containment of the represented varieties."""
    if lhs.n != rhs.n:
        raise DomainError(f"rank mismatch: {lhs.n} vs {rhs.n}")
    return all(any(bruhat_leq(u, v) for v in rhs) for u in lhs)


def gamma_bfs(
    w: FlagLabel, d: Degree, graph: MomentGraph | None = None
) -> SchubertUnion:
    """Degree-budgeted search for the curve neighborhood of X(w).

    States are (vertex, spent degree); spends are two-dimensional, so a
    plain visited set is wrong and a state is pruned only when the same
    vertex was already reached with a componentwise-smaller spend.
    """
    g = build_moment_graph(w.n) if graph is None else graph
    spent: dict[FlagLabel, list[Degree]] = {}
    queue: deque[tuple[FlagLabel, Degree]] = deque()
    zero = Degree(0, 0)
    for u in down_set(w):
        spent[u] = [zero]
        queue.append((u, zero))
    while queue:
        v, used = queue.popleft()
        for x, edeg, _root in g.neighbors[v]:
            nxt = used + edeg
            if not nxt <= d:
                continue
            pareto = spent.setdefault(x, [])
            if any(old <= nxt for old in pareto):
                continue
            pareto[:] = [old for old in pareto if not nxt <= old]
            pareto.append(nxt)
            queue.append((x, nxt))
    return maximal_union(spent.keys())


def gamma_closed_form(w: FlagLabel, d: Degree) -> SchubertUnion:
    """Closed-form curve neighborhood of X(w) in degree d.

    Degrees are first normalized to the stable regime representative
    (min(d1,1), min(d2,2)): raising d1 beyond 1, or d2 beyond 1 (beyond 2
    when d1 >= 1), never changes the answer.  The table, for w = (a|b):

    * (0,0): X(a|b).
    * (d1>=1, 0): X(a|b) when a > b, else X(b|a).
    * (0, d2>=1): column two sweeps to its maximum while column one stays
      fixed, giving X(a|-3) for a in {2,-2} and X(a|-2) otherwise.  When
      a = 2 the lower set of (a|b) also contains labels with first value
      1, and their sweep ends at X(1|-2), which has the same length 2n-1
      as X(2|-3); the result then carries both components.
    * (d1>=1, 1): X(-3|2) u X(-2|1) for the two bottom labels (1|2) and
      (2|1); the top when -2 is among {a,b}; X(-2|max(a,b)) otherwise.
    * (d1>=1, d2>=2): the top.
    """
    n = w.n
    a, b = w.a, w.b
    one, two, btwo, bthree = bar_value(1), bar_value(2), bar_value(-2), bar_value(-3)
    reg = (min(d.d1, 1), min(d.d2, 2))
    if reg == (0, 0):
        return SchubertUnion((w,))
    if reg == (1, 0):
        if a > b:
            return SchubertUnion((w,))
        return SchubertUnion((FlagLabel(b, a, n),))
    if reg[0] == 0:  # (0, d2 >= 1)
        if a == two:
            return SchubertUnion(
                (FlagLabel(two, bthree, n), FlagLabel(one, btwo, n))
            )
        target = bthree if a == btwo else btwo
        return SchubertUnion((FlagLabel(a, target, n),))
    if reg == (1, 1):
        if {a, b} == {one, two}:
            return SchubertUnion(
                (FlagLabel(bthree, two, n), FlagLabel(btwo, one, n))
            )
        if btwo in (a, b):
            return SchubertUnion((top_label(n),))
        return SchubertUnion((FlagLabel(btwo, max(a, b), n),))
    return SchubertUnion((top_label(n),))  # (d1 >= 1, d2 >= 2)


def degree_grid(dmax: Degree) -> tuple[Degree, ...]:
    """All degrees below ``dmax``, in (d1, d2) order."""
    return tuple(
        Degree(d1, d2)
        for d1 in range(dmax.d1 + 1)
        for d2 in range(dmax.d2 + 1)
    )


@dataclass(frozen=True)
class CrossCheckReport:
    """Outcome of comparing the search and the closed form on a full grid."""

    n: int
    dmax: Degree
    cells: int
    mismatches: tuple[tuple[FlagLabel, Degree, SchubertUnion, SchubertUnion], ...]

    @property
    def ok(self) -> bool:
        return not self.mismatches

    def summary(self) -> str:
        if self.ok:
            return f"n={self.n}: {self.cells} cells agree up to d={self.dmax}"
        worst = self.mismatches[0]
        return (
            f"n={self.n}: {len(self.mismatches)} of {self.cells} cells disagree; "
            f"first at w={worst[0]}, d={worst[1]}: "
            f"search gives [{worst[2]}], closed form gives [{worst[3]}]"
        )


def cross_check(n: int, dmax: Degree) -> CrossCheckReport:
    """Compare gamma_bfs with gamma_closed_form everywhere below dmax."""
    g = build_moment_graph(n)
    mismatches = []
    cells = 0
    for w in g.vertices:
        for d in degree_grid(dmax):
            cells += 1
            found = gamma_bfs(w, d, g)
            stated = gamma_closed_form(w, d)
            if found != stated:
                mismatches.append((w, d, found, stated))
    return CrossCheckReport(n, dmax, cells, tuple(mismatches))
