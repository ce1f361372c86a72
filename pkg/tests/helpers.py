"""Brute-force oracles shared by the test modules.

Everything here recomputes structures from first principles, independently
of the package's production code paths, so that agreement is meaningful.
"""

from __future__ import annotations

from collections import defaultdict

from oddflag.weyl import (
    SignedPermutation,
    all_positive_roots,
    all_signed_permutations,
)


def closure_oracle(n):
    """Bruhat order on the full group as a reflection-cover closure.

    Covers are u -> u*s for every reflection s raising the length by
    exactly one; the order is the transitive closure.  Returns a
    predicate on pairs of SignedPermutations.
    """
    perms = list(all_signed_permutations(n))
    idx = {p: i for i, p in enumerate(perms)}
    lens = [p.coxeter_length() for p in perms]
    roots = all_positive_roots(n)
    succ: list[list[int]] = [[] for _ in perms]
    for p in perms:
        i = idx[p]
        for r in roots:
            j = idx[p.apply_reflection(r)]
            if lens[j] == lens[i] + 1:
                succ[i].append(j)
    reach: list[set[int] | None] = [None] * len(perms)
    for i in sorted(range(len(perms)), key=lambda k: -lens[k]):
        acc = {i}
        stack = list(succ[i])
        while stack:
            j = stack.pop()
            if reach[j] is not None:
                acc |= reach[j]  # type: ignore[arg-type]
            elif j not in acc:
                acc.add(j)
                stack.extend(succ[j])
        reach[i] = acc

    def leq(u: SignedPermutation, v: SignedPermutation) -> bool:
        return idx[v] in reach[idx[u]]  # type: ignore[operator]

    return leq


def brute_cosets(n):
    """Group the full group by the first two one-line values."""
    groups: dict[tuple, list[SignedPermutation]] = defaultdict(list)
    for p in all_signed_permutations(n):
        groups[(p.values[0], p.values[1])].append(p)
    return groups


def even_moment_edges(n):
    """Moment-graph edges of the even (unrestricted) label set.

    Built by full signed-permutation arithmetic: fill the minimal
    representative, multiply by each non-parabolic reflection, and read
    the new coset off the first two values.  Returns frozensets
    {(a, b), (a', b')} paired with the root, without any odd filtering.
    """
    from oddflag.weyl import BarValue, alphabet, moment_roots

    edges = set()
    letters = alphabet(n)
    for a in letters:
        for b in letters:
            if a.letter == b.letter:
                continue
            used = {a.letter, b.letter}
            trailing = tuple(
                BarValue(k) for k in range(1, n + 2) if k not in used
            )
            rep = SignedPermutation((a, b) + trailing)
            for root in moment_roots(n):
                product = rep.apply_reflection(root)
                target = product.first_two()
                if target != (a, b):
                    edges.add((frozenset(((a, b), target)), root))
    return edges


def simple_cycle_lengths(succ, max_len):
    """Lengths of simple directed cycles up to max_len edges.

    Each cycle is found once, rooted at its index-minimal vertex.
    """
    verts = sorted(succ, key=str)
    index = {v: i for i, v in enumerate(verts)}
    lengths: set[int] = set()

    def dfs(start, v, depth, visited):
        for w in succ[v]:
            if w == start:
                lengths.add(depth + 1)
            elif index[w] > index[start] and w not in visited and depth + 1 < max_len:
                visited.add(w)
                dfs(start, w, depth + 1, visited)
                visited.remove(w)

    for s in verts:
        dfs(s, s, 0, {s})
    return lengths


def oracle_min_coset_member(members):
    """The unique shortest member of a coset, asserting uniqueness."""
    lens = sorted(members, key=lambda p: p.coxeter_length())
    assert len(lens) == 1 or lens[0].coxeter_length() < lens[1].coxeter_length()
    return lens[0]
