"""Factorizations, R-classes, Betti elements, minimal presentations.

A factorization of n is a coordinate vector (c_1, ..., c_e) with
sum(c_i * a_i) = n.  Two factorizations of n are adjacent when they share a
generator (some coordinate positive in both); the transitive closure of
adjacency partitions the factorizations of n into R-classes.  Elements with
at least two R-classes are the Betti elements, and a minimal presentation
picks, for each Betti element, enough relations (pairs of factorizations) to
connect its classes: c - 1 relations for c classes.

The relation count of a minimal presentation, compared with the number of
generators, detects complete intersections; the multiset of relation degrees
(the Betti element each relation lives at, with multiplicity) is the
invariant the rest of the library consumes.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import NamedTuple

from .core import NumericalSemigroup, contains
from .errors import ConsistencyError, NegativeElementError


class Factorization(NamedTuple):
    coords: tuple[int, ...]
    value: int

    def __str__(self) -> str:
        return "(" + ", ".join(str(c) for c in self.coords) + ")"


class Relation(NamedTuple):
    left: Factorization
    right: Factorization
    degree: int


@dataclass(frozen=True)
class Presentation:
    relations: tuple[Relation, ...]
    degrees: tuple[int, ...]


def _coords(semigroup: NumericalSemigroup, n: int) -> list[tuple[int, ...]]:
    """All factorization coordinate vectors of n, by pruned search.

    Fills coordinates from the largest generator down; a partial choice is
    abandoned as soon as the remainder falls outside the semigroup, which is
    sound because any completion would witness membership.
    """
    gens = semigroup.generators
    e = len(gens)
    if n < 0 or not contains(semigroup, n):
        return []
    out: list[tuple[int, ...]] = []
    cur = [0] * e

    def fill(i: int, rem: int) -> None:
        if i == 0:
            q, r = divmod(rem, gens[0])
            if r == 0:
                cur[0] = q
                out.append(tuple(cur))
                cur[0] = 0
            return
        a = gens[i]
        for c in range(rem // a, -1, -1):
            rest = rem - c * a
            if contains(semigroup, rest):
                cur[i] = c
                fill(i - 1, rest)
        cur[i] = 0

    fill(e - 1, n)
    return out


def factorizations(semigroup: NumericalSemigroup, n: int) -> frozenset[Factorization]:
    """The fiber over n: every coordinate vector mapping to n."""
    if n < 0:
        raise NegativeElementError(f"no factorizations of {n}")
    return frozenset(Factorization(c, n) for c in _coords(semigroup, n))


def _partition(coord_list: list[tuple[int, ...]]) -> list[list[tuple[int, ...]]]:
    """Group coordinate vectors into R-classes.

    All vectors positive at a fixed position form one adjacency clique, so
    chaining them per position and taking union-find components gives exactly
    the shared-support transitive closure.
    """
    if not coord_list:
        return []
    parent = list(range(len(coord_list)))

    def find(i: int) -> int:
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for j in range(len(coord_list[0])):
        first = -1
        for idx, f in enumerate(coord_list):
            if f[j]:
                if first < 0:
                    first = idx
                else:
                    ri, rj = find(first), find(idx)
                    if ri != rj:
                        parent[rj] = ri
    groups: dict[int, list[tuple[int, ...]]] = {}
    for idx, f in enumerate(coord_list):
        groups.setdefault(find(idx), []).append(f)
    return sorted(groups.values(), key=min)


def r_classes(semigroup: NumericalSemigroup, n: int) -> list[frozenset[Factorization]]:
    """R-class partition of the factorizations of n, ordered by least member."""
    if n < 0:
        raise NegativeElementError(f"no factorizations of {n}")
    blocks = _partition(sorted(_coords(semigroup, n)))
    return [
        frozenset(Factorization(c, n) for c in block) for block in blocks
    ]


def _certainly_one_class(semigroup: NumericalSemigroup, n: int) -> bool:
    """Cheap sound test for a single R-class; False only means unknown.

    Let I = {i : n - a_i in S}; every factorization's support sits inside I.
    When n - a_i - a_j in S, any factorization using a_i connects to any
    using a_j, through a factorization of n - a_i - a_j extended by one a_i
    and one a_j.  A connected graph on I therefore forces one R-class, at
    the cost of O(e^2) membership tests instead of enumerating the fiber.
    """
    gens = semigroup.generators
    idx = [i for i, a in enumerate(gens) if contains(semigroup, n - a)]
    if len(idx) <= 1:
        return True
    root = {i: i for i in idx}

    def find(i: int) -> int:
        while root[i] != i:
            root[i] = root[root[i]]
            i = root[i]
        return i

    for p in range(len(idx)):
        for q in range(p + 1, len(idx)):
            i, j = idx[p], idx[q]
            if contains(semigroup, n - gens[i] - gens[j]):
                ri, rj = find(i), find(j)
                if ri != rj:
                    root[rj] = ri
    first = find(idx[0])
    return all(find(i) == first for i in idx)


def _class_count(semigroup: NumericalSemigroup, n: int) -> int:
    if _certainly_one_class(semigroup, n):
        return 1
    return len(_partition(_coords(semigroup, n)))


def betti_elements(semigroup: NumericalSemigroup) -> list[int]:
    """Elements with two or more R-classes, ascending.

    Scans n <= F(S) + a_{e-1} + a_e.  The bound is safe: past it, every
    n - a_i - a_j exceeds F(S), so the certificate graph of
    _certainly_one_class is complete and every fiber is one class.  A margin
    of one further generator is rechecked by full enumeration anyway, as an
    empirical guard on the bound and on the scan itself.
    """
    if semigroup.embedding_dim <= 1:
        return []
    gens = semigroup.generators
    bound = semigroup.frobenius + gens[-2] + gens[-1]
    out = []
    for n in range(2 * semigroup.multiplicity, bound + 1):
        if contains(semigroup, n) and _class_count(semigroup, n) >= 2:
            out.append(n)
    for n in range(bound + 1, bound + gens[-1] + 1):
        if contains(semigroup, n):
            fiber = _coords(semigroup, n)
            if len(_partition(fiber)) != 1:
                raise ConsistencyError(
                    f"Betti element {n} of {semigroup} beyond the scan bound {bound}"
                )
    return out


@lru_cache(maxsize=4096)
def minimal_presentation(semigroup: NumericalSemigroup) -> Presentation:
    """A minimal presentation: per Betti element, a spanning set of relations.

    For each Betti element the R-classes are ordered by their least
    factorization; each later class contributes one relation tying its least
    factorization to that of the first class.  Any such choice is minimal,
    and this one is canonical, so repeated calls agree exactly.
    """
    relations = []
    for b in betti_elements(semigroup):
        blocks = _partition(sorted(_coords(semigroup, b)))
        reps = sorted(min(block) for block in blocks)
        anchor = Factorization(reps[0], b)
        for rep in reps[1:]:
            relations.append(Relation(left=Factorization(rep, b), right=anchor, degree=b))
    relations.sort(key=lambda rel: (rel.degree, rel.left.coords))
    degrees = tuple(sorted(rel.degree for rel in relations))
    return Presentation(relations=tuple(relations), degrees=degrees)


def relation_degrees(semigroup: NumericalSemigroup) -> tuple[int, ...]:
    """Multiset of Betti degrees of the minimal relations, ascending."""
    return minimal_presentation(semigroup).degrees
