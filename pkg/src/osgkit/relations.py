"""Green's relations and (complete) semilattice congruence machinery."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, NamedTuple

from osgkit.structure import OrderedSemigroup, substructure
from osgkit.subsets import principal_ideal

CONGRUENCE_KINDS = ("left", "right", "two_sided", "semilattice", "complete_semilattice")


@dataclass(frozen=True)
class Partition:
    """Equivalence relation on the carrier.

    Classes are sorted tuples ordered by least member, so equal
    partitions compare equal; class_of maps each index to its class id.
    """

    class_of: tuple[int, ...]
    classes: tuple[tuple[int, ...], ...]

    @classmethod
    def from_labels(cls, labels) -> "Partition":
        labels = list(labels)
        first_seen: dict = {}
        groups: list[list[int]] = []
        for i, lab in enumerate(labels):
            if lab not in first_seen:
                first_seen[lab] = len(groups)
                groups.append([])
            groups[first_seen[lab]].append(i)
        class_of = [0] * len(labels)
        for cid, group in enumerate(groups):
            for i in group:
                class_of[i] = cid
        return cls(tuple(class_of), tuple(tuple(g) for g in groups))

    @classmethod
    def singletons(cls, n: int) -> "Partition":
        return cls.from_labels(range(n))

    @classmethod
    def universal(cls, n: int) -> "Partition":
        return cls.from_labels([0] * n)

    @property
    def n(self) -> int:
        return len(self.class_of)

    def related(self, a: int, b: int) -> bool:
        return self.class_of[a] == self.class_of[b]

    def refines(self, other: "Partition") -> bool:
        """Every class of self sits inside a class of other."""
        if self.n != other.n:
            raise ValueError("partitions of different carriers")
        return all(
            other.class_of[group[0]] == other.class_of[i]
            for group in self.classes
            for i in group
        )

    def check(self):
        """Raise unless classes are disjoint, nonempty, cover the carrier,
        and agree with class_of."""
        seen: set[int] = set()
        for cid, group in enumerate(self.classes):
            if not group:
                raise ValueError("empty class")
            for i in group:
                if i in seen:
                    raise ValueError(f"element {i} in two classes")
                seen.add(i)
                if self.class_of[i] != cid:
                    raise ValueError(f"class_of[{i}] inconsistent with classes")
        if seen != set(range(self.n)):
            raise ValueError("classes do not cover the carrier")


def check_partition(p: Partition, n: int):
    if p.n != n:
        raise ValueError(f"partition of {p.n} points, carrier has {n}")
    p.check()


class GreensRelations(NamedTuple):
    L: Partition
    R: Partition
    J: Partition
    H: Partition


@lru_cache(maxsize=65536)
def greens_relations(s: OrderedSemigroup) -> GreensRelations:
    """L, R, J from equality of principal ideals; H refines L and R."""
    n = s.order
    left = [principal_ideal(s, a, "left").bits for a in range(n)]
    right = [principal_ideal(s, a, "right").bits for a in range(n)]
    two = [principal_ideal(s, a, "two_sided").bits for a in range(n)]
    l_part = Partition.from_labels(left)
    r_part = Partition.from_labels(right)
    j_part = Partition.from_labels(two)
    h_part = Partition.from_labels(list(zip(left, right)))
    return GreensRelations(l_part, r_part, j_part, h_part)


class CongruenceVerdict(NamedTuple):
    ok: bool
    reason: str | None = None
    witness: tuple[int, ...] | None = None


def is_congruence(s: OrderedSemigroup, p: Partition, kind: str) -> CongruenceVerdict:
    """Check the compatibility laws for the requested congruence kind.

    left: a=b forces ca=cb; right is dual; two_sided is both;
    semilattice adds a=a*a and a*b=b*a; complete_semilattice further
    adds a=a*b whenever a <= b.  The witness is the first violating
    tuple in scan order.
    """
    if kind not in CONGRUENCE_KINDS:
        raise ValueError(f"kind must be one of {CONGRUENCE_KINDS}, got {kind!r}")
    check_partition(p, s.order)
    n, mult = s.order, s.mult
    cls = p.class_of

    check_left = kind in ("left", "two_sided", "semilattice", "complete_semilattice")
    check_right = kind in ("right", "two_sided", "semilattice", "complete_semilattice")
    for a in range(n):
        for b in range(n):
            if cls[a] != cls[b]:
                continue
            for c in range(n):
                if check_left and cls[mult[c][a]] != cls[mult[c][b]]:
                    return CongruenceVerdict(False, "left_translation", (a, b, c))
                if check_right and cls[mult[a][c]] != cls[mult[b][c]]:
                    return CongruenceVerdict(False, "right_translation", (a, b, c))

    if kind in ("semilattice", "complete_semilattice"):
        for a in range(n):
            if cls[a] != cls[mult[a][a]]:
                return CongruenceVerdict(False, "square", (a,))
        for a in range(n):
            for b in range(n):
                if cls[mult[a][b]] != cls[mult[b][a]]:
                    return CongruenceVerdict(False, "commute", (a, b))

    if kind == "complete_semilattice":
        for a in range(n):
            for b in range(n):
                if s.leq[a][b] and cls[a] != cls[mult[a][b]]:
                    return CongruenceVerdict(False, "downward", (a, b))

    return CongruenceVerdict(True)


class _UnionFind:
    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, x: int) -> int:
        parent = self.parent
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(self, x: int, y: int) -> bool:
        rx, ry = self.find(x), self.find(y)
        if rx == ry:
            return False
        if ry < rx:
            rx, ry = ry, rx
        self.parent[ry] = rx
        return True


@lru_cache(maxsize=65536)
def least_complete_semilattice_congruence(s: OrderedSemigroup) -> Partition:
    """Smallest congruence containing a=a*a, a*b=b*a, and a=a*b for a <= b.

    Seeds are merged with union-find, then the relation is saturated
    under left and right translation until a fixed point; termination is
    immediate on a finite carrier since merges only decrease class count.
    """
    n, mult = s.order, s.mult
    uf = _UnionFind(n)
    for a in range(n):
        uf.union(a, mult[a][a])
        for b in range(n):
            uf.union(mult[a][b], mult[b][a])
            if s.leq[a][b]:
                uf.union(a, mult[a][b])

    changed = True
    while changed:
        changed = False
        for a in range(n):
            for b in range(a + 1, n):
                if uf.find(a) != uf.find(b):
                    continue
                for c in range(n):
                    if uf.union(mult[c][a], mult[c][b]):
                        changed = True
                    if uf.union(mult[a][c], mult[b][c]):
                        changed = True

    return Partition.from_labels([uf.find(i) for i in range(n)])


def all_partitions(n: int):
    """Every partition of 0..n-1, by restricted-growth strings."""
    labels = [0] * n

    def grow(i: int, top: int):
        if i == n:
            yield Partition.from_labels(labels)
            return
        for lab in range(top + 1):
            labels[i] = lab
            yield from grow(i + 1, top + (1 if lab == top else 0))

    yield from grow(0, 0)


def complete_semilattice_congruences(s: OrderedSemigroup) -> list[Partition]:
    return [
        p for p in all_partitions(s.order)
        if is_congruence(s, p, "complete_semilattice").ok
    ]


class DecompositionVerdict(NamedTuple):
    ok: bool
    witness: Partition | None = None


def semilattice_decomposition_check(
    s: OrderedSemigroup,
    class_property: str | Callable[[OrderedSemigroup], bool],
) -> DecompositionVerdict:
    """Is there a complete semilattice congruence whose classes, as
    subsemigroups under the induced order, all satisfy the predicate?

    The predicate may be a property id from :mod:`osgkit.properties` or a
    callable; the winning partition is returned as witness.
    """
    if callable(class_property):
        predicate = class_property
    else:
        from osgkit.properties import resolve_predicate

        predicate = resolve_predicate(class_property)
    for p in all_partitions(s.order):
        if not is_congruence(s, p, "complete_semilattice").ok:
            continue
        if all(predicate(substructure(s, group)) for group in p.classes):
            return DecompositionVerdict(True, p)
    return DecompositionVerdict(False)
