"""Brute-force oracles: naive, enumerate-everything implementations used to
cross-check the main code paths and to make derived test values executable.

Nothing here calls the optimised kernels or the validator; each oracle
recomputes from the definitions with plain scans.
"""

from __future__ import annotations

from itertools import permutations, product

from osgkit.fixtures import load_named_fixture
from osgkit.structure import OrderedSemigroup, from_table


def assoc_failures(mult) -> list[tuple[int, int, int]]:
    """All non-associative triples of a table given as rows."""
    n = len(mult)
    out = []
    for i in range(n):
        for j in range(n):
            for k in range(n):
                if mult[mult[i][j]][k] != mult[i][mult[j][k]]:
                    out.append((i, j, k))
    return out


def axioms_hold(mult, leq) -> bool:
    """Full scan of associativity, order axioms, and compatibility."""
    n = len(mult)
    rng = range(n)
    if assoc_failures(mult):
        return False
    for i in rng:
        if not leq[i][i]:
            return False
        for j in rng:
            if i != j and leq[i][j] and leq[j][i]:
                return False
            if leq[i][j]:
                for k in rng:
                    if leq[j][k] and not leq[i][k]:
                        return False
    for a in rng:
        for b in rng:
            if not leq[a][b]:
                continue
            for x in rng:
                if not leq[mult[x][a]][mult[x][b]]:
                    return False
                if not leq[mult[a][x]][mult[b][x]]:
                    return False
    return True


def all_tables(n: int):
    """Every n x n table over 0..n-1, as row tuples (n <= 3 is sane)."""
    for flat in product(range(n), repeat=n * n):
        yield tuple(flat[i * n : (i + 1) * n] for i in range(n))


def assoc_tables_naive(n: int) -> list[tuple[tuple[int, ...], ...]]:
    return [t for t in all_tables(n) if not assoc_failures(t)]


def all_reflexive_relations(n: int):
    """Every reflexive boolean matrix on n points (not necessarily a poset)."""
    offdiag = [(i, j) for i in range(n) for j in range(n) if i != j]
    for bits in product((False, True), repeat=len(offdiag)):
        rel = [[i == j for j in range(n)] for i in range(n)]
        for (i, j), b in zip(offdiag, bits):
            rel[i][j] = b
        yield tuple(tuple(row) for row in rel)


def is_partial_order(rel) -> bool:
    n = len(rel)
    for i in range(n):
        if not rel[i][i]:
            return False
        for j in range(n):
            if i != j and rel[i][j] and rel[j][i]:
                return False
            if rel[i][j]:
                for k in range(n):
                    if rel[j][k] and not rel[i][k]:
                        return False
    return True


def posets_naive(n: int) -> list[tuple[tuple[bool, ...], ...]]:
    return [rel for rel in all_reflexive_relations(n) if is_partial_order(rel)]


def iso_class_count(tables, n: int) -> int:
    """Partition labelled tables into isomorphism classes by trying all
    bijections; returns the class count."""
    pool = set(tables)
    classes = 0
    while pool:
        table = pool.pop()
        classes += 1
        for perm in permutations(range(n)):
            relabelled = tuple(
                tuple(perm[table[i][j]] for j in range(n)) for i in range(n)
            )
            remapped = tuple(
                tuple(relabelled[perm[i]][perm[j]] for j in range(n)) for i in range(n)
            )
            pool.discard(remapped)
    return classes


def ordered_structures_naive(n: int) -> list[OrderedSemigroup]:
    """Every valid (table, order) pair on n labelled points, by filtering
    the full cross product through the axiom scan."""
    out = []
    for mult in assoc_tables_naive(n):
        for leq in posets_naive(n):
            if axioms_hold(mult, leq):
                out.append(OrderedSemigroup(n, mult, leq))
    return out


def _relabel_perm(table, n, perm):
    relabelled = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            relabelled[perm[i]][perm[j]] = perm[table[i][j]]
    return tuple(tuple(row) for row in relabelled)


def greens_by_literal_sets(s: OrderedSemigroup):
    """Green's partitions from equality of the literal, non-closed
    generator sets {a} u Sa, {a} u aS, and {a} u Sa u aS u SaS."""
    from osgkit.relations import Partition

    n = s.order
    left, right, two = [], [], []
    for a in range(n):
        sa = frozenset({a} | {s.mult[x][a] for x in range(n)})
        a_s = frozenset({a} | {s.mult[a][x] for x in range(n)})
        sas = frozenset(
            {a}
            | {s.mult[x][a] for x in range(n)}
            | {s.mult[a][x] for x in range(n)}
            | {s.mult[x][s.mult[a][y]] for x in range(n) for y in range(n)}
        )
        left.append(sa)
        right.append(a_s)
        two.append(sas)
    return (
        Partition.from_labels(left),
        Partition.from_labels(right),
        Partition.from_labels(two),
    )


def px3_report() -> dict:
    """Exhaustive 27-triple adjudication of the px3 fixture, both the
    row-times-column table and its mirror."""
    s, names = load_named_fixture("px3")
    direct = assoc_failures(s.mult)
    mirrored = tuple(tuple(s.mult[j][i] for j in range(s.order)) for i in range(s.order))
    opposite_fails = assoc_failures(mirrored)
    return {
        "names": names,
        "direct_failures": direct,
        "direct_failure_names": [tuple(names[i] for i in t) for t in direct],
        "opposite_failures": opposite_fails,
        "associative": not direct,
        "opposite_associative": not opposite_fails,
    }


def fixture_axiom_report() -> dict:
    """Axiom oracle verdicts for every shipped fixture."""
    out = {}
    for name in ("t1", "sl2", "lz2", "n2", "px3"):
        s, _ = load_named_fixture(name)
        out[name] = axioms_hold(s.mult, s.leq)
    return out


def rz2() -> OrderedSemigroup:
    """Right-zero structure on two points with discrete order."""
    return from_table([[0, 1], [0, 1]])
