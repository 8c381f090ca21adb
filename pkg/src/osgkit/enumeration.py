"""Exhaustive generation of semigroups, partial orders, and ordered
semigroups of a given order, labelled or up to isomorphism.

The table search runs order-first: fix a partial order, then backtrack
the multiplication table cell by cell with incremental associativity and
compatibility pruning (the kernel's job).  Isomorphism rejection uses the
full canonical form, affordable for n <= 5.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Iterator, TextIO

from osgkit import kernel
from osgkit.structure import (
    OrderedSemigroup,
    format_structure,
    from_flat,
    parse_structure,
)

DEFAULT_MAX_ORDER = 4
HARD_MAX_ORDER = 5

MODES = ("labelled", "up_to_iso")


@dataclass(frozen=True)
class EnumerationOptions:
    order: int
    mode: str = "labelled"
    filters: tuple[str, ...] = ()
    shard: tuple[int, int] | None = None
    order_limit: int = DEFAULT_MAX_ORDER

    def __post_init__(self):
        if self.mode not in MODES:
            raise ValueError(f"mode must be one of {MODES}, got {self.mode!r}")
        limit = min(self.order_limit, HARD_MAX_ORDER)
        if not 1 <= self.order <= limit:
            raise ValueError(
                f"order must be within 1..{limit} "
                f"(raise order_limit up to {HARD_MAX_ORDER} to go further)"
            )
        if self.shard is not None:
            index, count = self.shard
            if count < 1 or not 0 <= index < count:
                raise ValueError(f"shard index must be within 0..count-1, got {self.shard}")


def _shard_stream(items, shard):
    if shard is None:
        yield from items
        return
    index, count = shard
    for i, item in enumerate(items):
        if i % count == index:
            yield item


def _resolve_filters(filters):
    from osgkit.properties import PROPERTY_PREDICATES
    from osgkit.theorems import CONDITIONS, evaluate_condition

    predicates = []
    for fid in filters:
        if fid in PROPERTY_PREDICATES:
            predicates.append(PROPERTY_PREDICATES[fid])
        elif fid in CONDITIONS:
            predicates.append(
                lambda s, _fid=fid: evaluate_condition(s, _fid).holds
            )
        else:
            raise KeyError(
                f"unknown filter {fid!r}: not a property or catalog condition"
            )
    return predicates


def enumerate_partial_orders(n: int) -> list[tuple[tuple[bool, ...], ...]]:
    """All partial orders on n labelled points, sorted by matrix encoding.

    Each unordered pair is incomparable, upward, or downward (3 states);
    candidates are filtered by a transitivity scan.
    """
    if not 1 <= n <= HARD_MAX_ORDER:
        raise ValueError(f"order must be within 1..{HARD_MAX_ORDER}")
    pairs = list(combinations(range(n), 2))
    out = []
    states = [0] * len(pairs)

    def emit():
        rel = [[i == j for j in range(n)] for i in range(n)]
        for (i, j), state in zip(pairs, states):
            if state == 1:
                rel[i][j] = True
            elif state == 2:
                rel[j][i] = True
        for a in range(n):
            for b in range(n):
                if rel[a][b]:
                    for c in range(n):
                        if rel[b][c] and not rel[a][c]:
                            return
        out.append(tuple(tuple(row) for row in rel))

    def walk(k: int):
        if k == len(pairs):
            emit()
            return
        for state in range(3):
            states[k] = state
            walk(k + 1)

    walk(0)
    out.sort()
    return out


def _leq_flat(rel, n: int) -> bytes:
    return bytes(1 if rel[i][j] else 0 for i in range(n) for j in range(n))


def enumerate_semigroups(opts: EnumerationOptions) -> Iterator[tuple[tuple[int, ...], ...]]:
    """All associative tables of the given order, labelled in lexicographic
    order or canonical representatives sorted by canonical form."""
    n = opts.order
    tables = kernel.enumerate_assoc_tables(n)
    if opts.mode == "labelled":
        stream = tables
    else:
        discrete = _leq_flat([[i == j for j in range(n)] for i in range(n)], n)
        keys = sorted({kernel.canonical_key(t, discrete, n) for t in tables})
        stream = [key[1 : 1 + n * n] for key in keys]
    for flat in _shard_stream(stream, opts.shard):
        yield tuple(tuple(flat[i * n + j] for j in range(n)) for i in range(n))


def enumerate_ordered_semigroups(opts: EnumerationOptions) -> Iterator[OrderedSemigroup]:
    """All valid (table, order) pairs, labelled or up to isomorphism.

    Results come out sorted by canonical form (ties among labelled
    structures broken by the raw encoding), so runs are byte-identical
    and shard unions reproduce the unsharded stream.
    """
    n = opts.order
    predicates = _resolve_filters(opts.filters)
    posets = enumerate_partial_orders(n)

    if opts.mode == "labelled":
        entries = []
        for rel in posets:
            leq = _leq_flat(rel, n)
            for table in kernel.enumerate_valid_tables(n, leq):
                entries.append((kernel.canonical_key(table, leq, n), table, leq))
        entries.sort()
        stream = (from_flat(n, table, leq) for _, table, leq in entries)
    else:
        keys = set()
        for rel in posets:
            leq = _leq_flat(rel, n)
            for table in kernel.enumerate_valid_tables(n, leq):
                keys.add(kernel.canonical_key(table, leq, n))
        stream = (
            from_flat(n, key[1 : 1 + n * n], key[1 + n * n :])
            for key in sorted(keys)
        )

    filtered = (
        s for s in stream if all(predicate(s) for predicate in predicates)
    )
    yield from _shard_stream(filtered, opts.shard)


# ---------------------------------------------------------------------------
# corpus files

RECORD_SEPARATOR = "---"


def write_corpus(out: TextIO, structures: Iterable[OrderedSemigroup],
                 options: EnumerationOptions | None = None) -> int:
    """One record per structure in the file format, separated by ``---``;
    the header comment records the options and the count."""
    structures = list(structures)
    out.write("# osgkit corpus\n")
    if options is not None:
        shard = "none" if options.shard is None else "%d/%d" % options.shard
        out.write(
            f"# options: order={options.order} mode={options.mode} "
            f"filters={','.join(options.filters) or 'none'} shard={shard}\n"
        )
    out.write(f"# count: {len(structures)}\n")
    for i, s in enumerate(structures):
        if i:
            out.write(RECORD_SEPARATOR + "\n")
        out.write(format_structure(s))
    return len(structures)


def read_corpus(text: str) -> list[OrderedSemigroup]:
    records: list[list[str]] = [[]]
    for raw in text.splitlines():
        stripped = raw.split("#", 1)[0].strip()
        if stripped == RECORD_SEPARATOR:
            records.append([])
        else:
            records[-1].append(raw)
    return [
        parse_structure("\n".join(chunk))
        for chunk in records
        if any(line.split("#", 1)[0].strip() for line in chunk)
    ]
