"""Condition catalog and equivalence sweeps.

Each catalog condition is a decidable statement about one structure,
evaluated by bounded quantifier scans; witnesses are lexicographically
least over the scan order.  Theorem groupings bundle conditions that are
expected to agree (equivalences), to follow from the first condition
(implications), or to hold outright, under an ambient hypothesis.

Sweeping a corpus reports, per grouping, how many structures met the
hypothesis and every disagreement found; structures outside the ambient
are still evaluated and logged separately so borderline cases stay
visible.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Callable, Iterable

from osgkit.properties import (
    generator_uniqueness,
    h_commutes,
    inverses_of,
    is_inverse_ordered,
    ordered_idempotents,
    regularity,
)
from osgkit.relations import (
    greens_relations,
    least_complete_semilattice_congruence,
    semilattice_decomposition_check,
)
from osgkit.structure import OrderedSemigroup, canonical_form, is_valid
from osgkit.subsets import Subset, downward_closure, subset_product

REGULAR = "regular"

Verdict = tuple[bool, "tuple | None"]


@dataclass(frozen=True)
class ConditionVerdict:
    condition: str
    holds: bool
    witness: tuple | None
    hypothesis_met: bool


@dataclass(frozen=True)
class TheoremReport:
    theorem: str
    structure: str  # canonical form, hex
    vector: tuple[ConditionVerdict, ...]
    consistent: bool
    hypothesis_met: bool


@dataclass(frozen=True)
class Condition:
    id: str
    description: str
    ambient: str | None
    fn: Callable[[OrderedSemigroup], Verdict]


@dataclass(frozen=True)
class Theorem:
    id: str
    description: str
    kind: str  # equivalence | implications | all_hold
    items: tuple[tuple[str, ...], ...]
    ambient: str | None


# ---------------------------------------------------------------------------
# helper scans


def _mul(s, *xs):
    out = xs[0]
    for x in xs[1:]:
        out = s.mult[out][x]
    return out


def _below_set(s, core_members) -> Subset:
    return downward_closure(s, Subset.of(core_members, s.order))


def _sandwich(s, e, f) -> Subset:
    """(e S f], the downward closure of {e*s*f}."""
    n = s.order
    mid = subset_product(s, Subset.of([e], n), Subset.full(n))
    return downward_closure(s, subset_product(s, mid, Subset.of([f], n)))


def _gen_unique(s, side) -> Verdict:
    report = generator_uniqueness(s, side)
    return report.holds, report.witness


def _inverse(s) -> Verdict:
    report = is_inverse_ordered(s)
    return report.holds, report.witness


def _regular_and_idempotents_commute(s) -> Verdict:
    reg = regularity(s, "regular")
    if not reg.holds:
        return False, reg.witness
    idem = ordered_idempotents(s).members()
    for e in idem:
        for f in idem:
            if not h_commutes(s, e, f):
                return False, (e, f)
    return True, None


def _one_sided_green_forces_h(s) -> Verdict:
    greens = greens_relations(s)
    idem = ordered_idempotents(s).members()
    for e in idem:
        for f in idem:
            if greens.L.related(e, f) and not greens.H.related(e, f):
                return False, (e, f)
            if greens.R.related(e, f) and not greens.H.related(e, f):
                return False, (e, f)
    return True, None


def _l_iff_inverse_products(s) -> Verdict:
    greens = greens_relations(s)
    n = s.order
    for a in range(n):
        for b in range(n):
            for ap in inverses_of(s, a):
                for bp in inverses_of(s, b):
                    lhs = greens.L.related(a, b)
                    rhs = greens.H.related(_mul(s, ap, a), _mul(s, bp, b))
                    if lhs != rhs:
                        return False, (a, b, ap, bp)
    return True, None


def _r_iff_inverse_products(s) -> Verdict:
    greens = greens_relations(s)
    n = s.order
    for a in range(n):
        for b in range(n):
            for ap in inverses_of(s, a):
                for bp in inverses_of(s, b):
                    lhs = greens.R.related(a, b)
                    rhs = greens.H.related(_mul(s, a, ap), _mul(s, b, bp))
                    if lhs != rhs:
                        return False, (a, b, ap, bp)
    return True, None


def _idempotent_conjugates(s) -> Verdict:
    n = s.order
    idem = ordered_idempotents(s)
    for a in range(n):
        for ap in inverses_of(s, a):
            for e in idem:
                left = any(_mul(s, a, e, x, ap) in idem for x in range(n))
                right = any(_mul(s, ap, e, y, a) in idem for y in range(n))
                if not (left and right):
                    return False, (a, ap, e)
    return True, None


def _product_reproduction(s) -> Verdict:
    n, leq = s.order, s.leq
    for a in range(n):
        for b in range(n):
            for ap in inverses_of(s, a):
                for bp in inverses_of(s, b):
                    ab = _mul(s, a, b)
                    bpap = _mul(s, bp, ap)
                    fwd = any(
                        leq[ab][_mul(s, a, b, bp, x, ap, a, b)] for x in range(n)
                    )
                    if not fwd:
                        return False, (a, b, ap, bp)
                    bwd = any(
                        leq[bpap][_mul(s, bp, ap, a, y, b, bp, ap)] for y in range(n)
                    )
                    if not bwd:
                        return False, (a, b, ap, bp)
    return True, None


def _sandwich_inverses(s) -> Verdict:
    idem = ordered_idempotents(s).members()
    for e in idem:
        for f in idem:
            inside = _sandwich(s, e, f)
            back = _sandwich(s, f, e)
            for x in inside:
                for xp in inverses_of(s, x):
                    if xp not in back:
                        return False, (e, f, x, xp)
    return True, None


def _inverse_pair_products_commute(s) -> Verdict:
    for a in range(s.order):
        for ap in inverses_of(s, a):
            if not h_commutes(s, _mul(s, a, ap), _mul(s, ap, a)):
                return False, (a, ap)
    return True, None


def _idempotent_inverses_h_related(s) -> Verdict:
    h = greens_relations(s).H
    for e in ordered_idempotents(s):
        inv = inverses_of(s, e).members()
        for b in inv:
            for c in inv:
                if not h.related(b, c):
                    return False, (e, b, c)
    return True, None


def _idempotent_inverses_commute(s) -> Verdict:
    for e in ordered_idempotents(s):
        inv = inverses_of(s, e).members()
        for b in inv:
            for c in inv:
                if not h_commutes(s, b, c):
                    return False, (e, b, c)
    return True, None


def _idempotent_inverse_pair_products_commute(s) -> Verdict:
    for e in ordered_idempotents(s):
        for ep in inverses_of(s, e):
            if not h_commutes(s, _mul(s, e, ep), _mul(s, ep, e)):
                return False, (e, ep)
    return True, None


def _inverse_and_completely_regular(s) -> Verdict:
    inv = is_inverse_ordered(s)
    if not inv.holds:
        return False, inv.witness
    cr = regularity(s, "completely_regular")
    if not cr.holds:
        return False, cr.witness
    return True, None


def _group_like_decomposition(s) -> Verdict:
    verdict = semilattice_decomposition_check(s, "group_like")
    if verdict.ok:
        return True, verdict.witness.classes
    return False, None


def _idempotent_products_h_related(s) -> Verdict:
    idem = ordered_idempotents(s)
    h = greens_relations(s).H
    for a in range(s.order):
        for b in range(s.order):
            ab, ba = _mul(s, a, b), _mul(s, b, a)
            if ab in idem and ba in idem and not h.related(ab, ba):
                return False, (a, b)
    return True, None


def _idempotents_commute_with_all(s) -> Verdict:
    for e in ordered_idempotents(s):
        for a in range(s.order):
            if not h_commutes(s, e, a):
                return False, (e, a)
    return True, None


def _j_forces_h_on_idempotents(s) -> Verdict:
    greens = greens_relations(s)
    idem = ordered_idempotents(s).members()
    for e in idem:
        for f in idem:
            if greens.J.related(e, f) and not greens.H.related(e, f):
                return False, (e, f)
    return True, None


def _all_greens_coincide(s) -> Verdict:
    greens = greens_relations(s)
    for a in range(s.order):
        for b in range(a + 1, s.order):
            h = greens.H.related(a, b)
            if greens.L.related(a, b) != h or greens.R.related(a, b) != h \
                    or greens.J.related(a, b) != h:
                return False, (a, b)
    return True, None


def _cr_gives_witnessed_powers(s) -> Verdict:
    if not regularity(s, "completely_regular").holds:
        return True, None
    n, leq = s.order, s.leq
    for a in range(n):
        aa = _mul(s, a, a)
        found = any(
            leq[a][_mul(s, a, x, aa)] and leq[a][_mul(s, aa, x, a)]
            for x in range(n)
        )
        if not found:
            return False, (a,)
    return True, None


def _cr_least_congruence_is_j(s) -> Verdict:
    if not regularity(s, "completely_regular").holds:
        return True, None
    least = least_complete_semilattice_congruence(s)
    j = greens_relations(s).J
    for a in range(s.order):
        for b in range(a + 1, s.order):
            if least.related(a, b) != j.related(a, b):
                return False, (a, b)
    return True, None


# ---------------------------------------------------------------------------
# catalog

CONDITIONS: dict[str, Condition] = {}


def _register(id: str, description: str, ambient: str | None, fn):
    CONDITIONS[id] = Condition(id, description, ambient, fn)


_register("T33.L", "principal left ideals have H-unique idempotent generators",
          None, lambda s: _gen_unique(s, "left"))
_register("T33.R", "principal right ideals have H-unique idempotent generators",
          None, lambda s: _gen_unique(s, "right"))
_register("T35.1", "inverse: any two inverses of an element are H-related",
          REGULAR, _inverse)
_register("T35.2", "regular with pairwise H-commutative ordered idempotents",
          None, _regular_and_idempotents_commute)
_register("T35.3", "L- or R-related ordered idempotents are H-related",
          None, _one_sided_green_forces_h)
_register("L4.1", "a L b exactly when a'a H b'b for all inverse choices",
          REGULAR, _l_iff_inverse_products)
_register("L4.2", "a R b exactly when aa' H bb' for all inverse choices",
          REGULAR, _r_iff_inverse_products)
_register("L4.3", "aexa' and a'eya land in the ordered idempotents for some x, y",
          REGULAR, _idempotent_conjugates)
_register("L4.4", "ab <= abb'xa'ab and b'a' <= b'a'aybb'a' for some x, y",
          REGULAR, _product_reproduction)
_register("TESF", "inverses of members of (eSf] lie in (fSe]",
          None, _sandwich_inverses)
_register("C.1", "inverse: any two inverses of an element are H-related",
          REGULAR, _inverse)
_register("C.2", "aa' and a'a are H-commutative for every inverse pair",
          REGULAR, _inverse_pair_products_commute)
_register("C.3", "any two inverses of an ordered idempotent are H-related",
          REGULAR, _idempotent_inverses_h_related)
_register("C.4", "any two inverses of an ordered idempotent are H-commutative",
          REGULAR, _idempotent_inverses_commute)
_register("C.5", "ee' and e'e are H-commutative for idempotent inverse pairs",
          REGULAR, _idempotent_inverse_pair_products_commute)
_register("B.1", "inverse and completely regular",
          REGULAR, _inverse_and_completely_regular)
_register("B.2", "complete semilattice decomposition into group-like classes",
          REGULAR, _group_like_decomposition)
_register("B.3", "ab H ba whenever both products are ordered idempotents",
          REGULAR, _idempotent_products_h_related)
_register("B.4", "every ordered idempotent is H-commutative with every element",
          REGULAR, _idempotents_commute_with_all)
_register("B.5", "J-related ordered idempotents are H-related",
          REGULAR, _j_forces_h_on_idempotents)
_register("B.6", "H, L, R, J all coincide",
          REGULAR, _all_greens_coincide)
_register("CR.W", "complete regularity yields a <= axa2 and a <= a2xa",
          None, _cr_gives_witnessed_powers)
_register("CR.J", "complete regularity makes the least complete semilattice "
          "congruence equal to J", None, _cr_least_congruence_is_j)


THEOREMS: dict[str, Theorem] = {}


def _group(id, description, kind, items, ambient):
    THEOREMS[id] = Theorem(id, description, kind, tuple(tuple(i) for i in items), ambient)


_group("THM_3_3", "inverse iff one-sided principal ideals are generated by "
       "H-unique ordered idempotents", "equivalence",
       [("T35.1",), ("T33.L", "T33.R")], REGULAR)
_group("THM_3_5", "inverse iff idempotents H-commute iff one-sided Green "
       "relations force H on idempotents", "equivalence",
       [("T35.1",), ("T35.2",), ("T35.3",)], REGULAR)
_group("THM_ESF", "inverse iff sandwich sets (eSf] send inverses to (fSe]",
       "equivalence", [("T35.1",), ("TESF",)], REGULAR)
_group("COR", "five equivalent forms of the inverse property on regular "
       "structures", "equivalence",
       [("C.1",), ("C.2",), ("C.3",), ("C.4",), ("C.5",)], REGULAR)
_group("THM_BIG", "six equivalent forms of inverse plus completely regular",
       "equivalence",
       [("B.1",), ("B.2",), ("B.3",), ("B.4",), ("B.5",), ("B.6",)], REGULAR)
_group("LEM_4", "inverse structures satisfy the four inverse-pair laws",
       "implications",
       [("T35.1",), ("L4.1",), ("L4.2",), ("L4.3",), ("L4.4",)], REGULAR)
_group("LEM_2_1", "complete regularity consequences", "all_hold",
       [("CR.W",), ("CR.J",)], None)


def condition_ids() -> tuple[str, ...]:
    return tuple(CONDITIONS)


def theorem_ids() -> tuple[str, ...]:
    return tuple(THEOREMS)


# ---------------------------------------------------------------------------
# evaluation


def _ambient_met(s: OrderedSemigroup, ambient: str | None) -> bool:
    if ambient is None:
        return True
    if ambient == REGULAR:
        return regularity(s, "regular").holds
    raise ValueError(f"unknown ambient {ambient!r}")


def evaluate_condition(s: OrderedSemigroup, condition_id: str) -> ConditionVerdict:
    """Decide one catalog condition on a valid structure."""
    try:
        condition = CONDITIONS[condition_id]
    except KeyError:
        raise KeyError(
            f"unknown condition {condition_id!r}; known: {list(CONDITIONS)}"
        ) from None
    holds, witness = condition.fn(s)
    return ConditionVerdict(
        condition_id, holds, witness, _ambient_met(s, condition.ambient)
    )


def _item_verdict(s: OrderedSemigroup, item: tuple[str, ...]) -> ConditionVerdict:
    verdicts = [evaluate_condition(s, cid) for cid in item]
    if len(verdicts) == 1:
        return verdicts[0]
    holds = all(v.holds for v in verdicts)
    witness = next((v.witness for v in verdicts if not v.holds), None)
    return ConditionVerdict(
        "&".join(item), holds, witness, all(v.hypothesis_met for v in verdicts)
    )


def _consistency(kind: str, vector: tuple[ConditionVerdict, ...]) -> bool:
    met = [v for v in vector if v.hypothesis_met]
    if kind == "equivalence":
        return len({v.holds for v in met}) <= 1
    if kind == "implications":
        if not vector[0].hypothesis_met or not vector[0].holds:
            return True
        return all(v.holds for v in met[1:])
    if kind == "all_hold":
        return all(v.holds for v in met)
    raise ValueError(f"unknown theorem kind {kind!r}")


def check_theorem(s: OrderedSemigroup, theorem_id: str) -> TheoremReport:
    """Evaluate a grouping's condition vector on one valid structure.

    The report is marked hypothesis-unmet (and should be excluded from
    consistency accounting) when the structure misses the ambient.
    """
    try:
        theorem = THEOREMS[theorem_id]
    except KeyError:
        raise KeyError(
            f"unknown theorem {theorem_id!r}; known: {list(THEOREMS)}"
        ) from None
    vector = tuple(_item_verdict(s, item) for item in theorem.items)
    return TheoremReport(
        theorem=theorem_id,
        structure=canonical_form(s).hex(),
        vector=vector,
        consistent=_consistency(theorem.kind, vector),
        hypothesis_met=_ambient_met(s, theorem.ambient),
    )


# ---------------------------------------------------------------------------
# sweeps


@dataclass(frozen=True)
class InconsistencyRecord:
    canonical: str
    structure: OrderedSemigroup
    report: TheoremReport


@dataclass(frozen=True)
class TheoremSweep:
    theorem: str
    checked: int
    hypothesis_met: int
    inconsistent: int
    inconsistencies: tuple[InconsistencyRecord, ...]
    outside_disagreements: tuple[InconsistencyRecord, ...]


@dataclass(frozen=True)
class SweepReport:
    theorems: tuple[TheoremSweep, ...]
    structures: int
    skipped: tuple[str, ...]

    @property
    def total_inconsistent(self) -> int:
        return sum(t.inconsistent for t in self.theorems)

    @staticmethod
    def merge(reports: Iterable["SweepReport"]) -> "SweepReport":
        reports = list(reports)
        if not reports:
            return SweepReport((), 0, ())
        by_theorem: dict[str, list[TheoremSweep]] = {}
        order: list[str] = []
        for report in reports:
            for sweep in report.theorems:
                if sweep.theorem not in by_theorem:
                    by_theorem[sweep.theorem] = []
                    order.append(sweep.theorem)
                by_theorem[sweep.theorem].append(sweep)
        merged = []
        for tid in order:
            parts = by_theorem[tid]
            incs = tuple(sorted(
                (r for p in parts for r in p.inconsistencies),
                key=lambda r: r.canonical,
            ))
            outs = tuple(sorted(
                (r for p in parts for r in p.outside_disagreements),
                key=lambda r: r.canonical,
            ))
            merged.append(TheoremSweep(
                theorem=tid,
                checked=sum(p.checked for p in parts),
                hypothesis_met=sum(p.hypothesis_met for p in parts),
                inconsistent=sum(p.inconsistent for p in parts),
                inconsistencies=incs,
                outside_disagreements=outs,
            ))
        return SweepReport(
            theorems=tuple(merged),
            structures=sum(r.structures for r in reports),
            skipped=tuple(n for r in reports for n in r.skipped),
        )


def _full_vector_disagrees(report: TheoremReport, kind: str) -> bool:
    # transparency check over every evaluated condition, hypothesis or not
    forced = tuple(replace(v, hypothesis_met=True) for v in report.vector)
    return not _consistency(kind, forced)


def sweep(corpus, theorem_ids=None) -> SweepReport:
    """Check groupings across a corpus; deterministic ordering by
    canonical form.  Invalid corpus members are skipped with a note."""
    ids = tuple(theorem_ids) if theorem_ids else tuple(THEOREMS)
    for tid in ids:
        if tid not in THEOREMS:
            raise KeyError(f"unknown theorem {tid!r}; known: {list(THEOREMS)}")

    keyed = []
    skipped = []
    for i, s in enumerate(corpus):
        if not is_valid(s):
            skipped.append(f"corpus[{i}] skipped: fails validation")
            continue
        keyed.append((canonical_form(s).hex(), s))
    keyed.sort(key=lambda pair: pair[0])

    sweeps = []
    for tid in ids:
        kind = THEOREMS[tid].kind
        met = 0
        inconsistencies = []
        outside = []
        for hexkey, s in keyed:
            report = check_theorem(s, tid)
            if report.hypothesis_met:
                met += 1
                if not report.consistent:
                    inconsistencies.append(InconsistencyRecord(hexkey, s, report))
            elif _full_vector_disagrees(report, kind):
                outside.append(InconsistencyRecord(hexkey, s, report))
        sweeps.append(TheoremSweep(
            theorem=tid,
            checked=len(keyed),
            hypothesis_met=met,
            inconsistent=len(inconsistencies),
            inconsistencies=tuple(inconsistencies),
            outside_disagreements=tuple(outside),
        ))
    return SweepReport(tuple(sweeps), len(keyed), tuple(skipped))
