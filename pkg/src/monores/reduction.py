"""Syzygies of differential sets, redundancy elimination, and the smaller
complexes cut out by it.

Two routes produce the same trimmed complex.  The direct filter drops a
label k whenever some generator index i < r divides the lcm of the label
entries on one side of i (entries above i for the forward direction,
below it for the reverse), recording the least such witness.  The chain
route never looks at labels of the big complex: it walks up one homological
degree at a time, forming candidate pairs from surviving facets and
discarding pairs through the classical chain criterion, with the witness
position constrained to the same side as the filter.  Equality of the two
routes is what the top-level checks exercise.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .algebra import (EMPTY_SEQ, IndexSeq, ModuleElement, Monomial,
                      element_from, lcm_of, one_monomial)
from .division import divide, s_pair
from .errors import (DegreeError, LabelError, NotASubcomplexError,
                     NotGroebnerError)
from .orders import BaseOrder, TaylorOrder, leading_term
from .taylor import FreeComplex, delta_set

DIRECTIONS = ("forward", "reverse")


def _check_direction(direction: str):
    if direction not in DIRECTIONS:
        raise ValueError(f"direction must be one of {DIRECTIONS}")


# ---------------------------------------------------------------------------
# Schreyer syzygies


@dataclass(frozen=True)
class SchreyerSyzygy:
    """Syzygy of divisors i and j (1-based) read off from a division of
    their S-element: the two leading positions minus the quotients.
    `lead_syzygy` is the two-term part on positions i and j."""

    i: int
    j: int
    element: ModuleElement
    lead_syzygy: ModuleElement


def schreyer_syzygy(divisors, i: int, j: int, order, prefer=None) -> SchreyerSyzygy:
    divisors = list(divisors)
    if not (1 <= i <= len(divisors) and 1 <= j <= len(divisors)) or i == j:
        raise IndexError(f"positions ({i}, {j}) invalid for {len(divisors)} divisors")
    f, g = divisors[i - 1], divisors[j - 1]
    lt_f = leading_term(f, order)
    lt_g = leading_term(g, order)
    if lt_f.label != lt_g.label:
        raise LabelError("leading terms in different components admit no S-pair")
    m = lcm_of(lt_f.mono, lt_g.mono)
    # The syzygy is anchored at position i with unit coefficient; dividing
    # both head terms by their leading coefficients instead would fold the
    # shared sign of a differential set's leads into every syzygy.
    lead = element_from([
        (Fraction(1), m / lt_f.mono, IndexSeq((i,))),
        (-lt_f.coeff / lt_g.coeff, m / lt_g.mono, IndexSeq((j,))),
    ])
    sp = s_pair(f, g, order)
    result = divide(sp.spoly, divisors, order, prefer)
    if not result.remainder.is_zero():
        raise NotGroebnerError(
            f"S-element of divisors {i}, {j} has nonzero normal form")
    tail = []
    for k, poly in enumerate(result.quotients, start=1):
        for mono, coeff in poly.items():
            tail.append((-coeff * lt_f.coeff, mono, IndexSeq((k,))))
    return SchreyerSyzygy(i, j, lead + element_from(tail), lead)


def taylor_syzygy(complex_: FreeComplex, a: IndexSeq, b: IndexSeq,
                  base: BaseOrder | None = None, reverse: bool = False):
    """Schreyer syzygy of two differential images of the complex, divided
    against the full differential set of their degree.

    Returns the syzygy together with a copy whose position labels are
    replaced by the degree-q labels themselves.  The divisor list is taken
    descending for the forward order family and ascending for the reverse
    one, which is the arrangement under which the Schreyer order of the set
    agrees with the module order one degree up.  The division is steered
    toward the reducer whose label merges the current component with the
    first entry of b (last entry for the reverse family), which is the
    reducer the differential of the merged label predicts.
    """
    if len(a) != len(b):
        raise DegreeError("syzygy arguments must share a homological degree")
    if len(a) == 0:
        raise DegreeError("degree zero has no differential set")
    q = len(a)
    labels, elems = delta_set(complex_, q - 1, descending=not reverse)
    position = {label: idx + 1 for idx, label in enumerate(labels)}
    if a not in position or b not in position:
        raise LabelError(f"labels {a!r}, {b!r} not both in degree {q}")
    order = TaylorOrder(complex_.monomials, base or BaseOrder(), reverse)
    key = b[-1] if reverse else b[0]

    def prefer(lt):
        if key in lt.label:
            return None
        merged = lt.label.insert(key)
        pos = position.get(merged)
        return None if pos is None else pos - 1

    syz = schreyer_syzygy(elems, position[a], position[b], order, prefer)
    relabeled = syz.element.map_labels(lambda l: labels[l[0] - 1])
    return syz, relabeled


# ---------------------------------------------------------------------------
# Chain criterion on pair sets


def chain_criterion_eliminate(pairs, leads, witness_ok=None) -> set[tuple[int, int]]:
    """Prune a pair set by the chain criterion: drop (j, k) while some other
    index i still has both (i, j) and (i, k) present and lead_i divides
    lcm(lead_j, lead_k).  Scans witnesses ascending, pairs in sorted order,
    and repeats until stable, so the result is deterministic.

    `leads` maps 1-based indices to monomials (a list works).  An optional
    `witness_ok(i, j, k)` predicate restricts which i may act.
    """
    leads = list(leads)
    alive = set()
    for (j, k) in pairs:
        if not 1 <= j < k <= len(leads):
            raise IndexError(f"pair ({j}, {k}) out of range")
        alive.add((j, k))
    changed = True
    while changed:
        changed = False
        for i in range(1, len(leads) + 1):
            for (j, k) in sorted(alive):
                if i == j or i == k:
                    continue
                if witness_ok is not None and not witness_ok(i, j, k):
                    continue
                side_a = (min(i, j), max(i, j))
                side_b = (min(i, k), max(i, k))
                if side_a in alive and side_b in alive and \
                        leads[i - 1].divides(lcm_of(leads[j - 1], leads[k - 1])):
                    alive.discard((j, k))
                    changed = True
    return alive


# ---------------------------------------------------------------------------
# Direct filter


@dataclass(frozen=True)
class EliminationReport:
    """Outcome of the label filter: per homological degree, the labels kept
    and the (label, witness) pairs dropped."""

    direction: str
    kept: tuple[tuple[IndexSeq, ...], ...]
    dropped: tuple[tuple[tuple[IndexSeq, int], ...], ...]

    def kept_labels(self) -> frozenset[IndexSeq]:
        return frozenset(l for level in self.kept for l in level)

    def dropped_map(self) -> dict[IndexSeq, int]:
        return {l: w for level in self.dropped for (l, w) in level}


def _side_lcm(label: IndexSeq, i: int, monomials, direction: str) -> Monomial:
    if direction == "forward":
        part = label.above(i)
    else:
        part = label.below(i)
    if not len(part):
        return one_monomial(len(monomials[0].exps) if monomials else 0)
    return lcm_of(*(monomials[e - 1] for e in part))


def drop_witness(label: IndexSeq, monomials, direction: str = "forward") -> int | None:
    """Least index i < r whose monomial divides the lcm of the label entries
    on the far side of i (above for forward, below for reverse), or None."""
    _check_direction(direction)
    r = len(monomials)
    for i in range(1, r):
        if monomials[i - 1].divides(_side_lcm(label, i, monomials, direction)):
            return i
    return None


def lyubeznik_filter(complex_: FreeComplex, direction: str = "forward") -> EliminationReport:
    """Partition the labels of the complex by the one-sided divisibility
    test, with the least witness recorded for every dropped label."""
    _check_direction(direction)
    kept: list[tuple[IndexSeq, ...]] = []
    dropped: list[tuple[tuple[IndexSeq, int], ...]] = []
    for q in range(complex_.max_degree + 1):
        keep_q: list[IndexSeq] = []
        drop_q: list[tuple[IndexSeq, int]] = []
        for label in complex_.labels(q):
            w = drop_witness(label, complex_.monomials, direction)
            if w is None:
                keep_q.append(label)
            else:
                drop_q.append((label, w))
        kept.append(tuple(keep_q))
        dropped.append(tuple(drop_q))
    return EliminationReport(direction, tuple(kept), tuple(dropped))


# ---------------------------------------------------------------------------
# Chain route: rebuild the kept label sets degree by degree


def chain_elimination_route(monomials, direction: str = "forward",
                            restricted: bool = True) -> list[set[IndexSeq]]:
    """Kept labels per degree, computed without ever consulting the filter.

    Degree 1 prunes generators that an earlier one divides (a later one for
    the reverse direction, capped below the last index).  Each higher degree
    groups surviving labels sharing all but their first entry (last entry
    for reverse), forms the candidate pairs inside every group, and prunes
    them with the chain criterion.  `restricted` confines witnesses to the
    filter's side of the pair; without it any group member may act and the
    result can drop below the filter's answer.
    """
    _check_direction(direction)
    monomials = tuple(monomials)
    r = len(monomials)
    forward = direction == "forward"
    kept: list[set[IndexSeq]] = [{EMPTY_SEQ}]
    level = set()
    for c in range(1, r + 1):
        if forward:
            rivals = range(1, c)
        else:
            rivals = range(c + 1, r)
        if not any(monomials[i - 1].divides(monomials[c - 1]) for i in rivals):
            level.add(IndexSeq((c,)))
    kept.append(level)
    for q in range(2, r + 1):
        if not kept[q - 1]:
            break
        groups: dict[tuple[int, ...], list[int]] = {}
        for label in kept[q - 1]:
            stem = label.entries[1:] if forward else label.entries[:-1]
            edge = label.entries[0] if forward else label.entries[-1]
            groups.setdefault(stem, []).append(edge)
        level = set()
        for stem, members in groups.items():
            members.sort()
            stem_lcm = lcm_of(one_monomial(len(monomials[0].exps)),
                              *(monomials[e - 1] for e in stem))
            level |= _prune_group(stem, members, monomials, stem_lcm,
                                  forward, restricted, r)
        kept.append(level)
    while len(kept) > 1 and not kept[-1]:
        kept.pop()
    return kept


def _prune_group(stem, members, monomials, stem_lcm, forward, restricted, r):
    pairs = {(a, b) for ai, a in enumerate(members) for b in members[ai + 1:]}
    pair_lcm = {
        (a, b): lcm_of(stem_lcm, monomials[a - 1], monomials[b - 1])
        for (a, b) in pairs}
    if restricted:
        # One sweep in witness order suffices: a forward witness sits below
        # both pair entries and its side pairs fall only to smaller
        # witnesses, so sweeping descending never consumes a side pair
        # early (ascending for reverse, where witnesses sit above).
        sweep = sorted(members, reverse=forward)
        for h in sweep:
            for (a, b) in sorted(pairs):
                if h in (a, b):
                    continue
                if forward and not h < a:
                    continue
                if not forward and not (b < h <= r - 1):
                    continue
                if (min(h, a), max(h, a)) in pairs and \
                        (min(h, b), max(h, b)) in pairs and \
                        monomials[h - 1].divides(pair_lcm[(a, b)]):
                    pairs.discard((a, b))
    else:
        leads = [lcm_of(stem_lcm, m) for m in monomials]
        member_set = set(members)
        ok = lambda i, j, k: i in member_set
        pairs = chain_criterion_eliminate(pairs, leads, witness_ok=ok)
    out = set()
    for (a, b) in pairs:
        entries = (a, b) + stem if forward else stem + (a, b)
        out.add(IndexSeq(entries))
    return out


# ---------------------------------------------------------------------------
# Subcomplex extraction


def extract_subcomplex(complex_: FreeComplex, kept_labels, kind: str = "sub") -> FreeComplex:
    """Restrict the complex to a subset of labels.  The subset must be
    closed under the differential: every term of d(v_k) for a kept k must
    again sit on a kept label."""
    kept = frozenset(kept_labels)
    for label in kept:
        if not complex_.has_label(label):
            raise LabelError(f"label {label!r} not in the complex")
    degrees: list[list[IndexSeq]] = []
    multideg = {}
    diff = {}
    for q in range(complex_.max_degree + 1):
        level = [l for l in complex_.labels(q) if l in kept]
        for label in level:
            image = complex_.diff(label)
            for t in image.terms:
                if t.label not in kept:
                    raise NotASubcomplexError(
                        f"d(v_{label!r}) hits dropped label {t.label!r}")
            multideg[label] = complex_.multidegree(label)
            diff[label] = image
        degrees.append(level)
    while len(degrees) > 1 and not degrees[-1]:
        degrees.pop()
    return FreeComplex(complex_.context, complex_.monomials, kind,
                       degrees, multideg, diff)


def build_lyubeznik(complex_: FreeComplex, direction: str = "forward"):
    """Filter the complex and cut out the surviving subcomplex."""
    report = lyubeznik_filter(complex_, direction)
    sub = extract_subcomplex(complex_, report.kept_labels(), kind="lyubeznik")
    return sub, report
