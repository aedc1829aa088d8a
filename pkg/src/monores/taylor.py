"""The Taylor complex of a finite monomial set and the machinery shared by
its subcomplexes.

Generators in homological degree q are labelled by strictly ascending index
sequences of length q into the monomial list; the label's multidegree is
the lcm of the chosen monomials.  The differential of v_k alternates over
the ways of dropping one entry, scaled so everything stays multihomogeneous:

    d(v_k) = sum_l (-1)^(l-1) (m_k / m_{k minus entry l}) v_{k minus entry l}

Degree 0 has the single empty label; its differential is zero.
"""
from __future__ import annotations

from fractions import Fraction
from itertools import combinations

from .algebra import (EMPTY_SEQ, IndexSeq, ModuleElement, Monomial,
                      VarContext, ZERO_ELEMENT, element_from, lcm_of,
                      one_monomial, seq_compare)
from .errors import (CapacityError, ContextError, DegreeError,
                     DuplicateError, LabelError)

GENERATOR_CAP = 12


class FreeComplex:
    """A finite complex of free multigraded modules with labelled bases.

    Instances are immutable after construction.  `degrees[q]` lists the
    labels of homological degree q in ascending label order; `diff(label)`
    is the differential image of that basis element.
    """

    __slots__ = ("context", "monomials", "kind", "_degrees", "_multideg",
                 "_diff", "_label_set")

    def __init__(self, context: VarContext, monomials, kind: str,
                 degrees, multidegrees, differentials):
        self.context = context
        self.monomials = tuple(monomials)
        self.kind = kind
        self._degrees = tuple(tuple(labels) for labels in degrees)
        self._multideg = dict(multidegrees)
        self._diff = dict(differentials)
        self._label_set = frozenset(self._multideg)
        for labels in self._degrees:
            for lab in labels:
                if lab not in self._multideg or lab not in self._diff:
                    raise LabelError(f"label {lab!r} lacks data")

    # -- shape ------------------------------------------------------------

    @property
    def max_degree(self) -> int:
        return len(self._degrees) - 1

    def ranks(self) -> tuple[int, ...]:
        return tuple(len(labels) for labels in self._degrees)

    def labels(self, q: int) -> tuple[IndexSeq, ...]:
        if not 0 <= q <= self.max_degree:
            raise DegreeError(f"degree {q} out of range 0..{self.max_degree}")
        return self._degrees[q]

    def all_labels(self):
        for labels in self._degrees:
            yield from labels

    def has_label(self, label: IndexSeq) -> bool:
        return label in self._label_set

    def multidegree(self, label: IndexSeq) -> Monomial:
        try:
            return self._multideg[label]
        except KeyError:
            raise LabelError(f"label {label!r} not in the complex") from None

    # -- differential -----------------------------------------------------

    def diff(self, label: IndexSeq) -> ModuleElement:
        try:
            return self._diff[label]
        except KeyError:
            raise LabelError(f"label {label!r} not in the complex") from None

    def delta(self, u: ModuleElement) -> ModuleElement:
        total = ZERO_ELEMENT
        for t in u.terms:
            total = total + self.diff(t.label).term_mul(t.coeff, t.mono)
        return total

    def __eq__(self, other):
        if not isinstance(other, FreeComplex):
            return NotImplemented
        return (self.context == other.context
                and self.monomials == other.monomials
                and self.kind == other.kind
                and self._degrees == other._degrees
                and self._multideg == other._multideg
                and self._diff == other._diff)

    def __repr__(self):
        return f"FreeComplex(kind={self.kind!r}, ranks={self.ranks()})"


def build_taylor(context: VarContext, monomials, force: bool = False) -> FreeComplex:
    """Taylor complex of the given monomials (order matters for labels)."""
    monomials = tuple(monomials)
    r = len(monomials)
    for m in monomials:
        if len(m.exps) != context.n:
            raise ContextError(f"{m!r} does not live in {context.names}")
    if len(set(monomials)) != r:
        raise DuplicateError("generator monomials must be distinct")
    if r > GENERATOR_CAP and not force:
        raise CapacityError(
            f"{r} generators means 2^{r} basis elements; pass force=True "
            "if that is intended")

    multideg: dict[IndexSeq, Monomial] = {EMPTY_SEQ: one_monomial(context.n)}
    diff: dict[IndexSeq, ModuleElement] = {EMPTY_SEQ: ZERO_ELEMENT}
    degrees: list[list[IndexSeq]] = [[EMPTY_SEQ]]
    for q in range(1, r + 1):
        level: list[IndexSeq] = []
        for combo in combinations(range(1, r + 1), q):
            label = IndexSeq(combo)
            m_k = lcm_of(*(monomials[i - 1] for i in combo))
            multideg[label] = m_k
            terms = []
            for pos in range(1, q + 1):
                sub = label.drop(pos)
                sign = Fraction(1) if pos % 2 else Fraction(-1)
                terms.append((sign, m_k / multideg[sub], sub))
            diff[label] = element_from(terms)
            level.append(label)
        degrees.append(level)
    return FreeComplex(context, monomials, "taylor", degrees, multideg, diff)


def delta_set(complex_: FreeComplex, q: int, descending: bool = False):
    """Differential images of the degree q+1 basis, as an ordered list.

    Returned in ascending label order by default, descending when asked;
    paired with the labels themselves so callers can track positions.
    """
    if not 0 <= q < complex_.max_degree:
        raise DegreeError(
            f"no differential set at degree {q} in a complex of max degree "
            f"{complex_.max_degree}")
    labels = sorted(complex_.labels(q + 1),
                    key=lambda l: l.entries, reverse=descending)
    return labels, [complex_.diff(l) for l in labels]
