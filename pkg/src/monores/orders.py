"""Term orders: base monomial orders, the induced orders on the free
modules of the Taylor complex, and Schreyer orders over a generator list.

A module term order compares (monomial, label) pairs; coefficients never
participate.  The Taylor order of degree q compares two terms by descending
through differential images: the leading term of s*delta(v_k) is
s*(m_k/m_k')*v_k' with k' = k minus its first entry (minus the last entry
for the reverse family).  Unfolding the recursion, the comparison is the
base order on the accumulated level-0 monomials s*m_k and t*m_l, followed
by label comparisons level by level; the label tie-break direction is what
separates the forward and reverse families.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .algebra import (IndexSeq, ModuleElement, ModuleTerm, Monomial,
                      lcm_of, one_monomial, seq_compare)
from .errors import ContextError, DegreeError, LabelError, ZeroElementError

BASE_KINDS = ("lex", "grlex", "grevlex")


@dataclass(frozen=True)
class BaseOrder:
    """A monomial order on the ring: lex, grlex or grevlex, optionally with
    a variable precedence permutation (most significant position first)."""

    kind: str = "lex"
    permutation: tuple[int, ...] | None = None

    def __post_init__(self):
        if self.kind not in BASE_KINDS:
            raise ValueError(f"unknown base order {self.kind!r}")
        if self.permutation is not None:
            if sorted(self.permutation) != list(range(len(self.permutation))):
                raise ValueError(f"{self.permutation} is not a permutation")

    def _perm(self, width: int) -> tuple[int, ...]:
        if self.permutation is None:
            return tuple(range(width))
        if len(self.permutation) != width:
            raise ContextError("permutation width does not match the ring")
        return self.permutation

    def cmp_mono(self, a: Monomial, b: Monomial) -> int:
        if len(a.exps) != len(b.exps):
            raise ContextError("monomials over different rings")
        if a.exps == b.exps:
            return 0
        perm = self._perm(len(a.exps))
        if self.kind in ("grlex", "grevlex"):
            da, db = a.degree, b.degree
            if da != db:
                return -1 if da < db else 1
        if self.kind == "grevlex":
            # smaller exponent in the least significant differing slot wins
            for p in reversed(perm):
                if a.exps[p] != b.exps[p]:
                    return -1 if a.exps[p] > b.exps[p] else 1
            return 0
        for p in perm:
            if a.exps[p] != b.exps[p]:
                return -1 if a.exps[p] < b.exps[p] else 1
        return 0

    def compare(self, mono_a, label_a, mono_b, label_b) -> int:
        if label_a != label_b:
            raise LabelError("base orders only compare terms in one component")
        return self.cmp_mono(mono_a, mono_b)


@dataclass(frozen=True)
class TaylorOrder:
    """The family of orders on the Taylor modules induced from a base order.

    `reverse=False` gives the forward family (smaller label sequence means
    smaller term on ties, differential images drop the first label entry),
    `reverse=True` the reverse family.  One instance works in any degree.
    """

    monomials: tuple[Monomial, ...]
    base: BaseOrder = field(default_factory=BaseOrder)
    reverse: bool = False

    def multidegree(self, label: IndexSeq) -> Monomial:
        width = len(self.monomials[0].exps) if self.monomials else 0
        if not len(label):
            return one_monomial(width)
        if label[-1] > len(self.monomials):
            raise LabelError(f"label {label!r} exceeds {len(self.monomials)} generators")
        return lcm_of(*(self.monomials[i - 1] for i in label))

    def compare(self, mono_a: Monomial, label_a: IndexSeq,
                mono_b: Monomial, label_b: IndexSeq) -> int:
        if len(label_a) != len(label_b):
            raise DegreeError("cannot compare terms of different homological degree")
        c = self.base.cmp_mono(mono_a * self.multidegree(label_a),
                               mono_b * self.multidegree(label_b))
        if c:
            return c
        q = len(label_a)
        for level in range(1, q + 1):
            if self.reverse:
                sub_a = IndexSeq(label_a.entries[:level])
                sub_b = IndexSeq(label_b.entries[:level])
                s = seq_compare(sub_a, sub_b)
                if s:
                    return -s
            else:
                sub_a = IndexSeq(label_a.entries[q - level:])
                sub_b = IndexSeq(label_b.entries[q - level:])
                s = seq_compare(sub_a, sub_b)
                if s:
                    return s
        return 0


@dataclass(frozen=True)
class SchreyerOrder:
    """Order on the free module over a generator list G: compare the leading
    terms of s*g_alpha and t*g_beta under the underlying order; on a tie the
    term sitting on the later generator is the smaller one."""

    generators: tuple[ModuleElement, ...]
    underlying: object  # any order with .compare

    def compare(self, mono_a: Monomial, label_a: IndexSeq,
                mono_b: Monomial, label_b: IndexSeq) -> int:
        alpha = _position(label_a, len(self.generators))
        beta = _position(label_b, len(self.generators))
        lt_a = leading_term(self.generators[alpha - 1], self.underlying)
        lt_b = leading_term(self.generators[beta - 1], self.underlying)
        c = self.underlying.compare(mono_a * lt_a.mono, lt_a.label,
                                    mono_b * lt_b.mono, lt_b.label)
        if c:
            return c
        if alpha == beta:
            return 0
        return -1 if alpha > beta else 1


def _position(label: IndexSeq, count: int) -> int:
    if len(label) != 1:
        raise LabelError(f"Schreyer labels are single positions, got {label!r}")
    if not 1 <= label[0] <= count:
        raise IndexError(f"generator position {label[0]} out of range 1..{count}")
    return label[0]


def leading_term(u: ModuleElement, order) -> ModuleTerm:
    """Maximal term of u under the order."""
    if u.is_zero():
        raise ZeroElementError("the zero element has no leading term")
    best = u.terms[0]
    for t in u.terms[1:]:
        if order.compare(best.mono, best.label, t.mono, t.label) < 0:
            best = t
    return best


def term_compare(order, s: ModuleTerm, t: ModuleTerm) -> int:
    return order.compare(s.mono, s.label, t.mono, t.label)
