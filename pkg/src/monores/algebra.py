"""Exact arithmetic base layer: monomials, polynomials and labeled module
elements over a polynomial ring k[x_1..x_n].

Scalars are `fractions.Fraction` throughout; nothing in the package ever
rounds.  Monomials are exponent vectors, labels are strictly ascending
1-based index sequences, and a module element is a finite sum of terms
coeff * monomial * v_label with all labels of one common length.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import ContextError, DegreeError, LabelError, ZeroElementError


@dataclass(frozen=True)
class VarContext:
    """Names of the ring variables; every monomial length must match."""

    names: tuple[str, ...]

    def __post_init__(self):
        if len(set(self.names)) != len(self.names):
            raise ContextError(f"duplicate variable names in {self.names}")

    @property
    def n(self) -> int:
        return len(self.names)

    def index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise ContextError(f"unknown variable {name!r}") from None


@dataclass(frozen=True)
class Monomial:
    """An exponent vector; the ambient context is implied by its length."""

    exps: tuple[int, ...]

    def __post_init__(self):
        if any(e < 0 for e in self.exps):
            raise ValueError(f"negative exponent in {self.exps}")

    @property
    def degree(self) -> int:
        return sum(self.exps)

    def is_one(self) -> bool:
        return not any(self.exps)

    def __mul__(self, other: "Monomial") -> "Monomial":
        _same_context(self, other)
        return Monomial(tuple(a + b for a, b in zip(self.exps, other.exps)))

    def __truediv__(self, other: "Monomial") -> "Monomial":
        # exact division only; anything else is a logic error upstream
        _same_context(self, other)
        if not other.divides(self):
            raise ArithmeticError(f"{other} does not divide {self}")
        return Monomial(tuple(a - b for a, b in zip(self.exps, other.exps)))

    def divides(self, other: "Monomial") -> bool:
        _same_context(self, other)
        return all(a <= b for a, b in zip(self.exps, other.exps))

    def format(self, context: VarContext) -> str:
        if len(self.exps) != context.n:
            raise ContextError("monomial does not match variable context")
        parts = []
        for name, e in zip(context.names, self.exps):
            if e == 1:
                parts.append(name)
            elif e > 1:
                parts.append(f"{name}^{e}")
        return "*".join(parts) if parts else "1"


def one_monomial(n: int) -> Monomial:
    return Monomial((0,) * n)


def lcm_of(*monomials: Monomial) -> Monomial:
    """Componentwise maximum; lcm of no monomials is 1 (needs a context hint
    from the caller, so at least one argument is required here)."""
    if not monomials:
        raise ValueError("lcm_of needs at least one monomial")
    first = monomials[0]
    for m in monomials[1:]:
        _same_context(first, m)
    return Monomial(tuple(max(col) for col in zip(*(m.exps for m in monomials))))


def _same_context(a: Monomial, b: Monomial):
    if len(a.exps) != len(b.exps):
        raise ContextError(
            f"monomials over different rings: {len(a.exps)} vs {len(b.exps)} variables")


@dataclass(frozen=True)
class IndexSeq:
    """Strictly ascending sequence of 1-based generator indices.

    The empty sequence labels the degree-0 generator v_().
    """

    entries: tuple[int, ...]

    def __post_init__(self):
        for a, b in zip(self.entries, self.entries[1:]):
            if a >= b:
                raise LabelError(f"label {self.entries} is not strictly ascending")
        if self.entries and self.entries[0] < 1:
            raise LabelError(f"label {self.entries} has an index below 1")

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __getitem__(self, i):
        return self.entries[i]

    def __contains__(self, i):
        return i in self.entries

    def drop(self, pos: int) -> "IndexSeq":
        """Remove the entry at 1-based position pos."""
        if not 1 <= pos <= len(self.entries):
            raise LabelError(f"position {pos} out of range for {self.entries}")
        return IndexSeq(self.entries[:pos - 1] + self.entries[pos:])

    def insert(self, i: int) -> "IndexSeq":
        if i in self.entries:
            raise LabelError(f"index {i} already present in {self.entries}")
        return IndexSeq(tuple(sorted(self.entries + (i,))))

    def above(self, i: int) -> "IndexSeq":
        """Subsequence of entries strictly greater than i."""
        return IndexSeq(tuple(e for e in self.entries if e > i))

    def below(self, i: int) -> "IndexSeq":
        return IndexSeq(tuple(e for e in self.entries if e < i))

    def __repr__(self):
        return f"({','.join(map(str, self.entries))})"


EMPTY_SEQ = IndexSeq(())


def seq_compare(a: IndexSeq, b: IndexSeq) -> int:
    """Entrywise comparison at the first difference; a proper prefix counts
    as smaller.  Returns -1, 0 or 1."""
    for x, y in zip(a.entries, b.entries):
        if x != y:
            return -1 if x < y else 1
    if len(a) != len(b):
        return -1 if len(a) < len(b) else 1
    return 0


@dataclass(frozen=True)
class ModuleTerm:
    """coeff * mono * v_label."""

    coeff: Fraction
    mono: Monomial
    label: IndexSeq

    def scaled(self, coeff: Fraction, mono: Monomial) -> "ModuleTerm":
        return ModuleTerm(self.coeff * coeff, self.mono * mono, self.label)


def _term_sort_key(t: ModuleTerm):
    return (t.label.entries, t.mono.exps)


class ModuleElement:
    """Finite sum of module terms, all labels of one length.

    Kept in a canonical form (coefficients combined, zeros dropped, terms
    sorted under a fixed structural key) so equality is plain comparison.
    Leading terms under a given order are computed on demand.
    """

    __slots__ = ("terms",)

    def __init__(self, terms=()):
        acc: dict[tuple, Fraction] = {}
        length = None
        width = None
        for t in terms:
            if length is None:
                length = len(t.label)
            elif len(t.label) != length:
                raise DegreeError(
                    f"mixed label lengths {length} and {len(t.label)} in one element")
            if width is None:
                width = len(t.mono.exps)
            elif len(t.mono.exps) != width:
                raise ContextError("mixed variable counts in one element")
            key = (t.mono, t.label)
            acc[key] = acc.get(key, Fraction(0)) + Fraction(t.coeff)
        kept = [ModuleTerm(c, m, l) for (m, l), c in acc.items() if c != 0]
        kept.sort(key=_term_sort_key, reverse=True)
        self.terms = tuple(kept)

    def is_zero(self) -> bool:
        return not self.terms

    @property
    def degree(self) -> int:
        if not self.terms:
            raise ZeroElementError("the zero element has no degree")
        return len(self.terms[0].label)

    def __add__(self, other: "ModuleElement") -> "ModuleElement":
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        return ModuleElement(self.terms + other.terms)

    def __sub__(self, other: "ModuleElement") -> "ModuleElement":
        return self + other.scale(Fraction(-1))

    def __neg__(self) -> "ModuleElement":
        return self.scale(Fraction(-1))

    def scale(self, coeff: Fraction) -> "ModuleElement":
        if coeff == 0:
            return ZERO_ELEMENT
        return ModuleElement(ModuleTerm(t.coeff * coeff, t.mono, t.label)
                             for t in self.terms)

    def term_mul(self, coeff: Fraction, mono: Monomial) -> "ModuleElement":
        """Multiply by the ring term coeff * mono."""
        if coeff == 0:
            return ZERO_ELEMENT
        return ModuleElement(t.scaled(coeff, mono) for t in self.terms)

    def map_labels(self, relabel) -> "ModuleElement":
        return ModuleElement(ModuleTerm(t.coeff, t.mono, relabel(t.label))
                             for t in self.terms)

    def labels(self) -> set[IndexSeq]:
        return {t.label for t in self.terms}

    def __eq__(self, other):
        return isinstance(other, ModuleElement) and self.terms == other.terms

    def __hash__(self):
        return hash(self.terms)

    def __iter__(self):
        return iter(self.terms)

    def __len__(self):
        return len(self.terms)

    def format(self, context: VarContext) -> str:
        if not self.terms:
            return "0"
        parts = []
        for t in self.terms:
            c = "" if t.coeff == 1 else ("-" if t.coeff == -1 else f"{t.coeff}*")
            parts.append(f"{c}{t.mono.format(context)}*v{t.label!r}")
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self):
        if not self.terms:
            return "ModuleElement(0)"
        return "ModuleElement(" + " + ".join(
            f"{t.coeff}*x^{t.mono.exps}*v{t.label!r}" for t in self.terms) + ")"


ZERO_ELEMENT = ModuleElement()


def element_from(items) -> ModuleElement:
    """Build an element from (coeff, Monomial, IndexSeq) triples."""
    return ModuleElement(ModuleTerm(Fraction(c), m, l) for c, m, l in items)


class Polynomial:
    """Sparse polynomial with Fraction coefficients; just enough arithmetic
    for division quotients (add a term, combine, apply to a module element).
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=None):
        self.coeffs: dict[Monomial, Fraction] = {}
        if coeffs:
            for m, c in dict(coeffs).items():
                c = Fraction(c)
                if c != 0:
                    self.coeffs[m] = c

    def is_zero(self) -> bool:
        return not self.coeffs

    def add_term(self, coeff: Fraction, mono: Monomial) -> None:
        c = self.coeffs.get(mono, Fraction(0)) + coeff
        if c == 0:
            self.coeffs.pop(mono, None)
        else:
            self.coeffs[mono] = c

    def items(self):
        return sorted(self.coeffs.items(), key=lambda kv: kv[0].exps, reverse=True)

    def apply_to(self, element: ModuleElement) -> ModuleElement:
        out = ZERO_ELEMENT
        for mono, coeff in self.coeffs.items():
            out = out + element.term_mul(coeff, mono)
        return out

    def __eq__(self, other):
        return isinstance(other, Polynomial) and self.coeffs == other.coeffs

    def __repr__(self):
        if not self.coeffs:
            return "Polynomial(0)"
        return "Polynomial(" + " + ".join(
            f"{c}*x^{m.exps}" for m, c in self.items()) + ")"
