"""Division with remainder in free modules, S-pairs, and the Buchberger
criterion.

Division is deterministic: at each step the leading term of the running
element is reduced by the first list entry whose leading term divides it.
A caller may supply a `prefer` hook proposing a reducer index for the
current leading term; the hook's choice is used only when that reducer's
leading term actually divides, so the hook can never break correctness,
only steer which standard representation comes out.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .algebra import (IndexSeq, ModuleElement, ModuleTerm, Monomial,
                      Polynomial, ZERO_ELEMENT, lcm_of)
from .errors import ZeroElementError
from .orders import leading_term


@dataclass(frozen=True)
class DivisionResult:
    quotients: tuple[Polynomial, ...]
    remainder: ModuleElement

    def reconstruct(self, divisors) -> ModuleElement:
        """Sum q_i * g_i + remainder; equals the dividend."""
        total = self.remainder
        for poly, g in zip(self.quotients, divisors):
            total = total + poly.apply_to(g)
        return total


def divide(u: ModuleElement, divisors, order, prefer=None) -> DivisionResult:
    divisors = list(divisors)
    lts = [leading_term(g, order) for g in divisors]
    quotients = [Polynomial() for _ in divisors]
    rem_terms: list[ModuleTerm] = []
    h = u
    while not h.is_zero():
        lt = leading_term(h, order)
        pick = None
        if prefer is not None:
            cand = prefer(lt)
            if cand is not None and _reduces(lts[cand], lt):
                pick = cand
        if pick is None:
            for i, g_lt in enumerate(lts):
                if _reduces(g_lt, lt):
                    pick = i
                    break
        if pick is None:
            rem_terms.append(lt)
            h = h - ModuleElement((lt,))
        else:
            coeff = lt.coeff / lts[pick].coeff
            mono = lt.mono / lts[pick].mono
            quotients[pick].add_term(coeff, mono)
            h = h - divisors[pick].term_mul(coeff, mono)
    return DivisionResult(tuple(quotients), ModuleElement(rem_terms))


def _reduces(g_lt: ModuleTerm, lt: ModuleTerm) -> bool:
    return g_lt.label == lt.label and g_lt.mono.divides(lt.mono)


def normal_form(u: ModuleElement, divisors, order) -> ModuleElement:
    return divide(u, divisors, order).remainder


@dataclass(frozen=True)
class SPair:
    """S-element of two module elements.  When the leading terms live in
    different components there is nothing to cancel and the pair is the
    zero sentinel (spoly zero, lcm None)."""

    spoly: ModuleElement
    lcm_mono: Monomial | None
    label: IndexSeq | None


def s_pair(f: ModuleElement, g: ModuleElement, order) -> SPair:
    lt_f = leading_term(f, order)
    lt_g = leading_term(g, order)
    if lt_f.label != lt_g.label:
        return SPair(ZERO_ELEMENT, None, None)
    m = lcm_of(lt_f.mono, lt_g.mono)
    left = f.term_mul(Fraction(1) / lt_f.coeff, m / lt_f.mono)
    right = g.term_mul(Fraction(1) / lt_g.coeff, m / lt_g.mono)
    return SPair(left - right, m, lt_f.label)


@dataclass(frozen=True)
class GroebnerReport:
    ok: bool
    failures: tuple[tuple[int, int], ...]  # 1-based positions with nonzero NF


def is_groebner(divisors, order) -> GroebnerReport:
    """Buchberger test: every S-pair reduces to zero against the list."""
    divisors = list(divisors)
    failures = []
    for i in range(len(divisors)):
        for j in range(i + 1, len(divisors)):
            sp = s_pair(divisors[i], divisors[j], order)
            if sp.spoly.is_zero():
                continue
            if not normal_form(sp.spoly, divisors, order).is_zero():
                failures.append((i + 1, j + 1))
    return GroebnerReport(not failures, tuple(failures))
