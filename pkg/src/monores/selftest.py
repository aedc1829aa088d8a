"""Randomized self-test: generate small monomial sets and drive every layer
of the package against the identities it promises.

All randomness flows from one seeded generator, so a failing seed can be
replayed.  Heavier checks (Groebner tests, syzygy identities, retracts)
run on a rotating schedule to keep a 100-trial run quick.
"""
from __future__ import annotations

import random
from fractions import Fraction

from .algebra import ModuleElement, Monomial, VarContext, element_from
from .division import is_groebner, normal_form
from .errors import SdrInvariantError
from .homotopy import (SplittingMap, TransferMap, build_sdr, generic_homotopy,
                       psi, psi_characterization, psi_element)
from .orders import BaseOrder, TaylorOrder, leading_term
from .reduction import (build_lyubeznik, chain_elimination_route,
                        lyubeznik_filter, taylor_syzygy)
from .taylor import build_taylor, delta_set
from .verify import betti_numbers, check_d_squared, check_exactness

_NAMES = ("x", "y", "z", "u", "v", "w")


def random_monomial_set(rng: random.Random, max_r: int, max_n: int,
                        maxdeg: int):
    """A variable context and distinct nonunit monomials, at most max_r of
    them.  Shrinks r when the exponent box cannot hold enough monomials."""
    n = rng.randint(1, max_n)
    names = _NAMES[:n] if n <= len(_NAMES) else tuple(f"x{i}" for i in range(1, n + 1))
    context = VarContext(tuple(names))
    r = rng.randint(1, max_r)
    monomials: list[Monomial] = []
    seen = set()
    attempts = 0
    while len(monomials) < r and attempts < 300:
        attempts += 1
        exps = tuple(rng.randint(0, maxdeg) for _ in range(n))
        if not any(exps) or exps in seen:
            continue
        seen.add(exps)
        monomials.append(Monomial(exps))
    return context, tuple(monomials)


def _random_element(rng, complex_, q, width) -> ModuleElement:
    labels = complex_.labels(q)
    terms = []
    for _ in range(rng.randint(1, 3)):
        label = labels[rng.randrange(len(labels))]
        mono = Monomial(tuple(rng.randint(0, 2) for _ in range(width)))
        coeff = rng.choice((-2, -1, 1, 2, 3))
        terms.append((Fraction(coeff), mono, label))
    return element_from(terms)


class _Failure(Exception):
    pass


def _expect(cond: bool, message: str):
    if not cond:
        raise _Failure(message)


def _check_leading_terms(complex_, monomials):
    for base in (BaseOrder("lex"), BaseOrder("grevlex")):
        for reverse in (False, True):
            order = TaylorOrder(monomials, base, reverse)
            for q in range(1, complex_.max_degree + 1):
                for label in complex_.labels(q):
                    lt = leading_term(complex_.diff(label), order)
                    pos = q if reverse else 1
                    sub = label.drop(pos)
                    sign = Fraction(-1) ** (pos - 1)
                    m_quot = complex_.multidegree(label) / complex_.multidegree(sub)
                    _expect(lt.label == sub and lt.mono == m_quot
                            and lt.coeff == sign,
                            f"leading term of d(v_{label!r}) off under "
                            f"{base.kind}/{'rev' if reverse else 'fwd'}")


def _check_elimination(complex_, monomials):
    for direction in ("forward", "reverse"):
        report = lyubeznik_filter(complex_, direction)
        kept = report.kept_labels()
        for label in kept:
            for t in complex_.diff(label).terms:
                _expect(t.label in kept,
                        f"kept labels not closed under d ({direction})")
        route = chain_elimination_route(monomials, direction)
        route_all = set().union(*route)
        _expect(route_all == kept,
                f"chain route disagrees with filter ({direction})")
        sub, _ = build_lyubeznik(complex_, direction)
        ex = check_exactness(sub)
        _expect(ex.ok, f"pruned complex not exact ({direction})")


def _check_psi_stays(rng, complex_, monomials, width):
    # the contraction never leaves the pruned label set
    for direction in ("forward", "reverse"):
        kept = lyubeznik_filter(complex_, direction).kept_labels()
        for label in kept:
            for _ in range(2):
                mono = Monomial(tuple(rng.randint(0, 2) for _ in range(width)))
                e = element_from([(Fraction(1), mono, label)])
                image = psi_element(e, monomials, direction)
                _expect(image.labels() <= kept,
                        f"contraction leaves the pruned complex ({direction})")


def _homotopy_identities(complex_, u, direction):
    monomials = complex_.monomials
    q = u.degree
    lhs = complex_.delta(psi_element(u, monomials, direction))
    reverse = direction == "reverse"
    if q > 0:
        lhs = lhs + psi_element(complex_.delta(u), monomials, direction)
    else:
        # in degree 0 the identity holds relative to the quotient: the part
        # of u missed by d psi is its canonical representative
        order0 = TaylorOrder(monomials, BaseOrder(), reverse)
        _, images0 = delta_set(complex_, 0, descending=not reverse)
        lhs = lhs + normal_form(u, images0, order0)
    _expect(lhs == u, f"d psi + psi d != 1 ({direction}, degree {q})")
    _expect(psi_element(psi_element(u, monomials, direction),
                        monomials, direction).is_zero(),
            f"psi^2 != 0 ({direction})")
    order = TaylorOrder(monomials, BaseOrder(), reverse)
    for t in u.terms:
        _expect(psi(t, monomials, direction) ==
                psi_characterization(t, monomials, order),
                "the two contraction routes disagree")
    _expect(generic_homotopy(complex_, u, direction) ==
            psi_element(u, monomials, direction),
            f"division homotopy differs from formula ({direction})")


def _check_homotopy(rng, complex_, monomials, width):
    for direction in ("forward", "reverse"):
        for _ in range(3):
            q = rng.randrange(complex_.max_degree + 1)
            u = _random_element(rng, complex_, q, width)
            if u.is_zero():
                continue
            _homotopy_identities(complex_, u, direction)


def _check_normal_form_link(rng, complex_, monomials, width):
    # psi(d(u)) is the normal form of u against the differential set
    for direction in ("forward", "reverse"):
        reverse = direction == "reverse"
        order = TaylorOrder(monomials, BaseOrder(), reverse)
        for q in range(1, complex_.max_degree):
            u = _random_element(rng, complex_, q, width)
            if u.is_zero():
                continue
            _, images = delta_set(complex_, q, descending=not reverse)
            nf = normal_form(u, images, order)
            _expect(psi_element(complex_.delta(u), monomials, direction) == nf,
                    f"psi d is not the normal form map ({direction})")


def _check_groebner(complex_, monomials):
    for reverse in (False, True):
        order = TaylorOrder(monomials, BaseOrder(), reverse)
        for q in range(complex_.max_degree):
            _, images = delta_set(complex_, q, descending=not reverse)
            _expect(is_groebner(images, order).ok,
                    f"differential set at degree {q} fails the pair test "
                    f"({'rev' if reverse else 'fwd'})")


def _check_syzygies(rng, complex_):
    labels = [l for l in complex_.all_labels() if len(l) >= 2]
    if not labels:
        return
    for _ in range(2):
        label = labels[rng.randrange(len(labels))]
        _, fwd = taylor_syzygy(complex_, label.drop(1), label.drop(2))
        _expect(fwd == complex_.diff(label),
                f"syzygy of the first two facets of {label!r} is not d")
        q = len(label)
        _, rev = taylor_syzygy(complex_, label.drop(q), label.drop(q - 1),
                               reverse=True)
        sign = Fraction(-1) ** (q - 1)
        _expect(rev == complex_.diff(label).scale(sign),
                f"reverse syzygy of {label!r} has the wrong sign")


def _check_betti(complex_):
    betti = betti_numbers(complex_)
    ranks = complex_.ranks()
    _expect(betti[0] == 1, "betti_0 != 1")
    for direction in ("forward", "reverse"):
        sub, _ = build_lyubeznik(complex_, direction)
        _expect(betti_numbers(sub) == betti,
                f"pruned complex changes betti numbers ({direction})")
        for q, b in enumerate(betti):
            _expect(sub.ranks()[q] >= b, "rank below betti number")
    for q, b in enumerate(betti):
        _expect(ranks[q] >= b, "rank below betti number")


def homotopy_check(complex_, direction: str = "forward", seed: int = 0,
                   rounds: int = 3) -> str | None:
    """Contraction identities for one direction on seeded random elements;
    returns a failure description or None."""
    rng = random.Random(seed)
    width = complex_.context.n
    try:
        for q in range(complex_.max_degree + 1):
            for _ in range(rounds):
                u = _random_element(rng, complex_, q, width)
                if not u.is_zero():
                    _homotopy_identities(complex_, u, direction)
    except _Failure as exc:
        return str(exc)
    return None


def splitting_check(complex_, direction: str = "forward",
                    seed: int = 0) -> str | None:
    """Splitting homotopy axioms and the match between the projection's
    fixed labels and the label filter."""
    rng = random.Random(seed)
    width = complex_.context.n
    f = TransferMap(complex_, direction)
    phi = SplittingMap(complex_, direction, transfer=f)
    delta = complex_.delta
    try:
        for q in range(complex_.max_degree + 1):
            for _ in range(3):
                u = _random_element(rng, complex_, q, width)
                _expect(phi(phi(u)).is_zero(), f"phi^2 != 0 ({direction})")
                _expect(phi(delta(phi(u))) == phi(u),
                        f"phi d phi != phi ({direction})")
                pu = u - delta(phi(u)) - phi(delta(u))
                fu = f(u)
                _expect(pu == fu, f"1 - d phi - phi d != f ({direction})")
                _expect(f(fu) == fu, f"f not idempotent ({direction})")
        if direction == "forward":
            # the fixed-label characterization is a forward statement: the
            # reverse filter caps witnesses below r, the reverse transfer
            # map does not
            kept = lyubeznik_filter(complex_, direction).kept_labels()
            _expect(f.fixed_labels() == kept,
                    f"fixed labels differ from the filter ({direction})")
    except _Failure as exc:
        return str(exc)
    return None


def sdr_check(complex_) -> str | None:
    """Eagerly build all four retracts; report the first broken invariant."""
    try:
        for kind in ("f", "epsilon"):
            for direction in ("forward", "reverse"):
                build_sdr(complex_, kind=kind, direction=direction)
    except SdrInvariantError as exc:
        return str(exc)
    return None


def run_selftest(trials: int, max_r: int, max_n: int, maxdeg: int, seed: int,
                 log=print) -> bool:
    rng = random.Random(seed)
    for trial in range(trials):
        context, monomials = random_monomial_set(rng, max_r, max_n, maxdeg)
        complex_ = build_taylor(context, monomials)
        width = context.n
        try:
            _expect(check_d_squared(complex_), "d^2 != 0")
            _check_leading_terms(complex_, monomials)
            _check_elimination(complex_, monomials)
            _check_psi_stays(rng, complex_, monomials, width)
            _check_homotopy(rng, complex_, monomials, width)
            _check_normal_form_link(rng, complex_, monomials, width)
            _expect(check_exactness(complex_, samples=2, rng=rng).ok,
                    "full complex not exact")
            _check_betti(complex_)
            if trial % 5 == 0:
                _check_syzygies(rng, complex_)
            if trial % 10 == 0 and len(monomials) <= 4:
                _check_groebner(complex_, monomials)
                for kind in ("f", "epsilon"):
                    build_sdr(complex_, kind=kind)
                    build_sdr(complex_, kind=kind, direction="reverse")
        except (_Failure, SdrInvariantError) as exc:
            log(f"selftest: trial {trial} failed: {exc}")
            log(f"selftest: instance {[m.exps for m in monomials]} "
                f"over {context.names} (seed {seed})")
            return False
    log(f"selftest: {trials} trials passed (seed {seed})")
    return True
