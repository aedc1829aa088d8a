"""Contracting and splitting homotopies.

The contraction psi acts on one term at a time: for x^mu v_k it looks for
the least generator index iota whose monomial divides x^mu * m_k (the
greatest index for the reverse direction) and, when iota lies strictly
outside the label on the matching side, returns the multihomogeneous
multiple of v_{iota merged into k}.  It extends k-linearly, not P-linearly.

From psi two further maps are built by recursion over the homological
degree: the projection f with f(v_empty) = v_empty and f(e) = psi(f(d e)),
extended P-linearly, and the splitting phi with phi = 0 in degree 0 and
phi(u) = psi(u - phi(d u) - f(u)).  f is cached per label; phi is only
k-linear, so its cache is keyed per term.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .algebra import (EMPTY_SEQ, IndexSeq, ModuleElement, ModuleTerm,
                      Monomial, ZERO_ELEMENT, element_from, lcm_of,
                      one_monomial)
from .division import divide, normal_form
from .errors import DegreeError, SdrInvariantError
from .orders import BaseOrder, TaylorOrder
from .reduction import _check_direction, extract_subcomplex
from .taylor import FreeComplex, delta_set


def _label_lcm(monomials, label: IndexSeq, width: int) -> Monomial:
    if not len(label):
        return one_monomial(width)
    return lcm_of(*(monomials[i - 1] for i in label))


def iota_index(t: ModuleTerm, monomials, direction: str = "forward") -> int | None:
    """Least (greatest, for reverse) generator index whose monomial divides
    mono(t) * multidegree(label(t)); None when no index qualifies."""
    _check_direction(direction)
    monomials = tuple(monomials)
    width = len(monomials[0].exps) if monomials else len(t.mono.exps)
    target = t.mono * _label_lcm(monomials, t.label, width)
    hits = (i for i in range(1, len(monomials) + 1)
            if monomials[i - 1].divides(target))
    if direction == "forward":
        return next(hits, None)
    best = None
    for i in hits:
        best = i
    return best


def psi(t: ModuleTerm, monomials, direction: str = "forward") -> ModuleElement:
    """Contraction of a single term, one homological degree up.

    The new index enters the label with the orientation sign of its slot,
    (-1)^(position-1); in the forward direction it lands in front, so the
    sign only shows up for reverse.
    """
    monomials = tuple(monomials)
    iota = iota_index(t, monomials, direction)
    if iota is None:
        return ZERO_ELEMENT
    k = t.label
    if len(k):
        inside = iota >= k[0] if direction == "forward" else iota <= k[-1]
        if inside:
            return ZERO_ELEMENT
    merged = k.insert(iota)
    sign = 1 if direction == "forward" else (-1) ** len(k)
    width = len(monomials[0].exps)
    target = t.mono * _label_lcm(monomials, k, width)
    return element_from([(sign * t.coeff,
                          target / _label_lcm(monomials, merged, width),
                          merged)])


def psi_characterization(t: ModuleTerm, monomials, order: TaylorOrder) -> ModuleElement:
    """Same contraction, read off from leading-term membership: scan the
    indices outside the label on the order's side and take the first whose
    merged multidegree, relative to the label's, divides mono(t)."""
    monomials = tuple(monomials)
    width = len(monomials[0].exps) if monomials else len(t.mono.exps)
    k = t.label
    m_k = _label_lcm(monomials, k, width)
    if order.reverse:
        lo = (k[-1] if len(k) else 0) + 1
        scan = range(len(monomials), lo - 1, -1)
    else:
        hi = k[0] if len(k) else len(monomials) + 1
        scan = range(1, hi)
    for i in scan:
        merged = k.insert(i)
        m_merged = _label_lcm(monomials, merged, width)
        if (m_merged / m_k).divides(t.mono):
            # the result w is pinned by lt(delta(w)) = t; the leading
            # coefficient of delta(v_merged) is 1 forward, (-1)^q reverse
            sign = 1 if not order.reverse else (-1) ** len(k)
            return element_from([(sign * t.coeff, t.mono * m_k / m_merged,
                                  merged)])
    return ZERO_ELEMENT


def psi_element(u: ModuleElement, monomials, direction: str = "forward") -> ModuleElement:
    """k-linear extension of psi to elements (psi is not P-linear)."""
    out = ZERO_ELEMENT
    for t in u.terms:
        out = out + psi(t, monomials, direction)
    return out


def generic_homotopy(complex_: FreeComplex, u: ModuleElement,
                     direction: str = "forward",
                     base: BaseOrder | None = None) -> ModuleElement:
    """Contraction built from division alone: write u as a combination of
    differential images plus its normal form, lift the quotients one degree
    up, and normalize the lift against the next differential set.  The
    normal forms make the result independent of how the division chooses
    reducers."""
    _check_direction(direction)
    if u.is_zero():
        return ZERO_ELEMENT
    q = u.degree
    if q > complex_.max_degree:
        raise DegreeError(f"degree {q} beyond the complex")
    reverse = direction == "reverse"
    if q == complex_.max_degree:
        return ZERO_ELEMENT
    order = TaylorOrder(complex_.monomials, base or BaseOrder(), reverse)
    labels, images = delta_set(complex_, q, descending=not reverse)
    result = divide(u, images, order)
    lift = []
    for pos, poly in enumerate(result.quotients):
        for mono, coeff in poly.items():
            lift.append((coeff, mono, labels[pos]))
    v = element_from(lift)
    if v.is_zero() or q + 1 == complex_.max_degree:
        return v
    _, next_images = delta_set(complex_, q + 1, descending=not reverse)
    return normal_form(v, next_images, order)


# ---------------------------------------------------------------------------
# The projection f and the splitting phi


class TransferMap:
    """The P-linear projection determined by f(v_empty) = v_empty and
    f(e) = psi(f(d e)) on every other basis element."""

    def __init__(self, complex_: FreeComplex, direction: str = "forward"):
        _check_direction(direction)
        self.complex = complex_
        self.direction = direction
        self._cache: dict[IndexSeq, ModuleElement] = {
            EMPTY_SEQ: element_from([(Fraction(1),
                                      one_monomial(complex_.context.n),
                                      EMPTY_SEQ)])}

    def on_label(self, label: IndexSeq) -> ModuleElement:
        cached = self._cache.get(label)
        if cached is not None:
            return cached
        image = self.complex.diff(label)
        carried = ZERO_ELEMENT
        for t in image.terms:
            carried = carried + self.on_label(t.label).term_mul(t.coeff, t.mono)
        out = psi_element(carried, self.complex.monomials, self.direction)
        self._cache[label] = out
        return out

    def __call__(self, u: ModuleElement) -> ModuleElement:
        out = ZERO_ELEMENT
        for t in u.terms:
            out = out + self.on_label(t.label).term_mul(t.coeff, t.mono)
        return out

    def fixed_labels(self) -> frozenset[IndexSeq]:
        """Labels whose basis element f leaves untouched."""
        fixed = []
        for label in self.complex.all_labels():
            e = element_from([(Fraction(1), one_monomial(self.complex.context.n),
                               label)])
            if self.on_label(label) == e:
                fixed.append(label)
        return frozenset(fixed)


def f_map(complex_: FreeComplex, label: IndexSeq,
          direction: str = "forward") -> ModuleElement:
    return TransferMap(complex_, direction).on_label(label)


class SplittingMap:
    """The splitting homotopy phi: zero in degree 0, and one degree up
    phi(u) = psi(u - phi(d u) - f(u)).  Only k-linear, hence cached per
    (monomial, label) term."""

    def __init__(self, complex_: FreeComplex, direction: str = "forward",
                 transfer: TransferMap | None = None):
        _check_direction(direction)
        self.complex = complex_
        self.direction = direction
        self.transfer = transfer or TransferMap(complex_, direction)
        self._cache: dict[tuple, ModuleElement] = {}

    def _on_term(self, t: ModuleTerm) -> ModuleElement:
        if not len(t.label):
            return ZERO_ELEMENT
        key = (t.mono.exps, t.label.entries)
        cached = self._cache.get(key)
        if cached is None:
            e = element_from([(Fraction(1), t.mono, t.label)])
            w = e - self(self.complex.delta(e)) - self.transfer(e)
            cached = psi_element(w, self.complex.monomials, self.direction)
            self._cache[key] = cached
        return cached.scale(t.coeff)

    def __call__(self, u: ModuleElement) -> ModuleElement:
        out = ZERO_ELEMENT
        for t in u.terms:
            out = out + self._on_term(t)
        return out


def phi_map(complex_: FreeComplex, u: ModuleElement,
            direction: str = "forward") -> ModuleElement:
    return SplittingMap(complex_, direction)(u)


# ---------------------------------------------------------------------------
# Strong deformation retracts


@dataclass(frozen=True)
class SDR:
    """A strong deformation retract: inclusion and projection between the
    big complex and the small side, with the splitting homotopy witnessing
    the retraction.  For the quotient variant the small side is the ring
    modulo the ideal, presented by normal-form representatives in degree 0,
    and `small` is None."""

    kind: str
    direction: str
    big: FreeComplex
    small: FreeComplex | None
    inclusion: object
    projection: object
    splitting: object

    def include(self, u: ModuleElement) -> ModuleElement:
        return self.inclusion(u)

    def project(self, u: ModuleElement) -> ModuleElement:
        return self.projection(u)

    def split(self, u: ModuleElement) -> ModuleElement:
        return self.splitting(u)


def build_sdr(complex_: FreeComplex, kind: str = "f",
              direction: str = "forward") -> SDR:
    """Assemble a retract of the complex and verify its identities on every
    basis element before handing it out.

    kind "f": projection f, splitting phi, small side the subcomplex on the
    labels f fixes.  kind "epsilon": projection onto degree-0 normal forms,
    inclusion the representative map, splitting psi.
    """
    _check_direction(direction)
    if kind == "f":
        return _build_f_sdr(complex_, direction)
    if kind == "epsilon":
        return _build_epsilon_sdr(complex_, direction)
    raise ValueError(f"unknown retract kind {kind!r}; use 'f' or 'epsilon'")


def _basis(complex_):
    unit = one_monomial(complex_.context.n)
    for label in complex_.all_labels():
        yield label, element_from([(Fraction(1), unit, label)])


def _build_f_sdr(complex_: FreeComplex, direction: str) -> SDR:
    f = TransferMap(complex_, direction)
    phi = SplittingMap(complex_, direction, transfer=f)
    fixed = f.fixed_labels()
    small = extract_subcomplex(complex_, fixed, kind="sub")
    delta = complex_.delta
    for label, e in _basis(complex_):
        fe = f(e)
        if f(fe) != fe:
            raise SdrInvariantError(f"projection not idempotent at {label!r}")
        if e - delta(phi(e)) - phi(delta(e)) != fe:
            raise SdrInvariantError(f"1 - d phi - phi d differs from f at {label!r}")
        if not phi(phi(e)).is_zero():
            raise SdrInvariantError(f"phi^2 nonzero at {label!r}")
        if phi(delta(phi(e))) != phi(e):
            raise SdrInvariantError(f"phi d phi differs from phi at {label!r}")
        if label in fixed and fe != e:
            raise SdrInvariantError(f"projection moves kept label {label!r}")
    return SDR("f", direction, complex_, small, _Inclusion(fixed), f, phi)


class _Inclusion:
    """Identity embedding of the small complex, guarding its label set."""

    def __init__(self, kept: frozenset[IndexSeq]):
        self.kept = kept

    def __call__(self, u: ModuleElement) -> ModuleElement:
        stray = u.labels() - self.kept
        if stray:
            raise SdrInvariantError(f"labels {stray} lie outside the retract")
        return u


def _build_epsilon_sdr(complex_: FreeComplex, direction: str) -> SDR:
    reverse = direction == "reverse"
    order = TaylorOrder(complex_.monomials, BaseOrder(), reverse)
    _, images = delta_set(complex_, 0, descending=not reverse)

    def project(u: ModuleElement) -> ModuleElement:
        if u.is_zero() or u.degree > 0:
            return ZERO_ELEMENT
        return normal_form(u, images, order)

    def include(rep: ModuleElement) -> ModuleElement:
        if not rep.is_zero() and rep.degree > 0:
            raise DegreeError("representatives live in degree 0")
        return project(rep) if not rep.is_zero() else rep

    def split(u: ModuleElement) -> ModuleElement:
        return psi_element(u, complex_.monomials, direction)

    delta = complex_.delta
    for label, e in _basis(complex_):
        if not split(split(e)).is_zero():
            raise SdrInvariantError(f"psi^2 nonzero at {label!r}")
        recovered = delta(split(e)) + split(delta(e)) + include(project(e))
        if recovered != e:
            raise SdrInvariantError(f"contraction identity fails at {label!r}")
    return SDR("epsilon", direction, complex_, None, include, project, split)
