"""Homological verification over exact arithmetic.

A complex of multigraded free modules splits into finite-dimensional
strands, one per multidegree mu: the strand basis in degree q consists of
the labels whose multidegree divides mu, and the differential restricts to
a scalar matrix on each strand.  Exactness of the whole complex (away from
degree 0, where the cokernel must match the quotient by the ideal) is
equivalent to exactness of every strand, and only the multidegrees in the
lcm lattice of the generators can carry anything new, so checking those
finitely many strands decides the question.  Ranks are computed by
fraction-exact Gaussian elimination; nothing here rounds.
"""
from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .algebra import IndexSeq, Monomial, lcm_of
from .errors import DegreeError, LabelError
from .taylor import FreeComplex


def rational_rank(rows) -> int:
    """Rank of a matrix given as rows of Fractions, by Gaussian elimination."""
    work = [list(r) for r in rows]
    if not work or not work[0]:
        return 0
    ncols = len(work[0])
    rank = 0
    for col in range(ncols):
        pivot = None
        for i in range(rank, len(work)):
            if work[i][col]:
                pivot = i
                break
        if pivot is None:
            continue
        work[rank], work[pivot] = work[pivot], work[rank]
        prow = work[rank]
        pval = prow[col]
        for i in range(len(work)):
            if i != rank and work[i][col]:
                factor = work[i][col] / pval
                work[i] = [a - factor * b for a, b in zip(work[i], prow)]
        rank += 1
        if rank == len(work):
            break
    return rank


@dataclass(frozen=True)
class StrandMatrix:
    """Matrix of the degree-q differential restricted to the strand at mu:
    columns over the degree-q labels dividing mu, rows over degree q-1."""

    mu: Monomial
    q: int
    row_labels: tuple[IndexSeq, ...]
    col_labels: tuple[IndexSeq, ...]
    rows: tuple[tuple[Fraction, ...], ...]

    def rank(self) -> int:
        return rational_rank(self.rows)


def strand(complex_: FreeComplex, mu: Monomial, q: int) -> StrandMatrix:
    if not 1 <= q <= complex_.max_degree:
        raise DegreeError(f"strand differential needs 1 <= q <= {complex_.max_degree}")
    cols = tuple(l for l in complex_.labels(q)
                 if complex_.multidegree(l).divides(mu))
    rows = tuple(l for l in complex_.labels(q - 1)
                 if complex_.multidegree(l).divides(mu))
    row_pos = {l: i for i, l in enumerate(rows)}
    matrix = [[Fraction(0)] * len(cols) for _ in rows]
    for j, label in enumerate(cols):
        for t in complex_.diff(label).terms:
            i = row_pos.get(t.label)
            if i is None:
                raise LabelError(
                    f"differential of {label!r} exits the strand at {t.label!r}")
            matrix[i][j] += t.coeff
    return StrandMatrix(mu, q, rows, cols, tuple(tuple(r) for r in matrix))


def strand_homology(complex_: FreeComplex, mu: Monomial) -> list[int]:
    """Homology dimensions of the strand at mu, degree 0 upward."""
    dims = [sum(1 for l in complex_.labels(q)
                if complex_.multidegree(l).divides(mu))
            for q in range(complex_.max_degree + 1)]
    ranks = [0] + [strand(complex_, mu, q).rank()
                   for q in range(1, complex_.max_degree + 1)] + [0]
    return [dims[q] - ranks[q] - ranks[q + 1] for q in range(len(dims))]


def check_d_squared(complex_: FreeComplex) -> bool:
    for label in complex_.all_labels():
        if not complex_.delta(complex_.diff(label)).is_zero():
            return False
    return True


@dataclass(frozen=True)
class StrandCheck:
    mu: Monomial
    homology: tuple[int, ...]
    expected_h0: int
    ok: bool
    note: str = ""


@dataclass(frozen=True)
class ExactnessReport:
    ok: bool
    checks: tuple[StrandCheck, ...]

    def failures(self) -> tuple[StrandCheck, ...]:
        return tuple(c for c in self.checks if not c.ok)


def lattice_multidegrees(monomials) -> list[Monomial]:
    """All lcms of nonempty generator subsets, deduplicated and sorted."""
    monomials = tuple(monomials)
    seen = set()
    for size in range(1, len(monomials) + 1):
        for combo in combinations(monomials, size):
            seen.add(lcm_of(*combo))
    return sorted(seen, key=lambda m: m.exps)


def _thread_count(threads: int | None) -> int:
    if threads is not None:
        return max(1, threads)
    env = os.environ.get("MONORES_THREADS", "")
    try:
        return max(1, int(env))
    except ValueError:
        return 1


def check_exactness(complex_: FreeComplex, samples: int = 0, rng=None,
                    threads: int | None = None) -> ExactnessReport:
    """Check that every strand of the lcm lattice is exact in degrees >= 1
    and has the right degree-0 homology: one-dimensional exactly when mu
    avoids the ideal.  `samples` adds random multiples of lattice points,
    probing that homology is constant across a support pattern."""
    mus = lattice_multidegrees(complex_.monomials)
    if samples:
        if rng is None:
            raise ValueError("random sampling needs an rng")
        base = list(mus)
        n = complex_.context.n
        for _ in range(samples):
            seed_mu = base[rng.randrange(len(base))]
            bump = Monomial(tuple(rng.randrange(3) for _ in range(n)))
            mus.append(seed_mu * bump)

    def run(mu: Monomial) -> StrandCheck:
        expected_h0 = 0 if any(m.divides(mu) for m in complex_.monomials) else 1
        try:
            hom = tuple(strand_homology(complex_, mu))
        except LabelError as exc:
            return StrandCheck(mu, (), expected_h0, False, str(exc))
        ok = hom[0] == expected_h0 and all(h == 0 for h in hom[1:])
        return StrandCheck(mu, hom, expected_h0, ok)

    count = _thread_count(threads)
    if count > 1:
        with ThreadPoolExecutor(max_workers=count) as pool:
            checks = tuple(pool.map(run, mus))
    else:
        checks = tuple(run(mu) for mu in mus)
    return ExactnessReport(all(c.ok for c in checks), checks)


def betti_numbers(complex_: FreeComplex) -> list[int]:
    """Ranks of Tor against the residue field: tensoring kills every
    differential entry with a nonconstant monomial, and the homology
    dimensions of what is left are the Betti numbers.  Trailing zeros are
    trimmed."""
    top = complex_.max_degree
    dims = [len(complex_.labels(q)) for q in range(top + 1)]
    ranks = [0] * (top + 2)
    for q in range(1, top + 1):
        cols = complex_.labels(q)
        rows = {l: i for i, l in enumerate(complex_.labels(q - 1))}
        matrix = [[Fraction(0)] * len(cols) for _ in rows]
        for j, label in enumerate(cols):
            for t in complex_.diff(label).terms:
                if t.mono.is_one():
                    matrix[rows[t.label]][j] += t.coeff
        ranks[q] = rational_rank(matrix)
    betti = [dims[q] - ranks[q] - ranks[q + 1] for q in range(top + 1)]
    while len(betti) > 1 and betti[-1] == 0:
        betti.pop()
    return betti
