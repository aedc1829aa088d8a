"""Brute-force recomputation of the worked fixture values.

Everything here is derived from first principles with subset enumeration
and exact rank computations (sympy over QQ).  No imports from the library;
this script is the independent oracle the test fixtures were frozen from.

Run:  python tools/derive_fixtures.py
"""
from __future__ import annotations

import itertools
from fractions import Fraction

from sympy import Matrix, Rational


# ---------------------------------------------------------------- monomials

def lcm(*monos):
    return tuple(max(col) for col in zip(*monos))


def divides(a, b):
    return all(x <= y for x, y in zip(a, b))


def quot(a, b):
    assert divides(b, a)
    return tuple(x - y for x, y in zip(a, b))


def mono_str(mono, names):
    parts = []
    for name, e in zip(names, mono):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts) if parts else "1"


# ----------------------------------------------------------- taylor complex

def subsets(r, q):
    return list(itertools.combinations(range(1, r + 1), q))


def multidegree(label, M):
    if not label:
        return tuple(0 for _ in M[0])
    return lcm(*(M[i - 1] for i in label))


def delta_row(label, M):
    """delta(v_label) as [(coeff, mono, sublabel)], alternating-sum formula."""
    mk = multidegree(label, M)
    out = []
    for ell in range(1, len(label) + 1):
        sub = label[:ell - 1] + label[ell:]
        coeff = 1 if ell % 2 == 1 else -1
        out.append((coeff, quot(mk, multidegree(sub, M)), sub))
    return out


def taylor_labels(r):
    return {q: subsets(r, q) for q in range(r + 1)}


# --------------------------------------------------------------- rank tools

def strand_matrix(M, labels_by_q, mu, q):
    """Matrix of delta_q restricted to multidegree mu, rows=deg q-1 basis."""
    cols = [k for k in labels_by_q.get(q, []) if divides(multidegree(k, M), mu)]
    rows = [k for k in labels_by_q.get(q - 1, []) if divides(multidegree(k, M), mu)]
    idx = {k: i for i, k in enumerate(rows)}
    mat = [[0] * len(cols) for _ in rows]
    for j, k in enumerate(cols):
        for coeff, mono, sub in delta_row(k, M):
            if sub in idx:
                mat[idx[sub]][j] = coeff
    return rows, cols, mat


def rank(mat):
    if not mat or not mat[0]:
        return 0
    return Matrix(mat).rank()


def strand_homology(M, labels_by_q, mu, maxq):
    """H_q at multidegree mu for q = 0..maxq (H_0 against P, not P/J)."""
    dims = {}
    h = {}
    for q in range(maxq + 1):
        _, cols_q, mat_q = strand_matrix(M, labels_by_q, mu, q)
        _, cols_q1, mat_q1 = strand_matrix(M, labels_by_q, mu, q + 1)
        dims[q] = len(cols_q)
        rk_q = rank(mat_q)
        rk_q1 = rank(mat_q1)
        if q == 0:
            h[q] = dims[q] - rk_q1
        else:
            h[q] = (dims[q] - rk_q) - rk_q1
    return dims, h


def exactness_report(M, labels_by_q, names):
    r = len(M)
    maxq = max(labels_by_q)
    mus = sorted({multidegree(k, M) for q in labels_by_q for k in labels_by_q[q] if k})
    bad = []
    for mu in mus:
        dims, h = strand_homology(M, labels_by_q, mu, maxq)
        in_j = any(divides(m, mu) for m in M)
        want_h0 = 0 if in_j else 1
        ok = h[0] == want_h0 and all(h[q] == 0 for q in range(1, maxq + 1))
        if not ok:
            bad.append((mu, h))
    return mus, bad


def betti(M, labels_by_q):
    """Homology ranks of the complex tensored with k (unit entries only)."""
    maxq = max(labels_by_q)
    out = []
    zero = tuple(0 for _ in M[0])
    def tensored(q):
        cols = labels_by_q.get(q, [])
        rows = labels_by_q.get(q - 1, [])
        idx = {k: i for i, k in enumerate(rows)}
        mat = [[0] * len(cols) for _ in rows]
        for j, k in enumerate(cols):
            for coeff, mono, sub in delta_row(k, M):
                if mono == zero and sub in idx:
                    mat[idx[sub]][j] = coeff
        return len(cols), mat
    for q in range(maxq + 1):
        dim_q, mat_q = tensored(q)
        _, mat_q1 = tensored(q + 1)
        rk_q = rank(mat_q) if q > 0 else 0
        out.append(dim_q - rk_q - rank(mat_q1))
    while out and out[-1] == 0:
        out.pop()
    return out


# ---------------------------------------------------------------- lyubeznik

def lyubeznik_dropped(M, reverse=False):
    """label -> minimal witness i, per the subsequence-divisibility condition."""
    r = len(M)
    dropped = {}
    for q in range(r + 1):
        for k in subsets(r, q):
            for i in range(1, r):
                part = tuple(e for e in k if (e < i if reverse else e > i))
                if divides(M[i - 1], multidegree(part, M)):
                    dropped[k] = i
                    break
    return dropped


def chain_pairs(M):
    """Buchberger chain criterion on all index pairs, deterministic scan."""
    r = len(M)
    pairs = {(i, j) for i in range(1, r + 1) for j in range(i + 1, r + 1)}
    changed = True
    while changed:
        changed = False
        for i in range(1, r + 1):
            for (j, k) in sorted(pairs):
                if i in (j, k) or (j, k) not in pairs:
                    continue
                if (min(i, j), max(i, j)) in pairs and (min(i, k), max(i, k)) in pairs \
                        and divides(M[i - 1], lcm(M[j - 1], M[k - 1])):
                    pairs.discard((j, k))
                    changed = True
    return pairs


# ----------------------------------------------------------------- homotopy

def psi_term(coeff, mono, label, M, reverse=False):
    """Froeberg homotopy on a single term, by the bracket formula."""
    total = lcm(mono, multidegree(label, M)) if label else mono
    total = tuple(a + b for a, b in zip(mono, multidegree(label, M)))
    # total multidegree of the term is mono * m_label
    candidates = [i for i in range(1, len(M) + 1) if divides(M[i - 1], total)]
    if not candidates:
        return None
    iota = max(candidates) if reverse else min(candidates)
    if label:
        if not reverse and not iota < label[0]:
            return None
        if reverse and not iota > label[-1]:
            return None
    new_label = tuple(sorted(label + (iota,)))
    new_mono = quot(total, multidegree(new_label, M))
    return (coeff, new_mono, new_label)


def apply_linear(terms, fn):
    acc = {}
    for coeff, mono, label in terms:
        img = fn(coeff, mono, label)
        for c2, m2, l2 in img:
            key = (m2, l2)
            acc[key] = acc.get(key, 0) + c2
    return [(c, m, l) for (m, l), c in acc.items() if c != 0]


def f_map(M, reverse=False):
    """The projection f: f(v_empty)=v_empty, f(e)=psi(f(delta(e))), P-linear."""
    r = len(M)
    n = len(M[0])
    memo = {(): [(1, tuple(0 for _ in range(n)), ())]}

    def f_of_term(coeff, mono, label):
        base = memo[label] if label in memo else f_of_label(label)
        return [(coeff * c, tuple(a + b for a, b in zip(mono, m)), l)
                for c, m, l in base]

    def f_of_label(label):
        if label in memo:
            return memo[label]
        image = apply_linear(
            [(c, m, l) for c, m, l in delta_row(label, M)], f_of_term)
        psi_image = []
        acc = {}
        for coeff, mono, lab in image:
            t = psi_term(coeff, mono, lab, M, reverse)
            if t is not None:
                key = (t[1], t[2])
                acc[key] = acc.get(key, 0) + t[0]
        psi_image = [(c, m, l) for (m, l), c in acc.items() if c != 0]
        memo[label] = psi_image
        return psi_image

    for q in range(1, r + 1):
        for k in subsets(r, q):
            f_of_label(k)
    return memo


# ------------------------------------------------------------------- report

def report(names, M, tag):
    r = len(M)
    labels_by_q = taylor_labels(r)
    print(f"=== M = {{{', '.join(mono_str(m, names) for m in M)}}} over {names} ({tag})")
    print("lcm of all:", mono_str(multidegree(tuple(range(1, r + 1)), M), names))
    ranks = [len(labels_by_q[q]) for q in range(r + 1)]
    print("taylor ranks:", ranks)

    for direction in ("forward", "reverse"):
        dropped = lyubeznik_dropped(M, reverse=(direction == "reverse"))
        kept_ranks = [sum(1 for k in labels_by_q[q] if k not in dropped)
                      for q in range(r + 1)]
        while kept_ranks and kept_ranks[-1] == 0:
            kept_ranks.pop()
        print(f"lyubeznik[{direction}] dropped:",
              {k: w for k, w in sorted(dropped.items())})
        print(f"lyubeznik[{direction}] ranks:", kept_ranks)
        kept = {q: [k for k in labels_by_q[q] if k not in dropped]
                for q in range(r + 1)}
        kept = {q: v for q, v in kept.items() if v}
        mus, bad = exactness_report(M, kept, names)
        print(f"lyubeznik[{direction}] exact on {len(mus)} lattice strands:",
              "yes" if not bad else f"NO {bad}")

    mus, bad = exactness_report(M, labels_by_q, names)
    print(f"taylor exact on {len(mus)} lattice strands:",
          "yes" if not bad else f"NO {bad}")
    print("betti:", betti(M, labels_by_q))
    print("chain-criterion surviving pairs:", sorted(chain_pairs(M)))

    full = tuple(range(1, r + 1))
    mu_top = multidegree(full, M)
    dims, h = strand_homology(M, labels_by_q, mu_top, r)
    print(f"strand dims at {mono_str(mu_top, names)}:",
          [dims[q] for q in range(r + 1)])
    dims1, _ = strand_homology(M, labels_by_q, M[0], r)
    print(f"strand dims at m_1 = {mono_str(M[0], names)}:",
          [dims1[q] for q in range(r + 1)])

    print("delta rows:")
    for q in range(1, r + 1):
        for k in labels_by_q[q]:
            row = " + ".join(f"({c})*{mono_str(m, names)}*v{list(s)}"
                             for c, m, s in delta_row(k, M))
            print(f"  delta v{list(k)} = {row}")

    fwd = f_map(M)
    print("f images (forward psi):")
    for q in range(1, r + 1):
        for k in labels_by_q[q]:
            img = " + ".join(f"({c})*{mono_str(m, names)}*v{list(l)}"
                             for c, m, l in sorted(fwd[k], key=lambda t: t[2]))
            print(f"  f(v{list(k)}) = {img if img else 0}")
    image_labels = sorted({l for v in fwd.values() for _, _, l in v} | {()})
    print("f image labels:", image_labels)
    print()


def main():
    report(("x", "y", "z"), [(1, 1, 0), (1, 0, 1), (0, 1, 1)], "fixture 1")
    report(("x", "y"), [(2, 0), (1, 1), (0, 2)], "fixture 2")
    # the homotopy spot values from the operation examples
    M1 = [(1, 1, 0), (1, 0, 1), (0, 1, 1)]
    names = ("x", "y", "z")
    print("psi(y v2) for fixture 1:", psi_term(1, (0, 1, 0), (2,), M1))
    print("psi(z v1) for fixture 1:", psi_term(1, (0, 0, 1), (1,), M1))
    M2 = [(2, 0), (1, 1), (0, 2)]
    print("psi(x v0) for fixture 2:", psi_term(1, (1, 0), (), M2))


if __name__ == "__main__":
    main()
