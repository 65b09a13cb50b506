"""Partitions, symmetric-function bases and transition matrices.

Everything here lives on the lambda side: monomial sums m_h, monomials in
the elementary symmetric functions e_i, the transition matrices between
the two bases, reduction modulo L1 + ... + Ln, and the distinguished
symmetric functions p_h and q_n together with leading exponents.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, permutations

from . import linalg
from .polycore import ExponentVector, Poly


@dataclass(frozen=True)
class Partition:
    """Weakly decreasing tuple of positive integers."""

    parts: tuple

    def __post_init__(self):
        parts = tuple(self.parts)
        if any(p <= 0 for p in parts):
            raise ValueError("parts must be positive")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ValueError("parts must be weakly decreasing")
        object.__setattr__(self, "parts", parts)

    def weight(self):
        return sum(self.parts)

    def padded(self, length):
        if length < len(self.parts):
            raise ValueError("padding shorter than the partition")
        return self.parts + (0,) * (length - len(self.parts))

    def to_string(self, padded_length=None):
        parts = self.parts if padded_length is None else self.padded(padded_length)
        if not parts:
            return "0"
        return "+".join(str(p) for p in parts)

    def __str__(self):
        return self.to_string()

    def __len__(self):
        return len(self.parts)


def partitions(g, max_part, min_part=1):
    """Partitions of g with every part between min_part and max_part.

    Returned in reverse-lexicographic order (largest first); the empty
    partition for g = 0.
    """
    if g < 0:
        raise ValueError("negative weight")

    def rec(remaining, cap):
        if remaining == 0:
            yield ()
            return
        for first in range(min(cap, remaining), min_part - 1, -1):
            for rest in rec(remaining - first, first):
                yield (first,) + rest

    return [Partition(p) for p in rec(g, max_part)]


def partitions_at_most(g, max_parts):
    """Partitions of g with at most max_parts parts, reverse-lexicographic."""
    if g < 0:
        raise ValueError("negative weight")

    def rec(remaining, cap, slots):
        if remaining == 0:
            yield ()
            return
        if slots == 0:
            return
        for first in range(min(cap, remaining), 0, -1):
            for rest in rec(remaining - first, first, slots - 1):
                yield (first,) + rest

    return [Partition(p) for p in rec(g, g, max_parts)]


def e_indices(n, g):
    """All k = (k1,...,kn) with sum i*k_i = g, in the canonical order.

    The order is reverse-lexicographic on the induced leading partition
    h(k) with h_j = k_j + k_{j+1} + ... + k_n, which pairs column j with
    the j-th partition row of the transition matrices.
    """
    out = []

    def rec(i, remaining, acc):
        if i > n:
            if remaining == 0:
                out.append(tuple(acc))
            return
        if i == n:
            if remaining % n == 0:
                out.append(tuple(acc) + (remaining // n,))
            return
        for k in range(remaining // i, -1, -1):
            rec(i + 1, remaining - i * k, acc + [k])

    rec(1, g, [])
    out.sort(key=lambda k: tuple(sum(k[j:]) for j in range(n)), reverse=True)
    return out


def eindex_weight(k):
    return sum((i + 1) * ki for i, ki in enumerate(k))


def monomial_sum(h, n):
    """m_h(L1,...,Ln): the orbit sum of L1^h1 * ... * Ln^hn."""
    if isinstance(h, Partition):
        padded = h.padded(n)
    else:
        padded = tuple(h) + (0,) * (n - len(h))
        if len(padded) != n:
            raise ValueError("more parts than variables")
    terms = {}
    for perm in set(permutations(padded)):
        ev = ExponentVector({i + 1: e for i, e in enumerate(perm) if e})
        terms[ev] = Fraction(1)
    return Poly("L", terms)


@lru_cache(maxsize=None)
def elementary(i, n):
    """The elementary symmetric polynomial e_i(L1,...,Ln)."""
    if i == 0:
        return Poly.constant("L", 1)
    if i > n:
        return Poly.zero("L")
    terms = {}
    for combo in combinations(range(1, n + 1), i):
        terms[ExponentVector({j: 1 for j in combo})] = Fraction(1)
    return Poly("L", terms)


@lru_cache(maxsize=None)
def _e_monomial_cached(k, n):
    out = Poly.constant("L", 1)
    for i, ki in enumerate(k, start=1):
        if ki:
            out = out * elementary(i, n) ** ki
    return out


def e_monomial(k, n):
    """The product e_1^k1 * ... * e_n^kn, expanded in L1..Ln."""
    if len(k) > n:
        raise ValueError("index longer than the variable count")
    return _e_monomial_cached(tuple(k), n)


@dataclass
class TransitionMatrix:
    """Exact integer change of basis between m_h and e-monomials.

    direction "beta": column k holds the expansion of e^k in the m-basis.
    direction "alpha": the exact inverse of beta; its column h expands m_h
    in the e-monomials, and the row paired with column index k carries the
    m-coefficients of the invariant attached to k.
    """

    rows: list  # Partition
    cols: list  # EIndex tuples
    entries: list  # list of list of int
    direction: str

    def entry(self, i, j):
        return self.entries[i][j]

    def to_json_dict(self):
        return {
            "direction": self.direction,
            "rows": [list(p.parts) for p in self.rows],
            "cols": [list(k) for k in self.cols],
            "entries": [[str(x) for x in row] for row in self.entries],
        }

    def to_json(self):
        return json.dumps(self.to_json_dict())


@lru_cache(maxsize=None)
def transition_beta(n, g):
    """beta[h][k] = coefficient of the sorted monomial L^h in e^k."""
    rows = partitions_at_most(g, n)
    cols = e_indices(n, g)
    entries = []
    expansions = [e_monomial(k, n) for k in cols]
    for h in rows:
        ev = ExponentVector({i + 1: e for i, e in enumerate(h.padded(n)) if e})
        entries.append([int(p.coefficient(ev)) for p in expansions])
    return TransitionMatrix(rows, cols, entries, "beta")


@lru_cache(maxsize=None)
def transition_alpha(n, g):
    """Exact inverse of beta; all entries are integers (asserted)."""
    beta = transition_beta(n, g)
    inv = linalg.invert(beta.entries)
    entries = []
    for row in inv:
        ints = []
        for x in row:
            if x.denominator != 1:
                raise AssertionError(
                    f"non-integer entry {x} inverting the ({n},{g}) transition"
                )
            ints.append(int(x))
        entries.append(ints)
    return TransitionMatrix(beta.rows, beta.cols, entries, "alpha")


def bar_reduce(p, n):
    """Reduce modulo L1 + ... + Ln: substitute Ln := -(L1 + ... + L(n-1))."""
    repl = Poly.zero("L")
    for i in range(1, n):
        repl = repl - Poly.variable("L", i)
    return p.substitute(n, repl)


def p_h(n, h):
    """Product of the linear forms sum(L_i, i in T) over |T| = h, reduced.

    Degree binom(n, h) for 2h < n; for n = 2h only subsets containing 1
    are used, giving degree binom(2h, h)/2.  Factors are multiplied in
    increasing lexicographic order of T; no sign normalization.
    """
    if not 1 <= h <= n // 2:
        raise ValueError(f"h must satisfy 1 <= h <= {n // 2}")
    if 2 * h < n:
        subsets = combinations(range(1, n + 1), h)
    else:
        subsets = (
            (1,) + rest for rest in combinations(range(2, n + 1), h - 1)
        )
    out = Poly.constant("L", 1)
    for T in subsets:
        factor = Poly.zero("L")
        for i in T:
            if i < n:
                factor = factor + Poly.variable("L", i)
            else:
                for j in range(1, n):
                    factor = factor - Poly.variable("L", j)
        out = out * factor
    return out


@lru_cache(maxsize=None)
def q_n(n):
    """The product p_1 * p_2 * ... * p_floor(n/2), of degree 2^(n-1) - 1."""
    if n < 3:
        raise ValueError("q_n is defined for n >= 3")
    out = Poly.constant("L", 1)
    for h in range(1, n // 2 + 1):
        out = out * p_h(n, h)
    if out.total_degree() != 2 ** (n - 1) - 1:
        raise AssertionError("q_n degree mismatch")
    return out


def leading_exponent(p):
    """Lexicographically greatest exponent vector with nonzero coefficient."""
    if p.is_zero():
        raise ValueError("zero polynomial has no leading exponent")
    best = None
    for ev, _ in p.terms():
        if best is None or best.lex_less(ev):
            best = ev
    return best


def leading_monomial(p):
    """(coefficient, exponent vector) of the leading term."""
    ev = leading_exponent(p)
    return p.coefficient(ev), ev
