"""Divided-power umbral monomials, the evaluation map into a-variables,
the lowering derivation on coefficients, the translation action and the
potenziante expansion.

Umbral exponents carry divided-power semantics: exponent r on the i-th
umbra stands for the divided power with all factorials absorbed, so the
evaluation map sends it to a plain a_r factor and the multinomial
expansion used by the potenziante has all coefficients equal to 1.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial

from .polycore import ExponentVector, Poly
from .symfunc import (
    Partition,
    e_indices,
    monomial_sum,
    partitions_at_most,
    transition_alpha,
)


@dataclass(frozen=True)
class UmbralMonomial:
    """Divided-power exponents (r1,...,rn) of the n umbrae."""

    r: tuple
    ambient: int

    def __post_init__(self):
        r = tuple(self.r)
        if len(r) != self.ambient:
            raise ValueError("exponent list must have length ambient")
        if any(x < 0 for x in r):
            raise ValueError("exponents must be nonnegative")
        object.__setattr__(self, "r", r)


class UmbralPoly:
    """Linear combination of umbral monomials over a fixed set of umbrae."""

    def __init__(self, n, terms=()):
        self.n = n
        collected = {}
        for r, c in (terms.items() if isinstance(terms, dict) else terms):
            r = tuple(r)
            if len(r) != n:
                raise ValueError("wrong number of umbrae")
            c = Fraction(c) + collected.get(r, 0)
            if c:
                collected[r] = c
            elif r in collected:
                del collected[r]
        self.terms = collected

    @classmethod
    def monomial(cls, r, n, coeff=1):
        return cls(n, [(tuple(r), coeff)])

    def __add__(self, other):
        if self.n != other.n:
            raise ValueError("ambient mismatch")
        merged = dict(self.terms)
        for r, c in other.terms.items():
            s = merged.get(r, 0) + c
            if s:
                merged[r] = s
            elif r in merged:
                del merged[r]
        return UmbralPoly(self.n, merged)

    def __mul__(self, other):
        """Product with divided-power semantics.

        x^[r] * x^[s] = binom(r+s, r) x^[r+s] on each umbra separately.
        """
        if self.n != other.n:
            raise ValueError("ambient mismatch")
        out = {}
        for r, cr in self.terms.items():
            for s, cs in other.terms.items():
                coeff = cr * cs
                for a, b in zip(r, s):
                    if a and b:
                        coeff *= comb(a + b, a)
                key = tuple(a + b for a, b in zip(r, s))
                v = out.get(key, 0) + coeff
                if v:
                    out[key] = v
                elif key in out:
                    del out[key]
        return UmbralPoly(self.n, out)

    def scale(self, c):
        return UmbralPoly(self.n, {r: Fraction(c) * v for r, v in self.terms.items()})

    def partial(self, i):
        """Divided-power partial derivative in the i-th umbra (1-based)."""
        out = {}
        for r, c in self.terms.items():
            if r[i - 1] == 0:
                continue
            key = r[: i - 1] + (r[i - 1] - 1,) + r[i:]
            out[key] = out.get(key, 0) + c
        return UmbralPoly(self.n, out)

    def __eq__(self, other):
        return isinstance(other, UmbralPoly) and self.n == other.n and self.terms == other.terms


def umbral_E(m):
    """Evaluation of an umbral monomial or polynomial into a-variables.

    A monomial with exponents (r1,...,rn) goes to a_r1 * ... * a_rn; the
    umbrae with exponent 0 each contribute an a_0 factor.  Extends
    linearly to UmbralPoly.
    """
    if isinstance(m, UmbralMonomial):
        return _eval_monomial(m.r)
    out = Poly.zero("a")
    for r, c in m.terms.items():
        out = out + _eval_monomial(r).scale(c)
    return out


def _eval_monomial(r):
    exps = {}
    for x in r:
        exps[x] = exps.get(x, 0) + 1
    return Poly.monomial("a", ExponentVector(exps))


def derivation_D(p):
    """The lowering derivation sum_i a_(i-1) d/d a_i, applied exactly."""
    out = Poly.zero("a")
    for ev, c in p.terms():
        for i, e in ev.entries:
            if i == 0:
                continue
            exps = dict(ev.entries)
            exps[i] -= 1
            exps[i - 1] = exps.get(i - 1, 0) + 1
            out = out + Poly.monomial("a", ExponentVector(exps), c * e)
    return out


def translate(p):
    """Translation action with an exact formal parameter t.

    Substitutes every a_k by sum_j a_j t^(k-j)/(k-j)! and expands.
    Returns a dict mapping the power of t to its a-polynomial coefficient;
    a translation-invariant polynomial comes back as {0: p}.  The
    coefficient of t^1 is always derivation_D(p).
    """
    images = {}

    def var_image(k):
        if k not in images:
            images[k] = {
                k - j: Poly.monomial("a", ExponentVector({j: 1}), Fraction(1, factorial(k - j)))
                for j in range(k + 1)
            }
        return images[k]

    total = {0: Poly.zero("a")}
    for ev, c in p.terms():
        term = {0: Poly.constant("a", c)}
        for i, e in ev.entries:
            img = var_image(i)
            for _ in range(e):
                nxt = {}
                for d1, p1 in term.items():
                    for d2, p2 in img.items():
                        prod = p1 * p2
                        if d1 + d2 in nxt:
                            nxt[d1 + d2] = nxt[d1 + d2] + prod
                        else:
                            nxt[d1 + d2] = prod
                term = nxt
        for d, poly in term.items():
            total[d] = total.get(d, Poly.zero("a")) + poly
    return {d: poly for d, poly in total.items() if not poly.is_zero() or d == 0}


def is_translation_invariant(p):
    t = translate(p)
    return set(t) <= {0} and t.get(0, Poly.zero("a")) == p


def a_monomial_for(partition, n):
    """The product a_h1 * ... * a_hn with zero parts contributing a_0."""
    if isinstance(partition, Partition):
        padded = partition.padded(n)
    else:
        padded = tuple(partition) + (0,) * (n - len(partition))
    exps = {}
    for h in padded:
        exps[h] = exps.get(h, 0) + 1
    return Poly.monomial("a", ExponentVector(exps))


@dataclass
class PotenziantExpansion:
    """The pairing of symmetric functions with degree-n weight-g a-polynomials.

    rows: one (partition h, m_h as an L-polynomial, a-monomial) triple per
    partition of g with at most n parts.  e_rows: the same tensor written
    in the e-monomial basis, pairing each exponent k with the a-polynomial
    U~_k obtained through the alpha transition matrix.
    """

    n: int
    g: int
    rows: list
    e_rows: list

    def __str__(self):
        chunks = []
        for h, _, amon in self.rows:
            label = "m_{" + ",".join(str(x) for x in h.padded(self.n)) + "}"
            chunks.append(f"{label}*{amon}")
        return " + ".join(chunks)

    def to_json_dict(self):
        return {
            "n": self.n,
            "g": self.g,
            "rows": [
                {"h": list(h.padded(self.n)), "a": str(amon)}
                for h, _, amon in self.rows
            ],
            "e_rows": [{"k": list(k), "U": str(u)} for k, u in self.e_rows],
        }

    def to_json(self):
        return json.dumps(self.to_json_dict())


def potenziante(n, g):
    """Expansion of E((L1 a1 + ... + Ln an)^[g]) in both bases."""
    if n < 1 or g < 0:
        raise ValueError("need n >= 1 and g >= 0")
    parts = partitions_at_most(g, n)
    rows = [(h, monomial_sum(h, n), a_monomial_for(h, n)) for h in parts]
    alpha = transition_alpha(n, g)
    e_rows = []
    for j, k in enumerate(alpha.cols):
        # the row of alpha paired with column index k carries the
        # m-coefficients of U~_k: U~_k = sum_h alpha[j][h] a_h
        u = Poly.zero("a")
        for i, h in enumerate(alpha.rows):
            c = alpha.entries[j][i]
            if c:
                u = u + a_monomial_for(h, n).scale(c)
        e_rows.append((k, u))
    return PotenziantExpansion(n, g, rows, e_rows)


def _compositions(g, n):
    if n == 1:
        yield (g,)
        return
    for first in range(g + 1):
        for rest in _compositions(g - first, n - 1):
            yield (first,) + rest


def potenziante_tensor(n, g, lambda_indices=None):
    """The same tensor as a map from a-exponent vectors to L-polynomials.

    Useful for identities mixing the two variable families; the optional
    lambda_indices picks which L-variables carry the n slots.
    """
    if lambda_indices is None:
        lambda_indices = list(range(1, n + 1))
    if len(lambda_indices) != n:
        raise ValueError("need one lambda index per umbra")
    out = {}
    for r in _compositions(g, n):
        amon_exps = {}
        for x in r:
            amon_exps[x] = amon_exps.get(x, 0) + 1
        aev = ExponentVector(amon_exps)
        lev = {}
        for idx, e in zip(lambda_indices, r):
            if e:
                lev[idx] = lev.get(idx, 0) + e
        mono = Poly.monomial("L", ExponentVector(lev))
        out[aev] = out.get(aev, Poly.zero("L")) + mono
    return out


def tensor_mul(t1, t2):
    """Product of two a-exponent -> L-polynomial tensors."""
    out = {}
    for a1, l1 in t1.items():
        for a2, l2 in t2.items():
            key = a1 * a2
            prod = l1 * l2
            out[key] = out.get(key, prod * 0) + prod
    return {k: v for k, v in out.items() if not v.is_zero()}


def tensor_scale_L(t, lpoly):
    return {k: v * lpoly for k, v in t.items()}


def tensor_apply_D(t):
    """Apply the lowering derivation to every a-side coefficient, recollect."""
    out = {}
    for aev, lpoly in t.items():
        d = derivation_D(Poly.monomial("a", aev))
        for ev, c in d.terms():
            out[ev] = out.get(ev, Poly.zero("L")) + lpoly.scale(c)
    return {k: v for k, v in out.items() if not v.is_zero()}


def tensor_equal(t1, t2):
    t1 = {k: v for k, v in t1.items() if not v.is_zero()}
    t2 = {k: v for k, v in t2.items() if not v.is_zero()}
    return t1 == t2
