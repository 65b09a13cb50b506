"""Perpetuants: dimension series, the threshold filter selecting a basis,
decomposable spans and the direct-sum certificate.

The certificate is the falsifiable output of the whole construction: it
records exact ranks and a boolean, never raises on a failed check.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction

from .basis import (
    DimensionSeries,
    dim_series,
    in_span,
    kernel_oracle,
    span_rank,
    u_basis,
)
from .polycore import ExponentVector, Poly
from .symfunc import eindex_weight


def stroh_series(n, g_max):
    """Perpetuant dimensions by weight.

    x^(2^(n-1)-1)/((1-x^2)...(1-x^n)) for n > 2; x^2/(1-x^2) for n = 2
    (one perpetuant in every positive even weight); a single weight-0
    perpetuant for n = 1.
    """
    if n < 1:
        raise ValueError("need n >= 1")
    coeffs = [0] * (g_max + 1)
    if n == 1:
        coeffs[0] = 1
    elif n == 2:
        for g in range(2, g_max + 1, 2):
            coeffs[g] = 1
    else:
        shift = 2 ** (n - 1) - 1
        base = dim_series(n, max(g_max - shift, 0)).coefficients
        for g in range(shift, g_max + 1):
            coeffs[g] = base[g - shift]
    return DimensionSeries(n, coeffs)


@dataclass(frozen=True)
class ThresholdVector:
    """The componentwise threshold on (k2,...,kn) selecting perpetuants."""

    n: int
    k: tuple

    def weight(self):
        return sum((i + 2) * ki for i, ki in enumerate(self.k))

    def dominates(self, other_k):
        """other_k >= self.k componentwise."""
        return all(o >= s for o, s in zip(other_k, self.k))


def threshold(n):
    """(0, 2^(n-4), ..., 2, 1, 1) for n > 3; (0, 1) for n = 3."""
    if n < 3:
        raise ValueError("threshold is defined for n >= 3")
    if n == 3:
        vec = (0, 1)
    else:
        vec = (0,) + tuple(2 ** (n - 1 - i) for i in range(3, n)) + (1,)
    tv = ThresholdVector(n, vec)
    if tv.weight() != 2 ** (n - 1) - 1:
        raise AssertionError("threshold weight mismatch")
    return tv


def perpetuant_basis(n, g):
    """The u_basis elements whose index dominates the threshold vector.

    Empty whenever g < 2^(n-1) - 1; the count always equals the Stroh
    coefficient at weight g (checked by the certificate, not here).
    """
    if n < 3:
        raise ValueError(
            "n <= 2 is special: use degree2_perpetuant, or a_0 for n = 1"
        )
    t = threshold(n)
    return [u for u in u_basis(n, g) if t.dominates(u.k)]


def degree2_perpetuant(g):
    """The unique degree-2 U-invariant of even weight g, up to scale.

    2*a0*a_g - 2*a1*a_(g-1) + ... with the middle square carrying the
    alternating sign; zero spaces (odd g) are an error here.
    """
    if g <= 0 or g % 2:
        raise ValueError("degree-2 perpetuants exist only in even weight >= 2")
    h = g // 2
    terms = []
    for j in range(h):
        sign = 1 if j % 2 == 0 else -1
        terms.append((ExponentVector({j: 1, g - j: 1}), Fraction(2 * sign)))
    terms.append((ExponentVector({h: 2}), Fraction((-1) ** h)))
    return Poly("a", terms)


def decomposable_span(n, g):
    """Products of two positive-degree U-invariants with degrees summing
    to n and weights summing to g; their span is the decomposable part of
    S_{n,g}."""
    if n < 2:
        raise ValueError("need n >= 2")
    out = []
    for h in range(1, n // 2 + 1):
        for j in range(g + 1):
            left = u_basis(h, j)
            if not left:
                continue
            right = u_basis(n - h, g - j)
            for u in left:
                for v in right:
                    out.append(u.poly * v.poly)
    return out


@dataclass
class ComplementCertificate:
    n: int
    g: int
    dim_total: int
    dim_decomposable: int
    dim_perpetuant: int
    direct_sum_ok: bool
    stroh_coefficient: int

    def to_json_dict(self):
        return {
            "n": self.n,
            "g": self.g,
            "dim_total": self.dim_total,
            "dim_dec": self.dim_decomposable,
            "dim_perp": self.dim_perpetuant,
            "stroh": self.stroh_coefficient,
            "ok": self.direct_sum_ok,
        }

    def to_json(self):
        return json.dumps(self.to_json_dict())

    def __str__(self):
        status = "ok" if self.direct_sum_ok else "FAILED"
        return (
            f"(n={self.n}, g={self.g}) total={self.dim_total} "
            f"dec={self.dim_decomposable} perp={self.dim_perpetuant} "
            f"stroh={self.stroh_coefficient} {status}"
        )


def verify_complement(n, g):
    """Certify that decomposables plus the threshold-selected basis give a
    direct-sum decomposition of S_{n,g} with the predicted perpetuant
    count.  All ranks are exact; a failed check is reported as data."""
    if n < 3:
        raise ValueError("certificates are defined for n >= 3")
    total = len(kernel_oracle(n, g))
    dec = decomposable_span(n, g)
    perp = perpetuant_basis(n, g)
    dim_dec = span_rank(dec)
    dim_perp = len(perp)
    stroh = stroh_series(n, g)[g]
    combined = dec + [u.poly for u in perp]
    union_rank = span_rank(combined)
    ok = (
        union_rank == dim_dec + dim_perp == total
        and dim_perp == stroh
    )
    return ComplementCertificate(n, g, total, dim_dec, dim_perp, ok, stroh)


def selected_count(n, g, threshold_vec):
    """Number of indices (k2,...,kn) of weight g dominating a threshold."""
    count = 0
    for u in u_basis(n, g):
        if all(a >= b for a, b in zip(u.k, threshold_vec)):
            count += 1
    return count


def index_count(n, g, threshold_vec):
    """Same count but purely combinatorial (no polynomials built)."""

    def rec(i, remaining, acc):
        if i > n:
            return 1 if remaining == 0 else 0
        total = 0
        lo = threshold_vec[i - 2]
        k = lo
        while i * k <= remaining:
            total += rec(i + 1, remaining - i * k, acc)
            k += 1
        return total

    return rec(2, g, None)


def basis_subset_spans_decomposable(n, g):
    """Whether the u_basis elements lying inside the decomposable span are
    enough to span it.  Recorded as data; no claim either way."""
    dec = decomposable_span(n, g)
    dim_dec = span_rank(dec)
    if dim_dec == 0:
        return True
    inside = [u.poly for u in u_basis(n, g) if in_span(u.poly, dec)]
    return span_rank(inside) == dim_dec
