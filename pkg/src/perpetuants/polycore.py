"""Exact sparse multivariate polynomials with a degree/weight bigrading.

Two variable families are supported:

  * family "a": coefficient variables a0, a1, a2, ... (indexed from 0),
  * family "L": lambda variables L1, L2, ... (indexed from 1).

Coefficients are arbitrary-precision rationals (`fractions.Fraction`),
always stored in lowest terms, and zero coefficients are never stored.
All values are immutable; every operation returns a new object.
"""

from __future__ import annotations

import json
import re
from fractions import Fraction


class FamilyMismatchError(TypeError):
    """Raised when combining polynomials over different variable families."""


class BiDegreeError(ValueError):
    """Raised when a polynomial is not homogeneous-isobaric.

    Carries the two offending terms (as ExponentVector pairs) when the
    failure comes from mixed degree or mixed weight.
    """

    def __init__(self, message, first=None, second=None):
        super().__init__(message)
        self.first = first
        self.second = second


class ExponentVector:
    """Finite map from variable index to a positive exponent.

    Zero exponents are dropped on construction.  The ordering used by
    `lex_less` is plain lexicographic on the exponent sequence read in
    increasing variable index (missing indices count as exponent 0).
    """

    __slots__ = ("_entries",)

    def __init__(self, entries=()):
        items = []
        for i, e in sorted(dict(entries).items()):
            if e == 0:
                continue
            if i < 0 or e < 0 or int(i) != i or int(e) != e:
                raise ValueError(f"bad exponent entry {i}^{e}")
            items.append((int(i), int(e)))
        self._entries = tuple(items)

    @property
    def entries(self):
        return self._entries

    def degree(self):
        return sum(e for _, e in self._entries)

    def weight(self):
        """Sum of index*exponent; meaningful for a-variables."""
        return sum(i * e for i, e in self._entries)

    def get(self, index):
        for i, e in self._entries:
            if i == index:
                return e
        return 0

    def indices(self):
        return tuple(i for i, _ in self._entries)

    def __mul__(self, other):
        merged = dict(self._entries)
        for i, e in other._entries:
            merged[i] = merged.get(i, 0) + e
        return ExponentVector(merged)

    def lex_less(self, other):
        """r < s iff r_k < s_k at the first index where they differ."""
        keys = sorted(set(self.indices()) | set(other.indices()))
        for k in keys:
            a, b = self.get(k), other.get(k)
            if a != b:
                return a < b
        return False

    def dominated_by(self, other):
        """Componentwise r_i <= s_i."""
        return all(e <= other.get(i) for i, e in self._entries)

    def as_tuple(self, length, first_index=0):
        out = [0] * length
        for i, e in self._entries:
            pos = i - first_index
            if not 0 <= pos < length:
                raise ValueError(f"index {i} outside [{first_index}, {first_index + length})")
            out[pos] = e
        return tuple(out)

    def __eq__(self, other):
        return isinstance(other, ExponentVector) and self._entries == other._entries

    def __hash__(self):
        return hash(self._entries)

    def __repr__(self):
        return f"ExponentVector({dict(self._entries)!r})"


class BiDegree:
    """Degree n and weight g of a homogeneous-isobaric a-polynomial."""

    __slots__ = ("degree", "weight")

    def __init__(self, degree, weight):
        if degree < 0 or weight < 0:
            raise ValueError("degree and weight must be nonnegative")
        self.degree = degree
        self.weight = weight

    def __eq__(self, other):
        return (
            isinstance(other, BiDegree)
            and self.degree == other.degree
            and self.weight == other.weight
        )

    def __hash__(self):
        return hash((self.degree, self.weight))

    def __iter__(self):
        return iter((self.degree, self.weight))

    def __repr__(self):
        return f"BiDegree({self.degree}, {self.weight})"


def _canon_key(ev):
    # Graded order for printing/iteration: total degree first, then the
    # exponent of the lowest-indexed variable, descending.
    flat = []
    for i, e in ev.entries:
        flat.append(i)
        flat.append(-e)
    return (-ev.degree(), tuple(flat))


_FAMILIES = ("a", "L")


class Poly:
    """Sparse polynomial over one variable family with rational coefficients."""

    __slots__ = ("family", "_terms")

    def __init__(self, family, terms=()):
        if family not in _FAMILIES:
            raise ValueError(f"unknown family {family!r}")
        collected = {}
        for ev, c in (terms.items() if isinstance(terms, dict) else terms):
            if not isinstance(ev, ExponentVector):
                ev = ExponentVector(ev)
            if family == "L" and ev.entries and ev.entries[0][0] == 0:
                raise ValueError("L-variables are indexed from 1")
            c = Fraction(c) + collected.get(ev, 0)
            if c:
                collected[ev] = c
            elif ev in collected:
                del collected[ev]
        self.family = family
        self._terms = collected

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, family):
        return cls(family)

    @classmethod
    def constant(cls, family, c):
        return cls(family, [(ExponentVector(), Fraction(c))])

    @classmethod
    def variable(cls, family, index):
        return cls(family, [(ExponentVector({index: 1}), Fraction(1))])

    @classmethod
    def monomial(cls, family, ev, coeff=1):
        return cls(family, [(ev, Fraction(coeff))])

    # -- inspection --------------------------------------------------------

    def is_zero(self):
        return not self._terms

    def terms(self):
        """Terms in canonical (graded, then leading-variable) order."""
        return [(ev, self._terms[ev]) for ev in sorted(self._terms, key=_canon_key)]

    def coefficient(self, ev):
        return self._terms.get(ev, Fraction(0))

    def __len__(self):
        return len(self._terms)

    def total_degree(self):
        if not self._terms:
            raise ValueError("zero polynomial has no degree")
        return max(ev.degree() for ev in self._terms)

    def bidegree(self):
        """(degree, weight) of a homogeneous-isobaric a-polynomial."""
        if self.family != "a":
            raise FamilyMismatchError("bidegree is defined for a-polynomials")
        if not self._terms:
            raise BiDegreeError("zero polynomial has no bidegree")
        it = iter(self._terms)
        first = next(it)
        n, g = first.degree(), first.weight()
        for ev in it:
            if ev.degree() != n:
                raise BiDegreeError(
                    f"mixed degree {n} vs {ev.degree()}", first, ev
                )
            if ev.weight() != g:
                raise BiDegreeError(
                    f"mixed weight {g} vs {ev.weight()}", first, ev
                )
        return BiDegree(n, g)

    def is_integral(self):
        return all(c.denominator == 1 for c in self._terms.values())

    # -- arithmetic --------------------------------------------------------

    def _check(self, other):
        if self.family != other.family:
            raise FamilyMismatchError(
                f"family {self.family!r} vs {other.family!r}"
            )

    def __add__(self, other):
        if not isinstance(other, Poly):
            other = Poly.constant(self.family, other)
        self._check(other)
        merged = dict(self._terms)
        for ev, c in other._terms.items():
            s = merged.get(ev, 0) + c
            if s:
                merged[ev] = s
            elif ev in merged:
                del merged[ev]
        return Poly(self.family, merged)

    __radd__ = __add__

    def __neg__(self):
        return Poly(self.family, {ev: -c for ev, c in self._terms.items()})

    def __sub__(self, other):
        if not isinstance(other, Poly):
            other = Poly.constant(self.family, other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, Poly):
            return self.scale(other)
        self._check(other)
        out = {}
        for ev1, c1 in self._terms.items():
            for ev2, c2 in other._terms.items():
                ev = ev1 * ev2
                s = out.get(ev, 0) + c1 * c2
                if s:
                    out[ev] = s
                elif ev in out:
                    del out[ev]
        return Poly(self.family, out)

    def __rmul__(self, other):
        return self.scale(other)

    def scale(self, c):
        c = Fraction(c)
        if not c:
            return Poly.zero(self.family)
        return Poly(self.family, {ev: c * k for ev, k in self._terms.items()})

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative power")
        out = Poly.constant(self.family, 1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base if n > 1 else base
            n >>= 1
        return out

    def __eq__(self, other):
        return (
            isinstance(other, Poly)
            and self.family == other.family
            and self._terms == other._terms
        )

    def __hash__(self):
        return hash((self.family, frozenset(self._terms.items())))

    def substitute(self, index, replacement):
        """Exact substitution of one variable by a polynomial (or constant)."""
        if not isinstance(replacement, Poly):
            replacement = Poly.constant(self.family, replacement)
        self._check(replacement)
        out = Poly.zero(self.family)
        powers = {0: Poly.constant(self.family, 1)}
        for ev, c in self._terms.items():
            e = ev.get(index)
            rest = ExponentVector({i: x for i, x in ev.entries if i != index})
            if e not in powers:
                p = powers[max(powers)]
                for k in range(max(powers) + 1, e + 1):
                    p = p * replacement
                    powers[k] = p
            out = out + powers[e] * Poly.monomial(self.family, rest, c)
        return out

    # -- normalization -----------------------------------------------------

    def primitive_part(self):
        """Divide by the content (gcd of coefficients), leading sign positive."""
        if not self._terms:
            return self
        from math import gcd

        num = 0
        den = 1
        for c in self._terms.values():
            num = gcd(num, c.numerator)
            den = den * c.denominator // gcd(den, c.denominator)
        content = Fraction(num, den)
        lead = self._terms[sorted(self._terms, key=_canon_key)[0]]
        if lead < 0:
            content = -content
        return self.scale(1 / content)

    # -- serialization -----------------------------------------------------

    def _var_name(self, index):
        return f"{self.family}{index}"

    def __str__(self):
        if not self._terms:
            return "0"
        chunks = []
        for ev, c in self.terms():
            factors = []
            if abs(c) != 1 or not ev.entries:
                factors.append(str(abs(c)))
            for i, e in ev.entries:
                factors.append(
                    self._var_name(i) if e == 1 else f"{self._var_name(i)}^{e}"
                )
            term = "*".join(factors)
            if not chunks:
                chunks.append(term if c > 0 else f"-{term}")
            else:
                chunks.append(f"+ {term}" if c > 0 else f"- {term}")
        return " ".join(chunks)

    __repr__ = __str__

    def to_json_dict(self):
        terms = []
        for ev, c in self.terms():
            entry = {"c": str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"}
            entry["e"] = {str(i): e for i, e in ev.entries}
            terms.append(entry)
        return {"family": self.family, "terms": terms}

    def to_json(self):
        return json.dumps(self.to_json_dict())

    @classmethod
    def from_json_dict(cls, data):
        terms = []
        for t in data["terms"]:
            ev = ExponentVector({int(i): e for i, e in t["e"].items()})
            terms.append((ev, Fraction(t["c"])))
        return cls(data["family"], terms)

    @classmethod
    def from_json(cls, text):
        return cls.from_json_dict(json.loads(text))

    _TERM_RE = re.compile(r"([+-])")

    @classmethod
    def parse(cls, text, family=None):
        """Parse the text encoding, e.g. "3*a0^2*a3 - 3*a0*a1*a2 + a1^3"."""
        text = text.strip()
        if text == "0":
            return cls.zero(family or "a")
        pieces = []
        sign = 1
        buf = ""
        depth_guard = text.replace(" ", "")
        i = 0
        # split on top-level + and - (no parentheses in this encoding)
        for ch in depth_guard:
            if ch in "+-" and buf:
                pieces.append((sign, buf))
                sign = 1 if ch == "+" else -1
                buf = ""
            elif ch in "+-" and not buf:
                sign = sign if ch == "+" else -sign
            else:
                buf += ch
        pieces.append((sign, buf))
        terms = []
        fam = family
        for sign, chunk in pieces:
            coeff = Fraction(sign)
            exps = {}
            for factor in chunk.split("*"):
                m = re.fullmatch(r"([aL])(\d+)(?:\^(\d+))?", factor)
                if m:
                    f, idx, e = m.group(1), int(m.group(2)), int(m.group(3) or 1)
                    if fam is None:
                        fam = f
                    elif fam != f:
                        raise FamilyMismatchError(f"mixed families in {text!r}")
                    exps[idx] = exps.get(idx, 0) + e
                else:
                    coeff *= Fraction(factor)
            terms.append((ExponentVector(exps), coeff))
        if fam is None:
            fam = family or "a"
        return cls(fam, terms)
