"""L-polynomials: reconstruction from counts, prediction, base change, division.

An L-polynomial of a genus-g curve over GF(q) has integer coefficients
a_0..a_2g with a_0 = 1 and the functional-equation symmetry
a_(2g-i) = q^(g-i) a_i.  Writing N_m = q^m + 1 - s_m, the s_m are the power
sums of the reciprocal roots, and Newton's identities convert between them
and the coefficients:

    m a_m = -(s_1 a_(m-1) + ... + s_m a_0)          for m <= 2g
    s_m   = -(a_1 s_(m-1) + ... + a_2g s_(m-2g))    for m > 2g

Every division performed here must be exact; a remainder signals a wrong
genus, a wrong infinity count, or corrupted input, and raises.  All
arithmetic is arbitrary-precision integer (or exact rational), never float.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple, Sequence

from .curves import PointCounts


class LSeriesError(ValueError):
    """Inconsistent counts, non-exact Newton division, or a bad polynomial."""


@dataclass(frozen=True)
class LPolynomial:
    """Degree-2g integer polynomial over ground size q, coefficients ascending."""

    q: int
    g: int
    coeffs: tuple[int, ...]

    def __post_init__(self):
        if self.g < 0 or self.q < 2:
            raise LSeriesError(f"bad parameters q={self.q}, g={self.g}")
        if len(self.coeffs) != 2 * self.g + 1:
            raise LSeriesError(
                f"genus {self.g} needs {2 * self.g + 1} coefficients, got {len(self.coeffs)}"
            )
        if self.coeffs[0] != 1:
            raise LSeriesError(f"constant term must be 1, got {self.coeffs[0]}")
        for i in range(self.g + 1):
            if self.coeffs[2 * self.g - i] != self.q ** (self.g - i) * self.coeffs[i]:
                raise LSeriesError(f"functional equation fails at index {i}")

    def __str__(self) -> str:
        return format_int_poly(self.coeffs)


def _as_counts(counts) -> tuple[Sequence[int], int | None, int | None]:
    if isinstance(counts, PointCounts):
        return counts.counts, counts.spec.genus, counts.base_q
    return tuple(counts), None, None


def lpoly_from_counts(counts, g: int | None = None, q: int | None = None) -> LPolynomial:
    """Reconstruct the L-polynomial from N_1..N_M, M >= g.

    Only the first g counts determine the coefficients (the functional
    equation supplies the upper half); surplus counts are replayed through
    the finished polynomial as a consistency check.
    """
    seq, auto_g, auto_q = _as_counts(counts)
    g = auto_g if g is None else g
    q = auto_q if q is None else q
    if g is None or q is None:
        raise LSeriesError("genus and ground size are required with a bare count sequence")
    if len(seq) < g:
        raise LSeriesError(f"need at least g={g} counts, got {len(seq)}")
    for m, n in enumerate(seq, start=1):
        if (n - q**m - 1) ** 2 > 4 * g * g * q**m:
            raise LSeriesError(f"count N_{m} = {n} violates the Hasse-Weil bound")
    s = [0] * (g + 1)
    for m in range(1, g + 1):
        s[m] = q**m + 1 - seq[m - 1]
    a = [0] * (2 * g + 1)
    a[0] = 1
    for m in range(1, g + 1):
        acc = sum(s[i] * a[m - i] for i in range(1, m + 1))
        quot, rem = divmod(-acc, m)
        if rem:
            raise LSeriesError(
                f"Newton division not exact at m={m}: wrong genus, wrong point "
                "at infinity, or corrupted counts"
            )
        a[m] = quot
    for i in range(g + 1, 2 * g + 1):
        a[i] = q ** (i - g) * a[2 * g - i]
    lpoly = LPolynomial(q, g, tuple(a))
    for m in range(g + 1, len(seq) + 1):
        if predicted_count(lpoly, m) != seq[m - 1]:
            raise LSeriesError(
                f"count N_{m} = {seq[m - 1]} is inconsistent with the polynomial "
                f"built from N_1..N_{g} (expected {predicted_count(lpoly, m)})"
            )
    return lpoly


def power_sums(lpoly: LPolynomial, upto: int) -> list[int]:
    """s_1..s_upto of the reciprocal roots, via Newton and the tail recurrence."""
    a = lpoly.coeffs
    deg = 2 * lpoly.g
    s = [0] * (upto + 1)
    for m in range(1, upto + 1):
        if m <= deg:
            s[m] = -(m * a[m] + sum(s[i] * a[m - i] for i in range(1, m)))
        else:
            s[m] = -sum(a[i] * s[m - i] for i in range(1, deg + 1))
    return s[1:]


def predicted_count(lpoly: LPolynomial, m: int) -> int:
    """N_m implied by the polynomial: q^m + 1 - s_m."""
    if m < 1:
        raise ValueError(f"extension degree must be >= 1, got {m}")
    if lpoly.g == 0:
        return lpoly.q**m + 1
    return lpoly.q**m + 1 - power_sums(lpoly, m)[m - 1]


def base_change(lpoly: LPolynomial, s: int) -> LPolynomial:
    """L-polynomial over GF(q^s): reciprocal roots raised to the s-th power."""
    if s < 1:
        raise ValueError(f"extension degree must be >= 1, got {s}")
    if s == 1:
        return lpoly
    deg = 2 * lpoly.g
    long_sums = power_sums(lpoly, deg * s) if deg else []
    sp = [0] + [long_sums[i * s - 1] for i in range(1, deg + 1)]
    a = [0] * (deg + 1)
    a[0] = 1
    for m in range(1, deg + 1):
        acc = sum(sp[i] * a[m - i] for i in range(1, m + 1))
        quot, rem = divmod(-acc, m)
        if rem:
            raise LSeriesError(f"base change produced a non-exact division at m={m}")
        a[m] = quot
    return LPolynomial(lpoly.q**s, lpoly.g, tuple(a))


class DivisionResult(NamedTuple):
    divides: bool
    quotient: tuple[int, ...] | None
    fail_index: int | None


def _as_coeffs(poly) -> tuple[int, ...]:
    if isinstance(poly, LPolynomial):
        return poly.coeffs
    c = tuple(int(v) for v in poly)
    while len(c) > 1 and c[-1] == 0:
        c = c[:-1]
    return c


def divides(denom, numer) -> DivisionResult:
    """Exact integer polynomial division, ascending from the constant term.

    On failure the result carries the first coefficient index where the
    quotient left the integers or the remainder refused to vanish.
    """
    d = _as_coeffs(denom)
    n = _as_coeffs(numer)
    if not any(d):
        raise ZeroDivisionError("zero divisor polynomial")
    if d[0] == 0:
        raise ValueError("divisor needs a nonzero constant term for ascending division")
    qlen = len(n) - len(d) + 1
    if qlen <= 0:
        return DivisionResult(False, None, 0)
    quo: list[Fraction] = []
    for i in range(len(n)):
        acc = Fraction(n[i])
        for j in range(1, min(i, len(d) - 1) + 1):
            if i - j < qlen and i - j < len(quo):
                acc -= d[j] * quo[i - j]
        if i < qlen:
            c = acc / d[0]
            if c.denominator != 1:
                return DivisionResult(False, None, i)
            quo.append(c)
        elif acc != 0:
            return DivisionResult(False, None, i)
    result = tuple(int(c) for c in quo)
    # belt and braces: the product must reproduce the numerator exactly
    check = [0] * len(n)
    for i, dc in enumerate(d):
        for j, qc in enumerate(result):
            check[i + j] += dc * qc
    if tuple(check) != n:
        raise AssertionError("ascending division produced an inconsistent quotient")
    return DivisionResult(True, result, None)


def _frac_gcd(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    def trim(c):
        while c and c[-1] == 0:
            c.pop()
        return c

    a, b = trim(a[:]), trim(b[:])
    while b:
        inv = 1 / b[-1]
        b = [c * inv for c in b]
        while len(a) >= len(b):
            lead = a[-1]
            off = len(a) - len(b)
            for i in range(len(b)):
                a[off + i] -= lead * b[i]
            trim(a)
            if not a:
                break
        a, b = b, a
    return a


def squarefree(poly) -> bool:
    """True iff gcd(f, f') is constant, over the rationals with exact arithmetic."""
    c = _as_coeffs(poly)
    if len(c) <= 1:
        return True
    f = [Fraction(v) for v in c]
    fprime = [Fraction(i * c[i]) for i in range(1, len(c))]
    return len(_frac_gcd(f, fprime)) == 1


class HasseWeilResult(NamedTuple):
    ok: bool
    bad_index: int | None


def hasse_weil_check(counts: PointCounts) -> HasseWeilResult:
    """Verify |N_m - q^m - 1| <= 2 g q^(m/2) for every entry; exact arithmetic."""
    q = counts.base_q
    g = counts.spec.genus
    for i, n in enumerate(counts.counts):
        m = i + 1
        if (n - q**m - 1) ** 2 > 4 * g * g * q**m:
            return HasseWeilResult(False, i)
    return HasseWeilResult(True, None)


# -- serialization ----------------------------------------------------------


def lpoly_to_record(lpoly: LPolynomial) -> dict:
    return {"q": lpoly.q, "g": lpoly.g, "coeffs": [str(c) for c in lpoly.coeffs]}


def lpoly_from_record(record: dict) -> LPolynomial:
    return LPolynomial(int(record["q"]), int(record["g"]), tuple(int(c) for c in record["coeffs"]))


def lpoly_to_line(lpoly: LPolynomial) -> str:
    return json.dumps(lpoly_to_record(lpoly), separators=(",", ":"))


def lpoly_from_line(line: str) -> LPolynomial:
    return lpoly_from_record(json.loads(line))


def format_int_poly(coeffs: Sequence[int], var: str = "t") -> str:
    """Human form, descending powers: (1, 2, 2) -> '2t^2+2t+1'."""
    parts = []
    for e in range(len(coeffs) - 1, -1, -1):
        c = coeffs[e]
        if c == 0:
            continue
        sign = "-" if c < 0 else ("+" if parts else "")
        mag = abs(c)
        if e == 0:
            body = str(mag)
        else:
            head = "" if mag == 1 else str(mag)
            body = f"{head}{var}" if e == 1 else f"{head}{var}^{e}"
        parts.append(f"{sign}{body}")
    return "".join(parts) if parts else "0"
