"""Exact arithmetic in small finite fields GF(p^m).

A field element is a plain Python int in [0, p**m): its base-p digits are the
coefficients of the residue polynomial, least significant digit first.  For
p = 2 this is the usual packed-bit representation and addition is XOR.  All
operations hang off an immutable :class:`FieldContext`, so elements are freely
copyable plain data and every operation is pure.

The reduction modulus is the lexicographically smallest monic irreducible of
its degree, comparing coefficients from degree m-1 down to the constant term.
That ordering coincides with the numeric order of the packed-int encoding, so
the modulus (and therefore every computation) is reproducible across runs and
machines.

Supported sizes: p = 2 with 1 <= m <= 32; odd p with p**m <= 2**22.
Element enumeration order is the packed-int encoding, ascending.
"""

from __future__ import annotations

import functools
import threading
from typing import Iterable

import numpy as np

MAX_BINARY_DEGREE = 32
MAX_ODD_ORDER = 1 << 22

# Discrete-log tables above this size would dominate memory and build time.
MAX_TABLE_ORDER = 1 << 22


class FieldLimitError(ValueError):
    """Field parameters outside the supported size limits."""


def is_prime(n: int) -> bool:
    """Deterministic trial-division primality check, meant for small n."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def jacobi_symbol(a: int, n: int) -> int:
    """Jacobi symbol (a/n) for odd positive n."""
    if n <= 0 or n % 2 == 0:
        raise ValueError(f"Jacobi symbol needs odd positive n, got {n}")
    a %= n
    result = 1
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0


def _prime_factors(n: int) -> list[int]:
    out = []
    f = 2
    while f * f <= n:
        if n % f == 0:
            out.append(f)
            while n % f == 0:
                n //= f
        f += 1 if f == 2 else 2
    if n > 1:
        out.append(n)
    return out


# ---------------------------------------------------------------------------
# Dense polynomial arithmetic over F_p, used only for modulus construction.
# Polynomials are lists of ints in [0, p), ascending degree, no trailing zeros.


def _ptrim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _pmul(a: list[int], b: list[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca:
            for j, cb in enumerate(b):
                out[i + j] = (out[i + j] + ca * cb) % p
    return _ptrim(out)


def _pmod(a: list[int], f: list[int], p: int) -> list[int]:
    # f must be monic
    a = a[:]
    df = len(f) - 1
    while len(a) - 1 >= df and a:
        c = a[-1]
        if c:
            off = len(a) - 1 - df
            for j in range(df + 1):
                a[off + j] = (a[off + j] - c * f[j]) % p
        a.pop()
    return _ptrim(a)


def _ppowmod(a: list[int], e: int, f: list[int], p: int) -> list[int]:
    result = [1]
    base = _pmod(a, f, p)
    while e:
        if e & 1:
            result = _pmod(_pmul(result, base, p), f, p)
        base = _pmod(_pmul(base, base, p), f, p)
        e >>= 1
    return result


def _pgcd(a: list[int], b: list[int], p: int) -> list[int]:
    a, b = a[:], b[:]
    while b:
        inv = pow(b[-1], p - 2, p)
        b = [(c * inv) % p for c in b]
        a, b = b, _pmod(a, b, p)
    return a


def _is_irreducible(f: list[int], p: int) -> bool:
    """Degree-m monic f is irreducible iff gcd(x^(p^i) - x, f) = 1 for i <= m/2."""
    m = len(f) - 1
    if m == 1:
        return True
    r = [0, 1]
    for _ in range(m // 2):
        r = _ppowmod(r, p, f, p)
        diff = r[:]
        while len(diff) < 2:
            diff.append(0)
        diff[1] = (diff[1] - 1) % p
        g = _pgcd(f, _ptrim(diff), p)
        if len(g) != 1:
            return False
    return True


def _lex_smallest_irreducible(p: int, m: int) -> tuple[int, ...]:
    # Scanning the packed encoding in ascending numeric order compares the
    # coefficient tuple (a_{m-1}, ..., a_0) lexicographically.
    for v in range(p**m):
        coeffs = []
        w = v
        for _ in range(m):
            w, d = divmod(w, p)
            coeffs.append(d)
        coeffs.append(1)
        if _is_irreducible(coeffs, p):
            return tuple(coeffs)
    raise AssertionError(f"no irreducible of degree {m} over GF({p})")


# ---------------------------------------------------------------------------


class _Tables:
    """Discrete-log tables for one field: exp, log, and trace-of-exp arrays."""

    __slots__ = ("exp", "log", "tr_exp")

    def __init__(self, exp: np.ndarray, log: np.ndarray, tr_exp: np.ndarray):
        self.exp = exp
        self.log = log
        self.tr_exp = tr_exp


class FieldContext:
    """Immutable arithmetic context for GF(p^m).

    Not meant to be constructed directly; use :func:`make_field`, which also
    caches contexts so repeated lookups share their tables.
    """

    def __init__(self, p: int, m: int, modulus: tuple[int, ...]):
        self.p = p
        self.m = m
        self.order = p**m
        self.modulus = modulus
        if p == 2:
            bits = 0
            for i, c in enumerate(modulus):
                bits |= c << i
            self._mod_bits = bits
            self._trace_mask = self._build_trace_mask()
        else:
            self._mod_digits = list(modulus)
        self._tables: _Tables | None = None
        self._lock = threading.Lock()

    def __repr__(self) -> str:
        if self.m == 1:
            return f"GF({self.p})"
        return f"GF({self.p}^{self.m})"

    # -- element arithmetic ------------------------------------------------

    def add(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        p = self.p
        out = 0
        mult = 1
        for _ in range(self.m):
            out += ((a + b) % p) * mult
            a //= p
            b //= p
            mult *= p
        return out

    def neg(self, a: int) -> int:
        if self.p == 2:
            return a
        p = self.p
        out = 0
        mult = 1
        for _ in range(self.m):
            out += (-a % p) * mult
            a //= p
            mult *= p
        return out

    def sub(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if self.p == 2:
            r = 0
            while b:
                r ^= a * (b & -b)
                b &= b - 1
            m, bits = self.m, self._mod_bits
            while r.bit_length() > m:
                r ^= bits << (r.bit_length() - 1 - m)
            return r
        return self._mul_odd(a, b)

    def sqr(self, a: int) -> int:
        return self.mul(a, a)

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            raise ValueError("negative exponent; use inv() for inverses")
        result = 1
        base = a
        while e:
            if e & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            e >>= 1
        return result

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inversion of zero field element")
        return self.pow(a, self.order - 2)

    def trace(self, a: int) -> int:
        """Absolute trace into the prime subfield, as an int in [0, p)."""
        if self.p == 2:
            return (a & self._trace_mask).bit_count() & 1
        t = a
        s = a
        for _ in range(self.m - 1):
            t = self.pow(t, self.p)
            s = self.add(s, t)
        if s >= self.p:
            raise AssertionError("trace left the prime subfield")
        return s

    def elements(self, start: int = 0, stop: int | None = None) -> range:
        """All elements in packed-int order; slice with start/stop to partition."""
        return range(start, self.order if stop is None else stop)

    # -- internals ----------------------------------------------------------

    def _mul_odd(self, a: int, b: int) -> int:
        p, m = self.p, self.m
        da = self._decode(a)
        db = self._decode(b)
        prod = [0] * (2 * m - 1)
        for i, ca in enumerate(da):
            if ca:
                for j, cb in enumerate(db):
                    prod[i + j] = (prod[i + j] + ca * cb) % p
        mod = self._mod_digits
        for i in range(len(prod) - 1, m - 1, -1):
            c = prod[i]
            if c:
                prod[i] = 0
                off = i - m
                for j in range(m):
                    prod[off + j] = (prod[off + j] - c * mod[j]) % p
        return self._encode(prod[:m])

    def _decode(self, v: int) -> list[int]:
        p = self.p
        out = []
        for _ in range(self.m):
            v, d = divmod(v, p)
            out.append(d)
        return out

    def _encode(self, digits: Iterable[int]) -> int:
        out = 0
        mult = 1
        for d in digits:
            out += d * mult
            mult *= self.p
        return out

    def _build_trace_mask(self) -> int:
        mask = 0
        for i in range(self.m):
            t = 1 << i
            acc = t
            for _ in range(self.m - 1):
                t = self.mul(t, t)
                acc ^= t
            if acc not in (0, 1):
                raise AssertionError("trace of a basis element left GF(2)")
            mask |= acc << i
        return mask

    @property
    def trace_mask(self) -> int:
        """p = 2 only: trace(a) equals the parity of a & trace_mask."""
        if self.p != 2:
            raise AttributeError("trace_mask is only defined for p = 2")
        return self._trace_mask

    def generator(self) -> int:
        """Smallest multiplicative generator in packed-int order."""
        n = self.order - 1
        if n == 1:
            return 1
        factors = _prime_factors(n)
        for cand in range(2, self.order):
            if all(self.pow(cand, n // f) != 1 for f in factors):
                return cand
        raise AssertionError("no multiplicative generator found")

    def multiplicative_tables(self) -> _Tables:
        """Build (once) and return exp/log/trace-of-exp tables.

        exp[i] = g**i for the smallest generator g, i in [0, order-1);
        log is its inverse with log[0] = -1; tr_exp[i] = trace(exp[i]).
        """
        if self._tables is None:
            with self._lock:
                if self._tables is None:
                    self._tables = self._build_tables()
        return self._tables

    def _build_tables(self) -> _Tables:
        if self.order > MAX_TABLE_ORDER:
            raise FieldLimitError(
                f"{self!r} is too large for discrete-log tables "
                f"(order limit 2^{MAX_TABLE_ORDER.bit_length() - 1})"
            )
        n = self.order - 1
        g = self.generator()
        exp = np.empty(n, dtype=np.int64)
        v = 1
        for i in range(n):
            exp[i] = v
            v = self.mul(v, g)
        if v != 1:
            raise AssertionError("generator order mismatch")
        log = np.full(self.order, -1, dtype=np.int64)
        log[exp] = np.arange(n, dtype=np.int64)
        if self.p == 2:
            tr_exp = (np.bitwise_count(exp.astype(np.uint64) & np.uint64(self._trace_mask)) & 1).astype(np.uint8)
        else:
            trace_all = np.empty(self.order, dtype=np.uint8)
            basis_tr = [self.trace(self._encode([0] * i + [1])) for i in range(self.m)]
            for v in range(self.order):
                w = v
                t = 0
                for i in range(self.m):
                    w, d = divmod(w, self.p)
                    t += d * basis_tr[i]
                trace_all[v] = t % self.p
            tr_exp = trace_all[exp]
        return _Tables(exp, log, tr_exp)


@functools.lru_cache(maxsize=None)
def make_field(p: int, m: int) -> FieldContext:
    """Field context for GF(p^m) with the canonical (lex-smallest) modulus.

    Limits: p = 2 admits 1 <= m <= 32; odd p admits p**m <= 2**22.
    """
    if not is_prime(p):
        raise ValueError(f"characteristic {p} is not prime")
    if m < 1:
        raise ValueError(f"extension degree must be >= 1, got {m}")
    if p == 2:
        if m > MAX_BINARY_DEGREE:
            raise FieldLimitError(f"GF(2^{m}) exceeds the degree limit {MAX_BINARY_DEGREE}")
    elif p**m > MAX_ODD_ORDER:
        raise FieldLimitError(f"GF({p}^{m}) exceeds the odd-characteristic order limit 2^22")
    return FieldContext(p, m, _lex_smallest_irreducible(p, m))
