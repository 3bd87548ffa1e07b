"""Curve families and exhaustive point counting over extension towers.

Four families over the prime field:

  ck   y^2 + y  = x^(2^k + 1) + x   over GF(2), genus 2^(k-1)
  ek   y^2 + xy = x^(2^k + 3) + x   over GF(2), genus 2^(k-1) + 1
  ak   y^2 + y  = x^(2^k) + x      over GF(2), genus 0
  ckp  y^p - y  = x^(p^k + 1) + x   over GF(p), p odd, genus (p-1) p^k / 2

Counting is trace-based: a fiber above x has p points when the absolute
trace of the defining value vanishes, else none (with the x = 0 fiber of ek
contributing the single point y = 0).  For ek and x != 0, substituting
y = xz turns the fiber condition into Tr(x^(2^k + 1) + 1/x) = 0.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .gf import FieldContext, FieldLimitError, is_prime, jacobi_symbol, make_field
from ._kernels import ProgressFn, trace_zero_count

FAMILIES = ("ck", "ek", "ak", "ckp")

# Enumerations above this order are rejected unless the caller raises the
# gate explicitly; crossing it means multi-minute runs.
DEFAULT_MAX_ORDER = 1 << 26
LARGE_MAX_ORDER = 1 << 32


@dataclass(frozen=True)
class CurveSpec:
    """One curve of the four families: family tag, parameter k, characteristic p."""

    family: str
    k: int
    p: int = 2

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}; expected one of {FAMILIES}")
        if self.k < 1:
            raise ValueError(f"k must be >= 1, got {self.k}")
        if self.family == "ckp":
            if self.p == 2 or not is_prime(self.p):
                raise ValueError(f"family ckp needs an odd prime p, got {self.p}")
        elif self.p != 2:
            raise ValueError(f"family {self.family} is defined over GF(2), got p={self.p}")

    @property
    def genus(self) -> int:
        if self.family == "ck":
            return 1 << (self.k - 1)
        if self.family == "ek":
            return (1 << (self.k - 1)) + 1
        if self.family == "ak":
            return 0
        return (self.p - 1) * self.p**self.k // 2

    @property
    def n_inf(self) -> int:
        """Degree-1 places at infinity on the smooth model (one for every family)."""
        return 1

    @property
    def label(self) -> str:
        if self.family == "ck":
            return f"C_{self.k}"
        if self.family == "ek":
            return f"E_{self.k}"
        if self.family == "ak":
            return f"A_{self.k}"
        return f"C_{self.k}^({self.p})"


@dataclass(frozen=True)
class PointCounts:
    """N_1..N_M for one curve, with per-entry provenance ('counted'/'cached')."""

    spec: CurveSpec
    counts: tuple[int, ...]
    provenance: tuple[str, ...]

    @property
    def base_q(self) -> int:
        return self.spec.p

    def __len__(self) -> int:
        return len(self.counts)


class CountIntegrityError(RuntimeError):
    """A computed or cached count violates the Hasse-Weil bound."""


def genus(spec: CurveSpec) -> int:
    return spec.genus


def _field_for(spec_p: int, m: int, max_order: int | None) -> FieldContext:
    gate = DEFAULT_MAX_ORDER if max_order is None else max_order
    if spec_p**m > gate:
        raise FieldLimitError(
            f"GF({spec_p}^{m}) exceeds the enumeration gate 2^{gate.bit_length() - 1}; "
            "raise max_order (CLI: --allow-large) to run it anyway"
        )
    return make_field(spec_p, m)


def affine_count(
    spec: CurveSpec,
    m: int,
    *,
    workers: int = 1,
    max_order: int | None = None,
    progress: ProgressFn | None = None,
) -> int:
    """Solutions of the affine model over GF(p^m), by trace-based fiber counting."""
    if m < 1:
        raise ValueError(f"extension degree must be >= 1, got {m}")
    ctx = _field_for(spec.p, m, max_order)
    kw = dict(workers=workers, progress=progress)
    if spec.family == "ck":
        return 2 * trace_zero_count(ctx, ((1 << spec.k) + 1, 1), **kw)
    if spec.family == "ak":
        return 2 * trace_zero_count(ctx, (1 << spec.k, 1), **kw)
    if spec.family == "ckp":
        return spec.p * trace_zero_count(ctx, (spec.p**spec.k + 1, 1), **kw)
    # ek: x = 0 gives y^2 = 0, exactly one point; x != 0 gives two points
    # iff Tr(x^(2^k + 1) + 1/x) = 0 (substitute y = xz).
    nonzero = trace_zero_count(ctx, ((1 << spec.k) + 1, -1), exclude_zero=True, **kw)
    return 1 + 2 * nonzero


def point_count(
    spec: CurveSpec,
    m: int,
    *,
    workers: int = 1,
    max_order: int | None = None,
    progress: ProgressFn | None = None,
) -> int:
    """N_m: points of the smooth model over GF(p^m)."""
    n = affine_count(spec, m, workers=workers, max_order=max_order, progress=progress)
    if spec.family == "ak":
        # The ak affine model factors as (y + B(x))(y + B(x) + 1) with
        # B(x) = x + x^2 + ... + x^(2^(k-1)), two disjoint rational components
        # each isomorphic to the x-line.  The smooth model is one component,
        # a projective line, hence half the affine solutions plus one.
        return n // 2 + 1
    return n + spec.n_inf


def _hasse_weil_ok(n: int, q: int, m: int, g: int) -> bool:
    return (n - q**m - 1) ** 2 <= 4 * g * g * q**m


def count_series(
    spec: CurveSpec,
    upto: int,
    *,
    workers: int = 1,
    cache=None,
    max_order: int | None = None,
    progress: ProgressFn | None = None,
) -> PointCounts:
    """Directly counted N_1..N_upto, consulting/filling the cache when given."""
    if upto < 1:
        raise ValueError(f"need at least one extension, got {upto}")
    counts = []
    prov = []
    for m in range(1, upto + 1):
        ctx = _field_for(spec.p, m, max_order)
        n = cache.lookup(spec, m, ctx.modulus) if cache is not None else None
        if n is None:
            n = point_count(spec, m, workers=workers, max_order=max_order, progress=progress)
            if cache is not None:
                cache.store(spec, m, ctx.modulus, n)
            prov.append("counted")
        else:
            prov.append("cached")
        if not _hasse_weil_ok(n, spec.p, m, spec.genus):
            raise CountIntegrityError(
                f"N_{m} = {n} for {spec.label} violates the Hasse-Weil bound"
            )
        counts.append(n)
    return PointCounts(spec, tuple(counts), tuple(prov))


def lmw_zero_count(
    n: int,
    k: int,
    j: int = 0,
    *,
    workers: int = 1,
    max_order: int | None = None,
    progress: ProgressFn | None = None,
) -> int:
    """Zeros of Tr(x^(2^k + 1) + x^(2^j + 1)) in GF(2^n), by enumeration."""
    if n < 1 or n % 2 == 0:
        raise ValueError(f"n must be odd and positive, got {n}")
    if not 0 <= j < k:
        raise ValueError(f"need 0 <= j < k, got k={k}, j={j}")
    ctx = _field_for(2, n, max_order)
    return trace_zero_count(
        ctx, ((1 << k) + 1, (1 << j) + 1), workers=workers, progress=progress
    )


def lmw_formula(n: int, k: int, j: int = 0) -> int:
    """Predicted zero count 2^(n-1) + (2/n) 2^((n-1)/2), n odd, gcd(k +- j, n) = 1."""
    if n < 1 or n % 2 == 0:
        raise ValueError(f"n must be odd and positive, got {n}")
    if not 0 <= j < k:
        raise ValueError(f"need 0 <= j < k, got k={k}, j={j}")
    if math.gcd(k + j, n) != 1 or math.gcd(k - j, n) != 1:
        raise ValueError(
            f"hypothesis gcd(k+j, n) = gcd(k-j, n) = 1 fails for k={k}, j={j}, n={n}; "
            "the closed form does not apply"
        )
    return (1 << (n - 1)) + jacobi_symbol(2, n) * (1 << ((n - 1) // 2))
