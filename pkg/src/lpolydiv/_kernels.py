"""Enumeration kernels behind the point counters.

Both kernels count field elements x with Tr(f(x)) = 0 for f(x) = sum of
x**e over a term list.  The table kernel walks the multiplicative group
through discrete-log tables and works for any characteristic up to the
table-size limit.  The bit kernel handles p = 2 for term exponents of the
shape 2^a or 2^a + 1 at any supported field size without tables: writing
Tr(x * x^(2^a)) as a bit-parity quadratic form turns the whole per-element
evaluation into a handful of vectorized byte-table lookups.

Work is partitioned into contiguous index ranges so a worker pool can
consume them; partial sums are combined in partition order, which keeps
results identical for every worker count.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Sequence

import numpy as np

from .gf import FieldContext, FieldLimitError, make_field

# Largest field the discrete-log kernel will handle; beyond this only the
# bit kernel (p = 2, supported term shapes) is available.
TABLE_ORDER_LIMIT = 1 << 20

_BATCH = 1 << 20

ProgressFn = Callable[[int, int], None]


def _is_pow2(n: int) -> bool:
    return n > 0 and (n & (n - 1)) == 0


def _classify_terms(exponents: Sequence[int]) -> tuple[list[int], int] | None:
    """Split exponents into Frobenius twists for the bit kernel.

    Returns (quadratic twist orders, linear term count), or None if some
    exponent fits neither the 2^a nor the 2^a + 1 shape.
    """
    quads: list[int] = []
    linear = 0
    for e in exponents:
        if e >= 1 and _is_pow2(e):
            linear += 1
        elif e >= 2 and _is_pow2(e - 1):
            quads.append((e - 1).bit_length() - 1)
        else:
            return None
    return quads, linear


def _bit_tables(ctx: FieldContext, quads: Sequence[int], linear: int) -> list[np.ndarray]:
    """Byte lookup tables for u(x) with Tr(f(x)) = parity(x & u(x)).

    For each quadratic term x^(2^a + 1), Tr(x^(2^a) * x) = parity(x & B(x))
    where B is linear over GF(2); the maps for all terms XOR together, and
    the constant trace mask for an odd number of linear terms folds into the
    low byte table.
    """
    m = ctx.m
    basis = []
    for i in range(m):
        u = 0
        for a in quads:
            w = 1 << i
            for _ in range(a % m):
                w = ctx.mul(w, w)
            for j in range(m):
                if ctx.trace(ctx.mul(1 << j, w)):
                    u ^= 1 << j
        basis.append(u)
    const = ctx.trace_mask if linear % 2 else 0
    nbytes = (m + 7) // 8
    tables = []
    for b in range(nbytes):
        tab = np.zeros(256, dtype=np.uint64)
        for v in range(1, 256):
            low = (v & -v).bit_length() - 1
            bit = 8 * b + low
            piece = basis[bit] if bit < m else 0
            tab[v] = tab[v & (v - 1)] ^ np.uint64(piece)
        tables.append(tab)
    tables[0] ^= np.uint64(const)
    return tables


def _bit_count_range(
    ctx: FieldContext,
    exponents: Sequence[int],
    lo: int,
    hi: int,
    progress: ProgressFn | None = None,
    total: int | None = None,
) -> int:
    classified = _classify_terms(exponents)
    if classified is None:
        raise ValueError(f"term exponents {exponents} unsupported by the bit kernel")
    tables = _bit_tables(ctx, *classified)
    nbytes = len(tables)
    zeros = 0
    done = 0
    for start in range(lo, hi, _BATCH):
        stop = min(hi, start + _BATCH)
        x = np.arange(start, stop, dtype=np.uint64)
        u = tables[0][(x & np.uint64(0xFF)).astype(np.intp)]
        for b in range(1, nbytes):
            u ^= tables[b][((x >> np.uint64(8 * b)) & np.uint64(0xFF)).astype(np.intp)]
        parity = np.bitwise_count(x & u) & np.uint8(1)
        zeros += int(np.count_nonzero(parity == 0))
        if progress is not None:
            done += stop - start
            progress(done, total if total is not None else hi - lo)
    return zeros


def _table_count_range(ctx: FieldContext, exponents: Sequence[int], lo: int, hi: int) -> int:
    """Count i in [lo, hi) with Tr(sum_e g^(i*e)) = 0, g the table generator."""
    tables = ctx.multiplicative_tables()
    n = ctx.order - 1
    idx = np.arange(lo, hi, dtype=np.int64)
    acc = np.zeros(hi - lo, dtype=np.int64)
    for e in exponents:
        stride = e % n if n > 1 else 0
        acc += tables.tr_exp[(idx * stride) % n]
    return int(np.count_nonzero(acc % ctx.p == 0))


def _range_worker(args: tuple) -> int:
    p, m, exponents, path, lo, hi = args
    ctx = make_field(p, m)
    if path == "bits":
        return _bit_count_range(ctx, exponents, lo, hi)
    return _table_count_range(ctx, exponents, lo, hi)


def _split(total: int, parts: int) -> list[tuple[int, int]]:
    parts = max(1, min(parts, total)) if total else 1
    step, extra = divmod(total, parts)
    out = []
    lo = 0
    for i in range(parts):
        hi = lo + step + (1 if i < extra else 0)
        out.append((lo, hi))
        lo = hi
    return out


def trace_zero_count(
    ctx: FieldContext,
    exponents: Sequence[int],
    *,
    exclude_zero: bool = False,
    workers: int = 1,
    progress: ProgressFn | None = None,
) -> int:
    """Number of x in the field with Tr(sum_e x**e) = 0.

    Negative exponents mean inverse powers and force exclude_zero.  The zero
    element contributes iff every exponent is positive (f(0) = 0 there).
    """
    exponents = tuple(exponents)
    if any(e == 0 for e in exponents):
        raise ValueError("constant terms are not supported")
    if any(e < 0 for e in exponents) and not exclude_zero:
        raise ValueError("inverse powers require exclude_zero=True")
    if workers < 1:
        raise ValueError("workers must be >= 1")

    if ctx.p == 2 and all(e > 0 for e in exponents) and _classify_terms(exponents) is not None:
        path = "bits"
        total = ctx.order
    elif ctx.order <= TABLE_ORDER_LIMIT:
        path = "table"
        total = ctx.order - 1
    else:
        raise FieldLimitError(
            f"{ctx!r} is too large for these terms: the table kernel stops at "
            f"order 2^{TABLE_ORDER_LIMIT.bit_length() - 1}"
        )

    if workers == 1:
        if path == "bits":
            count = _bit_count_range(ctx, exponents, 0, total, progress, total)
        else:
            count = _table_count_range(ctx, exponents, 0, total)
    else:
        ranges = _split(total, workers)
        args = [(ctx.p, ctx.m, exponents, path, lo, hi) for lo, hi in ranges]
        with ProcessPoolExecutor(max_workers=len(ranges)) as pool:
            count = sum(pool.map(_range_worker, args))
        if progress is not None:
            progress(total, total)

    if path == "table":
        if not exclude_zero:
            count += 1  # f(0) = 0, so x = 0 always satisfies the condition
    elif exclude_zero:
        count -= 1
    return count
