"""Characters of F_q and Gauss sums.

Multiplicative characters of the unit group are encoded by an exponent
t mod (q-1) against the field's fixed generator g: chi_t(g^k) = w^(t*k)
with w a primitive (q-1)-th root of unity, and chi_t(0) = 0 for every t.
Additive characters are psi_u(x) = exp(2*pi*i * Tr(u*x) / p), non-trivial
exactly when u != 0; psi_1 is the canonical base character.

All values are double-precision complex numbers drawn from a single
precomputed root-of-unity table of length lcm(p, q-1), so repeated
evaluations share the same rounded roots.
"""

from __future__ import annotations

import functools
import math

import numpy as np

from .field import FieldCtx


@functools.lru_cache(maxsize=None)
def root_table(ctx: FieldCtx) -> np.ndarray:
    """exp(2*pi*i*k/L) for k in [0, L), L = lcm(p, q-1)."""
    L = math.lcm(ctx.p, max(ctx.n, 1))
    return np.exp(2j * np.pi * np.arange(L) / L)


def _steps(ctx: FieldCtx) -> tuple[int, int, int]:
    L = math.lcm(ctx.p, max(ctx.n, 1))
    return L, L // ctx.p, L // max(ctx.n, 1)


def additive_char_eval(ctx: FieldCtx, u: int, x: int) -> complex:
    """psi_u(x) = exp(2*pi*i * Tr(u*x) / p)."""
    L, step_p, _ = _steps(ctx)
    roots = root_table(ctx)
    return complex(roots[(ctx.trace(ctx.mul(u, x)) * step_p) % L])


def mult_char_eval(ctx: FieldCtx, t: int, x: int) -> complex:
    """chi_t(x); zero at x = 0 for every t, including the trivial t = 0."""
    if x == 0:
        return 0j
    L, _, step_m = _steps(ctx)
    roots = root_table(ctx)
    return complex(roots[(t * ctx.dlog(x) * step_m) % L])


def gauss_sum(ctx: FieldCtx, t: int, u: int = 1) -> complex:
    """Sum over the units of chi_t(x) * psi_u(x); the x = 0 term vanishes."""
    L, step_p, step_m = _steps(ctx)
    roots = root_table(ctx)
    total = 0j
    for k in range(ctx.n):
        x = ctx.antilog[k]
        tr = ctx.trace(ctx.mul(u, x))
        total += roots[(t * k * step_m + tr * step_p) % L]
    return total


def gauss_sum_rescaled(ctx: FieldCtx, t: int, u: int) -> complex:
    """conj(chi_t(u)) times the base-character Gauss sum.

    Substituting x -> x/u in the defining sum shows this equals
    gauss_sum(ctx, t, u); the two routes are kept separate so the identity
    is testable.
    """
    if u == 0:
        raise ZeroDivisionError("rescaling requires a nonzero u")
    return mult_char_eval(ctx, t, u).conjugate() * gauss_sum(ctx, t, 1)


@functools.lru_cache(maxsize=None)
def gauss_sum_table(ctx: FieldCtx) -> np.ndarray:
    """Base-character Gauss sums for every exponent t in [0, q-1)."""
    L, step_p, step_m = _steps(ctx)
    roots = root_table(ctx)
    n = ctx.n
    ks = np.arange(n, dtype=np.int64)
    antilog = np.asarray(ctx.antilog, dtype=np.int64)
    trace = np.asarray(ctx.trace_table, dtype=np.int64)
    psi_exp = trace[antilog] * step_p
    out = np.empty(n, dtype=np.complex128)
    for t in range(n):
        out[t] = roots[(t * ks * step_m + psi_exp) % L].sum()
    out.setflags(write=False)
    return out


def char_tuple_eval(ctx: FieldCtx, ts, ys) -> complex:
    """Componentwise product chi_{t_1}(y_1) * ... * chi_{t_r}(y_r)."""
    if any(y == 0 for y in ys):
        return 0j
    L, _, step_m = _steps(ctx)
    roots = root_table(ctx)
    acc = sum(t * ctx.dlog(y) for t, y in zip(ts, ys))
    return complex(roots[(acc * step_m) % L])


def lambda_exponent(ts, q: int) -> int:
    """Exponent of the product character chi_1 * ... * chi_r on the units."""
    return sum(ts) % (q - 1)


def product_gauss_sum(ctx: FieldCtx, ts, u: int = 1) -> complex:
    """Product of the componentwise Gauss sums for the tuple character."""
    out = 1 + 0j
    for t in ts:
        out *= gauss_sum(ctx, t, u)
    return out
