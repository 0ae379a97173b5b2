"""Solution counting for monomial equations over a finite field.

The equation is F(x) = sum_i a_i * x_1^m[0][i] * ... * x_s^m[s-1][i] with
all coefficients a_i nonzero.  The headline operation computes the number
of solutions with every coordinate nonzero from a character sum over the
lambda-trivial part of the dual group:

    n_bar = (1/q) * [ (q-1)^s
                      + (q-1)^(s-r+1) * sum_{chi} conj(chi)(a) * G0(chi) ]

where chi runs over the character tuples orthogonal to the image of the
monomial map whose component product is trivial, and G0(chi) is the
product of base-character Gauss sums.  The raw value is complex; it must
round to an integer within a strict residual tolerance or the computation
is rejected outright.

Brute-force oracles (n_bar_bruteforce, n_total_bruteforce, s_bar_direct)
enumerate points directly and exist to adjudicate every formula path.
Enumeration of nonzero tuples runs over discrete-log exponents so monomial
evaluation is pure index arithmetic; chunked numpy keeps it fast and the
fixed chunk size keeps summation order deterministic.
"""

from __future__ import annotations

import functools
import time
import warnings
from dataclasses import dataclass

import numpy as np

from .characters import _steps, gauss_sum_table, root_table
from .field import FieldCtx
from .lattice import (
    DualGroupBasis,
    dual_group,
    enumerate_dual,
    kernel_size_d,
    restrict_lambda_trivial,
    smith_normal_form,
)

DEFAULT_LIMIT = 10 ** 7
_CHUNK = 1 << 18


class LimitExceededError(RuntimeError):
    """An enumeration would exceed the configured work limit."""


class ResidualToleranceError(ArithmeticError):
    """The character-sum count failed to round cleanly to an integer."""


class ConsistencyError(AssertionError):
    """Two independently computed quantities disagree beyond tolerance."""


class DivisibleExponentWarning(UserWarning):
    """A positive exponent is a multiple of q-1 (outside the derivation's
    stated hypothesis; the count is still oracle-checked)."""


@dataclass(frozen=True)
class MonomialForm:
    field: FieldCtx
    m: tuple[tuple[int, ...], ...]  # s rows (variables) x r columns (monomials)
    a: tuple[int, ...]              # r nonzero coefficient codes

    def __post_init__(self):
        object.__setattr__(self, "m", tuple(tuple(row) for row in self.m))
        object.__setattr__(self, "a", tuple(self.a))
        s = len(self.m)
        if s < 1:
            raise ValueError("need at least one variable")
        r = len(self.m[0])
        if r < 1:
            raise ValueError("need at least one monomial")
        if any(len(row) != r for row in self.m):
            raise ValueError("ragged exponent matrix")
        if any(e < 0 for row in self.m for e in row):
            raise ValueError("exponents must be non-negative")
        for i in range(r):
            if all(self.m[j][i] == 0 for j in range(s)):
                raise ValueError(f"monomial {i} is constant (all exponents zero)")
        if len(self.a) != r:
            raise ValueError("coefficient count must match monomial count")
        if any(c == 0 for c in self.a):
            raise ValueError("zero coefficient")
        if any(not 0 <= c < self.field.q for c in self.a):
            raise ValueError("coefficient code out of range")
        n = self.field.n
        if n > 1 and any(e > 0 and e % n == 0 for row in self.m for e in row):
            warnings.warn(
                f"an exponent is a positive multiple of q-1 = {n}; "
                "the character-sum derivation assumes otherwise",
                DivisibleExponentWarning,
                stacklevel=2,
            )

    @property
    def s(self) -> int:
        return len(self.m)

    @property
    def r(self) -> int:
        return len(self.m[0])


@dataclass(frozen=True)
class CountReport:
    n_bar: int
    n_total: int
    d: int
    dual_size: int
    dual_star_size: int
    char_sum: complex
    residual: float
    invariant_factors: tuple[int, ...]
    timings: dict[str, float]

    def to_json_dict(self) -> dict:
        return {
            "n_bar": self.n_bar,
            "n_total": self.n_total,
            "d": self.d,
            "dual_size": self.dual_size,
            "dual_star_size": self.dual_star_size,
            "char_sum_re": self.char_sum.real,
            "char_sum_im": self.char_sum.imag,
            "residual": self.residual,
            "timings": dict(self.timings),
        }


@functools.lru_cache(maxsize=None)
class _NpTables:
    """Per-field numpy views of the lookup tables."""

    def __init__(self, ctx: FieldCtx):
        self.ctx = ctx
        self.antilog = np.asarray(ctx.antilog, dtype=np.int64)
        self.log = np.asarray(ctx.log, dtype=np.int64)  # log[0] = -1 sentinel
        self.trace = np.asarray(ctx.trace_table, dtype=np.int64)
        self.roots = root_table(ctx)
        self.L, self.step_p, self.step_m = _steps(ctx)

    def add(self, x: np.ndarray, y: np.ndarray) -> np.ndarray:
        ctx = self.ctx
        if ctx.e == 1:
            return (x + y) % ctx.p
        out = np.zeros_like(x)
        xs, ys = x.copy(), y.copy()
        w = 1
        for _ in range(ctx.e):
            out += ((xs + ys) % ctx.p) * w
            xs //= ctx.p
            ys //= ctx.p
            w *= ctx.p
        return out

    def mul(self, x: np.ndarray, y: np.ndarray) -> np.ndarray:
        zero = (x == 0) | (y == 0)
        prod = self.antilog[(self.log[x] + self.log[y]) % self.ctx.n]
        return np.where(zero, 0, prod)


def eval_form(form: MonomialForm, x) -> int:
    """F(x) in the field, with the convention 0**0 = 1."""
    ctx = form.field
    if len(x) != form.s:
        raise ValueError("point has wrong dimension")
    total = 0
    for i in range(form.r):
        term = form.a[i]
        for j in range(form.s):
            term = ctx.mul(term, ctx.pow(x[j], form.m[j][i]))
        total = ctx.add(total, term)
    return total


def _check_limit(count: int, limit: int, what: str) -> None:
    if count > limit:
        raise LimitExceededError(
            f"{what} needs {count} evaluations, over the limit {limit}"
        )


def _unit_form_values(form: MonomialForm, start: int, stop: int) -> np.ndarray:
    """F over the nonzero-coordinate points with odometer index in [start, stop).

    Point index idx maps to exponents k_j = (idx // n^(s-1-j)) % n and the
    point (g^k_1, ..., g^k_s); each monomial is then a single antilog of a
    mod-n dot product.
    """
    ctx = form.field
    t = _NpTables(ctx)
    n, s, r = ctx.n, form.s, form.r
    idx = np.arange(start, stop, dtype=np.int64)
    ks = [(idx // n ** (s - 1 - j)) % n for j in range(s)]
    la = [ctx.dlog(c) for c in form.a]
    total = np.zeros(len(idx), dtype=np.int64)
    for i in range(r):
        acc = np.full(len(idx), la[i], dtype=np.int64)
        for j in range(s):
            mji = form.m[j][i]
            if mji:
                acc += mji * ks[j]
        total = t.add(total, t.antilog[acc % n])
    return total


def s_bar_direct(form: MonomialForm, u: int = 1, limit: int = DEFAULT_LIMIT) -> complex:
    """sum of psi_u(F(x)) over all points with every coordinate nonzero."""
    ctx = form.field
    if u == 0:
        raise ValueError("additive character parameter must be nonzero")
    npts = ctx.n ** form.s
    _check_limit(npts, limit, "nonzero-point enumeration")
    t = _NpTables(ctx)
    lu = ctx.dlog(u)
    total = 0j
    for start in range(0, npts, _CHUNK):
        vals = _unit_form_values(form, start, min(start + _CHUNK, npts))
        uv = np.where(vals == 0, 0, t.antilog[(t.log[vals] + lu) % ctx.n])
        total += t.roots[(t.trace[uv] * t.step_p) % t.L].sum()
    return complex(total)


def n_bar_bruteforce(form: MonomialForm, limit: int = DEFAULT_LIMIT) -> int:
    """Exact count of nonzero-coordinate solutions, by enumeration."""
    ctx = form.field
    npts = ctx.n ** form.s
    _check_limit(npts, limit, "nonzero-point enumeration")
    count = 0
    for start in range(0, npts, _CHUNK):
        vals = _unit_form_values(form, start, min(start + _CHUNK, npts))
        count += int((vals == 0).sum())
    return count


def n_total_bruteforce(form: MonomialForm, limit: int = DEFAULT_LIMIT) -> int:
    """Exact count of solutions over the whole affine space."""
    ctx = form.field
    t = _NpTables(ctx)
    q, n, s, r = ctx.q, ctx.n, form.s, form.r
    npts = q ** s
    _check_limit(npts, limit, "full-space enumeration")
    la = [ctx.dlog(c) for c in form.a]
    count = 0
    for start in range(0, npts, _CHUNK):
        idx = np.arange(start, min(start + _CHUNK, npts), dtype=np.int64)
        xs = [(idx // q ** (s - 1 - j)) % q for j in range(s)]
        total = np.zeros(len(idx), dtype=np.int64)
        for i in range(r):
            term = np.full(len(idx), form.a[i], dtype=np.int64)
            for j in range(s):
                mji = form.m[j][i]
                if mji:
                    x = xs[j]
                    xp = np.where(x == 0, 0, t.antilog[(t.log[x] * mji) % n])
                    term = t.mul(term, xp)
            total = t.add(total, term)
        count += int((total == 0).sum())
    return count


def _conj_char_on_coeffs(form: MonomialForm):
    """Returns ts -> conj(chi_ts)(a) as a root-table lookup."""
    ctx = form.field
    t = _NpTables(ctx)
    la = [ctx.dlog(c) for c in form.a]

    def ev(ts) -> complex:
        acc = -sum(ti * li for ti, li in zip(ts, la))
        return complex(t.roots[(acc * t.step_m) % t.L])

    return ev


def s_bar_via_characters(
    form: MonomialForm, u: int = 1, limit: int = DEFAULT_LIMIT
) -> complex:
    """The same sum as s_bar_direct, via the dual character group."""
    ctx = form.field
    if u == 0:
        raise ValueError("additive character parameter must be nonzero")
    basis = dual_group(form.m, ctx.n)
    _check_limit(basis.size, limit, "dual group enumeration")
    g0 = gauss_sum_table(ctx)
    L, _, step_m = _steps(ctx)
    roots = root_table(ctx)
    lu = ctx.dlog(u)
    # g_{psi_u}(chi_t) = conj(chi_t(u)) * g0(chi_t)
    gu = [complex(roots[(-t * lu * step_m) % L] * g0[t]) for t in range(ctx.n)]
    conj_chi_a = _conj_char_on_coeffs(form)
    total = 0j
    for ts in enumerate_dual(basis):
        prod = 1 + 0j
        for t in ts:
            prod *= gu[t]
        total += conj_chi_a(ts) * prod
    return float(ctx.n) ** (form.s - form.r) * total


def _char_sum_star(form: MonomialForm, star: DualGroupBasis) -> complex:
    """sum over the lambda-trivial dual subgroup of conj(chi)(a) * G0(chi)."""
    g0 = gauss_sum_table(form.field)
    conj_chi_a = _conj_char_on_coeffs(form)
    total = 0j
    for ts in enumerate_dual(star):
        prod = 1 + 0j
        for t in ts:
            prod *= g0[t]
        total += conj_chi_a(ts) * prod
    return total


def _residual_tolerance(ctx: FieldCtx, s: int) -> float:
    return 1e-6 * max(1.0, float(ctx.n) ** (s / 2))


def _n_bar_from_char_sum(form: MonomialForm, char_sum: complex) -> tuple[int, float]:
    ctx = form.field
    q, n, s, r = ctx.q, ctx.n, form.s, form.r
    raw = (float(n) ** s + float(n) ** (s - r + 1) * char_sum) / q
    rounded = round(raw.real)
    residual = abs(raw - rounded)
    tol = _residual_tolerance(ctx, s)
    if residual >= tol:
        raise ResidualToleranceError(
            f"count {raw} does not round to an integer within {tol}"
        )
    if not 0 <= rounded <= n ** s:
        raise ResidualToleranceError(
            f"rounded count {rounded} outside [0, (q-1)^s]"
        )
    return rounded, residual


def _n_bar_value(form: MonomialForm, limit: int) -> tuple[int, complex, float, DualGroupBasis]:
    star = restrict_lambda_trivial(form.m, form.field.n)
    _check_limit(star.size, limit, "restricted dual group enumeration")
    char_sum = _char_sum_star(form, star)
    n_bar, residual = _n_bar_from_char_sum(form, char_sum)
    return n_bar, char_sum, residual, star


def n_total_inclusion_exclusion(form: MonomialForm, limit: int = DEFAULT_LIMIT) -> int:
    """Total solution count assembled from nonzero-coordinate counts.

    Stratify the affine space by which coordinates vanish: on each stratum,
    drop the monomials killed by a zeroed variable and count the nonzero
    solutions of the surviving sub-equation.  A stratum where every
    monomial dies consists entirely of solutions.
    """
    ctx = form.field
    s, r = form.s, form.r
    _check_limit(2 ** s, limit, "vanishing-coordinate strata")
    total = 0
    for mask in range(2 ** s):
        zeroed = [j for j in range(s) if mask >> j & 1]
        kept = [j for j in range(s) if not mask >> j & 1]
        cols = [
            i for i in range(r) if all(form.m[j][i] == 0 for j in zeroed)
        ]
        if not cols:
            total += ctx.n ** len(kept)
            continue
        with warnings.catch_warnings():
            # the top-level form already warned about its exponents
            warnings.simplefilter("ignore", DivisibleExponentWarning)
            sub = MonomialForm(
                field=ctx,
                m=tuple(tuple(form.m[j][i] for i in cols) for j in kept),
                a=tuple(form.a[i] for i in cols),
            )
        total += _n_bar_value(sub, limit)[0]
    return total


def n_bar_formula(form: MonomialForm, limit: int = DEFAULT_LIMIT) -> CountReport:
    """Full report: the character-sum count, group sizes, and total count."""
    ctx = form.field
    t0 = time.perf_counter()
    basis = dual_group(form.m, ctx.n)
    d = kernel_size_d(form.m, ctx.n)
    inv = smith_normal_form(form.m).invariant_factors
    t1 = time.perf_counter()
    n_bar, char_sum, residual, star = _n_bar_value(form, limit)
    t2 = time.perf_counter()
    n_total = n_total_inclusion_exclusion(form, limit)
    t3 = time.perf_counter()
    return CountReport(
        n_bar=n_bar,
        n_total=n_total,
        d=d,
        dual_size=basis.size,
        dual_star_size=star.size,
        char_sum=char_sum,
        residual=residual,
        invariant_factors=inv,
        timings={
            "dual": t1 - t0,
            "char_sum": t2 - t1,
            "n_total": t3 - t2,
            "total": t3 - t0,
        },
    )


def sum_over_psi_check(form: MonomialForm, limit: int = DEFAULT_LIMIT) -> complex:
    """Cross-check three routes to sum_u S_bar(psi_u); raises on mismatch.

    The three quantities are: the direct sum over all nontrivial additive
    characters, q * n_bar - (q-1)^s from the brute-force count, and the
    restricted character sum scaled by (q-1)^(s-r+1).
    """
    ctx = form.field
    q, n, s, r = ctx.q, ctx.n, form.s, form.r
    lhs = sum(s_bar_direct(form, u, limit) for u in ctx.units())
    mid = q * n_bar_bruteforce(form, limit) - n ** s
    star = restrict_lambda_trivial(form.m, n)
    _check_limit(star.size, limit, "restricted dual group enumeration")
    rhs = float(n) ** (s - r + 1) * _char_sum_star(form, star)
    tol = 1e-6 * max(1.0, abs(mid))
    if abs(lhs - mid) > tol or abs(rhs - mid) > tol:
        raise ConsistencyError(
            f"additive-character sum disagreement: direct={lhs}, "
            f"count-based={mid}, character-based={rhs}"
        )
    return complex(lhs)
