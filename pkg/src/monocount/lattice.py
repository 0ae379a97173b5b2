"""Integer kernels mod n via the Smith normal form.

The character group orthogonal to the image of the monomial map is, in
discrete-log coordinates, an integer kernel: a character tuple
t = (t_1, ..., t_r) is trivial on every monomial value tuple iff

    sum_i m[j][i] * t_i == 0  (mod n)   for every variable row j,

with n = q - 1.  (Write x_j = g^(k_j); the tuple character applied to the
monomial values has total exponent sum_j k_j * (sum_i m[j][i] t_i), which
vanishes for all k exactly when each row congruence holds.)  So the whole
character-group side of the computation reduces to solving M t == 0 mod n,
which the Smith normal form U M V = D diagonalizes: with z = V^-1 t the
constraints decouple into d_k z_k == 0 mod n, each solved by multiples of
n / gcd(d_k, n).

All arithmetic is exact (Python integers are unbounded).
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass


@dataclass(frozen=True)
class SnfDecomposition:
    u: tuple[tuple[int, ...], ...]  # s x s, |det| = 1
    d: tuple[tuple[int, ...], ...]  # s x r, diagonal, d_k | d_{k+1}
    v: tuple[tuple[int, ...], ...]  # r x r, |det| = 1

    @property
    def invariant_factors(self) -> tuple[int, ...]:
        out = []
        for k in range(min(len(self.d), len(self.d[0]) if self.d else 0)):
            if self.d[k][k] == 0:
                break
            out.append(self.d[k][k])
        return tuple(out)


@dataclass(frozen=True)
class DualGroupBasis:
    """Generators-with-orders presentation of a kernel subgroup of (Z/n)^r.

    Enumerating all mixed-radix exponent combinations of the generators
    yields each group element exactly once (the generators come from
    independent coordinates of a unimodular change of basis).
    """

    n: int
    r: int
    gens: tuple[tuple[int, ...], ...]
    orders: tuple[int, ...]
    size: int


def smith_normal_form(m) -> SnfDecomposition:
    """Exact Smith normal form U*M*V = D with unimodular U, V.

    Pivoting picks the smallest-magnitude nonzero entry, which keeps
    intermediate values small on the matrices seen here.
    """
    a = [list(row) for row in m]
    s = len(a)
    r = len(a[0]) if s else 0
    u = [[int(i == j) for j in range(s)] for i in range(s)]
    v = [[int(i == j) for j in range(r)] for i in range(r)]

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for row in a:
            row[i], row[j] = row[j], row[i]
        for row in v:
            row[i], row[j] = row[j], row[i]

    def add_row(dst, src, c):  # row dst += c * row src
        for i in range(r):
            a[dst][i] += c * a[src][i]
        for i in range(s):
            u[dst][i] += c * u[src][i]

    def add_col(dst, src, c):
        for row in a:
            row[dst] += c * row[src]
        for row in v:
            row[dst] += c * row[src]

    for k in range(min(s, r)):
        while True:
            # smallest-magnitude nonzero pivot in the trailing block
            pivot = None
            for i in range(k, s):
                for j in range(k, r):
                    if a[i][j] != 0 and (pivot is None or abs(a[i][j]) < abs(a[pivot[0]][pivot[1]])):
                        pivot = (i, j)
            if pivot is None:
                break
            if pivot != (k, k):
                if pivot[0] != k:
                    swap_rows(k, pivot[0])
                if pivot[1] != k:
                    swap_cols(k, pivot[1])
            dirty = False
            for i in range(k + 1, s):
                if a[i][k]:
                    add_row(i, k, -(a[i][k] // a[k][k]))
                    if a[i][k]:
                        dirty = True
            for j in range(k + 1, r):
                if a[k][j]:
                    add_col(j, k, -(a[k][j] // a[k][k]))
                    if a[k][j]:
                        dirty = True
            if dirty:
                continue
            # pivot must divide the rest of the block for the factor chain
            culprit = None
            for i in range(k + 1, s):
                for j in range(k + 1, r):
                    if a[i][j] % a[k][k]:
                        culprit = i
                        break
                if culprit is not None:
                    break
            if culprit is None:
                break
            add_row(k, culprit, 1)
        if k < min(s, r) and a[k][k] < 0:
            for j in range(r):
                a[k][j] = -a[k][j]
            for j in range(s):
                u[k][j] = -u[k][j]

    return SnfDecomposition(
        u=tuple(tuple(row) for row in u),
        d=tuple(tuple(row) for row in a),
        v=tuple(tuple(row) for row in v),
    )


def dual_group(m, n: int) -> DualGroupBasis:
    """Basis of {t in (Z/n)^r : M t == 0 mod n}."""
    if n < 1:
        raise ValueError("modulus must be >= 1")
    s = len(m)
    r = len(m[0]) if s else 0
    snf = smith_normal_form(m)
    gens: list[tuple[int, ...]] = []
    orders: list[int] = []
    size = 1
    for k in range(r):
        dk = snf.d[k][k] if k < s else 0
        g = math.gcd(dk, n)
        if g == 1:
            continue
        step = n // g
        gens.append(tuple((snf.v[i][k] * step) % n for i in range(r)))
        orders.append(g)
        size *= g
    return DualGroupBasis(n=n, r=r, gens=tuple(gens), orders=tuple(orders), size=size)


def enumerate_dual(basis: DualGroupBasis):
    """Yield every element of the group once, mixed-radix generator order."""
    if not basis.gens:
        yield (0,) * basis.r
        return
    n, r = basis.n, basis.r
    for exps in itertools.product(*(range(o) for o in basis.orders)):
        t = [0] * r
        for e, gen in zip(exps, basis.gens):
            if e:
                for i in range(r):
                    t[i] = (t[i] + e * gen[i]) % n
        yield tuple(t)


def restrict_lambda_trivial(m, n: int) -> DualGroupBasis:
    """Subgroup whose component exponents sum to 0 mod n.

    Realized by adjoining an all-ones row to the exponent matrix, which is
    exactly the extra congruence sum_i t_i == 0 mod n.
    """
    r = len(m[0]) if m else 0
    return dual_group(list(m) + [[1] * r], n)


def kernel_size_d(m, n: int) -> int:
    """Size of {u in (Z/n)^s : M^T u == 0 mod n}, from the invariant factors."""
    if n < 1:
        raise ValueError("modulus must be >= 1")
    s = len(m)
    r = len(m[0]) if s else 0
    snf = smith_normal_form(m)
    d = n ** max(0, s - min(s, r))
    for k in range(min(s, r)):
        d *= math.gcd(snf.d[k][k], n)
    return d
