"""Restriction of a special Schubert class to a fixed point on Gr(m, N).

The coefficient N^nu_{nu,p} of [X_nu] in [X_nu] * [X_p] equals the
restriction of the special class [X_p] to the fixed point nu.  Splitting
[1, N] at the marker of the special symbol,

    I1 = [1, N-m-p+1],   I2 = [N-m-p+2, N],
    a  = sorted(I1 intersect nu)   (r elements),
    b  = sorted(I2 minus nu)       (always p+r-1 elements),

the coefficient is the subword sum

    sum over 1 <= c_1 < ... < c_p <= p+r-1  of
        prod_i ( t_{b[c_i]} - t_{a[c_i - i + 1]} )      (1-based),

a manifestly positive expression: every factor t_j - t_i has i < j.  The
sum is empty (coefficient 0) exactly when r = 0, i.e. nu is not below the
special symbol; p = 0 gives 1, and p < 0 gives 0.  An equivalent closed
form, used as an independent cross-check, is

    sum_k e_k(t_b) * h_{p-k}(-t_a),

and both come from evaluating a partial-fraction identity proved by
schur_identity_check below, which callers can replay at random integer
points with exact rational arithmetic.

When N = 2n, the factor (t_{n+1} - t_n) can only ever occur when r = 1,
a = (n,), b_1 = n+1; has_middle_difference tests for it so that callers
specializing onto an even orthogonal torus can refuse such instances.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, combinations_with_replacement
from typing import Sequence, Tuple

from .errors import InputError
from .polyring import Polynomial
from .schubert import Space, validate_symbol


@dataclass(frozen=True)
class RestrictionInstance:
    """The index data of one restriction coefficient on Gr(m, N), p >= 1."""

    N: int
    m: int
    nu: Tuple[int, ...]
    p: int
    I1: Tuple[int, ...]
    I2: Tuple[int, ...]
    a: Tuple[int, ...]
    b: Tuple[int, ...]

    @property
    def r(self) -> int:
        return len(self.a)


def restriction_instance(space: Space, nu, p: int) -> RestrictionInstance:
    if space.lie_type != "A":
        raise InputError("restriction instances live on type A spaces")
    nu = validate_symbol(space, nu)
    if p < 1:
        raise InputError("restriction instances need p >= 1")
    N, m = space.n, space.m
    split = N - m - p + 1
    I1 = tuple(range(1, max(split, 0) + 1))
    I2 = tuple(range(max(split, 0) + 1, N + 1))
    nu_set = set(nu)
    a = tuple(c for c in I1 if c in nu_set)
    b = tuple(c for c in I2 if c not in nu_set)
    inst = RestrictionInstance(N, m, nu, p, I1, I2, a, b)
    if len(b) != p + inst.r - 1:
        raise InputError(
            f"instance has {len(b)} upper gaps, expected {p + inst.r - 1}"
        )
    return inst


def subword_terms(inst: RestrictionInstance):
    """The factor lists (b_i, a_i index pairs), one per subword."""
    p, r = inst.p, inst.r
    for cs in combinations(range(1, p + r), p):
        yield [(inst.b[c - 1], inst.a[c - i - 1]) for i, c in enumerate(cs)]


def instance_value(inst: RestrictionInstance) -> Polynomial:
    N = inst.N
    total = Polynomial.zero(N)
    for factors in subword_terms(inst):
        term = Polynomial.one(N)
        for bi, ai in factors:
            term = term * (Polynomial.variable(bi, N) - Polynomial.variable(ai, N))
        total = total + term
    return total


def has_middle_difference(inst: RestrictionInstance) -> bool:
    """Whether any factor is t_{n+1} - t_n for N = 2n."""
    if inst.N % 2:
        return False
    n = inst.N // 2
    for factors in subword_terms(inst):
        if (n + 1, n) in factors:
            return True
    return False


def middle_difference_possible(inst: RestrictionInstance) -> bool:
    """Closed form of has_middle_difference: r = 1, a = (n,), b_1 = n + 1."""
    if inst.N % 2 or inst.p < 1:
        return False
    n = inst.N // 2
    return inst.r == 1 and inst.a == (n,) and bool(inst.b) and inst.b[0] == n + 1


def restriction_coefficient(space: Space, nu, p: int) -> Polynomial:
    """N^nu_{nu,p} on Gr(m, N) as a polynomial in N torus parameters."""
    if space.lie_type != "A":
        raise InputError("restriction coefficients live on type A spaces")
    nu = validate_symbol(space, nu)
    N = space.n
    if p < 0 or p > N - space.m:
        return Polynomial.zero(N)
    if p == 0:
        return Polynomial.one(N)
    inst = restriction_instance(space, nu, p)
    return instance_value(inst)


def _elementary(indices: Sequence[int], k: int, nvars: int) -> Polynomial:
    total = Polynomial.zero(nvars)
    for combo in combinations(indices, k):
        term = Polynomial.one(nvars)
        for i in combo:
            term = term * Polynomial.variable(i, nvars)
        total = total + term
    return total


def _complete(indices: Sequence[int], k: int, nvars: int) -> Polynomial:
    total = Polynomial.zero(nvars)
    for combo in combinations_with_replacement(indices, k):
        term = Polynomial.one(nvars)
        for i in combo:
            term = term * Polynomial.variable(i, nvars)
        total = total + term
    return total


def restriction_coefficient_symfn(space: Space, nu, p: int) -> Polynomial:
    """Same coefficient via sum_k e_k(t_b) h_{p-k}(-t_a); cross-check only."""
    if space.lie_type != "A":
        raise InputError("restriction coefficients live on type A spaces")
    nu = validate_symbol(space, nu)
    N = space.n
    if p < 0 or p > N - space.m:
        return Polynomial.zero(N)
    if p == 0:
        return Polynomial.one(N)
    inst = restriction_instance(space, nu, p)
    total = Polynomial.zero(N)
    for k in range(p + 1):
        sign = -1 if (p - k) % 2 else 1
        total = total + _elementary(inst.b, k, N) * _complete(inst.a, p - k, N) * sign
    return total


def schur_identity_check(xs: Sequence, ys: Sequence) -> bool:
    """Verify the partial-fraction identity behind the subword formula.

    xs must be pairwise distinct; p = len(ys) - len(xs) + 1 >= 0.  Both
    sides are evaluated exactly over the rationals.
    """
    xs = [Fraction(x) for x in xs]
    ys = [Fraction(y) for y in ys]
    r = len(xs)
    p = len(ys) - r + 1
    if p < 0:
        raise InputError("need len(ys) >= len(xs) - 1")
    if len(set(xs)) != r:
        raise InputError("x values must be pairwise distinct")
    lhs = Fraction(0)
    for j in range(r):
        num = Fraction(1)
        for y in ys:
            num *= y - xs[j]
        den = Fraction(1)
        for i in range(r):
            if i != j:
                den *= xs[i] - xs[j]
        lhs += num / den
    rhs = Fraction(0)
    for cs in combinations(range(1, p + r), p):
        term = Fraction(1)
        for i, c in enumerate(cs):
            term *= ys[c - 1] - xs[c - i - 1]
        rhs += term
    return lhs == rhs
