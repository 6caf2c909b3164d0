"""Equivariant Pieri structure coefficients for the classical Grassmannians.

The coefficient N^mu_{lambda,p} is the coefficient of the Schubert class of
mu in the product of the class of lambda with the degree-p special Schubert
class, in torus-equivariant cohomology.  Every coefficient is computed
exactly, as an integer polynomial in the torus weights t_1..t_n (t_1..t_N in
type A), by reducing to restriction coefficients of ordinary Grassmannians:

* type A: the coefficient *is* a restriction coefficient N^nu_{nu,p'} on
  Gr(m', N) read off the cut diagram of the pair (lambda, mu);
* types B/C/D, generic case: a sum over subsets I of the bookkeeping columns
  of specialized restriction coefficients F(N^{nu_I}_{nu_I,p'}), where the
  specialization F folds the N ambient weights onto the n torus weights
  (t_j -> t_j for j <= n, t_j -> -t_{N+1-j} above the fold; type B also
  kills the middle weight);
* type B, high degree without bookkeeping columns: one even-dimensional
  restriction coefficient, specialized and halved exactly;
* type D, high degree without bookkeeping columns: a restriction coefficient
  of an even orthogonal Grassmannian, evaluated by localization.  On the
  maximal space this value is sensitive to the two families of maximal
  isotropic subspaces; see gkm.type_d_restriction for the family handling.

In type D at the critical degree p = n - m there is a second special class,
attached to the opposite family of maximal isotropic subspaces.  Its
coefficients (the "tilde" variant) are obtained by swapping the letters
n <-> n+1 in lambda and mu and twisting the result by t_n -> -t_n.

The subset terms of the sum branch are independent; they may be evaluated by
a thread pool (``threads`` argument or the EQPIERI_THREADS environment
variable) and are always reduced in subset order, so results are
byte-for-byte identical at any thread count.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from .diagram import PieriDiagram, arrow, build, iter_subsets
from .errors import ConsistencyError, InputError
from .gkm import type_d_restriction
from .polyring import Polynomial, PositivityCertificate, RootBasis, root_positivity_certificate
from .restrict_a import restriction_coefficient
from .schubert import (
    Space,
    Symbol,
    codim,
    enumerate_symbols,
    pieri_bound,
    special_symbol,
    validate_symbol,
)


def specialization_images(space: Space) -> List[Polynomial]:
    """Images of the N ambient weights under the folding specialization.

    t_j -> t_j for j <= n and t_j -> -t_{N+1-j} for j above the fold; in
    type B the middle weight t_{n+1} is sent to zero.
    """
    if space.lie_type == "A":
        raise InputError("type A coefficients are never specialized")
    n, N = space.n, space.ambient
    images: List[Polynomial] = []
    for j in range(1, N + 1):
        if j <= n:
            images.append(Polynomial.variable(j, n))
        elif space.lie_type == "B" and j == n + 1:
            images.append(Polynomial.zero(n))
        else:
            images.append(-Polynomial.variable(N + 1 - j, n))
    return images


def family_twist_images(n: int) -> List[Polynomial]:
    """t_n -> -t_n, the torus action of the outer symmetry in type D."""
    images = [Polynomial.variable(i, n) for i in range(1, n)]
    images.append(-Polynomial.variable(n, n))
    return images


def swap_wall_letters(space: Space, sym: Sequence[int]) -> Symbol:
    """Exchange the letters n and n+1 of a type D symbol."""
    n = space.n
    flipped = [n + 1 if c == n else n if c == n + 1 else c for c in sym]
    return tuple(sorted(flipped))


@dataclass(frozen=True)
class PieriTerm:
    """One unspecialized restriction coefficient feeding the final value."""

    subset: Optional[Tuple[int, ...]]
    unspecialized: Polynomial

    def to_json_dict(self) -> dict:
        return {
            "I": None if self.subset is None else list(self.subset),
            "unspecialized": self.unspecialized.to_json_dict(),
        }


@dataclass
class PieriComputation:
    """A coefficient together with how it was assembled."""

    space: Space
    lam: Symbol
    mu: Symbol
    p: int
    tilde: bool
    diagram: Optional[PieriDiagram]
    terms: List[PieriTerm]
    value: Polynomial


def _thread_count(threads: Optional[int]) -> int:
    if threads is not None:
        count = int(threads)
    else:
        count = int(os.environ.get("EQPIERI_THREADS", "1") or "1")
    if count < 1:
        raise InputError("the thread count must be at least 1")
    return count


def compute_pieri(
    space: Space,
    lam: Sequence[int],
    mu: Sequence[int],
    p: int,
    *,
    chat: Optional[int] = None,
    pivot: Optional[Sequence[int]] = None,
    tilde: bool = False,
    threads: Optional[int] = None,
) -> PieriComputation:
    """N^mu_{lambda,p} with full provenance."""
    lam = validate_symbol(space, lam)
    mu = validate_symbol(space, mu)
    p = int(p)
    nvars = space.ambient if space.lie_type == "A" else space.n
    if p < 0 or p > pieri_bound(space):
        raise InputError(
            f"p = {p} is outside the special-class range [0, {pieri_bound(space)}]"
        )
    if tilde:
        if space.lie_type != "D" or p != space.n - space.m or p < 1:
            raise InputError(
                "the second special class exists only on even orthogonal "
                "spaces at p = n - m"
            )
        inner = compute_pieri(
            space,
            swap_wall_letters(space, lam),
            swap_wall_letters(space, mu),
            p,
            chat=chat,
            pivot=pivot,
            threads=threads,
        )
        value = inner.value.substitute(family_twist_images(space.n))
        return PieriComputation(
            space, lam, mu, p, True, inner.diagram, inner.terms, value
        )
    if p == 0:
        value = Polynomial.one(nvars) if lam == mu else Polynomial.zero(nvars)
        return PieriComputation(space, lam, mu, p, False, None, [], value)
    if not arrow(space, lam, mu) or codim(space, mu) > codim(space, lam) + p:
        return PieriComputation(
            space, lam, mu, p, False, None, [], Polynomial.zero(nvars)
        )
    d = build(space, lam, mu, p, chat=chat, pivot=pivot)
    N = space.ambient
    if d.branch == "restriction":
        inner_value = restriction_coefficient(Space("A", d.m_prime, N), d.nu, d.p_prime)
        terms = [PieriTerm(None, inner_value)]
        return PieriComputation(space, lam, mu, p, False, d, terms, inner_value)
    if d.branch == "sum":
        images = specialization_images(space)
        subsets = list(iter_subsets(d.sum_set))
        inner_space = Space("A", d.m_prime, N)

        def one_term(I):
            return restriction_coefficient(inner_space, d.nu_I(I), d.p_prime)

        count = _thread_count(threads)
        if count > 1 and len(subsets) > 1:
            with ThreadPoolExecutor(max_workers=count) as pool:
                inner_values = list(pool.map(one_term, subsets))
        else:
            inner_values = [one_term(I) for I in subsets]
        terms = [PieriTerm(I, v) for I, v in zip(subsets, inner_values)]
        value = Polynomial.zero(space.n)
        for v in inner_values:
            value = value + v.substitute(images)
        return PieriComputation(space, lam, mu, p, False, d, terms, value)
    if d.branch == "halving":
        inner_space = Space("A", d.m_prime + 1, N)
        inner_value = restriction_coefficient(inner_space, d.nu_plus(), d.p_prime)
        specialized = inner_value.substitute(specialization_images(space))
        value = specialized.try_divide(Polynomial.constant(2, space.n))
        if value is None:
            raise ConsistencyError(
                "the halving branch produced an odd polynomial for "
                f"lambda={list(lam)}, mu={list(mu)}, p={p}"
            )
        terms = [PieriTerm(None, inner_value)]
        return PieriComputation(space, lam, mu, p, False, d, terms, value)
    if d.branch == "orthogonal_restriction":
        inner_space = Space("D", d.m_prime, space.n)
        value = type_d_restriction(inner_space, d.nu, d.p_prime)
        return PieriComputation(space, lam, mu, p, False, d, [], value)
    raise ConsistencyError(f"unknown reduction branch {d.branch!r}")


def pieri_coefficient(
    space: Space,
    lam: Sequence[int],
    mu: Sequence[int],
    p: int,
    *,
    chat: Optional[int] = None,
    pivot: Optional[Sequence[int]] = None,
    tilde: bool = False,
    threads: Optional[int] = None,
) -> Polynomial:
    """The structure coefficient N^mu_{lambda,p}, an exact polynomial."""
    return compute_pieri(
        space, lam, mu, p, chat=chat, pivot=pivot, tilde=tilde, threads=threads
    ).value


def pieri_expansion(
    space: Space,
    lam: Sequence[int],
    p: int,
    *,
    chat: Optional[int] = None,
    pivot: Optional[Sequence[int]] = None,
    tilde: bool = False,
    threads: Optional[int] = None,
) -> Dict[Symbol, Polynomial]:
    """All nonzero coefficients of the product with the special class."""
    lam = validate_symbol(space, lam)
    out: Dict[Symbol, Polynomial] = {}
    for mu in enumerate_symbols(space):
        value = pieri_coefficient(
            space, lam, mu, p, chat=chat, pivot=pivot, tilde=tilde, threads=threads
        )
        if not value.is_zero:
            out[mu] = value
    return out


def positivity_certificate(space: Space, value: Polynomial) -> PositivityCertificate:
    """Certify Graham positivity of a coefficient for this space's root data."""
    rank = space.ambient if space.lie_type == "A" else space.n
    return root_positivity_certificate(value, RootBasis(space.lie_type, rank))
