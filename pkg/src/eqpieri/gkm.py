"""Fixed-point localization oracle for Schubert structure constants.

This module is deliberately independent of the Pieri machinery: it knows
nothing about cuts, reduction diagrams, or specialization maps.  It
computes restrictions of Schubert classes to torus fixed points from
reduced words in the Weyl group, and extracts structure constants by
triangular expansion over the fixed-point lattice.  Agreement between the
two pipelines is therefore meaningful evidence that both are right.

Conventions.  Weyl group elements are signed permutations in one-line
notation: w[i-1] = w(epsilon_i), a signed index (type A never uses
signs).  Multiplication composes functions, and right multiplication by
the simple reflection s_i edits positions, so descents are read off the
one-line word.  A Schubert symbol maps to the minimal coset
representative u_lam whose first m letters are the (signed) letters of
the symbol; restrictions use the twisted representative w0 * u_lam, and
the final substitution t_i -> w0(t_i) returns everything to the usual
torus coordinates.  The class [X_mu]^T restricted to the fixed point nu
is then the sum, over reduced subwords of a fixed reduced word of
(the representative of) nu that multiply out to (the representative of)
mu, of the products of the inversion roots met along the way.

These restrictions satisfy, and are tested against, the standard
divisibility on curve-connected pairs of fixed points, and the structure
constants they produce are exact: every division in the triangular
expansion must come out polynomial, or a ConsistencyError is raised.
"""

from __future__ import annotations

from typing import Dict, List, Tuple

from .errors import ConsistencyError, InputError
from .polyring import Polynomial
from .schubert import (
    Space,
    Symbol,
    codim,
    enumerate_symbols,
    pieri_bound,
    preceq,
    special_symbol,
    type_of,
    validate_symbol,
)

Element = Tuple[int, ...]


# -- signed permutation arithmetic ------------------------------------------


def identity_element(rank: int) -> Element:
    return tuple(range(1, rank + 1))


def simple_indices(lie: str, rank: int) -> Tuple[int, ...]:
    return tuple(range(1, rank)) if lie == "A" else tuple(range(1, rank + 1))


def alpha_vector(lie: str, rank: int, i: int) -> Tuple[int, ...]:
    """Coefficients of the simple root alpha_i over epsilon_1..epsilon_rank."""
    if i < 1 or i > rank or (lie == "A" and i == rank):
        raise InputError(f"no simple root {i} in type {lie} rank {rank}")
    v = [0] * rank
    if i < rank:
        v[i - 1], v[i] = 1, -1
    elif lie == "B":
        v[rank - 1] = 1
    elif lie == "C":
        v[rank - 1] = 2
    else:  # D
        v[rank - 2] = 1
        v[rank - 1] = 1
    return tuple(v)


def apply_simple(w: Element, i: int, lie: str) -> Element:
    """w * s_i (right multiplication: edits positions)."""
    rank = len(w)
    out = list(w)
    if i < rank:
        out[i - 1], out[i] = out[i], out[i - 1]
    elif lie in ("B", "C"):
        out[rank - 1] = -out[rank - 1]
    elif lie == "D":
        out[rank - 2], out[rank - 1] = -out[rank - 1], -out[rank - 2]
    else:
        raise InputError(f"no simple reflection {i} in type A rank {rank}")
    return tuple(out)


def compose(u: Element, v: Element) -> Element:
    """(u v)(i) = u(v(i))."""
    out = []
    for vi in v:
        ui = u[abs(vi) - 1]
        out.append(ui if vi > 0 else -ui)
    return tuple(out)


def act_on_vector(w: Element, vec) -> Tuple[int, ...]:
    out = [0] * len(vec)
    for i, c in enumerate(vec):
        if c:
            wi = w[i]
            out[abs(wi) - 1] += c if wi > 0 else -c
    return tuple(out)


def vector_positive(vec) -> bool:
    for c in vec:
        if c:
            return c > 0
    return False


def right_ascent(w: Element, i: int, lie: str) -> bool:
    """Whether length(w s_i) > length(w)."""
    return vector_positive(act_on_vector(w, alpha_vector(lie, len(w), i)))


def reduced_word(w: Element, lie: str) -> Tuple[int, ...]:
    """Leftmost-descent reduced word; rejects invalid signed permutations."""
    rank = len(w)
    ident = identity_element(rank)
    word = []
    cur = w
    while cur != ident:
        for i in simple_indices(lie, rank):
            if not right_ascent(cur, i, lie):
                cur = apply_simple(cur, i, lie)
                word.append(i)
                break
        else:
            raise ConsistencyError(f"{w} has no descent yet is not the identity")
    word.reverse()
    return tuple(word)


def element_length(w: Element, lie: str) -> int:
    return len(reduced_word(w, lie))


def longest_element(lie: str, rank: int) -> Element:
    if lie == "A":
        return tuple(range(rank, 0, -1))
    if lie in ("B", "C") or rank % 2 == 0:
        return tuple(-i for i in range(1, rank + 1))
    return tuple(-i for i in range(1, rank)) + (rank,)


def bruhat_leq_elements(u: Element, v: Element, lie: str) -> bool:
    """u <= v via subword reachability along a reduced word of v."""
    target_len = element_length(u, lie)
    reachable = {identity_element(len(u)): 0}
    for i in reduced_word(v, lie):
        new = dict(reachable)
        for w, lw in reachable.items():
            if lw < target_len and right_ascent(w, i, lie):
                new[apply_simple(w, i, lie)] = lw + 1
        reachable = new
        if u in reachable:
            return True
    return u in reachable


# -- symbols and coset representatives ---------------------------------------


def symbol_to_weyl(space: Space, lam) -> Element:
    """Minimal coset representative attached to a Schubert symbol."""
    lam = validate_symbol(space, lam)
    t, n, N = space.lie_type, space.n, space.ambient
    if t == "A":
        rest = tuple(c for c in range(1, N + 1) if c not in lam)
        return tuple(lam) + rest
    letters = []
    for c in lam:
        if c <= n:
            letters.append(c)
        else:
            letters.append(-(N + 1 - c))
    used = {abs(x) for x in letters}
    completion = [c for c in range(1, n + 1) if c not in used]
    if t == "D" and sum(1 for x in letters if x < 0) % 2:
        if not completion:
            raise InputError(
                "symbol lies on the opposite component of the maximal space"
            )
        completion[-1] = -completion[-1]
    return tuple(letters) + tuple(completion)


def parabolic_indices(space: Space) -> Tuple[int, ...]:
    """Simple reflections generating the stabilizer subgroup."""
    t, m, n = space.lie_type, space.m, space.n
    rank = space.ambient if t == "A" else n
    if t == "D" and m == n:
        excluded = {n}
    elif t == "D" and m == n - 1:
        excluded = {n - 1, n}
    else:
        excluded = {m}
    return tuple(i for i in simple_indices(t, rank) if i not in excluded)


def minimal_representative(w: Element, p_inds, lie: str) -> Element:
    done = False
    while not done:
        done = True
        for i in p_inds:
            if not right_ascent(w, i, lie):
                w = apply_simple(w, i, lie)
                done = False
                break
    return w


def weight_of_symbol(space: Space, sym) -> Tuple[int, ...]:
    """Torus weight of the fixed point: sum of the weights of its lines."""
    sym = validate_symbol(space, sym)
    n = space.n if space.lie_type != "A" else space.ambient
    N = space.ambient
    out = [0] * n
    for c in sym:
        if space.lie_type == "A" or c <= n:
            out[c - 1] += 1
        else:
            out[N - c] -= 1
    return tuple(out)


def fixed_point_count(space: Space) -> int:
    """Orbit size of the base coordinate plane; independent of symbols."""
    if space.m == 0:
        return 1
    lie = space.lie_type
    rank = space.ambient if lie == "A" else space.n
    gens = [apply_simple(identity_element(rank), i, lie) for i in simple_indices(lie, rank)]
    base = frozenset(range(1, space.m + 1))
    seen = {base}
    frontier = [base]
    while frontier:
        state = frontier.pop()
        for g in gens:
            image = frozenset(
                (g[abs(x) - 1] if x > 0 else -g[abs(x) - 1]) for x in state
            )
            if image not in seen:
                seen.add(image)
                frontier.append(image)
    return len(seen)


# -- restrictions -------------------------------------------------------------


def _phi_images(w0: Element, nvars: int) -> List[Polynomial]:
    images = []
    for i in range(nvars):
        coeffs = [0] * nvars
        coeffs[abs(w0[i]) - 1] = 1 if w0[i] > 0 else -1
        images.append(Polynomial.linear(coeffs))
    return images


def _word_with_roots(v: Element, lie: str, nvars: int):
    """Reduced word of v together with the inversion root before each letter."""
    word = reduced_word(v, lie)
    prefix = identity_element(len(v))
    out = []
    for i in word:
        vec = act_on_vector(prefix, alpha_vector(lie, len(v), i))
        if not vector_positive(vec):
            raise ConsistencyError("prefix root of a reduced word must be positive")
        out.append((i, Polynomial.linear(vec)))
        prefix = apply_simple(prefix, i, lie)
    return out


def fixed_point_restriction(space: Space, mu, nu) -> Polynomial:
    """[X_mu]^T restricted to the fixed point of nu, computed standalone.

    A pruned subword sum: only partial products of length at most
    length(w_mu) are carried.
    """
    lie = space.lie_type
    nvars = space.ambient if lie == "A" else space.n
    w0 = longest_element(lie, nvars)
    p_inds = parabolic_indices(space)
    w = minimal_representative(compose(w0, symbol_to_weyl(space, mu)), p_inds, lie)
    v = minimal_representative(compose(w0, symbol_to_weyl(space, nu)), p_inds, lie)
    target_len = element_length(w, lie)
    dp: Dict[Element, Polynomial] = {identity_element(nvars): Polynomial.one(nvars)}
    lengths = {identity_element(nvars): 0}
    for i, beta in _word_with_roots(v, lie, nvars):
        additions = {}
        for u, val in dp.items():
            lu = lengths[u]
            if lu >= target_len or not right_ascent(u, i, lie):
                continue
            u2 = apply_simple(u, i, lie)
            if lu + 1 == target_len and u2 != w:
                continue
            additions[u2] = additions.get(u2, Polynomial.zero(nvars)) + val * beta
            lengths[u2] = lu + 1
        for u2, inc in additions.items():
            dp[u2] = dp.get(u2, Polynomial.zero(nvars)) + inc
    raw = dp.get(w, Polynomial.zero(nvars))
    return raw.substitute(_phi_images(w0, nvars))


def type_d_restriction(space: Space, nu, q: int) -> Polynomial:
    """N^nu_{nu,q} on an even orthogonal space, straight from localization.

    For m < n this is the restriction of the degree-q special class to the
    fixed point of nu.  On the maximal space OG(n,2n) the special variety
    meets only one of the two families of maximal isotropic subspaces, so the
    value depends on the component of nu:

    * q = 0: the coefficient is the intersection number of P(V_nu) with the
      ruling P(E_n) on the quadric of dimension 2(n-1) -- two maximal
      isotropic spaces meet in a point exactly when their intersection has
      odd dimension, i.e. #(nu cap [1,n]) is odd.
    * q >= 1: restrict the incidence class of nu's own component.  Compute
      with the family-1 representative of the special symbol; for a family-2
      point, swap the letters n <-> n+1 (moving to family 1), restrict there,
      and twist back by t_n -> -t_n.
    """
    if space.lie_type != "D":
        raise InputError("this restriction shortcut is for even orthogonal spaces")
    nvars = space.n
    if q < 0:
        return Polynomial.zero(nvars)
    n = space.n
    nu = validate_symbol(space, nu)
    if q == 0:
        if space.m == n:
            odd = len([c for c in nu if c <= n]) % 2 == 1
            return Polynomial.one(nvars) if odd else Polynomial.zero(nvars)
        return Polynomial.one(nvars)
    if space.m == 0 or q > pieri_bound(space):
        return Polynomial.zero(nvars)
    s_q = special_symbol(space, q)[0]
    if space.m < n:
        return fixed_point_restriction(space, s_q, nu)

    def swap(sym):
        flipped = [n + 1 if c == n else n if c == n + 1 else c for c in sym]
        return tuple(sorted(flipped))

    if type_of(space, s_q) != 1:
        s_q = swap(s_q)
    if type_of(space, nu) == 1:
        return fixed_point_restriction(space, s_q, nu)
    raw = fixed_point_restriction(space, s_q, swap(nu))
    twist = [Polynomial.variable(i, nvars) for i in range(1, nvars)]
    twist.append(-Polynomial.variable(nvars, nvars))
    return raw.substitute(twist)


class GkmEngine:
    """Cached restriction table and structure constants for one space."""

    def __init__(self, space: Space):
        self.space = space
        self.lie = space.lie_type
        self.nvars = space.ambient if self.lie == "A" else space.n
        self.w0 = longest_element(self.lie, self.nvars)
        self.p_inds = parabolic_indices(space)
        self.symbols = enumerate_symbols(space)
        self._phi = _phi_images(self.w0, self.nvars)
        self._reps: Dict[Symbol, Element] = {}
        self._columns: Dict[Symbol, Dict[Element, Polynomial]] = {}
        self._vectors: Dict[Symbol, Dict[Symbol, Polynomial]] = {}
        self._expansions: Dict[Tuple[Symbol, Symbol], Dict[Symbol, Polynomial]] = {}

    def representative(self, sym) -> Element:
        sym = validate_symbol(self.space, sym)
        if sym not in self._reps:
            u = symbol_to_weyl(self.space, sym)
            self._reps[sym] = minimal_representative(
                compose(self.w0, u), self.p_inds, self.lie
            )
        return self._reps[sym]

    def _column(self, nu) -> Dict[Element, Polynomial]:
        """Raw subword sums at the fixed point nu, for every class at once."""
        nu = validate_symbol(self.space, nu)
        if nu not in self._columns:
            v = self.representative(nu)
            dp = {identity_element(self.nvars): Polynomial.one(self.nvars)}
            for i, beta in _word_with_roots(v, self.lie, self.nvars):
                additions = {}
                for u, val in dp.items():
                    if right_ascent(u, i, self.lie):
                        u2 = apply_simple(u, i, self.lie)
                        additions[u2] = additions.get(
                            u2, Polynomial.zero(self.nvars)
                        ) + val * beta
                for u2, inc in additions.items():
                    dp[u2] = dp.get(u2, Polynomial.zero(self.nvars)) + inc
            self._columns[nu] = dp
        return self._columns[nu]

    def restriction(self, mu, nu) -> Polynomial:
        raw = self._column(nu).get(
            self.representative(mu), Polynomial.zero(self.nvars)
        )
        return raw.substitute(self._phi)

    def restriction_vector(self, mu) -> Dict[Symbol, Polynomial]:
        mu = validate_symbol(self.space, mu)
        if mu not in self._vectors:
            self._vectors[mu] = {
                nu: self.restriction(mu, nu) for nu in self.symbols
            }
        return self._vectors[mu]

    def product_expansion(self, lam, sigma) -> Dict[Symbol, Polynomial]:
        """[X_lam] * [X_sigma] = sum of c^nu [X_nu]: all coefficients."""
        lam = validate_symbol(self.space, lam)
        sigma = validate_symbol(self.space, sigma)
        key = (lam, sigma)
        if key in self._expansions:
            return self._expansions[key]
        space = self.space
        bound = codim(space, lam) + codim(space, sigma)
        candidates = [
            s
            for s in self.symbols
            if codim(space, s) <= bound
            and preceq(space, s, lam)
            and preceq(space, s, sigma)
        ]
        vec_l = self.restriction_vector(lam)
        vec_s = self.restriction_vector(sigma)
        h = {s: vec_l[s] * vec_s[s] for s in candidates}
        out: Dict[Symbol, Polynomial] = {}
        for s in candidates:  # ascending (codim, lex)
            val = h[s]
            if val.is_zero:
                out[s] = val
                continue
            c = val.try_divide(self.restriction(s, s))
            if c is None:
                raise ConsistencyError(
                    f"inexact division in the expansion of "
                    f"[{list(lam)}]*[{list(sigma)}] at {list(s)}"
                )
            out[s] = c
            vec = self.restriction_vector(s)
            for s2 in candidates:
                h[s2] = h[s2] - c * vec[s2]
        self._expansions[key] = out
        return out

    def product_coefficient(self, lam, sigma, mu) -> Polynomial:
        mu = validate_symbol(self.space, mu)
        expansion = self.product_expansion(lam, sigma)
        return expansion.get(mu, Polynomial.zero(self.nvars))

    def pieri_coefficient(self, lam, p: int, mu) -> Polynomial:
        """N^mu_{lam,p} by localization only."""
        sigma = special_symbol(self.space, p)[0]
        return self.product_coefficient(lam, sigma, mu)


def oracle_structure_constant(space: Space, lam, sigma, mu) -> Polynomial:
    return GkmEngine(space).product_coefficient(lam, sigma, mu)
