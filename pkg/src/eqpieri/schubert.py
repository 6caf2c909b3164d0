"""Grassmannians of classical type and their Schubert symbols.

The four families, with ``n`` the rank of the acting group:

  A: Gr(m, n)       all m-planes in C^n; ambient dimension N = n
  B: OG(m, 2n+1)    isotropic m-planes, odd orthogonal; N = 2n+1
  C: SG(m, 2n)      isotropic m-planes, symplectic; N = 2n
  D: OG(m, 2n)      isotropic m-planes, even orthogonal; N = 2n

A Schubert symbol is a strictly increasing tuple of m integers in [1, N].
Outside type A the isotropy condition forbids lambda_i + lambda_j = N + 1
for all i <= j (in particular the entry n+1 never occurs in type B).  Each
symbol indexes one T-fixed point and one Schubert variety; codim() returns
the codimension of that variety, so the fundamental class has codim 0 and
the point class has codim equal to the dimension of the space.

In type D the even orthogonal Grassmannian OG(n, 2n) of maximal isotropic
planes has two connected components; symbols are taken at face value and
enumerate both, with type_of() separating them (type 1 vs type 2).  The
partial order preceq() refines the componentwise order leq() by a type
condition and agrees with leq() in types A, B, C.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Sequence, Tuple

from .errors import InputError

Symbol = Tuple[int, ...]


@dataclass(frozen=True)
class Space:
    """One Grassmannian, determined by lie_type, m, and the rank n."""

    lie_type: str
    m: int
    n: int

    def __post_init__(self):
        if self.lie_type not in ("A", "B", "C", "D"):
            raise InputError(f"unknown Lie type {self.lie_type!r}")
        if self.n < 1:
            raise InputError("n must be at least 1")
        if self.lie_type == "D" and self.n < 2:
            raise InputError("even orthogonal spaces need n >= 2")
        if not 0 <= self.m <= self.n:
            raise InputError(
                f"m = {self.m} outside [0, {self.n}] for type {self.lie_type}"
            )

    @property
    def ambient(self) -> int:
        """N: symbols take entries in [1, N]."""
        if self.lie_type == "A":
            return self.n
        if self.lie_type == "B":
            return 2 * self.n + 1
        return 2 * self.n

    @property
    def dimension(self) -> int:
        m, n = self.m, self.n
        if self.lie_type == "A":
            return m * (n - m)
        if self.lie_type == "D":
            return 2 * m * (n - m) + m * (m - 1) // 2
        return 2 * m * (n - m) + m * (m + 1) // 2

    def name(self) -> str:
        if self.lie_type == "A":
            return f"Gr({self.m},{self.n})"
        if self.lie_type == "C":
            return f"SG({self.m},{2 * self.n})"
        return f"OG({self.m},{self.ambient})"

    def __str__(self):
        return f"{self.name()} [type {self.lie_type}]"


def validate_symbol(space: Space, lam: Sequence[int]) -> Symbol:
    """Normalize to a tuple and reject anything that is not a symbol."""
    lam = tuple(int(x) for x in lam)
    if len(lam) != space.m:
        raise InputError(
            f"symbol {list(lam)} has {len(lam)} parts, expected m = {space.m}"
        )
    N = space.ambient
    for j, x in enumerate(lam, 1):
        if not 1 <= x <= N:
            raise InputError(f"lambda_{j} = {x} outside [1, {N}]")
    for j in range(1, len(lam)):
        if lam[j - 1] >= lam[j]:
            raise InputError(
                f"lambda_{j} = {lam[j - 1]} not below lambda_{j + 1} = {lam[j]}"
            )
    if space.lie_type != "A":
        for i in range(len(lam)):
            for j in range(i, len(lam)):
                if lam[i] + lam[j] == N + 1:
                    raise InputError(
                        f"lambda_{i + 1}+lambda_{j + 1} = {N + 1} violates isotropy"
                    )
    return lam


def codim(space: Space, lam: Sequence[int]) -> int:
    """Codimension of the Schubert variety indexed by lam."""
    lam = validate_symbol(space, lam)
    N = space.ambient
    total = 0
    for j in range(1, len(lam) + 1):
        x = lam[j - 1]
        if space.lie_type == "A":
            total += x - j
        elif space.lie_type == "C":
            total += x - j - sum(1 for i in range(1, j) if lam[i - 1] + x > N + 1)
        else:
            # B and D count the diagonal pair i = j as well
            total += x - j - sum(1 for i in range(1, j + 1) if lam[i - 1] + x > N + 1)
    return space.dimension - total


def leq(space: Space, mu: Sequence[int], lam: Sequence[int]) -> bool:
    """Componentwise comparison mu_j <= lam_j (containment of varieties)."""
    mu = validate_symbol(space, mu)
    lam = validate_symbol(space, lam)
    return all(a <= b for a, b in zip(mu, lam))


def closure(space: Space, lam: Sequence[int]) -> frozenset:
    """The symbol together with the mirror N+1-c of each entry."""
    N = space.ambient
    return frozenset(lam) | frozenset(N + 1 - x for x in lam)


def type_of(space: Space, lam: Sequence[int]) -> int:
    """Type of a symbol in an even orthogonal space: 0, 1, or 2.

    Type 0 means the symbol is insensitive to the component choice; types 1
    and 2 distinguish the two families of maximal isotropic subspaces.
    """
    if space.lie_type != "D":
        raise InputError("type classification only applies to even orthogonal spaces")
    lam = validate_symbol(space, lam)
    n = space.n
    if n not in closure(space, lam):
        return 0
    missing = sum(1 for c in range(1, n + 1) if c not in lam)
    return 1 if missing % 2 == 0 else 2


def preceq(space: Space, mu: Sequence[int], lam: Sequence[int]) -> bool:
    """The containment order; refines leq by a type condition in type D."""
    if not leq(space, mu, lam):
        return False
    if space.lie_type != "D":
        return True
    mu = validate_symbol(space, mu)
    lam = validate_symbol(space, lam)
    n = space.n
    common = closure(space, lam) & closure(space, mu)
    for c in range(1, n):
        if all(x in common for x in range(c + 1, n + 1)) and sum(
            1 for x in lam if x <= c
        ) == sum(1 for x in mu if x <= c):
            return type_of(space, lam) == type_of(space, mu)
    return True


def pieri_bound(space: Space) -> int:
    """Largest p for which the special class with codim p exists."""
    if space.m == 0:
        return 0
    if space.lie_type == "A":
        return space.n - space.m
    if space.lie_type == "D":
        return 2 * space.n - space.m - 1
    return 2 * space.n - space.m


def special_symbol(space: Space, p: int) -> Tuple[Symbol, int]:
    """The symbol of the codimension-p special class, plus its marker n_p.

    n_p is the smallest entry; the remaining entries sit at the top of
    [1, N].  p = 0 gives the fundamental class.
    """
    if not 0 <= p <= pieri_bound(space):
        raise InputError(
            f"p = {p} outside [0, {pieri_bound(space)}] for {space.name()}"
        )
    m, n, N = space.m, space.n, space.ambient
    if m == 0:
        return (), 0
    if space.lie_type == "A":
        np_ = N + 1 - m - p
    elif space.lie_type == "C":
        np_ = 2 * n + 1 - m - p
    elif space.lie_type == "B":
        np_ = 2 * n + 2 - m - p if p <= n - m else 2 * n + 1 - m - p
    else:
        np_ = 2 * n + 1 - m - p if p < n - m else 2 * n - m - p
    if space.lie_type == "A" or np_ > m - 1:
        sym = (np_,) + tuple(range(N + 2 - m, N + 1))
    else:
        tail = [x for x in range(N + 1 - m, N + 1) if x != N + 1 - np_]
        sym = tuple(sorted([np_] + tail))
    return validate_symbol(space, sym), np_


def enumerate_symbols(space: Space):
    """All symbols, sorted by (codim, lexicographic), fundamental class first."""
    N = space.ambient
    out = []
    for combo in combinations(range(1, N + 1), space.m):
        if space.lie_type != "A":
            k = len(combo)
            if any(
                combo[i] + combo[j] == N + 1
                for i in range(k)
                for j in range(i, k)
            ):
                continue
        out.append(combo)
    out.sort(key=lambda s: (codim(space, s), s))
    return out
