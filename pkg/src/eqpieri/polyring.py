"""Exact sparse polynomials over the integers, plus positivity certificates.

A polynomial is stored as a dict mapping exponent vectors (tuples of length
``nvars``) to nonzero integer coefficients.  All arithmetic is exact integer
arithmetic; nothing here ever touches floats.  Variables are positional and
1-based in printed output: the equivariant parameters of an ambient torus.
Callers choose the display prefix ("t" for torus parameters of the symplectic
or orthogonal group, "s" for the larger general-linear torus upstairs).

Term order everywhere (iteration, serialization, printing) is graded
lexicographic with the largest term first, so output is deterministic.

The second half of the module certifies Graham positivity: a class is
expanded in the basis of negated simple roots v_i = -alpha_i and accepted
only if every coefficient is a nonnegative integer.  For the types with
short or multiplied roots (C and D) the change of basis has determinant a
power of 2, so we clear denominators by scaling the input by 2^degree and
check divisibility instead of leaving the integers.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Optional, Sequence

from .errors import ConsistencyError, InputError


def _term_key(exp):
    # graded lex: compare total degree first, then the exponent vector
    return (sum(exp), exp)


class Polynomial:
    """Immutable-by-convention sparse polynomial with int coefficients."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: Optional[Mapping[tuple, int]] = None):
        if nvars < 0:
            raise InputError("nvars must be nonnegative")
        clean = {}
        if terms:
            for exp, coeff in terms.items():
                coeff = int(coeff)
                if coeff == 0:
                    continue
                exp = tuple(int(e) for e in exp)
                if len(exp) != nvars:
                    raise InputError(
                        f"exponent vector {exp} has length {len(exp)}, expected {nvars}"
                    )
                if any(e < 0 for e in exp):
                    raise InputError(f"negative exponent in {exp}")
                clean[exp] = coeff
        self.nvars = nvars
        self.terms = clean

    # -- constructors -----------------------------------------------------

    @classmethod
    def zero(cls, nvars: int) -> "Polynomial":
        return cls(nvars, {})

    @classmethod
    def constant(cls, value: int, nvars: int) -> "Polynomial":
        return cls(nvars, {(0,) * nvars: value})

    @classmethod
    def one(cls, nvars: int) -> "Polynomial":
        return cls.constant(1, nvars)

    @classmethod
    def variable(cls, index: int, nvars: int) -> "Polynomial":
        """The variable with 1-based position ``index``."""
        if not 1 <= index <= nvars:
            raise InputError(f"variable index {index} out of range 1..{nvars}")
        exp = tuple(1 if i == index - 1 else 0 for i in range(nvars))
        return cls(nvars, {exp: 1})

    @classmethod
    def linear(cls, coeffs: Sequence[int]) -> "Polynomial":
        """sum(coeffs[i] * x_{i+1})."""
        nvars = len(coeffs)
        terms = {}
        for i, c in enumerate(coeffs):
            if c:
                exp = tuple(1 if j == i else 0 for j in range(nvars))
                terms[exp] = c
        return cls(nvars, terms)

    # -- basic structure ---------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(sum(exp) for exp in self.terms)

    def is_homogeneous(self) -> bool:
        degrees = {sum(exp) for exp in self.terms}
        return len(degrees) <= 1

    def constant_term(self) -> int:
        return self.terms.get((0,) * self.nvars, 0)

    def sorted_terms(self):
        """Terms as (exp, coeff) pairs, leading term first."""
        return [
            (exp, self.terms[exp])
            for exp in sorted(self.terms, key=_term_key, reverse=True)
        ]

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    # -- arithmetic --------------------------------------------------------

    def _require_same_ring(self, other: "Polynomial"):
        if self.nvars != other.nvars:
            raise InputError(
                f"mixed variable counts: {self.nvars} vs {other.nvars}"
            )

    def __add__(self, other):
        if isinstance(other, int):
            other = Polynomial.constant(other, self.nvars)
        if not isinstance(other, Polynomial):
            return NotImplemented
        self._require_same_ring(other)
        terms = dict(self.terms)
        for exp, coeff in other.terms.items():
            new = terms.get(exp, 0) + coeff
            if new:
                terms[exp] = new
            else:
                terms.pop(exp, None)
        out = Polynomial.__new__(Polynomial)
        out.nvars = self.nvars
        out.terms = terms
        return out

    __radd__ = __add__

    def __neg__(self):
        out = Polynomial.__new__(Polynomial)
        out.nvars = self.nvars
        out.terms = {exp: -c for exp, c in self.terms.items()}
        return out

    def __sub__(self, other):
        if isinstance(other, int):
            other = Polynomial.constant(other, self.nvars)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            if other == 0:
                return Polynomial.zero(self.nvars)
            out = Polynomial.__new__(Polynomial)
            out.nvars = self.nvars
            out.terms = {exp: c * other for exp, c in self.terms.items()}
            return out
        if not isinstance(other, Polynomial):
            return NotImplemented
        self._require_same_ring(other)
        terms = {}
        for exp1, c1 in self.terms.items():
            for exp2, c2 in other.terms.items():
                exp = tuple(a + b for a, b in zip(exp1, exp2))
                new = terms.get(exp, 0) + c1 * c2
                if new:
                    terms[exp] = new
                else:
                    del terms[exp]
        out = Polynomial.__new__(Polynomial)
        out.nvars = self.nvars
        out.terms = terms
        return out

    __rmul__ = __mul__

    def __pow__(self, power: int):
        if power < 0:
            raise InputError("negative power")
        result = Polynomial.one(self.nvars)
        base = self
        while power:
            if power & 1:
                result = result * base
            base = base * base
            power >>= 1
        return result

    # -- substitution and evaluation ----------------------------------------

    def substitute(self, images: Sequence["Polynomial"]) -> "Polynomial":
        """Replace variable i by images[i] (all images in a common ring)."""
        if len(images) != self.nvars:
            raise InputError(
                f"need {self.nvars} images, got {len(images)}"
            )
        if self.nvars == 0:
            return self
        target = images[0].nvars
        for img in images:
            if img.nvars != target:
                raise InputError("images live in different rings")
        # cache successive powers of each image
        powers = [[Polynomial.one(target)] for _ in range(self.nvars)]
        result = Polynomial.zero(target)
        for exp, coeff in self.terms.items():
            term = Polynomial.constant(coeff, target)
            for i, e in enumerate(exp):
                while len(powers[i]) <= e:
                    powers[i].append(powers[i][-1] * images[i])
                term = term * powers[i][e]
            result = result + term
        return result

    def evaluate(self, values: Sequence):
        """Evaluate at a point (ints or Fractions); exact."""
        if len(values) != self.nvars:
            raise InputError(f"need {self.nvars} values, got {len(values)}")
        total = 0
        for exp, coeff in self.terms.items():
            term = coeff
            for v, e in zip(values, exp):
                if e:
                    term = term * v**e
            total = total + term
        return total

    # -- division ------------------------------------------------------------

    def try_divide(self, divisor: "Polynomial") -> Optional["Polynomial"]:
        """self / divisor if the quotient lies in Z[x]; None otherwise.

        Single-divisor monomial division, leading terms in graded lex order.
        Each step cancels the current leading term, which strictly decreases,
        so the loop terminates; a zero remainder reconstructs self exactly.
        """
        self._require_same_ring(divisor)
        if divisor.is_zero:
            raise InputError("division by zero polynomial")
        if self.is_zero:
            return Polynomial.zero(self.nvars)
        dlead = max(divisor.terms, key=_term_key)
        dcoeff = divisor.terms[dlead]
        rem = dict(self.terms)
        quotient = {}
        while rem:
            lead = max(rem, key=_term_key)
            coeff = rem[lead]
            if coeff % dcoeff != 0:
                return None
            exp = tuple(a - b for a, b in zip(lead, dlead))
            if any(e < 0 for e in exp):
                return None
            qc = coeff // dcoeff
            quotient[exp] = quotient.get(exp, 0) + qc
            for dexp, dc in divisor.terms.items():
                e = tuple(a + b for a, b in zip(exp, dexp))
                new = rem.get(e, 0) - qc * dc
                if new:
                    rem[e] = new
                else:
                    rem.pop(e, None)
        return Polynomial(self.nvars, quotient)

    def divide_exact(self, divisor: "Polynomial", context: str = "") -> "Polynomial":
        quotient = self.try_divide(divisor)
        if quotient is None:
            raise ConsistencyError(
                f"inexact polynomial division{': ' + context if context else ''}"
            )
        return quotient

    # -- serialization and printing -------------------------------------------

    def to_json_dict(self) -> dict:
        return {
            "nvars": self.nvars,
            "terms": [
                {"coeff": coeff, "exp": list(exp)}
                for exp, coeff in self.sorted_terms()
            ],
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> "Polynomial":
        try:
            nvars = data["nvars"]
            terms = {tuple(t["exp"]): t["coeff"] for t in data["terms"]}
        except (KeyError, TypeError) as exc:
            raise InputError(f"malformed polynomial JSON: {exc}") from exc
        return cls(nvars, terms)

    def render(self, prefix: str = "t", names: Optional[Sequence[str]] = None) -> str:
        """Human-readable form, e.g. ``t2*t5 - t1*t2 - t1*t5 + t1^2``."""
        if not self.terms:
            return "0"
        if names is not None and len(names) != self.nvars:
            raise InputError("wrong number of variable names")
        parts = []
        for exp, coeff in self.sorted_terms():
            factors = []
            for i, e in enumerate(exp):
                if not e:
                    continue
                name = names[i] if names is not None else f"{prefix}{i + 1}"
                factors.append(name if e == 1 else f"{name}^{e}")
            mono = "*".join(factors)
            mag = abs(coeff)
            if not mono:
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{mag}*{mono}"
            if not parts:
                parts.append(body if coeff > 0 else f"-{body}")
            else:
                parts.append(("+ " if coeff > 0 else "- ") + body)
        return " ".join(parts)

    def __repr__(self):
        return f"Polynomial[{self.nvars}]({self.render()})"


# -- Graham positivity ---------------------------------------------------------
#
# For a root system of rank n we expand classes in v_i = -alpha_i:
#   A_n-1 on n torus parameters: alpha_i = t_i - t_(i+1), i = 1..n-1.
#       The t_i do not lie in the root span, so we adjoin a slack variable w
#       with t_i = w + v_1 + ... + v_(i-1); any appearance of w in the result
#       means the input was not a polynomial in the roots at all.
#   B_n: alpha_i = t_i - t_(i+1), alpha_n = t_n.  Inverts over Z.
#   C_n: alpha_n = 2 t_n, so only 2 t_i is an integer combination:
#       2 t_i = -(2 v_i + ... + 2 v_(n-1) + v_n).
#   D_n: alpha_(n-1) = t_(n-1) - t_n, alpha_n = t_(n-1) + t_n:
#       2 t_i = -(2 v_i + ... + 2 v_(n-2) + v_(n-1) + v_n) for i < n,
#       2 t_n = v_(n-1) - v_n.
# For C and D we substitute the images of 2 t_i, which multiplies a degree-d
# homogeneous input by 2^d, then demand divisibility by 2^d after checking
# signs.


@dataclass(frozen=True)
class RootBasis:
    """The simple-root data of one classical type at rank n."""

    lie_type: str
    n: int

    def __post_init__(self):
        if self.lie_type not in ("A", "B", "C", "D"):
            raise InputError(f"unknown Lie type {self.lie_type!r}")
        if self.n < 1:
            raise InputError("rank must be at least 1")
        if self.lie_type == "D" and self.n < 2:
            raise InputError("type D needs rank at least 2")

    @property
    def denominator_scale(self) -> int:
        return 2 if self.lie_type in ("C", "D") else 1

    @property
    def num_basis_vars(self) -> int:
        # type A uses v_1..v_(n-1) plus the slack variable w
        return self.n

    def basis_var_names(self):
        if self.lie_type == "A":
            return [f"v{i}" for i in range(1, self.n)] + ["w"]
        return [f"v{i}" for i in range(1, self.n + 1)]

    def scaled_t_images(self):
        """Images of denominator_scale * t_i as polynomials in the basis vars."""
        n = self.n
        k = self.num_basis_vars
        images = []
        if self.lie_type == "A":
            for i in range(1, n + 1):
                coeffs = [0] * k
                coeffs[k - 1] = 1  # w
                for j in range(1, i):
                    coeffs[j - 1] = 1
                images.append(Polynomial.linear(coeffs))
        elif self.lie_type == "B":
            for i in range(1, n + 1):
                coeffs = [0] * k
                for j in range(i, n + 1):
                    coeffs[j - 1] = -1
                images.append(Polynomial.linear(coeffs))
        elif self.lie_type == "C":
            for i in range(1, n + 1):
                coeffs = [0] * k
                for j in range(i, n):
                    coeffs[j - 1] = -2
                coeffs[n - 1] = -1
                images.append(Polynomial.linear(coeffs))
        else:  # D
            for i in range(1, n):
                coeffs = [0] * k
                for j in range(i, n - 1):
                    coeffs[j - 1] = -2
                coeffs[n - 2] = -1
                coeffs[n - 1] += -1
                images.append(Polynomial.linear(coeffs))
            coeffs = [0] * k
            coeffs[n - 2] = 1
            coeffs[n - 1] = -1
            images.append(Polynomial.linear(coeffs))
        return images

    def negated_simple_roots(self):
        """v_i = -alpha_i as polynomials in t_1..t_n (plus w = t_1 for A)."""
        n = self.n
        roots = []
        for i in range(1, n):
            coeffs = [0] * n
            coeffs[i - 1] = -1
            coeffs[i] = 1
            roots.append(Polynomial.linear(coeffs))
        if self.lie_type == "A":
            roots.append(Polynomial.variable(1, n))  # w round-trips as t_1
        elif self.lie_type == "B":
            coeffs = [0] * n
            coeffs[n - 1] = -1
            roots.append(Polynomial.linear(coeffs))
        elif self.lie_type == "C":
            coeffs = [0] * n
            coeffs[n - 1] = -2
            roots.append(Polynomial.linear(coeffs))
        else:  # D: the second-to-last entry built above is -(t_(n-1)-t_n)
            coeffs = [0] * n
            coeffs[n - 2] = -1
            coeffs[n - 1] = -1
            roots.append(Polynomial.linear(coeffs))
        return roots


@dataclass
class PositivityCertificate:
    """Outcome of expanding a class in negated simple roots.

    When ``ok`` the expansion has only nonnegative integer coefficients and
    substituting v_i = -alpha_i back reproduces the input exactly.  When not
    ``ok``, ``failure`` names the offending monomial or divisibility defect.
    """

    ok: bool
    lie_type: str
    n: int
    degree: int
    scale: int
    expansion: Optional[Polynomial]
    failure: Optional[str]

    def to_json_dict(self) -> dict:
        return {
            "ok": self.ok,
            "lie_type": self.lie_type,
            "n": self.n,
            "degree": self.degree,
            "scale": self.scale,
            "expansion": self.expansion.to_json_dict() if self.expansion else None,
            "failure": self.failure,
        }


def root_positivity_certificate(p: Polynomial, basis: RootBasis) -> PositivityCertificate:
    """Certify that p is a nonnegative integer combination of products of
    negated simple roots, or report why it is not."""
    if p.nvars != basis.n:
        raise InputError(
            f"polynomial has {p.nvars} variables, expected {basis.n}"
        )
    if p.is_zero:
        return PositivityCertificate(
            ok=True,
            lie_type=basis.lie_type,
            n=basis.n,
            degree=0,
            scale=1,
            expansion=Polynomial.zero(basis.num_basis_vars),
            failure=None,
        )
    if not p.is_homogeneous():
        raise InputError("positivity certificates require homogeneous input")
    degree = p.degree()
    scale = basis.denominator_scale**degree
    scaled = p.substitute(basis.scaled_t_images())
    names = basis.basis_var_names()

    def monomial_name(exp):
        return Polynomial(len(exp), {exp: 1}).render(names=names)

    if basis.lie_type == "A":
        w_index = basis.num_basis_vars - 1
        for exp, coeff in scaled.sorted_terms():
            if exp[w_index] > 0:
                return PositivityCertificate(
                    False, basis.lie_type, basis.n, degree, scale, None,
                    f"term {monomial_name(exp)} lies outside the root span",
                )
    terms = {}
    for exp, coeff in scaled.sorted_terms():
        if coeff < 0:
            return PositivityCertificate(
                False, basis.lie_type, basis.n, degree, scale, None,
                f"negative coefficient {coeff} on {monomial_name(exp)}",
            )
        if coeff % scale != 0:
            return PositivityCertificate(
                False, basis.lie_type, basis.n, degree, scale, None,
                f"coefficient {coeff} on {monomial_name(exp)} "
                f"not divisible by {scale}",
            )
        terms[exp] = coeff // scale
    expansion = Polynomial(basis.num_basis_vars, terms)
    return PositivityCertificate(
        True, basis.lie_type, basis.n, degree, scale, expansion, None
    )
