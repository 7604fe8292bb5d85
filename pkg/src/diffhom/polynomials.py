"""Exact sparse multivariate polynomials over the rationals.

Variables are tagged by family so that a single carrier type can hold jet
variables X_i^(j), tensor-slot variables Y_s^(t), auxiliary variables Z_i and
truncated-series coefficients l_m at the same time:

  VarId = (family, i, j)     with a fixed total order: family tag first,
                             then the two indices lexicographically.
  Monomial = tuple of (VarId, exponent) pairs, sorted, no zero exponents.
  Poly.terms = dict mapping Monomial -> nonzero Fraction.

The zero polynomial has an empty term map and equal polynomials have equal
term maps, so `==` is exact identity testing.  Coefficients are arbitrary
precision rationals throughout; there is no floating point anywhere.

Rendering is canonical: variables print as X0^(2), Y3^(0), Z1, l0; monomial
factors are joined by `*`; terms are sorted by the graded monomial order; and
rationals print as p/q.  Golden files and JSON exports rely on this form.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial
from typing import Iterable, Mapping, NamedTuple, Sequence

from .errors import (
    NonSquareError,
    NotLinearError,
    UnmappedVariableError,
)

# Family tags, in rendering and ordering position.
JET_X = 0
TENSOR_Y = 1
Z_VAR = 2
SERIES_COEFF = 3

_FAMILY_LETTER = {JET_X: "X", TENSOR_Y: "Y", Z_VAR: "Z", SERIES_COEFF: "l"}


class VarId(NamedTuple):
    """A tagged variable; tuple order gives the global variable order."""

    family: int
    i: int
    j: int

    def render(self) -> str:
        letter = _FAMILY_LETTER[self.family]
        if self.family in (JET_X, TENSOR_Y):
            return f"{letter}{self.i}^({self.j})"
        return f"{letter}{self.i}"


def jet_var(i: int, j: int) -> VarId:
    """The jet variable X_i^(j): coordinate i, derivation order j."""
    return VarId(JET_X, i, j)


def slot_var(s: int, t: int) -> VarId:
    """The tensor-slot variable Y_s^(t): slot s (1-based), order t."""
    return VarId(TENSOR_Y, s, t)


def z_var(i: int) -> VarId:
    """The auxiliary variable Z_i (1-based)."""
    return VarId(Z_VAR, i, 0)


def series_coeff(m: int) -> VarId:
    """The coefficient l_m of T^m in a truncated invertible series."""
    return VarId(SERIES_COEFF, m, 0)


Monomial = tuple  # tuple[tuple[VarId, int], ...], sorted by VarId


def mono_degree(mono: Monomial) -> int:
    return sum(e for _, e in mono)


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    if not a:
        return b
    if not b:
        return a
    exps: dict[VarId, int] = dict(a)
    for v, e in b:
        exps[v] = exps.get(v, 0) + e
    return tuple(sorted(exps.items()))


def mono_sort_key(mono: Monomial):
    """Graded order: total degree first, then the sorted exponent pairs."""
    return (mono_degree(mono), mono)


def mono_render(mono: Monomial) -> str:
    if not mono:
        return "1"
    factors = []
    for v, e in mono:
        factors.append(v.render() if e == 1 else f"{v.render()}^{e}")
    return "*".join(factors)


def _coeff(value) -> Fraction:
    return value if isinstance(value, Fraction) else Fraction(value)


class Poly:
    """A sparse exact-rational polynomial in tagged variables."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Monomial, Fraction] | None = None):
        if terms is None:
            self.terms = {}
        else:
            self.terms = {m: _coeff(c) for m, c in terms.items() if c != 0}

    # -- constructors -------------------------------------------------

    @staticmethod
    def zero() -> "Poly":
        return Poly()

    @staticmethod
    def constant(c) -> "Poly":
        c = _coeff(c)
        return Poly({(): c}) if c else Poly()

    @staticmethod
    def variable(v: VarId) -> "Poly":
        return Poly({((v, 1),): Fraction(1)})

    @staticmethod
    def monomial(pairs: Iterable[tuple[VarId, int]], c=1) -> "Poly":
        exps: dict[VarId, int] = {}
        for v, e in pairs:
            if e:
                exps[v] = exps.get(v, 0) + e
        return Poly({tuple(sorted(exps.items())): _coeff(c)})

    # -- ring operations ----------------------------------------------

    def __add__(self, other: "Poly") -> "Poly":
        out = dict(self.terms)
        for m, c in other.terms.items():
            s = out.get(m, 0) + c
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        return _wrap(out)

    def __sub__(self, other: "Poly") -> "Poly":
        out = dict(self.terms)
        for m, c in other.terms.items():
            s = out.get(m, 0) - c
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        return _wrap(out)

    def __neg__(self) -> "Poly":
        return _wrap({m: -c for m, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, Poly):
            out: dict[Monomial, Fraction] = {}
            for m1, c1 in self.terms.items():
                for m2, c2 in other.terms.items():
                    m = mono_mul(m1, m2)
                    s = out.get(m, 0) + c1 * c2
                    if s:
                        out[m] = s
                    else:
                        out.pop(m, None)
            return _wrap(out)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def __pow__(self, n: int) -> "Poly":
        if n < 0:
            raise ValueError("negative polynomial power")
        result = Poly.constant(1)
        for _ in range(n):
            result = result * self
        return result

    def scale(self, c) -> "Poly":
        c = _coeff(c)
        if not c:
            return Poly()
        return _wrap({m: c * x for m, x in self.terms.items()})

    def __eq__(self, other) -> bool:
        return isinstance(other, Poly) and self.terms == other.terms

    __hash__ = None  # mutable mapping inside

    # -- queries -------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def total_degree(self) -> int:
        """Maximal total degree of a term; 0 for the zero polynomial."""
        return max((mono_degree(m) for m in self.terms), default=0)

    def is_homogeneous(self, d: int) -> bool:
        return all(mono_degree(m) == d for m in self.terms)

    def variables(self) -> set[VarId]:
        return {v for m in self.terms for v, _ in m}

    def derivation_order(self) -> int:
        """Largest derivation superscript among jet/slot variables (0 if none)."""
        orders = [
            v.j
            for m in self.terms
            for v, _ in m
            if v.family in (JET_X, TENSOR_Y)
        ]
        return max(orders, default=0)

    def degree_in(self, v: VarId) -> int:
        return max((dict(m).get(v, 0) for m in self.terms), default=0)

    # -- calculus and substitution --------------------------------------

    def partial_derivative(self, v: VarId) -> "Poly":
        """Formal partial derivative with respect to v."""
        out: dict[Monomial, Fraction] = {}
        for m, c in self.terms.items():
            exps = dict(m)
            e = exps.get(v, 0)
            if not e:
                continue
            if e == 1:
                del exps[v]
            else:
                exps[v] = e - 1
            mono = tuple(sorted(exps.items()))
            s = out.get(mono, 0) + c * e
            if s:
                out[mono] = s
            else:
                out.pop(mono, None)
        return _wrap(out)

    def substitute(self, mapping: Mapping[VarId, "Poly"]) -> "Poly":
        """Ring homomorphism sending each variable to its image.

        The map must cover every variable occurring in the polynomial;
        a missing variable raises UnmappedVariableError rather than being
        treated as the identity.
        """
        result = Poly()
        for m, c in self.terms.items():
            term = Poly.constant(c)
            for v, e in m:
                image = mapping.get(v)
                if image is None:
                    raise UnmappedVariableError(v)
                for _ in range(e):
                    term = term * image
            result = result + term
        return result

    def coefficient_of(self, v: VarId) -> "Poly":
        """The polynomial q with p = q*v + (terms not involving v).

        Only defined when p has degree at most one in v (the multilinear
        use case); otherwise NotLinearError is raised.
        """
        out: dict[Monomial, Fraction] = {}
        for m, c in self.terms.items():
            exps = dict(m)
            e = exps.get(v, 0)
            if e == 0:
                continue
            if e > 1:
                raise NotLinearError(f"degree {e} in {v.render()}")
            del exps[v]
            out[tuple(sorted(exps.items()))] = c
        return _wrap(out)

    # -- normal forms and rendering --------------------------------------

    def leading_monomial(self) -> Monomial:
        if not self.terms:
            raise ValueError("zero polynomial has no leading monomial")
        return min(self.terms, key=mono_sort_key)

    def sign_normalized(self) -> "Poly":
        """Scale by -1 if the leading coefficient is negative."""
        if not self.terms:
            return self
        if self.terms[self.leading_monomial()] < 0:
            return -self
        return self

    def render(self) -> str:
        if not self.terms:
            return "0"
        pieces = []
        for idx, m in enumerate(sorted(self.terms, key=mono_sort_key)):
            c = self.terms[m]
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            mag_str = str(mag.numerator) if mag.denominator == 1 else f"{mag.numerator}/{mag.denominator}"
            if not m:
                body = mag_str
            elif mag == 1:
                body = mono_render(m)
            else:
                body = f"{mag_str}*{mono_render(m)}"
            if idx == 0:
                pieces.append(body if sign == "+" else f"-{body}")
            else:
                pieces.append(f" {sign} {body}")
        return "".join(pieces)

    def __str__(self) -> str:
        return self.render()

    def __repr__(self) -> str:
        return f"Poly({self.render()})"


def _wrap(terms: dict) -> Poly:
    p = Poly.__new__(Poly)
    p.terms = terms
    return p


def determinant(matrix: Sequence[Sequence[Poly]]) -> Poly:
    """Exact determinant of a square matrix of polynomials.

    Laplace expansion along rows, memoized over the set of still-available
    columns.  With sparse low-degree entries this beats elimination over the
    polynomial ring, and the memoization collapses the n! cofactor tree to
    2^n subproblems.
    """
    n = len(matrix)
    for row in matrix:
        if len(row) != n:
            raise NonSquareError(f"matrix is {n}x{len(row)}")
    if n == 0:
        return Poly.constant(1)

    memo: dict[frozenset, Poly] = {}

    def expand(cols: frozenset) -> Poly:
        row_idx = n - len(cols)
        if len(cols) == 1:
            (c,) = cols
            return matrix[row_idx][c]
        cached = memo.get(cols)
        if cached is not None:
            return cached
        total = Poly()
        for pos, c in enumerate(sorted(cols)):
            entry = matrix[row_idx][c]
            if entry.is_zero:
                continue
            minor = expand(cols - {c})
            contrib = entry * minor
            total = total + (contrib if pos % 2 == 0 else -contrib)
        memo[cols] = total
        return total

    return expand(frozenset(range(n)))


def falling_factorial(n: int, k: int) -> int:
    """n (n-1) ... (n-k+1); equals n!/(n-k)! for 0 <= k <= n."""
    return factorial(n) // factorial(n - k)
