"""Invariant tensors of the truncated unipotent action, and their two faces.

The model space F has basis f_0..f_k with the nilpotent shift
J(f_a) = a*f_{a-1}.  On the d-fold tensor power, the ell-fold insertion
operator applies J in ell distinct slots, summed over ordered tuples of
distinct slots (so each unordered slot subset contributes ell! times).  A
tensor is invariant under the unipotent group generated by I + alpha*J
exactly when every insertion operator kills it.

Tensors are stored sparsely in the f-basis: coords maps an exponent tuple
(a_1..a_d) in {0..k}^d to a rational coordinate.  All operators preserve the
total grade sum(a_i) up to a shift, so kernel computations split into graded
blocks; the basis routine exploits this and intersects the operator kernels
iteratively (the first operator does the heavy pruning, later ones act on
the already-small intersection).

Two translations connect tensors to polynomials: `to_harmonic` maps the
f-basis to monomials in auxiliary Z variables (turning insertion operators
into symmetric differential operators), and `project_to_symmetric`
substitutes jet variables for the slots (producing degree-d jet
polynomials).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, product
from math import factorial

from .errors import IndexOutOfRangeError
from .linalg import echelon_of, int_row, nullspace, rank_of
from .polynomials import (
    Poly,
    TENSOR_Y,
    determinant,
    falling_factorial,
    jet_var,
    slot_var,
    z_var,
)
from .resources import DEFAULT_CAPS, ResourceCaps


@dataclass(frozen=True)
class NilpotentModel:
    """The shift J(f_a) = a*f_{a-1} on a (k+1)-dimensional space."""

    k: int

    def matrix(self) -> list[list[Fraction]]:
        m = [[Fraction(0)] * (self.k + 1) for _ in range(self.k + 1)]
        for a in range(1, self.k + 1):
            m[a - 1][a] = Fraction(a)
        return m


@dataclass
class Tensor:
    """Sparse element of the d-fold tensor power of the order-k model space."""

    k: int
    d: int
    coords: dict

    @staticmethod
    def make(k: int, d: int, coords: dict) -> "Tensor":
        clean = {}
        for idx, c in coords.items():
            c = c if isinstance(c, Fraction) else Fraction(c)
            if not c:
                continue
            if len(idx) != d or any(a < 0 or a > k for a in idx):
                raise IndexOutOfRangeError(f"index {idx} outside box k={k} d={d}")
            clean[idx] = c
        return Tensor(k, d, clean)

    @staticmethod
    def unit(k: int, d: int, idx: tuple) -> "Tensor":
        return Tensor.make(k, d, {tuple(idx): Fraction(1)})

    @property
    def is_zero(self) -> bool:
        return not self.coords

    def add(self, other: "Tensor") -> "Tensor":
        out = dict(self.coords)
        for idx, c in other.coords.items():
            s = out.get(idx, 0) + c
            if s:
                out[idx] = s
            else:
                out.pop(idx, None)
        return Tensor(self.k, self.d, out)

    def scale(self, c) -> "Tensor":
        c = c if isinstance(c, Fraction) else Fraction(c)
        if not c:
            return Tensor(self.k, self.d, {})
        return Tensor(self.k, self.d, {idx: c * v for idx, v in self.coords.items()})

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Tensor)
            and (self.k, self.d) == (other.k, other.d)
            and self.coords == other.coords
        )

    def render(self) -> str:
        """Canonical text form: coordinates sorted by (grade, index tuple)."""
        if not self.coords:
            return "0"
        pieces = []
        for pos, idx in enumerate(sorted(self.coords, key=lambda t: (sum(t), t))):
            c = self.coords[idx]
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            mag_str = str(mag.numerator) if mag.denominator == 1 else f"{mag.numerator}/{mag.denominator}"
            body = f"f[{','.join(map(str, idx))}]"
            if mag != 1:
                body = f"{mag_str}*{body}"
            if pos == 0:
                pieces.append(body if sign == "+" else f"-{body}")
            else:
                pieces.append(f" {sign} {body}")
        return "".join(pieces)


def _insert_shift(coords: dict, slots: tuple) -> dict:
    """Apply the canonical shift J in each of the given slots."""
    out: dict = {}
    for idx, c in coords.items():
        coeff = c
        ok = True
        for s in slots:
            a = idx[s]
            if a == 0:
                ok = False
                break
            coeff = coeff * a
        if not ok:
            continue
        lowered = list(idx)
        for s in slots:
            lowered[s] -= 1
        key = tuple(lowered)
        s_val = out.get(key, 0) + coeff
        if s_val:
            out[key] = s_val
        else:
            out.pop(key, None)
    return out


def _insert_matrix(coords: dict, slots: tuple, matrix) -> dict:
    """Apply an arbitrary operator matrix in each of the given slots."""
    current = coords
    dim = len(matrix)
    for s in slots:
        nxt: dict = {}
        for idx, c in current.items():
            a = idx[s]
            for r in range(dim):
                m = matrix[r][a]
                if not m:
                    continue
                key = idx[:s] + (r,) + idx[s + 1 :]
                v = nxt.get(key, 0) + c * m
                if v:
                    nxt[key] = v
                else:
                    nxt.pop(key, None)
        current = nxt
    return current


def insertion_operator(t: Tensor, ell: int, matrix=None) -> Tensor:
    """Sum of the operator applied in ell distinct slots, ordered-tuple count.

    Each unordered subset of ell slots contributes with multiplicity ell!.
    The default operator is the canonical shift.
    """
    if not 1 <= ell <= t.d:
        raise IndexOutOfRangeError(f"insertion order {ell} outside 1..{t.d}")
    total: dict = {}
    for slots in combinations(range(t.d), ell):
        piece = (
            _insert_shift(t.coords, slots)
            if matrix is None
            else _insert_matrix(t.coords, slots, matrix)
        )
        for idx, c in piece.items():
            v = total.get(idx, 0) + c
            if v:
                total[idx] = v
            else:
                total.pop(idx, None)
    mult = factorial(ell)
    return Tensor(t.k, t.d, {idx: mult * c for idx, c in total.items()})


def expand_one_parameter(t: Tensor, alpha: Fraction) -> Tensor:
    """Apply (I + alpha*J) in every slot (the one-parameter group element)."""
    coords = t.coords
    for s in range(t.d):
        nxt: dict = {}
        for idx, c in coords.items():
            v = nxt.get(idx, 0) + c
            if v:
                nxt[idx] = v
            else:
                nxt.pop(idx, None)
            a = idx[s]
            if a:
                key = idx[:s] + (a - 1,) + idx[s + 1 :]
                v = nxt.get(key, 0) + c * alpha * a
                if v:
                    nxt[key] = v
                else:
                    nxt.pop(key, None)
        coords = nxt
    return Tensor(t.k, t.d, dict(coords))


def _box_by_grade(k: int, d: int) -> dict:
    blocks: dict[int, list] = {}
    for idx in product(range(k + 1), repeat=d):
        blocks.setdefault(sum(idx), []).append(idx)
    for grade in blocks:
        blocks[grade].sort()
    return blocks


def invariant_tensor_basis(
    k: int, d: int, caps: ResourceCaps | None = None, matrix=None
) -> list[Tensor]:
    """Canonical basis of the joint kernel of all insertion operators.

    For the canonical shift the computation is graded by the coordinate sum
    and the operator kernels are intersected iteratively.  Passing an
    explicit operator matrix (e.g. a conjugated shift) falls back to one
    stacked kernel computation; that path is intended for small boxes only.

    The returned basis is the reduced echelon basis over the box
    coordinates ordered by (grade, index tuple): deterministic and, for
    k >= d-1, literally identical to the k = d-1 basis under the inclusion
    of the smaller box.
    """
    caps = caps or DEFAULT_CAPS
    caps.check("max_box", (k + 1) ** d)

    if matrix is not None:
        cols = sorted(product(range(k + 1), repeat=d))
        col_index = {idx: i for i, idx in enumerate(cols)}
        rows = []
        for ell in range(1, d + 1):
            images = {}
            for idx in cols:
                img = insertion_operator(Tensor.unit(k, d, idx), ell, matrix)
                for out, c in img.coords.items():
                    images.setdefault(out, {})[col_index[idx]] = c
            rows.extend(images.values())
        return [
            Tensor.make(k, d, {cols[ci]: Fraction(v) for ci, v in vec.items()})
            for vec in nullspace(rows, len(cols))
        ]

    blocks = _box_by_grade(k, d)
    # per grade, a list of kernel vectors as sparse dicts over index tuples
    kernels: dict[int, list[dict]] = {
        grade: [{idx: Fraction(1)} for idx in idxs] for grade, idxs in blocks.items()
    }
    for ell in range(1, d + 1):
        for grade in sorted(kernels):
            vectors = kernels[grade]
            if not vectors:
                continue
            constraint_rows: dict = {}
            for ci, vec in enumerate(vectors):
                image = insertion_operator(Tensor(k, d, vec), ell)
                for out, c in image.coords.items():
                    constraint_rows.setdefault(out, {})[ci] = c
            if not constraint_rows:
                continue
            combos = nullspace(constraint_rows.values(), len(vectors))
            new_vectors = []
            for combo in combos:
                acc: dict = {}
                for ci, weight in combo.items():
                    for idx, c in vectors[ci].items():
                        v = acc.get(idx, 0) + weight * c
                        if v:
                            acc[idx] = v
                        else:
                            acc.pop(idx, None)
                new_vectors.append(acc)
            kernels[grade] = new_vectors

    # canonical form: reduced echelon basis over (grade, tuple)-ordered columns
    cols = [idx for grade in sorted(blocks) for idx in blocks[grade]]
    col_index = {idx: i for i, idx in enumerate(cols)}
    ech = echelon_of(
        int_row({col_index[idx]: c for idx, c in vec.items()})
        for grade in sorted(kernels)
        for vec in kernels[grade]
    )
    basis = []
    for pivot in sorted(ech.pivots):
        row = ech.pivots[pivot]
        basis.append(Tensor.make(k, d, {cols[ci]: Fraction(v) for ci, v in row.items()}))
    return basis


def wronskian(alpha, d: int | None = None, k: int | None = None) -> Poly:
    """Determinant of shifted slot-coordinate columns, as a multilinear poly.

    Column s carries the alpha_s-fold transpose-shift of the coordinate
    vector (Y_s^(0), ..., Y_s^(d-1)); entry in row t is
    t!/(t-alpha_s)! * Y_s^(t-alpha_s) when t >= alpha_s and 0 otherwise.
    """
    alpha = tuple(alpha)
    if d is None:
        d = len(alpha)
    if len(alpha) != d:
        raise IndexOutOfRangeError(f"need {d} exponents, got {len(alpha)}")
    if k is None:
        k = d - 1
    if any(a < 0 or a > k for a in alpha):
        raise IndexOutOfRangeError(f"exponents {alpha} outside 0..{k}")
    matrix = []
    for t in range(d):
        row = []
        for s, a in enumerate(alpha, start=1):
            if t >= a:
                row.append(Poly.variable(slot_var(s, t - a)).scale(falling_factorial(t, a)))
            else:
                row.append(Poly.zero())
        matrix.append(row)
    return determinant(matrix)


def canonical_wronskian_exponents(d: int):
    """All exponent tuples (a_1..a_d) with 0 <= a_i <= i-1, in product order."""
    return [tuple(a) for a in product(*(range(i) for i in range(1, d + 1)))]


def tensor_from_multilinear(p: Poly, d: int, k: int) -> Tensor:
    """Read a multilinear polynomial in slot variables as a tensor."""
    coords = {}
    for mono, c in p.terms.items():
        orders = {}
        for v, e in mono:
            if v.family != TENSOR_Y or e != 1 or v.i in orders:
                raise ValueError(f"not multilinear in slot variables: {mono}")
            orders[v.i] = v.j
        if sorted(orders) != list(range(1, d + 1)):
            raise ValueError(f"monomial does not cover slots 1..{d}: {mono}")
        coords[tuple(orders[s] for s in range(1, d + 1))] = c
    return Tensor.make(k, d, coords)


@dataclass
class WronskianBasisReport:
    d: int
    expected: int
    rank: int
    all_invariant: bool
    kernel_dimension: int

    @property
    def passed(self) -> bool:
        return (
            self.all_invariant
            and self.rank == self.expected
            and self.kernel_dimension == self.expected
        )


def verify_wronskian_basis(d: int, caps: ResourceCaps | None = None) -> WronskianBasisReport:
    """Check that the canonical Wronskian family is a basis of the invariants.

    The d! polynomials with staircase-bounded exponents are converted to
    tensors, checked to be killed by every insertion operator, and their
    exact rank is compared with the kernel dimension.
    """
    caps = caps or DEFAULT_CAPS
    k = d - 1
    caps.check("max_box", (k + 1) ** d)
    tensors = [
        tensor_from_multilinear(wronskian(a, d), d, k)
        for a in canonical_wronskian_exponents(d)
    ]
    all_invariant = all(
        insertion_operator(t, ell).is_zero for t in tensors for ell in range(1, d + 1)
    )
    cols = sorted(product(range(k + 1), repeat=d))
    col_index = {idx: i for i, idx in enumerate(cols)}
    rank = rank_of({col_index[idx]: c for idx, c in t.coords.items()} for t in tensors)
    kernel_dim = len(invariant_tensor_basis(k, d, caps))
    return WronskianBasisReport(
        d=d,
        expected=factorial(d),
        rank=rank,
        all_invariant=all_invariant,
        kernel_dimension=kernel_dim,
    )


def to_harmonic(t: Tensor) -> Poly:
    """Translate a tensor into a polynomial in the auxiliary Z variables.

    The basis vector with exponent tuple (a_1..a_d) maps to the image of the
    corresponding iterated-shift basis element, namely
    prod_i Z_i^(a_i)/a_i! times the structure constants prod_i a_i!/k!,
    i.e. Z^a / (k!)^d.  Insertion operators intertwine with symmetric
    differential operators under this map.
    """
    scale = Fraction(1, factorial(t.k) ** t.d)
    terms = {}
    for idx, c in t.coords.items():
        mono = tuple(sorted((z_var(i + 1), a) for i, a in enumerate(idx) if a))
        terms[mono] = terms.get(mono, Fraction(0)) + c * scale
    return Poly(terms)


def project_to_symmetric(t: Tensor, slot_assignment) -> Poly:
    """Substitute jet variables for the slots: slot s becomes X_{assign[s]}.

    The assignment is a sequence of d variable indices (slot 1 first).
    Invariant tensors project to differentially homogeneous polynomials of
    degree d (possibly zero when the assignment collapses antisymmetry).
    """
    assign = list(slot_assignment)
    if len(assign) != t.d:
        raise IndexOutOfRangeError(f"need {t.d} slot assignments, got {len(assign)}")
    result: dict = {}
    for idx, c in t.coords.items():
        exps: dict = {}
        for s, a in enumerate(idx):
            v = jet_var(assign[s], a)
            exps[v] = exps.get(v, 0) + 1
        mono = tuple(sorted(exps.items()))
        s_val = result.get(mono, 0) + c
        if s_val:
            result[mono] = s_val
        else:
            result.pop(mono, None)
    return Poly(result)
