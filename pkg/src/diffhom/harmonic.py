"""Partitions, tableaux, partial-symmetric ideals, and harmonic polynomials.

A partition of d is stored ascending with zero padding to exactly d parts.
Its conjugate is read off the Young diagram right-to-left inside the d-wide
bounding box, so empty column positions contribute zero parts; the prefix
sums of the conjugate count the cells in the rightmost columns.  This is the
convention under which the power-and-symmetric ideal below coincides with
the DeConcini-Procesi ideal of the balanced partition.

Two ideals in the auxiliary variables Z_1..Z_d drive everything:

  ik_presentation(d, k):  all elementary symmetric polynomials e_1..e_d
                          together with the powers Z_i^(k+1);
  dcp_presentation(mu):   the partial elementary symmetric polynomials
                          e_j(S) for subsets S with |S| = i and
                          i - d_i(mu) < j <= i  (DeConcini-Procesi).

For a polynomial Q, the operator Q(d/dZ) acts on Z-polynomials; the solution
space of an ideal is the joint kernel of its generator operators.  Because
the powers Z_i^(k+1) force per-variable degree <= k, solution spaces live in
finite coordinate boxes and all kernels and ranks are exact integer linear
algebra.  Quotient dimensions are computed independently (rank of the ideal's
image inside the box algebra), giving a second route to every dimension.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, product
from math import comb, factorial

from .errors import IndexOutOfRangeError
from .linalg import echelon_of, nullspace, rank_of
from .polynomials import (
    Poly,
    Z_VAR,
    determinant,
    falling_factorial,
    z_var,
)
from .resources import DEFAULT_CAPS, ResourceCaps
from .spans import span_rank
from .tensors import (
    canonical_wronskian_exponents,
    tensor_from_multilinear,
    wronskian,
)

# ---------------------------------------------------------------------------
# partitions and tableaux


@dataclass(frozen=True)
class Partition:
    """Ascending partition of d, zero-padded to exactly d parts."""

    parts: tuple

    @staticmethod
    def of(parts) -> "Partition":
        clean = sorted(int(x) for x in parts)
        if any(x < 0 for x in clean):
            raise ValueError(f"negative part in {parts}")
        d = sum(clean)
        if d == 0:
            raise ValueError("partition of 0 not supported")
        nonzero = [x for x in clean if x]
        if len(nonzero) > d:
            raise ValueError(f"{parts} is not a partition of {d}")
        return Partition(tuple([0] * (d - len(nonzero)) + nonzero))

    @property
    def d(self) -> int:
        return sum(self.parts)

    @property
    def nonzero(self) -> tuple:
        return tuple(x for x in self.parts if x)

    def conjugate(self) -> "Partition":
        d = self.d
        return Partition(
            tuple(sum(1 for p in self.parts if p >= d + 1 - j) for j in range(1, d + 1))
        )

    def cells_in_last_columns(self, i: int) -> int:
        """Cells in the i rightmost column positions of the d-wide diagram."""
        return sum(self.conjugate().parts[:i])

    def __str__(self) -> str:
        return "(" + ",".join(str(x) for x in self.nonzero) + ")"


def balanced_partition(d: int, k: int) -> Partition:
    """The partition of d from euclidean division by k+1.

    With d = q(k+1) + r this is q repeated (k+1-r) times followed by q+1
    repeated r times; its conjugate is r followed by q copies of k+1.
    """
    if d < 1 or k < 0:
        raise IndexOutOfRangeError(f"invalid balanced partition d={d} k={k}")
    q, r = divmod(d, k + 1)
    return Partition.of((q,) * (k + 1 - r) + (q + 1,) * r)


@dataclass(frozen=True)
class YoungTableau:
    """A filling of a diagram; rows are top-to-bottom, shortest row first."""

    shape: Partition
    rows: tuple

    @staticmethod
    def of(shape: Partition, rows) -> "YoungTableau":
        rows = tuple(tuple(int(x) for x in row) for row in rows)
        lens = tuple(len(r) for r in rows)
        if lens != shape.nonzero:
            raise ValueError(f"row lengths {lens} do not match shape {shape}")
        return YoungTableau(shape, rows)

    def entries(self) -> list:
        return [x for row in self.rows for x in row]

    def is_injective(self) -> bool:
        seen = self.entries()
        return len(set(seen)) == len(seen) and all(1 <= x <= self.shape.d for x in seen)

    def columns(self) -> list:
        """Column entries read bottom-to-top (longest row first)."""
        width = max((len(r) for r in self.rows), default=0)
        cols = []
        for c in range(width):
            cols.append(tuple(row[c] for row in reversed(self.rows) if len(row) > c))
        return cols

    def is_standard(self) -> bool:
        if not self.is_injective():
            return False
        for row in self.rows:
            if any(row[i] >= row[i + 1] for i in range(len(row) - 1)):
                return False
        for col in self.columns():
            if any(col[i] >= col[i + 1] for i in range(len(col) - 1)):
                return False
        return True


def enum_standard_tableaux(
    mu: Partition, caps: ResourceCaps | None = None
) -> list[YoungTableau]:
    """All standard fillings of the diagram, by deterministic backtracking.

    A cell can receive the next value once its left neighbour and the cell
    below it (rows grow downwards) are filled, which enforces increasing
    rows and bottom-to-top increasing columns.
    """
    caps = caps or DEFAULT_CAPS
    caps.check("max_enumeration", factorial(mu.d))
    lens = mu.nonzero
    nrows = len(lens)
    grid = [[0] * length for length in lens]
    found: list[YoungTableau] = []

    def place(value: int):
        if value > mu.d:
            found.append(YoungTableau.of(mu, tuple(tuple(row) for row in grid)))
            return
        for i in range(nrows):
            for c in range(lens[i]):
                if grid[i][c]:
                    continue
                if c > 0 and not grid[i][c - 1]:
                    continue
                if i + 1 < nrows and not grid[i + 1][c]:
                    continue
                grid[i][c] = value
                place(value + 1)
                grid[i][c] = 0

    place(1)
    return found


def tableau_vandermonde(tableau: YoungTableau) -> Poly:
    """Product over columns of the Vandermonde determinant in the column's Z's.

    A column with m entries (read bottom-to-top) contributes the m x m
    determinant with rows (1, Z_e, ..., Z_e^(m-1)); an empty column
    contributes 1.
    """
    result = Poly.constant(1)
    for col in tableau.columns():
        m = len(col)
        matrix = [
            [Poly.variable(z_var(e)) ** p for p in range(m)]
            for e in col
        ]
        result = result * determinant(matrix)
    return result


# ---------------------------------------------------------------------------
# ideals


def elementary_symmetric(var_indices, j: int) -> Poly:
    """The j-th elementary symmetric polynomial in the given Z variables."""
    total = Poly.zero()
    for combo in combinations(tuple(var_indices), j):
        total = total + Poly.monomial([(z_var(i), 1) for i in combo])
    return total


@dataclass(frozen=True)
class IdealPresentation:
    nvars: int
    generators: tuple
    label: str


def ik_presentation(d: int, k: int) -> IdealPresentation:
    """Full elementary symmetric polynomials plus the (k+1)-st powers."""
    gens = [elementary_symmetric(range(1, d + 1), j) for j in range(1, d + 1)]
    gens += [Poly.monomial([(z_var(i), k + 1)]) for i in range(1, d + 1)]
    return IdealPresentation(d, tuple(gens), f"ik(d={d},k={k})")


def dcp_presentation(mu: Partition) -> IdealPresentation:
    """Partial elementary symmetric polynomials selected by the partition."""
    d = mu.d
    gens = []
    for i in range(1, d + 1):
        lo = max(1, i - mu.cells_in_last_columns(i) + 1)
        for subset in combinations(range(1, d + 1), i):
            for j in range(lo, i + 1):
                gens.append(elementary_symmetric(subset, j))
    return IdealPresentation(d, tuple(gens), f"dcp{mu}")


def _z_exponents(p: Poly, d: int) -> list:
    """Terms of a Z-polynomial as (exponent tuple, coefficient) pairs."""
    out = []
    for mono, c in p.terms.items():
        exp = [0] * d
        for v, e in mono:
            if v.family != Z_VAR or not 1 <= v.i <= d:
                raise IndexOutOfRangeError(f"{v.render()} is not Z_1..Z_{d}")
            exp[v.i - 1] = e
        out.append((tuple(exp), c))
    return out


def apply_poly_operator(q: Poly, p: Poly) -> Poly:
    """Apply the differential operator of q (Z_i -> d/dZ_i) to p."""
    d = 0
    for v in q.variables() | p.variables():
        d = max(d, v.i)
    result: dict = {}
    q_terms = _z_exponents(q, d)
    for pexp, pc in _z_exponents(p, d):
        for qexp, qc in q_terms:
            if any(pe < qe for pe, qe in zip(pexp, qexp)):
                continue
            coeff = pc * qc
            for pe, qe in zip(pexp, qexp):
                if qe:
                    coeff *= falling_factorial(pe, qe)
            out = tuple(pe - qe for pe, qe in zip(pexp, qexp))
            mono = tuple(sorted((z_var(i + 1), e) for i, e in enumerate(out) if e))
            s = result.get(mono, 0) + coeff
            if s:
                result[mono] = s
            else:
                result.pop(mono, None)
    return Poly(result)


def _box_columns(d: int, k: int) -> list:
    """Box exponent tuples ordered by (total degree, tuple)."""
    return sorted(product(range(k + 1), repeat=d), key=lambda t: (sum(t), t))


def perp_basis(
    presentation: IdealPresentation, box_bound: int, caps: ResourceCaps | None = None
) -> list[Poly]:
    """Joint polynomial kernel of the generator operators, inside the box.

    The box of per-variable degree <= box_bound must absorb the ideal's pure
    powers (as it does for ik_presentation(d, k) with box_bound = k); every
    generator is then applied as a differential operator on box monomials
    and the exact null space is returned as polynomials, echelon-ordered.
    """
    caps = caps or DEFAULT_CAPS
    d = presentation.nvars
    caps.check("max_box", (box_bound + 1) ** d)
    cols = _box_columns(d, box_bound)
    col_index = {b: i for i, b in enumerate(cols)}
    rows: dict = {}
    for gi, gen in enumerate(presentation.generators):
        terms = _z_exponents(gen, d)
        for b in cols:
            for qexp, qc in terms:
                if any(be < qe for be, qe in zip(b, qexp)):
                    continue
                coeff = qc
                for be, qe in zip(b, qexp):
                    if qe:
                        coeff *= falling_factorial(be, qe)
                out = tuple(be - qe for be, qe in zip(b, qexp))
                row = rows.setdefault((gi, out), {})
                row[col_index[b]] = row.get(col_index[b], 0) + coeff
    basis = []
    for vec in nullspace(rows.values(), len(cols)):
        terms = {}
        for ci, val in vec.items():
            b = cols[ci]
            mono = tuple(sorted((z_var(i + 1), e) for i, e in enumerate(b) if e))
            terms[mono] = Fraction(val)
        basis.append(Poly(terms))
    return basis


def _exponents_of_degree(d: int, degree: int):
    if d == 1:
        yield (degree,)
        return
    for first in range(degree + 1):
        for rest in _exponents_of_degree(d - 1, degree - first):
            yield (first,) + rest


def _box_quotient_dimension(
    generators, d: int, box_bound: int, caps: ResourceCaps
) -> int:
    """Dimension of (box algebra)/(ideal image), by exact rank.

    Monomials with any exponent above the bound are discarded during
    multiplication, i.e. the computation happens modulo the pure powers
    Z_i^(box_bound+1); the ideal must contain those powers for the answer
    to equal the dimension of the full quotient ring.
    """
    caps.check("max_box", (box_bound + 1) ** d)
    cols = _box_columns(d, box_bound)
    col_index = {b: i for i, b in enumerate(cols)}
    gen_terms = [_z_exponents(g, d) for g in generators]
    caps.check("max_products", len(cols) * max(1, len(gen_terms)))
    rows = []
    for terms in gen_terms:
        for m in cols:
            row: dict = {}
            for exp, c in terms:
                target = tuple(me + ee for me, ee in zip(m, exp))
                if any(t > box_bound for t in target):
                    continue
                ci = col_index[target]
                s = row.get(ci, 0) + c
                if s:
                    row[ci] = s
                else:
                    row.pop(ci, None)
            if row:
                rows.append(row)
    return len(cols) - rank_of(rows)


def quotient_dimension(d: int, k: int, caps: ResourceCaps | None = None) -> int:
    """dim of the box algebra modulo the elementary symmetric image.

    Independent counterpart of perp_basis: the two must agree for any
    zero-dimensional ideal, here the symmetric-plus-powers ideal.
    """
    caps = caps or DEFAULT_CAPS
    gens = [elementary_symmetric(range(1, d + 1), j) for j in range(1, d + 1)]
    return _box_quotient_dimension(gens, d, k, caps)


def dcp_quotient_dimension(mu: Partition, caps: ResourceCaps | None = None) -> int:
    """Quotient dimension for a partial-symmetric ideal, box bound d-1.

    Valid because Z_i^d always lies in the ideal (it contains all full
    elementary symmetric polynomials, and Z_i^d reduces against them).
    """
    caps = caps or DEFAULT_CAPS
    mu = mu if isinstance(mu, Partition) else Partition.of(mu)
    return _box_quotient_dimension(
        dcp_presentation(mu).generators, mu.d, mu.d - 1, caps
    )


def closed_form_dimension(d: int, k: int) -> int:
    """d! / ((q!)^(k+1-r) ((q+1)!)^r) with d = q(k+1) + r."""
    q, r = divmod(d, k + 1)
    return factorial(d) // (factorial(q) ** (k + 1 - r) * factorial(q + 1) ** r)


# ---------------------------------------------------------------------------
# ideal membership and the two-presentation equality


def ideal_membership(
    p: Poly,
    presentation: IdealPresentation,
    degree_cap: int | None = None,
    caps: ResourceCaps | None = None,
) -> bool:
    """Bounded-degree linear certificate that p lies in the ideal.

    True means p is an exact linear combination of monomial multiples m*g of
    the generators with deg(m*g) <= degree_cap.  False only means "not
    certified within the cap", never a disproof.  Homogeneous inputs are
    tested degree by degree, which is equivalent and much smaller.
    """
    caps = caps or DEFAULT_CAPS
    if degree_cap is None:
        degree_cap = caps.membership_degree_cap
    if p.is_zero:
        return True
    d = presentation.nvars
    _z_exponents(p, d)  # validates the variable universe

    by_degree: dict[int, dict] = {}
    for mono, c in p.terms.items():
        deg = sum(e for _, e in mono)
        by_degree.setdefault(deg, {})[mono] = c
    if all(g.is_homogeneous(g.total_degree()) for g in presentation.generators):
        # the bounded span is graded, so each homogeneous part certifies alone
        if max(by_degree) > degree_cap:
            return False
        return all(
            _graded_membership(Poly(part), deg, presentation, caps)
            for deg, part in by_degree.items()
        )
    return _general_membership(p, presentation, degree_cap, caps)


def _graded_membership(
    part: Poly, degree: int, presentation: IdealPresentation, caps: ResourceCaps
) -> bool:
    d = presentation.nvars
    cols = {exp: i for i, exp in enumerate(sorted(_exponents_of_degree(d, degree)))}
    rows = []
    for gen in presentation.generators:
        gd = gen.total_degree()
        if gd > degree:
            continue
        terms = _z_exponents(gen, d)
        count = comb(degree - gd + d - 1, d - 1)
        caps.check("max_products", len(rows) + count)
        for m in _exponents_of_degree(d, degree - gd):
            row: dict = {}
            for exp, c in terms:
                ci = cols[tuple(me + ee for me, ee in zip(m, exp))]
                s = row.get(ci, 0) + c
                if s:
                    row[ci] = s
                else:
                    row.pop(ci, None)
            if row:
                rows.append(row)
    target = {cols[exp]: c for exp, c in _z_exponents(part, d)}
    return echelon_of(rows).contains(target)


def _general_membership(
    p: Poly, presentation: IdealPresentation, degree_cap: int, caps: ResourceCaps
) -> bool:
    if p.total_degree() > degree_cap:
        return False
    d = presentation.nvars
    all_monos = [
        exp
        for deg in range(degree_cap + 1)
        for exp in sorted(_exponents_of_degree(d, deg))
    ]
    cols = {exp: i for i, exp in enumerate(all_monos)}
    rows = []
    for gen in presentation.generators:
        gd = gen.total_degree()
        terms = _z_exponents(gen, d)
        for deg in range(degree_cap - gd + 1):
            for m in _exponents_of_degree(d, deg):
                row: dict = {}
                for exp, c in terms:
                    ci = cols[tuple(me + ee for me, ee in zip(m, exp))]
                    s = row.get(ci, 0) + c
                    if s:
                        row[ci] = s
                    else:
                        row.pop(ci, None)
                if row:
                    rows.append(row)
                caps.check("max_products", len(rows))
    target = {cols[exp]: c for exp, c in _z_exponents(p, d)}
    return echelon_of(rows).contains(target)


@dataclass
class DcpEqualityReport:
    d: int
    k: int
    degree_cap: int
    uncertified_forward: list   # ik generators not certified in the dcp ideal
    uncertified_backward: list  # dcp generators not certified in the ik ideal

    @property
    def passed(self) -> bool:
        return not self.uncertified_forward and not self.uncertified_backward


def verify_dcp_equality(
    d: int, k: int, degree_cap: int | None = None, caps: ResourceCaps | None = None
) -> DcpEqualityReport:
    """Certify both inclusions between the two ideal presentations.

    Each generator of either presentation is tested for bounded-degree
    membership in the other ideal; uncertified generators are reported by
    their canonical rendering.
    """
    caps = caps or DEFAULT_CAPS
    if degree_cap is None:
        degree_cap = d * (k + 1)
    ik = ik_presentation(d, k)
    dcp = dcp_presentation(balanced_partition(d, k))
    forward = [
        g.render() for g in ik.generators if not ideal_membership(g, dcp, degree_cap, caps)
    ]
    backward = [
        g.render() for g in dcp.generators if not ideal_membership(g, ik, degree_cap, caps)
    ]
    return DcpEqualityReport(d, k, degree_cap, forward, backward)


# ---------------------------------------------------------------------------
# spanning and block surjectivity


def matching_order(mu: Partition) -> int | None:
    """The truncation order k whose balanced partition equals mu, if any."""
    for k in range(mu.d):
        if balanced_partition(mu.d, k) == mu:
            return k
    return None


@dataclass
class SpanningReport:
    partition: Partition
    tableau_count: int
    annihilated: bool
    rank: int
    expected_dimension: int
    route: str

    @property
    def passed(self) -> bool:
        return self.annihilated and self.rank == self.expected_dimension


def verify_spanning(mu, caps: ResourceCaps | None = None) -> SpanningReport:
    """Check that derivatives of the column Vandermondes span the solutions.

    Applies every monomial differential operator up to the degree of the
    Vandermonde product to each standard tableau's product, and compares the
    exact rank of the resulting family with the solution-space dimension
    (computed by the operator-kernel route when the partition is balanced,
    by the quotient route otherwise).  Operators beyond the degree kill the
    polynomial, so the budget is complete.
    """
    caps = caps or DEFAULT_CAPS
    mu = mu if isinstance(mu, Partition) else Partition.of(mu)
    d = mu.d
    tableaux = enum_standard_tableaux(mu, caps)
    deltas = [tableau_vandermonde(t) for t in tableaux]
    gens = dcp_presentation(mu).generators
    annihilated = all(
        apply_poly_operator(g, delta).is_zero for g in gens for delta in deltas
    )
    family = []
    for delta in deltas:
        budget = delta.total_degree()
        for deg in range(budget + 1):
            for exp in _exponents_of_degree(d, deg):
                op = Poly.monomial(
                    [(z_var(i + 1), e) for i, e in enumerate(exp) if e]
                )
                image = apply_poly_operator(op, delta)
                if not image.is_zero:
                    family.append(image)
    caps.check("max_products", len(family))
    rank = span_rank(family)
    k = matching_order(mu)
    if k is not None:
        expected = len(perp_basis(ik_presentation(d, k), k, caps))
        route = f"kernel(k={k})"
    else:
        expected = dcp_quotient_dimension(mu, caps)
        route = "quotient"
    return SpanningReport(mu, len(tableaux), annihilated, rank, expected, route)


def _equal_blocks(elements: tuple, size: int):
    """Unordered partitions of the elements into blocks of the given size."""
    if not elements:
        yield ()
        return
    first, rest = elements[0], elements[1:]
    for others in combinations(rest, size - 1):
        block = (first,) + others
        remaining = tuple(x for x in rest if x not in others)
        for tail in _equal_blocks(remaining, size):
            yield (block,) + tail


def _block_product(blocks, alphas, k: int, d: int) -> Poly:
    """Product of slot-relabelled Wronskians over disjoint slot blocks."""
    from .polynomials import slot_var as sv

    result = Poly.constant(1)
    for block, alpha in zip(blocks, alphas):
        w = wronskian(alpha, len(block))
        mapping = {}
        for v in w.variables():
            mapping[v] = Poly.variable(sv(block[v.i - 1], v.j))
        result = result * w.substitute(mapping)
    return result


@dataclass
class BlockSurjectivityReport:
    d: int
    k: int
    partition_count: int
    rank: int
    expected_dimension: int
    escalated: bool

    @property
    def passed(self) -> bool:
        return self.rank == self.expected_dimension


def verify_block_surjectivity(
    d: int, k: int, caps: ResourceCaps | None = None
) -> BlockSurjectivityReport:
    """Products of block invariants span the whole invariant space.

    The slots 1..d are partitioned into q blocks of size k+1 and one block
    of size r (d = q(k+1) + r); each block carries its canonical Wronskian
    basis, and all products over all unordered partitions are collected.
    Reordering within a block only changes basis, and permuting equal-size
    blocks fixes the product, so unordered partitions suffice; if the rank
    nevertheless fell short, the check escalates to all permutations.
    """
    caps = caps or DEFAULT_CAPS
    if d < k + 1:
        raise IndexOutOfRangeError(f"need d >= k+1, got d={d} k={k}")
    q, r = divmod(d, k + 1)
    slots = tuple(range(1, d + 1))

    partitions = []
    if r:
        for small in combinations(slots, r):
            remaining = tuple(x for x in slots if x not in small)
            for big_blocks in _equal_blocks(remaining, k + 1):
                partitions.append(big_blocks + (small,))
    else:
        partitions.extend(_equal_blocks(slots, k + 1))

    def family_for(parts) -> list[Poly]:
        polys = []
        for blocks in parts:
            alpha_pools = [canonical_wronskian_exponents(len(b)) for b in blocks]
            for alphas in product(*alpha_pools):
                polys.append(_block_product(blocks, alphas, k, d))
        return polys

    family = family_for(partitions)
    caps.check("max_products", len(family))
    tensors = [tensor_from_multilinear(p, d, k) for p in family]
    cols = sorted(product(range(k + 1), repeat=d))
    col_index = {idx: i for i, idx in enumerate(cols)}
    rank = rank_of({col_index[idx]: c for idx, c in t.coords.items()} for t in tensors)
    expected = quotient_dimension(d, k, caps)

    escalated = False
    if rank < expected:
        escalated = True
        from itertools import permutations

        all_parts = []
        for sigma in permutations(slots):
            blocks = [tuple(sorted(sigma[i * (k + 1) : (i + 1) * (k + 1)])) for i in range(q)]
            if r:
                blocks.append(tuple(sorted(sigma[q * (k + 1) :])))
            all_parts.append(tuple(blocks))
        family = family_for(all_parts)
        tensors = [tensor_from_multilinear(p, d, k) for p in family]
        rank = rank_of(
            {col_index[idx]: c for idx, c in t.coords.items()} for t in tensors
        )
    return BlockSurjectivityReport(d, k, len(partitions), rank, expected, escalated)
