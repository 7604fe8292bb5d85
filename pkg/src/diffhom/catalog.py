"""Enumeration of generator indices and the finite generator catalog.

The quotient of the degree-d invariants by those of lower derivation order
has an explicit basis of Wronskian determinants.  Two index sets select it:

  * model case: tuples (a_1..a_d) admitting a slot i with a_i = 0 whose
    deletion leaves a staircase-bounded tuple (a_j <= j-1 after removal);
  * general case: nested tuples (one strictly increasing run of exponents
    per variable) satisfying the bound and witness conditions below.

Every nested index produces one generator: the d x d determinant whose
column s is the a_s-fold transpose-shift of the jet coordinate vector of
the variable assigned to slot s by the sorted slot-to-variable map.  The
catalog collects the generators in degrees 1..k+1, and the verification
routines check that they span, are independent modulo lower order, and are
minimal.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product
from math import factorial

from .errors import InvalidCompositionError, InvalidIndexError
from .jets import JetContext, diff_homog_basis
from .polynomials import Poly, determinant, falling_factorial, jet_var
from .resources import DEFAULT_CAPS, ResourceCaps
from .spans import monomial_columns, poly_row, rank_modulo, span_rank
from .linalg import echelon_of


# ---------------------------------------------------------------------------
# model-case index tuples


@dataclass(frozen=True)
class IndexTuple:
    """A model-case index with the largest certifying slot as witness."""

    alpha: tuple
    witness: int  # 1-based slot index with alpha[witness-1] == 0


def _deletion_ok(alpha: tuple, i: int) -> bool:
    """After deleting slot i (1-based), is every entry at most position-1?"""
    hat = alpha[: i - 1] + alpha[i:]
    return all(a <= j for j, a in enumerate(hat))


def is_model_index(alpha: tuple) -> bool:
    return any(
        a == 0 and _deletion_ok(alpha, i) for i, a in enumerate(alpha, start=1)
    )


def model_witness(alpha: tuple) -> int | None:
    """Largest slot with a zero entry that certifies membership."""
    for i in range(len(alpha), 0, -1):
        if alpha[i - 1] == 0 and _deletion_ok(alpha, i):
            return i
    return None


def top_order_indices(d: int, caps: ResourceCaps | None = None) -> list[IndexTuple]:
    """All model-case index tuples for degree d, lexicographically ordered.

    The search box has a_j <= j-1 in slot j: an entry can only exceed its
    deleted-tuple bound by one, and only in the deleted slot itself, where
    it is zero.  Witnesses are checked to coincide with the last zero slot,
    which the partition into classes relies on.
    """
    caps = caps or DEFAULT_CAPS
    caps.check("max_enumeration", factorial(d))
    out = []
    for alpha in product(*(range(j) for j in range(1, d + 1))):
        w = model_witness(alpha)
        if w is None:
            continue
        last_zero = max(i for i, a in enumerate(alpha, start=1) if a == 0)
        if w != last_zero:
            raise InvalidIndexError(
                f"witness {w} of {alpha} differs from last zero slot {last_zero}"
            )
        out.append(IndexTuple(alpha, w))
    return out


def model_class_sizes(d: int, caps: ResourceCaps | None = None) -> dict:
    """Cardinalities of the classes by witness slot (class 1 is empty)."""
    sizes = {i: 0 for i in range(1, d + 1)}
    for idx in top_order_indices(d, caps):
        sizes[idx.witness] += 1
    return sizes


# ---------------------------------------------------------------------------
# general-case nested indices


@dataclass(frozen=True)
class NestedIndex:
    """One exponent run per variable; empty runs are empty tuples."""

    runs: tuple  # tuple of tuples, length n+1

    @property
    def lengths(self) -> tuple:
        return tuple(len(r) for r in self.runs)

    @property
    def degree(self) -> int:
        return sum(self.lengths)

    @property
    def flat(self) -> tuple:
        return tuple(a for run in self.runs for a in run)

    def prefix_sums(self) -> tuple:
        total, out = 0, []
        for r in self.lengths:
            total += r
            out.append(total)
        return tuple(out)

    def class_index(self) -> int | None:
        """Largest variable whose run starts with 0."""
        last = None
        for i, run in enumerate(self.runs):
            if run and run[0] == 0:
                last = i
        return last

    def __str__(self) -> str:
        return "(" + ";".join(",".join(map(str, r)) if r else "-" for r in self.runs) + ")"


def _bounds_ok(idx: NestedIndex) -> bool:
    """Strictly increasing runs bounded by the prefix sums."""
    prefix = idx.prefix_sums()
    for i, run in enumerate(idx.runs):
        if not run:
            continue
        if any(run[t] >= run[t + 1] for t in range(len(run) - 1)):
            return False
        if run[0] < 0 or run[-1] >= prefix[i]:
            return False
    return True


def _witness_ok(idx: NestedIndex, i: int) -> bool:
    run = idx.runs[i]
    prefix = idx.prefix_sums()
    if not run or run[0] != 0:
        return False
    if len(run) > 1 and not run[-1] < prefix[i] - 1:
        return False
    for j in range(i + 1, len(idx.runs)):
        later = idx.runs[j]
        if later and not later[-1] < prefix[j] - 1:
            return False
    return True


def is_nested_index(idx: NestedIndex) -> bool:
    if not _bounds_ok(idx):
        return False
    return any(_witness_ok(idx, i) for i in range(len(idx.runs)))


def top_order_nested_indices(
    n: int, d: int, caps: ResourceCaps | None = None
) -> list[NestedIndex]:
    """All nested indices for n+1 variables in degree d, deterministic order.

    Enumerates compositions of d first, then the admissible increasing runs;
    for each surviving index the class (last run starting with zero) is
    checked to be the last slot where the full witness condition holds.
    The degree-one family is built directly and cross-checked against the
    predicate.
    """
    caps = caps or DEFAULT_CAPS
    if d == 1:
        out = []
        for i in range(n + 1):
            runs = tuple((0,) if j == i else () for j in range(n + 1))
            idx = NestedIndex(runs)
            if not is_nested_index(idx):
                raise InvalidIndexError(f"degree-one index {idx} fails the predicate")
            out.append(idx)
        return out

    def compositions(total: int, parts: int):
        if parts == 1:
            yield (total,)
            return
        for first in range(total + 1):
            for rest in compositions(total - first, parts - 1):
                yield (first,) + rest

    out = []
    count = 0
    for comp in compositions(d, n + 1):
        prefix, s = [], 0
        for r in comp:
            s += r
            prefix.append(s)
        pools = []
        for i, r in enumerate(comp):
            pools.append([()] if r == 0 else list(combinations(range(prefix[i]), r)))
        for runs in product(*pools):
            count += 1
            caps.check("max_enumeration", count)
            idx = NestedIndex(tuple(runs))
            witnesses = [i for i in range(n + 1) if _witness_ok(idx, i)]
            if not witnesses:
                continue
            if max(witnesses) != idx.class_index():
                raise InvalidIndexError(
                    f"last witness {max(witnesses)} of {idx} differs from class index"
                )
            out.append(idx)
    return out


def nested_count_formula(n: int, d: int) -> int:
    """N(N+1)/2 * (N+1)^(d-2) for d >= 2, and N+1 in degree one."""
    if d == 1:
        return n + 1
    return n * (n + 1) // 2 * (n + 1) ** (d - 2)


# ---------------------------------------------------------------------------
# the composition bijection


def function_to_composition(f, n: int) -> tuple:
    """Fiber counts of a non-decreasing function into {0..n}."""
    values = list(f)
    if any(values[i] > values[i + 1] for i in range(len(values) - 1)):
        raise InvalidCompositionError(f"{values} is not non-decreasing")
    if values and not (0 <= values[0] and values[-1] <= n):
        raise InvalidCompositionError(f"{values} leaves the range 0..{n}")
    counts = [0] * (n + 1)
    for v in values:
        counts[v] += 1
    return tuple(counts)


def composition_to_function(m) -> tuple:
    """The sorted function realizing the given fiber counts."""
    counts = tuple(m)
    if any(c < 0 for c in counts):
        raise InvalidCompositionError(f"negative count in {counts}")
    return tuple(v for v, c in enumerate(counts) for _ in range(c))


# ---------------------------------------------------------------------------
# generators


def build_generator(idx: NestedIndex, n: int, d: int) -> Poly:
    """The determinant generator attached to a nested index.

    Column s holds the a_s-fold transpose-shift of the coordinate vector
    (X_v^(0), ..., X_v^(d-1)) of the variable v assigned to slot s; the
    result is sign-normalized so its leading coefficient is positive.  An
    identically zero determinant signals an inadmissible index and raises.
    """
    if len(idx.runs) != n + 1 or idx.degree != d:
        raise InvalidIndexError(f"{idx} does not fit n={n}, d={d}")
    if not _bounds_ok(idx):
        raise InvalidIndexError(f"{idx} violates the run bounds")
    variables = composition_to_function(idx.lengths)
    flat = idx.flat
    matrix = []
    for t in range(d):
        row = []
        for s in range(d):
            a = flat[s]
            if t >= a:
                row.append(
                    Poly.variable(jet_var(variables[s], t - a)).scale(
                        falling_factorial(t, a)
                    )
                )
            else:
                row.append(Poly.zero())
        matrix.append(row)
    poly = determinant(matrix)
    if poly.is_zero:
        raise InvalidIndexError(f"index {idx} produced the zero generator")
    return poly.sign_normalized()


@dataclass(frozen=True)
class GeneratorRecord:
    degree: int
    order: int
    index: NestedIndex
    poly: Poly


@dataclass
class GeneratorCatalog:
    """Generators of the order-filtered invariant algebra, by degree."""

    n: int
    k: int
    families: tuple  # families[i] lists the degree-(i+1) records

    def family(self, degree: int) -> tuple:
        return self.families[degree - 1]

    def counts(self) -> list:
        return [len(f) for f in self.families]

    def all_records(self) -> list:
        return [rec for fam in self.families for rec in fam]


def build_catalog(n: int, k: int, caps: ResourceCaps | None = None) -> GeneratorCatalog:
    caps = caps or DEFAULT_CAPS
    families = []
    for degree in range(1, k + 2):
        records = []
        for idx in top_order_nested_indices(n, degree, caps):
            poly = build_generator(idx, n, degree)
            records.append(
                GeneratorRecord(degree, poly.derivation_order(), idx, poly)
            )
        families.append(tuple(records))
    return GeneratorCatalog(n, k, tuple(families))


def weighted_signature(n: int, k: int) -> list:
    """(weight, multiplicity) pairs of the generator degrees.

    One weight-1 coordinate per variable, then the nested-index counts in
    each higher degree up to k+1.
    """
    sig = [(1, n + 1)]
    for degree in range(2, k + 2):
        sig.append((degree, nested_count_formula(n, degree)))
    return sig


# ---------------------------------------------------------------------------
# verification


@dataclass
class QuotientBasisReport:
    n: int
    d: int
    full_dimension: int
    lower_dimension: int
    family_size: int
    spans: bool
    independent: bool

    @property
    def count_matches(self) -> bool:
        return self.family_size == self.full_dimension - self.lower_dimension

    @property
    def passed(self) -> bool:
        return self.spans and self.independent and self.count_matches


def verify_quotient_basis(
    n: int, d: int, caps: ResourceCaps | None = None
) -> QuotientBasisReport:
    """The nested-index generators induce a basis of the top-order quotient.

    Checks that the generators together with the order-(d-2) invariants span
    the order-(d-1) invariants, that they are independent modulo the lower
    space, and that their number equals the dimension gap.
    """
    caps = caps or DEFAULT_CAPS
    full = diff_homog_basis(JetContext(n, d - 1, d), caps)
    lower_elements = (
        diff_homog_basis(JetContext(n, d - 2, d), caps).elements if d >= 2 else []
    )
    family = [
        build_generator(idx, n, d) for idx in top_order_nested_indices(n, d, caps)
    ]

    columns = monomial_columns(full.elements + lower_elements + family)
    full_ech = echelon_of(poly_row(p, columns) for p in full.elements)
    combined = echelon_of(poly_row(p, columns) for p in lower_elements + family)
    spans = (
        combined.rank == full_ech.rank
        and all(full_ech.contains(poly_row(p, columns)) for p in lower_elements + family)
    )
    independent = rank_modulo(family, lower_elements) == len(family)
    return QuotientBasisReport(
        n=n,
        d=d,
        full_dimension=full.dimension,
        lower_dimension=len(lower_elements),
        family_size=len(family),
        spans=spans,
        independent=independent,
    )


@dataclass
class DegreeGenerationEntry:
    degree: int
    product_count: int
    rank: int
    invariant_dimension: int
    contained: bool

    @property
    def passed(self) -> bool:
        return self.rank == self.invariant_dimension and self.contained


@dataclass
class FiniteGenerationReport:
    n: int
    k: int
    entries: list

    @property
    def passed(self) -> bool:
        return all(e.passed for e in self.entries)


def _degree_products(catalog: GeneratorCatalog, degree: int) -> list[Poly]:
    """All monomials in the catalog generators of the given total degree."""
    records = catalog.all_records()
    products: list[Poly] = []

    def extend(start: int, remaining: int, current: Poly):
        if remaining == 0:
            products.append(current)
            return
        for idx in range(start, len(records)):
            rec = records[idx]
            if rec.degree > remaining:
                continue
            extend(idx, remaining - rec.degree, current * rec.poly)

    extend(0, degree, Poly.constant(1))
    return products


def degree_generation_entry(
    n: int, k: int, degree: int, caps: ResourceCaps | None = None,
    catalog: GeneratorCatalog | None = None,
) -> DegreeGenerationEntry:
    """Compare the span of degree-d generator monomials with the invariants."""
    caps = caps or DEFAULT_CAPS
    if catalog is None:
        catalog = build_catalog(n, k, caps)
    basis = diff_homog_basis(JetContext(n, k, degree), caps)
    products = _degree_products(catalog, degree)
    caps.check("max_products", len(products))
    columns = monomial_columns(products + basis.elements)
    basis_ech = echelon_of(poly_row(p, columns) for p in basis.elements)
    contained = all(basis_ech.contains(poly_row(p, columns)) for p in products)
    return DegreeGenerationEntry(
        degree=degree,
        product_count=len(products),
        rank=span_rank(products) if products else 0,
        invariant_dimension=basis.dimension,
        contained=contained,
    )


def verify_finite_generation(
    n: int, k: int, d_max: int, caps: ResourceCaps | None = None
) -> FiniteGenerationReport:
    """Monomials in the catalog generators span every graded invariant space.

    For each degree up to d_max, compares the exact span of all generator
    monomials of that degree with the independently computed invariant
    space.
    """
    caps = caps or DEFAULT_CAPS
    catalog = build_catalog(n, k, caps)
    entries = [
        degree_generation_entry(n, k, degree, caps, catalog)
        for degree in range(1, d_max + 1)
    ]
    return FiniteGenerationReport(n, k, entries)


@dataclass
class MinimalityDegreeEntry:
    degree: int
    orders_exact: bool
    independent_modulo_lower: bool

    @property
    def passed(self) -> bool:
        return self.orders_exact and self.independent_modulo_lower


@dataclass
class MinimalityReport:
    n: int
    k: int
    entries: list

    @property
    def passed(self) -> bool:
        return all(e.passed for e in self.entries)


def verify_minimality(n: int, k: int, caps: ResourceCaps | None = None) -> MinimalityReport:
    """No generator is a polynomial in the others.

    Products of two or more generators with degrees summing to i have every
    factor of order at most its degree minus one, hence order at most i-2;
    independence of the degree-i family modulo the order-(i-2) invariants
    then rules out any relation that lowers a generator's order.
    """
    caps = caps or DEFAULT_CAPS
    catalog = build_catalog(n, k, caps)
    entries = []
    for degree in range(2, k + 2):
        orders_exact = all(
            rec.order == degree - 1 for rec in catalog.family(degree)
        ) and all(
            rec.order <= rec.degree - 1 for rec in catalog.all_records()
        )
        quotient = verify_quotient_basis(n, degree, caps)
        entries.append(
            MinimalityDegreeEntry(
                degree=degree,
                orders_exact=orders_exact,
                independent_modulo_lower=quotient.independent,
            )
        )
    return MinimalityReport(n, k, entries)
