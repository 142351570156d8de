"""Determinant constructors for polynomial tau-functions.

Single-component KP tau-functions come from a partition lambda and one shift
vector per determinant column:

    tau_kp(lambda, C) = det( s_{l_j + i - j}(t + c_j) )_{i,j=1..m}

Multicomponent tau-functions come from generating functions

    h_j(t) = sum_a b_j^(a) * s_{M_j^(a)}(t^(a) + c_j^(a)),

one per determinant column.  The entry block for component a consists of the
pure t_1^(a)-derivatives of h_j of orders m_a, m_a - 1, ..., 1 (top to
bottom), where (m_1, ..., m_s) is the charge label; labels range over the
polyhedron m_a >= 0, sum m_a = column count.

The (n_1, ..., n_s)-reduced constructor widens each column into the tower
h_j, D h_j, ..., D^{k_j} h_j under D = sum_a d/dt_{n_a}^(a), with k_j just
large enough to exhaust the column (k_j = max_a ceil(M_j^(a)/n_a) - 1 over
components with b != 0).

The AKNS constructor is the two-component (1,1)-reduced family written in
the half-difference variables x_i = (t_i^(1) - t_i^(2))/2: a K x K
determinant whose top p rows are s_{M_1 - u - v + 1}(x + c^(1)) and whose
remaining rows are s_{M_2 - u - v + 1}(-x + c^(2)).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations_with_replacement
from typing import Iterable, Iterator, Mapping, Sequence

from .partitions import Partition, expected_shift_lengths, is_n_periodic
from .polycore import Family, Poly, RationalLike, VarId, xvar
from .schur import ShiftLike, ShiftVector, schur_of_args, schur_shifted

ChargeVector = tuple[int, ...]


def det_poly(rows: Sequence[Sequence[Poly]]) -> Poly:
    """Determinant of a square Poly matrix by memoized Laplace expansion."""
    m = len(rows)
    if m == 0:
        raise ValueError("determinant of an empty matrix needs an ambient; use const 1")
    ncomp = rows[0][0].ncomp
    for row in rows:
        if len(row) != m:
            raise ValueError("matrix must be square")
    full = (1 << m) - 1
    memo: dict[tuple[int, int], Poly] = {}

    def expand(i: int, cols: int) -> Poly:
        if i == m:
            return Poly.const(1, ncomp)
        key = (i, cols)
        hit = memo.get(key)
        if hit is not None:
            return hit
        total = Poly.zero(ncomp)
        sign = 1
        rest = cols
        while rest:
            low = rest & -rest
            j = low.bit_length() - 1
            entry = rows[i][j]
            if entry.terms:
                sub = expand(i + 1, cols & ~low)
                if sub.terms:
                    total = total + (entry * sub).scale(sign)
            sign = -sign
            rest ^= low
        memo[key] = total
        return total

    return expand(0, full)


# -- single-component KP -------------------------------------------------------


def tau_kp(
    partition: Partition | Iterable[int], shifts: Sequence[ShiftLike] | None = None
) -> Poly:
    """KP tau-function for a partition with per-column shift vectors.

    ``shifts[j]`` may be shorter than its expected length l_j + m - j (it is
    zero-padded) but not longer; ``None`` means all zero.
    """
    p = Partition.coerce(partition)
    m = len(p)
    if m == 0:
        return Poly.const(1)
    lengths = expected_shift_lengths(p)
    columns: list[ShiftVector] = []
    if shifts is None:
        columns = [ShiftVector()] * m
    else:
        if len(shifts) > m:
            raise ValueError(f"expected at most {m} shift vectors, got {len(shifts)}")
        for j in range(m):
            cv = ShiftVector.coerce(shifts[j]) if j < len(shifts) else ShiftVector()
            if len(cv) > lengths[j]:
                raise ValueError(
                    f"column {j + 1} shift vector longer than {lengths[j]} entries"
                )
            columns.append(cv)
    rows = [
        [
            schur_shifted(p.parts[j] + (i + 1) - (j + 1), columns[j])
            for j in range(m)
        ]
        for i in range(m)
    ]
    return det_poly(rows)


# -- column specifications for multicomponent constructors ---------------------


@dataclass(frozen=True)
class HTerm:
    """One component's summand in a column generating function."""

    degree: int
    coeff: Fraction
    shift: ShiftVector = field(default_factory=ShiftVector)

    def __post_init__(self):
        if self.degree < 1:
            raise ValueError("degree must be >= 1")
        object.__setattr__(self, "coeff", Fraction(self.coeff))
        object.__setattr__(self, "shift", ShiftVector.coerce(self.shift))


@dataclass(frozen=True)
class HSpec:
    """Per-component data (degree, leading coefficient, shift) for one column."""

    terms: tuple[HTerm, ...]

    def __post_init__(self):
        if not self.terms:
            raise ValueError("need data for at least one component")
        if all(t.coeff == 0 for t in self.terms):
            raise ValueError("at least one component coefficient must be nonzero")

    @classmethod
    def make(cls, components: Sequence[tuple[int, RationalLike, ShiftLike]]) -> "HSpec":
        return cls(tuple(HTerm(d, Fraction(b), ShiftVector.coerce(c)) for d, b, c in components))

    @property
    def ncomp(self) -> int:
        return len(self.terms)

    def generating_poly(self, ncomp: int) -> Poly:
        """h(t) = sum_a b_a * s_{M_a}(t^(a) + c_a)."""
        if self.ncomp != ncomp:
            raise ValueError(f"spec has {self.ncomp} components, ambient wants {ncomp}")
        total = Poly.zero(ncomp)
        for a, term in enumerate(self.terms, start=1):
            if term.coeff:
                total = total + schur_shifted(
                    term.degree, term.shift, component=a, ncomp=ncomp
                ).scale(term.coeff)
        return total


def compute_kj(spec: HSpec, n_parts: Sequence[int]) -> int:
    """Largest shift power before the column dies: max ceil(M_a/n_a) - 1.

    Components with zero coefficient do not count.
    """
    if len(n_parts) != spec.ncomp:
        raise ValueError("n_parts length must match the spec's component count")
    best: int | None = None
    for term, n_a in zip(spec.terms, n_parts):
        if n_a < 1:
            raise ValueError("reduction orders must be >= 1")
        if term.coeff:
            k = -(-term.degree // n_a) - 1
            best = k if best is None else max(best, k)
    if best is None:
        raise ValueError("all component coefficients vanish")
    return best


def apply_D(p: Poly, j: int, n_parts: Sequence[int]) -> Poly:
    """D_j p = sum_a dp/dt_{j * n_a}^(a)."""
    if j < 1:
        raise ValueError("D_j requires j >= 1")
    total = Poly.zero(p.ncomp)
    for a, n_a in enumerate(n_parts, start=1):
        total = total + p.diff(VarId(Family.T, a, j * n_a))
    return total


# -- charge-labelled collections ----------------------------------------------


def charge_vectors(total: int, ncomp: int) -> Iterator[ChargeVector]:
    """All labels (m_1, ..., m_s) with m_a >= 0 and sum = total."""
    if ncomp == 1:
        if total >= 0:
            yield (total,)
        return
    for cut in combinations_with_replacement(range(total + 1), ncomp - 1):
        bounds = (0,) + cut + (total,)
        yield tuple(bounds[i + 1] - bounds[i] for i in range(ncomp))


@dataclass
class TauCollection:
    """Tau-functions indexed by charge vectors on one level of the lattice.

    ``total`` is the common charge sum; zero entries are omitted and read
    back as the zero polynomial.
    """

    total: int
    ncomp: int
    entries: dict[ChargeVector, Poly]

    def __post_init__(self):
        for label, poly in self.entries.items():
            if len(label) != self.ncomp:
                raise ValueError(f"label {label} has wrong arity")
            if any(x < 0 for x in label) or sum(label) != self.total:
                raise ValueError(f"label {label} is outside the charge polyhedron")
            if not poly.terms:
                raise ValueError("store only nonzero entries")

    def get(self, label: Sequence[int]) -> Poly:
        key = tuple(label)
        if len(key) != self.ncomp:
            raise ValueError(f"label {key} has wrong arity")
        hit = self.entries.get(key)
        if hit is not None:
            return hit
        some = next(iter(self.entries.values()), None)
        return Poly.zero(some.ncomp if some is not None else 1)

    def labels(self) -> list[ChargeVector]:
        return sorted(self.entries)

    def to_json_obj(self) -> dict:
        return {
            "total": self.total,
            "ncomp": self.ncomp,
            "entries": [
                {"charge": list(label), "poly": self.entries[label].to_json_obj()}
                for label in self.labels()
            ],
        }


# -- multicomponent KP ---------------------------------------------------------


def _block_rows(
    columns: Sequence[Poly], charge: ChargeVector, ncomp: int
) -> list[list[Poly]]:
    """Rows of the charge-labelled determinant: per component a, the orders
    m_a, m_a - 1, ..., 1 of d/dt_1^(a) applied to every column."""
    rows: list[list[Poly]] = []
    for a in range(1, ncomp + 1):
        m_a = charge[a - 1]
        if m_a == 0:
            continue
        v = VarId(Family.T, a, 1)
        ders: list[list[Poly]] = []  # ders[p-1][col] = d^p col
        prev = list(columns)
        for _ in range(m_a):
            prev = [q.diff(v) for q in prev]
            ders.append(prev)
        for p in range(m_a, 0, -1):
            rows.append(ders[p - 1])
    return rows


def tau_mkp_entry(specs: Sequence[HSpec], charge: Sequence[int]) -> Poly:
    """One charge-labelled entry of the multicomponent KP collection.

    The label must sum to the number of columns; labels with a negative part
    are outside the polyhedron and give zero.
    """
    label = tuple(int(x) for x in charge)
    ncomp = len(label)
    m = len(specs)
    for spec in specs:
        if spec.ncomp != ncomp:
            raise ValueError("all specs must agree with the charge arity")
    if sum(label) != m:
        raise ValueError(f"charge {label} must sum to the column count {m}")
    if any(x < 0 for x in label):
        return Poly.zero(ncomp)
    if m == 0:
        return Poly.const(1, ncomp)
    columns = [spec.generating_poly(ncomp) for spec in specs]
    return det_poly(_block_rows(columns, label, ncomp))


def tau_mkp_collection(specs: Sequence[HSpec], ncomp: int | None = None) -> TauCollection:
    """All nonzero charge-labelled entries for the given columns."""
    if specs:
        s = specs[0].ncomp
    elif ncomp is not None:
        s = ncomp
    else:
        raise ValueError("empty spec list needs an explicit component count")
    m = len(specs)
    entries: dict[ChargeVector, Poly] = {}
    for label in charge_vectors(m, s):
        poly = tau_mkp_entry(specs, label)
        if poly.terms:
            entries[label] = poly
    return TauCollection(total=m, ncomp=s, entries=entries)


# -- n-KdV ----------------------------------------------------------------------


def tau_nkdv(
    partition: Partition | Iterable[int],
    n: int,
    shifts_by_class: Mapping[int, ShiftLike] | None = None,
) -> Poly:
    """n-KdV tau-function for an n-periodic partition.

    Row i uses the shift vector of the residue class (l_i - i + 1) mod n;
    missing classes read as zero shifts.  Raises for non-periodic input.
    """
    p = Partition.coerce(partition)
    if not is_n_periodic(p, n):
        raise ValueError(f"partition {p} is not {n}-periodic")
    m = len(p)
    if m == 0:
        return Poly.const(1)
    classes: dict[int, ShiftVector] = {}
    if shifts_by_class:
        for key, value in shifts_by_class.items():
            k = int(key)
            if not 0 <= k < n:
                raise ValueError(f"residue class {k} outside 0..{n - 1}")
            classes[k] = ShiftVector.coerce(value)
    row_shifts = [
        classes.get((p.parts[i - 1] - i + 1) % n, ShiftVector()) for i in range(1, m + 1)
    ]
    rows = [
        [
            schur_shifted(p.parts[i] + (j + 1) - (i + 1), row_shifts[i])
            for j in range(m)
        ]
        for i in range(m)
    ]
    return det_poly(rows)


# -- (n_1, ..., n_s)-KdV ---------------------------------------------------------


@dataclass(frozen=True)
class KdVProfile:
    """Reduction orders plus the column specs of a reduced collection."""

    n_parts: tuple[int, ...]
    specs: tuple[HSpec, ...]

    def __post_init__(self):
        if not self.n_parts:
            raise ValueError("need at least one reduction order")
        if any(n < 1 for n in self.n_parts):
            raise ValueError("reduction orders must be >= 1")
        if any(
            self.n_parts[i] < self.n_parts[i + 1] for i in range(len(self.n_parts) - 1)
        ):
            raise ValueError("reduction orders must be weakly decreasing")
        for spec in self.specs:
            if spec.ncomp != len(self.n_parts):
                raise ValueError("spec component count must match n_parts")
        if len(self.specs) >= sum(self.n_parts):
            raise ValueError("need fewer columns than the total reduction order")

    @property
    def ncomp(self) -> int:
        return len(self.n_parts)

    @property
    def r(self) -> int:
        return len(self.specs)

    def k_values(self) -> list[int]:
        return [compute_kj(spec, self.n_parts) for spec in self.specs]

    @property
    def total_charge(self) -> int:
        return self.r + sum(self.k_values())


def mnkdv_columns(profile: KdVProfile) -> list[Poly]:
    """Column polynomials h_j, D h_j, ..., D^{k_j} h_j for every spec."""
    cols: list[Poly] = []
    for spec, k in zip(profile.specs, profile.k_values()):
        h = spec.generating_poly(profile.ncomp)
        tower = h
        cols.append(tower)
        for _ in range(k):
            tower = apply_D(tower, 1, profile.n_parts)
            cols.append(tower)
    return cols


def tau_mnkdv_entry(profile: KdVProfile, charge: Sequence[int]) -> Poly:
    """One charge-labelled entry of the reduced collection."""
    label = tuple(int(x) for x in charge)
    if len(label) != profile.ncomp:
        raise ValueError("charge arity must match the profile")
    m = profile.total_charge
    if sum(label) != m:
        raise ValueError(f"charge {label} must sum to {m}")
    if any(x < 0 for x in label):
        return Poly.zero(profile.ncomp)
    if m == 0:
        return Poly.const(1, profile.ncomp)
    columns = mnkdv_columns(profile)
    return det_poly(_block_rows(columns, label, profile.ncomp))


def tau_mnkdv_collection(profile: KdVProfile) -> TauCollection:
    entries: dict[ChargeVector, Poly] = {}
    for label in charge_vectors(profile.total_charge, profile.ncomp):
        poly = tau_mnkdv_entry(profile, label)
        if poly.terms:
            entries[label] = poly
    return TauCollection(total=profile.total_charge, ncomp=profile.ncomp, entries=entries)


# -- bridges ---------------------------------------------------------------------


def kp_specs_from_partition(
    partition: Partition | Iterable[int], shifts: Sequence[ShiftLike] | None = None
) -> list[HSpec]:
    """Single-component column specs reproducing tau_kp(lambda, C).

    Column j carries degree l_j + m - j + 1 with unit coefficient; the
    column's d/dt_1 tower of orders m..1 then reproduces exactly the
    KP determinant entries s_{l_j + i - j}(t + c_j).
    """
    p = Partition.coerce(partition)
    m = len(p)
    out: list[HSpec] = []
    for j in range(1, m + 1):
        cv = ShiftVector.coerce(shifts[j - 1]) if shifts is not None else ShiftVector()
        out.append(HSpec.make([(p.parts[j - 1] + m - j + 1, 1, cv)]))
    return out


# -- AKNS -------------------------------------------------------------------------


def akns_tau(
    m1: int,
    m2: int,
    b1: RationalLike,
    b2: RationalLike,
    c1: ShiftLike,
    c2: ShiftLike,
    big_k: int,
    p: int,
) -> Poly:
    """AKNS tau-function tau^(p, K-p) in the x-variables.

    b1^p * b2^(K-p) times the K x K determinant whose first p rows are
    s_{m1 - u - v + 1}(x + c1) (u = 1..p) and whose last K - p rows are
    s_{m2 - u - v + 1}(-x + c2) (u = 1..K-p).  Zero whenever
    K > max(m1, m2); the label part p must lie in 0..K.
    """
    if m1 < 1 or m2 < 1:
        raise ValueError("degrees must be >= 1")
    if big_k < 1:
        raise ValueError("K must be >= 1")
    if not 0 <= p <= big_k:
        return Poly.zero(1)
    cv1 = ShiftVector.coerce(c1)
    cv2 = ShiftVector.coerce(c2)
    b1f = Fraction(b1)
    b2f = Fraction(b2)
    if (p > 0 and not b1f) or (p < big_k and not b2f):
        return Poly.zero(1)

    def args(shift: ShiftVector, sign: int, upto: int) -> list[Poly]:
        gs = []
        for i in range(1, upto + 1):
            gs.append(xvar(i).scale(sign) + Poly.const(shift.get(i)))
        return gs or [Poly.zero(1)]

    s_plus = schur_of_args(max(m1 - 1, 0), args(cv1, +1, max(m1 - 1, 0)))
    s_minus = schur_of_args(max(m2 - 1, 0), args(cv2, -1, max(m2 - 1, 0)))

    def entry(table: list[Poly], idx: int) -> Poly:
        if idx < 0 or idx >= len(table):
            return Poly.zero(1)
        return table[idx]

    rows: list[list[Poly]] = []
    for u in range(1, p + 1):
        rows.append([entry(s_plus, m1 - u - v + 1) for v in range(1, big_k + 1)])
    for u in range(1, big_k - p + 1):
        rows.append([entry(s_minus, m2 - u - v + 1) for v in range(1, big_k + 1)])
    det = det_poly(rows)
    return det.scale(b1f**p * b2f ** (big_k - p))


def akns_collection(
    m1: int,
    m2: int,
    b1: RationalLike,
    b2: RationalLike,
    c1: ShiftLike,
    c2: ShiftLike,
    big_k: int | None = None,
) -> TauCollection:
    """All nonzero tau^(p, K-p); ``big_k`` defaults to max(m1, m2), the only
    size for which the family solves the AKNS system."""
    K = max(m1, m2) if big_k is None else big_k
    entries: dict[ChargeVector, Poly] = {}
    for p in range(K + 1):
        poly = akns_tau(m1, m2, b1, b2, c1, c2, K, p)
        if poly.terms:
            entries[(p, K - p)] = poly
    return TauCollection(total=K, ncomp=2, entries=entries)
