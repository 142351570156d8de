"""Exact sparse multivariate polynomials over the rationals.

A polynomial is a dict from monomial to coefficient.  Coefficients are
``fractions.Fraction`` (always reduced, exact); a monomial is a tuple of
``(VarId, exponent)`` pairs sorted by variable with all exponents >= 1.
The zero polynomial has an empty term dict.

Variables are indexed symbols t_i, y_i, x_i, each optionally attached to a
component (for multicomponent hierarchies).  Every ``Poly`` carries the
ambient component count ``ncomp``; it is an error to combine polynomials with
different ambient counts, while mixing variable families or components inside
one ambient is fine.

``LaurentZ`` is a finitely supported Laurent series in an auxiliary variable
z whose coefficients are ``Poly`` values.  It is what a Miwa shift
t_i -> t_i +- z^{-i}/i produces, and the residue extraction used by the
bilinear identity checks lives here as well.
"""

from __future__ import annotations

from enum import IntEnum
from fractions import Fraction
from math import comb
from typing import Callable, Iterable, Mapping, NamedTuple, Sequence, Union


class Family(IntEnum):
    """Variable family: T (times), Y (second copy of times), X (AKNS times)."""

    T = 0
    Y = 1
    X = 2

    @property
    def letter(self) -> str:
        return self.name.lower()


class VarId(NamedTuple):
    family: Family
    component: int
    index: int


Monomial = tuple[tuple[VarId, int], ...]
RationalLike = Union[Fraction, int]

#: Canonical constant-term monomial.
ONE_MONOMIAL: Monomial = ()


def _as_fraction(value: RationalLike) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise TypeError(f"expected an exact rational, got {type(value).__name__}")


def _merge_monomials(a: Monomial, b: Monomial) -> Monomial:
    if not a:
        return b
    if not b:
        return a
    out: list[tuple[VarId, int]] = []
    i = j = 0
    la, lb = len(a), len(b)
    while i < la and j < lb:
        va, ea = a[i]
        vb, eb = b[j]
        if va == vb:
            out.append((va, ea + eb))
            i += 1
            j += 1
        elif va < vb:
            out.append(a[i])
            i += 1
        else:
            out.append(b[j])
            j += 1
    out.extend(a[i:])
    out.extend(b[j:])
    return tuple(out)


def _term_sort_key(mono: Monomial):
    # Graded by total exponent degree, then lexicographic on the flattened
    # (family, component, index, exponent) sequence.
    degree = sum(e for _, e in mono)
    flat = tuple((int(v.family), v.component, v.index, e) for v, e in mono)
    return (degree, flat)


class Poly:
    """Immutable-by-convention sparse polynomial with Fraction coefficients."""

    __slots__ = ("terms", "ncomp")

    def __init__(self, terms: Mapping[Monomial, Fraction] | None = None, ncomp: int = 1):
        if ncomp < 1:
            raise ValueError("ambient component count must be >= 1")
        if terms:
            self.terms = {m: c for m, c in terms.items() if c}
        else:
            self.terms = {}
        self.ncomp = ncomp

    @classmethod
    def _raw(cls, terms: dict[Monomial, Fraction], ncomp: int) -> "Poly":
        # Trusted fast path: terms must already be canonical and zero-free.
        self = object.__new__(cls)
        self.terms = terms
        self.ncomp = ncomp
        return self

    @classmethod
    def zero(cls, ncomp: int = 1) -> "Poly":
        if ncomp < 1:
            raise ValueError("ambient component count must be >= 1")
        return cls._raw({}, ncomp)

    @classmethod
    def const(cls, value: RationalLike, ncomp: int = 1) -> "Poly":
        if ncomp < 1:
            raise ValueError("ambient component count must be >= 1")
        c = _as_fraction(value)
        return cls._raw({ONE_MONOMIAL: c} if c else {}, ncomp)

    @classmethod
    def var(cls, v: VarId, ncomp: int = 1) -> "Poly":
        if v.index < 1:
            raise ValueError(f"variable index must be >= 1, got {v.index}")
        if not 1 <= v.component <= ncomp:
            raise ValueError(
                f"component {v.component} outside ambient range 1..{ncomp}"
            )
        return cls._raw({((v, 1),): Fraction(1)}, ncomp)

    # -- predicates ---------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Poly):
            return self.ncomp == other.ncomp and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            c = _as_fraction(other)
            if not c:
                return not self.terms
            return self.terms == {ONE_MONOMIAL: c}
        return NotImplemented

    __hash__ = None  # type: ignore[assignment]

    def _check_ambient(self, other: "Poly") -> None:
        if self.ncomp != other.ncomp:
            raise ValueError(
                f"ambient component count mismatch: {self.ncomp} vs {other.ncomp}"
            )

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other: "Poly | RationalLike") -> "Poly":
        if isinstance(other, (int, Fraction)):
            other = Poly.const(other, self.ncomp)
        elif not isinstance(other, Poly):
            return NotImplemented
        self._check_ambient(other)
        if not other.terms:
            return self
        if not self.terms:
            return other
        out = dict(self.terms)
        for m, c in other.terms.items():
            acc = out.get(m)
            if acc is None:
                out[m] = c
            else:
                acc = acc + c
                if acc:
                    out[m] = acc
                else:
                    del out[m]
        return Poly._raw(out, self.ncomp)

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly._raw({m: -c for m, c in self.terms.items()}, self.ncomp)

    def __sub__(self, other: "Poly | RationalLike") -> "Poly":
        if isinstance(other, (int, Fraction)):
            other = Poly.const(other, self.ncomp)
        elif not isinstance(other, Poly):
            return NotImplemented
        return self.__add__(-other)

    def __rsub__(self, other: RationalLike) -> "Poly":
        return Poly.const(other, self.ncomp).__sub__(self)

    def scale(self, value: RationalLike) -> "Poly":
        c = _as_fraction(value)
        if not c:
            return Poly.zero(self.ncomp)
        return Poly._raw({m: co * c for m, co in self.terms.items()}, self.ncomp)

    def __mul__(self, other: "Poly | RationalLike") -> "Poly":
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, Poly):
            return NotImplemented
        self._check_ambient(other)
        a, b = self.terms, other.terms
        if not a or not b:
            return Poly.zero(self.ncomp)
        if len(a) < len(b):
            a, b = b, a
        out: dict[Monomial, Fraction] = {}
        for mb, cb in b.items():
            for ma, ca in a.items():
                m = _merge_monomials(ma, mb)
                c = ca * cb
                acc = out.get(m)
                if acc is None:
                    out[m] = c
                else:
                    acc = acc + c
                    if acc:
                        out[m] = acc
                    else:
                        del out[m]
        return Poly._raw(out, self.ncomp)

    def __rmul__(self, other: RationalLike) -> "Poly":
        return self.scale(other)

    def __pow__(self, exponent: int) -> "Poly":
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = Poly.const(1, self.ncomp)
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base if e > 1 else base
            e >>= 1
        return result

    # -- calculus -----------------------------------------------------------

    def diff(self, v: VarId, order: int = 1) -> "Poly":
        """Partial derivative of the given order with respect to one variable."""
        if order < 0:
            raise ValueError("derivative order must be >= 0")
        if order == 0:
            return self
        out: dict[Monomial, Fraction] = {}
        for mono, coeff in self.terms.items():
            for i, (w, e) in enumerate(mono):
                if w != v:
                    continue
                if e >= order:
                    c = coeff
                    for k in range(order):
                        c *= e - k
                    rest = e - order
                    if rest:
                        m2 = mono[:i] + ((w, rest),) + mono[i + 1 :]
                    else:
                        m2 = mono[:i] + mono[i + 1 :]
                    acc = out.get(m2)
                    if acc is None:
                        out[m2] = c
                    else:
                        acc = acc + c
                        if acc:
                            out[m2] = acc
                        else:
                            del out[m2]
                break
        return Poly._raw(out, self.ncomp)

    # -- structure ----------------------------------------------------------

    def variables(self) -> set[VarId]:
        seen: set[VarId] = set()
        for mono in self.terms:
            for v, _ in mono:
                seen.add(v)
        return seen

    def weighted_degree(self) -> int:
        """Max over monomials of sum(index * exponent); -1 for the zero poly."""
        if not self.terms:
            return -1
        return max(sum(v.index * e for v, e in m) for m in self.terms)

    def coefficient(self, mono: Monomial) -> Fraction:
        return self.terms.get(mono, Fraction(0))

    # -- rendering ----------------------------------------------------------

    def _var_text(self, v: VarId) -> str:
        base = f"{v.family.letter}{v.index}"
        if self.ncomp > 1:
            base += f"[{v.component}]"
        return base

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        pieces: list[str] = []
        for mono, coeff in sorted(self.terms.items(), key=lambda kv: _term_sort_key(kv[0])):
            mag = abs(coeff)
            if mono:
                vars_text = "*".join(
                    self._var_text(v) + (f"^{e}" if e > 1 else "") for v, e in mono
                )
                body = vars_text if mag == 1 else f"{mag}*{vars_text}"
            else:
                body = str(mag)
            if not pieces:
                pieces.append(f"-{body}" if coeff < 0 else body)
            else:
                pieces.append(f" - {body}" if coeff < 0 else f" + {body}")
        return "".join(pieces)

    def __repr__(self) -> str:
        return f"Poly({self!s})"

    # -- serialization ------------------------------------------------------

    def to_json_obj(self) -> dict:
        terms = []
        for mono, coeff in sorted(self.terms.items(), key=lambda kv: _term_sort_key(kv[0])):
            terms.append(
                {
                    "coeff": str(coeff),
                    "monomial": [[v.family.name, v.component, v.index, e] for v, e in mono],
                }
            )
        return {"ncomp": self.ncomp, "terms": terms}

    @classmethod
    def from_json_obj(cls, obj: Mapping) -> "Poly":
        ncomp = int(obj.get("ncomp", 1))
        out: dict[Monomial, Fraction] = {}
        for term in obj["terms"]:
            coeff = Fraction(term["coeff"])
            pairs = []
            for fam, component, index, exponent in term["monomial"]:
                v = VarId(Family[fam], int(component), int(index))
                if v.index < 1 or not 1 <= v.component <= ncomp:
                    raise ValueError(f"invalid variable {v} for ambient ncomp={ncomp}")
                if int(exponent) < 1:
                    raise ValueError("exponents must be >= 1")
                pairs.append((v, int(exponent)))
            mono = tuple(sorted(pairs))
            if len(set(v for v, _ in mono)) != len(mono):
                raise ValueError("repeated variable in monomial")
            acc = out.get(mono)
            out[mono] = coeff if acc is None else acc + coeff
        return cls(out, ncomp)


# -- convenience constructors ------------------------------------------------


def tvar(index: int, component: int = 1, ncomp: int = 1) -> Poly:
    return Poly.var(VarId(Family.T, component, index), ncomp)


def yvar(index: int, component: int = 1, ncomp: int = 1) -> Poly:
    return Poly.var(VarId(Family.Y, component, index), ncomp)


def xvar(index: int, component: int = 1, ncomp: int = 1) -> Poly:
    return Poly.var(VarId(Family.X, component, index), ncomp)


# -- substitutions -----------------------------------------------------------


def shift_vars(p: Poly, shifts: Mapping[VarId, RationalLike]) -> Poly:
    """Substitute v -> v + c for every (v, c) in ``shifts``."""
    effective = {v: _as_fraction(c) for v, c in shifts.items() if _as_fraction(c)}
    if not effective or not p.terms:
        return p
    total = Poly.zero(p.ncomp)
    for mono, coeff in p.terms.items():
        fixed: list[tuple[VarId, int]] = []
        expand: list[tuple[VarId, int, Fraction]] = []
        for v, e in mono:
            c = effective.get(v)
            if c is None:
                fixed.append((v, e))
            else:
                expand.append((v, e, c))
        term = Poly._raw({tuple(fixed): coeff}, p.ncomp)
        for v, e, c in expand:
            binomial: dict[Monomial, Fraction] = {}
            for k in range(e + 1):
                co = comb(e, k) * c ** (e - k)
                if co:
                    binomial[((v, k),) if k else ONE_MONOMIAL] = co
            term = term * Poly._raw(binomial, p.ncomp)
        total = total + term
    return total


def relabel_vars(p: Poly, fn: Callable[[VarId], tuple[VarId, RationalLike]]) -> Poly:
    """Map each variable v to scale * v' (a signed/scaled renaming).

    ``fn`` returns the replacement variable and the scalar multiplier; a
    monomial v^e becomes scale^e * v'^e.  Distinct variables must stay
    distinct (no merging), which holds for all uses here (family renames and
    component folding with sign flips).
    """
    out: dict[Monomial, Fraction] = {}
    for mono, coeff in p.terms.items():
        pairs: list[tuple[VarId, int]] = []
        c = coeff
        for v, e in mono:
            w, scale = fn(v)
            c *= _as_fraction(scale) ** e
            pairs.append((w, e))
        if not c:
            continue
        mono2 = tuple(sorted(pairs))
        if len(set(v for v, _ in mono2)) != len(mono2):
            raise ValueError("relabeling collapsed distinct variables")
        acc = out.get(mono2)
        if acc is None:
            out[mono2] = c
        else:
            acc = acc + c
            if acc:
                out[mono2] = acc
            else:
                del out[mono2]
    return Poly._raw(out, p.ncomp)


def rename_family(p: Poly, src: Family, dst: Family) -> Poly:
    """Rename every variable of family ``src`` to family ``dst``."""
    if src == dst:
        return p
    return relabel_vars(
        p, lambda v: (VarId(dst, v.component, v.index), 1) if v.family == src else (v, 1)
    )


# -- Laurent series in z ------------------------------------------------------


class LaurentZ:
    """Finitely supported Laurent polynomial in z with Poly coefficients."""

    __slots__ = ("coeffs", "ncomp")

    def __init__(self, coeffs: Mapping[int, Poly] | None = None, ncomp: int = 1):
        self.coeffs: dict[int, Poly] = {}
        self.ncomp = ncomp
        if coeffs:
            for e, p in coeffs.items():
                if p.ncomp != ncomp:
                    raise ValueError("ambient component count mismatch in LaurentZ")
                if p.terms:
                    self.coeffs[e] = p

    @classmethod
    def _raw(cls, coeffs: dict[int, Poly], ncomp: int) -> "LaurentZ":
        self = object.__new__(cls)
        self.coeffs = coeffs
        self.ncomp = ncomp
        return self

    @classmethod
    def from_poly(cls, p: Poly, z_power: int = 0) -> "LaurentZ":
        return cls._raw({z_power: p} if p.terms else {}, p.ncomp)

    def coeff(self, e: int) -> Poly:
        return self.coeffs.get(e, Poly.zero(self.ncomp))

    def lowest(self) -> int | None:
        return min(self.coeffs) if self.coeffs else None

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LaurentZ):
            return NotImplemented
        return self.ncomp == other.ncomp and self.coeffs == other.coeffs

    __hash__ = None  # type: ignore[assignment]

    def __add__(self, other: "LaurentZ") -> "LaurentZ":
        if self.ncomp != other.ncomp:
            raise ValueError("ambient component count mismatch")
        out = dict(self.coeffs)
        for e, p in other.coeffs.items():
            q = out.get(e)
            s = p if q is None else q + p
            if s.terms:
                out[e] = s
            elif e in out:
                del out[e]
        return LaurentZ._raw(out, self.ncomp)

    def __mul__(self, other: "LaurentZ") -> "LaurentZ":
        if self.ncomp != other.ncomp:
            raise ValueError("ambient component count mismatch")
        out: dict[int, Poly] = {}
        for e1, p1 in self.coeffs.items():
            for e2, p2 in other.coeffs.items():
                prod = p1 * p2
                if not prod.terms:
                    continue
                e = e1 + e2
                acc = out.get(e)
                s = prod if acc is None else acc + prod
                if s.terms:
                    out[e] = s
                elif e in out:
                    del out[e]
        return LaurentZ._raw(out, self.ncomp)

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        bits = []
        for e in sorted(self.coeffs):
            bits.append(f"z^{e}*({self.coeffs[e]})")
        return " + ".join(bits)

    def __repr__(self) -> str:
        return f"LaurentZ({self!s})"


def miwa_shift(p: Poly, family: Family, component: int, sign: int) -> LaurentZ:
    """Substitute v_i -> v_i + sign * z^{-i}/i for family/component variables.

    The result is a Laurent polynomial in z; the z^0 coefficient is p itself
    and the lowest z exponent is bounded below by -weighted_degree(p).
    Variables of other families or components pass through untouched.
    """
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    total: dict[int, dict[Monomial, Fraction]] = {}
    for mono, coeff in p.terms.items():
        fixed: list[tuple[VarId, int]] = []
        expand: list[tuple[VarId, int]] = []
        for v, e in mono:
            if v.family == family and v.component == component:
                expand.append((v, e))
            else:
                fixed.append((v, e))
        acc: dict[int, dict[Monomial, Fraction]] = {0: {tuple(fixed): coeff}}
        for v, e in expand:
            base = Fraction(sign, v.index)
            nxt: dict[int, dict[Monomial, Fraction]] = {}
            for k in range(e + 1):
                co = comb(e, k) * base**k
                zshift = -v.index * k
                frag: Monomial = ((v, e - k),) if e - k else ONE_MONOMIAL
                for zexp, tdict in acc.items():
                    bucket = nxt.setdefault(zexp + zshift, {})
                    for m0, c0 in tdict.items():
                        m1 = _merge_monomials(m0, frag)
                        c1 = c0 * co
                        prev = bucket.get(m1)
                        if prev is None:
                            bucket[m1] = c1
                        else:
                            prev = prev + c1
                            if prev:
                                bucket[m1] = prev
                            else:
                                del bucket[m1]
            acc = nxt
        for zexp, tdict in acc.items():
            bucket = total.setdefault(zexp, {})
            for m0, c0 in tdict.items():
                prev = bucket.get(m0)
                if prev is None:
                    bucket[m0] = c0
                else:
                    prev = prev + c0
                    if prev:
                        bucket[m0] = prev
                    else:
                        del bucket[m0]
    coeffs = {z: Poly._raw(t, p.ncomp) for z, t in total.items() if t}
    return LaurentZ._raw(coeffs, p.ncomp)


# Coefficients of exp(sum_i (t_i - y_i) z^i) per (ncomp, component), grown on
# demand.  Guarded by the GIL; a lock is unnecessary for CPython dict ops.
_EXP_DIFF_CACHE: dict[tuple[int, int], list[Poly]] = {}


def exp_difference_coeff(k: int, component: int = 1, ncomp: int = 1) -> Poly:
    """Coefficient of z^k in exp(sum_{i>=1} (t_i - y_i) z^i) for one component."""
    if k < 0:
        raise ValueError("series order must be >= 0")
    if not 1 <= component <= ncomp:
        raise ValueError(f"component {component} outside ambient range 1..{ncomp}")
    key = (ncomp, component)
    cache = _EXP_DIFF_CACHE.get(key)
    if cache is None:
        cache = [Poly.const(1, ncomp)]
        _EXP_DIFF_CACHE[key] = cache
    while len(cache) <= k:
        n = len(cache)
        acc = Poly.zero(ncomp)
        for i in range(1, n + 1):
            g = tvar(i, component, ncomp) - yvar(i, component, ncomp)
            acc = acc + (g * cache[n - i]).scale(i)
        cache.append(acc.scale(Fraction(1, n)))
    return cache[k]


def laurent_mul_residue(
    factors: Sequence[LaurentZ], extra_z_power: int = 0, component: int = 1
) -> Poly:
    """Residue (z^{-1} coefficient) of z^extra * prod(factors) * exp-series.

    The implicit series factor is exp(sum_i (t_i - y_i) z^i) in the given
    component; its truncation order is forced by the finite negative support
    of the product, so the result is exact.
    """
    if not factors:
        raise ValueError("need at least one Laurent factor")
    prod = factors[0]
    for f in factors[1:]:
        prod = prod * f
    ncomp = prod.ncomp
    total = Poly.zero(ncomp)
    for e, pe in prod.coeffs.items():
        k = -1 - extra_z_power - e
        if k >= 0:
            total = total + pe * exp_difference_coeff(k, component, ncomp)
    return total
