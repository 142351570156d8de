"""Elementary Schur polynomials s_j and their shifted/constant variants.

s_j is defined by exp(sum_{i>=1} t_i z^i) = sum_{j>=0} s_j(t) z^j and computed
through the recurrence j*s_j = sum_{i=1}^{j} i * t_i * s_{j-i}, with s_0 = 1
and s_j = 0 for j < 0.  The generating-function route is kept independent in
the tests as a cross-check.

A ShiftVector is a finite tuple of rational constants c = (c_1, c_2, ...);
entries beyond the stored length read as zero.  ``schur_shifted`` evaluates
s_j(t + c) through the convolution s_j(t + c) = sum_i s_{j-i}(c) s_i(t), and
``solve_shifts`` inverts that triangular relation: given b_0..b_M with
b_M != 0 it finds the unique c with sum_i b_i s_i(t) = b_M s_M(t + c).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Union

from .polycore import Poly, RationalLike, tvar

ShiftLike = Union["ShiftVector", Sequence[RationalLike], None]


@dataclass(frozen=True)
class ShiftVector:
    """Finite vector of rational shift constants, 1-indexed, zero-padded."""

    entries: tuple[Fraction, ...] = ()

    @classmethod
    def coerce(cls, value: ShiftLike) -> "ShiftVector":
        if value is None:
            return cls()
        if isinstance(value, ShiftVector):
            return value
        return cls(tuple(Fraction(x) for x in value))

    @classmethod
    def zero(cls, length: int = 0) -> "ShiftVector":
        return cls((Fraction(0),) * length)

    def get(self, i: int) -> Fraction:
        """1-based entry c_i; zero beyond the stored length."""
        if i < 1:
            raise IndexError("shift entries are 1-indexed")
        if i <= len(self.entries):
            return self.entries[i - 1]
        return Fraction(0)

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def is_zero(self) -> bool:
        return all(not c for c in self.entries)


_SCHUR_CACHE: dict[tuple[int, int], list[Poly]] = {}


def elementary_schur(j: int, component: int = 1, ncomp: int = 1) -> Poly:
    """s_j in the t-variables of one component; zero for j < 0."""
    if j < 0:
        return Poly.zero(ncomp)
    key = (ncomp, component)
    cache = _SCHUR_CACHE.get(key)
    if cache is None:
        cache = [Poly.const(1, ncomp)]
        _SCHUR_CACHE[key] = cache
    while len(cache) <= j:
        n = len(cache)
        acc = Poly.zero(ncomp)
        for i in range(1, n + 1):
            acc = acc + (tvar(i, component, ncomp) * cache[n - i]).scale(i)
        cache.append(acc.scale(Fraction(1, n)))
    return cache[j]


def schur_of_args(upto: int, args: Sequence[Poly]) -> list[Poly]:
    """[s_0(g), ..., s_upto(g)] with arbitrary Poly arguments g_1, g_2, ...

    ``args[i-1]`` plays the role of t_i; missing trailing arguments are zero.
    Used for Schur evaluations at composite arguments such as x + c or -x + c.
    """
    if upto < 0:
        return []
    if not args:
        raise ValueError("need at least one argument polynomial")
    ncomp = args[0].ncomp
    out = [Poly.const(1, ncomp)]
    for n in range(1, upto + 1):
        acc = Poly.zero(ncomp)
        for i in range(1, n + 1):
            if i <= len(args) and args[i - 1].terms:
                acc = acc + (args[i - 1] * out[n - i]).scale(i)
        out.append(acc.scale(Fraction(1, n)))
    return out


def schur_constants(upto: int, c: ShiftLike) -> list[Fraction]:
    """[s_0(c), ..., s_upto(c)] for a constant argument vector."""
    cv = ShiftVector.coerce(c)
    out = [Fraction(1)]
    for n in range(1, upto + 1):
        acc = Fraction(0)
        for i in range(1, n + 1):
            ci = cv.get(i)
            if ci:
                acc += i * ci * out[n - i]
        out.append(acc / n)
    return out


def schur_constant(j: int, c: ShiftLike) -> Fraction:
    """s_j evaluated at constants; zero for j < 0."""
    if j < 0:
        return Fraction(0)
    return schur_constants(j, c)[j]


def schur_shifted(j: int, c: ShiftLike, component: int = 1, ncomp: int = 1) -> Poly:
    """s_j(t + c) = sum_{i=0}^{j} s_{j-i}(c) * s_i(t)."""
    if j < 0:
        return Poly.zero(ncomp)
    cv = ShiftVector.coerce(c)
    consts = schur_constants(j, cv)
    total = Poly.zero(ncomp)
    for i in range(j + 1):
        k = consts[j - i]
        if k:
            total = total + elementary_schur(i, component, ncomp).scale(k)
    return total


def solve_shifts(b: Sequence[RationalLike]) -> ShiftVector:
    """Find c with sum_{i=0}^{M} b_i s_i(t) = b_M s_M(t + c).

    ``b`` lists b_0..b_M and b_M must be nonzero.  The relation forces
    s_k(c) = b_{M-k}/b_M for k = 0..M, which the Schur recurrence solves
    triangularly: c_k = g_k - (1/k) * sum_{i<k} i * c_i * g_{k-i} with
    g_k = b_{M-k}/b_M.
    """
    bs = [Fraction(x) for x in b]
    if not bs:
        raise ValueError("need at least b_0")
    M = len(bs) - 1
    if not bs[M]:
        raise ValueError("leading coefficient b_M must be nonzero")
    g = [bs[M - k] / bs[M] for k in range(M + 1)]
    c: list[Fraction] = []
    for k in range(1, M + 1):
        acc = Fraction(0)
        for i in range(1, k):
            acc += i * c[i - 1] * g[k - i]
        c.append(g[k] - acc / k)
    return ShiftVector(tuple(c))
