"""Exact truncated Puiseux series over the rationals.

A series is stored as ``q^base * sum(coeffs[n] * q^(n/grid))`` with an
explicit truncation: the expansion is exact modulo
``q^(base + (order+1)/grid)``.  All coefficient arithmetic uses
:class:`fractions.Fraction`, so nothing is ever rounded.

A depth-1 logarithmic extension is provided by :class:`LogSeries`,
representing ``plain + ell*log_part`` where ``ell`` is the formal
primitive of 1 under the Euler operator ``D = q d/dq``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Sequence, Union

Q = Fraction

QLike = Union[int, Fraction, str]

DEFAULT_ORDER = 50


class SeriesError(ArithmeticError):
    pass


class ZeroLeadingCoefficient(SeriesError):
    """Inversion of a series whose stored leading coefficient vanishes."""


class NonUnitBase(SeriesError):
    """Fractional power of a series whose constant term is not 1."""


class InsufficientOrder(SeriesError):
    """A coefficient beyond the justified truncation order was requested."""


class ConstantTermPresent(SeriesError):
    """dq/q-integration of a series with a term at exponent 0."""


def rat(x: QLike) -> Fraction:
    """Coerce ints, Fractions and 'p/q' strings to an exact rational."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Q(x)
    return Q(x)


def rat_str(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}" if x.denominator != 1 else str(x.numerator)


@dataclass(frozen=True)
class PuiseuxSeries:
    """Truncated series q^base * (c_0 + c_1 q^(1/grid) + ... + c_N q^(N/grid))."""

    base: Fraction
    grid: int
    coeffs: tuple[Fraction, ...]

    # -- construction -------------------------------------------------

    @staticmethod
    def make(base: QLike, coeffs: Iterable[QLike], grid: int = 1) -> "PuiseuxSeries":
        cs = tuple(rat(c) for c in coeffs)
        if grid < 1:
            raise ValueError("grid must be a positive integer")
        return PuiseuxSeries(rat(base), grid, cs)._normalized()

    @staticmethod
    def zero(order: int = DEFAULT_ORDER, base: QLike = 0, grid: int = 1) -> "PuiseuxSeries":
        return PuiseuxSeries(rat(base), grid, (Q(0),) * (order + 1))

    @staticmethod
    def one(order: int = DEFAULT_ORDER) -> "PuiseuxSeries":
        return PuiseuxSeries(Q(0), 1, (Q(1),) + (Q(0),) * order)

    @staticmethod
    def q_power(e: QLike, order: int = DEFAULT_ORDER) -> "PuiseuxSeries":
        """The monomial q^e, exact to `order` grid steps past e."""
        return PuiseuxSeries(rat(e), 1, (Q(1),) + (Q(0),) * order)

    def _normalized(self) -> "PuiseuxSeries":
        """Reduce the grid to the smallest step actually used (losslessly)."""
        if self.grid == 1:
            return self
        g = self.grid
        for i, c in enumerate(self.coeffs):
            if c:
                g = gcd(g, i)
            if g == 1:
                return self
        if g == 0:  # all-zero series
            g = self.grid
        n = len(self.coeffs)
        if n % g != 0:
            return self  # reducing would shrink the justified truncation
        new_grid = self.grid // g
        return PuiseuxSeries(self.base, new_grid, self.coeffs[::g])

    # -- basic queries -------------------------------------------------

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    @property
    def truncation(self) -> Fraction:
        """Exponent t such that the series is exact modulo q^t."""
        return self.base + Q(len(self.coeffs), self.grid)

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def leading(self) -> tuple[Fraction, Fraction]:
        """(exponent, coefficient) of the first nonzero stored term."""
        for i, c in enumerate(self.coeffs):
            if c:
                return self.base + Q(i, self.grid), c
        raise SeriesError("series is zero to its truncation order")

    def coefficient(self, e: QLike) -> Fraction:
        """Exact coefficient of q^e; raises past the truncation."""
        e = rat(e)
        if e >= self.truncation:
            raise InsufficientOrder(f"coefficient at q^{e} is beyond q^{self.truncation}")
        step = (e - self.base) * self.grid
        if step.denominator != 1 or step < 0:
            return Q(0)
        return self.coeffs[int(step)]

    def coefficients_upto(self, e: QLike) -> list[tuple[Fraction, Fraction]]:
        """All stored (exponent, coefficient) pairs with nonzero value and exponent <= e."""
        e = rat(e)
        out = []
        for i, c in enumerate(self.coeffs):
            ex = self.base + Q(i, self.grid)
            if ex > e:
                break
            if c:
                out.append((ex, c))
        return out

    # -- arithmetic ----------------------------------------------------

    def _aligned(self, other: "PuiseuxSeries"):
        base = min(self.base, other.base)
        grid = lcm(self.grid, other.grid)
        grid = lcm(grid, (self.base - base).denominator, (other.base - base).denominator)
        trunc = min(self.truncation, other.truncation)
        n = (trunc - base) * grid
        if n.denominator != 1:
            grid = lcm(grid, n.denominator)
            n = (trunc - base) * grid
        return base, grid, int(n)

    def __add__(self, other) -> "PuiseuxSeries":
        if isinstance(other, (int, Fraction)):
            t = self.truncation
            if t <= 0:
                raise InsufficientOrder("cannot add a constant past the truncation")
            d = t.denominator
            m = int(t * d)
            other = PuiseuxSeries(Q(0), d, (rat(other),) + (Q(0),) * (m - 1))
        base, grid, n = self._aligned(other)
        if n <= 0:
            raise InsufficientOrder("operands share no justified coefficient range")
        cs = [Q(0)] * n
        for s in (self, other):
            off = int((s.base - base) * grid)
            step = grid // s.grid
            for i, c in enumerate(s.coeffs):
                j = off + i * step
                if j < n:
                    cs[j] += c
        return PuiseuxSeries(base, grid, tuple(cs))._normalized()

    def __radd__(self, other):
        return self.__add__(other)

    def __neg__(self) -> "PuiseuxSeries":
        return PuiseuxSeries(self.base, self.grid, tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.__add__(-rat(other))
        return self.__add__(-other)

    def __rsub__(self, other):
        return (-self).__add__(other)

    def scale(self, k: QLike) -> "PuiseuxSeries":
        k = rat(k)
        return PuiseuxSeries(self.base, self.grid, tuple(k * c for c in self.coeffs))

    def with_truncation_of(self, other: "PuiseuxSeries") -> "PuiseuxSeries":
        """Cut so the truncation matches `other`'s (never extends)."""
        return self.truncate(other.truncation)

    def __mul__(self, other) -> "PuiseuxSeries":
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if isinstance(other, LogSeries):
            return NotImplemented
        grid = lcm(self.grid, other.grid)
        base = self.base + other.base
        trunc = min(self.truncation + other.base, other.truncation + self.base)
        n = (trunc - base) * grid
        if n.denominator != 1:
            grid = lcm(grid, n.denominator)
            n = (trunc - base) * grid
        n = int(n)
        if n <= 0:
            raise InsufficientOrder("product has no justified coefficients")
        sa = grid // self.grid
        sb = grid // other.grid
        cs = [Q(0)] * n
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            ia = i * sa
            if ia >= n:
                break
            jmax = min(len(other.coeffs), (n - ia + sb - 1) // sb)
            for j in range(jmax):
                b = other.coeffs[j]
                if b:
                    cs[ia + j * sb] += a * b
        return PuiseuxSeries(base, grid, tuple(cs))._normalized()

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def invert(self) -> "PuiseuxSeries":
        if not self.coeffs or not self.coeffs[0]:
            raise ZeroLeadingCoefficient("cannot invert: leading stored coefficient is 0")
        c0 = self.coeffs[0]
        n = len(self.coeffs)
        inv = [Q(0)] * n
        inv[0] = 1 / c0
        for k in range(1, n):
            acc = Q(0)
            for i in range(1, k + 1):
                if self.coeffs[i]:
                    acc += self.coeffs[i] * inv[k - i]
            inv[k] = -acc / c0
        return PuiseuxSeries(-self.base, self.grid, tuple(inv))._normalized()

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(Q(1) / rat(other))
        return self * other.invert()

    def pow(self, r: QLike) -> "PuiseuxSeries":
        """a^r via the coefficient recursion from a*g' = r*a'*g."""
        r = rat(r)
        if r == 0:
            return PuiseuxSeries(Q(0), 1, (Q(1),) + (Q(0),) * self.order)
        if not self.coeffs or not self.coeffs[0]:
            if r.denominator == 1 and r > 0:
                # integer power of a series with vanishing constant term
                out = self
                for _ in range(int(r) - 1):
                    out = out * self
                return out
            raise NonUnitBase("fractional power requires unit constant term")
        c0 = self.coeffs[0]
        if c0 != 1:
            if r.denominator != 1:
                raise NonUnitBase("fractional power requires constant term 1")
            k = int(r)
            unit = self.scale(1 / c0)
            return unit.pow(r).scale(c0 ** k)
        cs = self.coeffs
        n = len(cs)
        g = [Q(0)] * n
        g[0] = Q(1)
        for m in range(1, n):
            acc = Q(0)
            for i in range(1, m + 1):
                if cs[i]:
                    acc += ((r + 1) * i - m) * cs[i] * g[m - i]
            g[m] = acc / m
        return PuiseuxSeries(r * self.base, self.grid, tuple(g))._normalized()

    def __pow__(self, r):
        return self.pow(r)

    def substitute_power(self, m: int) -> "PuiseuxSeries":
        """q -> q^m: every exponent is multiplied by the positive integer m."""
        if m < 1:
            raise ValueError("substitution exponent must be a positive integer")
        if m == 1:
            return self
        n = len(self.coeffs)
        cs = [Q(0)] * (m * n)
        for i, c in enumerate(self.coeffs):
            cs[m * i] = c
        return PuiseuxSeries(m * self.base, self.grid, tuple(cs))._normalized()

    def euler_derivative(self) -> "PuiseuxSeries":
        """D = q d/dq: c*q^e -> c*e*q^e."""
        cs = tuple(c * (self.base + Q(i, self.grid)) for i, c in enumerate(self.coeffs))
        return PuiseuxSeries(self.base, self.grid, cs)._normalized()

    def integrate_q(self) -> "PuiseuxSeries":
        """Formal primitive under D: c*q^e -> (c/e)*q^e; e = 0 must not occur."""
        cs = []
        for i, c in enumerate(self.coeffs):
            e = self.base + Q(i, self.grid)
            if e == 0:
                if c:
                    raise ConstantTermPresent("dq/q integral of a constant term diverges")
                cs.append(Q(0))
            else:
                cs.append(c / e)
        return PuiseuxSeries(self.base, self.grid, tuple(cs))._normalized()

    def shift(self, e: QLike) -> "PuiseuxSeries":
        """Multiply by the exact monomial q^e."""
        return PuiseuxSeries(self.base + rat(e), self.grid, self.coeffs)

    def truncate(self, trunc: QLike) -> "PuiseuxSeries":
        """Restrict the claimed exactness to q^trunc (must not exceed the current one)."""
        trunc = rat(trunc)
        if trunc > self.truncation:
            raise InsufficientOrder("cannot extend a truncation")
        n = (trunc - self.base) * self.grid
        grid = self.grid
        cs = self.coeffs
        if n.denominator != 1:
            grid = lcm(grid, n.denominator)
            step = grid // self.grid
            expanded = [Q(0)] * (len(cs) * step)
            for i, c in enumerate(cs):
                expanded[i * step] = c
            cs = tuple(expanded)
            n = (trunc - self.base) * grid
        n = int(n)
        if n <= 0:
            raise InsufficientOrder("truncation precedes the base exponent")
        return PuiseuxSeries(self.base, grid, tuple(cs[:n]))._normalized()

    # -- comparisons ---------------------------------------------------

    def first_difference(self, other: "PuiseuxSeries"):
        """First (exponent, self_coeff, other_coeff) where the two disagree, or None.

        Comparison runs over every exponent below the smaller truncation.
        """
        base, grid, n = self._aligned(other)
        if n <= 0:
            raise InsufficientOrder("series share no justified comparison range")
        for j in range(n):
            e = base + Q(j, grid)
            a = self.coefficient(e)
            b = other.coefficient(e)
            if a != b:
                return (e, a, b)
        return None

    def agrees_with(self, other: "PuiseuxSeries") -> bool:
        return self.first_difference(other) is None

    def is_zero_to_truncation(self) -> bool:
        return not any(self.coeffs)

    def is_cft_type(self, depth: int) -> bool:
        """Leading coefficient 1 and non-negative integer coefficients to `depth`.

        `depth` counts whole powers of q past the leading exponent.
        """
        try:
            e0, c0 = self.leading()
        except SeriesError:
            return False
        if c0 != 1:
            return False
        if self.truncation <= e0 + depth:
            raise InsufficientOrder(f"CFT check to depth {depth} exceeds truncation")
        for ex, c in ((self.base + Q(i, self.grid), c) for i, c in enumerate(self.coeffs)):
            if c and ex <= e0 + depth:
                rel = ex - e0
                if rel.denominator != 1 or c.denominator != 1 or c < 0:
                    return False
        return True

    # -- serialization -------------------------------------------------

    def to_json_dict(self) -> dict:
        return {
            "base_exponent": rat_str(self.base),
            "grid": self.grid,
            "order": self.order,
            "coeffs": [rat_str(c) for c in self.coeffs],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict())

    @staticmethod
    def from_json_dict(d: dict) -> "PuiseuxSeries":
        s = PuiseuxSeries(rat(d["base_exponent"]), int(d["grid"]),
                          tuple(rat(c) for c in d["coeffs"]))
        if s.order != int(d["order"]):
            raise ValueError("coeffs length does not match declared order")
        return s

    def __str__(self) -> str:
        parts = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            e = self.base + Q(i, self.grid)
            parts.append(f"{rat_str(c)}*q^{rat_str(e)}" if e else rat_str(c))
            if len(parts) >= 8:
                parts.append("...")
                break
        return " + ".join(parts) if parts else "0"


@dataclass(frozen=True)
class LogSeries:
    """plain + ell*log_part with D(ell) = 1 (ell is log q up to 2*pi*i)."""

    plain: PuiseuxSeries
    log_part: PuiseuxSeries

    @staticmethod
    def lift(s: PuiseuxSeries) -> "LogSeries":
        return LogSeries(s, PuiseuxSeries.zero(s.order, s.base, s.grid))

    def __add__(self, other):
        if isinstance(other, PuiseuxSeries):
            other = LogSeries.lift(other)
        return LogSeries(self.plain + other.plain, self.log_part + other.log_part)

    def __sub__(self, other):
        if isinstance(other, PuiseuxSeries):
            other = LogSeries.lift(other)
        return LogSeries(self.plain - other.plain, self.log_part - other.log_part)

    def __neg__(self):
        return LogSeries(-self.plain, -self.log_part)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return LogSeries(self.plain * other, self.log_part * other)
        if isinstance(other, PuiseuxSeries):
            return LogSeries(self.plain * other, self.log_part * other)
        raise TypeError("LogSeries can only be multiplied by plain series or scalars")

    def __rmul__(self, other):
        return self.__mul__(other)

    def scale(self, k: QLike) -> "LogSeries":
        return LogSeries(self.plain.scale(k), self.log_part.scale(k))

    def euler_derivative(self) -> "LogSeries":
        """D(plain + ell*f1) = D(plain) + f1 + ell*D(f1)."""
        return LogSeries(self.plain.euler_derivative() + self.log_part,
                         self.log_part.euler_derivative())

    def is_zero_to_truncation(self) -> bool:
        return self.plain.is_zero_to_truncation() and self.log_part.is_zero_to_truncation()

    def to_json_dict(self) -> dict:
        base = min(self.plain.base, self.log_part.base)
        grid = lcm(self.plain.grid, self.log_part.grid,
                   (self.plain.base - base).denominator,
                   (self.log_part.base - base).denominator)
        trunc = min(self.plain.truncation, self.log_part.truncation)
        n = int((trunc - base) * grid)

        def regrid(s: PuiseuxSeries) -> list[str]:
            out = [Q(0)] * n
            off = int((s.base - base) * grid)
            step = grid // s.grid
            for i, c in enumerate(s.coeffs):
                j = off + i * step
                if j < n:
                    out[j] = c
            return [rat_str(c) for c in out]

        return {
            "base_exponent": rat_str(base),
            "grid": grid,
            "order": n - 1,
            "coeffs": regrid(self.plain),
            "log_coeffs": regrid(self.log_part),
        }


SeriesLike = Union[PuiseuxSeries, LogSeries]


def series_from_json_dict(d: dict) -> SeriesLike:
    s = PuiseuxSeries.from_json_dict(d)
    if "log_coeffs" in d and d["log_coeffs"] is not None:
        logp = PuiseuxSeries(s.base, s.grid, tuple(rat(c) for c in d["log_coeffs"]))
        return LogSeries(s._normalized(), logp._normalized())
    return s
