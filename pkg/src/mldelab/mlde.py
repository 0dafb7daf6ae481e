"""Modular linear differential operators in the Euler derivative D = q d/dq.

An operator is a monic polynomial sum(c_j(q) * D^j); the two built-in
one-parameter families are

  flat(s):  D^4 - E2*D^3 + (3*D(E2) + a1*E4)*D^2
            - (D^2(E2) + (a1/2)*D(E4) - a2*E6)*D + a3*E8,

with a1 = (-25s^2+120s+1332)/7200, a2 = (5s+6)^2/14400,
a3 = (s-18)(s+6)(5s+6)^2/8294400, and the second-order family

  sharp(s): D^2 - (1/6)*E2*D - s*E4.

The weighted variant flat(s, k) is expressed through iterated Serre
derivations and expanded into D-powers by operator composition; at k = 0
it reproduces flat(s) coefficient-by-coefficient.

Solving is by the Frobenius recursion: writing f = q^alpha sum a_n q^n and
collecting the coefficient of q^(alpha+n) gives

  P(alpha+n) a_n = - sum_{i=1}^{n} sum_j c_{j,i} (alpha+n-i)^j a_{n-i},

where P is the indicial polynomial P(x) = sum_j c_j(0) x^j and c_{j,i} is
the q^i-coefficient of c_j.  Degenerate or resonant indices produce
depth-1 logarithmic solutions, handled by an affine (particular +
homogeneous) sweep over the one free coefficient.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence, Union

from . import forms as F
from .series import (DEFAULT_ORDER, InsufficientOrder, LogSeries,
                     PuiseuxSeries, Q, rat, QLike, SeriesLike)


class NotIndicialRoot(ValueError):
    pass


class Resonance(ArithmeticError):
    """P(alpha + n) = 0 hit during a plain Frobenius solve."""

    def __init__(self, n: int, message: str = ""):
        self.n = n
        super().__init__(message or f"resonance at step n = {n}")


class NoLogNeeded(ValueError):
    pass


class NonRationalRoot(ArithmeticError):
    """Indicial polynomial does not factor over the rationals."""

    def __init__(self, polynomial: tuple[Fraction, ...]):
        self.polynomial = polynomial
        super().__init__(f"irrational indicial roots; polynomial coefficients {polynomial}")


def mu(t: QLike) -> Fraction:
    """The scalar map t -> t(t+2)/144."""
    t = rat(t)
    return t * (t + 2) / 144


def alphas(s: QLike) -> tuple[Fraction, Fraction, Fraction]:
    """(a1, a2, a3) of the fourth-order family at parameter s."""
    s = rat(s)
    a1 = (-25 * s * s + 120 * s + 1332) / 7200
    a2 = (5 * s + 6) ** 2 / 14400
    a3 = (s - 18) * (s + 6) * (5 * s + 6) ** 2 / 8294400
    return a1, a2, a3


def flat_indicial_roots(s: QLike) -> tuple[Fraction, Fraction, Fraction, Fraction]:
    """Closed-form indicial roots of flat(s), in the conventional order."""
    s = rat(s)
    return (-s / 24 - Q(1, 20), -s / 24 + Q(3, 4), s / 24 + Q(1, 4), s / 24 + Q(1, 20))


@dataclass(frozen=True)
class MLDEOperator:
    """sum(coefficients[j] * D^j); monic: coefficients[-1] == 1."""

    coefficients: tuple[PuiseuxSeries, ...]
    weight: Fraction = Q(0)
    provenance: str = "custom"
    parameter: Optional[tuple] = None

    @property
    def order(self) -> int:
        return len(self.coefficients) - 1

    def apply(self, f: SeriesLike) -> SeriesLike:
        """sum c_j * D^j(f)."""
        out = None
        df = f
        for j, c in enumerate(self.coefficients):
            if j > 0:
                df = df.euler_derivative()
            term = c * df if isinstance(df, PuiseuxSeries) else df * c
            out = term if out is None else out + term
        return out

    def indicial_coefficients(self) -> tuple[Fraction, ...]:
        """P(x) = sum p_j x^j with p_j the constant term of c_j."""
        return tuple(c.coefficient(0) for c in self.coefficients)


def _op_identity(order: int) -> MLDEOperator:
    return MLDEOperator((PuiseuxSeries.one(order),))


def _op_compose_serre(op: MLDEOperator, w: Fraction, order: int) -> MLDEOperator:
    """theta_w composed after op, expanded into D-powers."""
    e2 = F.eisenstein_e2(order)
    n = op.order
    zero = PuiseuxSeries.zero(order)
    new = [zero] * (n + 2)
    for j, c in enumerate(op.coefficients):
        new[j] = new[j] + c.euler_derivative() - (e2 * c).truncate(c.truncation).scale(Q(w) / 12)
        new[j + 1] = new[j + 1] + c
    return MLDEOperator(tuple(t.truncate(order + 1) for t in new))


def _op_add(a: MLDEOperator, b: MLDEOperator) -> MLDEOperator:
    n = max(a.order, b.order)
    cs = []
    for j in range(n + 1):
        ca = a.coefficients[j] if j <= a.order else None
        cb = b.coefficients[j] if j <= b.order else None
        if ca is None:
            cs.append(cb)
        elif cb is None:
            cs.append(ca)
        else:
            cs.append(ca + cb)
    return MLDEOperator(tuple(cs))


def _op_scale(op: MLDEOperator, g: PuiseuxSeries) -> MLDEOperator:
    return MLDEOperator(tuple((g * c).truncate(min(g.truncation, c.truncation))
                              for c in op.coefficients))


def build_sharp(s: QLike, order: int = DEFAULT_ORDER) -> MLDEOperator:
    """The second-order operator D^2 - (1/6)E2*D - s*E4."""
    s = rat(s)
    return MLDEOperator(
        (F.eisenstein_e4(order).scale(-s),
         F.eisenstein_e2(order).scale(Q(-1, 6)),
         PuiseuxSeries.one(order)),
        weight=Q(0), provenance="sharp_s", parameter=(s,))


def build_flat(s: QLike, order: int = DEFAULT_ORDER) -> MLDEOperator:
    """The fourth-order operator flat(s)."""
    s = rat(s)
    a1, a2, a3 = alphas(s)
    e2 = F.eisenstein_e2(order)
    e4 = F.eisenstein_e4(order)
    e6 = F.eisenstein_e6(order)
    e8 = F.eisenstein_e8(order).truncate(order + 1)
    c3 = -e2
    c2 = e2.euler_derivative().scale(3) + e4.scale(a1)
    c1 = -(e2.euler_derivative().euler_derivative()
           + e4.euler_derivative().scale(a1 / 2) - e6.scale(a2))
    c0 = e8.scale(a3)
    return MLDEOperator((c0, c1, c2, c3, PuiseuxSeries.one(order)),
                        weight=Q(0), provenance="flat_s", parameter=(s,))


def build_flat_weighted(s: QLike, k: QLike, order: int = DEFAULT_ORDER) -> MLDEOperator:
    """The weight-k variant; equals build_flat(s) at k = 0."""
    s, k = rat(s), rat(k)
    a1, a2, a3 = alphas(s)
    ident = _op_identity(order)
    theta1 = _op_compose_serre(ident, k, order)
    theta2 = _op_compose_serre(theta1, k + 2, order)
    theta3 = _op_compose_serre(theta2, k + 4, order)
    theta4 = _op_compose_serre(theta3, k + 6, order)
    e4 = F.eisenstein_e4(order)
    e6 = F.eisenstein_e6(order)
    e8 = F.eisenstein_e8(order).truncate(order + 1)
    op = _op_add(theta4, _op_scale(theta2, e4.scale(a1 - Q(11, 36))))
    op = _op_add(op, _op_scale(theta1, e6.scale((36 * a1 + 216 * a2 - 5) / 216)))
    op = _op_add(op, _op_scale(ident, e8.scale(a3)))
    return MLDEOperator(op.coefficients, weight=k, provenance="flat_s_k", parameter=(s, k))


def build_custom(coefficients: Sequence[PuiseuxSeries], weight: QLike = 0,
                 provenance: str = "custom", parameter: Optional[tuple] = None) -> MLDEOperator:
    """Monic operator of order <= 4 from explicit coefficient series."""
    cs = tuple(coefficients)
    if len(cs) - 1 > 4:
        raise ValueError("operators of order > 4 are out of scope")
    top = cs[-1]
    if top.base != 0 or top.coefficient(0) != 1 or any(
            c for c in top.coeffs[1:]):
        raise ValueError("operator must be monic in the top D-power")
    return MLDEOperator(cs, weight=rat(weight), provenance=provenance, parameter=parameter)


def serre_derivation(f: SeriesLike, k: QLike, iterations: int = 1) -> SeriesLike:
    """theta_k(f) = D(f) - (k/12)*E2*f; iterates step the weight by 2."""
    k = rat(k)
    for _ in range(iterations):
        if isinstance(f, PuiseuxSeries):
            n = max(1, int(f.truncation - f.base) + 2)
        else:
            n = max(1, int(min(f.plain.truncation, f.log_part.truncation)
                           - min(f.plain.base, f.log_part.base)) + 2)
        e2 = F.eisenstein_e2(n)
        term = e2 * f if isinstance(f, PuiseuxSeries) else f * e2
        f = f.euler_derivative() - term.scale(k / 12)
        k += 2
    return f


# -- indicial analysis ------------------------------------------------


def _rational_roots(coeffs: Sequence[Fraction]) -> tuple[list[Fraction], list[Fraction]]:
    """(roots with multiplicity, remaining polynomial) of sum c_j x^j."""
    cs = [rat(c) for c in coeffs]
    while cs and cs[-1] == 0:
        cs.pop()
    if len(cs) <= 1:
        return [], cs
    from math import lcm
    den = 1
    for c in cs:
        den = lcm(den, c.denominator)
    ints = [int(c * den) for c in cs]
    roots: list[Fraction] = []
    # peel off roots at 0
    while ints[0] == 0:
        roots.append(Q(0))
        ints = ints[1:]

    def divisors(n: int) -> list[int]:
        n = abs(n)
        out = []
        d = 1
        while d * d <= n:
            if n % d == 0:
                out.append(d)
                out.append(n // d)
            d += 1
        return sorted(set(out))

    def eval_at(poly: list[int], x: Fraction) -> Fraction:
        acc = Q(0)
        for c in reversed(poly):
            acc = acc * x + c
        return acc

    def deflate(poly: list[int], x: Fraction) -> list[int]:
        # synthetic division by (x - root); result rescaled to integers
        out: list[Fraction] = []
        acc = Q(0)
        for c in reversed(poly):
            acc = acc * x + c
            out.append(acc)
        out = out[:-1][::-1]  # drop the remainder (zero), realign
        from math import lcm as _lcm
        d = 1
        for c in out:
            d = _lcm(d, c.denominator)
        return [int(c * d) for c in out]

    progress = True
    while len(ints) > 1 and progress:
        progress = False
        for p in divisors(ints[0]):
            for qd in divisors(ints[-1]):
                for sign in (1, -1):
                    x = Q(sign * p, qd)
                    if eval_at(ints, x) == 0:
                        roots.append(x)
                        ints = deflate(ints, x)
                        progress = True
                        break
                if progress:
                    break
            if progress:
                break
        if ints[0] == 0 and len(ints) > 1:
            roots.append(Q(0))
            ints = ints[1:]
            progress = True
    remainder = [Q(c) for c in ints]
    return roots, remainder


@dataclass(frozen=True)
class IndicialReport:
    roots: tuple[Fraction, ...]
    polynomial: tuple[Fraction, ...]
    pair_differences: tuple[Fraction, ...]
    degenerate: tuple[tuple[Fraction, Fraction], ...]
    resonant: tuple[tuple[Fraction, Fraction], ...]


def indicial(op: MLDEOperator) -> IndicialReport:
    """Roots (with multiplicity) of P, plus degeneracy/resonance flags.

    Raises NonRationalRoot (carrying the polynomial) if P does not split
    over the rationals.
    """
    poly = op.indicial_coefficients()
    if op.provenance in ("flat_s", "flat_s_k") and op.weight == 0:
        roots = list(flat_indicial_roots(op.parameter[0]))
        # cross-check the closed form against the generic extraction
        generic, rem = _rational_roots(poly)
        if rem and len(rem) > 1 or sorted(generic) != sorted(roots):
            raise AssertionError("closed-form and generic indicial roots disagree")
    else:
        roots, rem = _rational_roots(poly)
        if len(rem) > 1:
            raise NonRationalRoot(poly)
    diffs = []
    degenerate = []
    resonant = []
    for i, a in enumerate(roots):
        for j, b in enumerate(roots):
            if i < j:
                diffs.append(a - b)
                if a == b:
                    degenerate.append((a, b))
                elif (a - b).denominator == 1:
                    resonant.append((max(a, b), min(a, b)))
    return IndicialReport(tuple(roots), tuple(poly), tuple(diffs),
                          tuple(degenerate), tuple(resonant))


# -- Frobenius solving ------------------------------------------------


def _operator_tables(op: MLDEOperator, order: int):
    """(P-coefficients, c[j][i] table for i = 0..order)."""
    for c in op.coefficients:
        if c.truncation <= order:
            raise InsufficientOrder(
                f"operator coefficients only justified to q^{c.truncation}, need > {order}")
    table = [[c.coefficient(i) for i in range(order + 1)] for c in op.coefficients]
    p = tuple(row[0] for row in table)
    return p, table


def _poly_eval(p: Sequence[Fraction], x: Fraction) -> Fraction:
    acc = Q(0)
    for c in reversed(p):
        acc = acc * x + c
    return acc


def frobenius_solve(op: MLDEOperator, alpha: QLike, order: int = DEFAULT_ORDER,
                    a0: QLike = 1) -> PuiseuxSeries:
    """The unique solution q^alpha(a0 + a_1 q + ...); raises Resonance if
    P(alpha+n) vanishes for some 1 <= n <= order."""
    alpha = rat(alpha)
    p, table = _operator_tables(op, order)
    if _poly_eval(p, alpha) != 0:
        raise NotIndicialRoot(f"P({alpha}) = {_poly_eval(p, alpha)} != 0")
    a = [rat(a0)]
    for n in range(1, order + 1):
        rhs = Q(0)
        for i in range(1, n + 1):
            x = alpha + n - i
            xp = Q(1)
            coef = Q(0)
            for j in range(len(table)):
                if table[j][i]:
                    coef += table[j][i] * xp
                xp *= x
            if coef:
                rhs -= coef * a[n - i]
        den = _poly_eval(p, alpha + n)
        if den == 0:
            raise Resonance(n)
        a.append(rhs / den)
    return PuiseuxSeries(alpha, 1, tuple(a))


def frobenius_solve_log(op: MLDEOperator, alpha: QLike,
                        order: int = DEFAULT_ORDER) -> LogSeries:
    """Depth-1 logarithmic solution f0 + ell*f1 based at alpha.

    alpha must be a double indicial root, or the smaller member of a pair
    of roots with positive integer difference.  f1 is the power-series
    solution at the upper index u; f0 solves L(f0) = -sum_j j*c_j*D^(j-1) f1,
    normalized so the coefficient of q^u in f0 is zero.
    """
    alpha = rat(alpha)
    rep = indicial(op)
    roots = rep.roots
    if alpha not in roots:
        raise NotIndicialRoot(f"{alpha} is not an indicial root")
    uppers = sorted({r for r in roots if r >= alpha and (r - alpha).denominator == 1})
    if roots.count(alpha) >= 2:
        upper = alpha
    elif len(uppers) >= 2:
        upper = uppers[-1]
    else:
        raise NoLogNeeded(f"{alpha} is a simple, non-resonant root")

    f1 = frobenius_solve(op, upper, order + int(upper - alpha))
    # T = sum_j j * c_j * D^(j-1) f1, the ell-interaction term
    t = None
    df = f1
    for j, c in enumerate(op.coefficients):
        if j >= 2:
            df = df.euler_derivative()
        if j >= 1:
            term = (c * df).scale(j)
            t = term if t is None else t + term
    p, table = _operator_tables(op, order)

    # affine sweep: b_n = part_n + x * hom_n until x is pinned
    part: list[Fraction] = []
    hom: list[Fraction] = []
    x_val: Optional[Fraction] = None

    def t_coeff(n: int) -> Fraction:
        e = alpha + n
        return t.coefficient(e) if e < t.truncation else Q(0)

    for n in range(order + 1):
        rhs_p = -t_coeff(n)
        rhs_h = Q(0)
        for i in range(1, n + 1):
            x = alpha + n - i
            xp = Q(1)
            coef = Q(0)
            for j in range(len(table)):
                if table[j][i]:
                    coef += table[j][i] * xp
                xp *= x
            if coef:
                rhs_p -= coef * part[n - i]
                rhs_h -= coef * hom[n - i]
        den = _poly_eval(p, alpha + n)
        if den != 0:
            part.append(rhs_p / den)
            hom.append(rhs_h / den)
            continue
        # resonant index
        if n == 0:
            if rhs_p != 0:
                raise ArithmeticError("inconsistent leading resonance")
            if upper == alpha:
                part.append(Q(0))  # gauge: kill the q^upper coefficient
                hom.append(Q(0))
                x_val = Q(0)
            else:
                part.append(Q(0))
                hom.append(Q(1))  # b_0 is the free leading coefficient
            continue
        if x_val is None and rhs_h != 0:
            x_val = -rhs_p / rhs_h
            part = [pp + x_val * hh for pp, hh in zip(part, hom)]
            hom = [Q(0)] * len(hom)
            rhs_p, rhs_h = Q(0), Q(0)
        if rhs_p != 0 or rhs_h != 0:
            raise ArithmeticError(f"inconsistent resonance at step {n}")
        part.append(Q(0))  # gauge: zero at every resonant index
        hom.append(Q(0))
    if x_val is None and any(hom):
        # free coefficient never pinned: normalize it to 1
        part = [pp + hh for pp, hh in zip(part, hom)]
    f0 = PuiseuxSeries(alpha, 1, tuple(part))
    return LogSeries(f0, f1.truncate(f0.truncation))


def modular_wronskian(system: Sequence[PuiseuxSeries]) -> PuiseuxSeries:
    """det(F, theta_0 F, theta_2 theta_0 F, ...) over the given solutions."""
    n = len(system)
    rows: list[list[PuiseuxSeries]] = [list(system)]
    w = Q(0)
    for _ in range(n - 1):
        rows.append([serre_derivation(f, w) for f in rows[-1]])
        w += 2

    def det(mat: list[list[PuiseuxSeries]]) -> PuiseuxSeries:
        if len(mat) == 1:
            return mat[0][0]
        acc = None
        for j in range(len(mat)):
            minor = [row[:j] + row[j + 1:] for row in mat[1:]]
            term = mat[0][j] * det(minor)
            if j % 2:
                term = -term
            acc = term if acc is None else acc + term
        return acc

    return det(rows)


#: fourth-order parameters whose operator rewrites through the second-order
#: family: s -> (inner second-order parameter, outer E4 coefficient)
SHARP_FACTORIZATIONS: dict[Fraction, tuple[Fraction, Fraction]] = {
    Q(32, 5): (mu(Q(19, 5)), Q(11, 3600)),
    Q(-8, 5): (mu(Q(1, 5)), Q(551, 3600)),
}


def factored_apply(s: QLike, f: SeriesLike) -> SeriesLike:
    """theta_6(theta_4(L(f))) - c*E4*L(f), the factored form of the
    fourth-order operator at the two parameters in SHARP_FACTORIZATIONS;
    equals build_flat(s).apply(f) identically."""
    s = rat(s)
    if s not in SHARP_FACTORIZATIONS:
        raise KeyError(f"no factored form catalogued at s = {s}")
    inner, c = SHARP_FACTORIZATIONS[s]
    if isinstance(f, PuiseuxSeries):
        order = int(f.truncation - f.base) + 2
    else:
        order = int(min(f.plain.truncation, f.log_part.truncation)
                    - min(f.plain.base, f.log_part.base)) + 2
    g = build_sharp(inner, order).apply(f)
    h = serre_derivation(g, 4, 2)
    e4 = F.eisenstein_e4(order)
    term = (e4 * g if isinstance(g, PuiseuxSeries) else g * e4).scale(c)
    return h - term
