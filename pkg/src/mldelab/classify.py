"""Diophantine classification of parameters s admitting a CFT-type solution.

For each of the four indicial roots of the fourth-order family, the n = 1
step of the Frobenius recursion is a quadratic Diophantine constraint
linking t = m*s to the first Fourier coefficient a1.  Writing the
constraint as (first factor d) * (cofactor) = C, every admissible t comes
from a divisor d of C with the induced a1 a non-negative integer.  The
surviving candidates are then filtered by demanding that the full
Frobenius expansion stays of CFT type up to a per-case depth.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Optional, Sequence

from .mlde import Resonance, build_flat, frobenius_solve
from .series import Q, QLike, rat


@dataclass(frozen=True)
class CaseSpec:
    """One indicial-root case of the n = 1 Diophantine analysis."""

    case_id: int
    m: int                              # substitution t = m*s
    constant: int                       # C in (d) * (cofactor) = C
    d_offset: int                       # t = d + d_offset
    a1_of_d: Callable[[int], Fraction]  # a1 induced by the divisor d
    root_of_s: Callable[[Fraction], Fraction]
    excluded_linear_root: Fraction
    filter_depth: int


CASES: dict[int, CaseSpec] = {
    1: CaseSpec(
        case_id=1, m=5, constant=-2880, d_offset=42,
        a1_of_d=lambda d: Q(-2880, d) - d - 108,
        root_of_s=lambda s: -s / 24 - Q(1, 20),
        excluded_linear_root=Q(54, 5), filter_depth=4),
    2: CaseSpec(
        case_id=2, m=15, constant=100800, d_offset=306,
        a1_of_d=lambda d: (Q(-100800, d) - d - 632) / 3,
        root_of_s=lambda s: -s / 24 + Q(3, 4),
        excluded_linear_root=Q(18), filter_depth=32),
    3: CaseSpec(
        case_id=3, m=5, constant=4200, d_offset=-78,
        a1_of_d=lambda d: d - 130 + Q(4200, d),
        root_of_s=lambda s: s / 24 + Q(1, 4),
        excluded_linear_root=Q(-6), filter_depth=23),
    4: CaseSpec(
        case_id=4, m=5, constant=180, d_offset=-18,
        a1_of_d=lambda d: d - 27 + Q(180, d),
        root_of_s=lambda s: s / 24 + Q(1, 20),
        excluded_linear_root=Q(-66, 5), filter_depth=3),
}

#: values whose CFT-type solutions are quasimodular of positive depth
QUASIMODULAR_VALUES: tuple[Fraction, ...] = (
    Q(-318, 5), Q(-198, 5), Q(-138, 5), Q(-78, 5), Q(-18, 5), Q(42, 5))


def _signed_divisors(n: int) -> list[int]:
    n = abs(n)
    out = []
    d = 1
    while d * d <= n:
        if n % d == 0:
            out.extend((d, -d, n // d, -(n // d)))
        d += 1
    return sorted(set(out))


def enumerate_case(case: CaseSpec) -> list[tuple[Fraction, int]]:
    """All (s, a1) with a1 a non-negative integer, sorted by s."""
    out = []
    for d in _signed_divisors(case.constant):
        a1 = case.a1_of_d(d)
        if a1.denominator != 1 or a1 < 0:
            continue
        t = d + case.d_offset
        out.append((Q(t, case.m), int(a1)))
    return sorted(out)


@dataclass(frozen=True)
class CandidateReport:
    case_id: int
    raw_candidates: tuple[tuple[Fraction, int], ...]
    survivors_by_depth: dict[int, tuple[Fraction, ...]]
    final: tuple[Fraction, ...]
    resonant: tuple[Fraction, ...] = ()


def filter_candidates(case: CaseSpec,
                      candidates: Optional[Sequence[tuple[Fraction, int]]] = None,
                      depth: Optional[int] = None) -> CandidateReport:
    """Keep s iff the Frobenius solution at the case root is CFT type to depth.

    Also cross-checks the Diophantine a1 against the recursion's a1.
    """
    if candidates is None:
        candidates = enumerate_case(case)
    depth = depth if depth is not None else case.filter_depth
    passed_upto: dict[Fraction, int] = {}
    resonant: list[Fraction] = []
    for s, a1 in candidates:
        alpha = case.root_of_s(s)
        op = build_flat(s, depth + 1)
        try:
            f = frobenius_solve(op, alpha, depth)
        except Resonance:
            resonant.append(s)
            passed_upto[s] = 0
            continue
        coeffs = [f.coefficient(alpha + n) for n in range(depth + 1)]
        if coeffs[1] != a1:
            raise AssertionError(
                f"case {case.case_id}, s={s}: Diophantine a1={a1} but recursion a1={coeffs[1]}")
        good = depth
        for n in range(1, depth + 1):
            c = coeffs[n]
            if c.denominator != 1 or c < 0:
                good = n - 1
                break
        passed_upto[s] = good
    survivors_by_depth = {
        k: tuple(s for s, _ in candidates if passed_upto[s] >= k)
        for k in range(1, depth + 1)
    }
    return CandidateReport(
        case_id=case.case_id,
        raw_candidates=tuple(candidates),
        survivors_by_depth=survivors_by_depth,
        final=survivors_by_depth[depth],
        resonant=tuple(resonant))


def classify_all(depths: Optional[dict[int, int]] = None) -> tuple[Fraction, ...]:
    """Union of the four filtered cases plus the excluded linear roots."""
    values: set[Fraction] = set()
    for cid, case in CASES.items():
        depth = (depths or {}).get(cid)
        values.update(filter_candidates(case, depth=depth).final)
        values.add(case.excluded_linear_root)
    return tuple(sorted(values))


def strictly_modular_candidates(depths: Optional[dict[int, int]] = None) -> tuple[Fraction, ...]:
    """The classification minus the six quasimodular values (17 numbers)."""
    return tuple(s for s in classify_all(depths) if s not in QUASIMODULAR_VALUES)


# -- printed polynomial oracles (regression fixtures) -----------------

def n1_polynomial_fixture(case_id: int, s: QLike, a1: QLike) -> Fraction:
    """The factored n = 1 polynomial of the given case, evaluated at (s, a1)."""
    s, a1 = rat(s), rat(a1)
    if case_id == 1:
        return (5 * s - 54) * (25 * s * s + 5 * s * a1 + 120 * s - 42 * a1 + 108)
    if case_id == 2:
        return (s - 18) * (75 * s * s + 15 * s * a1 + 100 * s - 306 * a1 + 348)
    if case_id == 3:
        return (s + 6) * (25 * s * s - 5 * s * a1 + 130 * s - 78 * a1 + 144)
    if case_id == 4:
        return (5 * s + 66) * (25 * s * s - 5 * s * a1 + 45 * s - 18 * a1 + 18)
    raise KeyError(f"unknown case {case_id}")


def n2_polynomial_fixture(case_id: int, s: QLike, a1: QLike, a2: QLike) -> Fraction:
    """The expanded n = 2 polynomial of the given case, evaluated at (s, a1, a2)."""
    s, a1, a2 = rat(s), rat(a1), rat(a2)
    if case_id == 1:
        return (-386208 - 720360 * s - 355500 * s**2 - 15750 * s**3 + 3125 * s**4
                - 72792 * a1 - 22140 * s * a1 - 26250 * s**2 * a1 + 1375 * s**3 * a1
                + 139536 * a2 - 12960 * s * a2 + 300 * s**2 * a2)
    if case_id == 2:
        return (625 * s**4 - 1350 * s**3 + 475 * a1 * s**3 - 155340 * s**2
                - 13650 * a1 * s**2 + 140 * a2 * s**2 - 385128 * s - 1836 * a1 * s
                - 8736 * a2 * s - 474336 + 161352 * a1 + 136080 * a2)
    if case_id == 3:
        return (-245592 - 295812 * s - 124830 * s**2 - 9975 * s**3 + 625 * s**4
                + 15120 * a1 + 9216 * s * a1 - 6180 * s**2 * a1 - 400 * s**3 * a1
                + 54648 * a2 + 5016 * s * a2 + 110 * s**2 * a2)
    if case_id == 4:
        return (-661608 - 1138860 * s - 551250 * s**2 - 47625 * s**3 + 3125 * s**4
                - 41472 * a1 + 11160 * s * a1 - 24000 * s**2 * a1 - 1750 * s**3 * a1
                + 176904 * a2 + 18360 * s * a2 + 450 * s**2 * a2)
    raise KeyError(f"unknown case {case_id}")
