"""Closed-form resistances for structured families.

Everything here is a direct formula evaluation: no linear solves, no graph
walks. The spectral-sum formulas take precomputed factor spectra so callers
can amortize them across many pairs.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .spectra import Spectrum

__all__ = [
    "LadderConstants",
    "LADDER",
    "kmn_resistance",
    "join_resistance",
    "cone_resistance",
    "ladder_endpoint_resistance",
    "ladder_gap",
    "hypercube_diameter",
    "block_tower_decomposition",
    "DecompositionReport",
]


@dataclass(frozen=True)
class LadderConstants:
    """Growth constants of the two-rail ladder recurrences.

    ``a`` and ``b`` are the roots of x**2 - 4x + 1 = 0; their product is 1,
    so b == 1/a == alpha.
    """

    alpha: float = 2.0 - math.sqrt(3.0)
    a: float = 2.0 + math.sqrt(3.0)
    b: float = 2.0 - math.sqrt(3.0)


LADDER = LadderConstants()


def kmn_resistance(m: int, n: int, side_u: str, side_v: str) -> Fraction:
    """Resistance in the unit complete bipartite network on m + n vertices.

    ``side_u`` and ``side_v`` name the parts ("x" for the m-side, "y" for
    the n-side) holding the two distinct vertices. Only the sides matter;
    the network is transitive within each part.
    """
    if m < 1 or n < 1:
        raise ValueError("both sides need at least one vertex")
    sides = (side_u, side_v)
    if any(s not in ("x", "y") for s in sides):
        raise ValueError("sides must be 'x' or 'y'")
    if sides == ("x", "x"):
        if m < 2:
            raise ValueError("two distinct x-side vertices need m >= 2")
        return Fraction(2, n)
    if sides == ("y", "y"):
        if n < 2:
            raise ValueError("two distinct y-side vertices need n >= 2")
        return Fraction(2, m)
    return Fraction(m + n - 1, m * n)


def join_resistance(sg: Spectrum, sh: Spectrum, u: int, v: int) -> float:
    """Resistance in the join of two networks from their factor spectra.

    The join adds a unit edge between every vertex of the first network
    (ids 0..n-1) and every vertex of the second (ids n..n+m-1). Vertex ids
    follow that shifted numbering. Spectra must carry the rotated basis in
    which the constant vector sits last; disconnected factors are fine
    because every factor eigenvalue is shifted by the other side's order.
    """
    n, m = sg.n, sh.n
    total = n + m
    if not (0 <= u < total and 0 <= v < total):
        raise ValueError(f"vertex ids must lie in [0, {total})")
    if u == v:
        return 0.0
    gu, gv = u < n, v < n
    if gu and gv:
        diffs = sg.vectors[:-1, u] - sg.vectors[:-1, v]
        return float(((diffs * diffs) / (sg.values[:-1] + m)).sum())
    if not gu and not gv:
        diffs = sh.vectors[:-1, u - n] - sh.vectors[:-1, v - n]
        return float(((diffs * diffs) / (sh.values[:-1] + n)).sum())
    if not gu:
        u, v = v, u
    x, w = u, v - n
    gpart = ((sg.vectors[:-1, x] ** 2) / (sg.values[:-1] + m)).sum()
    hpart = ((sh.vectors[:-1, w] ** 2) / (sh.values[:-1] + n)).sum()
    return float(gpart + hpart + 1.0 / (n * m))


def cone_resistance(sg: Spectrum, m: int, u: int, v: int) -> float:
    """Resistance in the cone over a network, each apex edge of
    resistance 1/m, from the base spectrum.

    Base vertices keep ids 0..n-1; the apex is vertex n. The cone over a
    base on n vertices behaves exactly like joining the base with a single
    m-fold-conductance hub, which shifts every base eigenvalue by m.
    """
    if not isinstance(m, int) or isinstance(m, bool) or m <= 1:
        raise ValueError("cone strength m must be an integer greater than 1")
    n = sg.n
    if not (0 <= u <= n and 0 <= v <= n):
        raise ValueError(f"vertex ids must lie in [0, {n}]")
    if u == v:
        return 0.0
    if u == n or v == n:
        x = v if u == n else u
        base = ((sg.vectors[:-1, x] ** 2) / (sg.values[:-1] + m)).sum()
        return float(base + 1.0 / (n * m))
    diffs = sg.vectors[:-1, u] - sg.vectors[:-1, v]
    return float(((diffs * diffs) / (sg.values[:-1] + m)).sum())


def ladder_endpoint_resistance(n: int) -> float:
    """Diagonal corner-to-corner resistance of the n-rung unit ladder.

    The ladder is the product of an n-vertex path with a single rung edge;
    the value grows like (n - 1)/2 plus a correction that settles toward a
    constant as the alternating alpha powers die out.
    """
    if n < 2:
        raise ValueError("the ladder needs at least two rungs")
    al = LADDER.alpha
    top = (1.0 + al ** (n - 1)) * (2.0 + 2.0 * al ** (n + 1) + 2.0 * al**n + 2.0 * al)
    bottom = 4.0 * math.sqrt(3.0) * (1.0 - al ** (2 * n))
    return (n - 1) / 2.0 + top / bottom


def ladder_gap(n: int) -> float:
    """How much farther the diagonal corner pair of the n-rung ladder is
    than the same-rail corner pair.

    Equals 2*sqrt(3)/(a**n - b**n): strictly positive, strictly
    decreasing, and geometrically small in n.
    """
    if n < 2:
        raise ValueError("the ladder needs at least two rungs")
    return 2.0 * math.sqrt(3.0) / (LADDER.a**n - LADDER.b**n)


def hypercube_diameter(k: int) -> Fraction:
    """Largest resistance in the unit k-cube: between antipodal corners.

    Exact value sum_{i=1..k} (k-i)! (i-1)! / k!, from peeling the cube
    into distance layers.
    """
    if not isinstance(k, int) or isinstance(k, bool) or k < 1:
        raise ValueError("dimension k must be a positive integer")
    kf = math.factorial(k)
    return sum(
        Fraction(math.factorial(k - i) * math.factorial(i - 1), kf)
        for i in range(1, k + 1)
    )


@dataclass(frozen=True)
class DecompositionReport:
    """Corner resistance of the square tower split into its two parts."""

    n: int
    lhs: object
    ladder_part: object
    fan_part: object
    rhs: object

    @property
    def residual(self):
        return self.lhs - self.rhs


def block_tower_decomposition(n: int, exact: bool = True) -> DecompositionReport:
    """Split the square tower's diagonal corner resistance.

    The tower of n stacked unit squares (path times 4-cycle) satisfies

        R_tower(corner, far corner) =
            R_ladder(corner, far corner) + R_fan(end, end)/4 - (n - 1)/4

    where the fan has n path vertices and strength 4. With ``exact`` the
    three terms come from exact solves and the residual is an exact zero;
    otherwise the right side uses the closed ladder form plus a float fan
    solve and the residual only vanishes to rounding.
    """
    from .exact import resistance_exact
    from .network import block_tower, fan, ladder

    if n < 2:
        raise ValueError("the tower needs n >= 2 levels")
    tower = block_tower(n)
    u = tower.find_label("(a1,b1)")
    v = tower.find_label(f"(a{n},b3)")
    lad = ladder(n)
    lu = lad.find_label("(a1,c1)")
    lv = lad.find_label(f"(a{n},c2)")
    fn = fan(n, 4)
    fu, fv = fn.find_label("a1"), fn.find_label(f"a{n}")
    if exact:
        lhs = resistance_exact(tower, u, v)
        lpart = resistance_exact(lad, lu, lv)
        fpart = resistance_exact(fn, fu, fv)
        rhs = lpart + fpart / 4 - Fraction(n - 1, 4)
    else:
        lhs = float(resistance_exact(tower, u, v))
        lpart = ladder_endpoint_resistance(n)
        fpart = float(resistance_exact(fn, fu, fv))
        rhs = lpart + fpart / 4.0 - (n - 1) / 4.0
    return DecompositionReport(n=n, lhs=lhs, ladder_part=lpart, fan_part=fpart, rhs=rhs)
