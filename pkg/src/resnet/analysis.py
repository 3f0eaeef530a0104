"""Product-formula evaluation, resistance diameters, and convergence scans.

The scans walk the tower family P_n x Q_k (path times hypercube, Cartesian
product) and track how the corner-to-corner resistance grows with n. The
increments approach 1/2**k from below; reports carry both the increments
and their deviation from that limit so the approach is visible row by row.
"""

from __future__ import annotations

import csv
import io
import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import BudgetExceededError, DisconnectedNetworkError
from .exact import resistance_exact, resistance_matrix_exact
from .network import (
    ResistorNetwork,
    block_tower,
    cartesian_product,
    fan,
    hypercube,
    path,
)
from .spectra import (
    Spectrum,
    _kernel_mask,
    hypercube_spectrum,
    network_spectrum,
    path_spectrum,
    product_spectrum,
    resistance_spectral,
)

__all__ = [
    "DEFAULT_VERTEX_BUDGET",
    "DIAMETER_TIE_RTOL",
    "product_resistance",
    "DiameterReport",
    "resistance_diameter",
    "ScanRow",
    "ScanReport",
    "conjecture_scan",
    "DeltaRow",
    "DiameterDeltaReport",
    "diameter_delta_scan",
    "FanBounds",
    "fan_bounds",
    "scan_to_csv",
    "scan_to_json",
    "diameter_to_csv",
    "diameter_to_json",
]

DEFAULT_VERTEX_BUDGET = 4096
DIAMETER_TIE_RTOL = 1e-9


def _nonkernel(spec: Spectrum):
    kernel = _kernel_mask(spec.values)
    if int(kernel.sum()) != 1:
        raise DisconnectedNetworkError(
            "factor spectrum has a repeated zero eigenvalue; "
            "the underlying network is not connected"
        )
    keep = ~kernel
    return spec.values[keep], spec.vectors[keep]


def product_resistance(
    sg: Spectrum,
    sh: Spectrum,
    rg_uv,
    rh_xy,
    u: int,
    x: int,
    v: int,
    y: int,
) -> float:
    """Resistance between (u, x) and (v, y) in the Cartesian product.

    Takes the two factor spectra plus the in-factor resistances R_G[u, v]
    and R_H[x, y], and adds the cross term summed over non-constant
    eigenvector pairs:

        R = R_G[u,v]/m + R_H[x,y]/n
            + sum_{p,q} (Psi_pu Phi_qx - Psi_pv Phi_qy)^2 / (lambda_p + mu_q)

    Both factors must be connected.
    """
    n, m = sg.n, sh.n
    if not (0 <= u < n and 0 <= v < n):
        raise ValueError(f"first-factor ids must lie in [0, {n})")
    if not (0 <= x < m and 0 <= y < m):
        raise ValueError(f"second-factor ids must lie in [0, {m})")
    gvals, gvecs = _nonkernel(sg)
    hvals, hvecs = _nonkernel(sh)
    if u == v and x == y:
        return 0.0
    cross = np.outer(gvecs[:, u], hvecs[:, x]) - np.outer(gvecs[:, v], hvecs[:, y])
    denom = gvals[:, None] + hvals[None, :]
    total = float(rg_uv) / m + float(rh_xy) / n
    return total + float((cross * cross / denom).sum())


# ---------------------------------------------------------------------------
# resistance diameter
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class DiameterReport:
    """Largest pairwise resistance together with every pair attaining it."""

    diameter: object
    pairs: tuple[tuple[int, int], ...]
    label_pairs: tuple[tuple[str | None, str | None], ...]
    exact: bool

    @property
    def pair_count(self) -> int:
        return len(self.pairs)


def resistance_diameter(net: ResistorNetwork, mode: str = "exact") -> DiameterReport:
    """All-pairs maximum resistance with its complete tie set.

    Exact mode compares rationals, so ties are genuine equalities. Spectral
    mode works in floats and admits into the tie set any pair within a
    1e-9 relative band of the maximum.
    """
    if mode == "exact":
        table = resistance_matrix_exact(net)
        verts = net.vertices
        best = None
        for i, u in enumerate(verts):
            for v in verts[i + 1 :]:
                r = table[u, v]
                if best is None or r > best:
                    best = r
        pairs = tuple(
            (u, v)
            for i, u in enumerate(verts)
            for v in verts[i + 1 :]
            if table[u, v] == best
        )
    elif mode == "spectral":
        spec = network_spectrum(net)
        kernel = _kernel_mask(spec.values)
        if int(kernel.sum()) != 1:
            raise DisconnectedNetworkError("network is not connected")
        keep = ~kernel
        vecs = spec.vectors[keep]
        gram = vecs.T @ (vecs / spec.values[keep, None])
        d = np.diag(gram)
        rmat = d[:, None] + d[None, :] - 2.0 * gram
        best = float(np.max(rmat))
        cut = best - DIAMETER_TIE_RTOL * best
        uu, vv = np.nonzero(np.triu(rmat >= cut, k=1))
        pairs = tuple(zip((int(a) for a in uu), (int(b) for b in vv)))
        verts = net.vertices
    else:
        raise ValueError(f"unknown mode {mode!r}")
    if not pairs:
        raise ValueError("network has no vertex pair")
    label_pairs = tuple(
        (net.label_of(u), net.label_of(v)) for u, v in pairs
    )
    return DiameterReport(
        diameter=best,
        pairs=pairs,
        label_pairs=label_pairs,
        exact=(mode == "exact"),
    )


# ---------------------------------------------------------------------------
# convergence scans
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ScanRow:
    """One tower height: resistance, growth from the previous height, and
    that growth's distance from the limiting increment."""

    n: int
    value: object
    diff: object | None
    deviation: object | None


@dataclass(frozen=True)
class ScanReport:
    k: int
    pair: tuple[int, int]
    mode: str
    limit: Fraction
    rows: tuple[ScanRow, ...]

    @property
    def last_diff(self):
        return self.rows[-1].diff

    @property
    def last_deviation(self):
        return self.rows[-1].deviation


def _tower_network(n: int, k: int) -> ResistorNetwork:
    return cartesian_product(path(n), hypercube(k))


def _scan_value(args) -> tuple[int, object]:
    n, k, pair, mode = args
    side = 2**k
    u = pair[0]
    v = (n - 1) * side + pair[1]
    if mode == "exact":
        return n, resistance_exact(_tower_network(n, k), u, v)
    spec = product_spectrum(path_spectrum(n), hypercube_spectrum(k))
    return n, resistance_spectral(spec, u, v)


def conjecture_scan(
    k: int,
    n_max: int,
    pair: tuple[int, int] | None = None,
    mode: str = "exact",
    budget: int | None = None,
    jobs: int = 1,
) -> ScanReport:
    """Corner resistance of the path-times-hypercube tower for n = 2..n_max.

    Each row carries R_n between (a1, b_i) and (a_n, b_j); the first row is
    the baseline and subsequent rows add diff = R_n - R_{n-1} and
    |diff - 1/2**k|. The pair defaults to an antipodal hypercube pair. A
    vertex budget caps the largest tower; exceeding it raises rather than
    grinding.
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    if n_max < 2:
        raise ValueError("n_max must be at least 2")
    if mode not in ("exact", "spectral"):
        raise ValueError(f"unknown mode {mode!r}")
    side = 2**k
    if pair is None:
        pair = (0, side - 1)
    i, j = pair
    if not (0 <= i < side and 0 <= j < side):
        raise ValueError(f"pair ids must lie in [0, {side})")
    cap = DEFAULT_VERTEX_BUDGET if budget is None else budget
    if n_max * side > cap:
        raise BudgetExceededError(
            f"largest tower has {n_max * side} vertices, over the budget of {cap}"
        )
    ns = range(2, n_max + 1)
    tasks = [(n, k, (i, j), mode) for n in ns]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            values = dict(pool.map(_scan_value, tasks))
    else:
        values = dict(map(_scan_value, tasks))
    limit = Fraction(1, side)
    rows = []
    prev = None
    for n in ns:
        val = values[n]
        if prev is None:
            rows.append(ScanRow(n=n, value=val, diff=None, deviation=None))
        else:
            diff = val - prev
            dev = abs(diff - limit) if mode == "exact" else abs(diff - float(limit))
            rows.append(ScanRow(n=n, value=val, diff=diff, deviation=dev))
        prev = val
    return ScanReport(k=k, pair=(i, j), mode=mode, limit=limit, rows=tuple(rows))


@dataclass(frozen=True)
class DeltaRow:
    n: int
    diameter: Fraction
    delta: Fraction | None


@dataclass(frozen=True)
class DiameterDeltaReport:
    rows: tuple[DeltaRow, ...]
    endpoint_match: bool


def diameter_delta_scan(n_max: int) -> DiameterDeltaReport:
    """Growth of the square tower's resistance diameter, height by height.

    Runs exact diameters of the four-cycle towers for n = 2..n_max and
    cross-checks each diameter against the corner-pair scan at k = 2: the
    corner pairs are the diametrical pairs, so the two value columns must
    agree exactly. The report records whether they did.
    """
    if n_max < 2:
        raise ValueError("n_max must be at least 2")
    rows = []
    prev = None
    for n in range(2, n_max + 1):
        rep = resistance_diameter(block_tower(n), mode="exact")
        d = rep.diameter
        rows.append(DeltaRow(n=n, diameter=d, delta=None if prev is None else d - prev))
        prev = d
    scan = conjecture_scan(k=2, n_max=n_max, mode="exact")
    match = all(
        row.diameter == srow.value for row, srow in zip(rows, scan.rows)
    )
    return DiameterDeltaReport(rows=tuple(rows), endpoint_match=match)


# ---------------------------------------------------------------------------
# fan bounds
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class FanBounds:
    """Exact decay checks for the fan with n path vertices, strength m.

    endpoint_step: how much the end-to-end resistance grows with one more
    path vertex; apex_step: how much the end-to-apex resistance shrinks;
    apex_defect: twice end-to-apex minus end-to-end at fixed n. Each sits
    in an open interval whose upper end decays like m**-n.
    """

    n: int
    m: int
    endpoint_step: Fraction
    apex_step: Fraction
    apex_defect: Fraction

    @property
    def endpoint_step_ok(self) -> bool:
        return Fraction(0) < self.endpoint_step < Fraction(2, self.m**self.n)

    @property
    def apex_step_ok(self) -> bool:
        return Fraction(0) < self.apex_step < Fraction(1, self.m**self.n)

    @property
    def apex_defect_ok(self) -> bool:
        return Fraction(0) < self.apex_defect < Fraction(2, self.m**self.n)

    @property
    def all_hold(self) -> bool:
        return self.endpoint_step_ok and self.apex_step_ok and self.apex_defect_ok


def fan_bounds(n: int, m: int) -> FanBounds:
    """Evaluate the three fan decay quantities by exact solves."""
    if n < 2:
        raise ValueError("the fan needs at least two path vertices")
    small = fan(n, m)
    big = fan(n + 1, m)
    r_ends_n = resistance_exact(small, 0, n - 1)
    r_apex_n = resistance_exact(small, 0, n)
    r_ends_n1 = resistance_exact(big, 0, n)
    r_apex_n1 = resistance_exact(big, 0, n + 1)
    return FanBounds(
        n=n,
        m=m,
        endpoint_step=r_ends_n1 - r_ends_n,
        apex_step=r_apex_n - r_apex_n1,
        apex_defect=2 * r_apex_n - r_ends_n,
    )


# ---------------------------------------------------------------------------
# serialization
# ---------------------------------------------------------------------------

def _cell(x) -> str:
    if x is None:
        return ""
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, float):
        return repr(x)
    return str(x)


def _jcell(x):
    if x is None or isinstance(x, (int, float)):
        return x
    return str(x)


def scan_to_csv(report: ScanReport) -> str:
    out = io.StringIO()
    w = csv.writer(out, lineterminator="\n")
    w.writerow(["n", "R_n", "diff", "abs_dev_from_limit"])
    for row in report.rows:
        w.writerow([row.n, _cell(row.value), _cell(row.diff), _cell(row.deviation)])
    return out.getvalue()


def scan_to_json(report: ScanReport) -> str:
    obj = {
        "k": report.k,
        "pair": list(report.pair),
        "mode": report.mode,
        "limit": str(report.limit),
        "rows": [
            {
                "n": row.n,
                "R_n": _jcell(row.value),
                "diff": _jcell(row.diff),
                "abs_dev_from_limit": _jcell(row.deviation),
            }
            for row in report.rows
        ],
    }
    return json.dumps(obj, indent=2)


def diameter_to_csv(report: DiameterReport) -> str:
    out = io.StringIO()
    w = csv.writer(out, lineterminator="\n")
    w.writerow(["u", "v", "label_u", "label_v", "R"])
    for (u, v), (lu, lv) in zip(report.pairs, report.label_pairs):
        w.writerow([u, v, lu or "", lv or "", _cell(report.diameter)])
    return out.getvalue()


def diameter_to_json(report: DiameterReport) -> str:
    obj = {
        "diameter": _jcell(report.diameter),
        "exact": report.exact,
        "pairs": [
            {"u": u, "v": v, "label_u": lu, "label_v": lv}
            for (u, v), (lu, lv) in zip(report.pairs, report.label_pairs)
        ],
    }
    return json.dumps(obj, indent=2)
