"""Pseudo-Riemannian metrics given componentwise on a chart.

A MetricField stores the matrix of component fields g_ij together with
the declared signature.  metric_at evaluates everything a curvature
computation needs at one point: g, its inverse, first and second
coordinate derivatives of g, and the determinant, with hard failures
on near-singular matrices and on signature disagreement.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence, Union

import numpy as np

from .autodiff import eval_jet2
from .errors import SignatureMismatchError, SingularMetricError
from .expressions import ScalarField, constant_field, parse_expression

__all__ = [
    "MetricField",
    "MetricAtPoint",
    "metric_at",
    "parse_signature",
    "flat_metric",
    "sphere_metric",
    "DET_CUTOFF",
]

# Below this |det g| the chart is treated as degenerate at the point.
DET_CUTOFF = 1e-12

ComponentLike = Union[ScalarField, float, int, str]


def parse_signature(text: str) -> tuple[int, ...]:
    """Read a signature such as '++', '-+++' or '(-, +, +)'."""
    signs: list[int] = []
    for ch in text:
        if ch == "+":
            signs.append(1)
        elif ch == "-":
            signs.append(-1)
        elif ch in " ,()":
            continue
        else:
            raise ValueError(f"unexpected character {ch!r} in signature {text!r}")
    if not signs:
        raise ValueError(f"empty signature {text!r}")
    return tuple(signs)


def _as_field(chart: tuple[str, ...], value: ComponentLike) -> ScalarField:
    if isinstance(value, ScalarField):
        if value.chart != chart:
            raise ValueError(f"chart mismatch: {chart} vs {value.chart}")
        return value
    if isinstance(value, (int, float)):
        return constant_field(chart, float(value))
    if isinstance(value, str):
        return parse_expression(value, chart)
    raise TypeError(f"cannot use {type(value).__name__} as a metric component")


@dataclass(frozen=True)
class MetricField:
    """Symmetric matrix of scalar fields with a declared signature."""

    chart: tuple[str, ...]
    components: tuple[tuple[ScalarField, ...], ...]
    signature: tuple[int, ...]

    @property
    def dimension(self) -> int:
        return len(self.chart)

    def component(self, i: int, j: int) -> ScalarField:
        return self.components[i][j]

    @staticmethod
    def from_rows(
        chart: Sequence[str],
        rows: Sequence[Sequence[ComponentLike]],
        signature: str | Sequence[int],
    ) -> "MetricField":
        chart_t = tuple(chart)
        n = len(chart_t)
        if len(rows) != n or any(len(r) != n for r in rows):
            raise ValueError(f"metric needs {n}x{n} rows for chart {chart_t}")
        sig = parse_signature(signature) if isinstance(signature, str) else tuple(
            int(s) for s in signature
        )
        if len(sig) != n or any(s not in (-1, 1) for s in sig):
            raise ValueError(f"signature {sig} does not fit dimension {n}")
        fields = [[_as_field(chart_t, rows[i][j]) for j in range(n)] for i in range(n)]
        # Store one object per unordered pair so g_ij and g_ji cannot drift.
        for i in range(n):
            for j in range(i + 1, n):
                if fields[i][j].root != fields[j][i].root:
                    raise ValueError(
                        f"metric rows are not symmetric at ({i}, {j})"
                    )
                fields[j][i] = fields[i][j]
        return MetricField(chart_t, tuple(tuple(r) for r in fields), sig)

    def at(self, point: Sequence[float]) -> "MetricAtPoint":
        return metric_at(self, point)


@dataclass(frozen=True, eq=False)
class MetricAtPoint:
    """Pointwise data of a metric: value, inverse, derivatives.

    Index layout: ``dg[k, i, j]`` is the k-th coordinate derivative of
    g_ij and ``d2g[k, l, i, j]`` the (k, l) second derivative.
    """

    point: np.ndarray
    g: np.ndarray
    g_inv: np.ndarray
    dg: np.ndarray
    d2g: np.ndarray
    det: float


def metric_at(metric: MetricField, point: Sequence[float]) -> MetricAtPoint:
    n = metric.dimension
    p = np.asarray(point, dtype=float)
    if p.shape != (n,):
        raise ValueError(f"point has shape {p.shape}, chart has {n} names")
    g = np.zeros((n, n))
    dg = np.zeros((n, n, n))
    d2g = np.zeros((n, n, n, n))
    for i in range(n):
        for j in range(i, n):
            jet = eval_jet2(metric.components[i][j], p)
            g[i, j] = g[j, i] = jet.value
            dg[:, i, j] = dg[:, j, i] = jet.gradient
            d2g[:, :, i, j] = d2g[:, :, j, i] = jet.hessian
    det = float(np.linalg.det(g))
    if abs(det) < DET_CUTOFF:
        raise SingularMetricError(
            f"metric is singular at {p.tolist()} (det = {det:.3e})"
        )
    eigs = np.linalg.eigvalsh(g)
    negatives = int(np.sum(eigs < 0.0))
    positives = int(np.sum(eigs > 0.0))
    want_neg = sum(1 for s in metric.signature if s < 0)
    want_pos = len(metric.signature) - want_neg
    if negatives != want_neg or positives != want_pos:
        raise SignatureMismatchError(
            f"metric at {p.tolist()} has {negatives} negative and {positives} "
            f"positive directions, declared signature {metric.signature}"
        )
    g_inv = np.linalg.inv(g)
    return MetricAtPoint(p, g, g_inv, dg, d2g, det)


def flat_metric(chart: Sequence[str], signature: str | None = None) -> MetricField:
    """Constant diagonal metric with entries from ``signature`` (all +1
    when omitted)."""
    chart_t = tuple(chart)
    n = len(chart_t)
    sig = (1,) * n if signature is None else parse_signature(signature)
    if len(sig) != n:
        raise ValueError(f"signature {sig} does not fit dimension {n}")
    rows = [[float(sig[i]) if i == j else 0.0 for j in range(n)] for i in range(n)]
    return MetricField.from_rows(chart_t, rows, sig)


def sphere_metric(radius: float = 1.0, chart: Sequence[str] = ("u", "v")) -> MetricField:
    """Round 2-sphere of the given radius; u is the polar angle."""
    chart_t = tuple(chart)
    if len(chart_t) != 2:
        raise ValueError("sphere chart needs exactly two names")
    u = chart_t[0]
    r2 = float(radius) ** 2
    return MetricField.from_rows(
        chart_t,
        [
            [str(r2), "0"],
            ["0", f"{r2}*sin({u})^2"],
        ],
        "++",
    )
