"""Small statistics layer for list data: straight-line fits in chosen
axis spaces, per-category fits, Spearman rank correlation, and
cross-benchmark ratio summaries.

Fits are ordinary least squares on (possibly log10-transformed) values,
computed with centered sums. Points a log10 axis cannot represent
(zero or negative) are excluded and counted, never silently eaten.
Points are sorted before summation so the result is exactly independent
of input order.
"""
from __future__ import annotations

import math
import statistics
from dataclasses import dataclass
from typing import Hashable, Iterable, Sequence

_AXIS_KINDS = ("linear", "log10")


@dataclass(frozen=True)
class AxisSpec:
    """How to transform each coordinate before fitting."""

    x: str = "linear"
    y: str = "linear"

    def __post_init__(self) -> None:
        for name, kind in (("x", self.x), ("y", self.y)):
            if kind not in _AXIS_KINDS:
                raise ValueError(f"axis {name} must be one of {_AXIS_KINDS}, got {kind!r}")


def _transform(kind: str, value: float) -> float | None:
    """Transformed coordinate, or None when the axis cannot express it."""
    if kind == "log10":
        return math.log10(value) if value > 0 else None
    return float(value)


@dataclass(frozen=True)
class RegressionFit:
    """A line y = slope * x + intercept in transformed axis space.

    n counts the fitted points, n_excluded the ones a log axis had to
    drop. residuals are per fitted point, transformed space, in the
    sorted-point order used for fitting. x_range brackets the fitted
    x values so predictions outside it can be flagged as extrapolation.
    """

    category: str
    axes: AxisSpec
    slope: float
    intercept: float
    n: int
    n_excluded: int
    residuals: tuple[float, ...]
    rms_residual: float
    x_range: tuple[float, float]

    def __post_init__(self) -> None:
        if self.n < 2:
            raise ValueError(f"a line needs at least 2 points, got {self.n}")
        if len(self.residuals) != self.n:
            raise ValueError("one residual per fitted point required")

    def predict(self, x: float) -> float:
        """Predicted y in transformed space at transformed x."""
        return self.slope * x + self.intercept

    def extrapolates(self, x: float) -> bool:
        """True when transformed x lies outside the fitted range."""
        lo, hi = self.x_range
        return x < lo or x > hi


def fit(points: Iterable[tuple[float, float]], axes: AxisSpec = AxisSpec(),
        category: str = "") -> RegressionFit:
    """Least-squares line through (x, y) points in the axes' space."""
    kept: list[tuple[float, float]] = []
    excluded = 0
    for x, y in points:
        tx = _transform(axes.x, x)
        ty = _transform(axes.y, y)
        if tx is None or ty is None:
            excluded += 1
            continue
        kept.append((tx, ty))
    if len(kept) < 2:
        raise ValueError(
            f"need at least 2 usable points, got {len(kept)} "
            f"({excluded} excluded by log axes)"
        )
    kept.sort()
    xs = [p[0] for p in kept]
    ys = [p[1] for p in kept]
    if xs[0] == xs[-1]:
        raise ValueError("all x values are equal; the slope is undefined")

    x_mean = math.fsum(xs) / len(xs)
    y_mean = math.fsum(ys) / len(ys)
    sxy = math.fsum((x - x_mean) * (y - y_mean) for x, y in kept)
    sxx = math.fsum((x - x_mean) ** 2 for x in xs)
    slope = sxy / sxx
    intercept = y_mean - slope * x_mean
    residuals = tuple(y - (slope * x + intercept) for x, y in kept)
    rms = math.sqrt(math.fsum(r * r for r in residuals) / len(residuals))

    return RegressionFit(
        category=category,
        axes=axes,
        slope=slope,
        intercept=intercept,
        n=len(kept),
        n_excluded=excluded,
        residuals=residuals,
        rms_residual=rms,
        x_range=(xs[0], xs[-1]),
    )


def fit_by_category(points: Iterable[tuple[str, float, float]],
                    axes: AxisSpec = AxisSpec(),
                    ) -> tuple[dict[str, RegressionFit], dict[str, int]]:
    """One fit per category; categories with fewer than 2 usable points
    come back in the second mapping (category -> point count) instead."""
    grouped: dict[str, list[tuple[float, float]]] = {}
    for category, x, y in points:
        grouped.setdefault(category, []).append((x, y))
    fits: dict[str, RegressionFit] = {}
    unfit: dict[str, int] = {}
    for category in sorted(grouped):
        try:
            fits[category] = fit(grouped[category], axes, category=category)
        except ValueError:
            unfit[category] = len(grouped[category])
    return fits, unfit


@dataclass(frozen=True)
class RankPairing:
    """The same items ranked two ways; ranks are permutations of 1..n."""

    entries: tuple[tuple[Hashable, int, int], ...]

    def __post_init__(self) -> None:
        ids = [e[0] for e in self.entries]
        if len(set(ids)) != len(ids):
            raise ValueError("duplicate ids in rank pairing")
        n = len(self.entries)
        for side, ranks in (("A", self.ranks_a), ("B", self.ranks_b)):
            if sorted(ranks) != list(range(1, n + 1)):
                raise ValueError(
                    f"ranking {side} must be a permutation of 1..{n}, got {ranks}"
                )

    @property
    def ranks_a(self) -> tuple[int, ...]:
        return tuple(e[1] for e in self.entries)

    @property
    def ranks_b(self) -> tuple[int, ...]:
        return tuple(e[2] for e in self.entries)

    @classmethod
    def from_raw(cls, entries: Iterable[tuple[Hashable, int, int]]) -> RankPairing:
        """Densify two raw rankings (any distinct integers, e.g. list
        positions with absentees) into permutations of 1..n, preserving
        order. Tied raw ranks are refused: this pairing has no tie rule."""
        entries = list(entries)
        raw_a = [e[1] for e in entries]
        raw_b = [e[2] for e in entries]
        for side, ranks in (("A", raw_a), ("B", raw_b)):
            if len(set(ranks)) != len(ranks):
                raise ValueError(f"ranking {side} contains duplicate ranks")
        pos_a = {r: i + 1 for i, r in enumerate(sorted(raw_a))}
        pos_b = {r: i + 1 for i, r in enumerate(sorted(raw_b))}
        return cls(tuple(
            (ident, pos_a[ra], pos_b[rb]) for ident, ra, rb in entries
        ))

    def __len__(self) -> int:
        return len(self.entries)


def rank_correlation(pairing: RankPairing) -> float:
    """Spearman's rho: 1 - 6 * sum(d^2) / (n * (n^2 - 1)).

    Needs n >= 3; with fewer items every pairing is trivially perfect
    or reversed and the statistic means nothing.
    """
    n = len(pairing)
    if n < 3:
        raise ValueError(f"rank correlation needs at least 3 items, got {n}")
    d2 = sum((a - b) ** 2 for a, b in zip(pairing.ranks_a, pairing.ranks_b))
    return 1.0 - 6.0 * d2 / (n * (n * n - 1))


def is_weak_agreement(rho: float, threshold: float = 0.5) -> bool:
    """True when |rho| falls below the agreement threshold."""
    if not (0 < threshold <= 1):
        raise ValueError(f"threshold must be in (0, 1], got {threshold!r}")
    return abs(rho) < threshold


@dataclass(frozen=True)
class RatioSummary:
    """Per-item ratios between two paired series plus their median.

    plausible records whether the median falls inside the expected
    band: far outside it, the pairing itself is suspect.
    """

    ratios: tuple[float, ...]
    median: float
    band: tuple[float, float]
    plausible: bool


def cross_benchmark_ratio(pairs: Sequence[tuple[float, float]],
                          band: tuple[float, float] = (10.0, 1e4)) -> RatioSummary:
    """Ratios second/first for paired positive values, with their median.

    The default band says: the second series is expected to sit one to
    four decades above the first.
    """
    if not pairs:
        raise ValueError("need at least one pair")
    lo, hi = band
    if not (0 < lo < hi):
        raise ValueError(f"band must be increasing and positive, got {band!r}")
    ratios = []
    for first, second in pairs:
        if not (first > 0 and second > 0):
            raise ValueError(f"values must be positive, got {(first, second)!r}")
        ratios.append(second / first)
    med = statistics.median(ratios)
    return RatioSummary(
        ratios=tuple(ratios),
        median=med,
        band=(lo, hi),
        plausible=lo <= med <= hi,
    )
