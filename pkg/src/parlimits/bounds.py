"""Back-of-envelope floors on (1 - alpha) from machine design numbers.

Each estimator converts one unavoidable serial cost into the fraction of
a reference run it would occupy. The reference run length total_cycles
is the caller's choice: a measured wall time in cycles gives "share of
that run", the summed payload gives a floor comparable with measured
alpha values. Four costs are covered:

    start-stop       fixed cycles to enter/leave the parallel section
    propagation      2 * distance / signal speed, plus message handling,
                     converted to cycles at the machine clock
    context-switch   cycles for one OS context switch
    os-looping       a dispatch loop touching every unit once

Signals travel at most about 2e8 m/s in cable or fiber, which is the
constant used for the propagation bound.

Grouped dispatch (a management unit drives a block of cores, so the
loop only touches block leaders) divides the os-looping bound by the
block size at the price of the management cores' capacity.

Bounds are floors under composition: the combined limit of several
mechanisms is at least each one alone, so combined_limit simply keeps
the largest.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Mapping, Sequence

# Fastest practical signal propagation in interconnect, m/s.
SIGNAL_SPEED = 2e8

_KINDS = ("start-stop", "propagation", "context-switch", "os-looping")


@dataclass(frozen=True)
class BoundReport:
    """One estimated floor on (1 - alpha) plus the inputs that made it.

    bound may be 0 when the mechanism is absent (zero cycles, zero
    distance); it is still a valid, if vacuous, floor.
    """

    kind: str
    bound: float
    assumptions: Mapping[str, float]

    def __post_init__(self) -> None:
        if self.kind not in _KINDS:
            raise ValueError(f"kind must be one of {_KINDS}, got {self.kind!r}")
        if not (math.isfinite(self.bound) and self.bound >= 0):
            raise ValueError(f"bound must be finite and >= 0, got {self.bound!r}")

    def describe(self, full_precision: bool = False) -> str:
        """One line, one significant digit by default (these are estimates)."""
        value = repr(self.bound) if full_precision else f"{self.bound:.0e}"
        return f"{self.kind}: (1-alpha) >= {value}"


def _check_total(total_cycles: float) -> float:
    total_cycles = float(total_cycles)
    if not (math.isfinite(total_cycles) and total_cycles > 0):
        raise ValueError(f"total_cycles must be positive, got {total_cycles!r}")
    return total_cycles


def _check_nonneg(value: float, name: str) -> float:
    value = float(value)
    if not (math.isfinite(value) and value >= 0):
        raise ValueError(f"{name} must be finite and >= 0, got {value!r}")
    return value


def bound_start_stop(cycles: float, total_cycles: float) -> BoundReport:
    """Fixed entry/exit cost of the parallel section."""
    cycles = _check_nonneg(cycles, "cycles")
    total_cycles = _check_total(total_cycles)
    return BoundReport(
        kind="start-stop",
        bound=cycles / total_cycles,
        assumptions={"cycles": cycles, "total_cycles": total_cycles},
    )


def bound_propagation(distance_m: float, clock_hz: float, message_time_s: float,
                      total_cycles: float) -> BoundReport:
    """Round-trip signal travel plus per-message handling time.

    cycles = (2 * distance / SIGNAL_SPEED + message_time) * clock
    """
    distance_m = _check_nonneg(distance_m, "distance_m")
    message_time_s = _check_nonneg(message_time_s, "message_time_s")
    clock_hz = float(clock_hz)
    if not (math.isfinite(clock_hz) and clock_hz > 0):
        raise ValueError(f"clock_hz must be positive, got {clock_hz!r}")
    total_cycles = _check_total(total_cycles)
    cycles = (2.0 * distance_m / SIGNAL_SPEED + message_time_s) * clock_hz
    return BoundReport(
        kind="propagation",
        bound=cycles / total_cycles,
        assumptions={
            "distance_m": distance_m,
            "clock_hz": clock_hz,
            "message_time_s": message_time_s,
            "signal_speed_m_per_s": SIGNAL_SPEED,
            "total_cycles": total_cycles,
        },
    )


def bound_context_switch(cycles: float, total_cycles: float) -> BoundReport:
    """One OS context switch on the critical path."""
    cycles = _check_nonneg(cycles, "cycles")
    total_cycles = _check_total(total_cycles)
    return BoundReport(
        kind="context-switch",
        bound=cycles / total_cycles,
        assumptions={"cycles": cycles, "total_cycles": total_cycles},
    )


def bound_os_looping(n_units: float, cycles_per_dispatch: float,
                     total_cycles: float) -> BoundReport:
    """A serial dispatch loop that touches every unit once."""
    n_units = float(n_units)
    if not (math.isfinite(n_units) and n_units >= 1):
        raise ValueError(f"n_units must be >= 1, got {n_units!r}")
    cycles_per_dispatch = _check_nonneg(cycles_per_dispatch, "cycles_per_dispatch")
    total_cycles = _check_total(total_cycles)
    return BoundReport(
        kind="os-looping",
        bound=n_units * cycles_per_dispatch / total_cycles,
        assumptions={
            "n_units": n_units,
            "cycles_per_dispatch": cycles_per_dispatch,
            "total_cycles": total_cycles,
        },
    )


@dataclass(frozen=True)
class GroupingEffect:
    """What grouped dispatch does to the os-looping floor.

    addressable_units is how many dispatch targets remain; the loop
    bound shrinks by reduction_factor; capacity_loss is the fraction of
    cores spent on management instead of payload.
    """

    addressable_units: int
    reduction_factor: float
    capacity_loss: float
    bound: BoundReport


def mpe_grouping_effect(n_cores: int, cores_per_group: int, mpe_per_group: int,
                        cycles_per_dispatch: float, total_cycles: float) -> GroupingEffect:
    """Dispatch to group leaders instead of individual cores.

    n_cores must split evenly into groups. cores_per_group == 1 means
    no grouping: nothing is reduced and nothing is sacrificed.
    """
    for name, v in (("n_cores", n_cores), ("cores_per_group", cores_per_group),
                    ("mpe_per_group", mpe_per_group)):
        if not isinstance(v, int) or v < 1:
            raise ValueError(f"{name} must be an integer >= 1, got {v!r}")
    if mpe_per_group >= cores_per_group and cores_per_group > 1:
        raise ValueError("a group cannot be all management cores")
    if n_cores % cores_per_group != 0:
        raise ValueError(
            f"n_cores {n_cores} does not divide into groups of {cores_per_group}"
        )
    addressable = n_cores // cores_per_group
    loss = 0.0 if cores_per_group == 1 else mpe_per_group / cores_per_group
    report = bound_os_looping(addressable, cycles_per_dispatch, total_cycles)
    return GroupingEffect(
        addressable_units=addressable,
        reduction_factor=float(cores_per_group),
        capacity_loss=loss,
        bound=report,
    )


def combined_limit(reports: Sequence[BoundReport]) -> BoundReport:
    """The governing floor: the largest of the given bounds.

    Order never matters and combining a result with itself changes
    nothing. An empty list has no governing bound and is an error.
    """
    if not reports:
        raise ValueError("combined_limit needs at least one bound")
    return max(reports, key=lambda r: r.bound)
