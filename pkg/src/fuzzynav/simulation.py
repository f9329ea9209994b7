"""Closed-loop goal-seeking simulation and controller comparison.

A scenario fixes the start pose, goal, timing, tolerances, robot geometry
and controller choice.  ``run`` integrates the loop (errors -> inference ->
twist -> Euler step) until the goal disc is reached or time runs out, and
reports the trajectory plus summary metrics.  ``compare`` reruns one
scenario with each built-in controller.  Everything here is deterministic:
identical scenarios produce identical trajectories, bit for bit.
"""
from __future__ import annotations

import json
import math
from dataclasses import dataclass, replace
from typing import NamedTuple

from .engine import DEFAULT_SAMPLES
from .kinematics import Pose, RobotParams, WheelSpeeds, step_euler, wheel_to_twist
from .navigator import Errors, Goal, compute_errors, control_step
from .rulebase import RuleBase, builtin
from .ruleformat import parse_rulebase

__all__ = [
    "Scenario",
    "TrajectorySample",
    "Metrics",
    "ComparisonEntry",
    "run",
    "compare",
    "ordering_report",
    "benchmark_scenario",
    "initial_distance",
    "resolve_controller",
    "scenario_from_dict",
    "scenario_to_dict",
    "load_scenario",
    "BUILTIN_CONTROLLERS",
    "BENCHMARK_DISTANCE",
    "BENCHMARK_DT",
]

BUILTIN_CONTROLLERS = ("3", "5", "7")

# Benchmark geometry: straight-line distance and control period.
BENCHMARK_DISTANCE = 24.41
BENCHMARK_DT = 0.1
BENCHMARK_BEARING = math.pi / 4

# When a scenario starts on top of its goal, the distance universe would
# collapse; it is floored at this width instead.
MIN_D_MAX = 1.0


@dataclass(frozen=True)
class Scenario:
    """One closed-loop run: geometry, timing, tolerances and controller.

    ``controller`` is "3", "5" or "7" for a built-in rule base, a path to a
    rule-definition file, or a ready-made :class:`RuleBase`.
    """

    start: Pose
    goal: Goal
    dt: float = BENCHMARK_DT
    max_time: float = 120.0
    goal_tol: float = 0.1
    angle_tol: float = 0.05
    params: RobotParams = RobotParams()
    controller: str | RuleBase = "3"

    def validate(self):
        """Raise ValueError naming the offending field if the scenario is invalid."""
        if not self.dt > 0:
            raise ValueError("scenario field 'dt' must be > 0")
        if not self.max_time >= self.dt:
            raise ValueError("scenario field 'max_time' must be >= dt")
        if not self.goal_tol > 0:
            raise ValueError("scenario field 'goal_tol' must be > 0")
        if not self.angle_tol > 0:
            raise ValueError("scenario field 'angle_tol' must be > 0")
        if isinstance(self.controller, str) and not self.controller:
            raise ValueError("scenario field 'controller' must not be empty")


class TrajectorySample(NamedTuple):
    """State recorded at one control tick; the terminal sample has zero wheels."""

    t: float
    pose: Pose
    errors: Errors
    wheels: WheelSpeeds


@dataclass(frozen=True)
class Metrics:
    """Summary of one run, comparable across controllers."""

    reached: bool
    time_to_target: float | None
    time_angle_aligned: float | None
    path_length: float
    rule_count: int


@dataclass(frozen=True)
class ComparisonEntry:
    """One controller's result on the shared comparison scenario."""

    controller: str
    metrics: Metrics | None
    trajectory: tuple[TrajectorySample, ...] | None
    error: str | None = None


def initial_distance(sc: Scenario) -> float:
    return math.hypot(sc.goal.x - sc.start.x, sc.goal.y - sc.start.y)


def resolve_controller(sc: Scenario) -> tuple[str, RuleBase]:
    """Materialise the scenario's controller as (label, rule base).

    Built-in controllers size their distance universe to the scenario's
    initial start-goal distance (floored at MIN_D_MAX) and their velocity
    universe to the robot's v_max.
    """
    spec = sc.controller
    if isinstance(spec, RuleBase):
        return "custom", spec
    if spec in BUILTIN_CONTROLLERS:
        d_max = max(initial_distance(sc), MIN_D_MAX)
        return spec, builtin(int(spec), d_max=d_max, v_max=sc.params.v_max)
    try:
        with open(spec, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise ValueError(
            f"scenario field 'controller': '{spec}' is not one of 3, 5, 7 "
            f"and not a readable rules file ({exc})"
        ) from exc
    return spec, parse_rulebase(text)


def run(sc: Scenario, samples: int = DEFAULT_SAMPLES) -> tuple[list[TrajectorySample], Metrics]:
    """Simulate ``sc`` to termination.

    Each tick: compute errors, record a sample, then stop if the goal disc
    is reached (e_d <= goal_tol) or time is up (t >= max_time); otherwise
    infer wheel speeds and advance one Euler step.  Termination is checked
    before actuation, so a run that starts at the goal never moves.
    Timestamps are k*dt exactly.
    """
    sc.validate()
    _, rb = resolve_controller(sc)
    trajectory: list[TrajectorySample] = []
    pose = sc.start
    k = 0
    reached = False
    time_aligned: float | None = None
    path_length = 0.0
    while True:
        t = k * sc.dt
        errors = compute_errors(pose, sc.goal)
        if time_aligned is None and abs(errors.e_theta) <= sc.angle_tol:
            time_aligned = t
        if errors.e_d <= sc.goal_tol:
            trajectory.append(TrajectorySample(t, pose, errors, WheelSpeeds(0.0, 0.0)))
            reached = True
            break
        if t >= sc.max_time:
            trajectory.append(TrajectorySample(t, pose, errors, WheelSpeeds(0.0, 0.0)))
            break
        wheels = control_step(rb, errors, samples)
        trajectory.append(TrajectorySample(t, pose, errors, wheels))
        new_pose = step_euler(pose, wheel_to_twist(wheels, sc.params), sc.dt)
        path_length += math.hypot(new_pose.x - pose.x, new_pose.y - pose.y)
        pose = new_pose
        k += 1
    metrics = Metrics(
        reached=reached,
        time_to_target=trajectory[-1].t if reached else None,
        time_angle_aligned=time_aligned,
        path_length=path_length,
        rule_count=len(rb.rules),
    )
    return trajectory, metrics


def compare(
    sc: Scenario,
    controllers: tuple[str, ...] = BUILTIN_CONTROLLERS,
    samples: int = DEFAULT_SAMPLES,
) -> list[ComparisonEntry]:
    """Run the same scenario once per controller.

    A failing run is reported in its row; the remaining rows are still
    produced.  Row order follows ``controllers``.
    """
    entries = []
    for name in controllers:
        candidate = replace(sc, controller=name)
        try:
            trajectory, metrics = run(candidate, samples)
            entries.append(ComparisonEntry(name, metrics, tuple(trajectory)))
        except (ValueError, RuntimeError) as exc:
            entries.append(ComparisonEntry(name, None, None, error=str(exc)))
    return entries


def ordering_report(entries: list[ComparisonEntry]) -> dict:
    """Which controller reached the goal fastest, as a JSON-friendly dict.

    ``three_mf_fastest`` is true/false when every run reached the goal and
    null otherwise; the flag is reported, not asserted, because the ranking
    depends on the membership-function layout.
    """
    times = {
        e.controller: (e.metrics.time_to_target if e.metrics and e.metrics.reached else None)
        for e in entries
    }
    if times and all(t is not None for t in times.values()):
        fastest = min(times, key=times.get)
        three_fastest = fastest == "3" if "3" in times else None
    else:
        fastest = None
        three_fastest = None
    return {"time_to_target": times, "fastest": fastest, "three_mf_fastest": three_fastest}


def benchmark_scenario(
    controller: str | RuleBase = "3",
    bearing: float = BENCHMARK_BEARING,
    distance: float = BENCHMARK_DISTANCE,
) -> Scenario:
    """Desk-scale comparison scenario: 24.41 m to the goal at 0.1 s ticks.

    The robot starts at the origin facing +x with the goal placed
    ``distance`` metres away at ``bearing``, so the default run opens with
    a 45-degree heading error.
    """
    return Scenario(
        start=Pose(0.0, 0.0, 0.0),
        goal=Goal(distance * math.cos(bearing), distance * math.sin(bearing)),
        controller=controller,
    )


_SCENARIO_KEYS = {"start", "goal", "dt", "max_time", "goal_tol", "angle_tol", "params", "controller"}
_START_KEYS = {"x", "y", "theta"}
_GOAL_KEYS = {"x", "y"}
_PARAMS_KEYS = {"wheel_base", "wheel_radius", "v_max"}


def _check_keys(mapping: dict, allowed: set[str], where: str):
    unknown = sorted(set(mapping) - allowed)
    if unknown:
        raise ValueError(f"unknown {where} key '{unknown[0]}'")


def _number(mapping: dict, key: str, where: str) -> float:
    value = mapping[key]
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise ValueError(f"{where} field '{key}' must be a number")
    return float(value)


def scenario_from_dict(data: dict) -> Scenario:
    """Build a Scenario from plain config data, rejecting unknown keys."""
    if not isinstance(data, dict):
        raise ValueError("scenario config must be a mapping")
    _check_keys(data, _SCENARIO_KEYS, "scenario")
    for required in ("start", "goal"):
        if required not in data:
            raise ValueError(f"scenario field '{required}' is required")

    start_map = data["start"]
    if not isinstance(start_map, dict) or not {"x", "y"} <= set(start_map):
        raise ValueError("scenario field 'start' must be a mapping with x and y (theta optional)")
    _check_keys(start_map, _START_KEYS, "start")
    start = Pose(
        _number(start_map, "x", "start"),
        _number(start_map, "y", "start"),
        _number(start_map, "theta", "start") if "theta" in start_map else 0.0,
    )

    goal_map = data["goal"]
    if not isinstance(goal_map, dict) or not _GOAL_KEYS <= set(goal_map):
        raise ValueError("scenario field 'goal' must be a mapping with x and y")
    _check_keys(goal_map, _GOAL_KEYS, "goal")
    goal = Goal(_number(goal_map, "x", "goal"), _number(goal_map, "y", "goal"))

    params = RobotParams()
    if "params" in data:
        params_map = data["params"]
        if not isinstance(params_map, dict):
            raise ValueError("scenario field 'params' must be a mapping")
        _check_keys(params_map, _PARAMS_KEYS, "params")
        kwargs = {k: _number(params_map, k, "params") for k in params_map}
        params = RobotParams(**kwargs)

    controller = data.get("controller", "3")
    if isinstance(controller, int) and not isinstance(controller, bool):
        controller = str(controller)
    if not isinstance(controller, str):
        raise ValueError("scenario field 'controller' must be '3', '5', '7' or a rules-file path")

    sc = Scenario(
        start=start,
        goal=goal,
        dt=_number(data, "dt", "scenario") if "dt" in data else BENCHMARK_DT,
        max_time=_number(data, "max_time", "scenario") if "max_time" in data else 120.0,
        goal_tol=_number(data, "goal_tol", "scenario") if "goal_tol" in data else 0.1,
        angle_tol=_number(data, "angle_tol", "scenario") if "angle_tol" in data else 0.05,
        params=params,
        controller=controller,
    )
    sc.validate()
    return sc


def scenario_to_dict(sc: Scenario) -> dict:
    """Config-shaped echo of a scenario (controller rendered as its label)."""
    return {
        "start": {"x": sc.start.x, "y": sc.start.y, "theta": sc.start.theta},
        "goal": {"x": sc.goal.x, "y": sc.goal.y},
        "dt": sc.dt,
        "max_time": sc.max_time,
        "goal_tol": sc.goal_tol,
        "angle_tol": sc.angle_tol,
        "params": {
            "wheel_base": sc.params.wheel_base,
            "wheel_radius": sc.params.wheel_radius,
            "v_max": sc.params.v_max,
        },
        "controller": sc.controller if isinstance(sc.controller, str) else "custom",
    }


def load_scenario(path: str) -> Scenario:
    """Read a JSON scenario config; see ``docs/scenario_format.md``."""
    with open(path, encoding="utf-8") as fh:
        try:
            data = json.load(fh)
        except json.JSONDecodeError as exc:
            raise ValueError(f"{path}: line {exc.lineno}: invalid JSON: {exc.msg}") from exc
    return scenario_from_dict(data)
