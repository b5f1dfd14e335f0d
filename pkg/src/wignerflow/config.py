"""Scenario configuration: a flat ``key = value`` document with dotted keys.

The exact grammar is documented in ``docs/config-format.md``.  Parsing is
strict: unknown keys, malformed lines and out-of-domain values are
rejected with the offending line or key named in the error.  A parsed
configuration is fully resolved (all defaults applied), and
``serialize_config`` emits a document that parses back to the identical
configuration.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

import numpy as np

from .drives import DriveSpec
from .pictures import Picture, default_samples

__all__ = ["ConfigError", "ScenarioConfig", "parse_config", "serialize_config"]


class ConfigError(ValueError):
    """Malformed or out-of-domain scenario configuration."""


_FLOAT_KEYS = {
    "initial.mu_x", "initial.s",
    "drive.omega0", "drive.g", "drive.a", "drive.b", "drive.omega1", "drive.kappa",
    "time.t_max",
}
_INT_KEYS = {"time.samples", "outputs.frames", "oracle.cutoff", "oracle.steps"}
_BOOL_KEYS = {"oracle.enabled"}
_STR_KEYS = {"picture", "drive.kind", "outputs.csv", "outputs.svg_dir", "outputs.summary"}
_ALL_KEYS = _FLOAT_KEYS | _INT_KEYS | _BOOL_KEYS | _STR_KEYS

_LINEAR_ONLY = {"drive.g", "drive.a", "drive.b", "drive.omega1"}
_QUADRATIC_ONLY = {"drive.kappa"}


@dataclass(frozen=True)
class ScenarioConfig:
    """Fully resolved scenario: initial state, drive, picture, sampling, outputs."""

    mu_x: float
    s: float
    picture: Picture
    drive: DriveSpec
    t_max: float
    samples: int
    csv_path: str | None = None
    svg_dir: str | None = None
    frames: int = 9
    summary_path: str | None = None
    oracle_enabled: bool = False
    oracle_cutoff: int = 60
    oracle_steps: int = 0  # 0 -> automatic (fock.default_steps)


def _parse_lines(text: str) -> dict[str, tuple[int, str]]:
    entries: dict[str, tuple[int, str]] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError(f"line {lineno}: expected 'key = value', got {raw.strip()!r}")
        key, value = (part.strip() for part in line.split("=", 1))
        if key not in _ALL_KEYS:
            raise ConfigError(f"line {lineno}: unknown key {key!r}")
        if key in entries:
            raise ConfigError(f"line {lineno}: duplicate key {key!r}")
        if not value:
            raise ConfigError(f"line {lineno}: empty value for {key!r}")
        entries[key] = (lineno, value)
    return entries


def _take(entries, key, kind):
    if key not in entries:
        return None
    lineno, value = entries.pop(key)
    try:
        if kind is float:
            return float(value)
        if kind is int:
            return int(value)
        if kind is bool:
            if value.lower() in ("true", "false"):
                return value.lower() == "true"
            raise ValueError
        return value
    except ValueError:
        raise ConfigError(
            f"line {lineno}: value {value!r} for {key!r} is not a valid {kind.__name__}"
        ) from None


def parse_config(text: str) -> ScenarioConfig:
    """Parse and resolve a configuration document.

    Defaults: free drive, Schrodinger picture, zero-mean unsqueezed initial
    state, one period of the slowest relevant frequency as the horizon and
    256 samples per such period, oracle disabled.
    """
    entries = _parse_lines(text)

    kind = _take(entries, "drive.kind", str) or "free"
    if kind not in ("free", "linear", "quadratic"):
        raise ConfigError(f"drive.kind must be free, linear or quadratic, got {kind!r}")
    for key in sorted(_LINEAR_ONLY | _QUADRATIC_ONLY):
        allowed = _LINEAR_ONLY if kind == "linear" else (
            _QUADRATIC_ONLY if kind == "quadratic" else set())
        if key in entries and key not in allowed:
            raise ConfigError(f"key {key!r} is not valid for a {kind} drive")

    omega0 = _take(entries, "drive.omega0", float)
    omega0 = 1.0 if omega0 is None else omega0
    if omega0 <= 0:
        raise ConfigError("drive.omega0 must be positive")
    if kind == "linear":
        drive = DriveSpec.linear(
            omega0,
            g=_take(entries, "drive.g", float) or 0.0,
            a=_take(entries, "drive.a", float) or 0.0,
            b=_take(entries, "drive.b", float) or 0.0,
            omega1=_take(entries, "drive.omega1", float) or 0.0,
        )
    elif kind == "quadratic":
        drive = DriveSpec.quadratic(omega0, kappa=_take(entries, "drive.kappa", float) or 0.0)
    else:
        drive = DriveSpec.free(omega0)

    picture_name = _take(entries, "picture", str) or "sp"
    try:
        picture = Picture(picture_name)
    except ValueError:
        raise ConfigError(f"picture must be one of sp, hp, sip, hip, got {picture_name!r}") from None

    slowest = [drive.omega0] + (
        [f for f in (abs(drive.omega1), abs(drive.omega0 + drive.omega1)) if f > 0]
        if kind == "linear" else []
    )
    t_max = _take(entries, "time.t_max", float)
    if t_max is None:
        t_max = 2.0 * np.pi / min(slowest)
    if t_max <= 0:
        raise ConfigError("time.t_max must be positive")
    samples = _take(entries, "time.samples", int)
    if samples is None:
        samples = default_samples(drive, t_max)
    if samples < 2:
        raise ConfigError("time.samples must be at least 2")

    frames = _take(entries, "outputs.frames", int)
    frames = 9 if frames is None else frames
    if frames < 1:
        raise ConfigError("outputs.frames must be at least 1")
    oracle_cutoff = _take(entries, "oracle.cutoff", int)
    oracle_cutoff = 60 if oracle_cutoff is None else oracle_cutoff
    if oracle_cutoff < 2:
        raise ConfigError("oracle.cutoff must be at least 2")
    oracle_steps = _take(entries, "oracle.steps", int)
    oracle_steps = 0 if oracle_steps is None else oracle_steps
    if oracle_steps < 0:
        raise ConfigError("oracle.steps must be non-negative (0 selects the default)")

    cfg = ScenarioConfig(
        mu_x=_take(entries, "initial.mu_x", float) or 0.0,
        s=_take(entries, "initial.s", float) or 0.0,
        picture=picture,
        drive=drive,
        t_max=t_max,
        samples=samples,
        csv_path=_take(entries, "outputs.csv", str),
        svg_dir=_take(entries, "outputs.svg_dir", str),
        frames=frames,
        summary_path=_take(entries, "outputs.summary", str),
        oracle_enabled=bool(_take(entries, "oracle.enabled", bool)),
        oracle_cutoff=oracle_cutoff,
        oracle_steps=oracle_steps,
    )
    assert not entries, f"unconsumed keys: {sorted(entries)}"
    return cfg


def _fmt(value: float) -> str:
    return format(float(value), ".17g")


def serialize_config(cfg: ScenarioConfig) -> str:
    """Emit the resolved configuration; parsing it back is the identity."""
    lines = [
        f"initial.mu_x = {_fmt(cfg.mu_x)}",
        f"initial.s = {_fmt(cfg.s)}",
        f"picture = {cfg.picture.value}",
        f"drive.kind = {cfg.drive.kind}",
        f"drive.omega0 = {_fmt(cfg.drive.omega0)}",
    ]
    if cfg.drive.kind == "linear":
        lines += [
            f"drive.g = {_fmt(cfg.drive.g)}",
            f"drive.a = {_fmt(cfg.drive.a)}",
            f"drive.b = {_fmt(cfg.drive.b)}",
            f"drive.omega1 = {_fmt(cfg.drive.omega1)}",
        ]
    elif cfg.drive.kind == "quadratic":
        lines.append(f"drive.kappa = {_fmt(cfg.drive.kappa)}")
    lines += [
        f"time.t_max = {_fmt(cfg.t_max)}",
        f"time.samples = {cfg.samples}",
        f"outputs.frames = {cfg.frames}",
    ]
    for key, value in (("outputs.csv", cfg.csv_path), ("outputs.svg_dir", cfg.svg_dir),
                       ("outputs.summary", cfg.summary_path)):
        if value is not None:
            lines.append(f"{key} = {value}")
    lines += [
        f"oracle.enabled = {'true' if cfg.oracle_enabled else 'false'}",
        f"oracle.cutoff = {cfg.oracle_cutoff}",
        f"oracle.steps = {cfg.oracle_steps}",
    ]
    return "\n".join(lines) + "\n"


def with_outputs(cfg: ScenarioConfig, *, csv_path=None, svg_dir=None, summary_path=None) -> ScenarioConfig:
    """Copy of ``cfg`` with output paths replaced."""
    return replace(cfg, csv_path=csv_path, svg_dir=svg_dir, summary_path=summary_path)
