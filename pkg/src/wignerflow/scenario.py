"""Scenario orchestration: trajectories, invariant checks, file emission.

A scenario (see :mod:`wignerflow.config`) evolves one initial state under
one drive in one picture over a uniform time grid and can emit:

* a CSV trajectory (``t,mean_x,mean_p,cov_xx,cov_xp,cov_pp``),
* one SVG frame per requested time (contour + trajectory + reference),
* a JSON run summary with the resolved parameters and invariant checks.

Emitted files are byte-deterministic: floats are written in fixed
17-significant-digit scientific notation and JSON keys in sorted order.
Wall-clock timings are returned on the :class:`RunSummary` object but kept
out of the files.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field, replace
from pathlib import Path

import numpy as np

from . import fock
from .config import ScenarioConfig, serialize_config
from .drives import DriveSpec
from .magnus import magnus_a1_analytic, magnus_a1_numeric, magnus_a2_analytic, \
    magnus_a2_numeric, magnus_a3_numeric
from .pictures import Picture, evolve, evolve_free_sp, evolve_linear_sp, \
    glissette_residual, ip_centroid_radius_sq, to_hip_frame, to_hp_frame, trajectory
from .states import GaussianState, contour_1e, ideal_squeezed, wigner_value
from .svg import render_frame

__all__ = [
    "RunSummary",
    "OracleReport",
    "MagnusReport",
    "run_scenario",
    "compare_oracle",
    "magnus_check",
    "figure_configs",
    "format_float",
    "write_json",
]

CSV_HEADER = "t,mean_x,mean_p,cov_xx,cov_xp,cov_pp"


def format_float(value: float) -> str:
    """Fixed 17-significant-digit scientific notation (byte-stable)."""
    return format(float(value), ".16e")


def _json_dumps(value, indent: int = 0) -> str:
    pad = "  " * indent
    if isinstance(value, dict):
        if not value:
            return "{}"
        items = [
            f'{pad}  "{key}": {_json_dumps(value[key], indent + 1)}'
            for key in sorted(value)
        ]
        return "{\n" + ",\n".join(items) + f"\n{pad}}}"
    if isinstance(value, (list, tuple)):
        if not value:
            return "[]"
        items = [f"{pad}  {_json_dumps(v, indent + 1)}" for v in value]
        return "[\n" + ",\n".join(items) + f"\n{pad}]"
    if isinstance(value, bool):
        return "true" if value else "false"
    if value is None:
        return "null"
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    if isinstance(value, (float, np.floating)):
        return format_float(value)
    if isinstance(value, str):
        return '"' + value.replace("\\", "\\\\").replace('"', '\\"') + '"'
    raise TypeError(f"cannot serialise {type(value)!r}")


def write_json(path: Path, payload: dict) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(_json_dumps(payload) + "\n", encoding="utf-8")


@dataclass
class RunSummary:
    """Resolved parameters, invariant-check results and timings of one run."""

    parameters: dict
    checks: dict
    passed: bool
    timings: dict = field(default_factory=dict)

    def as_json_payload(self) -> dict:
        # timings vary run to run and stay out of the deterministic file
        return {"parameters": self.parameters, "checks": self.checks, "pass": self.passed}


def _config_dict(cfg: ScenarioConfig) -> dict:
    d = {
        "initial.mu_x": cfg.mu_x,
        "initial.s": cfg.s,
        "picture": cfg.picture.value,
        "drive.kind": cfg.drive.kind,
        "drive.omega0": cfg.drive.omega0,
        "time.t_max": cfg.t_max,
        "time.samples": cfg.samples,
        "outputs.frames": cfg.frames,
        "oracle.enabled": cfg.oracle_enabled,
        "oracle.cutoff": cfg.oracle_cutoff,
        "oracle.steps": cfg.oracle_steps,
    }
    if cfg.drive.kind == "linear":
        d.update({"drive.g": cfg.drive.g, "drive.a": cfg.drive.a,
                  "drive.b": cfg.drive.b, "drive.omega1": cfg.drive.omega1})
    if cfg.drive.kind == "quadratic":
        d["drive.kappa"] = cfg.drive.kappa
    return d


def _check(checks: dict, name: str, value: float, threshold: float) -> None:
    checks[name] = {"value": float(value), "threshold": float(threshold),
                    "pass": bool(value <= threshold)}


def _reference_curve(cfg: ScenarioConfig, state0: GaussianState, frame_t: float,
                     means: np.ndarray):
    """Dashed reference per picture: circle, line or glissette curve."""
    drive, picture = cfg.drive, cfg.picture
    if picture in (Picture.HP, Picture.HIP):
        return None
    if drive.kind == "free":
        if picture is Picture.SP:
            return ("circle", np.zeros(2), float(np.linalg.norm(state0.mean)))
        return None
    if drive.kind == "quadratic":
        return ("circle", np.zeros(2), 1.0)  # vacuum 1/e contour
    # linear drive
    if picture is Picture.SIP:
        if drive.is_resonant:
            direction = np.array([drive.b, drive.a])
            if np.linalg.norm(direction) == 0:
                return None
            direction = direction / np.linalg.norm(direction)
            span = 16.0
            return ("line", state0.mean - span * direction, state0.mean + span * direction)
        radius = float(np.sqrt(ip_centroid_radius_sq(drive, frame_t)))
        return ("circle", state0.mean.copy(), radius)
    return ("polyline", means)  # SP: the glissette traced by the centroid


def run_scenario(cfg: ScenarioConfig, base_dir: str | Path = ".") -> RunSummary:
    """Run one scenario, emit the requested files, evaluate invariants.

    Returns the :class:`RunSummary`; ``passed`` is False when any enabled
    invariant check exceeds its threshold (the CLI turns that into exit
    code 1).
    """
    base = Path(base_dir)
    t_start = time.perf_counter()
    state0 = ideal_squeezed(cfg.mu_x, cfg.s)
    times = np.linspace(0.0, cfg.t_max, cfg.samples)
    samples = trajectory(state0, cfg.drive, cfg.picture, times)
    means = np.array([s.state.mean for s in samples])
    covs = np.array([s.state.cov for s in samples])
    t_traj = time.perf_counter()

    checks: dict = {}
    dets = covs[:, 0, 0] * covs[:, 1, 1] - covs[:, 0, 1] * covs[:, 1, 0]
    _check(checks, "purity_drift_max", np.abs(dets - 0.25).max(), 1e-12)
    _add_picture_checks(cfg, state0, times, samples, means, covs, checks)

    if cfg.oracle_enabled:
        report = compare_oracle(cfg)
        _check(checks, "oracle_mean_delta_max", report.mean_delta_max, report.moment_tol)
        _check(checks, "oracle_cov_delta_max", report.cov_delta_max, report.moment_tol)
        _check(checks, "oracle_wigner_delta_max", report.wigner_delta_max, report.wigner_tol)
    t_checks = time.perf_counter()

    if cfg.csv_path:
        _write_csv(base / cfg.csv_path, times, means, covs)
    if cfg.svg_dir:
        _write_frames(cfg, state0, means, base / cfg.svg_dir)
    passed = all(entry["pass"] for entry in checks.values())
    summary = RunSummary(
        parameters=_config_dict(cfg),
        checks=checks,
        passed=passed,
        timings={
            "trajectory_s": t_traj - t_start,
            "checks_s": t_checks - t_traj,
            "total_s": time.perf_counter() - t_start,
        },
    )
    if cfg.summary_path:
        write_json(base / cfg.summary_path, summary.as_json_payload())
    return summary


def _add_picture_checks(cfg, state0, times, samples, means, covs, checks) -> None:
    drive, picture = cfg.drive, cfg.picture
    if picture in (Picture.HP, Picture.HIP):
        # substantive form: evolve in the SP and map back through the frame
        residual = 0.0
        for t in times:
            if drive.kind == "free" or picture is Picture.HP:
                back = to_hp_frame(evolve_free_sp(state0, drive.omega0, t), drive.omega0, t)
            else:
                back = to_hip_frame(evolve_linear_sp(state0, drive, t), drive, t)
            residual = max(
                residual,
                np.abs(back.mean - state0.mean).max(),
                np.abs(back.cov - state0.cov).max(),
            )
        _check(checks, "frame_roundtrip_max", residual, 1e-12)
        return
    if drive.kind == "free":
        if picture is Picture.SP:
            radii = np.linalg.norm(means, axis=1)
            _check(checks, "mean_radius_drift_max", np.abs(radii - radii[0]).max(), 1e-12)
        return
    if drive.kind == "linear":
        if picture is Picture.SIP:
            _check(checks, "cov_drift_max", np.abs(covs - state0.cov).max(), 1e-15)
            if drive.is_resonant:
                d = means - state0.mean
                cross = d[:, 0] * (-drive.g * drive.a) - d[:, 1] * (-drive.g * drive.b)
                _check(checks, "collinearity_max", np.abs(cross).max(), 1e-12)
            else:
                r2 = np.array([ip_centroid_radius_sq(drive, t) for t in times])
                d2 = ((means - state0.mean) ** 2).sum(axis=1)
                _check(checks, "circle_residual_max", np.abs(d2 - r2).max(), 1e-10)
        elif picture is Picture.SP and not drive.is_resonant:
            res = max(glissette_residual(state0, drive, t) for t in times)
            _check(checks, "glissette_residual_max", res, 1e-10)
        return
    # quadratic drive: covariance eigenvalues follow the breathing law
    sx2, sp2 = state0.cov[0, 0], state0.cov[1, 1]
    expected = np.stack(
        [sx2 * np.exp(-2.0 * drive.kappa * times), sp2 * np.exp(2.0 * drive.kappa * times)],
        axis=1,
    )
    eigs = np.sort(np.linalg.eigvalsh(covs), axis=1)
    _check(checks, "breathing_residual_max",
           np.abs(eigs - np.sort(expected, axis=1)).max(), 1e-12)


def _write_csv(path: Path, times, means, covs) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    rows = [CSV_HEADER]
    for t, mean, cov in zip(times, means, covs):
        rows.append(",".join(format_float(v) for v in
                             (t, mean[0], mean[1], cov[0, 0], cov[0, 1], cov[1, 1])))
    path.write_text("\n".join(rows) + "\n", encoding="utf-8")


def _frame_times(cfg: ScenarioConfig) -> np.ndarray:
    if cfg.frames == 1:
        return np.array([cfg.t_max])
    return np.linspace(0.0, cfg.t_max, cfg.frames)


def _write_frames(cfg: ScenarioConfig, state0, means, directory: Path) -> None:
    directory.mkdir(parents=True, exist_ok=True)
    for i, t in enumerate(_frame_times(cfg)):
        state = evolve(state0, cfg.drive, cfg.picture, float(t))
        ref = _reference_curve(cfg, state0, float(t), means)
        frame = render_frame(contour_1e(state), means, ref)
        (directory / f"frame_{i:02d}.svg").write_text(frame, encoding="utf-8")


@dataclass
class OracleReport:
    """Closed form vs truncated-basis propagation on one scenario."""

    times: np.ndarray
    mean_deltas: np.ndarray
    cov_deltas: np.ndarray
    wigner_times: list
    wigner_deltas: list
    tail_max: float
    moment_tol: float
    wigner_tol: float
    steps: int

    @property
    def mean_delta_max(self) -> float:
        return float(self.mean_deltas.max())

    @property
    def cov_delta_max(self) -> float:
        return float(self.cov_deltas.max())

    @property
    def wigner_delta_max(self) -> float:
        return float(max(self.wigner_deltas))

    @property
    def passed(self) -> bool:
        return (self.mean_delta_max <= self.moment_tol
                and self.cov_delta_max <= self.moment_tol
                and self.wigner_delta_max <= self.wigner_tol
                and self.tail_max <= fock.TAIL_TOL)

    def as_dict(self) -> dict:
        return {
            "steps": self.steps,
            "moment_tolerance": self.moment_tol,
            "wigner_tolerance": self.wigner_tol,
            "mean_delta_max": self.mean_delta_max,
            "cov_delta_max": self.cov_delta_max,
            "wigner_checkpoints": [
                {"t": t, "sup_delta": d}
                for t, d in zip(self.wigner_times, self.wigner_deltas)
            ],
            "tail_population_max": self.tail_max,
            "pass": self.passed,
        }


def compare_oracle(cfg: ScenarioConfig) -> OracleReport:
    """Propagate the scenario in the truncated number basis and compare.

    The oracle knows nothing of the closed forms: it midpoint-steps the
    full Hamiltonian in the Schrodinger picture, transforms to the
    co-rotating frame by exact number-basis phases when the scenario asks
    for the ``sip`` picture, and reconstructs Wigner fields from the
    characteristic function.  Moments are compared at every sample time,
    Wigner fields at three checkpoint times.
    """
    if cfg.picture not in (Picture.SP, Picture.SIP):
        raise ValueError("oracle comparison supports the sp and sip pictures")
    cutoff = cfg.oracle_cutoff
    drive = cfg.drive
    state0 = ideal_squeezed(cfg.mu_x, cfg.s)
    rho = fock.ideal_squeezed_density(cfg.mu_x, cfg.s, cutoff)
    h_of_t = fock.sp_hamiltonian(drive, cutoff)
    times = np.linspace(0.0, cfg.t_max, cfg.samples)
    total_steps = cfg.oracle_steps or fock.default_steps(drive, cfg.t_max)
    seg_steps = max(1, int(np.ceil(total_steps / (cfg.samples - 1))))

    n_check = cfg.samples - 1
    checkpoint_idx = sorted({max(1, round(n_check / 3)), max(1, round(2 * n_check / 3)), n_check})
    mean_deltas = np.zeros(cfg.samples)
    cov_deltas = np.zeros(cfg.samples)
    wigner_times: list = []
    wigner_deltas: list = []
    tail_max = 0.0

    for k, t in enumerate(times):
        if k > 0:
            rho = fock.propagate(rho, h_of_t, float(t), seg_steps, t0=float(times[k - 1]))
        tail_max = max(tail_max, fock.tail_population(rho))
        rho_pic = rho if cfg.picture is Picture.SP else \
            fock.to_interaction_frame(rho, drive.omega0, float(t))
        mean_o, cov_o = fock.moments(rho_pic)
        state_cf = evolve(state0, drive, cfg.picture, float(t))
        mean_deltas[k] = np.abs(mean_o - state_cf.mean).max()
        cov_deltas[k] = np.abs(cov_o - state_cf.cov).max()
        if k in checkpoint_idx:
            grid = fock.GridSpec.around(state_cf.mean, state_cf.cov, sigmas=8.0,
                                        nx=101, np_=101)
            w_oracle = fock.wigner_from_rho(rho_pic, grid)
            xg, pg = np.meshgrid(grid.x_axis(), grid.p_axis(), indexing="ij")
            w_cf = wigner_value(state_cf, np.stack([xg, pg], axis=-1))
            wigner_times.append(float(t))
            wigner_deltas.append(float(np.abs(w_oracle - w_cf).max()))

    return OracleReport(
        times=times,
        mean_deltas=mean_deltas,
        cov_deltas=cov_deltas,
        wigner_times=wigner_times,
        wigner_deltas=wigner_deltas,
        tail_max=tail_max,
        moment_tol=1e-8 if drive.kind == "free" else 1e-6,
        wigner_tol=1e-6,
        steps=seg_steps * (cfg.samples - 1),
    )


@dataclass
class MagnusReport:
    """Analytic vs quadrature values of the series terms at a set of times."""

    rows: list
    a1_tol: float = 1e-10
    a2_tol: float = 1e-10
    a3_tol: float = 1e-12

    @property
    def passed(self) -> bool:
        return all(r["a1_delta"] <= self.a1_tol and r["a2_delta"] <= self.a2_tol
                   and r["a3_norm"] <= self.a3_tol for r in self.rows)

    def as_dict(self) -> dict:
        return {"rows": self.rows, "a1_tolerance": self.a1_tol,
                "a2_tolerance": self.a2_tol, "a3_tolerance": self.a3_tol,
                "pass": self.passed}

    def table(self) -> str:
        lines = [f"{'t':>12} {'|A1 delta|':>12} {'|A2 delta|':>12} {'A3 residual':>12}"]
        for r in self.rows:
            lines.append(f"{r['t']:>12.6f} {r['a1_delta']:>12.3e} "
                         f"{r['a2_delta']:>12.3e} {r['a3_norm']:>12.3e}")
        lines.append(f"result: {'PASS' if self.passed else 'FAIL'}")
        return "\n".join(lines)


def magnus_check(cfg: ScenarioConfig, n_times: int = 8) -> MagnusReport:
    """Tabulate analytic vs quadrature series terms on the scenario drive."""
    drive = cfg.drive
    if drive.kind != "linear":
        raise ValueError("magnus-check requires a linear drive")
    if drive.is_resonant:
        raise ValueError("magnus-check requires a non-resonant linear drive")
    rows = []
    for k in range(1, n_times + 1):
        t = cfg.t_max * k / n_times
        beta = magnus_a1_analytic(drive, t)
        beta_num = magnus_a1_numeric(drive, t)
        phi = magnus_a2_analytic(drive, t)
        phi_num = magnus_a2_numeric(drive, t)
        rows.append({
            "t": t,
            "a1_analytic_re": beta.real, "a1_analytic_im": beta.imag,
            "a1_delta": abs(beta_num - beta),
            "a2_analytic": phi, "a2_delta": abs(phi_num - phi),
            "a3_norm": magnus_a3_numeric(drive, t),
        })
    return MagnusReport(rows=rows)


def figure_configs() -> dict[str, ScenarioConfig]:
    """Scenario presets reproducing the seven reference figures.

    ``fig3`` is a nine-panel sweep over the drive frequency, so it expands
    to nine scenarios (``fig3a`` .. ``fig3i``); every other figure is one
    scenario with nine frames across its period.
    """
    s_half = -np.log(2.0) / 2.0  # sigma_x = 1, sigma_p = 1/2
    two_pi = 2.0 * np.pi
    configs: dict[str, ScenarioConfig] = {}
    configs["fig1"] = ScenarioConfig(
        mu_x=4.0, s=s_half, picture=Picture.SP, drive=DriveSpec.free(1.0),
        t_max=two_pi, samples=256, frames=9)
    configs["fig2"] = ScenarioConfig(
        mu_x=-2.0, s=s_half, picture=Picture.SIP,
        drive=DriveSpec.linear(1.0, g=5.0, a=1.0, b=-1.0, omega1=2.0),
        t_max=two_pi / 3.0, samples=256, frames=9)
    # fig3: glissettes for nine drive frequencies; each horizon closes both
    # the natural and the drive cycle.
    omega1_values = [1/3, 2/3, 3/5, 3.0, 4.0, 33/7, 5.0, 34/5, 9.0]
    cycles = [3, 3, 5, 1, 1, 7, 1, 5, 1]
    for label, omega1, n_cyc in zip("abcdefghi", omega1_values, cycles):
        configs[f"fig3{label}"] = ScenarioConfig(
            mu_x=-2.0, s=s_half, picture=Picture.SP,
            drive=DriveSpec.linear(1.0, g=5.0, a=1.0, b=-1.0, omega1=omega1),
            t_max=two_pi * n_cyc, samples=256 * n_cyc, frames=1)
    configs["fig4"] = ScenarioConfig(
        mu_x=-2.0, s=s_half, picture=Picture.SP,
        drive=DriveSpec.linear(1.0, g=5.0, a=1.0, b=-1.0, omega1=2.0),
        t_max=two_pi / 2.0, samples=256, frames=9)
    configs["fig5"] = ScenarioConfig(
        mu_x=-2.0, s=s_half, picture=Picture.SIP,
        drive=DriveSpec.linear(1.0, g=5.0, a=1.0, b=-1.0, omega1=-1.0),
        t_max=0.8, samples=256, frames=1)
    configs["fig6"] = ScenarioConfig(
        mu_x=0.0, s=s_half, picture=Picture.SIP,
        drive=DriveSpec.quadratic(1.0, kappa=0.1),
        t_max=two_pi, samples=256, frames=9)
    configs["fig7"] = ScenarioConfig(
        mu_x=0.0, s=s_half, picture=Picture.SP,
        drive=DriveSpec.quadratic(1.0, kappa=0.1),
        t_max=two_pi, samples=256, frames=9)
    return configs


def emit_figures(out_dir: str | Path) -> dict[str, RunSummary]:
    """Write every figure preset under ``out_dir/<name>/`` and run it."""
    out = Path(out_dir)
    summaries = {}
    for name, cfg in figure_configs().items():
        run_cfg = replace(cfg, csv_path=f"{name}/trajectory.csv",
                          svg_dir=f"{name}/frames", summary_path=f"{name}/summary.json")
        (out / name).mkdir(parents=True, exist_ok=True)
        (out / name / "config.cfg").write_text(serialize_config(run_cfg), encoding="utf-8")
        summaries[name] = run_scenario(run_cfg, base_dir=out)
    return summaries
