"""Figure renderers for the engine toolkit's CSV outputs.

Each figure id maps to a renderer plus the input columns it requires.
Rendering never recomputes physics; everything is read from the CSVs
produced by the `qie` CLI. Output is deterministic: fixed style, fixed
hash salt, no timestamps.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from typing import List, Tuple

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402
import numpy as np  # noqa: E402
import pandas as pd  # noqa: E402

matplotlib.rcParams["svg.hashsalt"] = "plotgen"

DPI = 150


class SchemaError(ValueError):
    """Input CSV does not carry the columns the figure needs."""


@dataclass(frozen=True)
class FigureSpec:
    figure_id: str
    inputs: Tuple[str, ...]
    output: str
    marks: Tuple[Tuple[float, float, str], ...] = ()  # (x, y, label) annotations
    extremes: bool = True  # auto-label the front ends on scatter figures
    colormap: str = "RdBu_r"
    dpi: int = DPI


REQUIRED_COLUMNS = {
    "fig2": ["n", "p_cond_0", "p_cond_1"],
    "fig3": ["temp_ratio", "eta_info", "n_prime"],
    "fig4": ["tau", "power", "g_eff_sq"],
    "fig5": ["temp_ratio", "g_eff_sq", "delta_e", "power", "tau"],
    "fig6": ["temp_ratio", "eta_he", "eta_carnot", "eta_ca"],
    "fig7": ["tau", "eta_he", "eta_ca", "w_net", "g_eff_sq"],
    "fig8": ["power", "eta_he", "tau"],
    "fig9": ["power", "eta_info", "g_eff_sq", "tau"],
}


def read_table(path, figure_id: str) -> pd.DataFrame:
    frame = pd.read_csv(path, comment="#")
    missing = [col for col in REQUIRED_COLUMNS[figure_id] if col not in frame.columns]
    if missing:
        raise SchemaError(f"{path}: missing column {missing[0]!r} required by {figure_id}")
    return frame


def _finish(fig, spec: FigureSpec):
    fig.savefig(spec.output, dpi=spec.dpi, metadata={"Software": None})
    plt.close(fig)


def _empty_figure(spec: FigureSpec, why: str):
    warnings.warn(f"{spec.figure_id}: {why}; writing empty axes", stacklevel=2)
    fig, ax = plt.subplots(figsize=(5, 4))
    ax.set_title(f"{spec.figure_id} (no data)")
    _finish(fig, spec)


def _apply_marks(ax, spec: FigureSpec):
    for x, y, label in spec.marks:
        ax.plot([x], [y], marker="x", color="black", markersize=8, zorder=5)
        ax.annotate(label, (x, y), textcoords="offset points", xytext=(6, 4))


def render_fig2(spec: FigureSpec, frames: List[pd.DataFrame]):
    frame = frames[0]
    fig, ax = plt.subplots(figsize=(5.5, 4))
    ax.plot(frame["n"], frame["p_cond_0"], "o-", label="P(0|n)", color="tab:blue", ms=3)
    ax.plot(frame["n"], frame["p_cond_1"], "s-", label="P(1|n)", color="tab:red", ms=3)
    above = frame[frame["p_cond_1"] > frame["p_cond_0"]]
    if len(above):
        ax.axvline(above["n"].iloc[0], ls="--", color="gray", label="n'")
    ax.set_xlabel("meter outcome n")
    ax.set_ylabel("conditional probability")
    ax.legend()
    _apply_marks(ax, spec)
    _finish(fig, spec)


def render_fig3(spec: FigureSpec, frames: List[pd.DataFrame]):
    frame = frames[0]
    fig, ax = plt.subplots(figsize=(5.5, 4))
    ax.plot(frame["temp_ratio"], frame["eta_info"], color="black", label="eta_info")
    ax.set_xlabel("T_M / T_S")
    ax.set_ylabel("information efficiency")
    twin = ax.twinx()
    twin.step(frame["temp_ratio"], frame["n_prime"], where="post", color="tab:blue")
    twin.set_ylabel("threshold level n'", color="tab:blue")
    _apply_marks(ax, spec)
    _finish(fig, spec)


def render_fig4(spec: FigureSpec, frames: List[pd.DataFrame]):
    fig, ax = plt.subplots(figsize=(5.5, 4))
    for frame in frames:
        scale = frame["power"].abs().max()
        label = f"g_eff^2 = {frame['g_eff_sq'].iloc[0]:g}"
        ax.plot(frame["tau"], frame["power"] / (scale if scale > 0 else 1.0), label=label)
    ax.axhline(0.0, color="gray", lw=0.6)
    ax.set_xlabel("measurement time (1/Omega)")
    ax.set_ylabel("power / max |power|")
    ax.legend()
    _apply_marks(ax, spec)
    _finish(fig, spec)


def render_fig5(spec: FigureSpec, frames: List[pd.DataFrame]):
    count = len(frames)
    rows = 2 if count > 2 else 1
    cols = math.ceil(count / rows)
    fig, axes = plt.subplots(rows, cols, figsize=(4.2 * cols, 3.4 * rows), squeeze=False)
    vmax = max(frame["power"].abs().max() for frame in frames)
    vmax = vmax if vmax > 0 else 1.0
    mesh = None
    for k, frame in enumerate(frames):
        ax = axes[k // cols][k % cols]
        pivot = frame.pivot_table(index="g_eff_sq", columns="temp_ratio", values="power")
        rel = pivot.index.to_numpy() / frame["delta_e"].iloc[0]
        mesh = ax.pcolormesh(
            pivot.columns.to_numpy(), rel, pivot.to_numpy(),
            cmap=spec.colormap, vmin=-vmax, vmax=vmax, shading="nearest",
        )
        ax.set_yscale("log")
        phi = frame["tau"].iloc[0] * frame["hbar_omega"].iloc[0] if "hbar_omega" in frame else float("nan")
        ax.set_title(f"({'abcd'[k]}) omega*t_m = {phi:.3g}", fontsize=9)
        ax.set_xlabel("T_M / T_S")
        ax.set_ylabel("g_eff^2 / dE")
    if mesh is not None:
        fig.colorbar(mesh, ax=[a for row in axes for a in row], label="power (Omega kB TS)")
    fig.savefig(spec.output, dpi=spec.dpi, metadata={"Software": None})
    plt.close(fig)


def render_fig6(spec: FigureSpec, frames: List[pd.DataFrame]):
    frame = frames[0]
    fig, ax = plt.subplots(figsize=(5.5, 4))
    engine = frame[frame["eta_he"].notna()]
    ax.plot(engine["temp_ratio"], engine["eta_he"], color="black", label="eta_HE")
    ax.plot(frame["temp_ratio"], frame["eta_carnot"], "--", color="tab:green", label="Carnot")
    ax.plot(frame["temp_ratio"], frame["eta_ca"], ":", color="tab:orange", label="Curzon-Ahlborn")
    ax.set_xlabel("T_M / T_S")
    ax.set_ylabel("efficiency")
    ax.legend()
    _apply_marks(ax, spec)
    _finish(fig, spec)


def render_fig7(spec: FigureSpec, frames: List[pd.DataFrame]):
    fig, ax = plt.subplots(figsize=(5.5, 4))
    for frame in frames:
        label = f"g_eff^2 = {frame['g_eff_sq'].iloc[0]:g}"
        good = frame[(frame["w_net"] >= 0) & frame["eta_he"].notna()]
        line, = ax.plot(good["tau"], good["eta_he"] / good["eta_ca"], label=label)
        bad = frame[frame["w_net"] < 0]
        ax.plot(bad["tau"], np.zeros(len(bad)), ".", color=line.get_color(), ms=3)
    ax.set_xlabel("measurement time (1/Omega)")
    ax.set_ylabel("eta_HE / eta_CA")
    ax.legend()
    _apply_marks(ax, spec)
    _finish(fig, spec)


def _front_scatter(spec, frames, eta_col, color_expr, color_label):
    fig, ax = plt.subplots(figsize=(5.8, 4.2))
    scatter = None
    for k, frame in enumerate(frames):
        colors = np.log10(np.maximum(color_expr(frame), 1e-300))
        scatter = ax.scatter(frame[eta_col], frame["power"], c=colors,
                             cmap="viridis", s=14 if k == 0 else 8,
                             marker="o" if k == 0 else "^")
        if spec.extremes and len(frame):
            top_power = frame.loc[frame["power"].idxmax()]
            top_eta = frame.loc[frame[eta_col].idxmax()]
            if k == 0:
                ax.annotate("A", (top_power[eta_col], top_power["power"]),
                            textcoords="offset points", xytext=(4, 4))
                ax.annotate("C", (top_eta[eta_col], top_eta["power"]),
                            textcoords="offset points", xytext=(4, 4))
    if scatter is not None:
        fig.colorbar(scatter, ax=ax, label=color_label)
    ax.set_xlabel(eta_col)
    ax.set_ylabel("power (Omega kB TS)")
    _apply_marks(ax, spec)
    _finish(fig, spec)


def render_fig8(spec: FigureSpec, frames: List[pd.DataFrame]):
    _front_scatter(spec, frames, "eta_he", lambda f: f["tau"], "log10 t_m (1/Omega)")


def render_fig9(spec: FigureSpec, frames: List[pd.DataFrame]):
    _front_scatter(spec, frames, "eta_info", lambda f: f["g_eff_sq"] * f["tau"],
                   "log10 g_eff^2 t_m")


RENDERERS = {
    "fig2": render_fig2,
    "fig3": render_fig3,
    "fig4": render_fig4,
    "fig5": render_fig5,
    "fig6": render_fig6,
    "fig7": render_fig7,
    "fig8": render_fig8,
    "fig9": render_fig9,
}


def render(spec: FigureSpec) -> None:
    """Render one figure from its input tables; empty inputs give empty axes."""
    if spec.figure_id not in RENDERERS:
        raise SchemaError(f"unknown figure id {spec.figure_id!r}")
    frames = [read_table(path, spec.figure_id) for path in spec.inputs]
    if not frames or all(frame.empty for frame in frames):
        _empty_figure(spec, "all inputs are empty")
        return
    RENDERERS[spec.figure_id](spec, frames)
