"""Figure builders for the CLI report outputs. Rendering is file-only (Agg)."""

from __future__ import annotations

import math

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np

from .pattern import AzimuthPattern


def save_figure(fig, path) -> None:
    fig.savefig(path, dpi=150, bbox_inches="tight")
    plt.close(fig)


def pattern_polar_figure(entries, title: str):
    """Polar dBi plot of one or more (label, AzimuthPattern) pairs.

    The radial floor sits 50 dB below the hottest pattern so nulls do not
    swallow the scale.
    """
    fig, ax = plt.subplots(subplot_kw={"projection": "polar"}, figsize=(7, 7))
    peak_db = max(10.0 * math.log10(max(p.peak_gain(), 1e-30)) for _, p in entries)
    floor = peak_db - 50.0
    for label, pat in entries:
        theta = np.append(pat.bin_centers(), 2.0 * math.pi)
        gains_db = 10.0 * np.log10(np.maximum(pat.gains, 1e-30))
        gains_db = np.append(gains_db, gains_db[0])
        ax.plot(theta, np.maximum(gains_db, floor), linewidth=1.0, label=label)
    ax.set_theta_zero_location("N")
    ax.set_rlabel_position(135)
    ax.set_ylim(floor, peak_db + 3.0)
    ax.set_title(title)
    ax.legend(loc="lower left", bbox_to_anchor=(1.0, 0.0), fontsize=8)
    return fig


def requirements_figure(stopping_rows, notification_rows):
    """Stopping distance vs speed and notification distance vs lead time."""
    fig, (ax1, ax2) = plt.subplots(1, 2, figsize=(10, 4))
    if stopping_rows:
        speeds = [r[0] for r in stopping_rows]
        ax1.plot(speeds, [r[1] for r in stopping_rows], "o-", label="dry")
        ax1.plot(speeds, [r[2] for r in stopping_rows], "s-", label="wet")
        ax1.legend()
    ax1.set_xlabel("vehicle speed (mph)")
    ax1.set_ylabel("stopping distance (m)")
    ax1.grid(True, alpha=0.4)
    if notification_rows:
        ax2.plot([r[1] for r in notification_rows], [r[2] for r in notification_rows], "o-")
    ax2.set_xlabel("lead time (s)")
    ax2.set_ylabel("notification distance (m)")
    ax2.grid(True, alpha=0.4)
    fig.tight_layout()
    return fig


def sizing_figure(rows):
    """Peak gain and aperture length versus lead time, one line per exponent.

    rows: iterables of (lead_s, n, max_gain_dbi, length_m).
    """
    fig, (ax1, ax2) = plt.subplots(1, 2, figsize=(10, 4))
    by_n: dict[float, list] = {}
    for lead, n, gain, length in rows:
        by_n.setdefault(n, []).append((lead, gain, length))
    for n, pts in sorted(by_n.items()):
        pts.sort()
        ax1.plot([p[0] for p in pts], [p[1] for p in pts], "o-", label=f"n={n:g}")
        ax2.semilogy([p[0] for p in pts], [p[2] for p in pts], "o-", label=f"n={n:g}")
    ax1.set_xlabel("lead time (s)")
    ax1.set_ylabel("peak gain (dBi)")
    ax1.grid(True, alpha=0.4)
    ax1.legend()
    ax2.set_xlabel("lead time (s)")
    ax2.set_ylabel("aperture length (m)")
    ax2.grid(True, alpha=0.4)
    ax2.legend()
    fig.tight_layout()
    return fig


def margin_trace_figure(trace):
    """Worst link margin versus signed train position; zero is the pass line."""
    fig, ax = plt.subplots(figsize=(8, 4))
    ax.plot([r.train_pos_m for r in trace], [r.margin_db for r in trace], linewidth=1.0)
    ax.axhline(0.0, color="red", linewidth=0.8, linestyle="--")
    ax.set_xlabel("train position along track (m, crossing at 0)")
    ax.set_ylabel("worst margin over threshold (dB)")
    ax.grid(True, alpha=0.4)
    fig.tight_layout()
    return fig
