"""Report figures, rendered to files next to the delimited outputs."""

from __future__ import annotations

import math
from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from .constructions import lower_family, upper_family
from .experiments import ratio_table
from .fib_core import GOLDEN, lucas
from .lucas_algebra import multiple_offsets, multiple_stabilization_index
from .zeckendorf import digit_sum

# width in inches; heights follow the reciprocal golden ratio
_WIDTH = 6.4
_GOLDEN_MEAN = (math.sqrt(5.0) - 1.0) / 2.0

plt.rcParams.update({
    "font.size": 9,
    "axes.labelsize": 10,
    "legend.fontsize": 8,
    "figure.figsize": (_WIDTH, _WIDTH * _GOLDEN_MEAN),
    "savefig.dpi": 150,
    "savefig.bbox": "tight",
})


def _new_axes():
    fig = plt.figure()
    return fig, fig.add_subplot(1, 1, 1)


def plot_ratio_scatter(path: Path, n_max: int = 3000, h: int = 2) -> Path:
    """Digit-sum ratio against n, with the two-sided bound envelope."""
    rows = ratio_table(n_max, h)
    ns = [r[0] for r in rows]
    ratios = [float(r[3]) for r in rows]
    fig, ax = _new_axes()
    ax.scatter(ns, ratios, s=2, alpha=0.35, linewidths=0, label="ratio")
    xs = [x / 4 for x in range(8, 4 * n_max + 1)]
    ax.plot(xs, [2 * h * math.log(x) for x in xs], lw=1, color="tab:red",
            label="2h log n")
    ax.plot(xs, [0.5 / math.log(x) for x in xs], lw=1, color="tab:green",
            label="1/(2 log n)")
    ax.set_xscale("log")
    ax.set_xlabel("n")
    ax.set_ylabel("digit sum of $n^%d$ / digit sum of n" % h)
    ax.legend(loc="upper left")
    fig.savefig(path)
    plt.close(fig)
    return path


def plot_family_growth(path: Path, k_max: int = 30) -> Path:
    """Digit counts along the two families: the linear ramp against the flats."""
    ks = list(range(2, k_max + 1))
    lower_n = [digit_sum(lower_family(k).n) for k in ks]
    lower_sq = [digit_sum(lower_family(k).n ** 2) for k in ks]
    lower_cu = [digit_sum(lower_family(k).n ** 3) for k in ks]
    upper_sq = [digit_sum(upper_family(k).n ** 2) for k in ks]
    fig, ax = _new_axes()
    ax.plot(ks, lower_n, marker="o", ms=3, lw=1, label="lower family: n")
    ax.plot(ks, lower_sq, marker="s", ms=3, lw=1, label="lower family: $n^2$")
    ax.plot(ks, lower_cu, marker="^", ms=3, lw=1, label="lower family: $n^3$")
    ax.plot(ks, upper_sq, marker="x", ms=3, lw=1, label="upper family: $n^2$")
    ax.set_xlabel("k")
    ax.set_ylabel("Zeckendorf digit sum")
    ax.legend(loc="upper left", ncols=2)
    fig.savefig(path)
    plt.close(fig)
    return path


def plot_lucas_multiple_digits(path: Path, m_max: int = 120) -> Path:
    """Stable digit count of m * L_k against the log m / log phi + 3 bound."""
    ms = list(range(1, m_max + 1))
    counts = [len(multiple_offsets(m)) for m in ms]
    # spot-check the stabilized count really occurs
    for m in (1, m_max // 2, m_max):
        k0 = multiple_stabilization_index(m)
        assert digit_sum(m * lucas(k0)) == counts[m - 1]
    bound = [math.log(m) / math.log(GOLDEN.phi) + 3 for m in ms]
    fig, ax = _new_axes()
    ax.step(ms, counts, where="mid", lw=1, label="stable digit count of $m L_k$")
    ax.plot(ms, bound, lw=1, color="tab:red", label=r"log m / log $\varphi$ + 3")
    ax.set_xlabel("m")
    ax.set_ylabel("digit count")
    ax.legend(loc="lower right")
    fig.savefig(path)
    plt.close(fig)
    return path


def render_all(outdir: Path, n_max: int = 3000, k_max: int = 30,
               m_max: int = 120) -> list[Path]:
    """Render every report figure into ``outdir`` and list the files."""
    outdir = Path(outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    return [
        plot_ratio_scatter(outdir / "ratio_scatter.png", n_max=n_max),
        plot_family_growth(outdir / "family_digit_growth.png", k_max=k_max),
        plot_lucas_multiple_digits(outdir / "lucas_multiple_digits.png", m_max=m_max),
    ]
