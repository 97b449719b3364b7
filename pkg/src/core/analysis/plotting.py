"""로그-로그 수렴 그래프와 해 비교 그래프 (SVG)

pyplot 전역 상태를 쓰지 않고 Figure 객체만 사용하므로 스레드에서
호출해도 안전합니다. 같은 입력이면 같은 바이트의 SVG를 씁니다.
"""

from pathlib import Path

import matplotlib
import numpy as np
import pandas as pd
from matplotlib.figure import Figure

from ..models.convergence import QUANTITIES, ConvergenceTable

_LABELS = {
    "u_l2": "||u - u_h||_L2",
    "v_l2": "||v - v_h||_L2",
    "u_h1": "||(u - u_h)'||_L2",
    "v_h1": "||(v - v_h)'||_L2",
}

_SVG_RC = {
    "svg.hashsalt": "pbeam",
    "svg.fonttype": "none",
}


def _save(fig: Figure, path: Path) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with matplotlib.rc_context(_SVG_RC):
        fig.savefig(path, format="svg", bbox_inches="tight", metadata={"Date": None})
    return path


def plot_convergence(table: ConvergenceTable, path: Path, quantities=QUANTITIES) -> Path:
    """log10(h) 대 log10(오차), 재현(오차 0) 점은 생략"""
    fig = Figure(figsize=(7, 6))
    ax = fig.add_subplot()
    h = np.array([r.h for r in table.rows])
    for quantity in quantities:
        errors = np.array(table.errors(quantity))
        keep = errors > 0
        if keep.sum() < 2:
            continue
        final = table.final_eoc(quantity)
        label = _LABELS[quantity] + (f"  (EOC {final:.2f})" if final is not None else "")
        ax.loglog(h[keep], errors[keep], "o-", label=label)
    ax.set_xlabel("$h$")
    ax.set_ylabel("error")
    ax.set_title(table.label)
    ax.grid(True, which="both", alpha=0.3)
    ax.legend(loc="best")
    return _save(fig, path)


def plot_solutions(frame: pd.DataFrame, path: Path, title: str = "") -> Path:
    """u, v 정확해와 근사해 비교 (좌: u, 우: v)"""
    fig = Figure(figsize=(12, 5))
    for index, name in enumerate(("u", "v")):
        ax = fig.add_subplot(1, 2, index + 1)
        if f"{name}_exact" in frame:
            ax.plot(frame["x"], frame[f"{name}_exact"], "k-", label=f"${name}(x)$")
        ax.plot(frame["x"], frame[f"{name}_h"], "r--", label=f"${name}_h(x)$")
        ax.set_xlabel("$x$")
        ax.grid(True, alpha=0.3)
        ax.legend(loc="best")
    if title:
        fig.suptitle(title)
    return _save(fig, path)
