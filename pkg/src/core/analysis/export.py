"""해 샘플 파일과 그래프용 데이터 파일 출력"""

import logging
from pathlib import Path

import numpy as np
import pandas as pd

from ..manufactured.exact import ExactPair
from ..models.convergence import CSV_FLOAT_FORMAT, QUANTITIES, ConvergenceTable
from ..models.solution import MixedSolution

logger = logging.getLogger(__name__)


def sample_frame(sol: MixedSolution, pair: ExactPair | None = None, n_points: int = 201) -> pd.DataFrame:
    """[a, b] 균일 샘플점에서 x, u_h, v_h (+ u_exact, v_exact)"""
    mesh = sol.space.mesh
    x = np.linspace(mesh.a, mesh.b, n_points)
    data = {
        "x": x,
        "u_h": sol.u_h(x),
        "v_h": sol.v_h(x),
    }
    if pair is not None:
        data["u_exact"] = np.asarray(pair.u(x), dtype=float)
        data["v_exact"] = np.asarray(pair.v(x), dtype=float)
    return pd.DataFrame(data)


def write_samples(frame: pd.DataFrame, path: Path) -> Path:
    """샘플 CSV 저장"""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    frame.to_csv(path, index=False, float_format=CSV_FLOAT_FORMAT, lineterminator="\n")
    logger.info(f"샘플 저장: {path} ({len(frame)}행)")
    return path


def write_plot_data(table: ConvergenceTable, path: Path) -> Path:
    """log10(h) 대 log10(오차) 공백 구분 텍스트 (gnuplot 등에서 바로 사용)

    오차가 0인 칸은 nan으로 기록합니다.
    """
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    header = "# log10_h " + " ".join(f"log10_err_{q}" for q in QUANTITIES)
    lines = [header]
    with np.errstate(divide="ignore"):
        for row in table.rows:
            values = [np.log10(row.h)] + [
                np.log10(row.error(q)) if row.error(q) > 0 else np.nan for q in QUANTITIES
            ]
            lines.append(" ".join(f"{v:.15g}" for v in values))
    path.write_text("\n".join(lines) + "\n", encoding="utf-8")
    return path
