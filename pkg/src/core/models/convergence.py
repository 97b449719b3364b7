"""오차 보고와 수렴표 모델"""

import math
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np
import pandas as pd

# 오차 종류 (CSV 열 접미사)
QUANTITIES = ("u_l2", "v_l2", "u_h1", "v_h1")

CSV_COLUMNS = [
    "n",
    "h",
    *(f"err_{q}" for q in QUANTITIES),
    *(f"eoc_{q}" for q in QUANTITIES),
]

# CSV 부동소수 출력 유효숫자
CSV_FLOAT_FORMAT = "%.15g"


def eoc(e_coarse: float, e_fine: float, h_coarse: float, h_fine: float) -> float | None:
    """실험적 수렴 차수 log(e_c/e_f) / log(h_c/h_f)

    오차가 0 이하이면 None (정확 재현, 해당 없음).
    """
    if not 0 < h_fine < h_coarse:
        raise ValueError(f"h는 0 < h_fine < h_coarse 여야 합니다: {h_coarse}, {h_fine}")
    if e_coarse <= 0 or e_fine <= 0:
        return None
    return math.log(e_coarse / e_fine) / math.log(h_coarse / h_fine)


@dataclass(frozen=True)
class ErrorReport:
    """격자 하나의 오차"""

    n_elements: int
    h: float
    err_u_l2: float
    err_v_l2: float
    err_u_h1: float  # ||(u - u_h)'||
    err_v_h1: float  # ||(v - v_h)'||
    u_reproduced: bool = False  # u가 V_h 안에 있음 (오차 = 풀이 반올림)
    v_reproduced: bool = False
    wall_time: float = 0.0

    def error(self, quantity: str) -> float:
        return getattr(self, f"err_{quantity}")

    def reproduced(self, quantity: str) -> bool:
        return getattr(self, f"{quantity[0]}_reproduced")


@dataclass
class ConvergenceTable:
    """h 감소 순으로 정렬된 오차 행과 인접 행 사이 EOC"""

    rows: list[ErrorReport]
    eoc: dict[str, list[float | None]] = field(default_factory=dict)
    label: str = ""

    @classmethod
    def build(cls, rows: list[ErrorReport], label: str = "") -> "ConvergenceTable":
        """행 목록에서 EOC 열 계산 (첫 행과 재현 행은 None)"""
        rows = sorted(rows, key=lambda r: r.h, reverse=True)
        columns: dict[str, list[float | None]] = {}
        for quantity in QUANTITIES:
            column: list[float | None] = [None]
            for coarse, fine in zip(rows, rows[1:]):
                if coarse.reproduced(quantity) or fine.reproduced(quantity):
                    column.append(None)
                else:
                    column.append(eoc(coarse.error(quantity), fine.error(quantity), coarse.h, fine.h))
            columns[quantity] = column
        return cls(rows=rows, eoc=columns, label=label)

    @property
    def n_list(self) -> list[int]:
        return [r.n_elements for r in self.rows]

    def errors(self, quantity: str) -> list[float]:
        return [r.error(quantity) for r in self.rows]

    def final_eoc(self, quantity: str) -> float | None:
        """가장 세밀한 두 격자 사이 EOC"""
        return self.eoc[quantity][-1] if self.eoc.get(quantity) else None

    def to_frame(self) -> pd.DataFrame:
        """CSV 열 순서의 DataFrame (해당 없음은 NaN)"""
        data: dict[str, list] = {
            "n": self.n_list,
            "h": [r.h for r in self.rows],
        }
        for quantity in QUANTITIES:
            data[f"err_{quantity}"] = self.errors(quantity)
        for quantity in QUANTITIES:
            data[f"eoc_{quantity}"] = [np.nan if e is None else e for e in self.eoc[quantity]]
        return pd.DataFrame(data, columns=CSV_COLUMNS)

    def to_csv(self, path: Path) -> Path:
        """CSV 저장 (빈 칸 = 해당 없음, LF 줄바꿈)"""
        path = Path(path)
        path.parent.mkdir(parents=True, exist_ok=True)
        self.to_frame().to_csv(
            path,
            index=False,
            float_format=CSV_FLOAT_FORMAT,
            na_rep="",
            lineterminator="\n",
        )
        return path

    @classmethod
    def from_csv(cls, path: Path, label: str = "") -> "ConvergenceTable":
        """to_csv 출력 다시 읽기"""
        frame = pd.read_csv(path, float_precision="round_trip")
        missing = [c for c in CSV_COLUMNS if c not in frame.columns]
        if missing:
            raise ValueError(f"수렴표 CSV 열 누락: {missing}")

        rows = [
            ErrorReport(
                n_elements=int(rec["n"]),
                h=float(rec["h"]),
                err_u_l2=float(rec["err_u_l2"]),
                err_v_l2=float(rec["err_v_l2"]),
                err_u_h1=float(rec["err_u_h1"]),
                err_v_h1=float(rec["err_v_h1"]),
            )
            for rec in frame.to_dict("records")
        ]
        columns = {
            q: [None if pd.isna(v) else float(v) for v in frame[f"eoc_{q}"]] for q in QUANTITIES
        }
        return cls(rows=rows, eoc=columns, label=label)
