"""해석기 설정"""

import json
import logging
from pathlib import Path

from pydantic import BaseModel

logger = logging.getLogger(__name__)

# 저장 대상 필드 (사용자가 변경하는 설정만)
_PERSIST_FIELDS = {
    "min_quad_points",
    "singular_clamp",
    "oracle_panels",
    "consistency_tol",
    "consistency_points",
    "reproduction_tol",
    "sample_points",
    "default_n_list",
    "extended_n",
    "output_path",
    "log_path",
    "max_workers",
}

CONFIG_FILE = Path("data/config.json")


class SolverSettings(BaseModel):
    """해석기 / 수렴 실험 기본 설정"""

    # === 수치 적분 ===
    min_quad_points: int = 8  # 비선형 적분 최소 Gauss 점 수
    singular_clamp: float = 1e-12  # q < 2일 때 |v|^(q-2) 가중치 하한

    # === 제조해 (manufactured solution) ===
    oracle_panels: int = 10_000  # 이중 적분 오라클 패널 수
    consistency_tol: float = 1e-8
    consistency_points: int = 50

    # === 수렴 실험 ===
    reproduction_tol: float = 1e-11  # 차수가 기저 이하인 다항식 정확해의 V_h 포함 확인용 보간 상대오차
    default_n_list: list[int] = [10, 100, 1000]
    extended_n: int = 10_000  # --full 옵션으로 추가되는 격자
    max_workers: int | None = None  # None이면 executor 기본값

    # === 출력 ===
    sample_points: int = 201
    output_path: Path = Path("results")
    log_path: Path = Path("logs")

    def save(self) -> None:
        """설정을 JSON 파일로 저장"""
        try:
            data = self.model_dump(mode="json", include=_PERSIST_FIELDS)
            CONFIG_FILE.parent.mkdir(parents=True, exist_ok=True)
            CONFIG_FILE.write_text(json.dumps(data, ensure_ascii=False, indent=2), encoding="utf-8")
        except Exception as e:
            logger.warning(f"설정 저장 실패: {e}")

    def load(self) -> None:
        """JSON 파일에서 설정 로드"""
        if not CONFIG_FILE.exists():
            return
        try:
            data = json.loads(CONFIG_FILE.read_text(encoding="utf-8"))
            loaded = SolverSettings.model_validate(
                {k: v for k, v in data.items() if k in _PERSIST_FIELDS}
            )
            for key in loaded.model_fields_set:
                setattr(self, key, getattr(loaded, key))
            logger.info(f"설정 로드: quad>={self.min_quad_points}, n_list={self.default_n_list}")
        except Exception as e:
            logger.warning(f"설정 로드 실패: {e}")


_VERSION_CANDIDATES = (Path("version.json"), Path(__file__).resolve().parents[2] / "version.json")


def get_app_version() -> str:
    """version.json에서 버전 읽기"""
    for candidate in _VERSION_CANDIDATES:
        if candidate.exists():
            try:
                return json.loads(candidate.read_text(encoding="utf-8"))["version"]
            except Exception:
                pass
    return "0.0.0"


# 전역 설정 인스턴스
config = SolverSettings()
config.load()
