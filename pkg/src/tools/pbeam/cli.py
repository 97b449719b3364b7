"""
CLI for the mixed FEM p-biharmonic beam solver.

Usage:
    uv run python -m tools.pbeam solve --p 1.5 --example 1 --n 10
    uv run python -m tools.pbeam convergence --p 1.5 --example 1 --n-list 10,100,1000
    uv run python -m tools.pbeam validate --p 3 --example 2
"""
import argparse
import logging
import platform
import sys
from logging.handlers import RotatingFileHandler
from pathlib import Path
from typing import Literal

import numpy as np
from pydantic import BaseModel, field_validator, model_validator

from core.analysis import (
    compute_errors,
    error_points,
    plot_convergence,
    plot_solutions,
    run_convergence,
    sample_frame,
    write_plot_data,
    write_samples,
)
from core.common import parse_source
from core.config import config, get_app_version
from core.manufactured import check_consistency, get_example
from core.solver import ProblemConfig, solve_mixed, stability_check

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_NUMERICAL = 2

LOG_FORMAT = "%(asctime)s [%(levelname)s] %(name)s: %(message)s"

_logging_initialized = False


def setup_logging(verbose: bool = False) -> None:
    """콘솔 + 파일 로깅 설정 (RotatingFileHandler)

    여러 번 호출되어도 한 번만 초기화됩니다.
    """
    global _logging_initialized
    if _logging_initialized:
        return
    _logging_initialized = True

    root = logging.getLogger()
    root.setLevel(logging.DEBUG if verbose else logging.INFO)

    console = logging.StreamHandler(sys.stderr)
    console.setLevel(logging.INFO if verbose else logging.WARNING)
    console.setFormatter(logging.Formatter("[%(levelname)s] %(message)s"))
    root.addHandler(console)

    try:
        config.log_path.mkdir(parents=True, exist_ok=True)
        handler = RotatingFileHandler(
            config.log_path / "pbeam.log",
            maxBytes=5 * 1024 * 1024,  # 5MB
            backupCount=2,
            encoding="utf-8",
        )
    except OSError as e:
        logger.warning(f"로그 파일을 열 수 없습니다: {e}")
        return
    handler.setFormatter(logging.Formatter(LOG_FORMAT))
    root.addHandler(handler)

    logger.info(
        f"pbeam v{get_app_version()} | Python {sys.version.split()[0]} | "
        f"numpy {np.__version__} | {platform.system()} {platform.machine()}"
    )


class RunConfig(BaseModel):
    """명령 한 번의 실행 설정 (CLI 플래그와 1:1 대응)"""

    command: Literal["solve", "convergence", "validate"]
    p: float
    example: Literal[1, 2] | None = None
    source: str | None = None
    degree: int = 1
    n: int = 10
    n_list: list[int] | None = None
    output: Path = config.output_path
    plot: bool = False
    quad_points: int | None = None
    deterministic: bool = False
    full: bool = False
    verbose: bool = False

    @field_validator("p")
    @classmethod
    def _check_p(cls, value: float) -> float:
        if not value > 1:
            raise ValueError(f"p must exceed 1 (p={value})")
        return value

    @field_validator("degree", "n")
    @classmethod
    def _check_positive(cls, value: int) -> int:
        if value < 1:
            raise ValueError(f"1 이상이어야 합니다: {value}")
        return value

    @model_validator(mode="after")
    def _check_problem(self) -> "RunConfig":
        if self.example is not None and self.source is not None:
            raise ValueError("--example 과 --source 는 함께 쓸 수 없습니다")
        if self.example is None and self.source is None:
            raise ValueError("--example 또는 --source 중 하나가 필요합니다")
        if self.source is not None and self.command != "solve":
            raise ValueError(f"{self.command} 명령은 정확해가 있는 --example 만 지원합니다")
        return self

    @property
    def effective_n_list(self) -> list[int]:
        n_list = list(self.n_list) if self.n_list is not None else list(config.default_n_list)
        if self.full and config.extended_n not in n_list:
            n_list.append(config.extended_n)
        return n_list

    @property
    def stem(self) -> str:
        problem = f"ex{self.example}" if self.example is not None else "custom"
        return f"{self.command}_{problem}_p{self.p:g}_d{self.degree}"

    def to_argv(self) -> list[str]:
        """같은 RunConfig로 다시 파싱되는 플래그 목록"""
        argv = [self.command, "--p", repr(self.p)]
        if self.example is not None:
            argv += ["--example", str(self.example)]
        if self.source is not None:
            argv += ["--source", self.source]
        argv += ["--degree", str(self.degree), "--n", str(self.n)]
        if self.n_list is not None:
            argv += ["--n-list", ",".join(str(n) for n in self.n_list)]
        argv += ["--output", str(self.output)]
        if self.quad_points is not None:
            argv += ["--quad-points", str(self.quad_points)]
        for flag in ("plot", "deterministic", "full", "verbose"):
            if getattr(self, flag):
                argv.append(f"--{flag}")
        return argv

    @classmethod
    def from_args(cls, args: argparse.Namespace) -> "RunConfig":
        return cls(
            command=args.command,
            p=args.p,
            example=args.example,
            source=args.source,
            degree=args.degree,
            n=args.n,
            n_list=args.n_list,
            output=args.output,
            plot=args.plot,
            quad_points=args.quad_points,
            deterministic=args.deterministic,
            full=args.full,
            verbose=args.verbose,
        )


class _Parser(argparse.ArgumentParser):
    """사용법 오류를 종료 코드 1로 보고"""

    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"Error: {message}\n")


def _int_list(text: str) -> list[int]:
    try:
        return [int(item) for item in text.split(",") if item.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"쉼표로 구분한 정수 목록이 필요합니다: {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="pbeam",
        description="Mixed finite element solver for the 1D p-biharmonic beam equation",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Examples:
  pbeam solve --p 1.5 --example 1 --n 10 --plot
  pbeam solve --p 3 --source "x^2 - 1/3"
  pbeam convergence --p 1.5 --example 1 --n-list 10,100,1000
  pbeam convergence --p 25 --example 2 --degree 3 --full
  pbeam validate --p 3 --example 2

Exit codes: 0 성공, 1 사용법 오류, 2 수치 오류
        """,
    )
    parser.add_argument("command", choices=["solve", "convergence", "validate"])
    parser.add_argument("--p", type=float, required=True, help="Exponent p > 1")

    problem = parser.add_mutually_exclusive_group()
    problem.add_argument("--example", type=int, choices=[1, 2], default=None, help="Manufactured example")
    problem.add_argument("--source", type=str, default=None, help='Source term f(x), e.g. "x^2 - 1/3" (solve only)')

    parser.add_argument("--degree", type=int, default=1, help="Lagrange basis degree (default: 1)")
    parser.add_argument("--n", type=int, default=10, help="Number of elements for solve (default: 10)")
    parser.add_argument(
        "--n-list",
        type=_int_list,
        default=None,
        help=f"Comma-separated element counts for convergence (default: {','.join(map(str, config.default_n_list))})",
    )
    parser.add_argument(
        "--output", "-o",
        type=Path,
        default=config.output_path,
        help=f"Output directory (default: {config.output_path})",
    )
    parser.add_argument("--plot", action="store_true", help="Also write an SVG chart")
    parser.add_argument("--quad-points", type=int, default=None, help="Gauss points for the nonlinear terms")
    parser.add_argument("--deterministic", action="store_true", help="Run meshes one after another")
    parser.add_argument("--full", action="store_true", help=f"Append n = {config.extended_n} to the mesh list")
    parser.add_argument("--verbose", "-v", action="store_true", help="Log progress to the console")
    return parser


def parse_config(argv: list[str] | None = None) -> RunConfig:
    args = build_parser().parse_args(argv)
    if args.example is None and args.source is None:
        args.example = 1
    return RunConfig.from_args(args)


def _banner(title: str, cfg: RunConfig) -> None:
    print("=" * 60)
    print(title)
    print("=" * 60)
    problem = f"example {cfg.example}" if cfg.example is not None else f"f(x) = {cfg.source}"
    print(f"p:       {cfg.p:g}")
    print(f"Problem: {problem}")
    print(f"Degree:  {cfg.degree}")


def cmd_solve(cfg: RunConfig) -> int:
    """한 격자에서 풀고 샘플 CSV (+ SVG) 저장"""
    _banner("pbeam solve", cfg)
    if cfg.example is not None:
        pair = get_example(cfg.example)(cfg.p)
        source = pair.f
    else:
        pair = None
        source = parse_source(cfg.source)

    problem = ProblemConfig(
        p=cfg.p,
        source=source,
        n_elements=cfg.n,
        degree=cfg.degree,
        quad_points=cfg.quad_points,
    )
    print(f"Elements: {cfg.n}")
    print("=" * 60)

    sol = solve_mixed(problem)
    print(f"Residual v: {sol.residual_v:.3e}")
    print(f"Residual u: {sol.residual_u:.3e}")
    print(f"Time:       {sol.wall_time:.4f}s")

    stability = stability_check(sol, problem)
    if stability.v_ratio is not None:
        print(f"|v_h|_H1 / |f|_L2 = {stability.v_ratio:.6g}")
        print(f"|u_h|_H1 / |f|_L2^(q-1) = {stability.u_ratio:.6g}")

    if pair is not None:
        report = compute_errors(sol, pair, error_points(problem))
        print("-" * 60)
        print(f"err_u_l2: {report.err_u_l2:.6e}")
        print(f"err_v_l2: {report.err_v_l2:.6e}")
        print(f"err_u_h1: {report.err_u_h1:.6e}")
        print(f"err_v_h1: {report.err_v_h1:.6e}")

    frame = sample_frame(sol, pair, config.sample_points)
    samples_path = write_samples(frame, cfg.output / f"{cfg.stem}_n{cfg.n}.csv")
    print("-" * 60)
    print(f"Samples: {samples_path}")
    if cfg.plot:
        title = pair.label if pair is not None else f"f(x) = {cfg.source}"
        svg_path = plot_solutions(frame, cfg.output / f"{cfg.stem}_n{cfg.n}.svg", title=f"{title}, n={cfg.n}")
        print(f"Plot:    {svg_path}")

    if not sol.is_converged:
        print("Error: 선형 풀이 잔차가 허용치를 넘었습니다")
        return EXIT_NUMERICAL
    return EXIT_OK


def cmd_convergence(cfg: RunConfig) -> int:
    """격자 목록 수렴 실험 CSV + 그래프 데이터 (+ SVG) 저장"""
    n_list = cfg.effective_n_list
    _banner("pbeam convergence", cfg)
    print(f"Meshes:  {n_list}")
    print("=" * 60)

    table = run_convergence(
        cfg.p,
        get_example(cfg.example),
        cfg.degree,
        n_list,
        quad_points=cfg.quad_points,
        parallel=not cfg.deterministic,
    )

    print(table.to_frame().to_string(index=False, float_format=lambda v: f"{v:.4e}", na_rep="-"))

    csv_path = table.to_csv(cfg.output / f"{cfg.stem}.csv")
    data_path = write_plot_data(table, cfg.output / f"{cfg.stem}.dat")
    print("-" * 60)
    print(f"Table:     {csv_path}")
    print(f"Plot data: {data_path}")
    if cfg.plot:
        print(f"Plot:      {plot_convergence(table, cfg.output / f'{cfg.stem}.svg')}")
    return EXIT_OK


def cmd_validate(cfg: RunConfig) -> int:
    """제조해가 강형식을 만족하는지 검사"""
    _banner("pbeam validate", cfg)
    print("=" * 60)
    pair = get_example(cfg.example)(cfg.p, validate=False)
    report = check_consistency(pair)

    print(f"max |v'' - f|:                 {report.max_defect_v:.3e}")
    print(f"max |u'' - sign(v)|v|^(q-1)|:  {report.max_defect_u:.3e}")
    print(f"boundary:                      {report.boundary_defect:.3e}")
    print(f"max defect:                    {report.max_defect:.3e} (tol {report.tol:.0e})")
    for note in report.notes:
        print(f"Note: {note}")

    if not report.passed:
        print(f"Error: {report.failing_identity} 불일치 (x = {report.worst_location:.6g})")
        return EXIT_NUMERICAL
    print("PASS")
    return EXIT_OK


COMMANDS = {
    "solve": cmd_solve,
    "convergence": cmd_convergence,
    "validate": cmd_validate,
}


def main(argv: list[str] | None = None) -> int:
    try:
        cfg = parse_config(argv)
    except ValueError as e:
        print(f"Error: {e}")
        return EXIT_USAGE

    setup_logging(cfg.verbose)
    logger.info(f"실행: pbeam {' '.join(cfg.to_argv())}")
    try:
        return COMMANDS[cfg.command](cfg)
    except (ArithmeticError, np.linalg.LinAlgError) as e:
        logger.exception(f"{cfg.command} 수치 오류")
        print(f"Error: {e}")
        return EXIT_NUMERICAL
    except ValueError as e:
        logger.warning(f"{cfg.command} 입력 오류: {e}")
        print(f"Error: {e}")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
