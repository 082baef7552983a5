# 파일: main.py
"""
hgstokes 메인 실행 파일

CP^{k-1} 초기하 모노드로미 군, 이차 불변량, Stokes 행렬과 관련 항등식을
정확 유리수 연산으로 계산하고 json / text / latex 로 출력합니다.

사용법:
    python main.py generators --k 3
    python main.py invariant --k 4 --format text
    python main.py stokes --k 3 --format json
    python main.py chi --k 5
    python main.py verify --k-min 2 --k-max 8
    python main.py series --k 2 --terms 30 --s 1/8
    python main.py mellin --k 3 --format latex
    python main.py monodromy --k 3 --tol 1e-10

종료 코드: 0 성공, 1 검증 실패, 2 잘못된 인자
"""

import argparse
import logging
import sys
from pathlib import Path
from typing import Optional, Sequence

from src.errors import HGSError, RankError

logger = logging.getLogger("hgstokes")


# ==========================================
# 인자 타입
# ==========================================

def _rank_arg(value: str) -> int:
    try:
        k = int(value)
    except ValueError:
        raise argparse.ArgumentTypeError(f"k must be an integer, got {value!r}")
    if k < 2:
        raise argparse.ArgumentTypeError(f"k must be >= 2, got {k}")
    return k


def _positive_float(value: str) -> float:
    try:
        x = float(value)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a number, got {value!r}")
    if x <= 0:
        raise argparse.ArgumentTypeError(f"expected a positive number, got {value!r}")
    return x


def _configure_logging(verbose: bool, quiet: bool) -> None:
    level = logging.DEBUG if verbose else logging.WARNING if quiet else logging.INFO
    logging.basicConfig(
        level=level,
        format="%(asctime)s [%(levelname)s] %(name)s: %(message)s",
        datefmt="%Y-%m-%d %H:%M:%S",
    )


# ==========================================
# 파서
# ==========================================

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--format",
        choices=["json", "text", "latex"],
        default="json",
        help="출력 형식 (기본: json)",
    )
    common.add_argument("--out", type=str, default=None, help="출력 파일 경로 (기본: 표준출력)")
    common.add_argument("-v", "--verbose", action="store_true", help="DEBUG 로그")
    common.add_argument("--quiet", action="store_true", help="WARNING 이상만 로그")

    parser = argparse.ArgumentParser(
        prog="hgstokes",
        description="hgstokes - CP^{k-1} 초기하 군과 Stokes 행렬의 정확 계산/검증",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog=__doc__,
    )
    sub = parser.add_subparsers(dest="command", required=True)

    for name, help_text in (
        ("generators", "h0, hinf, h1 와 M_1, M_w^i, M_inf"),
        ("invariant", "이차 불변량 X 와 구조 분류"),
        ("stokes", "Gram -> 반사 -> Coxeter -> Stokes 행렬"),
        ("chi", "Euler 형식 chi 와 braid 항등식"),
        ("mellin", "Cayley 행렬 L 과 Mellin 지수 형식"),
    ):
        p = sub.add_parser(name, parents=[common], help=help_text)
        p.add_argument("--k", type=_rank_arg, required=True, help="랭크 k (>= 2)")

    p = sub.add_parser("series", parents=[common], help="정칙해 급수 계수와 연산자 잔차")
    p.add_argument("--k", type=_rank_arg, required=True, help="랭크 k (>= 2)")
    p.add_argument("--terms", type=int, default=10, help="절단 차수 (기본: 10)")
    p.add_argument("--s", type=str, default=None, help="I_0(s) 를 평가할 유리수 s (예: 1/8)")

    p = sub.add_parser("monodromy", parents=[common], help="수치 모노드로미 교차검증")
    p.add_argument("--k", type=_rank_arg, required=True, help="랭크 k (>= 2)")
    p.add_argument("--tol", type=_positive_float, default=None, help="적분 허용오차 (기본: 설정값)")

    p = sub.add_parser("verify", parents=[common], help="k 범위 전체 항등식 검증")
    p.add_argument("--k-min", type=_rank_arg, default=None, help="시작 k (기본: 설정값)")
    p.add_argument("--k-max", type=_rank_arg, default=None, help="끝 k (기본: 설정값)")
    p.add_argument("--with-numeric", action="store_true", help="수치 모노드로미 검증 포함")
    return parser


# ==========================================
# 실행
# ==========================================

def _build(args: argparse.Namespace):
    from src.config import get_pipeline_config
    from src import report

    if args.command == "verify":
        config = get_pipeline_config()
        k_min = args.k_min or config.k_min
        k_max = args.k_max or config.k_max
        return report.verify_range(k_min, k_max, with_numeric=args.with_numeric, config=config)
    if args.command == "series":
        return report.section_series(args.k, terms=args.terms, s=args.s)
    if args.command == "monodromy":
        return report.section_monodromy(args.k, tol=args.tol)
    return report.SECTIONS[args.command](args.k)


def _emit(text: str, out: Optional[str]) -> None:
    """상대 경로는 reports_dir (HGS_REPORTS_DIR) 기준"""
    from src.config import get_reports_dir

    if out is None:
        sys.stdout.write(text)
        return
    path = Path(out).expanduser()
    if not path.is_absolute():
        path = get_reports_dir() / path
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(text, encoding="utf-8")
    logger.info(f"[CLI] 출력 저장: {path}")


def run(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)

    _configure_logging(args.verbose, args.quiet)

    from src.config import get_env_status
    from src.report import render

    logger.debug(f"[CLI] {get_env_status().message}")

    try:
        result = _build(args)
    except (RankError, ValueError) as exc:
        parser.print_usage(sys.stderr)
        sys.stderr.write(f"hgstokes: error: {exc}\n")
        return 2
    except HGSError as exc:
        logger.error(f"[CLI] 계산 실패: {exc}")
        return 1

    _emit(render(result, args.format), args.out)
    return 0 if result.passed else 1


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
