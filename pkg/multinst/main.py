import logging
import sys

from pydantic import ValidationError

from multinst.cli.router import build_parser
from multinst.config import settings
from multinst.exceptions import MultinstError

logger = logging.getLogger(__name__)


def configure_logging(verbose: bool = False) -> None:
    """stderr 로깅: stdout 은 CSV/JSON 출력 전용"""
    level = logging.DEBUG if verbose else getattr(logging, settings.log_level.upper(), logging.INFO)
    logging.basicConfig(
        level=level,
        format='%(asctime)s - %(name)s - %(levelname)s - %(message)s',
        stream=sys.stderr,
    )
    logging.getLogger().setLevel(level)


def main(argv: list[str] | None = None) -> int:
    """CLI 진입점: 종료 코드 반환 (0 성공, 1 기타, 2 사용법, 3 데이터 퇴화, 4 검증 실패)"""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        # argparse: --help/--version 은 0, 인자 오류는 2
        return e.code if isinstance(e.code, int) else 0

    configure_logging(args.verbose)
    logger.debug(f"명령: {args.command}")
    try:
        return args.handler(args)
    except MultinstError as e:
        logger.error(f"{args.command} 실패: {e.detail}")
        return e.exit_code
    except ValidationError as e:
        logger.error(f"입력 검증 실패: {e}")
        return 2
    except OSError as e:
        logger.error(f"파일 입출력 오류: {e}")
        return 1
    except Exception as e:
        logger.exception(f"{args.command} 처리 중 예기치 않은 오류: {e}")
        return 1


if __name__ == "__main__":
    sys.exit(main())
