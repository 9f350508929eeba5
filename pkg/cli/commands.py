import argparse
import asyncio
import json
import sys
import time
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

from tqdm import tqdm

from arith import parse_rational
from bipoly import BiPoly, Shear, find_shear, squarefree
from config import BENCH_CONCURRENCY
from errors import BiLimitError, PreconditionError
from limits import LimitOutcome, bilimit
from logger import logger
from puiseux import Side, expand, separation_level

from .bench_cases import BENCH_CASES, BenchCase, bench_case
from .expression import parse_poly
from .report import outcome_json

__version__ = "0.1.0"

EXIT_EXISTS = 0
EXIT_ERROR = 1
EXIT_NO_LIMIT = 2


class ArgumentParser(argparse.ArgumentParser):
    """argparse с кодом выхода 1 при ошибке разбора аргументов."""

    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(EXIT_ERROR, f"{self.prog}: error: {message}\n")


def parse_point(text: str) -> Tuple:
    """
    Разбирает точку вида `a,b` с рациональными координатами.

    Raises:
        PreconditionError: если координаты не рациональны
    """
    parts = text.split(",")
    if len(parts) != 2:
        raise PreconditionError(f"Точка должна иметь вид a,b: {text!r}")
    try:
        return parse_rational(parts[0]), parse_rational(parts[1])
    except ValueError as e:
        raise PreconditionError(f"Точка с нерациональной координатой: {e}") from None


def exit_code(outcome: LimitOutcome) -> int:
    return EXIT_EXISTS if outcome.exists else EXIT_NO_LIMIT


def cmd_limit(args: argparse.Namespace) -> int:
    """Предел f/g в точке: текстовый или JSON-отчёт."""
    f, g = parse_poly(args.f), parse_poly(args.g)
    point = parse_point(args.at)
    started = time.perf_counter()
    outcome = bilimit(f, g, point, compute_range=args.range)
    elapsed_ms = (time.perf_counter() - started) * 1000
    logger.info(f"Вердикт: {outcome.text()} за {elapsed_ms:.1f} мс")
    if args.json:
        print(json.dumps(outcome_json(outcome, elapsed_ms), ensure_ascii=False, indent=2))
    else:
        print(outcome.text())
    return exit_code(outcome)


def cmd_branches(args: argparse.Namespace) -> int:
    """Усечённые вещественные ветви кривой f = 0 через начало координат."""
    f = parse_poly(args.f)
    if f.is_zero:
        raise PreconditionError("Ветви нулевого многочлена не определены")
    if f.evaluate(0, 0) != 0:
        print("no real branches")
        return EXIT_EXISTS
    if not f.is_y_regular():
        shear = Shear("x", find_shear([f]))
        f = shear.apply(f)
        print(f"note: input is not y-regular; applied x <- x + {shear.c}*y, f = {f}")
    level = args.level if args.level is not None else separation_level(squarefree(f))
    sides = [Side(args.side)] if args.side != "both" else [Side.PLUS, Side.MINUS]
    lines: List[str] = []
    for side in sides:
        for branch in expand(f, level, side):
            suffix = "" if branch.is_separated else f"  [cluster {branch.cluster}]"
            lines.append(f"{side.value}: {branch.text()}{suffix}")
    print("\n".join(lines) if lines else "no real branches")
    return EXIT_EXISTS


@dataclass
class BenchResult:
    case: BenchCase
    outcome: Optional[LimitOutcome]
    passed: bool
    time_ms: float
    error: Optional[str] = None


def run_case(case: BenchCase) -> BenchResult:
    """Прогоняет один пример и сравнивает с ожидаемым вердиктом точно."""
    started = time.perf_counter()
    try:
        outcome = bilimit(parse_poly(case.f_text), parse_poly(case.g_text))
    except BiLimitError as e:
        logger.error(f"Пример {case.id}: {e}")
        elapsed = (time.perf_counter() - started) * 1000
        return BenchResult(case, None, False, elapsed, str(e))
    elapsed = (time.perf_counter() - started) * 1000
    return BenchResult(case, outcome, case.expected.matches(outcome), elapsed)


async def run_bench(
    cases: Sequence[BenchCase], concurrency: int = BENCH_CONCURRENCY
) -> List[BenchResult]:
    """
    Прогоняет примеры параллельно в потоках; результаты в порядке примеров.
    """
    semaphore = asyncio.Semaphore(concurrency)
    progress = tqdm(total=len(cases), desc="Примеры", file=sys.stderr)

    async def run_one(case: BenchCase) -> BenchResult:
        async with semaphore:
            result = await asyncio.to_thread(run_case, case)
        progress.update(1)
        return result

    try:
        return await asyncio.gather(*(run_one(case) for case in cases))
    finally:
        progress.close()


def bench_json(result: BenchResult) -> dict:
    if result.outcome is not None:
        payload = outcome_json(result.outcome, result.time_ms)
    else:
        payload = {"error": result.error, "time_ms": round(result.time_ms, 3)}
    payload["id"] = result.case.id
    payload["passed"] = result.passed
    payload["expected"] = result.case.expected.as_dict()
    return payload


def cmd_bench(args: argparse.Namespace) -> int:
    """Встроенный набор из 21 примера с точной сверкой вердиктов."""
    if args.case is not None:
        try:
            cases = [bench_case(args.case)]
        except KeyError as e:
            raise PreconditionError(str(e.args[0])) from None
    else:
        cases = BENCH_CASES
    started = time.perf_counter()
    results = asyncio.run(run_bench(cases))
    total_ms = (time.perf_counter() - started) * 1000
    if args.json:
        print(json.dumps([bench_json(r) for r in results], ensure_ascii=False, indent=2))
    else:
        for r in results:
            verdict = r.outcome.text() if r.outcome is not None else f"error: {r.error}"
            status = "PASS" if r.passed else "FAIL"
            print(f"case {r.case.id:2d}: {status}  {verdict}  ({r.time_ms:.1f} ms)")
        passed = sum(r.passed for r in results)
        print(f"passed {passed}/{len(results)}, total {total_ms / 1000:.2f} s")
    return EXIT_EXISTS if all(r.passed for r in results) else EXIT_NO_LIMIT


def build_parser() -> ArgumentParser:
    parser = ArgumentParser(
        prog="bilimit",
        description="Точные пределы f/g для многочленов от двух переменных",
    )
    parser.add_argument("--version", action="version", version=f"bilimit {__version__}")
    subparsers = parser.add_subparsers(dest="command", required=True, parser_class=ArgumentParser)

    limit = subparsers.add_parser("limit", help="предел f/g в точке")
    limit.add_argument("--f", required=True, help="числитель, например 'x^2*y'")
    limit.add_argument("--g", required=True, help="знаменатель")
    limit.add_argument("--at", default="0,0", help="точка a,b (по умолчанию 0,0)")
    limit.add_argument("--json", action="store_true", help="отчёт в формате JSON")
    limit.add_argument("--range", action="store_true", help="вычислить диапазон [MIN, MAX]")
    limit.set_defaults(handler=cmd_limit)

    branches = subparsers.add_parser("branches", help="усечённые ветви f = 0")
    branches.add_argument("--f", required=True, help="многочлен")
    branches.add_argument("-N", "--level", type=int, default=None, help="уровень усечения")
    branches.add_argument("--side", choices=["plus", "minus", "both"], default="both")
    branches.set_defaults(handler=cmd_branches)

    bench = subparsers.add_parser("bench", help="встроенный набор примеров")
    bench.add_argument("--json", action="store_true", help="результаты в формате JSON")
    bench.add_argument("--case", type=int, default=None, help="номер примера 1..21")
    bench.set_defaults(handler=cmd_bench)
    return parser


def run(argv: Optional[Sequence[str]] = None) -> int:
    """
    Разбирает аргументы и выполняет команду.

    Returns:
        0, если предел существует; 2, если нет; 1 при ошибке
    """
    args = build_parser().parse_args(argv)
    try:
        return args.handler(args)
    except BiLimitError as e:
        logger.error(f"Ошибка: {e}")
        print(f"error: {e}", file=sys.stderr)
        return EXIT_ERROR
    except Exception as e:
        logger.error(f"Непредвиденная ошибка: {e}")
        print(f"error: {e}", file=sys.stderr)
        return EXIT_ERROR
