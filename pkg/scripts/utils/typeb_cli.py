#!/usr/bin/env python3
"""
CLI для typeb_fock

Команды:
- partitions  - перечисление разбиений типа B (с таблицей статистик)
- stats       - статистики одного разбиения в канонической записи
- moment      - смешанный момент: формула по разбиениям и/или оракул Фока
- wick        - формула Вика против прямого применения операторов
- symmetrizer - спектр P^(n) и проверка разложения P^(n) = (I⊗P^(n-1)⊗I)R^(n)
- measure     - сетка плотности меры (CSV): замкнутая форма и обращение Стилтьеса
- norms       - усеченные нормы операторов рождения и калибровки

Машинный вывод (таблицы, многочлены, JSON, CSV) идет в stdout,
сообщения о ходе работы - в stderr.

Коды выхода: 0 - успех/совпадение, 2 - несовпадение, 1 - ошибка данных/использования.
"""

import argparse
import csv
import io
import json
import logging
import random
import sys
from pathlib import Path
from typing import List, Optional, Sequence, Tuple

import numpy as np

# Добавляем путь к модулю
sys.path.insert(0, str(Path(__file__).parent.parent))

from typeb_fock import __version__
from typeb_fock.algebra import parse_rational
from typeb_fock.config import EngineConfig
from typeb_fock.exceptions import PreconditionError, TypeBError
from typeb_fock.fock import (
    creation_norm,
    creation_norm_bounds,
    gauge_norm,
    gauge_norm_bound,
    r_norm,
    r_norm_bound,
    symmetrizer_spectrum,
)
from typeb_fock.models import MomentMethod, OperatorKind, PartitionClass, ProblemFile, Report, Verdict
from typeb_fock.moments import random_problem
from typeb_fock.orthopoly import (
    SUPPORT,
    atom_mass_from_transform,
    meixner_measure,
    stieltjes_density,
)
from typeb_fock.partitions import (
    enumerate_partitions,
    extended_statistics,
    parse_extended,
    parse_partition,
    statistics,
)
from typeb_fock.verification import VerificationPipeline

logger = logging.getLogger("typeb_cli")

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_MISMATCH = 2


class UsageError(Exception):
    """Неверные аргументы командной строки"""


class _Parser(argparse.ArgumentParser):
    """argparse с кодом выхода 1 для ошибок использования (2 занят под несовпадение)"""

    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"❌ {self.prog}: {message}", file=sys.stderr)
        raise SystemExit(EXIT_ERROR)


# ============================================================================
# Разбор аргументов
# ============================================================================

def _rational_list(text: str) -> List:
    """'1,-1/2,0' -> [Fraction(1), Fraction(-1, 2), Fraction(0)]"""
    try:
        return [parse_rational(part) for part in text.split(",")]
    except ValueError as e:
        raise UsageError(str(e))


def _float_list(text: str) -> List[float]:
    try:
        return [float(parse_rational(part)) for part in text.split(",")]
    except ValueError as e:
        raise UsageError(str(e))


def _matrix(text: str) -> List[List[float]]:
    """'1,0;0,1' -> строки матрицы"""
    return [_float_list(row) for row in text.split(";")]


def _int_pair(text: str, name: str) -> Tuple[int, int]:
    try:
        first, second = (int(part) for part in text.split(","))
    except ValueError:
        raise UsageError(f"{name}: ожидалась пара целых 'N,D', получено {text!r}")
    return first, second


def _specialization(text: Optional[str]):
    if text is None:
        return None
    values = _rational_list(text)
    if len(values) != 2:
        raise UsageError(f"--specialize: ожидалась пара 'alpha,q', получено {text!r}")
    return values[0], values[1]


def _load_problem(path: Optional[str], random_spec: Optional[str], seed: int, n: Optional[int] = None):
    """Задача из файла или случайная (--random N,D либо D при заданном n)"""
    if path and random_spec:
        raise UsageError("Укажите либо файл задачи, либо --random")
    if path:
        return ProblemFile.load(path).to_problem()
    if random_spec:
        if n is None:
            n, d = _int_pair(random_spec, "--random")
        else:
            try:
                d = int(random_spec)
            except ValueError:
                raise UsageError(f"--random: ожидалась размерность D, получено {random_spec!r}")
        if n < 1 or d < 1:
            raise UsageError(f"--random: N и D должны быть >= 1, получено {n},{d}")
        return random_problem(n, d, random.Random(seed))
    raise UsageError("Не задана задача: укажите файл или --random")


# ============================================================================
# Вывод
# ============================================================================

def _info(args, message: str) -> None:
    if not args.quiet:
        print(message, file=sys.stderr)


def _emit_report(args, report: Report) -> int:
    """Печать отчета и код выхода по вердикту"""
    if args.json:
        print(json.dumps(report.to_dict(timing=args.timing), ensure_ascii=False, indent=2))
    else:
        for key, value in report.payload.items():
            if key == "terms":
                for term in value:
                    print(f"  {term['partition']}\tna={term['na']}\trc={term['rc']}\tcs={term['cs']}\t{term['cumulant']}")
            elif isinstance(value, list):
                print(f"{key}: {', '.join(str(v) for v in value)}")
            else:
                print(f"{key}: {value}")
        if report.verdict is not None:
            print(f"verdict: {report.verdict.value}")
        if report.diff:
            print(f"diff: {report.diff}")
    if report.verdict is Verdict.MISMATCH:
        _info(args, f"❌ НЕСОВПАДЕНИЕ ({report.command}): {report.diff}")
        return EXIT_MISMATCH
    if report.verdict is Verdict.EQUAL:
        _info(args, f"✅ Совпадение ({report.command}), {report.seconds:.2f} сек")
    return EXIT_OK


def _fmt(value: Optional[float], digits: int) -> str:
    if value is None:
        return ""
    return f"{value:.{digits}g}"


# ============================================================================
# Команды
# ============================================================================

def cmd_partitions(args, config: EngineConfig) -> int:
    try:
        cls = PartitionClass(args.cls)
    except ValueError:
        choices = ", ".join(c.value for c in PartitionClass)
        raise UsageError(f"Неизвестный класс разбиений {args.cls!r}; допустимы: {choices}")
    _info(args, f"🚀 Перечисление разбиений: n={args.n}, класс {cls.value}")
    partitions = enumerate_partitions(args.n, cls, config)

    rows = []
    for p in partitions:
        row = {"partition": p.to_text()}
        if args.stats:
            s = statistics(p)
            row.update(na=s.na, rc=s.rc, cs=s.cs)
        rows.append(row)

    if args.json:
        print(json.dumps({"n": args.n, "class": cls.value, "count": len(rows), "rows": rows},
                         ensure_ascii=False, indent=2))
    else:
        for row in rows:
            print("\t".join(str(v) for v in row.values()))
    _info(args, f"📊 Всего разбиений: {len(rows)}")
    return EXIT_OK


def cmd_stats(args, config: EngineConfig) -> int:
    extended = args.extended_minmax or "E" in args.partition
    if extended:
        p = parse_extended(args.partition)
        record = extended_statistics(p)
    else:
        p = parse_partition(args.partition)
        record = statistics(p)
    data = {"partition": p.to_text(), "na": record.na, "rc": record.rc, "cs": record.cs}
    if record.minmax is not None:
        data["minmax"] = record.minmax
    if args.json:
        print(json.dumps(data, ensure_ascii=False, indent=2))
    else:
        for key, value in data.items():
            print(f"{key}: {value}")
    return EXIT_OK


def cmd_moment(args, config: EngineConfig) -> int:
    problem = _load_problem(args.file, args.random, args.seed)
    minus = ProblemFile.load(args.minus).to_problem() if args.minus else None
    _info(args, f"🚀 Момент: n={problem.n}, d={problem.dimension}, метод {args.method}")
    pipeline = VerificationPipeline(config)
    report = pipeline.compute_moment(
        problem,
        method=MomentMethod(args.method),
        minus=minus,
        specialize=_specialization(args.specialize),
        with_terms=args.terms,
    )
    logger.debug(repr(pipeline))
    return _emit_report(args, report)


def cmd_wick(args, config: EngineConfig) -> int:
    try:
        eps = [OperatorKind.parse(token) for token in args.eps.split(",")]
    except ValueError as e:
        raise UsageError(str(e))
    problem = _load_problem(args.file, args.random, args.seed, n=len(eps))
    if problem.n != len(eps):
        raise UsageError(f"Длина --eps ({len(eps)}) не совпадает с числом факторов ({problem.n})")
    _info(args, f"🚀 Формула Вика: {' '.join(e.symbol for e in eps)}")
    report = VerificationPipeline(config).verify_wick(eps, problem)
    return _emit_report(args, report)


def cmd_symmetrizer(args, config: EngineConfig) -> int:
    if args.n < 1 or args.d < 1:
        raise UsageError(f"--n и --d должны быть >= 1, получено n={args.n}, d={args.d}")
    min_eig, det_zero = symmetrizer_spectrum(args.n, args.d, args.alpha, args.q, config)
    data = {
        "n": args.n,
        "d": args.d,
        "alpha": args.alpha,
        "q": args.q,
        "min_eigenvalue": min_eig,
        "det_zero": det_zero,
        "r_norm": r_norm(args.n, args.d, args.alpha, args.q, config),
        "r_norm_bound": r_norm_bound(args.n, args.alpha, args.q),
    }
    if args.json and not args.decomposition:
        print(json.dumps(data, ensure_ascii=False, indent=2))
    elif not args.json:
        for key, value in data.items():
            print(f"{key}: {value}")
    if det_zero:
        _info(args, "⚠️  P^(n) вырожден в этой точке (ядро нетривиально)")
    if not args.decomposition:
        return EXIT_OK

    _info(args, f"🚀 Проверка разложения P^({args.n}) на всех базисных словах, d={args.d}")
    report = VerificationPipeline(config).verify_decomposition(args.n, args.d, seed=args.seed)
    if args.json:
        report.payload.update(data)
    return _emit_report(args, report)


def cmd_measure(args, config: EngineConfig) -> int:
    if args.alpha <= -1:
        raise PreconditionError(f"Мера определена при alpha > -1, получено {args.alpha}")
    if args.grid < 1:
        raise UsageError(f"--grid должен быть >= 1, получено {args.grid}")
    eps = config.stieltjes_eps if args.eps is None else args.eps
    depth = config.cf_depth if args.depth is None else args.depth
    closed = meixner_measure(args.alpha) if args.q == 0 else None

    lo, hi = SUPPORT[0] + config.endpoint_margin, SUPPORT[1] - config.endpoint_margin
    grid = np.linspace(lo, hi, args.grid)
    _info(args, f"🚀 Мера: alpha={args.alpha}, q={args.q}, {args.grid} точек, eps={eps}, глубина {depth}")

    digits = config.csv_digits
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(["x", "density_closed_form", "density_inversion", "kind"])
    for x in grid:
        x = float(x)
        exact = closed.density(x) if closed else None
        inverted = stieltjes_density(args.alpha, args.q, x, eps, depth, config)
        writer.writerow([_fmt(x, digits), _fmt(exact, digits), _fmt(inverted, digits), "density"])
    if closed and closed.atom:
        location, mass = closed.atom
        from_transform = atom_mass_from_transform(args.alpha, eps, method="cf", config=config)
        writer.writerow([_fmt(location, digits), _fmt(mass, digits), _fmt(from_transform, digits), "atom"])

    if args.out:
        path = Path(args.out)
        try:
            path.write_text(buffer.getvalue(), encoding="utf-8")
        except OSError as e:
            raise UsageError(f"Не удалось записать {path}: {e}")
        _info(args, f"💾 CSV: {path}")
    else:
        sys.stdout.write(buffer.getvalue())
    if closed is None:
        _info(args, "⚠️  q != 0: замкнутая форма и атом не вычисляются, только обращение")
    return EXIT_OK


def cmd_norms(args, config: EngineConfig) -> int:
    x, y = _float_list(args.x), _float_list(args.y)
    if len(x) != len(y):
        raise UsageError(f"--x и --y разной длины: {len(x)} и {len(y)}")
    _info(args, f"🚀 Нормы: alpha={args.alpha}, q={args.q}, уровни < {args.max_level}")
    region, lower, upper = creation_norm_bounds(x, y, args.alpha, args.q)
    data = {
        "region": region.value,
        "creation_norm": creation_norm(x, y, args.alpha, args.q, args.max_level, config),
        "lower_bound": lower,
        "upper_bound": upper,
    }
    if args.gauge:
        d = len(x)
        identity = np.eye(d).tolist()
        tl = _matrix(args.t_left) if args.t_left else identity
        tr = _matrix(args.t_right) if args.t_right else identity
        data["gauge_norm"] = gauge_norm(tl, tr, args.alpha, args.q, args.max_level, config)
        data["gauge_norm_bound"] = gauge_norm_bound(tl, tr, args.alpha, args.q)
    if args.json:
        print(json.dumps(data, ensure_ascii=False, indent=2))
    else:
        for key, value in data.items():
            print(f"{key}: {value}")
    return EXIT_OK


COMMANDS = {
    "partitions": cmd_partitions,
    "stats": cmd_stats,
    "moment": cmd_moment,
    "wick": cmd_wick,
    "symmetrizer": cmd_symmetrizer,
    "measure": cmd_measure,
    "norms": cmd_norms,
}


# ============================================================================
# Парсер
# ============================================================================

def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="typeb_cli.py",
        description="Двойное пространство Фока типа B: разбиения, моменты, проверки, мера",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Примеры использования:

1. Разбиения типа B с таблицей статистик:
   python typeb_cli.py partitions --n 2 --class B --stats

2. Статистики одного разбиения:
   python typeb_cli.py stats "{(-4,1),(-1,4),(-3,-2),(2,3)}"

3. Дефект следа (разность двух моментов):
   python typeb_cli.py moment problems/trace_defect_forward.json \\
       --minus problems/trace_defect_cyclic.json --method combinatorial

4. Сверка формулы с оракулом на случайной задаче:
   python typeb_cli.py moment --random 3,2 --seed 7

5. Формула Вика:
   python typeb_cli.py wick --eps create,gauge,act --random 2

6. Плотность меры в CSV:
   python typeb_cli.py measure --alpha 0.5 --q 0 --grid 400 --out measure.csv

7. Сумма по разбиениям в 4 процессах (вывод тот же, что и с одним):
   python typeb_cli.py --workers 4 moment --random 5,2 --method combinatorial
        """,
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("--json", action="store_true", help="Машиночитаемый вывод JSON")
    parser.add_argument("--verbose", "-v", action="store_true", help="Подробный лог (DEBUG)")
    parser.add_argument("--quiet", action="store_true", help="Только результат, без сообщений")
    parser.add_argument("--timing", action="store_true", help="Добавить время выполнения (seconds) в JSON-отчет")
    parser.add_argument("--workers", type=int,
                        help="Число процессов для суммы по разбиениям (вывод не зависит от значения)")
    parser.add_argument("--partition-cap", type=int, help="Лимит n для перечисления разбиений")
    parser.add_argument("--wick-cap", type=int, help="Лимит n для формулы Вика")

    subparsers = parser.add_subparsers(dest="command", help="Команда для выполнения")

    # Команда: partitions
    p = subparsers.add_parser("partitions", help="Перечислить разбиения класса")
    p.add_argument("--n", type=int, required=True, help="Размер n (разбиения ±[n])")
    p.add_argument("--class", dest="cls", default="B",
                   help="Класс: " + ", ".join(c.value for c in PartitionClass))
    p.add_argument("--stats", action="store_true", help="Добавить столбцы na, rc, cs")

    # Команда: stats
    p = subparsers.add_parser("stats", help="Статистики разбиения")
    p.add_argument("partition", help='Каноническая запись, например "{(-2,1),(-1,2)}"')
    p.add_argument("--extended-minmax", action="store_true",
                   help="Считать разбиение расширенным и вывести minmax")

    # Команда: moment
    p = subparsers.add_parser("moment", help="Смешанный момент операторов Пуассона")
    p.add_argument("file", nargs="?", help="JSON файл задачи")
    p.add_argument("--method", choices=[m.value for m in MomentMethod], default="both")
    p.add_argument("--minus", help="Вычесть момент второй задачи")
    p.add_argument("--specialize", help="Подставить 'alpha,q' (рациональные)")
    p.add_argument("--terms", action="store_true", help="Разложение по разбиениям")
    p.add_argument("--random", help="Случайная задача 'N,D'")
    p.add_argument("--seed", type=int, help="Seed случайной задачи")

    # Команда: wick
    p = subparsers.add_parser("wick", help="Формула Вика против прямого вычисления")
    p.add_argument("file", nargs="?", help="JSON файл задачи")
    p.add_argument("--eps", required=True, help="Слово справа налево: create,gauge,act (или *,E,1)")
    p.add_argument("--random", help="Случайная задача размерности D")
    p.add_argument("--seed", type=int, help="Seed случайной задачи")

    # Команда: symmetrizer
    p = subparsers.add_parser("symmetrizer", help="Спектр и разложение симметризатора")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=int, default=2)
    p.add_argument("--alpha", type=float, required=True)
    p.add_argument("--q", type=float, required=True)
    p.add_argument("--decomposition", action="store_true",
                   help="Точная проверка P^(n) = (I⊗P^(n-1)⊗I)R^(n) и замкнутых форм")
    p.add_argument("--seed", type=int, help="Seed случайных x, y, T для замкнутых форм")

    # Команда: measure
    p = subparsers.add_parser("measure", help="Плотность меры на сетке (CSV)")
    p.add_argument("--alpha", type=float, required=True)
    p.add_argument("--q", type=float, default=0.0)
    p.add_argument("--grid", type=int, default=400, help="Число точек сетки")
    p.add_argument("--eps", type=float, help="Отступ eps для обращения Стилтьеса")
    p.add_argument("--depth", type=int, help="Глубина цепной дроби")
    p.add_argument("--out", "-o", help="Файл CSV (по умолчанию stdout)")

    # Команда: norms
    p = subparsers.add_parser("norms", help="Усеченные нормы операторов")
    p.add_argument("--alpha", type=float, required=True)
    p.add_argument("--q", type=float, required=True)
    p.add_argument("--x", required=True, help="Вектор x: '1,0'")
    p.add_argument("--y", required=True, help="Вектор y: '0,1'")
    p.add_argument("--max-level", type=int, default=4)
    p.add_argument("--gauge", action="store_true", help="Добавить норму калибровки")
    p.add_argument("--t-left", help="Матрица T̄: '1,0;0,1' (по умолчанию единичная)")
    p.add_argument("--t-right", help="Матрица T: '1,0;0,1' (по умолчанию единичная)")

    return parser


def _configure_logging(args) -> None:
    level = logging.DEBUG if args.verbose else logging.WARNING if args.quiet else logging.INFO
    logging.basicConfig(level=level, format="%(levelname)s %(name)s: %(message)s", stream=sys.stderr)


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Главная функция CLI; возвращает код выхода"""
    parser = build_parser()
    args = parser.parse_args(argv)
    if not args.command:
        parser.print_help()
        return EXIT_ERROR

    _configure_logging(args)
    config = EngineConfig.from_env().with_overrides(
        partition_cap=args.partition_cap,
        wick_cap=args.wick_cap,
        workers=args.workers,
    )
    if getattr(args, "seed", "absent") is None:
        args.seed = config.seed
    if config.workers < 1:
        print(f"❌ Ошибка аргументов: --workers должно быть >= 1, получено {config.workers}", file=sys.stderr)
        return EXIT_ERROR

    try:
        return COMMANDS[args.command](args, config)
    except UsageError as e:
        print(f"❌ Ошибка аргументов: {e}", file=sys.stderr)
        return EXIT_ERROR
    except TypeBError as e:
        print(f"❌ ОШИБКА: {e}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
