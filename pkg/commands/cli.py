"""
Command-line interface
"""

import argparse
import asyncio
import json
import logging
import sys
from typing import Dict, List, Optional, TextIO

from config import get_settings
from core.edge_list import parse_edge_list, serialize_edge_list
from core.errors import InvalidInputError, PidomError
from core.generators import generate
from core.graph import Graph
from core.labeling import Labeling, violations
from models import ConstructionKind, ConstructionSpec, DominationVariant, FamilySpec, GadgetLayout, SearchOrder
from systems.families import pid_formula, pid_witness
from systems.ledger import ResultsLedger
from systems.realize import build, plan_roman_vs_pid
from systems.solver import enumerate_optima, profile, solve
from utils.solve_monitor import solve_monitor

from .table import SWEEPS, run_sweep, sweep_passed

logger = logging.getLogger(__name__)

SCHEMA_VERSION = 1
EXIT_OK = 0
EXIT_CHECK_FAILED = 4

FAMILIES = ('path', 'cycle', 'complete', 'empty', 'star', 'multipartite', 'ladder', 'rook')


class CliArgumentParser(argparse.ArgumentParser):
    """ArgumentParser whose usage errors surface as InvalidInputError"""

    def error(self, message):
        raise InvalidInputError(message)


def _variant(text: str) -> DominationVariant:
    return DominationVariant.parse(text)


def _add_graph_source(parser: argparse.ArgumentParser):
    parser.add_argument('graph', nargs='?', default='-', help="edge-list file, or '-' for standard input")
    parser.add_argument('--spec', help="family spec such as 'path:6' or 'path:2*cycle:4'")


def _add_family_source(parser: argparse.ArgumentParser):
    parser.add_argument('--spec', help="family spec such as 'multipartite:3,3,4'")
    parser.add_argument('--family', choices=FAMILIES)
    parser.add_argument('--n', type=int)
    parser.add_argument('--m', type=int)
    parser.add_argument('--parts', help="comma-separated part sizes for multipartite")


def _add_construction_source(parser: argparse.ArgumentParser, required: bool):
    parser.add_argument('--a', type=int, required=required)
    parser.add_argument('--b', type=int, required=required)
    parser.add_argument('--induced', action='store_true', help="PID(G) = a with induced H, PID(H) = b")
    parser.add_argument('--p', type=int)
    parser.add_argument(
        '--layout', choices=[layout.value for layout in GadgetLayout], default=GadgetLayout.CORRECTED.value
    )


def _add_format(parser: argparse.ArgumentParser):
    parser.add_argument('--format', choices=('text', 'json'), default='text')


def build_parser() -> argparse.ArgumentParser:
    parser = CliArgumentParser(prog='pidom', description="Perfect Italian domination toolkit")
    commands = parser.add_subparsers(dest='command', required=True)

    solve_parser = commands.add_parser('solve', help="exact optimum and witness")
    _add_graph_source(solve_parser)
    solve_parser.add_argument('--variant', type=_variant, default=DominationVariant.PERFECT_ITALIAN)
    _add_format(solve_parser)
    solve_parser.add_argument('--order', choices=[o.value for o in SearchOrder], default=SearchOrder.IDENTITY.value)
    solve_parser.add_argument('--all', action='store_true', help="list every optimal labeling")
    solve_parser.add_argument('--cap', type=int)
    solve_parser.add_argument('--max-vertices', type=int)
    solve_parser.add_argument('--force', action='store_true', help="search above the vertex guard")
    solve_parser.add_argument('--stats', action='store_true', help="print solver statistics to stderr")

    verify_parser = commands.add_parser('verify', help="check a labeling")
    _add_graph_source(verify_parser)
    verify_parser.add_argument('--labeling', required=True, help="comma-separated labels in vertex order")
    verify_parser.add_argument('--variant', type=_variant, default=DominationVariant.PERFECT_ITALIAN)

    generate_parser = commands.add_parser(
        'generate', help="edge list of a family member, or of a gadget when --a and --b are given"
    )
    _add_family_source(generate_parser)
    _add_construction_source(generate_parser, required=False)

    formula_parser = commands.add_parser('formula', help="closed-form PID number")
    _add_family_source(formula_parser)
    formula_parser.add_argument('--witness', action='store_true')
    _add_format(formula_parser)

    realize_parser = commands.add_parser('realize', help="gadget graph for a pair of values")
    _add_construction_source(realize_parser, required=True)

    profile_parser = commands.add_parser('profile', help="all four domination numbers")
    _add_graph_source(profile_parser)
    _add_format(profile_parser)
    profile_parser.add_argument('--max-vertices', type=int)
    profile_parser.add_argument('--force', action='store_true')

    table_parser = commands.add_parser('table', help="formula versus solver sweep")
    table_parser.add_argument('sweep', choices=sorted(SWEEPS))
    table_parser.add_argument('--max', type=int, dest='maximum')
    table_parser.add_argument('--csv', help="also write the table to this CSV file")
    table_parser.add_argument('--record', action='store_true', help="store the run in the results ledger")
    table_parser.add_argument('--db')

    history_parser = commands.add_parser('history', help="recorded sweep runs")
    history_parser.add_argument('--limit', type=int, default=20)
    history_parser.add_argument('--db')
    return parser


def _load_graph(args, stdin: TextIO) -> Graph:
    if args.spec:
        return generate(FamilySpec.parse(args.spec))
    if args.graph == '-':
        return parse_edge_list(stdin.read())
    try:
        with open(args.graph, encoding='utf-8') as handle:
            return parse_edge_list(handle.read())
    except OSError as e:
        raise InvalidInputError(f"cannot read graph file '{args.graph}': {e}") from None


def _family_spec(args) -> FamilySpec:
    if args.spec:
        return FamilySpec.parse(args.spec)
    if not args.family:
        raise InvalidInputError("give either --spec or --family")
    family = args.family
    if family == 'multipartite':
        if not args.parts:
            raise InvalidInputError("--family multipartite needs --parts")
        try:
            parts = [int(tok) for tok in args.parts.split(',') if tok.strip()]
        except ValueError:
            raise InvalidInputError(f"cannot parse --parts '{args.parts}'") from None
        return FamilySpec.multipartite(parts)
    if args.n is None:
        raise InvalidInputError(f"--family {family} needs --n")
    if family == 'rook':
        if args.m is None:
            raise InvalidInputError("--family rook needs --m and --n")
        return FamilySpec.rook(args.m, args.n)
    if family == 'ladder':
        return FamilySpec.ladder(args.n)
    return getattr(FamilySpec, family)(args.n)


def _construction_spec(args) -> ConstructionSpec:
    if args.a is None or args.b is None:
        raise InvalidInputError("a construction needs both --a and --b")
    if args.induced:
        return ConstructionSpec(ConstructionKind.INDUCED_PAIR, args.a, args.b)
    return plan_roman_vs_pid(args.a, args.b, p=args.p, layout=GadgetLayout(args.layout))


def _emit_json(stdout: TextIO, payload: Dict):
    stdout.write(json.dumps({'schema': SCHEMA_VERSION, **payload}) + "\n")


def _cmd_solve(args, stdin, stdout, stderr) -> int:
    graph = _load_graph(args, stdin)
    variant = args.variant
    result = solve(
        graph, variant, order=SearchOrder(args.order), max_vertices=args.max_vertices, force=args.force
    )
    payload = {
        'variant': variant.value,
        'optimum': result.optimum,
        'witness': list(result.witness.values),
        'nodes_explored': result.nodes_explored,
    }
    optima = None
    if args.all:
        optima = enumerate_optima(
            graph, variant, cap=args.cap, optimum=result.optimum, max_vertices=args.max_vertices, force=args.force
        )
        payload['optima'] = [list(labeling.values) for labeling in optima.labelings]
        payload['truncated'] = optima.truncated

    if args.format == 'json':
        _emit_json(stdout, payload)
    else:
        stdout.write(f"variant={variant.value} optimum={result.optimum}\n")
        stdout.write(f"witness={result.witness.format()}\n")
        if optima is not None:
            stdout.write(f"optima={len(optima.labelings)} truncated={str(optima.truncated).lower()}\n")
            for labeling in optima.labelings:
                stdout.write(labeling.format() + "\n")
    if args.stats:
        stderr.write(solve_monitor.format_report() + "\n")
    return EXIT_OK


def _cmd_verify(args, stdin, stdout, stderr) -> int:
    graph = _load_graph(args, stdin)
    labeling = Labeling.parse(args.labeling)
    found = violations(graph, labeling, args.variant)
    if not found:
        stdout.write("VALID\n")
        return EXIT_OK
    stdout.write("INVALID\n")
    for violation in found:
        stdout.write(f"vertex={violation.vertex} neighbor_sum={violation.neighbor_sum}\n")
    return EXIT_CHECK_FAILED


def _cmd_generate(args, stdin, stdout, stderr) -> int:
    if args.a is not None or args.b is not None:
        if args.spec or args.family:
            raise InvalidInputError("give either a family or --a/--b, not both")
        graph = build(_construction_spec(args)).graph
    else:
        graph = generate(_family_spec(args))
    stdout.write(serialize_edge_list(graph, with_names=graph.names is not None))
    return EXIT_OK


def _cmd_formula(args, stdin, stdout, stderr) -> int:
    spec = _family_spec(args)
    result = pid_formula(spec)
    witness = pid_witness(spec) if args.witness else None
    if args.format == 'json':
        payload = {'family': spec.describe(), 'value': result.value, 'source': result.source}
        if witness is not None:
            payload['witness'] = list(witness.values)
        _emit_json(stdout, payload)
    else:
        stdout.write(f"value={result.value} source={result.source}\n")
        if witness is not None:
            stdout.write(f"witness={witness.format()}\n")
    return EXIT_OK


def _cmd_realize(args, stdin, stdout, stderr) -> int:
    spec = _construction_spec(args)
    realization = build(spec)
    stdout.write(f"# construction {spec.describe()}\n")
    if realization.h_vertices is not None:
        stdout.write("# induced " + ",".join(str(v) for v in realization.h_vertices) + "\n")
    stdout.write(serialize_edge_list(realization.graph, with_names=True))
    return EXIT_OK


def _cmd_profile(args, stdin, stdout, stderr) -> int:
    graph = _load_graph(args, stdin)
    result = profile(graph, max_vertices=args.max_vertices, force=args.force)
    holds = result.chain_holds and result.roman_bound_holds
    if args.format == 'json':
        _emit_json(stdout, {**result.as_dict(), 'chain': holds})
    else:
        for name, value in result.as_dict().items():
            stdout.write(f"{name}={value}\n")
        stdout.write(f"chain={'ok' if holds else 'broken'}\n")
    return EXIT_OK if holds else EXIT_CHECK_FAILED


def _cmd_table(args, stdin, stdout, stderr) -> int:
    frame = run_sweep(args.sweep, args.maximum)
    stdout.write(frame.to_string(index=False) + "\n")
    if args.csv:
        try:
            frame.to_csv(args.csv, index=False)
        except OSError as e:
            raise InvalidInputError(f"cannot write CSV '{args.csv}': {e}") from None
    if args.record:
        ledger = ResultsLedger(args.db or get_settings().db_path)
        parameters = {'max': args.maximum if args.maximum is not None else SWEEPS[args.sweep].default_max}

        async def record():
            await ledger.setup()
            return await ledger.record_sweep(args.sweep, parameters, frame)

        run_id = asyncio.run(record())
        stderr.write(f"recorded run {run_id}\n")
    return EXIT_OK if sweep_passed(frame) else EXIT_CHECK_FAILED


def _cmd_history(args, stdin, stdout, stderr) -> int:
    ledger = ResultsLedger(args.db or get_settings().db_path)

    async def fetch():
        await ledger.setup()
        return await ledger.list_runs(args.limit)

    for run in asyncio.run(fetch()):
        status = 'PASS' if run.passed else 'FAIL'
        stdout.write(
            f"run={run.run_id} sweep={run.sweep} rows={run.row_count} status={status} "
            f"started={run.started_at} parameters={run.parameters}\n"
        )
    return EXIT_OK


HANDLERS = {
    'solve': _cmd_solve,
    'verify': _cmd_verify,
    'generate': _cmd_generate,
    'formula': _cmd_formula,
    'realize': _cmd_realize,
    'profile': _cmd_profile,
    'table': _cmd_table,
    'history': _cmd_history,
}


def run(
    argv: Optional[List[str]] = None,
    stdin: Optional[TextIO] = None,
    stdout: Optional[TextIO] = None,
    stderr: Optional[TextIO] = None,
) -> int:
    """Run one command and return its exit code"""
    stdin = stdin or sys.stdin
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        return HANDLERS[args.command](args, stdin, stdout, stderr)
    except PidomError as e:
        logger.debug(f"Command failed with exit code {e.exit_code}: {e}")
        stderr.write(f"error: {e}\n")
        return e.exit_code
    except SystemExit as e:
        # --help
        return e.code if isinstance(e.code, int) else EXIT_OK
