import argparse
import json
import logging
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional

import yaml

from src.config.config_loader import ConfigLoader
from src.config.kinds import ExperimentKind
from src.ends.classifier import check_irs_admissible, classify
from src.ends.descriptor import EndsDescriptor
from src.ends.exhaustion import DEFAULT_STABILITY_WINDOW, ExhaustionTree, descriptor_from_exhaustion
from src.errors import BelyiLabError, InvalidArgumentError, NotAdmissibleError
from src.factories.service import ServiceFactory
from src.holonomy.geodesics import enumerate_geodesics, geodesic_rows
from src.output.result_writer import ResultWriter, config_hash
from src.ribbon.ribbon_graph import RibbonGraph, count_circuits, sample_configuration, surface_invariants
from src.spectral.reference import h2_heat_trace_table, lambda_exceptional, middle_betti_limit
from src.unimodular.mtp import mtp_check, rooted_measure_from_dict
from src.unimodular.transports import TRANSPORTS, get_transport

logger = logging.getLogger('belyi-lab')

EXIT_OK = 0
EXIT_RUNTIME = 1
EXIT_USAGE = 2
EXIT_IO = 3
EXIT_PARSE = 4

DEFAULT_HEAT_TIMES = [0.001, 0.01, 0.1, 1.0, 10.0]


def _read_json(path: str) -> Dict[str, Any]:
    with open(path, 'r', encoding='utf-8') as f:
        return json.load(f)


def _read_graph(path: str) -> RibbonGraph:
    return RibbonGraph.from_dict(_read_json(path))


def _budget(args: argparse.Namespace) -> int:
    if args.max_walks is not None:
        if args.max_walks < 1:
            raise InvalidArgumentError(f"--max-walks must be positive, got {args.max_walks}")
        return args.max_walks
    return ConfigLoader.default_max_walks()


def cmd_sample(args: argparse.Namespace) -> int:
    g = sample_configuration(args.n, args.seed)
    writer = ResultWriter(config_hash({"command": "sample", "n": args.n, "seed": args.seed}),
                          seed=args.seed, command="sample")
    writer.write_json(g.to_dict(), args.out)
    return EXIT_OK


def cmd_invariants(args: argparse.Namespace) -> int:
    g = _read_graph(args.input)
    writer = ResultWriter(config_hash({"command": "invariants", "graph": g.to_dict()}), command="invariants")
    writer.write_json(surface_invariants(g).to_dict(), args.out)
    return EXIT_OK


def cmd_geodesics(args: argparse.Namespace) -> int:
    g = _read_graph(args.input)
    geodesics = enumerate_geodesics(g, args.R, _budget(args))
    writer = ResultWriter(config_hash({"command": "geodesics", "R": args.R, "graph": g.to_dict()}),
                          command="geodesics")
    writer.write_csv(geodesic_rows(geodesics), args.out, columns=["word", "trace", "length"])
    return EXIT_OK


def cmd_circuits(args: argparse.Namespace) -> int:
    g = _read_graph(args.input)
    counts = count_circuits(g, args.k_max, _budget(args))
    writer = ResultWriter(config_hash({"command": "circuits", "k_max": args.k_max, "graph": g.to_dict()}),
                          command="circuits")
    writer.write_json({str(k): v for k, v in counts.items()}, args.out)
    return EXIT_OK


def _table_path(out: Optional[str], name: str, multiple: bool, suffix: str) -> Optional[str]:
    if out is None or not multiple:
        return out
    path = Path(out)
    return str(path.with_name(f"{path.stem}.{name}{suffix}"))


def cmd_experiment(args: argparse.Namespace) -> int:
    kind = ExperimentKind.from_string(args.kind)
    config = ConfigLoader.load_config(args.config, seed_override=args.seed)
    if args.workers is not None:
        if args.workers < 1:
            raise InvalidArgumentError(f"--workers must be positive, got {args.workers}")
        config.workers = args.workers
    if args.no_progress:
        config.experiment.progress = False

    service = ServiceFactory.create_experiment_service(config, kind)
    result = service.run()
    if not result["success"]:
        logger.error(f"Experiment failed: {result['error']}")
        return EXIT_RUNTIME

    writer = ResultWriter(result["config_hash"], seed=result["seed"], command=f"experiment {kind.value}")
    tables = result["tables"]
    multiple = len(tables) + (1 if result["payload"] is not None else 0) > 1
    for name, records in tables.items():
        writer.write_csv(records, _table_path(args.out, name, multiple, '.csv'))
    if result["payload"] is not None:
        writer.write_json(result["payload"], _table_path(args.out, "report", multiple, '.json'))
    return EXIT_OK


def cmd_classify_ends(args: argparse.Namespace) -> int:
    data = _read_json(args.input)
    stable = None
    if 'noncusp_ends' in data:
        descriptor = EndsDescriptor.from_dict(data)
    else:
        tree = ExhaustionTree.from_dict(data)
        exhaustion = descriptor_from_exhaustion(tree, args.depth or tree.height, args.window)
        descriptor, stable = exhaustion.descriptor, exhaustion.stable

    report = check_irs_admissible(descriptor)
    output: Dict[str, Any] = {
        "descriptor": descriptor.to_dict(),
        "stable": stable,
        "violations": report.violations,
        "notes": report.notes,
        "type": None,
        "realizable": None,
    }
    if report.admissible:
        if stable is False:
            output["notes"].append("end invariants not stable at this depth; type not reported")
        else:
            surface = classify(descriptor)
            output["type"] = surface.name
            output["realizable"] = surface.realizable
    writer = ResultWriter(config_hash({"command": "classify-ends", "input": data}), command="classify-ends")
    writer.write_json(output, args.out)
    return EXIT_OK


def cmd_mtp_check(args: argparse.Namespace) -> int:
    data = _read_json(args.input)
    measure = rooted_measure_from_dict(data)
    report = mtp_check(measure, get_transport(args.transport))
    writer = ResultWriter(config_hash({"command": "mtp-check", "transport": args.transport, "input": data}),
                          command="mtp-check")
    writer.write_json({"transport": args.transport, **report.to_dict()}, args.out)
    return EXIT_OK


def cmd_reference(args: argparse.Namespace) -> int:
    times = args.t or DEFAULT_HEAT_TIMES
    data = {
        "lambda_exceptional": {"d": args.d, "p": args.p, "value": lambda_exceptional(args.d, args.p)},
        "middle_betti_limit": {str(two_m): middle_betti_limit(two_m) for two_m in (2, 4, 6, 8)},
        "h2_heat_trace": [vars(row) for row in h2_heat_trace_table(times)],
    }
    writer = ResultWriter(config_hash({"command": "reference", "d": args.d, "p": args.p, "t": times}),
                          command="reference")
    writer.write_json(data, args.out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog='belyi-lab', description="Random Belyi surfaces laboratory")
    parser.add_argument('--verbose', action='store_true', help="debug logging")
    sub = parser.add_subparsers(dest='command', required=True)

    p = sub.add_parser('sample', help="sample a ribbon graph from the configuration model")
    p.add_argument('--n', type=int, required=True)
    p.add_argument('--seed', type=int, default=0)
    p.add_argument('--out')
    p.set_defaults(handler=cmd_sample)

    p = sub.add_parser('invariants', help="genus, cusps and volumes of a ribbon graph surface")
    p.add_argument('input')
    p.add_argument('--out')
    p.set_defaults(handler=cmd_invariants)

    p = sub.add_parser('geodesics', help="closed geodesics of length <= R as CSV")
    p.add_argument('input')
    p.add_argument('--R', type=float, required=True)
    p.add_argument('--max-walks', type=int)
    p.add_argument('--out')
    p.set_defaults(handler=cmd_geodesics)

    p = sub.add_parser('circuits', help="number of circuits of each length")
    p.add_argument('input')
    p.add_argument('--k-max', type=int, default=4)
    p.add_argument('--max-walks', type=int)
    p.add_argument('--out')
    p.set_defaults(handler=cmd_circuits)

    p = sub.add_parser('experiment', help="run a Monte Carlo experiment from a config file")
    p.add_argument('--kind', default=ExperimentKind.get_default().value,
                   help=f"one of {', '.join(ExperimentKind.supported_kinds())}")
    p.add_argument('--config', required=True)
    p.add_argument('--seed', type=int)
    p.add_argument('--workers', type=int)
    p.add_argument('--no-progress', action='store_true')
    p.add_argument('--out')
    p.set_defaults(handler=cmd_experiment)

    p = sub.add_parser('classify-ends', help="classify a surface from an ends descriptor or an exhaustion tree")
    p.add_argument('input')
    p.add_argument('--depth', type=int)
    p.add_argument('--window', type=int, default=DEFAULT_STABILITY_WINDOW)
    p.add_argument('--out')
    p.set_defaults(handler=cmd_classify_ends)

    p = sub.add_parser('mtp-check', help="mass transport check on a rooted graph measure")
    p.add_argument('input')
    p.add_argument('--transport', required=True, choices=sorted(TRANSPORTS))
    p.add_argument('--out')
    p.set_defaults(handler=cmd_mtp_check)

    p = sub.add_parser('reference', help="reference spectral quantities")
    p.add_argument('--d', type=int, default=2)
    p.add_argument('--p', type=int, default=0)
    p.add_argument('--t', type=float, nargs='+')
    p.add_argument('--out')
    p.set_defaults(handler=cmd_reference)
    return parser


def _fail(code: int, message: str) -> int:
    logger.error(message)
    return code


def main(argv: Optional[List[str]] = None) -> int:
    """Entry point; returns the process exit code"""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_USAGE
    if args.verbose:
        logging.getLogger('belyi-lab').setLevel(logging.DEBUG)

    handler: Callable[[argparse.Namespace], int] = args.handler
    try:
        return handler(args)
    except (json.JSONDecodeError, yaml.YAMLError) as e:
        return _fail(EXIT_PARSE, f"Parse error: {e}")
    except InvalidArgumentError as e:
        return _fail(EXIT_USAGE, f"Invalid argument: {e}")
    except OSError as e:
        return _fail(EXIT_IO, f"I/O error: {e}")
    except NotAdmissibleError as e:
        return _fail(EXIT_RUNTIME, f"Not admissible: {e}")
    except BelyiLabError as e:
        return _fail(EXIT_RUNTIME, str(e))
    except Exception:
        logger.exception(f"Unexpected failure in '{args.command}'")
        return EXIT_RUNTIME
