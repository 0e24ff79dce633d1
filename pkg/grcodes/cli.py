"""
Command line front end.

Exit codes: 0 on success, 1 when a search or verification does not match
its expected values, 2 on usage and input errors.
"""
import argparse
import dataclasses
import json
import logging
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional, Sequence

from grcodes import codes, config, displayed, reports, search, suites
from grcodes.exceptions import GrcodesError
from grcodes.groupring import GroupRingElement, parse_element
from grcodes.groups import FiniteGroup, parse_group
from grcodes.rings import RingSpec

logger = logging.getLogger(__name__)

OK = 0
MISMATCH = 1
USAGE = 2

TEXT = 'text'
JSON = 'json'


@dataclass(frozen=True)
class CliConfig:
    """ Parsed command line; descriptors are read before any computation."""
    command: str
    format: str
    output: Optional[Path]
    ring: Optional[RingSpec] = None
    group: Optional[FiniteGroup] = None
    group_descriptor: Optional[str] = None
    element: Optional[GroupRingElement] = None

    @classmethod
    def from_args(cls, args: argparse.Namespace) -> 'CliConfig':
        result = cls(args.command, args.format, args.output)
        if getattr(args, 'element', None) is None:
            return result
        ring = RingSpec.parse(args.ring)
        group = parse_group(args.group)
        element = parse_element(args.element, ring, group)
        return dataclasses.replace(result, ring=ring, group=group,
                                   group_descriptor=args.group,
                                   element=element)

    @property
    def code(self) -> codes.LinearCode:
        if self.element is None:
            raise GrcodesError(f'{self.command} needs an element')
        return codes.code_from_element(self.element)


def emit(cfg: CliConfig, document: Dict[str, Any]) -> None:
    reports.validate_report(document)
    if cfg.format == JSON:
        text = json.dumps(document, indent=2)
    else:
        text = reports.render_text(document)
    if cfg.output is None:
        print(text)
    else:
        cfg.output.write_text(text + '\n')
        logger.info('report written to %s', cfg.output)


def cmd_construct(cfg: CliConfig, args: argparse.Namespace) -> int:
    emit(cfg, reports.code_report(cfg.code, 'C(v)', cfg.element,
                                  cfg.group_descriptor, args.matrix))
    return OK


def cmd_gray(cfg: CliConfig, args: argparse.Namespace) -> int:
    assert cfg.ring is not None
    if cfg.ring.is_binary:
        raise GrcodesError('the Gray image needs a ring r<k> with k >= 1')
    image = codes.gray_image(cfg.code)
    emit(cfg, reports.code_report(image, 'Gray image of C(v)', cfg.element,
                                  cfg.group_descriptor, args.matrix))
    return OK


def cmd_dual(cfg: CliConfig, args: argparse.Namespace) -> int:
    emit(cfg, reports.code_report(codes.dual(cfg.code), 'dual of C(v)',
                                  cfg.element, cfg.group_descriptor,
                                  args.matrix))
    return OK


def cmd_enum(cfg: CliConfig, args: argparse.Namespace) -> int:
    emit(cfg, reports.enumerator_report(cfg.code, args.kind, cfg.element,
                                        cfg.group_descriptor))
    return OK


def read_pattern(path: str) -> search.SearchSpec:
    try:
        with open(path) as f:
            document = json.load(f)
    except (OSError, ValueError) as e:
        raise GrcodesError(f'cannot read pattern {path}: {e}') from None
    return search.load_pattern(document)


def cmd_search(cfg: CliConfig, args: argparse.Namespace) -> int:
    if args.pattern is not None:
        spec = read_pattern(args.pattern)
    else:
        spec = search.builtin_search(args.name)
    changes: Dict[str, Any] = {}
    if args.witnesses is not None:
        changes['witnesses'] = args.witnesses
    if args.limit is not None:
        changes['limit'] = args.limit
    if changes:
        spec = dataclasses.replace(spec, **changes)
    report = search.run_search(spec, args.workers, args.progress)
    emit(cfg, reports.search_report_document(report))
    return MISMATCH if report.expected_mismatches() else OK


def cmd_verify(cfg: CliConfig, args: argparse.Namespace) -> int:
    matrices: List[str] = list(args.matrix or ())
    names: List[str] = list(args.suite or ())
    if args.all or not (matrices or names):
        matrices = displayed.displayed_names()
        names = suites.suite_names()
    checks = [displayed.verify_displayed(m) for m in matrices]
    results = suites.run_suites(names, args.seed, args.trials)
    document = reports.verify_report(checks, results, args.seed)
    emit(cfg, document)
    return OK if document["passed"] else MISMATCH


COMMANDS: Dict[str, Callable[[CliConfig, argparse.Namespace], int]] = {
    'construct': cmd_construct,
    'gray': cmd_gray,
    'dual': cmd_dual,
    'enum': cmd_enum,
    'search': cmd_search,
    'verify': cmd_verify,
}


def add_code_arguments(parser: argparse.ArgumentParser,
                       matrix: bool = True) -> None:
    parser.add_argument('--ring', default='f2', help='f2 or r<k>')
    parser.add_argument('--group', required=True,
                        help='built-in name, product such as '
                             '"c3 x d8 @csd", or a .json Cayley table')
    parser.add_argument('--element', required=True,
                        help='group ring element, e.g. "1 + b*a + b*a^2"')
    if matrix:
        parser.add_argument('--matrix', action='store_true',
                            help='include the binary generator rows')


def positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f'{text} is not positive')
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog='grcodes',
        description='Codes from group rings over F2 and R_k.')
    parser.add_argument('-v', '--verbose', action='count', default=0,
                        help='-v for progress messages, -vv for debugging')
    parser.add_argument('--format', choices=(TEXT, JSON), default=TEXT)
    parser.add_argument('-o', '--output', type=Path,
                        help='write the report to a file')
    commands = parser.add_subparsers(dest='command', required=True)

    add_code_arguments(commands.add_parser(
        'construct', help='code generated by sigma(v)'))
    add_code_arguments(commands.add_parser(
        'gray', help='binary Gray image of C(v)'))
    add_code_arguments(commands.add_parser('dual', help='dual of C(v)'))
    enum = commands.add_parser('enum', help='weight enumerator of C(v)')
    add_code_arguments(enum, matrix=False)
    enum.add_argument('--kind', choices=codes.KINDS, default=codes.HAMMING)

    scan = commands.add_parser('search', help='exhaustive candidate scan')
    source = scan.add_mutually_exclusive_group(required=True)
    source.add_argument('--name', choices=search.builtin_names())
    source.add_argument('--pattern', help='JSON pattern file')
    scan.add_argument('--workers', type=positive,
                      help=f'process count, default ${config.WORKERS_ENV} '
                           f'or 1')
    scan.add_argument('--witnesses', type=int)
    scan.add_argument('--limit', type=positive,
                      help='scan only the first LIMIT candidates')
    scan.add_argument('--progress', action='store_true')

    verify = commands.add_parser(
        'verify', help='displayed matrices and property suites')
    verify.add_argument('--all', action='store_true')
    verify.add_argument('--matrix', action='append',
                        choices=displayed.displayed_names())
    verify.add_argument('--suite', action='append',
                        choices=suites.suite_names())
    verify.add_argument('--seed', type=int, default=config.DEFAULT_SEED)
    verify.add_argument('--trials', type=positive,
                        help='trials per suite instead of the defaults')
    return parser


def configure_logging(verbosity: int) -> None:
    level = (logging.WARNING, logging.INFO, logging.DEBUG)[min(verbosity, 2)]
    logging.basicConfig(level=level,
                        format='%(levelname)s %(name)s: %(message)s')


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    configure_logging(args.verbose)
    try:
        cfg = CliConfig.from_args(args)
        return COMMANDS[args.command](cfg, args)
    except GrcodesError as e:
        print(f'error: {e}', file=sys.stderr)
        return USAGE
