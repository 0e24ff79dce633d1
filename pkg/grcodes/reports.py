"""
Report documents for codes, enumerators, searches and verification runs.

Documents are plain dicts validated against the schemas below; the text
renderers read the same dicts, so both output formats carry one set of
numbers.
"""
import logging
from typing import Any, Callable, Dict, List, Optional, Sequence

import jsonschema

from grcodes import codes
from grcodes.displayed import DisplayedCheck
from grcodes.exceptions import GrcodesError
from grcodes.groupring import GroupRingElement
from grcodes.schemas import get_schema
from grcodes.search import SearchReport
from grcodes.suites import SuiteResult

logger = logging.getLogger(__name__)

CODE = 'code'
ENUMERATOR = 'enumerator'
SEARCH = 'search'
VERIFY = 'verify'

NULLABLE_INT = {"type": ["integer", "null"], "nullable": True}
NULLABLE_STR = {"type": ["string", "null"], "nullable": True}
NULLABLE_BOOL = {"type": ["boolean", "null"], "nullable": True}
PAIR = {"type": "array", "items": {}, "minItems": 2, "maxItems": 2}
PAIRS = {"type": "array", "items": PAIR, "minItems": 0}
STRINGS = {"type": "array", "items": {"type": "string"}, "minItems": 0}


def report_tag(name: str) -> Dict[str, Any]:
    return {"type": "string", "enum": [name]}


CODE_REPORT_SCHEMA = get_schema({
    "report": report_tag(CODE),
    "code": str,
    "ring": str,
    "group": NULLABLE_STR,
    "element": NULLABLE_STR,
    "length": int,
    "rank": int,
    "hamming_distance": NULLABLE_INT,
    "lee_distance": NULLABLE_INT,
    "self_orthogonal": bool,
    "self_dual": bool,
    "formally_self_dual": bool,
    "type_ii": NULLABLE_BOOL,
    "shape": NULLABLE_STR,
    "enumerator": PAIRS,
    "matrix": {"type": ["array", "null"], "items": {"type": "string"},
               "nullable": True},
})

ENUMERATOR_REPORT_SCHEMA = get_schema({
    "report": report_tag(ENUMERATOR),
    "ring": str,
    "group": NULLABLE_STR,
    "element": NULLABLE_STR,
    "kind": {"type": "string", "enum": list(codes.KINDS)},
    "total": int,
    "counts": PAIRS,
})

SEARCH_REPORT_SCHEMA = get_schema({
    "report": report_tag(SEARCH),
    "name": str,
    "ring": str,
    "group": str,
    "free_bits": int,
    "elapsed": float,
    "stages": [{"filter": str, "count": int}],
    "distances": PAIRS,
    "classes": {"type": "array", "minItems": 0, "items": get_schema({
        "name": str,
        "count": int,
        "histogram": PAIRS,
    }, enforce=False)},
    "witnesses": STRINGS,
    "expected": {"type": "array", "minItems": 0, "items": get_schema({
        "key": str,
        "expected": int,
        "observed": int,
    }, enforce=False)},
    "matches": bool,
})

VERIFY_REPORT_SCHEMA = get_schema({
    "report": report_tag(VERIFY),
    "matrices": {"type": "array", "minItems": 0, "items": get_schema({
        "name": str,
        "length": int,
        "rank": int,
        "distance": NULLABLE_INT,
        "self_dual": bool,
        "type_ii": bool,
        "same_as_element": NULLABLE_BOOL,
        "mismatches": STRINGS,
        "passed": bool,
    }, enforce=False)},
    "suites": {"type": "array", "minItems": 0, "items": get_schema({
        "name": str,
        "seed": int,
        "trials": int,
        "skips": int,
        "failures": int,
        "detail": NULLABLE_STR,
        "passed": bool,
    }, enforce=False)},
    "passed": bool,
})

SCHEMAS = {
    CODE: CODE_REPORT_SCHEMA,
    ENUMERATOR: ENUMERATOR_REPORT_SCHEMA,
    SEARCH: SEARCH_REPORT_SCHEMA,
    VERIFY: VERIFY_REPORT_SCHEMA,
}


def code_report(code: codes.LinearCode, label: str = 'C(v)',
                element: Optional[GroupRingElement] = None,
                group: Optional[str] = None,
                matrix: bool = False) -> Dict[str, Any]:
    """
    Parameters, duality flags and enumerator of `code`; `element` adds the
    shape of σ(v). The enumerator is the Lee one, which for a binary code
    is the Hamming enumerator.
    """
    self_dual = codes.is_self_dual(code)
    type_ii = None
    if code.is_binary:
        type_ii = self_dual and codes.is_type_ii(code)
    lee = codes.weight_enumerator(code, codes.LEE)
    document = {
        "report": CODE,
        "code": label,
        "ring": code.ring.name,
        "group": group,
        "element": None if element is None else str(element),
        "length": code.length,
        "rank": codes.cardinality(code),
        "hamming_distance": codes.min_distance(code, codes.HAMMING),
        "lee_distance": (None if code.is_binary
                         else codes.min_distance(code, codes.LEE)),
        "self_orthogonal": codes.is_self_orthogonal(code),
        "self_dual": self_dual,
        "formally_self_dual": codes.is_formally_self_dual(code, codes.LEE),
        "type_ii": type_ii,
        "shape": (None if element is None
                  else str(codes.matrix_shape(element.sigma()))),
        "enumerator": [[w, c] for w, c in lee.counts],
        "matrix": codes.generator_matrix_text(code) if matrix else None,
    }
    logger.debug('code report: %s', document)
    return document


def enumerator_report(code: codes.LinearCode, kind: str,
                      element: Optional[GroupRingElement] = None,
                      group: Optional[str] = None) -> Dict[str, Any]:
    enumerator = codes.weight_enumerator(code, kind)
    if kind == codes.COMPLETE:
        # compositions become [[symbol, count], ...] with printed symbols
        counts: List[List[Any]] = [
            [[[code.ring.format(s), n] for s, n in key], count]
            for key, count in enumerator.counts]
    else:
        counts = [[w, c] for w, c in enumerator.counts]
    return {
        "report": ENUMERATOR,
        "ring": code.ring.name,
        "group": group,
        "element": None if element is None else str(element),
        "kind": kind,
        "total": enumerator.total,
        "counts": counts,
    }


def search_report_document(report: SearchReport) -> Dict[str, Any]:
    observed = report.observed()
    return {
        "report": SEARCH,
        "name": report.name,
        "ring": report.ring,
        "group": report.group,
        "free_bits": report.free_bits,
        "elapsed": float(report.elapsed),
        "stages": [{"filter": k, "count": v} for k, v in report.stages],
        "distances": [[d, c] for d, c in report.distances],
        "classes": [{"name": name, "count": count,
                     "histogram": [[d, c] for d, c in histogram]}
                    for name, count, histogram in report.classes],
        "witnesses": list(report.witnesses),
        "expected": [{"key": key, "expected": value,
                      "observed": observed.get(key, 0)}
                     for key, value in report.expected],
        "matches": not report.expected_mismatches(),
    }


def verify_report(checks: Sequence[DisplayedCheck],
                  results: Sequence[SuiteResult], seed: int
                  ) -> Dict[str, Any]:
    matrices = [{
        "name": check.name,
        "length": check.parameters[0],
        "rank": check.parameters[1],
        "distance": check.parameters[2],
        "self_dual": check.self_dual,
        "type_ii": check.type_ii,
        "same_as_element": check.same_as_element,
        "mismatches": list(check.mismatches),
        "passed": check.passed,
    } for check in checks]
    suites = [{
        "name": result.name,
        "seed": seed,
        "trials": result.trials,
        "skips": result.skips,
        "failures": result.failures,
        "detail": result.detail,
        "passed": result.passed,
    } for result in results]
    return {
        "report": VERIFY,
        "matrices": matrices,
        "suites": suites,
        "passed": all(m["passed"] for m in matrices + suites),
    }


def validate_report(document: Dict[str, Any]) -> None:
    try:
        schema = SCHEMAS[document["report"]]
    except (KeyError, TypeError):
        raise GrcodesError('document is not a report') from None
    try:
        jsonschema.validate(document, schema)
    except jsonschema.ValidationError as e:
        raise GrcodesError(f'invalid {document["report"]} report: '
                           f'{e.message}') from None


def pairs_text(pairs: Sequence[Sequence[Any]]) -> str:
    return ', '.join(f'{key}: {count}' for key, count in pairs) or '-'


def optional(value: Any) -> str:
    return 'undefined' if value is None else str(value)


def render_code(document: Dict[str, Any]) -> List[str]:
    d = document["hamming_distance"]
    n, r = document["length"], document["rank"]
    lines = [f'{document["code"]} over {document["ring"]}: '
             f'length {n}, log2|C| {r}, d {optional(d)}']
    if document["element"] is not None:
        lines.append(f'  element: {document["element"]}')
        lines.append(f'  group:   {document["group"]}')
    if document["shape"] is not None:
        lines.append(f'  shape:   {document["shape"]}')
    if document["lee_distance"] is not None:
        lines.append(f'  Lee distance: {document["lee_distance"]}')
    for flag in ('self_orthogonal', 'self_dual', 'formally_self_dual',
                 'type_ii'):
        if document[flag] is not None:
            lines.append(f'  {flag}: {"yes" if document[flag] else "no"}')
    lines.append(f'  enumerator: {pairs_text(document["enumerator"])}')
    for row in document["matrix"] or ():
        lines.append(f'  {row}')
    return lines


def render_enumerator(document: Dict[str, Any]) -> List[str]:
    lines = [f'{document["kind"]} enumerator over {document["ring"]}, '
             f'{document["total"]} codewords']
    for key, count in document["counts"]:
        if isinstance(key, list):
            key = ' '.join(f'({s})^{n}' for s, n in key)
        lines.append(f'  {key}: {count}')
    return lines


def render_search(document: Dict[str, Any]) -> List[str]:
    lines = [f'{document["name"]}: {document["group"]} over '
             f'{document["ring"]}, {document["free_bits"]} free bits, '
             f'{document["elapsed"]:.1f}s']
    for stage in document["stages"]:
        lines.append(f'  {stage["filter"]:<20} {stage["count"]}')
    if document["distances"]:
        distances = [[optional(d), c] for d, c in document["distances"]]
        lines.append(f'  distances: {pairs_text(distances)}')
    for item in document["classes"]:
        histogram = [[optional(d), c] for d, c in item["histogram"]]
        lines.append(f'  class {item["name"]}: {item["count"]} '
                     f'(d {pairs_text(histogram)})')
    for text in document["witnesses"]:
        lines.append(f'  witness: {text}')
    for item in document["expected"]:
        mark = 'ok' if item["expected"] == item["observed"] else 'MISMATCH'
        lines.append(f'  expected {item["key"]} = {item["expected"]}, got '
                     f'{item["observed"]} {mark}')
    return lines


def render_verify(document: Dict[str, Any]) -> List[str]:
    lines = []
    for m in document["matrices"]:
        status = 'ok' if m["passed"] else 'FAILED'
        lines.append(f'matrix {m["name"]}: [{m["length"]},{m["rank"]},'
                     f'{optional(m["distance"])}] {status}')
        lines.extend(f'  {text}' for text in m["mismatches"])
    for s in document["suites"]:
        status = 'ok' if s["passed"] else 'FAILED'
        lines.append(f'suite {s["name"]}: {s["trials"]} trials, '
                     f'{s["skips"]} skipped, {s["failures"]} failed '
                     f'{status}')
        if s["detail"] is not None:
            lines.append(f'  first failure: {s["detail"]}')
    return lines


RENDERERS: Dict[str, Callable[[Dict[str, Any]], List[str]]] = {
    CODE: render_code,
    ENUMERATOR: render_enumerator,
    SEARCH: render_search,
    VERIFY: render_verify,
}


def render_text(document: Dict[str, Any]) -> str:
    return '\n'.join(RENDERERS[document["report"]](document))
