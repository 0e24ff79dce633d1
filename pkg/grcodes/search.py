"""
Exhaustive scans over parameterized sets of group ring elements.

A pattern is a fixed element plus free direction elements d_0..d_{f-1};
candidate number c is fixed + Σ bit_i(c)·d_i. Each candidate runs through the
filters in cheapest-first order and stage counts record how many candidates
passed each filter.
"""
import logging
import time
from collections import Counter
from concurrent.futures import ProcessPoolExecutor, as_completed
from dataclasses import dataclass, field
from typing import (Any, Dict, Iterator, List, Mapping, Optional, Sequence,
                    Tuple)

import jsonschema
from tqdm import tqdm

from grcodes import config, gf2
from grcodes.codes import (LinearCode, code_from_element, gray_image,
                           is_formally_self_dual, is_self_dual, is_type_ii,
                           min_distance, LEE)
from grcodes.exceptions import (GrcodesError, PatternError,
                                SearchSpaceTooLarge, UnknownName)
from grcodes.groupring import (GroupRingElement, coefficient_bits,
                               parse_element)
from grcodes.groups import FiniteGroup, parse_group
from grcodes.patterns import BUILTIN_PATTERNS
from grcodes.rings import RingSpec
from grcodes.schemas import get_schema

logger = logging.getLogger(__name__)

SYMMETRIC = 'symmetric'
RANK = 'rank'
DISTANCE = 'distance'
SELF_DUAL = 'self_dual'
FORMALLY_SELF_DUAL = 'formally_self_dual'
TYPE_II = 'type_ii'

# cheapest first
FILTER_ORDER = (SYMMETRIC, RANK, DISTANCE, SELF_DUAL, FORMALLY_SELF_DUAL,
                TYPE_II)

CANDIDATES = 'candidates'
OTHER = 'other'
CLASSES = (SELF_DUAL, FORMALLY_SELF_DUAL, OTHER)

PATTERN_SCHEMA = get_schema({
    "type": "object",
    "properties": {
        "name": {"type": "string"},
        "ring": {"type": "string"},
        "group": {"type": "string"},
        "fixed": {"type": "string"},
        "free": {"anyOf": [
            {"type": "array", "items": {"type": "string"}},
            {"enum": [SYMMETRIC]},
        ]},
        "filters": {"type": "array", "items": {"enum": list(FILTER_ORDER)}},
        "rank": {"type": ["integer", "null"], "minimum": 0,
                 "nullable": True},
        "distance": {"type": ["integer", "null"], "minimum": 1,
                     "nullable": True},
        "witnesses": {"type": "integer", "minimum": 0},
        "limit": {"type": ["integer", "null"], "minimum": 1,
                  "nullable": True},
        "classify": {"type": "boolean"},
        "expected": {"type": "object", "properties": {},
                     "additionalProperties": {"type": "integer"}},
        "slow": {"type": "boolean"},
    },
    "required": ["group", "free"],
})


@dataclass(frozen=True)
class SearchSpec:
    """
    A candidate set with its filter chain.

    `rank` is the required binary rank of the Gray image, half its length
    by default; `distance` the required minimum distance of the Gray image.
    `expected` holds the counts a built-in reproduction must hit.
    """
    name: str
    ring: RingSpec
    group: FiniteGroup
    fixed: GroupRingElement
    directions: Tuple[GroupRingElement, ...]
    filters: Tuple[str, ...] = (RANK,)
    rank: Optional[int] = None
    distance: Optional[int] = None
    witnesses: int = config.DEFAULT_WITNESSES
    limit: Optional[int] = None
    classify: bool = False
    expected: Tuple[Tuple[str, int], ...] = ()
    group_descriptor: str = ''
    slow: bool = False

    def __post_init__(self) -> None:
        if len(self.directions) > config.MAX_FREE_BITS:
            raise SearchSpaceTooLarge(
                f'{len(self.directions)} free bits exceed '
                f'{config.MAX_FREE_BITS}')
        unknown = set(self.filters) - set(FILTER_ORDER)
        if unknown:
            raise UnknownName(f'unknown filters {sorted(unknown)}')
        if DISTANCE in self.filters and self.distance is None:
            raise PatternError('distance filter needs a distance')
        order = tuple(f for f in FILTER_ORDER if f in self.filters)
        object.__setattr__(self, 'filters', order)
        seen = set(coefficient_bits(self.fixed))
        for i, d in enumerate(self.directions):
            support = set(coefficient_bits(d))
            if not support:
                raise PatternError(f'direction {i} is zero')
            if support & seen:
                raise PatternError(
                    f'direction {i} ({d}) overlaps fixed positions or an '
                    f'earlier direction')
            seen |= support

    @property
    def free_bits(self) -> int:
        return len(self.directions)

    @property
    def total(self) -> int:
        """ Number of candidates scanned."""
        space = 1 << self.free_bits
        return space if self.limit is None else min(space, self.limit)

    @property
    def target_rank(self) -> int:
        if self.rank is not None:
            return self.rank
        return self.group.order * self.ring.width // 2

    def candidate(self, index: int) -> GroupRingElement:
        v = self.fixed
        for i, d in enumerate(self.directions):
            if index >> i & 1:
                v = v + d
        return v


def symmetric_directions(ring: RingSpec, group: FiniteGroup
                         ) -> Tuple[GroupRingElement, ...]:
    """
    Directions spanning the elements with v = v^T: one per inverse orbit
    {g, g⁻¹} and coefficient monomial.
    """
    result = []
    for orbit in group.inverse_orbits():
        for s in ring.monomials():
            coeffs = [0] * group.order
            for i in orbit:
                coeffs[i] = 1 << s
            result.append(GroupRingElement(ring, group, tuple(coeffs)))
    return tuple(result)


@dataclass
class Tally:
    """ Mergeable counts of a scanned range."""
    stages: List[int]
    distances: Counter = field(default_factory=Counter)
    classes: Dict[str, Counter] = field(default_factory=dict)
    witnesses: List[int] = field(default_factory=list)

    @classmethod
    def empty(cls, spec: SearchSpec) -> 'Tally':
        return cls([0] * (len(spec.filters) + 1),
                   classes={c: Counter() for c in CLASSES})

    def merge(self, other: 'Tally', limit: int) -> None:
        self.stages = [a + b for a, b in zip(self.stages, other.stages)]
        self.distances.update(other.distances)
        for name, histogram in other.classes.items():
            self.classes[name].update(histogram)
        self.witnesses = sorted(self.witnesses + other.witnesses)[:limit]


@dataclass
class Outcome:
    """ Filter results of one candidate."""
    passed: int = 0
    distance: Optional[int] = None
    category: Optional[str] = None


class Scanner:
    """
    Walks a contiguous candidate range.

    Over 𝔽₂ the rows of σ(v) and the coefficient masks of v and v^T are
    python ints updated by XOR as candidate bits change, since σ is linear.
    """

    def __init__(self, spec: SearchSpec):
        self.spec = spec
        self.n = spec.group.order
        self.binary = spec.ring.is_binary
        if self.binary:
            self.fixed = self.state_of(spec.fixed)
            self.steps = [self.state_of(d) for d in spec.directions]

    def state_of(self, v: GroupRingElement) -> List[int]:
        """ σ(v) rows, then the masks of v and v^T."""
        rows = [sum(int(x) << j for j, x in enumerate(row))
                for row in v.sigma().entries]
        mask = sum(c << i for i, c in enumerate(v.coeffs))
        transposed = sum(c << i for i, c in enumerate(v.involution().coeffs))
        return rows + [mask, transposed]

    def walk(self, start: int, stop: int) -> Iterator[Tuple[int, List[int]]]:
        state = list(self.fixed)
        for i, step in enumerate(self.steps):
            if start >> i & 1:
                state = [a ^ b for a, b in zip(state, step)]
        for index in range(start, stop):
            if index > start:
                changed = index ^ (index - 1)
                i = 0
                while changed:
                    if changed & 1:
                        state = [a ^ b for a, b in zip(state, self.steps[i])]
                    changed >>= 1
                    i += 1
            yield index, state

    def scan(self, start: int, stop: int) -> Tally:
        tally = Tally.empty(self.spec)
        if self.binary:
            outcomes: Iterator[Tuple[int, Outcome]] = (
                (index, self.evaluate_binary(state))
                for index, state in self.walk(start, stop))
        else:
            outcomes = ((index, evaluate(self.spec,
                                         self.spec.candidate(index)))
                        for index in range(start, stop))
        complete = len(self.spec.filters)
        for index, outcome in outcomes:
            for stage in range(outcome.passed + 1):
                tally.stages[stage] += 1
            if outcome.passed < complete:
                continue
            tally.distances[outcome.distance] += 1
            if outcome.category is not None:
                tally.classes[outcome.category][outcome.distance] += 1
            if len(tally.witnesses) < self.spec.witnesses:
                tally.witnesses.append(index)
        return tally

    def evaluate_binary(self, state: List[int]) -> Outcome:
        spec = self.spec
        rows = state[:self.n]
        outcome = Outcome()
        basis: Optional[List[int]] = None
        code: Optional[LinearCode] = None
        for name in spec.filters:
            if name == SYMMETRIC:
                ok = state[self.n] == state[self.n + 1]
            elif name == RANK:
                ok = gf2.rank(rows) == spec.target_rank
            elif name == DISTANCE:
                basis = basis or gf2.reduce_rows(rows)
                outcome.distance = gf2.minimum_weight(
                    basis, self.n, below=spec.distance)
                ok = (outcome.distance is not None and
                      outcome.distance >= (spec.distance or 0))
            elif name == SELF_DUAL:
                basis = basis or gf2.reduce_rows(rows)
                ok = 2 * len(basis) == self.n and not any(
                    gf2.dot(a, b) for i, a in enumerate(basis)
                    for b in basis[i:])
            else:
                basis = basis or gf2.reduce_rows(rows)
                code = code or LinearCode.from_basis(spec.ring, self.n, basis)
                ok = (is_formally_self_dual(code) if name == FORMALLY_SELF_DUAL
                      else is_type_ii(code))
            if not ok:
                return outcome
            outcome.passed += 1
        basis = basis or gf2.reduce_rows(rows)
        if outcome.distance is None:
            outcome.distance = gf2.minimum_weight(basis, self.n)
        if spec.classify:
            code = code or LinearCode.from_basis(spec.ring, self.n, basis)
            outcome.category = categorize(code)
        return outcome


def categorize(code: LinearCode) -> str:
    if is_self_dual(code):
        return SELF_DUAL
    if is_formally_self_dual(code):
        return FORMALLY_SELF_DUAL
    return OTHER


def evaluate(spec: SearchSpec, v: GroupRingElement) -> Outcome:
    """ Runs the filter chain through the codes module."""
    outcome = Outcome()
    code = code_from_element(v)
    for name in spec.filters:
        if name == SYMMETRIC:
            ok = v.is_symmetric()
        elif name == RANK:
            ok = code.binary_rank == spec.target_rank
        elif name == DISTANCE:
            outcome.distance = min_distance(code, LEE, below=spec.distance)
            ok = (outcome.distance is not None and
                  outcome.distance >= (spec.distance or 0))
        elif name == SELF_DUAL:
            ok = is_self_dual(code)
        elif name == FORMALLY_SELF_DUAL:
            ok = is_formally_self_dual(code)
        else:
            ok = is_type_ii(gray_image(code))
        if not ok:
            return outcome
        outcome.passed += 1
    if outcome.distance is None:
        outcome.distance = min_distance(code, LEE)
    if spec.classify:
        outcome.category = categorize(code)
    return outcome


def verify_witness(spec: SearchSpec, v: GroupRingElement) -> bool:
    """ Re-checks a reported witness against every filter."""
    return evaluate(spec, v).passed == len(spec.filters)


def scan_range(spec: SearchSpec, start: int, stop: int) -> Tally:
    """ Worker entry point."""
    tally = Scanner(spec).scan(start, stop)
    logger.debug("%s: scanned %d..%d, %d survivors",
                 spec.name, start, stop, tally.stages[-1])
    return tally


def split_range(total: int, chunks: int) -> List[Tuple[int, int]]:
    chunks = max(1, min(chunks, total))
    size = -(-total // chunks)
    return [(start, min(start + size, total))
            for start in range(0, total, size)]


@dataclass(frozen=True)
class SearchReport:
    """
    Result of a scan. Counts do not depend on the worker count; witnesses are
    the lowest candidate numbers among the survivors.
    """
    name: str
    ring: str
    group: str
    free_bits: int
    stages: Tuple[Tuple[str, int], ...]
    distances: Tuple[Tuple[Optional[int], int], ...]
    classes: Tuple[Tuple[str, int, Tuple[Tuple[Optional[int], int], ...]],
                   ...]
    witnesses: Tuple[str, ...]
    expected: Tuple[Tuple[str, int], ...] = ()
    elapsed: float = field(default=0.0, compare=False)

    @property
    def total(self) -> int:
        return self.stages[0][1]

    @property
    def survivors(self) -> int:
        return self.stages[-1][1]

    def observed(self) -> Dict[str, int]:
        """
        Flat counts: stage names, 'class:<name>' and
        'class:<name>:d=<distance>'.
        """
        result = dict(self.stages)
        for name, count, histogram in self.classes:
            result[f'class:{name}'] = count
            for d, c in histogram:
                result[f'class:{name}:d={d}'] = c
        return result

    def expected_mismatches(self) -> List[Tuple[str, int, int]]:
        observed = self.observed()
        return [(key, value, observed.get(key, 0))
                for key, value in self.expected
                if observed.get(key, 0) != value]


def build_report(spec: SearchSpec, tally: Tally, elapsed: float
                 ) -> SearchReport:
    stages = [(CANDIDATES, tally.stages[0])] + list(
        zip(spec.filters, tally.stages[1:]))
    classes: List[Any] = []
    if spec.classify:
        for name in CLASSES:
            histogram = tally.classes[name]
            classes.append((name, sum(histogram.values()),
                            tuple(sorted(histogram.items(),
                                         key=distance_key))))
    return SearchReport(
        name=spec.name,
        ring=spec.ring.name,
        group=spec.group_descriptor,
        free_bits=spec.free_bits,
        stages=tuple(stages),
        distances=tuple(sorted(tally.distances.items(), key=distance_key)),
        classes=tuple(classes),
        witnesses=tuple(str(spec.candidate(i)) for i in tally.witnesses),
        expected=spec.expected,
        elapsed=elapsed)


def distance_key(item: Tuple[Optional[int], int]) -> int:
    # the zero code has no distance
    return -1 if item[0] is None else item[0]


def run_search(spec: SearchSpec, workers: Optional[int] = None,
               progress: bool = False) -> SearchReport:
    """
    Scans every candidate of `spec`.

    The range is split into contiguous chunks; with more than one worker the
    chunks run in a process pool. Tallies merge by summation.
    """
    workers = workers or config.default_workers()
    total = spec.total
    chunks = split_range(total, workers * 4)
    logger.info("%s: %d free bits, %d candidates, %d workers",
                spec.name, spec.free_bits, total, workers)
    started = time.monotonic()
    tally = Tally.empty(spec)
    bar = tqdm(total=len(chunks), desc=spec.name, unit='chunk',
               disable=not progress)
    with bar:
        if workers == 1:
            for start, stop in chunks:
                tally.merge(scan_range(spec, start, stop), spec.witnesses)
                bar.update()
        else:
            with ProcessPoolExecutor(max_workers=workers) as pool:
                futures = [pool.submit(scan_range, spec, start, stop)
                           for start, stop in chunks]
                for future in as_completed(futures):
                    tally.merge(future.result(), spec.witnesses)
                    bar.update()
    report = build_report(spec, tally, time.monotonic() - started)
    logger.info("%s: stages %s", spec.name,
                ', '.join(f'{k}={v}' for k, v in report.stages))
    return report


def load_pattern(document: Mapping[str, Any]) -> SearchSpec:
    """
    Reads a pattern document. "free" lists direction element texts or is
    "symmetric" for symmetric_directions.
    """
    try:
        jsonschema.validate(document, PATTERN_SCHEMA)
    except jsonschema.ValidationError as e:
        raise PatternError(f'invalid pattern: {e.message}') from None
    ring = RingSpec.parse(document.get('ring', 'f2'))
    descriptor = document['group']
    group = parse_group(descriptor)
    fixed = parse_element(document.get('fixed', '0'), ring, group)
    free = document['free']
    if free == SYMMETRIC:
        directions = symmetric_directions(ring, group)
    else:
        directions = tuple(parse_element(text, ring, group) for text in free)
    return SearchSpec(
        name=document.get('name', 'pattern'),
        ring=ring,
        group=group,
        fixed=fixed,
        directions=directions,
        filters=tuple(document.get('filters', [RANK])),
        rank=document.get('rank'),
        distance=document.get('distance'),
        witnesses=document.get('witnesses', config.DEFAULT_WITNESSES),
        limit=document.get('limit'),
        classify=document.get('classify', False),
        expected=tuple(sorted(document.get('expected', {}).items())),
        group_descriptor=descriptor,
        slow=document.get('slow', False))


def builtin_search(name: str) -> SearchSpec:
    try:
        document = BUILTIN_PATTERNS[name]
    except KeyError:
        raise UnknownName(f'unknown search {name!r}') from None
    return load_pattern(dict(document, name=name))


def builtin_names() -> Sequence[str]:
    return sorted(BUILTIN_PATTERNS)


def check_report(report: SearchReport) -> None:
    """ Raises if a report misses its expected counts."""
    mismatches = report.expected_mismatches()
    if mismatches:
        details = ', '.join(f'{key}: expected {want}, got {got}'
                            for key, want, got in mismatches)
        raise GrcodesError(f'{report.name}: {details}')
