"""
Randomized property suites for the group ring constructions.

Each suite draws its instances from a seeded ``random.Random`` so a run is
reproducible from the seed alone. An instance that does not meet a
property's hypothesis (usually the size condition) counts as a skip.
"""
import logging
import random
from dataclasses import dataclass
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from grcodes import codes, config
from grcodes.exceptions import UnknownName
from grcodes.groupring import GroupRingElement, random_element
from grcodes.groups import (FiniteGroup, make_cyclic, make_dihedral,
                            parse_group)
from grcodes.rings import F2, RingSpec

logger = logging.getLogger(__name__)

R1 = RingSpec(1)
R2 = RingSpec(2)

ALGEBRA_GROUPS = ('d8', 'c2c2c2', 'a4', 's4', 'm16', 'g24_8', 'sl23',
                  'c6 @evenodd', 'c3 x d8 @csd')
CODE_GROUPS = ('d8', 'c2c2c2', 'a4', 'c6 @evenodd', 'c2 x d6 @csd')
BINARY_GROUPS = ('d8', 'c2c2c2', 'm16', 'c6', 'd12', 'c2 x d4 @csd')
ISODUAL_SHAPES = ((2, 4), (3, 4), (2, 6), (3, 6), (4, 4), (2, 8), (3, 8))

DEFAULT_TRIALS = {
    'homomorphism': 1000,
    'transpose': 1000,
    'cardinality': 200,
    'block_lemma': 500,
    'dihedral': 500,
    'palindromic': 500,
    'isodual': 100,
    'invariance': 100,
    'macwilliams': 100,
}


@dataclass
class SuiteResult:
    name: str
    trials: int = 0
    skips: int = 0
    failures: int = 0
    detail: Optional[str] = None

    @property
    def passed(self) -> bool:
        return self.failures == 0

    def record(self, ok: Optional[bool], detail: str) -> None:
        """ ok is None for an instance outside the hypothesis."""
        self.trials += 1
        if ok is None:
            self.skips += 1
        elif not ok:
            self.failures += 1
            if self.detail is None:
                self.detail = detail
                logger.warning('%s failed: %s', self.name, detail)


Suite = Callable[[random.Random, int], SuiteResult]


def half_rank(c: codes.LinearCode) -> bool:
    """ |C| = |R|^(n/2)."""
    return 2 * c.binary_rank == c.width


def random_pair(rng: random.Random, descriptor: str
                ) -> Tuple[GroupRingElement, GroupRingElement]:
    ring = rng.choice((F2, R1, R2))
    g = parse_group(descriptor)
    return random_element(ring, g, rng), random_element(ring, g, rng)


def homomorphism(rng: random.Random, trials: int) -> SuiteResult:
    """ σ(v + w) = σ(v) + σ(w) and σ(vw) = σ(v)σ(w)."""
    result = SuiteResult('homomorphism')
    for descriptor in ALGEBRA_GROUPS:
        for _ in range(trials):
            v, w = random_pair(rng, descriptor)
            ok = ((v + w).sigma() == v.sigma() + w.sigma() and
                  (v * w).sigma() == v.sigma() @ w.sigma())
            result.record(ok, f'{descriptor} over {v.ring}: v = {v}, '
                              f'w = {w}')
    return result


def transpose(rng: random.Random, trials: int) -> SuiteResult:
    """ σ(v^T) = σ(v)^T and (vw)^T = w^T v^T."""
    result = SuiteResult('transpose')
    for descriptor in ALGEBRA_GROUPS:
        for _ in range(trials):
            v, w = random_pair(rng, descriptor)
            ok = (v.involution().sigma() == v.sigma().transpose() and
                  (v * w).involution() == w.involution() * v.involution())
            result.record(ok, f'{descriptor} over {v.ring}: v = {v}, '
                              f'w = {w}')
    return result


def cardinality(rng: random.Random, trials: int) -> SuiteResult:
    """ |C||C^⊥| = |R|^n and C^⊥⊥ = C for random σ(v) codes."""
    result = SuiteResult('cardinality')
    for _ in range(trials):
        descriptor = rng.choice(CODE_GROUPS)
        v = random_element(rng.choice((F2, R1)), parse_group(descriptor), rng)
        c = codes.code_from_element(v)
        d = codes.dual(c)
        ok = (codes.cardinality(c) + codes.cardinality(d) == c.width and
              codes.dual(d) == c)
        result.record(ok, f'{descriptor} over {v.ring}: v = {v}')
    return result


def random_symmetric(rng: random.Random, k: int) -> List[List[int]]:
    b = [[0] * k for _ in range(k)]
    for i in range(k):
        for j in range(i, k):
            b[i][j] = b[j][i] = rng.getrandbits(1)
    return b


def block_lemma(rng: random.Random, trials: int) -> SuiteResult:
    """ [[I, B], [B, I]] with B symmetric and rank k is self-dual."""
    result = SuiteResult('block_lemma')
    for _ in range(trials):
        k = rng.randint(1, 8)
        b = random_symmetric(rng, k)
        c = codes.double_block_code(codes.identity_rows(k), b)
        ok = codes.is_self_dual(c) if half_rank(c) else None
        result.record(ok, f'B = {b}')
    return result


def rotation_part(rng: random.Random, ring: RingSpec, g: FiniteGroup
                  ) -> GroupRingElement:
    """
    Element whose first-half coefficients are a single 1 and whose second
    half is random.
    """
    half = g.order // 2
    coeffs = [0] * half + [rng.getrandbits(ring.width)
                           for _ in range(g.order - half)]
    coeffs[rng.randrange(half)] = 1
    return GroupRingElement(ring, g, tuple(coeffs))


def dihedral(rng: random.Random, trials: int) -> SuiteResult:
    """
    v over D_2m with one rotation coefficient 1 and the others 0 gives a
    self-dual code whenever |C| = |R|^m.
    """
    result = SuiteResult('dihedral')
    for _ in range(trials):
        m = rng.randint(2, 8)
        ring = F2 if m > 4 else rng.choice((F2, R1))
        v = rotation_part(rng, ring, make_dihedral(2 * m))
        c = codes.code_from_element(v)
        ok = codes.is_self_dual(c) if half_rank(c) else None
        result.record(ok, f'd{2 * m} over {ring}: v = {v}')
    return result


def palindromic_element(rng: random.Random, ring: RingSpec, n: int
                        ) -> GroupRingElement:
    """
    Cyclic v of length n with a single even coefficient 1 at a random even
    index and random odd coefficients with v_(n-i) = v_i.
    """
    coeffs = [0] * n
    coeffs[2 * rng.randrange(n // 2)] = 1
    for i in range(1, n // 2 + 1, 2):
        coeffs[i] = coeffs[n - i] = rng.getrandbits(ring.width)
    return GroupRingElement(ring, make_cyclic(n), tuple(coeffs))


def palindromic(rng: random.Random, trials: int) -> SuiteResult:
    """
    Cyclic v of length 2k with one v_2i = 1, the other even coefficients 0
    and v_(2k-i) = v_i for odd i is self-dual whenever |C| = |R|^k.
    """
    result = SuiteResult('palindromic')
    for _ in range(trials):
        n = rng.choice((6, 8, 10))
        ring = rng.choice((F2, R1))
        v = palindromic_element(rng, ring, n)
        c = codes.code_from_element(v)
        ok = codes.is_self_dual(c) if half_rank(c) else None
        result.record(ok, f'c{n} over {ring}: v = {v}')
    return result


def structural_isodual_permutation(g: FiniteGroup) -> Tuple[int, ...]:
    """
    Coordinate permutation taking C(v) onto C(v)^⊥ for C_s × D_2m in csd
    order, when the rotation half of v is the identity alone.

    With f the first reflection, a rotation-type g goes to g⁻¹f and a
    reflection-type q goes to f·q⁻¹.
    """
    half = g.order // 2
    f = half
    inv = g.inverse
    return tuple(g.multiply(inv[j], f) if j < half else g.multiply(f, inv[j])
                 for j in range(g.order))


def isodual(rng: random.Random, trials: int) -> SuiteResult:
    """
    C_s × D_2m pattern codes of size |R|^(n/2) are isodual through the
    structural permutation, hence formally self-dual.
    """
    result = SuiteResult('isodual')
    for _ in range(trials):
        s, order = rng.choice(ISODUAL_SHAPES)
        g = parse_group(f'c{s} x d{order} @csd')
        ring = rng.choice((F2, R1)) if g.order <= 12 else F2
        half = g.order // 2
        v = GroupRingElement(
            ring, g, (1,) + (0,) * (half - 1) +
            tuple(rng.getrandbits(ring.width) for _ in range(half)))
        c = codes.code_from_element(v)
        if not half_rank(c):
            result.record(None, '')
            continue
        perm = structural_isodual_permutation(g)
        ok = (codes.isodual_witness_check(c, perm) and
              codes.is_formally_self_dual(c))
        result.record(ok, f'c{s} x d{order} over {ring}: v = {v}')
    return result


def invariance(rng: random.Random, trials: int) -> SuiteResult:
    """
    C(v) is fixed by every left translation and C(v·h) is C(v) under the
    right translation by h.
    """
    result = SuiteResult('invariance')
    for descriptor in CODE_GROUPS:
        g = parse_group(descriptor)
        for _ in range(trials):
            v = random_element(rng.choice((F2, R1)), g, rng)
            c = codes.code_from_element(v)
            h = rng.randrange(g.order)
            shifted = codes.permute_code(
                c, codes.shift_equivalence_witness(v, h))
            ok = (codes.check_group_invariance(c, g) and
                  shifted == codes.code_from_element(v.right_shift(h)))
            result.record(ok, f'{descriptor} over {v.ring}: v = {v}, '
                              f'h = {g.names[h]}')
    return result


def macwilliams(rng: random.Random, trials: int) -> SuiteResult:
    """ Binary MacWilliams transform of C against the enumerator of C^⊥."""
    result = SuiteResult('macwilliams')
    for _ in range(trials):
        descriptor = rng.choice(BINARY_GROUPS)
        v = random_element(F2, parse_group(descriptor), rng)
        ok = codes.macwilliams_check(codes.code_from_element(v))
        result.record(ok, f'{descriptor}: v = {v}')
    return result


SUITES: Dict[str, Suite] = {
    'homomorphism': homomorphism,
    'transpose': transpose,
    'cardinality': cardinality,
    'block_lemma': block_lemma,
    'dihedral': dihedral,
    'palindromic': palindromic,
    'isodual': isodual,
    'invariance': invariance,
    'macwilliams': macwilliams,
}


def suite_names() -> List[str]:
    return list(SUITES)


def run_suite(name: str, seed: int = config.DEFAULT_SEED,
              trials: Optional[int] = None) -> SuiteResult:
    try:
        suite = SUITES[name]
    except KeyError:
        raise UnknownName(f'unknown suite {name!r}') from None
    if trials is None:
        trials = DEFAULT_TRIALS[name]
    result = suite(random.Random(seed), trials)
    logger.info('suite %s: %d trials, %d skipped, %d failed', name,
                result.trials, result.skips, result.failures)
    return result


def run_suites(names: Sequence[str], seed: int = config.DEFAULT_SEED,
               trials: Optional[int] = None) -> List[SuiteResult]:
    return [run_suite(name, seed, trials) for name in names]
