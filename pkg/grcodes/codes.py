"""
Linear codes over 𝔽₂ and R_k.

A code keeps the reduced 𝔽₂ basis of its Gray image: coordinate j occupies
bits j·2^k .. j·2^k + 2^k - 1 of every row. Since the Gray map is an
additive bijection, the R_k-span of the generators is the 𝔽₂-span of all
monomial multiples u_S·g, and |C| = 2^rank.
"""
import logging
from dataclasses import dataclass, field
from math import comb
from typing import (Dict, Iterable, List, Optional, Sequence, Tuple, Union)

from grcodes import gf2
from grcodes.exceptions import GrcodesError, LengthMismatch, NotBinary
from grcodes.groupring import GroupRingElement, SigmaMatrix
from grcodes.groups import FiniteGroup
from grcodes.rings import (F2, RingSpec, gray_inverse_table, gray_table,
                           mul_coeffs)

logger = logging.getLogger(__name__)

HAMMING = 'hamming'
LEE = 'lee'
COMPLETE = 'complete'
KINDS = (HAMMING, LEE, COMPLETE)

Row = Tuple[int, ...]


def gray_row(ring: RingSpec, row: Sequence[int]) -> int:
    """ Gray image of a ring row as a bit-packed int."""
    table = gray_table(ring.k)
    w = ring.width
    image = 0
    for j, c in enumerate(row):
        if c:
            image |= table[c] << (j * w)
    return image


def decode_row(ring: RingSpec, image: int, length: int) -> Row:
    """ Ring row whose Gray image is `image`."""
    inverse = gray_inverse_table(ring.k)
    w = ring.width
    return tuple(inverse[(image >> (j * w)) & ring.mask]
                 for j in range(length))


def inner_product(a: Sequence[int], b: Sequence[int]) -> int:
    """ [a, b] = Σ a_j b_j in R_k."""
    result = 0
    for x, y in zip(a, b):
        if x and y:
            result ^= mul_coeffs(x, y)
    return result


@dataclass(frozen=True)
class LinearCode:
    """
    Code of `length` over `ring`.

    Equality compares ring, length and the reduced binary basis, so two
    different generator sets of one code are equal.
    """
    ring: RingSpec
    length: int
    binary_basis: Tuple[int, ...]
    generators: Tuple[Row, ...] = field(default=(), compare=False,
                                        repr=False)

    @classmethod
    def from_rows(cls, ring: RingSpec, rows: Iterable[Sequence[int]],
                  length: Optional[int] = None) -> 'LinearCode':
        """ R_k-span of ring rows."""
        generators = tuple(tuple(int(c) for c in row) for row in rows)
        if length is None:
            if not generators:
                raise GrcodesError('length is required for an empty row set')
            length = len(generators[0])
        if any(len(g) != length for g in generators):
            raise LengthMismatch(f'all rows must have length {length}')
        images = (gray_row(ring, [mul_coeffs(1 << s, c) for c in g])
                  for g in generators for s in ring.monomials())
        return cls(ring, length, tuple(gf2.reduce_rows(images)), generators)

    @classmethod
    def from_basis(cls, ring: RingSpec, length: int,
                   images: Iterable[int]) -> 'LinearCode':
        """ 𝔽₂-span of Gray images; the result must be R_k-linear."""
        basis = tuple(gf2.reduce_rows(images))
        return cls(ring, length, basis,
                   tuple(decode_row(ring, b, length) for b in basis))

    @property
    def width(self) -> int:
        """ Length of the Gray image."""
        return self.length * self.ring.width

    @property
    def binary_rank(self) -> int:
        return len(self.binary_basis)

    @property
    def is_binary(self) -> bool:
        return self.ring.is_binary

    def rows(self) -> List[Row]:
        """ Basis rows decoded to ring symbols."""
        return [decode_row(self.ring, b, self.length)
                for b in self.binary_basis]

    def __contains__(self, word: Sequence[int]) -> bool:
        image = gray_row(self.ring, word)
        for row in self.binary_basis:
            if image & (row & -row):
                image ^= row
        return image == 0


def code_from_sigma(m: SigmaMatrix) -> LinearCode:
    """ Row space of σ(v) over its ring."""
    return LinearCode.from_rows(m.ring, m.rows(), m.n)


def code_from_element(v: GroupRingElement) -> LinearCode:
    """ C(v), the code generated by σ(v)."""
    return code_from_sigma(v.sigma())


def code_from_binary_rows(rows: Sequence[Union[str, int]],
                          length: Optional[int] = None) -> LinearCode:
    """
    Binary code from 0/1 strings (coordinate 0 first) or bit-packed ints.
    """
    ints = [gf2.from_bits(r) if isinstance(r, str) else r for r in rows]
    if length is None:
        if not rows or not isinstance(rows[0], str):
            raise GrcodesError('length is required for int rows')
        length = len(str(rows[0]).strip())
    if any(r >> length for r in ints):
        raise LengthMismatch(f'row longer than {length}')
    return LinearCode.from_rows(
        F2, [tuple(r >> j & 1 for j in range(length)) for r in ints], length)


def cardinality(c: LinearCode) -> int:
    """ log₂|C|."""
    return c.binary_rank


def gray_image(c: LinearCode) -> LinearCode:
    """ Binary code φ_k(C) of length n·2^k."""
    return LinearCode.from_basis(F2, c.width, c.binary_basis)


def dual(c: LinearCode) -> LinearCode:
    """
    C^⊥ for the standard inner product.

    Each ring equation [g, w] = 0 splits into 2^k 𝔽₂ equations over the
    monomial coordinates of w: component W reads Σ_j Σ_{T⊆W} g_j[W∖T]·w_j[T].
    """
    ring = c.ring
    w = ring.width
    generators = c.generators or tuple(c.rows())
    equations = []
    for g in generators:
        for whole in ring.monomials():
            row = 0
            for j, a in enumerate(g):
                if not a:
                    continue
                for t in ring.monomials():
                    if t & ~whole == 0 and a >> (whole ^ t) & 1:
                        row |= 1 << (j * w + t)
            if row:
                equations.append(row)
    solutions = gf2.nullspace(equations, c.width)
    rows = [tuple((x >> (j * w)) & ring.mask for j in range(c.length))
            for x in solutions]
    result = LinearCode.from_rows(ring, rows, c.length)
    logger.debug("dual of rank %d code: rank %d", c.binary_rank,
                 result.binary_rank)
    return result


def min_distance(c: LinearCode, metric: str = HAMMING,
                 below: Optional[int] = None) -> Optional[int]:
    """
    Minimum distance, None for the zero code.

    Lee distance is the Hamming distance of the Gray image. With `below` the
    scan stops early on any word lighter than `below`.
    """
    if metric not in (HAMMING, LEE):
        raise GrcodesError(f'unknown metric {metric!r}')
    block = c.ring.width if metric == HAMMING else 1
    return gf2.minimum_weight(c.binary_basis, c.width, block, below)


@dataclass(frozen=True)
class WeightEnumerator:
    """
    Codeword counts by weight, or by symbol composition for the complete
    enumerator; `counts` is sorted by key.
    """
    kind: str
    counts: Tuple[Tuple[object, int], ...]

    @classmethod
    def from_dict(cls, kind: str, counts: Dict) -> 'WeightEnumerator':
        return cls(kind, tuple(sorted(counts.items())))

    def as_dict(self) -> Dict:
        return dict(self.counts)

    @property
    def total(self) -> int:
        return sum(count for _, count in self.counts)


def weight_enumerator(c: LinearCode, kind: str = HAMMING) -> WeightEnumerator:
    if kind == HAMMING:
        counts = gf2.weight_distribution(c.binary_basis, c.width,
                                         c.ring.width)
    elif kind == LEE:
        counts = gf2.weight_distribution(c.binary_basis, c.width)
    elif kind == COMPLETE:
        counts = gf2.compositions(c.binary_basis, c.length, c.ring.k,
                                  gray_inverse_table(c.ring.k))
    else:
        raise GrcodesError(f'unknown enumerator kind {kind!r}')
    return WeightEnumerator.from_dict(kind, counts)


def is_self_orthogonal(c: LinearCode) -> bool:
    """ Pairwise orthogonal generators suffice by bilinearity."""
    generators = c.generators or tuple(c.rows())
    for i, a in enumerate(generators):
        for b in generators[i:]:
            if inner_product(a, b):
                return False
    return True


def is_self_dual(c: LinearCode) -> bool:
    return 2 * c.binary_rank == c.width and is_self_orthogonal(c)


def is_type_ii(c: LinearCode) -> bool:
    """
    Doubly even self-dual binary code. For a self-orthogonal code all
    weights are ≡ 0 mod 4 as soon as the basis weights are.
    """
    if not c.is_binary:
        raise NotBinary('Type II is defined for binary codes, '
                        'use the Gray image')
    return is_self_dual(c) and all(
        bin(row).count('1') % 4 == 0 for row in c.binary_basis)


def is_formally_self_dual(c: LinearCode, kind: str = HAMMING) -> bool:
    d = dual(c)
    if d.binary_rank != c.binary_rank:
        return False
    if d == c:
        return True
    return weight_enumerator(c, kind) == weight_enumerator(d, kind)


def check_permutation(c: LinearCode, perm: Sequence[int]) -> None:
    if len(perm) != c.length or sorted(perm) != list(range(c.length)):
        raise LengthMismatch(
            f'not a permutation of {c.length} coordinates')


def permute_code(c: LinearCode, perm: Sequence[int]) -> LinearCode:
    """ Moves coordinate j to perm[j]."""
    check_permutation(c, perm)
    w = c.ring.width
    images = []
    for row in c.binary_basis:
        image = 0
        for j in range(c.length):
            image |= ((row >> (j * w)) & c.ring.mask) << (perm[j] * w)
        images.append(image)
    return LinearCode.from_basis(c.ring, c.length, images)


def check_group_invariance(c: LinearCode, g: FiniteGroup) -> bool:
    """ C is fixed by every left translation j -> index(h·g_j)."""
    if g.order != c.length:
        raise LengthMismatch(
            f'group of order {g.order} on a code of length {c.length}')
    return all(permute_code(c, g.left_permutation(h)) == c
               for h in range(g.order))


def shift_equivalence_witness(v: GroupRingElement, h: int) -> Tuple[int, ...]:
    """ Permutation j -> index(g_j·h) taking C(v) onto C(v·h)."""
    return v.group.right_permutation(h)


def isodual_witness_check(c: LinearCode, perm: Sequence[int]) -> bool:
    """ True iff perm maps C exactly onto C^⊥."""
    return permute_code(c, perm) == dual(c)


def krawtchouk(n: int, j: int, i: int) -> int:
    return sum((-1) ** s * comb(i, s) * comb(n - i, j - s)
               for s in range(j + 1))


def macwilliams_transform(distribution: Dict[int, int], n: int
                          ) -> Dict[int, int]:
    """ Binary Hamming distribution of the dual code."""
    size = sum(distribution.values())
    result = {}
    for j in range(n + 1):
        total = sum(a * krawtchouk(n, j, i) for i, a in distribution.items())
        if total % size:
            raise GrcodesError('distribution is not a linear code')
        if total:
            result[j] = total // size
    return result


def macwilliams_check(c: LinearCode) -> bool:
    if not c.is_binary:
        raise NotBinary('MacWilliams check is implemented for binary codes')
    a = weight_enumerator(c).as_dict()
    b = weight_enumerator(dual(c)).as_dict()
    return macwilliams_transform(a, c.length) == b


CIRCULANT = 'circulant'
REVERSE_CIRCULANT = 'reverse-circulant'
GENERAL = 'general'


def classify(rows: Sequence[Sequence[int]]) -> str:
    n = len(rows)
    first = rows[0]
    if all(rows[i][j] == first[(j - i) % n]
           for i in range(n) for j in range(n)):
        return CIRCULANT
    if all(rows[i][j] == first[(j + i) % n]
           for i in range(n) for j in range(n)):
        return REVERSE_CIRCULANT
    return GENERAL


@dataclass(frozen=True)
class MatrixShape:
    """
    Detected structure of a square matrix.

    `kind` is circulant, reverse-circulant, ABBA for [[A,B],[B,A]], ABDA for
    [[A,B],[D,A]] or general; `blocks` classifies the four n/2 blocks.
    """
    kind: str
    blocks: Optional[Tuple[Tuple[str, str], Tuple[str, str]]] = None

    def __str__(self) -> str:
        if self.blocks is None:
            return self.kind
        (a, b), (d, _) = self.blocks
        if self.kind == 'ABBA':
            return f'[[A,B],[B,A]] A {a}, B {b}'
        if self.kind == 'ABDA':
            return f'[[A,B],[D,A]] A {a}, B {b}, D {d}'
        return self.kind


def matrix_shape(m: SigmaMatrix) -> MatrixShape:
    rows = m.rows()
    whole = classify(rows)
    if whole != GENERAL:
        return MatrixShape(whole)
    n = m.n
    if n % 2:
        return MatrixShape(GENERAL)
    h = n // 2
    a = [r[:h] for r in rows[:h]]
    b = [r[h:] for r in rows[:h]]
    d = [r[:h] for r in rows[h:]]
    a2 = [r[h:] for r in rows[h:]]
    blocks = ((classify(a), classify(b)), (classify(d), classify(a2)))
    if a != a2:
        return MatrixShape(GENERAL, blocks)
    return MatrixShape('ABBA' if b == d else 'ABDA', blocks)


def generator_matrix_text(c: LinearCode) -> List[str]:
    """ Binary basis rows as 0/1 strings."""
    return [gf2.to_bits(row, c.width) for row in c.binary_basis]


def double_block_code(a_rows: Sequence[Sequence[int]],
                      b_rows: Sequence[Sequence[int]]) -> LinearCode:
    """ Binary code generated by [[A, B], [B, A]]."""
    rows = ([list(x) + list(y) for x, y in zip(a_rows, b_rows)] +
            [list(y) + list(x) for x, y in zip(a_rows, b_rows)])
    return LinearCode.from_rows(F2, rows, 2 * len(a_rows))


def identity_rows(n: int) -> List[List[int]]:
    return [[int(i == j) for j in range(n)] for i in range(n)]
