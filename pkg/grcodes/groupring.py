"""
Elements of the group ring RG and the matrices σ(v).

σ(v) has entry (i, j) equal to the coefficient of g_i⁻¹·g_j in v, so row i
is the coefficient vector of g_i·v and the row space of σ(v) is the left
ideal generated by v.
"""
import random
from dataclasses import dataclass
from typing import Iterable, Iterator, List, Sequence, Tuple

import numpy as np

from grcodes import parser
from grcodes.exceptions import GrcodesError, RingMismatch, UnknownName
from grcodes.groups import FiniteGroup
from grcodes.rings import RingSpec, bits, mul_coeffs


@dataclass(frozen=True)
class GroupRingElement:
    """
    v = Σ α_i g_i with α_i stored as ring coefficient masks in the group's
    index order.
    """
    ring: RingSpec
    group: FiniteGroup
    coeffs: Tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.coeffs) != self.group.order:
            raise GrcodesError(
                f'{len(self.coeffs)} coefficients for a group of order '
                f'{self.group.order}')
        if any(not 0 <= c <= self.ring.mask for c in self.coeffs):
            raise GrcodesError(f'coefficient out of range for {self.ring}')

    @classmethod
    def zero(cls, ring: RingSpec, group: FiniteGroup) -> 'GroupRingElement':
        return cls(ring, group, (0,) * group.order)

    @classmethod
    def monomial(cls, ring: RingSpec, group: FiniteGroup, index: int,
                 coeff: int = 1) -> 'GroupRingElement':
        """ coeff·g_index."""
        coeffs = [0] * group.order
        coeffs[index] = coeff
        return cls(ring, group, tuple(coeffs))

    @classmethod
    def one(cls, ring: RingSpec, group: FiniteGroup) -> 'GroupRingElement':
        return cls.monomial(ring, group, group.identity)

    @classmethod
    def from_row(cls, ring: RingSpec, group: FiniteGroup,
                 row: Iterable[int]) -> 'GroupRingElement':
        """ Element with the given coefficient vector."""
        return cls(ring, group, tuple(int(c) for c in row))

    @classmethod
    def from_text(cls, text: str, ring: RingSpec, group: FiniteGroup
                  ) -> 'GroupRingElement':
        return parse_element(text, ring, group)

    def check(self, other: 'GroupRingElement') -> None:
        if other.ring != self.ring:
            raise RingMismatch(
                f'ring mismatch: {self.ring} and {other.ring}')
        if other.group != self.group:
            raise RingMismatch('elements belong to different groups')

    def support(self) -> Iterator[int]:
        return (i for i, c in enumerate(self.coeffs) if c)

    def __bool__(self) -> bool:
        return any(self.coeffs)

    def __add__(self, other: 'GroupRingElement') -> 'GroupRingElement':
        self.check(other)
        return GroupRingElement(
            self.ring, self.group,
            tuple(a ^ b for a, b in zip(self.coeffs, other.coeffs)))

    def __mul__(self, other: 'GroupRingElement') -> 'GroupRingElement':
        self.check(other)
        table = self.group.table
        result = [0] * self.group.order
        for j in self.support():
            a = self.coeffs[j]
            row = table[j]
            for l in other.support():
                result[row[l]] ^= mul_coeffs(a, other.coeffs[l])
        return GroupRingElement(self.ring, self.group, tuple(result))

    def scaled(self, coeff: int) -> 'GroupRingElement':
        """ Multiplies every coefficient by a ring value."""
        return GroupRingElement(
            self.ring, self.group,
            tuple(mul_coeffs(coeff, c) for c in self.coeffs))

    def right_shift(self, h: int) -> 'GroupRingElement':
        """ v·h."""
        return self * GroupRingElement.monomial(self.ring, self.group, h)

    def involution(self) -> 'GroupRingElement':
        """ v^T: the coefficient of g moves to g⁻¹."""
        result = [0] * self.group.order
        for i, c in enumerate(self.coeffs):
            result[self.group.inverse[i]] = c
        return GroupRingElement(self.ring, self.group, tuple(result))

    def sigma(self) -> 'SigmaMatrix':
        coeffs = np.array(self.coeffs, dtype=np.int64)
        inverse = np.array(self.group.inverse, dtype=np.intp)
        return SigmaMatrix(self.ring, coeffs[self.group.array[inverse]])

    def is_symmetric(self) -> bool:
        return self.sigma().is_symmetric()

    def __str__(self) -> str:
        terms = []
        names = self.group.printable_names
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            name = names[i]
            if c == 1:
                terms.append(name)
                continue
            coeff = self.ring.format(c)
            if '+' in coeff:
                coeff = f'({coeff})'
            terms.append(f'{coeff}*{name}')
        return ' + '.join(terms) or '0'


@dataclass(frozen=True, eq=False)
class SigmaMatrix:
    """ Square matrix over R_k; entries are coefficient masks."""
    ring: RingSpec
    entries: np.ndarray

    @property
    def n(self) -> int:
        return int(self.entries.shape[0])

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SigmaMatrix):
            return NotImplemented
        return (self.ring == other.ring and
                self.entries.shape == other.entries.shape and
                bool((self.entries == other.entries).all()))

    def check(self, other: 'SigmaMatrix') -> None:
        if other.ring != self.ring:
            raise RingMismatch(
                f'ring mismatch: {self.ring} and {other.ring}')
        if other.entries.shape != self.entries.shape:
            raise RingMismatch('matrix shapes differ')

    def __add__(self, other: 'SigmaMatrix') -> 'SigmaMatrix':
        self.check(other)
        return SigmaMatrix(self.ring, self.entries ^ other.entries)

    def __matmul__(self, other: 'SigmaMatrix') -> 'SigmaMatrix':
        """
        Matrix product over R_k as a sum of 𝔽₂ products of monomial bit
        planes.
        """
        self.check(other)
        result = np.zeros_like(self.entries)
        for s in self.ring.monomials():
            left = (self.entries >> s) & 1
            if not left.any():
                continue
            for t in self.ring.monomials():
                if s & t:
                    continue
                right = (other.entries >> t) & 1
                result ^= ((left @ right) & 1) << (s | t)
        return SigmaMatrix(self.ring, result)

    def transpose(self) -> 'SigmaMatrix':
        return SigmaMatrix(self.ring, self.entries.T.copy())

    def is_symmetric(self) -> bool:
        return bool((self.entries == self.entries.T).all())

    def rows(self) -> List[Tuple[int, ...]]:
        return [tuple(int(x) for x in row) for row in self.entries]

    @classmethod
    def from_rows(cls, ring: RingSpec, rows: Sequence[Sequence[int]]
                  ) -> 'SigmaMatrix':
        return cls(ring, np.array(rows, dtype=np.int64).reshape(
            len(rows), -1))


class GroupRingAlgebra:
    """ Evaluates element text inside RG."""

    def __init__(self, ring: RingSpec, group: FiniteGroup):
        self.ring = ring
        self.group = group

    def zero(self) -> GroupRingElement:
        return GroupRingElement.zero(self.ring, self.group)

    def one(self) -> GroupRingElement:
        return GroupRingElement.one(self.ring, self.group)

    def ring_generator(self, index: int) -> GroupRingElement:
        value = self.ring.generator(index)
        return GroupRingElement.monomial(self.ring, self.group,
                                         self.group.identity, value.coeffs)

    def group_identity(self) -> GroupRingElement:
        return self.one()

    def group_element(self, name: str) -> GroupRingElement:
        try:
            index = self.group.generator(name)
        except UnknownName:
            index = self.group.element(name)
        return GroupRingElement.monomial(self.ring, self.group, index)

    def add(self, a: GroupRingElement, b: GroupRingElement
            ) -> GroupRingElement:
        return a + b

    def mul(self, a: GroupRingElement, b: GroupRingElement
            ) -> GroupRingElement:
        return a * b


def parse_element(text: str, ring: RingSpec, group: FiniteGroup
                  ) -> GroupRingElement:
    """ Reads element text such as ``1 + b*a + (1+u1)*h^3``."""
    return parser.parse(text, GroupRingAlgebra(ring, group))


def gr_add(v: GroupRingElement, w: GroupRingElement) -> GroupRingElement:
    return v + w


def gr_mul(v: GroupRingElement, w: GroupRingElement) -> GroupRingElement:
    return v * w


def involution(v: GroupRingElement) -> GroupRingElement:
    return v.involution()


def sigma(v: GroupRingElement) -> SigmaMatrix:
    return v.sigma()


def sigma_is_symmetric(v: GroupRingElement) -> bool:
    return v.is_symmetric()


def random_element(ring: RingSpec, group: FiniteGroup, rng: random.Random
                   ) -> GroupRingElement:
    return GroupRingElement(
        ring, group,
        tuple(rng.getrandbits(ring.width) for _ in range(group.order)))


def coefficient_bits(v: GroupRingElement) -> Iterator[Tuple[int, int]]:
    """ (group index, monomial) pairs of the nonzero 𝔽₂ coefficients."""
    for i, c in enumerate(v.coeffs):
        for s in bits(c):
            yield i, s
