"""
Coefficient rings 𝔽₂ and R_k = 𝔽₂[u_1, ..., u_k] / (u_i², u_i u_j - u_j u_i).

A value is stored as a 2^k-bit mask: bit S holds the coefficient of the
monomial u_S, where bit i of S stands for u_{i+1}. 𝔽₂ is R_0, a single bit.
"""
import functools
import re
from dataclasses import dataclass
from typing import Iterator, List, Tuple

from grcodes import config, parser
from grcodes.exceptions import (GrcodesError, ParseError, RingMismatch,
                                UnknownName)


def bits(mask: int) -> Iterator[int]:
    """ Positions of set bits, lowest first."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def popcount(mask: int) -> int:
    return bin(mask).count('1')


@functools.lru_cache(maxsize=1 << 16)
def mul_coeffs(a: int, b: int) -> int:
    """
    Multiplies two coefficient masks.

    u_S u_T is u_{S∪T} for disjoint S and T and vanishes otherwise, so the
    product is a subset convolution. The result does not depend on k.
    """
    result = 0
    for s in bits(a):
        for t in bits(b):
            if not s & t:
                result ^= 1 << (s | t)
    return result


@functools.lru_cache(maxsize=None)
def gray_table(k: int) -> Tuple[int, ...]:
    """
    Gray images of all R_k values, indexed by coefficient mask.

    a = x + y u_k maps to (φ(y), φ(x + y)); the first half lands in the low
    bits of the image.
    """
    if k == 0:
        return 0, 1
    previous = gray_table(k - 1)
    half = 1 << (k - 1)
    low = (1 << half) - 1
    table: List[int] = []
    for value in range(1 << (1 << k)):
        x, y = value & low, value >> half
        table.append(previous[y] | previous[x ^ y] << half)
    return tuple(table)


@functools.lru_cache(maxsize=None)
def gray_inverse_table(k: int) -> Tuple[int, ...]:
    table = gray_table(k)
    inverse = [0] * len(table)
    for value, image in enumerate(table):
        inverse[image] = value
    return tuple(inverse)


def monomial_name(subset: int) -> str:
    if not subset:
        return '1'
    return ''.join(f'u{i + 1}' for i in bits(subset))


@dataclass(frozen=True)
class RingSpec:
    """
    The ring R_k; k=0 denotes 𝔽₂.

    >>> RingSpec(2).size
    16
    >>> RingSpec.parse('r1') == RingSpec(1)
    True
    """
    k: int = 0

    def __post_init__(self) -> None:
        if not 0 <= self.k <= config.MAX_RING_K:
            raise GrcodesError(
                f'ring index must be in 0..{config.MAX_RING_K}, got {self.k}')

    @classmethod
    def parse(cls, descriptor: str) -> 'RingSpec':
        """ Reads 'f2' or 'r<k>'."""
        text = descriptor.strip().lower()
        if text in ('f2', 'gf2'):
            return cls(0)
        match = re.fullmatch(r'r(\d+)', text)
        if match is None:
            raise ParseError(f'unknown ring {descriptor!r}', descriptor, 0)
        k = int(match.group(1))
        if k > config.MAX_RING_K:
            raise ParseError(f'ring index {k} exceeds {config.MAX_RING_K}',
                             descriptor, 1)
        return cls(k)

    @property
    def name(self) -> str:
        return 'f2' if self.k == 0 else f'r{self.k}'

    @property
    def width(self) -> int:
        """ Number of monomials, also the Gray image length."""
        return 1 << self.k

    @property
    def mask(self) -> int:
        return (1 << self.width) - 1

    @property
    def size(self) -> int:
        return 1 << self.width

    @property
    def is_binary(self) -> bool:
        return self.k == 0

    def __str__(self) -> str:
        return self.name

    def value(self, coeffs: int) -> 'RingValue':
        return RingValue(self, coeffs)

    def zero(self) -> 'RingValue':
        return RingValue(self, 0)

    def one(self) -> 'RingValue':
        return RingValue(self, 1)

    def generator(self, index: int) -> 'RingValue':
        """ Returns u_index."""
        if not 1 <= index <= self.k:
            raise UnknownName(f'{self.name} has no generator u{index}')
        return RingValue(self, 1 << (1 << (index - 1)))

    def values(self) -> Iterator['RingValue']:
        for coeffs in range(self.size):
            yield RingValue(self, coeffs)

    def monomials(self) -> range:
        """ Subset masks of all monomials u_S."""
        return range(self.width)

    def format(self, coeffs: int) -> str:
        """ Ring literal for a coefficient mask."""
        if not coeffs:
            return '0'
        order = sorted(bits(coeffs), key=lambda s: (popcount(s), s))
        return '+'.join(monomial_name(s) for s in order)


F2 = RingSpec(0)


@dataclass(frozen=True)
class RingValue:
    """ An element of R_k as a monomial coefficient mask."""
    spec: RingSpec
    coeffs: int = 0

    def __post_init__(self) -> None:
        if not 0 <= self.coeffs <= self.spec.mask:
            raise GrcodesError(
                f'{self.coeffs:#x} is not a value of {self.spec.name}')

    def check(self, other: 'RingValue') -> None:
        if other.spec != self.spec:
            raise RingMismatch(
                f'ring mismatch: {self.spec.name} and {other.spec.name}')

    def __add__(self, other: 'RingValue') -> 'RingValue':
        self.check(other)
        return RingValue(self.spec, self.coeffs ^ other.coeffs)

    def __mul__(self, other: 'RingValue') -> 'RingValue':
        self.check(other)
        return RingValue(self.spec, mul_coeffs(self.coeffs, other.coeffs))

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __str__(self) -> str:
        return self.spec.format(self.coeffs)

    @property
    def is_unit(self) -> bool:
        """ R_k is local with maximal ideal (u_1..u_k)."""
        return bool(self.coeffs & 1)

    def inverse(self) -> 'RingValue':
        """ (1+m)⁻¹ = 1 + m + m² + ..., m is nilpotent of degree k+1."""
        if not self.is_unit:
            raise GrcodesError(f'{self} is not a unit of {self.spec.name}')
        m = self.coeffs ^ 1
        result, term = 1, 1
        for _ in range(self.spec.k):
            term = mul_coeffs(term, m)
            result ^= term
        return RingValue(self.spec, result)

    def gray(self) -> int:
        """ Gray image as a width-bit mask, first component at bit 0."""
        return gray_table(self.spec.k)[self.coeffs]

    def lee_weight(self) -> int:
        return popcount(self.gray())


class RingAlgebra:
    """ Evaluates ring literals; group atoms are rejected."""

    def __init__(self, spec: RingSpec):
        self.spec = spec

    def zero(self) -> RingValue:
        return self.spec.zero()

    def one(self) -> RingValue:
        return self.spec.one()

    def ring_generator(self, index: int) -> RingValue:
        return self.spec.generator(index)

    def group_identity(self) -> RingValue:
        raise UnknownName('group identity in a ring literal')

    def group_element(self, name: str) -> RingValue:
        raise UnknownName(f'unexpected group element {name!r}')

    def add(self, a: RingValue, b: RingValue) -> RingValue:
        return a + b

    def mul(self, a: RingValue, b: RingValue) -> RingValue:
        return a * b


def ring_add(a: RingValue, b: RingValue) -> RingValue:
    return a + b


def ring_mul(a: RingValue, b: RingValue) -> RingValue:
    return a * b


def ring_inverse(a: RingValue) -> RingValue:
    return a.inverse()


def gray_map(a: RingValue) -> Tuple[int, ...]:
    """
    Gray image as a bit tuple.

    >>> gray_map(RingSpec(1).value(0b11))
    (1, 0)
    >>> gray_map(parse_ring_value('u1u2', RingSpec(2)))
    (1, 1, 1, 1)
    """
    image = a.gray()
    return tuple(image >> t & 1 for t in range(a.spec.width))


def gray_inverse(image: Tuple[int, ...], spec: RingSpec) -> RingValue:
    """ Ring value whose Gray image is the given bit tuple."""
    if len(image) != spec.width:
        raise GrcodesError(
            f'{spec.name} images have {spec.width} bits, got {len(image)}')
    mask = sum(bit << t for t, bit in enumerate(image))
    return RingValue(spec, gray_inverse_table(spec.k)[mask])


def lee_weight(a: RingValue) -> int:
    return a.lee_weight()


def parse_ring_value(text: str, spec: RingSpec) -> RingValue:
    """
    Reads a ring literal.

    >>> str(parse_ring_value('(1+u1)(1+u2)', RingSpec(2)))
    '1+u1+u2+u1u2'
    """
    return parser.parse(text, RingAlgebra(spec))
