"""
𝔽₂ linear algebra on bit-packed rows and exhaustive codeword enumeration.

Rows are python ints with coordinate j at bit j. Enumeration packs words
into uint64 limbs and walks the code in blocks: a table of all combinations
of the low basis rows, XORed with a Gray-code walk over the high rows.
"""
import logging
from collections import Counter
from typing import Dict, Iterable, Iterator, List, Optional, Sequence, Tuple

import numpy as np

from grcodes import config
from grcodes.exceptions import EnumerationTooLarge

logger = logging.getLogger(__name__)

LIMB_BITS = 64

M55 = np.uint64(0x5555555555555555)
M33 = np.uint64(0x3333333333333333)
M0F = np.uint64(0x0F0F0F0F0F0F0F0F)
M01 = np.uint64(0x0101010101010101)


def reduce_rows(rows: Iterable[int]) -> List[int]:
    """
    Reduced row echelon basis of the span of `rows`.

    Each pivot is the lowest set bit of its row and no other basis row has
    that bit; rows are sorted by pivot.
    """
    pivots: Dict[int, int] = {}
    for row in rows:
        while row:
            low = row & -row
            if low not in pivots:
                break
            row ^= pivots[low]
        if not row:
            continue
        low = row & -row
        for bit, pivot_row in pivots.items():
            if row & bit:
                row ^= pivot_row
        for bit, pivot_row in pivots.items():
            if pivot_row & low:
                pivots[bit] = pivot_row ^ row
        pivots[low] = row
    return [pivots[bit] for bit in sorted(pivots)]


def rank(rows: Iterable[int]) -> int:
    """ 𝔽₂ rank of rows without keeping a reduced basis."""
    pivots: Dict[int, int] = {}
    for row in rows:
        while row:
            low = row & -row
            if low not in pivots:
                pivots[low] = row
                break
            row ^= pivots[low]
    return len(pivots)


def nullspace(rows: Sequence[int], width: int) -> List[int]:
    """ Basis of {x : <x, r> = 0 for every row r}, x of `width` bits."""
    basis = reduce_rows(rows)
    pivot_of = {row & -row: row for row in basis}
    result = []
    for free in range(width):
        bit = 1 << free
        if bit in pivot_of:
            continue
        x = bit
        for pivot, row in pivot_of.items():
            if row & bit:
                x |= pivot
        result.append(x)
    return result


def dot(a: int, b: int) -> int:
    return bin(a & b).count('1') & 1


def to_bits(row: int, width: int) -> str:
    """ 0/1 string, coordinate 0 first."""
    return ''.join('1' if row >> j & 1 else '0' for j in range(width))


def from_bits(text: str) -> int:
    return sum(1 << j for j, ch in enumerate(text.strip()) if ch == '1')


def limbs(width: int) -> int:
    return max(1, -(-width // LIMB_BITS))


def pack(rows: Sequence[int], width: int) -> np.ndarray:
    """ Rows as a (len(rows), limbs) uint64 array."""
    count = limbs(width)
    out = np.zeros((len(rows), count), dtype=np.uint64)
    mask = (1 << LIMB_BITS) - 1
    for i, row in enumerate(rows):
        for limb in range(count):
            out[i, limb] = (row >> (limb * LIMB_BITS)) & mask
    return out


def unpack(words: np.ndarray) -> List[int]:
    result = []
    for word in words:
        value = 0
        for limb, part in enumerate(word):
            value |= int(part) << (limb * LIMB_BITS)
        result.append(value)
    return result


def bit_count(arr: np.ndarray) -> np.ndarray:
    """ Per-element popcount of a uint64 array."""
    arr = arr - ((arr >> np.uint64(1)) & M55)
    arr = (arr & M33) + ((arr >> np.uint64(2)) & M33)
    arr = (arr + (arr >> np.uint64(4))) & M0F
    return (arr * M01) >> np.uint64(56)


def block_starts(block: int) -> np.uint64:
    """ Mask of the first bit of every `block`-bit field of a limb."""
    return np.uint64(sum(1 << j for j in range(0, LIMB_BITS, block)))


def weights(words: np.ndarray, block: int = 1) -> np.ndarray:
    """
    Number of nonzero `block`-bit fields per word; block 1 is the Hamming
    weight of the binary word.
    """
    if block > 1:
        folded = words.copy()
        shift = 1
        while shift < block:
            folded |= folded >> np.uint64(shift)
            shift <<= 1
        words = folded & block_starts(block)
    return bit_count(words).sum(axis=1).astype(np.int64)


def codeword_blocks(basis: Sequence[int], width: int,
                    chunk_bits: int = config.ENUMERATION_CHUNK_BITS
                    ) -> Iterator[np.ndarray]:
    """
    Yields all 2^len(basis) codewords, each exactly once, in blocks.
    """
    r = len(basis)
    if r > config.MAX_ENUMERATION_RANK:
        raise EnumerationTooLarge(
            f'code too large to enumerate: rank {r} exceeds '
            f'{config.MAX_ENUMERATION_RANK}')
    packed = pack(basis, width)
    low = min(r, chunk_bits)
    table = np.zeros((1, limbs(width)), dtype=np.uint64)
    for i in range(low):
        table = np.concatenate([table, table ^ packed[i]])
    high = packed[low:]
    offset = np.zeros(limbs(width), dtype=np.uint64)
    yield table
    for step in range(1, 1 << len(high)):
        # Gray code: flip the row at the lowest set bit of step
        offset ^= high[(step & -step).bit_length() - 1]
        yield table ^ offset


def weight_distribution(basis: Sequence[int], width: int, block: int = 1
                        ) -> Dict[int, int]:
    """ Codeword count per weight, see `weights` for `block`."""
    counts = np.zeros(width // block + 1, dtype=np.int64)
    for words in codeword_blocks(basis, width):
        counts += np.bincount(weights(words, block), minlength=len(counts))
    return {w: int(c) for w, c in enumerate(counts) if c}


def minimum_weight(basis: Sequence[int], width: int, block: int = 1,
                   below: Optional[int] = None) -> Optional[int]:
    """
    Smallest nonzero weight, None for the zero code.

    With `below` the scan stops at the first word lighter than `below` and
    returns its weight, which is then only an upper bound.
    """
    if not basis:
        return None
    best = width // block + 1
    for words in codeword_blocks(basis, width):
        w = weights(words, block)
        nonzero = w[w > 0]
        if len(nonzero):
            best = min(best, int(nonzero.min()))
        if below is not None and best < below:
            break
    return best


def compositions(basis: Sequence[int], length: int, k: int,
                 inverse_gray: Sequence[int]
                 ) -> Dict[Tuple[Tuple[int, int], ...], int]:
    """
    Complete weight enumerator of a Gray image.

    Every codeword is decoded back to `length` ring symbols; the key is the
    sorted (symbol, count) composition.
    """
    block = 1 << k
    width = length * block
    decode = np.asarray(inverse_gray, dtype=np.int64)
    field = np.uint64((1 << block) - 1)
    result: Counter = Counter()
    for words in codeword_blocks(basis, width):
        symbols = np.empty((len(words), length), dtype=np.int64)
        for j in range(length):
            limb, offset = divmod(j * block, LIMB_BITS)
            symbols[:, j] = decode[
                ((words[:, limb] >> np.uint64(offset)) & field).astype(
                    np.int64)]
        symbols.sort(axis=1)
        rows, counts = np.unique(symbols, axis=0, return_counts=True)
        for row, count in zip(rows, counts):
            values, sizes = np.unique(row, return_counts=True)
            key = tuple((int(v), int(s)) for v, s in zip(values, sizes))
            result[key] += int(count)
    return dict(result)
