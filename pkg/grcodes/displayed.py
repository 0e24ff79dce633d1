"""
Generator matrices published for the worked examples, as 0/1 rows.

The Golay entries store only A of (I12 | A); the others store a full echelon
form. An entry may name the group ring element whose code it displays, in
which case verification also compares the two codes.

Worked examples published as elements rather than matrices are kept in
`DISPLAYED_ELEMENTS`, with the parameters of their binary images.
"""
import logging
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from grcodes import codes
from grcodes.exceptions import UnknownName
from grcodes.groupring import GroupRingElement, parse_element
from grcodes.groups import parse_group
from grcodes.rings import F2, RingSpec

logger = logging.getLogger(__name__)

GOLAY = (24, 12, 8)


@dataclass(frozen=True)
class DisplayedMatrix:
    name: str
    rows: Tuple[str, ...]
    parameters: Tuple[int, int, int]
    self_dual: bool
    type_ii: bool
    group: Optional[str] = None
    element: Optional[str] = None


@dataclass(frozen=True)
class DisplayedCheck:
    """ Outcome of `verify_displayed`."""
    name: str
    parameters: Tuple[int, int, Optional[int]]
    self_dual: bool
    type_ii: bool
    same_as_element: Optional[bool]
    mismatches: Tuple[str, ...]

    @property
    def passed(self) -> bool:
        return not self.mismatches


def identity_prefixed(a_rows: Sequence[str]) -> Tuple[str, ...]:
    """ Rows of (I | A)."""
    n = len(a_rows)
    return tuple('0' * i + '1' + '0' * (n - i - 1) + a
                 for i, a in enumerate(a_rows))


def golay(name: str, a_rows: Sequence[str]) -> DisplayedMatrix:
    return DisplayedMatrix(name, identity_prefixed(a_rows), GOLAY,
                           self_dual=True, type_ii=True)


DISPLAYED_MATRICES: Dict[str, DisplayedMatrix] = {m.name: m for m in [
    golay('r1a4', [
        '101100101101', '111001101010', '111110000110', '101010011011',
        '100111100011', '110011001101', '110101110100', '011010111100',
        '010111011010', '001111010101', '011100110011', '000001111111',
    ]),
    golay('c3d8', [
        '011111001100', '111010011001', '110100110011', '101101100110',
        '110001111100', '100111101001', '001111010011', '011010110110',
        '110011000111', '100110011110', '001100111101', '011001101011',
    ]),
    golay('c2a4', [
        '101101010011', '011110100011', '111001011100', '110110101100',
        '010111010110', '101011101001', '010101111001', '101010110110',
        '001101101110', '001110011101', '110010011011', '110001100111',
    ]),
    golay('g24_8', [
        '010110110011', '010011101110', '101010111010', '001111101001',
        '110111000101', '111001100011', '110000011111', '101101001110',
        '110101111000', '001011010111', '101100110101', '011110011100',
    ]),
    DisplayedMatrix(
        'hamming',
        ('10000111', '01001110', '00101101', '00011011'),
        (8, 4, 4), self_dual=True, type_ii=True,
        group='d8', element='1 + b*a + b*a^2 + b*a^3'),
    # echelon form of the other multiplication convention; parameters only
    DisplayedMatrix(
        'reed_muller',
        ('1000011101111000', '0100010010111011', '0010001011011101',
         '0001000111101110', '0000111100001111'),
        (16, 5, 8), self_dual=False, type_ii=False),
    DisplayedMatrix(
        'c2c2c2_v1',
        ('10000111', '01001011', '00101101', '00011110'),
        (8, 4, 4), self_dual=True, type_ii=True,
        group='c2c2c2', element='1 + x*z + y*z + x*y*z'),
    DisplayedMatrix(
        'c2c2c2_v2',
        ('10010011', '01010101', '00110110', '00001111'),
        (8, 4, 4), self_dual=True, type_ii=True),
]}


@dataclass(frozen=True)
class DisplayedElement:
    name: str
    ring: str
    group: str
    element: str
    # parameters of the binary image
    parameters: Tuple[int, int, int]
    self_dual: bool
    formally_self_dual: bool
    type_ii: bool = False

    def parse(self) -> GroupRingElement:
        return parse_element(self.element, RingSpec.parse(self.ring),
                             parse_group(self.group))


def census(name: str, s: int, element: str, distance: int
           ) -> DisplayedElement:
    """ Formally self-dual code over C_s × D8 with rotation part e."""
    n = 8 * s
    return DisplayedElement(name, 'f2', f'c{s} x d8:ba @csd', element,
                            (n, n // 2, distance), self_dual=False,
                            formally_self_dual=True)


DISPLAYED_ELEMENTS: Dict[str, DisplayedElement] = {e.name: e for e in [
    DisplayedElement(
        'r1a4_v1', 'r1', 'a4', 'u1 + a + b + c + a*c + c^2 + a*b*c^2',
        GOLAY, self_dual=True, formally_self_dual=True, type_ii=True),
    census('c3d8_v1', 3, '1 + a*(b + b*(1 + b)*(b*h + h^2))', 6),
    census('c3d8_v2', 3, '1 + a*(b^2 + h + b^3*h + h^2 + b*h^2)', 4),
    census('c4d8_v1', 4, '1 + a*(e + b + b^2 + b^3 + h)*h', 4),
    # printed with an extra a*h^3 term, which gives the whole space
    census('c4d8_v2', 4, '1 + a*(b + b^3 + h + (e + b + b^3)*h^2'
                         ' + (b + b^2 + b^3)*h^3)', 6),
    census('c4d8_v3', 4, '1 + a*(b*(e + h) + (e + b + b^2 + b^3)*h^2'
                         ' + (e + b^2 + b^3)*h^3)', 8),
]}


def displayed_names() -> List[str]:
    return sorted([*DISPLAYED_MATRICES, *DISPLAYED_ELEMENTS])


def displayed_code(name: str) -> codes.LinearCode:
    """ Binary code of a displayed matrix, or the Gray image of C(v)."""
    if name in DISPLAYED_ELEMENTS:
        v = DISPLAYED_ELEMENTS[name].parse()
        return codes.gray_image(codes.code_from_element(v))
    try:
        matrix = DISPLAYED_MATRICES[name]
    except KeyError:
        raise UnknownName(f'unknown displayed matrix {name!r}') from None
    return codes.code_from_binary_rows(matrix.rows)


def verify_displayed(name: str) -> DisplayedCheck:
    if name in DISPLAYED_ELEMENTS:
        return verify_displayed_element(name)
    return verify_displayed_matrix(name)


def verify_displayed_element(name: str) -> DisplayedCheck:
    """
    Builds C(v) for a displayed element and compares its image parameters
    and duality flags with the published ones.
    """
    try:
        entry = DISPLAYED_ELEMENTS[name]
    except KeyError:
        raise UnknownName(f'unknown displayed element {name!r}') from None
    code = codes.code_from_element(entry.parse())
    image = codes.gray_image(code)
    self_dual = codes.is_self_dual(code)
    formally_self_dual = codes.is_formally_self_dual(image)
    type_ii = self_dual and codes.is_type_ii(image)
    parameters = (image.length, codes.cardinality(image),
                  codes.min_distance(image))
    mismatches = []
    if parameters != entry.parameters:
        mismatches.append(f'parameters {list(parameters)}, expected '
                          f'{list(entry.parameters)}')
    if self_dual != entry.self_dual:
        mismatches.append(f'self_dual is {self_dual}')
    if formally_self_dual != entry.formally_self_dual:
        mismatches.append(f'formally_self_dual is {formally_self_dual}')
    if type_ii != entry.type_ii:
        mismatches.append(f'type_ii is {type_ii}')
    logger.debug('%s: %s', name, mismatches or 'ok')
    return DisplayedCheck(name, parameters, self_dual, type_ii, None,
                          tuple(mismatches))


def verify_displayed_matrix(name: str) -> DisplayedCheck:
    """
    Rebuilds the code of a displayed matrix and compares its parameters,
    duality and doubly-even flags with the published ones.
    """
    try:
        matrix = DISPLAYED_MATRICES[name]
    except KeyError:
        raise UnknownName(f'unknown displayed matrix {name!r}') from None
    code = codes.code_from_binary_rows(matrix.rows)
    distance = codes.min_distance(code)
    self_dual = codes.is_self_dual(code)
    type_ii = self_dual and codes.is_type_ii(code)
    parameters = (code.length, codes.cardinality(code), distance)
    mismatches = []
    if parameters != matrix.parameters:
        mismatches.append(f'parameters {list(parameters)}, expected '
                          f'{list(matrix.parameters)}')
    if self_dual != matrix.self_dual:
        mismatches.append(f'self_dual is {self_dual}')
    if type_ii != matrix.type_ii:
        mismatches.append(f'type_ii is {type_ii}')
    same: Optional[bool] = None
    if matrix.group is not None and matrix.element is not None:
        v = parse_element(matrix.element, F2, parse_group(matrix.group))
        same = codes.code_from_element(v) == code
        if not same:
            mismatches.append(f'differs from C({matrix.element})')
    logger.debug('%s: %s', name, mismatches or 'ok')
    return DisplayedCheck(name, parameters, self_dual, type_ii, same,
                          tuple(mismatches))
