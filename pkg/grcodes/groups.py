"""
Finite groups as validated Cayley tables.

The index order of a group is the coordinate order of every code built over
it, so each constructor documents the order it produces in `ordering_tag`.
"""
import json
import logging
import re
from dataclasses import dataclass, field
from functools import cached_property
from itertools import product
from pathlib import Path
from typing import (Any, Callable, Dict, Hashable, List, Mapping, Optional,
                    Sequence, Tuple)

import jsonschema
import numpy as np

from grcodes.exceptions import GroupError, ParseError, UnknownName
from grcodes.schemas import get_schema

logger = logging.getLogger(__name__)

CAYLEY_TABLE_SCHEMA = get_schema({
    "order": {"type": "integer", "minimum": 1},
    "names": {"type": "array", "items": {"type": "string"}},
    "identity": {"type": "integer", "minimum": 0},
    "table": {"type": "array", "items": {
        "type": "array", "items": {"type": "integer", "minimum": 0}}},
    "generators": {
        "type": "object",
        "properties": {},
        "additionalProperties": {"type": "integer", "minimum": 0},
    },
})
# generators are optional in table documents
CAYLEY_TABLE_SCHEMA["required"].remove("generators")

RESERVED_LETTERS = 'eu'

WORD_RE = re.compile(r'([a-z])(?:\^(\d+))?')


def word(letter: str, power: int) -> str:
    if power == 0:
        return 'e'
    if power == 1:
        return letter
    return f'{letter}^{power}'


def concat(*names: str) -> str:
    """ Joins element names, dropping identities."""
    joined = ''.join(n for n in names if n != 'e')
    return joined or 'e'


@dataclass(frozen=True)
class FiniteGroup:
    """
    Group of order n with elements g_0..g_{n-1}.

    ``table[i][j]`` is the index of g_i·g_j. Tables are checked for closure,
    cancellation, identity, inverses and associativity on construction.
    """
    names: Tuple[str, ...]
    table: Tuple[Tuple[int, ...], ...]
    identity: int
    inverse: Tuple[int, ...] = field(compare=False)
    ordering_tag: str = field(default='table', compare=False)
    generators: Tuple[Tuple[str, int], ...] = field(default=(), compare=False)

    def __post_init__(self) -> None:
        n = len(self.names)
        if n == 0:
            raise GroupError('empty group')
        if len(set(self.names)) != n:
            raise GroupError('duplicate element names')
        if len(self.table) != n or any(len(row) != n for row in self.table):
            raise GroupError(f'table must be {n}x{n}')
        t = self.array
        if t.min() < 0 or t.max() >= n:
            raise GroupError('table entry out of range')
        expected = np.arange(n)
        for axis in (0, 1):
            if not (np.sort(t, axis=axis) == expected.reshape(
                    (-1, 1) if axis == 0 else (1, -1))).all():
                raise GroupError('not cancellative')
        e = self.identity
        if not 0 <= e < n or not ((t[e] == expected).all() and
                                  (t[:, e] == expected).all()):
            raise GroupError(f'bad identity {e}')
        inv = np.asarray(self.inverse)
        if len(inv) != n or (t[expected, inv] != e).any():
            raise GroupError('bad inverse table')
        # (g_i g_j) g_l against g_i (g_j g_l)
        mismatch = t[t] != t[:, t]
        if mismatch.any():
            i, j, l = (int(x) for x in np.argwhere(mismatch)[0])
            raise GroupError('not associative', (i, j, l))
        for letter, index in self.generators:
            if len(letter) != 1 or letter in RESERVED_LETTERS:
                raise GroupError(f'bad generator letter {letter!r}')
            if not 0 <= index < n:
                raise GroupError(f'generator {letter} out of range')

    @classmethod
    def from_table(cls, names: Sequence[str],
                   table: Sequence[Sequence[int]],
                   identity: Optional[int] = None,
                   generators: Sequence[Tuple[str, int]] = (),
                   ordering_tag: str = 'table') -> 'FiniteGroup':
        """ Builds a group, deriving identity and inverses from the table."""
        rows = tuple(tuple(int(x) for x in row) for row in table)
        n = len(rows)
        if identity is None:
            identity = next((i for i in range(n)
                             if rows[i] == tuple(range(n))), 0)
        inverse = []
        for i in range(n):
            try:
                inverse.append(rows[i].index(identity))
            except ValueError:
                raise GroupError('not cancellative') from None
        return cls(tuple(names), rows, identity, tuple(inverse),
                   ordering_tag, tuple(generators))

    @cached_property
    def array(self) -> np.ndarray:
        return np.array(self.table, dtype=np.intp)

    @property
    def order(self) -> int:
        return len(self.names)

    @cached_property
    def indices(self) -> Dict[str, int]:
        return {name: i for i, name in enumerate(self.names)}

    def element(self, name: str) -> int:
        """ Index of the element called `name`."""
        try:
            return self.indices[name]
        except KeyError:
            raise UnknownName(f'no element {name!r} in group') from None

    def generator(self, letter: str) -> int:
        for name, index in self.generators:
            if name == letter:
                return index
        raise UnknownName(f'no generator {letter!r} in group')

    def multiply(self, i: int, j: int) -> int:
        return self.table[i][j]

    def power(self, i: int, exponent: int) -> int:
        result = self.identity
        for _ in range(exponent % self.element_order(i)):
            result = self.table[result][i]
        return result

    def element_order(self, i: int) -> int:
        k, x = 1, i
        while x != self.identity:
            x = self.table[x][i]
            k += 1
        return k

    def left_permutation(self, g: int) -> Tuple[int, ...]:
        """ Index map j -> index(g·g_j)."""
        return self.table[g]

    def right_permutation(self, h: int) -> Tuple[int, ...]:
        """ Index map j -> index(g_j·h)."""
        return tuple(row[h] for row in self.table)

    def inverse_orbits(self) -> List[Tuple[int, ...]]:
        """ Classes {g, g⁻¹} in index order of their first element."""
        orbits = []
        for i, j in enumerate(self.inverse):
            if i < j:
                orbits.append((i, j))
            elif i == j:
                orbits.append((i,))
        return orbits

    def reordered(self, perm: Sequence[int], tag: str) -> 'FiniteGroup':
        """
        Same group listed in a new order: new element k is old perm[k].
        """
        n = self.order
        if sorted(perm) != list(range(n)):
            raise GroupError('reordering is not a permutation')
        position = [0] * n
        for new, old in enumerate(perm):
            position[old] = new
        table = [[position[self.table[a][b]] for b in perm] for a in perm]
        return FiniteGroup.from_table(
            [self.names[old] for old in perm], table,
            identity=position[self.identity],
            generators=[(g, position[i]) for g, i in self.generators],
            ordering_tag=tag)

    def renamed(self, letters: str) -> 'FiniteGroup':
        """
        Renames generator letters in order, e.g. 'ba' over the dihedral
        letters 'ab' swaps them.
        """
        old = ''.join(g for g, _ in self.generators)
        if len(letters) != len(old) or len(set(letters)) != len(letters):
            raise GroupError(
                f'need {len(old)} distinct letters to rename {old!r}')
        if set(letters) & set(RESERVED_LETTERS):
            raise GroupError(f'letters {RESERVED_LETTERS!r} are reserved')
        mapping = str.maketrans(old, letters)
        return FiniteGroup(
            tuple(name.translate(mapping) for name in self.names),
            self.table, self.identity, self.inverse, self.ordering_tag,
            tuple((g.translate(mapping), i) for g, i in self.generators))

    def evaluate_word(self, text: str) -> Optional[int]:
        """
        Index of a generator word such as 'ba^2', None if `text` is not a
        word over this group's generators.
        """
        if text == 'e':
            return self.identity
        letters = dict(self.generators)
        result = self.identity
        pos = 0
        for match in WORD_RE.finditer(text):
            if match.start() != pos or match.group(1) not in letters:
                return None
            exponent = int(match.group(2) or 1)
            result = self.table[result][
                self.power(letters[match.group(1)], exponent)]
            pos = match.end()
        if pos != len(text) or not text:
            return None
        return result

    @cached_property
    def printable_names(self) -> Tuple[str, ...]:
        """ Names that re-parse to their element; others are bracketed."""
        return tuple(
            name if self.evaluate_word(name) == i else f'[{name}]'
            for i, name in enumerate(self.names))

    def to_document(self) -> Dict[str, Any]:
        """ Cayley table document accepted by load_cayley_table."""
        return {
            "order": self.order,
            "names": list(self.names),
            "identity": self.identity,
            "table": [list(row) for row in self.table],
            "generators": dict(self.generators),
        }


def closure_group(elements: Sequence[Tuple[str, Hashable]],
                  mul: Callable[[Any, Any], Hashable],
                  generators: str, ordering_tag: str) -> FiniteGroup:
    """
    Builds the Cayley table of named concrete elements.

    `elements` lists (name, value) pairs in index order; products are looked
    up by value, so the list must be closed under `mul`.
    """
    lookup = {value: i for i, (_, value) in enumerate(elements)}
    if len(lookup) != len(elements):
        raise GroupError('element words are not distinct')
    table = []
    for _, x in elements:
        row = []
        for _, y in elements:
            try:
                row.append(lookup[mul(x, y)])
            except KeyError:
                raise GroupError('element words are not closed') from None
        table.append(row)
    names = [name for name, _ in elements]
    return FiniteGroup.from_table(
        names, table,
        generators=[(g, names.index(g)) for g in generators],
        ordering_tag=ordering_tag)


def make_cyclic(n: int) -> FiniteGroup:
    """ C_n = <h>, ordered h^0, h^1, ..., h^(n-1)."""
    if n < 1:
        raise GroupError(f'cyclic order must be positive, got {n}')
    return closure_group([(word('h', i), i) for i in range(n)],
                         lambda x, y: (x + y) % n,
                         'h' if n > 1 else '', 'cyclic')


def reorder_cyclic_even_odd(g: FiniteGroup) -> FiniteGroup:
    """ Lists even powers of the generator first, then odd powers."""
    if g.ordering_tag != 'cyclic':
        raise GroupError('even/odd ordering needs a cyclic group')
    if g.order % 2:
        raise GroupError(f'even/odd ordering needs even order, got odd '
                         f'order {g.order}')
    perm = list(range(0, g.order, 2)) + list(range(1, g.order, 2))
    return g.reordered(perm, 'cyclic:evenodd')


def make_dihedral(order: int, letters: str = 'ab') -> FiniteGroup:
    """
    D_order with rotation letters[0] and reflection letters[1].

    Rotations r^j come first, then f·r^j, so the default naming lists
    e, a, a^2, ..., b, ba, ba^2, ...
    """
    if order < 4 or order % 2:
        raise GroupError(f'dihedral order must be even and at least 4, '
                         f'got {order}')
    if len(letters) != 2 or len(set(letters)) != 2:
        raise GroupError(f'dihedral groups need two letters, '
                         f'got {letters!r}')
    m = order // 2
    r, f = letters

    def mul(x: Tuple[int, int], y: Tuple[int, int]) -> Tuple[int, int]:
        s, j = x
        t, l = y
        return (s + t) % 2, (j * (-1) ** t + l) % m

    elements = [(concat(word(f, s), word(r, j)), (s, j))
                for s in (0, 1) for j in range(m)]
    return closure_group(elements, mul, letters, 'dihedral')


def make_direct_product(g: FiniteGroup, h: FiniteGroup,
                        csd: bool = False) -> FiniteGroup:
    """
    G × H with (g_i, h_j) at index i·|H| + j.

    With `csd` the last factor must be dihedral D_2m, and the order becomes
    all (g_i, rotation) pairs first, then all (g_i, reflection) pairs, each
    half running through the rotation powers for g_0, then g_1, ...
    """
    letters = [x for x, _ in g.generators] + [x for x, _ in h.generators]
    if len(set(letters)) != len(letters):
        raise GroupError(f'factors share generator letters: '
                         f'{"".join(letters)}')
    n = h.order
    names = [concat(a, b) for a in g.names for b in h.names]
    table = [[g.table[i1][i2] * n + h.table[j1][j2]
              for i2 in range(g.order) for j2 in range(n)]
             for i1 in range(g.order) for j1 in range(n)]
    generators = ([(x, i * n + h.identity) for x, i in g.generators] +
                  [(x, g.identity * n + j) for x, j in h.generators])
    group = FiniteGroup.from_table(
        names, table, g.identity * n + h.identity, generators,
        f'{g.ordering_tag} x {h.ordering_tag}')
    if not csd:
        return group
    if not h.ordering_tag.startswith('dihedral'):
        raise GroupError('csd ordering needs a dihedral last factor')
    m = n // 2
    perm = ([k * n + d for k in range(g.order) for d in range(m)] +
            [k * n + m + d for k in range(g.order) for d in range(m)])
    return group.reordered(perm, f'{group.ordering_tag} @csd')


def permutation_mul(x: Tuple[int, ...], y: Tuple[int, ...]
                    ) -> Tuple[int, ...]:
    """ Left-to-right composition: x is applied first."""
    return tuple(y[x[i]] for i in range(len(x)))


def matrix_mul_mod3(x: Tuple[int, ...], y: Tuple[int, ...]
                    ) -> Tuple[int, ...]:
    a, b, c, d = x
    e, f, g, h = y
    return ((a * e + b * g) % 3, (a * f + b * h) % 3,
            (c * e + d * g) % 3, (c * f + d * h) % 3)


def evaluate_word(letters: str, values: Mapping[str, Any],
                  mul: Callable[[Any, Any], Any], one: Any) -> Any:
    result = one
    for letter in letters:
        result = mul(result, values[letter])
    return result


def klein_words() -> List[str]:
    return ['', 'a', 'b', 'ab']


def make_a4() -> FiniteGroup:
    """
    A4 with a=(1,2)(3,4), b=(1,3)(2,4), c=(1,2,3), listed as t·c^i for
    t in e, a, b, ab.
    """
    values = {'a': (1, 0, 3, 2), 'b': (2, 3, 0, 1), 'c': (1, 2, 0, 3)}
    words = [t + 'c' * i for i in range(3) for t in klein_words()]
    return closure_group(
        [(a4_name(w), evaluate_word(w, values, permutation_mul,
                                    (0, 1, 2, 3))) for w in words],
        permutation_mul, 'abc', 'a4')


def a4_name(letters: str) -> str:
    """ 'abcc' -> 'abc^2'."""
    if not letters:
        return 'e'
    return re.sub(r'(\w)\1+', lambda m: word(m.group(1), len(m.group(0))),
                  letters)


def make_s4() -> FiniteGroup:
    """ S4 = A4 ∪ A4·d with d=(1,2); A4 listed as in make_a4."""
    values = {'a': (1, 0, 3, 2), 'b': (2, 3, 0, 1), 'c': (1, 2, 0, 3),
              'd': (1, 0, 2, 3)}
    words = [t + 'c' * i for i in range(3) for t in klein_words()]
    words += [w + 'd' for w in words]
    return closure_group(
        [(a4_name(w), evaluate_word(w, values, permutation_mul,
                                    (0, 1, 2, 3))) for w in words],
        permutation_mul, 'abcd', 's4')


def make_sl23() -> FiniteGroup:
    """
    SL(2,3) = <x, y | x^3 = y^3 = (xy)^2>, x and y of order 6, listed as
    x^i, x^i·y, x^i·y^2, x^i·y^2·x for i = 0..5.
    """
    values = {'x': (2, 2, 0, 2), 'y': (2, 0, 2, 2)}
    suffixes = ['', 'y', 'yy', 'yyx']
    elements = []
    for suffix in suffixes:
        for i in range(6):
            letters = 'x' * i + suffix
            elements.append((a4_name(letters),
                             evaluate_word(letters, values, matrix_mul_mod3,
                                           (1, 0, 0, 1))))
    return closure_group(elements, matrix_mul_mod3, 'xy', 'sl23')


def make_m16() -> FiniteGroup:
    """ M16 = <s, t | s^8 = t^2 = 1, st = ts^5>, listed s^i then s^i·t."""
    def mul(x: Tuple[int, int], y: Tuple[int, int]) -> Tuple[int, int]:
        i, eps = x
        j, delta = y
        return (i + 5 ** eps * j) % 8, eps ^ delta

    elements = [(concat(word('s', i), word('t', eps)), (i, eps))
                for eps in (0, 1) for i in range(8)]
    return closure_group(elements, mul, 'st', 'm16')


def make_g24_8() -> FiniteGroup:
    """
    (C6 × C2) ⋊ C2 = <x, y, z | x^3 = y^4 = z^2 = 1, xy = yx^2, xz = zx,
    yz = zy^3>, element x^p·y^q·z^r at index q + 4p + 12r.
    """
    def mul(a: Tuple[int, int, int], b: Tuple[int, int, int]
            ) -> Tuple[int, int, int]:
        p, q, r = a
        p2, q2, r2 = b
        return ((p + p2 * (-1) ** q) % 3, (q + q2 * (-1) ** r) % 4,
                (r + r2) % 2)

    elements = [(concat(word('x', p), word('y', q), word('z', r)), (p, q, r))
                for r in range(2) for p in range(3) for q in range(4)]
    return closure_group(elements, mul, 'xyz', 'g24_8')


def make_c2c2c2() -> FiniteGroup:
    """ C2^3 with generators x, y, z; index x + 2y + 4z."""
    def mul(a: Tuple[int, ...], b: Tuple[int, ...]) -> Tuple[int, ...]:
        return tuple(s ^ t for s, t in zip(a, b))

    elements = []
    for z, y, x in product((0, 1), repeat=3):
        elements.append((concat(word('x', x), word('y', y), word('z', z)),
                         (x, y, z)))
    return closure_group(elements, mul, 'xyz', 'c2c2c2')


NAMED_GROUPS: Dict[str, Callable[[], FiniteGroup]] = {
    'a4': make_a4,
    's4': make_s4,
    'sl23': make_sl23,
    'm16': make_m16,
    'g24_8': make_g24_8,
    'c2c2c2': make_c2c2c2,
}


def make_named(name: str) -> FiniteGroup:
    """ Built-in group by name, including c<n> and d<n>."""
    key = name.strip().lower()
    match = re.fullmatch(r'([cd])(\d+)', key)
    if match is not None:
        kind, n = match.group(1), int(match.group(2))
        return make_cyclic(n) if kind == 'c' else make_dihedral(n)
    try:
        return NAMED_GROUPS[key]()
    except KeyError:
        raise UnknownName(f'unknown group {name!r}') from None


def load_cayley_table(document: Mapping[str, Any]) -> FiniteGroup:
    """
    Reads a Cayley table document::

        {"order": n, "names": [...], "identity": i, "table": [[...], ...],
         "generators": {"a": 1}}

    Without "generators", single-letter element names other than e and u
    become generators.
    """
    try:
        jsonschema.validate(document, CAYLEY_TABLE_SCHEMA)
    except jsonschema.ValidationError as e:
        raise GroupError(f'invalid table document: {e.message}') from None
    n = document['order']
    names = document['names']
    if len(names) != n or len(document['table']) != n:
        raise GroupError(f'document order {n} does not match names and table')
    if document['identity'] >= n:
        raise GroupError(f'bad identity {document["identity"]}')
    generators = document.get('generators')
    if generators is None:
        generators = {name: i for i, name in enumerate(names)
                      if len(name) == 1 and name not in RESERVED_LETTERS}
    return FiniteGroup.from_table(names, document['table'],
                                  document['identity'],
                                  sorted(generators.items()))


def parse_factor(token: str) -> FiniteGroup:
    name, _, letters = token.partition(':')
    group = make_named(name)
    if letters:
        if name.strip().lower().startswith('d'):
            # letters are (rotation, reflection)
            group = make_dihedral(group.order, letters) if len(
                letters) == 2 else group.renamed(letters)
        else:
            group = group.renamed(letters)
    return group


def parse_group(descriptor: str) -> FiniteGroup:
    """
    Reads a group descriptor.

    Factors are built-in names with optional generator renaming, joined by
    ``x`` tokens: ``c3:z x d8 @csd``. A path ending with ``.json`` loads a
    Cayley table document.
    """
    text = descriptor.strip()
    if text.endswith('.json'):
        path = Path(text)
        try:
            with path.open() as f:
                document = json.load(f)
        except (OSError, ValueError) as e:
            raise GroupError(f'cannot read table {text}: {e}') from None
        return load_cayley_table(document)
    modifiers = re.findall(r'@(\w+)', text)
    body = re.sub(r'@\w+', ' ', text)
    tokens = body.split()
    if not tokens:
        raise ParseError('empty group descriptor', descriptor, 0)
    factors = tokens[::2]
    if any(t.lower() != 'x' for t in tokens[1::2]) or len(tokens) % 2 == 0:
        raise ParseError("factors must be separated by 'x'", descriptor,
                         max(descriptor.find(' '), 0))
    unknown = set(modifiers) - {'csd', 'evenodd'}
    if unknown:
        bad = sorted(unknown)[0]
        raise ParseError(f'unknown ordering modifier @{bad}', descriptor,
                         descriptor.find('@' + bad))
    groups = [parse_factor(f) for f in factors]
    group = groups[0]
    for i, other in enumerate(groups[1:], start=1):
        last = i == len(groups) - 1
        group = make_direct_product(group, other,
                                    csd=last and 'csd' in modifiers)
    if 'csd' in modifiers and len(groups) == 1:
        raise GroupError('csd ordering needs a product C_s x D_2k')
    if 'evenodd' in modifiers:
        group = reorder_cyclic_even_odd(group)
    logger.debug("group %s: order %d, ordering %s",
                 descriptor, group.order, group.ordering_tag)
    return group
