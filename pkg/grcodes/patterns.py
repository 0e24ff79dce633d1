"""
Built-in candidate sets, as pattern documents accepted by
:func:`grcodes.search.load_pattern`.

The Golay sets span the elements with σ(v) symmetric, one direction per
inverse orbit. The census sets fix the rotation part of v to the identity and
leave every reflection coefficient free.
"""
from typing import Any, Dict, List

GOLAY_FILTERS = ['symmetric', 'rank', 'distance', 'self_dual', 'type_ii']

GOLAY_C3D8 = [
    'e', 'a + a^3', 'a^2', 'z + z^2',
    'a*z*(e + a^2*z)', 'a^2*z*(e + z)', 'a*z*(a^2 + z)',
    'b', 'b*a', 'b*a^2', 'b*a^3',
    'b*(z + z^2)', 'b*(z + z^2)*a', 'b*(z + z^2)*a^2', 'b*(z + z^2)*a^3',
]

V4 = ('e', 'a', 'b', 'a*b')

GOLAY_C2A4 = (
    [f'{p}*{t}' for p in ('e', 'x') for t in V4] +
    [f'{p}*({t}*c + c^2*{t})' for p in ('e', 'x') for t in V4])

GOLAY_SL23 = [
    'e', 'x + x^5', 'x^2 + x^4', 'x^3',
    'y + x^3y^2', 'xy + x^4y', 'x^2y + y^2x', 'x^3y + y^2',
    'x^5y + x^3y^2x', 'xy^2 + x^5y^2x', 'x^2y^2 + x^5y^2',
    'x^4y^2 + x^2y^2x', 'xy^2x + x^4y^2x',
]

KLEIN = ('e', 'z', 'w', 'z*w')

GOLAY_C22D6 = (list(KLEIN) +
               [f'(a + a^2)*{k}' for k in KLEIN] +
               [f'b*a^{i}*{k}' for i in range(3) for k in KLEIN])


def reflections(rotations: int, cyclic: int) -> List[str]:
    """ a·b^j·h^i for every rotation power j and cyclic power i."""
    return [f'a*b^{j}*h^{i}' for i in range(cyclic) for j in range(rotations)]


BUILTIN_PATTERNS: Dict[str, Dict[str, Any]] = {
    'golay_c3d8': {
        'group': 'c3:z x d8 @csd',
        'fixed': '0',
        'free': GOLAY_C3D8,
        'filters': GOLAY_FILTERS,
        'distance': 8,
        'expected': {'candidates': 32768, 'distance': 128, 'self_dual': 128,
                     'type_ii': 128},
    },
    'golay_c2a4': {
        'group': 'c2:x x a4',
        'fixed': '0',
        'free': GOLAY_C2A4,
        'filters': GOLAY_FILTERS,
        'distance': 8,
        'expected': {'candidates': 65536, 'distance': 384, 'self_dual': 384,
                     'type_ii': 384},
    },
    'golay_g24_8': {
        'group': 'g24_8',
        'fixed': '0',
        'free': 'symmetric',
        'filters': GOLAY_FILTERS,
        'distance': 8,
        'expected': {'candidates': 131072, 'distance': 576,
                     'self_dual': 576, 'type_ii': 576},
    },
    'golay_sl23': {
        'group': 'sl23',
        'fixed': '0',
        'free': GOLAY_SL23,
        'filters': GOLAY_FILTERS,
        'distance': 8,
        'expected': {'candidates': 8192, 'distance': 0},
    },
    'golay_c22d6': {
        'group': 'c2:w x c2:z x d6 @csd',
        'fixed': '0',
        'free': GOLAY_C22D6,
        'filters': GOLAY_FILTERS,
        'distance': 8,
        'expected': {'candidates': 1048576, 'distance': 0},
        'slow': True,
    },
    'census_c3d8': {
        'group': 'c3 x d8:ba @csd',
        'fixed': 'e',
        'free': reflections(4, 3),
        'filters': ['rank'],
        'classify': True,
        'expected': {
            'candidates': 4096,
            'rank': 256,
            'class:self_dual': 64,
            'class:formally_self_dual': 192,
            'class:formally_self_dual:d=6': 80,
            'class:formally_self_dual:d=4': 112,
        },
    },
    'census_c4d8': {
        'group': 'c4 x d8:ba @csd',
        'fixed': 'e',
        'free': reflections(4, 4),
        'filters': ['rank'],
        'classify': True,
        'expected': {
            'candidates': 65536,
            'rank': 2048,
            'class:self_dual': 512,
            'class:formally_self_dual': 1536,
            'class:formally_self_dual:d=4': 896,
            'class:formally_self_dual:d=6': 192,
            'class:formally_self_dual:d=8': 448,
        },
        'slow': True,
    },
    'selfdual_d48': {
        'group': 'd48:ba',
        'fixed': 'e',
        'free': [f'a*b^{j}' for j in range(24)],
        'filters': ['rank', 'self_dual'],
        'limit': 4096,
        'witnesses': 1,
    },
}
