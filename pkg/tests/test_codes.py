import random
from unittest import TestCase

from grcodes import codes
from grcodes.exceptions import GrcodesError, LengthMismatch, NotBinary
from grcodes.groupring import parse_element, random_element
from grcodes.groups import make_cyclic, make_dihedral, parse_group
from grcodes.rings import F2, RingSpec
from grcodes.tests import checklists, mixins

R1 = RingSpec(1)
R2 = RingSpec(2)

HAMMING_ENUMERATOR = {0: 1, 4: 14, 8: 1}
GOLAY_ENUMERATOR = {0: 1, 8: 759, 12: 2576, 16: 759, 24: 1}


class HammingCodeTestCase(mixins.CodeTestsMixin,
                          checklists.CodeCheckList, TestCase):
    """ Extended Hamming code from the dihedral group of order 8."""
    group = 'd8'
    element = '1 + b*a + b*a^2 + b*a^3'
    parameters = (8, 4, 4)
    self_dual = True
    formally_self_dual = True
    enumerator = HAMMING_ENUMERATOR

    def test_type_ii(self):
        """ The extended Hamming code is doubly even."""
        self.assertTrue(codes.is_type_ii(self.get_code()))


class ElementaryAbelianHammingTestCase(mixins.CodeTestsMixin,
                                       checklists.CodeCheckList, TestCase):
    """ Extended Hamming code from C2 × C2 × C2."""
    group = 'c2c2c2'
    element = '1 + x*z + y*z + x*y*z'
    parameters = (8, 4, 4)
    self_dual = True
    formally_self_dual = True
    enumerator = HAMMING_ENUMERATOR


class ReedMullerTestCase(mixins.CodeTestsMixin,
                         checklists.CodeCheckList, TestCase):
    """ First order Reed-Muller code of length 16 from M16."""
    group = 'm16'
    element = '(e + t)*(e + s + s^2 + s^3)'
    parameters = (16, 5, 8)
    self_dual = False
    formally_self_dual = False
    enumerator = {0: 1, 8: 30, 16: 1}

    def test_product_order(self):
        """ The reversed product gives a different code."""
        g = self.get_group()
        v = parse_element('(e + s + s^2 + s^3)*(e + t)', F2, g)
        self.assertTupleEqual(self.code_parameters(
            codes.code_from_element(v)), (16, 5, 4))


class EvenOddCyclicR1TestCase(mixins.RingCodeTestsMixin,
                              checklists.RingCodeCheckList, TestCase):
    """ Self-dual code over R_1 of length 10 with a [20,10,4] image."""
    ring = 'r1'
    group = 'c10 @evenodd'
    element = 'e + u1*h + h^5 + u1*h^9'
    parameters = (10, 10, None)
    self_dual = True
    formally_self_dual = True
    image_parameters = (20, 10, 4)
    image_self_dual = True
    image_enumerator = {0: 1, 4: 5, 6: 80, 8: 250, 10: 352, 12: 250,
                        14: 80, 16: 5, 20: 1}


class CyclicR2TestCase(mixins.RingCodeTestsMixin,
                       checklists.RingCodeCheckList, TestCase):
    """
    Code over R_2 of length 6 whose Gray image is a formally self-dual
    [24,12,6] code that is not self-orthogonal.
    """
    ring = 'r2'
    group = 'c6'
    element = '1 + u2*h + (1+u1+u1u2)*h^3 + u1*h^5'
    parameters = (6, 12, None)
    self_dual = False
    formally_self_dual = True
    image_parameters = (24, 12, 6)
    image_self_dual = False
    image_enumerator = {0: 1, 6: 48, 8: 471, 10: 720, 12: 1616, 14: 720,
                        16: 471, 18: 48, 24: 1}

    def test_image_not_self_orthogonal(self):
        """ The binary image is not contained in its dual."""
        self.assertFalse(codes.is_self_orthogonal(self.get_image()))


class GolayR1A4TestCase(mixins.RingCodeTestsMixin,
                        checklists.RingCodeCheckList, TestCase):
    """ Symmetric element of R_1 A4 whose Gray image is the Golay code."""
    ring = 'r1'
    group = 'a4'
    element = 'u1 + a + b + c + a*c + c^2 + a*b*c^2'
    parameters = (12, 12, None)
    self_dual = True
    formally_self_dual = True
    image_parameters = (24, 12, 8)
    image_self_dual = True
    image_enumerator = GOLAY_ENUMERATOR

    def test_symmetric_square_zero(self):
        """ v is symmetric and v² = 0, so C(v) is self-orthogonal."""
        v = self.get_element()
        self.assertTrue(v.is_symmetric())
        self.assertFalse(v * v)

    def test_type_ii(self):
        """ The Gray image is doubly even."""
        self.assertTrue(codes.is_type_ii(self.get_image()))

    def test_printed_element(self):
        """
        The element printed next to the R_1 A4 matrix is not symmetric and
        gives a code of 2^18 words with a distance 4 image.
        """
        v = parse_element(
            'u1*(b + a*b + a*c + b*c^2) + (b*c + b*c^2)'
            ' + (1 + u1)*(c^2 + a*b*c^2)', R1, self.get_group())
        self.assertFalse(v.is_symmetric())
        self.assertTrue(v * v)
        c = codes.code_from_element(v)
        self.assertEqual(codes.cardinality(c), 18)
        self.assertEqual(codes.min_distance(codes.gray_image(c)), 4)


class LinearCodeTestCase(TestCase):
    """ Tests for code construction and membership."""

    def test_membership(self):
        """ A code contains its rows and their ring multiples."""
        c = codes.LinearCode.from_rows(R1, [(1, 2, 0)])
        self.assertIn((1, 2, 0), c)
        self.assertIn((2, 0, 0), c)
        self.assertIn((3, 2, 0), c)
        self.assertNotIn((0, 0, 1), c)

    def test_equality(self):
        """ Different generators of one code compare equal."""
        a = codes.LinearCode.from_rows(F2, [(1, 1, 0), (0, 1, 1)])
        b = codes.LinearCode.from_rows(F2, [(1, 0, 1), (1, 1, 0)])
        self.assertEqual(a, b)

    def test_length_mismatch(self):
        with self.assertRaises(LengthMismatch):
            codes.LinearCode.from_rows(F2, [(1, 0), (1, 0, 1)])
        with self.assertRaises(GrcodesError):
            codes.LinearCode.from_rows(F2, [])

    def test_binary_rows(self):
        c = codes.code_from_binary_rows(['1100', '0011'])
        self.assertEqual(c.length, 4)
        self.assertEqual(codes.cardinality(c), 2)
        with self.assertRaises(LengthMismatch):
            codes.code_from_binary_rows([0b11111], 4)

    def test_gray_image(self):
        """ R_1 row (1, 1) spans a code whose image has rank 2."""
        c = codes.LinearCode.from_rows(R1, [(1, 1)])
        image = codes.gray_image(c)
        self.assertTrue(image.is_binary)
        self.assertEqual(image.length, 4)
        self.assertEqual(image.binary_rank, 2)


class DualityTestCase(TestCase):
    """ Tests for duals and duality predicates."""

    def setUp(self):
        super().setUp()
        self.rng = random.Random(3)

    def test_cardinality(self):
        """ |C||C^⊥| = |R|^n and C^⊥⊥ = C."""
        for ring in (F2, R1, R2):
            for descriptor in ('d8', 'a4', 'c6 @evenodd'):
                with self.subTest(descriptor, ring=ring.name):
                    g = parse_group(descriptor)
                    c = codes.code_from_element(
                        random_element(ring, g, self.rng))
                    d = codes.dual(c)
                    self.assertEqual(
                        codes.cardinality(c) + codes.cardinality(d), c.width)
                    self.assertEqual(codes.dual(d), c)

    def test_zero_code(self):
        """ The dual of the zero code is the whole space."""
        c = codes.LinearCode.from_rows(R1, [], 3)
        self.assertEqual(codes.dual(c).binary_rank, 6)
        self.assertIsNone(codes.min_distance(c))

    def test_block_code(self):
        """ [[I, B], [B, I]] with B² = I is self-dual."""
        b = [[0, 1], [1, 0]]
        c = codes.double_block_code(codes.identity_rows(2), b)
        self.assertTrue(codes.is_self_dual(c))
        self.assertFalse(codes.is_type_ii(c))

    def test_type_ii_needs_binary(self):
        c = codes.LinearCode.from_rows(R1, [(1, 1)])
        with self.assertRaises(NotBinary):
            codes.is_type_ii(c)
        with self.assertRaises(NotBinary):
            codes.macwilliams_check(c)

    def test_macwilliams(self):
        """ The transform of a code's distribution is its dual's."""
        self.assertDictEqual(codes.macwilliams_transform({0: 1, 3: 1}, 3),
                             {0: 1, 2: 3})
        with self.assertRaises(GrcodesError):
            codes.macwilliams_transform({0: 1, 2: 2}, 2)
        for descriptor in ('d8', 'c2c2c2', 'd12'):
            with self.subTest(descriptor):
                g = parse_group(descriptor)
                c = codes.code_from_element(random_element(F2, g, self.rng))
                self.assertTrue(codes.macwilliams_check(c))


class EnumeratorTestCase(TestCase):
    """ Tests for the three weight enumerators."""

    def setUp(self):
        super().setUp()
        # R_1-span of (1, 1): (0,0), (1,1), (u,u), (1+u,1+u)
        self.code = codes.LinearCode.from_rows(R1, [(1, 1)])

    def test_hamming(self):
        enumerator = codes.weight_enumerator(self.code)
        self.assertDictEqual(enumerator.as_dict(), {0: 1, 2: 3})
        self.assertEqual(enumerator.total, 4)

    def test_lee(self):
        enumerator = codes.weight_enumerator(self.code, codes.LEE)
        self.assertDictEqual(enumerator.as_dict(), {0: 1, 2: 2, 4: 1})
        self.assertEqual(codes.min_distance(self.code, codes.LEE), 2)

    def test_complete(self):
        enumerator = codes.weight_enumerator(self.code, codes.COMPLETE)
        self.assertDictEqual(enumerator.as_dict(), {
            ((0, 2),): 1, ((1, 2),): 1, ((2, 2),): 1, ((3, 2),): 1})

    def test_unknown_kind(self):
        with self.assertRaises(GrcodesError):
            codes.weight_enumerator(self.code, 'euclidean')
        with self.assertRaises(GrcodesError):
            codes.min_distance(self.code, 'euclidean')


class EquivalenceTestCase(TestCase):
    """ Tests for coordinate permutations."""

    def setUp(self):
        super().setUp()
        self.rng = random.Random(5)

    def test_permutation_inverse(self):
        g = make_dihedral(8)
        c = codes.code_from_element(random_element(R1, g, self.rng))
        perm = [3, 0, 1, 2, 7, 6, 5, 4]
        back = [perm.index(j) for j in range(8)]
        self.assertEqual(codes.permute_code(codes.permute_code(c, perm),
                                            back), c)
        with self.assertRaises(LengthMismatch):
            codes.permute_code(c, [0, 1, 2])
        with self.assertRaises(LengthMismatch):
            codes.permute_code(c, [0] * 8)

    def test_right_shift(self):
        """ Right translation by h maps C(v) onto C(v·h)."""
        g = parse_group('a4')
        v = random_element(R1, g, self.rng)
        c = codes.code_from_element(v)
        for h in range(g.order):
            with self.subTest(h=h):
                perm = codes.shift_equivalence_witness(v, h)
                self.assertEqual(codes.permute_code(c, perm),
                                 codes.code_from_element(v.right_shift(h)))

    def test_group_invariance_length(self):
        c = codes.code_from_element(
            random_element(F2, make_cyclic(4), self.rng))
        with self.assertRaises(LengthMismatch):
            codes.check_group_invariance(c, make_cyclic(5))

    def test_isodual_witness(self):
        """ The identity permutation witnesses a self-dual code only."""
        g = make_dihedral(8)
        hamming = codes.code_from_element(
            parse_element('1 + b*a + b*a^2 + b*a^3', F2, g))
        self.assertTrue(codes.isodual_witness_check(hamming, range(8)))
        other = codes.code_from_element(parse_element('1 + a', F2, g))
        self.assertFalse(codes.isodual_witness_check(other, range(8)))

    def test_circulant_isodual(self):
        """
        (I | B) with B circulant maps onto its dual (B^T | I) when the
        coordinates are reversed.
        """
        first = (1, 1, 0, 1, 0, 0)
        b = [first[-i:] + first[:-i] if i else first for i in range(6)]
        rows = [tuple(e) + r for e, r in zip(codes.identity_rows(6), b)]
        c = codes.LinearCode.from_rows(F2, rows, 12)
        self.assertEqual(codes.cardinality(c), 6)
        self.assertTrue(codes.isodual_witness_check(c, range(11, -1, -1)))
        self.assertFalse(codes.isodual_witness_check(c, range(12)))
        self.assertFalse(codes.is_self_dual(c))
        self.assertTrue(codes.is_formally_self_dual(c))


class ShapeTestCase(TestCase):
    """ Tests for σ(v) shape detection."""

    def test_circulant(self):
        v = parse_element('1 + h + h^3', F2, make_cyclic(6))
        self.assertEqual(codes.matrix_shape(v.sigma()).kind,
                         codes.CIRCULANT)

    def test_dihedral_blocks(self):
        """ Dihedral σ(v) has the block form [[A, B], [D, A]]."""
        v = parse_element('1 + a + b + ba^2', F2, make_dihedral(8))
        shape = codes.matrix_shape(v.sigma())
        self.assertIn(shape.kind, ('ABBA', 'ABDA'))
        self.assertTrue(str(shape).startswith('[[A,B],'))
