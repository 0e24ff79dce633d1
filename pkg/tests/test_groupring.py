import random
from unittest import TestCase

from grcodes.exceptions import GrcodesError, RingMismatch
from grcodes.groupring import (GroupRingElement, SigmaMatrix, parse_element,
                               random_element)
from grcodes.groups import make_cyclic, make_dihedral, parse_group
from grcodes.rings import F2, RingSpec

R1 = RingSpec(1)
R2 = RingSpec(2)

GROUPS = ('d8', 'a4', 'c2c2c2', 'c6 @evenodd', 'c3 x d8 @csd')


class GroupRingArithmeticTestCase(TestCase):
    """ Tests for products and involution in RG."""

    def setUp(self):
        super().setUp()
        self.rng = random.Random(7)

    def test_associative(self):
        """ (uv)w = u(vw)."""
        for descriptor in GROUPS:
            g = parse_group(descriptor)
            with self.subTest(descriptor):
                u, v, w = (random_element(R2, g, self.rng) for _ in range(3))
                self.assertEqual((u * v) * w, u * (v * w))

    def test_identity(self):
        """ 1·v = v·1 = v."""
        g = parse_group('sl23')
        v = random_element(R1, g, self.rng)
        one = GroupRingElement.one(R1, g)
        self.assertEqual(one * v, v)
        self.assertEqual(v * one, v)

    def test_nilpotent_element(self):
        """
        (e + ab)² = 0 in characteristic 2, while b + ab over d8:ba squares
        to a nonzero element.
        """
        d8 = make_dihedral(8)
        v = parse_element('e + a*b', F2, d8)
        self.assertFalse(v * v)
        w = parse_element('b + a*b', F2, parse_group('d8:ba'))
        self.assertTrue(w * w)

    def test_involution(self):
        """ (vw)^T = w^T v^T and v^TT = v."""
        g = parse_group('a4')
        v, w = (random_element(R2, g, self.rng) for _ in range(2))
        self.assertEqual((v * w).involution(),
                         w.involution() * v.involution())
        self.assertEqual(v.involution().involution(), v)

    def test_right_shift(self):
        """ v·h multiplies by the monomial h."""
        g = make_dihedral(8)
        v = parse_element('1 + a + b', F2, g)
        self.assertEqual(v.right_shift(g.element('a')),
                         parse_element('a + a^2 + ba', F2, g))

    def test_scaled(self):
        """ Scaling by u1 kills u1 terms."""
        g = make_cyclic(3)
        v = parse_element('(1+u1)*h + u1*h^2', R1, g)
        self.assertEqual(v.scaled(0b10), parse_element('u1*h', R1, g))

    def test_mismatch(self):
        """ Elements over different rings or groups do not mix."""
        g = make_cyclic(4)
        with self.assertRaises(RingMismatch):
            _ = GroupRingElement.one(F2, g) + GroupRingElement.one(R1, g)
        with self.assertRaises(RingMismatch):
            _ = (GroupRingElement.one(F2, g) *
                 GroupRingElement.one(F2, make_cyclic(5)))

    def test_coefficient_count(self):
        with self.assertRaises(GrcodesError):
            GroupRingElement(F2, make_cyclic(4), (1, 0))
        with self.assertRaises(GrcodesError):
            GroupRingElement(F2, make_cyclic(2), (1, 2))

    def test_printing(self):
        """ Composite coefficients are parenthesized."""
        g = make_dihedral(8)
        v = parse_element('(1+u1)*a + u1*ba^2 + e', R1, g)
        self.assertEqual(str(v), 'e + (1+u1)*a + u1*ba^2')
        self.assertEqual(str(GroupRingElement.zero(R1, g)), '0')


class SigmaTestCase(TestCase):
    """ Tests for the matrices σ(v)."""

    def setUp(self):
        super().setUp()
        self.rng = random.Random(11)

    def test_rows_are_left_translates(self):
        """ Row i of σ(v) is the coefficient vector of g_i·v."""
        for descriptor in GROUPS:
            g = parse_group(descriptor)
            v = random_element(R1, g, self.rng)
            rows = v.sigma().rows()
            for i in range(g.order):
                with self.subTest(descriptor, i=i):
                    gv = GroupRingElement.monomial(R1, g, i) * v
                    self.assertTupleEqual(rows[i], gv.coeffs)

    def test_homomorphism(self):
        """ σ(v + w) = σ(v) + σ(w) and σ(vw) = σ(v)σ(w)."""
        for descriptor in GROUPS:
            g = parse_group(descriptor)
            for ring in (F2, R1, R2):
                with self.subTest(descriptor, ring=ring.name):
                    v = random_element(ring, g, self.rng)
                    w = random_element(ring, g, self.rng)
                    self.assertEqual((v + w).sigma(), v.sigma() + w.sigma())
                    self.assertEqual((v * w).sigma(), v.sigma() @ w.sigma())

    def test_transpose(self):
        """ σ(v^T) = σ(v)^T."""
        g = parse_group('m16')
        v = random_element(R2, g, self.rng)
        self.assertEqual(v.involution().sigma(), v.sigma().transpose())

    def test_symmetric(self):
        """ σ(v) is symmetric exactly when v = v^T."""
        g = make_dihedral(8)
        cases = (('a + a^3', True), ('a', False), ('e + b + ba', True),
                 ('a^2 + ba^3', True))
        for text, symmetric in cases:
            with self.subTest(text):
                v = parse_element(text, F2, g)
                self.assertEqual(v.is_symmetric(), symmetric)
                self.assertEqual(v == v.involution(), symmetric)

    def test_from_rows(self):
        """ Matrices compare by ring and entries."""
        m = SigmaMatrix.from_rows(R1, [[1, 2], [3, 0]])
        self.assertEqual(m, SigmaMatrix.from_rows(R1, [[1, 2], [3, 0]]))
        self.assertNotEqual(m, SigmaMatrix.from_rows(R2, [[1, 2], [3, 0]]))
        self.assertFalse(m.is_symmetric())
        with self.assertRaises(RingMismatch):
            _ = m + SigmaMatrix.from_rows(R1, [[1]])
