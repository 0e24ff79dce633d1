import random
from unittest import TestCase, skipUnless

from grcodes import codes, config, suites
from grcodes.exceptions import UnknownName
from grcodes.groupring import GroupRingElement
from grcodes.groups import NAMED_GROUPS, parse_group
from grcodes.rings import F2, RingSpec

SMALL_TRIALS = 5


class SuiteResultTestCase(TestCase):
    """ Tests for trial bookkeeping."""

    def test_record(self):
        """ Skips count as trials, the first failure is kept."""
        result = suites.SuiteResult('test')
        result.record(True, 'a')
        result.record(None, 'b')
        result.record(False, 'c')
        result.record(False, 'd')
        self.assertEqual(result.trials, 4)
        self.assertEqual(result.skips, 1)
        self.assertEqual(result.failures, 2)
        self.assertEqual(result.detail, 'c')
        self.assertFalse(result.passed)

    def test_unknown_suite(self):
        with self.assertRaises(UnknownName):
            suites.run_suite('associativity')


class PropertySuitesTestCase(TestCase):
    """ Short runs of every property suite."""

    def test_suites_pass(self):
        for name in suites.suite_names():
            with self.subTest(name):
                result = suites.run_suite(name, seed=1, trials=SMALL_TRIALS)
                self.assertGreaterEqual(result.trials, SMALL_TRIALS)
                self.assertEqual(result.failures, 0, result.detail)

    def test_seed_reproducible(self):
        a = suites.run_suite('block_lemma', seed=4, trials=50)
        b = suites.run_suite('block_lemma', seed=4, trials=50)
        self.assertEqual(a, b)

    def test_algebra_groups_cover_builtins(self):
        """ σ identities are checked over every named built-in group."""
        for name in NAMED_GROUPS:
            with self.subTest(name):
                self.assertIn(name, suites.ALGEBRA_GROUPS)

    def test_sigma_identities_over_all_groups(self):
        """ Every algebra group, S4 and (C6 × C2) ⋊ C2 included, passes."""
        result = suites.run_suite('homomorphism', seed=2, trials=2)
        self.assertEqual(result.trials, 2 * len(suites.ALGEBRA_GROUPS))
        self.assertTrue(result.passed, result.detail)
        result = suites.run_suite('transpose', seed=2, trials=2)
        self.assertTrue(result.passed, result.detail)

    def test_palindromic_even_index(self):
        """
        Palindromic elements have one even coefficient 1 at varying even
        indices and mirrored odd coefficients.
        """
        rng = random.Random(3)
        ring = RingSpec(1)
        positions = set()
        for _ in range(60):
            v = suites.palindromic_element(rng, ring, 10)
            even = [i for i in range(0, 10, 2) if v.coeffs[i]]
            self.assertEqual(len(even), 1)
            self.assertEqual(v.coeffs[even[0]], 1)
            positions.add(even[0])
            for i in range(1, 10, 2):
                self.assertEqual(v.coeffs[i], v.coeffs[10 - i])
        self.assertGreater(len(positions), 1)

    @skipUnless(config.slow_tests_enabled(),
                f'set {config.SLOW_TESTS_ENV}=1 to run')
    def test_default_trials(self):
        for result in suites.run_suites(suites.suite_names()):
            with self.subTest(result.name):
                self.assertTrue(result.passed, result.detail)


class IsodualPermutationTestCase(TestCase):
    """ Tests for the structural isodual permutation."""

    def test_permutation(self):
        for descriptor in ('c2 x d4 @csd', 'c3 x d8 @csd'):
            with self.subTest(descriptor):
                g = parse_group(descriptor)
                perm = suites.structural_isodual_permutation(g)
                self.assertListEqual(sorted(perm), list(range(g.order)))

    def test_maps_code_onto_dual(self):
        """
        C(v) with rotation part e and |C| = 2^(n/2) maps onto its dual.
        """
        g = parse_group('c2 x d6 @csd')
        half = g.order // 2
        perm = suites.structural_isodual_permutation(g)
        checked = 0
        for reflections in ((1, 0, 0, 0, 0, 0), (1, 1, 0, 1, 0, 0),
                            (0, 1, 1, 0, 1, 1), (1, 1, 1, 0, 0, 1)):
            v = GroupRingElement(
                F2, g, (1,) + (0,) * (half - 1) + reflections)
            c = codes.code_from_element(v)
            if 2 * c.binary_rank != c.width:
                continue
            with self.subTest(reflections=reflections):
                self.assertTrue(codes.isodual_witness_check(c, perm))
                self.assertTrue(codes.is_formally_self_dual(c))
            checked += 1
        # e + f always has half rank
        self.assertGreaterEqual(checked, 1)
