import dataclasses
import json
from typing import TYPE_CHECKING, Any, Dict, Optional, Tuple
from unittest import SkipTest, TestCase

import jsonschema

from grcodes import codes, config, reports, search
from grcodes.groupring import GroupRingElement, parse_element
from grcodes.groups import FiniteGroup, parse_group
from grcodes.rings import RingSpec

if TYPE_CHECKING:  # pragma: no cover
    MixinTarget = TestCase
else:
    MixinTarget = object

# (length, log2|C|, minimum distance)
Parameters = Tuple[int, int, Optional[int]]


class CodeHelpersMixin(MixinTarget):
    # ring descriptor, f2 or r<k>
    ring: str = 'f2'

    # group descriptor accepted by parse_group
    group: str

    # element text evaluated in the group ring
    element: str

    # expected parameters of C(v); distance is Hamming over the ring,
    # None skips it
    parameters: Parameters

    # expected duality flags, None to skip the check
    self_dual: Optional[bool] = None
    formally_self_dual: Optional[bool] = None

    # expected Hamming enumerator of C(v), None to skip
    enumerator: Optional[Dict[int, int]] = None

    # code report schema
    schema: dict = reports.CODE_REPORT_SCHEMA

    def get_ring(self) -> RingSpec:
        return RingSpec.parse(self.ring)

    def get_group(self) -> FiniteGroup:
        return parse_group(self.group)

    def get_element(self) -> GroupRingElement:
        return parse_element(self.element, self.get_ring(), self.get_group())

    def get_code(self) -> codes.LinearCode:
        return codes.code_from_element(self.get_element())

    def get_report(self, code: Optional[codes.LinearCode] = None,
                   label: str = 'C(v)') -> Dict[str, Any]:
        if code is None:
            code = self.get_code()
        return reports.code_report(code, label, self.get_element(),
                                   self.group, matrix=True)

    @staticmethod
    def code_parameters(code: codes.LinearCode) -> Parameters:
        return code.length, codes.cardinality(code), codes.min_distance(code)

    def assert_json_schema(self, obj: Any, schema: dict) -> None:
        """ Checks document schema."""
        try:
            jsonschema.validate(obj, schema)
        except jsonschema.ValidationError as e:  # pragma: no cover
            self.fail(e.message)

    def assert_parameters(self, code: codes.LinearCode,
                          expected: Parameters) -> None:
        observed = self.code_parameters(code)
        if expected[2] is None:
            observed = observed[:2] + (None,)
        self.assertTupleEqual(observed, tuple(expected))


if TYPE_CHECKING:  # pragma: no cover
    CodeHelpersTarget = CodeHelpersMixin
else:
    CodeHelpersTarget = object


class CodeReportTestsMixin(CodeHelpersTarget):

    def test_parameters(self) -> None:
        """ C(v) has the expected length, size and minimum distance."""
        self.assert_parameters(self.get_code(), self.parameters)

    def test_report_format(self) -> None:
        """ Code report matches its schema and survives a JSON round trip."""
        document = self.get_report()
        self.assert_json_schema(document, self.schema)
        self.assertEqual(json.loads(json.dumps(document)), document)

    def test_duality_flags(self) -> None:
        """ Duality predicates match the expected flags."""
        code = self.get_code()
        if self.self_dual is not None:
            self.assertEqual(codes.is_self_dual(code), self.self_dual)
        if self.formally_self_dual is not None:
            self.assertEqual(codes.is_formally_self_dual(code, codes.LEE),
                             self.formally_self_dual)
        self.assertEqual(
            codes.cardinality(code) + codes.cardinality(codes.dual(code)),
            code.width)

    def test_enumerator(self) -> None:
        """ Hamming enumerator of C(v) matches the expected counts."""
        if self.enumerator is None:
            self.skipTest('no enumerator given')
        enumerator = codes.weight_enumerator(self.get_code())
        self.assertDictEqual(enumerator.as_dict(), self.enumerator)

    def test_element_round_trip(self) -> None:
        """ Printed element parses back to the same element."""
        v = self.get_element()
        again = parse_element(str(v), v.ring, v.group)
        self.assertEqual(again, v)

    def test_group_invariance(self) -> None:
        """ C(v) is invariant under left translations by the group."""
        self.assertTrue(codes.check_group_invariance(
            self.get_code(), self.get_group()))

    def test_text_report(self) -> None:
        """ Text rendering carries the numbers of the document."""
        document = self.get_report()
        text = reports.render_text(document)
        self.assertIn(f'length {document["length"]}', text)
        self.assertIn(f'log2|C| {document["rank"]}', text)


class GrayImageTestsMixin(CodeHelpersTarget):
    # expected parameters of the binary Gray image
    image_parameters: Parameters

    # expected self-duality of the Gray image
    image_self_dual: bool

    # expected Hamming enumerator of the image, None to skip
    image_enumerator: Optional[Dict[int, int]] = None

    def get_image(self) -> codes.LinearCode:
        return codes.gray_image(self.get_code())

    def test_gray_image_parameters(self) -> None:
        """ Gray image has the expected binary parameters."""
        self.assert_parameters(self.get_image(), self.image_parameters)

    def test_gray_image_duality(self) -> None:
        """
        Gray image is self-dual as expected, and it is self-dual whenever
        C(v) is.
        """
        image = self.get_image()
        self.assertEqual(codes.is_self_dual(image), self.image_self_dual)
        if codes.is_self_dual(self.get_code()):
            self.assertTrue(codes.is_self_dual(image))

    def test_gray_image_enumerator(self) -> None:
        """ Lee enumerator of C(v) is the Hamming enumerator of its image."""
        code = self.get_code()
        lee = codes.weight_enumerator(code, codes.LEE).as_dict()
        image = codes.weight_enumerator(self.get_image()).as_dict()
        self.assertDictEqual(lee, image)
        if self.image_enumerator is not None:
            self.assertDictEqual(image, self.image_enumerator)


class CodeTestsMixin(CodeReportTestsMixin, CodeHelpersMixin):
    pass


class RingCodeTestsMixin(CodeReportTestsMixin, GrayImageTestsMixin,
                         CodeHelpersMixin):
    pass


class SearchReportTestsMixin(MixinTarget):
    # built-in search name
    search_name: str

    # overrides for the search spec, e.g. a smaller limit
    spec_changes: Dict[str, Any] = {}

    # process count used for the scan
    workers: int = 1

    report: search.SearchReport
    spec: search.SearchSpec

    @classmethod
    def setUpClass(cls) -> None:
        super().setUpClass()
        spec = search.builtin_search(cls.search_name)
        if cls.spec_changes:
            spec = dataclasses.replace(spec, **cls.spec_changes)
        if spec.slow and not config.slow_tests_enabled():
            raise SkipTest(f'set {config.SLOW_TESTS_ENV}=1 to run '
                           f'{cls.search_name}')
        cls.spec = spec
        cls.report = search.run_search(spec, cls.workers)

    def test_expected_counts(self) -> None:
        """ Stage and class counts match the stored expectations."""
        self.assertListEqual(self.report.expected_mismatches(), [])

    def test_stage_counts_decrease(self) -> None:
        """ Each filter keeps a subset of the previous stage."""
        counts = [count for _, count in self.report.stages]
        self.assertEqual(counts[0], self.spec.total)
        self.assertListEqual(counts, sorted(counts, reverse=True))

    def test_report_format(self) -> None:
        """ Search report document matches its schema."""
        document = reports.search_report_document(self.report)
        try:
            jsonschema.validate(document, reports.SEARCH_REPORT_SCHEMA)
        except jsonschema.ValidationError as e:  # pragma: no cover
            self.fail(e.message)

    def test_witnesses_verify(self) -> None:
        """ Every reported witness passes the filters again."""
        for text in self.report.witnesses:
            with self.subTest(text):
                v = parse_element(text, self.spec.ring, self.spec.group)
                self.assertTrue(search.verify_witness(self.spec, v))
