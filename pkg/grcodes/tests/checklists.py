from typing import TYPE_CHECKING
from unittest import TestCase, skip

if TYPE_CHECKING:  # pragma: no cover
    CheckListTarget = TestCase
else:
    CheckListTarget = object


class CodeCheckList(CheckListTarget):  # pragma: no cover
    """
    A collection of tests for a code built from a group ring element
    """

    @skip("Implement me")
    def test_parameters(self) -> None:
        """
        checks length, size and minimum distance of C(v)
        """
        raise NotImplementedError()

    @skip("Implement me")
    def test_duality_flags(self) -> None:
        """
        checks self-dual and formally self-dual flags of C(v)
        """
        raise NotImplementedError()

    @skip("Implement me")
    def test_report_format(self) -> None:
        """
        checks code report format
        """
        raise NotImplementedError()

    @skip("Implement me")
    def test_element_round_trip(self) -> None:
        """
        checks that the printed element parses back to itself
        """
        raise NotImplementedError()

    @skip("Implement me")
    def test_group_invariance(self) -> None:
        """
        checks that C(v) is a left ideal of the group ring
        """
        raise NotImplementedError()


# noinspection PyAbstractClass
class RingCodeCheckList(CodeCheckList):  # pragma: no cover
    """
    A collection of tests for a code over R_k and its Gray image
    """

    @skip("Implement me")
    def test_gray_image_parameters(self) -> None:
        """
        checks binary parameters of the Gray image
        """
        raise NotImplementedError()

    @skip("Implement me")
    def test_gray_image_duality(self) -> None:
        """
        checks self-duality of the Gray image
        """
        raise NotImplementedError()

    @skip("Implement me")
    def test_gray_image_enumerator(self) -> None:
        """
        checks the Lee enumerator against the image enumerator
        """
        raise NotImplementedError()


class SearchCheckList(CheckListTarget):  # pragma: no cover
    """
    A collection of tests for an exhaustive search
    """

    @skip("Implement me")
    def test_expected_counts(self) -> None:
        """
        checks stage and class counts of the scan
        """
        raise NotImplementedError()

    @skip("Implement me")
    def test_report_format(self) -> None:
        """
        checks search report format
        """
        raise NotImplementedError()

    @skip("Implement me")
    def test_witnesses_verify(self) -> None:
        """
        checks reported witnesses against the filters
        """
        raise NotImplementedError()
