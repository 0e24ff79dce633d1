from typing import Optional, Tuple


class GrcodesError(Exception):
    """ Base class for errors raised by grcodes."""


class RingMismatch(GrcodesError, ValueError):
    """ Operands belong to different rings or groups."""


class ParseError(GrcodesError, ValueError):
    """
    Malformed ring, element or group text.

    :param message: what went wrong
    :param text: parsed text
    :param position: offset of the offending character in text
    """

    def __init__(self, message: str, text: str = '', position: int = 0):
        self.message = message
        self.text = text
        self.position = position
        super().__init__(str(self))

    def __str__(self) -> str:
        if not self.text:
            return self.message
        caret = ' ' * self.position + '^'
        return (f'{self.message} at position {self.position}\n'
                f'  {self.text}\n  {caret}')


class GroupError(GrcodesError, ValueError):
    """
    Invalid group table or constructor arguments.

    For associativity failures `witness` holds the (i, j, l) triple.
    """

    def __init__(self, message: str,
                 witness: Optional[Tuple[int, ...]] = None):
        self.witness = witness
        if witness is not None:
            message = f'{message}: {witness}'
        super().__init__(message)


class UnknownName(GrcodesError, LookupError):
    """ Unknown built-in group, search, matrix or suite name."""


class EnumerationTooLarge(GrcodesError):
    """ Code is too large for exhaustive codeword enumeration."""


class SearchSpaceTooLarge(GrcodesError):
    """ Candidate set has too many free bits."""


class LengthMismatch(GrcodesError, ValueError):
    """ Permutation or group does not match code length."""


class NotBinary(GrcodesError, ValueError):
    """ Binary-only operation requested for a code over R_k, k > 0."""


class PatternError(GrcodesError, ValueError):
    """ Search pattern directions overlap or touch fixed positions."""
