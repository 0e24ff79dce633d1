"""
Expression parser shared by ring literals and group ring elements.

Grammar::

    expr  := term ('+' term)*
    term  := power (['*'] power)*
    power := atom ('^' INT)*
    atom  := '0' | '1' | 'u' [INT] | 'e' | LETTER | '[' NAME ']'
           | '(' expr ')'

Juxtaposition is a product, so ``u1u2`` and ``ba^2`` read as ``u1*u2`` and
``b*a^2``. The parser does not build a tree: it evaluates every node through
an :class:`Algebra`, which decides what atoms mean.
"""
from dataclasses import dataclass
from typing import Generic, List, Optional, Protocol, TypeVar

from grcodes.exceptions import ParseError, UnknownName

T = TypeVar('T')

NUMBER = 'number'
RING_GENERATOR = 'u'
IDENTITY = 'e'
LETTER = 'letter'
REFERENCE = 'reference'
PLUS = '+'
STAR = '*'
CARET = '^'
LPAREN = '('
RPAREN = ')'
END = 'end'

# tokens that may start an atom, used to detect juxtaposed products
ATOM_START = {NUMBER, RING_GENERATOR, IDENTITY, LETTER, REFERENCE, LPAREN}


class Algebra(Protocol[T]):
    """ Interprets parsed atoms and operations."""

    def zero(self) -> T: ...

    def one(self) -> T: ...

    def ring_generator(self, index: int) -> T: ...

    def group_identity(self) -> T: ...

    def group_element(self, name: str) -> T: ...

    def add(self, a: T, b: T) -> T: ...

    def mul(self, a: T, b: T) -> T: ...


@dataclass(frozen=True)
class Token:
    kind: str
    position: int
    value: Optional[str] = None


def tokenize(text: str) -> List[Token]:
    """ Splits expression text to tokens."""
    tokens: List[Token] = []
    pos = 0
    while pos < len(text):
        ch = text[pos]
        if ch.isspace():
            pos += 1
            continue
        start = pos
        if ch.isdigit():
            while pos < len(text) and text[pos].isdigit():
                pos += 1
            tokens.append(Token(NUMBER, start, text[start:pos]))
            continue
        if ch == 'u':
            pos += 1
            while pos < len(text) and text[pos].isdigit():
                pos += 1
            tokens.append(Token(RING_GENERATOR, start, text[start + 1:pos]))
            continue
        if ch == 'e':
            tokens.append(Token(IDENTITY, start))
        elif 'a' <= ch <= 'z':
            tokens.append(Token(LETTER, start, ch))
        elif ch == '[':
            end = text.find(']', pos)
            if end < 0:
                raise ParseError('unterminated element reference',
                                 text, start)
            name = text[pos + 1:end].strip()
            if not name:
                raise ParseError('empty element reference', text, start)
            tokens.append(Token(REFERENCE, start, name))
            pos = end + 1
            continue
        elif ch in (PLUS, STAR, CARET, LPAREN, RPAREN):
            tokens.append(Token(ch, start))
        else:
            raise ParseError(f'unexpected character {ch!r}', text, start)
        pos += 1
    tokens.append(Token(END, len(text)))
    return tokens


class Parser(Generic[T]):
    """ Recursive descent evaluator over an algebra."""

    def __init__(self, text: str, algebra: Algebra[T]):
        self.text = text
        self.algebra = algebra
        self.tokens = tokenize(text)
        self.index = 0

    @property
    def current(self) -> Token:
        return self.tokens[self.index]

    def advance(self) -> Token:
        token = self.tokens[self.index]
        self.index += 1
        return token

    def error(self, message: str, token: Optional[Token] = None
              ) -> ParseError:
        token = token or self.current
        return ParseError(message, self.text, token.position)

    def parse(self) -> T:
        if self.current.kind == END:
            raise self.error('empty expression')
        value = self.expr()
        if self.current.kind != END:
            raise self.error('unexpected token')
        return value

    def expr(self) -> T:
        value = self.term()
        while self.current.kind == PLUS:
            self.advance()
            value = self.algebra.add(value, self.term())
        return value

    def term(self) -> T:
        value = self.power()
        while True:
            if self.current.kind == STAR:
                self.advance()
            elif self.current.kind not in ATOM_START:
                return value
            value = self.algebra.mul(value, self.power())

    def power(self) -> T:
        value = self.atom()
        while self.current.kind == CARET:
            self.advance()
            token = self.current
            if token.kind != NUMBER:
                raise self.error('exponent must be a non-negative integer')
            self.advance()
            value = self.raise_to(value, int(token.value or 0))
        return value

    def raise_to(self, value: T, exponent: int) -> T:
        result = self.algebra.one()
        while exponent:
            if exponent & 1:
                result = self.algebra.mul(result, value)
            value = self.algebra.mul(value, value)
            exponent >>= 1
        return result

    def atom(self) -> T:
        token = self.current
        if token.kind == LPAREN:
            self.advance()
            value = self.expr()
            if self.current.kind != RPAREN:
                raise self.error("expected ')'")
            self.advance()
            return value
        if token.kind not in ATOM_START:
            raise self.error('expected a term')
        self.advance()
        try:
            return self.evaluate(token)
        except UnknownName as e:
            raise self.error(str(e), token) from e

    def evaluate(self, token: Token) -> T:
        if token.kind == NUMBER:
            if token.value == '0':
                return self.algebra.zero()
            if token.value == '1':
                return self.algebra.one()
            raise UnknownName(f'coefficient {token.value} is not 0 or 1')
        if token.kind == RING_GENERATOR:
            # bare "u" is u1
            return self.algebra.ring_generator(int(token.value or 1))
        if token.kind == IDENTITY:
            return self.algebra.group_identity()
        return self.algebra.group_element(token.value or '')


def parse(text: str, algebra: Algebra[T]) -> T:
    """ Evaluates expression text in an algebra."""
    return Parser(text, algebra).parse()
