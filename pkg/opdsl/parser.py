"""
LadderKit — Operator DSL Parser

Precedence, lowest to highest:

    sum          a + b, a - b
    product      a * b, and juxtaposition before ( or [
    unary minus  -a
    power        a ^ q           right-associative, q a rational literal

Primaries: identifiers, integer literals, a/b rational literals, calls
name(arg, ...), parenthesized groups and commutators [a, b].

Subtraction is kept as Sum(a, Neg(b)) so the tree mirrors the source.
"""

from fractions import Fraction
from typing import List, Optional

from algebra.errors import ParseError
from config.constants import DSL_LIMITS
from opdsl.lexer import Token, tokenize
from opdsl.syntax import Call, Commutator, Name, Neg, Number, Power, Product, Sum

OPERAND = frozenset({"operand"})

# identifiers that take an argument list; anything else followed by "(" is a product
CALLABLES = frozenset({"exp", "sqrt", "A", "Adag", "H"})

_DESCRIBE = {
    "end": "end of input",
    "rparen": "')'",
    "rbracket": "']'",
    "comma": "','",
}


def _found(token: Token) -> str:
    return _DESCRIBE["end"] if token.kind == "end" else repr(token.lexeme)


class Parser:
    def __init__(self, source: str):
        self.tokens: List[Token] = tokenize(source)
        self.pos = 0
        self.depth = 0

    # ------------------------------------------------------------------
    # Token stream
    # ------------------------------------------------------------------
    @property
    def current(self) -> Token:
        return self.tokens[self.pos]

    def advance(self) -> Token:
        token = self.tokens[self.pos]
        if token.kind != "end":
            self.pos += 1
        return token

    def expect(self, kind: str) -> Token:
        token = self.current
        if token.kind != kind:
            raise ParseError(token.offset, {_DESCRIBE.get(kind, kind)}, _found(token))
        return self.advance()

    def _enter(self):
        self.depth += 1
        if self.depth > DSL_LIMITS["max_depth"]:
            raise ParseError(self.current.offset, OPERAND, _found(self.current),
                             f"nesting deeper than {DSL_LIMITS['max_depth']}")

    def _leave(self):
        self.depth -= 1

    # ------------------------------------------------------------------
    # Grammar
    # ------------------------------------------------------------------
    def parse(self):
        tree = self.sum()
        if self.current.kind != "end":
            raise ParseError(self.current.offset, {"operator", "end of input"}, _found(self.current))
        return tree

    def sum(self):
        operands = [self.product()]
        while self.current.kind in ("plus", "minus"):
            op = self.advance()
            rhs = self.product()
            operands.append(rhs if op.kind == "plus" else Neg(rhs))
        return operands[0] if len(operands) == 1 else Sum(tuple(operands))

    def product(self):
        factors = [self.unary()]
        while True:
            if self.current.kind == "star":
                self.advance()
            elif self.current.kind not in ("lparen", "lbracket"):
                break
            factors.append(self.unary())
        return factors[0] if len(factors) == 1 else Product(tuple(factors))

    def unary(self):
        if self.current.kind == "minus":
            self.advance()
            self._enter()
            operand = self.unary()
            self._leave()
            return Neg(operand)
        return self.power()

    def power(self):
        base = self.primary()
        if self.current.kind != "caret":
            return base
        self.advance()
        return Power(base, self.exponent())

    def exponent(self) -> Fraction:
        """Signed integer, or a parenthesized signed integer or rational; right-associative."""
        self._enter()
        sign = 1
        if self.current.kind == "minus":
            self.advance()
            sign = -1
        if self.current.kind == "lparen":
            self.advance()
            inner_sign = 1
            if self.current.kind == "minus":
                self.advance()
                inner_sign = -1
            value = self._rational_literal()
            self.expect("rparen")
            value *= inner_sign
        elif self.current.kind == "integer":
            value = Fraction(int(self.advance().lexeme))
        else:
            raise ParseError(self.current.offset, {"exponent"}, _found(self.current))
        value *= sign
        if self.current.kind == "caret":
            offset = self.advance().offset
            outer = self.exponent()
            if outer.denominator != 1 or abs(outer) > DSL_LIMITS["max_exponent"]:
                raise ParseError(offset, {"integer exponent"}, str(outer),
                                 "a stacked exponent must be a small integer")
            if value == 0 and outer < 0:
                raise ParseError(offset, {"exponent"}, str(outer), "zero to a negative power")
            value = value ** int(outer)
        self._leave()
        return value

    def _rational_literal(self) -> Fraction:
        numerator = int(self.expect("integer").lexeme)
        if self.current.kind != "slash":
            return Fraction(numerator)
        self.advance()
        token = self.expect("integer")
        denominator = int(token.lexeme)
        if denominator == 0:
            raise ParseError(token.offset, {"non-zero integer"}, "0", "zero denominator")
        return Fraction(numerator, denominator)

    def primary(self):
        token = self.current
        if token.kind == "integer":
            return Number(self._rational_literal(), token.offset)
        if token.kind == "ident":
            self.advance()
            if token.lexeme in CALLABLES and self.current.kind == "lparen":
                return Call(token.lexeme, self._arguments(), token.offset)
            return Name(token.lexeme, token.offset)
        if token.kind == "lparen":
            self.advance()
            self._enter()
            inner = self.sum()
            self._leave()
            self.expect("rparen")
            return inner
        if token.kind == "lbracket":
            self.advance()
            self._enter()
            left = self.sum()
            self.expect("comma")
            right = self.sum()
            self._leave()
            self.expect("rbracket")
            return Commutator(left, right)
        raise ParseError(token.offset, OPERAND, _found(token))

    def _arguments(self):
        self.expect("lparen")
        self._enter()
        args = [self.sum()]
        while self.current.kind == "comma":
            self.advance()
            args.append(self.sum())
        self._leave()
        self.expect("rparen")
        return tuple(args)


def parse(text: str, max_length: Optional[int] = None):
    """
    Parse DSL source into a source tree.

    Raises
    ------
    ParseError with the character offset, the expected set and what was found.
    """
    if max_length is not None and len(text) > max_length:
        raise ParseError(max_length, {"end of input"}, "more input",
                         f"input longer than {max_length} characters")
    return Parser(text).parse()
