"""
LadderKit — Operator DSL Lexer

Turns source text into Tokens with character offsets. Lexing is total:
every input either yields a token list ending in an `end` token or a single
ParseError at the offending character.
"""

from dataclasses import dataclass
from typing import List

from algebra.errors import ParseError
from config.constants import DSL_LIMITS

PUNCTUATION = {
    "/": "slash",
    "^": "caret",
    "*": "star",
    "+": "plus",
    "-": "minus",
    "(": "lparen",
    ")": "rparen",
    "[": "lbracket",
    "]": "rbracket",
    ",": "comma",
}


@dataclass(frozen=True)
class Token:
    kind: str
    lexeme: str
    offset: int


def _is_ident_start(c: str) -> bool:
    return c.isascii() and (c.isalpha() or c == "_")


def _is_ident_char(c: str) -> bool:
    return c.isascii() and (c.isalnum() or c == "_")


def tokenize(source: str) -> List[Token]:
    tokens: List[Token] = []
    idx = 0
    size = len(source)
    while idx < size:
        c = source[idx]
        if c in " \t\r\n":
            idx += 1
            continue
        start = idx
        if c in PUNCTUATION:
            tokens.append(Token(PUNCTUATION[c], c, start))
            idx += 1
            continue
        if c.isascii() and c.isdigit():
            while idx < size and source[idx].isascii() and source[idx].isdigit():
                idx += 1
            if idx - start > DSL_LIMITS["max_integer_digits"]:
                raise ParseError(start, {"integer"}, "integer literal",
                                 f"integer literal longer than {DSL_LIMITS['max_integer_digits']} digits")
            tokens.append(Token("integer", source[start:idx], start))
            continue
        if _is_ident_start(c):
            while idx < size and _is_ident_char(source[idx]):
                idx += 1
            tokens.append(Token("ident", source[start:idx], start))
            continue
        raise ParseError(start, {"operand", "operator"}, repr(c), f"unexpected character {c!r}")
    tokens.append(Token("end", "", size))
    return tokens
