"""Tokenizer for the STL surface grammar.

Canonical spellings are ASCII (`G F U ! & | -> true false`); a few common
Unicode forms are accepted on input and normalized, never emitted.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum


class TokenKind(Enum):
    OPERATOR = "Operator"
    DELIMITER = "Delimiter"
    NUMBER = "Number"
    IDENTIFIER = "Identifier"
    COMPARATOR = "Comparator"


@dataclass(frozen=True, slots=True)
class Token:
    kind: TokenKind
    text: str
    pos: int = 0


class STLSyntaxError(ValueError):
    def __init__(self, pos: int, message: str):
        super().__init__(f"at position {pos}: {message}")
        self.pos = pos
        self.message = message


KEYWORDS = {"G", "F", "U", "true", "false"}

# Unicode spellings normalized to their ASCII operator or comparator.
UNICODE_SINGLE = {
    "∧": "&",   # ∧
    "∨": "|",   # ∨
    "¬": "!",   # ¬
    "□": "G",   # □
    "◇": "F",   # ◇
    "◊": "F",   # ◊
    "⊤": "true",   # ⊤
    "⊥": "false",  # ⊥
    "≤": "<=",  # ≤
    "≥": ">=",  # ≥
    "→": "->",  # →
}

DELIMITERS = "[](),"


def lex(text: str) -> list[Token]:
    """Tokenize STL surface text; raises STLSyntaxError on stray characters."""
    if not text.strip():
        raise STLSyntaxError(0, "empty input")
    tokens: list[Token] = []
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch in UNICODE_SINGLE:
            norm = UNICODE_SINGLE[ch]
            if norm in ("<=", ">="):
                kind = TokenKind.COMPARATOR
            else:
                kind = TokenKind.OPERATOR
            tokens.append(Token(kind, norm, i))
            i += 1
            continue
        if ch in DELIMITERS:
            tokens.append(Token(TokenKind.DELIMITER, ch, i))
            i += 1
            continue
        if ch == "-":
            if i + 1 < n and text[i + 1] == ">":
                tokens.append(Token(TokenKind.OPERATOR, "->", i))
                i += 2
            else:
                tokens.append(Token(TokenKind.OPERATOR, "-", i))
                i += 1
            continue
        if ch in "<>":
            if i + 1 < n and text[i + 1] == "=":
                tokens.append(Token(TokenKind.COMPARATOR, ch + "=", i))
                i += 2
            else:
                tokens.append(Token(TokenKind.COMPARATOR, ch, i))
                i += 1
            continue
        if ch in "!&|+*":
            tokens.append(Token(TokenKind.OPERATOR, ch, i))
            i += 1
            continue
        if ch.isdigit():
            j = i + 1
            while j < n and text[j].isdigit():
                j += 1
            if j < n and text[j] == "." and j + 1 < n and text[j + 1].isdigit():
                j += 1
                while j < n and text[j].isdigit():
                    j += 1
            tokens.append(Token(TokenKind.NUMBER, text[i:j], i))
            i = j
            continue
        if ch.isalpha() or ch == "_":
            j = i + 1
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            word = text[i:j]
            kind = TokenKind.OPERATOR if word in KEYWORDS else TokenKind.IDENTIFIER
            tokens.append(Token(kind, word, i))
            i = j
            continue
        raise STLSyntaxError(i, f"unexpected character {ch!r}")
    return tokens
