"""Tokenizer for Java and code-style AspectJ source."""

from __future__ import annotations

import re
from dataclasses import dataclass

from .errors import UnterminatedComment, UnterminatedLiteral

IDENTIFIER = "identifier"
KEYWORD = "keyword"
PUNCT = "punctuation"
STRING = "string-literal"
CHAR = "char-literal"
NUMBER = "number"
END = "end"

# AspectJ words (aspect, pointcut, before, ...) are deliberately absent:
# they are contextual and the parser decides what they mean.
JAVA_KEYWORDS = frozenset(
    """
    abstract assert boolean break byte case catch char class const continue
    default do double else enum extends final finally float for goto if
    implements import instanceof int interface long native new package
    private protected public return short static strictfp super switch
    synchronized this throw throws transient try void volatile while
    true false null
    """.split()
)


@dataclass(frozen=True, slots=True)
class Token:
    kind: str
    text: str
    line: int
    column: int


_TOKEN_RE = re.compile(
    r"""
      (?P<ws>[ \t\f\r\n]+)
    | (?P<lcomment>//[^\n]*)
    | (?P<bcomment>/\*.*?\*/)
    | (?P<badcomment>/\*)
    | (?P<textblock>\"\"\"[ \t\f]*\r?\n(?:[^"\\]|\\.|"(?!""))*\"\"\")
    | (?P<string>"(?:[^"\\\n]|\\.)*")
    | (?P<char>'(?:[^'\\\n]|\\.)+')
    | (?P<number>0[xX][0-9a-fA-F_]*(?:\.[0-9a-fA-F_]*)?(?:[pP][+-]?\d+)?[lLfFdD]?
                |0[bB][01_]+[lL]?
                |(?:\d[\d_]*(?:\.[\d_]*)?|\.\d[\d_]*)(?:[eE][+-]?\d+)?[lLfFdD]?)
    | (?P<ident>[^\W\d][\w$]*|\$[\w$]*)
    | (?P<punct>\.\.\.|\.\.|::|->|&&|\|\||[{}()\[\];,.@=<>!~?:+\-*/&|^%])
    """,
    re.VERBOSE | re.DOTALL,
)


def tokenize(text: str) -> list[Token]:
    """Split source text into tokens, dropping comments and whitespace.

    Raises UnterminatedLiteral / UnterminatedComment with the line where
    the offending construct starts.
    """
    if text.startswith("﻿"):
        text = text[1:]
    tokens: list[Token] = []
    append = tokens.append
    pos = 0
    line = 1
    line_start = 0
    n = len(text)
    match = _TOKEN_RE.match
    while pos < n:
        m = match(text, pos)
        if m is None:
            ch = text[pos]
            if ch == '"':
                raise UnterminatedLiteral("unterminated string literal", line)
            if ch == "'":
                raise UnterminatedLiteral("unterminated char literal", line)
            # stray character (e.g. '#', '\\'): keep it as punctuation
            append(Token(PUNCT, ch, line, pos - line_start + 1))
            pos += 1
            continue
        group = m.lastgroup
        value = m.group()
        if group == "badcomment":
            raise UnterminatedComment("unterminated block comment", line)
        if group == "ws" or group == "lcomment" or group == "bcomment" or group == "textblock":
            if group == "textblock":
                append(Token(STRING, value, line, pos - line_start + 1))
            nl = value.count("\n")
            if nl:
                line += nl
                line_start = pos + value.rindex("\n") + 1
        elif group == "ident":
            append(Token(KEYWORD if value in JAVA_KEYWORDS else IDENTIFIER, value, line, pos - line_start + 1))
        elif group == "punct":
            append(Token(PUNCT, value, line, pos - line_start + 1))
        elif group == "string":
            append(Token(STRING, value, line, pos - line_start + 1))
        elif group == "char":
            append(Token(CHAR, value, line, pos - line_start + 1))
        else:
            append(Token(NUMBER, value, line, pos - line_start + 1))
        pos = m.end()
    append(Token(END, "", line, pos - line_start + 1))
    return tokens
