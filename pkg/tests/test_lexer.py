import pytest

from aosrm.errors import UnterminatedComment, UnterminatedLiteral
from aosrm.lexer import tokenize


def texts(src):
    return [t.text for t in tokenize(src)]


def test_empty_input_is_just_end():
    toks = tokenize("")
    assert [t.kind for t in toks] == ["end"]


def test_smallest_class():
    toks = tokenize("class A {}")
    assert [t.text for t in toks[:-1]] == ["class", "A", "{", "}"]
    assert toks[0].kind in ("keyword", "identifier")
    assert toks[1].kind == "identifier"
    assert toks[-1].kind == "end"


def test_brace_inside_string_is_not_punctuation():
    toks = tokenize('/* x */ a = "b{";')
    assert [(t.kind, t.text) for t in toks[:-1]] == [
        ("identifier", "a"),
        ("punctuation", "="),
        ("string-literal", '"b{"'),
        ("punctuation", ";"),
    ]


def test_comments_and_whitespace_vanish():
    assert texts("a // line { \n /* block } */ b") == ["a", "b", ""]


def test_aspectj_words_stay_identifiers():
    kinds = {t.text: t.kind for t in tokenize("aspect pointcut before after around declare")}
    assert set(kinds.values()) == {"identifier", "end"}


def test_char_literal_and_escapes():
    toks = tokenize(r"""c = '}'; s = "a\"{"; """)
    assert toks[2].kind == "char-literal" and toks[2].text == "'}'"
    assert toks[6].kind == "string-literal" and toks[6].text == r'"a\"{"'


def test_line_and_column():
    toks = tokenize("a\n  b")
    assert (toks[0].line, toks[0].column) == (1, 1)
    assert (toks[1].line, toks[1].column) == (2, 3)


def test_text_block():
    toks = tokenize('x = """\n { not a brace }\n""";')
    assert toks[2].kind == "string-literal"
    assert texts('x = """\n{\n""";').count("{") == 0


def test_numbers_and_multi_char_punctuation():
    assert texts("f(0x1F, 1.5e3, 10L) ... :: ->")[:-1] == ["f", "(", "0x1F", ",", "1.5e3", ",", "10L", ")", "...", "::", "->"]


def test_unterminated_string():
    with pytest.raises(UnterminatedLiteral) as exc:
        tokenize('a\nb = "oops')
    assert exc.value.line == 2


def test_unterminated_comment():
    with pytest.raises(UnterminatedComment) as exc:
        tokenize("a\n\n/* never closed")
    assert exc.value.line == 3


def test_byte_order_mark_is_stripped():
    assert texts("﻿class A {}")[:2] == ["class", "A"]
