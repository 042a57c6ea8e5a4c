"""Tolerant declaration-level parser for Java and code-style AspectJ.

Only declarations are modelled: packages, imports, types, supertypes,
methods, fields, pointcuts and advice headers. Method bodies are skipped by
brace matching; advice bodies get a shallow scan for self-calls.
Anything unexpected at member level is skipped with a warning.
"""

from __future__ import annotations

from .errors import ParseFailure
from .lexer import END, IDENTIFIER, KEYWORD, PUNCT, Token, tokenize
from .model import (
    ASPECT, CLASS, CONSTRUCTOR, INTERFACE,
    AdviceDecl, FieldSig, MethodSig, PointcutDecl, SourceUnit, TypeDecl,
)
from .scanner import SourceFile

MODIFIERS = frozenset(
    "public protected private abstract static final strictfp transient "
    "volatile synchronized native default privileged sealed".split()
)
PRIMITIVES = frozenset("boolean byte char short int long float double void".split())

# Pointcut designators that are not references to named pointcuts.
PRIMITIVE_POINTCUTS = frozenset(
    """
    call execution get set handler initialization preinitialization
    staticinitialization adviceexecution within withincode cflow cflowbelow
    this target args if annotation
    """.split()
)

ASPECT_INSTANTIATION = frozenset("perthis pertarget percflow percflowbelow pertypewithin issingleton".split())


def extract_advice_calls(body_tokens: list[Token]) -> set[str]:
    """Names called on the current object inside an advice body.

    ``m()`` and ``this.m()`` count; ``obj.m()`` and ``new T()`` do not.
    """
    calls: set[str] = set()
    toks = body_tokens
    for i, tok in enumerate(toks):
        if tok.kind != IDENTIFIER or i + 1 >= len(toks) or toks[i + 1].text != "(":
            continue
        prev = toks[i - 1] if i > 0 else None
        if prev is not None and prev.text == "new":
            continue
        if prev is not None and prev.text == ".":
            receiver = toks[i - 2] if i > 1 else None
            if receiver is None or receiver.text != "this":
                continue
        calls.add(tok.text)
    return calls


def check_braces(tokens: list[Token]) -> None:
    depth = 0
    for tok in tokens:
        if tok.kind != PUNCT:
            continue
        if tok.text == "{":
            depth += 1
        elif tok.text == "}":
            depth -= 1
            if depth < 0:
                raise ParseFailure("unbalanced '}'", tok.line)
    if depth:
        raise ParseFailure(f"{depth} unclosed '{{' at end of file", tokens[-1].line)


def _erase(type_tokens: list[str]) -> str:
    """Collapse a textual type to its simple erased form: ``java.util.List<X>[]`` -> ``List[]``."""
    out: list[str] = []
    depth = 0
    for t in type_tokens:
        if t == "<":
            depth += 1
        elif t == ">":
            depth -= 1
        elif depth == 0:
            out.append(t)
    text = "".join(out).replace("...", "[]")
    dims = ""
    while text.endswith("[]"):
        dims += "[]"
        text = text[:-2]
    return text.rsplit(".", 1)[-1] + dims


class _Parser:
    def __init__(self, tokens: list[Token], file: SourceFile):
        self.toks = tokens
        self.i = 0
        self.file = file
        self.unit = SourceUnit(file)

    # -- token helpers -------------------------------------------------
    def peek(self, k: int = 0) -> Token:
        j = self.i + k
        return self.toks[j] if j < len(self.toks) else self.toks[-1]

    def at(self, text: str, k: int = 0) -> bool:
        tok = self.peek(k)
        return tok.text == text and tok.kind in (PUNCT, KEYWORD, IDENTIFIER)

    def advance(self) -> Token:
        tok = self.toks[self.i]
        if tok.kind != END:
            self.i += 1
        return tok

    def accept(self, text: str) -> bool:
        if self.at(text):
            self.i += 1
            return True
        return False

    def ident(self) -> str | None:
        tok = self.peek()
        if tok.kind == IDENTIFIER:
            self.i += 1
            return tok.text
        return None

    def warn(self, message: str, tok: Token | None = None) -> None:
        line = (tok or self.peek()).line
        self.unit.warnings.append(f"{self.file.absolute_path}:{line}: {message}")

    def skip_balanced(self, open_: str = "{", close: str = "}") -> list[Token]:
        """Consume from an opening delimiter through its partner; return the inner tokens."""
        start = self.i
        depth = 0
        while True:
            tok = self.peek()
            if tok.kind == END:
                raise ParseFailure(f"unclosed '{open_}'", self.toks[start].line)
            self.i += 1
            if tok.kind != PUNCT:
                continue
            if tok.text == open_:
                depth += 1
            elif tok.text == close:
                depth -= 1
                if depth == 0:
                    return self.toks[start + 1:self.i - 1]

    def skip_angles(self) -> list[str]:
        """Consume a ``<...>`` group; stops early at tokens that cannot appear in generics."""
        texts: list[str] = []
        depth = 0
        while True:
            tok = self.peek()
            if tok.kind == END or tok.text in (";", "{", "}", "="):
                return texts
            self.i += 1
            texts.append(tok.text)
            if tok.text == "<":
                depth += 1
            elif tok.text == ">":
                depth -= 1
                if depth == 0:
                    return texts
            elif tok.text == "(":
                self.i -= 1
                texts.pop()
                texts.extend(t.text for t in self.skip_balanced("(", ")"))

    def skip_member(self) -> None:
        """Skip to the end of an unrecognised member: a ``;`` or a trailing block."""
        saw_assign = False
        depth = 0
        while True:
            tok = self.peek()
            if tok.kind == END:
                return
            if tok.kind == PUNCT:
                if tok.text in "([":
                    depth += 1
                elif tok.text in ")]":
                    depth = max(0, depth - 1)
                elif tok.text == "}" and depth == 0:
                    return
                elif tok.text == "{":
                    self.skip_balanced()
                    if not saw_assign and depth == 0:
                        self.accept(";")
                        return
                    continue
                elif tok.text == ";" and depth == 0:
                    self.i += 1
                    return
                elif tok.text == "=" and depth == 0:
                    saw_assign = True
            self.i += 1

    # -- grammar -------------------------------------------------------
    def annotation(self) -> None:
        self.advance()  # '@'
        self.ident()
        while self.at(".") and self.peek(1).kind == IDENTIFIER:
            self.i += 2
        if self.at("("):
            self.skip_balanced("(", ")")

    def modifiers(self) -> set[str]:
        mods: set[str] = set()
        while True:
            tok = self.peek()
            if tok.text == "@" and not self.at("interface", 1):
                self.annotation()
            elif tok.text in MODIFIERS and tok.kind != PUNCT:
                # 'default' as a switch label never reaches member level
                mods.add(tok.text)
                self.i += 1
            elif tok.text == "non" and self.at("-", 1) and self.at("sealed", 2):
                self.i += 3
            else:
                return mods

    def qualified_name(self) -> str:
        parts = [self.ident() or ""]
        while self.at(".") and self.peek(1).kind == IDENTIFIER:
            self.i += 1
            parts.append(self.ident())
        return ".".join(parts)

    def type_ref(self) -> list[str] | None:
        """Parse a type reference; returns its token texts (generics included) or None."""
        while self.at("@") and not self.at("interface", 1):
            self.annotation()
        tok = self.peek()
        if not (tok.kind == IDENTIFIER or (tok.kind == KEYWORD and tok.text in PRIMITIVES)):
            return None
        texts = [self.advance().text]
        if tok.kind == IDENTIFIER:
            while True:
                if self.at("<"):
                    texts.extend(self.skip_angles())
                if self.at(".") and self.peek(1).kind == IDENTIFIER:
                    self.i += 1
                    texts.extend((".", self.advance().text))
                    continue
                break
        while self.at("[") and self.at("]", 1):
            self.i += 2
            texts.append("[]")
        if self.at("..."):
            self.i += 1
            texts.append("...")
        return texts

    def type_list(self) -> list[str]:
        refs: list[str] = []
        while True:
            texts = self.type_ref()
            if texts is None:
                break
            refs.append(_qualified_erased(texts))
            if not self.accept(","):
                break
        return refs

    def params(self) -> tuple[str, ...]:
        inner = self.skip_balanced("(", ")")
        groups: list[list[str]] = [[]]
        angle = paren = 0
        for tok in inner:
            t = tok.text
            if t == "<":
                angle += 1
            elif t == ">":
                angle -= 1
            elif t == "(":
                paren += 1
            elif t == ")":
                paren -= 1
            elif t == "," and angle == 0 and paren == 0:
                groups.append([])
                continue
            groups[-1].append(t)
        out = []
        for g in groups:
            g = _strip_annotations(g)
            g = [t for t in g if t != "final"]
            if not g:
                continue
            dims = ""
            while len(g) >= 2 and g[-2:] == ["[", "]"]:
                dims += "[]"
                g = g[:-2]
            if len(g) >= 2 and g[-1] != "this":
                g = g[:-1]  # drop the parameter name
            elif len(g) >= 2:
                continue  # explicit receiver parameter
            out.append(_erase(g) + dims)
        return tuple(out)

    def starts_type_decl(self) -> bool:
        tok = self.peek()
        if tok.kind == KEYWORD and tok.text in ("class", "interface", "enum"):
            return True
        if tok.text == "@" and self.at("interface", 1):
            return True
        if tok.kind == IDENTIFIER and tok.text == "aspect" and self.peek(1).kind == IDENTIFIER:
            return True
        if tok.kind == IDENTIFIER and tok.text == "record" and self.peek(1).kind == IDENTIFIER:
            return self.peek(2).text in ("(", "<")
        return False

    def type_decl(self, mods: set[str], enclosing: str | None) -> None:
        head = self.advance()
        keyword = head.text
        if keyword == "@":
            self.advance()
            keyword = "@interface"
        name = self.ident()
        if name is None:
            self.warn(f"{keyword} without a name; skipped", head)
            self.skip_member()
            return
        if enclosing:
            qname = f"{enclosing}.{name}"
        elif self.unit.package_name:
            qname = f"{self.unit.package_name}.{name}"
        else:
            qname = name
        kind = {"interface": INTERFACE, "@interface": INTERFACE, "aspect": ASPECT}.get(keyword, CLASS)
        decl = TypeDecl(qname, kind, is_abstract="abstract" in mods, source=(self.file.absolute_path, head.line))
        if self.at("<"):
            self.skip_angles()
        if keyword == "record" and self.at("("):
            self.skip_balanced("(", ")")
        while not self.at("{"):
            tok = self.peek()
            if tok.kind == END:
                raise ParseFailure(f"missing body for {qname}", head.line)
            if self.accept("extends"):
                refs = self.type_list()
                if kind != INTERFACE and len(refs) > 1:
                    self.warn(f"{qname}: extra supertypes {refs[1:]} ignored", tok)
                    refs = refs[:1]
                decl.extends_refs.extend(refs)
            elif self.accept("implements"):
                decl.implements_refs.extend(self.type_list())
            elif tok.text == "permits" and tok.kind == IDENTIFIER:
                self.i += 1
                self.type_list()
            elif tok.kind == IDENTIFIER and tok.text in ASPECT_INSTANTIATION and self.at("(", 1):
                self.i += 1
                self.skip_balanced("(", ")")
            else:
                self.warn(f"unexpected {tok.text!r} in header of {qname}", tok)
                self.i += 1
        self.unit.types.append(decl)
        self.i += 1  # '{'
        if keyword == "enum":
            self.enum_constants()
        self.members(decl)

    def enum_constants(self) -> None:
        while True:
            tok = self.peek()
            if tok.kind == END or tok.text == "}":
                return
            if tok.text == ";":
                self.i += 1
                return
            if tok.text == "(":
                self.skip_balanced("(", ")")
            elif tok.text == "{":
                self.skip_balanced()
            else:
                self.i += 1

    def members(self, decl: TypeDecl) -> None:
        while True:
            tok = self.peek()
            if tok.kind == END:
                raise ParseFailure(f"unterminated body of {decl.qualified_name}", decl.source[1])
            if tok.text == "}":
                self.i += 1
                return
            if tok.text == ";":
                self.i += 1
                continue
            start = self.i
            self.member(decl)
            if self.i == start:  # no progress: drop one token
                self.warn(f"unexpected {tok.text!r} in {decl.qualified_name}", tok)
                self.i += 1

    def member(self, decl: TypeDecl) -> None:
        first = self.peek()
        mods = self.modifiers()
        tok = self.peek()
        if tok.text == "{":
            self.warn(f"initializer block in {decl.qualified_name} skipped", tok)
            self.skip_balanced()
            return
        if tok.text == "}":
            return
        if self.starts_type_decl():
            self.type_decl(mods, decl.qualified_name)
            return
        if tok.kind == IDENTIFIER and tok.text == "pointcut" and self.peek(1).kind == IDENTIFIER:
            self.pointcut(decl, mods)
            return
        if tok.kind == IDENTIFIER and tok.text == "declare" and (self.peek(1).kind == IDENTIFIER or self.at("@", 1)):
            self.warn(f"inter-type 'declare' in {decl.qualified_name} skipped", tok)
            self.skip_member()
            return
        if decl.kind == ASPECT and tok.kind == IDENTIFIER and tok.text in ("before", "after", "around") and self.at("(", 1):
            self.i += 1
            self.advice(decl, tok.text)
            return
        if self.at("<"):
            self.skip_angles()
        tok = self.peek()
        if tok.kind == IDENTIFIER and tok.text == decl.simple_name and self.at("(", 1):
            self.i += 1
            self.method(decl, mods, CONSTRUCTOR, "void")
            return
        type_texts = self.type_ref()
        if type_texts is None:
            self.warn(f"unrecognised member in {decl.qualified_name} skipped", first)
            self.skip_member()
            return
        if decl.kind == ASPECT and self.at("around") and self.at("(", 1):
            self.i += 1
            self.advice(decl, "around")
            return
        name_tok = self.peek()
        if name_tok.kind != IDENTIFIER:
            self.warn(f"unrecognised member in {decl.qualified_name} skipped", first)
            self.skip_member()
            return
        self.i += 1
        if self.at("."):
            self.warn(f"inter-type member {name_tok.text}.… in {decl.qualified_name} skipped", name_tok)
            self.skip_member()
            return
        type_text = _erase(type_texts)
        if self.at("("):
            self.method(decl, mods, name_tok.text, type_text)
        else:
            self.fields(decl, mods, name_tok.text, type_text)

    def method(self, decl: TypeDecl, mods: set[str], name: str, return_type: str) -> None:
        params = self.params()
        while self.at("[") and self.at("]", 1):
            self.i += 2
            return_type += "[]"
        if self.accept("throws"):
            self.type_list()
        has_body = False
        if self.at("{"):
            self.skip_balanced()
            has_body = True
        elif self.accept("default"):
            self.skip_member()
        else:
            if not self.accept(";"):
                self.warn(f"malformed method {name} in {decl.qualified_name}")
                self.skip_member()
        is_abstract = "abstract" in mods or (
            decl.kind == INTERFACE and not has_body and not mods & {"static", "default", "native"}
        )
        decl.methods.append(MethodSig(name, params, return_type, is_abstract, "static" in mods))

    def fields(self, decl: TypeDecl, mods: set[str], first_name: str, type_text: str) -> None:
        is_static = "static" in mods or decl.kind == INTERFACE
        name: str | None = first_name
        while True:
            dims = ""
            while self.at("[") and self.at("]", 1):
                self.i += 2
                dims += "[]"
            decl.fields.append(FieldSig(name, type_text + dims, is_static))
            if self.accept("="):
                self.initializer()
            if self.accept(";"):
                return
            if self.accept(","):
                name = self.ident()
                if name is not None:
                    continue
            self.warn(f"malformed field declaration in {decl.qualified_name}")
            self.skip_member()
            return

    def initializer(self) -> None:
        """Skip a field initializer, leaving the terminating ',' or ';' unconsumed."""
        while True:
            tok = self.peek()
            if tok.kind == END or (tok.text == "}" and tok.kind == PUNCT):
                return
            if tok.kind == PUNCT:
                if tok.text == ";":
                    return
                if tok.text == "," and self.peek(1).kind == IDENTIFIER and self.peek(2).text in ("=", ",", ";", "["):
                    return
                if tok.text == "{":
                    self.skip_balanced()
                    continue
                if tok.text == "(":
                    self.skip_balanced("(", ")")
                    continue
                if tok.text == "[":
                    self.skip_balanced("[", "]")
                    continue
            self.i += 1

    def pointcut(self, decl: TypeDecl, mods: set[str]) -> None:
        self.i += 1  # 'pointcut'
        name = self.advance().text
        params = self.params() if self.at("(") else ()
        expr: list[str] = []
        if self.accept(":"):
            depth = 0
            while True:
                tok = self.peek()
                if tok.kind == END or (tok.text == "}" and depth == 0):
                    break
                if tok.text == ";" and depth == 0:
                    break
                if tok.text == "(":
                    depth += 1
                elif tok.text == ")":
                    depth -= 1
                expr.append(tok.text)
                self.i += 1
        if not self.accept(";"):
            self.warn(f"pointcut {name} in {decl.qualified_name} not terminated by ';'")
        if decl.kind != ASPECT:
            self.warn(f"pointcut {name} outside an aspect ignored")
            return
        decl.pointcuts.append(PointcutDecl(name, params, not expr, " ".join(expr)))

    def advice(self, decl: TypeDecl, kind: str) -> None:
        self.params()
        if kind == "after" and self.peek().text in ("returning", "throwing"):
            self.i += 1
            if self.at("("):
                self.skip_balanced("(", ")")
        if self.accept("throws"):
            self.type_list()
        expr: list[Token] = []
        if self.accept(":"):
            depth = 0
            while True:
                tok = self.peek()
                if tok.kind == END or (depth == 0 and tok.text in ("{", ";", "}")):
                    break
                if tok.text == "(":
                    depth += 1
                elif tok.text == ")":
                    depth -= 1
                expr.append(tok)
                self.i += 1
        else:
            self.warn(f"{kind} advice in {decl.qualified_name} has no pointcut")
        body: list[Token] = []
        if self.at("{"):
            body = self.skip_balanced()
        else:
            self.warn(f"{kind} advice in {decl.qualified_name} has no body")
            self.skip_member()
        decl.advices.append(
            AdviceDecl(len(decl.advices) + 1, kind, bound_pointcut(expr), frozenset(extract_advice_calls(body)))
        )

    def unit_header(self) -> None:
        while self.at("@") and not self.at("interface", 1):
            self.annotation()
        if self.accept("package"):
            self.unit.package_name = self.qualified_name()
            self.accept(";")
        while self.at("import"):
            self.i += 1
            static = self.accept("static")
            parts: list[str] = []
            while not self.at(";") and self.peek().kind != END:
                parts.append(self.advance().text)
            self.accept(";")
            if not static:
                self.unit.imports.append("".join(parts))

    def parse(self) -> SourceUnit:
        check_braces(self.toks)
        self.unit_header()
        while self.peek().kind != END:
            if self.accept(";"):
                continue
            start = self.i
            mods = self.modifiers()
            if self.starts_type_decl():
                self.type_decl(mods, None)
                continue
            tok = self.peek()
            if tok.kind == END:
                break
            self.warn(f"unexpected {tok.text!r} at top level skipped", tok)
            self.skip_member()
            if self.i == start or self.at("}"):
                self.i += 1
        return self.unit


def bound_pointcut(expr: list[Token]) -> str | None:
    """First named-pointcut reference in an advice's pointcut expression."""
    i = 0
    n = len(expr)
    while i < n:
        tok = expr[i]
        if tok.text == "@" and i + 1 < n:
            i += 2
            if i < n and expr[i].text == "(":
                i = _skip_parens(expr, i)
            continue
        if tok.kind in (IDENTIFIER, KEYWORD) and i + 1 < n and expr[i + 1].text == "(":
            if tok.text in PRIMITIVE_POINTCUTS or tok.kind == KEYWORD:
                i = _skip_parens(expr, i + 1)
                continue
            return tok.text
        i += 1
    return None


def _skip_parens(expr: list[Token], i: int) -> int:
    depth = 0
    while i < len(expr):
        if expr[i].text == "(":
            depth += 1
        elif expr[i].text == ")":
            depth -= 1
            if depth == 0:
                return i + 1
        i += 1
    return i


def _strip_annotations(texts: list[str]) -> list[str]:
    out: list[str] = []
    i = 0
    while i < len(texts):
        if texts[i] == "@":
            i += 2
            while i + 1 < len(texts) and texts[i] == ".":
                i += 2
            if i < len(texts) and texts[i] == "(":
                depth = 0
                while i < len(texts):
                    if texts[i] == "(":
                        depth += 1
                    elif texts[i] == ")":
                        depth -= 1
                        if depth == 0:
                            i += 1
                            break
                    i += 1
            continue
        out.append(texts[i])
        i += 1
    return out


def _qualified_erased(texts: list[str]) -> str:
    """Supertype reference text with generic arguments and array suffixes removed."""
    out: list[str] = []
    depth = 0
    for t in texts:
        if t == "<":
            depth += 1
        elif t == ">":
            depth -= 1
        elif depth == 0 and t not in ("[]", "..."):
            out.append(t)
    return "".join(out)


def parse_unit(tokens: list[Token], file: SourceFile) -> SourceUnit:
    return _Parser(tokens, file).parse()


def parse_source(text: str, file: SourceFile) -> SourceUnit:
    return parse_unit(tokenize(text), file)


def parse_file(file: SourceFile) -> SourceUnit:
    raw = file.absolute_path.read_bytes()
    return parse_source(raw.decode("utf-8-sig", errors="replace"), file)
