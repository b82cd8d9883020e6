"""Text format for presentations, words and proof scripts.

Grammar (whitespace-insensitive, ``#`` starts a comment running to the end
of the line)::

    presentation := '<' genlist '|' rellist '>'
    genlist      := [ident {',' ident}]
    rellist      := [relation {',' relation}]
    relation     := word ['=' word]
    word         := '1' | term {term}
    term         := atom ['^' ['-'] digits]
    atom         := ident | '[' word ',' word ']' | '(' word ')'
    ident        := [A-Za-z][A-Za-z0-9_]*

A relation ``u = v`` becomes the relator ``u v^-1``.  ``[u, v]`` expands to
``u v u^-1 v^-1`` while parsing.

Proof scripts are line oriented::

    presentation NAME                          (optional header)
    step NAME: WORD = WORD [via FACTOR {, FACTOR}]
    FACTOR := 'conj(' WORD ',' SOURCE ')' ['^-1']
    SOURCE := ('r' digits | NAME) ['^-1']

``rK`` names the K-th relator of the presentation, counting from 1.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Optional, Union

from .presentation import Presentation
from .proofcheck import Factor, ProofScript, Step
from .word import Alphabet, Word, format_word

MAX_EXPONENT = 2**31 - 1
MAX_WORD_LENGTH = 1_000_000
MAX_DEPTH = 200

_RELATOR_REF = re.compile(r"r([0-9]+)\Z")


@dataclass(frozen=True)
class SourceSpan:
    """Byte offsets ``[start, end)`` into the input."""

    start: int
    end: int


class ParseError(ValueError):
    def __init__(self, message: str, span: SourceSpan):
        super().__init__(f"{message} at bytes {span.start}..{span.end}")
        self.message = message
        self.span = span


@dataclass(frozen=True)
class _Token:
    kind: str  # 'ident', 'num', 'sym', 'eof'
    text: str
    start: int  # char offsets
    end: int


_TOKEN_RE = re.compile(r"""
    (?P<ws>\s+|\#[^\n]*)
  | (?P<ident>[A-Za-z][A-Za-z0-9_]*)
  | (?P<num>[0-9]+)
  | (?P<sym>[<>|,=\[\]()^\-:])
""", re.VERBOSE)


class _Parser:
    def __init__(self, text: str, base: int = 0, full_text: Optional[str] = None):
        self.text = text
        self.base = base
        self.full_text = full_text if full_text is not None else text
        self.tokens = self._tokenize()
        self.pos = 0
        self.depth = 0

    def span(self, start: int, end: int) -> SourceSpan:
        s = self.base + start
        e = self.base + end
        return SourceSpan(len(self.full_text[:s].encode("utf-8")),
                          len(self.full_text[:e].encode("utf-8")))

    def error(self, message: str, tok: _Token) -> ParseError:
        return ParseError(message, self.span(tok.start, tok.end))

    def _tokenize(self) -> list[_Token]:
        tokens = []
        i = 0
        text = self.text
        while i < len(text):
            m = _TOKEN_RE.match(text, i)
            if m is None:
                raise ParseError(f"unexpected character {text[i]!r}", self.span(i, i + 1))
            kind = m.lastgroup
            if kind != "ws":
                tokens.append(_Token(kind, m.group(), m.start(), m.end()))
            i = m.end()
        tokens.append(_Token("eof", "", len(text), len(text)))
        return tokens

    @property
    def tok(self) -> _Token:
        return self.tokens[self.pos]

    def advance(self) -> _Token:
        t = self.tokens[self.pos]
        if t.kind != "eof":
            self.pos += 1
        return t

    def at(self, text: str) -> bool:
        return self.tok.kind == "sym" and self.tok.text == text

    def expect(self, text: str) -> _Token:
        if not self.at(text):
            found = self.tok.text or "end of input"
            raise self.error(f"expected {text!r}, found {found!r}", self.tok)
        return self.advance()

    def expect_eof(self):
        if self.tok.kind != "eof":
            raise self.error(f"unexpected {self.tok.text!r}", self.tok)

    # words -----------------------------------------------------------

    def _starts_term(self) -> bool:
        return self.tok.kind == "ident" or self.at("[") or self.at("(")

    def word(self, alphabet: Alphabet) -> list[int]:
        first = self.tok
        if first.kind == "num":
            if first.text != "1":
                raise self.error(f"unexpected number {first.text!r}", first)
            self.advance()
            return []
        if not self._starts_term():
            found = first.text or "end of input"
            raise self.error(f"expected a word, found {found!r}", first)
        code: list[int] = []
        while self._starts_term():
            code.extend(self.term(alphabet))
            if len(code) > MAX_WORD_LENGTH:
                raise self.error("word too long", first)
        return code

    def term(self, alphabet: Alphabet) -> list[int]:
        start = self.tok
        base = self.atom(alphabet)
        if not self.at("^"):
            return base
        self.advance()
        sign = 1
        if self.at("-"):
            self.advance()
            sign = -1
        num = self.tok
        if num.kind != "num":
            raise self.error("expected exponent digits", num)
        self.advance()
        n = int(num.text)
        if n > MAX_EXPONENT or len(base) * n > MAX_WORD_LENGTH:
            raise ParseError("exponent too large", self.span(start.start, num.end))
        if sign < 0:
            base = [-x for x in reversed(base)]
        return base * n

    def atom(self, alphabet: Alphabet) -> list[int]:
        t = self.tok
        if t.kind == "ident":
            self.advance()
            if t.text not in alphabet:
                raise self.error(f"unknown generator {t.text!r}", t)
            return [alphabet.index(t.text) + 1]
        self.depth += 1
        if self.depth > MAX_DEPTH:
            raise self.error("nesting too deep", t)
        try:
            if self.at("("):
                self.advance()
                inner = self.word(alphabet)
                self.expect(")")
                return inner
            self.expect("[")
            u = self.word(alphabet)
            self.expect(",")
            v = self.word(alphabet)
            self.expect("]")
            inv_u = [-x for x in reversed(u)]
            inv_v = [-x for x in reversed(v)]
            return u + v + inv_u + inv_v
        finally:
            self.depth -= 1

    # presentations ---------------------------------------------------

    def presentation(self) -> Presentation:
        self.expect("<")
        names: list[str] = []
        seen: set[str] = set()
        if self.tok.kind == "ident":
            while True:
                t = self.tok
                if t.kind != "ident":
                    raise self.error("expected a generator name", t)
                self.advance()
                if t.text in seen:
                    raise self.error(f"duplicate generator {t.text!r}", t)
                seen.add(t.text)
                names.append(t.text)
                if not self.at(","):
                    break
                self.advance()
        self.expect("|")
        alphabet = Alphabet(names)
        relators = []
        if not self.at(">"):
            while True:
                lhs = self.word(alphabet)
                if self.at("="):
                    self.advance()
                    rhs = self.word(alphabet)
                    lhs = lhs + [-x for x in reversed(rhs)]
                relators.append(Word(alphabet, lhs))
                if not self.at(","):
                    break
                self.advance()
        self.expect(">")
        self.expect_eof()
        return Presentation(alphabet, tuple(relators))


def _decode(text: Union[str, bytes]) -> str:
    if isinstance(text, str):
        return text
    try:
        return text.decode("utf-8")
    except UnicodeDecodeError as exc:
        raise ParseError("invalid UTF-8", SourceSpan(exc.start, exc.end)) from None


def parse_presentation(text: Union[str, bytes]) -> Presentation:
    return _Parser(_decode(text)).presentation()


def parse_word(text: Union[str, bytes], alphabet: Alphabet) -> Word:
    p = _Parser(_decode(text))
    code = p.word(alphabet)
    p.expect_eof()
    return Word(alphabet, code)


def serialize_presentation(p: Presentation) -> str:
    gens = ", ".join(p.alphabet.names)
    rels = ", ".join(format_word(r) for r in p.relators)
    if not gens and not rels:
        return "< | >"
    return f"< {gens} | {rels} >"


# proof scripts -------------------------------------------------------

_STEP_RE = re.compile(r"\s*step\s+([A-Za-z][A-Za-z0-9_]*)\s*:(.*)\Z", re.S)
_HEADER_RE = re.compile(r"\s*presentation\s+(\S+)\s*\Z")


def _strip_comment(line: str) -> str:
    i = line.find("#")
    return line if i < 0 else line[:i]


def _split_top(text: str, sep: str) -> list[tuple[int, str]]:
    """Split at ``sep`` outside brackets, keeping char offsets."""
    parts = []
    depth = 0
    last = 0
    for i, ch in enumerate(text):
        if ch in "([":
            depth += 1
        elif ch in ")]":
            depth -= 1
        elif depth == 0 and text.startswith(sep, i):
            parts.append((last, text[last:i]))
            last = i + len(sep)
    parts.append((last, text[last:]))
    return parts


_VIA_RE = re.compile(r"\bvia\b")
_FACTOR_RE = re.compile(
    r"\s*conj\s*\((?P<body>.*)\)\s*(?P<inv>\^\s*-\s*1)?\s*\Z", re.S)
_SOURCE_RE = re.compile(
    r"\s*(?P<name>[A-Za-z][A-Za-z0-9_]*)\s*(?P<inv>\^\s*-\s*1)?\s*\Z")


def parse_proof(text: Union[str, bytes], alphabet: Alphabet) -> ProofScript:
    text = _decode(text)
    steps: list[Step] = []
    names: set[str] = set()
    header = None
    offset = 0
    for line in text.splitlines(keepends=True):
        line_start = offset
        offset += len(line)
        body = _strip_comment(line.rstrip("\r\n"))
        if not body.strip():
            continue

        def fail(msg, start=0, end=None):
            end = len(body) if end is None else end
            p = _Parser("", base=line_start, full_text=text)
            return ParseError(msg, p.span(start, end))

        m = _HEADER_RE.match(body)
        if m:
            if header is not None or steps:
                raise fail("presentation header must come first")
            header = m.group(1)
            continue
        m = _STEP_RE.match(body)
        if not m:
            raise fail("expected 'step NAME: WORD = WORD via ...'")
        name = m.group(1)
        if _RELATOR_REF.match(name):
            raise fail(f"step name {name!r} clashes with relator references", m.start(1), m.end(1))
        if name in names:
            raise fail(f"duplicate step name {name!r}", m.start(1), m.end(1))
        rest_start = m.start(2)
        rest = m.group(2)
        via = _VIA_RE.search(rest)
        claim_text = rest if via is None else rest[:via.start()]
        sides = _split_top(claim_text, "=")
        if len(sides) != 2:
            raise fail("a step claims exactly one identity 'WORD = WORD'", rest_start)
        lhs, rhs = (_sub_word(text, line_start + rest_start + o, s, alphabet) for o, s in sides)
        factors: list[Factor] = []
        if via is not None:
            flist_start = rest_start + via.end()
            for o, ftext in _split_top(rest[via.end():], ","):
                fstart = flist_start + o
                fm = _FACTOR_RE.match(ftext)
                if not fm:
                    raise fail("expected 'conj(WORD, SOURCE)'", fstart, fstart + len(ftext))
                body_start = fstart + fm.start("body")
                parts = _split_top(fm.group("body"), ",")
                if len(parts) != 2:
                    raise fail("conj takes a word and a source", fstart, fstart + len(ftext))
                (co, ctext), (so, stext) = parts
                conj = _sub_word(text, line_start + body_start + co, ctext, alphabet)
                sm = _SOURCE_RE.match(stext)
                if not sm:
                    raise fail("expected a relator reference rK or a step name",
                               body_start + so, body_start + so + len(stext))
                exponent = -1 if sm.group("inv") else 1
                if fm.group("inv"):
                    exponent = -exponent
                src = sm.group("name")
                rm = _RELATOR_REF.match(src)
                if rm:
                    source: Union[int, str] = int(rm.group(1))
                else:
                    if src not in names:
                        raise fail(f"unknown or later step {src!r}",
                                   body_start + so + sm.start("name"),
                                   body_start + so + sm.end("name"))
                    source = src
                factors.append(Factor(conj, source, exponent))
        names.add(name)
        steps.append(Step(name, lhs, rhs, tuple(factors)))
    return ProofScript(header, tuple(steps))


def _sub_word(full: str, start: int, text: str, alphabet: Alphabet) -> Word:
    p = _Parser(text, base=start, full_text=full)
    code = p.word(alphabet)
    p.expect_eof()
    return Word(alphabet, code)


def serialize_proof(script: ProofScript) -> str:
    lines = []
    if script.presentation is not None:
        lines.append(f"presentation {script.presentation}")
    for step in script.steps:
        line = f"step {step.name}: {format_word(step.lhs)} = {format_word(step.rhs)}"
        if step.factors:
            line += " via " + ", ".join(_format_factor(f) for f in step.factors)
        lines.append(line)
    return "\n".join(lines) + "\n"


def _format_factor(f: Factor) -> str:
    src = f"r{f.source}" if isinstance(f.source, int) else f.source
    if f.exponent < 0:
        src += "^-1"
    return f"conj({format_word(f.conjugator)}, {src})"

