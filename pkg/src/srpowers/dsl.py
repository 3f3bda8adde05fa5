"""Text format for complexes and ideals.

    complex n=5 {1 2} {2 3} {3 4} {4 5} {1 5}
    ideal n=4: x1*x2, x2*x3, x3*x4

Whitespace is free and ``#`` starts a comment that runs to the end of the
line. ``{}`` denotes the empty face, a complex with no braces is the void
complex, and the bare terms ``0`` and ``1`` give the zero and unit ideals.
The rendering ``(x1^2*x3, x2)`` is accepted as well when the arity is
supplied separately.
"""

from __future__ import annotations

import re
import warnings
from typing import NamedTuple

from .complexes import SimplicialComplex, maximal_masks, to_mask
from .errors import ArityMismatch, DSLSyntaxError, VertexOutOfRange
from .ideals import MonomialIdeal


class MinimalizationWarning(UserWarning):
    """Input listed a redundant facet or generator."""


class Token(NamedTuple):
    kind: str
    text: str
    line: int
    column: int


_TOKEN = re.compile(r"(?P<ws>[ \t\r]+)|(?P<nl>\n)|(?P<comment>#[^\n]*)|(?P<var>x(?=\d))|(?P<word>[a-z]+)|(?P<int>\d+)|(?P<sym>[{}=:,*^()])")


def tokenize(text: str) -> list[Token]:
    tokens = []
    line, start, pos = 1, 0, 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            raise DSLSyntaxError(f"unexpected character {text[pos]!r}", line, pos - start + 1)
        kind = m.lastgroup
        if kind == "nl":
            line, start = line + 1, m.end()
        elif kind not in ("ws", "comment"):
            tokens.append(Token(kind, m.group(), line, pos - start + 1))
        pos = m.end()
    tokens.append(Token("eof", "", line, pos - start + 1))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.tokens = tokenize(text)
        self.pos = 0

    @property
    def peek(self) -> Token:
        return self.tokens[self.pos]

    def fail(self, message: str, tok: Token | None = None):
        tok = tok or self.peek
        raise DSLSyntaxError(message, tok.line, tok.column)

    def take(self, kind: str, text: str | None = None) -> Token:
        tok = self.peek
        if tok.kind != kind or (text is not None and tok.text != text):
            want = repr(text) if text is not None else kind
            got = repr(tok.text) if tok.kind != "eof" else "end of input"
            self.fail(f"expected {want}, found {got}")
        self.pos += 1
        return tok

    def accept(self, kind: str, text: str | None = None) -> bool:
        tok = self.peek
        if tok.kind == kind and (text is None or tok.text == text):
            self.pos += 1
            return True
        return False

    def integer(self) -> tuple[int, Token]:
        tok = self.take("int")
        return int(tok.text), tok

    def header(self, keyword: str) -> int:
        self.take("word", keyword)
        self.take("word", "n")
        self.take("sym", "=")
        n, _ = self.integer()
        return n

    def end(self):
        self.take("eof")

    # complexes

    def complex(self) -> SimplicialComplex:
        n = self.header("complex")
        faces = []
        while self.accept("sym", "{"):
            face = []
            while self.peek.kind == "int":
                v, tok = self.integer()
                if not 1 <= v <= n:
                    raise VertexOutOfRange(f"vertex {v} outside [1, {n}] (line {tok.line}, column {tok.column})")
                face.append(v)
            self.take("sym", "}")
            faces.append(to_mask(face))
        self.end()
        kept = maximal_masks(faces)
        if len(kept) < len(faces):
            warnings.warn(f"dropped {len(faces) - len(kept)} non-maximal or repeated face(s)", MinimalizationWarning, stacklevel=3)
        return SimplicialComplex.from_masks(n, kept)

    # ideals

    def term(self, n: int) -> tuple:
        if self.peek.kind == "int":
            value, tok = self.integer()
            if value not in (0, 1):
                self.fail("only 0 and 1 may stand alone as terms", tok)
            return (0,) * n if value == 1 else None
        exps = [0] * n
        while True:
            self.take("var")
            i, tok = self.integer()
            if not 1 <= i <= n:
                raise ArityMismatch(f"x{i} in a ring with {n} variables (line {tok.line}, column {tok.column - 1})")
            e = 1
            if self.accept("sym", "^"):
                e, _ = self.integer()
            exps[i - 1] += e
            if not self.accept("sym", "*"):
                return tuple(exps)

    def terms(self, n: int, closer: str | None = None) -> list:
        gens = [self.term(n)]
        while self.accept("sym", ","):
            gens.append(self.term(n))
        if closer:
            self.take("sym", closer)
        self.end()
        return [g for g in gens if g is not None]

    def ideal(self) -> MonomialIdeal:
        n = self.header("ideal")
        self.take("sym", ":")
        return _build_ideal(n, self.terms(n))

    def bracketed(self, n: int) -> MonomialIdeal:
        self.take("sym", "(")
        return _build_ideal(n, self.terms(n, ")"))


def _build_ideal(n: int, gens: list) -> MonomialIdeal:
    ideal = MonomialIdeal(n, gens)
    if len(ideal.generators) < len(gens):
        warnings.warn(f"dropped {len(gens) - len(ideal.generators)} redundant generator(s)", MinimalizationWarning, stacklevel=3)
    return ideal


def parse_complex(text: str) -> SimplicialComplex:
    return _Parser(text).complex()


def parse_ideal(text: str, arity: int | None = None) -> MonomialIdeal:
    """Parse ``ideal n=..: ...`` or, given ``arity``, the bracketed rendering."""
    parser = _Parser(text)
    if parser.peek.kind == "sym" and parser.peek.text == "(":
        if arity is None:
            parser.fail("the bracketed form needs an explicit arity")
        return parser.bracketed(arity)
    return parser.ideal()


def parse(text: str):
    """Parse a complex or an ideal, whichever the text declares."""
    parser = _Parser(text)
    tok = parser.peek
    if tok.kind == "word" and tok.text == "complex":
        return parser.complex()
    if tok.kind == "word" and tok.text == "ideal":
        return parser.ideal()
    parser.fail("expected 'complex' or 'ideal'")


def render(obj) -> str:
    """Canonical DSL text for a complex or an ideal."""
    if isinstance(obj, SimplicialComplex):
        return obj.render()
    return obj.to_dsl()
