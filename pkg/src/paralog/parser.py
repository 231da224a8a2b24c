"""Text grammar for programs and hypothesis files.

Program grammar::

    program  := { rule } ;
    rule     := literal [ ":-" body ] "." ;
    body     := conjunct { ";" conjunct } ;
    conjunct := element { "," element } ;
    element  := literal | "not" literal | literal "in" tvset | tconst ;
    literal  := [ "-" ] atom ;
    atom     := ident [ "(" term { "," term } ")" ] ;
    tvset    := "{" tv { "," tv } "}" ;      tv := "t" | "f" | "u" | "i" ;
    tconst   := "#t" | "#f" | "#u" | "#i" ;

Identifiers start lowercase, variables start uppercase, ``%`` comments run
to end of line.  Hypothesis files are lines of ``assume not l = t.`` or
``assume not l = f.``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Optional, Tuple

from .ast import Atom, Const, DefaultLit, Inspect, Lit, Literal, Program, Rule
from .hypotheses import HypothesisSet, validate_coverage
from .values import TruthValue

_TV_BY_NAME = {"f": TruthValue.FALSE, "u": TruthValue.UNKNOWN,
               "i": TruthValue.INCONSISTENT, "t": TruthValue.TRUE}

_SYMBOLS = (":-", "(", ")", "{", "}", ",", ";", ".", "-", "=")


class ProgramSyntaxError(ValueError):
    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


@dataclass(frozen=True)
class _Token:
    kind: str  # "ident" | "var" | "const" | "sym" | "eof"
    text: str
    line: int
    column: int


def _tokenize(text: str) -> List[_Token]:
    tokens = []
    line, col = 1, 1
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch == "\n":
            line += 1
            col = 1
            i += 1
            continue
        if ch in " \t\r":
            i += 1
            col += 1
            continue
        if ch == "%":
            while i < n and text[i] != "\n":
                i += 1
            continue
        if ch == "#":
            j = i + 1
            while j < n and text[j].isalpha():
                j += 1
            name = text[i + 1:j]
            if name not in _TV_BY_NAME:
                raise ProgramSyntaxError(f"unknown truth constant '#{name}'", line, col)
            tokens.append(_Token("const", name, line, col))
            col += j - i
            i = j
            continue
        if ch.isalpha() or ch == "_":
            j = i
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            word = text[i:j]
            kind = "var" if word[0].isupper() else "ident"
            tokens.append(_Token(kind, word, line, col))
            col += j - i
            i = j
            continue
        if text.startswith(":-", i):
            tokens.append(_Token("sym", ":-", line, col))
            i += 2
            col += 2
            continue
        if ch in "(){},;.-=":
            tokens.append(_Token("sym", ch, line, col))
            i += 1
            col += 1
            continue
        raise ProgramSyntaxError(f"unexpected character {ch!r}", line, col)
    tokens.append(_Token("eof", "", line, col))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.tokens = _tokenize(text)
        self.pos = 0

    @property
    def current(self) -> _Token:
        return self.tokens[self.pos]

    def advance(self) -> _Token:
        token = self.current
        self.pos += 1
        return token

    def error(self, message: str) -> ProgramSyntaxError:
        return ProgramSyntaxError(message, self.current.line, self.current.column)

    def expect_sym(self, sym: str) -> None:
        if self.current.kind == "sym" and self.current.text == sym:
            self.advance()
            return
        raise self.error(f"expected '{sym}', found {self.current.text!r}")

    def at_sym(self, sym: str) -> bool:
        return self.current.kind == "sym" and self.current.text == sym

    def at_keyword(self, word: str) -> bool:
        return self.current.kind == "ident" and self.current.text == word

    # --- grammar productions -------------------------------------------

    def parse_program(self) -> Program:
        rules = []
        while self.current.kind != "eof":
            rules.append(self.parse_rule())
        return Program(tuple(rules))

    def parse_rule(self) -> Rule:
        if self.at_keyword("not"):
            raise self.error("a rule head must be a classical literal, not a default literal")
        head = self.parse_literal()
        if self.at_keyword("in"):
            raise self.error("a rule head must be a classical literal, not an inspection test")
        body: Tuple = ()
        if self.at_sym(":-"):
            self.advance()
            body = self.parse_body()
        self.expect_sym(".")
        return Rule(head, body)

    def parse_body(self) -> Tuple:
        conjuncts = [self.parse_conjunct()]
        while self.at_sym(";"):
            self.advance()
            conjuncts.append(self.parse_conjunct())
        return tuple(conjuncts)

    def parse_conjunct(self) -> Tuple:
        elements = [self.parse_element()]
        while self.at_sym(","):
            self.advance()
            elements.append(self.parse_element())
        return tuple(elements)

    def parse_element(self):
        if self.current.kind == "const":
            return Const(_TV_BY_NAME[self.advance().text])
        if self.at_keyword("not"):
            self.advance()
            if self.at_keyword("not"):
                raise self.error("default negation cannot be nested")
            literal = self.parse_literal()
            if self.at_keyword("in"):
                raise self.error("an inspection test cannot occur under default negation")
            return DefaultLit(literal)
        literal = self.parse_literal()
        if self.at_keyword("in"):
            self.advance()
            return Inspect(literal, self.parse_tvset())
        return Lit(literal)

    def parse_literal(self) -> Literal:
        negated = False
        if self.at_sym("-"):
            self.advance()
            negated = True
            if self.at_sym("-"):
                raise self.error("doubled strong negation is redundant; drop both signs")
        return Literal(self.parse_atom(), negated)

    def parse_atom(self) -> Atom:
        if self.current.kind != "ident":
            raise self.error(f"expected a predicate name, found {self.current.text!r}")
        name = self.advance().text
        args: List[str] = []
        if self.at_sym("("):
            self.advance()
            args.append(self.parse_term())
            while self.at_sym(","):
                self.advance()
                args.append(self.parse_term())
            self.expect_sym(")")
        return Atom(name, tuple(args))

    def parse_term(self) -> str:
        if self.current.kind in ("ident", "var"):
            return self.advance().text
        raise self.error(f"expected a constant or variable, found {self.current.text!r}")

    def parse_tvset(self) -> frozenset:
        self.expect_sym("{")
        values = set()
        if not self.at_sym("}"):
            values.add(self.parse_tv())
            while self.at_sym(","):
                self.advance()
                values.add(self.parse_tv())
        self.expect_sym("}")
        return frozenset(values)

    def parse_tv(self) -> TruthValue:
        if self.current.kind == "ident" and self.current.text in _TV_BY_NAME:
            return _TV_BY_NAME[self.advance().text]
        raise self.error(f"expected one of t, f, u, i, found {self.current.text!r}")

    # --- hypothesis files ----------------------------------------------

    def parse_hypothesis_lines(self) -> List[Tuple[Literal, TruthValue]]:
        entries = []
        while self.current.kind != "eof":
            if not self.at_keyword("assume"):
                raise self.error(f"expected 'assume', found {self.current.text!r}")
            self.advance()
            if not self.at_keyword("not"):
                raise self.error("hypotheses assign values to default literals; expected 'not'")
            self.advance()
            literal = self.parse_literal()
            if not literal.is_ground:
                raise self.error("hypothesis literals must be ground")
            self.expect_sym("=")
            value = self.parse_tv()
            if value is TruthValue.INCONSISTENT:
                raise self.error(
                    f"assumed value i is not accepted; express it with the two entries "
                    f"'assume not {literal} = f.' and 'assume not {literal.negate()} = f.'")
            if value not in (TruthValue.TRUE, TruthValue.FALSE):
                raise self.error("assumed values must be t or f")
            self.expect_sym(".")
            entries.append((literal, value))
        return entries


def parse_program(text: str) -> Program:
    """Parse program text into an AST; raises :class:`ProgramSyntaxError`
    with line/column on malformed input."""
    return _Parser(text).parse_program()


def parse_literal(text: str) -> Literal:
    """Parse a single literal, e.g. for model files."""
    parser = _Parser(text)
    literal = parser.parse_literal()
    if parser.current.kind != "eof":
        raise parser.error(f"unexpected trailing input {parser.current.text!r}")
    return literal


def parse_literal_set(text: str) -> frozenset:
    """Parse a braced literal set such as ``{p, q(a), -r}``."""
    stripped = text.strip()
    if not (stripped.startswith("{") and stripped.endswith("}")):
        raise ProgramSyntaxError("a literal set must be enclosed in braces", 1, 1)
    inner = stripped[1:-1].strip()
    if not inner:
        return frozenset()
    return frozenset(parse_literal(part) for part in inner.split(","))


def parse_hypotheses(text: str, program: Program) -> HypothesisSet:
    """Parse a hypothesis file and check it covers exactly the default
    literals of ``program``, one assumption each."""
    entries = _Parser(text).parse_hypothesis_lines()
    hset = HypothesisSet()
    for literal, value in entries:
        existing = hset.entries.get(literal)
        if existing is not None and value not in existing:
            raise ValueError(f"conflicting assumptions for 'not {literal}'")
        hset.assume(literal, value)
    validate_coverage(hset, program)
    return hset
