"""Parser for the character-value grammar.

    expression := term (('+'|'-') term)*
    term       := rational ('*' root)? | root
    root       := 'E(' integer ')' ('^' integer)?
    rational   := integer ('/' positive-integer)?

Whitespace is insignificant; the first term may carry a sign.
"""

from __future__ import annotations

from fractions import Fraction

from core.cyclo.field import CycloValue, root_of_unity


class CycloSyntaxError(ValueError):
    def __init__(self, message: str, text: str, position: int):
        super().__init__(f"{message} at position {position} in {text!r}")
        self.text = text
        self.position = position


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def error(self, message: str):
        raise CycloSyntaxError(message, self.text, self.pos)

    def skip_ws(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, token: str) -> None:
        self.skip_ws()
        if not self.text.startswith(token, self.pos):
            self.error(f"expected {token!r}")
        self.pos += len(token)

    def unsigned(self) -> int:
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            self.error("expected an integer")
        return int(self.text[start:self.pos])

    def integer(self) -> int:
        sign = 1
        if self.peek() in ("+", "-"):
            sign = -1 if self.text[self.pos] == "-" else 1
            self.pos += 1
        return sign * self.unsigned()

    def root(self) -> CycloValue:
        start = self.pos
        self.expect("E(")
        n = self.unsigned()
        if n == 0:
            self.pos = start
            self.error("conductor must be positive")
        self.expect(")")
        k = 1
        if self.peek() == "^":
            self.pos += 1
            k = self.integer()
        return root_of_unity(n, k)

    def term(self) -> CycloValue:
        if self.peek() == "E":
            return self.root()
        numerator = self.unsigned()
        denominator = 1
        if self.peek() == "/":
            self.pos += 1
            denominator = self.unsigned()
            if denominator == 0:
                self.error("zero denominator")
        coefficient = Fraction(numerator, denominator)
        if self.peek() == "*":
            self.pos += 1
            return self.root() * coefficient
        return CycloValue(coefficient)

    def expression(self) -> CycloValue:
        sign = 1
        if self.peek() in ("+", "-"):
            sign = -1 if self.text[self.pos] == "-" else 1
            self.pos += 1
        total = self.term() * sign
        while self.peek() in ("+", "-"):
            sign = -1 if self.text[self.pos] == "-" else 1
            self.pos += 1
            total = total + self.term() * sign
        if self.peek():
            self.error("unexpected character")
        return total


def parse_value(text: str) -> CycloValue:
    """Parse a value such as '2*E(7)^3-1/2' into canonical form."""
    if not isinstance(text, str):
        raise TypeError(f"parse_value expects a string, got {type(text).__name__}")
    if not text.strip():
        raise CycloSyntaxError("empty value", text, 0)
    return _Parser(text).expression()
