"""Text formats: the structure-equation tuple DSL and element expressions.

A Lie algebra is written as an n-tuple of entries, one per coframe
element, each entry giving the 2-form value of d on that element:
"0,0,0,12" means de4 = e1^e2.  Atoms are single digits, or bracketed
numbers "[10]" for indices above 9; terms may carry a rational
coefficient written with a slash, as in "1/2 12".

Element expressions are formal sums over named basis symbols, e.g.
"e1 - i*e2 + 1/2*E4" (lowercase e = vectors, uppercase E = coforms) and
wedge monomials "E2^E3 + E1^E4".
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Dict, List, Optional, Tuple

from .exterior import Exterior
from .scalars import GaussianRational, I, ONE, scalar


class SalamonSyntaxError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__("%s (at position %d)" % (message, position))
        self.position = position


class ExpressionError(ValueError):
    pass


# ---------------------------------------------------------------------------
# structure-equation tuples
# ---------------------------------------------------------------------------

def parse_structure_tuple(text: str) -> List[Exterior]:
    """Parse an n-tuple into the list [de^1, ..., de^n] of exact 2-forms."""
    entries = _split_entries(text)
    n = len(entries)
    forms = []
    for raw, offset in entries:
        forms.append(_parse_entry(raw, offset, n))
    return forms


def _split_entries(text: str) -> List[Tuple[str, int]]:
    entries = []
    start = 0
    depth = 0
    for pos, ch in enumerate(text):
        if ch == "[":
            depth += 1
        elif ch == "]":
            depth -= 1
            if depth < 0:
                raise SalamonSyntaxError("unbalanced ']'", pos)
        elif ch == "," and depth == 0:
            entries.append((text[start:pos], start))
            start = pos + 1
    if depth != 0:
        raise SalamonSyntaxError("unbalanced '['", len(text) - 1)
    entries.append((text[start:], start))
    if any(not e.strip() for e, _ in entries):
        raise SalamonSyntaxError("empty entry", start)
    return entries


def _parse_entry(raw: str, offset: int, n: int) -> Exterior:
    stripped = raw.strip()
    lead = offset + (len(raw) - len(raw.lstrip()))
    if stripped == "0":
        return Exterior.zero(n, 2)
    form = Exterior.zero(n, 2)
    pos = 0
    sign = 1
    first = True
    while pos < len(stripped):
        ch = stripped[pos]
        if ch in "+-":
            if first and pos == 0 and ch == "+":
                raise SalamonSyntaxError("leading '+'", lead)
            sign = 1 if ch == "+" else -1
            pos += 1
            continue
        coeff, pos = _parse_term_coefficient(stripped, pos, lead)
        a, pos = _parse_atom(stripped, pos, lead, n)
        b, pos = _parse_atom(stripped, pos, lead, n)
        value = scalar(coeff * sign)
        form = form + Exterior(n, 2, {(a - 1, b - 1): value})
        sign = 1
        first = False
        while pos < len(stripped) and stripped[pos] == " ":
            pos += 1
    if first:
        raise SalamonSyntaxError("empty entry", lead)
    return form


def _parse_term_coefficient(text: str, pos: int, lead: int) -> Tuple[Fraction, int]:
    # A coefficient must contain a slash ("1/2 12"); otherwise digits are atoms.
    probe = pos
    while probe < len(text) and text[probe].isdigit():
        probe += 1
    if probe < len(text) and text[probe] == "/" and probe > pos:
        num = int(text[pos:probe])
        probe += 1
        den_start = probe
        while probe < len(text) and text[probe].isdigit():
            probe += 1
        if probe == den_start:
            raise SalamonSyntaxError("missing denominator", lead + probe)
        den = int(text[den_start:probe])
        if den == 0:
            raise SalamonSyntaxError("zero denominator", lead + den_start)
        while probe < len(text) and text[probe] == " ":
            probe += 1
        return Fraction(num, den), probe
    return Fraction(1), pos


def _parse_atom(text: str, pos: int, lead: int, n: int) -> Tuple[int, int]:
    while pos < len(text) and text[pos] == " ":
        pos += 1
    if pos >= len(text):
        raise SalamonSyntaxError("expected an index atom", lead + pos)
    ch = text[pos]
    if ch.isdigit():
        index = int(ch)
        pos += 1
    elif ch == "[":
        end = text.find("]", pos)
        if end < 0:
            raise SalamonSyntaxError("unterminated '['", lead + pos)
        body = text[pos + 1:end].strip()
        if not body.isdigit():
            raise SalamonSyntaxError("bad bracketed index", lead + pos)
        index = int(body)
        pos = end + 1
    else:
        raise SalamonSyntaxError("unexpected character %r" % ch, lead + pos)
    if not 1 <= index <= n:
        raise SalamonSyntaxError(
            "index %d out of range for dimension %d" % (index, n), lead + pos - 1
        )
    return index, pos


def format_structure_tuple(forms: List[Exterior]) -> str:
    """Inverse of parse_structure_tuple; coefficients +-1 are written bare."""
    n = len(forms)
    entries = []
    for form in forms:
        if form.is_zero():
            entries.append("0")
            continue
        parts = []
        for (a, b), value in form.items():
            if not value.is_real():
                raise ExpressionError("structure constants must be real")
            frac = value.re
            atoms = _atom_text(a + 1) + _atom_text(b + 1)
            if frac == 1:
                text = atoms
            elif frac == -1:
                text = "-" + atoms
            else:
                mag = abs(frac)
                body = "%d/%d %s" % (mag.numerator, mag.denominator, atoms)
                text = body if frac > 0 else "-" + body
            parts.append(text)
        entry = parts[0]
        for p in parts[1:]:
            entry += p if p.startswith("-") else "+" + p
        entries.append(entry)
    return ",".join(entries)


def _atom_text(index: int) -> str:
    return str(index) if index <= 9 else "[%d]" % index


# ---------------------------------------------------------------------------
# algebra files: one tuple per line, optional "name:" prefix, '#' comments
# ---------------------------------------------------------------------------

def parse_algebra_file(text: str) -> List[Tuple[Optional[str], str]]:
    out = []
    for line in text.splitlines():
        body = line.split("#", 1)[0].strip()
        if not body:
            continue
        if ":" in body:
            name, tup = body.split(":", 1)
            out.append((name.strip(), tup.strip()))
        else:
            out.append((None, body))
    return out


# ---------------------------------------------------------------------------
# element / wedge expressions
# ---------------------------------------------------------------------------

_TOKEN_KINDS = ("number", "symbol", "i", "op", "end")


def _tokenize(text: str):
    tokens = []
    pos = 0
    while pos < len(text):
        ch = text[pos]
        if ch.isspace():
            pos += 1
            continue
        if ch in "+-*^()":
            tokens.append(("op", ch, pos))
            pos += 1
            continue
        if ch.isdigit():
            start = pos
            while pos < len(text) and text[pos].isdigit():
                pos += 1
            if pos < len(text) and text[pos] == "/":
                pos += 1
                if pos >= len(text) or not text[pos].isdigit():
                    raise ExpressionError("missing denominator at %d" % pos)
                while pos < len(text) and text[pos].isdigit():
                    pos += 1
            tokens.append(("number", text[start:pos], start))
            continue
        if ch == "i" and (pos + 1 >= len(text) or not text[pos + 1].isdigit()):
            tokens.append(("i", "i", pos))
            pos += 1
            continue
        if ch.isalpha():
            start = pos
            pos += 1
            while pos < len(text) and text[pos].isdigit():
                pos += 1
            if pos == start + 1:
                raise ExpressionError("symbol %r lacks an index at %d" % (ch, start))
            tokens.append(("symbol", text[start:pos], start))
            continue
        raise ExpressionError("unexpected character %r at %d" % (ch, pos))
    tokens.append(("end", "", len(text)))
    return tokens


class _ExprParser:
    def __init__(self, text: str, resolve: Callable[[str], Exterior]):
        self.tokens = _tokenize(text)
        self.pos = 0
        self.resolve = resolve

    def peek(self):
        return self.tokens[self.pos]

    def take(self):
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def parse(self) -> Exterior:
        total = None
        sign = ONE
        explicit = False
        while True:
            kind, value, where = self.peek()
            if kind == "end":
                if total is None or explicit:
                    raise ExpressionError("incomplete expression")
                return total
            if kind == "op" and value in "+-":
                self.take()
                sign = ONE if value == "+" else -ONE
                explicit = True
                continue
            if total is not None and not explicit:
                raise ExpressionError("expected '+' or '-' at %d" % where)
            term = self.parse_term().scale(sign)
            total = term if total is None else total + term
            sign = ONE
            explicit = False

    def parse_term(self) -> Exterior:
        coeff = ONE
        monomial = None
        saw_factor = False
        while True:
            kind, value, where = self.peek()
            if kind == "number":
                self.take()
                part = GaussianRational(Fraction(value))
                nk, nv, _ = self.peek()
                if nk == "i":
                    self.take()
                    part = part * I
                coeff = coeff * part
                saw_factor = True
            elif kind == "i":
                self.take()
                coeff = coeff * I
                saw_factor = True
            elif kind == "op" and value == "(":
                self.take()
                coeff = coeff * self.parse_parenthesized()
                saw_factor = True
            elif kind == "symbol":
                if monomial is not None:
                    raise ExpressionError("two monomials in one term at %d" % where)
                monomial = self.parse_monomial()
                saw_factor = True
            else:
                break
            nk, nv, _ = self.peek()
            if nk == "op" and nv == "*":
                self.take()
                continue
            if nk == "symbol" and monomial is None:
                continue
            break
        if not saw_factor:
            kind, value, where = self.peek()
            raise ExpressionError("expected a term at %d" % where)
        if monomial is None:
            raise ExpressionError("term has no basis symbol")
        return monomial.scale(coeff)

    def parse_parenthesized(self) -> GaussianRational:
        # Scalar sub-expression: signed rational/imaginary parts only.
        total = GaussianRational(0)
        sign = ONE
        while True:
            kind, value, where = self.take()
            if kind == "op" and value == ")":
                return total
            if kind == "op" and value in "+-":
                sign = ONE if value == "+" else -ONE
                continue
            if kind == "number":
                part = GaussianRational(Fraction(value))
                nk, _, _ = self.peek()
                if nk == "i":
                    self.take()
                    part = part * I
                total = total + sign * part
                sign = ONE
                continue
            if kind == "i":
                total = total + sign * I
                sign = ONE
                continue
            raise ExpressionError("bad scalar expression at %d" % where)

    def parse_monomial(self) -> Exterior:
        kind, value, where = self.take()
        out = self.resolve(value)
        while True:
            nk, nv, _ = self.peek()
            if nk == "op" and nv == "^":
                self.take()
                kind, value, where = self.take()
                if kind != "symbol":
                    raise ExpressionError("expected a symbol after '^' at %d" % where)
                out = out.wedge(self.resolve(value))
            else:
                return out


def parse_expression(text: str, resolve: Callable[[str], Exterior]) -> Exterior:
    """Parse a formal sum of wedge monomials; symbols resolved by callback."""
    return _ExprParser(text, resolve).parse()


def double_symbols(n: int) -> Dict[str, int]:
    """Symbol table for g + g*: e<k> -> slot k-1, E<k> -> slot n+k-1."""
    table = {}
    for k in range(1, n + 1):
        table["e%d" % k] = k - 1
        table["E%d" % k] = n + k - 1
    return table


def parse_double_element(text: str, n: int) -> Exterior:
    table = double_symbols(n)

    def resolve(symbol: str) -> Exterior:
        if symbol not in table:
            raise ExpressionError("unknown symbol %r" % symbol)
        return Exterior.monomial(2 * n, (table[symbol],))

    return parse_expression(text, resolve)


def format_double_name(n: int, slot: int) -> str:
    return "e%d" % (slot + 1) if slot < n else "E%d" % (slot - n + 1)
