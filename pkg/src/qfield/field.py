"""
Quadratic Cyclotomic Fields.

Exact arithmetic in K = Q(i) (D = -1) and K = Q(sqrt(-3)) (D = -3). Elements
are a + b*s with rational a, b and s = sqrt(D); there is no floating point
anywhere in this package.
"""

import re
from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import List, Tuple, Union

from ..utils.errors import FieldParseError, InvalidInputError, ZeroDivisorError

Rational = Union[int, Fraction]


@dataclass(frozen=True)
class QField:
    """
    The field Q(sqrt(D)) for D in {-1, -3}.

    Attributes:
        D: The discriminant-like generator value, -1 or -3
        name: CLI name of the field ("gauss" or "eisenstein")
    """

    D: int
    name: str

    def __post_init__(self):
        if self.D not in (-1, -3):
            raise InvalidInputError(f"Unsupported field Q(sqrt({self.D})); D must be -1 or -3")

    def __call__(self, a: Rational = 0, b: Rational = 0) -> "FieldElem":
        return FieldElem(Fraction(a), Fraction(b), self)

    def __repr__(self) -> str:
        return "Q(i)" if self.D == -1 else "Q(sqrt(-3))"

    @property
    def zero(self) -> "FieldElem":
        return self(0)

    @property
    def one(self) -> "FieldElem":
        return self(1)

    @property
    def s(self) -> "FieldElem":
        """The generator sqrt(D)."""
        return self(0, 1)

    @property
    def unit_group(self) -> Tuple["FieldElem", ...]:
        """The roots of unity of O_K, in a fixed order."""
        if self.D == -1:
            return (self(1), self(0, 1), self(-1), self(0, -1))
        half = Fraction(1, 2)
        return (
            self(1), self(half, half), self(-half, half),
            self(-1), self(-half, -half), self(half, -half),
        )

    @property
    def unit_squares(self) -> Tuple["FieldElem", ...]:
        """Squares of units: {1, -1} for Q(i), {1, w, w^2} for Q(sqrt(-3))."""
        seen: List[FieldElem] = []
        for u in self.unit_group:
            sq = u * u
            if sq not in seen:
                seen.append(sq)
        return tuple(seen)

    def coerce(self, value) -> "FieldElem":
        """Turn an int, Fraction or FieldElem of this field into a FieldElem."""
        if isinstance(value, FieldElem):
            if value.field != self:
                raise InvalidInputError(f"Element {value} belongs to {value.field!r}, not {self!r}")
            return value
        if isinstance(value, (int, Fraction)):
            return self(value)
        raise InvalidInputError(f"Cannot coerce {value!r} into {self!r}")

    def parse(self, text: str) -> "FieldElem":
        """Parse field-element text; see parse_elem."""
        return parse_elem(text, self)

    def format(self, x: "FieldElem") -> str:
        """Canonical text for an element; parse(format(x)) == x."""
        return format_elem(self.coerce(x))


GAUSS = QField(-1, "gauss")
EISENSTEIN = QField(-3, "eisenstein")
FIELDS = {"gauss": GAUSS, "eisenstein": EISENSTEIN}


def field_by_name(name: str) -> QField:
    """
    Look up a field by its CLI name.

    Raises:
        InvalidInputError: If the name is unknown
    """
    try:
        return FIELDS[name.lower()]
    except KeyError:
        raise InvalidInputError(f"Unknown field {name!r}; expected one of {sorted(FIELDS)}") from None


@dataclass(frozen=True)
class FieldElem:
    """
    An exact element a + b*sqrt(D) of K.

    Fractions are kept in lowest terms by the Fraction type, so equal
    elements have equal fields and the dataclass equality is exact.
    """

    a: Fraction
    b: Fraction
    field: QField

    def __post_init__(self):
        if not isinstance(self.a, Fraction):
            object.__setattr__(self, "a", Fraction(self.a))
        if not isinstance(self.b, Fraction):
            object.__setattr__(self, "b", Fraction(self.b))

    def _other(self, other) -> "FieldElem":
        if isinstance(other, FieldElem):
            if other.field != self.field:
                raise InvalidInputError("Cannot combine elements of different fields")
            return other
        if isinstance(other, (int, Fraction)):
            return FieldElem(Fraction(other), Fraction(0), self.field)
        return NotImplemented

    def __add__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return NotImplemented
        return FieldElem(self.a + o.a, self.b + o.b, self.field)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return NotImplemented
        return FieldElem(self.a - o.a, self.b - o.b, self.field)

    def __rsub__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return NotImplemented
        return o - self

    def __neg__(self) -> "FieldElem":
        return FieldElem(-self.a, -self.b, self.field)

    def __mul__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return NotImplemented
        D = self.field.D
        return FieldElem(
            self.a * o.a + D * self.b * o.b,
            self.a * o.b + self.b * o.a,
            self.field,
        )

    __rmul__ = __mul__

    def inverse(self) -> "FieldElem":
        n = self.norm()
        if n == 0:
            raise ZeroDivisorError("Division by zero in K")
        return FieldElem(self.a / n, -self.b / n, self.field)

    def __truediv__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, n: int) -> "FieldElem":
        if n < 0:
            return self.inverse() ** (-n)
        result = self.field.one
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, FieldElem):
            return self.field == other.field and self.a == other.a and self.b == other.b
        if isinstance(other, (int, Fraction)):
            return self.b == 0 and self.a == other
        return NotImplemented

    def __hash__(self) -> int:
        if self.b == 0:
            return hash(self.a)
        return hash((self.a, self.b, self.field.D))

    def __bool__(self) -> bool:
        return bool(self.a) or bool(self.b)

    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0

    def is_rational(self) -> bool:
        return self.b == 0

    def conj(self) -> "FieldElem":
        return FieldElem(self.a, -self.b, self.field)

    def norm(self) -> Fraction:
        """N(x) = a^2 - D*b^2, nonnegative and zero only at 0."""
        return self.a * self.a - self.field.D * self.b * self.b

    def trace(self) -> Fraction:
        return 2 * self.a

    def denominator(self) -> int:
        """Least positive integer n with n*x in Z + Z*sqrt(D)."""
        return lcm(self.a.denominator, self.b.denominator)

    def key(self) -> Tuple[Fraction, Fraction]:
        """Sort key: standard coordinates (a, b)."""
        return (self.a, self.b)

    def __str__(self) -> str:
        return format_elem(self)

    def __repr__(self) -> str:
        return f"FieldElem({format_elem(self)} in {self.field!r})"


def _format_rational(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def format_elem(x: FieldElem) -> str:
    """
    Canonical text for a field element in the `R`, `R+R*s`, `R-R*s` grammar.

    Args:
        x: Element to format

    Returns:
        Text that parse_elem maps back to x
    """
    if x.b == 0:
        return _format_rational(x.a)
    b_text = f"{_format_rational(abs(x.b))}*s"
    if x.a == 0:
        return b_text if x.b > 0 else f"-{b_text}"
    sign = "+" if x.b > 0 else "-"
    return f"{_format_rational(x.a)}{sign}{b_text}"


_TOKEN_RE = re.compile(r"(\d+)|(\S)")


def _tokenize(text: str) -> List[Tuple[str, str, int]]:
    tokens = []
    for match in _TOKEN_RE.finditer(text):
        if match.group(1) is not None:
            tokens.append(("int", match.group(1), match.start(1)))
        elif match.group(2) is not None:
            ch = match.group(2)
            kind = ch if ch in "+-*/s" else "bad"
            tokens.append((kind, ch, match.start(2)))
    tokens.append(("end", "", len(text)))
    return tokens


def parse_elem(text: str, field: QField) -> FieldElem:
    """
    Parse an exact field element.

    The accepted grammar is a signed sum of terms, each term a rational R
    (`int` or `int/int`), `R*s`, or `s`, where s is sqrt(D) of the active
    field. This covers `1/2+3*s`, `-7` and `s`.

    Args:
        text: Element text
        field: Active field

    Returns:
        The parsed element

    Raises:
        FieldParseError: On any malformed input, naming the token and position
    """
    tokens = _tokenize(text)
    pos = 0

    def peek():
        return tokens[pos]

    def expect(kind: str, what: str):
        nonlocal pos
        tok = tokens[pos]
        if tok[0] != kind:
            raise FieldParseError(f"Expected {what}", tok[1], tok[2])
        pos += 1
        return tok

    def rational() -> Fraction:
        nonlocal pos
        num = int(expect("int", "an integer")[1])
        if peek()[0] == "/":
            pos += 1
            den_tok = expect("int", "a denominator")
            den = int(den_tok[1])
            if den == 0:
                raise FieldParseError("Zero denominator", den_tok[1], den_tok[2])
            return Fraction(num, den)
        return Fraction(num)

    if peek()[0] == "end":
        raise FieldParseError("Empty field element", "", 0)

    a = Fraction(0)
    b = Fraction(0)
    first = True
    while peek()[0] != "end":
        sign = 1
        tok = peek()
        if tok[0] in "+-":
            sign = -1 if tok[0] == "-" else 1
            pos += 1
        elif not first:
            raise FieldParseError("Expected '+' or '-'", tok[1], tok[2])
        first = False

        tok = peek()
        if tok[0] == "s":
            pos += 1
            b += sign
            continue
        value = rational()
        if peek()[0] == "*":
            pos += 1
            expect("s", "'s'")
            b += sign * value
        else:
            a += sign * value

    return FieldElem(a, b, field)


def parse_elem_list(text: str, field: QField) -> List[FieldElem]:
    """
    Parse a bracketed, comma-separated list such as `[0,0,0,4,0]`.

    Positions in raised errors refer to the full text.
    """
    stripped = text.strip()
    offset = len(text) - len(text.lstrip())
    if not stripped.startswith("["):
        raise FieldParseError("Expected '['", stripped[:1], offset)
    if not stripped.endswith("]"):
        raise FieldParseError("Expected ']'", stripped[-1:], offset + len(stripped) - 1)

    inner = stripped[1:-1]
    elems = []
    start = 0
    for piece in inner.split(","):
        try:
            elems.append(parse_elem(piece, field))
        except FieldParseError as exc:
            raise FieldParseError("Malformed coefficient", exc.token, offset + 1 + start + exc.position) from None
        start += len(piece) + 1
    return elems
