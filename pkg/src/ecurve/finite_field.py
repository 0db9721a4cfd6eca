"""
Finite Fields and Curves over Them.

F_q for odd q = p^k (k <= 4, q <= 10^6) built from a fixed Conway-polynomial
table so that element encodings and counts are reproducible. Elements are
encoded as integers 0..q-1 whose base-p digits are the coefficients in the
power basis; numpy log/exp tables make vectorized arithmetic over the whole
field cheap.
"""

import json
from functools import lru_cache
from itertools import product
from typing import List, Optional, Sequence, Union

import numpy as np
from sympy import GF, Poly, Symbol, isprime, primitive_root

from ..utils.config import get_settings
from ..utils.errors import FieldSizeError, InvalidInputError, ReductionError, SingularCurveError
from ..utils.logger import get_logger
from .curve import INFINITY, GroupLawMixin, Point

logger = get_logger(__name__)

MAX_FIELD_SIZE = 10**6
MAX_DEGREE = 4

_T = Symbol("t")


def _is_irreducible(p: int, coeffs: Sequence[int]) -> bool:
    return Poly(list(reversed(list(coeffs))), _T, domain=GF(p)).is_irreducible


class FiniteField:
    """
    The field F_{p^k} = F_p[t]/(m(t)) with m a primitive polynomial.

    Args:
        p: Odd prime
        k: Degree, 1 <= k <= 4
        modulus: Monic modulus coefficients from the constant term upwards

    Raises:
        ReductionError: For characteristic 2
        FieldSizeError: If q exceeds 10^6
        InvalidInputError: If the modulus is not irreducible or not primitive
    """

    def __init__(self, p: int, k: int, modulus: Sequence[int]):
        if p == 2:
            raise ReductionError("Characteristic 2 is not supported")
        if not isprime(p) or not 1 <= k <= MAX_DEGREE:
            raise InvalidInputError(f"Invalid field parameters p={p}, k={k}")
        q = p ** k
        if q > MAX_FIELD_SIZE:
            raise FieldSizeError(f"F_{q} exceeds the supported size {MAX_FIELD_SIZE}")
        modulus = [int(c) % p for c in modulus]
        if len(modulus) != k + 1 or modulus[-1] != 1:
            raise InvalidInputError(f"Modulus {modulus} is not monic of degree {k}")
        if not _is_irreducible(p, modulus):
            raise InvalidInputError(f"Modulus {modulus} is reducible over F_{p}")

        self.p = p
        self.k = k
        self.q = q
        self.modulus = tuple(modulus)
        self._powers = np.array([p ** j for j in range(k)], dtype=np.int64)
        self._build_tables()

    def _build_tables(self):
        p, k, q = self.p, self.k, self.q
        exp = np.zeros(q - 1, dtype=np.int64)
        cur = [1] + [0] * (k - 1)
        for e in range(q - 1):
            exp[e] = sum(c * p ** j for j, c in enumerate(cur))
            top = cur[-1]
            nxt = [0] + cur[:-1]
            for j in range(k):
                nxt[j] = (nxt[j] - top * self.modulus[j]) % p
            cur = nxt
        if len(np.unique(exp)) != q - 1:
            raise InvalidInputError(f"Modulus {list(self.modulus)} is not primitive over F_{p}")
        log = np.full(q, -1, dtype=np.int64)
        log[exp] = np.arange(q - 1, dtype=np.int64)
        self._exp = exp
        self._log = log
        idx = np.arange(q, dtype=np.int64)
        self._digits = (idx[:, None] // self._powers[None, :]) % p

    # ---- vectorized arithmetic on encodings ----

    def add_idx(self, a, b) -> np.ndarray:
        a, b = np.broadcast_arrays(np.asarray(a, dtype=np.int64), np.asarray(b, dtype=np.int64))
        return ((self._digits[a] + self._digits[b]) % self.p) @ self._powers

    def neg_idx(self, a) -> np.ndarray:
        a = np.asarray(a, dtype=np.int64)
        return ((-self._digits[a]) % self.p) @ self._powers

    def sub_idx(self, a, b) -> np.ndarray:
        return self.add_idx(a, self.neg_idx(b))

    def mul_idx(self, a, b) -> np.ndarray:
        a, b = np.broadcast_arrays(np.asarray(a, dtype=np.int64), np.asarray(b, dtype=np.int64))
        out = self._exp[(self._log[a] + self._log[b]) % (self.q - 1)]
        return np.where((a == 0) | (b == 0), 0, out)

    def inv_idx(self, a) -> np.ndarray:
        a = np.asarray(a, dtype=np.int64)
        if np.any(a == 0):
            raise ZeroDivisionError("Inverse of zero in a finite field")
        return self._exp[(-self._log[a]) % (self.q - 1)]

    def chi_idx(self, a) -> np.ndarray:
        """Quadratic character: 0 at 0, 1 on nonzero squares, -1 otherwise."""
        a = np.asarray(a, dtype=np.int64)
        return np.where(a == 0, 0, np.where(self._log[a] % 2 == 0, 1, -1))

    def sqrt_idx(self, a: int) -> Optional[int]:
        if a == 0:
            return 0
        e = int(self._log[a])
        if e % 2:
            return None
        return int(self._exp[e // 2])

    # ---- scalar element construction ----

    def __call__(self, value: Union[int, Sequence[int], "FFElem"]) -> "FFElem":
        if isinstance(value, FFElem):
            return value
        if isinstance(value, (int, np.integer)):
            return FFElem(self, int(value) % self.p)
        coeffs = list(value)
        if len(coeffs) > self.k:
            raise InvalidInputError(f"Too many coefficients for F_{self.q}")
        return FFElem(self, sum((int(c) % self.p) * self.p ** j for j, c in enumerate(coeffs)))

    def elements(self) -> List["FFElem"]:
        return [FFElem(self, i) for i in range(self.q)]

    @property
    def zero(self) -> "FFElem":
        return FFElem(self, 0)

    @property
    def one(self) -> "FFElem":
        return FFElem(self, 1)

    @property
    def generator(self) -> "FFElem":
        return FFElem(self, int(self._exp[1]))

    def __eq__(self, other) -> bool:
        return isinstance(other, FiniteField) and (self.p, self.k, self.modulus) == (other.p, other.k, other.modulus)

    def __hash__(self) -> int:
        return hash((self.p, self.k, self.modulus))

    def __repr__(self) -> str:
        return f"F_{self.q}"


class FFElem:
    """An element of a FiniteField, stored as its integer encoding."""

    __slots__ = ("field", "idx")

    def __init__(self, field: FiniteField, idx: int):
        self.field = field
        self.idx = int(idx)

    def _other(self, other) -> Optional["FFElem"]:
        if isinstance(other, FFElem):
            return other
        if isinstance(other, (int, np.integer)):
            return self.field(int(other))
        return None

    def __add__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return FFElem(self.field, int(self.field.add_idx(self.idx, o.idx)))

    __radd__ = __add__

    def __neg__(self):
        return FFElem(self.field, int(self.field.neg_idx(self.idx)))

    def __sub__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return FFElem(self.field, int(self.field.sub_idx(self.idx, o.idx)))

    def __rsub__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return FFElem(self.field, int(self.field.mul_idx(self.idx, o.idx)))

    __rmul__ = __mul__

    def inverse(self) -> "FFElem":
        return FFElem(self.field, int(self.field.inv_idx(self.idx)))

    def __truediv__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, n: int) -> "FFElem":
        if self.idx == 0:
            return FFElem(self.field, 0 if n > 0 else 1) if n >= 0 else self.inverse()
        e = (int(self.field._log[self.idx]) * n) % (self.field.q - 1)
        return FFElem(self.field, int(self.field._exp[e]))

    def is_square(self) -> bool:
        return int(self.field.chi_idx(self.idx)) >= 0

    def sqrt(self) -> Optional["FFElem"]:
        r = self.field.sqrt_idx(self.idx)
        return None if r is None else FFElem(self.field, r)

    def is_zero(self) -> bool:
        return self.idx == 0

    def __eq__(self, other) -> bool:
        o = self._other(other)
        if o is None:
            return NotImplemented
        return self.field == o.field and self.idx == o.idx

    def __hash__(self) -> int:
        return hash((self.field.q, self.idx))

    def __repr__(self) -> str:
        digits = [int(d) for d in self.field._digits[self.idx]]
        if self.field.k == 1:
            return str(digits[0])
        return "(" + ",".join(str(d) for d in digits) + ")"


def _load_table() -> dict:
    path = get_settings().conway_table
    with open(path, encoding="utf-8") as f:
        data = json.load(f)
    return {(entry["p"], entry["k"]): entry["coeffs"] for entry in data["polynomials"]}


def _search_primitive(p: int, k: int) -> List[int]:
    """First primitive monic polynomial of degree k in lexicographic coefficient order."""
    for tail in product(range(p), repeat=k):
        coeffs = list(tail) + [1]
        if coeffs[0] == 0 or not _is_irreducible(p, coeffs):
            continue
        try:
            FiniteField(p, k, coeffs)
        except InvalidInputError:
            continue
        return coeffs
    raise InvalidInputError(f"No primitive polynomial of degree {k} over F_{p}")


@lru_cache(maxsize=64)
def get_field(p: int, k: int = 1) -> FiniteField:
    """
    The field F_{p^k} with the fixed table modulus.

    For k = 1 the modulus is t - g with g the least primitive root, so t
    itself generates the multiplicative group. Pairs missing from the table
    fall back to the first primitive polynomial in lexicographic order.
    """
    if p == 2:
        raise ReductionError("Characteristic 2 is not supported")
    if p ** k > MAX_FIELD_SIZE:
        raise FieldSizeError(f"F_{p}^{k} exceeds the supported size {MAX_FIELD_SIZE}")
    if k == 1:
        return FiniteField(p, 1, [(-primitive_root(p)) % p, 1])
    table = _load_table()
    coeffs = table.get((p, k))
    if coeffs is not None:
        try:
            return FiniteField(p, k, coeffs)
        except InvalidInputError as exc:
            logger.warning(f"Table modulus for F_{p}^{k} rejected ({exc}); searching instead")
    else:
        logger.warning(f"No table modulus for F_{p}^{k}; searching for a primitive polynomial")
    return FiniteField(p, k, _search_primitive(p, k))


class FFCurve(GroupLawMixin):
    """
    A long Weierstrass model over a finite field of odd characteristic.

    Raises:
        SingularCurveError: If the model is singular
    """

    def __init__(self, field: FiniteField, coeffs: Sequence):
        if len(coeffs) != 5:
            raise InvalidInputError(f"Expected 5 coefficients, got {len(coeffs)}")
        self.field = field
        self.a1, self.a2, self.a3, self.a4, self.a6 = (field(c) for c in coeffs)
        if self.discriminant().is_zero():
            raise SingularCurveError(f"Singular model {self}")

    @property
    def coeffs(self) -> List[FFElem]:
        return [self.a1, self.a2, self.a3, self.a4, self.a6]

    def discriminant(self) -> FFElem:
        a1, a2, a3, a4, a6 = self.coeffs
        b2 = a1 * a1 + 4 * a2
        b4 = 2 * a4 + a1 * a3
        b6 = a3 * a3 + 4 * a6
        b8 = a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4
        return -b2 * b2 * b8 - 8 * b4 * b4 * b4 - 27 * b6 * b6 + 9 * b2 * b4 * b6

    def _rhs_idx(self) -> np.ndarray:
        """(y + (a1 x + a3)/2)^2 = rhs(x) evaluated at every x, as encodings."""
        F = self.field
        xs = np.arange(F.q, dtype=np.int64)
        x2 = F.mul_idx(xs, xs)
        x3 = F.mul_idx(x2, xs)
        half = F(2).inverse().idx
        shift = F.mul_idx(F.add_idx(F.mul_idx(xs, self.a1.idx), self.a3.idx), half)
        rhs = F.add_idx(x3, F.mul_idx(x2, self.a2.idx))
        rhs = F.add_idx(rhs, F.mul_idx(xs, self.a4.idx))
        rhs = F.add_idx(rhs, self.a6.idx)
        return F.add_idx(rhs, F.mul_idx(shift, shift))

    def count_points(self) -> int:
        """
        |E(F_q)| including the point at infinity.

        Every x contributes 1 + chi(rhs(x)) points.
        """
        chi = self.field.chi_idx(self._rhs_idx())
        return 1 + self.field.q + int(chi.sum())

    def points(self) -> List[Point]:
        """All points (intended for small fields), infinity first."""
        F = self.field
        pts = [INFINITY]
        rhs = self._rhs_idx()
        for xi in range(F.q):
            r = F.sqrt_idx(int(rhs[xi]))
            if r is None:
                continue
            x = FFElem(F, xi)
            shift = (self.a1 * x + self.a3) / 2
            root = FFElem(F, r)
            pts.append(Point(x, root - shift))
            if r != 0:
                pts.append(Point(x, -root - shift))
        return pts

    def quadratic_twist(self, d: FFElem) -> "FFCurve":
        """The twist by d of the isomorphic model y^2 = x^3 + (b2/4)x^2 + (b4/2)x + b6/4."""
        a1, a2, a3, a4, a6 = self.coeffs
        b2 = a1 * a1 + 4 * a2
        b4 = 2 * a4 + a1 * a3
        b6 = a3 * a3 + 4 * a6
        d = self.field(d)
        return FFCurve(self.field, [0, d * b2 / 4, 0, d * d * b4 / 2, d * d * d * b6 / 4])

    def __str__(self) -> str:
        return "[" + ",".join(repr(c) for c in self.coeffs) + f"] over {self.field!r}"


def count_points(C: FFCurve) -> int:
    """
    |C(F_q)| by an exhaustive x-loop with a quadratic-character test.

    Raises:
        FieldSizeError: If q exceeds 10^6
    """
    if C.field.q > MAX_FIELD_SIZE:
        raise FieldSizeError(f"Refusing to count over F_{C.field.q}")
    return C.count_points()


def count_points_extension(C: FFCurve, r: int) -> int:
    """
    |C(F_{q^r})| from |C(F_q)| through the Frobenius trace recurrence.

    With a = q + 1 - N_1, s_0 = 2, s_1 = a and s_n = a*s_{n-1} - q*s_{n-2},
    the count over F_{q^r} is q^r + 1 - s_r.
    """
    if r < 1:
        raise InvalidInputError("Extension degree must be positive")
    q = C.field.q
    a = q + 1 - count_points(C)
    s_prev, s_cur = 2, a
    for _ in range(r - 1):
        s_prev, s_cur = s_cur, a * s_cur - q * s_prev
    return q ** r + 1 - s_cur


def base_change(C: FFCurve, k: int) -> FFCurve:
    """
    C over F_{p^k} for a curve whose coefficients lie in the prime field.

    Raises:
        InvalidInputError: If a coefficient is outside F_p
    """
    F = C.field
    ints = []
    for c in C.coeffs:
        if c.idx >= F.p:
            raise InvalidInputError("Base change needs prime-field coefficients")
        ints.append(c.idx)
    return FFCurve(get_field(F.p, k), ints)


def twist_over_ff(C: FFCurve, d) -> FFCurve:
    """
    The quadratic twist of C by d over F_q.

    For a non-square d, |C(F_q)| + |C^(d)(F_q)| = 2(q + 1).
    """
    d = C.field(d)
    if d.is_zero():
        raise InvalidInputError("Cannot twist by 0")
    return C.quadratic_twist(d)
