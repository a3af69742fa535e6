"""Exact arithmetic in Z[ω, 1/√2] with ω = exp(iπ/4).

A value is (a + bω + cω² + dω³) / √2^k with integer coefficients, under the
sign-wrap convention ω⁴ = −1. Every instance is kept in reduced form: either
k = 0, or the numerator is not divisible by √2 (equivalently a ≢ c or
b ≢ d mod 2), and zero is always (0, 0, 0, 0, k=0). Reduced forms are unique,
so field-wise equality decides numeric equality.
"""

from __future__ import annotations

import cmath

from .encoding import check_coeff, pack_entry, unpack_entry

_OMEGA_COMPLEX = cmath.exp(1j * cmath.pi / 4)
_SQRT2 = 2.0**0.5


def _reduce(a: int, b: int, c: int, d: int, k: int) -> tuple[int, int, int, int, int]:
    if a == 0 and b == 0 and c == 0 and d == 0:
        return 0, 0, 0, 0, 0
    # √2 divides the numerator iff a ≡ c and b ≡ d (mod 2); the quotient is
    # the inverse of the push-down map (a,b,c,d) -> (b−d, a+c, b+d, c−a).
    while k > 0 and (a ^ c) & 1 == 0 and (b ^ d) & 1 == 0:
        a, b, c, d = (b - d) // 2, (a + c) // 2, (b + d) // 2, (c - a) // 2
        k -= 1
    return a, b, c, d, k


class CycloNum:
    __slots__ = ("_a", "_b", "_c", "_d", "_k")

    def __init__(self, a: int, b: int = 0, c: int = 0, d: int = 0, k: int = 0) -> None:
        if k < 0:
            raise AssertionError(f"negative denominator exponent {k}")
        a, b, c, d, k = _reduce(a, b, c, d, k)
        self._a = check_coeff(a)
        self._b = check_coeff(b)
        self._c = check_coeff(c)
        self._d = check_coeff(d)
        self._k = k

    @property
    def a(self) -> int:
        return self._a

    @property
    def b(self) -> int:
        return self._b

    @property
    def c(self) -> int:
        return self._c

    @property
    def d(self) -> int:
        return self._d

    @property
    def k(self) -> int:
        return self._k

    def coeffs(self) -> tuple[int, int, int, int, int]:
        return self._a, self._b, self._c, self._d, self._k

    def __repr__(self) -> str:
        return f"CycloNum({self._a}, {self._b}, {self._c}, {self._d}, k={self._k})"

    def __str__(self) -> str:
        return f"{self._a},{self._b},{self._c},{self._d}/{self._k}"

    @classmethod
    def parse(cls, text: str) -> CycloNum:
        """Parse the textual entry form "a,b,c,d/k"."""
        from .encoding import COEF_LIMIT, K_LIMIT

        body, _, exp = text.partition("/")
        parts = body.split(",")
        if not exp or len(parts) != 4:
            raise ValueError(f"malformed ring entry {text!r}")
        try:
            a, b, c, d = (int(p) for p in parts)
            k = int(exp)
        except ValueError:
            raise ValueError(f"malformed ring entry {text!r}") from None
        if k < 0 or k > K_LIMIT:
            raise ValueError(f"denominator exponent out of range in {text!r}")
        if max(abs(a), abs(b), abs(c), abs(d)) >= COEF_LIMIT:
            raise ValueError(f"coefficient out of range in {text!r}")
        return cls(a, b, c, d, k)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CycloNum):
            return NotImplemented
        return self.coeffs() == other.coeffs()

    def __hash__(self) -> int:
        return hash(self.coeffs())

    def __bool__(self) -> bool:
        return self._a != 0 or self._b != 0 or self._c != 0 or self._d != 0

    def __neg__(self) -> CycloNum:
        return CycloNum(-self._a, -self._b, -self._c, -self._d, self._k)

    def __add__(self, other: CycloNum) -> CycloNum:
        if not isinstance(other, CycloNum):
            return NotImplemented
        a1, b1, c1, d1, k1 = self.coeffs()
        a2, b2, c2, d2, k2 = other.coeffs()
        # Rescale the smaller-k numerator with the push-down map, √2 = ω − ω³.
        while k1 < k2:
            a1, b1, c1, d1 = b1 - d1, a1 + c1, b1 + d1, c1 - a1
            k1 += 1
        while k2 < k1:
            a2, b2, c2, d2 = b2 - d2, a2 + c2, b2 + d2, c2 - a2
            k2 += 1
        return CycloNum(a1 + a2, b1 + b2, c1 + c2, d1 + d2, k1)

    def __sub__(self, other: CycloNum) -> CycloNum:
        if not isinstance(other, CycloNum):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other: CycloNum) -> CycloNum:
        if not isinstance(other, CycloNum):
            return NotImplemented
        a1, b1, c1, d1, k1 = self.coeffs()
        a2, b2, c2, d2, k2 = other.coeffs()
        # ω-power convolution with the wrap ω⁴ = −1.
        return CycloNum(
            a1 * a2 - b1 * d2 - c1 * c2 - d1 * b2,
            a1 * b2 + b1 * a2 - c1 * d2 - d1 * c2,
            a1 * c2 + b1 * b2 + c1 * a2 - d1 * d2,
            a1 * d2 + b1 * c2 + c1 * b2 + d1 * a2,
            k1 + k2,
        )

    def __pow__(self, n: int) -> CycloNum:
        if n < 0:
            raise ValueError("negative powers are not defined in this ring")
        out = ONE
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def conjugate(self) -> CycloNum:
        return CycloNum(self._a, -self._d, -self._c, -self._b, self._k)

    def to_complex(self) -> complex:
        num = (
            self._a
            + self._b * _OMEGA_COMPLEX
            + self._c * 1j
            + self._d * _OMEGA_COMPLEX**3
        )
        return num / _SQRT2**self._k

    __complex__ = to_complex

    def pack(self) -> bytes:
        return pack_entry(self._a, self._b, self._c, self._d, self._k)

    @classmethod
    def unpack(cls, data: bytes) -> CycloNum:
        return cls(*unpack_entry(data))


ZERO = CycloNum(0)
ONE = CycloNum(1)
MINUS_ONE = CycloNum(-1)
OMEGA = CycloNum(0, 1, 0, 0)
IMAG_UNIT = CycloNum(0, 0, 1, 0)
SQRT2 = CycloNum(0, 1, 0, -1)
INV_SQRT2 = CycloNum(1, 0, 0, 0, 1)
