"""Exact arithmetic in Z[phi], phi = (1 + sqrt 5) / 2."""
from __future__ import annotations


class Golden:
    """``a + b*phi`` with integer a, b; phi**2 = phi + 1."""

    __slots__ = ("a", "b")

    def __init__(self, a: int = 0, b: int = 0):
        self.a = a
        self.b = b

    @staticmethod
    def coerce(x) -> Golden:
        if isinstance(x, Golden):
            return x
        if isinstance(x, int):
            return Golden(x, 0)
        raise TypeError(f"cannot use {type(x).__name__} in Z[phi]")

    def __add__(self, other):
        o = Golden.coerce(other)
        return Golden(self.a + o.a, self.b + o.b)

    __radd__ = __add__

    def __neg__(self):
        return Golden(-self.a, -self.b)

    def __sub__(self, other):
        return self + (-Golden.coerce(other))

    def __rsub__(self, other):
        return Golden.coerce(other) - self

    def __mul__(self, other):
        o = Golden.coerce(other)
        # (a + b phi)(c + d phi) = ac + bd + (ad + bc + bd) phi
        return Golden(self.a * o.a + self.b * o.b, self.a * o.b + self.b * o.a + self.b * o.b)

    __rmul__ = __mul__

    def conjugate(self) -> Golden:
        # phi -> 1 - phi
        return Golden(self.a + self.b, -self.b)

    def sign(self) -> int:
        # 2(a + b phi) = x + y sqrt5 with x = 2a + b, y = b
        x, y = 2 * self.a + self.b, self.b
        if x >= 0 and y >= 0:
            return 0 if x == 0 and y == 0 else 1
        if x <= 0 and y <= 0:
            return -1
        # opposite signs: compare x^2 with 5 y^2
        if x * x > 5 * y * y:
            return 1 if x > 0 else -1
        return 1 if y > 0 else -1

    def __eq__(self, other):
        if isinstance(other, int):
            other = Golden(other)
        if not isinstance(other, Golden):
            return NotImplemented
        return self.a == other.a and self.b == other.b

    def __hash__(self):
        return hash((self.a, self.b)) if self.b else hash(self.a)

    def __lt__(self, other):
        return (self - other).sign() < 0

    def __le__(self, other):
        return (self - other).sign() <= 0

    def __gt__(self, other):
        return (self - other).sign() > 0

    def __ge__(self, other):
        return (self - other).sign() >= 0

    def __float__(self):
        return self.a + self.b * (1 + 5 ** 0.5) / 2

    def __repr__(self):
        return f"Golden({self.a}, {self.b})"

    def __str__(self):
        if not self.b:
            return str(self.a)
        return f"{self.a}{self.b:+}φ"


PHI = Golden(0, 1)
