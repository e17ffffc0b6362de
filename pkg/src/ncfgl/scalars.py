"""Exact coefficient arithmetic over Z, Q, or a prime field F_p.

Element values are plain ``int`` (integer mode and prime-field residues in
``[0, p)``) or ``fractions.Fraction`` (rational mode, always in lowest terms
with positive denominator).  A :class:`ScalarRing` carries the arithmetic so
that the sparse containers built on top stay lightweight and hashable.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import ModeMismatchError, ParameterError

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin; exact for every modulus below 3.3e24."""
    if n < 2:
        return False
    for q in _MR_BASES:
        if n % q == 0:
            return n == q
    d, r = n - 1, 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


class ScalarRing:
    """One global coefficient ring per computation: Z, Q, or F_p."""

    __slots__ = ("mode", "prime")

    def __init__(self, mode: str, prime: int | None = None):
        if mode not in ("integer", "rational", "fp"):
            raise ParameterError(f"unknown scalar mode {mode!r}")
        if mode == "fp":
            if prime is None or not is_prime(prime):
                raise ParameterError(f"prime-field modulus must be prime, got {prime!r}")
        elif prime is not None:
            raise ParameterError(f"scalar mode {mode!r} takes no modulus")
        self.mode = mode
        self.prime = prime

    # -- value construction -------------------------------------------------

    def of_int(self, n: int):
        if self.mode == "integer":
            return n
        if self.mode == "rational":
            return Fraction(n)
        return n % self.prime

    def coerce(self, value):
        """Accept an int in every mode, a Fraction in rational mode."""
        if isinstance(value, bool):
            raise ParameterError("bool is not a scalar")
        if isinstance(value, int):
            return self.of_int(value)
        if isinstance(value, Fraction) and self.mode == "rational":
            return value
        raise ModeMismatchError(f"cannot coerce {value!r} into {self!r}")

    def parse(self, text: str):
        """Inverse of :meth:`render`, for deserialization."""
        if self.mode == "rational":
            return Fraction(text)
        return self.of_int(int(text))

    # -- arithmetic ----------------------------------------------------------

    @property
    def zero(self):
        return self.of_int(0)

    @property
    def one(self):
        return self.of_int(1)

    def add(self, a, b):
        return (a + b) % self.prime if self.mode == "fp" else a + b

    def sub(self, a, b):
        return (a - b) % self.prime if self.mode == "fp" else a - b

    def neg(self, a):
        return (-a) % self.prime if self.mode == "fp" else -a

    def mul(self, a, b):
        return (a * b) % self.prime if self.mode == "fp" else a * b

    def inv(self, a):
        if self.is_zero(a):
            raise ZeroDivisionError("scalar 0 is not invertible")
        if self.mode == "fp":
            return pow(a, self.prime - 2, self.prime)
        if self.mode == "rational":
            return 1 / Fraction(a)
        if a in (1, -1):
            return a
        raise ParameterError(f"{a} is not invertible over the integers")

    def is_zero(self, a) -> bool:
        return a == 0

    def is_one(self, a) -> bool:
        return a == self.one

    @property
    def is_field(self) -> bool:
        return self.mode != "integer"

    # -- misc ----------------------------------------------------------------

    def random_value(self, rng, nonzero: bool = False):
        """Small random scalar, for seeded property runs."""
        if self.mode == "fp":
            lo = 1 if nonzero else 0
            return rng.randint(lo, self.prime - 1)
        num = rng.randint(-4, 4)
        while nonzero and num == 0:
            num = rng.randint(-4, 4)
        if self.mode == "rational":
            return Fraction(num, rng.randint(1, 4))
        return num

    def render(self, a) -> str:
        return str(a)

    def __eq__(self, other):
        return (
            isinstance(other, ScalarRing)
            and self.mode == other.mode
            and self.prime == other.prime
        )

    def __hash__(self):
        return hash((self.mode, self.prime))

    def __repr__(self):
        if self.mode == "fp":
            return f"GF({self.prime})"
        return "ZZ" if self.mode == "integer" else "QQ"


ZZ = ScalarRing("integer")
QQ = ScalarRing("rational")


def GF(p: int) -> ScalarRing:
    """The prime field F_p (p is checked for primality)."""
    return ScalarRing("fp", p)
