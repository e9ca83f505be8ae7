"""Finite fields: prime fields and their extensions, with exact arithmetic.

An extension F_{p^d} is always represented over its prime field as
F_p[x]/(m) for a monic irreducible m, so every element is a coefficient
vector of d residues with the constant term first.  Fields are immutable
and safely shareable across threads; structurally equal fields built by
separate calls are still distinct owners, told apart by an identity
token, and their elements do not mix.
"""

from __future__ import annotations

import threading
from typing import Iterator, Sequence, Union

from .errors import DivisionByZero, FieldMismatch, NotPrime, Overflow

# Orders beyond this bound are rejected at construction, never truncated.
MAX_ORDER = 2**31

_token_lock = threading.Lock()
_token_next = 0


def _new_token() -> int:
    global _token_next
    with _token_lock:
        _token_next += 1
        return _token_next


def is_prime(n: int) -> bool:
    """Trial-division primality check, adequate for the supported range."""
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


class Field:
    """A finite field F_{p^d}.

    ``modulus`` is the defining polynomial as a tuple of prime-field
    residues, constant term first, monic; it is None for prime fields.
    """

    __slots__ = ("p", "degree", "order", "modulus", "token", "zero", "one", "_mtail")

    def __init__(self, p: int, degree: int, modulus):
        # Internal constructor: use make_prime_field / make_extension.
        self.p = p
        self.degree = degree
        self.order = p**degree
        self.modulus = modulus
        self._mtail = modulus[:-1] if modulus is not None else None
        self.token = _new_token()
        self.zero = Elem(self, (0,) * degree)
        self.one = Elem(self, (1,) + (0,) * (degree - 1))

    # -- construction of elements -------------------------------------

    def elem(self, value: Union["Elem", int, Sequence[int]]) -> "Elem":
        """Coerce an int (reduced mod p) or a coefficient sequence."""
        if isinstance(value, Elem):
            if value.field is not self:
                raise FieldMismatch(f"element of {value.field} used in {self}")
            return value
        if isinstance(value, int):
            return Elem(self, (value % self.p,) + (0,) * (self.degree - 1))
        coeffs = tuple(int(c) % self.p for c in value)
        if len(coeffs) > self.degree:
            raise ValueError(
                f"coefficient vector of length {len(coeffs)} in {self}"
            )
        coeffs += (0,) * (self.degree - len(coeffs))
        return Elem(self, coeffs)

    def gen(self) -> "Elem":
        """The residue class of x in an extension; 1 in a prime field."""
        if self.degree == 1:
            return self.one
        return Elem(self, (0, 1) + (0,) * (self.degree - 2))

    def elements(self) -> Iterator["Elem"]:
        """All field elements in lexicographic coefficient order."""
        from itertools import product

        for coeffs in product(range(self.p), repeat=self.degree):
            yield Elem(self, coeffs)

    def random_elem(self, rng) -> "Elem":
        return Elem(self, tuple(rng.randrange(self.p) for _ in range(self.degree)))

    # -- raw coefficient arithmetic ------------------------------------

    def _mul_raw(self, a, b):
        p = self.p
        d = self.degree
        # constant operands avoid the convolution entirely
        if not any(a[1:]):
            c = a[0]
            if c == 0:
                return (0,) * d
            if c == 1:
                return b
            return tuple(c * y % p for y in b)
        if not any(b[1:]):
            c = b[0]
            if c == 0:
                return (0,) * d
            if c == 1:
                return a
            return tuple(c * x % p for x in a)
        res = [0] * (2 * d - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        res[i + j] += x * y
        mt = self._mtail
        for k in range(2 * d - 2, d - 1, -1):
            c = res[k] % p
            if c:
                base = k - d
                for i in range(d):
                    res[base + i] -= c * mt[i]
        return tuple(res[i] % p for i in range(d))

    def _inv_raw(self, a):
        p = self.p
        if self.degree == 1:
            if a[0] == 0:
                raise DivisionByZero(f"inverse of zero in {self}")
            return (pow(a[0], -1, p),)
        if not any(a):
            raise DivisionByZero(f"inverse of zero in {self}")
        # extended Euclid against the modulus, on trimmed int lists
        r0 = list(self.modulus)
        r1 = [c for c in a]
        while r1 and r1[-1] == 0:
            r1.pop()
        t0, t1 = [], [1]
        while len(r1) > 1:
            q, r = _plist_divmod(r0, r1, p)
            r0, r1 = r1, r
            t0, t1 = t1, _plist_sub(t0, _plist_mul(q, t1, p), p)
        c_inv = pow(r1[0], -1, p)
        out = [x * c_inv % p for x in t1]
        out += [0] * (self.degree - len(out))
        return tuple(out[: self.degree])

    def __repr__(self):
        if self.degree == 1:
            return f"GF({self.p})"
        return f"GF({self.p}^{self.degree})"

    def describe(self) -> str:
        if self.degree == 1:
            return f"GF({self.p})"
        terms = []
        for i in range(self.degree, -1, -1):
            c = self.modulus[i]
            if not c:
                continue
            if i == 0:
                terms.append(str(c))
            else:
                x = "x" if i == 1 else f"x^{i}"
                terms.append(x if c == 1 else f"{c}*{x}")
        return f"GF({self.p}^{self.degree}) = GF({self.p})[x]/({' + '.join(terms)})"


def _plist_trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _plist_sub(a, b, p):
    n = max(len(a), len(b))
    out = [0] * n
    for i in range(n):
        x = a[i] if i < len(a) else 0
        y = b[i] if i < len(b) else 0
        out[i] = (x - y) % p
    return _plist_trim(out)


def _plist_mul(a, b, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _plist_trim([c % p for c in out])


def _plist_divmod(a, b, p):
    a = list(a)
    _plist_trim(a)
    db = len(b) - 1
    inv = pow(b[-1], -1, p)
    q = [0] * max(len(a) - db, 0)
    while len(a) - 1 >= db and a:
        c = a[-1] * inv % p
        k = len(a) - 1 - db
        q[k] = c
        for i in range(db + 1):
            a[k + i] = (a[k + i] - c * b[i]) % p
        _plist_trim(a)
    return q, a


class Elem:
    """An element of a finite field: an immutable coefficient vector."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field: Field, coeffs: tuple):
        self.field = field
        self.coeffs = coeffs

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __bool__(self):
        return any(self.coeffs)

    def _check(self, other):
        if not isinstance(other, Elem):
            raise TypeError(f"expected a field element, got {type(other).__name__}")
        if other.field is not self.field:
            raise FieldMismatch(f"mixing elements of {self.field} and {other.field}")

    def __add__(self, other):
        self._check(other)
        f = self.field
        if f.degree == 1:
            return Elem(f, ((self.coeffs[0] + other.coeffs[0]) % f.p,))
        return Elem(
            f, tuple((x + y) % f.p for x, y in zip(self.coeffs, other.coeffs))
        )

    def __sub__(self, other):
        self._check(other)
        f = self.field
        if f.degree == 1:
            return Elem(f, ((self.coeffs[0] - other.coeffs[0]) % f.p,))
        return Elem(
            f, tuple((x - y) % f.p for x, y in zip(self.coeffs, other.coeffs))
        )

    def __neg__(self):
        f = self.field
        return Elem(f, tuple(-x % f.p for x in self.coeffs))

    def __mul__(self, other):
        self._check(other)
        f = self.field
        if f.degree == 1:
            return Elem(f, (self.coeffs[0] * other.coeffs[0] % f.p,))
        return Elem(f, f._mul_raw(self.coeffs, other.coeffs))

    def inv(self) -> "Elem":
        return Elem(self.field, self.field._inv_raw(self.coeffs))

    def __truediv__(self, other):
        self._check(other)
        return self * other.inv()

    def __pow__(self, e: int):
        if not isinstance(e, int):
            return NotImplemented
        base = self
        if e < 0:
            base = self.inv()
            e = -e
        acc = self.field.one
        while e:
            if e & 1:
                acc = acc * base
            base = base * base
            e >>= 1
        return acc

    def __eq__(self, other):
        if not isinstance(other, Elem):
            return NotImplemented
        return self.field is other.field and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.field.token, self.coeffs))

    def __repr__(self):
        if self.field.degree == 1:
            return f"{self.coeffs[0]}"
        return f"{list(self.coeffs)}"


def make_prime_field(p: int) -> Field:
    """Construct F_p for a prime p within the supported range."""
    if not isinstance(p, int) or isinstance(p, bool):
        raise NotPrime(f"characteristic must be an integer, got {p!r}")
    if p > MAX_ORDER:
        raise Overflow(f"field order {p} exceeds the bound {MAX_ORDER}")
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    return Field(p, 1, None)
