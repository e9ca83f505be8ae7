"""Univariate polynomials over finite fields, factorization, embeddings.

This module also owns field construction beyond the prime case: building
extensions from a validated modulus, the registry of canonical fields
(smallest-modulus representatives used as splitting fields), and the
cached embeddings between compatible fields.
"""

from __future__ import annotations

import math
import random
import threading
from functools import lru_cache
from itertools import product
from typing import Iterable, Optional

from .errors import (
    BaseNotPrime,
    DivisionByZero,
    EmbeddingUnavailable,
    FieldMismatch,
    NotIrreducible,
    Overflow,
    SelfCheckError,
    ZeroPolynomial,
)
from .fields import MAX_ORDER, Elem, Field, make_prime_field

# Fixed seeds keep the randomized splitting steps reproducible run to run.
_FACTOR_SEED = 0x5EEDF00D
_EMBED_SEED = 0xE713ED
# Below this order, roots are found by direct evaluation.
_BRUTE_ROOT_LIMIT = 4096


class Poly:
    """A univariate polynomial with coefficients in one field.

    Coefficients are stored constant term first with no trailing zeros;
    the zero polynomial has an empty coefficient tuple and degree -1.
    """

    __slots__ = ("field", "coeffs")

    def __init__(self, field: Field, coeffs: Iterable[Elem]):
        cs = list(coeffs)
        while cs and cs[-1].is_zero():
            cs.pop()
        self.field = field
        self.coeffs = tuple(cs)

    # -- constructors ---------------------------------------------------

    @classmethod
    def zero(cls, field: Field) -> "Poly":
        return cls(field, ())

    @classmethod
    def one(cls, field: Field) -> "Poly":
        return cls(field, (field.one,))

    @classmethod
    def x(cls, field: Field) -> "Poly":
        return cls(field, (field.zero, field.one))

    @classmethod
    def constant(cls, c: Elem) -> "Poly":
        return cls(c.field, (c,))

    @classmethod
    def from_ints(cls, field: Field, ints: Iterable[int]) -> "Poly":
        return cls(field, tuple(field.elem(c) for c in ints))

    # -- basic queries ----------------------------------------------------

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == self.field.one

    def leading(self) -> Elem:
        if not self.coeffs:
            raise ZeroPolynomial("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def _check(self, other):
        if not isinstance(other, Poly):
            raise TypeError(f"expected Poly, got {type(other).__name__}")
        if other.field is not self.field:
            raise FieldMismatch(
                f"mixing polynomials over {self.field} and {other.field}"
            )

    # -- ring operations ---------------------------------------------------

    def __add__(self, other):
        self._check(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return Poly(self.field, out)

    def __sub__(self, other):
        self._check(other)
        n = max(len(self.coeffs), len(other.coeffs))
        z = self.field.zero
        out = []
        for i in range(n):
            x = self.coeffs[i] if i < len(self.coeffs) else z
            y = other.coeffs[i] if i < len(other.coeffs) else z
            out.append(x - y)
        return Poly(self.field, out)

    def __neg__(self):
        return Poly(self.field, tuple(-c for c in self.coeffs))

    def __mul__(self, other):
        self._check(other)
        if self.is_zero() or other.is_zero():
            return Poly.zero(self.field)
        z = self.field.zero
        out = [z] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, x in enumerate(self.coeffs):
            if not x.is_zero():
                for j, y in enumerate(other.coeffs):
                    if not y.is_zero():
                        out[i + j] = out[i + j] + x * y
        return Poly(self.field, out)

    def __divmod__(self, other):
        self._check(other)
        if other.is_zero():
            raise DivisionByZero("polynomial division by zero")
        if self.degree < other.degree:
            return Poly.zero(self.field), self
        z = self.field.zero
        rem = list(self.coeffs)
        db = other.degree
        inv_lead = other.coeffs[-1].inv()
        q = [z] * (len(rem) - db)
        for k in range(len(rem) - db - 1, -1, -1):
            c = rem[k + db] * inv_lead
            if not c.is_zero():
                q[k] = c
                for i, bc in enumerate(other.coeffs):
                    rem[k + i] = rem[k + i] - c * bc
        return Poly(self.field, q), Poly(self.field, rem[:db])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def monic(self) -> "Poly":
        if self.is_zero():
            raise ZeroPolynomial("cannot normalize the zero polynomial")
        lead = self.coeffs[-1]
        if lead == self.field.one:
            return self
        inv = lead.inv()
        return Poly(self.field, tuple(c * inv for c in self.coeffs))

    def derivative(self) -> "Poly":
        f = self.field
        out = []
        for i in range(1, len(self.coeffs)):
            k = i % f.p
            if k == 0:
                out.append(f.zero)
            elif k == 1:
                out.append(self.coeffs[i])
            else:
                out.append(f.elem(k) * self.coeffs[i])
        return Poly(f, out)

    def __call__(self, x: Elem) -> Elem:
        """Evaluate at x, embedding coefficients into x's field if needed."""
        if x.field is not self.field:
            lifted = embed_poly(self, x.field)
            return lifted(x)
        acc = self.field.zero
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __eq__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        return self.field is other.field and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.field.token, tuple(c.coeffs for c in self.coeffs)))

    def __repr__(self):
        if self.is_zero():
            return "0"
        parts = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if c.is_zero():
                continue
            cs = repr(c)
            if i == 0:
                parts.append(cs)
            else:
                xs = "x" if i == 1 else f"x^{i}"
                parts.append(xs if cs == "1" else f"{cs}*{xs}")
        return " + ".join(parts)


def poly_key(f: Poly):
    """Canonical sort key: degree, then coefficient vectors constant first."""
    return (f.degree, tuple(c.coeffs for c in f.coeffs))


def poly_gcd(f: Poly, g: Poly) -> Poly:
    """Monic greatest common divisor; gcd(0, 0) is 0."""
    if f.field is not g.field:
        raise FieldMismatch("gcd of polynomials over different fields")
    a, b = f, g
    while not b.is_zero():
        a, b = b, a % b
    if a.is_zero():
        return a
    return a.monic()


def pow_mod(base: Poly, e: int, mod: Poly) -> Poly:
    """base**e reduced modulo mod, by binary exponentiation."""
    if e < 0:
        raise ValueError("exponent must be non-negative")
    result = Poly.one(base.field)
    base = base % mod
    while e:
        if e & 1:
            result = result * base % mod
        base = base * base % mod
        e >>= 1
    return result


def _prime_divisors(n: int):
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def is_irreducible(f: Poly) -> bool:
    """Deterministic irreducibility test over any constructed field.

    Uses the degree-divisor characterization: f of degree n over F_q is
    irreducible iff x^(q^n) = x mod f and gcd(x^(q^(n/r)) - x, f) = 1 for
    every prime r dividing n.
    """
    if f.is_zero():
        raise ZeroPolynomial("irreducibility of the zero polynomial")
    n = f.degree
    if n == 0:
        return False
    if n == 1:
        return True
    if f.coeffs[0].is_zero():
        return False
    q = f.field.order
    x = Poly.x(f.field)
    checkpoints = {n // r for r in _prime_divisors(n)}
    cur = x % f
    for i in range(1, n + 1):
        cur = pow_mod(cur, q, f)
        if i in checkpoints:
            if poly_gcd(cur - x, f).degree != 0:
                return False
    return cur == x % f


def smallest_irreducible(base: Field, d: int) -> Poly:
    """Lexicographically first monic irreducible of degree d over a prime field.

    Candidates are ordered by their coefficient vector, constant term
    first, under the canonical residue order.
    """
    if base.degree != 1:
        raise BaseNotPrime(f"{base} is not a prime field")
    if d < 1:
        raise ValueError("degree must be at least 1")
    if base.p**d > MAX_ORDER:
        raise Overflow(
            f"extension order {base.p}^{d} exceeds the bound {MAX_ORDER}"
        )
    for tail in product(range(base.p), repeat=d):
        cand = Poly.from_ints(base, list(tail) + [1])
        if is_irreducible(cand):
            return cand
    raise SelfCheckError("no irreducible polynomial found")  # unreachable


def make_extension(base: Field, modulus: Poly) -> Field:
    """Construct F_p[x]/(modulus) over a prime field."""
    if base.degree != 1:
        raise BaseNotPrime(f"{base} is not a prime field")
    if modulus.field is not base:
        raise FieldMismatch("modulus is not a polynomial over the base field")
    d = modulus.degree
    if d < 2:
        raise ValueError("extension modulus must have degree at least 2")
    if not modulus.is_monic():
        raise ValueError("extension modulus must be monic")
    if base.p**d > MAX_ORDER:
        raise Overflow(
            f"extension order {base.p}^{d} exceeds the bound {MAX_ORDER}"
        )
    if not is_irreducible(modulus):
        raise NotIrreducible(f"modulus {modulus} is reducible over {base}")
    return Field(base.p, d, tuple(c.coeffs[0] for c in modulus.coeffs))


# -- canonical fields ----------------------------------------------------

_canonical_lock = threading.Lock()
_canonical_registry: dict = {}


def canonical_field(p: int, d: int) -> Field:
    """The shared F_{p^d} defined by the smallest irreducible modulus.

    Repeated calls return the same object, so elements from independent
    computations interoperate.
    """
    key = (p, d)
    with _canonical_lock:
        got = _canonical_registry.get(key)
    if got is not None:
        return got
    base = make_prime_field(p)
    if d == 1:
        field = base
    else:
        field = make_extension(base, smallest_irreducible(base, d))
    with _canonical_lock:
        return _canonical_registry.setdefault(key, field)


def compositum(f1: Field, f2: Field) -> Field:
    """A smallest common extension both fields embed into."""
    if f1.p != f2.p:
        raise FieldMismatch("fields of different characteristic")
    if f1 is f2:
        return f1
    if f2.degree % f1.degree == 0 and f1.degree % f2.degree != 0:
        return f2
    if f1.degree % f2.degree == 0:
        return f1
    d = math.lcm(f1.degree, f2.degree)
    if f1.p**d > MAX_ORDER:
        raise Overflow(
            f"compositum order {f1.p}^{d} exceeds the bound {MAX_ORDER}"
        )
    return canonical_field(f1.p, d)


# -- embeddings ----------------------------------------------------------

_embed_lock = threading.Lock()
_embed_cache: dict = {}


def _lift_ints(ints, target: Field) -> Poly:
    """Prime-field coefficients viewed as constants of the target field."""
    pad = (0,) * (target.degree - 1)
    return Poly(target, tuple(Elem(target, (c % target.p,) + pad) for c in ints))


def _split_off_root(f: Poly, field: Field, rng) -> Elem:
    """One root of f, given that f splits into distinct linear factors."""
    while f.degree > 1:
        if f.coeffs[0].is_zero():
            return field.zero
        a = Poly(field, tuple(field.random_elem(rng) for _ in range(f.degree)))
        g = poly_gcd(a, f)
        if 0 < g.degree < f.degree:
            f = g if g.degree <= f.degree - g.degree else f // g
            continue
        if field.p == 2:
            # char 2: splitting via the absolute trace of a random element
            t = a % f
            acc = t
            for _ in range(field.degree - 1):
                t = t * t % f
                acc = acc + t
            g = poly_gcd(acc, f)
        else:
            b = pow_mod(a, (field.order - 1) // 2, f)
            g = poly_gcd(b - Poly.one(field), f)
        if 0 < g.degree < f.degree:
            f = g if g.degree <= f.degree - g.degree else f // g
    return -(f.monic().coeffs[0])


def _roots_of_split_poly(f: Poly, field: Field, rng, count: int):
    """All roots of f in field, where f has exactly `count` distinct roots."""
    if field.order <= _BRUTE_ROOT_LIMIT:
        roots = [a for a in field.elements() if f(a).is_zero()]
    else:
        r = _split_off_root(f, field, rng)
        roots = [r]
        seen = {r}
        # the remaining roots are Frobenius conjugates over the prime field
        cur = r
        for _ in range(count * field.degree):
            cur = cur**field.p
            if cur in seen:
                break
            if f(cur).is_zero():
                seen.add(cur)
                roots.append(cur)
        if len(roots) != count:
            # conjugation missed some root of a non-irreducible input
            remaining = f
            for r0 in roots:
                remaining = remaining // Poly(
                    field, (-r0, field.one)
                )
            while len(roots) < count:
                r0 = _split_off_root(remaining, field, rng)
                roots.append(r0)
                remaining = remaining // Poly(field, (-r0, field.one))
    if len(roots) != count:
        raise SelfCheckError(
            f"expected {count} roots, found {len(roots)}"
        )
    return sorted(roots, key=lambda e: e.coeffs)


def _embedding_powers(source: Field, target: Field):
    """Rows of the embedding map: coefficient vectors of rho^i in target.

    rho is the canonical image of the source generator, chosen as the
    lexicographically smallest root of the source modulus in the target.
    Cached per (source, target) pair so the embedding is one fixed
    homomorphism across all calls.
    """
    key = (source.token, target.token)
    with _embed_lock:
        got = _embed_cache.get(key)
    if got is not None:
        return got
    mod_t = _lift_ints(source.modulus, target)
    rng = random.Random(_EMBED_SEED)
    roots = _roots_of_split_poly(mod_t, target, rng, source.degree)
    rho = roots[0]
    rows = []
    acc = target.one
    for _ in range(source.degree):
        rows.append(acc.coeffs)
        acc = acc * rho
    rows = tuple(rows)
    with _embed_lock:
        return _embed_cache.setdefault(key, rows)


def embed(a: Elem, target: Field) -> Elem:
    """The canonical image of a in an extension of its owner."""
    source = a.field
    if source is target:
        return a
    if source.p != target.p:
        raise EmbeddingUnavailable(
            f"no embedding between characteristics {source.p} and {target.p}"
        )
    if source.degree == 1:
        return Elem(target, (a.coeffs[0],) + (0,) * (target.degree - 1))
    if target.degree % source.degree != 0:
        raise EmbeddingUnavailable(
            f"{source} does not embed into {target}: degree does not divide"
        )
    rows = _embedding_powers(source, target)
    p = target.p
    out = [0] * target.degree
    for c, row in zip(a.coeffs, rows):
        if c:
            for j, r in enumerate(row):
                if r:
                    out[j] = (out[j] + c * r) % p
    return Elem(target, tuple(out))


def embed_poly(f: Poly, target: Field) -> Poly:
    if f.field is target:
        return f
    return Poly(target, tuple(embed(c, target) for c in f.coeffs))


# -- factorization --------------------------------------------------------


def _pth_root_poly(f: Poly) -> Poly:
    """For f with zero derivative, the g with g(x)^p = f(x)."""
    field = f.field
    p = field.p
    e = p ** (field.degree - 1)  # a -> a^(p^(d-1)) inverts Frobenius
    out = []
    for i in range(0, len(f.coeffs), p):
        out.append(f.coeffs[i] ** e)
    return Poly(field, out)


def _squarefree_parts(f: Poly, mult: int, parts: list):
    # f monic of positive degree; appends (squarefree monic, multiplicity)
    df = f.derivative()
    if df.is_zero():
        _squarefree_parts(_pth_root_poly(f), mult * f.field.p, parts)
        return
    c = poly_gcd(f, df)
    w = f // c
    i = 1
    while w.degree > 0:
        y = poly_gcd(w, c)
        z = w // y
        if z.degree > 0:
            parts.append((z, mult * i))
        w = y
        c = c // y
        i += 1
    if c.degree > 0:
        _squarefree_parts(_pth_root_poly(c), mult * f.field.p, parts)


def _distinct_degree(g: Poly):
    """Split a monic squarefree g into (degree, product-of-that-degree) parts."""
    field = g.field
    q = field.order
    out = []
    x = Poly.x(field)
    cur = x % g
    d = 0
    while g.degree >= 2 * (d + 1):
        d += 1
        cur = pow_mod(cur, q, g)
        h = poly_gcd(cur - x, g)
        if h.degree > 0:
            out.append((d, h))
            g = g // h
            cur = cur % g
    if g.degree > 0:
        out.append((g.degree, g))
    return out


def _equal_degree_split(h: Poly, d: int, rng, out: list):
    """Split h, a product of distinct irreducibles of degree d, completely."""
    field = h.field
    if h.degree == d:
        out.append(h.monic())
        return
    q = field.order
    while True:
        a = Poly(field, tuple(field.random_elem(rng) for _ in range(h.degree)))
        g = poly_gcd(a, h)
        if 0 < g.degree < h.degree:
            break
        if a.degree < 1:
            continue
        if field.p == 2:
            t = a % h
            acc = t
            for _ in range(field.degree * d - 1):
                t = t * t % h
                acc = acc + t
            g = poly_gcd(acc, h)
        else:
            b = pow_mod(a, (q**d - 1) // 2, h)
            g = poly_gcd(b - Poly.one(field), h)
        if 0 < g.degree < h.degree:
            break
    _equal_degree_split(g, d, rng, out)
    _equal_degree_split(h // g, d, rng, out)


def factor(f: Poly, rng: Optional[random.Random] = None):
    """Factor f into monic irreducibles with multiplicities.

    Returns a list of (factor, multiplicity) pairs in canonical order
    (degree, then coefficient vectors).  The product of the factors
    equals f divided by its leading coefficient.  The randomness used by
    equal-degree splitting comes from the supplied generator; the default
    is a fixed-seed generator, so results are deterministic.
    """
    if f.is_zero():
        raise ZeroPolynomial("cannot factor the zero polynomial")
    if rng is None:
        rng = random.Random(_FACTOR_SEED)
    if f.degree == 0:
        return []
    parts: list = []
    _squarefree_parts(f.monic(), 1, parts)
    found: dict = {}
    for g, mult in parts:
        for d, h in _distinct_degree(g):
            irr: list = []
            _equal_degree_split(h, d, rng, irr)
            for piece in irr:
                found[piece] = found.get(piece, 0) + mult
    return sorted(found.items(), key=lambda it: poly_key(it[0]))


@lru_cache(maxsize=4096)
def _factor_default(f: Poly):
    return tuple(factor(f))


@lru_cache(maxsize=8192)
def _roots_of_irreducible(g: Poly, ext: Field):
    """All roots in ext of an irreducible g, sorted by coefficient vector.

    Assumes deg(g) divides [ext : owner].  For a prime-field owner, the
    roots are computed in the small canonical field first and carried
    across by the cached embedding; that keeps repeated eigenvalue
    computations cheap.
    """
    owner = g.field
    dg = g.degree
    if dg == 1:
        root = -(g.monic().coeffs[0])
        return (embed(root, ext),)
    rng = random.Random(_EMBED_SEED ^ dg)
    if owner.degree == 1:
        small = canonical_field(owner.p, dg)
        g_small = embed_poly(g.monic(), small)
        roots = _roots_of_split_poly(g_small, small, rng, dg)
        images = [embed(r, ext) for r in roots]
    else:
        g_ext = embed_poly(g.monic(), ext)
        if ext.order <= _BRUTE_ROOT_LIMIT:
            images = [a for a in ext.elements() if g_ext(a).is_zero()]
        else:
            r = _split_off_root(g_ext, ext, rng)
            images = [r]
            q = owner.order
            cur = r
            for _ in range(dg - 1):
                cur = cur**q
                images.append(cur)
    if len(set(images)) != dg:
        raise SelfCheckError(f"expected {dg} distinct roots of {g}")
    return tuple(sorted(images, key=lambda e: e.coeffs))


def roots_in(f: Poly, ext: Field):
    """All roots of f lying in ext, repeated per multiplicity.

    Roots are listed factor by factor in canonical factor order, each
    factor's roots sorted by coefficient vector.
    """
    if f.is_zero():
        raise ZeroPolynomial("roots of the zero polynomial")
    owner = f.field
    if ext.p != owner.p or ext.degree % owner.degree != 0:
        raise EmbeddingUnavailable(f"{owner} does not embed into {ext}")
    rel_degree = ext.degree // owner.degree
    out = []
    for g, mult in _factor_default(f):
        if rel_degree % g.degree != 0:
            continue  # this factor has no roots down in ext
        for r in _roots_of_irreducible(g, ext):
            out.extend([r] * mult)
    return out
