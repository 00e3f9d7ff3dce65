"""Exact scalar fields: the rationals and prime fields GF(p).

Field elements are stored inside numpy arrays.  Over Q the arrays have
``object`` dtype and hold :class:`fractions.Fraction` (or plain ``int``)
values; over GF(p) they are ``int64`` arrays reduced into ``{0, ..., p-1}``.
Every operation that produces new values goes through :meth:`Field.normalize`
so the reduction invariant holds everywhere.
"""
from __future__ import annotations

import itertools
import random
from fractions import Fraction
from functools import lru_cache

import numpy as np


class FieldError(ValueError):
    pass


class CharacteristicError(FieldError):
    """An operation needs 1/k! but k! vanishes in the field."""


class Field:
    char: int
    dtype: object
    name: str

    def __repr__(self):
        return self.name

    # scalars
    def __call__(self, x):
        raise NotImplementedError

    def inv(self, a):
        raise NotImplementedError

    def parse(self, text: str):
        raise NotImplementedError

    def format(self, a) -> str:
        return str(self(a))

    # arrays
    def normalize(self, arr):
        raise NotImplementedError

    def array(self, data):
        return self.normalize(np.asarray(data, dtype=self.dtype))

    def zeros(self, shape):
        return self.normalize(np.zeros(shape, dtype=self.dtype))

    def eye(self, n: int):
        return self.normalize(np.eye(n, dtype=np.int64).astype(self.dtype))

    def unit(self, n: int, i: int):
        v = self.zeros(n)
        v[i] = self(1)
        return v

    def einsum(self, subscripts: str, *operands):
        return self.normalize(np.einsum(subscripts, *operands))

    def is_zero(self, arr) -> bool:
        return not np.any(np.asarray(arr) != 0)

    def equal(self, a, b) -> bool:
        a, b = np.asarray(a), np.asarray(b)
        return a.shape == b.shape and not np.any(a != b)

    def scale(self, k, arr):
        return self.normalize(self(k) * np.asarray(arr))

    def require_invertible(self, *ks: int):
        """Raise CharacteristicError unless every integer in ``ks`` is a unit."""
        for k in ks:
            if self.char and k % self.char == 0:
                raise CharacteristicError(f"{k} is not invertible in {self.name}")

    def elements(self):
        raise FieldError(f"{self.name} is infinite")

    def random_element(self, rng: random.Random, size: int = 2):
        raise NotImplementedError

    def random_array(self, rng: random.Random, shape, size: int = 2):
        n = int(np.prod(shape)) if shape else 1
        vals = [self.random_element(rng, size) for _ in range(n)]
        return self.array(np.array(vals, dtype=self.dtype).reshape(shape))


class Rationals(Field):
    char = 0
    dtype = object
    name = "Q"

    def __call__(self, x):
        if isinstance(x, Fraction):
            return x
        if isinstance(x, (int, np.integer)):
            return Fraction(int(x))
        if isinstance(x, str):
            return self.parse(x)
        return Fraction(x)

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return 1 / Fraction(a)

    def parse(self, text: str):
        try:
            return Fraction(text.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise FieldError(f"not a rational number: {text!r}") from exc

    def format(self, a) -> str:
        return str(Fraction(a))

    def normalize(self, arr):
        arr = np.asarray(arr)
        if arr.dtype == object:
            return arr
        if arr.dtype.kind not in "biu":
            raise FieldError("floating point values are not exact field elements")
        out = np.empty(arr.shape, dtype=object)
        out.flat = [Fraction(int(v)) for v in arr.flat]
        return out

    def random_element(self, rng, size=2):
        num = rng.randint(-size, size)
        den = rng.choice([1, 1, 1, 2, 3])
        return Fraction(num, den)

    def __eq__(self, other):
        return isinstance(other, Rationals)

    def __hash__(self):
        return hash("Q")

    def __reduce__(self):
        return (Rationals, ())


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    i = 2
    while i * i <= p:
        if p % i == 0:
            return False
        i += 1
    return True


class PrimeField(Field):
    dtype = np.int64

    def __init__(self, p: int):
        p = int(p)
        if not _is_prime(p):
            raise FieldError(f"GF({p}): modulus must be prime")
        if p > 8191:
            # quartic products of residues are summed in int64 before reduction
            raise FieldError(f"GF({p}): modulus too large for int64 kernels")
        self.p = self.char = p
        self.name = f"GF({p})"

    def __call__(self, x):
        if isinstance(x, str):
            return self.parse(x)
        if isinstance(x, Fraction):
            return (x.numerator * pow(x.denominator, -1, self.p)) % self.p
        return int(x) % self.p

    def inv(self, a):
        a = int(a) % self.p
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(a, -1, self.p)

    def parse(self, text: str):
        try:
            return self(Fraction(text.strip()))
        except (ValueError, ZeroDivisionError) as exc:
            raise FieldError(f"not an element of {self.name}: {text!r}") from exc

    def normalize(self, arr):
        arr = np.asarray(arr)
        if arr.dtype == object:
            arr = np.vectorize(self.__call__, otypes=[np.int64])(arr) if arr.size else arr.astype(np.int64)
        return np.mod(arr.astype(np.int64, copy=False), self.p)

    def elements(self):
        return range(self.p)

    def random_element(self, rng, size=2):
        return rng.randrange(self.p)

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("GF", self.p))

    def __reduce__(self):
        return (GF, (self.p,))


QQ = Rationals()


@lru_cache(maxsize=None)
def GF(p: int) -> PrimeField:
    return PrimeField(p)


def field_from_spec(spec: str) -> Field:
    """Parse ``"Q"`` or ``"GF p"`` (also ``"GF(p)"``, ``"GF7"``)."""
    s = spec.strip().replace("(", " ").replace(")", " ")
    if s.upper() in ("Q", "QQ"):
        return QQ
    if s.upper().startswith("GF"):
        rest = s[2:].strip()
        try:
            return GF(int(rest))
        except ValueError as exc:
            raise FieldError(f"bad field spec {spec!r}") from exc
    raise FieldError(f"bad field spec {spec!r}")


def all_vectors(F: Field, n: int):
    """Every vector of F^n in lexicographic order (finite fields only)."""
    for tup in itertools.product(F.elements(), repeat=n):
        yield F.array(list(tup))
