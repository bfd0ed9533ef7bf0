"""Finite field tower F_p <= F_q <= F_{q^r} with table arithmetic.

Elements are plain ints in ``[0, q^r)``.  An int encodes the polynomial
``c_0 + c_1 t + ... + c_{m-1} t^{m-1}`` (m = s*r) by its base-p digits, so
0 and 1 are the field zero and one and the prime field is ``{0, ..., p-1}``.
The generator is the class of ``t``, i.e. the int ``p``.

Scalar methods (``add``, ``mul``, ...) take and return ints.  The ``v``-prefixed
methods take numpy integer arrays and broadcast.
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass

import numpy as np

MAX_ORDER = 2**20
# fields at most this big also get a dense addition table
_ADD_TABLE_MAX = 512


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    f = 2
    while f * f <= n:
        if n % f == 0:
            return False
        f += 1
    return True


def prime_factors(n: int) -> list[int]:
    out = []
    f = 2
    while f * f <= n:
        if n % f == 0:
            out.append(f)
            while n % f == 0:
                n //= f
        f += 1
    if n > 1:
        out.append(n)
    return out


def prime_power(q: int) -> tuple[int, int]:
    """Split ``q`` as ``p**s``; raise ValueError if it is not a prime power."""
    if q < 2:
        raise ValueError(f"q={q} is not a prime power")
    p = prime_factors(q)[0]
    s = 0
    while q % p == 0:
        q //= p
        s += 1
    if q != 1:
        raise ValueError("q is not a prime power")
    return p, s


@dataclass(frozen=True)
class FieldParams:
    """Characteristic ``p``, ``q = p**s`` and the extension degree ``r`` of F_{q^r}/F_q."""

    p: int
    s: int
    r: int

    def __post_init__(self):
        if not is_prime(self.p):
            raise ValueError(f"p={self.p} is not prime")
        if self.s < 1:
            raise ValueError(f"s={self.s} must be >= 1")
        if self.r < 2:
            raise ValueError(f"r={self.r} must be >= 2")
        if self.p ** (self.s * self.r) > MAX_ORDER:
            raise ValueError(f"field order {self.p}^{self.s * self.r} exceeds the cap 2^20")

    @property
    def q(self) -> int:
        return self.p**self.s

    @property
    def order(self) -> int:
        return self.q**self.r

    @classmethod
    def from_q(cls, q: int, r: int) -> "FieldParams":
        p, s = prime_power(q)
        return cls(p, s, r)


# -- polynomial helpers over F_p (coefficient lists, low degree first) -------


def _polymulmod(a, b, mod, p):
    m = len(mod) - 1
    prod = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                prod[i + j] = (prod[i + j] + x * y) % p
    # mod is monic
    for k in range(len(prod) - 1, m - 1, -1):
        c = prod[k]
        if c:
            for j in range(m + 1):
                prod[k - m + j] = (prod[k - m + j] - c * mod[j]) % p
    return prod[:m] + [0] * (m - len(prod[:m]))


def _t_power(e, mod, p):
    m = len(mod) - 1
    result = [1] + [0] * (m - 1)
    base = [0, 1] + [0] * (m - 2)
    while e:
        if e & 1:
            result = _polymulmod(result, base, mod, p)
        base = _polymulmod(base, base, mod, p)
        e >>= 1
    return result


def _is_primitive(mod, p) -> bool:
    m = len(mod) - 1
    n = p**m - 1
    one = [1] + [0] * (m - 1)
    if _t_power(n, mod, p) != one:
        return False
    return all(_t_power(n // f, mod, p) != one for f in prime_factors(n))


def _candidate_moduli(p: int, m: int):
    """Monic degree-m polynomials with nonzero constant term, fewest terms
    first, ties in lexicographic order of (c_{m-1}, ..., c_0)."""
    for weight in range(2, m + 2):
        cands = []
        for pos in itertools.combinations(range(1, m), weight - 2):
            for vals in itertools.product(range(1, p), repeat=weight - 1):
                low = [0] * m
                low[0] = vals[0]
                for i, v in zip(pos, vals[1:]):
                    low[i] = v
                cands.append(low)
        cands.sort(key=lambda c: c[::-1])
        for low in cands:
            yield tuple(low) + (1,)


def find_primitive_polynomial(p: int, m: int) -> tuple[int, ...]:
    for mod in _candidate_moduli(p, m):
        if _is_primitive(list(mod), p):
            return mod
    raise AssertionError("no primitive polynomial found")  # unreachable


class Field:
    """The field F_{q^r} together with its subfield F_q.

    Construct through :func:`make_field`, which caches one instance per
    parameter set.
    """

    def __init__(self, params: FieldParams):
        self.params = params
        self.p, self.s, self.r = params.p, params.s, params.r
        self.q = params.q
        self.order = params.order
        self.degree = self.s * self.r
        self.modulus = find_primitive_polynomial(self.p, self.degree)
        self.generator = self.p
        self._build_tables()
        # (Q-1)/2 is the log of -1 in odd characteristic
        self._neg_shift = 0 if self.p == 2 else (self.order - 1) // 2
        self._norm_exp = (self.order - 1) // (self.q - 1)
        self.subfield = tuple(sorted([0] + [int(self.exp[k]) for k in range(0, self.order - 1, self._norm_exp)]))
        self._add_table = None
        if self.order <= _ADD_TABLE_MAX:
            els = np.arange(self.order)
            self._add_table = self._zech_add(els[:, None], els[None, :])

    def _build_tables(self):
        p, m, Q = self.p, self.degree, self.order
        n = Q - 1
        # multiplication by t as a matrix acting on digit row vectors
        C = np.zeros((m, m), dtype=np.int64)
        for i in range(1, m):
            C[i - 1, i] = 1
        for i in range(m):
            C[m - 1, i] = (-self.modulus[i]) % p
        block = min(n, 4096)
        digits = np.zeros((n, m), dtype=np.int64)
        digits[0, 0] = 1
        for k in range(1, block):
            digits[k] = (digits[k - 1] @ C) % p
        step = np.eye(m, dtype=np.int64)
        for _ in range(block):
            step = (step @ C) % p
        for start in range(block, n, block):
            stop = min(start + block, n)
            digits[start:stop] = (digits[start - block : stop - block] @ step) % p
        values = digits @ (p ** np.arange(m, dtype=np.int64))
        self.exp = np.concatenate([values, values]).astype(np.int64)
        self.log = np.full(Q, -1, dtype=np.int64)
        self.log[values] = np.arange(n)
        if (self.log[1:] < 0).any():
            raise AssertionError("generator is not primitive")
        d0 = values % p
        plus_one = values - d0 + (d0 + 1) % p
        self.zech = np.where(plus_one == 0, -1, self.log[plus_one])
        self._exp_list = self.exp.tolist()
        self._log_list = self.log.tolist()
        self._zech_list = self.zech.tolist()

    def __repr__(self):
        return f"Field(p={self.p}, s={self.s}, r={self.r})"

    # -- scalar arithmetic ---------------------------------------------------

    def add(self, a: int, b: int) -> int:
        if a == 0:
            return b
        if b == 0:
            return a
        la = self._log_list[a]
        z = self._zech_list[(self._log_list[b] - la) % (self.order - 1)]
        if z < 0:
            return 0
        return self._exp_list[la + z]

    def neg(self, a: int) -> int:
        if a == 0 or self.p == 2:
            return a
        return self._exp_list[self._log_list[a] + self._neg_shift]

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return self._exp_list[self._log_list[a] + self._log_list[b]]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return self._exp_list[(-self._log_list[a]) % (self.order - 1)]

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        if a == 0:
            if e < 0:
                raise ZeroDivisionError("negative power of zero")
            return 1 if e == 0 else 0
        return self._exp_list[(self._log_list[a] * e) % (self.order - 1)]

    def sum(self, values) -> int:
        acc = 0
        for v in values:
            acc = self.add(acc, v)
        return acc

    def frobenius(self, a: int) -> int:
        """``a**q``."""
        return self.pow(a, self.q)

    def trace(self, a: int) -> int:
        return int(self.trace_table[a])

    def norm(self, a: int) -> int:
        return self.pow(a, self._norm_exp)

    def embed(self, i: int) -> int:
        """Image of the integer ``i`` under Z -> F_{q^r}."""
        return i % self.p

    def in_subfield(self, a: int) -> bool:
        return self.pow(a, self.q) == a

    # -- vectorised arithmetic -------------------------------------------------

    def _zech_add(self, a, b):
        a, b = np.broadcast_arrays(np.asarray(a, dtype=np.int64), np.asarray(b, dtype=np.int64))
        la, lb = self.log[a], self.log[b]
        z = self.zech[(lb - la) % (self.order - 1)]
        out = self.exp[la + z]
        out = np.where(z < 0, 0, out)
        out = np.where(a == 0, b, out)
        return np.where(b == 0, a, out)

    def vadd(self, a, b):
        if self._add_table is not None:
            return self._add_table[np.asarray(a), np.asarray(b)]
        return self._zech_add(a, b)

    def vneg(self, a):
        a = np.asarray(a, dtype=np.int64)
        if self.p == 2:
            return a
        return np.where(a == 0, 0, self.exp[self.log[a] + self._neg_shift])

    def vsub(self, a, b):
        return self.vadd(a, self.vneg(b))

    def vmul(self, a, b):
        a, b = np.broadcast_arrays(np.asarray(a, dtype=np.int64), np.asarray(b, dtype=np.int64))
        out = self.exp[self.log[a] + self.log[b]]
        return np.where((a == 0) | (b == 0), 0, out)

    def vinv(self, a):
        a = np.asarray(a, dtype=np.int64)
        if (a == 0).any():
            raise ZeroDivisionError("inverse of zero")
        return self.exp[(-self.log[a]) % (self.order - 1)]

    def vdiv(self, a, b):
        return self.vmul(a, self.vinv(b))

    def vpow(self, a, e: int):
        a = np.asarray(a, dtype=np.int64)
        zero = a == 0
        if e < 0 and zero.any():
            raise ZeroDivisionError("negative power of zero")
        out = self.exp[(self.log[a] * e) % (self.order - 1)]
        return np.where(zero, 1 if e == 0 else 0, out)

    def vsum(self, a, axis=0):
        """Field sum along ``axis``."""
        a = np.moveaxis(np.asarray(a, dtype=np.int64), axis, 0)
        acc = np.zeros(a.shape[1:], dtype=np.int64)
        for row in a:
            acc = self.vadd(acc, row)
        return acc

    def elements(self) -> np.ndarray:
        return np.arange(self.order, dtype=np.int64)

    @functools.cached_property
    def trace_table(self) -> np.ndarray:
        cur = self.elements()
        acc = cur
        for _ in range(self.r - 1):
            cur = self.vpow(cur, self.q)
            acc = self.vadd(acc, cur)
        return acc

    @functools.cached_property
    def norm_table(self) -> np.ndarray:
        return self.vpow(self.elements(), self._norm_exp)

    def vtrace(self, a):
        return self.trace_table[np.asarray(a, dtype=np.int64)]


@functools.lru_cache(maxsize=None)
def make_field(params: FieldParams) -> Field:
    return Field(params)


def field_for(q: int, r: int) -> Field:
    return make_field(FieldParams.from_q(q, r))


def dual_basis(field: Field, basis) -> list[int]:
    """Trace-dual basis of an F_q-basis of F_{q^r}.

    Solves the Gram system ``Tr(z_i z_j)`` over F_q.  Raises ValueError when
    ``basis`` is not a basis.
    """
    from normtrace import ffla

    basis = [int(z) for z in basis]
    if len(basis) != field.r:
        raise ValueError(f"a basis of F_q^r over F_q has {field.r} elements, got {len(basis)}")
    gram = np.array([[field.trace(field.mul(a, b)) for b in basis] for a in basis], dtype=np.int64)
    try:
        ginv = ffla.inverse(field, gram)
    except ffla.SingularMatrixError:
        raise ValueError("elements are not linearly independent over F_q") from None
    return [field.sum(field.mul(int(ginv[k, j]), basis[k]) for k in range(field.r)) for j in range(field.r)]
