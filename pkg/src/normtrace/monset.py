"""Monomial sets ``{(a, b)}`` inside the footprint ``a <= (q-1)u, b <= q^{r-1}-1``."""

from __future__ import annotations

from typing import Iterable, Iterator

from normtrace.curve import Curve


class MonomialSet:
    """An immutable set of exponent pairs tied to a footprint.

    Iteration yields pairs sorted by ``(b, a)``, the row order used for
    generator matrices.
    """

    __slots__ = ("pairs", "bound_a", "bound_b")

    def __init__(self, pairs: Iterable[tuple[int, int]], bound_a: int, bound_b: int):
        pairs = frozenset((int(a), int(b)) for a, b in pairs)
        for a, b in pairs:
            if not (0 <= a <= bound_a and 0 <= b <= bound_b):
                raise ValueError(f"x^{a} y^{b} lies outside the footprint a <= {bound_a}, b <= {bound_b}")
        self.pairs = pairs
        self.bound_a = bound_a
        self.bound_b = bound_b

    @classmethod
    def on(cls, curve: Curve, pairs: Iterable[tuple[int, int]]) -> "MonomialSet":
        return cls(pairs, curve.a_max, curve.b_max)

    def __iter__(self) -> Iterator[tuple[int, int]]:
        return iter(sorted(self.pairs, key=lambda ab: (ab[1], ab[0])))

    def __len__(self):
        return len(self.pairs)

    def __contains__(self, pair):
        return tuple(pair) in self.pairs

    def __hash__(self):
        return hash((self.pairs, self.bound_a, self.bound_b))

    def __repr__(self):
        return f"MonomialSet({sorted(self.pairs)}, bound_a={self.bound_a}, bound_b={self.bound_b})"

    def _check(self, other: "MonomialSet"):
        if (self.bound_a, self.bound_b) != (other.bound_a, other.bound_b):
            raise ValueError("monomial sets live in different footprints")

    def __eq__(self, other):
        if not isinstance(other, MonomialSet):
            return NotImplemented
        self._check(other)
        return self.pairs == other.pairs

    def _new(self, pairs) -> "MonomialSet":
        return MonomialSet(pairs, self.bound_a, self.bound_b)

    def __or__(self, other: "MonomialSet") -> "MonomialSet":
        self._check(other)
        return self._new(self.pairs | other.pairs)

    def __and__(self, other: "MonomialSet") -> "MonomialSet":
        self._check(other)
        return self._new(self.pairs & other.pairs)

    def __sub__(self, other: "MonomialSet") -> "MonomialSet":
        self._check(other)
        return self._new(self.pairs - other.pairs)

    def __le__(self, other: "MonomialSet") -> bool:
        self._check(other)
        return self.pairs <= other.pairs

    def issubset(self, other: "MonomialSet") -> bool:
        return self <= other

    def add(self, *pairs: tuple[int, int]) -> "MonomialSet":
        return self._new(self.pairs | set(pairs))

    def is_decreasing(self) -> bool:
        return validate_decreasing(self)

    def maximal(self) -> list[tuple[int, int]]:
        """Elements not dominated by another element of the set."""
        return [(a, b) for a, b in self if (a + 1, b) not in self.pairs and (a, b + 1) not in self.pairs]


def validate_decreasing(M: MonomialSet) -> bool:
    """True iff ``M`` is closed under divisibility.

    Checking the two immediate divisors of every element is enough.
    """
    pairs = M.pairs
    return all((a == 0 or (a - 1, b) in pairs) and (b == 0 or (a, b - 1) in pairs) for a, b in pairs)


def footprint_set(curve: Curve) -> MonomialSet:
    return MonomialSet.on(curve, curve.footprint())


def complement(M: MonomialSet, curve: Curve | None = None) -> MonomialSet:
    """``{(A - i, B - j) : (i, j) in footprint \\ M}`` with ``(A, B)`` the corner."""
    A, B = M.bound_a, M.bound_b
    if curve is not None and (curve.a_max, curve.b_max) != (A, B):
        raise ValueError("monomial set does not belong to this curve")
    return M._new((A - i, B - j) for i in range(A + 1) for j in range(B + 1) if (i, j) not in M.pairs)


def family_degree(curve: Curve, t: int) -> MonomialSet:
    """Footprint monomials of total degree at most ``t``."""
    return MonomialSet.on(curve, ((a, b) for a, b in curve.footprint() if a + b <= t))


def family_box(curve: Curve, A: int, B: int) -> MonomialSet:
    """Footprint monomials with ``a < A`` and ``b < B``."""
    return MonomialSet.on(curve, ((a, b) for a, b in curve.footprint() if a < A and b < B))


def family_onepoint(curve: Curve, s: int) -> MonomialSet:
    """Monomials of weighted degree ``a q^{r-1} + b (q^r-1)/(q-1) <= s``.

    These give the one-point codes ``C(D, s P_infinity)`` on the curve.
    """
    if s < 0:
        raise ValueError("s must be nonnegative")
    wx = curve.q ** (curve.r - 1)
    wy = (curve.q**curve.r - 1) // (curve.q - 1)
    return MonomialSet.on(curve, ((a, b) for a, b in curve.footprint() if a * wx + b * wy <= s))


def family_full(curve: Curve) -> MonomialSet:
    return footprint_set(curve)


def lower_sets(bound_a: int, bound_b: int) -> Iterator[MonomialSet]:
    """All lower sets of the ``(bound_a+1) x (bound_b+1)`` grid, the empty set included.

    A lower set is a weakly decreasing profile of column heights
    ``h_0 >= h_1 >= ... >= h_{bound_a}`` with ``0 <= h <= bound_b + 1``.
    """
    cols = bound_a + 1

    def profiles(i, cap):
        if i == cols:
            yield ()
            return
        for h in range(cap, -1, -1):
            for rest in profiles(i + 1, h):
                yield (h,) + rest

    for heights in profiles(0, bound_b + 1):
        yield MonomialSet(((a, b) for a, h in enumerate(heights) for b in range(h)), bound_a, bound_b)
