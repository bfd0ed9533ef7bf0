"""The extended norm-trace curve ``x^u = Tr(y)`` over F_{q^r}.

Points are listed in canonical order (ascending int of the x-coordinate, then
of the y-coordinate); every evaluation vector and matrix column follows it.
"""

from __future__ import annotations

from typing import Iterable, NamedTuple

import numpy as np

from normtrace.gf import Field


class CurvePoint(NamedTuple):
    alpha: int
    beta: int
    index: int


class Curve:
    """Affine points of ``x^u = y^{q^{r-1}} + ... + y^q + y``.

    Parameters
    ----------
    field : Field
        The code field F_{q^r}.
    u : int
        Must divide ``(q^r - 1)/(q - 1)``.
    """

    def __init__(self, field: Field, u: int):
        q, r = field.q, field.r
        if u < 1 or ((q**r - 1) // (q - 1)) % u:
            raise ValueError(f"u={u} does not divide (q^r-1)/(q-1) = {(q**r - 1) // (q - 1)}")
        self.field = field
        self.u = u
        self.q, self.r = q, r
        self.a_max = (q - 1) * u
        self.b_max = q ** (r - 1) - 1

        els = field.elements()
        x_pow = field.vpow(els, u)
        traces = field.trace_table
        points = []
        for alpha in range(field.order):
            for beta in np.nonzero(traces == x_pow[alpha])[0]:
                points.append(CurvePoint(alpha, int(beta), len(points)))
        self.points: list[CurvePoint] = points
        self.n = len(points)
        if self.n != q ** (r - 1) * ((q - 1) * u + 1):
            raise AssertionError(f"point count {self.n} disagrees with q^(r-1)((q-1)u+1)")
        self.xs = np.array([P.alpha for P in points], dtype=np.int64)
        self.ys = np.array([P.beta for P in points], dtype=np.int64)
        self._index = {(P.alpha, P.beta): P.index for P in points}

    def __repr__(self):
        return f"Curve(q={self.q}, r={self.r}, u={self.u}, n={self.n})"

    def __len__(self):
        return self.n

    def index_of(self, alpha: int, beta: int) -> int:
        try:
            return self._index[(alpha, beta)]
        except KeyError:
            raise ValueError(f"({alpha}, {beta}) is not on the curve") from None

    def point(self, alpha: int, beta: int) -> CurvePoint:
        return self.points[self.index_of(alpha, beta)]

    def partition(self, gamma: int) -> list[CurvePoint]:
        """Points with ``alpha^u = Tr(beta) = gamma`` for ``gamma`` in F_q."""
        if gamma not in self.field.subfield:
            raise ValueError(f"{gamma} is not in F_q")
        return [P for P in self.points if self.field.trace(P.beta) == gamma]

    def footprint(self) -> set[tuple[int, int]]:
        return {(a, b) for a in range(self.a_max + 1) for b in range(self.b_max + 1)}

    def x_coordinates(self) -> list[int]:
        """Distinct x-coordinates, ascending."""
        return sorted(set(self.xs.tolist()))


def make_curve(field: Field, u: int) -> Curve:
    return Curve(field, u)


class BivariatePoly:
    """Sparse polynomial in x, y over a field: ``{(a, b): coefficient}``.

    Zero coefficients are never stored.
    """

    def __init__(self, field: Field, terms: dict[tuple[int, int], int] | None = None):
        self.field = field
        self.terms: dict[tuple[int, int], int] = {}
        for mono, c in (terms or {}).items():
            self._accumulate(mono, c)

    @classmethod
    def monomial(cls, field: Field, a: int, b: int, coeff: int = 1) -> "BivariatePoly":
        return cls(field, {(a, b): coeff})

    @classmethod
    def from_univariate(cls, field: Field, coeffs: Iterable[int], var: str) -> "BivariatePoly":
        if var == "x":
            return cls(field, {(i, 0): c for i, c in enumerate(coeffs)})
        return cls(field, {(0, j): c for j, c in enumerate(coeffs)})

    def _accumulate(self, mono, c):
        c = self.field.add(self.terms.get(mono, 0), int(c))
        if c:
            self.terms[mono] = c
        else:
            self.terms.pop(mono, None)

    def copy(self) -> "BivariatePoly":
        return BivariatePoly(self.field, self.terms)

    def __eq__(self, other):
        return isinstance(other, BivariatePoly) and self.terms == other.terms

    def __bool__(self):
        return bool(self.terms)

    def __repr__(self):
        body = " + ".join(f"{c}*x^{a}*y^{b}" for (a, b), c in sorted(self.terms.items(), key=lambda t: (t[0][1], t[0][0]), reverse=True))
        return f"BivariatePoly({body or '0'})"

    def __add__(self, other: "BivariatePoly") -> "BivariatePoly":
        out = self.copy()
        for mono, c in other.terms.items():
            out._accumulate(mono, c)
        return out

    def __neg__(self) -> "BivariatePoly":
        return BivariatePoly(self.field, {m: self.field.neg(c) for m, c in self.terms.items()})

    def __sub__(self, other: "BivariatePoly") -> "BivariatePoly":
        return self + (-other)

    def __mul__(self, other) -> "BivariatePoly":
        F = self.field
        if not isinstance(other, BivariatePoly):
            return BivariatePoly(F, {m: F.mul(c, int(other)) for m, c in self.terms.items()})
        out = BivariatePoly(F)
        for (a1, b1), c1 in self.terms.items():
            for (a2, b2), c2 in other.terms.items():
                out._accumulate((a1 + a2, b1 + b2), F.mul(c1, c2))
        return out

    __rmul__ = __mul__

    def leading(self) -> tuple[int, int]:
        """Leading exponent pair under lex order with x < y."""
        if not self.terms:
            raise ValueError("the zero polynomial has no leading monomial")
        b, a = max((b, a) for a, b in self.terms)
        return a, b

    def __call__(self, alpha: int, beta: int) -> int:
        F = self.field
        return F.sum(F.mul(c, F.mul(F.pow(alpha, a), F.pow(beta, b))) for (a, b), c in self.terms.items())


def poly_eval(f: BivariatePoly, P: CurvePoint) -> int:
    return f(P.alpha, P.beta)


def eval_vector(curve: Curve, f: BivariatePoly) -> np.ndarray:
    F = curve.field
    acc = np.zeros(curve.n, dtype=np.int64)
    for (a, b), c in f.terms.items():
        acc = F.vadd(acc, F.vmul(c, F.vmul(F.vpow(curve.xs, a), F.vpow(curve.ys, b))))
    return acc


def monomial_vector(curve: Curve, a: int, b: int) -> np.ndarray:
    F = curve.field
    return F.vmul(F.vpow(curve.xs, a), F.vpow(curve.ys, b))


def normal_form(curve: Curve, f: BivariatePoly) -> BivariatePoly:
    """Remainder of ``f`` modulo ``{Tr(y) - x^u, x^{(q-1)u+1} - x}``.

    Lex order with x < y.  The two leading monomials are coprime, so the
    remainder is obtained by rewriting ``y^{q^{r-1}}`` as
    ``x^u - (y^{q^{r-2}} + ... + y)`` from the top y-degree down and then
    folding x-exponents with ``x^{(q-1)u+1} = x``.
    """
    F = curve.field
    B = curve.b_max + 1
    lower = [curve.q**i for i in range(curve.r - 1)]
    work: dict[int, dict[int, int]] = {}
    for (a, b), c in f.terms.items():
        row = work.setdefault(b, {})
        a = _fold_x(a, curve.a_max)
        row[a] = F.add(row.get(a, 0), c)

    while work and max(work) >= B:
        b = max(work)
        row = work.pop(b)
        rest = b - B
        for a, c in row.items():
            if not c:
                continue
            target = work.setdefault(rest, {})
            a2 = _fold_x(a + curve.u, curve.a_max)
            target[a2] = F.add(target.get(a2, 0), c)
            nc = F.neg(c)
            for e in lower:
                target = work.setdefault(rest + e, {})
                target[a] = F.add(target.get(a, 0), nc)

    out = BivariatePoly(F)
    for b, row in work.items():
        for a, c in row.items():
            if c:
                out._accumulate((a, b), c)
    return out


def _fold_x(a: int, a_max: int) -> int:
    # x^{a_max+1} = x, so exponents above a_max drop by multiples of a_max
    if a <= a_max:
        return a
    return (a - 1) % a_max + 1


def _divide_linear(field: Field, coeffs: list[int], root: int) -> list[int]:
    """Exact quotient of a univariate polynomial by ``(z - root)``."""
    deg = len(coeffs) - 1
    quot = [0] * deg
    carry = 0
    for k in range(deg, 0, -1):
        carry = field.add(coeffs[k], field.mul(root, carry)) if k < deg else coeffs[k]
        quot[k - 1] = carry
    remainder = field.add(coeffs[0], field.mul(root, carry))
    if remainder:
        raise ArithmeticError("division by (z - root) is not exact")
    return quot


def indicator(curve: Curve, P: CurvePoint) -> BivariatePoly:
    """Standard indicator function of ``P``: 1 at ``P``, 0 at every other point,
    supported on the footprint."""
    F = curve.field
    alpha, beta = P.alpha, P.beta
    if curve._index.get((alpha, beta)) is None:
        raise ValueError(f"{P} is not on the curve")
    x_coeffs = [0] * (curve.a_max + 2)
    x_coeffs[-1] = 1
    x_coeffs[1] = F.neg(1)
    y_coeffs = [0] * (curve.b_max + 2)
    for i in range(curve.r):
        y_coeffs[curve.q**i] = 1
    y_coeffs[0] = F.neg(F.trace(beta))
    xq = _divide_linear(F, x_coeffs, alpha)
    yq = _divide_linear(F, y_coeffs, beta)
    c = F.neg(1) if alpha == 0 else F.inv(F.neg(F.embed(curve.u)))
    terms = {}
    for a, ca in enumerate(xq):
        if ca:
            for b, cb in enumerate(yq):
                if cb:
                    terms[(a, b)] = F.mul(c, F.mul(ca, cb))
    return BivariatePoly(F, terms)
