"""Decreasing norm-trace codes ``ev(M)`` as generator matrices.

Parameters come from closed forms (``distance_formula``) and are checked
against brute force (``distance_bruteforce``) and explicit minimum-weight
codewords (``witness_min_weight``).  Duals and hulls are built from the
complement set and confirmed with kernel computations in :mod:`ffla`.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from normtrace import ffla
from normtrace.curve import BivariatePoly, Curve, eval_vector, monomial_vector
from normtrace.gf import Field
from normtrace.monset import MonomialSet, complement, validate_decreasing

DEFAULT_BUDGET = 10**8


class VerificationError(RuntimeError):
    """An internal consistency check between a closed form and linear algebra failed."""


class BudgetExceeded(RuntimeError):
    pass


class NoSquareRootError(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class EvaluationCode:
    curve: Curve
    monomials: MonomialSet
    G: np.ndarray

    @property
    def field(self) -> Field:
        return self.curve.field

    @property
    def n(self) -> int:
        return self.curve.n

    @property
    def k(self) -> int:
        return len(self.monomials)

    def encode(self, message) -> np.ndarray:
        message = np.asarray(message, dtype=np.int64).reshape(1, -1)
        if message.shape[1] != self.k:
            raise ValueError(f"message length {message.shape[1]} != k = {self.k}")
        return ffla.mat_mul(self.field, message, self.G)[0]

    def __repr__(self):
        return f"EvaluationCode(n={self.n}, k={self.k}, curve={self.curve!r})"


def build_code(curve: Curve, M: MonomialSet) -> EvaluationCode:
    """Generator matrix of ``ev(M)``; row ``i`` evaluates the ``i``-th monomial in ``(b, a)`` order."""
    if (M.bound_a, M.bound_b) != (curve.a_max, curve.b_max):
        raise ValueError("monomial set does not match the curve's footprint")
    if not validate_decreasing(M):
        raise ValueError("monomial set is not closed under divisibility")
    rows = [monomial_vector(curve, a, b) for a, b in M]
    G = np.array(rows, dtype=np.int64).reshape(len(rows), curve.n)
    if ffla.rank(curve.field, G) != len(M):
        raise VerificationError(f"generator matrix has rank below |M| = {len(M)}")
    return EvaluationCode(curve, M, G)


def zero_count_bound(curve: Curve, a: int, b: int) -> int:
    """Largest number of curve zeros of a polynomial with leading monomial ``x^a y^b``."""
    Q1 = curve.q ** (curve.r - 1)
    return min(a * Q1 + (curve.a_max + 1 - a) * b, a * Q1 + b * curve.u)


def distance_formula(curve: Curve, M: MonomialSet) -> int:
    """Minimum distance of ``ev(M)``.

    Both arguments of the ``min`` in :func:`zero_count_bound` are
    nondecreasing in ``a`` and ``b`` on the footprint, so only maximal
    elements need to be examined.
    """
    if not len(M):
        raise ValueError("the minimum distance of the zero code is undefined")
    return curve.n - max(zero_count_bound(curve, a, b) for a, b in M.maximal())


def singleton_gap(curve: Curve, M: MonomialSet) -> int:
    return curve.n + 1 - len(M) - distance_formula(curve, M)


def _span(field: Field, rows: np.ndarray) -> np.ndarray:
    """All ``Q^len(rows)`` linear combinations of ``rows``."""
    n = rows.shape[1]
    scalars = field.elements()[:, None]
    S = np.zeros((1, n), dtype=np.int64)
    for row in rows:
        multiples = field.vmul(scalars, row[None, :])
        S = field.vadd(S[None, :, :], multiples[:, None, :]).reshape(-1, n)
    return S


def _span_blocks(field: Field, rows: np.ndarray, max_block: int = 1 << 16):
    Q = field.order
    inner = 0
    while inner < len(rows) and Q ** (inner + 1) <= max_block:
        inner += 1
    split = len(rows) - inner
    inner_span = _span(field, rows[split:])
    outer = rows[:split]
    for coeffs in itertools.product(range(Q), repeat=split):
        offset = np.zeros(rows.shape[1], dtype=np.int64)
        for c, row in zip(coeffs, outer):
            if c:
                offset = field.vadd(offset, field.vmul(c, row))
        yield field.vadd(inner_span, offset[None, :])


def distance_bruteforce(code: EvaluationCode, budget: int = DEFAULT_BUDGET) -> int:
    """Exact minimum weight by enumerating every message.

    Only messages whose first nonzero entry is 1 are evaluated (scalar
    multiples share a weight), but the budget is charged for all ``Q^k``.
    Raises :class:`BudgetExceeded` instead of approximating.
    """
    F, k = code.field, code.k
    if k == 0:
        raise ValueError("the minimum distance of the zero code is undefined")
    if F.order**k > budget:
        raise BudgetExceeded(f"{F.order}^{k} codewords exceed the budget of {budget}")
    best = code.n
    for j in range(k):
        lead = code.G[j][None, :]
        for block in _span_blocks(F, code.G[j + 1 :]):
            words = F.vadd(block, lead)
            best = min(best, int(np.count_nonzero(words, axis=1).min()))
    return best


def _argmax_monomial(curve: Curve, M: MonomialSet) -> tuple[int, int]:
    best, arg = -1, None
    for a, b in M:  # (b, a) order gives the tie-break
        z = zero_count_bound(curve, a, b)
        if z > best:
            best, arg = z, (a, b)
    return arg


def witness_min_weight(curve: Curve, M: MonomialSet) -> BivariatePoly:
    """A polynomial in the span of ``M`` whose evaluation has weight ``distance_formula(M)``.

    Built as a product of linear factors ``(x - alpha_i)`` and
    ``(y - beta_j)`` chosen so that the zero count meets the bound of the
    maximizing monomial ``x^a y^b``.
    """
    if not len(M):
        raise ValueError("empty monomial set")
    F = curve.field
    a, b = _argmax_monomial(curve, M)
    gamma = next(g for g in F.subfield if g != 0)
    xs = curve.x_coordinates()
    in_class = [al for al in xs if F.pow(al, curve.u) == gamma]
    off_class = [al for al in xs if F.pow(al, curve.u) != gamma]
    betas = [be for be in range(F.order) if F.trace(be) == gamma]

    if b == 0:
        alphas = xs[:a]
    elif a <= (curve.q - 2) * curve.u + 1:
        alphas = off_class[:a]
    else:
        alphas = off_class + in_class[: a - len(off_class)]
    f = BivariatePoly.monomial(F, 0, 0)
    for al in alphas:
        f = f * BivariatePoly(F, {(1, 0): 1, (0, 0): F.neg(al)})
    for be in betas[:b]:
        f = f * BivariatePoly(F, {(0, 1): 1, (0, 0): F.neg(be)})
    return f


def codeword_weight(curve: Curve, f: BivariatePoly) -> int:
    return int(np.count_nonzero(eval_vector(curve, f)))


@dataclass(frozen=True, eq=False)
class ScalingVectors:
    """Column scalings: ``beta`` for the dual and ``lam`` (a square root of ``beta``) for the hull."""

    beta: np.ndarray
    lam: np.ndarray | None
    sqrt_u: int | None


def sqrt_in_field(field: Field, u: int) -> int | None:
    """Smallest element ``s`` (as an int) with ``s^2`` equal to the image of ``u``, or None."""
    target = field.embed(u)
    els = field.elements()
    roots = np.nonzero(field.vmul(els, els) == target)[0]
    return int(roots[0]) if roots.size else None


def scaling_vectors(curve: Curve) -> ScalingVectors:
    F = curve.field
    nonzero_x = curve.xs != 0
    beta = np.where(nonzero_x, F.inv(F.embed(curve.u)), 1).astype(np.int64)
    root = sqrt_in_field(F, curve.u)
    lam = None
    if root is not None:
        lam = np.where(nonzero_x, F.inv(root), 1).astype(np.int64)
    return ScalingVectors(beta, lam, root)


def dual_code(code: EvaluationCode) -> tuple[ScalingVectors, EvaluationCode]:
    """``ev(M)^perp = beta * ev(M^c)``; returns ``(scalings, ev(M^c))``.

    Checks ``G_M diag(beta) G_{M^c}^T = 0`` and ``k + k^c = n``.
    """
    curve, F = code.curve, code.field
    sv = scaling_vectors(curve)
    other = build_code(curve, complement(code.monomials, curve))
    if code.k + other.k != code.n:
        raise VerificationError("dimensions of the code and its dual do not sum to n")
    if code.k and other.k:
        prod = ffla.mat_mul(F, code.G, ffla.scale_cols(F, other.G, sv.beta).T)
        if prod.any():
            raise VerificationError("complement code is not orthogonal after beta scaling")
    return sv, other


def hull(code: EvaluationCode) -> tuple[ScalingVectors, EvaluationCode]:
    """``Hull(lam * ev(M)) = lam * ev(M ∩ M^c)``; returns ``(scalings, ev(M ∩ M^c))``.

    Confirmed against the row-space intersection of ``lam * C`` with its
    kernel.
    """
    curve, F = code.curve, code.field
    sv = scaling_vectors(curve)
    if sv.lam is None:
        raise NoSquareRootError(f"x^2 = {curve.u} has no solution in F_{F.order}")
    inner = build_code(curve, code.monomials & complement(code.monomials, curve))
    scaled = ffla.scale_cols(F, code.G, sv.lam)
    computed = ffla.row_space_intersection(F, scaled, ffla.kernel_basis(F, scaled))
    if not ffla.row_space_equal(F, computed, ffla.scale_cols(F, inner.G, sv.lam)):
        raise VerificationError("hull differs from lam * ev(M ∩ M^c)")
    return sv, inner


@dataclass(frozen=True)
class DualityReport:
    kind: str  # "self-dual" | "self-orthogonal" | "LCD-after-scaling" | "none"
    hull_dim: int
    confirmed: bool | None  # None when u has no square root, so lam is unavailable


def classify_duality(code: EvaluationCode) -> DualityReport:
    M = code.monomials
    Mc = complement(M, code.curve)
    meet = M & Mc
    if M == Mc:
        kind = "self-dual"
    elif M <= Mc:
        kind = "self-orthogonal"
    elif not len(meet):
        kind = "LCD-after-scaling"
    else:
        kind = "none"
    sv = scaling_vectors(code.curve)
    confirmed = None
    if sv.lam is not None:
        F = code.field
        scaled = ffla.scale_cols(F, code.G, sv.lam)
        gram = ffla.mat_mul(F, scaled, scaled.T)
        hull_dim = code.k - ffla.rank(F, gram)
        confirmed = hull_dim == len(meet)
        if kind == "self-dual":
            confirmed = confirmed and not gram.any() and 2 * code.k == code.n
        elif kind == "self-orthogonal":
            confirmed = confirmed and not gram.any()
    return DualityReport(kind, len(meet), confirmed)
