"""Trace repair of one erased symbol, with subsymbol accounting.

A symbol is an element of F_{q^r}; a subsymbol is an element of F_q.  To
rebuild the symbol at ``P* = (alpha*, beta*)`` the repairer downloads

* ``r`` subsymbols ``Tr(b_P z_i f(P))`` from every other point sharing
  the y-coordinate ``beta*`` (tag ``full-traces``), and
* one subsymbol ``Tr(b_P f(P) / (beta - beta*))`` from every other point
  (tag ``single-trace``),

where ``b`` is the dual-code column scaling and ``z_1..z_r`` an F_q-basis
of F_{q^r}.  The ``r`` traces of ``b_{P*} f(P*)`` follow from the parity
checks ``Tr(z_i (y - beta*)) / (y - beta*)`` of the dual code, and the dual
basis turns them back into the symbol.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass, field as dc_field
from fractions import Fraction

import numpy as np

from normtrace import ffla
from normtrace.code import EvaluationCode, dual_code
from normtrace.curve import Curve, CurvePoint
from normtrace.gf import dual_basis

FULL = "full-traces"
SINGLE = "single-trace"


class IneligibleCodeError(ValueError):
    pass


class NotACodewordError(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class RepairContext:
    code: EvaluationCode
    basis: tuple[int, ...]
    dual: tuple[int, ...]
    beta: np.ndarray
    parity: np.ndarray  # beta-scaled generator of the dual code

    @property
    def curve(self) -> Curve:
        return self.code.curve


def power_basis(field) -> list[int]:
    return [field.pow(field.generator, i) for i in range(field.r)]


def make_repair_context(code: EvaluationCode, basis=None) -> RepairContext:
    """Check eligibility (every ``x^a y^b`` in M has ``a < (q-1)u``) and set up bases.

    The default basis is ``1, g, ..., g^{r-1}`` for the field generator ``g``.
    """
    curve, F = code.curve, code.field
    for a, b in code.monomials:
        if a >= curve.a_max:
            raise IneligibleCodeError(f"x^{a} y^{b} has a >= (q-1)u = {curve.a_max}; repair needs a <= {curve.a_max - 1}")
    if basis is None:
        basis = power_basis(F)
    basis = tuple(int(z) for z in basis)
    dual = tuple(dual_basis(F, basis))
    sv, other = dual_code(code)
    parity = ffla.scale_cols(F, other.G, sv.beta)
    return RepairContext(code, basis, dual, sv.beta, parity)


@dataclass(frozen=True)
class HelperDownload:
    index: int
    tag: str
    values: tuple[int, ...]


@dataclass
class RepairTranscript:
    star: int
    erased: CurvePoint
    gamma_set: list[int]
    outside_set: list[int]
    downloads: list[HelperDownload] = dc_field(default_factory=list)
    recovered: int = 0
    bandwidth: int = 0

    def to_dict(self) -> dict:
        d = asdict(self)
        d["erased"] = {"alpha": self.erased.alpha, "beta": self.erased.beta, "index": self.erased.index}
        d["downloads"] = [{"index": h.index, "tag": h.tag, "values": list(h.values)} for h in self.downloads]
        return d


def helper_download(ctx: RepairContext, index: int, symbol: int, star_beta: int) -> HelperDownload:
    """What helper ``index`` sends; depends only on its own symbol and public data."""
    F = ctx.code.field
    P = ctx.curve.points[index]
    w = F.mul(int(ctx.beta[index]), int(symbol))
    if P.beta == star_beta:
        return HelperDownload(index, FULL, tuple(F.trace(F.mul(z, w)) for z in ctx.basis))
    return HelperDownload(index, SINGLE, (F.trace(F.div(w, F.sub(P.beta, star_beta))),))


def repair(ctx: RepairContext, word, star: int) -> RepairTranscript:
    """Recover ``word[star]`` from subsymbols of the other positions.

    The entry at ``star`` is ignored (it may be None).  Raises
    :class:`NotACodewordError` if the completed word fails the parity checks.
    """
    curve, F = ctx.curve, ctx.code.field
    if not 0 <= star < curve.n:
        raise ValueError(f"erased position {star} out of range 0..{curve.n - 1}")
    if len(word) != curve.n:
        raise ValueError(f"word has length {len(word)}, expected {curve.n}")
    symbols = [0 if i == star else int(w) for i, w in enumerate(word)]
    erased = curve.points[star]
    b_star = erased.beta
    gamma_set = [P.index for P in curve.points if P.beta == b_star and P.index != star]
    outside = [P.index for P in curve.points if P.beta != b_star]
    t = RepairTranscript(star, erased, gamma_set, outside)
    t.downloads = [helper_download(ctx, i, symbols[i], b_star) for i in range(curve.n) if i != star]

    traces = []
    for zi, z in enumerate(ctx.basis):
        acc = 0
        for h in t.downloads:
            if h.tag == FULL:
                acc = F.add(acc, h.values[zi])
            else:
                # repairer-side coefficient, no download needed
                coeff = F.trace(F.mul(z, F.sub(curve.points[h.index].beta, b_star)))
                acc = F.add(acc, F.mul(coeff, h.values[0]))
        traces.append(F.neg(acc))
    scaled = F.sum(F.mul(tr, zd) for tr, zd in zip(traces, ctx.dual))
    t.recovered = F.div(scaled, int(ctx.beta[star]))
    t.bandwidth = sum(len(h.values) for h in t.downloads)

    symbols[star] = t.recovered
    if ctx.parity.shape[0]:
        syndrome = ffla.mat_mul(F, ctx.parity, np.array(symbols, dtype=np.int64)[:, None])
        if syndrome.any():
            raise NotACodewordError("word is not a codeword of the code")
    return t


def bandwidth_bound(curve: Curve) -> int:
    return curve.n - 1 + (curve.u - 1) * (curve.r - 1)


def naive_bandwidth(curve: Curve) -> int:
    """Subsymbols needed to download every other symbol in full."""
    return (curve.n - 1) * curve.r


def expected_bandwidth(curve: Curve, star: int) -> int:
    b_star = curve.points[star].beta
    gamma = sum(1 for P in curve.points if P.beta == b_star)
    return curve.r * (gamma - 1) + (curve.n - gamma)


@dataclass(frozen=True)
class RepairDimensions:
    k_ev: int
    genus: int
    k_ag: int
    rate_bound: Fraction


def dimension_calcs(curve: Curve) -> RepairDimensions:
    """Largest repairable dimension here vs. the one-point AG scheme, and the rate bound."""
    q, r, u, n = curve.q, curve.r, curve.u, curve.n
    k_ev = (q - 1) * u * q ** (r - 1)
    genus2 = (u - 1) * (q ** (r - 1) - 1)
    if genus2 % 2:
        raise AssertionError("genus is not an integer")
    genus = genus2 // 2
    k_ag = n - q * (genus - 1) + 1
    return RepairDimensions(k_ev, genus, k_ag, 1 - Fraction(1, (q - 1) * u + 1))
