"""Line-oriented code description files.

::

    # one-point code over F_9, plus x^7 y
    q=3 r=2 u=4
    family onepoint:23
    7 1

The first non-comment line is the header ``q=<prime power> r=<int> u=<int>``;
``q`` is the subfield size and the code alphabet is F_{q^r}.  It may be followed by at most one ``family`` line (``degree:T``, ``box:AxB``,
``onepoint:S`` or ``full``) and any number of ``a b`` exponent lines.  The
monomial set is the union of the family and the listed pairs.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from normtrace.curve import Curve, make_curve
from normtrace.gf import FieldParams, make_field
from normtrace.monset import (
    MonomialSet,
    family_box,
    family_degree,
    family_full,
    family_onepoint,
    validate_decreasing,
)


class SpecError(ValueError):
    pass


_FAMILY_RE = re.compile(r"^(degree:\d+|box:\d+x\d+|onepoint:\d+|full)$")


@dataclass(frozen=True)
class CodeSpec:
    q: int
    r: int
    u: int
    family: str | None = None
    pairs: tuple[tuple[int, int], ...] = ()

    def field_params(self) -> FieldParams:
        try:
            return FieldParams.from_q(self.q, self.r)
        except ValueError as exc:
            raise SpecError(f"bad header: {exc}") from None

    def curve(self) -> Curve:
        try:
            return make_curve(make_field(self.field_params()), self.u)
        except ValueError as exc:
            raise SpecError(f"bad header: {exc}") from None

    def monomials(self, curve: Curve | None = None) -> MonomialSet:
        """The described set; raises SpecError unless it is a nonempty lower set in the footprint."""
        curve = curve or self.curve()
        try:
            M = MonomialSet.on(curve, self.pairs)
        except ValueError as exc:
            raise SpecError(str(exc)) from None
        if self.family:
            M = M | family_from_descriptor(curve, self.family)
        if not len(M):
            raise SpecError("the spec describes an empty monomial set")
        if not validate_decreasing(M):
            raise SpecError("monomial set is not closed under divisibility")
        return M


def family_from_descriptor(curve: Curve, desc: str) -> MonomialSet:
    kind, _, arg = desc.partition(":")
    if kind == "degree":
        return family_degree(curve, int(arg))
    if kind == "box":
        A, B = arg.split("x")
        return family_box(curve, int(A), int(B))
    if kind == "onepoint":
        return family_onepoint(curve, int(arg))
    if kind == "full":
        return family_full(curve)
    raise SpecError(f"unknown family {desc!r}")


def parse_spec(text: str) -> CodeSpec:
    lines = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            lines.append(line)
    if not lines:
        raise SpecError("empty spec: expected a 'q=.. r=.. u=..' header")
    header = {}
    for tok in lines[0].split():
        key, sep, val = tok.partition("=")
        if not sep or key not in ("q", "r", "u") or key in header:
            raise SpecError(f"bad header token {tok!r}")
        try:
            header[key] = int(val)
        except ValueError:
            raise SpecError(f"bad header value {tok!r}") from None
    if set(header) != {"q", "r", "u"}:
        raise SpecError("header must define q, r and u")
    family = None
    pairs = set()
    for line in lines[1:]:
        parts = line.split()
        if parts[0] == "family":
            if family is not None or len(parts) != 2 or not _FAMILY_RE.match(parts[1]):
                raise SpecError(f"bad family line {line!r}")
            family = parts[1]
        elif len(parts) == 2 and all(p.isdigit() for p in parts):
            pairs.add((int(parts[0]), int(parts[1])))
        else:
            raise SpecError(f"cannot parse line {line!r}")
    return CodeSpec(header["q"], header["r"], header["u"], family, tuple(sorted(pairs, key=lambda ab: (ab[1], ab[0]))))


def format_spec(spec: CodeSpec) -> str:
    out = [f"q={spec.q} r={spec.r} u={spec.u}"]
    if spec.family:
        out.append(f"family {spec.family}")
    out.extend(f"{a} {b}" for a, b in sorted(spec.pairs, key=lambda ab: (ab[1], ab[0])))
    return "\n".join(out) + "\n"


def load_spec(path) -> CodeSpec:
    with open(path) as fh:
        return parse_spec(fh.read())


def spec_for_set(q: int, r: int, u: int, M: MonomialSet) -> CodeSpec:
    return CodeSpec(q, r, u, None, tuple(M))
