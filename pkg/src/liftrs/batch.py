"""Serving k-batch requests from a lifted RS code with disjoint recovering sets.

For d = q - r every line restriction has degree < q - r, so any q - r points
of a line through a target determine the target's value.  Targets are
planned greedily in request order.  Each one takes the first line through it
(canonical directions in lexicographic order) that meets the blocked points
in fewer than r places.  The blocked points are every point of previously
chosen lines plus every target of the request, with the current target
itself not counted.  Because the lines through a point partition the rest of
the space, averaging shows such a line exists whenever k <= r * q^(m-2).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .finite_field import interpolate
from .lifted_code import Codeword, LiftedCodeSpec, Line, Point, lines_through


class CapacityError(ValueError):
    pass


class PlanningError(RuntimeError):
    """No admissible line was found; cannot happen within capacity."""


def capacity(m: int, q: int, r: int) -> int:
    """Batch size served by the [m, q-r, q]-lifted RS code."""
    if m < 2:
        raise ValueError("batch planning needs m >= 2")
    if not 1 <= r < q:
        raise ValueError(f"need 1 <= r < q, got r={r}, q={q}")
    return r * q ** (m - 2)


@dataclass(frozen=True)
class BatchRequest:
    targets: tuple[Point, ...]

    @property
    def k(self) -> int:
        return len(self.targets)


@dataclass(frozen=True)
class RecoveringSet:
    target: Point
    line: Line
    target_param: int
    read_params: tuple[int, ...]
    read_points: tuple[Point, ...]
    overlap: int


@dataclass(frozen=True)
class BatchPlan:
    sets: tuple[RecoveringSet, ...]
    max_overlap: int

    def __len__(self):
        return len(self.sets)

    def __iter__(self):
        return iter(self.sets)


def plan_batch(code: LiftedCodeSpec, r: int, req) -> BatchPlan:
    """Greedy disjoint recovering sets for every target of ``req``."""
    targets = tuple(tuple(int(c) for c in t) for t in (req.targets if isinstance(req, BatchRequest) else req))
    q, m, f = code.q, code.m, code.field
    if code.d != q - r:
        raise ValueError(f"code has d={code.d}, planning needs d = q - r = {q - r}")
    cap = capacity(m, q, r)
    if len(targets) > cap:
        raise CapacityError(f"batch of {len(targets)} exceeds capacity r*q^(m-2) = {cap}")
    for t in targets:
        if len(t) != m or any(not 0 <= c < q for c in t):
            raise ValueError(f"{t} is not a point of GF({q})^{m}")

    blocked = set(targets)
    need = q - r
    sets = []
    worst = 0
    for target in targets:
        for line, t0 in lines_through(f, target):
            pts = line.points(f)
            others = [(t, p) for t, p in enumerate(pts) if t != t0]
            overlap = sum(1 for _, p in others if p in blocked)
            if overlap >= r:
                continue
            free = sorted((p, t) for t, p in others if p not in blocked)[:need]
            sets.append(
                RecoveringSet(
                    target=target,
                    line=line,
                    target_param=t0,
                    read_params=tuple(t for _, t in free),
                    read_points=tuple(p for p, _ in free),
                    overlap=overlap,
                )
            )
            worst = max(worst, overlap)
            blocked.update(pts)
            break
        else:
            raise PlanningError(f"no line through {target} avoids the used points")
    return BatchPlan(tuple(sets), worst)


def check_plan(code: LiftedCodeSpec, plan: BatchPlan) -> None:
    """Raise ValueError unless ``plan`` is internally consistent for ``code``."""
    f = code.field
    need = code.d
    seen: set[Point] = set()
    targets = {s.target for s in plan}
    for s in plan:
        if s.line.m != code.m or s.line.point_at(f, s.target_param) != s.target:
            raise ValueError(f"target {s.target} is not at parameter {s.target_param} of its line")
        if len(s.read_points) != need or len(set(s.read_params)) != need:
            raise ValueError(f"recovering set for {s.target} does not read {need} distinct points")
        if s.target_param in s.read_params:
            raise ValueError("a recovering set reads its own target")
        for t, p in zip(s.read_params, s.read_points):
            if s.line.point_at(f, t) != p:
                raise ValueError(f"read point {p} is not at parameter {t}")
        if seen.intersection(s.read_points):
            raise ValueError("recovering sets overlap")
        if targets.intersection(s.read_points):
            raise ValueError("a recovering set reads a requested target")
        seen.update(s.read_points)


def recover(code: LiftedCodeSpec, w: Codeword, s: RecoveringSet) -> int:
    """Interpolate the read values on the line and evaluate at the target."""
    poly = interpolate(code.field, [(t, w[p]) for t, p in zip(s.read_params, s.read_points)])
    return poly(s.target_param)


def execute_batch(code: LiftedCodeSpec, w: Codeword, plan: BatchPlan) -> list[int]:
    if w.field != code.field or w.m != code.m:
        raise ValueError("codeword does not belong to this code")
    check_plan(code, plan)
    return [recover(code, w, s) for s in plan]


# -- binary image --------------------------------------------------------------


@dataclass(frozen=True)
class BinaryExpansion:
    N_prime: int
    n_prime: int
    redundancy: int
    bits_per_symbol: int


def binary_expand(code: LiftedCodeSpec) -> BinaryExpansion:
    """Length/dimension accounting after writing each symbol as ell bits."""
    ell = code.ell
    return BinaryExpansion(
        N_prime=ell * code.length,
        n_prime=ell * code.dimension,
        redundancy=ell * (code.length - code.dimension),
        bits_per_symbol=ell,
    )


def symbols_to_bits(values: Sequence[int], ell: int) -> list[int]:
    """Symbol-major, least significant bit first."""
    return [(v >> b) & 1 for v in values for b in range(ell)]


def recover_bit(code: LiftedCodeSpec, w: Codeword, s: RecoveringSet, bit: int) -> int:
    """Bit ``bit`` of the target symbol, via the symbol's recovering set.

    The bit-level recovering set is the bits of the symbols in ``s``.
    """
    if not 0 <= bit < code.ell:
        raise ValueError(f"bit must be in [0, {code.ell})")
    return (recover(code, w, s) >> bit) & 1


# -- text format -----------------------------------------------------------------


def _csv(xs) -> str:
    return ",".join(str(int(x)) for x in xs)


def dump_plan(plan: BatchPlan) -> str:
    rows = [
        f"target={_csv(s.target)} dir={_csv(s.line.direction)} offset={_csv(s.line.offset)} reads={_csv(s.read_params)}"
        for s in plan
    ]
    return "\n".join(rows) + ("\n" if rows else "")


def load_plan(text: str, code: LiftedCodeSpec) -> BatchPlan:
    """Parse :func:`dump_plan` output; overlaps are recomputed as the planner does."""
    f = code.field

    def parse(s):
        return tuple(int(x) for x in s.split(",")) if s else ()

    parsed = []
    for row in text.splitlines():
        if not row.strip():
            continue
        fields = dict(tok.split("=", 1) for tok in row.split())
        if set(fields) != {"target", "dir", "offset", "reads"}:
            raise ValueError(f"malformed plan line: {row!r}")
        parsed.append((parse(fields["target"]), Line(parse(fields["dir"]), parse(fields["offset"])), parse(fields["reads"])))

    blocked = {target for target, _, _ in parsed}
    sets = []
    for target, line, reads in parsed:
        pts = line.points(f)
        t0 = line.param_of(f, target)
        overlap = sum(1 for t, p in enumerate(pts) if t != t0 and p in blocked)
        sets.append(RecoveringSet(target, line, t0, reads, tuple(line.point_at(f, t) for t in reads), overlap))
        blocked.update(pts)
    return BatchPlan(tuple(sets), max((s.overlap for s in sets), default=0))
