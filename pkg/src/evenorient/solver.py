"""Deciding even/odd F-orientations through a GF(2) parity system.

Fix the reference orientation (every edge from its lower to its higher
vertex id).  Flipping the edge set ``x`` changes the parity of an
F-alternating cycle ``C`` by ``|C & x| mod 2``, so with ``A`` the
cycle-by-edge incidence matrix and ``b0`` the reference parities, the
flipped orientation makes every cycle even iff ``A x = b0`` and every cycle
odd iff ``A x = b0 + 1``.  When such a system is inconsistent, a vector
``y`` with ``y A = 0`` and ``y . b = 1`` names a set of cycles covering every
edge an even number of times whose count of wrongly oriented members is odd
under every orientation, which is a checkable obstruction.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Literal

from evenorient import gf2
from evenorient.alternating import (
    DEFAULT_CYCLE_CAP,
    AltCycle,
    classify_cycles,
    cycle_parity,
    enumerate_alternating_cycles,
)
from evenorient.graph import BipartiteError, Graph, Orientation, is_bipartite_after_removing
from evenorient.matching import (
    NoFactorError,
    OneFactor,
    check_one_factor,
    enumerate_perfect_matchings,
)

Target = Literal["even", "odd"]


@dataclass(frozen=True)
class ParitySystem:
    graph: Graph
    factor: OneFactor
    cycles: tuple[AltCycle, ...]
    rows: tuple[int, ...]
    rhs_reference: tuple[int, ...]

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.rows), self.graph.m

    def rhs(self, target: Target) -> list[int]:
        if target == "even":
            return list(self.rhs_reference)
        if target == "odd":
            return [b ^ 1 for b in self.rhs_reference]
        raise ValueError(f"target must be 'even' or 'odd', not {target!r}")

    def matrix(self) -> list[list[int]]:
        return [[(r >> j) & 1 for j in range(self.graph.m)] for r in self.rows]


def build_parity_system(
    g: Graph, f: Iterable[int], cap: int = DEFAULT_CYCLE_CAP
) -> ParitySystem:
    f = check_one_factor(g, f)
    cycles = tuple(enumerate_alternating_cycles(g, f, cap=cap))
    ref = Orientation.reference(g)
    return ParitySystem(
        graph=g,
        factor=f,
        cycles=cycles,
        rows=tuple(c.mask for c in cycles),
        rhs_reference=tuple(cycle_parity(ref, c) for c in cycles),
    )


@dataclass(frozen=True)
class ZeroSumCertificate:
    """A set of F-alternating cycles covering each of their edges an even number of times."""

    cycle_indices: tuple[int, ...]
    cycles: tuple[AltCycle, ...]
    parity_class: Literal["odd", "even"]
    oddly_oriented_count_mod2: int

    @property
    def vector(self) -> int:
        y = 0
        for i in self.cycle_indices:
            y |= 1 << i
        return y

    def is_zero_sum(self) -> bool:
        acc = 0
        for c in self.cycles:
            acc ^= c.mask
        return acc == 0 and len(set(c.vertices for c in self.cycles)) == len(self.cycles)

    def evenly_oriented_parity(self, orient: Orientation) -> int:
        """Parity of the number of members that are evenly oriented under ``orient``."""
        return sum(1 - cycle_parity(orient, c) for c in self.cycles) % 2

    def to_json_obj(self, g: Graph) -> dict:
        return {
            "cycles": [c.labels(g) for c in self.cycles],
            "class": self.parity_class,
        }


def _certificate(sys: ParitySystem, y: int) -> ZeroSumCertificate:
    idx = tuple(gf2.bits_of(y))
    odd_count = sum(sys.rhs_reference[i] for i in idx) % 2
    return ZeroSumCertificate(
        cycle_indices=idx,
        cycles=tuple(sys.cycles[i] for i in idx),
        parity_class="odd" if len(idx) % 2 else "even",
        oddly_oriented_count_mod2=odd_count,
    )


def zero_sum_basis(sys: ParitySystem) -> list[ZeroSumCertificate]:
    """Reduced basis of the zero-sum cycle sets (the left null space of ``A``)."""
    basis = gf2.left_null_space(list(sys.rows), sys.graph.m)
    certs = [_certificate(sys, y) for y in basis]
    for c in certs:
        if not c.is_zero_sum():
            raise AssertionError("null-space vector failed the even-coverage check")
    return certs


def in_zero_sum_span(sys: ParitySystem, cycle_indices: Iterable[int]) -> bool:
    y = 0
    for i in cycle_indices:
        y |= 1 << i
    basis = gf2.left_null_space(list(sys.rows), sys.graph.m)
    return gf2.rank(basis + [y], len(sys.rows)) == len(basis)


@dataclass(frozen=True)
class OrientationVerdict:
    target: Target
    exists: bool
    witness: Orientation | None = None
    certificate: ZeroSumCertificate | None = None


def solve_orientation(sys: ParitySystem, target: Target) -> OrientationVerdict:
    """Witness orientation if every F-alternating cycle can get parity ``target``, else a certificate."""
    g = sys.graph
    rhs = sys.rhs(target)
    x = gf2.solve(list(sys.rows), rhs, g.m)
    if x is not None:
        return OrientationVerdict(target, True, witness=Orientation.from_flips(g, x))
    rhs_mask = 0
    for i, b in enumerate(rhs):
        if b:
            rhs_mask |= 1 << i
    for cert in zero_sum_basis(sys):
        if gf2.dot(cert.vector, rhs_mask):
            return OrientationVerdict(target, False, certificate=cert)
    raise AssertionError("inconsistent system without an obstruction in the null-space basis")


def verdict_json(sys: ParitySystem, verdict: OrientationVerdict) -> dict:
    out: dict = {"exists": verdict.exists, "target": verdict.target}
    if verdict.witness is not None:
        out["witness"] = list(verdict.witness.bits)
        out["arcs"] = [list(a) for a in verdict.witness.arcs()]
    if verdict.certificate is not None:
        out["certificate"] = verdict.certificate.to_json_obj(sys.graph)
    return out


@dataclass(frozen=True)
class BadVerdict:
    bad: bool
    certificate: ZeroSumCertificate | None
    orientation: Orientation | None


def is_bad(g: Graph, f: Iterable[int]) -> BadVerdict:
    """Whether some zero-sum F-set has an odd number of evenly oriented members.

    For a zero-sum vector ``y`` that parity is ``|y| + y . b0`` under every
    orientation, so scanning the null-space basis decides it; the witness
    orientation is simply the reference one.
    """
    sys = build_parity_system(g, f)
    for cert in zero_sum_basis(sys):
        if (len(cert.cycle_indices) + cert.oddly_oriented_count_mod2) % 2:
            return BadVerdict(True, cert, Orientation.reference(g))
    return BadVerdict(False, None, None)


def is_pfaffian(g: Graph, check_all: bool = False) -> bool:
    """Odd orientation existence for the lexicographically first perfect matching.

    With ``check_all`` every perfect matching is tried and disagreement
    raises ``AssertionError`` (the answer should not depend on the factor).
    """
    factors = enumerate_perfect_matchings(g)
    if not factors:
        raise NoFactorError("graph has no perfect matching")
    answer = solve_orientation(build_parity_system(g, factors[0]), "odd").exists
    if check_all:
        for f in factors[1:]:
            if solve_orientation(build_parity_system(g, f), "odd").exists != answer:
                raise AssertionError("odd-orientation existence depends on the factor")
    return answer


def canonical_orientation(
    g: Graph,
    f: Iterable[int],
    bipartition: tuple[Iterable[int], Iterable[int]] | None = None,
) -> Orientation:
    """Factor edges from X to Y, every other edge from Y to X."""
    f = check_one_factor(g, f)
    if bipartition is None:
        bipartition = is_bipartite_after_removing(g)
        if bipartition is None:
            raise BipartiteError("graph is not bipartite")
    xs = set(bipartition[0])
    bits = []
    for i, (u, v) in enumerate(g.edges):
        if (u in xs) == (v in xs):
            raise BipartiteError("edge inside one side of the bipartition")
        tail_is_x = i in f
        tail = u if (u in xs) == tail_is_x else v
        bits.append(0 if tail == u else 1)
    return Orientation(g, tuple(bits))


def orientation_exists(g: Graph, f: Iterable[int], target: Target) -> bool:
    return solve_orientation(build_parity_system(g, f), target).exists


def validate_verdict(sys: ParitySystem, verdict: OrientationVerdict) -> None:
    """Re-check a verdict from scratch; raises ``AssertionError`` on failure."""
    if verdict.exists:
        assert verdict.witness is not None
        even, odd = classify_cycles(verdict.witness, sys.factor, list(sys.cycles))
        wrong = odd if verdict.target == "even" else even
        assert not wrong, "witness leaves a cycle with the wrong parity"
    else:
        cert = verdict.certificate
        assert cert is not None and cert.is_zero_sum()
        odd_count = cert.oddly_oriented_count_mod2
        if verdict.target == "even":
            assert odd_count == 1
        else:
            assert (len(cert.cycles) - odd_count) % 2 == 1
