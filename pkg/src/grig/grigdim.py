"""Gorenstein projective sets and the Gorenstein rigidity dimension.

Two readings of the sup over Gorenstein projective generators are computed:

* ``strict``: generators must contain a nonprojective indecomposable summand
  in every block of the algebra that has one at all.  Adding summands can
  only shrink the rigidity degree, so within a block the sup is attained by
  single summands ``A + X``; across blocks the Ext groups vanish and the
  rigidity degree of a sum is the minimum over blocks.
* ``full``: the rigidity degree of ``A`` plus every certified indecomposable.

An algebra without nonprojective Gorenstein projectives gets neither number.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .algebra import Algebra
from .errors import CertificationUnknown, DecompositionInconclusive, NotClosed
from .homology import (
    DEFAULT_CUTOFF,
    ExtendedNat,
    GorensteinStatus,
    GprojCert,
    en_max,
    en_min,
    gorenstein_check,
    gproj_certify,
    left_approximation,
    rigidity_degree,
)
from .io import module_to_doc
from .linalg import rank
from .modules import (
    Module,
    direct_sum,
    indecomposable_summands,
    is_isomorphic,
    is_projective,
    projective_indecomposables,
    quotient,
    regular_module,
    syzygy,
)

COMPLETENESS = {
    "asserted": "UserAsserted",
    "enumerated": "SelfInjectiveFiniteTypeEnumerated",
    "unverified": "Unverified",
}

NOTES = {
    "S": "strict: sup of rd(M) + 2 over Gorenstein projective generators M having a nonprojective "
         "indecomposable summand in every block that admits one; computed as 2 + min over such blocks "
         "of max over members X of rd(A + X)",
    "F": "full: 2 + rd(A + all certified members)",
    "relative": "values are relative to the certified member set unless completeness is asserted or enumerated",
}


@dataclass
class GprojSet:
    algebra: Algebra
    members: list[tuple[Module, GprojCert]]
    closure_status: str  # "ClosedUnderSyzygy" | "NotClosed"
    bound: int
    pending: list[Module] = field(default_factory=list)
    completeness_claim: str = "Unverified"
    rejected: list[GprojCert] = field(default_factory=list)
    gorenstein: GorensteinStatus | None = None

    @property
    def closed(self) -> bool:
        return self.closure_status == "ClosedUnderSyzygy"

    @property
    def modules(self) -> list[Module]:
        return [x for x, _ in self.members]

    def to_json(self) -> dict:
        return {
            "algebra": self.algebra.name,
            "members": [module_to_doc(x) for x in self.modules],
            "certificates": [c.to_json() for _, c in self.members],
            "closure_status": {"kind": self.closure_status, "bound": self.bound,
                               "pending": [module_to_doc(x) for x in self.pending]},
            "completeness": self.completeness_claim,
        }


def gproj_cosyzygy(x: Module) -> Module | None:
    """Cokernel of the universal map ``X -> A^h``; None if that map is not injective."""
    approx = left_approximation(x, projective_indecomposables(x.algebra))
    if rank(approx.matrix) != x.dim:
        return None
    return quotient(approx.target, approx.matrix.columns())[0]


def gproj_closure(a: Algebra, seeds: Sequence[Module], max_steps: int = 32,
                  cutoff: int = DEFAULT_CUTOFF, completeness: str = "Unverified") -> GprojSet:
    """Indecomposable nonprojective Gorenstein projectives reachable from the seeds
    by taking summands, syzygies and Gorenstein projective cosyzygies."""
    gs = gorenstein_check(a, cutoff)
    if a.is_semisimple:
        completeness = "SelfInjectiveFiniteTypeEnumerated"
    members: list[tuple[Module, GprojCert]] = []
    rejected: list[GprojCert] = []
    unknown: list[Module] = []
    queue = list(seeds)
    steps = 0
    while queue and steps < max_steps:
        steps += 1
        y = queue.pop(0)
        if y.dim == 0:
            continue
        try:
            parts = [x for x, _ in indecomposable_summands(y).summands]
        except DecompositionInconclusive:
            unknown.append(y)
            continue
        for x in parts:
            if is_projective(x) or _find(members, x) is not None:
                continue
            cert = gproj_certify(x, gs, cutoff)
            if cert.verdict == "Refuted":
                rejected.append(cert)
                continue
            if cert.verdict == "Unknown":
                unknown.append(x)
                continue
            members.append((x, cert))
            queue.append(syzygy(x))
            co = gproj_cosyzygy(x)
            if co is not None:
                queue.append(co)
    pending = unknown + queue
    status = "ClosedUnderSyzygy" if not pending else "NotClosed"
    return GprojSet(a, members, status, steps, pending, completeness, rejected, gs)


def _find(members, x: Module) -> int | None:
    for k, (y, _) in enumerate(members):
        if y.fingerprint == x.fingerprint and is_isomorphic(y, x, indecomposable=True) is not None:
            return k
    return None


def cm_classify(a: Algebra, gs: GprojSet) -> str:
    if gs.members:
        return "CMFiniteRelativeToSet"
    if gs.completeness_claim == "Unverified" and not a.is_semisimple:
        return "Unknown"
    return "CMFree"


def module_block(x: Module) -> int:
    """Index of the block of the algebra supporting an indecomposable module."""
    a = x.algebra
    support = {k for k, d in enumerate(x.vertex_dims()) if d}
    for b, classes in enumerate(a.blocks):
        idx = {i for c in classes for i in a.vertex_classes[c]}
        if support <= idx:
            return b
    raise ValueError("module is not supported on a single block")


@dataclass
class GrigReport:
    algebra: Algebra
    strict_value: ExtendedNat | None
    full_generator_value: ExtendedNat | None
    per_singleton: list[tuple[Module, ExtendedNat]]
    cm_class: str
    cutoff: int
    completeness_claim: str
    block_values: dict[int, ExtendedNat] = field(default_factory=dict)
    convention_notes: dict = field(default_factory=lambda: dict(NOTES))

    @property
    def degenerate(self) -> bool:
        return self.strict_value is None

    def to_json(self) -> dict:
        def val(v):
            return "DegenerateCMFree" if v is None else v.to_json()

        return {
            "algebra": self.algebra.name,
            "strict_value": val(self.strict_value),
            "full_generator_value": val(self.full_generator_value),
            "per_singleton": [{"module": module_to_doc(x), "rd": rd.to_json()} for x, rd in self.per_singleton],
            "block_values": {str(b): v.to_json() for b, v in sorted(self.block_values.items())},
            "cm_class": self.cm_class,
            "completeness": self.completeness_claim,
            "cutoff": self.cutoff,
            "convention_notes": self.convention_notes,
        }


def grigdim(a: Algebra, gs: GprojSet, cutoff: int = DEFAULT_CUTOFF) -> GrigReport:
    if not gs.closed:
        raise NotClosed(f"{len(gs.pending)} modules still pending")
    if gs.algebra is not a:
        raise CertificationUnknown("set was certified over a different algebra")
    cls = cm_classify(a, gs)
    if not gs.members:
        return GrigReport(a, None, None, [], cls, cutoff, gs.completeness_claim)
    reg = regular_module(a)
    per = [(x, rigidity_degree(direct_sum([reg, x]), cutoff)) for x in gs.modules]
    by_block: dict[int, list[ExtendedNat]] = {}
    for x, rd in per:
        by_block.setdefault(module_block(x), []).append(rd)
    block_values = {}
    for b, rds in by_block.items():
        block_values[b] = en_max(rds) + 2
    strict = en_min(list(block_values.values()))
    full = rigidity_degree(direct_sum([reg] + gs.modules), cutoff) + 2
    return GrigReport(a, strict, full, per, cls, cutoff, gs.completeness_claim, block_values)

