"""Cut certificates and the solver-independent checker."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Iterable

from .errors import InvalidInput
from .graph import Graph, VertexSet, component_masks, from_mask, to_mask


@dataclass(frozen=True)
class CutCertificate:
    """A vertex cut together with the components it leaves behind."""

    cut: VertexSet
    components: tuple[VertexSet, ...]

    @property
    def size(self) -> int:
        return len(self.cut)

    def check(self, g: Graph) -> bool:
        """Recompute ``g - cut`` and confirm the recorded partition."""
        report = validate_super_cut(g, self.cut)
        return report.is_cut and report.components == self.components

    def to_dict(self, g: Graph | None = None) -> dict[str, Any]:
        doc: dict[str, Any] = {
            "size": self.size,
            "cut": sorted(self.cut),
            "components": [sorted(c) for c in self.components],
        }
        if g is not None and g.labels is not None:
            doc["cut_labels"] = [list(g.labels[v]) for v in sorted(self.cut)]
        return doc


@dataclass(frozen=True)
class SuperCutCertificate(CutCertificate):
    """A cut whose components all have at least two vertices."""

    def check(self, g: Graph) -> bool:
        report = validate_super_cut(g, self.cut)
        return report.is_super and report.components == self.components


@dataclass(frozen=True)
class SuperCutReport:
    is_cut: bool
    is_super: bool
    component_sizes: tuple[int, ...]
    components: tuple[VertexSet, ...]

    def to_dict(self) -> dict[str, Any]:
        return {
            "is_cut": self.is_cut,
            "is_super": self.is_super,
            "component_sizes": list(self.component_sizes),
            "components": [sorted(c) for c in self.components],
        }


def validate_super_cut(g: Graph, S: Iterable[int]) -> SuperCutReport:
    """Check from scratch whether ``S`` is a cut and whether it is a super cut."""
    mask = to_mask(S)
    if mask & ~g.full_mask:
        raise InvalidInput("cut contains vertices outside the graph")
    comps = tuple(from_mask(c) for c in component_masks(g.adj, g.full_mask & ~mask))
    sizes = tuple(len(c) for c in comps)
    is_cut = len(comps) >= 2
    return SuperCutReport(is_cut, is_cut and min(sizes) >= 2, sizes, comps)


def is_super_cut_mask(adj: tuple[int, ...], full: int, cut: int) -> bool:
    """Bitmask fast path of :func:`validate_super_cut` for enumeration loops."""
    comps = component_masks(adj, full & ~cut)
    return len(comps) >= 2 and all(c & (c - 1) for c in comps)


def certificate_for(g: Graph, cut: Iterable[int], super_: bool = True) -> CutCertificate:
    cut = frozenset(cut)
    comps = tuple(from_mask(c) for c in component_masks(g.adj, g.full_mask & ~to_mask(cut)))
    cls = SuperCutCertificate if super_ else CutCertificate
    return cls(cut, comps)
