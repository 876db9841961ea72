"""Unimodular-invariant fingerprints of polytopes."""

from dataclasses import asdict, dataclass
from typing import Dict, List, Optional, Tuple

import structlog

from symtope.core.config import Settings, resolve
from symtope.core.errors import GuardExceededError
from symtope.services.invariants import ehrhart_hstar
from symtope.services.polytope import (
    CSPolytope,
    facets_hull,
    normalized_volume,
    vertex_count,
)

logger = structlog.get_logger(__name__)


@dataclass(frozen=True)
class Fingerprint:
    """
    Agreement is necessary for unimodular equivalence, never sufficient.
    Optional fields are None when not computed.
    """

    dim: int
    vertex_count: int
    facet_count: Optional[int] = None
    normalized_volume: Optional[int] = None
    hstar: Optional[Tuple[int, ...]] = None

    def shared_fields(self, other: "Fingerprint") -> List[str]:
        mine, theirs = asdict(self), asdict(other)
        return [k for k in mine if mine[k] is not None and theirs[k] is not None]

    def differences(self, other: "Fingerprint") -> Dict[str, Tuple]:
        mine, theirs = asdict(self), asdict(other)
        return {
            k: (mine[k], theirs[k])
            for k in self.shared_fields(other)
            if mine[k] != theirs[k]
        }

    def agrees_with(self, other: "Fingerprint") -> bool:
        return not self.differences(other)


def fingerprint(
    polytope: CSPolytope,
    want_hstar: bool = False,
    settings: Optional[Settings] = None,
) -> Fingerprint:
    """
    Dimension and vertex count always; facet count and normalized volume
    unless a hull guard trips; h* on request. With h* the volume is h*(1).
    """
    settings = resolve(settings)
    facets = volume = hstar = None
    try:
        facets = len(facets_hull(polytope, settings))
    except GuardExceededError as exc:
        logger.info("fingerprint_skip", field="facet_count", guard=exc.guard)
    if want_hstar:
        try:
            hstar = ehrhart_hstar(polytope, settings).coefficients
            volume = sum(hstar)
        except GuardExceededError as exc:
            logger.info("fingerprint_skip", field="hstar", guard=exc.guard)
    if volume is None and facets is not None:
        try:
            volume = normalized_volume(polytope, settings)
        except GuardExceededError as exc:
            logger.info("fingerprint_skip", field="normalized_volume", guard=exc.guard)
    vertices = vertex_count(polytope, settings)
    return Fingerprint(polytope.rank, vertices, facets, volume, hstar)
