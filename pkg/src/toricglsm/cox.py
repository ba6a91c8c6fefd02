"""Cox quotient presentation of a smooth complete toric variety.

From a fan this computes the charge matrix (a kernel basis of the ray
matrix's transpose, arranged as rows), the Picard rank, the irrelevant
ideal's monomial generators (as ray-index supports), and the primitive
collections describing V(I) as a union of coordinate subspaces.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

from .fan import Fan, is_complete, is_smooth, validate_fan
from .lattice import IntMatrix, integer_kernel, smith_normal_form

_MAX_RAYS_FOR_COLLECTIONS = 16


@dataclass(frozen=True)
class CoxPresentation:
    ray_matrix: IntMatrix  # |rays| x n, rows are the rays
    charge_matrix: IntMatrix  # (|rays| - n) x |rays|
    pic_rank: int
    pic_torsion: tuple  # invariant factors > 1; empty in the smooth complete case
    irrelevant_generators: tuple  # complement of each max cone, as index tuples
    primitive_collections: tuple  # minimal index sets spanning no cone


@lru_cache(maxsize=None)
def primitive_collections(f: Fan):
    """Minimal ray-index sets contained in no cone of the fan.

    Exhaustive minimal-subset search; a subset spans a cone of a simplicial
    fan exactly when it lies inside some maximal cone's ray set.
    """
    if f.n_rays > _MAX_RAYS_FOR_COLLECTIONS:
        raise ValueError(
            f"primitive-collection search limited to {_MAX_RAYS_FOR_COLLECTIONS} rays"
        )
    rep = validate_fan(f)
    if not rep.ok:
        raise ValueError("invalid fan: " + "; ".join(rep.issues))
    cone_sets = [set(c) for c in f.max_cones]

    def in_some_cone(s):
        return any(s <= c for c in cone_sets)

    found = []
    for size in range(1, f.n_rays + 1):
        for comb in itertools.combinations(range(f.n_rays), size):
            s = set(comb)
            if in_some_cone(s):
                continue
            if any(set(p) <= s for p in found):
                continue
            if all(in_some_cone(s - {i}) for i in comb):
                found.append(comb)
    return tuple(found)


@lru_cache(maxsize=None)
def cox_presentation(f: Fan) -> CoxPresentation:
    """X = (C^rays - V(I)) / G, presented by exact integer data."""
    rep = validate_fan(f)
    if not rep.ok:
        raise ValueError("invalid fan: " + "; ".join(rep.issues))
    if not is_smooth(f):
        raise ValueError("fan is not smooth")
    if not is_complete(f):
        raise ValueError("fan is not complete")

    B = IntMatrix.from_rows(list(f.rays))
    torsion = tuple(
        d for d in smith_normal_form(B).diagonal() if d not in (0, 1)
    )
    if torsion:
        raise ValueError(
            f"divisor class group has torsion {torsion}; presentation refused"
        )
    kernel = integer_kernel(B.transpose())
    Q = IntMatrix.from_rows(kernel) if kernel else IntMatrix.zero(0, f.n_rays)
    pic_rank = f.n_rays - f.dim
    if Q.rows != pic_rank:
        raise ValueError("charge matrix rank does not match |rays| - dim")
    irrelevant = tuple(
        tuple(i for i in range(f.n_rays) if i not in set(cone)) for cone in f.max_cones
    )
    return CoxPresentation(
        ray_matrix=B,
        charge_matrix=Q,
        pic_rank=pic_rank,
        pic_torsion=(),
        irrelevant_generators=irrelevant,
        primitive_collections=primitive_collections(f),
    )


def outside_irrelevant_locus(pres: CoxPresentation, zero_set) -> bool:
    """True iff a point vanishing exactly on `zero_set` avoids V(I).

    Equivalent formulations: some maximal cone's complement misses the
    zero set, i.e. the zero set contains no primitive collection.
    """
    zs = set(zero_set)
    return any(zs.isdisjoint(gen) for gen in pres.irrelevant_generators)
