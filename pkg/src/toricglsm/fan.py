"""Smooth simplicial fans and their combinatorial geometry.

A fan is stored as primitive ray generators plus maximal cones given by
ray-index sets.  Only simplicial fans are supported; smooth fans are
automatically simplicial.  Completeness is decided by the pseudomanifold
criterion (every facet shared by exactly two maximal cones, connected
adjacency graph) hardened by a seeded Monte Carlo coverage check -- a
heuristic-hardened test, not a certified decision procedure.

"Convexity" of the associated variety has no checkable criterion here;
what is computed is the proxy "every toric prime divisor is nef", i.e.
all wall-relation coefficients nonnegative, and it is reported as a proxy.
"""

from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .lattice import IntMatrix, rank
from . import ratlp

_MC_DIRECTIONS = 1000
_MC_SEED = 20240901


@dataclass(frozen=True)
class Fan:
    """Fan in Z^dim: primitive rays and maximal cones as ray-index tuples."""

    dim: int
    rays: tuple  # tuple of integer tuples
    max_cones: tuple  # tuple of sorted index tuples
    name: str = field(default="", compare=False)

    def __post_init__(self):
        object.__setattr__(self, "rays", tuple(tuple(int(c) for c in r) for r in self.rays))
        object.__setattr__(
            self, "max_cones", tuple(tuple(sorted(int(i) for i in c)) for c in self.max_cones)
        )

    @property
    def n_rays(self):
        return len(self.rays)


@dataclass(frozen=True)
class ValidationReport:
    issues: tuple

    @property
    def ok(self):
        return not self.issues


@dataclass(frozen=True)
class Wall:
    """Codimension-1 cone shared by two maximal cones, with its curve relation.

    `relation` is the unique integer vector r over all rays with
    sum_rho r_rho * n_rho = 0, r = +1 on the two rays completing the wall
    to the left/right cones, and 0 on rays in neither the wall nor that
    pair.  Entry rho equals deg O(D_rho) restricted to the wall curve.
    """

    wall_rays: tuple
    left_cone: int
    right_cone: int
    relation: tuple


def _gcd_all(v):
    g = 0
    for c in v:
        g = math.gcd(g, abs(c))
    return g


def validate_fan(f: Fan) -> ValidationReport:
    """Check the Fan invariants; returns a report rather than raising."""
    issues = []
    for i, r in enumerate(f.rays):
        if len(r) != f.dim:
            issues.append(f"ray {i} has length {len(r)}, expected {f.dim}")
        elif all(c == 0 for c in r):
            issues.append(f"ray {i} is zero")
        elif _gcd_all(r) != 1:
            issues.append(f"ray {i} = {r} is not primitive")
    seen = {}
    for i, r in enumerate(f.rays):
        if r in seen:
            issues.append(f"duplicate ray: index {seen[r]} and {i}")
        else:
            seen[r] = i
    if issues:
        return ValidationReport(tuple(issues))

    covered = set()
    for ci, cone in enumerate(f.max_cones):
        if len(set(cone)) != len(cone):
            issues.append(f"cone {ci} repeats a ray index")
            continue
        if any(i < 0 or i >= f.n_rays for i in cone):
            issues.append(f"cone {ci} has a ray index out of range")
            continue
        covered.update(cone)
        gens = IntMatrix.from_rows([f.rays[i] for i in cone])
        if rank(gens) != len(cone):
            issues.append(f"cone {ci} is not simplicial (generators dependent)")
    for i in range(f.n_rays):
        if i not in covered:
            issues.append(f"ray {i} appears in no maximal cone")
    if rank(IntMatrix.from_rows(list(f.rays))) != f.dim:
        issues.append("rays do not span the ambient space")
    if issues:
        return ValidationReport(tuple(issues))

    for a, b in itertools.combinations(range(len(f.max_cones)), 2):
        msg = _bad_intersection(f, a, b)
        if msg:
            issues.append(msg)
    return ValidationReport(tuple(issues))


def _bad_intersection(f: Fan, a: int, b: int):
    """None if cone(a) meets cone(b) in their common face, else a message.

    For simplicial cones every generator subset spans a face, so the only
    thing to check is cone(S) ∩ cone(T) ⊆ cone(S∩T): no point of the
    intersection may need a generator outside S∩T (representations in a
    simplicial cone are unique).
    """
    S = f.max_cones[a]
    T = f.max_cones[b]
    common = set(S) & set(T)
    for cone, other in ((S, T), (T, S)):
        extra = [i for i in cone if i not in common]
        for forced in extra:
            # x = sum_{s in cone} p_s n_s = sum_{t in other} q_t n_t,
            # p, q >= 0, p_forced >= 1: feasible iff the face condition fails
            nvars = len(cone) + len(other)
            cons = []
            for j in range(f.dim):
                row = [Fraction(f.rays[i][j]) for i in cone] + [
                    Fraction(-f.rays[i][j]) for i in other
                ]
                cons.append((tuple(row), Fraction(0)))
                cons.append((tuple(-c for c in row), Fraction(0)))
            for v in range(nvars):
                e = [Fraction(0)] * nvars
                e[v] = Fraction(-1)
                cons.append((tuple(e), Fraction(0)))
            e = [Fraction(0)] * nvars
            e[cone.index(forced)] = Fraction(-1)
            cons.append((tuple(e), Fraction(-1)))
            if ratlp.feasible(cons, nvars):
                return (
                    f"cones {a} and {b} intersect outside their common face "
                    f"(ray {forced} participates)"
                )
    return None


def _require_valid(f: Fan):
    rep = validate_fan(f)
    if not rep.ok:
        raise ValueError("invalid fan: " + "; ".join(rep.issues))


@lru_cache(maxsize=None)
def is_smooth(f: Fan) -> bool:
    """True iff every maximal cone's generators extend to a Z-basis."""
    _require_valid(f)
    from .lattice import smith_normal_form

    for cone in f.max_cones:
        gens = IntMatrix.from_rows([f.rays[i] for i in cone])
        if len(cone) == f.dim:
            if abs(gens.det()) != 1:
                return False
        else:
            snf = smith_normal_form(gens)
            if any(d != 1 for d in snf.diagonal()[: len(cone)]):
                return False
    return True


def _facet_map(f: Fan):
    facets = {}
    for ci, cone in enumerate(f.max_cones):
        for facet in itertools.combinations(cone, len(cone) - 1):
            facets.setdefault(facet, []).append(ci)
    return facets


def _cone_contains_direction(f: Fan, cone, x):
    """Exact membership of rational vector x in a full-dim simplicial cone."""
    gens = [f.rays[i] for i in cone]
    n = f.dim
    # solve sum a_i gens_i = x over Q
    aug = [[Fraction(gens[i][j]) for i in range(n)] + [Fraction(x[j])] for j in range(n)]
    for col in range(n):
        piv = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if piv is None:
            return False
        aug[col], aug[piv] = aug[piv], aug[col]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                fac = aug[r][col] / aug[col][col]
                aug[r] = [u - fac * w for u, w in zip(aug[r], aug[col])]
    return all(aug[i][n] / aug[i][i] >= 0 for i in range(n))


@lru_cache(maxsize=None)
def is_complete(f: Fan) -> bool:
    """Pseudomanifold criterion plus seeded Monte Carlo coverage."""
    _require_valid(f)
    if any(len(c) != f.dim for c in f.max_cones):
        return False
    facets = _facet_map(f)
    if any(len(cs) != 2 for cs in facets.values()):
        return False
    # adjacency connectivity
    adj = {i: set() for i in range(len(f.max_cones))}
    for ca, cb in facets.values():
        adj[ca].add(cb)
        adj[cb].add(ca)
    seen = {0}
    stack = [0]
    while stack:
        for nb in adj[stack.pop()]:
            if nb not in seen:
                seen.add(nb)
                stack.append(nb)
    if len(seen) != len(f.max_cones):
        return False
    rng = random.Random(_MC_SEED)
    for _ in range(_MC_DIRECTIONS):
        x = tuple(rng.randint(-50, 50) for _ in range(f.dim))
        if all(c == 0 for c in x):
            continue
        if not any(_cone_contains_direction(f, cone, x) for cone in f.max_cones):
            return False
    return True


def _require_smooth_complete(f: Fan):
    if not is_smooth(f):
        raise ValueError("fan is not smooth")
    if not is_complete(f):
        raise ValueError("fan is not complete")


@lru_cache(maxsize=None)
def walls(f: Fan):
    """All walls of a smooth complete fan, with their curve relations."""
    _require_smooth_complete(f)
    out = []
    facets = _facet_map(f)
    for facet in sorted(facets):
        ca, cb = sorted(facets[facet])
        (left_extra,) = set(f.max_cones[ca]) - set(facet)
        (right_extra,) = set(f.max_cones[cb]) - set(facet)
        # n_left + n_right + sum_i a_i n_{w_i} = 0; wall rays independent,
        # smoothness makes the a_i integers
        n = f.dim
        target = tuple(
            -(f.rays[left_extra][j] + f.rays[right_extra][j]) for j in range(n)
        )
        wall_list = list(facet)
        aug = [
            [Fraction(f.rays[i][j]) for i in wall_list] + [Fraction(target[j])]
            for j in range(n)
        ]
        m = len(wall_list)
        row = 0
        pivot_row = [None] * m
        for col in range(m):
            piv = next((r for r in range(row, n) if aug[r][col] != 0), None)
            if piv is None:
                continue
            aug[row], aug[piv] = aug[piv], aug[row]
            for r in range(n):
                if r != row and aug[r][col] != 0:
                    fac = aug[r][col] / aug[row][col]
                    aug[r] = [u - fac * w for u, w in zip(aug[r], aug[row])]
            pivot_row[col] = row
            row += 1
        coeffs = [
            aug[pivot_row[col]][m] / aug[pivot_row[col]][col] for col in range(m)
        ]
        relation = [0] * f.n_rays
        relation[left_extra] += 1
        relation[right_extra] += 1
        for i, c in zip(wall_list, coeffs):
            if c.denominator != 1:
                raise ValueError("non-integral wall relation on a smooth fan")
            relation[i] += int(c)
        out.append(Wall(tuple(facet), ca, cb, tuple(relation)))
    return tuple(out)


def prime_divisors_nef(f: Fan):
    """Nef check for every toric prime divisor (the convexity proxy).

    Returns (all_nef, per_divisor) where per_divisor[rho] is True iff
    every wall relation is nonnegative at rho.
    """
    ws = walls(f)
    per = [all(w.relation[i] >= 0 for w in ws) for i in range(f.n_rays)]
    return all(per), tuple(per)
