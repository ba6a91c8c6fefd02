"""JSON schemas for fans, collections, stable-map data, and GLSM problems.

Fan files round-trip bit-exactly: {"name": str, "rays": [[int,...],...],
"max_cones": [[int,...],...]} with 0-based indices.  Rationals are carried
as strings in lowest terms ("3", "-2/5"); forms as strings in the form
grammar.
"""

from __future__ import annotations

from fractions import Fraction

from . import catalog
from .collapse import Attachment, GenusZeroStableMapData
from .delta import WeakDeltaCollection
from .fan import Fan
from .forms import format_form, parse_form
from .glsm import GLSMProblem
from .lattice import IntMatrix


def rational_to_str(q) -> str:
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def rational_from_str(s) -> Fraction:
    try:
        return Fraction(str(s))
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"bad rational {s!r}: {exc}") from None


def fan_to_dict(f: Fan) -> dict:
    return {
        "name": f.name,
        "rays": [list(r) for r in f.rays],
        "max_cones": [list(c) for c in f.max_cones],
    }


def fan_from_dict(obj) -> Fan:
    if isinstance(obj, str):
        return catalog.by_name(obj)
    try:
        rays = obj["rays"]
        cones = obj["max_cones"]
    except (KeyError, TypeError) as exc:
        raise ValueError(f"fan object missing field: {exc}") from None
    if not rays:
        raise ValueError("fan needs at least one ray")
    return Fan(
        dim=len(rays[0]),
        rays=tuple(tuple(r) for r in rays),
        max_cones=tuple(tuple(c) for c in cones),
        name=obj.get("name", ""),
    )


def collection_to_dict(c: WeakDeltaCollection) -> dict:
    return {
        "fan": c.fan.name if c.fan.name else fan_to_dict(c.fan),
        "degrees": list(c.degree),
        "sections": [format_form(u) for u in c.sections],
        "trivializations": [rational_to_str(t) for t in c.trivializations],
    }


def collection_from_dict(obj) -> WeakDeltaCollection:
    f = fan_from_dict(obj["fan"])
    degrees = [int(x) for x in obj["degrees"]]
    raw = obj["sections"]
    if len(raw) != len(degrees):
        raise ValueError("sections and degrees must have the same length")
    sections = [parse_form(s, expected_degree=d) for s, d in zip(raw, degrees)]
    triv = obj.get("trivializations")
    if triv is not None:
        triv = [rational_from_str(t) for t in triv]
    return WeakDeltaCollection(
        fan=f, degree=tuple(degrees), sections=tuple(sections), trivializations=triv
    )


def stable_map_to_dict(data: GenusZeroStableMapData) -> dict:
    return {
        "main": collection_to_dict(data.main),
        "attachments": [
            {
                "point": [rational_to_str(x) for x in att.point],
                "degree": list(att.degree),
            }
            for att in data.attachments
        ],
    }


def stable_map_from_dict(obj) -> GenusZeroStableMapData:
    main = collection_from_dict(obj["main"])
    atts = []
    for raw in obj.get("attachments", []):
        point = tuple(rational_from_str(x) for x in raw["point"])
        atts.append(Attachment(point=point, degree=tuple(int(x) for x in raw["degree"])))
    return GenusZeroStableMapData(main=main, attachments=tuple(atts))


def glsm_to_dict(p: GLSMProblem) -> dict:
    return {
        "charges": p.charges.to_rows(),
        "fi": [rational_to_str(x) for x in p.fi],
        "amplitudes": [rational_to_str(x) for x in p.amplitudes],
    }


def glsm_from_dict(obj) -> GLSMProblem:
    charges = IntMatrix.from_rows([[int(x) for x in row] for row in obj["charges"]])
    return GLSMProblem(
        charges=charges,
        fi=tuple(rational_from_str(x) for x in obj["fi"]),
        amplitudes=tuple(rational_from_str(x) for x in obj["amplitudes"]),
    )
