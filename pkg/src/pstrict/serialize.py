"""JSON forms of posets, shapes, restrictions, labelings and Q-partitions."""

from __future__ import annotations

import json
from fractions import Fraction
from pathlib import Path

from .errors import InvalidParameter, UnknownElement
from .gamma import BoundAssignment, hat_gamma_space
from .labelings import LabelingSpace, PStrictLabeling, RestrictionFunction, restriction_from_bounds
from .poset import ConvexShape, Poset, element_str, standard_poset
from .qpartitions import QPartition, QSpace
from .tableaux import flagged_space, ssyt_space, staircase_flag_space, symplectic_space


def native(e):
    """JSON value for an element id (tuples become lists)."""
    if isinstance(e, tuple):
        return [native(x) for x in e]
    return e


def from_native(x):
    if isinstance(x, list):
        return tuple(from_native(y) for y in x)
    return x


def load_json(arg: str):
    """Parse inline JSON (starting with ``{`` or ``[``) or read a file."""
    text = arg.strip()
    if text.startswith("{") or text.startswith("["):
        return json.loads(text)
    return json.loads(Path(arg).read_text())


def poset_to_json(P: Poset) -> dict:
    return {"elements": [native(e) for e in P.elements], "covers": [[native(a), native(b)] for a, b in P.covers()]}


def poset_from_json(d: dict) -> Poset:
    if "product" in d:
        return standard_poset("product", tuple(d["product"]))
    if "family" in d:
        fam = d["family"]
        if fam == "hat":
            return standard_poset("hat", poset_from_json(d["poset"]))
        return standard_poset(fam, int(d["n"]))
    return Poset([from_native(e) for e in d["elements"]], [(from_native(a), from_native(b)) for a, b in d["covers"]])


def _elem(P: Poset, key: str):
    return P.element_from_str(key)


def shape_to_json(shape: ConvexShape) -> dict:
    return {
        "ell": shape.ell,
        "u": {element_str(p): x for p, x in shape.u.items()},
        "v": {element_str(p): x for p, x in shape.v.items()},
    }


def shape_from_json(P: Poset, d: dict) -> ConvexShape:
    u = {p: 0 for p in P}
    v = {p: 0 for p in P}
    for k, x in d.get("u", {}).items():
        u[_elem(P, k)] = int(x)
    for k, x in d.get("v", {}).items():
        v[_elem(P, k)] = int(x)
    return ConvexShape(int(d["ell"]), u, v).validate(P)


def restriction_to_json(R: RestrictionFunction) -> dict:
    return {element_str(p): list(ks) for p, ks in R.sets.items()}


def space_from_json(d: dict) -> LabelingSpace:
    """Labeling space from a JSON description.

    Accepted forms: ``{"ssyt": {"lambda", "mu", "q"}}``, ``{"flagged":
    {"lambda", "mu", "flag"}}``, ``{"symplectic": {"lambda", "mu", "q"}}``,
    ``{"staircase-flag": {"n", "ell"}}`` or the general ``{"poset", "ell",
    "u", "v", "restriction"}`` where the restriction is ``{"q": q}``,
    ``{"a": .., "b": ..}`` or ``{"explicit": {"p": [k, ...]}}``.
    """
    if "ssyt" in d:
        t = d["ssyt"]
        return ssyt_space(t["lambda"], t.get("mu", []), int(t["q"]))
    if "flagged" in d:
        t = d["flagged"]
        return flagged_space(t["lambda"], t.get("mu", []), t["flag"])
    if "symplectic" in d:
        t = d["symplectic"]
        return symplectic_space(t["lambda"], t.get("mu", []), int(t["q"]))
    if "staircase-flag" in d:
        t = d["staircase-flag"]
        return staircase_flag_space(int(t["n"]), int(t["ell"]))
    P = poset_from_json(d["poset"])
    if "shape" in d:
        shape = shape_from_json(P, d["shape"])
    else:
        shape = shape_from_json(P, {"ell": d["ell"], "u": d.get("u", {}), "v": d.get("v", {})})
    r = d.get("restriction")
    if r is None:
        raise InvalidParameter("space needs a restriction")
    if "q" in r:
        q = int(r["q"])
        R = restriction_from_bounds(P, shape, 1, q, kind="global", q=q)
    elif "a" in r or "b" in r:
        R = restriction_from_bounds(P, shape, _bound(P, r.get("a", 1)), _bound(P, r["b"]))
    elif "explicit" in r:
        R = RestrictionFunction({_elem(P, k): ks for k, ks in r["explicit"].items()})
    else:
        raise InvalidParameter("unknown restriction form")
    return LabelingSpace(P, shape, R)


def _bound(P: Poset, x):
    if isinstance(x, dict):
        return {_elem(P, k): int(v) for k, v in x.items()}
    if isinstance(x, list):
        return [int(v) for v in x]
    return int(x)


def space_to_json(S: LabelingSpace) -> dict:
    return {
        "poset": poset_to_json(S.poset),
        "shape": shape_to_json(S.shape),
        "restriction": {"explicit": restriction_to_json(S.R)},
    }


def labeling_to_json(f: PStrictLabeling) -> dict:
    S = f.space
    labels = {f"{element_str(p)},{i}": k for (p, i), k in f.as_dict().items()}
    return {"shape": shape_to_json(S.shape), "labels": labels}


def labeling_from_json(S: LabelingSpace, d: dict) -> PStrictLabeling:
    data = {}
    for key, k in d["labels"].items():
        ptxt, itxt = key.rsplit(",", 1)
        data[(_elem(S.poset, ptxt), int(itxt))] = int(k)
    return S.labeling(data)


def gamma_id(x) -> str:
    """``"p:k"`` for Gamma elements, the plain string form otherwise."""
    if isinstance(x, tuple) and len(x) == 2 and isinstance(x[1], int):
        return f"{element_str(x[0])}:{x[1]}"
    return element_str(x)


def qspace_to_json(Q: QSpace) -> dict:
    return {
        "elements": [gamma_id(e) for e in Q.poset.elements],
        "covers": [[gamma_id(a), gamma_id(b)] for a, b in Q.poset.covers()],
        "ell": Q.ell,
        "B": {gamma_id(x): v for x, v in Q.bounds.values.items()},
    }


def qpartition_to_json(sigma: QPartition) -> dict:
    return {"labels": {gamma_id(x): v for x, v in sigma.as_dict().items()}}


def qpartition_from_json(Q: QSpace, d: dict) -> QPartition:
    by_id = {gamma_id(x): x for x in Q.poset.elements}
    data = {}
    for key, v in d["labels"].items():
        if key not in by_id:
            raise UnknownElement(f"unknown element id {key!r}")
        data[by_id[key]] = int(v)
    return Q.qpartition(data)


def qspace_from_json(d: dict) -> QSpace:
    """General ``A^B(Q)`` from ``{"poset", "B", "ell"}``."""
    P = poset_from_json(d["poset"])
    vals = {}
    for k, v in d["B"].items():
        vals[_elem(P, k)] = int(v)
    return QSpace(P, BoundAssignment(vals, int(d["ell"])))


def jsonable(obj):
    """Recursively convert reports to JSON-native values."""
    if isinstance(obj, Fraction):
        return str(obj) if obj.denominator != 1 else obj.numerator
    if isinstance(obj, dict):
        return {str(k): jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple, set, frozenset)):
        items = sorted(obj, key=repr) if isinstance(obj, (set, frozenset)) else obj
        return [jsonable(x) for x in items]
    if isinstance(obj, PStrictLabeling):
        return labeling_to_json(obj)
    if isinstance(obj, QPartition):
        return qpartition_to_json(obj)
    return obj


def gamma_space_of(S: LabelingSpace) -> QSpace:
    return hat_gamma_space(S)
