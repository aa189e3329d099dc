"""JSON fixture formats for complexes, algebras, modules, maps and graphs.

Complex::

    {"degrees": {"0": ["e1"], "1": ["e2"]}, "d": {"e1": {"e2": "1"}}, "N": 2}

Algebras add ``"product": {"x,y": {"z": "c"}}`` and an optional ``"unit"``.
Modules are ``{"algebra": <algebra>, "module": <complex>, "action": {"a,m": {...}}}``.
A lone map is ``{"degree": 1, "map": {"src": {"tgt": "c"}}}``.
"""

from __future__ import annotations

import json
from pathlib import Path

from .algebras import Kdgm, NDga
from .complexes import NComplex
from .graded import GradedMap, GradedSpace, StructuralError
from .paths import WeightedDigraph
from .scalars import format_scalar, parse_scalar


class FixtureError(ValueError):
    """Malformed fixture input (bad JSON, unknown label, bad scalar)."""


def parse_json(text: str, source: str = "<input>") -> dict:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FixtureError(f"{source}:{exc.lineno}:{exc.colno}: {exc.msg}") from None
    if not isinstance(data, dict):
        raise FixtureError(f"{source}: top level must be an object")
    return data


def read_json(path) -> dict:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise FixtureError(f"{path}: cannot read ({exc.strerror or exc})") from None
    return parse_json(text, str(path))


def fixture_kind(data: dict) -> str:
    if "action" in data:
        return "module"
    if "product" in data:
        return "algebra"
    if "degrees" in data:
        return "complex"
    if "edges" in data:
        return "graph"
    if "map" in data:
        return "map"
    raise FixtureError("cannot tell what kind of fixture this is")


def _scalar(text, where: str):
    try:
        return parse_scalar(text)
    except ValueError as exc:
        raise FixtureError(f"{where}: {exc}") from None


def _images(raw, where: str) -> dict:
    if not isinstance(raw, dict):
        raise FixtureError(f"{where}: expected an object")
    out = {}
    for src, img in raw.items():
        if not isinstance(img, dict):
            raise FixtureError(f"{where}.{src}: expected an object")
        out[src] = {tgt: _scalar(c, f"{where}.{src}.{tgt}") for tgt, c in img.items()}
    return out


def parse_space(raw, where: str = "degrees") -> GradedSpace:
    if not isinstance(raw, dict):
        raise FixtureError(f"{where}: expected an object")
    comps = {}
    for deg, labels in raw.items():
        try:
            d = int(deg)
        except ValueError:
            raise FixtureError(f"{where}: degree {deg!r} is not an integer") from None
        if not isinstance(labels, list) or not all(isinstance(x, str) for x in labels):
            raise FixtureError(f"{where}.{deg}: expected a list of labels")
        comps[d] = labels
    try:
        return GradedSpace(comps)
    except StructuralError as exc:
        raise FixtureError(f"{where}: {exc}") from None


def parse_map(space: GradedSpace, raw, degree: int, where: str) -> GradedMap:
    """Labels must exist (FixtureError); degree violations raise StructuralError."""
    images = _images(raw, where)
    for src, img in images.items():
        for lab in (src, *img):
            if lab not in space:
                raise FixtureError(f"{where}: unknown basis label {lab!r}")
    return GradedMap.from_images(space, space, degree, images)


def parse_complex_parts(data: dict, where: str = "") -> tuple[GradedSpace, GradedMap, int]:
    for key in ("degrees", "N"):
        if key not in data:
            raise FixtureError(f"{where}missing key {key!r}")
    space = parse_space(data["degrees"], f"{where}degrees")
    N = data["N"]
    if not isinstance(N, int) or isinstance(N, bool) or N < 1:
        raise FixtureError(f"{where}N: expected a positive integer")
    d = parse_map(space, data.get("d", {}), 1, f"{where}d")
    return space, d, N


def _pairs(raw, left: GradedSpace, right: GradedSpace, where: str) -> dict:
    if not isinstance(raw, dict):
        raise FixtureError(f"{where}: expected an object")
    out = {}
    for key, img in raw.items():
        pair = _split_pair(key, left, right)
        if pair is None:
            raise FixtureError(f"{where}: cannot read {key!r} as 'label,label'")
        if not isinstance(img, dict):
            raise FixtureError(f"{where}.{key}: expected an object")
        out[pair] = {t: _scalar(c, f"{where}.{key}.{t}") for t, c in img.items()}
    return out


def _split_pair(key: str, left: GradedSpace, right: GradedSpace):
    # labels may themselves contain commas, so try every split point
    for pos, ch in enumerate(key):
        if ch == "," and key[:pos] in left and key[pos + 1:] in right:
            return key[:pos], key[pos + 1:]
    return None


def complex_from_json(data: dict) -> NComplex:
    space, d, N = parse_complex_parts(data)
    return NComplex(space, d, N)


def algebra_from_json(data: dict) -> NDga:
    C = complex_from_json(data)
    product = _pairs(data.get("product", {}), C.space, C.space, "product")
    unit = data.get("unit")
    try:
        return NDga(C, product, unit)
    except KeyError as exc:
        raise FixtureError(f"product: {exc.args[0]}") from None


def module_from_json(data: dict) -> Kdgm:
    A = algebra_from_json(data["algebra"])
    M = complex_from_json(data["module"])
    action = _pairs(data.get("action", {}), A.space, M.space, "action")
    try:
        return Kdgm(A, M, action)
    except KeyError as exc:
        raise FixtureError(f"action: {exc.args[0]}") from None


def from_data(data: dict):
    kind = fixture_kind(data)
    if kind == "map":
        raise FixtureError("a lone map needs a space; load it with map_from_json")
    return {"complex": complex_from_json, "algebra": algebra_from_json,
            "module": module_from_json, "graph": graph_from_json}[kind](data)


def load(path):
    return from_data(read_json(path))


def load_text(text: str):
    return from_data(parse_json(text))


# export -------------------------------------------------------------------

def _images_json(f: GradedMap) -> dict:
    return {src: {tgt: format_scalar(c) for tgt, c in img.items()}
            for src, img in f.images().items()}


def complex_to_json(C: NComplex) -> dict:
    return {"degrees": {str(k): list(v) for k, v in C.space.components.items()},
            "d": _images_json(C.d),
            "N": C.N}


def algebra_to_json(A: NDga) -> dict:
    out = complex_to_json(A.complex)
    out["product"] = {f"{x},{y}": {z: format_scalar(c) for z, c in img.items()}
                      for (x, y), img in A.product.items()}
    if A.unit is not None:
        out["unit"] = A.unit
    return out


def module_to_json(M: Kdgm) -> dict:
    return {"algebra": algebra_to_json(M.algebra),
            "module": complex_to_json(M.module_complex),
            "action": {f"{a},{m}": {z: format_scalar(c) for z, c in img.items()}
                       for (a, m), img in M.action.items()}}


def to_json(obj) -> dict:
    if isinstance(obj, Kdgm):
        return module_to_json(obj)
    if isinstance(obj, NDga):
        return algebra_to_json(obj)
    if isinstance(obj, NComplex):
        return complex_to_json(obj)
    if isinstance(obj, GradedMap):
        return {"degree": obj.degree, "map": _images_json(obj)}
    raise TypeError(f"cannot export {type(obj).__name__}")


def dumps(obj) -> str:
    return json.dumps(to_json(obj), indent=2, ensure_ascii=False)


def map_from_json(space: GradedSpace, data: dict, where: str = "map") -> GradedMap:
    degree = data.get("degree", 1)
    if not isinstance(degree, int):
        raise FixtureError(f"{where}: degree must be an integer")
    return parse_map(space, data.get("map", {}), degree, where)


def graph_from_json(data: dict) -> WeightedDigraph:
    edges = data.get("edges")
    if not isinstance(edges, list):
        raise FixtureError("edges: expected a list")
    out = []
    for k, e in enumerate(edges):
        if not isinstance(e, dict) or not {"from", "to"} <= set(e):
            raise FixtureError(f"edges[{k}]: need 'from' and 'to'")
        out.append((str(e["from"]), str(e["to"]), _scalar(e.get("weight", "1"), f"edges[{k}].weight")))
    return WeightedDigraph.from_edges(out)
