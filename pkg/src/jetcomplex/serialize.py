"""JSON and plain-text rendering of command payloads.

JSON documents carry ``schema_version``, the command, the shape and a
payload. Counts are decimal strings. Each command's text form is driven by
the same field table as its parser, so ``parse_text(render_text(p)) == p``.
"""
from __future__ import annotations

import json

from .errors import DomainError
from .facets import FacetProfile
from .grid import GridShape, Layer, Vertex
from .ideal import FAMILY_TAGS, Generators

SCHEMA_VERSION = "1"


def vertex_json(v: Vertex) -> dict:
    return {"layer": v.layer.symbol, "row": v.row, "col": v.col}


def vertex_from_json(obj: dict) -> Vertex:
    layer = {"x": Layer.X, "y": Layer.Y}[obj["layer"]]
    return Vertex(layer, int(obj["row"]), int(obj["col"]))


def vertex_list_json(vs) -> list[dict]:
    return [vertex_json(v) for v in sorted(vs)]


def profile_json(p: FacetProfile) -> dict:
    return {
        "mu": list(p.mu),
        "x_path": p.x_path.steps,
        "y_upper": p.y_upper.steps,
        "y_lower": p.y_lower.steps,
    }


def facet_json(p: FacetProfile, profile: bool = False) -> dict:
    out = {"vertices": vertex_list_json(p.vertices)}
    if profile:
        out["profile"] = profile_json(p)
    return out


def generators_payload(gens: Generators) -> dict:
    return {
        "families": {fam.tag: [vertex_list_json(mono) for mono in fam] for fam in gens.families},
        "counts": {fam.tag: str(len(fam)) for fam in gens.families},
        "total": str(len(gens.merged)),
    }


def document(command: str, shape: GridShape, payload: dict) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "command": command,
        "shape": {"m": shape.m, "n": shape.n},
        "payload": payload,
    }


def dumps(doc: dict) -> str:
    return json.dumps(doc, sort_keys=True, indent=2) + "\n"


# text form

SCHEMAS = {
    "facets": [("count", "count"), ("facets", "facets")],
    "oracle": [
        ("pruned", "bool"),
        ("facet_count", "count"),
        ("faces_by_dim", "count_map"),
        ("facets", "vertex_lists"),
    ],
    "count": [
        ("sum_formula", "count"),
        ("closed_form", "count"),
        ("agree", "bool"),
        ("krull_dimension", "int"),
        ("complex_dimension", "int"),
        ("terms", "count_map"),
    ],
    "check": [
        ("structured_facets", "count"),
        ("oracle_facets", "count"),
        ("equal", "bool"),
        ("missing_from_structured", "vertex_lists"),
        ("missing_from_oracle", "vertex_lists"),
    ],
    "shelling-verify": [
        ("facets", "count"),
        ("pairs_checked", "count"),
        ("shelling_valid", "bool"),
        ("failing_pair", "pair"),
        ("witnesses_validated", "bool"),
        ("witness_pairs", "count"),
        ("witness_cases", "count_map"),
        ("certificates", "certificates"),
    ],
    "hvector": [
        ("facet_count", "count"),
        ("h_vector", "count_list"),
        ("f_vector", "count_list"),
    ],
}

_SECTION_KINDS = {"count_map", "vertex_lists", "facets", "certificates"}


def _fmt_scalar(value) -> str:
    if value is None:
        return "null"
    if isinstance(value, bool):
        return "true" if value else "false"
    return str(value)


def _parse_scalar(kind: str, text: str):
    if text == "null":
        return None
    if kind == "bool":
        return {"true": True, "false": False}[text]
    if kind == "int":
        return int(text)
    if kind == "count":
        return str(int(text))
    if kind == "pair":
        a, b = text.split()
        return [int(a), int(b)]
    if kind == "count_list":
        return [str(int(t)) for t in text.split()]
    raise DomainError(f"unknown scalar kind {kind}")


def _fmt_vertices(vs: list[dict]) -> str:
    return " ".join(str(vertex_from_json(v)) for v in vs)


def _parse_vertices(text: str) -> list[dict]:
    return [vertex_json(Vertex.parse(t)) for t in text.split()]


def _fmt_item(kind: str, item) -> str:
    if kind == "vertex_lists":
        return _fmt_vertices(item)
    if kind == "facets":
        verts = _fmt_vertices(item["vertices"])
        prof = item.get("profile")
        if prof is None:
            return verts
        i, j = prof["mu"]
        steps = [prof[k] or "-" for k in ("x_path", "y_upper", "y_lower")]
        return f"mu={i},{j} x={steps[0]} upper={steps[1]} lower={steps[2]} | {verts}"
    if kind == "certificates":
        return (
            f"later={item['later']} earlier={item['earlier']} "
            f"v={vertex_from_json(item['pivot_vertex'])} "
            f"intermediate={item['intermediate']} case={item['case']}"
        )
    raise DomainError(f"unknown section kind {kind}")


def _parse_item(kind: str, line: str):
    if kind == "vertex_lists":
        return _parse_vertices(line)
    if kind == "facets":
        if "|" not in line:
            return {"vertices": _parse_vertices(line)}
        head, verts = line.split("|", 1)
        fields = dict(tok.split("=", 1) for tok in head.split())
        i, j = fields["mu"].split(",")
        steps = {k: ("" if fields[t] == "-" else fields[t]) for k, t in
                 (("x_path", "x"), ("y_upper", "upper"), ("y_lower", "lower"))}
        return {"vertices": _parse_vertices(verts), "profile": {"mu": [int(i), int(j)], **steps}}
    if kind == "certificates":
        fields = dict(tok.split("=", 1) for tok in line.split())
        return {
            "later": int(fields["later"]),
            "earlier": int(fields["earlier"]),
            "pivot_vertex": vertex_json(Vertex.parse(fields["v"])),
            "intermediate": int(fields["intermediate"]),
            "case": fields["case"],
        }
    raise DomainError(f"unknown section kind {kind}")


def _render_generators(payload: dict) -> str:
    lines = []
    for tag in FAMILY_TAGS:
        lines.append(f"# family {tag}")
        for mono in payload["families"][tag]:
            lines.append("*".join(str(vertex_from_json(v)) for v in mono))
    return "\n".join(lines) + "\n"


def _parse_generators(text: str) -> dict:
    families = {}
    current = None
    for line in text.splitlines():
        if line.startswith("# family "):
            current = line.split()[-1]
            families[current] = []
        elif line.strip():
            families[current].append(_parse_vertices(line.replace("*", " ")))
    distinct = {tuple(json.dumps(v, sort_keys=True) for v in mono) for f in families.values() for mono in f}
    return {
        "families": families,
        "counts": {tag: str(len(ms)) for tag, ms in families.items()},
        "total": str(len(distinct)),
    }


def render_text(command: str, payload: dict) -> str:
    if command == "generators":
        return _render_generators(payload)
    lines = []
    sections = []
    for key, kind in SCHEMAS[command]:
        if key not in payload:
            continue
        value = payload[key]
        if kind in _SECTION_KINDS:
            sections.append((key, kind, value))
        elif kind in ("pair", "count_list") and value is not None:
            lines.append(f"{key}: " + " ".join(str(v) for v in value))
        else:
            lines.append(f"{key}: {_fmt_scalar(value)}")
    for key, kind, value in sections:
        lines.append(f"# {key}")
        if kind == "count_map":
            lines.extend(f"{k} {v}" for k, v in value.items())
        else:
            lines.extend(_fmt_item(kind, item) for item in value)
    return "\n".join(lines) + "\n"


def parse_text(command: str, text: str) -> dict:
    """Rebuild the JSON payload of ``command`` from its text rendering."""
    if command == "generators":
        return _parse_generators(text)
    kinds = dict(SCHEMAS[command])
    out = {}
    section = None
    for line in text.splitlines():
        if not line.strip():
            continue
        if line.startswith("# "):
            section = line[2:].strip()
            kind = kinds[section]
            out[section] = {} if kind == "count_map" else []
        elif section is None:
            key, _, value = line.partition(": ")
            out[key] = _parse_scalar(kinds[key], value.strip())
        elif kinds[section] == "count_map":
            k, v = line.split()
            out[section][k] = str(int(v))
        else:
            out[section].append(_parse_item(kinds[section], line))
    return out
