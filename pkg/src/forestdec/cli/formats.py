"""Instance files: a digraph with an optional decomposition and problem type.

Three text formats are supported and each round-trips losslessly:

* JSON: ``{"vertices": N, "arcs": [{"id", "tail", "head"}], "decomposition"?, "spec"?}``
* edge list: one ``u v`` line per arc (arc ids follow line order), an
  optional third column ``F1``/``F2``, and ``# vertices N`` / ``# spec``
  comment directives.
* DOT: FIRST arcs solid, SECOND arcs dashed; arc ids and parts are kept as
  edge attributes so the file can be read back.
"""

from __future__ import annotations

import enum
import hashlib
import json
import os
import re
import tempfile
from collections.abc import Mapping
from dataclasses import dataclass, field
from pathlib import Path

from ..digraph import ArcId, Digraph, VertexId, build_digraph
from ..errors import ForestDecError, IncompleteLabeling, ParseError
from ..forests import Bound, Decomposition, Family, Part, ProblemSpec, format_bound, parse_bound

PART_NAMES = {Part.FIRST: "F1", Part.SECOND: "F2"}
PART_BY_NAME = {v: k for k, v in PART_NAMES.items()}


class Format(enum.Enum):
    JSON = "json"
    EDGELIST = "edgelist"
    DOT = "dot"


@dataclass(frozen=True)
class InstanceFile:
    """Parsed instance; ``labels`` may be partial until :meth:`decomposition` is called.

    ``vertex_names`` and ``arc_names`` only decorate DOT output.
    """

    digraph: Digraph
    labels: Mapping[ArcId, Part] | None = None
    spec: ProblemSpec | None = None
    vertex_names: Mapping[VertexId, str] = field(default_factory=dict, compare=False)
    arc_names: Mapping[ArcId, str] = field(default_factory=dict, compare=False)

    @classmethod
    def with_decomposition(cls, d: Digraph, dec: Decomposition | None, spec: ProblemSpec | None = None, **names) -> InstanceFile:
        labels = None if dec is None else dict(enumerate(dec.labels))
        return cls(d, labels, spec, **names)

    def decomposition(self) -> Decomposition:
        if self.labels is None:
            raise IncompleteLabeling("the instance carries no decomposition")
        missing = [a for a in range(self.digraph.arc_count) if a not in self.labels]
        if missing:
            raise IncompleteLabeling(f"arcs without a part: {missing[:10]}{' ...' if len(missing) > 10 else ''}")
        return Decomposition(tuple(self.labels[a] for a in range(self.digraph.arc_count)))


def format_for_path(path: str | Path, default: Format = Format.JSON) -> Format:
    suffix = Path(path).suffix.lower()
    if suffix == ".json":
        return Format.JSON
    if suffix in (".dot", ".gv"):
        return Format.DOT
    if suffix in (".txt", ".edges", ".edgelist", ".el"):
        return Format.EDGELIST
    return default


def _spec_tokens(spec: ProblemSpec) -> str:
    return f"{spec.family.value} {format_bound(spec.first)} {format_bound(spec.second)}"


def _parse_spec_tokens(text: str) -> ProblemSpec:
    parts = text.split()
    if len(parts) != 3:
        raise ParseError(f"spec needs family, k and l, got {text!r}")
    try:
        return ProblemSpec(Family(parts[0]), parse_bound(parts[1]), parse_bound(parts[2]))
    except (ValueError, ForestDecError) as exc:
        raise ParseError(f"bad spec {text!r}: {exc}") from None


def _json_bound(b: Bound) -> int | str:
    return "inf" if b == float("inf") else int(b)


def _build(n: int, arcs: list[tuple[int, int]]) -> Digraph:
    try:
        return build_digraph(n, arcs)
    except ForestDecError as exc:
        raise ParseError(str(exc)) from None


# --- JSON -------------------------------------------------------------------------------


def emit_json(inst: InstanceFile) -> str:
    d = inst.digraph
    doc: dict = {
        "vertices": d.vertex_count,
        "arcs": [{"id": a, "tail": t, "head": h} for a, t, h in d.arcs()],
    }
    if inst.labels is not None:
        doc["decomposition"] = {str(a): PART_NAMES[p] for a, p in sorted(inst.labels.items())}
    if inst.spec is not None:
        doc["spec"] = {"family": inst.spec.family.value, "k": _json_bound(inst.spec.first), "l": _json_bound(inst.spec.second)}
    return json.dumps(doc, indent=1, sort_keys=False) + "\n"


def parse_json(text: str) -> InstanceFile:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from None
    if not isinstance(doc, dict) or "vertices" not in doc or "arcs" not in doc:
        raise ParseError("JSON instance needs 'vertices' and 'arcs'")
    try:
        n = int(doc["vertices"])
        entries = sorted(doc["arcs"], key=lambda e: int(e["id"]))
        if [int(e["id"]) for e in entries] != list(range(len(entries))):
            raise ParseError("arc ids must be 0 .. m-1")
        d = _build(n, [(int(e["tail"]), int(e["head"])) for e in entries])
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"malformed arc list: {exc}") from None
    labels = None
    if "decomposition" in doc:
        labels = {}
        for key, name in doc["decomposition"].items():
            try:
                a = int(key)
                labels[a] = PART_BY_NAME[name]
            except (ValueError, KeyError):
                raise ParseError(f"bad decomposition entry {key!r}: {name!r}") from None
            if not 0 <= a < d.arc_count:
                raise ParseError(f"decomposition names unknown arc {a}")
    spec = None
    if "spec" in doc:
        s = doc["spec"]
        try:
            spec = _parse_spec_tokens(f"{s['family']} {s['k']} {s['l']}")
        except (KeyError, TypeError):
            raise ParseError("spec needs 'family', 'k' and 'l'") from None
    return InstanceFile(d, labels, spec)


# --- edge list --------------------------------------------------------------------------


def emit_edgelist(inst: InstanceFile) -> str:
    d = inst.digraph
    lines = [f"# vertices {d.vertex_count}"]
    if inst.spec is not None:
        lines.append(f"# spec {_spec_tokens(inst.spec)}")
    if inst.labels is not None:
        lines.append("# decomposition")
    for a, t, h in d.arcs():
        if inst.labels is not None and a in inst.labels:
            lines.append(f"{t} {h} {PART_NAMES[inst.labels[a]]}")
        else:
            lines.append(f"{t} {h}")
    return "\n".join(lines) + "\n"


def parse_edgelist(text: str) -> InstanceFile:
    n: int | None = None
    spec = None
    arcs: list[tuple[int, int]] = []
    labels: dict[ArcId, Part] = {}
    labelled = False
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            body = line[1:].strip()
            if body.startswith("vertices"):
                try:
                    n = int(body.split()[1])
                except (IndexError, ValueError):
                    raise ParseError(f"line {line_no}: bad vertices directive") from None
            elif body.startswith("spec"):
                spec = _parse_spec_tokens(body[len("spec"):])
            elif body == "decomposition":
                labelled = True
            continue
        tokens = line.split()
        if len(tokens) not in (2, 3):
            raise ParseError(f"line {line_no}: expected 'u v' or 'u v F1|F2', got {line!r}")
        try:
            arcs.append((int(tokens[0]), int(tokens[1])))
        except ValueError:
            raise ParseError(f"line {line_no}: vertex ids must be integers") from None
        if len(tokens) == 3:
            if tokens[2] not in PART_BY_NAME:
                raise ParseError(f"line {line_no}: part must be F1 or F2, got {tokens[2]!r}")
            labels[len(arcs) - 1] = PART_BY_NAME[tokens[2]]
    if n is None:
        n = 1 + max((max(t, h) for t, h in arcs), default=-1)
    return InstanceFile(_build(n, arcs), labels if labels or labelled else None, spec)


# --- DOT --------------------------------------------------------------------------------


def _quote(text: str) -> str:
    return '"' + text.replace("\\", "\\\\").replace('"', '\\"') + '"'


def emit_dot(inst: InstanceFile) -> str:
    d = inst.digraph
    lines = ["digraph forestdec {"]
    directives = []
    if inst.spec is not None:
        directives.append("spec " + _spec_tokens(inst.spec))
    if inst.labels is not None:
        directives.append("decomposition")
    if directives:
        lines.append(f"  graph [comment={_quote('; '.join(directives))}];")
    for v in d.vertices:
        name = inst.vertex_names.get(v)
        attrs = f" [label={_quote(name)}, shape=box]" if name else ""
        lines.append(f"  {v}{attrs};")
    for a, t, h in d.arcs():
        attrs = [f"id={a}"]
        if inst.labels is not None and a in inst.labels:
            part = inst.labels[a]
            attrs.append(f"part={PART_NAMES[part]}")
            attrs.append("style=solid" if part is Part.FIRST else "style=dashed")
        if a in inst.arc_names:
            attrs.append(f"label={_quote(inst.arc_names[a])}")
            attrs.append("penwidth=2")
        lines.append(f"  {t} -> {h} [{', '.join(attrs)}];")
    lines.append("}")
    return "\n".join(lines) + "\n"


_ATTR = re.compile(r'(\w+)\s*=\s*("(?:[^"\\]|\\.)*"|[^,\]\s]+)')
_EDGE = re.compile(r"^(\d+)\s*->\s*(\d+)\s*(?:\[(.*)\])?\s*;?$")
_NODE = re.compile(r"^(\d+)\s*(?:\[(.*)\])?\s*;?$")
_GRAPH = re.compile(r"^graph\s*\[(.*)\]\s*;?$")


def _attrs(text: str | None) -> dict[str, str]:
    if not text:
        return {}
    out = {}
    for key, value in _ATTR.findall(text):
        if value.startswith('"'):
            value = value[1:-1].replace('\\"', '"').replace("\\\\", "\\")
        out[key] = value
    return out


def parse_dot(text: str) -> InstanceFile:
    """Read the DOT dialect written by :func:`emit_dot`: one statement per line."""
    body = text.strip()
    if not body.startswith("digraph") or not body.endswith("}"):
        raise ParseError("DOT input must be a single 'digraph { ... }' block")
    lines = body[body.index("{") + 1 : -1].splitlines()
    n = 0
    spec = None
    labelled = False
    edges: list[tuple[int | None, int, int, dict[str, str]]] = []
    for line_no, raw in enumerate(lines, start=2):
        line = raw.strip()
        if not line or line.startswith("//"):
            continue
        if m := _GRAPH.match(line):
            for directive in _attrs(m.group(1)).get("comment", "").split(";"):
                directive = directive.strip()
                if directive.startswith("spec "):
                    spec = _parse_spec_tokens(directive[5:])
                elif directive == "decomposition":
                    labelled = True
        elif m := _EDGE.match(line):
            attrs = _attrs(m.group(3))
            arc_id = int(attrs["id"]) if "id" in attrs else None
            t, h = int(m.group(1)), int(m.group(2))
            n = max(n, t + 1, h + 1)
            edges.append((arc_id, t, h, attrs))
        elif m := _NODE.match(line):
            n = max(n, int(m.group(1)) + 1)
        else:
            raise ParseError(f"line {line_no}: unsupported DOT statement {line!r}")
    ids = [e[0] if e[0] is not None else i for i, e in enumerate(edges)]
    if sorted(ids) != list(range(len(edges))):
        raise ParseError("edge ids must be 0 .. m-1")
    ordered = sorted(zip(ids, edges))
    d = _build(n, [(t, h) for _, (_, t, h, _) in ordered])
    labels: dict[ArcId, Part] = {}
    for a, (_, _, _, attrs) in ordered:
        if "part" in attrs:
            if attrs["part"] not in PART_BY_NAME:
                raise ParseError(f"arc {a}: part must be F1 or F2")
            labels[a] = PART_BY_NAME[attrs["part"]]
        elif attrs.get("style") in ("solid", "dashed"):
            labels[a] = Part.FIRST if attrs["style"] == "solid" else Part.SECOND
    return InstanceFile(d, labels if labels or labelled else None, spec)


# --- dispatch ---------------------------------------------------------------------------


_EMIT = {Format.JSON: emit_json, Format.EDGELIST: emit_edgelist, Format.DOT: emit_dot}
_PARSE = {Format.JSON: parse_json, Format.EDGELIST: parse_edgelist, Format.DOT: parse_dot}


def emit(inst: InstanceFile, fmt: Format) -> str:
    return _EMIT[fmt](inst)


def parse(text: str, fmt: Format) -> InstanceFile:
    return _PARSE[fmt](text)


def read_instance(path: str | Path, fmt: Format | None = None) -> InstanceFile:
    return parse(Path(path).read_text(), fmt or format_for_path(path))


def digest(d: Digraph) -> str:
    """SHA-256 of the canonical JSON form of the bare digraph."""
    return hashlib.sha256(emit_json(InstanceFile(d)).encode()).hexdigest()


def write_atomic(path: str | Path, text: str) -> None:
    """Write through a temporary file in the same directory, then rename."""
    target = Path(path)
    target.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=target.parent, prefix=f".{target.name}.", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", newline="\n") as fh:
            fh.write(text)
        os.replace(tmp, target)
    except BaseException:
        Path(tmp).unlink(missing_ok=True)
        raise
