"""Text format for networks.

    vertices v1 v2 v3 v4
    rel t1 : v1 v2 -> v3
    rel t2 : v3 -> v4

One declaration per line, '#' starts a comment.
"""

from pathlib import Path

from src.network.model import NetworkParseError, validate_network


def _parse_relation(body, line_no):
    if ":" not in body:
        raise NetworkParseError(line_no, "expected 'rel NAME : SOURCE... -> RANGE...'")
    name, _, ends = body.partition(":")
    name = name.strip()
    if not name or len(name.split()) != 1:
        raise NetworkParseError(line_no, f"bad relation name {name!r}")
    if ends.count("->") != 1:
        raise NetworkParseError(line_no, f"relation '{name}' needs exactly one '->'")
    source, _, target = ends.partition("->")
    return {
        "name": name,
        "source": source.split(),
        "range": target.split(),
        "line": line_no,
    }


def parse_network_text(text, name=""):
    vertices = []
    relations = []
    for line_no, raw_line in enumerate(text.splitlines(), start=1):
        line = raw_line.split("#", 1)[0].strip()
        if not line:
            continue
        keyword, *rest = line.split(None, 1)
        body = rest[0] if rest else ""
        if keyword == "vertices":
            vertices.extend(body.split())
        elif keyword == "rel":
            relations.append(_parse_relation(body, line_no))
        else:
            raise NetworkParseError(line_no, f"unknown declaration '{keyword}'")
    return validate_network({"vertices": vertices, "relations": relations}, name=name)


def load_network(path):
    path = Path(path)
    return parse_network_text(path.read_text(encoding="utf-8"), name=path.stem)


def format_network(n):
    lines = [f"vertices {' '.join(n.vertices)}"]
    lines.extend(f"rel {rel}" for rel in n.relations)
    return "\n".join(lines) + "\n"
