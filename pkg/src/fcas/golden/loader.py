"""Read the checked-in canonical-text golden files."""

from __future__ import annotations

from importlib import resources

from ..poly import Polynomial, VarTable, parse


def _filename(name: str) -> str:
    return name.replace(".", "_") + ".txt"


def load_golden_texts(table: VarTable) -> dict[str, Polynomial]:
    """Parse every golden .txt file in this package over the given table."""
    out: dict[str, Polynomial] = {}
    root = resources.files(__package__)
    for entry in sorted(root.iterdir(), key=lambda e: e.name):
        if not entry.name.endswith(".txt"):
            continue
        name = entry.name[:-4].replace("_", ".")
        body = []
        for line in entry.read_text().splitlines():
            if line.startswith("#") or not line.strip():
                continue
            body.append(line.strip())
        out[name] = parse(" ".join(body), table)
    return out
