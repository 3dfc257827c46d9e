"""Line-oriented record files shared by the CLI and the table caches.

A record document starts with a schema header line, may contain comment
lines starting with "#", and otherwise holds one tab-separated record per
line.
"""

from __future__ import annotations

RECORDS_HEADER = "bartab-records v1"


def document(comment: str, lines: list[str]) -> str:
    out = [RECORDS_HEADER, f"# {comment}"]
    out.extend(lines)
    return "\n".join(out) + "\n"


def body_lines(text: str) -> list[str]:
    """Record lines of a document, after validating the schema header."""
    lines = text.splitlines()
    if not lines or lines[0] != RECORDS_HEADER:
        raise ValueError(f"missing schema header {RECORDS_HEADER!r}")
    return [ln for ln in lines[1:] if ln.strip() and not ln.startswith("#")]
