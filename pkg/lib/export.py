"""
Text renderings of wiring diagrams and JSON/DOT exports of seeds.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from xml.sax.saxutils import escape

from lib.config import SCHEMA_VERSION
from lib.ingermanson import IngSeed, build_ing_seed, chamber_monomials
from lib.leclerc import LecSeed, chamber_modules
from lib.perm_core import Permutation, ReducedWord
from lib.prep_modules import Quiver
from lib.shapes import MinorIndex
from lib.wiring import WiringDiagram

FORMATS = ("ascii", "svg")
ANNOTATIONS = ("labels", "monomials", "shapes")
SEED_FORMATS = ("json", "dot")

SVG_STEP = 60  # horizontal space per crossing
SVG_GAP = 40  # vertical space between strand positions
SVG_MARGIN = 40
SVG_LINE = 16  # legend line height


def chamber_notes(d: WiringDiagram, annotations: str = "labels", seed: IngSeed | None = None) -> dict[int, str]:
    """
    One annotation string per chamber.

    Args:
        d: The diagram
        annotations: "labels" for right and left chamber minors, "monomials"
            for the chamber minor in the A_d, "shapes" for the content
            intervals of the chamber module components
        seed: Ingermanson seed to reuse for monomials

    Returns:
        Map from chamber index to its note
    """
    if annotations == "labels":
        return {
            ch.index: f"{MinorIndex(ch.right_v, ch.right_w)} left {MinorIndex(ch.left_v, ch.left_w)}"
            for ch in d.chambers
        }
    if annotations == "monomials":
        seed = seed if seed is not None else build_ing_seed(d)
        return {c: monomial.format("A") for c, monomial in chamber_monomials(seed).items()}
    if annotations == "shapes":
        notes = {}
        for c, entry in chamber_modules(d).items():
            intervals = [f"[{part.contents()[0]}..{part.contents()[-1]}]" for part in entry.components]
            notes[c] = " + ".join(intervals) if intervals else "empty"
        return notes
    raise ValueError(f"Unknown annotations {annotations!r}, expected one of {', '.join(ANNOTATIONS)}")


def _legend(d: WiringDiagram, notes: dict[int, str]) -> list[str]:
    lines = []
    for ch in d.chambers:
        kind = "hollow" if d.is_hollow(ch.index) else "solid"
        frozen = ", frozen" if ch.frozen else ""
        lines.append(f"chi_{ch.index} (h={ch.height}, {kind}{frozen}): {notes[ch.index]}")
    return lines


def _ascii(d: WiringDiagram, notes: dict[int, str]) -> str:
    width = len(str(max(len(d), 1))) + 4
    edge = len(str(d.n))
    lines = []
    for p in range(d.n, 0, -1):
        row = f"{d.w_strand(1, p):>{edge}} "
        for c in range(1, len(d) + 1):
            h = d.height(c)
            if p == h + 1:
                row += "-" * (width - 3) + "\\ /"
            elif p == h:
                row += "-" * (width - 3) + "/ \\"
            else:
                row += "-" * width
        lines.append(row + f"-- {p}")
        if p > 1:
            gap = " " * (edge + 1)
            for c in range(1, len(d) + 1):
                if d.height(c) == p - 1:
                    gap += str(c).rjust(width - 3) + (" o " if d.is_hollow(c) else " X ")
                else:
                    gap += " " * width
            lines.append(gap.rstrip())
    if d.chambers:
        lines.append("")
        lines.extend(_legend(d, notes))
    return "\n".join(lines) + "\n"


def _svg(d: WiringDiagram, notes: dict[int, str]) -> str:
    legend = _legend(d, notes)
    left = SVG_MARGIN
    right = left + max(len(d), 1) * SVG_STEP
    width = right + SVG_MARGIN
    bottom = SVG_MARGIN + (d.n - 1) * SVG_GAP
    height = bottom + SVG_MARGIN + SVG_LINE * len(legend)

    def y(p: int) -> int:
        return SVG_MARGIN + (d.n - p) * SVG_GAP

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}" font-family="monospace" font-size="12">',
        '<g stroke="black" stroke-width="2" fill="none">',
    ]
    if not len(d):
        parts.extend(f'<line x1="{left}" y1="{y(p)}" x2="{right}" y2="{y(p)}"/>' for p in range(1, d.n + 1))
    for c in range(1, len(d) + 1):
        h, x0 = d.height(c), left + (c - 1) * SVG_STEP
        x1 = x0 + SVG_STEP
        for p in range(1, d.n + 1):
            if p not in (h, h + 1):
                parts.append(f'<line x1="{x0}" y1="{y(p)}" x2="{x1}" y2="{y(p)}"/>')
        parts.append(f'<line x1="{x0}" y1="{y(h)}" x2="{x1}" y2="{y(h + 1)}"/>')
        parts.append(f'<line x1="{x0}" y1="{y(h + 1)}" x2="{x1}" y2="{y(h)}"/>')
    parts.append("</g>")

    for c in range(1, len(d) + 1):
        h, x0 = d.height(c), left + (c - 1) * SVG_STEP
        cx, cy = x0 + SVG_STEP // 2, (y(h) + y(h + 1)) // 2
        fill = "white" if d.is_hollow(c) else "black"
        parts.append(f'<circle cx="{cx}" cy="{cy}" r="5" fill="{fill}" stroke="black" stroke-width="2"/>')
        parts.append(f'<text x="{x0 + 4}" y="{cy + 4}">{c}</text>')
    for p in range(1, d.n + 1):
        parts.append(f'<text x="{left - 16}" y="{y(p) + 4}">{d.w_strand(1, p)}</text>')
        parts.append(f'<text x="{right + 6}" y="{y(p) + 4}">{p}</text>')
    for k, line in enumerate(legend):
        parts.append(f'<text x="{left}" y="{bottom + SVG_MARGIN + k * SVG_LINE}">{escape(line)}</text>')
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def render(d: WiringDiagram, format: str = "ascii", annotations: str = "labels",
           seed: IngSeed | None = None) -> str:
    """
    Draw a wiring diagram with strand position 1 at the bottom.

    Solid crossings are marked X (filled in SVG) and hollow ones o (open in
    SVG). Strands carry their right endpoint on the right and the same name
    on the left.
    """
    if format not in FORMATS:
        raise ValueError(f"Unknown format {format!r}, expected one of {', '.join(FORMATS)}")
    notes = chamber_notes(d, annotations, seed)
    return _ascii(d, notes) if format == "ascii" else _svg(d, notes)


@dataclass(frozen=True)
class VariableRecord:
    label: int
    frozen: bool
    rows: tuple[int, ...]
    cols: tuple[int, ...]
    monomial: tuple[tuple[int, int], ...] | None


@dataclass(frozen=True)
class SeedRecord:
    """Construction-independent view of a seed, as exported."""
    construction: str
    n: int
    v: Permutation
    word: ReducedWord
    mask: tuple[int, ...]
    variables: tuple[VariableRecord, ...]
    quiver: Quiver


def seed_record(seed: IngSeed | LecSeed) -> SeedRecord:
    d = seed.diagram
    if isinstance(seed, IngSeed):
        construction = "ingermanson"
        variables = tuple(
            VariableRecord(var.label, var.frozen, var.minor.rows, var.minor.cols, var.monomial.exponents)
            for var in seed.variables
        )
    else:
        construction = "leclerc"
        variables = tuple(
            VariableRecord(var.label, var.frozen, var.minor.rows, var.minor.cols, None)
            for var in seed.variables
        )
    return SeedRecord(construction, d.n, d.v, d.word, tuple(int(b) for b in d.mask.bits), variables, seed.quiver)


def _record_dict(record: SeedRecord) -> dict:
    return {
        "schema": SCHEMA_VERSION,
        "construction": record.construction,
        "n": record.n,
        "v": list(record.v.one_line),
        "word": list(record.word.letters),
        "mask": list(record.mask),
        "variables": [
            {
                "label": var.label,
                "frozen": var.frozen,
                "rows": list(var.rows),
                "cols": list(var.cols),
                "monomial": None if var.monomial is None else [[c, e] for c, e in var.monomial],
            }
            for var in record.variables
        ],
        "quiver": {
            "vertices": list(record.quiver.vertices),
            "frozen": sorted(record.quiver.frozen),
            "arrows": [[i, j, k] for i, j, k in record.quiver.arrows],
        },
    }


def _dot(record: SeedRecord) -> str:
    lines = [f"digraph {record.construction} {{", "  node [shape=circle];"]
    for vertex in record.quiver.vertices:
        shape = "box" if vertex in record.quiver.frozen else "circle"
        lines.append(f'  {vertex} [shape={shape}, label="{vertex}"];')
    for i, j, k in record.quiver.arrows:
        lines.extend(f"  {i} -> {j};" for _ in range(k))
    lines.append("}")
    return "\n".join(lines) + "\n"


def export_seed(seed: IngSeed | LecSeed, format: str = "json") -> str:
    """
    Serialize a seed.

    JSON carries the case, one record per variable (label, frozen, minor rows
    and cols, monomial in left chamber minors or null) and the quiver. DOT
    draws the quiver with frozen vertices boxed, one edge per arrow.
    """
    if format not in SEED_FORMATS:
        raise ValueError(f"Unknown format {format!r}, expected one of {', '.join(SEED_FORMATS)}")
    record = seed_record(seed)
    if format == "dot":
        return _dot(record)
    return json.dumps(_record_dict(record), indent=2, ensure_ascii=False) + "\n"


def load_seed(text: str) -> SeedRecord:
    """Parse a JSON export back into a SeedRecord."""
    data = json.loads(text)
    if data.get("schema") != SCHEMA_VERSION:
        raise ValueError(f"Unsupported schema {data.get('schema')!r}, expected {SCHEMA_VERSION}")
    n = data["n"]
    variables = tuple(
        VariableRecord(
            label=var["label"],
            frozen=var["frozen"],
            rows=tuple(var["rows"]),
            cols=tuple(var["cols"]),
            monomial=None if var["monomial"] is None else tuple((c, e) for c, e in var["monomial"]),
        )
        for var in data["variables"]
    )
    quiver = data["quiver"]
    return SeedRecord(
        construction=data["construction"],
        n=n,
        v=Permutation(tuple(data["v"])),
        word=ReducedWord(tuple(data["word"]), n),
        mask=tuple(data["mask"]),
        variables=variables,
        quiver=Quiver(
            tuple(quiver["vertices"]),
            frozenset(quiver["frozen"]),
            tuple((i, j, k) for i, j, k in quiver["arrows"]),
        ),
    )
