"""
ASCII and SVG drawings of chess Ferrers graphs, Castelnuovo column diagrams
and signed label arrays.

ASCII documents use `#` for black squares and `.` for white ones; the
label array uses `+` and `-`. Lines carry no trailing whitespace and every
document ends with a newline. An empty diagram is a single comment line.
"""

from typing import Callable, Optional, Union

from .models import CastelnuovoPoly, Cell, Partition, RenderSpec
from .partition import cells

BLACK = "#000000"
WHITE = "#ffffff"
EMPTY_COMMENT = "empty diagram"
SVG_NS = "http://www.w3.org/2000/svg"

WriterF = Callable[[str], object]


def escape_attr(val: Union[str, int, float]) -> str:
    if isinstance(val, str):
        return val.replace("&", "&amp;").replace("'", "&apos;").replace('"', "&quot;")
    if isinstance(val, int):
        return str(val)
    return f"{val:g}"


def escape_text(val: str) -> str:
    return escape_attr(val).replace("<", "&lt;")


class SvgElement:
    """
    One SVG node. Attributes are written in sorted order so output is stable.
    """

    def __init__(self, name: str, attrs: Optional[dict] = None, text: Optional[str] = None):
        self.name = name
        self.attrs = attrs or {}
        self.children: list[Union["SvgElement", "Comment", str]] = [text] if text else []

    def add(self, child: Union["SvgElement", "Comment"]) -> Union["SvgElement", "Comment"]:
        self.children.append(child)
        return child

    def write_svg(self, write: WriterF) -> None:
        write(f"<{self.name}")
        for name, value in sorted(self.attrs.items()):
            write(f' {name}="{escape_attr(value)}"')
        if not self.children:
            write("/>\n")
            return
        write(">")
        if self.name in ("g", "svg"):
            write("\n")
        for child in self.children:
            if isinstance(child, (SvgElement, Comment)):
                child.write_svg(write)
            else:
                write(escape_text(child))
        write(f"</{self.name}>\n")


class Comment:
    def __init__(self, text: str):
        self.text = text

    def write_svg(self, write: WriterF) -> None:
        write(f"<!-- {self.text} -->\n")


def _svg_document(width: int, height: int, body: list) -> str:
    root = SvgElement(
        "svg",
        {
            "xmlns": SVG_NS,
            "version": "1.1",
            "width": width,
            "height": height,
            "viewBox": f"0 0 {width} {height}",
        },
    )
    for element in body:
        root.add(element)
    chunks = ['<?xml version="1.0" encoding="UTF-8"?>\n']
    root.write_svg(chunks.append)
    return "".join(chunks)


def _rect(x: int, y: int, size: int, black: bool) -> SvgElement:
    return SvgElement(
        "rect",
        {
            "x": x,
            "y": y,
            "width": size,
            "height": size,
            "fill": BLACK if black else WHITE,
            "stroke": BLACK,
            "stroke-width": 1,
        },
    )


def _label(x: int, y: int, size: int, positive: bool) -> SvgElement:
    # Label text takes the opposite colour of its square
    return SvgElement(
        "text",
        {
            "x": x + size // 2,
            "y": y + size // 2,
            "fill": WHITE if positive else BLACK,
            "font-family": "monospace",
            "font-size": max(size // 2, 2),
            "text-anchor": "middle",
            "dominant-baseline": "central",
        },
        text="+" if positive else "-",
    )


def _bottom_up(height: int, rects: list[SvgElement]) -> SvgElement:
    """Group whose row 0 sits at the bottom of a picture `height` pixels tall."""
    group = SvgElement("g", {"transform": f"translate(0 {height}) scale(1 -1)"})
    for rect in rects:
        group.add(rect)
    return group


def _empty(spec: RenderSpec) -> str:
    if spec.format == "svg":
        return _svg_document(0, 0, [Comment(EMPTY_COMMENT)])
    return f"// {EMPTY_COMMENT}\n"


def _ascii_lines(rows: list[str]) -> str:
    return "".join(row.rstrip() + "\n" for row in rows)


def _cell_char(cell: Cell, labels: bool) -> str:
    if labels:
        return "+" if cell.is_black else "-"
    return "#" if cell.is_black else "."


def render_ferrers(la: Partition, spec: RenderSpec) -> str:
    """
    Draw a partition as a chess Ferrers graph or as a signed label array.

    Args:
        la (Partition): The partition
        spec (RenderSpec): style ferrers or problem10, ascii or svg

    Returns:
        str: The document. Ferrers style puts row 0 (the largest part) at the
        bottom; problem10 style puts it at the top with a `+` in the corner.
    """
    if spec.style not in ("ferrers", "problem10"):
        raise ValueError(f"render_ferrers draws ferrers or problem10 style, not {spec.style}")
    if la.length == 0:
        return _empty(spec)

    top_down = spec.style == "problem10"
    labels = top_down and spec.show_labels
    if spec.format == "ascii":
        grid = [[""] * part for part in la.parts]
        for cell in cells(la):
            grid[cell.row][cell.col] = _cell_char(cell, labels)
        rows = ["".join(row) for row in grid]
        return _ascii_lines(rows if top_down else rows[::-1])

    size = spec.cell_size
    width, height = la.part(1) * size, la.length * size
    rects, texts = [], []
    for cell in cells(la):
        x, y = cell.col * size, cell.row * size
        rects.append(_rect(x, y, size, cell.is_black))
        if labels:
            texts.append(_label(x, y, size, cell.is_black))
    if top_down:
        return _svg_document(width, height, rects + texts)
    return _svg_document(width, height, [_bottom_up(height, rects)])


def render_castelnuovo(s: CastelnuovoPoly, spec: RenderSpec) -> str:
    """
    Draw a Castelnuovo function as columns of s(m) squares, black on even m.
    """
    if spec.style != "castelnuovo":
        raise ValueError(f"render_castelnuovo draws castelnuovo style, not {spec.style}")
    if s.is_zero():
        return _empty(spec)

    tallest = max(s.coeffs)
    if spec.format == "ascii":
        rows = []
        for level in range(tallest, 0, -1):
            rows.append(
                "".join(
                    ("#" if m % 2 == 0 else ".") if coeff >= level else " "
                    for m, coeff in enumerate(s.coeffs)
                )
            )
        return _ascii_lines(rows)

    size = spec.cell_size
    width, height = len(s) * size, tallest * size
    rects = [
        _rect(m * size, level * size, size, m % 2 == 0)
        for m, coeff in enumerate(s.coeffs)
        for level in range(coeff)
    ]
    return _svg_document(width, height, [_bottom_up(height, rects)])
