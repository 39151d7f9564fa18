"""SVG rendering of the three triadas of Malevich squares of a qutrit state."""

from __future__ import annotations

import xml.etree.ElementTree as ET

from .geometry import QutritTriadas, TriadaGeometry

SVG_NS = "http://www.w3.org/2000/svg"

FILLS = ("#000000", "#c8102e", "#ffffff")
STROKE = "#000000"
MARGIN = 20.0
GAP = 10.0
LABEL_HEIGHT = 16.0
FONT_SIZE = 11.0


def fmt_label(x: float) -> str:
    """Visible numeric labels use 6 significant digits."""
    return format(x, ".6g")


def _panel_width(t: TriadaGeometry, scale: float) -> float:
    return sum(t.sides) * scale + GAP * (len(t.sides) - 1)


def render_triadas_svg(triadas: QutritTriadas, scale: float = 100.0) -> str:
    """Draw each triada as three squares in a row, panels side by side.

    Square side lengths are ``L * scale`` in SVG user units. Every square
    carries its exact length in a ``data-length`` attribute (``repr``
    precision) next to a visible 6-significant-digit label, and every
    panel states its area sum ``S`` the same way.
    """
    if not scale > 0:
        raise ValueError("scale must be positive")
    widths = [_panel_width(t, scale) for t in triadas]
    tallest = max(max(t.sides) for t in triadas) * scale
    width = 2 * MARGIN + sum(widths) + 2 * GAP * (len(widths) - 1)
    height = 2 * MARGIN + tallest + 3 * LABEL_HEIGHT

    root = ET.Element(
        "svg",
        {
            "xmlns": SVG_NS,
            "version": "1.1",
            "width": f"{width:.3f}",
            "height": f"{height:.3f}",
            "viewBox": f"0 0 {width:.3f} {height:.3f}",
            "data-scale": repr(float(scale)),
        },
    )
    ET.SubElement(root, "title").text = "Three triadas of Malevich squares"

    baseline = MARGIN + tallest
    x0 = MARGIN
    for k, (t, panel_width) in enumerate(zip(triadas, widths), start=1):
        group = ET.SubElement(
            root,
            "g",
            {"class": "triada", "id": f"triada-{k}", "data-area-sum": repr(t.area_sum)},
        )
        x = x0
        for n, (side, fill) in enumerate(zip(t.sides, FILLS), start=1):
            size = side * scale
            ET.SubElement(
                group,
                "rect",
                {
                    "class": "square",
                    "x": f"{x:.6f}",
                    "y": f"{baseline - size:.6f}",
                    "width": f"{size:.6f}",
                    "height": f"{size:.6f}",
                    "fill": fill,
                    "stroke": STROKE,
                    "stroke-width": "1",
                    "data-side": str(n),
                    "data-length": repr(side),
                },
            )
            label = ET.SubElement(
                group,
                "text",
                {
                    "class": "side-label",
                    "x": f"{x:.6f}",
                    "y": f"{baseline + LABEL_HEIGHT:.6f}",
                    "font-size": f"{FONT_SIZE:g}",
                    "data-side": str(n),
                    "data-length": repr(side),
                },
            )
            label.text = f"L{n}={fmt_label(side)}"
            x += size + GAP
        s_label = ET.SubElement(
            group,
            "text",
            {
                "class": "sum-label",
                "x": f"{x0:.6f}",
                "y": f"{baseline + 2.5 * LABEL_HEIGHT:.6f}",
                "font-size": f"{FONT_SIZE:g}",
                "data-area-sum": repr(t.area_sum),
            },
        )
        s_label.text = f"qubit {k}: S={fmt_label(t.area_sum)}"
        x0 += panel_width + 2 * GAP

    ET.indent(root)
    return '<?xml version="1.0" encoding="UTF-8" standalone="no"?>\n' + ET.tostring(
        root, encoding="unicode"
    ) + "\n"


def parse_side_labels(svg_text: str) -> list[tuple[float, float, float]]:
    """Read back the side lengths of every triada from rendered SVG."""
    root = ET.fromstring(svg_text)
    out = []
    for group in root.iter(f"{{{SVG_NS}}}g"):
        labels = [
            el for el in group.iter(f"{{{SVG_NS}}}text") if el.get("class") == "side-label"
        ]
        labels.sort(key=lambda el: int(el.get("data-side")))
        out.append(tuple(float(el.get("data-length")) for el in labels))
    return out
