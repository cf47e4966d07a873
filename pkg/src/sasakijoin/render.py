"""Report rendering: JSON documents, the scan CSV table, and the SVG diagram.

Every number in a JSON document carries its exact rational string plus a
display-only decimal.  Output text is deterministic for identical inputs: keys
are sorted, floats are fixed-format, and no timestamps appear anywhere.
"""

import json
from fractions import Fraction

from ._version import __version__
from .exactmath import decimal_str, format_rational


def number_field(value):
    value = Fraction(value)
    return {"exact": format_rational(value), "decimal": decimal_str(value)}


def poly_field(poly):
    return {
        "degree": poly.degree,
        "coefficients_low_to_high": [number_field(c) for c in poly.coeffs],
    }


def root_field(root):
    out = {
        "lo": number_field(root.lo),
        "hi": number_field(root.hi),
        "certificate": root.multiplicity_note,
    }
    out["exact_value"] = (None if root.exact_value is None
                          else number_field(root.exact_value))
    return out


def setup_field(setup):
    return {
        "d": setup.d,
        "a": number_field(setup.a),
        "g2": setup.genus_g2,
        "k": setup.degree_k,
        "s": number_field(setup.s),
        "x": number_field(setup.x),
        "p": setup.p,
    }


def _bracket_field(bracket):
    lo, hi = bracket
    return {"lo": number_field(lo), "hi": number_field(hi)}


def region_field(region):
    return {"left": _bracket_field(region.left), "right": _bracket_field(region.right)}


def _document(command):
    return {
        "schema": 1,
        "generator": {"name": "sasakijoin", "version": __version__},
        "command": command,
    }


def profile_document(setup, prof, extremal, condition_value):
    doc = _document("profile")
    doc.update({
        "setup": setup_field(setup),
        "c": number_field(prof.c),
        "F": poly_field(prof.F),
        "A1": number_field(prof.A1),
        "A2": number_field(prof.A2),
        "extremal": extremal,
        "cscS": prof.A1 - prof.c * prof.A2 == 0,
        "csc_condition": number_field(condition_value),
    })
    return doc


def roots_document(setup, width, roots):
    doc = _document("csc-roots")
    doc.update({
        "setup": setup_field(setup),
        "width": number_field(width),
        "roots": [root_field(r) for r in roots],
    })
    return doc


def scan_document(report):
    doc = _document("scan")
    doc.update({
        "setup": setup_field(report.setup),
        "boundary_width": number_field(report.boundary_width),
        "connectivity": report.connectivity,
        "rays": [
            {
                "c": number_field(r.c),
                "extremal": r.extremal,
                "cscS": r.cscS,
                "F": poly_field(r.F),
            }
            for r in report.rays
        ],
        "extremal_intervals": [region_field(r) for r in report.extremal_intervals],
        "moats": [region_field(r) for r in report.moats],
        "csc_rays": [
            {
                "root": root_field(entry.root),
                "genuine": entry.genuine,
                "contested": entry.contested,
            }
            for entry in report.csc_rays
        ],
        "slope_map": [
            {"c": number_field(c), "slope": number_field(m)}
            for c, m in report.slope_map
        ],
    })
    return doc


def twins_document(setup, report):
    doc = _document("twins")
    partners = (report.partners if isinstance(report.partners, str)
                else [number_field(c) for c in report.partners])
    doc.update({
        "setup": setup_field(setup),
        "base_c": number_field(report.base_c),
        "partners": partners,
        "shared_F": poly_field(report.shared_F),
        "unresolved": [root_field(r) for r in report.unresolved],
    })
    return doc


def toric_document(n, lam, l, result):
    doc = _document("toric")
    doc.update({
        "n": n,
        "lambda": number_field(lam),
        "l": l,
        "solutions": [
            {"v": number_field(sol["v"]), "admissible": sol["admissible"]}
            for sol in result["solutions"]
        ],
        "any_admissible": result["any_admissible"],
    })
    return doc


def join_document(spec, smooth, vectors, dims=None):
    doc = _document("join")
    doc.update({
        "l1": spec.l1,
        "l2": spec.l2,
        "order1": spec.order1,
        "order2": spec.order2,
        "smooth": smooth,
        "vectors": {
            "reeb": [number_field(v) for v in vectors["reeb"]],
            "lvec": [number_field(v) for v in vectors["lvec"]],
            "contact": list(vectors["contact"]),
        },
    })
    if dims is not None:
        dim1, dim2, total = dims
        doc["cone_dim"] = {"dim1": dim1, "dim2": dim2, "join": total}
    return doc


def reproduce_document(results):
    doc = _document("reproduce")
    doc.update({
        "ok": all(r["ok"] for r in results),
        "checks": results,
    })
    return doc


def dump_json(doc):
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def scan_csv(report):
    lines = ["c_num,c_den,extremal,cscS,F_coeffs"]
    for ray in report.rays:
        coeffs = ";".join(format_rational(c) for c in ray.F.coeffs)
        lines.append(f"{ray.c.numerator},{ray.c.denominator},"
                     f"{str(ray.extremal).lower()},{str(ray.cscS).lower()},{coeffs}")
    return "\n".join(lines) + "\n"


# --- SVG cone diagram -------------------------------------------------------

_SIDE = 340.0
_MARGIN = 40.0


def _fmt(v):
    return f"{float(v):.3f}"


def _edge_point(slope_value):
    """Intersection of the ray of given slope with the plot-square boundary."""
    if slope_value is None:  # vertical edge (c -> -1)
        return (0.0, _SIDE)
    m = float(slope_value)
    if m <= 1.0:
        return (_SIDE, _SIDE * m)
    return (_SIDE / m, _SIDE)


def _to_px(point):
    x, y = point
    return (_MARGIN + x, _MARGIN + _SIDE - y)


def _line(p1, p2, style):
    (x1, y1), (x2, y2) = _to_px(p1), _to_px(p2)
    return (f'<line x1="{_fmt(x1)}" y1="{_fmt(y1)}" x2="{_fmt(x2)}" '
            f'y2="{_fmt(y2)}" {style}/>')


def _bracket_slope(bracket):
    lo, hi = bracket
    if lo == hi == -1:
        return None  # vertical
    if lo == hi == 1:
        return Fraction(0)
    mid = (lo + hi) / 2
    return (1 - mid) / (1 + mid)


def _wedge_path(slope_hi, slope_lo):
    """Polygon from the origin sweeping from the steeper to the flatter ray."""
    points = [(0.0, 0.0), _edge_point(slope_hi)]
    hi_steep = slope_hi is None or float(slope_hi) > 1.0
    lo_flat = slope_lo is not None and float(slope_lo) < 1.0
    if hi_steep and lo_flat:
        points.append((_SIDE, _SIDE))
    points.append(_edge_point(slope_lo))
    px = " ".join(f"{_fmt(x)},{_fmt(y)}" for x, y in (_to_px(pt) for pt in points))
    return px


def scan_svg(report):
    parts = [
        '<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        'viewBox="0 0 420 420" width="420" height="420">',
        '<rect x="0" y="0" width="420" height="420" fill="#ffffff"/>',
    ]
    # moat wedges first so rays draw on top
    for moat in report.moats:
        slope_hi = _bracket_slope(moat.left)   # smaller c -> steeper ray
        slope_lo = _bracket_slope(moat.right)
        parts.append(f'<polygon points="{_wedge_path(slope_hi, slope_lo)}" '
                     'fill="#d9d9d9" stroke="none"/>')
    # cone edges: the vertical (c -> -1) and horizontal (c -> 1) boundary rays
    edge_style = 'stroke="#000000" stroke-width="1.5"'
    parts.append(_line((0.0, 0.0), (0.0, _SIDE), edge_style))
    parts.append(_line((0.0, 0.0), (_SIDE, 0.0), edge_style))
    # sampled rays
    for (c, m), ray in zip(report.slope_map, report.rays):
        color = "#5588cc" if ray.extremal else "#bbbbbb"
        parts.append(_line((0.0, 0.0), _edge_point(m),
                           f'stroke="{color}" stroke-width="0.6"'))
    # cscS rays on top, labeled
    for entry in report.csc_rays:
        root = entry.root
        value = root.exact_value if root.exact_value is not None else root.midpoint
        m = (1 - value) / (1 + value)
        end = _edge_point(m)
        if entry.contested:
            style = 'stroke="#cc8800" stroke-width="2" stroke-dasharray="2,2"'
        elif entry.genuine:
            style = 'stroke="#117733" stroke-width="2"'
        else:
            style = 'stroke="#cc3311" stroke-width="2" stroke-dasharray="6,3"'
        parts.append(_line((0.0, 0.0), end, style))
        ex, ey = _to_px(end)
        parts.append(f'<circle cx="{_fmt(ex)}" cy="{_fmt(ey)}" r="3" '
                     f'fill="{"#117733" if entry.genuine else "#cc3311"}"/>')
        parts.append(f'<text x="{_fmt(ex + 4)}" y="{_fmt(ey - 4)}" '
                     f'font-size="10" font-family="sans-serif">'
                     f'c={_fmt(value)}</text>')
    # legend
    legend = [
        ("#5588cc", "extremal ray"),
        ("#bbbbbb", "non-extremal ray"),
        ("#117733", "genuine cscS ray"),
        ("#cc3311", "spurious cscS root"),
        ("#d9d9d9", "moat"),
    ]
    y = 18.0
    for color, label in legend:
        parts.append(f'<rect x="252" y="{_fmt(y - 8)}" width="10" height="10" '
                     f'fill="{color}"/>')
        parts.append(f'<text x="266" y="{_fmt(y + 1)}" font-size="10" '
                     f'font-family="sans-serif">{label}</text>')
        y += 14.0
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
