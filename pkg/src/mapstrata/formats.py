"""Text and structured document formats for the CLI surface.

Map-point documents look like::

    # comment
    n 1
    d 2
    field Q          # or Fp:5
    row 1 0 0        # coefficients a_i0 .. a_id, one row per component
    row 0 1 0

Family documents use the same layout with t-polynomial entries (``1+2t^2``,
``-t``, ``3/2``); any entry mentioning t makes the document a family.
Structured output is canonical JSON (sorted keys), so identical runs are
byte-identical.
"""

from __future__ import annotations

import json

from .errors import ParseError
from .fields import QQ, field_by_name
from .resultant import MapPoint
from .tpoly import parse_tpoly
from .wedge import FamilyPoint


def canonical_json(obj):
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def _tokenize(text):
    """Yield (line_number, [(column, token), ...]) for non-empty lines."""
    for ln, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        tokens = []
        col = 0
        for tok in line.split():
            col = line.index(tok, col)
            tokens.append((col + 1, tok))
            col += len(tok)
        if tokens:
            yield ln, tokens


def _parse_document(text):
    header = {}
    rows = []
    for ln, tokens in _tokenize(text):
        key = tokens[0][1]
        if key == "row":
            rows.append((ln, tokens[1:]))
        elif key in ("n", "d", "field"):
            if key in header:
                raise ParseError(f"duplicate key {key!r}", ln, tokens[0][0])
            if len(tokens) != 2:
                raise ParseError(f"key {key!r} takes exactly one value", ln, tokens[0][0])
            header[key] = (ln, tokens[1])
        else:
            raise ParseError(f"unknown key {key!r}", ln, tokens[0][0])
    for key in ("n", "d", "field"):
        if key not in header:
            raise ParseError(f"missing key {key!r}", 1)
    out = {}
    for key in ("n", "d"):
        ln, (col, tok) = header[key]
        if not tok.isdigit() or int(tok) < 1:
            raise ParseError(f"{key} must be a positive integer", ln, col)
        out[key] = int(tok)
    ln, (col, tok) = header["field"]
    try:
        out["field"] = field_by_name(tok)
    except ValueError as exc:
        raise ParseError(str(exc), ln, col) from None
    out["rows"] = rows
    return out


def _check_shape(doc):
    n, d, rows = doc["n"], doc["d"], doc["rows"]
    if len(rows) != n + 1:
        ln = rows[-1][0] if rows else 1
        raise ParseError(f"expected {n + 1} rows, found {len(rows)}", ln)
    for ln, entries in rows:
        if len(entries) != d + 1:
            raise ParseError(
                f"expected {d + 1} coefficients per row, found {len(entries)}",
                ln,
                entries[0][0] if entries else 1,
            )


def parse_map_point(text):
    """Parse a map-point document over Q or F_p."""
    doc = _parse_document(text)
    _check_shape(doc)
    field = doc["field"]
    coeff_rows = []
    for ln, entries in doc["rows"]:
        row = []
        for col, tok in entries:
            try:
                row.append(field.parse(tok))
            except ValueError as exc:
                raise ParseError(str(exc), ln, col) from None
        coeff_rows.append(row)
    if all(not c for row in coeff_rows for c in row):
        raise ParseError("all rows are zero: not a projective point", doc["rows"][0][0])
    return MapPoint.from_rows(coeff_rows, field)


def parse_family(text):
    """Parse a family document (t-polynomial coefficients over Q)."""
    doc = _parse_document(text)
    _check_shape(doc)
    if doc["field"] != QQ:
        raise ParseError("families are supported over Q only", 1)
    coeff_rows = []
    for ln, entries in doc["rows"]:
        row = []
        for col, tok in entries:
            try:
                row.append(parse_tpoly(tok))
            except ValueError as exc:
                raise ParseError(str(exc), ln, col) from None
        coeff_rows.append(row)
    if all(c.is_zero() for row in coeff_rows for c in row):
        raise ParseError("all rows are zero: not a family", doc["rows"][0][0])
    return FamilyPoint.from_rows(coeff_rows)


def document_mentions_t(text):
    """Whether any row coefficient involves the deformation parameter."""
    for _, tokens in _tokenize(text):
        if tokens[0][1] == "row" and any("t" in tok for _, tok in tokens[1:]):
            return True
    return False


def serialize_map_point(point):
    lines = [f"n {point.n}", f"d {point.d}", f"field {point.field.name}"]
    for p in point.polys:
        lines.append("row " + " ".join(point.field.format(c) for c in p.coeffs))
    return "\n".join(lines) + "\n"


def map_point_dict(point):
    return {
        "n": point.n,
        "d": point.d,
        "field": point.field.name,
        "rows": [[point.field.format(c) for c in p.coeffs] for p in point.polys],
    }


def _subset_str(subset):
    return ",".join(map(str, subset))


def serialize_wedge_tuple(wt, valuations=None, field=QQ):
    """The documented wedge-tuple text format: per level, the order, the
    valuation when limits are involved, then one line per coordinate with
    the row/column subsets spelled out."""
    lines = [f"m {wt.m}", f"levels {len(wt.levels)}"]
    for l, vec in enumerate(wt.levels):
        head = f"level {l} order {vec.order} rows {vec.nrows} cols {vec.ncols}"
        if valuations is not None:
            head += f" valuation {valuations[l]}"
        lines.append(head)
        for (R, C), value in zip(vec.index_pairs(), vec.coords):
            lines.append(
                f"minor R {_subset_str(R)} C {_subset_str(C)} {field.format(value)}"
            )
    return "\n".join(lines) + "\n"


def wedge_tuple_dict(wt, valuations=None, field=QQ):
    levels = []
    for l, vec in enumerate(wt.levels):
        entry = {
            "level": l,
            "order": vec.order,
            "rows": vec.nrows,
            "cols": vec.ncols,
            "coords": [
                {"R": list(R), "C": list(C), "value": field.format(v)}
                for (R, C), v in zip(vec.index_pairs(), vec.coords)
            ],
        }
        if valuations is not None:
            entry["valuation"] = valuations[l]
        levels.append(entry)
    return {"m": wt.m, "levels": levels}


def census_text(table):
    """Aligned text table with the checksum row."""
    rows = [("stratum", "count", "product prediction")]
    rows.append(("interior", str(table.counts.get("interior", 0)), "-"))
    for k in range(table.d - 1, -1, -1):
        rows.append(
            (
                f"k={k}",
                str(table.counts.get(k, 0)),
                str(table.product_predictions.get(k, "-")),
            )
        )
    rows.append(("total", str(table.total), f"expected {table.expected_total}"))
    widths = [max(len(r[i]) for r in rows) for i in range(3)]
    lines = ["  ".join(cell.ljust(widths[i]) for i, cell in enumerate(r)) for r in rows]
    return "\n".join(lines) + "\n"
