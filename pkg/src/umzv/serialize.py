"""JSON and CSV encodings of the exact value types.

Field elements are encoded as base-p digit arrays (lowest digit first);
a polynomial in theta is the array of its coefficient encodings by
ascending degree.  All JSON payloads carry a schema_version field; the
formats are documented in docs/SCHEMAS.md.
"""

from __future__ import annotations

from .fields import FieldDesc, FvElem, PolyA, RatK
from .laurent import LaurentElem

SCHEMA_VERSION = 1


def ff_digits(field: FieldDesc, enc: int) -> list[int]:
    return list(field.digits(enc))


def ff_digit_string(field: FieldDesc, enc: int) -> str:
    return "".join(str(d) for d in field.digits(enc))


def poly_to_json(a: PolyA) -> list[list[int]]:
    return [ff_digits(a.field, c) for c in a.coeffs]


def poly_to_string(a: PolyA) -> str:
    return ".".join(ff_digit_string(a.field, c) for c in a.coeffs) or "0"


def ratk_to_json(x: RatK) -> dict:
    return {"num": poly_to_json(x.num), "den": poly_to_json(x.den)}


def laurent_to_json(x: LaurentElem) -> dict:
    f = x.field
    return {
        "schema_version": SCHEMA_VERSION,
        "uniformizer": f.uniformizer_name,
        "e_ram": f.e_ram,
        "lead": x.lead,
        "prec": x.prec,
        "coeffs": [ff_digits(f.coeff, c) for c in x.coeffs],
    }


def laurent_to_csv(x: LaurentElem) -> str:
    f = x.field
    pairs = [f"{x.lead + i}:{ff_digit_string(f.coeff, c)}"
             for i, c in enumerate(x.coeffs) if c]
    return ";".join(pairs) if pairs else "0"


def fv_to_json(v: FvElem) -> list[list[int]]:
    return poly_to_json(v.rep)


def fmzv_to_json(vec) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "index": list(vec.index),
        "components": [{"v": poly_to_json(v), "value": fv_to_json(val)}
                       for v, val in vec.entries],
    }


def fmzv_to_csv_rows(vec) -> list[list[str]]:
    rows = [["v", "value"]]
    for v, val in vec.entries:
        rows.append([poly_to_string(v), poly_to_string(val.rep)])
    return rows


def useries_to_json(us) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "index": list(us.index),
        "step": us.step,
        "gammas": [laurent_to_json(g) for g in us.gammas],
    }


def shuffle_to_json(x) -> list[dict]:
    return [{"word": list(w), "coeff": c} for w, c in sorted(x.terms.items())]


def texpansion_to_json(field: FieldDesc, index, coeffs) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "index": list(index),
        "variable": "t",
        "coeffs": [poly_to_json(c) for c in coeffs],
    }
