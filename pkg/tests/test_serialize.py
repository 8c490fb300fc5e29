from umzv.fields import GF, PolyA, RatK
from umzv.harmonic import finite_mzv, zeta_thakur
from umzv.laurent import LaurentField
from umzv.serialize import (ff_digit_string, fmzv_to_csv_rows, fmzv_to_json,
                            laurent_to_csv, laurent_to_json, poly_to_json,
                            poly_to_string, ratk_to_json, shuffle_to_json)
from umzv.shuffle import ShuffleElem


def test_poly_digit_arrays():
    F9 = GF(9)
    a = PolyA(F9, (5, 0, 1))
    assert poly_to_json(a) == [[2, 1], [0, 0], [1, 0]]
    assert poly_to_string(a) == "21.00.10"
    assert poly_to_json(PolyA.zero(F9)) == []


def test_ratk_json():
    F3 = GF(3)
    th = PolyA.gen(F3)
    x = RatK(th + 2, th ** 2 + 1)
    d = ratk_to_json(x)
    assert d == {"num": [[2], [1]], "den": [[1], [0], [1]]}


def test_laurent_json_fields():
    F3 = GF(3)
    z = zeta_thakur(F3, (2,), 12)
    d = laurent_to_json(z)
    assert d["uniformizer"] == "1/theta" and d["e_ram"] == 1
    assert d["lead"] == 0 and d["prec"] == 12
    assert d["coeffs"][0] == [1]
    assert d["schema_version"] == 1
    L = LaurentField.period_field(F3)
    d2 = laurent_to_json(L.root_of_minus_theta())
    assert d2["uniformizer"] == "w" and d2["e_ram"] == 2 and d2["prec"] is None


def test_laurent_csv_pairs():
    F3 = GF(3)
    z = zeta_thakur(F3, (2,), 9)
    assert laurent_to_csv(z) == "0:1;6:1;8:2"


def test_fmzv_serialization():
    F2 = GF(2)
    vec = finite_mzv(F2, (1,), 2)
    d = fmzv_to_json(vec)
    assert d["index"] == [1] and len(d["components"]) == 3
    rows = fmzv_to_csv_rows(vec)
    assert rows[0] == ["v", "value"]
    assert len(rows) == 4


def test_shuffle_json():
    x = ShuffleElem.word(3, (1,)) * ShuffleElem.word(3, (1,))
    assert shuffle_to_json(x) == [{"word": [1, 1], "coeff": 2},
                                  {"word": [2], "coeff": 1}]


def test_digit_string_orders_low_first():
    F9 = GF(9)
    assert ff_digit_string(F9, 7) == "12"  # 7 = 1 + 2*3
