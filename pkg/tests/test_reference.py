import hashlib

import pytest
from hypothesis import given
from hypothesis import strategies as st

import oracles
from helike import (
    InternalError,
    InvalidInputError,
    IonRecord,
    ReferenceSet,
    SchemaError,
    ValidationError,
    load_reference,
    parse_reference_csv,
    serialize_reference_csv,
)
from helike import reference as reference_mod

HEADER_A = "z,symbol,e_exp_au,source\n"
HEADER_B = "z,symbol,ie2e_ev,ie1e_ev,source\n"


def test_schema_b_helium():
    (rec,) = parse_reference_csv(HEADER_B + "2,He,24.587389,54.417765,NIST ASD\n")
    assert rec.z == 2 and rec.symbol == "He" and rec.source == "NIST ASD"
    assert rec.e_exp == pytest.approx(-2.903386, abs=1e-5)
    expected = -(oracles.mpf("24.587389") + oracles.mpf("54.417765")) / oracles.HARTREE_EV
    assert rec.e_exp == pytest.approx(float(expected), rel=1e-15)


def test_schema_b_hydride():
    (rec,) = parse_reference_csv(HEADER_B + "1,H-,0.754195,13.598434,NIST ASD\n")
    assert rec.e_exp == pytest.approx(-0.527446, abs=1e-5)


def test_schema_a_passthrough():
    (rec,) = parse_reference_csv(HEADER_A + "2,He,-2.903386,manual\n")
    assert rec.e_exp == -2.903386 and rec.source == "manual"


def test_comments_crlf_bom_and_sorting():
    text = "\ufeff# comment\r\n" + HEADER_A.replace("\n", "\r\n") + "3,Li+,-7.28,x\r\n\r\n# mid\r\n2,He,-2.9,y\r\n"
    refs = parse_reference_csv(text)
    assert [r.z for r in refs] == [2, 3]


def test_unknown_header():
    with pytest.raises(SchemaError, match="z,symbol,energy"):
        parse_reference_csv("z,symbol,energy\n2,He,-2.9\n")


def test_empty_input():
    with pytest.raises(SchemaError):
        parse_reference_csv("# nothing here\n")


def test_non_numeric_reports_line():
    with pytest.raises(InvalidInputError, match="line 3"):
        parse_reference_csv(HEADER_A + "2,He,-2.9,x\n3,Li+,abc,y\n")


def test_wrong_field_count():
    with pytest.raises(InvalidInputError, match="line 2"):
        parse_reference_csv(HEADER_A + "2,He,-2.9\n")


def test_duplicate_z():
    with pytest.raises(ValidationError, match="duplicate"):
        parse_reference_csv(HEADER_A + "2,He,-2.9,x\n2,He,-2.91,y\n")


@pytest.mark.parametrize("energy", ["0", "1.5", "-1.9"])
def test_unbound_energy_rejected(energy):
    # -1.9 is above the hydrogenic threshold -2 for z = 2
    with pytest.raises(ValidationError):
        parse_reference_csv(HEADER_A + f"2,He,{energy},x\n")


@pytest.mark.parametrize("z", ["0", "119", "2.5"])
def test_bad_z(z):
    with pytest.raises(ValidationError):
        parse_reference_csv(HEADER_A + f"{z},X,-1000,x\n")


def test_direct_record_validation():
    with pytest.raises(ValidationError):
        IonRecord(2.0, "He", -2.9)
    with pytest.raises(ValidationError):
        ReferenceSet((IonRecord(2, "He", -2.9), IonRecord(2, "He", -2.9)))


def test_bundled(refs):
    assert len(refs) == 10
    zs = [r.z for r in refs]
    assert zs == list(range(1, 11))
    assert refs.by_z(1).e_exp == pytest.approx(-0.52745, abs=2e-4)
    assert refs.by_z(2).e_exp == pytest.approx(-2.90339, abs=2e-4)
    for r in refs:
        assert -r.z**2 < r.e_exp < -r.z**2 / 2
        assert r.source.startswith("NIST ASD")


def test_bundled_checksum_guard(monkeypatch):
    monkeypatch.setattr(reference_mod, "BUNDLED_SHA256", "0" * 64)
    with pytest.raises(InternalError, match="checksum"):
        reference_mod.bundled_reference()


def test_recorded_checksum_matches_file():
    from importlib import resources

    raw = resources.files("helike.data").joinpath(reference_mod.BUNDLED_FILE).read_bytes()
    assert hashlib.sha256(raw).hexdigest() == reference_mod.BUNDLED_SHA256


def test_round_trip_bundled(refs):
    again = parse_reference_csv(serialize_reference_csv(refs))
    assert [(r.z, r.symbol, r.source) for r in again] == [(r.z, r.symbol, r.source) for r in refs]
    for a, b in zip(again, refs):
        assert a.e_exp == pytest.approx(b.e_exp, rel=1e-12)


def test_schema_a_and_b_agree(refs):
    from importlib import resources

    raw = resources.files("helike.data").joinpath(reference_mod.BUNDLED_FILE).read_text("utf-8")
    rows = []
    for line in raw.splitlines()[1:]:
        if line.startswith("#") or line.startswith("z,"):
            continue
        z, sym, ie2, ie1, src = line.split(",", 4)
        e = -(oracles.mpf(ie2) + oracles.mpf(ie1)) / oracles.HARTREE_EV
        rows.append(f"{z},{sym},{oracles.mp.nstr(e, 20)},manual\n")
    hand = parse_reference_csv(HEADER_A + "".join(rows))
    assert len(hand) == len(refs)
    for a, b in zip(hand, refs):
        assert abs(a.e_exp - b.e_exp) < 1e-9


_records = st.lists(
    st.tuples(
        st.integers(min_value=1, max_value=118),
        st.text(alphabet="ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz+-0123456789", min_size=1, max_size=6),
        st.floats(min_value=0.501, max_value=0.999),
    ),
    min_size=1,
    max_size=20,
    unique_by=lambda t: t[0],
)


@given(_records)
def test_round_trip_property(recs):
    refs = ReferenceSet(tuple(IonRecord(z, sym, -f * z * z, "src, with comma") for z, sym, f in recs))
    again = parse_reference_csv(serialize_reference_csv(refs))
    assert again == refs


def test_load_reference_missing(tmp_path):
    with pytest.raises(InvalidInputError, match="cannot read"):
        load_reference(tmp_path / "nope.csv")


def test_load_reference_file(tmp_path):
    path = tmp_path / "ref.csv"
    path.write_text(HEADER_A + "2,He,-2.9,x\n", encoding="utf-8")
    assert len(load_reference(path)) == 1
