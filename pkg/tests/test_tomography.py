import numpy as np
import pytest

from helpers import random_state, rng
from tangle3.exceptions import MissingLabels, NotPositive, ValueOutOfRange
from tangle3.linalg import basis_state, projector
from tangle3.states import PI_GHZ
from tangle3.tomography import (
    LABELS,
    GhzElements,
    bound_from_elements,
    expectations_of,
    format_record,
    ghz_elements_minimal,
    parse_record,
    pit_record,
    reconstruct,
)
from tangle3.twirl import pit_project, tau3_approx_rho


def test_maximally_mixed_record():
    rec = expectations_of(np.eye(8) / 8)
    assert rec["III"] == 1
    assert all(abs(v) < 1e-15 for k, v in rec.items() if k != "III")


def test_ghz_record():
    rec = expectations_of(PI_GHZ)
    assert rec["XXX"] == pytest.approx(1)
    for lab in ("XYY", "YXY", "YYX"):
        assert rec[lab] == pytest.approx(-1)
    for lab in ("ZZI", "ZIZ", "IZZ"):
        assert rec[lab] == pytest.approx(1)
    weight3 = [lab for lab in LABELS if "I" not in lab]
    for lab in set(weight3) - {"XXX", "XYY", "YXY", "YYX"}:
        assert rec[lab] == pytest.approx(0, abs=1e-15)


def test_product_state_record():
    rec = expectations_of(projector(basis_state("001")))
    # sign of each Z-string is (-1) to the number of Z on qubit 3
    for lab in ("IIZ", "IZZ", "ZIZ", "ZZZ"):
        assert rec[lab] == pytest.approx(-1)
    for lab in ("IZI", "ZII", "ZZI"):
        assert rec[lab] == pytest.approx(1)


def test_reconstruct_examples():
    assert np.allclose(reconstruct(expectations_of(PI_GHZ)), PI_GHZ, atol=1e-12)
    assert np.allclose(reconstruct({"III": 1}, mode="partial")[0], np.eye(8) / 8)
    with pytest.raises(ValueOutOfRange):
        reconstruct({**expectations_of(PI_GHZ), "XXX": 2})


def test_reconstruct_strict_lists_missing():
    rec = expectations_of(PI_GHZ)
    del rec["XYZ"], rec["ZZZ"]
    with pytest.raises(MissingLabels) as err:
        reconstruct(rec)
    assert err.value.labels == ["XYZ", "ZZZ"]
    _, warnings = reconstruct(rec, mode="partial")
    assert len(warnings) == 2


def test_reconstruct_rejects_inconsistent_data():
    rec = {lab: 0.0 for lab in LABELS}
    rec.update(III=1.0, XXX=1.0, YYY=1.0, ZZZ=1.0)
    with pytest.raises(NotPositive):
        reconstruct(rec)


def test_round_trip_and_pit_diagram():
    g = rng(70)
    for _ in range(20):
        rho = random_state(g)
        rec = expectations_of(rho)
        assert np.max(np.abs(reconstruct(rec) - rho)) <= 1e-12
        assert np.max(np.abs(reconstruct(pit_record(rec)) - pit_project(rho))) <= 1e-10


def test_pit_record_examples():
    sym = expectations_of(PI_GHZ)
    assert all(pit_record(sym)[k] == pytest.approx(v, abs=1e-15) for k, v in sym.items())
    rec = {"XYY": 1.0, "YXY": 0.0, "YYX": -1.0}
    out = pit_record(rec)
    assert out["XYY"] == out["YXY"] == out["YYX"] == 0
    prod = pit_record(expectations_of(projector(basis_state("001"))))
    mix = sum(projector(basis_state(b)) for b in ("001", "010", "100")) / 3
    target = expectations_of(mix)
    assert all(prod[k] == pytest.approx(target[k], abs=1e-15) for k in LABELS)


def test_pit_record_drops_incomplete_orbits():
    out = pit_record({"XYY": 1.0, "YXY": 0.0})
    assert "XYY" not in out and out["III"] == 1


def test_minimal_ghz():
    e = ghz_elements_minimal(expectations_of(PI_GHZ), with_imag=True)
    assert (e.p000, e.p111, e.c_re, e.c_im) == pytest.approx((0.5, 0.5, 0.5, 0), abs=1e-15)


def test_minimal_maximally_mixed():
    e = ghz_elements_minimal(expectations_of(np.eye(8) / 8))
    assert (e.p000, e.p111, e.c_re) == pytest.approx((1 / 8, 1 / 8, 0), abs=1e-15)
    assert e.c_im is None


def test_minimal_phased_ghz():
    psi = (basis_state("000") + 1j * basis_state("111")) / np.sqrt(2)
    rho = projector(psi)
    e = ghz_elements_minimal(expectations_of(rho), with_imag=True)
    # the coherence <000|rho|111> of this state is -i/2
    assert rho[0, 7] == pytest.approx(-0.5j)
    assert e.c_re == pytest.approx(0, abs=1e-15)
    assert e.c_im == pytest.approx(-0.5, abs=1e-15)


def test_minimal_matches_reconstruction():
    g = rng(71)
    for _ in range(10):
        rho = random_state(g)
        e = ghz_elements_minimal(expectations_of(rho), with_imag=True)
        assert e.p000 == pytest.approx(rho[0, 0].real, abs=1e-10)
        assert e.p111 == pytest.approx(rho[7, 7].real, abs=1e-10)
        assert complex(e.c_re, e.c_im) == pytest.approx(rho[0, 7], abs=1e-10)


def test_minimal_missing_labels():
    rec = expectations_of(PI_GHZ)
    for lab in ("XYY", "YXY", "YYX"):
        del rec[lab]
    with pytest.raises(MissingLabels) as err:
        ghz_elements_minimal(rec)
    assert err.value.labels == ["XYY", "YXY", "YYX"]
    rec = {k: v for k, v in expectations_of(PI_GHZ).items() if k != "XXY"}
    with pytest.raises(MissingLabels):
        ghz_elements_minimal(rec, with_imag=True)
    ghz_elements_minimal(rec)


def test_bound_from_elements_examples():
    assert bound_from_elements(GhzElements(0.5, 0.5, 0.5, 0.0)) == pytest.approx(1)
    assert bound_from_elements(GhzElements(1 / 8, 1 / 8, 0.0)) == 0
    assert bound_from_elements(GhzElements(0.5, 0.5, 0.0, 0.5)) == pytest.approx(1)


def test_bound_equals_plane_of_phase_rotated_state():
    g = rng(72)
    for _ in range(10):
        rho = 0.7 * PI_GHZ + 0.3 * random_state(g)
        e = ghz_elements_minimal(expectations_of(rho), with_imag=True)
        phase = np.exp(-1j * np.angle(rho[0, 7]))
        d = np.diag([1] * 7 + [np.conj(phase)])
        rotated = d @ rho @ d.conj().T
        assert rotated[0, 7].imag == pytest.approx(0, abs=1e-15)
        assert bound_from_elements(e) == pytest.approx(tau3_approx_rho(rotated), abs=1e-9)


def test_text_format_round_trip():
    rec = expectations_of(random_state(rng(73)))
    assert parse_record(format_record(rec)) == rec


def test_text_format_errors():
    assert parse_record("# header\nXXX 0.5  # trailing\n\n") == {"XXX": 0.5, "III": 1.0}
    with pytest.raises(ValueError):
        parse_record("XXX 0.1\nXXX 0.2\n")
    with pytest.raises(ValueError):
        parse_record("XXA 0.1\n")
    with pytest.raises(ValueError):
        parse_record("XXX\n")
