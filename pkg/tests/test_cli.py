import json
import math

import numpy as np
import pytest

from diracjunction.cli import (
    fmt17,
    main,
    parse_angle,
    parse_complex,
    parse_rho,
)
from diracjunction.errors import ValidationError

ROT_JSON = "[[[0,0],[-1,0]],[[1,0],[0,0]]]"
IDENTITY_JSON = "[[[1,0],[0,0]],[[0,0],[1,0]]]"
SHEAR_JSON = "[[[1,0],[1,0]],[[0,0],[1,0]]]"


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestParsers:
    def test_parse_complex_shorthand(self):
        assert parse_complex("1+2i") == 1 + 2j
        assert parse_complex("-i") == -1j
        assert parse_complex("i") == 1j
        assert parse_complex("2.5e-3") == 2.5e-3
        assert parse_complex("[1.5,-0.25]") == 1.5 - 0.25j

    def test_parse_complex_rejects_garbage(self):
        for bad in ("foo", "1+2", "[1]", "inf"):
            with pytest.raises(ValidationError):
                parse_complex(bad)

    def test_parse_rho(self):
        r = parse_rho("inf,0.5")
        assert math.isinf(r.rho_plus) and r.rho_minus == 0.5
        with pytest.raises(ValidationError):
            parse_rho("-inf,0")
        with pytest.raises(ValidationError):
            parse_rho("1,2,3")

    def test_parse_angle(self):
        assert parse_angle("pi/2") == pytest.approx(math.pi / 2)
        assert parse_angle("-pi/4") == pytest.approx(-math.pi / 4)
        assert parse_angle("3pi/2") == pytest.approx(3 * math.pi / 2)
        assert parse_angle("0.75") == 0.75

    def test_fmt17_roundtrips_bit_exactly(self):
        rng = np.random.default_rng(71)
        values = list(rng.standard_normal(200)) + [
            0.1,
            1 / 3,
            math.pi,
            1e-300,
            4.715,
        ]
        for v in values:
            assert float(fmt17(v)) == v


class TestDecompose:
    def test_rotation(self, capsys):
        code, out, _ = run(capsys, "decompose", "--matrix", ROT_JSON)
        assert code == 0
        payload = json.loads(out)
        assert payload["gamma1"] == [0.0, 0.0]
        assert payload["gamma2"] == pytest.approx([1.0, 0.0])
        assert payload["gamma3"] == pytest.approx([1.0, 0.0])
        assert payload["branch"] == "u21_nonzero"

    def test_identity(self, capsys):
        code, out, _ = run(capsys, "decompose", "--matrix", IDENTITY_JSON)
        assert code == 0
        payload = json.loads(out)
        assert payload["gamma1"] == pytest.approx([1.0, 0.0])
        assert payload["branch"] == "u21_zero"

    def test_shear_exits_2_with_residual_on_stderr(self, capsys):
        code, out, err = run(capsys, "decompose", "--matrix", SHEAR_JSON)
        assert code == 2
        assert out == ""
        assert "residual" in err


class TestConvert:
    def test_u2_to_bc_transmitting(self, capsys):
        code, out, _ = run(
            capsys, "convert", "u2-to-bc", "--gamma", "0,-i,i", "--mass", "0"
        )
        assert code == 0
        payload = json.loads(out)
        assert payload["type"] == "transmitting"
        np.testing.assert_allclose(
            np.array(payload["alpha"], dtype=float),
            [[1, 0], [0, 0], [0, 0], [1, 0]],
            atol=1e-15,
        )

    def test_u2_to_bc_separating_infinite(self, capsys):
        code, out, _ = run(capsys, "convert", "u2-to-bc", "--diag", "-1,-1")
        assert code == 0
        payload = json.loads(out)
        assert payload == {
            "type": "separating",
            "rho_plus": "inf",
            "rho_minus": "inf",
        }

    def test_alpha_to_bd(self, capsys):
        code, out, _ = run(capsys, "convert", "alpha-to-bd", "--alpha", "0,1,1,0")
        assert code == 0
        payload = json.loads(out)
        assert payload["theta"] == pytest.approx(3 * math.pi / 2)
        assert payload["a"] == pytest.approx([0, 1, 1, 0])

    def test_bd_to_alpha(self, capsys):
        code, out, _ = run(
            capsys, "convert", "bd-to-alpha", "--bd", "3pi/2,0,1,1,0"
        )
        assert code == 0
        payload = json.loads(out)
        np.testing.assert_allclose(
            np.array(payload["alpha"], dtype=float),
            [[0, 0], [1, 0], [1, 0], [0, 0]],
            atol=1e-15,
        )

    def test_bc_to_u2_with_comparison_block(self, capsys):
        code, out, _ = run(
            capsys, "convert", "bc-to-u2", "--alpha", "1,0,0,1", "--mass", "0"
        )
        assert code == 0
        payload = json.loads(out)
        assert payload["gamma1"] == pytest.approx([0.0, 0.0])
        assert payload["gamma2"] == pytest.approx([0.0, -1.0], abs=1e-15)
        assert payload["gamma3"] == pytest.approx([0.0, 1.0], abs=1e-15)
        block = payload["closed_form_comparison"]
        assert block["disagrees"] is True
        assert block["agrees_exactly"] is False

    def test_rho_to_u2(self, capsys):
        code, out, _ = run(capsys, "convert", "rho-to-u2", "--rho", "inf,inf")
        assert code == 0
        payload = json.loads(out)
        assert payload["gamma_left"] == [-1.0, 0.0]
        assert payload["gamma_right"] == [-1.0, 0.0]

    def test_out_of_class_exits_2(self, capsys):
        code, _, err = run(capsys, "convert", "alpha-to-bd", "--alpha", "1,1,0,1")
        assert code == 2
        assert "class" in err

    def test_missing_payload_exits_2(self, capsys):
        code, _, err = run(capsys, "convert", "bc-to-u2")
        assert code == 2


class TestVerify:
    def test_valid_alpha_passes(self, capsys):
        code, out, _ = run(capsys, "verify", "--alpha", "0,1,1,0")
        assert code == 0
        assert out.strip().endswith("PASS")
        assert "class-constraints" in out

    def test_invalid_alpha_fails_with_residual(self, capsys):
        code, out, _ = run(capsys, "verify", "--alpha", "1,1,0,1")
        assert code == 1
        assert "FAIL class-constraints re_a1_a2" in out
        assert "1.0" in out

    def test_rho_payload(self, capsys):
        code, out, _ = run(capsys, "verify", "--rho", "0,inf", "--mass", "1")
        assert code == 0
        assert out.strip().endswith("PASS")

    def test_matrix_payload(self, capsys):
        code, out, _ = run(capsys, "verify", "--matrix", ROT_JSON)
        assert code == 0
        assert "decomposition-round-trip" in out

    def test_fuzz(self, capsys):
        code, out, _ = run(capsys, "verify", "--fuzz", "50", "--mass", "1")
        assert code == 0
        assert "closed-form-inverse" in out
        assert out.strip().endswith("PASS")

    def test_no_payload_exits_2(self, capsys):
        code, _, err = run(capsys, "verify")
        assert code == 2


class TestScatter:
    def test_csv_massless_spin_flip(self, capsys):
        code, out, _ = run(
            capsys,
            "scatter",
            "--alpha",
            "0,1,1,0",
            "--mass",
            "0",
            "--emin",
            "0.5",
            "--emax",
            "2",
            "--steps",
            "4",
        )
        assert code == 0
        lines = out.strip().split("\n")
        assert lines[0] == "E,k,lambda,re_r,im_r,re_t,im_t,R,T,phase_t,flag"
        assert len(lines) == 5
        for line in lines[1:]:
            cells = line.split(",")
            assert float(cells[7]) == pytest.approx(0.0, abs=1e-14)  # R
            assert float(cells[8]) == pytest.approx(1.0)  # T
            assert cells[10] == ""

    def test_csv_deterministic(self, capsys):
        args = (
            "scatter", "--alpha", "0,1,1,0", "--mass", "1",
            "--emin", "1.1", "--emax", "2.1", "--steps", "7",
        )
        _, first, _ = run(capsys, *args)
        _, second, _ = run(capsys, *args)
        assert first == second

    def test_csv_values_roundtrip(self, capsys):
        code, out, _ = run(
            capsys,
            "scatter", "--alpha", "0,1,1,0", "--mass", "1",
            "--emin", "1.4142135", "--emax", "1.4142137", "--steps", "3",
        )
        assert code == 0
        row = out.strip().split("\n")[2].split(",")
        assert float(row[8]) == pytest.approx(0.5, abs=1e-6)

    def test_rho_rows_never_transmit(self, capsys):
        code, out, _ = run(
            capsys,
            "scatter", "--rho", "0,0", "--mass", "0",
            "--emin", "0.5", "--emax", "2", "--steps", "4",
        )
        assert code == 0
        for line in out.strip().split("\n")[1:]:
            assert float(line.split(",")[8]) == 0.0

    def test_json_format(self, capsys):
        code, out, _ = run(
            capsys,
            "scatter", "--alpha", "1,0,0,1", "--mass", "0",
            "--emin", "0.5", "--emax", "1.5", "--steps", "3",
            "--format", "json",
        )
        assert code == 0
        rows = json.loads(out)
        assert len(rows) == 3
        assert rows[0]["T"] == pytest.approx(1.0)
        assert set(rows[0]) == {
            "E", "k", "lambda", "re_r", "im_r", "re_t", "im_t", "R", "T",
            "phase_t", "flag",
        }

    def test_bad_grid_exits_2(self, capsys):
        code, _, err = run(
            capsys,
            "scatter", "--alpha", "0,1,1,0", "--mass", "0",
            "--emin", "2", "--emax", "1", "--steps", "4",
        )
        assert code == 2

    def test_out_of_class_alpha_exits_2(self, capsys):
        code, _, err = run(
            capsys,
            "scatter", "--alpha", "1,1,0,1", "--mass", "0",
            "--emin", "0.5", "--emax", "2", "--steps", "4",
        )
        assert code == 2

    def test_flagged_rows_in_csv(self):
        from diracjunction.cli import _rows_to_csv
        from diracjunction.scattering import RESONANCE_FLAG, ScatteringResult

        text = _rows_to_csv([ScatteringResult.flagged(1.5, RESONANCE_FLAG)])
        line = text.strip().split("\n")[1]
        assert line.endswith(",RESONANCE")
        assert line.startswith("1.5,nan,")

    def test_write_to_file(self, capsys, tmp_path):
        path = tmp_path / "sweep.csv"
        code, out, _ = run(
            capsys,
            "scatter", "--rho", "inf,inf", "--mass", "0",
            "--emin", "0.5", "--emax", "2", "--steps", "3",
            "--out", str(path),
        )
        assert code == 0
        assert out == ""
        text = path.read_text()
        assert text.startswith("E,k,lambda")
        assert text.endswith("\n")


class TestDemoSwitch:
    def test_default_run(self, capsys):
        code, out, _ = run(capsys, "demo-switch")
        assert code == 0
        assert "spin preserved: True" in out
        assert "spin swapped: True" in out
        payload = json.loads(out.strip().split("\n")[-1])
        assert payload["ok"] is True
        assert payload["unit0"]["preserves_spin"] is True
        assert payload["unit1"]["swaps_spin"] is True

    def test_phase_variant(self, capsys):
        code, out, _ = run(capsys, "demo-switch", "--phase", "pi/2")
        assert code == 0
        payload = json.loads(out.strip().split("\n")[-1])
        assert payload["phase_request"]["transmission_phase"] == pytest.approx(
            math.pi / 2
        )
        assert payload["phase_request"]["verified"] is True


def test_internal_inconsistency_exits_3(capsys, monkeypatch):
    import diracjunction.cli as cli
    from diracjunction.errors import InternalInconsistencyError

    def boom(*args, **kwargs):
        raise InternalInconsistencyError("solved matrix failed unitarity")

    monkeypatch.setattr(cli.correspondence, "compare_closed_form", boom)
    code, out, err = run(capsys, "convert", "bc-to-u2", "--alpha", "1,0,0,1")
    assert code == 3
    assert "internal inconsistency" in err


def _shorthand(z: complex) -> str:
    sign = "+" if z.imag >= 0 else "-"
    return f"{z.real!r}{sign}{abs(z.imag)!r}i"


def test_cli_complex_print_parse_roundtrip(capsys):
    # values emitted as JSON [re, im] parse back bit-exactly
    from diracjunction.boundary import BDForm, bd_to_alpha
    from diracjunction.correspondence import alpha_to_u2

    a = bd_to_alpha(BDForm(0.7, 1.25, -0.5, 0.4, 0.96))
    text = ",".join(_shorthand(z) for z in a.as_tuple())
    for z in a.as_tuple():  # the shorthand itself is bit-exact
        assert parse_complex(_shorthand(z)) == z
    code, out, _ = run(capsys, "convert", "bc-to-u2", "--alpha", text, "--mass", "0.7")
    assert code == 0
    payload = json.loads(out)
    q = alpha_to_u2(a, 0.7)
    for key, value in (("gamma1", q.g1), ("gamma2", q.g2), ("gamma3", q.g3)):
        assert parse_complex(json.dumps(payload[key])) == complex(value)
