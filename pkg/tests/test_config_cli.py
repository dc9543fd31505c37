import io
import json

import pytest

from cy4surf.cli import EXIT_CHECK, EXIT_INPUT, EXIT_MATH, EXIT_OK, main
from cy4surf.config import PRIME_ENV, parse_config
from cy4surf.constructions import fermat_sextic_pair
from cy4surf.errors import ParseError, ValidationError
from cy4surf.fields import QQ, PrimeField

MINIMAL = """\
ambient = 5
cy_degrees = 6
surface_degrees = 1, 1, 1
"""

FERMAT_333 = """\
# Fermat sextic, surface of degrees (3,3,3)
command = rvd
field = Fp:13
ambient = 5
cy_degrees = 6
surface_degrees = 3,3,3
construction = fermat-sextic
"""

EXPLICIT_PLANE = """\
field = Fp:13
ambient = 5
cy_poly = "x0^6 + x1^6 + x2^6 + x3^6 + x4^6 + x5^6"
surface_poly = x0 + 2*x1
surface_poly = x2 + 2*x3
surface_poly = x4 + 2*x5
"""


def run(argv):
    buf = io.StringIO()
    code = main(argv, out=buf)
    return code, buf.getvalue()


def write(tmp_path, text, name="run.cfg"):
    p = tmp_path / name
    p.write_text(text)
    return str(p)


# -- parse_config -----------------------------------------------------------------------


def test_minimal_config(monkeypatch):
    monkeypatch.delenv(PRIME_ENV, raising=False)
    cfg = parse_config(MINIMAL)
    assert (cfg.ambient_N, cfg.cy_degrees, cfg.surface_degrees) == (5, (6,), (1, 1, 1))
    assert cfg.mode == "degrees" and cfg.pair() is None and cfg.field is None


def test_wrong_cy_degree_sum():
    with pytest.raises(ValidationError, match="Calabi-Yau degree sum"):
        parse_config(MINIMAL.replace("cy_degrees = 6", "cy_degrees = 5"))


def test_construction_expands_to_canonical_polynomials():
    cfg = parse_config(FERMAT_333)
    assert cfg.mode == "construction" and cfg.field == PrimeField(13)
    pair = cfg.pair()
    ref = fermat_sextic_pair((3, 3, 3), PrimeField(13))
    assert pair.surface_polys == ref.surface_polys and pair.cy_polys == ref.cy_polys


def test_explicit_config():
    cfg = parse_config(EXPLICIT_PLANE)
    assert cfg.mode == "explicit"
    assert cfg.surface_degrees == (1, 1, 1) and cfg.cy_degrees == (6,)
    assert cfg.pair(PrimeField(10009)).field == PrimeField(10009)


def test_explicit_defaults_to_rationals():
    cfg = parse_config(EXPLICIT_PLANE.replace("field = Fp:13\n", ""))
    assert cfg.field == QQ


def test_parse_error_position():
    # the stray '*' sits in column 18 of line 2
    text = "ambient = 5\ncy_poly = x0^6 + * x1^6\nsurface_poly = x0\nsurface_poly = x1\nsurface_poly = x2\n"
    with pytest.raises(ParseError) as info:
        parse_config(text)
    assert (info.value.line, info.value.column) == (2, 18)


@pytest.mark.parametrize(
    "text, line",
    [
        ("ambient = 5\nbogus = 1\n", 2),
        ("ambient five\n", 1),
        ("ambient = x\n", 1),
        ("ambient = 5\nsurface_degrees = 1, a, 1\n", 2),
        ("ambient = 5\nfield = Fp:12\n", 2),
        ("ambient = 5\nambient = 6\n", 2),
    ],
)
def test_parse_errors_carry_line(text, line):
    with pytest.raises(ParseError) as info:
        parse_config(text)
    assert info.value.line == line


@pytest.mark.parametrize(
    "text",
    [
        MINIMAL.replace("1, 1, 1", "1, 1"),
        MINIMAL + "construction = nope\n",
        "cy_degrees = 6\nsurface_degrees = 1,1,1\n",
        FERMAT_333 + "surface_poly = x0\n",
        MINIMAL + "seed = -1\n",
    ],
)
def test_validation_errors(text):
    with pytest.raises(ValidationError):
        parse_config(text)


def test_env_prime(monkeypatch):
    monkeypatch.setenv(PRIME_ENV, "10009")
    assert parse_config(MINIMAL).field == PrimeField(10009)
    monkeypatch.setenv(PRIME_ENV, "10010")
    with pytest.raises(ValidationError):
        parse_config(MINIMAL)


# -- CLI ----------------------------------------------------------------------------------


def test_rigid_table_command():
    code, out = run(["rigid-table", "--ambient", "5", "--cy-degrees", "6", "--max-degree", "4", "--json"])
    assert code == EXIT_OK
    rows = json.loads(out)
    assert [r["rho_gamma"] for r in rows] == [19, 32, 37, 54, 62, 92, 32, 106]
    assert all(r["rvd"] == 0 for r in rows)
    code, text = run(["rigid-table"])
    lines = text.strip().splitlines()
    assert len(lines) == 9 and lines[0].split()[-1] == "rho"
    assert [int(line.split()[-1]) for line in lines[1:]] == [19, 32, 37, 54, 62, 92, 32, 106]


def test_invariants_fermat_333(tmp_path):
    code, out = run(["invariants", "--config", write(tmp_path, FERMAT_333), "--json"])
    assert code == EXIT_OK
    d = json.loads(out)
    assert (d["rvd"], d["rho_gamma"], d["h0_N"]) == (3, 141, 3)


def test_rvd_explicit_plane(tmp_path):
    code, out = run(["rvd", "--config", write(tmp_path, EXPLICIT_PLANE), "--json"])
    assert code == EXIT_OK
    d = json.loads(out)
    assert (d["h0_N"], d["rho_gamma"], d["vd"]) == (0, 19, "-19/2")


def test_symplectic_commands():
    code, out = run(["symplectic", "schoen", "--json"])
    d = json.loads(out)
    assert code == EXIT_OK and (d["rvd"], d["rho"]) == (4, 12)
    assert json.loads(run(["symplectic", "abelian-fibre", "--json"])[1])["rvd"] == "1/2"
    assert json.loads(run(["symplectic", "k3sq", "--genus", "2", "--json"])[1])["rvd"] == "1/2"
    assert json.loads(run(["symplectic", "k3xk3", "--json"])[1])["rho"] == 2
    assert run(["symplectic", "k3sq"])[0] == EXIT_INPUT


def test_hilbert_and_chern_commands():
    code, out = run(["hilbert", "--ambient", "5", "--degrees", "1,1,1", "--min-degree", "6", "--max-degree", "6", "--json"])
    assert code == EXIT_OK and json.loads(out)["hilbert_function"] == {"6": 28}
    code, out = run(["chern", "--ambient", "5", "--cy-degrees", "6", "--surface-degrees", "2,2,3", "--json"])
    d = json.loads(out)
    assert (d["K2"], d["c2"], d["gamma_sq"]) == (12, 72, 120)


def test_repeated_runs_byte_identical(tmp_path):
    cfg = write(tmp_path, "construction = random\nseed = 12345\nfield = Fp:10007\n" + MINIMAL.replace("1, 1, 1", "1, 2, 2"))
    first = run(["invariants", "--config", cfg])
    second = run(["invariants", "--config", cfg])
    assert first == second and first[0] == EXIT_OK


def _numbers_in_text(text):
    found = {}
    for line in text.splitlines():
        parts = line.split()
        if len(parts) == 2 and not parts[0].startswith("["):
            found[parts[0]] = parts[1]
    return found


def test_json_and_text_agree(tmp_path):
    cfg = write(tmp_path, FERMAT_333.replace("3,3,3", "1,3,3"))
    _, text = run(["invariants", "--config", cfg])
    _, js = run(["invariants", "--config", cfg, "--json"])
    d = json.loads(js)
    shown = _numbers_in_text(text)
    for key in ("chi_OS", "gamma_sq", "chi_N", "h0_N", "h1_N", "vd", "rvd", "rho_gamma"):
        assert shown[key] == str(d[key])


def test_exit_codes(tmp_path):
    assert run(["invariants", "--config", write(tmp_path, "ambient = 5\nbad line\n")])[0] == EXIT_INPUT
    assert run(["invariants", "--config", str(tmp_path / "missing.cfg")])[0] == EXIT_INPUT
    assert run(["chern", "--ambient", "5", "--cy-degrees", "5", "--surface-degrees", "1,1,1"])[0] == EXIT_INPUT
    # the surface x0 = x2 = x4 = 0 does not lie on the Fermat sextic
    off = EXPLICIT_PLANE.replace("x0 + 2*x1", "x0").replace("x2 + 2*x3", "x2").replace("x4 + 2*x5", "x4")
    assert run(["rvd", "--config", write(tmp_path, off)])[0] == EXIT_MATH
    assert run(["rvd", "--config", write(tmp_path, MINIMAL)])[0] == EXIT_INPUT


def test_failed_check_exit_code(monkeypatch, tmp_path):
    import cy4surf.constructions as constructions
    import cy4surf.invariants as invariants

    wrong = dict(constructions.REFERENCE_FERMAT_RVD)
    wrong[(1, 3, 3)] = 2
    monkeypatch.setattr(invariants, "REFERENCE_FERMAT_RVD", wrong)
    code, out = run(["invariants", "--config", write(tmp_path, FERMAT_333.replace("3,3,3", "1,3,3"))])
    assert code == EXIT_CHECK
    assert "construction discrepancy" in out
