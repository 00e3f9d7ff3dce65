import subprocess
import sys

import pytest

from lyalg.cli import run_command
from conftest import fixture_path


def run(*args):
    return run_command([a if not a.endswith((".alg", ".bundle")) else fixture_path(a) for a in args])


def test_check_ly_passes_on_zero_algebra():
    status, text = run("check-ly", "zero2.alg")
    assert status == 0 and text.startswith("passed")


def test_check_ly_reports_witness():
    status, text = run("check-ly", "failing2.alg")
    assert status == 1
    assert "ternary-on-binary at (1 2 1 2): residual [0 1]" in text


def test_enumerate_zero_bundle():
    status, text = run("enumerate-defmaps", "zero11_gf2.bundle")
    assert status == 0 and text.splitlines()[0] == "2 deformation maps"


def test_classify_complements_census():
    status, text = run("classify-complements", "rb0_gf2_inclusion.bundle")
    assert status == 0
    lines = text.splitlines()
    assert lines[0] == "6 deformation maps"
    assert "2 classes" in lines and "  {1, 3, 4, 6}" in lines and "  {2, 5}" in lines
    assert lines[-1] == "factorization index 2"


def test_cohomology_tables():
    status, text = run("cohomology", "sl2.alg")
    assert (status, text) == (0, "H^1 3\nH^2 1\nH^3 0\n")
    status, text = run("defmap-cohomology", "rb0_gf7.bundle")
    assert status == 0 and text.splitlines()[0].startswith("H^0 ")


@pytest.mark.parametrize("cmd,fixture,needle", [
    ("check-defmap", "rb0_gf2_bad.bundle", "defor-bracket at (1 2)"),
    ("lts-check-defmap", "lts_rb0_gf3_bad.bundle", "defor-triple at (1 2 2)"),
    ("lts-check-mp", "lts_mp_violating_gf3.bundle", "mu-on-ternary at (1 1 1 2 1)"),
    ("mc-check", "failing2.alg", "pi does not square to zero"),
])
def test_mathematical_failures_exit_one(cmd, fixture, needle):
    status, text = run(cmd, fixture)
    assert status == 1 and needle in text


@pytest.mark.parametrize("cmd,fixture", [
    ("check-mp", "rb0_gf2.bundle"),
    ("bicrossed", "rb0_gf2.bundle"),
    ("canonical-mp", "rb0_gf2_inclusion.bundle"),
    ("check-rep", "adjoint_rep.bundle"),
    ("check-defmap", "rb0_q.bundle"),
    ("mc-check", "sl2.alg"),
    ("derived-brackets", "rb0_gf7.bundle"),
    ("mc-equation", "rb0_gf7.bundle"),
    ("twist-check", "rb0_gf7.bundle"),
    ("lts-check", "lts2_gf3.alg"),
    ("lts-check-defmap", "lts_rb0_gf3.bundle"),
    ("lts-bicrossed", "lts_rb0_gf3.bundle"),
])
def test_successful_commands(cmd, fixture):
    status, text = run(cmd, fixture)
    assert status == 0, text


@pytest.mark.parametrize("args", [
    ("nosuch", "zero2.alg"),
    ("check-ly", "/nonexistent/file.alg"),
    ("mc-equation", "rb0_gf2.bundle"),  # no map r; a map in GF(2) would also be refused
    ("check-ly",),
])
def test_input_errors_exit_two(args):
    status, _ = run(*args)
    assert status == 2


def test_characteristic_is_an_input_error():
    status, out = run_command(["mc-equation", fixture_path("rb0_gf2_bad.bundle")])
    assert status == 2 and "characteristic" in out.lower()


def test_parse_errors_name_the_line(tmp_path):
    p = tmp_path / "bad.alg"
    p.write_text("format algebra 1\nfield Q\ndim 2\nb 1 2 1 1\nb 2 1 1 1\n")
    status, text = run_command(["check-ly", str(p)])
    assert status == 2 and f"{p}:5:" in text


def test_reports_are_deterministic():
    for args in (("classify-complements", "rb0_gf2_inclusion.bundle"), ("check-ly", "failing2.alg"),
                 ("enumerate-defmaps", "rb0_gf2.bundle")):
        assert run(*args) == run(*args)


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "lyalg", "check-ly", fixture_path("failing2.alg")],
                          capture_output=True, text=True)
    assert proc.returncode == 1 and "ternary-on-binary" in proc.stdout
    proc = subprocess.run([sys.executable, "-m", "lyalg", "bogus"], capture_output=True, text=True)
    assert proc.returncode == 2 and proc.stderr
