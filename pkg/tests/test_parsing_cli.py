import json
import subprocess
import sys

import pytest

from apolar.cli import main
from apolar.parsing import (
    PolynomialSyntaxError,
    format_polynomial,
    format_rational,
    parse_polynomial,
)
from apolar.polynomials import graded_polynomial
from apolar.rng import substream
from fractions import Fraction

from sampling import random_polynomial


def test_parse_golden():
    f = parse_polynomial("x1^2 + x1*x2", 2)
    assert f.terms == {(2, 0): Fraction(1), (1, 1): Fraction(1)}


def test_parse_rational_coefficients():
    f = parse_polynomial("3/2 x1^3 - x2^3", 2)
    assert f.terms == {(3, 0): Fraction(3, 2), (0, 3): Fraction(-1)}


def test_parse_combines_like_terms():
    f = parse_polynomial("x1*x2 + 2*x2*x1", 2)
    assert f.terms == {(1, 1): Fraction(3)}


def test_parse_errors():
    with pytest.raises(ValueError):
        parse_polynomial("x1^2 + x2", 2)  # inhomogeneous
    with pytest.raises(ValueError):
        parse_polynomial("x1 - x1", 2)  # zero polynomial
    with pytest.raises(PolynomialSyntaxError):
        parse_polynomial("x3", 2)  # unknown variable
    with pytest.raises(PolynomialSyntaxError):
        parse_polynomial("x1 +", 2)
    with pytest.raises(PolynomialSyntaxError):
        parse_polynomial("x1 & x2", 2)
    with pytest.raises(PolynomialSyntaxError):
        parse_polynomial("u1^2", 2)  # no u-block declared


def test_parse_error_carries_offset():
    try:
        parse_polynomial("x1 + @", 2)
    except PolynomialSyntaxError as exc:
        assert exc.position == 5
    else:
        raise AssertionError("expected a syntax error")


def test_u_block_parsing():
    f = parse_polynomial("x1*u1^2 + x2*u1*u2", 4, num_u_vars=2)
    assert f.terms == {(1, 0, 2, 0): Fraction(1), (0, 1, 1, 1): Fraction(1)}


def test_format_golden():
    f = graded_polynomial(2, {(2, 0): 1, (1, 1): 1})
    assert format_polynomial(f) == "x1^2 + x1*x2"
    g = graded_polynomial(2, {(3, 0): Fraction(3, 2), (0, 3): -1})
    assert format_polynomial(g) == "3/2*x1^3 - x2^3"


def test_format_operator_uppercase():
    f = graded_polynomial(2, {(2, 0): 1, (1, 1): -1})
    assert format_polynomial(f, operator=True) == "X1^2 - X1*X2"


def test_format_rational():
    assert format_rational(Fraction(3, 2)) == "3/2"
    assert format_rational(Fraction(4)) == "4"


@pytest.mark.parametrize("trial", range(25))
def test_roundtrip_random(trial):
    rng = substream(4001, trial)
    n, d = 1 + rng.below(4), 1 + rng.below(4)
    f = random_polynomial(rng, n, d)
    assert parse_polynomial(format_polynomial(f), n) == f


def test_roundtrip_with_u_block():
    from apolar.perazzo import build_full_perazzo

    f = build_full_perazzo(2, 3)
    text = format_polynomial(f, num_u_vars=2)
    assert parse_polynomial(text, f.num_vars, num_u_vars=2) == f


def _run_cli(args):
    proc = subprocess.run(
        [sys.executable, "-m", "apolar.cli", *args],
        capture_output=True,
        text=True,
    )
    return proc


def test_cli_hilbert_json(capsys):
    assert main(["hilbert", "--poly", "x1^2 + x1*x2", "--nvars", "2"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["hilbert"] == [1, 2, 1]
    assert payload["standard"] is True
    assert payload["schema_version"] == 1


def test_cli_ann(capsys):
    assert main(
        ["ann", "--poly", "x1^2 + x1*x2", "--nvars", "2", "--degree", "2"]
    ) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["dimension"] == 2
    assert payload["basis"] == ["X2^2", "-X1^2 + X1*X2"]


def test_cli_generators(capsys):
    assert main(["generators", "--poly", "x1^2 + x1*x2", "--nvars", "2"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["verified"] is True
    assert payload["nonface_monomials"] == {"2": ["X2^2"]}


def test_cli_cw(capsys):
    assert main(["cw", "--poly", "x1^2 + x1*x2", "--nvars", "2"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["cell_counts"] == [1, 2, 2]
    assert payload["minimal_nonfaces"]["2"] == ["x2^2"]


def test_cli_cw_dot(capsys):
    assert main(
        ["cw", "--poly", "x1^2 + x1*x2", "--nvars", "2", "--export", "dot"]
    ) == 0
    out = capsys.readouterr().out
    assert out.startswith("digraph")
    assert '"x1" -> "x1^2"' in out


def test_cli_locus_enumerate_csv(capsys):
    assert main(
        ["locus", "enumerate", "--nvars", "2", "--degree", "2", "--format", "csv"]
    ) == 0
    out = capsys.readouterr().out.strip().splitlines()
    assert out[0] == "index,support,derived_set,dim_support,dim_derived"
    assert len(out) > 1


def test_cli_locus_stcheck(capsys):
    assert main(
        ["locus", "stcheck", "--poly", "x1^2*x2 + x1*x2^2", "--nvars", "2"]
    ) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["no_cross_collision"] is False
    assert payload["standard_linear_algebra"] is True


def test_cli_locus_maps(capsys):
    assert main(["locus", "maps", "--n", "2", "--d", "2"]) == 0
    payload = json.loads(capsys.readouterr().out)
    elim = payload["maps"]["u_elimination"]
    assert elim["kernel_dim"] == 7
    assert elim["formula_matches"] is False


def test_cli_perazzo_hilbert(capsys):
    assert main(["perazzo", "hilbert", "--n", "2", "--d", "3"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["hilbert"] == [1, 5, 5, 1]


def test_cli_conjecture_zero_trials(capsys):
    assert main(
        ["conjecture", "--n", "2", "--d", "4", "--trials", "0", "--seed", "1"]
    ) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["hilbert_full_perazzo"] == [1, 6, 6, 6, 1]
    assert payload["violators"] == []


def test_cli_exit_codes():
    usage = _run_cli(["hilbert", "--nvars", "2"])  # missing --poly
    assert usage.returncode == 1
    bad_poly = _run_cli(["hilbert", "--poly", "x1 + x2^2", "--nvars", "2"])
    assert bad_poly.returncode == 1
    guard = _run_cli(
        ["locus", "enumerate", "--nvars", "3", "--degree", "4", "--guard", "5"]
    )
    assert guard.returncode == 2
    ok = _run_cli(["hilbert", "--poly", "x1^2", "--nvars", "1"])
    assert ok.returncode == 0


def test_cli_output_byte_stable():
    a = _run_cli(["perazzo", "census", "--n", "2", "--d", "3"])
    b = _run_cli(["perazzo", "census", "--n", "2", "--d", "3"])
    assert a.stdout == b.stdout
    assert a.returncode == 0
