import pytest

from aronson.bfile import read_bfile
from aronson.cli import parse_rule, run
from aronson.engine import Mode
from aronson.registry import REGISTRY


def values(out):
    return [int(line.split()[1]) for line in out.splitlines() if line and not line.startswith("#")]


def test_gen(capsys):
    assert run(["gen", "a", "--count", "12"]) == 0
    assert values(capsys.readouterr().out) == list(REGISTRY["a"].ground_truth[:12])


def test_gen_theorem1_and_alias(capsys):
    assert run(["gen", "f(2,1)", "--count", "5"]) == 0
    assert values(capsys.readouterr().out) == [2, 3, 5, 6, 7]
    assert run(["gen", "A003605", "--count", "4"]) == 0
    assert values(capsys.readouterr().out) == [2, 3, 6, 7]


def test_inline_rule(capsys):
    assert run(["gen", "oracle=multiples:6,seeds=2", "--count", "10"]) == 0
    assert values(capsys.readouterr().out) == list(REGISTRY["h"].ground_truth)
    assert run(["gen", "oracle=odds,mode=negated,seeds=2", "--count", "6"]) == 0
    assert values(capsys.readouterr().out) == [2, 4, 5, 6, 8, 10]
    assert run(["gen", "window=odd-before-even", "--count", "6"]) == 0
    assert values(capsys.readouterr().out) == [1, 4, 6, 9, 12, 15]


def test_parse_rule():
    r = parse_rule("oracle=residue:3:0,mode=onlyif,n0=0,seeds=0;2,monotone=false")
    assert r.mode is Mode.ONLY_IF and r.n0 == 0 and r.seeds == (0, 2) and not r.monotone


@pytest.mark.parametrize("argv", [
    ["gen", "nosuch"],
    ["gen", "oracle=odds,colour=red"],
    ["gen", "oracle=odds,mode=sometimes"],
    ["gen", "oracle=cubes"],
    ["gen", "seeds=1"],
    ["gen", "f(2,0)"],
    ["verify", "nosuch"],
    ["solve-square", "--y", "3", "--z", "0", "--seed", "x"],
])
def test_usage_errors_exit_2(argv, capsys):
    assert run(argv) == 2
    assert "error" in capsys.readouterr().err


def test_bad_flags_exit_2():
    with pytest.raises(SystemExit) as exc:
        run(["gen", "a", "--count", "0"])
    assert exc.value.code == 2


def test_inverse(capsys):
    assert run(["inverse", "--alpha", "squares", "--count", "7"]) == 0
    assert values(capsys.readouterr().out) == [1, 3, 5, 6, 7, 8, 16]


def test_transform(capsys):
    assert run(["transform", "--beta", "primes", "--count", "10"]) == 0
    assert values(capsys.readouterr().out) == list(REGISTRY["T(primes)"].ground_truth)


def test_bfile_round_trip(tmp_path, capsys):
    path = tmp_path / "sq.txt"
    assert run(["gen", "T(squares)", "--count", "30", "--bfile", str(path)]) == 0
    assert read_bfile(path).terms == REGISTRY["T(squares)"].generate(30).terms
    # transforming the inverse read back from disk reproduces the original
    inv = tmp_path / "inv.txt"
    assert run(["inverse", "--alpha", "squares", "--count", "200", "--bfile", str(inv)]) == 0
    assert run(["transform", "--beta", f"bfile:{inv}", "--count", "12"]) == 0
    assert values(capsys.readouterr().out) == [k * k for k in range(1, 13)]


def test_square(capsys):
    assert run(["square", "--seq", "a", "--count", "5"]) == 0
    assert values(capsys.readouterr().out) == [1, 7, 9, 11, 13]


def test_solve_square(capsys):
    assert run(["solve-square", "--y", "3", "--z", "0", "--count", "6"]) == 0
    assert values(capsys.readouterr().out) == [2, 3, 6, 7, 8, 9]
    argv = ["solve-square", "--y", "2", "--z", "3", "--start", "2", "--count", "8",
            "--seed", "1=1", "--seed", "2=4", "--seed", "3=6"]
    assert run(argv) == 0
    assert values(capsys.readouterr().out) == list(REGISTRY["a"].ground_truth[:8])


def test_solve_square_contradiction_exits_1(capsys):
    assert run(["solve-square", "--y", "3", "--z", "0", "--seed", "1=1"]) == 1


def test_diff(capsys):
    assert run(["diff", "--seq", "a", "--count", "8"]) == 0
    assert values(capsys.readouterr().out) == [3, 2, 1, 1, 1, 2, 2, 2]


def test_verify(capsys):
    assert run(["verify", "c_shift", "--horizon", "500"]) == 0
    assert capsys.readouterr().out.strip() == "c_shift, 500, PASS"


def test_verify_all(capsys):
    assert run(["verify", "all", "--horizon", "10000"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines and all(line.endswith("PASS") for line in lines)


def test_stats_density(capsys):
    assert run(["stats", "density", "--segment", "10"]) == 0
    out = capsys.readouterr().out
    assert "max n/a(n) 0.74993" in out and "at n=9213" in out
    assert "limit 0.707" in out
