import json
import os
import subprocess
import sys
from importlib import resources
from pathlib import Path

import pytest

from supertask.cli import main

GOLDEN = Path(__file__).parent / "golden"
DATA = resources.files("supertask").joinpath("data")
LAMP = str(DATA.joinpath("lamp.sts"))
FIG2 = str(DATA.joinpath("figure2.sts"))

CASES = {
    "lamp_off": ["lamp", "--initial", "off", "--runtime", "w"],
    "lamp_on": ["lamp", "--initial", "on"],
    "lamp_off_w2": ["lamp", "--initial", "off", "--runtime", "w*2"],
    "eval_fig2_start1": ["eval", FIG2, "--runtime", "w", "--start", "1"],
    "eval_lamp_w1": ["eval", LAMP, "--runtime", "w+1"],
    "analyze_lamp": ["analyze", LAMP],
    "analyze_fig2": ["analyze", FIG2],
    "ordinal_eval": ["ordinal", "eval", "1+w"],
    "ordinal_even": ["ordinal", "even", "w"],
    "ordinal_cmp": ["ordinal", "cmp", "w*2", "w+100"],
    "ordinal_decompose": ["ordinal", "decompose", "w+2", "w^2+w*3", "7"],
    "schedule_step": ["schedule", "--step", "2"],
    "schedule_time": ["schedule", "--time", "2"],
    "schedule_epsilon": ["schedule", "--epsilon", "1/4"],
    "grandi_cesaro": ["grandi", "--terms", "5", "--cesaro"],
    "grandi_leading": ["grandi", "--terms", "10", "--grouping", "leading-unpaired"],
    "grandi_paired": ["grandi", "--terms", "10", "--grouping", "fully-paired"],
    "pi_digit": ["pi-parity", "--digit", "2"],
    "pi_prefix": ["pi-parity", "--prefix", "5"],
    "pi_digits": ["pi-parity", "--digits", "100"],
    "lamp_json": ["--json", "lamp", "--initial", "on", "--runtime", "w+1"],
}


def run(capsys, argv):
    code = main(argv)
    out, err = capsys.readouterr()
    return code, out, err


@pytest.mark.parametrize("name", sorted(CASES))
def test_golden(capsys, name):
    code, out, err = run(capsys, CASES[name])
    assert code == 0
    assert out == (GOLDEN / f"{name}.out").read_text()
    assert err == ""


def test_golden_files_all_used():
    assert {p.stem for p in GOLDEN.glob("*.out")} == set(CASES)


@pytest.mark.parametrize(
    "argv, code, needle",
    [
        (["pi-parity", "--runtime", "w"], 3, "NoFinitePeriod"),
        (["pi-parity", "--runtime", "w+3"], 3, "NoFinitePeriod"),
        (["pi-parity", "--digit", "5000"], 3, "beyond"),
        (["schedule", "--time", "3"], 3, "outside"),
        (["schedule", "--epsilon", "0"], 3, "OmegaPosition"),
        (["schedule", "--epsilon", "abc"], 2, "rational"),
        (["ordinal", "eval", "w+"], 2, "position 2"),
        (["ordinal", "cmp", "w"], 1, "two expressions"),
        (["lamp", "--runtime", "w*0"], 2, "coefficient"),
        (["eval", FIG2, "--start", "9"], 1, "unknown start"),
        (["eval", "/nonexistent.sts"], 2, "cannot read"),
        (["grandi", "--terms", "3"], 1, "required"),
        (["grandi", "--terms", "0", "--cesaro"], 3, "at least one"),
        (["schedule", "--step", "1", "--time", "1"], 1, "not allowed"),
        (["bogus"], 1, "invalid choice"),
    ],
)
def test_errors(capsys, argv, code, needle):
    try:
        got = main(argv)
    except SystemExit as exc:
        got = exc.code
    out, err = capsys.readouterr()
    assert got == code
    assert out == ""
    assert needle in err


def test_eval_uses_file_runtime_and_selected(capsys, tmp_path):
    path = tmp_path / "s.sts"
    path.write_text("states: a b c\nstart: a b\nselected: b\ntransition: a -> b\ntransition: b -> c\n"
                    "transition: c -> b\nruntime: w+1\n")
    code, out, _ = run(capsys, ["eval", str(path)])
    assert code == 0
    assert out.splitlines()[:2] == ["final: c", "rule: LimitPlusRemainder"]


def test_eval_parse_failure(capsys, tmp_path):
    path = tmp_path / "bad.sts"
    path.write_text("states: a b\nstart: a\ntransition: a -> b\ntransition: a -> a\ntransition: b -> a\n")
    code, out, err = run(capsys, ["eval", str(path), "--runtime", "w"])
    assert code == 2 and out == ""
    assert "line 4" in err


def test_analyze_warns_on_stderr(capsys, tmp_path):
    path = tmp_path / "z.sts"
    path.write_text("states: off on z\nstart: off\ntransition: off -> on\ntransition: on -> off\n"
                    "transition: z -> z\n")
    code, out, err = run(capsys, ["analyze", str(path)])
    assert code == 0
    assert out == "off: mu=0 k=2 entry=off\n"
    assert "UnreachableState" in err


def test_json_outputs_parse(capsys):
    for argv in (["--json", "analyze", FIG2], ["ordinal", "--json", "decompose", "w+2"],
                 ["--json", "schedule", "--time", "7/4"], ["--json", "pi-parity", "--runtime", "2"],
                 ["--json", "grandi", "--terms", "3", "--cesaro"]):
        code, out, _ = run(capsys, argv)
        assert code == 0
        assert len(out.splitlines()) == 1
        json.loads(out)
    _, out, _ = run(capsys, ["--json", "schedule", "--time", "7/4"])
    assert json.loads(out)["position"] == "3"


def test_version(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["--version"])
    assert exc.value.code == 0
    assert capsys.readouterr().out.startswith("supertask ")


def test_subprocess_byte_determinism():
    argv = [sys.executable, "-m", "supertask", "pi-parity", "--prefix", "64"]
    env = dict(os.environ, LC_ALL="C")
    first = subprocess.run(argv, capture_output=True, check=True)
    second = subprocess.run(argv, capture_output=True, check=True, env=env)
    assert first.stdout == second.stdout
    assert first.stdout.endswith(b"\n") and first.stderr == b""
