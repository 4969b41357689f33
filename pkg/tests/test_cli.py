import json
import subprocess
import sys

import pytest

from conftest import CORPUS

EX25 = str(CORPUS / "ex_2_5.alg")
EX26 = str(CORPUS / "ex_2_6.alg")
EX68 = str(CORPUS / "ex_6_8.alg")
CHAIN = str(CORPUS / "ex_2_chain.alg")

COMMANDS = [
    ["validate", EX25],
    ["validate", EX25, "--json"],
    ["props", EX25],
    ["props", str(CORPUS / "ex_nonlinear_heyting.alg"), "--json"],
    ["enum", "into", EX25],
    ["enum", "vto", EX25],
    ["enum", "vto", EX25, "--json"],
    ["enum", "clo", EX25],
    ["enum", "ds", EX68],
    ["enum", "dsn", EX68],
    ["enum", "dsv", EX25, "--vto", "v1"],
    ["enum", "vto", EX26],
    ["enum", "hom", EX26],
    ["enum", "vthom", EX26, "--vto", "v10"],
    ["enum", "cong", EX68, "--json"],
    ["enum", "smarandache", EX68],
    ["enum", "svto", EX68, "--q", "Q"],
    ["quotient", EX68, "--ds", "H"],
    ["quotient", EX68, "--ds", "H", "--json"],
    ["lift", EX68, "--vto", "v4", "--ds", "H"],
    ["hedges", EX25, "--vto", "v2"],
    ["factor", EX26, "--map", "psi3", "--vto", "v10", "--ds", "T"],
    ["valuation", "check", EX25, "--valuation", "phi"],
    ["valuation", "compose", EX25, "--valuation", "phi", "--vto", "v2"],
    ["suite", CHAIN],
    ["suite", EX25, "--json"],
]


def run(args):
    return subprocess.run(
        [sys.executable, "-m", "psbck.cli", *args],
        capture_output=True,
        timeout=120,
    )


@pytest.mark.parametrize("args", COMMANDS, ids=lambda a: "-".join(a[:2]))
def test_commands_succeed_and_are_deterministic(args):
    first = run(args)
    second = run(args)
    assert first.returncode == 0, first.stderr.decode()
    assert second.returncode == 0
    assert first.stdout == second.stdout
    assert first.stderr == second.stderr == b""


def test_enum_vto_golden_text():
    out = run(["enum", "vto", EX25]).stdout.decode()
    assert out == (
        "vto maps on A (4):\n"
        "  1 a a a\n"
        "  1 a b a\n"
        "  1 a b c\n"
        "  1 a c c\n"
    )


def test_json_payloads_carry_schema():
    for args in ([ "enum", "vto", EX25, "--json"], ["props", EX25, "--json"]):
        payload = json.loads(run(args).stdout)
        assert payload["schema"] == 1


def test_validate_flags_axiom_failure(tmp_path):
    bad = (CORPUS / "ex_2_5.alg").read_text(encoding="utf-8").replace(
        "    1 a 1 c", "    1 c 1 c", 1
    )
    path = tmp_path / "bad.alg"
    path.write_text(bad, encoding="utf-8")
    res = run(["validate", str(path)])
    assert res.returncode == 1
    assert b"NOT CERTIFIED" in res.stdout


def test_parse_error_exits_2(tmp_path):
    path = tmp_path / "broken.alg"
    path.write_text("algebra A\n  elements: 1\n", encoding="utf-8")
    res = run(["validate", str(path)])
    assert res.returncode == 2
    assert res.stderr.startswith(b"E_PARSE:")


def test_missing_file_exits_2():
    res = run(["props", str(CORPUS / "nope.alg")])
    assert res.returncode == 2
    assert b"cannot read" in res.stderr


def test_unknown_map_exits_2():
    res = run(["enum", "vthom", EX26, "--vto", "v99"])
    assert res.returncode == 2
    assert b"no map named" in res.stderr


def test_non_normal_quotient_exits_2():
    res = run(["quotient", EX25, "--ds", "D"])
    assert res.returncode == 2
    assert b"E_NOT_NORMAL" in res.stderr or b"normal" in res.stderr


def test_main_is_callable_in_process(capsys):
    from psbck.cli import main

    assert main(["enum", "vto", EX25]) == 0
    assert "vto maps on A (4):" in capsys.readouterr().out
