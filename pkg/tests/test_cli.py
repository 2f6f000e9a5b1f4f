import io
import json
import sys
from pathlib import Path

import pytest
from hypothesis import given, settings

from olacat.cli import main
from olacat.weights import parse_weight

from conftest import weights

GOLDEN = Path(__file__).parent / "golden"

CASES = {
    "mult_standard": ["mult", "standard", "--n", "1", "--lambda", "0", "--mu", "e[-1,1]-e[1,1]"],
    "mult_verma": ["mult", "verma", "--n", "1", "--lambda=-e[2,1]+e[3,1]",
                   "--mu=-2*e[1,1]-2*e[2,1]+2*e[3,1]+2*e[4,1]"],
    "mult_parabolic": ["mult", "parabolic", "--n", "1", "--lambda", "0", "--mu=-e[1,1]+e[2,1]",
                       "--rank", "2"],
    "mult_parabolic_uncovered": ["mult", "parabolic", "--n", "1", "--lambda", "0",
                                 "--mu=-e[1,1]+e[2,1]", "--rank", "1"],
    "flag_injective": ["flag", "injective", "--n", "1", "--lambda=-e[1,1]+e[2,1]"],
    "flag_psi": ["flag", "psi", "--n", "1", "--lambda", "0", "--degree", "-1", "--rank", "2"],
    "flag_psi_text": ["flag", "psi", "--n", "2", "--lambda", "w[1]", "--degree=-1",
                      "--format", "text"],
    "socle": ["socle", "--lambda", "[[1]]", "--mu", "[[1]]"],
    "ladual": ["ladual", "--lambda", "[[2,1]]", "--mu", "[[1]]"],
    "order_check": ["order", "check", "--n", "1", "--lower", "e[-1,1]-e[1,1]", "--upper", "0"],
    "order_interval": ["order", "interval", "--n", "1", "--lower", "e[-1,1]-e[1,1]", "--upper", "0"],
    "order_hasse": ["order", "hasse", "--n", "1", "--lower", "e[-1,1]-e[1,1]", "--upper", "0"],
    "order_hasse_dot": ["order", "hasse", "--n", "1", "--lower", "e[-1,1]-e[1,1]", "--upper", "0",
                        "--dot"],
    "block_w1": ["block", "--n", "2", "--weight", "w[1]"],
    "block_w2": ["block", "--n", "2", "--weight", "w[2]"],
    "kl": ["kl", "--x", "1324", "--w", "3412"],
    "lr": ["lr", "--lambda", "[1]", "--mu", "[1]", "--nu", "[2]"],
    "certify_quick": ["certify", "--quick"],
}


def run(argv):
    out, err = io.StringIO(), io.StringIO()
    code = main(argv, out=out, err=err)
    return code, out.getvalue(), err.getvalue()


@pytest.mark.parametrize("name", sorted(CASES))
def test_golden(name):
    code, out, err = run(CASES[name])
    assert code == 0, err
    assert out == (GOLDEN / f"{name}.txt").read_text()


def test_documented_values():
    assert json.loads(run(CASES["mult_standard"])[1])["result"] == {"multiplicity": 1}
    assert json.loads(run(CASES["lr"])[1])["result"] == {"coefficient": 1}
    one = json.loads(run(CASES["block_w1"])[1])["result"]
    two = json.loads(run(CASES["block_w2"])[1])["result"]
    assert one != two
    assert json.loads(run(CASES["mult_parabolic_uncovered"])[1])["result"]["covered"] is False


def test_envelope_keys():
    doc = json.loads(run(CASES["order_check"])[1])
    assert set(doc) == {"query", "n", "rank_used", "stabilized", "result"}


def emitted_weights(doc):
    """Every weight string in a document from the commands that emit weights."""
    result = doc["result"]
    if "entries" in result:
        return [e["weight"] for e in result["entries"]]
    if "layers" in result:
        return [e["weight"] for e in result["layers"]]
    if "elements" in result:
        return result["elements"]
    return []


@settings(max_examples=40, deadline=None)
@given(weights(n=1, r=2, spread=2))
def test_weight_strings_round_trip(lam):
    text = str(lam)
    for argv in (["flag", "injective", "--n", "1", f"--lambda={text}"],
                 ["flag", "psi", "--n", "1", f"--lambda={text}", "--degree=-1"]):
        code, out, _ = run(argv)
        assert code == 0
        doc = json.loads(out)
        assert parse_weight(doc["query"]["lambda"], 1) == lam
        for s in emitted_weights(doc):
            assert str(parse_weight(s, 1)) == s


def test_interval_strings_round_trip():
    doc = json.loads(run(CASES["order_interval"])[1])
    for s in doc["result"]["elements"]:
        assert str(parse_weight(s, 1)) == s


@pytest.mark.parametrize("argv", [
    ["block", "--n", "1", "--weight", "e[1,0]"],
    ["block", "--n", "1", "--weight", "e[1,1"],
    ["kl", "--x", "12", "--w", "123"],
    ["kl", "--x", "113", "--w", "123"],
    ["lr", "--lambda", "[1,2]", "--mu", "[1]", "--nu", "[2]"],
    ["mult", "parabolic", "--n", "1", "--lambda", "0", "--mu", "0"],
    ["mult", "verma", "--n", "0", "--lambda", "0", "--mu", "0"],
    ["socle", "--lambda", "[[1]]", "--mu", "[[1],[1]]"],
    ["nonsense"],
])
def test_input_errors_exit_2(argv):
    code, out, err = run(argv)
    assert code == 2
    assert err.strip()


@pytest.mark.parametrize("argv", [
    ["kl", "--x", "123456789", "--w", "123456789"],
    ["mult", "standard", "--n", "1", "--lambda", "0", "--mu=-2*e[1,1]+2*e[-1,1]",
     "--height-budget", "1"],
    ["order", "check", "--n", "1", "--lower", "w[1]-2*e[2,1]+e[-3,1]+2*e[-1,1]",
     "--upper", "w[1]+e[-1,1]", "--bfs-depth", "2"],
])
def test_resource_caps_exit_3(argv):
    code, _, err = run(argv)
    assert code == 3
    assert "limit exceeded" in err


def test_rank_override_keeps_stabilized_values():
    base = json.loads(run(CASES["mult_verma"])[1])
    raised = json.loads(run(CASES["mult_verma"] + ["--rank", "7"])[1])
    assert base["stabilized"] and raised["stabilized"]
    assert base["result"] == raised["result"]
    low = json.loads(run(["order", "check", "--n", "1", "--lower", "e[-1,1]-e[1,1]", "--upper", "0",
                          "--rank", "3"])[1])
    assert low["result"] == json.loads(run(CASES["order_check"])[1])["result"]


if __name__ == "__main__" and "--regen" in sys.argv:
    GOLDEN.mkdir(exist_ok=True)
    for name, argv in CASES.items():
        code, out, err = run(argv)
        assert code == 0, (name, err)
        (GOLDEN / f"{name}.txt").write_text(out)
        print("wrote", name)
