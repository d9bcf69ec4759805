import json

import pytest

from lambdacond.cli import RunConfig, main, parse_config, run


def test_verify_c2(capsys):
    assert main(["verify", "2:2"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["group"] == "2:2"
    assert all(c["pass"] for c in data["checks"])


def test_conductor_c4(capsys):
    assert main(["conductor", "2:4"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert len(data["classes"]) == 3
    assert data["I"]["rank"] == 4


def test_product(capsys):
    assert main(["product", "2:2", "3:3", "--samples", "20", "--text"]) == 0
    assert "checks passed" in capsys.readouterr().out


def test_classes_text(capsys):
    assert main(["classes", "2:2,2", "--text"]) == 0
    out = capsys.readouterr().out
    assert "character classes of 2:2,2" in out


def test_lambda_command(capsys):
    assert main(["lambda", "3:3", "--samples", "10"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["I_lambda"]["rank"] == 2
    assert data["indices"]["R/I_lambda"] == "infinite"


@pytest.mark.parametrize(
    "argv",
    [["verify", "2:6"], ["verify"], ["product", "2:2"], ["frobnicate", "2:2"], ["verify", "2:2", "--primes", "4"]],
)
def test_bad_input_exits_2(argv):
    with pytest.raises(SystemExit) as exc:
        main(argv)
    assert exc.value.code == 2


def test_order_bound(capsys):
    assert main(["verify", "2:4,4", "--max-order", "8"]) == 2


def test_out_file_and_determinism(tmp_path, capsys):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    main(["verify", "3:9", "--out", str(a), "--seed", "5", "--samples", "30"])
    main(["verify", "3:9", "--out", str(b), "--seed", "5", "--samples", "30"])
    assert a.read_bytes() == b.read_bytes()


def test_all_sweep(capsys):
    assert main(["all", "--max-order", "8", "--samples", "10", "--text"]) == 0
    out = capsys.readouterr().out
    assert out.count("PASS") == 9
    assert "FAIL" not in out
