import json

from lattice_rr.cli import main
from lattice_rr.lattice_config import BenchSettings


def run_cli(capsys, *args):
    exit_code = main(list(args))
    return exit_code, capsys.readouterr().out


def test_count_prints_the_number_of_points(capsys):
    assert run_cli(capsys, "count", "19", "77", "12", "1528") == (0, "70\n")
    assert run_cli(capsys, "count", "1", "1", "1", "0") == (0, "1\n")


def test_count_explains_the_reduction(capsys):
    exit_code, out = run_cli(capsys, "count", "1235", "6545", "2652", "1710721", "--explain")
    assert exit_code == 0
    assert "v = (19,77,12)" in out
    assert "e = 1528" in out
    assert "r = (1,2,3)" in out
    assert "quadratic term = 312476/4389" in out
    assert "R = -9635/4389" in out
    assert "count = 1 + 312476/4389 - 9635/4389 = 70" in out
    assert out.splitlines()[-1] == "70"


def test_count_as_json(capsys):
    exit_code, out = run_cli(capsys, "count", "19", "77", "12", "1528", "--json")
    assert exit_code == 0
    assert json.loads(out) == {"weights": ["19", "77", "12"], "degree": "1528", "count": "70"}


def test_explained_count_as_json(capsys):
    _, out = run_cli(capsys, "count", "1235", "6545", "2652", "1710721", "--explain", "--json")
    payload = json.loads(out)
    assert payload["reduction"]["e"] == "1528"
    assert payload["correction"] == {"num": "-9635", "den": "4389"}
    assert payload["local_terms"][0]["chain"][0]["term"] == {"num": "-40", "den": "57"}


def test_rational_commands(capsys):
    assert run_cli(capsys, "correction", "19", "77", "12", "1528") == (0, "-7/19\n")
    assert run_cli(capsys, "delta", "19", "-1", "7", "8") == (0, "7/19\n")
    assert run_cli(capsys, "chi", "19", "77", "12", "-5") == (0, "0\n")
    assert run_cli(capsys, "lct", "19", "12") == (0, "7/19\n")
    assert run_cli(capsys, "pick", "61", "9") == (0, "129/2\n")


def test_correction_as_json(capsys):
    _, out = run_cli(capsys, "correction", "19", "77", "12", "1528", "--json")
    payload = json.loads(out)
    assert payload["value"] == {"num": "-7", "den": "19"}
    assert payload["type"] == {"d": "19", "a": "1", "b": "12"}


def test_hj_prints_the_continued_fraction(capsys):
    assert run_cli(capsys, "hj", "19", "12") == (0, "c=[2,3,2,3] q=[12,5,3,1] qbar=[1,2,5,8]\n")
    _, out = run_cli(capsys, "hj", "19", "12", "--json")
    payload = json.loads(out)
    assert payload["kappa"][0] == {"num": "-6", "den": "19"}
    assert payload["matrix"][0] == ["-2", "1", "0", "0"]


def test_reduce_prints_reduction_data(capsys):
    exit_code, out = run_cli(capsys, "reduce", "1235", "6545", "2652", "1710721")
    assert exit_code == 0
    assert out.splitlines() == ["w01 = 5, w02 = 13, w12 = 17", "r = (1,2,3)", "v = (19,77,12)", "e = 1528"]


def test_blache_reports(capsys):
    exit_code, out = run_cli(capsys, "blache", "19", "12", "--json")
    assert exit_code == 0
    payload = json.loads(out)
    assert payload["holds"] is True
    assert payload["attained_at"] == ["4", "15"]
    assert payload["diff_bound"] == {"num": "12", "den": "19"}
    exit_code, out = run_cli(capsys, "blache", "19", "12")
    assert "holds = True" in out


def test_domain_errors_exit_with_three(capsys):
    assert run_cli(capsys, "correction", "12", "3", "5", "1")[0] == 3
    assert run_cli(capsys, "hj", "12", "8")[0] == 3
    assert run_cli(capsys, "chi", "2", "2", "3", "5")[0] == 3


def test_usage_errors_exit_with_two(capsys):
    assert run_cli(capsys, "count", "19", "77", "12")[0] == 2
    assert run_cli(capsys, "count", "19", "x", "12", "5")[0] == 2
    assert run_cli(capsys, "count", "19", "77", "12", "-5")[0] == 2
    assert run_cli(capsys, "unknown")[0] == 2


def test_verify_passes_on_small_scale(capsys):
    exit_code, out = run_cli(capsys, "verify", "--max-weight", "8", "--max-degree", "60",
                             "--max-type-order", "20", "--cases", "40", "--json")
    assert exit_code == 0
    assert json.loads(out)["passed"] is True


def test_verify_with_unit_weights(capsys):
    exit_code, _ = run_cli(capsys, "verify", "--max-weight", "1", "--max-degree", "40",
                           "--max-type-order", "15", "--cases", "20", "--json")
    assert exit_code == 0


def test_verify_beyond_the_oracle_limits_is_a_domain_error(capsys):
    exit_code, _ = run_cli(capsys, "verify", "--max-weight", "1", "--max-degree", "12000",
                           "--cases", "8", "--json")
    assert exit_code == 3


def test_bench_fib(capsys):
    exit_code, out = run_cli(capsys, "bench", "--fib", "40", "--json")
    assert exit_code == 0
    rows = json.loads(out)["fib"]
    assert rows[4]["d"] == "8" and rows[4]["steps"] == "4"
    assert rows[-1]["steps"] == "39"


def test_bench_fib_defaults_to_the_configured_index(capsys):
    exit_code, out = run_cli(capsys, "bench", "--fib", "--json")
    assert exit_code == 0
    assert len(json.loads(out)["fib"]) == BenchSettings().fib_steps == 40


def test_bench_random_with_huge_degree(capsys):
    exit_code, out = run_cli(capsys, "bench", "--random", "--max-weight", "1000000",
                             "--degree", "1000000000000", "--samples", "5", "--json")
    assert exit_code == 0
    rows = json.loads(out)["random"]
    assert len(rows) == 5 and all(row["series_count"] is None for row in rows)
