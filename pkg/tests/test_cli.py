import numpy as np
import pytest

from batchkit import GF2, LinearBatchCode, MatrixFq, subcube_code
from batchkit.cli import (
    CodeFileError,
    main,
    parse_code_file,
    parse_construct_expr,
    serialize_code,
)
from conftest import EXAMPLE2_ROWS, EXAMPLE3_ROWS

SUBCUBE_FILE = """\
2 2 3 3 1
1
2
3
1 0 1
0 1 1
"""


def write_code(tmp_path, name, code):
    path = tmp_path / name
    path.write_text(serialize_code(code))
    return str(path)


@pytest.fixture
def example2_file(tmp_path, example2_code):
    return write_code(tmp_path, "example2.code", example2_code)


@pytest.fixture
def example3_file(tmp_path, example3_code):
    return write_code(tmp_path, "example3.code", example3_code)


class TestCodeFileFormat:
    def test_parse_subcube(self):
        code = parse_code_file(SUBCUBE_FILE)
        assert code.matrix.entries.tolist() == [[1, 0, 1], [0, 1, 1]]
        assert code.buckets == ((0,), (1,), (2,))
        assert (code.q, code.n, code.N, code.M, code.t) == (2, 2, 3, 3, 1)

    def test_parse_example2(self, example2_code):
        text = serialize_code(example2_code)
        assert parse_code_file(text).matrix.entries.tolist() == EXAMPLE2_ROWS

    def test_round_trip_corpus(self, example2_code, example3_code):
        corpus = [
            example2_code,
            example3_code,
            subcube_code(4, 2),
            subcube_code(6, 1, q=3),
            LinearBatchCode(MatrixFq(GF2, EXAMPLE3_ROWS), [(0, 2), (1,), (3,)], t=2),
        ]
        for code in corpus:
            text = serialize_code(code)
            again = parse_code_file(text)
            assert serialize_code(again) == text
            assert again.matrix == code.matrix
            assert again.buckets == code.buckets
            assert again.t == code.t

    def test_partition_error(self):
        bad = "2 2 3 3 1\n1\n2\n2\n1 0 1\n0 1 1\n"
        with pytest.raises(CodeFileError, match="partition"):
            parse_code_file(bad)

    def test_malformed_header(self):
        with pytest.raises(CodeFileError, match="line 1"):
            parse_code_file("2 2 3\n")
        with pytest.raises(CodeFileError, match="prime"):
            parse_code_file("4 2 3 3 1\n1\n2\n3\n1 0 1\n0 1 1\n")

    def test_out_of_range_entry(self):
        bad = "2 2 3 3 1\n1\n2\n3\n1 0 2\n0 1 1\n"
        with pytest.raises(CodeFileError, match="line 5"):
            parse_code_file(bad)

    def test_column_index_out_of_range(self):
        bad = "2 2 3 3 1\n1\n2\n4\n1 0 1\n0 1 1\n"
        with pytest.raises(CodeFileError, match="line 4"):
            parse_code_file(bad)

    def test_truncated_file(self):
        with pytest.raises(CodeFileError, match="expected"):
            parse_code_file("2 2 3 3 1\n1\n2\n3\n1 0 1\n")

    def test_trailing_content(self):
        with pytest.raises(CodeFileError, match="trailing"):
            parse_code_file(SUBCUBE_FILE + "0 0 0\n")


class TestConstructExpr:
    def test_subcube(self):
        code = parse_construct_expr("subcube(2,1)")
        assert code.matrix.entries.tolist() == [[1, 0, 1], [0, 1, 1]]

    def test_nested_compose_matches_example2(self):
        code = parse_construct_expr("compose(subcube(4,1), subcube(2,1))")
        assert code.matrix.entries.tolist() == EXAMPLE2_ROWS

    def test_file_leaves(self, tmp_path):
        path = write_code(tmp_path, "a.code", subcube_code(2, 1))
        code = parse_construct_expr(f"concat({path},{path})")
        assert (code.n, code.N) == (2, 6)

    def test_extend_digit_string(self):
        code = parse_construct_expr("extend(subcube(2,1),101)")
        assert code.matrix.entries[2].tolist() == [1, 0, 1, 1, 1]

    def test_dsum(self):
        code = parse_construct_expr("dsum(subcube(2,1),subcube(2,1))")
        assert (code.n, code.N) == (4, 6)

    def test_bad_expression(self):
        with pytest.raises(ValueError):
            parse_construct_expr("extend(subcube(2,1),abc)")
        with pytest.raises((ValueError, FileNotFoundError, OSError)):
            parse_construct_expr("no_such_file.code")


class TestCommands:
    def test_verify_holds(self, example2_file, capsys):
        assert main(["verify", "--code", example2_file, "--m", "4"]) == 0
        assert capsys.readouterr().out.strip() == "holds"

    def test_verify_fails_with_witness(self, example3_file, capsys):
        status = main(["verify", "--code", example3_file, "--m", "2", "--format", "machine"])
        assert status == 1
        assert capsys.readouterr().out.splitlines() == ["verdict=fails", "witness=2,3"]

    def test_plan_feasible(self, example2_file, capsys):
        assert main(["plan", "--code", example2_file, "--request", "1,1,2,2"]) == 0
        out = capsys.readouterr().out.splitlines()
        assert out[0] == "feasible"
        assert out[1:] == [
            "x1 = y1",
            "x1 = y2 + y3",
            "x2 = y5 + y8",
            "x2 = y4 + y6 + y7 + y9",
        ]

    def test_plan_infeasible(self, example3_file, capsys):
        assert main(["plan", "--code", example3_file, "--request", "2,3"]) == 1
        assert capsys.readouterr().out.strip() == "infeasible"

    def test_plan_infeasible_under_cap(self, example3_file, capsys):
        status = main(
            ["plan", "--code", example3_file, "--request", "2", "--cap", "1"]
        )
        assert status == 1
        assert capsys.readouterr().out.strip() == "infeasible-under-cap"

    def test_plan_request_canonicalized(self, example2_file, capsys):
        assert main(
            ["plan", "--code", example2_file, "--request", "2,1", "--format", "machine"]
        ) == 0
        out = capsys.readouterr().out.splitlines()
        assert "request=1,2" in out

    def test_encode(self, example2_file, capsys):
        assert main(["encode", "--code", example2_file, "--x", "1,0,1,1"]) == 0
        assert capsys.readouterr().out.strip() == "y=1,0,1,1,1,0,0,1,1"

    def test_distance(self, example3_file, capsys):
        assert main(["distance", "--code", example3_file, "--format", "machine"]) == 0
        assert capsys.readouterr().out.strip() == "distance=2"

    def test_certify(self, example2_file, capsys):
        assert main(["certify", "--code", example2_file]) == 0
        assert capsys.readouterr().out.strip() == "max_m=4"

    def test_bounds_satisfied(self, capsys):
        assert main(["bounds", "--M", "9", "--n", "4", "--m", "4"]) == 0
        out = capsys.readouterr().out
        assert "sphere-packing: satisfied (lhs 32, rhs 10, slack 22)" in out
        assert "plotkin: satisfied (lhs 60, rhs 72, slack 12)" in out
        assert "griesmer: satisfied (lhs 9, rhs 8, slack 1)" in out

    def test_bounds_violated_status(self, capsys):
        assert main(["bounds", "--M", "3", "--n", "2", "--m", "3"]) == 1

    def test_bounds_sweep(self, capsys):
        assert main(["bounds", "--M", "9", "--n", "4"]) == 0
        assert capsys.readouterr().out.strip() == "max_m=4"

    def test_construct_to_file(self, tmp_path, capsys):
        out_path = tmp_path / "out.code"
        status = main(
            ["construct", "--expr", "compose(subcube(4,1),subcube(2,1))", "--out", str(out_path)]
        )
        assert status == 0
        code = parse_code_file(out_path.read_text())
        assert code.matrix.entries.tolist() == EXAMPLE2_ROWS

    def test_simulate_single_request(self, example2_file, capsys):
        status = main(
            [
                "simulate", "--code", example2_file,
                "--request", "1,1,2,2", "--x", "1,0,1,1",
                "--format", "machine",
            ]
        )
        assert status == 0
        out = capsys.readouterr().out.splitlines()
        assert out[0] == "verdict=feasible"
        assert "x1=1" in out and "x2=0" in out

    def test_simulate_infeasible(self, example3_file, capsys):
        status = main(["simulate", "--code", example3_file, "--request", "2,3", "--x", "1,1,0"])
        assert status == 1

    def test_simulate_workload(self, example2_file, capsys):
        status = main(
            ["simulate", "--code", example2_file, "--m", "4", "--trials", "50", "--seed", "7"]
        )
        assert status == 0
        out = capsys.readouterr().out.splitlines()
        assert "feasible=50" in out
        assert "max_load=1" in out

    def test_usage_error_status(self, capsys):
        assert main(["verify", "--code"]) == 2
        assert main(["frobnicate"]) == 2

    def test_parse_error_status(self, tmp_path, capsys):
        bad = tmp_path / "bad.code"
        bad.write_text("2 2 3\n")
        assert main(["verify", "--code", str(bad), "--m", "1"]) == 2
        assert "error:" in capsys.readouterr().err

    def test_missing_file_status(self, capsys):
        assert main(["certify", "--code", "does_not_exist.code"]) == 2

    def test_request_index_validation(self, example2_file, capsys):
        assert main(["plan", "--code", example2_file, "--request", "5"]) == 2
        assert "out of range [1, 4]" in capsys.readouterr().err

    def test_status_independent_of_format(self, example3_file):
        for fmt in ("text", "machine"):
            assert main(["verify", "--code", example3_file, "--m", "2", "--format", fmt]) == 1

    def test_verify_cap_env(self, example2_file, monkeypatch, capsys):
        monkeypatch.setenv("BATCHKIT_VERIFY_CAP", "5")
        assert main(["verify", "--code", example2_file, "--m", "4"]) == 2
        assert "guard" in capsys.readouterr().err
