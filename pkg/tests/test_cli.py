import io
import json

import pytest

from cubicforms.cli import canonical_json, main


def run(argv):
    buf = io.StringIO()
    code = main(argv, out=buf)
    return code, buf.getvalue()


class TestTheta:
    def test_terms_3_rows(self):
        code, out = run(["theta", "--terms", "3"])
        assert code == 0
        assert "constant term: -2" in out
        assert "deg(C_6) = 192" in out
        assert "deg(C_8) = 3402" in out
        assert "deg(C_12) = 196272" in out
        assert "deg(C_14) = 917568" in out
        assert "deg(C_18)" not in out  # 18/6 = 3 is not < 3

    def test_terms_1_boundary(self):
        code, out = run(["theta", "--terms", "1"])
        assert code == 0
        assert "deg(C_2) = 0" in out
        assert "deg(C_6)" not in out

    def test_json_round_trip(self):
        code, out = run(["theta", "--terms", "3", "--format", "json"])
        assert code == 0
        assert canonical_json(json.loads(out)) == out
        record = json.loads(out)
        degrees = {row["d"]: row["deg"] for row in record["result"]["degrees"]}
        assert degrees[6] == "192" and degrees[8] == "3402"
        assert record["result"]["constant"] == "-2"
        assert record["provenance"]

    def test_csv_schema(self):
        code, out = run(["theta", "--terms", "2", "--format", "csv"])
        assert code == 0
        lines = out.strip().splitlines()
        assert lines[0] == "d,exp_num,exp_den,deg"
        assert "8,4,3,3402" in lines

    def test_invalid_format_exits_2(self):
        with pytest.raises(SystemExit) as err:
            main(["theta", "--format", "yaml"])
        assert err.value.code == 2


class TestOtherCommands:
    def test_dim(self):
        code, out = run(["dim", "--k", "11"])
        assert code == 0 and "2" in out

    def test_dim_rejects_even(self):
        code, _ = run(["dim", "--k", "4"])
        assert code == 2

    def test_eisenstein_vector(self):
        code, out = run(["eisenstein", "--k", "5", "--terms", "4"])
        assert code == 0
        assert "492" in out and "1446" in out

    def test_eisenstein_scalar(self):
        code, out = run(["eisenstein", "--k", "4", "--terms", "3"])
        assert code == 0 and "240" in out

    def test_eisenstein_json_round_trip(self):
        code, out = run(["eisenstein", "--k", "5", "--terms", "3", "--format", "json"])
        assert code == 0
        assert canonical_json(json.loads(out)) == out

    def test_degree_all_paths(self):
        code, out = run(["degree", "--d", "6", "--method", "all"])
        assert code == 0
        assert out.count("192") == 3

    def test_degree_single_method(self):
        code, out = run(["degree", "--d", "8", "--method", "segre"])
        assert code == 0 and "3402" in out

    def test_degree_rejects_other_d(self):
        with pytest.raises(SystemExit) as err:
            main(["degree", "--d", "10"])
        assert err.value.code == 2

    def test_missing_subcommand_exits_2(self):
        with pytest.raises(SystemExit) as err:
            main([])
        assert err.value.code == 2


class TestVerify:
    def test_milgram_suite(self):
        code, out = run(["verify", "--suite", "milgram"])
        assert code == 0
        assert out.count("pass") == 4 and "FAIL" not in out

    def test_milgram_with_user_gram(self):
        code, out = run(
            ["verify", "--suite", "milgram", "--gram", "[[2,1],[1,2]]"]
        )
        assert code == 0
        assert "user-lattice" in out

    def test_qseries_suite(self):
        code, out = run(["verify", "--suite", "qseries"])
        assert code == 0 and "FAIL" not in out

    def test_schubert_suite_json(self):
        code, out = run(["verify", "--suite", "schubert", "--format", "json"])
        assert code == 0
        record = json.loads(out)
        assert all(row["status"] == "pass" for row in record["result"])

    def test_unknown_suite_exits_2(self):
        with pytest.raises(SystemExit) as err:
            main(["verify", "--suite", "nonsense"])
        assert err.value.code == 2
