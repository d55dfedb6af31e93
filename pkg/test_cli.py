#!/usr/bin/env python3
"""
命令行测试：结构化结果、--json 输出与退出码 0 / 2 / 3
"""

import io
import json
import tempfile
from contextlib import redirect_stderr, redirect_stdout
from pathlib import Path

import main as cli_module
from config import Config, config as global_config
from core.golden_manager import GoldenManager
from main import EXIT_INPUT, EXIT_INVARIANT, EXIT_OK, run


def quiet_run(argv):
    """运行命令并吞掉终端输出，返回 (结果, stdout 文本)"""
    out, err = io.StringIO(), io.StringIO()
    with redirect_stdout(out), redirect_stderr(err):
        result = run(argv)
    return result, out.getvalue()


def test_partition_commands():
    print("🧪 Testing partition commands...")
    result, text = quiet_run(["partition", "4"])
    assert result.exit_code == EXIT_OK
    assert result.payload["count"] == 5
    assert text.splitlines()[0] == "4"
    result, _ = quiet_run(["partition", "3", "--conjugates"])
    assert result.payload["conjugates"] == ["1,1,1", "2,1", "3"]
    assert quiet_run(["qbinom", "3", "1", "2"])[0].payload == 35


def test_coefficient_commands():
    result, _ = quiet_run(["lr", "--lambda", "2", "--mu", "1", "--nu", "2,1"])
    assert result.payload == 1 and result.command == "lr"
    result, _ = quiet_run(["lr", "--lambda", "1", "--mu", "1"])
    assert result.payload == {"2": 1, "1,1": 1}
    assert quiet_run(["kron", "--lambda", "2,1", "--mu", "2,1", "--nu", "3"])[0].payload == 1
    assert quiet_run(["charvalue", "--lambda", "2,1", "--rho", "3"])[0].payload == -1
    assert quiet_run(["rect", "2"])[0].payload == [0, 1]
    result, _ = quiet_run(["kron-matrix", "--nu", "2"])
    assert result.payload["matrix"] == [[1, 0], [0, 1]]


def test_horn_commands():
    print("🧪 Testing horn commands...")
    result, text = quiet_run(["horn", "u", "2", "1"])
    assert result.command == "horn u"
    assert result.payload == ["{1}|{1}|{1}", "{1}|{2}|{2}", "{2}|{1}|{2}"]
    assert text.strip().endswith("# #=3")
    assert len(quiet_run(["horn", "t", "4", "2"])[0].payload) == 21
    result, _ = quiet_run(["horn", "check", "4", "2"])
    assert result.exit_code == EXIT_OK and result.payload["consistent"]


def test_field_and_polynomial_commands():
    result, _ = quiet_run(["field", "--field", "4", "mul", "a", "a"])
    assert result.payload["result"] == "a+1"
    assert quiet_run(["field", "--field", "5", "pow", "2", "4"])[0].payload["result"] == "1"
    result, _ = quiet_run(["euclid", "1 + x^3", "x^2"])
    assert result.payload["quotients"] == ["x", "x^2"]
    assert result.payload["degree_partition"] == "2,1"
    assert quiet_run(["qdegree", "(1 + x^3) / (x^2)"])[0].payload == "2,1"
    result, _ = quiet_run(["local-degree", "--field", "5", "x^2", "0"])
    assert result.payload["local_degree"] == 2 and result.payload["fiber"] == ["0"]


def test_matrix_file_commands():
    with tempfile.TemporaryDirectory() as tmp:
        a_path, b_path = Path(tmp) / "a.txt", Path(tmp) / "b.txt"
        a_path.write_text("x; 1\n0; x\n", encoding="utf-8")
        b_path.write_text("x; 0\n0; 1\n", encoding="utf-8")
        result, _ = quiet_run(["snf", "--field", "3", str(a_path)])
        assert result.payload["factors"] == ["1", "x^2"]
        assert result.payload["partition"] == "2"
        result, _ = quiet_run(["horn-instance", "--field", "3", str(a_path), str(b_path)])
        assert (result.payload["alpha"], result.payload["beta"], result.payload["gamma"]) == ("2", "1", "3")
        assert result.payload["lr_coefficient"] == 1
        missing, _ = quiet_run(["snf", str(Path(tmp) / "missing.txt")])
        assert missing.exit_code == EXIT_INPUT


def test_geometry_and_code_commands():
    print("🧪 Testing geometry and code commands...")
    assert len(quiet_run(["nrc", "--field", "5", "2"])[0].payload) == 6
    result, _ = quiet_run(["arc", "--field", "5", "--nrc", "2"])
    assert result.payload == {"points": 6, "is_arc": True, "max_collinear": 2}
    assert quiet_run(["omega", "1,2", "4", "2"])[0].payload == [1, 2, 3]
    assert quiet_run(["psi", "1", "4"])[0].payload == [1, 3]
    result, _ = quiet_run(["code", "eval", "--field", "5", "2*[inf]"])
    assert (result.payload["n"], result.payload["k"], result.payload["d"]) == (5, 3, 3)
    result, _ = quiet_run(["code", "grassmann", "3", "1", "2"])
    assert result.payload["length"] == 35 and result.payload["dimension_bruteforce"] == 6
    result, _ = quiet_run(["code", "config-orbit", "a", "b", "c", "--perm", "2,3,1", "--ordered"])
    assert result.payload["size"] == 3


def test_index_set_and_hypersimplex_commands():
    result, text = quiet_run(["index-partition", "{2,4}", "4"])
    assert result.command == "index-partition"
    assert result.payload == {"index_set": "{2,4}", "r": 2, "partition": "2,1"}
    assert text.strip() == "2,1"
    assert quiet_run(["index-partition", "1,2", "2"])[0].payload["partition"] == "[]"
    _, text = quiet_run(["--json", "index-partition", "{1,3,4}", "5"])
    document = json.loads(text)
    assert document["status"] == "ok" and document["payload"]["partition"] == "1,1"

    result, text = quiet_run(["hypersimplex", "1/2,1/2,1,0", "1", "4"])
    assert result.payload["contains"] is True and text.strip() == "true"
    assert result.payload["vector"] == ["1/2", "1/2", "1", "0"]
    assert quiet_run(["hypersimplex", "1,1,1,0", "1", "4"])[0].payload["contains"] is False
    assert quiet_run(["hypersimplex", "2,0,0,0", "1", "4"])[0].payload["contains"] is False
    _, text = quiet_run(["--json", "hypersimplex", "1,0,0", "0", "3"])
    assert json.loads(text)["payload"]["contains"] is True


def test_vandermonde_command():
    result, text = quiet_run(["vandermonde", "--field", "5", "0", "1", "2"])
    assert result.payload == {"field": "5", "value": "2", "nonzero": True}
    assert text.strip() == "2"
    result, _ = quiet_run(["vandermonde", "--field", "4", "0", "1", "a"])
    assert result.payload["value"] == "1" and result.payload["nonzero"]
    _, text = quiet_run(["--json", "vandermonde", "--field", "5", "1", "1"])
    document = json.loads(text)
    assert document["payload"]["value"] == "0" and document["payload"]["nonzero"] is False


def test_rational_map_and_direct_sum_commands():
    print("🧪 Testing code rational-map / direct-sum...")
    result, text = quiet_run(["code", "rational-map", "--field", "5", "(1) / (x)"])
    assert result.command == "code rational-map"
    assert result.payload["points"] == ["1", "2", "3", "4", "inf"]
    assert result.payload["codeword"] == ["1", "3", "2", "4", "0"]
    assert text.strip() == "1 3 2 4 0"
    args = ["code", "rational-map", "--field", "5", "x^2", "--point", "0", "--point", "1", "--point", "2"]
    _, text = quiet_run(["--json", *args])
    assert json.loads(text)["payload"]["codeword"] == ["0", "1", "4"]
    pole, _ = quiet_run(["code", "rational-map", "--field", "5", "(1) / (x)", "--point", "0"])
    assert pole.exit_code == EXIT_INPUT and pole.command == "code rational-map"

    result, text = quiet_run(["code", "direct-sum", "--field", "5", "1*[inf]", "2*[inf]"])
    assert (result.payload["n"], result.payload["k"], result.payload["d"]) == (10, 5, 3)
    assert result.payload["rank"] == 2
    assert text.splitlines()[0] == "10 5 3 5"
    _, text = quiet_run(["--json", "code", "direct-sum", "--field", "5", "1*[inf]", "2*[inf]", "--no-distance"])
    document = json.loads(text)
    assert document["command"] == "code direct-sum"
    assert (document["payload"]["n"], document["payload"]["k"]) == (10, 5) and "d" not in document["payload"]


def test_group_level_field_option():
    result, _ = quiet_run(["--field", "5", "euclid", "1 + x^3", "x^2"])
    assert result.exit_code == EXIT_OK and result.command == "euclid"
    assert result.payload["quotients"] == ["x", "x^2"]
    assert quiet_run(["--field", "4", "field", "mul", "a", "a"])[0].payload["result"] == "a+1"
    # 子命令上的 --field 优先
    result, _ = quiet_run(["--field", "4", "field", "--field", "5", "pow", "2", "4"])
    assert result.payload == {"field": "5", "result": "1", "index": 1}
    result, _ = quiet_run(["--field", "9", "code", "direct-sum", "1*[inf]", "--no-distance"])
    assert result.payload["q"] == 9 and result.payload["n"] == 9
    bad, _ = quiet_run(["--field", "6", "euclid", "x", "1"])
    assert bad.exit_code == EXIT_INPUT


def test_error_results_name_the_command():
    result, _ = quiet_run(["--field", "5", "lr", "--lambda", "1,2", "--mu", "1"])
    assert result.exit_code == EXIT_INPUT and result.command == "lr"
    result, _ = quiet_run(["--field", "5", "code", "eval", "[0]", "--point", "0"])
    assert result.exit_code == EXIT_INPUT and result.command == "code eval"
    result, _ = quiet_run(["--json", "--field", "5", "no-such-command"])
    assert result.exit_code == EXIT_INPUT and result.command == ""


def test_unexpected_error_exits_three():
    original = cli_module.partitions_of

    def broken(n):
        raise RuntimeError("boom")

    cli_module.partitions_of = broken
    try:
        result, text = quiet_run(["--json", "partition", "4"])
    finally:
        cli_module.partitions_of = original
    assert result.exit_code == EXIT_INVARIANT
    assert result.status == "error" and result.payload is None
    assert result.command == "partition"
    assert any("RuntimeError" in line and "boom" in line for line in result.diagnostics)
    assert json.loads(text)["exit_code"] == EXIT_INVARIANT
    assert quiet_run(["partition", "4"])[0].exit_code == EXIT_OK


def test_json_output():
    result, text = quiet_run(["--json", "qbinom", "3", "1", "2"])
    document = json.loads(text)
    assert document["status"] == "ok" and document["payload"] == 35
    assert document["command"] == "qbinom"
    assert document["schema_version"] == 1
    _, text = quiet_run(["--json", "lr", "--lambda", "1,2", "--mu", "1"])
    document = json.loads(text)
    assert document["status"] == "error" and document["payload"] is None
    assert document["exit_code"] == EXIT_INPUT


def test_input_errors_exit_two():
    print("🧪 Testing exit codes...")
    for argv in (
        ["lr", "--lambda", "1,2", "--mu", "1"],
        ["no-such-command"],
        ["field", "--field", "6", "add", "1", "1"],
        ["field", "--field", "5", "div", "2", "0"],
        ["code", "eval", "--field", "5", "[0]", "--point", "0"],
        ["code", "three-point", "1", "1", "1", "3", "3"],
        ["horn", "u", "3", "3"],
    ):
        result, _ = quiet_run(argv)
        assert result.status == "error", argv
        assert result.exit_code == EXIT_INPUT, argv
        assert result.diagnostics, argv
    assert quiet_run(["horn", "u", "3", "3"])[0].command == "horn u"


def test_golden_mismatch_exits_three():
    original = global_config.golden_override
    with tempfile.TemporaryDirectory() as tmp:
        GoldenManager(Config(golden_override=Path(tmp))).write_all()
        assert quiet_run(["golden", "check"])[0].exit_code == EXIT_OK
        global_config.golden_override = Path(tmp)
        try:
            assert quiet_run(["golden", "check"])[0].exit_code == EXIT_OK
            path = Path(tmp) / "U_4_2.txt"
            lines = path.read_text(encoding="utf-8").splitlines()
            path.write_text("\n".join(lines[:-1]) + "\n", encoding="utf-8")
            result, _ = quiet_run(["golden", "check"])
            assert result.exit_code == EXIT_INVARIANT
            assert result.status == "error" and result.payload is None
            assert any(line.startswith("U_4_2") for line in result.diagnostics)
        finally:
            global_config.golden_override = original


def test_verify_appendix():
    result, text = quiet_run(["verify", "appendix"])
    assert result.exit_code == EXIT_OK, result.diagnostics
    assert result.payload[0]["suite"] == "appendix"
    assert result.payload[0]["failed"] == 0
    assert "PASS" in text


def main():
    """主测试函数"""
    print("🎯 Command Line Test")
    print("=" * 50)

    tests = [(name, func) for name, func in globals().items() if name.startswith("test_") and callable(func)]
    test_results = []
    for test_name, test_func in tests:
        try:
            test_func()
            test_results.append((test_name, True))
        except Exception as e:
            print(f"  ❌ {test_name} crashed: {e}")
            test_results.append((test_name, False))

    print("\n" + "=" * 50)
    print("📊 Test Results Summary")
    passed = sum(1 for _, result in test_results if result)
    for test_name, result in test_results:
        status = "✅ PASS" if result else "❌ FAIL"
        print(f"  {status} {test_name}")
    print(f"\n🎯 Overall: {passed}/{len(test_results)} tests passed")
    return passed == len(test_results)


if __name__ == "__main__":
    main()
