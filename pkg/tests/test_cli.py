import numpy as np
import pytest

from qkmap.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


class TestGen:
    def test_writes_csv(self, tmp_path, capsys):
        out = tmp_path / "c.csv"
        code, stdout, _ = run(capsys, "gen", "circle", "--n", "100", "--seed", "7",
                              "--out", str(out))
        assert code == 0
        lines = out.read_text().splitlines()
        assert len(lines) == 101
        assert lines[0] == "x1,x2,label"

    def test_odd_n_fails_validation(self, tmp_path, capsys):
        code, _, stderr = run(capsys, "gen", "xor", "--n", "3",
                              "--out", str(tmp_path / "x.csv"))
        assert code == 1
        assert "even" in stderr

    def test_byte_identical_rerun(self, tmp_path, capsys):
        a, b = tmp_path / "a.csv", tmp_path / "b.csv"
        run(capsys, "gen", "moon", "--n", "50", "--seed", "3", "--out", str(a))
        run(capsys, "gen", "moon", "--n", "50", "--seed", "3", "--out", str(b))
        assert a.read_bytes() == b.read_bytes()


class TestHeatmap:
    def test_single_axis_values(self, tmp_path, capsys):
        out = tmp_path / "hm"
        code, _, _ = run(capsys, "heatmap", "--encoding", "ef1", "--axis", "ZZ",
                         "--resolution", "3", "--out", str(out))
        assert code == 0
        grid = np.array([[float(v) for v in line.split(",")]
                         for line in (out / "ZZ.csv").read_text().splitlines()])
        xs = np.array([-1.0, 0.0, 1.0])
        for r, x2 in enumerate(xs[::-1]):
            for c, x1 in enumerate(xs):
                assert abs(grid[r, c] - np.cos(x1) * np.cos(x2) / 4) < 1e-12

    def test_identity_axis_constant(self, tmp_path, capsys):
        out = tmp_path / "hm"
        run(capsys, "heatmap", "--encoding", "ef3", "--axis", "II",
            "--resolution", "3", "--out", str(out))
        grid = np.array([[float(v) for v in line.split(",")]
                         for line in (out / "II.csv").read_text().splitlines()])
        assert np.max(np.abs(grid - 0.25)) < 1e-12

    def test_all_emits_sixteen_files(self, tmp_path, capsys):
        out = tmp_path / "hm"
        code, _, _ = run(capsys, "heatmap", "--encoding", "ef2", "--axis", "all",
                         "--resolution", "4", "--pgm", "--out", str(out))
        assert code == 0
        assert len(list(out.glob("*.csv"))) == 16
        assert len(list(out.glob("*.pgm"))) == 16
        assert (out / "YX.csv").exists()


class TestScreen:
    def test_circle_all_builtins(self, tmp_path, capsys):
        ds = tmp_path / "c.csv"
        run(capsys, "gen", "circle", "--n", "100", "--seed", "7", "--out", str(ds))
        code, stdout, _ = run(capsys, "screen", "--dataset", str(ds), "--csv")
        assert code == 0
        rows = stdout.strip().splitlines()[1:]
        assert len(rows) == 5
        for row in rows:
            _, minacc, axis, *_ = row.split(",")
            assert float(minacc) >= 0.95
            assert axis == "ZZ"

    def test_empty_dataset_rejected(self, tmp_path, capsys):
        ds = tmp_path / "e.csv"
        ds.write_text("x1,x2,label\n")
        code, _, stderr = run(capsys, "screen", "--dataset", str(ds))
        assert code == 1
        assert "no points" in stderr

    def test_rerun_identical(self, tmp_path, capsys):
        ds = tmp_path / "c.csv"
        run(capsys, "gen", "exp", "--n", "40", "--seed", "2", "--out", str(ds))
        _, out1, _ = run(capsys, "screen", "--dataset", str(ds), "--csv")
        _, out2, _ = run(capsys, "screen", "--dataset", str(ds), "--csv")
        assert out1 == out2


class TestTrain:
    def test_single_encoding_report(self, tmp_path, capsys):
        code, stdout, _ = run(capsys, "train", "--generate", "circle", "--n", "50",
                              "--seed", "7", "--encodings", "ef2", "--C", "100",
                              "--csv")
        assert code == 0
        lines = stdout.strip().splitlines()
        assert lines[0] == "fold,train_accuracy,test_accuracy"
        assert lines[-1].startswith("mean,")

    def test_combined_encodings(self, capsys):
        code, stdout, _ = run(capsys, "train", "--generate", "moon", "--n", "40",
                              "--seed", "7", "--encodings", "ef3", "ef1",
                              "--C", "100")
        assert code == 0
        assert "mean train=" in stdout

    def test_model_file_written(self, tmp_path, capsys):
        model = tmp_path / "m.txt"
        code, _, _ = run(capsys, "train", "--generate", "xor", "--n", "30",
                         "--seed", "1", "--encodings", "ef1",
                         "--model-out", str(model))
        assert code == 0
        assert model.read_text().startswith("C=")

    def test_rerun_identical(self, capsys):
        args = ("train", "--generate", "exp", "--n", "30", "--seed", "5",
                "--encodings", "ef1", "--method", "shots", "--shots", "200",
                "--csv")
        _, out1, _ = run(capsys, *args)
        _, out2, _ = run(capsys, *args)
        assert out1 == out2


class TestKernel:
    def test_exact_unit_diagonal(self, tmp_path, capsys):
        out = tmp_path / "k.csv"
        code, _, _ = run(capsys, "kernel", "--generate", "circle", "--n", "10",
                         "--seed", "4", "--encoding", "ef1", "--out", str(out))
        assert code == 0
        lines = out.read_text().splitlines()
        assert lines[0].startswith("# method=exact")
        values = np.array([[float(v) for v in line.split(",")] for line in lines[1:]])
        assert np.max(np.abs(np.diag(values) - 1.0)) < 1e-10

    def test_shots_close_to_exact(self, tmp_path, capsys):
        exact_f, shots_f = tmp_path / "e.csv", tmp_path / "s.csv"
        common = ("kernel", "--generate", "xor", "--n", "20", "--seed", "4",
                  "--encoding", "ef1")
        run(capsys, *common, "--out", str(exact_f))
        run(capsys, *common, "--method", "shots", "--shots", "10000",
            "--out", str(shots_f))
        load = lambda p: np.array([[float(v) for v in line.split(",")]
                                   for line in p.read_text().splitlines()[1:]])
        assert np.max(np.abs(load(exact_f) - load(shots_f))) <= 0.03

    def test_invalid_method_usage_error(self, tmp_path, capsys):
        with pytest.raises(SystemExit):
            run(capsys, "kernel", "--generate", "xor", "--n", "10",
                "--method", "magic", "--out", str(tmp_path / "k.csv"))

    def test_rerun_byte_identical(self, tmp_path, capsys):
        a, b = tmp_path / "a.csv", tmp_path / "b.csv"
        common = ("kernel", "--generate", "moon", "--n", "12", "--seed", "9",
                  "--encoding", "ef2", "--method", "shots", "--shots", "500")
        run(capsys, *common, "--out", str(a))
        run(capsys, *common, "--out", str(b))
        assert a.read_bytes() == b.read_bytes()
