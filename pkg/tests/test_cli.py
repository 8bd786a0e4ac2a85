import numpy as np
import pytest

from waveot.cascade import estimate_constants
from waveot.cli import main
from waveot.densities import translate, uniform_density
from waveot.distance import DistanceConfig, distance_new
from waveot.embedding import read_wlot
from waveot.filters import build_wavelet_system


def test_constants_command(capsys):
    assert main(["constants", "--wavelet", "haar", "--s", "1.0"]) == 0
    out = capsys.readouterr().out.strip().split("\n")
    got = {line.split()[0]: float(line.split()[1]) for line in out}
    ref = estimate_constants(build_wavelet_system("haar"), 1.0)
    assert abs(got["a11"] - ref.a11) < 1e-9
    assert abs(got["a12"] - ref.a12) < 1e-9
    assert abs(got["a13"] - ref.a13) < 1e-9


def test_distance_command(capsys):
    code = main(["distance", "--family", "uniform_translate", "--param", "0.8",
                 "--s", "0.5", "--j0", "-6", "--levels", "12",
                 "--wavelet", "db10"])
    assert code == 0
    printed = float(capsys.readouterr().out.strip())
    cfg = DistanceConfig(s=0.5, j0=-6, M=12, wavelet="db10", formulation="new")
    p = uniform_density(0.0, 1.0)
    ref = distance_new(p, translate(p, 0.8), cfg)
    assert abs(printed - ref) < 1e-9 * max(1.0, ref)


def test_simulate_deterministic(tmp_path, capsys):
    args = ["simulate", "--family", "uniform_translate", "--s", "1.0",
            "--j0", "-6", "--levels", "12", "--count", "5",
            "--exact-points", "100"]
    out1 = tmp_path / "a.csv"
    out2 = tmp_path / "b.csv"
    assert main(args + ["--out", str(out1)]) == 0
    assert main(args + ["--out", str(out2)]) == 0
    b1, b2 = out1.read_bytes(), out2.read_bytes()
    assert b1 == b2
    lines = b1.decode().strip().split("\n")
    assert len(lines) == 6
    assert lines[0].startswith("family,")


def test_embed_command(tmp_path, capsys):
    out = tmp_path / "vec.wlot"
    code = main(["embed", "--family", "bump_translate", "--param", "0.5",
                 "--s", "0.5", "--j0", "-6", "--levels", "12", "--out", str(out)])
    assert code == 0
    vec = read_wlot(out)
    assert vec.j0 == -6 and vec.M == 12 and len(vec) > 0


def test_unknown_family_exits_nonzero():
    with pytest.raises(SystemExit) as exc:
        main(["simulate", "--family", "nope", "--out", "x.csv"])
    assert exc.value.code != 0


def test_io_error_reports_and_fails(tmp_path, capsys):
    target = tmp_path / "missing_dir" / "out.csv"
    code = main(["simulate", "--family", "uniform_translate", "--s", "1.0",
                 "--j0", "-6", "--levels", "12", "--count", "3",
                 "--exact-points", "80", "--out", str(target)])
    assert code == 1
    assert "error:" in capsys.readouterr().err


def test_domain_error_reports_and_fails(capsys):
    # translation range pushes the support outside [0, 2^-j0]
    code = main(["distance", "--family", "uniform_translate", "--param", "70.0",
                 "--s", "0.5", "--j0", "-6", "--levels", "12"])
    assert code == 1
    assert "error:" in capsys.readouterr().err
