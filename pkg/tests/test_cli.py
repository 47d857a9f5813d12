"""CLI 명령 테스트 — in-process main(argv) 로 종료 코드와 출력 파일 검증"""
import csv
import json

import numpy as np
import pytest

from multinst.config import Settings, settings
from multinst.parsers import ParserFactory
from multinst.schemas.dataset import ScoredDataset
from multinst.schemas.stats import ClassMoments
from multinst.schemas.train import ScorerModel
from multinst.services.analytic_service import analytic_auc, auc_curve


# ============ 헬퍼 ============

def read_rows(path) -> list[dict]:
    with open(path, newline="") as f:
        return list(csv.DictReader(f))


def read_json(path) -> dict:
    with open(path) as f:
        return json.load(f)


@pytest.fixture
def scores_file(tmp_path, run_cli):
    """gen --ideal-scores 로 만든 점수 CSV (m = 20000)"""
    assert run_cli("gen", "--out", tmp_path / "data.csv", "--m", 20_000, "--seed", 3,
                   "--ideal-scores", tmp_path / "ideal.csv") == 0
    return tmp_path / "ideal.csv"


# ============ 공통 ============

def test_help_and_missing_command(run_cli):
    assert run_cli("--help") == 0
    assert run_cli() == 2
    assert run_cli("unknown") == 2


def test_seed_env_override(monkeypatch):
    """MULTINST_SEED 로 기본 시드 변경"""
    monkeypatch.setenv("MULTINST_SEED", "5")
    assert Settings().seed == 5


# ============ gen ============

def test_gen_default_config(tmp_path, run_cli, capsys):
    out = tmp_path / "data.csv"
    assert run_cli("gen", "--out", out, "--m", 1000) == 0
    lines = out.read_text().splitlines()
    assert len(lines) == 1001
    assert lines[0] == "x1,x2,omega_a,omega_b"
    summary = json.loads(capsys.readouterr().out)
    assert summary["m"] == 1000
    assert summary["observed_dims"] == [1, 2]


def test_gen_same_seed_identical(tmp_path, run_cli):
    assert run_cli("gen", "--out", tmp_path / "a.csv", "--m", 500, "--seed", 42) == 0
    assert run_cli("gen", "--out", tmp_path / "b.csv", "--m", 500, "--seed", 42) == 0
    assert (tmp_path / "a.csv").read_bytes() == (tmp_path / "b.csv").read_bytes()


def test_gen_uses_configured_seed(tmp_path, run_cli, monkeypatch):
    monkeypatch.setattr(settings, "seed", 99)
    assert run_cli("gen", "--out", tmp_path / "a.csv", "--m", 200) == 0
    assert run_cli("gen", "--out", tmp_path / "b.csv", "--m", 200, "--seed", 99) == 0
    assert (tmp_path / "a.csv").read_bytes() == (tmp_path / "b.csv").read_bytes()


def test_gen_zero_m_is_usage_error(tmp_path, run_cli):
    assert run_cli("gen", "--out", tmp_path / "a.csv", "--m", 0) == 2
    assert not (tmp_path / "a.csv").exists()


def test_gen_config_file(tmp_path, run_cli):
    config = tmp_path / "synth.json"
    config.write_text(json.dumps({
        "dim": 3, "mean_a": [1, 0, 0], "mean_b": [-1, 0, 0], "observed_dims": [1, 3], "seed": 8,
    }))
    assert run_cli("gen", config, "--out", tmp_path / "a.csv", "--m", 50) == 0
    assert (tmp_path / "a.csv").read_text().splitlines()[0] == "x1,x2,omega_a,omega_b"


def test_gen_invalid_config(tmp_path, run_cli):
    config = tmp_path / "synth.json"
    config.write_text(json.dumps({"dim": 2, "mean_a": [1], "mean_b": [0, 0], "observed_dims": [1]}))
    assert run_cli("gen", config, "--out", tmp_path / "a.csv", "--m", 50) == 2


def test_gen_missing_config(tmp_path, run_cli):
    assert run_cli("gen", tmp_path / "nope.json", "--out", tmp_path / "a.csv", "--m", 50) == 1


# ============ estimate ============

def test_estimate_two_row_fixture(two_row_scores, write_scores, tmp_path, run_cli):
    out = tmp_path / "moments.json"
    assert run_cli("estimate", write_scores(two_row_scores), "--out", out) == 0
    doc = read_json(out)
    assert doc["mu_a"] == pytest.approx(-0.5, abs=1e-12)
    assert doc["sigma_a"] == pytest.approx(0.8660254037844386, abs=1e-12)
    for key in ("mu_b", "sigma_b", "n_effective_a", "n_effective_b", "auc_1", "loss", "ideal_loss"):
        assert key in doc


def test_estimate_symmetric(write_scores, tmp_path, run_cli):
    """라벨 교환 대칭 → μ_A = -μ_B"""
    p = np.array([0.2, 0.35, 0.6, 0.9])
    wa = np.array([0.3, 1.0, 2.0, 0.5])
    wb = np.array([1.2, 0.4, 0.7, 0.1])
    scored = ScoredDataset(scores=np.concatenate([p, 1 - p]), omega_a=np.concatenate([wa, wb]), omega_b=np.concatenate([wb, wa]))
    out = tmp_path / "moments.json"
    assert run_cli("estimate", write_scores(scored), "--out", out) == 0
    doc = read_json(out)
    assert doc["mu_a"] == pytest.approx(-doc["mu_b"], abs=1e-12)


def test_estimate_perfect_separation(separated_scores, write_scores, tmp_path, run_cli):
    out = tmp_path / "moments.json"
    assert run_cli("estimate", write_scores(separated_scores), "--out", out) == 0
    assert read_json(out)["auc_1"] == 1.0


def test_estimate_degenerate_exit_3(write_scores, run_cli):
    w = np.array([1.0, 2.0, 3.0])
    scored = ScoredDataset(scores=np.full(3, 0.5), omega_a=w, omega_b=w)
    assert run_cli("estimate", write_scores(scored)) == 3


def test_estimate_bad_header_exit_2(tmp_path, run_cli):
    path = tmp_path / "bad.csv"
    path.write_text("p,wa,wb\n0.5,1,0\n")
    assert run_cli("estimate", path) == 2


# ============ curves ============

def test_curves_symmetric(symmetric_moments, write_moments, tmp_path, run_cli):
    out = tmp_path / "rates.csv"
    assert run_cli("curves", write_moments(symmetric_moments), "--n-list", "1,100", "--theta-grid", "0.25,0.5,0.75", "--out", out) == 0
    rows = read_rows(out)
    assert list(rows[0].keys()) == ["n", "theta", "c", "tpr", "fpr", "miss", "auc_n"]
    assert len(rows) == 6

    half = [r for r in rows if float(r["theta"]) == 0.5]
    for row in half:
        assert float(row["tpr"]) + float(row["fpr"]) == pytest.approx(1.0, abs=1e-15)
    row_100 = next(r for r in half if r["n"] == "100")
    assert float(row_100["tpr"]) == pytest.approx(0.8413, abs=1e-4)
    assert float(row_100["fpr"]) == pytest.approx(0.1587, abs=1e-4)
    assert float(row_100["miss"]) == pytest.approx(0.3174, abs=1e-4)

    row_1 = next(r for r in rows if r["n"] == "1")
    assert float(row_1["auc_n"]) == analytic_auc(symmetric_moments, 1)
    by_n = {point.n: point.auc for point in auc_curve(symmetric_moments, [1, 100])}
    assert all(float(r["auc_n"]) == by_n[int(r["n"])] for r in rows)


def test_curves_default_grid(symmetric_moments, write_moments, tmp_path, run_cli):
    out = tmp_path / "rates.csv"
    assert run_cli("curves", write_moments(symmetric_moments), "--n-list", "1:3", "--out", out) == 0
    assert len(read_rows(out)) == 3 * 999


@pytest.mark.parametrize("grid", ["0:0.5:10", "0.5,1.2", "0.9:0.1:5", "a,b", "0.1:0.2"])
def test_curves_invalid_grid(symmetric_moments, write_moments, run_cli, grid):
    assert run_cli("curves", write_moments(symmetric_moments), "--n-list", "1", "--theta-grid", grid) == 2


def test_curves_invalid_n_list(symmetric_moments, write_moments, run_cli):
    assert run_cli("curves", write_moments(symmetric_moments), "--n-list", "0,5") == 2
    assert run_cli("curves", write_moments(symmetric_moments), "--n-list", "5:2") == 2


# ============ calibrate ============

def test_calibrate_examples(write_moments, tmp_path, run_cli):
    out = tmp_path / "threshold.json"
    sym = ClassMoments(mu_a=0.1, sigma_a=1.0, mu_b=-0.1, sigma_b=1.0)
    assert run_cli("calibrate", write_moments(sym, "sym.json"), "--n", 50, "--out", out) == 0
    assert read_json(out)["theta_opt"] == 0.5

    shifted = ClassMoments(mu_a=0.3, sigma_a=1.0, mu_b=-0.1, sigma_b=1.0)
    assert run_cli("calibrate", write_moments(shifted, "shifted.json"), "--n", 10, "--out", out) == 0
    doc = read_json(out)
    assert list(doc.keys()) == ["n", "c_opt", "theta_opt", "sigma_discrepancy", "c_opt_numeric"]
    assert doc["c_opt"] == pytest.approx(-1.0, abs=1e-12)
    assert doc["c_opt_numeric"] == pytest.approx(doc["c_opt"], abs=1e-6)


def test_calibrate_unequal_sigma(skewed_moments, write_moments, tmp_path, run_cli):
    out = tmp_path / "threshold.json"
    assert run_cli("calibrate", write_moments(skewed_moments), "--n", 20, "--out", out) == 0
    doc = read_json(out)
    assert doc["sigma_discrepancy"] > 0
    assert doc["c_opt_numeric"] != doc["c_opt"]


def test_calibrate_bad_n(symmetric_moments, write_moments, run_cli):
    assert run_cli("calibrate", write_moments(symmetric_moments), "--n", 0) == 2


# ============ simulate ============

def test_simulate_small_run(scores_file, tmp_path, run_cli):
    out = tmp_path / "comparison.csv"
    assert run_cli("simulate", scores_file, "--n-list", "1,5", "--groups", 5000, "--theta", 0.5, "--out", out) == 0
    rows = read_rows(out)
    assert list(rows[0].keys()) == [
        "n", "theta", "tpr_mc", "tpr_se", "tpr_analytic", "fpr_mc", "fpr_se", "fpr_analytic",
        "auc_mc", "auc_se", "auc_analytic",
    ]
    assert [r["n"] for r in rows] == ["1", "5"]


def test_simulate_usage_errors(scores_file, run_cli):
    assert run_cli("simulate", scores_file, "--n-list", "1", "--groups", 10, "--theta", 0.5) == 2
    assert run_cli("simulate", scores_file, "--n-list", "1", "--theta", 0.5, "--use-optimal") == 2
    assert run_cli("simulate", scores_file, "--n-list", "1") == 2
    assert run_cli("simulate", scores_file, "--n-list", "1", "--theta", 1.0) == 2


def test_simulate_validation_failure(scores_file, tmp_path, run_cli):
    """허용 편차 0 이면 자기검증 실패 (종료 코드 4), CSV 는 남음"""
    out = tmp_path / "comparison.csv"
    code = run_cli("simulate", scores_file, "--n-list", "3", "--groups", 1000, "--theta", 0.5,
                   "--max-sigmas", 0.0, "--out", out)
    assert code == 4
    assert len(read_rows(out)) == 1


def test_simulate_threads_identical(scores_file, tmp_path, run_cli):
    """--threads 값과 무관하게 바이트 단위로 같은 결과"""
    args = ("simulate", scores_file, "--n-list", "2,8", "--groups", 9000, "--use-optimal", "--seed", 4)
    assert run_cli("--threads", 1, *args, "--out", tmp_path / "one.csv") == 0
    assert run_cli("--threads", 4, *args, "--out", tmp_path / "four.csv") == 0
    assert (tmp_path / "one.csv").read_bytes() == (tmp_path / "four.csv").read_bytes()


# ============ train / score ============

def _write_separable(path, m: int = 1200):
    rng = np.random.default_rng(1)
    is_a = rng.random(m) < 0.5
    x = np.where(is_a, 2.0, -2.0) + 0.5 * rng.standard_normal(m)
    with open(path, "w") as f:
        f.write("x1,omega_a,omega_b\n")
        for xi, a in zip(x, is_a):
            f.write(f"{float(xi)!r},{float(a)},{float(not a)}\n")


def test_train_then_score(tmp_path, run_cli):
    data = tmp_path / "toy.csv"
    _write_separable(data)
    model, trace, scores = tmp_path / "model.json", tmp_path / "trace.csv", tmp_path / "scores.csv"
    assert run_cli("train", data, "--out", model, "--trace", trace,
                   "--epochs", 8, "--learning-rate", 0.5, "--batch-size", 32, "--seed", 2) == 0

    rows = read_rows(trace)
    assert list(rows[0].keys()) == ["epoch", "loss_train", "loss_val", "auc_val"]
    assert len(rows) == 8
    assert float(rows[-1]["auc_val"]) >= 0.99
    assert read_json(model)["version"] == 1

    assert run_cli("score", model, data, "--out", scores) == 0
    scored = ParserFactory.get_parser("scores").read(str(scores))
    assert len(scored) == 1200
    assert np.all((scored.scores >= 0) & (scored.scores <= 1))


def test_train_config_file(tmp_path, run_cli):
    data = tmp_path / "toy.csv"
    _write_separable(data, 400)
    config = tmp_path / "train.json"
    config.write_text(json.dumps({"learning_rate": 0.3, "epochs": 2, "batch_size": 16}))
    assert run_cli("train", data, "--config", config, "--out", tmp_path / "model.json") == 0
    assert read_json(tmp_path / "model.json")["config"]["epochs"] == 2


def test_train_invalid_config(tmp_path, run_cli):
    data = tmp_path / "toy.csv"
    _write_separable(data, 400)
    assert run_cli("train", data, "--val-fraction", 1.5, "--out", tmp_path / "model.json") == 2


def test_score_zero_model(tmp_path, run_cli):
    """가중치 0 모델 → 모든 점수 0.5"""
    data = tmp_path / "toy.csv"
    _write_separable(data, 50)
    model = tmp_path / "zero.json"
    ParserFactory.get_parser("model").write(str(model), ScorerModel.zeros(1))
    out = tmp_path / "scores.csv"
    assert run_cli("score", model, data, "--out", out) == 0
    assert {r["score"] for r in read_rows(out)} == {"0.5"}


def test_score_dimension_mismatch(tmp_path, run_cli):
    data = tmp_path / "toy.csv"
    _write_separable(data, 50)
    model = tmp_path / "model.json"
    ParserFactory.get_parser("model").write(str(model), ScorerModel.zeros(3))
    assert run_cli("score", model, data) == 1


# ============ roc ============

def test_roc_table(scores_file, tmp_path, run_cli):
    out = tmp_path / "roc.csv"
    assert run_cli("roc", scores_file, "--out", out) == 0
    rows = read_rows(out)
    assert list(rows[0].keys()) == ["theta", "tpr", "fpr"]
    assert len(rows) == 999


# ============ 파이프라인 ============

def _pipeline(run_cli, root, threads: int) -> dict[str, bytes]:
    root.mkdir()
    steps = [
        ("gen", "--out", root / "data.csv", "--m", 3000, "--seed", 17),
        ("train", root / "data.csv", "--out", root / "model.json", "--trace", root / "trace.csv",
         "--epochs", 3, "--batch-size", 128, "--seed", 17),
        ("score", root / "model.json", root / "data.csv", "--out", root / "scores.csv"),
        ("estimate", root / "scores.csv", "--out", root / "moments.json"),
        ("curves", root / "moments.json", "--n-list", "1,10,50", "--theta-grid", "0.1:0.9:9", "--out", root / "rates.csv"),
        ("calibrate", root / "moments.json", "--n", 50, "--out", root / "threshold.json"),
        ("simulate", root / "scores.csv", "--n-list", "1,10", "--groups", 5000, "--use-optimal", "--seed", 17,
         "--max-sigmas", 1e9, "--out", root / "comparison.csv"),
    ]
    for step in steps:
        assert run_cli("--threads", threads, *step) == 0, step[0]
    return {p.name: p.read_bytes() for p in sorted(root.iterdir())}


def test_pipeline_deterministic(tmp_path, run_cli):
    """같은 시드 → 모든 산출물 바이트 동일 (--threads 달라도)"""
    first = _pipeline(run_cli, tmp_path / "run1", threads=1)
    second = _pipeline(run_cli, tmp_path / "run2", threads=3)
    assert first.keys() == second.keys()
    for name in first:
        assert first[name] == second[name], name
