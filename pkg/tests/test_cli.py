import json
import os
from types import SimpleNamespace

import pytest

from cli_app.app import main, run, verify_exit_code
from core.pipeline import AlphaRankEngine


@pytest.fixture(scope="module")
def engine(config):
    return AlphaRankEngine(config)


def claim_path(config, name: str) -> str:
    return config.get_data_path("claims", name)


def write_claim(path, group, socle_class, asserted, steps):
    path.write_text(json.dumps({
        "schema": 1, "group": group, "socle_class": socle_class,
        "asserted_alpha": asserted, "steps": steps,
    }), encoding="utf-8")
    return str(path)


# --- verify ---


def test_verify_one_claim(engine, config):
    outcome = run(["verify", claim_path(config, "a5_2A")], engine)
    assert outcome.exit_code == 0
    assert outcome.text.splitlines()[0] == "[OK] a5 2A: alpha = 3 (asserted alpha = 3)"
    assert outcome.payload["status"] == "verified"


def test_verify_directory(engine, config, bundle, tmp_path):
    claims_dir = os.path.join(config.data_dir, "claims")
    out = tmp_path / "traces"
    outcome = run(["--out", str(out), "verify", claims_dir], engine)
    statuses = {v["status"] for v in outcome.payload}
    assert statuses <= {"verified", "skipped"}
    skipped = any(kind == "claims" for kind, _ in bundle.unavailable)
    assert ("skipped" in statuses) == skipped
    assert outcome.exit_code == (2 if skipped else 0)
    assert outcome.text.splitlines()[-1].startswith("20 claim(s): ")
    assert len(outcome.payload) == 20
    assert sorted(os.listdir(out))[0] == "a5_2A.verdict.json"
    assert len(os.listdir(out)) == 20


def test_verify_skipped_claim_is_not_success(engine, config, bundle):
    if bundle.is_available("claims", "hs2_2C"):
        pytest.skip("HS.2 table present")
    outcome = run(["verify", claim_path(config, "hs2_2C")], engine)
    assert outcome.payload["status"] == "skipped"
    assert outcome.exit_code == 2


@pytest.mark.parametrize("statuses, code", [
    (["verified"], 0),
    (["verified", "skipped"], 2),
    (["skipped", "refuted"], 1),
    (["incomplete", "skipped", "verified"], 1),
])
def test_verify_exit_code(statuses, code):
    assert verify_exit_code([SimpleNamespace(status=s) for s in statuses]) == code


def test_verify_writes_single_trace(engine, config, tmp_path):
    out = tmp_path / "m11.verdict.json"
    assert run(["--out", str(out), "verify", claim_path(config, "m11_2A")], engine).exit_code == 0
    assert json.loads(out.read_text(encoding="utf-8"))["status"] == "verified"


def test_verify_refuted_claim(engine, tmp_path):
    path = write_claim(tmp_path / "bad.claim.json", "a5", "3A", 2, [{"kind": "InvolutionLowerBound"}])
    outcome = run(["verify", path], engine)
    assert outcome.exit_code == 1
    assert outcome.text.startswith("[FAIL] a5 3A")
    assert "note: failed step(s): 0" in outcome.text


def test_verify_incomplete_claim(engine, tmp_path):
    path = write_claim(tmp_path / "open.claim.json", "a5", "2A", 3, [{"kind": "InvolutionLowerBound"}])
    outcome = run(["verify", path], engine)
    assert outcome.exit_code == 1
    assert outcome.text.startswith("[INCOMPLETE] a5 2A: alpha in [3, inf]")


def test_verify_empty_directory(engine, tmp_path):
    assert run(["verify", str(tmp_path)], engine).exit_code == 2


def test_verify_missing_path(engine, tmp_path):
    outcome = run(["verify", str(tmp_path / "nope.claim.json")], engine)
    assert outcome.exit_code == 2
    assert outcome.text.startswith("data error")


def test_verify_malformed_claim(engine, tmp_path):
    path = tmp_path / "broken.claim.json"
    path.write_text('{"schema": 1}', encoding="utf-8")
    outcome = run(["--json", "verify", str(path)], engine)
    assert outcome.exit_code == 2
    assert outcome.as_json
    assert outcome.payload["errors"]


# --- table commands ---


def test_structconst(engine):
    outcome = run(["structconst", "m11", "2A", "2A", "1A"], engine)
    assert outcome.exit_code == 0
    assert outcome.text == "m(2A,2A,1A) = 165"
    assert outcome.payload["m"] == "165"


def test_structconst_from_file(engine, config):
    outcome = run(["structconst", config.get_data_path("tables", "a5"), "2A", "2A", "3A"], engine)
    assert outcome.text == "m(2A,2A,3A) = 3"


def test_products(engine):
    outcome = run(["--json", "products", "s5", "2B", "2B"], engine)
    assert outcome.payload["products"] == {"1A": "10", "2A": "2", "3A": "3"}


def test_restriction(engine):
    args = ["restriction", "s5", "s5_v4", "--degree", "4", "--where", "2B:positive"]
    outcome = run(args, engine)
    assert outcome.exit_code == 0
    assert outcome.payload["value"] == 2
    assert outcome.payload["character"] == 2


@pytest.mark.parametrize("args,code,holds", [
    (["--degree", "4", "--where", "2B:positive", "--fusion-a", "s5_v4", "--fusion-b", "s5_z2"], 0, True),
    (["--degree", "6", "--fusion-a", "s5_v4", "--fusion-b", "s5_z2"], 1, False),
])
def test_brauer(engine, args, code, holds):
    outcome = run(["brauer", "s5", *args], engine)
    assert outcome.exit_code == code
    assert outcome.payload["holds"] is holds


def test_brauer_ambiguous_character(engine):
    outcome = run(["brauer", "s5", "--degree", "4", "--fusion-a", "s5_v4", "--fusion-b", "s5_z2"], engine)
    assert outcome.exit_code == 2
    assert outcome.text.startswith("error:")


def test_where_needs_a_condition(engine):
    outcome = run(["restriction", "s5", "s5_v4", "--degree", "4", "--where", "2B"], engine)
    assert outcome.exit_code == 2


@pytest.mark.parametrize("k,code", [(3, 0), (2, 1)])
def test_transposition_bound(engine, k, code):
    outcome = run(["transposition-bound", "s5", "2B", str(k)], engine)
    assert outcome.exit_code == code


def test_unknown_table(engine):
    outcome = run(["structconst", "nope", "2A", "2A", "1A"], engine)
    assert outcome.exit_code == 2
    assert "no table named 'nope'" in outcome.text


def test_unknown_class(engine):
    outcome = run(["structconst", "m11", "9Z", "2A", "1A"], engine)
    assert outcome.exit_code == 2
    assert "9Z" in outcome.text


# --- brute-force oracles ---


def test_brute_order(engine):
    assert run(["brute", "order", "m11"], engine).text == "|m11| = 7920"


def test_brute_struct_const(engine):
    assert run(["brute", "m", "a5", "2A", "2A", "3A"], engine).payload == {"m": 3}
    by_element = run(["brute", "m", "a5", "(1,2)(3,4)", "(1,2)(3,4)", "(1,2,3)"], engine)
    assert by_element.payload == {"m": 3}


def test_brute_unknown_class_name(engine):
    assert run(["brute", "m", "a5", "2A", "2A", "7A"], engine).exit_code == 2


@pytest.mark.parametrize("args,code,alpha", [
    (["a5", "--element", "(1,2)(3,4)"], 0, 3),
    (["a5", "--element", "ab"], 0, 2),
    (["s5", "--socle", "a5", "--element", "(1,2)"], 0, 4),
    (["a5", "--element", "(1,2)(3,4)", "--max-k", "2"], 1, None),
])
def test_brute_alpha(engine, args, code, alpha):
    outcome = run(["brute", "alpha", *args], engine)
    assert outcome.exit_code == code
    assert outcome.payload["alpha"] == alpha


def test_brute_alpha_bad_element(engine):
    assert run(["brute", "alpha", "a5", "--element", "(1,6)"], engine).exit_code == 2


def test_pair_orbits(engine):
    outcome = run(["brute", "pair-orbits", "a5", "--class-rep", "b"], engine)
    assert outcome.payload == {"orbits": 8}


def test_classify_pairs(engine):
    outcome = run(["brute", "classify-pairs", "a5", "--class-rep", "(1,2,3)"], engine)
    assert outcome.payload == {"labels": {"Z3": 1, "A4": 2, "A5": 1}}


def test_bound_is_enforced(config):
    outcome = run(["--data", config.data_dir, "--bound", "100", "brute", "m", "m11", "2A", "2A", "1A"])
    assert outcome.exit_code == 2
    assert "above the enumeration bound 100" in outcome.text


# --- misc ---


def test_check_data(engine, bundle):
    outcome = run(["check-data"], engine)
    missing = [name for name in ("hs2", "mcl2", "suz2") if name not in bundle.tables]
    assert outcome.payload["loaded"] is True
    assert outcome.payload["missing_required"] == missing
    assert outcome.exit_code == (2 if missing else 0)
    assert outcome.payload["ok"] is (not missing)


def test_usage_errors():
    assert run([]).exit_code == 2
    assert run(["frobnicate"]).exit_code == 2


def test_main_prints_json(config, capsys):
    code = main(["--data", config.data_dir, "--json", "structconst", "m11", "2A", "2A", "1A"])
    assert code == 0
    printed = json.loads(capsys.readouterr().out)
    assert printed["m"] == "165"
