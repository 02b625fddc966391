import json
import os

import pytest

from softtopo import save_space
from softtopo.cli import main

from .conftest import example_topology


def run(capsys, argv):
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_banner_default_and_suppression(capsys):
    code, out, _ = run(capsys, ["validate", "builtin:example"])
    assert code == 0
    assert out.splitlines()[0] == "softtopo 0.1.0"
    code, out, _ = run(capsys, ["validate", "builtin:example", "--no-banner"])
    assert code == 0
    assert "softtopo" not in out.splitlines()[0]


def test_validate_builtin_ok(capsys):
    code, out, err = run(capsys, ["validate", "builtin:example", "--no-banner"])
    assert code == 0 and err == ""
    assert "valid" in out


def test_validate_json_format(capsys):
    code, out, _ = run(capsys, ["validate", "example", "--format", "json", "--no-banner"])
    assert code == 0
    obj = json.loads(out)
    assert obj["valid"] is True
    assert obj["opens"] == 3


def test_validate_rejects_broken_family(tmp_path, capsys):
    bad = {
        "signature": {"universe": ["h1", "h2", "h3"], "parameters": ["e1"]},
        "opens": [{"e1": []}, {"e1": ["h1", "h2", "h3"]}, {"e1": ["h1"]}, {"e1": ["h2"]}],
    }
    path = tmp_path / "bad.json"
    path.write_text(json.dumps(bad))
    code, out, err = run(capsys, ["validate", str(path), "--no-banner"])
    assert code == 2
    assert "union" in out
    assert err.startswith("error: topology:")
    assert err.count("\n") == 1


def test_missing_space_file(capsys):
    code, _, err = run(capsys, ["validate", "/nope/missing.json", "--no-banner"])
    assert code == 2
    assert err.startswith("error: literal:")


def test_classify_semiopen_not_open(capsys):
    code, out, _ = run(
        capsys,
        [
            "classify",
            "builtin:example",
            "--set",
            '{"e1":["h1","h2"],"e2":["h1","h2"]}',
            "--no-banner",
        ],
    )
    assert code == 0
    lines = out.splitlines()
    assert "open=false" in lines
    assert "semiopen=true" in lines
    assert 'semiopen-witness={"e1": ["h1", "h2"], "e2": ["h1"]}' in lines


def test_classify_set_from_file(tmp_path, capsys):
    lit = tmp_path / "set.json"
    lit.write_text('{"e1":["h3"],"e2":["h3"]}')
    code, out, _ = run(capsys, ["classify", "example", "--set", f"@{lit}", "--no-banner"])
    assert code == 0
    assert "semiclosed=true" in out.splitlines()
    assert "closed=false" in out.splitlines()


def test_operator_subcommands(capsys):
    sets = '{"e1":["h1","h2"],"e2":["h1"]}'
    code, out, _ = run(capsys, ["closure", "example", "--set", sets, "--no-banner"])
    assert code == 0
    assert out.strip() == 'closure={"e1": ["h1", "h2", "h3"], "e2": ["h1", "h2", "h3"]}'
    comp = '{"e1":["h3"],"e2":["h2","h3"]}'
    code, out, _ = run(capsys, ["interior", "example", "--set", comp, "--no-banner"])
    assert out.strip() == 'interior={"e1": [], "e2": []}'
    g0 = '{"e1":["h1"],"e2":[]}'
    code, out, _ = run(capsys, ["ssint", "example", "--set", g0, "--no-banner"])
    assert out.strip() == 'ssint={"e1": [], "e2": []}'
    code, out, _ = run(capsys, ["sscl", "example", "--set", g0, "--no-banner"])
    assert out.strip() == 'sscl={"e1": ["h1", "h2", "h3"], "e2": ["h1", "h2", "h3"]}'


def test_axioms_output_is_line_oriented(capsys):
    code, out, _ = run(capsys, ["axioms", "builtin:discrete", "--no-banner"])
    assert code == 0
    lines = [l for l in out.splitlines() if "=" in l and not l.startswith(" ")]
    names = [l.split("=")[0] for l in lines]
    assert names == [
        "semi_T0",
        "semi_T1",
        "semi_T2",
        "semiregular",
        "semi_T3",
        "seminormal",
        "semi_T4",
        "semiconnected",
        "semicompact",
    ]
    assert "semiconnected=false" in lines
    assert "  witness: " in out


def test_axioms_witness_for_indiscrete(capsys):
    code, out, _ = run(capsys, ["axioms", "builtin:indiscrete", "--no-banner"])
    assert code == 0
    assert 'semi_T0=false' in out
    assert '{"point": "e1:h1", "point2": "e1:h2"}' in out


def test_map_check(tmp_path, capsys):
    space = tmp_path / "ex.json"
    save_space(example_topology(), str(space))
    fn = {
        "source": "ex.json",
        "target": "ex.json",
        "point_map": {"h1": "h1", "h2": "h2", "h3": "h3"},
        "param_map": {"e1": "e1", "e2": "e2"},
    }
    fn_path = tmp_path / "fn.json"
    fn_path.write_text(json.dumps(fn))
    code, out, _ = run(capsys, ["map-check", f"@{fn_path}", "--no-banner"])
    assert code == 0
    lines = out.splitlines()
    for flag in ("continuous", "semicontinuous", "irresolute", "semiopen_map", "semiclosed_map"):
        assert f"{flag}=true" in lines
    assert "surjective=true" in lines


def test_gen_exhaustive(tmp_path, capsys):
    out_dir = tmp_path / "corpus"
    code, out, _ = run(
        capsys,
        ["gen", "--universe", "2", "--params", "1", "--exhaustive", "-o", str(out_dir), "--no-banner"],
    )
    assert code == 0
    assert "instances=4" in out
    assert (out_dir / "manifest.json").exists()


def test_gen_random_determinism(tmp_path, capsys):
    args = ["gen", "--universe", "3", "--params", "2", "--count", "25", "--seed", "42",
            "--density", "0.3", "--no-banner"]
    code_a, out_a, _ = run(capsys, args + ["-o", str(tmp_path / "a")])
    code_b, out_b, _ = run(capsys, args + ["-o", str(tmp_path / "b")])
    assert code_a == code_b == 0
    fp_a = [l for l in out_a.splitlines() if l.startswith("fingerprint=")]
    fp_b = [l for l in out_b.splitlines() if l.startswith("fingerprint=")]
    assert fp_a == fp_b


def test_gen_flag_conflicts(tmp_path, capsys):
    code, _, err = run(
        capsys,
        ["gen", "--universe", "2", "--params", "1", "--exhaustive", "--count", "5",
         "-o", str(tmp_path / "x"), "--no-banner"],
    )
    assert code == 2
    assert err.startswith("error:")


def test_suite_over_corpus_dir(tmp_path, capsys):
    out_dir = str(tmp_path / "c")
    run(capsys, ["gen", "--universe", "2", "--params", "1", "--exhaustive", "-o", out_dir])
    code, out, err = run(
        capsys, ["suite", out_dir, "--claims", "D2.1,R2.3.conv", "--no-banner"]
    )
    assert code == 0 and err == ""
    assert "result: ok" in out
    assert "R2.3.conv under-test refuted" in out
    # refutation witnesses land next to the corpus
    wroot = os.path.join(out_dir, "witnesses", "R2.3.conv")
    assert os.path.isdir(wroot)


def test_suite_reports_identical_across_jobs(tmp_path, capsys):
    out_dir = str(tmp_path / "c")
    run(capsys, ["gen", "--universe", "2", "--params", "1", "--exhaustive", "-o", out_dir])
    _, one, _ = run(capsys, ["suite", out_dir, "--jobs", "1", "--no-banner"])
    _, two, _ = run(capsys, ["suite", out_dir, "--jobs", "2", "--no-banner"])
    assert one == two


def test_suite_unknown_claim(tmp_path, capsys):
    out_dir = str(tmp_path / "c")
    run(capsys, ["gen", "--universe", "1", "--params", "1", "--exhaustive", "-o", out_dir])
    code, _, err = run(capsys, ["suite", out_dir, "--claims", "T99.1", "--no-banner"])
    assert code == 2
    assert err.startswith("error: literal:")


def test_suite_on_single_space(capsys):
    code, out, _ = run(capsys, ["suite", "builtin:example", "--claims", "D2.1", "--no-banner"])
    assert code == 0
    assert "D2.1 asserted-invariant holds" in out


def test_suite_asserted_violation_exits_3(tmp_path, capsys, monkeypatch):
    # break one asserted evaluator on purpose: plumbing must escalate
    from softtopo import claims

    broken = claims.Claim(
        id="D2.1",
        kind=claims.REGISTRY["D2.1"].kind,
        scope="space",
        statement=claims.REGISTRY["D2.1"].statement,
        quantifier=claims.REGISTRY["D2.1"].quantifier,
        evaluate=lambda ctx: (1, [{"boom": True}]),
    )
    monkeypatch.setitem(claims.REGISTRY, "D2.1", broken)
    code, out, err = run(capsys, ["suite", "builtin:indiscrete", "--claims", "D2.1", "--no-banner"])
    assert code == 3
    assert err.startswith("error: internal:")
    assert "result: asserted-violation" in out


def test_replay_round_trip(tmp_path, capsys):
    out_dir = str(tmp_path / "c")
    run(capsys, ["gen", "--universe", "2", "--params", "1", "--exhaustive", "-o", out_dir])
    run(capsys, ["suite", out_dir, "--claims", "R2.3.conv", "--no-banner"])
    wdir = os.path.join(out_dir, "witnesses", "R2.3.conv", "0")
    code, out, _ = run(capsys, ["replay", wdir, "--no-banner"])
    assert code == 0
    assert "reproduced=true" in out


def test_replay_detects_tampering(tmp_path, capsys):
    out_dir = str(tmp_path / "c")
    run(capsys, ["gen", "--universe", "2", "--params", "1", "--exhaustive", "-o", out_dir])
    run(capsys, ["suite", out_dir, "--claims", "R2.3.conv", "--no-banner"])
    wdir = os.path.join(out_dir, "witnesses", "R2.3.conv", "0")
    payload_path = os.path.join(wdir, "payload.json")
    with open(payload_path) as fh:
        payload = json.load(fh)
    payload["found"] = "fabricated"
    with open(payload_path, "w") as fh:
        json.dump(payload, fh)
    code, out, _ = run(capsys, ["replay", wdir, "--no-banner"])
    assert code == 1
    assert "reproduced=false" in out


def test_classify_json_format(capsys):
    code, out, _ = run(
        capsys,
        ["classify", "example", "--set", '{"e1":["h1"],"e2":[]}', "--format", "json", "--no-banner"],
    )
    assert code == 0
    obj = json.loads(out)
    assert obj["semiopen"] is False
    assert obj["semiclosed"] is False
    assert obj["set"] == {"e1": ["h1"], "e2": []}


def test_bad_inline_literal(capsys):
    code, _, err = run(capsys, ["classify", "example", "--set", "{oops", "--no-banner"])
    assert code == 2
    assert err.startswith("error: literal:")
