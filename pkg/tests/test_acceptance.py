"""End-to-end acceptance gate.

Each test covers one shipping criterion and prints a single verdict line
(visible with -s; the pytest PASSED/FAILED line mirrors it otherwise).
"""

import itertools
import json
import time

import pytest

from softtopo import (
    Corpus,
    CorpusSpec,
    SoftSet,
    SplitMix64,
    analyze_cover,
    build_corpus,
    enumerate_soft_sets,
    enumerate_topologies,
    is_semiclosed,
    is_semiclosed_definitional,
    is_semiopen,
    is_semiopen_definitional,
    make_absolute,
    make_null,
    run_claim_suite,
    scss,
    scss_definitional,
    soss,
    soss_definitional,
    sscl,
    sscl_definitional,
    ssint,
    ssint_definitional,
)
from softtopo.claims import REGISTRY, UNDER_TEST_IDS
from softtopo.explorer import auto_signature

from .conftest import SIG32, example_topology

SMALL_SIGNATURES = ((1, 1), (2, 1), (1, 2), (3, 1), (1, 3), (2, 2), (4, 1), (1, 4))


def verdict(n, label, ok, detail):
    line = f"ACCEPTANCE {n} {label}: {'PASS' if ok else 'FAIL'} ({detail})"
    print(line, flush=True)
    assert ok, line


@pytest.fixture(scope="module")
def small_corpus():
    instances = []
    for n, m in SMALL_SIGNATURES:
        instances.extend(enumerate_topologies(auto_signature(n, m)))
    return Corpus(instances)


@pytest.fixture(scope="module")
def random_corpus():
    spec = CorpusSpec(mode="random", universe=3, parameters=2, count=500, seed=2026, density=0.3)
    return build_corpus(spec)


@pytest.fixture(scope="module")
def combined_corpus(small_corpus, random_corpus):
    return Corpus(list(small_corpus.instances) + list(random_corpus.instances))


@pytest.fixture(scope="module")
def small_suite(small_corpus):
    return run_claim_suite(small_corpus, raise_on_asserted=False)


def test_criterion_1_fast_paths_match_definitional_enumeration(small_corpus, random_corpus):
    start = time.time()
    comparisons = 0
    for t in itertools.chain(small_corpus.instances, random_corpus.instances):
        fam_fast = [s.mask for s in soss(t)]
        fam_slow = [s.mask for s in soss_definitional(t)]
        assert fam_fast == fam_slow
        assert [s.mask for s in scss(t)] == [s.mask for s in scss_definitional(t)]
        for g in enumerate_soft_sets(t.signature):
            assert is_semiopen(t, g)[0] == is_semiopen_definitional(t, g)[0]
            assert is_semiclosed(t, g)[0] == is_semiclosed_definitional(t, g)[0]
            assert ssint(t, g) == ssint_definitional(t, g)
            assert sscl(t, g) == sscl_definitional(t, g)
            comparisons += 4
    elapsed = time.time() - start
    verdict(
        1,
        "fast-vs-definitional agreement",
        elapsed < 60.0,
        f"{len(small_corpus)}+{len(random_corpus)} spaces, {comparisons} comparisons, {elapsed:.1f}s",
    )


def test_criterion_2_asserted_suite_zero_violations(combined_corpus):
    result = run_claim_suite(combined_corpus, raise_on_asserted=False)
    bad = list(result.asserted_failures)
    asserted_records = [r for r in result.records if r.kind == "asserted-invariant"]
    failing = [r.claim_id for r in asserted_records if r.failures]
    verdict(
        2,
        "asserted invariants over full corpus",
        not bad and not failing,
        f"{len(combined_corpus)} spaces, {result.triple_count} triples, "
        f"{len(asserted_records)} asserted claims, violations={len(bad) + len(failing)}",
    )


def test_criterion_3_converse_refutation_witnesses(small_suite):
    rec = small_suite.record("R2.3.conv")
    semiopen_target = {"e1": ["h1", "h2"], "e2": ["h1", "h2"]}
    semiclosed_target = {"e1": ["h3"], "e2": ["h3"]}
    seen = set()
    for bundle in rec.witnesses:
        payload = bundle["payload"]
        if payload["set"] == semiopen_target and payload["found"] == "semiopen-not-open":
            seen.add("semiopen")
        if payload["set"] == semiclosed_target and payload["found"] == "semiclosed-not-closed":
            seen.add("semiclosed")
    verdict(
        3,
        "both converse witnesses exhibited",
        rec.status == "refuted" and seen == {"semiopen", "semiclosed"},
        f"status={rec.status}, witnesses={len(rec.witnesses)}, matched={sorted(seen)}",
    )


def test_criterion_4_fixture_facts_by_both_routes():
    t = example_topology()
    f1 = SoftSet(SIG32, 0b110100)
    g0 = SoftSet.from_rows(SIG32, {"e1": ["h1"], "e2": []})
    full, null = make_absolute(SIG32), make_null(SIG32)
    facts = [
        t.closure(f1) == full,
        t.interior(~f1) == null,
        len(soss(t)) == 9,
        len(soss_definitional(t)) == 9,
        sscl(t, g0) == full,
        sscl_definitional(t, g0) == full,
        ssint(t, g0) == null,
        ssint_definitional(t, g0) == null,
    ]
    verdict(4, "fixture facts", all(facts), f"{sum(facts)}/{len(facts)} exact checks")


def test_criterion_5_registry_coverage(small_suite):
    problems = []
    for claim_id in REGISTRY:
        rec = small_suite.record(claim_id)
        if rec is None or rec.status not in ("holds", "refuted", "exhausted"):
            problems.append(f"{claim_id}: unevaluated")
            continue
        if rec.status == "refuted" and not rec.witnesses:
            problems.append(f"{claim_id}: refuted without witnesses")
        if rec.status == "holds" and rec.hypotheses <= 0:
            problems.append(f"{claim_id}: holds with empty scope")
        if rec.kind == "under-test" and not rec.quantifier:
            problems.append(f"{claim_id}: missing scope description")
    refuted = sorted(
        r.claim_id for r in small_suite.records if r.status == "refuted"
    )
    under_test_outcomes = {
        r.claim_id: r.status for r in small_suite.records if r.kind == "under-test"
    }
    assert set(under_test_outcomes) == set(UNDER_TEST_IDS)
    verdict(
        5,
        "claim registry coverage",
        not problems,
        f"{len(REGISTRY)} claims evaluated, refuted={refuted}, problems={problems or 'none'}",
    )


def test_criterion_6_determinism(tmp_path, capsys):
    from softtopo.cli import main

    args = ["gen", "--universe", "3", "--params", "2", "--count", "200", "--seed", "42",
            "--density", "0.3", "--no-banner"]
    assert main(args + ["-o", str(tmp_path / "a")]) == 0
    out_a = capsys.readouterr().out
    assert main(args + ["-o", str(tmp_path / "b")]) == 0
    out_b = capsys.readouterr().out
    fp_a = next(l for l in out_a.splitlines() if l.startswith("fingerprint="))
    fp_b = next(l for l in out_b.splitlines() if l.startswith("fingerprint="))

    assert main(["suite", str(tmp_path / "a"), "--jobs", "1", "--no-banner"]) == 0
    report_one = capsys.readouterr().out
    assert main(["suite", str(tmp_path / "a"), "--jobs", "3", "--no-banner"]) == 0
    report_three = capsys.readouterr().out

    with capsys.disabled():
        verdict(
            6,
            "generation and suite determinism",
            fp_a == fp_b and report_one == report_three,
            f"fingerprints equal={fp_a == fp_b}, reports byte-identical={report_one == report_three}",
        )


def brute_force_min_cover_size(carrier_mask, member_masks):
    best = None
    for r in range(len(member_masks) + 1):
        for combo in itertools.combinations(range(len(member_masks)), r):
            m = 0
            for i in combo:
                m |= member_masks[i]
            if m & carrier_mask == carrier_mask:
                return r
    return best


def test_criterion_7_minimal_subcover_exactness():
    t = example_topology()
    carrier = make_absolute(SIG32)
    rng = SplitMix64(777)
    start = time.time()
    solved = 0
    for case in range(100):
        size = 12
        members = [SoftSet(SIG32, rng.below(64)) for _ in range(size)]
        rep = analyze_cover(t, carrier, members)
        expected = brute_force_min_cover_size(carrier.mask, [m.mask for m in members])
        if expected is None:
            assert not rep.is_cover
        else:
            assert rep.is_cover
            assert rep.minimal_subcover is not None
            assert len(rep.minimal_subcover) == expected
            got = 0
            for i in rep.minimal_subcover:
                got |= members[i].mask
            assert got & carrier.mask == carrier.mask
        solved += 1
    elapsed = time.time() - start
    verdict(
        7,
        "minimal subcover exactness",
        solved == 100 and elapsed < 60.0,
        f"{solved} instances vs 2^12 brute force, {elapsed:.1f}s",
    )
