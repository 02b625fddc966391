from softtopo import CorpusSpec, build_corpus, run_claim_suite
from softtopo.claims import (
    ASSERTED_IDS,
    REGISTRY,
    SEMANTICS_NOTES,
    UNDER_TEST_IDS,
    SpaceCtx,
    TripleCtx,
    ctx_from_bundle,
    evaluate_claim,
    replay_witness,
)

from .conftest import example_topology

# statements deliberately left open to refutation search
EXPECTED_UNDER_TEST = {
    "R2.3.conv",
    "T2.11.ix",
    "T2.11.x",
    "R3.2.b",
    "T3.3",
    "T3.4",
    "T3.5",
    "T3.7",
    "T4.6",
    "T4.7",
    "T5.3",
    "T5.4",
    "T5.7.sub",
    "T6.3",
    "T6.6",
    "T6.8",
    "R6.10",
    "T6.12",
    "T6.16",
    "T6.16.open",
    "T6.17",
    "T6.18",
}


def test_registry_shape():
    assert len(REGISTRY) == 81
    for cid, claim in REGISTRY.items():
        assert claim.id == cid
        assert claim.kind in ("asserted-invariant", "under-test")
        assert claim.scope in ("space", "triple")
        assert claim.statement
        assert claim.quantifier


def test_tier_partition():
    assert set(UNDER_TEST_IDS) == EXPECTED_UNDER_TEST
    assert set(ASSERTED_IDS) | set(UNDER_TEST_IDS) == set(REGISTRY)
    assert not (set(ASSERTED_IDS) & set(UNDER_TEST_IDS))
    for cid in UNDER_TEST_IDS:
        assert REGISTRY[cid].kind == "under-test"


def test_semantics_notes():
    assert len(SEMANTICS_NOTES) == 6
    assert all(isinstance(n, str) and n for n in SEMANTICS_NOTES)


def test_scope_mismatch_yields_no_hypotheses():
    ctx = SpaceCtx(example_topology(), "t")
    triple_claim = REGISTRY["T3.3"]
    assert evaluate_claim(triple_claim, ctx) == (0, [])


def test_asserted_claims_hold_on_example():
    ctx = SpaceCtx(example_topology(), "t")
    for cid in sorted(ASSERTED_IDS):
        claim = REGISTRY[cid]
        if claim.scope != "space":
            continue
        hyp, fails = evaluate_claim(claim, ctx)
        assert fails == [], cid


def test_converse_search_finds_both_witnesses():
    ctx = SpaceCtx(example_topology(), "t")
    import json

    hyp, fails = evaluate_claim(REGISTRY["R2.3.conv"], ctx)
    assert hyp > 0
    found = {(f["found"], json.dumps(f["set"], sort_keys=True)) for f in fails}
    semiopen_lit = json.dumps({"e1": ["h1", "h2"], "e2": ["h1", "h2"]}, sort_keys=True)
    semiclosed_lit = json.dumps({"e1": ["h3"], "e2": ["h3"]}, sort_keys=True)
    assert ("semiopen-not-open", semiopen_lit) in found
    assert ("semiclosed-not-closed", semiclosed_lit) in found


def test_ctx_bundle_round_trip():
    ctx = SpaceCtx(example_topology(), "corpus[0]:deadbeef")
    bundle = ctx.to_bundle()
    back = ctx_from_bundle(bundle)
    assert isinstance(back, SpaceCtx)
    assert back.t.encoding() == ctx.t.encoding()
    assert back.label == ctx.label


def test_replay_witness_round_trip():
    corpus = build_corpus(CorpusSpec(mode="exhaustive", universe=2, parameters=1))
    result = run_claim_suite(corpus, claim_ids=["R2.3.conv"])
    rec = result.record("R2.3.conv")
    assert rec.status == "refuted"
    bundle = rec.witnesses[0]
    assert replay_witness(bundle)
    # a doctored payload must fail to reproduce
    import copy

    broken = copy.deepcopy(bundle)
    broken["payload"]["found"] = "not-a-real-finding"
    assert not replay_witness(broken)


def test_triple_ctx_seed_depends_on_maps():
    from softtopo import SoftFunction

    t = example_topology()
    sig = t.signature
    ident = SoftFunction.from_labels(
        sig, sig, {"h1": "h1", "h2": "h2", "h3": "h3"}, {"e1": "e1", "e2": "e2"}
    )
    swap = SoftFunction.from_labels(
        sig, sig, {"h1": "h2", "h2": "h1", "h3": "h3"}, {"e1": "e1", "e2": "e2"}
    )
    a = TripleCtx(ident, t, t, "a")
    b = TripleCtx(swap, t, t, "b")
    assert a.seed != b.seed
