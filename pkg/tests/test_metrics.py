import math

import pytest
from hypothesis import given, strategies as st

from babelbot.metrics.interaction import (
    EmptyDataset,
    InteractionRecord,
    art,
    ipa,
    ipa_score,
    ipa_with_exclusions,
    tsr,
)
from babelbot.metrics.params import Unit, extract_params
from babelbot.metrics.report import build_report, build_translation_report
from babelbot.metrics.tokenize import tokenize
from babelbot.metrics.translation import (
    EmptyInput,
    EmptyReference,
    GreedyMatchingScorer,
    ScorerUnavailable,
    bleu,
    levenshtein,
    per,
    s_per,
    semantic_score,
    ter,
    vematch,
)

from oracles import exhaustive_ter, naive_bleu


# --- tokenize ----------------------------------------------------------------


def test_tokenize_words_and_units():
    assert tokenize("Move forward 2 m.", "en") == ["Move", "forward", "2", "m", "."]


def test_tokenize_detaches_punctuation():
    assert tokenize("x = 2, y = 3", "en") == ["x", "=", "2", ",", "y", "=", "3"]


def test_tokenize_cjk_per_codepoint():
    assert tokenize("前进两米", "zh") == ["前", "进", "两", "米"]


def test_tokenize_locale_decimal_separator():
    assert tokenize("2,5 m", "de") == ["2,5", "m"]
    assert tokenize("2.5 m", "en") == ["2.5", "m"]
    assert tokenize("2,5 m", "en") == ["2", ",", "5", "m"]


# --- extract_params -------------------------------------------------------------


def test_extract_params_spec_example():
    assert extract_params("Move forward 2 m at 0.2 m/s.") == [
        (2.0, Unit.METERS),
        (0.2, Unit.METERS_PER_S),
    ]


def test_extract_params_no_numbers():
    assert extract_params("Describe surroundings.") == []


def test_extract_params_cm_normalized():
    assert extract_params("Move forward 500 cm.") == [(5.0, Unit.METERS)]


def test_extract_params_rad_normalized():
    values = extract_params("Turn left 1.5708 rad.")
    assert values[0][1] is Unit.DEGREES
    assert values[0][0] == pytest.approx(90.0, abs=0.01)


def test_extract_params_bare_numbers_and_order():
    params = extract_params("Navigate to the coordinates x = 2, y = 3, z = 0 at 0.5 m/s.")
    assert params == [
        (2.0, Unit.NONE),
        (3.0, Unit.NONE),
        (0.0, Unit.NONE),
        (0.5, Unit.METERS_PER_S),
    ]


# --- PER -------------------------------------------------------------------------


def test_per_branch_k1_zero_mismatch():
    ref = ["Move forward 2 m at 0.2 m/s."]
    assert per(ref, list(ref)) == 0.0


def test_per_branch_k1_counts_mismatches():
    ref = ["Move forward 2 m at 0.2 m/s."]
    hyp = ["Move forward 3 m at 0.2 m/s."]
    assert per(ref, hyp) == pytest.approx(0.5)


def test_per_branch_k2():
    assert per(["Describe surroundings."], ["Move forward 3 m."]) == 1.0


def test_per_branch_k3():
    assert per(["Describe surroundings."], ["Report pose."]) == 0.0


def test_per_unit_mismatch_counts():
    assert per(["Move forward 2 m."], ["Move forward 2 deg."]) == 1.0


def test_per_cm_equivalence():
    assert per(["Move forward 5 m."], ["Move forward 500 cm."]) == 0.0


@given(
    st.lists(st.integers(min_value=0, max_value=9), max_size=6),
    st.lists(st.integers(min_value=0, max_value=9), max_size=6),
)
def test_per_three_branch_property(ref_nums, hyp_nums):
    ref = [f"Move forward {n} m." for n in ref_nums]
    hyp = [f"Move forward {n} m." for n in hyp_nums]
    value = per(ref, hyp)
    if ref_nums:
        k = min(len(ref_nums), len(hyp_nums))
        mism = sum(1 for i in range(k) if ref_nums[i] != hyp_nums[i])
        assert value == pytest.approx(mism / len(ref_nums))
    elif hyp_nums:
        assert value == 1.0
    else:
        assert value == 0.0


def test_s_per_perfect():
    ref = ["Move forward 2 m at 0.2 m/s."]
    assert s_per(ref, list(ref)) == 1.0


def test_s_per_complement():
    ref = ["Move forward 2 m at 0.2 m/s."]
    hyp = ["Move forward 3 m at 0.5 m/s."]
    assert s_per(ref, hyp) == pytest.approx(0.0)  # both params wrong -> per 1


def test_s_per_spurious_params_penalized():
    # hyp repeats the ref params and appends two spurious ones:
    # per = 0 under branch K1, but the count penalty floors the score
    ref = ["Move forward 2 m at 0.2 m/s."]
    hyp = ["Move forward 2 m at 0.2 m/s.", "Move forward 9 m at 0.9 m/s."]
    # gap 2 over ref size 2 -> penalty min(1, 1) -> score 0
    assert s_per(ref, hyp) == pytest.approx(0.0)
    hyp_one_extra = ["Move forward 2 m at 0.2 m/s.", "Wait 9 seconds."]
    # gap 1 over ref size 2 -> score 0.5
    assert s_per(ref, hyp_one_extra) == pytest.approx(0.5)


# --- semantic score -----------------------------------------------------------------


def test_semantic_identical_lists():
    actions = ["Move forward 2 m at 0.2 m/s.", "Turn right 90 deg at 30 deg/s."]
    assert semantic_score(actions, list(actions)) == 1.0


def test_semantic_disjoint():
    assert semantic_score(["alpha beta"], ["gamma delta"]) == 0.0


def test_semantic_one_token_overlap_oracle():
    # bags {a, b} vs {b, c}: overlap 1, F1 = 2*1/(2+2) = 0.5
    assert semantic_score(["a b"], ["b c"]) == pytest.approx(0.5)


def test_greedy_matching_scorer_contract():
    embeddings = {
        "move": (1.0, 0.0),
        "go": (0.9, 0.1),
        "stop": (0.0, 1.0),
    }
    scorer = GreedyMatchingScorer(lambda token: embeddings.get(token, (0.5, 0.5)))
    perfect = scorer.score_texts("move stop", "move stop")
    assert perfect == pytest.approx(1.0)
    close = scorer.score_texts("move", "go")
    assert 0.9 < close <= 1.0
    with pytest.raises(ScorerUnavailable):
        scorer.score_texts("", "move")


# --- BLEU ---------------------------------------------------------------------------


def test_bleu_identity():
    tokens = "the robot moves forward two meters".split()
    assert bleu(tokens, tokens) == pytest.approx(1.0)


def test_bleu_zero_overlap_floored():
    score = bleu("a b c d e".split(), "v w x y z".split())
    assert 0.0 < score < 1e-6


def test_bleu_empty_inputs_rejected():
    with pytest.raises(EmptyInput):
        bleu([], ["a"])
    with pytest.raises(EmptyInput):
        bleu(["a"], [])


def test_bleu_order_sensitivity():
    ref = "a b c d e f".split()
    shuffled = "f e d c b a".split()
    assert bleu(ref, shuffled) < bleu(ref, ref)


BLEU_PAIRS = [
    ("the cat sat on the mat", "the cat sat on the mat"),
    ("the cat sat on the mat", "the cat is on the mat"),
    ("the quick brown fox jumps over the lazy dog", "a quick brown fox jumped over a lazy dog"),
    ("move forward two meters and stop", "move forward two meters then stop"),
    ("turn left ninety degrees now", "turn right ninety degrees now"),
    ("navigate to the kitchen at half speed", "navigate to the kitchen"),
    ("describe your surroundings please", "please describe your surroundings"),
    ("one two three four five six seven", "one two three four five six seven eight"),
    ("alpha beta gamma delta", "delta gamma beta alpha"),
    ("report your pose", "report pose"),
    ("the robot is moving forward", "robot the moving is forward"),
    ("wait two seconds then continue", "wait two seconds and then continue"),
    ("capture an image of the scene", "capture image of scene"),
    ("go to the charging station", "go to charging station now"),
    ("rotate ninety degrees to the left", "rotate ninety degrees to the left"),
    ("a b a b a b", "a b a b"),
    ("my hovercraft is full of eels", "my hovercraft is filled with eels"),
    ("this is a very long sentence used for testing", "this is a very long phrase used for tests"),
    ("x y z w", "w z y x"),
    ("drive in a circle of radius one meter", "drive in a circle with radius one meter"),
]


def test_bleu_matches_independent_oracle_on_twenty_pairs():
    for ref_text, hyp_text in BLEU_PAIRS:
        ref, hyp = ref_text.split(), hyp_text.split()
        assert bleu(ref, hyp) == pytest.approx(naive_bleu(ref, hyp), abs=1e-6), (ref_text, hyp_text)


# --- TER ----------------------------------------------------------------------------


def test_ter_identity():
    tokens = "move forward two meters".split()
    assert ter(tokens, tokens) == 0.0


def test_ter_single_substitution():
    ref = "a b c d e".split()
    hyp = "a b x d e".split()
    assert ter(ref, hyp) == pytest.approx(0.2)


def test_ter_block_swap_counts_one_shift():
    ref = "a b c d".split()
    hyp = "c d a b".split()
    # one block shift repairs the order entirely
    assert ter(ref, hyp) == pytest.approx(1 / 4)


def test_ter_can_exceed_one():
    assert ter(["a"], "x y z".split()) > 1.0


def test_ter_empty_reference_rejected():
    with pytest.raises(EmptyReference):
        ter([], ["a"])


TER_PAIRS = [
    ("a b c d", "c d a b"),
    ("a b c d e", "a b c d e"),
    ("a b c d e", "e a b c d"),
    ("a b c d", "a c b d"),
    ("one two three four", "four three two one"),
    ("a b c d e f", "d e f a b c"),
    ("m n o p", "m o n p"),
    ("a b c", "c b a"),
    ("u v w x y", "u v x w y"),
    ("p q r s", "p q s r"),
]


def test_ter_matches_exhaustive_shift_oracle_on_short_pairs():
    for ref_text, hyp_text in TER_PAIRS:
        ref, hyp = ref_text.split(), hyp_text.split()
        assert len(ref) <= 8 and len(hyp) <= 8
        assert ter(ref, hyp) == pytest.approx(exhaustive_ter(ref, hyp)), (ref_text, hyp_text)


def test_levenshtein_basics():
    assert levenshtein("a b c".split(), "a b c".split()) == 0
    assert levenshtein("a b c".split(), "a x c".split()) == 1
    assert levenshtein([], "a b".split()) == 2


# --- VeMatch -------------------------------------------------------------------------


def test_vematch_same_head():
    assert vematch("Move forward".split(), "Move ahead".split()) == 1


def test_vematch_different_head():
    assert vematch("Turn left".split(), "Rotate left".split()) == 0


def test_vematch_casefold():
    assert vematch(["MOVE"], ["move"]) == 1


def test_vematch_symmetry():
    pairs = [("move on", "move off"), ("go now", "stop now"), ("a", "a")]
    for a_text, b_text in pairs:
        a, b = a_text.split(), b_text.split()
        assert vematch(a, b) == vematch(b, a)


def test_vematch_empty_rejected():
    with pytest.raises(EmptyInput):
        vematch([], ["a"])


# --- IPA / TSR / ART --------------------------------------------------------------------


def record(gold, pred, success=1, lang="en", dt_ms=2100):
    return InteractionRecord(
        lang=lang,
        text="cmd",
        t_ins_ms=1_000_000,
        t_res_ms=1_000_000 + dt_ms,
        gold_actions=tuple(gold),
        pred_actions=tuple(pred),
        success=success,
    )


def test_ipa_perfect_record():
    r = record(["Move forward 2 m at 0.2 m/s."], ["Move forward 2 m at 0.2 m/s."])
    assert ipa_score(r) == pytest.approx(1.0)
    assert ipa([r]) == 1.0


def test_ipa_threshold_arithmetic():
    # semantic 0.5 with perfect params: 0.4*0.5 + 0.6*1 = 0.8 < 0.9 -> incorrect
    s = 0.4 * 0.5 + 0.6 * 1.0
    assert s == pytest.approx(0.8)
    assert s < 0.9
    # build a record realizing those component scores
    r = record(["Move 2 m.", "alpha beta gamma"], ["Move 2 m.", "x y z"])
    s_sem = semantic_score(r.gold_actions, r.pred_actions)
    s_params = s_per(r.gold_actions, r.pred_actions)
    score = 0.4 * s_sem + 0.6 * s_params
    assert ipa([r]) == (1.0 if score >= 0.9 else 0.0)
    assert score < 0.9
    assert ipa([r]) == 0.0


def test_ipa_mixed_set():
    good = record(["Report pose."], ["Report pose."])
    bad = record(["Move forward 2 m."], ["Move forward 9 m."])
    assert ipa([good, bad]) == pytest.approx(0.5)


def test_ipa_monotone_in_component_scores():
    base = record(["Move forward 2 m."], ["Move forward 9 m."])
    better = record(["Move forward 2 m."], ["Move forward 2 m."])
    assert ipa_score(better) >= ipa_score(base)


def test_ipa_empty_dataset():
    with pytest.raises(EmptyDataset):
        ipa([])


class FailingScorer:
    def score_texts(self, ref, hyp):
        raise ScorerUnavailable("offline")


def test_ipa_exclusions_counted():
    records = [record(["Report pose."], ["Report pose."])]
    with pytest.raises(EmptyDataset):
        ipa_with_exclusions(records, scorer=FailingScorer())


def test_tsr_values():
    assert tsr([record([], [], success=1)] * 3) == 1.0
    assert tsr([record([], [], success=0)] * 2) == 0.0
    mixed = [record([], [], success=s) for s in (1, 0, 1, 0)]
    assert tsr(mixed) == pytest.approx(0.5)


def test_art_single_and_mean():
    assert art([record([], [], dt_ms=2100)]) == pytest.approx(2.1)
    assert art([record([], [], dt_ms=2000), record([], [], dt_ms=2400)]) == pytest.approx(2.2)
    assert art([record([], [], dt_ms=0)]) == 0.0


def test_record_validation():
    with pytest.raises(ValueError):
        InteractionRecord("en", "x", 10, 5, (), (), 1)
    with pytest.raises(ValueError):
        InteractionRecord("en", "x", 0, 1, (), (), 2)


# --- report -----------------------------------------------------------------------------


def test_report_rows_and_csv_determinism():
    records = [
        record(["Report pose."], ["Report pose."], lang="en"),
        record(["Report pose."], ["Report pose."], lang="de", success=0),
    ]
    report = build_report(records)
    assert [row.lang for row in report.rows] == ["de", "en"]
    assert report.rows[1].family == "Indo-European"
    assert report.to_csv() == build_report(records).to_csv()
    assert report.to_csv().splitlines()[0] == "lang,family,n,ipa,tsr,art_s"


def test_translation_report_rows(corpus_path):
    from babelbot.metrics.interaction import read_translation_dataset

    dataset = read_translation_dataset(corpus_path.parent / "translations.jsonl")
    rows = build_translation_report(dataset)
    assert {row.lang for row in rows} == {"de", "es", "fr"}
    for row in rows:
        assert 0.0 <= row.bleu <= 1.0
        assert row.ter >= 0.0
        assert 0.0 <= row.vematch <= 1.0
