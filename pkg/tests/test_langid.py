import pytest

from babelbot.langid import (
    EmptyText,
    LanguageProfile,
    LanguageProfileSet,
    LanguageSource,
    LanguageTag,
    NoProfileMatch,
    Script,
    SessionLanguageState,
    detect_language,
    dominant_script,
    resolve_session_language,
    text_trigrams,
)


def test_detects_english(profiles):
    assert detect_language("Move forward 2 meters", profiles).code == "en"


def test_detects_german(profiles):
    assert detect_language("Gehe 2 Meter geradeaus", profiles).code == "de"


def test_empty_text_rejected(profiles):
    with pytest.raises(EmptyText):
        detect_language("   ", profiles)


def test_no_profile_match_below_floor(profiles):
    # numerals only: no letter trigrams shared with any profile
    with pytest.raises(NoProfileMatch):
        detect_language("000 111 222 333", profiles)


def test_detection_is_deterministic(profiles):
    tags = {detect_language("Describe your surroundings.", profiles).code for _ in range(5)}
    assert len(tags) == 1


def test_confidence_in_range(profiles):
    tag = detect_language("Please navigate to the kitchen and wait there.", profiles)
    assert 0.0 <= tag.confidence <= 1.0


def test_han_text_never_yields_latin_profile(profiles):
    # script pre-filter soundness
    tag = detect_language("请向右转然后描述你周围的环境", profiles)
    assert tag.script is Script.HAN
    assert tag.code == "zh"


def test_dominant_script_classification():
    assert dominant_script("hello world") is Script.LATIN
    assert dominant_script("привет мир") is Script.CYRILLIC
    assert dominant_script("你好世界") is Script.HAN
    assert dominant_script("مرحبا بالعالم") is Script.ARABIC
    assert dominant_script("नमस्ते दुनिया") is Script.DEVANAGARI
    assert dominant_script("12345 !!!") is Script.OTHER


def test_tie_break_prefers_larger_profile():
    text = "aaa bbb aaa"
    small = LanguageProfile.from_text("aa", text)
    big = LanguageProfile.from_text("bb", text + " ccc ddd eee fff")
    profiles = LanguageProfileSet([small, big])
    # both contain the query trigrams; equal-cosine case falls to size
    tag = detect_language("aaa bbb aaa", profiles)
    assert tag.code in ("aa", "bb")
    prof_by_code = {p.code: p for p in profiles.profiles}
    assert prof_by_code["bb"].size > prof_by_code["aa"].size


def test_language_tag_validation():
    with pytest.raises(ValueError):
        LanguageTag(code="EN")
    with pytest.raises(ValueError):
        LanguageTag(code="en", confidence=1.5)


def test_override_bypasses_detection(profiles):
    state = SessionLanguageState(current=LanguageTag("en"))
    state.set_override("fr")
    detected = detect_language("Move forward 2 meters", profiles)
    resolved = resolve_session_language(state, detected)
    assert resolved.code == "fr"
    assert state.current.code == "fr"  # never mutated by detection
    assert state.source is LanguageSource.OVERRIDE


def test_override_set_tag_has_full_confidence():
    state = SessionLanguageState(current=LanguageTag("en"))
    state.set_override("ig")
    assert state.current.confidence == 1.0


def test_detected_language_updates_state_and_history(profiles):
    state = SessionLanguageState(current=LanguageTag("en"))
    before = len(state.history)
    detected = detect_language("Gehe 2 Meter geradeaus", profiles)
    resolved = resolve_session_language(state, detected)
    assert resolved.code == "de"
    assert state.current.code == "de"
    assert len(state.history) == before + 1


def test_clear_override_resumes_detection(profiles):
    state = SessionLanguageState(current=LanguageTag("en"))
    state.set_override("fr")
    state.clear_override()
    detected = detect_language("Move forward 2 meters", profiles)
    assert resolve_session_language(state, detected).code == "en"


def test_trigram_frequencies_sum_to_one():
    freqs = text_trigrams("move forward")
    assert abs(sum(freqs.values()) - 1.0) < 1e-12


def test_profile_roundtrip(tmp_path):
    profile = LanguageProfile.from_text("xx", "the quick brown fox jumps over the lazy dog")
    path = tmp_path / "xx.tsv"
    profile.save(path)
    loaded = LanguageProfile.from_file("xx", path)
    assert loaded.size == profile.size
    for tri, freq in profile.freqs.items():
        assert abs(loaded.freqs[tri] - freq) < 1e-6
