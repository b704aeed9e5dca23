#!/usr/bin/env python3
"""Detect the language of robot commands and watch the session state follow.

The detector compares character-trigram frequencies against the bundled
profiles (ten languages, four scripts). An explicit override pins the
session language until cleared, no matter what detection says.
"""

from babelbot.langid import (
    LanguageProfileSet,
    LanguageTag,
    SessionLanguageState,
    detect_language,
    resolve_session_language,
)

profiles = LanguageProfileSet.bundled()
print(f"profiles loaded: {', '.join(profiles.codes())}\n")

commands = [
    "Move forward 2 meters and then turn right.",
    "Fahre zwei Meter geradeaus und dreh dich dann um.",
    "Ve a la cocina y espera allí un momento.",
    "Сделай фото своего окружения.",
    "导航到检测到的椅子。",
    "انتقل إلى المطبخ من فضلك.",
    "Abeg waka go front small small.",
]

print("-- detection --")
for text in commands:
    tag = detect_language(text, profiles)
    print(f"  {tag.code:>4} ({tag.script.value:<10} conf {tag.confidence:.2f})  {text}")

print("\n-- session state with an override --")
state = SessionLanguageState(current=LanguageTag("en"))
detected = detect_language("Gehe zwei Meter geradeaus.", profiles)
print("detected:", resolve_session_language(state, detected).code)

state.set_override("fr")
detected = detect_language("Move forward 2 meters.", profiles)
print("override active, English input still resolves to:",
      resolve_session_language(state, detected).code)

state.clear_override()
detected = detect_language("Move forward 2 meters.", profiles)
print("override cleared, back to:", resolve_session_language(state, detected).code)
