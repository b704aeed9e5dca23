#!/usr/bin/env python3
"""From free text to a typed action plan, and through the confirmation gate.

The mock language model answers with numbered action lines; the parser
turns them into typed primitives; multistep plans wait for a human
verdict classified by the per-language template lexicon.
"""

from babelbot.engine import (
    FixtureCorpus,
    Instruction,
    TemplateLexicon,
    classify_confirmation,
    format_plan,
    mock_complete,
    parse_action_lines,
    plan_requires_confirmation,
)
from babelbot.langid import LanguageTag

corpus = FixtureCorpus.bundled()
lexicon = TemplateLexicon.bundled()

instruction = Instruction(
    text="Move forward 2 meters at 0.2 m/s and then turn right 90 degrees.",
    language=LanguageTag("en"),
    issued_at=0,
)
interpretation = mock_complete(instruction, corpus)
print("raw completion:")
print(interpretation.raw_reply, "\n")

plan = parse_action_lines(interpretation.plan_lines, language=instruction.language)
print("typed primitives:")
for action in plan.actions:
    print("  ", action)
print("canonical round-trip:", format_plan(plan))
print("requires confirmation:", plan.requires_confirmation, "\n")

replies = [
    ("en", "that's correct, proceed with execution"),
    ("en", "That's correct, but do not execute the plans!"),
    ("de", "ja, führe den plan aus"),
    ("ru", "нет, отмени план"),
    ("zh", "是的，执行计划"),
]
print("confirmation classifier:")
for code, reply in replies:
    decision = classify_confirmation(reply, LanguageTag(code), lexicon)
    verdict = "EXECUTE" if decision.value else "DISCARD"
    print(f"  [{code}] {reply!r:<45} -> {verdict} (score {decision.score:+.0f})")

# a single actionable step never needs the gate
single = parse_action_lines(["Action 1: Navigate to the kitchen at 0.5 m/s."])
print("\nsingle-step plan needs confirmation:", single.requires_confirmation)
