"""babelbot: a multilingual natural-language-to-robot-action workbench.

The package turns free-form commands in any language into typed action
plans, gates multistep plans behind human confirmation, grounds object
references with uncertainty-aware visuo-lingual scoring, executes plans
on a simulated differential-drive robot, and evaluates the whole loop.

Subpackages
-----------
langid      character-trigram language identification and session state
engine      prompt construction, LLM client, action-plan parsing, confirmation
perception  mask scoring, 3D localization, Kalman tracking, target selection
simulator   occupancy-grid world, unicycle kinematics, A* planning, rendering
executor    action-to-twist compilation and plan execution with tracing
metrics     IPA / TSR / ART and the translation-QC suite (BLEU, TER, PER, ...)
gateway     session service, JSONL persistence, HTTP/WS API, benchmark runner
"""

__version__ = "0.1.0"

from babelbot.langid import LanguageTag, detect_language
from babelbot.engine import ActionPlan, parse_action_lines

__all__ = [
    "LanguageTag",
    "detect_language",
    "ActionPlan",
    "parse_action_lines",
    "__version__",
]
