"""Translation-quality metrics: BLEU, TER, PER, semantic score, VeMatch.

BLEU uses up-to-4-gram clipped precisions with a 1e-9 floor before the
log (the geometric mean is undefined at zero otherwise) and the standard
brevity penalty. TER counts a greedy block-shift loop plus the final
Levenshtein distance, normalized by reference length. PER follows a
strict three-branch definition over extracted numeric parameters.
"""

from __future__ import annotations

import math
from collections import Counter
from typing import Callable, Protocol, Sequence

from babelbot.metrics.params import Unit, extract_params, params_match

BLEU_FLOOR = 1e-9
BLEU_MAX_N = 4
TER_MAX_SHIFTS = 10
TER_MAX_BLOCK = 10


class MetricError(Exception):
    pass


class EmptyInput(MetricError):
    pass


class EmptyReference(MetricError):
    pass


class ScorerUnavailable(MetricError):
    """The external semantic scorer could not produce a score."""


# --- BLEU ----------------------------------------------------------------


def _ngram_counts(tokens: Sequence[str], n: int) -> Counter:
    return Counter(tuple(tokens[i : i + n]) for i in range(len(tokens) - n + 1))


def bleu(
    ref_tokens: Sequence[str],
    hyp_tokens: Sequence[str],
    weights: Sequence[float] = (0.25, 0.25, 0.25, 0.25),
    max_n: int = BLEU_MAX_N,
    floor: float = BLEU_FLOOR,
) -> float:
    """BP * exp(sum_n w_n log p_n) with clipped modified n-gram precision."""
    if not ref_tokens or not hyp_tokens:
        raise EmptyInput("BLEU needs non-empty reference and hypothesis")
    log_sum = 0.0
    for n in range(1, max_n + 1):
        hyp_counts = _ngram_counts(hyp_tokens, n)
        ref_counts = _ngram_counts(ref_tokens, n)
        total = sum(hyp_counts.values())
        clipped = sum(min(count, ref_counts[gram]) for gram, count in hyp_counts.items())
        p_n = clipped / total if total else 0.0
        log_sum += weights[n - 1] * math.log(max(p_n, floor))
    bp = min(1.0, math.exp(1.0 - len(ref_tokens) / len(hyp_tokens)))
    return bp * math.exp(log_sum)


# --- TER -----------------------------------------------------------------


def levenshtein(a: Sequence[str], b: Sequence[str]) -> int:
    """Token-level edit distance (insertions, deletions, substitutions)."""
    if len(a) < len(b):
        a, b = b, a
    previous = list(range(len(b) + 1))
    for i, token_a in enumerate(a, start=1):
        current = [i]
        for j, token_b in enumerate(b, start=1):
            cost = 0 if token_a == token_b else 1
            current.append(min(previous[j] + 1, current[j - 1] + 1, previous[j - 1] + cost))
        previous = current
    return previous[-1]


def _apply_shift(tokens: list[str], start: int, length: int, dest: int) -> list[str]:
    block = tokens[start : start + length]
    rest = tokens[:start] + tokens[start + length :]
    return rest[:dest] + block + rest[dest:]


def _best_shift(
    hyp: list[str], ref: Sequence[str], current: int, max_block: int
) -> tuple[int, list[str] | None]:
    """Deterministic scan for the shift with the largest distance reduction."""
    best_dist = current
    best_seq: list[str] | None = None
    n = len(hyp)
    for start in range(n):
        for length in range(1, min(max_block, n - start) + 1):
            for dest in range(n - length + 1):
                if dest == start:
                    continue
                candidate = _apply_shift(hyp, start, length, dest)
                dist = levenshtein(candidate, ref)
                if dist < best_dist:
                    best_dist = dist
                    best_seq = candidate
    return best_dist, best_seq


def ter(
    ref_tokens: Sequence[str],
    hyp_tokens: Sequence[str],
    max_shifts: int = TER_MAX_SHIFTS,
    max_block: int = TER_MAX_BLOCK,
) -> float:
    """(shifts + final edit distance) / |ref|; can exceed 1."""
    if not ref_tokens:
        raise EmptyReference("TER needs a non-empty reference")
    hyp = list(hyp_tokens)
    ref = list(ref_tokens)
    shifts = 0
    distance = levenshtein(hyp, ref)
    while shifts < max_shifts and distance > 0 and hyp:
        new_dist, shifted = _best_shift(hyp, ref, distance, max_block)
        # a shift costs one edit; only take it if it strictly pays for itself
        if shifted is None or new_dist + 1 >= distance:
            break
        hyp = shifted
        distance = new_dist
        shifts += 1
    return (shifts + distance) / len(ref)


# --- PER -----------------------------------------------------------------


def action_params(actions: Sequence[str]) -> list[tuple[float, Unit]]:
    params: list[tuple[float, Unit]] = []
    for action in actions:
        params.extend(extract_params(action))
    return params


def per(ref_actions: Sequence[str], hyp_actions: Sequence[str]) -> float:
    """Parameter error rate over extracted (value, unit) pairs.

    Branches: mismatch fraction over the first min(|ref|,|hyp|) positions
    normalized by |ref| when the reference has parameters; 1 when only the
    hypothesis has parameters; 0 when neither does.
    """
    ref_params = action_params(ref_actions)
    hyp_params = action_params(hyp_actions)
    if ref_params:
        k = min(len(ref_params), len(hyp_params))
        mismatches = sum(
            0 if params_match(ref_params[i], hyp_params[i]) else 1 for i in range(k)
        )
        return mismatches / len(ref_params)
    if hyp_params:
        return 1.0
    return 0.0


def s_per(ref_actions: Sequence[str], hyp_actions: Sequence[str]) -> float:
    """1 - PER, floored by a spurious/missing parameter-count penalty.

    The count penalty keeps a hypothesis that dumps extra numbers (which
    strict PER ignores past min(|ref|,|hyp|)) from scoring 1.
    """
    ref_params = action_params(ref_actions)
    hyp_params = action_params(hyp_actions)
    base = 1.0 - per(ref_actions, hyp_actions)
    gap = abs(len(hyp_params) - len(ref_params))
    penalty = min(1.0, gap / max(1, len(ref_params)))
    return min(base, 1.0 - penalty)


# --- semantic score --------------------------------------------------------


class SemanticTextScorer(Protocol):
    """External semantic-alignment scorer contract (embedding F1).

    Implementations must compute precision as the mean over hypothesis
    tokens of the max cosine similarity to any reference token, recall
    symmetrically, and return their harmonic mean.
    """

    def score_texts(self, ref_text: str, hyp_text: str) -> float: ...


def _token_bag(actions: Sequence[str]) -> Counter:
    bag: Counter = Counter()
    for action in actions:
        bag.update(action.casefold().split())
    return bag


def semantic_score(
    ref_actions: Sequence[str],
    hyp_actions: Sequence[str],
    scorer: SemanticTextScorer | None = None,
) -> float:
    """Token-level F1 over canonical action strings, or the plug-in scorer."""
    if scorer is not None:
        return scorer.score_texts(" ".join(ref_actions), " ".join(hyp_actions))
    ref_bag = _token_bag(ref_actions)
    hyp_bag = _token_bag(hyp_actions)
    if not ref_bag and not hyp_bag:
        return 1.0
    if not ref_bag or not hyp_bag:
        return 0.0
    overlap = sum((ref_bag & hyp_bag).values())
    return 2.0 * overlap / (sum(ref_bag.values()) + sum(hyp_bag.values()))


class GreedyMatchingScorer:
    """Reference implementation of the external-scorer contract.

    Takes any token-embedding function; greedy max-cosine matching in both
    directions, harmonic mean of the two. Intended for integration use
    with a real embedding backend.
    """

    def __init__(self, embed: Callable[[str], Sequence[float]]):
        self._embed = embed

    @staticmethod
    def _cos(a: Sequence[float], b: Sequence[float]) -> float:
        dot = sum(x * y for x, y in zip(a, b))
        na = math.sqrt(sum(x * x for x in a))
        nb = math.sqrt(sum(y * y for y in b))
        if na == 0 or nb == 0:
            return 0.0
        return dot / (na * nb)

    def score_texts(self, ref_text: str, hyp_text: str) -> float:
        ref_tokens = ref_text.casefold().split()
        hyp_tokens = hyp_text.casefold().split()
        if not ref_tokens or not hyp_tokens:
            raise ScorerUnavailable("cannot embed empty token lists")
        ref_vecs = [self._embed(t) for t in ref_tokens]
        hyp_vecs = [self._embed(t) for t in hyp_tokens]
        precision = sum(max(self._cos(h, r) for r in ref_vecs) for h in hyp_vecs) / len(hyp_vecs)
        recall = sum(max(self._cos(r, h) for h in hyp_vecs) for r in ref_vecs) / len(ref_vecs)
        if precision + recall == 0:
            return 0.0
        return 2.0 * precision * recall / (precision + recall)


# --- VeMatch ---------------------------------------------------------------


def vematch(ref_tokens: Sequence[str], hyp_tokens: Sequence[str]) -> int:
    """1 iff the casefolded head tokens agree."""
    if not ref_tokens or not hyp_tokens:
        raise EmptyInput("VeMatch needs non-empty token lists")
    return int(ref_tokens[0].casefold() == hyp_tokens[0].casefold())
