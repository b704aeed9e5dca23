"""Independent oracle implementations used only by the tests.

Each oracle deliberately re-derives its quantity through a different
algorithm/code path than the package (brute force, exhaustive search,
textbook formulas, or a third-party routine), so agreement is evidence,
not tautology.
"""

from __future__ import annotations

import heapq
import itertools
import math
from collections import Counter

import numpy as np
from scipy.spatial import ConvexHull


def dijkstra_cost(occupied: np.ndarray, start: tuple[int, int], goal: tuple[int, int]) -> float:
    """Plain Dijkstra over the 8-connected grid (no heuristic, no A* code)."""
    rows, cols = occupied.shape
    dist = {start: 0.0}
    heap = [(0.0, start)]
    seen = set()
    moves = [
        (-1, 0, 1.0), (1, 0, 1.0), (0, -1, 1.0), (0, 1, 1.0),
        (-1, -1, math.sqrt(2)), (-1, 1, math.sqrt(2)),
        (1, -1, math.sqrt(2)), (1, 1, math.sqrt(2)),
    ]
    while heap:
        d, node = heapq.heappop(heap)
        if node in seen:
            continue
        if node == goal:
            return d
        seen.add(node)
        r, c = node
        for dr, dc, w in moves:
            nr, nc = r + dr, c + dc
            if not (0 <= nr < rows and 0 <= nc < cols) or occupied[nr, nc]:
                continue
            if dr and dc and (occupied[r + dr, c] or occupied[r, c + dc]):
                continue
            nd = d + w
            if nd < dist.get((nr, nc), math.inf) - 1e-12:
                dist[(nr, nc)] = nd
                heapq.heappush(heap, (nd, (nr, nc)))
    return math.inf


def naive_bleu(ref: list[str], hyp: list[str], floor: float = 1e-9) -> float:
    """Quadratic-scan BLEU with the same floor smoothing, no Counters shared
    with the implementation."""
    total_log = 0.0
    for n in range(1, 5):
        hyp_ngrams = [tuple(hyp[i:i + n]) for i in range(len(hyp) - n + 1)]
        ref_ngrams = [tuple(ref[i:i + n]) for i in range(len(ref) - n + 1)]
        matched = 0
        remaining = list(ref_ngrams)
        for gram in hyp_ngrams:
            if gram in remaining:
                remaining.remove(gram)
                matched += 1
        p = matched / len(hyp_ngrams) if hyp_ngrams else 0.0
        total_log += 0.25 * math.log(max(p, floor))
    bp = min(1.0, math.exp(1.0 - len(ref) / len(hyp)))
    return bp * math.exp(total_log)


def _edit_distance(a: list[str], b: list[str]) -> int:
    m, n = len(a), len(b)
    table = [[0] * (n + 1) for _ in range(m + 1)]
    for i in range(m + 1):
        table[i][0] = i
    for j in range(n + 1):
        table[0][j] = j
    for i in range(1, m + 1):
        for j in range(1, n + 1):
            cost = 0 if a[i - 1] == b[j - 1] else 1
            table[i][j] = min(
                table[i - 1][j] + 1, table[i][j - 1] + 1, table[i - 1][j - 1] + cost
            )
    return table[m][n]


def exhaustive_ter(ref: list[str], hyp: list[str], max_shifts: int = 2) -> float:
    """Brute-force shift search: minimum over every shift sequence up to
    max_shifts of (shifts + edit distance), normalized by |ref|."""
    best = _edit_distance(hyp, ref)
    frontier = {tuple(hyp)}
    for depth in range(1, max_shifts + 1):
        next_frontier = set()
        for seq in frontier:
            seq = list(seq)
            n = len(seq)
            for start in range(n):
                for length in range(1, n - start + 1):
                    block = seq[start:start + length]
                    rest = seq[:start] + seq[start + length:]
                    for dest in range(len(rest) + 1):
                        if dest == start:
                            continue
                        shifted = rest[:dest] + block + rest[dest:]
                        next_frontier.add(tuple(shifted))
        for seq in next_frontier:
            best = min(best, depth + _edit_distance(list(seq), ref))
        frontier = next_frontier
    return best / len(ref)


def textbook_kalman(
    x0: np.ndarray,
    p0: np.ndarray,
    measurements: list[np.ndarray],
    dt: float,
    q: np.ndarray,
    r: np.ndarray,
) -> tuple[np.ndarray, np.ndarray]:
    """Plain predict/update with explicit matrix inverse (no Joseph form)."""
    f = np.eye(6)
    f[:3, 3:] = dt * np.eye(3)
    h = np.hstack([np.eye(3), np.zeros((3, 3))])
    x, p = x0.astype(float), p0.astype(float)
    for z in measurements:
        x = f @ x
        p = f @ p @ f.T + q
        s = h @ p @ h.T + r
        k = p @ h.T @ np.linalg.inv(s)
        x = x + k @ (np.asarray(z, dtype=float) - h @ x)
        p = (np.eye(6) - k @ h) @ p
    return x, p


def scipy_hull_cell_area(pixels: np.ndarray) -> float:
    """Padded hull area via scipy's qhull instead of the monotone chain."""
    px = np.asarray(pixels, dtype=float)
    corners = np.concatenate(
        [px + off for off in ((-0.5, -0.5), (-0.5, 0.5), (0.5, -0.5), (0.5, 0.5))]
    )
    return float(ConvexHull(corners).volume)  # 2-D "volume" is the area


def brute_force_target(candidates, lambda1: float, lambda2: float, sims: dict) -> int:
    """Exhaustive argmax over (i, j) pairs for the joint selection score.

    ``candidates``: list of (track_id, label, p_prime); ``sims``: label -> sim.
    Returns the winning index in the list (ties: lowest track_id, then order).
    """
    best_index = None
    best_key = None
    for index, (track_id, label, p_prime) in enumerate(candidates):
        log_p = math.log(p_prime) if p_prime > 0 else -math.inf
        score = lambda1 * log_p + lambda2 * sims[label]
        key = (-score, track_id, index)
        if best_key is None or key < best_key:
            best_key = key
            best_index = index
    return best_index


def iter_token_multisets(tokens: list[str]) -> Counter:
    return Counter(tokens)
