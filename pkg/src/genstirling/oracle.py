"""Brute-force enumeration of weighted distributions of 1..n into k ordered lists.

Elements are inserted in increasing order. Each element either opens a new
list (weight 1), goes right after an already placed element (weight a), or
becomes the new head of an existing list (weight b). New lists are always
opened in the next free slot, so lists are effectively unlabeled and every
distribution corresponds to exactly one insertion history.
"""

from __future__ import annotations

import logging
from collections import Counter
from dataclasses import dataclass
from enum import Enum
from typing import Any, Dict, Iterator, List, Optional, Tuple

from .errors import BadRange, CapExceeded
from .polycore import Monomial, MultiPoly

logger = logging.getLogger(__name__)

# largest n enumerated unless the caller passes its own cap
DEFAULT_CAP = 9


class WeightLetter(str, Enum):
    ONE = "one"
    ALPHA = "alpha"
    BETA = "beta"


@dataclass(frozen=True)
class Distribution:
    lists: Tuple[Tuple[int, ...], ...]
    weights: Tuple[WeightLetter, ...]  # weights[i - 1] belongs to element i

    @property
    def n(self) -> int:
        return len(self.weights)

    @property
    def k(self) -> int:
        return len(self.lists)

    def is_valid(self) -> bool:
        placed = sorted(e for lst in self.lists for e in lst)
        if placed != list(range(1, self.n + 1)) or any(not lst for lst in self.lists):
            return False
        return sum(1 for w in self.weights if w is WeightLetter.ONE) == self.k


@dataclass(frozen=True)
class WeightedOutcome:
    distribution: Distribution
    weight: Monomial

    def weight_poly(self) -> MultiPoly:
        return MultiPoly(((self.weight, 1),))

    def to_json(self) -> Dict[str, Any]:
        return {
            "lists": [list(lst) for lst in self.distribution.lists],
            "weights": [w.value for w in self.distribution.weights],
            "weight": self.weight_poly().to_json(),
        }


def _check(n: int, k: int, cap: Optional[int]) -> None:
    if n < 0 or k < 0:
        raise BadRange(f"Indices must be non-negative, got n={n}, k={k}")
    limit = DEFAULT_CAP if cap is None else cap
    if n > limit:
        raise CapExceeded(f"n={n} exceeds the oracle cap {limit}")


def _histories(n: int, k: int, prune: bool) -> Iterator[Tuple[Tuple[Tuple[int, ...], ...], Tuple[WeightLetter, ...]]]:
    lists: List[List[int]] = []
    letters: List[WeightLetter] = []

    def place(element: int) -> Iterator[Tuple[Tuple[Tuple[int, ...], ...], Tuple[WeightLetter, ...]]]:
        if element > n:
            if len(lists) == k:
                yield tuple(tuple(lst) for lst in lists), tuple(letters)
            return
        if len(lists) < k:
            lists.append([element])
            letters.append(WeightLetter.ONE)
            yield from place(element + 1)
            lists.pop()
            letters.pop()
        # not opening now: the elements left after this one must still fill the missing lists
        if prune and n - element < k - len(lists):
            return
        for lst in lists:
            for pos in range(len(lst)):
                lst.insert(pos + 1, element)
                letters.append(WeightLetter.ALPHA)
                yield from place(element + 1)
                lst.pop(pos + 1)
                letters.pop()
        for lst in lists:
            lst.insert(0, element)
            letters.append(WeightLetter.BETA)
            yield from place(element + 1)
            lst.pop(0)
            letters.pop()

    yield from place(1)


def _letters_monomial(letters: Tuple[WeightLetter, ...]) -> Monomial:
    a = sum(1 for w in letters if w is WeightLetter.ALPHA)
    b = sum(1 for w in letters if w is WeightLetter.BETA)
    return (a, b, 0)


def enumerate_outcomes(n: int, k: int, cap: Optional[int] = None, prune: bool = True) -> List[WeightedOutcome]:
    """Every distribution of 1..n into k non-empty ordered lists, with its weight."""
    _check(n, k, cap)
    outcomes = [
        WeightedOutcome(Distribution(lists, letters), _letters_monomial(letters))
        for lists, letters in _histories(n, k, prune)
    ]
    logger.debug("oracle (%d, %d): %d outcomes", n, k, len(outcomes))
    return outcomes


def enumerate_weight(n: int, k: int, cap: Optional[int] = None, prune: bool = True) -> MultiPoly:
    """Total weight of all distributions, one leaf per insertion history."""
    _check(n, k, cap)
    counts: Counter = Counter()

    def place(element: int, opened: int, a_deg: int, b_deg: int) -> None:
        if element > n:
            if opened == k:
                counts[(a_deg, b_deg, 0)] += 1
            return
        if opened < k:
            place(element + 1, opened + 1, a_deg, b_deg)
        if prune and n - element < k - opened:
            return
        for _ in range(element - 1):
            place(element + 1, opened, a_deg + 1, b_deg)
        for _ in range(opened):
            place(element + 1, opened, a_deg, b_deg + 1)

    place(1, 0, 0, 0)
    logger.debug("oracle (%d, %d): %d histories", n, k, sum(counts.values()))
    return MultiPoly.from_dict(dict(counts))


def enumerate_labeled_weight(n: int, k: int, nonempty_only: bool = False, cap: Optional[int] = None) -> MultiPoly:
    """Total weight of the auxiliary labeled model behind the explicit formula.

    k labeled lists that may stay empty; the first element put into a list
    weighs b, a head insertion weighs b, any other insertion weighs a. With
    ``nonempty_only`` only distributions leaving no list empty are counted.
    """
    _check(n, k, cap)
    counts: Counter = Counter()
    sizes = [0] * k

    def place(element: int, a_deg: int, b_deg: int) -> None:
        empties = sizes.count(0)
        if element > n:
            if not nonempty_only or empties == 0:
                counts[(a_deg, b_deg, 0)] += 1
            return
        if nonempty_only and empties > n - element + 1:
            return
        for slot in range(k):
            existing = sizes[slot]
            sizes[slot] += 1
            # first element of an empty list, or new head of a non-empty one
            place(element + 1, a_deg, b_deg + 1)
            for _ in range(existing):
                place(element + 1, a_deg + 1, b_deg)
            sizes[slot] -= 1

    place(1, 0, 0)
    return MultiPoly.from_dict(dict(counts))
