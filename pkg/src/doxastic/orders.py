"""Connected preorders over propositional models, in four representations.

An order says which models (scenarios) are at least as plausible as which
others.  The four interchangeable encodings are: an explicit pair set, a
sequence of level formulas (most plausible described first), and histories
of lexicographic or natural revisions (most recent revision first).  The
`leq_*` functions implement each representation's inductive comparison
directly and are the semantic ground truth for the whole package.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Union

from .errors import AlphabetMismatchError, NotAPreorderError, UndeclaredVariableError
from .formula import (
    Alphabet,
    Formula,
    Model,
    bit_positions,
    evaluate,
    truth_bitmap,
    variables,
)

_UNRANKED = 1 << 62  # sentinel rank for models below every level formula


def _check_formulas(alphabet: Alphabet, formulas) -> tuple[Formula, ...]:
    formulas = tuple(formulas)
    declared = set(alphabet.vars)
    for f in formulas:
        stray = variables(f) - declared
        if stray:
            raise UndeclaredVariableError(sorted(stray)[0])
    return formulas


@dataclass(frozen=True)
class ExplicitOrder:
    """A preorder written out as the set of pairs (i, j) with i <= j."""

    alphabet: Alphabet
    pairs: frozenset[tuple[Model, Model]]

    def __post_init__(self):
        object.__setattr__(self, "pairs", frozenset(self.pairs))
        width = len(self.alphabet)
        for i, j in self.pairs:
            if i.width != width or j.width != width:
                raise AlphabetMismatchError(
                    f"pair ({i}, {j}) does not fit a {width}-variable alphabet"
                )


@dataclass(frozen=True)
class LevelOrder:
    """Plausibility levels: members of the first formula's class come first.

    The stored sequence is unconstrained.  A model's rank is the least index
    of a member it satisfies; models satisfying no member share an implicit
    bottom class.  `normalized` asserts mutually exclusive, individually
    consistent members covering the whole model space.
    """

    alphabet: Alphabet
    levels: tuple[Formula, ...]
    normalized: bool = False

    def __post_init__(self):
        object.__setattr__(self, "levels", _check_formulas(self.alphabet, self.levels))


@dataclass(frozen=True)
class LexOrder:
    """History of lexicographic revisions, most recent first."""

    alphabet: Alphabet
    history: tuple[Formula, ...]

    def __post_init__(self):
        object.__setattr__(self, "history", _check_formulas(self.alphabet, self.history))


@dataclass(frozen=True)
class NaturalOrder:
    """History of natural revisions, most recent first."""

    alphabet: Alphabet
    history: tuple[Formula, ...]

    def __post_init__(self):
        object.__setattr__(self, "history", _check_formulas(self.alphabet, self.history))


AnyOrder = Union[ExplicitOrder, LevelOrder, LexOrder, NaturalOrder]


@dataclass(frozen=True)
class ClassPartition:
    """Equivalence classes of an order, most plausible class first."""

    alphabet: Alphabet
    classes: tuple[frozenset[Model], ...]

    def __post_init__(self):
        object.__setattr__(self, "classes", tuple(frozenset(c) for c in self.classes))
        width = len(self.alphabet)
        total = 0
        union: set[Model] = set()
        for cls in self.classes:
            if not cls:
                raise ValueError("empty equivalence class")
            for m in cls:
                if m.width != width:
                    raise AlphabetMismatchError(
                        f"model {m} does not fit a {width}-variable alphabet"
                    )
            total += len(cls)
            union.update(cls)
        if len(union) != total:
            raise ValueError("equivalence classes overlap")
        if total != (1 << width):
            raise ValueError("equivalence classes do not cover the model space")

    def rank_of(self, model: Model) -> int:
        for k, cls in enumerate(self.classes):
            if model in cls:
                return k
        raise KeyError(str(model))


@dataclass(frozen=True)
class Violation:
    """One witnessed failure of the connected-preorder axioms."""

    kind: str  # "reflexivity" | "transitivity" | "connectedness"
    models: tuple[Model, ...]

    def __str__(self) -> str:
        shown = ", ".join(str(m) for m in self.models)
        return f"{self.kind} violation at ({shown})"


def kind_of(order: AnyOrder) -> str:
    if isinstance(order, ExplicitOrder):
        return "explicit"
    if isinstance(order, LevelOrder):
        return "level"
    if isinstance(order, LexOrder):
        return "lexicographic"
    if isinstance(order, NaturalOrder):
        return "natural"
    raise TypeError(f"not an order: {order!r}")


def member_formulas(order: AnyOrder) -> tuple[Formula, ...]:
    """The formula sequence of an order; empty for explicit orders."""
    if isinstance(order, LevelOrder):
        return order.levels
    if isinstance(order, (LexOrder, NaturalOrder)):
        return order.history
    if isinstance(order, ExplicitOrder):
        return ()
    raise TypeError(f"not an order: {order!r}")


def _require_member(order: AnyOrder, model: Model) -> None:
    if model.width != len(order.alphabet):
        raise AlphabetMismatchError(
            f"model {model} does not fit a {len(order.alphabet)}-variable alphabet"
        )


# --- comparison relations ----------------------------------------------------


def leq_explicit(order: ExplicitOrder, i: Model, j: Model) -> bool:
    """i <= j exactly when the pair is listed."""
    _require_member(order, i)
    _require_member(order, j)
    return (i, j) in order.pairs


def _pair_truths(members, alphabet: Alphabet, i: Model, j: Model):
    """Whether each member formula holds of i and of j.  Uses the shared
    bitmaps when the model space is enumerable, plain evaluation otherwise
    (level and lexicographic comparisons never need enumeration)."""
    if len(alphabet) <= alphabet.cap:
        pos_i, pos_j = i.position, j.position
        for member in members:
            sat = truth_bitmap(member, alphabet)
            yield bool(sat >> pos_i & 1), bool(sat >> pos_j & 1)
    else:
        for member in members:
            yield evaluate(member, i, alphabet), evaluate(member, j, alphabet)


def leq_level(order: LevelOrder, i: Model, j: Model) -> bool:
    """Compare least satisfied member indexes; unmatched models share the
    implicit bottom class."""
    _require_member(order, i)
    _require_member(order, j)
    rank_i = rank_j = _UNRANKED
    for k, (sat_i, sat_j) in enumerate(_pair_truths(order.levels, order.alphabet, i, j)):
        if sat_i and rank_i == _UNRANKED:
            rank_i = k
        if sat_j and rank_j == _UNRANKED:
            rank_j = k
        if rank_j != _UNRANKED:
            break  # later members cannot change either least index
    return rank_i <= rank_j


def leq_lex(order: LexOrder, i: Model, j: Model) -> bool:
    """The most recent revision dominates; earlier ones only break ties."""
    _require_member(order, i)
    _require_member(order, j)
    for sat_i, sat_j in _pair_truths(order.history, order.alphabet, i, j):
        if sat_i and not sat_j:
            return True
        if sat_j and not sat_i:
            return False
    return True  # empty or fully tied history: everything compares <=


def leq_natural(order: NaturalOrder, i: Model, j: Model) -> bool:
    """Inductive comparison: the most recent revision promotes the tail-minimal
    models of its formula to the top; everything else keeps the tail order."""
    order.alphabet.require_enumerable()
    _require_member(order, i)
    _require_member(order, j)
    promoted = _promotion_masks(order)
    return _natural_leq_from(promoted, 0, i.position, j.position)


def _natural_leq_from(promoted: tuple[int, ...], step: int, pos_i: int, pos_j: int) -> bool:
    if step == len(promoted):
        return True  # empty history compares everything both ways
    mask = promoted[step]
    if mask >> pos_i & 1:
        return True  # i was promoted by this revision
    # Otherwise i <= j held before this revision and j was not promoted by it.
    return _natural_leq_from(promoted, step + 1, pos_i, pos_j) and not (mask >> pos_j & 1)


@lru_cache(maxsize=1024)
def _promotion_masks(order: NaturalOrder) -> tuple[int, ...]:
    """Memo table for the natural-order recursion.

    Entry t is the set (bitmask over model positions) promoted by history
    formula t: its models that the tail order puts at or below every other
    model of the formula.  The memo is keyed by (history suffix, model) in
    effect: `first_seen[p]` is the first suffix position that promotes the
    model at position p, which fully determines the tail comparisons.
    """
    alphabet = order.alphabet
    alphabet.require_enumerable()
    size = 1 << len(alphabet)
    first_seen = [_UNRANKED] * size
    masks = [0] * len(order.history)
    for t in range(len(order.history) - 1, -1, -1):
        sat = truth_bitmap(order.history[t], alphabet)
        if sat == 0:
            continue  # inconsistent revisions are inert
        best = min(first_seen[p] for p in bit_positions(sat))
        promoted = 0
        for p in bit_positions(sat):
            if first_seen[p] == best:
                promoted |= 1 << p
                first_seen[p] = t
        masks[t] = promoted
    return tuple(masks)


def leq(order: AnyOrder, i: Model, j: Model) -> bool:
    """Comparison under whichever representation `order` uses."""
    if isinstance(order, ExplicitOrder):
        return leq_explicit(order, i, j)
    if isinstance(order, LevelOrder):
        return leq_level(order, i, j)
    if isinstance(order, LexOrder):
        return leq_lex(order, i, j)
    if isinstance(order, NaturalOrder):
        return leq_natural(order, i, j)
    raise TypeError(f"not an order: {order!r}")


# --- equivalence classes ------------------------------------------------------


def classes_of(order: AnyOrder) -> ClassPartition:
    """Equivalence classes in plausibility order: the first class holds the
    models minimal under the comparison, the next the minimal among the
    rest, and so on.  Computed per representation; `classes_by_stripping`
    is the reference construction it must (and is tested to) agree with."""
    alphabet = order.alphabet
    alphabet.require_enumerable()
    if isinstance(order, ExplicitOrder):
        violations = validate_explicit(order)
        if violations:
            raise NotAPreorderError(violations)
        return classes_by_stripping(alphabet, lambda i, j: leq_explicit(order, i, j))
    if isinstance(order, LevelOrder):
        maps = [truth_bitmap(f, alphabet) for f in order.levels]
        keys = [
            next((k for k, sat in enumerate(maps) if sat >> p & 1), _UNRANKED)
            for p in range(1 << len(alphabet))
        ]
    elif isinstance(order, LexOrder):
        maps = [truth_bitmap(f, alphabet) for f in order.history]
        # Satisfaction vectors, negated so that ascending sort order is
        # plausibility order (satisfying an earlier formula ranks higher).
        keys = [
            tuple(not (m >> p & 1) for m in maps) for p in range(1 << len(alphabet))
        ]
    elif isinstance(order, NaturalOrder):
        promoted = _promotion_masks(order)
        keys = []
        for p in range(1 << len(alphabet)):
            keys.append(
                next((t for t, mask in enumerate(promoted) if mask >> p & 1), _UNRANKED)
            )
    else:
        raise TypeError(f"not an order: {order!r}")
    buckets: dict = {}
    for p, key in enumerate(keys):
        buckets.setdefault(key, set()).add(alphabet.model_at(p))
    classes = tuple(frozenset(buckets[key]) for key in sorted(buckets))
    return ClassPartition(alphabet, classes)


def classes_by_stripping(
    alphabet: Alphabet, relation: Callable[[Model, Model], bool]
) -> ClassPartition:
    """Reference construction straight from the definition: peel off the
    minimal models among what remains, one class at a time."""
    remaining = alphabet.models()
    classes = []
    while remaining:
        minimal = [i for i in remaining if all(relation(i, j) for j in remaining)]
        if not minimal:
            raise NotAPreorderError(
                [Violation("connectedness", (remaining[0], remaining[-1]))]
            )
        classes.append(frozenset(minimal))
        dropped = set(minimal)
        remaining = [m for m in remaining if m not in dropped]
    return ClassPartition(alphabet, tuple(classes))


def equivalent(first: AnyOrder, second: AnyOrder) -> bool:
    """True when both orders compare every pair of models identically."""
    if first.alphabet.vars != second.alphabet.vars:
        raise AlphabetMismatchError(
            "orders over different alphabets cannot be compared"
        )
    return classes_of(first).classes == classes_of(second).classes


# --- explicit-order validation -------------------------------------------------


def validate_explicit(order: ExplicitOrder) -> list[Violation]:
    """All reflexivity, transitivity, and connectedness failures, in model order."""
    alphabet = order.alphabet
    alphabet.require_enumerable()
    size = 1 << len(alphabet)
    rows = [0] * size
    for i, j in order.pairs:
        rows[i.position] |= 1 << j.position

    violations = []
    for p in range(size):
        if not rows[p] >> p & 1:
            violations.append(Violation("reflexivity", (alphabet.model_at(p),)))
    for p in range(size):
        for q in range(p + 1, size):
            if not (rows[p] >> q & 1 or rows[q] >> p & 1):
                violations.append(
                    Violation(
                        "connectedness", (alphabet.model_at(p), alphabet.model_at(q))
                    )
                )
    for p in range(size):
        reachable = 0
        for q in bit_positions(rows[p]):
            reachable |= rows[q]
        missing = reachable & ~rows[p]
        if not missing:
            continue
        for q in bit_positions(rows[p]):
            for r in bit_positions(rows[q] & missing):
                violations.append(
                    Violation(
                        "transitivity",
                        (
                            alphabet.model_at(p),
                            alphabet.model_at(q),
                            alphabet.model_at(r),
                        ),
                    )
                )
    return violations
