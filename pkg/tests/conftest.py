"""Shared generators and brute-force helpers for the test suite."""

from __future__ import annotations

import random

from hypothesis import strategies as st

import doxastic as dx

VAR_POOL = ("a", "b", "c", "d", "e", "f")


def alphabet_of(n: int) -> dx.Alphabet:
    return dx.Alphabet(VAR_POOL[:n])


def random_formula(rng: random.Random, alphabet: dx.Alphabet, max_depth: int) -> dx.Formula:
    if max_depth == 0 or rng.random() < 0.25:
        roll = rng.random()
        if roll < 0.9:
            return dx.Var(rng.choice(alphabet.vars))
        return dx.TRUE if roll < 0.95 else dx.FALSE
    shape = rng.randrange(5)
    if shape == 0:
        return dx.Not(random_formula(rng, alphabet, max_depth - 1))
    left = random_formula(rng, alphabet, max_depth - 1)
    right = random_formula(rng, alphabet, max_depth - 1)
    return (dx.And, dx.Or, dx.Implies, dx.Iff)[shape - 1](left, right)


def random_consistent_formula(
    rng: random.Random, alphabet: dx.Alphabet, max_depth: int
) -> dx.Formula:
    for _ in range(50):
        formula = random_formula(rng, alphabet, max_depth)
        if dx.is_consistent(formula, alphabet):
            return formula
    return dx.TRUE


def random_members(
    rng: random.Random,
    alphabet: dx.Alphabet,
    max_len: int,
    max_depth: int,
    consistent: bool = False,
) -> tuple[dx.Formula, ...]:
    build = random_consistent_formula if consistent else random_formula
    return tuple(
        build(rng, alphabet, rng.randint(0, max_depth))
        for _ in range(rng.randint(0, max_len))
    )


def random_level_order(rng, alphabet, max_len=5, max_depth=4) -> dx.LevelOrder:
    return dx.LevelOrder(alphabet, random_members(rng, alphabet, max_len, max_depth))


def random_lex_order(rng, alphabet, max_len=5, max_depth=4) -> dx.LexOrder:
    return dx.LexOrder(alphabet, random_members(rng, alphabet, max_len, max_depth))


def random_natural_order(
    rng, alphabet, max_len=5, max_depth=4, consistent=False
) -> dx.NaturalOrder:
    return dx.NaturalOrder(
        alphabet, random_members(rng, alphabet, max_len, max_depth, consistent)
    )


def random_explicit_order(rng, alphabet, max_rank=4) -> dx.ExplicitOrder:
    models = alphabet.models()
    ranks = {m: rng.randint(0, max_rank) for m in models}
    pairs = frozenset(
        (i, j) for i in models for j in models if ranks[i] <= ranks[j]
    )
    return dx.ExplicitOrder(alphabet, pairs)


def random_normalized_level_order(rng, alphabet, max_len=5, max_depth=4) -> dx.LevelOrder:
    return dx.normalize_level(random_level_order(rng, alphabet, max_len, max_depth))


def relation_rows(order: dx.AnyOrder) -> list[int]:
    """The full comparison relation as one bitmask row per model position."""
    models = order.alphabet.models()
    rows = []
    for i in models:
        row = 0
        for q, j in enumerate(models):
            if dx.leq(order, i, j):
                row |= 1 << q
        rows.append(row)
    return rows


def is_reflexive(rows: list[int]) -> bool:
    return all(row >> p & 1 for p, row in enumerate(rows))


def is_connected(rows: list[int]) -> bool:
    size = len(rows)
    return all(
        rows[p] >> q & 1 or rows[q] >> p & 1
        for p in range(size)
        for q in range(p + 1, size)
    )


def is_transitive(rows: list[int]) -> bool:
    for row in rows:
        reachable = 0
        remaining = row
        while remaining:
            low = remaining & -remaining
            reachable |= rows[low.bit_length() - 1]
            remaining ^= low
        if reachable & ~row:
            return False
    return True


def formula_strategy(alphabet: dx.Alphabet, max_leaves: int = 8):
    leaves = st.one_of(
        st.sampled_from([dx.Var(name) for name in alphabet.vars]),
        st.just(dx.TRUE),
        st.just(dx.FALSE),
    )

    def compound(children):
        return st.one_of(
            children.map(dx.Not),
            st.tuples(children, children).map(lambda pair: dx.And(*pair)),
            st.tuples(children, children).map(lambda pair: dx.Or(*pair)),
            st.tuples(children, children).map(lambda pair: dx.Implies(*pair)),
            st.tuples(children, children).map(lambda pair: dx.Iff(*pair)),
        )

    return st.recursive(leaves, compound, max_leaves=max_leaves)
