"""Independent oracles and random game generators shared by the test modules."""

import itertools
import random
from fractions import Fraction

from selgame.engine import Game
from selgame.selections import (
    ArgmaxOrder,
    ArgminOrder,
    Fix,
    Lex,
    NonFix,
    Prefer,
    SubMax,
)

ALPHABET = ("A", "B", "C")


def brute_force_nash(move_sets, payoffs):
    """Textbook pure Nash: each player's payoff equals the best payoff over
    their own deviations.  Written without the library's solvers."""
    result = []
    for x in itertools.product(*move_sets):
        ok = True
        for i, moves in enumerate(move_sets):
            best = max(payoffs[x[:i] + (m,) + x[i + 1 :]][i] for m in moves)
            if payoffs[x][i] != best:
                ok = False
        if ok:
            result.append(x)
    return result


def random_pairs(rng, alphabet, total=False):
    perm = list(alphabet)
    rng.shuffle(perm)
    chain = list(zip(perm, perm[1:]))
    if total:
        return tuple(chain)
    # random sub-relation of a linear order is acyclic
    everything = [(perm[i], perm[j]) for i in range(len(perm)) for j in range(i + 1, len(perm))]
    return tuple(p for p in everything if rng.random() < 0.5)


def random_spec(rng, alphabet):
    kind = rng.randrange(8)
    if kind == 0:
        return ArgmaxOrder(random_pairs(rng, alphabet))
    if kind == 1:
        return ArgminOrder(random_pairs(rng, alphabet))
    if kind == 2:
        return Fix()
    if kind == 3:
        return NonFix()
    if kind == 4:
        return SubMax(random_pairs(rng, alphabet, total=True), chain=True)
    if kind == 5:
        return Lex(Fix(), ArgmaxOrder(random_pairs(rng, alphabet)))
    if kind == 6:
        targets = tuple(a for a in alphabet if rng.random() < 0.5) or (alphabet[0],)
        return Lex(ArgmaxOrder(random_pairs(rng, alphabet)), Prefer(targets))
    return Lex(NonFix(), SubMax(random_pairs(rng, alphabet, total=True), chain=True))


def random_symbolic_game(rng, n_players=3):
    k = rng.choice([2, 3])
    alphabet = ALPHABET[:k]
    move_sets = [alphabet] * n_players
    table = {x: rng.choice(alphabet) for x in itertools.product(*move_sets)}
    specs = [random_spec(rng, alphabet) for _ in range(n_players)]
    players = [f"J{i + 1}" for i in range(n_players)]
    return Game.from_specs("random", players, move_sets, table, specs, outcomes=alphabet)


def random_payoffs(rng, move_sets, low=0, high=3):
    n = len(move_sets)
    return {
        x: tuple(Fraction(rng.randint(low, high)) for _ in range(n))
        for x in itertools.product(*move_sets)
    }


def random_vector_setup(rng):
    n = rng.choice([2, 3])
    move_sets = [tuple(f"m{j}" for j in range(rng.choice([1, 2, 3]))) for _ in range(n)]
    return [f"P{i + 1}" for i in range(n)], move_sets, random_payoffs(rng, move_sets)


def seeded(seed):
    return random.Random(seed)
