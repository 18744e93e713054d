"""Shared fixtures and random program generators.

The randomized suites draw from fixed seeds; every failure message carries
the case seed so a run can be replayed exactly.
"""

from __future__ import annotations

import random

import pytest

from ndlp import DetRule, ground, make_ground_program, parse_program
from ndlp.corpus import corpus_text
from ndlp.grounder import GroundProgram
from ndlp.syntax import Atom, Literal, Rule, canonicalize


def gp_from(text: str, horizon: int | None = None) -> GroundProgram:
    return ground(parse_program(text), horizon=horizon)


@pytest.fixture
def teaching() -> GroundProgram:
    return gp_from(corpus_text("teaching.ndlp"))


@pytest.fixture
def teaching2() -> GroundProgram:
    return gp_from(corpus_text("teaching2.ndlp"))


@pytest.fixture
def wf_chain() -> GroundProgram:
    return gp_from(corpus_text("wf_chain.ndlp"))


# ---------------------------------------------------------------------------
# Random ground NdAtom programs
# ---------------------------------------------------------------------------

def _nd_pool(rng: random.Random, n_atoms: int, n_nd: int):
    """A pool of distinct ground NdAtoms over 0-ary predicates p0..p{n-1}."""
    plain = [Atom(pred=f"p{i}") for i in range(n_atoms)]
    pool = set()
    guard = 0
    while len(pool) < n_nd and guard < 200:
        guard += 1
        size = rng.choice((1, 1, 2))
        pool.add(canonicalize(rng.sample(plain, size)))
    return sorted(pool, key=lambda a: a.key)


def random_ground_program(
    seed: int,
    max_nd: int = 6,
    max_rules: int = 8,
    max_body: int = 3,
    neg_prob: float = 0.4,
    n_atoms: int = 6,
) -> GroundProgram:
    """A random ground program over a small NdAtom pool.

    `neg_prob=0` yields negation-free programs. The restricted base is at
    most `max_nd` NdAtoms.
    """
    rng = random.Random(seed)
    pool = _nd_pool(rng, n_atoms, rng.randint(2, max_nd))
    rules = []
    for _ in range(rng.randint(1, max_rules)):
        head = rng.choice(pool)
        body = []
        for nd in rng.sample(pool, min(len(pool), rng.randint(0, max_body))):
            body.append(Literal(atom=nd, negated=rng.random() < neg_prob))
        rules.append(Rule(head=head, body=tuple(body)))
    return make_ground_program(rules)


def random_interpretations(seed: int, gp: GroundProgram, nested: bool = False):
    """One random subset of the base, or a nested pair when asked."""
    rng = random.Random(seed)
    base = list(gp.base)
    small = frozenset(a for a in base if rng.random() < 0.5)
    if not nested:
        return small
    big = small | frozenset(a for a in base if rng.random() < 0.5)
    return small, big


# ---------------------------------------------------------------------------
# Random deterministic programs (for the subsumption suites)
# ---------------------------------------------------------------------------

def random_det_program(
    seed: int,
    n_atoms: int = 8,
    max_rules: int = 12,
    max_body: int = 3,
    neg_prob: float = 0.4,
) -> list[DetRule]:
    rng = random.Random(seed)
    atoms = [f"d{i}" for i in range(rng.randint(2, n_atoms))]
    rules = []
    for _ in range(rng.randint(1, max_rules)):
        head = rng.choice(atoms)
        pos, neg = [], []
        for atom in rng.sample(atoms, min(len(atoms), rng.randint(0, max_body))):
            (neg if rng.random() < neg_prob else pos).append(atom)
        rules.append(DetRule(head=head, pos=tuple(pos), neg=tuple(neg)))
    return rules
