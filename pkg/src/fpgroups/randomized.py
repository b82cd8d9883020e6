"""Seeded random words, small presentations and Tietze move sequences."""

from __future__ import annotations

import random

from .parser import parse_presentation
from .presentation import (
    Presentation,
    TietzeLog,
    add_generator,
    add_relator,
    defining_word,
    eliminate_generator,
    remove_redundant,
)
from .word import Alphabet, Word

# (text, order); orders of the non-cyclic groups are checked against the
# exhaustive search in bruteforce.py by the test suite
SMALL_GROUPS = [
    ("< a | a >", 1),
    ("< a | a^2 >", 2),
    ("< a | a^3 >", 3),
    ("< a | a^4 >", 4),
    ("< a | a^5 >", 5),
    ("< a | a^6 >", 6),
    ("< a, b | a^2, b^2, (a b)^3 >", 6),
    ("< a, b | a^4, a^2 b^-2, b^-1 a b a >", 8),
    ("< a, b | a^2, b^2, (a b)^2 >", 4),
    ("< a, b | a^4, b^2, (a b)^2 >", 8),
    ("< a, b | a^2, b^3, (a b)^3 >", 12),
    ("< a, b | a^5, b^2, (a b)^2 >", 10),
]


def small_group_suite() -> list[tuple[Presentation, int]]:
    return [(parse_presentation(t), n) for t, n in SMALL_GROUPS]


def random_word(rng: random.Random, alphabet: Alphabet, max_length: int,
                min_length: int = 0) -> Word:
    n = len(alphabet)
    if n == 0:
        return Word(alphabet)
    length = rng.randint(min_length, max_length)
    return Word.raw(alphabet, [rng.choice((1, -1)) * rng.randint(1, n) for _ in range(length)])


def random_small_presentation(rng: random.Random) -> Presentation:
    """A quotient of a small finite group, possibly with a third generator.

    Orders stay at most 12.  Relators have length at most 6.
    """
    base, _ = rng.choice(small_group_suite())
    p = base
    if len(p.alphabet) < 3 and rng.random() < 0.4:
        name = "c" if "b" in p.alphabet else "b"
        p, _ = add_generator(p, name, random_word(rng, p.alphabet, 3))
    extra = [random_word(rng, p.alphabet, 6, 1) for _ in range(rng.randint(0, 2))]
    rels = list(p.relators) + [Word(p.alphabet, w.code) for w in extra]
    return p.with_relators(r for r in rels if len(r) <= 6)


def random_tietze_sequence(rng: random.Random, p: Presentation, steps: int = 6,
                           max_total_length: int = 120) -> tuple[Presentation, TietzeLog]:
    log = TietzeLog()
    for _ in range(steps):
        kind = rng.choice(("add-generator", "add-relator", "eliminate", "cleanup"))
        if kind in ("add-generator", "add-relator") and p.total_length() > max_total_length:
            kind = "eliminate"
        if kind == "add-generator":
            name = p.alphabet.fresh_name("t")
            p, move = add_generator(p, name, random_word(rng, p.alphabet, 4))
            log.append(move)
        elif kind == "add-relator" and p.relators:
            cert = []
            for _ in range(rng.randint(1, 3)):
                cert.append((Word(p.alphabet, random_word(rng, p.alphabet, 2).code),
                             rng.randrange(len(p.relators)), rng.choice((1, -1))))
            prod = Word(p.alphabet)
            for c, i, e in cert:
                prod = prod * c * p.relators[i] ** e * ~c
            p, move = add_relator(p, prod, cert)
            log.append(move)
        elif kind == "eliminate":
            options = [(g, i) for g in p.alphabet.names for i, r in enumerate(p.relators)
                       if defining_word(r, g) is not None]
            if options:
                g, i = rng.choice(options)
                p, move = eliminate_generator(p, g, i)
                log.append(move)
        else:
            p, moves = remove_redundant(p)
            log.extend(moves)
    return p, log
