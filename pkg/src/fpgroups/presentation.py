"""Finite presentations and Tietze transformations."""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

from .word import (
    Alphabet,
    IncompatibleAlphabetsError,
    Word,
    cyclic_reduce,
    format_word,
    rename,
    substitute,
)


class EliminationError(ValueError):
    pass


@dataclass(frozen=True)
class Presentation:
    alphabet: Alphabet
    relators: tuple[Word, ...] = ()

    def __post_init__(self):
        rels = tuple(self.relators)
        for r in rels:
            if r.alphabet != self.alphabet:
                raise IncompatibleAlphabetsError(
                    f"relator {r} is not over {self.alphabet!r}")
        object.__setattr__(self, "relators", rels)

    @classmethod
    def from_text(cls, text: str) -> "Presentation":
        from .parser import parse_presentation
        return parse_presentation(text)

    @property
    def generators(self) -> tuple[str, ...]:
        return self.alphabet.names

    def word(self, text: str) -> Word:
        from .parser import parse_word
        return parse_word(text, self.alphabet)

    def with_relators(self, relators: Iterable[Word]) -> "Presentation":
        return Presentation(self.alphabet, tuple(relators))

    def total_length(self) -> int:
        return sum(len(r) for r in self.relators)

    def __str__(self):
        from .parser import serialize_presentation
        return serialize_presentation(self)


def _letter_key(x: int) -> tuple[int, int]:
    return (abs(x) - 1, 0 if x > 0 else 1)


def relator_normal_form(w: Word) -> Word:
    """Least cyclic rotation of the cyclically reduced core of ``w`` or its inverse.

    Letters compare by generator index first, positive before negative.
    """
    core, _ = cyclic_reduce(w)
    code = core.code
    if not code:
        return Word.raw(w.alphabet, ())
    inv = tuple(-x for x in reversed(code))
    best = None
    for seq in (code, inv):
        for i in range(len(seq)):
            rot = seq[i:] + seq[:i]
            key = [_letter_key(x) for x in rot]
            if best is None or key < best[0]:
                best = (key, rot)
    return Word.raw(w.alphabet, best[1])


def defining_word(relator: Word, name: str) -> Optional[Word]:
    """If ``relator`` contains ``name`` exactly once, return ``w`` with ``name = w``.

    A relator ``A g^e B`` rotates to ``g^e B A``, so ``g = (B A)^(-e)``.
    """
    g = relator.alphabet.index(name) + 1
    positions = [i for i, x in enumerate(relator.code) if abs(x) == g]
    if len(positions) != 1:
        return None
    i = positions[0]
    code = relator.code
    rest = Word(relator.alphabet, code[i + 1:] + code[:i])
    return ~rest if code[i] > 0 else rest


@dataclass(frozen=True)
class TietzeMove:
    """One logged move.

    ``kind`` is one of ``eliminate``, ``remove-duplicate-relator``,
    ``remove-trivial-relator``, ``add-relator`` and ``add-generator``.
    Words are stored as text over the alphabet in force before the move.
    """

    kind: str
    generator: Optional[str] = None
    word: Optional[str] = None
    index: Optional[int] = None
    certificate: tuple[tuple[str, int, int], ...] = ()

    def to_json(self) -> dict:
        d = {"kind": self.kind}
        if self.generator is not None:
            d["generator"] = self.generator
        if self.word is not None:
            d["word"] = self.word
        if self.index is not None:
            d["index"] = self.index
        if self.certificate:
            d["certificate"] = [list(c) for c in self.certificate]
        return d

    @classmethod
    def from_json(cls, d: dict) -> "TietzeMove":
        return cls(d["kind"], d.get("generator"), d.get("word"), d.get("index"),
                   tuple(tuple(c) for c in d.get("certificate", ())))


@dataclass
class TietzeLog:
    moves: list[TietzeMove] = field(default_factory=list)

    def append(self, move: TietzeMove):
        self.moves.append(move)

    def extend(self, other: "TietzeLog"):
        self.moves.extend(other.moves)

    def __len__(self):
        return len(self.moves)

    def __iter__(self):
        return iter(self.moves)

    def dumps(self) -> str:
        return "\n".join(json.dumps(m.to_json(), sort_keys=True) for m in self.moves) + "\n"

    @classmethod
    def loads(cls, text: str) -> "TietzeLog":
        return cls([TietzeMove.from_json(json.loads(line))
                    for line in text.splitlines() if line.strip()])

    def replay(self, source: Presentation) -> Presentation:
        p = source
        for move in self.moves:
            p = apply_move(p, move)
        return p


# moves ---------------------------------------------------------------

def eliminate_generator(p: Presentation, name: str,
                        index: Optional[int] = None) -> tuple[Presentation, TietzeMove]:
    """Eliminate ``name`` using relator ``index`` (0-based) as its definition.

    Without ``index`` the shortest eliminable relator is used, ties broken
    by relator normal form and then position.
    """
    if name not in p.alphabet:
        raise EliminationError(f"unknown generator {name!r}")
    if index is None:
        index = _best_defining_relator(p, name)
        if index is None:
            raise EliminationError(f"{name!r} occurs exactly once in no relator")
    if not 0 <= index < len(p.relators):
        raise EliminationError(f"relator index {index} out of range")
    value = defining_word(p.relators[index], name)
    if value is None:
        raise EliminationError(
            f"relator {index + 1} ({p.relators[index]}) does not define {name!r}")
    new_alphabet = p.alphabet.without(name)
    rels = []
    for i, r in enumerate(p.relators):
        if i == index:
            continue
        rels.append(rename(substitute(r, name, value), new_alphabet))
    move = TietzeMove("eliminate", generator=name, word=format_word(value), index=index)
    return Presentation(new_alphabet, tuple(rels)), move


def _best_defining_relator(p: Presentation, name: str) -> Optional[int]:
    best = None
    for i, r in enumerate(p.relators):
        if defining_word(r, name) is None:
            continue
        key = (len(r), [_letter_key(x) for x in relator_normal_form(r).code], i)
        if best is None or key < best[0]:
            best = (key, i)
    return None if best is None else best[1]


def eliminate_by_definition(p: Presentation, name: str,
                            value: Word) -> tuple[Presentation, TietzeMove]:
    """Eliminate ``name`` via the relator equal to ``name = value`` up to conjugacy and inversion."""
    target = relator_normal_form(Word.generator(p.alphabet, name) * ~value)
    for i, r in enumerate(p.relators):
        if relator_normal_form(r) == target and defining_word(r, name) is not None:
            return eliminate_generator(p, name, i)
    raise EliminationError(f"no relator states {name} = {value}")


def remove_relator(p: Presentation, index: int, kind: str) -> tuple[Presentation, TietzeMove]:
    rels = p.relators
    if kind == "remove-trivial-relator":
        if cyclic_reduce(rels[index])[0].code:
            raise ValueError(f"relator {index + 1} is not trivial")
    elif kind == "remove-duplicate-relator":
        nf = relator_normal_form(rels[index])
        if not any(relator_normal_form(r) == nf for j, r in enumerate(rels[:index])):
            raise ValueError(f"relator {index + 1} duplicates no earlier relator")
    else:
        raise ValueError(kind)
    return p.with_relators(rels[:index] + rels[index + 1:]), TietzeMove(kind, index=index)


def add_relator(p: Presentation, word: Word,
                certificate: Sequence[tuple[Word, int, int]]) -> tuple[Presentation, TietzeMove]:
    """Append ``word``, which must equal the product of ``c r_i^e c^-1`` factors.

    ``certificate`` entries are ``(conjugator, relator index, exponent)``.
    """
    prod = Word(p.alphabet)
    for conj, i, e in certificate:
        prod = prod * conj * p.relators[i] ** e * ~conj
    if prod != word:
        raise ValueError(f"certificate does not prove {word}")
    move = TietzeMove("add-relator", word=format_word(word), certificate=tuple(
        (format_word(c), i, e) for c, i, e in certificate))
    return p.with_relators(p.relators + (word,)), move


def add_generator(p: Presentation, name: str, value: Word) -> tuple[Presentation, TietzeMove]:
    """Introduce ``name`` together with the relator ``name value^-1``."""
    alphabet = p.alphabet.with_name(name)
    rels = tuple(rename(r, alphabet) for r in p.relators)
    new = Word.generator(alphabet, name) * ~rename(value, alphabet)
    move = TietzeMove("add-generator", generator=name, word=format_word(value))
    return Presentation(alphabet, rels + (new,)), move


def apply_move(p: Presentation, move: TietzeMove) -> Presentation:
    if move.kind == "eliminate":
        q, _ = eliminate_generator(p, move.generator, move.index)
        return q
    if move.kind in ("remove-trivial-relator", "remove-duplicate-relator"):
        q, _ = remove_relator(p, move.index, move.kind)
        return q
    if move.kind == "add-relator":
        cert = [(p.word(c), i, e) for c, i, e in move.certificate]
        q, _ = add_relator(p, p.word(move.word), cert)
        return q
    if move.kind == "add-generator":
        q, _ = add_generator(p, move.generator, p.word(move.word))
        return q
    raise ValueError(f"unknown move kind {move.kind!r}")


# simplification ------------------------------------------------------

def remove_redundant(p: Presentation) -> tuple[Presentation, TietzeLog]:
    """Drop trivial relators, then later duplicates (under normal form)."""
    log = TietzeLog()
    i = 0
    while i < len(p.relators):
        if not cyclic_reduce(p.relators[i])[0].code:
            p, move = remove_relator(p, i, "remove-trivial-relator")
            log.append(move)
        else:
            i += 1
    seen = set()
    i = 0
    while i < len(p.relators):
        nf = relator_normal_form(p.relators[i]).code
        if nf in seen:
            p, move = remove_relator(p, i, "remove-duplicate-relator")
            log.append(move)
        else:
            seen.add(nf)
            i += 1
    return p, log


def auto_simplify(p: Presentation, max_steps: int = 10_000,
                  max_relator_length: Optional[int] = None) -> tuple[Presentation, TietzeLog]:
    """Greedy elimination: always use the shortest defining relator available.

    Ties go to the earlier generator.  An elimination is skipped if it would
    create a relator longer than ``max_relator_length``.
    """
    log = TietzeLog()
    for _ in range(max_steps):
        p, cleanup = remove_redundant(p)
        log.extend(cleanup)
        candidates = []
        for gi, name in enumerate(p.alphabet.names):
            idx = _best_defining_relator(p, name)
            if idx is not None:
                candidates.append((len(p.relators[idx]), gi, name, idx))
        candidates.sort()
        for _, _, name, idx in candidates:
            q, move = eliminate_generator(p, name, idx)
            if max_relator_length is None or all(len(r) <= max_relator_length for r in q.relators):
                p = q
                log.append(move)
                break
        else:
            break
    return p, log


# comparison ----------------------------------------------------------

@dataclass
class RelatorDiff:
    matched: list[Word]
    only_left: list[Word]
    only_right: list[Word]

    @property
    def empty(self) -> bool:
        return not self.only_left and not self.only_right


def relator_diff(p1: Presentation, p2: Presentation,
                 mapping: Optional[dict[str, str]] = None) -> RelatorDiff:
    """Compare relator multisets under normal form, renaming ``p1`` by ``mapping``."""
    if len(p1.alphabet) != len(p2.alphabet):
        raise IncompatibleAlphabetsError(
            f"alphabet sizes differ: {len(p1.alphabet)} vs {len(p2.alphabet)}")
    left = [relator_normal_form(rename(r, p2.alphabet, mapping)) for r in p1.relators]
    right = [relator_normal_form(r) for r in p2.relators]
    left = [w for w in left if w.code]
    right = [w for w in right if w.code]
    lc, rc = Counter(left), Counter(right)
    matched = list((lc & rc).elements())
    return RelatorDiff(matched, list((lc - rc).elements()), list((rc - lc).elements()))


def presentations_match(p1: Presentation, p2: Presentation,
                        mapping: Optional[dict[str, str]] = None) -> bool:
    return relator_diff(p1, p2, mapping).empty
