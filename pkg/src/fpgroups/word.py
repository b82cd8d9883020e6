"""Free-group words over a named generator alphabet.

Letters are stored internally as nonzero signed integers: generator index
``i`` with sign ``s`` is encoded as ``s * (i + 1)``.  Every public
constructor returns freely reduced words; ``Word.raw`` skips reduction and
exists for the parser, which reduces once at the end.
"""

from __future__ import annotations

import re
from typing import Iterable, NamedTuple

IDENT_RE = re.compile(r"[A-Za-z][A-Za-z0-9_]*\Z")


class IncompatibleAlphabetsError(ValueError):
    pass


class CyclicSubstitutionError(ValueError):
    pass


class Alphabet:
    """An ordered list of distinct generator names."""

    __slots__ = ("names", "_index")

    def __init__(self, names: Iterable[str]):
        names = tuple(names)
        for name in names:
            if not isinstance(name, str) or not IDENT_RE.match(name):
                raise ValueError(f"invalid generator name: {name!r}")
        index = {}
        for i, name in enumerate(names):
            if name in index:
                raise ValueError(f"duplicate generator name: {name!r}")
            index[name] = i
        self.names = names
        self._index = index

    def __len__(self):
        return len(self.names)

    def __iter__(self):
        return iter(self.names)

    def __contains__(self, name):
        return name in self._index

    def __eq__(self, other):
        return isinstance(other, Alphabet) and self.names == other.names

    def __hash__(self):
        return hash(self.names)

    def __repr__(self):
        return f"Alphabet({list(self.names)!r})"

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise KeyError(f"unknown generator {name!r}") from None

    def without(self, name: str) -> "Alphabet":
        return Alphabet(n for n in self.names if n != name)

    def with_name(self, name: str) -> "Alphabet":
        return Alphabet(self.names + (name,))

    def fresh_name(self, prefix: str = "t") -> str:
        i = 1
        while f"{prefix}{i}" in self._index:
            i += 1
        return f"{prefix}{i}"


class Letter(NamedTuple):
    generator: int
    sign: int


def _free_reduce(code: Iterable[int]) -> tuple[int, ...]:
    out: list[int] = []
    for x in code:
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(x)
    return tuple(out)


class Word:
    """An immutable word; equality is equality of letter sequences."""

    __slots__ = ("alphabet", "code")

    def __init__(self, alphabet: Alphabet, code: Iterable[int] = ()):
        code = _free_reduce(code)
        n = len(alphabet)
        for x in code:
            if not isinstance(x, int) or x == 0 or abs(x) > n:
                raise ValueError(f"letter code {x!r} out of range for {alphabet!r}")
        self.alphabet = alphabet
        self.code = code

    @classmethod
    def raw(cls, alphabet: Alphabet, code: Iterable[int]) -> "Word":
        """Build a word without free reduction (parser use only)."""
        w = cls.__new__(cls)
        w.alphabet = alphabet
        w.code = tuple(code)
        return w

    @classmethod
    def identity(cls, alphabet: Alphabet) -> "Word":
        return cls(alphabet)

    @classmethod
    def generator(cls, alphabet: Alphabet, name: str, power: int = 1) -> "Word":
        i = alphabet.index(name) + 1
        return cls(alphabet, [i if power > 0 else -i] * abs(power))

    @classmethod
    def from_letters(cls, alphabet: Alphabet, letters: Iterable[tuple[str, int]]) -> "Word":
        """Build from ``(name, ±1)`` pairs, e.g. ``[("a", 1), ("b", -1)]``."""
        return cls(alphabet, [alphabet.index(g) + 1 if s > 0 else -(alphabet.index(g) + 1)
                              for g, s in letters])

    @property
    def letters(self) -> tuple[Letter, ...]:
        return tuple(Letter(abs(x) - 1, 1 if x > 0 else -1) for x in self.code)

    def is_reduced(self) -> bool:
        return all(self.code[i] != -self.code[i + 1] for i in range(len(self.code) - 1))

    def is_identity(self) -> bool:
        return not self.code

    def generators_used(self) -> set[int]:
        return {abs(x) - 1 for x in self.code}

    def contains(self, name: str) -> bool:
        i = self.alphabet.index(name) + 1
        return i in self.code or -i in self.code

    def exponent_sum(self, index: int) -> int:
        return sum(1 if x > 0 else -1 for x in self.code if abs(x) == index + 1)

    def _check(self, other: "Word"):
        if self.alphabet != other.alphabet:
            raise IncompatibleAlphabetsError(
                f"incompatible alphabets {self.alphabet!r} and {other.alphabet!r}")

    def __mul__(self, other: "Word") -> "Word":
        self._check(other)
        return Word(self.alphabet, self.code + other.code)

    def __invert__(self) -> "Word":
        return Word.raw(self.alphabet, _free_reduce(-x for x in reversed(self.code)))

    def __pow__(self, n: int) -> "Word":
        base = self if n >= 0 else ~self
        return Word(self.alphabet, base.code * abs(n))

    def __len__(self):
        return len(self.code)

    def __eq__(self, other):
        return isinstance(other, Word) and self.alphabet == other.alphabet and self.code == other.code

    def __hash__(self):
        return hash((self.alphabet, self.code))

    def __str__(self):
        return format_word(self)

    def __repr__(self):
        return f"Word({format_word(self)!r})"


def format_word(w: Word) -> str:
    """Render ``w`` in the textual grammar, grouping runs as powers."""
    if not w.code:
        return "1"
    parts = []
    i = 0
    code = w.code
    while i < len(code):
        j = i
        while j < len(code) and code[j] == code[i]:
            j += 1
        name = w.alphabet.names[abs(code[i]) - 1]
        power = (j - i) * (1 if code[i] > 0 else -1)
        parts.append(name if power == 1 else f"{name}^{power}")
        i = j
    return " ".join(parts)


def reduce(w: Word) -> Word:
    return Word(w.alphabet, w.code)


def multiply(u: Word, v: Word) -> Word:
    return u * v


def invert(w: Word) -> Word:
    return ~w


def commutator(u: Word, v: Word) -> Word:
    """``[u, v] = u v u^-1 v^-1``."""
    u._check(v)
    return Word(u.alphabet, u.code + v.code + (~u).code + (~v).code)


def conjugate(w: Word, by: Word) -> Word:
    """``by * w * by^-1``."""
    return by * w * ~by


def substitute(w: Word, name: str, replacement: Word) -> Word:
    """Replace every ``name^±1`` in ``w`` by ``replacement^±1`` and reduce."""
    w._check(replacement)
    g = w.alphabet.index(name) + 1
    if g in replacement.code or -g in replacement.code:
        raise CyclicSubstitutionError(
            f"replacement {replacement} for {name!r} contains {name!r}")
    inv = (~replacement).code
    out: list[int] = []
    for x in w.code:
        if x == g:
            out.extend(replacement.code)
        elif x == -g:
            out.extend(inv)
        else:
            out.append(x)
    return Word(w.alphabet, out)


def cyclic_reduce(w: Word) -> tuple[Word, Word]:
    """Return ``(core, conjugator)`` with ``w == conjugator * core * conjugator^-1``."""
    code = _free_reduce(w.code)
    i, j = 0, len(code)
    while j - i >= 2 and code[i] == -code[j - 1]:
        i += 1
        j -= 1
    return Word.raw(w.alphabet, code[i:j]), Word.raw(w.alphabet, code[:i])


def rename(w: Word, alphabet: Alphabet, mapping: dict[str, str] | None = None) -> Word:
    """Move ``w`` into ``alphabet``, optionally renaming generators."""
    mapping = mapping or {}
    table = {}
    for i, name in enumerate(w.alphabet.names):
        target = mapping.get(name, name)
        if target in alphabet:
            table[i + 1] = alphabet.index(target) + 1
    try:
        code = [table[abs(x)] if x > 0 else -table[abs(x)] for x in w.code]
    except KeyError as exc:
        missing = w.alphabet.names[exc.args[0] - 1]
        raise IncompatibleAlphabetsError(
            f"generator {missing!r} has no image in {alphabet!r}") from None
    return Word(alphabet, code)

