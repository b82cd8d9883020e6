"""The transcribed presentations and proof scripts, shipped as package data."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from importlib import resources
from typing import Union

from ..parser import parse_presentation, parse_proof, parse_word
from ..presentation import Presentation
from ..proofcheck import ProofScript
from ..word import Word


@dataclass(frozen=True)
class ManifestEntry:
    path: str
    kind: str
    description: str
    locus: str


@dataclass(frozen=True)
class Variant:
    left: str
    right: str
    side: str
    word: Word


def read_text(name: str) -> str:
    return resources.files(__name__).joinpath(name).read_text(encoding="utf-8")


def path(name: str):
    """Filesystem path of a corpus file (valid while the package is installed unpacked)."""
    return resources.files(__name__).joinpath(name)


def manifest() -> list[ManifestEntry]:
    entries = []
    for line in read_text("MANIFEST").splitlines():
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        fields = [f.strip() for f in line.split("|")]
        if len(fields) != 4:
            raise ValueError(f"bad manifest line: {line!r}")
        entries.append(ManifestEntry(*fields))
    return entries


@lru_cache(maxsize=None)
def presentation(name: str) -> Presentation:
    return parse_presentation(read_text(name))


def proof(name: str) -> ProofScript:
    return parse_proof(read_text(name), _proof_alphabet(name))


def _proof_alphabet(name: str):
    for line in read_text(name).splitlines():
        parts = line.split()
        if len(parts) == 2 and parts[0] == "presentation":
            return presentation(parts[1]).alphabet
    raise ValueError(f"{name} names no presentation")


def load_corpus() -> dict[str, Union[Presentation, ProofScript]]:
    out: dict[str, Union[Presentation, ProofScript]] = {}
    for entry in manifest():
        out[entry.path] = presentation(entry.path) if entry.kind == "presentation" \
            else proof(entry.path)
    return out


def variants() -> list[Variant]:
    out = []
    for line in read_text("variants.txt").splitlines():
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        head, text = line.split(":", 1)
        left, right, side = head.split()
        alphabet = presentation(left if side == "left" else right).alphabet
        if "=" in text:
            lhs, rhs = text.split("=", 1)
            word = parse_word(lhs, alphabet) * ~parse_word(rhs, alphabet)
        else:
            word = parse_word(text, alphabet)
        out.append(Variant(left, right, side, word))
    return out


@dataclass(frozen=True)
class Quotient:
    target: str
    extra: tuple[Word, ...]
    order: int


def quotients() -> list[Quotient]:
    out = []
    for line in read_text("quotients.txt").splitlines():
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        head, rest = line.split(":", 1)
        rels, order = rest.split("=>")
        alphabet = presentation(head.strip()).alphabet
        extra = tuple(parse_word(r, alphabet) for r in rels.split(","))
        out.append(Quotient(head.strip(), extra, int(order)))
    return out
