"""Checking derivations in a presented group against explicit certificates.

A step claims ``lhs = rhs`` and lists factors ``(c, s, e)``.  Each factor
stands for ``c * s^e * c^-1`` where ``s`` is either a relator of the
presentation or the relator form ``u v^-1`` of an earlier step ``u = v``.
The step is accepted iff ``lhs rhs^-1`` and the product of its factors
freely reduce to the same word.  No search happens here.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import TYPE_CHECKING, Optional, Sequence, Union

from .word import Word, cyclic_reduce

if TYPE_CHECKING:
    from .presentation import Presentation

Source = Union[int, str]  # 1-based relator number or step name


class ProofError(ValueError):
    pass


@dataclass(frozen=True)
class Factor:
    conjugator: Word
    source: Source
    exponent: int = 1


@dataclass(frozen=True)
class Step:
    name: str
    lhs: Word
    rhs: Word
    factors: tuple[Factor, ...] = ()

    @property
    def relator(self) -> Word:
        return self.lhs * ~self.rhs


@dataclass(frozen=True)
class ProofScript:
    presentation: Optional[str]
    steps: tuple[Step, ...] = ()


@dataclass
class Verdict:
    name: str
    accepted: bool
    residual: Optional[Word] = None
    message: str = ""
    abelian_ok: bool = True


@dataclass
class Report:
    verdicts: list[Verdict] = field(default_factory=list)
    trivial_generators: list[str] = field(default_factory=list)
    all_trivial: bool = False

    @property
    def accepted(self) -> bool:
        return all(v.accepted for v in self.verdicts)

    @property
    def first_rejected(self) -> Optional[Verdict]:
        return next((v for v in self.verdicts if not v.accepted), None)

    def summary(self) -> str:
        if not self.accepted:
            v = self.first_rejected
            return f"step {v.name} rejected: {v.message}"
        if self.all_trivial:
            return "all steps accepted; trivial (every generator proved trivial by certificate)"
        return "all steps accepted"


def _source_word(p: "Presentation", established: dict[str, Word], source: Source) -> Word:
    if isinstance(source, int):
        if not 1 <= source <= len(p.relators):
            raise ProofError(f"no relator r{source}")
        return p.relators[source - 1]
    try:
        return established[source]
    except KeyError:
        raise ProofError(f"unknown source {source!r}") from None


def certificate_product(p: "Presentation", established: dict[str, Word],
                        factors: Sequence[Factor]) -> Word:
    prod = Word(p.alphabet)
    for f in factors:
        if f.conjugator.alphabet != p.alphabet:
            raise ProofError(f"conjugator {f.conjugator} is over the wrong alphabet")
        if f.exponent not in (1, -1):
            raise ProofError(f"exponent {f.exponent} is not ±1")
        s = _source_word(p, established, f.source)
        prod = prod * f.conjugator * s ** f.exponent * ~f.conjugator
    return prod


def check_step(p: "Presentation", established: dict[str, Word], step: Step) -> Verdict:
    """Check one step; ``established`` maps earlier step names to relator forms."""
    target = step.relator
    prod = certificate_product(p, established, step.factors)
    if prod == target:
        return Verdict(step.name, True)
    residual = target * ~prod
    return Verdict(step.name, False, residual,
                   f"certificate misses by {residual}")


def check_script(p: "Presentation", script: ProofScript) -> Report:
    from .abelian import exponent_vector, in_row_lattice, relation_matrix

    report = Report()
    established: dict[str, Word] = {}
    matrix = relation_matrix(p)
    trivial = set()
    for step in script.steps:
        try:
            verdict = check_step(p, established, step)
        except ProofError as exc:
            verdict = Verdict(step.name, False, None, str(exc))
        verdict.abelian_ok = in_row_lattice(matrix, exponent_vector(step.relator))
        if verdict.accepted and not verdict.abelian_ok:
            verdict.accepted = False
            verdict.message = "identity fails in the abelianization"
        report.verdicts.append(verdict)
        # later steps are judged against the claim even if this step failed,
        # so a single bad certificate is reported once
        established[step.name] = step.relator
        if verdict.accepted:
            g = _trivialized_generator(step)
            if g is not None:
                trivial.add(g)
    report.trivial_generators = [g for g in p.alphabet.names if g in trivial]
    report.all_trivial = report.accepted and trivial == set(p.alphabet.names)
    return report


def _trivialized_generator(step: Step) -> Optional[str]:
    core, _ = cyclic_reduce(step.relator)
    if len(core.code) == 1:
        return core.alphabet.names[abs(core.code[0]) - 1]
    return None


class Derivation:
    """Build a certificate by rewriting ``lhs rhs^-1`` down to the empty word.

    Each call to :meth:`to` names the next word and the source that justifies
    the change; the conjugator is found by matching rotations.  This is an
    authoring aid, kept apart from :func:`check_step`.
    """

    def __init__(self, p: "Presentation", established: dict[str, Word], lhs: Word, rhs: Word):
        self.p = p
        self.established = established
        self.lhs = lhs
        self.rhs = rhs
        self.current = lhs * ~rhs
        self.factors: list[Factor] = []

    def to(self, nxt: Union[Word, str], source: Source, exponent: int = 1) -> "Derivation":
        if isinstance(nxt, str):
            nxt = self.p.word(nxt)
        diff = self.current * ~nxt
        s = _source_word(self.p, self.established, source) ** exponent
        conj = find_conjugator(diff, s)
        if conj is None:
            raise ProofError(f"{self.current} -> {nxt} is not one application of {source}^{exponent}")
        self.factors.append(Factor(conj, source, exponent))
        self.current = nxt
        return self

    def step(self, name: str) -> Step:
        if self.current.code:
            raise ProofError(f"derivation of {name} stops at {self.current}")
        return Step(name, self.lhs, self.rhs, tuple(self.factors))


def find_conjugator(target: Word, s: Word) -> Optional[Word]:
    """Return ``c`` with ``c s c^-1 == target`` (free equality), if one exists."""
    if not target.code and not s.code:
        return Word(s.alphabet)
    t_core, t_conj = cyclic_reduce(target)
    s_core, s_conj = cyclic_reduce(s)
    n = len(s_core.code)
    if n != len(t_core.code) or n == 0:
        return None
    for i in range(n):
        # s_core = A B with len(A) = i; rotation B A = A^-1 s_core A
        if s_core.code[i:] + s_core.code[:i] == t_core.code:
            a = Word(s.alphabet, s_core.code[:i])
            return t_conj * ~a * ~s_conj
    return None
