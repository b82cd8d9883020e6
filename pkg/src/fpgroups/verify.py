"""The reproduction suite behind ``fpgroups verify-paper``.

Each ``criterion_N`` returns a :class:`CriterionResult`; ``run_all`` runs
them in order.  Randomized criteria take a seed so runs are repeatable.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, replace
from typing import Callable

from . import corpus
from .abelian import abelianize
from .bruteforce import order_by_search
from .enumerator import DEFAULT_MAX_COSETS, enumerate_cosets, verify_table
from .parser import ParseError, parse_presentation, parse_proof, serialize_presentation, serialize_proof
from .presentation import Presentation, eliminate_by_definition, relator_diff, relator_normal_form
from .proofcheck import check_script
from .randomized import random_tietze_sequence, random_word, small_group_suite
from .surgery import determinant, is_luttinger, log_transform_matrix
from .word import Word, invert, multiply, reduce

TIME_LIMIT_SECONDS = 10.0

E0_DEFINITIONS = [("f", "a^-1"), ("b", "a"), ("p", "d^-1"), ("d", "c q"), ("k", "h")]
M_DEFINITIONS = E0_DEFINITIONS + [("y", "q"), ("x", "e^-1 q")]


@dataclass
class CriterionResult:
    number: int
    title: str
    passed: bool
    detail: str = ""

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"[{status}] {self.number:2d}. {self.title}: {self.detail}"


def eliminate_chain(p: Presentation, definitions) -> Presentation:
    for name, text in definitions:
        p, _ = eliminate_by_definition(p, name, p.word(text))
    return p


def criterion_1() -> CriterionResult:
    details = []
    ok = True
    for name in ("m_displayed.grp", "m_raw.grp"):
        p = corpus.presentation(name)
        t0 = time.perf_counter()
        res = enumerate_cosets(p, max_cosets=DEFAULT_MAX_COSETS)
        elapsed = time.perf_counter() - t0
        check = verify_table(res.table, p) if res.completed else None
        good = res.completed and res.index == 1 and elapsed < TIME_LIMIT_SECONDS and bool(check)
        ok &= bool(good)
        details.append(f"{name} {res.outcome} defined={res.stats.defined} {elapsed:.2f}s "
                       f"table={'ok' if check else 'bad'}")
    return CriterionResult(1, "pi_1(M) is trivial by coset enumeration", ok, "; ".join(details))


def _variant_words(left: str, right: str) -> tuple[set, set]:
    lv, rv = set(), set()
    for v in corpus.variants():
        if v.left == left and v.right == right:
            (lv if v.side == "left" else rv).add(relator_normal_form(v.word))
    return lv, rv


def _diff_within_variants(derived: Presentation, left: str, right: str) -> tuple[bool, str]:
    diff = relator_diff(derived, corpus.presentation(right))
    lv, rv = _variant_words(left, right)
    ok = set(diff.only_left) <= lv and set(diff.only_right) <= rv
    return ok, (f"{len(diff.matched)} relators match, "
                f"{len(diff.only_left)}+{len(diff.only_right)} flagged variants")


def criterion_2() -> CriterionResult:
    raw = corpus.presentation("e0_raw.grp")
    derived = eliminate_chain(raw, E0_DEFINITIONS)
    parts = []
    ok = derived.generators == ("a", "c", "e", "g", "h", "q") and len(derived.relators) == 9
    parts.append(f"{len(derived.generators)} generators, {len(derived.relators)} relators")
    ok &= derived == corpus.presentation("e0_eliminated.grp")
    good, text = _diff_within_variants(derived, "e0_eliminated.grp", "e0_displayed.grp")
    ok &= good
    parts.append(text)
    for name in ("e0_displayed_implies_eliminated.proof", "e0_eliminated_implies_displayed.proof"):
        script = corpus.proof(name)
        ok &= check_script(corpus.presentation(script.presentation), script).accepted
    displayed = corpus.presentation("e0_displayed.grp")
    same_ab = abelianize(derived) == abelianize(displayed) == abelianize(raw)
    ok &= same_ab
    parts.append(f"abelianization {abelianize(derived)} on all three")
    orders: dict[tuple, dict[str, int]] = {}
    for q in corpus.quotients():
        p = corpus.presentation(q.target)
        res = enumerate_cosets(p.with_relators(p.relators + q.extra))
        key = tuple(str(w) for w in q.extra)
        orders.setdefault(key, {})[q.target] = res.index if res.completed else -1
        ok &= res.completed and res.index == q.order
    agree = all(len(set(v.values())) == 1 for v in orders.values())
    ok &= agree
    parts.append(f"{len(orders)} finite quotients agree" if agree else "finite quotients disagree")
    return CriterionResult(2, "E0~ elimination reproduces the displayed presentation", ok,
                           "; ".join(parts))


def criterion_3() -> CriterionResult:
    derived = eliminate_chain(corpus.presentation("m_raw.grp"), M_DEFINITIONS)
    ok = len(derived.generators) == 6 and derived == corpus.presentation("m_eliminated.grp")
    outcomes = []
    for label, p in (("derived", derived), ("displayed", corpus.presentation("m_displayed.grp"))):
        res = enumerate_cosets(p)
        ok &= res.completed and res.index == 1
        outcomes.append(f"{label} {res.outcome}")
    good, text = _diff_within_variants(derived, "m_eliminated.grp", "m_displayed.grp")
    ok &= good
    return CriterionResult(3, "M elimination gives a 6-generator trivial group", ok,
                           f"{len(derived.generators)} generators; " + ", ".join(outcomes) + f"; {text}")


def criterion_4() -> CriterionResult:
    derived = eliminate_chain(corpus.presentation("m_raw.grp"), M_DEFINITIONS)
    results = {
        "m_displayed": abelianize(corpus.presentation("m_displayed.grp")),
        "m_derived": abelianize(derived),
        "e0_raw": abelianize(corpus.presentation("e0_raw.grp")),
        "e0_displayed": abelianize(corpus.presentation("e0_displayed.grp")),
    }
    ok = results["m_displayed"].trivial and results["m_derived"].trivial
    ok &= all(results[k].torsion == () and results[k].free_rank == 2 for k in ("e0_raw", "e0_displayed"))
    return CriterionResult(4, "abelianizations", ok,
                           ", ".join(f"{k}={v}" for k, v in results.items()))


def _corruptions(p: Presentation, script, step_index: int, factor_index: int):
    """A corrupted conjugator and a corrupted source for one factor."""
    step = script.steps[step_index]
    f = step.factors[factor_index]
    earlier = {s.name: s.relator for s in script.steps[:step_index]}

    def source_word(src):
        return p.relators[src - 1] if isinstance(src, int) else earlier[src]

    original = f.conjugator * source_word(f.source) ** f.exponent * ~f.conjugator
    out = []
    for name in p.alphabet.names:
        c = f.conjugator * Word.generator(p.alphabet, name)
        if c * source_word(f.source) ** f.exponent * ~c != original:
            out.append(("conjugator", replace(f, conjugator=c)))
            break
    candidates = list(range(1, len(p.relators) + 1)) + list(earlier)
    for src in candidates:
        if src != f.source and source_word(src) != source_word(f.source):
            out.append(("source", replace(f, source=src)))
            break
    return out


def criterion_5() -> CriterionResult:
    script = corpus.proof("m_triviality.proof")
    p = corpus.presentation(script.presentation)
    report = check_script(p, script)
    ok = report.accepted and report.all_trivial
    trials = failures = 0
    for si, step in enumerate(script.steps):
        for fi in range(len(step.factors)):
            for _, bad in _corruptions(p, script, si, fi):
                factors = list(step.factors)
                factors[fi] = bad
                steps = list(script.steps)
                steps[si] = replace(step, factors=tuple(factors))
                r = check_script(p, replace(script, steps=tuple(steps)))
                rejected = [v.name for v in r.verdicts if not v.accepted]
                trials += 1
                if rejected != [step.name]:
                    failures += 1
    ok &= failures == 0 and trials > 0
    return CriterionResult(5, "proof replay", ok,
                           f"{len(script.steps)} steps: {report.summary()}; "
                           f"{trials} single corruptions, {failures} not isolated")


def criterion_6() -> CriterionResult:
    suite = [(f"< a | a^{n} >", n) for n in range(1, 7)]
    suite += [("< a, b | a^2, b^2, (a b)^3 >", 6), ("< a, b | a^4, a^2 b^-2, b^-1 a b a >", 8)]
    ok = True
    parts = []
    for text, stated in suite:
        p = parse_presentation(text)
        res = enumerate_cosets(p)
        oracle = order_by_search(p)
        good = res.completed and oracle is not None and res.index == oracle == stated
        ok &= good
        parts.append(f"{res.index}/{oracle}")
    return CriterionResult(6, "enumerator matches brute-force orders", ok,
                           "enumerated/oracle " + " ".join(parts))


def criterion_7(seed: int = 7, sequences: int = 200) -> CriterionResult:
    rng = random.Random(seed)
    suite = small_group_suite()
    failures = 0
    for _ in range(sequences):
        p, order = rng.choice(suite)
        q, log = random_tietze_sequence(rng, p, steps=rng.randint(1, 8))
        res = enumerate_cosets(q, max_cosets=200_000)
        if not (res.completed and res.index == order):
            failures += 1
        elif abelianize(q) != abelianize(p) or log.replay(p) != q:
            failures += 1
    return CriterionResult(7, "Tietze moves preserve order and abelianization", failures == 0,
                           f"{sequences} random sequences, {failures} failures")


def criterion_8(seed: int = 8, cases: int = 10_000) -> CriterionResult:
    rng = random.Random(seed)
    alphabet = corpus.presentation("m_raw.grp").alphabet
    counts = {"idempotence": 0, "confluence": 0, "anti-homomorphism": 0}
    for _ in range(cases):
        w = random_word(rng, alphabet, 24)
        r = reduce(w)
        if reduce(r) != r or not r.is_reduced():
            counts["idempotence"] += 1
        g = rng.randint(1, len(alphabet)) * rng.choice((1, -1))
        i = rng.randint(0, len(r.code))
        padded = Word.raw(alphabet, r.code[:i] + (g, -g) + r.code[i:])
        if reduce(padded) != r:
            counts["confluence"] += 1
        u = random_word(rng, alphabet, 12)
        v = random_word(rng, alphabet, 12)
        if invert(multiply(u, v)) != multiply(invert(v), invert(u)):
            counts["anti-homomorphism"] += 1
    ok = not any(counts.values())
    return CriterionResult(8, "word-engine properties", ok,
                           f"{cases} cases each; failures " +
                           ", ".join(f"{k}={v}" for k, v in counts.items()))


def criterion_9() -> CriterionResult:
    dets = {p: determinant(log_transform_matrix(p)) for p in range(-5, 6)}
    flags = {p: is_luttinger(p) for p in range(-5, 6)}
    ok = all(d == 1 for d in dets.values()) and \
        all(flags[p] == (p in (1, -1)) for p in flags)
    return CriterionResult(9, "log-transform matrix", ok,
                           f"det=1 for p in -5..5: {all(d == 1 for d in dets.values())}; "
                           f"Luttinger exactly at p={[p for p in flags if flags[p]]}")


_FUZZ_ALPHABET = "<>|,=[]()^-1230abcegxyz #\n\t"


def criterion_10(seed: int = 10, inputs: int = 1000) -> CriterionResult:
    ok = True
    roundtrips = 0
    for entry in corpus.manifest():
        text = corpus.read_text(entry.path)
        if entry.kind == "presentation":
            p = parse_presentation(text)
            ok &= parse_presentation(serialize_presentation(p)) == p
        else:
            script = corpus.proof(entry.path)
            alphabet = corpus.presentation(script.presentation).alphabet
            ok &= parse_proof(serialize_proof(script), alphabet) == script
        roundtrips += 1
    rng = random.Random(seed)
    seeds = [corpus.read_text(e.path).encode() for e in corpus.manifest() if e.kind == "presentation"]
    crashes = values = errors = 0
    for k in range(inputs):
        data = fuzz_input(rng, seeds, k)
        try:
            parse_presentation(data)
            values += 1
        except ParseError as exc:
            if not 0 <= exc.span.start <= exc.span.end <= len(data):
                crashes += 1
            errors += 1
        except Exception:  # noqa: BLE001 - any other exception is the failure being counted
            crashes += 1
    ok &= crashes == 0
    return CriterionResult(10, "parser round-trip and fuzzing", ok,
                           f"{roundtrips} corpus files round-trip; {inputs} fuzz inputs: "
                           f"{values} values, {errors} spanned errors, {crashes} crashes")


def fuzz_input(rng: random.Random, seeds: list[bytes], k: int) -> bytes:
    mode = k % 3
    if mode == 0:
        return bytes(rng.randrange(256) for _ in range(rng.randint(0, 64)))
    if mode == 1:
        return "".join(rng.choice(_FUZZ_ALPHABET) for _ in range(rng.randint(0, 64))).encode()
    data = bytearray(rng.choice(seeds))
    for _ in range(rng.randint(1, 4)):
        op = rng.randrange(3)
        pos = rng.randrange(len(data) + 1)
        if op == 0 and data:
            del data[min(pos, len(data) - 1)]
        elif op == 1:
            data.insert(pos, rng.randrange(256))
        else:
            data[pos:pos] = rng.choice(_FUZZ_ALPHABET).encode()
    return bytes(data)


CRITERIA: list[Callable[[], CriterionResult]] = [
    criterion_1, criterion_2, criterion_3, criterion_4, criterion_5,
    criterion_6, criterion_7, criterion_8, criterion_9, criterion_10,
]


def run_all(echo: Callable[[str], None] | None = None) -> list[CriterionResult]:
    results = []
    for crit in CRITERIA:
        try:
            res = crit()
        except Exception as exc:  # noqa: BLE001 - report, keep going
            res = CriterionResult(CRITERIA.index(crit) + 1, crit.__name__, False,
                                  f"raised {type(exc).__name__}: {exc}")
        results.append(res)
        if echo:
            echo(res.line())
    return results
