"""Regenerate the derived files in src/fpgroups/corpus.

The eliminated presentations come from generator elimination on the raw
word lists.  The proofs are written as chains of rewrites that Derivation
turns into explicit conjugate factors, and are re-checked before writing.

With ``--check`` nothing is written; the exit status is 1 if any shipped
file differs from what would be generated.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from fpgroups.parser import parse_presentation, serialize_presentation, serialize_proof
from fpgroups.presentation import eliminate_generator
from fpgroups.proofcheck import Derivation, ProofScript, check_script
from fpgroups.word import Word

CORPUS = Path(__file__).resolve().parents[1] / "src" / "fpgroups" / "corpus"


class Author:
    def __init__(self, p):
        self.p = p
        self.established: dict[str, Word] = {}
        self.steps = []
        self.trivial: dict[str, str] = {}  # generator -> step proving it trivial

    def w(self, text: str) -> Word:
        return self.p.word(text)

    def start(self, lhs: str, rhs: str) -> Derivation:
        return Derivation(self.p, self.established, self.w(lhs), self.w(rhs))

    def finish(self, d: Derivation, name: str):
        step = d.step(name)
        self.steps.append(step)
        self.established[name] = step.relator
        core = step.relator.code
        if len(core) == 1 and not step.rhs.code:
            self.trivial[self.p.alphabet.names[abs(core[0]) - 1]] = name

    def erase(self, d: Derivation, *names: str):
        """Delete every letter of the given (already trivial) generators, left to right."""
        while True:
            code = d.current.code
            hit = next((i for i, x in enumerate(code)
                        if self.p.alphabet.names[abs(x) - 1] in names), None)
            if hit is None:
                return d
            nxt = Word(self.p.alphabet, code[:hit] + code[hit + 1:])
            src = self.trivial[self.p.alphabet.names[abs(code[hit]) - 1]]
            d.to(nxt, src, 1 if code[hit] > 0 else -1)

    def swap(self, d: Derivation, i: int, source, exponent=None):
        """Swap letters i and i+1 of the current word using a commutation source."""
        code = d.current.code
        nxt = Word(self.p.alphabet, code[:i] + (code[i + 1], code[i]) + code[i + 2:])
        for e in ((exponent,) if exponent else (1, -1)):
            try:
                return d.to(nxt, source, e)
            except ValueError:
                continue
        raise ValueError(f"cannot swap at {i} in {d.current} with {source}")


def triviality_proof() -> ProofScript:
    p = parse_presentation((CORPUS / "m_displayed.grp").read_text())
    A = Author(p)
    # relator numbering (1-based) follows m_displayed.grp
    R_AE, R_AQ, R_CA, R_GA, R_GH = 1, 3, 4, 5, 6
    R_CQ_AH, R_C_AH, R_CE, R_G, R_Q2 = 7, 8, 12, 13, 14

    # q is a word in a and c
    d = A.start("q", "c^-1 [c^-1, a]")
    d.to("1", R_CA, -1)
    A.finish(d, "q_def")

    # a and c commute with e, hence so does q
    d = A.start("[q, e]", "1")
    d.to("c^-2 a c a^-1 e q^-1 e^-1", "q_def")
    d.to("c^-2 a c a^-1 e a c^-1 a^-1 c^2 e^-1", "q_def", -1)
    commuters = {"a": R_AE, "c": R_CE}
    while True:
        code = d.current.code
        e_pos = [i for i, x in enumerate(code) if abs(x) == p.alphabet.index("e") + 1]
        if not code:
            break
        # push the first e to the left until it meets its inverse
        i = e_pos[0]
        if i == 0:
            # rotate the trailing e^-1 to the front by moving e^-1 left instead
            i = e_pos[-1]
        left = p.alphabet.names[abs(code[i - 1]) - 1]
        A.swap(d, i - 1, commuters[left])
    A.finish(d, "q_commutes_e")

    # with qe = eq the relation for q^2 collapses to e = 1
    d = A.start("e", "1")
    d.to("e q^2 e^-1 q^-1 e q^-1 e^-1", R_Q2, -1)
    A.swap(d, 4, "q_commutes_e")
    A.finish(d, "e_trivial")

    d = A.start("g", "q^2")
    d.to("e^-1 q e q^-1", R_G)
    A.erase(d, "e")
    A.finish(d, "g_is_q_squared")

    # cq and c both commute with ah, hence q does
    d = A.start("[q, a h]", "1")
    d.to("c^-1 a h c h^-1 a^-1", R_CQ_AH)
    d.to("1", R_C_AH, -1)
    A.finish(d, "q_commutes_ah")

    d = A.start("[g, a h]", "1")
    d.to("q^2 a h g^-1 h^-1 a^-1", "g_is_q_squared")
    d.to("q^2 a h q^-2 h^-1 a^-1", "g_is_q_squared", -1)
    d.to("q a h q^-1 h^-1 a^-1", "q_commutes_ah")
    d.to("1", "q_commutes_ah")
    A.finish(d, "g_commutes_ah")

    # g^-1 h g = ah and g^-1 (ah) g = ah give h = ah
    d = A.start("a", "1")
    d.to("g a h g^-1 h^-1", "g_commutes_ah", -1)
    d.to("1", R_GH, -1)
    A.finish(d, "a_trivial")

    d = A.start("c", "1")
    d.to("a q a^-1 q^-1", R_AQ, -1)
    A.erase(d, "a")
    A.finish(d, "c_trivial")

    d = A.start("h", "1")
    d.to("g a g^-1 a^-1", R_GA, -1)
    A.erase(d, "a")
    A.finish(d, "h_trivial")

    d = A.start("q", "1")
    d.to("c^-2 a c a^-1", R_CA, -1)
    A.erase(d, "a", "c")
    A.finish(d, "q_trivial")

    d = A.start("g", "1")
    d.to("q^2", "g_is_q_squared")
    A.erase(d, "q")
    A.finish(d, "g_trivial")

    return ProofScript("m_displayed.grp", tuple(A.steps))


def e0_equivalence_proofs() -> tuple[ProofScript, ProofScript]:
    """The eliminated and displayed E0~ relator sets imply each other."""
    disp = parse_presentation((CORPUS / "e0_displayed.grp").read_text())
    elim = parse_presentation((CORPUS / "e0_eliminated.grp").read_text())
    r_ae = 1

    A = Author(disp)
    d = A.start("c^2 q c^-1 g^-1 e g a e^-1 a^-1 q^-1 c^-1", "1")
    d.to("c^2 q c^-1 g^-1 e g e^-1 q^-1 c^-1", r_ae, -1)
    d.to("1", 9)
    A.finish(d, "eliminated_r9")
    forward = ProofScript("e0_displayed.grp", tuple(A.steps))

    B = Author(elim)
    d = B.start("[q^-1, c][g^-1, e]", "1")
    d.to("q^-1 c q c^-1 g^-1 e g a e^-1 a^-1", r_ae)
    d.to("1", 9)
    B.finish(d, "displayed_r9")
    backward = ProofScript("e0_eliminated.grp", tuple(B.steps))
    return forward, backward


ELIMINATIONS = {
    "e0_eliminated.grp": ("e0_raw.grp", "fbpdk",
                          "# e0_raw.grp with f, b, p, d, k eliminated (f = a^-1, b = a, p = d^-1, d = c q, k = h)."),
    "m_eliminated.grp": ("m_raw.grp", "fbpdkyx",
                         "# m_raw.grp with f, b, p, d, k eliminated as for E0~, then y = q and x = e^-1 q."),
}


def eliminations() -> dict[str, str]:
    out = {}
    for target, (source, order, comment) in ELIMINATIONS.items():
        p = parse_presentation((CORPUS / source).read_text())
        for g in order:
            p, _ = eliminate_generator(p, g)
        rels = ",\n  ".join(str(r) for r in p.relators)
        text = f"{comment}\n< {', '.join(p.generators)} |\n  {rels}\n>\n"
        assert parse_presentation(text) == p, serialize_presentation(p)
        out[target] = text
        print(f"{target}: {len(p.generators)} generators, {len(p.relators)} relators")
    return out


def proofs() -> dict[str, str]:
    scripts = {"m_triviality.proof": triviality_proof()}
    fwd, bwd = e0_equivalence_proofs()
    scripts["e0_displayed_implies_eliminated.proof"] = fwd
    scripts["e0_eliminated_implies_displayed.proof"] = bwd
    out = {}
    for name, script in scripts.items():
        p = parse_presentation((CORPUS / script.presentation).read_text())
        report = check_script(p, script)
        if not report.accepted:
            sys.exit(f"{name}: {report.summary()}")
        out[name] = serialize_proof(script)
        print(f"{name}: {len(script.steps)} steps, {report.summary()}")
    return out


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--check", action="store_true", help="compare instead of writing")
    args = ap.parse_args(argv)
    files = {**eliminations(), **proofs()}
    stale = []
    for name, text in files.items():
        if args.check:
            if (CORPUS / name).read_text() != text:
                stale.append(name)
        else:
            (CORPUS / name).write_text(text)
    if stale:
        sys.exit(f"out of date: {', '.join(stale)}")


if __name__ == "__main__":
    main()
