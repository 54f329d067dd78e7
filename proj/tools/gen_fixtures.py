#!/usr/bin/env python3
"""Regenerates the proof-script fixtures in data/scripts/.

The scripts are plain data; this generator only expands the indexed families
(ranges of twists and multiples) so that the JSON stays reviewable by hand.
"""

import json
import pathlib

OUT = pathlib.Path(__file__).resolve().parent.parent / "data" / "scripts"


def w(terms):
    """{1: 2, 6: 1} -> '2w1+w6'; twists are written separately."""
    parts = []
    for v in sorted(terms):
        c = terms[v]
        if c == 0:
            continue
        sign = "-" if c < 0 else ("+" if parts else "")
        mag = abs(c)
        parts.append(f"{sign}{'' if mag == 1 else mag}w{v}")
    return "".join(parts) or "0"


def S(terms, twist=0):
    body = "O" if not any(terms.values()) else "S^{" + w(terms) + "}"
    return body if twist == 0 else f"{body}({twist})"


def ob(kind, args, provenance, covers=None):
    o = {"kind": kind, "args": args, "provenance": provenance}
    if covers is not None:
        o["covers"] = {"kind": covers[0], "args": covers[1]}
    return o


def write(name, doc):
    OUT.mkdir(parents=True, exist_ok=True)
    (OUT / f"{name}.json").write_text(json.dumps(doc, indent=2) + "\n")


K = "S^{w1+w6}(-1)"  # cohomology of the three-term complex built from T~


# ---------------------------------------------------------------------------
def cohomology():
    return {
        "lemma": "lemma-3.5",
        "obligations": [
            ob("ExtEquals", ["O", "O", ["C[0]"]], "cohomology of O is C in degree 0"),
            ob("ExtEquals", ["O", "S^{w4}(-2)", ["C[-1]"]], "cohomology of S^{w4}(-2) is C in degree 1"),
        ],
    }


def tensor_identities():
    obs = []
    P = "tensor product table"
    for u in range(1, 6):
        for t in range(1, 6):
            rhs = [S({6: u - j, 1: t - j}, j) for j in range(0, min(u, t) + 1)]
            obs.append(ob("TensorEquals", [S({6: u}), S({1: t}), rhs], f"{P}: S^(u w6) x S^(t w1), u={u}, t={t}"))
    obs.append(ob("TensorEquals", ["S^{w4}", "S^{w4}", ["O(3)", "S^{w1+w6}(2)", "S^{w3+w5}(1)", "S^{2w4}"]],
                  f"{P}: S^w4 x S^w4"))
    for t in range(1, 6):
        obs.append(ob("TensorEquals", ["S^{w4}", S({1: t}), [S({4: 1, 1: t}), S({5: 1, 1: t - 1}, 1)]],
                      f"{P}: S^w4 x S^(t w1), t={t}"))
    for t in range(1, 6):
        obs.append(ob("TensorEquals", ["S^{w4}", S({6: t}), [S({4: 1, 6: t}), S({3: 1, 6: t - 1}, 1)]],
                      f"{P}: S^w4 x S^(t w6), t={t}"))
    obs.append(ob("TensorEquals", ["S^{w4}", "S^{w3}", ["S^{w3+w4}", "S^{w1+w5}(1)", "S^{w6}(2)"]],
                  f"{P}: S^w4 x S^w3 (stray comma in the printed table ignored)"))
    obs.append(ob("TensorEquals", ["S^{w4}", "S^{w5}", ["S^{w4+w5}", "S^{w3+w6}(1)", "S^{w1}(2)"]],
                  f"{P}: S^w4 x S^w5"))
    obs.append(ob("TensorEquals", ["S^{w4}", "S^{w1+w6}",
                                   ["S^{w1+w4+w6}", "S^{w5+w6}(1)", "S^{w4}(1)", "S^{w1+w6}(1)"]],
                  f"{P}: S^w4 x S^(w1+w6)"))
    for t in range(1, 6):
        rhs = [S({1: 1, 6: t + 1}), S({1: 1, 5: 1, 6: t - 1}), S({6: t}, 1)]
        prov = f"{P}: S^(t w6) x S^(w1+w6), t={t}"
        if t >= 2:
            rhs.append(S({5: 1, 6: t - 2}, 1))
        else:
            prov += "; the summand with a negative w6 coefficient is meaningless and dropped"
        obs.append(ob("TensorEquals", [S({6: t}), "S^{w1+w6}", rhs], prov))
    for t in range(1, 6):
        obs.append(ob("TensorEquals", [S({6: t}), "S^{w3}", [S({3: 1, 6: t}), S({1: 1, 6: t - 1}, 1)]],
                      f"{P}: S^(t w6) x S^w3, t={t}"))
    for t in range(1, 6):
        obs.append(ob("TensorEquals", ["S^{w5}", S({1: t}), [S({5: 1, 1: t}), S({6: 1, 1: t - 1}, 1)]],
                      f"{P}: S^w5 x S^(t w1), t={t}"))
    obs.append(ob("TensorEquals", ["S^{w5}", "S^{w1+w6}",
                                   ["S^{w1+w5+w6}", "S^{w5}(1)", "S^{2w6}(1)", "S^{w1+w4}"]],
                  f"{P}: S^w5 x S^(w1+w6)"))
    obs.append(ob("TensorEquals", ["S^{w6}", "S^{w3}", ["S^{w3+w6}", "S^{w1}(1)"]], f"{P}: S^w6 x S^w3"))
    obs.append(ob("TensorEquals", ["S^{w6}(-1)", "S^{w1}", ["O", "S^{w1+w6}(-1)"]],
                  "worked tensor example: S^w6(-1) x S^w1"))
    return {"lemma": "lemma-3.6", "obligations": obs}


def acyclic_families():
    """Every family of the acyclicity list, instantiated over its stated ranges."""
    fam = []
    for i in range(1, 11):
        fam.append(("O(-i), 1<=i<=10", S({}, -i)))
    for i in range(1, 11):
        for t in range(1, 6):
            for j in (1, 3, 4, 5, 6):
                fam.append(("S^(t wj)(-i), 1<=i<=10, 1<=t<=5, j in {1,3,4,5,6}", S({j: t}, -i)))
    for i in range(1, 11):
        for b in range(1, 7):
            fam.append(("S^(w1+b w6)(-i-b), 1<=i<=10, 1<=b<=6", S({1: 1, 6: b}, -i - b)))
    for i in range(1, 11):
        for a in range(1, 7):
            fam.append(("S^(a w1+w6)(-i-a), 1<=i<=10, 1<=a<=6 (printed twist -i-b read as -i-a)",
                        S({1: a, 6: 1}, -i - a)))
    for i in range(3, 13):
        fam.append(("S^(w1+w4)(-i), 3<=i<=12", S({1: 1, 4: 1}, -i)))
    for i in range(2, 12):
        fam.append(("S^(w1+w5)(-i), 2<=i<=11", S({1: 1, 5: 1}, -i)))
    for i in range(1, 11):
        fam.append(("S^(w4+w6)(-i), 1<=i<=10", S({4: 1, 6: 1}, -i)))
    for i in range(3, 15):
        fam.append(("S^(w5+w6)(-i), 3<=i<=14", S({5: 1, 6: 1}, -i)))
    for i in range(2, 12):
        for b in range(2, 5):
            fam.append(("S^(w1+w5+b w6)(-i), 2<=i<=11, 2<=b<=4", S({1: 1, 5: 1, 6: b}, -i)))
    for i in (0, 1):
        for a in (2, 3, 4, 5):
            fam.append(("S^(a w6+(a-1) w1)(-i-a), i in {0,1}, a in {2,3,4,5}", S({6: a, 1: a - 1}, -i - a)))
    for i in (1, 2):
        for a in (2, 3, 4, 5):
            fam.append(("S^((a-1) w6+a w1)(-i-a+1), i in {1,2}, a in {2,3,4,5}",
                        S({6: a - 1, 1: a}, -i - a + 1)))
    return fam


def acyclic_list():
    obs = [ob("Acyclic", [b], "acyclic bundles list, family " + f) for f, b in acyclic_families()]
    return {
        "lemma": "lemma-3.7",
        "notes": ["family S^(a w1+w6)(-i-b) has no b in scope; it is instantiated with twist -i-a"],
        "obligations": obs,
    }


def exceptional_irreducibles():
    obs = [ob("ExceptionalIrreducible", ["O"], "O is exceptional")]
    for t in range(1, 6):
        obs.append(ob("ExceptionalIrreducible", [S({1: t})], f"S^(t w1) is exceptional, t={t}"))
    obs += [
        ob("ExtEquals", ["S^{w1}", "S^{w1}", ["C[0]"]], "detailed computation of Ext(S^w1, S^w1)"),
        ob("TensorEquals", ["S^{w6}(-1)", "S^{w1}", ["O", K]], "dual of S^w1 tensored with S^w1"),
        ob("Acyclic", [K], "S^(w1+w6)(-1) acyclic, from the acyclicity list"),
    ]
    return {"lemma": "lemma-3.8", "obligations": obs}


def tangent():
    return {
        "lemma": "lemma-3.9",
        "notes": [
            "the cotangent bundle has semisimplification O(-1) + S^{w4}(-2); O(-1) is the acyclic summand, "
            "O(1) is not acyclic (its sections are the adjoint representation)",
        ],
        "obligations": [
            ob("RankEquals", ["T_X", 21], "21 positive non-parabolic roots"),
            ob("RankEquals", ["S^{w4}(-1)", 20], "degree-1 part of the nilradical"),
            ob("ExtEquals", ["O(1)", "S^{w4}(-1)", ["C[-1]"]], "T_X is the unique nontrivial extension"),
            ob("ExtEquals", ["T_X", "O", ["C[-1]"]], "unique extension of T_X by O"),
            ob("Acyclic", ["O(-1)"], "acyclic summand of the cotangent bundle"),
            ob("ExtEquals", ["O", "O(1)", ["V^{w2}[0]"]], "O(1) is not acyclic"),
            ob("ExtEquals", ["O", "T_X", ["V^{w2}[0]"]], "global sections of T_X are the adjoint representation"),
        ],
    }


def complex_steps(covers=None):
    """The three-term complex T~(-1) -> (V^{w2} + C) x O -> T~ with cohomology S^{w1+w6}(-1)."""
    P = "three-term complex from T~"
    return [
        ob("ExtEquals", ["O", "T~", ["V^{w2}[0]", "C[0]"]], f"{P}: global sections of T~", covers),
        ob("RankEquals", ["T~", 22], f"{P}: rank of T~ is 1+20+1", covers),
        ob("RankEquals", ["T~(-1)", 22], f"{P}: rank of T~(-1)", covers),
        ob("RankEquals", [K, 35], f"{P}: cohomology has rank 79-22-22", covers),
    ]


def rank_arithmetic():
    return {"lemma": "lemma-3.15", "obligations": complex_steps() + [
        ob("ExtEquals", ["O", "T_X", ["V^{w2}[0]"]], "three-term complex from T~: global sections of T_X"),
    ]}


# --- reductions for obligations the semisimplification cannot decide -------

def t_tilde_reductions():
    """Reductions for T~ mirroring the arguments for the block A = <T~, ..., T~(10)>."""
    steps = []
    # T~ lies in the left orthogonal of O: it is the universal extension of T_X by O.
    tgt = ("ExtVanishes", ["T~", "O"])
    steps += [
        ob("ExtEquals", ["T_X", "O", ["C[-1]"]], "T~ is the universal extension of T_X by O", tgt),
        ob("ExceptionalIrreducible", ["O"], "T~ is the universal extension of T_X by O", tgt),
    ]
    # Twist 1 through the complex; twist 10 by Serre duality.
    tgt = ("ExtVanishes", ["T~", "T~(-1)"])
    steps += [
        ob("ExtVanishes", ["T~(1)", "O"], "twist 1 of block A via the three-term complex", tgt),
        ob("ExtVanishes", ["T~(1)", "T~(-1)"], "twist 1 of block A via the three-term complex (case i=2)", tgt),
        ob("ExtVanishes", ["T~(1)", K], "twist 1 of block A via the three-term complex", tgt),
    ] + complex_steps(tgt)
    tgt = ("ExtVanishes", ["T~", "T~(-10)"])
    steps.append(ob("ExtVanishes", ["T~", "T~(-1)"], "twist 10 of block A is Serre dual to twist 1", tgt))
    # Exceptionality of T~ through the complex.
    tgt = ("ExceptionalExtension", ["T~"])
    steps += [
        ob("ExtVanishes", ["T~", "O"], "exceptionality of T~ via the three-term complex", tgt),
        ob("ExtVanishes", ["T~", "T~(-1)"], "exceptionality of T~ via the three-term complex", tgt),
        ob("ExtEquals", ["T~", K, ["C[-1]"]], "exceptionality of T~ via the three-term complex", tgt),
    ] + complex_steps(tgt)
    return steps


def with_o_reductions():
    """Extra reductions once O sits in the same block as T~."""
    return [
        # H(T~(-1)) = Ext(T~, O) because T~(-1) is the dual of T~.
        ob("ExtVanishes", ["T~", "O"], "T~(-1) is the dual of T~, so H(T~(-1)) = Ext(T~, O)",
           ("ExtVanishes", ["O", "T~(-1)"])),
        ob("ExtVanishes", ["O", "T~(-1)"], "Serre duality: Ext(T~, O(-10)) is dual to H(T~(-1))",
           ("ExtVanishes", ["T~", "O(-10)"])),
    ]


def through_complex(source, provenance):
    """Ext(source, T~) = 0 from the three-term complex resolving T~."""
    tgt = ("ExtVanishes", [source, "T~"])
    return [
        ob("ExtVanishes", [source, "O"], provenance, tgt),
        ob("ExtVanishes", [source, K], provenance, tgt),
        ob("ExtVanishes", [source, "T~(-1)"], provenance, tgt),
    ] + complex_steps(tgt)


def blocks():
    notes = []
    obs = t_tilde_reductions()
    obs += [
        ob("ExtVanishes", ["O(1)", "E~"], "exceptionality of E~: E~ lies in the right orthogonal of O(1)"),
        ob("ExtEquals", ["S^{w1}(1)", "E~", ["C[0]"]], "exceptionality of E~ via its semisimplification"),
        ob("ExtVanishes", ["O(1)", "F~"], "exceptionality of F~, similar calculation"),
        ob("ExtEquals", ["S^{w6}(1)", "F~", ["C[0]"]], "exceptionality of F~, similar calculation"),
    ]
    return {
        "lemma": "lemma-4.2",
        "notes": notes,
        "collections": [
            {"name": "A", "block": ["T~"], "partition": [1] * 11},
            {"name": "B", "block": ["E~"], "partition": [1] * 11},
            {"name": "C", "block": ["F~"], "partition": [1] * 11},
        ],
        "obligations": obs,
    }


M0 = ["O", "T~", "S^{w1}", "S^{2w1}"]
N0 = M0 + ["E~", "F~"]
Q0 = N0 + ["S^{3w1}", "S^{4w1}", "S^{5w1}"]


def common_reductions(block):
    obs = t_tilde_reductions() + with_o_reductions()
    for v in block:
        if v not in ("O", "T~"):
            obs += through_complex(v, f"Ext({v}, T~) through the three-term complex")
    return obs


def first4():
    return {
        "lemma": "lemma-4.4",
        "collections": [{"name": "M", "block": M0, "partition": [4] * 11}],
        "obligations": common_reductions(M0),
    }


def first6():
    return {
        "lemma": "lemma-4.5",
        "collections": [{"name": "N", "block": N0, "partition": [6] * 11}],
        "obligations": common_reductions(N0),
    }


def main_theorem():
    return {
        "lemma": "main-theorem",
        "collections": [{"name": "Q", "block": Q0, "partition": [9, 8, 7, 6, 6, 6, 6, 6, 6, 6, 6]}],
        "obligations": [ob("KRankEquals", [72], "rank of the Grothendieck group")] + common_reductions(Q0),
    }


if __name__ == "__main__":
    write("lemma-3.5", cohomology())
    write("lemma-3.6", tensor_identities())
    write("lemma-3.7", acyclic_list())
    write("lemma-3.8", exceptional_irreducibles())
    write("lemma-3.9", tangent())
    write("lemma-3.15", rank_arithmetic())
    write("lemma-4.2", blocks())
    write("lemma-4.4", first4())
    write("lemma-4.5", first6())
    write("main-theorem", main_theorem())
