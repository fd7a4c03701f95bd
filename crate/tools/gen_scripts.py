#!/usr/bin/env python3
"""Regenerates scripts/*.json. Run from the repository root."""

import json
import pathlib

OUT = pathlib.Path(__file__).resolve().parent.parent / "scripts"

KILLED = "the exceptional spheres meet the sum surface once"


def step(op, args, bind=None, expect=None, note=None, expect_error=None):
    s = {"op": op, "args": args}
    if bind:
        s["bind"] = bind
    if expect:
        s["expect"] = expect
    if expect_error:
        s["expect_error"] = expect_error
    if note:
        s["note"] = note
    return s


def script(name, provenance, steps, params=None):
    doc = {"name": name, "provenance": provenance}
    if params:
        doc["params"] = params
    doc["steps"] = steps
    return doc


def lattice(labels, squares=None, pairs=None, complete=True):
    out = {"labels": labels}
    if squares:
        out["squares"] = {k: v for k, v in squares.items() if v != 0}
    if pairs:
        out["pairs"] = [list(p) for p in pairs]
    if not complete:
        out["complete"] = False
    return out


def surf(label, genus, flags=(), images=None, cls=None):
    s = {"label": label, "genus": genus}
    if cls is not None:
        s["class"] = cls
    if flags:
        s["flags"] = list(flags)
    if images is not None:
        s["images"] = images
    return s


def lag_pair_block(quads):
    """Hyperbolic pairs of lagrangian tori. `quads` holds
    (u, v, w, x, images) where u.w = -1 and v.x = +1, as for the cross tori
    of a product of two tori."""
    labels, pairs, surfaces = [], [], []
    for u, v, w, x, im in quads:
        labels += [u, v, w, x]
        pairs += [(u, w, -1), (v, x, 1)]
        for lab in (u, v, w, x):
            surfaces.append(surf(lab, 1, ["lagrangian"], im[lab]))
    return labels, pairs, surfaces


def t4_cross(a, b, c, d, label=None):
    """The four cross tori of a T^2 x T^2 with loops (a, b) x (c, d)."""
    label = label or (lambda u, v: f"{u}*{v}")
    ac, ad, bc, bd = label(a, c), label(a, d), label(b, c), label(b, d)
    im = {ac: [a, c], ad: [a, d], bc: [b, c], bd: [b, d]}
    return (ac, ad, bd, bc, im)


def sum_core(tori_r, tori_s, sigma_genus=2, g_genus=2, r_genus=1, s_genus=1, sigma_images=None):
    """Sigma, G and tori meeting Sigma once with square -1."""
    labels = ["Sigma", "G"] + tori_r + tori_s
    squares = {t: -1 for t in tori_r + tori_s}
    pairs = [("Sigma", "G", 1)] + [("Sigma", t, 1) for t in tori_r + tori_s]
    surfaces = [
        surf("Sigma", sigma_genus, ["symplectic"], sigma_images),
        surf("G", g_genus, ["symplectic"]),
    ]
    surfaces += [surf(t, r_genus, ["symplectic"]) for t in tori_r]
    surfaces += [surf(t, s_genus, ["symplectic"]) for t in tori_s]
    return labels, squares, pairs, surfaces


def declared(core, blocks=(), complete=True):
    labels, squares, pairs, surfaces = core
    labels, pairs, surfaces = list(labels), list(pairs), list(surfaces)
    for bl, bp, bs in blocks:
        labels += bl
        pairs += bp
        surfaces += bs
    return {"lattice": lattice(labels, squares, pairs, complete), "surfaces": surfaces}


def t4_sharp2(bind, suffix=None):
    """T^4 # 2 CP2bar with the resolved genus-2 surface Sigma of square zero."""
    steps = [
        step("product", {"g": 1, "h": 1}, bind=f"{bind}_t4"),
        step(
            "resolve",
            {"manifold": f"{bind}_t4", "components": ["a*b", "c*d"], "double_points": 1, "label": "Sigma"},
            bind=f"{bind}_r",
            expect={"surfaces.Sigma.genus": 2, "surfaces.Sigma.square": 2},
        ),
        step(
            "blow_up",
            {"manifold": f"{bind}_r", "meets": ["Sigma"], "times": 2},
            bind=bind if suffix is None else f"{bind}_u",
            expect={"e": 2, "sigma": -2, "surfaces.Sigma.square": 0},
        ),
    ]
    if suffix is not None:
        steps.append(step("prime", {"manifold": f"{bind}_u", "suffix": suffix}, bind=bind))
    return steps


def s2t2_sharp4(bind, suffix=None):
    """(S^2 x T^2) # 4 CP2bar with the genus-2 surface 2T + S of square zero."""
    steps = [
        step("product", {"g": 0, "h": 1}, bind=f"{bind}_p"),
        step(
            "resolve",
            {
                "manifold": f"{bind}_p",
                "components": ["x*y", "S2", "x*y"],
                "double_points": 2,
                "label": "Sigma",
                "images": ["x", "y", "x^-1", "y^-1"],
            },
            bind=f"{bind}_r",
            expect={"surfaces.Sigma.genus": 2, "surfaces.Sigma.square": 4},
        ),
        step(
            "blow_up",
            {"manifold": f"{bind}_r", "meets": ["Sigma"], "times": 4},
            bind=bind if suffix is None else f"{bind}_u",
            expect={"e": 4, "sigma": -4, "surfaces.Sigma.square": 0},
        ),
    ]
    if suffix is not None:
        steps.append(step("prime", {"manifold": f"{bind}_u", "suffix": suffix}, bind=bind))
    return steps


def template_pair(src, mid, dst, roles, duals, n="1", core=None):
    """The two twist-knot surgeries in the T^4 spanned by (A, B) x (C, D):
    `D A D^-1 = [D, B^-1]` on the torus A x C and `B = [A^-1, D]^n` on
    B x C. `duals` names the torus labels (AC, BD, BC, AD)."""
    a, b, c, d = roles
    ac, bd, bc, ad = duals
    first = step(
        "surgery",
        {
            "manifold": src,
            "torus": ac,
            "lambda": f"{d}*{a}*{d}^-1",
            "meridian": f"[{d},{b}^-1]",
            "p": 1,
            "q": -1,
            "drop": [f"[{b},{d}]"],
            "drop_classes": [ac, bd],
        },
        bind=mid,
        note=f"relation {d}{a}{d}^-1 = [{d},{b}^-1]",
    )
    args = {
        "manifold": mid,
        "torus": bc,
        "lambda": b,
        "meridian": f"[{a}^-1,{d}]",
        "p": f"-{n}" if n != "1" else -1,
        "q": 1,
        "drop": [f"[{a},{d}]"],
        "drop_classes": [bc, ad],
    }
    if core:
        args["core"] = core
    second = step("surgery", args, bind=dst, note=f"relation {b} = [{a}^-1,{d}]^n")
    return [first, second]


def minimality_steps(x, hyp_note):
    return [
        step(
            "usher_minimality",
            {
                "manifold": x,
                "hypotheses": {
                    "contains_square_minus1_sphere_in_complement": {"holds": False, "provenance": hyp_note},
                },
            },
            bind="X_minimality",
            expect={"status": "Minimal"},
        ),
        step("with_flags", {"manifold": x, "set": {"minimal": True}, "evidence": "X_minimality"}, bind="Xm"),
        step("hk_irreducible", {"manifold": "Xm"}, bind="Xm_irr", expect={"status": "Irreducible"}),
    ]


def homeo_type(t):
    return f"{t[0]} CP2 # {t[1]} CP2bar"


def simply_connected(x, out, t, note=None):
    return [
        step("prove_trivial", {"manifold": x}, bind=f"{x}_pi1", expect={"status": "Proven"}, note=note),
        step("with_flags", {"manifold": x, "set": {"simply_connected": True}, "evidence": f"{x}_pi1"}, bind=out),
        step("freedman_type", {"manifold": out}, bind=f"{out}_type", expect={"type": homeo_type(t), "parity": "odd"}),
    ]


def tail(pre, surgery_args, t, note):
    """X_n: the last surgery of a construction redone with `-n` framing."""
    args = dict(surgery_args, manifold=pre, p="-${n}")
    return [
        step("surgery", args, bind="Xn", expect={"b1": 0, "abelianization": "trivial"}, note=note),
        *simply_connected("Xn", "Xn_sc", t),
    ]


def base_tail(pre, last, t, minimal_note, trivial_note):
    """X (the Luttinger case), its verdicts, then the family member X_n."""
    x_args = dict(last["args"])
    return [
        last,
        *simply_connected("X", "Xs", t, trivial_note),
        *minimality_steps("Xs", minimal_note),
        *tail(pre, x_args, t, last.get("note")),
    ]


# ---------------------------------------------------------------------------
# CP2 # 7 CP2bar


def cp2_7():
    core = sum_core(["R1", "R2"], ["S1", "S2", "S3", "S4"], sigma_images=["a", "b", "c", "d"])
    lag = lag_pair_block([t4_cross("a", "b", "c", "d")])
    steps = t4_sharp2("Y") + s2t2_sharp4("Yp")
    steps.append(
        step(
            "fiber_sum",
            {
                "left": "Y",
                "left_surface": "Sigma",
                "right": "Yp",
                "right_surface": "Sigma",
                "name": "X'",
                "gluing": "identity",
                "meridian_killed": {"left": KILLED, "right": KILLED},
                "declared": declared(core, [lag]),
            },
            bind="Xp",
            expect={"e": 10, "sigma": -6, "b1": 2, "b2": 12, "abelianization": "Z^2", "lattice_complete": True},
            note="R_i = E_i # T', S_j = T # E'_j, G = T # T' with T = a*b and T' = x*y; the cross tori of T^4 survive",
        )
    )
    steps.append(step("reverse_engineering", {"manifold": "Xp", "target": [10, -6]}, bind="Xp_checks", expect={"all_pass": True}))
    first, last = template_pair("Xp", "Xpre", "X", ("a", "b", "c", "d"), ("a*c", "b*d", "b*c", "a*d"), core="Lambda")
    last["expect"] = {"e": 10, "sigma": -6, "b1": 0, "b2": 8, "lattice_complete": True, "flags": ["symplectic"]}
    steps.append(first)
    steps += base_tail(
        "Xpre",
        last,
        (1, 7),
        "T^4 # 2 and (S^2 x T^2) # 4; every exceptional sphere meets the sum surface",
        "b = [a^-1,d] with a = x, b = y, c = x^-1, d = y^-1",
    )
    return script(
        "cp2_7",
        "exotic CP2 # 7 CP2bar: T^4 # 2 CP2bar summed with (S^2 x T^2) # 4 CP2bar, then two twist surgeries",
        steps,
        params={"n": 1},
    )


# ---------------------------------------------------------------------------
# CP2 # 9 CP2bar


def cp2_9():
    core = sum_core(["R1", "R2", "R3", "R4"], ["S1", "S2", "S3", "S4"], sigma_images=["x", "y", "x^-1", "y^-1"])
    steps = s2t2_sharp4("Y") + s2t2_sharp4("W", suffix="'")
    phi = {"a": "a'*b'", "b": "a'^-1", "c": "c'", "d": "d'"}
    steps.append(
        step(
            "fiber_sum",
            {
                "left": "Y",
                "left_surface": "Sigma",
                "right": "W",
                "right_surface": "Sigma",
                "name": "X",
                "gluing": phi,
                "meridian_killed": {"left": KILLED, "right": KILLED},
                "declared": declared(core),
            },
            bind="XA",
            expect={"e": 12, "sigma": -8, "b1": 0, "b2": 10, "abelianization": "trivial", "lattice_complete": True},
            note="twisted gluing a -> a'b', b -> a'^-1",
        )
    )
    steps += simply_connected("XA", "XAs", (1, 9), "x = x'y', y = x'^-1, x = x', y = y'")
    rim = (
        ["R_a", "R_b", "Sigma_a", "Sigma_b"],
        [("R_a", "Sigma_b", 1), ("R_b", "Sigma_a", 1)],
        [
            surf("R_a", 1, ["lagrangian"]),
            surf("R_b", 1, ["lagrangian"]),
            surf("Sigma_a", 1, ["lagrangian"]),
            surf("Sigma_b", 1, ["lagrangian"]),
        ],
    )
    steps.append(
        step(
            "fiber_sum",
            {
                "left": "Y",
                "left_surface": "Sigma",
                "right": "W",
                "right_surface": "Sigma",
                "name": "X'",
                "gluing": "identity",
                "meridian_killed": {"left": KILLED, "right": KILLED},
                "declared": declared(core, [rim]),
            },
            bind="Xp",
            expect={"e": 12, "sigma": -8, "b1": 2, "b2": 14, "abelianization": "Z^2", "lattice_complete": True},
            note="rim tori R_a, R_b and the tori Sigma_a, Sigma_b made of two cylinders (arc x circle) each",
        )
    )
    steps.append(step("reverse_engineering", {"manifold": "Xp", "target": [12, -8]}, bind="Xp_checks", expect={"all_pass": True}))
    steps.append(
        step(
            "surgery",
            {
                "manifold": "Xp",
                "torus": "R_a",
                "lambda": "x",
                "meridian": "y*y'^-1",
                "p": -1,
                "q": 1,
                "drop_classes": ["R_a", "Sigma_b"],
            },
            bind="Xpre",
            expect={"b1": 1},
            note="the meridian of R_a runs along b on one side and back along b' on the other",
        )
    )
    last = step(
        "surgery",
        {
            "manifold": "Xpre",
            "torus": "R_b",
            "lambda": "y",
            "meridian": "x*x'^-1",
            "p": -1,
            "q": 1,
            "drop_classes": ["R_b", "Sigma_a"],
            "core": "Lambda",
        },
        bind="X",
        expect={"e": 12, "sigma": -8, "b1": 0, "b2": 10, "lattice_complete": True, "flags": ["symplectic"]},
        note="together the two rim surgeries reglue by a -> a'b', b -> a'^-1",
    )
    steps += base_tail(
        "Xpre",
        last,
        (1, 9),
        "two copies of (S^2 x T^2) # 4; every exceptional sphere meets the sum surface",
        "x = 1 and y = 1 from the two rim surgeries",
    )
    return script(
        "cp2_9",
        "exotic CP2 # 9 CP2bar: two copies of (S^2 x T^2) # 4 CP2bar, by a twisted gluing and by rim-torus surgeries",
        steps,
        params={"n": 1},
    )


# ---------------------------------------------------------------------------
# CP2 # 5 CP2bar


def cp2_5():
    core = sum_core(["R1", "R2"], ["S1", "S2"], sigma_images=["a", "b", "c", "d"])
    lag = lag_pair_block([t4_cross("a", "b", "c", "d"), t4_cross("a'", "b'", "c'", "d'")])
    steps = t4_sharp2("Y") + t4_sharp2("W", suffix="'")
    phi = {"a": "c'", "b": "d'", "c": "a'", "d": "b'"}
    steps.append(
        step(
            "fiber_sum",
            {
                "left": "Y",
                "left_surface": "Sigma",
                "right": "W",
                "right_surface": "Sigma",
                "name": "X'",
                "gluing": phi,
                "meridian_killed": {"left": KILLED, "right": KILLED},
                "declared": declared(core, [lag]),
            },
            bind="Xp",
            expect={"e": 8, "sigma": -4, "b1": 4, "b2": 14, "abelianization": "Z^4", "lattice_complete": True},
            note="gluing a -> c', b -> d', c -> a', d -> b'",
        )
    )
    steps.append(step("reverse_engineering", {"manifold": "Xp", "target": [8, -4]}, bind="Xp_checks", expect={"all_pass": True}))
    p = ("a'", "b'", "c'", "d'")
    steps += template_pair("Xp", "X1", "X2", p, ("a'*c'", "b'*d'", "b'*c'", "a'*d'"))
    first, last = template_pair("X2", "Xpre", "X", ("a", "b", "c", "d"), ("a*c", "b*d", "b*c", "a*d"), core="Lambda")
    last["expect"] = {"e": 8, "sigma": -4, "b1": 0, "b2": 6, "lattice_complete": True, "flags": ["symplectic"]}
    steps.append(first)
    steps += base_tail(
        "Xpre",
        last,
        (1, 5),
        "two copies of T^4 # 2; every exceptional sphere meets the sum surface",
        "the twist relations on both sides with a = c', b = d', c = a', d = b'",
    )
    return script(
        "cp2_5",
        "exotic CP2 # 5 CP2bar: two copies of T^4 # 2 CP2bar with a twisted gluing, then four twist surgeries",
        steps,
        params={"n": 1},
    )


# ---------------------------------------------------------------------------
# CP2 # 3 CP2bar


def cp2_3():
    steps = [
        step("product", {"g": 1, "h": 1}, bind="T1_0"),
        step("prime", {"manifold": "T1_0", "suffix": "1"}, bind="T1"),
        step("product", {"g": 1, "h": 1}, bind="T2_0"),
        step("prime", {"manifold": "T2_0", "suffix": "2"}, bind="T2"),
    ]
    y_lag = lag_pair_block([t4_cross("a1", "b1", "c1", "d1"), t4_cross("a1", "b1", "c2", "d2")])
    y_core = (
        ["T", "Sigma2"],
        {},
        [("T", "Sigma2", 1)],
        [surf("T", 1, ["symplectic"], ["a1", "b1"]), surf("Sigma2", 2, ["symplectic"], ["c1", "d1", "c2", "d2"])],
    )
    steps.append(
        step(
            "fiber_sum",
            {
                "left": "T1",
                "left_surface": "a*b",
                "right": "T2",
                "right_surface": "a*b",
                "name": "T2 x Sigma2",
                "gluing": "identity",
                "complements": {
                    "left": {"drop": ["[c1,d1]"], "meridian": "[c1,d1]", "provenance": "T^2 x (T^2 minus a disk)"},
                    "right": {"drop": ["[c2,d2]"], "meridian": "[c2,d2]", "provenance": "T^2 x (T^2 minus a disk)"},
                },
                "declared": declared(y_core, [y_lag]),
            },
            bind="Y0",
            expect={"e": 0, "sigma": 0, "b1": 6, "b2": 10, "lattice_complete": True},
            note="the meridians glue to [c1,d1][c2,d2] = 1",
        )
    )
    steps.append(step("eliminate", {"manifold": "Y0", "identifications": {"a2": "a1", "b2": "b1"}}, bind="Y"))
    steps += t4_sharp2("W0")
    steps.append(step("prime", {"manifold": "W0", "suffix": "3"}, bind="W"))
    core = sum_core(["R1", "R2"], [], sigma_images=["c1", "d1", "c2", "d2"])
    lag = lag_pair_block(
        [t4_cross("a1", "b1", "c1", "d1"), t4_cross("a1", "b1", "c2", "d2"), t4_cross("c1", "d1", "c2", "d2")]
    )
    steps.append(
        step(
            "fiber_sum",
            {
                "left": "Y",
                "left_surface": "Sigma2",
                "right": "W",
                "right_surface": "Sigma",
                "name": "X'",
                "gluing": "identity",
                "meridian_killed": {"right": KILLED},
                "declared": declared(core, [lag]),
            },
            bind="Xp0",
            expect={"e": 6, "sigma": -2, "b1": 6, "b2": 16, "abelianization": "Z^6", "lattice_complete": True},
            note="G = T # T3 and R_i = T # E_i with T the fiber torus a1*b1 and T3 = a3*b3",
        )
    )
    steps.append(
        step(
            "eliminate",
            {"manifold": "Xp0", "identifications": {"a3": "c1", "b3": "d1", "c3": "c2", "d3": "d2"}},
            bind="Xp",
            expect={"generators": 6, "abelianization": "Z^6"},
        )
    )
    steps.append(step("reverse_engineering", {"manifold": "Xp", "target": [6, -2]}, bind="Xp_checks", expect={"all_pass": True}))
    steps += template_pair("Xp", "X1", "X2", ("c1", "d1", "a1", "b1"), ("a1*c1", "b1*d1", "a1*d1", "b1*c1"))
    steps += template_pair("X2", "X3", "X4", ("c2", "d2", "c1", "d1"), ("c1*c2", "d1*d2", "c1*d2", "d1*c2"))
    first, last = template_pair(
        "X4", "Xpre", "X", ("a1", "b1", "c2", "d2"), ("a1*c2", "b1*d2", "b1*c2", "a1*d2"), core="Lambda"
    )
    last["expect"] = {"e": 6, "sigma": -2, "b1": 0, "b2": 4, "lattice_complete": True, "flags": ["symplectic"]}
    steps.append(first)
    steps += base_tail(
        "Xpre",
        last,
        (1, 3),
        "T^2 x Sigma_2 and T^4 # 2; every exceptional sphere meets the sum surface",
        "the six twist relations in the loops of T^2 x Sigma_2",
    )
    return script(
        "cp2_3",
        "exotic CP2 # 3 CP2bar: T^2 x Sigma_2 summed with T^4 # 2 CP2bar, then six twist surgeries",
        steps,
        params={"n": 1},
    )


# ---------------------------------------------------------------------------
# 3 CP2 # 5 CP2bar


def three_cp2_5():
    core = sum_core(["R1", "R2"], [], g_genus=3, r_genus=2, sigma_images=["a1", "b1", "a2", "b2"])
    lag = lag_pair_block(
        [
            t4_cross("a1", "b1", "a2", "b2"),
            t4_cross("a1", "b1", "c1", "d1"),
            t4_cross("a1", "b1", "c2", "d2"),
            t4_cross("a2", "b2", "c1", "d1"),
            t4_cross("a2", "b2", "c2", "d2"),
        ]
    )
    steps = [step("product", {"g": 2, "h": 2}, bind="P")]
    steps += t4_sharp2("W")
    steps.append(
        step(
            "fiber_sum",
            {
                "left": "P",
                "left_surface": "Sigma_a",
                "right": "W",
                "right_surface": "Sigma",
                "name": "X'",
                "gluing": "identity",
                "meridian_killed": {"right": KILLED},
                "declared": declared(core, [lag]),
            },
            bind="Xp0",
            expect={"e": 10, "sigma": -2, "b1": 8, "b2": 24, "lattice_complete": True},
            note="G = Sigma_c # T' (genus 3) and R_i = Sigma_c # E_i (genus 2)",
        )
    )
    steps.append(
        step(
            "eliminate",
            {"manifold": "Xp0", "identifications": {"a": "a1", "b": "b1", "c": "a2", "d": "b2"}},
            bind="Xp",
            expect={"abelianization": "Z^8"},
        )
    )
    steps.append(
        step(
            "derive_relation",
            {"manifold": "Xp", "relation": "[c1,d1] = 1"},
            expect={"status": "Refuted"},
            note="the group of X' is not abelian",
        )
    )
    steps.append(step("reverse_engineering", {"manifold": "Xp", "target": [10, -2]}, bind="Xp_checks", expect={"all_pass": True}))
    steps += template_pair("Xp", "X1", "X2", ("a2", "b2", "c2", "d2"), ("a2*c2", "b2*d2", "b2*c2", "a2*d2"))
    steps += template_pair("X2", "X3", "X4", ("c1", "d1", "a2", "b2"), ("a2*c1", "b2*d1", "a2*d1", "b2*c1"))
    steps += template_pair("X4", "X5", "X6", ("c2", "d2", "a1", "b1"), ("a1*c2", "b1*d2", "a1*d2", "b1*c2"))
    first, last = template_pair(
        "X6", "Xpre", "X", ("a1", "b1", "c1", "d1"), ("a1*c1", "b1*d1", "b1*c1", "a1*d1"), core="Lambda"
    )
    last["expect"] = {"e": 10, "sigma": -2, "b1": 0, "b2": 8, "lattice_complete": True, "flags": ["symplectic"]}
    steps.append(first)
    steps += base_tail(
        "Xpre",
        last,
        (3, 5),
        "Sigma_2 x Sigma_2 and T^4 # 2; every exceptional sphere meets the sum surface",
        "eight twist relations, two in each T^4 of Sigma_2 x Sigma_2",
    )
    return script(
        "three_cp2_5",
        "exotic 3 CP2 # 5 CP2bar: Sigma_2 x Sigma_2 summed with T^4 # 2 CP2bar, then eight twist surgeries",
        steps,
        params={"n": 1},
    )


# ---------------------------------------------------------------------------
# Sums with T^4 # 2 and (S^2 x T^2) # 4 that raise b2+


def lattice_jump():
    steps = [step("import", {"script": "cp2_3.json", "binding": "Xn_sc", "params": {"n": "${n}"}}, bind="X")]
    steps += t4_sharp2("T", suffix="'")
    core = sum_core(["R1", "R2"], [], g_genus=3, r_genus=2, sigma_images=["c1", "d1", "c2", "d2"])
    lag = lag_pair_block([t4_cross("a'", "b'", "c'", "d'")])
    steps.append(
        step(
            "fiber_sum",
            {
                "left": "X",
                "left_surface": "Sigma",
                "right": "T",
                "right_surface": "Sigma",
                "name": "Z'",
                "gluing": "identity",
                "meridian_killed": {"right": KILLED},
                "declared": declared(core, [lag], complete=False),
            },
            bind="Zp",
            expect={"e": 12, "sigma": -4, "b1": 0, "b2": 10, "abelianization": "trivial", "lattice_complete": False},
        )
    )
    steps += simply_connected("Zp", "Zps", (3, 7))
    steps.append(step("delta", {"from": "X", "to": "Zps"}, expect={"e": 6, "sigma": -2}))
    steps += s2t2_sharp4("U", suffix="'")
    core = sum_core(["R1", "R2"], [], g_genus=3, r_genus=2, sigma_images=["c1", "d1", "c2", "d2"])
    steps.append(
        step(
            "fiber_sum",
            {
                "left": "X",
                "left_surface": "Sigma",
                "right": "U",
                "right_surface": "Sigma",
                "name": "Z''",
                "gluing": "identity",
                "meridian_killed": {"right": KILLED},
                "declared": declared(core, complete=False),
            },
            bind="Zpp",
            expect={"e": 14, "sigma": -6, "b1": 0, "b2": 12, "abelianization": "trivial"},
        )
    )
    steps += simply_connected("Zpp", "Zpps", (3, 9))
    steps.append(step("delta", {"from": "X", "to": "Zpps"}, expect={"e": 8, "sigma": -4}))
    return script(
        "lattice_jump",
        "raising b2+ by two: the exotic CP2 # 3 CP2bar summed with T^4 # 2 CP2bar and with (S^2 x T^2) # 4 CP2bar",
        steps,
        params={"n": 1},
    )


def sum_arithmetic():
    steps = []
    for k in range(1, 5):
        b2m = 2 * k + 1
        steps.append(step("numbers", {"e": 2 + 1 + b2m, "sigma": 1 - b2m}, bind=f"X{k}"))
        steps.append(
            step(
                "numbers_sum",
                {"left": f"X{k}", "right": [12, -8], "genus": 1},
                bind=f"S{k}",
                expect={"e": 2 + 3 + 2 * k + 11, "sigma": 3 - (2 * k + 11)},
                note=f"the sum with E(1) along a torus has the numbers of 3 CP2 # {2 * k + 11} CP2bar",
            )
        )
    return script("sum_arithmetic", "fiber sums of the exotic CP2 # (2k+1) CP2bar with E(1) along a torus", steps)


def t4_templates():
    steps = []
    for n in range(1, 6):
        steps.append(
            step(
                "twist_template",
                {"n": n},
                bind=f"T{n}",
                expect={"e": 0, "sigma": 0, "b1": 2, "abelianization": "Z^2"},
            )
        )
        steps.append(
            step(
                "relators_equal",
                {
                    "manifold": f"T{n}",
                    "generators": ["a", "b", "c", "d"],
                    "relators": ["[a,b]", "[c,a]", "[c,b]", "[c,d]", "d*a*d^-1 = [d,b^-1]", f"b = [a^-1,d]^{n}"],
                },
                expect={"value": True},
            )
        )
    for rel in ["a*b = d*a*d^-1", "a^-1 = d*b*d^-1"]:
        steps.append(
            step("derive_relation", {"manifold": "T1", "relation": rel}, expect={"status": "Proven"}, note="monodromy of the trefoil")
        )
    steps.append(step("product", {"g": 1, "h": 1}, bind="T4"))
    steps.append(
        step(
            "surgery",
            {
                "manifold": "T4",
                "torus": "a*c",
                "lambda": "d*a*d^-1",
                "meridian": "[d,b^-1]",
                "p": 1,
                "q": -1,
                "drop": ["[b,d]"],
                "drop_classes": ["a*c", "b*d"],
            },
            bind="M1",
        )
    )
    steps.append(
        step(
            "relators_equal",
            {
                "manifold": "M1",
                "relators": ["[a,b]", "[c,d]", "[a,c]", "[a,d]", "[b,c]", "d*a*d^-1 = [d,b^-1]"],
            },
            expect={"value": True},
            note="a (1,-1) spec adds meridian * lambda^-1",
        )
    )
    steps.append(
        step(
            "surgery",
            {"manifold": "M1", "torus": "b*c", "lambda": "b", "meridian": "[a^-1,d]", "p": -3, "q": 1, "drop": ["[a,d]"], "drop_classes": ["b*c", "a*d"]},
            bind="M3",
        )
    )
    steps.append(
        step(
            "relators_equal",
            {
                "manifold": "M3",
                "relators": ["[a,b]", "[c,d]", "[a,c]", "[b,c]", "d*a*d^-1 = [d,b^-1]", "b = [a^-1,d]^3"],
            },
            expect={"value": True},
            note="a (-n,1) spec adds meridian^-n * lambda",
        )
    )
    steps.append(step("snapshot", {"manifold": "M3"}, expect={"flags": []}, note="-3 surgery is not Luttinger"))
    return script("t4_templates", "S^1 x M_K for twist knots K from two surgeries on T^4", steps)


# ---------------------------------------------------------------------------
# Families


FAMILIES = {
    # name: (base script, homeo type, X0 tori, g genus, r genus, canonical, lambda words)
    "family_cp2_3": ("cp2_3", (1, 3), ["R1", "R2"], 2, 1, "2Sigma + R1 + R2"),
    "family_cp2_5": ("cp2_5", (1, 5), ["R1", "R2", "S1", "S2"], 2, 1, "2Sigma - 2G + R1 + R2 + S1 + S2"),
    "family_cp2_7": (
        "cp2_7",
        (1, 7),
        ["R1", "R2", "S1", "S2", "S3", "S4"],
        2,
        1,
        "2Sigma - 4G + R1 + R2 + S1 + S2 + S3 + S4",
    ),
    "family_cp2_9": (
        "cp2_9",
        (1, 9),
        ["R1", "R2", "R3", "R4", "S1", "S2", "S3", "S4"],
        2,
        1,
        "2Sigma - 6G + R1 + R2 + R3 + R4 + S1 + S2 + S3 + S4",
    ),
    "family_3cp2_5": ("three_cp2_5", (3, 5), ["R1", "R2"], 3, 2, "4Sigma + R1 + R2"),
}

# The 0-surgery on the core torus Lambda gives back the manifold before the
# last surgery: its relator is the old meridian.
ZERO = {
    "cp2_3": ("[a1^-1,d2]", "b1", "[a1^-1,d2]^-1*b1"),
    "cp2_5": ("[a^-1,d]", "b", "[a^-1,d]^-1*b"),
    "cp2_7": ("[a^-1,d]", "b", "[a^-1,d]^-1*b"),
    "cp2_9": ("x*x'^-1", "y", "(x*x'^-1)^-1*y"),
    "three_cp2_5": ("[a1^-1,d1]", "b1", "[a1^-1,d1]^-1*b1"),
}


def euler(t):
    return 2 + t[0] + t[1], t[0] - t[1]


def k_square(t):
    e, s = euler(t)
    return 2 * e + 3 * s


def proviso(t):
    if t[0] != 1:
        return None
    return {"text": "b2+(X)=1 and b2-(X) <= 9", "holds": t[1] <= 9}


def family(name):
    base, t, tori, g_genus, r_genus, canonical = FAMILIES[name]
    e, s = euler(t)
    b2 = t[0] + t[1]
    steps = []
    for n in range(1, 6):
        flags = ["symplectic", "simply_connected"] if n == 1 else ["simply_connected"]
        steps.append(
            step(
                "import",
                {"script": f"{base}.json", "binding": "Xn_sc", "params": {"n": n}},
                bind=f"X{n}",
                expect={"e": e, "sigma": s, "b2": b2, "abelianization": "trivial", "flags": flags},
            )
        )
    lam, mu, rel = ZERO[base]
    steps.append(step("import", {"script": f"{base}.json", "binding": "X"}, bind="X"))
    steps.append(
        step(
            "surgery",
            {
                "manifold": "X",
                "torus": "Lambda",
                "lambda": lam,
                "meridian": mu,
                "p": 0,
                "q": 1,
                "framing": "zero_framing",
                "drop": [rel],
            },
            bind="X0s",
            expect={"b1": 1, "abelianization": "Z"},
            note="0-surgery on the core torus along the old meridian",
        )
    )
    core = sum_core(tori, [], g_genus=g_genus, r_genus=r_genus)
    pair = (["L1", "L2"], [("L1", "L2", 1)], [surf("L1", 1, ["lagrangian"]), surf("L2", 1, ["lagrangian"])])
    blocks = [pair]
    if base == "three_cp2_5":
        for i in (3, 5):
            blocks.append(
                ([f"L{i}", f"L{i + 1}"], [(f"L{i}", f"L{i + 1}", 1)], [surf(f"L{i}", 1, ["lagrangian"]), surf(f"L{i + 1}", 1, ["lagrangian"])])
            )
    d = declared(core, blocks)
    steps.append(step("declare", {"manifold": "X0s", "name": "X0", **d}, bind="X0d", expect={"b2": b2 + 2}))
    steps.append(
        step(
            "with_flags",
            {
                "manifold": "X0d",
                "set": {"symplectic": True},
                "provenance": "the 0-surgery undoes the last surgery, leaving only Luttinger surgeries",
            },
            bind="X0",
        )
    )
    steps.append(
        step(
            "enumerate",
            {"manifold": "X0"},
            bind="K0",
            expect={"count": 2, "simple_type_square": k_square(t), "classes": [neg(canonical), canonical]},
        )
    )
    steps.append(step("attach_sw", {"manifold": "X0", "classes": "K0", "canonical": canonical, "value": 1}, bind="X0sw"))
    steps.append(step("fps_family", {"manifold": "X0sw"}, expect={"status": "PairwiseDistinct"}))
    steps.append(
        step(
            "family_sw",
            {"base_value": 1, "x0": "X0sw", "class": canonical, "members": [1, 2, 3, 4, 5], "member": "X"},
            bind="Xn_sw",
            expect={"values": [1, 2, 3, 4, 5], "sw_proviso": proviso(t)},
            note="SW(X_n) at the canonical class is n",
        )
    )
    steps.append(
        step(
            "gap_check",
            {"manifold": "X", "classes": [canonical, neg(canonical)]},
            bind="X_gap",
            expect={"status": "Minimal", "difference_squares": [4 * k_square(t)]},
        )
    )
    return script(name, f"the family X_n for {base} and its Seiberg-Witten invariants", steps)


def neg(c):
    out = []
    for i, tok in enumerate(c.split()):
        if tok == "+":
            out.append("-")
        elif tok == "-":
            out.append("+")
        elif i == 0:
            out.append(tok[1:] if tok.startswith("-") else "-" + tok)
        else:
            out.append(tok)
    return " ".join(out)


def family_3cp2_7():
    steps = []
    for n in range(1, 6):
        steps.append(
            step(
                "import",
                {"script": "lattice_jump.json", "binding": "Zps", "params": {"n": n}},
                bind=f"Z{n}",
                expect={"e": 12, "sigma": -4, "b2plus": 3, "b2minus": 7, "abelianization": "trivial"},
            )
        )
    steps.append(step("product", {"g": 1, "h": 1}, bind="T4"))
    steps.append(step("seed_sw", {"manifold": "T4", "values": [{"class": "0", "value": 1}]}, bind="T4sw"))
    steps.append(
        step(
            "blow_up",
            {"manifold": "T4sw", "times": 2},
            bind="T",
            expect={"sw": {"E1 + E2": 1, "E1 - E2": 1, "-E1 + E2": 1, "-E1 - E2": 1}},
            note="T^4 # 2 CP2bar has four basic classes, each with value 1",
        )
    )
    steps.append(step("import", {"script": "family_cp2_3.json", "binding": "Xn_sw"}, bind="Xn_sw"))
    steps.append(
        step(
            "sum_sw",
            {
                "left": "Xn_sw",
                "right": 1,
                "hypotheses": {"both_simple_type": True, "genus_two_square_zero": True, "one_class_per_side": True},
            },
            bind="Zn_sw",
            expect={"values": [1, 2, 3, 4, 5]},
            note="SW of Z'_n at the glued canonical class is n",
        )
    )
    return script("family_3cp2_7", "the family Z'_n in 3 CP2 # 7 CP2bar", steps)


def write(doc):
    path = OUT / f"{doc['name']}.json"
    path.write_text(json.dumps(doc, indent=2) + "\n")


if __name__ == "__main__":
    OUT.mkdir(exist_ok=True)
    for f in (cp2_3, cp2_5, cp2_7, cp2_9, three_cp2_5, lattice_jump, sum_arithmetic, t4_templates, family_3cp2_7):
        write(f())
    for name in FAMILIES:
        write(family(name))
