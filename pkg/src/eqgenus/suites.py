"""Named verification suites.

Every check is a plain JSON-able dict, so a failing check doubles as its own
replayable counterexample: ``run_check(check)`` evaluates it from scratch.
"""

from __future__ import annotations

import random
import time
from fractions import Fraction
from typing import Callable, Iterable

from .bundles import KRoot, Line, bundle_to_json
from .algebra import YPoly
from .equivariant import (
    ClassEuler,
    ClassOne,
    component_signatures,
    equivariant_integral,
    genus_spec,
    higher_vanishing_check,
    limit_at_cusp,
    linear_cp_action,
    required_cover,
    rigidity_report,
    structure_checks,
)
from .errors import EqGenusError
from .genera import SIGNATURE, TODD, chi_y, index
from .scenario import parse_scenario, run_equivariant, run_genus
from .serialize import to_json

DEFAULT_SEED = 7
SUITES = ("classical", "localization", "rigidity", "vanishing", "structure")

# weight vectors used throughout the rigidity and cusp-limit checks
SUITE_WEIGHTS = (
    (0, 1),
    (0, 0, 1),
    (0, 1, 2),
    (0, 1, 2, 3),
    (0, 0, 1, 1),
    (-2, 0, 3, 3),
    (0, 0, 0, 1, 1, 1),
    (0, 0, 1, 1, 2, 2),
    (0, 1, 2, 3, 4, 5),
    (1, -1, 2, -2, 0),
)

SPIN_WEIGHTS = {
    3: ((0, 1, 2, 3), (0, 0, 1, 1), (-2, 0, 3, 3), (0, 1, 1, 4), (0, 2, 3, 7), (1, 1, 1, 2)),
    5: (
        (0, 0, 0, 1, 1, 1),
        (0, 0, 1, 1, 2, 2),
        (0, 1, 2, 3, 4, 5),
        (0, 1, 2, 3, 4, 7),
        (-3, -1, 0, 2, 2, 5),
    ),
}


def random_weights(rng: random.Random, max_n: int = 5, bound: int = 5) -> list[int]:
    n = rng.randint(1, max_n)
    while True:
        w = [rng.randint(-bound, bound) for _ in range(n + 1)]
        if len(set(w)) > 1:
            return w


def _scen(space=None, weights=None, **rest) -> dict:
    out = {}
    if space is not None:
        out["space"] = space
    if weights is not None:
        out["action"] = {"type": "linear_cp", "weights": list(weights)}
    out.update(rest)
    return out


def _cp(n):
    return {"type": "cp", "n": n}


K3 = {"type": "hypersurface", "m": 2, "d": 4}


def _binomial_poly(a: int, n: int) -> Fraction:
    """a(a-1)...(a-n+1)/n!, valid for negative a as well."""
    out = Fraction(1)
    for i in range(n):
        out *= Fraction(a - i, i + 1)
    return out


def _chi_y_cp(n: int) -> YPoly:
    return YPoly([(-1) ** i for i in range(n + 1)], n)


# -- criteria ------------------------------------------------------------------------


def classical_table(seed: int) -> list[dict]:
    checks = []
    for n in range(1, 6):
        checks.append({"id": f"sign(CP{n})", "kind": "value",
                       "scenario": _scen(_cp(n), genus="signature"),
                       "expected": to_json(1 if n % 2 == 0 else 0)})
    for n in range(1, 7):
        checks.append({"id": f"Td(CP{n})", "kind": "value",
                       "scenario": _scen(_cp(n), genus="todd"), "expected": to_json(1)})
    for n in range(1, 6):
        checks.append({"id": f"chi_y(CP{n})", "kind": "value",
                       "scenario": _scen(_cp(n), genus="chi_y"), "expected": to_json(_chi_y_cp(n))})
    checks.append({"id": "ahat(CP2)", "kind": "value", "scenario": _scen(_cp(2), genus="ahat"),
                   "expected": to_json(Fraction(-1, 8))})
    for g, v in (("euler", 24), ("signature", -16), ("ahat", 2), ("todd", 2)):
        checks.append({"id": f"{g}(K3)", "kind": "value", "scenario": _scen(K3, genus=g),
                       "expected": to_json(v)})
    return checks


def riemann_roch(seed: int) -> list[dict]:
    return [
        {"id": f"Td(CP{n},O({k}))", "kind": "value",
         "scenario": _scen(_cp(n), genus="todd", bundle=bundle_to_json(Line((k,)))),
         "expected": to_json(_binomial_poly(n + k, n))}
        for n in range(1, 7)
        for k in range(-8, 9)
    ]


def kroot_vanishing(seed: int) -> list[dict]:
    return [
        {"id": f"Td(CP{n},K^{a}/{N})", "kind": "value",
         "scenario": _scen(_cp(n), genus="todd", bundle=bundle_to_json(KRoot(N, a))),
         "expected": to_json(0)}
        for n, N in ((3, 2), (3, 4), (5, 2), (5, 3), (5, 6))
        for a in range(1, N)
    ]


def localization(seed: int) -> list[dict]:
    rng = random.Random(seed)
    return [
        {"id": f"localization#{i}:{w}", "kind": "localization", "weights": w}
        for i, w in enumerate(random_weights(rng) for _ in range(50))
    ]


def rigidity(seed: int) -> list[dict]:
    rng = random.Random(seed)
    actions = [list(w) for w in SUITE_WEIGHTS] + [random_weights(rng) for _ in range(10)]
    checks = []
    for w in actions:
        for g in ("signature", "chi_y"):
            checks.append({"id": f"rigid {g} {w}", "kind": "rigid", "expect": "agree",
                           "scenario": _scen(weights=w, genus=g)})
    for n, vectors in SPIN_WEIGHTS.items():
        for w in vectors:
            for s in ("loop_signature", "dirac_cusp"):
                checks.append({"id": f"rigid {s} q^3 {list(w)}", "kind": "rigid", "expect": "agree",
                               "scenario": _scen(weights=w, series=s, options={"q_order": 3})})
    for w in SPIN_WEIGHTS[5][:3]:
        checks.append({"id": f"rigid level 3 q^2 {list(w)}", "kind": "rigid", "expect": "agree",
                       "scenario": _scen(weights=w, series={"level_n": 3}, options={"q_order": 2})})
    return checks


def non_rigidity(seed: int) -> list[dict]:
    return [{"id": "sign(CP2,T_C) non-constant", "kind": "rigid", "expect": "nonconstant",
             "scenario": _scen(weights=[0, 1, 2], genus="signature", bundle="T_C")}]


def ahat_vanishing(seed: int) -> list[dict]:
    rng = random.Random(seed)
    out = []
    for n in (3, 5):
        vectors = [list(w) for w in SPIN_WEIGHTS[n]]
        while len(vectors) < len(SPIN_WEIGHTS[n]) + 5:
            w = [rng.randint(-5, 5) for _ in range(n + 1)]
            if len(set(w)) > 1:
                vectors.append(w)
        for w in vectors:
            out.append({"id": f"ahat character CP{n} {w}", "kind": "rigid", "expect": "zero",
                        "scenario": _scen(weights=w, genus="ahat")})
    return out


def higher_vanishing(seed: int) -> list[dict]:
    return [
        {"id": "dirac cusp, sigma of order 2", "kind": "vanishing", "weights": [0, 0, 0, 1, 1, 1],
         "o": 2, "level": 2, "codim": 6, "r": 1},
        {"id": "dirac cusp, sigma of order 3", "kind": "vanishing", "weights": [0, 0, 1, 1, 2, 2],
         "o": 3, "level": 2, "codim": 8, "r": 1},
        {"id": "level 3, T* (x) K^(1/3)", "kind": "vanishing", "weights": [0, 0, 0, 1, 1, 1],
         "o": 2, "level": 3, "codim": 6},
        {"id": "ahat(CP5) = 0", "kind": "value", "scenario": _scen(_cp(5), genus="ahat"),
         "expected": to_json(0)},
        {"id": "ahat(CP5,T_C) = 0", "kind": "value",
         "scenario": _scen(_cp(5), genus="ahat", bundle="T_C"), "expected": to_json(0)},
    ]


def cusp_limit(seed: int) -> list[dict]:
    rng = random.Random(seed)
    actions = [list(w) for w in SUITE_WEIGHTS] + [random_weights(rng) for _ in range(10)]
    return [{"id": f"cusp limit {w}", "kind": "cusp_limit", "weights": w} for w in actions]


def _group_shapes(m: int) -> Iterable[list[int]]:
    """One weight vector per partition of m + 1 into group sizes."""

    def parts(k, largest):
        if k == 0:
            yield []
            return
        for p in range(min(k, largest), 0, -1):
            for rest in parts(k - p, p):
                yield [p] + rest

    for sizes in parts(m + 1, m + 1):
        if len(sizes) < 2:
            continue
        yield [i for i, s in enumerate(sizes) for _ in range(s)]


def structure(seed: int) -> list[dict]:
    rng = random.Random(seed)
    vectors = [w for m in range(1, 6) for w in _group_shapes(m)]
    vectors += [random_weights(rng) for _ in range(10)]
    return [{"id": f"structure {w}", "kind": "structure", "weights": w} for w in vectors]


def coherence(seed: int) -> list[dict]:
    return [
        {"id": f"level 2 = loop signature on {name}", "kind": "series_equal",
         "left": _scen(space, series={"level_n": 2}, options={"q_order": 3}),
         "right": _scen(space, series="loop_signature", options={"q_order": 3})}
        for name, space in (("K3", K3), ("CP3", _cp(3)))
    ]


CRITERIA: dict[int, tuple[str, Callable[[int], list[dict]]]] = {
    1: ("classical genus table", classical_table),
    2: ("Riemann-Roch on projective space", riemann_roch),
    3: ("vanishing of Todd twisted by roots of K", kroot_vanishing),
    4: ("localization consistency", localization),
    5: ("rigidity theorems", rigidity),
    6: ("non-rigid twisted signature", non_rigidity),
    7: ("A-hat vanishing", ahat_vanishing),
    8: ("higher-order vanishing instances", higher_vanishing),
    9: ("cusp-limit identity", cusp_limit),
    10: ("structure theorem instance", structure),
    11: ("level-2 / level-N coherence", coherence),
}

SUITE_CRITERIA = {
    "classical": (1, 2, 3, 11),
    "localization": (4,),
    "rigidity": (5, 6, 7, 9),
    "vanishing": (8,),
    "structure": (10,),
}


def suite_checks(name: str, seed: int = DEFAULT_SEED) -> list[dict]:
    if name not in SUITE_CRITERIA:
        raise ValueError(f"unknown suite {name!r}; choose from {', '.join(SUITE_CRITERIA)}")
    out = []
    for k in SUITE_CRITERIA[name]:
        for c in CRITERIA[k][1](seed):
            out.append(dict(c, criterion=k))
    return out


# -- evaluation ----------------------------------------------------------------------------


def run_check(check: dict) -> tuple[bool, dict]:
    """Evaluate one check; returns (passed, detail)."""
    kind = check["kind"]
    if kind == "value":
        res = run_genus(parse_scenario(check["scenario"]))
        got = res.get("value", res.get("coefficients"))
        return got == check["expected"], {"got": got, "expected": check["expected"]}
    if kind == "series_equal":
        left = parse_scenario(check["left"])
        right = parse_scenario(check["right"])
        a = left.spec.nonequivariant(left.space)
        b = right.spec.nonequivariant(right.space)
        ok = len(a) == len(b) and all(x == y for x, y in zip(a, b))
        return ok, {"left": to_json(a), "right": to_json(b)}
    if kind == "rigid":
        res = run_equivariant(parse_scenario(check["scenario"]))
        expect = check["expect"]
        if expect == "agree":
            ok = res["verdict"] == "constant" and res["agree"]
        elif expect == "nonconstant":
            ok = res["verdict"] == "non-constant"
        else:
            ok = res["verdict"] == "constant" and all(v == "0" for v in res["values"])
        return ok, {"verdict": res["verdict"], "values": res["values"],
                    "nonequivariant": res["nonequivariant"]}
    if kind == "localization":
        return _localization(check["weights"])
    if kind == "cusp_limit":
        A = linear_cp_action(check["weights"])
        lim = limit_at_cusp(A)
        parts = sum(component_signatures(A))
        sig = index(A.M, SIGNATURE)
        return lim == parts == sig, {"limit": to_json(lim), "sum_sign_Y": to_json(parts),
                                     "sign_M": to_json(sig)}
    if kind == "vanishing":
        A = linear_cp_action(check["weights"])
        rep = higher_vanishing_check(A, check["o"], check["level"])
        ok = rep.status == "pass" and rep.codim == check["codim"]
        if "r" in check:
            ok = ok and rep.r == check["r"]
        return ok, {"status": rep.status, "codim": rep.codim, "r": rep.r,
                    "checked": {k: to_json(v) for k, v in rep.checked}, "reason": rep.reason}
    if kind == "structure":
        A = linear_cp_action(check["weights"])
        rep = structure_checks(A)
        return rep.passed, {
            "euler": [to_json(rep.euler_total), to_json(rep.euler_expected)],
            "sum_mi_plus_1": rep.dim_sum, "m_plus_1": rep.dim_expected,
            "witness": to_json(rep.witness) if rep.witness is not None else None,
        }
    raise ValueError(f"unknown check kind {kind!r}")


def _localization(weights: list[int]) -> tuple[bool, dict]:
    A = linear_cp_action(weights)
    n = A.M.complex_dim
    detail, ok = {}, True
    for g in (SIGNATURE, TODD, chi_y()):
        spec = genus_spec(g)
        rep = rigidity_report(A.with_cover(required_cover(spec)), spec)
        detail[g.name] = to_json(rep.values[0]) if rep.constant else "non-constant"
        ok = ok and rep.agree
    one = equivariant_integral(A, ClassOne())
    eul = equivariant_integral(A, ClassEuler())
    count = sum(F.Y.euler_characteristic() for F in A.components)
    detail.update(integral_of_1=to_json(one), euler_integral=to_json(eul), euler_count=to_json(count))
    ok = ok and not one and eul == n + 1 and count == n + 1
    return ok, detail


def run_checks(checks: list[dict]) -> dict:
    results = []
    for c in checks:
        t0 = time.perf_counter()
        try:
            ok, detail = run_check(c)
        except EqGenusError as exc:
            ok, detail = False, {"error": f"{type(exc).__name__}: {exc}"}
        seconds = time.perf_counter() - t0
        entry = {"id": c["id"], "status": "pass" if ok else "fail",
                 "seconds": round(seconds, 4), "detail": detail}
        if "criterion" in c:
            entry["criterion"] = c["criterion"]
        if not ok:
            entry["counterexample"] = c
        results.append(entry)
    return {
        "passed": all(r["status"] == "pass" for r in results),
        "total": len(results),
        "failures": sum(r["status"] != "pass" for r in results),
        "checks": results,
    }
