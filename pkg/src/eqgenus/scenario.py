"""Scenario documents: parsing, evaluation and the JSON reports they produce.

A scenario is a JSON object such as::

    {"space": {"type": "cp", "n": 2}, "genus": "signature"}
    {"action": {"type": "linear_cp", "weights": [0, 1]}, "genus": "chi_y"}
    {"space": {"type": "cp", "n": 3}, "series": "loop_signature", "options": {"q_order": 3}}

Exactly one of ``genus``, ``series``, ``cusp_values`` or ``class`` selects
what is computed; ``bundle`` twists a genus.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Optional

from .bundles import bundle_from_json, is_pure
from .equivariant import (
    CircleAction,
    EqClass,
    IndexSpec,
    action_from_json,
    class_from_json,
    dirac_cusp_spec,
    equivariant_integral,
    level_n_spec,
    limit_at_cusp,
    loop_signature_spec,
    required_cover,
    rigidity_report,
)
from .errors import ScenarioError
from .genera import cusp_values, parse_genus
from .serialize import to_json
from .spaces import SpaceModel, from_descriptor

KEYS = {"space", "action", "genus", "bundle", "series", "cusp_values", "class", "options"}
OPTION_KEYS = {"q_order", "cover", "seed"}
DEFAULT_Q_ORDER = 4


@dataclass
class Scenario:
    raw: dict
    space: Optional[SpaceModel]
    action: Optional[CircleAction]
    spec: Optional[IndexSpec]
    cusp_level: Optional[int]
    eq_class: Optional[EqClass]
    q_order: int
    cover: Optional[int]


def read_document(text_or_path: str) -> Any:
    """Inline JSON or the path of a JSON file."""
    s = text_or_path.strip()
    if s.startswith("{") or s.startswith("["):
        source, text = "inline JSON", s
    else:
        p = Path(text_or_path)
        if not p.is_file():
            raise ScenarioError(f"no such scenario file: {text_or_path}")
        source, text = str(p), p.read_text(encoding="utf-8")
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ScenarioError(f"{source}: line {exc.lineno} column {exc.colno}: {exc.msg}") from None


def _spec_from(obj: dict, q_order: int) -> Optional[IndexSpec]:
    if "series" in obj:
        s = obj["series"]
        if s == "loop_signature":
            return loop_signature_spec(q_order)
        if s == "dirac_cusp":
            return dirac_cusp_spec(q_order)
        if isinstance(s, dict) and set(s) == {"level_n"} and isinstance(s["level_n"], int):
            return level_n_spec(s["level_n"], q_order)
        raise ScenarioError("series must be loop_signature, dirac_cusp or {\"level_n\": N}", "series")
    if "genus" in obj:
        g = obj["genus"]
        # series names are accepted under "genus" as a convenience
        if g in ("loop_signature", "dirac_cusp"):
            return _spec_from({"series": g}, q_order)
        if isinstance(g, dict) and "level_n" in g:
            return _spec_from({"series": g}, q_order)
        kind = parse_genus(g)
        if "bundle" in obj:
            E = bundle_from_json(obj["bundle"])
            return IndexSpec(kind, E, 0 if is_pure(E) else q_order)
        return IndexSpec(kind)
    if "bundle" in obj:
        raise ScenarioError("a bundle needs a genus to twist", "bundle")
    return None


def parse_scenario(obj: Any, q_order: Optional[int] = None) -> Scenario:
    if not isinstance(obj, dict):
        raise ScenarioError("scenario must be a JSON object")
    unknown = set(obj) - KEYS
    if unknown:
        raise ScenarioError(f"unknown scenario keys {sorted(unknown)}")
    opts = obj.get("options", {})
    if not isinstance(opts, dict) or set(opts) - OPTION_KEYS:
        raise ScenarioError(f"options may only contain {sorted(OPTION_KEYS)}", "options")
    for k, v in opts.items():
        if not isinstance(v, int) or isinstance(v, bool) or v < 0:
            raise ScenarioError("option values must be nonnegative integers", f"options.{k}")
    Q = opts.get("q_order", DEFAULT_Q_ORDER if q_order is None else q_order)
    cover = opts.get("cover")
    if cover is not None and cover < 1:
        raise ScenarioError("cover must be positive", "options.cover")

    action = action_from_json(obj["action"]) if "action" in obj else None
    space = None
    if "space" in obj:
        space = from_descriptor(obj["space"])
    elif action is not None:
        space = action.M
    else:
        raise ScenarioError("scenario needs a space or an action")
    if action is not None and space.descriptor != action.M.descriptor:
        raise ScenarioError("the action does not act on the given space", "action")

    selectors = [k for k in ("genus", "series", "cusp_values", "class") if k in obj]
    if len(selectors) != 1:
        raise ScenarioError("give exactly one of genus, series, cusp_values, class")
    spec = _spec_from(obj, Q)
    level = None
    if "cusp_values" in obj:
        level = obj["cusp_values"]
        if not isinstance(level, int) or level < 2:
            raise ScenarioError("cusp_values needs an integer level N >= 2", "cusp_values")
    eq_class = class_from_json(obj["class"]) if "class" in obj else None
    if eq_class is not None and action is None:
        raise ScenarioError("an equivariant class needs an action", "class")
    return Scenario(obj, space, action, spec, level, eq_class, Q, cover)


def run_genus(sc: Scenario) -> dict:
    M = sc.space
    if sc.cusp_level is not None:
        cv = cusp_values(M, sc.cusp_level)
        return {
            "kind": "cusp_values",
            "N": cv.N,
            "todd_kroot": {str(a): to_json(v) for a, v in cv.todd_kroot.items()},
            "chi_y": {str(b): to_json(v) for b, v in cv.chi_y.items()},
        }
    if sc.spec is None:
        raise ScenarioError("the genus command needs genus, series or cusp_values")
    series = sc.spec.nonequivariant(M)
    if sc.spec.is_series or sc.spec.q_order:
        return {"kind": "series", "coefficients": to_json(series)}
    return {"kind": "scalar", "value": to_json(series[0])}


def acting(sc: Scenario, spec: Optional[IndexSpec] = None) -> CircleAction:
    A = sc.action
    if A is None:
        raise ScenarioError("the equivariant command needs an action")
    if sc.cover is not None:
        return A.with_cover(sc.cover)
    if spec is not None and sc.raw.get("action", {}).get("cover") is None:
        return A.with_cover(required_cover(spec))
    return A


def run_equivariant(sc: Scenario) -> dict:
    if sc.eq_class is not None:
        A = acting(sc)
        return {"kind": "integral", "value": to_json(equivariant_integral(A, sc.eq_class))}
    if sc.spec is None:
        raise ScenarioError("the equivariant command needs genus, series or class")
    A = acting(sc, sc.spec)
    rep = rigidity_report(A, sc.spec)
    out = {
        "kind": "character",
        "cover": A.d,
        "character": [to_json(f) for f in rep.character],
        "verdict": "constant" if rep.constant else "non-constant",
        "values": to_json(list(rep.values)) if rep.constant else None,
        "nonequivariant": to_json(list(rep.nonequivariant)),
        "agree": rep.agree,
    }
    if rep.exponents is not None:
        out["monomial_exponents"] = list(rep.exponents)
    if sc.spec.genus.name == "signature" and not sc.spec.is_series and sc.spec.bundle is None:
        out["cusp_limit"] = to_json(limit_at_cusp(A, sc.spec))
    return out
