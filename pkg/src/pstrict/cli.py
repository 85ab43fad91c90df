"""Command-line interface: ``pstrict <command> ...``.

Exit codes: 0 verified or done, 1 refuted or witness found, 2 error.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from datetime import datetime, timezone
from pathlib import Path

from . import dynamics as dyn
from .bijections import GTPattern, gt_elementary_transformation, phi, phi_inverse, psi, psi_inverse, psi_space, to_gt_pattern
from .config import RunConfig
from .errors import InvalidParameter, NotRanked, PStrictError
from .gamma import fixed_elements, hat_gamma_space, is_column_adjacent
from .jdt import jdt_promotion
from .labelings import (
    LabelingSpace,
    antipode_complement,
    bender_knuth,
    dual_evacuation,
    evacuation,
    promotion,
    promotion_inverse,
)
from .poset import induced_subposet, rank_info
from .qpartitions import QSpace, column_toggle, rowmotion, rowmotion_inverse, toggle, toggle_promotion, toggle_promotion_inverse
from .serialize import (
    gamma_id,
    jsonable,
    labeling_from_json,
    labeling_to_json,
    load_json,
    qpartition_from_json,
    qpartition_to_json,
    qspace_to_json,
    space_from_json,
)
from .tableaux import (
    catalan_polynomial,
    flagged_space,
    hook_content_symplectic,
    macmahon_polynomial,
    ssyt_space,
    staircase_shape,
    symplectic_space,
)

LABELING_ACTIONS = ("pro", "pro-inv", "evac", "dual-evac", "jdt-pro", "plus")
QPART_ACTIONS = ("row", "row-inv", "togpro", "togpro-inv")


def _ints(text: str) -> list[int]:
    return [int(x) for x in text.split(",") if x.strip()]


def _space(args) -> LabelingSpace:
    if getattr(args, "space", None):
        return space_from_json(load_json(args.space))
    fam = getattr(args, "family", None)
    if fam == "ssyt":
        return ssyt_space(_ints(args.lam), _ints(args.mu or ""), args.q)
    if fam == "flagged":
        return flagged_space(_ints(args.lam), _ints(args.mu or ""), _ints(args.flag))
    if fam == "symplectic":
        return symplectic_space(_ints(args.lam), _ints(args.mu or ""), args.q)
    raise InvalidParameter("give --space or --family with its parameters")


def _add_space_args(p):
    p.add_argument("--space", help="space description: JSON file or inline JSON")
    p.add_argument("--family", choices=["ssyt", "flagged", "symplectic"], help="tableau shorthand")
    p.add_argument("--lam", help="partition lambda, comma separated")
    p.add_argument("--mu", help="partition mu, comma separated")
    p.add_argument("--q", type=int, help="largest entry")
    p.add_argument("--flag", help="row bounds, comma separated")


def labeling_action(name: str):
    """Map an action name to a function on labelings."""
    if name == "pro":
        return promotion
    if name == "pro-inv":
        return promotion_inverse
    if name == "evac":
        return evacuation
    if name == "dual-evac":
        return dual_evacuation
    if name == "jdt-pro":
        return jdt_promotion
    if name == "plus":
        return antipode_complement
    if name.startswith("bk:"):
        k = int(name[3:])
        return lambda f: bender_knuth(f, k)
    raise InvalidParameter(f"unknown labeling action {name!r}")


def qpartition_action(name: str, Q: QSpace):
    if name == "row":
        return rowmotion
    if name == "row-inv":
        return rowmotion_inverse
    if name == "togpro":
        return toggle_promotion
    if name == "togpro-inv":
        return toggle_promotion_inverse
    if name.startswith("toggle:"):
        key = name[len("toggle:"):]
        by_id = {gamma_id(x): x for x in Q.poset.elements}
        if key not in by_id:
            raise InvalidParameter(f"unknown element {key!r}")
        x = by_id[key]
        return lambda s: toggle(s, x)
    if name.startswith("tau:"):
        k = int(name[4:])
        return lambda s: column_toggle(s, k)
    raise InvalidParameter(f"unknown Q-partition action {name!r}")


def _is_qaction(name: str) -> bool:
    return name in QPART_ACTIONS or name.startswith("toggle:") or name.startswith("tau:")


def _emit(args, payload: dict, started: float) -> None:
    if not args.no_timestamp:
        payload["meta"] = {
            "timestamp": datetime.now(timezone.utc).isoformat(timespec="seconds"),
            "runtime_seconds": round(time.perf_counter() - started, 4),
        }
    text = json.dumps(jsonable(payload), indent=2, sort_keys=True)
    if args.output:
        Path(args.output).write_text(text + "\n")
    else:
        print(text)


def cmd_enumerate(args, cfg: RunConfig) -> tuple[dict, int]:
    S = _space(args)
    if args.kind == "labelings":
        items = [labeling_to_json(f) for f in S.enumerate(cfg.cap)]
    else:
        Q = hat_gamma_space(S)
        items = [qpartition_to_json(s) for s in Q.enumerate(cfg.cap)]
    return {"kind": args.kind, "count": len(items), "items": items}, 0


def cmd_act(args, cfg: RunConfig) -> tuple[dict, int]:
    S = None if args.action.startswith("t:") else _space(args)
    data = load_json(args.input)
    if args.action.startswith("t:"):
        k = int(args.action[2:])
        a = GTPattern(tuple(tuple(int(x) for x in r) for r in data["rows"]), int(data["q"])).validate()
        for _ in range(args.n):
            a = gt_elementary_transformation(a, k)
        return {"action": args.action, "n": args.n, "result": {"rows": [list(r) for r in a.rows], "q": a.q}}, 0
    if _is_qaction(args.action):
        Q = hat_gamma_space(S)
        x = qpartition_from_json(Q, data)
        act = qpartition_action(args.action, Q)
        for _ in range(args.n):
            x = act(x)
        return {"action": args.action, "n": args.n, "result": qpartition_to_json(x)}, 0
    f = labeling_from_json(S, data)
    act = labeling_action(args.action)
    for _ in range(args.n):
        f = act(f)
    return {"action": args.action, "n": args.n, "result": labeling_to_json(f)}, 0


def cmd_gamma(args, cfg: RunConfig) -> tuple[dict, int]:
    S = _space(args)
    Q = hat_gamma_space(S)
    out = qspace_to_json(Q)
    if not args.skip_fixed:
        fixed = fixed_elements(Q.poset, Q.bounds, cfg.cap)
        out["fixed"] = sorted(gamma_id(x) for x in fixed)
        out["column_adjacent"] = is_column_adjacent(Q.poset, Q.bounds, fixed)
    return out, 0


def cmd_map(args, cfg: RunConfig) -> tuple[dict, int]:
    S = _space(args)
    data = load_json(args.input)
    if args.which == "phi":
        return {"map": "phi", "result": qpartition_to_json(phi(labeling_from_json(S, data)))}, 0
    if args.which == "phi-inv":
        sigma = qpartition_from_json(hat_gamma_space(S), data)
        return {"map": "phi-inv", "result": labeling_to_json(phi_inverse(sigma, S))}, 0
    if args.which == "psi":
        return {"map": "psi", "result": qpartition_to_json(psi(labeling_from_json(S, data)))}, 0
    if args.which == "psi-inv":
        sigma = qpartition_from_json(psi_space(S), data)
        return {"map": "psi-inv", "result": labeling_to_json(psi_inverse(sigma, S))}, 0
    if args.which == "gt":
        a = to_gt_pattern(psi(labeling_from_json(S, data)), S)
        return {"map": "gt", "result": {"rows": [list(r) for r in a.rows], "mu": list(a.mu), "lambda": list(a.lam), "q": a.q}}, 0
    raise InvalidParameter(f"unknown map {args.which!r}")


def _orbit_setup(args, cfg: RunConfig):
    S = _space(args)
    if _is_qaction(args.action):
        Q = hat_gamma_space(S)
        return list(Q.enumerate(cfg.cap)), qpartition_action(args.action, Q)
    return list(S.enumerate(cfg.cap)), labeling_action(args.action)


def cmd_orbits(args, cfg: RunConfig) -> tuple[dict, int]:
    elements, act = _orbit_setup(args, cfg)
    rep, _ = dyn.orbit_decomposition(elements, act, cfg.jobs)
    return {
        "action": args.action,
        "total": rep.total,
        "order": rep.order,
        "orbit_sizes": dict(sorted(rep.size_multiset.items())),
        "representatives": list(rep.representatives),
    }, 0


def _poly(args):
    if args.poly.startswith("coeffs:"):
        return tuple(_ints(args.poly[len("coeffs:"):]))
    if args.poly == "macmahon":
        S = _space(args)
        lam = [S.shape.hi(p) for p in S.poset.elements]
        if len(set(lam)) != 1 or not S.shape.is_full() or S.R.kind != "global":
            raise InvalidParameter("the MacMahon polynomial needs a rectangular SSYT space")
        return macmahon_polynomial(lam[0], len(lam), S.R.q)
    if args.poly == "catalan":
        S = _space(args)
        return catalan_polynomial(S.ell, len(S.poset))
    raise InvalidParameter(f"unknown polynomial {args.poly!r}")


def _statistic(args, S: LabelingSpace):
    name = args.statistic
    if name == "sum-all":
        return dyn.cell_sum(S.cells()), False
    if name.startswith("cells:"):
        cells = []
        for tok in name[len("cells:"):].split(";"):
            ptxt, itxt = tok.rsplit(",", 1)
            cells.append((S.poset.element_from_str(ptxt), int(itxt)))
        return dyn.cell_sum(cells), False
    if name == "flag-parity":
        return dyn.flag_parity, False
    if name == "rank-alternating":
        Q = hat_gamma_space(S)
        free = induced_subposet(Q.poset, [Q.poset.elements[i] for i in Q.free_order])
        info = rank_info(free)
        if not info.ranked:
            raise NotRanked("free part of Gamma is not ranked")
        return dyn.rank_alternating(Q.poset, free.elements, info.rank), True
    raise InvalidParameter(f"unknown statistic {name!r}")


def cmd_check(args, cfg: RunConfig) -> tuple[dict, int]:
    what = args.what
    if what == "csp":
        elements, act = _orbit_setup(args, cfg)
        poly = _poly(args)
        _, orbits = dyn.orbit_decomposition(elements, act, cfg.jobs)
        out = {"check": "csp", "action": args.action, "polynomial": list(poly)}
        if args.poly == "catalan":
            total = len(elements)
            at_one = sum(poly)
            if at_one != total:
                out.update(status=dyn.TRANSCRIPTION_AMBIGUOUS, value_at_1=at_one, brute_force_count=total)
                return out, 1
        rep = dyn.check_csp(elements, act, poly, orbits)
        out.update(holds=rep.holds, order=rep.order, residue=list(rep.residue), orbit_side=list(rep.orbit_side),
                   fixed_point_counts=list(rep.fixed_point_counts), failing_d=rep.failing_d, reason=rep.reason)
        return out, 0 if rep.holds else 1
    if what == "homomesy":
        S = _space(args)
        stat, on_gamma = _statistic(args, S)
        if on_gamma != _is_qaction(args.action):
            raise InvalidParameter("statistic and action live on different sets")
        elements, act = _orbit_setup(args, cfg)
        _, orbits = dyn.orbit_decomposition(elements, act, cfg.jobs)
        rep = dyn.check_homomesy(orbits, stat)
        return {"check": "homomesy", "action": args.action, "statistic": args.statistic,
                "homomesic": rep.homomesic, "constant": rep.constant, "orbit_averages": list(rep.averages)}, 0 if rep.homomesic else 1
    if what == "equivariance":
        S = _space(args)
        rep = dyn.check_equivariance(S.enumerate(cfg.cap), phi, promotion, toggle_promotion)
        out = {"check": "equivariance", "holds": rep.holds, "checked": rep.checked}
        if not rep.holds:
            out["first_failure"] = labeling_to_json(rep.first_failure)
        return out, 0 if rep.holds else 1
    if what == "jdt-vs-bk":
        S = _space(args)
        rep = dyn.check_equivariance(S.enumerate(cfg.cap), lambda f: f, jdt_promotion, promotion)
        out = {"check": "jdt-vs-bk", "holds": rep.holds, "checked": rep.checked}
        if not rep.holds:
            out["first_failure"] = labeling_to_json(rep.first_failure)
        return out, 0 if rep.holds else 1
    if what == "counterexample":
        S = _space(args)
        pred = _property(args.property)
        rep = dyn.find_counterexample(S.enumerate(cfg.cap), pred)
        out = {"check": "counterexample", "property": args.property, "found": rep.found, "searched": rep.searched}
        if rep.found:
            out["witness"] = labeling_to_json(rep.witness)
        return out, 1 if rep.found else 0
    raise InvalidParameter(f"unknown check {what!r}")


def _property(name: str):
    """Predicates whose failures are counterexamples."""
    if name.startswith("pro-order:"):
        m = int(name.split(":", 1)[1])

        def pred(f):
            g = f
            for _ in range(m):
                g = promotion(g)
            return g == f

        return pred
    if name == "evac-plus":
        return lambda f: evacuation(f) == antipode_complement(f)
    if name == "evac-involution":
        return lambda f: evacuation(evacuation(f)) == f
    if name == "evac-conjugates-pro":
        return lambda f: evacuation(promotion(f)) == promotion_inverse(evacuation(f))
    if name == "dual-evac-plus":
        return lambda f: dual_evacuation(f) == antipode_complement(evacuation(antipode_complement(f)))
    raise InvalidParameter(f"unknown property {name!r}")


def cmd_count(args, cfg: RunConfig) -> tuple[dict, int]:
    fam = args.family
    out = {"family": fam}
    if fam == "symplectic-staircase":
        lam = staircase_shape(args.n)
        out["formula"] = hook_content_symplectic(lam, args.n)
        if args.enumerate:
            out["enumerated"] = symplectic_space(lam, (), args.n).count(cfg.cap)
    elif fam == "ssyt":
        S = ssyt_space(_ints(args.lam), _ints(args.mu or ""), args.q)
        out["enumerated"] = S.count(cfg.cap)
        lam = _ints(args.lam)
        if not args.mu and len(set(lam)) == 1:
            out["formula"] = sum(macmahon_polynomial(lam[0], len(lam), args.q))
    elif fam == "flagged":
        out["enumerated"] = flagged_space(_ints(args.lam), _ints(args.mu or ""), _ints(args.flag)).count(cfg.cap)
    else:
        raise InvalidParameter(f"unknown family {fam!r}")
    vals = {v for k, v in out.items() if k in ("formula", "enumerated")}
    out["count"] = out.get("enumerated", out.get("formula"))
    return out, 0 if len(vals) <= 1 else 1


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="pstrict", description="P-strict labelings, promotion and toggles")
    ap.add_argument("--output", help="write the JSON report here instead of stdout")
    ap.add_argument("--jobs", type=int, default=1, help="worker processes for orbit sweeps")
    ap.add_argument("--no-timestamp", action="store_true", help="omit timestamp and runtime from reports")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", help="list labelings or Q-partitions")
    p.add_argument("kind", choices=["labelings", "qpartitions"])
    _add_space_args(p)

    p = sub.add_parser("act", help="apply an action n times")
    _add_space_args(p)
    p.add_argument("--input", required=True, help="labeling or Q-partition JSON")
    p.add_argument("--action", required=True,
                   help="pro|pro-inv|evac|dual-evac|jdt-pro|plus|bk:k|row|row-inv|togpro|togpro-inv|toggle:p:k|tau:k|t:k")
    p.add_argument("-n", type=int, default=1)

    p = sub.add_parser("gamma", help="print Gamma(P, R^) with its bounds")
    _add_space_args(p)
    p.add_argument("--skip-fixed", action="store_true", help="do not enumerate to find fixed elements")

    p = sub.add_parser("map", help="apply phi, its inverse, psi or the GT read-out")
    p.add_argument("which", choices=["phi", "phi-inv", "psi", "psi-inv", "gt"])
    _add_space_args(p)
    p.add_argument("--input", required=True)

    p = sub.add_parser("orbits", help="orbit structure of an action")
    _add_space_args(p)
    p.add_argument("--action", required=True)

    p = sub.add_parser("check", help="verify an identity or search for a counterexample")
    p.add_argument("what", choices=["csp", "homomesy", "equivariance", "jdt-vs-bk", "counterexample"])
    _add_space_args(p)
    p.add_argument("--action", default="pro")
    p.add_argument("--poly", default="macmahon", help="macmahon|catalan|coeffs:c0,c1,...")
    p.add_argument("--statistic", default="sum-all", help="sum-all|cells:p,i;p,i|flag-parity|rank-alternating")
    p.add_argument("--property", default="pro-order:1",
                   help="pro-order:m|evac-plus|evac-involution|evac-conjugates-pro|dual-evac-plus")

    p = sub.add_parser("count", help="closed-form and brute-force counts")
    p.add_argument("--family", required=True, choices=["symplectic-staircase", "ssyt", "flagged"])
    p.add_argument("--n", type=int)
    p.add_argument("--lam")
    p.add_argument("--mu")
    p.add_argument("--q", type=int)
    p.add_argument("--flag")
    p.add_argument("--enumerate", action="store_true", help="also count by enumeration")
    return ap


COMMANDS = {
    "enumerate": cmd_enumerate,
    "act": cmd_act,
    "gamma": cmd_gamma,
    "map": cmd_map,
    "orbits": cmd_orbits,
    "check": cmd_check,
    "count": cmd_count,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code == 0 else 2
    cfg = RunConfig.from_env(jobs=args.jobs, timestamps=not args.no_timestamp)
    started = time.perf_counter()
    try:
        payload, code = COMMANDS[args.command](args, cfg)
    except (PStrictError, ValueError, KeyError, OSError, json.JSONDecodeError) as exc:
        print(json.dumps({"error": type(exc).__name__, "message": str(exc)}), file=sys.stderr)
        return 2
    _emit(args, payload, started)
    return code


if __name__ == "__main__":
    sys.exit(main())
