"""Command-line front end: deterministic JSON/CSV output for the closed
forms and the verification suites.

Exit status: 0 on success (and all verify cases passing), 1 on a
computation error (a machine-readable error object is emitted), 2 on a
usage error.  Output is byte-identical across runs: keys are sorted and
QFraction strings are canonical.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor

from .branching import BranchingData, branch_candidates
from .errors import (
    AdmissibilityError,
    DegenerateRoots,
    MultiplicityAmbiguous,
    NotRealized,
    NotScalar,
    QwigError,
)
from .invariants import chi_C1, chi_v
from .superweight import RootSet, Signature, Weight, is_typical
from .wigner import coupled_table, omega_table, sum_rule_residual
from .exactq import ONE, ZERO

SUITES = (
    "qybe",
    "coproduct",
    "charid",
    "projectors",
    "wigner",
    "coupled",
    "invariants",
    "all",
)

JOBS_ENV = "QWIG_JOBS"


def _default_jobs():
    try:
        return max(1, int(os.environ.get(JOBS_ENV, "1")))
    except ValueError:
        return 1


def _parse_weight(text, m=None, n=None):
    """Parse '1,0|0' into a Weight, inferring the signature when m, n are
    not supplied."""
    even_s, bar, odd_s = text.partition("|")
    if not bar:
        raise QwigError("weight %r needs a '|' separating the blocks" % text)
    ev = [x for x in even_s.split(",") if x.strip() != ""]
    od = [x for x in odd_s.split(",") if x.strip() != ""]
    pm, pn = len(ev), len(od)
    if m is not None and m != pm:
        raise QwigError("--m %d conflicts with weight %r" % (m, text))
    if n is not None and n != pn:
        raise QwigError("--n %d conflicts with weight %r" % (n, text))
    return Weight.parse(Signature(pm, pn), text)


def _parse_lower(text, sig):
    """Parse a lower weight string into a tuple of m+n-1 ints."""
    parts = text.replace("|", ",").split(",")
    try:
        comps = tuple(int(x) for x in parts if x.strip() != "")
    except ValueError:
        raise QwigError("cannot parse lower weight %r" % text)
    if len(comps) != sig.d - 1:
        raise QwigError(
            "lower weight needs %d components for %s" % (sig.d - 1, sig)
        )
    return comps


def _dump_json(obj):
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def _emit(payload, out_path, csv_rows=None):
    if out_path and out_path.endswith(".csv"):
        if csv_rows is None:
            raise QwigError("CSV output is only available for tables")
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        for row in csv_rows:
            w.writerow(row)
        text = buf.getvalue()
    else:
        text = _dump_json(payload)
    if out_path:
        with open(out_path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


# -- subcommands -------------------------------------------------------------


def _cmd_roots(args):
    lam = _parse_weight(args.weight, args.m, args.n)
    payload = RootSet.of(lam, args.variant).to_json()
    _emit(payload, args.out)
    return 0


def _cmd_branch(args):
    lam = _parse_weight(args.weight, args.m, args.n)
    out = []
    for b in branch_candidates(lam):
        out.append(
            {
                "lower": list(b.lam0),
                "I0": list(b.I0),
                "I0bar": list(b.I0bar),
                "I1": list(b.I1),
                "I1tilde": list(b.I1t),
                "eta": b.eta,
                "e_last": b.e_last,
                "lower_indices": list(b.lower_indices()),
                "raise_indices": list(b.raise_indices()),
            }
        )
    payload = {"upper": str(lam), "signature": [lam.sig.m, lam.sig.n],
               "candidates": out}
    _emit(payload, args.out)
    return 0


def _table_csv_rows(table, coupled):
    rows = [["k", "r", "value_string", "value_json"]]
    for key, v in sorted(table.entries.items(), key=lambda kv: str(kv[0])):
        if coupled:
            k, r = key
        else:
            k, r = key, ""
        rows.append([k, r, str(v), json.dumps(v.to_json(), sort_keys=True)])
    return rows


def _cmd_wigner(args):
    lam = _parse_weight(args.weight, args.m, args.n)
    lam0 = _parse_lower(args.lower, lam.sig)
    b = BranchingData(lam, lam0)
    build = coupled_table if args.coupled else omega_table
    forms = (
        ("root_product", "qnumber_phase")
        if args.form == "both"
        else (args.form,)
    )
    tables = {f: build(b, args.kind, f) for f in forms}
    primary = tables[forms[0]]
    payload = primary.to_json()
    payload["form"] = args.form
    if not args.coupled:
        total = sum(primary.entries.values(), ZERO)
        payload["sum"] = str(total)
        payload["sum_rule_residual"] = str(sum_rule_residual(b, args.kind))
    if args.form == "both":
        second = tables[forms[1]]
        payload["entries_qnumber_phase"] = second.to_json()["entries"]
        payload["forms_agree"] = primary.entries == second.entries
    _emit(payload, args.out, _table_csv_rows(primary, args.coupled))
    return 0


def _cmd_invariants(args):
    lam = _parse_weight(args.weight, args.m, args.n)

    def pack(x):
        return {"str": str(x), "value": x.to_json()}

    payload = {
        "weight": str(lam),
        "signature": [lam.sig.m, lam.sig.n],
        "typical": is_typical(lam),
        "v": pack(chi_v(lam, "v")),
        "v_tilde": pack(chi_v(lam, "vtilde")),
        "C1": pack(chi_C1(lam, "dual")),
        "C1_tilde": pack(chi_C1(lam, "adjoint")),
    }
    _emit(payload, args.out)
    return 0


# -- verify suites -----------------------------------------------------------


def _case(name, inputs, ok, detail=""):
    return {
        "case": name,
        "inputs": inputs,
        "status": "PASS" if ok else "FAIL",
        "detail": detail,
    }


def _skip(name, inputs, reason):
    return {"case": name, "inputs": inputs, "status": "SKIP",
            "detail": reason}


def _realized_modules(sig, k_max=2, dim_cap=30):
    """Unique highest weight modules inside V^(x)k, smallest power first."""
    from .oracle.modules import (
        highest_weight_vectors,
        submodule,
        tensor_module,
        vector_rep,
    )

    seen = set()
    out = []
    W = None
    for _ in range(k_max):
        W = vector_rep(sig) if W is None else tensor_module(W, vector_rep(sig))
        if W.dim > dim_cap * 2:
            break
        for wt, vecs in highest_weight_vectors(W):
            if wt in seen or len(vecs) != 1:
                continue
            seen.add(wt)
            comps = tuple(int(c) for c in wt)
            M, _ = submodule(W, [vecs[0]])
            if M.dim <= dim_cap:
                out.append((Weight(sig, comps), M))
    return out


def _suite_qybe(m, n, q0):
    from .oracle.checks import qybe_check

    sig = Signature(m, n)
    ok = qybe_check(sig, q0)
    return [_case("qybe", {"m": m, "n": n, "numeric": q0}, ok,
                  "exact" if q0 is None else "q0=%r" % q0)]


def _suite_coproduct(m, n, q0):
    from .oracle.checks import coproduct_check

    sig = Signature(m, n)
    ok = coproduct_check(sig, q0)
    return [_case("coproduct", {"m": m, "n": n, "numeric": q0}, ok,
                  "exact" if q0 is None else "q0=%r" % q0)]


def _suite_charid(m, n, q0):
    from .oracle.checks import char_identity_check

    sig = Signature(m, n)
    out = []
    for lam, M in _realized_modules(sig):
        for kind in ("atilde", "adual"):
            inputs = {"weight": str(lam), "kind": kind}
            try:
                ok = char_identity_check(M, lam, kind)
            except DegenerateRoots as exc:
                out.append(_skip("charid", inputs, str(exc)))
                continue
            out.append(_case("charid", inputs, ok))
    return out


def _suite_projectors(m, n, q0):
    from .oracle.checks import all_projectors
    from .oracle.linalg import identity, is_zero_matrix, matmul

    sig = Signature(m, n)
    out = []
    for lam, M in _realized_modules(sig):
        for kind in ("atilde", "adual"):
            inputs = {"weight": str(lam), "kind": kind}
            try:
                ps = all_projectors(M, lam, kind)
            except DegenerateRoots as exc:
                out.append(_skip("projectors", inputs, str(exc)))
                continue
            ok = True
            total = None
            for i, p in enumerate(ps):
                total = p if total is None else total + p
                ok = ok and is_zero_matrix(matmul(p, p) - p)
                for j in range(i + 1, len(ps)):
                    ok = ok and is_zero_matrix(matmul(p, ps[j]))
            ok = ok and is_zero_matrix(total - identity(total.shape[0]))
            out.append(_case("projectors", inputs, ok))
    return out


def _closed_vs_oracle(m, n, coupled):
    from .oracle.checks import coupled_oracle, wigner_oracle
    from .wigner import _Side, omega, omega_coupled

    sig = Signature(m, n)
    name = "coupled" if coupled else "wigner"
    out = []
    for lam, M in _realized_modules(sig):
        for b in branch_candidates(lam):
            for kind in ("lower", "raise"):
                side = _Side(b, kind)
                pairs = (
                    [(k, r) for k in side.K for r in side.L]
                    if coupled
                    else [(k, None) for k in range(1, sig.d + 1)]
                )
                for k, r in pairs:
                    inputs = {
                        "weight": str(lam),
                        "lower": list(b.lam0),
                        "kind": kind,
                        "k": k,
                    }
                    if r is not None:
                        inputs["r"] = r
                    try:
                        if coupled:
                            closed = omega_coupled(b, k, r, kind)
                            oracle = coupled_oracle(M, lam, b.lam0, k, r, kind)
                        else:
                            closed = omega(b, k, kind)
                            oracle = wigner_oracle(M, lam, b.lam0, k, kind)
                    except (DegenerateRoots, NotRealized, NotScalar,
                            MultiplicityAmbiguous, AdmissibilityError) as exc:
                        out.append(_skip(name, inputs,
                                         type(exc).__name__))
                        continue
                    out.append(
                        _case(name, inputs, closed == oracle,
                              "closed=%s oracle=%s" % (closed, oracle))
                    )
    return out


def _suite_wigner(m, n, q0):
    return _closed_vs_oracle(m, n, coupled=False)


def _suite_coupled(m, n, q0):
    return _closed_vs_oracle(m, n, coupled=True)


def _suite_invariants(m, n, q0):
    from .oracle.checks import supertrace_invariant

    sig = Signature(m, n)
    out = []
    for lam, M in _realized_modules(sig):
        inputs = {"weight": str(lam)}
        ok = chi_v(lam, "v") * chi_v(lam, "vtilde") == ONE
        out.append(_case("invariants/unitarity", inputs, ok))
        try:
            oracle = supertrace_invariant(M, "adual", 1)
        except NotScalar as exc:
            out.append(_skip("invariants/C1", inputs, str(exc)))
        else:
            out.append(
                _case("invariants/C1", inputs, chi_C1(lam, "dual") == oracle)
            )
        # the adjoint-form closed eigenvalue is only valid on typical weights
        if is_typical(lam):
            try:
                oracle = supertrace_invariant(M, "atilde", 1)
            except NotScalar as exc:
                out.append(_skip("invariants/C1_tilde", inputs, str(exc)))
            else:
                out.append(
                    _case("invariants/C1_tilde", inputs,
                          chi_C1(lam, "adjoint") == oracle)
                )
        else:
            out.append(_skip("invariants/C1_tilde", inputs,
                             "atypical highest weight"))
    return out


_SUITE_FN = {
    "qybe": _suite_qybe,
    "coproduct": _suite_coproduct,
    "charid": _suite_charid,
    "projectors": _suite_projectors,
    "wigner": _suite_wigner,
    "coupled": _suite_coupled,
    "invariants": _suite_invariants,
}


def _run_unit(unit):
    suite, m, n, q0 = unit
    return _SUITE_FN[suite](m, n, q0)


def _cmd_verify(args):
    suites = (
        [s for s in SUITES if s != "all"]
        if args.suite == "all"
        else [args.suite]
    )
    units = [(s, args.m, args.n, args.numeric) for s in suites]
    jobs = args.jobs if args.jobs else _default_jobs()
    if jobs > 1 and len(units) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            chunks = list(pool.map(_run_unit, units))
    else:
        chunks = [_run_unit(u) for u in units]
    cases = [c for chunk in chunks for c in chunk]
    n_fail = sum(1 for c in cases if c["status"] == "FAIL")
    payload = {
        "suite": args.suite,
        "signature": [args.m, args.n],
        "numeric": args.numeric,
        "cases": cases,
        "counts": {
            "PASS": sum(1 for c in cases if c["status"] == "PASS"),
            "FAIL": n_fail,
            "SKIP": sum(1 for c in cases if c["status"] == "SKIP"),
        },
        "all_pass": n_fail == 0,
    }
    _emit(payload, args.out)
    return 0 if n_fail == 0 else 1


# -- parser ------------------------------------------------------------------


def build_parser():
    p = argparse.ArgumentParser(
        prog="qwig",
        description="Exact U_q[gl(m|n)] invariants, reduced Wigner "
        "coefficients and verification suites.",
    )
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, weight=True):
        if weight:
            sp.add_argument("--weight", required=True,
                            help="highest weight, e.g. '1,0|0'")
        sp.add_argument("--m", type=int, help="even block size")
        sp.add_argument("--n", type=int, help="odd block size")
        sp.add_argument("--out", help="output path (.csv for tables)")

    sp = sub.add_parser("roots", help="characteristic roots of a weight")
    common(sp)
    sp.add_argument("--variant", choices=("adjoint", "dual"),
                    default="adjoint")
    sp.set_defaults(fn=_cmd_roots)

    sp = sub.add_parser("branch", help="branching candidates and index sets")
    common(sp)
    sp.set_defaults(fn=_cmd_branch)

    sp = sub.add_parser("wigner",
                        help="squared reduced Wigner coefficient tables")
    common(sp)
    sp.add_argument("--lower", required=True,
                    help="lower weight, e.g. '0,0' or '1,0|0'")
    sp.add_argument("--kind", choices=("lower", "raise"), required=True)
    sp.add_argument("--coupled", action="store_true",
                    help="coupled (k, r) table instead of the single-index one")
    sp.add_argument("--form",
                    choices=("root_product", "qnumber_phase", "both"),
                    default="root_product")
    sp.set_defaults(fn=_cmd_wigner)

    sp = sub.add_parser("invariants", help="central element eigenvalues")
    common(sp)
    sp.set_defaults(fn=_cmd_invariants)

    sp = sub.add_parser("verify", help="run oracle verification suites")
    sp.add_argument("--m", type=int, required=True)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--suite", choices=SUITES, default="all")
    sp.add_argument("--numeric", type=float, default=None, metavar="Q0",
                    help="numeric mode evaluation point for large cases")
    sp.add_argument("--jobs", type=int, default=0,
                    help="worker pool size (default: $%s or 1)" % JOBS_ENV)
    sp.add_argument("--out", help="output path")
    sp.set_defaults(fn=_cmd_verify)

    return p


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except QwigError as exc:
        sys.stdout.write(
            _dump_json(
                {"error": {"type": type(exc).__name__, "message": str(exc)}}
            )
        )
        return 1


if __name__ == "__main__":
    sys.exit(main())
