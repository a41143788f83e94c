"""The ``grig`` command line.

Exit codes: 0 success or verdict holds, 1 verdict fails, 2 input error,
3 inconclusive (splitting, certification or isomorphism tests gave up).
"""

from __future__ import annotations

import argparse
import datetime as _dt
import sys
from pathlib import Path

from . import harness
from .algebra import (
    Algebra,
    IdemSpec,
    corner_algebra,
    morita_context_zero,
    product_algebra,
    tensor_algebra,
)
from .errors import GrigError, MalformedDoc
from .grigdim import COMPLETENESS, gproj_closure, grigdim
from .homology import (
    DEFAULT_CUTOFF,
    ext_table,
    gorenstein_check,
    gproj_certify,
    minimal_injective_coresolution,
    minimal_projective_resolution,
    rigidity_degree,
    t_domdim,
)
from .io import (
    algebra_from_doc,
    algebra_to_doc,
    corpus_docs,
    dump_json,
    load_json,
    mat_to_doc,
    module_from_doc,
    module_to_doc,
    vec_to_doc,
)
from .linalg import Mat, to_rat
from .modules import (
    Module,
    direct_sum,
    endomorphism_algebra,
    injective_indecomposables,
    projective_indecomposables,
    regular_module,
    simple_modules,
)


SCOPE = "split finite-dimensional algebras over the rationals"


class Loader:
    """Resolves algebra references so that every module of a run shares one Algebra."""

    def __init__(self):
        self.algebras: dict[str, Algebra] = {}

    def algebra(self, ref: str | dict) -> Algebra:
        if isinstance(ref, dict):
            a = algebra_from_doc(ref)
        elif Path(ref).is_file():
            a = algebra_from_doc(load_json(ref))
        else:
            if ref in self.algebras:
                return self.algebras[ref]
            docs = corpus_docs()
            if ref not in docs:
                raise MalformedDoc(f"{ref!r} is neither a file nor a bundled algebra ({', '.join(sorted(docs))})")
            a = algebra_from_doc(docs[ref])
        return self.algebras.setdefault(a.name, a)

    def module(self, path: str, algebra: str | None = None) -> Module:
        doc = load_json(path)
        if not isinstance(doc, dict):
            raise MalformedDoc(f"{path}: module document must be an object")
        if algebra is not None:
            a = self.algebra(algebra)
        elif isinstance(doc.get("algebra"), dict):
            a = self.algebra(doc["algebra"])
            doc = dict(doc, algebra=a.name)
        elif "algebra" in doc:
            a = self.algebra(doc["algebra"])
        else:
            raise MalformedDoc(f"{path}: no algebra given (use --algebra)")
        return module_from_doc(doc, a)


def parse_idempotent(text: str, a: Algebra) -> tuple:
    """``"idem:0,2"`` sums primitive idempotents; ``"0"`` is zero; otherwise coordinates."""
    text = text.strip()
    if text == "0":
        return a.zero()
    if text.startswith("idem:"):
        acc = [0] * a.dim
        for k in text[5:].split(","):
            e = a.idempotents[int(k)]
            acc = [x + y for x, y in zip(acc, e)]
        return tuple(acc)
    try:
        vec = tuple(to_rat(x) for x in text.split(","))
    except (TypeError, ValueError) as exc:
        raise MalformedDoc(f"cannot parse idempotent {text!r}") from exc
    if len(vec) != a.dim:
        raise MalformedDoc(f"idempotent needs {a.dim} coordinates")
    return vec


# ---------------------------------------------------------------------------
# commands; each returns (result, exit_code)


def cmd_validate(args, ld: Loader):
    a = ld.algebra(args.algebra)
    return {
        "algebra": algebra_to_doc(a),
        "dim": a.dim,
        "radical_dim": a.radical.dim,
        "radical_nilpotency_index": a.radical_nilpotency_index(),
        "semisimple": a.is_semisimple,
        "idempotents": [vec_to_doc(e) for e in a.idempotents],
        "vertex_classes": [list(c) for c in a.vertex_classes],
        "blocks": [list(b) for b in a.blocks],
    }, 0


def cmd_modules(args, ld: Loader):
    a = ld.algebra(args.algebra)
    build = {"simples": simple_modules, "projectives": projective_indecomposables,
             "injectives": injective_indecomposables}[args.kind]
    mods = build(a)
    return {"kind": args.kind, "modules": [module_to_doc(m) for m in mods]}, 0


def cmd_resolve(args, ld: Loader):
    m = ld.module(args.module, args.algebra)
    build = minimal_projective_resolution if args.direction == "proj" else minimal_injective_coresolution
    res = build(m, args.cutoff, stop_at_period=True)
    out = {
        "direction": res.direction,
        "status": res.status.to_json(),
        "term_dims": [t.dim for t in res.terms],
        "terms": [module_to_doc(t) for t in res.terms],
        "differentials": [mat_to_doc(d.matrix) for d in res.differentials],
    }
    if res.status.kind != "truncated":
        out["certificate"] = res.certificate()
    return out, 0


def cmd_ext(args, ld: Loader):
    m = ld.module(args.source, args.algebra)
    n = ld.module(args.target, args.algebra)
    tab = ext_table(m, n, args.cutoff)
    return {"dims": tab.dims, "periodicity": list(tab.periodicity) if tab.periodicity else None,
            "computed_degrees": tab.computed}, 0


def cmd_gorenstein(args, ld: Loader):
    st = gorenstein_check(ld.algebra(args.algebra), args.cutoff)
    return st.to_json(), 0 if st.verdict == "Gorenstein" else 3


def cmd_gproj_certify(args, ld: Loader):
    m = ld.module(args.module, args.algebra)
    cert = gproj_certify(m, None, args.cutoff)
    code = {"Certified": 0, "Refuted": 1}.get(cert.verdict, 3)
    return cert.to_json(), code


def cmd_gproj_closure(args, ld: Loader):
    seeds = [ld.module(str(p), args.algebra) for p in sorted(Path(args.seeds).glob("*.json"))]
    if not seeds:
        raise MalformedDoc(f"no seed documents in {args.seeds}")
    a = seeds[0].algebra
    gs = gproj_closure(a, seeds, args.max_steps, args.cutoff)
    return gs.to_json(), 0 if gs.closed else 3


def cmd_rd(args, ld: Loader):
    m = ld.module(args.module, args.algebra)
    return {"rigidity_degree": rigidity_degree(m, args.cutoff).to_json()}, 0


def cmd_domdim(args, ld: Loader):
    m = ld.module(args.module, args.algebra)
    t = ld.module(args.relative_to, args.algebra)
    return {"t_domdim": t_domdim(m, t, args.cutoff).to_json()}, 0


def load_set(path: str | None, a: Algebra, ld: Loader, cutoff: int):
    if path is None:
        return harness.default_gproj_set(a, cutoff)
    doc = load_json(path)
    try:
        members = [module_from_doc(d, a) for d in doc["members"]]
        completeness = COMPLETENESS[doc.get("completeness", "unverified")]
    except (KeyError, TypeError) as exc:
        raise MalformedDoc(f"{path}: bad Gorenstein projective set document ({exc})") from exc
    if doc.get("algebra", a.name) != a.name:
        raise MalformedDoc(f"{path}: set is over {doc['algebra']!r}")
    return gproj_closure(a, members, 4 * len(members) + 16, cutoff, completeness)


def cmd_grigdim(args, ld: Loader):
    a = ld.algebra(args.algebra)
    gs = load_set(args.set, a, ld, args.cutoff)
    rep = grigdim(a, gs, args.cutoff)
    return dict(rep.to_json(), gproj_set=gs.to_json()), 0


def cmd_construct(args, ld: Loader):
    kind = args.kind
    if kind in ("product", "tensor"):
        if len(args.inputs) != 2:
            raise MalformedDoc(f"construct {kind} needs two algebras")
        a, b = (ld.algebra(x) for x in args.inputs)
        c = product_algebra(a, b) if kind == "product" else tensor_algebra(a, b)
    elif kind == "corner":
        a = ld.algebra(args.inputs[0])
        c = corner_algebra(a, IdemSpec.of(a, parse_idempotent(args.e, a))).algebra
    elif kind == "morita-context":
        a = ld.algebra(args.inputs[0])
        c = morita_context_zero(a, parse_idempotent(args.e, a), parse_idempotent(args.f, a))
    else:
        m = ld.module(args.inputs[0], args.algebra)
        c = endomorphism_algebra(m).algebra
    return {"algebra": algebra_to_doc(c), "dim": c.dim}, 0


def _merge(verdicts):
    v = harness.Verdict(verdicts[0].claim)
    for w in verdicts:
        v.instances.extend(w.instances)
        v.caveats.extend(w.caveats)
    return v


def cmd_verify(args, ld: Loader):
    claim, c = args.claim, args.cutoff
    inputs = args.inputs
    a = ld.algebra(inputs[0]) if inputs else None
    if a is None and claim != "gendo":
        raise MalformedDoc(f"verify {claim} needs an algebra")
    if claim == "lemma33":
        if args.module:
            xs = [ld.module(args.module, a.name)]
        else:
            xs = harness.default_gproj_set(a, c).modules
            if not xs:
                raise MalformedDoc(f"{a.name} has no nonprojective Gorenstein projectives to test")
        v = _merge([harness.verify_lemma33(a, x, c) for x in xs])
    elif claim in ("prop35-product", "prop35-tensor"):
        if len(inputs) != 2:
            raise MalformedDoc(f"verify {claim} needs two algebras")
        b = ld.algebra(inputs[1])
        gs_a, gs_b = harness.default_gproj_set(a, c), harness.default_gproj_set(b, c)
        fn = harness.verify_prop35_product if claim == "prop35-product" else harness.verify_prop35_tensor
        v = fn(a, b, gs_a, gs_b, c)
    elif claim == "prop35-morita":
        p = ld.module(args.module, a.name) if args.module else \
            direct_sum([regular_module(a), projective_indecomposables(a)[0]])
        v = harness.verify_prop35_morita(a, p, harness.default_gproj_set(a, c), c)
    elif claim == "ex38":
        v = harness.verify_id_bound(a, load_set(args.set, a, ld, c), c)
    elif claim == "ex310":
        if args.e is None or args.f is None:
            raise MalformedDoc("verify ex310 needs --e and --f")
        v = harness.verify_morita_context(a, parse_idempotent(args.e, a), parse_idempotent(args.f, a),
                                          harness.default_gproj_set(a, c), cutoff=c)
    else:
        if args.generator:
            g = ld.module(args.generator, args.algebra)
            m = direct_sum([regular_module(g.algebra), g])
            end = endomorphism_algebra(m, name=f"End({g.algebra.name} + {g.name or 'X'})")
            n0 = g.algebra.dim
            proj = Mat([[1 if i == j and i < n0 else 0 for j in range(m.dim)] for i in range(m.dim)])
            a, e = end.algebra, end.map_to_element(proj)
        else:
            if a is None or args.e is None:
                raise MalformedDoc("verify gendo needs an algebra and --e, or --generator")
            e = parse_idempotent(args.e, a)
        v = harness.gendo_lower_bound(a, e, args.n, c)
    if v.holds:
        code = 0
    elif v.inconclusive:
        code = 3
    else:
        code = 1
    return v.to_json(), code


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="grig", description=__doc__.splitlines()[0])
    parser.add_argument("--format", choices=["json", "md"], default="json")
    parser.add_argument("--cutoff", type=int, default=DEFAULT_CUTOFF)
    parser.add_argument("--output", "-o", help="write the report to a file")

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["json", "md"], default=argparse.SUPPRESS)
    common.add_argument("--cutoff", type=int, default=argparse.SUPPRESS)
    common.add_argument("--output", "-o", default=argparse.SUPPRESS)
    common.add_argument("--algebra", help="algebra document or bundled name for module inputs")

    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", parents=[common], help="check an algebra document")
    p.add_argument("algebra_file", metavar="algebra")
    p.set_defaults(func=cmd_validate, algebra_arg=True)

    p = sub.add_parser("modules", parents=[common], help="simples, projectives or injectives")
    p.add_argument("algebra_file", metavar="algebra")
    p.add_argument("--kind", choices=["simples", "projectives", "injectives"], default="simples")
    p.set_defaults(func=cmd_modules, algebra_arg=True)

    p = sub.add_parser("resolve", parents=[common], help="minimal (co)resolution")
    p.add_argument("module")
    p.add_argument("--direction", choices=["proj", "inj"], default="proj")
    p.set_defaults(func=cmd_resolve)

    p = sub.add_parser("ext", parents=[common], help="Ext dimensions")
    p.add_argument("--from", dest="source", required=True)
    p.add_argument("--to", dest="target", required=True)
    p.set_defaults(func=cmd_ext)

    p = sub.add_parser("gorenstein", parents=[common], help="injective dimensions of the regular modules")
    p.add_argument("algebra_file", metavar="algebra")
    p.set_defaults(func=cmd_gorenstein, algebra_arg=True)

    p = sub.add_parser("gproj", help="Gorenstein projective certification")
    gsub = p.add_subparsers(dest="gproj_command", required=True)
    q = gsub.add_parser("certify", parents=[common])
    q.add_argument("module")
    q.set_defaults(func=cmd_gproj_certify)
    q = gsub.add_parser("closure", parents=[common])
    q.add_argument("--seeds", required=True, help="directory of module documents")
    q.add_argument("--max-steps", type=int, default=32)
    q.set_defaults(func=cmd_gproj_closure)

    p = sub.add_parser("rd", parents=[common], help="rigidity degree")
    p.add_argument("module")
    p.set_defaults(func=cmd_rd)

    p = sub.add_parser("domdim", parents=[common], help="relative dominant dimension")
    p.add_argument("module")
    p.add_argument("--relative-to", required=True)
    p.set_defaults(func=cmd_domdim)

    p = sub.add_parser("grigdim", parents=[common], help="Gorenstein rigidity dimension")
    p.add_argument("algebra_file", metavar="algebra")
    p.add_argument("--set", help="Gorenstein projective set document")
    p.set_defaults(func=cmd_grigdim, algebra_arg=True)

    p = sub.add_parser("construct", parents=[common], help="build a new algebra")
    p.add_argument("kind", choices=["product", "tensor", "corner", "morita-context", "endo"])
    p.add_argument("inputs", nargs="+")
    p.add_argument("--e")
    p.add_argument("--f")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("verify", parents=[common], help="check an identity on an instance")
    p.add_argument("claim", choices=["lemma33", "prop35-product", "prop35-tensor", "prop35-morita",
                                     "ex38", "ex310", "gendo"])
    p.add_argument("inputs", nargs="*")
    p.add_argument("--module", help="module (lemma33) or progenerator (prop35-morita)")
    p.add_argument("--set")
    p.add_argument("--e")
    p.add_argument("--f")
    p.add_argument("--n", type=int, default=2)
    p.add_argument("--generator", help="gendo: use End(A + X) with e the projection onto A")
    p.set_defaults(func=cmd_verify)
    return parser


def to_markdown(report: dict) -> str:
    lines = [f"# grig {report['command']}", ""]
    lines.append(f"- exit code: {report['exit_code']}")
    lines.append(f"- scope: {report['scope']}")
    result = report.get("result") or {}
    if "error" in report:
        lines.append(f"- error: {report['error']['type']}: {report['error']['message']}")
    if "instances" in result:
        lines.append(f"- claim: {result['claim']}")
        lines.append(f"- holds: {result['holds']}")
        lines += ["", "| lhs | relation | rhs | holds | note |", "|---|---|---|---|---|"]
        for inst in result["instances"]:
            lines.append(f"| {_md_val(inst['lhs'])} | {inst['relation']} | {_md_val(inst['rhs'])} "
                         f"| {inst['holds']} | {inst['note']} |")
        for c in result["caveats"]:
            lines.append(f"- caveat: {c}")
    else:
        for key in sorted(result):
            val = result[key]
            if isinstance(val, (str, int, float, bool)) or val is None:
                lines.append(f"- {key}: {val}")
            elif isinstance(val, dict) and len(val) == 1 and next(iter(val)) in ("finite", "infinite", "at_least"):
                lines.append(f"- {key}: {_md_val(val)}")
            elif isinstance(val, list) and all(isinstance(x, (int, str)) for x in val):
                lines.append(f"- {key}: {', '.join(map(str, val))}")
            else:
                lines.append(f"- {key}: (structured; see the JSON report)")
    return "\n".join(lines) + "\n"


def _md_val(v) -> str:
    if isinstance(v, str):
        return v
    if "finite" in v:
        return str(v["finite"])
    if "infinite" in v:
        return f"infinite ({v['infinite'].get('kind')})"
    return f">= {v['at_least']}"


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "algebra_arg", False):
        args.algebra = args.algebra_file
    ld = Loader()
    command = args.command + (f" {args.gproj_command}" if args.command == "gproj" else "")
    report: dict = {"command": command, "cutoff": args.cutoff, "scope": SCOPE,
                    "timestamp": _dt.datetime.now(_dt.timezone.utc).isoformat(timespec="seconds")}
    try:
        result, code = args.func(args, ld)
        report["result"] = result
    except GrigError as exc:
        code = exc.exit_code
        report["error"] = {"type": type(exc).__name__, "message": str(exc)}
    except (OSError, ValueError, KeyError) as exc:
        code = 2
        report["error"] = {"type": type(exc).__name__, "message": str(exc)}
    report["exit_code"] = code
    text = dump_json(report) + "\n" if args.format == "json" else to_markdown(report)
    if args.output:
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    raise SystemExit(main())
