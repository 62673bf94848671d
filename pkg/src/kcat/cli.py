"""Command-line front end.

    kcat validate category FILE
    kcat construct contract CAT PARTITION
    kcat check duality GRADING
    kcat pipeline galois-to-smash GRADING

Exit status: 0 if every check passed, 1 if any failed, 2 for malformed input.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import io
from .category import endomorphism_algebra, validate_category
from .constructions import (
    additivise,
    contract,
    enumerate_idempotents,
    expand,
    inflate,
    karoubi_restricted,
    matrix_category,
)
from .errors import AxiomViolation, KCatError, MalformedInput
from .field import Field
from .functor import functor_properties, validate_functor
from .galois import quotient, skew
from .hopf import validate_group, validate_hopf
from .modules import module_contract, roundtrip_report, validate_module
from .morita import morita_rebase, validate_context
from .pipelines import duality_checks, galois_to_smash, iso_L_checks, quotient_iso_checks, smash_to_galois
from .report import Report
from .smash import smash_cover, smash_hopf
from .structures import validate_action, validate_grading, validate_hmodule

EXIT_OK, EXIT_FAIL, EXIT_MALFORMED = 0, 1, 2

DATA = Path(__file__).resolve().parent / "data"


def _common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--field", help="q or fp:P (overrides the field named in input files)")
    p.add_argument("--json", action="store_true", help="emit the report as JSON")
    p.add_argument("--budget", type=int, default=10_000, help="isomorphism-search budget (finite fields)")
    p.add_argument("--out", help="directory for output files")
    p.add_argument("-v", "--verbose", action="store_true", help="list passing checks too")


def build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(prog="kcat", description="Finite k-linear categories: constructions and checks.")
    sub = top.add_subparsers(dest="command", required=True)

    v = sub.add_parser("validate", help="check the axioms of an input file")
    v.add_argument("kind", choices=["category", "group", "hopf", "grading", "action", "hmodule",
                                    "functor", "module", "context"])
    v.add_argument("file")
    v.add_argument("extra", nargs="?", help="category file (for kind=context)")
    _common(v)

    c = sub.add_parser("construct", help="build a category and write it as JSON")
    c.add_argument("op", choices=["contract", "expand", "inflate", "matrix", "smash-hopf", "smash-cover",
                                  "skew", "quotient", "karoubi", "additivise", "rebase"])
    c.add_argument("inputs", nargs="+")
    _common(c)

    k = sub.add_parser("check", help="verify one of the isomorphism claims")
    k.add_argument("claim", choices=["iso-L", "quotient-iso", "duality", "module-roundtrip", "props"])
    k.add_argument("inputs", nargs="+")
    _common(k)

    p = sub.add_parser("pipeline", help="run an end-to-end verification pipeline")
    p.add_argument("name", choices=["galois-to-smash", "smash-to-galois"])
    p.add_argument("input", nargs="?", help="grading file (galois-to-smash) or kG-module file (smash-to-galois)")
    _common(p)

    e = sub.add_parser("examples", help="print the directory of bundled example files")
    _common(e)
    return top


def _field(args) -> Field | None:
    return Field.parse(args.field) if args.field else None


def _doc(path) -> io.Doc:
    return io.Doc.load(path)


# -- commands ---------------------------------------------------------------------


def cmd_validate(args) -> tuple[Report, dict]:
    F = _field(args)
    d = _doc(args.file)
    kind = args.kind
    if kind == "category":
        return validate_category(io.category_from_doc(d, F)), {}
    if kind == "group":
        return validate_group(io.group_from_doc(d)), {}
    if kind == "hopf":
        return validate_hopf(io.hopf_from_doc(d, F)), {}
    if kind == "grading":
        C, G, g = io.grading_from_doc(d, F)
        return validate_grading(C, G, g), {}
    if kind == "action":
        C, G, a = io.action_from_doc(d, F)
        return validate_action(C, G, a), {}
    if kind == "hmodule":
        C, H, rho, _ = io.hmodule_from_doc(d, F)
        return validate_hmodule(C, H, rho), {}
    if kind == "functor":
        return validate_functor(io.functor_from_doc(d, F)), {}
    if kind == "module":
        return validate_module(io.module_from_doc(d, F)), {}
    if not args.extra:
        raise MalformedInput("validate context needs the category file as a second argument")
    C = io.load_category(args.extra, F)
    return validate_context(C, io.context_from_doc(d, C)), {}


def _need(inputs, n, usage):
    if len(inputs) < n:
        raise MalformedInput(f"usage: {usage}")
    return inputs


def cmd_construct(args) -> tuple[Report, dict]:
    F = _field(args)
    op, ins = args.op, args.inputs
    if op == "contract":
        cat, part = _need(ins, 2, "construct contract CAT PARTITION")[:2]
        C = io.load_category(cat, F)
        out = contract(C, io.partition_from_doc(_doc(part), C))
    elif op == "expand":
        cat, idem = _need(ins, 2, "construct expand CAT IDEMPOTENTS")[:2]
        C = io.load_category(cat, F)
        out = expand(C, io.idempotents_from_doc(_doc(idem), C))
    elif op == "inflate":
        cat, spec = _need(ins, 2, "construct inflate CAT INDEX_SETS")[:2]
        C = io.load_category(cat, F)
        out, _ = inflate(C, io.inflation_from_doc(_doc(spec), C))
    elif op == "matrix":
        cat, n = _need(ins, 2, "construct matrix CAT N")[:2]
        out = matrix_category(io.load_category(cat, F), int(n))
    elif op == "smash-hopf":
        C, H, rho, _ = io.hmodule_from_doc(_doc(_need(ins, 1, "construct smash-hopf HMODULE")[0]), F)
        out = smash_hopf(C, H, rho)
    elif op == "smash-cover":
        C, G, g = io.grading_from_doc(_doc(_need(ins, 1, "construct smash-cover GRADING")[0]), F)
        out = smash_cover(C, G, g)
    elif op in ("skew", "quotient"):
        C, G, a = io.action_from_doc(_doc(_need(ins, 1, f"construct {op} ACTION")[0]), F)
        out = skew(C, G, a) if op == "skew" else quotient(C, G, a)
    elif op == "karoubi":
        cat = _need(ins, 1, "construct karoubi CAT [IDEMPOTENTS]")[0]
        C = io.load_category(cat, F)
        if len(ins) > 1:
            idems = io.idempotents_from_doc(_doc(ins[1]), C)
        else:
            idems = {x: enumerate_idempotents(endomorphism_algebra(C, x)) for x in C.objects}
        out = karoubi_restricted(C, idems)
    elif op == "additivise":
        cat, bound = _need(ins, 2, "construct additivise CAT BOUND")[:2]
        out = additivise(io.load_category(cat, F), int(bound))
    else:
        cat, ctx = _need(ins, 2, "construct rebase CAT CONTEXT")[:2]
        C = io.load_category(cat, F)
        out = morita_rebase(C, io.context_from_doc(_doc(ctx), C))
    rep = validate_category(out)
    rep.title = f"construct {op}: {out.name}"
    rep.add("output", True, detail=f"{len(out.objects)} objects, total dim {out.total_dim()}")
    return rep, {f"{op}.json": io.category_to_dict(out)} if rep.ok else {}


def cmd_check(args) -> tuple[Report, dict]:
    F = _field(args)
    claim, ins = args.claim, args.inputs
    rep = Report(f"check {claim}")
    if claim == "iso-L":
        C, G, g = io.grading_from_doc(_doc(ins[0]), F)
        iso_L_checks(C, G, g, rep)
    elif claim == "duality":
        C, G, g = io.grading_from_doc(_doc(ins[0]), F)
        duality_checks(C, G, g, rep)
    elif claim == "quotient-iso":
        C, H, rho, G = io.hmodule_from_doc(_doc(ins[0]), F)
        if G is None:
            raise MalformedInput("quotient-iso needs a kG-module file that names its group")
        quotient_iso_checks(C, G, rho, rep)
    elif claim == "module-roundtrip":
        _need(ins, 2, "check module-roundtrip MODULE PARTITION")
        M = io.module_from_doc(_doc(ins[0]), F)
        E = io.partition_from_doc(_doc(ins[1]), M.category)
        rep.extend(validate_module(M))
        rep.extend(roundtrip_report(M=M, N=module_contract(M, E), E=E, C=M.category))
    else:
        Fn = io.functor_from_doc(_doc(ins[0]), F)
        rep.extend(validate_functor(Fn))
        props = functor_properties(Fn, budget=args.budget)
        rep.extend(props.report())
    return rep, {}


def cmd_pipeline(args) -> tuple[Report, dict]:
    F = _field(args)
    if args.name == "galois-to-smash":
        C, G, g = io.grading_from_doc(_doc(args.input or DATA / "kc2_grading.json"), F)
        return galois_to_smash(C, G, g), {}
    C, H, rho, G = io.hmodule_from_doc(_doc(args.input or DATA / "sign_action.json"), F)
    if G is None:
        raise MalformedInput("smash-to-galois needs a kG-module file that names its group")
    return smash_to_galois(C, G, rho), {}


COMMANDS = {"validate": cmd_validate, "construct": cmd_construct, "check": cmd_check, "pipeline": cmd_pipeline}


def _emit(args, rep: Report, files: dict) -> None:
    if args.json:
        sys.stdout.write(rep.to_json() + "\n")
    else:
        sys.stdout.write(rep.to_text(verbose=args.verbose) + "\n")
    for fname, obj in files.items():
        if args.out:
            Path(args.out).mkdir(parents=True, exist_ok=True)
            io.dump(obj, Path(args.out) / fname)
        elif not args.json:
            sys.stdout.write(io.dump(obj))


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "examples":
        print(DATA)
        return EXIT_OK
    try:
        rep, files = COMMANDS[args.command](args)
    except MalformedInput as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_MALFORMED
    except OSError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_MALFORMED
    except AxiomViolation as exc:
        rep = exc.report or Report(args.command)
        if exc.report is None:
            rep.add(str(exc), False, exc.witness)
        _emit(args, rep, {})
        return EXIT_FAIL
    except KCatError as exc:
        rep = Report(args.command)
        rep.add(type(exc).__name__, False, detail=str(exc))
        _emit(args, rep, {})
        return EXIT_FAIL
    _emit(args, rep, files)
    return EXIT_OK if rep.ok else EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
