"""Command-line entry point: parse structure files, run checks, perform
constructions, print deterministic reports.

Exit status: 0 all checks pass, 1 usage/parse/I-O error, 2 a mathematical
check failed or a construction gate refused.
"""

import argparse
import sys

from .fields import ExactError, GF, QQ
from .matrices import Matrix
from .report import CheckResult, Report, StructureError
from .actions import YDModule
from .braided import (
    braiding,
    braiding_inverse,
    check_yang_baxter,
    check_yd_morphism,
    yang_baxter_operator,
)
from .constructions import (
    Bundle,
    biproduct_antipode,
    coaction_twist_map,
    flip_twist_map,
    radford_biproduct,
    smash_coproduct,
    smash_product,
    t_smash_coproduct,
)
from .quasitriangular import check_cobraiding_equivalence, check_rmatrix_equivalence
from . import catalog as cat
from . import textfmt

USAGE_EXIT = 1
MATH_EXIT = 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _parse_field(token):
    if token == "Q":
        return QQ
    if token.startswith("GF"):
        digits = token[2:].lstrip(":")
        if digits.isdigit():
            return GF(int(digits))
    raise UsageError(f"unknown field {token!r} (use Q or GF<p>)")


def _load(path):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc}") from exc
    return textfmt.realize(textfmt.parse_document(text))


def _emit(path, text):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(text)


def _print_reports(reports, witnesses):
    ok = True
    for rep in reports:
        for line in rep.lines(witnesses):
            print(line)
        ok = ok and rep.passed
    print(f"OVERALL {'PASS' if ok else 'FAIL'}")
    return 0 if ok else MATH_EXIT


def _block_names(real, kinds):
    seen = []
    for block in real.document.blocks:
        if block.kind in kinds and block.name not in seen:
            seen.append(block.name)
    return seen


def _pick(real, kinds, option, given):
    if given is not None:
        for kind in kinds:
            if (kind, given) in real.structures:
                return given
        raise UsageError(f"no {'/'.join(kinds)} block named {given!r}")
    names = _block_names(real, kinds)
    if len(names) == 1:
        return names[0]
    raise UsageError(
        f"--{option} required: found {len(names)} candidate blocks {names}"
    )


def _get_hom(real, name):
    return real.structures.get(("HOPF", name)) or real.structures[("BIALGEBRA", name)]


def _linear_combo(field, basis, coeffs):
    terms = []
    for i, label in enumerate(basis):
        v = coeffs[i]
        if v == field.zero:
            continue
        text = field.format(v)
        if text == "1":
            terms.append(label)
        elif text == "-1":
            terms.append(f"-{label}")
        else:
            terms.append(f"{text}*{label}")
    return " + ".join(terms) if terms else "0"


def _yd_module(real, name):
    act = real.structures.get(("ACTION", name))
    coact = real.structures.get(("COACTION", name))
    if act is None or coact is None:
        raise UsageError(f"module {name!r} needs both an ACTION and a COACTION block")
    return YDModule(act, coact, name=name, check=False)


def _bundle_from_args(real, args):
    carrier = _pick(real, ("ALGEBRA",), "carrier", args.carrier)
    alg, coalg = textfmt.carrier_pieces(real, carrier)
    if alg is None or coalg is None:
        raise UsageError(f"carrier {carrier!r} needs both an ALGEBRA and a COALGEBRA block")
    hom_name = _pick(real, ("HOPF", "BIALGEBRA"), "hopf", args.hopf)
    hom = _get_hom(real, hom_name)
    action_name = _pick(real, ("ACTION",), "action", args.action)
    coaction_name = _pick(real, ("COACTION",), "coaction", args.coaction)
    s = real.antipodes.get(("ALGEBRA", carrier)) or real.antipodes.get(("COALGEBRA", carrier))
    return Bundle(
        algebra=alg,
        coalgebra=coalg,
        hom=hom,
        action=real.structures[("ACTION", action_name)],
        coaction=real.structures[("COACTION", coaction_name)],
        carrier_antipode=s,
    )


def _cmd_check(args):
    real = _load(args.file)
    reports = textfmt.run_checks(real)
    if not reports:
        raise UsageError("the document contains no checkable blocks")
    return _print_reports(reports, args.witness)


def _cmd_construct(args):
    real = _load(args.file)
    field = real.field
    name = args.name
    if args.what == "smash":
        carrier = _pick(real, ("ALGEBRA",), "carrier", args.carrier)
        alg = real.structures[("ALGEBRA", carrier)]
        hom = _get_hom(real, _pick(real, ("HOPF", "BIALGEBRA"), "hopf", args.hopf))
        act = real.structures[("ACTION", _pick(real, ("ACTION",), "action", args.action))]
        made = smash_product(alg, hom, act, name=name)
        reports = [made.gate]
        chunk = textfmt.algebra_lines(name, made.algebra)
        summary = f"constructed ALGEBRA {name} (dim {made.algebra.dim})"
    elif args.what == "cosmash":
        carrier = _pick(real, ("COALGEBRA",), "carrier", args.carrier)
        coalg = real.structures[("COALGEBRA", carrier)]
        hom = _get_hom(real, _pick(real, ("HOPF", "BIALGEBRA"), "hopf", args.hopf))
        coact = real.structures[("COACTION", _pick(real, ("COACTION",), "coaction", args.coaction))]
        made = smash_coproduct(coalg, hom, coact, name=name)
        reports = [made.gate]
        chunk = textfmt.coalgebra_lines(name, made.coalgebra)
        summary = f"constructed COALGEBRA {name} (dim {made.coalgebra.dim})"
    elif args.what == "tsmash":
        carrier = _pick(real, ("COALGEBRA",), "carrier", args.carrier)
        coalg = real.structures[("COALGEBRA", carrier)]
        hom = _get_hom(real, _pick(real, ("HOPF", "BIALGEBRA"), "hopf", args.hopf))
        if args.t == "flip":
            t_map = flip_twist_map(coalg, hom)
        else:
            coact = real.structures[
                ("COACTION", _pick(real, ("COACTION",), "coaction", args.coaction))
            ]
            t_map = coaction_twist_map(coalg, hom, coact)
        made = t_smash_coproduct(coalg, hom, t_map, name=name)
        reports = [made.gate]
        chunk = textfmt.coalgebra_lines(name, made.coalgebra)
        summary = f"constructed COALGEBRA {name} (dim {made.coalgebra.dim})"
    else:  # biproduct
        bundle = _bundle_from_args(real, args)
        made = radford_biproduct(bundle, name=name)
        reports = list(made.gates)
        chunk = textfmt.bialgebra_lines(name, made.bialgebra)
        summary = f"constructed BIALGEBRA {name} (dim {made.bialgebra.dim})"
    code = _print_reports(reports, args.witness)
    print(summary)
    if args.emit:
        _emit(args.emit, textfmt.render_document(field, [chunk]))
    return code


def _cmd_antipode(args):
    real = _load(args.file)
    bundle = _bundle_from_args(real, args)
    if bundle.carrier_antipode is None:
        raise UsageError("the carrier blocks carry no ANTIPODE stanza")
    made = radford_biproduct(bundle, name=args.name)
    anti = biproduct_antipode(bundle)
    reports = list(made.gates) + [anti.gate]
    code = _print_reports(reports, args.witness)
    basis = made.bialgebra.basis
    field = real.field
    n = made.bialgebra.dim
    for j, label in enumerate(basis):
        col = [anti.matrix.entry(i, j) for i in range(n)]
        print(f"S({label}) = {_linear_combo(field, basis, col)}")
    if args.emit:
        chunk = textfmt.bialgebra_lines(args.name, made.bialgebra, antipode=anti.matrix, kind="HOPF")
        _emit(args.emit, textfmt.render_document(field, [chunk]))
    return code


def _cmd_braiding_test(args):
    real = _load(args.file)
    if len(args.modules) != 2:
        raise UsageError("braiding-test needs exactly two module names")
    m1 = _yd_module(real, args.modules[0])
    m2 = _yd_module(real, args.modules[1])
    if getattr(m1.hom, "antipode", None) is None:
        raise UsageError("braiding-test needs a HOPF acting block (antipode required)")
    c = braiding(m1, m2, check=False)
    ci = braiding_inverse(m1, m2, check=False)
    reports = [check_yd_morphism(c, title=f"braiding c({args.modules[0]},{args.modules[1]})")]
    ident_src = Matrix.identity(real.field, c.source.dim)
    ident_tgt = Matrix.identity(real.field, c.target.dim)
    inverse_checks = (
        CheckResult("inverse.left", ci.matrix * c.matrix == ident_src),
        CheckResult("inverse.right", c.matrix * ci.matrix == ident_tgt),
    )
    reports.append(Report("braiding invertibility", inverse_checks))
    code = _print_reports(reports, args.witness)
    if args.emit_matrix:
        _emit(args.emit_matrix, textfmt.render_matrix_rows(c.matrix))
    return code


def _cmd_ybe_test(args):
    real = _load(args.file)
    if len(args.modules) != 3:
        raise UsageError("ybe-test needs exactly three module names")
    mods = [_yd_module(real, name) for name in args.modules]
    report = check_yang_baxter(*mods, title="Yang-Baxter operator checks")
    code = _print_reports([report], args.witness)
    if args.emit_matrix:
        _emit(args.emit_matrix, textfmt.render_matrix_rows(yang_baxter_operator(mods[0], mods[1])))
    return code


def _cmd_qt_check(args):
    real = _load(args.file)
    reports = []
    for block in real.document.blocks:
        obj = real.structures.get((block.kind, block.name))
        if block.kind == "RMATRIX":
            hom = real.structures[("HOPF", block.on)]
            reports.append(
                check_rmatrix_equivalence(
                    hom, rmatrix=obj, title=f"RMATRIX {block.name}: quasitriangular/YD equivalence"
                )
            )
        elif block.kind == "FORM":
            hom = real.structures[("HOPF", block.on)]
            reports.append(
                check_cobraiding_equivalence(
                    hom, obj, title=f"FORM {block.name}: cobraiding contract"
                )
            )
    if not reports:
        raise UsageError("no RMATRIX or FORM blocks found")
    return _print_reports(reports, args.witness)


def _cmd_catalog(args):
    if args.action == "list":
        for entry in cat.CATALOG:
            param = entry.param or "-"
            print(f"{entry.identifier:24} param={param:2} {entry.summary}")
        return 0
    field = _parse_field(args.field)
    try:
        entry = cat.catalog_entry(args.id)
    except KeyError as exc:
        raise UsageError(f"unknown catalog entry {args.id!r}") from exc
    param = None
    if entry.param is not None:
        token = args.param if args.param is not None else str(entry.default_param)
        param = field.parse(token)
    text = textfmt.catalog_document(entry.identifier, field, param)
    if args.action == "show":
        sys.stdout.write(text)
        if args.emit:
            _emit(args.emit, text)
        return 0
    real = textfmt.realize(textfmt.parse_document(text))
    reports = textfmt.run_checks(real)
    code = _print_reports(reports, args.witness)
    if args.emit:
        _emit(args.emit, text)
    return code


def build_parser():
    parser = _Parser(prog="homhopf", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p_check = sub.add_parser("check", help="run every applicable axiom checker on a file")
    p_check.add_argument("file")
    p_check.add_argument("--witness", action="store_true", help="print counterexample tuples")
    p_check.set_defaults(func=_cmd_check)

    p_con = sub.add_parser("construct", help="gate-checked constructions")
    p_con.add_argument("what", choices=["smash", "cosmash", "tsmash", "biproduct"])
    p_con.add_argument("file")
    p_con.add_argument("--carrier")
    p_con.add_argument("--hopf")
    p_con.add_argument("--action")
    p_con.add_argument("--coaction")
    p_con.add_argument("--t", choices=["coaction", "flip"], default="coaction",
                       help="twist-map source for tsmash")
    p_con.add_argument("--name", default="constructed")
    p_con.add_argument("--emit", help="write the constructed structure to this path")
    p_con.add_argument("--witness", action="store_true")
    p_con.set_defaults(func=_cmd_construct)

    p_anti = sub.add_parser("antipode", help="biproduct antipode from a bundle file")
    p_anti.add_argument("file")
    p_anti.add_argument("--carrier")
    p_anti.add_argument("--hopf")
    p_anti.add_argument("--action")
    p_anti.add_argument("--coaction")
    p_anti.add_argument("--name", default="biproduct")
    p_anti.add_argument("--emit")
    p_anti.add_argument("--witness", action="store_true")
    p_anti.set_defaults(func=_cmd_antipode)

    p_braid = sub.add_parser("braiding-test", help="braiding morphism and invertibility checks")
    p_braid.add_argument("file")
    p_braid.add_argument("--modules", nargs="+", required=True)
    p_braid.add_argument("--emit-matrix", help="write the braiding matrix rows to this path")
    p_braid.add_argument("--witness", action="store_true")
    p_braid.set_defaults(func=_cmd_braiding_test)

    p_ybe = sub.add_parser("ybe-test", help="Yang-Baxter operator checks on three modules")
    p_ybe.add_argument("file")
    p_ybe.add_argument("--modules", nargs="+", required=True)
    p_ybe.add_argument("--emit-matrix")
    p_ybe.add_argument("--witness", action="store_true")
    p_ybe.set_defaults(func=_cmd_ybe_test)

    p_qt = sub.add_parser("quasitriangular-check", help="QHA axioms and the YD equivalences")
    p_qt.add_argument("file")
    p_qt.add_argument("--witness", action="store_true")
    p_qt.set_defaults(func=_cmd_qt_check)

    p_cat = sub.add_parser("catalog", help="list, show or check the built-in examples")
    p_cat.add_argument("action", choices=["list", "show", "check"])
    p_cat.add_argument("id", nargs="?")
    p_cat.add_argument("--field", default="Q", help="Q (default) or GF<p>")
    p_cat.add_argument("--param", help="twist parameter k or l, in scalar syntax")
    p_cat.add_argument("--emit")
    p_cat.add_argument("--witness", action="store_true")
    p_cat.set_defaults(func=_cmd_catalog)
    return parser


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command == "catalog" and args.action != "list" and args.id is None:
            raise UsageError("catalog show/check needs an entry id")
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_EXIT
    except textfmt.ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_EXIT
    except StructureError as exc:
        print(f"refused: {exc}", file=sys.stderr)
        if exc.report is not None:
            for line in exc.report.lines(True):
                print(line, file=sys.stderr)
        return MATH_EXIT
    except ExactError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_EXIT


if __name__ == "__main__":
    sys.exit(main())
