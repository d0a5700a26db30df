"""The line-oriented structure-document format: parse, canonical print,
realization into library objects, and the standard check driver.

Grammar (FORMAT 1):

    document  = "FORMAT 1" field block*
    field     = "FIELD Q" | "FIELD GF" prime
    block     = kind name NL stanza* "END"
    kind      = ALGEBRA | COALGEBRA | BIALGEBRA | HOPF
              | ACTION | COACTION | RMATRIX | FORM

Stanza lines give one image row each, scalars in the shared textual form
(`-3/2`, reduced integers over GF(p)).  Structure-constant rows that are
omitted are zero; duplicate rows are a parse error.  See the README for the
full stanza list.
"""

from dataclasses import dataclass, field as dc_field

from .fields import ExactError, GF, QQ
from .matrices import Matrix
from .structures import (
    HomAlgebra,
    HomBialgebra,
    HomCoalgebra,
    HomHopf,
    check_antipode,
    check_hom_algebra,
    check_hom_bialgebra,
    check_hom_coalgebra,
)
from .actions import (
    ActionMap,
    CoactionMap,
    YDModule,
    check_action_axioms,
    check_coaction_axioms,
    check_hyd,
    check_hyd_prime,
)
from .constructions import carrier_antipode_report
from .quasitriangular import (
    CobraidingForm,
    RMatrix,
    check_cobraiding_equivalence,
    check_quasitriangular,
)

__all__ = [
    "ParseError",
    "Block",
    "StructureDocument",
    "parse_document",
    "render_document",
    "Realization",
    "realize",
    "run_checks",
    "catalog_document",
    "render_matrix_rows",
    "render_parsed",
]

STRUCTURAL_KINDS = ("ALGEBRA", "COALGEBRA", "BIALGEBRA", "HOPF")
BLOCK_KINDS = STRUCTURAL_KINDS + ("ACTION", "COACTION", "RMATRIX", "FORM")


class ParseError(Exception):
    def __init__(self, lineno, message):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


@dataclass
class Block:
    kind: str
    name: str
    lineno: int
    dim: int | None = None
    basis: tuple | None = None
    acting: str | None = None
    carrier: str | None = None
    on: str | None = None
    unit: list | None = None
    counit: list | None = None
    twist: dict = dc_field(default_factory=dict)
    mult: dict = dc_field(default_factory=dict)
    comult: dict = dc_field(default_factory=dict)
    antipode: dict = dc_field(default_factory=dict)
    action_rows: dict = dc_field(default_factory=dict)
    coaction_rows: dict = dc_field(default_factory=dict)
    coeff: dict = dc_field(default_factory=dict)


@dataclass
class StructureDocument:
    field: object
    blocks: tuple


def _parse_scalars(field, tokens, lineno):
    try:
        return [field.parse(t) for t in tokens]
    except ExactError as exc:
        raise ParseError(lineno, str(exc)) from exc


def _parse_indices(tokens, count, lineno):
    if len(tokens) != count:
        raise ParseError(lineno, f"expected {count} indices, got {len(tokens)}")
    try:
        return tuple(int(t) for t in tokens)
    except ValueError as exc:
        raise ParseError(lineno, f"malformed index in {tokens}") from exc


def _split_stanza(tokens, lineno, n_indices):
    if ":" not in tokens:
        raise ParseError(lineno, "missing ':' separator")
    sep = tokens.index(":")
    idx = _parse_indices(tokens[:sep], n_indices, lineno)
    return idx, tokens[sep + 1 :]


def parse_document(text):
    field = None
    blocks = []
    seen = set()
    current = None
    saw_format = False
    pending = []  # (lineno, stanza validation closures run at block END)
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        head = tokens[0]
        if not saw_format:
            if tokens != ["FORMAT", "1"]:
                raise ParseError(lineno, "document must start with 'FORMAT 1'")
            saw_format = True
            continue
        if field is None:
            if head != "FIELD":
                raise ParseError(lineno, "expected a FIELD declaration")
            if tokens[1:] == ["Q"]:
                field = QQ
            elif len(tokens) == 3 and tokens[1] == "GF":
                try:
                    p = int(tokens[2])
                except ValueError as exc:
                    raise ParseError(lineno, f"malformed modulus {tokens[2]!r}") from exc
                try:
                    field = GF(p)
                except ExactError as exc:
                    raise ParseError(lineno, str(exc)) from exc
            else:
                raise ParseError(lineno, f"unknown field declaration {line!r}")
            continue
        if current is None:
            if head not in BLOCK_KINDS:
                raise ParseError(lineno, f"unknown block kind {head!r}")
            if len(tokens) != 2:
                raise ParseError(lineno, f"{head} header needs exactly one name")
            key = (head, tokens[1])
            if key in seen:
                raise ParseError(lineno, f"duplicate block {head} {tokens[1]}")
            seen.add(key)
            current = Block(kind=head, name=tokens[1], lineno=lineno)
            continue
        if head == "END":
            _validate_block(current, pending)
            blocks.append(current)
            current = None
            pending = []
            continue
        _parse_stanza(field, current, head, tokens, lineno, pending)
    if not saw_format:
        raise ParseError(1, "document must start with 'FORMAT 1'")
    if field is None:
        raise ParseError(1, "missing FIELD declaration")
    if current is not None:
        raise ParseError(current.lineno, f"block {current.kind} {current.name} is not closed")
    return StructureDocument(field, tuple(blocks))


def _parse_stanza(field, block, head, tokens, lineno, pending):
    kind = block.kind
    if head == "DIM":
        if block.dim is not None:
            raise ParseError(lineno, "duplicate DIM")
        try:
            block.dim = int(tokens[1])
        except (IndexError, ValueError) as exc:
            raise ParseError(lineno, "malformed DIM") from exc
        if block.dim <= 0:
            raise ParseError(lineno, "DIM must be positive")
        return
    if head == "BASIS":
        if block.basis is not None:
            raise ParseError(lineno, "duplicate BASIS")
        block.basis = tuple(tokens[1:])
        return
    if head in ("ACTING", "CARRIER", "ON"):
        attr = head.lower()
        if getattr(block, attr) is not None:
            raise ParseError(lineno, f"duplicate {head}")
        if len(tokens) != 2:
            raise ParseError(lineno, f"{head} needs exactly one name")
        setattr(block, attr, tokens[1])
        return
    if head in ("UNIT", "COUNIT"):
        attr = head.lower()
        if getattr(block, attr) is not None:
            raise ParseError(lineno, f"duplicate {head}")
        vals = _parse_scalars(field, tokens[1:], lineno)
        setattr(block, attr, vals)
        pending.append((lineno, attr, None, vals))
        return
    if head in ("TWIST", "ANTIPODE"):
        target = block.twist if head == "TWIST" else block.antipode
        idx, rest = _split_stanza(tokens[1:], lineno, 1)
        if idx[0] in target:
            raise ParseError(lineno, f"duplicate {head} row {idx[0]}")
        vals = _parse_scalars(field, rest, lineno)
        target[idx[0]] = vals
        pending.append((lineno, head.lower(), idx, vals))
        return
    if head == "MULT":
        if kind not in ("ALGEBRA", "BIALGEBRA", "HOPF"):
            raise ParseError(lineno, f"MULT not allowed in {kind}")
        idx, rest = _split_stanza(tokens[1:], lineno, 2)
        if idx in block.mult:
            raise ParseError(lineno, f"duplicate MULT entry {idx}")
        block.mult[idx] = _parse_scalars(field, rest, lineno)
        pending.append((lineno, "mult", idx, block.mult[idx]))
        return
    if head == "COMULT":
        if kind not in ("COALGEBRA", "BIALGEBRA", "HOPF"):
            raise ParseError(lineno, f"COMULT not allowed in {kind}")
        idx, rest = _split_stanza(tokens[1:], lineno, 1)
        if idx[0] in block.comult:
            raise ParseError(lineno, f"duplicate COMULT entry {idx[0]}")
        block.comult[idx[0]] = _parse_scalars(field, rest, lineno)
        pending.append((lineno, "comult", idx, block.comult[idx[0]]))
        return
    if head == "MAP":
        if kind == "ACTION":
            idx, rest = _split_stanza(tokens[1:], lineno, 2)
            if idx in block.action_rows:
                raise ParseError(lineno, f"duplicate MAP entry {idx}")
            block.action_rows[idx] = _parse_scalars(field, rest, lineno)
            pending.append((lineno, "action_rows", idx, block.action_rows[idx]))
        elif kind == "COACTION":
            idx, rest = _split_stanza(tokens[1:], lineno, 1)
            if idx[0] in block.coaction_rows:
                raise ParseError(lineno, f"duplicate MAP entry {idx[0]}")
            block.coaction_rows[idx[0]] = _parse_scalars(field, rest, lineno)
            pending.append((lineno, "coaction_rows", idx, block.coaction_rows[idx[0]]))
        else:
            raise ParseError(lineno, f"MAP not allowed in {kind}")
        return
    if head == "COEFF":
        if kind not in ("RMATRIX", "FORM"):
            raise ParseError(lineno, f"COEFF not allowed in {kind}")
        idx, rest = _split_stanza(tokens[1:], lineno, 1)
        if idx[0] in block.coeff:
            raise ParseError(lineno, f"duplicate COEFF row {idx[0]}")
        block.coeff[idx[0]] = _parse_scalars(field, rest, lineno)
        pending.append((lineno, "coeff", idx, block.coeff[idx[0]]))
        return
    raise ParseError(lineno, f"unknown stanza keyword {head!r}")


def _validate_block(block, pending):
    kind = block.kind
    needs_dim = kind in STRUCTURAL_KINDS or (
        kind in ("ACTION", "COACTION") and block.carrier is None
    )
    if kind in STRUCTURAL_KINDS and block.dim is None:
        raise ParseError(block.lineno, f"{kind} {block.name} is missing DIM")
    if needs_dim and block.dim is None and kind in ("ACTION", "COACTION"):
        raise ParseError(
            block.lineno, f"{kind} {block.name} needs DIM (or a CARRIER reference)"
        )
    n = block.dim
    if block.basis is not None and n is not None and len(block.basis) != n:
        raise ParseError(block.lineno, f"BASIS lists {len(block.basis)} labels for DIM {n}")
    if n is None:
        return  # row lengths validated at realization once the carrier is known
    for lineno, attr, idx, vals in pending:
        if attr in ("unit", "counit", "twist", "antipode", "mult", "coeff"):
            if idx is not None and any(i >= n for i in idx):
                raise ParseError(lineno, f"index {idx} exceeds DIM {n}")
            if len(vals) != n:
                raise ParseError(lineno, f"expected {n} coefficients, got {len(vals)}")
        elif attr == "comult":
            if idx is not None and any(i >= n for i in idx):
                raise ParseError(lineno, f"index {idx} exceeds DIM {n}")
            if len(vals) != n * n:
                raise ParseError(lineno, f"expected {n * n} coefficients, got {len(vals)}")
        elif attr in ("action_rows", "coaction_rows"):
            continue  # depends on the acting structure; validated at realization
    if kind in ("ALGEBRA", "BIALGEBRA", "HOPF") and block.unit is None:
        raise ParseError(block.lineno, f"{kind} {block.name} is missing UNIT")
    if kind in ("COALGEBRA", "BIALGEBRA", "HOPF") and block.counit is None:
        raise ParseError(block.lineno, f"{kind} {block.name} is missing COUNIT")
    if kind == "HOPF" and not block.antipode:
        raise ParseError(block.lineno, f"HOPF {block.name} is missing ANTIPODE rows")


# ---------------------------------------------------------------------------
# realization


@dataclass
class Realization:
    field: object
    document: StructureDocument
    structures: dict
    antipodes: dict


def _columns_matrix(field, rows_dict, n_rows, n_cols):
    """Stanza rows give images of basis vectors, i.e. matrix columns."""
    entries = {}
    for col, vals in rows_dict.items():
        for row, v in enumerate(vals):
            entries[(row, col)] = v
    return Matrix(field, n_rows, n_cols, entries)


def _twist_matrix(field, block, n):
    if not block.twist:
        return Matrix.identity(field, n)
    for i, vals in block.twist.items():
        if i >= n or len(vals) != n:
            raise ExactError(f"TWIST row {i} inconsistent with DIM {n}")
    return _columns_matrix(field, block.twist, n, n)


def _antipode_matrix(field, block, n):
    if not block.antipode:
        return None
    for i, vals in block.antipode.items():
        if i >= n or len(vals) != n:
            raise ExactError(f"ANTIPODE row {i} inconsistent with DIM {n}")
    return _columns_matrix(field, block.antipode, n, n)


def _mult_matrix(field, block, n):
    entries = {}
    for (i, j), vals in block.mult.items():
        if i >= n or j >= n or len(vals) != n:
            raise ExactError(f"MULT row ({i},{j}) inconsistent with DIM {n}")
        for k, v in enumerate(vals):
            entries[(k, i * n + j)] = v
    return Matrix(field, n, n * n, entries)


def _comult_matrix(field, block, n):
    entries = {}
    for i, vals in block.comult.items():
        if i >= n or len(vals) != n * n:
            raise ExactError(f"COMULT row {i} inconsistent with DIM {n}")
        for r, v in enumerate(vals):
            entries[(r, i)] = v
    return Matrix(field, n * n, n, entries)


def realize(doc):
    """Build unchecked library objects from a parsed document."""
    field = doc.field
    structures = {}
    antipodes = {}
    for block in doc.blocks:
        key = (block.kind, block.name)
        if block.kind not in STRUCTURAL_KINDS:
            continue
        n = block.dim
        basis = block.basis or None
        twist = _twist_matrix(field, block, n)
        s = _antipode_matrix(field, block, n)
        if s is not None:
            antipodes[key] = s
        if block.kind == "ALGEBRA":
            structures[key] = HomAlgebra(
                field, _mult_matrix(field, block, n), block.unit, twist,
                basis=basis, name=block.name, check=False,
            )
        elif block.kind == "COALGEBRA":
            structures[key] = HomCoalgebra(
                field, _comult_matrix(field, block, n), block.counit, twist,
                basis=basis, name=block.name, check=False,
            )
        else:
            alg = HomAlgebra(
                field, _mult_matrix(field, block, n), block.unit, twist,
                basis=basis, name=block.name, check=False,
            )
            coalg = HomCoalgebra(
                field, _comult_matrix(field, block, n), block.counit, twist,
                basis=basis, name=block.name, check=False,
            )
            bial = HomBialgebra(alg, coalg, name=block.name, check=False)
            if block.kind == "HOPF":
                structures[key] = HomHopf(bial, s, name=block.name, check=False)
            else:
                structures[key] = bial
    real = Realization(field, doc, structures, antipodes)
    for block in doc.blocks:
        if block.kind in ("ACTION", "COACTION"):
            _realize_map_block(real, block)
        elif block.kind in ("RMATRIX", "FORM"):
            _realize_element_block(real, block)
    return real


def _find_structure(real, name, kinds):
    for kind in kinds:
        obj = real.structures.get((kind, name))
        if obj is not None:
            return obj
    raise ExactError(f"no block of kind {'/'.join(kinds)} named {name!r}")


def _acting_structure(real, block):
    if block.acting is None:
        raise ExactError(f"{block.kind} {block.name} is missing ACTING")
    return _find_structure(real, block.acting, ("HOPF", "BIALGEBRA"))


def carrier_pieces(real, name):
    """The (algebra, coalgebra) structures registered under a carrier name."""
    alg = None
    coalg = None
    for kind in ("ALGEBRA", "BIALGEBRA", "HOPF"):
        obj = real.structures.get((kind, name))
        if obj is not None:
            alg = obj if kind == "ALGEBRA" else obj.algebra
            break
    for kind in ("COALGEBRA", "BIALGEBRA", "HOPF"):
        obj = real.structures.get((kind, name))
        if obj is not None:
            coalg = obj if kind == "COALGEBRA" else obj.coalgebra
            break
    return alg, coalg


def _carrier_data(real, block):
    if block.carrier is not None:
        alg, coalg = carrier_pieces(real, block.carrier)
        ref = alg or coalg
        if ref is None:
            raise ExactError(f"CARRIER {block.carrier!r} names no structural block")
        return ref.dim, ref.twist, ref.basis
    n = block.dim
    twist = _twist_matrix(real.field, block, n)
    basis = block.basis or None
    return n, twist, basis


def _realize_map_block(real, block):
    hom = _acting_structure(real, block)
    m, twist, basis = _carrier_data(real, block)
    n = hom.dim
    field = real.field
    key = (block.kind, block.name)
    if block.kind == "ACTION":
        entries = {}
        for (i, j), vals in block.action_rows.items():
            if i >= n or j >= m or len(vals) != m:
                raise ExactError(f"MAP row ({i},{j}) inconsistent with dims {n}, {m}")
            for r, v in enumerate(vals):
                entries[(r, i * m + j)] = v
        matrix = Matrix(field, m, n * m, entries)
        real.structures[key] = ActionMap(hom, matrix, twist, basis, name=block.name)
    else:
        entries = {}
        for j, vals in block.coaction_rows.items():
            if j >= m or len(vals) != n * m:
                raise ExactError(f"MAP row {j} inconsistent with dims {n}, {m}")
            for r, v in enumerate(vals):
                entries[(r, j)] = v
        matrix = Matrix(field, n * m, m, entries)
        real.structures[key] = CoactionMap(hom, matrix, twist, basis, name=block.name)


def _realize_element_block(real, block):
    if block.on is None:
        raise ExactError(f"{block.kind} {block.name} is missing ON")
    hom = _find_structure(real, block.on, ("HOPF",))
    n = hom.dim
    field = real.field
    if block.kind == "RMATRIX":
        entries = {}
        for i, vals in block.coeff.items():
            if i >= n or len(vals) != n:
                raise ExactError(f"COEFF row {i} inconsistent with DIM {n}")
            for j, v in enumerate(vals):
                entries[(i * n + j, 0)] = v
        real.structures[(block.kind, block.name)] = RMatrix(
            hom, Matrix(field, n * n, 1, entries)
        )
    else:
        entries = {}
        for i, vals in block.coeff.items():
            if i >= n or len(vals) != n:
                raise ExactError(f"COEFF row {i} inconsistent with DIM {n}")
            for j, v in enumerate(vals):
                entries[(i, j)] = v
        real.structures[(block.kind, block.name)] = CobraidingForm(
            hom, Matrix(field, n, n, entries)
        )


# ---------------------------------------------------------------------------
# checking driver


def run_checks(real):
    """The deterministic suite `check` runs over a realized document."""
    reports = []
    doc = real.document
    for block in doc.blocks:
        key = (block.kind, block.name)
        obj = real.structures.get(key)
        title = f"{block.kind} {block.name}"
        if block.kind == "ALGEBRA":
            reports.append(check_hom_algebra(obj, title=f"{title}: Hom-algebra axioms"))
        elif block.kind == "COALGEBRA":
            reports.append(check_hom_coalgebra(obj, title=f"{title}: Hom-coalgebra axioms"))
        elif block.kind == "BIALGEBRA":
            reports.append(check_hom_bialgebra(obj, title=f"{title}: Hom-bialgebra axioms"))
            if key in real.antipodes:
                reports.append(
                    check_antipode(obj, real.antipodes[key], title=f"{title}: antipode axioms")
                )
        elif block.kind == "HOPF":
            reports.append(
                check_hom_bialgebra(obj.bialgebra, title=f"{title}: Hom-bialgebra axioms")
            )
            reports.append(check_antipode(obj.bialgebra, obj.antipode, title=f"{title}: antipode axioms"))
        elif block.kind == "ACTION":
            reports.append(
                check_action_axioms(obj, "module", title=f"{title}: module axioms")
            )
            alg, coalg = (None, None)
            if block.carrier is not None:
                alg, coalg = carrier_pieces(real, block.carrier)
            if alg is not None:
                reports.append(
                    check_action_axioms(
                        obj, "module-algebra", carrier=alg,
                        title=f"{title}: module Hom-algebra axioms",
                    )
                )
            if coalg is not None:
                reports.append(
                    check_action_axioms(
                        obj, "module-coalgebra", carrier=coalg,
                        title=f"{title}: module Hom-coalgebra axioms",
                    )
                )
        elif block.kind == "COACTION":
            reports.append(
                check_coaction_axioms(obj, "comodule", title=f"{title}: comodule axioms")
            )
            alg, coalg = (None, None)
            if block.carrier is not None:
                alg, coalg = carrier_pieces(real, block.carrier)
            if alg is not None:
                reports.append(
                    check_coaction_axioms(
                        obj, "comodule-algebra", carrier=alg,
                        title=f"{title}: comodule Hom-algebra axioms",
                    )
                )
            if coalg is not None:
                reports.append(
                    check_coaction_axioms(
                        obj, "comodule-coalgebra", carrier=coalg,
                        title=f"{title}: comodule Hom-coalgebra axioms",
                    )
                )
        elif block.kind == "RMATRIX":
            hom = _find_structure(real, block.on, ("HOPF",))
            reports.append(
                check_quasitriangular(hom, obj, title=f"{title}: quasitriangular axioms")
            )
        elif block.kind == "FORM":
            hom = _find_structure(real, block.on, ("HOPF",))
            reports.append(
                check_cobraiding_equivalence(hom, obj, title=f"{title}: cobraiding contract")
            )
    # paired antipodes on same-name ALGEBRA/COALGEBRA blocks
    names = []
    for block in doc.blocks:
        if block.kind == "ALGEBRA" and block.name not in names:
            names.append(block.name)
    for name in names:
        alg = real.structures.get(("ALGEBRA", name))
        coalg = real.structures.get(("COALGEBRA", name))
        s = real.antipodes.get(("ALGEBRA", name)) or real.antipodes.get(("COALGEBRA", name))
        if alg is not None and coalg is not None and s is not None:
            reports.append(
                carrier_antipode_report(alg, coalg, s, title=f"PAIR {name}: antipode identities")
            )
    # Yetter-Drinfeld pairs: same-name ACTION and COACTION
    for block in doc.blocks:
        if block.kind != "ACTION":
            continue
        coact = real.structures.get(("COACTION", block.name))
        if coact is None:
            continue
        act = real.structures[("ACTION", block.name)]
        module = YDModule(act, coact, name=block.name, check=False)
        reports.append(check_hyd(module, title=f"PAIR {block.name}: Yetter-Drinfeld compatibility"))
        if getattr(act.hom, "antipode", None) is not None:
            reports.append(
                check_hyd_prime(module, title=f"PAIR {block.name}: antipode-form compatibility")
            )
    return reports


# ---------------------------------------------------------------------------
# canonical printing


def _fmt_row(field, values):
    return " ".join(field.format(v) for v in values)


def _matrix_columns(mat):
    """Images of the basis vectors, i.e. the columns, as dense lists."""
    cols = []
    for j in range(mat.cols):
        cols.append([mat.entry(i, j) for i in range(mat.rows)])
    return cols


def render_field(field):
    if field.characteristic == 0:
        return "FIELD Q"
    return f"FIELD GF {field.characteristic}"


def _structural_lines(kind, name, field, dim, basis, unit=None, counit=None,
                      twist=None, mult=None, comult=None, antipode=None):
    zero = field.zero
    lines = [f"{kind} {name}", f"  DIM {dim}"]
    if basis:
        lines.append("  BASIS " + " ".join(basis))
    if unit is not None:
        lines.append("  UNIT " + _fmt_row(field, [unit.entry(i, 0) for i in range(dim)]))
    if counit is not None:
        lines.append("  COUNIT " + _fmt_row(field, [counit.entry(0, i) for i in range(dim)]))
    if twist is not None:
        for j, col in enumerate(_matrix_columns(twist)):
            lines.append(f"  TWIST {j} : " + _fmt_row(field, col))
    if mult is not None:
        for i in range(dim):
            for j in range(dim):
                col = [mult.entry(k, i * dim + j) for k in range(dim)]
                if any(v != zero for v in col):
                    lines.append(f"  MULT {i} {j} : " + _fmt_row(field, col))
    if comult is not None:
        for i in range(dim):
            col = [comult.entry(r, i) for r in range(dim * dim)]
            if any(v != zero for v in col):
                lines.append(f"  COMULT {i} : " + _fmt_row(field, col))
    if antipode is not None:
        for j, col in enumerate(_matrix_columns(antipode)):
            lines.append(f"  ANTIPODE {j} : " + _fmt_row(field, col))
    lines.append("END")
    return lines


def algebra_lines(name, alg, antipode=None):
    return _structural_lines(
        "ALGEBRA", name, alg.field, alg.dim, alg.basis,
        unit=alg.unit, twist=alg.twist, mult=alg.mult, antipode=antipode,
    )


def coalgebra_lines(name, coalg, antipode=None):
    return _structural_lines(
        "COALGEBRA", name, coalg.field, coalg.dim, coalg.basis,
        counit=coalg.counit, twist=coalg.twist, comult=coalg.comult, antipode=antipode,
    )


def bialgebra_lines(name, h, antipode=None, kind="BIALGEBRA"):
    return _structural_lines(
        kind, name, h.field, h.dim, h.basis,
        unit=h.unit, counit=h.counit, twist=h.twist,
        mult=h.mult, comult=h.comult, antipode=antipode,
    )


def hopf_lines(name, hopf):
    return bialgebra_lines(name, hopf, antipode=hopf.antipode, kind="HOPF")


def action_lines(name, act, acting_name, carrier_name=None):
    field = act.field
    n, m = act.hom.dim, act.carrier_dim
    zero = field.zero
    lines = [f"ACTION {name}", f"  ACTING {acting_name}"]
    if carrier_name is not None:
        lines.append(f"  CARRIER {carrier_name}")
    else:
        lines.append(f"  DIM {m}")
        if act.carrier_basis:
            lines.append("  BASIS " + " ".join(act.carrier_basis))
        for j, col in enumerate(_matrix_columns(act.carrier_twist)):
            lines.append(f"  TWIST {j} : " + _fmt_row(field, col))
    for i in range(n):
        for j in range(m):
            col = [act.matrix.entry(r, i * m + j) for r in range(m)]
            if any(v != zero for v in col):
                lines.append(f"  MAP {i} {j} : " + _fmt_row(field, col))
    lines.append("END")
    return lines


def coaction_lines(name, coact, acting_name, carrier_name=None):
    field = coact.field
    n, m = coact.hom.dim, coact.carrier_dim
    zero = field.zero
    lines = [f"COACTION {name}", f"  ACTING {acting_name}"]
    if carrier_name is not None:
        lines.append(f"  CARRIER {carrier_name}")
    else:
        lines.append(f"  DIM {m}")
        if coact.carrier_basis:
            lines.append("  BASIS " + " ".join(coact.carrier_basis))
        for j, col in enumerate(_matrix_columns(coact.carrier_twist)):
            lines.append(f"  TWIST {j} : " + _fmt_row(field, col))
    for j in range(m):
        col = [coact.matrix.entry(r, j) for r in range(n * m)]
        if any(v != zero for v in col):
            lines.append(f"  MAP {j} : " + _fmt_row(field, col))
    lines.append("END")
    return lines


def rmatrix_lines(name, rmatrix, on_name):
    field = rmatrix.hom.field
    n = rmatrix.hom.dim
    zero = field.zero
    lines = [f"RMATRIX {name}", f"  ON {on_name}"]
    for i in range(n):
        row = [rmatrix.coefficient(i, j) for j in range(n)]
        if any(v != zero for v in row):
            lines.append(f"  COEFF {i} : " + _fmt_row(field, row))
    lines.append("END")
    return lines


def form_lines(name, form, on_name):
    field = form.hom.field
    n = form.hom.dim
    zero = field.zero
    lines = [f"FORM {name}", f"  ON {on_name}"]
    for i in range(n):
        row = [form.matrix.entry(i, j) for j in range(n)]
        if any(v != zero for v in row):
            lines.append(f"  COEFF {i} : " + _fmt_row(field, row))
    lines.append("END")
    return lines


def render_document(field, block_lines):
    lines = ["FORMAT 1", render_field(field)]
    for chunk in block_lines:
        lines.extend(chunk)
    return "\n".join(lines) + "\n"


def render_matrix_rows(mat):
    """Plain matrix export: one row of scalars per line."""
    field = mat.field
    return "\n".join(_fmt_row(field, row) for row in mat.dense()) + "\n"


def render_parsed(doc):
    """Canonical text for a parsed document; scalars in canonical form,
    stanzas in fixed order, zero structure-constant rows dropped."""
    field = doc.field
    chunks = []
    for b in doc.blocks:
        lines = [f"{b.kind} {b.name}"]
        if b.dim is not None:
            lines.append(f"  DIM {b.dim}")
        if b.basis:
            lines.append("  BASIS " + " ".join(b.basis))
        for attr, keyword in (("acting", "ACTING"), ("carrier", "CARRIER"), ("on", "ON")):
            value = getattr(b, attr)
            if value is not None:
                lines.append(f"  {keyword} {value}")
        if b.unit is not None:
            lines.append("  UNIT " + _fmt_row(field, b.unit))
        if b.counit is not None:
            lines.append("  COUNIT " + _fmt_row(field, b.counit))
        for i in sorted(b.twist):
            lines.append(f"  TWIST {i} : " + _fmt_row(field, b.twist[i]))
        for (i, j) in sorted(b.mult):
            vals = b.mult[(i, j)]
            if any(v != field.zero for v in vals):
                lines.append(f"  MULT {i} {j} : " + _fmt_row(field, vals))
        for i in sorted(b.comult):
            vals = b.comult[i]
            if any(v != field.zero for v in vals):
                lines.append(f"  COMULT {i} : " + _fmt_row(field, vals))
        for i in sorted(b.antipode):
            lines.append(f"  ANTIPODE {i} : " + _fmt_row(field, b.antipode[i]))
        for (i, j) in sorted(b.action_rows):
            vals = b.action_rows[(i, j)]
            if any(v != field.zero for v in vals):
                lines.append(f"  MAP {i} {j} : " + _fmt_row(field, vals))
        for j in sorted(b.coaction_rows):
            vals = b.coaction_rows[j]
            if any(v != field.zero for v in vals):
                lines.append(f"  MAP {j} : " + _fmt_row(field, vals))
        for i in sorted(b.coeff):
            vals = b.coeff[i]
            if any(v != field.zero for v in vals):
                lines.append(f"  COEFF {i} : " + _fmt_row(field, vals))
        lines.append("END")
        chunks.append(lines)
    return render_document(field, chunks)


# ---------------------------------------------------------------------------
# catalog export


def catalog_document(identifier, field, param=None):
    """Render a catalog entry in the document format."""
    from . import catalog as cat

    entry = cat.catalog_entry(identifier)
    if entry.param is not None and param is None:
        param = field.coerce(entry.default_param)
    if identifier == "kz2":
        return render_document(field, [hopf_lines("kz2", cat.group_algebra_z2(field))])
    if identifier == "taft-twisted":
        return render_document(field, [hopf_lines("taft", cat.taft_twisted(field, param))])
    if identifier == "dual-number":
        alg = cat.dual_number_algebra(field, param)
        coalg = cat.dual_number_coalgebra(field, param)
        return render_document(
            field,
            [
                algebra_lines("A", alg, antipode=cat.dual_number_antipode(field)),
                coalgebra_lines("A", coalg),
            ],
        )
    if identifier in ("taft-bundle", "dual-number-bundle"):
        bundle = (
            cat.taft_bundle(field, param)
            if identifier == "taft-bundle"
            else cat.dual_number_bundle(field, param)
        )
        chunks = [
            hopf_lines("H", bundle.hom),
            algebra_lines("A", bundle.algebra, antipode=bundle.carrier_antipode),
            coalgebra_lines("A", bundle.coalgebra),
            action_lines("yd", bundle.action, "H", carrier_name="A"),
            coaction_lines("yd", bundle.coaction, "H", carrier_name="A"),
        ]
        return render_document(field, chunks)
    if identifier == "taft-biproduct":
        return render_document(
            field, [hopf_lines("biproduct", cat.taft_biproduct(field, param))]
        )
    if identifier == "dual-number-biproduct":
        return render_document(
            field, [hopf_lines("biproduct", cat.dual_number_biproduct(field, param))]
        )
    if identifier == "kz2-rmatrix":
        r = cat.z2_r_matrix(field)
        return render_document(
            field,
            [hopf_lines("H", r.hom), rmatrix_lines("R", r, "H")],
        )
    raise KeyError(identifier)
