"""Smash products and coproducts, the twist-map coproduct, the Radford
biproduct with its R1-R5 gate, and the biproduct antipode.

Constructors return the structure together with the gate reports that
admitted it, so callers can print why a construction went through.
"""

from dataclasses import dataclass

from .fields import ExactError, ShapeError
from .matrices import Matrix, kron, kron_list, leg_perm
from .report import CheckResult, Report, StructureError, eq_check
from .structures import (
    HomAlgebra,
    HomBialgebra,
    HomCoalgebra,
    check_antipode,
    convolution,
    tensor_basis,
)
from .actions import (
    check_action_axioms,
    check_coaction_axioms,
    hyd_lhs_matrix,
    hyd_rhs_matrix,
    same_bialgebra,
)

__all__ = [
    "TwistMapT",
    "Bundle",
    "SmashProduct",
    "SmashCoproduct",
    "TSmashCoproduct",
    "RadfordBiproduct",
    "BiproductAntipode",
    "coaction_twist_map",
    "flip_twist_map",
    "smash_product",
    "smash_coproduct",
    "t_smash_coproduct",
    "check_t_smash_conditions",
    "check_radford_conditions",
    "radford_biproduct",
    "carrier_antipode_report",
    "biproduct_antipode",
    "smash_product_antipode",
    "smash_coproduct_antipode",
    "check_smash_tensor_gate",
    "check_cosmash_tensor_gate",
]


class TwistMapT:
    """A linear map T: C (x) H -> H (x) C compatible with the two twists."""

    def __init__(self, coalgebra, hom, matrix, name=None, check=True):
        m, n = coalgebra.dim, hom.dim
        if (matrix.rows, matrix.cols) != (n * m, m * n):
            raise ShapeError(f"twist map must be {n * m} x {m * n}")
        self.coalgebra = coalgebra
        self.hom = hom
        self.matrix = matrix
        self.name = name
        if check:
            rep = self.compatibility_report()
            if not rep.passed:
                raise StructureError("twist map does not commute with the twists", rep)

    def compatibility_report(self):
        c, h = self.coalgebra, self.hom
        legs_in = (c.basis, h.basis)
        legs_out = (h.basis, c.basis)
        check = eq_check(
            "T.twist-compat",
            self.matrix * kron(c.twist, h.twist),
            kron(h.twist, c.twist) * self.matrix,
            legs_in,
            legs_out,
        )
        return Report(f"twist map compatibility [{self.name or 'T'}]", (check,))


def coaction_twist_map(coalgebra, hom, coaction, check=True):
    """T(c (x) h) = c_{-1} h (x) c_0, the twist map carried by a coaction."""
    field, n, m = hom.field, hom.dim, coalgebra.dim
    i_n = Matrix.identity(field, n)
    step = kron(coaction.matrix, i_n)  # (c-1, c0, h)
    perm = leg_perm(field, (n, m, n), (0, 2, 1))  # (c-1, h, c0)
    matrix = kron(hom.mult, Matrix.identity(field, m)) * perm * step
    return TwistMapT(coalgebra, hom, matrix, name="coaction-twist", check=check)


def flip_twist_map(coalgebra, hom):
    """T = the plain flip c (x) h |-> h (x) c."""
    field = hom.field
    matrix = leg_perm(field, (coalgebra.dim, hom.dim), (1, 0))
    return TwistMapT(coalgebra, hom, matrix, name="flip")


@dataclass(frozen=True)
class SmashProduct:
    algebra: HomAlgebra
    gate: Report


@dataclass(frozen=True)
class SmashCoproduct:
    coalgebra: HomCoalgebra
    gate: Report


@dataclass(frozen=True)
class TSmashCoproduct:
    coalgebra: HomCoalgebra
    gate: Report


@dataclass(frozen=True)
class RadfordBiproduct:
    bialgebra: HomBialgebra
    gates: tuple


@dataclass(frozen=True)
class BiproductAntipode:
    matrix: Matrix
    gate: Report


def smash_mult_matrix(carrier, hom, action):
    """(a (x) h)(a' (x) h') = a(h1 |> alpha^-1(a')) (x) beta^-1(h2) h'."""
    field, m, n = hom.field, carrier.dim, hom.dim
    i_m = Matrix.identity(field, m)
    i_n = Matrix.identity(field, n)
    step = kron_list(i_m, hom.comult, i_m, i_n)  # (a, h1, h2, a', h')
    perm = leg_perm(field, (m, n, n, m, n), (0, 1, 3, 2, 4))  # (a, h1, a', h2, h')
    inner = action.matrix * kron(i_n, carrier.twist_inv)
    left = carrier.mult * kron(i_m, inner)
    right = hom.mult * kron(hom.twist_inv, i_n)
    return kron(left, right) * perm * step


def smash_comult_matrix(carrier, hom, coaction):
    """Delta(c (x) h) = c1 (x) c2_{-1} beta^-1(h1) (x) alpha^-1(c2_0) (x) h2."""
    field, m, n = hom.field, carrier.dim, hom.dim
    i_m = Matrix.identity(field, m)
    i_n = Matrix.identity(field, n)
    step1 = kron(carrier.comult, hom.comult)  # (c1, c2, h1, h2)
    step2 = kron_list(i_m, coaction.matrix, i_n, i_n)  # (c1, c2-1, c2-0, h1, h2)
    perm = leg_perm(field, (m, n, m, n, n), (0, 1, 3, 2, 4))  # (c1, c2-1, h1, c2-0, h2)
    mid = hom.mult * kron(i_n, hom.twist_inv)
    return kron_list(i_m, mid, carrier.twist_inv, i_n) * perm * step2 * step1


def smash_product(carrier, hom, action, name=None, check=True):
    """Smash product Hom-algebra on A (x) H; gated by the module Hom-algebra axioms."""
    gate = check_action_axioms(action, "module-algebra", carrier=carrier)
    if not gate.passed:
        raise StructureError(
            f"action is not a module Hom-algebra: {gate.first_failure().name}", gate
        )
    algebra = HomAlgebra(
        hom.field,
        smash_mult_matrix(carrier, hom, action),
        kron(carrier.unit, hom.unit),
        kron(carrier.twist, hom.twist),
        basis=tensor_basis(carrier.basis, hom.basis),
        name=name or "smash",
        check=check,
    )
    return SmashProduct(algebra, gate)


def smash_coproduct(carrier, hom, coaction, name=None, check=True):
    """Smash coproduct Hom-coalgebra on C (x) H; gated by the comodule Hom-coalgebra axioms."""
    gate = check_coaction_axioms(coaction, "comodule-coalgebra", carrier=carrier)
    if not gate.passed:
        raise StructureError(
            f"coaction is not a comodule Hom-coalgebra: {gate.first_failure().name}", gate
        )
    coalgebra = HomCoalgebra(
        hom.field,
        smash_comult_matrix(carrier, hom, coaction),
        kron(carrier.counit, hom.counit),
        kron(carrier.twist, hom.twist),
        basis=tensor_basis(carrier.basis, hom.basis),
        name=name or "cosmash",
        check=check,
    )
    return SmashCoproduct(coalgebra, gate)


def check_t_smash_conditions(t_map, title=None):
    """The coassociativity/counit gate C1-C3 for a twist-map coproduct."""
    c, h = t_map.coalgebra, t_map.hom
    field, m, n = h.field, c.dim, h.dim
    t = t_map.matrix
    i_n = Matrix.identity(field, n)
    i_m = Matrix.identity(field, m)
    legs_in = (c.basis, h.basis)
    checks = [t_map.compatibility_report().checks[0]]
    checks.append(
        eq_check(
            "C1.counit-H",
            kron(h.counit, i_m) * t,
            c.twist * kron(i_m, h.counit),
            legs_in,
            (c.basis,),
        )
    )
    checks.append(
        eq_check(
            "C1.counit-C",
            kron(i_n, c.counit) * t,
            h.twist * kron(c.counit, i_n),
            legs_in,
            (h.basis,),
        )
    )
    # C2: (Delta_H (x) alpha) T = (beta (x) id)(id (x) T)(T(id (x) beta^-1) (x) id)(id (x) Delta_H)
    lhs2 = kron(h.comult, c.twist) * t
    rhs2 = (
        kron(h.twist, Matrix.identity(field, n * m))
        * kron(i_n, t)
        * kron(t * kron(i_m, h.twist_inv), i_n)
        * kron(i_m, h.comult)
    )
    checks.append(eq_check("C2", lhs2, rhs2, legs_in, (h.basis, h.basis, c.basis)))
    # C3: (beta (x) Delta_C) T (alpha (x) id) = (T(alpha (x) id) (x) alpha)(id (x) T)(Delta_C (x) id)
    lhs3 = kron(h.twist, c.comult) * t * kron(c.twist, i_n)
    rhs3 = (
        kron(t * kron(c.twist, i_n), c.twist)
        * kron(i_m, t)
        * kron(c.comult, i_n)
    )
    checks.append(eq_check("C3", lhs3, rhs3, legs_in, (h.basis, c.basis, c.basis)))
    return Report(title or f"twist-map coproduct gate [{t_map.name or 'T'}]", tuple(checks))


def t_smash_coproduct(carrier, hom, t_map, name=None, check=True):
    """Coproduct Delta(c (x) h) = c1 (x) beta^-1(h1)_T (x) alpha^-1(c2_T) (x) h2,
    admitted iff the C1-C3 gate passes."""
    gate = check_t_smash_conditions(t_map)
    if not gate.passed:
        raise StructureError(
            f"twist-map coproduct gate fails: {gate.first_failure().name}", gate
        )
    field, m, n = hom.field, carrier.dim, hom.dim
    i_m = Matrix.identity(field, m)
    i_n = Matrix.identity(field, n)
    step1 = kron(carrier.comult, hom.comult)  # (c1, c2, h1, h2)
    tpart = t_map.matrix * kron(i_m, hom.twist_inv)  # (c2, h1) -> (h_T, c_T)
    step2 = kron_list(i_m, tpart, i_n)  # (c1, h_T, c_T, h2)
    comult = kron_list(i_m, i_n, carrier.twist_inv, i_n) * step2 * step1
    coalgebra = HomCoalgebra(
        field,
        comult,
        kron(carrier.counit, hom.counit),
        kron(carrier.twist, hom.twist),
        basis=tensor_basis(carrier.basis, hom.basis),
        name=name or "t-cosmash",
        check=check,
    )
    return TSmashCoproduct(coalgebra, gate)


@dataclass(frozen=True)
class Bundle:
    """Carrier with both structures, an acting Hom-bialgebra, and the two maps
    feeding a biproduct; optionally the carrier's own antipode."""

    algebra: HomAlgebra
    coalgebra: HomCoalgebra
    hom: object
    action: object
    coaction: object
    carrier_antipode: Matrix | None = None

    def __post_init__(self):
        a, c = self.algebra, self.coalgebra
        if a.dim != c.dim or a.twist != c.twist or a.basis != c.basis:
            raise ExactError("carrier algebra and coalgebra must share dim, twist and basis")
        for piece in (self.action, self.coaction):
            if piece.carrier_dim != a.dim:
                raise ShapeError("action/coaction carrier dimension mismatch")
            if piece.carrier_twist != a.twist:
                raise ExactError("action/coaction carrier twist mismatch")
            if not same_bialgebra(piece.hom, self.hom):
                raise ExactError("action/coaction act through a different Hom-bialgebra")

    def yd_module(self, check=False, name=None):
        from .actions import YDModule

        return YDModule(self.action, self.coaction, name=name, check=check)


def radford_r4_rhs(bundle):
    """a1 (beta^2(a2_{-1}) |> alpha^-1(b1)) (x) alpha^-1(a2_0) b2 on A (x) A."""
    a, hom = bundle.algebra, bundle.hom
    field, m, n = hom.field, a.dim, hom.dim
    i_m = Matrix.identity(field, m)
    step1 = kron(bundle.coalgebra.comult, bundle.coalgebra.comult)  # (a1, a2, b1, b2)
    step2 = kron_list(i_m, bundle.coaction.matrix, i_m, i_m)  # (a1, a2-1, a2-0, b1, b2)
    perm = leg_perm(field, (m, n, m, m, m), (0, 1, 3, 2, 4))  # (a1, a2-1, b1, a2-0, b2)
    inner = bundle.action.matrix * kron(hom.twist_power(2), a.twist_inv)
    left = a.mult * kron(i_m, inner)
    right = a.mult * kron(a.twist_inv, i_m)
    return kron(left, right) * perm * step2 * step1


def check_radford_conditions(bundle, title=None):
    """The five biproduct gate conditions R1-R5, each an exact map identity."""
    a, c, hom = bundle.algebra, bundle.coalgebra, bundle.hom
    field = hom.field
    ab = a.basis
    checks = []
    r1 = check_coaction_axioms(bundle.coaction, "comodule-algebra", carrier=a)
    fail = r1.first_failure()
    checks.append(CheckResult("R1", r1.passed, None if r1.passed else f"{fail.name}: {fail.witness}"))
    r2 = check_action_axioms(bundle.action, "module-coalgebra", carrier=c)
    fail = r2.first_failure()
    checks.append(CheckResult("R2", r2.passed, None if r2.passed else f"{fail.name}: {fail.witness}"))
    one_by_one = Matrix(field, 1, 1, {(0, 0): field.one})
    r3_parts = [
        eq_check("counit-mult", c.counit * a.mult, kron(c.counit, c.counit), (ab, ab), None),
        eq_check("counit-unit", c.counit * a.unit, one_by_one, None, None),
        eq_check("comult-unit", c.comult * a.unit, kron(a.unit, a.unit), None, (ab, ab)),
    ]
    fail = next((p for p in r3_parts if not p.passed), None)
    checks.append(
        CheckResult("R3", fail is None, None if fail is None else f"{fail.name}: {fail.witness}")
    )
    checks.append(
        eq_check("R4", c.comult * a.mult, radford_r4_rhs(bundle), (ab, ab), (ab, ab))
    )
    legs = (hom.basis, ab)
    checks.append(
        eq_check(
            "R5",
            hyd_lhs_matrix(bundle.action, bundle.coaction),
            hyd_rhs_matrix(bundle.action, bundle.coaction),
            legs,
            legs,
        )
    )
    return Report(title or "biproduct gate R1-R5", tuple(checks))


def radford_biproduct(bundle, name=None, check=True):
    """Assemble the biproduct Hom-bialgebra once the R1-R5 gate passes."""
    gate = check_radford_conditions(bundle)
    if not gate.passed:
        raise StructureError(
            f"biproduct gate fails: {gate.first_failure().name}", gate
        )
    smash = smash_product(bundle.algebra, bundle.hom, bundle.action, name=name, check=check)
    cosmash = smash_coproduct(bundle.coalgebra, bundle.hom, bundle.coaction, name=name, check=check)
    bialgebra = HomBialgebra(smash.algebra, cosmash.coalgebra, name=name or "biproduct", check=check)
    return RadfordBiproduct(bialgebra, (smash.gate, cosmash.gate, gate))


def carrier_antipode_report(algebra, coalgebra, s_carrier, title=None):
    """Convolution identities and twist commutation for the carrier antipode."""
    a, c = algebra, coalgebra
    field, m = a.field, a.dim
    i_m = Matrix.identity(field, m)
    ue = a.unit * c.counit
    ab = (a.basis,)
    pair = _PairView(a, c)
    checks = (
        eq_check("carrier-antipode.left", convolution(s_carrier, i_m, pair), ue, ab, ab),
        eq_check("carrier-antipode.right", convolution(i_m, s_carrier, pair), ue, ab, ab),
        eq_check("carrier-antipode.twist", s_carrier * a.twist, a.twist * s_carrier, ab, ab),
    )
    return Report(title or "carrier antipode preconditions", checks)


class _PairView:
    """Minimal mult/comult view so convolution works on an (algebra, coalgebra) pair."""

    def __init__(self, algebra, coalgebra):
        self.dim = algebra.dim
        self.mult = algebra.mult
        self.comult = coalgebra.comult


def biproduct_antipode(bundle, s_carrier=None, check=True):
    """S(a (x) h) = (S_H(a_{-1} beta^-1(h))_1 |> S_A(alpha^-2(a_0)))
    (x) beta^-1(S_H(a_{-1} beta^-1(h))_2)."""
    hom = bundle.hom
    s_h = getattr(hom, "antipode", None)
    if s_h is None:
        raise ExactError("the acting structure has no antipode")
    if s_carrier is None:
        s_carrier = bundle.carrier_antipode
    if s_carrier is None:
        raise ExactError("no carrier antipode supplied")
    gate = carrier_antipode_report(bundle.algebra, bundle.coalgebra, s_carrier)
    if not gate.passed:
        raise StructureError(
            f"carrier antipode preconditions fail: {gate.first_failure().name}", gate
        )
    a = bundle.algebra
    field, m, n = hom.field, a.dim, hom.dim
    i_n = Matrix.identity(field, n)
    step1 = kron(bundle.coaction.matrix, i_n)  # (a-1, a0, h)
    perm1 = leg_perm(field, (n, m, n), (0, 2, 1))  # (a-1, h, a0)
    folded = hom.comult * s_h * hom.mult * kron(i_n, hom.twist_inv)  # (w1, w2)
    step2 = kron(folded, s_carrier * a.twist_power(-2))  # (w1, w2, sa)
    perm2 = leg_perm(field, (n, n, m), (0, 2, 1))  # (w1, sa, w2)
    matrix = kron(bundle.action.matrix, hom.twist_inv) * perm2 * step2 * perm1 * step1
    if check:
        biproduct = radford_biproduct(bundle, check=False)
        rep = check_antipode(biproduct.bialgebra, matrix)
        if not rep.passed:
            raise StructureError(
                f"biproduct antipode fails its axioms: {rep.first_failure().name}", rep
            )
    return BiproductAntipode(matrix, gate)


def smash_product_antipode(carrier, hom, action, s_carrier, s_hom=None):
    """Trivial-coaction degeneration: S(a (x) h) = (S_H(h)_1 |> alpha^-1 S_A(a))
    (x) beta^-1(S_H(h)_2)."""
    field, m, n = hom.field, carrier.dim, hom.dim
    s_h = s_hom if s_hom is not None else hom.antipode
    i_m = Matrix.identity(field, m)
    step = kron(i_m, hom.comult * s_h)  # (a, s1, s2)
    perm = leg_perm(field, (m, n, n), (1, 0, 2))  # (s1, a, s2)
    left = action.matrix * kron(Matrix.identity(field, n), carrier.twist_inv * s_carrier)
    return kron(left, hom.twist_inv) * perm * step


def smash_coproduct_antipode(carrier, hom, coaction, s_carrier, s_hom=None):
    """Trivial-action degeneration: S(c (x) h) = S_C(alpha^-1(c_0))
    (x) S_H(c_{-1} beta^-1(h))."""
    field, m, n = hom.field, carrier.dim, hom.dim
    s_h = s_hom if s_hom is not None else hom.antipode
    i_n = Matrix.identity(field, n)
    step = kron(coaction.matrix, i_n)  # (c-1, c0, h)
    perm = leg_perm(field, (n, m, n), (1, 0, 2))  # (c0, c-1, h)
    right = s_h * hom.mult * kron(i_n, hom.twist_inv)
    return kron(s_carrier * carrier.twist_inv, right) * perm * step


def check_smash_tensor_gate(hom, action, title=None):
    """h1 (x) (h2 |> a) = h2 (x) (h1 |> a): admits the smash product with the
    tensor coproduct when the partner coaction is trivial."""
    field, n, m = hom.field, hom.dim, action.carrier_dim
    i_m = Matrix.identity(field, m)
    i_n = Matrix.identity(field, n)
    base = kron(hom.comult, i_m)
    swapped = kron(leg_perm(field, (n, n), (1, 0)), i_m) * base
    lhs = kron(i_n, action.matrix) * base
    rhs = kron(i_n, action.matrix) * swapped
    legs_in = (hom.basis, action.carrier_basis)
    legs_out = (hom.basis, action.carrier_basis)
    check = eq_check("symmetric-coproduct-action", lhs, rhs, legs_in, legs_out)
    return Report(title or "tensor-coalgebra smash gate", (check,))


def check_cosmash_tensor_gate(hom, coaction, title=None):
    """h c_{-1} (x) c_0 = c_{-1} h (x) c_0: admits the smash coproduct with the
    tensor product when the partner action is trivial."""
    field, n, m = hom.field, hom.dim, coaction.carrier_dim
    i_m = Matrix.identity(field, m)
    step = kron(Matrix.identity(field, n), coaction.matrix)  # (h, c-1, c0)
    lhs = kron(hom.mult, i_m) * step
    rhs = kron(hom.mult, i_m) * kron(leg_perm(field, (n, n), (1, 0)), i_m) * step
    legs = (hom.basis, coaction.carrier_basis)
    check = eq_check("central-coaction-leg", lhs, rhs, legs, legs)
    return Report(title or "tensor-algebra cosmash gate", (check,))
