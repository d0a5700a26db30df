"""The Yetter-Drinfeld category machinery: tensor modules, associator,
pre-braiding and its inverse, the Yang-Baxter operator, pentagon/hexagon
checks, and the biproduct/category equivalence.
"""

from dataclasses import dataclass

from .fields import ExactError
from .matrices import Matrix, kron, kron_list, leg_perm
from .report import CheckResult, Report, eq_check
from .structures import tensor_basis
from .actions import (
    ActionMap,
    CoactionMap,
    YDModule,
    check_hyd,
    same_bialgebra,
)
from .constructions import check_radford_conditions, radford_r4_rhs

__all__ = [
    "CategoryMorphism",
    "check_yd_morphism",
    "yd_tensor",
    "associator",
    "associator_matrix",
    "braiding",
    "braiding_inverse",
    "yang_baxter_operator",
    "check_yang_baxter",
    "check_pentagon",
    "check_hexagons",
    "check_bialgebra_in_hyd",
    "check_bosonization_equivalence",
]


@dataclass(frozen=True)
class CategoryMorphism:
    """A linear map between Yetter-Drinfeld modules over one Hom-bialgebra."""

    source: YDModule
    target: YDModule
    matrix: Matrix

    def __post_init__(self):
        if (self.matrix.rows, self.matrix.cols) != (self.target.dim, self.source.dim):
            raise ExactError("morphism matrix shape does not match source/target")


def check_yd_morphism(f, title=None):
    """Commutation with the carrier twists, the actions, and the coactions."""
    src, tgt = f.source, f.target
    if not same_bialgebra(src.hom, tgt.hom):
        raise ExactError("source and target live over different Hom-bialgebras")
    hom = src.hom
    field, n = hom.field, hom.dim
    i_n = Matrix.identity(field, n)
    m = f.matrix
    in_legs = (src.basis,)
    out_legs = (tgt.basis,)
    checks = (
        eq_check("morphism.twist", m * src.twist, tgt.twist * m, in_legs, out_legs),
        eq_check(
            "morphism.action",
            m * src.action.matrix,
            tgt.action.matrix * kron(i_n, m),
            (hom.basis, src.basis),
            out_legs,
        ),
        eq_check(
            "morphism.coaction",
            tgt.coaction.matrix * m,
            kron(i_n, m) * src.coaction.matrix,
            in_legs,
            (hom.basis, tgt.basis),
        ),
    )
    return Report(title or "Yetter-Drinfeld morphism conditions", checks)


def yd_tensor(m1, m2, check=True, name=None):
    """Tensor module: action (h1 |> m) (x) (h2 |> n), coaction
    beta^-2(m_{-1} n_{-1}) (x) m_0 (x) n_0, twist alpha_M (x) alpha_N."""
    if not same_bialgebra(m1.hom, m2.hom):
        raise ExactError("tensor modules need one common acting structure")
    hom = m1.hom
    field, n = hom.field, hom.dim
    d1, d2 = m1.dim, m2.dim
    act = (
        kron(m1.action.matrix, m2.action.matrix)
        * leg_perm(field, (n, n, d1, d2), (0, 2, 1, 3))
        * kron(hom.comult, Matrix.identity(field, d1 * d2))
    )
    coact = (
        kron(hom.twist_power(-2) * hom.mult, Matrix.identity(field, d1 * d2))
        * leg_perm(field, (n, d1, n, d2), (0, 2, 1, 3))
        * kron(m1.coaction.matrix, m2.coaction.matrix)
    )
    twist = kron(m1.twist, m2.twist)
    basis = tensor_basis(m1.basis, m2.basis)
    return YDModule(
        ActionMap(hom, act, twist, basis),
        CoactionMap(hom, coact, twist, basis),
        name=name or "tensor-module",
        check=check,
    )


def associator_matrix(m1, m2, m3):
    """(m (x) n) (x) p |-> alpha_M^-1(m) (x) (n (x) alpha_P(p))."""
    field = m1.field
    return kron_list(m1.twist_inv, Matrix.identity(field, m2.dim), m3.twist)


def associator(m1, m2, m3, check=True):
    src = yd_tensor(yd_tensor(m1, m2, check=False), m3, check=False)
    tgt = yd_tensor(m1, yd_tensor(m2, m3, check=False), check=False)
    f = CategoryMorphism(src, tgt, associator_matrix(m1, m2, m3))
    if check:
        rep = check_yd_morphism(f)
        if not rep.passed:
            raise ExactError(f"associator is not a morphism: {rep.first_failure().name}")
    return f


def braiding_matrix(m1, m2):
    """c(m (x) n) = (beta^2(m_{-1}) |> alpha_N^-1(n)) (x) alpha_M^-1(m_0)."""
    hom = m1.hom
    field, n = hom.field, hom.dim
    d1, d2 = m1.dim, m2.dim
    step = kron(m1.coaction.matrix, Matrix.identity(field, d2))  # (m-1, m0, n)
    perm = leg_perm(field, (n, d1, d2), (0, 2, 1))  # (m-1, n, m0)
    left = m2.action.matrix * kron(hom.twist_power(2), m2.twist_inv)
    return kron(left, m1.twist_inv) * perm * step


def braiding(m1, m2, check=True):
    f = CategoryMorphism(
        yd_tensor(m1, m2, check=False),
        yd_tensor(m2, m1, check=False),
        braiding_matrix(m1, m2),
    )
    if check:
        rep = check_yd_morphism(f)
        if not rep.passed:
            raise ExactError(f"braiding is not a morphism: {rep.first_failure().name}")
    return f


def braiding_inverse_matrix(m1, m2):
    """c^-1(n (x) m) = alpha_M^-1(m_0) (x) (S^-1(beta^2(m_{-1})) |> alpha_N^-1(n))."""
    hom = m1.hom
    s = getattr(hom, "antipode", None)
    if s is None:
        raise ExactError("the braiding inverse needs an antipode")
    s_inv = s.inverse()
    field, n = hom.field, hom.dim
    d1, d2 = m1.dim, m2.dim
    step = kron(Matrix.identity(field, d2), m1.coaction.matrix)  # (n, m-1, m0)
    perm = leg_perm(field, (d2, n, d1), (2, 1, 0))  # (m0, m-1, n)
    right = m2.action.matrix * kron(s_inv * hom.twist_power(2), m2.twist_inv)
    return kron(m1.twist_inv, right) * perm * step


def braiding_inverse(m1, m2, check=True):
    f = CategoryMorphism(
        yd_tensor(m2, m1, check=False),
        yd_tensor(m1, m2, check=False),
        braiding_inverse_matrix(m1, m2),
    )
    if check:
        rep = check_yd_morphism(f)
        if not rep.passed:
            raise ExactError(f"braiding inverse is not a morphism: {rep.first_failure().name}")
    return f


def yang_baxter_operator(m1, m2):
    """tau(m (x) n) = (beta^3(m_{-1}) |> n) (x) m_0."""
    hom = m1.hom
    field, n = hom.field, hom.dim
    d1, d2 = m1.dim, m2.dim
    step = kron(m1.coaction.matrix, Matrix.identity(field, d2))  # (m-1, m0, n)
    perm = leg_perm(field, (n, d1, d2), (0, 2, 1))  # (m-1, n, m0)
    left = m2.action.matrix * kron(hom.twist_power(3), Matrix.identity(field, d2))
    return kron(left, Matrix.identity(field, d1)) * perm * step


def _tau_twist_check(name, m1, m2):
    tau = yang_baxter_operator(m1, m2)
    return eq_check(
        name,
        tau * kron(m1.twist, m2.twist),
        kron(m2.twist, m1.twist) * tau,
        (m1.basis, m2.basis),
        (m2.basis, m1.basis),
    )


def check_yang_baxter(m1, m2, m3, title=None):
    """Twist compatibility of tau plus the Yang-Baxter relation on M (x) N (x) P."""
    checks = [
        _tau_twist_check("tau.twist(M,N)", m1, m2),
        _tau_twist_check("tau.twist(M,P)", m1, m3),
        _tau_twist_check("tau.twist(N,P)", m2, m3),
    ]
    t12 = yang_baxter_operator(m1, m2)
    t13 = yang_baxter_operator(m1, m3)
    t23 = yang_baxter_operator(m2, m3)
    lhs = kron(m3.twist, t12) * kron(t13, m2.twist) * kron(m1.twist, t23)
    rhs = kron(t23, m1.twist) * kron(m2.twist, t13) * kron(t12, m3.twist)
    in_legs = (m1.basis, m2.basis, m3.basis)
    out_legs = (m3.basis, m2.basis, m1.basis)
    checks.append(eq_check("HYBE", lhs, rhs, in_legs, out_legs))
    return Report(title or "Yang-Baxter operator checks", tuple(checks))


def check_pentagon(m1, m2, m3, m4, title=None):
    """The two composite reassociations of a fourfold tensor agree."""
    t12 = yd_tensor(m1, m2, check=False)
    t23 = yd_tensor(m2, m3, check=False)
    t34 = yd_tensor(m3, m4, check=False)
    lhs = associator_matrix(m1, m2, t34) * associator_matrix(t12, m3, m4)
    rhs = (
        kron(Matrix.identity(m1.field, m1.dim), associator_matrix(m2, m3, m4))
        * associator_matrix(m1, t23, m4)
        * kron(associator_matrix(m1, m2, m3), Matrix.identity(m1.field, m4.dim))
    )
    legs = (m1.basis, m2.basis, m3.basis, m4.basis)
    check = eq_check("pentagon", lhs, rhs, legs, legs)
    return Report(title or "pentagon identity", (check,))


def check_hexagons(m1, m2, m3, title=None):
    """Both hexagon identities for the pre-braiding, plus its naturality
    against the twist morphisms."""
    field = m1.field
    i1 = Matrix.identity(field, m1.dim)
    i2 = Matrix.identity(field, m2.dim)
    i3 = Matrix.identity(field, m3.dim)
    c12 = braiding_matrix(m1, m2)
    c13 = braiding_matrix(m1, m3)
    c23 = braiding_matrix(m2, m3)
    t12 = yd_tensor(m1, m2, check=False)
    t23 = yd_tensor(m2, m3, check=False)
    hex1_lhs = kron(i2, c13) * associator_matrix(m2, m1, m3) * kron(c12, i3)
    hex1_rhs = (
        associator_matrix(m2, m3, m1)
        * braiding_matrix(m1, t23)
        * associator_matrix(m1, m2, m3)
    )
    hex2_lhs = (
        kron(c13, i2)
        * associator_matrix(m1, m3, m2).inverse()
        * kron(i1, c23)
    )
    hex2_rhs = (
        associator_matrix(m3, m1, m2).inverse()
        * braiding_matrix(t12, m3)
        * associator_matrix(m1, m2, m3).inverse()
    )
    in_legs = (m1.basis, m2.basis, m3.basis)
    checks = (
        eq_check("hexagon1", hex1_lhs, hex1_rhs, in_legs, (m2.basis, m3.basis, m1.basis)),
        eq_check("hexagon2", hex2_lhs, hex2_rhs, in_legs, (m3.basis, m1.basis, m2.basis)),
        eq_check(
            "naturality.twist",
            c12 * kron(m1.twist, m2.twist),
            kron(m2.twist, m1.twist) * c12,
            (m1.basis, m2.basis),
            (m2.basis, m1.basis),
        ),
    )
    return Report(title or "hexagon identities", checks)


def check_bialgebra_in_hyd(bundle, title=None):
    """The carrier is a bialgebra inside the category: Yetter-Drinfeld
    compatibility, the R1-R3 gates, and multiplicativity of its coproduct
    through the braiding c_{A,A}; the braided composite is also asserted to
    equal the R4 right-hand side."""
    module = bundle.yd_module(check=False)
    a, c = bundle.algebra, bundle.coalgebra
    field, m = a.field, a.dim
    i_m = Matrix.identity(field, m)
    radford = check_radford_conditions(bundle)
    checks = [check_hyd(module).checks[0]]
    checks += [radford.check(name) for name in ("R1", "R2", "R3")]
    c_aa = braiding_matrix(module, module)
    braided_rhs = (
        kron(a.mult, a.mult)
        * kron_list(i_m, c_aa, i_m)
        * kron(c.comult, c.comult)
    )
    ab = (a.basis, a.basis)
    checks.append(eq_check("braided-comult-mult", c.comult * a.mult, braided_rhs, ab, ab))
    checks.append(eq_check("R4-realization", braided_rhs, radford_r4_rhs(bundle), ab, ab))
    return Report(title or "bialgebra in the Yetter-Drinfeld category", tuple(checks))


def check_bosonization_equivalence(bundle, title=None):
    """The biproduct gate and the in-category bialgebra verdicts must agree;
    requires the acting twist to square to the identity."""
    hom = bundle.hom
    if not hom.twist_power(2).is_identity():
        raise ExactError("equivalence check requires beta^2 = id on the acting structure")
    radford = check_radford_conditions(bundle)
    category = check_bialgebra_in_hyd(bundle)

    def summary(name, rep):
        fail = rep.first_failure()
        return CheckResult(name, rep.passed, None if fail is None else fail.name)

    agree = radford.passed == category.passed
    witness = None if agree else (
        f"gate={'PASS' if radford.passed else 'FAIL'} "
        f"category={'PASS' if category.passed else 'FAIL'}"
    )
    checks = (
        summary("radford-conditions", radford),
        summary("bialgebra-in-category", category),
        CheckResult("agreement", agree, witness),
    )
    return Report(title or "biproduct/category equivalence", checks)
