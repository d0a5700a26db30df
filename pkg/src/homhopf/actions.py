"""Actions, coactions, their compatibility axioms, and Hom-Yetter-Drinfeld modules.

Both sides of the Yetter-Drinfeld compatibility are assembled as single maps
on H (x) M by composing the constituent matrices, so the check is exhaustive
over basis pairs and any failure carries an exact witness.
"""

from .fields import ExactError, ShapeError
from .matrices import Matrix, TwistCache, kron, leg_perm
from .report import CheckResult, Report, StructureError, eq_check
from .structures import default_basis

__all__ = [
    "ActionMap",
    "CoactionMap",
    "YDModule",
    "check_action_axioms",
    "check_coaction_axioms",
    "check_hyd",
    "check_hyd_prime",
    "hyd_lhs_matrix",
    "hyd_rhs_matrix",
    "trivial_action",
    "trivial_coaction",
    "regular_action",
    "regular_coaction",
    "trivial_yd_module",
    "same_bialgebra",
]


def same_bialgebra(h1, h2):
    """Structural equality of two Hom-bialgebras (matrices, not identity)."""
    if h1 is h2:
        return True
    return (
        h1.field == h2.field
        and h1.dim == h2.dim
        and h1.mult == h2.mult
        and h1.unit == h2.unit
        and h1.comult == h2.comult
        and h1.counit == h2.counit
        and h1.twist == h2.twist
    )


class ActionMap:
    """Bilinear action H (x) M -> M with its own carrier twist."""

    def __init__(self, hom, matrix, carrier_twist, carrier_basis=None, name=None):
        n = hom.dim
        m = carrier_twist.rows
        if carrier_twist.cols != m:
            raise ShapeError("carrier twist must be square")
        if (matrix.rows, matrix.cols) != (m, n * m):
            raise ShapeError(f"action matrix must be {m} x {n * m}")
        if matrix.field != hom.field or carrier_twist.field != hom.field:
            raise ExactError("action data must share the acting structure's field")
        self.hom = hom
        self.matrix = matrix
        self.carrier_twist = carrier_twist
        self.carrier_dim = m
        self.carrier_basis = (
            tuple(carrier_basis) if carrier_basis is not None else default_basis(m)
        )
        if len(self.carrier_basis) != m:
            raise ShapeError("carrier basis label count must equal the carrier dimension")
        self.name = name
        self._twists = TwistCache(carrier_twist)

    @property
    def field(self):
        return self.hom.field

    def carrier_twist_power(self, k):
        return self._twists.power(k)

    @property
    def carrier_twist_inv(self):
        return self._twists.inverse


class CoactionMap:
    """Coaction M -> H (x) M with its own carrier twist."""

    def __init__(self, hom, matrix, carrier_twist, carrier_basis=None, name=None):
        n = hom.dim
        m = carrier_twist.rows
        if carrier_twist.cols != m:
            raise ShapeError("carrier twist must be square")
        if (matrix.rows, matrix.cols) != (n * m, m):
            raise ShapeError(f"coaction matrix must be {n * m} x {m}")
        if matrix.field != hom.field or carrier_twist.field != hom.field:
            raise ExactError("coaction data must share the acting structure's field")
        self.hom = hom
        self.matrix = matrix
        self.carrier_twist = carrier_twist
        self.carrier_dim = m
        self.carrier_basis = (
            tuple(carrier_basis) if carrier_basis is not None else default_basis(m)
        )
        if len(self.carrier_basis) != m:
            raise ShapeError("carrier basis label count must equal the carrier dimension")
        self.name = name
        self._twists = TwistCache(carrier_twist)

    @property
    def field(self):
        return self.hom.field

    def carrier_twist_power(self, k):
        return self._twists.power(k)

    @property
    def carrier_twist_inv(self):
        return self._twists.inverse


def trivial_action(hom, carrier_twist, carrier_basis=None):
    """h |> m = eps(h) alpha_M(m)."""
    return ActionMap(hom, kron(hom.counit, carrier_twist), carrier_twist, carrier_basis)


def trivial_coaction(hom, carrier_twist, carrier_basis=None):
    """rho(m) = 1_H (x) alpha_M(m)."""
    return CoactionMap(hom, kron(hom.unit, carrier_twist), carrier_twist, carrier_basis)


def regular_action(hom):
    """H acting on itself by its own multiplication."""
    return ActionMap(hom, hom.mult, hom.twist, hom.basis)


def regular_coaction(hom):
    """H coacting on itself by its own comultiplication."""
    return CoactionMap(hom, hom.comult, hom.twist, hom.basis)


_ACTION_KINDS = ("module", "module-algebra", "module-coalgebra")
_COACTION_KINDS = ("comodule", "comodule-algebra", "comodule-coalgebra")


def _carrier_consistent(act_or_coact, carrier):
    if carrier.dim != act_or_coact.carrier_dim:
        raise ShapeError("carrier structure dimension mismatch")
    if carrier.twist != act_or_coact.carrier_twist:
        raise ExactError("carrier structure twist differs from the action's carrier twist")


def check_action_axioms(act, kind="module", carrier=None, title=None):
    """HM1/HM2 always; HMA (module Hom-algebra) or HMC (module Hom-coalgebra) on request."""
    if kind not in _ACTION_KINDS:
        raise ValueError(f"unknown action kind {kind!r}")
    hom = act.hom
    field, n, m = hom.field, hom.dim, act.carrier_dim
    p = act.matrix
    t = act.carrier_twist
    beta = hom.twist
    i_n = Matrix.identity(field, n)
    i_m = Matrix.identity(field, m)
    hb, cb = hom.basis, act.carrier_basis
    checks = [
        eq_check("HM1", t * p, p * kron(beta, t), (hb, cb), (cb,)),
        eq_check(
            "HM2.assoc",
            p * kron(beta, p),
            p * kron(hom.mult, t),
            (hb, hb, cb),
            (cb,),
        ),
        eq_check("HM2.unit", p * kron(hom.unit, i_m), t, (cb,), (cb,)),
    ]
    if kind == "module-algebra":
        if carrier is None:
            raise ExactError("module-algebra check needs the carrier Hom-algebra")
        _carrier_consistent(act, carrier)
        ma = carrier.mult
        rhs = (
            ma
            * kron(p, p)
            * leg_perm(field, (n, n, m, m), (0, 2, 1, 3))
            * kron(hom.comult, Matrix.identity(field, m * m))
        )
        checks.append(
            eq_check("HMA1", p * kron(hom.twist_power(2), ma), rhs, (hb, cb, cb), (cb,))
        )
        checks.append(
            eq_check(
                "HMA2",
                p * kron(i_n, carrier.unit),
                carrier.unit * hom.counit,
                (hb,),
                (cb,),
            )
        )
    elif kind == "module-coalgebra":
        if carrier is None:
            raise ExactError("module-coalgebra check needs the carrier Hom-coalgebra")
        _carrier_consistent(act, carrier)
        dc = carrier.comult
        rhs = (
            kron(p, p)
            * leg_perm(field, (n, n, m, m), (0, 2, 1, 3))
            * kron(hom.comult, dc)
        )
        checks.append(eq_check("HMC1", dc * p, rhs, (hb, cb), (cb, cb)))
        checks.append(
            eq_check(
                "HMC2",
                carrier.counit * p,
                kron(hom.counit, carrier.counit),
                (hb, cb),
                None,
            )
        )
    return Report(title or f"{kind} axioms [{act.name or 'action'}]", tuple(checks))


def check_coaction_axioms(coact, kind="comodule", carrier=None, title=None):
    """HCM1/HCM2 always; HCMA (comodule Hom-algebra) or HCMC (comodule Hom-coalgebra) on request."""
    if kind not in _COACTION_KINDS:
        raise ValueError(f"unknown coaction kind {kind!r}")
    hom = coact.hom
    field, n, m = hom.field, hom.dim, coact.carrier_dim
    q = coact.matrix
    t = coact.carrier_twist
    beta = hom.twist
    i_n = Matrix.identity(field, n)
    i_m = Matrix.identity(field, m)
    hb, cb = hom.basis, coact.carrier_basis
    checks = [
        eq_check("HCM1", q * t, kron(beta, t) * q, (cb,), (hb, cb)),
        eq_check(
            "HCM2.coassoc",
            kron(beta, q) * q,
            kron(hom.comult, t) * q,
            (cb,),
            (hb, hb, cb),
        ),
        eq_check("HCM2.counit", kron(hom.counit, i_m) * q, t, (cb,), (cb,)),
    ]
    if kind == "comodule-algebra":
        if carrier is None:
            raise ExactError("comodule-algebra check needs the carrier Hom-algebra")
        _carrier_consistent(coact, carrier)
        ma = carrier.mult
        rhs = (
            kron(hom.mult, ma)
            * leg_perm(field, (n, m, n, m), (0, 2, 1, 3))
            * kron(q, q)
        )
        checks.append(eq_check("HCMA1", q * ma, rhs, (cb, cb), (hb, cb)))
        checks.append(
            eq_check(
                "HCMA2",
                q * carrier.unit,
                kron(hom.unit, carrier.unit),
                None,
                (hb, cb),
            )
        )
    elif kind == "comodule-coalgebra":
        if carrier is None:
            raise ExactError("comodule-coalgebra check needs the carrier Hom-coalgebra")
        _carrier_consistent(coact, carrier)
        dc = carrier.comult
        rhs = (
            kron(hom.mult, Matrix.identity(field, m * m))
            * leg_perm(field, (n, m, n, m), (0, 2, 1, 3))
            * kron(q, q)
            * dc
        )
        checks.append(
            eq_check("HCMC1", kron(hom.twist_power(2), dc) * q, rhs, (cb,), (hb, cb, cb))
        )
        checks.append(
            eq_check(
                "HCMC2",
                kron(i_n, carrier.counit) * q,
                hom.unit * carrier.counit,
                (cb,),
                (hb,),
            )
        )
    return Report(title or f"{kind} axioms [{coact.name or 'coaction'}]", tuple(checks))


def hyd_lhs_matrix(action, coaction):
    """h1 beta(m_{-1}) (x) (beta^3(h2) |> m0) as a map on H (x) M."""
    hom = action.hom
    field, n, m = hom.field, hom.dim, action.carrier_dim
    i_m = Matrix.identity(field, m)
    step = kron(hom.comult, coaction.matrix)  # legs (h1, h2, m-1, m0)
    perm = leg_perm(field, (n, n, n, m), (0, 2, 1, 3))  # -> (h1, m-1, h2, m0)
    left = hom.mult * kron(Matrix.identity(field, n), hom.twist)
    right = action.matrix * kron(hom.twist_power(3), i_m)
    return kron(left, right) * perm * step


def hyd_rhs_matrix(action, coaction):
    """(beta^2(h1) |> m)_{-1} h2 (x) (beta^2(h1) |> m)_0 as a map on H (x) M."""
    hom = action.hom
    field, n, m = hom.field, hom.dim, action.carrier_dim
    i_n = Matrix.identity(field, n)
    i_m = Matrix.identity(field, m)
    step1 = kron(hom.comult, i_m)  # (h1, h2, m)
    perm1 = leg_perm(field, (n, n, m), (0, 2, 1))  # (h1, m, h2)
    acted = kron(action.matrix * kron(hom.twist_power(2), i_m), i_n)  # (w, h2)
    coacted = kron(coaction.matrix, i_n)  # (w-1, w0, h2)
    perm2 = leg_perm(field, (n, m, n), (0, 2, 1))  # (w-1, h2, w0)
    final = kron(hom.mult, i_m)
    return final * perm2 * coacted * acted * perm1 * step1


class YDModule:
    """One action and one coaction on a shared carrier, Yetter-Drinfeld compatible."""

    def __init__(self, action, coaction, name=None, check=True):
        if not same_bialgebra(action.hom, coaction.hom):
            raise ExactError("action and coaction must share the acting Hom-bialgebra")
        if action.carrier_dim != coaction.carrier_dim:
            raise ShapeError("action and coaction carrier dimensions differ")
        if action.carrier_twist != coaction.carrier_twist:
            raise ExactError("twist mismatch between action and coaction")
        self.action = action
        self.coaction = coaction
        self.hom = action.hom
        self.dim = action.carrier_dim
        self.twist = action.carrier_twist
        self.basis = action.carrier_basis
        self.name = name
        self._twists = action._twists
        if check:
            for rep in (
                check_action_axioms(action),
                check_coaction_axioms(coaction),
                check_hyd(self),
            ):
                if not rep.passed:
                    fail = rep.first_failure()
                    raise StructureError(
                        f"Yetter-Drinfeld module invalid: {fail.name}", rep
                    )

    @property
    def field(self):
        return self.hom.field

    def twist_power(self, k):
        return self._twists.power(k)

    @property
    def twist_inv(self):
        return self._twists.inverse


def _as_pair(module_or_action, coaction=None):
    if coaction is None:
        return module_or_action.action, module_or_action.coaction
    return module_or_action, coaction


def check_hyd(module, title=None):
    """The Yetter-Drinfeld compatibility as one exact map equality on H (x) M."""
    action, coaction = _as_pair(module)
    legs = (action.hom.basis, action.carrier_basis)
    check = eq_check(
        "HYD", hyd_lhs_matrix(action, coaction), hyd_rhs_matrix(action, coaction), legs, legs
    )
    return Report(title or f"Yetter-Drinfeld compatibility [{module.name or 'module'}]", (check,))


def _hyd_prime_lhs(action, coaction):
    hom = action.hom
    field, m = hom.field, action.carrier_dim
    return coaction.matrix * action.matrix * kron(hom.twist_power(4), Matrix.identity(field, m))


def _hyd_prime_rhs(action, coaction, antipode):
    hom = action.hom
    field, n, m = hom.field, hom.dim, action.carrier_dim
    i_n = Matrix.identity(field, n)
    i_m = Matrix.identity(field, m)
    step1 = kron(hom.comult, coaction.matrix)  # (h1, h2, m-1, m0)
    step2 = kron(hom.comult, Matrix.identity(field, n * n * m))  # (h11, h12, h2, m-1, m0)
    perm = leg_perm(field, (n, n, n, n, m), (0, 3, 2, 1, 4))  # (h11, m-1, h2, h12, m0)
    inner = hom.twist_power(-2) * hom.mult * kron(i_n, hom.twist)  # beta^-2(h11 beta(m-1))
    left = hom.mult * kron(inner, antipode)
    right = action.matrix * kron(hom.twist_power(3), i_m)
    return kron(left, right) * perm * step2 * step1


def check_hyd_prime(module, title=None):
    """The antipode form of the compatibility, plus agreement with the plain form."""
    action, coaction = _as_pair(module)
    hom = action.hom
    antipode = getattr(hom, "antipode", None)
    if antipode is None:
        raise ExactError("no antipode available on the acting structure")
    legs = (hom.basis, action.carrier_basis)
    prime = eq_check(
        "HYD-prime",
        _hyd_prime_lhs(action, coaction),
        _hyd_prime_rhs(action, coaction, antipode),
        legs,
        legs,
    )
    plain = check_hyd(module).checks[0]
    agree = plain.passed == prime.passed
    witness = None if agree else f"HYD={plain.verdict} but HYD-prime={prime.verdict}"
    checks = (prime, CheckResult("equivalence-with-HYD", agree, witness))
    return Report(title or f"antipode-form compatibility [{module.name or 'module'}]", checks)


def trivial_yd_module(hom, label="1"):
    """The base field as a Yetter-Drinfeld module: h |> k = eps(h)k, rho(k) = 1 (x) k."""
    field = hom.field
    unit_twist = Matrix.identity(field, 1)
    action = ActionMap(hom, hom.counit, unit_twist, (label,))
    coaction = CoactionMap(hom, hom.unit, unit_twist, (label,))
    return YDModule(action, coaction, name="unit-module")
