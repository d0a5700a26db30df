"""Hom-algebras, Hom-coalgebras, Hom-bialgebras and Hom-Hopf algebras as
exact structure constants, with exhaustive basis-level axiom checkers.

All axioms are verified as matrix identities built from the structure maps;
matrix columns enumerate basis tuples, so any failure decodes to an exact
first counterexample.
"""

from dataclasses import dataclass

from .fields import ExactError, ShapeError, SingularMatrixError
from .matrices import Matrix, TwistCache, kron, kron_apply, leg_perm, solve
from .report import CheckResult, Report, StructureError, eq_check

__all__ = [
    "MultCube",
    "ComultMap",
    "HomAlgebra",
    "HomCoalgebra",
    "HomBialgebra",
    "HomHopf",
    "check_hom_algebra",
    "check_hom_coalgebra",
    "check_hom_bialgebra",
    "check_antipode",
    "convolution",
    "convolution_inverse",
    "tensor_hom_algebra",
    "tensor_hom_coalgebra",
    "tensor_mult_matrix",
    "tensor_comult_matrix",
    "yau_twist",
    "default_basis",
    "tensor_basis",
]


def default_basis(n):
    return tuple(f"e{i}" for i in range(n))


def tensor_basis(left, right):
    return tuple(f"{a}⊗{b}" for a in left for b in right)


@dataclass(frozen=True)
class MultCube:
    """Structure constants mu[i][j][k] with e_i*e_j = sum_k mu[i][j][k] e_k."""

    field: object
    dim: int
    entries: dict

    def __post_init__(self):
        zero = self.field.zero
        for (i, j, k), v in self.entries.items():
            if not all(0 <= t < self.dim for t in (i, j, k)):
                raise ShapeError(f"cube index ({i},{j},{k}) outside dim {self.dim}")
            if self.field.coerce(v) == zero:
                raise ExactError(f"cube stores an explicit zero at ({i},{j},{k})")

    def entry(self, i, j, k):
        return self.field.coerce(self.entries.get((i, j, k), self.field.zero))

    def to_matrix(self):
        n = self.dim
        ent = {
            (k, i * n + j): self.field.coerce(v)
            for (i, j, k), v in self.entries.items()
        }
        return Matrix(self.field, n, n * n, ent)

    @classmethod
    def from_matrix(cls, m, dim):
        if m.rows != dim or m.cols != dim * dim:
            raise ShapeError("multiplication matrix must be n x n^2")
        entries = {}
        for k in range(dim):
            for col, v in m.row_items(k):
                entries[(col // dim, col % dim, k)] = v
        return cls(m.field, dim, entries)


@dataclass(frozen=True)
class ComultMap:
    """For each i, Delta(e_i) = sum c * e_j (x) e_k given as (j, k, c) triples."""

    field: object
    dim: int
    rows: dict

    def __post_init__(self):
        zero = self.field.zero
        for i, triples in self.rows.items():
            if not 0 <= i < self.dim:
                raise ShapeError(f"comult index {i} outside dim {self.dim}")
            seen = set()
            for j, k, c in triples:
                if not (0 <= j < self.dim and 0 <= k < self.dim):
                    raise ShapeError(f"comult target ({j},{k}) outside dim {self.dim}")
                if (j, k) in seen:
                    raise ExactError(f"duplicate comult entry ({j},{k}) for basis {i}")
                seen.add((j, k))
                if self.field.coerce(c) == zero:
                    raise ExactError(f"comult stores an explicit zero at {i}->({j},{k})")

    def to_matrix(self):
        n = self.dim
        ent = {}
        for i, triples in self.rows.items():
            for j, k, c in triples:
                ent[(j * n + k, i)] = self.field.coerce(c)
        return Matrix(self.field, n * n, n, ent)

    @classmethod
    def from_matrix(cls, m, dim):
        if m.rows != dim * dim or m.cols != dim:
            raise ShapeError("comultiplication matrix must be n^2 x n")
        rows = {i: [] for i in range(dim)}
        for r in range(dim * dim):
            for i, v in m.row_items(r):
                rows[i].append((r // dim, r % dim, v))
        return cls(m.field, dim, {i: tuple(sorted(t)) for i, t in rows.items() if t})


def _coerce_column(field, unit, n):
    if isinstance(unit, Matrix):
        if (unit.rows, unit.cols) != (n, 1):
            raise ShapeError("unit must be an n x 1 column")
        return unit
    return Matrix.column(field, list(unit))


def _coerce_row(field, counit, n):
    if isinstance(counit, Matrix):
        if (counit.rows, counit.cols) != (1, n):
            raise ShapeError("counit must be a 1 x n row")
        return counit
    return Matrix.row_vector(field, list(counit))


class HomAlgebra:
    """(A, mu, 1, alpha): multiplication cube, unit and twist over a named basis."""

    def __init__(self, field, mult, unit, twist=None, basis=None, name=None, check=True):
        if isinstance(mult, MultCube):
            dim = mult.dim
            mmat = mult.to_matrix()
        else:
            mmat = mult
            dim = mmat.rows
            if mmat.cols != dim * dim:
                raise ShapeError("multiplication matrix must be n x n^2")
        if twist is None:
            twist = Matrix.identity(field, dim)
        if twist.rows != dim or twist.cols != dim:
            raise ShapeError("twist must be n x n")
        if mmat.field != field or twist.field != field:
            raise ExactError("all structure maps must share one field")
        self.field = field
        self.dim = dim
        self.mult = mmat
        self.unit = _coerce_column(field, unit, dim)
        self.twist = twist
        self.basis = tuple(basis) if basis is not None else default_basis(dim)
        if len(self.basis) != dim:
            raise ShapeError("basis label count must equal the dimension")
        self.name = name
        self._twists = TwistCache(twist)
        self._cube = None
        if check:
            rep = check_hom_algebra(self)
            if not rep.passed:
                fail = rep.first_failure()
                raise StructureError(f"Hom-algebra axioms fail: {fail.name}", rep)

    def twist_power(self, k):
        return self._twists.power(k)

    @property
    def twist_inv(self):
        return self._twists.inverse

    @property
    def cube(self):
        if self._cube is None:
            self._cube = MultCube.from_matrix(self.mult, self.dim)
        return self._cube


class HomCoalgebra:
    """(C, Delta, eps, beta): comultiplication, counit and twist over a named basis."""

    def __init__(self, field, comult, counit, twist=None, basis=None, name=None, check=True):
        if isinstance(comult, ComultMap):
            dim = comult.dim
            dmat = comult.to_matrix()
        else:
            dmat = comult
            dim = dmat.cols
            if dmat.rows != dim * dim:
                raise ShapeError("comultiplication matrix must be n^2 x n")
        if twist is None:
            twist = Matrix.identity(field, dim)
        if twist.rows != dim or twist.cols != dim:
            raise ShapeError("twist must be n x n")
        if dmat.field != field or twist.field != field:
            raise ExactError("all structure maps must share one field")
        self.field = field
        self.dim = dim
        self.comult = dmat
        self.counit = _coerce_row(field, counit, dim)
        self.twist = twist
        self.basis = tuple(basis) if basis is not None else default_basis(dim)
        if len(self.basis) != dim:
            raise ShapeError("basis label count must equal the dimension")
        self.name = name
        self._twists = TwistCache(twist)
        self._comult_map = None
        if check:
            rep = check_hom_coalgebra(self)
            if not rep.passed:
                fail = rep.first_failure()
                raise StructureError(f"Hom-coalgebra axioms fail: {fail.name}", rep)

    def twist_power(self, k):
        return self._twists.power(k)

    @property
    def twist_inv(self):
        return self._twists.inverse

    @property
    def comult_map(self):
        if self._comult_map is None:
            self._comult_map = ComultMap.from_matrix(self.comult, self.dim)
        return self._comult_map


class HomBialgebra:
    """A Hom-algebra and Hom-coalgebra sharing dimension, basis and twist."""

    def __init__(self, algebra, coalgebra, name=None, check=True):
        if algebra.field != coalgebra.field:
            raise ExactError("algebra and coalgebra must share one field")
        if algebra.dim != coalgebra.dim:
            raise ShapeError("algebra and coalgebra dimensions differ")
        if algebra.twist != coalgebra.twist:
            raise ExactError("algebra and coalgebra must share one twist")
        if algebra.basis != coalgebra.basis:
            raise ExactError("algebra and coalgebra must share one basis")
        self.algebra = algebra
        self.coalgebra = coalgebra
        self.name = name
        if check:
            rep = check_hom_bialgebra(self)
            if not rep.passed:
                fail = rep.first_failure()
                raise StructureError(f"Hom-bialgebra axioms fail: {fail.name}", rep)

    field = property(lambda self: self.algebra.field)
    dim = property(lambda self: self.algebra.dim)
    basis = property(lambda self: self.algebra.basis)
    mult = property(lambda self: self.algebra.mult)
    unit = property(lambda self: self.algebra.unit)
    comult = property(lambda self: self.coalgebra.comult)
    counit = property(lambda self: self.coalgebra.counit)
    twist = property(lambda self: self.algebra.twist)
    twist_inv = property(lambda self: self.algebra.twist_inv)

    def twist_power(self, k):
        return self.algebra.twist_power(k)


class HomHopf:
    """Hom-bialgebra with an antipode commuting with the twist."""

    def __init__(self, bialgebra, antipode, name=None, check=True):
        if antipode.rows != bialgebra.dim or antipode.cols != bialgebra.dim:
            raise ShapeError("antipode must be n x n")
        if antipode.field != bialgebra.field:
            raise ExactError("antipode must live over the structure field")
        self.bialgebra = bialgebra
        self.antipode = antipode
        self.name = name if name is not None else bialgebra.name
        self._antipode_inv = None
        if check:
            rep = check_antipode(bialgebra, antipode)
            if not rep.passed:
                fail = rep.first_failure()
                raise StructureError(f"antipode axioms fail: {fail.name}", rep)

    algebra = property(lambda self: self.bialgebra.algebra)
    coalgebra = property(lambda self: self.bialgebra.coalgebra)
    field = property(lambda self: self.bialgebra.field)
    dim = property(lambda self: self.bialgebra.dim)
    basis = property(lambda self: self.bialgebra.basis)
    mult = property(lambda self: self.bialgebra.mult)
    unit = property(lambda self: self.bialgebra.unit)
    comult = property(lambda self: self.bialgebra.comult)
    counit = property(lambda self: self.bialgebra.counit)
    twist = property(lambda self: self.bialgebra.twist)
    twist_inv = property(lambda self: self.bialgebra.twist_inv)

    def twist_power(self, k):
        return self.bialgebra.twist_power(k)

    @property
    def antipode_inv(self):
        if self._antipode_inv is None:
            self._antipode_inv = self.antipode.inverse()
        return self._antipode_inv


def _twist_invertible_check(structure):
    try:
        structure.twist_inv
        return CheckResult("twist.invertible", True)
    except SingularMatrixError:
        return CheckResult("twist.invertible", False, "twist matrix is singular")


def check_hom_algebra(alg, title=None):
    """Verify HA1/HA2 exhaustively over all basis tuples."""
    field, n, b = alg.field, alg.dim, alg.basis
    m, u, t = alg.mult, alg.unit, alg.twist
    i_n = Matrix.identity(field, n)
    one = (b,)
    two = (b, b)
    checks = [
        _twist_invertible_check(alg),
        eq_check("HA1.mult", t * m, m * kron(t, t), two, one),
        eq_check("HA1.unit", t * u, u, None, one),
        eq_check("HA2.assoc", m * kron(t, m), m * kron(m, t), (b, b, b), one),
        eq_check("HA2.unit-left", m * kron(u, i_n), t, one, one),
        eq_check("HA2.unit-right", m * kron(i_n, u), t, one, one),
    ]
    return Report(title or f"Hom-algebra axioms [{alg.name or 'algebra'}]", tuple(checks))


def check_hom_coalgebra(coalg, title=None):
    """Verify HC1/HC2 exhaustively over all basis elements."""
    field, n, b = coalg.field, coalg.dim, coalg.basis
    d, e, t = coalg.comult, coalg.counit, coalg.twist
    i_n = Matrix.identity(field, n)
    one = (b,)
    two = (b, b)
    checks = [
        _twist_invertible_check(coalg),
        eq_check("HC1.comult", d * t, kron(t, t) * d, one, two),
        eq_check("HC1.counit", e * t, e, one, None),
        eq_check("HC2.coassoc", kron(t, d) * d, kron(d, t) * d, one, (b, b, b)),
        eq_check("HC2.counit-left", kron(e, i_n) * d, t, one, one),
        eq_check("HC2.counit-right", kron(i_n, e) * d, t, one, one),
    ]
    return Report(title or f"Hom-coalgebra axioms [{coalg.name or 'coalgebra'}]", tuple(checks))


def tensor_mult_matrix(mult_a, dim_a, mult_b, dim_b):
    """Multiplication of the tensor product Hom-algebra: (a(x)b)(a'(x)b') = aa'(x)bb'."""
    field = mult_a.field
    perm = leg_perm(field, (dim_a, dim_b, dim_a, dim_b), (0, 2, 1, 3))
    return kron(mult_a, mult_b) * perm


def tensor_comult_matrix(comult_c, dim_c, comult_d, dim_d):
    """Comultiplication of the tensor product Hom-coalgebra."""
    field = comult_c.field
    perm = leg_perm(field, (dim_c, dim_c, dim_d, dim_d), (0, 2, 1, 3))
    return perm * kron(comult_c, comult_d)


def check_hom_bialgebra(h, title=None):
    """Algebra and coalgebra axioms plus multiplicativity of Delta and eps."""
    field, n, b = h.field, h.dim, h.basis
    m, u, d, e = h.mult, h.unit, h.comult, h.counit
    checks = list(check_hom_algebra(h.algebra).prefixed("algebra.").checks)
    checks += list(check_hom_coalgebra(h.coalgebra).prefixed("coalgebra.").checks)
    perm = leg_perm(field, (n, n, n, n), (0, 2, 1, 3))
    compat_rhs = kron_apply(m, m, perm * kron(d, d))
    one_by_one = Matrix(field, 1, 1, {(0, 0): field.one})
    checks += [
        eq_check("compat.comult-mult", d * m, compat_rhs, (b, b), (b, b)),
        eq_check("compat.comult-unit", d * u, kron(u, u), None, (b, b)),
        eq_check("compat.counit-mult", e * m, kron(e, e), (b, b), None),
        eq_check("compat.counit-unit", e * u, one_by_one, None, None),
    ]
    return Report(title or f"Hom-bialgebra axioms [{h.name or 'bialgebra'}]", tuple(checks))


def convolution(f, g, h):
    """The convolution product mu o (f (x) g) o Delta on endomaps of h."""
    n = h.dim
    if (f.rows, f.cols) != (n, n) or (g.rows, g.cols) != (n, n):
        raise ShapeError("convolution expects n x n endomaps")
    return h.mult * kron(f, g) * h.comult


def check_antipode(h, antipode=None, title=None):
    """Convolution identities S*id = id*S = u o eps and twist commutation."""
    s = antipode if antipode is not None else h.antipode
    field, n, b = h.field, h.dim, h.basis
    i_n = Matrix.identity(field, n)
    ue = h.unit * h.counit
    one = (b,)
    checks = [
        eq_check("antipode.left", convolution(s, i_n, h), ue, one, one),
        eq_check("antipode.right", convolution(i_n, s, h), ue, one, one),
        eq_check("antipode.twist", s * h.twist, h.twist * s, one, one),
    ]
    return Report(title or f"antipode axioms [{h.name or 'hopf'}]", tuple(checks))


def convolution_inverse(algebra, coalgebra):
    """Solve for the convolution inverse of the identity, i.e. the antipode
    of the (algebra, coalgebra) pair, by exact linear algebra."""
    if algebra.dim != coalgebra.dim or algebra.field != coalgebra.field:
        raise ExactError("algebra and coalgebra must share dimension and field")
    field, n = algebra.field, algebra.dim
    m, d = algebra.mult, coalgebra.comult
    i_n = Matrix.identity(field, n)
    # operator f |-> mu o (f (x) id) o Delta on vec(f), vec index r*n + c
    op_entries = {}
    for r in range(n):
        for c in range(n):
            basis_mat = Matrix(field, n, n, {(r, c): field.one})
            image = m * kron(basis_mat, i_n) * d
            col = r * n + c
            for i in range(n):
                for j, v in image.row_items(i):
                    op_entries[(i * n + j, col)] = field.add(
                        op_entries.get((i * n + j, col), field.zero), v
                    )
    op = Matrix(field, n * n, n * n, {k: v for k, v in op_entries.items() if v != field.zero})
    target_mat = algebra.unit * coalgebra.counit
    target = Matrix(
        field,
        n * n,
        1,
        {(i * n + j, 0): target_mat.entry(i, j) for i in range(n) for j in range(n)},
    )
    try:
        vec = solve(op, target)
    except SingularMatrixError as exc:
        raise StructureError("no convolution inverse of the identity exists") from exc
    s = Matrix(field, n, n, {(i, j): vec.entry(i * n + j, 0) for i in range(n) for j in range(n)})
    ue = algebra.unit * coalgebra.counit
    if m * kron(i_n, s) * d != ue:
        raise StructureError("left convolution inverse is not a right inverse")
    return s


def tensor_hom_algebra(a, b, check=True):
    """Tensor product Hom-algebra with twist alpha (x) beta."""
    if a.field != b.field:
        raise ExactError("tensor product needs a common field")
    mult = tensor_mult_matrix(a.mult, a.dim, b.mult, b.dim)
    return HomAlgebra(
        a.field,
        mult,
        kron(a.unit, b.unit),
        kron(a.twist, b.twist),
        basis=tensor_basis(a.basis, b.basis),
        name=f"{a.name or 'A'}(x){b.name or 'B'}",
        check=check,
    )


def tensor_hom_coalgebra(c, d, check=True):
    """Tensor product Hom-coalgebra with twist alpha (x) beta."""
    if c.field != d.field:
        raise ExactError("tensor product needs a common field")
    comult = tensor_comult_matrix(c.comult, c.dim, d.comult, d.dim)
    return HomCoalgebra(
        c.field,
        comult,
        kron(c.counit, d.counit),
        kron(c.twist, d.twist),
        basis=tensor_basis(c.basis, d.basis),
        name=f"{c.name or 'C'}(x){d.name or 'D'}",
        check=check,
    )


def yau_twist(h, gamma, name=None, check=True):
    """Twist a classical Hopf algebra along a verified Hopf automorphism:
    mult becomes gamma o mu, comult becomes Delta o gamma, twist gamma."""
    field, n, b = h.field, h.dim, h.basis
    if not h.twist.is_identity():
        raise StructureError("twisting requires a classical structure (identity twist)")
    m, u, d, e = h.mult, h.unit, h.comult, h.counit
    antipode = getattr(h, "antipode", None)
    one = (b,)
    two = (b, b)
    try:
        gamma.inverse()
        inv_check = CheckResult("automorphism.invertible", True)
    except SingularMatrixError:
        inv_check = CheckResult("automorphism.invertible", False, "candidate is singular")
    checks = [
        inv_check,
        eq_check("automorphism.mult", gamma * m, m * kron(gamma, gamma), two, one),
        eq_check("automorphism.unit", gamma * u, u, None, one),
        eq_check("automorphism.comult", d * gamma, kron(gamma, gamma) * d, one, two),
        eq_check("automorphism.counit", e * gamma, e, one, None),
    ]
    if antipode is not None:
        checks.append(eq_check("automorphism.antipode", antipode * gamma, gamma * antipode, one, one))
    rep = Report("Hopf automorphism verification", tuple(checks))
    if not rep.passed:
        fail = rep.first_failure()
        raise StructureError(f"twisting map is not a Hopf automorphism: {fail.name}", rep)
    twisted_name = name if name is not None else (f"{h.name}_twisted" if h.name else None)
    alg = HomAlgebra(field, gamma * m, u, gamma, basis=b, check=check)
    coalg = HomCoalgebra(field, d * gamma, e, gamma, basis=b, check=check)
    bial = HomBialgebra(alg, coalg, name=twisted_name, check=check)
    if antipode is None:
        return bial
    return HomHopf(bial, antipode, name=twisted_name, check=check)
