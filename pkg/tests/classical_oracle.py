"""Independently coded classical (untwisted) checkers.

These loop over structure constants directly and know nothing about twists;
they adjudicate the library's verdicts on identity-twist instances.
"""

from itertools import product

from hom_oracles import acc, act_basis, coact_basis, delta_basis, matrix_image, mul_basis


def _vec_eq(field, a, b):
    keys = set(a) | set(b)
    return all(a.get(k, field.zero) == b.get(k, field.zero) for k in keys)


def _mul_vec(field, alg, u, v):
    out = {}
    for i, ci in u.items():
        for j, cj in v.items():
            for k, c in mul_basis(alg, i, j).items():
                acc(field, out, k, field.mul(field.mul(ci, cj), c))
    return out


def _unit_vec(field, alg):
    return {i: v for i, v in ((i, alg.unit.entry(i, 0)) for i in range(alg.dim)) if v != field.zero}


def classical_algebra_ok(alg):
    field, n = alg.field, alg.dim
    one = _unit_vec(field, alg)
    for i in range(n):
        e = {i: field.one}
        if not _vec_eq(field, _mul_vec(field, alg, one, e), e):
            return False
        if not _vec_eq(field, _mul_vec(field, alg, e, one), e):
            return False
    for i, j, k in product(range(n), repeat=3):
        left = _mul_vec(field, alg, _mul_vec(field, alg, {i: field.one}, {j: field.one}), {k: field.one})
        right = _mul_vec(field, alg, {i: field.one}, _mul_vec(field, alg, {j: field.one}, {k: field.one}))
        if not _vec_eq(field, left, right):
            return False
    return True


def classical_coalgebra_ok(coalg):
    field, n = coalg.field, coalg.dim
    eps = {i: coalg.counit.entry(0, i) for i in range(n)}
    for i in range(n):
        left = {}
        right = {}
        counit_l = {}
        counit_r = {}
        for (j, k), c in delta_basis(coalg, i).items():
            for (a, b), c2 in delta_basis(coalg, j).items():
                acc(field, left, (a, b, k), field.mul(c, c2))
            for (a, b), c2 in delta_basis(coalg, k).items():
                acc(field, right, (j, a, b), field.mul(c, c2))
            acc(field, counit_l, k, field.mul(eps[j], c))
            acc(field, counit_r, j, field.mul(c, eps[k]))
        if not _vec_eq(field, left, right):
            return False
        e = {i: field.one}
        if not (_vec_eq(field, counit_l, e) and _vec_eq(field, counit_r, e)):
            return False
    return True


def classical_bialgebra_ok(alg, coalg):
    field, n = alg.field, alg.dim
    eps = {i: coalg.counit.entry(0, i) for i in range(n)}
    one = _unit_vec(field, alg)
    one_one = {}
    for i, ci in one.items():
        for j, cj in one.items():
            acc(field, one_one, (i, j), field.mul(ci, cj))
    delta_of_one = {}
    for i, ci in one.items():
        for (j, k), c in delta_basis(coalg, i).items():
            acc(field, delta_of_one, (j, k), field.mul(ci, c))
    if not _vec_eq(field, delta_of_one, one_one):
        return False
    eps_of_one = field.zero
    for i, ci in one.items():
        eps_of_one = field.add(eps_of_one, field.mul(ci, eps[i]))
    if eps_of_one != field.one:
        return False
    for i, j in product(range(n), repeat=2):
        lhs = {}
        for k, c in mul_basis(alg, i, j).items():
            for (a, b), c2 in delta_basis(coalg, k).items():
                acc(field, lhs, (a, b), field.mul(c, c2))
        rhs = {}
        for (a1, a2), c in delta_basis(coalg, i).items():
            for (b1, b2), c2 in delta_basis(coalg, j).items():
                for x, c3 in mul_basis(alg, a1, b1).items():
                    for y, c4 in mul_basis(alg, a2, b2).items():
                        v = field.mul(c, c2)
                        acc(field, rhs, (x, y), field.mul(field.mul(v, c3), c4))
        if not _vec_eq(field, lhs, rhs):
            return False
        eps_mult = field.zero
        for k, c in mul_basis(alg, i, j).items():
            eps_mult = field.add(eps_mult, field.mul(c, eps[k]))
        if eps_mult != field.mul(eps[i], eps[j]):
            return False
    return True


def classical_antipode_ok(alg, coalg, s):
    field, n = alg.field, alg.dim
    eps = {i: coalg.counit.entry(0, i) for i in range(n)}
    one = _unit_vec(field, alg)
    for i in range(n):
        left = {}
        right = {}
        for (j, k), c in delta_basis(coalg, i).items():
            for sj, c2 in matrix_image(field, s, j).items():
                for x, c3 in mul_basis(alg, sj, k).items():
                    acc(field, left, x, field.mul(field.mul(c, c2), c3))
            for sk, c2 in matrix_image(field, s, k).items():
                for x, c3 in mul_basis(alg, j, sk).items():
                    acc(field, right, x, field.mul(field.mul(c, c2), c3))
        want = {k: field.mul(eps[i], v) for k, v in one.items() if field.mul(eps[i], v) != field.zero}
        if not (_vec_eq(field, left, want) and _vec_eq(field, right, want)):
            return False
    return True


def classical_module_ok(act):
    hom = act.hom
    field, n, m = hom.field, hom.dim, act.carrier_dim
    one = _unit_vec(field, hom.algebra)
    for j in range(m):
        out = {}
        for i, ci in one.items():
            for r, c in act_basis(act, i, j).items():
                acc(field, out, r, field.mul(ci, c))
        if not _vec_eq(field, out, {j: field.one}):
            return False
    for i, j, r in product(range(n), range(n), range(m)):
        left = {}
        for k, c in mul_basis(hom.algebra, i, j).items():
            for x, c2 in act_basis(act, k, r).items():
                acc(field, left, x, field.mul(c, c2))
        right = {}
        for x, c in act_basis(act, j, r).items():
            for y, c2 in act_basis(act, i, x).items():
                acc(field, right, y, field.mul(c, c2))
        if not _vec_eq(field, left, right):
            return False
    return True


def classical_module_algebra_ok(act, carrier):
    hom = act.hom
    field, n, m = hom.field, hom.dim, act.carrier_dim
    eps = {i: hom.counit.entry(0, i) for i in range(n)}
    one_a = _unit_vec(field, carrier)
    for h in range(n):
        out = {}
        for j, cj in one_a.items():
            for r, c in act_basis(act, h, j).items():
                acc(field, out, r, field.mul(cj, c))
        want = {k: v for k, v in ((k, field.mul(eps[h], v)) for k, v in one_a.items()) if v != field.zero}
        if not _vec_eq(field, out, want):
            return False
    for h, a, b in product(range(n), range(m), range(m)):
        lhs = {}
        for k, c in mul_basis(carrier, a, b).items():
            for x, c2 in act_basis(act, h, k).items():
                acc(field, lhs, x, field.mul(c, c2))
        rhs = {}
        for (h1, h2), c in delta_basis(hom.coalgebra, h).items():
            for x, c2 in act_basis(act, h1, a).items():
                for y, c3 in act_basis(act, h2, b).items():
                    for z, c4 in mul_basis(carrier, x, y).items():
                        v = field.mul(c, c2)
                        acc(field, rhs, z, field.mul(field.mul(v, c3), c4))
        if not _vec_eq(field, lhs, rhs):
            return False
    return True


def classical_comodule_ok(coact):
    hom = coact.hom
    field, m = hom.field, coact.carrier_dim
    eps = {i: hom.counit.entry(0, i) for i in range(hom.dim)}
    for j in range(m):
        counit_side = {}
        left = {}
        right = {}
        for (h, r), c in coact_basis(coact, j).items():
            acc(field, counit_side, r, field.mul(eps[h], c))
            for (h1, h2), c2 in delta_basis(hom.coalgebra, h).items():
                acc(field, left, (h1, h2, r), field.mul(c, c2))
            for (h2, r2), c2 in coact_basis(coact, r).items():
                acc(field, right, (h, h2, r2), field.mul(c, c2))
        if not _vec_eq(field, counit_side, {j: field.one}):
            return False
        if not _vec_eq(field, left, right):
            return False
    return True


def classical_comodule_coalgebra_ok(coact, carrier):
    hom = coact.hom
    field, m = hom.field, coact.carrier_dim
    eps_c = {i: carrier.counit.entry(0, i) for i in range(m)}
    one = _unit_vec(field, hom.algebra)
    for j in range(m):
        lhs = {}
        for (h, r), c in coact_basis(coact, j).items():
            for (r1, r2), c2 in delta_basis(carrier, r).items():
                acc(field, lhs, (h, r1, r2), field.mul(c, c2))
        rhs = {}
        for (j1, j2), c in delta_basis(carrier, j).items():
            for (h1, r1), c2 in coact_basis(coact, j1).items():
                for (h2, r2), c3 in coact_basis(coact, j2).items():
                    for x, c4 in mul_basis(hom.algebra, h1, h2).items():
                        v = field.mul(c, c2)
                        acc(field, rhs, (x, r1, r2), field.mul(field.mul(v, c3), c4))
        if not _vec_eq(field, lhs, rhs):
            return False
        whisker = {}
        for (h, r), c in coact_basis(coact, j).items():
            acc(field, whisker, h, field.mul(c, eps_c[r]))
        want = {k: v for k, v in ((k, field.mul(v, eps_c[j])) for k, v in one.items()) if v != field.zero}
        if not _vec_eq(field, whisker, want):
            return False
    return True


def classical_yd_ok(act, coact):
    hom = act.hom
    field, n, m = hom.field, hom.dim, act.carrier_dim
    for h, r in product(range(n), range(m)):
        lhs = {}
        rhs = {}
        for (h1, h2), c in delta_basis(hom.coalgebra, h).items():
            for (mm, m0), c2 in coact_basis(coact, r).items():
                for x, c3 in mul_basis(hom.algebra, h1, mm).items():
                    for y, c4 in act_basis(act, h2, m0).items():
                        v = field.mul(c, c2)
                        acc(field, lhs, (x, y), field.mul(field.mul(v, c3), c4))
            for w, c2 in act_basis(act, h1, r).items():
                for (wm, w0), c3 in coact_basis(coact, w).items():
                    for x, c4 in mul_basis(hom.algebra, wm, h2).items():
                        v = field.mul(c, c2)
                        acc(field, rhs, (x, w0), field.mul(field.mul(v, c3), c4))
        if not _vec_eq(field, lhs, rhs):
            return False
    return True


def classical_r4_ok(bundle):
    field = bundle.hom.field
    alg, coalg = bundle.algebra, bundle.coalgebra
    m = alg.dim
    for a, b in product(range(m), repeat=2):
        lhs = {}
        for k, c in mul_basis(alg, a, b).items():
            for (x, y), c2 in delta_basis(coalg, k).items():
                acc(field, lhs, (x, y), field.mul(c, c2))
        rhs = {}
        for (a1, a2), c in delta_basis(coalg, a).items():
            for (b1, b2), c2 in delta_basis(coalg, b).items():
                for (hm, a20), c3 in coact_basis(bundle.coaction, a2).items():
                    for t, c4 in act_basis(bundle.action, hm, b1).items():
                        for x, c5 in mul_basis(alg, a1, t).items():
                            for y, c6 in mul_basis(alg, a20, b2).items():
                                v = field.mul(c, c2)
                                for w in (c3, c4, c5, c6):
                                    v = field.mul(v, w)
                                acc(field, rhs, (x, y), v)
        if not _vec_eq(field, lhs, rhs):
            return False
    return True


def commutative(alg):
    field, n = alg.field, alg.dim
    for i, j in product(range(n), repeat=2):
        if not _vec_eq(field, mul_basis(alg, i, j), mul_basis(alg, j, i)):
            return False
    return True


def cocommutative(coalg):
    field, n = coalg.field, coalg.dim
    for i in range(n):
        d = delta_basis(coalg, i)
        flipped = {(k, j): c for (j, k), c in d.items()}
        if not _vec_eq(field, d, flipped):
            return False
    return True
