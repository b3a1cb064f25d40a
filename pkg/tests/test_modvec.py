"""The divided-power recursion is checked against an independent route:
apply the plain coproduct f_i repeatedly and divide by the quantum
factorial.  The plain action needs no binomial exponents, so agreement
pins the recursion's q-powers."""

import random

from qcb.crystal import SpinColumn, spin_apply
from qcb.laurent import LaurentPoly, divide_exact, quantum_factorial
from qcb.modvec import ModuleVector, _factors, _tabloid_from_factors, apply_monomial, highest_vector, module_f_divided
from qcb.rootdata import AlgebraKind, cartan_exponent, qi_exponent
from qcb.shapes import highest_tabloid, shape_for_lambda, weight2_of_tabloid
from qcb.wedge import wedge_f

B2 = AlgebraKind("B", 2)
B3 = AlgebraKind("B", 3)
D3 = AlgebraKind("D", 3)


def plain_f(v: ModuleVector, i: int) -> ModuleVector:
    shape = v.shape
    kind = shape.kind
    d = qi_exponent(kind, i)
    acc = {}
    for tab, coeff in v.terms:
        factors = _factors(tab)
        tpref = LaurentPoly.one()
        for j, f in enumerate(factors):
            if isinstance(f, SpinColumn):
                g = spin_apply(f, i, "f")
                rows = [(g, LaurentPoly.one())] if g is not None else []
            else:
                rows = list(wedge_f(f, i).terms)
            for g, c in rows:
                t = _tabloid_from_factors(shape, factors[:j] + (g,) + factors[j + 1 :])
                acc[t] = acc.get(t, LaurentPoly.zero()) + coeff * c * tpref
            tpref = tpref * LaurentPoly.q(d * cartan_exponent(f.weight2(), i, kind))
    return ModuleVector.make(shape, acc)


def brute_divided(v: ModuleVector, i: int, m: int) -> ModuleVector:
    out = v
    for _ in range(m):
        out = plain_f(out, i)
    fact = quantum_factorial(m, qi_exponent(v.shape.kind, i))
    return ModuleVector.make(v.shape, {t: divide_exact(c, fact) for t, c in out.terms})


def test_divided_power_example():
    v = highest_vector((2, 0), B2)
    out = module_f_divided(v, 1, 2)
    assert [(str(t), str(c)) for t, c in out.terms] == [("2/2", "1")]


def test_base_cases():
    v = highest_vector((0, 2), B2)  # single wedge factor
    assert module_f_divided(v, 2, 0) == v
    out = module_f_divided(v, 2, 1)
    assert [(str(t), str(c)) for t, c in out.terms] == [("1,0", "1")]


def test_recursion_matches_brute_force():
    rng = random.Random(7)
    cases = [
        (B3, (1, 1, 2)), (B3, (1, 0, 1)), (B3, (0, 0, 1)),
        (D3, (1, 1, 0)), (D3, (0, 1, 2)), (D3, (0, 1, 1)),
        (B2, (2, 1)),
    ]
    for kind, lam in cases:
        v = highest_vector(lam, kind)
        for _ in range(10):
            i = rng.randrange(1, kind.rank + 1)
            m = rng.randrange(0, 3)
            assert module_f_divided(v, i, m).terms == brute_divided(v, i, m).terms
            nv = module_f_divided(v, rng.randrange(1, kind.rank + 1), rng.randrange(1, 3))
            if not nv.is_zero():
                v = nv


def test_weight_homogeneity():
    v = highest_vector((1, 1, 2), B3)
    mu = weight2_of_tabloid(v.terms[0][0])
    out = module_f_divided(v, 3, 2)
    for t, _c in out.terms:
        assert weight2_of_tabloid(t) == (mu[0], mu[1], mu[2] - 4)


def test_apply_monomial():
    v = highest_vector((1, 1, 2), B3)
    assert apply_monomial(v, []) == v
    # f_2 f_1^(3) f_3^(3) f_2^(2) f_3 applied rightmost-first
    path = [(2, 1), (1, 3), (3, 3), (2, 2), (3, 1)]
    out = apply_monomial(v, path)
    lhs = module_f_divided(
        module_f_divided(
            module_f_divided(module_f_divided(module_f_divided(v, 3, 1), 2, 2), 3, 3), 1, 3
        ),
        2,
        1,
    )
    assert out.terms == lhs.terms


def test_highest_vector_spin_shapes():
    t = highest_vector((1, 1, 3), B3).terms[0][0]
    assert t.spin.letters() == (1, 2, 3)
    assert str(t) == "s:1,2,3/1,2,3/1,2/1"
    t = highest_vector((0, 2, 1), D3).terms[0][0]
    assert t.spin.letters() == (1, 2, -3)
    assert [c.letters for c in t.columns] == [(1, 2)]


def test_recursion_split_associativity():
    """Splitting the factor chain at any point gives the same coefficients."""
    from qcb.modvec import _expand_divided
    from qcb.rootdata import weight2_add, weight2_zero

    rng = random.Random(3)
    for kind, lam in [(B3, (1, 1, 2)), (D3, (1, 1, 1)), (B3, (1, 1, 3))]:
        d_by_i = {i: qi_exponent(kind, i) for i in range(1, kind.rank + 1)}
        v = highest_vector(lam, kind)
        for _ in range(8):
            i = rng.randrange(1, kind.rank + 1)
            nv = module_f_divided(v, i, rng.randrange(1, 3))
            if not nv.is_zero():
                v = nv
        tab = v.terms[0][0]
        factors = _factors(tab)
        for i in range(1, kind.rank + 1):
            d = d_by_i[i]
            for m in (1, 2, 3):
                whole = _expand_divided(factors, i, m, kind, d)
                for cut in range(1, len(factors)):
                    left, right = factors[:cut], factors[cut:]
                    wl = weight2_zero(kind.rank)
                    for f in left:
                        wl = weight2_add(wl, f.weight2())
                    a = cartan_exponent(wl, i, kind)
                    combined = {}
                    for k in range(m + 1):
                        lt = _expand_divided(left, i, k, kind, d)
                        rt = _expand_divided(right, i, m - k, kind, d)
                        scale = LaurentPoly.q(d * (m - k) * (a - k))
                        for lf, lc in lt.items():
                            for rf, rc in rt.items():
                                key = lf + rf
                                add = lc * rc * scale
                                combined[key] = combined.get(key, LaurentPoly.zero()) + add
                    combined = {k: c for k, c in combined.items() if not c.is_zero()}
                    assert combined == whole, (kind, lam, i, m, cut)
