from fractions import Fraction
from itertools import combinations, product

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from dfseq.algebra import (
    Polynomial,
    TermOrder,
    buchberger,
    initial_ideal,
    normal_form,
    parse_polynomial,
    weighted_initial,
)
from dfseq.algebra.groebner import _spoly

CONIC = parse_polynomial("z0*z2 - z1^2", 3)
CUBIC = [parse_polynomial(s, 4) for s in ("z0*z2 - z1^2", "z0*z3 - z1*z2", "z1*z3 - z2^2")]


def P(text, n=3):
    return parse_polynomial(text, n)


def test_normal_form_examples():
    G = buchberger([P("z0*z2")], TermOrder.grevlex(3))
    assert normal_form(P("z0*z2"), G).is_zero()
    assert normal_form(P("z1^2"), G) == P("z1^2")
    Gc = buchberger([CONIC], TermOrder((0, 0, 1)))
    assert normal_form(CONIC, Gc).is_zero()


def test_buchberger_examples():
    assert len(buchberger([], TermOrder.grevlex(2))) == 0
    Gc = buchberger([CONIC], TermOrder((0, 0, 1)))
    assert list(Gc.generators) == [CONIC]
    assert Gc.leading == ((1, 0, 1),)
    G = buchberger([P("z0", 2), P("z1", 2)], TermOrder.grevlex(2))
    assert set(G.generators) == {P("z0", 2), P("z1", 2)}


def test_buchberger_errors():
    with pytest.raises(ValueError, match="empty ambient"):
        buchberger([], TermOrder(()))
    with pytest.raises(ValueError, match="homogeneous"):
        buchberger([P("z0 + z1^2")], TermOrder.grevlex(3))


def test_weighted_initial_examples():
    assert weighted_initial(CONIC, (0, 0, 1)) == P("z0*z2")
    assert weighted_initial(CONIC, (0, 0, 0)) == CONIC
    assert weighted_initial(P("z1^3"), (5, -2, 7)) == P("z1^3")
    with pytest.raises(ValueError):
        weighted_initial(Polynomial.zero(3), (0, 0, 1))


def test_initial_ideal_examples():
    assert initial_ideal([CONIC], (0, 0, 1)) == [P("z0*z2")]
    assert initial_ideal([], (0, 0, 1)) == []
    # same ideal; the generator is made monic for the grevlex leading term z1^2
    assert initial_ideal([CONIC], (0, 0, 0)) == [CONIC.scale(-1)]


def test_initial_ideal_twisted_cubic():
    ini = initial_ideal(CUBIC, (0, 0, 0, 1))
    # every initial form picks the terms carrying z3 when present
    assert P("z0*z3", 4) in ini and P("z1*z3", 4) in ini


def _is_groebner(G):
    basis = list(G.generators)
    for (i, f), (j, g) in combinations(enumerate(basis), 2):
        s = Polynomial(_spoly(f, G.leading[i], g, G.leading[j]), G.nvars)
        if not normal_form(s, G).is_zero():
            return False
    return True


def _to_dfseq(expr, gens):
    poly = sympy.Poly(expr, *gens)
    return Polynomial({m: Fraction(int(c.p), int(c.q)) for m, c in poly.terms()}, len(gens))


@pytest.mark.parametrize("ideal", [[CONIC], CUBIC, [P("z0*z3 - z1*z2", 4)], [P("z0^2 - z1*z2"), P("z1^3 - z2^2*z0")]])
def test_grevlex_matches_sympy(ideal):
    n = ideal[0].nvars
    z = sympy.symbols(f"z0:{n}")
    exprs = [sympy.sympify(str(g).replace("^", "**")) for g in ideal]
    oracle = sympy.groebner(exprs, *z, order="grevlex")
    ours = buchberger(ideal, TermOrder.grevlex(n))
    assert set(ours.generators) == {_to_dfseq(e, z) for e in oracle.exprs}


def _monomials(deg, n=3):
    return [m for m in product(range(deg + 1), repeat=n) if sum(m) == deg]


@st.composite
def homogeneous(draw, deg, max_terms=4):
    mons = _monomials(deg)
    chosen = draw(st.lists(st.sampled_from(mons), min_size=1, max_size=max_terms, unique=True))
    coeffs = draw(st.lists(st.integers(-4, 4).filter(bool), min_size=len(chosen), max_size=len(chosen)))
    return Polynomial({m: Fraction(c) for m, c in zip(chosen, coeffs)}, 3)


@st.composite
def binomial_ideals(draw):
    deg = draw(st.integers(1, 3))
    return [draw(homogeneous(deg, max_terms=2)) for _ in range(draw(st.integers(1, 3)))]


weights3 = st.tuples(st.integers(-2, 3), st.integers(-2, 3), st.integers(-2, 3))


@settings(max_examples=40, deadline=None)
@given(binomial_ideals(), weights3)
def test_groebner_criterion_and_idempotence(gens, c):
    G = buchberger(gens, TermOrder(c))
    assert _is_groebner(G)
    for g in gens:
        assert normal_form(g, G).is_zero()
    again = buchberger(list(G.generators), TermOrder(c))
    assert set(again.leading) == set(G.leading)
    assert all(g.terms[lm] == 1 for g, lm in zip(G.generators, G.leading))


@settings(max_examples=40, deadline=None)
@given(st.data(), binomial_ideals(), weights3)
def test_division_correctness(data, gens, c):
    G = buchberger(gens, TermOrder(c))
    top = gens[0].degree() + 1
    member = Polynomial.zero(3)
    for g in gens:
        cofactor = data.draw(homogeneous(top - g.degree()))
        member = member + cofactor * g
    assert normal_form(member, G).is_zero()
    h = data.draw(homogeneous(top))
    r = normal_form(h, G)
    assert normal_form(h - r, G).is_zero()
    assert not any(all(a >= b for a, b in zip(m, lm)) for m in r.terms for lm in G.leading)


@settings(max_examples=60, deadline=None)
@given(homogeneous(2), homogeneous(3), weights3)
def test_weighted_initial_multiplicative(f, g, c):
    assert weighted_initial(f * g, c) == weighted_initial(f, c) * weighted_initial(g, c)
