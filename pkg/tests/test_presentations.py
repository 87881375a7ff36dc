from fractions import Fraction

import pytest

from tatelab.fields import PrimeField, QQ
from tatelab.presentations import (Presentation, PresentationError,
                                   parse_polynomial, parse_presentation)

VARS_XY = [("x", 1), ("y", 1)]


def P(relators, variables=VARS_XY, field=QQ, base=None):
    return Presentation(field, variables, relators, base=base)


# -- parsing ----------------------------------------------------------------

def test_parse_polynomial_basic():
    assert parse_polynomial("x^2", ("x", "y")) == {(2, 0): 1}
    assert parse_polynomial("x*y", ("x", "y")) == {(1, 1): 1}
    assert parse_polynomial("x^2 - 2*x*y + y^2", ("x", "y")) == \
        {(2, 0): 1, (1, 1): -2, (0, 2): 1}
    assert parse_polynomial("-x^2", ("x", "y")) == {(2, 0): -1}
    assert parse_polynomial("3*x*x", ("x", "y")) == {(2, 0): 3}


def test_parse_polynomial_cancellation():
    assert parse_polynomial("x^2 - x^2 + y^2", ("x", "y")) == {(0, 2): 1}


@pytest.mark.parametrize("bad", ["", "x + ", "z^2", "x^-1", "x^0*", "2*"])
def test_parse_polynomial_rejects(bad):
    with pytest.raises(PresentationError):
        parse_polynomial(bad, ("x", "y"))


# -- validation -------------------------------------------------------------

def test_relator_must_be_homogeneous():
    with pytest.raises(PresentationError):
        P(["x^2 + y^3"])


def test_relator_degree_at_least_two():
    with pytest.raises(PresentationError):
        P(["x"])


def test_relator_no_linear_terms_weighted():
    # y alone has internal degree 2 here, but it is still a linear term
    with pytest.raises(PresentationError):
        P(["x^2 + y"], variables=[("x", 1), ("y", 2)])


def test_zero_relator_rejected():
    with pytest.raises(PresentationError):
        P(["x^2 - x^2"])


def test_duplicate_variable_names_rejected():
    with pytest.raises(PresentationError):
        P([], variables=[("x", 1), ("x", 1)])


def test_base_must_be_prefix():
    base = P(["x^2"])
    P(["x^2", "y^2"], base=base)  # fine
    with pytest.raises(PresentationError):
        P(["y^2", "x^2"], base=base)
    with pytest.raises(PresentationError):
        P(["y^2"], base=base)


def test_base_field_and_variables_must_match():
    base = P(["x^2"])
    with pytest.raises(PresentationError):
        Presentation(PrimeField(5), VARS_XY, ["x^2", "y^2"], base=base)
    with pytest.raises(PresentationError):
        Presentation(QQ, [("x", 1)], ["x^2"], base=base)


# -- monomial order and graded pieces ---------------------------------------

def test_monomials_descending_lex():
    p = P([])
    assert p.monomials(2) == ((2, 0), (1, 1), (0, 2))
    assert p.monomials(0) == ((0, 0),)


def test_monomials_weighted():
    p = P([], variables=[("x", 1), ("y", 2)])
    assert p.monomials(2) == ((2, 0), (0, 1))
    assert p.monomials(3) == ((3, 0), (1, 1))


def test_quotient_basis_m2zero():
    p = P(["x^2", "x*y", "y^2"])
    assert p.quotient_basis(0).monomials == ((0, 0),)
    assert p.quotient_basis(1).monomials == ((1, 0), (0, 1))
    assert p.quotient_basis(2).monomials == ()
    assert p.hilbert(5) == [1, 2, 0, 0, 0, 0]


def test_quotient_basis_nontrivial_pivot():
    # relator x^2 - y^2: pivot on the lex-larger monomial x^2
    p = P(["x^2 - y^2"])
    assert p.quotient_basis(2).monomials == ((1, 1), (0, 2))
    assert p.hilbert(4) == [1, 2, 2, 2, 2]


def test_hilbert_hypersurface_weighted():
    p = P(["x^4 + y^2"], variables=[("x", 1), ("y", 2)])
    assert p.hilbert(8) == [1, 1, 2, 2, 2, 2, 2, 2, 2]


# -- normal form and multiplication -----------------------------------------

def test_reduce_monomial_hypersurface():
    p = P(["x^2 - y^2"])
    # x^2 reduces to y^2; x^3 to x*y^2
    assert p.reduce_monomial((2, 0)) == {(0, 2): Fraction(1)}
    assert p.reduce_monomial((3, 0)) == {(1, 2): Fraction(1)}
    assert p.reduce_monomial((1, 1)) == {(1, 1): Fraction(1)}


def test_normal_form_kills_ideal():
    p = P(["x^2", "x*y", "y^2"])
    f = parse_polynomial("x^3 + 2*x*y - y^2", ("x", "y"))
    assert p.normal_form(p.from_int_poly(f)) == {}


def test_multiply_in_quotient():
    p = P(["x^2 - y^2"])
    x = p.from_int_poly(parse_polynomial("x", ("x", "y")))
    prod = p.multiply(x, x)
    assert prod == {(0, 2): Fraction(1)}


def test_coords_roundtrip():
    p = P(["x^2 - y^2"])
    f = p.normal_form(p.from_int_poly(parse_polynomial("x*y - 3*y^2", ("x", "y"))))
    vec = p.coords(f, 2)
    assert p.element(vec, 2) == f


# -- serialization ----------------------------------------------------------

def test_json_roundtrip():
    doc = {
        "field": {"type": "Fp", "p": 5},
        "variables": [{"name": "x", "degree": 1}, {"name": "y", "degree": 2}],
        "relators": ["x^4 + y^2"],
        "base_relators": [],
    }
    p = parse_presentation(doc)
    doc2 = p.to_json()
    p2 = parse_presentation(doc2)
    assert p2.field == p.field
    assert p2.variables == p.variables
    assert p2.relators == p.relators
    assert (p2.base is None) == (p.base is None)


def test_missing_keys_rejected():
    with pytest.raises(PresentationError):
        parse_presentation({"variables": [], "relators": []})


def test_poly_str_deterministic():
    p = P(["x^2", "x*y", "y^2"])
    f = p.from_int_poly(parse_polynomial("y^2 - x^2 + x*y", ("x", "y")))
    assert p.poly_str(f) == p.poly_str(dict(reversed(list(f.items()))))
