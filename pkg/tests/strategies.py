"""Hypothesis strategies shared by the test modules."""

from hypothesis import strategies as st

from hecke_fusion.field import QQ, Poly, frac_field

small_ints = st.integers(min_value=-6, max_value=6)

rationals = st.builds(lambda a, b: QQ.convert(a) / b,
                      st.integers(min_value=-20, max_value=20),
                      st.integers(min_value=1, max_value=9))

nonzero_rationals = rationals.filter(lambda x: x != 0)


def _poly(coeffs):
    return Poly([QQ.convert(c) for c in coeffs], QQ)


polys = st.lists(small_ints, min_size=0, max_size=4).map(_poly)
nonzero_polys = polys.filter(bool)


@st.composite
def ratfuncs(draw, field=None):
    F = field or frac_field(QQ, "q")
    num = draw(polys)
    den = draw(nonzero_polys)
    return F.from_polys(num, den)


nonzero_ratfuncs = ratfuncs().filter(bool)


@st.composite
def nested(draw):
    """Elements of Q(q)(z) with small random coefficients."""
    K = frac_field(QQ, "q")
    L = frac_field(K, "z")
    num = [draw(ratfuncs(K)) for _ in range(draw(st.integers(0, 2)))]
    den = [draw(ratfuncs(K)) for _ in range(draw(st.integers(0, 1)))] + [K.one]
    return L.from_coeffs(num, den)
