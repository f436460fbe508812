from fractions import Fraction

from hypothesis import settings, strategies as st

from symprod.exactalg import Poly, laurent
from symprod.homclass import ClassKind, GradedClass

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

rationals = st.builds(Fraction, st.integers(-6, 6), st.integers(1, 4))

laurents = st.dictionaries(st.integers(-2, 3), rationals, max_size=4).map(laurent)

# polynomials in y and p_1..p_3
p_monomials = st.lists(
    st.tuples(st.sampled_from([("y",), ("p", 1), ("p", 2), ("p", 3)]), st.integers(1, 2)),
    max_size=3,
).map(lambda fs: tuple(sorted(dict(fs).items())))
sparse_polys = st.dictionaries(p_monomials, rationals, max_size=4).map(Poly)


@st.composite
def graded_classes(draw, kind=None, label="v", max_degree=2):
    kind = kind or draw(st.sampled_from(list(ClassKind)))
    coeff = laurents if kind is ClassKind.HIRZEBRUCH_MINUS_Y else rationals
    comps = draw(st.dictionaries(st.integers(0, max_degree), coeff, min_size=1, max_size=3))
    return GradedClass(kind, comps, label)
