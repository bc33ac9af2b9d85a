import pytest
from hypothesis import strategies as st

from cleanring.fields import QQ, PrimeField
from cleanring.poly import Poly
from cleanring.ratfunc import LocalElem

GF5 = PrimeField(5)


@pytest.fixture(params=["Q", "GF5"])
def field(request):
    return QQ if request.param == "Q" else GF5


small_ints = st.integers(min_value=-7, max_value=7)


@st.composite
def polys(draw, field, max_degree=4):
    return Poly(field, draw(st.lists(small_ints, max_size=max_degree + 1)))


@st.composite
def local_elems(draw, field, max_degree=4):
    num = draw(polys(field, max_degree))
    den = draw(st.lists(small_ints, min_size=1, max_size=max_degree + 1))
    if field(den[0]) == 0:
        den[0] = 1
    return LocalElem(num, Poly(field, den))
