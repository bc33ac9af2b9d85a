"""Exact verification of strongly clean one-sided inverses and related ring facts."""

from .fields import QQ, GFElem, PrimeField, parse_field
from .poly import NEG_INF, Poly, poly_divmod, poly_gcd
from .ratfunc import INFINITE, Finite, LocalElem, NotLocalError, RatFunc, SplitPair, eval_at_infinity, eval_at_zero, is_local, split
from .parser import ParseError, parse_ratfunc

__all__ = [
    "QQ", "GFElem", "PrimeField", "parse_field",
    "NEG_INF", "Poly", "poly_divmod", "poly_gcd",
    "INFINITE", "Finite", "LocalElem", "NotLocalError", "RatFunc", "SplitPair",
    "eval_at_infinity", "eval_at_zero", "is_local", "split",
    "ParseError", "parse_ratfunc",
]
