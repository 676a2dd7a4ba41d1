from .field import Field, PrimeField, RationalField, FieldScalar, field_ops, make_field
from .monomial import Monomial, degrevlex_key, monomial_cmp, monomials_of_degree
from .polynomial import Polynomial
from .linalg import rref, rank, nullspace, matmul, EchelonBasis
from .io import parse_polynomial, format_polynomial, PolynomialSyntaxError
