from .polyio import parse_polynomial, format_polynomial, PolynomialSyntaxError
