# singularities/poly.py
"""
Sparse multivariate polynomials with exact rational coefficients,
weighted-degree bookkeeping and the text parser.
"""
import math
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from types import MappingProxyType

from singularities.errors import PolynomialSyntaxError, UnknownVariableError

NAME_PATTERN = re.compile(r"[A-Za-z][A-Za-z0-9]*")
_TOKEN_PATTERN = re.compile(r"\s*(?:(\d+(?:/\d+)?)|([A-Za-z][A-Za-z0-9]*)|([-+*^()]))")


def as_scalar(value):
    """Convert ints, Fractions, sympy rationals or gmpy mpq values to a Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError(f"Unsupported scalar: {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    try:
        return Fraction(int(value.numerator), int(value.denominator))
    except (AttributeError, TypeError):
        raise TypeError(f"Unsupported scalar: {value!r}") from None


def default_variables(nvars):
    if nvars <= 3:
        return ("x", "y", "z")[:nvars]
    return tuple(f"x{i}" for i in range(nvars))


def grlex_key(monomial):
    return (sum(monomial), monomial)


@dataclass(frozen=True)
class WeightVector:
    """Positive integer weights, normalized so the entries are coprime."""

    w: tuple

    def __post_init__(self):
        w = tuple(self.w)
        if not w:
            raise ValueError("weight vector must not be empty")
        if any(not isinstance(x, int) or isinstance(x, bool) or x < 1 for x in w):
            raise ValueError(f"weights must be positive integers, got {w}")
        g = reduce(math.gcd, w)
        object.__setattr__(self, "w", tuple(x // g for x in w))

    @property
    def total(self):
        return sum(self.w)

    def __len__(self):
        return len(self.w)

    def __iter__(self):
        return iter(self.w)

    def __getitem__(self, i):
        return self.w[i]


class Polynomial:
    """
    Immutable polynomial: a map from exponent tuples to nonzero Fractions.

    Parameters:
    terms (dict): exponent tuple -> coefficient (anything ``as_scalar`` accepts).
    nvars (int): number of variables; every exponent tuple has this length.
    """

    __slots__ = ("nvars", "_terms", "_hash")

    def __init__(self, terms, nvars):
        clean = {}
        for monomial, coeff in terms.items():
            monomial = tuple(int(e) for e in monomial)
            if len(monomial) != nvars:
                raise ValueError(f"monomial {monomial} does not have {nvars} entries")
            if any(e < 0 for e in monomial):
                raise ValueError(f"negative exponent in {monomial}")
            c = as_scalar(coeff)
            if c:
                clean[monomial] = clean.get(monomial, 0) + c
                if not clean[monomial]:
                    del clean[monomial]
        self.nvars = nvars
        self._terms = clean
        self._hash = None

    # --- constructors ---

    @classmethod
    def zero(cls, nvars):
        return cls({}, nvars)

    @classmethod
    def constant(cls, value, nvars):
        return cls({(0,) * nvars: value}, nvars)

    @classmethod
    def monomial(cls, exponents, coeff=1):
        exponents = tuple(exponents)
        return cls({exponents: coeff}, len(exponents))

    @classmethod
    def variable(cls, i, nvars):
        if not 0 <= i < nvars:
            raise ValueError(f"variable index {i} out of range for {nvars} variables")
        return cls.monomial(tuple(1 if j == i else 0 for j in range(nvars)))

    # --- inspection ---

    @property
    def terms(self):
        return MappingProxyType(self._terms)

    def is_zero(self):
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def __len__(self):
        return len(self._terms)

    def support(self):
        """Exponents in canonical (graded-lex, descending) order."""
        return sorted(self._terms, key=grlex_key, reverse=True)

    def coefficient(self, monomial):
        return self._terms.get(tuple(monomial), Fraction(0))

    def constant_term(self):
        return self.coefficient((0,) * self.nvars)

    def degree(self):
        return max((sum(m) for m in self._terms), default=-1)

    def is_monomial(self):
        return len(self._terms) == 1

    def evaluate(self, point):
        """Exact value at a point with rational coordinates."""
        if len(point) != self.nvars:
            raise ValueError(f"point has {len(point)} coordinates, expected {self.nvars}")
        point = [as_scalar(v) for v in point]
        total = Fraction(0)
        for monomial, coeff in self._terms.items():
            value = coeff
            for v, e in zip(point, monomial):
                if e:
                    value *= v**e
            total += value
        return total

    def substitute(self, i, value):
        """Set variable i to a constant; the variable count is unchanged."""
        value = as_scalar(value)
        out = {}
        for monomial, coeff in self._terms.items():
            e = monomial[i]
            if e and not value:
                continue
            key = monomial[:i] + (0,) + monomial[i + 1:]
            out[key] = out.get(key, 0) + coeff * value**e
        return Polynomial(out, self.nvars)

    def cleared(self):
        """
        Return (integer coefficient map, common denominator) with
        ``self == integer map / denominator``.
        """
        den = reduce(math.lcm, (c.denominator for c in self._terms.values()), 1)
        return {m: int(c * den) for m, c in self._terms.items()}, den

    # --- arithmetic ---

    def _coerce(self, other):
        if isinstance(other, Polynomial):
            if other.nvars != self.nvars:
                raise ValueError(f"variable count mismatch: {self.nvars} vs {other.nvars}")
            return other
        return Polynomial.constant(as_scalar(other), self.nvars)

    def __add__(self, other):
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        out = dict(self._terms)
        for m, c in other._terms.items():
            out[m] = out.get(m, 0) + c
        return Polynomial(out, self.nvars)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial({m: -c for m, c in self._terms.items()}, self.nvars)

    def __sub__(self, other):
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        out = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                key = tuple(a + b for a, b in zip(m1, m2))
                out[key] = out.get(key, 0) + c1 * c2
        return Polynomial(out, self.nvars)

    __rmul__ = __mul__

    def __pow__(self, exponent):
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError(f"Unsupported exponent: {exponent}")
        result = Polynomial.constant(1, self.nvars)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.nvars == other.nvars and self._terms == other._terms
        try:
            return self == self._coerce(other)
        except (TypeError, ValueError):
            return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.nvars, frozenset(self._terms.items())))
        return self._hash

    # --- printing ---

    def format(self, variables=None):
        """Canonical text in graded-lex order; ``parse_polynomial`` reads it back."""
        variables = tuple(variables or default_variables(self.nvars))
        if not self._terms:
            return "0"
        pieces = []
        for monomial in self.support():
            coeff = self._terms[monomial]
            factors = "*".join(
                name if e == 1 else f"{name}^{e}"
                for name, e in zip(variables, monomial) if e
            )
            magnitude = abs(coeff)
            if not factors:
                body = str(magnitude)
            elif magnitude == 1:
                body = factors
            else:
                body = f"{magnitude}*{factors}"
            if not pieces:
                pieces.append(f"-{body}" if coeff < 0 else body)
            else:
                pieces.append(f" - {body}" if coeff < 0 else f" + {body}")
        return "".join(pieces)

    def __str__(self):
        return self.format()

    def __repr__(self):
        return f"Polynomial({self.format()!r}, nvars={self.nvars})"


# --- parsing ---

def _tokenize(text):
    tokens = []
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        match = _TOKEN_PATTERN.match(text, pos)
        if not match:
            start = len(text) - len(text[pos:].lstrip())
            raise PolynomialSyntaxError(f"unexpected character {text[start]!r}", start)
        start = match.start(match.lastindex)
        if match.group(1) is not None:
            tokens.append(("num", match.group(1), start))
        elif match.group(2) is not None:
            tokens.append(("name", match.group(2), start))
        else:
            tokens.append(("op", match.group(3), start))
        pos = match.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    # expr := term (('+'|'-') term)*
    # term := unary (['*'] unary)*
    # unary := ('+'|'-') unary | power
    # power := atom ['^' integer]
    # atom := number | name | '(' expr ')'

    def __init__(self, text, variables):
        self.tokens = _tokenize(text)
        self.index = 0
        self.variables = {name: i for i, name in enumerate(variables)}
        self.nvars = len(variables)

    def peek(self):
        return self.tokens[self.index]

    def take(self):
        token = self.tokens[self.index]
        self.index += 1
        return token

    def expect(self, text):
        kind, value, pos = self.take()
        if value != text or kind != "op":
            raise PolynomialSyntaxError(f"expected {text!r}, found {value or 'end of input'!r}", pos)

    def parse(self):
        if self.peek()[0] == "end":
            raise PolynomialSyntaxError("empty input", 0)
        result = self.expr()
        kind, value, pos = self.peek()
        if kind != "end":
            raise PolynomialSyntaxError(f"unexpected token {value!r}", pos)
        return result

    def expr(self):
        result = self.term()
        while self.peek()[:2] in (("op", "+"), ("op", "-")):
            _, op, _ = self.take()
            right = self.term()
            result = result + right if op == "+" else result - right
        return result

    def starts_factor(self):
        kind, value, _ = self.peek()
        return kind in ("num", "name") or (kind == "op" and value == "(")

    def term(self):
        result = self.unary()
        while True:
            if self.peek()[:2] == ("op", "*"):
                self.take()
                result = result * self.unary()
            elif self.starts_factor():
                result = result * self.unary()
            else:
                return result

    def unary(self):
        kind, value, _ = self.peek()
        if kind == "op" and value in "+-":
            self.take()
            operand = self.unary()
            return -operand if value == "-" else operand
        return self.power()

    def power(self):
        base = self.atom()
        if self.peek()[:2] == ("op", "^"):
            self.take()
            kind, value, pos = self.take()
            if kind != "num" or "/" in value:
                raise PolynomialSyntaxError("exponent must be a non-negative integer", pos)
            return base ** int(value)
        return base

    def atom(self):
        kind, value, pos = self.take()
        if kind == "num":
            if "/" in value:
                num, den = value.split("/")
                if int(den) == 0:
                    raise PolynomialSyntaxError("zero denominator", pos)
                return Polynomial.constant(Fraction(int(num), int(den)), self.nvars)
            return Polynomial.constant(int(value), self.nvars)
        if kind == "name":
            if value not in self.variables:
                raise UnknownVariableError(f"unknown variable {value!r}", pos)
            return Polynomial.variable(self.variables[value], self.nvars)
        if kind == "op" and value == "(":
            inner = self.expr()
            self.expect(")")
            return inner
        raise PolynomialSyntaxError(f"unexpected token {value or 'end of input'!r}", pos)


def collect_variables(text):
    """Variable names in order of first appearance."""
    seen = []
    for name in NAME_PATTERN.findall(text):
        if name not in seen:
            seen.append(name)
    return seen


def canonical_variables(text):
    """
    Variable names of the text with x, y, z first in that order, then the
    remaining names in order of first appearance.
    """
    seen = collect_variables(text)
    standard = [name for name in ("x", "y", "z") if name in seen]
    return standard + [name for name in seen if name not in standard]


def parse_polynomial(text, variables=None):
    """
    Parse polynomial text such as ``"y^3 - x^7 + 5/7*x^5 y"``.

    Parameters:
    text (str): the polynomial.
    variables (list): variable names in slot order; inferred from the text in
        first-appearance order when omitted.

    Returns:
    Polynomial: the parsed polynomial.

    Raises:
    PolynomialSyntaxError: on malformed text or a zero denominator.
    UnknownVariableError: on a name missing from ``variables``.
    """
    if variables is None:
        variables = collect_variables(text)
    variables = list(variables)
    for name in variables:
        if not NAME_PATTERN.fullmatch(name):
            raise ValueError(f"Unsupported variable name: {name!r}")
    if len(set(variables)) != len(variables):
        raise ValueError(f"duplicate variable names in {variables}")
    return _Parser(text, variables).parse()


# --- weighted bookkeeping ---

def weighted_degree(monomial, w):
    if len(monomial) != len(w):
        raise ValueError(f"monomial {tuple(monomial)} and weights {tuple(w)} differ in length")
    return sum(wi * e for wi, e in zip(w, monomial))


def weighted_parts(f, w):
    """Split f into weighted-homogeneous parts, keyed by weighted degree (ascending)."""
    if f.is_zero():
        raise ValueError("weighted_parts of the zero polynomial")
    parts = {}
    for monomial, coeff in f.terms.items():
        parts.setdefault(weighted_degree(monomial, w), {})[monomial] = coeff
    return {deg: Polynomial(parts[deg], f.nvars) for deg in sorted(parts)}


def partial_derivative(f, i):
    if not 0 <= i < f.nvars:
        raise ValueError(f"variable index {i} out of range for {f.nvars} variables")
    out = {}
    for monomial, coeff in f.terms.items():
        e = monomial[i]
        if e:
            out[monomial[:i] + (e - 1,) + monomial[i + 1:]] = coeff * e
    return Polynomial(out, f.nvars)


def chart_substitute(f, w, i):
    """
    Pull f back along chart i of the w-weighted blowup and factor out x_i^d.

    The substitution is x_j -> x_i^{w_j} u_j (j != i), x_i -> x_i^{w_i}; a
    monomial x^gamma becomes x_i^{<w, gamma>} u^gamma with slot i cleared, so
    the residual keeps the slot layout of f with slot i holding the power of
    x_i left after division by x_i^d.

    Returns:
    tuple: (d, residual Polynomial)
    """
    if f.is_zero():
        raise ValueError("chart_substitute of the zero polynomial")
    if not 0 <= i < f.nvars:
        raise ValueError(f"chart index {i} out of range for {f.nvars} variables")
    if f.constant_term():
        raise ValueError("f must vanish at the origin")
    d = min(weighted_degree(m, w) for m in f.terms)
    residual = {}
    for monomial, coeff in f.terms.items():
        key = monomial[:i] + (weighted_degree(monomial, w) - d,) + monomial[i + 1:]
        residual[key] = coeff
    return d, Polynomial(residual, f.nvars)


def eval_mod(f, point, modulus):
    """Value of f at an integer point reduced mod ``modulus``."""
    if modulus < 1:
        raise ValueError(f"Unsupported modulus: {modulus}")
    if len(point) != f.nvars:
        raise ValueError(f"point has {len(point)} coordinates, expected {f.nvars}")
    total = 0
    for monomial, coeff in f.terms.items():
        try:
            c = coeff.numerator * pow(coeff.denominator, -1, modulus)
        except ValueError:
            raise ValueError(
                f"denominator {coeff.denominator} is not invertible mod {modulus}"
            ) from None
        for x, e in zip(point, monomial):
            if e:
                c = c * pow(x, e, modulus) % modulus
        total += c
    return total % modulus
