"""Sparse multivariate polynomial arithmetic over exact rationals or complex floats.

A polynomial is a finite map from exponent vectors to nonzero coefficients:

    x1^2*x3 - 5/2*x2   (n_vars=3)   ->   {(2,0,1): Fraction(1), (0,1,0): Fraction(-5,2)}

Two coefficient kinds exist and never mix inside one polynomial:

  * ``"rational"`` -- exact ``fractions.Fraction`` values (ints are coerced),
  * ``"complex"``  -- double-precision ``complex`` values.

The zero polynomial is the empty term map.  Terms are kept canonical (no zero
coefficient is ever stored); serialization orders terms graded-lexicographically
(total degree first, then exponents).  Instances are immutable by convention:
no operation mutates its inputs.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence, Union

Exponents = tuple[int, ...]

RATIONAL = "rational"
COMPLEX = "complex"

Scalar = Union[int, Fraction, float, complex]


class _AnyDegree:
    """Degree marker of the zero polynomial (homogeneous of every degree)."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "ANY_DEGREE"


ANY_DEGREE = _AnyDegree()


def _coerce(value: Scalar, kind: str):
    """Coerce a scalar into the coefficient domain of `kind`."""
    if kind == RATIONAL:
        if isinstance(value, Fraction):
            return value
        if isinstance(value, int):
            return Fraction(value)
        raise ValueError(f"rational polynomial cannot hold {type(value).__name__}")
    if kind == COMPLEX:
        return complex(value)
    raise ValueError(f"unknown coefficient kind {kind!r}")


class Polynomial:
    """Immutable sparse polynomial in ``n_vars`` variables over one coefficient kind."""

    __slots__ = ("n_vars", "kind", "terms")

    def __init__(self, n_vars: int, terms: Mapping[Exponents, Scalar], kind: str = RATIONAL):
        if n_vars < 1:
            raise ValueError("n_vars must be positive")
        if kind not in (RATIONAL, COMPLEX):
            raise ValueError(f"unknown coefficient kind {kind!r}")
        clean: dict[Exponents, Scalar] = {}
        for exps, coeff in terms.items():
            exps = tuple(exps)
            if len(exps) != n_vars:
                raise ValueError(f"exponent vector {exps} has length != n_vars={n_vars}")
            if any(e < 0 for e in exps):
                raise ValueError(f"negative exponent in {exps}")
            c = _coerce(coeff, kind)
            if c != 0:
                clean[exps] = c
        object.__setattr__(self, "n_vars", n_vars)
        object.__setattr__(self, "kind", kind)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):  # pragma: no cover - immutability guard
        raise AttributeError("Polynomial is immutable")

    # ---------------------------------------------------------------- builders
    @staticmethod
    def zero(n_vars: int, kind: str = RATIONAL) -> "Polynomial":
        return Polynomial(n_vars, {}, kind)

    @staticmethod
    def constant(value: Scalar, n_vars: int, kind: str = RATIONAL) -> "Polynomial":
        return Polynomial(n_vars, {(0,) * n_vars: value}, kind)

    @staticmethod
    def variable(i: int, n_vars: int, kind: str = RATIONAL) -> "Polynomial":
        """The monomial x_{i+1} (0-based index i)."""
        if not 0 <= i < n_vars:
            raise ValueError(f"variable index {i} out of range for n_vars={n_vars}")
        exps = tuple(1 if j == i else 0 for j in range(n_vars))
        return Polynomial(n_vars, {exps: 1}, kind)

    def one_like(self) -> "Polynomial":
        return Polynomial.constant(1, self.n_vars, self.kind)

    def zero_like(self) -> "Polynomial":
        return Polynomial.zero(self.n_vars, self.kind)

    # ---------------------------------------------------------------- queries
    def is_zero(self) -> bool:
        return not self.terms

    def total_degree(self):
        """Largest total degree among terms; None for the zero polynomial."""
        if not self.terms:
            return None
        return max(sum(e) for e in self.terms)

    def is_homogeneous(self):
        """Common total degree of all terms, ANY_DEGREE for zero, None if mixed."""
        if not self.terms:
            return ANY_DEGREE
        degrees = {sum(e) for e in self.terms}
        if len(degrees) == 1:
            return degrees.pop()
        return None

    def coefficient(self, exps: Sequence[int]):
        """Coefficient of the given monomial, zero-of-kind if absent."""
        exps = tuple(exps)
        if exps in self.terms:
            return self.terms[exps]
        return Fraction(0) if self.kind == RATIONAL else 0j

    def as_complex(self) -> "Polynomial":
        """Copy with coefficients converted to complex floats."""
        if self.kind == COMPLEX:
            return self
        return Polynomial(self.n_vars, {e: complex(c) for e, c in self.terms.items()}, COMPLEX)

    # ---------------------------------------------------------------- arithmetic
    def _check_compatible(self, other: "Polynomial"):
        if not isinstance(other, Polynomial):
            raise ValueError(f"expected Polynomial, got {type(other).__name__}")
        if self.n_vars != other.n_vars:
            raise ValueError(f"mixed n_vars: {self.n_vars} vs {other.n_vars}")
        if self.kind != other.kind:
            raise ValueError(f"mixed coefficient kinds: {self.kind} vs {other.kind}")

    def __add__(self, other):
        if isinstance(other, (int, Fraction, float, complex)):
            other = Polynomial.constant(other, self.n_vars, self.kind)
        self._check_compatible(other)
        terms = dict(self.terms)
        for exps, c in other.terms.items():
            s = terms.get(exps, 0) + c
            if s == 0:
                terms.pop(exps, None)
            else:
                terms[exps] = s
        return Polynomial(self.n_vars, terms, self.kind)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(self.n_vars, {e: -c for e, c in self.terms.items()}, self.kind)

    def __sub__(self, other):
        if isinstance(other, (int, Fraction, float, complex)):
            other = Polynomial.constant(other, self.n_vars, self.kind)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, float, complex)):
            c = _coerce(other, self.kind)
            if c == 0:
                return self.zero_like()
            return Polynomial(self.n_vars, {e: v * c for e, v in self.terms.items()}, self.kind)
        self._check_compatible(other)
        out: dict[Exponents, Scalar] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = out.get(e, 0) + c1 * c2
                if s == 0:
                    out.pop(e, None)
                else:
                    out[e] = s
        return Polynomial(self.n_vars, out, self.kind)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        result = self.one_like()
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base if k > 1 else base
            k >>= 1
        return result

    def mul_truncated(self, other: "Polynomial", max_degree: int) -> "Polynomial":
        """Product with every term of total degree > max_degree discarded."""
        self._check_compatible(other)
        out: dict[Exponents, Scalar] = {}
        for e1, c1 in self.terms.items():
            d1 = sum(e1)
            if d1 > max_degree:
                continue
            room = max_degree - d1
            for e2, c2 in other.terms.items():
                if sum(e2) > room:
                    continue
                e = tuple(a + b for a, b in zip(e1, e2))
                s = out.get(e, 0) + c1 * c2
                if s == 0:
                    out.pop(e, None)
                else:
                    out[e] = s
        return Polynomial(self.n_vars, out, self.kind)

    def truncated(self, max_degree: int) -> "Polynomial":
        """Discard all terms of total degree > max_degree."""
        return Polynomial(
            self.n_vars,
            {e: c for e, c in self.terms.items() if sum(e) <= max_degree},
            self.kind,
        )

    # ---------------------------------------------------------------- calculus
    def partial(self, i: int) -> "Polynomial":
        """Formal partial derivative with respect to x_{i+1} (0-based i)."""
        if not 0 <= i < self.n_vars:
            raise ValueError(f"variable index {i} out of range for n_vars={self.n_vars}")
        out: dict[Exponents, Scalar] = {}
        for exps, c in self.terms.items():
            e = exps[i]
            if e == 0:
                continue
            lowered = exps[:i] + (e - 1,) + exps[i + 1:]
            out[lowered] = out.get(lowered, 0) + c * e
        return Polynomial(self.n_vars, out, self.kind)

    def gradient(self) -> list["Polynomial"]:
        return [self.partial(i) for i in range(self.n_vars)]

    # ---------------------------------------------------------------- evaluation
    def __call__(self, point: Sequence[Scalar]):
        return self.evaluate(point)

    def evaluate(self, point: Sequence[Scalar]):
        """Value at `point`.

        A rational polynomial evaluated at a float/complex point is converted
        first; exact points with exact polynomials stay exact.
        """
        if len(point) != self.n_vars:
            raise ValueError(f"point length {len(point)} != n_vars {self.n_vars}")
        exact_point = all(isinstance(v, (int, Fraction)) for v in point)
        if self.kind == RATIONAL and not exact_point:
            return self.as_complex().evaluate([complex(v) for v in point])
        if self.kind == RATIONAL:
            point = [Fraction(v) for v in point]
            zero = Fraction(0)
        else:
            point = [complex(v) for v in point]
            zero = 0j
        # per-variable power tables
        max_exp = [0] * self.n_vars
        for exps in self.terms:
            for i, e in enumerate(exps):
                if e > max_exp[i]:
                    max_exp[i] = e
        powers = []
        for i in range(self.n_vars):
            row = [point[i] ** 0]
            for _ in range(max_exp[i]):
                row.append(row[-1] * point[i])
            powers.append(row)
        total = zero
        for exps, c in self.terms.items():
            v = c
            for i, e in enumerate(exps):
                if e:
                    v = v * powers[i][e]
            total += v
        return total

    def substitute(self, replacements: Sequence["Polynomial"]) -> "Polynomial":
        """Composition p(q_1, ..., q_n); replacements share n_vars and kind."""
        if len(replacements) != self.n_vars:
            raise ValueError("need one replacement polynomial per variable")
        r0 = replacements[0]
        for r in replacements:
            r0._check_compatible(r)
        out = Polynomial.zero(r0.n_vars, r0.kind)
        # memoized powers of each replacement
        pow_cache: dict[tuple[int, int], Polynomial] = {}

        def rpow(i: int, e: int) -> Polynomial:
            if (i, e) not in pow_cache:
                pow_cache[(i, e)] = replacements[i] ** e
            return pow_cache[(i, e)]

        for exps, c in self.terms.items():
            term = Polynomial.constant(_coerce(c, r0.kind), r0.n_vars, r0.kind)
            for i, e in enumerate(exps):
                if e:
                    term = term * rpow(i, e)
            out = out + term
        return out

    def translate_truncated(self, point: Sequence[Scalar], max_degree: int) -> "Polynomial":
        """Taylor jet at `point`: p(point + x) truncated past total degree max_degree."""
        if len(point) != self.n_vars:
            raise ValueError(f"point length {len(point)} != n_vars {self.n_vars}")
        kind = self.kind
        if kind == RATIONAL and not all(isinstance(v, (int, Fraction)) for v in point):
            return self.as_complex().translate_truncated(point, max_degree)
        poly = self
        vals = [Fraction(v) if kind == RATIONAL else complex(v) for v in point]
        # truncated binomial powers (v_i + x_i)^e, memoized per variable/exponent
        cache: dict[tuple[int, int], Polynomial] = {}

        def shifted_power(i: int, e: int) -> Polynomial:
            key = (i, e)
            if key not in cache:
                base = Polynomial(
                    poly.n_vars,
                    {(0,) * poly.n_vars: vals[i],
                     tuple(1 if j == i else 0 for j in range(poly.n_vars)): 1},
                    kind,
                )
                if e == 0:
                    cache[key] = base.one_like()
                elif e == 1:
                    cache[key] = base
                else:
                    cache[key] = shifted_power(i, e - 1).mul_truncated(base, max_degree)
            return cache[key]

        out = Polynomial.zero(poly.n_vars, kind)
        for exps, c in poly.terms.items():
            term = Polynomial.constant(c, poly.n_vars, kind)
            for i, e in enumerate(exps):
                if e:
                    term = term.mul_truncated(shifted_power(i, e), max_degree)
            out = out + term
        return out

    # ---------------------------------------------------------------- dunder glue
    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return (self.n_vars, self.kind, self.terms) == (other.n_vars, other.kind, other.terms)

    def __hash__(self):
        return hash((self.n_vars, self.kind, frozenset(self.terms.items())))

    def __repr__(self):
        return f"Polynomial({self.to_text()!r}, n_vars={self.n_vars}, kind={self.kind!r})"

    # ---------------------------------------------------------------- text form
    def sorted_terms(self) -> list[tuple[Exponents, Scalar]]:
        """Terms in graded-lexicographic order (degree first, then exponents)."""
        return sorted(self.terms.items(),
                      key=lambda kv: (-sum(kv[0]), tuple(-e for e in kv[0])))

    def to_text(self) -> str:
        """Canonical text form: 'c * x1^a1*...*xn^an' terms joined by ' + '."""
        if not self.terms:
            return "0"
        parts = []
        for exps, c in self.sorted_terms():
            mono = "*".join(f"x{i + 1}^{e}" for i, e in enumerate(exps))
            parts.append(f"{format_coefficient(c, self.kind)} * {mono}")
        return " + ".join(parts)

    @staticmethod
    def from_text(text: str, n_vars: int, kind: str = RATIONAL) -> "Polynomial":
        """Inverse of to_text.  Accepts 'num/den' or plain integers for rationals."""
        text = text.strip()
        if text == "0":
            return Polynomial.zero(n_vars, kind)
        terms: dict[Exponents, Scalar] = {}
        for part in text.split(" + "):
            coeff_text, _, mono = part.partition(" * ")
            coeff = parse_coefficient(coeff_text, kind)
            exps = [0] * n_vars
            if mono:
                for factor in mono.split("*"):
                    name, _, power = factor.partition("^")
                    if not name.startswith("x"):
                        raise ValueError(f"bad monomial factor {factor!r}")
                    idx = int(name[1:]) - 1
                    if not 0 <= idx < n_vars:
                        raise ValueError(f"variable {name} out of range for n_vars={n_vars}")
                    exps[idx] += int(power) if power else 1
            key = tuple(exps)
            terms[key] = terms.get(key, 0) + coeff
        return Polynomial(n_vars, terms, kind)


def format_coefficient(c: Scalar, kind: str) -> str:
    """Text form of one coefficient: 'num/den' (rational) or '(re,im)' (complex)."""
    if kind == RATIONAL:
        f = Fraction(c)
        return f"{f.numerator}/{f.denominator}"
    z = complex(c)
    return f"({z.real!r},{z.imag!r})"


def parse_coefficient(text: str, kind: str) -> Scalar:
    text = text.strip()
    if kind == RATIONAL:
        return Fraction(text)
    if text.startswith("(") and text.endswith(")"):
        re_s, _, im_s = text[1:-1].partition(",")
        return complex(float(re_s), float(im_s))
    return complex(float(text))


# -------------------------------------------------------------------- matrices
@dataclass(frozen=True)
class PolyMatrix:
    """Row-major matrix of polynomials sharing n_vars and coefficient kind."""

    rows: int
    cols: int
    entries: tuple[Polynomial, ...]

    def __post_init__(self):
        if self.rows < 1 or self.cols < 1:
            raise ValueError("matrix dimensions must be positive")
        if len(self.entries) != self.rows * self.cols:
            raise ValueError("entry count does not match rows*cols")
        first = self.entries[0]
        for p in self.entries:
            if p.n_vars != first.n_vars or p.kind != first.kind:
                raise ValueError("matrix entries must share n_vars and kind")

    @staticmethod
    def from_rows(rows: Sequence[Sequence[Polynomial]]) -> "PolyMatrix":
        r = len(rows)
        c = len(rows[0])
        if any(len(row) != c for row in rows):
            raise ValueError("ragged rows")
        return PolyMatrix(r, c, tuple(p for row in rows for p in row))

    def entry(self, i: int, j: int) -> Polynomial:
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> list[Polynomial]:
        return [self.entry(i, j) for j in range(self.cols)]

    def with_row(self, i: int, new_row: Sequence[Polynomial]) -> "PolyMatrix":
        if len(new_row) != self.cols:
            raise ValueError("replacement row has wrong length")
        rows = [list(self.row(r)) for r in range(self.rows)]
        rows[i] = list(new_row)
        return PolyMatrix.from_rows(rows)

    def det(self, max_degree: int | None = None) -> Polynomial:
        """Symbolic determinant (cofactor expansion, minors memoized by column set).

        With `max_degree` set, every intermediate product is truncated past that
        total degree -- the determinant of the full matrix mod (x)^{max_degree+1}.
        """
        if self.rows != self.cols:
            raise ValueError("determinant of a non-square matrix")
        n = self.rows
        zero = self.entries[0].zero_like()
        one = self.entries[0].one_like()

        # minor(r, cols) = det of submatrix on rows r..n-1 and the given columns
        cache: dict[tuple[int, frozenset], Polynomial] = {}

        def minor(r: int, cols: frozenset) -> Polynomial:
            if r == n:
                return one
            key = (r, cols)
            if key in cache:
                return cache[key]
            total = zero
            sign = 1
            for j in sorted(cols):
                a = self.entry(r, j)
                if not a.is_zero():
                    sub = minor(r + 1, cols - {j})
                    if not sub.is_zero():
                        if max_degree is None:
                            prod = a * sub
                        else:
                            prod = a.mul_truncated(sub, max_degree)
                        total = total + (prod if sign > 0 else -prod)
                sign = -sign
            cache[key] = total
            return total

        return minor(0, frozenset(range(n)))


def det(m: PolyMatrix) -> Polynomial:
    """Exact symbolic determinant of a square polynomial matrix."""
    return m.det()
