"""Exact polynomial arithmetic.

MultiPoly: sparse multivariate polynomials over the integers, exponent-tuple
keyed.  UniPolyQ: univariate polynomials with exact rational coefficients and
a validity threshold.  No floating point anywhere.
"""

from __future__ import annotations

from fractions import Fraction

from .rootsys import DynkinDiagram


class ExactDivisionError(ArithmeticError):
    """Raised when a polynomial division that must be exact is not."""


class MultiPoly:
    """Sparse integer polynomial in a fixed number of variables.

    terms maps exponent tuples to nonzero integer coefficients; the zero
    polynomial is the empty map.  Instances are treated as immutable values.
    """

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms=None):
        self.nvars = nvars
        self.terms = {e: c for e, c in (terms or {}).items() if c != 0}

    @classmethod
    def zero(cls, nvars: int) -> "MultiPoly":
        return cls(nvars)

    @classmethod
    def constant(cls, nvars: int, c: int) -> "MultiPoly":
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def one(cls, nvars: int) -> "MultiPoly":
        return cls.constant(nvars, 1)

    @classmethod
    def variable(cls, nvars: int, i: int) -> "MultiPoly":
        """The variable with 1-based index i."""
        e = tuple(1 if j == i - 1 else 0 for j in range(nvars))
        return cls(nvars, {e: 1})

    @classmethod
    def from_linear(cls, coeffs) -> "MultiPoly":
        """Linear form sum(coeffs[j] * alpha_{j+1})."""
        n = len(coeffs)
        terms = {}
        for j, c in enumerate(coeffs):
            if c:
                terms[tuple(1 if t == j else 0 for t in range(n))] = c
        return cls(n, terms)

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, int):
            other = MultiPoly.constant(self.nvars, other)
        return isinstance(other, MultiPoly) and self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    def __add__(self, other):
        if isinstance(other, int):
            other = MultiPoly.constant(self.nvars, other)
        terms = dict(self.terms)
        for e, c in other.terms.items():
            c2 = terms.get(e, 0) + c
            if c2:
                terms[e] = c2
            else:
                terms.pop(e, None)
        return MultiPoly(self.nvars, terms)

    def __neg__(self):
        return MultiPoly(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other if isinstance(other, MultiPoly) else -MultiPoly.constant(self.nvars, other))

    def __mul__(self, other):
        if isinstance(other, int):
            if other == 0:
                return MultiPoly.zero(self.nvars)
            return MultiPoly(self.nvars, {e: c * other for e, c in self.terms.items()})
        out: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                c = out.get(e, 0) + c1 * c2
                if c:
                    out[e] = c
                else:
                    out.pop(e, None)
        return MultiPoly(self.nvars, out)

    __rmul__ = __mul__

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(e) for e in self.terms), default=-1)

    def is_homogeneous(self) -> bool:
        degrees = {sum(e) for e in self.terms}
        return len(degrees) <= 1

    def constant_coefficient(self) -> int:
        return self.terms.get((0,) * self.nvars, 0)

    def is_constant(self) -> bool:
        return self.degree() <= 0

    def variables_used(self) -> tuple[int, ...]:
        """1-based indices of variables appearing in some term."""
        used = set()
        for e in self.terms:
            for j, v in enumerate(e):
                if v:
                    used.add(j + 1)
        return tuple(sorted(used))

    def rename_variables(self, nvars: int, mapping) -> "MultiPoly":
        """Move variable i (1-based) to mapping[i] in a ring with nvars variables."""
        terms = {}
        for e, c in self.terms.items():
            e2 = [0] * nvars
            for j, v in enumerate(e):
                if v:
                    e2[mapping[j + 1] - 1] = v
            terms[tuple(e2)] = c
        return MultiPoly(nvars, terms)

    def _ordered_terms(self):
        return sorted(
            self.terms.items(),
            key=lambda item: (-sum(item[0]), tuple(-x for x in item[0])),
        )

    def to_json_terms(self) -> list:
        return [{"exponents": list(e), "coeff": c} for e, c in self._ordered_terms()]

    @classmethod
    def from_json_terms(cls, nvars: int, items) -> "MultiPoly":
        return cls(nvars, {tuple(item["exponents"]): item["coeff"] for item in items})

    def pretty(self, var: str = "α") -> str:
        if not self.terms:
            return "0"
        parts = []
        for e, c in self._ordered_terms():
            factors = [
                f"{var}{j + 1}" + (f"^{v}" if v > 1 else "")
                for j, v in enumerate(e)
                if v
            ]
            body = "*".join(factors)
            if not factors:
                parts.append(f"{c}")
            elif c == 1:
                parts.append(body)
            elif c == -1:
                parts.append(f"-{body}")
            else:
                parts.append(f"{c}*{body}")
        out = parts[0]
        for p in parts[1:]:
            out += f" - {p[1:]}" if p.startswith("-") else f" + {p}"
        return out

    def __repr__(self):
        return f"MultiPoly({self.pretty()})"


def apply_reflection(diagram: DynkinDiagram, i: int, p: MultiPoly) -> MultiPoly:
    """Substitute alpha_j -> s_i(alpha_j) in p, expanding linearly."""
    if p.nvars != diagram.rank:
        raise ValueError("polynomial rank does not match diagram")
    n = p.nvars
    images = {}
    for j in range(1, n + 1):
        c = diagram.entry(i, j)
        if j == i:
            images[j] = MultiPoly(n, {tuple(1 if t == i - 1 else 0 for t in range(n)): -1})
        elif c:
            images[j] = MultiPoly.variable(n, j) - c * MultiPoly.variable(n, i)
    out = MultiPoly.zero(n)
    for e, coeff in p.terms.items():
        factor = MultiPoly.constant(n, coeff)
        residual = [0] * n
        for j, v in enumerate(e, start=1):
            if not v:
                continue
            if j in images:
                for _ in range(v):
                    factor = factor * images[j]
            else:
                residual[j - 1] = v
        if any(residual):
            factor = factor * MultiPoly(n, {tuple(residual): 1})
        out = out + factor
    return out


def exact_divide(p: MultiPoly, q: MultiPoly) -> MultiPoly:
    """Return r with p = q * r, or raise ExactDivisionError.

    Lexicographic leading-term division; succeeds exactly when q divides p
    over the integers.
    """
    if not q:
        raise ExactDivisionError("division by the zero polynomial")
    if p.nvars != q.nvars:
        raise ValueError("variable count mismatch")
    lead_q = max(q.terms)
    cq = q.terms[lead_q]
    remainder = MultiPoly(p.nvars, dict(p.terms))
    quotient: dict = {}
    while remainder:
        lead_p = max(remainder.terms)
        cp = remainder.terms[lead_p]
        e = tuple(a - b for a, b in zip(lead_p, lead_q))
        if any(x < 0 for x in e) or cp % cq != 0:
            raise ExactDivisionError(f"{q.pretty()} does not divide {p.pretty()}")
        c = cp // cq
        quotient[e] = c
        remainder = remainder - MultiPoly(p.nvars, {e: c}) * q
    return MultiPoly(p.nvars, quotient)


class UniPolyQ:
    """Univariate polynomial with exact rational coefficients, by ascending degree.

    threshold is the smallest integer argument at which the polynomial is
    asserted valid; evaluations below it are not meaningful.
    """

    __slots__ = ("coeffs", "threshold")

    def __init__(self, coeffs, threshold: int = 0):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)
        self.threshold = threshold

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lead_coefficient(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def __call__(self, n) -> Fraction:
        value = Fraction(0)
        for c in reversed(self.coeffs):
            value = value * n + c
        return value

    def evaluate_count(self, n: int) -> int:
        """Evaluate at n >= threshold where the value must be a nonnegative integer count."""
        value = self(n)
        if value.denominator != 1 or value < 0:
            raise ValueError(f"expected a nonnegative integer at n={n}, got {value}")
        return int(value)

    def __eq__(self, other):
        return (
            isinstance(other, UniPolyQ)
            and self.coeffs == other.coeffs
            and self.threshold == other.threshold
        )

    def __hash__(self):
        return hash((self.coeffs, self.threshold))

    def __add__(self, other: "UniPolyQ") -> "UniPolyQ":
        size = max(len(self.coeffs), len(other.coeffs))
        cs = [Fraction(0)] * size
        for i, c in enumerate(self.coeffs):
            cs[i] += c
        for i, c in enumerate(other.coeffs):
            cs[i] += c
        return UniPolyQ(cs, max(self.threshold, other.threshold))

    def scale(self, k) -> "UniPolyQ":
        return UniPolyQ([c * k for c in self.coeffs], self.threshold)

    def with_threshold(self, threshold: int) -> "UniPolyQ":
        return UniPolyQ(self.coeffs, threshold)

    def to_json(self) -> dict:
        return {
            "coeffs": [{"num": c.numerator, "den": c.denominator} for c in self.coeffs],
            "threshold": self.threshold,
        }

    @classmethod
    def from_json(cls, doc) -> "UniPolyQ":
        return cls(
            [Fraction(c["num"], c["den"]) for c in doc["coeffs"]],
            doc["threshold"],
        )

    def pretty(self, var: str = "n") -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for d in range(self.degree, -1, -1):
            c = self.coeffs[d]
            if c == 0:
                continue
            if d == 0:
                body = f"{abs(c)}"
            else:
                mag = "" if abs(c) == 1 else f"{abs(c)}*"
                body = f"{mag}{var}" + (f"^{d}" if d > 1 else "")
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)

    def __repr__(self):
        return f"UniPolyQ({self.pretty()}, n >= {self.threshold})"


def interpolate(samples, threshold=None) -> UniPolyQ:
    """Exact Lagrange interpolation through (integer, rational) samples."""
    xs = [x for x, _ in samples]
    if len(set(xs)) != len(xs):
        raise ValueError("duplicate sample points")
    result = [Fraction(0)] * max(len(xs), 1)
    for xi, yi in samples:
        # basis polynomial prod_{xj != xi} (n - xj) / (xi - xj)
        basis = [Fraction(1)]
        denom = Fraction(1)
        for xj in xs:
            if xj == xi:
                continue
            denom *= xi - xj
            shifted = [Fraction(0)] + basis          # n * basis
            for t, c in enumerate(basis):
                shifted[t] -= xj * c
            basis = shifted
        scale = Fraction(yi) / denom
        for t, c in enumerate(basis):
            result[t] += scale * c
    if threshold is None:
        threshold = min(xs) if xs else 0
    return UniPolyQ(result, threshold)
