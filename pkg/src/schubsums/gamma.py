"""Structure-constant sum polynomials.

gamma_polynomial assembles the degree-k sum as a finite sum over
equivalence classes of length-k elements of the rank-2k group: the inner
sum of ordinary constants for one representative of each class, times the
class-counting polynomial.  gamma_bruteforce evaluates the defining sum
directly inside the rank-n group and is the oracle the assembly is checked
against; the polynomial is only claimed for n at or above the per-family
threshold, and may legitimately disagree below it.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .counting import n_w_polynomial
from .polyring import UniPolyQ
from .rootsys import MIN_RANK, build_diagram
from .schubert import inner_sum
from .support import automorphism_count, canonical_class_rep, dynkin_support
from .weyl import WeylElement, length_sphere, sort_key

_THRESHOLD_SHIFT = {"A": -1, "B": 0, "C": 0, "D": 1}


@dataclass(frozen=True)
class GammaClass:
    key: tuple
    rep: WeylElement
    length: int
    profile: str
    inner_sum: int
    n_polynomial: UniPolyQ
    automorphism_count: int

    def to_json(self) -> dict:
        return {
            "key": {"family": self.key[0], "word": list(self.key[1])},
            "length": self.length,
            "support": self.profile,
            "inner_sum": self.inner_sum,
            "n_polynomial": self.n_polynomial.to_json(),
            "automorphisms": self.automorphism_count,
        }


@dataclass(frozen=True)
class GammaResult:
    family: str
    k: int
    polynomial: UniPolyQ
    classes: tuple[GammaClass, ...]

    @property
    def threshold(self) -> int:
        return self.polynomial.threshold

    def to_json(self) -> dict:
        return {
            "family": self.family,
            "k": self.k,
            "polynomial": self.polynomial.to_json(),
            "classes": [c.to_json() for c in self.classes],
        }


def length_class_reps(family: str, k: int) -> list[tuple[tuple, WeylElement]]:
    """One representative per equivalence class of length-k elements of the rank-2k group."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    rank = max(2 * k, MIN_RANK[family])
    diagram = build_diagram(family, rank)
    reps: dict[tuple, WeylElement] = {}
    for w in sorted(length_sphere(diagram, k), key=sort_key):
        rep, key = canonical_class_rep(w)
        reps.setdefault(key, rep)
    return sorted(reps.items())


def gamma_classes(family: str, k: int) -> tuple[GammaClass, ...]:
    out = []
    for key, rep in length_class_reps(family, k):
        out.append(
            GammaClass(
                key=key,
                rep=rep,
                length=rep.length,
                profile=dynkin_support(rep).profile(),
                inner_sum=inner_sum(rep),
                n_polynomial=n_w_polynomial(rep),
                automorphism_count=automorphism_count(rep),
            )
        )
    return tuple(out)


def gamma_polynomial(family: str, k: int) -> GammaResult:
    """The structure-constant sum as an explicit polynomial, with its class table."""
    classes = gamma_classes(family, k)
    threshold = k + _THRESHOLD_SHIFT[family]
    total = UniPolyQ([], threshold)
    for cls in classes:
        total = total + cls.n_polynomial.scale(cls.inner_sum)
    return GammaResult(family, k, total.with_threshold(threshold), classes)


def gamma_bruteforce(family: str, k: int, n: int) -> int:
    """Direct sum of ordinary constants over the rank-n group, for small n."""
    diagram = build_diagram(family, n)
    return sum(inner_sum(w) for w in length_sphere(diagram, k))


def lead_term(family: str, k: int) -> tuple[int, Fraction]:
    """Degree and lead coefficient of the assembled polynomial."""
    poly = gamma_polynomial(family, k).polynomial
    return poly.degree, poly.lead_coefficient


def expected_lead(k: int) -> tuple[int, Fraction]:
    """The proven lead term: degree k with coefficient 2^k / k!."""
    return k, Fraction(2**k, factorial(k))
