"""Exact integer evaluators for the edge-count functions and the case dispatch.

All arithmetic is integer; no floating point anywhere.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from math import comb

from .constructions import ConstructionSpec, Kind, turan_parts
from .trees import TreeParams


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


def turan_edges(n: int, r: int) -> int:
    return comb(n, 2) - sum(comb(s, 2) for s in turan_parts(n, r))


def g1(k: int) -> int:
    if k < 1:
        raise ValueError("k >= 1 required")
    if k % 2 == 0:
        return k * k - 3 * k // 2
    return k * k - (3 * k - 1) // 2


def g2(k: int) -> int:
    if k < 1:
        raise ValueError("k >= 1 required")
    if k % 2 == 0:
        return k * k - 3 * k // 2
    return k * k - k


def g(n: int, p: int, a: int) -> int:
    """e(T_{n-a+1,p}) + e(K_{a-1,n-a+1}) + e(K_{a-1})."""
    if not (n >= a >= 1 and p >= 1):
        raise ValueError("need n >= a >= 1 and p >= 1")
    m = n - a + 1
    return turan_edges(m, p) + (a - 1) * m + comb(a - 1, 2)


def g_d(n: int, p: int, a: int, d: int) -> int:
    """Like :func:`g` with e(K_{a-1}) replaced by e(R(a-1, d))."""
    if not (n >= a >= 1 and p >= 1):
        raise ValueError("need n >= a >= 1 and p >= 1")
    if a - 1 > 0 and not 0 <= d < a - 1:
        raise ValueError(f"R({a - 1},{d}) is infeasible")
    m = n - a + 1
    return turan_edges(m, p) + (a - 1) * m + (a - 1) * max(d, 0) // 2


def chvatal_hanson(nu: int, delta: int) -> int:
    """Max edges with matching number <= nu and max degree <= delta."""
    if nu < 1 or delta < 1:
        raise ValueError("nu >= 1 and delta >= 1 required")
    return nu * delta + (delta // 2) * (nu // _ceil_div(delta, 2))


def component_bound_f(x: int, k: int) -> int:
    if x < 1 or k < 2:
        raise ValueError("x >= 1 and k >= 2 required")
    if x <= k - 1:
        return comb(x, 2)
    return (k - 1) * x // 2


def ex_path(n: int, k: int) -> int:
    """ex(n, P_k) for the path on k >= 2 vertices (Faudree-Schelp).

    With n = t(k-1) + r and 0 <= r < k-1 the value is t*C(k-1,2) + C(r,2).
    """
    if k < 2 or n < 0:
        raise ValueError("need k >= 2 and n >= 0")
    t, r = divmod(n, k - 1)
    return t * comb(k - 1, 2) + comb(r, 2)


class CaseTag(enum.Enum):
    K_EVEN = "K_EVEN"
    K_ODD_B0_EMPTY = "K_ODD_B0_EMPTY"
    K_ODD_B_SMALL = "K_ODD_B_SMALL"
    K_ODD_B_LARGE = "K_ODD_B_LARGE"
    K_ODD_B_BOUNDARY = "K_ODD_B_BOUNDARY"


@dataclass(frozen=True)
class TheoremCase:
    tag: CaseTag
    value: int
    extremal: tuple[ConstructionSpec, ...]

    def lines(self) -> list[str]:
        return [f"case={self.tag.value}", f"value={self.value}"] + [
            f"extremal={s}" for s in self.extremal
        ]


def boundary_threshold(a: int, k: int) -> int:
    """a-1-ceil((k-1)/(a-1)), the b-threshold in the theorem's statement."""
    if a < 2:
        raise ValueError("threshold needs a >= 2")
    return a - 1 - _ceil_div(k - 1, a - 1)


def threshold_tag(params: TreeParams) -> CaseTag:
    """Case read literally off the b-thresholds of the theorem statement.

    Differs from :func:`dispatch` whenever the floors in e(R(a-1,b-1))
    break the claimed equivalence; kept for comparison.
    """
    k = params.k
    if k % 2 == 0:
        return CaseTag.K_EVEN
    if not params.B0:
        return CaseTag.K_ODD_B0_EMPTY
    assert params.b is not None
    c = boundary_threshold(params.a, k)
    if params.b == 0 or params.b < c:
        return CaseTag.K_ODD_B_SMALL
    if params.b == c:
        return CaseTag.K_ODD_B_BOUNDARY
    return CaseTag.K_ODD_B_LARGE


def dispatch(params: TreeParams, n: int, p: int) -> TheoremCase:
    """Formula value and extremal constructions for ex(n, T^{p+1}).

    For odd k with B0 non-empty and b > 0, the two candidates
    g(n,p,a)+g1(k) (from H1) and g(n,p,a,b-1)+g2(k) (from H2 with
    R(a-1,b-1)) are compared exactly; the larger wins and a tie names
    both.
    """
    a, k = params.a, params.k
    if k <= 1:
        raise ValueError("k = delta(A) <= 1 lies outside this theorem (see Liu's delta(A)=1 result)")
    if p <= 2:
        raise ValueError("p >= 3 required")
    if n < a:
        raise ValueError("n >= a required")

    def spec(kind: Kind, **extra: int) -> ConstructionSpec:
        return ConstructionSpec(kind, n=n, p=p, a=a, k=k, **extra)

    base = g(n, p, a)
    if k % 2 == 0:
        return TheoremCase(CaseTag.K_EVEN, base + g1(k), (spec(Kind.H1), spec(Kind.H2)))
    if not params.B0:
        return TheoremCase(CaseTag.K_ODD_B0_EMPTY, base + g2(k), (spec(Kind.H2),))
    if a < 2:
        # A single A-vertex has no two A0-neighbours to share, so B0 is empty.
        raise AssertionError("B0 non-empty with a = 1 is impossible for a tree")
    b = params.b
    assert b is not None
    first = base + g1(k)
    if b == 0:
        return TheoremCase(CaseTag.K_ODD_B_SMALL, first, (spec(Kind.H1),))
    second = g_d(n, p, a, b - 1) + g2(k)
    h1 = spec(Kind.H1)
    h2rd = spec(Kind.H2_RD, d=b - 1)
    if first > second:
        return TheoremCase(CaseTag.K_ODD_B_SMALL, first, (h1,))
    if first < second:
        return TheoremCase(CaseTag.K_ODD_B_LARGE, second, (h2rd,))
    return TheoremCase(CaseTag.K_ODD_B_BOUNDARY, first, (h1, h2rd))


def evaluate(name: str, args: list[int]) -> int:
    """Evaluate a formula by name (used by the CLI)."""
    table = {
        "g1": (g1, 1),
        "g2": (g2, 1),
        "g": (g, 3),
        "g_d": (g_d, 4),
        "turan": (turan_edges, 2),
        "chvatal_hanson": (chvatal_hanson, 2),
        "f": (component_bound_f, 2),
        "ex_path": (ex_path, 2),
    }
    if name not in table:
        raise KeyError(f"unknown formula {name!r}; choose from {', '.join(sorted(table))}")
    fn, arity = table[name]
    if len(args) != arity:
        raise ValueError(f"{name} takes {arity} arguments, got {len(args)}")
    return fn(*args)
