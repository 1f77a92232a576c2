"""The cyclic sieving check: independent counts of rotation-fixed forests.

For each divisor d of n the forests fixed by the rotation of order d are
counted four ways:

* brute: filter the full enumeration of F(n, k),
* poly: evaluate the count q-polynomial at a primitive d-th root of unity,
* closed: a product formula with a case split on how d meets k,
* bijection (d >= 2 only): actually build every fixed forest from the small
  side through the structural maps and count distinct images.

Sieving holds when every route lands on the same integer for every d. The
routes are deliberately kept separate; nothing here shares intermediate
results between them.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from . import enumeration
from .qpoly import eval_at_root, forest_count, forest_count_poly


def _check_args(n: int, k: int, d: int) -> None:
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise ValueError(f"n must be a positive integer, got {n!r}")
    if not isinstance(k, int) or isinstance(k, bool) or not 1 <= k <= n:
        raise ValueError(f"k must satisfy 1 <= k <= n, got k={k!r}, n={n}")
    if not isinstance(d, int) or isinstance(d, bool) or d < 1 or n % d:
        raise ValueError(f"d = {d!r} must be a positive divisor of n = {n}")


def closed_form_eval(n: int, k: int, d: int) -> int:
    """Product-formula count of the forests in F(n, k) fixed by the rotation
    of order d.

    d = 1 counts everything. When d divides k the fixed forests are glued
    d-fold copies, counted by (n' - k' + 1) * |F(n', k')| over the good
    vertices, with n' = n/d and k' = k/d. When d = 2 and k is odd they are
    diameter foldings, counted by the marked forests on n/2 vertices. No
    other case admits a fixed forest.
    """
    _check_args(n, k, d)
    if d == 1:
        return forest_count(n, k)
    if k % d == 0:
        np_, kp = n // d, k // d
        return (np_ - kp + 1) * forest_count(np_, kp)
    if d == 2 and k % 2 == 1:
        np_, kp = n // 2, (k + 1) // 2
        return comb(np_, kp - 1) * comb(3 * np_ - 2 * kp, np_ - kp)
    return 0


def poly_eval(n: int, k: int, d: int) -> int:
    """The count q-polynomial of F(n, k) evaluated at a primitive d-th root
    of unity, computed exactly in the cyclotomic quotient ring."""
    _check_args(n, k, d)
    value = eval_at_root(forest_count_poly(n, k), d)
    return value.as_integer()


def fixed_count_brute(n: int, k: int, d: int) -> int:
    _check_args(n, k, d)
    return enumeration.count_invariant(n, k, d)


def fixed_count_bijection(n: int, k: int, d: int) -> int:
    """Count fixed forests by building them all from the small side and
    checking the images are distinct. Zero when neither structural map
    applies (which is the claim that no fixed forest exists)."""
    _check_args(n, k, d)
    if d < 2:
        raise ValueError("the structural maps need d >= 2")
    return sum(1 for _ in enumeration.enumerate_invariant(n, k, d, method="bijection"))


@dataclass(frozen=True)
class CspRow:
    """One (n, k, d) cell: every count route and whether they agree."""

    n: int
    k: int
    d: int
    brute: int
    poly: int
    closed: int
    bijection: int | None
    agree: bool

    def to_json_dict(self) -> dict:
        out = {
            "n": self.n,
            "k": self.k,
            "d": self.d,
            "brute": self.brute,
            "poly": self.poly,
            "closed": self.closed,
        }
        if self.bijection is not None:
            out["bijection"] = self.bijection
        out["agree"] = self.agree
        return out


@dataclass(frozen=True)
class CspReport:
    n: int
    rows: tuple[CspRow, ...]

    @property
    def all_agree(self) -> bool:
        return all(r.agree for r in self.rows)

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "rows": [r.to_json_dict() for r in self.rows],
            "all_agree": self.all_agree,
        }


def verify_csp(n: int, k: int | None = None, *, bijection: bool = True) -> CspReport:
    """Run every count route over all divisors of n, for one k or all of
    them, and report cell by cell.

    The brute counts for all divisors come from a single enumeration pass
    per k. Bijection counts can be switched off for speed; they are on by
    default because they are the only route that exhibits the fixed forests
    rather than just counting them.
    """
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise ValueError(f"n must be a positive integer, got {n!r}")
    if k is not None and (not isinstance(k, int) or isinstance(k, bool) or not 1 <= k <= n):
        raise ValueError(f"k must satisfy 1 <= k <= n, got {k!r}")
    ks = (k,) if k is not None else tuple(range(1, n + 1))
    rows = []
    for kk in ks:
        counts = enumeration.invariant_counts(n, kk)
        for d in enumeration.divisors(n):
            brute = counts[d]
            poly = poly_eval(n, kk, d)
            closed = closed_form_eval(n, kk, d)
            bij = fixed_count_bijection(n, kk, d) if bijection and d >= 2 else None
            ok = brute == poly == closed and (bij is None or bij == brute)
            rows.append(CspRow(n, kk, d, brute, poly, closed, bij, ok))
    return CspReport(n, tuple(rows))


def _verify_cell(cell: tuple[int, int, bool]) -> CspReport:
    """Module-level wrapper so process pools can map over (n, k) cells."""
    n, k, bijection = cell
    return verify_csp(n, k, bijection=bijection)


def check_fixed_count_identity(np_: int, kp: int) -> bool:
    """The binomial identity behind the diameter count:
    C(n', k'-1) * C(3n'-2k', n'-k') == (3n'-2k') * |F(n', k')|.
    Exact integer arithmetic on both sides."""
    if not isinstance(np_, int) or isinstance(np_, bool) or np_ < 1:
        raise ValueError(f"n' must be a positive integer, got {np_!r}")
    if not isinstance(kp, int) or isinstance(kp, bool) or not 1 <= kp <= np_:
        raise ValueError(f"k' must satisfy 1 <= k' <= n', got {kp!r}")
    lhs = comb(np_, kp - 1) * comb(3 * np_ - 2 * kp, np_ - kp)
    rhs = (3 * np_ - 2 * kp) * forest_count(np_, kp)
    return lhs == rhs
