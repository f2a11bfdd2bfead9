"""Number-theoretic tools: parameter normalization, the box-to-rectangle
map for mixed-sign weights, multipartition counting, Hirzebruch-Jung
continued fractions, and exact quasipolynomial fitting.

For weights of opposite sign the count of balanced partitions is
eventually quasipolynomial in the group order with period ``|a*b|``;
the fitter here works in exact rational arithmetic and reports the
smallest order from which the fitted polynomials extrapolate, rather
than assuming a threshold.
"""

from __future__ import annotations

import functools
import itertools
import json
import math
from dataclasses import dataclass
from fractions import Fraction

from .coloring import GroupParams, enumerate_balanced, is_balanced
from .errors import InsufficientSamplesError, PreconditionError
from .partitions import Partition


def normalize_group(g: GroupParams) -> GroupParams:
    """Divide common factors of each weight with the order out of both.

    The resulting parameters have both weights coprime to the order and
    describe the same Hilbert scheme, hence the same L-class for every
    multiplicity (tested by enumeration at desk scale).
    """
    a, b, n = g.a, g.b, g.n
    while True:
        d = math.gcd(a, n)
        if d > 1:
            a //= d
            n //= d
            continue
        d = math.gcd(b, n)
        if d > 1:
            b //= d
            n //= d
            continue
        break
    return GroupParams(a, b, n)


def rectangle_map(g: GroupParams, lam: Partition) -> Partition:
    """Replace every box by an ``a x (-b)`` rectangle (needs a > 0 > b).

    Row ``lam_j`` becomes ``-b`` consecutive rows of length ``a*lam_j``,
    so the image has ``-a*b`` times as many boxes.
    """
    if not (g.a > 0 > g.b):
        raise PreconditionError(f"requires a > 0 > b, got ({g.a}, {g.b})")
    return Partition(g.a * row for row in lam.rows for _ in range(-g.b))


def satisfies_star(mu: Partition, a: int, b: int) -> bool:
    """Membership test for the rectangle-map image: rows are multiples of ``a``
    and every maximal run of equal rows has length a multiple of ``-b``."""
    if not (a > 0 > b):
        raise PreconditionError(f"requires a > 0 > b, got ({a}, {b})")
    if any(row % a for row in mu.rows):
        return False
    for _, run in itertools.groupby(mu.rows):
        if sum(1 for _ in run) % (-b):
            return False
    return True


def check_rectangle_bijection(g: GroupParams, r: int) -> dict:
    """Exhaustively confirm the rectangle map is a bijection onto the
    star-shaped balanced partitions for the sign-flipped coloring.

    Requires mixed signs and both weights coprime to the order.  The
    report carries both cardinalities and any mismatch witnesses.
    """
    if not (g.a > 0 > g.b):
        raise PreconditionError(f"requires a > 0 > b, got ({g.a}, {g.b})")
    if math.gcd(g.a, g.n) != 1 or math.gcd(g.b, g.n) != 1:
        raise PreconditionError(f"requires weights coprime to n, got {g}")
    source = enumerate_balanced(g, r)
    mapped = [rectangle_map(g, lam) for lam in source]
    target_r = -g.a * g.b * r
    flipped = GroupParams(1, -1, g.n)
    target = [
        mu for mu in enumerate_balanced(flipped, target_r) if satisfies_star(mu, g.a, g.b)
    ]
    mapped_set, target_set = set(mapped), set(target)
    report = {
        "group": {"a": g.a, "b": g.b, "n": g.n},
        "r": r,
        "source_count": len(source),
        "target_count": len(target),
        "injective": len(mapped_set) == len(mapped),
        "missing_from_image": sorted(str(m) for m in target_set - mapped_set),
        "outside_target": sorted(str(m) for m in mapped_set - target_set),
    }
    report["bijective"] = (
        report["injective"]
        and not report["missing_from_image"]
        and not report["outside_target"]
    )
    return report


@functools.lru_cache(maxsize=None)
def _partition_numbers(top: int) -> tuple[int, ...]:
    """p(0..top) by the bounded-part recurrence."""
    counts = [1] + [0] * top
    for part in range(1, top + 1):
        for m in range(part, top + 1):
            counts[m] += counts[m - part]
    return tuple(counts)


def multipartition_count(n: int, r: int) -> int:
    """Number of n-tuples of partitions with total size r.

    Coefficient of ``t^r`` in the n-th power of the partition generating
    function, computed by power-series convolution.
    """
    if n < 1:
        raise PreconditionError(f"n must be >= 1, got {n}")
    if r < 0:
        raise PreconditionError(f"r must be nonnegative, got {r}")
    p = _partition_numbers(r)
    series = [1] + [0] * r
    for _ in range(n):
        series = [
            sum(series[k] * p[m - k] for k in range(m + 1)) for m in range(r + 1)
        ]
    return series[r]


def hj_expand(n: int, k: int) -> tuple[int, ...]:
    """Hirzebruch-Jung (minus-sign) continued fraction of ``n/k``.

    The unique expansion ``n/k = a1 - 1/(a2 - ...)`` with every term at
    least 2; its length is the middle Betti number of the minimal
    resolution of the corresponding cyclic quotient surface singularity.
    """
    if not (0 < k < n):
        raise PreconditionError(f"requires 0 < k < n, got n={n}, k={k}")
    if math.gcd(n, k) != 1:
        raise PreconditionError(f"requires gcd(n, k) = 1, got n={n}, k={k}")
    terms = []
    while k:
        q = -(-n // k)  # ceil
        terms.append(q)
        n, k = k, q * k - n
    return tuple(terms)


@dataclass(frozen=True)
class Quasipolynomial:
    """Period-k family of polynomials with exact rational coefficients.

    ``polys[l]`` (coefficients in ascending degree) applies when
    ``n = l mod period``; classes never sampled store None.
    ``class_validated[l]`` records whether the fit reproduced every
    training point and the held-out one for that class.
    """

    period: int
    polys: tuple[tuple[Fraction, ...] | None, ...]
    valid_from: int
    class_validated: tuple[bool | None, ...]

    def evaluate(self, n: int) -> Fraction:
        poly = self.polys[n % self.period]
        if poly is None:
            raise PreconditionError(f"no polynomial fitted for residue {n % self.period}")
        return sum((c * n**k for k, c in enumerate(poly)), Fraction(0))

    def degree(self) -> int:
        """Largest degree among the fitted classes (-1 if all empty)."""
        return max(
            (len(p) - 1 for p in self.polys if p is not None and p), default=-1
        )

    def all_validated(self) -> bool:
        return all(flag for flag in self.class_validated if flag is not None)

    def to_json(self) -> dict:
        return {
            "period": self.period,
            "polys": [
                None if p is None else [str(c) for c in p] for p in self.polys
            ],
            "valid_from": self.valid_from,
            "class_validated": list(self.class_validated),
        }

    @classmethod
    def from_json(cls, data) -> "Quasipolynomial":
        if isinstance(data, str):
            data = json.loads(data)
        return cls(
            period=data["period"],
            polys=tuple(
                None if p is None else tuple(Fraction(c) for c in p)
                for p in data["polys"]
            ),
            valid_from=data["valid_from"],
            class_validated=tuple(data["class_validated"]),
        )


def _lagrange(points: list[tuple[int, int]]) -> tuple[Fraction, ...]:
    """Coefficients (ascending) of the interpolating polynomial, exact."""
    k = len(points)
    coeffs = [Fraction(0)] * k
    for idx, (xi, yi) in enumerate(points):
        basis = [Fraction(1)]
        denom = Fraction(1)
        for jdx, (xj, _) in enumerate(points):
            if jdx == idx:
                continue
            denom *= xi - xj
            nxt = [Fraction(0)] * (len(basis) + 1)
            for d, c in enumerate(basis):
                nxt[d] -= c * xj
                nxt[d + 1] += c
            basis = nxt
        scale = Fraction(yi) / denom
        for d, c in enumerate(basis):
            coeffs[d] += scale * c
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


def fit_quasipolynomial(samples, period: int, degree_bound: int) -> Quasipolynomial:
    """Interpolate one polynomial per residue class and validate it.

    Within each class the largest-n sample is held out.  A polynomial of
    degree at most ``degree_bound`` is interpolated through the last
    ``degree_bound + 1`` training points, and the class validates only
    if it reproduces every training point and the held-out one.
    Validation failures are reported in the result, never silently accepted.
    """
    if period < 1:
        raise PreconditionError(f"period must be >= 1, got {period}")
    if degree_bound < 0:
        raise PreconditionError(f"degree bound must be nonnegative, got {degree_bound}")
    by_class: dict[int, list[tuple[int, int]]] = {}
    for n, value in samples:
        by_class.setdefault(n % period, []).append((n, value))
    if not by_class:
        raise InsufficientSamplesError("no samples given")
    polys: list[tuple[Fraction, ...] | None] = [None] * period
    flags: list[bool | None] = [None] * period
    for residue, pts in sorted(by_class.items()):
        pts = sorted(pts)
        if len(pts) < degree_bound + 2:
            raise InsufficientSamplesError(
                f"residue class {residue} has {len(pts)} samples; "
                f"needs at least degree_bound + 2 = {degree_bound + 2}"
            )
        train, held = pts[:-1], pts[-1]
        poly = _lagrange(train[-(degree_bound + 1):])
        polys[residue] = poly
        evaluate = lambda n: sum((c * n**k for k, c in enumerate(poly)), Fraction(0))
        flags[residue] = all(evaluate(n) == v for n, v in train) and evaluate(
            held[0]
        ) == held[1]
    valid_from = min(n for pts in by_class.values() for n, _ in pts)
    return Quasipolynomial(period, tuple(polys), valid_from, tuple(flags))


def verify_quasipolynomial(
    g: GroupParams,
    r: int,
    n_from: int,
    n_to: int,
    holdout: int = 2,
    use_reduction: bool = False,
) -> dict:
    """Desk check of quasipolynomiality for mixed-sign weights.

    Counts balanced partitions over the orders in range that are coprime
    to both weights, fits a quasipolynomial of period ``|a*b|`` and
    degree at most ``r``, and demands successful extrapolation to
    ``holdout`` unseen orders per residue class.  The smallest order
    from which the fit extrapolates is discovered by retrying on
    suffixes and reported as ``valid_from``.  With ``use_reduction`` the
    skipped non-coprime orders are counted through their normalized
    parameters and reported alongside.
    """
    if g.a * g.b >= 0:
        raise PreconditionError(f"requires weights of opposite sign, got ({g.a}, {g.b})")
    period = abs(g.a * g.b)
    coprime = [
        n
        for n in range(n_from, n_to + 1)
        if math.gcd(n, g.a) == 1 and math.gcd(n, g.b) == 1
    ]
    counts = {n: len(enumerate_balanced(g.with_n(n), r)) for n in coprime}
    reduced = {}
    if use_reduction:
        for n in range(n_from, n_to + 1):
            if n in counts:
                continue
            gn = normalize_group(g.with_n(n))
            reduced[n] = len(enumerate_balanced(gn, r))
    by_class: dict[int, list[int]] = {}
    for n in coprime:
        by_class.setdefault(n % period, []).append(n)
    extrap_ns = {n for ns in by_class.values() for n in sorted(ns)[-holdout:]}
    fit_ns = [n for n in coprime if n not in extrap_ns]
    result: dict = {
        "group": {"a": g.a, "b": g.b},
        "r": r,
        "period": period,
        "degree_bound": r,
        "counts": {n: counts[n] for n in coprime},
        "skipped_not_coprime": [n for n in range(n_from, n_to + 1) if n not in counts],
        "reduced_counts": reduced,
        "holdout": sorted(extrap_ns),
    }
    for start in sorted(set(fit_ns)):
        sub = [(n, counts[n]) for n in fit_ns if n >= start]
        present = {n % period for n, _ in sub}
        if present != set(by_class):
            break  # a residue class ran out of training data
        try:
            qp = fit_quasipolynomial(sub, period, r)
        except InsufficientSamplesError:
            break
        if not qp.all_validated():
            continue
        extrapolation = [
            {"n": n, "expected": counts[n], "predicted": str(qp.evaluate(n))}
            for n in sorted(extrap_ns)
        ]
        if all(qp.evaluate(n) == counts[n] for n in extrap_ns):
            result.update(
                {
                    "ok": True,
                    "valid_from": start,
                    "observed_degree": qp.degree(),
                    "quasipolynomial": qp.to_json(),
                    "extrapolation": extrapolation,
                }
            )
            return result
    result.update({"ok": False, "valid_from": None})
    return result
