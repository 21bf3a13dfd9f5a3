"""Witness search for sigma_{n,lam}.

A witness is a covector a > 0 with a.Lam <= 1 (Lam = (lam, ..., lam)) plus an
inclusion mask on the lattice points of the hyperplane a.x = 1.  The mask
stands for an infinitesimal perturbation a - eps*d: included points are those
with d.p > 0.  For sigma (strict) a witness on the hyperplane through Lam must
include Lam; for the closed variant d.Lam >= 0 is enough, so the empty mask
always works.

In the plane the optimum is attained at a vertex of the line arrangement
{a.p = 1}, and every lattice point p on a line with value <= W satisfies
(p1+1)(p2+1) - 1 <= W.  Enumerating pairs from that box is therefore
exhaustive, which is what lets ``sigma_exact_2d`` claim exactness.
"""

from __future__ import annotations

import itertools
import logging
import random
from fractions import Fraction
from math import comb, gcd

from sympy import Matrix, ones

from lct_certify.arith import format_rational, from_sympy, parse_rational, to_sympy
from lct_certify.lattice.count import boundary_points, count_simplex, dot, integer_form
from lct_certify.lattice.models import Point, SigmaResult, SimplexSpec
from lct_certify.lattice.sigma import sigma_lower_bound
from lct_certify.lp import GE, LE, LinearProgram, is_feasible
from lct_certify.models import Exactness, SigmaMethod

logger = logging.getLogger(__name__)

DEFAULT_BUDGET = 20000
MAX_PAIRS = 2_000_000


def _lam_point(n: int, lam: Fraction) -> tuple[Fraction, ...]:
    return (lam,) * n


def mask_realizable(
    a,
    included: list[Point],
    excluded: list[Point],
    lam: Fraction,
    strict: bool,
) -> bool:
    """Is there a direction d with d.p > 0 on ``included`` and d.p <= 0 on ``excluded``?

    Strictness is normalised by scaling: d.p >= 1 stands for d.p > 0.  When
    Lam lies on the hyperplane the perturbation must keep it inside the
    admissible region.
    """
    n = len(a)
    lam_pt = _lam_point(n, Fraction(lam))
    on_lam = dot(a, lam_pt) == 1
    if not included and not (strict and on_lam):
        return True
    lp = LinearProgram([Fraction(0)] * n, free=set(range(n)))
    for p in included:
        lp.add(list(p), GE, 1)
    for p in excluded:
        lp.add(list(p), LE, 0)
    if on_lam:
        lp.add(list(lam_pt), GE, 1 if strict else 0)
    return is_feasible(lp)


def verify_witness(result: SigmaResult) -> bool:
    """Recount the witness and check its mask; logs the first failure."""
    a, lam = result.a, result.lam
    if any(x <= 0 for x in a):
        logger.warning("witness %s is not positive", a)
        return False
    lam_dot = dot(a, _lam_point(result.n, lam))
    if lam_dot > 1:
        logger.warning("witness %s does not contain the diagonal point", a)
        return False
    on_plane = boundary_points(a)
    if sorted(map(tuple, result.included + result.excluded)) != on_plane:
        logger.warning("mask of %s does not partition the hyperplane points", a)
        return False
    recount = count_simplex(SimplexSpec(a, strict=True)) + len(result.included)
    if recount != result.value:
        logger.warning("witness %s recounts to %d, recorded %d", a, recount, result.value)
        return False
    if not mask_realizable(a, result.included, result.excluded, lam, result.strict):
        logger.warning("mask of %s is not realised by any perturbation", a)
        return False
    return True


def witness_to_record(result: SigmaResult) -> dict:
    return {
        "n": result.n,
        "lambda": format_rational(result.lam),
        "strict": result.strict,
        "value": result.value,
        "a": [format_rational(x) for x in result.a],
        "included": [list(p) for p in result.included],
        "excluded": [list(p) for p in result.excluded],
        "exactness": result.exactness.value,
        "lower_bound": result.lower_bound,
    }


def witness_from_record(record: dict) -> SigmaResult:
    return SigmaResult(
        n=int(record["n"]),
        lam=parse_rational(record["lambda"]),
        strict=bool(record["strict"]),
        value=int(record["value"]),
        a=tuple(parse_rational(x) for x in record["a"]),
        included=[tuple(p) for p in record["included"]],
        excluded=[tuple(p) for p in record["excluded"]],
        exactness=Exactness(record["exactness"]),
        lower_bound=record.get("lower_bound"),
    )


# -- the plane --------------------------------------------------------------


def _line_through(p: Point, q: Point) -> tuple[int, int, int] | None:
    """Primitive (alpha, beta, gamma) > 0 with alpha*x + beta*y = gamma through p and q."""
    alpha, beta = p[1] - q[1], q[0] - p[0]
    gamma = alpha * p[0] + beta * p[1]
    if gamma == 0:
        return None
    if gamma < 0:
        alpha, beta, gamma = -alpha, -beta, -gamma
    if alpha <= 0 or beta <= 0:
        return None
    g = gcd(gcd(alpha, beta), gamma)
    return alpha // g, beta // g, gamma // g


def _count_below(alpha: int, beta: int, gamma: int, cap: int) -> int:
    total = 0
    for y in range((gamma - 1) // beta + 1):
        total += (gamma - beta * y - 1) // alpha + 1
        if total > cap:
            break
    return total


def _line_points(alpha: int, beta: int, gamma: int) -> list[Point]:
    return [
        ((gamma - beta * y) // alpha, y)
        for y in range(gamma // beta + 1)
        if (gamma - beta * y) % alpha == 0
    ]


def _evaluate_line(
    line: tuple[int, int, int], lam: int, strict: bool, cap: int
) -> SigmaResult | None:
    alpha, beta, gamma = line
    lam_dot = lam * (alpha + beta)
    if lam_dot > gamma:
        return None
    base = _count_below(alpha, beta, gamma, cap)
    if base > cap:
        return None
    on_line = sorted(_line_points(alpha, beta, gamma))
    a = (Fraction(alpha, gamma), Fraction(beta, gamma))
    if strict and lam_dot == gamma:
        # the perturbation is affine along the line: it pulls in Lam and one side
        k = on_line.index((lam, lam))
        left, right = on_line[: k + 1], on_line[k:]
        included = min(left, right, key=lambda side: (len(side), side))
        excluded = [p for p in on_line if p not in included]
    else:
        included, excluded = [], on_line
    return SigmaResult(2, Fraction(lam), strict, base + len(included), a, included, excluded)


def _dominance_pool(n: int, bound: int) -> list[Point]:
    """Nonzero points p >= 0 with prod(p_i + 1) - 1 <= bound."""
    out: list[Point] = []

    def walk(prefix: list[int], budget: int):
        if len(prefix) == n:
            if any(prefix):
                out.append(tuple(prefix))
            return
        x = 0
        while (x + 1) <= budget:
            walk(prefix + [x], budget // (x + 1))
            x += 1

    walk([], bound + 1)
    return out


def _seed_lines(lam: int) -> list[tuple[int, int, int]]:
    lines = []
    for k in range(lam + 1, 4 * lam + 3):
        line = _line_through((lam, lam), (k, 0))
        if line:
            lines.append(line)
    lines.append((1, 1, 2 * lam))
    return lines


def sigma_exact_2d(lam: int, strict: bool, max_pairs: int = MAX_PAIRS) -> SigmaResult:
    """sigma_{2,lam} (strict) or its closed variant, with a witness."""
    if int(lam) != lam or lam < 1:
        raise ValueError("lambda must be a positive integer")
    lam = int(lam)
    lower = sigma_lower_bound(2, lam, strict, SigmaMethod.PICK2D).min_count

    best: SigmaResult | None = None
    for line in _seed_lines(lam):
        cand = _evaluate_line(line, lam, strict, cap=10 * lower + 10)
        if cand and (best is None or cand.sort_key() < best.sort_key()):
            best = cand
    assert best is not None

    pool = _dominance_pool(2, best.value)
    if (lam, lam) not in pool:
        pool.append((lam, lam))
    logger.debug("exact search lam=%d strict=%s: %d candidate points", lam, strict, len(pool))

    seen: set[tuple[int, int, int]] = set()
    pairs = 0
    exhaustive = True
    for p, q in itertools.combinations(pool, 2):
        pairs += 1
        if pairs > max_pairs:
            exhaustive = False
            break
        line = _line_through(p, q)
        if line is None or line in seen:
            continue
        seen.add(line)
        cand = _evaluate_line(line, lam, strict, cap=best.value)
        if cand and cand.sort_key() < best.sort_key():
            best = cand

    if best.value < lower:
        raise RuntimeError(f"witness value {best.value} below certified bound {lower}")
    if best.value == lower or exhaustive:
        best.exactness = Exactness.EXACT
    best.lower_bound = lower
    logger.info("sigma(2, %d, strict=%s) = %d (%s)", lam, strict, best.value, best.exactness.value)
    return best


# -- general dimension -------------------------------------------------------


def _solve(rows: list[tuple[Fraction, ...]]) -> tuple[Fraction, ...] | None:
    """Solve rows . a = 1 exactly; None if singular."""
    matrix = Matrix([[to_sympy(x) for x in row] for row in rows])
    if matrix.det() == 0:
        return None
    return tuple(from_sympy(x) for x in matrix.LUsolve(ones(len(rows), 1)))


def _directions(n: int) -> list[tuple[int, ...]]:
    dirs = [tuple(1 if j == i else 0 for j in range(n)) for i in range(n)]
    for i, j in itertools.permutations(range(n), 2):
        dirs.append(tuple(2 if k == i else (-1 if k == j else 0) for k in range(n)))
    dirs.append((1,) * n)
    return dirs


def _evaluate_covector(a, lam: Fraction, strict: bool, cap: int) -> SigmaResult | None:
    n = len(a)
    if any(x <= 0 for x in a):
        return None
    lam_dot = dot(a, _lam_point(n, lam))
    if lam_dot > 1:
        return None
    base = count_simplex(SimplexSpec(a, strict=True), cap=cap)
    if base > cap:
        return None
    on_plane = boundary_points(a)
    if not (strict and lam_dot == 1):
        return SigmaResult(n, lam, strict, base, tuple(a), [], on_plane)
    if n == 2 and lam.denominator == 1:
        (alpha, beta), gamma = integer_form(a)
        g = gcd(gcd(alpha, beta), gamma)
        return _evaluate_line((alpha // g, beta // g, gamma // g), int(lam), strict, cap)
    best = None
    for d in _directions(n):
        if sum(d) * lam <= 0:
            continue
        included = [p for p in on_plane if sum(x * y for x, y in zip(d, p)) > 0]
        excluded = [p for p in on_plane if sum(x * y for x, y in zip(d, p)) <= 0]
        cand = SigmaResult(n, lam, strict, base + len(included), tuple(a), included, excluded)
        if best is None or cand.sort_key() < best.sort_key():
            best = cand
    return best


def sigma_upper_search(
    n: int,
    lam,
    strict: bool,
    budget: int = DEFAULT_BUDGET,
    seed: int = 0,
) -> SigmaResult:
    """Best witness found within ``budget`` candidate covectors.

    The value is always a true upper bound; it is never claimed exact.
    """
    if n < 2:
        raise ValueError("n must be at least 2")
    lam = Fraction(lam)
    if lam <= 0:
        raise ValueError("lambda must be positive")
    rng = random.Random(seed)
    lam_pt = _lam_point(n, lam)
    evaluated = 0
    best: SigmaResult | None = None

    def consider(a) -> None:
        nonlocal best, evaluated
        evaluated += 1
        cap = best.value if best else 10**9
        cand = _evaluate_covector(a, lam, strict, cap)
        if cand and (best is None or cand.sort_key() < best.sort_key()):
            best = cand

    symmetric = (1 / (n * lam),) * n
    consider(symmetric)
    # refine around the symmetric seed, keeping a.Lam fixed
    for k in range(2, 2 * n + 2):
        step = Fraction(1, k * n) / lam
        for i, j in itertools.permutations(range(n), 2):
            a = list(symmetric)
            a[i] += step
            a[j] -= step
            consider(tuple(a))

    pool: list[tuple[Fraction, ...]] = [tuple(map(Fraction, p)) for p in _dominance_pool(n, best.value)]
    pool.append(lam_pt)
    remaining = max(0, budget - evaluated)
    total = comb(len(pool), n)
    if total <= remaining:
        tuples = itertools.combinations(pool, n)
    else:
        tuples = (tuple(rng.sample(pool, n)) for _ in range(remaining))
    for rows in tuples:
        a = _solve(list(rows))
        if a is not None:
            consider(a)

    logger.info(
        "sigma search n=%d lam=%s strict=%s: %d after %d candidates",
        n, lam, strict, best.value, evaluated,
    )
    best.exactness = Exactness.UPPER_BOUND
    return best
