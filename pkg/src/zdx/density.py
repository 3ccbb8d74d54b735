"""Zero-density exponent curves driven by exponent pairs.

For an admissible pair (kappa, lambda) the density exponent A(sigma) has
two linear-fractional branches on two adjoining sigma-regions; the full
exponent of T is E(sigma) = A(sigma) * (1 - sigma).  This module builds
the regions and branches exactly, audits the parameter balance behind
them (choice of the smoothing length Y = T^y(sigma) and the block length
T0), compares against hard-coded baselines, and minimizes E over a family
of pairs into an exact piecewise bound.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exact import (
    Interval,
    LinFrac,
    Quadratic,
    Root,
    RootBracket,
    SignCertificate,
    dec_str,
    linfrac_compare_on_interval,
    quadratic_roots_in_interval,
    quadratic_sign_on_interval,
    rat_str,
)
from .pairs import ExponentPair, PairFamily

__all__ = [
    "InadmissiblePair",
    "EmptyRegion",
    "BalanceViolation",
    "KAPPA_LIMIT",
    "RegionSpec",
    "Provenance",
    "BoundCurve",
    "ContinuityReport",
    "TermCertificate",
    "AuditReport",
    "Crossover",
    "Segment",
    "PiecewiseBound",
    "regions_for",
    "exponent_curve",
    "continuity_check",
    "audit_balance",
    "baseline_curves",
    "crossover",
    "optimize",
    "candidate_curves",
    "provenance_fields",
    "bound_table_rows",
    "piecewise_to_json_obj",
]

#: The two-branch construction needs kappa strictly below 1/3.
KAPPA_LIMIT = Fraction(1, 3)

_HALF = Fraction(1, 2)
_ONE = Fraction(1)


class InadmissiblePair(ValueError):
    """Pair outside the parameter range the construction supports."""


class EmptyRegion(ValueError):
    """Requested a curve or audit on an empty validity region."""


class BalanceViolation(Exception):
    """A balanced term exceeds the claimed exponent somewhere."""

    def __init__(self, term: str, witness: Fraction, message: str = ""):
        self.term = term
        self.witness = witness
        super().__init__(
            message or f"term {term} exceeds the exponent at sigma = {rat_str(witness)}"
        )


# ---------------------------------------------------------------------------
# Regions
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class RegionSpec:
    """Validity regions of the two A(sigma) branches for one pair.

    region1 = [max(sigma_star, 1/2), 1]   (empty iff lambda + 2*kappa > 1)
    region2 = [left2, sigma_star]          (empty iff kappa + 1 > 4*lambda)

    where sigma_star = (1 + lambda - 4 kappa) / (2 - 6 kappa) and
    left2 = (1 + lambda + kappa) / (2 (1 + kappa)).  Empty regions are
    explicit ``Interval.empty()`` values, never dropped.
    """

    pair: ExponentPair
    sigma_star: Fraction
    left2: Fraction
    region1: Interval
    region2: Interval

    def region(self, index: int) -> Interval:
        if index == 1:
            return self.region1
        if index == 2:
            return self.region2
        raise ValueError(f"region index must be 1 or 2, got {index!r}")


def _require_admissible(pair: ExponentPair) -> None:
    if pair.kappa >= KAPPA_LIMIT:
        raise InadmissiblePair(
            f"pair {pair} has kappa >= 1/3; the region construction needs kappa < 1/3"
        )


def regions_for(pair: ExponentPair) -> RegionSpec:
    """Exact region endpoints for a pair; kappa >= 1/3 is rejected."""
    _require_admissible(pair)
    k, l = pair.kappa, pair.lam
    sigma_star = (1 + l - 4 * k) / (2 - 6 * k)
    left2 = (1 + l + k) / (2 * (1 + k))
    lo1 = max(sigma_star, _HALF)
    region1 = Interval(lo1, _ONE) if lo1 <= _ONE else Interval.empty()
    region2 = Interval(left2, sigma_star) if left2 <= sigma_star else Interval.empty()
    return RegionSpec(pair, sigma_star, left2, region1, region2)


# ---------------------------------------------------------------------------
# Bound curves
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Provenance:
    """Which candidate a curve came from."""

    label: str
    pair: ExponentPair | None = None
    region: int | None = None
    baseline: bool = False
    conjectural: bool = False


@dataclass(frozen=True)
class BoundCurve:
    """One branch of a density bound: A(sigma) and E(sigma) = A(sigma)(1-sigma).

    E is carried redundantly as a ratio of polynomials of degree <= 2 so
    that sign questions about it reduce to quadratic certificates.
    """

    A: LinFrac
    e_num: Quadratic
    e_den: Quadratic
    region: Interval
    provenance: Provenance

    @classmethod
    def from_A(cls, A: LinFrac, region: Interval, provenance: Provenance) -> "BoundCurve":
        e_num = Quadratic.from_linear_product(A.a, A.b, -1, 1)  # (a s + b)(1 - s)
        e_den = Quadratic.linear(A.c, A.d)
        return cls(A, e_num, e_den, region, provenance)

    def eval_A(self, sigma: Fraction) -> Fraction:
        return self.A.eval(sigma)

    def eval_E(self, sigma: Fraction) -> Fraction:
        return self.A.eval(sigma) * (1 - Fraction(sigma))

    def __str__(self) -> str:
        return f"{self.provenance.label}: A = {self.A} on {self.region}"


def exponent_curve(pair: ExponentPair, region: int) -> BoundCurve:
    """The A(sigma) branch of a pair on region 1 or 2.

    Region 1: A = 4/(4 sigma - 1).
    Region 2: A = 4 kappa / ((2-2 kappa) sigma + (3 kappa - lambda - 1)),
    the coefficient normalization that makes A * (1 - sigma) the exponent
    of T on both branches.
    """
    regions = regions_for(pair)
    reg = regions.region(region)
    if reg.is_empty:
        raise EmptyRegion(f"region {region} of pair {pair} is empty")
    k, l = pair.kappa, pair.lam
    if region == 1:
        A = LinFrac(0, 4, 4, -1)
    else:
        if k == 0:
            raise InadmissiblePair(
                f"pair {pair}: the region-2 branch degenerates for kappa = 0"
            )
        A = LinFrac.of(0, 4 * k, 2 - 2 * k, 3 * k - l - 1)
    label = f"pair {rat_str(k)},{rat_str(l)} region {region}"
    return BoundCurve.from_A(A, reg, Provenance(label, pair, region))


@dataclass(frozen=True)
class ContinuityReport:
    """Do the two branches agree at the shared endpoint sigma_star?"""

    status: str  # "ok" | "skipped" | "mismatch"
    sigma_star: Fraction | None = None
    shared_value: Fraction | None = None
    note: str = ""

    def __bool__(self) -> bool:
        return self.status == "ok"


def continuity_check(pair: ExponentPair) -> ContinuityReport:
    """Verify both branches take the same value at sigma_star, exactly.

    The shared value in closed form is 4(2-6k)/(2+4l-10k).  Pairs whose
    region-2 branch is degenerate (kappa = 0) or whose regions do not both
    exist are reported as skipped with an explicit note.
    """
    regions = regions_for(pair)
    if regions.region1.is_empty:
        return ContinuityReport("skipped", note="region 1 empty: EmptyRegion")
    if regions.region2.is_empty:
        return ContinuityReport("skipped", note="region 2 empty: EmptyRegion")
    if pair.kappa == 0:
        return ContinuityReport(
            "skipped", note="region-2 branch degenerate for kappa = 0"
        )
    k, l = pair.kappa, pair.lam
    a1 = exponent_curve(pair, 1).eval_A(regions.sigma_star)
    a2 = exponent_curve(pair, 2).eval_A(regions.sigma_star)
    closed_form = 4 * (2 - 6 * k) / (2 + 4 * l - 10 * k)
    if a1 == a2 == closed_form:
        return ContinuityReport("ok", regions.sigma_star, a1)
    return ContinuityReport(
        "mismatch",
        regions.sigma_star,
        note=f"branches disagree: {rat_str(a1)} vs {rat_str(a2)}",
    )


# ---------------------------------------------------------------------------
# Balance audit
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class TermCertificate:
    """Exact comparison of one balanced term against E on the region."""

    label: str
    num: Quadratic  # term exponent numerator over the shared denominator
    diff_cert: SignCertificate  # sign of (term - E) numerator
    achieves: bool  # term == E identically on the region

    @property
    def ok(self) -> bool:
        return self.diff_cert.is_nonpos


@dataclass(frozen=True)
class AuditReport:
    """Outcome of auditing max(e1, e2, e3) = E on one region.

    e1: dyadic main term              (2 - 2 sigma) y
    e2: block-subdivision term        1 + y (1 - sigma - t0_exponent/2)
    e3: sixth-moment term             2 + (3 - 6 sigma) y

    with Y = T^{y(sigma)}, N of size Y, and T0 = N^{t0_exponent}; all
    exponents share the positive linear denominator of y on the region.
    """

    pair: ExponentPair
    region_index: int
    region: Interval
    y: LinFrac
    t0_exponent: LinFrac
    denominator: Quadratic
    e_num: Quadratic
    terms: tuple[TermCertificate, ...]

    @property
    def passed(self) -> bool:
        return all(t.ok for t in self.terms) and any(t.achieves for t in self.terms)

    def term_value(self, label: str, sigma: Fraction) -> Fraction:
        for t in self.terms:
            if t.label == label:
                return t.num.eval(sigma) / self.denominator.eval(sigma)
        raise KeyError(label)

    def exponent_value(self, sigma: Fraction) -> Fraction:
        return self.e_num.eval(sigma) / self.denominator.eval(sigma)


_TERM_LABELS = ("class1_main", "class1_subdivision", "class2_moment")


def _positive_witness(num: Quadratic, region: Interval, cert: SignCertificate) -> Fraction:
    """A rational sigma in the region where the numerator is positive."""
    candidates = [region.lo, region.hi]
    if num.c2 != 0:
        v = -num.c1 / (2 * num.c2)
        if region.contains(v):
            candidates.append(v)
    for r in cert.roots:
        for edge in ((r.lo, r.hi) if isinstance(r, RootBracket) else (r,)):
            for eps in (region.width / 1000, Fraction(0)):
                for x in (edge - eps, edge + eps):
                    if region.contains(x):
                        candidates.append(x)
    for x in candidates:
        if num.eval(x) > 0:
            return x
    raise AssertionError("positive witness requested for a nonpositive quadratic")


def audit_balance(pair: ExponentPair, region: int) -> AuditReport:
    """Certify that the three balanced term exponents stay below E.

    Region 1 uses y = 2/(4 sigma - 1); region 2 uses
    y = 2 kappa / ((2-2 kappa) sigma + (3 kappa - lambda - 1)).  With N of
    size Y the three exponents and E share that single linear denominator
    (positive on the region, asserted), so each comparison is an exact
    linear sign certificate.  Raises BalanceViolation with a witness sigma
    if any term pokes above E.
    """
    regions = regions_for(pair)
    reg = regions.region(region)
    if reg.is_empty:
        raise EmptyRegion(f"region {region} of pair {pair} is empty")
    k, l = pair.kappa, pair.lam
    if k == 0:
        raise InadmissiblePair(
            f"pair {pair}: the block length T0 = N^((2s-1-(l-k))/k) is undefined for kappa = 0"
        )
    if region == 1:
        y = LinFrac(0, 2, 4, -1)
    else:
        y = LinFrac.of(0, 2 * k, 2 - 2 * k, 3 * k - l - 1)
    n_y = Fraction(y.b)
    den = Quadratic.linear(y.c, y.d)
    assert den.eval(reg.lo) > 0 and den.eval(reg.hi) > 0, "y denominator must be positive"

    t0_exponent = LinFrac.of(2, -(1 + l - k), 0, k)

    # Term exponents as numerators over the shared denominator `den`:
    #   e1 = (2 - 2s) y
    e1_num = Quadratic.linear(-2 * n_y, 2 * n_y)
    #   e2 = 1 + y (1 - s - (2s - (1 + l - k)) / (2k))
    lin_a = -1 - 1 / k
    lin_b = 1 + (1 + l - k) / (2 * k)
    e2_num = den + Quadratic.linear(n_y * lin_a, n_y * lin_b)
    #   e3 = 2 + (3 - 6s) y
    e3_num = den.scale(2) + Quadratic.linear(-6 * n_y, 3 * n_y)
    #   E = A (1 - s) = 2 y (1 - s)
    e_num = Quadratic.linear(-2 * n_y, 2 * n_y)

    terms = []
    for label, num in zip(_TERM_LABELS, (e1_num, e2_num, e3_num)):
        diff = num - e_num
        cert = quadratic_sign_on_interval(diff, reg)
        terms.append(TermCertificate(label, num, cert, achieves=diff.is_zero))
    report = AuditReport(pair, region, reg, y, t0_exponent, den, e_num, tuple(terms))
    for t in report.terms:
        if not t.ok:
            witness = _positive_witness(t.num - e_num, reg, t.diff_cert)
            raise BalanceViolation(t.label, witness)
    return report


# ---------------------------------------------------------------------------
# Baselines
# ---------------------------------------------------------------------------

def baseline_curves() -> tuple[BoundCurve, ...]:
    """The named reference bounds.

    ivic-8/3:             A = 8/3 on [1/2, 1]
    ivic-1992:            A = 4/(8 sigma - 5) on [11/12, 1]
    density-hypothesis:   A = 2 on [1/2, 1]  (conjectural, flagged)
    """
    return (
        BoundCurve.from_A(
            LinFrac.constant(Fraction(8, 3)),
            Interval(_HALF, _ONE),
            Provenance("ivic-8/3", baseline=True),
        ),
        BoundCurve.from_A(
            LinFrac(0, 4, 8, -5),
            Interval(Fraction(11, 12), _ONE),
            Provenance("ivic-1992", baseline=True),
        ),
        BoundCurve.from_A(
            LinFrac.constant(2),
            Interval(_HALF, _ONE),
            Provenance("density-hypothesis", baseline=True, conjectural=True),
        ),
    )


# ---------------------------------------------------------------------------
# Crossovers
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Crossover:
    """Where two A-curves agree inside the overlap of their regions."""

    kind: str  # "identical" | "none" | "points"
    points: tuple[Root, ...] = ()


def crossover(f: BoundCurve, g: BoundCurve) -> Crossover:
    """Solve A_f = A_g exactly on the overlap of the two regions.

    Identical curves are reported as such (no isolated crossing); poles of
    either curve are excluded from the root set.
    """
    overlap = f.region.intersect(g.region)
    if overlap.is_empty:
        raise ValueError("crossover requires overlapping regions")
    if f.A == g.A:
        return Crossover("identical")
    q = Quadratic.from_linear_product(f.A.a, f.A.b, g.A.c, g.A.d) - Quadratic.from_linear_product(
        g.A.a, g.A.b, f.A.c, f.A.d
    )
    if q.is_zero:
        return Crossover("identical")
    roots = quadratic_roots_in_interval(q, overlap)
    points = []
    for r in roots:
        probe = r.midpoint() if isinstance(r, RootBracket) else r
        if f.A.denominator_at(probe) == 0 or g.A.denominator_at(probe) == 0:
            continue
        points.append(r)
    if not points:
        return Crossover("none")
    return Crossover("points", tuple(points))


# ---------------------------------------------------------------------------
# Optimizer
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Segment:
    region: Interval
    curve: BoundCurve


@dataclass(frozen=True)
class PiecewiseBound:
    """Ordered disjoint segments covering the optimization interval."""

    interval: Interval
    segments: tuple[Segment, ...]

    def __len__(self) -> int:
        return len(self.segments)

    def __iter__(self):
        return iter(self.segments)

    def segment_at(self, sigma: Fraction) -> Segment:
        for seg in self.segments:
            if seg.region.contains(sigma):
                return seg
        raise KeyError(f"sigma = {rat_str(sigma)} outside the optimized interval")

    def eval_A(self, sigma: Fraction) -> Fraction:
        return self.segment_at(sigma).curve.eval_A(sigma)

    def eval_E(self, sigma: Fraction) -> Fraction:
        return self.segment_at(sigma).curve.eval_E(sigma)


def candidate_curves(
    family: PairFamily,
    include_baselines: bool = True,
    include_conjectural: bool = False,
) -> tuple[BoundCurve, ...]:
    """All curves the optimizer may pick from, in a fixed deterministic order.

    Pairs come first (sorted by (kappa, lambda), region 1 then 2); pairs
    with kappa >= 1/3 are skipped, as is the degenerate kappa = 0 region-2
    branch.  Baselines follow; conjectural ones only on request.
    """
    curves: list[BoundCurve] = []
    for pair in sorted(family, key=lambda p: p.key):
        if pair.kappa >= KAPPA_LIMIT:
            continue
        for region in (1, 2):
            try:
                curves.append(exponent_curve(pair, region))
            except (EmptyRegion, InadmissiblePair):
                continue
    if include_baselines:
        for base in baseline_curves():
            if base.provenance.conjectural and not include_conjectural:
                continue
            curves.append(base)
    return tuple(curves)


def _prefer_right(
    curves: tuple[BoundCurve, ...], i: int, j: int, sigma: Fraction, limit: Fraction
) -> int:
    """Of two curves tied at sigma, the one smaller immediately to the right.

    Decided exactly: compare the A-branches on (sigma, w] where w stops at
    the first region end, and on a crossing certificate probe between sigma
    and the first crossing beyond it.  Functional ties fall back to the
    fixed candidate order.
    """
    f, g = curves[i], curves[j]
    w = min(limit, f.region.hi, g.region.hi)
    if w <= sigma:
        f_cont = f.region.hi > sigma
        g_cont = g.region.hi > sigma
        if f_cont != g_cont:
            return i if f_cont else j
        return min(i, j)
    window = Interval(sigma, w)
    cert = linfrac_compare_on_interval(f.A, g.A, window)
    if cert.relation == "eq":
        return min(i, j)
    if cert.relation == "le":
        return i
    if cert.relation == "ge":
        return j
    first = None
    for r in cert.crossings:
        x = r.lo if isinstance(r, RootBracket) else r
        if x > sigma:
            first = x
            break
    probe = (sigma + (first if first is not None else w)) / 2
    return i if f.eval_E(probe) <= g.eval_E(probe) else j


def _winner_at(
    curves: tuple[BoundCurve, ...],
    sigma: Fraction,
    limit: Fraction,
    incumbent: int | None,
) -> int | None:
    """Index of the E-minimal curve at sigma.

    Ties keep the incumbent winner when it is still minimal (stable runs);
    fresh ties are resolved by exact behavior immediately to the right of
    sigma, then by the fixed candidate order.
    """
    eligible = [i for i, c in enumerate(curves) if c.region.contains(sigma)]
    if not eligible:
        return None
    best = min(curves[i].eval_E(sigma) for i in eligible)
    tied = [i for i in eligible if curves[i].eval_E(sigma) == best]
    if len(tied) == 1:
        return tied[0]
    if incumbent in tied:
        return incumbent
    if limit > sigma:
        win = tied[0]
        for j in tied[1:]:
            win = _prefer_right(curves, win, j, sigma, limit)
        return win
    return tied[0]


def _boundary_between(
    left: BoundCurve, right: BoundCurve, lo: Fraction, hi: Fraction
) -> Fraction:
    """Exact switching point between two adjacent winners inside [lo, hi].

    Prefers a genuine crossing of the two A-curves; falls back to a region
    edge when the change is caused by eligibility rather than a crossing.
    Irrational crossings are replaced by a rational point inside their
    isolating bracket.
    """
    window = Interval(lo, hi)
    candidates: list[Fraction] = []
    try:
        cx = crossover(left, right)
        if cx.kind == "points":
            for r in cx.points:
                x = r.midpoint() if isinstance(r, RootBracket) else r
                if window.contains(x):
                    candidates.append(x)
    except ValueError:
        pass
    for edge in (left.region.hi, right.region.lo):
        if window.contains(edge):
            candidates.append(edge)
    if not candidates:
        return hi
    candidates = sorted(set(candidates))
    for b in candidates:
        left_ok = b == lo or _wins_on(left, right, lo, b)
        right_ok = b == hi or _wins_on(right, left, b, hi)
        if left_ok and right_ok:
            return b
    return candidates[0]


def _wins_on(winner: BoundCurve, other: BoundCurve, lo: Fraction, hi: Fraction) -> bool:
    """winner.E <= other.E at the midpoint of (lo, hi), treating points
    outside a region as a loss for that curve."""
    mid = (lo + hi) / 2
    if not winner.region.contains(mid):
        return False
    if not other.region.contains(mid):
        return True
    return winner.eval_E(mid) <= other.eval_E(mid)


def optimize(
    family: PairFamily,
    interval: Interval,
    resolution: int = 256,
    include_baselines: bool = True,
    include_conjectural: bool = False,
) -> PiecewiseBound:
    """Minimize E(sigma) over all candidate curves on a sigma-interval.

    Evaluates every candidate at resolution+1 equally spaced rational grid
    points, merges runs of equal winners, and places the segment boundary
    at the exact crossover (or region edge) between adjacent winners.
    """
    if interval.is_empty:
        return PiecewiseBound(interval, ())
    curves = candidate_curves(family, include_baselines, include_conjectural)
    grid = interval.grid(resolution)
    winners: list[int | None] = []
    incumbent: int | None = None
    for idx, sigma in enumerate(grid):
        limit = grid[idx + 1] if idx + 1 < len(grid) else interval.hi
        incumbent = _winner_at(curves, sigma, limit, incumbent)
        winners.append(incumbent)

    # contract the winner list into runs of equal winner
    runs: list[tuple[int | None, int, int]] = []  # (winner, first_idx, last_idx)
    for idx, win in enumerate(winners):
        if runs and runs[-1][0] == win:
            runs[-1] = (win, runs[-1][1], idx)
        else:
            runs.append((win, idx, idx))

    segments: list[Segment] = []
    for pos, (win, first, last) in enumerate(runs):
        if win is None:
            continue
        curve = curves[win]
        prev = runs[pos - 1] if pos > 0 else None
        nxt = runs[pos + 1] if pos + 1 < len(runs) else None
        if prev is None:
            lo = interval.lo
        elif prev[0] is None:
            lo = max(curve.region.lo, interval.lo)  # coverage starts with this curve
        else:
            lo = segments[-1].region.hi if segments else interval.lo
        if nxt is None:
            hi = interval.hi
        elif nxt[0] is None:
            hi = min(curve.region.hi, interval.hi)  # coverage ends with this curve
        else:
            hi = _boundary_between(curves[win], curves[nxt[0]], grid[last], grid[nxt[1]])
        hi = max(hi, lo)
        segments.append(Segment(Interval(lo, hi), curve))
    # drop zero-width artifacts that duplicate a shared endpoint
    cleaned: list[Segment] = []
    for seg in segments:
        if cleaned and seg.region.is_point and cleaned[-1].region.contains(seg.region.lo):
            continue
        cleaned.append(seg)
    return PiecewiseBound(interval, tuple(cleaned))


# ---------------------------------------------------------------------------
# Serialization helpers
# ---------------------------------------------------------------------------

def provenance_fields(prov: Provenance) -> dict[str, str]:
    """Flat winner columns used by the CSV and JSON emitters."""
    if prov.pair is not None:
        return {
            "winner_kappa": rat_str(prov.pair.kappa),
            "winner_lambda": rat_str(prov.pair.lam),
            "winner_word": prov.pair.word or "",
            "region": str(prov.region),
        }
    return {"winner_kappa": "", "winner_lambda": "", "winner_word": prov.label, "region": ""}


def bound_table_rows(bound: PiecewiseBound, resolution: int) -> list[dict[str, str]]:
    """Exact + decimal rows of the optimized bound on its grid.

    Grid points not covered by any segment (no eligible candidate) are
    skipped rather than emitted with placeholders.
    """
    rows = []
    for sigma in bound.interval.grid(resolution):
        try:
            seg = bound.segment_at(sigma)
        except KeyError:
            continue
        a = seg.curve.eval_A(sigma)
        e = a * (1 - sigma)
        row = {
            "sigma": rat_str(sigma),
            "A_num": str(a.numerator),
            "A_den": str(a.denominator),
            "A_decimal": dec_str(a),
            "E_decimal": dec_str(e),
        }
        row.update(provenance_fields(seg.curve.provenance))
        rows.append(row)
    return rows


def piecewise_to_json_obj(bound: PiecewiseBound) -> dict:
    segs = []
    for seg in bound.segments:
        prov = seg.curve.provenance
        segs.append(
            {
                "lo": rat_str(seg.region.lo),
                "hi": rat_str(seg.region.hi),
                "A": {
                    "a": str(seg.curve.A.a),
                    "b": str(seg.curve.A.b),
                    "c": str(seg.curve.A.c),
                    "d": str(seg.curve.A.d),
                    "text": str(seg.curve.A),
                },
                "provenance": provenance_fields(prov),
                "label": prov.label,
            }
        )
    return {
        "interval": {"lo": rat_str(bound.interval.lo), "hi": rat_str(bound.interval.hi)},
        "segments": segs,
    }
