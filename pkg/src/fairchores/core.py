"""Exact numeric foundation: instances, allocations, ordering and
interval-region classification.

All quantities are `fractions.Fraction`; no share or region boundary is ever
decided in floating point.  Disutility profiles are normalised so that each
agent's total is exactly 1 (rows whose original total is 0 are kept as
flagged all-zero rows).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence


class ValidationError(ValueError):
    """Malformed input data (negative entries, ragged matrix, bad allocation)."""


class DomainError(ValueError):
    """A query outside the mathematical domain of a formula."""


def as_fraction(x) -> Fraction:
    """Convert ints, Fractions, floats and strings ('7/20', '0.35') exactly."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, float):
        # floats are converted through their shortest repr so that "0.35"
        # round-trips to 7/20 rather than the binary expansion
        return Fraction(repr(x))
    return Fraction(x)


@dataclass(frozen=True)
class DisutilityVector:
    """One agent's additive disutilities over m objects.

    ``normalized`` is True when the entries sum to exactly 1; an all-zero
    row produced by normalising a zero-total agent carries False.
    """

    values: tuple[Fraction, ...]
    normalized: bool = False

    def __post_init__(self):
        if any(v < 0 for v in self.values):
            raise ValidationError("negative disutility entry")
        if self.normalized and sum(self.values) != 1:
            raise ValidationError("normalized vector must sum to exactly 1")

    @property
    def m(self) -> int:
        return len(self.values)

    def alpha(self) -> Fraction:
        """Largest single-object disutility (0 for an empty/all-zero row)."""
        return max(self.values, default=Fraction(0))

    def total(self) -> Fraction:
        return sum(self.values, Fraction(0))

    def value_of(self, bundle: Iterable[int]) -> Fraction:
        return sum((self.values[e] for e in bundle), Fraction(0))


@dataclass(frozen=True)
class Instance:
    """n agents x m objects, rows normalised (or flagged all-zero)."""

    profile: tuple[DisutilityVector, ...]
    scale_factors: tuple[Fraction, ...]

    def __post_init__(self):
        if not self.profile:
            raise ValidationError("instance needs at least one agent")
        m = self.profile[0].m
        if any(v.m != m for v in self.profile):
            raise ValidationError("ragged disutility matrix")

    @property
    def n(self) -> int:
        return len(self.profile)

    @property
    def m(self) -> int:
        return self.profile[0].m


@dataclass(frozen=True)
class Allocation:
    """A partition of object indices [0, m) into n (possibly empty) bundles."""

    bundles: tuple[frozenset[int], ...]

    @property
    def n(self) -> int:
        return len(self.bundles)

    def validate(self, m: int) -> None:
        seen: set[int] = set()
        for b in self.bundles:
            if b & seen:
                raise ValidationError("bundles are not disjoint")
            seen |= b
        if seen != set(range(m)):
            raise ValidationError("bundles do not cover all objects exactly once")


@dataclass(frozen=True)
class RegionIndex:
    """Locates alpha in the D/I (tight-share) or NI/IV (guarantee) families."""

    k: int
    tag: str  # "D" | "I" | "NI" | "IV"


def normalize(raw: Sequence[Sequence]) -> Instance:
    """Build a normalised Instance from a matrix of nonnegative rationals.

    Each row is divided by its total; a zero-total row is kept all-zero and
    flagged via ``normalized=False``.  ``scale_factors`` records the original
    row totals.
    """
    rows = [tuple(as_fraction(x) for x in r) for r in raw]
    if not rows:
        raise ValidationError("empty matrix")
    m = len(rows[0])
    if any(len(r) != m for r in rows):
        raise ValidationError("ragged matrix")
    profile = []
    scales = []
    for r in rows:
        if any(x < 0 for x in r):
            raise ValidationError("negative disutility entry")
        total = sum(r, Fraction(0))
        scales.append(total)
        if total == 0:
            profile.append(DisutilityVector(r, normalized=False))
        else:
            profile.append(DisutilityVector(tuple(x / total for x in r), normalized=True))
    return Instance(tuple(profile), tuple(scales))


def order_vector(v: DisutilityVector) -> tuple[DisutilityVector, tuple[int, ...]]:
    """Sort a vector non-increasingly; returns (sorted vector, permutation).

    ``perm[p]`` is the original index of the value at sorted position p.
    Ties keep original index order (stable).
    """
    perm = tuple(sorted(range(v.m), key=lambda j: (-v.values[j], j)))
    ordered = DisutilityVector(tuple(v.values[j] for j in perm), v.normalized)
    return ordered, perm


def _bracket_k(n: int, alpha: Fraction) -> int:
    # both interval families tile (1/((k+1)n+1), 1/(kn+1)]
    return int((Fraction(1) / alpha - 1) // n)


def classify_theorem1(n: int, alpha) -> RegionIndex:
    """Unique (k, D|I) region of the tight-share interval family.

    D(n,k) = (1/(kn+n+1), (k+2)/(n(k+1)^2+k+2)],
    I(n,k) = ((k+2)/(n(k+1)^2+k+2), 1/(kn+1)].
    """
    alpha = as_fraction(alpha)
    if n < 2:
        raise DomainError("need at least 2 agents")
    if not 0 < alpha <= 1:
        raise DomainError(f"alpha={alpha} outside (0, 1]")
    k = _bracket_k(n, alpha)
    split = Fraction(k + 2, n * (k + 1) ** 2 + k + 2)
    return RegionIndex(k, "D" if alpha <= split else "I")


def classify_guarantee(n: int, alpha) -> RegionIndex:
    """Unique (k, NI|IV) region of the monotone-guarantee interval family.

    NI(n,k) = (1/((k+1)n+1), (k+2)/((k+1)((k+1)n+1))),
    IV(n,k) = [(k+2)/((k+1)((k+1)n+1)), 1/(kn+1)]  (closed on the left).
    """
    alpha = as_fraction(alpha)
    if n < 2:
        raise DomainError("need at least 2 agents")
    if not 0 < alpha <= 1:
        raise DomainError(f"alpha={alpha} outside (0, 1]")
    k = _bracket_k(n, alpha)
    split = Fraction(k + 2, (k + 1) * ((k + 1) * n + 1))
    return RegionIndex(k, "NI" if alpha < split else "IV")


def ceil_inv(alpha: Fraction) -> int:
    """Smallest feasible object count for a normalised vector with max alpha."""
    return math.ceil(Fraction(1) / alpha)


# ---------------------------------------------------------------------------
# CSV interface: header `object_1,...,object_m`, one agent row per line,
# entries as decimal strings or p/q fractions.  Lines starting with '#' and
# blank lines are ignored.

def parse_instance_csv(text: str) -> Instance:
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if not lines:
        raise ValidationError("empty instance file")
    header = [h.strip() for h in lines[0].split(",")]
    m = len(header)
    if header != [f"object_{j}" for j in range(1, m + 1)]:
        raise ValidationError("bad header, expected object_1,...,object_m")
    rows = []
    for lineno, ln in enumerate(lines[1:], start=2):
        toks = [t.strip() for t in ln.split(",")]
        if len(toks) != m:
            raise ValidationError(f"line {lineno}: expected {m} entries, got {len(toks)}")
        try:
            row = [as_fraction(t) for t in toks]
        except (ValueError, ZeroDivisionError) as exc:
            raise ValidationError(f"line {lineno}: {exc}") from exc
        if any(x < 0 for x in row):
            raise ValidationError(f"line {lineno}: negative entry")
        rows.append(row)
    if not rows:
        raise ValidationError("instance file has a header but no agent rows")
    return normalize(rows)


def read_instance_csv(path) -> Instance:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_instance_csv(fh.read())


def format_instance_csv(inst: Instance, comments: Sequence[str] = ()) -> str:
    out = [",".join(f"object_{j}" for j in range(1, inst.m + 1))]
    for row in inst.profile:
        out.append(",".join(str(x) for x in row.values))
    out.extend(f"# {c}" for c in comments)
    return "\n".join(out) + "\n"
