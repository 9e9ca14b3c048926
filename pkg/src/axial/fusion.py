"""Fusion rules and the Virasoro discrete-series tables V(p, q).

A fusion rules is a central charge, a finite set of rational fields, and
a symmetric set-valued product on the fields.  The tables V(p, q) are
generated from the discrete-series highest weights; products of weights
follow the admissible-triple bound, the weights are halved, and the extra
identity field 1 is adjoined.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import gcd

ONE = Fraction(1)
ZERO = Fraction(0)


@dataclass(frozen=True)
class Grading:
    """A Z/2-grading of a field set: products land in the parity product."""

    even: frozenset
    odd: frozenset

    @property
    def trivial(self) -> bool:
        return not self.odd

    def parity(self, f) -> int:
        if f in self.even:
            return 0
        if f in self.odd:
            return 1
        raise KeyError(f"{f} is not a graded field")


@dataclass(frozen=True, eq=True)
class FusionRules:
    """Central charge, fields, and the star table on unordered field pairs."""

    central_charge: Fraction
    fields: tuple
    star: dict

    def __post_init__(self):
        seen = set(self.fields)
        if len(seen) != len(self.fields):
            raise ValueError("fields must be distinct")
        for f in self.fields:
            for g in self.fields:
                prod = self.star.get((f, g))
                if prod is None:
                    raise ValueError(f"star table is missing the pair ({f}, {g})")
                if prod != self.star.get((g, f)):
                    raise ValueError(f"star table is not symmetric at ({f}, {g})")
                if not prod <= seen:
                    raise ValueError(f"star({f}, {g}) leaves the field set")

    def product(self, f, g) -> frozenset:
        return self.star[(Fraction(f), Fraction(g))]

    def annihilator_roots(self, f, g):
        """The fields whose product polynomial kills A_f * A_g."""
        return sorted(self.product(f, g))

    def to_json(self) -> dict:
        pairs = []
        for i, f in enumerate(self.fields):
            for g in self.fields[i:]:
                pairs.append([str(f), str(g), sorted(str(h) for h in self.product(f, g))])
        return {
            "central_charge": str(self.central_charge),
            "fields": [str(f) for f in self.fields],
            "star": pairs,
        }

    @staticmethod
    def from_json(data: dict) -> "FusionRules":
        fields = tuple(Fraction(f) for f in data["fields"])
        star = {}
        for f, g, prods in data["star"]:
            f, g = Fraction(f), Fraction(g)
            value = frozenset(Fraction(h) for h in prods)
            star[(f, g)] = value
            star[(g, f)] = value
        return FusionRules(Fraction(data["central_charge"]), fields, star)

    def table_text(self) -> str:
        def cell_order(h):
            return (h != ONE, h != ZERO, -h)

        cells = [""] + [str(f) for f in self.fields]
        rows = [cells]
        for f in self.fields:
            row = [str(f)]
            for g in self.fields:
                prod = sorted(self.product(f, g), key=cell_order)
                row.append(", ".join(str(h) for h in prod) if prod else "-")
            rows.append(row)
        widths = [max(len(r[c]) for r in rows) for c in range(len(cells))]
        lines = []
        for i, row in enumerate(rows):
            lines.append(" | ".join(cell.rjust(w) for cell, w in zip(row, widths)))
            if i == 0:
                lines.append("-+-".join("-" * w for w in widths))
        return "\n".join(lines)


def _check_pq(p: int, q: int):
    if p < 2 or q < 2:
        raise ValueError("p and q must be at least 2")
    if p == q:
        raise ValueError("p and q must be distinct")
    if gcd(p, q) != 1:
        raise ValueError("p and q must be coprime")


def central_charge(p: int, q: int) -> Fraction:
    """Central charge 1 - 6(p-q)^2/(pq) of the discrete-series pair (p, q)."""
    _check_pq(p, q)
    return 1 - Fraction(6 * (p - q) ** 2, p * q)


def _weight(p: int, q: int, r: int, s: int) -> Fraction:
    return Fraction((s * p - r * q) ** 2 - (p - q) ** 2, 4 * p * q)


def highest_weights(p: int, q: int):
    """Distinct highest weights h(r, s), each with its (r, s) representatives.

    Returns a list of (weight, frozenset of (r, s)) in the order of the
    canonical representative; the count is (p-1)(q-1)/2.
    """
    _check_pq(p, q)
    by_weight: dict[Fraction, set] = {}
    for r in range(1, p):
        for s in range(1, q):
            by_weight.setdefault(_weight(p, q, r, s), set()).add((r, s))
    out = [(h, frozenset(reps)) for h, reps in by_weight.items()]
    out.sort(key=lambda t: min(t[1]))
    assert len(out) == (p - 1) * (q - 1) // 2
    return out


def _admissible_products(p, q, rs, tu):
    """Weights of the summands of the product of modules h(rs) and h(tu)."""
    (r, s), (t, u) = rs, tu
    weights = set()
    for v in range(1 + abs(r - t), min(r + t - 1, 2 * p - r - t - 1) + 1, 2):
        for w in range(1 + abs(s - u), min(s + u - 1, 2 * q - s - u - 1) + 1, 2):
            weights.add(_weight(p, q, v, w))
    return weights


def virasoro_rules(p: int, q: int) -> FusionRules:
    """The fusion rules V(p, q): halved weights plus the identity field 1."""
    weights = highest_weights(p, q)
    reps = {h: min(rs) for h, rs in weights}
    halved = {h: h / 2 for h, _ in weights}
    fields = (ONE,) + tuple(halved[h] for h, _ in weights)
    if len(set(fields)) != len(fields):
        raise ValueError(
            f"V({p},{q}): a halved weight collides with another field; "
            "the set-of-fields model does not apply"
        )

    star: dict = {}

    def put(f, g, value):
        star[(f, g)] = value
        star[(g, f)] = value

    put(ONE, ONE, frozenset({ONE}))
    for h, _ in weights:
        put(ONE, halved[h], frozenset({halved[h]}))
    for h1, _ in weights:
        for h2, _ in weights:
            bullet = _admissible_products(p, q, reps[h1], reps[h2])
            value = {w / 2 for w in bullet}
            if ZERO in bullet:
                value.add(ONE)
            put(halved[h1], halved[h2], frozenset(value))
    return FusionRules(central_charge(p, q), fields, star)


def find_z2_gradings(rules: FusionRules) -> list[Grading]:
    """All Z/2-gradings, found by brute force over the two-part partitions.

    The identity field is required to be even; the trivial grading (odd
    part empty) is included.
    """
    others = [f for f in rules.fields if f != ONE]
    found = []
    for k in range(len(others) + 1):
        for odd in combinations(others, k):
            odd_set = frozenset(odd)
            even_set = frozenset(rules.fields) - odd_set

            def parity(f):
                return 1 if f in odd_set else 0

            ok = True
            for f in rules.fields:
                for g in rules.fields:
                    want = (parity(f) + parity(g)) % 2
                    if any(parity(h) != want for h in rules.product(f, g)):
                        ok = False
                        break
                if not ok:
                    break
            if ok:
                found.append(Grading(even_set, odd_set))
    return found


def seress_check(rules: FusionRules) -> bool:
    """True when 0 is a field, 0*1 = {0}, and 0*f = {f} for all f != 1."""
    if ZERO not in rules.fields:
        return False
    if rules.product(ZERO, ONE) != frozenset({ZERO}):
        return False
    for f in rules.fields:
        if f != ONE and rules.product(ZERO, f) != frozenset({f}):
            return False
    return True


def frobenius_refine(rules: FusionRules) -> FusionRules:
    """Drop 1 from 0*0: in a Frobenius algebra zero-eigenvectors multiply
    into the axis' perpendicular complement."""
    if ZERO not in rules.fields:
        raise ValueError("refinement needs 0 among the fields")
    star = dict(rules.star)
    star[(ZERO, ZERO)] = star[(ZERO, ZERO)] - {ONE}
    return FusionRules(rules.central_charge, rules.fields, star)
