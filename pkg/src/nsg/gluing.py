"""Gluings and complete intersection certificates.

A gluing combines semigroups S and S2 into mu*S + lambda*S2, where lambda is
a non-generator element of S, mu is a non-generator element of S2, and
gcd(lambda, mu) = 1.  The scaled generators stay jointly minimal, and the
glued semigroup needs exactly one minimal relation beyond the scaled
relations of the two sides; its degree, the extra degree d, is a multiple of
lambda * mu and at least lambda * mu.  Consequences used throughout:

    degrees(glued) = mu * degrees(S)  +  lambda * degrees(S2)  +  {d}
    F(glued)       = d + mu * F(S) + lambda * F(S2)

A semigroup is a complete intersection exactly when its minimal presentation
has (number of generators - 1) relations, and equivalently (apart from N
itself, which is trivially one) when it is a gluing of two smaller complete
intersections.  ci_tree builds that recursive certificate; callers that only
need the boolean get both routes cross-checked.

For complete intersections the a-invariant is sum(relation degrees) minus
sum(generators), and it coincides with the Frobenius number.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from math import gcd

from .core import NumericalSemigroup, contains, make_semigroup
from .errors import (
    ConsistencyError,
    FamilyConstraintError,
    LambdaNotEligibleError,
    MuNotEligibleError,
    NotCompleteIntersectionError,
    NotCoprimeError,
)
from .presentations import minimal_presentation, relation_degrees


@dataclass(frozen=True)
class GluingSplit:
    """A way of writing a semigroup as mu*left_quotient + lam*right_quotient.

    left_part and right_part partition the minimal generators; mu and lam are
    their gcds.  Eligibility is cross-wise: lam (the right gcd) must be a
    non-generator element of the left quotient, and mu of the right one.
    """

    left_part: tuple[int, ...]
    right_part: tuple[int, ...]
    mu: int
    lam: int
    left_quotient: NumericalSemigroup
    right_quotient: NumericalSemigroup


@dataclass(frozen=True)
class CITree:
    """Recursive gluing certificate; a leaf is the semigroup N."""

    semigroup: NumericalSemigroup
    split: GluingSplit | None
    left: CITree | None
    right: CITree | None
    extra_degree: int | None

    @property
    def is_leaf(self) -> bool:
        return self.split is None

    def to_text(self) -> str:
        if self.is_leaf:
            return "N"
        return (
            f"({self.split.mu}*{self.left.to_text()}"
            f" + {self.split.lam}*{self.right.to_text()}"
            f" : d={self.extra_degree})"
        )

    def to_record(self) -> dict:
        if self.is_leaf:
            return {"leaf": True, "generators": list(self.semigroup.generators)}
        return {
            "leaf": False,
            "generators": list(self.semigroup.generators),
            "mu": self.split.mu,
            "lambda": self.split.lam,
            "extra_degree": self.extra_degree,
            "left": self.left.to_record(),
            "right": self.right.to_record(),
        }


def glue(
    left: NumericalSemigroup,
    right: NumericalSemigroup,
    lam: int,
    mu: int,
) -> NumericalSemigroup:
    """The gluing mu*left + lam*right.

    lam must be an element of left but not one of its minimal generators
    (hence lam >= 2), mu likewise for right, and gcd(lam, mu) must be 1.
    The result's minimal generators are exactly the scaled generators of the
    two sides; that is verified, not assumed.
    """
    if lam < 2 or not contains(left, lam) or lam in left.generators:
        raise LambdaNotEligibleError(
            f"lambda={lam} is not a non-generator element >= 2 of {left}"
        )
    if mu < 2 or not contains(right, mu) or mu in right.generators:
        raise MuNotEligibleError(
            f"mu={mu} is not a non-generator element >= 2 of {right}"
        )
    if gcd(lam, mu) != 1:
        raise NotCoprimeError(f"gcd(lambda, mu) = gcd({lam}, {mu}) != 1")
    scaled = [mu * a for a in left.generators] + [lam * b for b in right.generators]
    glued = make_semigroup(scaled)
    if glued.generators != tuple(sorted(scaled)):
        raise ConsistencyError(
            f"scaled generators {sorted(scaled)} are not minimal in {glued}"
        )
    return glued


def find_gluings(semigroup: NumericalSemigroup) -> list[GluingSplit]:
    """Every split of the minimal generators realizing the semigroup as a gluing.

    Each two-part partition is inspected once, with the part containing the
    smallest generator on the left; results are ordered by size then content
    of the left part.  A split qualifies when both gcds are >= 2 and the
    cross-wise eligibility of lam and mu holds.
    """
    gens = semigroup.generators
    e = len(gens)
    if e < 2:
        return []
    splits = []
    rest = gens[1:]
    for mask in range(2 ** (e - 1) - 1):
        left_part = [gens[0]]
        right_part = []
        for k, a in enumerate(rest):
            if mask >> k & 1:
                left_part.append(a)
            else:
                right_part.append(a)
        mu = 0
        for a in left_part:
            mu = gcd(mu, a)
        lam = 0
        for b in right_part:
            lam = gcd(lam, b)
        if mu < 2 or lam < 2 or gcd(mu, lam) != 1:
            continue
        left_quotient = make_semigroup([a // mu for a in left_part])
        right_quotient = make_semigroup([b // lam for b in right_part])
        # scaled-up minimality forces the quotient generators to be minimal too
        if left_quotient.generators != tuple(a // mu for a in left_part):
            raise ConsistencyError(f"non-minimal left quotient for {left_part}")
        if right_quotient.generators != tuple(b // lam for b in right_part):
            raise ConsistencyError(f"non-minimal right quotient for {right_part}")
        if not contains(left_quotient, lam) or lam in left_quotient.generators:
            continue
        if not contains(right_quotient, mu) or mu in right_quotient.generators:
            continue
        splits.append(
            GluingSplit(
                left_part=tuple(left_part),
                right_part=tuple(right_part),
                mu=mu,
                lam=lam,
                left_quotient=left_quotient,
                right_quotient=right_quotient,
            )
        )
    splits.sort(key=lambda s: (len(s.left_part), s.left_part))
    return splits


def extra_degree(
    glued: NumericalSemigroup,
    left: NumericalSemigroup,
    right: NumericalSemigroup,
    lam: int,
    mu: int,
) -> int:
    """The one relation degree of the gluing not inherited from the sides.

    Computed by multiset subtraction from the actual minimal presentations,
    never assumed equal to lam * mu; membership in lam*mu*N and the lower
    bound lam*mu are checked afterwards.
    """
    remaining = Counter(relation_degrees(glued))
    inherited = [mu * d for d in relation_degrees(left)]
    inherited += [lam * d for d in relation_degrees(right)]
    for d in inherited:
        if remaining[d] <= 0:
            raise ConsistencyError(
                f"degree {d} not inherited by {glued}: have {sorted(remaining.elements())}"
            )
        remaining[d] -= 1
    leftover = sorted(remaining.elements())
    if len(leftover) != 1:
        raise ConsistencyError(
            f"gluing {glued} left degrees {leftover}, expected exactly one"
        )
    extra = leftover[0]
    if extra % (lam * mu) != 0 or extra < lam * mu:
        raise ConsistencyError(
            f"extra degree {extra} of {glued} is no multiple >= {lam * mu}"
        )
    return extra


@lru_cache(maxsize=4096)
def ci_tree(semigroup: NumericalSemigroup) -> CITree | None:
    """A recursive gluing certificate, or None when none exists.

    Splits are tried in the canonical find_gluings order and the first one
    whose two quotients decompose recursively wins; any valid tree certifies
    the same fact, so the choice only pins down determinism.
    """
    if semigroup.embedding_dim == 1:
        return CITree(semigroup=semigroup, split=None, left=None, right=None, extra_degree=None)
    for split in find_gluings(semigroup):
        left = ci_tree(split.left_quotient)
        if left is None:
            continue
        right = ci_tree(split.right_quotient)
        if right is None:
            continue
        d = extra_degree(
            semigroup, split.left_quotient, split.right_quotient, split.lam, split.mu
        )
        return CITree(
            semigroup=semigroup, split=split, left=left, right=right, extra_degree=d
        )
    return None


def is_complete_intersection(semigroup: NumericalSemigroup) -> bool:
    """Whether the minimal presentation has exactly generators - 1 relations.

    Decided by counting, then cross-checked against the existence of a
    gluing tree; the two must agree, and a mismatch is an internal bug,
    not a property of the input.
    """
    by_count = (
        len(minimal_presentation(semigroup).relations)
        == semigroup.embedding_dim - 1
    )
    by_tree = ci_tree(semigroup) is not None
    if by_count != by_tree:
        raise ConsistencyError(
            f"{semigroup}: relation count says ci={by_count}, gluing tree says {by_tree}"
        )
    return by_count


def a_invariant(semigroup: NumericalSemigroup) -> int:
    """sum(relation degrees) - sum(generators), for complete intersections.

    Equals the Frobenius number; callers comparing the two routes rely on
    this function never consulting the Apery side.
    """
    if not is_complete_intersection(semigroup):
        raise NotCompleteIntersectionError(f"{semigroup} is not a complete intersection")
    return sum(relation_degrees(semigroup)) - sum(semigroup.generators)


def three_gen_family(m1: int, m2: int, a: int, b: int, c: int) -> NumericalSemigroup:
    """The three-generator complete intersection <a*m1, a*m2, b*m1 + c*m2>.

    Constraints: m1, m2 >= 2 coprime, a >= 2, b and c nonnegative with
    b + c >= 2, and gcd(a, b*m1 + c*m2) = 1.  Under these the three listed
    generators really are the minimal generating set.
    """
    if m1 < 2 or m2 < 2:
        raise FamilyConstraintError(f"m1, m2 must be >= 2, got {m1}, {m2}")
    if gcd(m1, m2) != 1:
        raise FamilyConstraintError(f"gcd(m1, m2) = {gcd(m1, m2)} != 1")
    if a < 2:
        raise FamilyConstraintError(f"a must be >= 2, got {a}")
    if b < 0 or c < 0 or b + c < 2:
        raise FamilyConstraintError(f"need b, c >= 0 and b + c >= 2, got b={b}, c={c}")
    third = b * m1 + c * m2
    if gcd(a, third) != 1:
        raise FamilyConstraintError(f"gcd(a, b*m1 + c*m2) = gcd({a}, {third}) != 1")
    expected = sorted({a * m1, a * m2, third})
    semigroup = make_semigroup([a * m1, a * m2, third])
    if semigroup.generators != tuple(expected) or semigroup.embedding_dim != 3:
        raise ConsistencyError(
            f"family member {expected} lost minimality: got {semigroup}"
        )
    return semigroup
