"""Exact symmetric functions in the power-sum, complete homogeneous and
elementary bases.

Everything is a finite Q-linear combination of basis elements indexed by
integer partitions, with coefficients kept as exact ``fractions.Fraction``
values.  All three bases are multiplicative, so products merge index
partitions by sorted concatenation.  Conversions run through the Newton
recurrence (p <-> h) and the omega involution (h <-> e) and are exact in
both directions.

Conventions (used consistently by callers):
  * ``h(m) == 0`` for m < 0 and ``h(0) == 1``,
  * ``p(0) == 1`` (the empty power sum acts as the unit).
"""

from collections import Counter
from fractions import Fraction
from functools import lru_cache
from math import factorial

BASES = ("p", "h", "e")


class Partition(tuple):
    """Integer partition: a weakly decreasing tuple of positive integers.

    The constructor sorts its input, so equal partitions always compare
    (and hash) equal.  The empty partition is ``Partition()``.
    """

    __slots__ = ()

    def __new__(cls, parts=()):
        parts = tuple(sorted((int(x) for x in parts), reverse=True))
        if parts and parts[-1] <= 0:
            raise ValueError("partition parts must be positive: %r" % (parts,))
        return super().__new__(cls, parts)

    @property
    def size(self):
        return sum(self)

    @property
    def length(self):
        return len(self)

    def multiplicities(self):
        """Map part value -> number of occurrences."""
        return Counter(self)

    def __repr__(self):
        return "Partition(%s)" % (tuple(self),)


def partition_sort_key(lam):
    """Canonical term order: by size, then reverse-lexicographically.

    Within one degree this puts (4) before (3,1) before (2,2) before
    (2,1,1) before (1,1,1,1).
    """
    return (sum(lam), tuple(-p for p in lam))


def partitions_of(n, max_part=None):
    """Yield all partitions of n (parts bounded by max_part), largest first."""
    if max_part is None or max_part > n:
        max_part = n
    if n == 0:
        yield Partition()
        return
    for first in range(max_part, 0, -1):
        for rest in partitions_of(n - first, first):
            yield Partition((first,) + tuple(rest))


def z_value(lam):
    """Centralizer size z_lambda = prod_i i^{d_i} d_i! (d_i = multiplicity of i)."""
    z = 1
    for part, d in Partition(lam).multiplicities().items():
        z *= part**d * factorial(d)
    return z


class SymFun:
    """Sparse basis-tagged symmetric function with Fraction coefficients.

    Immutable by convention: no method mutates ``self``; do not modify the
    mapping returned by ``coefficients()``.
    """

    __slots__ = ("basis", "_terms")

    def __init__(self, basis, terms=()):
        if basis not in BASES:
            raise ValueError("unknown basis %r (expected one of %s)" % (basis, BASES))
        table = {}
        items = terms.items() if hasattr(terms, "items") else terms
        for lam, coeff in items:
            lam = lam if type(lam) is Partition else Partition(lam)
            coeff = Fraction(coeff)
            if coeff:
                new = table.get(lam, 0) + coeff
                if new:
                    table[lam] = new
                elif lam in table:
                    del table[lam]
        object.__setattr__(self, "basis", basis)
        object.__setattr__(self, "_terms", table)

    def __setattr__(self, name, value):
        raise AttributeError("SymFun is immutable")

    # -- inspection ------------------------------------------------------

    def terms(self):
        """Term list [(partition, coeff)] in canonical order."""
        return sorted(self._terms.items(), key=lambda kv: partition_sort_key(kv[0]))

    def coefficients(self):
        """The raw partition -> coefficient table (do not mutate)."""
        return self._terms

    def coefficient(self, lam):
        return self._terms.get(Partition(lam), Fraction(0))

    def is_zero(self):
        return not self._terms

    def homogeneous_degree(self):
        """Common degree of all terms; None for zero, ValueError if mixed."""
        degrees = {lam.size for lam in self._terms}
        if not degrees:
            return None
        if len(degrees) > 1:
            raise ValueError("inhomogeneous symmetric function: degrees %s" % sorted(degrees))
        return degrees.pop()

    # -- ring structure --------------------------------------------------

    def _require_same_basis(self, other):
        if self.basis != other.basis:
            raise ValueError("basis mismatch: %s vs %s" % (self.basis, other.basis))

    def __add__(self, other):
        if not isinstance(other, SymFun):
            return NotImplemented
        self._require_same_basis(other)
        table = dict(self._terms)
        for lam, c in other._terms.items():
            new = table.get(lam, 0) + c
            if new:
                table[lam] = new
            elif lam in table:
                del table[lam]
        return SymFun(self.basis, table)

    def __neg__(self):
        return SymFun(self.basis, {lam: -c for lam, c in self._terms.items()})

    def __sub__(self, other):
        if not isinstance(other, SymFun):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, SymFun):
            self._require_same_basis(other)
            table = {}
            for lam, a in self._terms.items():
                for mu, b in other._terms.items():
                    key = Partition(tuple(lam) + tuple(mu))
                    new = table.get(key, 0) + a * b
                    if new:
                        table[key] = new
                    elif key in table:
                        del table[key]
            return SymFun(self.basis, table)
        if isinstance(other, (int, Fraction)):
            return SymFun(self.basis, {lam: c * other for lam, c in self._terms.items()})
        return NotImplemented

    __rmul__ = __mul__

    def __eq__(self, other):
        return (
            isinstance(other, SymFun)
            and self.basis == other.basis
            and self._terms == other._terms
        )

    def __ne__(self, other):
        return not self == other

    def __repr__(self):
        if not self._terms:
            return "SymFun(%r, 0)" % self.basis
        body = " + ".join(
            "%s*%s[%s]" % (c, self.basis, ",".join(map(str, lam)))
            for lam, c in self.terms()
        )
        return "SymFun(%s)" % body

    # -- constructors ----------------------------------------------------

    @classmethod
    def zero(cls, basis):
        return cls(basis, ())

    @classmethod
    def one(cls, basis):
        return cls(basis, {Partition(): Fraction(1)})


def p(index):
    """p_index.  An int means a single part; p(0) is the unit (p_0 = 1)."""
    return _single("p", index)


def h(index):
    """h_index.  An int means a single part; h(0) = 1 and h(m) = 0 for m < 0."""
    return _single("h", index)


def e(index):
    """e_index, same index conventions as h."""
    return _single("e", index)


def _single(basis, index):
    if isinstance(index, int):
        if index < 0:
            if basis == "p":
                raise ValueError("negative power sum index %d" % index)
            return SymFun.zero(basis)
        index = (index,) if index > 0 else ()
    return SymFun(basis, {Partition(index): Fraction(1)})


def multiply(f, g):
    """Product of two SymFun values in the same (multiplicative) basis."""
    return f * g


# -- basis conversion ----------------------------------------------------


@lru_cache(maxsize=None)
def _h_part_in_p(m):
    """h_m expanded in the power-sum basis: sum over lambda |- m of p_lambda / z_lambda."""
    return SymFun("p", {lam: Fraction(1, z_value(lam)) for lam in partitions_of(m)})


@lru_cache(maxsize=None)
def _p_part_in_h(m):
    """p_m expanded in the h basis via p_m = m h_m - sum_{j<m} h_{m-j} p_j."""
    acc = SymFun("h", {Partition((m,)): Fraction(m)})
    for j in range(1, m):
        acc = acc - h(m - j) * _p_part_in_h(j)
    return acc


@lru_cache(maxsize=None)
def _h_index_in_p(mu):
    out = SymFun.one("p")
    for m in mu:
        out = out * _h_part_in_p(m)
    return out


@lru_cache(maxsize=None)
def _p_index_in_h(mu):
    out = SymFun.one("h")
    for m in mu:
        out = out * _p_part_in_h(m)
    return out


def _expand(f, index_expansion, target):
    acc = SymFun.zero(target)
    for lam, c in f.coefficients().items():
        acc = acc + c * index_expansion(lam)
    return acc


def _omega_sign(lam):
    return -1 if (lam.size - lam.length) % 2 else 1


def omega(f):
    """The involution omega: swaps the h and e tags; on the p basis it
    scales p_lambda by (-1)^(|lambda| - l(lambda))."""
    if f.basis == "p":
        return SymFun("p", {lam: _omega_sign(lam) * c for lam, c in f.coefficients().items()})
    return SymFun("e" if f.basis == "h" else "h", f.coefficients())


def _to_p(f):
    if f.basis == "p":
        return f
    if f.basis == "h":
        return _expand(f, _h_index_in_p, "p")
    # e_mu = omega(h_mu), so expand the retagged function and flip signs
    return omega(_expand(SymFun("h", f.coefficients()), _h_index_in_p, "p"))


def _to_h(f):
    if f.basis == "h":
        return f
    if f.basis == "p":
        return _expand(f, _p_index_in_h, "h")
    return _to_h(_to_p(f))


def to_basis(f, target):
    """Rewrite f exactly in the target basis ("p", "h" or "e")."""
    if target not in BASES:
        raise ValueError("unknown basis %r" % (target,))
    if target == f.basis:
        return f
    if target == "p":
        return _to_p(f)
    if target == "h":
        return _to_h(f)
    # coefficients of f on e_mu are the h-coefficients of omega(f)
    return SymFun("e", _to_h(omega(f)).coefficients())


# -- positivity, evaluation, identities -----------------------------------


class HPositivity:
    """Verdict of an h-positivity check.

    ``coefficients`` is the full h-basis expansion; ``witness`` is the
    lexicographically smallest partition carrying a negative coefficient
    (with that coefficient), or None when positive.
    """

    __slots__ = ("positive", "coefficients", "witness")

    def __init__(self, positive, coefficients, witness):
        self.positive = positive
        self.coefficients = coefficients
        self.witness = witness

    def __bool__(self):
        return self.positive

    def __repr__(self):
        if self.positive:
            return "HPositivity(positive)"
        return "HPositivity(negative at %r -> %s)" % (self.witness[0], self.witness[1])


def is_h_positive(f):
    """Convert to the h basis and certify nonnegativity of all coefficients."""
    fh = to_basis(f, "h")
    negatives = [lam for lam, c in fh.coefficients().items() if c < 0]
    if not negatives:
        return HPositivity(True, fh, None)
    worst = min(negatives, key=tuple)
    return HPositivity(False, fh, (worst, fh.coefficient(worst)))


def specialize_ones(f, m):
    """Evaluate at x_1 = ... = x_m = 1, all other variables 0.

    Converts to the power-sum basis first; there p_lambda |-> m^(l(lambda)).
    """
    if m <= 0:
        raise ValueError("m must be positive")
    fp = _to_p(f)
    return sum((c * m**lam.length for lam, c in fp.coefficients().items()), Fraction(0))


def double_sum_identity_check(a, b):
    """Check sum_{i<=a, j<=b} h_{a-i} h_{b-j} p_{i+j}
    == (b+1) h_a h_b + sum_{i=1}^{a} (b-a+2i) h_{a-i} h_{b+i}
    symbolically in the p basis (with p_0 = 1)."""
    if a < 0 or b < 0:
        raise ValueError("a, b must be nonnegative")
    lhs = SymFun.zero("p")
    for i in range(a + 1):
        for j in range(b + 1):
            term = _to_p(h(a - i)) * _to_p(h(b - j))
            if i + j > 0:
                term = term * p(i + j)
            lhs = lhs + term
    rhs = (b + 1) * (_to_p(h(a)) * _to_p(h(b)))
    for i in range(1, a + 1):
        rhs = rhs + (b - a + 2 * i) * (_to_p(h(a - i)) * _to_p(h(b + i)))
    return lhs == rhs


# -- serialization ---------------------------------------------------------


def to_json_dict(f):
    """Canonical JSON form: terms in canonical order, coefficients as exact
    fraction strings."""
    return {
        "basis": f.basis,
        "terms": [
            {"partition": list(lam), "coeff": str(c)} for lam, c in f.terms()
        ],
    }


def from_json_dict(d):
    return SymFun(
        d["basis"],
        [(Partition(t["partition"]), Fraction(t["coeff"])) for t in d["terms"]],
    )
