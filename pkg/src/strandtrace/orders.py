"""Natural unit interval orders from partitions inside the staircase.

A partition lambda contained in stair(n) = (n-1, n-2, ..., 1) determines a
poset P(lambda) on [n] by ``a < b iff a <= lambda_{n+1-b}``; drawing lambda
in the south-west corner of an n x n square, the pattern class of P(lambda)
can be read off the corners of the shape, and the shape also determines the
strand diagram whose colorings compute the associated symmetric function.
"""

from itertools import combinations

from strandtrace.diagrams import StrandDiagram
from strandtrace.errors import GuardExceededError
from strandtrace.symfun import Partition, partition_sort_key

PATTERN_GUARD = 12
SHAPE_GUARD = 12


class StaircaseShape:
    """A partition contained in stair(n), with the ambient square size n."""

    __slots__ = ("n", "lam")

    def __init__(self, n, lam=()):
        lam = lam if type(lam) is Partition else Partition(lam)
        if n < 1:
            raise ValueError("n must be positive")
        if lam.length > n - 1:
            raise ValueError("partition %r has more than n-1 parts" % (tuple(lam),))
        for i, part in enumerate(lam, start=1):
            if part > n - i:
                raise ValueError(
                    "partition %r is not contained in stair(%d)" % (tuple(lam), n)
                )
        self.n = n
        self.lam = lam

    def part(self, i):
        """lambda_i with zero padding for i beyond the last part."""
        return self.lam[i - 1] if 1 <= i <= self.lam.length else 0

    def __eq__(self, other):
        return (
            isinstance(other, StaircaseShape)
            and self.n == other.n
            and self.lam == other.lam
        )

    def __hash__(self):
        return hash((self.n, self.lam))

    def __repr__(self):
        return "StaircaseShape(n=%d, lam=%s)" % (self.n, tuple(self.lam))


def parse_parts(text):
    """Parse a comma-separated parts string; the empty string is the empty
    partition."""
    text = text.strip()
    if not text:
        return Partition()
    return Partition(int(piece) for piece in text.split(","))


class UIOrder:
    """The natural unit interval order P(lambda) on [n], as an explicit
    strict order relation (``below[b]`` is the set of elements under b)."""

    __slots__ = ("n", "below")

    def __init__(self, n, below):
        self.n = n
        self.below = tuple(below)
        self._check()

    def _check(self):
        if len(self.below) != self.n + 1:
            raise ValueError("below must have one entry per element (1-based)")
        for b in range(1, self.n + 1):
            down = self.below[b]
            if any(a >= b for a in down):
                raise ValueError("labeling is not natural at %d" % b)
            # order-ideal structure: below(b) is an initial segment of [n]
            if down and down != frozenset(range(1, max(down) + 1)):
                raise ValueError("below(%d) is not an initial segment" % b)
        for b in range(1, self.n + 1):
            for a in self.below[b]:
                if not self.below[a] <= self.below[b]:
                    raise ValueError("relation is not transitive at %d < %d" % (a, b))

    def precedes(self, a, b):
        return a in self.below[b]

    def comparable(self, a, b):
        return a in self.below[b] or b in self.below[a]

    def incomparable(self, a, b):
        return a != b and not self.comparable(a, b)

    def __repr__(self):
        rels = [
            "%d<%d" % (a, b)
            for b in range(1, self.n + 1)
            for a in sorted(self.below[b])
        ]
        return "UIOrder(n=%d, {%s})" % (self.n, ", ".join(rels))


class IncompGraph:
    """Incomparability graph: vertices [n], edges between incomparable pairs."""

    __slots__ = ("n", "edges")

    def __init__(self, n, edges):
        self.n = n
        normalized = set()
        for a, b in edges:
            if a == b or not (1 <= a <= n and 1 <= b <= n):
                raise ValueError("bad edge (%r, %r)" % (a, b))
            normalized.add((a, b) if a < b else (b, a))
        self.edges = frozenset(normalized)

    def edge_list(self):
        return sorted(self.edges)

    def to_json_dict(self):
        return {"n": self.n, "edges": [list(edge) for edge in self.edge_list()]}

    def __eq__(self, other):
        return (
            isinstance(other, IncompGraph)
            and self.n == other.n
            and self.edges == other.edges
        )

    def __repr__(self):
        return "IncompGraph(n=%d, edges=%s)" % (self.n, self.edge_list())


def poset_from_lambda(shape):
    """P(lambda): a < b iff a <= lambda_{n+1-b} (parts padded with zeros)."""
    n = shape.n
    below = [frozenset()]
    for b in range(1, n + 1):
        below.append(frozenset(range(1, shape.part(n + 1 - b) + 1)))
    return UIOrder(n, below)


def incomparability_graph(order):
    """Complement of the comparability relation of the order."""
    edges = [
        (a, b)
        for a, b in combinations(range(1, order.n + 1), 2)
        if order.incomparable(a, b)
    ]
    return IncompGraph(order.n, edges)


def avoids_pattern(order, pattern):
    """True iff the order has no induced copy of the disjoint chains with the
    given lengths (exhaustive search over element subsets)."""
    pattern = sorted((int(a) for a in pattern), reverse=True)
    if any(a < 1 for a in pattern):
        raise ValueError("chain lengths must be positive")
    total = sum(pattern)
    if total > PATTERN_GUARD:
        raise GuardExceededError(
            "pattern size %d exceeds the brute-force guard %d" % (total, PATTERN_GUARD)
        )
    if total > order.n:
        return True
    elements = range(1, order.n + 1)
    for support in combinations(elements, total):
        if _embeds_chains(order, list(support), pattern, ()):
            return False
    return True


def _embeds_chains(order, remaining, lengths, placed):
    """Can `remaining` be split into chains of the given lengths, mutually
    incomparable to each other and to the already `placed` elements?"""
    if not lengths:
        return True
    length, rest = lengths[0], lengths[1:]
    for chain in combinations(remaining, length):
        if not all(order.comparable(chain[i], chain[i + 1]) for i in range(length - 1)):
            continue
        if any(order.comparable(x, y) for x in chain for y in placed):
            continue
        leftover = [x for x in remaining if x not in chain]
        if _embeds_chains(order, leftover, rest, placed + chain):
            return True
    return False


def corners_of_shape(shape):
    """(column, row) positions of the NE inner corners of the shape, NW to SE.

    Row 1 is the top of the n x n square; part lambda_i sits in row n+1-i,
    so the corner for each distinct part value is at its topmost occurrence.
    """
    lam, n = shape.lam, shape.n
    corners = []
    for i in range(lam.length, 0, -1):
        nxt = lam[i] if i < lam.length else 0
        if lam[i - 1] > nxt:
            corners.append((lam[i - 1], n + 1 - i))
    return corners


def is_211_avoiding(shape):
    """Whether P(lambda) avoids the pattern 2+1+1.

    Equivalent corner criterion: every corner of the shape is a corner of
    stair(n-1) or of stair(n), i.e. the corner in row r of column c has
    r == c+1 or r == c+2.  Checked against avoids_pattern by the test suite.
    """
    return all(row in (col + 1, col + 2) for col, row in corners_of_shape(shape))


def diagram_from_lambda(shape):
    """The strand diagram of P(lambda).

    Crossings bottom to top: [1, n-l]; one crossing [lambda_{j+1}+1, n-j]
    per outer corner (j with lambda_j > lambda_{j+1}), parsed NW to SE; and
    [lambda_1+1, n].  Size-1 crossings are dropped and consecutive duplicates
    merged (for the empty partition both end crossings coincide at [1, n]).
    """
    lam, n = shape.lam, shape.n
    ell = lam.length
    raw = [(1, n - ell)]
    for j in range(ell - 1, 0, -1):
        if lam[j - 1] > lam[j]:
            raw.append((lam[j] + 1, n - j))
    raw.append(((lam[0] if ell else 0) + 1, n))
    crossings = []
    for i, j in raw:
        if j - i < 1:
            continue
        if crossings and crossings[-1] == (i, j):
            continue
        crossings.append((i, j))
    return StrandDiagram(n, crossings)


def enumerate_shapes(n, which="all"):
    """Yield every lambda inside stair(n) exactly once, in canonical order
    (by size, then reverse-lexicographically); optionally only the
    2+1+1-avoiding ones."""
    if which not in ("all", "211-avoiding"):
        raise ValueError("unknown filter %r" % (which,))
    if n > SHAPE_GUARD:
        raise GuardExceededError(
            "n=%d exceeds the shape enumeration guard %d" % (n, SHAPE_GUARD)
        )

    def grow(position, cap):
        yield ()
        for part in range(1, min(cap, n - position) + 1):
            for rest in grow(position + 1, part):
                yield (part,) + rest

    shapes = sorted(set(grow(1, n - 1)), key=partition_sort_key)
    for parts in shapes:
        shape = StaircaseShape(n, parts)
        if which == "all" or is_211_avoiding(shape):
            yield shape
