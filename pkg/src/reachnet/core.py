"""Domain types, tuple algebra, and the text serialization format.

Positions are 1-based throughout.  A network is a ground-set size ``n``
plus an ordered sequence of transpositions; counters start on positions
1..t and a subsequence of the network moves them around.  The convention
is fixed once and for all: transpositions act on counter *positions*, and
the first transposition of a subsequence is applied first.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Sequence, Union

from .errors import ParseError

FORMAT_VERSION = "reachnet 1"

# A counter tuple (x_1, ..., x_t): entry j is the position of counter j.
CounterTuple = tuple[int, ...]
TupleSet = set[CounterTuple]
Distribution = dict[CounterTuple, Fraction]


@dataclass(frozen=True, order=True)
class Transposition:
    """Unordered pair of distinct positions, stored canonically with a < b."""

    a: int
    b: int

    def __post_init__(self) -> None:
        a, b = self.a, self.b
        if a == b:
            raise ValueError(f"transposition endpoints must differ, got ({a}, {b})")
        if min(a, b) < 1:
            raise ValueError(f"positions are 1-based, got ({a}, {b})")
        if a > b:
            object.__setattr__(self, "a", b)
            object.__setattr__(self, "b", a)

    def __iter__(self) -> Iterator[int]:
        return iter((self.a, self.b))

    @property
    def is_star(self) -> bool:
        return self.a == 1

    def __repr__(self) -> str:
        return f"({self.a},{self.b})"


@dataclass(frozen=True)
class Network:
    """Ground-set size plus an ordered transposition sequence."""

    n: int
    seq: tuple[Transposition, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "seq", tuple(self.seq))
        if self.n < 1:
            raise ValueError(f"ground-set size must be >= 1, got {self.n}")
        for tau in self.seq:
            if tau.b > self.n:
                raise ValueError(f"transposition {tau} exceeds ground set [{self.n}]")

    @classmethod
    def from_pairs(cls, n: int, pairs: Iterable[tuple[int, int]]) -> "Network":
        return cls(n, tuple(Transposition(a, b) for a, b in pairs))

    @property
    def is_star(self) -> bool:
        return all(tau.a == 1 for tau in self.seq)

    def __len__(self) -> int:
        return len(self.seq)


@dataclass(frozen=True, order=True)
class LazyTransposition:
    """Transposition that fires with an exact rational probability p."""

    a: int
    b: int
    p: Fraction

    def __post_init__(self) -> None:
        a, b = self.a, self.b
        if a == b:
            raise ValueError(f"transposition endpoints must differ, got ({a}, {b})")
        if min(a, b) < 1:
            raise ValueError(f"positions are 1-based, got ({a}, {b})")
        if a > b:
            object.__setattr__(self, "a", b)
            object.__setattr__(self, "b", a)
        p = Fraction(self.p)
        object.__setattr__(self, "p", p)
        if not 0 <= p <= 1:
            raise ValueError(f"firing probability must lie in [0, 1], got {p}")

    @property
    def is_star(self) -> bool:
        return self.a == 1

    def __repr__(self) -> str:
        return f"({self.a},{self.b},{self.p})"


@dataclass(frozen=True)
class LazyNetwork:
    """Ordered sequence of independent lazy transpositions."""

    n: int
    seq: tuple[LazyTransposition, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "seq", tuple(self.seq))
        if self.n < 1:
            raise ValueError(f"ground-set size must be >= 1, got {self.n}")
        for tau in self.seq:
            if tau.b > self.n:
                raise ValueError(f"transposition {tau} exceeds ground set [{self.n}]")

    @classmethod
    def from_triples(
        cls, n: int, triples: Iterable[tuple[int, int, Union[Fraction, int, str]]]
    ) -> "LazyNetwork":
        return cls(n, tuple(LazyTransposition(a, b, Fraction(p)) for a, b, p in triples))

    def strip(self) -> Network:
        """Drop probabilities, keeping the bare transposition sequence."""
        return Network(self.n, tuple(Transposition(t.a, t.b) for t in self.seq))

    @property
    def is_star(self) -> bool:
        return all(tau.a == 1 for tau in self.seq)

    def __len__(self) -> int:
        return len(self.seq)


AnyNetwork = Union[Network, LazyNetwork]


def apply_transposition(tau: Transposition, x: CounterTuple) -> CounterTuple:
    """Image of a counter tuple under one transposition.

    Every entry equal to one endpoint becomes the other; applying the same
    transposition twice is the identity.
    """
    a, b = tau.a, tau.b
    return tuple(b if e == a else a if e == b else e for e in x)


def compose_subsequence(net: Network, mask: Iterable[int]) -> tuple[int, ...]:
    """Composite permutation of the selected transpositions, applied in order.

    ``mask`` is a set of distinct 1-based indices into ``net.seq``; the
    selected transpositions keep their sequence order.  Returns the full
    permutation as a tuple p with p[j-1] = final position of the counter
    that starts on position j.  An empty mask gives the identity.
    """
    indices = sorted(mask)
    for prev, idx in zip(indices, indices[1:]):
        if idx == prev:
            raise ValueError(f"mask index {idx} selected twice")
    n = net.n
    pos = list(range(n + 1))  # pos[j] = current position of counter j
    arr = list(range(n + 1))  # arr[p] = counter currently on position p
    for idx in indices:
        if not 1 <= idx <= len(net.seq):
            raise IndexError(f"mask index {idx} out of range 1..{len(net.seq)}")
        tau = net.seq[idx - 1]
        ca, cb = arr[tau.a], arr[tau.b]
        arr[tau.a], arr[tau.b] = cb, ca
        pos[ca], pos[cb] = tau.b, tau.a
    return tuple(pos[1:])


def start_tuple(t: int) -> CounterTuple:
    """Initial arrangement: counter j on position j."""
    return tuple(range(1, t + 1))


def encode_tuple(x: CounterTuple, n: int) -> int:
    """Mixed-radix (base n, big-endian) encoding of a counter tuple.

    The encoding is a bijection from [n]^t onto 0..n^t-1 that preserves
    lexicographic order, so frontier sets can be kept as sorted integers.
    """
    code = 0
    for e in x:
        code = code * n + (e - 1)
    return code


def decode_tuple(code: int, n: int, t: int) -> CounterTuple:
    out = [0] * t
    for i in range(t - 1, -1, -1):
        code, d = divmod(code, n)
        out[i] = d + 1
    return tuple(out)


# ---------------------------------------------------------------------------
# Text format
# ---------------------------------------------------------------------------


def render_network(net: AnyNetwork, comments: Sequence[str] = ()) -> str:
    """Serialize a plain or lazy network to the line-oriented text format.

    Comment strings are emitted right after the version line, prefixed
    with ``# `` unless already marked.
    """
    lines = [FORMAT_VERSION]
    for c in comments:
        lines.append(c if c.startswith("#") else f"# {c}")
    lines.append(f"n {net.n}")
    if isinstance(net, LazyNetwork):
        lines.append("kind lazy")
        for tau in net.seq:
            p = tau.p
            lines.append(f"{tau.a} {tau.b} {p.numerator}/{p.denominator}")
    else:
        lines.append("kind plain")
        for tau in net.seq:
            lines.append(f"{tau.a} {tau.b}")
    return "\n".join(lines) + "\n"


def parse_network(text: str) -> AnyNetwork:
    """Parse the text format back into a Network or LazyNetwork."""
    items: list[tuple[int, list[str]]] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        items.append((lineno, line.split()))

    def fail(lineno: int, msg: str) -> ParseError:
        return ParseError(f"line {lineno}: {msg}")

    if not items:
        raise ParseError("empty input")
    it = iter(items)

    lineno, tok = next(it)
    if tok != ["reachnet", "1"]:
        raise fail(lineno, f"expected '{FORMAT_VERSION}' header, got {' '.join(tok)!r}")

    try:
        lineno, tok = next(it)
    except StopIteration:
        raise ParseError("missing 'n <n>' line") from None
    if len(tok) != 2 or tok[0] != "n":
        raise fail(lineno, f"expected 'n <n>', got {' '.join(tok)!r}")
    try:
        n = int(tok[1])
    except ValueError:
        raise fail(lineno, f"bad ground-set size {tok[1]!r}") from None

    try:
        lineno, tok = next(it)
    except StopIteration:
        raise ParseError("missing 'kind plain|lazy' line") from None
    if len(tok) != 2 or tok[0] != "kind" or tok[1] not in ("plain", "lazy"):
        raise fail(lineno, f"expected 'kind plain|lazy', got {' '.join(tok)!r}")
    lazy = tok[1] == "lazy"

    plain_seq: list[Transposition] = []
    lazy_seq: list[LazyTransposition] = []
    for lineno, tok in it:
        try:
            if lazy:
                if len(tok) != 3:
                    raise fail(lineno, "lazy entries need '<a> <b> <num>/<den>'")
                lazy_seq.append(LazyTransposition(int(tok[0]), int(tok[1]), Fraction(tok[2])))
            else:
                if len(tok) != 2:
                    raise fail(lineno, "plain entries need '<a> <b>'")
                plain_seq.append(Transposition(int(tok[0]), int(tok[1])))
        except (ValueError, ZeroDivisionError) as exc:
            if isinstance(exc, ParseError):
                raise
            raise fail(lineno, str(exc)) from None

    try:
        if lazy:
            return LazyNetwork(n, tuple(lazy_seq))
        return Network(n, tuple(plain_seq))
    except ValueError as exc:
        raise ParseError(str(exc)) from None
