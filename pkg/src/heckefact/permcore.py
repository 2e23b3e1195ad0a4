"""Permutations of [n] and integer partitions.

Conventions fixed project-wide:
  - one-line notation: position i (1-based) stores w(i);
  - composition (u o w)(i) = u(w(i));
  - reduced words fold left-to-right through compose, i.e. a word
    [i1, ..., il] stands for s_{i1} o s_{i2} o ... o s_{il}.
"""

from __future__ import annotations

from functools import lru_cache

from .errors import IndexOutOfRange, SizeMismatch


class Permutation:
    """A permutation of [n] in one-line notation (immutable)."""

    __slots__ = ("images",)

    def __init__(self, images):
        images = tuple(int(x) for x in images)
        n = len(images)
        if sorted(images) != list(range(1, n + 1)):
            raise ValueError(f"not a permutation of [{n}]: {images}")
        object.__setattr__(self, "images", images)

    def __setattr__(self, name, value):
        raise AttributeError("Permutation is immutable")

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def __eq__(self, other):
        if not isinstance(other, Permutation):
            return NotImplemented
        return self.images == other.images

    def __hash__(self):
        return hash(self.images)

    def __lt__(self, other):
        return self.images < other.images

    # -- group structure --------------------------------------------------

    def compose(self, other: "Permutation") -> "Permutation":
        """(self o other)(i) = self(other(i))."""
        if self.n != other.n:
            raise SizeMismatch(f"ranks {self.n} and {other.n}")
        return _mk(tuple(self.images[j - 1] for j in other.images))

    def inverse(self) -> "Permutation":
        inv = [0] * self.n
        for i, v in enumerate(self.images, start=1):
            inv[v - 1] = i
        return _mk(tuple(inv))

    def right_mul_s(self, i: int) -> "Permutation":
        """self o s_i: swaps positions i and i+1 of the one-line word."""
        im = list(self.images)
        im[i - 1], im[i] = im[i], im[i - 1]
        return _mk(tuple(im))

    def left_mul_s(self, i: int) -> "Permutation":
        """s_i o self: swaps the values i and i+1."""
        im = list(self.images)
        a, b = im.index(i), im.index(i + 1)
        im[a], im[b] = im[b], im[a]
        return _mk(tuple(im))

    # -- length and words -------------------------------------------------

    def length(self) -> int:
        """Number of inversions."""
        im = self.images
        return sum(1 for i in range(len(im)) for j in range(i + 1, len(im))
                   if im[i] > im[j])

    def has_right_ascent(self, i: int) -> bool:
        """True iff length(self o s_i) > length(self), i.e. w(i) < w(i+1)."""
        return self.images[i - 1] < self.images[i]

    def has_left_ascent(self, i: int) -> bool:
        """True iff length(s_i o self) > length(self): value i sits left of i+1."""
        return self.images.index(i) < self.images.index(i + 1)

    def reduced_word(self):
        """A reduced word for self under the left-to-right folding convention.

        Repeatedly strips a right descent: if w = v o s_i with l(v) < l(w),
        the letter i goes at the END of v's word.
        """
        return reduced_word_cached(self.images)

    # -- cycles -----------------------------------------------------------

    def cycles(self):
        """Disjoint cycles as tuples, each starting at its smallest element."""
        seen = [False] * self.n
        out = []
        for start in range(1, self.n + 1):
            if seen[start - 1]:
                continue
            cyc = []
            j = start
            while not seen[j - 1]:
                seen[j - 1] = True
                cyc.append(j)
                j = self.images[j - 1]
            out.append(tuple(cyc))
        return out

    def cycle_type(self) -> "Partition":
        return Partition(sorted((len(c) for c in self.cycles()), reverse=True))

    def num_cycles(self) -> int:
        return len(self.cycles())

    def is_min_length_in_class(self) -> bool:
        """Minimal length in its conjugacy class: l(w) = n - #cycles."""
        return self.length() == self.n - self.num_cycles()

    # -- rendering --------------------------------------------------------

    def text(self) -> str:
        return ",".join(str(v) for v in self.images)

    def cycle_text(self) -> str:
        return "".join("(" + " ".join(map(str, c)) + ")"
                       for c in self.cycles() if len(c) > 1) or "()"

    def __repr__(self):
        return f"Permutation([{self.text()}])"


def _mk(images) -> Permutation:
    p = Permutation.__new__(Permutation)
    object.__setattr__(p, "images", images)
    return p


@lru_cache(maxsize=None)
def reduced_word_cached(images):
    im = list(images)
    word = []
    changed = True
    while changed:
        changed = False
        for i in range(len(im) - 1):
            if im[i] > im[i + 1]:
                im[i], im[i + 1] = im[i + 1], im[i]
                word.append(i + 1)
                changed = True
    # stripping right descents built the word back-to-front
    word.reverse()
    return tuple(word)


def identity(n: int) -> Permutation:
    return _mk(tuple(range(1, n + 1)))


def long_cycle(n: int) -> Permutation:
    """The n-cycle 1 -> 2 -> ... -> n -> 1, one-line [2,3,...,n,1]."""
    if n < 1:
        raise IndexOutOfRange("long_cycle needs n >= 1")
    return _mk(tuple(range(2, n + 1)) + (1,))


def simple(n: int, i: int) -> Permutation:
    """The adjacent transposition s_i in S_n."""
    if not 1 <= i <= n - 1:
        raise IndexOutOfRange(f"s_{i} not in S_{n}")
    return identity(n).right_mul_s(i)


def transposition(n: int, i: int, j: int) -> Permutation:
    """The transposition (i j) in S_n."""
    if not (1 <= i <= n and 1 <= j <= n and i != j):
        raise IndexOutOfRange(f"({i} {j}) not in S_{n}")
    im = list(range(1, n + 1))
    im[i - 1], im[j - 1] = j, i
    return _mk(tuple(im))


def from_cycles(n: int, cycles) -> Permutation:
    """Build a permutation of [n] from a list of cycles."""
    im = list(range(1, n + 1))
    for cyc in cycles:
        cyc = list(cyc)
        for a, b in zip(cyc, cyc[1:] + cyc[:1]):
            if not 1 <= a <= n:
                raise IndexOutOfRange(f"entry {a} not in [{n}]")
            im[a - 1] = b
    if sorted(im) != list(range(1, n + 1)):
        raise ValueError("cycles overlap")
    return _mk(tuple(im))


def all_permutations(n: int):
    """All permutations of [n]."""
    from itertools import permutations as iperm

    for im in iperm(range(1, n + 1)):
        yield _mk(im)


def permutations_by_cycle_count(n: int, c: int):
    """Yield the permutations of [n] with exactly c disjoint cycles."""
    if not 1 <= c <= n:
        raise IndexOutOfRange(f"cycle count {c} not in [1, {n}]")
    for w in all_permutations(n):
        if w.num_cycles() == c:
            yield w


class Partition:
    """A partition: weakly decreasing positive parts (immutable)."""

    __slots__ = ("parts",)

    def __init__(self, parts):
        parts = tuple(int(p) for p in parts)
        if any(p <= 0 for p in parts):
            raise ValueError(f"parts must be positive: {parts}")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ValueError(f"parts must weakly decrease: {parts}")
        object.__setattr__(self, "parts", parts)

    def __setattr__(self, name, value):
        raise AttributeError("Partition is immutable")

    @property
    def size(self) -> int:
        return sum(self.parts)

    def __len__(self):
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __getitem__(self, i):
        return self.parts[i]

    def __eq__(self, other):
        if not isinstance(other, Partition):
            return NotImplemented
        return self.parts == other.parts

    def __hash__(self):
        return hash(self.parts)

    def conjugate(self) -> "Partition":
        if not self.parts:
            return self
        return Partition([sum(1 for p in self.parts if p > i)
                          for i in range(self.parts[0])])

    def hook_lengths(self):
        """All hook lengths h(i,j) = lam_i + lam'_j - i - j + 1, row-major."""
        conj = self.conjugate().parts
        return [self.parts[i] + conj[j] - i - j - 1
                for i in range(len(self.parts))
                for j in range(self.parts[i])]

    def nlam(self) -> int:
        """n(lam) = sum_i (i-1) * lam_i."""
        return sum(i * p for i, p in enumerate(self.parts))

    def cells(self):
        """The cells (i, j), 1-based, row-major."""
        return [(i + 1, j + 1)
                for i in range(len(self.parts))
                for j in range(self.parts[i])]

    def text(self) -> str:
        return ",".join(str(p) for p in self.parts)

    def __repr__(self):
        return f"Partition([{self.text()}])"


def partitions_of(n: int, max_part=None):
    """All partitions of n, largest part first within each partition."""
    if max_part is None:
        max_part = n
    if n == 0:
        yield Partition([])
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions_of(n - first, first):
            yield Partition((first,) + rest.parts)


def parse_permutation(text: str, n=None) -> Permutation:
    """Parse one-line '2,3,1' or cycle notation '(1 2 3)'."""
    from .errors import ParseError

    text = text.strip()
    if text.startswith("("):
        body = text
        cycles = []
        while body:
            if not body.startswith("("):
                raise ParseError(f"bad cycle notation: {text!r}")
            close = body.find(")")
            if close < 0:
                raise ParseError(f"unbalanced cycle notation: {text!r}")
            inner = body[1:close].replace(",", " ").split()
            try:
                cyc = [int(x) for x in inner]
            except ValueError as exc:
                raise ParseError(f"bad cycle entry in {text!r}") from exc
            if cyc:
                cycles.append(cyc)
            body = body[close + 1:].strip()
        entries = [x for c in cycles for x in c]
        if len(set(entries)) != len(entries):
            raise ParseError(f"repeated entry in cycles: {text!r}")
        size = n if n is not None else (max(entries) if entries else 1)
        try:
            return from_cycles(size, cycles)
        except (IndexOutOfRange, ValueError) as exc:
            raise ParseError(str(exc)) from exc
    try:
        images = [int(x) for x in text.split(",")]
        return Permutation(images)
    except ValueError as exc:
        raise ParseError(f"bad one-line notation: {text!r}") from exc
