"""Free-group words, finite presentations, and finite groups.

Words are kept freely reduced at all times.  Finite groups are plain
multiplication tables validated on construction (identity, inverses, and
associativity via Light's test on a greedily found generating set), with
homomorphism enumeration by backtracking over generator images.

Convention: products read left to right, ``mul(g, h)`` applies ``g``
first, so permutations compose as ``(g*h)(i) = h(g(i))``.
"""

from __future__ import annotations

import itertools
import json
import re
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Sequence


class WordError(ValueError):
    """Rank mismatch or malformed word data."""


class GroupTableError(ValueError):
    """A purported multiplication table is not a group law."""


class WordParseError(ValueError):
    """Malformed word text; carries the offending token."""


# ---------------------------------------------------------------------------
# Free words
# ---------------------------------------------------------------------------


def _free_reduce(letters: Iterable[tuple[int, int]]) -> tuple[tuple[int, int], ...]:
    stack: list[tuple[int, int]] = []
    for index, exponent in letters:
        if stack and stack[-1][0] == index and stack[-1][1] == -exponent:
            stack.pop()
        else:
            stack.append((index, exponent))
    return tuple(stack)


@dataclass(frozen=True)
class FreeWord:
    """A freely reduced word in the free group on ``rank`` generators.

    Letters are pairs ``(generator index, exponent)`` with 1-based indices
    and exponents +1 or -1; the empty tuple is the identity.  Construction
    reduces the letter sequence, so adjacent inverse pairs never survive.
    """

    rank: int
    letters: tuple[tuple[int, int], ...] = ()

    def __post_init__(self) -> None:
        if self.rank < 0:
            raise WordError("rank must be non-negative")
        for index, exponent in self.letters:
            if not 1 <= index <= self.rank:
                raise WordError(f"letter index {index} outside 1..{self.rank}")
            if exponent not in (1, -1):
                raise WordError(f"letter exponent must be +1 or -1, got {exponent}")
        object.__setattr__(self, "letters", _free_reduce(self.letters))

    @staticmethod
    def identity(rank: int) -> "FreeWord":
        return FreeWord(rank, ())

    @staticmethod
    def generator(rank: int, index: int, exponent: int = 1) -> "FreeWord":
        if exponent == 0:
            return FreeWord.identity(rank)
        sign = 1 if exponent > 0 else -1
        return FreeWord(rank, ((index, sign),) * abs(exponent))

    def is_identity(self) -> bool:
        return not self.letters

    def __len__(self) -> int:
        return len(self.letters)

    def __mul__(self, other: "FreeWord") -> "FreeWord":
        if self.rank != other.rank:
            raise WordError(f"rank mismatch: {self.rank} vs {other.rank}")
        return FreeWord(self.rank, self.letters + other.letters)

    def inverse(self) -> "FreeWord":
        return FreeWord(self.rank, tuple((i, -e) for i, e in reversed(self.letters)))

    def substitute(
        self, images: Sequence["FreeWord"], rank: int | None = None
    ) -> "FreeWord":
        """Replace generator ``i`` by ``images[i-1]`` (inverted under negative letters).

        All images must share one rank, which becomes the rank of the
        result; for a rank-0 word the target ``rank`` must be passed since
        there is no image to infer it from.
        """
        if len(images) != self.rank:
            raise WordError(
                f"substitution needs {self.rank} images, got {len(images)}"
            )
        ranks = {w.rank for w in images}
        if rank is not None:
            ranks.add(rank)
        if not ranks:
            raise WordError("target rank is required when substituting with no images")
        if len(ranks) != 1:
            raise WordError("substitution images have unequal ranks")
        target = ranks.pop()
        if self.rank == 0:
            return FreeWord(target)
        letters: list[tuple[int, int]] = []
        for index, exponent in self.letters:
            image = images[index - 1] if exponent == 1 else images[index - 1].inverse()
            letters.extend(image.letters)
        return FreeWord(target, tuple(letters))

    def shift(self, offset: int, rank: int) -> "FreeWord":
        """The same word with letter indices moved up by ``offset`` inside rank ``rank``."""
        return FreeWord(rank, tuple((i + offset, e) for i, e in self.letters))

    def occurrences(self, index: int) -> list[int]:
        return [p for p, (i, _) in enumerate(self.letters) if i == index]

    def __str__(self) -> str:
        return format_word(self)


_WORD_TOKEN = re.compile(r"^(?P<name>[A-Za-z_][A-Za-z0-9_]*)(?:\^(?P<exp>-?\d+))?$")


def parse_word(text: str, names: Sequence[str]) -> FreeWord:
    """Parse space-separated ``name`` / ``name^k`` tokens over the alphabet ``names``.

    The token ``e`` denotes the identity when no generator shadows it.
    """
    rank = len(names)
    positions = {name: i + 1 for i, name in enumerate(names)}
    letters: list[tuple[int, int]] = []
    for token in text.split():
        if token == "e" and "e" not in positions:
            continue
        match = _WORD_TOKEN.match(token)
        if match is None:
            raise WordParseError(f"bad word token {token!r}")
        name = match.group("name")
        if name not in positions:
            raise WordParseError(f"unknown generator {name!r}")
        exponent = int(match.group("exp")) if match.group("exp") else 1
        sign = 1 if exponent > 0 else -1
        letters.extend(((positions[name], sign),) * abs(exponent))
    return FreeWord(rank, tuple(letters))


def format_word(word: FreeWord, names: Sequence[str] | None = None) -> str:
    """Render a word with runs collapsed (``x1^2 x2^-1``); identity prints as ``e``."""
    if names is None:
        names = [f"x{i}" for i in range(1, word.rank + 1)]
    if not word.letters:
        return "e"
    runs: list[tuple[int, int]] = []
    for index, exponent in word.letters:
        if runs and runs[-1][0] == index and (runs[-1][1] > 0) == (exponent > 0):
            runs[-1] = (index, runs[-1][1] + exponent)
        else:
            runs.append((index, exponent))
    return " ".join(
        names[i - 1] if e == 1 else f"{names[i - 1]}^{e}" for i, e in runs
    )


# ---------------------------------------------------------------------------
# Presentations
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class GroupPresentation:
    """A finitely presented group: named generators and relator words.

    Each relator ``r`` imposes ``r = e``; the empty relator list presents
    a free group.
    """

    generators: tuple[str, ...]
    relators: tuple[FreeWord, ...] = ()

    def __post_init__(self) -> None:
        if len(set(self.generators)) != len(self.generators):
            raise ValueError("generator names must be distinct")
        for r in self.relators:
            if r.rank != len(self.generators):
                raise WordError("relator rank does not match generator count")

    @property
    def n_generators(self) -> int:
        return len(self.generators)

    @staticmethod
    def free(n: int) -> "GroupPresentation":
        return GroupPresentation(tuple(f"x{i}" for i in range(1, n + 1)), ())

    @staticmethod
    def from_json(data) -> "GroupPresentation":
        if isinstance(data, (str, Path)):
            data = json.loads(Path(data).read_text())
        generators = tuple(data["generators"])
        relators = tuple(
            parse_word(text, generators) for text in data.get("relators", [])
        )
        return GroupPresentation(generators, relators)

    def to_json(self) -> dict:
        return {
            "generators": list(self.generators),
            "relators": [format_word(r, self.generators) for r in self.relators],
        }


# ---------------------------------------------------------------------------
# Finite groups
# ---------------------------------------------------------------------------


def _closure(table: Sequence[Sequence[int]], seed: set[int]) -> set[int]:
    current = set(seed)
    frontier = set(seed)
    while frontier:
        fresh: set[int] = set()
        for a in frontier:
            for b in current:
                for c in (table[a][b], table[b][a]):
                    if c not in current:
                        fresh.add(c)
        current |= fresh
        frontier = fresh
    return current


@dataclass(frozen=True)
class FiniteGroup:
    """A finite group as a validated multiplication table.

    ``table[a][b]`` is the product "a then b".  ``names`` are display
    labels only; all computation happens on indices.
    """

    order: int
    table: tuple[tuple[int, ...], ...]
    identity: int
    inverses: tuple[int, ...]
    names: tuple[str, ...]

    @staticmethod
    def from_table(
        table: Sequence[Sequence[int]], names: Sequence[str] | None = None
    ) -> "FiniteGroup":
        n = len(table)
        if n == 0:
            raise GroupTableError("empty table")
        rows = tuple(tuple(row) for row in table)
        for row in rows:
            if len(row) != n or any(not 0 <= x < n for x in row):
                raise GroupTableError("table is not square over element indices")

        identity = next(
            (
                e
                for e in range(n)
                if all(rows[e][a] == a and rows[a][e] == a for a in range(n))
            ),
            None,
        )
        if identity is None:
            raise GroupTableError("table has no two-sided identity")

        inverses = []
        for a in range(n):
            inverse = next(
                (b for b in range(n) if rows[a][b] == identity and rows[b][a] == identity),
                None,
            )
            if inverse is None:
                raise GroupTableError(f"element {a} has no two-sided inverse")
            inverses.append(inverse)

        # Light's associativity test: full associativity follows from
        # associativity of all triples (a, t, b) with t in a generating set.
        generators: list[int] = []
        reached = {identity}
        for a in range(n):
            if a not in reached:
                generators.append(a)
                reached = _closure(rows, reached | {a})
        for t in generators:
            for a in range(n):
                row_at = rows[a][t]
                for b in range(n):
                    if rows[row_at][b] != rows[a][rows[t][b]]:
                        raise GroupTableError(
                            f"associativity fails at ({a}, {t}, {b})"
                        )

        if names is None:
            names = tuple(str(i) for i in range(n))
        else:
            names = tuple(names)
            if len(names) != n:
                raise GroupTableError("wrong number of element names")
        return FiniteGroup(n, rows, identity, tuple(inverses), names)

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def inverse(self, a: int) -> int:
        return self.inverses[a]

    def power(self, a: int, k: int) -> int:
        if k < 0:
            return self.power(self.inverses[a], -k)
        result = self.identity
        for _ in range(k):
            result = self.table[result][a]
        return result

    def element_order(self, a: int) -> int:
        k, x = 1, a
        while x != self.identity:
            x = self.table[x][a]
            k += 1
        return k


def _cycle_notation(perm: tuple[int, ...]) -> str:
    seen = [False] * len(perm)
    cycles = []
    for start in range(len(perm)):
        if seen[start] or perm[start] == start:
            seen[start] = True
            continue
        cycle = [start]
        seen[start] = True
        nxt = perm[start]
        while nxt != start:
            cycle.append(nxt)
            seen[nxt] = True
            nxt = perm[nxt]
        cycles.append("(" + " ".join(str(x) for x in cycle) + ")")
    return "".join(cycles) if cycles else "e"


def cyclic_group(k: int) -> FiniteGroup:
    if k < 1:
        raise GroupTableError("cyclic group order must be at least 1")
    table = [[(a + b) % k for b in range(k)] for a in range(k)]
    return FiniteGroup.from_table(table, [f"g^{i}" for i in range(k)])


def symmetric_group(k: int) -> FiniteGroup:
    """S_k on {0..k-1}; elements in lexicographic one-line order, k <= 6."""
    if not 1 <= k <= 6:
        raise GroupTableError("symmetric group supported for 1 <= k <= 6")
    elements = sorted(itertools.permutations(range(k)))
    position = {p: i for i, p in enumerate(elements)}
    table = [
        [position[tuple(q[p[i]] for i in range(k))] for q in elements]
        for p in elements
    ]
    return FiniteGroup.from_table(table, [_cycle_notation(p) for p in elements])


def make_finite_group(spec) -> FiniteGroup:
    """Build a finite group from a spec string or an explicit-table JSON file.

    Accepted forms: ``cyclic:k``, ``sym:k``, or a path to JSON
    ``{"table": [[...]], "names": [...]}``.
    """
    if isinstance(spec, FiniteGroup):
        return spec
    text = str(spec)
    if text.startswith("cyclic:"):
        return cyclic_group(int(text.split(":", 1)[1]))
    if text.startswith("sym:"):
        return symmetric_group(int(text.split(":", 1)[1]))
    path = Path(text)
    if not path.exists():
        raise GroupTableError(f"unknown finite group spec {text!r}")
    data = json.loads(path.read_text())
    return FiniteGroup.from_table(data["table"], data.get("names"))


# ---------------------------------------------------------------------------
# Word evaluation and homomorphism enumeration
# ---------------------------------------------------------------------------


def evaluate_word(word: FreeWord, images: Sequence[int], group: FiniteGroup) -> int:
    """Product of the images along the word; identity for the empty word."""
    if len(images) != word.rank:
        raise WordError(
            f"word of rank {word.rank} needs {word.rank} images, got {len(images)}"
        )
    result = group.identity
    for index, exponent in word.letters:
        factor = images[index - 1]
        if exponent == -1:
            factor = group.inverses[factor]
        result = group.table[result][factor]
    return result


def enumerate_homs(
    source: GroupPresentation, target: FiniteGroup
) -> list[tuple[int, ...]]:
    """All homomorphisms source -> target as tuples of generator images.

    Backtracking over generator images in index order with relator pruning:
    a relator is checked as soon as every generator it mentions has an
    image.  The output is in lexicographic order of image index tuples,
    and contains exactly the tuples killing every relator.
    """
    n = source.n_generators
    by_depth: dict[int, list[FreeWord]] = {d: [] for d in range(n + 1)}
    for relator in source.relators:
        depth = max((i for i, _ in relator.letters), default=0)
        by_depth[depth].append(relator)

    results: list[tuple[int, ...]] = []
    images: list[int] = []

    def extend(depth: int) -> None:
        if depth == n:
            results.append(tuple(images))
            return
        for candidate in range(target.order):
            images.append(candidate)
            ok = all(
                evaluate_word(r, images + [0] * (n - depth - 1), target)
                == target.identity
                for r in by_depth[depth + 1]
            )
            if ok:
                extend(depth + 1)
            images.pop()

    if all(
        evaluate_word(r, [0] * n, target) == target.identity for r in by_depth[0]
    ):
        extend(0)
    return results
