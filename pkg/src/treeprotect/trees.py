"""Plane trees, protection numbers, and the exhaustive enumeration oracle.

A plane tree is a rooted tree whose children are linearly ordered.  The
protection number of a vertex is the distance from that vertex to the
nearest leaf inside its own subtree: 0 for a leaf, otherwise one more than
the smallest protection number among its children.  The protection number
of a tree means the protection number of its root.

This module is the ground truth for everything else in the package: it
enumerates every plane tree up to a size bound and counts protection
numbers directly, so the generating-function and asymptotic routes can be
checked against brute force.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

DEFAULT_ORACLE_BOUND = 14


class OracleBoundError(ValueError):
    """Raised when an exhaustive-enumeration request exceeds the size bound."""


class PlaneTree:
    """Immutable rooted tree with ordered children; a leaf has none."""

    __slots__ = ("children",)

    def __init__(self, children: tuple["PlaneTree", ...] = ()):
        self.children = tuple(children)

    @classmethod
    def leaf(cls) -> "PlaneTree":
        return cls(())

    @classmethod
    def from_parens(cls, text: str) -> "PlaneTree":
        """Parse the balanced-parenthesis form: "(" + children + ")".

        A single vertex is "()".  Parsing is iterative, so deep path-like
        trees are fine.
        """
        if not text:
            raise ValueError("empty tree text")
        stack: list[list[PlaneTree]] = []
        root: PlaneTree | None = None
        for ch in text:
            if ch == "(":
                stack.append([])
            elif ch == ")":
                if not stack:
                    raise ValueError("unbalanced ')' in tree text")
                node = cls(tuple(stack.pop()))
                if stack:
                    stack[-1].append(node)
                elif root is None:
                    root = node
                else:
                    raise ValueError("more than one root in tree text")
            else:
                raise ValueError(f"unexpected character {ch!r} in tree text")
        if stack:
            raise ValueError("unbalanced '(' in tree text")
        assert root is not None
        return root

    def to_parens(self) -> str:
        out: list[str] = []
        stack: list[tuple[PlaneTree | None, bool]] = [(self, False)]
        while stack:
            node, closing = stack.pop()
            if closing or node is None:
                out.append(")")
                continue
            out.append("(")
            stack.append((node, True))
            for child in reversed(node.children):
                stack.append((child, False))
        return "".join(out)

    @property
    def vertex_count(self) -> int:
        n = 0
        stack = [self]
        while stack:
            node = stack.pop()
            n += 1
            stack.extend(node.children)
        return n

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PlaneTree):
            return NotImplemented
        return self.to_parens() == other.to_parens()

    def __hash__(self) -> int:
        return hash(self.to_parens())

    def __repr__(self) -> str:
        return f"PlaneTree({self.to_parens()!r})"


@dataclass(frozen=True, eq=True)
class ProtectionProfile:
    """Survival counts of the protection numbers inside one tree.

    counts[k] is the number of vertices whose protection number is >= k;
    counts[0] equals the vertex count and the values are non-increasing.
    Keys run from 0 to the tree's maximum protection number; at_least(k)
    returns 0 beyond that.
    """

    n: int
    counts: dict[int, int]

    def at_least(self, k: int) -> int:
        if k < 0:
            raise ValueError("protection level must be nonnegative")
        return self.counts.get(k, 0)


def _protection_values(parens: str) -> list[int]:
    """Protection number of every vertex, in subtree-closing order (root last)."""
    stack: list[list[int]] = [[]]
    out: list[int] = []
    for ch in parens:
        if ch == "(":
            stack.append([])
        else:
            kids = stack.pop()
            p = 1 + min(kids) if kids else 0
            out.append(p)
            stack[-1].append(p)
    if len(stack) != 1 or len(stack[0]) != 1:
        raise ValueError("unbalanced parenthesis word")
    return out


def protection_number(tree: PlaneTree) -> int:
    """Distance from the root to the nearest leaf of the tree."""
    return _protection_values(tree.to_parens())[-1]


def protection_profile(tree: PlaneTree) -> ProtectionProfile:
    """Survival counts of all vertex protection numbers, one traversal."""
    values = _protection_values(tree.to_parens())
    top = max(values)
    hist = [0] * (top + 1)
    for p in values:
        hist[p] += 1
    counts: dict[int, int] = {}
    running = 0
    for k in range(top, -1, -1):
        running += hist[k]
        counts[k] = running
    return ProtectionProfile(n=len(values), counts=dict(sorted(counts.items())))


def leaf_count(tree: PlaneTree) -> int:
    """Number of leaves; a single vertex counts as one leaf."""
    return tree.to_parens().count("()")


def _balanced_words(pairs: int) -> Iterator[str]:
    """All balanced parenthesis words with `pairs` pairs, lexicographically.

    "(" sorts before ")", so the first word is "((..))" and the last is
    "()()..()".
    """
    buf: list[str] = []

    def rec(opens_left: int, closes_due: int) -> Iterator[str]:
        if opens_left == 0 and closes_due == 0:
            yield "".join(buf)
            return
        if opens_left:
            buf.append("(")
            yield from rec(opens_left - 1, closes_due + 1)
            buf.pop()
        if closes_due:
            buf.append(")")
            yield from rec(opens_left, closes_due - 1)
            buf.pop()

    yield from rec(pairs, 0)


def _check_oracle_size(n: int, oracle_bound: int) -> None:
    if n < 1:
        raise ValueError(f"tree size must be positive, got {n}")
    if n > oracle_bound:
        raise OracleBoundError(
            f"n={n} exceeds the enumeration bound {oracle_bound}; "
            f"raise oracle_bound explicitly to force it"
        )


def enumerate_trees(n: int, oracle_bound: int = DEFAULT_ORACLE_BOUND) -> Iterator[PlaneTree]:
    """Yield every plane tree with n vertices, in lexicographic parenthesis order."""
    _check_oracle_size(n, oracle_bound)
    for word in _balanced_words(n - 1):
        yield PlaneTree.from_parens("(" + word + ")")


@lru_cache(maxsize=32)
def _survival_tallies(n: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """(root_ge, vertex_ge) survival count vectors over all n-vertex trees.

    root_ge[k] counts trees whose root protection number is >= k, and
    vertex_ge[k] counts (tree, vertex) pairs with vertex protection >= k,
    for k = 0..n.  Single pass over the full enumeration.
    """
    root_hist = [0] * n
    vertex_hist = [0] * n
    values = _protection_values
    for word in _balanced_words(n - 1):
        pis = values("(" + word + ")")
        root_hist[pis[-1]] += 1
        for p in pis:
            vertex_hist[p] += 1
    root_ge = [0] * (n + 1)
    vertex_ge = [0] * (n + 1)
    for k in range(n - 1, -1, -1):
        root_ge[k] = root_ge[k + 1] + root_hist[k]
        vertex_ge[k] = vertex_ge[k + 1] + vertex_hist[k]
    return tuple(root_ge), tuple(vertex_ge)


def oracle_r(n: int, k: int, oracle_bound: int = DEFAULT_ORACLE_BOUND) -> int:
    """Count n-vertex trees with protection number >= k, by enumeration."""
    _check_oracle_size(n, oracle_bound)
    if k < 0:
        raise ValueError("protection level must be nonnegative")
    return _survival_tallies(n)[0][min(k, n)]


def oracle_s(n: int, k: int, oracle_bound: int = DEFAULT_ORACLE_BOUND) -> int:
    """Count (tree, vertex) pairs with vertex protection >= k, by enumeration."""
    _check_oracle_size(n, oracle_bound)
    if k < 0:
        raise ValueError("protection level must be nonnegative")
    return _survival_tallies(n)[1][min(k, n)]
