"""Finite groups as multiplication tables and ordered-product reachability.

Elements are integer ids ``0 .. order-1``; a sequence over a group is kept as a
sorted tuple of ids (its canonical key).
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from functools import reduce
from itertools import product
from typing import Iterator, Sequence

from zerosum.bits import iter_bits
from zerosum.errors import DomainError

MAX_VALIDATED_ORDER = 64

Key = tuple[int, ...]


@dataclass(frozen=True)
class GroupSpec:
    name: str
    table: tuple[tuple[int, ...], ...]
    identity: int
    labels: tuple[str, ...]
    abelian: bool = field(init=False)

    def __post_init__(self) -> None:
        order = len(self.table)
        if order < 1 or any(len(row) != order for row in self.table):
            raise DomainError("multiplication table must be square and nonempty")
        if len(self.labels) != order:
            raise DomainError("need one label per element")
        if order <= MAX_VALIDATED_ORDER:
            self._validate()
        t = self.table
        object.__setattr__(
            self, "abelian", all(t[a][b] == t[b][a] for a in range(order) for b in range(a))
        )

    @property
    def order(self) -> int:
        return len(self.table)

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def inverse(self, a: int) -> int:
        row = self.table[a]
        return row.index(self.identity)

    def product(self, ids: Sequence[int]) -> int:
        return reduce(self.mul, ids, self.identity)

    def label(self, key: Sequence[int]) -> str:
        return " * ".join(self.labels[i] for i in key) if key else "1"

    def _validate(self) -> None:
        t, e, rng = self.table, self.identity, range(len(self.table))
        if not 0 <= e < len(t):
            raise DomainError(f"identity {e} out of range")
        for a in rng:
            if sorted(t[a]) != list(rng) or sorted(row[a] for row in t) != list(rng):
                raise DomainError(f"{self.name}: table is not a Latin square")
            if t[e][a] != a or t[a][e] != a:
                raise DomainError(f"{self.name}: {e} is not an identity")
        for a, b, c in product(rng, repeat=3):
            if t[t[a][b]][c] != t[a][t[b][c]]:
                raise DomainError(f"{self.name}: not associative at {(a, b, c)}")

    @classmethod
    def cyclic(cls, n: int) -> GroupSpec:
        if n < 1:
            raise DomainError(f"cyclic group order must be >= 1, got {n}")
        table = tuple(tuple((a + b) % n for b in range(n)) for a in range(n))
        return cls(f"cyclic:{n}", table, 0, tuple(str(a) for a in range(n)))

    @classmethod
    def direct_sum(cls, ns: Sequence[int]) -> GroupSpec:
        """Z_{n1} + ... + Z_{nk}; ids enumerate coordinate tuples lexicographically."""
        if not ns or any(m < 1 for m in ns):
            raise DomainError(f"invalid factor orders {list(ns)}")
        elems = list(product(*(range(m) for m in ns)))
        index = {v: i for i, v in enumerate(elems)}
        table = tuple(
            tuple(index[tuple((x + y) % m for x, y, m in zip(u, v, ns))] for v in elems)
            for u in elems
        )
        labels = tuple("(" + ",".join(map(str, v)) + ")" for v in elems)
        return cls("sum:" + "x".join(map(str, ns)), table, index[tuple(0 for _ in ns)], labels)

    @classmethod
    def dihedral(cls, n: int) -> GroupSpec:
        """D_2n with ids ``a -> x y^a`` for ``a < n`` and ``n + a -> y^a``.

        Reflections come first so the canonical (lexicographic) order of
        sequences lists reflection-heavy sequences before rotation ones.
        """
        if n < 2:
            raise DomainError(f"dihedral parameter must be >= 2, got {n}")

        def to_id(eps: int, a: int) -> int:
            return a % n if eps else n + a % n

        elems = [(1, a) for a in range(n)] + [(0, a) for a in range(n)]
        table = tuple(
            tuple(to_id(e1 ^ e2, (-a if e2 else a) + b) for e2, b in elems) for e1, a in elems
        )
        labels = tuple(("s" if e else "r") + str(a) for e, a in elems)
        return cls(f"dihedral:{n}", table, to_id(0, 0), labels)

    @classmethod
    def from_name(cls, name: str) -> GroupSpec:
        """Build from ``cyclic:<n>``, ``sum:<n1>x<n2>[x...]`` or ``dihedral:<n>``."""
        kind, _, arg = name.partition(":")
        try:
            if kind == "cyclic":
                return cls.cyclic(int(arg))
            if kind == "sum":
                return cls.direct_sum([int(p) for p in arg.split("x")])
            if kind == "dihedral":
                return cls.dihedral(int(arg))
        except ValueError as exc:
            if isinstance(exc, DomainError):
                raise
            raise DomainError(f"bad group name {name!r}") from exc
        raise DomainError(f"unknown group {name!r}; use cyclic:<n>, sum:<a>x<b>, dihedral:<n>")


def counts_of(key: Key) -> list[tuple[int, int]]:
    return sorted(Counter(key).items())


def sub_multisets(key: Key) -> Iterator[Key]:
    """Every sub-multiset of ``key`` (including empty and ``key`` itself)."""
    cs = counts_of(key)
    for choice in product(*(range(m + 1) for _, m in cs)):
        yield tuple(h for (h, _), c in zip(cs, choice) for _ in range(c))


def _drop_one(key: Key, h: int) -> Key:
    i = key.index(h)
    return key[:i] + key[i + 1 :]


class ProductEngine:
    """Memoized sets of ordered products over sub-multisets of a group.

    ``pi(T)`` is the bitmask of all products of full-length orderings of ``T``,
    from the recursion ``pi(T) = U_h pi(T - h) * h`` with ``pi(()) = {1}``.
    The memo is keyed by canonical key and shared by every query on this
    engine.
    """

    def __init__(self, group: GroupSpec):
        self.group = group
        # right[h][p] = p * h
        self._right = [[group.table[p][h] for p in range(group.order)] for h in range(group.order)]
        self._memo: dict[Key, int] = {(): 1 << group.identity}

    def right_mul(self, mask: int, h: int) -> int:
        col = self._right[h]
        out = 0
        for p in iter_bits(mask):
            out |= 1 << col[p]
        return out

    def pi(self, key: Key) -> int:
        hit = self._memo.get(key)
        if hit is not None:
            return hit
        out = 0
        prev = None
        for h in key:
            if h != prev:
                out |= self.right_mul(self.pi(_drop_one(key, h)), h)
                prev = h
        self._memo[key] = out
        return out

    def big_pi(self, key: Key) -> int:
        out = 0
        for sub in sub_multisets(key):
            if sub:
                out |= self.pi(sub)
        return out

    def has_one(self, key: Key) -> bool:
        return bool(self.big_pi(key) >> self.group.identity & 1)

    def extension_has_one(self, parent: Key, g: int) -> bool:
        """Whether appending ``g`` (>= every id in ``parent``) creates a product-one subsequence.

        Assumes ``parent`` is product-one free, so only sub-multisets using
        every copy of ``g`` need checking.
        """
        e = self.group.identity
        rest = tuple(h for h in parent if h != g)
        tail = tuple(h for h in parent if h == g) + (g,)
        for sub in sub_multisets(rest):
            if self.pi(sub + tail) >> e & 1:
                return True
        return False

    def arrangement(self, key: Key, target: int) -> list[int] | None:
        """An ordering of ``key`` whose product is ``target``; smallest last term first."""
        if not self.pi(key) >> target & 1:
            return None
        order: list[int] = []
        while key:
            prev = None
            for h in key:
                if h == prev:
                    continue
                prev = h
                rest = _drop_one(key, h)
                before = self.group.mul(target, self.group.inverse(h))
                if self.pi(rest) >> before & 1:
                    order.append(h)
                    key, target = rest, before
                    break
            else:  # pragma: no cover - pi(key) promised a route
                raise AssertionError("inconsistent product memo")
        order.reverse()
        return order

    def one_witness(self, key: Key) -> list[int] | None:
        """Shortest (then lexicographically least) nonempty sub-multiset with product 1, ordered."""
        e = self.group.identity
        subs = sorted((s for s in sub_multisets(key) if s), key=lambda s: (len(s), s))
        for sub in subs:
            if self.pi(sub) >> e & 1:
                return self.arrangement(sub, e)
        return None


def free_multisets(
    group: GroupSpec,
    max_len: int,
    first: int | None = None,
    engine: ProductEngine | None = None,
    node_budget: int | None = None,
) -> Iterator[Key]:
    """Product-one free multisets of length ``1..max_len`` in lexicographic order.

    Only free sequences are extended, which is sound because every
    subsequence of a product-one free sequence is itself product-one free.
    ``first`` restricts the search to sequences whose least id is ``first``.
    Raises ``BudgetExceeded`` after ``node_budget`` yielded nodes.
    """
    order = group.order
    starts = range(order) if first is None else [first]
    yielded = 0

    def tick() -> None:
        nonlocal yielded
        yielded += 1
        if node_budget is not None and yielded > node_budget:
            raise BudgetExceeded(node_budget)

    if group.abelian:
        right = [[group.table[p][h] for p in range(order)] for h in range(order)]
        e = group.identity

        def shift(mask: int, h: int) -> int:
            col = right[h]
            out = 0
            for p in iter_bits(mask):
                out |= 1 << col[p]
            return out

        def walk_abelian(key: Key, reach: int) -> Iterator[Key]:
            if len(key) == max_len:
                return
            for g in range(key[-1], order):
                grown = reach | (1 << g) | shift(reach, g)
                if not grown >> e & 1:
                    child = key + (g,)
                    tick()
                    yield child
                    yield from walk_abelian(child, grown)

        for g in starts:
            if g != e and max_len >= 1:
                tick()
                yield (g,)
                yield from walk_abelian((g,), 1 << g)
        return

    eng = engine or ProductEngine(group)

    def walk(key: Key) -> Iterator[Key]:
        if len(key) == max_len:
            return
        for g in range(key[-1], order):
            if not eng.extension_has_one(key, g):
                child = key + (g,)
                tick()
                yield child
                yield from walk(child)

    for g in starts:
        if g != group.identity and max_len >= 1:
            tick()
            yield (g,)
            yield from walk((g,))


class BudgetExceeded(RuntimeError):
    def __init__(self, budget: int):
        super().__init__(f"search exceeded node budget {budget}")
        self.budget = budget
