"""Small Davenport constants by exhaustive search over a ``GroupSpec``."""

from __future__ import annotations

from dataclasses import dataclass

from zerosum.errors import DomainError
from zerosum.groups import BudgetExceeded, GroupSpec, Key, ProductEngine, free_multisets

EXACT = "exact"
UNBOUNDED = "unbounded-within-budget"
BUDGET_EXCEEDED = "budget-exceeded"

MAX_ORDER = 64
DEFAULT_NODE_BUDGET = 2_000_000


@dataclass(frozen=True)
class DavenportResult:
    group: str
    status: str
    d: int
    extremal_example: Key
    search_space_size: int

    @property
    def exact(self) -> bool:
        return self.status == EXACT

    def to_dict(self, group: GroupSpec | None = None) -> dict:
        out = {
            "group": self.group,
            "status": self.status,
            "d": self.d,
            "extremal_example": list(self.extremal_example),
            "search_space_size": self.search_space_size,
        }
        if group is not None:
            out["extremal_labels"] = [group.labels[i] for i in self.extremal_example]
        return out


def davenport_search(
    G: GroupSpec, max_len: int, node_budget: int = DEFAULT_NODE_BUDGET
) -> DavenportResult:
    """Longest product-one free sequence over ``G`` of length at most ``max_len``.

    ``d`` is exact only when no free sequence of length ``max_len`` exists;
    otherwise the status says the bound was not reached and ``d`` is only a
    lower bound. The example is the lexicographically least free sequence of
    length ``d``.
    """
    if G.order < 2:
        raise DomainError("group must have order >= 2")
    if G.order > MAX_ORDER:
        raise DomainError(f"order {G.order} exceeds search limit {MAX_ORDER}")
    if max_len < 1:
        raise DomainError(f"max_len must be >= 1, got {max_len}")
    best: Key = ()
    visited = 0
    try:
        for key in free_multisets(G, max_len, node_budget=node_budget):
            visited += 1
            if len(key) > len(best):
                best = key
    except BudgetExceeded:
        return DavenportResult(G.name, BUDGET_EXCEEDED, len(best), best, visited)
    status = UNBOUNDED if len(best) >= max_len else EXACT
    return DavenportResult(G.name, status, len(best), best, visited)


def abelian_lower_bound(ns: list[int]) -> tuple[int, Key]:
    """Sum of (n_i - 1) and the sequence of unit vectors e_i^[n_i - 1] realizing it.

    The witness is returned as ids of ``GroupSpec.direct_sum(ns)``.
    """
    if not ns or any(m < 2 for m in ns):
        raise DomainError(f"every factor must be >= 2, got {ns}")
    G = GroupSpec.direct_sum(ns)
    index = {lab: i for i, lab in enumerate(G.labels)}
    witness = []
    for i, m in enumerate(ns):
        unit = "(" + ",".join("1" if j == i else "0" for j in range(len(ns))) + ")"
        witness += [index[unit]] * (m - 1)
    return sum(m - 1 for m in ns), tuple(sorted(witness))


def is_product_one_free(G: GroupSpec, key: Key) -> bool:
    return not ProductEngine(G).has_one(tuple(sorted(key)))
