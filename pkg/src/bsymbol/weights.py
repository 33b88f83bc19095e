"""Value types shared by the closed-form and brute-force paths."""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import InvalidB, NotMDSQuery

CLOSED_FORM = "closed-form"
BRUTE_FORCE = "brute-force"
SPECIAL_CASE = "special-case"


@dataclass(frozen=True)
class DistributionQuery:
    """Parameters of an ``[n, k, d]_q`` MDS code and the window size ``b``."""

    q: int
    n: int
    k: int
    b: int

    def __post_init__(self):
        if self.b < 1:
            raise InvalidB(f"b must be >= 1, got {self.b}")
        if not 1 <= self.k <= self.n:
            raise NotMDSQuery(f"need 1 <= k <= n, got n = {self.n}, k = {self.k}")
        if self.q < 2:
            raise NotMDSQuery(f"field order must be >= 2, got {self.q}")

    @property
    def d(self) -> int:
        return self.n - self.k + 1

    def to_json(self) -> dict:
        return {"q": self.q, "n": self.n, "k": self.k, "d": self.d, "b": self.b}


@dataclass(frozen=True)
class WeightDistribution:
    """Exact counts ``w -> A(w)`` for every ``w`` in ``[0, n]`` (zeros included)."""

    query: DistributionQuery
    counts: dict[int, int]
    mode: str
    meta: dict = field(default_factory=dict, compare=False)

    @property
    def total(self) -> int:
        return sum(self.counts.values())

    def __getitem__(self, w: int) -> int:
        return self.counts.get(w, 0)

    def as_list(self) -> list[int]:
        return [self.counts.get(w, 0) for w in range(self.query.n + 1)]

    def support(self) -> list[int]:
        return [w for w, c in sorted(self.counts.items()) if c]

    def diff(self, other: WeightDistribution) -> list[tuple[int, int, int]]:
        """``(w, self[w], other[w])`` for every weight where the two disagree."""
        ws = sorted(set(self.counts) | set(other.counts))
        return [(w, self[w], other[w]) for w in ws if self[w] != other[w]]

    def to_json(self) -> dict:
        return {
            "query": self.query.to_json(),
            "mode": self.mode,
            "counts": {str(w): str(c) for w, c in sorted(self.counts.items())},
            "total": str(self.total),
        }

    @classmethod
    def from_json(cls, obj: dict) -> WeightDistribution:
        qd = obj["query"]
        query = DistributionQuery(int(qd["q"]), int(qd["n"]), int(qd["k"]), int(qd["b"]))
        counts = {int(w): int(c) for w, c in obj["counts"].items()}
        return cls(query, counts, obj["mode"])
