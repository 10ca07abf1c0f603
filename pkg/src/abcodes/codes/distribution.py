"""Weight distributions and enumerators (exact integers throughout)."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Mapping

__all__ = ["WeightDistribution", "WeightEnumerator"]


@dataclass(frozen=True)
class WeightEnumerator:
    """Coefficient vector of A(z); ``coeffs[i]`` is A_i."""

    coeffs: tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i]

    def distribution(self, k: int | None = None, p: int | None = None) -> "WeightDistribution":
        return WeightDistribution(
            self.n, {w: c for w, c in enumerate(self.coeffs) if c}, k=k, p=p
        )

    def __call__(self, z):
        return sum(c * z**i for i, c in enumerate(self.coeffs))


@dataclass(frozen=True)
class WeightDistribution:
    n: int
    counts: Mapping[int, int]
    k: int | None = field(default=None, compare=False)
    p: int | None = field(default=None, compare=False)

    def __post_init__(self):
        clean = {int(w): int(c) for w, c in sorted(self.counts.items()) if c}
        for w, c in clean.items():
            if not 0 <= w <= self.n:
                raise ValueError(f"weight {w} outside [0, {self.n}]")
            if c < 0:
                raise ValueError(f"negative multiplicity {c} at weight {w}")
        object.__setattr__(self, "counts", clean)

    def __getitem__(self, w: int) -> int:
        return self.counts.get(w, 0)

    @property
    def total(self) -> int:
        return sum(self.counts.values())

    @property
    def weights(self) -> list[int]:
        """Nonzero weights that occur."""
        return [w for w in self.counts if w]

    @property
    def min_weight(self) -> int | None:
        nz = self.weights
        return min(nz) if nz else None

    @property
    def max_weight(self) -> int | None:
        nz = self.weights
        return max(nz) if nz else None

    def enumerator(self) -> WeightEnumerator:
        coeffs = [0] * (self.n + 1)
        for w, c in self.counts.items():
            coeffs[w] = c
        return WeightEnumerator(tuple(coeffs))

    def with_count(self, w: int, c: int) -> "WeightDistribution":
        counts = dict(self.counts)
        counts[w] = c
        return WeightDistribution(self.n, counts, k=self.k, p=self.p)

    def diff(self, other: "WeightDistribution") -> dict[int, tuple[int, int]]:
        """Weights where the two distributions disagree: w -> (self, other)."""
        ws = sorted(set(self.counts) | set(other.counts))
        return {w: (self[w], other[w]) for w in ws if self[w] != other[w]}

    # -- serialization -----------------------------------------------------

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "k": self.k,
            "p": self.p,
            "counts": [{"w": w, "count": str(c)} for w, c in sorted(self.counts.items())],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    @classmethod
    def from_dict(cls, d: dict) -> "WeightDistribution":
        counts = {int(e["w"]): int(e["count"]) for e in d["counts"]}
        return cls(int(d["n"]), counts, k=d.get("k"), p=d.get("p"))

    @classmethod
    def from_json(cls, text: str) -> "WeightDistribution":
        return cls.from_dict(json.loads(text))

    def to_csv(self) -> str:
        lines = ["w,count"] + [f"{w},{c}" for w, c in sorted(self.counts.items())]
        return "\n".join(lines) + "\n"
