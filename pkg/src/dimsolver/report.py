from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Optional

from .search import Solution


@dataclass
class RunReport:
    input: str
    status: str
    weight: Optional[float]
    edges: list[tuple[int, int]]  # 1-based
    count: str
    nodes: int = 0
    leaves: int = 0
    max_stack: int = 0
    rule_firings: dict[str, int] = field(default_factory=dict)
    wall_ms: float = 0.0

    @classmethod
    def from_solution(cls, source: str, sol: Solution, wall_ms: float) -> "RunReport":
        st = sol.stats
        return cls(
            input=source,
            status=sol.status,
            weight=sol.weight,
            edges=[(u + 1, v + 1) for u, v in sol.edges],
            count=str(sol.count),
            nodes=st.nodes,
            leaves=st.leaves,
            max_stack=st.max_stack,
            rule_firings=dict(sorted(st.rule_firings.items())),
            wall_ms=wall_ms,
        )

    def to_dict(self) -> dict:
        return {
            "input": self.input,
            "status": self.status,
            "weight": self.weight,
            "edges": [list(e) for e in self.edges],
            "count": self.count,
            "stats": {
                "nodes": self.nodes,
                "leaves": self.leaves,
                "max_stack": self.max_stack,
                "rule_firings": dict(self.rule_firings),
            },
            "wall_ms": self.wall_ms,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_json(cls, text: str) -> "RunReport":
        d = json.loads(text)
        st = d["stats"]
        return cls(
            input=d["input"],
            status=d["status"],
            weight=d["weight"],
            edges=[tuple(e) for e in d["edges"]],
            count=d["count"],
            nodes=st["nodes"],
            leaves=st["leaves"],
            max_stack=st["max_stack"],
            rule_firings=dict(st["rule_firings"]),
            wall_ms=d["wall_ms"],
        )
