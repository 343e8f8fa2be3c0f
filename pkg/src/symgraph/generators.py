"""Built-in graph families."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Tuple

from .errors import BadFamilyParamsError
from .graph import Graph

FAMILIES = ("cycle", "complete", "complete_bipartite", "hypercube", "circulant", "petersen")

MAX_HYPERCUBE_DIM = 16


@dataclass(frozen=True)
class FamilySpec:
    """A named family plus its integer parameters.

    ``params`` is ``(N,)`` for cycle and complete, ``(n,)`` for
    complete_bipartite (K_{n,n}) and hypercube (Q_n), ``(N, s1, s2, ...)``
    for circulant, and ``()`` for petersen.
    """

    family: str
    params: Tuple[int, ...] = ()

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise BadFamilyParamsError(
                f"unknown family {self.family!r}; expected one of {', '.join(FAMILIES)}"
            )
        params = tuple(int(p) for p in self.params)
        if self.family == "circulant" and len(params) >= 2:
            conn = params[1:]
            if len(set(conn)) != len(conn):
                raise BadFamilyParamsError(f"circulant connection set {conn} has duplicates")
            params = (params[0],) + tuple(sorted(conn))
        object.__setattr__(self, "params", params)
        _validate(self.family, params)

    @classmethod
    def parse(cls, text: str) -> "FamilySpec":
        """Parse ``family[:p1[:p2,...]]``, e.g. ``cycle:9`` or ``circulant:6:2,3``."""
        family, *rest = text.strip().split(":")
        family = family.strip().lower().replace("-", "_")
        try:
            if family == "circulant":
                if len(rest) != 2:
                    raise BadFamilyParamsError("circulant needs N and a connection set, e.g. circulant:6:2,3")
                params = (int(rest[0]),) + tuple(int(s) for s in rest[1].split(",") if s.strip())
            else:
                params = tuple(int(p) for p in rest)
        except ValueError as exc:
            raise BadFamilyParamsError(f"bad parameters in {text!r}: {exc}") from None
        return cls(family, params)

    def __str__(self):
        if self.family == "circulant":
            n, *conn = self.params
            return f"circulant:{n}:{','.join(map(str, conn))}"
        return ":".join([self.family, *map(str, self.params)])


def _expect(cond, msg):
    if not cond:
        raise BadFamilyParamsError(msg)


def _validate(family, params):
    arity = {"cycle": 1, "complete": 1, "complete_bipartite": 1, "hypercube": 1, "petersen": 0}
    if family in arity:
        _expect(
            len(params) == arity[family],
            f"{family} takes {arity[family]} parameter(s), got {len(params)}",
        )
    if family == "cycle":
        _expect(params[0] >= 3, f"cycle needs N >= 3, got {params[0]}")
    elif family == "complete":
        _expect(params[0] >= 2, f"complete needs N >= 2, got {params[0]}")
    elif family == "complete_bipartite":
        _expect(params[0] >= 1, f"complete_bipartite needs n >= 1, got {params[0]}")
    elif family == "hypercube":
        _expect(
            1 <= params[0] <= MAX_HYPERCUBE_DIM,
            f"hypercube needs 1 <= n <= {MAX_HYPERCUBE_DIM}, got {params[0]}",
        )
    elif family == "circulant":
        _expect(len(params) >= 2, "circulant needs N and a nonempty connection set")
        n, conn = params[0], params[1:]
        _expect(n >= 3, f"circulant needs N >= 3, got {n}")
        bad = [s for s in conn if not 1 <= s <= n // 2]
        _expect(not bad, f"circulant connection set must lie in 1..{n // 2}, got {bad}")


def cycle(n: int) -> Graph:
    return generate(FamilySpec("cycle", (n,)))


def complete(n: int) -> Graph:
    return generate(FamilySpec("complete", (n,)))


def complete_bipartite(n: int) -> Graph:
    return generate(FamilySpec("complete_bipartite", (n,)))


def hypercube(n: int) -> Graph:
    return generate(FamilySpec("hypercube", (n,)))


def circulant(n: int, connection_set) -> Graph:
    return generate(FamilySpec("circulant", (n, *connection_set)))


def petersen() -> Graph:
    return generate(FamilySpec("petersen"))


def generate(spec: FamilySpec) -> Graph:
    family, p = spec.family, spec.params
    if family == "cycle":
        n = p[0]
        adj = [{(x - 1) % n, (x + 1) % n} for x in range(n)]
    elif family == "complete":
        n = p[0]
        adj = [set(range(n)) - {x} for x in range(n)]
    elif family == "complete_bipartite":
        half = p[0]
        n = 2 * half
        left, right = set(range(half)), set(range(half, n))
        adj = [right if x < half else left for x in range(n)]
    elif family == "hypercube":
        dim = p[0]
        n = 1 << dim
        adj = [{x ^ (1 << b) for b in range(dim)} for x in range(n)]
    elif family == "circulant":
        n, conn = p[0], p[1:]
        adj = [{(x + s) % n for s in conn} | {(x - s) % n for s in conn} for x in range(n)]
    else:
        # outer 5-cycle 0..4, inner pentagram 5..9, spokes x -- x+5
        n = 10
        adj = [set() for _ in range(n)]
        for i in range(5):
            for x, y in ((i, (i + 1) % 5), (i, i + 5), (i + 5, (i + 2) % 5 + 5)):
                adj[x].add(y)
                adj[y].add(x)
    return Graph(n, adj)


__all__ = [
    "FAMILIES",
    "FamilySpec",
    "circulant",
    "complete",
    "complete_bipartite",
    "cycle",
    "generate",
    "hypercube",
    "petersen",
]
