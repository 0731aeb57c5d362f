"""Exception types shared across the package."""

from __future__ import annotations


class WeakIasiError(Exception):
    """Base class for all errors raised by this package."""


class InvalidEdgeError(WeakIasiError):
    def __init__(self, u: int, v: int, reason: str):
        super().__init__(f"invalid edge ({u}, {v}): {reason}")
        self.u = u
        self.v = v
        self.reason = reason


class IsolatedVertexError(WeakIasiError):
    def __init__(self, vertex: int):
        super().__init__(f"vertex {vertex} has degree 0; graphs must have no isolated vertices")
        self.vertex = vertex


class UnknownNameError(WeakIasiError):
    def __init__(self, name: str, known: tuple[str, ...]):
        super().__init__(f"unknown graph name {name!r}; known: {', '.join(known)}")
        self.name = name
        self.known = known


class NotEulerianError(WeakIasiError):
    def __init__(self, vertex: int, degree: int):
        super().__init__(
            f"vertex {vertex} has odd degree {degree}; cycle decomposition needs every degree even"
        )
        self.vertex = vertex
        self.degree = degree


class TooLargeError(WeakIasiError):
    def __init__(self, what: str, n: int, limit: int):
        super().__init__(f"{what} supports at most {limit} vertices, got {n}")
        self.what = what
        self.n = n
        self.limit = limit


class MissingLabelError(WeakIasiError):
    def __init__(self, vertex: int):
        super().__init__(f"no set-label assigned to vertex {vertex}")
        self.vertex = vertex


class NotWeakError(WeakIasiError):
    def __init__(self, edge: tuple[int, int]):
        super().__init__(
            f"labeling is not weak: edge {edge} has set-indexing number above the max of its endpoints"
        )
        self.edge = edge


class NotIndependentError(WeakIasiError):
    def __init__(self, u: int, v: int):
        super().__init__(f"vertices {u} and {v} are adjacent; expected an independent set")
        self.u = u
        self.v = v
