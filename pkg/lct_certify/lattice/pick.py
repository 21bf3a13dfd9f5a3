"""Pick's-theorem certificates for simple lattice polygons."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from lct_certify.errors import NotSimpleError, PickMismatchError

Vertex = tuple[int, int]


def cross(o: Vertex, a: Vertex, b: Vertex) -> int:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def _on_segment(p: Vertex, a: Vertex, b: Vertex) -> bool:
    return (
        cross(a, b, p) == 0
        and min(a[0], b[0]) <= p[0] <= max(a[0], b[0])
        and min(a[1], b[1]) <= p[1] <= max(a[1], b[1])
    )


def segments_intersect(a: Vertex, b: Vertex, c: Vertex, d: Vertex) -> bool:
    """Closed segments ab and cd share at least one point."""
    d1, d2 = cross(c, d, a), cross(c, d, b)
    d3, d4 = cross(a, b, c), cross(a, b, d)
    if ((d1 > 0 > d2) or (d1 < 0 < d2)) and ((d3 > 0 > d4) or (d3 < 0 < d4)):
        return True
    return (
        _on_segment(a, c, d) or _on_segment(b, c, d)
        or _on_segment(c, a, b) or _on_segment(d, a, b)
    )


def _twice_area(vertices: list[Vertex]) -> int:
    n = len(vertices)
    return sum(
        vertices[i][0] * vertices[(i + 1) % n][1] - vertices[(i + 1) % n][0] * vertices[i][1]
        for i in range(n)
    )


@dataclass(frozen=True)
class LatticePolygon:
    """A simple lattice polygon, stored counter-clockwise."""
    vertices: tuple[Vertex, ...]

    def __post_init__(self):
        verts = [(int(x), int(y)) for x, y in self.vertices]
        if len(verts) < 3:
            raise NotSimpleError("a polygon needs at least three vertices")
        _require_simple(verts)
        if _twice_area(verts) < 0:
            verts.reverse()
        object.__setattr__(self, "vertices", tuple(verts))

    def edges(self):
        n = len(self.vertices)
        for i in range(n):
            yield self.vertices[i], self.vertices[(i + 1) % n]


def _require_simple(verts: list[Vertex]) -> None:
    n = len(verts)
    if _twice_area(verts) == 0:
        raise NotSimpleError("polygon has zero area")
    edges = [(verts[i], verts[(i + 1) % n]) for i in range(n)]
    for i, (a, b) in enumerate(edges):
        if a == b:
            raise NotSimpleError(f"repeated vertex {a}")
        c = edges[(i + 1) % n][1]
        # consecutive edges folding back onto each other
        if cross(a, b, c) == 0 and (b[0] - a[0]) * (c[0] - b[0]) + (b[1] - a[1]) * (c[1] - b[1]) < 0:
            raise NotSimpleError(f"edges fold back at {b}")
    for i in range(n):
        for j in range(i + 1, n):
            if j == i + 1 or (i == 0 and j == n - 1):
                continue
            if segments_intersect(*edges[i], *edges[j]):
                raise NotSimpleError(f"edges {i} and {j} intersect")


@dataclass(frozen=True)
class PickCertificate:
    area: Fraction
    boundary: int
    interior: int
    total: int


def _brute_force(polygon: LatticePolygon) -> tuple[int, int]:
    """(interior, boundary) by testing every point of the bounding box."""
    xs = [v[0] for v in polygon.vertices]
    ys = [v[1] for v in polygon.vertices]
    edges = list(polygon.edges())
    interior = boundary = 0
    for x in range(min(xs), max(xs) + 1):
        for y in range(min(ys), max(ys) + 1):
            p = (x, y)
            if any(_on_segment(p, a, b) for a, b in edges):
                boundary += 1
                continue
            inside = False
            for a, b in edges:
                if (a[1] > y) != (b[1] > y):
                    # x-coordinate of the crossing, compared exactly
                    x_cross = a[0] + Fraction((y - a[1]) * (b[0] - a[0]), b[1] - a[1])
                    if x < x_cross:
                        inside = not inside
            if inside:
                interior += 1
    return interior, boundary


def pick_certificate(polygon: LatticePolygon, brute_force: bool = True) -> PickCertificate:
    area = Fraction(_twice_area(list(polygon.vertices)), 2)
    boundary = sum(abs(gcd(b[0] - a[0], b[1] - a[1])) for a, b in polygon.edges())
    interior = area - Fraction(boundary, 2) + 1
    if interior.denominator != 1:
        raise PickMismatchError(f"non-integral interior count {interior}")
    interior = int(interior)
    if brute_force:
        bf_interior, bf_boundary = _brute_force(polygon)
        if (bf_interior, bf_boundary) != (interior, boundary):
            raise PickMismatchError(
                f"Pick gives ({interior}, {boundary}), enumeration gives ({bf_interior}, {bf_boundary})"
            )
    return PickCertificate(area, boundary, interior, interior + boundary)


def corner_polygon(m: int, u: int, v: int) -> LatticePolygon:
    """The quadrilateral (0,0), (u,0), (m,m), (0,v)."""
    return LatticePolygon(((0, 0), (u, 0), (m, m), (0, v)))


def parse_vertices(text: str) -> LatticePolygon:
    """Parse ``"x,y x,y ..."`` (or ``;``-separated) into a polygon."""
    verts = []
    for tok in text.replace(";", " ").split():
        try:
            x, y = tok.split(",")
            verts.append((int(x), int(y)))
        except ValueError as exc:
            raise ValueError(f"bad vertex {tok!r}, expected x,y") from exc
    return LatticePolygon(tuple(verts))
