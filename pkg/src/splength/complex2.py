"""Combinatorial 2-complexes built from bigons and triangles.

Edges are numbered from 0 and carry an orientation ``(source, target)``.
A face boundary is a closed edge path written like a word: ``e + 1`` walks
edge ``e`` forwards and ``-(e + 1)`` walks it backwards.

Presentation complexes have one vertex.  Covers, tree contractions and
cones change the vertex count; :func:`to_presentation` reads a one-vertex
complex back as a presentation.
"""

import json
from collections import deque
from dataclasses import dataclass, field
from typing import Dict, Iterable, Optional, Sequence, Tuple

from .cosets import CosetTable
from .presentation import Presentation
from .rewriting import schreier_transversal
from .words import Word

EdgePath = Tuple[int, ...]


class ComplexError(ValueError):
    pass


@dataclass(frozen=True)
class TwoComplex:
    vertex_count: int
    edges: Tuple[Tuple[int, int], ...]
    faces: Tuple[Word, ...] = ()
    isotropy: Dict[int, str] = field(default_factory=dict)
    edge_labels: Optional[Tuple[str, ...]] = None
    # faces whose boundary vanished entirely under tree contraction
    collapsed_faces: int = 0

    def __post_init__(self):
        object.__setattr__(self, "edges", tuple(tuple(e) for e in self.edges))
        object.__setattr__(self, "faces", tuple(tuple(f) for f in self.faces))
        object.__setattr__(self, "isotropy", dict(self.isotropy))
        if self.edge_labels is not None:
            object.__setattr__(self, "edge_labels", tuple(self.edge_labels))
            if len(self.edge_labels) != len(self.edges):
                raise ComplexError("one label per edge required")
        for s, t in self.edges:
            if not (0 <= s < self.vertex_count and 0 <= t < self.vertex_count):
                raise ComplexError(f"edge ({s}, {t}) has an endpoint outside the complex")
        for f in self.faces:
            if not 1 <= len(f) <= 3:
                raise ComplexError(f"face of length {len(f)}; faces have 1 to 3 sides")
            if not _closed(self, f):
                raise ComplexError(f"face boundary {f} is not a closed edge path")

    def endpoints(self, x: int) -> Tuple[int, int]:
        """Start and end vertex of the oriented edge letter ``x``."""
        s, t = self.edges[abs(x) - 1]
        return (s, t) if x > 0 else (t, s)

    def label(self, e: int) -> str:
        return self.edge_labels[e] if self.edge_labels else f"e{e + 1}"

    @property
    def triangle_count(self) -> int:
        return sum(1 for f in self.faces if len(f) == 3)

    @property
    def bigon_count(self) -> int:
        return sum(1 for f in self.faces if len(f) == 2)


def _closed(c: TwoComplex, path: Sequence[int]) -> bool:
    if not path:
        return True
    for x in path:
        if x == 0 or abs(x) > len(c.edges):
            raise ComplexError(f"edge letter {x} out of range")
    v = c.endpoints(path[0])[0]
    return _walk(c, path) == v


def _walk(c: TwoComplex, path: Sequence[int]) -> Optional[int]:
    """End vertex of ``path``, or None if consecutive edges do not meet."""
    v = c.endpoints(path[0])[0]
    for x in path:
        s, t = c.endpoints(x)
        if s != v:
            return None
        v = t
    return v


def euler_char(c: TwoComplex) -> int:
    return c.vertex_count - len(c.edges) + len(c.faces)


def from_presentation(p: Presentation) -> TwoComplex:
    """One vertex, a loop per generator and a face per relator.

    Relators of length 1 to 3 are accepted as they are.  An empty relator
    contributes no face and is recorded in ``collapsed_faces``.
    """
    faces = []
    empty = 0
    for r in p.relators:
        if len(r) > 3:
            raise ComplexError(f"relator of length {len(r)}; triangulate first")
        if not r:
            empty += 1
            continue
        faces.append(r)
    return TwoComplex(1, ((0, 0),) * p.ngens, tuple(faces), {}, p.generators, empty)


def cover(c: TwoComplex, t: CosetTable) -> TwoComplex:
    """The covering complex determined by the coset action.

    Lifted edge ``g * d + k`` starts at vertex ``k`` and runs along generator
    ``g``; face lifts are listed face by face, then by starting vertex.
    """
    if c.vertex_count != 1:
        raise ComplexError("covers are only built over one-vertex complexes")
    if len(c.edges) != t.ngens:
        raise ComplexError(f"complex has {len(c.edges)} edges, table has {t.ngens} generators")
    d = t.index
    edges = []
    for g in range(t.ngens):
        for k in range(d):
            edges.append((k, t.rows[k][2 * g]))
    faces = []
    for f in c.faces:
        for k in range(d):
            v = k
            lifted = []
            for x in f:
                g = abs(x) - 1
                if x > 0:
                    lifted.append(g * d + v + 1)
                    v = t.rows[v][2 * g]
                else:
                    v = t.rows[v][2 * g + 1]
                    lifted.append(-(g * d + v + 1))
            faces.append(tuple(lifted))
    labels = None
    if c.edge_labels is not None:
        labels = tuple(f"{c.edge_labels[g]}_{k + 1}" for g in range(t.ngens) for k in range(d))
    return TwoComplex(d, tuple(edges), tuple(faces), {}, labels)


def transversal_tree(t: CosetTable) -> frozenset:
    """Edges of the Schreier tree of ``t``, as edge numbers of :func:`cover`."""
    tr = schreier_transversal(t)
    return frozenset(g * t.index + k for k, g in tr.tree_edges)


def bfs_tree(c: TwoComplex) -> frozenset:
    """A breadth-first spanning forest, scanning edges in numerical order."""
    adj = [[] for _ in range(c.vertex_count)]
    for e, (s, t) in enumerate(c.edges):
        adj[s].append((e, t))
        adj[t].append((e, s))
    seen = [False] * c.vertex_count
    tree = set()
    for root in range(c.vertex_count):
        if seen[root]:
            continue
        seen[root] = True
        queue = deque([root])
        while queue:
            v = queue.popleft()
            for e, w in adj[v]:
                if not seen[w]:
                    seen[w] = True
                    tree.add(e)
                    queue.append(w)
    return frozenset(tree)


def contract_tree(c: TwoComplex, tree: Iterable[int]) -> TwoComplex:
    """Collapse a forest of edges to points.

    Tree edges disappear from every face boundary.  A face left with no
    edges at all is dropped and counted in ``collapsed_faces``; faces of
    length 1 are kept, because discarding them would change the
    fundamental group.
    """
    tree = set(tree)
    parent = list(range(c.vertex_count))

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for e in sorted(tree):
        if not 0 <= e < len(c.edges):
            raise ComplexError(f"tree edge {e} out of range")
        a, b = (find(v) for v in c.edges[e])
        if a == b:
            raise ComplexError(f"tree edges contain a cycle (edge {e})")
        parent[max(a, b)] = min(a, b)
    roots = sorted({find(v) for v in range(c.vertex_count)})
    vnum = {r: k for k, r in enumerate(roots)}
    enum = {}
    edges = []
    labels = []
    for e, (s, t) in enumerate(c.edges):
        if e in tree:
            continue
        enum[e] = len(edges)
        edges.append((vnum[find(s)], vnum[find(t)]))
        labels.append(c.label(e))
    faces = []
    dropped = c.collapsed_faces
    for f in c.faces:
        w = tuple(enum[abs(x) - 1] + 1 if x > 0 else -(enum[abs(x) - 1] + 1) for x in f if abs(x) - 1 not in tree)
        if w:
            faces.append(w)
        else:
            dropped += 1
    iso = {}
    for v, lab in c.isotropy.items():
        iso.setdefault(vnum[find(v)], lab)
    return TwoComplex(len(roots), tuple(edges), tuple(faces), iso,
                      tuple(labels) if c.edge_labels is not None else None, dropped)


def attach_cones(c: TwoComplex, paths: Sequence[Sequence[int]], labels: Sequence[str]) -> TwoComplex:
    """Cone off each edge path from a new vertex carrying the given label.

    A path of length k gets k triangles fanned from its cone vertex, with
    one cone edge per path vertex (k of them if the path is closed, else
    k + 1).
    """
    if len(paths) != len(labels):
        raise ComplexError("one isotropy label per path required")
    nv = c.vertex_count
    edges = list(c.edges)
    faces = list(c.faces)
    iso = dict(c.isotropy)
    names = list(c.edge_labels) if c.edge_labels is not None else None
    for k, (path, lab) in enumerate(zip(paths, labels)):
        path = tuple(path)
        if not path:
            raise ComplexError("cannot cone over an empty path")
        for x in path:
            if x == 0 or abs(x) > len(c.edges):
                raise ComplexError(f"path letter {x} is not an edge of the complex")
        end = _walk(c, path)
        if end is None:
            raise ComplexError(f"path {path} is not a connected edge path")
        verts = [c.endpoints(path[0])[0]] + [c.endpoints(x)[1] for x in path]
        closed = verts[0] == verts[-1]
        apex = nv
        nv += 1
        iso[apex] = lab
        spokes = []
        for j, v in enumerate(verts[:-1] if closed else verts):
            spokes.append(len(edges))
            edges.append((apex, v))
            if names is not None:
                names.append(f"c{k + 1}_{j}")
        if closed:
            spokes.append(spokes[0])
        for j, x in enumerate(path):
            faces.append((spokes[j] + 1, x, -(spokes[j + 1] + 1)))
    return TwoComplex(nv, tuple(edges), tuple(faces), iso,
                      tuple(names) if names is not None else None, c.collapsed_faces)


def to_presentation(c: TwoComplex) -> Presentation:
    """Read a one-vertex complex as a presentation (edge labels as names)."""
    if c.vertex_count != 1:
        raise ComplexError(f"complex has {c.vertex_count} vertices; contract a spanning tree first")
    gens = tuple(c.label(e) for e in range(len(c.edges)))
    return Presentation(gens, c.faces)


def to_dot(c: TwoComplex) -> str:
    lines = ["digraph complex {"]
    for v in range(c.vertex_count):
        extra = f' [label="{v} ({c.isotropy[v]})"]' if v in c.isotropy else ""
        lines.append(f"  v{v}{extra};")
    for e, (s, t) in enumerate(c.edges):
        lines.append(f'  v{s} -> v{t} [label="{c.label(e)}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_json(c: TwoComplex) -> str:
    obj = {
        "vertices": c.vertex_count,
        "edges": [list(e) for e in c.edges],
        "faces": [list(f) for f in c.faces],
        "isotropy": {str(v): lab for v, lab in sorted(c.isotropy.items())},
        "labels": list(c.edge_labels) if c.edge_labels is not None else None,
        "collapsed_faces": c.collapsed_faces,
    }
    return json.dumps(obj, separators=(",", ":"), sort_keys=True)


def from_json(text: str) -> TwoComplex:
    obj = json.loads(text)
    labels = obj.get("labels")
    return TwoComplex(
        obj["vertices"],
        tuple(tuple(e) for e in obj["edges"]),
        tuple(tuple(f) for f in obj["faces"]),
        {int(k): v for k, v in obj.get("isotropy", {}).items()},
        tuple(labels) if labels is not None else None,
        obj.get("collapsed_faces", 0),
    )
