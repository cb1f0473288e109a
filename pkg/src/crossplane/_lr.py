"""Left-right planarity kernel (pure Python).

Implements the LR planarity criterion of de Fraysseix and Rosenstiehl in
the formulation of Brandes' technical report "The Left-Right Planarity
Test": a DFS orientation phase, a constraint-stack testing phase over
conflict pairs of back-edge intervals, and an embedding phase that turns
the computed edge sides into per-vertex rotation lists.

This module is deliberately self-contained and array-flavored: it is the
hot kernel of the package and has a compiled twin (_lr_c.pyx) with the
same entry point. Keep the two files in sync.

Input is a simple undirected graph as adjacency lists over vertices
0..n-1. Output is one rotation list per vertex (neighbors in cyclic
order) or None when the graph is not planar.
"""

from __future__ import annotations

from typing import Optional


class _Interval:
    """A maximal set of back edges crossing one fork, ordered by lowpoint."""

    __slots__ = ("low", "high")

    def __init__(self, low=None, high=None):
        self.low = low
        self.high = high

    def empty(self):
        return self.low is None and self.high is None

    def copy(self):
        return _Interval(self.low, self.high)


class _ConflictPair:
    """Left/right interval pair on the constraint stack."""

    __slots__ = ("left", "right")

    def __init__(self, left=None, right=None):
        self.left = left if left is not None else _Interval()
        self.right = right if right is not None else _Interval()

    def swap(self):
        self.left, self.right = self.right, self.left


class _NonPlanar(Exception):
    pass


class _LRKernel:
    def __init__(self, n: int, adj: list[list[int]]):
        self.n = n
        self.adj = adj
        self.height: list[Optional[int]] = [None] * n
        self.parent_edge: list[Optional[tuple[int, int]]] = [None] * n
        self.roots: list[int] = []
        self.lowpt: dict[tuple[int, int], int] = {}
        self.lowpt2: dict[tuple[int, int], int] = {}
        self.nesting_depth: dict[tuple[int, int], int] = {}
        self.oriented: set[tuple[int, int]] = set()
        self.ordered_adjs: list[list[int]] = [[] for _ in range(n)]
        # testing state
        self.S: list[_ConflictPair] = []
        self.stack_bottom: dict[tuple[int, int], Optional[_ConflictPair]] = {}
        self.lowpt_edge: dict[tuple[int, int], tuple[int, int]] = {}
        self.ref: dict[tuple[int, int], Optional[tuple[int, int]]] = {}
        self.side: dict[tuple[int, int], int] = {}

    # -- phase 1: orientation ------------------------------------------

    def _finish_edge(self, vw: tuple[int, int]) -> None:
        """Nesting depth of vw plus lowpoint propagation into its parent edge."""
        v = vw[0]
        hv = self.height[v]
        self.nesting_depth[vw] = 2 * self.lowpt[vw]
        if self.lowpt2[vw] < hv:
            self.nesting_depth[vw] += 1
        e = self.parent_edge[v]
        if e is None:
            return
        if self.lowpt[vw] < self.lowpt[e]:
            self.lowpt2[e] = min(self.lowpt[e], self.lowpt2[vw])
            self.lowpt[e] = self.lowpt[vw]
        elif self.lowpt[vw] > self.lowpt[e]:
            self.lowpt2[e] = min(self.lowpt2[e], self.lowpt[vw])
        else:
            self.lowpt2[e] = min(self.lowpt2[e], self.lowpt2[vw])

    def orient(self) -> None:
        for root in range(self.n):
            if self.height[root] is not None:
                continue
            self.height[root] = 0
            self.roots.append(root)
            stack: list[list[int]] = [[root, 0]]
            while stack:
                frame = stack[-1]
                v = frame[0]
                adj_v = self.adj[v]
                descended = False
                while frame[1] < len(adj_v):
                    w = adj_v[frame[1]]
                    frame[1] += 1
                    vw = (v, w)
                    if vw in self.oriented or (w, v) in self.oriented:
                        continue
                    self.oriented.add(vw)
                    self.lowpt[vw] = self.height[v]
                    self.lowpt2[vw] = self.height[v]
                    if self.height[w] is None:
                        self.parent_edge[w] = vw
                        self.height[w] = self.height[v] + 1
                        stack.append([w, 0])
                        descended = True
                        break
                    self.lowpt[vw] = self.height[w]
                    self._finish_edge(vw)
                if descended:
                    continue
                stack.pop()
                pe = self.parent_edge[v]
                if pe is not None:
                    self._finish_edge(pe)

    # -- phase 2: testing ----------------------------------------------

    def _edge_lowpt(self, e: tuple[int, int]) -> int:
        return self.lowpt[e]

    def _conflicting(self, interval: _Interval, b: tuple[int, int]) -> bool:
        return not interval.empty() and self.lowpt[interval.high] > self.lowpt[b]

    def _lowest(self, pair: _ConflictPair) -> int:
        if pair.left.empty():
            return self.lowpt[pair.right.low]
        if pair.right.empty():
            return self.lowpt[pair.left.low]
        return min(self.lowpt[pair.left.low], self.lowpt[pair.right.low])

    def _top(self) -> Optional[_ConflictPair]:
        return self.S[-1] if self.S else None

    def _add_constraints(self, ei: tuple[int, int], e: tuple[int, int]) -> None:
        pair = _ConflictPair()
        # merge return edges of ei into pair.right
        while True:
            q = self.S.pop()
            if not q.left.empty():
                q.swap()
            if not q.left.empty():
                raise _NonPlanar
            if self.lowpt[q.right.low] > self.lowpt[e]:
                if pair.right.empty():
                    pair.right.high = q.right.high
                else:
                    self.ref[pair.right.low] = q.right.high
                pair.right.low = q.right.low
            else:
                self.ref[q.right.low] = self.lowpt_edge[e]
            if self._top() is self.stack_bottom[ei]:
                break
        # merge conflicting return edges of earlier siblings into pair.left
        while self._conflicting(self.S[-1].left, ei) or self._conflicting(
            self.S[-1].right, ei
        ):
            q = self.S.pop()
            if self._conflicting(q.right, ei):
                q.swap()
            if self._conflicting(q.right, ei):
                raise _NonPlanar
            self.ref[pair.right.low] = q.right.high
            if q.right.low is not None:
                pair.right.low = q.right.low
            if pair.left.empty():
                pair.left.high = q.left.high
            else:
                self.ref[pair.left.low] = q.left.high
            pair.left.low = q.left.low
        if not (pair.left.empty() and pair.right.empty()):
            self.S.append(pair)

    def _trim_back_edges(self, e: tuple[int, int]) -> None:
        u = e[0]
        # drop entire conflict pairs returning exactly to u
        while self.S and self._lowest(self.S[-1]) == self.height[u]:
            pair = self.S.pop()
            if pair.left.low is not None:
                self.side[pair.left.low] = -1
        if self.S:
            pair = self.S.pop()
            while pair.left.high is not None and pair.left.high[1] == u:
                pair.left.high = self.ref.get(pair.left.high)
            if pair.left.high is None and pair.left.low is not None:
                self.ref[pair.left.low] = pair.right.low
                self.side[pair.left.low] = -1
                pair.left.low = None
            while pair.right.high is not None and pair.right.high[1] == u:
                pair.right.high = self.ref.get(pair.right.high)
            if pair.right.high is None and pair.right.low is not None:
                self.ref[pair.right.low] = pair.left.low
                self.side[pair.right.low] = -1
                pair.right.low = None
            self.S.append(pair)
        # keep a reference to the highest surviving return edge
        if self.lowpt[e] < self.height[u]:
            top = self.S[-1]
            hl = top.left.high
            hr = top.right.high
            if hl is not None and (hr is None or self.lowpt[hl] > self.lowpt[hr]):
                self.ref[e] = hl
            else:
                self.ref[e] = hr

    _ENTER = 0
    _INTEGRATE = 1

    def test(self) -> bool:
        for v in range(self.n):
            order = []
            for w in self.adj[v]:
                vw = (v, w)
                if vw in self.oriented:
                    order.append(w)
            order.sort(key=lambda w: self.nesting_depth[(v, w)])
            self.ordered_adjs[v] = order
            for w in order:
                self.side[(v, w)] = 1
                self.ref[(v, w)] = None

        try:
            for root in self.roots:
                stack: list[tuple[int, int, int]] = [(self._ENTER, root, 0)]
                while stack:
                    kind, v, idx = stack[-1]
                    if kind == self._ENTER:
                        order = self.ordered_adjs[v]
                        if idx >= len(order):
                            stack.pop()
                            pe = self.parent_edge[v]
                            if pe is not None:
                                self._trim_back_edges(pe)
                            continue
                        w = order[idx]
                        ei = (v, w)
                        self.stack_bottom[ei] = self._top()
                        stack[-1] = (self._ENTER, v, idx + 1)
                        if self.parent_edge[w] == ei:
                            stack.append((self._INTEGRATE, v, idx))
                            stack.append((self._ENTER, w, 0))
                        else:
                            self.lowpt_edge[ei] = ei
                            self.S.append(
                                _ConflictPair(right=_Interval(ei, ei))
                            )
                            stack.append((self._INTEGRATE, v, idx))
                    else:
                        stack.pop()
                        w = self.ordered_adjs[v][idx]
                        ei = (v, w)
                        if self.lowpt[ei] < self.height[v]:
                            pe = self.parent_edge[v]
                            if idx == 0:
                                if pe is not None:
                                    self.lowpt_edge[pe] = self.lowpt_edge[ei]
                            else:
                                if pe is not None:
                                    self._add_constraints(ei, pe)
        except _NonPlanar:
            return False
        return True

    # -- phase 3: embedding --------------------------------------------

    def _resolve_side(self, e: tuple[int, int]) -> int:
        chain = []
        cur: Optional[tuple[int, int]] = e
        while cur is not None and self.ref.get(cur) is not None:
            chain.append(cur)
            cur = self.ref[cur]
        sign = self.side.get(cur, 1) if cur is not None else 1
        for edge in reversed(chain):
            self.side[edge] = self.side.get(edge, 1) * sign
            self.ref[edge] = None
            sign = self.side[edge]
        return sign

    def embed(self) -> list[list[int]]:
        for v in range(self.n):
            for w in self.ordered_adjs[v]:
                self.nesting_depth[(v, w)] *= self._resolve_side((v, w))
            self.ordered_adjs[v].sort(key=lambda w: self.nesting_depth[(v, w)])

        rotation: list[list[int]] = [[] for _ in range(self.n)]
        left_ref: list[int] = [-1] * self.n
        right_ref: list[int] = [-1] * self.n

        for root in self.roots:
            stack = [[root, 0]]
            while stack:
                frame = stack[-1]
                v = frame[0]
                order = self.ordered_adjs[v]
                descended = False
                while frame[1] < len(order):
                    w = order[frame[1]]
                    frame[1] += 1
                    ei = (v, w)
                    if self.parent_edge[w] == ei:
                        rotation[w].insert(0, v)
                        rotation[v].append(w)
                        left_ref[v] = w
                        right_ref[v] = w
                        stack.append([w, 0])
                        descended = True
                        break
                    # back edge (v, w) with w an ancestor
                    rotation[v].append(w)
                    if self.side.get(ei, 1) == 1:
                        anchor = right_ref[w]
                        pos = rotation[w].index(anchor)
                        rotation[w].insert(pos + 1, v)
                    else:
                        anchor = left_ref[w]
                        pos = rotation[w].index(anchor)
                        rotation[w].insert(pos, v)
                        left_ref[w] = v
                if not descended:
                    stack.pop()
        return rotation


def planar_rotation(n: int, adj: list[list[int]]) -> Optional[list[list[int]]]:
    """LR planarity test with embedding.

    Args:
        n: number of vertices (graph is over 0..n-1).
        adj: adjacency lists of a simple undirected graph; each edge must
            appear in both endpoint lists.

    Returns:
        Per-vertex rotation lists of a planar embedding, or None when the
        graph is not planar.
    """
    if n <= 1:
        return [[] for _ in range(n)]
    m = sum(len(a) for a in adj) // 2
    if n >= 3 and m > 3 * n - 6:
        return None
    kernel = _LRKernel(n, adj)
    kernel.orient()
    if not kernel.test():
        return None
    return kernel.embed()


KERNEL_NAME = "pure-python"
