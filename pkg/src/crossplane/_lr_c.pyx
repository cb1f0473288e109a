# cython: language_level=3
"""Compiled twin of the left-right planarity kernel.

Same algorithm, same entry point, same output as _lr.py; the interval
and conflict-pair records are cdef classes and the DFS loops use typed
locals. Any behavioral change must be made in both files, and the test
suite asserts output parity between the two.
"""

from typing import Optional


cdef class _Interval:
    cdef public object low
    cdef public object high

    def __init__(self, low=None, high=None):
        self.low = low
        self.high = high

    cdef bint empty(self):
        return self.low is None and self.high is None


cdef class _ConflictPair:
    cdef public _Interval left
    cdef public _Interval right

    def __init__(self, left=None, right=None):
        self.left = left if left is not None else _Interval()
        self.right = right if right is not None else _Interval()

    cdef void swap(self):
        self.left, self.right = self.right, self.left


class _NonPlanar(Exception):
    pass


cdef class _LRKernel:
    cdef public int n
    cdef public list adj
    cdef public list height
    cdef public list parent_edge
    cdef public list roots
    cdef public dict lowpt
    cdef public dict lowpt2
    cdef public dict nesting_depth
    cdef public set oriented
    cdef public list ordered_adjs
    cdef public list S
    cdef public dict stack_bottom
    cdef public dict lowpt_edge
    cdef public dict ref
    cdef public dict side

    def __init__(self, int n, list adj):
        self.n = n
        self.adj = adj
        self.height = [None] * n
        self.parent_edge = [None] * n
        self.roots = []
        self.lowpt = {}
        self.lowpt2 = {}
        self.nesting_depth = {}
        self.oriented = set()
        self.ordered_adjs = [[] for _ in range(n)]
        self.S = []
        self.stack_bottom = {}
        self.lowpt_edge = {}
        self.ref = {}
        self.side = {}

    # -- phase 1: orientation ------------------------------------------

    cdef void _finish_edge(self, tuple vw):
        cdef int v = vw[0]
        cdef int hv = self.height[v]
        cdef int nd = 2 * <int> self.lowpt[vw]
        if <int> self.lowpt2[vw] < hv:
            nd += 1
        self.nesting_depth[vw] = nd
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

    def orient(self):
        cdef int root, v, w
        cdef bint descended
        cdef list stack, frame, adj_v
        for root in range(self.n):
            if self.height[root] is not None:
                continue
            self.height[root] = 0
            self.roots.append(root)
            stack = [[root, 0]]
            while stack:
                frame = stack[-1]
                v = frame[0]
                adj_v = self.adj[v]
                descended = False
                while <int> frame[1] < len(adj_v):
                    w = adj_v[frame[1]]
                    frame[1] = frame[1] + 1
                    vw = (v, w)
                    if vw in self.oriented or (w, v) in self.oriented:
                        continue
                    self.oriented.add(vw)
                    self.lowpt[vw] = self.height[v]
                    self.lowpt2[vw] = self.height[v]
                    if self.height[w] is None:
                        self.parent_edge[w] = vw
                        self.height[w] = <int> self.height[v] + 1
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

    cdef bint _conflicting(self, _Interval interval, tuple b):
        return (not interval.empty()) and <int> self.lowpt[interval.high] > <int> self.lowpt[b]

    cdef int _lowest(self, _ConflictPair pair):
        if pair.left.empty():
            return self.lowpt[pair.right.low]
        if pair.right.empty():
            return self.lowpt[pair.left.low]
        return min(<int> self.lowpt[pair.left.low], <int> self.lowpt[pair.right.low])

    cdef object _top(self):
        return self.S[-1] if self.S else None

    cdef void _add_constraints(self, tuple ei, tuple e) except *:
        cdef _ConflictPair pair = _ConflictPair()
        cdef _ConflictPair q
        while True:
            q = self.S.pop()
            if not q.left.empty():
                q.swap()
            if not q.left.empty():
                raise _NonPlanar
            if <int> self.lowpt[q.right.low] > <int> self.lowpt[e]:
                if pair.right.empty():
                    pair.right.high = q.right.high
                else:
                    self.ref[pair.right.low] = q.right.high
                pair.right.low = q.right.low
            else:
                self.ref[q.right.low] = self.lowpt_edge[e]
            if self._top() is self.stack_bottom[ei]:
                break
        while self._conflicting((<_ConflictPair> self.S[-1]).left, ei) or self._conflicting(
            (<_ConflictPair> self.S[-1]).right, ei
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

    cdef void _trim_back_edges(self, tuple e):
        cdef int u = e[0]
        cdef _ConflictPair pair, top
        while self.S and self._lowest(<_ConflictPair> self.S[-1]) == <int> self.height[u]:
            pair = self.S.pop()
            if pair.left.low is not None:
                self.side[pair.left.low] = -1
        if self.S:
            pair = self.S.pop()
            while pair.left.high is not None and <int> (<tuple> pair.left.high)[1] == u:
                pair.left.high = self.ref.get(pair.left.high)
            if pair.left.high is None and pair.left.low is not None:
                self.ref[pair.left.low] = pair.right.low
                self.side[pair.left.low] = -1
                pair.left.low = None
            while pair.right.high is not None and <int> (<tuple> pair.right.high)[1] == u:
                pair.right.high = self.ref.get(pair.right.high)
            if pair.right.high is None and pair.right.low is not None:
                self.ref[pair.right.low] = pair.left.low
                self.side[pair.right.low] = -1
                pair.right.low = None
            self.S.append(pair)
        if <int> self.lowpt[e] < <int> self.height[u]:
            top = <_ConflictPair> self.S[-1]
            hl = top.left.high
            hr = top.right.high
            if hl is not None and (hr is None or <int> self.lowpt[hl] > <int> self.lowpt[hr]):
                self.ref[e] = hl
            else:
                self.ref[e] = hr

    def test(self):
        cdef int v, w, idx, kind
        cdef list order, stack
        for v in range(self.n):
            order = []
            for w in self.adj[v]:
                if (v, w) in self.oriented:
                    order.append(w)
            order.sort(key=lambda x, _v=v: self.nesting_depth[(_v, x)])
            self.ordered_adjs[v] = order
            for w in order:
                self.side[(v, w)] = 1
                self.ref[(v, w)] = None

        try:
            for root in self.roots:
                stack = [(0, root, 0)]
                while stack:
                    kind, v, idx = stack[-1]
                    if kind == 0:  # enter
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
                        stack[-1] = (0, v, idx + 1)
                        if self.parent_edge[w] == ei:
                            stack.append((1, v, idx))
                            stack.append((0, w, 0))
                        else:
                            self.lowpt_edge[ei] = ei
                            self.S.append(_ConflictPair(right=_Interval(ei, ei)))
                            stack.append((1, v, idx))
                    else:  # integrate
                        stack.pop()
                        w = self.ordered_adjs[v][idx]
                        ei = (v, w)
                        if <int> self.lowpt[ei] < <int> self.height[v]:
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

    cdef int _resolve_side(self, tuple e):
        cdef list chain = []
        cdef int sign
        cur = e
        while cur is not None and self.ref.get(cur) is not None:
            chain.append(cur)
            cur = self.ref[cur]
        sign = self.side.get(cur, 1) if cur is not None else 1
        for edge in reversed(chain):
            self.side[edge] = <int> self.side.get(edge, 1) * sign
            self.ref[edge] = None
            sign = self.side[edge]
        return sign

    def embed(self):
        cdef int v, w, root, pos
        cdef list rotation, order, stack, frame
        cdef list left_ref = [-1] * self.n
        cdef list right_ref = [-1] * self.n
        cdef bint descended

        for v in range(self.n):
            for w in self.ordered_adjs[v]:
                self.nesting_depth[(v, w)] = (
                    <int> self.nesting_depth[(v, w)] * self._resolve_side((v, w))
                )
            self.ordered_adjs[v].sort(key=lambda x, _v=v: self.nesting_depth[(_v, x)])

        rotation = [[] for _ in range(self.n)]
        for root in self.roots:
            stack = [[root, 0]]
            while stack:
                frame = stack[-1]
                v = frame[0]
                order = self.ordered_adjs[v]
                descended = False
                while <int> frame[1] < len(order):
                    w = order[frame[1]]
                    frame[1] = frame[1] + 1
                    ei = (v, w)
                    if self.parent_edge[w] == ei:
                        (<list> rotation[w]).insert(0, v)
                        (<list> rotation[v]).append(w)
                        left_ref[v] = w
                        right_ref[v] = w
                        stack.append([w, 0])
                        descended = True
                        break
                    (<list> rotation[v]).append(w)
                    if <int> self.side.get(ei, 1) == 1:
                        pos = (<list> rotation[w]).index(right_ref[w])
                        (<list> rotation[w]).insert(pos + 1, v)
                    else:
                        pos = (<list> rotation[w]).index(left_ref[w])
                        (<list> rotation[w]).insert(pos, v)
                        left_ref[w] = v
                if not descended:
                    stack.pop()
        return rotation


def planar_rotation(n: int, adj: list) -> Optional[list]:
    """LR planarity test with embedding; see the pure twin for the contract."""
    if n <= 1:
        return [[] for _ in range(n)]
    cdef int m = 0
    for a in adj:
        m += len(a)
    m //= 2
    if n >= 3 and m > 3 * n - 6:
        return None
    kernel = _LRKernel(n, adj)
    kernel.orient()
    if not kernel.test():
        return None
    return kernel.embed()


KERNEL_NAME = "cython"
