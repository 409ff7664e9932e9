"""The S-construction on a proto-abelian instance, truncated to degree <= 3.

A degree-n object is the full triangular diagram: entries A_ij (skeletal
objects of the instance) for 0 <= i < j <= n, monos along rows, epis down
columns, every square bicartesian (boundary squares with a zero corner are
the exactness conditions).  Faces delete a row and column, composing the
maps across the gap; degeneracies duplicate, inserting zero entries and
identity maps.  This full model makes the simplicial identities strict.
"""

from .. import BudgetExceededError
from ..groupoid import (DisjointUnion, FnFunctor, Groupoid, b_group)
from ..protoab.base import ProtoAbelianInstance
from .simplicial import TruncatedSimplicialGroupoid

DEFAULT_TRIANGLE_BUDGET = 200_000


def _pairs(n):
    return [(i, j) for i in range(n) for j in range(i + 1, n + 1)]


class Triangle:
    """Immutable triangle diagram; hashable via its encoding."""

    __slots__ = ("n", "entries", "rmono", "cepi", "_key")

    def __init__(self, n, entries, rmono, cepi):
        self.n = n
        self.entries = entries    # dict (i,j) -> class key
        self.rmono = rmono        # dict (i,j) -> map A_ij -> A_i,j+1 (j < n)
        self.cepi = cepi          # dict (i,j) -> map A_ij -> A_i+1,j (i+1 < j)
        self._key = (n,
                     tuple(entries[p] for p in _pairs(n)),
                     tuple(rmono[p] for p in sorted(rmono)),
                     tuple(cepi[p] for p in sorted(cepi)))

    def sig(self):
        return (self.n, tuple(self.entries[p] for p in _pairs(self.n)))

    def __eq__(self, other):
        return isinstance(other, Triangle) and self._key == other._key

    def __hash__(self):
        return hash(self._key)

    def __repr__(self):
        ent = {p: self.entries[p] for p in _pairs(self.n)}
        return f"Triangle(n={self.n}, {ent})"


def _epi_to_zero(inst, x):
    eps = inst.epis(x, inst.zero_key())
    assert len(eps) == 1
    return eps[0]


def _mono_from_zero(inst, x):
    ms = inst.monos(inst.zero_key(), x)
    assert len(ms) == 1
    return ms[0]


def _square_ok(inst, tri, i, j):
    """Bicartesian check for the square between rows i,i+1 and cols j-1,j
    (j >= i+2); the j-1 == i+1 boundary uses the zero corner."""
    m = tri.rmono[(i, j - 1)]
    q = tri.cepi[(i, j)]
    if j - 1 == i + 1:
        p = _epi_to_zero(inst, tri.entries[(i, j - 1)])
        jm = _mono_from_zero(inst, tri.entries[(i + 1, j)])
    else:
        p = tri.cepi[(i, j - 1)]
        jm = tri.rmono[(i + 1, j - 1)]
    return inst.square_bicartesian(m, p, q, jm)


def enumerate_triangles(inst: ProtoAbelianInstance, n: int, bound=None,
                        budget=DEFAULT_TRIANGLE_BUDGET):
    """All valid degree-n triangles with size(A_0n) <= bound."""
    classes = inst.iso_classes()
    if bound is not None:
        classes = [c for c in classes if inst.size_of(c) <= bound]
    if n == 0:
        return [Triangle(0, {}, {}, {})]

    # first rows: chains of monos A_01 -> ... -> A_0n
    rows0 = [({(0, 1): c}, {}) for c in classes]
    for j in range(2, n + 1):
        new = []
        for entries, rmono in rows0:
            prev = entries[(0, j - 1)]
            for c in classes:
                for m in inst.monos(prev, c):
                    e2 = dict(entries)
                    e2[(0, j)] = c
                    r2 = dict(rmono)
                    r2[(0, j - 1)] = m
                    new.append((e2, r2))
        rows0 = new

    out = []
    for entries0, rmono0 in rows0:
        stack = [(entries0, rmono0, {})]
        for i in range(1, n):
            new_stack = []
            for entries, rmono, cepi in stack:
                # choose A_{i,i+1} with epi from A_{i-1,i+1}, exactness at
                # the zero-corner square
                grown = []
                src = entries[(i - 1, i + 1)]
                im_first = inst.image_sub(rmono[(i - 1, i)])
                for c in classes:
                    for e in inst.epis(src, c):
                        if inst.preimage_sub(e, inst.zero_sub(c)) != im_first:
                            continue
                        e2 = dict(entries)
                        e2[(i, i + 1)] = c
                        c2 = dict(cepi)
                        c2[(i - 1, i + 1)] = e
                        grown.append((e2, rmono, c2))
                # extend along the row, enforcing commutativity; the
                # bicartesian condition is checked once the triangle closes
                for j in range(i + 2, n + 1):
                    grown2 = []
                    for e2, rm, c2 in grown:
                        src_epi = e2[(i - 1, j)]
                        left = e2[(i, j - 1)]
                        for c in classes:
                            for e in inst.epis(src_epi, c):
                                lhs = inst.compose(e, rm[(i - 1, j - 1)])
                                for m2 in inst.monos(left, c):
                                    if lhs != inst.compose(
                                            m2, c2[(i - 1, j - 1)]):
                                        continue
                                    e3 = dict(e2)
                                    e3[(i, j)] = c
                                    rm3 = dict(rm)
                                    rm3[(i, j - 1)] = m2
                                    c3 = dict(c2)
                                    c3[(i - 1, j)] = e
                                    grown2.append((e3, rm3, c3))
                    grown = grown2
                new_stack.extend(grown)
            stack = new_stack
            if len(stack) > budget:
                raise BudgetExceededError("triangle enumeration over budget")
        for entries, rmono, cepi in stack:
            tri = Triangle(n, entries, rmono, cepi)
            if all(_square_ok(inst, tri, i, j)
                   for i in range(n - 1) for j in range(i + 2, n + 1)):
                out.append(tri)
        if len(out) > budget:
            raise BudgetExceededError("triangle enumeration over budget")
    return out


class TriangleGroupoid(Groupoid):
    """Level n of the S-construction: triangles and componentwise isos."""

    def __init__(self, inst, n, bound=None, budget=DEFAULT_TRIANGLE_BUDGET,
                 name=None):
        self.inst = inst
        self.level = n
        tris = enumerate_triangles(inst, n, bound=bound, budget=budget)
        super().__init__(tris, name=name or f"S_{n}({inst.family})")
        self._buckets = {}
        for idx, t in enumerate(tris):
            self._buckets.setdefault(t.sig(), []).append(idx)
        self._iso_cache = {}
        self._inv_cache = {}
        self._out_cache = {}

    def _isos(self, cls):
        if cls not in self._iso_cache:
            isos = self.inst.isos(cls, cls)
            inv = {}
            ident = self.inst.identity(cls)
            for f in isos:
                for g in isos:
                    if self.inst.compose(g, f) == ident:
                        inv[f] = g
                        break
            self._iso_cache[cls] = isos
            self._inv_cache[cls] = inv
        return self._iso_cache[cls]

    def _component_isos(self, x: Triangle, y: Triangle):
        """Families (phi_p) of entry autos intertwining x's maps with y's."""
        if x.sig() != y.sig():
            return
        n = x.n
        pairs = _pairs(n)
        pools = []
        for p in pairs:
            pools.append(self._isos(x.entries[p]))

        def compatible(assign, p, phi):
            i, j = p
            inst = self.inst
            if j - 1 > i:
                left = (i, j - 1)
                if inst.compose(phi, x.rmono[left]) != \
                   inst.compose(y.rmono[left], assign[left]):
                    return False
            if i >= 1:
                up = (i - 1, j)
                if inst.compose(phi, x.cepi[up]) != \
                   inst.compose(y.cepi[up], assign[up]):
                    return False
            return True

        def rec(k, assign):
            if k == len(pairs):
                yield tuple(assign[p] for p in pairs)
                return
            p = pairs[k]
            for phi in pools[k]:
                if compatible(assign, p, phi):
                    assign[p] = phi
                    yield from rec(k + 1, assign)
                    del assign[p]

        yield from rec(0, {})

    # morphism token: (src_idx, tgt_idx, phis tuple aligned with _pairs(n))

    def out(self, i):
        cached = self._out_cache.get(i)
        if cached is None:
            x = self.objects[i]
            cached = []
            for j in self._buckets[x.sig()]:
                y = self.objects[j]
                cached.extend((i, j, phis)
                              for phis in self._component_isos(x, y))
            self._out_cache[i] = cached
        return cached

    def hom(self, i, j):
        return [m for m in self.out(i) if m[1] == j]

    def mor_src(self, m):
        return m[0]

    def mor_tgt(self, m):
        return m[1]

    def compose(self, m2, m1):
        assert m2[0] == m1[1]
        inst = self.inst
        phis = tuple(inst.compose(a, b) for a, b in zip(m2[2], m1[2]))
        return (m1[0], m2[1], phis)

    def identity(self, i):
        x = self.objects[i]
        phis = tuple(self.inst.identity(x.entries[p]) for p in _pairs(x.n))
        return (i, i, phis)

    def inverse(self, m):
        i, j, phis = m
        x = self.objects[i]
        inv = []
        for p, phi in zip(_pairs(x.n), phis):
            self._isos(x.entries[p])  # populate inversion cache
            inv.append(self._inv_cache[x.entries[p]][phi])
        return (j, i, tuple(inv))


def _face_triangle(inst, tri: Triangle, k: int) -> Triangle:
    """Delete row and column k."""
    n = tri.n
    keep = [x for x in range(n + 1) if x != k]
    s = {new: old for new, old in enumerate(keep)}
    entries, rmono, cepi = {}, {}, {}
    for i in range(n):
        for j in range(i + 1, n):
            entries[(i, j)] = tri.entries[(s[i], s[j])]
    for i in range(n - 1):
        for j in range(i + 1, n - 1):
            si, sj, sj1 = s[i], s[j], s[j + 1]
            if sj1 == sj + 1:
                rmono[(i, j)] = tri.rmono[(si, sj)]
            else:
                rmono[(i, j)] = inst.compose(tri.rmono[(si, sj + 1)],
                                             tri.rmono[(si, sj)])
    for i in range(n - 2):
        for j in range(i + 2, n):
            si, si1, sj = s[i], s[i + 1], s[j]
            if si1 == si + 1:
                cepi[(i, j)] = tri.cepi[(si, sj)]
            else:
                cepi[(i, j)] = inst.compose(tri.cepi[(si + 1, sj)],
                                            tri.cepi[(si, sj)])
    return Triangle(n - 1, entries, rmono, cepi)


def _degeneracy_triangle(inst, tri: Triangle, k: int) -> Triangle:
    """Duplicate index k, inserting zero entries and identity maps."""
    n = tri.n
    t = lambda x: x if x <= k else x - 1
    zero = inst.zero_key()
    entries, rmono, cepi = {}, {}, {}
    for i in range(n + 1):
        for j in range(i + 1, n + 2):
            entries[(i, j)] = (zero if t(i) == t(j)
                               else tri.entries[(t(i), t(j))])
    for i in range(n + 1):
        for j in range(i + 1, n + 1):
            a, b = entries[(i, j)], entries[(i, j + 1)]
            if t(i) == t(j):                  # zero entry source
                rmono[(i, j)] = _mono_from_zero(inst, b)
            elif t(j + 1) == t(j):            # duplicated column
                rmono[(i, j)] = inst.identity(a)
            else:
                rmono[(i, j)] = tri.rmono[(t(i), t(j))]
    for i in range(n):
        for j in range(i + 2, n + 2):
            a, b = entries[(i, j)], entries[(i + 1, j)]
            if t(i + 1) == t(i):              # duplicated row
                cepi[(i, j)] = inst.identity(a)
            elif t(i + 1) == t(j):            # target is a zero entry
                cepi[(i, j)] = _epi_to_zero(inst, a)
            else:
                cepi[(i, j)] = tri.cepi[(t(i), t(j))]
    return Triangle(n + 1, entries, rmono, cepi)


def s_construction(inst: ProtoAbelianInstance, depth: int = 3, bound=None,
                   budget=DEFAULT_TRIANGLE_BUDGET) -> TruncatedSimplicialGroupoid:
    """Levels 0..depth of the flag simplicial groupoid of the instance."""
    assert 0 <= depth <= 3
    levels = [TriangleGroupoid(inst, n, bound=bound, budget=budget)
              for n in range(depth + 1)]
    faces, degens = {}, {}
    for n in range(1, depth + 1):
        src, tgt = levels[n], levels[n - 1]
        src_pos = {p: k for k, p in enumerate(_pairs(n))}
        for k in range(n + 1):
            obj_map = [tgt.obj_index(_face_triangle(inst, tri, k))
                       for tri in src.objects]
            keep = [x for x in range(n + 1) if x != k]
            sel_idx = [src_pos[(keep[a], keep[b])] for (a, b) in _pairs(n - 1)]

            def mor_map(m, *, obj_map=obj_map, sel_idx=sel_idx):
                i, j, phis = m
                return (obj_map[i], obj_map[j],
                        tuple(phis[s] for s in sel_idx))

            faces[(n, k)] = FnFunctor(src, tgt, obj_map, mor_map,
                                      name=f"d_{k}^{n}")
    zero_id = inst.identity(inst.zero_key())
    for n in range(0, depth):
        src, tgt = levels[n], levels[n + 1]
        src_pos = {p: k for k, p in enumerate(_pairs(n))}
        for k in range(n + 1):
            obj_map = [tgt.obj_index(_degeneracy_triangle(inst, tri, k))
                       for tri in src.objects]
            t = lambda x, k=k: x if x <= k else x - 1
            sel_idx = [None if t(a) == t(b) else src_pos[(t(a), t(b))]
                       for (a, b) in _pairs(n + 1)]

            def mor_map(m, *, obj_map=obj_map, sel_idx=sel_idx):
                i, j, phis = m
                return (obj_map[i], obj_map[j],
                        tuple(zero_id if s is None else phis[s]
                              for s in sel_idx))

            degens[(n, k)] = FnFunctor(src, tgt, obj_map, mor_map,
                                       name=f"s_{k}^{n}")
    return TruncatedSimplicialGroupoid(levels, faces, degens,
                                       name=f"S({inst.family})")


class FlagGroupoid(Groupoid):
    """Flags 0 >-> A_1 >-> ... >-> A_n only (no quotient data); equivalent
    to the full triangle model, which is checked via is_equivalence."""

    def __init__(self, inst, n, bound=None, name=None):
        self.inst = inst
        self.level = n
        classes = inst.iso_classes()
        if bound is not None:
            classes = [c for c in classes if inst.size_of(c) <= bound]
        flags = [((), ())] if n == 0 else None
        if flags is None:
            flags = [((c,), ()) for c in classes]
            for _ in range(n - 1):
                new = []
                for entries, monos in flags:
                    for c in classes:
                        for m in inst.monos(entries[-1], c):
                            new.append((entries + (c,), monos + (m,)))
                flags = new
        super().__init__(flags, name=name or f"Flags_{n}({inst.family})")
        self._buckets = {}
        for i, (entries, _) in enumerate(flags):
            self._buckets.setdefault(entries, []).append(i)
        self._out_cache = {}

    def _families(self, x, y):
        inst = self.inst
        entries, monos_x = x
        _, monos_y = y
        pools = [inst.isos(c, c) for c in entries]

        def rec(k, chosen):
            if k == len(entries):
                yield tuple(chosen)
                return
            for phi in pools[k]:
                if k > 0 and inst.compose(phi, monos_x[k - 1]) != \
                        inst.compose(monos_y[k - 1], chosen[k - 1]):
                    continue
                chosen.append(phi)
                yield from rec(k + 1, chosen)
                chosen.pop()

        yield from rec(0, [])

    def out(self, i):
        cached = self._out_cache.get(i)
        if cached is None:
            x = self.objects[i]
            cached = []
            for j in self._buckets[x[0]]:
                cached.extend((i, j, phis)
                              for phis in self._families(x, self.objects[j]))
            self._out_cache[i] = cached
        return cached

    def hom(self, i, j):
        return [m for m in self.out(i) if m[1] == j]

    def mor_src(self, m):
        return m[0]

    def mor_tgt(self, m):
        return m[1]

    def compose(self, m2, m1):
        assert m2[0] == m1[1]
        phis = tuple(self.inst.compose(a, b) for a, b in zip(m2[2], m1[2]))
        return (m1[0], m2[1], phis)

    def identity(self, i):
        entries, _ = self.objects[i]
        return (i, i, tuple(self.inst.identity(c) for c in entries))

    def inverse(self, m):
        i, j, phis = m
        entries, _ = self.objects[i]
        inst = self.inst
        inv = []
        for c, phi in zip(entries, phis):
            ident = inst.identity(c)
            inv.append(next(g for g in inst.isos(c, c)
                            if inst.compose(g, phi) == ident))
        return (j, i, tuple(inv))


def flag_comparison_functor(tri_level: TriangleGroupoid,
                            flags: FlagGroupoid):
    """Project a triangle to its first row."""
    n = tri_level.level

    def obj_map(i):
        tri = tri_level.objects[i]
        entries = tuple(tri.entries[(0, j)] for j in range(1, n + 1))
        monos = tuple(tri.rmono[(0, j)] for j in range(1, n))
        return flags.obj_index((entries, monos))

    pairs = _pairs(n)
    first_row = [pairs.index((0, j)) for j in range(1, n + 1)]

    def mor_map(m):
        i, j, phis = m
        return (obj_map(i), obj_map(j), tuple(phis[k] for k in first_row))

    return FnFunctor(tri_level, flags, obj_map, mor_map, name="first-row")


def skeletal_core_groupoid(inst, bound=None):
    """Disjoint union of B(Aut(c)) over iso classes: the instance's core."""
    classes = inst.iso_classes()
    if bound is not None:
        classes = [c for c in classes if inst.size_of(c) <= bound]
    parts = [b_group(inst.aut_group(c), name=f"B(Aut:{c})") for c in classes]
    return DisjointUnion(parts, name=f"core({inst.family})"), classes


def core_comparison_functor(x1: TriangleGroupoid):
    """X_[1] -> skeletal core; an equivalence by construction, asserted in
    tests via is_equivalence."""
    inst = x1.inst
    core, classes = skeletal_core_groupoid(inst)
    cls_pos = {c: k for k, c in enumerate(classes)}

    def obj_map(i):
        tri = x1.objects[i]
        return core.offsets[cls_pos[tri.entries[(0, 1)]]]

    def mor_map(m):
        i, _, phis = m
        tri = x1.objects[i]
        part = cls_pos[tri.entries[(0, 1)]]
        return (part, (phis[0], 0))

    return FnFunctor(x1, core, obj_map, mor_map, name="to-core")
