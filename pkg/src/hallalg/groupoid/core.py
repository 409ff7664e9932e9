"""Finite groupoids with exact hom-sets.

Objects are indexed 0..n-1; morphisms are hashable tokens interpreted by the
owning groupoid (source/target/compose/inverse).  Small groupoids can be
fully explicit tables (TableGroupoid, with JSON exchange); large ones keep
hom-sets enumerable on demand so that exact bijection tests stay decidable
without materializing morphism tables (ActionGroupoid, fiber products).

pi0 is computed by BFS over a generating family of morphisms; components are
ordered by their smallest object index and carry the automorphism-group
order of a representative.
"""

from dataclasses import dataclass
from fractions import Fraction

from .. import BudgetExceededError
from ..groups import FiniteGroup, trivial_group

DEFAULT_OBJECT_BUDGET = 10 ** 6


@dataclass(frozen=True)
class Component:
    index: int
    rep: int          # object index of the representative
    size: int         # number of objects
    aut_order: int    # |Aut(rep)|


class Groupoid:
    """Base: subclasses define objects and the morphism token protocol."""

    objects: list

    def __init__(self, objects, name="X"):
        self.objects = list(objects)
        self.name = name
        self._obj_index = None
        self._components = None
        self._comp_of = None

    # -- object indexing ----------------------------------------------------

    @property
    def n_objects(self):
        return len(self.objects)

    def obj_index(self, obj):
        if self._obj_index is None:
            self._obj_index = {o: i for i, o in enumerate(self.objects)}
        return self._obj_index[obj]

    def try_obj_index(self, obj):
        if self._obj_index is None:
            self._obj_index = {o: i for i, o in enumerate(self.objects)}
        return self._obj_index.get(obj)

    # -- morphism token protocol (subclass responsibility) ------------------

    def out(self, i):
        """All morphisms with source object index i."""
        raise NotImplementedError

    def gens_out(self, i):
        """A family of morphisms out of i sufficient to generate; defaults to
        all of them."""
        return self.out(i)

    def mor_src(self, m) -> int:
        raise NotImplementedError

    def mor_tgt(self, m) -> int:
        raise NotImplementedError

    def compose(self, m2, m1):
        """m2 after m1; requires mor_src(m2) == mor_tgt(m1)."""
        raise NotImplementedError

    def identity(self, i):
        raise NotImplementedError

    def inverse(self, m):
        raise NotImplementedError

    def hom(self, i, j) -> list:
        return [m for m in self.out(i) if self.mor_tgt(m) == j]

    def aut_size(self, i) -> int:
        return len(self.hom(i, i))

    def neighbors(self, i):
        """Targets of generating morphisms out of i (for pi0 BFS)."""
        for m in self.gens_out(i):
            yield self.mor_tgt(m)

    def n_morphisms(self) -> int:
        return sum(len(list(self.out(i))) for i in range(self.n_objects))

    # -- pi0 -----------------------------------------------------------------

    def components(self) -> list[Component]:
        if self._components is None:
            n = self.n_objects
            comp_of = [-1] * n
            comps = []
            for start in range(n):
                if comp_of[start] >= 0:
                    continue
                idx = len(comps)
                comp_of[start] = idx
                stack = [start]
                size = 1
                while stack:
                    x = stack.pop()
                    for t in self.neighbors(x):
                        if comp_of[t] < 0:
                            comp_of[t] = idx
                            stack.append(t)
                            size += 1
                comps.append(Component(idx, start, size, self.aut_size(start)))
            self._comp_of = comp_of
            self._components = comps
        return self._components

    def component_of(self, i) -> int:
        self.components()
        return self._comp_of[i]

    def generating_morphisms(self):
        """A set of morphisms generating the groupoid under composition and
        inverses: BFS spanning-tree edges plus Aut(rep) per component.
        Functors agreeing here (and on objects) agree everywhere."""
        if getattr(self, "_genmors", None) is None:
            gens = []
            n = self.n_objects
            seen = [False] * n
            for start in range(n):
                if seen[start]:
                    continue
                seen[start] = True
                gens.extend(self.hom(start, start))
                stack = [start]
                while stack:
                    x = stack.pop()
                    for m in self.gens_out(x):
                        t = self.mor_tgt(m)
                        if not seen[t]:
                            seen[t] = True
                            gens.append(m)
                            stack.append(t)
            self._genmors = gens
        return self._genmors

    def cardinality(self) -> Fraction:
        """Groupoid cardinality: sum over components of 1/#Aut."""
        return sum((Fraction(1, c.aut_order) for c in self.components()),
                   Fraction(0))

    # -- validation ----------------------------------------------------------

    def validate(self, budget: int = 200_000):
        """Check the groupoid axioms; exhaustive below `budget` morphism
        pairs, spot-checked above."""
        n = self.n_objects
        for i in range(min(n, budget)):
            e = self.identity(i)
            assert self.mor_src(e) == i and self.mor_tgt(e) == i
        seen_pairs = 0
        for i in range(n):
            for m in self.out(i):
                assert self.mor_src(m) == i
                j = self.mor_tgt(m)
                minv = self.inverse(m)
                assert self.mor_src(minv) == j and self.mor_tgt(minv) == i
                assert self.compose(minv, m) == self.identity(i)
                assert self.compose(m, minv) == self.identity(j)
                e_j = self.identity(j)
                assert self.compose(e_j, m) == m
                assert self.compose(m, self.identity(i)) == m
                seen_pairs += 1
                if seen_pairs > budget:
                    return
        # associativity on composable triples, within budget
        seen = 0
        for i in range(n):
            for m1 in self.out(i):
                j = self.mor_tgt(m1)
                for m2 in self.out(j):
                    k = self.mor_tgt(m2)
                    for m3 in self.out(k):
                        a = self.compose(m3, self.compose(m2, m1))
                        b = self.compose(self.compose(m3, m2), m1)
                        assert a == b, "associativity failure"
                        seen += 1
                        if seen > budget:
                            return

    def __repr__(self):
        return f"{type(self).__name__}({self.name}, objects={self.n_objects})"


class ActionGroupoid(Groupoid):
    """Action groupoid of a finite group on a finite set.

    Morphism tokens are (g, src_index) with target act(g, src_index);
    composition is group multiplication.
    """

    def __init__(self, group: FiniteGroup, objects, act, name="X//G",
                 check=True):
        super().__init__(objects, name=name)
        self.group = group
        self.act = act
        if check:
            ident = group.identity
            for i in range(self.n_objects):
                assert act(ident, i) == i, "identity must act trivially"
            gens = group.generators()
            small = group.order ** 2 * self.n_objects <= 200_000
            pairs = ((a, b) for a in (group.elements if small else gens)
                     for b in (group.elements if small else gens))
            objs = range(self.n_objects) if small else \
                range(min(self.n_objects, 64))
            pairs = list(pairs)
            for i in objs:
                for a, b in pairs:
                    assert act(group.op(a, b), i) == act(a, act(b, i)), \
                        "action incompatible with multiplication"

    def out(self, i):
        return [(g, i) for g in self.group.elements]

    def gens_out(self, i):
        return [(g, i) for g in self.group.generators()]

    def mor_src(self, m):
        return m[1]

    def mor_tgt(self, m):
        return self.act(m[0], m[1])

    def compose(self, m2, m1):
        return (self.group.op(m2[0], m1[0]), m1[1])

    def identity(self, i):
        return (self.group.identity, i)

    def inverse(self, m):
        return (self.group.inv(m[0]), self.mor_tgt(m))

    def hom(self, i, j):
        return [(g, i) for g in self.group.elements if self.act(g, i) == j]

    def aut_size(self, i):
        return sum(1 for g in self.group.elements if self.act(g, i) == i)

    def n_morphisms(self):
        return self.group.order * self.n_objects


def b_group(G: FiniteGroup, name=None) -> ActionGroupoid:
    """One object, morphisms G."""
    return ActionGroupoid(G, ["*"], lambda g, i: 0,
                          name=name or f"B({G.name})", check=False)


def point_groupoid() -> ActionGroupoid:
    return b_group(trivial_group(), name="pt")


def discrete_groupoid(labels, name="discrete") -> ActionGroupoid:
    return ActionGroupoid(trivial_group(), labels, lambda g, i: i, name=name,
                          check=False)


class TableGroupoid(Groupoid):
    """Fully explicit: morphism list with src/tgt, composition table,
    identities and inverses.  Validated eagerly on construction."""

    def __init__(self, objects, mor_src, mor_tgt, comp, identities, inverses,
                 name="X", check=True):
        super().__init__(objects, name=name)
        self.msrc = list(mor_src)
        self.mtgt = list(mor_tgt)
        self.comp_table = dict(comp)        # (m2, m1) -> m
        self.ids = list(identities)         # per object
        self.invs = list(inverses)          # per morphism
        self._out = [[] for _ in range(self.n_objects)]
        for m, s in enumerate(self.msrc):
            self._out[s].append(m)
        if check:
            self.validate()

    def out(self, i):
        return self._out[i]

    def mor_src(self, m):
        return self.msrc[m]

    def mor_tgt(self, m):
        return self.mtgt[m]

    def compose(self, m2, m1):
        return self.comp_table[(m2, m1)]

    def identity(self, i):
        return self.ids[i]

    def inverse(self, m):
        return self.invs[m]

    def n_morphisms(self):
        return len(self.msrc)

    def to_json(self):
        return {
            "objects": [str(o) for o in self.objects],
            "morphisms": [{"id": m, "src": self.msrc[m], "tgt": self.mtgt[m]}
                          for m in range(len(self.msrc))],
            "composition": sorted([m2, m1, m]
                                  for (m2, m1), m in self.comp_table.items()),
            "identities": self.ids,
            "inverses": self.invs,
        }

    @classmethod
    def from_json(cls, data, name="X"):
        nmor = len(data["morphisms"])
        msrc = [None] * nmor
        mtgt = [None] * nmor
        for rec in data["morphisms"]:
            msrc[rec["id"]] = rec["src"]
            mtgt[rec["id"]] = rec["tgt"]
        comp = {(m2, m1): m for m2, m1, m in data["composition"]}
        return cls(data["objects"], msrc, mtgt, comp, data["identities"],
                   data["inverses"], name=name)


def pi0(g: Groupoid) -> list[Component]:
    """Connected components with representative, size and Aut order."""
    return g.components()


def materialize(g: Groupoid, budget: int = DEFAULT_OBJECT_BUDGET,
                name=None) -> TableGroupoid:
    """Flatten any groupoid into an explicit TableGroupoid."""
    tokens = []
    for i in range(g.n_objects):
        tokens.extend(g.out(i))
        if len(tokens) > budget:
            raise BudgetExceededError(
                f"materializing {g!r} exceeds {budget} morphisms")
    tok_index = {t: m for m, t in enumerate(tokens)}
    msrc = [g.mor_src(t) for t in tokens]
    mtgt = [g.mor_tgt(t) for t in tokens]
    comp = {}
    for m1, t1 in enumerate(tokens):
        j = mtgt[m1]
        for t2 in g.out(j):
            comp[(tok_index[t2], m1)] = tok_index[g.compose(t2, t1)]
            if len(comp) > 20 * budget:
                raise BudgetExceededError("composition table too large")
    ids = [tok_index[g.identity(i)] for i in range(g.n_objects)]
    invs = [tok_index[g.inverse(t)] for t in tokens]
    return TableGroupoid(list(g.objects), msrc, mtgt, comp, ids, invs,
                         name=name or f"table({g.name})")


class DisjointUnion(Groupoid):
    """Coproduct of groupoids; tokens are (part, inner token)."""

    def __init__(self, parts, name=None):
        self.parts = list(parts)
        self.offsets = []
        objs = []
        for p in self.parts:
            self.offsets.append(len(objs))
            objs.extend((len(self.offsets) - 1, o) for o in p.objects)
        super().__init__(objs,
                         name=name or "+".join(p.name for p in self.parts))

    def _locate(self, i):
        for k in range(len(self.parts) - 1, -1, -1):
            if i >= self.offsets[k]:
                return k, i - self.offsets[k]
        raise IndexError(i)

    def out(self, i):
        k, j = self._locate(i)
        return [(k, m) for m in self.parts[k].out(j)]

    def gens_out(self, i):
        k, j = self._locate(i)
        return [(k, m) for m in self.parts[k].gens_out(j)]

    def mor_src(self, m):
        k, t = m
        return self.offsets[k] + self.parts[k].mor_src(t)

    def mor_tgt(self, m):
        k, t = m
        return self.offsets[k] + self.parts[k].mor_tgt(t)

    def compose(self, m2, m1):
        assert m2[0] == m1[0]
        return (m1[0], self.parts[m1[0]].compose(m2[1], m1[1]))

    def identity(self, i):
        k, j = self._locate(i)
        return (k, self.parts[k].identity(j))

    def inverse(self, m):
        return (m[0], self.parts[m[0]].inverse(m[1]))

    def hom(self, i, j):
        ki, oi = self._locate(i)
        kj, oj = self._locate(j)
        if ki != kj:
            return []
        return [(ki, m) for m in self.parts[ki].hom(oi, oj)]

    def aut_size(self, i):
        k, j = self._locate(i)
        return self.parts[k].aut_size(j)


class ProductGroupoid(Groupoid):
    """A x B; tokens are (m_a, m_b)."""

    def __init__(self, a: Groupoid, b: Groupoid, name=None):
        self.a, self.b = a, b
        objs = [(i, j) for i in range(a.n_objects) for j in range(b.n_objects)]
        super().__init__(objs, name=name or f"{a.name}x{b.name}")
        self._nb = b.n_objects

    def pair_index(self, i, j):
        return i * self._nb + j

    def out(self, i):
        ia, ib = self.objects[i]
        return [(ma, mb) for ma in self.a.out(ia) for mb in self.b.out(ib)]

    def gens_out(self, i):
        ia, ib = self.objects[i]
        gens = [(ma, self.b.identity(ib)) for ma in self.a.gens_out(ia)]
        gens += [(self.a.identity(ia), mb) for mb in self.b.gens_out(ib)]
        return gens

    def mor_src(self, m):
        return self.pair_index(self.a.mor_src(m[0]), self.b.mor_src(m[1]))

    def mor_tgt(self, m):
        return self.pair_index(self.a.mor_tgt(m[0]), self.b.mor_tgt(m[1]))

    def compose(self, m2, m1):
        return (self.a.compose(m2[0], m1[0]), self.b.compose(m2[1], m1[1]))

    def identity(self, i):
        ia, ib = self.objects[i]
        return (self.a.identity(ia), self.b.identity(ib))

    def inverse(self, m):
        return (self.a.inverse(m[0]), self.b.inverse(m[1]))

    def hom(self, i, j):
        ia, ib = self.objects[i]
        ja, jb = self.objects[j]
        return [(ma, mb) for ma in self.a.hom(ia, ja)
                for mb in self.b.hom(ib, jb)]

    def aut_size(self, i):
        ia, ib = self.objects[i]
        return self.a.aut_size(ia) * self.b.aut_size(ib)


class FullSubgroupoid(Groupoid):
    """Full subcategory on a union of components of the ambient groupoid."""

    def __init__(self, ambient: Groupoid, object_indices, name=None):
        self.ambient = ambient
        self.inner = list(object_indices)
        self.to_sub = {o: i for i, o in enumerate(self.inner)}
        # must be closed under morphisms
        for o in self.inner:
            for t in ambient.neighbors(o):
                assert t in self.to_sub, "object set not component-closed"
        super().__init__([ambient.objects[o] for o in self.inner],
                         name=name or f"sub({ambient.name})")

    def out(self, i):
        return self.ambient.out(self.inner[i])

    def gens_out(self, i):
        return self.ambient.gens_out(self.inner[i])

    def mor_src(self, m):
        return self.to_sub[self.ambient.mor_src(m)]

    def mor_tgt(self, m):
        return self.to_sub[self.ambient.mor_tgt(m)]

    def compose(self, m2, m1):
        return self.ambient.compose(m2, m1)

    def identity(self, i):
        return self.ambient.identity(self.inner[i])

    def inverse(self, m):
        return self.ambient.inverse(m)

    def hom(self, i, j):
        return self.ambient.hom(self.inner[i], self.inner[j])

    def aut_size(self, i):
        return self.ambient.aut_size(self.inner[i])
