"""2-fiber products of groupoids.

Objects of A x_D B are triples (a, b, phi) with phi: f(a) -> g(b) a morphism
of D; a morphism (alpha, beta) transports phi to g(beta)∘phi∘f(alpha)^-1.
The object set is materialized fully (guarded by a budget); morphisms stay
enumerable on demand.  D's morphisms are interned as integers, so D must be
small enough to list them -- true of every base we fiber over.
"""

from .. import BudgetExceededError
from .core import DEFAULT_OBJECT_BUDGET, Groupoid
from .functors import FnFunctor, Functor


class _BaseTables:
    """Interned morphisms of the cospan base D with composition/inverse on
    integer ids."""

    def __init__(self, d: Groupoid, budget):
        self.d = d
        toks = []
        for i in range(d.n_objects):
            toks.extend(d.out(i))
            if len(toks) > budget:
                raise BudgetExceededError(
                    f"fiber-product base {d.name} has too many morphisms")
        self.tokens = toks
        self.index = {t: k for k, t in enumerate(toks)}
        self.src = [d.mor_src(t) for t in toks]
        self.tgt = [d.mor_tgt(t) for t in toks]
        self.inv = [self.index[d.inverse(t)] for t in toks]
        self._comp = {}

    def compose(self, k2, k1):
        key = (k2, k1)
        out = self._comp.get(key)
        if out is None:
            out = self.index[self.d.compose(self.tokens[k2], self.tokens[k1])]
            self._comp[key] = out
        return out

    def hom_ids(self, i, j):
        return [self.index[t] for t in self.d.hom(i, j)]

    def identity_id(self, i):
        return self.index[self.d.identity(i)]


class FiberProductGroupoid(Groupoid):
    """A x_D B over f: A -> D <- B: g."""

    def __init__(self, f: Functor, g: Functor, name=None,
                 budget=DEFAULT_OBJECT_BUDGET):
        assert f.tgt is g.tgt, "legs must share their target"
        self.f, self.g = f, g
        self.a, self.b, self.d = f.src, g.src, f.tgt
        self.base = _BaseTables(self.d, budget)
        fa = [f.on_obj(i) for i in range(self.a.n_objects)]
        gb = [g.on_obj(j) for j in range(self.b.n_objects)]
        hom_cache = {}
        objs = []
        for i, da in enumerate(fa):
            for j, db in enumerate(gb):
                key = (da, db)
                homs = hom_cache.get(key)
                if homs is None:
                    homs = self.base.hom_ids(da, db)
                    hom_cache[key] = homs
                for k in homs:
                    objs.append((i, j, k))
                if len(objs) > budget:
                    raise BudgetExceededError(
                        f"fiber product over {self.d.name} exceeds "
                        f"{budget} objects")
        super().__init__(objs, name=name or
                         f"({self.a.name} x_{self.d.name} {self.b.name})")

    # phi' = g(beta) ∘ phi ∘ f(alpha)^-1, all on interned base ids
    def _transport(self, phi, alpha, beta):
        base = self.base
        fa = base.index[self.f.on_mor(alpha)]
        gb = base.index[self.g.on_mor(beta)]
        return base.compose(base.compose(gb, phi), base.inv[fa])

    def _tgt_obj(self, m):
        alpha, beta, src_idx = m
        i, j, phi = self.objects[src_idx]
        return (self.a.mor_tgt(alpha), self.b.mor_tgt(beta),
                self._transport(phi, alpha, beta))

    def out(self, idx):
        i, j, _ = self.objects[idx]
        return [(alpha, beta, idx) for alpha in self.a.out(i)
                for beta in self.b.out(j)]

    def gens_out(self, idx):
        i, j, _ = self.objects[idx]
        ida, idb = self.a.identity(i), self.b.identity(j)
        gens = [(alpha, idb, idx) for alpha in self.a.gens_out(i)]
        gens += [(ida, beta, idx) for beta in self.b.gens_out(j)]
        return gens

    def mor_src(self, m):
        return m[2]

    def mor_tgt(self, m):
        return self.obj_index(self._tgt_obj(m))

    def neighbors(self, idx):
        i, j, phi = self.objects[idx]
        base = self.base
        oi = self.obj_index
        for alpha in self.a.gens_out(i):
            fa = base.index[self.f.on_mor(alpha)]
            yield oi((self.a.mor_tgt(alpha), j,
                      base.compose(phi, base.inv[fa])))
        for beta in self.b.gens_out(j):
            gb = base.index[self.g.on_mor(beta)]
            yield oi((i, self.b.mor_tgt(beta), base.compose(gb, phi)))

    def compose(self, m2, m1):
        assert m2[2] == self.mor_tgt(m1)
        return (self.a.compose(m2[0], m1[0]),
                self.b.compose(m2[1], m1[1]), m1[2])

    def identity(self, idx):
        i, j, _ = self.objects[idx]
        return (self.a.identity(i), self.b.identity(j), idx)

    def inverse(self, m):
        return (self.a.inverse(m[0]), self.b.inverse(m[1]),
                self.mor_tgt(m))

    def hom(self, idx, jdx):
        i, j, phi = self.objects[idx]
        i2, j2, phi2 = self.objects[jdx]
        out = []
        for alpha in self.a.hom(i, i2):
            for beta in self.b.hom(j, j2):
                if self._transport(phi, alpha, beta) == phi2:
                    out.append((alpha, beta, idx))
        return out

    def aut_size(self, idx):
        return len(self.hom(idx, idx))

    # projections and the square data

    @property
    def proj_a(self) -> Functor:
        return FnFunctor(self, self.a, lambda i: self.objects[i][0],
                         lambda m: m[0], name="pr_A")

    @property
    def proj_b(self) -> Functor:
        return FnFunctor(self, self.b, lambda i: self.objects[i][1],
                         lambda m: m[1], name="pr_B")

    def connecting_iso(self, idx):
        """The base morphism phi: f(pr_A x) -> g(pr_B x) at the object."""
        return self.base.tokens[self.objects[idx][2]]


def two_fiber_product(f: Functor, g: Functor,
                      budget=DEFAULT_OBJECT_BUDGET) -> FiberProductGroupoid:
    """The 2-fiber product with its projections (as attributes)."""
    return FiberProductGroupoid(f, g, budget=budget)
