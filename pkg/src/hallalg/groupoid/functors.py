"""Functors between finite groupoids and the equivalence checker.

A functor maps object indices to object indices and morphism tokens to
morphism tokens.  is_equivalence decides essential surjectivity and full
faithfulness exactly, returning a witness on failure: for groupoids this
reduces to pi0 bijectivity plus bijectivity of each automorphism map at one
representative per source component.
"""

from dataclasses import dataclass, field

from .core import Groupoid, ProductGroupoid, point_groupoid


class Functor:
    def __init__(self, src: Groupoid, tgt: Groupoid, name="F"):
        self.src = src
        self.tgt = tgt
        self.name = name

    def on_obj(self, i: int) -> int:
        raise NotImplementedError

    def on_mor(self, m):
        raise NotImplementedError

    def validate(self, budget: int = 50_000):
        """Identities on every object; src/tgt and composition on generating
        morphisms (a functor is determined by its values on generators)."""
        for i in range(self.src.n_objects):
            fi = self.on_obj(i)
            assert self.on_mor(self.src.identity(i)) == self.tgt.identity(fi), \
                f"{self.name}: identity not preserved at {i}"
        seen = 0
        for i in range(self.src.n_objects):
            for m1 in self.src.gens_out(i):
                j = self.src.mor_tgt(m1)
                fm1 = self.on_mor(m1)
                assert self.tgt.mor_src(fm1) == self.on_obj(i)
                assert self.tgt.mor_tgt(fm1) == self.on_obj(j)
                for m2 in self.src.gens_out(j):
                    lhs = self.on_mor(self.src.compose(m2, m1))
                    rhs = self.tgt.compose(self.on_mor(m2), fm1)
                    assert lhs == rhs, f"{self.name}: not functorial"
                    seen += 1
                    if seen >= budget:
                        return

    def __repr__(self):
        return f"Functor({self.name}: {self.src.name} -> {self.tgt.name})"


class FnFunctor(Functor):
    def __init__(self, src, tgt, obj_map, mor_map, name="F"):
        super().__init__(src, tgt, name=name)
        self._obj = obj_map      # list or callable
        self._mor = mor_map

    def on_obj(self, i):
        o = self._obj
        return o[i] if isinstance(o, (list, tuple)) else o(i)

    def on_mor(self, m):
        return self._mor(m)


class IdentityFunctor(Functor):
    def __init__(self, g):
        super().__init__(g, g, name=f"id_{g.name}")

    def on_obj(self, i):
        return i

    def on_mor(self, m):
        return m


class ComposedFunctor(Functor):
    def __init__(self, outer: Functor, inner: Functor):
        assert inner.tgt is outer.src, "not composable"
        super().__init__(inner.src, outer.tgt,
                         name=f"{outer.name}∘{inner.name}")
        self.outer, self.inner = outer, inner

    def on_obj(self, i):
        return self.outer.on_obj(self.inner.on_obj(i))

    def on_mor(self, m):
        return self.outer.on_mor(self.inner.on_mor(m))


def compose_functors(outer, inner):
    return ComposedFunctor(outer, inner)


class GroupHomFunctor(Functor):
    """B(H) -> B(G) induced by a homomorphism on element tokens."""

    def __init__(self, bh, bg, hom=lambda h: h, name=None):
        super().__init__(bh, bg, name=name or f"B({bh.name}->{bg.name})")
        self.hom = hom
        # homomorphism property on all pairs (groups here are small)
        H, G = bh.group, bg.group
        for a in H.elements:
            assert hom(a) in G.index
        for a in H.generators():
            for b in H.generators():
                assert hom(H.op(a, b)) == G.op(hom(a), hom(b)), \
                    "not a group homomorphism"

    def on_obj(self, i):
        return 0

    def on_mor(self, m):
        return (self.hom(m[0]), 0)


def point_inclusion(g: Groupoid, obj_idx: int) -> Functor:
    """pt -> g picking the object obj_idx."""
    pt = point_groupoid()
    return FnFunctor(pt, g, lambda i: obj_idx,
                     lambda m: g.identity(obj_idx),
                     name=f"at[{obj_idx}]")


def constant_functor(src: Groupoid, tgt: Groupoid, obj_idx: int) -> Functor:
    """Collapse everything to one object; morphisms to its identity."""
    return FnFunctor(src, tgt, lambda i: obj_idx,
                     lambda m: tgt.identity(obj_idx),
                     name=f"const[{obj_idx}]")


class PairFunctor(Functor):
    """(F, G): X -> A x B from F: X -> A and G: X -> B."""

    def __init__(self, f: Functor, g: Functor, prod: ProductGroupoid,
                 name=None):
        assert f.src is g.src
        assert prod.a is f.tgt and prod.b is g.tgt
        super().__init__(f.src, prod, name=name or f"({f.name},{g.name})")
        self.f, self.g = f, g

    def on_obj(self, i):
        return self.tgt.pair_index(self.f.on_obj(i), self.g.on_obj(i))

    def on_mor(self, m):
        return (self.f.on_mor(m), self.g.on_mor(m))


def twist_by_natural_iso(f: Functor, eta) -> Functor:
    """The naturally isomorphic functor x -> tgt(eta_x), m -> eta∘F(m)∘eta^-1.

    `eta` maps each source object index to a target morphism token with
    source f(x).
    """
    tgt = f.tgt

    def obj_map(i):
        return tgt.mor_tgt(eta(i))

    def mor_map(m):
        i, j = f.src.mor_src(m), f.src.mor_tgt(m)
        return tgt.compose(eta(j), tgt.compose(f.on_mor(m),
                                               tgt.inverse(eta(i))))

    return FnFunctor(f.src, tgt, obj_map, mor_map, name=f"{f.name}~")


@dataclass
class EquivalenceVerdict:
    ok: bool
    reason: str = "equivalence"
    witness: dict = field(default_factory=dict)

    def __bool__(self):
        return self.ok

    def to_json(self):
        return {"pass": self.ok, "reason": self.reason,
                "witness": self.witness}


def functors_equal(f: Functor, g: Functor) -> bool:
    """Strict equality, decided on all objects and a generating family of
    morphisms (which determines a functor)."""
    if f.src is not g.src or f.tgt is not g.tgt:
        return False
    for i in range(f.src.n_objects):
        if f.on_obj(i) != g.on_obj(i):
            return False
    for m in f.src.generating_morphisms():
        if f.on_mor(m) != g.on_mor(m):
            return False
    return True


def functor_to_json(f: Functor) -> dict:
    """Exchange format for functors between explicit-table groupoids:
    object and morphism images by id."""
    src, tgt = f.src, f.tgt
    objs = [f.on_obj(i) for i in range(src.n_objects)]
    mors = [f.on_mor(m) for m in range(src.n_morphisms())]
    assert all(isinstance(m, int) for m in mors), \
        "functor serialization needs table groupoids"
    return {"objects": objs, "morphisms": mors}


def functor_from_json(src: Groupoid, tgt: Groupoid, data: dict,
                      name="F") -> Functor:
    objs = list(data["objects"])
    mors = list(data["morphisms"])
    f = FnFunctor(src, tgt, objs, lambda m: mors[m], name=name)
    f.validate()
    return f


def is_equivalence(f: Functor) -> EquivalenceVerdict:
    """Essential surjectivity plus full faithfulness, with witnesses.

    For functors of groupoids full faithfulness is equivalent to pi0
    injectivity plus bijectivity of Aut(x) -> Aut(F x) at one representative
    per component; essential surjectivity is pi0 surjectivity.
    """
    src, tgt = f.src, f.tgt
    scomps = src.components()
    tcomps = tgt.components()
    image = {}
    for c in scomps:
        tc = tgt.component_of(f.on_obj(c.rep))
        if tc in image:
            other = image[tc]
            return EquivalenceVerdict(
                False, "not faithful on pi0",
                {"kind": "hom_not_bijective",
                 "pair": [repr(src.objects[other.rep]),
                          repr(src.objects[c.rep])],
                 "hom_size_source": 0,
                 "hom_size_target": tcomps[tc].aut_order})
        image[tc] = c
    missed = [c for c in tcomps if c.index not in image]
    if missed:
        c = missed[0]
        return EquivalenceVerdict(
            False, "not essentially surjective",
            {"kind": "missed_component",
             "target_object": repr(tgt.objects[c.rep]),
             "component_index": c.index})
    for c in scomps:
        auts = src.hom(c.rep, c.rep)
        images = set()
        fr = f.on_obj(c.rep)
        for m in auts:
            fm = f.on_mor(m)
            assert tgt.mor_src(fm) == fr and tgt.mor_tgt(fm) == fr
            images.add(fm)
        if len(images) < len(auts):
            return EquivalenceVerdict(
                False, "automorphism map not injective",
                {"kind": "hom_not_bijective",
                 "pair": [repr(src.objects[c.rep])] * 2,
                 "hom_size_source": len(auts),
                 "distinct_images": len(images)})
        target_aut = tcomps[tgt.component_of(fr)].aut_order
        if len(images) != target_aut:
            return EquivalenceVerdict(
                False, "automorphism map not surjective",
                {"kind": "hom_not_bijective",
                 "pair": [repr(src.objects[c.rep])] * 2,
                 "hom_size_source": len(auts),
                 "hom_size_target": target_aut})
    return EquivalenceVerdict(True)
