"""Decidable 2-Segal and pointedness checks at the lowest complete degree.

For the square {0,1,2,3} the two polygonal triangulations give comparison
functors

    (d_3, d_1): X_3 -> X_2 x_{d_1, X_1, d_2} X_2      ({012}, {023})
    (d_2, d_0): X_3 -> X_2 x_{d_0, X_1, d_1} X_2      ({013}, {123})

which must be equivalences; higher conditions follow from polygon
triangulations.  Pointedness is checked through the degenerate squares at
degree <= 2:

    (s_0, d_1): X_1 -> X_2 x_{d_2, X_1, s_0} X_0
    (s_1, d_0): X_1 -> X_2 x_{d_0, X_1, s_0} X_0

Each check returns a verdict carrying a witness on failure: a comparison
that is not even well defined (corrupted faces), a missed component, or a
hom-set where the map fails to be bijective.
"""

from dataclasses import dataclass, field

from ..groupoid import (DisjointUnion, FnFunctor, FullSubgroupoid, Functor,
                        discrete_groupoid, is_equivalence, two_fiber_product)
from ..groupoid.core import DEFAULT_OBJECT_BUDGET
from .simplicial import TruncatedSimplicialGroupoid


@dataclass
class SegalVerdict:
    ok: bool
    squares: list = field(default_factory=list)   # (name, ok, witness)

    def __bool__(self):
        return self.ok

    @property
    def witnesses(self):
        return [{"square": n, **(w or {})} for n, okq, w in self.squares
                if not okq]

    def to_json(self):
        return {"pass": self.ok,
                "squares": [{"square": n, "pass": okq,
                             "witness": w or None}
                            for n, okq, w in self.squares],
                "witnesses": self.witnesses}


def _comparison(apex, fa: Functor, fb: Functor, leg_f: Functor,
                leg_g: Functor, budget, name):
    """The canonical functor apex -> leg_f.src x_D leg_g.src over
    x -> (fa x, fb x, id); returns (ok, witness, verdict)."""
    fp = two_fiber_product(leg_f, leg_g, budget=budget)
    base = fp.base
    obj_map = []
    for i in range(apex.n_objects):
        u = fa.on_obj(i)
        v = fb.on_obj(i)
        du = leg_f.on_obj(u)
        if du != leg_g.on_obj(v):
            return (False,
                    {"kind": "comparison_undefined",
                     "object": repr(apex.objects[i]),
                     "detail": "face composites disagree on objects"},
                    None)
        trip = (u, v, base.identity_id(du))
        pos = fp.try_obj_index(trip)
        if pos is None:
            return (False,
                    {"kind": "comparison_undefined",
                     "object": repr(apex.objects[i])},
                    None)
        obj_map.append(pos)

    def mor_map(m):
        return (fa.on_mor(m), fb.on_mor(m), obj_map[apex.mor_src(m)])

    cmpf = FnFunctor(apex, fp, obj_map, mor_map, name=name)
    verdict = is_equivalence(cmpf)
    return (verdict.ok, (None if verdict.ok else verdict.witness), verdict)


def check_2segal_degree3(x: TruncatedSimplicialGroupoid,
                         budget=DEFAULT_OBJECT_BUDGET) -> SegalVerdict:
    assert x.depth >= 3, "need the degree-3 truncation"
    x3 = x.levels[3]
    squares = []
    ok1, wit1, _ = _comparison(
        x3, x.face(3, 3), x.face(3, 1), x.face(2, 1), x.face(2, 2),
        budget, "{012}+{023}")
    squares.append(("triangulation {012},{023}", ok1, wit1))
    ok2, wit2, _ = _comparison(
        x3, x.face(3, 2), x.face(3, 0), x.face(2, 0), x.face(2, 1),
        budget, "{013}+{123}")
    squares.append(("triangulation {013},{123}", ok2, wit2))
    return SegalVerdict(ok1 and ok2, squares)


def check_pointed(x: TruncatedSimplicialGroupoid,
                  budget=DEFAULT_OBJECT_BUDGET) -> SegalVerdict:
    assert x.depth >= 2, "need the degree-2 truncation"
    x1 = x.levels[1]
    squares = []
    ok1, wit1, _ = _comparison(
        x1, x.degeneracy(1, 0), x.face(1, 1), x.face(2, 2),
        x.degeneracy(0, 0), budget, "s0-square")
    squares.append(("unital square s_0", ok1, wit1))
    ok2, wit2, _ = _comparison(
        x1, x.degeneracy(1, 1), x.face(1, 0), x.face(2, 0),
        x.degeneracy(0, 0), budget, "s1-square")
    squares.append(("unital square s_1", ok2, wit2))
    return SegalVerdict(ok1 and ok2, squares)


# -- mutation corpus -------------------------------------------------------------


def _with_top_level(x: TruncatedSimplicialGroupoid, new_top, face_builder):
    levels = list(x.levels)
    levels[3] = new_top
    faces = dict(x.faces)
    for k in range(4):
        faces[(3, k)] = face_builder(k)
    return TruncatedSimplicialGroupoid(levels, faces, dict(x.degeneracies),
                                       name=x.name + "-mutated")


def mutate_drop_component(x: TruncatedSimplicialGroupoid):
    """Restrict X_3 to a proper union of components; breaks essential
    surjectivity."""
    x3 = x.levels[3]
    comps = x3.components()
    if len(comps) < 2:
        return None
    keep = [i for i in range(x3.n_objects) if x3.component_of(i) == 0]
    sub = FullSubgroupoid(x3, keep, name="dropped")

    def face_builder(k):
        orig = x.face(3, k)
        return FnFunctor(sub, x.levels[2],
                         [orig.on_obj(o) for o in sub.inner],
                         orig.on_mor, name=f"d_{k}'")

    return _with_top_level(x, sub, face_builder)


def mutate_double(x: TruncatedSimplicialGroupoid):
    """X_3 replaced by two copies; pi0 injectivity of the comparison fails."""
    x3 = x.levels[3]
    dbl = DisjointUnion([x3, x3], name="doubled")

    def face_builder(k):
        orig = x.face(3, k)

        def obj_map(i, n=x3.n_objects):
            return orig.on_obj(i if i < n else i - n)

        def mor_map(m):
            return orig.on_mor(m[1])

        return FnFunctor(dbl, x.levels[2], obj_map, mor_map, name=f"d_{k}'")

    return _with_top_level(x, dbl, face_builder)


def mutate_discretize(x: TruncatedSimplicialGroupoid):
    """Forget all morphisms of X_3; automorphism maps stop being surjective."""
    x3 = x.levels[3]
    disc = discrete_groupoid(list(range(x3.n_objects)), name="discretized")

    def face_builder(k):
        orig = x.face(3, k)

        def mor_map(m):
            return x.levels[2].identity(orig.on_obj(m[1]))

        return FnFunctor(disc, x.levels[2], orig.on_obj, mor_map,
                         name=f"d_{k}'")

    return _with_top_level(x, disc, face_builder)


def mutate_constant_face(x: TruncatedSimplicialGroupoid, k: int = 1):
    """Corrupt one face table: d_k becomes constant; the canonical
    comparison stops being well defined."""
    from ..groupoid import constant_functor
    levels = list(x.levels)
    faces = dict(x.faces)
    faces[(3, k)] = constant_functor(levels[3], levels[2], 0)
    return TruncatedSimplicialGroupoid(levels, faces, dict(x.degeneracies),
                                       name=x.name + f"-constface{k}")


def mutate_constant_degeneracy(x: TruncatedSimplicialGroupoid):
    """Corrupt s_0: X_1 -> X_2; the unital squares fail."""
    from ..groupoid import constant_functor
    degens = dict(x.degeneracies)
    degens[(1, 0)] = constant_functor(x.levels[1], x.levels[2], 0)
    return TruncatedSimplicialGroupoid(list(x.levels), dict(x.faces), degens,
                                       name=x.name + "-constdegen")


def mutation_corpus(x: TruncatedSimplicialGroupoid):
    """Named mutations; every entry must fail its check with a witness."""
    out = []
    m = mutate_drop_component(x)
    if m is not None:
        out.append(("drop-component", m, "segal"))
    out.append(("double", mutate_double(x), "segal"))
    out.append(("discretize", mutate_discretize(x), "segal"))
    out.append(("constant-d1", mutate_constant_face(x, 1), "segal"))
    out.append(("constant-d3", mutate_constant_face(x, 3), "segal"))
    out.append(("constant-s0", mutate_constant_degeneracy(x), "pointed"))
    return out
