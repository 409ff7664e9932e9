"""Finite groupoids, functors, 2-fiber products and pull-push transfer."""

from .core import (ActionGroupoid, Component, DisjointUnion, FullSubgroupoid,
                   Groupoid, ProductGroupoid, TableGroupoid, b_group,
                   discrete_groupoid, materialize, pi0, point_groupoid)
from .fiber import FiberProductGroupoid, two_fiber_product
from .functors import (ComposedFunctor, EquivalenceVerdict, FnFunctor,
                       Functor, GroupHomFunctor, IdentityFunctor, PairFunctor,
                       compose_functors, constant_functor, functor_from_json,
                       functor_to_json, functors_equal, is_equivalence,
                       point_inclusion, twist_by_natural_iso)
from .transfer import (SpanFn, cardinality, external_product, is_faithful,
                       pull_push_span, pullback_fn, pushforward_fn)

__all__ = [
    "ActionGroupoid", "Component", "DisjointUnion", "FullSubgroupoid",
    "Groupoid", "ProductGroupoid", "TableGroupoid", "b_group",
    "discrete_groupoid", "materialize", "pi0", "point_groupoid",
    "FiberProductGroupoid", "two_fiber_product",
    "ComposedFunctor", "EquivalenceVerdict", "FnFunctor", "Functor",
    "GroupHomFunctor", "IdentityFunctor", "PairFunctor", "compose_functors",
    "constant_functor", "functor_from_json", "functor_to_json",
    "functors_equal", "is_equivalence", "point_inclusion",
    "twist_by_natural_iso",
    "SpanFn", "cardinality", "external_product", "is_faithful",
    "pull_push_span", "pullback_fn", "pushforward_fn",
]
