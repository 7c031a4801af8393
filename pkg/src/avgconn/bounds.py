"""Closed-form evaluators for the displayed bounds, plus verdict checkers.

Every evaluator is a pure rational function; decimal rendering never enters
a verdict.  Interval-shaped statements are split into explicit ``_lower`` /
``_upper`` catalog rows so each verdict carries a single relation.  Strict
and non-strict relations follow the source statements exactly, so tightness
reporting cannot misclassify a sharp family.  Conjectured values are in the
catalog for evaluation but flagged, and are never asserted as theorems.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .core import Graph, fraction_json

__all__ = ["BoundVerdict", "eval_bound", "check_bound", "bound_ids", "BOUNDS"]


@dataclass(frozen=True)
class BoundVerdict:
    bound_id: str
    bound_value: Fraction
    computed_value: Fraction
    relation: str
    holds: bool
    tight: bool
    conjecture: bool = False
    certified_inputs: bool | None = None

    def to_json_dict(self) -> dict:
        out = {
            "bound_id": self.bound_id,
            "bound_value": fraction_json(self.bound_value),
            "computed_value": fraction_json(self.computed_value),
            "relation": self.relation,
            "holds": self.holds,
            "tight": self.tight,
        }
        if self.conjecture:
            out["conjecture"] = True
        if self.certified_inputs is not None:
            out["certified_inputs"] = self.certified_inputs
        return out


def _need(params: dict, *names: str) -> list:
    missing = [k for k in names if k not in params]
    if missing:
        raise ValueError(f"missing bound parameters: {', '.join(missing)}")
    return [params[k] for k in names]


def _tree_n(params):
    (n,) = _need(params, "n")
    if n < 3:
        raise ValueError(f"tree bounds need n >= 3, got {n}")
    return n


def _star_formula(params) -> Fraction:
    (n,) = _need(params, "n")
    if n < 2:
        raise ValueError(f"star formula needs n >= 2, got {n}")
    k = n - 1
    return Fraction((k // 2) * ((k + 1) // 2) + k, n * (n - 1))


def _general_upper(params) -> Fraction:
    (n,) = _need(params, "n")
    if n < 2:
        raise ValueError(f"general upper bound needs n >= 2, got {n}")
    return Fraction(n - 1, 2)


def _odd_regular_upper(params) -> Fraction:
    r, n = _need(params, "r", "n")
    if r % 2 == 0 or r < 3:
        raise ValueError(f"odd-regular bound needs odd r >= 3, got r={r}")
    if n <= r:
        raise ValueError(f"r-regular graph needs n > r, got n={n}, r={r}")
    return Fraction(r - 1, 2) + Fraction(n, 4 * (n - 1))


def _inflation_formula(params) -> Fraction:
    n, kbm = _need(params, "n", "kbm")
    if n < 4:
        raise ValueError(f"inflation formula needs n >= 4, got {n}")
    kbm = Fraction(kbm)
    return 1 + Fraction(4 * n * (n - 1) * (kbm - 1) + 2 * n, 3 * n * (3 * n - 1))


def _min2conn_upper(params) -> Fraction:
    (n,) = _need(params, "n")
    if n < 3:
        raise ValueError(f"minimally-2-connected bound needs n >= 3, got {n}")
    return 1 + Fraction((n - 3) ** 2, 4 * n * (n - 1))


def _subdivision_identity(params) -> Fraction:
    n, m, k = _need(params, "n", "m", "K")
    return Fraction(2 * (comb(n + m, 2) - comb(n, 2)) + k)


def _mop_average(params) -> Fraction:
    (n,) = _need(params, "n")
    if n < 3:
        raise ValueError(f"MOP average needs n >= 3, got {n}")
    return 2 + Fraction(2 * n - 6, n * (n - 1))


def _mop_upper(params) -> Fraction:
    (n,) = _need(params, "n")
    if n < 3:
        raise ValueError(f"MOP upper bound needs n >= 3, got {n}")
    return Fraction(3, 2) + Fraction(n - 5, n * (n - 1))


def _snake_value(params) -> Fraction:
    (n,) = _need(params, "n")
    if n < 2:
        raise ValueError(f"snake value needs half-order n >= 2, got {n}")
    return Fraction(3, 2) - Fraction(4 * n - 3, 2 * n * (2 * n - 1))


def _two_tree_lower(params) -> Fraction:
    (n,) = _need(params, "n")
    if n < 3:
        raise ValueError(f"2-tree bound needs n >= 3, got {n}")
    return 1 + Fraction(n - 3, n * (n - 1))


@dataclass(frozen=True)
class _BoundSpec:
    evaluate: callable
    relation: str  # relation the computed value should satisfy vs the bound
    tight_reportable: bool = True
    conjecture: bool = False


BOUNDS: dict[str, _BoundSpec] = {
    "tree_bounds_lower": _BoundSpec(lambda p: (_tree_n(p), Fraction(2, 9))[1], ">"),
    "tree_bounds_upper": _BoundSpec(lambda p: (_tree_n(p), Fraction(1, 2))[1], "<="),
    "star_formula": _BoundSpec(_star_formula, "=="),
    "general_upper": _BoundSpec(_general_upper, "<="),
    "odd_regular_upper": _BoundSpec(_odd_regular_upper, "<="),
    "inflation_formula": _BoundSpec(_inflation_formula, "=="),
    "min2conn_upper": _BoundSpec(_min2conn_upper, "<="),
    "min2conn_ratio_lower": _BoundSpec(lambda p: Fraction(4, 9), ">", tight_reportable=False),
    "min2conn_ratio_upper": _BoundSpec(lambda p: Fraction(5, 8), "<", tight_reportable=False),
    "subdivision_identity": _BoundSpec(_subdivision_identity, "<="),
    "mop_average": _BoundSpec(_mop_average, "=="),
    "mop_upper": _BoundSpec(_mop_upper, "<="),
    "snake_value": _BoundSpec(_snake_value, "=="),
    "two_tree_lower": _BoundSpec(_two_tree_lower, ">="),
    "edge_ratio_upper": _BoundSpec(lambda p: Fraction(1, 2), "<="),
    "edge_ratio_lower_2ec": _BoundSpec(lambda p: Fraction(1, 3), ">="),
    "mop_lower_conjecture": _BoundSpec(lambda p: Fraction(19, 18), ">=", conjecture=True),
}


def bound_ids() -> list[str]:
    return sorted(BOUNDS)


def eval_bound(bound_id: str, **params) -> Fraction:
    """Exact value of a catalog bound for the given parameters."""
    if bound_id not in BOUNDS:
        raise ValueError(f"unknown bound id {bound_id!r}; known: {', '.join(bound_ids())}")
    return BOUNDS[bound_id].evaluate(params)


_RELATIONS = {
    "<=": lambda c, b: c <= b,
    "<": lambda c, b: c < b,
    ">=": lambda c, b: c >= b,
    ">": lambda c, b: c > b,
    "==": lambda c, b: c == b,
}


def _derive_params(bound_id: str, graph: Graph, params: dict) -> dict:
    out = dict(params)
    if "n" not in out:
        out["n"] = graph.n
    if bound_id == "odd_regular_upper" and "r" not in out:
        degs = {graph.degree(v) for v in range(graph.n)}
        if len(degs) != 1:
            raise ValueError("odd_regular_upper needs a regular graph")
        out["r"] = degs.pop()
    if bound_id == "snake_value":
        if graph.n % 2:
            raise ValueError("snake graphs have even order")
        out["n"] = graph.n // 2
    if bound_id == "subdivision_identity":
        from .connectivity import report_graph

        out.setdefault("m", graph.m)
        out.setdefault("K", report_graph(graph).total)
    return out


def check_bound(bound_id: str, computed, graph: Graph | None = None, **params) -> BoundVerdict:
    """Compare a computed value against a catalog bound.

    ``computed`` is a Fraction/int or a SearchResult, in which case its
    average is used and the verdict records whether it was certified.  A
    graph supplies default parameters (order, regular degree, ...).
    """
    if bound_id not in BOUNDS:
        raise ValueError(f"unknown bound id {bound_id!r}; known: {', '.join(bound_ids())}")
    spec = BOUNDS[bound_id]
    certified: bool | None = None
    if hasattr(computed, "best_average"):
        certified = bool(computed.certified)
        computed_value = computed.best_average
    else:
        computed_value = Fraction(computed)
    if graph is not None:
        params = _derive_params(bound_id, graph, params)
    kbm = params.get("kbm")
    if kbm is not None and hasattr(kbm, "best_average"):
        ok = bool(kbm.certified)
        certified = ok if certified is None else (certified and ok)
        params = dict(params)
        params["kbm"] = kbm.best_average
    bound_value = spec.evaluate(params)
    holds = _RELATIONS[spec.relation](computed_value, bound_value)
    tight = spec.tight_reportable and computed_value == bound_value
    return BoundVerdict(
        bound_id=bound_id,
        bound_value=bound_value,
        computed_value=computed_value,
        relation=spec.relation,
        holds=holds,
        tight=tight,
        conjecture=spec.conjecture,
        certified_inputs=certified,
    )
