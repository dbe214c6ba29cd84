"""Construct and verify counterexamples to Hedetniemi's conjecture.

Rational results are returned as :class:`fractions.Fraction`.
"""

from fractions import Fraction

from ._hedet import (
    Graph,
    HedetError,
    bfs_distances,
    build_G,
    build_H,
    chromatic_number,
    exp_adjacent,
    extendable,
    generate,
    h_vertex_count,
    h_vertex_count_closed_form,
    has_loop,
    image,
    independence_number,
    is_proper,
    lex_complete,
    load_seed,
    mycielski,
    mycielski_chain,
    odd_girth,
    tensor_product,
    verify,
    vertex_map,
)
from . import _hedet

__all__ = [
    "Graph",
    "HedetError",
    "bfs_distances",
    "build_G",
    "build_H",
    "chi_f",
    "chromatic_number",
    "exp_adjacent",
    "extendable",
    "generate",
    "h_vertex_count",
    "h_vertex_count_closed_form",
    "has_loop",
    "image",
    "independence_number",
    "is_proper",
    "lex_complete",
    "load_seed",
    "mycielski",
    "mycielski_chain",
    "odd_girth",
    "tardif_chain_value",
    "tardif_value",
    "tensor_product",
    "verify",
    "vertex_map",
]


def chi_f(g, enumeration_limit=40):
    """Exact fractional chromatic number, or raise if only bounds were found."""
    r = _hedet._chi_f(g, enumeration_limit)
    if not r["exact"]:
        raise HedetError(f"chi_f not settled: bounds [{r['lower']}, {r['upper']}]")
    return Fraction(r["value"])


def tardif_value(base, r):
    return Fraction(_hedet._tardif_value(str(Fraction(base)), r))


def tardif_chain_value(base, chain):
    return Fraction(_hedet._tardif_chain_value(str(Fraction(base)), list(chain)))
