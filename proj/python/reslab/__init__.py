"""Local resilience experiments on random graphs."""

import json

from ._reslab import (
    Graph,
    ReslabError,
    __version__,
    attack,
    complete_graph,
    cycle_graph,
    degeneracy,
    dsatur,
    exact_chromatic,
    exact_hamilton,
    gnp,
    has_perfect_matching,
    k0,
    lambda_,
    max_matching,
    petersen_graph,
    posa_find_hamilton,
    random_regular,
    spectrum,
    verify_hamilton_cycle,
)
from . import _reslab


def sweep(*, property="perfect-matching", model="gnp", n=100, p=0.5, d=3, strategy="random",
          mode="delete", budgets=(0.0,), fractions=False, trials=20, seed=0, epsilon=0.25, threads=0):
    """Run a resilience sweep and return the JSON summary as a dict."""
    return json.loads(_reslab._sweep_json(property, model, n, p, d, strategy, mode, list(budgets),
                                          fractions, trials, seed, epsilon, threads))


def validate(lemma, *, n=1000, p=0.5, trials=20, seed=0, samples=200, threads=0):
    """Empirically check one random-graph lemma; returns the report as a dict."""
    return json.loads(_reslab._validate_json(lemma, n, p, trials, seed, samples, threads))


__all__ = [
    "Graph", "ReslabError", "__version__", "attack", "complete_graph", "cycle_graph", "degeneracy",
    "dsatur", "exact_chromatic", "exact_hamilton", "gnp", "has_perfect_matching", "k0", "lambda_",
    "max_matching", "petersen_graph", "posa_find_hamilton", "random_regular", "spectrum", "sweep",
    "validate", "verify_hamilton_cycle",
]
