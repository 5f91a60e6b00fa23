"""One-round forcing criteria, clique-forcing lower bounds and the bounds report.

``sigma(G)`` is the largest matching number of a cross graph ``G[V(M)] - M``
over all matchings ``M``; ``kappa(G, r)`` is the same with vertex-disjoint
``K_r`` packings in place of matchings.  On a ``K_{r+1}``-free host,
``kappa(G, r) >= 2`` holds exactly when Builder forces ``K_{r+1}`` in one
round (``r = 2`` is the triangle case, where ``kappa`` coincides with
``sigma``).
"""

from __future__ import annotations

from dataclasses import dataclass

from . import gadgets
from .cliques import clique_number, clique_packing_number, has_clique
from .errors import CriterionNotEvaluated, InvalidInput, NotApplicable
from .graph import Graph
from .matching import cross_graph, enumerate_matchings, matching_number


def _max_over_matchings(g, value, early_exit_at, max_edges):
    if max_edges is not None and g.m > max_edges:
        raise CriterionNotEvaluated(f"host has {g.m} edges, cap is {max_edges}")
    best = 0
    for m in enumerate_matchings(g, min_size=1):
        best = max(best, value(cross_graph(g, m)))
        if early_exit_at is not None and best >= early_exit_at:
            return best
    return best


def sigma(g: Graph, early_exit_at: int | None = 2, max_edges: int | None = None) -> int:
    """Max matching number of a cross graph; stops once ``early_exit_at`` is reached.

    The empty matching contributes 0 and is skipped.  Pass
    ``early_exit_at=None`` for the full maximum.
    """
    return _max_over_matchings(g, matching_number, early_exit_at, max_edges)


def kappa(g: Graph, r: int, early_exit_at: int | None = 2, max_edges: int | None = None) -> int:
    if r < 2:
        raise InvalidInput("kappa needs r >= 2")
    if not has_clique(g, r):
        # every cross graph is a subgraph of g
        if max_edges is not None and g.m > max_edges:
            raise CriterionNotEvaluated(f"host has {g.m} edges, cap is {max_edges}")
        return 0
    return _max_over_matchings(g, lambda x: clique_packing_number(x, r), early_exit_at, max_edges)


def one_round_forcing(g: Graph, r: int = 2, max_edges: int | None = None) -> bool:
    """Whether Builder forces ``K_{r+1}`` from ``g`` in exactly one round.

    Only defined for ``K_{r+1}``-free hosts; anything else raises
    :class:`NotApplicable`.
    """
    if r < 2:
        raise InvalidInput("r must be >= 2")
    if has_clique(g, r + 1):
        raise NotApplicable(f"host contains K{r + 1}; the one-round criterion needs a K{r + 1}-free host")
    return kappa(g, r, early_exit_at=2, max_edges=max_edges) >= 2


def lower_bound(g: Graph, k: int) -> int:
    """Lower bound on the number of rounds needed to force ``K_k`` from ``g``.

    With ``r = max(3, omega(g) + 1)`` the host is ``K_r``-free, so for
    ``k >= r + 1`` at least ``k - r + 2`` rounds are needed.  A host already
    containing ``K_k`` gives 0; otherwise at least 1.
    """
    if k < 3:
        raise InvalidInput("k must be >= 3")
    omega = clique_number(g)
    if omega >= k:
        return 0
    r = max(3, omega + 1)
    if k >= r + 1:
        return k - r + 2
    return 1


@dataclass(frozen=True)
class RhoWitness:
    seed_name: str
    seed: Graph
    strategy: str
    rounds: int


@dataclass(frozen=True)
class SeedSizeWitness:
    seed_name: str
    seed: Graph
    vertices: int


@dataclass(frozen=True)
class CliqueForcingBounds:
    k: int
    rho_lower: int
    rho_upper_witness: RhoWitness | None = None
    s_upper_witness: SeedSizeWitness | None = None

    def to_text(self) -> str:
        lines = [f"k={self.k}", f"rho_lower={self.rho_lower}"]
        w = self.rho_upper_witness
        if w:
            lines += [f"rho_upper={w.rounds}", f"rho_witness_seed={w.seed_name}", f"rho_witness_strategy={w.strategy}"]
            if w.rounds == self.rho_lower:
                lines.append(f"rho_exact={w.rounds}")
        else:
            lines.append("rho_upper=unknown")
        s = self.s_upper_witness
        if s:
            lines += [f"s_upper={s.vertices}", f"s_witness_seed={s.seed_name}"]
        else:
            lines.append("s_upper=unknown")
        return "\n".join(lines) + "\n"


def bounds_report(k: int) -> CliqueForcingBounds:
    if k < 3:
        raise InvalidInput("k must be >= 3")
    if k == 3:
        c4 = gadgets.cycle(4)
        return CliqueForcingBounds(
            3, 1, RhoWitness("cycle(4)", c4, "cycle_one_round", 1), SeedSizeWitness("cycle(4)", c4, c4.n)
        )
    if k == 4:
        seed = gadgets.rho4_seed()
        return CliqueForcingBounds(
            4,
            lower_bound(seed, 4),
            RhoWitness("rho4seed", seed, "rho4_three_round", 3),
            SeedSizeWitness("rho4seed", seed, seed.n),
        )
    return CliqueForcingBounds(k, k - 1)
