# -*- coding: utf-8 -*-
"""B92NetSim Channel Module"""

from .link_budget import (
    LinkPath, LinkBudget, compute_budget, combine_budgets, compute_route_budget,
)

__all__ = [
    'LinkPath', 'LinkBudget', 'compute_budget', 'combine_budgets',
    'compute_route_budget',
]
