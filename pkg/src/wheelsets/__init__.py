"""Exact counting on wheel sets: frequency vectors, order types, crossing-free
graphs, embracing sets, simplicial depth and f-vectors via Gale duality."""

__version__ = "0.1.0"
