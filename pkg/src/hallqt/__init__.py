"""Exact computations around Hall algebras of ADE quivers.

The package keeps every computation over $\\mathbb{Q}(v^{1/2})$ (or over a
prime field when counting), so all identities it checks are exact, never
floating point.
"""

__version__ = "0.1.0"
