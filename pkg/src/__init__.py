"""
Torsion Growth.

Exact classification of the torsion of elliptic curves over Q(i) and
Q(sqrt(-3)) in their maximal elementary abelian 2-extension, with a
LangGraph verification pipeline for the supporting computations.
"""

__version__ = "1.0.0"
