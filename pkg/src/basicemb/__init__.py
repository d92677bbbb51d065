"""Additive decompositions f(x, y) = g(x) + h(y) on finite sets, the rook game,
and basic embeddability of finite graphs."""

__version__ = "0.1.0"
