"""Exact equivariant cohomology on Gr(3,7) and the Cayley Grassmannian."""

from ._cayley import *  # noqa: F401,F403
