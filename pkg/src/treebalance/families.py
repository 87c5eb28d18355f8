"""Generators for the named tree families.

``fully_balanced(h)`` puts all 2**h leaves at depth exactly h.
``echelon(n)`` pairs the largest admissible power-of-two balanced block
with the echelon tree on the remainder; it is the unique shape with
maximum stairs2 index for its leaf count.  ``caterpillar(n)`` hangs a leaf
off every internal node; it is the unique minimizer.

All generators alias repeated subtree objects (trees are immutable, so
sharing is safe and keeps fully balanced trees at O(h) memory instead of
O(2**h)).  Traversals elsewhere in the package are written for that.
"""

from .tree import EMPTY, LimitError, Tree

#: Default cap on fully balanced tree height; guards against runaway sizes
#: in downstream operations that scale with the unfolded tree.
DEFAULT_HEIGHT_BOUND = 30


def fully_balanced(h: int, max_height: int = DEFAULT_HEIGHT_BOUND) -> Tree:
    """Tree on 2**h leaves with every leaf at depth exactly h."""
    if h < 0:
        raise ValueError("height must be non-negative")
    if h > max_height:
        raise LimitError(f"height {h} exceeds the bound {max_height}")
    t = Tree()
    for _ in range(h):
        t = Tree(t, t)
    return t


def echelon(n: int) -> Tree:
    """The echelon tree on n leaves.

    For n >= 2 the larger root subtree is fully balanced on k leaves,
    where k is the unique power of two with n/2 <= k < n, and the smaller
    is the echelon tree on n - k leaves.  k is the top bit of n except
    when n is itself a power of two, where the strict upper bound forces
    k = n/2.  Returns EMPTY for n = 0 and a leaf for n = 1.
    """
    if n < 0:
        raise ValueError("leaf count must be non-negative")
    if n == 0:
        return EMPTY
    blocks = []
    while n >= 2:
        k = 1 << (n.bit_length() - 1)
        if k == n:
            k //= 2
        # Internal blocks bypass the public height guard: sharing keeps
        # them at O(log k) nodes regardless of k.
        blocks.append(fully_balanced(k.bit_length() - 1, max_height=k.bit_length()))
        n -= k
    t = Tree()
    for block in reversed(blocks):
        t = Tree(block, t)
    return t


def caterpillar(n: int) -> Tree:
    """The caterpillar on n leaves: a path of internal nodes, height n - 1."""
    if n < 1:
        raise ValueError("caterpillar needs at least one leaf")
    leaf = Tree()
    t = leaf
    for _ in range(n - 1):
        t = Tree(t, leaf)
    return t
