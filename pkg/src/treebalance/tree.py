"""Rooted binary tree shapes and exact structural queries.

A tree is either a single leaf or an internal node with exactly two
non-empty children.  Shapes carry no labels and children are unordered:
two trees count as the same shape when one becomes the other by swapping
children at any set of nodes.  The module-level ``EMPTY`` value stands for
the tree on zero leaves; it is a first-class input to the index functions
but may never appear below an internal node.

Instances are immutable and may freely share subtree objects (the family
generators rely on this), so every structural operation here walks each
distinct node at most once, keyed by identity, instead of recursing over
the unfolded tree.  All traversals use explicit stacks; arbitrarily deep
trees such as large caterpillars are safe.
"""

#: Canonical codes are strings over "0"/"1"; equal codes mean equal shapes.
CanonicalCode = str


class LimitError(ValueError):
    """A configurable size guard (tree height or enumeration bound) was hit."""


class Tree:
    """An immutable rooted binary tree shape.

    ``Tree()`` is a leaf; ``Tree(left, right)`` is an internal node.  Each
    node caches the number of leaves below it at construction time, so
    subtree sizes are O(1).  Equality and hashing go through the canonical
    code: ``t1 == t2`` means "same shape".
    """

    __slots__ = ("left", "right", "leaf_count", "_code")

    def __init__(self, left: "Tree | None" = None, right: "Tree | None" = None):
        if (left is None) != (right is None):
            raise ValueError("an internal node needs exactly two children")
        if left is None:
            self.leaf_count = 1
        else:
            if left.leaf_count == 0 or right.leaf_count == 0:
                raise ValueError("the empty tree cannot be a child of an internal node")
            self.leaf_count = left.leaf_count + right.leaf_count
        self.left = left
        self.right = right
        self._code: str | None = None

    @property
    def is_leaf(self) -> bool:
        return self.left is None and self.leaf_count == 1

    @property
    def is_empty(self) -> bool:
        return self.leaf_count == 0

    def __eq__(self, other):
        if not isinstance(other, Tree):
            return NotImplemented
        return self is other or canonical(self) == canonical(other)

    def __hash__(self):
        return hash(canonical(self))

    def __repr__(self):
        if self.leaf_count == 0:
            return "<empty Tree>"
        return f"<Tree with {self.leaf_count} leaves>"


def _new_empty() -> Tree:
    # Bypasses __init__ so that the ordinary constructor can keep rejecting
    # half-formed nodes; this is the only place a zero-leaf Tree is made.
    t = Tree.__new__(Tree)
    t.left = None
    t.right = None
    t.leaf_count = 0
    t._code = ""
    return t


#: The tree on zero leaves.
EMPTY = _new_empty()


def canonical(t: Tree) -> CanonicalCode:
    """Return the canonical code of ``t``.

    A leaf codes as ``"0"`` and an internal node as ``"1"`` followed by the
    codes of its children ordered by the canonical sort key (leaf count
    descending, then code lexicographic).  The empty tree codes as ``""``.
    The code is cached on each node, computed at most once per object.
    """
    if t._code is not None:
        return t._code
    stack = [(t, False)]
    while stack:
        node, ready = stack.pop()
        if node._code is not None:
            continue
        if node.left is None:
            node._code = "0"
        elif ready:
            first, second = _ordered(node.left, node.right)
            node._code = "1" + first._code + second._code
        else:
            stack.append((node, True))
            stack.append((node.left, False))
            stack.append((node.right, False))
    return t._code


def _ordered(a: Tree, b: Tree) -> "tuple[Tree, Tree]":
    """Order two siblings by the canonical sort key.

    Larger leaf count first; equal counts fall back to lexicographic code
    order.  The identity fast path avoids building codes for aliased pairs.
    """
    if a is b:
        return a, b
    if a.leaf_count != b.leaf_count:
        return (a, b) if a.leaf_count > b.leaf_count else (b, a)
    return (a, b) if canonical(a) <= canonical(b) else (b, a)


def decompose(t: Tree) -> "tuple[Tree, Tree]":
    """Split ``t`` into its two maximal pending subtrees, larger one first.

    Ties in leaf count are broken by canonical code, so the returned pair
    is deterministic per shape.  Raises ValueError on a leaf or on EMPTY.
    """
    if t.leaf_count < 2:
        raise ValueError("decompose needs an internal node (at least two leaves)")
    return _ordered(t.left, t.right)


def height(t: Tree) -> int:
    """Edge count from the root to its deepest leaf.

    Raises ValueError on the empty tree; a lone leaf has height 0.
    """
    if t.leaf_count == 0:
        raise ValueError("the empty tree has no height")
    heights: dict[int, int] = {}
    stack = [(t, False)]
    while stack:
        node, ready = stack.pop()
        if node.left is None or id(node) in heights:
            continue
        if ready:
            heights[id(node)] = 1 + max(
                heights.get(id(node.left), 0), heights.get(id(node.right), 0)
            )
        else:
            stack.append((node, True))
            stack.append((node.left, False))
            stack.append((node.right, False))
    return heights.get(id(t), 0)


def is_isomorphic(t1: Tree, t2: Tree) -> bool:
    """True when the two trees are the same shape (children unordered)."""
    return canonical(t1) == canonical(t2)
