"""Newick reading and writing for strictly binary trees.

Grammar (whitespace between tokens, including newlines, is ignored):

    tree    := subtree ';'
    subtree := leaf | '(' subtree ',' subtree ')' label?
    leaf    := label?
    label   := unquoted-name (':' branch-length)?

Branch lengths and internal labels are parsed and discarded.  Quoted
labels and comments are not supported.  A node with one child or three or
more children raises :class:`NewickArityError` at the offset of its
opening parenthesis; malformed input raises :class:`NewickError` with the
offending offset.  Exactly one statement per input: anything other than
whitespace after the ';' is an error.

The parser and writer are both iterative, so arbitrarily deep trees are
handled without recursion limits.
"""

from dataclasses import dataclass

from .tree import Tree, _ordered

_STRUCTURAL = frozenset("();,:")


class NewickError(ValueError):
    """Malformed Newick input; ``offset`` points at the problem."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (offset {offset})")
        self.offset = offset


class NewickArityError(NewickError):
    """A node in the input is not strictly binary."""


@dataclass(frozen=True)
class NewickDocument:
    """A binary tree shape plus optional leaf labels.

    ``labels``, when present, gives one label per leaf in the shape's
    left-to-right leaf order; labels need not be unique and may be empty
    strings.  ``labels is None`` means the document carries no labels at
    all (the writer then synthesizes t1, t2, ...).
    """

    shape: Tree
    labels: "tuple[str, ...] | None" = None

    def __post_init__(self):
        if self.shape.leaf_count == 0:
            raise ValueError("the empty tree has no Newick form")
        if self.labels is not None:
            object.__setattr__(self, "labels", tuple(self.labels))
            if len(self.labels) != self.shape.leaf_count:
                raise ValueError("need exactly one label per leaf")


def parse_newick(text: str) -> NewickDocument:
    """Parse one Newick statement into a :class:`NewickDocument`.

    The resulting shape mirrors the parenthesization exactly.  If no leaf
    carries a label the document's ``labels`` is None; otherwise unlabeled
    leaves get the empty string.
    """
    s = text
    size = len(s)

    def skip_ws(i: int) -> int:
        while i < size and s[i].isspace():
            i += 1
        return i

    def read_label(i: int) -> "tuple[str, int]":
        start = i
        while i < size and s[i] not in _STRUCTURAL and not s[i].isspace():
            i += 1
        return s[start:i], i

    def skip_branch_length(i: int) -> int:
        if i < size and s[i] == ":":
            i += 1
            start = i
            while i < size and s[i] not in _STRUCTURAL and not s[i].isspace():
                i += 1
            try:
                float(s[start:i])
            except ValueError:
                raise NewickError("invalid branch length", start) from None
        return i

    if skip_ws(0) >= size:
        raise NewickError("empty input", 0)

    # Open internal nodes: (collected children, offset of their '(').
    stack: "list[tuple[list[Tree], int]]" = []
    labels: list[str] = []
    i = 0
    while True:
        i = skip_ws(i)
        if i < size and s[i] == "(":
            stack.append(([], i))
            i += 1
            continue

        label, i = read_label(i)
        i = skip_branch_length(i)
        labels.append(label)
        node = Tree()

        # Attach the completed subtree upward until a ',' yields control
        # back to the scanner or the root is done.
        while True:
            i = skip_ws(i)
            if not stack:
                if i < size and s[i] == ")":
                    raise NewickError("unbalanced parentheses: ')' without '('", i)
                if i >= size or s[i] != ";":
                    raise NewickError("expected ';'", i)
                i = skip_ws(i + 1)
                if i < size:
                    raise NewickError("unexpected content after ';'", i)
                if all(lab == "" for lab in labels):
                    return NewickDocument(node, None)
                return NewickDocument(node, tuple(labels))
            children, open_at = stack[-1]
            children.append(node)
            if i < size and s[i] == ",":
                if len(children) >= 2:
                    raise NewickArityError("node has more than two children", open_at)
                i += 1
                break
            if i < size and s[i] == ")":
                if len(children) != 2:
                    raise NewickArityError("node has fewer than two children", open_at)
                stack.pop()
                _, i = read_label(i + 1)  # internal label, discarded
                i = skip_branch_length(i)
                node = Tree(children[0], children[1])
                continue
            if i >= size:
                raise NewickError("unexpected end of input", size)
            raise NewickError(f"expected ',' or ')', found {s[i]!r}", i)


def write_newick(doc: NewickDocument) -> str:
    """Serialize a document to a single Newick statement.

    Children are emitted in canonical order (larger subtree first, code as
    tie-break), so unlabeled output is deterministic per shape; labels
    follow their leaves through the reordering.  Missing labels come out
    as t1, t2, ... numbered in output order.  No branch lengths.
    """
    shape, labels = doc.shape, doc.labels
    out: list[str] = []
    next_auto = 1
    # Work items are literal tokens or (node, stored-order leaf offset).
    stack: list = [(shape, 0)]
    while stack:
        item = stack.pop()
        if isinstance(item, str):
            out.append(item)
            continue
        node, offset = item
        if node.left is None:
            if labels is None:
                out.append(f"t{next_auto}")
                next_auto += 1
            else:
                out.append(labels[offset])
            continue
        a, b = node.left, node.right
        first, second = _ordered(a, b)
        if first is a:
            first_off, second_off = offset, offset + a.leaf_count
        else:
            first_off, second_off = offset + a.leaf_count, offset
        stack.append(")")
        stack.append((second, second_off))
        stack.append(",")
        stack.append((first, first_off))
        stack.append("(")
    return "".join(out) + ";"
