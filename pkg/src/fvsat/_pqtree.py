"""PQ-tree recognizer for the consecutive-ones property.

Leaves are column indices.  P-nodes allow any child order, Q-nodes a
fixed order up to reversal.  Reducing the tree by a row constrains that
row's columns to be consecutive in every frontier; a row that cannot be
accommodated proves the matrix is not C1P.

Only the recognizer lives here.  Certificates (the frontier) are
re-verified by the caller, so the public behaviour does not depend on
the template subtleties below.
"""

from __future__ import annotations

import re

_EMPTY, _FULL, _PARTIAL = 0, 1, 2
_LABEL_CHAR = {_EMPTY: "E", _FULL: "F", _PARTIAL: "P"}

_SIDE_RE = re.compile(r"(E*)(P?)(F*)")
_ROOT_RE = re.compile(r"(E*)(P?)(F*)(P?)(E*)")


class _Fail(Exception):
    """Internal signal: the current row cannot be made consecutive."""


class _Leaf:
    __slots__ = ("col",)

    def __init__(self, col: int):
        self.col = col


class _PNode:
    __slots__ = ("children",)

    def __init__(self, children):
        self.children = tuple(children)


class _QNode:
    __slots__ = ("children",)

    def __init__(self, children):
        self.children = tuple(children)


def _group(nodes):
    return nodes[0] if len(nodes) == 1 else _PNode(nodes)


def _norm(node):
    """Drop degenerate internal nodes (single child, two-child Q)."""
    if isinstance(node, _Leaf):
        return node
    if len(node.children) == 1:
        return node.children[0]
    if isinstance(node, _QNode) and len(node.children) == 2:
        return _PNode(node.children)
    return node


def _process(node, s):
    """Non-root template application; returns (label, replacement).

    A PARTIAL replacement is always a Q-like node whose children run
    from the empty side to the full side.
    """
    if isinstance(node, _Leaf):
        return (_FULL if node.col in s else _EMPTY), node
    done = [_process(ch, s) for ch in node.children]
    labels = "".join(_LABEL_CHAR[lab] for lab, _ in done)
    if "F" not in labels and "P" not in labels:
        return _EMPTY, node
    if "E" not in labels and "P" not in labels:
        return _FULL, node
    if isinstance(node, _PNode):
        empties = [n for lab, n in done if lab == _EMPTY]
        fulls = [n for lab, n in done if lab == _FULL]
        partials = [n for lab, n in done if lab == _PARTIAL]
        if len(partials) > 1:
            raise _Fail
        children: list = []
        if empties:
            children.append(_group(empties))
        if partials:
            children.extend(partials[0].children)
        if fulls:
            children.append(_group(fulls))
        return _PARTIAL, _QNode(children)
    if not _SIDE_RE.fullmatch(labels):
        done.reverse()
        labels = labels[::-1]
        if not _SIDE_RE.fullmatch(labels):
            raise _Fail
    children = []
    for lab, n in done:
        if lab == _PARTIAL:
            children.extend(n.children)
        else:
            children.append(n)
    return _PARTIAL, _QNode(children)


def _apply_root(node, s):
    """Template application at the pertinent root; returns replacement."""
    if isinstance(node, _Leaf):
        return node
    done = [_process(ch, s) for ch in node.children]
    if isinstance(node, _PNode):
        empties = [n for lab, n in done if lab == _EMPTY]
        fulls = [n for lab, n in done if lab == _FULL]
        partials = [n for lab, n in done if lab == _PARTIAL]
        if len(partials) > 2:
            raise _Fail
        if not partials:
            if not empties or not fulls:
                return node
            return _PNode(empties + [_group(fulls)])
        mid = [_group(fulls)] if fulls else []
        if len(partials) == 1:
            qc = list(partials[0].children) + mid
        else:
            qc = (list(partials[0].children) + mid
                  + list(reversed(partials[1].children)))
        merged = _norm(_QNode(qc))
        return _norm(_PNode(empties + [merged])) if empties else merged
    labels = "".join(_LABEL_CHAR[lab] for lab, _ in done)
    m = _ROOT_RE.fullmatch(labels)
    if not m:
        raise _Fail
    first_partial = len(m.group(1)) if m.group(2) else -1
    children = []
    for i, (lab, n) in enumerate(done):
        if lab == _PARTIAL:
            if i == first_partial:
                children.extend(n.children)
            else:
                children.extend(reversed(n.children))
        else:
            children.append(n)
    return _norm(_QNode(children))


def _count(node, s) -> int:
    if isinstance(node, _Leaf):
        return 1 if node.col in s else 0
    return sum(_count(ch, s) for ch in node.children)


def _reduce(tree, s):
    """Constrain the columns in s to be consecutive; raises _Fail."""
    k = len(s)

    def descend(node):
        if not isinstance(node, _Leaf):
            for i, ch in enumerate(node.children):
                if _count(ch, s) == k:
                    kids = list(node.children)
                    kids[i] = descend(ch)
                    return type(node)(kids)
        return _apply_root(node, s)

    return descend(tree)


def _frontier(node, out: list):
    if isinstance(node, _Leaf):
        out.append(node.col)
    else:
        for ch in node.children:
            _frontier(ch, out)


def recognize(col_count: int, rows) -> tuple[int, ...] | None:
    """A column order making every row's ones consecutive, else None.

    ``rows`` is an iterable of column-index sets.  Rows with at most one
    entry, or with every column, never constrain anything and are
    skipped.
    """
    if col_count == 0:
        return ()
    tree = _Leaf(0) if col_count == 1 else _PNode(
        [_Leaf(c) for c in range(col_count)])
    for s in rows:
        if len(s) <= 1 or len(s) == col_count:
            continue
        try:
            tree = _reduce(tree, frozenset(s))
        except _Fail:
            return None
    leaves: list[int] = []
    _frontier(tree, leaves)
    return tuple(leaves)
