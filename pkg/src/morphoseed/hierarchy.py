"""Rooted tree of morphemic concepts and path-overlap similarity.

The file format is an edge list, ``child_id <TAB> parent_id`` per line, with
the root declared as ``ROOT <TAB> -``. Ids starting with ``cat:`` (and the
root) are internal category nodes: they shape paths but are not concepts
themselves. Similarity between two nodes is twice the size of the shared
root-path prefix divided by the sum of both path lengths, so it is 1 exactly
on the diagonal and positive everywhere (all paths share the root).
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from pathlib import Path

from .errors import Issue, TreeError, UnknownNodeError
from .lexicon import Lexicon


@dataclass
class MCTree:
    """Immutable rooted tree over concept ids plus internal category nodes."""

    root: str
    parent: dict[str, str]
    children: dict[str, list[str]]
    depth: dict[str, int]
    paths: dict[str, tuple[str, ...]]
    mc_nodes: list[str]

    def __contains__(self, node: str) -> bool:
        return node in self.depth

    def is_mc(self, node: str) -> bool:
        return not node.startswith("cat:") and node != self.root


@dataclass
class NeighborSet:
    """All concepts at least ``threshold``-similar to ``center`` (incl. itself)."""

    center: str
    threshold: float
    members: list[tuple[str, float]]

    @property
    def ids(self) -> list[str]:
        return [node for node, _ in self.members]

    def __len__(self) -> int:
        return len(self.members)


def build_tree(parent: dict[str, str], root: str) -> MCTree:
    """Construct and validate an MCTree from a parent map (root excluded)."""
    children: dict[str, list[str]] = defaultdict(list)
    for child, par in parent.items():
        children[par].append(child)
    for kids in children.values():
        kids.sort()

    nodes = set(parent) | {root}
    for child, par in parent.items():
        if par not in nodes:
            raise TreeError(f"node {child} has undeclared parent {par}")

    # Depth-first from the root; anything unreachable means a cycle or a
    # disconnected component, both rejected (paths must be unique).
    depth: dict[str, int] = {root: 0}
    paths: dict[str, tuple[str, ...]] = {root: (root,)}
    stack = [root]
    while stack:
        node = stack.pop()
        for child in children.get(node, ()):
            depth[child] = depth[node] + 1
            paths[child] = paths[node] + (child,)
            stack.append(child)
    unreachable = nodes - set(depth)
    if unreachable:
        sample = ", ".join(sorted(unreachable)[:5])
        raise TreeError(f"{len(unreachable)} node(s) unreachable from root (cycle or orphan): {sample}")

    tree = MCTree(root=root, parent=dict(parent), children=dict(children), depth=depth, paths=paths, mc_nodes=[])
    tree.mc_nodes = sorted(n for n in depth if tree.is_mc(n))
    return tree


def load_tree(path: str | Path) -> MCTree:
    """Parse and validate a hierarchy edge-list file."""
    path = Path(path)
    parent: dict[str, str] = {}
    root: str | None = None
    with open(path, encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.rstrip("\n")
            if not line.strip() or line.lstrip().startswith("#"):
                continue
            fields = line.split("\t")
            if len(fields) != 2:
                raise TreeError(f"{path}:{lineno}: expected 'child<TAB>parent', got {line!r}")
            child, par = fields[0].strip(), fields[1].strip()
            if par == "-":
                if root is not None:
                    raise TreeError(f"{path}:{lineno}: second root declaration {child!r} (root is {root!r})")
                root = child
                continue
            if child in parent or child == root:
                raise TreeError(f"{path}:{lineno}: node {child!r} declared twice")
            parent[child] = par
    if root is None:
        raise TreeError(f"{path}: no root declared (expected a '<id>\\t-' line)")
    if root in parent:
        raise TreeError(f"{path}: root {root!r} also appears with a parent")
    return build_tree(parent, root)


def check_tree_covers_lexicon(tree: MCTree, lexicon: Lexicon) -> list[Issue]:
    """Concept ids in the lexicon and MC nodes in the tree must coincide."""
    issues = []
    tree_mcs = set(tree.mc_nodes)
    lex_mcs = set(lexicon.mcs)
    for missing in sorted(lex_mcs - tree_mcs):
        issues.append(Issue(f"concept {missing} missing from hierarchy"))
    for extra in sorted(tree_mcs - lex_mcs):
        issues.append(Issue(f"hierarchy concept node {extra} not in lexicon"))
    return issues


def path_to_root(tree: MCTree, node: str) -> list[str]:
    """Inclusive node path from the root down to ``node``."""
    try:
        return list(tree.paths[node])
    except KeyError:
        raise UnknownNodeError(f"unknown node {node!r}") from None


def _shared_prefix(pa: tuple[str, ...], pb: tuple[str, ...]) -> int:
    n = 0
    for a, b in zip(pa, pb):
        if a != b:
            break
        n += 1
    return n


def mc_similarity(tree: MCTree, node_a: str, node_b: str) -> float:
    """Path-overlap similarity: 2 * |shared prefix| / (|path a| + |path b|)."""
    try:
        pa, pb = tree.paths[node_a], tree.paths[node_b]
    except KeyError as exc:
        raise UnknownNodeError(f"unknown node {exc.args[0]!r}") from None
    return 2.0 * _shared_prefix(pa, pb) / (len(pa) + len(pb))


def neighbor_set(tree: MCTree, center: str, threshold: float) -> NeighborSet:
    """Concepts whose similarity to ``center`` reaches the threshold.

    Only concept nodes qualify as members; internal category nodes never do.
    Members are sorted by descending score, ties lexicographically.
    """
    if center not in tree.depth:
        raise UnknownNodeError(f"unknown node {center!r}")
    if not 0.0 <= threshold <= 1.0:
        raise ValueError(f"threshold must be in [0, 1], got {threshold}")
    members = []
    for node in tree.mc_nodes:
        score = mc_similarity(tree, center, node)
        if score >= threshold:
            members.append((node, score))
    members.sort(key=lambda ns: (-ns[1], ns[0]))
    return NeighborSet(center=center, threshold=threshold, members=members)


def all_neighbor_sets(tree: MCTree, threshold: float) -> dict[str, NeighborSet]:
    """Neighbor sets for every concept node, in one bottom-up pass.

    Exploits subtree locality: two nodes' shared prefix is determined by
    their lowest common ancestor, so pairs are enumerated per ancestor while
    merging concept-descendant lists upward, skipping ancestors too shallow
    to reach the threshold. Matches per-node ``neighbor_set`` output exactly.
    """
    if not 0.0 <= threshold <= 1.0:
        raise ValueError(f"threshold must be in [0, 1], got {threshold}")
    found: dict[str, list[tuple[str, float]]] = {node: [(node, 1.0)] for node in tree.mc_nodes}

    # Post-order traversal without recursion (fixture trees are shallow but
    # caller-provided ones need not be).
    order: list[str] = []
    stack = [tree.root]
    while stack:
        node = stack.pop()
        order.append(node)
        stack.extend(tree.children.get(node, ()))

    subtree_mcs: dict[str, list[tuple[str, int]]] = {}
    for node in reversed(order):
        shared = tree.depth[node] + 1
        own: list[tuple[str, int]] = [(node, tree.depth[node])] if tree.is_mc(node) else []
        groups = [subtree_mcs.pop(child) for child in tree.children.get(node, ())]
        if own:
            groups.append(own)
        # Cheapest possible pair under this ancestor: one node is the
        # ancestor itself, the other a direct child. Anything deeper only
        # lowers similarity, so the whole ancestor can be skipped.
        best = 2.0 * shared / (shared + shared + 1)
        if len(groups) > 1 and best >= threshold:
            for gi in range(len(groups)):
                for gj in range(gi + 1, len(groups)):
                    for a, da in groups[gi]:
                        for b, db in groups[gj]:
                            score = 2.0 * shared / (da + db + 2)
                            if score >= threshold:
                                found[a].append((b, score))
                                found[b].append((a, score))
        merged = groups[0] if len(groups) == 1 else [mc for g in groups for mc in g]
        subtree_mcs[node] = merged

    result = {}
    for node, members in found.items():
        members.sort(key=lambda ns: (-ns[1], ns[0]))
        result[node] = NeighborSet(center=node, threshold=threshold, members=members)
    return result
