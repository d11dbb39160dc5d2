"""Backtracking over ternary constraints that all share one relation.

Palette homomorphisms and shadow colourings are the same problem: give each
variable a value so that every scope ``(a, b, c)`` lands on a triple of a
fixed relation. Domains are int bitmasks; propagation is generalised arc
consistency by scanning the relation.
"""

from __future__ import annotations


class SearchBudgetExceeded(RuntimeError):
    pass


def _popcount(x: int) -> int:
    return x.bit_count()


class TernaryCSP:
    def __init__(self, num_vars, num_values, relation, scopes, domains=None, priority=None, injective=False):
        self.num_vars = num_vars
        self.num_values = num_values
        self.relation = list(relation)
        self.scopes = [tuple(s) for s in scopes]
        full = (1 << num_values) - 1
        self.domains = list(domains) if domains is not None else [full] * num_vars
        # rank used to break ties when choosing the next variable
        rank = priority if priority is not None else list(range(num_vars))
        self.rank = {v: i for i, v in enumerate(rank)}
        self.injective = injective
        self.var_scopes = [[] for _ in range(num_vars)]
        for i, s in enumerate(self.scopes):
            for v in set(s):
                self.var_scopes[v].append(i)
        self.nodes = 0

    def _revise(self, dom, si):
        a, b, c = self.scopes[si]
        da, db, dc = dom[a], dom[b], dom[c]
        na = nb = nc = 0
        ab, ac, bc = a == b, a == c, b == c
        for x, y, z in self.relation:
            if (da >> x) & 1 and (db >> y) & 1 and (dc >> z) & 1:
                if (ab and x != y) or (ac and x != z) or (bc and y != z):
                    continue
                na |= 1 << x
                nb |= 1 << y
                nc |= 1 << z
        changed = []
        for v, new in ((a, na), (b, nb), (c, nc)):
            new &= dom[v]
            if new != dom[v]:
                if not new:
                    return None
                dom[v] = new
                changed.append(v)
        return changed

    def _propagate(self, dom, start_vars):
        queue = []
        queued = set()

        def enqueue(v, skip=None):
            for si in self.var_scopes[v]:
                if si != skip and si not in queued:
                    queued.add(si)
                    queue.append(si)

        singles = list(start_vars) if self.injective else []
        for v in start_vars:
            enqueue(v)
        while queue or singles:
            if singles:
                v = singles.pop()
                d = dom[v]
                if _popcount(d) != 1:
                    continue
                for u in range(self.num_vars):
                    if u != v and dom[u] & d:
                        dom[u] &= ~d
                        if not dom[u]:
                            return False
                        singles.append(u)
                        enqueue(u)
                continue
            si = queue.pop()
            queued.discard(si)
            changed = self._revise(dom, si)
            if changed is None:
                return False
            for v in changed:
                if self.injective:
                    singles.append(v)
                enqueue(v, skip=si)
        return True

    def _choose(self, dom, among):
        best = None
        best_key = None
        for v in among:
            size = _popcount(dom[v])
            if size <= 1:
                continue
            bound = 0
            for si in self.var_scopes[v]:
                if any(_popcount(dom[u]) == 1 for u in self.scopes[si] if u != v):
                    bound += 1
            key = (size, -bound, self.rank.get(v, v))
            if best_key is None or key < best_key:
                best, best_key = v, key
        return best

    def components(self):
        """Variable sets linked by shared scopes (all variables if injective)."""
        if self.injective:
            return [list(range(self.num_vars))]
        parent = list(range(self.num_vars))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for a, b, c in self.scopes:
            parent[find(b)] = find(a)
            parent[find(c)] = find(a)
        groups = {}
        for v in range(self.num_vars):
            groups.setdefault(find(v), []).append(v)
        return list(groups.values())

    def solve(self, node_limit=None):
        """A satisfying assignment as a list of values, or ``None``.

        Independent components are searched one at a time, so a failing
        component is not re-explored under every assignment of the others.
        """
        dom = list(self.domains)
        if any(d == 0 for d in dom):
            return None
        if not self._propagate(dom, range(self.num_vars)):
            return None
        comps = self.components()
        # small components first: they tend to fail fastest
        comps.sort(key=len)
        for comp in comps:
            sub = list(dom)
            found = self._search(sub, node_limit, comp)
            if found is None:
                return None
            for v in comp:
                dom[v] = found[v]
        return [d.bit_length() - 1 for d in dom]

    def _search(self, dom, node_limit, among):
        self.nodes += 1
        if node_limit is not None and self.nodes > node_limit:
            raise SearchBudgetExceeded
        v = self._choose(dom, among)
        if v is None:
            return dom
        values = dom[v]
        while values:
            low = values & -values
            values ^= low
            child = list(dom)
            child[v] = low
            if self._propagate(child, [v]):
                found = self._search(child, node_limit, among)
                if found is not None:
                    return found
        return None
