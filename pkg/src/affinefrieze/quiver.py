"""Quivers as skew-symmetric exchange matrices, the four affine families used
by the verification engine, matrix mutation, and admissible vertex orders.

Sign convention: B[i][j] > 0 means B[i][j] arrows from i to j.  The exchange
relation at k multiplies over in-arrows (B[i][k] > 0) for one product and
out-arrows (B[k][i] > 0) for the other.
"""

import json
from dataclasses import dataclass, field


class NoAdmissibleOrder(ValueError):
    """The quiver admits no sink-first mutation order (it has an oriented
    cycle among unmutated vertices)."""


def mutate_matrix(B, k):
    """Standard matrix mutation at vertex k.  Returns a new matrix."""
    n = len(B)
    out = [row[:] for row in B]
    for i in range(n):
        for j in range(n):
            if i == k or j == k:
                out[i][j] = -B[i][j]
            else:
                out[i][j] = B[i][j] + (abs(B[i][k]) * B[k][j]
                                       + B[i][k] * abs(B[k][j])) // 2
    return out


def sinks_and_sources(B):
    """Return (sinks, sources) if every vertex is one or the other, else None.
    Isolated vertices count as neither and also give None."""
    n = len(B)
    sinks, sources = [], []
    for k in range(n):
        has_in = any(B[i][k] > 0 for i in range(n))
        has_out = any(B[k][j] > 0 for j in range(n))
        if has_in and not has_out:
            sinks.append(k)
        elif has_out and not has_in:
            sources.append(k)
        else:
            return None
    return sinks, sources


def admissible_order(B):
    """A vertex order in which each vertex is a sink at the moment it is
    mutated (lowest index first among current sinks; a vertex with no arrows
    at all also counts).  Raises NoAdmissibleOrder if the quiver has an
    oriented cycle, which blocks any such order."""
    n = len(B)
    work = [row[:] for row in B]
    done = [False] * n
    order = []
    for _ in range(n):
        pick = None
        for k in range(n):
            if done[k]:
                continue
            if all(work[k][j] <= 0 for j in range(n)):
                pick = k
                break
        if pick is None:
            raise NoAdmissibleOrder("every unmutated vertex has an out-arrow")
        order.append(pick)
        done[pick] = True
        work = mutate_matrix(work, pick)
    return order


@dataclass(frozen=True)
class Quiver:
    family: str                 # "A", "D", "E6", "E7", "E8", or "custom"
    params: dict
    n: int
    B: tuple                    # tuple of tuples, skew-symmetric ints
    labels: tuple
    delta: tuple                # positive imaginary root coordinates
    extending: tuple            # vertex indices with delta == 1
    mutation_order: tuple       # canonical one-pass order for this family

    def matrix(self):
        return [list(row) for row in self.B]

    def label_index(self, lab):
        return self.labels.index(lab)

    def arrows(self):
        out = []
        for i in range(self.n):
            for j in range(i + 1, self.n):
                if self.B[i][j] > 0:
                    out.append((i, j, self.B[i][j]))
                elif self.B[i][j] < 0:
                    out.append((j, i, -self.B[i][j]))
        return out


def mutate_quiver(quiver, k):
    """Mutation at vertex k, keeping labels and family metadata."""
    newB = mutate_matrix(quiver.matrix(), k)
    return Quiver(quiver.family, quiver.params, quiver.n,
                  tuple(tuple(r) for r in newB), quiver.labels,
                  quiver.delta, quiver.extending, quiver.mutation_order)


# ---------------------------------------------------------------------------
# family constructors

def _d_matrix(N):
    V = N + 1
    B = [[0] * V for _ in range(V)]

    def setarr(i, j, s):
        B[i - 1][j - 1] = s
        B[j - 1][i - 1] = -s

    setarr(1, 3, 1)
    setarr(2, 3, 1)
    for i in range(3, N - 1):
        setarr(i, i + 1, (-1) ** i)
    s = -1 if N % 2 == 0 else 1
    setarr(N - 1, N, s)
    setarr(N - 1, N + 1, s)
    return B


_E6_B = [
    [0, 1, 0, 0, 0, 0, 0],
    [-1, 0, -1, 0, 0, 0, 0],
    [0, 1, 0, 1, 0, 1, 0],
    [0, 0, -1, 0, -1, 0, 0],
    [0, 0, 0, 1, 0, 0, 0],
    [0, 0, -1, 0, 0, 0, -1],
    [0, 0, 0, 0, 0, 1, 0],
]
_E7_B = [
    [0, 1, 0, 0, 0, 0, 0, 0],
    [-1, 0, -1, 0, 0, 0, 0, 0],
    [0, 1, 0, 1, 0, 0, 0, 0],
    [0, 0, -1, 0, -1, -1, 0, 0],
    [0, 0, 0, 1, 0, 0, 0, 0],
    [0, 0, 0, 1, 0, 0, 1, 0],
    [0, 0, 0, 0, 0, -1, 0, -1],
    [0, 0, 0, 0, 0, 0, 1, 0],
]
_E8_B = [
    [0, 1, 0, 0, 0, 0, 0, 0, 0],
    [-1, 0, -1, 0, 0, 0, 0, 0, 0],
    [0, 1, 0, 1, 0, 0, 0, 0, 0],
    [0, 0, -1, 0, -1, 0, 0, 0, 0],
    [0, 0, 0, 1, 0, 1, 0, 0, 0],
    [0, 0, 0, 0, -1, 0, -1, -1, 0],
    [0, 0, 0, 0, 0, 1, 0, 0, 0],
    [0, 0, 0, 0, 0, 1, 0, 0, 1],
    [0, 0, 0, 0, 0, 0, 0, -1, 0],
]

_E6_DELTA = (1, 2, 3, 2, 1, 2, 1)
_E7_DELTA = (1, 2, 3, 4, 2, 3, 2, 1)
_E8_DELTA = (1, 2, 3, 4, 5, 6, 3, 4, 2)


def _a_matrix(p, q):
    n = p + q
    B = [[0] * n for _ in range(n)]
    for i in range(n):
        j = (i + 1) % n
        if i < p:
            B[i][j] += 1
            B[j][i] += -1
        else:
            B[i][j] += -1
            B[j][i] += 1
    return B


def build_affine_quiver(family, N=None, p=None, q=None):
    """Construct the canonical quiver for one of the affine families.

    family "A" takes p, q >= 1 (cycle with p arrows one way round and q the
    other; p == q == 1 gives the double-arrow two-vertex quiver).
    family "D" takes N >= 4 and has N + 1 vertices, two fork tips at each end.
    families "E6", "E7", "E8" are the extended exceptional trees.
    """
    if family == "D":
        assert N is not None and N >= 4
        B = _d_matrix(N)
        V = N + 1
        labels = tuple(f"x{i}" for i in range(1, V + 1))
        delta = tuple(1 if i in (1, 2, N, N + 1) else 2 for i in range(1, V + 1))
        extending = (0, 1, N - 1, N)
        sk, so = sinks_and_sources(B)
        order = tuple(sk + so)
        params = {"N": N}
    elif family in ("E6", "E7", "E8"):
        B = {"E6": _E6_B, "E7": _E7_B, "E8": _E8_B}[family]
        B = [row[:] for row in B]
        delta = {"E6": _E6_DELTA, "E7": _E7_DELTA, "E8": _E8_DELTA}[family]
        labels = tuple("abcdefghi"[: len(B)])
        extending = tuple(i for i, d in enumerate(delta) if d == 1)
        sk, so = sinks_and_sources(B)
        order = tuple(so + sk)   # sources first for these trees
        params = {}
    elif family == "A":
        assert p is not None and q is not None and p >= 1 and q >= 1
        B = _a_matrix(p, q)
        n = p + q
        labels = tuple(f"x{i}" for i in range(n))
        delta = tuple(1 for _ in range(n))
        extending = tuple(range(n))
        order = tuple(admissible_order(B))
        params = {"p": p, "q": q}
    else:
        raise ValueError(f"unknown family {family!r}")
    return Quiver(family, params, len(B), tuple(tuple(r) for r in B),
                  labels, tuple(delta), extending, order)


# ---------------------------------------------------------------------------
# JSON round trip

def quiver_to_json(quiver):
    doc = {
        "family": quiver.family,
        "params": dict(quiver.params),
        "vertices": quiver.n,
        "arrows": [list(a) for a in quiver.arrows()],
        "delta": list(quiver.delta),
    }
    return json.dumps(doc, sort_keys=True, separators=(",", ":"))


def quiver_from_json(text):
    doc = json.loads(text)
    fam = doc["family"]
    if fam in ("A", "D", "E6", "E7", "E8"):
        qv = build_affine_quiver(fam, **{k: v for k, v in doc["params"].items()})
        got = sorted(tuple(a) for a in qv.arrows())
        want = sorted(tuple(a) for a in doc["arrows"])
        if got != want or list(qv.delta) != list(doc["delta"]):
            raise ValueError("serialized quiver disagrees with its family data")
        return qv
    n = doc["vertices"]
    B = [[0] * n for _ in range(n)]
    for i, j, m in doc["arrows"]:
        B[i][j] += m
        B[j][i] -= m
    labels = tuple(f"x{i}" for i in range(n))
    delta = tuple(doc.get("delta") or (1,) * n)
    extending = tuple(i for i, d in enumerate(delta) if d == 1)
    return Quiver("custom", dict(doc.get("params") or {}), n,
                  tuple(tuple(r) for r in B), labels, delta, extending,
                  tuple(admissible_order(B)))
