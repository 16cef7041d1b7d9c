"""Equivariant and ordinary Schubert structure constants via GKM.

The defining identity — products of restriction tuples expand over the
restriction tuples of the basis — is triangular with respect to Bruhat
order, so the constant at w is obtained by an exact division once all
strictly smaller constants are known:

    C_{u,v}^y * R(y,y) = R(u,y) R(v,y) - sum_{z < y} C_{u,v}^z R(z,y)

Every division must be exact over the integers; a failed division means an
upstream bug and raises ExactDivisionError.

All solves run inside the parabolic subgroup generated by the support of w
(the lower interval of w never leaves it), and results are memoized under a
support-packed key, so computations for translated or relabelled copies of
the same configuration are shared across ranks and placements.
"""

from __future__ import annotations

import json
import os
import threading

from .polyring import ExactDivisionError, MultiPoly, exact_divide
from .restriction import restrict
from .weyl import (
    WeylElement,
    bruhat_leq,
    canonical_reduced_word,
    lower_interval,
    sort_key,
    support_letters,
)

_memo: dict = {}
_memo_lock = threading.Lock()
_disk_cache: "ConstantCache | None" = None


def _packed_key(u, v, w):
    """Cache key invariant under diagram embeddings: the support of w repacked."""
    letters = support_letters(w)
    pos = {letter: t + 1 for t, letter in enumerate(letters)}
    cartan = tuple(
        tuple(w.diagram.entry(a, b) for b in letters) for a in letters
    )
    wu = tuple(pos[x] for x in canonical_reduced_word(u))
    wv = tuple(pos[x] for x in canonical_reduced_word(v))
    ww = tuple(pos[x] for x in canonical_reduced_word(w))
    return (cartan, tuple(sorted((wu, wv))), ww), letters


def _pack_poly(p: MultiPoly, letters) -> MultiPoly:
    mapping = {letter: t + 1 for t, letter in enumerate(letters)}
    return p.rename_variables(len(letters), mapping)


def _unpack_poly(p: MultiPoly, letters, rank: int) -> MultiPoly:
    mapping = {t + 1: letter for t, letter in enumerate(letters)}
    return p.rename_variables(rank, mapping)


def solve_constants(u: WeylElement, v: WeylElement, top: WeylElement) -> dict[WeylElement, MultiPoly]:
    """Triangular solve for C_{u,v}^y over the whole lower interval of top."""
    if not (u.diagram == v.diagram == top.diagram):
        raise ValueError("structure constants require elements over one diagram")
    rank = top.diagram.rank
    zero = MultiPoly.zero(rank)
    table: dict[WeylElement, MultiPoly] = {}
    for y in sorted(lower_interval(top), key=sort_key):
        if not (bruhat_leq(u, y) and bruhat_leq(v, y)):
            table[y] = zero
            continue
        numerator = restrict(u, y) * restrict(v, y)
        for z in lower_interval(y):
            if z == y:
                continue
            cz = table[z]
            if cz:
                numerator = numerator - cz * restrict(z, y)
        table[y] = exact_divide(numerator, restrict(y, y)) if numerator else zero
    return table


def equivariant_constant(u: WeylElement, v: WeylElement, w: WeylElement) -> MultiPoly:
    """The equivariant constant C_{u,v}^w, a polynomial in the alpha variables.

    Zero unless u <= w and v <= w; homogeneous of degree
    length(u) + length(v) - length(w) when nonzero.
    """
    if not (u.diagram == v.diagram == w.diagram):
        raise ValueError("structure constants require elements over one diagram")
    rank = w.diagram.rank
    if not (bruhat_leq(u, w) and bruhat_leq(v, w)):
        return MultiPoly.zero(rank)
    key, letters = _packed_key(u, v, w)
    with _memo_lock:
        hit = _memo.get(key)
    if hit is not None:
        return _unpack_poly(hit, letters, rank)
    if _disk_cache is not None:
        stored = _disk_cache.get(u, v, w)
        if stored is not None:
            with _memo_lock:
                _memo[key] = _pack_poly(stored, letters)
            return stored
    table = solve_constants(u, v, w)
    # memoize the whole solved interval under each element's own packed key
    with _memo_lock:
        for y, poly in table.items():
            if bruhat_leq(u, y) and bruhat_leq(v, y):
                ykey, yletters = _packed_key(u, v, y)
                _memo.setdefault(ykey, _pack_poly(poly, yletters))
    result = table[w]
    if _disk_cache is not None:
        _disk_cache.put(u, v, w, result)
    return result


def ordinary_constant(u: WeylElement, v: WeylElement, w: WeylElement) -> int:
    """The ordinary constant: the constant value of C_{u,v}^w when lengths add, else 0."""
    if u.length + v.length != w.length:
        return 0
    poly = equivariant_constant(u, v, w)
    if poly and not poly.is_constant():
        raise ExactDivisionError(
            f"constant for {u!r},{v!r},{w!r} is not scalar: {poly.pretty()}"
        )
    return poly.constant_coefficient()


_inner_memo: dict = {}


def inner_sum(w: WeylElement) -> int:
    """Sum of ordinary constants over ordered pairs u, v <= w with lengths adding to length(w)."""
    key, _ = _packed_key(w, w, w)
    cached = _inner_memo.get(key)
    if cached is not None:
        return cached
    interval = sorted(lower_interval(w), key=sort_key)
    by_length: dict[int, list[WeylElement]] = {}
    for y in interval:
        by_length.setdefault(y.length, []).append(y)
    total = 0
    for lu, us in by_length.items():
        vs = by_length.get(w.length - lu, [])
        for u in us:
            for v in vs:
                total += ordinary_constant(u, v, w)
    _inner_memo[key] = total
    return total


class ConstantCache:
    """Append-only JSONL store of equivariant constants, one object per line.

    Keys are family, rank, and the canonical reduced words of u, v (sorted,
    since the constants are symmetric in u and v) and w.  Safe to delete;
    concurrent readers are fine and writes are serialized per process.
    """

    FILENAME = "constants.jsonl"

    def __init__(self, directory: str):
        self.directory = directory
        self.path = os.path.join(directory, self.FILENAME)
        self._entries: dict[str, list] = {}
        self._lock = threading.Lock()
        os.makedirs(directory, exist_ok=True)
        if os.path.exists(self.path):
            with open(self.path, encoding="utf-8") as handle:
                for line in handle:
                    line = line.strip()
                    if not line:
                        continue
                    doc = json.loads(line)
                    self._entries[doc["key"]] = doc["value"]

    @staticmethod
    def _key(u, v, w) -> str:
        words = sorted(
            [canonical_reduced_word(u), canonical_reduced_word(v)]
        )
        parts = [
            u.diagram.family,
            str(u.diagram.rank),
            ",".join(map(str, words[0])),
            ",".join(map(str, words[1])),
            ",".join(map(str, canonical_reduced_word(w))),
        ]
        return "|".join(parts)

    def get(self, u, v, w):
        value = self._entries.get(self._key(u, v, w))
        if value is None:
            return None
        return MultiPoly.from_json_terms(w.diagram.rank, value)

    def put(self, u, v, w, poly: MultiPoly) -> None:
        key = self._key(u, v, w)
        with self._lock:
            if key in self._entries:
                return
            value = poly.to_json_terms()
            self._entries[key] = value
            with open(self.path, "a", encoding="utf-8") as handle:
                handle.write(json.dumps({"key": key, "value": value}) + "\n")


def set_disk_cache(cache: "ConstantCache | None") -> None:
    global _disk_cache
    _disk_cache = cache
