"""Bounded search for consequences of relators.

Builds (breadth-first) the set of freely reduced words that are
certified products of conjugates of relators, staying within explicit
length / node / depth budgets.  Every member carries enough move
history to reconstruct an explicit conjugate-product expression, which
re-verifies by pure free reduction.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

from .words import IntWord, invert_ints, reduce_ints

# Moves are recorded as:
#   ("ins", position, relator_index, sign, rotation) -- insert a cyclic
#       rotation of relator^sign at the given position, then reduce.
#   ("conj", letter) -- conjugate the whole word by a single generator
#       letter (positive or negative int), then reduce.


@dataclass
class ClosureBall:
    """Certified consequences of ``relators`` discovered within budget."""

    relators: tuple[IntWord, ...]
    max_len: int
    max_depth: int
    max_states: int
    parents: dict[IntWord, tuple[IntWord, tuple]] = field(default_factory=dict)
    exhausted: bool = True

    def __contains__(self, iw: IntWord) -> bool:
        return iw in self.parents

    def factors(self, iw: IntWord) -> list[tuple[IntWord, int, int]]:
        """Express ``iw`` as an ordered product of conjugates.

        Returns [(conjugator, relator_index, sign), ...] with
        iw = prod_i  c_i * relators[r_i]^{s_i} * c_i^{-1}  after free
        reduction.
        """
        path = []
        cur = iw
        while cur != ():
            parent, move = self.parents[cur]
            path.append(move)
            cur = parent
        path.reverse()
        factors: list[tuple[IntWord, int, int]] = []
        word: IntWord = ()
        for move in path:
            if move[0] == "ins":
                _, pos, ridx, sign, rot = move
                rel = self.relators[ridx] if sign == 1 else invert_ints(self.relators[ridx])
                pre = rel[:rot]
                conj = reduce_ints(word[:pos] + invert_ints(pre))
                # inserting at pos turns word = a b into a (pre^-1 rel pre) b,
                # i.e. new = (a pre^-1) rel (a pre^-1)^-1 * old: prepend
                factors.insert(0, (conj, ridx, sign))
                word = reduce_ints(word[:pos] + rel[rot:] + pre + word[pos:])
            else:
                _, letter = move
                factors = [
                    (reduce_ints((letter,) + c), ridx, sign) for c, ridx, sign in factors
                ]
                word = reduce_ints((letter,) + word + (-letter,))
        assert word == iw
        return factors


def _rotations(rel: IntWord) -> list[tuple[int, IntWord]]:
    seen = set()
    out = []
    for k in range(len(rel)):
        rot = rel[k:] + rel[:k]
        if rot not in seen:
            seen.add(rot)
            out.append((k, rot))
    return out


def closure_ball(
    relators: list[IntWord],
    n_generators: int,
    max_len: int,
    max_depth: int,
    max_states: int = 200_000,
) -> ClosureBall:
    """BFS over freely reduced words in the normal closure of the
    relators, keeping words of length <= max_len, up to max_depth moves
    and max_states distinct states.

    ``exhausted`` is False when the state budget was hit, i.e. absence
    from the ball is then evidence only at the explored budget.
    """
    rels = tuple(reduce_ints(r) for r in relators)
    ball = ClosureBall(rels, max_len, max_depth, max_states)
    ball.parents[()] = ((), ("root",))
    ins_moves = []
    for ridx, rel in enumerate(rels):
        if not rel:
            continue
        for sign, oriented in ((1, rel), (-1, invert_ints(rel))):
            for rot, rotated in _rotations(oriented):
                ins_moves.append((ridx, sign, rot, rotated))
    letters = [g for g in range(1, n_generators + 1)] + [
        -g for g in range(1, n_generators + 1)
    ]
    queue: deque[tuple[IntWord, int]] = deque([((), 0)])
    while queue:
        word, depth = queue.popleft()
        if depth >= max_depth:
            continue
        children = []
        for pos in range(len(word) + 1):
            for ridx, sign, rot, rotated in ins_moves:
                new = reduce_ints(word[:pos] + rotated + word[pos:])
                if len(new) <= max_len:
                    children.append((new, ("ins", pos, ridx, sign, rot)))
        for letter in letters:
            new = reduce_ints((letter,) + word + (-letter,))
            if len(new) <= max_len:
                children.append((new, ("conj", letter)))
        for new, move in children:
            if new in ball.parents:
                continue
            if len(ball.parents) >= max_states:
                ball.exhausted = False
                return ball
            ball.parents[new] = (word, move)
            queue.append((new, depth + 1))
    return ball


def verify_factors(
    target: IntWord, factors: list[tuple[IntWord, int, int]], relators: tuple[IntWord, ...]
) -> bool:
    """Independent check: expand the conjugate product and freely reduce."""
    expanded: list[int] = []
    for conj, ridx, sign in factors:
        rel = relators[ridx] if sign == 1 else invert_ints(relators[ridx])
        expanded.extend(conj + rel + invert_ints(conj))
    return reduce_ints(tuple(expanded) + invert_ints(reduce_ints(target))) == ()
