"""Highest weights, Young diagrams and the frame complementarity rules.

Algebra highest weights are ascending tuples (lambda_1 <= ... <= lambda_n)
of Fractions; only the first entry of an even orthogonal weight may be
negative.  Group diagrams (for O(d) and Pin(2k)) are partitions stored as
non-increasing tuples of row lengths.

Each duality decomposes the Fock space of k kinds over d single-fermion
states into pairs of modules whose diagrams tile a (d/2) x k frame: the
rows of one diagram horizontally, the rows of the other vertically in the
complementary region.  enumerate_pairs produces every pair together with
exact Weyl dimensions and the expected joint highest weights.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .params import DomainError, ORTHOGONAL, SYMPLECTIC

SP_SP = "sp-sp"
O_O = "o-o"
GROUP_O_O = "O-o"
O_PIN = "o-Pin"

DUALITIES = (SP_SP, O_O, GROUP_O_O, O_PIN)


# -- partitions -------------------------------------------------------

def conjugate(partition):
    """Transpose of a partition given as a non-increasing tuple."""
    if not partition:
        return ()
    cols = []
    t = 1
    while True:
        depth = sum(1 for row in partition if row >= t)
        if depth == 0:
            return tuple(cols)
        cols.append(depth)
        t += 1


def associate(partition, n_rows):
    """Partner diagram: first-column depths summing to n_rows, rest equal."""
    depth = len(partition)
    if depth > n_rows:
        raise DomainError("diagram deeper than the row bound")
    cols = list(conjugate(partition))
    second = cols[1] if len(cols) > 1 else 0
    new_first = n_rows - depth
    if new_first < second:
        raise DomainError("no associated diagram within the row bound")
    if not cols:
        cols = [new_first]
    else:
        cols[0] = new_first
    return conjugate(tuple(cols))


def column_rule_holds(partition, n_rows):
    """No sum of two different column depths may exceed n_rows."""
    cols = conjugate(partition)
    if not cols:
        return True
    if len(cols) == 1:
        return cols[0] <= n_rows
    return cols[0] + cols[1] <= n_rows


def ascending_weight(partition, n_pairs):
    """Pad a partition to n_pairs rows and read it bottom-up."""
    rows = list(partition) + [0] * (n_pairs - len(partition))
    if len(rows) > n_pairs:
        raise DomainError("partition deeper than the weight length")
    return tuple(Fraction(r) for r in reversed(rows))


def flip_first(weight):
    """Replace the first (smallest) entry by its negative."""
    return (-weight[0],) + tuple(weight[1:])


# -- Weyl dimension formulas ------------------------------------------

def _product_dim(ls, ms, with_linear):
    num = Fraction(1)
    n = len(ls)
    if with_linear:
        for i in range(n):
            num *= Fraction(ls[i], 1) / ms[i]
    for i in range(n):
        for j in range(i + 1, n):
            num *= Fraction(ls[i] * ls[i] - ls[j] * ls[j],
                            ms[i] * ms[i] - ms[j] * ms[j])
    if num.denominator != 1 or num <= 0:
        raise DomainError(f"non-positive or fractional dimension {num}")
    return int(num)


def weyl_dimension(family, n_dim, weight):
    """Dimension of the irreducible module with the given ascending weight.

    family is "orthogonal" or "symplectic"; n_dim the defining dimension.
    """
    rank = n_dim // 2
    weight = tuple(Fraction(x) for x in weight)
    if len(weight) != rank:
        raise DomainError("weight length does not match the rank")
    if any(weight[i] > weight[i + 1] for i in range(rank - 1)):
        raise DomainError("weight entries must ascend")
    mu = tuple(reversed(weight))
    if family == SYMPLECTIC:
        if n_dim % 2:
            raise DomainError("symplectic algebras have even dimension")
        ls = [2 * (mu[i] + rank - i) for i in range(rank)]
        ms = [2 * (rank - i) for i in range(rank)]
        return _product_dim(ls, ms, with_linear=True)
    if family != ORTHOGONAL:
        raise DomainError(f"unknown family {family!r}")
    if n_dim == 1:
        return 1
    if n_dim == 2:
        return 1
    if n_dim % 2:
        # scale by 2 to keep the half-integer shifts integral
        ls = [2 * mu[i] + 2 * (rank - i) - 1 for i in range(rank)]
        ms = [2 * (rank - i) - 1 for i in range(rank)]
        return _product_dim(ls, ms, with_linear=True)
    ls = [2 * (mu[i] + rank - 1 - i) for i in range(rank)]
    ms = [2 * (rank - 1 - i) for i in range(rank)]
    return _product_dim(ls, ms, with_linear=False)


# -- frame pairs ------------------------------------------------------

@dataclass(frozen=True)
class FramePair:
    """One term of a duality decomposition.

    d_weights and k_weights list the ascending highest weights of the
    irreducible constituents on each side (two entries when the module
    splits).  The expected joint highest weights are all combinations of
    one entry from each list, every combination with multiplicity one.
    """
    duality: str
    d: int
    k: int
    d_label: tuple
    k_label: tuple
    d_weights: tuple
    k_weights: tuple
    dim_d: int
    dim_k: int

    def joint_weights(self):
        return [(dw, kw) for dw in self.d_weights for kw in self.k_weights]

    def to_json(self):
        def fmt(seq):
            return [str(x) for x in seq]
        return {
            "duality": self.duality,
            "dLabel": fmt(self.d_label),
            "kLabel": fmt(self.k_label),
            "dWeights": [fmt(w) for w in self.d_weights],
            "kWeights": [fmt(w) for w in self.k_weights],
            "dimD": self.dim_d,
            "dimK": self.dim_k,
        }


def _lambda_partitions(omega, k):
    """All partitions with at most omega rows of length at most k."""
    out = []

    def rec(prefix, row_max, rows_left):
        out.append(tuple(prefix))
        if rows_left == 0:
            return
        for r in range(row_max, 0, -1):
            rec(prefix + [r], r, rows_left - 1)

    rec([], k, omega)
    return out


def _complement_weights(d, partition, k):
    """Vertical-side rows w_tau = d/2 - depth of column tau, tau = 1..k."""
    cols = conjugate(partition)
    half = Fraction(d, 2)
    w = []
    for tau in range(1, k + 1):
        depth = cols[tau - 1] if tau <= len(cols) else 0
        w.append(half - depth)
    return tuple(w)


def enumerate_sp_sp(d, k):
    pairs = []
    for lam in _lambda_partitions(d // 2, k):
        dw = ascending_weight(lam, d // 2)
        kw = _complement_weights(d, lam, k)
        pairs.append(FramePair(
            SP_SP, d, k, lam, tuple(int(x) for x in kw),
            (dw,), (kw,),
            weyl_dimension(SYMPLECTIC, d, dw),
            weyl_dimension(SYMPLECTIC, 2 * k, kw)))
    return pairs


def enumerate_o_o(d, k):
    pairs = []
    omega = d // 2
    for lam in _lambda_partitions(omega, k):
        dw = ascending_weight(lam, omega)
        kw = _complement_weights(d, lam, k)
        d_weights = (dw,)
        k_weights = (kw,)
        if d % 2 == 0 and dw and dw[0] > 0:
            d_weights = (dw, flip_first(dw))
        elif kw and kw[0] > 0:
            k_weights = (kw, flip_first(kw))
        dim_d = sum(weyl_dimension(ORTHOGONAL, d, w) for w in d_weights)
        dim_k = sum(weyl_dimension(ORTHOGONAL, 2 * k, w) for w in k_weights)
        pairs.append(FramePair(
            O_O, d, k, lam, kw, d_weights, k_weights, dim_d, dim_k))
    return pairs


def group_module_weights(partition, n_rows):
    """Irreducible constituents of a group diagram restricted to the algebra.

    Returns the list of ascending algebra weights: one entry when the
    restriction stays irreducible, two (differing in the sign of the first
    entry) when the diagram has exactly n_rows/2 rows.
    """
    rank = n_rows // 2
    depth = len(partition)
    if not column_rule_holds(partition, n_rows):
        raise DomainError("column depths violate the group diagram rule")
    if 2 * depth < n_rows:
        return [ascending_weight(partition, rank)]
    if 2 * depth > n_rows:
        return [ascending_weight(associate(partition, n_rows), rank)]
    w = ascending_weight(partition, rank)
    return [w, flip_first(w)]


def enumerate_group_o_o(d, k):
    """O(d) diagrams versus o(2k) highest weights."""
    pairs = []
    seen = set()
    for lam in _lambda_partitions(d, k):
        if not column_rule_holds(lam, d):
            continue
        if lam in seen:
            continue
        seen.add(lam)
        d_weights = tuple(group_module_weights(lam, d))
        kw = _complement_weights(d, lam, k)
        dim_d = sum(weyl_dimension(ORTHOGONAL, d, w) for w in d_weights)
        dim_k = weyl_dimension(ORTHOGONAL, 2 * k, kw)
        pairs.append(FramePair(
            GROUP_O_O, d, k, lam, kw, d_weights, (kw,), dim_d, dim_k))
    return pairs


def _pin_diagrams(d, k):
    """Pin(2k) diagrams tiling the frame: half-integral rows for odd d."""
    if d % 2:
        # exactly k rows, half-integral lengths in [1/2, d/2]
        half = Fraction(1, 2)
        out = []

        def rec(prefix, row_max):
            if len(prefix) == k:
                out.append(tuple(prefix))
                return
            r = row_max
            while r >= half:
                rec(prefix + [r], r)
                r -= 1
        rec([], Fraction(d, 2))
        return out
    # integral lengths <= d/2, at most 2k rows, column rule in 2k
    return [tuple(Fraction(r) for r in lam)
            for lam in _lambda_partitions(2 * k, d // 2)
            if column_rule_holds(lam, 2 * k)]


def enumerate_o_pin(d, k):
    """o(d) highest weights versus Pin(2k) diagrams."""
    omega = d // 2
    pairs = []
    for w in _pin_diagrams(d, k):
        # d-side weight: lambda_p = k - (depth of row level p in w), read
        # off the complementary region of the frame; ascending in p
        dw = tuple(Fraction(k - sum(1 for row in w if row >= p))
                   for p in range(1, omega + 1))
        if d % 2:
            k_weights = [ascending_weight(w, k), flip_first(ascending_weight(w, k))]
        else:
            k_weights = group_module_weights(tuple(int(r) for r in w), 2 * k)
        dim_d = weyl_dimension(ORTHOGONAL, d, dw)
        dim_k = sum(weyl_dimension(ORTHOGONAL, 2 * k, x) for x in k_weights)
        pairs.append(FramePair(
            O_PIN, d, k, dw, w, (dw,), tuple(k_weights), dim_d, dim_k))
    return pairs


def enumerate_pairs(duality, d, k):
    if duality == SP_SP:
        if d % 2:
            raise DomainError("the symplectic duality requires even d")
        return enumerate_sp_sp(d, k)
    if duality == O_O:
        return enumerate_o_o(d, k)
    if duality == GROUP_O_O:
        return enumerate_group_o_o(d, k)
    if duality == O_PIN:
        return enumerate_o_pin(d, k)
    raise DomainError(f"unknown duality {duality!r}")


def dimension_sum(pairs):
    return sum(p.dim_d * p.dim_k for p in pairs)
