"""Exact character tables via the Dixon-Schneider method.

Class-sum matrices are split into common eigenspaces over GF(q) with
q = 1 (mod exponent) and q > 2 ceil(sqrt(|G|)); degrees and eigenvalue
multiplicities are lifted to integers (they lie below sqrt(|G|) < q/2) and the
values re-assembled as exact cyclotomics through the discrete Fourier sum over
the power map.  The finished table must pass exact row and column
orthogonality, otherwise the build fails.
"""

from __future__ import annotations

import math

import numpy as np

from .charops import ClassFunction
from .cyclotomic import Cyclotomic, cyclotomic_polynomial, euler_phi, root_of_unity
from .errors import CharprodError, EigensplitStall, LiftInconsistent
from .modular import (
    charpoly_mod,
    find_prime,
    inv_mod,
    matmul_mod,
    nth_root_of_unity,
    nullspace_mod,
    poly_roots_mod,
    power_table,
    solve_columns_mod,
)

DENSE_CLASS_LIMIT = 340  # keeps the class-constant tensor under ~320 MB


class ClassConstants:
    """Class multiplication coefficients a(i,j,k) as a dense integer tensor."""

    def __init__(self, tensor):
        self.a = tensor

    def matrix(self, i):
        """The matrix M_i with (M_i)[j,k] = a(i,j,k); central characters are
        its right eigenvectors."""
        return self.a[i]

    def value(self, i, j, k):
        return int(self.a[i, j, k])


def class_constants(group):
    """a(i,j,k) = #{(x,y) in C_i x C_j : xy = z} for a fixed z in C_k."""
    m = group.num_classes
    if m > DENSE_CLASS_LIMIT:
        raise CharprodError(
            f"{m} conjugacy classes exceed the dense class-constant limit of {DENSE_CLASS_LIMIT}"
        )
    a = np.zeros((m, m, m), dtype=np.int64)
    class_of = group.class_of
    for k in range(m):
        zk = group.classes[k].representative
        for i in range(m):
            ai = a[i, :, k]
            for x in group.classes[i].members:
                y = group.mul(group.inverses[x], zk)
                ai[class_of[y]] += 1
    return ClassConstants(a)


class CharacterTable:
    """The irreducible characters of a group, deterministically indexed:
    the principal character first, the rest by (degree, value key)."""

    def __init__(self, group, irreducibles):
        self.group = group
        self.irreducibles = tuple(irreducibles)
        self.degrees = tuple(int(chi.values[0].as_integer()) for chi in self.irreducibles)
        self.prime_p = group.p_group_prime()
        self._row_lookup = {chi.value_key(): i for i, chi in enumerate(self.irreducibles)}
        self._conj_rows = None

    @property
    def size(self):
        return len(self.irreducibles)

    def index_of(self, f):
        """Row index of an irreducible given as a ClassFunction, else None."""
        return self._row_lookup.get(f.value_key())

    def conjugate_index(self, i):
        """Index of the complex conjugate of irreducible i."""
        if self._conj_rows is None:
            inv = self.group.inverse_class()
            rows = []
            for chi in self.irreducibles:
                key = ClassFunction(self.group, [chi.values[inv[j]] for j in range(len(inv))]).value_key()
                rows.append(self._row_lookup[key])
            self._conj_rows = tuple(rows)
        return self._conj_rows[i]

    def linear_indices(self):
        return tuple(i for i, d in enumerate(self.degrees) if d == 1)

    def coefficient_tensor(self):
        """Integer coefficients of every value at the common order, shape
        (irreducibles, classes, phi(order)).  Values are algebraic integers."""
        order = self.irreducibles[0].values[0].order if self.irreducibles else 1
        phi = euler_phi(order)
        out = np.zeros((self.size, self.group.num_classes, phi), dtype=np.int64)
        for i, chi in enumerate(self.irreducibles):
            for j, v in enumerate(chi.values):
                if v.den != 1:
                    raise LiftInconsistent("table value is not an algebraic integer")
                out[i, j, : len(v.num)] = v.num
        return order, out

    def to_text(self):
        lines = []
        g = self.group
        lines.append("sizes  " + " ".join(str(c.size).rjust(6) for c in g.classes))
        lines.append("orders " + " ".join(str(g.element_order(c.representative)).rjust(6) for c in g.classes))
        for i, chi in enumerate(self.irreducibles):
            row = " ".join(v.to_text().rjust(6) for v in chi.values)
            lines.append(f"X{i:<5} {row}")
        return "\n".join(lines)

    def to_json(self):
        g = self.group
        return {
            "order": g.order,
            "classes": [
                {
                    "index": j,
                    "size": c.size,
                    "representative_order": g.element_order(c.representative),
                    "representative": g.elements[c.representative].to_text(),
                }
                for j, c in enumerate(g.classes)
            ],
            "irreducibles": [
                {"index": i, "degree": self.degrees[i], "values": chi.to_json()}
                for i, chi in enumerate(self.irreducibles)
            ],
        }

    def __repr__(self):
        return f"CharacterTable(order={self.group.order}, irreducibles={self.size})"


def _split_eigenspaces(constants, q):
    """Common eigenspaces of the class matrices over GF(q), split by applying
    the matrices in ascending class index until every space is 1-dimensional."""
    m = constants.a.shape[0]
    spaces = [np.eye(m, dtype=np.int64)]
    for i in range(1, m):
        if all(b.shape[1] == 1 for b in spaces):
            break
        mat = constants.matrix(i) % q
        refined = []
        for basis in spaces:
            k = basis.shape[1]
            if k == 1:
                refined.append(basis)
                continue
            action = solve_columns_mod(basis, matmul_mod(mat, basis, q), q)
            poly = charpoly_mod(action, q)
            for lam in poly_roots_mod(poly, q):
                shifted = (action - lam * np.eye(k, dtype=np.int64)) % q
                kernel = nullspace_mod(shifted, q)
                if kernel.shape[1]:
                    refined.append(matmul_mod(basis, kernel, q))
        spaces = refined
    if any(b.shape[1] != 1 for b in spaces):
        raise EigensplitStall("class matrices left a joint eigenspace unsplit")
    return [b[:, 0] for b in spaces]


def _lift_degree(omega, group, q):
    """chi(1) from the orthogonality normalization; unique below sqrt(|G|)."""
    inv_class = group.inverse_class()
    s = 0
    for j, cls in enumerate(group.classes):
        s += int(omega[j]) * int(omega[inv_class[j]]) * inv_mod(cls.size, q)
    s %= q
    dsq = group.order * inv_mod(s, q) % q
    limit = math.isqrt(group.order)
    hits = [d for d in range(1, limit + 1) if d * d % q == dsq]
    if len(hits) != 1:
        raise LiftInconsistent(f"degree lift ambiguous or missing: {hits}")
    return hits[0]


def _lift_values(omega, degree, group, q, z, exponent):
    """Exact values of one character via the Fourier sum over the power map."""
    inv_sizes = [inv_mod(c.size, q) for c in group.classes]
    values = []
    for j, cls in enumerate(group.classes):
        o = group.element_order(cls.representative)
        if o == 1:
            values.append(Cyclotomic.from_rational(degree).embed(exponent))
            continue
        z_o = pow(z, exponent // o, q)
        powers = power_table(z_o, o, q)
        chi_mod = [
            degree * int(omega[group.power_class(j, t)]) * inv_sizes[group.power_class(j, t)] % q
            for t in range(o)
        ]
        inv_o = inv_mod(o, q)
        coeffs = []
        total = 0
        for k in range(o):
            acc = 0
            for t in range(o):
                acc += chi_mod[t] * powers[(-k * t) % o]
            mk = acc % q * inv_o % q
            if mk > degree:
                raise LiftInconsistent(f"eigenvalue multiplicity {mk} exceeds the degree {degree}")
            coeffs.append(mk)
            total += mk
        if total != degree:
            raise LiftInconsistent("eigenvalue multiplicities do not sum to the degree")
        value = Cyclotomic(o, coeffs)
        values.append(value.embed(exponent))
    return values


def _reduction_matrix(order, width):
    """Rows are x^k mod Phi_order for k < width, ascending k."""
    phi = euler_phi(order)
    poly = cyclotomic_polynomial(order)
    rows = []
    current = [0] * phi
    current[0] = 1
    for k in range(width):
        if k > 0:
            shifted = [0] + current[:-1]
            lead = current[-1]
            if lead:
                for j in range(phi):
                    shifted[j] -= lead * poly[j]
            current = shifted
        rows.append(list(current))
    return np.array(rows, dtype=np.int64)


def _orthogonality_defect(table):
    """Exact residuals of both orthogonality relations; empty dict if clean."""
    group = table.group
    order, tensor = table.coefficient_tensor()
    phi = tensor.shape[2]
    inv = list(group.inverse_class())
    weights = np.array([c.size for c in group.classes], dtype=np.int64)
    conj_tensor = tensor[:, inv, :]
    red = _reduction_matrix(order, 2 * phi - 1)

    weighted = tensor * weights[None, :, None]
    gram = np.einsum("ica,jcb->ijab", weighted, conj_tensor)
    n_irr = tensor.shape[0]
    prod = np.zeros((n_irr, n_irr, 2 * phi - 1), dtype=np.int64)
    for a in range(phi):
        for b in range(phi):
            prod[:, :, a + b] += gram[:, :, a, b]
    reduced = prod.reshape(n_irr * n_irr, -1) @ red
    reduced = reduced.reshape(n_irr, n_irr, phi)
    expected = np.zeros_like(reduced)
    expected[np.arange(n_irr), np.arange(n_irr), 0] = group.order
    defects = {}
    if not np.array_equal(reduced, expected):
        defects["rows"] = int(np.abs(reduced - expected).max())

    m = group.num_classes
    gram2 = np.einsum("ica,idb->cdab", tensor, conj_tensor)
    prod2 = np.zeros((m, m, 2 * phi - 1), dtype=np.int64)
    for a in range(phi):
        for b in range(phi):
            prod2[:, :, a + b] += gram2[:, :, a, b]
    reduced2 = prod2.reshape(m * m, -1) @ red
    reduced2 = reduced2.reshape(m, m, phi)
    expected2 = np.zeros_like(reduced2)
    for c in range(m):
        expected2[c, c, 0] = group.centralizer_order(c)
    if not np.array_equal(reduced2, expected2):
        defects["columns"] = int(np.abs(reduced2 - expected2).max())
    return defects


def verify_orthogonality(table):
    """True iff both orthogonality relations hold exactly."""
    return not _orthogonality_defect(table)


def dixon_table(group, use_cache=True):
    """The exact table of irreducible characters of ``group``."""
    cached = getattr(group, "_character_table", None)
    if use_cache and cached is not None:
        return cached

    m = group.num_classes
    exponent = group.exponent
    if m == 1:
        table = CharacterTable(group, [ClassFunction(group, [1])])
        group._character_table = table
        return table

    q = find_prime(exponent, 2 * math.isqrt(group.order - 1) + 2)
    z = nth_root_of_unity(q, exponent)
    constants = class_constants(group)
    vectors = _split_eigenspaces(constants, q)

    characters = []
    for vec in vectors:
        if vec[0] == 0:
            raise LiftInconsistent("central character vanishes on the identity class")
        omega = vec * inv_mod(int(vec[0]), q) % q
        degree = _lift_degree(omega, group, q)
        values = _lift_values(omega, degree, group, q, z, exponent)
        characters.append(ClassFunction(group, values))

    principal = [chi for chi in characters if all(v == Cyclotomic.one() for v in chi.values)]
    if len(principal) != 1:
        raise LiftInconsistent("principal character missing from the lifted table")
    rest = [chi for chi in characters if chi is not principal[0]]
    rest.sort(key=_row_sort_key)
    table = CharacterTable(group, principal + rest)

    if sum(d * d for d in table.degrees) != group.order:
        raise LiftInconsistent("degree squares do not sum to the group order")
    defect = _orthogonality_defect(table)
    if defect:
        raise LiftInconsistent(f"orthogonality failed exactly: {defect}")
    group._character_table = table
    return table


def _row_sort_key(chi):
    degree = chi.values[0].as_integer()
    return (degree, tuple((v.num, v.den) for v in chi.values))
