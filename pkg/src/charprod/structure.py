"""Normal-subgroup lattice, index-p normals, chief factors and quotient maps.

Every normal subgroup is an intersection of kernels of irreducible characters,
so the lattice is computed from the table's kernels and closed under pairwise
intersection.  Members are unions of conjugacy classes and are handled as
frozen sets of class indices.
"""

from __future__ import annotations

from .charops import ClassFunction
from .errors import NotAPGroup, NotNormal
from .perm import Permutation, Subgroup, group_closure


class NormalLattice:
    """All normal subgroups, sorted by order then element set."""

    def __init__(self, group, members, class_sets):
        self.group = group
        self.members = tuple(members)
        self.class_sets = tuple(class_sets)
        self._position = {cs: i for i, cs in enumerate(self.class_sets)}

    def __len__(self):
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def index_of(self, class_set):
        return self._position.get(frozenset(class_set))

    def member_containing(self, class_set):
        """Smallest member containing the given classes: the normal closure of
        a union of conjugacy classes."""
        class_set = frozenset(class_set)
        for member, cs in zip(self.members, self.class_sets):
            if class_set <= cs:
                return member
        raise NotNormal("no lattice member contains the classes (engine bug)")

    def to_json(self):
        out = []
        for i, member in enumerate(self.members):
            gens = [self.group.elements[g].to_text() for g in member.generators()]
            parents = [
                j
                for j, cs in enumerate(self.class_sets)
                if j != i and self.class_sets[i] < cs
            ]
            out.append(
                {
                    "order": member.order,
                    "index": self.group.order // member.order,
                    "generator_cycles": gens,
                    "is_in": parents,
                }
            )
        return out


def normal_lattice(group, table):
    """Kernels of the irreducibles, closed under pairwise intersection, plus G."""
    kernels = set()
    for chi in table.irreducibles:
        top = chi.values[0]
        kernels.add(frozenset(j for j, v in enumerate(chi.values) if v == top))
    found = set(kernels)
    found.add(frozenset(range(group.num_classes)))
    frontier = list(found)
    while frontier:
        fresh = []
        for a in frontier:
            for b in list(found):
                c = a & b
                if c not in found:
                    found.add(c)
                    fresh.append(c)
        frontier = fresh
    members = []
    for cs in found:
        elems = []
        for j in cs:
            elems.extend(group.classes[j].members)
        members.append((Subgroup(group, elems), cs))
    members.sort(key=lambda pair: (pair[0].order, pair[0].element_indices))
    return NormalLattice(group, [m for m, _ in members], [cs for _, cs in members])


def normals_of_index(lattice, p):
    """Lattice members of index p."""
    order = lattice.group.order
    return [m for m in lattice.members if order // m.order == p and m.order * p == order]


def chief_factor_above(lattice, z):
    """All normal Y with Z < Y and |Y : Z| = p; chief factors of a p-group."""
    p = lattice.group.p_group_prime()
    if p is None:
        raise NotAPGroup("chief factors are only computed for p-groups")
    if not z.is_normal:
        raise NotNormal("Z must be normal")
    out = []
    for member in lattice.members:
        if member.order == z.order * p and z.element_set < member.element_set:
            out.append(member)
    return out


class QuotientMap:
    """G -> G/N realized as the permutation action on the cosets of N."""

    def __init__(self, source, quotient, projection, section, class_map):
        self.source = source
        self.quotient = quotient
        self.projection = projection
        self.section = section
        self.class_map = class_map

    def inflate(self, f):
        """Pull a class function of the quotient back to the source."""
        if f.group is not self.quotient:
            raise ValueError("class function does not live on the quotient")
        return ClassFunction(self.source, [f.values[self.class_map[j]] for j in range(self.source.num_classes)])

    def preimage_indices(self, quotient_indices):
        """Source elements mapping into a set of quotient element indices."""
        wanted = set(quotient_indices)
        return [i for i, q in enumerate(self.projection) if q in wanted]

    def __repr__(self):
        return f"QuotientMap(|G|={self.source.order} -> |G/N|={self.quotient.order})"


def quotient(group, normal):
    """Quotient by a normal subgroup via the left-coset permutation action."""
    if not normal.is_normal:
        raise NotNormal("quotient requires a normal subgroup")
    n = group.order
    coset_of = [-1] * n
    reps = []
    for i in range(n):
        if coset_of[i] >= 0:
            continue
        label = len(reps)
        reps.append(i)
        for x in normal.element_indices:
            coset_of[group.mul(i, x)] = label
    degree = len(reps)

    def action(g_index):
        return Permutation(coset_of[group.mul(g_index, reps[c])] for c in range(degree))

    gen_perms = [action(group.element_index(g)) for g in group.generators]
    quot = group_closure(gen_perms, cap=degree)
    projection = tuple(quot.element_index(action(x)) for x in range(n))
    section = [-1] * quot.order
    for x in range(n):
        q = projection[x]
        if section[q] < 0:
            section[q] = x
    class_map = tuple(
        quot.class_of[projection[cls.representative]] for cls in group.classes
    )
    return QuotientMap(group, quot, projection, tuple(section), class_map)
