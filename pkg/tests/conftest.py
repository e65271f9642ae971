"""Shared brute-force oracles, all independent of the library's algorithms:
spaces come from powerset filtering, external faces from full scans, and
probabilities from the definition evaluated directly in linear arithmetic.
"""

from itertools import chain, combinations

import pytest

from randcomplex.complexes import SimplicialComplex, all_simplexes, boundary


def powerset(items):
    items = list(items)
    return chain.from_iterable(combinations(items, k) for k in range(len(items) + 1))


def is_downward_closed(face_subset):
    faces = set(face_subset)
    return all(not boundary(f) or all(b in faces for b in boundary(f)) for f in faces)


def brute_space(n, r):
    """Every complex in the space, by filtering all subsets of all simplexes."""
    out = []
    for subset in powerset(all_simplexes(n, r)):
        if is_downward_closed(subset):
            out.append(SimplicialComplex(n, r, subset, validate=False))
    return out


def brute_external_faces(Y):
    """External faces by scanning every ambient simplex of dimension <= r."""
    faces = Y.faces_set
    out = []
    for sig in all_simplexes(Y.n, Y.r):
        if sig in faces:
            continue
        if all(b in faces for b in boundary(sig)):
            out.append(sig)
    return out


def brute_measure(Y, params):
    """The definition, evaluated directly in linear arithmetic."""
    prob = 1.0
    for f in Y.faces_set:
        prob *= params[len(f) - 1]
    for e in brute_external_faces(Y):
        prob *= 1.0 - params[len(e) - 1]
    return prob


@pytest.fixture(scope="session")
def space_3_2():
    return brute_space(3, 2)


@pytest.fixture(scope="session")
def space_4_2():
    return brute_space(4, 2)
