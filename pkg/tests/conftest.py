"""Shared fixtures: the structure catalog and random element builders."""

import random
from fractions import Fraction

import pytest

from pforge.ratpoly import Poly, parse_poly
from pforge.multivec import Multivector, all_index_tuples
from pforge.forms import Form


def bivector(n, table):
    """Bivector from {(i, j): "coefficient string"}."""
    return Multivector(n, 2, {k: parse_poly(v, n) for k, v in table.items()})


@pytest.fixture
def plane():
    return bivector(2, {(0, 1): "1"})


@pytest.fixture
def so3():
    return bivector(3, {(0, 1): "x2", (1, 2): "x0", (0, 2): "-x1"})


@pytest.fixture
def sl2():
    return bivector(3, {(0, 1): "2*x1", (0, 2): "-2*x2", (1, 2): "x0"})


@pytest.fixture
def non_jacobi():
    # d0^d1 + x0 d2^d0; fails the Jacobi identity
    return bivector(3, {(0, 1): "1", (0, 2): "-x0"})


def random_poly(n, rng, max_degree=2, terms=2, bound=2):
    acc = {}
    for _ in range(terms):
        e = [0] * n
        for _ in range(rng.randint(0, max_degree)):
            e[rng.randrange(n)] += 1
        c = Fraction(rng.randint(-bound, bound))
        acc[tuple(e)] = acc.get(tuple(e), Fraction(0)) + c
    return Poly(n, {e: c for e, c in acc.items() if c})


def random_multivector(n, grade, rng, max_degree=2):
    terms = {}
    for idx in all_index_tuples(n, grade):
        c = random_poly(n, rng, max_degree)
        if not c.is_zero():
            terms[idx] = c
    return Multivector(n, grade, terms)


def random_form(n, grade, rng, max_degree=2):
    terms = {}
    for idx in all_index_tuples(n, grade):
        c = random_poly(n, rng, max_degree)
        if not c.is_zero():
            terms[idx] = c
    return Form(n, grade, terms)


def rng_for(seed):
    return random.Random(seed)
