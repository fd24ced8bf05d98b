import itertools

import pytest

from rbx.kernel import Matrix, PrimeField, Rationals, Tensor2


@pytest.fixture
def QQ():
    return Rationals()


@pytest.fixture
def F2():
    return PrimeField(2)


@pytest.fixture
def F3():
    return PrimeField(3)


@pytest.fixture
def F5():
    return PrimeField(5)


def all_matrices(field, dim=2):
    p = field.modulus
    return [Matrix(field, dim, dim, [field.of(b) for b in bits])
            for bits in itertools.product(range(p), repeat=dim * dim)]


def all_tensors(field, dim=2):
    p = field.modulus
    return [Tensor2(field, dim, [field.of(b) for b in bits])
            for bits in itertools.product(range(p), repeat=dim * dim)]


def antisymmetric_tensors(field, dim=2):
    return [t for t in all_tensors(field, dim) if t.is_antisymmetric()]
