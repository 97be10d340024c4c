import math
from fractions import Fraction

import pytest

from equivext.characters import (
    ClassFunction,
    char_rho,
    char_wedge,
    invariant_dim,
    power_cycle_type,
)
from equivext.spaces import SpaceDescriptor, invariant_basis
from equivext.symgroup import conjugacy_classes


def test_power_cycle_type():
    assert power_cycle_type((3,), 2) == (3,)
    assert power_cycle_type((3,), 3) == (1, 1, 1)
    assert power_cycle_type((4, 2), 2) == (2, 2, 1, 1)
    assert power_cycle_type((6,), 4) == (3, 3)


def test_standard_character_values_n2():
    # class order: (3), (2,1), (1,1,1)
    assert char_rho(2).values == (Fraction(-1), Fraction(0), Fraction(2))


def test_wedge_character_trivial_degrees():
    rho = char_rho(3)
    assert char_wedge(0, rho).values == tuple(Fraction(1) for _ in rho.values)
    assert char_wedge(1, rho) == rho


def test_wedge_square_average_is_one_n2():
    # degree-2 invariants of the doubled standard character
    base = char_rho(2).scaled(2)
    wedge2 = char_wedge(2, base)
    classes = conjugacy_classes(2)
    total = sum(c.class_size * v for c, v in zip(classes, wedge2.values))
    assert total / math.factorial(3) == 1


@pytest.mark.parametrize("n", [2, 3, 4])
def test_wedge_character_dimension_at_identity(n):
    base = char_rho(n).scaled(2)
    for k in range(2 * n + 1):
        wedge = char_wedge(k, base)
        assert wedge.values[-1] == math.comb(2 * n, k)


def test_invariant_dims_match_published_entries():
    assert invariant_dim(SpaceDescriptor(3, 1, 0, 1)) == 2
    assert invariant_dim(SpaceDescriptor(3, 2, 1, 1)) == 6


def test_negative_k_rejected():
    with pytest.raises(ValueError):
        char_wedge(-1, char_rho(2))


def test_class_function_length_checked():
    with pytest.raises(ValueError):
        ClassFunction(2, (Fraction(1),))


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_oracle_matches_explicit_kernel_on_battery_spaces(n):
    descriptors = [
        SpaceDescriptor(n, 0, 0, 0),
        SpaceDescriptor(n, 1, 0, 1),
        SpaceDescriptor(n, 2, 0, 0),
        SpaceDescriptor(n, 3, 0, 1),
        SpaceDescriptor(n, 1, 1, 0),
        SpaceDescriptor(n, 2, 1, 1),
        SpaceDescriptor(n, 1, 1, 1),
        SpaceDescriptor(n, 2, 0, 1),
    ]
    for s in descriptors:
        assert invariant_dim(s) == invariant_basis(s).dim


def test_oracle_scales_to_large_groups():
    # class averaging stays exact and integral far past the kernel engine
    dims = [invariant_dim(SpaceDescriptor(8, k, 1, 1)) for k in range(17)]
    assert dims == list(reversed(dims))
    assert dims[0] == 1 and dims[1] == 2
