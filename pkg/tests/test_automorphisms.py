from fractions import Fraction

import pytest

from bideriv import (
    DimensionMismatchError,
    Polynomial,
    SquareMatrix,
    Substitution,
    aut_dim1,
    check_automorphism,
    circ,
    compose_check,
    dim1_compose_check,
    induced_map,
    is_orthogonal,
    random_polynomial,
    rational_cosine_sine,
    rational_orthogonal_sample,
    substitute,
)
from conftest import var

ROTATION = SquareMatrix([["3/5", "-4/5"], ["4/5", "3/5"]])


# ----------------------------------------------------------------------
# substitution
# ----------------------------------------------------------------------


def test_substitute_binomial():
    s = Substitution((var(2, 1) + var(2, 2), var(2, 2)))
    got = substitute(var(2, 1) ** 2, s)
    assert got == var(2, 1) ** 2 + 2 * var(2, 1) * var(2, 2) + var(2, 2) ** 2


def test_identity_substitution(rng):
    s = Substitution.identity(3)
    for _ in range(5):
        f = random_polynomial(rng, 3, 4)
        assert substitute(f, s) == f


def test_swap_substitution():
    s = Substitution((var(2, 2), var(2, 1)))
    assert substitute(var(2, 1) * var(2, 2), s) == var(2, 1) * var(2, 2)


def test_substitution_is_multiplicative(rng):
    s = Substitution((var(2, 1) + var(2, 2), var(2, 1) - var(2, 2)))
    for _ in range(10):
        f = random_polynomial(rng, 2, 3)
        g = random_polynomial(rng, 2, 3)
        assert substitute(f * g, s) == substitute(f, s) * substitute(g, s)


def test_substitute_dimension_mismatch():
    with pytest.raises(DimensionMismatchError):
        substitute(var(3, 1), Substitution.identity(2))


# ----------------------------------------------------------------------
# induced linear maps
# ----------------------------------------------------------------------


def test_induced_map_identity_and_permutation():
    assert induced_map(SquareMatrix.identity(2)).images == Substitution.identity(2).images
    perm = SquareMatrix([[0, 1], [1, 0]])
    assert induced_map(perm).images == (var(2, 2), var(2, 1))


def test_induced_map_uses_columns():
    s = induced_map(ROTATION)
    assert s.images[0] == Fraction(3, 5) * var(2, 1) + Fraction(4, 5) * var(2, 2)
    assert s.images[1] == Fraction(-4, 5) * var(2, 1) + Fraction(3, 5) * var(2, 2)


# ----------------------------------------------------------------------
# orthogonality and the automorphism check
# ----------------------------------------------------------------------


def test_is_orthogonal_examples():
    assert is_orthogonal(SquareMatrix.identity(3))
    assert is_orthogonal(SquareMatrix([[1, 0], [0, -1]]))
    assert is_orthogonal(ROTATION)
    assert not is_orthogonal(SquareMatrix([[2, 0], [0, 1]]))


def test_check_automorphism_rotation():
    verdict = check_automorphism(ROTATION)
    assert verdict.ok
    s = induced_map(ROTATION)
    assert circ(s.images[0], s.images[0]) == Polynomial.constant(2, 1)


def test_check_automorphism_negative_witness():
    verdict = check_automorphism(SquareMatrix([[2, 0], [0, 1]]))
    assert not verdict.ok
    assert verdict.witness == (1, 1)


def test_check_matches_orthogonality_on_samples(rng):
    for n in range(1, 5):
        for trial in range(25):
            m = rational_orthogonal_sample(rng.randint(0, 10 ** 6), n)
            assert is_orthogonal(m)
            assert check_automorphism(m, rng_seed=trial).ok
            broken = _perturb(rng, m)
            assert not is_orthogonal(broken)
            assert not check_automorphism(broken, rng_seed=trial).ok


def _perturb(rng, m):
    """Bump one entry until orthogonality is lost."""
    n = m.n
    while True:
        i, j = rng.randrange(n), rng.randrange(n)
        delta = Fraction(rng.randint(1, 5), rng.randint(1, 3))
        rows = [list(row) for row in m.entries]
        rows[i][j] += delta
        candidate = SquareMatrix(rows, m.field)
        if not is_orthogonal(candidate):
            return candidate


def test_grading_preserved_by_orthogonal_substitution(rng):
    s = induced_map(ROTATION)
    for k in range(1, 5):
        f = random_polynomial(rng, 2, k)
        parts = f.homogeneous_components()
        for d, part in parts.items():
            image = substitute(part, s)
            assert image.is_homogeneous(d)


def test_product_preservation_exact(rng):
    for seed in range(5):
        m = rational_orthogonal_sample(seed, 3)
        s = induced_map(m)
        f = random_polynomial(rng, 3, 4)
        g = random_polynomial(rng, 3, 4)
        assert substitute(circ(f, g), s) == circ(substitute(f, s), substitute(g, s))


# ----------------------------------------------------------------------
# group law
# ----------------------------------------------------------------------


def test_compose_check_examples():
    identity = SquareMatrix.identity(2)
    assert compose_check(identity, identity).ok
    flip = SquareMatrix([[1, 0], [0, -1]])
    assert compose_check(ROTATION, flip).ok
    p1 = SquareMatrix([[0, 1], [1, 0]])
    assert compose_check(p1, p1).ok


def test_compose_check_matches_matrix_product(rng):
    for seed in range(15):
        a = rational_orthogonal_sample(2 * seed, 3)
        b = rational_orthogonal_sample(2 * seed + 1, 3)
        assert compose_check(a, b).ok
        lhs = induced_map(b).after(induced_map(a))
        rhs = induced_map(b * a)
        assert lhs.images == rhs.images


def test_compose_check_notes_non_orthogonal_context():
    skew = SquareMatrix([[1, 1], [0, 1]])
    verdict = compose_check(skew, skew)
    assert verdict.ok  # the law holds for arbitrary linear substitutions
    assert "not orthogonal" in verdict.detail


def test_transpose_inverts_orthogonal(rng):
    for seed in range(10):
        m = rational_orthogonal_sample(seed, 4)
        composed = induced_map(m.transpose()).after(induced_map(m))
        assert composed.images == Substitution.identity(4).images


# ----------------------------------------------------------------------
# rational circle points and the sampler
# ----------------------------------------------------------------------


def test_rational_cosine_sine_values():
    assert rational_cosine_sine(Fraction(1, 2)) == (Fraction(3, 5), Fraction(4, 5))
    assert rational_cosine_sine(0) == (1, 0)
    for num in range(-8, 9):
        c, s = rational_cosine_sine(Fraction(num, 3))
        assert c * c + s * s == 1


def test_sampler_always_orthogonal():
    for n in (1, 2, 3, 4):
        for seed in range(20):
            assert is_orthogonal(rational_orthogonal_sample(seed, n))


def test_sampler_deterministic():
    assert rational_orthogonal_sample(42, 3) == rational_orthogonal_sample(42, 3)


# ----------------------------------------------------------------------
# one variable
# ----------------------------------------------------------------------


def test_aut_dim1_accepts_exactly_sign_flips():
    assert aut_dim1(-1, 5).ok
    assert aut_dim1(1, 0).ok
    assert aut_dim1(1, Fraction(7, 3)).ok
    assert not aut_dim1(2, 0).ok
    assert not aut_dim1(0, 1).ok
    assert not aut_dim1(Fraction(1, 2), 3).ok


def test_aut_dim1_witness_detail():
    verdict = aut_dim1(2, 0)
    assert "4" in verdict.detail


def test_dim1_composition_law(rng):
    for _ in range(25):
        l1, l2 = rng.choice((1, -1)), rng.choice((1, -1))
        m1 = Fraction(rng.randint(-9, 9), rng.randint(1, 4))
        m2 = Fraction(rng.randint(-9, 9), rng.randint(1, 4))
        assert dim1_compose_check(l1, m1, l2, m2).ok
