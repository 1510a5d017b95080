import pytest

from dejean.carpi import apply_f, carpi_params, f_image, morphism_table
from dejean.words import BinaryWord


def test_params_27():
    p = carpi_params(27)
    assert (p.m, p.p, p.uniform_length) == (4, 13, 364)
    assert str(p.y) == "01" * 13
    assert str(p.x) == "01"


def test_params_28():
    p = carpi_params(28)
    assert (p.m, p.p, p.uniform_length) == (4, 14, 405)
    assert str(p.y) == "1" + "01" * 13
    assert str(p.x) == "101"
    assert p.describe() == "m=4 p=14 r=405 y=1(01)^13 x=101"


def test_params_33():
    p = carpi_params(33)
    assert (p.m, p.p, p.uniform_length) == (5, 16, 544)
    assert str(p.y) == "01" * 16 and str(p.x) == "01"


def test_params_too_small():
    with pytest.raises(ValueError, match="too small"):
        carpi_params(8)
    assert carpi_params(9).m == 1


@pytest.mark.parametrize("n", range(9, 60))
def test_y_and_x_shape(n):
    p = carpi_params(n)
    y, x = str(p.y), str(p.x)
    assert len(y) == n - 1 and y.endswith("1")
    assert all(a != b for a, b in zip(y, y[1:]))
    assert y.endswith(x) and len(x) == n - 1 - 6 * p.m
    assert str(BinaryWord((0, 1) * n)).endswith(y)


def test_images_27():
    p = carpi_params(27)
    head = "01" * 13 * 13 + "01"
    assert str(f_image(1, p)) == head + "101" * 8
    assert str(f_image(4, p)) == head + "010" + "101" * 7
    assert str(f_image(2, p)) == head + "101" * 4 + "010" + "101" * 3


@pytest.mark.parametrize("n", range(27, 34))
def test_uniform_with_common_prefix(n):
    p = carpi_params(n)
    images = [str(f_image(a, p)) for a in range(1, p.m + 1)]
    head = str(p.y) * p.p + str(p.x)
    assert len(head) == p.uniform_length - 6 * p.m
    assert {len(i) for i in images} == {(p.p + 1) * (n - 1)}
    assert all(i.startswith(head) for i in images)
    assert len(set(images)) == p.m


def test_letter_out_of_range():
    p = carpi_params(27)
    with pytest.raises(ValueError):
        f_image(5, p)
    with pytest.raises(ValueError):
        f_image(0, p)
    with pytest.raises(ValueError):
        apply_f((1, 5), p)


def test_apply_f():
    p = carpi_params(27)
    assert len(apply_f((), p)) == 0
    assert apply_f((1,), p) == f_image(1, p)
    w = apply_f("123", p)
    assert len(w) == 1092
    assert w == f_image(1, p) + f_image(2, p) + f_image(3, p)


def test_table_is_cached():
    assert morphism_table(28) is morphism_table(28)
