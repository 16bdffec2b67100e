import pytest

from vcbent.appendix import (
    AppendixRow,
    load_appendix_rows,
    parse_fixture_lines,
    verify_appendix,
)
from vcbent.mvfunction import MvFunction


@pytest.fixture(scope="module")
def rows():
    return load_appendix_rows()


def test_fixture_shape(rows):
    assert len(rows) == 162
    by_class = {}
    for row in rows:
        by_class.setdefault(row.class_id, []).append(row)
    assert sorted(by_class) == list(range(1, 10))
    for class_id, class_rows in by_class.items():
        assert [r.row for r in class_rows] == list(range(1, 19))
        assert len({r.g for r in class_rows}) == 18


def test_every_row_verifies(rows):
    checks = verify_appendix(rows)
    failed = [c for c in checks if not c.passed]
    assert not failed, [
        (c.row.class_id, c.row.row, c.failures()) for c in failed
    ]


def test_mutated_row_fails_alone(rows):
    mutated = list(rows)
    victim = mutated[4]
    digits = list(victim.g.digit_string())
    digits[0] = str((int(digits[0]) + 1) % 3)
    mutated[4] = AppendixRow(
        victim.class_id,
        victim.row,
        MvFunction.from_digits(3, 2, "".join(digits)),
        victim.alpha,
        victim.beta,
        victim.exponents,
    )
    checks = verify_appendix(mutated)
    failed = [c for c in checks if not c.passed]
    assert len(failed) == 1
    assert failed[0].row.row == victim.row and failed[0].row.class_id == victim.class_id


def test_fixture_parser_rejects_malformed_lines():
    with pytest.raises(ValueError):
        parse_fixture_lines(["1\t2\t000012021\tP12,I"])
    with pytest.raises(ValueError):
        parse_fixture_lines(["1\t2\t000012021\tP12\t000012021"])
    with pytest.raises(ValueError):
        parse_fixture_lines(["1\t2\t000012021\tP12,I\t00001"])


def test_class6_duplicate_labels_verify_under_either_name(rows):
    # two different labels can legally produce the same permuted spectrum;
    # the verifier only demands that the recorded label reproduces the row
    row = next(r for r in rows if r.class_id == 6 and r.row == 3)
    assert (row.alpha, row.beta) == ("P01", "P01")
    swapped = AppendixRow(row.class_id, row.row, row.g, "X", "I", row.exponents)
    checks = verify_appendix([row, swapped])
    assert all(c.passed for c in checks)
