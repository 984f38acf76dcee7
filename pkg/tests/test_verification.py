import pytest

from latintab.partition_core import Partition
from latintab.verification import CHECKS, OPTIONAL_CHECKS, verify_shape, verify_theorems


def test_trivial_range():
    s = verify_theorems(1)
    assert s.ok and s.checks_run > 0 and not s.skipped


def test_only_2_2_fails_up_to_7_boxes():
    s = verify_theorems(7, checks=CHECKS + OPTIONAL_CHECKS)
    assert {(f.check, f.shape) for f in s.failures} == {("degree-formula", "2,2"), ("cube-criterion", "2,2")}
    assert s.failed_shapes() == ["2,2"]
    assert not s.skipped


def test_entries_in_four_fails_on_5_2_2():
    s = verify_shape((5, 2, 2), checks=("entries-in-four", "triangle"))
    assert {f.check for f in s.failures} == {"entries-in-four"}
    assert len(s.failures) == 48


def test_cap_skips_are_reported():
    s = verify_shape((7,), cap=1000)
    assert s.ok and s.checks_run == 0
    assert s.skipped == [("7", "all checks skipped: component exceeds cap 1000")]


def test_graph_limit_skips_are_reported():
    s = verify_shape((6,), graph_limit=100)
    assert s.ok
    assert len(s.skipped) == 1 and "720 vertices > limit 100" in s.skipped[0][1]


def test_shape_filter_and_jobs():
    one = verify_theorems(6, shapes=lambda p: p == Partition((3, 2, 1)))
    assert one.ok and one.checks_run > 0
    serial = verify_theorems(6)
    parallel = verify_theorems(6, jobs=2)
    assert serial.failures == parallel.failures and serial.checks_run == parallel.checks_run


def test_unknown_check_rejected():
    with pytest.raises(ValueError):
        verify_theorems(3, checks=("nonsense",))
