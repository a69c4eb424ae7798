"""Unit tests for partitioned evaluation."""

import pytest
from kacv.utils.parallel import partition_range, run_partitioned


def _sum_indices(payload, start, stop):
    return sum(payload * i for i in range(start, stop))


class TestPartitionRange:
    """Test cases for partition_range."""

    def test_balanced_slices(self):
        """Test that earlier slices take the remainder."""
        assert partition_range(10, 3) == [(0, 4), (4, 7), (7, 10)]

    def test_more_parts_than_items(self):
        """Test that the slice count is capped by the total."""
        assert partition_range(2, 5) == [(0, 1), (1, 2)]
        assert partition_range(0, 3) == [(0, 0)]

    def test_invalid_arguments(self):
        """Test validation of parts and total."""
        with pytest.raises(ValueError):
            partition_range(10, 0)
        with pytest.raises(ValueError):
            partition_range(-1, 2)


class TestRunPartitioned:
    """Test cases for run_partitioned."""

    def test_inline(self):
        """Test a single-worker run."""
        assert run_partitioned(_sum_indices, 2, 10, workers=1) == 90

    def test_workers_do_not_change_result(self):
        """Test that the process pool gives the same sum."""
        assert run_partitioned(_sum_indices, 3, 100, workers=3) == \
            run_partitioned(_sum_indices, 3, 100, workers=1)

    def test_empty_range(self):
        """Test that nothing is evaluated for total = 0."""
        assert run_partitioned(_sum_indices, 1, 0, workers=2) == 0


if __name__ == '__main__':
    pytest.main([__file__])
