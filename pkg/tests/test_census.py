import pytest

from tropical_patchwork.census import (CensusBoundViolation, CensusRow, _check_bounds,
                                       betti_histogram, csv_header, format_summary,
                                       row_to_csv, run_census)


def _row(b, chi, unimodular=True):
    return CensusRow(0, 0, 1, 2, True, unimodular, (20, 60, 64, 27), b, chi, 5)


def test_bound_checks_abort_on_violation():
    _check_bounds(4, 3, _row((1, 7, 1), -5))
    with pytest.raises(CensusBoundViolation):
        _check_bounds(4, 3, _row((1, 9, 1), -7, unimodular=False))  # b1 > 7
    with pytest.raises(CensusBoundViolation):
        _check_bounds(4, 3, _row((2, 9, 2), -5))  # unimodular b0 > 1
    with pytest.raises(CensusBoundViolation):
        _check_bounds(4, 3, _row((1, 5, 1), -3))  # unimodular chi != -5
    # curve censuses carry no surface bounds
    _check_bounds(3, 3, _row((4, 4), 0, unimodular=False))


def test_row_rendering_matches_header():
    header = csv_header(4)
    row = row_to_csv(_row((1, 7, 1), -5))
    assert len(header.split(",")) == len(row.split(","))
    assert row == "0,0,1,2,true,true,20,60,64,27,1,7,1,-5,5"


def test_histogram_orders_by_frequency():
    rows = [_row((1, 7, 1), -5)] * 3 + [_row((1, 5, 1), -3, unimodular=False)]
    hist = betti_histogram(rows)
    assert hist[0][0] == (1, 7, 1) and hist[0][1] == 3
    assert abs(hist[0][2] - 75.0) < 1e-9
    summary = format_summary(rows, 0, 4, 3)
    assert "(1,7,1)" in summary and "75.00%" in summary


def test_skipped_triangulations_are_not_fatal():
    # lambda 0 at this size never produces a full triangulation
    rows, skipped = run_census(4, 3, triangulations=1, signs=2, seed=3,
                               lam=0, workers=1)
    assert rows == []
    assert skipped == 1


def test_single_row_census():
    rows, skipped = run_census(4, 3, triangulations=1, signs=1, seed=5, workers=1)
    assert len(rows) == 1 and skipped == 0
    assert (rows[0].tri_index, rows[0].sign_index) == (0, 0)


def test_threads_env_override(monkeypatch):
    from tropical_patchwork.census import default_workers
    monkeypatch.setenv("PATCHWORK_THREADS", "3")
    assert default_workers() == 3
    monkeypatch.delenv("PATCHWORK_THREADS")
    assert default_workers() >= 1


def test_worker_pool_matches_serial():
    serial, _ = run_census(3, 2, triangulations=4, signs=3, seed=11, workers=1)
    pooled, _ = run_census(3, 2, triangulations=4, signs=3, seed=11, workers=2)
    strip = lambda rows: [(r.tri_index, r.sign_index, r.tri_seed, r.sign_seed,
                           r.full, r.unimodular, r.f, r.b, r.chi) for r in rows]
    assert strip(serial) == strip(pooled)
    assert [r.tri_index for r in serial] == sorted(r.tri_index for r in serial)
