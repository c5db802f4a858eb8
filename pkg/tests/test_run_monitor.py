# -*- coding: utf-8 -*-

from app.core.run_monitor import RunMonitor


def test_track_records_entries():
    monitor = RunMonitor()
    with monitor.track("first"):
        pass
    with monitor.track("second"):
        sum(range(1000))
    summary = monitor.get_summary()
    assert summary['count'] == 2
    assert summary['slowest'] in ("first", "second")
    assert summary['max_memory'] > 0


def test_history_is_bounded():
    monitor = RunMonitor(history_size=3)
    for k in range(5):
        monitor.record(f"c{k}", 0.1 * k, 10.0)
    assert monitor.names == ["c2", "c3", "c4"]
    assert monitor.get_summary()['slowest'] == "c4"


def test_empty_summary():
    assert RunMonitor().get_summary()['count'] == 0
