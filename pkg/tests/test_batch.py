import threading

import pytest

from services.batch import BatchRunner


def _handler(job):
    if job.source.startswith("bad"):
        raise ValueError(f"cannot read {job.source}")
    if job.source.startswith("boom"):
        raise RuntimeError("unexpected")
    job.append_log(f"procesado {job.source}\n\n")
    job.result = job.source.upper()
    job.exit_code = 1 if job.source.endswith("1") else 0


def _mapper(e):
    return 7 if isinstance(e, ValueError) else None


def test_results_keep_input_order_with_threads():
    sources = [f"in{k}" for k in range(12)]
    jobs = BatchRunner(_handler, _mapper, workers=4).run(sources)
    assert [j.source for j in jobs] == sources
    assert [j.result for j in jobs] == [s.upper() for s in sources]
    assert all(j.status == "done" for j in jobs)
    assert jobs[0].get_logs() == ["procesado in0"]


def test_errors_are_mapped_not_raised():
    jobs = BatchRunner(_handler, _mapper, workers=2).run(["ok1", "bad"])
    assert [j.exit_code for j in jobs] == [1, 7]
    assert jobs[1].status == "error"
    assert jobs[1].error_message == "cannot read bad"


def test_duplicate_sources_are_separate_jobs():
    jobs = BatchRunner(_handler, _mapper, workers=2).run(["in0", "bad", "in0"])
    assert len(jobs) == 3
    assert jobs[0] is not jobs[2]
    assert [j.status for j in jobs] == ["done", "error", "done"]


@pytest.mark.parametrize("workers", [1, 3])
def test_unmapped_errors_propagate(workers):
    with pytest.raises(RuntimeError):
        BatchRunner(_handler, _mapper, workers=workers).run(["in0", "boom", "in2"])


def test_handler_runs_on_worker_threads():
    seen = set()

    def handler(job):
        seen.add(threading.current_thread().name)

    BatchRunner(handler, lambda e: 1, workers=3).run(["a", "b", "c", "d"])
    assert seen
