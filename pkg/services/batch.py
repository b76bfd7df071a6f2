import logging
import threading
from concurrent.futures import ThreadPoolExecutor
from typing import Any, Callable, List, Optional

from config.settings import BATCH_WORKERS

logger = logging.getLogger(__name__)


class Job:
    """Procesamiento de una entrada del lote."""

    def __init__(self, source: str):
        self.source: str = source
        self.status: str = "pending"  # pending | running | done | error
        self.error_message: Optional[str] = None
        self.exit_code: int = 0
        self.result: Any = None
        self._logs: List[str] = []
        self._lock = threading.Lock()

    def append_log(self, text: str) -> None:
        if not text:
            return
        with self._lock:
            for line in str(text).splitlines():
                if line.strip():
                    self._logs.append(line)

    def get_logs(self) -> List[str]:
        with self._lock:
            return list(self._logs)


# handler(job) rellena job.result / job.exit_code o lanza una excepción
Handler = Callable[[Job], None]
# None: la excepción no tiene código propio y se relanza
ErrorMapper = Callable[[BaseException], Optional[int]]


class BatchRunner:
    """Ejecuta entradas independientes en hilos y devuelve los trabajos en el orden de entrada."""

    def __init__(self, handler: Handler, error_mapper: ErrorMapper, workers: Optional[int] = None):
        self.handler = handler
        self.error_mapper = error_mapper
        self.workers = max(1, workers or BATCH_WORKERS)

    def _run_one(self, job: Job) -> Job:
        job.status = "running"
        try:
            self.handler(job)
            job.status = "done"
        except Exception as e:
            job.status = "error"
            job.error_message = str(e)
            code = self.error_mapper(e)
            if code is None:
                logger.error("Error inesperado procesando %s: %s", job.source, e)
                raise
            job.exit_code = code
            logger.debug("Entrada %s falló (%s): %s", job.source, type(e).__name__, e)
        return job

    def run(self, sources: List[str]) -> List[Job]:
        jobs = [Job(s) for s in sources]
        if len(jobs) == 1 or self.workers == 1:
            return [self._run_one(j) for j in jobs]
        with ThreadPoolExecutor(max_workers=min(self.workers, len(jobs))) as pool:
            return list(pool.map(self._run_one, jobs))
