"""
Configuraciones globales de la herramienta de descomposición de matrices enteras
"""

import os
import logging
from pathlib import Path
from typing import Optional
from dotenv import load_dotenv

# Cargar variables de entorno desde .env en la raíz del proyecto, independientemente del cwd
PROJECT_ROOT = Path(__file__).resolve().parent.parent
dotenv_path = PROJECT_ROOT / '.env'
load_dotenv(dotenv_path)


def _flag(name: str, default: str) -> bool:
    return os.getenv(name, default).lower() in ('1', 'true', 'yes', 'y')


# Límites de los oráculos por fuerza bruta (enumeración exponencial)
BRUTE_FORCE_MAX_ROWS = int(os.getenv('DECOMP_BRUTE_FORCE_MAX_ROWS', 12))
BRUTE_FORCE_MAX_COLS = int(os.getenv('DECOMP_BRUTE_FORCE_MAX_COLS', 12))
REDUCIBILITY_MAX_VERTICES = int(os.getenv('DECOMP_REDUCIBILITY_MAX_VERTICES', 20))

# --check solo lanza los oráculos hasta este tamaño (filas y columnas)
CHECK_MAX_DIM = int(os.getenv('DECOMP_CHECK_MAX_DIM', 8))

# Si está activo, un desacuerdo RREF / patrón de ceros aborta la descomposición
STRICT_CROSS_CHECK = _flag('DECOMP_STRICT_CROSS_CHECK', 'false')

# Hilos para el modo batch (varios ficheros de entrada)
BATCH_WORKERS = int(os.getenv('DECOMP_BATCH_WORKERS', 4))

# Configuración de logging
LOG_LEVEL = os.getenv('DECOMP_LOG_LEVEL', 'WARNING').upper()
LOG_DIR = os.getenv('DECOMP_LOG_DIR', 'logs')
LOG_FILE = os.getenv('DECOMP_LOG_FILE', '')
LOG_FORMAT = '%(asctime)s - %(name)s - %(levelname)s - %(message)s'


def setup_logging(level: Optional[str] = None) -> None:
    """
    Configura el logging raíz: stderr siempre, fichero solo si DECOMP_LOG_FILE está definido

    Args:
        level: Nivel a usar en lugar de DECOMP_LOG_LEVEL (p.ej. 'INFO')
    """
    handlers = [logging.StreamHandler()]
    if LOG_FILE:
        if not os.path.exists(LOG_DIR):
            os.makedirs(LOG_DIR)
        handlers.append(logging.FileHandler(os.path.join(LOG_DIR, LOG_FILE)))

    logging.basicConfig(
        level=getattr(logging, (level or LOG_LEVEL), logging.WARNING),
        format=LOG_FORMAT,
        handlers=handlers,
        force=True,
    )
