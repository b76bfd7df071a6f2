"""
Lectura de matrices (texto plano o JSON estructurado) y serialización de informes.

Formato de texto plano:
    # comentario
    m n
    a11 a12 ... a1n
    ...
Formato estructurado: {"rows": m, "cols": n, "entries": [[...], ...]} con enteros o
cadenas decimales. En los informes estructurados todos los enteros se escriben como
cadenas decimales para no perder precisión.
"""
from __future__ import annotations

import json
import re
import sys
from dataclasses import dataclass
from typing import Any, Dict, List, Optional, Sequence, Union

import pandas as pd

from services.connectivity import ComponentPartition
from services.decomposer import Decomposition
from services.hermite import HnfResult
from utils.errors import MatrixError, MatrixParseError
from utils.matrix import IntMatrix, Permutation, RatMatrix

_INT_TOKEN = re.compile(r'^[+-]?\d+$')

PLAIN_TEXT = 'plain-text'
STRUCTURED = 'structured'


@dataclass(frozen=True)
class MatrixDocument:
    source: str
    matrix: IntMatrix
    format: str


###########################################
# LECTURA
###########################################

def _parse_int(token: str, line: int, column: int) -> int:
    if not _INT_TOKEN.match(token):
        raise MatrixParseError(f"invalid integer token {token!r}", line, column, token)
    return int(token)


def _tokens_with_columns(text: str) -> List[tuple]:
    return [(m.group(0), m.start() + 1) for m in re.finditer(r'\S+', text)]


def parse_plain_text(text: str) -> IntMatrix:
    """
    Parsea el formato de texto plano

    Raises:
        MatrixParseError: con línea y columna (1-based) del token problemático
    """
    header = None
    rows: List[List[int]] = []
    last_line = 0
    for lineno, raw in enumerate(text.splitlines(), 1):
        last_line = lineno
        stripped = raw.strip()
        if not stripped or stripped.startswith('#'):
            continue
        tokens = _tokens_with_columns(raw)
        if header is None:
            if len(tokens) != 2:
                raise MatrixParseError("header must be 'm n'", lineno, tokens[0][1], stripped)
            m, n = (_parse_int(tok, lineno, col) for tok, col in tokens)
            if m < 1 or n < 1:
                raise MatrixParseError("dimensions must be positive", lineno, tokens[0][1], stripped)
            header = (m, n)
            continue
        m, n = header
        if len(rows) == m:
            raise MatrixParseError(f"unexpected extra row (header declares {m})", lineno, tokens[0][1], tokens[0][0])
        if len(tokens) != n:
            col = tokens[n][1] if len(tokens) > n else len(raw) + 1
            raise MatrixParseError(f"expected {n} entries, found {len(tokens)}", lineno, col,
                                   tokens[n][0] if len(tokens) > n else "")
        rows.append([_parse_int(tok, lineno, col) for tok, col in tokens])

    if header is None:
        raise MatrixParseError("missing 'm n' header", max(last_line, 1), 1)
    if len(rows) != header[0]:
        raise MatrixParseError(f"expected {header[0]} rows, found {len(rows)}", last_line + 1, 1)
    return IntMatrix(rows)


def _declared_size(doc: Dict[str, Any], key: str, default: int) -> int:
    value = doc.get(key, default)
    if isinstance(value, bool) or not isinstance(value, (int, str)):
        raise MatrixParseError(f"'{key}' must be an integer", 1, 1, str(value))
    try:
        return int(value)
    except ValueError:
        raise MatrixParseError(f"'{key}' must be an integer", 1, 1, str(value)) from None


def parse_structured(text: str) -> IntMatrix:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise MatrixParseError(e.msg, e.lineno, e.colno) from e
    if not isinstance(doc, dict) or 'entries' not in doc:
        raise MatrixParseError("structured matrix needs an 'entries' field", 1, 1)
    entries = doc['entries']
    if not isinstance(entries, list) or not entries or not all(isinstance(r, list) for r in entries):
        raise MatrixParseError("'entries' must be a nonempty list of rows", 1, 1)

    rows: List[List[int]] = []
    for i, r in enumerate(entries, 1):
        row = []
        for j, x in enumerate(r, 1):
            if isinstance(x, bool) or not isinstance(x, (int, str)):
                raise MatrixParseError(f"entry ({i},{j}) is not an integer", i, j, str(x))
            row.append(_parse_int(str(x).strip(), i, j))
        rows.append(row)

    m = _declared_size(doc, 'rows', len(rows))
    n = _declared_size(doc, 'cols', len(rows[0]))
    if len(rows) != m or any(len(r) != n for r in rows):
        raise MatrixParseError(f"entries do not match declared {m}x{n}", 1, 1)
    return IntMatrix(rows)


def parse_document(text: str, source: str = '<string>') -> MatrixDocument:
    """Detecta el formato: '{' como primer carácter no blanco indica JSON estructurado."""
    if text.lstrip().startswith('{'):
        return MatrixDocument(source, parse_structured(text), STRUCTURED)
    return MatrixDocument(source, parse_plain_text(text), PLAIN_TEXT)


def load_document(path: str) -> MatrixDocument:
    """
    Lee un fichero de matriz ('-' para la entrada estándar)

    Raises:
        OSError: error de E/S
        MatrixParseError: formato inválido
    """
    try:
        if path == '-':
            return parse_document(sys.stdin.read(), '<stdin>')
        with open(path, 'r', encoding='utf-8') as fh:
            return parse_document(fh.read(), path)
    except UnicodeDecodeError as e:
        raise MatrixParseError(f"input is not valid UTF-8 (byte offset {e.start})") from e


###########################################
# SERIALIZACIÓN
###########################################

def matrix_to_json(m: Union[IntMatrix, RatMatrix]) -> List[List[str]]:
    return [[str(x) for x in r] for r in m]


def matrix_from_json(rows: Sequence[Sequence[Any]]) -> IntMatrix:
    return IntMatrix([[int(x) for x in r] for r in rows])


def render_matrix(m: Union[IntMatrix, RatMatrix]) -> str:
    """Tabla de texto con índices 1-based en filas y columnas."""
    df = pd.DataFrame(
        [[str(x) for x in r] for r in m],
        index=range(1, m.rows + 1),
        columns=range(1, m.cols + 1),
    )
    return df.to_string()


def hnf_to_dict(res: HnfResult, source: str) -> Dict[str, Any]:
    return {
        'source': source,
        'rank': str(res.rank),
        'pivot_cols': [str(c) for c in res.pivot_cols],
        'H': matrix_to_json(res.h),
        'P': matrix_to_json(res.p),
        'P_inverse': matrix_to_json(res.p_inverse),
    }


def decomposition_to_dict(d: Decomposition, source: str,
                          checks: Optional[Dict[str, str]] = None) -> Dict[str, Any]:
    return {
        'source': source,
        'decomposable': d.decomposable,
        'rank': str(d.rank),
        'pivot_cols': [str(c) for c in d.pivot_cols],
        'P': matrix_to_json(d.p),
        'P_inverse': matrix_to_json(d.p_inverse) if d.p_inverse is not None else None,
        'Q_vector': [str(v) for v in d.q.mapping],
        'blocks': [matrix_to_json(b) for b in d.blocks],
        'row_partition': [[str(i) for i in r] for r in d.row_partition],
        'column_partition': [[str(j) for j in c] for c in d.column_partition],
        'findings': list(d.findings),
        'checks': dict(checks or {}),
    }


def decomposition_from_dict(doc: Dict[str, Any]) -> Decomposition:
    """Reconstruye una Decomposition desde un informe estructurado (para volver a verificarla)."""
    try:
        return Decomposition(
            p=matrix_from_json(doc['P']),
            q=Permutation(int(v) for v in doc['Q_vector']),
            blocks=tuple(matrix_from_json(b) for b in doc['blocks']),
            row_partition=tuple(tuple(int(i) for i in r) for r in doc['row_partition']),
            column_partition=ComponentPartition(
                tuple(tuple(int(j) for j in c) for c in doc['column_partition'])
            ),
            decomposable=bool(doc['decomposable']),
            p_inverse=matrix_from_json(doc['P_inverse']) if doc.get('P_inverse') else None,
            pivot_cols=tuple(int(c) for c in doc.get('pivot_cols', [])),
            rank=int(doc.get('rank', 0)),
            findings=tuple(doc.get('findings', [])),
        )
    except (KeyError, TypeError, ValueError) as e:
        raise MatrixError(f"malformed decomposition report: {e}") from e


def components_to_dict(source: str, method: str, laplacian: IntMatrix,
                       rref: Optional[RatMatrix], partition: Optional[ComponentPartition],
                       agree: Optional[bool], note: str = "",
                       partitions: Optional[Dict[str, List[List[int]]]] = None) -> Dict[str, Any]:
    return {
        'source': source,
        'method': method,
        'laplacian': matrix_to_json(laplacian),
        'rref': matrix_to_json(rref) if rref is not None else None,
        'components': [[str(v) for v in c] for c in partition] if partition is not None else None,
        'partitions': {k: [[str(v) for v in c] for c in p] for k, p in (partitions or {}).items()},
        'agree': agree,
        'note': note,
    }


def dumps(doc: Any) -> str:
    return json.dumps(doc, indent=2, sort_keys=False, ensure_ascii=False)
