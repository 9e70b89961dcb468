"""CSV and JSON writers for command results."""

from __future__ import annotations

import csv
import json
import math
import sys
from contextlib import contextmanager
from typing import Any, Dict, Iterator, Optional, TextIO

from diracoulomb.cli.commands import CommandResult
from diracoulomb.cli.runspec import RunSpec


def _cell(value: Any) -> Any:
    if isinstance(value, float) and not math.isfinite(value):
        return None
    return value


def render_json(result: CommandResult, run: RunSpec) -> str:
    payload: Dict[str, Any] = {
        "config": run.summary(),
        "mode": run.mode,
        "rows": [{column: _cell(row.get(column)) for column in result.columns} for row in result.rows],
        "notes": result.notes,
    }
    return json.dumps(payload, indent=2)


def write_csv(result: CommandResult, stream: TextIO) -> None:
    writer = csv.DictWriter(stream, fieldnames=result.columns, lineterminator="\r\n")
    writer.writeheader()
    for row in result.rows:
        cells = {column: _cell(row.get(column)) for column in result.columns}
        writer.writerow({column: "" if value is None else value for column, value in cells.items()})


@contextmanager
def _open_output(path: Optional[str]) -> Iterator[TextIO]:
    if path is None:
        yield sys.stdout
        return
    with open(path, "w", encoding="utf-8", newline="") as handle:
        yield handle


def write_result(result: CommandResult, run: RunSpec) -> None:
    """Write to ``run.output_path`` or stdout. Raises OSError on I/O failure."""

    with _open_output(run.output_path) as stream:
        if run.format == "json":
            stream.write(render_json(result, run))
            stream.write("\n")
        else:
            write_csv(result, stream)
