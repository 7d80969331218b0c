import csv
import io
import json
import re
import subprocess
import sys
from pathlib import Path

import pytest

from bohr.constants import FULL, PAPER

ROOT = Path(__file__).resolve().parent.parent
GOLDEN = Path(__file__).resolve().parent / "golden"
MASK = "*"


@pytest.fixture
def full():
    return FULL


@pytest.fixture
def paper():
    return PAPER


def run_cli(*args):
    """Run ``python -m cli`` from the repository root."""
    cmd = [sys.executable, "-m", "cli", *args]
    return subprocess.run(cmd, capture_output=True, text=True, cwd=ROOT)


@pytest.fixture
def cli():
    return run_cli


@pytest.fixture
def golden():
    def read(name):
        return (GOLDEN / name).read_text()
    return read


def _mask_table(text, columns):
    lines = text.split("\n")
    header, rule = lines[0], lines[1]
    spans = dict(zip(header.split(), (m.span() for m in re.finditer(r"-+", rule))))
    for i in range(2, len(lines)):
        if not lines[i]:
            break
        line = lines[i].ljust(len(rule))
        for col in columns:
            start, end = spans[col]
            line = line[:start] + MASK.ljust(end - start) + line[end:]
        lines[i] = line.rstrip()
    return "\n".join(lines)


def _mask_csv(text, columns):
    rows = list(csv.DictReader(io.StringIO(text)))
    buffer = io.StringIO()
    writer = csv.DictWriter(buffer, fieldnames=text.split("\n", 1)[0].split(","), lineterminator="\n")
    writer.writeheader()
    for row in rows:
        writer.writerow({**row, **{col: MASK for col in columns}})
    return buffer.getvalue()


def _mask_json(text, columns):
    document = json.loads(text)
    document["data"] = [{**row, **{col: MASK for col in columns}} for row in document["data"]]
    return document


@pytest.fixture
def mask():
    """Replace run-dependent cells (roundoff residuals, step counts) by ``*``."""
    def apply(text, fmt, columns):
        if fmt == "json":
            return _mask_json(text, columns)
        if fmt == "csv":
            return _mask_csv(text, columns)
        return _mask_table(text, columns)
    return apply
