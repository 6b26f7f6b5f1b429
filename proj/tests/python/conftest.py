import json
import os
import pathlib
import shutil
import subprocess

import pytest

ROOT = pathlib.Path(__file__).resolve().parents[2]


@pytest.fixture(scope="session")
def cli():
    exe = os.environ.get("CITESCALE_CLI") or shutil.which("citescale")
    if not exe:
        pytest.skip("citescale executable not available")

    def run(*args, cwd=None, check=True):
        proc = subprocess.run([exe, *map(str, args)], cwd=cwd, capture_output=True, text=True)
        if check and proc.returncode != 0:
            raise AssertionError(f"citescale {' '.join(map(str, args))} failed:\n{proc.stderr}")
        return proc

    return run


@pytest.fixture(scope="session")
def schema():
    base = pathlib.Path(os.environ.get("CITESCALE_SCHEMAS", ROOT / "schemas"))

    def load(kind):
        return json.loads((base / f"{kind}.schema.json").read_text())

    return load


@pytest.fixture(scope="session")
def golden():
    return ROOT / "tests" / "golden"
