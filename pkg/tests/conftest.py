import contextlib
import io
from typing import NamedTuple

import pytest

from hilbert_forms import cli


class CliResult(NamedTuple):
    code: int
    stdout: str
    stderr: str


@pytest.fixture
def run_cli():
    def run(argv):
        out, err = io.StringIO(), io.StringIO()
        with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
            try:
                code = cli.main(argv)
            except SystemExit as exc:  # argparse exits on usage errors
                code = exc.code if isinstance(exc.code, int) else 2
        return CliResult(code, out.getvalue(), err.getvalue())

    return run
