import runpy
from pathlib import Path

import pytest

DEMOS = Path(__file__).resolve().parent.parent / "demos"


# the countermodel demo searches ~90M models and is left to the acceptance run
@pytest.mark.parametrize("name", ["01_forcing_basics.py", "02_interpolant_checks.py"])
def test_demo_runs(name, capsys):
    runpy.run_path(str(DEMOS / name), run_name="__main__")
    assert capsys.readouterr().out
