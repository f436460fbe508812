import subprocess
import sys
from pathlib import Path

import pytest

SCRIPTS = Path(__file__).resolve().parent.parent / "scripts"


@pytest.mark.parametrize("name, args, needle", [
    ("macdonald_table.py", ["--order", "3"], "1+y+y^2+y^3"),
    ("orbifold_ladder.py", ["--max-n", "4"], "20"),
    ("schur_classes_p1.py", ["--max-n", "3"], "y+y^2"),
])
def test_script_runs(name, args, needle):
    out = subprocess.run([sys.executable, str(SCRIPTS / name), *args], capture_output=True, text=True, check=True)
    assert needle in out.stdout
    assert "MISMATCH" not in out.stdout
