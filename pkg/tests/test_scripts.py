import subprocess
import sys
from pathlib import Path

SCRIPTS = Path(__file__).parent.parent / "scripts"


def test_run_verification_script():
    result = subprocess.run(
        [sys.executable, str(SCRIPTS / "run_verification.py"), "--seed", "7"],
        capture_output=True,
        text=True,
        timeout=120,
    )
    assert result.returncode == 0, result.stdout + result.stderr
    lines = [ln for ln in result.stdout.splitlines() if ln.strip()]
    assert lines and all(ln.startswith("PASS") for ln in lines)


def test_z2_matrix_sweep_script():
    result = subprocess.run(
        [sys.executable, str(SCRIPTS / "z2_matrix_sweep.py")],
        capture_output=True,
        text=True,
        timeout=60,
    )
    assert result.returncode == 0, result.stdout + result.stderr
    assert "agree everywhere" in result.stdout
    assert result.stdout.count("MISMATCH") == 0
