import re
import shutil
import subprocess
import sys
from pathlib import Path

import pytest

ROOT = Path(__file__).resolve().parent.parent


def console_steps():
    text = (ROOT / "README.md").read_text()
    steps = []
    for block in re.findall(r"```console\n(.*?)```", text, re.S):
        cmd, out = None, []
        for line in block.splitlines():
            if line.startswith("$ "):
                if cmd is not None:
                    steps.append((cmd, "".join(out)))
                cmd, out = line[2:], []
            else:
                out.append(line + "\n")
        if cmd is not None:
            steps.append((cmd, "".join(out)))
    return steps


@pytest.mark.skipif(shutil.which("qspectral") is None, reason="console script not installed")
def test_readme_console_session(tmp_path):
    steps = console_steps()
    assert len(steps) > 5
    for cmd, expected in steps:
        res = subprocess.run(["bash", "-c", cmd], cwd=tmp_path, capture_output=True, text=True, check=False)
        assert res.returncode == 0, (cmd, res.stderr)
        assert res.stdout == expected, cmd


@pytest.mark.parametrize("script", sorted((ROOT / "demos").glob("*.py")), ids=lambda p: p.name)
def test_demo_runs(script):
    res = subprocess.run([sys.executable, str(script)], capture_output=True, text=True, timeout=300, check=False)
    assert res.returncode == 0, res.stderr
    assert res.stdout
