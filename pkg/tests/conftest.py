import os
import sys
from pathlib import Path

SRC = Path(__file__).resolve().parents[1] / "src"

try:
    import ris_smbm  # noqa: F401
except ImportError:
    sys.path.insert(0, str(SRC))


def subprocess_env():
    """Environment for CLI subprocess tests; works without an installed package."""
    env = os.environ.copy()
    env["PYTHONPATH"] = str(SRC) + os.pathsep + env.get("PYTHONPATH", "")
    return env
