import sys
from pathlib import Path

try:
    import z4lcd  # noqa: F401
except ImportError:  # fresh checkout without an install
    sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))
