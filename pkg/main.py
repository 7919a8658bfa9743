from __future__ import annotations

import sys
from pathlib import Path

ROOT = Path(__file__).resolve().parent
# Package lives under src/, the export helpers under tools/
for path in (ROOT / "src", ROOT):
    if str(path) not in sys.path:
        sys.path.insert(0, str(path))

from genstirling.cli import main  # noqa: E402


if __name__ == "__main__":
    raise SystemExit(main())
