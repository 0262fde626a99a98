"""Rewrite the golden structured reports: python3 tests/golden/regen.py"""
import pathlib
import sys

here = pathlib.Path(__file__).parent
sys.path.insert(0, str(here.parent))

from conftest import FIXTURES  # noqa: E402
from mixedtori.analysis import analyze  # noqa: E402
from mixedtori.report import dumps, to_struct  # noqa: E402

for name, text in FIXTURES.items():
    (here / f"{name}.json").write_text(dumps(to_struct(analyze(text))), encoding="utf-8")
