import sys
from pathlib import Path

import pytest

from psbck import goldens
from psbck.textfmt import parse

CORPUS = Path(__file__).resolve().parent.parent / "corpus"


@pytest.fixture(scope="session")
def corpus_dir() -> Path:
    return CORPUS


@pytest.fixture(scope="session")
def four_elt():
    return goldens.four_element_bounded()


@pytest.fixture(scope="session")
def six_elt():
    return goldens.six_element_involutive()


@pytest.fixture(scope="session")
def six_sm():
    return goldens.six_element_smarandache()


@pytest.fixture(scope="session")
def corpus_docs():
    return {
        p.stem: parse(p.read_text(encoding="utf-8"))
        for p in sorted(CORPUS.glob("*.alg"))
    }


def names(A, maps):
    """Image vectors as name tuples, for table-for-table comparisons."""
    return [f.names() for f in maps]


_CAPTURE = None


@pytest.fixture(autouse=True)
def _remember_capture_manager(pytestconfig):
    global _CAPTURE
    _CAPTURE = pytestconfig.pluginmanager.getplugin("capturemanager")
    yield


def report(criterion: int, ok: bool, label: str):
    """One unbuffered pass/fail line per acceptance criterion.

    Written past any output capture so the line always lands in the
    test log.
    """
    status = "PASS" if ok else "FAIL"
    line = f"acceptance criterion {criterion} [{status}]: {label}"
    if _CAPTURE is not None:
        with _CAPTURE.global_and_fixture_disabled():
            print(line, flush=True)
    else:
        print(line, file=sys.__stdout__, flush=True)
