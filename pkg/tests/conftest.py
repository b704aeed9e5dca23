import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))  # make oracles importable

from babelbot.engine.confirm import TemplateLexicon
from babelbot.engine.mock import FixtureCorpus
from babelbot.executor.responses import ResponseCatalog
from babelbot.langid import LanguageProfileSet
from babelbot.perception.scorer import LexicalScorer
from babelbot.simulator.world import Simulator

DATA_DIR = Path(__file__).parent.parent / "src" / "babelbot" / "data"


@pytest.fixture(scope="session")
def profiles() -> LanguageProfileSet:
    return LanguageProfileSet.bundled()


@pytest.fixture(scope="session")
def lexicon() -> TemplateLexicon:
    return TemplateLexicon.bundled()


@pytest.fixture(scope="session")
def catalog() -> ResponseCatalog:
    return ResponseCatalog.bundled()


@pytest.fixture(scope="session")
def corpus() -> FixtureCorpus:
    return FixtureCorpus.bundled()


@pytest.fixture(scope="session")
def scorer() -> LexicalScorer:
    return LexicalScorer.bundled()


@pytest.fixture()
def lab_sim() -> Simulator:
    return Simulator.from_map_file(DATA_DIR / "maps" / "lab.json")


@pytest.fixture()
def lab_map_path() -> Path:
    return DATA_DIR / "maps" / "lab.json"


@pytest.fixture()
def corpus_path() -> Path:
    return DATA_DIR / "fixtures" / "corpus.jsonl"
