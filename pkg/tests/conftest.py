from pathlib import Path

import pytest

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"


@pytest.fixture(scope="session")
def beautiful_dir() -> Path:
    return FIXTURES / "beautiful"


@pytest.fixture(scope="session")
def gloss_dir() -> Path:
    return FIXTURES / "gloss"


@pytest.fixture(scope="session")
def gloss_entries(gloss_dir):
    from skbforge.formats import parse_dictionary_path

    return parse_dictionary_path(gloss_dir / "dict.jsonl")


@pytest.fixture(scope="session")
def gloss_parses(gloss_dir):
    from skbforge.formats import parse_conllu_path

    return parse_conllu_path(gloss_dir / "parses.conllu")


@pytest.fixture(scope="session")
def gloss_wordlists(gloss_dir):
    from skbforge.formats import parse_wordlist_path

    return {
        "cdv": parse_wordlist_path(gloss_dir / "cdv.txt", "cdv"),
        "stopwords": parse_wordlist_path(gloss_dir / "stopwords.txt", "stopword"),
        "negators": parse_wordlist_path(gloss_dir / "negators.txt", "negator"),
    }


@pytest.fixture(scope="session")
def gloss_inventory(gloss_entries, gloss_wordlists):
    from skbforge.sememe_set import SememeSetConfig, build_sememe_set

    cfg = SememeSetConfig(
        stopwords=gloss_wordlists["stopwords"], negators=gloss_wordlists["negators"]
    )
    return build_sememe_set(gloss_entries, gloss_wordlists["cdv"], cfg)


@pytest.fixture(scope="session")
def gloss_skb(gloss_entries, gloss_inventory, gloss_parses):
    from skbforge.extract import build_skb

    return build_skb(gloss_entries, gloss_inventory, parses=gloss_parses)


@pytest.fixture(scope="session")
def gloss_distilled(gloss_skb, gloss_parses):
    from skbforge.extract import DistillConfig, distill_skb

    return distill_skb(gloss_skb, gloss_parses, DistillConfig())
