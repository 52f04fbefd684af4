"""Bundled data files: lexicon, equivalence groups, word lists, tables, fixture corpus."""

from importlib import resources
from pathlib import Path


def data_path(name: str) -> Path:
    """Filesystem path of a bundled data file."""
    return Path(resources.files(__package__) / name)


def lexicon_path() -> Path:
    return data_path("lexicon.txt")


def equivalence_groups_path() -> Path:
    return data_path("equivalence_groups.txt")


def stopwords_path() -> Path:
    return data_path("stopwords.txt")


def common_words_path() -> Path:
    return data_path("english_common_words.txt")


def contractions_path() -> Path:
    return data_path("contractions.tsv")


def adversarial_substitutions_path() -> Path:
    return data_path("adversarial_substitutions.tsv")


def fixture_corpus_path() -> Path:
    """Synthetic 300-comment corpus shipped for tests and demos."""
    return data_path("fixture_corpus.jsonl")


def load_wordlist(path) -> frozenset[str]:
    """Load a one-word-per-line file, skipping blanks and # comments."""
    words = set()
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            word = line.strip().lower()
            if word and not word.startswith("#"):
                words.add(word)
    return frozenset(words)
