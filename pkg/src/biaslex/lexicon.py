"""Categorized keyword lexicon: loading, matching, count features,
corpus-driven expansion, and substitution-group variant generation."""

from __future__ import annotations

import re
import warnings
from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import DataError

# The twelve lexicon categories, in canonical order.
LEXICON_CATEGORIES = (
    "Pejoratives",
    "LGBTQ+ identities and slurs",
    "Uncomfortable reference",
    "Women kins",
    "Woman's body parts",
    "Women roles",
    "General women",
    "Flirtatious",
    "Physical appearance",
    "Sexual threat",
    "Cloth",
    "Men roles",
)

LGBTQ_CATEGORY = "LGBTQ+ identities and slurs"

# Seven categories whose per-text keyword counts become extra feature
# dimensions. Order fixes the feature layout.
DEFAULT_COUNT_CATEGORIES = (
    "Pejoratives",
    "Women kins",
    "LGBTQ+ identities and slurs",
    "Woman's body parts",
    "Women roles",
    "Cloth",
    "General women",
)

_TOKEN_RE = re.compile(r"[a-z0-9]+")


def tokenize(text: str) -> list[str]:
    """Split on any non-alphanumeric character and lowercase."""
    return _TOKEN_RE.findall(text.lower())


@dataclass(frozen=True)
class KeywordMatch:
    keyword: str        # the lexicon entry, lowercase
    category: str
    position: int       # token index of the (first) matched token


class Lexicon:
    """Immutable category -> keyword-set mapping with a token-phrase matcher."""

    def __init__(self, categories: dict[str, set[str]]):
        for name in categories:
            if name not in LEXICON_CATEGORIES:
                raise DataError(f"unknown lexicon category: {name!r}")
        self._categories = {name: frozenset(words) for name, words in categories.items()}
        # first token -> [(token tuple, category, keyword)], longest phrases first
        index: dict[str, list[tuple[tuple[str, ...], str, str]]] = {}
        for name in LEXICON_CATEGORIES:
            for word in sorted(self._categories.get(name, ())):
                toks = tuple(tokenize(word))
                if not toks:
                    raise DataError(f"keyword {word!r} has no alphanumeric tokens")
                index.setdefault(toks[0], []).append((toks, name, word))
        self._index = index
        self._all_tokens = frozenset(
            tok for entries in index.values() for toks, _, _ in entries for tok in toks
        )

    def categories(self) -> dict[str, frozenset[str]]:
        return dict(self._categories)

    def words(self, category: str) -> frozenset[str]:
        return self._categories.get(category, frozenset())

    def all_keywords(self) -> frozenset[str]:
        return frozenset(w for ws in self._categories.values() for w in ws)

    def keyword_tokens(self) -> frozenset[str]:
        """Every token occurring in any keyword (phrases contribute each token)."""
        return self._all_tokens

    def __contains__(self, word: str) -> bool:
        return any(word in ws for ws in self._categories.values())

    def __len__(self) -> int:
        return sum(len(ws) for ws in self._categories.values())


_SECTION_RE = re.compile(r"^\[(.+)\]$")


def load_lexicon(path) -> Lexicon:
    """Parse a sectioned keyword file: one [Category] header per section,
    one lowercase keyword per line, # comments ignored."""
    categories: dict[str, set[str]] = {}
    current: set[str] | None = None
    with open(path, encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            m = _SECTION_RE.match(line)
            if m:
                name = m.group(1).strip()
                if name not in LEXICON_CATEGORIES:
                    raise DataError(f"{path}:{lineno}: unknown category {name!r}")
                current = categories.setdefault(name, set())
                continue
            if current is None:
                raise DataError(f"{path}:{lineno}: keyword before any [Category] header")
            word = line.lower()
            if word in current:
                warnings.warn(f"{path}:{lineno}: duplicate keyword {word!r}, deduplicated")
                continue
            current.add(word)
    if not categories:
        warnings.warn(f"{path}: empty lexicon file")
    return Lexicon(categories)


def match_keywords(text: str, lexicon: Lexicon) -> list[KeywordMatch]:
    """Case-insensitive whole-token matches; phrases match consecutive tokens.

    Every occurrence is reported, including overlapping matches from
    different keywords.
    """
    tokens = tokenize(text)
    matches: list[KeywordMatch] = []
    for i, tok in enumerate(tokens):
        for toks, category, keyword in lexicon._index.get(tok, ()):
            if tokens[i:i + len(toks)] == list(toks):
                matches.append(KeywordMatch(keyword, category, i))
    matches.sort(key=lambda m: (m.position, LEXICON_CATEGORIES.index(m.category), m.keyword))
    return matches


def word_count_vector(
    text: str,
    lexicon: Lexicon,
    categories: Sequence[str] = DEFAULT_COUNT_CATEGORIES,
) -> tuple[int, ...]:
    """Keyword-occurrence counts for the configured categories, in order."""
    if len(categories) != len(set(categories)):
        raise DataError("count categories must be distinct")
    counts = Counter(m.category for m in match_keywords(text, lexicon))
    return tuple(counts.get(c, 0) for c in categories)


def expand_keywords(
    texts: Iterable[str],
    lexicon: Lexicon,
    stopwords: frozenset[str] | set[str],
    min_doc_freq: int = 100,
) -> list[tuple[str, int]]:
    """Rank candidate lexicon additions by document frequency.

    Counts how many texts contain each token, drops tokens already in the
    lexicon or the stop list and tokens below ``min_doc_freq``, and returns
    (word, document frequency) sorted by frequency descending, ties
    lexicographic.
    """
    doc_freq: Counter[str] = Counter()
    for text in texts:
        doc_freq.update(set(tokenize(text)))
    known = lexicon.keyword_tokens() | frozenset(stopwords)
    candidates = [
        (word, df)
        for word, df in doc_freq.items()
        if df >= min_doc_freq and word not in known
    ]
    candidates.sort(key=lambda wd: (-wd[1], wd[0]))
    return candidates


class EquivalenceGroups:
    """Disjoint sets of keywords that are mutually substitutable."""

    def __init__(self, groups: Sequence[Sequence[str]]):
        cleaned = []
        for group in groups:
            words = tuple(dict.fromkeys(w.strip().lower() for w in group if w.strip()))
            if len(words) < 2:
                raise DataError(f"equivalence group needs at least 2 words: {group!r}")
            cleaned.append(words)
        self.groups: tuple[tuple[str, ...], ...] = tuple(cleaned)
        self._group_of: dict[str, list[int]] = {}
        for gi, words in enumerate(self.groups):
            for w in words:
                self._group_of.setdefault(w, []).append(gi)

    def groups_of(self, word: str) -> list[tuple[str, ...]]:
        return [self.groups[gi] for gi in self._group_of.get(word, ())]

    def grouped_words(self) -> frozenset[str]:
        return frozenset(self._group_of)

    def __len__(self) -> int:
        return len(self.groups)


def load_equivalence_groups(path) -> EquivalenceGroups:
    """One group per line, comma-separated."""
    groups = []
    with open(path, encoding="utf-8") as fh:
        for raw in fh:
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            groups.append([w.strip() for w in line.split(",")])
    return EquivalenceGroups(groups)


def _phrase_pattern(word: str) -> re.Pattern[str]:
    # Whole-token occurrence of a (possibly multi-token) keyword: token
    # boundaries are any non-alphanumeric characters.
    toks = tokenize(word)
    body = r"[^a-zA-Z0-9]+".join(re.escape(t) for t in toks)
    return re.compile(rf"(?<![a-zA-Z0-9]){body}(?![a-zA-Z0-9])", re.IGNORECASE)


def _replace_all(text: str, word: str, replacement: str) -> str:
    return _phrase_pattern(word).sub(replacement, text)


def generate_variants(text: str, groups: EquivalenceGroups) -> list[str]:
    """All single-substitution rewrites of ``text`` under the groups.

    For each grouped keyword present in the text and each alternative in its
    group, emits one variant with every occurrence of that keyword replaced.
    Duplicates and the original text are dropped. Replacements are lowercase.
    """
    present: list[str] = []  # grouped words in first-occurrence order
    order: dict[str, int] = {}
    for word in groups.grouped_words():
        m = _phrase_pattern(word).search(text)
        if m:
            order[word] = m.start()
    present = sorted(order, key=lambda w: (order[w], w))

    variants: list[str] = []
    seen = {text}
    for word in present:
        for group in groups.groups_of(word):
            for alt in group:
                if alt == word:
                    continue
                variant = _replace_all(text, word, alt)
                if variant not in seen:
                    seen.add(variant)
                    variants.append(variant)
    return variants


def is_single_substitution(variant: str, source: str, groups: EquivalenceGroups) -> bool:
    """True iff ``variant`` is ``source`` with exactly one grouped keyword
    replaced (every occurrence) by a same-group alternative."""
    if variant == source:
        return False
    for word in groups.grouped_words():
        if not _phrase_pattern(word).search(source):
            continue
        for group in groups.groups_of(word):
            for alt in group:
                if alt != word and _replace_all(source, word, alt) == variant:
                    return True
    return False
