"""Six-step text normalization: URL removal, contraction expansion, special
symbol removal, identifier splitting, repetition/evasion fixing, and emoji
replacement. Steps always run in that order; the pipeline lowercases last."""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import lru_cache

from . import data as _data
from .errors import DataError

STEP_ORDER = (
    "urls",
    "contractions",
    "symbols",
    "identifiers",
    "repetition",
    "emoji",
)

_WS_RE = re.compile(r"\s+")


def normalize_whitespace(text: str) -> str:
    return _WS_RE.sub(" ", text).strip()


# ---------------------------------------------------------------------------
# Step 1: URL removal

_URL_RE = re.compile(r"(?:https?://\S+|www\.\S+)")


def remove_urls(text: str) -> str:
    """Replace http(s)/www URLs with a single space."""
    return normalize_whitespace(_URL_RE.sub(" ", text))


# ---------------------------------------------------------------------------
# Step 2: contraction expansion

def load_contractions(path) -> dict[str, str]:
    """Read contraction<TAB>expansion lines; # comments ignored."""
    table: dict[str, str] = {}
    with open(path, encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.rstrip("\n")
            if not line.strip() or line.startswith("#"):
                continue
            if "\t" not in line:
                raise DataError(f"{path}:{lineno}: expected contraction<TAB>expansion")
            contraction, expansion = line.split("\t", 1)
            table[contraction.strip().lower()] = expansion.strip()
    return table


def _contraction_regex(table: dict[str, str]) -> re.Pattern[str]:
    # Longest-first alternation so "shouldn't've" wins over "shouldn't".
    alts = sorted(table, key=len, reverse=True)
    body = "|".join(re.escape(c) for c in alts)
    return re.compile(rf"(?<![\w'])(?:{body})(?![\w'])", re.IGNORECASE)


def expand_contractions(text: str, table: dict[str, str]) -> str:
    """Expand table entries case-insensitively, keeping leading capitalization."""
    if not table:
        return normalize_whitespace(text)
    text = text.replace("’", "'")  # curly apostrophes fold into straight

    def repl(m: re.Match[str]) -> str:
        expansion = table[m.group(0).lower()]
        src = m.group(0)
        if src.isupper() and len(src) > 1:
            return expansion.upper()
        if src[:1].isupper():
            return expansion[:1].upper() + expansion[1:]
        return expansion

    return normalize_whitespace(_contraction_regex(table).sub(repl, text))


# ---------------------------------------------------------------------------
# Step 3: special symbol removal

# Emoji codepoints survive this step so the final emoji step can see them;
# colon and underscore survive for :name: markup and identifier splitting.
_EMOJI_RANGES = (
    "\U0001F000-\U0001F0FF"
    "\U0001F300-\U0001F5FF"
    "\U0001F600-\U0001F64F"
    "\U0001F680-\U0001F6FF"
    "\U0001F700-\U0001F77F"
    "\U0001F900-\U0001F9FF"
    "\U0001FA00-\U0001FAFF"
    "\U00002600-\U000027BF"
    "\U0001F1E6-\U0001F1FF"
)

# \w covers letters, digits, and underscore.
_SYMBOL_RE = re.compile(rf"[^\w\s':{_EMOJI_RANGES}]", re.UNICODE)


def remove_special_symbols(text: str) -> str:
    """Delete characters other than letters, digits, whitespace, apostrophe,
    colon, underscore, and emoji codepoints."""
    return normalize_whitespace(_SYMBOL_RE.sub("", text))


# ---------------------------------------------------------------------------
# Step 4: identifier splitting

_EMOJI_MARKUP_RE = re.compile(r":[\w+-]+:")
_CAMEL_RE = re.compile(r"(?<=[a-z0-9])(?=[A-Z])|(?<=[A-Z])(?=[A-Z][a-z])")


def _split_fragment(fragment: str) -> str:
    fragment = fragment.replace("_", " ")
    return _CAMEL_RE.sub(" ", fragment)


def split_identifiers(text: str) -> str:
    """Break camelCase and under_score identifiers into space-separated words.

    :name: emoji markup is left intact so the emoji step still matches it.
    """
    out: list[str] = []
    pos = 0
    for m in _EMOJI_MARKUP_RE.finditer(text):
        out.append(_split_fragment(text[pos:m.start()]))
        out.append(m.group(0))
        pos = m.end()
    out.append(_split_fragment(text[pos:]))
    return normalize_whitespace("".join(out))


# ---------------------------------------------------------------------------
# Step 5: repetition elimination and evasion-spelling reversal

def load_substitutions(path) -> dict[str, str]:
    """Read pattern<TAB>replacement lines (single characters)."""
    table: dict[str, str] = {}
    with open(path, encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.rstrip("\n")
            if not line.strip() or line.startswith("#"):
                continue
            if "\t" not in line:
                raise DataError(f"{path}:{lineno}: expected pattern<TAB>replacement")
            pattern, replacement = line.split("\t", 1)
            table[pattern.strip()] = replacement.strip()
    return table


_WORD_RUN_RE = re.compile(r"[A-Za-z0-9]+")


def _collapse_runs(token: str, keep: int) -> str:
    # Collapse runs of >=3 identical letters (case-insensitive) to `keep`.
    out: list[str] = []
    i = 0
    n = len(token)
    while i < n:
        j = i
        while j < n and token[j].isalpha() and token[j].lower() == token[i].lower():
            j += 1
        run = j - i
        if token[i].isalpha() and run >= 3:
            out.append(token[i:i + keep])
            i = j
        else:
            out.append(token[i])
            i += 1
    return "".join(out)


def _fix_token(token: str, keywords: frozenset[str], dictionary: frozenset[str],
               substitutions: dict[str, str]) -> str:
    # (a) letter repetition: try collapsing to 2, then to 1; accept the first
    # form found in the lexicon or dictionary, else fall back to 1.
    if _collapse_runs(token, 1) != token:
        two = _collapse_runs(token, 2)
        one = _collapse_runs(token, 1)
        if two.lower() in keywords or two.lower() in dictionary:
            token = two
        else:
            token = one
    # (b) digit substitutions inside letter-bearing tokens, only when the
    # rewritten token is a lexicon keyword.
    if any(ch.isdigit() for ch in token) and any(ch.isalpha() for ch in token):
        rewritten = "".join(substitutions.get(ch, ch) for ch in token)
        if not any(ch.isdigit() for ch in rewritten) and rewritten.lower() in keywords:
            token = rewritten
    return token


def eliminate_repetition(
    text: str,
    keywords: frozenset[str],
    dictionary: frozenset[str],
    substitutions: dict[str, str],
) -> str:
    """Undo detection-evasion spellings: collapse stretched letters and map
    digit substitutes (e.g. 0 for o) back when a keyword results."""
    def repl(m: re.Match[str]) -> str:
        return _fix_token(m.group(0), keywords, dictionary, substitutions)

    return normalize_whitespace(_WORD_RUN_RE.sub(repl, text))


# ---------------------------------------------------------------------------
# Step 6: emoji replacement

_EMOJI_CHAR_RE = re.compile(rf"[{_EMOJI_RANGES}]")


def replace_emoji(text: str, neutral_token: str = "emoji") -> str:
    """Replace :name: markup spans and Unicode emoji with a neutral word."""
    text = _EMOJI_MARKUP_RE.sub(f" {neutral_token} ", text)
    text = _EMOJI_CHAR_RE.sub(f" {neutral_token} ", text)
    return normalize_whitespace(text)


# ---------------------------------------------------------------------------
# Pipeline

@dataclass(frozen=True)
class PreprocessConfig:
    """Which steps run (order is fixed regardless) and their tables."""

    steps: frozenset[str] = frozenset(STEP_ORDER)
    neutral_token: str = "emoji"
    contractions: dict[str, str] = field(default_factory=dict)
    substitutions: dict[str, str] = field(default_factory=dict)
    keywords: frozenset[str] = frozenset()      # lexicon vocabulary, lowercase
    dictionary: frozenset[str] = frozenset()    # common-word list, lowercase
    lowercase: bool = True

    def __post_init__(self):
        unknown = self.steps - set(STEP_ORDER)
        if unknown:
            raise DataError(f"unknown preprocessing steps: {sorted(unknown)}")


@lru_cache(maxsize=1)
def default_config() -> PreprocessConfig:
    """All six steps with the bundled tables and default lexicon vocabulary."""
    from .lexicon import load_lexicon  # local import to avoid a cycle

    lexicon = load_lexicon(_data.lexicon_path())
    return PreprocessConfig(
        contractions=load_contractions(_data.contractions_path()),
        substitutions=load_substitutions(_data.adversarial_substitutions_path()),
        keywords=lexicon.keyword_tokens() | lexicon.all_keywords(),
        dictionary=_data.load_wordlist(_data.common_words_path()),
    )


def pipeline(text: str, config: PreprocessConfig | None = None) -> str:
    """Apply the enabled steps in canonical order, then normalize whitespace
    (and lowercase unless disabled)."""
    cfg = config if config is not None else default_config()
    if "urls" in cfg.steps:
        text = remove_urls(text)
    if "contractions" in cfg.steps:
        text = expand_contractions(text, cfg.contractions)
    if "symbols" in cfg.steps:
        text = remove_special_symbols(text)
    if "identifiers" in cfg.steps:
        text = split_identifiers(text)
    if "repetition" in cfg.steps:
        text = eliminate_repetition(text, cfg.keywords, cfg.dictionary, cfg.substitutions)
    if "emoji" in cfg.steps:
        text = replace_emoji(text, cfg.neutral_token)
    text = normalize_whitespace(text)
    return text.lower() if cfg.lowercase else text
