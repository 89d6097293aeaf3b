"""Text normalization, term extraction, and set-overlap similarity.

Every scorer that compares artifact texts lexically (retrieval filtering,
consistency overlap, the IR baselines, the stub provider) goes through the
two operations here: ``tokenize`` and ``jaccard``. Both are pure, so their
outputs are reproducible bit-for-bit for a fixed stoplist resource.
"""

from __future__ import annotations

import hashlib
import re
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources

from .stem import porter_stem

# Splits an alphanumeric run at case and letter/digit boundaries:
# "logAllRequests" -> log / All / Requests, "HTTPServer" -> HTTP / Server,
# "sha256sum" -> sha / 256 / sum.
_WORD_RE = re.compile(r"[A-Za-z0-9]+")
_CASE_SPLIT_RE = re.compile(
    r"[A-Z]+(?=[A-Z][a-z])|[A-Z]?[a-z]+|[A-Z]+|[0-9]+"
)


@dataclass(frozen=True)
class TokenizerOptions:
    remove_stopwords: bool = True
    stem: bool = False


DEFAULT_OPTIONS = TokenizerOptions()


def _stopwords_text() -> str:
    return resources.files("tracelink.resources").joinpath("stopwords.txt").read_text("utf-8")


@lru_cache(maxsize=1)
def stopwords() -> frozenset[str]:
    return frozenset(w for w in _stopwords_text().split() if w)


@lru_cache(maxsize=1)
def stoplist_hash() -> str:
    """SHA-256 of the shipped stoplist, logged in reports for reproducibility."""
    return hashlib.sha256(_stopwords_text().encode("utf-8")).hexdigest()


def split_words(token: str) -> list[str]:
    """Split one identifier-like token at case and letter/digit boundaries."""
    return _CASE_SPLIT_RE.findall(token)


def tokenize(text: str, options: TokenizerOptions | None = None) -> list[str]:
    """Lowercased terms of ``text``.

    Splits on non-alphanumeric boundaries and intra-identifier case
    boundaries, drops terms of length 1, removes stopwords when the option
    is set, and applies Porter stemming when requested (stemming runs after
    stopword removal, on the surviving terms).
    """
    opts = options or DEFAULT_OPTIONS
    stops = stopwords() if opts.remove_stopwords else None
    terms = []
    for run in _WORD_RE.findall(text):
        for word in split_words(run):
            term = word.lower()
            if len(term) <= 1:
                continue
            if stops is not None and term in stops:
                continue
            if opts.stem:
                term = porter_stem(term)
                if len(term) <= 1:
                    continue
            terms.append(term)
    return terms


def term_set(text: str, options: TokenizerOptions | None = None) -> frozenset[str]:
    """Deduplicated result of :func:`tokenize`."""
    return frozenset(tokenize(text, options))


def unique_terms(text: str, options: TokenizerOptions | None = None) -> list[str]:
    """Tokens of ``text`` deduplicated preserving first occurrence order."""
    seen: set[str] = set()
    out: list[str] = []
    for t in tokenize(text, options):
        if t not in seen:
            seen.add(t)
            out.append(t)
    return out


def jaccard(a: frozenset[str] | set[str], b: frozenset[str] | set[str]) -> float:
    """|a ∩ b| / |a ∪ b|; 0.0 when both sets are empty."""
    if not a and not b:
        return 0.0
    inter = len(a & b)
    if inter == 0:
        return 0.0
    return inter / len(a | b)
