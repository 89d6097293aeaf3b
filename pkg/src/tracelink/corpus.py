"""Dataset loading, validation, and the textual view of code entities.

On-disk layout is a JSON manifest (``dataset.json``) next to the files it
references::

    {
      "name": "mini",
      "requirements": [{"id": "R1", "file": "reqs/R1.txt"}, ...],
      "code": [{"id": "C1", "file": "src/Logger.java",
                "kind": "file", "language": "java"}, ...],
      "answers": "answers.tsv"          // or null
    }

Each requirement is one UTF-8 text file. The optional answer file is TSV,
one ``req_id<TAB>code_id`` pair per line; ``#``-prefixed lines are ignored.
All paths are resolved relative to the manifest's directory.

The loader raises only on structural problems it cannot represent
(missing/malformed manifest, missing files, duplicate ids). Everything
else — dangling gold links, empty texts — is deferred to
:func:`validate_dataset`, which reports and never throws.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from pathlib import Path

from . import lexical
from .errors import DuplicateId, ManifestMalformed, ManifestMissing, ReferencedFileMissing

ENTITY_KINDS = ("file", "class", "method")


@dataclass(frozen=True)
class Requirement:
    id: str
    text: str


@dataclass(frozen=True)
class CodeEntity:
    id: str
    path: str
    kind: str
    text: str
    language_tag: str = ""


@dataclass(frozen=True)
class GoldLinkSet:
    links: frozenset[tuple[str, str]]

    def __len__(self) -> int:
        return len(self.links)

    def __contains__(self, pair: tuple[str, str]) -> bool:
        return pair in self.links


@dataclass(frozen=True)
class Dataset:
    name: str
    requirements: tuple[Requirement, ...]
    code_entities: tuple[CodeEntity, ...]
    gold_links: GoldLinkSet | None = None

    def requirement_ids(self) -> list[str]:
        return [r.id for r in self.requirements]

    def entity_ids(self) -> list[str]:
        return [c.id for c in self.code_entities]


@dataclass(frozen=True)
class Issue:
    kind: str  # DuplicateId | EmptyText | DanglingLink
    detail: str


@dataclass
class ValidationReport:
    issues: list[Issue] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.issues


def _require(condition: bool, message: str):
    if not condition:
        raise ManifestMalformed(message)


def _entry_field(entry: dict, field_name: str, index: int, section: str) -> str:
    value = entry.get(field_name)
    _require(isinstance(value, str) and value != "",
             f"{section}[{index}]: missing or empty field '{field_name}'")
    return value


def _read_text(path: Path) -> str:
    if not path.is_file():
        raise ReferencedFileMissing(str(path))
    return path.read_text("utf-8")


def _load_answers(path: Path) -> GoldLinkSet:
    pairs: set[tuple[str, str]] = set()
    for lineno, line in enumerate(_read_text(path).splitlines(), start=1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split("\t")
        if len(parts) != 2 or not parts[0] or not parts[1]:
            raise ManifestMalformed(f"{path}:{lineno}: expected 'req_id<TAB>code_id'")
        pairs.add((parts[0], parts[1]))
    return GoldLinkSet(frozenset(pairs))


def load_dataset(manifest_path: str | Path) -> Dataset:
    """Load a dataset from its JSON manifest.

    Dangling gold-link ids do not fail the load; ``validate_dataset``
    reports them.
    """
    manifest_path = Path(manifest_path)
    if not manifest_path.is_file():
        raise ManifestMissing(str(manifest_path))
    try:
        manifest = json.loads(manifest_path.read_text("utf-8"))
    except json.JSONDecodeError as exc:
        raise ManifestMalformed(
            f"{manifest_path}: line {exc.lineno}, column {exc.colno}: {exc.msg}"
        ) from exc

    _require(isinstance(manifest, dict), f"{manifest_path}: top level must be an object")
    name = manifest.get("name")
    _require(isinstance(name, str) and name != "", f"{manifest_path}: missing field 'name'")
    req_entries = manifest.get("requirements")
    _require(isinstance(req_entries, list), f"{manifest_path}: 'requirements' must be a list")
    code_entries = manifest.get("code")
    _require(isinstance(code_entries, list), f"{manifest_path}: 'code' must be a list")

    base = manifest_path.parent
    requirements: list[Requirement] = []
    seen_req: set[str] = set()
    for i, entry in enumerate(req_entries):
        _require(isinstance(entry, dict), f"requirements[{i}]: must be an object")
        rid = _entry_field(entry, "id", i, "requirements")
        if rid in seen_req:
            raise DuplicateId(f"duplicate requirement id '{rid}'")
        seen_req.add(rid)
        text = _read_text(base / _entry_field(entry, "file", i, "requirements"))
        requirements.append(Requirement(id=rid, text=text))

    entities: list[CodeEntity] = []
    seen_code: set[str] = set()
    for i, entry in enumerate(code_entries):
        _require(isinstance(entry, dict), f"code[{i}]: must be an object")
        cid = _entry_field(entry, "id", i, "code")
        if cid in seen_code:
            raise DuplicateId(f"duplicate code id '{cid}'")
        seen_code.add(cid)
        rel = _entry_field(entry, "file", i, "code")
        kind = _entry_field(entry, "kind", i, "code")
        _require(kind in ENTITY_KINDS, f"code[{i}]: kind must be one of {ENTITY_KINDS}")
        language = entry.get("language", "")
        _require(isinstance(language, str), f"code[{i}]: 'language' must be a string")
        entities.append(CodeEntity(
            id=cid, path=rel, kind=kind, text=_read_text(base / rel), language_tag=language,
        ))

    answers = manifest.get("answers")
    gold: GoldLinkSet | None = None
    if answers is not None:
        _require(isinstance(answers, str) and answers != "",
                 f"{manifest_path}: 'answers' must be a path or null")
        gold = _load_answers(base / answers)

    return Dataset(
        name=name,
        requirements=tuple(requirements),
        code_entities=tuple(entities),
        gold_links=gold,
    )


def validate_dataset(d: Dataset) -> ValidationReport:
    """Report every invariant violation; never raises."""
    issues: list[Issue] = []

    def dupes(ids: list[str], label: str):
        seen: set[str] = set()
        flagged: set[str] = set()
        for i in ids:
            if i in seen and i not in flagged:
                flagged.add(i)
                issues.append(Issue("DuplicateId", f"{label} id '{i}' appears more than once"))
            seen.add(i)

    dupes(d.requirement_ids(), "requirement")
    dupes(d.entity_ids(), "code")

    for r in d.requirements:
        if not r.text.strip():
            issues.append(Issue("EmptyText", f"requirement '{r.id}' has empty text"))
    for c in d.code_entities:
        if not c.text.strip():
            issues.append(Issue("EmptyText", f"code entity '{c.id}' has empty text"))

    if d.gold_links is not None:
        req_ids = set(d.requirement_ids())
        code_ids = set(d.entity_ids())
        for rid, cid in sorted(d.gold_links.links):
            if rid not in req_ids:
                issues.append(Issue("DanglingLink", f"link ({rid}, {cid}): unknown requirement id"))
            if cid not in code_ids:
                issues.append(Issue("DanglingLink", f"link ({rid}, {cid}): unknown code id"))

    return ValidationReport(issues)


# -- textual view of code ----------------------------------------------------

_STRING_RE = re.compile(r'"(?:\\.|[^"\\])*"' + r"|'(?:\\.|[^'\\])*'")
_BLOCK_COMMENT_RE = re.compile(r"/\*(.*?)\*/", re.S)
_LINE_COMMENT_RE = re.compile(r"//([^\n]*)|#([^\n]*)")
_IDENT_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")


def entity_text_view(c: CodeEntity) -> str:
    """Textual artifact used by IR and lexical scoring.

    Identifiers (split into words) concatenated with comment bodies;
    string literals are stripped before comment extraction so quoted
    ``//`` or ``#`` sequences are not misread as comments. Falls back to
    the raw text when extraction yields nothing.
    """
    code = _STRING_RE.sub(" ", c.text)
    comments: list[str] = []

    def grab_block(m: re.Match) -> str:
        comments.append(m.group(1).strip())
        return " "

    def grab_line(m: re.Match) -> str:
        comments.append((m.group(1) or m.group(2) or "").strip())
        return " "

    code = _BLOCK_COMMENT_RE.sub(grab_block, code)
    code = _LINE_COMMENT_RE.sub(grab_line, code)

    words: list[str] = []
    for ident in _IDENT_RE.findall(code):
        words.extend(lexical.split_words(ident))

    parts = words + [body for body in comments if body]
    view = " ".join(parts).strip()
    return view if view else c.text
