"""Structured morpheme lexicon: encodings, morphemic concepts, words.

The lexicon lives in three TSV files:

* ``morphemes.tsv``: ``encoding <TAB> pos <TAB> definition``
* ``mcs.tsv``:       ``mc_id <TAB> pos <TAB> member1,member2,... <TAB> gloss``
* ``words.tsv``:     ``surface <TAB> pos <TAB> pattern <TAB> first_mc <TAB> second_mc``

All files are UTF-8, one record per line, ``#`` starts a comment line.
A loaded :class:`Lexicon` is immutable and safe to share between threads.
"""

from __future__ import annotations

import unicodedata
from collections import Counter, defaultdict
from dataclasses import dataclass, field
from enum import Enum
from pathlib import Path
from typing import Iterable, Sequence

from .errors import EncodingError, Issue, LexiconError

MORPHEME_FILE = "morphemes.tsv"
MC_FILE = "mcs.tsv"
WORD_FILE = "words.tsv"


class POSTag(Enum):
    """The 13 part-of-speech classes used for morphemes, concepts and words."""

    NOMINAL = "nominal"
    VERBAL = "verbal"
    ADJECTIVAL = "adjectival"
    ADVERBIAL = "adverbial"
    NUMERAL = "numeral"
    CLASSIFIER = "classifier"
    PRONOMINAL = "pronominal"
    PREPOSITIONAL = "prepositional"
    AUXILIARY = "auxiliary"
    CONJUNCTIONAL = "conjunctional"
    ONOMATOPOETIC = "onomatopoetic"
    INTERJECTION = "interjection"
    AFFIX = "affix"

    @classmethod
    def parse(cls, text: str) -> "POSTag":
        try:
            return cls(text.strip().lower())
        except ValueError:
            raise ValueError(f"unknown POS tag {text!r}") from None

    @property
    def marker(self) -> str:
        """Token suffix used in the B-/E- slots of a pseudo-sentence."""
        return _POS_MARKER[self]

    @property
    def word_token(self) -> str:
        """Token used in the word-POS slot of a pseudo-sentence."""
        return _POS_WORD_TOKEN[self]


_POS_MARKER = {
    POSTag.NOMINAL: "Nominal",
    POSTag.VERBAL: "Verbal",
    POSTag.ADJECTIVAL: "Adjectival",
    POSTag.ADVERBIAL: "Adverbial",
    POSTag.NUMERAL: "Numeral",
    POSTag.CLASSIFIER: "Classifier",
    POSTag.PRONOMINAL: "Pronominal",
    POSTag.PREPOSITIONAL: "Prepositional",
    POSTag.AUXILIARY: "Auxiliary",
    POSTag.CONJUNCTIONAL: "Conjunctional",
    POSTag.ONOMATOPOETIC: "Onomatopoetic",
    POSTag.INTERJECTION: "Interjection",
    POSTag.AFFIX: "Affix",
}

_POS_WORD_TOKEN = {
    POSTag.NOMINAL: "Noun",
    POSTag.VERBAL: "Verb",
    POSTag.ADJECTIVAL: "Adjective",
    POSTag.ADVERBIAL: "Adverb",
    POSTag.NUMERAL: "Numeral",
    POSTag.CLASSIFIER: "Classifier",
    POSTag.PRONOMINAL: "Pronoun",
    POSTag.PREPOSITIONAL: "Preposition",
    POSTag.AUXILIARY: "Auxiliary",
    POSTag.CONJUNCTIONAL: "Conjunction",
    POSTag.ONOMATOPOETIC: "Onomatopoeia",
    POSTag.INTERJECTION: "Interjection",
    POSTag.AFFIX: "Affix",
}


class WordFormationPattern(Enum):
    """The 15 word-formation patterns of disyllabic words."""

    MODIFIER_HEAD = "Modifier-Head"
    PARALLEL = "Parallel"
    VERB_OBJECT = "Verb-Object"
    ADVERB_VERB = "Adverb-Verb"
    SUFFIXATION = "Suffixation"
    NONCOMPOUND = "Noncompound"
    VERB_VERB = "Verb-Verb"
    PREFIXATION = "Prefixation"
    VERB_COMPLEMENT = "Verb-Complement"
    SUBJECT_PREDICATE = "Subject-Predicate"
    OVERLAPPING = "Overlapping"
    PREPOSITION_OBJECT = "Preposition-Object"
    NOUN_CLASSIFIER = "Noun-Classifier"
    QUANTIFIER = "Quantifier"
    CLASSIFIER_CLASSIFIER = "Classifier-Classifier"

    @classmethod
    def parse(cls, text: str) -> "WordFormationPattern":
        try:
            return cls(text.strip())
        except ValueError:
            raise ValueError(f"unknown word-formation pattern {text!r}") from None


@dataclass(frozen=True, slots=True)
class MorphemeEncoding:
    """Identity of one morpheme: host character plus dictionary coordinates.

    ``entry_index`` is the host's entry number in the source dictionary,
    ``sememe_count`` the number of senses under that entry, and
    ``sememe_index`` which of those senses (1-based) this morpheme names.
    """

    host: str
    entry_index: int
    sememe_count: int
    sememe_index: int

    def __post_init__(self) -> None:
        if len(self.host) != 1:
            raise EncodingError(f"host must be a single code point, got {self.host!r}")
        if self.entry_index < 1 or self.sememe_count < 1 or self.sememe_index < 1:
            raise EncodingError(f"encoding indices must be positive: {self}")
        if self.sememe_index > self.sememe_count:
            raise EncodingError(
                f"sememe index {self.sememe_index} exceeds sememe count {self.sememe_count} for host {self.host!r}"
            )

    def render(self) -> str:
        """Canonical string form, e.g. ``树1_04_01``."""
        return f"{self.host}{self.entry_index}_{self.sememe_count:02d}_{self.sememe_index:02d}"

    def __str__(self) -> str:
        return self.render()


def parse_encoding(text: str) -> MorphemeEncoding:
    """Parse an encoded morpheme identifier of the form host + N_NN_NN.

    Zero padding of the two sense fields is optional on input; the canonical
    rendering always pads them to two digits.
    """
    text = text.strip()
    if not text:
        raise EncodingError("empty encoding")
    # Host is everything before the first ASCII digit.
    split = None
    for i, ch in enumerate(text):
        if ch.isascii() and ch.isdigit():
            split = i
            break
    if split is None or split == 0:
        raise EncodingError(f"encoding {text!r} has no host/digit structure")
    host, rest = text[:split], text[split:]
    if len(host) != 1:
        raise EncodingError(f"host must be a single code point in {text!r}")
    parts = rest.split("_")
    if len(parts) != 3 or not all(p.isascii() and p.isdigit() and p for p in parts):
        raise EncodingError(f"encoding {text!r} must look like <host><X1>_<X2>_<X3>")
    enc = MorphemeEncoding(host, int(parts[0]), int(parts[1]), int(parts[2]))
    return enc


def render_encoding(encoding: MorphemeEncoding) -> str:
    return encoding.render()


@dataclass(frozen=True, slots=True)
class Morpheme:
    """One sense of one character, with its gloss and POS."""

    encoding: MorphemeEncoding
    definition: str
    pos: POSTag


@dataclass(frozen=True)
class MorphemicConcept:
    """A set of morphemes sharing one sememe; named after its first member."""

    id: str
    members: tuple[MorphemeEncoding, ...]
    pos: POSTag
    gloss: str = ""

    @property
    def member_ids(self) -> tuple[str, ...]:
        return tuple(m.render() for m in self.members)

    @property
    def hosts(self) -> frozenset[str]:
        return frozenset(m.host for m in self.members)


@dataclass(frozen=True, slots=True)
class WordEntry:
    """A disyllabic word with POS, formation pattern and two concept bindings."""

    surface: str
    pos: POSTag
    pattern: WordFormationPattern
    first_mc: str
    second_mc: str


@dataclass
class Lexicon:
    """Validated, fully indexed lexicon; treat as immutable once loaded."""

    morphemes: dict[str, Morpheme]
    mcs: dict[str, MorphemicConcept]
    words: list[WordEntry]
    mc_of_morpheme: dict[str, str] = field(default_factory=dict)
    words_by_pos: dict[POSTag, list[WordEntry]] = field(default_factory=dict)
    words_by_pattern: dict[WordFormationPattern, list[WordEntry]] = field(default_factory=dict)
    mcs_by_pos: dict[POSTag, list[str]] = field(default_factory=dict)

    def __post_init__(self) -> None:
        if not self.mc_of_morpheme:
            for mc in self.mcs.values():
                for member in mc.members:
                    self.mc_of_morpheme[member.render()] = mc.id
        if not self.words_by_pos:
            by_pos: dict[POSTag, list[WordEntry]] = defaultdict(list)
            by_pattern: dict[WordFormationPattern, list[WordEntry]] = defaultdict(list)
            for w in self.words:
                by_pos[w.pos].append(w)
                by_pattern[w.pattern].append(w)
            self.words_by_pos = dict(by_pos)
            self.words_by_pattern = dict(by_pattern)
        if not self.mcs_by_pos:
            mby: dict[POSTag, list[str]] = defaultdict(list)
            for mc in self.mcs.values():
                mby[mc.pos].append(mc.id)
            self.mcs_by_pos = dict(mby)

    @property
    def hosts(self) -> set[str]:
        return {m.encoding.host for m in self.morphemes.values()}


def _read_tsv(path: Path, n_fields: int, optional_last: bool = False) -> Iterable[tuple[int, list[str]]]:
    """Yield (line_number, fields) for each data line of a TSV file."""
    with open(path, encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.rstrip("\n")
            if not line.strip() or line.lstrip().startswith("#"):
                continue
            fields = line.split("\t")
            if len(fields) == n_fields - 1 and optional_last:
                fields.append("")
            yield lineno, fields


def _is_noncompound_binding(entry: WordEntry, mc: MorphemicConcept) -> bool:
    # A noncompound word carries one whole-word sememe: both slots point to
    # the same single-member concept, whose host is one of the surface
    # characters by convention, so the per-slot host check does not apply.
    return (
        entry.pattern is WordFormationPattern.NONCOMPOUND
        and entry.first_mc == entry.second_mc
        and len(mc.members) == 1
    )


def load_lexicon(
    morpheme_file: str | Path,
    mc_file: str | Path,
    word_file: str | Path,
) -> Lexicon:
    """Load and cross-validate the three lexicon files.

    Raises :class:`LexiconError` carrying every problem found (duplicate
    encodings, a morpheme claimed by two concepts, dangling references,
    surface characters that are not hosts of the bound concepts, ...),
    each with file and line context.
    """
    morpheme_file, mc_file, word_file = Path(morpheme_file), Path(mc_file), Path(word_file)
    issues: list[Issue] = []

    for p in (morpheme_file, mc_file, word_file):
        if not p.is_file():
            issues.append(Issue(f"missing lexicon file", file=str(p)))
    if issues:
        raise LexiconError(issues)

    morphemes: dict[str, Morpheme] = {}
    entry_sememe_count: dict[tuple[str, int], tuple[int, int]] = {}
    for lineno, fields in _read_tsv(morpheme_file, 3):
        fname = str(morpheme_file)
        if len(fields) != 3:
            issues.append(Issue(f"expected 3 fields, got {len(fields)}", fname, lineno))
            continue
        enc_text, pos_text, definition = fields
        try:
            enc = parse_encoding(enc_text)
            pos = POSTag.parse(pos_text)
        except (EncodingError, ValueError) as exc:
            issues.append(Issue(str(exc), fname, lineno))
            continue
        definition = unicodedata.normalize("NFC", definition.strip())
        if not definition:
            issues.append(Issue(f"empty definition for {enc}", fname, lineno))
            continue
        key = enc.render()
        if key in morphemes:
            issues.append(Issue(f"duplicate encoding {key}", fname, lineno))
            continue
        # The sememe count is a property of the host entry, not of one sense.
        ekey = (enc.host, enc.entry_index)
        if ekey in entry_sememe_count:
            count, first_line = entry_sememe_count[ekey]
            if count != enc.sememe_count:
                issues.append(
                    Issue(
                        f"sememe count {enc.sememe_count} for {key} conflicts with "
                        f"{count} declared at line {first_line}",
                        fname,
                        lineno,
                    )
                )
                continue
        else:
            entry_sememe_count[ekey] = (enc.sememe_count, lineno)
        morphemes[key] = Morpheme(enc, definition, pos)

    mcs: dict[str, MorphemicConcept] = {}
    mc_of_morpheme: dict[str, str] = {}
    for lineno, fields in _read_tsv(mc_file, 4, optional_last=True):
        fname = str(mc_file)
        if len(fields) != 4:
            issues.append(Issue(f"expected 3 or 4 fields, got {len(fields)}", fname, lineno))
            continue
        mc_id, pos_text, members_text, gloss = fields
        try:
            pos = POSTag.parse(pos_text)
        except ValueError as exc:
            issues.append(Issue(str(exc), fname, lineno))
            continue
        member_keys = [m.strip() for m in members_text.split(",") if m.strip()]
        if not member_keys:
            issues.append(Issue(f"concept {mc_id} has no members", fname, lineno))
            continue
        members: list[MorphemeEncoding] = []
        ok = True
        for key in member_keys:
            morpheme = morphemes.get(key)
            if morpheme is None:
                issues.append(Issue(f"concept {mc_id} lists unknown morpheme {key}", fname, lineno))
                ok = False
                continue
            if morpheme.pos is not pos:
                issues.append(
                    Issue(f"member {key} has POS {morpheme.pos.value}, concept {mc_id} is {pos.value}", fname, lineno)
                )
                ok = False
            prev = mc_of_morpheme.get(key)
            if prev is not None:
                issues.append(Issue(f"morpheme {key} already belongs to concept {prev}", fname, lineno))
                ok = False
            members.append(morpheme.encoding)
        if not ok:
            continue
        if mc_id.strip() != member_keys[0]:
            issues.append(Issue(f"concept id {mc_id!r} must equal its first member {member_keys[0]!r}", fname, lineno))
            continue
        if mc_id in mcs:
            issues.append(Issue(f"duplicate concept id {mc_id}", fname, lineno))
            continue
        mcs[mc_id] = MorphemicConcept(mc_id, tuple(members), pos, gloss.strip())
        for key in member_keys:
            mc_of_morpheme[key] = mc_id

    words: list[WordEntry] = []
    seen_surfaces: dict[str, int] = {}
    for lineno, fields in _read_tsv(word_file, 5):
        fname = str(word_file)
        if len(fields) != 5:
            issues.append(Issue(f"expected 5 fields, got {len(fields)}", fname, lineno))
            continue
        surface, pos_text, pattern_text, first_id, second_id = (f.strip() for f in fields)
        if len(surface) != 2:
            issues.append(Issue(f"surface {surface!r} is not disyllabic", fname, lineno))
            continue
        try:
            pos = POSTag.parse(pos_text)
            pattern = WordFormationPattern.parse(pattern_text)
        except ValueError as exc:
            issues.append(Issue(str(exc), fname, lineno))
            continue
        entry = WordEntry(surface, pos, pattern, first_id, second_id)
        bound_ok = True
        for slot, (mc_id, char) in enumerate(((first_id, surface[0]), (second_id, surface[1])), start=1):
            mc = mcs.get(mc_id)
            if mc is None:
                issues.append(Issue(f"word {surface} references unknown concept {mc_id}", fname, lineno))
                bound_ok = False
                continue
            if char not in mc.hosts and not _is_noncompound_binding(entry, mc):
                issues.append(
                    Issue(
                        f"character {char!r} of {surface} is not a host in concept {mc_id} "
                        f"(hosts: {','.join(sorted(mc.hosts))})",
                        fname,
                        lineno,
                    )
                )
                bound_ok = False
        if not bound_ok:
            continue
        if surface in seen_surfaces:
            issues.append(Issue(f"duplicate word {surface} (first at line {seen_surfaces[surface]})", fname, lineno))
            continue
        seen_surfaces[surface] = lineno
        words.append(entry)

    if issues:
        raise LexiconError(issues)
    return Lexicon(morphemes=morphemes, mcs=mcs, words=words)


def load_lexicon_dir(directory: str | Path) -> Lexicon:
    """Load a lexicon from a directory holding the three standard files."""
    directory = Path(directory)
    return load_lexicon(directory / MORPHEME_FILE, directory / MC_FILE, directory / WORD_FILE)


# ---------------------------------------------------------------------------
# Advisory clustering of sense definitions


def _gloss_tokens(gloss: str) -> Counter:
    """Code-point unigrams plus adjacent bigrams, as a multiset."""
    points = list(gloss)
    tokens = Counter(points)
    tokens.update("".join(pair) for pair in zip(points, points[1:]))
    return tokens


def dice_similarity(gloss_a: str, gloss_b: str) -> float:
    """Dice coefficient of the two glosses' token multisets, in [0, 1]."""
    ta, tb = _gloss_tokens(gloss_a), _gloss_tokens(gloss_b)
    total = sum(ta.values()) + sum(tb.values())
    if total == 0:
        return 0.0
    overlap = sum((ta & tb).values())
    return 2.0 * overlap / total


def suggest_sms_clusters(
    definitions: Sequence[tuple[str, str]],
    min_overlap: float,
) -> list[list[str]]:
    """Group sense definitions whose wording overlaps strongly.

    Greedy single-link: pairs are merged in order of descending Dice
    similarity (ties broken lexicographically by encoding), stopping below
    ``min_overlap``. Advisory output only; the caller's lexicon is untouched.
    Returns a partition of the input encodings, clusters and members sorted
    lexicographically.
    """
    items = sorted(definitions, key=lambda kv: kv[0])
    n = len(items)
    if n == 0:
        return []
    parent = list(range(n))

    def find(i: int) -> int:
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    pairs = []
    for i in range(n):
        for j in range(i + 1, n):
            sim = dice_similarity(items[i][1], items[j][1])
            if sim >= min_overlap:
                pairs.append((-sim, items[i][0], items[j][0], i, j))
    for _, _, _, i, j in sorted(pairs):
        ri, rj = find(i), find(j)
        if ri != rj:
            parent[max(ri, rj)] = min(ri, rj)

    groups: dict[int, list[str]] = defaultdict(list)
    for i in range(n):
        groups[find(i)].append(items[i][0])
    return sorted(sorted(g) for g in groups.values())


# ---------------------------------------------------------------------------
# Summary statistics


@dataclass
class LexiconStats:
    characters: int
    morphemes: int
    mcs: int
    words: int
    mcs_per_pos: dict[str, int]
    pattern_counts: dict[str, int]
    pattern_percentages: dict[str, float]

    def to_tsv(self) -> str:
        lines = [
            f"characters\t{self.characters}",
            f"morphemes\t{self.morphemes}",
            f"mcs\t{self.mcs}",
            f"words\t{self.words}",
        ]
        for pos, count in sorted(self.mcs_per_pos.items()):
            lines.append(f"mcs.{pos}\t{count}")
        for pattern, count in sorted(self.pattern_counts.items(), key=lambda kv: (-kv[1], kv[0])):
            lines.append(f"pattern.{pattern}\t{count}\t{self.pattern_percentages[pattern]:.2f}%")
        return "\n".join(lines) + "\n"


def lexicon_stats(lexicon: Lexicon) -> LexiconStats:
    """Counts of morphemes, concepts per POS, words, and pattern shares."""
    pattern_counts = {p.value: len(ws) for p, ws in lexicon.words_by_pattern.items()}
    total_words = len(lexicon.words)
    percentages = {
        name: (100.0 * count / total_words if total_words else 0.0) for name, count in pattern_counts.items()
    }
    return LexiconStats(
        characters=len(lexicon.hosts),
        morphemes=len(lexicon.morphemes),
        mcs=len(lexicon.mcs),
        words=total_words,
        mcs_per_pos={pos.value: len(ids) for pos, ids in lexicon.mcs_by_pos.items()},
        pattern_counts=pattern_counts,
        pattern_percentages=percentages,
    )
