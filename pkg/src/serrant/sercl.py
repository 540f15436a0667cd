"""Second-stage edit typing: SErCl tag pairs.

An edit's SErCl type pairs the annotation of the source span's head with
the annotation of the correction span's head, written source -> correction.
A side missing entirely (insertion or deletion) is None.  When both sides
carry the same annotation the pair collapses to a single tag.

At the ``upos+feats`` granularity each side is qualified with the values of
the morphological features that are present on both heads but disagree,
ordered by feature name.  Values are written out long and lowercased
(``Number=Sing`` becomes ``singular``); an unlisted value falls back to its
lowercased spelling.  One-sided types never carry qualifiers, since there
is no second head to disagree with.
"""

from __future__ import annotations

from dataclasses import dataclass

from .alignment import Edit
from .errors import AnnotationMissingError
from .ud import AnnotatedSentence, span_head

GRANULARITY_UPOS = "upos"
GRANULARITY_UPOS_FEATS = "upos+feats"
GRANULARITIES = (GRANULARITY_UPOS, GRANULARITY_UPOS_FEATS)

ARROW_ASCII = "->"
ARROW_UNICODE = "→"

FEATURE_VALUE_NAMES = {
    "Sing": "singular",
    "Plur": "plural",
    "Dual": "dual",
    "Pres": "present",
    "Past": "past",
    "Fut": "future",
    "Fin": "finite",
    "Inf": "infinitive",
    "Ger": "gerund",
    "Part": "participle",
    "Imp": "imperative",
    "Ind": "indicative",
    "Sub": "subjunctive",
    "Pos": "positive",
    "Cmp": "comparative",
    "Sup": "superlative",
    "Masc": "masculine",
    "Fem": "feminine",
    "Neut": "neuter",
    "Nom": "nominative",
    "Acc": "accusative",
    "Dat": "dative",
    "Gen": "genitive",
    "1": "first",
    "2": "second",
    "3": "third",
}


@dataclass(frozen=True)
class SerclSide:
    """One side of a type: a UPOS tag (None for an absent side) plus qualifiers."""

    tag: str | None
    qualifiers: tuple[str, ...] = ()

    def __post_init__(self) -> None:
        if self.tag is None and self.qualifiers:
            raise ValueError("an absent side cannot carry qualifiers")


@dataclass(frozen=True)
class SerclType:
    left: SerclSide
    right: SerclSide

    @property
    def collapsed(self) -> bool:
        return self.left == self.right


def display_tag(upos: str) -> str:
    """Canonical capitalisation of a tag: NOUN -> Noun, PROPN -> Propn."""
    return upos.capitalize()


def qualifier_value(value: str) -> str:
    return FEATURE_VALUE_NAMES.get(value, value.lower())


def render_side(side: SerclSide) -> str:
    if side.tag is None:
        return "None"
    text = display_tag(side.tag)
    if side.qualifiers:
        text += ":" + ":".join(side.qualifiers)
    return text


def render(sercl: SerclType, arrow: str = ARROW_ASCII) -> str:
    """Render a type: a single tag when collapsed, else ``left<arrow>right``."""
    if sercl.collapsed:
        return render_side(sercl.left)
    return f"{render_side(sercl.left)}{arrow}{render_side(sercl.right)}"


def classify_sercl(
    edit: Edit,
    src_sentence: AnnotatedSentence | None,
    trg_sentence: AnnotatedSentence | None,
    granularity: str = GRANULARITY_UPOS,
) -> SerclType:
    """Type an edit by its span heads.

    Raises:
        ValueError: for an edit empty on both sides or an unknown
            granularity.
        AnnotationMissingError: when the sentence carrying a non-empty side
            was not supplied.
    """
    if granularity not in GRANULARITIES:
        raise ValueError(f"unknown granularity {granularity!r}")
    has_src = edit.span.end > edit.span.start
    has_trg = edit.cor_end > edit.cor_start
    if not has_src and not has_trg:
        raise ValueError("edit is empty on both sides")

    src_head = trg_head = None
    if has_src:
        if src_sentence is None:
            raise AnnotationMissingError("no annotation for the source sentence")
        src_head = span_head(src_sentence, edit.span.start, edit.span.end)
    if has_trg:
        if trg_sentence is None:
            raise AnnotationMissingError("no annotation for the corrected sentence")
        trg_head = span_head(trg_sentence, edit.cor_start, edit.cor_end)

    left_quals: tuple[str, ...] = ()
    right_quals: tuple[str, ...] = ()
    if granularity == GRANULARITY_UPOS_FEATS and src_head is not None and trg_head is not None:
        shared = sorted(set(src_head.feats) & set(trg_head.feats))
        differing = [name for name in shared if src_head.feats[name] != trg_head.feats[name]]
        left_quals = tuple(qualifier_value(src_head.feats[name]) for name in differing)
        right_quals = tuple(qualifier_value(trg_head.feats[name]) for name in differing)

    left = SerclSide(src_head.upos, left_quals) if src_head is not None else SerclSide(None)
    right = SerclSide(trg_head.upos, right_quals) if trg_head is not None else SerclSide(None)
    return SerclType(left, right)
