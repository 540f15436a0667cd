"""Final edit typing: merge the base category with the SErCl tag pair.

The result is an operation prefix (``M`` missing, ``U`` unnecessary, ``R``
replacement), a body, and optional suffixes, rendered as
``<OP>:<Body>[:<Suffix>...]``.

Bodies come from the base category unless one of the combination rules
swaps in the SErCl pair:

* an OTHER base becomes the SErCl pair, except that edits touching the
  unreliable tags (interjections, numerals, symbols, X, punctuation) or
  turning a proper noun into something else stay OTHER, while a pair of
  proper nouns collapses to ``Propn``;
* a MORPH base becomes the SErCl pair under the same screen, except that
  adjective/proper-noun alternations always keep the pair;
* an ORTH base whose correction head is a proper noun (and whose source
  head is not) becomes the pair, unless the edit starts the sentence;
* a VERB base re-separates auxiliaries: two auxiliary heads give ``Aux``, a
  lone auxiliary head on a one-sided edit gives ``Aux``, a mixed
  replacement gives the pair;
* a VERB:FORM base whose heads go noun to verb becomes the pair;
* PRON and DET bases whose heads cross between pronoun and determiner
  become the pair;
* a VERB:TENSE base is kept when both sides are anchored by be/have lemmas
  or the wordform "will"; a pair of modal verbs becomes ``Modal``; anything
  else becomes the SErCl pair.

One-sided edits drop the absent side from a SErCl body: the prefix already
encodes the direction, so a deleted verb is ``U:Verb``, not ``U:Verb->None``.

Suffixes, in order: ``WC`` on replacements whose body is a single collapsed
tag but whose head lemmas differ (a word-choice change), then ``MW`` on
multi-token edits whose body is an unqualified tag or tag pair.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import base as base_types
from .alignment import Edit
from .base import BaseType
from .sercl import ARROW_ASCII, SerclType, display_tag, render_side
from .ud import AnnotatedSentence, span_head

MODAL_FORMS = frozenset({"can", "could", "may", "might", "shall", "should", "will", "would", "must"})
UNRELIABLE_TAGS = frozenset({"INTJ", "NUM", "SYM", "X", "PUNCT"})
TENSE_LEMMAS = frozenset({"be", "have"})

MISSING = "M"
UNNECESSARY = "U"
REPLACEMENT = "R"

WORD_CHOICE = "WC"
MULTI_WORD = "MW"

_NAMED_BODIES = {
    base_types.SPELL: "Spell",
    base_types.ORTH: "Orth",
    base_types.MORPH: "Morph",
    base_types.OTHER: "Other",
    base_types.VERB_TENSE: "Verb:Tense",
    base_types.VERB_FORM: "Verb:Form",
    base_types.VERB_INFL: "Verb:Infl",
    base_types.VERB_SVA: "Verb:SVA",
    base_types.NOUN_NUM: "Noun:Num",
    base_types.ADJ_FORM: "Adj:Form",
}

# body kinds, used only to decide suffix eligibility
_NAMED = "named"
_TAG = "tag"
_PAIR = "pair"


@dataclass(frozen=True)
class EditContext:
    """Everything the combination rules see about the edit besides its types."""

    sentence_initial: bool
    src_forms: tuple[str, ...]
    trg_forms: tuple[str, ...]
    src_lemmas: tuple[str, ...]
    trg_lemmas: tuple[str, ...]
    src_head_upos: str | None
    trg_head_upos: str | None
    src_head_lemma: str | None
    trg_head_lemma: str | None
    multi_word: bool


@dataclass(frozen=True)
class SerrantType:
    op: str
    body: str
    suffixes: tuple[str, ...] = ()

    def render(self, arrow: str = ARROW_ASCII) -> str:
        body = self.body if arrow == ARROW_ASCII else self.body.replace(ARROW_ASCII, arrow)
        return ":".join((self.op, body) + self.suffixes)


def build_context(
    edit: Edit,
    src_sentence: AnnotatedSentence | None,
    trg_sentence: AnnotatedSentence | None,
) -> EditContext:
    src_tokens = (
        src_sentence.tokens[edit.span.start : edit.span.end] if src_sentence is not None else ()
    )
    trg_tokens = (
        trg_sentence.tokens[edit.cor_start : edit.cor_end] if trg_sentence is not None else ()
    )
    src_head = (
        span_head(src_sentence, edit.span.start, edit.span.end)
        if src_sentence is not None and edit.span.end > edit.span.start
        else None
    )
    trg_head = (
        span_head(trg_sentence, edit.cor_start, edit.cor_end)
        if trg_sentence is not None and edit.cor_end > edit.cor_start
        else None
    )
    return EditContext(
        sentence_initial=edit.span.start == 0,
        src_forms=tuple(t.form for t in src_tokens),
        trg_forms=tuple(t.form for t in trg_tokens),
        src_lemmas=tuple(t.lemma for t in src_tokens),
        trg_lemmas=tuple(t.lemma for t in trg_tokens),
        src_head_upos=src_head.upos if src_head is not None else None,
        trg_head_upos=trg_head.upos if trg_head is not None else None,
        src_head_lemma=src_head.lemma if src_head is not None else None,
        trg_head_lemma=trg_head.lemma if trg_head is not None else None,
        multi_word=len(src_tokens) > 1 or len(trg_tokens) > 1,
    )


def combine(base: BaseType, sercl: SerclType, ctx: EditContext) -> SerrantType:
    """Produce the final type from both classifications and the edit context."""
    if not ctx.src_forms:
        op = MISSING
    elif not ctx.trg_forms:
        op = UNNECESSARY
    else:
        op = REPLACEMENT

    kind, body, qualified = _pick_body(base, sercl, ctx)

    suffixes: list[str] = []
    if (
        kind == _TAG
        and op == REPLACEMENT
        and ctx.src_head_lemma is not None
        and ctx.trg_head_lemma is not None
        and ctx.src_head_lemma != ctx.trg_head_lemma
    ):
        suffixes.append(WORD_CHOICE)
    if ctx.multi_word and kind in (_TAG, _PAIR) and not qualified:
        suffixes.append(MULTI_WORD)
    return SerrantType(op, body, tuple(suffixes))


def _pick_body(base: BaseType, sercl: SerclType, ctx: EditContext) -> tuple[str, str, bool]:
    category = base.category
    s, t = ctx.src_head_upos, ctx.trg_head_upos

    if category == base_types.OTHER:
        if _unreliable(s, t):
            return _named(base_types.OTHER)
        if (s == "PROPN") != (t == "PROPN"):
            return _named(base_types.OTHER)
        if s == "PROPN" and t == "PROPN":
            return (_TAG, display_tag("PROPN"), False)
        return _sercl_body(sercl)

    if category == base_types.MORPH:
        if {s, t} == {"ADJ", "PROPN"}:
            return _sercl_body(sercl)
        if _unreliable(s, t) or (s == "PROPN") != (t == "PROPN"):
            return _named(base_types.OTHER)
        return _sercl_body(sercl)

    if category == base_types.ORTH:
        if not ctx.sentence_initial and t == "PROPN" and s != "PROPN":
            return _sercl_body(sercl)
        return _named(base_types.ORTH)

    if category == base_types.POS and base.pos_payload == "VERB":
        if s == "AUX" and t == "AUX":
            return (_TAG, display_tag("AUX"), False)
        if (s == "AUX" and t is None) or (t == "AUX" and s is None):
            return (_TAG, display_tag("AUX"), False)
        if s == "AUX" or t == "AUX":
            return _sercl_body(sercl)
        return (_TAG, display_tag("VERB"), False)

    if category == base_types.VERB_FORM:
        if s == "NOUN" and t == "VERB":
            return _sercl_body(sercl)
        return _named(base_types.VERB_FORM)

    if category == base_types.POS and base.pos_payload in ("PRON", "DET"):
        if {s, t} == {"PRON", "DET"}:
            return _sercl_body(sercl)
        return (_TAG, display_tag(base.pos_payload), False)

    if category == base_types.VERB_TENSE:
        if _tense_anchored(ctx.src_forms, ctx.src_lemmas) and _tense_anchored(
            ctx.trg_forms, ctx.trg_lemmas
        ):
            return _named(base_types.VERB_TENSE)
        if (
            len(ctx.src_forms) == 1
            and len(ctx.trg_forms) == 1
            and ctx.src_forms[0].lower() in MODAL_FORMS
            and ctx.trg_forms[0].lower() in MODAL_FORMS
        ):
            return (_NAMED, "Modal", False)
        return _sercl_body(sercl)

    if category == base_types.POS:
        return (_TAG, display_tag(base.pos_payload), False)
    return _named(category)


def _named(category: str) -> tuple[str, str, bool]:
    return (_NAMED, _NAMED_BODIES[category], False)


def _unreliable(s: str | None, t: str | None) -> bool:
    return s in UNRELIABLE_TAGS or t in UNRELIABLE_TAGS


def _tense_anchored(forms: tuple[str, ...], lemmas: tuple[str, ...]) -> bool:
    return any(lemma in TENSE_LEMMAS for lemma in lemmas) or any(
        form.lower() == "will" for form in forms
    )


def _sercl_body(sercl: SerclType) -> tuple[str, str, bool]:
    left, right = sercl.left, sercl.right
    # the M/U prefix already records an absent side; keep only the real tag
    if left.tag is None or right.tag is None:
        side = left if right.tag is None else right
        return (_TAG, render_side(side), bool(side.qualifiers))
    if sercl.collapsed:
        return (_TAG, render_side(left), bool(left.qualifiers))
    text = f"{render_side(left)}{ARROW_ASCII}{render_side(right)}"
    return (_PAIR, text, bool(left.qualifiers or right.qualifiers))
