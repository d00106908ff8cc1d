"""Seeded generator of IME-style report documents with gold PII spans.

Documents are assembled from a small number of shared structural templates
(header block with addressee address, report date, patient name, and claim
numbers, then 3-8 body paragraphs mentioning doctors, facilities, visit
dates, and license numbers). Structure is deliberately repetitive across
documents within one corpus, the way reports from a single practice share
headings and phrasing. Every inserted PII value sits at whitespace
boundaries, so gold spans are token-aligned by construction.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

from ._jsonutil import dumps as canonical_dumps
from ._rng import MASK64, SplitMix64
from .corpus.markup import parse_annotated
from .corpus.store import save_corpus
from .corpus.types import Corpus, ParseStats, PiiCategory
from .lexicon import (
    CITIES,
    FACILITY_PATTERNS,
    GIVEN_NAMES,
    MONTH_NAMES,
    STATE_ABBREVIATIONS,
    STREET_NAMES,
    STREET_SUFFIXES,
    SURNAMES,
)

MANIFEST_VERSION = 1


@dataclass(frozen=True, slots=True)
class SynthConfig:
    doc_count: int
    seed: int = 0
    structural_variants: int = 3

    def __post_init__(self) -> None:
        if self.doc_count < 2:
            raise ValueError("doc_count must be >= 2 so the corpus can be split")
        if not (0 <= self.seed <= MASK64):
            raise ValueError("seed must be an unsigned 64-bit integer")
        if self.structural_variants < 1:
            raise ValueError("structural_variants must be >= 1")


def _mark(category: PiiCategory, value: str) -> str:
    return f"<START:{category.value}>{value}<END>"


_FILLER = (
    "Range of motion was measured in all planes and compared with accepted norms.",
    "The claimant ambulated without assistive devices during the visit.",
    "Deep tendon reflexes were symmetric and within normal limits.",
    "Strength testing demonstrated no focal deficits.",
    "There was no evidence of atrophy or fasciculation.",
    "Sensation to light touch was intact distally.",
    "Prior conservative care included physical therapy and oral medication.",
    "The radiographs demonstrated maintained joint spaces without acute findings.",
    "An MRI of the affected region was reviewed together with the written report.",
    "The examination findings were discussed at the conclusion of the visit.",
    "No surgical intervention is recommended at this time.",
    "Work restrictions were reviewed and remain appropriate.",
    "Symptom magnification was not observed during testing.",
    "The reported mechanism of injury is consistent with the documented findings.",
    "Gait was non-antalgic and station was unremarkable.",
)

_BODY_PARTS = (
    "lumbar spine", "cervical spine", "right shoulder", "left shoulder",
    "right knee", "left knee", "right wrist", "left wrist", "right hip",
)

# fictional medication names: capitalized non-PII tokens that resemble
# names and places, a classic confusion source for de-identification
_MEDICATIONS = (
    "Flexorol", "Dolophen", "Cartivex", "Naprozil", "Arthrodyn", "Relaxitol",
    "Thermogel", "Lumbarin", "Cervitol", "Ostemax", "Fortiflex", "Analgex",
    "Myorelin", "Tendonex", "Synovol", "Brachiol", "Patellin", "Spondylex",
    "Neurocalm", "Disctrol", "Fasciden", "Ligamax", "Plantaris", "Rotaflex",
    "Scapulon", "Meniscol", "Vertebrin", "Capsulex", "Bursitol", "Tarsomed",
)

_HISTORY_VERBS = (
    "was first evaluated at", "was initially treated at", "first presented to",
    "sought treatment at", "was admitted to", "received initial care at",
)

_EXAM_VERBS = ("I examined", "I evaluated", "I met with", "I assessed")

_RECORDS_SOURCES = (
    "Treatment notes from", "Operative records from", "Therapy notes from",
    "Chart entries from", "Progress notes from", "Billing records from",
)

_REFERRAL_VERBS = (
    "was referred by", "was directed to this office by",
    "was sent for evaluation by", "was scheduled with this office by",
)

_CONSULT_LEADS = (
    "Per the report of", "According to the consultation note of",
    "As documented by", "Consistent with the assessment of",
)

_PLAN_LEADS = (
    "A follow-up evaluation is scheduled for", "A re-examination is planned for",
    "The next visit is set for", "Repeat testing is arranged for",
)

_WITNESS_TAILS = (
    "accompanied the claimant to the appointment",
    "attended the visit with the claimant",
    "provided additional history during the visit",
    "was present throughout the examination",
)

_AUTHOR_LEADS = (
    "The prior evaluation authored by", "An earlier report prepared by",
    "The independent assessment completed by", "A peer review written by",
)

_TRANSFER_LEADS = (
    "Copies of the imaging were forwarded to",
    "The complete chart was transmitted to",
    "Duplicate films were sent to",
    "The file was released to",
)

_HEADINGS = {
    "history": ("HISTORY:", "HISTORY OF PRESENT ILLNESS:", "History:"),
    "records": ("RECORDS REVIEW:", "RECORD REVIEW:", "Records Reviewed:"),
    "exam": ("EXAMINATION:", "PHYSICAL EXAMINATION:", "Examination:"),
    "opinion": ("IMPRESSION:", "DISCUSSION:", "Opinion:"),
}


class _Picker:
    """Draws lexicon values from one deterministic stream."""

    def __init__(self, rng: SplitMix64) -> None:
        self.rng = rng

    def person(self) -> str:
        return f"{self.rng.choice(GIVEN_NAMES)} {self.rng.choice(SURNAMES)}"

    def doctor(self) -> str:
        name = self.person()
        return f"{name}, M.D." if self.rng.below(3) == 0 else name

    def date(self) -> str:
        style = self.rng.below(3)
        month = self.rng.randrange(1, 13)
        day = self.rng.randrange(1, 29)
        year = self.rng.randrange(2008, 2024)
        if style == 0:
            return f"{month}/{day}/{year}"
        if style == 1:
            return f"{MONTH_NAMES[month - 1]} {day}, {year}"
        return f"{month}/{day}"

    def facility(self) -> str:
        pattern = self.rng.choice(FACILITY_PATTERNS)
        return pattern.format(city=self.rng.choice(CITIES), surname=self.rng.choice(SURNAMES))

    def city_state(self) -> str:
        return f"{self.rng.choice(CITIES)}, {self.rng.choice(STATE_ABBREVIATIONS)}"

    def address(self) -> str:
        number = self.rng.randrange(100, 9900)
        street = self.rng.choice(STREET_NAMES)
        suffix = self.rng.choice(STREET_SUFFIXES)
        zip_code = self.rng.randrange(10000, 99999)
        return f"{number} {street} {suffix}, {self.city_state()} {zip_code}"

    def claim_number(self) -> str:
        return f"WC-{self.rng.randrange(10, 24)}-{self.rng.randrange(10000, 99999)}"

    def file_number(self) -> str:
        return (
            f"{self.rng.randrange(100, 999)}-{self.rng.randrange(100, 999)}"
            f"-{self.rng.randrange(1000, 9999)}"
        )

    def license_number(self) -> str:
        return f"{self.rng.choice(STATE_ABBREVIATIONS)}-{self.rng.randrange(10000, 99999)}"

    def filler(self) -> str:
        return self.rng.choice(_FILLER)


def _header(pick: _Picker, variant: int, patient: str) -> str:
    address = _mark(PiiCategory.ADDRESS, pick.address())
    date = _mark(PiiCategory.DATE, pick.date())
    name = _mark(PiiCategory.NAME, patient)
    claim = _mark(PiiCategory.NUMBER, pick.claim_number())
    style = variant % 3
    if style == 0:
        lines = [
            "INDEPENDENT MEDICAL EVALUATION",
            "",
            f"To: {address}",
            f"Date of Report: {date}",
            f"RE: {name}",
            f"Claim Number: {claim}",
        ]
    elif style == 1:
        lines = [
            "INDEPENDENT MEDICAL EXAMINATION REPORT",
            "",
            f"Date: {date}",
            f"Claimant: {name}",
            f"Claim No: {claim}",
            f"File No: {_mark(PiiCategory.NUMBER, pick.file_number())}",
            f"Mailing Address: {address}",
        ]
    else:
        lines = [
            f"RE: {name}",
            f"Examination Date: {date}",
            f"Document No: {claim}",
            f"Address on File: {address}",
        ]
    return "\n".join(lines)


def _heading(pick: _Picker, variant: int, kind: str) -> str:
    return _HEADINGS[kind][variant % 3]


def _paragraph(pick: _Picker, variant: int, kind: str, patient: str, honorific: str) -> str:
    name = _mark(PiiCategory.NAME, patient)
    surname_only = _mark(PiiCategory.NAME, patient.split()[-1])
    if kind == "history":
        return (
            f"{_heading(pick, variant, 'history')} {honorific} {name} "
            f"{pick.rng.choice(_HISTORY_VERBS)} {_mark(PiiCategory.PLACE, pick.facility())} on "
            f"{_mark(PiiCategory.DATE, pick.date())} for complaints involving the "
            f"{pick.rng.choice(_BODY_PARTS)}. {pick.filler()}"
        )
    if kind == "exam":
        return (
            f"{_heading(pick, variant, 'exam')} {pick.rng.choice(_EXAM_VERBS)} "
            f"{honorific} {surname_only} on {_mark(PiiCategory.DATE, pick.date())} at "
            f"{_mark(PiiCategory.PLACE, pick.facility())}. {pick.filler()} {pick.filler()}"
        )
    if kind == "records":
        return (
            f"{_heading(pick, variant, 'records')} {pick.rng.choice(_RECORDS_SOURCES)} "
            f"{_mark(PiiCategory.PLACE, pick.facility())} dated "
            f"{_mark(PiiCategory.DATE, pick.date())} were reviewed. {pick.filler()}"
        )
    if kind == "referral":
        return (
            f"The claimant {pick.rng.choice(_REFERRAL_VERBS)} Dr. "
            f"{_mark(PiiCategory.NAME, pick.person())} of "
            f"{_mark(PiiCategory.PLACE, pick.facility())}. {pick.filler()}"
        )
    if kind == "consult":
        return (
            f"{pick.rng.choice(_CONSULT_LEADS)} {_mark(PiiCategory.NAME, pick.doctor())} "
            f"dated {_mark(PiiCategory.DATE, pick.date())}, conservative care was "
            f"recommended. {pick.filler()}"
        )
    if kind == "plan":
        return (
            f"{pick.rng.choice(_PLAN_LEADS)} {_mark(PiiCategory.DATE, pick.date())} "
            f"in {_mark(PiiCategory.PLACE, pick.city_state())}. {pick.filler()}"
        )
    if kind == "complaint":
        return (
            f"{honorific} {surname_only} reports persistent symptoms in the "
            f"{pick.rng.choice(_BODY_PARTS)}. {pick.filler()}"
        )
    if kind == "witness":
        # bare sentence-initial name: no honorific or title cue
        return (
            f"{_mark(PiiCategory.NAME, pick.person())} "
            f"{pick.rng.choice(_WITNESS_TAILS)} and confirmed the history as given. "
            f"{pick.filler()}"
        )
    if kind == "author":
        return (
            f"{pick.rng.choice(_AUTHOR_LEADS)} {_mark(PiiCategory.NAME, pick.person())} "
            f"reached a similar conclusion. {pick.filler()}"
        )
    if kind == "transfer":
        return (
            f"{pick.rng.choice(_TRANSFER_LEADS)} "
            f"{_mark(PiiCategory.PLACE, pick.facility())} at the claimant's request. "
            f"{pick.filler()}"
        )
    if kind == "medication":
        med1 = pick.rng.choice(_MEDICATIONS)
        med2 = pick.rng.choice(_MEDICATIONS)
        return (
            f"Current medications include {med1} and {med2}. The claimant responded "
            f"to {pick.rng.choice(_MEDICATIONS)} following the injury. {pick.filler()}"
        )
    if kind == "opinion":
        return (
            f"{_heading(pick, variant, 'opinion')} {pick.filler()} In my opinion the "
            f"examination supports the diagnosis as stated."
        )
    raise ValueError(f"unknown paragraph kind {kind!r}")


def _closing(pick: _Picker) -> str:
    return (
        f"Sincerely, Dr. {_mark(PiiCategory.NAME, pick.person())}, License "
        f"{_mark(PiiCategory.NUMBER, pick.license_number())}."
    )


_BODY_KINDS = (
    "records", "referral", "consult", "plan", "complaint", "opinion",
    "witness", "author", "transfer", "medication",
)


def generate_marked_document(pick: _Picker, variant: int) -> str:
    patient = pick.person()
    honorific = pick.rng.choice(("Mr.", "Ms."))
    paragraphs = [_header(pick, variant, patient)]
    # first body paragraph always mentions a facility so every document
    # carries all five categories
    paragraphs.append(
        _paragraph(pick, variant, "history" if variant % 2 == 0 else "exam", patient, honorific)
    )
    extra = pick.rng.randrange(2, 8)  # total body paragraphs: 3-8 with closing
    for _ in range(extra - 1):
        kind = pick.rng.choice(_BODY_KINDS)
        paragraphs.append(_paragraph(pick, variant, kind, patient, honorific))
    paragraphs.append(_closing(pick))
    return "\n\n".join(paragraphs) + "\n"


def generate_corpus(config: SynthConfig, stats: ParseStats | None = None) -> Corpus:
    """Build the corpus; byte-identical for equal configs."""
    rng = SplitMix64(config.seed)
    pick = _Picker(rng)
    docs = []
    for i in range(config.doc_count):
        variant = rng.below(config.structural_variants)
        marked = generate_marked_document(pick, variant)
        docs.append(parse_annotated(marked, doc_id=f"report_{i:04d}", stats=stats))
        if stats is not None:
            stats.documents += 1
    return Corpus(tuple(docs))


def corpus_manifest(corpus: Corpus, config: SynthConfig) -> dict:
    span_counts = {c.value: 0 for c in PiiCategory}
    for adoc in corpus:
        for span in adoc.spans:
            span_counts[span.category.value] += 1
    return {
        "version": MANIFEST_VERSION,
        "seed": config.seed,
        "doc_count": config.doc_count,
        "structural_variants": config.structural_variants,
        "span_counts": span_counts,
        "total_spans": sum(span_counts.values()),
    }


def write_corpus(config: SynthConfig, directory: str | Path) -> dict:
    """Generate, write ``<id>.txt`` files plus ``manifest.json``; returns the manifest."""
    corpus = generate_corpus(config)
    root = Path(directory)
    save_corpus(corpus, root)
    manifest = corpus_manifest(corpus, config)
    (root / "manifest.json").write_text(canonical_dumps(manifest) + "\n", encoding="utf-8")
    return manifest
