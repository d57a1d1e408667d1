"""Deterministic demo corpus: news-register and literature-register English.

The generator expands hand-written sentence templates with register-specific
word banks, giving two categories with genuinely different word-length
profiles: the news register leans on long institutional vocabulary with a
comparatively flat length distribution, the literature register on short
common words with a faster decay. Slot grammar (article–noun, pronoun–verb
and so on) produces the adjacent-word length correlations that separate real
from shuffled series. All text is original and generated from a fixed seed,
so the corpus bytes are reproducible anywhere.

Run ``python -m lengram.demo --out DIR`` to materialise the corpus; the
layout follows the ``<root>/<language>/<genre>/*.txt`` convention and a JSON
manifest is written alongside.
"""

from __future__ import annotations

import argparse
import json
import random
from pathlib import Path

DEFAULT_SEED = 20240817
DEFAULT_NEWS_WORDS = 180_000
DEFAULT_LIT_WORDS = 160_000

_NEWS_BANKS = {
    "inst": [
        "ministry", "parliament", "commission", "committee", "government",
        "council", "regulator", "agency", "federation", "authority",
        "delegation", "secretariat", "coalition", "treasury", "cabinet",
        "senate", "bureau", "exchange", "directorate", "consortium",
    ],
    "said": [
        "announced", "confirmed", "reported", "declared", "acknowledged",
        "estimated", "projected", "cautioned", "signalled", "indicated",
        "suggested", "stressed", "warned", "said", "added", "noted",
        "maintained", "conceded", "repeated", "argued",
    ],
    "policy": [
        "inflation", "investment", "legislation", "negotiations",
        "infrastructure", "unemployment", "productivity", "referendum",
        "manufacturing", "subsidies", "procurement", "regulation",
        "expenditure", "taxation", "tariffs", "budget", "deficit",
        "surplus", "growth", "exports", "imports", "revenue", "lending",
        "wages", "debt", "trade", "funding", "borrowing", "output",
        "spending", "employment", "liquidity", "competition",
    ],
    "adj": [
        "provisional", "unprecedented", "preliminary", "sustained",
        "structural", "controversial", "substantial", "significant",
        "moderate", "gradual", "sharp", "weak", "strong", "fiscal",
        "monetary", "quarterly", "annual", "regional", "national",
        "foreign", "domestic", "revised", "persistent", "broad",
        "renewed", "prolonged", "tentative", "robust",
    ],
    "vinf": [
        "resume", "continue", "accelerate", "stabilise", "deteriorate",
        "improve", "expand", "contract", "recover", "decline", "respond",
        "proceed", "tighten", "weaken", "converge", "rebound",
    ],
    "state": [
        "unchanged", "stable", "fragile", "uncertain", "resilient",
        "subdued", "elevated", "volatile", "balanced", "restrained",
        "exposed", "contained",
    ],
    "event": [
        "the vote", "the review", "the audit", "the election",
        "the hearing", "the summit", "the strike", "the ruling",
        "the consultation", "the downgrade", "the settlement",
        "the announcement", "the referendum", "the adjournment",
    ],
    "role": [
        "spokesman", "economist", "minister", "chairman", "director",
        "analyst", "secretary", "governor", "negotiator", "rapporteur",
        "commissioner", "undersecretary",
    ],
    "surname": [
        "Calder", "Renholm", "Vastey", "Ormond", "Ashworth", "Leverton",
        "Marchbank", "Quillon", "Stannard", "Fenwick", "Harcourt",
        "Odell", "Braithwaite", "Linden", "Morrow", "Caskell",
    ],
    "weekday": ["Monday", "Tuesday", "Wednesday", "Thursday", "Friday"],
    "period": [
        "quarter", "decade", "autumn", "winter", "spring", "summer",
        "year", "month", "week", "session", "recess", "fortnight",
    ],
    "sector": [
        "energy", "transport", "housing", "banking", "insurance",
        "telecoms", "agriculture", "construction", "shipping", "retail",
        "aviation", "utilities", "logistics", "pharmaceuticals",
    ],
    "measure": [
        "forecast", "estimate", "projection", "assessment", "survey",
        "index", "indicator", "benchmark", "target", "threshold",
        "ceiling", "baseline",
    ],
    "body_adv": [
        "sharply", "modestly", "broadly", "markedly", "steadily",
        "unexpectedly", "considerably", "marginally", "abruptly",
        "gradually",
    ],
}

_NEWS_TEMPLATES = [
    "The {inst} {said} on {weekday} that {adj} {policy} would {vinf} "
    "through the coming {period}.",
    "Officials at the {inst} {said} that the {adj} {measure} for {policy} "
    "had moved {body_adv} since {event}.",
    "{surname}, {role} at the {inst}, {said} that {policy} remained "
    "{state} after {event}.",
    "The {adj} {measure} of {sector} {policy} was revised {body_adv}, "
    "the {inst} {said}, citing {adj} pressure on {policy}.",
    "A {role} for the {inst} {said} the {policy} talks would {vinf} "
    "once the {measure} was published.",
    "Analysts expect {sector} {policy} to {vinf} {body_adv} if the "
    "{inst} keeps its {measure} {state}.",
    "In a statement after {event}, the {inst} {said} that {adj} "
    "{policy} and {adj} {policy} were weighing on the {sector} sector.",
    "The {measure} suggests {policy} will {vinf} before {policy} does, "
    "a view the {inst} has {said} repeatedly.",
    "{surname} told the {inst} that the {period} outlook for {policy} "
    "was {state}, although {sector} {policy} might {vinf}.",
    "Negotiators {said} the {adj} agreement on {policy} could {vinf} "
    "pending approval by the {inst}.",
    "The {inst} left its {measure} for {policy} {state} and {said} "
    "that {sector} conditions had improved {body_adv}.",
    "Pressure on {sector} {policy} intensified as the {inst} {said} "
    "its {adj} {measure} pointed to {adj} {policy}.",
    "After {event}, the {role} {said} that {adj} {policy} would be "
    "offset by {adj} {policy} over the {period}.",
    "The {role} responsible for {sector} oversight {said} the {adj} "
    "{policy} framework remained {state}.",
    "Delegates from the {inst} and the {inst2} {said} that talks on "
    "{policy} would {vinf} next {period}.",
    "Critics of the {adj} {policy} bill {said} it would leave {sector} "
    "{policy} {state} for another {period}.",
    "The {inst} published a {adj} {measure} showing {sector} {policy} "
    "rising {body_adv} despite {adj} {policy}.",
    "Markets reacted {body_adv} after {surname} {said} the {inst} "
    "would review its {policy} {measure} before {event}.",
]

_LIT_BANKS = {
    "pron": ["he", "she", "they"],
    "verb": [
        "said", "went", "came", "looked", "turned", "smiled", "sighed",
        "walked", "stood", "sat", "saw", "knew", "felt", "heard",
        "thought", "wondered", "whispered", "laughed", "waited", "stayed",
        "watched", "listened", "remembered", "slept", "dreamed", "wept",
        "lingered", "gathered", "trembled", "followed", "answered",
        "returned", "vanished", "wandered", "hesitated", "considered",
        "recollected", "murmured",
    ],
    "verb_pp": [
        "known", "loved", "left", "kept", "lost", "seen", "found",
        "feared", "forgotten", "carried", "hidden", "held", "treasured",
        "abandoned", "remembered", "imagined",
    ],
    "noun": [
        "room", "door", "window", "garden", "house", "fire", "rain",
        "night", "morning", "evening", "road", "river", "field", "sky",
        "light", "shadow", "voice", "face", "hand", "eyes", "heart",
        "table", "chair", "letter", "book", "candle", "sea", "wind",
        "snow", "tree", "hill", "lamp", "gate", "path", "wall", "bell",
        "cloak", "stair", "hearth", "orchard", "darkness", "distance",
        "twilight", "lantern", "stillness", "children", "stranger",
        "carriage", "curtains", "passage", "chimney", "countryside",
        "afternoon", "happiness", "silence", "memory", "sorrow",
        "kitchen", "meadow", "village", "harbour",
    ],
    "adj": [
        "old", "young", "little", "quiet", "dark", "cold", "warm",
        "soft", "long", "small", "grey", "pale", "kind", "tired",
        "gentle", "empty", "bright", "still", "low", "thin", "deep",
        "faint", "heavy", "sweet", "strange", "weary", "ancient",
        "patient", "solemn", "beautiful", "peculiar", "familiar",
        "unhappy", "crimson", "silver", "golden", "wooden", "narrow",
        "hollow", "distant", "forgotten", "melancholy", "comfortable",
    ],
    "adv": [
        "slowly", "softly", "quietly", "again", "away", "alone", "home",
        "there", "once", "soon", "still", "back", "aside", "apart",
        "presently", "afterwards", "together", "carefully", "certainly",
        "somewhere",
    ],
    "name": [
        "Anna", "Edmund", "Clara", "Henry", "Margaret", "Thomas",
        "Eleanor", "Walter", "Agnes", "Rowan", "Felix", "Miriam",
        "Beatrice", "Nathaniel", "Dorothea", "Sebastian",
    ],
    "place": [
        "the village", "the mill", "the shore", "the meadow",
        "the church", "the market", "the wood", "the bridge",
        "the harbour", "the lane", "the orchard", "the crossroads",
    ],
    "excl": [
        "Come in", "Not yet", "Look there", "Be still", "Wait for me",
        "So it is", "Never mind", "Ah well", "Hush now", "Let it be",
        "Forgive me", "Remember this",
    ],
    "clause": [
        "it is late", "the rain has stopped", "no one will know",
        "we must go soon", "it was always so", "you were right",
        "the fire is low", "I heard it too", "they will not come",
        "it does not matter", "the evening is nearly over",
        "everything is different now", "nobody remembers the garden",
        "the children are asleep upstairs",
    ],
}

_LIT_TEMPLATES = [
    "{Pron} {verb} to the {noun} and {verb2} out at the {noun2}.",
    "\"{excl},\" {pron} said. \"{Clause}.\"",
    "The {adj} {noun} was {adj2} now, and {pron} {verb} {adv}.",
    "It was {adj} in the {noun}, and the {noun2} {verb} under the "
    "{adj2} {noun3}.",
    "{Name} had {verb_pp} the {noun} long before the {noun2} fell.",
    "{Pron} {verb} by the {noun} while the {adj} {noun2} burned low.",
    "At {place} the {noun} stood {adj}, and {name} {verb} past it "
    "without a word.",
    "{Name} {verb} at the {noun}, then {verb2} {adv} toward {place}.",
    "There was a {adj} {noun} by the {noun2}, and beyond it the {noun3} "
    "lay {adj2} and {adj3}.",
    "\"{excl},\" said {name}, and {pron} {verb} the {adj} {noun} {adv}.",
    "{Pron} could not have {verb_pp} it then, but the {noun} was "
    "already {adj}.",
    "In the {adj} {noun} of {place}, {name} {verb} and {verb2} of the "
    "{noun2}.",
    "The {noun} and the {noun2} were {adj} with {noun3}, and {pron} "
    "{verb} {adv}.",
    "{Name} took the {noun} from the {noun2} and {verb} it {adv}.",
    "When the {noun} had gone {adj}, {pron} {verb} to {place} and "
    "{verb2} there till {noun2}.",
    "\"{Clause},\" {pron} said {adv}, \"and {clause2}.\"",
    "{Pron} {verb} the {adj} {noun}; it was {adj2}, {adj3}, and very "
    "{adj4}.",
    "Nothing {verb} in {place} but the {noun} and the {adj} {noun2}.",
]


def _fill(template: str, banks: dict[str, list[str]], rng: random.Random) -> str:
    out = []
    i = 0
    while i < len(template):
        ch = template[i]
        if ch != "{":
            out.append(ch)
            i += 1
            continue
        j = template.index("}", i)
        slot = template[i + 1:j]
        i = j + 1
        capitalise = slot[0].isupper()
        key = slot.lower().rstrip("23456789")
        word = rng.choice(banks[key])
        if capitalise:
            word = word[0].upper() + word[1:]
        out.append(word)
    return "".join(out)


def _paragraph(
    templates: list[str], banks: dict[str, list[str]], rng: random.Random
) -> str:
    sentences = [
        _fill(rng.choice(templates), banks, rng)
        for _ in range(rng.randint(4, 8))
    ]
    return " ".join(sentences)


def _document(
    templates: list[str],
    banks: dict[str, list[str]],
    rng: random.Random,
    target_words: int,
) -> str:
    paragraphs = []
    words = 0
    while words < target_words:
        para = _paragraph(templates, banks, rng)
        paragraphs.append(para)
        words += len(para.split())
    return "\n\n".join(paragraphs) + "\n"


def build_demo_corpus(
    root: Path,
    *,
    news_words: int = DEFAULT_NEWS_WORDS,
    literature_words: int = DEFAULT_LIT_WORDS,
    seed: int = DEFAULT_SEED,
) -> Path:
    """Write the demo corpus under root and return the manifest path."""
    root = Path(root)
    rng = random.Random(seed)
    manifest = []
    specs = [
        ("news", _NEWS_TEMPLATES, _NEWS_BANKS, news_words),
        ("literature", _LIT_TEMPLATES, _LIT_BANKS, literature_words),
    ]
    for genre, templates, banks, total_words in specs:
        directory = root / "en" / genre
        directory.mkdir(parents=True, exist_ok=True)
        written = 0
        doc_index = 0
        while written < total_words:
            target = rng.randint(3500, 5500)
            text = _document(templates, banks, rng, target)
            written += len(text.split())
            rel = f"en/{genre}/{genre}_{doc_index:03d}.txt"
            (root / rel).write_text(text, encoding="utf-8", newline="\n")
            manifest.append({"path": rel, "language": "en", "genre": genre})
            doc_index += 1
    manifest_path = root / "manifest.json"
    with open(manifest_path, "w", encoding="utf-8", newline="\n") as fh:
        json.dump(manifest, fh, indent=2)
        fh.write("\n")
    return manifest_path


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(
        description="Generate the bundled two-genre demo corpus."
    )
    parser.add_argument("--out", type=Path, required=True)
    parser.add_argument("--news-words", type=int, default=DEFAULT_NEWS_WORDS)
    parser.add_argument("--literature-words", type=int, default=DEFAULT_LIT_WORDS)
    parser.add_argument("--seed", type=int, default=DEFAULT_SEED)
    args = parser.parse_args(argv)
    manifest = build_demo_corpus(
        args.out,
        news_words=args.news_words,
        literature_words=args.literature_words,
        seed=args.seed,
    )
    print(f"wrote demo corpus manifest: {manifest}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
