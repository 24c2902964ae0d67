#!/usr/bin/env python3
"""Writes the bundled two-class review corpus (data/synthetic_200.csv).

Each document mixes neutral product words, a few class-indicative words in
varied inflections, stop words and punctuation. Some documents borrow a word
from the other class and 8% carry a flipped label, so no setting of the
pipeline separates the classes perfectly.
"""

import argparse
import csv
import random

NEUTRAL = (
    "product service delivery price quality time order store staff package item "
    "experience week day support feature battery screen sound design size color "
    "shipping box phone laptop charger cable manual app update month"
).split()

CLASS_WORDS = {
    "positive": (
        "great excellent love loved loving loves wonderful perfect happy happily recommend "
        "recommended recommending amazing fantastic enjoy enjoyed enjoying pleased reliable "
        "reliably works working worked impressive impressed"
    ).split(),
    "negative": (
        "terrible awful hate hated hating broken disappointed disappointing disappoints poor "
        "poorly refund refunded returned returning useless slow slowly waste wasted annoying "
        "annoyed failed failing fails"
    ).split(),
}

FILLER = "the a it is was and but with for this that my of to very really just so".split()
OPENERS = ["", "Honestly, ", "Well... ", "I think ", "Overall: ", "Note - "]
CONTRACTIONS = ["it's", "didn't", "I'm", "won't", "can't", "they're", "I've"]


def make_doc(rng, label):
    other = "negative" if label == "positive" else "positive"
    words = [rng.choice(NEUTRAL) for _ in range(rng.randint(3, 7))]
    words += [rng.choice(CLASS_WORDS[label]) for _ in range(rng.randint(1, 3))]
    if rng.random() < 0.35:
        words.append(rng.choice(CLASS_WORDS[other]))
    words += [rng.choice(FILLER) for _ in range(rng.randint(2, 5))]
    if rng.random() < 0.4:
        words.append(rng.choice(CONTRACTIONS))
    rng.shuffle(words)
    text = rng.choice(OPENERS) + " ".join(words)
    if rng.random() < 0.3:
        text = text.capitalize()
    return text + rng.choice([".", "!", "!!", "?", ""])


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--out", default="data/synthetic_200.csv")
    ap.add_argument("--docs", type=int, default=200)
    ap.add_argument("--seed", type=int, default=20240611)
    ap.add_argument("--label-noise", type=float, default=0.08)
    args = ap.parse_args()

    rng = random.Random(args.seed)
    seen = set()
    rows = []
    while len(rows) < args.docs:
        label = "positive" if len(rows) % 2 == 0 else "negative"
        text = make_doc(rng, label)
        if text.lower() in seen:
            continue
        seen.add(text.lower())
        if rng.random() < args.label_noise:
            label = "negative" if label == "positive" else "positive"
        rows.append((f"d{len(rows):03d}", text, label))

    with open(args.out, "w", newline="", encoding="utf-8") as f:
        w = csv.writer(f, lineterminator="\n")
        w.writerow(["id", "text", "label"])
        w.writerows(rows)


if __name__ == "__main__":
    main()
