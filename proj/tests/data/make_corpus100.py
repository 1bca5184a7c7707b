#!/usr/bin/env python3
"""Builds corpus100.jsonl: review-style sentences assembled from lexicon
words, keeping only those for which every generator fires under the bundled
assets and seed 0. Usage: make_corpus100.py SCDA_BINARY ASSETS_DIR OUT."""
import json
import os
import random
import subprocess
import sys
import tempfile

TEMPLATES = [
    "{a}{n}{v}{n2}，{n3}{i}",
    "这家{n}{v}{a}{n2}，{i}",
    "{n}和{n2}都很{a}，{v}{n3}",
    "我们{v}{a}{n}，{n2}{i}",
    "{n}{v}{n2}，{a}{n3}也{i}",
    "{a}{n}配{a2}{n2}，真是{i}",
]


def load_lexicon(path):
    by_tag = {}
    with open(path, encoding="utf-8") as f:
        for line in f:
            if line.startswith("#") or not line.strip():
                continue
            word, tag = line.rstrip("\n").split("\t")
            by_tag.setdefault(tag, []).append(word)
    return by_tag


def main(binary, assets, out):
    lex = load_lexicon(os.path.join(assets, "lexicon.tsv"))
    nouns = [w for w in lex["n"] if len(w) >= 2]
    rng = random.Random(20240601)
    labels = ["positive", "negative"]
    candidates = []
    seen = set()
    while len(candidates) < 3000:
        text = rng.choice(TEMPLATES).format(
            a=rng.choice(lex["a"]), a2=rng.choice(lex["a"]),
            n=rng.choice(nouns), n2=rng.choice(nouns), n3=rng.choice(nouns),
            v=rng.choice(lex["v"]), i=rng.choice(lex["i"]))
        if text in seen:
            continue
        seen.add(text)
        candidates.append(text)

    with tempfile.TemporaryDirectory() as tmp:
        src = os.path.join(tmp, "in.jsonl")
        with open(src, "w", encoding="utf-8") as f:
            for k, text in enumerate(candidates):
                f.write(json.dumps({"id": f"c{k}", "text": text, "label": labels[k % 2]},
                                   ensure_ascii=False) + "\n")
        dst = os.path.join(tmp, "out.jsonl")
        subprocess.run([binary, "augment", "--input", src, "--output", dst,
                        "--assets", assets], check=True)
        skipped = set()
        with open(os.path.join(tmp, "out.skips.jsonl"), encoding="utf-8") as f:
            for line in f:
                skipped.add(json.loads(line)["source_id"])

    kept = [t for k, t in enumerate(candidates) if f"c{k}" not in skipped][:100]
    if len(kept) < 100:
        sys.exit(f"only {len(kept)} zero-skip sentences found")
    with open(out, "w", encoding="utf-8") as f:
        for k, text in enumerate(kept):
            f.write(json.dumps({"id": f"s{k:03d}", "text": text, "label": labels[k % 2]},
                               ensure_ascii=False) + "\n")


if __name__ == "__main__":
    main(*sys.argv[1:4])
