#!/usr/bin/env python3
"""Regenerates the toy resources and fixtures under data/.

Run from the repository root: python3 tools/data/gen_toy_data.py
Output is deterministic; the generated files are checked in.
"""
import json
import os
import random
import sys

sys.path.insert(0, os.path.dirname(__file__))
import toy_en, toy_ja, toy_ko, toy_zh  # noqa: E402

LANGS = {"en": toy_en, "ja": toy_ja, "ko": toy_ko, "zh": toy_zh}
ROOT = os.path.join(os.path.dirname(__file__), "..", "..", "data")


def is_cjk(ch):
    cp = ord(ch)
    return (0x4E00 <= cp <= 0x9FFF or 0x3400 <= cp <= 0x4DBF or 0xF900 <= cp <= 0xFAFF
            or cp == 0x3005 or 0x3041 <= cp <= 0x309F or 0x30A0 <= cp <= 0x30FF
            or 0xFF66 <= cp <= 0xFF9F)


def mock_count(text):
    # Mirrors the mock tokenizer: whitespace pieces, CJK characters one each.
    n = 0
    for piece in text.split():
        run = False
        for ch in piece:
            if is_cjk(ch):
                n += 1
                run = False
            elif not run:
                n += 1
                run = True
    return n


def write(path, text):
    os.makedirs(os.path.dirname(path), exist_ok=True)
    with open(path, "w", encoding="utf-8", newline="\n") as f:
        f.write(text)


def joiner(lang):
    return "" if lang in ("ja", "zh") else " "


def paragraph(rng, mod, lang, k):
    return joiner(lang).join(rng.sample(mod.SENTENCES, k))


def lexicon_rows(mod):
    seen = set()
    rows = []
    for level, words in mod.LEXICON.items():
        for w in words.split():
            if w not in seen:
                seen.add(w)
                rows.append((w, level))
        for p in getattr(mod, "PHRASES", {}).get(level, []):
            if p not in seen:
                seen.add(p)
                rows.append((p, level))
    return rows


def article(rng, mod, lang, idx, target_tokens, oversized):
    paras = [mod.TITLES[idx % len(mod.TITLES)]]
    body = []
    while sum(mock_count(p) for p in body) < target_tokens:
        body.append(paragraph(rng, mod, lang, rng.randint(3, 6)))
    if oversized:
        big = []
        while mock_count(joiner(lang).join(big)) < 600:
            big.append(rng.choice(mod.SENTENCES))
        body.insert(len(body) // 2, joiner(lang).join(big))
    body.insert(2, mod.SHORT)
    paras += body
    paras.append(mod.HEADINGS[idx % len(mod.HEADINGS)] + "\n" + "\n".join(mod.REF_LINES))
    return "\n\n".join(paras) + "\n"


def pgv_doc(rng, mod, lang, doc_id, kind):
    def para(k):
        return {"text": paragraph(rng, mod, lang, k), "type": "paragraph"}

    meta = [
        {"text": mod.TITLES[0], "type": "title"},
        {"text": "crawled 2019-05-01", "crawlinfo": {"source": "globalvoices"}},
    ]
    tail = [
        {"text": mod.SHORT, "type": "caption"},
        {"text": mod.TITLES[1], "type": "contributor"},
    ]
    body = []

    def total():
        return mock_count(" ".join(p["text"] for p in body))

    if kind == "short":
        while total() < 120:
            body.append(para(2))
        while total() >= 300:
            body.pop()
    elif kind == "medium":
        while total() < 380:
            body.append(para(3))
        while total() > 500:
            body.pop()
    elif kind == "long":
        while total() < 700:
            body.append(para(4))
    elif kind == "one_block":
        big = []
        while mock_count(joiner(lang).join(big)) < 650:
            big.append(rng.choice(mod.SENTENCES))
        body.append({"text": joiner(lang).join(big)})
    elif kind == "metadata_only":
        pass
    return {"id": doc_id, "paragraphs": meta[:1] + body[:1] + meta[1:] + body[1:] + tail}


def main():
    rng = random.Random(42)
    for lang, mod in LANGS.items():
        lex = "lemma\tlevel\n" + "".join(f"{w}\t{lv}\n" for w, lv in lexicon_rows(mod))
        write(os.path.join(ROOT, "lexicon", f"vocab_{lang}.tsv"), lex)
        syn = "# surface form\talternatives separated by |\n"
        syn += "".join(f"{h}\t{a}\n" for h, a in mod.SYNONYMS)
        write(os.path.join(ROOT, "synonyms", f"synonyms_{lang}.tsv"), syn)
        lem = "# surface\tlemma\tPOS\n" + "".join(f"{s}\t{l}\t{p}\n" for s, l, p in mod.LEMMAS)
        write(os.path.join(ROOT, "morph", f"lemmas_{lang}.tsv"), lem)
        write(os.path.join(ROOT, "corpus", f"reference_headings_{lang}.txt"),
              "".join(h + "\n" for h in mod.HEADINGS))
        for i in range(4):
            text = article(rng, mod, lang, i, 1100 + 150 * i, oversized=(i == 0))
            write(os.path.join(ROOT, "fixtures", "wiki", lang, f"{lang}_article_{i:02d}.txt"), text)
        for i, kind in enumerate(["short", "medium", "long", "one_block", "metadata_only"]):
            doc = pgv_doc(rng, mod, lang, f"pgv_{lang}_{i:02d}", kind)
            write(os.path.join(ROOT, "fixtures", "pgv", lang, f"pgv_{lang}_{i:02d}.json"),
                  json.dumps(doc, ensure_ascii=False, indent=1) + "\n")


if __name__ == "__main__":
    main()
