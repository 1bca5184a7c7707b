#!/usr/bin/env python3
"""Regenerates assets/pinyin.tsv (CJK Unified Ideographs U+4E00..U+9FA5).

Each line is char<TAB>syllable: the most common reading, tone marks removed,
"ü" written as "v". Requires `pip install pypinyin`.
"""
import sys

from pypinyin import Style, lazy_pinyin


def main(out_path: str) -> None:
    with open(out_path, "w", encoding="utf-8", newline="\n") as out:
        for cp in range(0x4E00, 0x9FA6):
            ch = chr(cp)
            syllable = lazy_pinyin(ch, style=Style.NORMAL, v_to_u=False)[0]
            if syllable == ch or not syllable.isascii() or not syllable.isalpha():
                continue
            out.write(f"{ch}\t{syllable.lower()}\n")


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else "assets/pinyin.tsv")
