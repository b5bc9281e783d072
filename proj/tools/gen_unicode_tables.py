#!/usr/bin/env python3
"""Regenerates src/unicode_tables.cpp from the unicodedata module.

Emits three tables:
  - punctuation/symbol ranges (general categories P* and S*)
  - whitespace ranges (Zs/Zl/Zp plus the ASCII control whitespace)
  - lowercase mappings (single-codepoint pairs plus the handful of
    expanding mappings such as U+0130)

Run from the repository root:  python3 tools/gen_unicode_tables.py
"""

import sys
import unicodedata

MAX_CP = 0x110000


def ranges_for(pred):
    out = []
    start = None
    for cp in range(MAX_CP):
        if pred(cp):
            if start is None:
                start = cp
        else:
            if start is not None:
                out.append((start, cp - 1))
                start = None
    if start is not None:
        out.append((start, MAX_CP - 1))
    return out


def merge(ranges):
    ranges = sorted(ranges)
    out = []
    for lo, hi in ranges:
        if out and lo <= out[-1][1] + 1:
            out[-1] = (out[-1][0], max(out[-1][1], hi))
        else:
            out.append((lo, hi))
    return out


def main():
    def is_punct_symbol(cp):
        return unicodedata.category(chr(cp))[0] in "PS"

    def is_space_z(cp):
        return unicodedata.category(chr(cp))[0] == "Z"

    punct = ranges_for(is_punct_symbol)
    space = merge(ranges_for(is_space_z) + [(0x09, 0x0D), (0x20, 0x20), (0x85, 0x85)])

    singles = []
    expands = []
    for cp in range(MAX_CP):
        if 0xD800 <= cp <= 0xDFFF:
            continue
        low = chr(cp).lower()
        if low == chr(cp):
            continue
        cps = [ord(c) for c in low]
        if len(cps) == 1:
            singles.append((cp, cps[0]))
        else:
            expands.append((cp, cps))

    with open("src/unicode_tables.cpp", "w") as f:
        w = f.write
        w("// Generated by tools/gen_unicode_tables.py from Python unicodedata "
          f"(Unicode {unicodedata.unidata_version}). Do not edit by hand.\n")
        w('#include "unicode_tables.hpp"\n\n')
        w("namespace plagdet::unitab {\n\n")

        w("const Range kPunctSymbol[] = {\n")
        for lo, hi in punct:
            w(f"    {{0x{lo:X}, 0x{hi:X}}},\n")
        w("};\n")
        w(f"const std::size_t kPunctSymbolCount = {len(punct)};\n\n")

        w("const Range kWhitespace[] = {\n")
        for lo, hi in space:
            w(f"    {{0x{lo:X}, 0x{hi:X}}},\n")
        w("};\n")
        w(f"const std::size_t kWhitespaceCount = {len(space)};\n\n")

        w("const LowerPair kLowerSingle[] = {\n")
        for cp, low in singles:
            w(f"    {{0x{cp:X}, 0x{low:X}}},\n")
        w("};\n")
        w(f"const std::size_t kLowerSingleCount = {len(singles)};\n\n")

        w("const LowerExpand kLowerExpand[] = {\n")
        for cp, cps in expands:
            padded = cps + [0] * (3 - len(cps))
            body = ", ".join(f"0x{c:X}" for c in padded)
            w(f"    {{0x{cp:X}, {{{body}}}, {len(cps)}}},\n")
        w("};\n")
        w(f"const std::size_t kLowerExpandCount = {len(expands)};\n\n")

        w("}  // namespace plagdet::unitab\n")

    print(f"punct/symbol ranges: {len(punct)}", file=sys.stderr)
    print(f"whitespace ranges:   {len(space)}", file=sys.stderr)
    print(f"lower singles:       {len(singles)}", file=sys.stderr)
    print(f"lower expanding:     {len(expands)}", file=sys.stderr)


if __name__ == "__main__":
    main()
