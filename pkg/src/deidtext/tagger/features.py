"""Feature templates for the sequence tagger.

The template set is fixed and versioned; every feature string starts with
its template id, so features from different templates can never collide.
Per position the templates are: bias, lowercased words in a +/-2 window,
word shapes in a +/-1 window, prefixes/suffixes of the current word up to
length 4, six surface flags, and the previous tag.
"""

from __future__ import annotations

from typing import Sequence

TEMPLATE_VERSION = "1"

# sentinels for contexts beyond the sentence edges and for the tag before
# the first token
PAD_LEFT = "<s>"
PAD_RIGHT = "</s>"
BOUNDARY_TAG = "<s>"

_FLAG = {True: "true", False: "false"}


def word_shape(word: str) -> str:
    """Uppercase -> X, lowercase -> x, digit -> d, others literal; runs
    longer than 3 collapse to length 3 ("Birchwood" -> "Xxxx")."""
    out: list[str] = []
    run_char = ""
    run_len = 0
    for ch in word:
        if ch.isupper():
            mapped = "X"
        elif ch.islower():
            mapped = "x"
        elif ch.isdigit():
            mapped = "d"
        else:
            mapped = ch
        if mapped == run_char:
            run_len += 1
            if run_len <= 3:
                out.append(mapped)
        else:
            run_char = mapped
            run_len = 1
            out.append(mapped)
    return "".join(out)


def _window_word(words: Sequence[str], j: int) -> str:
    if j < 0:
        return PAD_LEFT
    if j >= len(words):
        return PAD_RIGHT
    return words[j].lower()


def _window_shape(words: Sequence[str], j: int) -> str:
    if j < 0:
        return PAD_LEFT
    if j >= len(words):
        return PAD_RIGHT
    return word_shape(words[j])


def static_features(words: Sequence[str], index: int) -> list[str]:
    """All templates except prev_tag; depends only on the token window."""
    w = words[index]
    lw = w.lower()
    feats = [
        "bias",
        f"w-2={_window_word(words, index - 2)}",
        f"w-1={_window_word(words, index - 1)}",
        f"w0={lw}",
        f"w+1={_window_word(words, index + 1)}",
        f"w+2={_window_word(words, index + 2)}",
        f"shape-1={_window_shape(words, index - 1)}",
        f"shape0={word_shape(w)}",
        f"shape+1={_window_shape(words, index + 1)}",
    ]
    for length in range(1, min(4, len(lw)) + 1):
        feats.append(f"pre{length}={lw[:length]}")
    for length in range(1, min(4, len(lw)) + 1):
        feats.append(f"suf{length}={lw[-length:]}")
    feats.append(f"is_all_digits={_FLAG[w.isdigit()]}")
    feats.append(f"contains_digit={_FLAG[any(c.isdigit() for c in w)]}")
    feats.append(f"contains_slash={_FLAG['/' in w]}")
    feats.append(f"contains_hyphen={_FLAG['-' in w]}")
    feats.append(f"is_all_caps={_FLAG[w.isupper()]}")
    feats.append(f"is_title_case={_FLAG[_is_title(w)]}")
    return feats


def _is_title(w: str) -> bool:
    return w[0].isupper() and (len(w) == 1 or w[1:].islower())


def extract_features(words: Sequence[str], index: int, prev_tag: str) -> list[str]:
    """Full feature list for one position given the previously emitted tag."""
    feats = static_features(words, index)
    feats.append(f"prev_tag={prev_tag}")
    return feats
