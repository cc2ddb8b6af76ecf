#!/usr/bin/env python3
# Copyright 2026 The tbltag Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#  http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Generate the bundled synthetic tagged mini-corpus.

Sentences come from a small phrase-structure grammar over a Penn-style
tagset. Word forms are drawn with a Zipf-like skew from a lexicon of
invented stems, so held-out text has unknown words whose tags follow
their morphology, and a set of noun/verb homographs whose tag depends on
context.

    python3 tools/gen_minicorpus.py > data/minicorpus.tagged
"""

import argparse
import random
import sys

SYLLABLES = ["ba", "ko", "ri", "mel", "dan", "tor", "vi", "lu", "sen", "pra",
             "gal", "fen", "ru", "tam", "zo", "kir", "ple", "nor", "shu", "wem"]

DETERMINERS = ["the", "a", "this", "every", "some"]
PRONOUNS = ["he", "she", "they", "we", "it"]
MODALS = ["can", "will", "may", "must", "should"]
PREPOSITIONS = ["in", "on", "with", "from", "near", "of"]
ADVERBS = ["often", "never", "soon", "here", "again"]
CONJ = ["and", "but"]
NAMES = ["Mara", "Oskar", "Lena", "Tobin", "Ulla", "Perrin", "Greta", "Hollis"]
NUMBERS = ["two", "three", "4", "12", "seven"]

# Noun/verb homographs: base form, tags NN or VB/VBP by context.
HOMOGRAPHS = ["run", "walk", "plan", "call", "work", "fish", "play", "rest",
              "watch", "cook", "dance", "fight"]
NOUNS = ["house", "river", "window", "garden", "letter", "table", "road",
         "market", "stone", "forest", "doctor", "teacher", "city", "paper"]
VERBS = ["see", "find", "open", "carry", "visit", "paint", "clean", "build",
         "follow", "help"]
ADJECTIVES = ["tall", "old", "green", "quiet", "small", "bright", "cold",
              "heavy"]


def invent(rng, n, min_syl=2, max_syl=3):
    out = set()
    while len(out) < n:
        out.add("".join(rng.choice(SYLLABLES)
                        for _ in range(rng.randint(min_syl, max_syl))))
    return sorted(out)


class Vocab:
    def __init__(self, rng):
        self.rng = rng
        self.nouns = NOUNS + invent(rng, 120)
        self.verbs = VERBS + invent(rng, 80)
        self.adjs = ADJECTIVES + [s + "ful" for s in invent(rng, 25)] + \
            [s + "ous" for s in invent(rng, 25)]
        self.names = NAMES + [s.capitalize() for s in invent(rng, 40)]

    def pick(self, items, skew=1.1):
        weights = [1.0 / (i + 1) ** skew for i in range(len(items))]
        return self.rng.choices(items, weights=weights)[0]


def past(v):
    if v.endswith("e"):
        return v + "d"
    if v.endswith("y") and len(v) > 2 and v[-2] not in "aeiou":
        return v[:-1] + "ied"
    return v + "ed"


def gerund(v):
    if v.endswith("e") and not v.endswith("ee"):
        return v[:-1] + "ing"
    return v + "ing"


def third(v):
    if v.endswith(("s", "sh", "ch", "x")):
        return v + "es"
    if v.endswith("y") and len(v) > 2 and v[-2] not in "aeiou":
        return v[:-1] + "ies"
    return v + "s"


def plural(n):
    if n.endswith(("s", "sh", "ch", "x")):
        return n + "es"
    if n.endswith("y") and len(n) > 2 and n[-2] not in "aeiou":
        return n[:-1] + "ies"
    return n + "s"


class Grammar:
    def __init__(self, rng):
        self.rng = rng
        self.v = Vocab(rng)

    def noun(self):
        r = self.rng.random()
        if r < 0.2:
            return self.rng.choice(HOMOGRAPHS)
        return self.v.pick(self.v.nouns)

    def verb(self):
        r = self.rng.random()
        if r < 0.3:
            return self.rng.choice(HOMOGRAPHS)
        return self.v.pick(self.v.verbs)

    def np(self, plural_ok=True):
        rng = self.rng
        r = rng.random()
        if r < 0.15:
            return [(rng.choice(PRONOUNS), "PRP")], False
        if r < 0.27:
            return [(self.v.pick(self.v.names), "NNP")], False
        out = []
        is_plural = plural_ok and rng.random() < 0.35
        if is_plural:
            if rng.random() < 0.4:
                out.append((rng.choice(NUMBERS), "CD"))
            elif rng.random() < 0.5:
                out.append(("the", "DT"))
        else:
            out.append((rng.choice(DETERMINERS), "DT"))
        if rng.random() < 0.35:
            out.append((self.v.pick(self.v.adjs), "JJ"))
        n = self.noun()
        out.append((plural(n), "NNS") if is_plural else (n, "NN"))
        if rng.random() < 0.15:
            out.append((rng.choice(PREPOSITIONS), "IN"))
            sub, _ = self.np(plural_ok=False)
            out.extend(sub)
        return out, is_plural

    def vp(self, subject_plural, subject_pronoun):
        rng = self.rng
        v = self.verb()
        r = rng.random()
        out = []
        if r < 0.25:
            out.append((rng.choice(MODALS), "MD"))
            if rng.random() < 0.2:
                out.append(("not", "RB"))
            out.append((v, "VB"))
        elif r < 0.45:
            out.append((past(v), "VBD"))
        elif r < 0.55:
            out.append(("is" if not subject_plural else "are",
                        "VBZ" if not subject_plural else "VBP"))
            out.append((gerund(v), "VBG"))
        elif r < 0.62:
            agree = subject_plural or subject_pronoun
            out.append(("want", "VBP") if agree else ("wants", "VBZ"))
            out.append(("to", "TO"))
            out.append((v, "VB"))
        else:
            if subject_plural or subject_pronoun:
                out.append((v, "VBP"))
            else:
                out.append((third(v), "VBZ"))
        if rng.random() < 0.7:
            obj, _ = self.np()
            out.extend(obj)
        if rng.random() < 0.2:
            out.append((rng.choice(ADVERBS), "RB"))
        elif rng.random() < 0.15:
            out.append((self.v.pick(self.v.adjs[len(ADJECTIVES):]) + "ly", "RB"))
        return out

    def as_as(self):
        adj = self.v.pick(self.v.adjs)
        obj, _ = self.np(plural_ok=False)
        return [("as", "RB"), (adj, "JJ"), ("as", "IN")] + obj

    def clause(self):
        subj, pl = self.np()
        pron = len(subj) == 1 and subj[0][1] == "PRP" and subj[0][0] not in ("he", "she", "it")
        out = subj + self.vp(pl, pron)
        if self.rng.random() < 0.1:
            out += [("as", "IN")] + self.np()[0]
        return out

    def sentence(self):
        out = self.clause()
        r = self.rng.random()
        if r < 0.15:
            out += [(",", ","), (self.rng.choice(CONJ), "CC")] + self.clause()
        elif r < 0.22:
            out = self.np(plural_ok=False)[0] + [("is", "VBZ")] + self.as_as()
        out.append((".", "."))
        return out


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--seed", type=int, default=20261018)
    ap.add_argument("--tokens", type=int, default=5000)
    args = ap.parse_args()

    g = Grammar(random.Random(args.seed))
    total = 0
    lines = []
    while total < args.tokens:
        s = g.sentence()
        total += len(s)
        lines.append(" ".join(f"{w}/{t}" for w, t in s))
    sys.stdout.write("\n".join(lines) + "\n")


if __name__ == "__main__":
    main()
