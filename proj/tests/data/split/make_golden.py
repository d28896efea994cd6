#!/usr/bin/env python3
# Copyright 2026  The dispeech Authors
# Licensed under the Apache License, Version 2.0 (the "License").
"""Writes manifest.jsonl and split_seed42.json for splitter_test.

The split is recomputed here from scratch with a pure-Python mt19937_64, so
the golden file does not come from the C++ code under test.
"""

import json
import math
import os

MASK = (1 << 64) - 1


class MT19937_64:
    def __init__(self, seed):
        self.mt = [0] * 312
        self.mt[0] = seed & MASK
        for i in range(1, 312):
            prev = self.mt[i - 1]
            self.mt[i] = (6364136223846793005 * (prev ^ (prev >> 62)) + i) & MASK
        self.index = 312

    def _twist(self):
        upper, lower = 0xFFFFFFFF80000000, 0x7FFFFFFF
        for i in range(312):
            x = (self.mt[i] & upper) | (self.mt[(i + 1) % 312] & lower)
            xa = x >> 1
            if x & 1:
                xa ^= 0xB5026F5AA96619E9
            self.mt[i] = self.mt[(i + 156) % 312] ^ xa
        self.index = 0

    def __call__(self):
        if self.index >= 312:
            self._twist()
        y = self.mt[self.index]
        self.index += 1
        y ^= (y >> 29) & 0x5555555555555555
        y ^= (y << 17) & 0x71D67FFFEDA60000
        y ^= (y << 37) & 0xFFF7EEE000000000
        y ^= y >> 43
        return y & MASK


def below(rng, n):
    limit = MASK - MASK % n
    while True:
        x = rng()
        if x < limit:
            return x % n


def shuffle(rng, v):
    for i in range(len(v), 1, -1):
        j = below(rng, i)
        v[i - 1], v[j] = v[j], v[i - 1]


def manifest():
    out = []
    for s in range(20):
        tag = "pitt" if s < 5 else "kempler"
        for k in range(50):
            n = s * 50 + k
            words = ["the", "cookie", "jar"]
            if n % 7 == 0:
                words.insert(1, "uh")
            if n % 11 == 0:
                words.append("um")
            sid = "spk%03d_seg%05d" % (s, k)
            out.append({
                "segment_id": sid,
                "audio_path": "audio/%s.wav" % sid,
                "duration_ms": 1000 + (n * 7919) % 29001,
                "speaker_id": "%s:%d" % (tag, s),
                "corpus_tag": tag,
                "reference_text": " ".join(words),
                "n_uh": words.count("uh"),
                "n_um": words.count("um"),
            })
    return out


def split(entries, seed=42, ratios=(0.8, 0.1, 0.1), tag="pitt"):
    by_speaker = {}
    for e in entries:
        by_speaker.setdefault(e["speaker_id"], []).append(e["segment_id"])
    candidates = sorted(s for s in by_speaker
                        if all(e["corpus_tag"] == tag for e in entries if e["speaker_id"] == s))
    rng = MT19937_64(seed)
    shuffle(rng, candidates)
    test, speakers = set(), []
    for spk in candidates:
        if len(test) >= ratios[2] * len(entries):
            break
        speakers.append(spk)
        test.update(by_speaker[spk])
    rest = sorted(e["segment_id"] for e in entries if e["segment_id"] not in test)
    shuffle(rng, rest)
    share = ratios[0] / (ratios[0] + ratios[1])
    n_train = math.floor(share * len(rest) + 0.5)
    return {
        "train": sorted(rest[:n_train]),
        "val": sorted(rest[n_train:]),
        "test": sorted(test),
        "test_speakers": sorted(speakers),
    }


if __name__ == "__main__":
    here = os.path.dirname(os.path.abspath(__file__))
    entries = manifest()
    with open(os.path.join(here, "manifest.jsonl"), "w") as f:
        for e in entries:
            f.write(json.dumps(e, separators=(",", ":")) + "\n")
    with open(os.path.join(here, "split_seed42.json"), "w") as f:
        json.dump(split(entries), f, indent=2)
        f.write("\n")
