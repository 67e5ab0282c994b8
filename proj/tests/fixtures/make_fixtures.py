#!/usr/bin/env python3
"""Regenerates the checked-in test fixtures. Output is deterministic."""

import json
import math
import os
import random

HERE = os.path.dirname(os.path.abspath(__file__))
HEADER = "id\taudio_path\tsrc_text\tspeaker_gender\tcategory\tterms"


def write(path, text):
    path = os.path.join(HERE, path)
    os.makedirs(os.path.dirname(path), exist_ok=True)
    with open(path, "w", encoding="utf-8", newline="\n") as f:
        f.write(text)


def mel_centers(n_bins=80, sr=16000.0, low=20.0):
    hz_to_mel = lambda hz: 2595.0 * math.log10(1.0 + hz / 700.0)
    mel_to_hz = lambda mel: 700.0 * (10.0 ** (mel / 2595.0) - 1.0)
    lo, hi = hz_to_mel(low), hz_to_mel(sr / 2)
    step = (hi - lo) / (n_bins + 1)
    return [mel_to_hz(lo + step * (i + 1)) for i in range(n_bins)]


def small_benchmarks():
    rows = [
        "u1\tu1.wav\tI became a student\tF\t1\tbecame:diventata:diventato:F",
        "u2\tu2.wav\tI am tired\tM\t1\tstanca:stanco:M",
        "u3\tu3.wav\tI was born and I am sure\tF\t1\tnata:nato:F;sicura:sicuro:F",
    ]
    write("benchmark_3rows.tsv", HEADER + "\n" + "\n".join(rows) + "\n")

    rows12 = []
    for i in range(1, 13):
        g = "F" if i % 2 else "M"
        rows12.append(f"s{i:02d}\ts{i:02d}.wav\tI am ready {i}\t{g}\t1\tpronta:pronto:{g}")
    # line 5 (row s04): bad gender code; line 10 (row s09): missing column
    rows12[3] = "s04\ts04.wav\tI am ready 4\tX\t1\tpronta:pronto:M"
    rows12[8] = "s09\ts09.wav\tI am ready 9\tF\tpronta:pronto:F"
    write("benchmark_12rows.tsv", HEADER + "\n" + "\n".join(rows12) + "\n")

    # 20 annotations: 4 article pairs, 3 in category 2, 13 kept.
    content = [
        ("f01", "1", "stanca:stanco:F;la:il:F"),
        ("f02", "1", "pronta:pronto:M;una:un:M"),
        ("f03", "1", "nata:nato:F"),
        ("f04", "2", "sicura:sicuro:F"),
        ("f05", "1", "contenta:contento:F;le:gli:F"),
        ("f06", "1", "arrivata:arrivato:M"),
        ("f07", "2", "stata:stato:M;felicissima:felicissimo:M"),
        ("f08", "1", "italiana:italiano:F;La:Il:F"),
        ("f09", "1", "studentessa:studente:F;ricercatrice:ricercatore:F"),
        ("f10", "1", "diventata:diventato:M"),
        ("f11", "1", "seduta:seduto:M;stanca:stanco:M"),
        ("f12", "1", "andata:andato:F;venuta:venuto:F"),
    ]
    lines = [f"{i}\t{i}.wav\tsource {i}\tF\t{c}\t{t}" for i, c, t in content]
    write("filter_20.tsv", HEADER + "\n" + "\n".join(lines) + "\n")


def corpus_1000():
    rng = random.Random(1000)
    vocab = ["la", "il", "lavoro", "diventata", "diventato", "stanca", "stanco", "Stanca",
             "sono", "è", "studentessa", "studente", "città", "perché", "l'", "nata", "nato",
             "così", "a", "b"]
    punct = ["", "", "", ",", ".", "!", "?", ";"]
    lines = []
    for _ in range(1000):
        n = rng.randint(0, 14)
        words = [rng.choice(vocab) + rng.choice(punct) for _ in range(n)]
        lines.append(" ".join(words))
    write("corpus_1000.txt", "\n".join(lines) + "\n")


# Bundle used by the report goldens: features as CSV on the default axis.
BUNDLE = [
    # id, gold, cue_on, hypothesis form choice, category
    ("b01", "F", True, "F", "1"),
    ("b02", "M", False, "M", "1"),
    ("b03", "F", True, "F", "1"),
    ("b04", "M", False, "M", "1"),
    ("b05", "F", False, "M", "1"),  # wrong gender, no cue
    ("b06", "F", True, "F", "1"),
    ("b07", "M", True, "M", "1"),   # generated M against a feminine cue
    ("b08", "F", True, "F", "2"),   # filtered by category
]
TERMS = {
    "b01": ("became", "diventata", "diventato"),
    "b02": ("tired", "stanca", "stanco"),
    "b03": ("born", "nata", "nato"),
    "b04": ("sure", "sicura", "sicuro"),
    "b05": ("ready", "pronta", "pronto"),
    "b06": ("happy", "contenta", "contento"),
    "b07": ("arrived", "arrivata", "arrivato"),
    "b08": ("been", "stata", "stato"),
}
N_BINS, N_FRAMES = 80, 50


def bundle():
    rng = random.Random(2024)
    centers = mel_centers()
    cue_bins = [b for b, hz in enumerate(centers) if 700.0 <= hz <= 1400.0]
    cue_frames = range(20, 30)
    bench, hyps, align = [], [], []
    for uid, gold, cue_on, gen, cat in BUNDLE:
        src, ff, fm = TERMS[uid]
        m = [[rng.uniform(0.0, 0.2) for _ in range(N_FRAMES)] for _ in range(N_BINS)]
        if cue_on:
            for b in cue_bins:
                for t in cue_frames:
                    m[b][t] = 1.0 + rng.uniform(-0.05, 0.05)
        write(f"bundle/features/{uid}.csv",
              "\n".join(",".join(repr(v) for v in row) for row in m) + "\n")
        extra = ""
        if uid == "b01":
            extra = ";la:il:F"
        bench.append(f"{uid}\tfeatures/{uid}.csv\tI {src} today\t{gold}\t{cat}\t{src}:{ff}:{fm}:{gold}{extra}")
        form = ff if gen == "F" else fm
        hyps.append(f"{uid}\tOggi sono {form} , la giornata")
        words = [("Today", 0.0, 0.12), ("I", 0.2, 0.3), (src, 0.32, 0.45)]
        if uid in ("b04", "b07"):
            words = [("I", 0.0, 0.1), (src, 0.12, 0.2), ("today", 0.2, 0.3)]
        align.append({"id": uid, "words": [{"word": w, "start_s": s, "end_s": e} for w, s, e in words]})
    write("bundle/benchmark.tsv", HEADER + "\n" + "\n".join(bench) + "\n")
    write("bundle/hypotheses.tsv", "\n".join(hyps) + "\n")
    write("bundle/alignments.json", json.dumps(align, indent=1) + "\n")

    crng = random.Random(7)
    counts = {"diventata": 3, "diventato": 9, "stanca": 2, "stanco": 2, "nata": 5, "nato": 1,
              "sicura": 0, "sicuro": 4, "pronta": 0, "pronto": 0, "contenta": 1, "contento": 6,
              "arrivata": 2, "arrivato": 7, "stata": 4, "stato": 8}
    filler = ["oggi", "sono", "molto", "la", "il", "giornata", "lavoro", "casa"]
    lines = []
    for word, n in counts.items():
        for k in range(n):
            form = word.capitalize() if k % 3 == 1 else word
            pre = " ".join(crng.choice(filler) for _ in range(crng.randint(0, 4)))
            post = " ".join(crng.choice(filler) for _ in range(crng.randint(0, 4)))
            lines.append(" ".join(x for x in (pre, form + ("," if k % 2 else ""), post) if x))
    for _ in range(20):
        lines.append(" ".join(crng.choice(filler) for _ in range(crng.randint(1, 8))))
    crng.shuffle(lines)
    write("bundle/corpus.txt", "\n".join(lines) + "\n")


if __name__ == "__main__":
    small_benchmarks()
    corpus_1000()
    bundle()
