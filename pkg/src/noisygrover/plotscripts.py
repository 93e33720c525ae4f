"""Generated matplotlib scripts that render figures from emitted CSV files.

A script is written next to its CSV and opens it by bare file name relative
to its own location, so the pair can be moved together.
"""
import os

_PRELUDE = '''\
"""Render figures from {csv} (generated by noisygrover)."""
import csv
import os

import matplotlib
matplotlib.use("Agg")
import matplotlib.pyplot as plt

HERE = os.path.dirname(os.path.abspath(__file__))
CSV = os.path.join(HERE, {csv!r})
STEM = os.path.join(HERE, {stem!r})
LABELS = ("00", "01", "10", "11")


def load():
    with open(CSV, newline="") as fh:
        return list(csv.DictReader(fh))


def column(rows, name):
    return [float(r[name]) for r in rows]

'''

_NOISE_FREE = '''\
rows = load()
c = column(rows, "c")
fig, ax = plt.subplots()
for label, color in zip(LABELS, ("red", "green", "blue", "black")):
    ax.plot(c, column(rows, "raw_amp_" + label), color=color, label="|%s>" % label)
ax.set_xlabel("concurrence c")
ax.set_ylabel("amplitude (x8)")
ax.legend()
fig.savefig(STEM + ".png", dpi=150)
'''

_CHANNEL = '''\
import numpy as np

rows = load()
a2 = sorted(set(column(rows, "alpha_sq")))
p = sorted(set(column(rows, "p")))
A, P = np.meshgrid(a2, p, indexing="ij")


def grid(name):
    return np.array(column(rows, name)).reshape(len(a2), len(p))


def surface(name, zlabel, suffix):
    fig = plt.figure()
    ax = fig.add_subplot(projection="3d")
    ax.plot_surface(P, A, grid(name), cmap="viridis")
    ax.set_xlabel("p")
    ax.set_ylabel("alpha^2")
    ax.set_zlabel(zlabel)
    ax.set_title({title!r})
    fig.savefig(STEM + suffix + ".png", dpi=150)


surface("concurrence", "concurrence", "_concurrence")
surface("discord", "geometric discord", "_discord")
for label in LABELS:
    surface("prob_" + label, "P(|%s>)" % label, "_prob_" + label)

# Probability against p on the Hadamard line, when the grid contains alpha^2 = 1/2.
if 0.5 in a2:
    i = a2.index(0.5)
    fig, ax = plt.subplots()
    for label in LABELS:
        ax.plot(p, grid("prob_" + label)[i], label="|%s>" % label)
    ax.set_xlabel("p")
    ax.set_ylabel("probability")
    ax.set_title({title!r} + ", alpha = 1/sqrt(2)")
    ax.legend()
    fig.savefig(STEM + "_hadamard.png", dpi=150)
'''

_TITLES = {
    "channel-amplitude": "amplitude damping",
    "channel-phase": "phase damping",
}


def script_path(csv_path):
    stem, _ = os.path.splitext(csv_path)
    return stem + ".plot.py"


def render(figure, csv_path):
    name = os.path.basename(csv_path)
    stem = os.path.splitext(name)[0]
    text = _PRELUDE.format(csv=name, stem=stem)
    if figure == "noise-free":
        return text + _NOISE_FREE
    if figure in _TITLES:
        return text + _CHANNEL.replace("{title!r}", repr(_TITLES[figure]))
    raise ValueError("no plot template for %r" % (figure,))
