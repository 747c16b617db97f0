#!/usr/bin/env python3
"""Plot a CSV written by `pdcsq spectrum`, `homodyne` or `gain-sweep`.

    pdcsq spectrum --solutions exact,ma1,ma2,ma3 --out spectrum.csv
    python3 scripts/plot_csv.py spectrum.csv spectrum.png
"""
import csv
import sys

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt


def main(src, dst):
    with open(src, newline="") as f:
        rows = list(csv.reader(f))
    header, data = rows[0], [[float(x) for x in r] for r in rows[1:]]
    cols = {name: [r[i] for r in data] for i, name in enumerate(header)}
    x_name = header[0]
    x = cols[x_name]
    groups = {}
    for name in header[1:]:
        if name == "gamma_real":
            continue
        groups.setdefault(name.split("_")[0], []).append(name)

    fig, axes = plt.subplots(len(groups), 1, sharex=True, squeeze=False,
                             figsize=(7, 3 * len(groups)))
    for ax, (prefix, names) in zip(axes[:, 0], groups.items()):
        if "gamma_real" in cols:
            # shade |theta| < g, where the exact solution is hyperbolic
            ax.fill_between(x, 0, 1, where=[v > 0 for v in cols["gamma_real"]],
                            color="0.9", transform=ax.get_xaxis_transform())
        for name in names:
            ax.plot(x, cols[name], label=name.split("_", 1)[1])
        ax.set_ylabel(prefix)
        ax.legend()
    axes[-1, 0].set_xlabel(x_name)
    fig.tight_layout()
    fig.savefig(dst, dpi=150)


if __name__ == "__main__":
    if len(sys.argv) != 3:
        sys.exit("usage: plot_csv.py input.csv output.png")
    main(sys.argv[1], sys.argv[2])
