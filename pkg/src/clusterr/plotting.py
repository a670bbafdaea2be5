"""Figures for reports and computed objects (matplotlib, file output only)."""
import math
import os

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

STYLE = {
    "font.family": "serif",
    "font.size": 9,
    "axes.titlesize": 10,
    "axes.labelsize": 9,
    "xtick.labelsize": 8,
    "ytick.labelsize": 8,
    "axes.spines.top": False,
    "axes.spines.right": False,
    "savefig.dpi": 150,
    "savefig.bbox": "tight",
}

COLORS = {"Pass": "#2b8a3e", "ProbablyPass": "#74b816", "Fail": "#c92a2a", "Error": "#862e9c"}


def _save(fig, path):
    os.makedirs(os.path.dirname(os.path.abspath(path)), exist_ok=True)
    fig.savefig(path)
    plt.close(fig)
    return path


def verdict_summary(reports, path):
    """Stacked bar per check-id prefix (the suite part of the id)."""
    groups = {}
    for r in reports:
        key = r.check_id.split(".")[0]
        groups.setdefault(key, {v: 0 for v in COLORS})[r.verdict] += 1
    names = sorted(groups)
    with plt.rc_context(STYLE):
        fig, ax = plt.subplots(figsize=(max(4, 0.6 * len(names) + 2), 3))
        bottom = [0] * len(names)
        for v, color in COLORS.items():
            vals = [groups[k][v] for k in names]
            if any(vals):
                ax.bar(names, vals, bottom=bottom, color=color, label=v, width=0.6)
                bottom = [b + x for b, x in zip(bottom, vals)]
        ax.set_ylabel("checks")
        ax.set_title("verdicts by group")
        ax.legend(frameon=False, fontsize=7)
        plt.setp(ax.get_xticklabels(), rotation=30, ha="right")
        return _save(fig, path)


def check_times(reports, path, top=30):
    """Horizontal bars of the slowest checks."""
    rs = sorted(reports, key=lambda r: r.wall_time, reverse=True)[:top]
    with plt.rc_context(STYLE):
        fig, ax = plt.subplots(figsize=(6, 0.22 * len(rs) + 1))
        ax.barh([r.check_id for r in rs][::-1], [r.wall_time for r in rs][::-1],
                color=[COLORS[r.verdict] for r in rs][::-1])
        ax.set_xlabel("seconds")
        ax.set_title("slowest checks")
        return _save(fig, path)


def draw_quiver(Q, path, n, m):
    """Unrolled cylinder: cycle c is column c, position i is row i; arrows
    that wrap around are drawn to a ghost copy of the row."""
    with plt.rc_context(STYLE):
        fig, ax = plt.subplots(figsize=(1.2 * (m + 1) + 1, 0.9 * n + 1))
        pos = {v: (v[0], -v[1]) for v in Q.labels if v not in Q.frozen}
        for u, v, w in Q.arrows():
            if u not in pos or v not in pos:
                continue
            (x0, y0), (x1, y1) = pos[u], pos[v]
            if abs(y1 - y0) > 1:
                y1 = y0 - 1 if y1 > y0 else y0 + 1
                style = dict(color="0.6", linestyle="--")
            else:
                style = dict(color="0.2")
            ax.annotate("", xy=(x1, y1), xytext=(x0, y0),
                        arrowprops=dict(arrowstyle="-|>", shrinkA=7, shrinkB=7, lw=0.8, **style))
        for v, (x, y) in pos.items():
            ax.plot(x, y, "o", color="white", mec="0.1", ms=12, zorder=3)
            ax.text(x, y, "%d.%d" % v, ha="center", va="center", fontsize=6, zorder=4)
        ax.set_xlim(-0.6, m + 0.6)
        ax.set_ylim(-n - 1.2, 0.2)
        ax.set_axis_off()
        ax.set_title("quiver, n=%d, m=%d" % (n, m))
        return _save(fig, path)


def draw_paths(net, families, path, title="highway paths"):
    """Non-intersecting families on the network, one panel per family
    (at most 12).  Weighted vertices are filled."""
    families = list(families)[:12]
    cols = min(4, max(1, len(families)))
    rows = max(1, math.ceil(len(families) / cols))
    with plt.rc_context(STYLE):
        fig, axes = plt.subplots(rows, cols, figsize=(2.0 * cols, 2.2 * rows), squeeze=False)
        for ax in axes.flat:
            ax.set_axis_off()
        for ax, fam in zip(axes.flat, families):
            lo = min(min(P.rows()) for P in fam) - 1
            hi = max(max(P.rows()) for P in fam) + 1
            for j in range(1, net.m + 1):
                ax.plot([j, j], [-lo, -hi], color="0.85", lw=0.8)
            for k, P in enumerate(fam):
                color = "C%d" % k
                rows_ = P.rows()
                xs, ys = [0.4], [-rows_[0]]
                for c, (u, r) in enumerate(zip(P.ups, rows_)):
                    j = P.start + c
                    xs.append(j)
                    ys.append(-r)
                    if u:
                        xs.append(j)
                        ys.append(-(r - 1))
                xs.append(net.m + 0.6)
                ys.append(ys[-1])
                ax.plot(xs, ys, color=color, lw=1.2)
                for j, r in P.cells():
                    ax.plot(j, -r, "o", color=color, ms=4)
        fig.suptitle(title)
        return _save(fig, path)
