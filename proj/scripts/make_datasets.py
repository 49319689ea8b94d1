#!/usr/bin/env python3
"""Generate the bundled datasets under data/.

The files are checked in; rerun this script only to regenerate them.
Everything is seeded, so reruns reproduce the same bytes.
"""

import random
from pathlib import Path

OUT = Path(__file__).resolve().parent.parent / "data"


def friendship_waves():
    """32 students surveyed in 7 waves; friendships cluster in 4 groups of 8
    and evolve with strong wave-to-wave persistence."""
    rng = random.Random(20240811)
    nodes = [f"s{i:02d}" for i in range(32)]
    group = {n: i // 8 for i, n in enumerate(nodes)}
    pairs = [(a, b) for i, a in enumerate(nodes) for b in nodes[i + 1:]]

    def base_p(a, b):
        return 0.32 if group[a] == group[b] else 0.022

    state = {p: rng.random() < base_p(*p) for p in pairs}
    lines = ["slice,source,target"]
    for wave in range(7):
        if wave > 0:
            for p in pairs:
                if rng.random() > 0.82:  # resample with prob 0.18
                    state[p] = rng.random() < base_p(*p)
        linked = set()
        for (a, b), on in state.items():
            if on:
                lines.append(f"{wave},{a},{b}")
                linked.add(a)
                linked.add(b)
        for n in nodes:  # every student answered every wave
            if n not in linked:
                lines.append(f"{wave},{n},")
    (OUT / "friendship_waves.csv").write_text("\n".join(lines) + "\n")
    edge_rows = sum(1 for l in lines[1:] if not l.endswith(","))
    print(f"friendship_waves.csv: 32 nodes, 7 slices, {edge_rows} edge rows")


def team_mentions():
    """12 teams in 3 conferences; ~650 instant mention events over 120 days,
    mostly between teams of the same conference."""
    rng = random.Random(77031)
    teams = [f"team_{c}{i}" for c in "abc" for i in range(1, 5)]
    conf = {t: t[5] for t in teams}
    events = []
    for _ in range(650):
        t = round(rng.uniform(0.0, 120.0), 3)
        a = rng.choice(teams)
        if rng.random() < 0.78:
            peers = [x for x in teams if x != a and conf[x] == conf[a]]
        else:
            peers = [x for x in teams if conf[x] != conf[a]]
        b = rng.choice(peers)
        events.append((t, a, b))
    events.sort()
    lines = ["time,source,target"] + [f"{t},{a},{b}" for t, a, b in events]
    (OUT / "team_mentions.csv").write_text("\n".join(lines) + "\n")
    print(f"team_mentions.csv: {len(teams)} nodes, {len(events)} events")


def toys():
    (OUT / "toy_2slices.csv").write_text(
        "slice,source,target\n"
        "0,a,b\n"
        "0,b,c\n"
        "0,d,\n"
        "1,a,b\n"
        "1,a,c\n"
        "1,d,\n"
    )
    (OUT / "toy_events.csv").write_text(
        "time,source,target,duration,label\n"
        "1,u,v\n"
        "2,v,w,1.5\n"
        "2.5,u,w,,Scout\n"
        "3,u,v,0.5,Captain\n"
        "4,v,w\n"
        "4.5,u,v\n"
    )
    print("toy_2slices.csv, toy_events.csv written")


if __name__ == "__main__":
    OUT.mkdir(exist_ok=True)
    friendship_waves()
    team_mentions()
    toys()
