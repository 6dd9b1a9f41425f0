#!/usr/bin/env python3
"""Writes the synthetic 12-play fixture (tracking.csv, events.csv).

Plays are laid out in attacking (right-half) coordinates and every other
one is written mirrored into the left half, so ingestion has to flip it back.
Passer jerseys are chosen so that two players have three passes each and
the rest fewer.
"""
import csv
import math
import random
from pathlib import Path

L, W = 200.0, 85.0
RATE = 30.0
OUT = Path(__file__).resolve().parent

# (offence team, passer jersey, receiver jersey)
PASSERS = [
    ("Home", 7, 19), ("Home", 7, 22), ("Home", 7, 11),
    ("Away", 4, 9), ("Away", 4, 16), ("Away", 4, 27),
    ("Home", 19, 7), ("Home", 19, 22),
    ("Away", 9, 4), ("Away", 9, 16),
    ("Home", 22, 11),
    ("Away", 16, 27),
]
SKATERS = {"Home": [7, 11, 19, 22, 44], "Away": [4, 9, 16, 27, 33]}
GOALIE = {"Home": 30, "Away": 1}


def fmt(v):
    return f"{v:.3f}"


def main():
    rng = random.Random(20221)
    tracking, events = [], []
    frame_id = 1000
    for k, (team, passer, receiver) in enumerate(PASSERS):
        period = 1 + k // 6
        clock = 60.0 + 75.0 * (k % 6) + rng.uniform(0.0, 5.0)
        other = "Away" if team == "Home" else "Home"
        left = k % 2 == 1

        # attacking-frame layout
        pos, vel = {}, {}
        passer_xy = (rng.uniform(135, 175), rng.choice([rng.uniform(8, 25), rng.uniform(60, 77)]))
        for j in SKATERS[team]:
            if j == passer:
                p = passer_xy
            elif j == receiver:
                p = (rng.uniform(160, 185), rng.uniform(22, 63))
            else:
                p = (rng.uniform(130, 185), rng.uniform(6, 79))
            pos[(team, j)] = p
        for j in SKATERS[other][:4]:
            pos[(other, j)] = (rng.uniform(150, 185), rng.uniform(12, 73))
        pos[(other, GOALIE[other])] = (rng.uniform(185, 187), rng.uniform(40, 45))
        for key in pos:
            speed = rng.uniform(0, 18) if key[1] != GOALIE[other] else rng.uniform(0, 2)
            ang = rng.uniform(-math.pi, math.pi)
            vel[key] = (speed * math.cos(ang), speed * math.sin(ang))

        def raw(p):
            return (L - p[0], W - p[1]) if left else p

        for step, fid in ((1, frame_id), (0, frame_id + 1)):
            t = clock - step / RATE
            for (tm, j), p in pos.items():
                v = vel[(tm, j)]
                x, y = raw((p[0] - v[0] * step / RATE, p[1] - v[1] * step / RATE))
                goalie = "1" if j == GOALIE.get(tm) else "0"
                tracking.append([period, fid, fmt(t), tm, j, fmt(x), fmt(y), goalie])
        frame_id += 10

        src = raw(passer_xy)
        dst = raw(pos[(team, receiver)])
        dist = math.dist(src, dst)
        travel = dist / rng.uniform(45, 80)
        events.append([period, fmt(clock), team, passer, "Play", fmt(src[0]), fmt(src[1]), "Direct",
                       receiver, fmt(dst[0]), fmt(dst[1]), fmt(clock + travel)])

    with open(OUT / "tracking.csv", "w", newline="") as f:
        w = csv.writer(f, lineterminator="\n")
        w.writerow(["period", "frame_id", "clock", "team", "jersey", "x", "y", "goalie"])
        w.writerows(tracking)
    with open(OUT / "events.csv", "w", newline="") as f:
        w = csv.writer(f, lineterminator="\n")
        w.writerow(["period", "clock", "team", "player", "event", "x", "y", "detail_1",
                    "player_2", "x_2", "y_2", "clock_2"])
        w.writerows(events)


if __name__ == "__main__":
    main()
