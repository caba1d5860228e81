#!/usr/bin/env python3
"""Independent reference for the SplitMix64 stream and the backtracker.

Regenerates the frozen vectors under tests/golden/. Shares no code with the
C++ library; run it by hand when a golden file needs to be re-derived.
"""
import sys
from collections import deque
from pathlib import Path

MASK = (1 << 64) - 1
GAMMA = 0x9E3779B97F4A7C15
N, E, S, W = 1, 2, 4, 8
DELTA = {N: (0, -1), E: (1, 0), S: (0, 1), W: (-1, 0)}
OPP = {N: S, S: N, E: W, W: E}


def mix(z):
    z ^= z >> 30
    z = (z * 0xBF58476D1CE4E5B9) & MASK
    z ^= z >> 27
    z = (z * 0x94D049BB133111EB) & MASK
    z ^= z >> 31
    return z


class Rng:
    def __init__(self, state):
        self.state = state & MASK

    def next(self):
        self.state = (self.state + GAMMA) & MASK
        return mix(self.state)

    def below(self, k):
        return self.next() % k


def generate(width, height, seed):
    rng = Rng(seed)
    walls = [[N | E | S | W for _ in range(width)] for _ in range(height)]
    seen = [[False] * width for _ in range(height)]
    seen[0][0] = True
    stack = [(0, 0)]
    while stack:
        c, r = stack[-1]
        options = []
        for d in (N, E, S, W):
            dc, dr = DELTA[d]
            nc, nr = c + dc, r + dr
            if 0 <= nc < width and 0 <= nr < height and not seen[nr][nc]:
                options.append((d, nc, nr))
        if not options:
            stack.pop()
            continue
        d, nc, nr = options[rng.below(len(options))]
        walls[r][c] &= ~d
        walls[nr][nc] &= ~OPP[d]
        seen[nr][nc] = True
        stack.append((nc, nr))

    dist = bfs(walls, width, height, (0, 0))
    best = None
    for r in range(height):
        for c in range(width):
            if r in (0, height - 1) or c in (0, width - 1):
                if best is None or dist[r][c] > dist[best[1]][best[0]]:
                    best = (c, r)
    ec, er = best
    for d in (N, E, S, W):
        if (d == N and er == 0) or (d == E and ec == width - 1) or \
           (d == S and er == height - 1) or (d == W and ec == 0):
            side = d
            break
    walls[er][ec] &= ~side
    monster = None
    for r in range(height):
        for c in range(width):
            if monster is None or dist[r][c] > dist[monster[1]][monster[0]]:
                monster = (c, r)
    return walls, (ec, er, side), monster


def bfs(walls, width, height, start):
    dist = [[-1] * width for _ in range(height)]
    dist[start[1]][start[0]] = 0
    q = deque([start])
    while q:
        c, r = q.popleft()
        for d in (N, E, S, W):
            if walls[r][c] & d:
                continue
            dc, dr = DELTA[d]
            nc, nr = c + dc, r + dr
            if 0 <= nc < width and 0 <= nr < height and dist[nr][nc] < 0:
                dist[nr][nc] = dist[r][c] + 1
                q.append((nc, nr))
    return dist


SIDE = {N: "N", E: "E", S: "S", W: "W"}


def maze_text(width, height, seed):
    walls, (ec, er, side), (mc, mr) = generate(width, height, seed)
    lines = [f"size {width} {height}", f"seed {seed}",
             f"exit {ec} {er} {SIDE[side]}", "hero 0 0", f"monster {mc} {mr}"]
    for row in walls:
        lines.append(" ".join(f"{v:x}" for v in row))
    return "\n".join(lines) + "\n"


def main(out_dir):
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    (out / "maze_3x3_seed42.txt").write_text(maze_text(3, 3, 42))
    level1_seed = Rng(42 ^ 1).next()
    (out / "maze_level1_seed42.txt").write_text(maze_text(13, 9, level1_seed))

    r0 = Rng(0)
    s1, s2 = Rng(1), Rng(2)
    a = [s1.next() for _ in range(10000)]
    b = [s2.next() for _ in range(10000)]
    lines = [f"seed0_first {r0.next():016x}",
             f"seed1_first {a[0]:016x}", f"seed2_first {b[0]:016x}",
             f"seed1_10000th {a[-1]:016x}", f"seed2_10000th {b[-1]:016x}",
             f"level1_seed_for_42 {level1_seed:016x}"]
    # random_walk brain at a 3-way junction: options filtered N,E,S,W minus
    # the reverse of the last heading; one draw from Rng(2024).
    for seed in (2024, 7, 99):
        options = ["N", "E", "S"]  # junction open N,E,S,W arriving eastward: W excluded
        lines.append(f"random_walk_junction_seed{seed} {options[Rng(seed).below(3)]}")
    counts = [0] * 4
    rb = Rng(123)
    for _ in range(100000):
        counts[rb.below(4)] += 1
    lines.append("below4_counts_seed123 " + " ".join(map(str, counts)))
    (out / "rng_vectors.txt").write_text("\n".join(lines) + "\n")


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else Path(__file__).resolve().parent.parent / "golden")
