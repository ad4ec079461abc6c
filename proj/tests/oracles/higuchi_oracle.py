"""Direct-loop reference values for the Higuchi tests.

Everything here follows the textbook definitions with plain Python loops so
it shares no code path with the C++ implementation. Run it to regenerate the
constants frozen in tests/test_higuchi.cpp.
"""
import math


def curve_lengths(x, kmax):
    n = len(x)
    out = []
    for k in range(1, kmax + 1):
        total = 0.0
        for m in range(1, k + 1):
            steps = (n - m) // k
            if steps == 0:
                continue
            v = sum(abs(x[m - 1 + i * k] - x[m - 1 + (i - 1) * k]) for i in range(1, steps + 1))
            total += v * (n - 1) / (steps * k) / k
        out.append(total / k)
    return out


def surface_areas(z, kmax):
    n = len(z)
    out = []
    for k in range(1, kmax + 1):
        total = 0.0
        for r0 in range(k):
            rows = (n - 1 - r0) // k
            for c0 in range(k):
                cols = (n - 1 - c0) // k
                if rows == 0 or cols == 0:
                    continue
                v = 0.0
                for i in range(1, rows + 1):
                    for j in range(1, cols + 1):
                        a = z[r0 + (i - 1) * k][c0 + (j - 1) * k]
                        b = z[r0 + (i - 1) * k][c0 + j * k]
                        c = z[r0 + i * k][c0 + (j - 1) * k]
                        d = z[r0 + i * k][c0 + j * k]
                        v += abs(b - a) + abs(d - b) + abs(d - c) + abs(c - a)
                total += v * (n - 1) ** 2 / (rows * k * cols * k) / k
        out.append(total / (2 * k * k))
    return out


def slope(points):
    mx = sum(p[0] for p in points) / len(points)
    my = sum(p[1] for p in points) / len(points)
    sxx = sum((p[0] - mx) ** 2 for p in points)
    sxy = sum((p[0] - mx) * (p[1] - my) for p in points)
    return sxy / sxx


def hfd1(x, kmax):
    L = curve_lengths(x, kmax)
    pts = [(math.log(1 / k), math.log(l)) for k, l in zip(range(1, kmax + 1), L) if l != 0]
    return 1.0 if len(pts) < 2 else slope(pts)


def hfd2(z, kmax):
    A = surface_areas(z, kmax)
    pts = [(math.log(1 / k ** 2), math.log(a)) for k, a in zip(range(1, kmax + 1), A) if a != 0]
    return 2.0 if len(pts) < 2 else 1 + slope(pts)


def lcg(seed):
    state = seed
    while True:
        state = (6364136223846793005 * state + 1442695040888963407) % 2 ** 64
        yield (state >> 11) / 2 ** 53


if __name__ == "__main__":
    print("line N=1001 kmax=50:", repr(hfd1([float(i) for i in range(1, 1002)], 50)))
    alt = [float(i % 2) for i in range(11)]
    print("alternating N=11 L(1):", repr(curve_lengths(alt, 5)[0]))
    print("alternating N=11 L:", [repr(v) for v in curve_lengths(alt, 5)])
    g = lcg(7)
    noise = [next(g) for _ in range(64)]
    print("lcg(7) N=64 L:", [repr(v) for v in curve_lengths(noise, 8)])
    print("lcg(7) N=64 hfd kmax=8:", repr(hfd1(noise, 8)))
    plane = [[float(i + j) for j in range(257)] for i in range(257)]
    print("plane N=257 kmax=60:", repr(hfd2(plane, 60)))
    board = [[float((i + j) % 2) for j in range(8)] for i in range(8)]
    print("checkerboard 8x8 A:", [repr(v) for v in surface_areas(board, 4)])
    g = lcg(11)
    rough = [[next(g) for _ in range(16)] for _ in range(16)]
    print("lcg(11) 16x16 A:", [repr(v) for v in surface_areas(rough, 8)])
    print("lcg(11) 16x16 hfd kmax=8:", repr(hfd2(rough, 8)))
    print("line N=10000 kmax=10:", repr(hfd1([float(i) for i in range(10000)], 10)))
