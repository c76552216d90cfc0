"""Direct product oracle for q_k = prod_{j != k} rho(z_j, z_k) on the radial
sequence z_n = 1 - 2^{-n}, n = 1, 2, ... (0-based index i <-> n = i + 1).

For real 0 < x, y < 1:  rho = |x - y| / (1 - x y).  Frozen into
tests/unit/test_thinness.cpp.
"""
import mpmath as mp

mp.mp.dps = 60


def q(k, prefix):
    zk = 1 - mp.mpf(2) ** -(k + 1)
    p = mp.mpf(1)
    for j in range(prefix):
        if j == k:
            continue
        zj = 1 - mp.mpf(2) ** -(j + 1)
        p *= abs(zj - zk) / (1 - zj * zk)
    return p


if __name__ == "__main__":
    for k, prefix in [(20, 60), (0, 60), (59, 60)]:
        print(k, prefix, mp.nstr(q(k, prefix), 17))
